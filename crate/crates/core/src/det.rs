//! Determinants over a commutative ring: the permutation-sum definition,
//! cofactor expansion along a row or column, a recursive evaluator, the
//! cofactor matrix and classical adjoint, and an executable reading of the
//! uniqueness argument for alternating n-linear functionals.
//!
//! The uniqueness harness works over k-tuples of column indices. For a
//! functional `f` that is linear in each row and vanishes on adjacent equal
//! rows, the sum of [`eval_tuple`] over all k-tuples is independent of k;
//! at `k = 0` it is `f(a)` and at `k = n` it collapses to
//! `det(a) * f(identity)`, which forces `f(a) = det(a) * f(identity)`.
//! [`check_uniqueness`] evaluates every level and reports where the chain
//! of equalities holds, treating the constraints on `f` as sampled
//! assumptions rather than facts.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::{identity, unit_vector, Matrix};
use crate::perm::{enumerate_with_cap, Parity, Permutation, DEFAULT_CAP};
use crate::ring::{Element, Ring};
use crate::vector::{sample_vector, vec_add, vec_scale};

/// One term of the permutation sum: the unsigned product of one entry per
/// row, the permutation that selected the columns, and whether the
/// odd-parity negation applies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedTerm {
    pub permutation: Permutation,
    pub product: Element,
    pub sign_applied: bool,
}

impl SignedTerm {
    /// The term of `a` selected by `p`: product of `entry(i, p[i])` over
    /// all rows `i`.
    pub fn of(a: &Matrix, p: &Permutation) -> Result<SignedTerm> {
        let n = a.require_square()?;
        if p.degree() != n {
            return Err(Error::DegreeMismatch {
                left: n,
                right: p.degree(),
            });
        }
        let ring = a.ring();
        let mut product = ring.one();
        for (i, &j) in p.images().iter().enumerate() {
            product = ring.mul(&product, a.entry(i, j)?);
        }
        Ok(SignedTerm {
            permutation: p.clone(),
            product,
            sign_applied: p.parity() == Parity::Odd,
        })
    }

    /// The signed value contributed to the determinant.
    pub fn value(&self, ring: &Ring) -> Element {
        if self.sign_applied {
            ring.neg(&self.product)
        } else {
            self.product.clone()
        }
    }
}

/// The signed product term for one permutation.
pub fn det_term(a: &Matrix, p: &Permutation) -> Result<Element> {
    let term = SignedTerm::of(a, p)?;
    Ok(term.value(a.ring()))
}

/// The determinant as the signed sum over all permutations. Enumerating
/// `n!` permutations is guarded by [`DEFAULT_CAP`]; see [`det_with_cap`]
/// and, for large `n`, [`det_rec`].
pub fn det(a: &Matrix) -> Result<Element> {
    det_with_cap(a, DEFAULT_CAP)
}

/// As [`det`], with an explicit enumeration cap.
pub fn det_with_cap(a: &Matrix, cap: usize) -> Result<Element> {
    let n = a.require_square()?;
    let ring = a.ring();
    let mut acc = ring.zero();
    for p in enumerate_with_cap(n, cap)? {
        acc = ring.add(&acc, &det_term(a, &p)?);
    }
    Ok(acc)
}

/// The `(i, j)` cofactor: the minor's determinant, negated when `i + j`
/// is odd. Negation goes through the ring's `neg`; there is no subtraction
/// primitive to lean on. The minor determinant is computed recursively,
/// which agrees with the permutation sum everywhere but is not subject to
/// its enumeration cap.
pub fn cofactor(a: &Matrix, i: usize, j: usize) -> Result<Element> {
    let n = a.require_square()?;
    if n < 2 {
        return Err(Error::TooSmall {
            what: "cofactor",
            min: 2,
            got: n,
        });
    }
    for index in [i, j] {
        if index >= n {
            return Err(Error::IndexOutOfRange { index, size: n });
        }
    }
    let d = det_rec(&a.minor(i, j)?)?;
    Ok(if (i + j).is_multiple_of(2) {
        d
    } else {
        a.ring().neg(&d)
    })
}

/// Cofactor expansion along column `j`: sum of `entry(i, j) * cofactor(i, j)`.
pub fn expand_col(a: &Matrix, j: usize) -> Result<Element> {
    let n = a.require_square()?;
    if n < 2 {
        return Err(Error::TooSmall {
            what: "column expansion",
            min: 2,
            got: n,
        });
    }
    if j >= n {
        return Err(Error::IndexOutOfRange { index: j, size: n });
    }
    let ring = a.ring();
    let mut acc = ring.zero();
    for i in 0..n {
        acc = ring.add(&acc, &ring.mul(a.entry(i, j)?, &cofactor(a, i, j)?));
    }
    Ok(acc)
}

/// Cofactor expansion along row `i`.
pub fn expand_row(a: &Matrix, i: usize) -> Result<Element> {
    let n = a.require_square()?;
    if n < 2 {
        return Err(Error::TooSmall {
            what: "row expansion",
            min: 2,
            got: n,
        });
    }
    if i >= n {
        return Err(Error::IndexOutOfRange { index: i, size: n });
    }
    let ring = a.ring();
    let mut acc = ring.zero();
    for j in 0..n {
        acc = ring.add(&acc, &ring.mul(a.entry(i, j)?, &cofactor(a, i, j)?));
    }
    Ok(acc)
}

/// Recursive determinant: expansion along row 0 all the way down, with the
/// 1x1 base case `entry(0, 0)`. Extensionally equal to [`det`] but free of
/// the factorial enumeration, so it serves as the default evaluator.
pub fn det_rec(a: &Matrix) -> Result<Element> {
    let n = a.require_square()?;
    if n == 1 {
        return Ok(a.entry(0, 0)?.clone());
    }
    let ring = a.ring();
    let mut acc = ring.zero();
    for j in 0..n {
        let term = ring.mul(a.entry(0, j)?, &det_rec(&a.minor(0, j)?)?);
        let signed = if j.is_multiple_of(2) {
            term
        } else {
            ring.neg(&term)
        };
        acc = ring.add(&acc, &signed);
    }
    Ok(acc)
}

/// The matrix of cofactors: entry `(i, j)` is `cofactor(a, i, j)`.
pub fn cofactor_matrix(a: &Matrix) -> Result<Matrix> {
    let n = a.require_square()?;
    if n < 2 {
        return Err(Error::TooSmall {
            what: "cofactor matrix",
            min: 2,
            got: n,
        });
    }
    let rows = (0..n)
        .map(|i| (0..n).map(|j| cofactor(a, i, j)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(a.ring().clone(), rows)
}

/// The classical adjoint (adjugate): the transpose of the cofactor matrix.
/// Satisfies `a * adjoint(a) = det(a) * identity`.
pub fn adjoint(a: &Matrix) -> Result<Matrix> {
    Ok(cofactor_matrix(a)?.transpose())
}

/// A sequence of column indices below `n`, used to index the uniqueness
/// sums. `k` tuples of length up to `n` select which leading rows get
/// replaced by unit vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tuple {
    indices: Vec<usize>,
}

impl Tuple {
    /// Validates that every index is below `n`.
    pub fn new(indices: Vec<usize>, n: usize) -> Result<Self> {
        for &index in &indices {
            if index >= n {
                return Err(Error::IndexOutOfRange { index, size: n });
            }
        }
        Ok(Tuple { indices })
    }

    pub fn empty() -> Self {
        Tuple {
            indices: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }
}

/// All `n^k` k-tuples of indices below `n`, built by extending the empty
/// tuple one position at a time. Order: existing tuples stay in order,
/// each extended by `0, 1, .., n-1` in turn.
pub fn all_tuples(k: usize, n: usize) -> Result<Vec<Tuple>> {
    all_tuples_with_cap(k, n, DEFAULT_CAP)
}

/// As [`all_tuples`], with an explicit cap on `n`.
pub fn all_tuples_with_cap(k: usize, n: usize, cap: usize) -> Result<Vec<Tuple>> {
    if k > n {
        return Err(Error::TupleTooLong { k, n });
    }
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let mut tuples = vec![Tuple::empty()];
    for _ in 0..k {
        tuples = extend_tuples(&tuples, n);
    }
    Ok(tuples)
}

fn extend_tuples(tuples: &[Tuple], n: usize) -> Vec<Tuple> {
    let mut out = Vec::with_capacity(tuples.len() * n);
    for t in tuples {
        for i in 0..n {
            let mut indices = t.indices.clone();
            indices.push(i);
            out.push(Tuple { indices });
        }
    }
    out
}

type EvalFn = Box<dyn Fn(&Matrix) -> Result<Element>>;

/// A determinant-like functional: any total map from n x n matrices to the
/// ring that declares itself linear in each row and zero on adjacent equal
/// rows. The uniqueness argument concludes `f(a) = det(a) * f(identity)`
/// for every such `f`; the declared constraints are spot-checked on random
/// samples by [`check_uniqueness`], never assumed.
pub struct DeterminantFunctional {
    label: String,
    eval: EvalFn,
}

impl DeterminantFunctional {
    pub fn new(
        label: impl Into<String>,
        eval: impl Fn(&Matrix) -> Result<Element> + 'static,
    ) -> Self {
        DeterminantFunctional {
            label: label.into(),
            eval: Box::new(eval),
        }
    }

    /// The determinant itself, the canonical instance.
    pub fn determinant() -> Self {
        DeterminantFunctional::new("det", det_rec)
    }

    /// `a` maps to `det(a * b)` for a fixed square `b`. Running the harness
    /// on this functional yields multiplicativity of the determinant.
    pub fn product_with(b: Matrix) -> Self {
        let label = "det(a*b)";
        DeterminantFunctional::new(label, move |a: &Matrix| det_rec(&a.multiply(&b)?))
    }

    /// `a` maps to its cofactor expansion along column `j`. Running the
    /// harness on this functional shows the expansion computes the
    /// determinant.
    pub fn column_expansion(j: usize) -> Self {
        DeterminantFunctional::new(format!("expand-col {j}"), move |a: &Matrix| {
            expand_col(a, j)
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn eval(&self, a: &Matrix) -> Result<Element> {
        (self.eval)(a)
    }
}

impl std::fmt::Debug for DeterminantFunctional {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("DeterminantFunctional")
            .field("label", &self.label)
            .finish_non_exhaustive()
    }
}

/// The k-tuple summand: the product of the entries `a[j][x[j]]` for
/// `j < k`, times `f` of the matrix whose first `k` rows are the unit
/// vectors selected by `x` and whose remaining rows are rows `k..n` of `a`.
pub fn eval_tuple(
    x: &Tuple,
    a: &Matrix,
    f: &DeterminantFunctional,
) -> Result<Element> {
    let n = a.require_square()?;
    let k = x.len();
    if k > n {
        return Err(Error::TupleTooLong { k, n });
    }
    let ring = a.ring();
    let mut coefficient = ring.one();
    for (row, &col) in x.indices().iter().enumerate() {
        coefficient = ring.mul(&coefficient, a.entry(row, col)?);
    }
    let mut rows = Vec::with_capacity(n);
    for &col in x.indices() {
        rows.push(unit_vector(ring, n, col)?);
    }
    for i in k..n {
        rows.push(a.row(i)?.clone());
    }
    let argument = Matrix::from_rows(ring.clone(), rows)?;
    Ok(ring.mul(&coefficient, &f.eval(&argument)?))
}

/// Ring sum of [`eval_tuple`] over a tuple list.
pub fn sum_tuples(
    tuples: &[Tuple],
    a: &Matrix,
    f: &DeterminantFunctional,
) -> Result<Element> {
    let ring = a.ring();
    let mut acc = ring.zero();
    for x in tuples {
        acc = ring.add(&acc, &eval_tuple(x, a, f)?);
    }
    Ok(acc)
}

/// Knobs for [`check_uniqueness_with`].
#[derive(Clone, Debug)]
pub struct CheckOptions {
    /// Enumeration cap for the reference determinant and tuple generation.
    pub cap: usize,
    /// Also spot-check the full alternating property (equal rows in any two
    /// positions), which follows from the adjacent-rows constraint but is
    /// worth observing independently. On by default.
    pub check_alternating: bool,
    /// Random instances drawn per constraint spot-check.
    pub samples: usize,
    /// Seed for constraint sampling, so verdicts are reproducible.
    pub seed: u64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            cap: DEFAULT_CAP,
            check_alternating: true,
            samples: 8,
            seed: 17,
        }
    }
}

/// One level of the tuple sum: the value over all k-tuples and whether it
/// matches the previous level. Level 0 trivially matches itself.
#[derive(Clone, Debug)]
pub struct LevelSum {
    pub k: usize,
    pub value: Element,
    pub equals_previous: bool,
}

/// Verdict of the uniqueness harness for one functional on one matrix.
#[derive(Clone, Debug)]
pub struct UniquenessReport {
    pub functional: String,
    pub n: usize,
    /// Tuple sums for `k = 0..=n`. All values coincide when the functional
    /// satisfies its declared constraints.
    pub levels: Vec<LevelSum>,
    /// Sampled verdicts for the declared constraints.
    pub n_linear_ok: bool,
    pub adjacent_rows_ok: bool,
    /// Sampled verdict for the derived full alternating property, when
    /// requested.
    pub alternating_ok: Option<bool>,
    pub f_of_a: Element,
    pub det_of_a: Element,
    pub f_of_identity: Element,
    /// Whether `f(a) = det(a) * f(identity)` held exactly.
    pub identity_holds: bool,
}

impl UniquenessReport {
    /// True when every level matched, the final identity held, and no
    /// sampled constraint was violated.
    pub fn passed(&self) -> bool {
        self.levels.iter().all(|level| level.equals_previous)
            && self.identity_holds
            && self.n_linear_ok
            && self.adjacent_rows_ok
            && self.alternating_ok.unwrap_or(true)
    }
}

/// Runs the uniqueness harness with default options.
pub fn check_uniqueness(f: &DeterminantFunctional, a: &Matrix) -> Result<UniquenessReport> {
    check_uniqueness_with(f, a, &CheckOptions::default())
}

/// Evaluates the tuple sum at every level `k = 0..=n`, the two sides of
/// the identity `f(a) = det(a) * f(identity)`, and sampled spot-checks of
/// the functional's declared constraints. Constraint violations show up in
/// the report, not as errors.
pub fn check_uniqueness_with(
    f: &DeterminantFunctional,
    a: &Matrix,
    options: &CheckOptions,
) -> Result<UniquenessReport> {
    let n = a.require_square()?;
    if n > options.cap {
        return Err(Error::CapExceeded { n, cap: options.cap });
    }
    let ring = a.ring();

    let mut levels: Vec<LevelSum> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let tuples = all_tuples_with_cap(k, n, options.cap)?;
        let value = sum_tuples(&tuples, a, f)?;
        let equals_previous = levels
            .last()
            .is_none_or(|prev| ring.eq(&prev.value, &value));
        levels.push(LevelSum {
            k,
            value,
            equals_previous,
        });
    }

    let f_of_a = f.eval(a)?;
    let det_of_a = det_with_cap(a, options.cap)?;
    let id = identity(ring, n)?;
    let f_of_identity = f.eval(&id)?;
    let identity_holds = ring.eq(&f_of_a, &ring.mul(&det_of_a, &f_of_identity));

    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);

    let mut n_linear_ok = true;
    for _ in 0..options.samples {
        let base = Matrix::sample(ring, n, n, &mut rng)?;
        let i = rng.random_range(0..n);
        let c = ring.sample(&mut rng);
        let x = sample_vector(ring, n, &mut rng);
        let y = sample_vector(ring, n, &mut rng);
        let combined = vec_add(ring, &vec_scale(ring, &c, &x), &y)?;
        let lhs = f.eval(&base.replace_row(i, combined)?)?;
        let fx = f.eval(&base.replace_row(i, x)?)?;
        let fy = f.eval(&base.replace_row(i, y)?)?;
        let rhs = ring.add(&ring.mul(&c, &fx), &fy);
        if !ring.eq(&lhs, &rhs) {
            n_linear_ok = false;
        }
    }

    let mut adjacent_rows_ok = true;
    if n >= 2 {
        for _ in 0..options.samples {
            let base = Matrix::sample(ring, n, n, &mut rng)?;
            let i = rng.random_range(0..n - 1);
            let doubled = base.replace_row(i + 1, base.row(i)?.clone())?;
            if !ring.is_zero(&f.eval(&doubled)?) {
                adjacent_rows_ok = false;
            }
        }
    }

    let alternating_ok = if !options.check_alternating {
        None
    } else if n < 2 {
        Some(true)
    } else {
        let mut ok = true;
        for _ in 0..options.samples {
            let base = Matrix::sample(ring, n, n, &mut rng)?;
            let i = rng.random_range(0..n);
            let j = (i + 1 + rng.random_range(0..n - 1)) % n;
            let doubled = base.replace_row(j, base.row(i)?.clone())?;
            if !ring.is_zero(&f.eval(&doubled)?) {
                ok = false;
            }
        }
        Some(ok)
    };

    Ok(UniquenessReport {
        functional: f.label().to_string(),
        n,
        levels,
        n_linear_ok,
        adjacent_rows_ok,
        alternating_ok,
        f_of_a,
        det_of_a,
        f_of_identity,
        identity_holds,
    })
}

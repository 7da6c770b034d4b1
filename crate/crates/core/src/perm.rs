//! Permutations of `{0, .., n-1}` as image sequences, with composition,
//! inversion, parity, transposition decomposition, and the lexicographic
//! enumeration that drives the sum-over-permutations determinant.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest `n` for which [`enumerate`] will produce all `n!` permutations
/// unless the caller raises the cap explicitly. `8! = 40320` terms is still
/// cheap; each further increment costs another factor of `n`.
pub const DEFAULT_CAP: usize = 8;

/// A bijection on `{0, .., n-1}`, stored as its image sequence:
/// `images[i]` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

/// Parity of a permutation under the usual sign homomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// The sign, `+1` for even and `-1` for odd.
    pub fn sign(self) -> i64 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }

    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => f.write_str("even"),
            Parity::Odd => f.write_str("odd"),
        }
    }
}

impl Permutation {
    /// The identity on `n` points.
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from its image sequence, rejecting anything
    /// that is not a bijection on `{0, .., len-1}`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img >= n || seen[img] {
                return Err(Error::InvalidPermutation(images));
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    /// The transposition of `i` and `j` on `n` points. The two indices must
    /// be distinct and in range.
    pub fn transposition(i: usize, j: usize, n: usize) -> Result<Self> {
        for idx in [i, j] {
            if idx >= n {
                return Err(Error::IndexOutOfRange { index: idx, size: n });
            }
        }
        if i == j {
            return Err(Error::EqualTranspositionIndices(i));
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, j);
        Ok(Permutation { images })
    }

    /// The number of points acted on.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// Functional composition: `self` after `other`, so
    /// `compose(p, q).apply(l) = q.apply(p.apply(l))` reads the other way
    /// around while pointwise `(p ∘ q)(i) = p(q(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        })
    }

    /// The inverse permutation: `invert(p)[p[j]] = j`.
    pub fn invert(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (j, &img) in self.images.iter().enumerate() {
            inv[img] = j;
        }
        Permutation { images: inv }
    }

    /// Reorders `list` so that position `i` receives `list[p[i]]`.
    pub fn apply<T: Clone>(&self, list: &[T]) -> Result<Vec<T>> {
        if list.len() != self.degree() {
            return Err(Error::LengthMismatch {
                left: list.len(),
                right: self.degree(),
            });
        }
        Ok(self.images.iter().map(|&i| list[i].clone()).collect())
    }

    /// Parity by inversion count: the number of pairs `i < j` with
    /// `p[i] > p[j]`, reduced mod 2. Quadratic, which is fine at the sizes
    /// the enumeration cap allows.
    pub fn parity(&self) -> Parity {
        let mut inversions = 0usize;
        for i in 0..self.images.len() {
            for j in (i + 1)..self.images.len() {
                if self.images[i] > self.images[j] {
                    inversions += 1;
                }
            }
        }
        if inversions.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_even(&self) -> bool {
        self.parity() == Parity::Even
    }

    /// Writes the permutation as a product of transpositions, one cycle at
    /// a time: the cycle `(c0 c1 .. cm)` becomes
    /// `(c0 cm) (c0 cm-1) .. (c0 c1)` so that composing the returned list
    /// left to right recovers `self`. The identity decomposes as the empty
    /// product, and the list length has the same parity as the permutation.
    pub fn decompose(&self) -> Vec<Permutation> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.images[cur];
            }
            for &c in cycle.iter().skip(1).rev() {
                out.push(
                    Permutation::transposition(cycle[0], c, n)
                        .expect("cycle elements are distinct and in range"),
                );
            }
        }
        out
    }
}

/// All `n!` permutations of `n` points in lexicographic order of their
/// image sequences, identity first. Requires `1 <= n`; refuses `n` beyond
/// [`DEFAULT_CAP`] (use [`enumerate_with_cap`] to go larger deliberately).
pub fn enumerate(n: usize) -> Result<Vec<Permutation>> {
    enumerate_with_cap(n, DEFAULT_CAP)
}

/// As [`enumerate`], with an explicit cap on `n`.
pub fn enumerate_with_cap(n: usize, cap: usize) -> Result<Vec<Permutation>> {
    if n == 0 {
        return Err(Error::MustBePositive {
            what: "permutation degree",
        });
    }
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let mut out = Vec::new();
    let mut images: Vec<usize> = (0..n).collect();
    loop {
        out.push(Permutation {
            images: images.clone(),
        });
        if !next_lexicographic(&mut images) {
            return Ok(out);
        }
    }
}

/// Steps `images` to its lexicographic successor in place; returns false
/// after the last (descending) arrangement.
fn next_lexicographic(images: &mut [usize]) -> bool {
    if images.len() < 2 {
        return false;
    }
    let mut i = images.len() - 1;
    while i > 0 && images[i - 1] >= images[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = images.len() - 1;
    while images[j] <= images[i - 1] {
        j -= 1;
    }
    images.swap(i - 1, j);
    images[i..].reverse();
    true
}

impl fmt::Display for Permutation {
    /// Comma-separated images, e.g. `1,2,0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, img) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{img}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Permutation::from_images(Vec::new());
        }
        let images = trimmed
            .split(',')
            .map(|part| part.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidPermutation(Vec::new()))?;
        Permutation::from_images(images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(images: &[usize]) -> Permutation {
        Permutation::from_images(images.to_vec()).unwrap()
    }

    #[test]
    fn from_images_validates() {
        assert!(Permutation::from_images(vec![1, 2, 0]).is_ok());
        assert!(matches!(
            Permutation::from_images(vec![0, 0]),
            Err(Error::InvalidPermutation(_))
        ));
        assert!(matches!(
            Permutation::from_images(vec![0, 2]),
            Err(Error::InvalidPermutation(_))
        ));
    }

    #[test]
    fn compose_known_value() {
        let p = perm(&[1, 2, 0]);
        assert_eq!(p.compose(&p).unwrap(), perm(&[2, 0, 1]));
        let id = Permutation::identity(3);
        assert_eq!(p.compose(&id).unwrap(), p);
        assert_eq!(id.compose(&p).unwrap(), p);
    }

    #[test]
    fn compose_agrees_with_apply() {
        let p = perm(&[2, 0, 3, 1]);
        let q = perm(&[1, 3, 0, 2]);
        let l = vec!["a", "b", "c", "d"];
        let via_two_applies = q.apply(&p.apply(&l).unwrap()).unwrap();
        let via_compose = p.compose(&q).unwrap().apply(&l).unwrap();
        assert_eq!(via_two_applies, via_compose);
    }

    #[test]
    fn invert_known_value() {
        let p = perm(&[1, 2, 0]);
        assert_eq!(p.invert(), perm(&[2, 0, 1]));
        assert!(p.compose(&p.invert()).unwrap().is_identity());
        assert!(p.invert().compose(&p).unwrap().is_identity());
    }

    #[test]
    fn parity_known_values() {
        assert_eq!(Permutation::identity(4).parity(), Parity::Even);
        assert_eq!(perm(&[1, 0, 2]).parity(), Parity::Odd);
        assert_eq!(perm(&[1, 2, 0]).parity(), Parity::Even);
        assert_eq!(perm(&[2, 1, 0]).parity(), Parity::Odd);
        assert_eq!(Parity::Even.sign(), 1);
        assert_eq!(Parity::Odd.sign(), -1);
    }

    #[test]
    fn transposition_shape_and_errors() {
        let t = Permutation::transposition(0, 2, 3).unwrap();
        assert_eq!(t, perm(&[2, 1, 0]));
        assert_eq!(t.parity(), Parity::Odd);
        assert_eq!(
            Permutation::transposition(1, 1, 3),
            Err(Error::EqualTranspositionIndices(1))
        );
        assert!(matches!(
            Permutation::transposition(0, 5, 3),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn enumerate_small() {
        let perms = enumerate(3).unwrap();
        assert_eq!(perms.len(), 6);
        assert!(perms[0].is_identity());
        let images: Vec<&[usize]> = perms.iter().map(|p| p.images()).collect();
        assert_eq!(
            images,
            vec![
                &[0, 1, 2][..],
                &[0, 2, 1],
                &[1, 0, 2],
                &[1, 2, 0],
                &[2, 0, 1],
                &[2, 1, 0],
            ]
        );
    }

    #[test]
    fn enumerate_degenerate_sizes() {
        assert!(matches!(enumerate(0), Err(Error::MustBePositive { .. })));
        let singleton = enumerate(1).unwrap();
        assert_eq!(singleton.len(), 1);
        assert!(singleton[0].is_identity());
    }

    #[test]
    fn enumerate_respects_cap() {
        assert_eq!(
            enumerate(9).err(),
            Some(Error::CapExceeded { n: 9, cap: 8 })
        );
        assert_eq!(enumerate_with_cap(4, 3).err(), Some(Error::CapExceeded { n: 4, cap: 3 }));
        assert_eq!(enumerate_with_cap(4, 4).unwrap().len(), 24);
    }

    #[test]
    fn decompose_recomposes_and_matches_parity() {
        for p in enumerate(4).unwrap() {
            let ts = p.decompose();
            let recomposed = ts
                .iter()
                .fold(Permutation::identity(4), |acc, t| acc.compose(t).unwrap());
            assert_eq!(recomposed, p);
            let list_parity = if ts.len() % 2 == 0 { Parity::Even } else { Parity::Odd };
            assert_eq!(list_parity, p.parity());
        }
    }

    #[test]
    fn display_round_trips() {
        let p = perm(&[1, 2, 0]);
        assert_eq!(p.to_string(), "1,2,0");
        assert_eq!("1,2,0".parse::<Permutation>().unwrap(), p);
        assert_eq!("1, 2, 0".parse::<Permutation>().unwrap(), p);
        assert!("1,1".parse::<Permutation>().is_err());
        assert!("a,b".parse::<Permutation>().is_err());
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        // A uniform shuffle seeded per case keeps shrinking deterministic.
        proptest::collection::vec(0usize..1_000_000, n).prop_map(move |keys| {
            let mut idx: Vec<usize> = (0..n).collect();
            idx.sort_by_key(|&i| (keys[i], i));
            Permutation::from_images(idx).unwrap()
        })
    }

    proptest! {
        #[test]
        fn parity_is_a_homomorphism(p in arb_perm(5), q in arb_perm(5)) {
            let pq = p.compose(&q).unwrap();
            let expected = if p.parity() == q.parity() { Parity::Even } else { Parity::Odd };
            prop_assert_eq!(pq.parity(), expected);
        }

        #[test]
        fn compose_is_associative(p in arb_perm(5), q in arb_perm(5), r in arb_perm(5)) {
            let left = p.compose(&q).unwrap().compose(&r).unwrap();
            let right = p.compose(&q.compose(&r).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn invert_round_trips(p in arb_perm(6)) {
            prop_assert!(p.compose(&p.invert()).unwrap().is_identity());
            prop_assert_eq!(p.invert().invert(), p);
        }

        #[test]
        fn apply_respects_composition(p in arb_perm(5), q in arb_perm(5), l in proptest::collection::vec(any::<i32>(), 5)) {
            let lhs = q.apply(&p.apply(&l).unwrap()).unwrap();
            let rhs = p.compose(&q).unwrap().apply(&l).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}

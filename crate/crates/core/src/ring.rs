//! Commutative rings with unity and their elements.
//!
//! A [`Ring`] value bundles the operations of one concrete ring: arbitrary
//! precision integers, rationals, residues modulo `m`, or dense univariate
//! polynomials over any of these (nesting is allowed, so `poly over poly
//! over integers` is a valid ring). Elements are kept in a canonical form
//! so that structural equality coincides with ring equality:
//!
//! * rationals are reduced fractions with a positive denominator,
//! * residues are representatives in `[0, m)`,
//! * polynomial coefficient lists carry no trailing zero (the zero
//!   polynomial is the empty list).

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// A commutative ring with unity, identified by its descriptor.
///
/// Descriptors follow the grammar
/// `integers | rationals | zmod <m> | poly over <descriptor>`
/// and round-trip through [`Ring::parse`] and [`fmt::Display`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ring {
    /// Arbitrary-precision integers.
    Integers,
    /// Rational numbers as reduced fractions.
    Rationals,
    /// Integers modulo `m`, with `m >= 2`.
    Zmod(BigUint),
    /// Univariate polynomials over a base ring.
    Poly(Box<Ring>),
}

/// A canonical element of some [`Ring`]. The variant is the ring tag; two
/// elements are ring-equal exactly when they are structurally equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Element {
    Int(BigInt),
    Rat(BigRational),
    Res(BigUint),
    Poly(Vec<Element>),
}

impl Ring {
    pub fn integers() -> Self {
        Ring::Integers
    }

    pub fn rationals() -> Self {
        Ring::Rationals
    }

    /// Residue ring modulo `m`. Rejects `m < 2`, which would collapse
    /// zero and one.
    pub fn zmod(m: impl Into<BigUint>) -> Result<Self> {
        let m = m.into();
        if m < BigUint::from(2u32) {
            return Err(Error::ModulusTooSmall(m.to_string()));
        }
        Ok(Ring::Zmod(m))
    }

    pub fn poly_over(base: Ring) -> Self {
        Ring::Poly(Box::new(base))
    }

    /// Parses a ring descriptor such as `integers`, `zmod 6`, or
    /// `poly over poly over zmod 5`.
    pub fn parse(descriptor: &str) -> Result<Self> {
        let tokens: Vec<&str> = descriptor.split_whitespace().collect();
        Self::parse_tokens(&tokens).ok_or_else(|| match &tokens[..] {
            ["zmod", m] if m.parse::<BigUint>().is_ok() => {
                Error::ModulusTooSmall((*m).to_string())
            }
            _ => Error::UnknownDescriptor(descriptor.trim().to_string()),
        })
    }

    fn parse_tokens(tokens: &[&str]) -> Option<Self> {
        match tokens {
            ["integers"] => Some(Ring::Integers),
            ["rationals"] => Some(Ring::Rationals),
            ["zmod", m] => {
                let m: BigUint = m.parse().ok()?;
                Ring::zmod(m).ok()
            }
            ["poly", "over", rest @ ..] if !rest.is_empty() => {
                Some(Ring::poly_over(Self::parse_tokens(rest)?))
            }
            _ => None,
        }
    }

    /// The additive identity.
    pub fn zero(&self) -> Element {
        match self {
            Ring::Integers => Element::Int(BigInt::zero()),
            Ring::Rationals => Element::Rat(BigRational::zero()),
            Ring::Zmod(_) => Element::Res(BigUint::zero()),
            Ring::Poly(_) => Element::Poly(Vec::new()),
        }
    }

    /// The multiplicative identity.
    pub fn one(&self) -> Element {
        match self {
            Ring::Integers => Element::Int(BigInt::one()),
            Ring::Rationals => Element::Rat(BigRational::one()),
            Ring::Zmod(_) => Element::Res(BigUint::one()),
            Ring::Poly(base) => Element::Poly(vec![base.one()]),
        }
    }

    /// Ring addition.
    ///
    /// # Panics
    /// Panics if either argument is not an element of this ring.
    pub fn add(&self, x: &Element, y: &Element) -> Element {
        match (self, x, y) {
            (Ring::Integers, Element::Int(a), Element::Int(b)) => Element::Int(a + b),
            (Ring::Rationals, Element::Rat(a), Element::Rat(b)) => Element::Rat(a + b),
            (Ring::Zmod(m), Element::Res(a), Element::Res(b)) => Element::Res((a + b) % m),
            (Ring::Poly(base), Element::Poly(a), Element::Poly(b)) => {
                Element::Poly(poly_add(base, a, b))
            }
            _ => self.domain_panic(),
        }
    }

    /// Ring multiplication.
    ///
    /// # Panics
    /// Panics if either argument is not an element of this ring.
    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        match (self, x, y) {
            (Ring::Integers, Element::Int(a), Element::Int(b)) => Element::Int(a * b),
            (Ring::Rationals, Element::Rat(a), Element::Rat(b)) => Element::Rat(a * b),
            (Ring::Zmod(m), Element::Res(a), Element::Res(b)) => Element::Res((a * b) % m),
            (Ring::Poly(base), Element::Poly(a), Element::Poly(b)) => {
                Element::Poly(poly_mul(base, a, b))
            }
            _ => self.domain_panic(),
        }
    }

    /// Additive inverse.
    pub fn neg(&self, x: &Element) -> Element {
        match (self, x) {
            (Ring::Integers, Element::Int(a)) => Element::Int(-a),
            (Ring::Rationals, Element::Rat(a)) => Element::Rat(-a),
            (Ring::Zmod(m), Element::Res(a)) => {
                if a.is_zero() {
                    Element::Res(BigUint::zero())
                } else {
                    Element::Res(m - a)
                }
            }
            (Ring::Poly(base), Element::Poly(a)) => {
                // neg maps nonzero leading coefficients to nonzero, so the
                // result needs no re-trimming.
                Element::Poly(a.iter().map(|c| base.neg(c)).collect())
            }
            _ => self.domain_panic(),
        }
    }

    /// `x - y`, as `x + (-y)`.
    pub fn sub(&self, x: &Element, y: &Element) -> Element {
        self.add(x, &self.neg(y))
    }

    /// Equality of ring elements. Canonical forms make this structural.
    pub fn eq(&self, x: &Element, y: &Element) -> bool {
        x == y
    }

    pub fn is_zero(&self, x: &Element) -> bool {
        self.eq(x, &self.zero())
    }

    pub fn is_one(&self, x: &Element) -> bool {
        self.eq(x, &self.one())
    }

    /// Membership test: the payload has this ring's tag and is in
    /// canonical form.
    pub fn contains(&self, x: &Element) -> bool {
        match (self, x) {
            (Ring::Integers, Element::Int(_)) => true,
            (Ring::Rationals, Element::Rat(r)) => {
                r.denom().is_positive() && r.numer().gcd(r.denom()).is_one()
            }
            (Ring::Zmod(m), Element::Res(v)) => v < m,
            (Ring::Poly(base), Element::Poly(cs)) => {
                cs.iter().all(|c| base.contains(c))
                    && cs.last().is_none_or(|c| !base.is_zero(c))
            }
            _ => false,
        }
    }

    /// The canonical image of a small integer in this ring.
    pub fn from_i64(&self, k: i64) -> Element {
        match self {
            Ring::Integers => Element::Int(BigInt::from(k)),
            Ring::Rationals => Element::Rat(BigRational::from_integer(BigInt::from(k))),
            Ring::Zmod(m) => {
                let m_int = BigInt::from(m.clone());
                let r = BigInt::from(k).mod_floor(&m_int);
                Element::Res(r.to_biguint().expect("mod_floor is nonnegative"))
            }
            Ring::Poly(base) => {
                let c = base.from_i64(k);
                if base.is_zero(&c) {
                    Element::Poly(Vec::new())
                } else {
                    Element::Poly(vec![c])
                }
            }
        }
    }

    /// Parses one element in this ring's entry syntax: signed decimals for
    /// integers, `p/q` or `p` for rationals, decimals (reduced on read) for
    /// residues, and bracketed coefficient lists like `[1,-2,1]` for
    /// polynomials.
    pub fn parse_element(&self, text: &str) -> Result<Element> {
        let trimmed = text.trim();
        let syntax = |reason: &str| Error::ElementSyntax {
            ring: self.to_string(),
            text: trimmed.to_string(),
            reason: reason.to_string(),
        };
        match self {
            Ring::Integers => {
                let v = BigInt::from_str(trimmed).map_err(|_| syntax("invalid integer"))?;
                Ok(Element::Int(v))
            }
            Ring::Rationals => {
                let (num, den) = match trimmed.split_once('/') {
                    Some((p, q)) => (
                        BigInt::from_str(p.trim()).map_err(|_| syntax("invalid numerator"))?,
                        BigInt::from_str(q.trim()).map_err(|_| syntax("invalid denominator"))?,
                    ),
                    None => (
                        BigInt::from_str(trimmed).map_err(|_| syntax("invalid integer"))?,
                        BigInt::one(),
                    ),
                };
                if den.is_zero() {
                    return Err(syntax("zero denominator"));
                }
                Ok(Element::Rat(BigRational::new(num, den)))
            }
            Ring::Zmod(m) => {
                let v = BigInt::from_str(trimmed).map_err(|_| syntax("invalid residue"))?;
                let r = v.mod_floor(&BigInt::from(m.clone()));
                Ok(Element::Res(r.to_biguint().expect("mod_floor is nonnegative")))
            }
            Ring::Poly(base) => {
                let inner = trimmed
                    .strip_prefix('[')
                    .and_then(|s| s.strip_suffix(']'))
                    .ok_or_else(|| syntax("expected a bracketed coefficient list"))?;
                let mut coeffs = Vec::new();
                for part in split_top_level(inner) {
                    coeffs.push(base.parse_element(part)?);
                }
                Ok(Element::Poly(poly_trim(base, coeffs)))
            }
        }
    }

    /// Draws a small random element, for property checks and sampling-based
    /// verification. Residues are uniform over `[0, m)`; the other rings use
    /// single-digit numerators, denominators, and coefficients.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Element {
        match self {
            Ring::Integers => Element::Int(BigInt::from(rng.random_range(-9i64..=9))),
            Ring::Rationals => {
                let num = BigInt::from(rng.random_range(-9i64..=9));
                let den = BigInt::from(rng.random_range(1i64..=9));
                Element::Rat(BigRational::new(num, den))
            }
            Ring::Zmod(m) => Element::Res(sample_below(m, rng)),
            Ring::Poly(base) => {
                let len = rng.random_range(0usize..=3);
                let coeffs = (0..len).map(|_| base.sample(rng)).collect();
                Element::Poly(poly_trim(base, coeffs))
            }
        }
    }

    fn domain_panic(&self) -> ! {
        panic!("element does not belong to ring `{self}`")
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => f.write_str("integers"),
            Ring::Rationals => f.write_str("rationals"),
            Ring::Zmod(m) => write!(f, "zmod {m}"),
            Ring::Poly(base) => write!(f, "poly over {base}"),
        }
    }
}

impl FromStr for Ring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ring::parse(s)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Int(a) => write!(f, "{a}"),
            Element::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Element::Res(v) => write!(f, "{v}"),
            Element::Poly(cs) => {
                f.write_str("[")?;
                for (i, c) in cs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str("]")
            }
        }
    }
}

/// Drops trailing zero coefficients so polynomial equality stays structural.
fn poly_trim(base: &Ring, mut coeffs: Vec<Element>) -> Vec<Element> {
    while coeffs.last().is_some_and(|c| base.is_zero(c)) {
        coeffs.pop();
    }
    coeffs
}

fn poly_add(base: &Ring, a: &[Element], b: &[Element]) -> Vec<Element> {
    let len = a.len().max(b.len());
    let zero = base.zero();
    let sum = (0..len)
        .map(|i| base.add(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
        .collect();
    poly_trim(base, sum)
}

/// Schoolbook convolution. The trim matters over rings with zero divisors,
/// where leading coefficients can cancel (e.g. `[2] * [3]` over `zmod 6`).
fn poly_mul(base: &Ring, a: &[Element], b: &[Element]) -> Vec<Element> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![base.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = base.add(&out[i + j], &base.mul(x, y));
        }
    }
    poly_trim(base, out)
}

fn sample_below<R: Rng + ?Sized>(m: &BigUint, rng: &mut R) -> BigUint {
    if let Some(small) = m.to_u64() {
        BigUint::from(rng.random_range(0..small))
    } else {
        // Slight modulo bias is acceptable for test sampling.
        let mut bytes = vec![0u8; (m.bits() as usize) / 8 + 9];
        rng.fill_bytes(&mut bytes);
        BigUint::from_bytes_le(&bytes) % m
    }
}

/// Splits on commas that sit outside any brackets, keeping nested
/// coefficient lists intact. Yields nothing for blank input.
fn split_top_level(s: &str) -> impl Iterator<Item = &str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if !s.trim().is_empty() || !parts.is_empty() {
        parts.push(&s[start..]);
    }
    parts.into_iter()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(k: i64) -> Element {
        Ring::Integers.from_i64(k)
    }

    #[test]
    fn descriptor_round_trip() {
        for desc in [
            "integers",
            "rationals",
            "zmod 6",
            "poly over integers",
            "poly over zmod 5",
            "poly over poly over rationals",
        ] {
            let ring = Ring::parse(desc).unwrap();
            assert_eq!(ring.to_string(), desc);
        }
    }

    #[test]
    fn descriptor_rejects_garbage() {
        assert!(matches!(
            Ring::parse("gaussian"),
            Err(Error::UnknownDescriptor(_))
        ));
        assert!(matches!(
            Ring::parse("poly over"),
            Err(Error::UnknownDescriptor(_))
        ));
        assert!(matches!(
            Ring::parse("zmod x"),
            Err(Error::UnknownDescriptor(_))
        ));
    }

    #[test]
    fn small_moduli_rejected() {
        assert_eq!(
            Ring::parse("zmod 1"),
            Err(Error::ModulusTooSmall("1".into()))
        );
        assert_eq!(
            Ring::parse("zmod 0"),
            Err(Error::ModulusTooSmall("0".into()))
        );
        assert!(Ring::parse("zmod 2").is_ok());
    }

    #[test]
    fn zmod_six_has_zero_divisors() {
        let ring = Ring::parse("zmod 6").unwrap();
        let two = ring.from_i64(2);
        let three = ring.from_i64(3);
        assert!(ring.is_zero(&ring.mul(&two, &three)));
        assert!(!ring.eq(&ring.zero(), &ring.one()));
    }

    #[test]
    fn poly_mul_matches_schoolbook() {
        let ring = Ring::poly_over(Ring::Integers);
        // t * t = t^2
        let t = Element::Poly(vec![int(0), int(1)]);
        assert_eq!(
            ring.mul(&t, &t),
            Element::Poly(vec![int(0), int(0), int(1)])
        );
        // (1 + t)(1 - t) = 1 - t^2
        let a = Element::Poly(vec![int(1), int(1)]);
        let b = Element::Poly(vec![int(1), int(-1)]);
        assert_eq!(
            ring.mul(&a, &b),
            Element::Poly(vec![int(1), int(0), int(-1)])
        );
    }

    #[test]
    fn poly_mul_trims_cancelled_leading_terms() {
        let base = Ring::parse("zmod 6").unwrap();
        let ring = Ring::poly_over(base.clone());
        let two = Element::Poly(vec![base.from_i64(2)]);
        let three = Element::Poly(vec![base.from_i64(3)]);
        assert_eq!(ring.mul(&two, &three), Element::Poly(vec![]));
        assert!(ring.is_zero(&ring.mul(&two, &three)));
    }

    #[test]
    fn rationals_stay_reduced() {
        let ring = Ring::Rationals;
        let half = ring.parse_element("2/4").unwrap();
        assert_eq!(half.to_string(), "1/2");
        let neg = ring.parse_element("3/-6").unwrap();
        assert_eq!(neg.to_string(), "-1/2");
        assert!(ring.contains(&neg));
        assert!(matches!(
            ring.parse_element("1/0"),
            Err(Error::ElementSyntax { .. })
        ));
    }

    #[test]
    fn residues_reduce_on_read() {
        let ring = Ring::parse("zmod 6").unwrap();
        assert_eq!(ring.parse_element("9").unwrap().to_string(), "3");
        assert_eq!(ring.parse_element("-1").unwrap().to_string(), "5");
    }

    #[test]
    fn element_text_round_trips() {
        let cases = [
            ("integers", "-42"),
            ("rationals", "-3/4"),
            ("rationals", "7"),
            ("zmod 12", "11"),
            ("poly over integers", "[]"),
            ("poly over integers", "[1,-2,1]"),
            ("poly over zmod 5", "[4,0,1]"),
            ("poly over poly over integers", "[[1],[0,1]]"),
        ];
        for (desc, text) in cases {
            let ring = Ring::parse(desc).unwrap();
            let e = ring.parse_element(text).unwrap();
            assert!(ring.contains(&e), "{desc}: {text}");
            assert_eq!(e.to_string(), text);
        }
    }

    #[test]
    fn poly_parse_trims_trailing_zeros() {
        let ring = Ring::parse("poly over integers").unwrap();
        let e = ring.parse_element("[1,0]").unwrap();
        assert_eq!(e.to_string(), "[1]");
        let z = ring.parse_element("[0,0]").unwrap();
        assert!(ring.is_zero(&z));
    }

    #[test]
    fn contains_tracks_canonical_form() {
        let poly = Ring::poly_over(Ring::Integers);
        assert!(poly.contains(&Element::Poly(vec![int(3)])));
        assert!(!poly.contains(&Element::Poly(vec![int(3), int(0)])));
        assert!(!poly.contains(&int(3)));
        assert!(!Ring::Integers.contains(&Element::Res(BigUint::from(1u32))));
    }

    #[test]
    fn from_i64_reduces_in_zmod() {
        let ring = Ring::parse("zmod 5").unwrap();
        assert_eq!(ring.from_i64(7), ring.from_i64(2));
        assert_eq!(ring.from_i64(-1), ring.from_i64(4));
    }

    #[test]
    fn neg_in_zmod_wraps() {
        let ring = Ring::parse("zmod 5").unwrap();
        let three = ring.from_i64(3);
        assert_eq!(ring.neg(&three), ring.from_i64(2));
        assert_eq!(ring.neg(&ring.zero()), ring.zero());
    }

    #[test]
    fn sampled_elements_are_contained() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for desc in ["integers", "rationals", "zmod 7", "poly over zmod 6"] {
            let ring = Ring::parse(desc).unwrap();
            for _ in 0..200 {
                let e = ring.sample(&mut rng);
                assert!(ring.contains(&e), "{desc}: {e}");
            }
        }
    }
}

//! Vector operations over a common ring: dot products, pointwise sums,
//! scaling, and the fold-style sums and products the determinant code
//! builds on.

use rand::Rng;

use crate::error::{Error, Result};
use crate::ring::{Element, Ring};

/// A vector is a plain element list; all entries live in one ring that the
/// caller supplies to each operation.
pub type Vector = Vec<Element>;

/// Dot product of two equal-length vectors. The empty dot product is zero.
pub fn dot(ring: &Ring, x: &[Element], y: &[Element]) -> Result<Element> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    Ok(x.iter()
        .zip(y)
        .fold(ring.zero(), |acc, (a, b)| ring.add(&acc, &ring.mul(a, b))))
}

/// Dot products of `x` against each row of `rows`, in order.
pub fn dot_list(ring: &Ring, x: &[Element], rows: &[Vector]) -> Result<Vector> {
    rows.iter().map(|row| dot(ring, x, row)).collect()
}

/// Pointwise sum of two equal-length vectors.
pub fn vec_add(ring: &Ring, x: &[Element], y: &[Element]) -> Result<Vector> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    Ok(x.iter().zip(y).map(|(a, b)| ring.add(a, b)).collect())
}

/// Multiplies every entry by `c`.
pub fn vec_scale(ring: &Ring, c: &Element, x: &[Element]) -> Vector {
    x.iter().map(|a| ring.mul(c, a)).collect()
}

/// Sum of all entries; zero for the empty vector.
pub fn vec_sum(ring: &Ring, x: &[Element]) -> Element {
    x.iter().fold(ring.zero(), |acc, a| ring.add(&acc, a))
}

/// Product of all entries; one for the empty vector.
pub fn vec_prod(ring: &Ring, x: &[Element]) -> Element {
    x.iter().fold(ring.one(), |acc, a| ring.mul(&acc, a))
}

/// The zero vector of length `n`.
pub fn zeros(ring: &Ring, n: usize) -> Vector {
    vec![ring.zero(); n]
}

pub fn is_zero_vector(ring: &Ring, x: &[Element]) -> bool {
    x.iter().all(|a| ring.is_zero(a))
}

/// A vector of `n` independently sampled elements.
pub fn sample_vector<R: Rng + ?Sized>(ring: &Ring, n: usize, rng: &mut R) -> Vector {
    (0..n).map(|_| ring.sample(rng)).collect()
}

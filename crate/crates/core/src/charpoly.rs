//! Characteristic polynomials, computed exactly as `det(tI - A)` over the
//! polynomial extension of the matrix's ring.

use crate::det::det_rec;
use crate::error::{Error, Result};
use crate::matrix::{identity, Matrix};
use crate::perm::DEFAULT_CAP;
use crate::ring::{Element, Ring};

/// Embeds a base-ring element as a constant polynomial.
fn lift(base: &Ring, c: &Element) -> Element {
    if base.is_zero(c) {
        Element::Poly(Vec::new())
    } else {
        Element::Poly(vec![c.clone()])
    }
}

/// The matrix `tI - A` over `poly over <base>`: diagonal entries `t - a_ii`,
/// off-diagonal entries `-a_ij`.
fn characteristic_matrix(a: &Matrix) -> Result<Matrix> {
    let base = a.ring().clone();
    let poly = Ring::poly_over(base.clone());
    let n = a.require_square()?;
    let t = Element::Poly(vec![base.zero(), base.one()]);
    let lifted_rows = a
        .rows()
        .iter()
        .map(|row| row.iter().map(|c| lift(&base, c)).collect())
        .collect();
    let lifted = Matrix::from_rows(poly.clone(), lifted_rows)?;
    let t_id = identity(&poly, n)?.scale(&t);
    t_id.add(&lifted.scale(&poly.neg(&poly.one())))
}

/// The characteristic polynomial `det(tI - A)` of a square matrix over the
/// integers, rationals, or a residue ring. The result is an element of
/// `poly over <base>`, monic of degree n. The sign convention (`tI - A`,
/// not `A - tI`) is what makes it monic.
pub fn char_poly(a: &Matrix) -> Result<Element> {
    char_poly_with_cap(a, DEFAULT_CAP)
}

/// As [`char_poly`] with an explicit size cap.
pub fn char_poly_with_cap(a: &Matrix, cap: usize) -> Result<Element> {
    if let Ring::Poly(_) = a.ring() {
        return Err(Error::UnsupportedBase {
            ring: a.ring().to_string(),
        });
    }
    let n = a.require_square()?;
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    det_rec(&characteristic_matrix(a)?)
}

//! Exact linear algebra over arbitrary commutative rings with unity.
//!
//! The library provides four ring instances (arbitrary-precision integers,
//! rationals, residues mod m, and dense polynomials over any of these),
//! matrices over any such ring, and determinants computed four ways: the
//! permutation sum, recursive expansion along row 0, and cofactor expansion
//! along any row or column. On top of that sit the cofactor matrix, the
//! classical adjoint, characteristic polynomials, an executable uniqueness
//! harness for determinant-like functionals, and sampled checks of the ring
//! and determinant laws.
//!
//! Everything is exact: no floating point, no rounding, and equality of
//! results means structural equality of canonical forms. All values are
//! immutable; every operation returns fresh data.
//!
//! ```
//! use ringdet_core::{det, Matrix, Ring};
//!
//! let ring = Ring::parse("zmod 6").unwrap();
//! let a = Matrix::from_i64_rows(ring.clone(), &[&[1, 2], &[3, 4]]).unwrap();
//! // 1*4 - 2*3 = -2, which is 4 mod 6.
//! assert_eq!(det(&a).unwrap(), ring.from_i64(4));
//! ```

pub mod charpoly;
pub mod det;
pub mod error;
pub mod laws;
pub mod matrix;
pub mod perm;
pub mod ring;
pub mod textio;
pub mod vector;

pub use charpoly::{char_poly, char_poly_with_cap};
pub use det::{
    adjoint, all_tuples, all_tuples_with_cap, check_uniqueness, check_uniqueness_with,
    cofactor, cofactor_matrix, det, det_rec, det_term, det_with_cap, expand_col, expand_row,
    eval_tuple, sum_tuples, CheckOptions, DeterminantFunctional, LevelSum, SignedTerm, Tuple,
    UniquenessReport,
};
pub use error::{Error, Result};
pub use laws::{
    all_passed, determinant_laws, ring_axioms, standard_rings, LawOutcome, LawReport,
};
pub use matrix::{delta, identity, is_matrix, mat_sum, unit_vector, Matrix};
pub use perm::{enumerate, enumerate_with_cap, Parity, Permutation, DEFAULT_CAP};
pub use ring::{Element, Ring};
pub use textio::{parse_matrix_file, parse_matrix_str, render_matrix, ParseNote};
pub use vector::{
    dot, dot_list, is_zero_vector, sample_vector, vec_add, vec_prod, vec_scale, vec_sum,
    zeros, Vector,
};

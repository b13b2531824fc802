//! Exact scalars and dense linear algebra over ℚ and 𝔽_p.
//!
//! Every routine is deterministic: subspaces are kept in reduced row-echelon
//! form so equality of spans is equality of stored bases, and Kronecker
//! products use the row-major composite index `(i, j) ↦ i·rows(b) + j`
//! throughout the crate.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::{kron_all, MatrixExact, Rref};
pub use scalar::{Field, Scalar};
pub use subspace::{intersect_many, intersect_many_by_annihilators, Subspace};

/// Reduced row-echelon form of `m`.
pub fn rref(m: &MatrixExact) -> Rref {
    m.rref()
}

pub fn kernel(m: &MatrixExact) -> Subspace {
    m.kernel()
}

pub fn kron(a: &MatrixExact, b: &MatrixExact) -> MatrixExact {
    a.kron(b)
}

pub fn right_inverse(m: &MatrixExact) -> crate::Result<MatrixExact> {
    m.right_inverse()
}

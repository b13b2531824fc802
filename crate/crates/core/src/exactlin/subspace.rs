use alloc::vec;
use alloc::vec::Vec;

use super::matrix::{dot, MatrixExact};
use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

/// A linear subspace of `field^ambient`, stored as the RREF basis of its row
/// span. Two subspaces are equal exactly when their stored bases are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: MatrixExact,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace { ambient, basis: MatrixExact::zeros(field, 0, ambient), pivots: Vec::new() }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: MatrixExact::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Row span of `m`.
    pub fn from_spanning_matrix(m: &MatrixExact) -> Self {
        let r = m.rref();
        let cols = m.cols();
        let rows: Vec<Vec<Scalar>> = (0..r.rank).map(|i| r.reduced.row(i).to_vec()).collect();
        let basis = MatrixExact::from_rows(m.field(), cols, rows).expect("rows of fixed width");
        Subspace { ambient: cols, basis, pivots: r.pivots }
    }

    pub fn from_vectors(field: Field, ambient: usize, vectors: Vec<Vec<Scalar>>) -> Result<Self> {
        let m = MatrixExact::from_rows(field, ambient, vectors)?;
        Ok(Self::from_spanning_matrix(&m))
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// Basis rows in reduced row-echelon form.
    pub fn basis(&self) -> &MatrixExact {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vector(&self, i: usize) -> &[Scalar] {
        self.basis.row(i)
    }

    /// Component of `v` left after eliminating the pivot coordinates.
    pub fn residual(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut r = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = r[p].clone();
            if c.is_zero() {
                continue;
            }
            for (j, b) in self.basis.row(i).iter().enumerate() {
                if !b.is_zero() {
                    r[j] = &r[j] - &(&c * b);
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        v.len() == self.ambient && self.residual(v).iter().all(Scalar::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.ambient == self.ambient
            && (0..other.dim()).all(|i| self.contains(other.basis_vector(i)))
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::Shape(alloc::format!(
                "ambient dimensions {} and {} differ",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Self::from_spanning_matrix(&self.basis.vstack(&other.basis)?))
    }

    /// Intersection, found as the left kernel of the residuals of `other`'s
    /// basis modulo `self`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let field = self.field();
        let (n, k) = (self.ambient, other.dim());
        if k == 0 || self.dim() == 0 {
            return Ok(Self::zero(field, n));
        }
        let mut aug = MatrixExact::zeros(field, k, n + k);
        for j in 0..k {
            for (c, x) in self.residual(other.basis_vector(j)).into_iter().enumerate() {
                if !x.is_zero() {
                    aug.set(j, c, x);
                }
            }
            aug.set(j, n + j, field.one());
        }
        let pivots = aug.rref_in_place();
        let mut vectors = Vec::new();
        for (row, &p) in pivots.iter().enumerate() {
            if p < n {
                continue;
            }
            let mut v = vec![field.zero(); n];
            for j in 0..k {
                let c = aug.get(row, n + j);
                if c.is_zero() {
                    continue;
                }
                for (t, b) in other.basis_vector(j).iter().enumerate() {
                    if !b.is_zero() {
                        v[t] = &v[t] + &(c * b);
                    }
                }
            }
            vectors.push(v);
        }
        Self::from_vectors(field, n, vectors)
    }

    /// `{ φ : ⟨φ, u⟩ = 0 for all u }` under the coordinate dot pairing.
    pub fn annihilator(&self) -> Subspace {
        self.basis.kernel()
    }

    /// Tensor product `self ⊗ other` inside the Kronecker ambient. The
    /// Kronecker product of two RREF bases is again in RREF.
    pub fn tensor(&self, other: &Subspace) -> Subspace {
        let basis = self.basis.kron(&other.basis);
        let pivots = self
            .pivots
            .iter()
            .flat_map(|&p| other.pivots.iter().map(move |&q| p * other.ambient + q))
            .collect();
        Subspace { ambient: self.ambient * other.ambient, basis, pivots }
    }

    /// Image of the subspace under a linear map given by `m` acting on column vectors.
    pub fn image_under(&self, m: &MatrixExact) -> Result<Subspace> {
        if m.cols() != self.ambient {
            return Err(Error::Shape(alloc::format!(
                "map with {} columns applied to ambient {}",
                m.cols(),
                self.ambient
            )));
        }
        let images = (0..self.dim())
            .map(|i| m.mul_vec(self.basis_vector(i)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_vectors(self.field(), m.rows(), images)
    }

    /// Column space of `m`.
    pub fn column_space(m: &MatrixExact) -> Subspace {
        Self::from_spanning_matrix(&m.transpose())
    }

    pub fn pairing(&self, i: usize, v: &[Scalar]) -> Scalar {
        dot(self.basis_vector(i), v, self.field())
    }
}

/// Intersection of a nonempty family, by iterated pairwise intersection.
pub fn intersect_many(subs: &[Subspace]) -> Result<Subspace> {
    let (first, rest) = subs
        .split_first()
        .ok_or_else(|| Error::InvalidParameter("intersection of an empty family".into()))?;
    rest.iter().try_fold(first.clone(), |acc, s| acc.intersect(s))
}

/// Intersection of a nonempty family as the annihilator of the summed
/// annihilators. Agrees with [`intersect_many`].
pub fn intersect_many_by_annihilators(subs: &[Subspace]) -> Result<Subspace> {
    let first = subs
        .first()
        .ok_or_else(|| Error::InvalidParameter("intersection of an empty family".into()))?;
    let field = first.field();
    let mut stacked = MatrixExact::zeros(field, 0, first.ambient());
    for s in subs {
        first.check_ambient(s)?;
        stacked = stacked.vstack(s.annihilator().basis())?;
    }
    Ok(stacked.kernel())
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn span(rows: &[&[i64]]) -> Subspace {
        Subspace::from_spanning_matrix(&MatrixExact::from_i64(Q, rows))
    }

    #[test]
    fn singleton_intersection_is_identity() {
        let u = span(&[&[1, 2, 3], &[0, 1, 1]]);
        assert_eq!(intersect_many(std::slice::from_ref(&u)).unwrap(), u);
        assert_eq!(u.intersect(&u).unwrap(), u);
    }

    #[test]
    fn mismatched_ambient_is_rejected() {
        let u = Subspace::full(Q, 2);
        let w = Subspace::full(Q, 3);
        assert!(matches!(intersect_many(&[u, w]), Err(Error::Shape(_))));
    }

    #[test]
    fn coordinates_in_rref_basis() {
        let u = span(&[&[1, 0, 2], &[0, 1, -1]]);
        let v = [Q.from_i64(3), Q.from_i64(-2), Q.from_i64(8)];
        assert_eq!(u.coordinates(&v).unwrap(), vec![Q.from_i64(3), Q.from_i64(-2)]);
        assert!(u.coordinates(&[Q.from_i64(0), Q.from_i64(0), Q.from_i64(1)]).is_none());
    }

    #[test]
    fn tensor_of_rref_bases_stays_reduced() {
        let u = span(&[&[1, 2, 0], &[0, 0, 1]]);
        let w = span(&[&[0, 1, -1]]);
        let t = u.tensor(&w);
        assert_eq!(t, Subspace::from_spanning_matrix(t.basis()));
    }

    #[test]
    fn annihilator_dimension() {
        let u = span(&[&[0, 1, -1, 0]]);
        let ann = u.annihilator();
        assert_eq!(ann.dim(), 3);
        assert_eq!(ann.annihilator(), u);
    }
}

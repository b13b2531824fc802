//! Quadratic algebras `A = TV/(R)`: Koszul duals, relation spaces `R_l`,
//! graded dimensions and the Artin–Schelter regularity test.
//!
//! Vectors of `V^{⊗l}` use the Kronecker index convention: the word
//! `v_{i_1} ⊗ … ⊗ v_{i_l}` sits at index `((i_1·n + i_2)·n + …)·n + i_l`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactlin::{Field, MatrixExact, Scalar, Subspace};

/// `TV/(R)` with `R ⊆ V ⊗ V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticAlgebra {
    dim_v: usize,
    relations: Subspace,
    names: Vec<String>,
}

/// Dimensions of the graded pieces `A_0, A_1, …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDims(pub Vec<usize>);

/// Result of [`QuadraticAlgebra::as_regular_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ASReport {
    /// Top degree with `R_d ≠ 0`; the global dimension when `A` is Koszul.
    pub global_dimension: usize,
    /// `dim R_1, …, dim R_{d+1}`.
    pub relation_dims: Vec<usize>,
    /// The basis vector `w_d` of `R_d`, when `dim R_d = 1`.
    pub top_generator: Option<Vec<Scalar>>,
    /// `C^{(a)}` for `a = 1, …, d-1`: coordinates of `w_d` in `R_a ⊗ R_{d-a}`.
    pub pairings: Vec<MatrixExact>,
    pub frobenius_top_one: bool,
    pub pairings_nondegenerate: bool,
    /// `h_A(t)·h_{A^!}(-t) ≡ 1` up to the cutoff. Necessary for Koszulness,
    /// never sufficient.
    pub koszul_series_consistent: bool,
    pub as_regular: bool,
}

impl QuadraticAlgebra {
    pub fn new(dim_v: usize, relations: Subspace, names: Vec<String>) -> Result<Self> {
        if dim_v == 0 {
            return Err(Error::InvalidParameter("dim V must be positive".into()));
        }
        if relations.ambient() != dim_v * dim_v {
            return Err(Error::Shape(format!(
                "relation space lives in dimension {}, expected {}",
                relations.ambient(),
                dim_v * dim_v
            )));
        }
        if names.len() != dim_v {
            return Err(Error::Shape(format!("{} names for {dim_v} variables", names.len())));
        }
        Ok(QuadraticAlgebra { dim_v, relations, names })
    }

    /// Builds the algebra from relation vectors in `V ⊗ V`, with default names.
    pub fn from_relation_vectors(
        field: Field,
        dim_v: usize,
        relations: Vec<Vec<Scalar>>,
    ) -> Result<Self> {
        let r = Subspace::from_vectors(field, dim_v * dim_v, relations)?;
        Self::new(dim_v, r, default_names(dim_v))
    }

    pub fn field(&self) -> Field {
        self.relations.field()
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// `A^! = TV^*/(R^⊥)`, the annihilator taken under the dual-basis pairing.
    pub fn koszul_dual(&self) -> QuadraticAlgebra {
        let names = self.names.iter().map(|n| dual_name(n)).collect();
        QuadraticAlgebra { dim_v: self.dim_v, relations: self.relations.annihilator(), names }
    }

    /// `[R_1, …, R_lmax]` with `R_1 = V`, `R_2 = R` and
    /// `R_l = ⋂_{i+j+2=l} V^i R V^j`.
    ///
    /// Computed through `R_l = (R_{l-1} ⊗ V) ∩ (V ⊗ R_{l-1})`, which covers the
    /// same family of positions.
    pub fn relation_spaces(&self, lmax: usize) -> Result<Vec<Subspace>> {
        if lmax == 0 {
            return Err(Error::InvalidParameter("lmax must be at least 1".into()));
        }
        let v = Subspace::full(self.field(), self.dim_v);
        let mut out = Vec::with_capacity(lmax);
        out.push(v.clone());
        if lmax >= 2 {
            out.push(self.relations.clone());
        }
        for _ in 3..=lmax {
            let prev = out.last().expect("nonempty");
            let next = prev.tensor(&v).intersect(&v.tensor(prev))?;
            out.push(next);
        }
        Ok(out)
    }

    /// `dim A_0, …, dim A_nmax`.
    ///
    /// `A_n` is dual to `⋂ V^i R^⊥ V^j`, so the dimensions are those of the
    /// relation spaces of the Koszul dual.
    pub fn graded_dims(&self, nmax: usize) -> GradedDims {
        let mut dims = Vec::with_capacity(nmax + 1);
        dims.push(1);
        if nmax >= 1 {
            let spaces = self
                .koszul_dual()
                .relation_spaces(nmax)
                .expect("nmax >= 1");
            dims.extend(spaces.iter().map(Subspace::dim));
        }
        GradedDims(dims)
    }

    /// Tests the Frobenius criterion for AS-regularity: `dim R_d = 1` and
    /// every inclusion `R_d ⊆ R_a ⊗ R_{d-a}` is a non-degenerate pairing.
    pub fn as_regular_check(&self, nmax: usize) -> Result<ASReport> {
        if nmax < 2 {
            return Err(Error::InvalidParameter("nmax must be at least 2".into()));
        }
        let spaces = self.relation_spaces(nmax)?;
        if spaces[nmax - 1].dim() != 0 {
            return Err(Error::NotFiniteType { cutoff: nmax });
        }
        let d = spaces.iter().rposition(|s| s.dim() > 0).expect("R_1 = V is nonzero") + 1;
        let relation_dims: Vec<usize> = spaces[..=d].iter().map(Subspace::dim).collect();
        let frobenius_top_one = spaces[d - 1].dim() == 1;

        let mut pairings = Vec::new();
        let mut top_generator = None;
        if frobenius_top_one {
            let w = spaces[d - 1].basis_vector(0).to_vec();
            for a in 1..d {
                pairings.push(pairing_matrix(&spaces, &w, a, d)?);
            }
            top_generator = Some(w);
        }
        let pairings_nondegenerate =
            frobenius_top_one && pairings.iter().all(MatrixExact::is_invertible);

        let h_a = self.graded_dims(nmax).0;
        let koszul_series_consistent = (0..=nmax).all(|n| {
            let mut total: i128 = 0;
            for j in 0..=n {
                let dual_dim = if j == 0 { 1 } else { spaces[j - 1].dim() } as i128;
                let term = h_a[n - j] as i128 * dual_dim;
                total += if j % 2 == 0 { term } else { -term };
            }
            total == i128::from(n == 0)
        });

        let as_regular = frobenius_top_one && pairings_nondegenerate && koszul_series_consistent;
        Ok(ASReport {
            global_dimension: d,
            relation_dims,
            top_generator,
            pairings,
            frobenius_top_one,
            pairings_nondegenerate,
            koszul_series_consistent,
            as_regular,
        })
    }
}

/// Coefficients of `w` in the basis of `R_a ⊗ R_{d-a}`, as a
/// `dim R_a × dim R_{d-a}` matrix.
pub(crate) fn pairing_matrix(
    spaces: &[Subspace],
    w: &[Scalar],
    a: usize,
    d: usize,
) -> Result<MatrixExact> {
    let left = &spaces[a - 1];
    let right = &spaces[d - a - 1];
    let coords = left.tensor(right).coordinates(w).ok_or_else(|| {
        Error::Invariant(format!("R_{d} is not contained in R_{a} ⊗ R_{}", d - a))
    })?;
    MatrixExact::row_vector(left.field(), coords).reshape(left.dim(), right.dim())
}

pub(crate) fn default_names(n: usize) -> Vec<String> {
    const SHORT: [&str; 3] = ["x", "y", "z"];
    if n <= SHORT.len() {
        SHORT[..n].iter().map(|s| String::from(*s)).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

fn dual_name(name: &str) -> String {
    match name.strip_suffix('*') {
        Some(base) => String::from(base),
        None => format!("{name}*"),
    }
}

/// Standard quadratic algebras used throughout tests and fixtures.
pub mod corpus {
    use super::*;

    fn vectors_from(field: Field, n: usize, rels: &[&[(i64, i64, usize, usize)]]) -> Vec<Vec<Scalar>> {
        rels.iter()
            .map(|terms| {
                let mut v = alloc::vec![field.zero(); n * n];
                for &(num, den, i, j) in terms.iter() {
                    let c = &field.from_i64(num) / &field.from_i64(den);
                    v[i * n + j] = &v[i * n + j] + &c;
                }
                v
            })
            .collect()
    }

    /// The commutative polynomial ring on `n` variables.
    pub fn polynomial_ring(field: Field, n: usize) -> QuadraticAlgebra {
        let mut rels = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut v = alloc::vec![field.zero(); n * n];
                v[i * n + j] = field.one();
                v[j * n + i] = -field.one();
                rels.push(v);
            }
        }
        QuadraticAlgebra::from_relation_vectors(field, n, rels).expect("well-formed")
    }

    /// `xy - q·yx`.
    pub fn quantum_plane(field: Field, q: &Scalar) -> QuadraticAlgebra {
        let mut v = alloc::vec![field.zero(); 4];
        v[1] = field.one();
        v[2] = -q;
        QuadraticAlgebra::from_relation_vectors(field, 2, alloc::vec![v]).expect("well-formed")
    }

    /// `xy - yx - y²`.
    pub fn jordan_plane(field: Field) -> QuadraticAlgebra {
        let rels = vectors_from(field, 2, &[&[(1, 1, 0, 1), (-1, 1, 1, 0), (-1, 1, 1, 1)]]);
        QuadraticAlgebra::from_relation_vectors(field, 2, rels).expect("well-formed")
    }

    /// The free algebra on `n` generators.
    pub fn free_algebra(field: Field, n: usize) -> QuadraticAlgebra {
        QuadraticAlgebra::from_relation_vectors(field, n, Vec::new()).expect("well-formed")
    }

    /// `TV/(x ⊗ y)` on two generators.
    pub fn monomial_xy(field: Field) -> QuadraticAlgebra {
        let rels = vectors_from(field, 2, &[&[(1, 1, 0, 1)]]);
        QuadraticAlgebra::from_relation_vectors(field, 2, rels).expect("well-formed")
    }

    /// `TV/(V ⊗ V)`.
    pub fn all_relations(field: Field, n: usize) -> QuadraticAlgebra {
        let full = Subspace::full(field, n * n);
        QuadraticAlgebra::new(n, full, default_names(n)).expect("well-formed")
    }
}

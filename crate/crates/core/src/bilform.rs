//! Non-degenerate bilinear forms, the Temperley–Lieb fiber functor, the
//! universal quantum group `H(b)` and quantum dimensions.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::coendc::{antipode_derive, compile_coend, matrix_names, DualityDatum, FiberFunctorData, PresentedBialgebra};
use crate::error::{Error, Result};
use crate::exactlin::{Field, MatrixExact, Scalar};
use crate::moncat::{build_category, CategoryKind, ObjectWord, PresentedMonoidalCategory};

/// `b(e_i, e_j) = B_{ij}`, with `B` invertible and at least 2×2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    matrix: MatrixExact,
}

impl BilinearForm {
    pub fn new(matrix: MatrixExact) -> Result<Self> {
        if matrix.rows() != matrix.cols() || matrix.rows() < 2 {
            return Err(Error::Shape(format!(
                "a form needs a square matrix of size at least 2, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        if !matrix.is_invertible() {
            return Err(Error::NotInvertible("the form is degenerate".into()));
        }
        Ok(BilinearForm { matrix })
    }

    /// `[[0, 1], [−q⁻¹, 0]]`.
    pub fn q_form(field: Field, q: &Scalar) -> Result<Self> {
        let qi = q.inv().ok_or_else(|| Error::InvalidParameter("q must be nonzero".into()))?;
        let m = MatrixExact::from_rows(field, 2, vec![vec![field.zero(), field.one()], vec![-qi, field.zero()]])?;
        BilinearForm::new(m)
    }

    pub fn matrix(&self) -> &MatrixExact {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn field(&self) -> Field {
        self.matrix.field()
    }

    pub fn inverse(&self) -> MatrixExact {
        self.matrix.inverse().expect("invertible by construction")
    }

    /// `GᵀBG`.
    pub fn congruent(&self, g: &MatrixExact) -> Result<Self> {
        BilinearForm::new(g.transpose().mul(&self.matrix)?.mul(g)?)
    }

    pub fn transpose(&self) -> Self {
        BilinearForm { matrix: self.matrix.transpose() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QDimConvention {
    /// The coevaluation is the unique one satisfying both snake identities.
    SnakeNormalized,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QDim {
    pub value: Scalar,
    pub convention: QDimConvention,
}

impl QDim {
    /// The value under the opposite global sign, `−q(b)`.
    pub fn negated(&self) -> Scalar {
        -&self.value
    }
}

/// `F(v) = V`, `F(ψ) = b` as a `1 × n²` row and `F(φ) = vec(B⁻¹)` as an
/// `n² × 1` column.
pub fn tl_functor(bf: &BilinearForm) -> Result<(PresentedMonoidalCategory, FiberFunctorData)> {
    let cat = build_category(CategoryKind::TemperleyLieb)?;
    let n = bf.dim();
    let field = bf.field();
    let cup = bf.inverse().reshape(n * n, 1)?;
    let cap = bf.matrix.reshape(1, n * n)?;
    let f = FiberFunctorData { field, dims: vec![n], morphisms: vec![cup, cap] };
    Ok((cat, f))
}

/// `q(b) = F(ψ∘φ) = Σ_{ij} B_{ij}(B⁻¹)_{ij}`.
pub fn quantum_dimension(bf: &BilinearForm) -> QDim {
    let inv = bf.inverse();
    let field = bf.field();
    let value = bf
        .matrix
        .entries()
        .iter()
        .zip(inv.entries())
        .fold(field.zero(), |acc, (x, y)| &acc + &(x * y));
    QDim { value, convention: QDimConvention::SnakeNormalized }
}

/// `H(b) = coend(F_b)` with its antipode `S(Z) = B·Zᵀ·B⁻¹`. Generators are
/// `a, b, c, d` for `n = 2`.
pub fn hb_presentation(bf: &BilinearForm, max_passes: usize) -> Result<PresentedBialgebra> {
    let (cat, f) = tl_functor(bf)?;
    let mut h = compile_coend(&cat, &f)?;
    let names = matrix_names(bf.dim());
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    h.rename(&refs)?;
    let datum = DualityDatum {
        object: 0,
        dual: ObjectWord::parse("v", &cat.object_gens)?,
        ev: f.morphisms[1].clone(),
        coev: Some(f.morphisms[0].clone()),
    };
    h.antipode = Some(antipode_derive(&h, &[datum], max_passes)?);
    Ok(h)
}

/// One class of forms with equal quantum dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoritaClass {
    pub q: Scalar,
    /// Indices into the input list.
    pub members: Vec<usize>,
}

/// Groups forms by exact equality of `q(b)`, in order of first appearance.
pub fn comorita_components(forms: &[BilinearForm]) -> Vec<ComoritaClass> {
    let mut classes: Vec<ComoritaClass> = Vec::new();
    for (i, bf) in forms.iter().enumerate() {
        let q = quantum_dimension(bf).value;
        match classes.iter_mut().find(|c| c.q.field() == q.field() && c.q == q) {
            Some(c) => c.members.push(i),
            None => classes.push(ComoritaClass { q, members: vec![i] }),
        }
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn bq() -> BilinearForm {
        BilinearForm::q_form(Q, &Q.from_i64(3)).unwrap()
    }

    fn rat(text: &str) -> Scalar {
        Q.parse_scalar(text).unwrap()
    }

    #[test]
    fn functor_for_the_q_form() {
        let (cat, f) = tl_functor(&bq()).unwrap();
        let c = MatrixExact::from_i64(Q, &[&[0], &[-3], &[1], &[0]]);
        assert_eq!(f.morphisms[0], c);
        assert!(f.check_relations(&cat).unwrap().iter().all(|r| r.holds));
        let (cat, f) = tl_functor(&BilinearForm::new(MatrixExact::identity(Q, 2)).unwrap()).unwrap();
        assert_eq!(f.morphisms[0], MatrixExact::identity(Q, 2).reshape(4, 1).unwrap());
        assert!(f.check_relations(&cat).unwrap().iter().all(|r| r.holds));
    }

    #[test]
    fn singular_forms_are_rejected() {
        let m = MatrixExact::from_i64(Q, &[&[1, 2], &[2, 4]]);
        assert!(BilinearForm::new(m).is_err());
        assert!(BilinearForm::new(MatrixExact::identity(Q, 1)).is_err());
    }

    #[test]
    fn quantum_dimensions() {
        let id2 = BilinearForm::new(MatrixExact::identity(Q, 2)).unwrap();
        assert_eq!(quantum_dimension(&id2).value, Q.from_i64(2));
        let q = quantum_dimension(&bq());
        assert_eq!(q.value, rat("-10/3"));
        assert_eq!(q.negated(), rat("10/3"));
    }

    #[test]
    fn the_circle_evaluates_to_the_quantum_dimension() {
        let (_, f) = tl_functor(&bq()).unwrap();
        let circle = f.morphisms[1].mul(&f.morphisms[0]).unwrap();
        assert_eq!(circle.get(0, 0), &quantum_dimension(&bq()).value);
    }

    #[test]
    fn classification() {
        let mut m = MatrixExact::identity(Q, 3);
        m.set(0, 1, Q.from_i64(1));
        m.set(1, 0, rat("-16/3"));
        let b3 = BilinearForm::new(m).unwrap();
        assert_eq!(quantum_dimension(&b3).value, rat("-10/3"));
        let classes = comorita_components(&[bq(), b3]);
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].members, vec![0, 1]);
        let i2 = BilinearForm::new(MatrixExact::identity(Q, 2)).unwrap();
        let i3 = BilinearForm::new(MatrixExact::identity(Q, 3)).unwrap();
        assert_eq!(comorita_components(&[i2.clone(), i3]).len(), 2);
        assert_eq!(comorita_components(&[i2]).len(), 1);
    }

    #[test]
    fn hb_for_the_q_form() {
        let h = hb_presentation(&bq(), 10_000).unwrap();
        assert_eq!(h.names(), ["a", "b", "c", "d"]);
        assert!(h.antipode.as_ref().unwrap().iter().all(Option::is_some));
        for r in &h.algebra.relations {
            assert!(h.counit_poly(r).is_zero());
        }
    }
}

//! Homomorphisms of graded algebras and their graded-level properties.

mod equalizer;
mod equivalence;

use std::collections::BTreeMap;

use crate::galg::{GradedAlgebra, Homogeneity};
use crate::groups::GroupElement;
use crate::linalg::{is_zero_vector, Field, Matrix, Scalar, Subspace, Vector};
use crate::universal::free::{FreeError, FreeGradedAlgebra, FreeMorphism};

pub use equalizer::{equalizer, Equalizer};
pub use equivalence::{
    check_equivalence, check_isomorphism, check_weak_equivalence, search_weak_equivalence, SearchOutcome,
    SEARCH_MAX_COMPONENT_DIM, SEARCH_MAX_DIM,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MorphError {
    #[error("matrix is {found:?}, expected {expected:?}")]
    Shape { expected: (usize, usize), found: (usize, usize) },
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("not multiplicative on ({}, {})", labels[0], labels[1])]
    NotAHom { pair: [usize; 2], labels: [String; 2] },
    #[error("unit is not mapped to the unit")]
    NotUnital,
    #[error("morphisms are not composable")]
    NotComposable,
    #[error("morphism is not graded")]
    NotGraded,
    #[error("morphism is not graded injective")]
    NotGradedInjective,
    #[error("morphism is not invertible")]
    NotInvertible,
    #[error("{0}")]
    Precondition(String),
    #[error(transparent)]
    Free(#[from] FreeError),
}

/// An algebra homomorphism between graded algebras, with its graded-level
/// analysis computed once at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedMorphism {
    domain: GradedAlgebra,
    codomain: GradedAlgebra,
    matrix: Matrix,
    graded: bool,
    unital: bool,
    psi: BTreeMap<GroupElement, GroupElement>,
}

impl GradedMorphism {
    /// Analyzes a `codomain.dim × domain.dim` matrix. Fails if it is not
    /// multiplicative on some pair of basis vectors; gradedness and
    /// unitality are recorded as flags.
    pub fn new(domain: GradedAlgebra, codomain: GradedAlgebra, matrix: Matrix) -> Result<GradedMorphism, MorphError> {
        let expected = (codomain.dim(), domain.dim());
        if (matrix.rows(), matrix.cols()) != expected {
            return Err(MorphError::Shape {
                expected,
                found: (matrix.rows(), matrix.cols()),
            });
        }
        for f in [domain.field(), codomain.field()] {
            if f != matrix.field() {
                return Err(MorphError::FieldMismatch(matrix.field(), f));
            }
        }
        let images = matrix.columns();
        for i in 0..domain.dim() {
            for j in 0..domain.dim() {
                let lhs = matrix.apply(&domain.multiply(&domain.basis_vector(i), &domain.basis_vector(j)));
                if lhs != codomain.multiply(&images[i], &images[j]) {
                    return Err(MorphError::NotAHom {
                        pair: [i, j],
                        labels: [domain.label(i).to_string(), domain.label(j).to_string()],
                    });
                }
            }
        }
        let unital = match (domain.unit(), codomain.unit()) {
            (Some(u), Some(v)) => matrix.apply(u) == *v,
            (None, _) => true,
            (Some(_), None) => false,
        };
        let mut graded = true;
        let mut psi = BTreeMap::new();
        for g in domain.support() {
            let mut target: Option<GroupElement> = None;
            for i in domain.component_indices(&g) {
                for k in images[i].iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(k, _)| k) {
                    let h = codomain.degree(k);
                    match &target {
                        None => target = Some(h.clone()),
                        Some(t) if t != h => graded = false,
                        Some(_) => {}
                    }
                }
            }
            if let Some(h) = target {
                psi.insert(g, h);
            }
        }
        if !graded {
            psi.clear();
        }
        Ok(GradedMorphism {
            domain,
            codomain,
            matrix,
            graded,
            unital,
            psi,
        })
    }

    /// The morphism sending basis vector `i` of the domain to `images[i]`.
    pub fn from_images(domain: GradedAlgebra, codomain: GradedAlgebra, images: &[Vector]) -> Result<GradedMorphism, MorphError> {
        if images.len() != domain.dim() || images.iter().any(|v| v.len() != codomain.dim()) {
            return Err(MorphError::Shape {
                expected: (codomain.dim(), domain.dim()),
                found: (images.first().map_or(0, Vec::len), images.len()),
            });
        }
        let field = domain.field();
        let m = Matrix::from_columns(field, codomain.dim(), images).map_err(|e| MorphError::Precondition(e.to_string()))?;
        GradedMorphism::new(domain, codomain, m)
    }

    pub fn identity(a: &GradedAlgebra) -> GradedMorphism {
        GradedMorphism::new(a.clone(), a.clone(), Matrix::identity(a.field(), a.dim())).expect("identity is a hom")
    }

    pub fn zero(a: &GradedAlgebra, b: &GradedAlgebra) -> GradedMorphism {
        GradedMorphism::new(a.clone(), b.clone(), Matrix::zeros(a.field(), b.dim(), a.dim())).expect("zero is a hom")
    }

    /// Fails unless the morphism sends the unit to the unit (both algebras
    /// unital).
    pub fn require_unital(self) -> Result<GradedMorphism, MorphError> {
        if self.unital && self.domain.is_unital() {
            Ok(self)
        } else {
            Err(MorphError::NotUnital)
        }
    }

    pub fn domain(&self) -> &GradedAlgebra {
        &self.domain
    }

    pub fn codomain(&self) -> &GradedAlgebra {
        &self.codomain
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn field(&self) -> Field {
        self.matrix.field()
    }

    pub fn is_graded(&self) -> bool {
        self.graded
    }

    /// True when the domain is non-unital, or both are unital and the unit
    /// goes to the unit.
    pub fn is_unital(&self) -> bool {
        self.unital
    }

    /// The induced map `R → supp(codomain)` where `R` is the set of `g` with
    /// `φ(A^(g)) ≠ 0`. Empty when the morphism is not graded.
    pub fn psi(&self) -> &BTreeMap<GroupElement, GroupElement> {
        &self.psi
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        self.matrix.apply(v)
    }

    pub fn image_of_basis(&self, i: usize) -> Vector {
        self.matrix.column(i)
    }

    /// The restriction to `A^(g)`, as a matrix on the component's basis
    /// vectors.
    pub fn restricted(&self, g: &GroupElement) -> Matrix {
        self.matrix.select_columns(&self.domain.component_indices(g))
    }

    pub fn kernel(&self) -> Subspace {
        Subspace::kernel(&self.matrix)
    }

    pub fn is_injective(&self) -> bool {
        self.matrix.rank() == self.domain.dim()
    }

    pub fn is_invertible(&self) -> bool {
        self.domain.dim() == self.codomain.dim() && self.is_injective()
    }

    /// A nonzero homogeneous element of the kernel, if any.
    pub fn graded_kernel_witness(&self) -> Option<Vector> {
        self.domain.support().into_iter().find_map(|g| {
            let idx = self.domain.component_indices(&g);
            self.restricted(&g)
                .kernel_basis()
                .into_iter()
                .next()
                .map(|k| self.embed(&idx, &k))
        })
    }

    pub fn is_graded_injective(&self) -> bool {
        self.graded && self.graded_kernel_witness().is_none()
    }

    fn embed(&self, indices: &[usize], coords: &[Scalar]) -> Vector {
        let mut v = self.domain.zero();
        for (&i, c) in indices.iter().zip(coords) {
            v[i] = c.clone();
        }
        v
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &GradedMorphism) -> Result<GradedMorphism, MorphError> {
        if first.codomain != self.domain {
            return Err(MorphError::NotComposable);
        }
        let m = self.matrix.mul(&first.matrix).map_err(|_| MorphError::NotComposable)?;
        GradedMorphism::new(first.domain.clone(), self.codomain.clone(), m)
    }

    pub fn inverse(&self) -> Option<GradedMorphism> {
        if !self.is_invertible() {
            return None;
        }
        let m = self.matrix.inverse()?;
        Some(GradedMorphism::new(self.codomain.clone(), self.domain.clone(), m).expect("inverse of a hom is a hom"))
    }

    /// The monomorphism criterion: injectivity on the union of the
    /// homogeneous components. On failure returns homogeneous `a ≠ b` with
    /// `φ(a) = φ(b)`.
    pub fn mono_check(&self) -> Result<MonoVerdict, MorphError> {
        if !self.graded {
            return Err(MorphError::NotGraded);
        }
        if let Some(a) = self.graded_kernel_witness() {
            return Ok(MonoVerdict::Collision { a, b: self.domain.zero() });
        }
        let support = self.domain.support();
        for (x, g) in support.iter().enumerate() {
            for h in &support[x + 1..] {
                let (ig, ih) = (self.domain.component_indices(g), self.domain.component_indices(h));
                let minus_h = self.restricted(h);
                let neg = Matrix::zeros(self.field(), minus_h.rows(), minus_h.cols())
                    .sub(&minus_h)
                    .expect("same shape");
                let stacked = self.restricted(g).hstack(&neg).expect("same rows");
                if let Some(k) = stacked.kernel_basis().into_iter().next() {
                    let a = self.embed(&ig, &k[..ig.len()]);
                    let b = self.embed(&ih, &k[ig.len()..]);
                    return Ok(MonoVerdict::Collision { a, b });
                }
            }
        }
        Ok(MonoVerdict::Mono)
    }

    pub fn is_mono(&self) -> Result<bool, MorphError> {
        Ok(self.mono_check()? == MonoVerdict::Mono)
    }

    /// Two distinct morphisms from a one-variable polynomial algebra,
    /// `x ↦ a` and `x ↦ b`, equalized by `φ`. In tilde mode `φ` must be
    /// graded injective; when `φ(a)` is nilpotent of index `k` the source
    /// is `F[x]/(x^k)`, and both morphisms are certified graded injective.
    /// The source is unital exactly when `φ` is a unital morphism of unital
    /// algebras.
    pub fn mono_refute(&self, a: &[Scalar], b: &[Scalar], mode: MonoMode) -> Result<Refutation, MorphError> {
        let dom = &self.domain;
        if a.len() != dom.dim() || b.len() != dom.dim() {
            return Err(MorphError::Precondition("elements are not vectors of the domain".into()));
        }
        if a == b {
            return Err(MorphError::Precondition("a and b must differ".into()));
        }
        if matches!(dom.homogeneity(a), Homogeneity::Mixed) || matches!(dom.homogeneity(b), Homogeneity::Mixed) {
            return Err(MorphError::Precondition("a and b must be homogeneous".into()));
        }
        let fa = self.apply(a);
        if fa != self.apply(b) {
            return Err(MorphError::Precondition("φ(a) ≠ φ(b)".into()));
        }
        let unital = dom.is_unital() && self.unital && self.codomain.is_unital();
        let bound = self.codomain.dim() + 1;
        let source = match mode {
            MonoMode::Plain => FreeGradedAlgebra::polynomials(unital),
            MonoMode::Tilde => {
                if !self.is_graded_injective() {
                    return Err(MorphError::NotGradedInjective);
                }
                match (1..=bound).find(|&k| is_zero_vector(&self.codomain.power(&fa, k))) {
                    Some(k) => FreeGradedAlgebra::truncated_polynomials(unital, k)?,
                    None => FreeGradedAlgebra::polynomials(unital),
                }
            }
        };
        let lambda = FreeMorphism::new(source.clone(), dom.clone(), vec![a.to_vec()])?;
        let mu = FreeMorphism::new(source, dom.clone(), vec![b.to_vec()])?;
        let lambda_after = lambda.post_compose(self)?;
        let mu_after = mu.post_compose(self)?;
        if lambda == mu || lambda_after != mu_after {
            return Err(MorphError::Precondition("refutation failed to verify".into()));
        }
        if mode == MonoMode::Tilde {
            let len = lambda.source().truncation().map_or(bound, |k| k - 1);
            if !lambda.is_graded_injective(len) || !mu.is_graded_injective(len) {
                return Err(MorphError::Precondition("refuting morphisms are not graded injective".into()));
            }
        }
        Ok(Refutation { lambda, mu })
    }

    /// Renders the matrix as the images of the domain basis.
    pub fn describe(&self) -> Vec<String> {
        (0..self.domain.dim())
            .map(|i| format!("{} ↦ {}", self.domain.label(i), self.codomain.format_vector(&self.image_of_basis(i))))
            .collect()
    }

    pub(crate) fn difference(&self, other: &GradedMorphism) -> Matrix {
        self.matrix.sub(&other.matrix).expect("same shape")
    }

    pub(crate) fn embed_component(&self, g: &GroupElement, coords: &[Scalar]) -> Vector {
        self.embed(&self.domain.component_indices(g), coords)
    }
}

/// Outcome of [`GradedMorphism::mono_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonoVerdict {
    Mono,
    /// Homogeneous `a ≠ b` with `φ(a) = φ(b)`.
    Collision { a: Vector, b: Vector },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonoMode {
    /// Morphisms are arbitrary graded homomorphisms.
    Plain,
    /// Morphisms are graded injective homomorphisms.
    Tilde,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Refutation {
    pub lambda: FreeMorphism,
    pub mu: FreeMorphism,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galg::{group_algebra, matrix_algebra_elementary, quotient, Products};
    use crate::groups::{FiniteGroup, Group};

    fn augmentation(field: Field, n: usize) -> GradedMorphism {
        let a = group_algebra(field, &FiniteGroup::cyclic(n).unwrap());
        let f = group_algebra(field, &FiniteGroup::cyclic(1).unwrap());
        GradedMorphism::from_images(a.clone(), f, &vec![vec![field.one()]; n]).unwrap()
    }

    fn example_3_1(field: Field) -> GradedAlgebra {
        let products: Products = vec![
            (0, 0, vec![(0, field.one())]),
            (0, 1, vec![(1, field.one())]),
            (1, 0, vec![(1, field.one())]),
            (0, 2, vec![(2, field.one())]),
            (2, 0, vec![(2, field.one())]),
        ];
        GradedAlgebra::new_verified(
            field,
            Group::cyclic(2).unwrap(),
            vec!["1".into(), "a".into(), "b".into()],
            vec![GroupElement::Finite(0), GroupElement::Finite(1), GroupElement::Finite(1)],
            products,
            Some(vec![field.one(), field.zero(), field.zero()]),
        )
        .unwrap()
    }

    #[test]
    fn identity_on_m2() {
        let a = matrix_algebra_elementary(Field::Rational, Group::integers(), &[GroupElement::int(1), GroupElement::int(0)]).unwrap();
        let id = GradedMorphism::identity(&a);
        assert!(id.is_graded() && id.is_unital() && id.is_graded_injective());
        assert_eq!(id.psi().len(), 3);
        assert!(id.psi().iter().all(|(g, h)| g == h));
    }

    #[test]
    fn example_3_1_morphism() {
        let f = Field::Rational;
        let a = example_3_1(f);
        let phi = GradedMorphism::from_images(
            a.clone(),
            a.clone(),
            &[a.basis_vector(0), a.basis_vector(2), a.zero()],
        )
        .unwrap();
        assert!(phi.is_graded() && phi.is_unital());
        assert_eq!(phi.psi().len(), 2);
        assert_eq!(phi.graded_kernel_witness(), Some(a.basis_vector(2)));
        let sq = phi.after(&phi).unwrap();
        assert_eq!(sq.psi().len(), 1);
        assert!(sq.apply(&a.basis_vector(1)).iter().all(Scalar::is_zero));
    }

    #[test]
    fn non_hom_rejected() {
        let a = example_3_1(Field::Rational);
        let err = GradedMorphism::from_images(a.clone(), a.clone(), &[a.basis_vector(1), a.zero(), a.zero()]).unwrap_err();
        assert!(matches!(err, MorphError::NotAHom { pair: [0, 0], .. }));
    }

    #[test]
    fn augmentation_is_graded_injective_not_mono() {
        for field in [Field::Rational, Field::Prime(2), Field::Prime(3)] {
            let aug = augmentation(field, 2);
            assert!(aug.is_graded_injective());
            assert_eq!(aug.psi().len(), 2);
            let MonoVerdict::Collision { a, b } = aug.mono_check().unwrap() else {
                panic!("augmentation is not mono");
            };
            assert_eq!((a.clone(), b.clone()), (aug.domain().basis_vector(0), aug.domain().basis_vector(1)));
            for mode in [MonoMode::Plain, MonoMode::Tilde] {
                let r = aug.mono_refute(&a, &b, mode).unwrap();
                assert_ne!(r.lambda, r.mu);
                assert_eq!(r.lambda.post_compose(&aug).unwrap(), r.mu.post_compose(&aug).unwrap());
            }
        }
    }

    #[test]
    fn tilde_refutation_truncates() {
        // F1 ⊕ Fa ⊕ Fb graded by Z/3 with a, b of degrees 1, 2 and all
        // products of a, b zero, mapped onto F[t]/(t²) with a, b ↦ t
        let f = Field::Rational;
        let sq: Products = vec![
            (0, 0, vec![(0, f.one())]),
            (0, 1, vec![(1, f.one())]),
            (1, 0, vec![(1, f.one())]),
            (0, 2, vec![(2, f.one())]),
            (2, 0, vec![(2, f.one())]),
        ];
        let a = GradedAlgebra::new_verified(
            f,
            Group::cyclic(3).unwrap(),
            vec!["1".into(), "a".into(), "b".into()],
            (0..3).map(GroupElement::Finite).collect(),
            sq,
            Some(vec![f.one(), f.zero(), f.zero()]),
        )
        .unwrap();
        let products: Products = vec![
            (0, 0, vec![(0, f.one())]),
            (0, 1, vec![(1, f.one())]),
            (1, 0, vec![(1, f.one())]),
        ];
        let t = GradedAlgebra::new(
            f,
            Group::trivial(),
            vec!["1".into(), "t".into()],
            vec![Group::trivial().identity(); 2],
            products,
            Some(vec![f.one(), f.zero()]),
        )
        .unwrap();
        let phi = GradedMorphism::from_images(a.clone(), t.clone(), &[t.basis_vector(0), t.basis_vector(1), t.basis_vector(1)]).unwrap();
        assert!(phi.is_graded_injective());
        let MonoVerdict::Collision { a: x, b: y } = phi.mono_check().unwrap() else {
            panic!();
        };
        let r = phi.mono_refute(&x, &y, MonoMode::Tilde).unwrap();
        assert_eq!(r.lambda.source().truncation(), Some(2));
        assert!(r.lambda.source().is_unital());
    }

    #[test]
    fn example_5_7_projection_is_mono() {
        let f = Field::Rational;
        let z4 = Group::cyclic(4).unwrap();
        let mut products: Products = vec![(0, 0, vec![(0, f.one())])];
        for i in 1..4 {
            products.push((0, i, vec![(i, f.one())]));
            products.push((i, 0, vec![(i, f.one())]));
        }
        let a = GradedAlgebra::new_verified(
            f,
            z4,
            vec!["1".into(), "a1".into(), "a2".into(), "a3".into()],
            (0..4).map(GroupElement::Finite).collect(),
            products,
            Some(a_unit(f)),
        )
        .unwrap();
        let q = quotient(&a, &[vec![f.zero(), f.one(), f.one(), f.one()]]).unwrap();
        let pi = GradedMorphism::new(a, q.algebra, q.projection).unwrap();
        assert!(pi.is_graded() && pi.is_unital());
        assert_eq!(pi.mono_check().unwrap(), MonoVerdict::Mono);
        assert_eq!(pi.kernel().dim(), 1);
        assert!(!pi.is_injective());
    }

    fn a_unit(f: Field) -> Vector {
        vec![f.one(), f.zero(), f.zero(), f.zero()]
    }

    #[test]
    fn zero_map_is_not_graded_injective() {
        let a = example_3_1(Field::Prime(3));
        let z = GradedMorphism::zero(&a, &a);
        assert!(z.is_graded());
        assert!(!z.is_unital());
        assert!(!z.is_graded_injective());
        assert!(z.psi().is_empty());
    }
}

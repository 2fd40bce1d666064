//! The regrading functor `U_φ` and its right adjoint `K_φ`.

use super::UniversalError;
use crate::galg::{GradedAlgebra, Products};
use crate::groups::{GroupElement, GroupHom};
use crate::linalg::{is_zero_vector, Matrix, Vector};
use crate::morph::GradedMorphism;

/// `U_φ(A)`: the same algebra with `deg b` replaced by `φ(deg b)`.
pub fn regrade_along(a: &GradedAlgebra, phi: &GroupHom) -> Result<GradedAlgebra, UniversalError> {
    if phi.domain() != a.group() {
        return Err(UniversalError::Precondition("hom domain is not the grading group".into()));
    }
    let degrees = a.degrees().iter().map(|g| phi.apply(g)).collect();
    Ok(a.regrade(phi.codomain().clone(), degrees)?)
}

/// `K_φ(B)` for `φ: G → H` with `G` finite: basis `(g, b)` for `g ∈ G` and
/// `b` a basis vector of `B^(φ(g))`, product `(g₁, a)(g₂, b) = (g₁g₂, ab)`
/// and `deg (g, b) = g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pullback {
    pub algebra: GradedAlgebra,
    phi: GroupHom,
    base: GradedAlgebra,
    /// `(g, j)` for each basis vector of `K_φ(B)`.
    pairs: Vec<(usize, usize)>,
}

pub fn pullback(b: &GradedAlgebra, phi: &GroupHom) -> Result<Pullback, UniversalError> {
    if phi.codomain() != b.group() {
        return Err(UniversalError::Precondition("hom codomain is not the grading group".into()));
    }
    let Some(g) = phi.domain().as_finite() else {
        return Err(UniversalError::Precondition("K_φ needs a finite domain group".into()));
    };
    let field = b.field();
    let mut pairs = Vec::new();
    for x in 0..g.order() {
        for j in b.component_indices(&phi.apply(&GroupElement::Finite(x))) {
            pairs.push((x, j));
        }
    }
    let index = |x: usize, j: usize| pairs.iter().position(|&p| p == (x, j));
    let mut products: Products = Vec::new();
    for (p, &(x, i)) in pairs.iter().enumerate() {
        for (q, &(y, j)) in pairs.iter().enumerate() {
            let xy = g.mul(x, y);
            let coeffs: Vec<(usize, _)> = b
                .basis_product(i, j)
                .iter()
                .map(|(k, c)| (index(xy, *k).expect("product lies in the component of φ(xy)"), c.clone()))
                .collect();
            if !coeffs.is_empty() {
                products.push((p, q, coeffs));
            }
        }
    }
    let labels = pairs
        .iter()
        .map(|&(x, j)| format!("({},{})", g.label(x), b.label(j)))
        .collect();
    let degrees = pairs.iter().map(|&(x, _)| GroupElement::Finite(x)).collect();
    let unit = b.unit().map(|u| {
        let mut v = vec![field.zero(); pairs.len()];
        for (k, c) in u.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            v[index(g.identity(), k).expect("unit has identity degree")] = c.clone();
        }
        v
    });
    let algebra = GradedAlgebra::new(field, phi.domain().clone(), labels, degrees, products, unit)?;
    Ok(Pullback {
        algebra,
        phi: phi.clone(),
        base: b.clone(),
        pairs,
    })
}

impl Pullback {
    pub fn base(&self) -> &GradedAlgebra {
        &self.base
    }

    pub fn hom(&self) -> &GroupHom {
        &self.phi
    }

    /// `(g, b) ↦ b`, a homomorphism `U_φ K_φ(B) → B`.
    pub fn counit(&self) -> Result<GradedMorphism, UniversalError> {
        let source = regrade_along(&self.algebra, &self.phi)?;
        let images: Vec<Vector> = self.pairs.iter().map(|&(_, j)| self.base.basis_vector(j)).collect();
        Ok(GradedMorphism::from_images(source, self.base.clone(), &images)?)
    }

    /// `K_φ(h)`: `(g, b) ↦ (g, h(b))` for a degree-preserving `h: B → B'`.
    pub fn map(&self, h: &GradedMorphism, target: &Pullback) -> Result<GradedMorphism, UniversalError> {
        if h.domain() != &self.base || h.codomain() != &target.base || self.phi != target.phi {
            return Err(UniversalError::Precondition("morphism does not match the pullbacks".into()));
        }
        if !is_degree_preserving(h) {
            return Err(UniversalError::Precondition("morphism is not degree preserving".into()));
        }
        let images: Vec<Vector> = self
            .pairs
            .iter()
            .map(|&(x, j)| target.lift(x, &h.image_of_basis(j)))
            .collect();
        Ok(GradedMorphism::from_images(self.algebra.clone(), target.algebra.clone(), &images)?)
    }

    /// `Σ c_j (x, b_j)` for `v = Σ c_j b_j ∈ B^(φ(x))`.
    fn lift(&self, x: usize, v: &[crate::linalg::Scalar]) -> Vector {
        let mut out = self.algebra.zero();
        for (k, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let p = self.pairs.iter().position(|&p| p == (x, k)).expect("lies in the component of φ(x)");
            out[p] = c.clone();
        }
        out
    }
}

/// Same grading group and every basis vector goes into the component of
/// its own degree (or to zero).
pub fn is_degree_preserving(f: &GradedMorphism) -> bool {
    let (a, b) = (f.domain(), f.codomain());
    a.group() == b.group()
        && (0..a.dim()).all(|i| {
            let v = f.image_of_basis(i);
            is_zero_vector(&v) || b.component_indices(a.degree(i)).len() >= v.iter().filter(|c| !c.is_zero()).count()
                && v.iter().enumerate().all(|(k, c)| c.is_zero() || b.degree(k) == a.degree(i))
        })
}

/// The bijection `Alg^H(U_φ A, B) ≅ Alg^G(A, K_φ B)` for fixed `A`, `B`
/// and `φ: G → H` with `G` finite.
#[derive(Debug, Clone)]
pub struct Adjunction {
    pub source: GradedAlgebra,
    pub regraded: GradedAlgebra,
    pub pullback: Pullback,
}

impl Adjunction {
    pub fn new(a: &GradedAlgebra, b: &GradedAlgebra, phi: &GroupHom) -> Result<Adjunction, UniversalError> {
        Ok(Adjunction {
            source: a.clone(),
            regraded: regrade_along(a, phi)?,
            pullback: pullback(b, phi)?,
        })
    }

    /// `f: U_φ(A) → B` goes to `a ↦ (g, f(a))` on `a ∈ A^(g)`.
    pub fn transpose(&self, f: &GradedMorphism) -> Result<GradedMorphism, UniversalError> {
        if f.domain() != &self.regraded || f.codomain() != self.pullback.base() || !is_degree_preserving(f) {
            return Err(UniversalError::Precondition("expected a degree-preserving map U_φ(A) → B".into()));
        }
        let images: Vec<Vector> = (0..self.source.dim())
            .map(|i| match self.source.degree(i) {
                GroupElement::Finite(x) => self.pullback.lift(*x, &f.image_of_basis(i)),
                _ => unreachable!("finite grading group"),
            })
            .collect();
        Ok(GradedMorphism::from_images(self.source.clone(), self.pullback.algebra.clone(), &images)?)
    }

    /// `F: A → K_φ(B)` goes to the counit composed with `F`.
    pub fn untranspose(&self, big_f: &GradedMorphism) -> Result<GradedMorphism, UniversalError> {
        if big_f.domain() != &self.source || big_f.codomain() != &self.pullback.algebra || !is_degree_preserving(big_f) {
            return Err(UniversalError::Precondition("expected a degree-preserving map A → K_φ(B)".into()));
        }
        let counit = self.pullback.counit()?;
        let m: Matrix = counit.matrix().mul(big_f.matrix()).expect("shapes agree");
        Ok(GradedMorphism::new(self.regraded.clone(), self.pullback.base().clone(), m)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galg::{group_algebra, matrix_algebra_elementary};
    use crate::groups::{FiniteGroup, Group};
    use crate::linalg::Field;
    use crate::morph::check_isomorphism;

    #[test]
    fn push_m2_to_z2() {
        let a = matrix_algebra_elementary(Field::Rational, Group::integers(), &[GroupElement::int(1), GroupElement::int(0)]).unwrap();
        let z2 = Group::cyclic(2).unwrap();
        let phi = GroupHom::new(Group::integers(), z2, vec![GroupElement::Finite(1)]).unwrap();
        let u = regrade_along(&a, &phi).unwrap();
        assert!(u.verify_grading().is_ok());
        assert_eq!(u.degree(1), &GroupElement::Finite(1));
        assert_eq!(u.degree(2), &GroupElement::Finite(1));
        assert_eq!(u.support().len(), 2);
        assert_eq!(regrade_along(&a, &GroupHom::identity(a.group())).unwrap(), a);
    }

    #[test]
    fn pullback_of_field_is_group_algebra() {
        let f = Field::Prime(3);
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let one = Group::trivial();
        let b = group_algebra(f, &FiniteGroup::cyclic(1).unwrap());
        let phi = GroupHom::trivial(&Group::finite(z2.clone()), &one);
        let k = pullback(&b, &phi).unwrap();
        assert_eq!(k.algebra.dim(), 2);
        assert!(k.algebra.verify_grading().is_ok());
        let fz2 = group_algebra(f, &z2);
        let iso = GradedMorphism::from_images(fz2.clone(), k.algebra.clone(), &[k.algebra.basis_vector(0), k.algebra.basis_vector(1)]).unwrap();
        assert!(check_isomorphism(&iso).unwrap());
    }

    #[test]
    fn pullback_along_identity() {
        let f = Field::Prime(2);
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let b = group_algebra(f, &s3);
        let k = pullback(&b, &GroupHom::identity(b.group())).unwrap();
        assert_eq!(k.algebra.dim(), 6);
        let iso = GradedMorphism::from_images(b.clone(), k.algebra.clone(), &(0..6).map(|i| k.algebra.basis_vector(i)).collect::<Vec<_>>()).unwrap();
        assert!(check_isomorphism(&iso).unwrap());
    }

    #[test]
    fn transpose_round_trip() {
        let f = Field::Prime(2);
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let a = group_algebra(f, &z2);
        let b = group_algebra(f, &FiniteGroup::cyclic(1).unwrap());
        let phi = GroupHom::trivial(a.group(), b.group());
        let adj = Adjunction::new(&a, &b, &phi).unwrap();
        let aug = GradedMorphism::from_images(adj.regraded.clone(), b.clone(), &[vec![f.one()], vec![f.one()]]).unwrap();
        let t = adj.transpose(&aug).unwrap();
        assert!(t.is_unital());
        assert_eq!(adj.untranspose(&t).unwrap(), aug);
        let zero = GradedMorphism::zero(&adj.regraded, &b);
        assert_eq!(adj.transpose(&zero).unwrap(), GradedMorphism::zero(&a, &adj.pullback.algebra));
    }
}

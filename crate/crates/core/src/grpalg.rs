//! Group algebras: homomorphisms between them and products in the
//! graded-injective category.

use num_integer::Integer;

use crate::galg::{group_algebra, GradedAlgebra};
use crate::groups::{FiniteGroup, Group, GroupElement, GroupError, GroupHom};
use crate::linalg::{is_zero_vector, support_indices, Field, Matrix, Scalar, Vector};
use crate::morph::{GradedMorphism, MorphError};

/// Largest number of matrices [`exhaustive_homs`] will visit.
pub const EXHAUSTIVE_LIMIT: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GrpAlgError {
    #[error("{0} is not a standard group algebra")]
    NotStandard(&'static str),
    #[error("the zero map has no decomposition")]
    Zero,
    #[error("morphism is not graded")]
    NotGraded,
    #[error("morphism is not graded injective")]
    NotGradedInjective,
    #[error("component of degree {0} has dimension greater than one")]
    ComponentTooLarge(String),
    #[error("{0}")]
    Unsupported(String),
    #[error("{0}")]
    Precondition(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Morph(#[from] MorphError),
}

/// Whether every homomorphism `G → F^×` is trivial. Over `Q` the finite
/// subgroups of `Q^×` are `1` and `{±1}`, so this is oddness of `|G^ab|`.
/// Over `GF(p)` it is `gcd(exp G^ab, p − 1) = 1`.
pub fn one_dim_char_trivial(g: &FiniteGroup, field: Field) -> bool {
    let (order, exponent) = g.abelianization_order_and_exponent();
    match field {
        Field::Rational => order % 2 == 1,
        Field::Prime(p) => (exponent as u64).gcd(&(p - 1)) == 1,
    }
}

/// The same test for the field with `q` elements, `q` any prime power.
pub fn one_dim_char_trivial_q(g: &FiniteGroup, q: u64) -> bool {
    let (_, exponent) = g.abelianization_order_and_exponent();
    (exponent as u64).gcd(&(q - 1)) == 1
}

/// `|Hom(G, GF(p)^×)|`, counted as homomorphisms into the cyclic group of
/// order `p − 1`.
pub fn character_count(g: &FiniteGroup, p: u64) -> Result<usize, GrpAlgError> {
    let units = FiniteGroup::cyclic((p - 1) as usize)?;
    Ok(crate::groups::enumerate_homs(g, &units)?.len())
}

/// The finite group of `a` when `a` is exactly `group_algebra(F, G)`.
pub fn standard_group(a: &GradedAlgebra) -> Option<FiniteGroup> {
    let g = a.group().as_finite()?;
    (*a == group_algebra(a.field(), g)).then(|| g.clone())
}

/// `φ(u_g) = α(g) u_{ψ(g)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedHomDecomposition {
    pub psi: GroupHom,
    pub alpha: Vec<Scalar>,
}

impl GradedHomDecomposition {
    pub fn alpha_is_trivial(&self) -> bool {
        self.alpha.iter().all(Scalar::is_one)
    }

    /// Rebuilds the morphism `u_g ↦ α(g) u_{ψ(g)}`.
    pub fn reconstruct(&self, fg: &GradedAlgebra, fh: &GradedAlgebra) -> Result<GradedMorphism, GrpAlgError> {
        let images: Vec<Vector> = self
            .alpha
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let mut v = fh.zero();
                v[finite_index(&self.psi.apply(&GroupElement::Finite(i)))] = a.clone();
                v
            })
            .collect();
        Ok(GradedMorphism::from_images(fg.clone(), fh.clone(), &images)?)
    }
}

fn finite_index(x: &GroupElement) -> usize {
    match x {
        GroupElement::Finite(i) => *i,
        _ => unreachable!("finite group element"),
    }
}

/// Splits a nonzero graded homomorphism `FG → FH` into `(ψ, α)`, checking
/// that every `φ(u_g)` is nonzero, `ψ` is a homomorphism and `α` is
/// multiplicative.
pub fn extract_u(phi: &GradedMorphism) -> Result<GradedHomDecomposition, GrpAlgError> {
    let g = standard_group(phi.domain()).ok_or(GrpAlgError::NotStandard("domain"))?;
    let h = standard_group(phi.codomain()).ok_or(GrpAlgError::NotStandard("codomain"))?;
    if phi.matrix().is_zero() {
        return Err(GrpAlgError::Zero);
    }
    if !phi.is_graded() {
        return Err(GrpAlgError::NotGraded);
    }
    let mut images = Vec::with_capacity(g.order());
    let mut alpha = Vec::with_capacity(g.order());
    for i in 0..g.order() {
        let v = phi.image_of_basis(i);
        let nz = support_indices(&v);
        if nz.len() != 1 {
            return Err(GrpAlgError::Precondition(format!("φ(u_{}) is not a nonzero multiple of some u_h", g.label(i))));
        }
        images.push(GroupElement::Finite(nz[0]));
        alpha.push(v[nz[0]].clone());
    }
    let psi = GroupHom::new(Group::finite(g.clone()), Group::finite(h), images)?;
    for a in 0..g.order() {
        for b in 0..g.order() {
            if alpha[g.mul(a, b)] != &alpha[a] * &alpha[b] {
                return Err(GrpAlgError::Precondition("α is not multiplicative".into()));
            }
        }
    }
    Ok(GradedHomDecomposition { psi, alpha })
}

/// `ψ ↦ (u_g ↦ u_{ψ(g)})`.
pub fn theta_backward(field: Field, psi: &GroupHom) -> Result<GradedMorphism, GrpAlgError> {
    let (Some(g), Some(h)) = (psi.domain().as_finite(), psi.codomain().as_finite()) else {
        return Err(GrpAlgError::Precondition("finite groups expected".into()));
    };
    let d = GradedHomDecomposition {
        psi: psi.clone(),
        alpha: vec![field.one(); g.order()],
    };
    d.reconstruct(&group_algebra(field, g), &group_algebra(field, h))
}

/// `φ ↦ ψ`, defined when `G` has no nontrivial one-dimensional
/// characters; then `α` is trivial and is checked to be so.
pub fn theta_forward(phi: &GradedMorphism) -> Result<GroupHom, GrpAlgError> {
    let g = standard_group(phi.domain()).ok_or(GrpAlgError::NotStandard("domain"))?;
    if !one_dim_char_trivial(&g, phi.field()) {
        return Err(GrpAlgError::Precondition("G has a nontrivial one-dimensional character".into()));
    }
    let d = extract_u(phi)?;
    if !d.alpha_is_trivial() {
        return Err(GrpAlgError::Precondition("α is not trivial".into()));
    }
    Ok(d.psi)
}

/// Every homomorphism `a → b` over a finite field, by visiting all
/// `q^(dim a · dim b)` matrices.
pub fn exhaustive_homs(a: &GradedAlgebra, b: &GradedAlgebra) -> Result<Vec<GradedMorphism>, GrpAlgError> {
    let field = a.field();
    let Some(elements) = field.elements() else {
        return Err(GrpAlgError::Unsupported("exhaustive scan needs a finite field".into()));
    };
    let cells = (a.dim() * b.dim()) as u32;
    let q = elements.len() as u64;
    if q.checked_pow(cells).is_none_or(|n| n > EXHAUSTIVE_LIMIT) {
        return Err(GrpAlgError::Unsupported(format!("{q}^{cells} matrices exceed the scan limit")));
    }
    let mut out = Vec::new();
    let mut digits = vec![0usize; cells as usize];
    loop {
        let mut m = Matrix::zeros(field, b.dim(), a.dim());
        for (k, &d) in digits.iter().enumerate() {
            m.set(k / a.dim(), k % a.dim(), elements[d].clone());
        }
        if let Ok(f) = GradedMorphism::new(a.clone(), b.clone(), m) {
            out.push(f);
        }
        if !increment(&mut digits, elements.len()) {
            return Ok(out);
        }
    }
}

fn increment(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// The nonzero graded homomorphisms `a → b` between algebras whose
/// components are at most one-dimensional, over a finite field. A graded
/// map sends each basis vector to a multiple of a single basis vector, so
/// backtracking over those columns is exhaustive.
pub fn nonzero_graded_homs(a: &GradedAlgebra, b: &GradedAlgebra) -> Result<Vec<GradedMorphism>, GrpAlgError> {
    for alg in [a, b] {
        if let Some(g) = alg.support().into_iter().find(|g| alg.component_indices(g).len() > 1) {
            return Err(GrpAlgError::ComponentTooLarge(alg.group().label(&g)));
        }
    }
    let Some(elements) = a.field().elements() else {
        return Err(GrpAlgError::Unsupported("graded hom enumeration needs a finite field".into()));
    };
    let mut columns = vec![b.zero()];
    for k in 0..b.dim() {
        for c in elements.iter().filter(|c| !c.is_zero()) {
            let mut v = b.zero();
            v[k] = c.clone();
            columns.push(v);
        }
    }
    let mut out = Vec::new();
    let mut chosen: Vec<Vector> = Vec::new();
    extend_columns(a, b, &columns, &mut chosen, &mut out);
    Ok(out)
}

fn extend_columns(a: &GradedAlgebra, b: &GradedAlgebra, columns: &[Vector], chosen: &mut Vec<Vector>, out: &mut Vec<GradedMorphism>) {
    let n = chosen.len();
    if n == a.dim() {
        if chosen.iter().any(|v| !is_zero_vector(v)) {
            let f = GradedMorphism::from_images(a.clone(), b.clone(), chosen).expect("checked on every pair");
            out.push(f);
        }
        return;
    }
    'next: for col in columns {
        chosen.push(col.clone());
        for i in 0..=n {
            for j in 0..=n {
                if i != n && j != n {
                    continue;
                }
                let prod = a.basis_product(i, j);
                if prod.iter().any(|(k, _)| *k > n) {
                    continue;
                }
                let lhs = prod.iter().fold(b.zero(), |acc, (k, c)| {
                    acc.iter().zip(&chosen[*k]).map(|(x, y)| x + &(c * y)).collect()
                });
                if lhs != b.multiply(&chosen[i], &chosen[j]) {
                    chosen.pop();
                    continue 'next;
                }
            }
        }
        extend_columns(a, b, columns, chosen, out);
        chosen.pop();
    }
}

/// `F(F^× × G × H)` over `GF(q)` with `F^×` realized as the cyclic group
/// generated by `ω`, the smallest primitive residue. Element `(k, g, h)`
/// stands for `(ω^k, g, h)` and carries the label `(ω^k, g, h)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TildeProduct {
    pub algebra: GradedAlgebra,
    pub pi1: GradedMorphism,
    pub pi2: GradedMorphism,
    g: FiniteGroup,
    h: FiniteGroup,
    powers: Vec<Scalar>,
}

pub fn tilde_product(field: Field, g: &FiniteGroup, h: &FiniteGroup) -> Result<TildeProduct, GrpAlgError> {
    let Some(omega) = field.primitive_element() else {
        return Err(GrpAlgError::Unsupported("the multiplicative group of Q is infinite".into()));
    };
    let q1 = field.size().expect("finite field") as usize - 1;
    let powers: Vec<Scalar> = (0..q1 as u64).map(|k| omega.pow(k)).collect();
    let c = FiniteGroup::cyclic(q1)?;
    let raw = FiniteGroup::product(&FiniteGroup::product(&c, g), h);
    let (m, n) = (g.order(), h.order());
    let labels = (0..raw.order())
        .map(|x| format!("({},{},{})", powers[x / (m * n)], g.label((x / n) % m), h.label(x % n)).replace("/1", ""))
        .collect();
    let table = raw.table().to_vec();
    let group = FiniteGroup::from_table(table, raw.identity(), labels)?;
    let algebra = group_algebra(field, &group);
    let (fg, fh) = (group_algebra(field, g), group_algebra(field, h));
    let mut im1 = Vec::with_capacity(group.order());
    let mut im2 = Vec::with_capacity(group.order());
    for x in 0..group.order() {
        let mut v = fg.zero();
        v[(x / n) % m] = powers[x / (m * n)].clone();
        im1.push(v);
        let mut w = fh.zero();
        w[x % n] = field.one();
        im2.push(w);
    }
    let pi1 = GradedMorphism::from_images(algebra.clone(), fg, &im1)?;
    let pi2 = GradedMorphism::from_images(algebra.clone(), fh, &im2)?;
    Ok(TildeProduct {
        algebra,
        pi1,
        pi2,
        g: g.clone(),
        h: h.clone(),
        powers,
    })
}

impl TildeProduct {
    /// Basis index of `u_(ω^k, g, h)`.
    pub fn index(&self, k: usize, g: usize, h: usize) -> usize {
        (k * self.g.order() + g) * self.h.order() + h
    }

    fn log(&self, x: &Scalar) -> usize {
        self.powers.iter().position(|p| p == x).expect("nonzero residue")
    }

    fn check_cone(&self, phi1: &GradedMorphism, phi2: &GradedMorphism) -> Result<(), GrpAlgError> {
        if phi1.domain() != phi2.domain() || phi1.codomain() != self.pi1.codomain() || phi2.codomain() != self.pi2.codomain() {
            return Err(GrpAlgError::Precondition("not a cone over FG and FH".into()));
        }
        if !phi1.is_graded_injective() || !phi2.is_graded_injective() {
            return Err(GrpAlgError::NotGradedInjective);
        }
        let a = phi1.domain();
        if let Some(g) = a.support().into_iter().find(|g| a.component_indices(g).len() > 1) {
            return Err(GrpAlgError::ComponentTooLarge(a.group().label(&g)));
        }
        Ok(())
    }

    /// The mediating morphism `a ↦ μ u_(λ/μ, g, h)` where `φ₁(a) = λ u_g`
    /// and `φ₂(a) = μ u_h` on each homogeneous basis vector `a`.
    pub fn mediate(&self, phi1: &GradedMorphism, phi2: &GradedMorphism) -> Result<GradedMorphism, GrpAlgError> {
        self.check_cone(phi1, phi2)?;
        let a = phi1.domain();
        let images: Vec<Vector> = (0..a.dim())
            .map(|i| {
                let (v1, v2) = (phi1.image_of_basis(i), phi2.image_of_basis(i));
                let (g, h) = (support_indices(&v1)[0], support_indices(&v2)[0]);
                let (lambda, mu) = (&v1[g], &v2[h]);
                let mut v = self.algebra.zero();
                v[self.index(self.log(&lambda.checked_div(mu).expect("μ ≠ 0")), g, h)] = mu.clone();
                v
            })
            .collect();
        let phi = GradedMorphism::from_images(a.clone(), self.algebra.clone(), &images)?;
        if !phi.is_graded_injective()
            || self.pi1.after(&phi)?.matrix() != phi1.matrix()
            || self.pi2.after(&phi)?.matrix() != phi2.matrix()
        {
            return Err(GrpAlgError::Precondition("mediating morphism failed its checks".into()));
        }
        Ok(phi)
    }

    /// All graded injective `φ: A → P` with `π₁φ = φ₁` and `π₂φ = φ₂`.
    /// Components of `P` are one-dimensional, so such a `φ` sends each
    /// basis vector of `A` to a nonzero multiple of some `u_(α,g,h)`; the
    /// scan runs over every such matrix.
    pub fn commuting_graded_injective(&self, phi1: &GradedMorphism, phi2: &GradedMorphism) -> Result<Vec<GradedMorphism>, GrpAlgError> {
        self.check_cone(phi1, phi2)?;
        let a = phi1.domain();
        let field = a.field();
        let mut candidates: Vec<Vec<Vector>> = Vec::with_capacity(a.dim());
        for i in 0..a.dim() {
            let mut cols = Vec::new();
            for k in 0..self.algebra.dim() {
                for c in field.elements().expect("finite field").into_iter().filter(|c| !c.is_zero()) {
                    let mut v = self.algebra.zero();
                    v[k] = c;
                    if self.pi1.apply(&v) == phi1.image_of_basis(i) && self.pi2.apply(&v) == phi2.image_of_basis(i) {
                        cols.push(v);
                    }
                }
            }
            candidates.push(cols);
        }
        let mut out = Vec::new();
        let mut digits = vec![0usize; a.dim()];
        if candidates.iter().any(Vec::is_empty) {
            return Ok(out);
        }
        loop {
            let cols: Vec<Vector> = digits.iter().zip(&candidates).map(|(&d, c)| c[d].clone()).collect();
            if let Ok(f) = GradedMorphism::from_images(a.clone(), self.algebra.clone(), &cols) {
                if f.is_graded_injective() {
                    out.push(f);
                }
            }
            let mut carried = true;
            for (d, c) in digits.iter_mut().zip(&candidates) {
                *d += 1;
                if *d < c.len() {
                    carried = false;
                    break;
                }
                *d = 0;
            }
            if carried {
                return Ok(out);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::enumerate_homs;

    fn z(n: usize) -> FiniteGroup {
        FiniteGroup::cyclic(n).unwrap()
    }

    #[test]
    fn character_conditions() {
        assert!(one_dim_char_trivial(&z(3), Field::Prime(2)));
        assert!(!one_dim_char_trivial(&z(2), Field::Rational));
        assert!(one_dim_char_trivial(&z(3), Field::Rational));
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert!(one_dim_char_trivial_q(&s3, 4));
        assert!(!one_dim_char_trivial(&s3, Field::Prime(3)));
        for p in [2u64, 3, 5, 7] {
            for g in [z(1), z(2), z(3), z(4), z(6), s3.clone(), FiniteGroup::dihedral(4).unwrap()] {
                assert_eq!(one_dim_char_trivial(&g, Field::Prime(p)), character_count(&g, p).unwrap() == 1);
            }
        }
    }

    #[test]
    fn decompositions() {
        let f = Field::Rational;
        let fz2 = group_algebra(f, &z(2));
        let id = GradedMorphism::identity(&fz2);
        let d = extract_u(&id).unwrap();
        assert!(d.alpha_is_trivial());
        assert_eq!(d.psi, GroupHom::identity(fz2.group()));
        let sign = GradedMorphism::from_images(fz2.clone(), fz2.clone(), &[vec![f.one(), f.zero()], vec![f.zero(), f.from_i64(-1)]]).unwrap();
        let d = extract_u(&sign).unwrap();
        assert_eq!(d.alpha, vec![f.one(), f.from_i64(-1)]);
        assert_eq!(d.reconstruct(&fz2, &fz2).unwrap(), sign);
        assert!(theta_forward(&sign).is_err());
        assert_eq!(extract_u(&GradedMorphism::zero(&fz2, &fz2)), Err(GrpAlgError::Zero));
    }

    #[test]
    fn z3_over_gf2_scan() {
        let f = Field::Prime(2);
        let a = group_algebra(f, &z(3));
        let all = exhaustive_homs(&a, &a).unwrap();
        let nonzero: Vec<_> = all.into_iter().filter(|m| m.is_graded() && !m.matrix().is_zero()).collect();
        assert_eq!(nonzero.len(), 3);
        let backtracked = nonzero_graded_homs(&a, &a).unwrap();
        assert_eq!(backtracked.len(), 3);
        assert!(backtracked.iter().all(|m| nonzero.contains(m)));
        for m in &nonzero {
            let d = extract_u(m).unwrap();
            assert!(d.alpha_is_trivial());
            assert!(m.is_unital());
            assert_eq!(&theta_backward(f, &theta_forward(m).unwrap()).unwrap(), m);
        }
        let b = group_algebra(f, &z(2));
        assert_eq!(nonzero_graded_homs(&a, &b).unwrap().len(), 1);
    }

    #[test]
    fn theta_is_a_bijection() {
        let groups = [z(1), z(2), z(3), z(4), FiniteGroup::symmetric(3).unwrap()];
        for f in [Field::Prime(2), Field::Prime(3)] {
            for g in &groups {
                if !one_dim_char_trivial(g, f) {
                    continue;
                }
                for h in &groups {
                    let (fg, fh) = (group_algebra(f, g), group_algebra(f, h));
                    let homs = nonzero_graded_homs(&fg, &fh).unwrap();
                    let psis = enumerate_homs(g, h).unwrap();
                    assert_eq!(homs.len(), psis.len());
                    for m in &homs {
                        assert!(m.is_unital());
                        assert_eq!(&theta_backward(f, &theta_forward(m).unwrap()).unwrap(), m);
                    }
                    for p in &psis {
                        assert_eq!(&theta_forward(&theta_backward(f, p).unwrap()).unwrap(), p);
                    }
                }
            }
        }
    }

    #[test]
    fn tilde_product_shape() {
        let f = Field::Prime(3);
        let p = tilde_product(f, &z(2), &z(2)).unwrap();
        assert_eq!(p.algebra.dim(), 8);
        assert_eq!(p.algebra.support().len(), 8);
        assert!(p.pi1.is_graded_injective() && p.pi2.is_graded_injective());
        assert_eq!(p.algebra.label(p.index(1, 1, 0)), "u_(2,1,0)");
        let p2 = tilde_product(Field::Prime(2), &z(2), &z(3)).unwrap();
        assert_eq!(p2.algebra.dim(), 6);
        assert!(tilde_product(Field::Rational, &z(2), &z(2)).is_err());
    }

    #[test]
    fn mediate_marginals() {
        let f = Field::Prime(3);
        let (g, h) = (z(2), z(2));
        let p = tilde_product(f, &g, &h).unwrap();
        let gh = FiniteGroup::product(&g, &h);
        let a = group_algebra(f, &gh);
        let (fg, fh) = (group_algebra(f, &g), group_algebra(f, &h));
        let phi1 = GradedMorphism::from_images(a.clone(), fg.clone(), &(0..4).map(|x| fg.basis_vector(x / 2)).collect::<Vec<_>>()).unwrap();
        let phi2 = GradedMorphism::from_images(a.clone(), fh.clone(), &(0..4).map(|x| fh.basis_vector(x % 2)).collect::<Vec<_>>()).unwrap();
        let m = p.mediate(&phi1, &phi2).unwrap();
        for x in 0..4 {
            assert_eq!(m.image_of_basis(x), p.algebra.basis_vector(p.index(0, x / 2, x % 2)));
        }
        assert_eq!(p.commuting_graded_injective(&phi1, &phi2).unwrap(), vec![m]);
    }

    #[test]
    fn mediate_from_the_field() {
        let f = Field::Prime(3);
        let p = tilde_product(f, &z(2), &z(2)).unwrap();
        let k = group_algebra(f, &z(1));
        let (fg, fh) = (p.pi1.codomain().clone(), p.pi2.codomain().clone());
        let phi1 = GradedMorphism::from_images(k.clone(), fg.clone(), &[fg.basis_vector(0)]).unwrap();
        let phi2 = GradedMorphism::from_images(k.clone(), fh.clone(), &[fh.basis_vector(0)]).unwrap();
        let m = p.mediate(&phi1, &phi2).unwrap();
        assert_eq!(m.image_of_basis(0), p.algebra.basis_vector(p.index(0, 0, 0)));
    }
}

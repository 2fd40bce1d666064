//! The category of support triples `(G, S, P)` and the oplax map `L` from
//! graded algebras into it.

use std::collections::{BTreeMap, BTreeSet};

use crate::galg::GradedAlgebra;
use crate::groups::{Group, GroupElement};
use crate::linalg::is_zero_vector;
use crate::morph::GradedMorphism;

pub type PairSet = BTreeSet<(GroupElement, GroupElement)>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{0}")]
pub struct TripleError(pub String);

/// An object `(G, S, P)`: `S ⊆ G`, `P ⊆ S × S` and `gh ∈ S` for
/// `(g, h) ∈ P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportTriple {
    group: Group,
    support: BTreeSet<GroupElement>,
    pairs: PairSet,
}

impl SupportTriple {
    pub fn new(group: Group, support: BTreeSet<GroupElement>, pairs: PairSet) -> Result<SupportTriple, TripleError> {
        if let Some(g) = support.iter().find(|g| !group.contains(g)) {
            return Err(TripleError(format!("{} is not in the group", group.label(g))));
        }
        for (g, h) in &pairs {
            if !support.contains(g) || !support.contains(h) {
                return Err(TripleError("pair outside S × S".into()));
            }
            if !support.contains(&group.multiply(g, h)) {
                return Err(TripleError(format!(
                    "product of ({}, {}) is not in S",
                    group.label(g),
                    group.label(h)
                )));
            }
        }
        Ok(SupportTriple { group, support, pairs })
    }

    /// `L(A) = (G, supp A, P(A))`.
    pub fn of_algebra(a: &GradedAlgebra) -> SupportTriple {
        SupportTriple::new(a.group().clone(), a.support().into_iter().collect(), a.pair_set())
            .expect("support and pair set of a graded algebra form a triple")
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn support(&self) -> &BTreeSet<GroupElement> {
        &self.support
    }

    pub fn pairs(&self) -> &PairSet {
        &self.pairs
    }
}

/// A morphism `(ψ, R, Q)`; `R` is the domain of `ψ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleMorphism {
    domain: SupportTriple,
    codomain: SupportTriple,
    psi: BTreeMap<GroupElement, GroupElement>,
    q: PairSet,
}

impl TripleMorphism {
    /// Validates `R ⊆ S₁`, `ψ(R) ⊆ S₂`, `Q ⊆ P₁ ∩ (R × R)`, `gh ∈ R`,
    /// `ψ(g)ψ(h) = ψ(gh)` and `(ψ(g), ψ(h)) ∈ P₂` for `(g, h) ∈ Q`.
    pub fn new(
        domain: SupportTriple,
        codomain: SupportTriple,
        psi: BTreeMap<GroupElement, GroupElement>,
        q: PairSet,
    ) -> Result<TripleMorphism, TripleError> {
        for (g, h) in &psi {
            if !domain.support.contains(g) {
                return Err(TripleError(format!("{} ∈ R is not in S₁", domain.group.label(g))));
            }
            if !codomain.support.contains(h) {
                return Err(TripleError(format!("ψ({}) is not in S₂", domain.group.label(g))));
            }
        }
        let (g1, g2) = (&domain.group, &codomain.group);
        for (g, h) in &q {
            if !domain.pairs.contains(&(g.clone(), h.clone())) {
                return Err(TripleError("Q is not contained in P₁".into()));
            }
            let (Some(x), Some(y)) = (psi.get(g), psi.get(h)) else {
                return Err(TripleError("Q is not contained in R × R".into()));
            };
            let Some(z) = psi.get(&g1.multiply(g, h)) else {
                return Err(TripleError(format!("{}·{} is not in R", g1.label(g), g1.label(h))));
            };
            if g2.multiply(x, y) != *z {
                return Err(TripleError(format!("ψ is not multiplicative on ({}, {})", g1.label(g), g1.label(h))));
            }
            if !codomain.pairs.contains(&(x.clone(), y.clone())) {
                return Err(TripleError("ψ(Q) is not contained in P₂".into()));
            }
        }
        Ok(TripleMorphism {
            domain,
            codomain,
            psi,
            q,
        })
    }

    /// `(id_S, S, P)`.
    pub fn identity(t: &SupportTriple) -> TripleMorphism {
        TripleMorphism {
            domain: t.clone(),
            codomain: t.clone(),
            psi: t.support.iter().map(|g| (g.clone(), g.clone())).collect(),
            q: t.pairs.clone(),
        }
    }

    /// `L(φ)`: `R` is the set of `g` with `φ(A^(g)) ≠ 0`, `ψ` the induced
    /// map, and `Q` the pairs in `R × R` with `φ(A^(g₁))φ(A^(g₂)) ≠ 0`.
    pub fn of_morphism(phi: &GradedMorphism) -> Result<TripleMorphism, TripleError> {
        if !phi.is_graded() {
            return Err(TripleError("morphism is not graded".into()));
        }
        let (a, b) = (phi.domain(), phi.codomain());
        let psi = phi.psi().clone();
        let mut q = PairSet::new();
        for g in psi.keys() {
            for h in psi.keys() {
                let nonzero = a.component_indices(g).iter().any(|&i| {
                    a.component_indices(h).iter().any(|&j| {
                        !is_zero_vector(&b.multiply(&phi.image_of_basis(i), &phi.image_of_basis(j)))
                    })
                });
                if nonzero {
                    q.insert((g.clone(), h.clone()));
                }
            }
        }
        TripleMorphism::new(SupportTriple::of_algebra(a), SupportTriple::of_algebra(b), psi, q)
    }

    pub fn domain(&self) -> &SupportTriple {
        &self.domain
    }

    pub fn codomain(&self) -> &SupportTriple {
        &self.codomain
    }

    pub fn psi(&self) -> &BTreeMap<GroupElement, GroupElement> {
        &self.psi
    }

    pub fn r(&self) -> BTreeSet<GroupElement> {
        self.psi.keys().cloned().collect()
    }

    pub fn q(&self) -> &PairSet {
        &self.q
    }

    /// `self ∘ first`: `R = {g ∈ R₁ | ψ₁(g) ∈ R₂}`,
    /// `Q = {(g, h) ∈ Q₁ | (ψ₁g, ψ₁h) ∈ Q₂}`, `ψ = ψ₂ψ₁`.
    pub fn after(&self, first: &TripleMorphism) -> Result<TripleMorphism, TripleError> {
        if first.codomain != self.domain {
            return Err(TripleError("morphisms are not composable".into()));
        }
        let psi: BTreeMap<GroupElement, GroupElement> = first
            .psi
            .iter()
            .filter_map(|(g, h)| self.psi.get(h).map(|k| (g.clone(), k.clone())))
            .collect();
        let q = first
            .q
            .iter()
            .filter(|(g, h)| self.q.contains(&(first.psi[g].clone(), first.psi[h].clone())))
            .cloned()
            .collect();
        TripleMorphism::new(first.domain.clone(), self.codomain.clone(), psi, q)
    }

    /// `self ≼ other`: `R₁ ⊆ R₂`, `Q₁ ⊆ Q₂` and `ψ₁ = ψ₂|R₁`.
    pub fn leq(&self, other: &TripleMorphism) -> bool {
        self.domain == other.domain
            && self.codomain == other.codomain
            && self.q.is_subset(&other.q)
            && self.psi.iter().all(|(g, h)| other.psi.get(g) == Some(h))
    }

    /// What `self` is missing relative to a larger morphism `other`, or
    /// `None` unless `self ≼ other`.
    pub fn defect(&self, other: &TripleMorphism) -> Option<Defect> {
        if !self.leq(other) {
            return None;
        }
        Some(Defect {
            missing_r: other.psi.keys().filter(|g| !self.psi.contains_key(g)).cloned().collect(),
            missing_q: other.q.difference(&self.q).cloned().collect(),
        })
    }
}

/// The gap between two comparable triple morphisms.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Defect {
    pub missing_r: BTreeSet<GroupElement>,
    pub missing_q: PairSet,
}

impl Defect {
    pub fn is_empty(&self) -> bool {
        self.missing_r.is_empty() && self.missing_q.is_empty()
    }
}

/// Checks `L(φ₁ ∘ φ₂) ≼ L(φ₁) ∘ L(φ₂)` and returns the defect.
pub fn oplax_defect(phi1: &GradedMorphism, phi2: &GradedMorphism) -> Result<Option<Defect>, TripleError> {
    let composite = phi1.after(phi2).map_err(|e| TripleError(e.to_string()))?;
    let lower = TripleMorphism::of_morphism(&composite)?;
    let upper = TripleMorphism::of_morphism(phi1)?.after(&TripleMorphism::of_morphism(phi2)?)?;
    Ok(lower.defect(&upper))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galg::{group_algebra, zero_algebra, Products};
    use crate::groups::FiniteGroup;
    use crate::linalg::Field;

    fn example_3_1() -> (GradedAlgebra, GradedMorphism) {
        let f = Field::Rational;
        let products: Products = vec![
            (0, 0, vec![(0, f.one())]),
            (0, 1, vec![(1, f.one())]),
            (1, 0, vec![(1, f.one())]),
            (0, 2, vec![(2, f.one())]),
            (2, 0, vec![(2, f.one())]),
        ];
        let a = GradedAlgebra::new_verified(
            f,
            Group::cyclic(2).unwrap(),
            vec!["1".into(), "a".into(), "b".into()],
            vec![GroupElement::Finite(0), GroupElement::Finite(1), GroupElement::Finite(1)],
            products,
            Some(vec![f.one(), f.zero(), f.zero()]),
        )
        .unwrap();
        let phi = GradedMorphism::from_images(a.clone(), a.clone(), &[a.basis_vector(0), a.basis_vector(2), a.zero()]).unwrap();
        (a, phi)
    }

    #[test]
    fn strict_oplax_defect() {
        let (a, phi) = example_3_1();
        let l = TripleMorphism::of_morphism(&phi).unwrap();
        let (e, o) = (GroupElement::Finite(0), GroupElement::Finite(1));
        assert_eq!(l.r(), BTreeSet::from([e.clone(), o.clone()]));
        assert_eq!(l.q().len(), 3);
        assert!(!l.q().contains(&(o.clone(), o.clone())));
        assert_eq!(l.after(&l).unwrap(), l);
        let l2 = TripleMorphism::of_morphism(&phi.after(&phi).unwrap()).unwrap();
        assert_eq!(l2.r(), BTreeSet::from([e.clone()]));
        assert_eq!(l2.q(), &BTreeSet::from([(e.clone(), e.clone())]));
        let d = oplax_defect(&phi, &phi).unwrap().unwrap();
        assert_eq!(d.missing_r, BTreeSet::from([o]));
        assert!(!d.is_empty());
        assert!(!l.leq(&l2));
        assert_eq!(SupportTriple::of_algebra(&a).pairs().len(), 3);
    }

    #[test]
    fn identity_laws() {
        let a = group_algebra(Field::Prime(2), &FiniteGroup::cyclic(3).unwrap());
        let t = SupportTriple::of_algebra(&a);
        let id = TripleMorphism::identity(&t);
        assert_eq!(TripleMorphism::of_morphism(&GradedMorphism::identity(&a)).unwrap(), id);
        assert_eq!(id.after(&id).unwrap(), id);
        assert!(id.leq(&id));
        assert_eq!(t.pairs().len(), 9);
    }

    #[test]
    fn zero_algebra_triple() {
        let t = SupportTriple::of_algebra(&zero_algebra(Field::Rational));
        assert!(t.support().is_empty() && t.pairs().is_empty());
    }

    #[test]
    fn invalid_triples_rejected() {
        let g = Group::cyclic(3).unwrap();
        let one = GroupElement::Finite(1);
        let bad = SupportTriple::new(g.clone(), BTreeSet::from([one.clone()]), BTreeSet::from([(one.clone(), one.clone())]));
        assert!(bad.is_err());
    }
}

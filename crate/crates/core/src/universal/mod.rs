//! Universal grading groups, regrading functors and free graded algebras.

pub mod free;
mod regrade;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::One;

use crate::galg::{AlgebraError, GradedAlgebra};
use crate::groups::{todd_coxeter, Group, GroupElement, GroupError, PresentedGroup, Word};
use crate::linalg::{smith_normal_form, IntMatrix};
use crate::morph::{GradedMorphism, MorphError};

pub use regrade::{pullback, regrade_along, Adjunction, Pullback};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum UniversalError {
    #[error("morphism is not graded injective")]
    NotGradedInjective,
    #[error("relator {0} does not map to a relator")]
    Relator(String),
    #[error("relator {0} is not sent to the identity")]
    NotRealized(String),
    #[error("{0}")]
    Precondition(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Morph(#[from] MorphError),
}

/// `F([supp Γ]) / ⟨⟨[g][h][gh]⁻¹ : (g, h) ∈ P⟩⟩`, with generator `i`
/// standing for `kappa[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniversalGroup {
    pub presentation: PresentedGroup,
    pub kappa: Vec<GroupElement>,
}

/// One generator `[g]` per support element in support order, one relator
/// per element of the pair set in its order. Relators are freely and
/// cyclically reduced but kept one per pair.
pub fn universal_group(a: &GradedAlgebra) -> UniversalGroup {
    let group = a.group();
    let kappa = a.support();
    let index = |g: &GroupElement| kappa.iter().position(|x| x == g).expect("in support");
    let labels = kappa.iter().map(|g| format!("[{}]", group.label(g))).collect();
    let relators = a
        .pair_set()
        .iter()
        .map(|(g, h)| {
            let gh = group.multiply(g, h);
            Word::generator(index(g))
                .mul(&Word::generator(index(h)))
                .mul(&Word::generator(index(&gh)).inverse())
        })
        .collect();
    UniversalGroup {
        presentation: PresentedGroup::new(labels, relators),
        kappa,
    }
}

impl UniversalGroup {
    pub fn generator_of(&self, g: &GroupElement) -> Option<usize> {
        self.kappa.iter().position(|x| x == g)
    }

    /// The homomorphism to `group` with `[g] ↦ g`, checked on every relator.
    pub fn realization(&self, group: &Group) -> Result<Realization, UniversalError> {
        self.realization_with(group, self.kappa.clone())
    }

    /// The homomorphism to `group` with `[g] ↦ images[i]` for generator `i`.
    pub fn realization_with(&self, group: &Group, images: Vec<GroupElement>) -> Result<Realization, UniversalError> {
        if images.len() != self.kappa.len() || images.iter().any(|x| !group.contains(x)) {
            return Err(UniversalError::Precondition("one image in the group per generator".into()));
        }
        let r = Realization {
            presentation: self.presentation.clone(),
            group: group.clone(),
            images,
        };
        for w in self.presentation.relators() {
            if r.evaluate(w) != group.identity() {
                return Err(UniversalError::NotRealized(w.display_with(self.presentation.labels())));
            }
        }
        Ok(r)
    }
}

/// A homomorphism from a presented group, given on generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    presentation: PresentedGroup,
    group: Group,
    images: Vec<GroupElement>,
}

impl Realization {
    pub fn images(&self) -> &[GroupElement] {
        &self.images
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn evaluate(&self, w: &Word) -> GroupElement {
        w.letters().iter().fold(self.group.identity(), |acc, l| {
            let x = &self.images[l.generator];
            let x = if l.inverse { self.group.inverse(x) } else { x.clone() };
            self.group.multiply(&acc, &x)
        })
    }

    /// Whether the images generate the target group. `None` for free
    /// targets of positive rank.
    pub fn is_surjective(&self) -> Option<bool> {
        match &self.group {
            Group::Finite(g) => {
                let gens: Vec<usize> = self
                    .images
                    .iter()
                    .map(|x| match x {
                        GroupElement::Finite(i) => *i,
                        _ => unreachable!("finite group element"),
                    })
                    .collect();
                Some(g.subgroup_generated(&gens).len() == g.order())
            }
            Group::FreeAbelian(k) => {
                if *k == 0 {
                    return Some(true);
                }
                if self.images.is_empty() {
                    return Some(false);
                }
                let rows = self
                    .images
                    .iter()
                    .map(|x| match x {
                        GroupElement::Abelian(v) => v.iter().map(|&e| BigInt::from(e)).collect(),
                        _ => unreachable!("free abelian element"),
                    })
                    .collect();
                let d = smith_normal_form(&IntMatrix::from_rows(rows)).diagonal;
                Some(d.len() == *k && d.iter().all(|x| x.is_one()))
            }
            Group::Free(k) => (*k == 0).then_some(true),
        }
    }

    /// Bijectivity onto a finite target, certified by a completed coset
    /// table of the presentation whose representatives have distinct
    /// images covering the group. `None` when enumeration exceeds the
    /// budget or the target is infinite.
    pub fn is_bijective(&self, max_cosets: usize) -> Option<bool> {
        let order = self.group.order()?;
        let table = todd_coxeter(&self.presentation, max_cosets).ok()?;
        if !table.verify(&self.presentation) {
            return None;
        }
        let images: BTreeSet<GroupElement> = table.representatives().iter().map(|w| self.evaluate(w)).collect();
        Some(table.order() == order && images.len() == order)
    }
}

/// A homomorphism between presented groups sending generators to
/// generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMap {
    pub source: PresentedGroup,
    pub target: PresentedGroup,
    pub images: Vec<usize>,
}

impl GeneratorMap {
    pub fn identity(p: &PresentedGroup) -> GeneratorMap {
        GeneratorMap {
            source: p.clone(),
            target: p.clone(),
            images: (0..p.generator_count()).collect(),
        }
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &GeneratorMap) -> Result<GeneratorMap, UniversalError> {
        if first.target != self.source {
            return Err(UniversalError::Precondition("maps are not composable".into()));
        }
        Ok(GeneratorMap {
            source: first.source.clone(),
            target: self.target.clone(),
            images: first.images.iter().map(|&i| self.images[i]).collect(),
        })
    }
}

/// `R(φ)`: `[g] ↦ [ψ(g)]` between universal groups, for graded injective
/// `φ`. Every relator must be sent to a relator of the target or to the
/// identity.
pub fn universal_on_morphism(phi: &GradedMorphism) -> Result<GeneratorMap, UniversalError> {
    if !phi.is_graded_injective() {
        return Err(UniversalError::NotGradedInjective);
    }
    let (ua, ub) = (universal_group(phi.domain()), universal_group(phi.codomain()));
    let images: Vec<usize> = ua
        .kappa
        .iter()
        .map(|g| ub.generator_of(&phi.psi()[g]).expect("ψ lands in the support"))
        .collect();
    let targets: BTreeSet<&Word> = ub.presentation.relators().iter().collect();
    for r in ua.presentation.relators() {
        let image = r.substitute(|x| Word::generator(images[x])).cyclically_reduced();
        if !image.is_empty() && !targets.contains(&image) {
            return Err(UniversalError::Relator(r.display_with(ua.presentation.labels())));
        }
    }
    Ok(GeneratorMap {
        source: ua.presentation,
        target: ub.presentation,
        images,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galg::{direct_sum, group_algebra, matrix_algebra_elementary, zero_algebra};
    use crate::groups::{identify, FiniteGroup, Verdict};
    use crate::linalg::Field;

    fn gamma1() -> GradedAlgebra {
        matrix_algebra_elementary(Field::Rational, Group::integers(), &[GroupElement::int(1), GroupElement::int(0)]).unwrap()
    }

    fn gamma2() -> GradedAlgebra {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let c = s3.index_of_label("(132)").unwrap();
        matrix_algebra_elementary(Field::Rational, Group::finite(s3.clone()), &[GroupElement::Finite(c), GroupElement::Finite(s3.identity())]).unwrap()
    }

    #[test]
    fn m2_universal_group_is_z() {
        let u = universal_group(&gamma1());
        assert_eq!(u.presentation.generator_count(), 3);
        assert_eq!(u.presentation.relators().len(), 7);
        assert_eq!(identify(&u.presentation).verdict, Verdict::Free { rank: 1 });
        let r = u.realization(&Group::integers()).unwrap();
        assert_eq!(r.is_surjective(), Some(true));
        let u2 = universal_group(&gamma2());
        assert_eq!(identify(&u2.presentation).verdict, Verdict::Free { rank: 1 });
    }

    #[test]
    fn group_algebra_universal_groups() {
        let groups = [
            FiniteGroup::cyclic(2).unwrap(),
            FiniteGroup::cyclic(4).unwrap(),
            FiniteGroup::product(&FiniteGroup::cyclic(2).unwrap(), &FiniteGroup::cyclic(2).unwrap()),
            FiniteGroup::symmetric(3).unwrap(),
        ];
        for g in groups {
            let a = group_algebra(Field::Prime(2), &g);
            let u = universal_group(&a);
            assert_eq!(identify(&u.presentation).verdict, Verdict::Finite { order: g.order() });
            let r = u.realization(a.group()).unwrap();
            assert_eq!(r.is_bijective(10_000), Some(true));
        }
    }

    #[test]
    fn zero_algebra_is_trivial() {
        let u = universal_group(&zero_algebra(Field::Rational));
        assert_eq!(u.presentation.generator_count(), 0);
        assert_eq!(identify(&u.presentation).verdict, Verdict::Trivial);
        assert!(u.realization(&Group::trivial()).unwrap().images().is_empty());
    }

    #[test]
    fn direct_sums_share_the_presentation() {
        let a = gamma1();
        let s = direct_sum(&[a.clone(), a.clone(), a.clone()]).unwrap();
        assert_eq!(universal_group(&s), universal_group(&a));
    }

    #[test]
    fn doubling_embedding() {
        let f = Field::Rational;
        let (z2, z4) = (FiniteGroup::cyclic(2).unwrap(), FiniteGroup::cyclic(4).unwrap());
        let (a, b) = (group_algebra(f, &z2), group_algebra(f, &z4));
        let phi = GradedMorphism::from_images(a.clone(), b.clone(), &[b.basis_vector(0), b.basis_vector(2)]).unwrap();
        let r = universal_on_morphism(&phi).unwrap();
        assert_eq!(r.images, vec![0, 2]);
        let id = universal_on_morphism(&GradedMorphism::identity(&a)).unwrap();
        assert_eq!(id, GeneratorMap::identity(&universal_group(&a).presentation));
        assert_eq!(r.after(&id).unwrap(), r);
        let aug = GradedMorphism::from_images(b.clone(), group_algebra(f, &FiniteGroup::cyclic(1).unwrap()), &vec![vec![f.one()]; 4]).unwrap();
        assert!(universal_on_morphism(&aug).is_ok());
    }

    #[test]
    fn wrong_realization_rejected() {
        let a = group_algebra(Field::Rational, &FiniteGroup::cyclic(3).unwrap());
        let u = universal_group(&a);
        let bad = vec![GroupElement::int(0), GroupElement::int(1), GroupElement::int(1)];
        assert!(matches!(u.realization_with(&Group::integers(), bad), Err(UniversalError::NotRealized(_))));
    }
}

use std::collections::{BTreeSet, VecDeque};

use super::{FiniteGroup, Group, GroupElement, GroupError};

/// Largest domain order accepted by [`enumerate_homs`].
pub const HOM_ENUMERATION_LIMIT: usize = 24;

/// A group homomorphism. For a finite domain `images[i]` is the image of
/// element `i`; for `Z^k` and `F_k` it is the image of the `i`-th free
/// generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupHom {
    domain: Group,
    codomain: Group,
    images: Vec<GroupElement>,
}

impl GroupHom {
    /// Validates the images: membership, multiplicativity for finite
    /// domains, pairwise commuting images for free abelian domains.
    pub fn new(domain: Group, codomain: Group, images: Vec<GroupElement>) -> Result<GroupHom, GroupError> {
        let expected = match &domain {
            Group::Finite(g) => g.order(),
            Group::FreeAbelian(k) | Group::Free(k) => *k,
        };
        if images.len() != expected {
            return Err(GroupError::NotAHom(format!(
                "{} images given, {expected} expected",
                images.len()
            )));
        }
        if let Some(bad) = images.iter().find(|x| !codomain.contains(x)) {
            return Err(GroupError::NotAHom(format!("{bad:?} is not an element of the codomain")));
        }
        match &domain {
            Group::Finite(g) => {
                let n = g.order();
                for a in 0..n {
                    for b in 0..n {
                        let lhs = &images[g.mul(a, b)];
                        let rhs = codomain.multiply(&images[a], &images[b]);
                        if *lhs != rhs {
                            return Err(GroupError::NotAHom(format!(
                                "f({a}·{b}) ≠ f({a})·f({b})"
                            )));
                        }
                    }
                }
            }
            Group::FreeAbelian(_) => {
                for (i, x) in images.iter().enumerate() {
                    for (j, y) in images.iter().enumerate().skip(i + 1) {
                        if codomain.multiply(x, y) != codomain.multiply(y, x) {
                            return Err(GroupError::NotAHom(format!(
                                "images of generators {i} and {j} do not commute"
                            )));
                        }
                    }
                }
            }
            Group::Free(_) => {}
        }
        Ok(GroupHom {
            domain,
            codomain,
            images,
        })
    }

    pub fn identity(group: &Group) -> GroupHom {
        GroupHom {
            domain: group.clone(),
            codomain: group.clone(),
            images: group.generators(),
        }
    }

    /// The homomorphism sending everything to the identity.
    pub fn trivial(domain: &Group, codomain: &Group) -> GroupHom {
        let n = domain.generators().len();
        GroupHom {
            domain: domain.clone(),
            codomain: codomain.clone(),
            images: vec![codomain.identity(); n],
        }
    }

    pub fn domain(&self) -> &Group {
        &self.domain
    }

    pub fn codomain(&self) -> &Group {
        &self.codomain
    }

    pub fn images(&self) -> &[GroupElement] {
        &self.images
    }

    pub fn apply(&self, x: &GroupElement) -> GroupElement {
        match (&self.domain, x) {
            (Group::Finite(_), GroupElement::Finite(i)) => self.images[*i].clone(),
            (Group::FreeAbelian(_), GroupElement::Abelian(v)) => v
                .iter()
                .zip(&self.images)
                .fold(self.codomain.identity(), |acc, (&e, img)| {
                    self.codomain.multiply(&acc, &self.codomain.pow(img, e))
                }),
            (Group::Free(_), GroupElement::Word(w)) => {
                w.letters().iter().fold(self.codomain.identity(), |acc, l| {
                    let img = &self.images[l.generator];
                    let factor = if l.inverse { self.codomain.inverse(img) } else { img.clone() };
                    self.codomain.multiply(&acc, &factor)
                })
            }
            _ => panic!("element species does not match hom domain"),
        }
    }

    /// `self ∘ first`
    pub fn after(&self, first: &GroupHom) -> Result<GroupHom, GroupError> {
        if first.codomain != self.domain {
            return Err(GroupError::NotComposable);
        }
        let images = first.images.iter().map(|x| self.apply(x)).collect();
        Ok(GroupHom {
            domain: first.domain.clone(),
            codomain: self.codomain.clone(),
            images,
        })
    }

    /// Injectivity, decided for finite domains only.
    pub fn is_injective(&self) -> Option<bool> {
        self.domain.order()?;
        let distinct: BTreeSet<&GroupElement> = self.images.iter().collect();
        Some(distinct.len() == self.images.len())
    }

    /// Whether this is a certified isomorphism. Finite groups: bijective
    /// table map. `Z^k → Z^k`: unimodular integer matrix. `F_k → F_k`:
    /// accepted when the generator images are a signed permutation of the
    /// generators (a sufficient condition only).
    pub fn is_isomorphism(&self) -> bool {
        match (&self.domain, &self.codomain) {
            (Group::Finite(a), Group::Finite(b)) => {
                a.order() == b.order() && self.is_injective() == Some(true)
            }
            (Group::FreeAbelian(k), Group::FreeAbelian(l)) if k == l => {
                let rows: Vec<Vec<num_bigint::BigInt>> = (0..*k)
                    .map(|i| {
                        self.images
                            .iter()
                            .map(|img| match img {
                                GroupElement::Abelian(v) => v[i].into(),
                                _ => unreachable!(),
                            })
                            .collect()
                    })
                    .collect();
                let det = crate::linalg::IntMatrix::from_rows(rows).determinant();
                det == 1.into() || det == (-1).into()
            }
            (Group::Free(k), Group::Free(l)) if k == l => {
                let gens: BTreeSet<usize> = self
                    .images
                    .iter()
                    .filter_map(|img| match img {
                        GroupElement::Word(w) if w.len() == 1 => Some(w.letters()[0].generator),
                        _ => None,
                    })
                    .collect();
                gens.len() == *k && self.images.iter().all(|img| matches!(img, GroupElement::Word(w) if w.len() == 1))
            }
            _ => false,
        }
    }
}

/// All homomorphisms `G → H` between finite groups, found by backtracking
/// over the images of a greedy generating set of `G`. Results are ordered
/// lexicographically by generator images.
pub fn enumerate_homs(g: &FiniteGroup, h: &FiniteGroup) -> Result<Vec<GroupHom>, GroupError> {
    if g.order() > HOM_ENUMERATION_LIMIT {
        return Err(GroupError::Budget(format!(
            "domain of order {} exceeds the enumeration limit {HOM_ENUMERATION_LIMIT}",
            g.order()
        )));
    }
    let gens = g.generating_set();
    let mut out = Vec::new();
    let mut assigned = Vec::new();
    backtrack(g, h, &gens, &mut assigned, &mut out);
    let (dom, cod) = (Group::finite(g.clone()), Group::finite(h.clone()));
    Ok(out
        .into_iter()
        .map(|map| GroupHom {
            domain: dom.clone(),
            codomain: cod.clone(),
            images: map.into_iter().map(GroupElement::Finite).collect(),
        })
        .collect())
}

fn backtrack(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    assigned: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let depth = assigned.len();
    if let Some(map) = extend(g, h, &gens[..depth], assigned) {
        if depth == gens.len() {
            if map.iter().all(Option::is_some) {
                out.push(map.into_iter().map(Option::unwrap).collect());
            }
            return;
        }
    } else {
        return;
    }
    for img in 0..h.order() {
        assigned.push(img);
        backtrack(g, h, gens, assigned, out);
        assigned.pop();
    }
}

/// Extends a partial assignment over the subgroup generated by the assigned
/// generators via right multiplication, returning `None` on a conflict.
fn extend(g: &FiniteGroup, h: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<Option<usize>>> {
    let mut map = vec![None; g.order()];
    map[g.identity()] = Some(h.identity());
    let mut queue = VecDeque::from([g.identity()]);
    while let Some(x) = queue.pop_front() {
        let fx = map[x].expect("visited");
        for (&s, &fs) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let fy = h.mul(fx, fs);
            match map[y] {
                Some(existing) if existing != fy => return None,
                Some(_) => {}
                None => {
                    map[y] = Some(fy);
                    queue.push_back(y);
                }
            }
        }
    }
    Some(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Every function G → H that respects the multiplication table.
    fn brute_force_count(g: &FiniteGroup, h: &FiniteGroup) -> usize {
        let (n, m) = (g.order(), h.order());
        let total = m.pow(n as u32);
        (0..total)
            .filter(|&code| {
                let f: Vec<usize> = (0..n).map(|i| (code / m.pow(i as u32)) % m).collect();
                (0..n).all(|a| (0..n).all(|b| f[g.mul(a, b)] == h.mul(f[a], f[b])))
            })
            .count()
    }

    #[test]
    fn small_cyclic_counts() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let z3 = FiniteGroup::cyclic(3).unwrap();
        assert_eq!(enumerate_homs(&z3, &z3).unwrap().len(), 3);
        assert_eq!(enumerate_homs(&z2, &z3).unwrap().len(), 1);
        assert_eq!(enumerate_homs(&z2, &z2).unwrap().len(), 2);
        assert_eq!(brute_force_count(&z3, &z3), 3);
        assert_eq!(brute_force_count(&z2, &z2), 2);
    }

    #[test]
    fn agrees_with_exhaustive_scan_up_to_order_six() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let groups = vec![
            FiniteGroup::cyclic(1).unwrap(),
            z2.clone(),
            FiniteGroup::cyclic(3).unwrap(),
            FiniteGroup::cyclic(4).unwrap(),
            FiniteGroup::product(&z2, &z2),
            FiniteGroup::cyclic(5).unwrap(),
            FiniteGroup::cyclic(6).unwrap(),
            FiniteGroup::symmetric(3).unwrap(),
        ];
        for g in &groups {
            for h in &groups {
                let homs = enumerate_homs(g, h).unwrap();
                assert_eq!(homs.len(), brute_force_count(g, h), "|G|={} |H|={}", g.order(), h.order());
                let distinct: BTreeSet<_> = homs.iter().map(|f| f.images().to_vec()).collect();
                assert_eq!(distinct.len(), homs.len());
            }
        }
    }

    #[test]
    fn budget_enforced() {
        let big = FiniteGroup::cyclic(25).unwrap();
        assert!(matches!(enumerate_homs(&big, &big), Err(GroupError::Budget(_))));
    }

    #[test]
    fn integer_homs() {
        let z = Group::integers();
        let z2 = Group::cyclic(2).unwrap();
        let red = GroupHom::new(z.clone(), z2.clone(), vec![GroupElement::Finite(1)]).unwrap();
        assert_eq!(red.apply(&GroupElement::int(-3)), GroupElement::Finite(1));
        assert_eq!(red.apply(&GroupElement::int(4)), GroupElement::Finite(0));
        let neg = GroupHom::new(z.clone(), z.clone(), vec![GroupElement::int(-1)]).unwrap();
        assert!(neg.is_isomorphism());
        let dbl = GroupHom::new(z.clone(), z, vec![GroupElement::int(2)]).unwrap();
        assert!(!dbl.is_isomorphism());
    }

    #[test]
    fn rejects_non_homs() {
        let z2 = Group::cyclic(2).unwrap();
        let z3 = Group::cyclic(3).unwrap();
        let bad = GroupHom::new(
            z3,
            z2,
            vec![GroupElement::Finite(0), GroupElement::Finite(1), GroupElement::Finite(1)],
        );
        assert!(bad.is_err());
    }
}

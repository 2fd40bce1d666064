use std::fmt;
use std::sync::Arc;

use super::{FiniteGroup, GroupError, Word};

/// A grading group: a finite group given by a table, the free abelian
/// group `Z^k`, or the free group `F_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Group {
    Finite(Arc<FiniteGroup>),
    FreeAbelian(usize),
    Free(usize),
}

/// An element of one of the group species. Elements do not carry their
/// group; operations go through [`Group`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    Finite(usize),
    Abelian(Vec<i64>),
    Word(Word),
}

impl GroupElement {
    pub fn int(n: i64) -> GroupElement {
        GroupElement::Abelian(vec![n])
    }
}

impl Group {
    pub fn finite(g: FiniteGroup) -> Group {
        Group::Finite(Arc::new(g))
    }

    pub fn trivial() -> Group {
        Group::finite(FiniteGroup::cyclic(1).expect("order 1"))
    }

    pub fn cyclic(n: usize) -> Result<Group, GroupError> {
        FiniteGroup::cyclic(n).map(Group::finite)
    }

    pub fn symmetric(n: usize) -> Result<Group, GroupError> {
        FiniteGroup::symmetric(n).map(Group::finite)
    }

    /// The integers, as `Z^1`.
    pub fn integers() -> Group {
        Group::FreeAbelian(1)
    }

    /// Direct product of two finite groups.
    pub fn product(a: &Group, b: &Group) -> Result<Group, GroupError> {
        match (a, b) {
            (Group::Finite(x), Group::Finite(y)) => Ok(Group::finite(FiniteGroup::product(x, y))),
            _ => Err(GroupError::Unsupported("direct products of infinite groups".into())),
        }
    }

    pub fn as_finite(&self) -> Option<&FiniteGroup> {
        match self {
            Group::Finite(g) => Some(g),
            _ => None,
        }
    }

    pub fn order(&self) -> Option<usize> {
        self.as_finite().map(FiniteGroup::order)
    }

    pub fn is_trivial(&self) -> bool {
        match self {
            Group::Finite(g) => g.order() == 1,
            Group::FreeAbelian(k) | Group::Free(k) => *k == 0,
        }
    }

    /// All elements, for finite groups.
    pub fn elements(&self) -> Option<Vec<GroupElement>> {
        self.order()
            .map(|n| (0..n).map(GroupElement::Finite).collect())
    }

    /// The standard generators: all elements of a finite group, or the free
    /// generators of `Z^k` and `F_k`.
    pub fn generators(&self) -> Vec<GroupElement> {
        match self {
            Group::Finite(g) => (0..g.order()).map(GroupElement::Finite).collect(),
            Group::FreeAbelian(k) => (0..*k)
                .map(|i| {
                    let mut v = vec![0; *k];
                    v[i] = 1;
                    GroupElement::Abelian(v)
                })
                .collect(),
            Group::Free(k) => (0..*k).map(|i| GroupElement::Word(Word::generator(i))).collect(),
        }
    }

    pub fn identity(&self) -> GroupElement {
        match self {
            Group::Finite(g) => GroupElement::Finite(g.identity()),
            Group::FreeAbelian(k) => GroupElement::Abelian(vec![0; *k]),
            Group::Free(_) => GroupElement::Word(Word::identity()),
        }
    }

    /// Whether `x` is a well-formed element of this group.
    pub fn contains(&self, x: &GroupElement) -> bool {
        match (self, x) {
            (Group::Finite(g), GroupElement::Finite(i)) => *i < g.order(),
            (Group::FreeAbelian(k), GroupElement::Abelian(v)) => v.len() == *k,
            (Group::Free(k), GroupElement::Word(w)) => {
                w.max_generator().is_none_or(|m| m < *k) && Word::new(w.letters().iter().copied()) == *w
            }
            _ => false,
        }
    }

    pub fn multiply(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        match (self, a, b) {
            (Group::Finite(g), GroupElement::Finite(x), GroupElement::Finite(y)) => {
                GroupElement::Finite(g.mul(*x, *y))
            }
            (Group::FreeAbelian(_), GroupElement::Abelian(x), GroupElement::Abelian(y)) => {
                GroupElement::Abelian(x.iter().zip(y).map(|(p, q)| p + q).collect())
            }
            (Group::Free(_), GroupElement::Word(x), GroupElement::Word(y)) => GroupElement::Word(x.mul(y)),
            _ => panic!("element species does not match group {self}"),
        }
    }

    pub fn inverse(&self, a: &GroupElement) -> GroupElement {
        match (self, a) {
            (Group::Finite(g), GroupElement::Finite(x)) => GroupElement::Finite(g.inv(*x)),
            (Group::FreeAbelian(_), GroupElement::Abelian(x)) => {
                GroupElement::Abelian(x.iter().map(|p| -p).collect())
            }
            (Group::Free(_), GroupElement::Word(x)) => GroupElement::Word(x.inverse()),
            _ => panic!("element species does not match group {self}"),
        }
    }

    pub fn pow(&self, a: &GroupElement, exp: i64) -> GroupElement {
        match (self, a) {
            (Group::Finite(g), GroupElement::Finite(x)) => GroupElement::Finite(g.pow(*x, exp)),
            (Group::FreeAbelian(_), GroupElement::Abelian(x)) => {
                GroupElement::Abelian(x.iter().map(|p| p * exp).collect())
            }
            (Group::Free(_), GroupElement::Word(x)) => GroupElement::Word(x.pow(exp)),
            _ => panic!("element species does not match group {self}"),
        }
    }

    /// `a · b⁻¹`
    pub fn divide(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.multiply(a, &self.inverse(b))
    }

    /// Human-readable name of an element.
    pub fn label(&self, a: &GroupElement) -> String {
        match (self, a) {
            (Group::Finite(g), GroupElement::Finite(x)) => g.label(*x).to_string(),
            (Group::FreeAbelian(1), GroupElement::Abelian(v)) => v[0].to_string(),
            (Group::FreeAbelian(_), GroupElement::Abelian(v)) => format!(
                "({})",
                v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
            ),
            (Group::Free(_), GroupElement::Word(w)) => w.to_string(),
            _ => format!("{a:?}"),
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Group::Finite(g) => write!(f, "finite group of order {}", g.order()),
            Group::FreeAbelian(k) => write!(f, "Z^{k}"),
            Group::Free(k) => write!(f, "F_{k}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_arithmetic() {
        let z = Group::integers();
        let a = GroupElement::int(3);
        let b = GroupElement::int(-5);
        assert_eq!(z.multiply(&a, &b), GroupElement::int(-2));
        assert_eq!(z.inverse(&a), GroupElement::int(-3));
        assert_eq!(z.label(&b), "-5");
    }

    #[test]
    fn free_group_words_do_not_commute() {
        let f = Group::Free(2);
        let gens = f.generators();
        let xy = f.multiply(&gens[0], &gens[1]);
        let yx = f.multiply(&gens[1], &gens[0]);
        assert_ne!(xy, yx);
        assert_eq!(f.multiply(&xy, &f.inverse(&xy)), f.identity());
    }

    #[test]
    fn membership() {
        let z2 = Group::cyclic(2).unwrap();
        assert!(z2.contains(&GroupElement::Finite(1)));
        assert!(!z2.contains(&GroupElement::Finite(2)));
        assert!(!z2.contains(&GroupElement::int(0)));
        assert!(!Group::Free(1).contains(&GroupElement::Word(Word::generator(1))));
    }
}

use std::collections::{BTreeMap, BTreeSet};

use super::{GradedMorphism, MorphError};
use crate::galg::GradedAlgebra;
use crate::groups::{GroupElement, GroupHom};
use crate::linalg::{Field, Matrix, Scalar, Subspace, Vector};

/// Largest algebra dimension for which [`search_weak_equivalence`] is
/// complete.
pub const SEARCH_MAX_DIM: usize = 6;
/// Largest component dimension for which [`search_weak_equivalence`] is
/// complete.
pub const SEARCH_MAX_COMPONENT_DIM: usize = 2;

fn image_of_component(phi: &GradedMorphism, g: &GroupElement) -> Subspace {
    let cols = phi.restricted(g).columns();
    Subspace::span(phi.field(), phi.codomain().dim(), &cols).expect("shape")
}

fn require_invertible(phi: &GradedMorphism) -> Result<(), MorphError> {
    if phi.is_invertible() {
        Ok(())
    } else {
        Err(MorphError::NotInvertible)
    }
}

/// Both algebras graded by the same group and `φ(A^(g)) = B^(g)` for
/// every `g`.
pub fn check_isomorphism(phi: &GradedMorphism) -> Result<bool, MorphError> {
    require_invertible(phi)?;
    let (a, b) = (phi.domain(), phi.codomain());
    if a.group() != b.group() {
        return Ok(false);
    }
    let all: BTreeSet<GroupElement> = a.support().into_iter().chain(b.support()).collect();
    Ok(all.iter().all(|g| image_of_component(phi, g) == b.component(g)))
}

/// `ψ` is a group isomorphism and `φ(A^(g)) = B^(ψ(g))` for every `g`.
pub fn check_equivalence(phi: &GradedMorphism, psi: &GroupHom) -> Result<bool, MorphError> {
    require_invertible(phi)?;
    let (a, b) = (phi.domain(), phi.codomain());
    if psi.domain() != a.group() || psi.codomain() != b.group() || !psi.is_isomorphism() {
        return Ok(false);
    }
    let images: BTreeSet<GroupElement> = a.support().iter().map(|g| psi.apply(g)).collect();
    if images != b.support().into_iter().collect() {
        return Ok(false);
    }
    Ok(a.support().iter().all(|g| image_of_component(phi, g) == b.component(&psi.apply(g))))
}

/// Every nonzero component of `A` is mapped onto a nonzero component of
/// `B`, and the induced map of supports is a bijection. Returns that map.
pub fn check_weak_equivalence(phi: &GradedMorphism) -> Result<Option<BTreeMap<GroupElement, GroupElement>>, MorphError> {
    require_invertible(phi)?;
    if !phi.is_graded() {
        return Ok(None);
    }
    let (a, b) = (phi.domain(), phi.codomain());
    let psi = phi.psi();
    for g in a.support() {
        match psi.get(&g) {
            Some(h) if image_of_component(phi, &g) == b.component(h) => {}
            _ => return Ok(None),
        }
    }
    let targets: BTreeSet<&GroupElement> = psi.values().collect();
    if targets.len() != psi.len() || targets.len() != b.support().len() {
        return Ok(None);
    }
    Ok(Some(psi.clone()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Certificate(GradedMorphism),
    /// No weak equivalence exists.
    None,
    /// Outside the envelope where the search is complete.
    Unknown,
}

fn component_dims(a: &GradedAlgebra) -> Vec<usize> {
    let mut d: Vec<usize> = a.support().iter().map(|g| a.component_indices(g).len()).collect();
    d.sort();
    d
}

/// Decides whether `A` and `B` are weakly equivalent. The identity matrix
/// is tried first; otherwise the search backtracks over bijections of
/// supports that respect component dimensions, pair sets and products,
/// then over invertible matrices on each component. Complete for GF(2) and
/// GF(3), dimension at most [`SEARCH_MAX_DIM`] and components of dimension
/// at most [`SEARCH_MAX_COMPONENT_DIM`]; elsewhere undecided cases are
/// [`SearchOutcome::Unknown`].
pub fn search_weak_equivalence(a: &GradedAlgebra, b: &GradedAlgebra) -> Result<SearchOutcome, MorphError> {
    if a.field() != b.field() {
        return Err(MorphError::FieldMismatch(a.field(), b.field()));
    }
    if a.dim() != b.dim()
        || a.support().len() != b.support().len()
        || component_dims(a) != component_dims(b)
        || a.pair_set().len() != b.pair_set().len()
        || a.is_unital() != b.is_unital()
    {
        return Ok(SearchOutcome::None);
    }
    if let Ok(id) = GradedMorphism::new(a.clone(), b.clone(), Matrix::identity(a.field(), a.dim())) {
        if check_weak_equivalence(&id)?.is_some() {
            return Ok(SearchOutcome::Certificate(id));
        }
    }
    let in_envelope = matches!(a.field(), Field::Prime(2) | Field::Prime(3))
        && a.dim() <= SEARCH_MAX_DIM
        && component_dims(a).last().is_none_or(|&d| d <= SEARCH_MAX_COMPONENT_DIM);
    if !in_envelope {
        return Ok(SearchOutcome::Unknown);
    }
    let search = Search::new(a, b);
    Ok(match search.run() {
        Some(phi) => SearchOutcome::Certificate(phi),
        None => SearchOutcome::None,
    })
}

struct Search<'a> {
    a: &'a GradedAlgebra,
    b: &'a GradedAlgebra,
    sa: Vec<GroupElement>,
    sb: Vec<GroupElement>,
    pa: BTreeSet<(GroupElement, GroupElement)>,
    pb: BTreeSet<(GroupElement, GroupElement)>,
}

impl<'a> Search<'a> {
    fn new(a: &'a GradedAlgebra, b: &'a GradedAlgebra) -> Self {
        Search {
            a,
            b,
            sa: a.support(),
            sb: b.support(),
            pa: a.pair_set(),
            pb: b.pair_set(),
        }
    }

    fn run(&self) -> Option<GradedMorphism> {
        let mut sigma = Vec::new();
        let mut used = vec![false; self.sb.len()];
        self.bijections(&mut sigma, &mut used)
    }

    fn position(&self, g: &GroupElement) -> usize {
        self.sa.iter().position(|x| x == g).expect("in support")
    }

    /// Whether the partial assignment `sigma` (indices into `sb`) is
    /// consistent on pairs involving the newest element.
    fn consistent(&self, sigma: &[usize]) -> bool {
        let k = sigma.len() - 1;
        let gb = self.b.group();
        let img = |i: usize| &self.sb[sigma[i]];
        for j in 0..=k {
            for (x, y) in [(k, j), (j, k)] {
                let in_a = self.pa.contains(&(self.sa[x].clone(), self.sa[y].clone()));
                let in_b = self.pb.contains(&(img(x).clone(), img(y).clone()));
                if in_a != in_b {
                    return false;
                }
            }
        }
        let ga = self.a.group();
        for (g, h) in &self.pa {
            let (x, y, z) = (self.position(g), self.position(h), self.position(&ga.multiply(g, h)));
            if x.max(y).max(z) == k && *img(z) != gb.multiply(img(x), img(y)) {
                return false;
            }
        }
        true
    }

    fn bijections(&self, sigma: &mut Vec<usize>, used: &mut [bool]) -> Option<GradedMorphism> {
        let k = sigma.len();
        if k == self.sa.len() {
            return self.matrices(sigma);
        }
        let d = self.a.component_indices(&self.sa[k]).len();
        for t in 0..self.sb.len() {
            if used[t] || self.b.component_indices(&self.sb[t]).len() != d {
                continue;
            }
            sigma.push(t);
            used[t] = true;
            if self.consistent(sigma) {
                if let Some(phi) = self.bijections(sigma, used) {
                    return Some(phi);
                }
            }
            used[t] = false;
            sigma.pop();
        }
        None
    }

    fn matrices(&self, sigma: &[usize]) -> Option<GradedMorphism> {
        let n = self.a.dim();
        let mut images: Vec<Option<Vector>> = vec![None; n];
        let mut step_of = vec![usize::MAX; n];
        for (k, g) in self.sa.iter().enumerate() {
            for i in self.a.component_indices(g) {
                step_of[i] = k;
            }
        }
        if self.assign(0, sigma, &mut images, &step_of) {
            let cols: Vec<Vector> = images.into_iter().map(|v| v.expect("assigned")).collect();
            let phi = GradedMorphism::from_images(self.a.clone(), self.b.clone(), &cols).ok()?;
            return Some(phi);
        }
        None
    }

    fn assign(&self, k: usize, sigma: &[usize], images: &mut [Option<Vector>], step_of: &[usize]) -> bool {
        if k == self.sa.len() {
            return true;
        }
        let src = self.a.component_indices(&self.sa[k]);
        let dst = self.b.component_indices(&self.sb[sigma[k]]);
        for m in general_linear(self.a.field(), src.len()) {
            for (c, &i) in src.iter().enumerate() {
                let mut v = self.b.zero();
                for (r, &j) in dst.iter().enumerate() {
                    v[j] = m[r][c].clone();
                }
                images[i] = Some(v);
            }
            if self.multiplicative_at(k, images, step_of) && self.assign(k + 1, sigma, images, step_of) {
                return true;
            }
        }
        for &i in &src {
            images[i] = None;
        }
        false
    }

    /// Checks `φ(e_i e_j) = φ(e_i) φ(e_j)` for basis pairs whose
    /// components are all assigned, at least one of them at step `k`.
    fn multiplicative_at(&self, k: usize, images: &[Option<Vector>], step_of: &[usize]) -> bool {
        let n = self.a.dim();
        let apply = |v: &[Scalar]| -> Option<Vector> {
            let mut out = self.b.zero();
            for (i, c) in v.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let img = images[i].as_ref()?;
                for (o, x) in out.iter_mut().zip(img) {
                    *o = &*o + &(c * x);
                }
            }
            Some(out)
        };
        for i in 0..n {
            for j in 0..n {
                if step_of[i] > k || step_of[j] > k {
                    continue;
                }
                let prod = self.a.multiply(&self.a.basis_vector(i), &self.a.basis_vector(j));
                let latest = prod
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(l, _)| step_of[l])
                    .fold(step_of[i].max(step_of[j]), usize::max);
                if latest != k {
                    continue;
                }
                let (Some(x), Some(y)) = (&images[i], &images[j]) else {
                    continue;
                };
                let Some(lhs) = apply(&prod) else {
                    continue;
                };
                let rhs = self.b.multiply(x, y);
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

/// The invertible `d × d` matrices over a finite field as row lists, the
/// identity first and the rest in lexicographic order of entries.
fn general_linear(field: Field, d: usize) -> Vec<Vec<Vec<Scalar>>> {
    let elements = field.elements().expect("finite field");
    let q = elements.len();
    let identity: Vec<Vec<Scalar>> = (0..d)
        .map(|r| (0..d).map(|c| if r == c { field.one() } else { field.zero() }).collect())
        .collect();
    let mut out = vec![identity.clone()];
    for code in 0..q.pow((d * d) as u32) {
        let mut code = code;
        let mut rows = vec![vec![field.zero(); d]; d];
        for r in (0..d).rev() {
            for c in (0..d).rev() {
                rows[r][c] = elements[code % q].clone();
                code /= q;
            }
        }
        if rows != identity && Matrix::from_rows(field, rows.clone()).expect("square").rank() == d {
            out.push(rows);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galg::{group_algebra, matrix_algebra_elementary, Products};
    use crate::groups::{FiniteGroup, Group};

    fn gamma1(f: Field) -> GradedAlgebra {
        matrix_algebra_elementary(f, Group::integers(), &[GroupElement::int(1), GroupElement::int(0)]).unwrap()
    }

    fn gamma2(f: Field) -> GradedAlgebra {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let c = s3.index_of_label("(132)").unwrap();
        matrix_algebra_elementary(f, Group::finite(s3.clone()), &[GroupElement::Finite(c), GroupElement::Finite(s3.identity())]).unwrap()
    }

    #[test]
    fn general_linear_counts() {
        assert_eq!(general_linear(Field::Prime(2), 1).len(), 1);
        assert_eq!(general_linear(Field::Prime(3), 1).len(), 2);
        assert_eq!(general_linear(Field::Prime(2), 2).len(), 6);
        assert_eq!(general_linear(Field::Prime(3), 2).len(), 48);
    }

    #[test]
    fn gamma1_gamma2_identity_certificate() {
        for f in [Field::Rational, Field::Prime(2)] {
            let (a, b) = (gamma1(f), gamma2(f));
            let id = GradedMorphism::new(a.clone(), b.clone(), Matrix::identity(f, 4)).unwrap();
            let psi = check_weak_equivalence(&id).unwrap().unwrap();
            assert_eq!(psi.len(), 3);
            assert!(!check_isomorphism(&id).unwrap());
            assert!(matches!(search_weak_equivalence(&a, &b).unwrap(), SearchOutcome::Certificate(_)));
        }
    }

    #[test]
    fn trivial_grading_is_not_weakly_equivalent() {
        let a = gamma1(Field::Prime(2));
        assert_eq!(search_weak_equivalence(&a, &a.trivial_grading()).unwrap(), SearchOutcome::None);
        let id = GradedMorphism::new(a.clone(), a.trivial_grading(), Matrix::identity(Field::Prime(2), 4)).unwrap();
        assert_eq!(check_weak_equivalence(&id).unwrap(), None);
    }

    #[test]
    fn identity_checks() {
        let a = group_algebra(Field::Prime(3), &FiniteGroup::cyclic(3).unwrap());
        let id = GradedMorphism::identity(&a);
        assert!(check_isomorphism(&id).unwrap());
        assert!(check_equivalence(&id, &GroupHom::identity(a.group())).unwrap());
        assert!(check_weak_equivalence(&id).unwrap().is_some());
        let zero = GradedMorphism::zero(&a, &a);
        assert_eq!(check_isomorphism(&zero), Err(MorphError::NotInvertible));
    }

    #[test]
    fn search_needs_nontrivial_support_bijection() {
        // FZ/3 with labels permuted: u_1 ↔ u_2 swapped in the basis order
        let f = Field::Prime(2);
        let g = FiniteGroup::cyclic(3).unwrap();
        let a = group_algebra(f, &g);
        let perm = [0usize, 2, 1];
        let products: Products = a
            .products()
            .into_iter()
            .map(|(i, j, c)| (perm[i], perm[j], c.into_iter().map(|(k, x)| (perm[k], x)).collect()))
            .collect();
        let degrees = (0..3).map(|i| a.degree(perm[i]).clone()).collect();
        let b = GradedAlgebra::new_verified(f, a.group().clone(), a.labels().to_vec(), degrees, products, a.unit().cloned()).unwrap();
        let SearchOutcome::Certificate(phi) = search_weak_equivalence(&a, &b).unwrap() else {
            panic!("expected a certificate");
        };
        assert!(check_weak_equivalence(&phi).unwrap().is_some());
    }

    #[test]
    fn z2_square_zero_vs_trivial() {
        let f = Field::Prime(2);
        let products: Products = vec![(0, 0, vec![(0, f.one())]), (0, 1, vec![(1, f.one())]), (1, 0, vec![(1, f.one())])];
        let a = GradedAlgebra::new_verified(
            f,
            Group::cyclic(2).unwrap(),
            vec!["1".into(), "a".into()],
            vec![GroupElement::Finite(0), GroupElement::Finite(1)],
            products,
            Some(vec![f.one(), f.zero()]),
        )
        .unwrap();
        assert_eq!(search_weak_equivalence(&a, &a.trivial_grading()).unwrap(), SearchOutcome::None);
        assert!(matches!(search_weak_equivalence(&a, &a).unwrap(), SearchOutcome::Certificate(_)));
    }

    #[test]
    fn rational_outside_envelope_is_unknown() {
        let f = Field::Rational;
        let g = FiniteGroup::cyclic(2).unwrap();
        let a = group_algebra(f, &g);
        // u_1 ↦ -u_1 relabelled: structure constants differ from the identity
        let products: Products = vec![
            (0, 0, vec![(0, f.one())]),
            (0, 1, vec![(1, f.one())]),
            (1, 0, vec![(1, f.one())]),
            (1, 1, vec![(0, f.from_i64(4))]),
        ];
        let b = GradedAlgebra::new_verified(f, a.group().clone(), a.labels().to_vec(), a.degrees().to_vec(), products, a.unit().cloned()).unwrap();
        assert_eq!(search_weak_equivalence(&a, &b).unwrap(), SearchOutcome::Unknown);
    }
}

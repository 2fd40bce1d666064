//! Free graded algebras on pointed graded sets, kept symbolic: elements are
//! formal combinations of words and are only ever evaluated in a target.

use std::collections::BTreeMap;

use crate::galg::{GradedAlgebra, Homogeneity};
use crate::groups::{Group, GroupElement};
use crate::linalg::{add_vectors, is_zero_vector, scale_vector, Matrix, Scalar, Vector};
use crate::morph::GradedMorphism;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FreeError {
    #[error("{0}")]
    Malformed(String),
    #[error("image of {0} is not homogeneous")]
    NotHomogeneous(String),
    #[error("image of {0} does not lie in the component of its degree")]
    DegreeMismatch(String),
    #[error("unital source requires a unital target")]
    NotUnital,
    #[error("words of length {0} must vanish in the target")]
    Truncation(usize),
    #[error("morphisms are not composable")]
    NotComposable,
}

/// A set of generator labels, each placed in one component `X^(g)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointedGradedSet {
    group: Group,
    labels: Vec<String>,
    degrees: Vec<GroupElement>,
}

impl PointedGradedSet {
    pub fn new(group: Group, labels: Vec<String>, degrees: Vec<GroupElement>) -> Result<Self, FreeError> {
        if labels.len() != degrees.len() {
            return Err(FreeError::Malformed("one degree per label required".into()));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(FreeError::Malformed(format!("duplicate label {l}")));
            }
        }
        if let Some(d) = degrees.iter().find(|d| !group.contains(d)) {
            return Err(FreeError::Malformed(format!("{d:?} is not an element of {group}")));
        }
        Ok(PointedGradedSet { group, labels, degrees })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn degrees(&self) -> &[GroupElement] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// A word in the generators, as generator indices.
pub type FreeWord = Vec<usize>;

/// A formal linear combination of words.
pub type FreeElement = Vec<(FreeWord, Scalar)>;

/// The free associative algebra on a pointed graded set, optionally unital,
/// optionally divided by all words of length at least `truncation`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeGradedAlgebra {
    generators: PointedGradedSet,
    unital: bool,
    truncation: Option<usize>,
}

impl FreeGradedAlgebra {
    pub fn new(generators: PointedGradedSet, unital: bool) -> FreeGradedAlgebra {
        FreeGradedAlgebra {
            generators,
            unital,
            truncation: None,
        }
    }

    /// The quotient by the ideal spanned by all words of length `≥ k`.
    pub fn truncated(generators: PointedGradedSet, unital: bool, k: usize) -> Result<FreeGradedAlgebra, FreeError> {
        if k == 0 {
            return Err(FreeError::Malformed("truncation length must be positive".into()));
        }
        Ok(FreeGradedAlgebra {
            generators,
            unital,
            truncation: Some(k),
        })
    }

    /// Polynomials in one variable `x` of degree 1, graded by `Z`.
    pub fn polynomials(unital: bool) -> FreeGradedAlgebra {
        FreeGradedAlgebra::new(Self::one_variable(), unital)
    }

    /// `F[x]/(x^k)` (or its non-unital version), graded by `Z`.
    pub fn truncated_polynomials(unital: bool, k: usize) -> Result<FreeGradedAlgebra, FreeError> {
        FreeGradedAlgebra::truncated(Self::one_variable(), unital, k)
    }

    fn one_variable() -> PointedGradedSet {
        PointedGradedSet::new(Group::integers(), vec!["x".into()], vec![GroupElement::int(1)]).expect("valid")
    }

    pub fn generators(&self) -> &PointedGradedSet {
        &self.generators
    }

    pub fn group(&self) -> &Group {
        &self.generators.group
    }

    pub fn is_unital(&self) -> bool {
        self.unital
    }

    pub fn truncation(&self) -> Option<usize> {
        self.truncation
    }

    pub fn vanishes(&self, w: &[usize]) -> bool {
        self.truncation.is_some_and(|k| w.len() >= k)
    }

    pub fn word_degree(&self, w: &[usize]) -> GroupElement {
        let g = self.group();
        w.iter()
            .fold(g.identity(), |acc, &x| g.multiply(&acc, &self.generators.degrees[x]))
    }

    /// All words of length at most `max_len` that are nonzero in the
    /// algebra, shortest first; the empty word only when unital.
    pub fn words(&self, max_len: usize) -> Vec<FreeWord> {
        let n = self.generators.len();
        let mut out = Vec::new();
        let mut layer: Vec<FreeWord> = vec![vec![]];
        for len in 0..=max_len {
            if self.vanishes(&vec![0; len]) {
                break;
            }
            if len > 0 || self.unital {
                out.extend(layer.iter().cloned());
            }
            layer = layer
                .iter()
                .flat_map(|w| {
                    (0..n).map(move |x| {
                        let mut w = w.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
            if layer.is_empty() {
                break;
            }
        }
        out
    }

    pub fn format_word(&self, w: &[usize]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter().map(|&x| self.generators.labels[x].as_str()).collect::<Vec<_>>().join("")
    }
}

/// A graded homomorphism out of a free graded algebra, determined by the
/// images of the generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeMorphism {
    source: FreeGradedAlgebra,
    target: GradedAlgebra,
    images: Vec<Vector>,
}

impl FreeMorphism {
    /// Extends an assignment of homogeneous (or zero) images to a
    /// homomorphism. The grading groups of source and target may differ.
    pub fn new(source: FreeGradedAlgebra, target: GradedAlgebra, images: Vec<Vector>) -> Result<FreeMorphism, FreeError> {
        if images.len() != source.generators.len() {
            return Err(FreeError::Malformed(format!(
                "{} images for {} generators",
                images.len(),
                source.generators.len()
            )));
        }
        for (v, l) in images.iter().zip(&source.generators.labels) {
            if v.len() != target.dim() || v.iter().any(|x| x.field() != target.field()) {
                return Err(FreeError::Malformed(format!("image of {l} is not a vector of the target")));
            }
            if matches!(target.homogeneity(v), Homogeneity::Mixed) {
                return Err(FreeError::NotHomogeneous(l.clone()));
            }
        }
        if source.unital && !target.is_unital() {
            return Err(FreeError::NotUnital);
        }
        let m = FreeMorphism { source, target, images };
        if let Some(k) = m.source.truncation {
            let gens = m.source.generators.len();
            let mut words: Vec<FreeWord> = vec![vec![]];
            for _ in 0..k {
                words = words
                    .iter()
                    .flat_map(|w| (0..gens).map(move |x| [w.as_slice(), &[x]].concat()))
                    .collect();
            }
            if words.iter().any(|w| !is_zero_vector(&m.product_of_images(w))) {
                return Err(FreeError::Truncation(k));
            }
        }
        Ok(m)
    }

    /// The adjunction direction: `X^(g)` must land in `A^(g) ∪ {0}` for a
    /// common grading group.
    pub fn free_extend(source: FreeGradedAlgebra, target: GradedAlgebra, images: Vec<Vector>) -> Result<FreeMorphism, FreeError> {
        if source.group() != target.group() {
            return Err(FreeError::Malformed("grading groups differ".into()));
        }
        for ((v, l), g) in images.iter().zip(&source.generators.labels).zip(&source.generators.degrees) {
            if v.len() == target.dim() && !is_zero_vector(v) && target.homogeneity(v) != Homogeneity::Of(g.clone()) {
                return Err(FreeError::DegreeMismatch(l.clone()));
            }
        }
        FreeMorphism::new(source, target, images)
    }

    pub fn source(&self) -> &FreeGradedAlgebra {
        &self.source
    }

    pub fn target(&self) -> &GradedAlgebra {
        &self.target
    }

    pub fn images(&self) -> &[Vector] {
        &self.images
    }

    fn product_of_images(&self, w: &[usize]) -> Vector {
        let start = match self.target.unit() {
            Some(u) => u.clone(),
            None if w.is_empty() => return self.target.zero(),
            None => {
                let first = self.images[w[0]].clone();
                return w[1..].iter().fold(first, |acc, &x| self.target.multiply(&acc, &self.images[x]));
            }
        };
        w.iter().fold(start, |acc, &x| self.target.multiply(&acc, &self.images[x]))
    }

    pub fn evaluate_word(&self, w: &[usize]) -> Vector {
        if self.source.vanishes(w) || (w.is_empty() && !self.source.unital) {
            return self.target.zero();
        }
        self.product_of_images(w)
    }

    pub fn evaluate(&self, e: &FreeElement) -> Vector {
        e.iter().fold(self.target.zero(), |acc, (w, c)| {
            add_vectors(&acc, &scale_vector(c, &self.evaluate_word(w)))
        })
    }

    /// Whether the image of `w` lies in the target component of the degree
    /// of `w` (or is zero).
    pub fn lands_in_predicted_component(&self, w: &[usize]) -> bool {
        let v = self.evaluate_word(w);
        is_zero_vector(&v) || self.target.homogeneity(&v) == Homogeneity::Of(self.source.word_degree(w))
    }

    /// `φ ∘ self`.
    pub fn post_compose(&self, phi: &GradedMorphism) -> Result<FreeMorphism, FreeError> {
        if phi.domain() != &self.target {
            return Err(FreeError::NotComposable);
        }
        if self.source.unital && !phi.is_unital() {
            return Err(FreeError::NotUnital);
        }
        let images = self.images.iter().map(|v| phi.apply(v)).collect();
        FreeMorphism::new(self.source.clone(), phi.codomain().clone(), images)
    }

    /// `self ∘ τ` for the homomorphism `τ` from `source` into this
    /// morphism's source sending generator `i` to `tau[i]`.
    pub fn pre_compose(&self, source: FreeGradedAlgebra, tau: &[FreeElement]) -> Result<FreeMorphism, FreeError> {
        if tau.iter().flatten().any(|(w, _)| w.iter().any(|&x| x >= self.source.generators.len())) {
            return Err(FreeError::NotComposable);
        }
        let images = tau.iter().map(|e| self.evaluate(e)).collect();
        FreeMorphism::new(source, self.target.clone(), images)
    }

    /// Images of the nonzero words up to `max_len`, grouped by degree.
    fn images_by_degree(&self, max_len: usize) -> BTreeMap<GroupElement, Vec<(FreeWord, Vector)>> {
        let mut out: BTreeMap<GroupElement, Vec<(FreeWord, Vector)>> = BTreeMap::new();
        for w in self.source.words(max_len) {
            let v = self.evaluate_word(&w);
            out.entry(self.source.word_degree(&w)).or_default().push((w, v));
        }
        out
    }

    /// Checked on words of length at most `max_len`: every component of the
    /// source is sent into a single component of the target.
    pub fn is_graded(&self, max_len: usize) -> bool {
        self.images_by_degree(max_len).values().all(|ws| {
            let mut degree = None;
            ws.iter().all(|(_, v)| match self.target.homogeneity(v) {
                Homogeneity::Zero => true,
                Homogeneity::Mixed => false,
                Homogeneity::Of(h) => *degree.get_or_insert_with(|| h.clone()) == h,
            })
        })
    }

    /// A nonzero homogeneous element of length at most `max_len` in the
    /// kernel, if any.
    pub fn graded_kernel_witness(&self, max_len: usize) -> Option<FreeElement> {
        let field = self.target.field();
        self.images_by_degree(max_len).into_values().find_map(|ws| {
            let cols: Vec<Vector> = ws.iter().map(|(_, v)| v.clone()).collect();
            let m = Matrix::from_columns(field, self.target.dim(), &cols).expect("shape");
            m.kernel_basis().into_iter().next().map(|k| {
                ws.iter()
                    .zip(k)
                    .filter(|(_, c)| !c.is_zero())
                    .map(|((w, _), c)| (w.clone(), c))
                    .collect()
            })
        })
    }

    pub fn is_graded_injective(&self, max_len: usize) -> bool {
        self.is_graded(max_len) && self.graded_kernel_witness(max_len).is_none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galg::{group_algebra, matrix_algebra_elementary};
    use crate::groups::FiniteGroup;
    use crate::linalg::Field;

    fn m2() -> GradedAlgebra {
        matrix_algebra_elementary(Field::Rational, Group::integers(), &[GroupElement::int(1), GroupElement::int(0)]).unwrap()
    }

    fn xy() -> FreeGradedAlgebra {
        let x = PointedGradedSet::new(
            Group::integers(),
            vec!["x".into(), "y".into()],
            vec![GroupElement::int(1), GroupElement::int(1)],
        )
        .unwrap();
        FreeGradedAlgebra::new(x, false)
    }

    #[test]
    fn words_enumeration() {
        assert_eq!(xy().words(2).len(), 2 + 4);
        let t = FreeGradedAlgebra::truncated_polynomials(true, 3).unwrap();
        assert_eq!(t.words(10), vec![vec![], vec![0], vec![0, 0]]);
    }

    #[test]
    fn square_zero_image() {
        let a = m2();
        let e12 = a.basis_vector(a.index_of("e12").unwrap());
        let f = FreeMorphism::free_extend(xy(), a.clone(), vec![e12.clone(), e12.clone()]).unwrap();
        assert!(is_zero_vector(&f.evaluate_word(&[0, 1])));
        assert_eq!(f.evaluate_word(&[1]), e12);
        for w in f.source().words(4) {
            assert!(f.lands_in_predicted_component(&w));
        }
        assert!(f.is_graded(4));
        assert!(!f.is_graded_injective(2));
    }

    #[test]
    fn degree_checks() {
        let a = m2();
        let e21 = a.basis_vector(a.index_of("e21").unwrap());
        assert_eq!(
            FreeMorphism::free_extend(xy(), a.clone(), vec![e21.clone(), a.zero()]),
            Err(FreeError::DegreeMismatch("x".into()))
        );
        assert!(FreeMorphism::new(xy(), a.clone(), vec![e21, a.zero()]).is_ok());
        let mixed = add_vectors(&a.basis_vector(0), &a.basis_vector(1));
        assert!(matches!(FreeMorphism::new(xy(), a, vec![mixed.clone(), mixed]), Err(FreeError::NotHomogeneous(_))));
    }

    #[test]
    fn truncation_must_hold() {
        let a = m2();
        let e12 = a.basis_vector(1);
        let e11 = a.basis_vector(0);
        let c2 = FreeGradedAlgebra::truncated_polynomials(false, 2).unwrap();
        assert!(FreeMorphism::new(c2.clone(), a.clone(), vec![e12.clone()]).is_ok());
        assert_eq!(FreeMorphism::new(c2, a.clone(), vec![e11.clone()]), Err(FreeError::Truncation(2)));
        let f = FreeMorphism::new(FreeGradedAlgebra::polynomials(true), a.clone(), vec![e11]).unwrap();
        assert_eq!(&f.evaluate_word(&[]), a.unit().unwrap());
        assert!(f.is_graded_injective(3));
    }

    #[test]
    fn group_algebra_polynomials_are_graded_injective() {
        let z3 = FiniteGroup::cyclic(3).unwrap();
        let a = group_algebra(Field::Prime(2), &z3);
        let f = FreeMorphism::new(FreeGradedAlgebra::polynomials(false), a.clone(), vec![a.basis_vector(1)]).unwrap();
        assert!(f.is_graded_injective(6));
        let g = FreeMorphism::new(FreeGradedAlgebra::polynomials(false), a.clone(), vec![a.zero()]).unwrap();
        assert!(g.is_graded(3));
        assert_eq!(g.graded_kernel_witness(3), Some(vec![(vec![0], Field::Prime(2).one())]));
    }
}

//! Enumeration and random sampling of graded homomorphisms between small
//! algebras, for property checks.

use rand::seq::SliceRandom;
use rand::{Rng, RngCore};

use crate::galg::GradedAlgebra;
use crate::groups::GroupElement;
use crate::linalg::{Matrix, Scalar, Vector};
use crate::morph::GradedMorphism;

/// Options for [`graded_homs`].
#[derive(Debug, Clone)]
pub struct HomSearch {
    /// Coordinates of images are drawn from this set.
    pub coefficients: Vec<Scalar>,
    /// Stop after this many morphisms.
    pub limit: usize,
    /// Only morphisms sending `A^(g)` into `B^(g)`.
    pub degree_preserving: bool,
}

impl HomSearch {
    /// Every field element as a coefficient for a finite field, `{−1, 0, 1}`
    /// for the rationals.
    pub fn for_field(field: crate::linalg::Field, limit: usize) -> HomSearch {
        let coefficients = field
            .elements()
            .unwrap_or_else(|| vec![field.from_i64(-1), field.zero(), field.one()]);
        HomSearch {
            coefficients,
            limit,
            degree_preserving: false,
        }
    }

    pub fn degree_preserving(mut self) -> HomSearch {
        self.degree_preserving = true;
        self
    }
}

/// Graded homomorphisms `a → b` whose matrix entries lie in the coefficient
/// set, found by backtracking over the components of `a`: each component
/// is sent to zero or into a single component of `b`, one basis vector at
/// a time, and multiplicativity is checked as soon as both factors and
/// every basis vector of their product have images. Over a finite field
/// with all elements as coefficients and no limit this lists every graded
/// homomorphism.
pub fn graded_homs(a: &GradedAlgebra, b: &GradedAlgebra, search: &HomSearch) -> Vec<GradedMorphism> {
    run(a, b, search, None)
}

/// As [`graded_homs`] with every choice point visited in random order, so
/// that a limited search returns a spread-out sample rather than the first
/// morphisms in enumeration order.
pub fn sample_graded_homs<R: Rng>(a: &GradedAlgebra, b: &GradedAlgebra, search: &HomSearch, rng: &mut R) -> Vec<GradedMorphism> {
    run(a, b, search, Some(rng))
}

fn run(a: &GradedAlgebra, b: &GradedAlgebra, search: &HomSearch, rng: Option<&mut dyn RngCore>) -> Vec<GradedMorphism> {
    let mut targets: Vec<Option<GroupElement>> = vec![None];
    targets.extend(b.support().into_iter().map(Some));
    let plan: Vec<(GroupElement, Vec<usize>)> = a.support().into_iter().map(|g| {
        let idx = a.component_indices(&g);
        (g, idx)
    }).collect();
    let mut state = Search {
        a,
        b,
        search,
        targets,
        plan,
        images: vec![None; a.dim()],
        out: Vec::new(),
        rng,
    };
    state.component(0);
    state.out
}

struct Search<'a, 'r> {
    a: &'a GradedAlgebra,
    b: &'a GradedAlgebra,
    search: &'a HomSearch,
    targets: Vec<Option<GroupElement>>,
    plan: Vec<(GroupElement, Vec<usize>)>,
    images: Vec<Option<Vector>>,
    out: Vec<GradedMorphism>,
    rng: Option<&'r mut dyn RngCore>,
}

impl Search<'_, '_> {
    fn done(&self) -> bool {
        self.out.len() >= self.search.limit
    }

    fn component(&mut self, c: usize) {
        if self.done() {
            return;
        }
        if c == self.plan.len() {
            let cols: Vec<Vector> = self.images.iter().map(|v| v.clone().expect("assigned")).collect();
            if let Ok(m) = GradedMorphism::from_images(self.a.clone(), self.b.clone(), &cols) {
                self.out.push(m);
            }
            return;
        }
        let g = self.plan[c].0.clone();
        let mut targets = self.targets.clone();
        if let Some(rng) = self.rng.as_deref_mut() {
            targets.shuffle(rng);
        }
        for t in targets {
            let cells = match &t {
                None => Vec::new(),
                Some(h) => {
                    if self.search.degree_preserving && (self.a.group() != self.b.group() || *h != g) {
                        continue;
                    }
                    self.b.component_indices(h)
                }
            };
            self.basis_vector(c, 0, &cells);
        }
    }

    fn basis_vector(&mut self, c: usize, k: usize, cells: &[usize]) {
        if self.done() {
            return;
        }
        let indices = self.plan[c].1.clone();
        if k == indices.len() {
            let silent = indices.iter().all(|&j| self.images[j].as_ref().is_some_and(|v| v.iter().all(Scalar::is_zero)));
            if cells.is_empty() || !silent {
                self.component(c + 1);
            }
            return;
        }
        let i = indices[k];
        let n = self.search.coefficients.len();
        let mut codes: Vec<usize> = (0..n.pow(cells.len() as u32)).collect();
        if let Some(rng) = self.rng.as_deref_mut() {
            codes.shuffle(rng);
        }
        for code in codes {
            let mut v = self.b.zero();
            let mut rest = code;
            for &cell in cells {
                v[cell] = self.search.coefficients[rest % n].clone();
                rest /= n;
            }
            self.images[i] = Some(v);
            if self.consistent(i) {
                self.basis_vector(c, k + 1, cells);
            }
            self.images[i] = None;
            if self.done() {
                return;
            }
        }
    }

    /// Multiplicativity on every pair involving `i` whose product has all
    /// images assigned.
    fn consistent(&self, i: usize) -> bool {
        let assigned: Vec<usize> = (0..self.a.dim()).filter(|&j| self.images[j].is_some()).collect();
        for &j in &assigned {
            for (x, y) in [(i, j), (j, i)] {
                let prod = self.a.basis_product(x, y);
                if prod.iter().any(|(k, _)| self.images[*k].is_none()) {
                    continue;
                }
                let lhs = prod.iter().fold(self.b.zero(), |acc, (k, c)| {
                    let img = self.images[*k].as_ref().expect("assigned");
                    acc.iter().zip(img).map(|(s, t)| s + &(c * t)).collect()
                });
                let rhs = self.b.multiply(self.images[x].as_ref().expect("assigned"), self.images[y].as_ref().expect("assigned"));
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

/// Up to `count` random picks (with repetition) from a pool.
pub fn pick<'p, T, R: Rng>(pool: &'p [T], count: usize, rng: &mut R) -> Vec<&'p T> {
    if pool.is_empty() {
        return Vec::new();
    }
    (0..count).map(|_| pool.choose(rng).expect("nonempty")).collect()
}

/// A random square matrix with entries from `coefficients`.
pub fn random_matrix<R: Rng>(coefficients: &[Scalar], rows: usize, cols: usize, rng: &mut R) -> Matrix {
    let field = coefficients[0].field();
    let mut m = Matrix::zeros(field, rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            m.set(r, c, coefficients.choose(rng).expect("nonempty").clone());
        }
    }
    m
}

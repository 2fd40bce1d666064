//! Group-graded finite-dimensional algebras given by structure constants
//! on a homogeneous basis.

mod construct;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::groups::{Group, GroupElement};
use crate::linalg::{is_zero_vector, unit_vector, zero_vector, Field, Matrix, Scalar, Subspace, Vector};

pub use construct::{
    direct_product_trivial, direct_sum, group_algebra, matrix_algebra_elementary, quotient, zero_algebra, Quotient,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("{0}")]
    Malformed(String),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("grading group mismatch")]
    GroupMismatch,
    #[error("grading is not trivial")]
    NotTriviallyGraded,
    #[error("grading violation: {0}")]
    Violation(GradingViolation),
}

/// The first failed check found by [`GradedAlgebra::verify_grading`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GradingViolation {
    /// `(e_i e_j) e_k ≠ e_i (e_j e_k)`.
    Associativity { triple: [usize; 3], labels: [String; 3] },
    /// `e_i e_j` has a nonzero coefficient at `e_k` but `deg e_k ≠ deg e_i · deg e_j`.
    Degree { triple: [usize; 3], labels: [String; 3] },
    /// The unit fails to act as identity on `e_i`.
    Unit { index: usize, label: String },
    /// The unit is not homogeneous of identity degree.
    UnitDegree,
}

impl fmt::Display for GradingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GradingViolation::Associativity { labels: [a, b, c], .. } => {
                write!(f, "associativity fails on ({a}, {b}, {c})")
            }
            GradingViolation::Degree { labels: [a, b, c], .. } => {
                write!(f, "product ({a}, {b}) has a nonzero coefficient at {c} of the wrong degree")
            }
            GradingViolation::Unit { label, .. } => write!(f, "unit does not act as identity on {label}"),
            GradingViolation::UnitDegree => write!(f, "unit is not homogeneous of identity degree"),
        }
    }
}

/// Classification of a vector with respect to the grading.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Of(GroupElement),
    Mixed,
}

#[derive(Debug, PartialEq, Eq)]
struct AlgebraData {
    field: Field,
    group: Group,
    labels: Vec<String>,
    degrees: Vec<GroupElement>,
    /// `table[i * n + j]` holds the nonzero coefficients of `e_i e_j`, by index.
    table: Vec<Vec<(usize, Scalar)>>,
    unit: Option<Vector>,
}

/// A finite-dimensional associative algebra with a homogeneous basis and a
/// grading by a group. Cloning is cheap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedAlgebra(Arc<AlgebraData>);

/// Structure constants `e_i e_j = Σ c_k e_k` as sparse `(k, c_k)` lists.
pub type Products = Vec<(usize, usize, Vec<(usize, Scalar)>)>;

impl GradedAlgebra {
    /// Checks shapes, field tags and degree membership. Associativity and
    /// the grading condition are left to [`verify_grading`](Self::verify_grading).
    pub fn new(
        field: Field,
        group: Group,
        labels: Vec<String>,
        degrees: Vec<GroupElement>,
        products: Products,
        unit: Option<Vector>,
    ) -> Result<GradedAlgebra, AlgebraError> {
        let n = labels.len();
        if degrees.len() != n {
            return Err(AlgebraError::Malformed(format!("{} degrees for {n} basis vectors", degrees.len())));
        }
        if let Some(i) = degrees.iter().position(|d| !group.contains(d)) {
            return Err(AlgebraError::Malformed(format!(
                "degree of {} is not an element of {group}",
                labels[i]
            )));
        }
        let mut seen = BTreeSet::new();
        if let Some(dup) = labels.iter().find(|l| !seen.insert(l.as_str())) {
            return Err(AlgebraError::Malformed(format!("duplicate basis label {dup}")));
        }
        let mut table = vec![Vec::new(); n * n];
        let mut defined = vec![false; n * n];
        for (i, j, coeffs) in products {
            if i >= n || j >= n {
                return Err(AlgebraError::Malformed(format!("product ({i}, {j}) out of range")));
            }
            if std::mem::replace(&mut defined[i * n + j], true) {
                return Err(AlgebraError::Malformed(format!(
                    "product ({}, {}) given twice",
                    labels[i], labels[j]
                )));
            }
            let mut dense = zero_vector(field, n);
            for (k, c) in coeffs {
                if k >= n {
                    return Err(AlgebraError::Malformed(format!("product index {k} out of range")));
                }
                if c.field() != field {
                    return Err(AlgebraError::FieldMismatch(field, c.field()));
                }
                dense[k] = &dense[k] + &c;
            }
            table[i * n + j] = sparse(&dense);
        }
        if let Some(u) = &unit {
            if u.len() != n {
                return Err(AlgebraError::Malformed(format!("unit has length {}, expected {n}", u.len())));
            }
            if let Some(c) = u.iter().find(|c| c.field() != field) {
                return Err(AlgebraError::FieldMismatch(field, c.field()));
            }
        }
        Ok(GradedAlgebra(Arc::new(AlgebraData {
            field,
            group,
            labels,
            degrees,
            table,
            unit,
        })))
    }

    /// As [`new`](Self::new), then rejects anything failing `verify_grading`.
    pub fn new_verified(
        field: Field,
        group: Group,
        labels: Vec<String>,
        degrees: Vec<GroupElement>,
        products: Products,
        unit: Option<Vector>,
    ) -> Result<GradedAlgebra, AlgebraError> {
        let a = GradedAlgebra::new(field, group, labels, degrees, products, unit)?;
        a.verify_grading().map_err(AlgebraError::Violation)?;
        Ok(a)
    }

    pub fn field(&self) -> Field {
        self.0.field
    }

    pub fn group(&self) -> &Group {
        &self.0.group
    }

    pub fn dim(&self) -> usize {
        self.0.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.0.labels[i]
    }

    pub fn degrees(&self) -> &[GroupElement] {
        &self.0.degrees
    }

    pub fn degree(&self, i: usize) -> &GroupElement {
        &self.0.degrees[i]
    }

    pub fn unit(&self) -> Option<&Vector> {
        self.0.unit.as_ref()
    }

    pub fn is_unital(&self) -> bool {
        self.0.unit.is_some()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.0.labels.iter().position(|l| l == label)
    }

    /// Nonzero coefficients of `e_i e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.0.table[i * self.dim() + j]
    }

    /// All nonzero structure constants as `(i, j, coefficients)`.
    pub fn products(&self) -> Products {
        let n = self.dim();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.basis_product(i, j).is_empty())
            .map(|(i, j)| (i, j, self.basis_product(i, j).to_vec()))
            .collect()
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        unit_vector(self.field(), self.dim(), i)
    }

    pub fn zero(&self) -> Vector {
        zero_vector(self.field(), self.dim())
    }

    pub fn multiply(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let xy = x * y;
                for (k, c) in self.basis_product(i, j) {
                    out[*k] = &out[*k] + &(&xy * c);
                }
            }
        }
        out
    }

    /// `a^k` for `k ≥ 1`.
    pub fn power(&self, a: &[Scalar], k: usize) -> Vector {
        assert!(k >= 1);
        (1..k).fold(a.to_vec(), |acc, _| self.multiply(&acc, a))
    }

    /// Checks associativity on all basis triples, the grading condition on
    /// every structure constant, and the unit axioms.
    pub fn verify_grading(&self) -> Result<(), GradingViolation> {
        let n = self.dim();
        let g = self.group();
        for i in 0..n {
            for j in 0..n {
                let expected = g.multiply(self.degree(i), self.degree(j));
                if let Some((k, _)) = self.basis_product(i, j).iter().find(|(k, _)| *self.degree(*k) != expected) {
                    return Err(GradingViolation::Degree {
                        triple: [i, j, *k],
                        labels: self.triple_labels(i, j, *k),
                    });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j);
                for k in 0..n {
                    let mut left = self.zero();
                    for (m, c) in ij {
                        for (p, d) in self.basis_product(*m, k) {
                            left[*p] = &left[*p] + &(c * d);
                        }
                    }
                    let mut right = self.zero();
                    for (m, c) in self.basis_product(j, k) {
                        for (p, d) in self.basis_product(i, *m) {
                            right[*p] = &right[*p] + &(c * d);
                        }
                    }
                    if left != right {
                        return Err(GradingViolation::Associativity {
                            triple: [i, j, k],
                            labels: self.triple_labels(i, j, k),
                        });
                    }
                }
            }
        }
        if let Some(u) = self.unit() {
            for i in 0..n {
                let e = self.basis_vector(i);
                if self.multiply(u, &e) != e || self.multiply(&e, u) != e {
                    return Err(GradingViolation::Unit {
                        index: i,
                        label: self.label(i).to_string(),
                    });
                }
            }
            if n > 0 && self.homogeneity(u) != Homogeneity::Of(g.identity()) {
                return Err(GradingViolation::UnitDegree);
            }
        }
        Ok(())
    }

    fn triple_labels(&self, i: usize, j: usize, k: usize) -> [String; 3] {
        [self.label(i).into(), self.label(j).into(), self.label(k).into()]
    }

    pub fn homogeneity(&self, v: &[Scalar]) -> Homogeneity {
        let mut degree: Option<&GroupElement> = None;
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            match degree {
                None => degree = Some(self.degree(i)),
                Some(d) if d != self.degree(i) => return Homogeneity::Mixed,
                Some(_) => {}
            }
        }
        match degree {
            None => Homogeneity::Zero,
            Some(d) => Homogeneity::Of(d.clone()),
        }
    }

    pub fn is_homogeneous(&self, v: &[Scalar]) -> bool {
        self.homogeneity(v) != Homogeneity::Mixed
    }

    /// Indices of the basis vectors of degree `g`.
    pub fn component_indices(&self, g: &GroupElement) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.degree(i) == g).collect()
    }

    /// The homogeneous component `A^(g)` as a subspace.
    pub fn component(&self, g: &GroupElement) -> Subspace {
        let vectors: Vec<Vector> = self.component_indices(g).into_iter().map(|i| self.basis_vector(i)).collect();
        Subspace::span(self.field(), self.dim(), &vectors).expect("basis vectors")
    }

    /// `supp Γ`, in the group's element order.
    pub fn support(&self) -> Vec<GroupElement> {
        self.degrees().iter().cloned().collect::<BTreeSet<_>>().into_iter().collect()
    }

    /// Pairs `(g, h)` with `A^(g) A^(h) ≠ 0`.
    pub fn pair_set(&self) -> BTreeSet<(GroupElement, GroupElement)> {
        let n = self.dim();
        let mut out = BTreeSet::new();
        for i in 0..n {
            for j in 0..n {
                if !self.basis_product(i, j).is_empty() {
                    out.insert((self.degree(i).clone(), self.degree(j).clone()));
                }
            }
        }
        out
    }

    /// Whether every basis vector has identity degree.
    pub fn is_trivially_graded(&self) -> bool {
        let e = self.group().identity();
        self.degrees().iter().all(|d| *d == e)
    }

    /// The same algebra graded by the trivial group.
    pub fn trivial_grading(&self) -> GradedAlgebra {
        let group = Group::trivial();
        let degrees = vec![group.identity(); self.dim()];
        self.regrade(group, degrees).expect("trivial grading is a grading")
    }

    /// The same structure constants with new degrees.
    pub fn regrade(&self, group: Group, degrees: Vec<GroupElement>) -> Result<GradedAlgebra, AlgebraError> {
        GradedAlgebra::new(
            self.field(),
            group,
            self.labels().to_vec(),
            degrees,
            self.products(),
            self.unit().cloned(),
        )
    }

    /// Same algebra with the unit forgotten.
    pub fn without_unit(&self) -> GradedAlgebra {
        GradedAlgebra::new(
            self.field(),
            self.group().clone(),
            self.labels().to_vec(),
            self.degrees().to_vec(),
            self.products(),
            None,
        )
        .expect("same data")
    }

    /// The left-multiplication matrices are not stored; this gives the
    /// matrix of `x ↦ a·x`.
    pub fn left_multiplication(&self, a: &[Scalar]) -> Matrix {
        let columns: Vec<Vector> = (0..self.dim()).map(|j| self.multiply(a, &self.basis_vector(j))).collect();
        Matrix::from_columns(self.field(), self.dim(), &columns).expect("square")
    }

    /// Renders `v` as a linear combination of basis labels.
    pub fn format_vector(&self, v: &[Scalar]) -> String {
        if is_zero_vector(v) {
            return "0".into();
        }
        v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                if c.is_one() {
                    self.label(i).to_string()
                } else {
                    format!("({c})·{}", self.label(i))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

pub(crate) fn sparse(v: &[Scalar]) -> Vec<(usize, Scalar)> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, c.clone()))
        .collect()
}

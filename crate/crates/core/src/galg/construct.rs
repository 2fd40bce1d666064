use super::{sparse, AlgebraError, GradedAlgebra, Products};
use crate::groups::{FiniteGroup, Group, GroupElement};
use crate::linalg::{is_zero_vector, Field, Matrix, Scalar, Subspace, Vector};

/// `FG` with basis `u_g`, `u_g u_h = u_{gh}`, `deg u_g = g`, unit `u_e`.
pub fn group_algebra(field: Field, g: &FiniteGroup) -> GradedAlgebra {
    let n = g.order();
    let labels = g.labels().iter().map(|l| format!("u_{l}")).collect();
    let degrees = (0..n).map(GroupElement::Finite).collect();
    let products = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| (a, b, vec![(g.mul(a, b), field.one())]))
        .collect();
    let mut unit = vec![field.zero(); n];
    unit[g.identity()] = field.one();
    GradedAlgebra::new(field, Group::finite(g.clone()), labels, degrees, products, Some(unit))
        .expect("group algebra is well formed")
}

/// `M_n(F)` with matrix units `e_ij` and `deg e_ij = g_i · g_j⁻¹`.
pub fn matrix_algebra_elementary(
    field: Field,
    group: Group,
    tuple: &[GroupElement],
) -> Result<GradedAlgebra, AlgebraError> {
    let n = tuple.len();
    if let Some(g) = tuple.iter().find(|g| !group.contains(g)) {
        return Err(AlgebraError::Malformed(format!("{g:?} is not an element of {group}")));
    }
    let idx = |i: usize, j: usize| i * n + j;
    let label = |i: usize, j: usize| {
        if n < 10 {
            format!("e{}{}", i + 1, j + 1)
        } else {
            format!("e{},{}", i + 1, j + 1)
        }
    };
    let mut labels = Vec::with_capacity(n * n);
    let mut degrees = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            labels.push(label(i, j));
            degrees.push(group.divide(&tuple[i], &tuple[j]));
        }
    }
    let mut products: Products = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                products.push((idx(i, j), idx(j, l), vec![(idx(i, l), field.one())]));
            }
        }
    }
    let mut unit = vec![field.zero(); n * n];
    for i in 0..n {
        unit[idx(i, i)] = field.one();
    }
    GradedAlgebra::new(field, group, labels, degrees, products, Some(unit))
}

/// The zero algebra, graded by the trivial group.
pub fn zero_algebra(field: Field) -> GradedAlgebra {
    GradedAlgebra::new(field, Group::trivial(), vec![], vec![], vec![], None).expect("empty")
}

/// `A_1 ⊕ … ⊕ A_k` with componentwise multiplication; basis labels get a
/// `.copy` suffix. The result is not unital.
pub fn direct_sum(parts: &[GradedAlgebra]) -> Result<GradedAlgebra, AlgebraError> {
    let Some(first) = parts.first() else {
        return Err(AlgebraError::Malformed("direct sum of no algebras".into()));
    };
    let field = first.field();
    let group = first.group().clone();
    for p in parts {
        if p.field() != field {
            return Err(AlgebraError::FieldMismatch(field, p.field()));
        }
        if *p.group() != group {
            return Err(AlgebraError::GroupMismatch);
        }
    }
    let mut labels = Vec::new();
    let mut degrees = Vec::new();
    let mut products: Products = Vec::new();
    let mut offset = 0;
    for (copy, p) in parts.iter().enumerate() {
        labels.extend(p.labels().iter().map(|l| format!("{l}.{}", copy + 1)));
        degrees.extend(p.degrees().iter().cloned());
        for (i, j, c) in p.products() {
            products.push((i + offset, j + offset, c.into_iter().map(|(k, x)| (k + offset, x)).collect()));
        }
        offset += p.dim();
    }
    GradedAlgebra::new(field, group, labels, degrees, products, None)
}

/// The algebra product `A × B` of two trivially graded algebras, again
/// trivially graded; unital when both factors are.
pub fn direct_product_trivial(a: &GradedAlgebra, b: &GradedAlgebra) -> Result<GradedAlgebra, AlgebraError> {
    if a.field() != b.field() {
        return Err(AlgebraError::FieldMismatch(a.field(), b.field()));
    }
    if !a.is_trivially_graded() || !b.is_trivially_graded() {
        return Err(AlgebraError::NotTriviallyGraded);
    }
    let field = a.field();
    let n = a.dim();
    let labels = a
        .labels()
        .iter()
        .map(|l| format!("({l},0)"))
        .chain(b.labels().iter().map(|l| format!("(0,{l})")))
        .collect();
    let group = Group::trivial();
    let degrees = vec![group.identity(); n + b.dim()];
    let mut products = a.products();
    for (i, j, c) in b.products() {
        products.push((i + n, j + n, c.into_iter().map(|(k, x)| (k + n, x)).collect()));
    }
    let unit = match (a.unit(), b.unit()) {
        (Some(x), Some(y)) => Some(x.iter().chain(y).cloned().collect()),
        _ => None,
    };
    GradedAlgebra::new(field, group, labels, degrees, products, unit)
}

/// `A / I` together with the canonical projection.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub algebra: GradedAlgebra,
    /// Matrix of the projection `A → A/I`.
    pub projection: Matrix,
    pub ideal: Subspace,
    /// Whether `I` is spanned by homogeneous elements, so that `A/I`
    /// carries the induced grading.
    pub homogeneous: bool,
}

/// Quotient by the two-sided ideal generated by `generators`. The ideal is
/// the smallest subspace containing them that is closed under left and
/// right multiplication by basis vectors. The quotient basis consists of the
/// basis vectors of `A` at non-pivot positions of the ideal's echelon form,
/// keeping their labels. The induced grading is attached when the ideal is
/// homogeneous; otherwise the quotient is trivially graded.
pub fn quotient(a: &GradedAlgebra, generators: &[Vector]) -> Result<Quotient, AlgebraError> {
    let field = a.field();
    let n = a.dim();
    let mut ideal = Subspace::span(field, n, generators).map_err(|e| AlgebraError::Malformed(e.to_string()))?;
    loop {
        let mut vectors: Vec<Vector> = ideal.basis().to_vec();
        for v in ideal.basis() {
            for i in 0..n {
                let e = a.basis_vector(i);
                vectors.push(a.multiply(&e, v));
                vectors.push(a.multiply(v, &e));
            }
        }
        let next = Subspace::span(field, n, &vectors).expect("same ambient");
        if next.dim() == ideal.dim() {
            break;
        }
        ideal = next;
    }
    let pivots: Vec<usize> = ideal
        .basis()
        .iter()
        .map(|r| r.iter().position(|x| !x.is_zero()).expect("nonzero row"))
        .collect();
    let kept: Vec<usize> = (0..n).filter(|j| !pivots.contains(j)).collect();
    let reduce = |v: &[Scalar]| -> Vector {
        let mut v = v.to_vec();
        for (row, &p) in ideal.basis().iter().zip(&pivots) {
            let c = v[p].clone();
            if !c.is_zero() {
                for (x, r) in v.iter_mut().zip(row) {
                    *x = &*x - &(&c * r);
                }
            }
        }
        kept.iter().map(|&j| v[j].clone()).collect()
    };
    let columns: Vec<Vector> = (0..n).map(|i| reduce(&a.basis_vector(i))).collect();
    let projection = Matrix::from_columns(field, kept.len(), &columns).expect("consistent shape");

    let homogeneous = a
        .support()
        .iter()
        .map(|g| ideal.intersect(&a.component(g)).expect("same ambient").dim())
        .sum::<usize>()
        == ideal.dim();
    let (group, degrees) = if homogeneous {
        (a.group().clone(), kept.iter().map(|&j| a.degree(j).clone()).collect())
    } else {
        let t = Group::trivial();
        let e = t.identity();
        (t, vec![e; kept.len()])
    };
    let mut products: Products = Vec::new();
    for (x, &i) in kept.iter().enumerate() {
        for (y, &j) in kept.iter().enumerate() {
            let prod = reduce(&a.multiply(&a.basis_vector(i), &a.basis_vector(j)));
            if !is_zero_vector(&prod) {
                products.push((x, y, sparse(&prod)));
            }
        }
    }
    let labels = kept.iter().map(|&j| a.label(j).to_string()).collect();
    let unit = a.unit().map(|u| reduce(u));
    let algebra = GradedAlgebra::new(field, group, labels, degrees, products, unit)?;
    Ok(Quotient {
        algebra,
        projection,
        ideal,
        homogeneous,
    })
}

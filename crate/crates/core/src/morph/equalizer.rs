use super::{GradedMorphism, MorphError};
use crate::galg::{GradedAlgebra, Products};
use crate::linalg::{is_zero_vector, Matrix, Vector};

/// The equalizer of a parallel pair: the span `C` of the homogeneous
/// elements on which both maps agree, with its inclusion into the domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equalizer {
    pub algebra: GradedAlgebra,
    pub inclusion: GradedMorphism,
    alpha: GradedMorphism,
    beta: GradedMorphism,
}

/// `C = ⊕_g ker((α − β)|A^(g))`. Basis vectors of `C` are the kernel bases
/// of the components in support order; a kernel vector that is a basis
/// vector of `A` keeps its label.
pub fn equalizer(alpha: &GradedMorphism, beta: &GradedMorphism) -> Result<Equalizer, MorphError> {
    if alpha.domain() != beta.domain() || alpha.codomain() != beta.codomain() {
        return Err(MorphError::NotComposable);
    }
    if !alpha.is_graded() || !beta.is_graded() {
        return Err(MorphError::NotGraded);
    }
    let a = alpha.domain();
    let field = a.field();
    let diff = alpha.difference(beta);
    let mut basis: Vec<Vector> = Vec::new();
    let mut degrees = Vec::new();
    for g in a.support() {
        let idx = a.component_indices(&g);
        for k in diff.select_columns(&idx).kernel_basis() {
            basis.push(alpha.embed_component(&g, &k));
            degrees.push(g.clone());
        }
    }
    let labels: Vec<String> = basis
        .iter()
        .map(|v| {
            let nz: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
            match nz.as_slice() {
                [i] if v[*i].is_one() => a.label(*i).to_string(),
                _ => a.format_vector(v),
            }
        })
        .collect();
    let inclusion = Matrix::from_columns(field, a.dim(), &basis).expect("shape");
    let coords = |v: &Vector| inclusion.solve(v).expect("closed under multiplication");
    let mut products: Products = Vec::new();
    for (p, x) in basis.iter().enumerate() {
        for (q, y) in basis.iter().enumerate() {
            let prod = a.multiply(x, y);
            if !is_zero_vector(&prod) {
                let c = coords(&prod);
                products.push((p, q, c.into_iter().enumerate().filter(|(_, s)| !s.is_zero()).collect()));
            }
        }
    }
    let unit = a.unit().and_then(|u| inclusion.solve(u));
    let c = GradedAlgebra::new(field, a.group().clone(), labels, degrees, products, unit)
        .map_err(|e| MorphError::Precondition(e.to_string()))?;
    let inclusion = GradedMorphism::new(c.clone(), a.clone(), inclusion)?;
    Ok(Equalizer {
        algebra: c,
        inclusion,
        alpha: alpha.clone(),
        beta: beta.clone(),
    })
}

impl Equalizer {
    /// The unique `φ: D → C` with `i ∘ φ = γ`, for `γ: D → A` with
    /// `αγ = βγ`.
    pub fn factor(&self, gamma: &GradedMorphism) -> Result<GradedMorphism, MorphError> {
        if gamma.codomain() != self.inclusion.codomain() {
            return Err(MorphError::NotComposable);
        }
        if self.alpha.after(gamma)?.matrix() != self.beta.after(gamma)?.matrix() {
            return Err(MorphError::Precondition("αγ ≠ βγ".into()));
        }
        let i = self.inclusion.matrix();
        let columns = gamma
            .matrix()
            .columns()
            .iter()
            .map(|v| i.solve(v))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| MorphError::Precondition("γ does not factor through the equalizer".into()))?;
        GradedMorphism::from_images(gamma.domain().clone(), self.algebra.clone(), &columns)
    }
}

use super::{Field, LinalgError, Matrix, Scalar, Vector};

/// A subspace of `F^n`, stored as the nonzero rows of a reduced row echelon
/// basis. Two subspaces are equal exactly when their stored bases are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace::span(field, ambient, &Matrix::identity(field, ambient).columns())
            .expect("identity columns are well formed")
    }

    /// The span of the given vectors, canonicalized.
    pub fn span(field: Field, ambient: usize, vectors: &[Vector]) -> Result<Subspace, LinalgError> {
        for v in vectors {
            if v.len() != ambient {
                return Err(LinalgError::DimensionMismatch {
                    expected: ambient,
                    found: v.len(),
                });
            }
        }
        if vectors.is_empty() {
            return Ok(Subspace::zero(field, ambient));
        }
        let m = Matrix::from_rows(field, vectors.to_vec())?;
        let (r, rank) = m.rref();
        Ok(Subspace {
            field,
            ambient,
            basis: (0..rank).map(|i| r.row(i).to_vec()).collect(),
        })
    }

    /// Null space of `m`.
    pub fn kernel(m: &Matrix) -> Subspace {
        Subspace::span(m.field(), m.cols(), &m.kernel_basis()).expect("kernel vectors have ambient length")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    fn check_compatible(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        if self.field != other.field {
            return Err(LinalgError::MixedFields {
                expected: self.field,
                found: other.field,
            });
        }
        Ok(())
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool, LinalgError> {
        if v.len() != self.ambient {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient,
                found: v.len(),
            });
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        Ok(Subspace::span(self.field, self.ambient, &rows)?.dim() == self.dim())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_compatible(other)?;
        let rows: Vec<Vector> = self.basis.iter().chain(&other.basis).cloned().collect();
        Subspace::span(self.field, self.ambient, &rows)
    }

    /// Intersection, computed from the kernel of `[B1^T | -B2^T]`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_compatible(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.field, self.ambient));
        }
        let b1 = Matrix::from_columns(self.field, self.ambient, &self.basis)?;
        let neg: Vec<Vector> = other.basis.iter().map(|v| v.iter().map(|x| -x).collect()).collect();
        let b2 = Matrix::from_columns(self.field, self.ambient, &neg)?;
        let system = b1.hstack(&b2)?;
        let k = self.dim();
        let vectors: Vec<Vector> = system
            .kernel_basis()
            .into_iter()
            .map(|coeffs| b1.apply(&coeffs[..k]))
            .collect();
        Subspace::span(self.field, self.ambient, &vectors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(f: Field, xs: &[i64]) -> Vector {
        xs.iter().map(|&x| f.from_i64(x)).collect()
    }

    #[test]
    fn lattice_identities() {
        let f = Field::Rational;
        let s = Subspace::span(f, 3, &[v(f, &[1, 2, 0]), v(f, &[0, 1, 1])]).unwrap();
        assert_eq!(s.intersect(&s).unwrap(), s);
        assert_eq!(s.sum(&s).unwrap(), s);
    }

    #[test]
    fn coordinate_axes() {
        let f = Field::Rational;
        let x = Subspace::span(f, 2, &[v(f, &[1, 0])]).unwrap();
        let y = Subspace::span(f, 2, &[v(f, &[0, 1])]).unwrap();
        let d = Subspace::span(f, 2, &[v(f, &[1, 1])]).unwrap();
        assert!(x.intersect(&y).unwrap().is_zero());
        assert_eq!(x.sum(&d).unwrap(), Subspace::full(f, 2));
    }

    #[test]
    fn dimension_formula() {
        let f = Field::Prime(3);
        let a = Subspace::span(f, 4, &[v(f, &[1, 0, 1, 0]), v(f, &[0, 1, 0, 0])]).unwrap();
        let b = Subspace::span(f, 4, &[v(f, &[1, 1, 1, 0]), v(f, &[0, 0, 0, 1])]).unwrap();
        let sum = a.sum(&b).unwrap();
        let meet = a.intersect(&b).unwrap();
        assert_eq!(sum.dim() + meet.dim(), a.dim() + b.dim());
        assert_eq!(meet.dim(), 1);
        assert!(meet.contains(&v(f, &[1, 1, 1, 0])).unwrap());
    }

    #[test]
    fn mismatched_dimensions() {
        let f = Field::Rational;
        let a = Subspace::zero(f, 2);
        let b = Subspace::zero(f, 3);
        assert!(a.sum(&b).is_err());
        assert!(a.contains(&v(f, &[1, 2, 3])).is_err());
    }
}

use num_traits::{One, Zero};

use super::lincomb::{LinComb, Scalar};
use crate::error::{Error, Result};

/// A square linear map on the basis `0..dim`, optionally carrying a verified inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearOperator {
    dim: usize,
    images: Vec<LinComb<usize>>,
    inverse: Option<Vec<LinComb<usize>>>,
}

impl LinearOperator {
    pub fn new(dim: usize, images: Vec<LinComb<usize>>) -> Result<Self> {
        if images.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: images.len() });
        }
        for img in &images {
            if let Some(k) = img.keys().find(|k| **k >= dim) {
                return Err(Error::UnknownBasisIndex(*k));
            }
        }
        Ok(LinearOperator { dim, images, inverse: None })
    }

    pub fn identity(dim: usize) -> Self {
        let images: Vec<_> = (0..dim).map(LinComb::basis).collect();
        LinearOperator { dim, images: images.clone(), inverse: Some(images) }
    }

    pub fn scalar(dim: usize, c: &Scalar) -> Self {
        let images = (0..dim).map(|i| LinComb::term(i, c.clone())).collect();
        LinearOperator { dim, images, inverse: None }
    }

    /// Builds from a row-major matrix `m[row][col]`, columns being images of basis vectors.
    pub fn from_matrix(rows: &[Vec<Scalar>]) -> Result<Self> {
        let dim = rows.len();
        let mut images = vec![LinComb::zero(); dim];
        for (r, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: row.len() });
            }
            for (c, v) in row.iter().enumerate() {
                images[c].add_term(r, v.clone());
            }
        }
        Ok(LinearOperator { dim, images, inverse: None })
    }

    pub fn from_fn<F: FnMut(usize) -> LinComb<usize>>(dim: usize, f: F) -> Result<Self> {
        Self::new(dim, (0..dim).map(f).collect())
    }

    /// Attaches a declared inverse after checking both compositions.
    pub fn with_inverse(mut self, inverse: Vec<LinComb<usize>>) -> Result<Self> {
        let inv = LinearOperator::new(self.dim, inverse)?;
        for i in 0..self.dim {
            let id = LinComb::basis(i);
            if self.apply(&inv.apply(&id)) != id || inv.apply(&self.apply(&id)) != id {
                return Err(Error::InverseMismatch(i));
            }
        }
        self.inverse = Some(inv.images);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn images(&self) -> &[LinComb<usize>] {
        &self.images
    }

    pub fn image(&self, i: usize) -> &LinComb<usize> {
        &self.images[i]
    }

    pub fn has_inverse(&self) -> bool {
        self.inverse.is_some()
    }

    pub fn try_apply(&self, x: &LinComb<usize>) -> Result<LinComb<usize>> {
        if let Some(k) = x.keys().find(|k| **k >= self.dim) {
            return Err(Error::UnknownBasisIndex(*k));
        }
        Ok(self.apply(x))
    }

    /// Applies the operator; indices must lie in the domain.
    pub fn apply(&self, x: &LinComb<usize>) -> LinComb<usize> {
        x.map(|k| self.images[*k].clone())
    }

    pub fn compose(&self, inner: &LinearOperator) -> LinearOperator {
        let images = inner.images.iter().map(|v| self.apply(v)).collect();
        let inverse = match (&self.inverse, &inner.inverse) {
            (Some(a), Some(b)) => {
                let a = LinearOperator { dim: self.dim, images: a.clone(), inverse: None };
                let b = LinearOperator { dim: self.dim, images: b.clone(), inverse: None };
                Some(a.images.iter().map(|v| b.apply(v)).collect())
            }
            _ => None,
        };
        LinearOperator { dim: self.dim, images, inverse }
    }

    /// Returns the inverse, computing it by Gauss-Jordan elimination when not stored.
    pub fn invert(&self) -> Result<LinearOperator> {
        let inv = match &self.inverse {
            Some(inv) => inv.clone(),
            None => self.solve_inverse()?,
        };
        Ok(LinearOperator { dim: self.dim, images: inv, inverse: Some(self.images.clone()) })
    }

    /// Ensures a stored inverse, computing one if needed.
    pub fn invertible(self) -> Result<LinearOperator> {
        if self.inverse.is_some() {
            return Ok(self);
        }
        let inv = self.solve_inverse()?;
        Ok(LinearOperator { inverse: Some(inv), ..self })
    }

    fn solve_inverse(&self) -> Result<Vec<LinComb<usize>>> {
        let n = self.dim;
        let mut m = self.to_matrix();
        let mut inv: Vec<Vec<Scalar>> =
            (0..n).map(|r| (0..n).map(|c| if r == c { Scalar::one() } else { Scalar::zero() }).collect()).collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m[r][col].is_zero()).ok_or(Error::NotInvertible)?;
            m.swap(col, pivot);
            inv.swap(col, pivot);
            let p = m[col][col].clone();
            for c in 0..n {
                m[col][c] = &m[col][c] / &p;
                inv[col][c] = &inv[col][c] / &p;
            }
            for r in 0..n {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in 0..n {
                        let a = &m[col][c] * &f;
                        m[r][c] -= a;
                        let b = &inv[col][c] * &f;
                        inv[r][c] -= b;
                    }
                }
            }
        }
        let op = LinearOperator::from_matrix(&inv)?;
        Ok(op.images)
    }

    /// Row-major matrix: entry `[r][c]` is the coefficient of `e_r` in the image of `e_c`.
    pub fn to_matrix(&self) -> Vec<Vec<Scalar>> {
        let n = self.dim;
        let mut m = vec![vec![Scalar::zero(); n]; n];
        for (c, img) in self.images.iter().enumerate() {
            for (r, v) in img.iter() {
                m[*r][c] = v.clone();
            }
        }
        m
    }

    /// Integer power; negative exponents use the inverse.
    pub fn power(&self, k: i64) -> Result<LinearOperator> {
        let base = if k < 0 { self.invert()? } else { self.clone() };
        let mut out = LinearOperator::identity(self.dim);
        if base.inverse.is_none() {
            out.inverse = None;
        }
        for _ in 0..k.unsigned_abs() {
            out = base.compose(&out);
        }
        Ok(out)
    }

    /// The dual map `f ↦ f∘self` on the dual basis.
    pub fn transpose(&self) -> LinearOperator {
        let t = |imgs: &Vec<LinComb<usize>>| -> Vec<LinComb<usize>> {
            let mut out = vec![LinComb::zero(); self.dim];
            for (c, img) in imgs.iter().enumerate() {
                for (r, v) in img.iter() {
                    out[*r].add_term(c, v.clone());
                }
            }
            out
        };
        LinearOperator { dim: self.dim, images: t(&self.images), inverse: self.inverse.as_ref().map(t) }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, v)| *v == LinComb::basis(i))
    }

    pub fn commutes_with(&self, other: &LinearOperator) -> bool {
        (0..self.dim).all(|i| {
            let e = LinComb::basis(i);
            self.apply(&other.apply(&e)) == other.apply(&self.apply(&e))
        })
    }

    pub fn same_action(&self, other: &LinearOperator) -> bool {
        self.dim == other.dim && self.images == other.images
    }

    /// Applies `self ⊗ other` to a pair-basis combination.
    pub fn apply_pair(&self, other: &LinearOperator, x: &LinComb<(usize, usize)>) -> LinComb<(usize, usize)> {
        let mut out = LinComb::zero();
        for ((a, b), c) in x.iter() {
            for (i, x1) in self.images[*a].iter() {
                for (j, y1) in other.images[*b].iter() {
                    out.add_term((*i, *j), c * x1 * y1);
                }
            }
        }
        out
    }
}

/// Block-diagonal tensor operator `a ⊗ b` on the pair basis flattened as `i * dim(b) + j`.
pub fn tensor_operator(a: &LinearOperator, b: &LinearOperator) -> LinearOperator {
    let (n, m) = (a.dim(), b.dim());
    let build = |x: &[LinComb<usize>], y: &[LinComb<usize>]| -> Vec<LinComb<usize>> {
        let mut out = Vec::with_capacity(n * m);
        for i in 0..n {
            for j in 0..m {
                let mut v = LinComb::zero();
                for (p, c) in x[i].iter() {
                    for (q, d) in y[j].iter() {
                        v.add_term(p * m + q, c * d);
                    }
                }
                out.push(v);
            }
        }
        out
    };
    let images = build(&a.images, &b.images);
    let inverse = match (&a.inverse, &b.inverse) {
        (Some(x), Some(y)) => Some(build(x, y)),
        _ => None,
    };
    LinearOperator { dim: n * m, images, inverse }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundation::lincomb::int;

    fn swap() -> LinearOperator {
        LinearOperator::new(2, vec![LinComb::basis(1), LinComb::basis(0)]).unwrap()
    }

    #[test]
    fn apply_basic_maps() {
        let id = LinearOperator::identity(2);
        assert_eq!(id.apply(&LinComb::basis(1)), LinComb::basis(1));
        let neg = LinearOperator::scalar(2, &int(-1));
        assert_eq!(neg.apply(&LinComb::term(0, int(2))), LinComb::term(0, int(-2)));
        assert_eq!(swap().apply(&LinComb::basis(0)), LinComb::basis(1));
        assert!(matches!(id.try_apply(&LinComb::basis(5)), Err(Error::UnknownBasisIndex(5))));
    }

    #[test]
    fn invert_cases() {
        assert!(LinearOperator::identity(3).invert().unwrap().is_identity());
        assert!(swap().invert().unwrap().same_action(&swap()));
        let proj = LinearOperator::new(2, vec![LinComb::basis(0), LinComb::zero()]).unwrap();
        assert!(matches!(proj.invert(), Err(Error::NotInvertible)));
    }

    #[test]
    fn declared_inverse_is_verified() {
        let a = LinearOperator::new(1, vec![LinComb::term(0, int(2))]).unwrap();
        assert!(a.clone().with_inverse(vec![LinComb::term(0, int(1) / int(2))]).is_ok());
        assert!(matches!(a.with_inverse(vec![LinComb::term(0, int(2))]), Err(Error::InverseMismatch(0))));
    }

    #[test]
    fn powers_and_transpose() {
        let a = LinearOperator::new(2, vec![LinComb::basis(0).plus(&LinComb::basis(1)), LinComb::basis(1)]).unwrap();
        let a3 = a.power(3).unwrap();
        assert_eq!(a3.image(0), &LinComb::basis(0).plus(&LinComb::term(1, int(3))));
        let back = a3.compose(&a.power(-3).unwrap());
        assert!(back.is_identity());
        assert_eq!(a.transpose().transpose(), a);
    }
}

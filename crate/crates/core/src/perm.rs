//! Finite permutations, the concrete realization of the translation group.
//!
//! A [`Perm`] of degree `m` is a bijection on the points `0..m`, stored as
//! its image array. Composition follows the apply-right-then-left
//! convention: `a.compose(b)` maps `x` to `a(b(x))`, so `b` acts first.
//! Every identity in [`crate::triality`] is evaluated under this
//! convention.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("degree must be positive")]
    InvalidDegree,
    #[error("cannot compose permutations of degree {left} and {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("images are not a bijection: value {value} appears twice")]
    NotABijection { value: usize },
    #[error("image {value} out of range for degree {degree}")]
    ImageOutOfRange { value: usize, degree: usize },
}

/// A permutation of the points `0..degree()`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    /// The identity permutation on `m` points.
    pub fn identity(m: usize) -> Result<Perm, PermError> {
        if m == 0 {
            return Err(PermError::InvalidDegree);
        }
        Ok(Perm {
            images: (0..m).collect(),
        })
    }

    /// Builds a permutation from its image array, checking that the array
    /// is a bijection on `0..images.len()`.
    pub fn from_images(images: Vec<usize>) -> Result<Perm, PermError> {
        if images.is_empty() {
            return Err(PermError::InvalidDegree);
        }
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &v in &images {
            if v >= degree {
                return Err(PermError::ImageOutOfRange { value: v, degree });
            }
            if seen[v] {
                return Err(PermError::NotABijection { value: v });
            }
            seen[v] = true;
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// The image of point `x`. Panics if `x` is outside the domain.
    #[inline]
    pub fn image(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self` after `other`: the result maps `x` to `self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Result<Perm, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Perm {
            images: other.images.iter().map(|&y| self.images[y]).collect(),
        })
    }

    /// The inverse permutation: `a.inverse().compose(&a)` is the identity.
    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

//! Lattice points used as monomial exponents and polytope vertices.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// An integer n-tuple: a monomial exponent, a polytope vertex, or a linear
/// functional on the exponent lattice, depending on context.
///
/// Ordering is lexicographic on the coordinates, which fixes the canonical
/// term order used everywhere in this crate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector {
    coords: Vec<BigInt>,
}

impl ExponentVector {
    pub fn new(coords: Vec<BigInt>) -> Self {
        Self { coords }
    }

    /// Builds from machine integers; the common entry point in tests.
    pub fn from_i64(coords: &[i64]) -> Self {
        Self {
            coords: coords.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    pub fn zero(dim: usize) -> Self {
        Self {
            coords: vec![BigInt::zero(); dim],
        }
    }

    /// The i-th standard basis vector in `dim` coordinates.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut coords = vec![BigInt::zero(); dim];
        coords[i] = BigInt::from(1);
        Self { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &BigInt {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &Self) -> BigInt {
        debug_assert_eq!(self.dim(), other.dim());
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    /// Divides out the gcd of the coordinates, keeping direction.
    pub fn primitive(&self) -> Self {
        let mut g = BigInt::zero();
        for c in &self.coords {
            g = num_integer::gcd(g, c.abs());
        }
        if g.is_zero() || g == BigInt::from(1) {
            return self.clone();
        }
        Self {
            coords: self.coords.iter().map(|c| c / &g).collect(),
        }
    }

    pub fn scaled(&self, k: &BigInt) -> Self {
        Self {
            coords: self.coords.iter().map(|c| c * k).collect(),
        }
    }
}

impl Add<&ExponentVector> for &ExponentVector {
    type Output = ExponentVector;
    fn add(self, rhs: &ExponentVector) -> ExponentVector {
        debug_assert_eq!(self.dim(), rhs.dim());
        ExponentVector {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub<&ExponentVector> for &ExponentVector {
    type Output = ExponentVector;
    fn sub(self, rhs: &ExponentVector) -> ExponentVector {
        debug_assert_eq!(self.dim(), rhs.dim());
        ExponentVector {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &ExponentVector {
    type Output = ExponentVector;
    fn neg(self) -> ExponentVector {
        ExponentVector {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_and_arithmetic() {
        let a = ExponentVector::from_i64(&[1, -2, 3]);
        let b = ExponentVector::from_i64(&[4, 5, -6]);
        assert_eq!(a.dot(&b), BigInt::from(4 - 10 - 18));
        assert_eq!(&a + &b, ExponentVector::from_i64(&[5, 3, -3]));
        assert_eq!(&a - &b, ExponentVector::from_i64(&[-3, -7, 9]));
        assert_eq!(-&a, ExponentVector::from_i64(&[-1, 2, -3]));
    }

    #[test]
    fn primitive_divides_gcd() {
        let v = ExponentVector::from_i64(&[4, -6, 8]);
        assert_eq!(v.primitive(), ExponentVector::from_i64(&[2, -3, 4]));
        let z = ExponentVector::zero(3);
        assert_eq!(z.primitive(), z);
    }

    #[test]
    fn lexicographic_order() {
        let a = ExponentVector::from_i64(&[0, 5]);
        let b = ExponentVector::from_i64(&[1, 0]);
        assert!(a < b);
    }

    #[test]
    fn display_tuple() {
        let v = ExponentVector::from_i64(&[3, -1]);
        assert_eq!(v.to_string(), "(3, -1)");
    }
}

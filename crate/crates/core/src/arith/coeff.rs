//! Coefficient rings for sparse polynomials.

use std::fmt;
use std::ops::{AddAssign, Neg, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A commutative ring of characteristic zero usable as polynomial coefficients.
pub trait Coeff:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + Send
    + Sync
{
    fn mul_ref(&self, other: &Self) -> Self;

    /// Exact quotient, `None` when `other` does not divide `self` in the ring.
    fn div_exact(&self, other: &Self) -> Option<Self>;

    fn is_negative(&self) -> bool;

    fn from_i64(v: i64) -> Self;

    fn to_rational(&self) -> BigRational;
}

impl Coeff for BigInt {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(other);
        r.is_zero().then_some(q)
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }

    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }
}

impl Coeff for BigRational {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            None
        } else {
            Some(self / other)
        }
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn to_rational(&self) -> BigRational {
        self.clone()
    }
}

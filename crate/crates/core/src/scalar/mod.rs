//! Exact coefficient fields.
//!
//! Every structure in this crate is generic over [`Field`]. Two exact
//! implementations ship: [`BigRational`] and the cyclotomic field type
//! [`Cyclo`], which covers the rationals as its `N = 1` case and is the
//! concrete scalar used by instance files.

mod cyclotomic;
mod parse;
pub(crate) mod poly;

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

pub use cyclotomic::{cyclotomic_polynomial, Cyclo};
pub use parse::{parse_scalar, ScalarParseError};

/// An exact field. Equality is structural and must coincide with field equality.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + AddAssign
    + SubAssign
    + Send
    + Sync
    + 'static
{
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn try_inv(&self) -> Option<Self>;
    fn from_int(n: i64) -> Self;

    fn neg_ref(&self) -> Self {
        -self.clone()
    }

    /// `self += a * b`, skipping the product when either factor vanishes.
    fn acc_mul(&mut self, a: &Self, b: &Self) {
        if !a.is_zero() && !b.is_zero() {
            *self += a.mul_ref(b);
        }
    }

    fn div_ref(&self, rhs: &Self) -> Option<Self> {
        rhs.try_inv().map(|r| self.mul_ref(&r))
    }
}

impl Field for BigRational {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

/// Which field the scalars of a document live in: the rationals extended by a
/// primitive `order`-th root of unity. `order == 1` is the rational field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    pub order: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldKind {
    Rational,
    Cyclotomic,
}

impl FieldSpec {
    pub const RATIONAL: FieldSpec = FieldSpec { order: 1 };

    pub fn cyclotomic(order: u32) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        FieldSpec { order }
    }

    pub fn kind(&self) -> FieldKind {
        if self.order == 1 {
            FieldKind::Rational
        } else {
            FieldKind::Cyclotomic
        }
    }

    /// The primitive root of unity generating the field.
    pub fn zeta(&self) -> Cyclo {
        Cyclo::zeta(self.order)
    }

    /// All powers of the stored root of unity, `zeta^0 .. zeta^(order-1)`,
    /// together with `-1` powers when the order is odd (so that `-1` is always present).
    pub fn roots_of_unity(&self) -> Vec<Cyclo> {
        let n = self.order.max(1);
        let full = if n % 2 == 1 { 2 * n } else { n };
        let mut out = Vec::with_capacity(full as usize);
        let z = self.zeta();
        let mut cur = Cyclo::one();
        for _ in 0..n {
            out.push(cur.clone());
            cur = cur.mul_ref(&z);
        }
        if n % 2 == 1 {
            let extra: Vec<_> = out.iter().map(|x| -x.clone()).collect();
            out.extend(extra);
        }
        out
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            FieldKind::Rational => write!(f, "Q"),
            FieldKind::Cyclotomic => write!(f, "Q(zeta_{})", self.order),
        }
    }
}

/// Render a slice of scalars as `[a, b, c]`.
pub fn fmt_slice<F: Field>(xs: &[F]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_include_minus_one() {
        let roots = FieldSpec::cyclotomic(3).roots_of_unity();
        assert_eq!(roots.len(), 6);
        assert!(roots.contains(&Cyclo::from_int(-1)));
        assert_eq!(FieldSpec::cyclotomic(4).roots_of_unity().len(), 4);
        assert_eq!(FieldSpec::RATIONAL.roots_of_unity(), vec![Cyclo::one(), Cyclo::from_int(-1)]);
    }

    #[test]
    fn rational_field_impl() {
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(half.add_ref(&half), BigRational::one());
        assert!(BigRational::zero().try_inv().is_none());
        assert_eq!(half.try_inv().unwrap(), BigRational::from_int(2));
    }
}

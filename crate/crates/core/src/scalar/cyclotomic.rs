use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{int_div_exact, int_mul, rat_inverse_mod, trim};
use super::Field;

type IntPoly = Arc<Vec<BigInt>>;

fn poly_cache() -> &'static RwLock<HashMap<u32, IntPoly>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, IntPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn cyclotomic_cached(n: u32) -> IntPoly {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    if let Some(p) = poly_cache().read().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by every Phi_d with d | n, d < n.
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    let mut den = vec![BigInt::one()];
    for d in 1..n {
        if n.is_multiple_of(d) {
            den = int_mul(&den, &cyclotomic_cached(d));
        }
    }
    let phi = Arc::new(int_div_exact(&num, &den));
    poly_cache().write().unwrap().insert(n, phi.clone());
    phi
}

/// The `n`-th cyclotomic polynomial, integer coefficients from degree 0 upward.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    cyclotomic_cached(n).as_ref().clone()
}

/// Element of `Q(zeta_N)`: a polynomial in `zeta` of degree below `deg Phi_N`
/// with rational coefficients, trailing zeros trimmed.
///
/// Elements with at most one coefficient are rational and carry `order == 1`,
/// so they combine with elements of any cyclotomic field. Combining two
/// irrational elements of different orders panics.
#[derive(Clone)]
pub struct Cyclo {
    order: u32,
    coeffs: Vec<BigRational>,
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && (self.coeffs.len() <= 1 || self.order == other.order)
    }
}

impl Eq for Cyclo {}

impl Hash for Cyclo {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

fn join_order(a: &Cyclo, b: &Cyclo) -> u32 {
    match (a.order, b.order) {
        (1, o) | (o, 1) => o,
        (x, y) if x == y => x,
        (x, y) => panic!("mixing scalars of Q(zeta_{x}) and Q(zeta_{y})"),
    }
}

impl Cyclo {
    fn normalized(order: u32, mut coeffs: Vec<BigRational>) -> Self {
        trim(&mut coeffs);
        let order = if coeffs.len() <= 1 { 1 } else { order };
        Cyclo { order, coeffs }
    }

    /// Reduce an arbitrary polynomial in `zeta` modulo `Phi_order`.
    pub fn from_poly(order: u32, mut coeffs: Vec<BigRational>) -> Self {
        let m = cyclotomic_cached(order);
        let deg = m.len() - 1;
        trim(&mut coeffs);
        while coeffs.len() > deg {
            let top = coeffs.len() - 1;
            let c = coeffs.pop().unwrap();
            if !c.is_zero() {
                let shift = top - deg;
                for (j, mj) in m.iter().take(deg).enumerate() {
                    if !mj.is_zero() {
                        coeffs[shift + j] -= &c * BigRational::from_integer(mj.clone());
                    }
                }
            }
            trim(&mut coeffs);
        }
        Self::normalized(order, coeffs)
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self::normalized(1, vec![r])
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(num.into(), den.into()))
    }

    /// The generator `zeta` of `Q(zeta_order)`.
    pub fn zeta(order: u32) -> Self {
        Self::zeta_pow(order, 1)
    }

    /// `zeta^k` for any integer `k`, using `zeta^order == 1`.
    pub fn zeta_pow(order: u32, k: i64) -> Self {
        let e = k.rem_euclid(order as i64) as usize;
        let mut coeffs = vec![BigRational::zero(); e + 1];
        coeffs[e] = BigRational::one();
        Self::from_poly(order, coeffs)
    }

    /// Field order `N`; rational elements report `1`.
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Cyclo::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            base = base.mul_ref(&base);
            e >>= 1;
        }
        acc
    }

    fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Cyclo::zero();
        }
        Cyclo { order: self.order, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    fn combine(&self, rhs: &Self, sub: bool) -> Self {
        let order = join_order(self, rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let v = match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => {
                    if sub {
                        a - b
                    } else {
                        a + b
                    }
                }
                (Some(a), None) => a.clone(),
                (None, Some(b)) => {
                    if sub {
                        -b.clone()
                    } else {
                        b.clone()
                    }
                }
                (None, None) => unreachable!(),
            };
            out.push(v);
        }
        Self::normalized(order, out)
    }
}

impl Field for Cyclo {
    fn add_ref(&self, rhs: &Self) -> Self {
        if rhs.coeffs.is_empty() {
            return self.clone();
        }
        if self.coeffs.is_empty() {
            return rhs.clone();
        }
        self.combine(rhs, false)
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        if rhs.coeffs.is_empty() {
            return self.clone();
        }
        self.combine(rhs, true)
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        match (self.coeffs.len(), rhs.coeffs.len()) {
            (0, _) | (_, 0) => Cyclo::zero(),
            (1, 1) => Cyclo { order: 1, coeffs: vec![&self.coeffs[0] * &rhs.coeffs[0]] },
            (1, _) => rhs.scale(&self.coeffs[0]),
            (_, 1) => self.scale(&rhs.coeffs[0]),
            _ => {
                let order = join_order(self, rhs);
                let mut prod = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
                for (i, x) in self.coeffs.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (j, y) in rhs.coeffs.iter().enumerate() {
                        if !y.is_zero() {
                            prod[i + j] += x * y;
                        }
                    }
                }
                Cyclo::from_poly(order, prod)
            }
        }
    }

    fn try_inv(&self) -> Option<Self> {
        match self.coeffs.len() {
            0 => None,
            1 => Some(Cyclo { order: 1, coeffs: vec![self.coeffs[0].recip()] }),
            _ => {
                let m: Vec<BigRational> =
                    cyclotomic_cached(self.order).iter().map(|c| BigRational::from_integer(c.clone())).collect();
                rat_inverse_mod(&self.coeffs, &m).map(|s| Self::normalized(self.order, s))
            }
        }
    }

    fn from_int(n: i64) -> Self {
        Self::normalized(1, vec![BigRational::from_integer(n.into())])
    }
}

impl Zero for Cyclo {
    fn zero() -> Self {
        Cyclo { order: 1, coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for Cyclo {
    fn one() -> Self {
        Cyclo { order: 1, coeffs: vec![BigRational::one()] }
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(mut self) -> Cyclo {
        for c in self.coeffs.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Add for Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: Cyclo) -> Cyclo {
        self.add_ref(&rhs)
    }
}

impl Sub for Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: Cyclo) -> Cyclo {
        self.sub_ref(&rhs)
    }
}

impl Mul for Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: Cyclo) -> Cyclo {
        self.mul_ref(&rhs)
    }
}

impl AddAssign for Cyclo {
    fn add_assign(&mut self, rhs: Cyclo) {
        if rhs.coeffs.is_empty() {
            return;
        }
        if self.coeffs.is_empty() {
            *self = rhs;
            return;
        }
        let order = join_order(self, &rhs);
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigRational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a += b;
        }
        let coeffs = std::mem::take(&mut self.coeffs);
        *self = Self::normalized(order, coeffs);
    }
}

impl SubAssign for Cyclo {
    fn sub_assign(&mut self, rhs: Cyclo) {
        *self += -rhs;
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, r: &BigRational) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Cyclo {
    /// Canonical printing, readable back by [`super::parse_scalar`]:
    /// terms by increasing power, e.g. `1/2 - 3*zeta + zeta^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write_rational(f, &a)?,
                _ => {
                    if !a.is_one() {
                        write_rational(f, &a)?;
                        write!(f, "*")?;
                    }
                    if k == 1 {
                        write!(f, "zeta")?;
                    } else {
                        write!(f, "zeta^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// Independent oracle: Phi_n by dividing x^n - 1 by the product of the
    /// polynomials for proper divisors, recursing from scratch (no cache).
    fn phi_oracle(n: u32) -> Vec<BigInt> {
        let mut num = vec![BigInt::zero(); n as usize + 1];
        num[0] = BigInt::from(-1);
        num[n as usize] = BigInt::one();
        for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
            num = int_div_exact(&num, &phi_oracle(d));
        }
        num
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(8), ints(&[1, 0, 0, 0, 1]));
        for n in 1..=24 {
            assert_eq!(cyclotomic_polynomial(n), phi_oracle(n), "n = {n}");
        }
    }

    #[test]
    fn product_over_divisors_is_x_n_minus_1() {
        for n in 1..=16u32 {
            let mut prod = vec![BigInt::one()];
            for d in (1..=n).filter(|d| n % d == 0) {
                prod = int_mul(&prod, &cyclotomic_polynomial(d));
            }
            let mut expect = vec![BigInt::zero(); n as usize + 1];
            expect[0] = BigInt::from(-1);
            expect[n as usize] = BigInt::one();
            assert_eq!(prod, expect);
        }
    }

    #[test]
    fn zeta_identities() {
        for n in [1u32, 2, 3, 4, 5, 6, 8, 12] {
            let z = Cyclo::zeta(n);
            assert_eq!(z.pow(n as u64), Cyclo::one(), "zeta^N for N={n}");
            assert_eq!(z.mul_ref(&Cyclo::zeta_pow(n, n as i64 - 1)), Cyclo::one());
            // Phi_N(zeta) == 0
            let mut acc = Cyclo::zero();
            for (k, c) in cyclotomic_polynomial(n).iter().enumerate() {
                let c = Cyclo::from_rational(BigRational::from_integer(c.clone()));
                acc += c.mul_ref(&z.pow(k as u64));
            }
            assert!(acc.is_zero(), "Phi_{n}(zeta) != 0");
        }
        assert_eq!(Cyclo::zeta(2), Cyclo::from_int(-1));
        assert_eq!(Cyclo::zeta(1), Cyclo::one());
        assert_eq!(Cyclo::zeta_pow(4, 2), Cyclo::from_int(-1));
        assert_eq!(Cyclo::zeta_pow(4, -1), Cyclo::zeta_pow(4, 3));
    }

    #[test]
    fn inverse_of_one_plus_zeta3() {
        let a = Cyclo::one() + Cyclo::zeta(3);
        let inv = a.try_inv().unwrap();
        assert_eq!(inv, -Cyclo::zeta(3));
        assert_eq!(inv.mul_ref(&a), Cyclo::one());
        assert!(Cyclo::zero().try_inv().is_none());
    }

    #[test]
    fn half_plus_half() {
        let h = Cyclo::from_ratio(1, 2);
        assert_eq!(h.add_ref(&h), Cyclo::one());
        assert_eq!(h.sub_ref(&h), Cyclo::zero());
    }

    #[test]
    fn display_forms() {
        let z = Cyclo::zeta(8);
        let x = Cyclo::from_ratio(1, 2) - Cyclo::from_int(3).mul_ref(&z) + z.pow(2);
        assert_eq!(x.to_string(), "1/2 - 3*zeta + zeta^2");
        assert_eq!((-z.clone()).to_string(), "-zeta");
        assert_eq!(Cyclo::zero().to_string(), "0");
        assert_eq!(Cyclo::from_ratio(-3, 4).to_string(), "-3/4");
    }

    #[test]
    #[should_panic(expected = "mixing")]
    fn mixing_fields_panics() {
        let _ = Cyclo::zeta(3).add_ref(&Cyclo::zeta(4));
    }
}

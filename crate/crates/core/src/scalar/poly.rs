//! Dense univariate polynomials, coefficients stored low degree first with
//! trailing zeros trimmed.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) fn trim<T: Zero>(p: &mut Vec<T>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn int_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Exact division of integer polynomials by a monic divisor. Panics if the
/// remainder is nonzero.
pub(crate) fn int_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    assert!(den.last().is_some_and(|c| c.is_one()), "divisor must be monic");
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    if rem.len() < den.len() {
        assert!(rem.iter().all(|c| c.is_zero()), "inexact division");
        return Vec::new();
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[k + j] -= &c * d;
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(|c| c.is_zero()), "inexact division");
    trim(&mut quot);
    quot
}

fn rat_sub_scaled_shift(target: &mut Vec<BigRational>, src: &[BigRational], scale: &BigRational, shift: usize) {
    if target.len() < src.len() + shift {
        target.resize(src.len() + shift, BigRational::zero());
    }
    for (j, s) in src.iter().enumerate() {
        if !s.is_zero() {
            target[j + shift] -= scale * s;
        }
    }
    trim(target);
}

/// Quotient and remainder of rational polynomials.
pub(crate) fn rat_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead_inv = b[db].recip();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = &rem[rem.len() - 1] * &lead_inv;
        quot[shift] = c.clone();
        rat_sub_scaled_shift(&mut rem, b, &c, shift);
    }
    trim(&mut quot);
    (quot, rem)
}

pub(crate) fn rat_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

fn rat_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out: Vec<BigRational> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            match b.get(i) {
                Some(y) => x - y,
                None => x,
            }
        })
        .collect();
    trim(&mut out);
    out
}

/// Returns `s` with `s * a == 1 (mod m)`, or `None` when `gcd(a, m) != 1`.
pub(crate) fn rat_inverse_mod(a: &[BigRational], m: &[BigRational]) -> Option<Vec<BigRational>> {
    // Invariant: r_i == s_i * a (mod m).
    let (_, mut r0) = rat_divmod(a, m);
    let mut r1 = m.to_vec();
    let mut s0 = vec![BigRational::one()];
    let mut s1: Vec<BigRational> = Vec::new();
    if r0.is_empty() {
        return None;
    }
    while !r1.is_empty() {
        let (q, r) = rat_divmod(&r0, &r1);
        let s = rat_sub(&s0, &rat_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].recip();
    let scaled: Vec<BigRational> = s0.iter().map(|x| x * &c).collect();
    let (_, reduced) = rat_divmod(&scaled, m);
    Some(reduced)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }
    fn rats(xs: &[i64]) -> Vec<BigRational> {
        xs.iter().map(|&x| BigRational::from_integer(x.into())).collect()
    }

    #[test]
    fn exact_division() {
        // (x^2 - 1) / (x - 1) = x + 1
        assert_eq!(int_div_exact(&ints(&[-1, 0, 1]), &ints(&[-1, 1])), ints(&[1, 1]));
        assert_eq!(int_mul(&ints(&[1, 1]), &ints(&[-1, 1])), ints(&[-1, 0, 1]));
    }

    #[test]
    #[should_panic(expected = "inexact")]
    fn inexact_division_panics() {
        int_div_exact(&ints(&[1, 0, 1]), &ints(&[-1, 1]));
    }

    #[test]
    fn inverse_mod_quadratic() {
        // (1 + x)^{-1} mod x^2 + x + 1 = -x
        let inv = rat_inverse_mod(&rats(&[1, 1]), &rats(&[1, 1, 1])).unwrap();
        assert_eq!(inv, rats(&[0, -1]));
        // x has no inverse mod x^2
        assert!(rat_inverse_mod(&rats(&[0, 1]), &rats(&[0, 0, 1])).is_none());
    }
}

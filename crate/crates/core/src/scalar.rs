//! Exact scalars: arbitrary-precision rationals whose denominators are
//! constrained to powers of a ring base `b` (the coefficient ring Z[1/b]).
//!
//! Internally every coefficient is a [`BigRational`]; the base enters through
//! membership assertions and through the serialized form, which writes a
//! value as `numerator / base^denom_exp` in lowest terms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// True iff every prime factor of `d` divides `base`.
fn divides_base_power(d: &BigInt, base: i64) -> bool {
    let mut d = d.abs();
    if d.is_one() {
        return true;
    }
    if base <= 1 {
        return false;
    }
    let b = BigInt::from(base);
    loop {
        let g = d.gcd(&b);
        if g.is_one() {
            return d.is_one();
        }
        while (&d % &g).is_zero() {
            d /= &g;
        }
        if d.is_one() {
            return true;
        }
    }
}

/// Checks membership in Z[1/base]; `base = 1` demands integers.
pub fn assert_localized(x: &Rat, base: i64, what: &str) -> Result<()> {
    if divides_base_power(x.denom(), base) {
        Ok(())
    } else {
        Err(Error::NotLocalized {
            base,
            what: format!("{what}: {x}"),
        })
    }
}

/// Lowest-terms `(numerator, denom_exp)` with denominator `base^denom_exp`.
/// Fails when the value does not lie in Z[1/base].
pub fn to_base_form(x: &Rat, base: i64) -> Result<(BigInt, u32)> {
    if x.denom().is_one() {
        return Ok((x.numer().clone(), 0));
    }
    if base <= 1 {
        return Err(Error::NotLocalized {
            base,
            what: x.to_string(),
        });
    }
    let b = BigInt::from(base);
    let mut pow = BigInt::one();
    let mut e = 0u32;
    while e < 4096 {
        if (&pow % x.denom()).is_zero() {
            let num = x.numer() * (&pow / x.denom());
            return Ok((num, e));
        }
        pow *= &b;
        e += 1;
    }
    Err(Error::NotLocalized {
        base,
        what: x.to_string(),
    })
}

pub fn from_base_form(num: BigInt, base: i64, denom_exp: u32) -> Rat {
    if denom_exp == 0 {
        Rat::from_integer(num)
    } else {
        Rat::new(num, BigInt::from(base).pow(denom_exp))
    }
}

/// `a^-1 mod m` in `[0, m)`. Errors when `gcd(a, m) > 1`.
pub fn mod_inverse(a: i64, m: i64) -> Result<i64> {
    assert!(m >= 1);
    if m == 1 {
        return Ok(0);
    }
    let (mut r0, mut r1) = (m as i128, (a.rem_euclid(m)) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return Err(Error::NotCoprime(a, m));
    }
    Ok((s0.rem_euclid(m as i128)) as i64)
}

/// Sign of a nonzero integer.
pub fn sn(x: i64) -> i64 {
    if x > 0 {
        1
    } else {
        -1
    }
}

/// Euler's totient.
pub fn euler_phi(n: i64) -> i64 {
    assert!(n >= 1);
    let mut n = n;
    let mut phi = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

/// Decomposes |b| as p^l with p prime (or |b| = 1, returned as (1, 0)).
pub fn prime_power(b: i64) -> Result<(i64, u32)> {
    let n = b.abs();
    if n == 0 {
        return Err(Error::NonPrimePower(b));
    }
    if n == 1 {
        return Ok((1, 0));
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut m = n;
            let mut l = 0u32;
            while m % p == 0 {
                m /= p;
                l += 1;
            }
            if m == 1 {
                return Ok((p, l));
            }
            return Err(Error::NonPrimePower(b));
        }
        p += 1;
    }
    Ok((n, 1))
}

/// Largest j with p^j | n (for p >= 2).
pub fn p_valuation(n: i64, p: i64) -> usize {
    assert!(n != 0 && p >= 2);
    let mut n = n.abs();
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

pub fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            return false;
        }
        p += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mod_inverse_examples() {
        assert_eq!(mod_inverse(4, 7).unwrap(), 2);
        assert_eq!(mod_inverse(1, 9).unwrap(), 1);
        assert_eq!(mod_inverse(3, 5).unwrap(), 2);
        assert_eq!(mod_inverse(-3, 5).unwrap(), 3);
        assert!(mod_inverse(6, 9).is_err());
    }

    #[test]
    fn base_form_round_trip() {
        let x = rat_frac(7, 25);
        let (num, e) = to_base_form(&x, 5).unwrap();
        assert_eq!((num.clone(), e), (BigInt::from(7), 2));
        assert_eq!(from_base_form(num, 5, e), x);
        // 2/10 = 1/5 is representable over base 10 as 2/10^1
        let y = rat_frac(1, 5);
        let (num, e) = to_base_form(&y, 10).unwrap();
        assert_eq!((num, e), (BigInt::from(2), 1));
        assert!(to_base_form(&rat_frac(1, 3), 5).is_err());
    }

    #[test]
    fn phi_and_prime_power() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(9), 6);
        assert_eq!(euler_phi(15), 8);
        assert_eq!(prime_power(8).unwrap(), (2, 3));
        assert_eq!(prime_power(-9).unwrap(), (3, 2));
        assert_eq!(prime_power(1).unwrap(), (1, 0));
        assert!(prime_power(12).is_err());
    }
}

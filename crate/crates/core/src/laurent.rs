//! Sparse exact Laurent polynomials in a formal fractional power of q.
//!
//! A [`LaurentPoly`] stores terms as a map `scaled exponent -> coefficient`,
//! where the true exponent of q is `scaled / exp_den`. The denominator
//! `exp_den` is 1, 2, 4 or 4b in practice; arithmetic promotes both operands
//! to a common lattice and results are renormalized to the smallest lattice
//! that carries them. Coefficients live in Z[1/base] (checked on demand, not
//! on every operation, so intermediate rational values are allowed).

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{from_base_form, rat_int, to_base_form, Rat};

#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    base: i64,
    exp_den: i64,
    terms: BTreeMap<i64, Rat>,
}

impl LaurentPoly {
    pub fn zero(base: i64) -> Self {
        LaurentPoly {
            base,
            exp_den: 1,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(base: i64) -> Self {
        Self::constant(base, rat_int(1))
    }

    pub fn constant(base: i64, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(0, c);
        }
        LaurentPoly {
            base,
            exp_den: 1,
            terms,
        }
    }

    /// q^(num/den) with coefficient 1.
    pub fn q_pow_frac(base: i64, num: i64, den: i64) -> Self {
        assert!(den >= 1);
        Self::monomial(base, den, num, rat_int(1))
    }

    /// q^n for integer n.
    pub fn q_pow(base: i64, n: i64) -> Self {
        Self::q_pow_frac(base, n, 1)
    }

    /// Coefficient `c` on q^(scaled/exp_den).
    pub fn monomial(base: i64, exp_den: i64, scaled: i64, c: Rat) -> Self {
        assert!(exp_den >= 1);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(scaled, c);
        }
        let mut p = LaurentPoly {
            base,
            exp_den,
            terms,
        };
        p.normalize();
        p
    }

    pub fn from_terms(base: i64, exp_den: i64, entries: Vec<(i64, Rat)>) -> Self {
        let mut terms: BTreeMap<i64, Rat> = BTreeMap::new();
        for (e, c) in entries {
            let slot = terms.entry(e).or_insert_with(Rat::zero);
            *slot += c;
        }
        terms.retain(|_, c| !c.is_zero());
        let mut p = LaurentPoly {
            base,
            exp_den,
            terms,
        };
        p.normalize();
        p
    }

    pub fn base(&self) -> i64 {
        self.base
    }

    pub fn exp_den(&self) -> i64 {
        self.exp_den
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterates (scaled exponent, coefficient) pairs in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = (&i64, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, scaled: i64) -> Rat {
        self.terms.get(&scaled).cloned().unwrap_or_else(Rat::zero)
    }

    /// Reduce exp_den by the gcd of all stored exponents.
    fn normalize(&mut self) {
        if self.terms.is_empty() {
            self.exp_den = 1;
            return;
        }
        let mut g = self.exp_den;
        for e in self.terms.keys() {
            g = g.gcd(e);
            if g == 1 {
                return;
            }
        }
        if g > 1 {
            self.exp_den /= g;
            self.terms = self
                .terms
                .iter()
                .map(|(e, c)| (e / g, c.clone()))
                .collect();
        }
    }

    fn common_base(a: i64, b: i64) -> i64 {
        if a == b {
            a
        } else if a == 1 {
            b
        } else if b == 1 {
            a
        } else {
            // distinct nontrivial localizations never mix in this crate
            panic!("mixing coefficient bases {a} and {b}");
        }
    }

    /// Rescales so `self.exp_den == new_den` (must be a multiple).
    fn promoted(&self, new_den: i64) -> Self {
        assert!(new_den % self.exp_den == 0);
        let f = new_den / self.exp_den;
        if f == 1 {
            return self.clone();
        }
        LaurentPoly {
            base: self.base,
            exp_den: new_den,
            terms: self.terms.iter().map(|(e, c)| (e * f, c.clone())).collect(),
        }
    }

    fn joint(a: &Self, b: &Self) -> (Self, Self, i64) {
        let den = a.exp_den.lcm(&b.exp_den);
        let base = Self::common_base(a.base, b.base);
        let mut x = a.promoted(den);
        let mut y = b.promoted(den);
        x.base = base;
        y.base = base;
        (x, y, base)
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut x, y, _) = Self::joint(self, other);
        for (e, c) in y.terms {
            let slot = x.terms.entry(e).or_insert_with(Rat::zero);
            *slot += c;
            if slot.is_zero() {
                x.terms.remove(&e);
            }
        }
        x.normalize();
        x
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            base: self.base,
            exp_den: self.exp_den,
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (x, y, base) = Self::joint(self, other);
        let mut terms: BTreeMap<i64, Rat> = BTreeMap::new();
        for (e1, c1) in &x.terms {
            for (e2, c2) in &y.terms {
                let e = e1 + e2;
                let slot = terms.entry(e).or_insert_with(Rat::zero);
                *slot += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        let mut p = LaurentPoly {
            base,
            exp_den: x.exp_den,
            terms,
        };
        p.normalize();
        p
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.base);
        }
        LaurentPoly {
            base: self.base,
            exp_den: self.exp_den,
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.base);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitution q -> q^m for integer m (may be negative).
    pub fn subst_q_pow(&self, m: i64) -> Self {
        assert!(m != 0);
        let mut p = LaurentPoly {
            base: self.base,
            exp_den: self.exp_den,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e * m, c.clone()))
                .collect(),
        };
        p.normalize();
        p
    }

    /// Lowest and highest scaled exponents (None for zero).
    pub fn degree_range(&self) -> Option<(i64, i64)> {
        let lo = self.terms.keys().next()?;
        let hi = self.terms.keys().next_back()?;
        Some((*lo, *hi))
    }

    /// Exact division; errors unless the remainder vanishes.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::ExactDivisionFailed("division by zero".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero(self.base));
        }
        let (mut num, den, base) = Self::joint(self, divisor);
        let (dlo, dhi) = den.degree_range().unwrap();
        let dlead = den.terms[&dhi].clone();
        let mut quot: BTreeMap<i64, Rat> = BTreeMap::new();
        // long division from the top; Laurent shift handled by exponent arithmetic
        while !num.terms.is_empty() {
            let (nlo, nhi) = num.degree_range().unwrap();
            if nhi - nlo < dhi - dlo {
                return Err(Error::ExactDivisionFailed(
                    "nonzero remainder".into(),
                ));
            }
            let shift = nhi - dhi;
            let c = &num.terms[&nhi] / &dlead;
            quot.insert(shift, c.clone());
            for (e, k) in &den.terms {
                let t = e + shift;
                let slot = num.terms.entry(t).or_insert_with(Rat::zero);
                *slot -= &c * k;
                if slot.is_zero() {
                    num.terms.remove(&t);
                }
            }
        }
        let mut q = LaurentPoly {
            base,
            exp_den: num.exp_den,
            terms: quot,
        };
        q.terms.retain(|_, c| !c.is_zero());
        q.normalize();
        Ok(q)
    }

    /// True iff all coefficients are integers.
    pub fn has_integer_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.denom().is_one())
    }

    /// True iff all exponents are integers (exp_den == 1 after normalization).
    pub fn has_integer_exponents(&self) -> bool {
        self.exp_den == 1
    }

    /// Product `prod_{j=1}^{count} (1 - q^{x/den} * q^{(j-1) step/den})`
    /// on the scaled lattice `den`.
    pub fn pochhammer_scaled(base: i64, den: i64, x: i64, step: i64, count: u32) -> Self {
        let mut acc = Self::one(base);
        for j in 0..count as i64 {
            let f = Self::one(base).sub(&Self::monomial(base, den, x + j * step, rat_int(1)));
            acc = acc.mul(&f);
        }
        acc
    }

    /// (q^a; q)_n with integer a.
    pub fn pochhammer_q(base: i64, a: i64, n: u32) -> Self {
        Self::pochhammer_scaled(base, 1, a, 1, n)
    }

    /// Formal substitution q -> value at rational point (used by oracles).
    pub fn eval_rat(&self, x: &Rat) -> Option<Rat> {
        if self.exp_den != 1 {
            return None;
        }
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut p = Rat::one();
            let n = e.unsigned_abs();
            for _ in 0..n {
                p *= x;
            }
            if *e < 0 {
                p = p.recip();
            }
            acc += c * p;
        }
        Some(acc)
    }

    /// Palindrome check: f(q) == f(q^-1).
    pub fn is_symmetric(&self) -> bool {
        self == &self.subst_q_pow(-1)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if self.exp_den == 1 {
                write!(f, "({c})q^{e}")?;
            } else {
                write!(f, "({c})q^({e}/{})", self.exp_den)?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct LaurentPolyWire {
    base: i64,
    #[serde(rename = "expDen")]
    exp_den: i64,
    terms: Vec<(i64, String, u32)>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let (num, de) = to_base_form(c, self.base)
                    .map_err(|err| serde::ser::Error::custom(err.to_string()))?;
                Ok((*e, num.to_string(), de))
            })
            .collect::<std::result::Result<Vec<_>, S::Error>>()?;
        LaurentPolyWire {
            base: self.base,
            exp_den: self.exp_den,
            terms,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = LaurentPolyWire::deserialize(d)?;
        if wire.exp_den < 1 {
            return Err(D::Error::custom("expDen must be positive"));
        }
        let mut entries = Vec::with_capacity(wire.terms.len());
        for (e, num, de) in wire.terms {
            let n = num
                .parse()
                .map_err(|_| D::Error::custom("bad numerator"))?;
            entries.push((e, from_base_form(n, wire.base, de)));
        }
        Ok(LaurentPoly::from_terms(wire.base, wire.exp_den, entries))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_frac;

    #[test]
    fn lattice_promotion_and_mul() {
        let a = LaurentPoly::q_pow_frac(1, 1, 2); // q^(1/2)
        let b = LaurentPoly::q_pow_frac(1, 1, 4); // q^(1/4)
        let p = a.mul(&b);
        assert_eq!(p, LaurentPoly::q_pow_frac(1, 3, 4));
        assert_eq!(p.exp_den(), 4);
        let q = p.mul(&b); // q^1
        assert_eq!(q.exp_den(), 1);
    }

    #[test]
    fn exact_division() {
        // (q^3 - 1)/(q - 1) = q^2 + q + 1
        let num = LaurentPoly::q_pow(1, 3).sub(&LaurentPoly::one(1));
        let den = LaurentPoly::q_pow(1, 1).sub(&LaurentPoly::one(1));
        let q = num.exact_div(&den).unwrap();
        let expect = LaurentPoly::from_terms(
            1,
            1,
            vec![(0, rat_int(1)), (1, rat_int(1)), (2, rat_int(1))],
        );
        assert_eq!(q, expect);
        assert!(LaurentPoly::one(1).exact_div(&den).is_err());
    }

    #[test]
    fn pochhammer_basic() {
        // (q; q)_2 = (1-q)(1-q^2)
        let p = LaurentPoly::pochhammer_q(1, 1, 2);
        let expect = LaurentPoly::one(1)
            .sub(&LaurentPoly::q_pow(1, 1))
            .mul(&LaurentPoly::one(1).sub(&LaurentPoly::q_pow(1, 2)));
        assert_eq!(p, expect);
        assert!(LaurentPoly::pochhammer_q(1, 1, 0).is_one());
    }

    #[test]
    fn json_round_trip() {
        let p = LaurentPoly::from_terms(
            5,
            4,
            vec![(-3, rat_frac(2, 5)), (1, rat_int(7)), (8, rat_frac(-1, 25))],
        );
        let s = serde_json::to_string(&p).unwrap();
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(p, back);
    }
}

//! Cyclotomic quotients: exact arithmetic in Z[1/b][q]/(Phi_r) and
//! Z[1/b][q]/(Phi_n^k), evaluation of Laurent polynomials at roots of unity,
//! Gauss sums, and Galois conjugation.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::scalar::{
    self, assert_localized, euler_phi, from_base_form, mod_inverse, rat_int, to_base_form, Rat,
};

/// The n-th cyclotomic polynomial, computed by the divide-out recurrence
/// `Phi_n = (q^n - 1) / prod_{d|n, d<n} Phi_d`.
pub fn cyclotomic_poly(n: i64) -> LaurentPoly {
    assert!(n >= 1);
    let mut num = LaurentPoly::q_pow(1, n).sub(&LaurentPoly::one(1));
    for d in 1..n {
        if n % d == 0 {
            num = num
                .exact_div(&cyclotomic_poly(d))
                .expect("cyclotomic division is exact");
        }
    }
    num
}

/// Dense coefficients of Phi_n^k, cached; reductions hit this on every ring
/// operation.
fn phi_power_dense(n: i64, k: u32) -> Arc<Vec<Rat>> {
    static CACHE: OnceLock<Mutex<HashMap<(i64, u32), Arc<Vec<Rat>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&(n, k)) {
        return hit.clone();
    }
    let dense = Arc::new(dense_coeffs(&cyclotomic_poly(n).pow(k)));
    cache.lock().unwrap().insert((n, k), dense.clone());
    dense
}

/// Dense coefficient vector (constant term first) of a Laurent polynomial
/// with integer exponents and no negative powers.
fn dense_coeffs(p: &LaurentPoly) -> Vec<Rat> {
    assert!(p.has_integer_exponents());
    let Some((lo, hi)) = p.degree_range() else {
        return vec![];
    };
    assert!(lo >= 0, "negative exponent in dense conversion");
    let mut v = vec![Rat::zero(); (hi + 1) as usize];
    for (e, c) in p.iter() {
        v[*e as usize] = c.clone();
    }
    v
}

fn trim(v: &mut Vec<Rat>) {
    while v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
}

/// Remainder of `a` modulo the monic polynomial `m` (dense, over Q).
fn poly_rem(mut a: Vec<Rat>, m: &[Rat]) -> Vec<Rat> {
    let dm = m.len() - 1;
    assert!(m[dm].is_one(), "modulus must be monic");
    trim(&mut a);
    while a.len() > dm {
        let da = a.len() - 1;
        let c = a[da].clone();
        if !c.is_zero() {
            let shift = da - dm;
            for (i, mi) in m.iter().enumerate() {
                let x = &c * mi;
                a[shift + i] -= x;
            }
        }
        a.pop();
        trim(&mut a);
    }
    a
}

/// Quotient and remainder of dense rational polynomials (b nonzero).
fn poly_div_rem(mut a: Vec<Rat>, b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut q = vec![Rat::zero(); a.len().saturating_sub(db)];
    while a.len() >= b.len() {
        let da = a.len() - 1;
        let c = &a[da] / &lead;
        let shift = da - db;
        if !c.is_zero() {
            q[shift] = c.clone();
            for (i, bi) in b.iter().enumerate() {
                let x = &c * bi;
                a[shift + i] -= x;
            }
        }
        a.pop();
        trim(&mut a);
    }
    trim(&mut a);
    (q, a)
}

/// Extended Euclid over Q[x]: returns (g, s, t) with s*a + t*b = g (g monic, or zero).
fn poly_xgcd(a: Vec<Rat>, b: Vec<Rat>) -> (Vec<Rat>, Vec<Rat>, Vec<Rat>) {
    fn is_zero(v: &[Rat]) -> bool {
        v.is_empty()
    }
    fn sub_mul(a: &[Rat], q: &[Rat], b: &[Rat]) -> Vec<Rat> {
        // a - q*b
        let mut out = a.to_vec();
        let need = q.len() + b.len();
        if out.len() < need {
            out.resize(need, Rat::zero());
        }
        for (i, qi) in q.iter().enumerate() {
            if qi.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                let x = qi * bj;
                out[i + j] -= x;
            }
        }
        trim(&mut out);
        out
    }
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (vec![Rat::one()], vec![]);
    let (mut t0, mut t1) = (vec![], vec![Rat::one()]);
    while !is_zero(&r1) {
        let (q, r) = poly_div_rem(r0.clone(), &r1);
        let s = sub_mul(&s0, &q, &s1);
        let t = sub_mul(&t0, &q, &t1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    if let Some(lead) = r0.last().cloned() {
        if !lead.is_one() {
            let inv = lead.recip();
            for v in [&mut r0, &mut s0, &mut t0] {
                for c in v.iter_mut() {
                    *c *= &inv;
                }
            }
        }
    }
    (r0, s0, t0)
}

/// An element of Z[1/b][q]/(Phi_r(q)) on the power basis 1, q, ..., q^(phi(r)-1).
/// Coefficients are rationals; membership in Z[1/b] is asserted at contract
/// points, and intermediate values (from ring division) may be in Q.
#[derive(Clone, PartialEq, Eq)]
pub struct CycloElem {
    order: i64,
    base: i64,
    coeffs: Vec<Rat>,
}

impl CycloElem {
    pub fn zero(order: i64, base: i64) -> Self {
        assert!(order >= 1 && order % 2 == 1, "order must be odd");
        CycloElem {
            order,
            base,
            coeffs: vec![Rat::zero(); euler_phi(order) as usize],
        }
    }

    pub fn one(order: i64, base: i64) -> Self {
        Self::from_scalar(order, base, rat_int(1))
    }

    pub fn from_scalar(order: i64, base: i64, c: Rat) -> Self {
        let mut e = Self::zero(order, base);
        e.coeffs[0] = c;
        e
    }

    /// xi^k for the distinguished primitive root xi of this order.
    pub fn root_power(order: i64, base: i64, k: i64) -> Self {
        let mut e = Self::zero(order, base);
        e.add_root_power(k, &rat_int(1));
        e
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn base(&self) -> i64 {
        self.base
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    fn phi_coeffs(&self) -> Vec<Rat> {
        dense_coeffs(&cyclotomic_poly(self.order))
    }

    /// Adds c * xi^k (k arbitrary integer), reducing modulo Phi_r.
    pub fn add_root_power(&mut self, k: i64, c: &Rat) {
        let deg = self.coeffs.len();
        let k = k.rem_euclid(self.order) as usize;
        if k < deg {
            self.coeffs[k] += c;
            return;
        }
        // q^k with phi(r) <= k < r: reduce once through Phi_r
        let mut dense = vec![Rat::zero(); k + 1];
        dense[k] = c.clone();
        let rem = poly_rem(dense, &self.phi_coeffs());
        for (i, x) in rem.into_iter().enumerate() {
            self.coeffs[i] += x;
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order);
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        CycloElem {
            order: self.order,
            base: self.base,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        CycloElem {
            order: self.order,
            base: self.base,
            coeffs: self.coeffs.iter().map(|k| k * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order);
        let n = self.coeffs.len();
        let mut conv = vec![Rat::zero(); 2 * n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                conv[i + j] += a * b;
            }
        }
        let rem = poly_rem(conv, &self.phi_coeffs());
        let mut out = Self::zero(self.order, self.base);
        for (i, c) in rem.into_iter().enumerate() {
            out.coeffs[i] = c;
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.order, self.base);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse in Q(xi) by extended Euclid against Phi_r.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZeroCyclo);
        }
        let mut lift = self.coeffs.clone();
        trim(&mut lift);
        let (g, s, _) = poly_xgcd(lift, self.phi_coeffs());
        if g.len() != 1 {
            return Err(Error::DivisionByZeroCyclo);
        }
        let ginv = g[0].clone().recip();
        let s = poly_rem(s, &self.phi_coeffs());
        let mut out = Self::zero(self.order, self.base);
        for (i, c) in s.into_iter().enumerate() {
            out.coeffs[i] = c * &ginv;
        }
        Ok(out)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inverse()?))
    }

    /// Applies xi -> xi^t for t coprime to the order.
    pub fn galois_conjugate(&self, t: i64) -> Result<Self> {
        if num_integer::gcd(t.rem_euclid(self.order), self.order) != 1 {
            return Err(Error::NotCoprime(t, self.order));
        }
        let mut out = Self::zero(self.order, self.base);
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out.add_root_power(t * i as i64, c);
            }
        }
        Ok(out)
    }

    /// Checks all coefficients lie in Z[1/base].
    pub fn assert_localized(&self, what: &str) -> Result<()> {
        for c in &self.coeffs {
            assert_localized(c, self.base, what)?;
        }
        Ok(())
    }

    /// The rational value when the order is 1 (or the element is rational).
    pub fn as_rational(&self) -> Option<Rat> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

}

impl fmt::Debug for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo(r={}; ", self.order)?;
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})xi^{i}")?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, ")")
    }
}

/// Evaluation q^(1/D) -> xi^(D* ) where D D* = 1 (mod r).
pub fn ev_root(f: &LaurentPoly, r: i64) -> Result<CycloElem> {
    assert!(r >= 1 && r % 2 == 1, "evaluation order must be odd");
    let d = f.exp_den();
    let dstar = match mod_inverse(d, r) {
        Ok(x) => x,
        Err(_) => return Err(Error::NonInvertibleExponentDenominator(d, r)),
    };
    let mut out = CycloElem::zero(r, f.base());
    for (e, c) in f.iter() {
        out.add_root_power(e * dstar, c);
    }
    Ok(out)
}

/// Gauss sum variation: sum over odd n in (0, 2r) of xi^(b (n^2-1)/4).
pub fn gauss_gamma(b: i64, r: i64) -> CycloElem {
    assert!(b != 0 && r >= 1 && r % 2 == 1);
    let mut out = CycloElem::zero(r, 1);
    let mut n = 1;
    while n < 2 * r {
        debug_assert_eq!((n * n - 1) % 4, 0);
        out.add_root_power(b * ((n * n - 1) / 4), &rat_int(1));
        n += 2;
    }
    out
}

/// The quadratic Gauss sum sum_{j=1}^{r} xi^(4* j^2); its square is
/// (-1)^((r-1)/2) r.
pub fn quad_gauss(r: i64) -> CycloElem {
    assert!(r >= 1 && r % 2 == 1);
    let fourstar = mod_inverse(4, r).unwrap_or(0);
    let mut out = CycloElem::zero(r, 1);
    for j in 1..=r {
        out.add_root_power(fourstar * j * j, &rat_int(1));
    }
    out
}

pub use crate::scalar::mod_inverse as mod_inverse_op;

/// An element of Z[1/b][q]/(Phi_n^k(q)), a free module of rank k phi(n).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycloModK {
    n: i64,
    k: u32,
    base: i64,
    coeffs: Vec<Rat>,
}

impl CycloModK {
    pub fn zero(n: i64, k: u32, base: i64) -> Self {
        assert!(n >= 1 && k >= 1);
        CycloModK {
            n,
            k,
            base,
            coeffs: vec![Rat::zero(); (k as i64 * euler_phi(n)) as usize],
        }
    }

    pub fn one(n: i64, k: u32, base: i64) -> Self {
        let mut e = Self::zero(n, k, base);
        e.coeffs[0] = rat_int(1);
        e
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn params(&self) -> (i64, u32, i64) {
        (self.n, self.k, self.base)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    fn modulus(&self) -> Vec<Rat> {
        dense_coeffs(&cyclotomic_poly(self.n).pow(self.k))
    }

    pub fn from_dense(n: i64, k: u32, base: i64, dense: Vec<Rat>) -> Self {
        let mut e = Self::zero(n, k, base);
        let rem = poly_rem(dense, &e.modulus());
        for (i, c) in rem.into_iter().enumerate() {
            e.coeffs[i] = c;
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.n, self.k), (other.n, other.k));
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a -= b;
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!((self.n, self.k), (other.n, other.k));
        let n = self.coeffs.len();
        let mut conv = vec![Rat::zero(); 2 * n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                conv[i + j] += a * b;
            }
        }
        Self::from_dense(self.n, self.k, self.base, conv)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.n, self.k, self.base);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Inverse modulo Phi_n^k over Q (exists iff the image mod Phi_n is nonzero
    /// in every factor; errors otherwise).
    pub fn inverse(&self) -> Result<Self> {
        let mut lift = self.coeffs.clone();
        trim(&mut lift);
        if lift.is_empty() {
            return Err(Error::DivisionByZeroCyclo);
        }
        let (g, s, _) = poly_xgcd(lift, self.modulus());
        if g.len() != 1 {
            return Err(Error::DivisionByZeroCyclo);
        }
        let ginv = g[0].clone().recip();
        let mut out = Self::from_dense(self.n, self.k, self.base, s);
        for c in out.coeffs.iter_mut() {
            *c *= &ginv;
        }
        Ok(out)
    }

    /// Substitution q -> q^m reduced modulo Phi_n^k (m may be negative; q is
    /// invertible in this ring).
    pub fn subst_q_pow(&self, m: i64) -> Self {
        let qinv = self.q_inverse();
        let qpow = |e: i64| -> Self {
            let mut acc = Self::one(self.n, self.k, self.base);
            let b = if e >= 0 {
                let mut q = Self::zero(self.n, self.k, self.base);
                if q.rank() > 1 {
                    q.coeffs[1] = rat_int(1);
                } else {
                    // rank-1 ring (n = 1, k = 1): q == 1
                    q.coeffs[0] = rat_int(1);
                }
                q
            } else {
                qinv.clone()
            };
            for _ in 0..e.unsigned_abs() {
                acc = acc.mul(&b);
            }
            acc
        };
        let mut out = Self::zero(self.n, self.k, self.base);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = qpow(m * i as i64);
            for (o, t) in out.coeffs.iter_mut().zip(&term.coeffs) {
                *o += c * t;
            }
        }
        out
    }

    /// q^-1 mod Phi_n^k, with integer coefficients: if Phi_n^k = q g(q) + e
    /// with e = +-1, then q^-1 = -e g(q).
    pub fn q_inverse(&self) -> Self {
        let m = self.modulus();
        let e = m[0].clone(); // Phi_n(0)^k = +-1
        assert!(e.clone().abs().is_one());
        let mut g = vec![Rat::zero(); m.len() - 1];
        for i in 1..m.len() {
            g[i - 1] = m[i].clone();
        }
        let mut out = Self::from_dense(self.n, self.k, self.base, g);
        let s = -e;
        for c in out.coeffs.iter_mut() {
            *c *= &s;
        }
        out
    }

    pub fn assert_localized(&self, what: &str) -> Result<()> {
        for c in &self.coeffs {
            assert_localized(c, self.base, what)?;
        }
        Ok(())
    }
}

/// Canonical representative of an integer-exponent Laurent polynomial in
/// Z[1/b][q]/(Phi_n^k); negative powers go through the inverse of q.
pub fn reduce_mod_phi_power(f: &LaurentPoly, n: i64, k: u32) -> CycloModK {
    assert!(f.has_integer_exponents(), "integer exponents required");
    let base = f.base();
    let out = CycloModK::zero(n, k, base);
    let qinv = out.q_inverse();
    let mut acc = out;
    for (e, c) in f.iter() {
        let mut term = CycloModK::one(n, k, base);
        if *e >= 0 {
            let mut dense = vec![Rat::zero(); *e as usize + 1];
            dense[*e as usize] = rat_int(1);
            term = CycloModK::from_dense(n, k, base, dense);
        } else {
            for _ in 0..(-e) {
                term = term.mul(&qinv);
            }
        }
        for (a, t) in acc.coeffs.iter_mut().zip(&term.coeffs) {
            *a += c * t;
        }
    }
    acc
}

#[derive(Serialize, Deserialize)]
struct CycloWire {
    order: i64,
    base: i64,
    coeffs: Vec<(String, u32)>,
}

impl Serialize for CycloElem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let (num, de) = to_base_form(c, self.base)
                    .map_err(|e| serde::ser::Error::custom(e.to_string()))?;
                Ok((num.to_string(), de))
            })
            .collect::<std::result::Result<Vec<_>, S::Error>>()?;
        CycloWire {
            order: self.order,
            base: self.base,
            coeffs,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycloElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = CycloWire::deserialize(d)?;
        let mut out = CycloElem::zero(wire.order, wire.base);
        if wire.coeffs.len() != out.coeffs.len() {
            return Err(D::Error::custom("coefficient count != phi(order)"));
        }
        for (i, (num, de)) in wire.coeffs.into_iter().enumerate() {
            let n = num
                .parse()
                .map_err(|_| D::Error::custom("bad numerator"))?;
            out.coeffs[i] = from_base_form(n, wire.base, de);
        }
        Ok(out)
    }
}

/// Evaluation table xi^e for e mod r, used by brute-force summations.
pub struct RootPowers {
    r: i64,
    cache: BTreeMap<i64, CycloElem>,
}

impl RootPowers {
    pub fn new(r: i64) -> Self {
        RootPowers {
            r,
            cache: BTreeMap::new(),
        }
    }

    pub fn get(&mut self, e: i64) -> &CycloElem {
        let e = e.rem_euclid(self.r);
        self.cache
            .entry(e)
            .or_insert_with(|| CycloElem::root_power(self.r, 1, e))
    }

    /// ev of the balanced quantum integer [m] for odd m > 0:
    /// sum of xi^((m-1)/2 - i), i = 0..m-1.
    pub fn q_int(&mut self, m: i64) -> CycloElem {
        assert!(m > 0 && m % 2 == 1);
        let mut out = CycloElem::zero(self.r, 1);
        let top = (m - 1) / 2;
        for i in 0..m {
            out.add_root_power(top - i, &rat_int(1));
        }
        out
    }
}

pub use scalar::is_prime;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_frac;

    #[test]
    fn cyclotomic_poly_examples() {
        let q = |n| LaurentPoly::q_pow(1, n);
        assert_eq!(cyclotomic_poly(1), q(1).sub(&LaurentPoly::one(1)));
        let phi3 = LaurentPoly::from_terms(
            1,
            1,
            vec![(0, rat_int(1)), (1, rat_int(1)), (2, rat_int(1))],
        );
        assert_eq!(cyclotomic_poly(3), phi3);
        let phi6 = LaurentPoly::from_terms(
            1,
            1,
            vec![(0, rat_int(1)), (1, rat_int(-1)), (2, rat_int(1))],
        );
        assert_eq!(cyclotomic_poly(6), phi6);
    }

    #[test]
    fn cyclotomic_product_identity() {
        // prod_{d|n} Phi_d = q^n - 1 for all n <= 25
        for n in 1..=25 {
            let mut prod = LaurentPoly::one(1);
            for d in 1..=n {
                if n % d == 0 {
                    prod = prod.mul(&cyclotomic_poly(d));
                }
            }
            let expect = LaurentPoly::q_pow(1, n).sub(&LaurentPoly::one(1));
            assert_eq!(prod, expect, "n = {n}");
        }
    }

    #[test]
    fn ev_root_fractional() {
        // q^(1/4) at r = 3: 4* = 1 mod 3, so the value is xi
        let f = LaurentPoly::q_pow_frac(1, 1, 4);
        let v = ev_root(&f, 3).unwrap();
        assert_eq!(v, CycloElem::root_power(3, 1, 1));
        // q^(1/5) in the D = 20 lattice at r = 3: 5* = 2 mod 3
        let g = LaurentPoly::q_pow_frac(5, 1, 5);
        let w = ev_root(&g, 3).unwrap();
        assert_eq!(w, CycloElem::root_power(3, 5, 2).scale(&rat_int(1)));
        assert!(ev_root(&LaurentPoly::q_pow_frac(1, 1, 3), 3).is_err());
    }

    #[test]
    fn ev_root_is_ring_hom() {
        let f = LaurentPoly::from_terms(1, 4, vec![(3, rat_int(2)), (-2, rat_int(1))]);
        let g = LaurentPoly::from_terms(1, 2, vec![(1, rat_int(-1)), (4, rat_int(3))]);
        for r in [3, 5, 7, 9] {
            let lhs = ev_root(&f.mul(&g), r).unwrap();
            let rhs = ev_root(&f, r).unwrap().mul(&ev_root(&g, r).unwrap());
            assert_eq!(lhs, rhs);
            let lhs = ev_root(&f.add(&g), r).unwrap();
            let rhs = ev_root(&f, r).unwrap().add(&ev_root(&g, r).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn gauss_sums() {
        // gamma_1 at r = 3 is 2 + xi^2
        let g = gauss_gamma(1, 3);
        let mut expect = CycloElem::from_scalar(3, 1, rat_int(2));
        expect.add_root_power(2, &rat_int(1));
        assert_eq!(g, expect);
        assert!(gauss_gamma(5, 1).is_one());
        // brute 3-term check for b = 2, r = 3
        let g2 = gauss_gamma(2, 3);
        let mut expect2 = CycloElem::zero(3, 1);
        for n in [1i64, 3, 5] {
            expect2.add_root_power(2 * (n * n - 1) / 4, &rat_int(1));
        }
        assert_eq!(g2, expect2);
    }

    #[test]
    fn quad_gauss_squares() {
        assert!(quad_gauss(1).is_one());
        let mut expect = CycloElem::from_scalar(3, 1, rat_int(1));
        expect.add_root_power(1, &rat_int(2));
        assert_eq!(quad_gauss(3), expect);
        for r in (1..=25).step_by(2) {
            let g = quad_gauss(r);
            let sq = g.mul(&g);
            let sign = if ((r - 1) / 2) % 2 == 0 { 1 } else { -1 };
            assert_eq!(
                sq,
                CycloElem::from_scalar(r, 1, rat_int(sign * r)),
                "r = {r}"
            );
        }
    }

    #[test]
    fn inverse_and_galois() {
        // xi^-1 = xi^4 at r = 5
        let xi = CycloElem::root_power(5, 1, 1);
        assert_eq!(xi.inverse().unwrap(), CycloElem::root_power(5, 1, 4));
        // 2 + xi^2 at r = 3
        let mut x = CycloElem::from_scalar(3, 1, rat_int(2));
        x.add_root_power(2, &rat_int(1));
        let inv = x.inverse().unwrap();
        assert!(x.mul(&inv).is_one());
        // galois t = -1 sends 2 + xi^2 to 2 + xi
        let mut expect = CycloElem::from_scalar(3, 1, rat_int(2));
        expect.add_root_power(1, &rat_int(1));
        assert_eq!(x.galois_conjugate(-1).unwrap(), expect);
        assert_eq!(x.galois_conjugate(1).unwrap(), x);
        assert!(x.galois_conjugate(3).is_err());
    }

    #[test]
    fn galois_is_ring_automorphism() {
        let mut x = CycloElem::root_power(9, 1, 2);
        x.add_root_power(5, &rat_frac(1, 3));
        let y = CycloElem::root_power(9, 1, 7).add(&CycloElem::one(9, 1));
        for t in [2, 4, -1] {
            let lhs = x.mul(&y).galois_conjugate(t).unwrap();
            let rhs = x
                .galois_conjugate(t)
                .unwrap()
                .mul(&y.galois_conjugate(t).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn mod_phi_power_reduction() {
        let (n, k) = (5, 2u32);
        // Phi_n^k reduces to 0
        let phik = cyclotomic_poly(n).pow(k);
        assert!(reduce_mod_phi_power(&phik, n, k).is_zero());
        assert!(reduce_mod_phi_power(&LaurentPoly::one(1), n, k)
            .coeffs()
            .iter()
            .take(1)
            .all(|c| c.is_one()));
        // q^(phi(n) k) against the Euclidean remainder computed densely
        let e = euler_phi(n) * k as i64;
        let f = LaurentPoly::q_pow(1, e);
        let red = reduce_mod_phi_power(&f, n, k);
        let mut dense = vec![Rat::zero(); e as usize + 1];
        dense[e as usize] = rat_int(1);
        let rem = poly_rem(dense, &dense_coeffs(&cyclotomic_poly(n).pow(k)));
        for (i, c) in rem.iter().enumerate() {
            assert_eq!(&red.coeffs()[i], c);
        }
        // q * q^-1 = 1
        let q = reduce_mod_phi_power(&LaurentPoly::q_pow(1, 1), n, k);
        let qinv = q.q_inverse();
        let mut prod = q.mul(&qinv);
        assert!(prod.coeffs()[0].is_one());
        prod.coeffs[0] -= rat_int(1);
        assert!(prod.is_zero());
        // negative exponents through q^-1
        let f = LaurentPoly::q_pow(1, -3);
        let red = reduce_mod_phi_power(&f, n, k);
        let q3 = reduce_mod_phi_power(&LaurentPoly::q_pow(1, 3), n, k);
        let mut prod = red.mul(&q3);
        prod.coeffs[0] -= rat_int(1);
        assert!(prod.is_zero());
    }

    #[test]
    fn cyclo_inverse_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for r in [3i64, 5, 7, 9, 15] {
            for _ in 0..100 {
                let mut x = CycloElem::zero(r, 1);
                for i in 0..euler_phi(r) {
                    x.coeffs[i as usize] = rat_int(rng.gen_range(-5..=5));
                }
                if x.is_zero() {
                    continue;
                }
                let inv = x.inverse().unwrap();
                assert!(x.mul(&inv).is_one(), "r = {r}");
            }
        }
    }
}

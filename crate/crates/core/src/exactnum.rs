//! Exact arithmetic in cyclotomic fields `Q(ζ_N)`.
//!
//! A [`Cyclo`] stores its value in the power basis `1, ζ_N, …, ζ_N^{φ(N)-1}`, i.e. reduced modulo
//! the `N`-th cyclotomic polynomial. Operands of different orders are lifted to the lcm of their
//! orders by exponent scaling before combining. Rational values are always stored at order 1, so
//! [`Cyclo::as_rational`] is a lookup.
//!
//! Character values are algebraic integers, so almost every coefficient met in practice is a small
//! integer. All dense work therefore runs on `i128` first and only falls back to [`Rat`] when a
//! coefficient is fractional or an intermediate overflows.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Arbitrary-precision rational, always in lowest terms with a positive denominator.
pub type Rat = BigRational;

/// Largest supported order of a root of unity.
pub const MAX_ORDER: u64 = u32::MAX as u64;

/// Builds an integer-valued [`Rat`].
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Builds `n / d`; `d` must be nonzero.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

fn lcm(a: u32, b: u32) -> u32 {
    let l = (a as u64).lcm(&(b as u64));
    assert!(l <= MAX_ORDER, "cyclotomic order {l} exceeds 2^32-1");
    l as u32
}

fn cyclotomic_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn mobius(mut n: u32) -> i32 {
    let mut result = 1;
    let mut p = 2u32;
    while (p as u64) * (p as u64) <= n as u64 {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Coefficients (constant term first) of the `n`-th cyclotomic polynomial `Φ_n`.
///
/// Computed from `Φ_n = Π_{d | n} (x^d - 1)^{μ(n/d)}` and cached per `n`.
pub fn cyclotomic_poly(n: u32) -> Arc<Vec<i64>> {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    if let Some(p) = cyclotomic_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    let divisors: Vec<u32> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    let mut poly: Vec<i128> = vec![1];
    // multiply the numerator factors first so every division below is exact
    for &d in &divisors {
        if mobius(n / d) == 1 {
            let mut next = vec![0i128; poly.len() + d as usize];
            for (i, &c) in poly.iter().enumerate() {
                next[i + d as usize] += c;
                next[i] -= c;
            }
            poly = next;
        }
    }
    for &d in &divisors {
        if mobius(n / d) == -1 {
            // poly = quotient * (x^d - 1)  =>  quotient_k = quotient_{k-d} - poly_k
            let d = d as usize;
            let qlen = poly.len() - d;
            let mut quotient = vec![0i128; qlen];
            for k in 0..qlen {
                let prev = if k >= d { quotient[k - d] } else { 0 };
                quotient[k] = prev - poly[k];
            }
            poly = quotient;
        }
    }
    let coeffs: Vec<i64> = poly
        .into_iter()
        .map(|c| i64::try_from(c).expect("cyclotomic coefficient overflow"))
        .collect();
    let coeffs = Arc::new(coeffs);
    cyclotomic_cache().lock().unwrap().insert(n, coeffs.clone());
    coeffs
}

/// Euler's totient.
pub fn totient(n: u32) -> u32 {
    (cyclotomic_poly(n).len() - 1) as u32
}

/// Dense coefficient vector indexed by exponent in `Q[x]/(x^L - 1)`.
#[derive(Clone, Debug)]
enum Dense {
    Int(Vec<i128>),
    Rat(Vec<Rat>),
}

fn rat_to_i128(c: &Rat) -> Option<i128> {
    if c.is_integer() {
        c.numer().to_i128()
    } else {
        None
    }
}

impl Dense {
    fn zeros(len: usize) -> Self {
        Dense::Int(vec![0; len])
    }

    fn len(&self) -> usize {
        match self {
            Dense::Int(v) => v.len(),
            Dense::Rat(v) => v.len(),
        }
    }

    fn promote(&mut self) {
        if let Dense::Int(v) = self {
            let r = v.iter().map(|&c| Rat::from_integer(BigInt::from(c))).collect();
            *self = Dense::Rat(r);
        }
    }

    fn add_int(&mut self, exp: usize, c: i128) {
        if let Dense::Int(v) = self {
            if let Some(s) = v[exp].checked_add(c) {
                v[exp] = s;
                return;
            }
            self.promote();
        }
        if let Dense::Rat(v) = self {
            v[exp] += Rat::from_integer(BigInt::from(c));
        }
    }

    fn add_rat(&mut self, exp: usize, c: &Rat) {
        if let Some(i) = rat_to_i128(c) {
            self.add_int(exp, i);
            return;
        }
        self.promote();
        if let Dense::Rat(v) = self {
            v[exp] += c;
        }
    }

    /// Reduces modulo `Φ_order` and packages the result as a canonical [`Cyclo`].
    fn into_cyclo(mut self, order: u32) -> Cyclo {
        debug_assert_eq!(self.len(), order as usize);
        let phi = cyclotomic_poly(order);
        let deg = phi.len() - 1;
        let nonzero: Vec<(usize, i64)> = phi[..deg]
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i, c))
            .collect();
        if let Dense::Int(v) = &mut self {
            if !reduce_int(v, deg, &nonzero) {
                self.promote();
            }
        }
        if let Dense::Rat(v) = &mut self {
            reduce_rat(v, deg, &nonzero);
        }
        let mut coeffs = BTreeMap::new();
        match self {
            Dense::Int(v) => {
                for (e, c) in v.into_iter().enumerate().take(deg) {
                    if c != 0 {
                        coeffs.insert(e as u32, Rat::from_integer(BigInt::from(c)));
                    }
                }
            }
            Dense::Rat(v) => {
                for (e, c) in v.into_iter().enumerate().take(deg) {
                    if !c.is_zero() {
                        coeffs.insert(e as u32, c);
                    }
                }
            }
        }
        Cyclo::from_reduced(order, coeffs)
    }
}

/// In-place reduction `x^d -> x^{d-deg} * (x^deg - Φ)`; returns `false` on overflow, leaving `v`
/// untouched so the caller can redo the work exactly.
fn reduce_int(v: &mut Vec<i128>, deg: usize, phi: &[(usize, i64)]) -> bool {
    let mut work = v.clone();
    for d in (deg..work.len()).rev() {
        let c = work[d];
        if c == 0 {
            continue;
        }
        work[d] = 0;
        let base = d - deg;
        for &(i, p) in phi {
            let Some(t) = c.checked_mul(p as i128) else {
                return false;
            };
            let Some(s) = work[base + i].checked_sub(t) else {
                return false;
            };
            work[base + i] = s;
        }
    }
    *v = work;
    true
}

fn reduce_rat(v: &mut [Rat], deg: usize, phi: &[(usize, i64)]) {
    for d in (deg..v.len()).rev() {
        if v[d].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut v[d]);
        let base = d - deg;
        for &(i, p) in phi {
            v[base + i] -= &c * Rat::from_integer(BigInt::from(p));
        }
    }
}

/// Exact element of a cyclotomic field.
#[derive(Clone)]
pub struct Cyclo {
    order: u32,
    coeffs: BTreeMap<u32, Rat>,
}

impl Cyclo {
    fn from_reduced(order: u32, coeffs: BTreeMap<u32, Rat>) -> Self {
        let rational = coeffs.keys().all(|&e| e == 0);
        if rational {
            Cyclo { order: 1, coeffs }
        } else {
            Cyclo { order, coeffs }
        }
    }

    pub fn zero() -> Self {
        Cyclo { order: 1, coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::from_rat(Rat::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(rat(n))
    }

    pub fn from_rat(r: Rat) -> Self {
        let mut coeffs = BTreeMap::new();
        if !r.is_zero() {
            coeffs.insert(0, r);
        }
        Cyclo { order: 1, coeffs }
    }

    /// `ζ_order^exponent`, with the exponent taken modulo `order`.
    pub fn root_of_unity(order: u32, exponent: i64) -> Self {
        assert!(order >= 1, "root of unity of order 0");
        let e = exponent.rem_euclid(order as i64) as usize;
        let mut dense = Dense::zeros(order as usize);
        dense.add_int(e, 1);
        dense.into_cyclo(order)
    }

    /// `Σ_e counts[e] · ζ_n^e` where `n = counts.len()`.
    pub fn from_exponent_counts(counts: &[i64]) -> Self {
        let n = counts.len() as u32;
        assert!(n >= 1);
        let v = counts.iter().map(|&c| c as i128).collect();
        Dense::Int(v).into_cyclo(n)
    }

    /// `Σ_e coeffs[e] · ζ_n^e` where `n = coeffs.len()`.
    pub fn from_exponent_coeffs(coeffs: &[Rat]) -> Self {
        let n = coeffs.len() as u32;
        assert!(n >= 1);
        Dense::Rat(coeffs.to_vec()).into_cyclo(n)
    }

    /// Order `N` of the cyclotomic field the value is stored in.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Nonzero coefficients in the reduced power basis, ascending by exponent.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rat)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn as_rational(&self) -> Option<Rat> {
        if self.order == 1 {
            Some(self.coeffs.get(&0).cloned().unwrap_or_else(Rat::zero))
        } else {
            None
        }
    }

    /// The value as a machine integer when it is a rational integer that fits.
    pub fn as_i64(&self) -> Option<i64> {
        self.as_rational()
            .filter(|r| r.is_integer())
            .and_then(|r| r.numer().to_i64())
    }

    /// True when every coefficient is an integer, i.e. the value lies in `Z[ζ_N]`.
    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    /// Image under complex conjugation `ζ_N ↦ ζ_N^{-1}`.
    pub fn conjugate(&self) -> Self {
        self.galois(-1)
    }

    /// Image under the Galois automorphism `ζ_N ↦ ζ_N^k`; `k` must be coprime to `N`.
    pub fn galois(&self, k: i64) -> Self {
        let n = self.order as i64;
        debug_assert!(n == 1 || k.rem_euclid(n).gcd(&n) == 1, "non-unit Galois exponent");
        let mut dense = Dense::zeros(self.order as usize);
        for (e, c) in self.terms() {
            let target = ((e as i64) * k).rem_euclid(n) as usize;
            dense.add_rat(target, c);
        }
        dense.into_cyclo(self.order)
    }

    pub fn scale(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return Cyclo::zero();
        }
        Cyclo {
            order: self.order,
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, c * r)).collect(),
        }
    }

    fn lifted(&self, target: u32) -> impl Iterator<Item = (usize, &Rat)> {
        let step = (target / self.order) as usize;
        self.coeffs.iter().map(move |(e, c)| (*e as usize * step, c))
    }

    /// The same value written in `Q(ζ_n)`; `n` must be a multiple of [`Cyclo::order`].
    ///
    /// Values re-expressed in one common field have a unique representation, so their
    /// [`Cyclo::sort_key`]s can be compared directly.
    pub fn in_field(&self, n: u32) -> Cyclo {
        assert!(n.is_multiple_of(self.order), "Q(ζ_{}) is not a subfield of Q(ζ_{n})", self.order);
        let mut dense = Dense::zeros(n as usize);
        for (e, c) in self.lifted(n) {
            dense.add_rat(e, c);
        }
        dense.into_cyclo(n)
    }

    fn int_terms(&self) -> Option<Vec<(u32, i128)>> {
        self.coeffs
            .iter()
            .map(|(e, c)| rat_to_i128(c).map(|v| (*e, v)))
            .collect()
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        let order = lcm(self.order, other.order);
        let mut dense = Dense::zeros(order as usize);
        for (e, c) in self.lifted(order) {
            dense.add_rat(e, c);
        }
        for (e, c) in other.lifted(order) {
            if negate {
                dense.add_rat(e, &-c);
            } else {
                dense.add_rat(e, c);
            }
        }
        dense.into_cyclo(order)
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Cyclo::zero();
        }
        if let Some(r) = other.as_rational() {
            return self.scale(&r);
        }
        if let Some(r) = self.as_rational() {
            return other.scale(&r);
        }
        let order = lcm(self.order, other.order);
        let n = order as usize;
        let (sa, sb) = ((order / self.order) as usize, (order / other.order) as usize);
        let mut dense = Dense::zeros(n);
        match (self.int_terms(), other.int_terms()) {
            (Some(a), Some(b)) => {
                for &(ea, ca) in &a {
                    for &(eb, cb) in &b {
                        let e = (ea as usize * sa + eb as usize * sb) % n;
                        match ca.checked_mul(cb) {
                            Some(p) => dense.add_int(e, p),
                            None => dense.add_rat(
                                e,
                                &Rat::from_integer(BigInt::from(ca) * BigInt::from(cb)),
                            ),
                        }
                    }
                }
            }
            _ => {
                for (ea, ca) in self.terms() {
                    for (eb, cb) in other.terms() {
                        let e = (ea as usize * sa + eb as usize * sb) % n;
                        dense.add_rat(e, &(ca * cb));
                    }
                }
            }
        }
        dense.into_cyclo(order)
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Cyclo::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// Floating-point embedding `ζ_N ↦ exp(2πi/N)`; for display and test oracles only.
    pub fn to_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (e, c) in self.terms() {
            let angle = 2.0 * std::f64::consts::PI * e as f64 / self.order as f64;
            let c = c.to_f64().unwrap_or(f64::NAN);
            re += c * angle.cos();
            im += c * angle.sin();
        }
        (re, im)
    }

    /// Key used to sort values deterministically: order, then `(exponent, coefficient)` pairs.
    pub fn sort_key(&self) -> (u32, Vec<(u32, BigInt, BigInt)>) {
        (
            self.order,
            self.coeffs
                .iter()
                .map(|(e, c)| (*e, c.numer().clone(), c.denom().clone()))
                .collect(),
        )
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            self.coeffs == other.coeffs
        } else {
            self.combine(other, true).is_zero()
        }
    }
}

impl Eq for Cyclo {}

impl Default for Cyclo {
    fn default() -> Self {
        Cyclo::zero()
    }
}

impl From<i64> for Cyclo {
    fn from(n: i64) -> Self {
        Cyclo::from_int(n)
    }
}

impl From<Rat> for Cyclo {
    fn from(r: Rat) -> Self {
        Cyclo::from_rat(r)
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            if e == 1 {
                write!(f, "z{}", self.order)?;
            } else {
                write!(f, "z{}^{}", self.order, e)?;
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&Cyclo> for &Cyclo {
            type Output = Cyclo;
            fn $method(self, rhs: &Cyclo) -> Cyclo {
                let f: fn(&Cyclo, &Cyclo) -> Cyclo = $body;
                f(self, rhs)
            }
        }
        impl $trait<Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $method(self, rhs: Cyclo) -> Cyclo {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $method(self, rhs: &Cyclo) -> Cyclo {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.combine(b, false));
forward_binop!(Sub, sub, |a, b| a.combine(b, true));
forward_binop!(Mul, mul, |a, b| a.product(b));

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo {
            order: self.order,
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -&self
    }
}

impl std::iter::Sum for Cyclo {
    fn sum<I: Iterator<Item = Cyclo>>(iter: I) -> Self {
        let mut acc = CycloSum::new();
        for x in iter {
            acc.add(&x);
        }
        acc.finish()
    }
}

/// Accumulates a long sum of cyclotomic terms without reducing after every step.
///
/// Terms are collected in the group ring `Q[x]/(x^L - 1)`, where `L` grows to the lcm of all
/// orders seen; the reduction modulo `Φ_L` happens once in [`CycloSum::finish`].
#[derive(Clone, Debug)]
pub struct CycloSum {
    order: u32,
    dense: Dense,
}

impl Default for CycloSum {
    fn default() -> Self {
        Self::new()
    }
}

impl CycloSum {
    pub fn new() -> Self {
        CycloSum { order: 1, dense: Dense::zeros(1) }
    }

    /// Starts with room for values of every order dividing `order`.
    pub fn with_order(order: u32) -> Self {
        CycloSum { order, dense: Dense::zeros(order as usize) }
    }

    fn ensure_order(&mut self, needed: u32) {
        if self.order.is_multiple_of(needed) {
            return;
        }
        let order = lcm(self.order, needed);
        let step = (order / self.order) as usize;
        let mut dense = Dense::zeros(order as usize);
        match &self.dense {
            Dense::Int(v) => {
                for (e, &c) in v.iter().enumerate() {
                    if c != 0 {
                        dense.add_int(e * step, c);
                    }
                }
            }
            Dense::Rat(v) => {
                for (e, c) in v.iter().enumerate() {
                    if !c.is_zero() {
                        dense.add_rat(e * step, c);
                    }
                }
            }
        }
        self.order = order;
        self.dense = dense;
    }

    pub fn add(&mut self, x: &Cyclo) {
        self.ensure_order(x.order);
        for (e, c) in x.lifted(self.order) {
            self.dense.add_rat(e, c);
        }
    }

    /// Adds `scale · a · conj(b)`, the summand of a Hermitian inner product.
    pub fn add_hermitian(&mut self, scale: i128, a: &Cyclo, b: &Cyclo) {
        if a.is_zero() || b.is_zero() || scale == 0 {
            return;
        }
        self.ensure_order(a.order);
        self.ensure_order(b.order);
        let n = self.order as usize;
        let (sa, sb) = ((self.order / a.order) as usize, (self.order / b.order) as usize);
        if let (Some(ta), Some(tb)) = (a.int_terms(), b.int_terms()) {
            for &(ea, ca) in &ta {
                for &(eb, cb) in &tb {
                    let e = (ea as usize * sa + n - (eb as usize * sb) % n) % n;
                    match ca.checked_mul(cb).and_then(|p| p.checked_mul(scale)) {
                        Some(p) => self.dense.add_int(e, p),
                        None => self.dense.add_rat(
                            e,
                            &Rat::from_integer(
                                BigInt::from(ca) * BigInt::from(cb) * BigInt::from(scale),
                            ),
                        ),
                    }
                }
            }
        } else {
            let s = Rat::from_integer(BigInt::from(scale));
            for (ea, ca) in a.terms() {
                for (eb, cb) in b.terms() {
                    let e = (ea as usize * sa + n - (eb as usize * sb) % n) % n;
                    self.dense.add_rat(e, &(ca * cb * &s));
                }
            }
        }
    }

    pub fn finish(self) -> Cyclo {
        self.dense.into_cyclo(self.order)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum JsonInt {
    Small(i64),
    Big(String),
}

impl JsonInt {
    fn from_big(b: &BigInt) -> Self {
        match b.to_i64() {
            Some(v) => JsonInt::Small(v),
            None => JsonInt::Big(b.to_string()),
        }
    }

    fn to_big(&self) -> Option<BigInt> {
        match self {
            JsonInt::Small(v) => Some(BigInt::from(*v)),
            JsonInt::Big(s) => s.parse().ok(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct CycloRepr {
    order: u32,
    terms: Vec<(u32, JsonInt, JsonInt)>,
}

impl Serialize for Cyclo {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        CycloRepr {
            order: self.order,
            terms: self
                .terms()
                .map(|(e, c)| (e, JsonInt::from_big(c.numer()), JsonInt::from_big(c.denom())))
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Cyclo {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = CycloRepr::deserialize(deserializer)?;
        if repr.order == 0 {
            return Err(D::Error::custom("cyclotomic order must be positive"));
        }
        let mut coeffs = vec![Rat::zero(); repr.order as usize];
        for (e, n, d) in repr.terms {
            let (Some(n), Some(d)) = (n.to_big(), d.to_big()) else {
                return Err(D::Error::custom("malformed coefficient"));
            };
            if d.is_zero() || e >= repr.order {
                return Err(D::Error::custom("malformed term"));
            }
            coeffs[e as usize] += Rat::new(n, d);
        }
        Ok(Cyclo::from_exponent_coeffs(&coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(n: u32, e: i64) -> Cyclo {
        Cyclo::root_of_unity(n, e)
    }

    #[test]
    fn cyclotomic_polynomials_match_known_values() {
        assert_eq!(*cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_poly(2), vec![1, 1]);
        assert_eq!(*cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        // Φ_105 is the first with a coefficient of absolute value 2
        let p105 = cyclotomic_poly(105);
        assert_eq!(p105.len() - 1, 48);
        assert_eq!(p105.iter().map(|c| c.abs()).max(), Some(2));
        assert_eq!(totient(1020), 256);
    }

    #[test]
    fn roots_of_unity_basic() {
        assert_eq!(z(1, 0), Cyclo::one());
        assert_eq!(z(4, 2), Cyclo::from_int(-1));
        assert_eq!(&z(7, 3) * &z(7, 4), Cyclo::one());
        assert_eq!(z(5, -1), z(5, 4));
    }

    #[test]
    fn geometric_sum_vanishes() {
        let s: Cyclo = (0..7).map(|i| z(7, i)).sum();
        assert!(s.is_zero());
        let partial: Cyclo = (1..7).map(|i| z(7, i)).sum();
        assert_eq!(partial.as_rational(), Some(rat(-1)));
    }

    #[test]
    fn mixed_order_product() {
        // embed into Q(ζ12): ζ3 = ζ12^4, ζ4 = ζ12^3
        assert_eq!(&z(3, 1) * &z(4, 1), z(12, 7));
    }

    #[test]
    fn subtraction_to_zero() {
        let x = &z(5, 1) + &Cyclo::from_int(3);
        assert!((&x - &x).is_zero());
    }

    #[test]
    fn conjugation() {
        assert_eq!(z(5, 1).conjugate(), z(5, 4));
        let alpha = &z(7, 1) + &z(7, -1);
        assert_eq!(alpha.conjugate(), alpha);
    }

    #[test]
    fn rationality_detection() {
        let two_cos = &z(6, 1) + &z(6, 5);
        assert_eq!(two_cos.as_rational(), Some(rat(1)));
        assert_eq!(z(5, 1).as_rational(), None);
        assert_eq!(Cyclo::zero().as_rational(), Some(rat(0)));
    }

    #[test]
    fn rational_results_collapse_to_order_one() {
        let x = &z(15, 2) + &z(15, 13);
        let y = &x - &z(15, 2);
        assert_eq!(y, z(15, 13));
        let r = &(&z(3, 1) + &z(3, 2)) * &Cyclo::from_int(5);
        assert_eq!(r.order(), 1);
        assert_eq!(r.as_i64(), Some(-5));
    }

    #[test]
    fn hermitian_accumulator_matches_direct_sum() {
        let a = &z(15, 1) + &z(15, 4);
        let b = &z(5, 2) - &Cyclo::from_int(2);
        let mut acc = CycloSum::new();
        acc.add_hermitian(3, &a, &b);
        acc.add_hermitian(-1, &b, &a);
        let direct = &(&Cyclo::from_int(3) * &(&a * &b.conjugate()))
            - &(&b * &a.conjugate());
        assert_eq!(acc.finish(), direct);
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big = Cyclo::from_rat(Rat::from_integer(BigInt::from(i128::MAX / 3)));
        let x = &big * &z(7, 1);
        let y = &x * &Cyclo::from_int(1000);
        let back = &y * &z(7, -1);
        assert_eq!(back.as_rational(), Some(Rat::from_integer(BigInt::from(i128::MAX / 3) * 1000)));
    }

    #[test]
    fn json_round_trip_and_shape() {
        let x = &z(12, 5).scale(&ratio(3, 4)) + &Cyclo::from_int(2);
        let json = serde_json::to_value(&x).unwrap();
        assert_eq!(json["order"], 12);
        let terms = json["terms"].as_array().unwrap();
        let exps: Vec<u64> = terms.iter().map(|t| t[0].as_u64().unwrap()).collect();
        assert!(exps.windows(2).all(|w| w[0] < w[1]));
        let back: Cyclo = serde_json::from_value(json).unwrap();
        assert_eq!(back, x);
    }

    fn arb_cyclo() -> impl Strategy<Value = Cyclo> {
        let orders = prop::sample::select(vec![1u32, 2, 3, 4, 5, 6, 7, 8, 9, 12, 15]);
        (orders, prop::collection::vec((0i64..60, -5i64..=5, 1i64..=3), 0..5)).prop_map(
            |(n, terms)| {
                terms.into_iter().fold(Cyclo::zero(), |acc, (e, num, den)| {
                    &acc + &Cyclo::root_of_unity(n, e).scale(&ratio(num, den))
                })
            },
        )
    }

    fn close(a: (f64, f64), b: (f64, f64)) -> bool {
        (a.0 - b.0).abs() < 1e-9 && (a.1 - b.1).abs() < 1e-9
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_cyclo(), b in arb_cyclo(), c in arb_cyclo()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn root_power_is_one(n in 1u32..40, k in -100i64..100) {
            prop_assert_eq!(Cyclo::root_of_unity(n, k).pow(n), Cyclo::one());
        }

        #[test]
        fn conjugation_is_involutive(a in arb_cyclo()) {
            prop_assert_eq!(a.conjugate().conjugate(), a);
        }

        #[test]
        fn equality_agrees_with_complex_embedding(a in arb_cyclo(), b in arb_cyclo()) {
            let diff = &a - &b;
            let (re, im) = diff.to_complex();
            prop_assert_eq!(diff.is_zero(), re.abs() < 1e-9 && im.abs() < 1e-9);
            let (pa, pb) = (a.to_complex(), b.to_complex());
            let prod = (&a * &b).to_complex();
            prop_assert!(close(prod, (pa.0 * pb.0 - pa.1 * pb.1, pa.0 * pb.1 + pa.1 * pb.0)));
        }
    }
}

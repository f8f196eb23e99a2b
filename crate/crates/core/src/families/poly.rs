//! Polynomials in one indeterminate `q` with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::exactnum::{rat, Rat};

/// Sparse polynomial; zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct PolyQ {
    coeffs: BTreeMap<u32, Rat>,
}

impl PolyQ {
    pub fn zero() -> Self {
        PolyQ::default()
    }

    pub fn one() -> Self {
        PolyQ::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        PolyQ::monomial(c, 0)
    }

    pub fn int(c: i64) -> Self {
        PolyQ::constant(rat(c))
    }

    /// The indeterminate itself.
    pub fn q() -> Self {
        PolyQ::monomial(Rat::one(), 1)
    }

    pub fn monomial(c: Rat, exp: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        PolyQ { coeffs }
    }

    /// From integer coefficients listed by ascending exponent.
    pub fn from_ints(ascending: &[i64]) -> Self {
        ascending
            .iter()
            .enumerate()
            .map(|(e, &c)| PolyQ::monomial(rat(c), e as u32))
            .fold(PolyQ::zero(), |acc, m| acc + m)
    }

    pub fn coefficient(&self, exp: u32) -> Rat {
        self.coeffs.get(&exp).cloned().unwrap_or_else(Rat::zero)
    }

    /// Nonzero terms by ascending exponent.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rat)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn scale(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return PolyQ::zero();
        }
        PolyQ { coeffs: self.coeffs.iter().map(|(e, c)| (*e, c * r)).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(PolyQ::one(), |acc, _| &acc * self)
    }

    /// Horner evaluation.
    pub fn eval(&self, q: &Rat) -> Rat {
        let Some(top) = self.degree() else {
            return Rat::zero();
        };
        let mut acc = Rat::zero();
        for e in (0..=top).rev() {
            acc = acc * q + self.coefficient(e);
        }
        acc
    }

    pub fn eval_int(&self, q: i64) -> Rat {
        self.eval(&rat(q))
    }

    /// `self(inner(q))`.
    pub fn compose(&self, inner: &PolyQ) -> PolyQ {
        let Some(top) = self.degree() else {
            return PolyQ::zero();
        };
        let mut acc = PolyQ::zero();
        for e in (0..=top).rev() {
            acc = &(&acc * inner) + &PolyQ::constant(self.coefficient(e));
        }
        acc
    }

    /// Certifies `self(q) > 0` for every real `q ≥ a`: after substituting `q = a + y`, every
    /// coefficient is nonnegative and the constant term is positive.
    pub fn is_positive_from(&self, a: i64) -> bool {
        let shifted = self.compose(&(PolyQ::q() + PolyQ::int(a)));
        shifted.coefficient(0).is_positive() && shifted.terms().all(|(_, c)| !c.is_negative())
    }
}

impl fmt::Debug for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyQ({self})")
    }
}

impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.coeffs.iter().rev().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = magnitude.is_one();
            if !unit || *e == 0 {
                if magnitude.is_integer() {
                    write!(f, "{magnitude}")?;
                } else {
                    write!(f, "({magnitude})")?;
                }
            }
            match e {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{e}")?,
            }
        }
        Ok(())
    }
}

/// Serialised as an exponent → coefficient map with coefficients as rational strings.
impl Serialize for PolyQ {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.coeffs.len()))?;
        for (e, c) in &self.coeffs {
            map.serialize_entry(&e.to_string(), &c.to_string())?;
        }
        map.end()
    }
}

impl Add<&PolyQ> for &PolyQ {
    type Output = PolyQ;
    fn add(self, rhs: &PolyQ) -> PolyQ {
        let mut coeffs = self.coeffs.clone();
        for (e, c) in &rhs.coeffs {
            let slot = coeffs.entry(*e).or_insert_with(Rat::zero);
            *slot += c;
            if slot.is_zero() {
                coeffs.remove(e);
            }
        }
        PolyQ { coeffs }
    }
}

impl Neg for &PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        PolyQ { coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Neg for PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        -&self
    }
}

impl Sub<&PolyQ> for &PolyQ {
    type Output = PolyQ;
    fn sub(self, rhs: &PolyQ) -> PolyQ {
        self + &(-rhs)
    }
}

impl Mul<&PolyQ> for &PolyQ {
    type Output = PolyQ;
    fn mul(self, rhs: &PolyQ) -> PolyQ {
        let mut out = PolyQ::zero();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &rhs.coeffs {
                out = &out + &PolyQ::monomial(ca * cb, ea + eb);
            }
        }
        out
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<PolyQ> for PolyQ {
            type Output = PolyQ;
            fn $method(self, rhs: PolyQ) -> PolyQ {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&PolyQ> for PolyQ {
            type Output = PolyQ;
            fn $method(self, rhs: &PolyQ) -> PolyQ {
                (&self).$method(rhs)
            }
        }
        impl $trait<PolyQ> for &PolyQ {
            type Output = PolyQ;
            fn $method(self, rhs: PolyQ) -> PolyQ {
                self.$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratio;
    use proptest::prelude::*;

    fn small_poly() -> impl Strategy<Value = PolyQ> {
        proptest::collection::vec(-5i64..=5, 0..5).prop_map(|c| PolyQ::from_ints(&c))
    }

    #[test]
    fn display_and_eval() {
        let p = PolyQ::from_ints(&[1, 2, 2, 2, 1]);
        assert_eq!(p.to_string(), "q^4 + 2q^3 + 2q^2 + 2q + 1");
        assert_eq!(p.eval_int(4), rat(425));
        let h = PolyQ::monomial(ratio(-1, 8), 2) + PolyQ::int(3);
        assert_eq!(h.to_string(), "-(1/8)q^2 + 3");
        assert_eq!(PolyQ::zero().to_string(), "0");
        assert_eq!(PolyQ::zero().degree(), None);
    }

    #[test]
    fn positivity_certificate() {
        // x^12 + 2x^9 + x^6 - x^4 + 2x^3 + x^2 + 1 has a negative coefficient but no real root ≥ 2
        let p = PolyQ::from_ints(&[1, 0, 1, 2, -1, 0, 1, 0, 0, 2, 0, 0, 1]);
        assert!(p.is_positive_from(2));
        // q - 3 is negative at 2
        assert!(!PolyQ::from_ints(&[-3, 1]).is_positive_from(2));
        assert!(PolyQ::from_ints(&[-3, 1]).is_positive_from(4));
    }

    #[test]
    fn serialises_as_map() {
        let p = PolyQ::from_ints(&[0, -1, 0, 1]) + PolyQ::monomial(ratio(1, 2), 4);
        let json = serde_json::to_value(&p).unwrap();
        assert_eq!(json, serde_json::json!({"1": "-1", "3": "1", "4": "1/2"}));
    }

    proptest! {
        #[test]
        fn evaluation_is_a_ring_homomorphism(a in small_poly(), b in small_poly(), x in -6i64..=6) {
            prop_assert_eq!((&a + &b).eval_int(x), a.eval_int(x) + b.eval_int(x));
            prop_assert_eq!((&a * &b).eval_int(x), a.eval_int(x) * b.eval_int(x));
            prop_assert_eq!(&a - &a, PolyQ::zero());
        }

        #[test]
        fn composition_matches_nested_evaluation(a in small_poly(), b in small_poly(), x in -4i64..=4) {
            prop_assert_eq!(a.compose(&b).eval_int(x), a.eval(&b.eval_int(x)));
        }
    }
}

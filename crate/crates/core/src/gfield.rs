//! Arithmetic in `GF(2^e)` in discrete-log (Zech) representation.
//!
//! Every nonzero element is stored as its logarithm to the fixed primitive element `γ`, the class
//! of `x` modulo the frozen polynomial for `e` in [`PRIMITIVE_POLYNOMIALS`]. Multiplication adds
//! logs, addition goes through the Zech table `Z(k) = log(1 + γ^k)`.
//!
//! Frozen polynomials (bit `i` is the coefficient of `x^i`):
//!
//! | e | polynomial | mask |
//! |---|------------|------|
//! | 1 | x + 1 | 0x3 |
//! | 2 | x^2 + x + 1 | 0x7 |
//! | 3 | x^3 + x + 1 | 0xb |
//! | 4 | x^4 + x + 1 | 0x13 |
//! | 5 | x^5 + x^2 + 1 | 0x25 |
//! | 6 | x^6 + x + 1 | 0x43 |
//! | 7 | x^7 + x + 1 | 0x83 |
//! | 8 | x^8 + x^4 + x^3 + x^2 + 1 | 0x11d |
//! | 9 | x^9 + x^4 + 1 | 0x211 |
//! | 10 | x^10 + x^3 + 1 | 0x409 |
//! | 11 | x^11 + x^2 + 1 | 0x805 |
//! | 12 | x^12 + x^6 + x^4 + x + 1 | 0x1053 |
//! | 13 | x^13 + x^4 + x^3 + x + 1 | 0x201b |
//! | 14 | x^14 + x^10 + x^6 + x + 1 | 0x4443 |
//! | 15 | x^15 + x + 1 | 0x8003 |
//! | 16 | x^16 + x^12 + x^3 + x + 1 | 0x1100b |

use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::Cyclo;

/// Primitive polynomial masks indexed by `e - 1`.
pub const PRIMITIVE_POLYNOMIALS: [u32; 16] = [
    0x3, 0x7, 0xb, 0x13, 0x25, 0x43, 0x83, 0x11d, 0x211, 0x409, 0x805, 0x1053, 0x201b, 0x4443,
    0x8003, 0x1100b,
];

/// Largest supported extension degree.
pub const MAX_DEGREE: u32 = 16;

/// Element of `GF(2^e)`: a discrete log in `[0, q-1)` or [`FieldElem::ZERO`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem(u16);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(u16::MAX);
    pub const ONE: FieldElem = FieldElem(0);

    /// `γ^log`; `log` must already be reduced modulo `q - 1`.
    pub const fn from_log(log: u32) -> Self {
        FieldElem(log as u16)
    }

    pub fn log(self) -> Option<u32> {
        (!self.is_zero()).then_some(self.0 as u32)
    }

    pub fn is_zero(self) -> bool {
        self.0 == u16::MAX
    }

    /// Dense index: 0 for zero, `log + 1` otherwise.
    pub fn index(self) -> u32 {
        if self.is_zero() {
            0
        } else {
            self.0 as u32 + 1
        }
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.log() {
            None => write!(f, "0"),
            Some(0) => write!(f, "1"),
            Some(k) => write!(f, "g^{k}"),
        }
    }
}

/// Immutable description of `GF(2^e)`.
#[derive(Clone, Debug)]
pub struct FieldCtx {
    e: u32,
    q: u32,
    modulus: u32,
    /// polynomial bits of `γ^k`
    exp: Vec<u32>,
    /// log of each nonzero polynomial
    log: Vec<u16>,
    zech: Vec<FieldElem>,
}

/// Builds the context for `GF(2^e)` over the frozen primitive polynomial.
pub fn field_ctx(e: u32) -> Result<FieldCtx> {
    FieldCtx::new(e)
}

impl FieldCtx {
    pub fn new(e: u32) -> Result<Self> {
        if !(1..=MAX_DEGREE).contains(&e) {
            return Err(Error::InvalidArgument(format!(
                "field degree must be in 1..={MAX_DEGREE}, got {e}"
            )));
        }
        let q = 1u32 << e;
        let modulus = PRIMITIVE_POLYNOMIALS[e as usize - 1];
        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut log = vec![u16::MAX; q as usize];
        let mut x = 1u32;
        for k in 0..q - 1 {
            if log[x as usize] != u16::MAX {
                return Err(Error::CrossCheck(format!("polynomial {modulus:#x} is not primitive")));
            }
            exp.push(x);
            log[x as usize] = k as u16;
            x <<= 1;
            if x & q != 0 {
                x ^= modulus;
            }
        }
        if x != 1 {
            return Err(Error::CrossCheck(format!("polynomial {modulus:#x} is not primitive")));
        }
        let zech = (0..q - 1)
            .map(|k| {
                let v = exp[k as usize] ^ 1;
                if v == 0 {
                    FieldElem::ZERO
                } else {
                    FieldElem(log[v as usize])
                }
            })
            .collect();
        Ok(FieldCtx { e, q, modulus, exp, log, zech })
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// The fixed primitive element `γ`.
    pub fn gamma(&self) -> FieldElem {
        FieldElem::from_log(1 % (self.q - 1))
    }

    /// `γ^k` for any integer `k`.
    pub fn gamma_pow(&self, k: i64) -> FieldElem {
        FieldElem::from_log(k.rem_euclid(self.q as i64 - 1) as u32)
    }

    /// All field elements: zero first, then `γ^0, γ^1, …`.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        std::iter::once(FieldElem::ZERO).chain((0..self.q - 1).map(FieldElem::from_log))
    }

    /// Converts from polynomial bits (bit `i` = coefficient of `x^i`).
    pub fn from_poly(&self, bits: u32) -> FieldElem {
        assert!(bits < self.q, "polynomial {bits:#x} out of range for GF({})", self.q);
        if bits == 0 {
            FieldElem::ZERO
        } else {
            FieldElem(self.log[bits as usize])
        }
    }

    pub fn to_poly(&self, a: FieldElem) -> u32 {
        match a.log() {
            None => 0,
            Some(k) => self.exp[k as usize],
        }
    }

    #[inline]
    fn add_logs(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        let m = self.q - 1;
        if s >= m {
            s - m
        } else {
            s
        }
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        let (la, lb) = (a.0 as u32, b.0 as u32);
        let d = if lb >= la { lb - la } else { lb + self.q - 1 - la };
        let z = self.zech[d as usize];
        if z.is_zero() {
            FieldElem::ZERO
        } else {
            FieldElem(self.add_logs(la, z.0 as u32) as u16)
        }
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.is_zero() || b.is_zero() {
            FieldElem::ZERO
        } else {
            FieldElem(self.add_logs(a.0 as u32, b.0 as u32) as u16)
        }
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        match a.log() {
            None => Err(Error::ZeroInverse),
            Some(0) => Ok(FieldElem::ONE),
            Some(k) => Ok(FieldElem::from_log(self.q - 1 - k)),
        }
    }

    pub fn pow(&self, a: FieldElem, n: i64) -> FieldElem {
        match a.log() {
            None if n == 0 => FieldElem::ONE,
            None => FieldElem::ZERO,
            Some(k) => self.gamma_pow(k as i64 * n.rem_euclid(self.q as i64 - 1)),
        }
    }

    /// `a^{2^f}`; negative `f` runs the Frobenius backwards.
    #[inline]
    pub fn frobenius(&self, a: FieldElem, f: i64) -> FieldElem {
        match a.log() {
            None => FieldElem::ZERO,
            Some(k) => {
                let shift = f.rem_euclid(self.e as i64) as u32;
                let m = (self.q - 1) as u64;
                FieldElem::from_log(((k as u64) << shift).rem_euclid(m) as u32)
            }
        }
    }

    /// Absolute trace to `GF(2)`, returned as 0 or 1.
    pub fn trace(&self, a: FieldElem) -> u32 {
        let mut acc = FieldElem::ZERO;
        for f in 0..self.e as i64 {
            acc = self.add(acc, self.frobenius(a, f));
        }
        if acc.is_zero() {
            0
        } else {
            debug_assert_eq!(acc, FieldElem::ONE);
            1
        }
    }

    /// Image of `a` under the fixed monomorphism `γ^k ↦ ζ_{q-1}^k`.
    pub fn char_embed(&self, a: FieldElem) -> Result<Cyclo> {
        match a.log() {
            None => Err(Error::InvalidArgument("char_embed of zero".into())),
            Some(k) => Ok(Cyclo::root_of_unity(self.q - 1, k as i64)),
        }
    }
}

/// `a^{2^f}` in `ctx`.
pub fn frobenius(ctx: &FieldCtx, a: FieldElem, f: i64) -> FieldElem {
    ctx.frobenius(a, f)
}

/// `γ^k ↦ ζ_{q-1}^k`; errors on zero.
pub fn char_embed(ctx: &FieldCtx, a: FieldElem) -> Result<Cyclo> {
    ctx.char_embed(a)
}

/// Field embedding `GF(2^{e₀}) ↪ GF(2^e)` for `e₀ | e`.
///
/// The image of `γ_small` is the root of the small field's frozen polynomial of the form
/// `γ_big^{c·(Q-1)/(q-1)}` with the least `c`. When the two frozen polynomials are compatible this
/// is `γ_big^{(Q-1)/(q-1)}` itself.
#[derive(Clone, Debug)]
pub struct SubfieldEmbedding {
    small_e: u32,
    big_e: u32,
    multiplier: u64,
}

impl SubfieldEmbedding {
    pub fn new(small: &FieldCtx, big: &FieldCtx) -> Result<Self> {
        if !big.e.is_multiple_of(small.e) {
            return Err(Error::InvalidArgument(format!(
                "GF(2^{}) does not embed in GF(2^{})",
                small.e, big.e
            )));
        }
        let (q, big_q) = (small.q as u64, big.q as u64);
        let step = (big_q - 1) / (q - 1);
        for c in 1..q.max(2) {
            if num_integer::gcd(c, q - 1) != 1 {
                continue;
            }
            let root = FieldElem::from_log(((c * step) % (big_q - 1)) as u32);
            // evaluate the small modulus at the candidate root
            let mut acc = FieldElem::ZERO;
            let mut power = FieldElem::ONE;
            for i in 0..=small.e {
                if small.modulus >> i & 1 == 1 {
                    acc = big.add(acc, power);
                }
                power = big.mul(power, root);
            }
            if acc.is_zero() {
                return Ok(SubfieldEmbedding { small_e: small.e, big_e: big.e, multiplier: c * step });
            }
        }
        Err(Error::CrossCheck("no root of the subfield polynomial found".into()))
    }

    pub fn apply(&self, big: &FieldCtx, a: FieldElem) -> FieldElem {
        debug_assert_eq!(big.e, self.big_e);
        match a.log() {
            None => FieldElem::ZERO,
            Some(k) => FieldElem::from_log(((k as u64 * self.multiplier) % (big.q as u64 - 1)) as u32),
        }
    }

    pub fn small_degree(&self) -> u32 {
        self.small_e
    }
}

/// Embeds `a ∈ small` into `big`; see [`SubfieldEmbedding`].
pub fn subfield_embed(small: &FieldCtx, big: &FieldCtx, a: FieldElem) -> Result<FieldElem> {
    Ok(SubfieldEmbedding::new(small, big)?.apply(big, a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::CycloSum;
    use proptest::prelude::*;

    /// Carry-less multiplication modulo the frozen polynomial; independent of the log tables.
    fn poly_mul(a: u32, b: u32, e: u32) -> u32 {
        let modulus = PRIMITIVE_POLYNOMIALS[e as usize - 1];
        let mut acc = 0u32;
        for i in 0..e {
            if b >> i & 1 == 1 {
                acc ^= a << i;
            }
        }
        for bit in (e..2 * e).rev() {
            if acc >> bit & 1 == 1 {
                acc ^= modulus << (bit - e);
            }
        }
        acc
    }

    #[test]
    fn every_frozen_polynomial_is_primitive() {
        for e in 1..=MAX_DEGREE {
            let ctx = field_ctx(e).unwrap();
            assert_eq!(ctx.q(), 1 << e);
        }
        assert!(field_ctx(0).is_err());
        assert!(field_ctx(17).is_err());
    }

    #[test]
    fn small_fields() {
        let f2 = field_ctx(1).unwrap();
        assert_eq!(f2.q(), 2);
        assert_eq!(f2.elements().count(), 2);
        let f4 = field_ctx(2).unwrap();
        let g = f4.gamma();
        assert_eq!(f4.pow(g, 3), FieldElem::ONE);
        assert_eq!(f4.mul(g, g), f4.add(g, FieldElem::ONE));
        let f16 = field_ctx(4).unwrap();
        let g = f16.gamma();
        let order = (1..=15).find(|&n| f16.pow(g, n) == FieldElem::ONE).unwrap();
        assert_eq!(order, 15);
    }

    #[test]
    fn log_tables_agree_with_polynomial_arithmetic() {
        for e in 1..=8 {
            let ctx = field_ctx(e).unwrap();
            for a in 0..ctx.q() {
                for b in 0..ctx.q() {
                    let (fa, fb) = (ctx.from_poly(a), ctx.from_poly(b));
                    assert_eq!(ctx.to_poly(ctx.add(fa, fb)), a ^ b);
                    assert_eq!(ctx.to_poly(ctx.mul(fa, fb)), poly_mul(a, b, e));
                }
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for e in 1..=8 {
            let ctx = field_ctx(e).unwrap();
            let all: Vec<_> = ctx.elements().collect();
            for &a in &all {
                assert!(ctx.add(a, a).is_zero());
                if !a.is_zero() {
                    assert_eq!(ctx.mul(a, ctx.inv(a).unwrap()), FieldElem::ONE);
                }
                for &b in &all {
                    for &c in &all {
                        assert_eq!(ctx.add(ctx.add(a, b), c), ctx.add(a, ctx.add(b, c)));
                        assert_eq!(ctx.mul(ctx.mul(a, b), c), ctx.mul(a, ctx.mul(b, c)));
                        assert_eq!(
                            ctx.mul(a, ctx.add(b, c)),
                            ctx.add(ctx.mul(a, b), ctx.mul(a, c))
                        );
                    }
                }
            }
        }
        assert_eq!(field_ctx(3).unwrap().inv(FieldElem::ZERO), Err(Error::ZeroInverse));
    }

    #[test]
    fn char_embed_is_injective_homomorphism() {
        for e in 1..=6 {
            let ctx = field_ctx(e).unwrap();
            let images: Vec<Cyclo> = ctx
                .elements()
                .skip(1)
                .map(|a| ctx.char_embed(a).unwrap())
                .collect();
            for i in 0..images.len() {
                for j in i + 1..images.len() {
                    assert_ne!(images[i], images[j]);
                }
            }
        }
        let f8 = field_ctx(3).unwrap();
        assert_eq!(f8.char_embed(FieldElem::ONE).unwrap(), Cyclo::one());
        assert!(f8.char_embed(FieldElem::ZERO).is_err());
        let mut sum = CycloSum::new();
        for a in f8.elements().skip(1) {
            sum.add(&f8.char_embed(a).unwrap());
        }
        assert!(sum.finish().is_zero());
    }

    #[test]
    fn subfield_embedding_gf4_into_gf16() {
        let (f4, f16) = (field_ctx(2).unwrap(), field_ctx(4).unwrap());
        let emb = SubfieldEmbedding::new(&f4, &f16).unwrap();
        assert_eq!(emb.apply(&f16, FieldElem::ONE), FieldElem::ONE);
        assert_eq!(emb.apply(&f16, FieldElem::ZERO), FieldElem::ZERO);
        let img = emb.apply(&f16, f4.gamma());
        assert_eq!((1..=15).find(|&n| f16.pow(img, n) == FieldElem::ONE), Some(3));
        for a in f4.elements() {
            for b in f4.elements() {
                assert_eq!(
                    emb.apply(&f16, f4.add(a, b)),
                    f16.add(emb.apply(&f16, a), emb.apply(&f16, b))
                );
                assert_eq!(
                    emb.apply(&f16, f4.mul(a, b)),
                    f16.mul(emb.apply(&f16, a), emb.apply(&f16, b))
                );
            }
        }
        assert!(subfield_embed(&field_ctx(3).unwrap(), &f16, FieldElem::ONE).is_err());
    }

    #[test]
    fn subfield_embeddings_are_ring_homomorphisms() {
        for (small, big) in [(1, 4), (2, 6), (3, 6), (2, 4), (4, 8), (3, 9)] {
            let (fs, fb) = (field_ctx(small).unwrap(), field_ctx(big).unwrap());
            let emb = SubfieldEmbedding::new(&fs, &fb).unwrap();
            for a in fs.elements() {
                for b in fs.elements() {
                    assert_eq!(
                        emb.apply(&fb, fs.add(a, b)),
                        fb.add(emb.apply(&fb, a), emb.apply(&fb, b))
                    );
                }
                // embedding commutes with the absolute Frobenius
                assert_eq!(
                    emb.apply(&fb, fs.frobenius(a, 1)),
                    fb.frobenius(emb.apply(&fb, a), 1)
                );
            }
        }
    }

    #[test]
    fn frobenius_on_gf16() {
        let f16 = field_ctx(4).unwrap();
        let f4 = field_ctx(2).unwrap();
        let emb = SubfieldEmbedding::new(&f4, &f16).unwrap();
        let sub: Vec<_> = f4.elements().map(|a| emb.apply(&f16, a)).collect();
        for a in f16.elements() {
            assert_eq!(f16.frobenius(f16.frobenius(a, 2), 2), a);
            assert_eq!(f16.frobenius(a, 2) == a, sub.contains(&a));
        }
    }

    proptest! {
        #[test]
        fn frobenius_is_additive(e in 1u32..=10, a in 0u32..1024, b in 0u32..1024, f in 0i64..12) {
            let ctx = field_ctx(e).unwrap();
            let (a, b) = (ctx.from_poly(a % ctx.q()), ctx.from_poly(b % ctx.q()));
            prop_assert_eq!(
                ctx.frobenius(ctx.add(a, b), f),
                ctx.add(ctx.frobenius(a, f), ctx.frobenius(b, f))
            );
        }

        #[test]
        fn char_embed_multiplicative(e in 1u32..=8, k in 0i64..300, m in 0i64..300) {
            let ctx = field_ctx(e).unwrap();
            let (a, b) = (ctx.gamma_pow(k), ctx.gamma_pow(m));
            prop_assert_eq!(
                ctx.char_embed(ctx.mul(a, b)).unwrap(),
                &ctx.char_embed(a).unwrap() * &ctx.char_embed(b).unwrap()
            );
        }
    }
}

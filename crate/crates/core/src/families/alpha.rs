//! Sums `Σ_j α_{jk} α_{jm} α_{jn}` with `α_{ij} = ρ^{ij} + ρ^{−ij}`, `ρ` a primitive `(q−1)`-th
//! root of unity, and the parabolic inner product built from them.

use serde::Serialize;

use super::degrees::even_power;
use crate::error::{Error, Result};
use crate::exactnum::{rat, Cyclo, CycloSum, Rat};

/// `(q, k, m, n)` with `1 ≤ k, m, n ≤ q−2`, `m ≠ n` and `m + n ≠ q−1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct AlphaParams {
    q: u64,
    k: u64,
    m: u64,
    n: u64,
}

impl AlphaParams {
    pub fn new(q: u64, k: u64, m: u64, n: u64) -> Result<Self> {
        even_power(q, 2)?;
        if q > u32::MAX as u64 {
            return Err(Error::InvalidArgument(format!("q = {q} is too large")));
        }
        for (name, v) in [("k", k), ("m", m), ("n", n)] {
            if v == 0 || v > q - 2 {
                return Err(Error::InvalidArgument(format!("{name} = {v} is outside 1..={}", q - 2)));
            }
        }
        if m == n {
            return Err(Error::InvalidArgument(format!("m = n = {m}")));
        }
        if m + n == q - 1 {
            return Err(Error::InvalidArgument(format!("m + n = {} = q − 1", m + n)));
        }
        Ok(AlphaParams { q, k, m, n })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Every valid triple for `q`, in lexicographic order.
    pub fn all(q: u64) -> Result<Vec<AlphaParams>> {
        even_power(q, 2)?;
        let top = q - 2;
        let mut out = Vec::new();
        for k in 1..=top {
            for m in 1..=top {
                for n in 1..=top {
                    if let Ok(p) = AlphaParams::new(q, k, m, n) {
                        out.push(p);
                    }
                }
            }
        }
        Ok(out)
    }

    /// How many of `k+m+n, k+m−n, k−m+n, k−m−n` are divisible by `q−1`.
    pub fn zero_combinations(&self) -> u32 {
        let modulus = self.q as i64 - 1;
        let (k, m, n) = (self.k as i64, self.m as i64, self.n as i64);
        [k + m + n, k + m - n, k - m + n, k - m - n]
            .iter()
            .filter(|x| x.rem_euclid(modulus) == 0)
            .count() as u32
    }
}

/// The sum evaluated exactly in `Q(ρ)`.
pub fn alpha_sum_cyclotomic(p: &AlphaParams) -> Result<Rat> {
    let order = (p.q - 1) as u32;
    let alpha = |x: u64| {
        let e = x as i64;
        Cyclo::root_of_unity(order, e) + Cyclo::root_of_unity(order, -e)
    };
    let mut acc = CycloSum::with_order(order);
    for j in 1..=(p.q - 2) / 2 {
        acc.add(&(alpha(j * p.k) * alpha(j * p.m) * alpha(j * p.n)));
    }
    let total = acc.finish();
    total
        .as_rational()
        .ok_or_else(|| Error::CrossCheck(format!("α-sum {total} is not rational")))
}

/// The sum by counting: each of the four full geometric sums is `q−2` when `q−1` divides its
/// exponent and `−1` otherwise, so the result is `c(q−1) − 4`.
pub fn alpha_sum_counting(p: &AlphaParams) -> Rat {
    rat(p.zero_combinations() as i64 * (p.q as i64 - 1) - 4)
}

/// Both evaluations, which must agree.
pub fn alpha_sum(p: &AlphaParams) -> Result<Rat> {
    let exact = alpha_sum_cyclotomic(p)?;
    let counted = alpha_sum_counting(p);
    if exact != counted {
        return Err(Error::CrossCheck(format!(
            "α-sum for {p:?}: cyclotomic {exact}, counting {counted}"
        )));
    }
    Ok(exact)
}

/// `⟨χ₅(k), χ₁(m, n)↓P⟩ = (3 + q + Σ_j α_{jk}α_{jm}α_{jn}) / (q − 1)` for `q > 5`.
pub fn parabolic_inner_product(q: u64, k: u64, m: u64, n: u64) -> Result<Rat> {
    if q <= 5 {
        return Err(Error::InvalidArgument(format!("q = {q} must exceed 5")));
    }
    let p = AlphaParams::new(q, k, m, n)?;
    let s = alpha_sum(&p)?;
    Ok((rat(3 + q as i64) + s) / rat(q as i64 - 1))
}

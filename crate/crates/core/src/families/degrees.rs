//! Degree/multiplicity lists for the families of subgroups of `Sp4(2^e)`.

use num_traits::{Signed, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::poly::PolyQ;
use crate::chartab::SplitFuse;
use crate::error::{Error, Result};
use crate::exactnum::{rat, ratio, Rat};

/// `e` for `q = 2^e` with `e ≥ min_e`.
pub(crate) fn even_power(q: u64, min_e: u32) -> Result<u32> {
    if q.is_power_of_two() && q.trailing_zeros() >= min_e && q.trailing_zeros() <= 62 {
        Ok(q.trailing_zeros())
    } else {
        Err(Error::InvalidArgument(format!("q = {q} is not 2^e with e ≥ {min_e}")))
    }
}

/// Values of `q` at which a [`DegreeSpec`] applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Validity {
    /// `q = 2^e` with `e ≥ min_e`.
    EvenPower { min_e: u32 },
    /// A single field size; used when the degrees depend on more than `q`.
    Exactly(u64),
}

impl Validity {
    pub fn check(self, q: u64) -> Result<()> {
        match self {
            Validity::EvenPower { min_e } => even_power(q, min_e).map(|_| ()),
            Validity::Exactly(v) if v == q => Ok(()),
            Validity::Exactly(v) => Err(Error::InvalidArgument(format!("this list only holds at q = {v}, not {q}"))),
        }
    }
}

/// How a row arises from characters of an index-2 normal subgroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowKind {
    Plain,
    /// One of the two constituents of a split character.
    Split(u8),
    /// Induced from a fusing pair.
    Fused,
}

#[derive(Debug, Clone)]
pub struct DegreeEntry {
    pub label: String,
    pub degree: PolyQ,
    pub multiplicity: PolyQ,
    pub kind: RowKind,
}

/// A degree/multiplicity row evaluated at a concrete `q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EvaluatedEntry {
    pub label: String,
    pub degree: u64,
    pub multiplicity: u64,
}

/// Irreducible degrees of a family, with multiplicities, as polynomials in `q`.
#[derive(Debug, Clone)]
pub struct DegreeSpec {
    family: String,
    entries: Vec<DegreeEntry>,
    validity: Validity,
    order: PolyQ,
}

impl Serialize for DegreeSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.entries.len()))?;
        for e in &self.entries {
            seq.serialize_element(&(&e.label, &e.degree, &e.multiplicity))?;
        }
        seq.end()
    }
}

fn to_count(r: &Rat, what: &str) -> Result<u64> {
    if !r.is_integer() || r.is_negative() {
        return Err(Error::CrossCheck(format!("{what} evaluates to {r}, not a nonnegative integer")));
    }
    r.to_integer()
        .to_u64()
        .ok_or_else(|| Error::ResourceBound(format!("{what} = {r} does not fit in 64 bits")))
}

impl DegreeSpec {
    pub fn new(family: impl Into<String>, entries: Vec<DegreeEntry>, validity: Validity, order: PolyQ) -> Self {
        DegreeSpec { family: family.into(), entries, validity, order }
    }

    pub fn family(&self) -> &str {
        &self.family
    }

    pub fn entries(&self) -> &[DegreeEntry] {
        &self.entries
    }

    pub fn validity(&self) -> Validity {
        self.validity
    }

    /// `|G|` as a polynomial in `q`.
    pub fn order_poly(&self) -> &PolyQ {
        &self.order
    }

    /// `Σ multiplicity · degree`.
    pub fn total_degree_poly(&self) -> PolyQ {
        self.entries.iter().fold(PolyQ::zero(), |acc, e| acc + &e.multiplicity * &e.degree)
    }

    /// `Σ multiplicity · degree²`.
    pub fn square_sum_poly(&self) -> PolyQ {
        self.entries
            .iter()
            .fold(PolyQ::zero(), |acc, e| acc + &e.multiplicity * &e.degree.pow(2))
    }

    /// Rows at `q`; fails unless every degree and multiplicity is a nonnegative integer.
    pub fn evaluate(&self, q: u64) -> Result<Vec<EvaluatedEntry>> {
        self.validity.check(q)?;
        let x = rat(q as i64);
        self.entries
            .iter()
            .map(|e| {
                Ok(EvaluatedEntry {
                    label: e.label.clone(),
                    degree: to_count(&e.degree.eval(&x), &format!("degree of {}", e.label))?,
                    multiplicity: to_count(&e.multiplicity.eval(&x), &format!("multiplicity of {}", e.label))?,
                })
            })
            .collect()
    }

    /// Sorted degree multiset at `q`.
    pub fn degree_multiset(&self, q: u64) -> Result<Vec<u64>> {
        let mut out = Vec::new();
        for e in self.evaluate(q)? {
            out.extend(std::iter::repeat_n(e.degree, e.multiplicity as usize));
        }
        out.sort_unstable();
        Ok(out)
    }

    pub fn total_degree(&self, q: u64) -> Result<Rat> {
        self.validity.check(q)?;
        Ok(self.total_degree_poly().eval_int(q as i64))
    }

    /// `Σ m·d² = |G|`: as a polynomial identity for families valid on a range of `q`, and by
    /// evaluation for single-`q` lists.
    pub fn check_square_sum(&self) -> Result<()> {
        let diff = self.square_sum_poly() - &self.order;
        let holds = match self.validity {
            Validity::EvenPower { .. } => diff.is_zero(),
            Validity::Exactly(q) => diff.eval_int(q as i64).is_zero(),
        };
        if holds {
            Ok(())
        } else {
            Err(Error::CrossCheck(format!("{}: Σ m·d² − |G| = {diff}", self.family)))
        }
    }
}

fn p(ascending: &[i64]) -> PolyQ {
    PolyQ::from_ints(ascending)
}

fn row(label: &str, degree: PolyQ, multiplicity: PolyQ, kind: RowKind) -> DegreeEntry {
    DegreeEntry { label: label.to_string(), degree, multiplicity, kind }
}

/// Irreducible degrees of `Sp2(q) ≀ 2`, one row per type of character of `Sp2(q)²`.
pub fn wreath_degree_spec(q: u64) -> Result<DegreeSpec> {
    even_power(q, 2)?;
    use RowKind::*;
    let one = PolyQ::one();
    let two = PolyQ::int(2);
    let qq = PolyQ::q();
    let q_plus = p(&[1, 1]);
    let q_minus = p(&[-1, 1]);
    let half = |x: PolyQ| x.scale(&ratio(1, 2));
    let n_chi = half(p(&[-2, 1]));
    let n_theta = half(qq.clone());
    let entries = vec![
        row("(Tr×Tr)_1", one.clone(), one.clone(), Split(1)),
        row("(Tr×Tr)_2", one.clone(), one.clone(), Split(2)),
        row("Tr×ψ", &two * &qq, one.clone(), Fused),
        row("Tr×χ_s", &two * &q_plus, n_chi.clone(), Fused),
        row("Tr×θ_j", &two * &q_minus, n_theta.clone(), Fused),
        row("(ψ×ψ)_1", qq.pow(2), one.clone(), Split(1)),
        row("(ψ×ψ)_2", qq.pow(2), one.clone(), Split(2)),
        row("ψ×χ_s", &two * &qq * &q_plus, n_chi.clone(), Fused),
        row("ψ×θ_j", &two * &qq * &q_minus, n_theta.clone(), Fused),
        row("(χ_s×χ_s)_1", q_plus.pow(2), n_chi.clone(), Split(1)),
        row("(χ_s×χ_s)_2", q_plus.pow(2), n_chi.clone(), Split(2)),
        row("χ_s×χ_s'", &two * &q_plus.pow(2), (p(&[-2, 1]) * p(&[-4, 1])).scale(&ratio(1, 8)), Fused),
        row("χ_s×θ_j", &two * &q_plus * &q_minus, (&qq * p(&[-2, 1])).scale(&ratio(1, 4)), Fused),
        row("(θ_j×θ_j)_1", q_minus.pow(2), n_theta.clone(), Split(1)),
        row("(θ_j×θ_j)_2", q_minus.pow(2), n_theta, Split(2)),
        row("θ_j×θ_j'", &two * &q_minus.pow(2), (&qq * p(&[-2, 1])).scale(&ratio(1, 8)), Fused),
    ];
    let sl2 = &qq * &(qq.pow(2) - &one);
    Ok(DegreeSpec::new("wreath-sp2", entries, Validity::EvenPower { min_e: 2 }, &two * &sl2.pow(2)))
}

/// Whether `χ_s ∈ Irr(Sp2(q²))` splits in `Sp2(q²):2`: exactly when `q²−1` divides `s(q+1)` or
/// `s(q−1)`.
pub fn ext_split_rule(q: u64, s: u64) -> Result<SplitFuse> {
    even_power(q, 1)?;
    let q2 = q.checked_mul(q).ok_or_else(|| Error::InvalidArgument(format!("q = {q} is too large")))?;
    if s == 0 || s > (q2 - 2) / 2 {
        return Err(Error::InvalidArgument(format!("s = {s} is outside 1..={}", (q2 - 2) / 2)));
    }
    let m = (q2 - 1) as u128;
    let s = s as u128;
    let q = q as u128;
    if (s * (q + 1)).is_multiple_of(m) || (s * (q - 1)).is_multiple_of(m) {
        Ok(SplitFuse::Split)
    } else {
        Ok(SplitFuse::Fuse)
    }
}

/// Values of `s` for which `χ_s` splits.
pub fn ext_split_set(q: u64) -> Result<Vec<u64>> {
    even_power(q, 1)?;
    let top = (q * q - 2) / 2;
    let mut out = Vec::new();
    for s in 1..=top {
        if ext_split_rule(q, s)? == SplitFuse::Split {
            out.push(s);
        }
    }
    Ok(out)
}

/// `deg τ` for `Sp2(q²):2`, counting split and fused `χ_s` with [`ext_split_rule`]: split
/// characters contribute two constituents of degree `q²+1`, fusing pairs one of degree `2(q²+1)`.
pub fn ext_total_degree(q: u64) -> Result<Rat> {
    even_power(q, 2)?;
    let split = ext_split_set(q)?.len() as i64;
    let q = q as i64;
    let chis = (q * q - 2) / 2;
    let fused = chis - split;
    let q2 = q * q;
    // Tr and ψ split; all θ_j fuse in pairs
    let total = 2 + 2 * q2 + (2 * split + fused) * (q2 + 1) + (q2 / 2) * (q2 - 1);
    Ok(rat(total))
}

/// Irreducible degrees of `Sp2(q²):2`.
pub fn ext_degree_spec(q: u64) -> Result<DegreeSpec> {
    even_power(q, 2)?;
    use RowKind::*;
    let one = PolyQ::one();
    let q2 = PolyQ::q().pow(2);
    let chi = &q2 + &one;
    let theta = &q2 - &one;
    let two = PolyQ::int(2);
    let n_split = p(&[-1, 1]);
    let entries = vec![
        row("(Tr)_1", one.clone(), one.clone(), Split(1)),
        row("(Tr)_2", one.clone(), one.clone(), Split(2)),
        row("(ψ)_1", q2.clone(), one.clone(), Split(1)),
        row("(ψ)_2", q2.clone(), one.clone(), Split(2)),
        row("(χ_s)_1", chi.clone(), n_split.clone(), Split(1)),
        row("(χ_s)_2", chi.clone(), n_split, Split(2)),
        row("χ_s", &two * &chi, p(&[0, -2, 1]).scale(&ratio(1, 4)), Fused),
        row("θ_j", &two * &theta, q2.scale(&ratio(1, 4)), Fused),
    ];
    let order = &two * &q2 * &(q2.pow(2) - &one);
    Ok(DegreeSpec::new("ext-sp2q2", entries, Validity::EvenPower { min_e: 2 }, order))
}

/// `n` for `q = 2^{2n+1}`, `n ≥ 1`.
fn suzuki_n(q: u64) -> Result<u32> {
    let e = even_power(q, 3)
        .map_err(|_| Error::InvalidArgument(format!("q = {q} is not 2^(2n+1) with n ≥ 1")))?;
    if e % 2 == 0 {
        return Err(Error::InvalidArgument(format!("q = {q} is an even power of 2")));
    }
    Ok((e - 1) / 2)
}

/// Irreducible degrees of `Sz(q)` with `r = 2^{n+1}`, so that `r² = 2q`.
pub fn suzuki_degree_spec(q: u64) -> Result<DegreeSpec> {
    let n = suzuki_n(q)?;
    let r = 1i64 << (n + 1);
    let one = PolyQ::one();
    let qq = PolyQ::q();
    let q_minus = p(&[-1, 1]);
    let entries = vec![
        row("1", one.clone(), one.clone(), RowKind::Plain),
        row("q^2", qq.pow(2), one.clone(), RowKind::Plain),
        row("q^2+1", p(&[1, 0, 1]), p(&[-2, 1]).scale(&ratio(1, 2)), RowKind::Plain),
        row("2^n(q-1)", q_minus.scale(&rat(r / 2)), PolyQ::int(2), RowKind::Plain),
        row("(q-r+1)(q-1)", p(&[1 - r, 1]) * &q_minus, p(&[r, 1]).scale(&ratio(1, 4)), RowKind::Plain),
        row("(q+r+1)(q-1)", p(&[1 + r, 1]) * &q_minus, p(&[-r, 1]).scale(&ratio(1, 4)), RowKind::Plain),
    ];
    let order = qq.pow(2) * p(&[1, 0, 1]) * q_minus;
    Ok(DegreeSpec::new("sz", entries, Validity::Exactly(q), order))
}

/// `2^{n+1}(q−1) − q(q−1) + q³` for `q = 2^{2n+1}`.
pub fn suzuki_total_degree(q: u64) -> Result<Rat> {
    let n = suzuki_n(q)?;
    let q = rat(q as i64);
    let one = rat(1);
    Ok(rat(1i64 << (n + 1)) * (&q - &one) - &q * (&q - &one) + &q * &q * &q)
}

/// `q⁶ + q⁴ − q²`.
pub fn sp4_total_degree_poly() -> PolyQ {
    p(&[0, 0, -1, 0, 1, 0, 1])
}

/// `q⁴ + 2q³ + 2q² + 2q + 1`.
pub fn sp4_max_degree_poly() -> PolyQ {
    p(&[1, 2, 2, 2, 1])
}

/// Total degree and (for `q ≥ 4`) the largest degree formula for `Sp4(q)`, `q = 2^e`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sp4DegreeFacts {
    #[serde(serialize_with = "ser_rat")]
    pub total: Rat,
    #[serde(serialize_with = "ser_opt_rat")]
    pub max: Option<Rat>,
}

fn ser_rat<S: Serializer>(r: &Rat, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn ser_opt_rat<S: Serializer>(r: &Option<Rat>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&r.to_string()),
        None => s.serialize_none(),
    }
}

pub fn sp4_degree_facts(q: u64) -> Result<Sp4DegreeFacts> {
    even_power(q, 1)?;
    let x = q as i64;
    Ok(Sp4DegreeFacts {
        total: sp4_total_degree_poly().eval_int(x),
        max: (q >= 4).then(|| sp4_max_degree_poly().eval_int(x)),
    })
}

/// `F(x^r) − T(x)` where `T` is the total degree and `F` the largest-degree formula, comparing
/// `Sp4(q₀)` against `Sp4(q₀^r)`.
pub fn subfield_gap_poly(r: u32) -> PolyQ {
    let inner = PolyQ::q().pow(r);
    sp4_max_degree_poly().compose(&inner) - sp4_total_degree_poly()
}

/// Certifies `T(q₀) < F(q₀^r)` for every real `q₀ ≥ 2`.
pub fn subfield_inequality_holds(r: u32) -> bool {
    subfield_gap_poly(r).is_positive_from(2)
}

//! Gelfand and strong Gelfand pair decisions, the total-character shortcut, maximal-subgroup
//! scans of `Sp4(q)`, and Schur-ring commutativity.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;
use serde::Serialize;

use crate::chartab::{induce, inner_product, restrict, CharTable, Character, TableCache};
use crate::error::{Error, Result};
use crate::exactnum::Rat;
use crate::groups::{h_classes, maximal_subgroups_s6, maximal_subgroups_sp4, FinGroup, GroupSpec, Registry};

/// Largest group order [`schur_commutes`] accepts.
pub const SCHUR_MAX_ORDER: u64 = 20_000;

/// Result of decomposing a character against a table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Multiplicities {
    Free,
    /// First irreducible (in table order) occurring more than once.
    Repeated { index: usize, multiplicity: u64 },
}

impl Multiplicities {
    pub fn is_free(&self) -> bool {
        matches!(self, Multiplicities::Free)
    }
}

fn multiplicity(r: &Rat) -> Result<u64> {
    if !r.is_integer() || r.is_negative() {
        return Err(Error::NotACharacter(format!("multiplicity {r} is not a nonnegative integer")));
    }
    r.to_integer()
        .to_u64()
        .ok_or_else(|| Error::NotACharacter(format!("multiplicity {r} is too large")))
}

/// Whether every irreducible of `table` occurs in `chi` at most once.
pub fn is_multiplicity_free(chi: &Character, table: &CharTable) -> Result<Multiplicities> {
    if chi.group_id() != table.classes().group_id() {
        return Err(Error::GroupMismatch);
    }
    let mut first = None;
    for (index, psi) in table.irreducibles().iter().enumerate() {
        let m = multiplicity(&inner_product(chi, psi)?)?;
        if m > 1 && first.is_none() {
            first = Some(Multiplicities::Repeated { index, multiplicity: m });
        }
    }
    Ok(first.unwrap_or(Multiplicities::Free))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Sgp,
    NotSgp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    FullCheck,
    TotalCharShortcut,
}

/// An irreducible `χ` of `G` and `ψ` of `H` with `⟨χ↓H, ψ⟩ = multiplicity ≥ 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Witness {
    #[serde(skip)]
    pub g_index: usize,
    #[serde(skip)]
    pub h_index: usize,
    pub g_char_degree: u64,
    pub h_char_degree: u64,
    pub multiplicity: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SgpVerdict {
    #[serde(rename = "G")]
    pub g: String,
    #[serde(rename = "H")]
    pub h: String,
    pub verdict: Verdict,
    pub method: Method,
    pub witness: Option<Witness>,
}

impl SgpVerdict {
    pub fn is_sgp(&self) -> bool {
        self.verdict == Verdict::Sgp
    }

    fn full(g: &FinGroup, h_label: &str, witness: Option<Witness>) -> Self {
        SgpVerdict {
            g: g.label().to_string(),
            h: h_label.to_string(),
            verdict: if witness.is_some() { Verdict::NotSgp } else { Verdict::Sgp },
            method: Method::FullCheck,
            witness,
        }
    }
}

/// First `(χ, ψ)` in table order with `⟨χ↓H, ψ⟩ > 1`; the characters are checked in parallel.
pub fn restriction_witness(g: &FinGroup, tg: &CharTable, h: &FinGroup, th: &CharTable) -> Result<Option<Witness>> {
    let found: Vec<Option<Witness>> = tg
        .irreducibles()
        .par_iter()
        .enumerate()
        .map(|(g_index, chi)| -> Result<Option<Witness>> {
            let r = restrict(chi, g, h)?;
            match is_multiplicity_free(&r, th)? {
                Multiplicities::Free => Ok(None),
                Multiplicities::Repeated { index, multiplicity } => Ok(Some(Witness {
                    g_index,
                    h_index: index,
                    g_char_degree: chi.degree() as u64,
                    h_char_degree: th.irreducibles()[index].degree() as u64,
                    multiplicity,
                })),
            }
        })
        .collect::<Result<_>>()?;
    Ok(found.into_iter().flatten().next())
}

/// First `(ψ, χ)` in `H`-table order with `⟨ψ↑G, χ⟩ > 1`.
pub fn induction_witness(g: &FinGroup, tg: &CharTable, h: &FinGroup, th: &CharTable) -> Result<Option<Witness>> {
    for (h_index, psi) in th.irreducibles().iter().enumerate() {
        let ind = induce(psi, h, g)?;
        if let Multiplicities::Repeated { index, multiplicity } = is_multiplicity_free(&ind, tg)? {
            return Ok(Some(Witness {
                g_index: index,
                h_index,
                g_char_degree: tg.irreducibles()[index].degree() as u64,
                h_char_degree: psi.degree() as u64,
                multiplicity,
            }));
        }
    }
    Ok(None)
}

fn check_subgroup(g: &FinGroup, h: &FinGroup) -> Result<()> {
    if h.is_subgroup_of(g) {
        Ok(())
    } else {
        Err(Error::NotSubgroup { sub: h.label().into(), group: g.label().into() })
    }
}

/// Restricts every irreducible of `g` to `h` and decomposes.
pub fn is_strong_gelfand_pair(g: &FinGroup, h: &FinGroup, cache: &TableCache) -> Result<SgpVerdict> {
    check_subgroup(g, h)?;
    let (tg, th) = (cache.table(g)?, cache.table(h)?);
    Ok(SgpVerdict::full(g, h.label(), restriction_witness(g, &tg, h, &th)?))
}

/// The same decision from the definition: induces every irreducible of `h`.
pub fn is_strong_gelfand_pair_by_induction(g: &FinGroup, h: &FinGroup, cache: &TableCache) -> Result<SgpVerdict> {
    check_subgroup(g, h)?;
    let (tg, th) = (cache.table(g)?, cache.table(h)?);
    Ok(SgpVerdict::full(g, h.label(), induction_witness(g, &tg, h, &th)?))
}

/// Whether the permutation character `1_H↑G` is multiplicity-free.
pub fn is_gelfand_pair(g: &FinGroup, h: &FinGroup, cache: &TableCache) -> Result<bool> {
    check_subgroup(g, h)?;
    let tg = cache.table(g)?;
    let perm = induce(&Character::trivial(h.classes()), h, g)?;
    Ok(is_multiplicity_free(&perm, &tg)?.is_free())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Shortcut {
    NotSgp,
    Inconclusive,
}

/// `deg τ_H < deg χ` for some `χ ∈ Irr(G)` forces some constituent of `χ↓H` to repeat.
pub fn total_char_shortcut(tau_h_degree: &Rat, max_irr_degree_g: &Rat) -> Result<Shortcut> {
    if !tau_h_degree.is_positive() || !max_irr_degree_g.is_positive() {
        return Err(Error::InvalidArgument("degrees must be positive".into()));
    }
    Ok(if tau_h_degree < max_irr_degree_g { Shortcut::NotSgp } else { Shortcut::Inconclusive })
}

/// Shortcut first, full restriction check when it is inconclusive.
pub fn decide(g: &FinGroup, h: &FinGroup, h_label: &str, cache: &TableCache) -> Result<SgpVerdict> {
    check_subgroup(g, h)?;
    let (tg, th) = (cache.table(g)?, cache.table(h)?);
    let max = tg.degrees().into_iter().max().unwrap_or(1);
    let tau: u64 = th.degrees().iter().sum();
    let shortcut = total_char_shortcut(&Rat::from_integer(tau.into()), &Rat::from_integer(max.into()))?;
    if shortcut == Shortcut::NotSgp {
        return Ok(SgpVerdict {
            g: g.label().to_string(),
            h: h_label.to_string(),
            verdict: Verdict::NotSgp,
            method: Method::TotalCharShortcut,
            witness: None,
        });
    }
    Ok(SgpVerdict::full(g, h_label, restriction_witness(g, &tg, h, &th)?))
}

/// The ambient group and its maximal-subgroup representatives for `q ∈ {2, 4}`.
pub fn maximal_subgroups(q: u64, registry: &Registry) -> Result<(Arc<FinGroup>, Vec<(Arc<FinGroup>, String)>)> {
    let subs = match q {
        2 => maximal_subgroups_s6(registry)?,
        4 => maximal_subgroups_sp4(4, registry)?,
        _ => {
            return Err(Error::ResourceBound(format!(
                "maximal-subgroup scans need an enumerated Sp4(q); q = {q} is not 2 or 4"
            )))
        }
    };
    Ok((registry.group(&GroupSpec::Sp4 { q })?, subs))
}

/// One verdict per class of maximal subgroups of `Sp4(q)`, `q ∈ {2, 4}`.
pub fn scan_maximal_sp4(q: u64, registry: &Registry, cache: &TableCache) -> Result<Vec<SgpVerdict>> {
    let (g, subs) = maximal_subgroups(q, registry)?;
    subs.iter().map(|(h, label)| decide(&g, h, label, cache)).collect()
}

/// Commutativity of the Schur ring spanned by the `H`-classes of `G`. For each `H`-class
/// representative `x`, the pair counts `(C, D) ↦ #{c ∈ C : c⁻¹x ∈ D}` must be symmetric.
pub fn schur_commutes(g: &FinGroup, h: &FinGroup) -> Result<bool> {
    if g.order() > SCHUR_MAX_ORDER {
        return Err(Error::ResourceBound(format!(
            "`{}` has order {} > {SCHUR_MAX_ORDER}",
            g.label(),
            g.order()
        )));
    }
    let hc = h_classes(g, h)?;
    let class = hc.class_of();
    let inv = g.inverse_table();
    let n = g.order() as u32;
    let symmetric = hc.rep_index().par_iter().all(|&x| {
        let mut counts: HashMap<(u32, u32), u32> = HashMap::new();
        for c in 0..n {
            let d = g.mul_index(inv[c as usize], x);
            *counts.entry((class[c as usize], class[d as usize])).or_default() += 1;
        }
        counts.iter().all(|(&(a, b), &k)| counts.get(&(b, a)) == Some(&k))
    });
    Ok(symmetric)
}

#[cfg(test)]
mod tests;

//! Exact character tables: computation, inner products, induction, restriction, and
//! index-2 split/fuse analysis.

mod compare;
mod dixon;
mod modp;

use std::collections::HashMap;
use std::fmt;
use std::ops::Add;
use std::sync::{Arc, Mutex};

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

pub use compare::tables_equivalent;
pub use dixon::{dixon_schneider, MAX_CLASSES};

use crate::error::{Error, Result};
use crate::exactnum::{ratio, Cyclo, CycloSum, Rat};
use crate::groups::{fusion_map, ClassData, FinGroup};

/// Class function with one value per conjugacy class of its group.
#[derive(Clone)]
pub struct Character {
    classes: Arc<ClassData>,
    values: Vec<Cyclo>,
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.values.iter().map(|v| v.to_string())).finish()
    }
}

impl PartialEq for Character {
    fn eq(&self, other: &Self) -> bool {
        self.classes.group_id() == other.classes.group_id() && self.values == other.values
    }
}

impl Character {
    pub fn new(classes: Arc<ClassData>, values: Vec<Cyclo>) -> Self {
        assert_eq!(classes.len(), values.len(), "one value per class");
        Character { classes, values }
    }

    pub fn trivial(classes: Arc<ClassData>) -> Self {
        let values = vec![Cyclo::one(); classes.len()];
        Character { classes, values }
    }

    /// Character of the regular representation.
    pub fn regular(classes: Arc<ClassData>) -> Self {
        let mut values = vec![Cyclo::zero(); classes.len()];
        values[0] = Cyclo::from_int(classes.group_order() as i64);
        Character { classes, values }
    }

    pub fn group_id(&self) -> u64 {
        self.classes.group_id()
    }

    pub fn classes(&self) -> &Arc<ClassData> {
        &self.classes
    }

    pub fn values(&self) -> &[Cyclo] {
        &self.values
    }

    /// Value at the identity class.
    pub fn degree(&self) -> i64 {
        self.values[0].as_i64().expect("degree is an integer")
    }

    pub fn conjugate(&self) -> Self {
        Character {
            classes: self.classes.clone(),
            values: self.values.iter().map(Cyclo::conjugate).collect(),
        }
    }

    /// `⟨χ, χ⟩`.
    pub fn norm(&self) -> Result<Rat> {
        inner_product(self, self)
    }

    fn check_same_group(&self, other: &Character) -> Result<()> {
        if self.group_id() != other.group_id() {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }
}

impl Add for &Character {
    type Output = Character;

    fn add(self, rhs: &Character) -> Character {
        assert_eq!(self.group_id(), rhs.group_id(), "characters of different groups");
        Character {
            classes: self.classes.clone(),
            values: self.values.iter().zip(&rhs.values).map(|(a, b)| a + b).collect(),
        }
    }
}

/// `|G|⁻¹ Σ_C |C| a(C) conj(b(C))`.
pub fn inner_product(a: &Character, b: &Character) -> Result<Rat> {
    a.check_same_group(b)?;
    let cd = &a.classes;
    let mut acc = CycloSum::new();
    for ((x, y), &size) in a.values.iter().zip(&b.values).zip(cd.sizes()) {
        acc.add_hermitian(size as i128, x, y);
    }
    let total = acc.finish();
    let r = total
        .as_rational()
        .ok_or_else(|| Error::NotACharacter(format!("inner product {total} is irrational")))?;
    Ok(r / Rat::from_integer((cd.group_order() as i64).into()))
}

/// `ψ↑G` for `ψ` a class function of `h ≤ g`.
pub fn induce(psi: &Character, h: &FinGroup, g: &FinGroup) -> Result<Character> {
    if psi.group_id() != h.id() {
        return Err(Error::GroupMismatch);
    }
    let fusion = fusion_map(h, g)?;
    let gc = g.classes();
    let hc = psi.classes();
    let mut sums: Vec<CycloSum> = (0..gc.len()).map(|_| CycloSum::new()).collect();
    for (d, &c) in fusion.iter().enumerate() {
        sums[c as usize].add(&psi.values[d].scale(&Rat::from_integer((hc.sizes()[d] as i64).into())));
    }
    let values = sums
        .into_iter()
        .enumerate()
        .map(|(i, s)| {
            let scale = ratio(g.order() as i64, (gc.sizes()[i] * h.order()) as i64);
            s.finish().scale(&scale)
        })
        .collect();
    Ok(Character::new(gc, values))
}

/// `χ↓H` for `χ` a class function of `g ≥ h`.
pub fn restrict(chi: &Character, g: &FinGroup, h: &FinGroup) -> Result<Character> {
    if chi.group_id() != g.id() {
        return Err(Error::GroupMismatch);
    }
    let fusion = fusion_map(h, g)?;
    let values = fusion.iter().map(|&c| chi.values[c as usize].clone()).collect();
    Ok(Character::new(h.classes(), values))
}

/// Whether an irreducible of an index-2 subgroup induces to two irreducibles or to one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SplitFuse {
    Split,
    Fuse,
}

/// Classifies `ψ ∈ Irr(H)` for `|G : H| = 2` by `⟨ψ↑G, ψ↑G⟩ ∈ {2, 1}`.
pub fn split_fuse(psi: &Character, h: &FinGroup, g: &FinGroup) -> Result<SplitFuse> {
    if g.order() != 2 * h.order() {
        return Err(Error::InvalidArgument(format!(
            "`{}` has index {} in `{}`, not 2",
            h.label(),
            g.order() as f64 / h.order() as f64,
            g.label()
        )));
    }
    let norm = induce(psi, h, g)?.norm()?;
    if norm == Rat::from_integer(2.into()) {
        Ok(SplitFuse::Split)
    } else if norm.is_one() {
        Ok(SplitFuse::Fuse)
    } else {
        Err(Error::NotACharacter(format!("induced norm {norm} is neither 1 nor 2")))
    }
}

/// Irreducible characters of a group, sorted by degree then by value encoding.
#[derive(Clone, Debug)]
pub struct CharTable {
    label: String,
    classes: Arc<ClassData>,
    irreducibles: Vec<Character>,
    exponent: u32,
}

impl CharTable {
    /// Wraps a complete set of irreducibles; rows are put in canonical order.
    pub fn new(label: String, classes: Arc<ClassData>, mut irreducibles: Vec<Character>, exponent: u32) -> Self {
        let field = irreducibles
            .iter()
            .flat_map(|c| c.values.iter())
            .fold(exponent.max(1), |acc, v| acc.lcm(&v.order()));
        let key = |c: &Character| {
            let values: Vec<_> = c.values.iter().map(|v| v.in_field(field).sort_key()).collect();
            (c.degree(), values)
        };
        irreducibles.sort_by_cached_key(key);
        CharTable { label, classes, irreducibles, exponent }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn classes(&self) -> &Arc<ClassData> {
        &self.classes
    }

    pub fn irreducibles(&self) -> &[Character] {
        &self.irreducibles
    }

    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    /// Exponent of the group; every value lies in `Q(ζ_exponent)`.
    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.irreducibles.iter().map(|c| c.degree() as u64).collect()
    }

    pub fn degrees_sorted(&self) -> Vec<u64> {
        let mut d = self.degrees();
        d.sort_unstable();
        d
    }

    /// Sum of all irreducibles.
    pub fn total_character(&self) -> Character {
        total_character(self)
    }

    /// Multiplicity of each irreducible in `chi`.
    pub fn decompose(&self, chi: &Character) -> Result<Vec<Rat>> {
        self.irreducibles.iter().map(|x| inner_product(chi, x)).collect()
    }

    /// Exact row and column orthogonality and `Σ d² = |G|`.
    pub fn check_orthogonality(&self) -> Result<()> {
        let cd = &self.classes;
        let k = cd.len();
        if self.irreducibles.len() != k {
            return Err(Error::CrossCheck(format!("{} irreducibles for {k} classes", self.len())));
        }
        let sq: u64 = self.degrees().iter().map(|d| d * d).sum();
        if sq != cd.group_order() {
            return Err(Error::CrossCheck(format!("Σ d² = {sq} ≠ {}", cd.group_order())));
        }
        for (i, a) in self.irreducibles.iter().enumerate() {
            for (j, b) in self.irreducibles.iter().enumerate().skip(i) {
                let ip = inner_product(a, b)?;
                let want = if i == j { Rat::one() } else { Rat::zero() };
                if ip != want {
                    return Err(Error::CrossCheck(format!("⟨χ{i}, χ{j}⟩ = {ip}")));
                }
            }
        }
        let cent = cd.centralizer_orders();
        for r in 0..k {
            for s in r..k {
                let mut acc = CycloSum::new();
                for chi in &self.irreducibles {
                    acc.add_hermitian(1, &chi.values[r], &chi.values[s]);
                }
                let got = acc.finish();
                let want = if r == s { Cyclo::from_int(cent[r] as i64) } else { Cyclo::zero() };
                if got != want {
                    return Err(Error::CrossCheck(format!("column {r}·{s} = {got}")));
                }
            }
        }
        Ok(())
    }

    /// Classes (representative encoding, size, element order) and exact irreducible values.
    pub fn to_json(&self) -> serde_json::Value {
        let cd = &self.classes;
        let classes: Vec<serde_json::Value> = (0..cd.len())
            .map(|i| {
                serde_json::json!({
                    "rep": cd.reps()[i].entry_logs(),
                    "frobenius": cd.reps()[i].frobenius_power(),
                    "size": cd.sizes()[i],
                    "element_order": cd.element_orders()[i],
                })
            })
            .collect();
        serde_json::json!({
            "group": self.label,
            "order": cd.group_order(),
            "classes": classes,
            "irreducibles": self.irreducibles.iter().map(|c| &c.values).collect::<Vec<_>>(),
        })
    }

    /// Floating-point rendering; lossy, for inspection only.
    pub fn to_csv(&self) -> String {
        let cd = &self.classes;
        let mut out = String::from("# lossy: complex floating-point embedding of exact values\n");
        out.push_str("character");
        for i in 0..cd.len() {
            out.push_str(&format!(",c{i}[{}]", cd.sizes()[i]));
        }
        out.push('\n');
        for (n, chi) in self.irreducibles.iter().enumerate() {
            out.push_str(&format!("chi{n}"));
            for v in &chi.values {
                let (re, im) = v.to_complex();
                let re = if re.abs() < 1e-9 { 0.0 } else { re };
                if im.abs() < 1e-9 {
                    out.push_str(&format!(",{re:.6}"));
                } else {
                    out.push_str(&format!(",{re:.6}{im:+.6}i"));
                }
            }
            out.push('\n');
        }
        out
    }
}

/// `τ_G = Σ_{χ ∈ Irr(G)} χ`.
pub fn total_character(table: &CharTable) -> Character {
    let k = table.classes.len();
    let values = (0..k)
        .map(|c| {
            let mut acc = CycloSum::new();
            for chi in &table.irreducibles {
                acc.add(&chi.values[c]);
            }
            acc.finish()
        })
        .collect();
    Character::new(table.classes.clone(), values)
}

/// Memoises computed tables by group identity.
#[derive(Default)]
pub struct TableCache {
    tables: Mutex<HashMap<u64, Arc<CharTable>>>,
}

impl TableCache {
    pub fn new() -> Self {
        TableCache::default()
    }

    /// The table of `g`, computed with [`dixon_schneider`] on first request.
    pub fn table(&self, g: &FinGroup) -> Result<Arc<CharTable>> {
        if let Some(t) = self.tables.lock().unwrap().get(&g.id()) {
            return Ok(t.clone());
        }
        let t = Arc::new(dixon_schneider(g)?);
        self.tables.lock().unwrap().insert(g.id(), t.clone());
        Ok(t)
    }

    /// Every table computed so far, in order of group creation.
    pub fn tables(&self) -> Vec<Arc<CharTable>> {
        let map = self.tables.lock().unwrap();
        let mut ids: Vec<&u64> = map.keys().collect();
        ids.sort_unstable();
        ids.into_iter().map(|id| map[id].clone()).collect()
    }
}

/// Integer value of a rational that is known to be integral.
pub fn rat_to_i64(r: &Rat) -> Option<i64> {
    r.is_integer().then(|| r.to_integer().to_i64()).flatten()
}

#[cfg(test)]
mod tests;

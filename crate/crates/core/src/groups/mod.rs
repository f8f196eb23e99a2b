//! Explicit matrix groups: `Sp4(q)`, `SL2(q)`, the maximal subgroups of `Sp4(q)`, and a few
//! small test groups, with conjugacy classes and subgroup class partitions.

mod classes;
pub mod construct;
mod group;
mod mat;
mod spec;
mod stabilizer;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

pub use classes::{centralizer_order, conjugacy_classes, fusion_map, h_classes, ClassData};
pub use group::{FinGroup, DEFAULT_MAX_ORDER};
pub use mat::{antidiagonal, bilinear, preserves_form, symplectic_basis, Mat, MAX_DIM};
pub use spec::{GroupSpec, GROUP_NAMES};
pub use stabilizer::{projective_point, rref, stabilizer};

use crate::error::{Error, Result};
use crate::gfield::FieldCtx;

/// Caches field contexts and built groups, keyed by degree and canonical label.
pub struct Registry {
    max_order: u64,
    fields: Mutex<HashMap<u32, Arc<FieldCtx>>>,
    groups: Mutex<HashMap<String, Arc<FinGroup>>>,
}

impl Default for Registry {
    fn default() -> Self {
        Registry::new(DEFAULT_MAX_ORDER)
    }
}

impl Registry {
    pub fn new(max_order: u64) -> Self {
        Registry { max_order, fields: Mutex::default(), groups: Mutex::default() }
    }

    pub fn max_order(&self) -> u64 {
        self.max_order
    }

    pub fn field(&self, e: u32) -> Result<Arc<FieldCtx>> {
        let mut fields = self.fields.lock().unwrap();
        if let Some(f) = fields.get(&e) {
            return Ok(f.clone());
        }
        let f = Arc::new(FieldCtx::new(e)?);
        fields.insert(e, f.clone());
        Ok(f)
    }

    fn field_for(&self, q: u64) -> Result<Arc<FieldCtx>> {
        self.field(q.trailing_zeros())
    }

    /// Builds (or fetches) the group named by `spec`.
    pub fn group(&self, spec: &GroupSpec) -> Result<Arc<FinGroup>> {
        let label = spec.to_string();
        if let Some(g) = self.groups.lock().unwrap().get(&label) {
            return Ok(g.clone());
        }
        let expected = spec.expected_order();
        if expected > self.max_order {
            return Err(Error::OrderBoundExceeded { label, bound: self.max_order });
        }
        let bound = self.max_order;
        let q = spec.q();
        let g = match *spec {
            GroupSpec::Sl2 { .. } => construct::sl2(self.field_for(q)?, bound)?,
            GroupSpec::Sp4 { .. } => construct::sp4(self.field_for(q)?, bound)?,
            GroupSpec::S6 => {
                let g = construct::sp4(self.field(1)?, bound)?;
                let gens = g.generators().to_vec();
                FinGroup::generate("s6", g.field().clone(), 4, gens, bound)?
            }
            GroupSpec::WreathSp2 { .. } => construct::wreath_sp2(self.field_for(q)?, bound)?,
            GroupSpec::ExtSp2q2 { .. } => {
                construct::ext_sp2q2(self.field_for(q)?, self.field_for(q * q)?, bound)?
            }
            GroupSpec::ParabolicP { .. } => construct::parabolic_p(self.field_for(q)?, bound)?,
            GroupSpec::ParabolicQ { .. } => construct::parabolic_q(self.field_for(q)?, bound)?,
            GroupSpec::Sz { .. } => construct::suzuki(self.field_for(q)?, bound)?,
            GroupSpec::Sp4Sub { q0, .. } => {
                construct::sp4_sub(self.field_for(q)?, &*self.field_for(q0)?, bound)?
            }
            GroupSpec::So4Plus { .. } => construct::so4_plus(self.field_for(q)?, bound)?,
            GroupSpec::So4Minus { .. } => construct::so4_minus(self.field_for(q)?, bound)?,
            GroupSpec::Trivial => construct::trivial(self.field(1)?)?,
        };
        if g.order() != expected {
            return Err(Error::CrossCheck(format!(
                "`{label}` has order {} but {expected} was expected",
                g.order()
            )));
        }
        let g = Arc::new(g);
        self.groups.lock().unwrap().insert(label, g.clone());
        Ok(g)
    }

    /// Parses and builds in one step.
    pub fn build(&self, text: &str) -> Result<Arc<FinGroup>> {
        self.group(&GroupSpec::parse(text)?)
    }
}

/// Builds the group named by `spec` using `registry` for caching.
pub fn build_group(spec: &str, registry: &Registry) -> Result<Arc<FinGroup>> {
    registry.build(spec)
}

fn prime_divisors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2;
    while n > 1 {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    out
}

/// Specs of one representative per class of maximal subgroups of `Sp4(q)`, `q = 2^e`, `e > 1`.
pub fn maximal_subgroup_specs(q: u64) -> Result<Vec<GroupSpec>> {
    if !q.is_power_of_two() || q < 4 {
        return Err(Error::InvalidArgument(format!("q = {q} must be 2^e with e > 1")));
    }
    let e = q.trailing_zeros();
    let mut specs = vec![
        GroupSpec::ParabolicP { q },
        GroupSpec::ParabolicQ { q },
        GroupSpec::WreathSp2 { q },
        GroupSpec::ExtSp2q2 { q },
    ];
    for r in prime_divisors(e) {
        specs.push(GroupSpec::Sp4Sub { q, q0: 1 << (e / r) });
    }
    specs.push(GroupSpec::So4Plus { q });
    specs.push(GroupSpec::So4Minus { q });
    if e % 2 == 1 {
        specs.push(GroupSpec::Sz { q });
    }
    Ok(specs)
}

/// One representative per class of maximal subgroups of `Sp4(q)`, paired with its label.
pub fn maximal_subgroups_sp4(q: u64, registry: &Registry) -> Result<Vec<(Arc<FinGroup>, String)>> {
    maximal_subgroup_specs(q)?
        .into_iter()
        .map(|s| Ok((registry.group(&s)?, s.to_string())))
        .collect()
}

/// The seven classes of maximal subgroups of `S6 ≅ Sp4(2)`: the two parabolics (`S4 × 2`), the
/// two `S3 ≀ 2`, the two `S5` and `A6`. All are subgroups of `registry.build("sp4:2")`.
pub fn maximal_subgroups_s6(registry: &Registry) -> Result<Vec<(Arc<FinGroup>, String)>> {
    let mut out = Vec::new();
    for s in [
        GroupSpec::ParabolicP { q: 2 },
        GroupSpec::ParabolicQ { q: 2 },
        GroupSpec::WreathSp2 { q: 2 },
        GroupSpec::So4Plus { q: 2 },
        GroupSpec::ExtSp2q2 { q: 2 },
        GroupSpec::So4Minus { q: 2 },
    ] {
        out.push((registry.group(&s)?, s.to_string()));
    }
    out.push((Arc::new(alternating6(registry)?), "a6".to_string()));
    Ok(out)
}

/// `A6` as the subgroup of `Sp4(2)` generated by squares.
pub fn alternating6(registry: &Registry) -> Result<FinGroup> {
    let s6 = registry.group(&GroupSpec::Sp4 { q: 2 })?;
    construct::squares_subgroup(&s6, "a6")
}

/// `A5` inside `A6 < Sp4(2)`: the embedded `SL2(4)` without its field automorphism.
pub fn alternating5(registry: &Registry) -> Result<FinGroup> {
    let s6 = registry.group(&GroupSpec::Sp4 { q: 2 })?;
    let gens = construct::ext_sp2q2_generators(s6.field(), &registry.field(2)?, false)?;
    s6.subgroup("a5", gens)
}

/// Cyclic subgroup of order 6 of `Sp4(2)`.
pub fn cyclic6(registry: &Registry) -> Result<FinGroup> {
    let s6 = registry.group(&GroupSpec::Sp4 { q: 2 })?;
    let x = construct::element_of_order(&s6, 6)
        .ok_or_else(|| Error::CrossCheck("no element of order 6".into()))?;
    s6.subgroup("c6", vec![x])
}

/// All subgroups of a small group, found as closures of pairs of elements. Complete for groups
/// whose subgroups are all 2-generated, such as `S4`.
pub fn two_generated_subgroups(g: &FinGroup) -> Result<Vec<FinGroup>> {
    let mut seen: std::collections::HashSet<Vec<u32>> = std::collections::HashSet::new();
    let mut out = Vec::new();
    let n = g.order() as u32;
    for a in 0..n {
        for b in a..n {
            let gens = vec![*g.element(a), *g.element(b)];
            let h = g.subgroup(format!("{}<{a},{b}>", g.label()), gens)?;
            let mut key: Vec<u32> =
                h.elements().iter().map(|x| g.index_of(x).unwrap()).collect();
            key.sort_unstable();
            if seen.insert(key) {
                out.push(h);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests;

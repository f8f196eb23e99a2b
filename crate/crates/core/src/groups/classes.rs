//! Conjugacy classes of a [`FinGroup`], and its partition into classes under a subgroup.

use std::collections::VecDeque;

use super::group::FinGroup;
use super::mat::Mat;
use crate::error::{Error, Result};

const UNSET: u32 = u32::MAX;

/// Partition of a group into classes, with one representative each.
///
/// Classes are numbered in order of their smallest element index, so class 0 is the identity.
#[derive(Debug, Clone)]
pub struct ClassData {
    group_id: u64,
    group_order: u64,
    reps: Vec<Mat>,
    rep_index: Vec<u32>,
    sizes: Vec<u64>,
    class_of: Vec<u32>,
    inverse_class: Vec<u32>,
    element_orders: Vec<u32>,
}

impl ClassData {
    pub fn group_id(&self) -> u64 {
        self.group_id
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn reps(&self) -> &[Mat] {
        &self.reps
    }

    pub fn rep_index(&self) -> &[u32] {
        &self.rep_index
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    /// Class of each element, by element index.
    pub fn class_of(&self) -> &[u32] {
        &self.class_of
    }

    pub fn inverse_class(&self) -> &[u32] {
        &self.inverse_class
    }

    pub fn element_orders(&self) -> &[u32] {
        &self.element_orders
    }

    pub fn centralizer_orders(&self) -> Vec<u64> {
        self.sizes.iter().map(|s| self.group_order / s).collect()
    }

    /// Element indices of each class.
    pub fn members(&self) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new(); self.len()];
        for (i, &c) in self.class_of.iter().enumerate() {
            out[c as usize].push(i as u32);
        }
        out
    }
}

/// Orbits on the elements of `ambient` under conjugation by the group generated by `conjugators`.
fn conjugation_orbits(ambient: &FinGroup, conjugators: &[Mat]) -> Vec<Vec<u32>> {
    let ctx = ambient.field();
    let pairs: Vec<(Mat, Mat)> = conjugators
        .iter()
        .map(|s| (*s, s.inverse(ctx).expect("generators are invertible")))
        .collect();
    let mut seen = vec![false; ambient.order() as usize];
    let mut orbits = Vec::new();
    for start in 0..ambient.order() as u32 {
        if seen[start as usize] {
            continue;
        }
        seen[start as usize] = true;
        let mut orbit = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            let x = ambient.element(i);
            for (s, s_inv) in &pairs {
                let y = s_inv.mul(x, ctx).mul(s, ctx);
                let j = ambient.index_of(&y).expect("conjugate stays in the group");
                if !seen[j as usize] {
                    seen[j as usize] = true;
                    orbit.push(j);
                    queue.push_back(j);
                }
            }
        }
        orbits.push(orbit);
    }
    orbits
}

fn class_data(group: &FinGroup, orbits: Vec<Vec<u32>>) -> ClassData {
    let ctx = group.field();
    let n = group.order() as usize;
    let mut class_of = vec![UNSET; n];
    let mut reps = Vec::with_capacity(orbits.len());
    let mut rep_index = Vec::with_capacity(orbits.len());
    let mut sizes = Vec::with_capacity(orbits.len());
    for (c, orbit) in orbits.iter().enumerate() {
        let first = orbit[0];
        for &i in orbit {
            class_of[i as usize] = c as u32;
        }
        reps.push(*group.element(first));
        rep_index.push(first);
        sizes.push(orbit.len() as u64);
    }
    let inverse_class = reps
        .iter()
        .map(|r| class_of[group.index_of(&r.inverse(ctx).unwrap()).unwrap() as usize])
        .collect();
    let element_orders = reps.iter().map(|r| r.order(ctx)).collect();
    ClassData {
        group_id: group.id(),
        group_order: group.order(),
        reps,
        rep_index,
        sizes,
        class_of,
        inverse_class,
        element_orders,
    }
}

pub(super) fn conjugacy_classes_of(group: &FinGroup) -> ClassData {
    class_data(group, conjugation_orbits(group, group.generators()))
}

/// Conjugacy classes of `g` (cached on the group).
pub fn conjugacy_classes(g: &FinGroup) -> std::sync::Arc<ClassData> {
    g.classes()
}

/// Partition of `g` into `h`-classes `x^H = {x^y : y ∈ H}`.
pub fn h_classes(g: &FinGroup, h: &FinGroup) -> Result<ClassData> {
    if !h.is_subgroup_of(g) {
        return Err(Error::NotSubgroup { sub: h.label().into(), group: g.label().into() });
    }
    Ok(class_data(g, conjugation_orbits(g, h.generators())))
}

/// `|C_G(x)|` by direct count.
pub fn centralizer_order(g: &FinGroup, x: &Mat) -> Result<u64> {
    if !g.contains(x) {
        return Err(Error::InvalidArgument(format!("{x:?} is not in `{}`", g.label())));
    }
    let ctx = g.field();
    Ok(g.elements().iter().filter(|y| y.mul(x, ctx) == x.mul(y, ctx)).count() as u64)
}

/// Map from classes of `h` to classes of an overgroup `g`.
pub fn fusion_map(h: &FinGroup, g: &FinGroup) -> Result<Vec<u32>> {
    if !h.is_subgroup_of(g) {
        return Err(Error::NotSubgroup { sub: h.label().into(), group: g.label().into() });
    }
    let gc = g.classes();
    Ok(h
        .classes()
        .reps()
        .iter()
        .map(|r| gc.class_of()[g.index_of(r).unwrap() as usize])
        .collect())
}

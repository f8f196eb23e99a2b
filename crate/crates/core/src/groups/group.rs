//! Finite matrix groups enumerated by breadth-first closure.

use std::collections::VecDeque;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

use rustc_hash::FxHashMap;
use serde::Serialize;

use super::classes::{conjugacy_classes_of, ClassData};
use super::mat::Mat;
use crate::error::{Error, Result};
use crate::gfield::FieldCtx;

/// Default enumeration bound.
pub const DEFAULT_MAX_ORDER: u64 = 2_500_000;

static NEXT_GROUP_ID: AtomicU64 = AtomicU64::new(1);

/// A finite group of (semi)linear maps with every element stored explicitly.
///
/// Element `0` is always the identity; indices follow breadth-first order from the generators.
pub struct FinGroup {
    id: u64,
    label: String,
    field: Arc<FieldCtx>,
    dim: usize,
    generators: Vec<Mat>,
    elements: Vec<Mat>,
    index: FxHashMap<Mat, u32>,
    classes: OnceLock<Arc<ClassData>>,
    inverses: OnceLock<Vec<u32>>,
}

impl std::fmt::Debug for FinGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FinGroup")
            .field("label", &self.label)
            .field("order", &self.order())
            .field("q", &self.field.q())
            .field("dim", &self.dim)
            .finish()
    }
}

impl FinGroup {
    /// Closes `generators` under multiplication, failing once more than `max_order` elements
    /// have been found.
    pub fn generate(
        label: impl Into<String>,
        field: Arc<FieldCtx>,
        dim: usize,
        generators: Vec<Mat>,
        max_order: u64,
    ) -> Result<FinGroup> {
        let label = label.into();
        for g in &generators {
            if g.dim() != dim {
                return Err(Error::InvalidArgument(format!(
                    "generator of dimension {} in a group of dimension {dim}",
                    g.dim()
                )));
            }
            g.inverse(&field)?;
        }
        let id = Mat::identity(dim);
        let mut elements = vec![id];
        let mut index = FxHashMap::default();
        index.insert(id, 0u32);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            let x = elements[i];
            for s in &generators {
                let y = x.mul(s, &field);
                if index.contains_key(&y) {
                    continue;
                }
                if elements.len() as u64 >= max_order {
                    return Err(Error::OrderBoundExceeded { label, bound: max_order });
                }
                index.insert(y, elements.len() as u32);
                queue.push_back(elements.len());
                elements.push(y);
            }
        }
        Ok(FinGroup {
            id: NEXT_GROUP_ID.fetch_add(1, Ordering::Relaxed),
            label,
            field,
            dim,
            generators,
            elements,
            index,
            classes: OnceLock::new(),
            inverses: OnceLock::new(),
        })
    }

    /// Subgroup of `self` generated by `generators`, sharing the field context.
    pub fn subgroup(&self, label: impl Into<String>, generators: Vec<Mat>) -> Result<FinGroup> {
        let label = label.into();
        if let Some(g) = generators.iter().find(|g| !self.contains(g)) {
            return Err(Error::InvalidArgument(format!(
                "generator {g:?} of `{label}` is not in `{}`",
                self.label
            )));
        }
        FinGroup::generate(label, self.field.clone(), self.dim, generators, self.order())
    }

    /// Process-unique identifier, used to tie class data and characters to their group.
    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn field(&self) -> &Arc<FieldCtx> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn generators(&self) -> &[Mat] {
        &self.generators
    }

    pub fn elements(&self) -> &[Mat] {
        &self.elements
    }

    pub fn element(&self, i: u32) -> &Mat {
        &self.elements[i as usize]
    }

    pub fn index_of(&self, g: &Mat) -> Option<u32> {
        self.index.get(g).copied()
    }

    pub fn contains(&self, g: &Mat) -> bool {
        self.index.contains_key(g)
    }

    pub fn mul(&self, a: &Mat, b: &Mat) -> Mat {
        a.mul(b, &self.field)
    }

    /// Index of the product of two elements given by index.
    pub fn mul_index(&self, a: u32, b: u32) -> u32 {
        let p = self.mul(self.element(a), self.element(b));
        self.index[&p]
    }

    pub fn inverse_index(&self, a: u32) -> u32 {
        self.inverse_table()[a as usize]
    }

    /// Inverse of every element, by index.
    pub fn inverse_table(&self) -> &[u32] {
        self.inverses.get_or_init(|| {
            self.elements
                .iter()
                .map(|g| {
                    let inv = g.inverse(&self.field).expect("group elements are invertible");
                    self.index[&inv]
                })
                .collect()
        })
    }

    /// `H ≤ G` test: same field and dimension, and every generator of `H` lies in `G`.
    pub fn is_subgroup_of(&self, g: &FinGroup) -> bool {
        self.field.e() == g.field.e()
            && self.dim == g.dim
            && self.generators.iter().all(|x| g.contains(x))
    }

    /// Conjugacy classes, computed once and cached.
    pub fn classes(&self) -> Arc<ClassData> {
        self.classes.get_or_init(|| Arc::new(conjugacy_classes_of(self))).clone()
    }

    /// Machine-readable description: label, order and generators as entry logs.
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Gen {
            entries: Vec<Vec<Option<u32>>>,
            #[serde(skip_serializing_if = "is_zero")]
            frobenius: u32,
        }
        fn is_zero(x: &u32) -> bool {
            *x == 0
        }
        let gens: Vec<Gen> = self
            .generators
            .iter()
            .map(|g| Gen { entries: g.entry_logs(), frobenius: g.frobenius_power() })
            .collect();
        serde_json::json!({
            "label": self.label,
            "order": self.order(),
            "q": self.field.q(),
            "dim": self.dim,
            "generators": gens,
        })
    }
}

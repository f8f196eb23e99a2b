//! Equality of character tables up to simultaneous row and column permutation.

use std::collections::HashMap;

use num_integer::Integer;

use super::CharTable;

/// Interns exact values so cells compare as integers.
fn cell_ids(a: &CharTable, b: &CharTable) -> (Vec<Vec<u32>>, Vec<Vec<u32>>) {
    let field = [a, b]
        .iter()
        .flat_map(|t| t.irreducibles().iter().flat_map(|c| c.values().iter()))
        .fold(a.exponent().lcm(&b.exponent()).max(1), |acc, v| acc.lcm(&v.order()));
    let mut ids = HashMap::new();
    let mut intern = |t: &CharTable| -> Vec<Vec<u32>> {
        t.irreducibles()
            .iter()
            .map(|chi| {
                chi.values()
                    .iter()
                    .map(|v| {
                        let n = ids.len() as u32;
                        *ids.entry(v.in_field(field).sort_key()).or_insert(n)
                    })
                    .collect()
            })
            .collect()
    };
    let ca = intern(a);
    let cb = intern(b);
    (ca, cb)
}

fn column_signature(cells: &[Vec<u32>], size: u64, c: usize) -> (u64, Vec<u32>) {
    let mut col: Vec<u32> = cells.iter().map(|r| r[c]).collect();
    col.sort_unstable();
    (size, col)
}

struct Search<'a> {
    a: &'a [Vec<u32>],
    b: &'a [Vec<u32>],
    order: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    assigned: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    /// Rows restricted to the columns assigned so far must agree as multisets.
    fn prefix_consistent(&self) -> bool {
        let depth = self.assigned.len();
        let mut ra: Vec<Vec<u32>> = self
            .a
            .iter()
            .map(|r| self.order[..depth].iter().map(|&c| r[c]).collect())
            .collect();
        let mut rb: Vec<Vec<u32>> = self
            .b
            .iter()
            .map(|r| self.assigned.iter().map(|&c| r[c]).collect())
            .collect();
        ra.sort_unstable();
        rb.sort_unstable();
        ra == rb
    }

    fn run(&mut self) -> bool {
        let depth = self.assigned.len();
        if depth == self.order.len() {
            return true;
        }
        let col = self.order[depth];
        for i in 0..self.candidates[col].len() {
            let cand = self.candidates[col][i];
            if self.used[cand] {
                continue;
            }
            self.used[cand] = true;
            self.assigned.push(cand);
            if self.prefix_consistent() && self.run() {
                return true;
            }
            self.assigned.pop();
            self.used[cand] = false;
        }
        false
    }
}

/// `true` when the two tables agree exactly after permuting rows and columns, with class sizes
/// carried along with their columns.
pub fn tables_equivalent(a: &CharTable, b: &CharTable) -> bool {
    let k = a.classes().len();
    if k != b.classes().len() || a.len() != b.len() || a.degrees_sorted() != b.degrees_sorted() {
        return false;
    }
    let (ca, cb) = cell_ids(a, b);
    let sig_a: Vec<_> = (0..k).map(|c| column_signature(&ca, a.classes().sizes()[c], c)).collect();
    let sig_b: Vec<_> = (0..k).map(|c| column_signature(&cb, b.classes().sizes()[c], c)).collect();
    let candidates: Vec<Vec<usize>> =
        (0..k).map(|c| (0..k).filter(|&d| sig_a[c] == sig_b[d]).collect()).collect();
    if candidates.iter().any(Vec::is_empty) {
        return false;
    }
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&c| (candidates[c].len(), c));
    let mut search = Search {
        a: &ca,
        b: &cb,
        order,
        candidates,
        assigned: Vec::new(),
        used: vec![false; k],
    };
    search.run()
}

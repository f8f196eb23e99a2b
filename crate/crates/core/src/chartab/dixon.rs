//! Dixon–Schneider: common eigenvectors of the class matrices over `F_p`, lifted to cyclotomic
//! integers through power maps.

use std::sync::Arc;

use num_integer::Integer;
use rayon::prelude::*;

use super::modp::{charpoly, eval_poly, inv_mod, nullspace, pow_mod, prime_one_mod, primitive_root, rref};
use super::{CharTable, Character};
use crate::error::{Error, Result};
use crate::exactnum::Cyclo;
use crate::groups::{ClassData, FinGroup};

/// Largest number of classes [`dixon_schneider`] accepts.
pub const MAX_CLASSES: usize = 200;

struct Subspace {
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

/// `M[l][j] = #{x ∈ C_r : x⁻¹ g_j ∈ C_l}`, so that `M w = ω(C_r) w` for the central character
/// `w = (ω(C_l))_l` of every irreducible.
fn class_matrix(g: &FinGroup, cd: &ClassData, members: &[Vec<u32>], r: usize) -> Vec<Vec<u64>> {
    let k = cd.len();
    let inv_members = &members[cd.inverse_class()[r] as usize];
    let ctx = g.field();
    let columns: Vec<Vec<u64>> = (0..k)
        .into_par_iter()
        .map(|j| {
            let gj = &cd.reps()[j];
            let mut col = vec![0u64; k];
            for &u in inv_members {
                let y = g.element(u).mul(gj, ctx);
                let l = cd.class_of()[g.index_of(&y).expect("closed under products") as usize];
                col[l as usize] += 1;
            }
            col
        })
        .collect();
    (0..k).map(|l| (0..k).map(|j| columns[j][l]).collect()).collect()
}

fn split(space: Subspace, m: &[Vec<u64>], p: u64) -> Result<Vec<Subspace>> {
    let s = space.rows.len();
    let a: Vec<Vec<u64>> = space
        .pivots
        .iter()
        .map(|&pi| {
            space
                .rows
                .iter()
                .map(|b| {
                    m[pi].iter().zip(b).fold(0u64, |acc, (&x, &y)| (acc + x % p * y) % p)
                })
                .collect()
        })
        .collect();
    let poly = charpoly(&a, p);
    let roots: Vec<u64> = (0..p).filter(|&x| eval_poly(&poly, x, p) == 0).collect();
    if roots.len() == 1 {
        return Ok(vec![space]);
    }
    let mut out = Vec::with_capacity(roots.len());
    let mut total = 0;
    for lambda in roots {
        let shifted: Vec<Vec<u64>> = a
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, &x)| if i == j { (x + p - lambda) % p } else { x })
                    .collect()
            })
            .collect();
        let mut rows: Vec<Vec<u64>> = nullspace(&shifted, p)
            .iter()
            .map(|y| {
                let mut v = vec![0u64; space.rows[0].len()];
                for (c, &yc) in y.iter().enumerate() {
                    if yc == 0 {
                        continue;
                    }
                    for (x, &b) in v.iter_mut().zip(&space.rows[c]) {
                        *x = (*x + yc * b) % p;
                    }
                }
                v
            })
            .collect();
        let pivots = rref(&mut rows, p);
        total += rows.len();
        out.push(Subspace { rows, pivots });
    }
    if total != s {
        return Err(Error::CrossCheck("class matrix is not diagonalisable modulo p".into()));
    }
    Ok(out)
}

/// Exact irreducible character table of `g`.
pub fn dixon_schneider(g: &FinGroup) -> Result<CharTable> {
    let cd = g.classes();
    let k = cd.len();
    if k > MAX_CLASSES {
        return Err(Error::ResourceBound(format!(
            "{} has {k} classes, more than {MAX_CLASSES}",
            g.label()
        )));
    }
    let n = g.order();
    let exponent = cd.element_orders().iter().fold(1u64, |acc, &o| acc.lcm(&(o as u64)));
    // p > 2√n makes degrees recoverable from their squares mod p
    let p = prime_one_mod(exponent, (4 * n).isqrt());
    let z = pow_mod(primitive_root(p), (p - 1) / exponent, p);
    let members = cd.members();

    let mut order: Vec<usize> = (1..k).collect();
    order.sort_by_key(|&r| (cd.sizes()[r], r));
    let mut done: Vec<Subspace> = Vec::new();
    let identity_rows: Vec<Vec<u64>> =
        (0..k).map(|i| (0..k).map(|j| u64::from(i == j)).collect()).collect();
    let mut pending = vec![Subspace { rows: identity_rows, pivots: (0..k).collect() }];
    for &r in &order {
        pending.retain_mut(|s| {
            if s.rows.len() == 1 {
                done.push(std::mem::replace(s, Subspace { rows: vec![], pivots: vec![] }));
                false
            } else {
                true
            }
        });
        if pending.is_empty() {
            break;
        }
        let m = class_matrix(g, &cd, &members, r);
        let mut next = Vec::new();
        for s in pending {
            next.extend(split(s, &m, p)?);
        }
        pending = next;
    }
    for s in pending {
        if s.rows.len() != 1 {
            return Err(Error::CrossCheck("class matrices failed to separate characters".into()));
        }
        done.push(s);
    }

    let power_maps: Vec<Vec<usize>> = cd
        .reps()
        .iter()
        .map(|rep| {
            let o = rep.order(g.field());
            let mut x = crate::groups::Mat::identity(g.dim());
            (0..o)
                .map(|_| {
                    let c = cd.class_of()[g.index_of(&x).unwrap() as usize] as usize;
                    x = x.mul(rep, g.field());
                    c
                })
                .collect()
        })
        .collect();

    let mut chars = Vec::with_capacity(k);
    for s in done {
        let w = &s.rows[0];
        if s.pivots[0] != 0 {
            return Err(Error::CrossCheck("central character vanishes at the identity".into()));
        }
        let sizes = cd.sizes();
        let inv = cd.inverse_class();
        let sum = (0..k).fold(0u64, |acc, j| {
            (acc + w[j] * w[inv[j] as usize] % p * inv_mod(sizes[j] % p, p)) % p
        });
        let target = (n % p) * inv_mod(sum, p) % p;
        let degree = (1..=n.isqrt())
            .find(|&d| n.is_multiple_of(d) && d * d % p == target)
            .ok_or_else(|| Error::CrossCheck("no degree matches the norm".into()))?;
        let modular: Vec<u64> = (0..k)
            .map(|j| w[j] * (degree % p) % p * inv_mod(sizes[j] % p, p) % p)
            .collect();
        let mut values = Vec::with_capacity(k);
        for pm in &power_maps {
            let m = pm.len() as u64;
            let zm = pow_mod(z, exponent / m, p);
            let m_inv = inv_mod(m % p, p);
            let mut counts = Vec::with_capacity(pm.len());
            for l in 0..m {
                let step = pow_mod(zm, (m - l % m) % m, p);
                let mut acc = 0u64;
                let mut zeta = 1u64;
                for &c in pm {
                    acc = (acc + modular[c] * zeta) % p;
                    zeta = zeta * step % p;
                }
                let count = acc * m_inv % p;
                if count > degree {
                    return Err(Error::CrossCheck("eigenvalue multiplicity exceeds the degree".into()));
                }
                counts.push(count as i64);
            }
            if counts.iter().sum::<i64>() != degree as i64 {
                return Err(Error::CrossCheck("eigenvalue multiplicities do not sum to the degree".into()));
            }
            values.push(Cyclo::from_exponent_counts(&counts));
        }
        chars.push(Character::new(cd.clone(), values));
    }
    let table = CharTable::new(g.label().to_string(), Arc::clone(&cd), chars, exponent as u32);
    let sq: u64 = table.degrees().iter().map(|&d| d * d).sum();
    if sq != n {
        return Err(Error::CrossCheck(format!("squared degrees sum to {sq}, not {n}")));
    }
    Ok(table)
}

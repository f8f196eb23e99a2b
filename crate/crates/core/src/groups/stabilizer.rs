//! Point stabilisers via Schreier generators, without enumerating the ambient group.

use std::hash::Hash;

use rustc_hash::FxHashMap;

use super::group::FinGroup;
use super::mat::Mat;
use crate::error::{Error, Result};
use crate::gfield::{FieldCtx, FieldElem};
use std::sync::Arc;

/// Stabiliser of `base` in the group generated by `generators`, whose order must be
/// `ambient_order`. `act` must be a left action.
///
/// Schreier generators are added one at a time (skipping those already inside) until the
/// closure reaches `ambient_order / |orbit|`.
#[allow(clippy::too_many_arguments)]
pub fn stabilizer<P, F>(
    label: impl Into<String>,
    field: Arc<FieldCtx>,
    dim: usize,
    generators: &[Mat],
    ambient_order: u64,
    base: P,
    act: F,
    max_order: u64,
) -> Result<FinGroup>
where
    P: Clone + Eq + Hash,
    F: Fn(&Mat, &P) -> P,
{
    let label = label.into();
    let ctx = &*field;
    let mut points = vec![base.clone()];
    let mut transversal = vec![Mat::identity(dim)];
    let mut where_is: FxHashMap<P, usize> = FxHashMap::default();
    where_is.insert(base, 0);
    let mut i = 0;
    while i < points.len() {
        for s in generators {
            let y = act(s, &points[i]);
            if !where_is.contains_key(&y) {
                where_is.insert(y.clone(), points.len());
                transversal.push(s.mul(&transversal[i], ctx));
                points.push(y);
            }
        }
        i += 1;
    }
    let orbit = points.len() as u64;
    if !ambient_order.is_multiple_of(orbit) {
        return Err(Error::CrossCheck(format!(
            "orbit of length {orbit} does not divide group order {ambient_order}"
        )));
    }
    let target = ambient_order / orbit;
    if target > max_order {
        return Err(Error::OrderBoundExceeded { label, bound: max_order });
    }
    let inverses: Vec<Mat> = transversal.iter().map(|t| t.inverse(ctx)).collect::<Result<_>>()?;
    let mut gens: Vec<Mat> = Vec::new();
    let mut current = FinGroup::generate(label.clone(), field.clone(), dim, vec![], target)?;
    for (x, point) in points.iter().enumerate() {
        for s in generators {
            if current.order() == target {
                return Ok(current);
            }
            let y = where_is[&act(s, point)];
            let h = inverses[y].mul(s, ctx).mul(&transversal[x], ctx);
            if current.contains(&h) {
                continue;
            }
            gens.push(h);
            current = FinGroup::generate(label.clone(), field.clone(), dim, gens.clone(), target)?;
        }
    }
    if current.order() == target {
        Ok(current)
    } else {
        Err(Error::CrossCheck(format!(
            "stabiliser of order {} where {target} was expected",
            current.order()
        )))
    }
}

/// Projective point of a nonzero vector: scaled so the first nonzero coordinate is 1.
pub fn projective_point(v: &[FieldElem], ctx: &FieldCtx) -> Vec<FieldElem> {
    let lead = v.iter().find(|x| !x.is_zero()).copied().expect("nonzero vector");
    let s = ctx.inv(lead).unwrap();
    v.iter().map(|&x| ctx.mul(s, x)).collect()
}

/// Reduced row echelon form of the row space of `rows`, zero rows dropped.
pub fn rref(rows: &[Vec<FieldElem>], ctx: &FieldCtx) -> Vec<Vec<FieldElem>> {
    let mut m: Vec<Vec<FieldElem>> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let s = ctx.inv(m[r][c]).unwrap();
        for x in m[r].iter_mut() {
            *x = ctx.mul(s, *x);
        }
        for i in 0..m.len() {
            let f = m[i][c];
            if i != r && !f.is_zero() {
                for j in 0..ncols {
                    let v = ctx.add(m[i][j], ctx.mul(f, m[r][j]));
                    m[i][j] = v;
                }
            }
        }
        r += 1;
    }
    m.truncate(r);
    m
}

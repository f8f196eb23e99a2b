//! Small dense matrices over `GF(2^e)`, optionally twisted by a Frobenius power.
//!
//! A [`Mat`] with `frob = f` is the semilinear map `v ↦ M · φ^f(v)` where `φ` squares every
//! coordinate. Composition is `(M₁, f₁)(M₂, f₂) = (M₁ · φ^{f₁}(M₂), f₁ + f₂ mod e)`. Plain linear
//! matrices have `frob = 0`.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::gfield::{FieldCtx, FieldElem};

/// Largest supported matrix dimension.
pub const MAX_DIM: usize = 4;

#[derive(Clone, Copy, PartialEq, Eq)]
pub struct Mat {
    dim: u8,
    frob: u8,
    entries: [FieldElem; MAX_DIM * MAX_DIM],
}

impl Hash for Mat {
    fn hash<H: Hasher>(&self, state: &mut H) {
        let n = self.dim as usize * self.dim as usize;
        let mut word = ((self.dim as u64) << 8) | self.frob as u64;
        for (i, e) in self.entries[..n].iter().enumerate() {
            word = (word << 16) | e.index() as u64;
            if i % 4 == 3 {
                state.write_u64(word);
                word = 0;
            }
        }
        state.write_u64(word);
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.dim() {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.dim() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:?}", self.get(i, j))?;
            }
        }
        write!(f, "]")?;
        if self.frob != 0 {
            write!(f, "·φ^{}", self.frob)?;
        }
        Ok(())
    }
}

impl Mat {
    pub fn zero(dim: usize) -> Self {
        assert!((1..=MAX_DIM).contains(&dim), "unsupported dimension {dim}");
        Mat { dim: dim as u8, frob: 0, entries: [FieldElem::ZERO; MAX_DIM * MAX_DIM] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.set(i, i, FieldElem::ONE);
        }
        m
    }

    /// Row-major construction; `rows` must be square.
    pub fn from_rows(rows: &[Vec<FieldElem>]) -> Self {
        let mut m = Self::zero(rows.len());
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), rows.len(), "matrix must be square");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    /// Builds from 0/1 entries, useful for permutation and unitriangular matrices.
    pub fn from_bits(rows: &[&[u8]]) -> Self {
        let rows: Vec<Vec<FieldElem>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&b| if b == 0 { FieldElem::ZERO } else { FieldElem::ONE })
                    .collect()
            })
            .collect();
        Self::from_rows(&rows)
    }

    /// Permutation matrix sending `e_i` to `e_{perm[i]}`.
    pub fn permutation(perm: &[usize]) -> Self {
        let mut m = Self::zero(perm.len());
        for (i, &p) in perm.iter().enumerate() {
            m.set(p, i, FieldElem::ONE);
        }
        m
    }

    pub fn diagonal(diag: &[FieldElem]) -> Self {
        let mut m = Self::zero(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }

    pub fn with_frobenius(mut self, f: u32) -> Self {
        self.frob = f as u8;
        self
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn frobenius_power(&self) -> u32 {
        self.frob as u32
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> FieldElem {
        self.entries[i * self.dim as usize + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: FieldElem) {
        let n = self.dim as usize;
        self.entries[i * n + j] = x;
    }

    pub fn rows(&self) -> Vec<Vec<FieldElem>> {
        (0..self.dim())
            .map(|i| (0..self.dim()).map(|j| self.get(i, j)).collect())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim())
    }

    pub fn transpose(&self) -> Self {
        let mut t = *self;
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                t.set(i, j, self.get(j, i));
            }
        }
        t
    }

    /// Applies `φ^f` to every entry.
    pub fn frobenius_entries(&self, ctx: &FieldCtx, f: i64) -> Self {
        let mut m = *self;
        let n = self.dim() * self.dim();
        for x in &mut m.entries[..n] {
            *x = ctx.frobenius(*x, f);
        }
        m
    }

    /// Applies `x ↦ g(x)` to every entry, e.g. a subfield embedding.
    pub fn map_entries(&self, mut g: impl FnMut(FieldElem) -> FieldElem) -> Self {
        let mut m = *self;
        let n = self.dim() * self.dim();
        for x in &mut m.entries[..n] {
            *x = g(*x);
        }
        m
    }

    fn linear_mul(ctx: &FieldCtx, a: &Mat, b: &Mat) -> Mat {
        let n = a.dim();
        let mut c = Mat::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = FieldElem::ZERO;
                for k in 0..n {
                    acc = ctx.add(acc, ctx.mul(a.entries[i * n + k], b.entries[k * n + j]));
                }
                c.entries[i * n + j] = acc;
            }
        }
        c
    }

    /// Group product `self · other`.
    #[inline]
    pub fn mul(&self, other: &Mat, ctx: &FieldCtx) -> Mat {
        debug_assert_eq!(self.dim, other.dim);
        if self.frob == 0 {
            let mut c = Self::linear_mul(ctx, self, other);
            c.frob = other.frob;
            c
        } else {
            let twisted = other.frobenius_entries(ctx, self.frob as i64);
            let mut c = Self::linear_mul(ctx, self, &twisted);
            c.frob = ((self.frob as u32 + other.frob as u32) % ctx.e()) as u8;
            c
        }
    }

    /// Inverse of the linear part by Gauss–Jordan elimination.
    fn linear_inverse(&self, ctx: &FieldCtx) -> Result<Mat> {
        let n = self.dim();
        let mut a = *self;
        a.frob = 0;
        let mut inv = Mat::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a.get(r, col).is_zero())
                .ok_or_else(|| Error::InvalidArgument("singular matrix".into()))?;
            if pivot != col {
                for j in 0..n {
                    let (x, y) = (a.get(col, j), a.get(pivot, j));
                    a.set(col, j, y);
                    a.set(pivot, j, x);
                    let (x, y) = (inv.get(col, j), inv.get(pivot, j));
                    inv.set(col, j, y);
                    inv.set(pivot, j, x);
                }
            }
            let s = ctx.inv(a.get(col, col))?;
            for j in 0..n {
                a.set(col, j, ctx.mul(s, a.get(col, j)));
                inv.set(col, j, ctx.mul(s, inv.get(col, j)));
            }
            for r in 0..n {
                let f = a.get(r, col);
                if r == col || f.is_zero() {
                    continue;
                }
                for j in 0..n {
                    a.set(r, j, ctx.add(a.get(r, j), ctx.mul(f, a.get(col, j))));
                    inv.set(r, j, ctx.add(inv.get(r, j), ctx.mul(f, inv.get(col, j))));
                }
            }
        }
        Ok(inv)
    }

    /// Group inverse; errors when the linear part is singular.
    pub fn inverse(&self, ctx: &FieldCtx) -> Result<Mat> {
        let lin = self.linear_inverse(ctx)?;
        if self.frob == 0 {
            return Ok(lin);
        }
        let f = self.frob as i64;
        let mut m = lin.frobenius_entries(ctx, -f);
        m.frob = ((ctx.e() - self.frob as u32) % ctx.e()) as u8;
        Ok(m)
    }

    /// Applies the linear part to a column vector.
    pub fn apply(&self, v: &[FieldElem], ctx: &FieldCtx) -> Vec<FieldElem> {
        debug_assert_eq!(self.frob, 0);
        let n = self.dim();
        (0..n)
            .map(|i| {
                (0..n).fold(FieldElem::ZERO, |acc, k| ctx.add(acc, ctx.mul(self.get(i, k), v[k])))
            })
            .collect()
    }

    /// Multiplicative order, by repeated multiplication.
    pub fn order(&self, ctx: &FieldCtx) -> u32 {
        let mut x = *self;
        let mut n = 1;
        while !x.is_identity() || x.frob != 0 {
            x = x.mul(self, ctx);
            n += 1;
        }
        n
    }

    /// Packs entry indices densely; used as a total order for "smallest encoding" searches.
    pub fn encoding(&self) -> Vec<u32> {
        let n = self.dim() * self.dim();
        let mut v: Vec<u32> = self.entries[..n].iter().map(|e| e.index()).collect();
        v.push(self.frob as u32);
        v
    }

    /// Entry logs row by row (`None` for zero).
    pub fn entry_logs(&self) -> Vec<Vec<Option<u32>>> {
        (0..self.dim())
            .map(|i| (0..self.dim()).map(|j| self.get(i, j).log()).collect())
            .collect()
    }
}

/// Gram matrix of the fixed symplectic form: the antidiagonal identity.
pub fn antidiagonal(dim: usize) -> Mat {
    Mat::permutation(&(0..dim).rev().collect::<Vec<_>>())
}

/// `Mᵀ J M = J` for the antidiagonal `J`.
pub fn preserves_form(m: &Mat, gram: &Mat, ctx: &FieldCtx) -> bool {
    m.frobenius_power() == 0 && m.transpose().mul(gram, ctx).mul(m, ctx) == *gram
}

/// Bilinear form value `uᵀ G v`.
pub fn bilinear(gram: &Mat, u: &[FieldElem], v: &[FieldElem], ctx: &FieldCtx) -> FieldElem {
    let gv = gram.apply(v, ctx);
    u.iter()
        .zip(gv)
        .fold(FieldElem::ZERO, |acc, (&a, b)| ctx.add(acc, ctx.mul(a, b)))
}

/// Change of basis `P` with `Pᵀ G P = J` (antidiagonal) for a nondegenerate alternating `G` of
/// dimension 2 or 4.
///
/// Columns of `P` form a basis `f₁, …, f_n` with `B(f_i, f_{n+1-i}) = 1` and all other pairs
/// orthogonal.
pub fn symplectic_basis(gram: &Mat, ctx: &FieldCtx) -> Result<Mat> {
    let n = gram.dim();
    if !n.is_multiple_of(2) {
        return Err(Error::InvalidArgument("alternating form needs even dimension".into()));
    }
    let unit = |i: usize| -> Vec<FieldElem> {
        (0..n).map(|j| if i == j { FieldElem::ONE } else { FieldElem::ZERO }).collect()
    };
    let axpy = |a: FieldElem, x: &[FieldElem], y: &[FieldElem]| -> Vec<FieldElem> {
        x.iter().zip(y).map(|(&xi, &yi)| ctx.add(ctx.mul(a, xi), yi)).collect()
    };
    let mut pairs: Vec<(Vec<FieldElem>, Vec<FieldElem>)> = Vec::new();
    let project = |v: Vec<FieldElem>, pairs: &[(Vec<FieldElem>, Vec<FieldElem>)]| {
        let mut v = v;
        for (f, g) in pairs {
            // v - B(v, g) f + B(v, f) g, signs vanish in characteristic 2
            let bg = bilinear(gram, &v, g, ctx);
            let bf = bilinear(gram, &v, f, ctx);
            v = axpy(bg, f, &v);
            v = axpy(bf, g, &v);
        }
        v
    };
    for _ in 0..n / 2 {
        let candidates: Vec<Vec<FieldElem>> =
            (0..n).map(|i| project(unit(i), &pairs)).collect();
        let f = candidates
            .iter()
            .find(|v| v.iter().any(|x| !x.is_zero()))
            .cloned()
            .ok_or_else(|| Error::InvalidArgument("degenerate form".into()))?;
        let g = candidates
            .iter()
            .find(|v| !bilinear(gram, &f, v, ctx).is_zero())
            .cloned()
            .ok_or_else(|| Error::InvalidArgument("degenerate form".into()))?;
        let s = ctx.inv(bilinear(gram, &f, &g, ctx))?;
        let g: Vec<FieldElem> = g.iter().map(|&x| ctx.mul(s, x)).collect();
        pairs.push((f, g));
    }
    let mut p = Mat::zero(n);
    for (k, (f, g)) in pairs.iter().enumerate() {
        for i in 0..n {
            p.set(i, k, f[i]);
            p.set(i, n - 1 - k, g[i]);
        }
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfield::field_ctx;

    #[test]
    fn inverse_round_trip() {
        let ctx = field_ctx(3).unwrap();
        let g = ctx.gamma();
        let m = Mat::from_rows(&[
            vec![g, FieldElem::ONE, FieldElem::ZERO],
            vec![FieldElem::ZERO, g, ctx.gamma_pow(5)],
            vec![FieldElem::ONE, FieldElem::ZERO, FieldElem::ONE],
        ]);
        let inv = m.inverse(&ctx).unwrap();
        assert!(m.mul(&inv, &ctx).is_identity());
        assert!(inv.mul(&m, &ctx).is_identity());
        assert!(Mat::zero(2).inverse(&ctx).is_err());
    }

    #[test]
    fn semilinear_composition() {
        let ctx = field_ctx(4).unwrap();
        let g = ctx.gamma();
        let m = Mat::from_rows(&[vec![g, FieldElem::ONE], vec![FieldElem::ZERO, ctx.gamma_pow(3)]])
            .with_frobenius(2);
        let n = Mat::from_rows(&[vec![FieldElem::ONE, g], vec![g, FieldElem::ZERO]]).with_frobenius(3);
        let inv = m.inverse(&ctx).unwrap();
        assert!(m.mul(&inv, &ctx).is_identity());
        assert_eq!(m.mul(&inv, &ctx).frobenius_power(), 0);
        let assoc_l = m.mul(&n, &ctx).mul(&inv, &ctx);
        let assoc_r = m.mul(&n.mul(&inv, &ctx), &ctx);
        assert_eq!(assoc_l, assoc_r);
        let frob = Mat::identity(2).with_frobenius(2);
        assert_eq!(frob.order(&ctx), 2);
    }

    #[test]
    fn symplectic_basis_normalises_form() {
        let ctx = field_ctx(2).unwrap();
        let g = ctx.gamma();
        let (o, z) = (FieldElem::ONE, FieldElem::ZERO);
        // an alternating form with nonstandard Gram matrix
        let gram = Mat::from_rows(&[
            vec![z, g, o, z],
            vec![g, z, z, o],
            vec![o, z, z, g],
            vec![z, o, g, z],
        ]);
        let p = symplectic_basis(&gram, &ctx).unwrap();
        let j = antidiagonal(4);
        assert_eq!(p.transpose().mul(&gram, &ctx).mul(&p, &ctx), j);
    }
}

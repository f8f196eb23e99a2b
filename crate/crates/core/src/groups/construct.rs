//! Generators for the named groups.
//!
//! Every 4-dimensional group preserves the alternating form with antidiagonal Gram matrix `J`,
//! `B(x, y) = x₁y₄ + x₂y₃ + x₃y₂ + x₄y₁`.

use std::sync::Arc;

use super::group::FinGroup;
use super::mat::{antidiagonal, symplectic_basis, Mat};
use super::stabilizer::{projective_point, rref, stabilizer};
use crate::error::{Error, Result};
use crate::gfield::{FieldCtx, FieldElem, SubfieldEmbedding};

const Z: FieldElem = FieldElem::ZERO;
const O: FieldElem = FieldElem::ONE;

pub fn sp4_order(q: u64) -> u64 {
    q.pow(4) * (q * q - 1) * (q.pow(4) - 1)
}

fn sl2_generators(ctx: &FieldCtx) -> Vec<Mat> {
    let g = ctx.gamma();
    let mut gens = vec![
        Mat::from_rows(&[vec![O, O], vec![Z, O]]),
        Mat::from_rows(&[vec![O, Z], vec![O, O]]),
    ];
    if ctx.q() > 2 {
        gens.push(Mat::diagonal(&[g, ctx.inv(g).unwrap()]));
    }
    gens
}

pub fn sl2(ctx: Arc<FieldCtx>, max_order: u64) -> Result<FinGroup> {
    let gens = sl2_generators(&ctx);
    FinGroup::generate(format!("sl2:{}", ctx.q()), ctx, 2, gens, max_order)
}

/// Root elements for the two simple roots and their negatives, plus a torus element.
pub fn sp4_generators(ctx: &FieldCtx) -> Vec<Mat> {
    let short = Mat::from_bits(&[&[1, 1, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 1], &[0, 0, 0, 1]]);
    let long = Mat::from_bits(&[&[1, 0, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
    let mut gens = vec![short, short.transpose(), long, long.transpose()];
    if ctx.q() > 2 {
        let torus: Vec<FieldElem> = [2, 1, -1, -2].iter().map(|&k| ctx.gamma_pow(k)).collect();
        gens.push(Mat::diagonal(&torus));
    }
    gens
}

pub fn sp4(ctx: Arc<FieldCtx>, max_order: u64) -> Result<FinGroup> {
    let gens = sp4_generators(&ctx);
    FinGroup::generate(format!("sp4:{}", ctx.q()), ctx, 4, gens, max_order)
}

/// Places a 2×2 block on the coordinates `(a, b)` of a 4×4 identity.
fn block(m: &Mat, a: usize, b: usize) -> Mat {
    let mut out = Mat::identity(4);
    let idx = [a, b];
    for i in 0..2 {
        for j in 0..2 {
            out.set(idx[i], idx[j], m.get(i, j));
        }
    }
    out
}

/// `Sp2(q) ≀ 2`: `SL2` on the hyperbolic pairs `⟨e₁, e₄⟩` and `⟨e₂, e₃⟩`, and their swap.
pub fn wreath_sp2(ctx: Arc<FieldCtx>, max_order: u64) -> Result<FinGroup> {
    let mut gens: Vec<Mat> = sl2_generators(&ctx).iter().map(|m| block(m, 0, 3)).collect();
    gens.push(Mat::permutation(&[1, 0, 3, 2]));
    FinGroup::generate(format!("wreath-sp2:{}", ctx.q()), ctx, 4, gens, max_order)
}

/// `SL2(q²) ⋊ ⟨x ↦ x^q⟩` as semilinear 2×2 maps over `GF(q²)`; `big` must have degree `2e`.
pub fn ext_sp2q2_abstract(big: Arc<FieldCtx>, max_order: u64) -> Result<FinGroup> {
    if !big.e().is_multiple_of(2) {
        return Err(Error::InvalidArgument("field degree must be even".into()));
    }
    let mut gens = sl2_generators(&big);
    gens.push(Mat::identity(2).with_frobenius(big.e() / 2));
    let label = format!("ext-sp2q2-abstract:{}", 1u64 << (big.e() / 2));
    FinGroup::generate(label, big, 2, gens, max_order)
}

/// Restriction of scalars from `GF(q²)²` to `GF(q)⁴`.
struct ScalarRestriction {
    big: Arc<FieldCtx>,
    /// `(c₀, c₁)` with `x = c₀ + c₁β`, indexed by the polynomial bits of `x`
    coords: Vec<(FieldElem, FieldElem)>,
    beta: FieldElem,
}

impl ScalarRestriction {
    fn new(small: &FieldCtx, big: Arc<FieldCtx>) -> Result<Self> {
        let emb = SubfieldEmbedding::new(small, &big)?;
        let beta = big.gamma();
        let mut coords = vec![(Z, Z); big.q() as usize];
        for c0 in small.elements() {
            for c1 in small.elements() {
                let x = big.add(emb.apply(&big, c0), big.mul(emb.apply(&big, c1), beta));
                coords[big.to_poly(x) as usize] = (c0, c1);
            }
        }
        Ok(ScalarRestriction { big, coords, beta })
    }

    fn basis(&self) -> [[FieldElem; 2]; 4] {
        [[O, Z], [self.beta, Z], [Z, O], [Z, self.beta]]
    }

    fn to_small(&self, v: &[FieldElem; 2]) -> [FieldElem; 4] {
        let (a0, a1) = self.coords[self.big.to_poly(v[0]) as usize];
        let (b0, b1) = self.coords[self.big.to_poly(v[1]) as usize];
        [a0, a1, b0, b1]
    }

    fn scalar(&self, x: FieldElem) -> Result<FieldElem> {
        let (c0, c1) = self.coords[self.big.to_poly(x) as usize];
        if !c1.is_zero() {
            return Err(Error::CrossCheck("value outside the subfield".into()));
        }
        Ok(c0)
    }

    fn apply(&self, m: &Mat, v: &[FieldElem; 2]) -> [FieldElem; 2] {
        let f = m.frobenius_power() as i64;
        let w: Vec<FieldElem> = v.iter().map(|&x| self.big.frobenius(x, f)).collect();
        let r = m.with_frobenius(0).apply(&w, &self.big);
        [r[0], r[1]]
    }

    /// Matrix of a semilinear 2×2 map in the `GF(q)` basis `1, β, 1', β'`.
    fn restrict(&self, m: &Mat) -> Mat {
        let mut out = Mat::zero(4);
        for (j, b) in self.basis().iter().enumerate() {
            let col = self.to_small(&self.apply(m, b));
            for (i, &x) in col.iter().enumerate() {
                out.set(i, j, x);
            }
        }
        out
    }

    /// Gram matrix of `Tr(det(u, v))`.
    fn gram(&self) -> Result<Mat> {
        let big = &*self.big;
        let half = (big.e() / 2) as i64;
        let basis = self.basis();
        let mut g = Mat::zero(4);
        for i in 0..4 {
            for j in 0..4 {
                let (u, v) = (basis[i], basis[j]);
                let det = big.add(big.mul(u[0], v[1]), big.mul(u[1], v[0]));
                let tr = big.add(det, big.frobenius(det, half));
                g.set(i, j, self.scalar(tr)?);
            }
        }
        Ok(g)
    }
}

/// `SL2(q²).2` inside `Sp4(q)`, obtained by restriction of scalars and a change to a basis in
/// which the trace form is `J`.
pub fn ext_sp2q2(small: Arc<FieldCtx>, big: Arc<FieldCtx>, max_order: u64) -> Result<FinGroup> {
    let gens = ext_sp2q2_generators(&small, &big, true)?;
    FinGroup::generate(format!("ext-sp2q2:{}", small.q()), small, 4, gens, max_order)
}

/// Generators of the embedded `SL2(q²)` (and the field automorphism when `with_frobenius`).
pub fn ext_sp2q2_generators(
    small: &Arc<FieldCtx>,
    big: &Arc<FieldCtx>,
    with_frobenius: bool,
) -> Result<Vec<Mat>> {
    if big.e() != 2 * small.e() {
        return Err(Error::InvalidArgument("big field must be the quadratic extension".into()));
    }
    let rs = ScalarRestriction::new(small, big.clone())?;
    let p = symplectic_basis(&rs.gram()?, small)?;
    let p_inv = p.inverse(small)?;
    let mut abstract_gens = sl2_generators(big);
    if with_frobenius {
        abstract_gens.push(Mat::identity(2).with_frobenius(small.e()));
    }
    let j = antidiagonal(4);
    abstract_gens
        .iter()
        .map(|m| {
            let n = p_inv.mul(&rs.restrict(m), small).mul(&p, small);
            if n.transpose().mul(&j, small).mul(&n, small) != j {
                return Err(Error::CrossCheck("restricted generator is not symplectic".into()));
            }
            Ok(n)
        })
        .collect()
}

/// `Sz(q)` for `q = 2^{2n+1}`, preserving `J`.
pub fn suzuki(ctx: Arc<FieldCtx>, max_order: u64) -> Result<FinGroup> {
    let e = ctx.e();
    if e.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!("Suzuki groups need an odd field degree, got {e}")));
    }
    let n = (e - 1) / 2;
    let theta = |x: FieldElem| ctx.frobenius(x, (n + 1) as i64);
    let t = |a: FieldElem, b: FieldElem| {
        let ta = theta(a);
        let a2 = ctx.mul(a, a);
        let corner = ctx.add(ctx.add(ctx.mul(a2, ta), ctx.mul(a, b)), theta(b));
        Mat::from_rows(&[
            vec![O, Z, Z, Z],
            vec![a, O, Z, Z],
            vec![b, ta, O, Z],
            vec![corner, ctx.add(ctx.mul(a, ta), b), a, O],
        ])
    };
    let s = 1i64 << n;
    let lambda = ctx.gamma();
    let torus = Mat::diagonal(&[
        ctx.pow(lambda, 1 + s),
        ctx.pow(lambda, s),
        ctx.pow(lambda, -s),
        ctx.pow(lambda, -1 - s),
    ]);
    let gens = vec![t(O, Z), torus, antidiagonal(4)];
    FinGroup::generate(format!("sz:{}", ctx.q()), ctx, 4, gens, max_order)
}

/// Image of `Sp4(q₀)` under the entrywise embedding `GF(q₀) ↪ GF(q)`.
pub fn sp4_sub(big: Arc<FieldCtx>, small: &FieldCtx, max_order: u64) -> Result<FinGroup> {
    let emb = SubfieldEmbedding::new(small, &big)?;
    let gens = sp4_generators(small)
        .iter()
        .map(|m| m.map_entries(|x| emb.apply(&big, x)))
        .collect();
    FinGroup::generate(format!("sp4-sub:{}:{}", big.q(), small.q()), big, 4, gens, max_order)
}

/// Stabiliser in `Sp4(q)` of the projective point `⟨e₁⟩`.
pub fn parabolic_p(ctx: Arc<FieldCtx>, max_order: u64) -> Result<FinGroup> {
    let q = ctx.q() as u64;
    let gens = sp4_generators(&ctx);
    let c = ctx.clone();
    stabilizer(
        format!("parabolic-p:{q}"),
        ctx,
        4,
        &gens,
        sp4_order(q),
        vec![O, Z, Z, Z],
        move |m, v| projective_point(&m.apply(v, &c), &c),
        max_order,
    )
}

/// Stabiliser in `Sp4(q)` of the totally isotropic plane `⟨e₁, e₂⟩`.
pub fn parabolic_q(ctx: Arc<FieldCtx>, max_order: u64) -> Result<FinGroup> {
    let q = ctx.q() as u64;
    let gens = sp4_generators(&ctx);
    let c = ctx.clone();
    stabilizer(
        format!("parabolic-q:{q}"),
        ctx,
        4,
        &gens,
        sp4_order(q),
        vec![vec![O, Z, Z, Z], vec![Z, O, Z, Z]],
        move |m, rows: &Vec<Vec<FieldElem>>| {
            let images: Vec<Vec<FieldElem>> = rows.iter().map(|r| m.apply(r, &c)).collect();
            rref(&images, &c)
        },
        max_order,
    )
}

/// Least element (in field enumeration order) of absolute trace 1.
pub fn trace_one_element(ctx: &FieldCtx) -> FieldElem {
    ctx.elements().find(|&x| ctx.trace(x) == 1).expect("trace is onto")
}

/// Orthogonal group of `Q(x) = x₁x₄ + x₂x₃ + Σ aᵢxᵢ²` inside `Sp4(q)`; the polar form of every
/// such `Q` is `J`.
fn orthogonal(label: String, ctx: Arc<FieldCtx>, diag: [FieldElem; 4], max_order: u64) -> Result<FinGroup> {
    let q = ctx.q() as u64;
    let gens = sp4_generators(&ctx);
    let c = ctx.clone();
    let quad = move |a: &[FieldElem; 4], v: &[FieldElem]| -> FieldElem {
        let mut acc = c.add(c.mul(v[0], v[3]), c.mul(v[1], v[2]));
        for i in 0..4 {
            acc = c.add(acc, c.mul(a[i], c.mul(v[i], v[i])));
        }
        acc
    };
    let c2 = ctx.clone();
    stabilizer(
        label,
        ctx,
        4,
        &gens,
        sp4_order(q),
        diag,
        move |m, a| {
            // (g·Q)(v) = Q(g⁻¹v); its diagonal part is Q evaluated on the columns of g⁻¹
            let inv = m.inverse(&c2).unwrap();
            let mut out = [Z; 4];
            for (i, slot) in out.iter_mut().enumerate() {
                let col: Vec<FieldElem> = (0..4).map(|r| inv.get(r, i)).collect();
                *slot = quad(a, &col);
            }
            out
        },
        max_order,
    )
}

/// `O4⁺(q)`, preserving `x₁x₄ + x₂x₃`.
pub fn so4_plus(ctx: Arc<FieldCtx>, max_order: u64) -> Result<FinGroup> {
    let label = format!("so4+:{}", ctx.q());
    orthogonal(label, ctx, [Z; 4], max_order)
}

/// `O4⁻(q)`, preserving `x₁x₄ + x₂² + x₂x₃ + μx₃²` with `Tr(μ) = 1`.
pub fn so4_minus(ctx: Arc<FieldCtx>, max_order: u64) -> Result<FinGroup> {
    let mu = trace_one_element(&ctx);
    let label = format!("so4-:{}", ctx.q());
    orthogonal(label, ctx, [Z, O, mu, Z], max_order)
}

/// Subgroup generated by all squares; index 2 in `S6 ≅ Sp4(2)` gives `A6`.
pub fn squares_subgroup(g: &FinGroup, label: &str) -> Result<FinGroup> {
    let ctx = g.field();
    let mut gens: Vec<Mat> = Vec::new();
    let mut current = g.subgroup(label, vec![])?;
    for x in g.elements() {
        let sq = x.mul(x, ctx);
        if !current.contains(&sq) {
            gens.push(sq);
            current = g.subgroup(label, gens.clone())?;
        }
    }
    Ok(current)
}

/// First element of the given order, in enumeration order.
pub fn element_of_order(g: &FinGroup, order: u32) -> Option<Mat> {
    g.elements().iter().find(|x| x.order(g.field()) == order).copied()
}

/// Symmetric group `S4` as 4×4 permutation matrices over `GF(2)`.
pub fn sym4(ctx: Arc<FieldCtx>) -> Result<FinGroup> {
    let gens = vec![Mat::permutation(&[1, 0, 2, 3]), Mat::permutation(&[1, 2, 3, 0])];
    FinGroup::generate("sym4", ctx, 4, gens, 24)
}

/// Dihedral group of order 8 as permutation matrices of the square's vertices.
pub fn dihedral8(ctx: Arc<FieldCtx>) -> Result<FinGroup> {
    let gens = vec![Mat::permutation(&[1, 2, 3, 0]), Mat::permutation(&[0, 3, 2, 1])];
    FinGroup::generate("dihedral8", ctx, 4, gens, 8)
}

/// Quaternion group inside `GL4(2)`.
pub fn quaternion8(ctx: Arc<FieldCtx>) -> Result<FinGroup> {
    let a = Mat::from_bits(&[&[1, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 1, 1], &[0, 0, 0, 1]]);
    let b = Mat::from_bits(&[&[1, 1, 0, 0], &[0, 1, 0, 1], &[0, 0, 1, 1], &[0, 0, 0, 1]]);
    FinGroup::generate("quaternion8", ctx, 4, vec![a, b], 8)
}

/// The trivial group, as the identity 2×2 matrix over `GF(2)`.
pub fn trivial(ctx: Arc<FieldCtx>) -> Result<FinGroup> {
    FinGroup::generate("trivial", ctx, 2, vec![], 1)
}

//! The generic character table of `SL2(q)`, `q` even, written down from closed formulas on the
//! classes of an enumerated `sl2:q`.

use std::sync::Arc;

use num_integer::Integer;

use super::degrees::even_power;
use crate::chartab::{CharTable, Character};
use crate::error::{Error, Result};
use crate::exactnum::Cyclo;
use crate::gfield::FieldElem;
use crate::groups::{FinGroup, GroupSpec, Mat, Registry};

/// Element of order `q+1` with the smallest encoding.
fn anisotropic_torus_generator(g: &FinGroup, q: u64) -> Result<Mat> {
    g.elements()
        .iter()
        .filter(|x| x.order(g.field()) as u64 == q + 1)
        .min_by_key(|x| x.encoding())
        .copied()
        .ok_or_else(|| Error::CrossCheck(format!("{} has no element of order {}", g.label(), q + 1)))
}

fn power(x: &Mat, n: u64, g: &FinGroup) -> Mat {
    (0..n).fold(Mat::identity(g.dim()), |acc, _| acc.mul(x, g.field()))
}

/// Table of `sl2:q` with classes `1, c, a^t, b^m` and characters `Tr, ψ, χ_s, θ_j`, where
/// `1 ≤ s, t ≤ (q−2)/2` and `1 ≤ j, m ≤ q/2`.
pub fn sl2_table(q: u64, registry: &Registry) -> Result<CharTable> {
    even_power(q, 2)?;
    let g = registry.group(&GroupSpec::Sl2 { q })?;
    sl2_table_of(&g, q)
}

fn sl2_table_of(g: &Arc<FinGroup>, q: u64) -> Result<CharTable> {
    let ctx = g.field();
    let cd = g.classes();
    let k = cd.len();
    if k as u64 != q + 1 {
        return Err(Error::CrossCheck(format!("{} has {k} classes, not {}", g.label(), q + 1)));
    }
    let class = |x: &Mat| -> Result<usize> {
        let i = g
            .index_of(x)
            .ok_or_else(|| Error::CrossCheck("class representative outside the group".into()))?;
        Ok(cd.class_of()[i as usize] as usize)
    };
    let (o, z) = (FieldElem::ONE, FieldElem::ZERO);
    let c = Mat::from_rows(&[vec![o, z], vec![o, o]]);
    let gamma = ctx.gamma();
    let a = Mat::diagonal(&[gamma, ctx.inv(gamma)?]);
    let b = anisotropic_torus_generator(g, q)?;

    let half_split = (q - 2) / 2;
    let half_nonsplit = q / 2;
    let c_class = class(&c)?;
    let a_classes: Vec<usize> = (1..=half_split).map(|t| class(&power(&a, t, g))).collect::<Result<_>>()?;
    let b_classes: Vec<usize> =
        (1..=half_nonsplit).map(|m| class(&power(&b, m, g))).collect::<Result<_>>()?;
    let mut seen = vec![false; k];
    for &i in std::iter::once(&0).chain([c_class].iter()).chain(&a_classes).chain(&b_classes) {
        if std::mem::replace(&mut seen[i], true) {
            return Err(Error::CrossCheck("representatives 1, c, a^t, b^m are not pairwise non-conjugate".into()));
        }
    }

    let qi = q as i64;
    let rho = (q - 1) as u32;
    let sigma = (q + 1) as u32;
    let pair = |order: u32, e: i64| Cyclo::root_of_unity(order, e) + Cyclo::root_of_unity(order, -e);
    let make = |one: i64, at_c: i64, at_a: &dyn Fn(i64) -> Cyclo, at_b: &dyn Fn(i64) -> Cyclo| {
        let mut values = vec![Cyclo::zero(); k];
        values[0] = Cyclo::from_int(one);
        values[c_class] = Cyclo::from_int(at_c);
        for (t, &i) in a_classes.iter().enumerate() {
            values[i] = at_a(t as i64 + 1);
        }
        for (m, &i) in b_classes.iter().enumerate() {
            values[i] = at_b(m as i64 + 1);
        }
        Character::new(cd.clone(), values)
    };

    let mut chars = vec![
        Character::trivial(cd.clone()),
        make(qi, 0, &|_| Cyclo::one(), &|_| -Cyclo::one()),
    ];
    for s in 1..=half_split as i64 {
        chars.push(make(qi + 1, 1, &|t| pair(rho, s * t), &|_| Cyclo::zero()));
    }
    for j in 1..=half_nonsplit as i64 {
        chars.push(make(qi - 1, -1, &|_| Cyclo::zero(), &|m| -pair(sigma, j * m)));
    }
    let exponent = cd.element_orders().iter().fold(1u32, |acc, &o| acc.lcm(&o));
    Ok(CharTable::new(g.label().to_string(), cd.clone(), chars, exponent))
}

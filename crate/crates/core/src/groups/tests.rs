use super::*;
use crate::gfield::FieldElem;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn registry() -> Registry {
    Registry::default()
}

fn assert_class_sanity(g: &FinGroup) {
    let cd = g.classes();
    assert_eq!(cd.sizes().iter().sum::<u64>(), g.order());
    assert_eq!(cd.sizes()[0], 1);
    assert!(cd.reps()[0].is_identity());
    for (i, (&s, &r)) in cd.sizes().iter().zip(cd.rep_index()).enumerate() {
        assert_eq!(g.order() % s, 0);
        assert_eq!(cd.class_of()[r as usize] as usize, i);
        let inv = cd.inverse_class()[i] as usize;
        assert_eq!(cd.inverse_class()[inv] as usize, i);
    }
}

fn assert_closed(g: &FinGroup, samples: usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let n = g.order() as u32;
    for _ in 0..samples {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        assert!(g.contains(&g.mul(g.element(a), g.element(b))));
    }
    for x in g.elements().iter().take(samples) {
        assert!(g.contains(&x.inverse(g.field()).unwrap()));
    }
}

#[test]
fn small_orders_match_formulas() {
    let reg = registry();
    for spec in [
        "sl2:2", "sl2:4", "sl2:8", "sp4:2", "s6", "wreath-sp2:2", "wreath-sp2:4", "ext-sp2q2:2",
        "ext-sp2q2:4", "parabolic-p:2", "parabolic-q:2", "parabolic-p:4", "parabolic-q:4", "sz:2",
        "sz:8", "sp4-sub:4:2", "so4+:2", "so4-:2", "so4+:4", "so4-:4", "trivial",
    ] {
        let g = reg.build(spec).unwrap();
        assert_eq!(g.order(), GroupSpec::parse(spec).unwrap().expected_order(), "{spec}");
    }
}

#[test]
fn named_orders() {
    let reg = registry();
    assert_eq!(reg.build("sl2:4").unwrap().order(), 60);
    assert_eq!(reg.build("wreath-sp2:4").unwrap().order(), 7200);
    assert_eq!(reg.build("parabolic-p:4").unwrap().order(), 11520);
    assert_eq!(reg.build("sz:8").unwrap().order(), 29120);
}

#[test]
fn symplectic_generators_and_products() {
    let reg = registry();
    let j = antidiagonal(4);
    for spec in ["sp4:4", "wreath-sp2:4", "ext-sp2q2:4", "parabolic-q:4", "so4-:4", "sz:8"] {
        let spec = GroupSpec::parse(spec).unwrap();
        let g = if spec == (GroupSpec::Sp4 { q: 4 }) {
            // avoid enumerating the full group: check random words in the generators instead
            let ctx = reg.field(2).unwrap();
            let gens = construct::sp4_generators(&ctx);
            let mut rng = ChaCha8Rng::seed_from_u64(3);
            let mut x = Mat::identity(4);
            for _ in 0..1000 {
                x = x.mul(&gens[rng.gen_range(0..gens.len())], &ctx);
                assert!(preserves_form(&x, &j, &ctx));
            }
            continue;
        } else {
            reg.group(&spec).unwrap()
        };
        for x in g.generators() {
            assert!(preserves_form(x, &j, g.field()), "{spec}");
        }
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..1000 {
            let x = g.element(rng.gen_range(0..g.order() as u32));
            assert!(preserves_form(x, &j, g.field()), "{spec}");
        }
        assert_closed(&g, 1000);
    }
}

#[test]
fn sl2_4_class_sizes() {
    let g = registry().build("sl2:4").unwrap();
    let cd = conjugacy_classes(&g);
    let mut sizes = cd.sizes().to_vec();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![1, 12, 12, 15, 20]);
    assert_class_sanity(&g);
    // the involution class has centraliser of order 60 / 15
    let c = cd.sizes().iter().position(|&s| s == 15).unwrap();
    assert_eq!(centralizer_order(&g, &cd.reps()[c]).unwrap(), 4);
    assert_eq!(centralizer_order(&g, &Mat::identity(2)).unwrap(), 60);
}

#[test]
fn s6_has_eleven_classes() {
    let g = registry().build("s6").unwrap();
    assert_eq!(g.classes().len(), 11);
    assert_class_sanity(&g);
}

#[test]
fn suzuki_centralisers() {
    let g = registry().build("sz:8").unwrap();
    assert_class_sanity(&g);
    let cd = g.classes();
    assert_eq!(cd.len(), 11);
    for (r, &s) in cd.reps().iter().zip(cd.sizes()) {
        assert_eq!(centralizer_order(&g, r).unwrap() * s, g.order());
    }
}

#[test]
fn abstract_and_embedded_extension_agree() {
    let reg = registry();
    for q in [2u64, 4] {
        let e = q.trailing_zeros();
        let abs = construct::ext_sp2q2_abstract(reg.field(2 * e).unwrap(), 100_000).unwrap();
        let emb = reg.group(&GroupSpec::ExtSp2q2 { q }).unwrap();
        assert_eq!(abs.order(), emb.order());
        let sorted = |g: &FinGroup| {
            let mut v = g.classes().sizes().to_vec();
            v.sort_unstable();
            v
        };
        assert_eq!(sorted(&abs), sorted(&emb));
    }
}

#[test]
fn orthogonal_groups_match_partner_orders() {
    let reg = registry();
    assert_eq!(reg.build("so4+:4").unwrap().order(), reg.build("wreath-sp2:4").unwrap().order());
    assert_eq!(reg.build("so4-:4").unwrap().order(), reg.build("ext-sp2q2:4").unwrap().order());
}

#[test]
fn h_classes_refine_classes() {
    let reg = registry();
    let g = reg.build("s6").unwrap();
    let same = h_classes(&g, &g).unwrap();
    assert_eq!(same.sizes(), g.classes().sizes());
    let triv = g.subgroup("1", vec![]).unwrap();
    assert_eq!(h_classes(&g, &triv).unwrap().len() as u64, g.order());
    let s5 = reg.build("ext-sp2q2:2").unwrap();
    let hc = h_classes(&g, &s5).unwrap();
    assert!(hc.len() > g.classes().len());
    // every H-class lies inside one G-class
    let gc = g.classes();
    for members in hc.members() {
        let c = gc.class_of()[members[0] as usize];
        assert!(members.iter().all(|&i| gc.class_of()[i as usize] == c));
    }
    let sl2 = reg.build("sl2:4").unwrap();
    assert!(matches!(h_classes(&g, &sl2), Err(Error::NotSubgroup { .. })));
}

#[test]
fn maximal_subgroups_at_q4() {
    let reg = registry();
    let subs = maximal_subgroups_sp4(4, &reg).unwrap();
    let orders: Vec<u64> = subs.iter().map(|(g, _)| g.order()).collect();
    assert_eq!(orders, vec![11520, 11520, 7200, 8160, 720, 7200, 8160]);
    for (h, _) in &subs {
        assert_eq!(979200 % h.order(), 0);
    }
    let specs8 = maximal_subgroup_specs(8).unwrap();
    assert!(specs8.contains(&GroupSpec::Sz { q: 8 }));
    assert!(specs8.contains(&GroupSpec::Sp4Sub { q: 8, q0: 2 }));
}

#[test]
fn s6_maximal_and_small_subgroups() {
    let reg = registry();
    let s6 = reg.build("sp4:2").unwrap();
    let maxes = maximal_subgroups_s6(&reg).unwrap();
    let mut orders: Vec<u64> = maxes.iter().map(|(h, _)| h.order()).collect();
    orders.sort_unstable();
    assert_eq!(orders, vec![48, 48, 72, 72, 120, 120, 360]);
    for (h, _) in &maxes {
        assert!(h.is_subgroup_of(&s6));
    }
    let a5 = alternating5(&reg).unwrap();
    assert_eq!(a5.order(), 60);
    let a6 = alternating6(&reg).unwrap();
    assert!(a5.is_subgroup_of(&a6));
    assert_eq!(cyclic6(&reg).unwrap().order(), 6);
}

#[test]
fn small_matrix_groups() {
    let f = registry().field(1).unwrap();
    let s4 = construct::sym4(f.clone()).unwrap();
    assert_eq!(s4.order(), 24);
    assert_eq!(s4.classes().len(), 5);
    assert_eq!(two_generated_subgroups(&s4).unwrap().len(), 30);
    let d8 = construct::dihedral8(f.clone()).unwrap();
    assert_eq!(d8.order(), 8);
    assert_eq!(d8.classes().len(), 5);
    let q8 = construct::quaternion8(f).unwrap();
    assert_eq!(q8.order(), 8);
    assert_eq!(q8.classes().len(), 5);
    // Q8 has a unique involution, D8 has five
    let involutions = |g: &FinGroup| g.elements().iter().filter(|x| x.order(g.field()) == 2).count();
    assert_eq!(involutions(&q8), 1);
    assert_eq!(involutions(&d8), 5);
}

#[test]
fn enumeration_bound_is_enforced() {
    let reg = Registry::new(1000);
    assert!(matches!(reg.build("sp4:4"), Err(Error::OrderBoundExceeded { .. })));
    let f = reg.field(2).unwrap();
    assert!(matches!(
        construct::sl2(f, 10),
        Err(Error::OrderBoundExceeded { .. })
    ));
}

#[test]
fn group_json_lists_generators() {
    let g = registry().build("sl2:4").unwrap();
    let v = g.to_json();
    assert_eq!(v["order"], 60);
    assert_eq!(v["label"], "sl2:4");
    assert_eq!(v["generators"].as_array().unwrap().len(), 3);
    let _ = FieldElem::ONE;
}

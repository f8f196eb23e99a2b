use super::*;
use crate::exactnum::rat;
use crate::groups::{construct, FinGroup, Mat, Registry};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn table(g: &FinGroup) -> CharTable {
    let t = dixon_schneider(g).unwrap();
    t.check_orthogonality().unwrap();
    t
}

#[test]
fn trivial_group_has_one_character() {
    let reg = Registry::default();
    let g = reg.build("trivial").unwrap();
    let t = table(&g);
    assert_eq!(t.degrees(), vec![1]);
}

#[test]
fn s6_degrees_and_total() {
    let reg = Registry::default();
    let g = reg.build("s6").unwrap();
    let t = table(&g);
    assert_eq!(t.degrees_sorted(), vec![1, 1, 5, 5, 5, 5, 9, 9, 10, 10, 16]);
    assert_eq!(t.total_character().degree(), 76);
    let trivial = Character::trivial(t.classes().clone());
    let mut trivial_constituents = 0;
    for chi in t.irreducibles() {
        assert_eq!(chi.norm().unwrap(), rat(1));
        // S6 is rational
        assert!(chi.values().iter().all(|v| v.as_rational().is_some()));
        if inner_product(chi, &trivial).unwrap() == rat(1) {
            trivial_constituents += 1;
        }
    }
    assert_eq!(trivial_constituents, 1);
    let reg_char = Character::regular(t.classes().clone());
    assert_eq!(inner_product(&Character::trivial(t.classes().clone()), &reg_char).unwrap(), rat(1));
}

#[test]
fn sl2_4_values_are_in_q_sqrt5() {
    let reg = Registry::default();
    let g = reg.build("sl2:4").unwrap();
    let t = table(&g);
    assert_eq!(t.degrees_sorted(), vec![1, 3, 3, 4, 5]);
    let irrational = t
        .irreducibles()
        .iter()
        .flat_map(|c| c.values())
        .filter(|v| v.as_rational().is_none())
        .count();
    // the two degree-3 characters take (1 ± √5)/2 on the two classes of elements of order 5
    assert_eq!(irrational, 4);
}

#[test]
fn d8_and_q8_share_a_table_but_s4_differs() {
    let f = Registry::default().field(1).unwrap();
    let d8 = construct::dihedral8(f.clone()).unwrap();
    let q8 = construct::quaternion8(f.clone()).unwrap();
    let s4 = construct::sym4(f.clone()).unwrap();
    let (td, tq, ts) = (table(&d8), table(&q8), table(&s4));
    assert!(tables_equivalent(&td, &tq));
    assert!(!tables_equivalent(&td, &ts));
    // S4 from another generating set lists its classes in another order
    let gens = vec![Mat::permutation(&[1, 2, 3, 0]), Mat::permutation(&[0, 1, 3, 2])];
    let s4b = FinGroup::generate("sym4b", f, 4, gens, 24).unwrap();
    let tb = table(&s4b);
    assert_ne!(s4.classes().sizes(), s4b.classes().sizes());
    assert!(tables_equivalent(&ts, &tb));
}

#[test]
fn s4_has_the_standard_table() {
    let f = Registry::default().field(1).unwrap();
    let s4 = construct::sym4(f).unwrap();
    let t = table(&s4);
    assert_eq!(t.degrees_sorted(), vec![1, 1, 2, 3, 3]);
    // standard values by element order (1, 2, 2, 3, 4) for the 3-dimensional permutation
    // quotient: it takes 1 on transpositions, -1 on double transpositions, 0 on 3-cycles
    let cd = s4.classes();
    let sizes = cd.sizes();
    let std = t
        .irreducibles()
        .iter()
        .find(|c| {
            c.degree() == 3
                && (0..cd.len()).any(|i| sizes[i] == 6 && cd.element_orders()[i] == 2 && c.values()[i] == Cyclo::one())
        })
        .expect("standard character");
    for i in 0..cd.len() {
        let want = match (cd.element_orders()[i], sizes[i]) {
            (1, _) => 3,
            (2, 6) => 1,
            (2, 3) => -1,
            (3, _) => 0,
            (4, _) => -1,
            _ => unreachable!(),
        };
        assert_eq!(std.values()[i], Cyclo::from_int(want));
    }
}

#[test]
fn induction_and_restriction_laws() {
    let reg = Registry::default();
    let g = reg.build("sp4:2").unwrap();
    let h = reg.build("ext-sp2q2:2").unwrap();
    let tg = table(&g);
    let th = table(&h);
    let tr_h = Character::trivial(h.classes());
    let ind = induce(&tr_h, &h, &g).unwrap();
    assert_eq!(ind.degree() as u64, g.order() / h.order());
    assert_eq!(restrict(&tg.total_character(), &g, &h).unwrap().degree(), 76);
    assert_eq!(
        restrict(&Character::trivial(g.classes()), &g, &h).unwrap(),
        Character::trivial(h.classes())
    );
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..100 {
        let psi = &th.irreducibles()[rng.gen_range(0..th.len())];
        let chi = &tg.irreducibles()[rng.gen_range(0..tg.len())];
        let lhs = inner_product(&induce(psi, &h, &g).unwrap(), chi).unwrap();
        let rhs = inner_product(psi, &restrict(chi, &g, &h).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
    let other = reg.build("sl2:4").unwrap();
    assert!(matches!(
        inner_product(&tr_h, &Character::trivial(other.classes())),
        Err(Error::GroupMismatch)
    ));
    assert!(matches!(induce(&tr_h, &h, &other), Err(Error::NotSubgroup { .. })));
}

#[test]
fn index_two_split_fuse_in_s6() {
    let reg = Registry::default();
    let g = reg.build("sp4:2").unwrap();
    let a6 = crate::groups::alternating6(&reg).unwrap();
    let tg = table(&g);
    let th = table(&a6);
    assert_eq!(th.degrees_sorted(), vec![1, 5, 5, 8, 8, 9, 10]);
    let mut split_sum = 0;
    let mut fuse_sum = 0;
    for psi in th.irreducibles() {
        match split_fuse(psi, &a6, &g).unwrap() {
            SplitFuse::Split => split_sum += psi.degree(),
            SplitFuse::Fuse => fuse_sum += psi.degree(),
        }
    }
    // the two degree-8 characters fuse
    assert_eq!(fuse_sum, 16);
    assert_eq!(2 * split_sum + fuse_sum, tg.total_character().degree());
    let h = reg.build("ext-sp2q2:2").unwrap();
    assert!(split_fuse(&Character::trivial(h.classes()), &h, &g).is_err());
}

#[test]
fn exports_are_deterministic() {
    let reg = Registry::default();
    let g = reg.build("sl2:4").unwrap();
    let a = table(&g).to_json();
    let b = dixon_schneider(&g).unwrap().to_json();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    assert_eq!(a["irreducibles"].as_array().unwrap().len(), 5);
    let csv = table(&g).to_csv();
    assert!(csv.starts_with("# lossy"));
    assert_eq!(csv.lines().count(), 7);
}

use super::*;
use crate::exactnum::rat;
use crate::groups::{alternating5, alternating6, construct, cyclic6, two_generated_subgroups, Mat};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn s3(registry: &Registry) -> FinGroup {
    let gens = vec![Mat::permutation(&[1, 0, 2, 3]), Mat::permutation(&[1, 2, 0, 3])];
    FinGroup::generate("sym3", registry.field(1).unwrap(), 4, gens, 6).unwrap()
}

fn s5(registry: &Registry) -> Arc<FinGroup> {
    registry.build("ext-sp2q2:2").unwrap()
}

#[test]
fn multiplicity_freeness() {
    let reg = Registry::default();
    let g = s3(&reg);
    let cache = TableCache::new();
    let t = cache.table(&g).unwrap();
    let regular = Character::regular(g.classes());
    match is_multiplicity_free(&regular, &t).unwrap() {
        Multiplicities::Repeated { index, multiplicity } => {
            assert_eq!((t.irreducibles()[index].degree(), multiplicity), (2, 2));
        }
        Multiplicities::Free => panic!("regular character of S3 repeats its degree-2 constituent"),
    }
    for chi in t.irreducibles() {
        assert!(is_multiplicity_free(chi, &t).unwrap().is_free());
    }
    assert!(is_multiplicity_free(&t.total_character(), &t).unwrap().is_free());
    let half = Character::new(g.classes(), vec![crate::exactnum::Cyclo::from_rat(crate::exactnum::ratio(1, 2)); 3]);
    assert!(is_multiplicity_free(&half, &t).is_err());
}

#[test]
fn whole_group_is_always_a_strong_gelfand_subgroup() {
    let reg = Registry::default();
    let cache = TableCache::new();
    for label in ["sp4:2", "sl2:4", "trivial"] {
        let g = reg.build(label).unwrap();
        assert!(is_strong_gelfand_pair(&g, &g, &cache).unwrap().is_sgp());
        assert!(is_gelfand_pair(&g, &g, &cache).unwrap());
        assert!(schur_commutes(&g, &g).unwrap());
    }
}

#[test]
fn s6_pairs() {
    let reg = Registry::default();
    let cache = TableCache::new();
    let g = reg.build("sp4:2").unwrap();
    let s5 = s5(&reg);
    let a6 = alternating6(&reg).unwrap();
    for h in [&*s5, &a6] {
        let v = is_strong_gelfand_pair(&g, h, &cache).unwrap();
        assert_eq!(v.verdict, Verdict::Sgp);
        assert_eq!(v, is_strong_gelfand_pair_by_induction(&g, h, &cache).unwrap());
        assert!(schur_commutes(&g, h).unwrap());
        assert!(is_gelfand_pair(&g, h, &cache).unwrap());
    }
    let a5 = alternating5(&reg).unwrap();
    let v = is_strong_gelfand_pair(&g, &a5, &cache).unwrap();
    assert_eq!(v.verdict, Verdict::NotSgp);
    assert!(v.witness.unwrap().multiplicity >= 2);
    assert!(!schur_commutes(&g, &a5).unwrap());
}

#[test]
fn reciprocity_per_character() {
    let reg = Registry::default();
    let cache = TableCache::new();
    let g = reg.build("sp4:2").unwrap();
    let h = s5(&reg);
    let (tg, th) = (cache.table(&g).unwrap(), cache.table(&h).unwrap());
    for psi in th.irreducibles() {
        let by_induction = tg.decompose(&induce(psi, &h, &g).unwrap()).unwrap();
        let by_restriction: Vec<Rat> = tg
            .irreducibles()
            .iter()
            .map(|chi| inner_product(&restrict(chi, &g, &h).unwrap(), psi).unwrap())
            .collect();
        assert_eq!(by_induction, by_restriction);
    }
}

#[test]
fn schur_ring_matches_verdict_on_small_groups() {
    let reg = Registry::default();
    let f = reg.field(1).unwrap();
    for g in [
        construct::sym4(f.clone()).unwrap(),
        construct::dihedral8(f.clone()).unwrap(),
        construct::quaternion8(f.clone()).unwrap(),
    ] {
        let cache = TableCache::new();
        let subs = two_generated_subgroups(&g).unwrap();
        for h in &subs {
            let v = is_strong_gelfand_pair(&g, h, &cache).unwrap();
            assert_eq!(schur_commutes(&g, h).unwrap(), v.is_sgp(), "{} in {}", h.order(), g.label());
            if v.is_sgp() {
                assert!(is_gelfand_pair(&g, h, &cache).unwrap());
            } else {
                assert!(v.witness.unwrap().multiplicity >= 2);
            }
            assert_eq!(v.is_sgp(), is_strong_gelfand_pair_by_induction(&g, h, &cache).unwrap().is_sgp());
        }
    }
}

#[test]
fn shortcut() {
    assert_eq!(total_char_shortcut(&rat(316), &rat(425)).unwrap(), Shortcut::NotSgp);
    assert_eq!(total_char_shortcut(&rat(324), &rat(425)).unwrap(), Shortcut::NotSgp);
    assert_eq!(total_char_shortcut(&rat(76), &rat(16)).unwrap(), Shortcut::Inconclusive);
    assert!(total_char_shortcut(&rat(0), &rat(16)).is_err());
}

#[test]
fn shortcut_is_sound_on_s6_subgroups() {
    let reg = Registry::default();
    let cache = TableCache::new();
    let g = reg.build("sp4:2").unwrap();
    let max = rat(*cache.table(&g).unwrap().degrees().iter().max().unwrap() as i64);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..30 {
        let gens: Vec<Mat> = (0..2).map(|_| *g.element(rng.gen_range(0..720))).collect();
        let h = g.subgroup("sample", gens).unwrap();
        let tau = rat(cache.table(&h).unwrap().degrees().iter().sum::<u64>() as i64);
        if total_char_shortcut(&tau, &max).unwrap() == Shortcut::NotSgp {
            assert!(!is_strong_gelfand_pair(&g, &h, &cache).unwrap().is_sgp());
        }
    }
}

#[test]
fn s6_scan() {
    let reg = Registry::default();
    let cache = TableCache::new();
    let verdicts = scan_maximal_sp4(2, &reg, &cache).unwrap();
    assert_eq!(verdicts.len(), 7);
    assert!(verdicts.iter().all(SgpVerdict::is_sgp));
    let g = reg.build("sp4:2").unwrap();
    for h in [alternating5(&reg).unwrap(), cyclic6(&reg).unwrap()] {
        let v = decide(&g, &h, h.label(), &cache).unwrap();
        assert_eq!(v.verdict, Verdict::NotSgp);
    }
    assert!(scan_maximal_sp4(8, &reg, &cache).is_err());
}

#[test]
fn monotone_along_chains() {
    let reg = Registry::default();
    let cache = TableCache::new();
    let g = reg.build("sp4:2").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    for _ in 0..25 {
        let x = *g.element(rng.gen_range(0..720));
        let y = *g.element(rng.gen_range(0..720));
        let k = g.subgroup("k", vec![x, y]).unwrap();
        let h = k.subgroup("h", vec![x]).unwrap();
        if !is_strong_gelfand_pair(&g, &k, &cache).unwrap().is_sgp() {
            assert!(!is_strong_gelfand_pair(&g, &h, &cache).unwrap().is_sgp());
            checked += 1;
        }
    }
    assert!(checked > 0);
}

#[test]
fn errors() {
    let reg = Registry::default();
    let cache = TableCache::new();
    let g = reg.build("sl2:4").unwrap();
    let h = reg.build("sp4:2").unwrap();
    assert!(matches!(is_strong_gelfand_pair(&g, &h, &cache), Err(Error::NotSubgroup { .. })));
    let big = reg.build("sl2:32").unwrap();
    assert!(matches!(schur_commutes(&big, &big), Err(Error::ResourceBound(_))));
}

#[test]
fn verdict_json() {
    let v = SgpVerdict {
        g: "sp4:4".into(),
        h: "parabolic-p:4".into(),
        verdict: Verdict::NotSgp,
        method: Method::FullCheck,
        witness: Some(Witness { g_index: 3, h_index: 5, g_char_degree: 340, h_char_degree: 3, multiplicity: 2 }),
    };
    assert_eq!(
        serde_json::to_value(&v).unwrap(),
        serde_json::json!({
            "G": "sp4:4", "H": "parabolic-p:4", "verdict": "not_sgp", "method": "full_check",
            "witness": {"g_char_degree": 340, "h_char_degree": 3, "multiplicity": 2}
        })
    );
}

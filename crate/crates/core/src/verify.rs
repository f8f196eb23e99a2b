//! Numbered verification checks of the closed-form and computed results, grouped into three cost tiers.

use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chartab::{
    inner_product, induce, restrict, split_fuse, tables_equivalent, CharTable, SplitFuse, TableCache,
};
use crate::error::{Error, Result};
use crate::exactnum::{rat, Cyclo, Rat};
use crate::families::{
    alpha_sum, alpha_sum_counting, alpha_sum_cyclotomic, ext_split_rule, ext_total_degree, parabolic_inner_product,
    sl2_table, sp4_degree_facts, sp4_max_degree_poly, sp4_total_degree_poly, subfield_gap_poly,
    subfield_inequality_holds, suzuki_degree_spec, suzuki_total_degree, wreath_degree_spec, AlphaParams,
};
use crate::gelfand::{
    decide, is_strong_gelfand_pair, maximal_subgroups, restriction_witness, scan_maximal_sp4, schur_commutes,
    total_char_shortcut, Shortcut, Verdict,
};
use crate::groups::{alternating5, alternating6, construct, cyclic6, two_generated_subgroups, FinGroup, Registry};

/// Cost tier; each includes the ones below it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    /// Formula checks and small groups.
    Quick = 1,
    /// Tables of the order-10⁴ subgroups.
    Deep = 2,
    /// The table of `Sp4(4)` and its maximal-subgroup scan.
    Full = 3,
}

#[derive(Debug, Clone, Serialize)]
pub struct SubCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub id: u8,
    pub name: String,
    pub tier: Tier,
    pub passed: bool,
    pub checks: Vec<SubCheck>,
    pub seconds: f64,
}

impl CheckReport {
    /// `PASS`/`FAIL` line with the failing sub-checks appended.
    pub fn summary_line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let mut line = format!("{status} [{}] {} ({:.1}s)", self.id, self.name, self.seconds);
        for c in self.checks.iter().filter(|c| !c.passed) {
            line.push_str(&format!("; failed: {} ({})", c.name, c.detail));
        }
        line
    }
}

/// Id, name and tier of every criterion.
pub const CRITERIA: [(u8, &str, Tier); 10] = [
    (1, "SL2(q) table from closed formulas", Tier::Quick),
    (2, "Sp2(4) wr 2 total degree and degree list", Tier::Deep),
    (3, "Sp2(16):2 splitting and total degree", Tier::Deep),
    (4, "alpha sums and parabolic inner product", Tier::Quick),
    (5, "Sz(8) degrees and total degree", Tier::Deep),
    (6, "maximal subgroups of S6 are strong Gelfand", Tier::Quick),
    (7, "no maximal subgroup of Sp4(4) is strong Gelfand", Tier::Full),
    (8, "subfield subgroup degree inequality", Tier::Quick),
    (9, "Schur ring commutativity equals the strong Gelfand property", Tier::Quick),
    (10, "orthogonality, reciprocity and monotonicity", Tier::Quick),
];

/// Shared state across criteria: groups and tables computed once are reused.
pub struct Verifier {
    registry: Registry,
    cache: TableCache,
    seed: u64,
}

struct Collector {
    checks: Vec<SubCheck>,
}

impl Collector {
    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(SubCheck { name: name.into(), passed, detail: detail.into() });
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, name: impl Into<String>, got: T, want: T) {
        let passed = got == want;
        let detail = if passed { format!("{got:?}") } else { format!("got {got:?}, expected {want:?}") };
        self.check(name, passed, detail);
    }

    /// Exact rationals, reported in `a/b` notation.
    fn eq_rat(&mut self, name: impl Into<String>, got: Rat, want: Rat) {
        self.eq(name, Show(got), Show(want));
    }

    fn error(&mut self, name: impl Into<String>, e: &Error) {
        self.check(name, false, format!("error: {e}"));
    }
}

#[derive(PartialEq)]
struct Show(Rat);

impl std::fmt::Debug for Show {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn seeded(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

impl Verifier {
    pub fn new(registry: Registry, seed: u64) -> Self {
        Verifier { registry, cache: TableCache::new(), seed }
    }

    pub fn registry(&self) -> &Registry {
        &self.registry
    }

    fn table(&self, g: &FinGroup) -> Result<Arc<CharTable>> {
        self.cache.table(g)
    }

    fn build(&self, label: &str) -> Result<Arc<FinGroup>> {
        self.registry.build(label)
    }

    /// Runs every criterion of tier at most `tier`, in order.
    pub fn run(&self, tier: Tier) -> Vec<CheckReport> {
        CRITERIA
            .iter()
            .filter(|(_, _, t)| *t <= tier)
            .map(|&(id, _, _)| self.run_one(id))
            .collect()
    }

    pub fn run_one(&self, id: u8) -> CheckReport {
        let (_, name, tier) = CRITERIA[id as usize - 1];
        let start = Instant::now();
        let mut c = Collector { checks: Vec::new() };
        let outcome = match id {
            1 => self.sl2_tables(&mut c),
            2 => self.wreath(&mut c),
            3 => self.ext(&mut c),
            4 => self.alpha(&mut c),
            5 => self.suzuki(&mut c),
            6 => self.s6_scan(&mut c),
            7 => self.sp4_4_scan(&mut c),
            8 => self.subfield(&mut c),
            9 => self.schur(&mut c),
            10 => self.properties(&mut c),
            _ => Err(Error::InvalidArgument(format!("no criterion {id}"))),
        };
        if let Err(e) = outcome {
            c.error("computation", &e);
        }
        let passed = !c.checks.is_empty() && c.checks.iter().all(|s| s.passed);
        CheckReport {
            id,
            name: name.to_string(),
            tier,
            passed,
            checks: c.checks,
            seconds: start.elapsed().as_secs_f64(),
        }
    }

    fn sl2_tables(&self, c: &mut Collector) -> Result<()> {
        for q in [4u64, 8, 16] {
            let formula = sl2_table(q, &self.registry)?;
            let g = self.build(&format!("sl2:{q}"))?;
            let computed = self.table(&g)?;
            c.check(
                format!("q = {q}: closed-form table is orthogonal"),
                formula.check_orthogonality().is_ok(),
                format!("{} characters", formula.len()),
            );
            c.check(
                format!("q = {q}: closed-form table equals the computed table"),
                tables_equivalent(&formula, &computed),
                "up to row and column permutation",
            );
        }
        Ok(())
    }

    fn wreath(&self, c: &mut Collector) -> Result<()> {
        let g = self.build("wreath-sp2:4")?;
        let t = self.table(&g)?;
        let total = t.total_character().degree();
        c.eq("total character degree", total, 316);
        c.eq(
            "degree multiset matches the wreath degree list",
            t.degrees_sorted(),
            wreath_degree_spec(4)?.degree_multiset(4)?,
        );
        let max = sp4_degree_facts(4)?.max.expect("q = 4 has a largest-degree formula");
        c.eq(
            "316 < 425 gives not_sgp by the total-character shortcut",
            total_char_shortcut(&rat(total), &max)?,
            Shortcut::NotSgp,
        );
        Ok(())
    }

    fn ext(&self, c: &mut Collector) -> Result<()> {
        let g = self.build("ext-sp2q2:4")?;
        let gens = construct::ext_sp2q2_generators(&self.registry.field(2)?, &self.registry.field(4)?, false)?;
        let a = gens[2];
        let h = Arc::new(g.subgroup("sl2:16<ext-sp2q2:4", gens)?);
        let (tg, th) = (self.table(&g)?, self.table(&h)?);
        let a_class = h.classes().class_of()[h.index_of(&a).expect("generator") as usize] as usize;
        let (mut split_sum, mut fuse_sum) = (0i64, 0i64);
        let (mut tr_psi_split, mut theta_fused) = (0, 0);
        let mut chi_split = Vec::new();
        let mut rule_agrees = true;
        for chi in th.irreducibles() {
            let sf = split_fuse(chi, &h, &g)?;
            match sf {
                SplitFuse::Split => split_sum += chi.degree(),
                SplitFuse::Fuse => fuse_sum += chi.degree(),
            }
            match chi.degree() {
                1 | 16 if sf == SplitFuse::Split => tr_psi_split += 1,
                15 if sf == SplitFuse::Fuse => theta_fused += 1,
                17 => {
                    let s = (1..=7i64)
                        .find(|&s| {
                            chi.values()[a_class] == Cyclo::root_of_unity(15, s) + Cyclo::root_of_unity(15, -s)
                        })
                        .ok_or_else(|| Error::CrossCheck("degree-17 character is not of the form χ_s".into()))?;
                    rule_agrees &= ext_split_rule(4, s as u64)? == sf;
                    if sf == SplitFuse::Split {
                        chi_split.push(s);
                    }
                }
                _ => {}
            }
        }
        chi_split.sort_unstable();
        c.eq("Tr and ψ split", tr_psi_split, 2);
        c.eq("all θ_j fuse", theta_fused, 8);
        c.eq("χ_s splits exactly for s in", chi_split, vec![3, 5, 6]);
        c.check("split rule agrees with induction for every s", rule_agrees, "s = 1..7");
        let total = tg.total_character().degree();
        c.eq("total character degree", total, 324);
        c.eq_rat("closed form q⁴+q³+q", ext_total_degree(4)?, rat(324));
        c.eq("split and fused sums (68, 188)", (split_sum, fuse_sum), (68, 188));
        c.eq("2·68 + 188", 2 * split_sum + fuse_sum, total);
        Ok(())
    }

    fn alpha(&self, c: &mut Collector) -> Result<()> {
        for q in [8u64, 16, 32] {
            let p = AlphaParams::new(q, q - 4, 1, 2)?;
            c.eq_rat(format!("q = {q}: α-sum at (q−4, 1, 2)"), alpha_sum(&p)?, rat(q as i64 - 5));
            c.eq_rat(format!("q = {q}: inner product"), parabolic_inner_product(q, q - 4, 1, 2)?, rat(2));
        }
        let all = AlphaParams::all(8)?;
        let disagree = all.iter().filter(|p| alpha_sum(p).is_err()).count();
        c.check("q = 8: both routes agree on all triples", disagree == 0, format!("{} triples, {disagree} disagreements", all.len()));
        for (stream, q) in [(1u64, 16u64), (2, 32)] {
            let mut rng = seeded(self.seed, stream);
            let mut disagree = 0;
            let mut n = 0;
            while n < 10_000 {
                let pick = |rng: &mut ChaCha8Rng| rng.gen_range(1..=q - 2);
                let (k, m, l) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
                let Ok(p) = AlphaParams::new(q, k, m, l) else { continue };
                n += 1;
                if alpha_sum_cyclotomic(&p)? != alpha_sum_counting(&p) {
                    disagree += 1;
                }
            }
            c.check(
                format!("q = {q}: both routes agree on random triples"),
                disagree == 0,
                format!("{n} triples, {disagree} disagreements"),
            );
        }
        Ok(())
    }

    fn suzuki(&self, c: &mut Collector) -> Result<()> {
        let g = self.build("sz:8")?;
        let t = self.table(&g)?;
        c.eq("degree multiset", t.degrees_sorted(), vec![1, 14, 14, 35, 35, 35, 64, 65, 65, 65, 91]);
        c.eq("degree list with r = 2^(n+1)", t.degrees_sorted(), suzuki_degree_spec(8)?.degree_multiset(8)?);
        let total = t.total_character().degree();
        c.eq("total character degree", total, 484);
        c.eq_rat("2^(n+1)(q−1) − q(q−1) + q³", suzuki_total_degree(8)?, rat(total));
        Ok(())
    }

    fn s6_scan(&self, c: &mut Collector) -> Result<()> {
        let verdicts = scan_maximal_sp4(2, &self.registry, &self.cache)?;
        for v in &verdicts {
            c.eq(format!("{} is sgp", v.h), v.verdict, Verdict::Sgp);
        }
        let (g, _) = maximal_subgroups(2, &self.registry)?;
        for h in [alternating5(&self.registry)?, cyclic6(&self.registry)?] {
            let v = is_strong_gelfand_pair(&g, &h, &self.cache)?;
            let detail = v
                .witness
                .map(|w| format!("⟨χ↓H, ψ⟩ = {} for deg χ = {}, deg ψ = {}", w.multiplicity, w.g_char_degree, w.h_char_degree))
                .unwrap_or_default();
            c.check(format!("{} is not_sgp", h.label()), v.verdict == Verdict::NotSgp, detail);
        }
        Ok(())
    }

    fn sp4_4_scan(&self, c: &mut Collector) -> Result<()> {
        let (g, subs) = maximal_subgroups(4, &self.registry)?;
        let tg = self.table(&g)?;
        let facts = sp4_degree_facts(4)?;
        c.eq_rat("total character degree", rat(tg.total_character().degree()), facts.total.clone());
        let observed_max = *tg.degrees().iter().max().unwrap_or(&0);
        let formula_max = facts.max.clone().expect("q = 4");
        c.check(
            "largest degree equals q⁴+2q³+2q²+2q+1",
            rat(observed_max as i64) == formula_max,
            format!("largest computed degree {observed_max}, formula {formula_max}"),
        );
        for (h, label) in &subs {
            self.table(h)?;
            let v = decide(&g, h, label, &self.cache)?;
            c.check(format!("{label} is not_sgp"), v.verdict == Verdict::NotSgp, format!("{:?}", v.method));
            if label.starts_with("parabolic") {
                let th = self.table(h)?;
                let w = restriction_witness(&g, &tg, h, &th)?;
                let detail = match &w {
                    Some(w) => format!(
                        "⟨χ↓H, ψ⟩ = {} for deg χ = {}, deg ψ = {}",
                        w.multiplicity, w.g_char_degree, w.h_char_degree
                    ),
                    None => "no repeated constituent".into(),
                };
                c.check(format!("{label}: explicit witness"), w.is_some_and(|w| w.multiplicity >= 2), detail);
            }
        }
        Ok(())
    }

    fn subfield(&self, c: &mut Collector) -> Result<()> {
        for r in [2u32, 3] {
            c.check(
                format!("T(q₀) < F(q₀^{r}) for all q₀ ≥ 2"),
                subfield_inequality_holds(r),
                format!("gap {}", subfield_gap_poly(r)),
            );
            for q0 in [2i64, 4] {
                let (t, f) = (sp4_total_degree_poly().eval_int(q0), sp4_max_degree_poly().eval_int(q0.pow(r)));
                c.check(format!("q₀ = {q0}, q = {}", q0.pow(r)), t < f, format!("{t} < {f}"));
            }
        }
        let s6 = self.build("sp4:2")?;
        let tau = self.table(&s6)?.total_character().degree();
        let max = sp4_degree_facts(4)?.max.expect("q = 4");
        c.check("τ_S6(1) < 425", rat(tau) < max, format!("{tau} < {max}"));
        Ok(())
    }

    fn schur(&self, c: &mut Collector) -> Result<()> {
        let s4 = construct::sym4(self.registry.field(1)?)?;
        let subs = two_generated_subgroups(&s4)?;
        let mut mismatches = 0;
        for h in &subs {
            if schur_commutes(&s4, h)? != is_strong_gelfand_pair(&s4, h, &self.cache)?.is_sgp() {
                mismatches += 1;
            }
        }
        c.check(
            "every subgroup of S4",
            mismatches == 0 && subs.len() == 30,
            format!("{} subgroups, {mismatches} mismatches", subs.len()),
        );
        let g = self.build("sp4:2")?;
        let s5 = self.build("ext-sp2q2:2")?;
        let a6 = alternating6(&self.registry)?;
        for (h, name) in [(&*s5, "(S6, S5)"), (&a6, "(S6, A6)")] {
            let schur = schur_commutes(&g, h)?;
            let sgp = is_strong_gelfand_pair(&g, h, &self.cache)?.is_sgp();
            c.check(name, schur == sgp && sgp, format!("schur {schur}, sgp {sgp}"));
        }
        Ok(())
    }

    fn properties(&self, c: &mut Collector) -> Result<()> {
        let g = self.build("sp4:2")?;
        let h = self.build("ext-sp2q2:2")?;
        let (tg, th) = (self.table(&g)?, self.table(&h)?);

        let mut rng = seeded(self.seed, 3);
        let mut bad = 0;
        for _ in 0..100 {
            let psi = &th.irreducibles()[rng.gen_range(0..th.len())];
            let chi = &tg.irreducibles()[rng.gen_range(0..tg.len())];
            let lhs = inner_product(&induce(psi, &h, &g)?, chi)?;
            let rhs = inner_product(psi, &restrict(chi, &g, &h)?)?;
            bad += usize::from(lhs != rhs);
        }
        c.check("Frobenius reciprocity on 100 random pairs for (S6, S5)", bad == 0, format!("{bad} failures"));

        let mut rng = seeded(self.seed, 4);
        let (mut chains, mut violations) = (0, 0);
        for _ in 0..40 {
            let x = *g.element(rng.gen_range(0..g.order() as u32));
            let y = *g.element(rng.gen_range(0..g.order() as u32));
            let k = g.subgroup("chain-k", vec![x, y])?;
            let sub = k.subgroup("chain-h", vec![x])?;
            if !is_strong_gelfand_pair(&g, &k, &self.cache)?.is_sgp() {
                chains += 1;
                violations += usize::from(is_strong_gelfand_pair(&g, &sub, &self.cache)?.is_sgp());
            }
        }
        c.check(
            "monotonicity on sampled chains H ≤ K ≤ S6",
            violations == 0 && chains > 0,
            format!("{chains} chains with (S6, K) not sgp, {violations} violations"),
        );

        // every table computed so far in this run
        let tables = self.cache.tables();
        let failures: Vec<String> = tables
            .iter()
            .filter_map(|t| t.check_orthogonality().err().map(|e| format!("{}: {e}", t.label())))
            .collect();
        c.check(
            "orthogonality and Σd² = |G| on every computed table",
            failures.is_empty(),
            if failures.is_empty() { format!("{} tables", tables.len()) } else { failures.join("; ") },
        );
        Ok(())
    }
}

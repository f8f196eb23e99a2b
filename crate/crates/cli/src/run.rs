//! Command execution. Reports go to the supplied writer; the returned status carries the exit
//! code and the error that caused it, if any.

use std::collections::BTreeMap;
use std::io::Write;

use serde::Serialize;
use serde_json::{json, Value};
use sgp_core::chartab::{CharTable, TableCache};
use sgp_core::exactnum::Rat;
use sgp_core::families::{
    alpha_sum_counting, alpha_sum_cyclotomic, ext_degree_spec, parabolic_inner_product, sl2_table, sp4_degree_facts,
    suzuki_degree_spec, wreath_degree_spec, AlphaParams, DegreeSpec,
};
use sgp_core::gelfand::{decide, scan_maximal_sp4, SgpVerdict};
use sgp_core::gfield::FieldCtx;
use sgp_core::groups::{GroupSpec, Registry};
use sgp_core::verify::{Tier, Verifier, CRITERIA};
use sgp_core::Error;

use crate::command::{Action, Command, Family, Format};

pub const EXIT_OK: u8 = 0;
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_RESOURCE: u8 = 3;
pub const EXIT_CROSS_CHECK: u8 = 4;

#[derive(Debug)]
pub struct ExitStatus {
    pub code: u8,
    pub error: Option<Error>,
}

impl ExitStatus {
    fn ok() -> Self {
        ExitStatus { code: EXIT_OK, error: None }
    }
}

/// Usage errors 2, refused work 3, internal disagreements 4.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidArgument(_) | Error::Parse { .. } | Error::UnknownGroup(_) | Error::NotSubgroup { .. } => {
            EXIT_USAGE
        }
        Error::OrderBoundExceeded { .. } | Error::ResourceBound(_) => EXIT_RESOURCE,
        Error::CrossCheck(_) | Error::NotACharacter(_) | Error::ZeroInverse | Error::GroupMismatch => {
            EXIT_CROSS_CHECK
        }
    }
}

enum Failure {
    Core(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = std::result::Result<u8, Failure>;

/// Executes `cmd`, writing its report to `out`.
pub fn run(cmd: &Command, out: &mut dyn Write) -> ExitStatus {
    let mut runner = Runner { cmd, registry: Registry::new(cmd.options.max_order), cache: TableCache::new(), out };
    match runner.dispatch() {
        Ok(code) => ExitStatus { code, error: None },
        Err(Failure::Core(e)) => ExitStatus { code: exit_code(&e), error: Some(e) },
        Err(Failure::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitStatus::ok(),
        Err(Failure::Io(e)) => ExitStatus {
            code: EXIT_CHECK_FAILED,
            error: Some(Error::ResourceBound(format!("writing output: {e}"))),
        },
    }
}

struct Runner<'a> {
    cmd: &'a Command,
    registry: Registry,
    cache: TableCache,
    out: &'a mut dyn Write,
}

fn tag<T: Serialize>(t: &T) -> String {
    match serde_json::to_value(t) {
        Ok(Value::String(s)) => s,
        Ok(other) => other.to_string(),
        Err(_) => String::new(),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// `x^4 + x + 1` from the coefficient bits of a polynomial over `GF(2)`.
fn poly_string(bits: u32) -> String {
    if bits == 0 {
        return "0".into();
    }
    let terms: Vec<String> = (0..32)
        .rev()
        .filter(|i| bits >> i & 1 == 1)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        })
        .collect();
    terms.join(" + ")
}

const POWERS_LISTED_UP_TO: u32 = 256;

fn field_json(ctx: &FieldCtx) -> Value {
    let mut v = json!({
        "q": ctx.q(),
        "e": ctx.e(),
        "modulus": poly_string(ctx.modulus()),
        "primitive_element": "x",
    });
    if ctx.q() <= POWERS_LISTED_UP_TO {
        let powers: Vec<String> = (0..ctx.q() - 1).map(|k| poly_string(ctx.to_poly(ctx.gamma_pow(k as i64)))).collect();
        v["powers"] = json!(powers);
    }
    v
}

fn field_lines(ctx: &FieldCtx) -> Vec<String> {
    let mut lines = vec![format!(
        "GF({}) = GF(2)[x] / ({}), e = {}, primitive element γ = x",
        ctx.q(),
        poly_string(ctx.modulus()),
        ctx.e()
    )];
    if ctx.q() <= POWERS_LISTED_UP_TO {
        for k in 0..ctx.q() - 1 {
            lines.push(format!("  γ^{k} = {}", poly_string(ctx.to_poly(ctx.gamma_pow(k as i64)))));
        }
    }
    lines
}

/// ATLAS-style class names: element order followed by a letter.
fn class_names(t: &CharTable) -> Vec<String> {
    let mut seen: BTreeMap<u32, u32> = BTreeMap::new();
    t.classes()
        .element_orders()
        .iter()
        .map(|&o| {
            let n = seen.entry(o).or_default();
            let name = format!("{o}{}", letter(*n));
            *n += 1;
            name
        })
        .collect()
}

fn letter(mut n: u32) -> String {
    let mut s = String::new();
    loop {
        s.insert(0, char::from(b'a' + (n % 26) as u8));
        if n < 26 {
            return s;
        }
        n = n / 26 - 1;
    }
}

fn pretty_table(t: &CharTable) -> Vec<String> {
    let cd = t.classes();
    let mut rows: Vec<Vec<String>> = Vec::new();
    let mut head = vec!["class".to_string()];
    head.extend(class_names(t));
    rows.push(head);
    let mut sizes = vec!["size".to_string()];
    sizes.extend(cd.sizes().iter().map(u64::to_string));
    rows.push(sizes);
    for (i, chi) in t.irreducibles().iter().enumerate() {
        let mut r = vec![format!("χ{i}")];
        r.extend(chi.values().iter().map(|v| v.to_string()));
        rows.push(r);
    }
    let cols = rows[0].len();
    let widths: Vec<usize> = (0..cols).map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0)).collect();
    rows.iter()
        .map(|r| {
            r.iter()
                .zip(&widths)
                .enumerate()
                .map(|(c, (s, &w))| if c == 0 { format!("{s:<w$}") } else { format!("{s:>w$}") })
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        })
        .collect()
}

fn verdict_line(v: &SgpVerdict) -> String {
    let mut line = format!("{} in {}: {} ({})", v.h, v.g, tag(&v.verdict), tag(&v.method));
    if let Some(w) = &v.witness {
        line.push_str(&format!(
            "; witness ⟨χ↓H, ψ⟩ = {} with χ(1) = {}, ψ(1) = {}",
            w.multiplicity, w.g_char_degree, w.h_char_degree
        ));
    }
    line
}

const VERDICT_CSV_HEADER: &str = "G,H,verdict,method,g_char_degree,h_char_degree,multiplicity";

fn verdict_csv(v: &SgpVerdict) -> String {
    let (a, b, m) = v.witness.map_or((String::new(), String::new(), String::new()), |w| {
        (w.g_char_degree.to_string(), w.h_char_degree.to_string(), w.multiplicity.to_string())
    });
    [csv_field(&v.g), csv_field(&v.h), tag(&v.verdict), tag(&v.method), a, b, m].join(",")
}

fn family_spec(family: Family, q: u64) -> sgp_core::Result<Option<DegreeSpec>> {
    Ok(match family {
        Family::Wreath => Some(wreath_degree_spec(q)?),
        Family::Ext => Some(ext_degree_spec(q)?),
        Family::Sz => Some(suzuki_degree_spec(q)?),
        Family::Sp4 => None,
    })
}

impl Runner<'_> {
    fn format(&self) -> Format {
        self.cmd.options.format
    }

    fn line(&mut self, s: impl AsRef<str>) -> std::io::Result<()> {
        writeln!(self.out, "{}", s.as_ref())
    }

    fn json(&mut self, v: &Value) -> std::io::Result<()> {
        let text = serde_json::to_string_pretty(v).map_err(std::io::Error::other)?;
        self.line(text)
    }

    fn dispatch(&mut self) -> Outcome {
        match &self.cmd.action {
            Action::Chartab(spec) => self.chartab(spec),
            Action::Sgp(g, h) => self.sgp(g, h),
            Action::ScanMaximal(q) => self.scan(*q),
            Action::AlphaSum(p) => self.alpha(p),
            Action::Families(f, q) => self.families(*f, *q),
            Action::VerifyPaper(tier) => self.verify(*tier),
            Action::ShowField(q) => self.show_field(*q),
        }
    }

    fn chartab(&mut self, spec: &GroupSpec) -> Outcome {
        let table = match *spec {
            GroupSpec::Sl2 { q } if q >= 4 => sl2_table(q, &self.registry)?,
            _ => {
                let g = self.registry.group(spec)?;
                (*self.cache.table(&g)?).clone()
            }
        };
        table.check_orthogonality()?;
        let field = self.registry.group(spec)?.field().clone();
        match self.format() {
            Format::Json => {
                let mut v = table.to_json();
                if self.cmd.options.show_field {
                    v["field"] = field_json(&field);
                }
                self.json(&v)?;
            }
            Format::Csv => {
                if self.cmd.options.show_field {
                    for l in field_lines(&field) {
                        self.line(format!("# {l}"))?;
                    }
                }
                write!(self.out, "{}", table.to_csv())?;
            }
            Format::Pretty => {
                self.line(format!(
                    "{}: order {}, {} classes",
                    spec,
                    table.classes().group_order(),
                    table.len()
                ))?;
                if self.cmd.options.show_field {
                    for l in field_lines(&field) {
                        self.line(l)?;
                    }
                }
                for l in pretty_table(&table) {
                    self.line(l)?;
                }
            }
        }
        Ok(EXIT_OK)
    }

    fn sgp(&mut self, g: &GroupSpec, h: &GroupSpec) -> Outcome {
        let (gg, hh) = (self.registry.group(g)?, self.registry.group(h)?);
        let v = decide(&gg, &hh, &h.to_string(), &self.cache)?;
        self.verdicts(&[v])?;
        Ok(EXIT_OK)
    }

    fn scan(&mut self, q: u64) -> Outcome {
        let verdicts = scan_maximal_sp4(q, &self.registry, &self.cache)?;
        self.verdicts(&verdicts)?;
        Ok(EXIT_OK)
    }

    fn verdicts(&mut self, vs: &[SgpVerdict]) -> std::io::Result<()> {
        match self.format() {
            Format::Json if vs.len() == 1 => self.json(&json!(vs[0])),
            Format::Json => self.json(&json!(vs)),
            Format::Csv => {
                self.line(VERDICT_CSV_HEADER)?;
                vs.iter().try_for_each(|v| self.line(verdict_csv(v)))
            }
            Format::Pretty => vs.iter().try_for_each(|v| self.line(verdict_line(v))),
        }
    }

    fn alpha(&mut self, p: &AlphaParams) -> Outcome {
        let cyclotomic = alpha_sum_cyclotomic(p)?;
        let counting = alpha_sum_counting(p);
        if cyclotomic != counting {
            return Err(Error::CrossCheck(format!(
                "alpha sum routes disagree for {p:?}: cyclotomic {cyclotomic}, counting {counting}"
            ))
            .into());
        }
        let q = p.q();
        let inner = parabolic_inner_product(q, p.k(), p.m(), p.n())?;
        match self.format() {
            Format::Json => self.json(&json!({
                "q": q, "k": p.k(), "m": p.m(), "n": p.n(),
                "cyclotomic": cyclotomic.to_string(),
                "counting": counting.to_string(),
                "inner_product": inner.to_string(),
            }))?,
            Format::Csv => {
                self.line("q,k,m,n,cyclotomic,counting,inner_product")?;
                self.line(format!("{q},{},{},{},{cyclotomic},{counting},{inner}", p.k(), p.m(), p.n()))?;
            }
            Format::Pretty => {
                self.line(format!("cyclotomic route: {cyclotomic}"))?;
                self.line(format!("counting route: {counting}"))?;
                let note = if cyclotomic == Rat::from_integer((q as i64 - 5).into()) { " (= q−5)" } else { "" };
                self.line(format!("{cyclotomic}{note}; inner product = {inner}"))?;
            }
        }
        Ok(EXIT_OK)
    }

    fn families(&mut self, family: Family, q: u64) -> Outcome {
        let name = tag_family(family);
        let Some(spec) = family_spec(family, q)? else {
            let facts = sp4_degree_facts(q)?;
            match self.format() {
                Format::Json => self.json(&json!({"family": name, "q": q, "facts": facts}))?,
                Format::Csv => {
                    self.line("family,q,total_degree,max_degree")?;
                    let max = facts.max.as_ref().map(Rat::to_string).unwrap_or_default();
                    self.line(format!("{name},{q},{},{max}", facts.total))?;
                }
                Format::Pretty => {
                    self.line(format!("{name} at q = {q}"))?;
                    self.line(format!("total degree = {}", facts.total))?;
                    if let Some(m) = &facts.max {
                        self.line(format!("largest degree (closed formula) = {m}"))?;
                    }
                }
            }
            return Ok(EXIT_OK);
        };
        let rows = spec.evaluate(q)?;
        let total = spec.total_degree(q)?;
        let order = spec.order_poly().eval_int(q as i64);
        let square_sum: u128 = rows.iter().map(|r| r.multiplicity as u128 * (r.degree as u128).pow(2)).sum();
        if Rat::from_integer((square_sum as i64).into()) != order {
            return Err(Error::CrossCheck(format!("Σ m·d² = {square_sum} but |G| = {order}")).into());
        }
        match self.format() {
            Format::Json => self.json(&json!({
                "family": name,
                "q": q,
                "spec": spec,
                "evaluated": rows,
                "total_degree": total.to_string(),
                "order": order.to_string(),
            }))?,
            Format::Csv => {
                self.line("label,degree_poly,multiplicity_poly,degree,multiplicity")?;
                for (e, r) in spec.entries().iter().zip(&rows) {
                    self.line(format!(
                        "{},{},{},{},{}",
                        csv_field(&e.label),
                        csv_field(&e.degree.to_string()),
                        csv_field(&e.multiplicity.to_string()),
                        r.degree,
                        r.multiplicity
                    ))?;
                }
            }
            Format::Pretty => {
                self.line(format!("{name} at q = {q}, |G| = {order}"))?;
                let w = spec.entries().iter().map(|e| e.label.chars().count()).max().unwrap_or(0);
                let wd = spec.entries().iter().map(|e| e.degree.to_string().chars().count()).max().unwrap_or(0);
                for (e, r) in spec.entries().iter().zip(&rows) {
                    self.line(format!(
                        "  {:<w$}  {:<wd$}  → {} × {}   [{}]",
                        e.label,
                        e.degree.to_string(),
                        r.degree,
                        r.multiplicity,
                        e.multiplicity
                    ))?;
                }
                self.line(format!("total degree = {total}"))?;
            }
        }
        Ok(EXIT_OK)
    }

    fn verify(&mut self, tier: Tier) -> Outcome {
        let verifier = Verifier::new(Registry::new(self.cmd.options.max_order), self.cmd.options.seed);
        if self.format() == Format::Csv {
            self.line("id,name,tier,passed,seconds,failed_checks")?;
        }
        let mut failed = 0;
        let mut ran = 0;
        for &(id, _, t) in CRITERIA.iter().filter(|(_, _, t)| *t <= tier) {
            let r = verifier.run_one(id);
            ran += 1;
            failed += usize::from(!r.passed);
            match self.format() {
                Format::Json => {
                    let text = serde_json::to_string(&r).map_err(std::io::Error::other)?;
                    self.line(text)?;
                }
                Format::Csv => {
                    let bad: Vec<&str> = r.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
                    self.line(format!(
                        "{id},{},{},{},{:.3},{}",
                        csv_field(&r.name),
                        tag(&t),
                        r.passed,
                        r.seconds,
                        csv_field(&bad.join("; "))
                    ))?;
                }
                Format::Pretty => self.line(r.summary_line())?,
            }
            self.out.flush()?;
        }
        if self.format() == Format::Pretty {
            self.line(format!("{}/{ran} criteria passed (tier {})", ran - failed, tag(&tier)))?;
        }
        Ok(if failed == 0 { EXIT_OK } else { EXIT_CHECK_FAILED })
    }

    fn show_field(&mut self, q: u64) -> Outcome {
        let ctx = self.registry.field(q.trailing_zeros())?;
        match self.format() {
            Format::Json => self.json(&field_json(&ctx))?,
            Format::Csv => {
                self.line("k,gamma_power")?;
                for k in 0..ctx.q() - 1 {
                    self.line(format!("{k},{}", poly_string(ctx.to_poly(ctx.gamma_pow(k as i64)))))?;
                }
            }
            Format::Pretty => {
                for l in field_lines(&ctx) {
                    self.line(l)?;
                }
            }
        }
        Ok(EXIT_OK)
    }
}

fn tag_family(f: Family) -> &'static str {
    match f {
        Family::Wreath => "wreath",
        Family::Ext => "ext",
        Family::Sz => "sz",
        Family::Sp4 => "sp4",
    }
}

//! The `verb arg*` grammar. Argument vectors go through clap; every rejection is mapped back to a
//! character offset in the space-joined command line.

use clap::error::{ContextKind, ContextValue, ErrorKind};
use clap::{Parser, Subcommand, ValueEnum};
use sgp_core::families::{ext_degree_spec, sp4_degree_facts, suzuki_degree_spec, wreath_degree_spec, AlphaParams};
use sgp_core::groups::{GroupSpec, DEFAULT_MAX_ORDER};
use sgp_core::verify::Tier;
use sgp_core::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Wreath,
    Ext,
    Sz,
    Sp4,
}

#[derive(Debug, Parser)]
#[command(name = "sgp-lab", version, about = "Character tables and strong Gelfand pairs of even-characteristic groups")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Pretty, global = true)]
    format: Format,
    /// Refuse to enumerate any group larger than this.
    #[arg(long, default_value_t = DEFAULT_MAX_ORDER, global = true)]
    max_order: u64,
    /// verify-paper: include the tier-2 checks.
    #[arg(long, global = true)]
    deep: bool,
    /// verify-paper: include every check.
    #[arg(long, global = true)]
    full: bool,
    /// Also print the finite field the matrices are written over.
    #[arg(long, global = true)]
    show_field: bool,
    /// Seed for sampled checks.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Debug, Subcommand)]
enum Verb {
    /// Compute and print a character table.
    Chartab { group: String },
    /// Decide whether (G, H) is a strong Gelfand pair.
    Sgp { g: String, h: String },
    /// Decide every maximal subgroup of Sp4(q), q in {2, 4}.
    ScanMaximal { q: u64 },
    /// Evaluate an alpha-sum by both routes, with the parabolic inner product.
    AlphaSum { q: u64, k: u64, m: u64, n: u64 },
    /// Evaluate the closed-form degree list of a family.
    Families {
        #[arg(value_enum)]
        family: Family,
        q: u64,
    },
    /// Run the reproduction checks.
    VerifyPaper,
    /// Describe GF(q).
    ShowField { q: u64 },
}

/// A validated command; nothing has been enumerated yet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Command {
    pub action: Action,
    pub options: Options,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Action {
    Chartab(GroupSpec),
    Sgp(GroupSpec, GroupSpec),
    ScanMaximal(u64),
    AlphaSum(AlphaParams),
    Families(Family, u64),
    VerifyPaper(Tier),
    ShowField(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub format: Format,
    pub max_order: u64,
    pub show_field: bool,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    /// `--help` or `--version`: print and exit successfully.
    #[error("{0}")]
    Display(String),
    /// `position` is a character offset into the space-joined arguments.
    #[error("at position {position}: {message}")]
    Invalid { position: usize, message: String },
}

impl ParseError {
    pub fn position(&self) -> Option<usize> {
        match self {
            ParseError::Invalid { position, .. } => Some(*position),
            ParseError::Display(_) => None,
        }
    }
}

struct Tokens<'a> {
    words: Vec<&'a str>,
    offsets: Vec<usize>,
    len: usize,
}

impl<'a> Tokens<'a> {
    fn new(words: Vec<&'a str>) -> Self {
        let mut offsets = Vec::with_capacity(words.len());
        let mut at = 0;
        for w in &words {
            offsets.push(at);
            at += w.chars().count() + 1;
        }
        Tokens { words, offsets, len: at.saturating_sub(1) }
    }

    /// Offset of the first token equal to `value` (or carrying it as `--flag=value`).
    fn find(&self, value: &str) -> Option<usize> {
        self.words.iter().position(|w| *w == value).map(|i| self.offsets[i]).or_else(|| {
            self.words.iter().enumerate().find_map(|(i, w)| {
                let (_, v) = w.split_once('=')?;
                (v == value).then(|| self.offsets[i] + w.chars().count() - v.chars().count())
            })
        })
    }

    fn invalid(&self, position: usize, message: impl Into<String>) -> ParseError {
        ParseError::Invalid { position, message: message.into() }
    }
}

fn context_string(err: &clap::Error, kind: ContextKind) -> Option<String> {
    match err.get(kind)? {
        ContextValue::String(s) => Some(s.clone()),
        ContextValue::Strings(v) => v.first().cloned(),
        _ => None,
    }
}

fn from_clap(err: clap::Error, tokens: &Tokens) -> ParseError {
    match err.kind() {
        ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
            return ParseError::Display(err.render().to_string());
        }
        _ => {}
    }
    let position = match err.kind() {
        ErrorKind::MissingRequiredArgument | ErrorKind::MissingSubcommand => Some(tokens.len),
        _ => [ContextKind::InvalidValue, ContextKind::InvalidArg, ContextKind::InvalidSubcommand]
            .into_iter()
            .filter_map(|k| context_string(&err, k))
            .find_map(|v| tokens.find(&v)),
    };
    let rendered = err.render().to_string();
    let message = rendered
        .lines()
        .take_while(|l| !l.trim().is_empty())
        .map(str::trim)
        .collect::<Vec<_>>()
        .join(" ")
        .trim_start_matches("error: ")
        .to_string();
    tokens.invalid(position.unwrap_or(0), message)
}

fn group_arg(text: &str, tokens: &Tokens) -> Result<GroupSpec, ParseError> {
    let at = tokens.find(text).unwrap_or(0);
    GroupSpec::parse(text).map_err(|e| match e {
        Error::Parse { position, message } => tokens.invalid(at + position, message),
        Error::UnknownGroup(name) => tokens.invalid(at, format!("unknown group `{name}`")),
        other => tokens.invalid(at, other.to_string()),
    })
}

fn numeric_position(tokens: &Tokens, verb_at: usize, index: usize) -> usize {
    // positional integers follow the verb; flags may be interleaved
    tokens
        .words
        .iter()
        .zip(&tokens.offsets)
        .filter(|(w, &o)| o > verb_at && !w.starts_with("--"))
        .nth(index)
        .map_or(verb_at, |(_, &o)| o)
}

fn field_size(q: u64, tokens: &Tokens, at: usize) -> Result<u64, ParseError> {
    if q >= 2 && q.is_power_of_two() && q.trailing_zeros() <= sgp_core::gfield::MAX_DEGREE {
        Ok(q)
    } else {
        Err(tokens.invalid(
            at,
            format!("q = {q} must be a power of 2 between 2 and 2^{}", sgp_core::gfield::MAX_DEGREE),
        ))
    }
}

/// Parses an argument vector (without the program name).
pub fn parse_args<S: AsRef<str>>(args: &[S]) -> Result<Command, ParseError> {
    let words: Vec<&str> = args.iter().map(AsRef::as_ref).collect();
    let tokens = Tokens::new(words.clone());
    let cli = Cli::try_parse_from(std::iter::once("sgp-lab").chain(words.iter().copied()))
        .map_err(|e| from_clap(e, &tokens))?;
    let verb_at = tokens
        .words
        .iter()
        .position(|w| !w.starts_with("--") && Verb::has_name(w))
        .map_or(0, |i| tokens.offsets[i]);
    let arg_at = |i: usize| numeric_position(&tokens, verb_at, i);

    let action = match cli.verb {
        Verb::Chartab { group } => Action::Chartab(group_arg(&group, &tokens)?),
        Verb::Sgp { g, h } => Action::Sgp(group_arg(&g, &tokens)?, group_arg(&h, &tokens)?),
        Verb::ScanMaximal { q } => Action::ScanMaximal(field_size(q, &tokens, arg_at(0))?),
        Verb::AlphaSum { q, k, m, n } => {
            let p = AlphaParams::new(q, k, m, n).map_err(|e| {
                let bad = if !(q >= 4 && q.is_power_of_two()) {
                    0
                } else if !(1..=q - 2).contains(&k) {
                    1
                } else if !(1..=q - 2).contains(&m) {
                    2
                } else {
                    3
                };
                tokens.invalid(arg_at(bad), e.to_string())
            })?;
            Action::AlphaSum(p)
        }
        Verb::Families { family, q } => {
            let at = arg_at(1);
            field_size(q, &tokens, at)?;
            let valid = match family {
                Family::Wreath => wreath_degree_spec(q).map(drop),
                Family::Ext => ext_degree_spec(q).map(drop),
                Family::Sz => suzuki_degree_spec(q).map(drop),
                Family::Sp4 => sp4_degree_facts(q).map(drop),
            };
            valid.map_err(|e| tokens.invalid(at, e.to_string()))?;
            Action::Families(family, q)
        }
        Verb::VerifyPaper => Action::VerifyPaper(match (cli.full, cli.deep) {
            (true, _) => Tier::Full,
            (false, true) => Tier::Deep,
            _ => Tier::Quick,
        }),
        Verb::ShowField { q } => Action::ShowField(field_size(q, &tokens, arg_at(0))?),
    };
    let options = Options { format: cli.format, max_order: cli.max_order, show_field: cli.show_field, seed: cli.seed };
    Ok(Command { action, options })
}

impl Verb {
    fn has_name(word: &str) -> bool {
        use clap::CommandFactory;
        Cli::command().get_subcommands().any(|c| c.get_name() == word)
    }
}

/// Parses a whitespace-separated command line such as `"sgp sp4:4 wreath-sp2:4"`.
pub fn parse_spec(text: &str) -> Result<Command, ParseError> {
    let words: Vec<&str> = text.split_whitespace().collect();
    // re-base positions onto `text` itself when it is not single-spaced
    let starts: Vec<usize> = text
        .char_indices()
        .zip(std::iter::once(' ').chain(text.chars()))
        .filter(|((_, c), prev)| !c.is_whitespace() && prev.is_whitespace())
        .map(|((i, _), _)| text[..i].chars().count())
        .collect();
    parse_args(&words).map_err(|e| match e {
        ParseError::Invalid { position, message } => {
            let tokens = Tokens::new(words.clone());
            let idx = tokens.offsets.iter().rposition(|&o| o <= position);
            let position = match idx {
                Some(i) if i < starts.len() => starts[i] + (position - tokens.offsets[i]),
                _ => text.chars().count(),
            };
            ParseError::Invalid { position, message }
        }
        other => other,
    })
}

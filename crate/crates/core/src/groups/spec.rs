//! Group-spec strings `name[:arg[:arg]]`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gfield::MAX_DEGREE;

/// A parsed and validated group spec. Field sizes are stored as `q = 2^e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Sl2 { q: u64 },
    Sp4 { q: u64 },
    WreathSp2 { q: u64 },
    ExtSp2q2 { q: u64 },
    ParabolicP { q: u64 },
    ParabolicQ { q: u64 },
    Sz { q: u64 },
    Sp4Sub { q: u64, q0: u64 },
    So4Plus { q: u64 },
    So4Minus { q: u64 },
    S6,
    Trivial,
}

pub const GROUP_NAMES: [&str; 12] = [
    "sl2",
    "sp4",
    "wreath-sp2",
    "ext-sp2q2",
    "parabolic-p",
    "parabolic-q",
    "sz",
    "sp4-sub",
    "so4+",
    "so4-",
    "s6",
    "trivial",
];

fn parse_error(position: usize, message: impl Into<String>) -> Error {
    Error::Parse { position, message: message.into() }
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// `log₂ q` for a power of two `2 ≤ q ≤ 2^max_e`.
fn field_degree(q: u64, max_e: u32) -> Option<u32> {
    (q >= 2 && q.is_power_of_two() && q.trailing_zeros() <= max_e).then(|| q.trailing_zeros())
}

impl GroupSpec {
    /// Parses `text`; error positions are character offsets into `text`.
    pub fn parse(text: &str) -> Result<GroupSpec> {
        let mut parts = Vec::new();
        let mut start = 0;
        for (i, c) in text.char_indices() {
            if c == ':' {
                parts.push((start, &text[start..i]));
                start = i + 1;
            }
        }
        parts.push((start, &text[start..]));
        let (_, name) = parts[0];
        if name.is_empty() {
            return Err(parse_error(0, "missing group name"));
        }
        if !GROUP_NAMES.contains(&name) {
            return Err(Error::UnknownGroup(name.to_string()));
        }
        let mut args = Vec::new();
        for &(pos, arg) in &parts[1..] {
            let v: u64 = arg
                .parse()
                .map_err(|_| parse_error(pos, format!("expected a positive integer, found `{arg}`")))?;
            args.push((pos, v));
        }
        let arity = match name {
            "s6" | "trivial" => 0,
            "sp4-sub" => 2,
            _ => 1,
        };
        if args.len() != arity {
            let pos = parts.get(arity + 1).map_or(text.len(), |p| p.0);
            return Err(parse_error(
                pos,
                format!("`{name}` takes {arity} argument(s), found {}", args.len()),
            ));
        }
        let field_arg = |(pos, q): (usize, u64), max_e: u32| -> Result<u64> {
            field_degree(q, max_e).map(|_| q).ok_or_else(|| {
                parse_error(pos, format!("q = {q} must be a power of 2 between 2 and 2^{max_e}"))
            })
        };
        let spec = match name {
            "s6" => GroupSpec::S6,
            "trivial" => GroupSpec::Trivial,
            "sl2" => GroupSpec::Sl2 { q: field_arg(args[0], MAX_DEGREE)? },
            "sp4" => GroupSpec::Sp4 { q: field_arg(args[0], MAX_DEGREE)? },
            "wreath-sp2" => GroupSpec::WreathSp2 { q: field_arg(args[0], MAX_DEGREE)? },
            "ext-sp2q2" => GroupSpec::ExtSp2q2 { q: field_arg(args[0], MAX_DEGREE / 2)? },
            "parabolic-p" => GroupSpec::ParabolicP { q: field_arg(args[0], MAX_DEGREE)? },
            "parabolic-q" => GroupSpec::ParabolicQ { q: field_arg(args[0], MAX_DEGREE)? },
            "so4+" => GroupSpec::So4Plus { q: field_arg(args[0], MAX_DEGREE)? },
            "so4-" => GroupSpec::So4Minus { q: field_arg(args[0], MAX_DEGREE)? },
            "sz" => {
                let q = field_arg(args[0], MAX_DEGREE)?;
                let e = q.trailing_zeros();
                if e % 2 == 0 {
                    return Err(parse_error(
                        args[0].0,
                        format!("sz:{q} needs an odd field degree, but q = 2^{e}"),
                    ));
                }
                GroupSpec::Sz { q }
            }
            "sp4-sub" => {
                let q = field_arg(args[0], MAX_DEGREE)?;
                let q0 = field_arg(args[1], MAX_DEGREE)?;
                let (e, e0) = (q.trailing_zeros(), q0.trailing_zeros());
                if e % e0 != 0 || !is_prime(e / e0) {
                    return Err(parse_error(
                        args[1].0,
                        format!("q0 = {q0} must satisfy q = q0^r with r prime"),
                    ));
                }
                GroupSpec::Sp4Sub { q, q0 }
            }
            _ => unreachable!("name checked above"),
        };
        Ok(spec)
    }

    /// Field size the matrices are written over; `s6` and `trivial` live over `GF(2)`.
    pub fn q(&self) -> u64 {
        match *self {
            GroupSpec::Sl2 { q }
            | GroupSpec::Sp4 { q }
            | GroupSpec::WreathSp2 { q }
            | GroupSpec::ExtSp2q2 { q }
            | GroupSpec::ParabolicP { q }
            | GroupSpec::ParabolicQ { q }
            | GroupSpec::Sz { q }
            | GroupSpec::Sp4Sub { q, .. }
            | GroupSpec::So4Plus { q }
            | GroupSpec::So4Minus { q } => q,
            GroupSpec::S6 | GroupSpec::Trivial => 2,
        }
    }

    /// Order predicted by the closed formulas for each family.
    pub fn expected_order(&self) -> u64 {
        let q = self.q();
        match *self {
            GroupSpec::Sl2 { .. } => q * (q * q - 1),
            GroupSpec::Sp4 { .. } | GroupSpec::S6 => q.pow(4) * (q * q - 1) * (q.pow(4) - 1),
            GroupSpec::WreathSp2 { .. } | GroupSpec::So4Plus { .. } => {
                2 * q * q * (q * q - 1).pow(2)
            }
            GroupSpec::ExtSp2q2 { .. } | GroupSpec::So4Minus { .. } => {
                2 * q * q * (q.pow(4) - 1)
            }
            GroupSpec::ParabolicP { .. } | GroupSpec::ParabolicQ { .. } => {
                q.pow(3) * (q * q + q) * (q - 1).pow(2)
            }
            GroupSpec::Sz { .. } => q * q * (q * q + 1) * (q - 1),
            GroupSpec::Sp4Sub { q0, .. } => q0.pow(4) * (q0 * q0 - 1) * (q0.pow(4) - 1),
            GroupSpec::Trivial => 1,
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GroupSpec::parse(s)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupSpec::Sl2 { q } => write!(f, "sl2:{q}"),
            GroupSpec::Sp4 { q } => write!(f, "sp4:{q}"),
            GroupSpec::WreathSp2 { q } => write!(f, "wreath-sp2:{q}"),
            GroupSpec::ExtSp2q2 { q } => write!(f, "ext-sp2q2:{q}"),
            GroupSpec::ParabolicP { q } => write!(f, "parabolic-p:{q}"),
            GroupSpec::ParabolicQ { q } => write!(f, "parabolic-q:{q}"),
            GroupSpec::Sz { q } => write!(f, "sz:{q}"),
            GroupSpec::Sp4Sub { q, q0 } => write!(f, "sp4-sub:{q}:{q0}"),
            GroupSpec::So4Plus { q } => write!(f, "so4+:{q}"),
            GroupSpec::So4Minus { q } => write!(f, "so4-:{q}"),
            GroupSpec::S6 => write!(f, "s6"),
            GroupSpec::Trivial => write!(f, "trivial"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_canonical_labels() {
        for text in ["sl2:4", "sp4:4", "wreath-sp2:8", "ext-sp2q2:4", "parabolic-p:4", "parabolic-q:2",
            "sz:8", "sp4-sub:4:2", "so4+:4", "so4-:4", "s6", "trivial"]
        {
            assert_eq!(GroupSpec::parse(text).unwrap().to_string(), text);
        }
    }

    #[test]
    fn rejects_invalid_specs_with_positions() {
        assert!(matches!(GroupSpec::parse("sz:4"), Err(Error::Parse { position: 3, .. })));
        assert!(matches!(GroupSpec::parse("sl2:6"), Err(Error::Parse { position: 4, .. })));
        assert!(matches!(GroupSpec::parse("sl2:x"), Err(Error::Parse { position: 4, .. })));
        assert!(matches!(GroupSpec::parse("sp4"), Err(Error::Parse { .. })));
        assert!(matches!(GroupSpec::parse("s6:2"), Err(Error::Parse { position: 3, .. })));
        assert!(matches!(GroupSpec::parse("sp4-sub:16:2"), Err(Error::Parse { position: 11, .. })));
        assert!(matches!(GroupSpec::parse("gl3:2"), Err(Error::UnknownGroup(_))));
        assert!(GroupSpec::parse("sp4-sub:8:2").is_ok());
        assert!(GroupSpec::parse("sz:2").is_ok());
    }

    #[test]
    fn closed_form_orders() {
        let order = |s: &str| GroupSpec::parse(s).unwrap().expected_order();
        assert_eq!(order("sl2:4"), 60);
        assert_eq!(order("wreath-sp2:4"), 7200);
        assert_eq!(order("parabolic-p:4"), 11520);
        assert_eq!(order("sp4:4"), 979200);
        assert_eq!(order("sz:8"), 29120);
        assert_eq!(order("ext-sp2q2:4"), 8160);
        assert_eq!(order("sp4-sub:4:2"), 720);
    }
}

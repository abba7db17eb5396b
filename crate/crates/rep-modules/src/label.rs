//! Names of the indecomposable module families and their grammar.
//!
//! Grammar: `S(s1,s2) | P(s1,s2) | M<r> | W<r> | N<r> | N'<r> | C(<r>,<eta>)`
//! with an optional `_s1s2` sign-twist suffix on the non-simple families;
//! `1` is shorthand for the trivial module S(+,+). η is an exact fraction.

use exact_linalg::Scalar;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    S,
    P,
    M,
    W,
    N,
    NPrime,
    C,
}

impl Family {
    pub fn letter(self) -> &'static str {
        match self {
            Family::S => "S",
            Family::P => "P",
            Family::M => "M",
            Family::W => "W",
            Family::N => "N",
            Family::NPrime => "N'",
            Family::C => "C",
        }
    }
}

/// A canonical indecomposable name: family, rank (0 for S and P), the
/// (g,h)-sign pair as ±1, and the band parameter η for family C.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IndecLabel {
    pub family: Family,
    pub rank: usize,
    pub signs: (i8, i8),
    pub eta: Option<Scalar>,
}

impl IndecLabel {
    pub fn simple(s1: i8, s2: i8) -> Self {
        IndecLabel {
            family: Family::S,
            rank: 0,
            signs: (s1, s2),
            eta: None,
        }
    }

    pub fn projective(s1: i8, s2: i8) -> Self {
        IndecLabel {
            family: Family::P,
            rank: 0,
            signs: (s1, s2),
            eta: None,
        }
    }

    pub fn string(family: Family, rank: usize) -> Self {
        assert!(matches!(family, Family::M | Family::W | Family::N | Family::NPrime));
        assert!(rank >= 1);
        IndecLabel {
            family,
            rank,
            signs: (1, 1),
            eta: None,
        }
    }

    pub fn band(rank: usize, eta: Scalar) -> Self {
        assert!(rank >= 1 && !eta.is_zero());
        IndecLabel {
            family: Family::C,
            rank,
            signs: (1, 1),
            eta: Some(eta),
        }
    }

    pub fn with_signs(mut self, s1: i8, s2: i8) -> Self {
        self.signs = (s1, s2);
        self
    }

    pub fn trivial() -> Self {
        Self::simple(1, 1)
    }

    /// Dimension of the named module over the named algebra.
    pub fn dim(&self, algebra: &str) -> usize {
        match self.family {
            Family::S => 1,
            Family::P => {
                if algebra == "DH4" && self.signs.0 * self.signs.1 == -1 {
                    2
                } else {
                    4
                }
            }
            Family::M | Family::W => 2 * self.rank + 1,
            Family::N | Family::NPrime => 2 * self.rank,
            Family::C => {
                if algebra == "HH" {
                    4 * self.rank
                } else {
                    2 * self.rank
                }
            }
        }
    }
}

fn sign_char(s: i8) -> char {
    if s > 0 {
        '+'
    } else {
        '-'
    }
}

impl fmt::Display for IndecLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (s1, s2) = self.signs;
        match self.family {
            Family::S | Family::P => {
                write!(f, "{}({},{})", self.family.letter(), sign_char(s1), sign_char(s2))
            }
            Family::C => {
                write!(f, "C({},{})", self.rank, self.eta.as_ref().unwrap())?;
                if (s1, s2) != (1, 1) {
                    write!(f, "_{}{}", sign_char(s1), sign_char(s2))?;
                }
                Ok(())
            }
            _ => {
                write!(f, "{}{}", self.family.letter(), self.rank)?;
                if (s1, s2) != (1, 1) {
                    write!(f, "_{}{}", sign_char(s1), sign_char(s2))?;
                }
                Ok(())
            }
        }
    }
}

fn parse_sign(c: char) -> Result<i8, String> {
    match c {
        '+' => Ok(1),
        '-' | '−' => Ok(-1),
        other => Err(format!("expected sign, found {other:?}")),
    }
}

fn parse_sign_pair(s: &str) -> Result<(i8, i8), String> {
    let cs: Vec<char> = s.chars().collect();
    if cs.len() != 2 {
        return Err(format!("expected two signs, found {s:?}"));
    }
    Ok((parse_sign(cs[0])?, parse_sign(cs[1])?))
}

impl FromStr for IndecLabel {
    type Err = String;

    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let s = input.trim();
        if s == "1" {
            return Ok(IndecLabel::trivial());
        }
        // optional sign-twist suffix
        let (body, suffix_signs) = match s.rsplit_once('_') {
            Some((body, suf)) => (body, Some(parse_sign_pair(suf)?)),
            None => (s, None),
        };
        let parse_paren = |body: &str, head: usize| -> Result<Vec<String>, String> {
            let inner = body[head..]
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| format!("malformed label {input:?}"))?;
            Ok(inner.split(',').map(|p| p.trim().to_string()).collect())
        };
        let label = if let Some(rest) = body.strip_prefix("S(") {
            let _ = rest;
            let parts = parse_paren(body, 1)?;
            if parts.len() != 2 {
                return Err(format!("S takes two signs: {input:?}"));
            }
            let s1 = parse_sign(parts[0].chars().next().ok_or("empty sign")?)?;
            let s2 = parse_sign(parts[1].chars().next().ok_or("empty sign")?)?;
            IndecLabel::simple(s1, s2)
        } else if body.starts_with("P(") {
            let parts = parse_paren(body, 1)?;
            if parts.len() != 2 {
                return Err(format!("P takes two signs: {input:?}"));
            }
            let s1 = parse_sign(parts[0].chars().next().ok_or("empty sign")?)?;
            let s2 = parse_sign(parts[1].chars().next().ok_or("empty sign")?)?;
            IndecLabel::projective(s1, s2)
        } else if body == "P" {
            IndecLabel::projective(1, 1)
        } else if body.starts_with("C(") {
            let parts = parse_paren(body, 1)?;
            if parts.len() != 2 {
                return Err(format!("C takes rank and eta: {input:?}"));
            }
            let rank: usize = parts[0]
                .parse()
                .map_err(|_| format!("bad rank in {input:?}"))?;
            let eta: Scalar = parts[1]
                .parse()
                .map_err(|e| format!("bad eta in {input:?}: {e}"))?;
            if rank == 0 || eta.is_zero() {
                return Err(format!("rank and eta must be nonzero: {input:?}"));
            }
            IndecLabel::band(rank, eta)
        } else {
            let (fam, rest) = if let Some(r) = body.strip_prefix("N'") {
                (Family::NPrime, r)
            } else if let Some(r) = body.strip_prefix('M') {
                (Family::M, r)
            } else if let Some(r) = body.strip_prefix('W') {
                (Family::W, r)
            } else if let Some(r) = body.strip_prefix('N') {
                (Family::N, r)
            } else {
                return Err(format!("unrecognized label {input:?}"));
            };
            let rank: usize = rest
                .parse()
                .map_err(|_| format!("bad rank in {input:?}"))?;
            if rank == 0 {
                return Err(format!("rank must be positive: {input:?}"));
            }
            IndecLabel::string(fam, rank)
        };
        Ok(match suffix_signs {
            Some((s1, s2)) => label.with_signs(s1, s2),
            None => label,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_display_parse() {
        let labels = [
            "S(+,+)",
            "S(-,-)",
            "P(+,-)",
            "M3",
            "W1_--",
            "N2_+-",
            "N'4",
            "C(2,3)",
            "C(1,-1)_-+",
            "C(3,1/2)",
        ];
        for l in labels {
            let parsed: IndecLabel = l.parse().unwrap();
            assert_eq!(parsed.to_string(), l, "round trip of {l}");
        }
        assert_eq!("1".parse::<IndecLabel>().unwrap(), IndecLabel::trivial());
        assert_eq!("P".parse::<IndecLabel>().unwrap(), IndecLabel::projective(1, 1));
    }

    #[test]
    fn dims_by_family() {
        let m: IndecLabel = "M3".parse().unwrap();
        assert_eq!(m.dim("mabar"), 7);
        let c: IndecLabel = "C(2,1)".parse().unwrap();
        assert_eq!(c.dim("mabar"), 4);
        assert_eq!(c.dim("HH"), 8);
        let p: IndecLabel = "P(+,-)".parse().unwrap();
        assert_eq!(p.dim("DH4"), 2);
        assert_eq!(p.dim("mabar"), 4);
    }

    #[test]
    fn rejects_garbage() {
        assert!("Q3".parse::<IndecLabel>().is_err());
        assert!("C(0,1)".parse::<IndecLabel>().is_err());
        assert!("C(1,0)".parse::<IndecLabel>().is_err());
        assert!("M0".parse::<IndecLabel>().is_err());
    }
}

//! Pattern grammar.
//!
//! A pattern is a run of digits `1`-`9`. Square brackets make it cyclic
//! (`[1234]`), a parenthesized run bonds its entries (`[13(24)]` bonds
//! positions 3 and 4, `(123)` bonds all three), and commas separate the
//! members of a set (`[1234],[1342]`). Whitespace is ignored.

use cycperm_core::{PatternSet, Permutation, VincularPattern};

use crate::error::CliError;

fn err(input: &str, msg: &str) -> CliError {
    CliError::Usage(format!("cannot parse pattern {input:?}: {msg}"))
}

/// Parses one pattern. Classical cyclic patterns are stored by their
/// canonical rotation; bonded ones keep the representative as written.
pub fn parse_pattern(input: &str) -> Result<VincularPattern, CliError> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    let (body, cyclic) = match s.strip_prefix('[') {
        Some(rest) => match rest.strip_suffix(']') {
            Some(body) => (body, true),
            None => return Err(err(input, "unclosed '['")),
        },
        None => (s.as_str(), false),
    };
    let mut values = Vec::new();
    let mut bonds = Vec::new();
    let mut open: Option<usize> = None;
    for c in body.chars() {
        match c {
            '1'..='9' => values.push(c as u8 - b'0'),
            '(' => {
                if open.is_some() {
                    return Err(err(input, "nested '('"));
                }
                open = Some(values.len());
            }
            ')' => {
                let start = open.take().ok_or_else(|| err(input, "unmatched ')'"))?;
                if values.len() - start < 2 {
                    return Err(err(input, "a bonded run needs at least two entries"));
                }
                // entries start+1 ..= len are 1-based positions; bond i joins i and i+1
                bonds.extend(start + 1..values.len());
            }
            _ => return Err(err(input, &format!("unexpected character {c:?}"))),
        }
    }
    if open.is_some() {
        return Err(err(input, "unclosed '('"));
    }
    if values.is_empty() {
        return Err(err(input, "empty pattern"));
    }
    let base = Permutation::new(values).map_err(|e| err(input, &e.to_string()))?;
    if cyclic && bonds.is_empty() {
        let class = base.canonical().map_err(|e| err(input, &e.to_string()))?;
        return Ok(VincularPattern::cyclic(&class));
    }
    VincularPattern::new(base, bonds, cyclic).map_err(|e| err(input, &e.to_string()))
}

/// Parses a comma-separated set. Commas inside brackets are not allowed,
/// so a plain split suffices.
pub fn parse_set(input: &str) -> Result<PatternSet, CliError> {
    let patterns = input
        .split(',')
        .map(parse_pattern)
        .collect::<Result<Vec<_>, _>>()?;
    PatternSet::new(patterns).map_err(|e| err(input, &e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        for s in ["[1234]", "[13(24)]", "[(123)]", "213", "1(32)", "[(12)(34)]", "[1]"] {
            assert_eq!(parse_pattern(s).unwrap().to_string(), s);
        }
        assert_eq!(parse_set("[1234],[1342]").unwrap().to_string(), "[1234],[1342]");
    }

    #[test]
    fn canonicalizes_classical_cyclic() {
        assert_eq!(parse_pattern("[4231]").unwrap().to_string(), "[1423]");
        assert_eq!(parse_pattern(" [ 1 2 3 ] ").unwrap().to_string(), "[123]");
    }

    #[test]
    fn bonds() {
        let p = parse_pattern("[13(24)]").unwrap();
        assert_eq!(p.bonds(), &[3]);
        assert!(p.is_cyclic());
        assert_eq!(parse_pattern("(123)").unwrap().bonds(), &[1, 2]);
    }

    #[test]
    fn rejects() {
        for s in ["", "[]", "[123", "12)", "(1)23", "((12))", "1a2", "112", "[1234],213", "0", "13"] {
            assert!(parse_set(s).is_err(), "{s:?}");
        }
    }
}

//! Input grammars beyond the core text forms: rationals, rational lists,
//! attribute value maps, named bases, and permutations.

use num_bigint::BigInt;
use setqm::gf2::Basis;
use setqm::groups::Permutation;
use setqm::{Error, Rat, Result, Universe};

/// Parses "3", "-2", or "p/q" as an exact rational.
pub fn parse_rat(input: &str) -> Result<Rat> {
    let text = input.trim();
    let parse_int = |s: &str, at: usize| -> Result<BigInt> {
        s.parse::<BigInt>()
            .map_err(|_| Error::Parse {
                position: at,
                message: format!("expected an integer, found {s:?}"),
            })
    };
    match text.split_once('/') {
        Some((numer, denom)) => {
            let numer = parse_int(numer.trim(), 0)?;
            let denom = parse_int(denom.trim(), text.find('/').unwrap() + 1)?;
            if denom == BigInt::from(0) {
                return Err(Error::Parse {
                    position: 0,
                    message: "denominator is zero".into(),
                });
            }
            Ok(Rat::new(numer, denom))
        }
        None => Ok(Rat::from_integer(parse_int(text, 0)?)),
    }
}

/// Parses "1/3,1/3,1/3" as a rational list.
pub fn parse_rat_list(input: &str) -> Result<Vec<Rat>> {
    input.split(',').map(parse_rat).collect()
}

/// Parses "a:0,b:1,c:1" as label/value pairs.
pub fn parse_attr_values(input: &str) -> Result<Vec<(String, Rat)>> {
    let mut out = Vec::new();
    for piece in input.split(',') {
        let (label, value) = piece.split_once(':').ok_or_else(|| Error::Parse {
            position: 0,
            message: format!("expected label:value, found {piece:?}"),
        })?;
        out.push((label.trim().to_string(), parse_rat(value)?));
    }
    Ok(out)
}

/// Splits on a separator, ignoring separators nested inside braces.
fn split_top_level(input: &str, separator: char) -> Vec<&str> {
    let mut pieces = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in input.char_indices() {
        match c {
            '{' => depth += 1,
            '}' => depth = depth.saturating_sub(1),
            c if c == separator && depth == 0 => {
                pieces.push(&input[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    pieces.push(&input[start..]);
    pieces
}

/// Parses a named basis: `U':a'={a,b},b'={b,c},c'={a,b,c}`. Vector subsets
/// are given in universe labels.
pub fn parse_basis(universe: &Universe, input: &str) -> Result<Basis> {
    let (name, body) = input.split_once(':').ok_or_else(|| Error::Parse {
        position: 0,
        message: "expected NAME:label={..},...".into(),
    })?;
    let mut labeled: Vec<(String, Vec<String>)> = Vec::new();
    for piece in split_top_level(body, ',') {
        let (label, subset) = piece.split_once('=').ok_or_else(|| Error::Parse {
            position: 0,
            message: format!("expected label={{...}}, found {piece:?}"),
        })?;
        let parsed = Universe::parse(subset.trim());
        let members = match parsed {
            Ok(u) => u.labels().to_vec(),
            Err(e) => {
                // An empty subset `{}` is allowed by the grammar but will be
                // rejected by the basis independence check with a clear error.
                if subset.trim() == "{}" {
                    Vec::new()
                } else {
                    return Err(e);
                }
            }
        };
        labeled.push((label.trim().to_string(), members));
    }
    let borrowed: Vec<(&str, Vec<&str>)> = labeled
        .iter()
        .map(|(l, m)| (l.as_str(), m.iter().map(String::as_str).collect()))
        .collect();
    let as_slices: Vec<(&str, &[&str])> = borrowed
        .iter()
        .map(|(l, m)| (*l, m.as_slice()))
        .collect();
    Basis::new(universe, name.trim(), &as_slices)
}

/// Parses a permutation either as cycles `(0 3)(1 4)(2 5)` or as an image
/// list `3,4,5,0,1,2` over universe labels/indices.
pub fn parse_permutation(universe: &Universe, input: &str) -> Result<Permutation> {
    let text = input.trim();
    let n = universe.size();
    if text.starts_with('(') {
        let mut image: Vec<usize> = (0..n).collect();
        let mut rest = text;
        while let Some(stripped) = rest.strip_prefix('(') {
            let end = stripped.find(')').ok_or_else(|| Error::Parse {
                position: input.len(),
                message: "unclosed cycle".into(),
            })?;
            let members: Vec<usize> = stripped[..end]
                .split([' ', ','])
                .filter(|s| !s.is_empty())
                .map(|label| universe.require(label.trim()))
                .collect::<Result<_>>()?;
            for (i, &x) in members.iter().enumerate() {
                image[x] = members[(i + 1) % members.len()];
            }
            rest = stripped[end + 1..].trim_start();
        }
        if !rest.is_empty() {
            return Err(Error::Parse {
                position: input.len() - rest.len(),
                message: format!("unexpected trailing input {rest:?}"),
            });
        }
        Permutation::new(universe, image)
    } else {
        let image = text
            .split(',')
            .map(|label| universe.require(label.trim()))
            .collect::<Result<Vec<usize>>>()?;
        Permutation::new(universe, image)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use setqm::rat;

    #[test]
    fn rationals() {
        assert_eq!(parse_rat("3").unwrap(), rat(3, 1));
        assert_eq!(parse_rat("1/3").unwrap(), rat(1, 3));
        assert_eq!(parse_rat(" -2/4 ").unwrap(), rat(-1, 2));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn attr_values() {
        let parsed = parse_attr_values("a:0,b:1/2,c:1/2").unwrap();
        assert_eq!(parsed[1], ("b".to_string(), rat(1, 2)));
        assert!(parse_attr_values("a=0").is_err());
    }

    #[test]
    fn bases() {
        let u = Universe::parse("{a,b,c}").unwrap();
        let basis = parse_basis(&u, "U':a'={a,b},b'={b,c},c'={a,b,c}").unwrap();
        assert_eq!(basis.name(), "U'");
        assert_eq!(basis.labels(), ["a'", "b'", "c'"]);
        assert!(parse_basis(&u, "B:x={a},y={b},z={a,b}").is_err());
    }

    #[test]
    fn permutations() {
        let u = Universe::parse("{0,1,2,3,4,5}").unwrap();
        let by_cycles = parse_permutation(&u, "(0 3)(1 4)(2 5)").unwrap();
        let by_images = parse_permutation(&u, "3,4,5,0,1,2").unwrap();
        assert_eq!(by_cycles, by_images);
        assert!(parse_permutation(&u, "0,0,1,2,3,4").is_err());
    }
}

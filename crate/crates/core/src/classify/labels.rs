//! Dimension data of named real Lie algebras.
//!
//! A label is a `+`-separated list of summands such as `su(2,1)+u(1)`,
//! `sl3(C)+so(2)`, `so*(8)+R` or `e6(-14)+so(2)`. For each summand we know the
//! real dimension, the dimension of a maximal compact subalgebra, and the
//! dimension of the center. Complex algebras are counted as real ones.

use crate::rootsys::{expected_root_count, Series, TypeLabel};
use std::ops::Add;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct Dims {
    pub dim: usize,
    /// Dimension of a maximal compact subalgebra (negative index of the Killing form).
    pub compact: usize,
    pub center: usize,
}

impl Add for Dims {
    type Output = Dims;
    fn add(self, o: Dims) -> Dims {
        Dims {
            dim: self.dim + o.dim,
            compact: self.compact + o.compact,
            center: self.center + o.center,
        }
    }
}

impl std::fmt::Display for Dims {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "dim {} (compact {}, center {})", self.dim, self.compact, self.center)
    }
}

fn d(dim: usize, compact: usize, center: usize) -> Dims {
    Dims {
        dim,
        compact,
        center,
    }
}

struct Token<'a> {
    head: &'a str,
    num: Option<usize>,
    args: Vec<&'a str>,
}

fn tokenize(s: &str) -> Result<Token<'_>, String> {
    let head_end = s
        .find(|c: char| !(c.is_ascii_alphabetic() || c == '*'))
        .unwrap_or(s.len());
    let head = &s[..head_end];
    let rest = &s[head_end..];
    let num_end = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
    let num = if num_end > 0 {
        Some(rest[..num_end].parse().map_err(|e| format!("{s}: {e}"))?)
    } else {
        None
    };
    let rest = &rest[num_end..];
    let args = if rest.is_empty() {
        Vec::new()
    } else if rest.starts_with('(') && rest.ends_with(')') {
        rest[1..rest.len() - 1].split(',').map(str::trim).collect()
    } else {
        return Err(format!("cannot parse `{s}`"));
    };
    Ok(Token { head, num, args })
}

fn ints(args: &[&str], s: &str) -> Result<Vec<usize>, String> {
    args.iter()
        .map(|a| a.parse::<usize>().map_err(|_| format!("bad argument in `{s}`")))
        .collect()
}

/// `(p, q)` from `(p,q)` or `(n)`.
fn signature(args: &[&str], s: &str) -> Result<(usize, usize), String> {
    match ints(args, s)?.as_slice() {
        [n] => Ok((*n, 0)),
        [p, q] => Ok((*p, *q)),
        _ => Err(format!("expected (n) or (p,q) in `{s}`")),
    }
}

fn so_dims(p: usize, q: usize) -> Dims {
    let n = p + q;
    let tri = |k: usize| k * k.saturating_sub(1) / 2;
    d(tri(n), tri(p) + tri(q), usize::from(n == 2))
}

fn exceptional(s: &str) -> Option<Dims> {
    let (dim, compact) = match s {
        "g2" | "g2(-14)" => (14, 14),
        "g2(2)" => (14, 6),
        "f4" | "f4(-52)" => (52, 52),
        "f4(4)" => (52, 24),
        "f4(-20)" => (52, 36),
        "e6" | "e6(-78)" => (78, 78),
        "e6(6)" => (78, 36),
        "e6(2)" => (78, 38),
        "e6(-14)" => (78, 46),
        "e6(-26)" => (78, 52),
        "e7" | "e7(-133)" => (133, 133),
        "e7(7)" => (133, 63),
        "e7(-5)" => (133, 69),
        "e7(-25)" => (133, 79),
        "e8" | "e8(-248)" => (248, 248),
        "e8(8)" => (248, 120),
        "e8(-24)" => (248, 136),
        "g2(C)" => (28, 14),
        "f4(C)" => (104, 52),
        "e6(C)" => (156, 78),
        "e7(C)" => (266, 133),
        "e8(C)" => (496, 248),
        _ => return None,
    };
    Some(d(dim, compact, 0))
}

/// Dimensions of a single summand.
pub fn summand_dims(s: &str) -> Result<Dims, String> {
    let s = s.trim();
    match s {
        "0" => return Ok(Dims::default()),
        "R" => return Ok(d(1, 0, 1)),
        "C" => return Ok(d(2, 1, 2)),
        _ => {}
    }
    if let Some(x) = exceptional(s) {
        return Ok(x);
    }
    let t = tokenize(s)?;
    let real = t.args.first() == Some(&"R");
    let cplx = t.args.first() == Some(&"C");
    let out = match (t.head, t.num) {
        ("sl", Some(n)) if real => d(n * n - 1, n * (n - 1) / 2, 0),
        ("sl", Some(n)) if cplx => d(2 * (n * n - 1), n * n - 1, 0),
        ("gl", Some(n)) if real => d(n * n, n * (n - 1) / 2, 1),
        ("gl", Some(n)) if cplx => d(2 * n * n, n * n, 2),
        ("sp", Some(n)) if real => d(n * (2 * n + 1), n * n, 0),
        ("sp", Some(n)) if cplx => d(2 * n * (2 * n + 1), n * (2 * n + 1), 0),
        ("so", Some(n)) if cplx => {
            let x = n * n.saturating_sub(1) / 2;
            d(2 * x, x, if n == 2 { 2 } else { 0 })
        }
        ("su", None) => {
            let (p, q) = signature(&t.args, s)?;
            let n = p + q;
            if n == 0 {
                Dims::default()
            } else {
                d(n * n - 1, p * p + q * q - 1, 0)
            }
        }
        ("u", None) => {
            let (p, q) = signature(&t.args, s)?;
            let n = p + q;
            d(n * n, p * p + q * q, usize::from(n > 0))
        }
        ("so", None) => {
            let (p, q) = signature(&t.args, s)?;
            so_dims(p, q)
        }
        ("sp", None) => {
            let (p, q) = signature(&t.args, s)?;
            let n = p + q;
            d(n * (2 * n + 1), p * (2 * p + 1) + q * (2 * q + 1), 0)
        }
        ("so*", None) | ("su*", None) => {
            let m = match ints(&t.args, s)?.as_slice() {
                [m] if m % 2 == 0 => m / 2,
                _ => return Err(format!("expected an even size in `{s}`")),
            };
            if t.head == "so*" {
                d(m * (2 * m - 1), m * m, usize::from(m == 1))
            } else {
                d(4 * m * m - 1, m * (2 * m + 1), 0)
            }
        }
        _ => return Err(format!("unknown algebra `{s}`")),
    };
    Ok(out)
}

/// Dimensions of a `+`-separated label.
pub fn label_dims(label: &str) -> Result<Dims, String> {
    label
        .split('+')
        .map(summand_dims)
        .try_fold(Dims::default(), |acc, x| Ok(acc + x?))
}

/// Complex dimension of a `+`-separated list of complex types (`A1`, `D5`, `T1` for a torus).
pub fn complex_type_dim(label: &str) -> Result<usize, String> {
    let mut total = 0;
    for part in label.split('+') {
        let part = part.trim();
        let (letter, rank) = part.split_at(1);
        let rank: usize = rank.parse().map_err(|_| format!("bad type `{part}`"))?;
        let c = letter.chars().next().ok_or("empty type")?;
        total += if c == 'T' {
            rank
        } else {
            let series = Series::from_letter(c).ok_or_else(|| format!("bad series in `{part}`"))?;
            let t = TypeLabel::new(series, rank).map_err(|e| e.to_string())?;
            expected_root_count(t) + rank
        };
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_dimensional_coincidences() {
        let sl2r = label_dims("sl2(R)").unwrap();
        for s in ["su(1,1)", "sp1(R)", "so(1,2)"] {
            assert_eq!(label_dims(s).unwrap(), sl2r, "{s}");
        }
        assert_eq!(label_dims("so(2,2)").unwrap(), label_dims("sl2(R)+sl2(R)").unwrap());
        assert_eq!(label_dims("so*(4)").unwrap(), label_dims("su(2)+sl2(R)").unwrap());
        assert_eq!(label_dims("so*(8)").unwrap(), label_dims("so(2,6)").unwrap());
        assert_eq!(label_dims("su*(4)").unwrap(), label_dims("so(1,5)").unwrap());
        assert_eq!(label_dims("so(3,3)").unwrap(), label_dims("sl4(R)").unwrap());
        assert_eq!(label_dims("so(2)").unwrap(), label_dims("u(1)").unwrap());
        assert_eq!(label_dims("so(1,1)").unwrap(), label_dims("R").unwrap());
        assert_eq!(label_dims("so3(C)").unwrap(), label_dims("sl2(C)").unwrap());
    }

    #[test]
    fn complex_types() {
        assert_eq!(complex_type_dim("E7+A1").unwrap(), 136);
        assert_eq!(complex_type_dim("D5+T1").unwrap(), 46);
        assert!(complex_type_dim("Q2").is_err());
    }
}

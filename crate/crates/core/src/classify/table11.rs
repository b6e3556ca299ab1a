use super::table2::parse_grid;
use super::{table_lines, table_title, TableReport, TableRow};
use crate::sl2kit::{vinberg_short_check, ClassicalKind};
use crate::template::{eval_bool, render, Vars};

fn split_name(s: &str) -> (&str, usize) {
    let cut = s.find(|c: char| c.is_ascii_digit()).unwrap_or(s.len());
    (&s[..cut], s[cut..].parse().unwrap_or(0))
}

/// Complex simple and toral types of one summand: `so4` gives `A1, A1`, `gl3` gives `A2, T1`.
fn summand_types(s: &str) -> Result<Vec<String>, String> {
    if let Some(inner) = s.strip_prefix("s(").and_then(|r| r.strip_suffix(')')) {
        // s(gl_a + gl_b): the two gl's with one central direction removed.
        let mut out = Vec::new();
        for part in inner.split('+') {
            out.extend(summand_types(part)?.into_iter().filter(|t| t != "T1"));
        }
        out.push("T1".into());
        return Ok(out);
    }
    let (head, m) = split_name(s);
    let t = |x: String| vec![x];
    Ok(match (head, m) {
        (_, 0) | ("so", 1) | ("sl", 1) => Vec::new(),
        ("so", 2) | ("gl", 1) => t("T1".into()),
        ("so", 4) => vec!["A1".into(), "A1".into()],
        ("so", m) if m % 2 == 1 => t(if m == 3 { "A1".into() } else { format!("B{}", (m - 1) / 2) }),
        ("so", m) => t(format!("D{}", m / 2)),
        ("sp", 1) => t("A1".into()),
        ("sp", m) => t(format!("C{m}")),
        ("sl", m) => t(format!("A{}", m - 1)),
        ("gl", m) => vec![format!("A{}", m - 1), "T1".into()],
        _ => return Err(format!("unknown summand `{s}`")),
    })
}

fn split_summands(label: &str) -> Vec<&str> {
    // `+` inside s(...) does not separate summands.
    let mut out = Vec::new();
    let (mut depth, mut start) = (0, 0);
    for (i, c) in label.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' if depth == 0 => {
                out.push(&label[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&label[start..]);
    out
}

pub(crate) fn has_sl2_ideal(label: &str) -> Result<bool, String> {
    for s in split_summands(label) {
        if summand_types(s.trim())?.iter().any(|t| t == "A1") {
            return Ok(true);
        }
    }
    Ok(false)
}

fn kind_of(g: &str) -> (ClassicalKind, usize) {
    let (head, n) = split_name(g);
    match head {
        "sl" => (ClassicalKind::Sl, n),
        "so" => (ClassicalKind::So, n),
        _ => (ClassicalKind::Sp, 2 * n),
    }
}

/// Restriction of the defining representation to the sl2 ideal of the first summand:
/// the summand's block decomposes as below, the rest is trivial.
fn restricted_partition(g: &str, sub: &str) -> Result<Vec<usize>, String> {
    let (_, size) = kind_of(g);
    let mut first = split_summands(sub)[0].trim();
    if let Some(inner) = first.strip_prefix("s(").and_then(|r| r.strip_suffix(')')) {
        first = split_summands(inner)[0].trim();
    }
    let (head, m) = split_name(first);
    let block: Vec<usize> = match (head, m) {
        ("so", 3) => vec![3],
        // so4 = sl2 + sl2 on C^2 x C^2: one factor sees two copies of C^2.
        ("so", 4) => vec![2, 2],
        ("sp", 1) | ("gl", 2) | ("sl", 2) => vec![2],
        _ => return Err(format!("`{first}` has no sl2 ideal")),
    };
    let used: usize = block.iter().sum();
    let mut out = block;
    out.extend(std::iter::repeat_n(1, size - used));
    Ok(out)
}

fn fmt_partition(p: &[usize]) -> String {
    let ones = p.iter().filter(|&&x| x == 1).count();
    let mut parts: Vec<String> = p.iter().filter(|&&x| x != 1).map(|x| x.to_string()).collect();
    match ones {
        0 => {}
        1 => parts.push("1".into()),
        k => parts.push(format!("1^{k}")),
    }
    parts.join(",")
}

fn ideal_row(f: &[String], v: &Vars) -> TableRow {
    let g = render(&f[1], v).expect("template");
    let sub = render(&f[2], v).expect("template");
    let key = format!("{g} > {sub}: sl2 ideal");
    let expected = eval_bool(&f[3], v).expect("condition");
    match has_sl2_ideal(&sub) {
        Ok(c) => TableRow::new("11", key).compare(c.to_string(), expected.to_string()),
        Err(e) => TableRow::new("11", key).with_status(false).note(e),
    }
}

fn rho_row(f: &[String], v: &Vars) -> TableRow {
    let g = render(&f[1], v).expect("template");
    let sub = render(&f[2], v).expect("template");
    let key = format!("{g} > {sub}: rho, short");
    // `1^{k}` is rendered with k evaluated; a count of one prints as `1`.
    let mut rho = render(&f[3], v).expect("template");
    if let Some(head) = rho.strip_suffix("1^1") {
        rho = format!("{head}1");
    }
    let run = || -> Result<String, String> {
        if !has_sl2_ideal(&sub)? {
            return Err("no sl2 ideal".into());
        }
        let p = restricted_partition(&g, &sub)?;
        let (kind, _) = kind_of(&g);
        let verdict = match vinberg_short_check(kind, &p) {
            Ok(true) => "Yes",
            _ => "No",
        };
        Ok(format!("{} {verdict}", fmt_partition(&p)))
    };
    match run() {
        Ok(c) => TableRow::new("11", key).compare(c, format!("{rho} {}", f[4])),
        Err(e) => TableRow::new("11", key).with_status(false).note(e),
    }
}

pub fn verify_table11() -> TableReport {
    let mut rows = Vec::new();
    for f in table_lines("table11") {
        let grid_col = if f[0] == "ideal" { 4 } else { 5 };
        for v in parse_grid(&f[grid_col]) {
            rows.push(match f[0].as_str() {
                "ideal" => ideal_row(&f, &v),
                _ => rho_row(&f, &v),
            });
        }
    }
    TableReport::new("11", table_title("11"), rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ideals_and_partitions() {
        assert!(has_sl2_ideal("so3+so5").unwrap());
        assert!(has_sl2_ideal("s(gl1+gl2)").unwrap());
        assert!(!has_sl2_ideal("gl3").unwrap());
        assert_eq!(fmt_partition(&restricted_partition("sp3", "sp1+sp2").unwrap()), "2,1^4");
        assert_eq!(fmt_partition(&restricted_partition("sl4", "so4").unwrap()), "2,2");
    }
}

use super::{table_lines, TableReport, TableRow};
use crate::rootsys::{format_weights, highest_root_in_weights, RootSystem, Series, TypeLabel};
use crate::template::{render, vars};

const MAX_RANK: usize = 8;

fn row_key(series: char, lo: usize, hi: usize) -> String {
    if lo == hi {
        format!("{series}{lo}")
    } else {
        format!("{series}_n (n>={lo})")
    }
}

pub fn verify_table_ov() -> TableReport {
    let mut rows = Vec::new();
    for f in table_lines("ov") {
        let letter = f[0].chars().next().expect("series letter");
        let series = Series::from_letter(letter).expect("valid series");
        let lo: usize = f[1].parse().expect("first rank");
        let last: usize = f[2].parse().expect("last rank");
        let hi = if last == 0 { MAX_RANK } else { last };
        let exceptions: Vec<(usize, String)> = if f[4] == "-" {
            Vec::new()
        } else {
            f[4].split(';')
                .map(|e| {
                    let (r, v) = e.split_once(':').expect("rank: value");
                    (r.trim().parse().expect("rank"), v.trim().to_string())
                })
                .collect()
        };
        let mut bad = Vec::new();
        let mut notes = Vec::new();
        let mut checked = Vec::new();
        for n in lo..=hi {
            let t = TypeLabel::new(series, n).expect("valid rank");
            let rs = RootSystem::from_label(t);
            let got = format_weights(t, &highest_root_in_weights(&rs), true);
            let want = render(&f[3], &vars(&[("n", n as i64)])).expect("template");
            match exceptions.iter().find(|(r, _)| *r == n) {
                Some((_, v)) if *v == got => notes.push(format!("{t}: computed {got}, not {want}")),
                Some((_, v)) => bad.push(format!("{t}: computed {got}, exception data says {v}")),
                None if got == want => checked.push(n),
                None => bad.push(format!("{t}: computed {got}, expected {want}")),
            }
        }
        let sample = render(&f[3], &vars(&[("n", hi as i64)])).expect("template");
        let computed = if bad.is_empty() {
            format!("{sample} at n={}..{}", checked[0], checked[checked.len() - 1])
        } else {
            bad.join("; ")
        };
        let mut row = TableRow::new("ov", row_key(letter, lo, last))
            .with_status(bad.is_empty());
        row.computed = computed;
        row.expected = f[3].clone();
        if !notes.is_empty() {
            row = row.note(format!("outside the checked range: {}", notes.join("; ")));
        }
        rows.push(row);
    }
    TableReport::new("ov", super::table_title("ov"), rows)
}

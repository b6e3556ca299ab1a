use super::census::SymmetricPairCensus;
use super::{table_lines, table_title, TableReport, TableRow};
use crate::satake::SatakeDb;

/// Each listed `dim(s + Z(s))` is compared with the dimensions of symmetric
/// subalgebras of the same algebra; the row is excluded when it is not one of them.
pub fn verify_table9_exclusion() -> TableReport {
    let census = SymmetricPairCensus::builtin();
    let mut rows = Vec::new();
    let db = SatakeDb::from_env();
    let problems = match &db {
        Ok(db) => census.self_check(db),
        Err(e) => vec![e.to_string()],
    };
    rows.push(
        TableRow::new("9", "census self-check")
            .compare(problems.join("; "), "")
            .cert(&census),
    );
    for f in table_lines("table9") {
        let dims = census.dims(&f[0]);
        let key = format!("{} index {}: dim {}", f[0], f[1], f[2]);
        let dim: usize = f[2].parse().expect("dimension");
        let row = if dims.is_empty() {
            TableRow::new("9", key).data_only(format!("no census entries for {}", f[0]))
        } else {
            let shown = dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(", ");
            TableRow::new("9", key).compare(
                if dims.contains(&dim) {
                    format!("{dim} is a symmetric subalgebra dimension ({shown})")
                } else {
                    format!("excluded as claimed: {dim} not in {{{shown}}}")
                },
                format!("excluded as claimed: {dim} not in {{{shown}}}"),
            )
        };
        rows.push(row);
    }
    TableReport::new("9", table_title("9"), rows)
}

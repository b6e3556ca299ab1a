//! Table drivers: rebuild each table from the primitives and diff against the
//! transcribed data in `data/tables/`.

pub mod census;
pub mod labels;
pub mod ov;
pub mod table1;
pub mod table11;
pub mod table2;
pub mod table4;
pub mod table9;
pub mod tables5to8;

use serde::Serialize;
use std::fmt::Write as _;

pub use census::SymmetricPairCensus;
pub use ov::verify_table_ov;
pub use table1::verify_table1;
pub use table11::verify_table11;
pub use table2::verify_table2_3;
pub use table4::verify_table4;
pub use table9::verify_table9_exclusion;
pub use tables5to8::verify_tables5to8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Match,
    Mismatch,
    DataOnly,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Match => "match",
            Status::Mismatch => "mismatch",
            Status::DataOnly => "data-only",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub table_id: String,
    pub key: String,
    pub computed: String,
    pub expected: String,
    pub status: Status,
    /// Required for `data-only`; free-form note otherwise.
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<serde_json::Value>,
}

impl TableRow {
    pub fn new(table_id: &str, key: impl Into<String>) -> Self {
        TableRow {
            table_id: table_id.into(),
            key: key.into(),
            computed: String::new(),
            expected: String::new(),
            status: Status::Match,
            reason: None,
            certificate: None,
        }
    }

    /// Status from comparing computed and expected strings.
    pub fn compare(mut self, computed: impl Into<String>, expected: impl Into<String>) -> Self {
        self.computed = computed.into();
        self.expected = expected.into();
        self.status = if self.computed == self.expected {
            Status::Match
        } else {
            Status::Mismatch
        };
        self
    }

    pub fn with_status(mut self, ok: bool) -> Self {
        self.status = if ok { Status::Match } else { Status::Mismatch };
        self
    }

    pub fn data_only(mut self, reason: impl Into<String>) -> Self {
        self.status = Status::DataOnly;
        self.reason = Some(reason.into());
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.reason = Some(note.into());
        self
    }

    pub fn cert<T: Serialize>(mut self, c: &T) -> Self {
        self.certificate = Some(serde_json::to_value(c).expect("serializable certificate"));
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TableReport {
    pub table_id: String,
    pub title: String,
    pub rows: Vec<TableRow>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Md,
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "md" => Ok(Format::Md),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format `{s}` (md, csv, json)")),
        }
    }
}

impl TableReport {
    pub fn new(table_id: &str, title: &str, rows: Vec<TableRow>) -> Self {
        TableReport {
            table_id: table_id.into(),
            title: title.into(),
            rows,
        }
    }

    pub fn count(&self, s: Status) -> usize {
        self.rows.iter().filter(|r| r.status == s).count()
    }

    pub fn all_ok(&self) -> bool {
        self.count(Status::Mismatch) == 0
            && self
                .rows
                .iter()
                .all(|r| r.status != Status::DataOnly || r.reason.is_some())
    }

    pub fn summary(&self) -> String {
        format!(
            "table {}: {} rows, {} match, {} mismatch, {} data-only",
            self.table_id,
            self.rows.len(),
            self.count(Status::Match),
            self.count(Status::Mismatch),
            self.count(Status::DataOnly)
        )
    }

    pub fn render(&self, f: Format) -> String {
        match f {
            Format::Md => self.to_markdown(),
            Format::Csv => self.to_csv(),
            Format::Json => serde_json::to_string_pretty(self).expect("serializable report") + "\n",
        }
    }

    pub fn to_markdown(&self) -> String {
        let esc = |s: &str| s.replace('|', "\\|");
        let mut out = format!("## Table {}: {}\n\n", self.table_id, self.title);
        out.push_str("| row | computed | expected | status | note |\n|---|---|---|---|---|\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} |",
                esc(&r.key),
                esc(&r.computed),
                esc(&r.expected),
                r.status.as_str(),
                esc(r.reason.as_deref().unwrap_or(""))
            );
        }
        let _ = writeln!(out, "\n{}\n", self.summary());
        out
    }

    pub fn to_csv(&self) -> String {
        let q = |s: &str| format!("\"{}\"", s.replace('"', "\"\""));
        let mut out = String::from("table,row,computed,expected,status,note\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                q(&r.table_id),
                q(&r.key),
                q(&r.computed),
                q(&r.expected),
                r.status.as_str(),
                q(r.reason.as_deref().unwrap_or(""))
            );
        }
        out
    }
}

/// Text of `data/tables/<name>.txt`: from `$CONTACTGRAD_DATA/tables/` when that
/// file exists, the embedded copy otherwise.
pub fn table_data(name: &str) -> Result<String, String> {
    if let Some(dir) = std::env::var_os("CONTACTGRAD_DATA") {
        let path = std::path::Path::new(&dir).join("tables").join(format!("{name}.txt"));
        if path.exists() {
            return std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()));
        }
    }
    let text = match name {
        "census" => include_str!("../../data/tables/census.txt"),
        "ov" => include_str!("../../data/tables/ov.txt"),
        "table1" => include_str!("../../data/tables/table1.txt"),
        "table2" => include_str!("../../data/tables/table2.txt"),
        "table3" => include_str!("../../data/tables/table3.txt"),
        "table4" => include_str!("../../data/tables/table4.txt"),
        "tables5to8" => include_str!("../../data/tables/tables5to8.txt"),
        "table9" => include_str!("../../data/tables/table9.txt"),
        "table11" => include_str!("../../data/tables/table11.txt"),
        _ => return Err(format!("no table data named `{name}`")),
    };
    Ok(text.to_string())
}

/// Data lines of a table file, split into fields; panics on unreadable embedded data.
pub(crate) fn table_lines(name: &str) -> Vec<Vec<String>> {
    let text = table_data(name).unwrap_or_else(|e| panic!("{e}"));
    text.lines().filter_map(crate::template::fields).collect()
}

/// Short description of each table.
pub fn table_title(id: &str) -> &'static str {
    match id {
        "ov" => "highest root in fundamental weights",
        "1" => "non-absolutely simple algebras",
        "2" => "contact gradations of real forms",
        "3" => "short-root triple of g2(2)",
        "4" => "even nilpotent sl2 of symmetric type",
        "5" => "depth one, elliptic, Hermitian",
        "6" => "depth one, elliptic, pseudo-Hermitian",
        "7" => "depth one, hyperbolic",
        "8" => "depth one, complex",
        "9" => "short structures on exceptional algebras",
        "11" => "symmetric subalgebras of classical algebras",
        _ => "",
    }
}

/// Table ids in report order.
pub const TABLE_IDS: [&str; 11] = ["ov", "1", "2", "3", "4", "5", "6", "7", "8", "9", "11"];

/// Run one table driver. Tables 2 and 3 share a driver, as do 5 to 8; the
/// returned report is filtered to the requested id.
pub fn verify_table(id: &str) -> Result<TableReport, String> {
    let filter = |mut r: TableReport, id: &str| {
        r.rows.retain(|row| row.table_id == id);
        r.table_id = id.into();
        r.title = table_title(id).into();
        r
    };
    Ok(match id {
        "ov" => verify_table_ov(),
        "1" => verify_table1(),
        "2" | "3" => filter(verify_table2_3(), id),
        "4" => verify_table4(),
        "5" | "6" | "7" | "8" => filter(verify_tables5to8(&tables5to8::default_grid()), id),
        "9" => verify_table9_exclusion(),
        "11" => verify_table11(),
        _ => return Err(format!("unknown table `{id}`; known: {}", TABLE_IDS.join(", "))),
    })
}

/// Every table, in order; independent drivers run in parallel.
pub fn verify_all() -> Vec<TableReport> {
    use rayon::prelude::*;
    let drivers: Vec<fn() -> TableReport> = vec![
        verify_table_ov,
        verify_table1,
        verify_table2_3,
        verify_table4,
        || verify_tables5to8(&tables5to8::default_grid()),
        verify_table9_exclusion,
        verify_table11,
    ];
    let mut reports: Vec<TableReport> = drivers.par_iter().map(|f| f()).collect();
    let mut out = Vec::new();
    for id in TABLE_IDS {
        for r in reports.iter_mut() {
            if r.rows.iter().any(|row| row.table_id == id) {
                let mut split = r.clone();
                split.rows.retain(|row| row.table_id == id);
                split.table_id = id.into();
                split.title = table_title(id).into();
                out.push(split);
            }
        }
    }
    out
}

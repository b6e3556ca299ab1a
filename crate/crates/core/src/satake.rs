//! Satake diagrams and the Djoković consistency test.
//!
//! Diagrams come from a text dataset (`data/satake.txt`, embedded at build
//! time) that encodes each family by predicates on the rank, the node index
//! and the family parameters. See the header of that file for the format.

use crate::rootsys::{
    contact_grading_node_set, depth_one_node_set, opposition_involution, RootSystem, Series,
    TypeLabel,
};
use crate::template;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

/// The dataset shipped with the crate.
pub const BUILTIN_DATASET: &str = include_str!("../data/satake.txt");

#[derive(Debug, thiserror::Error)]
pub enum SatakeError {
    #[error("dataset line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("dataset line {line}: expression {msg}")]
    Eval { line: usize, msg: String },
    #[error("diagram {name}: {msg}")]
    Invalid { name: String, msg: String },
    #[error("unknown real form `{0}`")]
    Unknown(String),
    #[error("reading dataset: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Color {
    White,
    Black,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SatakeDiagram {
    pub underlying: TypeLabel,
    /// Cartan class (`AI`, `BDI`, `EIV`, ..., or `compact`).
    pub class: String,
    pub real_form_name: String,
    /// Node colors by 1-based Bourbaki index.
    pub colors: BTreeMap<usize, Color>,
    /// Arrows as pairs `(a, b)` with `a < b`.
    pub arrows: BTreeSet<(usize, usize)>,
    pub parameters: BTreeMap<String, i64>,
    /// Name of an isomorphic form listed under the same type, if any.
    pub iso: Option<String>,
    pub source: String,
}

impl SatakeDiagram {
    pub fn is_white(&self, node: usize) -> bool {
        self.colors.get(&node) == Some(&Color::White)
    }

    pub fn is_compact(&self) -> bool {
        self.colors.values().all(|c| *c == Color::Black)
    }

    /// Number of white-node orbits under the arrows.
    pub fn real_rank(&self) -> usize {
        let white = self.colors.values().filter(|c| **c == Color::White).count();
        white - self.arrows.len()
    }

    /// The diagram involution: arrows on white nodes, the opposition involution of
    /// the black subdiagram on black nodes.
    pub fn diagram_involution(&self) -> BTreeMap<usize, usize> {
        let rs = RootSystem::from_label(self.underlying);
        let black: BTreeSet<usize> = self
            .colors
            .iter()
            .filter(|(_, c)| **c == Color::Black)
            .map(|(i, _)| *i)
            .collect();
        let mut out = opposition_involution(&rs.cartan, &black);
        for (&i, c) in &self.colors {
            if *c == Color::White {
                out.insert(i, i);
            }
        }
        for &(a, b) in &self.arrows {
            out.insert(a, b);
            out.insert(b, a);
        }
        out
    }

    /// Whether the form has a compact Cartan subalgebra: the diagram involution is
    /// the opposition involution of the whole diagram.
    pub fn is_inner_type(&self) -> bool {
        let rs = RootSystem::from_label(self.underlying);
        let all: BTreeSet<usize> = (1..=rs.rank()).collect();
        self.diagram_involution() == opposition_involution(&rs.cartan, &all)
    }

    fn validate(&self) -> Result<(), SatakeError> {
        let bad = |msg: String| {
            Err(SatakeError::Invalid {
                name: self.real_form_name.clone(),
                msg,
            })
        };
        let mut seen = BTreeSet::new();
        for &(a, b) in &self.arrows {
            if !self.is_white(a) || !self.is_white(b) {
                return bad(format!("arrow {a}<->{b} touches a black node"));
            }
            if !seen.insert(a) || !seen.insert(b) {
                return bad(format!("arrows at {a} or {b} are not a matching"));
            }
        }
        Ok(())
    }

    /// Text rendering: one glyph per node (`o` white, `*` black), then edges and arrows.
    pub fn ascii(&self) -> String {
        let rs = RootSystem::from_label(self.underlying);
        let n = self.underlying.rank;
        let glyphs: Vec<String> = (1..=n)
            .map(|i| format!("{}{}", if self.is_white(i) { "o" } else { "*" }, i))
            .collect();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let m = rs.cartan[i][j] * rs.cartan[j][i];
                if m > 0 {
                    edges.push(format!("{}{}{}", i + 1, "-".repeat(m as usize), j + 1));
                }
            }
        }
        let arrows: Vec<String> = self.arrows.iter().map(|(a, b)| format!("{a}<->{b}")).collect();
        format!(
            "{} [{}, {}]\nnodes:  {}\nedges:  {}\narrows: {}\n",
            self.real_form_name,
            self.underlying,
            self.class,
            glyphs.join(" "),
            edges.join(" "),
            if arrows.is_empty() { "none".into() } else { arrows.join(" ") }
        )
    }
}

#[derive(Clone, Debug)]
struct Record {
    line: usize,
    class: String,
    series: Series,
    params: Vec<String>,
    constraint: String,
    black: String,
    arrows: Vec<(String, String)>,
    name: String,
    iso: Option<String>,
    source: String,
}

/// Parsed dataset.
#[derive(Clone, Debug)]
pub struct SatakeDb {
    records: Vec<Record>,
}

impl Record {
    fn err(&self, msg: String) -> SatakeError {
        SatakeError::Eval {
            line: self.line,
            msg,
        }
    }

    fn eval_bool(&self, expr: &str, vars: &[(String, i64)]) -> Result<bool, SatakeError> {
        template::eval_bool(expr, vars).map_err(|m| self.err(m))
    }

    fn eval_int(&self, expr: &str, vars: &[(String, i64)]) -> Result<i64, SatakeError> {
        template::eval_int(expr, vars).map_err(|m| self.err(m))
    }

    fn render(&self, t: &str, vars: &[(String, i64)]) -> Result<String, SatakeError> {
        template::render(t, vars).map_err(|m| self.err(m))
    }

    /// All members of the family at rank `n`.
    fn instances(&self, n: usize) -> Result<Vec<SatakeDiagram>, SatakeError> {
        let bound = 2 * n as i64 + 2;
        let mut assignments: Vec<Vec<(String, i64)>> = vec![vec![]];
        for p in &self.params {
            assignments = assignments
                .into_iter()
                .flat_map(|a| {
                    (0..=bound).map(move |v| {
                        let mut a = a.clone();
                        a.push((p.clone(), v));
                        a
                    })
                })
                .collect();
        }
        let mut out = Vec::new();
        for a in assignments {
            let mut vars: template::Vars = vec![("n".into(), n as i64)];
            vars.extend(a.iter().cloned());
            let ctx = &vars;
            if !self.eval_bool(&self.constraint, ctx)? {
                continue;
            }
            let label = TypeLabel::new(self.series, n).map_err(|e| SatakeError::Parse {
                line: self.line,
                msg: e.to_string(),
            })?;
            let mut colors = BTreeMap::new();
            let mut arrows = BTreeSet::new();
            for i in 1..=n {
                let mut v = vars.clone();
                v.push(("i".into(), i as i64));
                let ctx = &v;
                let black = self.eval_bool(&self.black, ctx)?;
                colors.insert(i, if black { Color::Black } else { Color::White });
                for (cond, partner) in &self.arrows {
                    if self.eval_bool(cond, ctx)? {
                        let j = self.eval_int(partner, ctx)?;
                        if j < 1 || j as usize > n || j as usize == i {
                            return Err(SatakeError::Parse {
                                line: self.line,
                                msg: format!("arrow partner {j} of node {i} out of range"),
                            });
                        }
                        let j = j as usize;
                        arrows.insert((i.min(j), i.max(j)));
                    }
                }
            }
            let d = SatakeDiagram {
                underlying: label,
                class: self.class.clone(),
                real_form_name: self.render(&self.name, ctx)?,
                colors,
                arrows,
                parameters: a.into_iter().collect(),
                iso: match &self.iso {
                    Some(t) => Some(self.render(t, ctx)?),
                    None => None,
                },
                source: self.source.clone(),
            };
            d.validate()?;
            out.push(d);
        }
        Ok(out)
    }
}

impl SatakeDb {
    pub fn parse(text: &str) -> Result<Self, SatakeError> {
        let mut records = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let s = raw.trim();
            if s.is_empty() || s.starts_with('#') {
                continue;
            }
            let f: Vec<&str> = s.split(" | ").map(str::trim).collect();
            if f.len() != 9 {
                return Err(SatakeError::Parse {
                    line,
                    msg: format!("expected 9 fields, found {}", f.len()),
                });
            }
            let series = f[1]
                .chars()
                .next()
                .filter(|_| f[1].len() == 1)
                .and_then(Series::from_letter)
                .ok_or_else(|| SatakeError::Parse {
                    line,
                    msg: format!("unknown series `{}`", f[1]),
                })?;
            let params = if f[2] == "-" {
                vec![]
            } else {
                f[2].split(',').map(|p| p.trim().to_string()).collect()
            };
            let arrows = if f[5] == "-" {
                vec![]
            } else {
                f[5].split(';')
                    .map(|rule| {
                        let (c, p) = rule.split_once("=>").ok_or_else(|| SatakeError::Parse {
                            line,
                            msg: format!("arrow rule `{rule}` lacks `=>`"),
                        })?;
                        Ok((c.trim().to_string(), p.trim().to_string()))
                    })
                    .collect::<Result<Vec<_>, SatakeError>>()?
            };
            records.push(Record {
                line,
                class: f[0].into(),
                series,
                params,
                constraint: f[3].into(),
                black: f[4].into(),
                arrows,
                name: f[6].into(),
                iso: (f[7] != "-").then(|| f[7].to_string()),
                source: f[8].into(),
            });
        }
        Ok(SatakeDb { records })
    }

    pub fn builtin() -> Self {
        Self::parse(BUILTIN_DATASET).expect("embedded dataset parses")
    }

    /// Loads `satake.txt` from `dir`.
    pub fn load_dir(dir: &Path) -> Result<Self, SatakeError> {
        Self::parse(&std::fs::read_to_string(dir.join("satake.txt"))?)
    }

    /// `CONTACTGRAD_DATA` if set, the embedded dataset otherwise.
    pub fn from_env() -> Result<Self, SatakeError> {
        match std::env::var_os("CONTACTGRAD_DATA") {
            Some(d) => Self::load_dir(Path::new(&d)),
            None => Ok(Self::builtin()),
        }
    }

    /// Every diagram of the given type, in dataset order.
    pub fn diagrams(&self, t: TypeLabel) -> Result<Vec<SatakeDiagram>, SatakeError> {
        let mut out = Vec::new();
        for r in self.records.iter().filter(|r| r.series == t.series) {
            out.extend(r.instances(t.rank)?);
        }
        Ok(out)
    }

    /// Every diagram of every type of rank at most `max_rank`.
    pub fn all(&self, max_rank: usize) -> Result<Vec<SatakeDiagram>, SatakeError> {
        let mut out = Vec::new();
        for t in TypeLabel::all_up_to(max_rank) {
            out.extend(self.diagrams(t)?);
        }
        Ok(out)
    }

    /// Number of real forms up to isomorphism, compact form included.
    pub fn real_form_count(&self, t: TypeLabel) -> Result<usize, SatakeError> {
        Ok(self.diagrams(t)?.iter().filter(|d| d.iso.is_none()).count())
    }

    /// Finds a form by name (or by Cartan class when that is unique), searching ranks up to `max_rank`.
    pub fn lookup(&self, name: &str, max_rank: usize) -> Result<SatakeDiagram, SatakeError> {
        let key = normalize(name);
        let all = self.all(max_rank)?;
        if let Some(d) = all.iter().find(|d| normalize(&d.real_form_name) == key) {
            return Ok(d.clone());
        }
        let by_class: Vec<&SatakeDiagram> = all.iter().filter(|d| normalize(&d.class) == key).collect();
        match by_class.as_slice() {
            [d] => Ok((*d).clone()),
            _ => Err(SatakeError::Unknown(name.into())),
        }
    }
}

fn normalize(s: &str) -> String {
    s.chars()
        .filter(|c| !c.is_whitespace() && *c != '_')
        .flat_map(char::to_lowercase)
        .collect()
}

/// All nodes of `pi1` are white and no arrow joins `pi1` to its complement.
pub fn djokovic_consistent(d: &SatakeDiagram, pi1: &BTreeSet<usize>) -> bool {
    pi1.iter().all(|i| d.is_white(*i))
        && d
            .arrows
            .iter()
            .all(|(a, b)| pi1.contains(a) == pi1.contains(b))
}

/// Noncompact forms consistent with the contact gradation, over all types of rank at most `max_rank`.
pub fn enumerate_contact_real_forms(
    db: &SatakeDb,
    max_rank: usize,
) -> Result<Vec<SatakeDiagram>, SatakeError> {
    let mut out = Vec::new();
    for t in TypeLabel::all_up_to(max_rank) {
        let pi1 = contact_grading_node_set(&RootSystem::from_label(t));
        for d in db.diagrams(t)? {
            if !d.is_compact() && djokovic_consistent(&d, &pi1) {
                out.push(d);
            }
        }
    }
    Ok(out)
}

/// How the grading element `d` of a depth-one gradation sits in a real form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum DepthOneKind {
    /// `d` lies in the real form: real eigenvalues, center summand `R`.
    Hyperbolic,
    /// `i d` lies in the real form: imaginary eigenvalues, center summand `so2`/`u1`.
    Elliptic,
}

#[derive(Clone, Debug, Serialize)]
pub struct DepthOneForm {
    pub diagram: SatakeDiagram,
    /// 1-based Bourbaki node with Dynkin mark 1.
    pub node: usize,
    pub kind: DepthOneKind,
}

/// Real forms carrying a depth-one gradation, over all types of rank at most `max_rank`.
///
/// `Hyperbolic`: the singleton `{node}` passes [`djokovic_consistent`] (noncompact forms only).
/// `Elliptic`: the form is of inner type, so every coweight is conjugate into `i t` for a
/// compact Cartan `t`; this includes the compact form.
pub fn enumerate_depth_one_real_forms(
    db: &SatakeDb,
    max_rank: usize,
) -> Result<Vec<DepthOneForm>, SatakeError> {
    let mut out = Vec::new();
    for t in TypeLabel::all_up_to(max_rank) {
        let nodes = depth_one_node_set(&RootSystem::from_label(t));
        for d in db.diagrams(t)? {
            let inner = d.is_inner_type();
            for &node in &nodes {
                if !d.is_compact() && djokovic_consistent(&d, &BTreeSet::from([node])) {
                    out.push(DepthOneForm {
                        diagram: d.clone(),
                        node,
                        kind: DepthOneKind::Hyperbolic,
                    });
                }
                if inner {
                    out.push(DepthOneForm {
                        diagram: d.clone(),
                        node,
                        kind: DepthOneKind::Elliptic,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Known numbers of real forms (compact included, up to isomorphism) for ranks up to 8.
pub fn census_count(t: TypeLabel) -> Option<usize> {
    let n = t.rank;
    let table: &[(Series, usize, usize)] = &[
        (Series::A, 1, 2),
        (Series::A, 2, 3),
        (Series::A, 3, 5),
        (Series::A, 4, 4),
        (Series::A, 5, 6),
        (Series::A, 6, 5),
        (Series::A, 7, 7),
        (Series::A, 8, 6),
        (Series::B, 2, 3),
        (Series::B, 3, 4),
        (Series::B, 4, 5),
        (Series::B, 5, 6),
        (Series::B, 6, 7),
        (Series::B, 7, 8),
        (Series::B, 8, 9),
        (Series::C, 3, 3),
        (Series::C, 4, 4),
        (Series::C, 5, 4),
        (Series::C, 6, 5),
        (Series::C, 7, 5),
        (Series::C, 8, 6),
        (Series::D, 4, 5),
        (Series::D, 5, 7),
        (Series::D, 6, 8),
        (Series::D, 7, 9),
        (Series::D, 8, 10),
        (Series::E, 6, 5),
        (Series::E, 7, 4),
        (Series::E, 8, 3),
        (Series::F, 4, 3),
        (Series::G, 2, 2),
    ];
    table
        .iter()
        .find(|(s, r, _)| *s == t.series && *r == n)
        .map(|(_, _, c)| *c)
}

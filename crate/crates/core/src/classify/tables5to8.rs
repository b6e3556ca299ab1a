use super::labels::{label_dims, Dims};
use super::table2::parse_grid;
use super::{table_lines, table_title, TableReport, TableRow};
use crate::contactize::{build_contactization, verify_symplectic_symmetric, SymplecticCertificate};
use crate::exact::{q, SVec};
use crate::liealg::matrix::{DMat, FormShape, Quat};
use crate::liealg::{fundamental_coweight, realified_element};
use crate::registry::{build_with, matrix_element, parse_algebra, AlgebraSpec, Built};
use crate::rootsys::RootSystem;
use crate::satake::{enumerate_depth_one_real_forms, DepthOneKind, SatakeDb};
use crate::template::{render, Vars};
use num::{Signed, Zero};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

/// Parameter points per row id.
#[derive(Clone, Debug, Default)]
pub struct SampleGrid {
    pub points: BTreeMap<String, Vec<Vars>>,
}

impl SampleGrid {
    pub fn total(&self) -> usize {
        self.points.values().map(Vec::len).sum()
    }
}

/// The grid recorded in the data file.
pub fn default_grid() -> SampleGrid {
    let mut points = BTreeMap::new();
    for f in table_lines("tables5to8") {
        if f.len() == 7 && f[4] != "satake" && f[4] != "unrealized" {
            points.insert(row_id(&f), parse_grid(&f[6]));
        }
    }
    SampleGrid { points }
}

fn row_id(f: &[String]) -> String {
    format!("{}:{}", f[0], f[1])
}

fn unit_quat(u: &str) -> Result<Quat, String> {
    Ok(match u {
        "1" => Quat::one(),
        "i" => Quat::i(),
        "j" => Quat::j(),
        "k" => Quat::k(),
        _ => return Err(format!("unknown unit `{u}`")),
    })
}

/// `a^m` items into a flat list.
fn expand(items: &str) -> Result<Vec<i64>, String> {
    let mut out = Vec::new();
    for it in items.split(',') {
        let it = it.trim();
        let (v, m) = it.split_once('^').unwrap_or((it, "1"));
        let v: i64 = v.trim().parse().map_err(|_| format!("bad entry `{it}`"))?;
        let m: usize = m.trim().parse().map_err(|_| format!("bad count `{it}`"))?;
        out.extend(std::iter::repeat_n(v, m));
    }
    Ok(out)
}

fn call<'a>(s: &'a str, name: &str) -> Option<&'a str> {
    s.strip_prefix(name)?.strip_prefix('(')?.strip_suffix(')')
}

fn two(args: &str) -> Result<(usize, usize), String> {
    let (a, b) = args.split_once(',').ok_or("expected two indices")?;
    let p = |x: &str| x.trim().parse::<usize>().map_err(|_| format!("bad index `{x}`"));
    Ok((p(a)?, p(b)?))
}

/// Matrix of `xi` from a description such as `diag(i; 2^1, -1^2)` or `rot(0,1)`,
/// of size `n` over a division algebra of dimension `d`.
pub fn xi_matrix(spec: &str, n: usize, d: usize) -> Result<DMat, String> {
    let one = |i, j, c: i64| DMat::unit(n, d, i, j, Quat::real(q(c)));
    let spec = spec.trim();
    let m = if let Some(args) = call(spec, "diag") {
        let (u, items) = args.split_once(';').ok_or("diag(u; entries)")?;
        let u = unit_quat(u.trim())?;
        let vals = expand(items)?;
        if vals.len() != n {
            return Err(format!("diag has {} entries for size {n}", vals.len()));
        }
        let mut m = DMat::zero(n, d);
        for (i, v) in vals.into_iter().enumerate() {
            m.set(i, i, u.scale(&q(v)));
        }
        m
    } else if let Some(u) = call(spec, "scalar") {
        let u = unit_quat(u.trim())?;
        let mut m = DMat::zero(n, d);
        for i in 0..n {
            m.set(i, i, u.clone());
        }
        m
    } else if let Some(args) = call(spec, "rot") {
        let (a, b) = two(args)?;
        one(a, b, 1).sub(&one(b, a, 1))
    } else if let Some(args) = call(spec, "sym") {
        let (a, b) = two(args)?;
        one(a, b, 1).add(&one(b, a, 1))
    } else if spec == "pairs" {
        (0..n / 2).fold(DMat::zero(n, d), |m, i| m.add(&one(2 * i, 2 * i + 1, 1)).sub(&one(2 * i + 1, 2 * i, 1)))
    } else if let Some(k) = call(spec, "cplx") {
        let k: usize = k.trim().parse().map_err(|_| "cplx(m)")?;
        (0..k).fold(DMat::zero(n, d), |m, i| m.add(&one(i, i + k, 1)).sub(&one(i + k, i, 1)))
    } else if let Some(p) = call(spec, "omega") {
        // Omega has +1 at (i, n-1-i) for i < n/2 and -1 below; xi = -Omega diag(eps).
        let p: usize = p.trim().parse().map_err(|_| "omega(m)")?;
        let half = n / 2;
        let eps = |j: usize| if j.min(n - 1 - j) < p { 1 } else { -1 };
        let mut m = DMat::zero(n, d);
        for i in 0..n {
            let j = n - 1 - i;
            let omega = if i < half { 1 } else { -1 };
            m.set(i, j, Quat::real(q(-omega * eps(j))));
        }
        m
    } else {
        return Err(format!("unknown xi `{spec}`"));
    };
    Ok(m)
}

pub fn chevalley_xi(b: &Built, spec: &str) -> Result<SVec, String> {
    let node: usize = call(spec.trim(), "coweight")
        .ok_or_else(|| format!("expected coweight(i), got `{spec}`"))?
        .trim()
        .parse()
        .map_err(|_| "bad node")?;
    let rs = b.root_system.as_ref().ok_or("not a Chevalley algebra")?;
    let w = fundamental_coweight(rs, node - 1);
    Ok(match b.spec {
        AlgebraSpec::Realified(_) => realified_element(b.algebra.dim() / 2, &w, &SVec::zero()),
        _ => w,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct RowCertificate {
    pub xi: String,
    pub k: Dims,
    pub b_xi_xi: String,
    pub symplectic: SymplecticCertificate,
}

/// Whether the center line of `k` is `R` (or `C` for complex algebras, with real `xi`)
/// rather than `so(2)`/`u(1)`: decided by the sign of `B(xi, xi)`.
fn expect_hyperbolic(k_label: &str) -> bool {
    matches!(k_label.rsplit('+').next().map(str::trim), Some("R") | Some("C"))
}

fn realized_row(table: &str, f: &[String], v: &Vars) -> TableRow {
    let g_name = render(&f[2], v).expect("template");
    let k_label = render(&f[3], v).expect("template");
    let xi_spec = render(&f[5], v).expect("template");
    let key = format!("{g_name}: k = {k_label}");
    let expected_k = match label_dims(&k_label) {
        Ok(d) => d,
        Err(e) => return TableRow::new(table, key).with_status(false).note(e),
    };
    let hyperbolic = expect_hyperbolic(&k_label);
    let run = || -> Result<(RowCertificate, usize), String> {
        let spec = parse_algebra(&g_name)?;
        let shape = if f[4] == "diag" { FormShape::Diagonal } else { FormShape::Hyperbolic };
        let b = build_with(&spec, shape)?;
        let xi = if f[4] == "chevalley" {
            chevalley_xi(&b, &xi_spec)?
        } else {
            let (n, d) = b.form.as_ref().ok_or("not a matrix form")?.name.matrix_shape();
            matrix_element(&b, &xi_matrix(&xi_spec, n, d)?)?
        };
        let l = &b.algebra;
        let c = build_contactization(l, &xi).map_err(|e| e.to_string())?;
        let cert = verify_symplectic_symmetric(l, &c);
        let (_, neg, _) = l.killing_inertia(&c.k);
        let k = Dims {
            dim: c.k.dim(),
            compact: neg,
            center: l.center_of(&c.k).dim(),
        };
        Ok((
            RowCertificate {
                xi: xi_spec.clone(),
                k,
                b_xi_xi: crate::exact::fmt_q(&l.killing(&xi, &xi)),
                symplectic: cert,
            },
            l.dim(),
        ))
    };
    let kind = |h: bool| if h { "B(xi,xi) > 0" } else { "B(xi,xi) < 0" };
    let expected = format!(
        "symplectic symmetric, k: {expected_k}, dim h = {}, dim p = dim g - dim k, {}",
        expected_k.dim.saturating_sub(1),
        kind(hyperbolic)
    );
    match run() {
        Ok((c, dim_g)) => {
            let s = &c.symplectic;
            let bxx: crate::exact::Q = c.b_xi_xi.parse().unwrap_or_else(|_| Zero::zero());
            let computed = format!(
                "{}, k: {}, dim h = {}, dim p {} dim g - dim k, {}",
                if s.is_symplectic_symmetric { "symplectic symmetric" } else { "not symplectic symmetric" },
                c.k,
                s.dim_h,
                if s.dim_p + s.dim_k == dim_g { "=" } else { "!=" },
                if bxx.is_positive() {
                    kind(true)
                } else if bxx.is_negative() {
                    kind(false)
                } else {
                    "B(xi,xi) = 0"
                }
            );
            TableRow::new(table, key).compare(computed, expected).cert(&c)
        }
        Err(e) => TableRow::new(table, key).with_status(false).note(e),
    }
}

fn satake_row(table: &str, f: &[String], forms: &[(String, usize, DepthOneKind)]) -> TableRow {
    let key = format!("{}: k = {}", f[2], f[3]);
    let node: usize = f[5].parse().expect("node");
    let kind = match f[6].as_str() {
        "hyperbolic" => DepthOneKind::Hyperbolic,
        _ => DepthOneKind::Elliptic,
    };
    let found = forms.iter().any(|(n, i, k)| n == &f[2] && *i == node && *k == kind);
    let db = SatakeDb::from_env().ok();
    let levi = db
        .and_then(|db| db.lookup(&f[2], 8).ok())
        .map(|d| RootSystem::from_label(d.underlying).levi_dim(&BTreeSet::from([node])));
    let k_dim = label_dims(&f[3]).map(|d| d.dim).ok();
    let consistent = found && levi.is_some() && levi == k_dim;
    let row = TableRow::new(table, key);
    if consistent {
        row.data_only(format!(
            "no bracket-level realization; {} carries a depth-one gradation at node {node} of {:?} kind, \
             and dim k = {} is the Levi dimension",
            f[2],
            kind,
            k_dim.unwrap_or(0)
        ))
    } else {
        let mut row = row.with_status(false);
        row.computed = format!("depth-one {kind:?} at node {node}: {found}; Levi dim {levi:?}");
        row.expected = format!("true; Levi dim {k_dim:?}");
        row
    }
}

/// Tables 5 to 8, sampled on `grid`. Row ids absent from the grid are skipped.
pub fn verify_tables5to8(grid: &SampleGrid) -> TableReport {
    use rayon::prelude::*;
    let forms: Vec<(String, usize, DepthOneKind)> = SatakeDb::from_env()
        .and_then(|db| enumerate_depth_one_real_forms(&db, 8))
        .map(|v| v.into_iter().map(|d| (d.diagram.real_form_name, d.node, d.kind)).collect())
        .unwrap_or_default();
    let lines = table_lines("tables5to8");
    let mut jobs: Vec<(usize, &Vec<String>, Vars)> = Vec::new();
    let mut fixed: Vec<(usize, TableRow)> = Vec::new();
    for (idx, f) in lines.iter().enumerate() {
        let table = f[0].as_str();
        match f[4].as_str() {
            "satake" => fixed.push((idx, satake_row(table, f, &forms))),
            "unrealized" => fixed.push((
                idx,
                TableRow::new(table, format!("{}: k = {}", f[2], f[3]).replace(['{', '}'], "")).data_only(f[5].clone()),
            )),
            _ => {
                for v in grid.points.get(&row_id(f)).into_iter().flatten() {
                    jobs.push((idx, f, v.clone()));
                }
            }
        }
    }
    let mut rows: Vec<(usize, TableRow)> = jobs
        .par_iter()
        .map(|(idx, f, v)| (*idx, realized_row(&f[0], f, v)))
        .collect();
    rows.extend(fixed);
    rows.sort_by_key(|a| (a.1.table_id.clone(), a.0));
    TableReport::new("5", table_title("5"), rows.into_iter().map(|(_, r)| r).collect())
}

use super::labels::{label_dims, Dims};
use super::table2::{parse_grid, summarize, TripleSummary};
use super::{table_lines, table_title, TableReport, TableRow};
use crate::exact::q;
use crate::liealg::matrix::{DMat, FormShape, Quat};
use crate::registry::{build_with, matrix_element, parse_algebra, Built};
use crate::sl2kit::{
    ad_h_gradation, canonical_decomposition, verify_triple, vinberg_short_check, ClassicalKind,
    Sl2Triple,
};
use crate::template::{eval_bool, render, Vars};
use std::collections::BTreeMap;

fn unit(b: &Built, i: usize, j: usize, c: i64) -> DMat {
    let f = b.form.as_ref().expect("matrix form");
    DMat::unit(f.n(), f.d(), i, j, Quat::real(q(c)))
}

fn triple_from(b: &Built, h: DMat, e: DMat, f: DMat) -> Result<Sl2Triple, String> {
    let el = |m: &DMat| matrix_element(b, m);
    verify_triple(&b.algebra, &el(&h)?, &el(&e)?, &el(&f)?).map_err(|e| e.to_string())
}

/// `h = diag(2,0,-2)`, `e = E01 + E12`, `f = 2(E10 + E21)`; lies in `sl3(R)` and in
/// `su(1,2)` for the antidiagonal form of signature (1,2).
pub fn principal3(b: &Built) -> Result<Sl2Triple, String> {
    let u = |i, j, c| unit(b, i, j, c);
    let h = u(0, 0, 2).add(&u(2, 2, -2));
    let e = u(0, 1, 1).add(&u(1, 2, 1));
    let f = u(1, 0, 2).add(&u(2, 1, 2));
    triple_from(b, h, e, f)
}

/// so(1,2) on coordinates `(0, p, p+1)` of `so(p,q)` with diagonal form `(+^p, -^q)`:
/// `h = 2 K1`, `e = K2 + R`, `f = K2 - R` with boosts `K1, K2` and rotation `R`.
pub fn vector_so12(b: &Built, p: usize) -> Result<Sl2Triple, String> {
    let u = |i, j, c| unit(b, i, j, c);
    let (a, bb, c) = (0, p, p + 1);
    let k1 = u(a, bb, 1).add(&u(bb, a, 1));
    let k2 = u(a, c, 1).add(&u(c, a, 1));
    let r = u(bb, c, 1).sub(&u(c, bb, 1));
    triple_from(b, k1.scale(&q(2)), k2.add(&r), k2.sub(&r))
}

/// `h = diag(1,-1,1,-1)`, `e = E01 + E23`, `f = E10 + E32` in `sl4(R)`: partition (2,2).
pub fn sl4_22(b: &Built) -> Result<Sl2Triple, String> {
    let u = |i, j, c| unit(b, i, j, c);
    let h = u(0, 0, 1).add(&u(1, 1, -1)).add(&u(2, 2, 1)).add(&u(3, 3, -1));
    triple_from(b, h, u(0, 1, 1).add(&u(2, 3, 1)), u(1, 0, 1).add(&u(3, 2, 1)))
}

/// Highest weight to multiplicity of `V + W` as an `s`-module.
pub(crate) fn vw_module(b: &Built, t: &Sl2Triple) -> Result<BTreeMap<i64, usize>, String> {
    let l = &b.algebra;
    let g = ad_h_gradation(l, &t.h).map_err(|e| e.to_string())?;
    let vw = canonical_decomposition(l, t).vw();
    let d = |k: i64| g.piece(k).intersect(&vw).dim();
    let mut out = BTreeMap::new();
    for k in 0..=g.depth() {
        if d(k) > d(k + 2) {
            out.insert(k, d(k) - d(k + 2));
        }
    }
    Ok(out)
}

pub(crate) fn fmt_module(m: &BTreeMap<i64, usize>) -> String {
    m.iter().map(|(k, v)| format!("{k}:{v}")).collect::<Vec<_>>().join(" ")
}

fn family_row(f: &[String], vars: &Vars) -> TableRow {
    let g_name = render(&f[0], vars).expect("template");
    let sz_label = render(&f[1], vars).expect("template");
    let key = format!("({g_name}, {sz_label})");
    if f[4] != "-" && !eval_bool(&f[4], vars).expect("condition") {
        return TableRow::new("4", key).with_status(false).note("grid point violates the row conditions");
    }
    let module = render(&f[5], vars)
        .expect("template")
        .split_whitespace()
        .filter(|t| !t.ends_with(":0"))
        .collect::<Vec<_>>()
        .join(" ");
    let expected_sz = label_dims(&sz_label).expect("s+z label");
    let expected = format!("even, short, symmetric, depth {}, s+z: {expected_sz}, V+W: {module}", f[3]);
    let run = || -> Result<(TripleSummary, Dims, String), String> {
        let spec = parse_algebra(&g_name)?;
        let (b, t) = match f[6].as_str() {
            "principal3" => {
                let b = build_with(&spec, FormShape::Hyperbolic)?;
                let t = principal3(&b)?;
                (b, t)
            }
            "vector" => {
                let b = build_with(&spec, FormShape::Diagonal)?;
                let p = vars.iter().find(|(k, _)| k == "p").map(|(_, v)| *v as usize).ok_or("no p")?;
                let t = vector_so12(&b, p)?;
                (b, t)
            }
            other => return Err(format!("unknown embedding {other}")),
        };
        let s = summarize(&b, &t)?;
        let cd = canonical_decomposition(&b.algebra, &t);
        let n = cd.n();
        let (_, neg, _) = b.algebra.killing_inertia(&n);
        let sz = Dims {
            dim: n.dim(),
            compact: neg,
            center: b.algebra.center_of(&n).dim(),
        };
        Ok((s, sz, fmt_module(&vw_module(&b, &t)?)))
    };
    match run() {
        Ok((s, sz, m)) => {
            let g = &s.eigenvalues;
            let even = g.iter().all(|k| k % 2 == 0);
            let short = g.iter().all(|k| k.abs() <= 4);
            let depth = s.contact.depth.to_string();
            let ok = even && short && s.symmetric.is_symmetric && depth == f[3] && sz == expected_sz && m == module;
            let mut row = TableRow::new("4", key).cert(&s);
            row.computed = format!(
                "{}, {}, {}, depth {depth}, s+z: {sz}, V+W: {m}",
                if even { "even" } else { "odd" },
                if short { "short" } else { "not short" },
                if s.symmetric.is_symmetric { "symmetric" } else { "not symmetric" },
            );
            row.expected = expected;
            row.with_status(ok)
        }
        Err(e) => TableRow::new("4", key).with_status(false).note(e),
    }
}

fn coincidence_row(f: &[String]) -> TableRow {
    let run = || -> Result<(String, String), String> {
        let so = build_with(&parse_algebra(&f[1])?, FormShape::Diagonal)?;
        let sl = build_with(&parse_algebra(&f[2])?, FormShape::Hyperbolic)?;
        let a = summarize(&so, &vector_so12(&so, 3)?)?;
        let b = summarize(&sl, &sl4_22(&sl)?)?;
        let shape = |s: &TripleSummary| {
            format!("z {} V {} W {} eigenvalues {:?}", s.z.dim, s.dim_v, s.dim_w, s.eigenvalues)
        };
        Ok((shape(&a), shape(&b)))
    };
    let key = format!("{} vector so(1,2) vs {} partition (2,2)", f[1], f[2]);
    match run() {
        Ok((a, b)) => TableRow::new("4", key).compare(a, b),
        Err(e) => TableRow::new("4", key).with_status(false).note(e),
    }
}

fn partition_row(f: &[String]) -> TableRow {
    let kind = match f[1].as_str() {
        "sl" => ClassicalKind::Sl,
        "so" => ClassicalKind::So,
        _ => ClassicalKind::Sp,
    };
    let parts: Vec<usize> = f[2].split(',').map(|x| x.trim().parse().expect("part")).collect();
    let verdict = match vinberg_short_check(kind, &parts) {
        Ok(true) => "Yes",
        _ => "No",
    };
    TableRow::new("4", format!("{} partition ({}) agrees with Table 11", f[1], f[2])).compare(verdict, f[3].clone())
}

pub fn verify_table4() -> TableReport {
    use rayon::prelude::*;
    let lines = table_lines("table4");
    let mut jobs: Vec<(Vec<String>, Vars)> = Vec::new();
    let mut extra = Vec::new();
    for f in &lines {
        match f[0].as_str() {
            "coincidence" => extra.push(coincidence_row(f)),
            "partition" => extra.push(partition_row(f)),
            _ => jobs.extend(parse_grid(&f[7]).into_iter().map(|v| (f.clone(), v))),
        }
    }
    let mut rows: Vec<TableRow> = jobs.par_iter().map(|(f, v)| family_row(f, v)).collect();
    rows.extend(extra);
    TableReport::new("4", table_title("4"), rows)
}

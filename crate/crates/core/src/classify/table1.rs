use super::labels::label_dims;
use super::table2::summarize;
use super::table4::{fmt_module, vw_module};
use super::{table_lines, table_title, TableReport, TableRow};
use crate::exact::{q, SVec};
use crate::liealg::{chevalley_algebra, direct_sum, realify, split_real_form, realified_element, LieAlgebra};
use crate::linalg::Subspace;
use crate::registry::{AlgebraSpec, Built};
use crate::rootsys::{RootSystem, Series, TypeLabel};
use crate::sl2kit::{canonical_decomposition, verify_triple, Sl2Triple};

// Chevalley basis of A1: e, f, h.
const E: usize = 0;
const F: usize = 1;
const H: usize = 2;

fn a1() -> (RootSystem, LieAlgebra) {
    let rs = RootSystem::from_label(TypeLabel::new(Series::A, 1).expect("A1"));
    let c = chevalley_algebra(&rs);
    (rs, c)
}

/// `sl2(R) + sl2(R)` with the diagonal triple `(h+h', e+e', f+f')`.
pub fn diagonal_case() -> Result<(Built, Sl2Triple), String> {
    let (rs, c) = a1();
    let s = split_real_form(&c).map_err(|e| e.to_string())?;
    let l = direct_sum(&s, &s).map_err(|e| e.to_string())?;
    let d = |i: usize| SVec::from_ints(&[(i, 1), (i + 3, 1)]);
    let t = verify_triple(&l, &d(H), &d(E), &d(F)).map_err(|e| e.to_string())?;
    let b = Built {
        spec: AlgebraSpec::Split(rs.type_label),
        algebra: l,
        root_system: None,
        form: None,
    };
    Ok((b, t))
}

/// Realified `sl2(C)` with the triple of the normal real form.
pub fn complex_case() -> Result<(Built, Sl2Triple), String> {
    let (rs, c) = a1();
    let l = realify(&c).map_err(|e| e.to_string())?;
    let t = verify_triple(&l, &SVec::unit(H), &SVec::unit(E), &SVec::unit(F)).map_err(|e| e.to_string())?;
    let b = Built {
        spec: AlgebraSpec::Realified(rs.type_label),
        algebra: l,
        root_system: None,
        form: None,
    };
    Ok((b, t))
}

/// Parse `h+h'`, `e-e'`, `i*f` into a vector.
fn element(s: &str) -> Result<SVec, String> {
    let s = s.trim();
    let mut out = SVec::zero();
    let mut sign = 1;
    let mut rest = s;
    loop {
        let end = rest[1..].find(['+', '-']).map(|k| k + 1).unwrap_or(rest.len());
        let (term, tail) = rest.split_at(end);
        let term = match term.strip_prefix('+') {
            Some(t) => t,
            None => match term.strip_prefix('-') {
                Some(t) => {
                    sign = -sign;
                    t
                }
                None => term,
            },
        };
        let (imag, term) = match term.strip_prefix("i*") {
            Some(t) => (true, t),
            None => (false, term),
        };
        let (prime, name) = match term.strip_suffix('\'') {
            Some(t) => (true, t),
            None => (false, term),
        };
        let base = match name {
            "e" => E,
            "f" => F,
            "h" => H,
            _ => return Err(format!("bad element `{s}`")),
        };
        let idx = base + if prime || imag { 3 } else { 0 };
        out = out.add(&SVec::unit(idx).scale(&q(sign)));
        sign = 1;
        if tail.is_empty() {
            return Ok(out);
        }
        rest = tail;
    }
}

fn span(list: &str, dim: usize) -> Result<Subspace, String> {
    let (_, body) = list.split_once('=').ok_or("expected name = list")?;
    let vecs = body.split(',').map(element).collect::<Result<Vec<_>, _>>()?;
    Ok(Subspace::span(dim, vecs))
}

fn case(name: &str) -> Result<(Built, Sl2Triple), String> {
    match name {
        "sl2(R)+sl2(R)" => diagonal_case(),
        "sl2(C)" => complex_case(),
        _ => Err(format!("no construction for `{name}`")),
    }
}

fn summary_row(f: &[String]) -> TableRow {
    let key = format!("{} ({})", f[0], f[1]);
    let run = || -> Result<String, String> {
        let (b, t) = case(&f[0])?;
        let s = summarize(&b, &t)?;
        Ok(format!(
            "symmetric {}, z: {}, V+W: {}, depth {}",
            s.symmetric.is_symmetric,
            s.z,
            fmt_module(&vw_module(&b, &t)?),
            s.contact.depth
        ))
    };
    let expected = format!(
        "symmetric true, z: {}, V+W: {}, depth {}",
        label_dims(&f[2]).expect("z label"),
        f[4],
        f[5]
    );
    match run() {
        Ok(c) => TableRow::new("1", key).compare(c, expected),
        Err(e) => TableRow::new("1", key).with_status(false).note(e),
    }
}

fn decomposition_rows(f: &[String]) -> Vec<TableRow> {
    let (b, t) = match case(&f[1]) {
        Ok(x) => x,
        Err(e) => return vec![TableRow::new("1", f[1].clone()).with_status(false).note(e)],
    };
    let cd = canonical_decomposition(&b.algebra, &t);
    let dim = b.algebra.dim();
    let mut out = Vec::new();
    for (text, computed) in [(&f[2], &cd.h_alg), (&f[3], &cd.m), (&f[4], &cd.v), (&f[5], &cd.w)] {
        let key = format!("{}: {text}", f[1]);
        let row = match span(text, dim) {
            Ok(expected) => TableRow::new("1", key).with_status(expected == *computed),
            Err(e) => TableRow::new("1", key).with_status(false).note(e),
        };
        out.push(row);
    }
    out
}

/// `V + W = i s` in realified `sl2(C)`, as an exact subspace identity.
fn i_times_s_row() -> TableRow {
    let key = "sl2(C): V+W = i s";
    match complex_case() {
        Ok((b, t)) => {
            let cd = canonical_decomposition(&b.algebra, &t);
            let i_s = Subspace::span(
                b.algebra.dim(),
                [&t.h, &t.e, &t.f].map(|x| realified_element(3, &SVec::zero(), x)),
            );
            let vw = cd.vw();
            TableRow::new("1", key).compare(format!("dim {} equal {}", vw.dim(), vw == i_s), "dim 3 equal true")
        }
        Err(e) => TableRow::new("1", key).with_status(false).note(e),
    }
}

pub fn verify_table1() -> TableReport {
    let mut rows = Vec::new();
    for f in table_lines("table1") {
        if f[0] == "decomposition" {
            rows.extend(decomposition_rows(&f));
        } else {
            rows.push(summary_row(&f));
        }
    }
    rows.push(i_times_s_row());
    TableReport::new("1", table_title("1"), rows)
}

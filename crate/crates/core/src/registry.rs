//! Algebra names used by the CLI, the examples and the table drivers.
//!
//! * `G2`, `E6`, ...: the complex algebra in a Chevalley basis;
//! * `G2-split`, `g2(2)`, `e7(7)`, ...: its split real form;
//! * `g2(C)`, `e6(C)`, `A2(C)`: the complex algebra viewed as a real one;
//! * classical matrix forms: `sl3(R)`, `sl3(C)`, `su*(4)`, `su(1,2)`, `su(3)`,
//!   `sp2(R)`, `sp(1,1)`, `sp(2)`, `so(2,3)`, `so(5)`, `so*(8)`, `so5(C)`, `sp2(C)`.

use crate::exact::{q, SVec};
use crate::liealg::chevalley::{chevalley_algebra, split_name, split_real_form};
use crate::liealg::matrix::{classical_real_form_with, ClassicalForm, DMat, FormName, FormShape, Quat};
use crate::liealg::{realify, LieAlgebra};
use crate::rootsys::{RootSystem, Series, TypeLabel};
use crate::sl2kit::{regular_sl2, verify_triple, Sl2Triple};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraSpec {
    Complex(TypeLabel),
    Split(TypeLabel),
    Realified(TypeLabel),
    Classical(FormName),
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraSpec::Complex(t) => write!(f, "{t}"),
            AlgebraSpec::Split(t) => write!(f, "{}", split_name(*t)),
            AlgebraSpec::Realified(t) if matches!(t.series, Series::E | Series::F | Series::G) => {
                write!(f, "{}(C)", t.to_string().to_lowercase())
            }
            AlgebraSpec::Realified(t) => write!(f, "{t}(C)"),
            AlgebraSpec::Classical(n) => write!(f, "{n}"),
        }
    }
}

fn type_label(s: &str) -> Option<TypeLabel> {
    s.parse::<TypeLabel>().ok()
}

fn exceptional_letter(s: &str) -> Option<Series> {
    match s {
        "e" => Some(Series::E),
        "f" => Some(Series::F),
        "g" => Some(Series::G),
        _ => None,
    }
}

/// `(head, number, args)` from strings like `so*(8)`, `sl3(R)`, `e6(-14)`.
fn split_token(s: &str) -> Option<(&str, Option<usize>, Vec<&str>)> {
    let head_end = s.find(|c: char| !(c.is_ascii_alphabetic() || c == '*')).unwrap_or(s.len());
    let (head, rest) = s.split_at(head_end);
    let num_end = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
    let num = if num_end > 0 { Some(rest[..num_end].parse().ok()?) } else { None };
    let rest = &rest[num_end..];
    let args = if rest.is_empty() {
        Vec::new()
    } else {
        rest.strip_prefix('(')?.strip_suffix(')')?.split(',').map(str::trim).collect()
    };
    Some((head, num, args))
}

fn sig(args: &[&str]) -> Option<(usize, usize)> {
    let v: Vec<usize> = args.iter().map(|a| a.parse().ok()).collect::<Option<_>>()?;
    match v.as_slice() {
        [n] => Some((*n, 0)),
        [p, q] => Some((*p, *q)),
        _ => None,
    }
}

pub fn parse_algebra(s: &str) -> Result<AlgebraSpec, String> {
    let s = s.trim();
    let bad = || format!("unknown algebra `{s}`");
    if let Some(t) = s.strip_suffix("-split").and_then(type_label) {
        return Ok(AlgebraSpec::Split(t));
    }
    if let Some(t) = type_label(s) {
        return Ok(AlgebraSpec::Complex(t));
    }
    if let Some(t) = s.strip_suffix("(C)").and_then(type_label) {
        return Ok(AlgebraSpec::Realified(t));
    }
    let (head, num, args) = split_token(s).ok_or_else(bad)?;
    if let (Some(series), Some(n)) = (exceptional_letter(head), num) {
        let t = TypeLabel::new(series, n).map_err(|e| e.to_string())?;
        return match args.as_slice() {
            ["C"] => Ok(AlgebraSpec::Realified(t)),
            [x] if *x == n.to_string() => Ok(AlgebraSpec::Split(t)),
            _ => Err(format!("{s}: only split and complex exceptional forms have a realization")),
        };
    }
    let form = match (head, num, args.as_slice()) {
        ("sl", Some(n), ["R"]) => FormName::SlR(n),
        ("sl", Some(n), ["C"]) => FormName::SlC(n),
        ("sp", Some(n), ["R"]) => FormName::SpR(n),
        ("sp", Some(n), ["C"]) => FormName::SpC(n),
        ("so", Some(n), ["C"]) => FormName::SoC(n),
        ("su", None, a) => {
            let (p, q) = sig(a).ok_or_else(bad)?;
            FormName::Su(p, q)
        }
        ("sp", None, a) => {
            let (p, q) = sig(a).ok_or_else(bad)?;
            FormName::Sp(p, q)
        }
        ("so", None, a) => {
            let (p, q) = sig(a).ok_or_else(bad)?;
            FormName::So(p, q)
        }
        ("so*", None, [m]) | ("su*", None, [m]) => {
            let m: usize = m.parse().map_err(|_| bad())?;
            if !m.is_multiple_of(2) {
                return Err(bad());
            }
            if head == "so*" {
                FormName::SoStar(m / 2)
            } else {
                FormName::SlH(m / 2)
            }
        }
        _ => return Err(bad()),
    };
    Ok(AlgebraSpec::Classical(form))
}

/// A constructed algebra with the data needed to find triples in it.
#[derive(Clone, Debug)]
pub struct Built {
    pub spec: AlgebraSpec,
    pub algebra: LieAlgebra,
    pub root_system: Option<RootSystem>,
    pub form: Option<ClassicalForm>,
}

pub fn build(spec: &AlgebraSpec) -> Result<Built, String> {
    build_with(spec, FormShape::Hyperbolic)
}

pub fn build_with(spec: &AlgebraSpec, shape: FormShape) -> Result<Built, String> {
    let (algebra, root_system, form) = match spec {
        AlgebraSpec::Complex(t) | AlgebraSpec::Split(t) | AlgebraSpec::Realified(t) => {
            let rs = RootSystem::from_label(*t);
            let c = chevalley_algebra(&rs);
            let l = match spec {
                AlgebraSpec::Complex(_) => c,
                AlgebraSpec::Split(_) => split_real_form(&c).map_err(|e| e.to_string())?,
                _ => realify(&c).map_err(|e| e.to_string())?,
            };
            (l, Some(rs), None)
        }
        AlgebraSpec::Classical(name) => {
            let f = classical_real_form_with(name.clone(), shape).map_err(|e| e.to_string())?;
            (f.algebra.clone(), None, Some(f))
        }
    };
    Ok(Built {
        spec: spec.clone(),
        algebra,
        root_system,
        form,
    })
}

/// Parse and build in one step.
pub fn algebra(name: &str) -> Result<Built, String> {
    build(&parse_algebra(name)?)
}

/// Which root a triple is attached to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootChoice {
    Long,
    Short,
    Coords(Vec<i64>),
}

impl std::str::FromStr for RootChoice {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "long" => Ok(RootChoice::Long),
            "short" => Ok(RootChoice::Short),
            _ => s
                .split(',')
                .map(|x| x.trim().parse::<i64>())
                .collect::<Result<Vec<_>, _>>()
                .map(RootChoice::Coords)
                .map_err(|_| format!("root must be long, short or comma-separated coordinates, got `{s}`")),
        }
    }
}

fn diag_q(n: usize, d: usize, entries: &[(usize, i64)]) -> DMat {
    let mut m = DMat::zero(n, d);
    for &(i, c) in entries {
        m.set(i, i, Quat::real(q(c)));
    }
    m
}

/// The triple of the highest root, or of the chosen root in a Chevalley algebra.
///
/// Classical matrix forms only support `Long`; the triples used there are
/// (with `N` the matrix size and hyperbolic forms):
/// `h = diag(1,0,..,0,-1)`, `e = E_{0,N-1}` (`i E_{0,N-1}` in `su(p,q)`), and for
/// `so(p,q)` `h = diag(1,1,0,..,0,-1,-1)`, `e = E_{0,N-2} - E_{1,N-1}`.
pub fn root_triple(b: &Built, root: &RootChoice) -> Result<Sl2Triple, String> {
    if let Some(rs) = &b.root_system {
        if matches!(b.spec, AlgebraSpec::Realified(_)) {
            return Err("root triples are taken in the complex or split algebra".into());
        }
        let mu = match root {
            RootChoice::Long => rs.highest_root.clone(),
            RootChoice::Short => rs
                .highest_short_root
                .clone()
                .ok_or_else(|| format!("{} is simply laced", rs.type_label))?,
            RootChoice::Coords(c) => c.clone(),
        };
        return regular_sl2(&b.algebra, rs, &mu).map_err(|e| e.to_string());
    }
    let form = b.form.as_ref().ok_or("no realization")?;
    if *root != RootChoice::Long {
        return Err("matrix forms only provide the long-root triple".into());
    }
    let (n, d) = form.name.matrix_shape();
    let unit = |i: usize, j: usize, c: Quat| DMat::unit(n, d, i, j, c);
    let (h, e, f) = match form.name {
        FormName::SlR(_) | FormName::SpR(_) | FormName::SoStar(_) | FormName::SlC(_) | FormName::SpC(_) => (
            diag_q(n, d, &[(0, 1), (n - 1, -1)]),
            unit(0, n - 1, Quat::one()),
            unit(n - 1, 0, Quat::one()),
        ),
        FormName::Su(p, qq) if p.min(qq) >= 1 => (
            diag_q(n, d, &[(0, 1), (n - 1, -1)]),
            unit(0, n - 1, Quat::i()),
            unit(n - 1, 0, -&Quat::i()),
        ),
        FormName::So(p, qq) if p.min(qq) >= 2 => (
            diag_q(n, d, &[(0, 1), (1, 1), (n - 2, -1), (n - 1, -1)]),
            unit(0, n - 2, Quat::one()).sub(&unit(1, n - 1, Quat::one())),
            unit(n - 2, 0, Quat::one()).sub(&unit(n - 1, 1, Quat::one())),
        ),
        _ => return Err(format!("{} has no contact triple", form.name)),
    };
    let el = |m: &DMat| form.element(m).map_err(|e| e.to_string());
    verify_triple(&b.algebra, &el(&h)?, &el(&e)?, &el(&f)?).map_err(|e| e.to_string())
}

/// Element of a classical form from a matrix.
pub fn matrix_element(b: &Built, m: &DMat) -> Result<SVec, String> {
    b.form
        .as_ref()
        .ok_or("not a matrix form")?
        .element(m)
        .map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in ["G2", "e6(6)", "f4(4)", "g2(2)", "sl3(R)", "su(1,2)", "so*(8)", "su*(4)", "sp2(C)", "e7(C)"] {
            let spec = parse_algebra(s).unwrap();
            assert_eq!(spec.to_string(), s, "{s}");
        }
        assert_eq!(parse_algebra("g2-split").unwrap(), AlgebraSpec::Split("G2".parse().unwrap()));
        assert!(parse_algebra("e6(2)").is_err());
        assert!(parse_algebra("so*(7)").is_err());
    }

    #[test]
    fn classical_contact_triples() {
        for s in ["sl4(R)", "su(1,2)", "su(2,2)", "sp2(R)", "so(2,3)", "so(3,3)", "so*(6)", "so*(8)"] {
            let b = algebra(s).unwrap();
            root_triple(&b, &RootChoice::Long).unwrap_or_else(|e| panic!("{s}: {e}"));
        }
        assert!(root_triple(&algebra("su(3)").unwrap(), &RootChoice::Long).is_err());
    }
}

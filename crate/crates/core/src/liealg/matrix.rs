//! Classical real forms as matrix algebras over `R`, `C` or `H`.
//!
//! A form is cut out of `gl_n(D)` by linear conditions: `X* G + G X = 0` for a
//! Hermitian or skew-Hermitian `G`, `X^T K + K X = 0` for a complex-bilinear
//! `K`, and a trace condition. The solution space is found exactly and its
//! echelon basis becomes the basis of the [`LieAlgebra`].
//!
//! By default the defining forms are hyperbolic: isotropic pairs sit at
//! positions `(i, n-1-i)`, so `V = Kp + V0 + Kq` with `p = e_0`, `q = e_{n-1}`
//! and the grading element `diag(1, 0, .., 0, -1)` lies in the algebra
//! whenever the form has an isotropic pair.

use super::{Field, LieAlgebra, LieError, Provenance};
use crate::exact::{q, SVec, Q};
use crate::linalg::{null_space, Subspace};
use num::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Quaternion `a + b i + c j + d k`; complex numbers use `c = d = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Quat(pub [Q; 4]);

impl Quat {
    pub fn real(a: Q) -> Self {
        Quat([a, Q::zero(), Q::zero(), Q::zero()])
    }

    pub fn complex(a: Q, b: Q) -> Self {
        Quat([a, b, Q::zero(), Q::zero()])
    }

    pub fn zero() -> Self {
        Quat::real(Q::zero())
    }

    pub fn one() -> Self {
        Quat::real(Q::one())
    }

    pub fn i() -> Self {
        Quat::complex(Q::zero(), Q::one())
    }

    pub fn j() -> Self {
        Quat([Q::zero(), Q::zero(), Q::one(), Q::zero()])
    }

    pub fn k() -> Self {
        Quat([Q::zero(), Q::zero(), Q::zero(), Q::one()])
    }

    /// Basis unit `1, i, j, k` by index.
    pub fn unit(c: usize) -> Self {
        let mut out = Quat::zero();
        out.0[c] = Q::one();
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    pub fn conj(&self) -> Self {
        let [a, b, c, d] = &self.0;
        Quat([a.clone(), -b, -c, -d])
    }

    pub fn scale(&self, s: &Q) -> Self {
        Quat(self.0.clone().map(|x| x * s))
    }
}

impl Add for &Quat {
    type Output = Quat;
    fn add(self, o: &Quat) -> Quat {
        Quat([
            &self.0[0] + &o.0[0],
            &self.0[1] + &o.0[1],
            &self.0[2] + &o.0[2],
            &self.0[3] + &o.0[3],
        ])
    }
}

impl Sub for &Quat {
    type Output = Quat;
    fn sub(self, o: &Quat) -> Quat {
        self + &(-o)
    }
}

impl Neg for &Quat {
    type Output = Quat;
    fn neg(self) -> Quat {
        Quat(self.0.clone().map(|x| -x))
    }
}

impl Mul for &Quat {
    type Output = Quat;
    fn mul(self, o: &Quat) -> Quat {
        let [a1, b1, c1, d1] = &self.0;
        let [a2, b2, c2, d2] = &o.0;
        Quat([
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        ])
    }
}

/// Square matrix with quaternion entries; `d` records which division algebra is in use.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DMat {
    pub n: usize,
    pub d: usize,
    pub entries: Vec<Quat>,
}

impl DMat {
    pub fn zero(n: usize, d: usize) -> Self {
        DMat {
            n,
            d,
            entries: vec![Quat::zero(); n * n],
        }
    }

    /// `c * E_ij`.
    pub fn unit(n: usize, d: usize, i: usize, j: usize, c: Quat) -> Self {
        let mut m = DMat::zero(n, d);
        m.entries[i * n + j] = c;
        m
    }

    /// Real diagonal matrix.
    pub fn diag(d: usize, diag: &[i64]) -> Self {
        let n = diag.len();
        let mut m = DMat::zero(n, d);
        for (i, x) in diag.iter().enumerate() {
            m.entries[i * n + i] = Quat::real(q(*x));
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &Quat {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, c: Quat) {
        self.entries[i * self.n + j] = c;
    }

    pub fn add(&self, o: &DMat) -> DMat {
        DMat {
            n: self.n,
            d: self.d.max(o.d),
            entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &DMat) -> DMat {
        self.add(&o.scale(&-Q::one()))
    }

    pub fn scale(&self, s: &Q) -> DMat {
        DMat {
            n: self.n,
            d: self.d,
            entries: self.entries.iter().map(|a| a.scale(s)).collect(),
        }
    }

    pub fn mul(&self, o: &DMat) -> DMat {
        let n = self.n;
        let mut out = DMat::zero(n, self.d.max(o.d));
        for i in 0..n {
            for l in 0..n {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = o.get(l, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] = &out.entries[i * n + j] + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn commutator(&self, o: &DMat) -> DMat {
        self.mul(o).sub(&o.mul(self))
    }

    /// Conjugate transpose.
    pub fn star(&self) -> DMat {
        let n = self.n;
        let mut out = DMat::zero(n, self.d);
        for i in 0..n {
            for j in 0..n {
                out.entries[j * n + i] = self.get(i, j).conj();
            }
        }
        out
    }

    /// Plain transpose (no conjugation).
    pub fn transpose(&self) -> DMat {
        let n = self.n;
        let mut out = DMat::zero(n, self.d);
        for i in 0..n {
            for j in 0..n {
                out.entries[j * n + i] = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn trace(&self) -> Quat {
        (0..self.n).fold(Quat::zero(), |s, i| &s + self.get(i, i))
    }

    /// Real coordinates: index `(i*n + j)*d + c`.
    pub fn flatten(&self) -> SVec {
        let d = self.d;
        SVec::from_pairs(
            self.entries
                .iter()
                .enumerate()
                .flat_map(|(k, e)| (0..d).map(move |c| (k * d + c, e.0[c].clone()))),
        )
    }

    pub fn unflatten(v: &SVec, n: usize, d: usize) -> DMat {
        let mut m = DMat::zero(n, d);
        for (idx, c) in v.iter() {
            m.entries[idx / d].0[idx % d] = c.clone();
        }
        m
    }
}

/// Named classical real forms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FormName {
    /// `sl_n(R)`
    SlR(usize),
    /// `sl_n(C)` as a real algebra
    SlC(usize),
    /// `su*(2n) = sl_n(H)`
    SlH(usize),
    /// `su(p,q)`; `su(n)` is `Su(n, 0)`
    Su(usize, usize),
    /// `sp_n(R)`, matrices of size `2n`
    SpR(usize),
    /// `sp(p,q)`; compact `sp(n)` is `Sp(n, 0)`
    Sp(usize, usize),
    /// `so(p,q)`; compact `so(n)` is `So(n, 0)`
    So(usize, usize),
    /// `so*(2n)`
    SoStar(usize),
    /// `so_n(C)` as a real algebra
    SoC(usize),
    /// `sp_n(C)` as a real algebra
    SpC(usize),
}

impl fmt::Display for FormName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormName::SlR(n) => write!(f, "sl{n}(R)"),
            FormName::SlC(n) => write!(f, "sl{n}(C)"),
            FormName::SlH(n) => write!(f, "su*({})", 2 * n),
            FormName::Su(p, 0) => write!(f, "su({p})"),
            FormName::Su(p, q) => write!(f, "su({p},{q})"),
            FormName::SpR(n) => write!(f, "sp{n}(R)"),
            FormName::Sp(p, 0) => write!(f, "sp({p})"),
            FormName::Sp(p, q) => write!(f, "sp({p},{q})"),
            FormName::So(p, 0) => write!(f, "so({p})"),
            FormName::So(p, q) => write!(f, "so({p},{q})"),
            FormName::SoStar(n) => write!(f, "so*({})", 2 * n),
            FormName::SoC(n) => write!(f, "so{n}(C)"),
            FormName::SpC(n) => write!(f, "sp{n}(C)"),
        }
    }
}

impl FormName {
    /// Classical forms of real dimension at most `max_dim`, one per signature up to swapping `p` and `q`.
    pub fn all_up_to_dim(max_dim: usize) -> Vec<FormName> {
        let mut out = Vec::new();
        let mut n = 1;
        // Every family has dimension at least n + 1 at parameter n.
        while n < max_dim {
            out.extend([
                FormName::SlR(n + 1),
                FormName::SlC(n + 1),
                FormName::SlH(n),
                FormName::SpR(n),
                FormName::SpC(n),
                FormName::SoC(n + 2),
                FormName::SoStar(n + 1),
            ]);
            for q in 0..=n / 2 {
                out.push(FormName::Su(n + 1 - q, q));
                out.push(FormName::Sp(n - q, q));
            }
            for q in 0..=(n + 2) / 2 {
                out.push(FormName::So(n + 2 - q, q));
            }
            n += 1;
        }
        out.retain(|f| f.dim() <= max_dim);
        out
    }

    /// Real dimension.
    pub fn dim(&self) -> usize {
        match *self {
            FormName::SlR(n) => n * n - 1,
            FormName::SlC(n) => 2 * (n * n - 1),
            FormName::SlH(n) => 4 * n * n - 1,
            FormName::Su(p, q) => (p + q) * (p + q) - 1,
            FormName::SpR(n) => n * (2 * n + 1),
            FormName::Sp(p, q) => (p + q) * (2 * (p + q) + 1),
            FormName::So(p, q) => (p + q) * (p + q - 1) / 2,
            FormName::SoStar(n) => n * (2 * n - 1),
            FormName::SoC(n) => n * (n - 1),
            FormName::SpC(n) => 2 * n * (2 * n + 1),
        }
    }

    /// Size of the defining matrices and the division algebra dimension.
    pub fn matrix_shape(&self) -> (usize, usize) {
        match *self {
            FormName::SlR(n) => (n, 1),
            FormName::SlC(n) | FormName::SoC(n) => (n, 2),
            FormName::SlH(n) | FormName::SoStar(n) => (n, 4),
            FormName::Su(p, q) => (p + q, 2),
            FormName::SpR(n) => (2 * n, 1),
            FormName::Sp(p, q) => (p + q, 4),
            FormName::So(p, q) => (p + q, 1),
            FormName::SpC(n) => (2 * n, 2),
        }
    }

    fn validate(&self) -> Result<(), LieError> {
        let bad = |s: &str| Err(LieError::InvalidForm(format!("{self}: {s}")));
        match *self {
            FormName::SlR(n) | FormName::SlC(n) if n < 2 => bad("need n >= 2"),
            FormName::SlH(n) if n < 1 => bad("need n >= 1"),
            FormName::Su(p, q) if p + q < 2 => bad("need p + q >= 2"),
            FormName::Sp(p, q) if p + q < 1 => bad("need p + q >= 1"),
            FormName::SpR(n) | FormName::SpC(n) if n < 1 => bad("need n >= 1"),
            FormName::So(p, q) if p + q < 2 => bad("need p + q >= 2"),
            FormName::SoStar(n) if n < 1 => bad("need n >= 1"),
            FormName::SoC(n) if n < 2 => bad("need n >= 2"),
            _ => Ok(()),
        }
    }
}

/// Arrangement of the defining form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum FormShape {
    /// Isotropic pairs at `(i, n-1-i)`.
    #[default]
    Hyperbolic,
    /// Diagonal `(+1, .., +1, -1, .., -1)` (or `j I` for `so*`).
    Diagonal,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum TraceRule {
    None,
    /// Real part of the trace vanishes.
    Real,
    /// Whole (complex) trace vanishes.
    Full,
}

/// Symmetric signature form: hyperbolic pairs outermost, remaining signs in the middle.
fn signature_form(p: usize, q: usize, d: usize, shape: FormShape, skew: bool) -> DMat {
    let n = p + q;
    let mut g = DMat::zero(n, d);
    let one = Quat::one();
    match shape {
        FormShape::Diagonal => {
            for i in 0..n {
                let s = if i < p { 1 } else { -1 };
                g.set(i, i, Quat::real(crate::exact::q(s)));
            }
        }
        FormShape::Hyperbolic => {
            let r = p.min(q);
            for i in 0..r {
                g.set(i, n - 1 - i, one.clone());
                g.set(n - 1 - i, i, if skew { -&one } else { one.clone() });
            }
            let s = if p >= q { 1 } else { -1 };
            for i in r..n - r {
                g.set(i, i, Quat::real(crate::exact::q(s)));
            }
        }
    }
    g
}

/// Antidiagonal symplectic form `[[0, A], [-A, 0]]` with `A` antidiagonal.
fn symplectic_form(n: usize, d: usize) -> DMat {
    let m = 2 * n;
    let mut g = DMat::zero(m, d);
    for i in 0..m {
        let s = if i < n { 1 } else { -1 };
        g.set(i, m - 1 - i, Quat::real(q(s)));
    }
    g
}

/// Skew-Hermitian quaternionic form for `so*(2n)`.
fn so_star_form(n: usize, shape: FormShape) -> DMat {
    let mut g = DMat::zero(n, 4);
    match shape {
        FormShape::Diagonal => {
            for i in 0..n {
                g.set(i, i, Quat::j());
            }
        }
        FormShape::Hyperbolic => {
            for i in 0..n / 2 {
                g.set(i, n - 1 - i, Quat::one());
                g.set(n - 1 - i, i, -&Quat::one());
            }
            if n % 2 == 1 {
                g.set(n / 2, n / 2, Quat::j());
            }
        }
    }
    g
}

struct Conditions {
    n: usize,
    d: usize,
    herm: Option<DMat>,
    bilinear: Option<DMat>,
    trace: TraceRule,
}

fn conditions(name: &FormName, shape: FormShape) -> Conditions {
    let (n, d) = name.matrix_shape();
    let (herm, bilinear, trace) = match *name {
        FormName::SlR(_) | FormName::SlH(_) => (None, None, TraceRule::Real),
        FormName::SlC(_) => (None, None, TraceRule::Full),
        FormName::Su(p, q) => (Some(signature_form(p, q, d, shape, false)), None, TraceRule::Full),
        FormName::Sp(p, q) | FormName::So(p, q) => {
            (Some(signature_form(p, q, d, shape, false)), None, TraceRule::None)
        }
        FormName::SpR(k) => (Some(symplectic_form(k, d)), None, TraceRule::None),
        FormName::SoStar(k) => (Some(so_star_form(k, shape)), None, TraceRule::None),
        FormName::SoC(k) => (None, Some(complex_orthogonal_form(k, d, shape)), TraceRule::None),
        FormName::SpC(k) => (None, Some(symplectic_form(k, d)), TraceRule::None),
    };
    Conditions {
        n,
        d,
        herm,
        bilinear,
        trace,
    }
}

/// Symmetric bilinear form for `so_n(C)`: antidiagonal ones, or the identity.
fn complex_orthogonal_form(n: usize, d: usize, shape: FormShape) -> DMat {
    let mut g = DMat::zero(n, d);
    for i in 0..n {
        let j = if shape == FormShape::Hyperbolic { n - 1 - i } else { i };
        g.set(i, j, Quat::one());
    }
    g
}

impl Conditions {
    /// The defining linear map applied to `x`, flattened.
    fn image(&self, x: &DMat) -> SVec {
        let mut parts: Vec<SVec> = Vec::new();
        let block = self.n * self.n * 4;
        if let Some(g) = &self.herm {
            parts.push(x.star().mul(g).add(&g.mul(x)).flatten_full());
        }
        if let Some(k) = &self.bilinear {
            parts.push(x.transpose().mul(k).add(&k.mul(x)).flatten_full());
        }
        let t = x.trace();
        let tr = match self.trace {
            TraceRule::None => SVec::zero(),
            TraceRule::Real => SVec::from_pairs([(0, t.0[0].clone())]),
            TraceRule::Full => SVec::from_pairs((0..4).map(|c| (c, t.0[c].clone()))),
        };
        parts.push(tr);
        let mut out = SVec::zero();
        for (k, p) in parts.iter().enumerate() {
            out = out.add(&SVec::from_pairs(p.iter().map(|(i, c)| (k * block + i, c.clone()))));
        }
        out
    }
}

impl DMat {
    /// Flattening with all four quaternion components, independent of `d`.
    fn flatten_full(&self) -> SVec {
        SVec::from_pairs(
            self.entries
                .iter()
                .enumerate()
                .flat_map(|(k, e)| (0..4).map(move |c| (k * 4 + c, e.0[c].clone()))),
        )
    }
}

/// A classical real form with its matrix realization.
#[derive(Clone, Debug)]
pub struct ClassicalForm {
    pub name: FormName,
    pub algebra: LieAlgebra,
    /// Basis element `k` of `algebra` is `matrices[k]`.
    pub matrices: Vec<DMat>,
    pub shape: FormShape,
    space: Subspace,
}

impl ClassicalForm {
    /// Size of the defining matrices.
    pub fn n(&self) -> usize {
        self.name.matrix_shape().0
    }

    /// Division algebra dimension (1, 2 or 4).
    pub fn d(&self) -> usize {
        self.name.matrix_shape().1
    }

    /// Coordinates of a matrix in the algebra basis.
    pub fn element(&self, x: &DMat) -> Result<SVec, LieError> {
        let mut y = x.clone();
        y.d = self.d();
        if y.entries.iter().any(|e| e.0[self.d()..].iter().any(|c| !c.is_zero())) {
            return Err(LieError::InvalidForm(format!(
                "matrix has entries outside the scalars of {}",
                self.name
            )));
        }
        let v = y.flatten();
        self.space
            .coords(&v)
            .map(|cs| SVec::from_pairs(cs.into_iter().enumerate()))
            .ok_or_else(|| LieError::InvalidForm(format!("matrix is not in {}", self.name)))
    }

    /// Matrix of an algebra element.
    pub fn matrix(&self, v: &SVec) -> DMat {
        let mut out = DMat::zero(self.n(), self.d());
        for (k, c) in v.iter() {
            out = out.add(&self.matrices[*k].scale(c));
        }
        out
    }
}

/// Builds `name` with hyperbolic defining forms.
pub fn classical_real_form(name: FormName) -> Result<ClassicalForm, LieError> {
    classical_real_form_with(name, FormShape::Hyperbolic)
}

/// Builds `name` with the requested arrangement of the defining form.
pub fn classical_real_form_with(name: FormName, shape: FormShape) -> Result<ClassicalForm, LieError> {
    name.validate()?;
    let cond = conditions(&name, shape);
    let (n, d) = (cond.n, cond.d);
    let nvars = n * n * d;
    let images: Vec<SVec> = (0..nvars)
        .map(|v| cond.image(&DMat::unflatten(&SVec::unit(v), n, d)))
        .collect();
    // Row r of the constraint matrix collects coefficient r of every image.
    let mut rows: std::collections::BTreeMap<usize, Vec<(usize, Q)>> = Default::default();
    for (v, im) in images.iter().enumerate() {
        for (r, c) in im.iter() {
            rows.entry(*r).or_default().push((v, c.clone()));
        }
    }
    let space = null_space(nvars, rows.into_values().map(SVec::from_pairs));
    if space.dim() != name.dim() {
        return Err(LieError::Dimension {
            expected: name.dim(),
            got: space.dim(),
        });
    }
    let matrices: Vec<DMat> = space
        .basis()
        .iter()
        .map(|v| DMat::unflatten(v, n, d))
        .collect();
    let labels: Vec<String> = (0..matrices.len()).map(|k| format!("X{k}")).collect();
    let mut failure = None;
    let algebra = LieAlgebra::from_upper(
        name.to_string(),
        labels,
        Field::Real,
        Provenance::ClassicalRealForm(name.to_string()),
        |i, j| {
            let c = matrices[i].commutator(&matrices[j]);
            let mut c = c;
            c.d = d;
            match space.coords(&c.flatten()) {
                Some(cs) => SVec::from_pairs(cs.into_iter().enumerate()),
                None => {
                    failure.get_or_insert((i, j));
                    SVec::zero()
                }
            }
        },
    );
    if let Some((i, j)) = failure {
        return Err(LieError::NotClosed(format!("[X{i}, X{j}] in {name}")));
    }
    Ok(ClassicalForm {
        name,
        algebra,
        matrices,
        shape,
        space,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternion_relations() {
        let (i, j, k) = (Quat::i(), Quat::j(), Quat::k());
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &k, i);
        assert_eq!(&(&i * &i), &-&Quat::one());
    }

    #[test]
    fn small_dimensions() {
        for name in [
            FormName::SlR(2),
            FormName::Su(1, 1),
            FormName::So(2, 3),
            FormName::SpR(2),
            FormName::SoStar(3),
            FormName::Sp(1, 1),
            FormName::SlH(2),
            FormName::SlC(2),
        ] {
            let f = classical_real_form(name.clone()).unwrap();
            assert_eq!(f.algebra.dim(), name.dim(), "{name}");
        }
    }
}

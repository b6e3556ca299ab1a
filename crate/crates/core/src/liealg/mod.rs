//! Lie algebras as exact structure-constant tables.
//!
//! A [`LieAlgebra`] stores `[x_i, x_j]` for every ordered pair of basis
//! elements as a sparse rational vector. Elements are [`SVec`] coordinate
//! vectors in that basis. Constructors live in the submodules:
//! [`chevalley`] (complex simple algebras and their split forms),
//! [`matrix`] (classical real forms as matrix algebras), plus
//! [`realify`] and [`direct_sum`] here.

pub mod chevalley;
pub mod jacobi;
pub mod matrix;

use crate::exact::{q, SVec, Q};
use crate::linalg::{apply_rows_t, null_space, Subspace};
use num::Zero;
use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::sync::OnceLock;

pub use chevalley::{chevalley_algebra, fundamental_coweight, split_real_form};
pub use jacobi::{jacobi_exhaustive, jacobi_randomized};
pub use matrix::{classical_real_form, ClassicalForm, FormName};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    /// Complex algebra presented by a rational basis (complex-bilinear bracket).
    Complex,
    Real,
}

/// How an algebra was built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Chevalley(crate::rootsys::TypeLabel),
    NormalRealForm(crate::rootsys::TypeLabel),
    ClassicalRealForm(String),
    Realification(Box<Provenance>),
    DirectSum(Vec<Provenance>),
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum LieError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("cannot mix complex and real summands")]
    MixedFields,
    #[error("realification needs a complex algebra")]
    NotComplex,
    #[error("invalid classical real form: {0}")]
    InvalidForm(String),
    #[error("matrices are not closed under the commutator: {0}")]
    NotClosed(String),
    #[error("{0}")]
    Other(String),
}

#[derive(Debug)]
pub struct LieAlgebra {
    name: String,
    labels: Vec<String>,
    /// `table[i * dim + j] = [x_i, x_j]`.
    table: Vec<SVec>,
    field: Field,
    provenance: Provenance,
    killing: OnceLock<Vec<SVec>>,
}

impl Clone for LieAlgebra {
    fn clone(&self) -> Self {
        let killing = OnceLock::new();
        if let Some(k) = self.killing.get() {
            let _ = killing.set(k.clone());
        }
        LieAlgebra {
            name: self.name.clone(),
            labels: self.labels.clone(),
            table: self.table.clone(),
            field: self.field,
            provenance: self.provenance.clone(),
            killing,
        }
    }
}

impl LieAlgebra {
    /// Builds from brackets `[x_i, x_j]` given for `i < j`; the rest follows by antisymmetry.
    pub fn from_upper<F>(
        name: impl Into<String>,
        labels: Vec<String>,
        field: Field,
        provenance: Provenance,
        mut upper: F,
    ) -> Self
    where
        F: FnMut(usize, usize) -> SVec,
    {
        let n = labels.len();
        let mut table = vec![SVec::zero(); n * n];
        for i in 0..n {
            for j in i + 1..n {
                let v = upper(i, j);
                table[j * n + i] = v.neg();
                table[i * n + j] = v;
            }
        }
        LieAlgebra {
            name: name.into(),
            labels,
            table,
            field,
            provenance,
            killing: OnceLock::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub(crate) fn set_provenance(&mut self, p: Provenance) {
        self.provenance = p;
    }

    pub(crate) fn set_field(&mut self, f: Field) {
        self.field = f;
    }

    /// `[x_i, x_j]`.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &SVec {
        &self.table[i * self.dim() + j]
    }

    fn check(&self, v: &SVec) -> Result<(), LieError> {
        if v.support_end() > self.dim() {
            return Err(LieError::Dimension {
                expected: self.dim(),
                got: v.support_end(),
            });
        }
        Ok(())
    }

    /// Bracket of two elements.
    pub fn bracket(&self, x: &SVec, y: &SVec) -> SVec {
        let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                let br = self.basis_bracket(*i, *j);
                if br.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in br.iter() {
                    *acc.entry(*k).or_insert_with(Q::zero) += &ab * c;
                }
            }
        }
        SVec::from_pairs(acc)
    }

    /// Checked bracket.
    pub fn try_bracket(&self, x: &SVec, y: &SVec) -> Result<SVec, LieError> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.bracket(x, y))
    }

    /// Matrix of `ad_x` by rows: entry `(k, j)` is the `x_k` coefficient of `[x, x_j]`.
    pub fn ad_rows(&self, x: &SVec) -> Vec<SVec> {
        let n = self.dim();
        let mut rows: Vec<Vec<(usize, Q)>> = vec![Vec::new(); n];
        for j in 0..n {
            let col = self.bracket(x, &SVec::unit(j));
            for (k, c) in col.iter() {
                rows[*k].push((j, c.clone()));
            }
        }
        rows.into_iter().map(SVec::from_pairs).collect()
    }

    /// Dense `ad_x`.
    pub fn ad_matrix(&self, x: &SVec) -> crate::exact::Mat {
        let n = self.dim();
        self.ad_rows(x).iter().map(|r| r.to_dense(n)).collect()
    }

    /// Gram matrix of the trace form `B(x, y) = tr(ad_x ad_y)`, by rows.
    pub fn killing_rows(&self) -> &[SVec] {
        self.killing.get_or_init(|| self.compute_killing())
    }

    fn compute_killing(&self) -> Vec<SVec> {
        // ad_i[l][k] = coefficient of x_l in [x_i, x_k]; index by (l, k).
        let n = self.dim();
        let mut idx: HashMap<(usize, usize), Vec<(usize, Q)>> = HashMap::new();
        for i in 0..n {
            for k in 0..n {
                for (l, c) in self.basis_bracket(i, k).iter() {
                    idx.entry((*l, k)).or_default().push((i, c.clone()));
                }
            }
        }
        let mut acc: Vec<BTreeMap<usize, Q>> = vec![BTreeMap::new(); n];
        for (&(l, k), left) in &idx {
            let Some(right) = idx.get(&(k, l)) else {
                continue;
            };
            for (i, a) in left {
                for (j, b) in right {
                    *acc[*i].entry(*j).or_insert_with(Q::zero) += a * b;
                }
            }
        }
        acc.into_iter().map(SVec::from_pairs).collect()
    }

    /// `B(x, y)`.
    pub fn killing(&self, x: &SVec, y: &SVec) -> Q {
        apply_rows_t(self.killing_rows(), x).dot(y)
    }

    /// Covector `B(x, .)`.
    pub fn killing_dual(&self, x: &SVec) -> SVec {
        apply_rows_t(self.killing_rows(), x)
    }

    /// Matrix of `dtheta(x, y) = -theta([x, y])` by rows, read off the structure constants.
    pub fn dtheta_rows(&self, theta: &SVec) -> Vec<SVec> {
        let n = self.dim();
        (0..n)
            .map(|i| {
                SVec::from_pairs((0..n).map(|j| (j, -self.basis_bracket(i, j).dot(theta))))
            })
            .collect()
    }

    /// Jacobi residual for basis elements `i, j, k`.
    pub fn jacobi_residual(&self, i: usize, j: usize, k: usize) -> SVec {
        let (xi, xj, xk) = (SVec::unit(i), SVec::unit(j), SVec::unit(k));
        let a = self.bracket(self.basis_bracket(i, j), &xk);
        let b = self.bracket(self.basis_bracket(j, k), &xi);
        let c = self.bracket(self.basis_bracket(k, i), &xj);
        a.add(&b).add(&c)
    }

    /// Structure constants, one line `i j k c` per nonzero `c` with `i < j`.
    pub fn structure_dump(&self) -> String {
        let mut s = String::new();
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for (k, c) in self.basis_bracket(i, j).iter() {
                    let _ = writeln!(s, "{i} {j} {k} {}", crate::exact::fmt_q(c));
                }
            }
        }
        s
    }

    /// Whether all structure constants are integers.
    pub fn has_integer_constants(&self) -> bool {
        self.table.iter().all(|v| v.iter().all(|(_, c)| c.is_integer()))
    }

    // ----- subspace operations -----

    pub fn span<I: IntoIterator<Item = SVec>>(&self, vecs: I) -> Subspace {
        Subspace::span(self.dim(), vecs)
    }

    /// `Z_g(S) = {x : [x, s] = 0 for all s in S}`.
    pub fn centralizer(&self, s: &Subspace) -> Subspace {
        let rows = s.basis().iter().flat_map(|v| self.ad_rows(v));
        null_space(self.dim(), rows)
    }

    /// Centralizer of a single element.
    pub fn centralizer_of(&self, x: &SVec) -> Subspace {
        null_space(self.dim(), self.ad_rows(x))
    }

    /// `N_g(Re) = {x : [x, e] in Re}`.
    pub fn normalizer_of_line(&self, e: &SVec) -> Subspace {
        let ad = self.ad_rows(e);
        let ann = Subspace::span(self.dim(), [e.clone()]).annihilator();
        let rows = ann.basis().iter().map(|a| apply_rows_t(&ad, a)).collect::<Vec<_>>();
        null_space(self.dim(), rows)
    }

    /// `{x : theta(x) = 0}`.
    pub fn kernel_of_form(&self, theta: &SVec) -> Subspace {
        null_space(self.dim(), [theta.clone()])
    }

    /// `{x : [x, s] in T for all s in S}`.
    pub fn transporter(&self, s: &Subspace, t: &Subspace) -> Subspace {
        let ann = t.annihilator();
        let mut rows = Vec::new();
        for v in s.basis() {
            let ad = self.ad_rows(v);
            for a in ann.basis() {
                rows.push(apply_rows_t(&ad, a));
            }
        }
        null_space(self.dim(), rows)
    }

    /// `N_g(S) = {x : [x, S] in S}`.
    pub fn normalizer(&self, s: &Subspace) -> Subspace {
        self.transporter(s, s)
    }

    /// Center of the subalgebra `S`.
    pub fn center_of(&self, s: &Subspace) -> Subspace {
        self.centralizer(s).intersect(s)
    }

    /// Span of `[u, w]` over bases of `U` and `W`.
    pub fn bracket_space(&self, u: &Subspace, w: &Subspace) -> Subspace {
        let mut out = Subspace::zero(self.dim());
        for a in u.basis() {
            for b in w.basis() {
                out.insert(&self.bracket(a, b));
            }
        }
        out
    }

    /// First pair `(u, w)` of basis vectors with `[u, w]` outside `T`.
    pub fn bracket_violation(
        &self,
        u: &Subspace,
        w: &Subspace,
        t: &Subspace,
    ) -> Option<(SVec, SVec)> {
        for (ia, a) in u.basis().iter().enumerate() {
            for (ib, b) in w.basis().iter().enumerate() {
                if std::ptr::eq(u, w) && ib < ia {
                    continue;
                }
                if !t.contains(&self.bracket(a, b)) {
                    return Some((a.clone(), b.clone()));
                }
            }
        }
        None
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        self.bracket_violation(s, s, s).is_none()
    }

    /// B-orthogonal complement.
    pub fn orth_complement(&self, s: &Subspace) -> Subspace {
        let rows = s.basis().iter().map(|v| self.killing_dual(v)).collect::<Vec<_>>();
        null_space(self.dim(), rows)
    }

    /// Gram matrix of B on a list of vectors.
    pub fn killing_gram(&self, vecs: &[SVec]) -> crate::exact::Mat {
        crate::linalg::gram_on(self.killing_rows(), vecs)
    }

    /// Inertia of B restricted to a subspace: `(positive, negative, zero)`.
    pub fn killing_inertia(&self, s: &Subspace) -> (usize, usize, usize) {
        crate::linalg::inertia(&self.killing_gram(s.basis()))
    }

    /// Whether B is nondegenerate on the whole algebra.
    pub fn is_semisimple(&self) -> bool {
        let g = Subspace::full(self.dim());
        self.orth_complement(&g).is_zero()
    }

    /// Derived algebra `[S, S]`.
    pub fn derived(&self, s: &Subspace) -> Subspace {
        self.bracket_space(s, s)
    }

    /// Whether `ad_x` is nilpotent, by iterating `ad_x` on the whole algebra.
    pub fn is_ad_nilpotent(&self, x: &SVec) -> bool {
        let ad = self.ad_rows(x);
        let mut image = Subspace::full(self.dim());
        for _ in 0..=self.dim() {
            if image.is_zero() {
                return true;
            }
            let next = Subspace::span(
                self.dim(),
                image.basis().iter().map(|v| crate::linalg::apply_rows(&ad, v)),
            );
            if next.dim() == image.dim() {
                return false;
            }
            image = next;
        }
        image.is_zero()
    }
}

/// The underlying real algebra of a complex one: basis `x_i` then `i x_i`.
pub fn realify(l: &LieAlgebra) -> Result<LieAlgebra, LieError> {
    if l.field() != Field::Complex {
        return Err(LieError::NotComplex);
    }
    let n = l.dim();
    let mut labels: Vec<String> = l.labels().to_vec();
    labels.extend(l.labels().iter().map(|s| format!("i*{s}")));
    let shift = |v: &SVec, by: usize, sign: i64| {
        SVec::from_pairs(v.iter().map(|(k, c)| (k + by, c * q(sign))))
    };
    Ok(LieAlgebra::from_upper(
        format!("{} (real)", l.name()),
        labels,
        Field::Real,
        Provenance::Realification(Box::new(l.provenance().clone())),
        |i, j| {
            let (ri, ii) = (i % n, i >= n);
            let (rj, ij) = (j % n, j >= n);
            let c = l.basis_bracket(ri, rj);
            match (ii, ij) {
                (false, false) => c.clone(),
                (true, true) => shift(c, 0, -1),
                _ => shift(c, n, 1),
            }
        },
    ))
}

/// Blockwise direct sum. Basis of `l1` first.
pub fn direct_sum(l1: &LieAlgebra, l2: &LieAlgebra) -> Result<LieAlgebra, LieError> {
    if l1.field() != l2.field() {
        return Err(LieError::MixedFields);
    }
    let n1 = l1.dim();
    let mut labels: Vec<String> = l1.labels().to_vec();
    labels.extend(l2.labels().iter().map(|s| format!("{s}'")));
    Ok(LieAlgebra::from_upper(
        format!("{}+{}", l1.name(), l2.name()),
        labels,
        l1.field(),
        Provenance::DirectSum(vec![l1.provenance().clone(), l2.provenance().clone()]),
        |i, j| {
            if j < n1 {
                l1.basis_bracket(i, j).clone()
            } else if i >= n1 {
                SVec::from_pairs(
                    l2.basis_bracket(i - n1, j - n1)
                        .iter()
                        .map(|(k, c)| (k + n1, c.clone())),
                )
            } else {
                SVec::zero()
            }
        },
    ))
}

/// The element `re + i*im` of a realified algebra, for `re, im` in the complex algebra of dimension `n`.
pub fn realified_element(n: usize, re: &SVec, im: &SVec) -> SVec {
    re.add(&SVec::from_pairs(im.iter().map(|(k, c)| (k + n, c.clone()))))
}

//! sl2-triples, ad_h gradations and the canonical decomposition
//! `g = (Rh + Re + z + V) + (Rf + W)`.

use crate::exact::{q, SVec, Q};
use crate::liealg::chevalley::{coroot_element, root_vector};
use crate::liealg::{LieAlgebra, Provenance};
use crate::linalg::{apply_rows, determinant, null_space, rank_dense, Subspace};
use crate::rootsys::RootSystem;
use num::Zero;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum Sl2Error {
    #[error("relation {relation} fails; residual {residual}")]
    Relation {
        relation: &'static str,
        residual: SVec,
    },
    #[error("{0:?} is not a root")]
    NotARoot(Vec<i64>),
    #[error("algebra is not a Chevalley algebra of the given root system")]
    NotChevalley,
    #[error("ad_h has non-integer or missing eigenvalues: integer eigenspaces cover {covered} of {dim}")]
    NonIntegral { covered: usize, dim: usize },
    #[error("partition {0:?} mixes odd and even parts")]
    MixedParity(Vec<usize>),
    #[error("partition entries must be positive")]
    EmptyPart,
}

/// `(h, e, f)` with `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Triple {
    pub h: SVec,
    pub e: SVec,
    pub f: SVec,
}

impl Sl2Triple {
    /// `span(h, e, f)`.
    pub fn span(&self, l: &LieAlgebra) -> Subspace {
        l.span([self.h.clone(), self.e.clone(), self.f.clone()])
    }
}

pub fn verify_triple(l: &LieAlgebra, h: &SVec, e: &SVec, f: &SVec) -> Result<Sl2Triple, Sl2Error> {
    let checks: [(&'static str, SVec); 3] = [
        ("[h,e] = 2e", l.bracket(h, e).sub(&e.scale(&q(2)))),
        ("[h,f] = -2f", l.bracket(h, f).add(&f.scale(&q(2)))),
        ("[e,f] = h", l.bracket(e, f).sub(h)),
    ];
    for (relation, residual) in checks {
        if !residual.is_zero() {
            return Err(Sl2Error::Relation { relation, residual });
        }
    }
    Ok(Sl2Triple {
        h: h.clone(),
        e: e.clone(),
        f: f.clone(),
    })
}

/// `(h_mu, e_mu, e_-mu)` in a Chevalley algebra or its split real form.
pub fn regular_sl2(l: &LieAlgebra, rs: &RootSystem, mu: &[i64]) -> Result<Sl2Triple, Sl2Error> {
    match l.provenance() {
        Provenance::Chevalley(t) | Provenance::NormalRealForm(t) if *t == rs.type_label => {}
        _ => return Err(Sl2Error::NotChevalley),
    }
    let neg: Vec<i64> = mu.iter().map(|x| -x).collect();
    let (Some(e), Some(f)) = (root_vector(rs, mu), root_vector(rs, &neg)) else {
        return Err(Sl2Error::NotARoot(mu.to_vec()));
    };
    verify_triple(l, &coroot_element(rs, mu), &e, &f)
}

/// Eigenspace decomposition of `ad_h` with integer eigenvalues.
#[derive(Clone, Debug)]
pub struct Gradation {
    dim: usize,
    pieces: BTreeMap<i64, Subspace>,
}

impl Gradation {
    /// `g^i`; zero when absent.
    pub fn piece(&self, i: i64) -> Subspace {
        self.pieces
            .get(&i)
            .cloned()
            .unwrap_or_else(|| Subspace::zero(self.dim))
    }

    pub fn piece_dim(&self, i: i64) -> usize {
        self.pieces.get(&i).map_or(0, |s| s.dim())
    }

    /// Eigenvalues with nonzero eigenspaces, ascending.
    pub fn eigenvalues(&self) -> Vec<i64> {
        self.pieces.keys().copied().collect()
    }

    /// `(eigenvalue, dimension)` pairs, ascending.
    pub fn dims(&self) -> Vec<(i64, usize)> {
        self.pieces.iter().map(|(k, s)| (*k, s.dim())).collect()
    }

    pub fn depth(&self) -> i64 {
        self.pieces.keys().last().copied().unwrap_or(0).max(0)
    }

    pub fn is_odd(&self) -> bool {
        self.pieces.keys().any(|k| k % 2 != 0)
    }

    pub fn is_even(&self) -> bool {
        !self.is_odd()
    }

    /// Whether every eigenvalue lies in `{0, ±2, ±4}`.
    pub fn is_short(&self) -> bool {
        self.pieces.keys().all(|k| [-4, -2, 0, 2, 4].contains(k))
    }

    /// First pair `(i, j)` with `[g^i, g^j]` not inside `g^{i+j}`.
    pub fn bracket_violation(&self, l: &LieAlgebra) -> Option<(i64, i64)> {
        for (i, a) in &self.pieces {
            for (j, b) in &self.pieces {
                if i > j {
                    continue;
                }
                if l.bracket_violation(a, b, &self.piece(i + j)).is_some() {
                    return Some((*i, *j));
                }
            }
        }
        None
    }
}

/// Null space scan of `ad_h - j` over `j = 0, 1, -1, 2, -2, ..`; stops once the eigenspaces fill `g`.
pub fn ad_h_gradation(l: &LieAlgebra, h: &SVec) -> Result<Gradation, Sl2Error> {
    let n = l.dim();
    let ad = l.ad_rows(h);
    let mut pieces = BTreeMap::new();
    let mut covered = 0;
    let bound = n as i64;
    let mut candidates = vec![0i64];
    for j in 1..=bound {
        candidates.push(j);
        candidates.push(-j);
    }
    for j in candidates {
        if covered == n {
            break;
        }
        let rows = ad
            .iter()
            .enumerate()
            .map(|(k, r)| r.axpy(&q(-j), &SVec::unit(k)));
        let space = null_space(n, rows);
        if !space.is_zero() {
            covered += space.dim();
            pieces.insert(j, space);
        }
    }
    if covered != n {
        return Err(Sl2Error::NonIntegral { covered, dim: n });
    }
    Ok(Gradation { dim: n, pieces })
}

/// `g = (Rh + Re + z + V) + (Rf + W)`.
#[derive(Clone, Debug)]
pub struct CanonicalDecomposition {
    pub triple: Sl2Triple,
    pub s: Subspace,
    pub z: Subspace,
    /// B-orthogonal complement of `s + z`.
    pub q: Subspace,
    pub v: Subspace,
    pub w: Subspace,
    pub h_alg: Subspace,
    pub m: Subspace,
    pub k_alg: Subspace,
}

impl CanonicalDecomposition {
    /// `N = s + z`.
    pub fn n(&self) -> Subspace {
        self.s.sum(&self.z)
    }

    /// `V + W`.
    pub fn vw(&self) -> Subspace {
        self.v.sum(&self.w)
    }
}

pub fn canonical_decomposition(l: &LieAlgebra, t: &Sl2Triple) -> CanonicalDecomposition {
    let s = t.span(l);
    let z = l.centralizer(&s);
    let q = l.orth_complement(&s.sum(&z));
    let v = q.intersect(&l.centralizer_of(&t.e));
    let ad_f = l.ad_rows(&t.f);
    let mut w = Subspace::zero(l.dim());
    let mut layer: Vec<SVec> = v.basis().to_vec();
    loop {
        layer = layer
            .iter()
            .map(|x| apply_rows(&ad_f, x))
            .filter(|x| !x.is_zero())
            .collect();
        let before = w.dim();
        for x in &layer {
            w.insert(x);
        }
        if layer.is_empty() || w.dim() == before {
            break;
        }
    }
    let re = l.span([t.e.clone()]);
    let k_alg = re.sum(&z).sum(&v);
    let h_alg = k_alg.sum(&l.span([t.h.clone()]));
    let m = l.span([t.f.clone()]).sum(&w);
    CanonicalDecomposition {
        triple: t.clone(),
        s,
        z,
        q,
        v,
        w,
        h_alg,
        m,
        k_alg,
    }
}

/// Evidence for the contact-gradation test.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ContactCertificate {
    pub depth: i64,
    pub dim_top: usize,
    pub dim_bottom: usize,
    pub dim_minus_one: usize,
    /// Rank of the pairing `g^-1 x g^-1 -> g^-2`.
    pub pairing_rank: usize,
    /// Determinant of the pairing matrix (the square of its Pfaffian).
    pub pairing_det: String,
    /// `g = g^-2 + g^0 + g^2` with `dim g = 3`: the sl2 case.
    pub a1_edge: bool,
    pub is_contact: bool,
}

pub fn is_contact_gradation(l: &LieAlgebra, g: &Gradation) -> ContactCertificate {
    let depth = g.depth();
    let (top, bottom) = (g.piece(2), g.piece(-2));
    let minus = g.piece(-1);
    let m = minus.dim();
    let mut pairing_rank = 0;
    let mut det = Q::zero();
    if bottom.dim() == 1 && m > 0 {
        let p = bottom.pivots()[0];
        let mat: Vec<Vec<Q>> = minus
            .basis()
            .iter()
            .map(|a| {
                minus
                    .basis()
                    .iter()
                    .map(|b| l.bracket(a, b).get(p))
                    .collect()
            })
            .collect();
        pairing_rank = rank_dense(&mat);
        det = determinant(&mat);
    }
    let a1_edge = l.dim() == 3 && depth == 2 && m == 0 && top.dim() == 1 && bottom.dim() == 1;
    let is_contact =
        depth == 2 && top.dim() == 1 && bottom.dim() == 1 && m > 0 && pairing_rank == m;
    ContactCertificate {
        depth,
        dim_top: top.dim(),
        dim_bottom: bottom.dim(),
        dim_minus_one: m,
        pairing_rank,
        pairing_det: crate::exact::fmt_q(&det),
        a1_edge,
        is_contact,
    }
}

/// Evidence for the symmetric-type test.
#[derive(Clone, Debug, Serialize)]
pub struct SymmetricCertificate {
    pub dim_n: usize,
    pub dim_q: usize,
    pub direct_sum: bool,
    /// First `(x, y)` with `x` in `N`, `y` in `V + W` and `[x, y]` outside `V + W`.
    pub nq_violation: Option<(SVec, SVec)>,
    /// First `(x, y)` in `V + W` with `[x, y]` outside `N`.
    pub qq_violation: Option<(SVec, SVec)>,
    pub is_symmetric: bool,
}

pub fn is_symmetric_type(l: &LieAlgebra, cd: &CanonicalDecomposition) -> SymmetricCertificate {
    let n = cd.n();
    let q = cd.vw();
    let direct_sum = n.dim() + q.dim() == l.dim() && n.meets_trivially(&q);
    let nq_violation = l.bracket_violation(&n, &q, &q);
    let qq_violation = if nq_violation.is_none() {
        l.bracket_violation(&q, &q, &n)
    } else {
        None
    };
    let is_symmetric = direct_sum && nq_violation.is_none() && qq_violation.is_none();
    SymmetricCertificate {
        dim_n: n.dim(),
        dim_q: q.dim(),
        direct_sum,
        nq_violation,
        qq_violation,
        is_symmetric,
    }
}

/// Kernel of `dtheta(x, y) = -B(e, [x, y]) / B(e, f)`.
pub fn dtheta_kernel(l: &LieAlgebra, t: &Sl2Triple) -> Subspace {
    let norm = l.killing(&t.e, &t.f);
    let theta = l.killing_dual(&t.e).scale(&norm.recip());
    null_space(l.dim(), l.dtheta_rows(&theta))
}

/// Classical families for the short-structure criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ClassicalKind {
    Sl,
    So,
    Sp,
}

/// Short-structure test on the dimensions of the irreducible summands of the defining representation.
pub fn vinberg_short_check(kind: ClassicalKind, partition: &[usize]) -> Result<bool, Sl2Error> {
    if partition.contains(&0) {
        return Err(Sl2Error::EmptyPart);
    }
    if let Some(first) = partition.first() {
        if partition.iter().any(|x| x % 2 != first % 2) {
            return Err(Sl2Error::MixedParity(partition.to_vec()));
        }
    }
    let small = partition.iter().all(|&x| x <= 3);
    let count = |k: usize| partition.iter().filter(|&&x| x == k).count();
    Ok(small
        && match kind {
            ClassicalKind::Sl => true,
            ClassicalKind::So => count(2) % 2 == 0,
            ClassicalKind::Sp => count(3) % 2 == 0,
        })
}

/// Dimension of an irreducible sl2-module from its highest weight.
pub fn irrep_dim(highest: i64) -> usize {
    (highest + 1) as usize
}

/// Multiplicities of the irreducible summands of the adjoint action restricted to `s`,
/// keyed by highest weight, read off from the gradation's eigenspace dimensions.
pub fn adjoint_irrep_multiplicities(g: &Gradation) -> BTreeMap<i64, usize> {
    let mut out = BTreeMap::new();
    for k in 0..=g.depth() {
        let here = g.piece_dim(k);
        let above = g.piece_dim(k + 2);
        if here > above {
            out.insert(k, here - above);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vinberg_rules() {
        assert_eq!(vinberg_short_check(ClassicalKind::Sl, &[3]), Ok(true));
        assert_eq!(vinberg_short_check(ClassicalKind::Sl, &[2, 2]), Ok(true));
        assert_eq!(vinberg_short_check(ClassicalKind::Sl, &[4]), Ok(false));
        assert_eq!(vinberg_short_check(ClassicalKind::So, &[2, 2, 2]), Ok(false));
        assert_eq!(vinberg_short_check(ClassicalKind::Sp, &[3, 1, 1]), Ok(false));
        assert!(vinberg_short_check(ClassicalKind::So, &[2, 2, 1]).is_err());
    }
}

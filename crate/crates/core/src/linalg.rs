//! Subspaces in reduced echelon form, null spaces and symmetric-form inertia.
//!
//! Every subspace of `Q^n` is stored by its reduced row echelon basis, so two
//! subspaces are equal exactly when their stored bases are equal.

use crate::exact::{Mat, SVec, Q};
use num::{One, Signed, Zero};

/// Subspace of `Q^ambient`, stored in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    /// Sorted by pivot; row `k` has a leading 1 at `pivots[k]` and zeros at every other pivot.
    rows: Vec<SVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, (0..ambient).map(SVec::unit))
    }

    pub fn span<I: IntoIterator<Item = SVec>>(ambient: usize, vecs: I) -> Self {
        let mut s = Self::zero(ambient);
        for v in vecs {
            s.insert(&v);
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Echelon basis.
    pub fn basis(&self) -> &[SVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Component of `v` off the pivot coordinates; zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &SVec) -> SVec {
        let mut r = v.clone();
        for (k, p) in self.pivots.iter().enumerate() {
            if let Some(c) = v.get_ref(*p) {
                r = r.axpy(&-c.clone(), &self.rows[k]);
            }
        }
        r
    }

    pub fn contains(&self, v: &SVec) -> bool {
        debug_assert!(v.support_end() <= self.ambient);
        self.reduce(v).is_zero()
    }

    /// Coordinates of `v` in the echelon basis, if `v` is in the subspace.
    pub fn coords(&self, v: &SVec) -> Option<Vec<Q>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|p| v.get(*p)).collect())
    }

    /// Adds `v` to the spanning set; returns whether the dimension grew.
    pub fn insert(&mut self, v: &SVec) -> bool {
        let r = self.reduce(v);
        let Some((p, c)) = r.leading().cloned() else {
            return false;
        };
        let r = r.scale(&c.recip());
        for row in self.rows.iter_mut() {
            if let Some(x) = row.get_ref(p) {
                let x = x.clone();
                *row = row.axpy(&-x, &r);
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.rows.insert(pos, r);
        true
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for v in &other.rows {
            s.insert(v);
        }
        s
    }

    /// Euclidean annihilator `{x : x.v = 0 for all v}`.
    pub fn annihilator(&self) -> Subspace {
        null_space(self.ambient, self.rows.iter().cloned())
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        if self.dim() == self.ambient {
            return other.clone();
        }
        if other.dim() == other.ambient {
            return self.clone();
        }
        let a = self.annihilator();
        let b = other.annihilator();
        null_space(self.ambient, a.rows.into_iter().chain(b.rows))
    }

    /// Whether `self ∩ other = 0`.
    pub fn meets_trivially(&self, other: &Subspace) -> bool {
        self.sum(other).dim() == self.dim() + other.dim()
    }

    /// A complement spanned by unit vectors on the non-pivot coordinates.
    pub fn coordinate_complement(&self) -> Subspace {
        let mut is_pivot = vec![false; self.ambient];
        for p in &self.pivots {
            is_pivot[*p] = true;
        }
        Subspace::span(
            self.ambient,
            (0..self.ambient).filter(|i| !is_pivot[*i]).map(SVec::unit),
        )
    }
}

/// Kernel of the linear map whose matrix has the given rows (each a covector on `Q^ncols`).
pub fn null_space<I: IntoIterator<Item = SVec>>(ncols: usize, rows: I) -> Subspace {
    let rs = Subspace::span(ncols, rows);
    let mut is_pivot = vec![false; ncols];
    for p in &rs.pivots {
        is_pivot[*p] = true;
    }
    let mut out = Vec::new();
    for f in (0..ncols).filter(|i| !is_pivot[*i]) {
        let mut pairs = vec![(f, Q::one())];
        for (k, p) in rs.pivots.iter().enumerate() {
            if let Some(c) = rs.rows[k].get_ref(f) {
                pairs.push((*p, -c.clone()));
            }
        }
        out.push(SVec::from_pairs(pairs));
    }
    Subspace::span(ncols, out)
}

/// Rank of a list of row vectors.
pub fn rank<I: IntoIterator<Item = SVec>>(ncols: usize, rows: I) -> usize {
    Subspace::span(ncols, rows).dim()
}

/// Rank of a dense matrix.
pub fn rank_dense(m: &Mat) -> usize {
    let ncols = m.first().map_or(0, |r| r.len());
    rank(ncols, m.iter().map(|r| SVec::from_dense(r)))
}

/// Inverse of a square matrix, or `None` if singular.
pub fn inverse(m: &Mat) -> Option<Mat> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        let prow = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Determinant by exact elimination.
pub fn determinant(m: &Mat) -> Q {
    let n = m.len();
    let mut a = m.clone();
    let mut det = Q::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Q::zero();
        };
        if piv != col {
            a.swap(col, piv);
            det = -det;
        }
        det *= &a[col][col];
        let prow = a[col].clone();
        for row in a.iter_mut().skip(col + 1) {
            if row[col].is_zero() {
                continue;
            }
            let f = &row[col] / &prow[col];
            for (x, p) in row.iter_mut().zip(&prow).skip(col) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
    }
    det
}

/// Sylvester inertia `(positive, negative, zero)` of a symmetric matrix.
pub fn inertia(m: &Mat) -> (usize, usize, usize) {
    let mut a = m.clone();
    let (mut pos, mut neg) = (0, 0);
    let mut n = a.len();
    while n > 0 {
        let k = match (0..n).find(|&i| !a[i][i].is_zero()) {
            Some(k) => k,
            None => {
                // Zero diagonal: replace e_i by e_i + e_j for some nonzero a_ij.
                let Some((i, j)) = (0..n)
                    .flat_map(|i| (0..n).map(move |j| (i, j)))
                    .find(|&(i, j)| i != j && !a[i][j].is_zero())
                else {
                    break;
                };
                let rj = a[j].clone();
                for (x, y) in a[i].iter_mut().zip(&rj) {
                    *x += y;
                }
                for row in a.iter_mut() {
                    let y = row[j].clone();
                    row[i] += y;
                }
                i
            }
        };
        let d = a[k][k].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        let rk = a[k].clone();
        let mut next = Vec::with_capacity(n - 1);
        for i in (0..n).filter(|&i| i != k) {
            let f = &a[i][k] / &d;
            let row: Vec<Q> = (0..n)
                .filter(|&j| j != k)
                .map(|j| {
                    if f.is_zero() || rk[j].is_zero() {
                        a[i][j].clone()
                    } else {
                        &a[i][j] - &f * &rk[j]
                    }
                })
                .collect();
            next.push(row);
        }
        a = next;
        n -= 1;
    }
    (pos, neg, m.len() - pos - neg)
}

/// Gram matrix of a symmetric form (given by its rows) on a list of vectors.
pub fn gram_on(form_rows: &[SVec], vecs: &[SVec]) -> Mat {
    let images: Vec<SVec> = vecs.iter().map(|v| apply_rows_t(form_rows, v)).collect();
    vecs.iter()
        .map(|u| images.iter().map(|gv| u.dot(gv)).collect())
        .collect()
}

/// `G^T v` for a matrix given by rows `G`: the covector `u -> v^T G u`.
pub fn apply_rows_t(rows: &[SVec], v: &SVec) -> SVec {
    let mut acc = SVec::zero();
    for (i, c) in v.iter() {
        acc = acc.axpy(c, &rows[*i]);
    }
    acc
}

/// `G v` for a matrix given by rows.
pub fn apply_rows(rows: &[SVec], v: &SVec) -> SVec {
    SVec::from_pairs(
        rows.iter()
            .enumerate()
            .map(|(i, r)| (i, r.dot(v)))
            .filter(|(_, c)| !c.is_zero()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    #[test]
    fn null_space_of_rank_one() {
        let ns = null_space(3, vec![SVec::from_ints(&[(0, 1), (1, 1), (2, 1)])]);
        assert_eq!(ns.dim(), 2);
        assert!(ns.contains(&SVec::from_ints(&[(0, 1), (2, -1)])));
    }

    #[test]
    fn intersection_of_planes() {
        let a = Subspace::span(3, vec![SVec::unit(0), SVec::unit(1)]);
        let b = Subspace::span(3, vec![SVec::unit(1), SVec::unit(2)]);
        assert_eq!(a.intersect(&b), Subspace::span(3, vec![SVec::unit(1)]));
    }

    #[test]
    fn inertia_of_hyperbolic_plane() {
        let m = vec![vec![q(0), q(1)], vec![q(1), q(0)]];
        assert_eq!(inertia(&m), (1, 1, 0));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = vec![vec![q(2), q(1)], vec![q(1), q(1)]];
        let inv = inverse(&m).unwrap();
        assert_eq!(crate::exact::mat_mul(&m, &inv), crate::exact::mat_identity(2));
    }
}

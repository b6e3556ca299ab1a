//! Exact rationals and sparse coordinate vectors.

use num::{BigInt, BigRational, One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Arbitrary-precision rational.
pub type Q = BigRational;

/// Integer as a rational.
pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// `n/d` in lowest terms. Panics on `d == 0`.
pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Renders a rational as `n` or `n/d`.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Sparse vector: entries sorted by index, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SVec(Vec<(usize, Q)>);

impl SVec {
    pub fn zero() -> Self {
        SVec(Vec::new())
    }

    /// Basis vector `e_i`.
    pub fn unit(i: usize) -> Self {
        SVec(vec![(i, Q::one())])
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, Q)>>(it: I) -> Self {
        let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
        for (i, c) in it {
            if c.is_zero() {
                continue;
            }
            *acc.entry(i).or_insert_with(Q::zero) += c;
        }
        SVec(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect())
    }

    /// Builds from integer pairs.
    pub fn from_ints(pairs: &[(usize, i64)]) -> Self {
        Self::from_pairs(pairs.iter().map(|&(i, c)| (i, q(c))))
    }

    pub fn from_dense(v: &[Q]) -> Self {
        SVec(
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        )
    }

    pub fn to_dense(&self, n: usize) -> Vec<Q> {
        let mut out = vec![Q::zero(); n];
        for (i, c) in &self.0 {
            out[*i] = c.clone();
        }
        out
    }

    pub fn get(&self, i: usize) -> Q {
        match self.0.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(k) => self.0[k].1.clone(),
            Err(_) => Q::zero(),
        }
    }

    pub fn get_ref(&self, i: usize) -> Option<&Q> {
        self.0
            .binary_search_by_key(&i, |(j, _)| *j)
            .ok()
            .map(|k| &self.0[k].1)
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Q)> {
        self.0.iter()
    }

    pub fn nnz(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// First nonzero entry.
    pub fn leading(&self) -> Option<&(usize, Q)> {
        self.0.first()
    }

    /// Largest index with a nonzero entry, plus one.
    pub fn support_end(&self) -> usize {
        self.0.last().map(|(i, _)| i + 1).unwrap_or(0)
    }

    /// `self + a * other`.
    pub fn axpy(&self, a: &Q, other: &SVec) -> SVec {
        if a.is_zero() {
            return self.clone();
        }
        let (x, y) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(x.len() + y.len());
        let (mut i, mut j) = (0, 0);
        while i < x.len() || j < y.len() {
            if j >= y.len() || (i < x.len() && x[i].0 < y[j].0) {
                out.push(x[i].clone());
                i += 1;
            } else if i >= x.len() || y[j].0 < x[i].0 {
                out.push((y[j].0, a * &y[j].1));
                j += 1;
            } else {
                let c = &x[i].1 + a * &y[j].1;
                if !c.is_zero() {
                    out.push((x[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        SVec(out)
    }

    pub fn add(&self, other: &SVec) -> SVec {
        self.axpy(&Q::one(), other)
    }

    pub fn sub(&self, other: &SVec) -> SVec {
        self.axpy(&-Q::one(), other)
    }

    pub fn scale(&self, a: &Q) -> SVec {
        if a.is_zero() {
            return SVec::zero();
        }
        SVec(self.0.iter().map(|(i, c)| (*i, c * a)).collect())
    }

    pub fn neg(&self) -> SVec {
        SVec(self.0.iter().map(|(i, c)| (*i, -c)).collect())
    }

    /// Euclidean pairing of coordinates.
    pub fn dot(&self, other: &SVec) -> Q {
        let (x, y) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        let mut s = Q::zero();
        while i < x.len() && j < y.len() {
            match x[i].0.cmp(&y[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    s += &x[i].1 * &y[j].1;
                    i += 1;
                    j += 1;
                }
            }
        }
        s
    }

    /// Rescales so the leading entry is 1; zero stays zero.
    pub fn normalized(&self) -> SVec {
        match self.leading() {
            Some((_, c)) if !c.is_one() => self.scale(&c.recip()),
            _ => self.clone(),
        }
    }

    /// Rescales to a primitive integer vector with positive leading entry.
    pub fn primitive(&self) -> SVec {
        use num::Integer;
        if self.is_zero() {
            return self.clone();
        }
        let mut l = BigInt::one();
        for (_, c) in &self.0 {
            l = l.lcm(c.denom());
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.0 {
            g = g.gcd(&(c.numer() * (&l / c.denom())));
        }
        let mut s = Q::new(l, g);
        if self.0[0].1.is_negative() {
            s = -s;
        }
        self.scale(&s)
    }
}

impl fmt::Display for SVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(i, c)| format!("{}*x{}", fmt_q(c), i))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Dense-row rational matrix.
pub type Mat = Vec<Vec<Q>>;

pub fn mat_zero(r: usize, c: usize) -> Mat {
    vec![vec![Q::zero(); c]; r]
}

pub fn mat_identity(n: usize) -> Mat {
    let mut m = mat_zero(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Q::one();
    }
    m
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let (n, k, m) = (a.len(), b.len(), b.first().map_or(0, |r| r.len()));
    let mut out = mat_zero(n, m);
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[l][j].is_zero() {
                    out[i][j] += &a[i][l] * &b[l][j];
                }
            }
        }
    }
    out
}

pub fn mat_sub(a: &Mat, b: &Mat) -> Mat {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect())
        .collect()
}

pub fn mat_add(a: &Mat, b: &Mat) -> Mat {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect())
        .collect()
}

pub fn mat_scale(a: &Mat, c: &Q) -> Mat {
    a.iter()
        .map(|r| r.iter().map(|x| x * c).collect())
        .collect()
}

pub fn mat_transpose(a: &Mat) -> Mat {
    let (n, m) = (a.len(), a.first().map_or(0, |r| r.len()));
    (0..m).map(|j| (0..n).map(|i| a[i][j].clone()).collect()).collect()
}

/// `[a, b] = ab - ba`.
pub fn commutator(a: &Mat, b: &Mat) -> Mat {
    mat_sub(&mat_mul(a, b), &mat_mul(b, a))
}

pub fn trace(a: &Mat) -> Q {
    (0..a.len()).fold(Q::zero(), |s, i| s + &a[i][i])
}

pub fn mat_is_zero(a: &Mat) -> bool {
    a.iter().all(|r| r.iter().all(|x| x.is_zero()))
}

/// Row-major flattening.
pub fn mat_flatten(a: &Mat) -> SVec {
    let m = a.first().map_or(0, |r| r.len());
    SVec::from_pairs(
        a.iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().enumerate().map(move |(j, x)| (i * m + j, x.clone()))),
    )
}

pub fn mat_unflatten(v: &SVec, n: usize) -> Mat {
    let mut m = mat_zero(n, n);
    for (k, c) in v.iter() {
        m[k / n][k % n] = c.clone();
    }
    m
}

impl serde::Serialize for SVec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axpy_cancels() {
        let a = SVec::from_ints(&[(0, 1), (3, 2)]);
        let b = SVec::from_ints(&[(3, 1), (5, 7)]);
        let c = a.axpy(&q(-2), &b);
        assert_eq!(c, SVec::from_ints(&[(0, 1), (5, -14)]));
    }

    #[test]
    fn primitive_clears_denominators() {
        let v = SVec::from_pairs(vec![(1, qf(-1, 2)), (4, qf(3, 4))]);
        assert_eq!(v.primitive(), SVec::from_ints(&[(1, 2), (4, -3)]));
    }
}

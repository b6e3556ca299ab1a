//! Root systems of the complex simple Lie algebras `A`–`G`.
//!
//! Nodes use Bourbaki numbering, 1-based in every public map:
//!
//! ```text
//! A_n  1 - 2 - ... - n
//! B_n  1 - 2 - ... - (n-1) => n        (n short)
//! C_n  1 - 2 - ... - (n-1) <= n        (n long)
//! D_n  1 - 2 - ... - (n-2) < (n-1), n  (n-2 joined to both n-1 and n)
//! E_n  1 - 3 - 4 - 5 - ... - n, with 2 attached to 4
//! F_4  1 - 2 => 3 - 4                  (1, 2 long)
//! G_2  1 <= 2                          (1 short)
//! ```
//!
//! Roots are integer vectors in the simple-root basis. Inner products come
//! from a symmetrized Cartan matrix scaled so that short roots have squared
//! length 2 (all integers); [`RootSystem::norm2`] rescales to long roots of
//! squared length 2.
//!
//! Some tables in the literature number the exceptional diagrams in the
//! Onishchik–Vinberg way (branch leaf last for `E_n`, `F_4` reversed).
//! [`gov_label`] converts a Bourbaki node to that numbering.

use crate::exact::{qf, Q};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Series> {
        Some(match c.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return None,
        })
    }
}

/// Cartan type such as `E8`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TypeLabel {
    pub series: Series,
    pub rank: usize,
}

impl TypeLabel {
    pub fn new(series: Series, rank: usize) -> Result<Self, RootError> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B => rank >= 2,
            Series::C => rank >= 3,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(TypeLabel { series, rank })
        } else {
            Err(RootError::InvalidType(series.letter(), rank))
        }
    }

    /// All valid types of rank at most `max_rank`, in series order.
    pub fn all_up_to(max_rank: usize) -> Vec<TypeLabel> {
        let mut out = Vec::new();
        for s in [
            Series::A,
            Series::B,
            Series::C,
            Series::D,
            Series::E,
            Series::F,
            Series::G,
        ] {
            for r in 1..=max_rank {
                if let Ok(t) = TypeLabel::new(s, r) {
                    out.push(t);
                }
            }
        }
        out
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.series, Series::A | Series::D | Series::E)
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

impl FromStr for TypeLabel {
    type Err = RootError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut chars = s.chars();
        let c = chars.next().ok_or(RootError::Parse(s.to_string()))?;
        let series = Series::from_letter(c).ok_or(RootError::Parse(s.to_string()))?;
        let rank: usize = chars
            .as_str()
            .trim_start_matches('_')
            .parse()
            .map_err(|_| RootError::Parse(s.to_string()))?;
        TypeLabel::new(series, rank)
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum RootError {
    #[error("no simple Lie algebra of type {0}{1} in the supported range (A>=1, B>=2, C>=3, D>=4, E6-8, F4, G2)")]
    InvalidType(char, usize),
    #[error("cannot parse type label {0:?}")]
    Parse(String),
    #[error("{0:?} is not a root")]
    NotARoot(Vec<i64>),
}

/// Root system data for one Cartan type.
#[derive(Clone, Debug, Serialize)]
pub struct RootSystem {
    pub type_label: TypeLabel,
    /// `cartan[i][j] = <alpha_i^vee, alpha_j>`.
    pub cartan: Vec<Vec<i64>>,
    /// Positive roots by height, then negatives in the same order.
    pub roots: Vec<Vec<i64>>,
    pub positive_roots: Vec<Vec<i64>>,
    pub highest_root: Vec<i64>,
    pub highest_short_root: Option<Vec<i64>>,
    pub fundamental_weight_decomp_of_highest_root: BTreeMap<usize, i64>,
    pub dynkin_marks: BTreeMap<usize, i64>,
    #[serde(skip)]
    sym: Vec<Vec<i64>>,
    #[serde(skip)]
    index: HashMap<Vec<i64>, usize>,
}

/// Symmetrized Cartan matrix, short roots of squared length 2.
fn symmetric_form(t: TypeLabel) -> Vec<Vec<i64>> {
    let n = t.rank;
    let mut b = vec![vec![0i64; n]; n];
    let link = |b: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        b[i][j] = v;
        b[j][i] = v;
    };
    match t.series {
        Series::A => {
            for i in 0..n {
                b[i][i] = 2;
            }
            for i in 0..n.saturating_sub(1) {
                link(&mut b, i, i + 1, -1);
            }
        }
        Series::B => {
            for i in 0..n - 1 {
                b[i][i] = 4;
            }
            b[n - 1][n - 1] = 2;
            for i in 0..n - 1 {
                link(&mut b, i, i + 1, -2);
            }
        }
        Series::C => {
            for i in 0..n - 1 {
                b[i][i] = 2;
            }
            b[n - 1][n - 1] = 4;
            for i in 0..n - 2 {
                link(&mut b, i, i + 1, -1);
            }
            link(&mut b, n - 2, n - 1, -2);
        }
        Series::D => {
            for i in 0..n {
                b[i][i] = 2;
            }
            for i in 0..n - 2 {
                link(&mut b, i, i + 1, -1);
            }
            link(&mut b, n - 3, n - 1, -1);
        }
        Series::E => {
            for i in 0..n {
                b[i][i] = 2;
            }
            link(&mut b, 0, 2, -1);
            link(&mut b, 1, 3, -1);
            for i in 2..n - 1 {
                link(&mut b, i, i + 1, -1);
            }
        }
        Series::F => {
            b[0][0] = 4;
            b[1][1] = 4;
            b[2][2] = 2;
            b[3][3] = 2;
            link(&mut b, 0, 1, -2);
            link(&mut b, 1, 2, -2);
            link(&mut b, 2, 3, -1);
        }
        Series::G => {
            b[0][0] = 2;
            b[1][1] = 6;
            link(&mut b, 0, 1, -3);
        }
    }
    b
}

/// Builds the root system of the given type by closure from the simple roots.
pub fn build_root_system(series: Series, rank: usize) -> Result<RootSystem, RootError> {
    let t = TypeLabel::new(series, rank)?;
    let n = rank;
    let sym = symmetric_form(t);
    let cartan: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| 2 * sym[i][j] / sym[i][i]).collect())
        .collect();
    let pair = |beta: &[i64], i: usize| -> i64 {
        let s: i64 = (0..n).map(|j| beta[j] * sym[j][i]).sum();
        2 * s / sym[i][i]
    };

    let mut positive: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    let mut known: BTreeSet<Vec<i64>> = positive.iter().cloned().collect();
    let mut layer = positive.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                let mut down = beta.clone();
                let mut p = 0;
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let qv = p - pair(beta, i);
                if qv > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        next.sort();
        positive.extend(next.iter().cloned());
        layer = next;
    }
    positive.sort_by(|a, b| {
        let (ha, hb): (i64, i64) = (a.iter().sum(), b.iter().sum());
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });

    let highest_root = positive.last().cloned().expect("nonempty");
    let is_long = |r: &[i64]| -> bool {
        let l = norm2_raw(&sym, r);
        let max = (0..n).map(|i| sym[i][i]).max().unwrap();
        l == max
    };
    let highest_short_root = if t.is_simply_laced() {
        None
    } else {
        positive.iter().rev().find(|r| !is_long(r)).cloned()
    };
    let fundamental_weight_decomp_of_highest_root = (0..n)
        .map(|i| (i + 1, pair(&highest_root, i)))
        .filter(|(_, c)| *c != 0)
        .collect();
    let dynkin_marks = (0..n).map(|i| (i + 1, highest_root[i])).collect();

    let mut roots = positive.clone();
    roots.extend(positive.iter().map(|r| r.iter().map(|x| -x).collect::<Vec<_>>()));
    let index = roots.iter().cloned().enumerate().map(|(k, r)| (r, k)).collect();

    Ok(RootSystem {
        type_label: t,
        cartan,
        roots,
        positive_roots: positive,
        highest_root,
        highest_short_root,
        fundamental_weight_decomp_of_highest_root,
        dynkin_marks,
        sym,
        index,
    })
}

fn norm2_raw(sym: &[Vec<i64>], r: &[i64]) -> i64 {
    let n = r.len();
    let mut s = 0;
    for i in 0..n {
        for j in 0..n {
            s += r[i] * sym[i][j] * r[j];
        }
    }
    s
}

impl RootSystem {
    pub fn from_label(t: TypeLabel) -> Self {
        build_root_system(t.series, t.rank).expect("label already validated")
    }

    pub fn rank(&self) -> usize {
        self.type_label.rank
    }

    /// Number of positive roots.
    pub fn num_positive(&self) -> usize {
        self.positive_roots.len()
    }

    /// Index of a root in [`RootSystem::roots`].
    pub fn root_index(&self, r: &[i64]) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn is_root(&self, r: &[i64]) -> bool {
        self.index.contains_key(r)
    }

    /// Inner product with long roots of squared length 2.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> Q {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            for j in 0..n {
                s += a[i] * self.sym[i][j] * b[j];
            }
        }
        qf(2 * s, self.long_raw())
    }

    pub fn norm2(&self, a: &[i64]) -> Q {
        self.inner(a, a)
    }

    fn long_raw(&self) -> i64 {
        (0..self.rank()).map(|i| self.sym[i][i]).max().unwrap()
    }

    /// Integer inner product in the internal scaling (short roots squared length 2).
    pub fn inner_raw(&self, a: &[i64], b: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            for j in 0..n {
                s += a[i] * self.sym[i][j] * b[j];
            }
        }
        s
    }

    /// `<beta, alpha_i^vee>` for the 0-based simple root `i`.
    pub fn pairing_simple(&self, beta: &[i64], i: usize) -> i64 {
        let s: i64 = (0..self.rank()).map(|j| beta[j] * self.sym[j][i]).sum();
        2 * s / self.sym[i][i]
    }

    /// `<beta, alpha^vee>` for an arbitrary root `alpha`.
    pub fn pairing(&self, beta: &[i64], alpha: &[i64]) -> i64 {
        2 * self.inner_raw(beta, alpha) / self.inner_raw(alpha, alpha)
    }

    pub fn is_long(&self, r: &[i64]) -> bool {
        self.inner_raw(r, r) == self.long_raw()
    }

    pub fn height(r: &[i64]) -> i64 {
        r.iter().sum()
    }

    /// Coefficients of `alpha^vee` in the simple coroots.
    pub fn coroot_coeffs(&self, alpha: &[i64]) -> Vec<i64> {
        let la = self.inner_raw(alpha, alpha);
        (0..self.rank())
            .map(|i| alpha[i] * self.sym[i][i] / la)
            .collect()
    }

    /// Dimension of the Lie algebra, `|roots| + rank`.
    pub fn algebra_dim(&self) -> usize {
        self.roots.len() + self.rank()
    }

    /// Dimension of the Levi subalgebra obtained by deleting the given (1-based) nodes.
    pub fn levi_dim(&self, nodes: &BTreeSet<usize>) -> usize {
        let zero_roots = self
            .roots
            .iter()
            .filter(|r| nodes.iter().all(|&i| r[i - 1] == 0))
            .count();
        zero_roots + self.rank()
    }

    /// Roots sorted lexicographically, as JSON.
    pub fn to_json(&self) -> serde_json::Value {
        let mut roots = self.roots.clone();
        roots.sort();
        let mut v = serde_json::to_value(self).expect("serializable");
        v["roots"] = serde_json::to_value(roots).expect("serializable");
        v["type_label"] = serde_json::Value::String(self.type_label.to_string());
        v
    }
}

/// `<theta, alpha_i^vee>` for every node with a nonzero value (1-based).
pub fn highest_root_in_weights(rs: &RootSystem) -> BTreeMap<usize, i64> {
    rs.fundamental_weight_decomp_of_highest_root.clone()
}

/// Nodes whose fundamental weights occur in the highest root.
pub fn contact_grading_node_set(rs: &RootSystem) -> BTreeSet<usize> {
    highest_root_in_weights(rs).keys().copied().collect()
}

/// Nodes with Dynkin mark 1.
pub fn depth_one_node_set(rs: &RootSystem) -> BTreeSet<usize> {
    rs.dynkin_marks
        .iter()
        .filter(|(_, m)| **m == 1)
        .map(|(i, _)| *i)
        .collect()
}

/// The involution `i -> j` with `-w0(alpha_i) = alpha_j`, where `w0` is the longest
/// element of the parabolic subgroup generated by `nodes` (1-based).
pub fn opposition_involution(cartan: &[Vec<i64>], nodes: &BTreeSet<usize>) -> BTreeMap<usize, usize> {
    let idx: Vec<usize> = nodes.iter().map(|i| i - 1).collect();
    let r = cartan.len();
    // Walk rho_S down to -rho_S, recording the simple reflections used.
    let mut x = vec![0i64; r];
    for &i in &idx {
        x[i] = 1;
    }
    let mut word = Vec::new();
    while let Some(&i) = idx.iter().find(|&&i| x[i] > 0) {
        let xi = x[i];
        for &j in &idx {
            x[j] -= xi * cartan[j][i];
        }
        word.push(i);
    }
    let mut out = BTreeMap::new();
    for &k in &idx {
        let mut beta = vec![0i64; r];
        beta[k] = 1;
        for &i in &word {
            let c: i64 = (0..r).map(|m| beta[m] * cartan[i][m]).sum();
            beta[i] -= c;
        }
        let j = beta
            .iter()
            .position(|&b| b == -1)
            .expect("w0 sends simple roots to negative simple roots");
        out.insert(k + 1, j + 1);
    }
    out
}

/// Bourbaki node to Onishchik–Vinberg node. Identity outside `E6, E7, E8, F4`.
pub fn gov_label(t: TypeLabel, bourbaki: usize) -> usize {
    const E6: [usize; 6] = [1, 6, 2, 3, 4, 5];
    const E7: [usize; 7] = [6, 7, 5, 4, 3, 2, 1];
    const E8: [usize; 8] = [7, 8, 6, 5, 4, 3, 2, 1];
    match (t.series, t.rank) {
        (Series::E, 6) => E6[bourbaki - 1],
        (Series::E, 7) => E7[bourbaki - 1],
        (Series::E, 8) => E8[bourbaki - 1],
        (Series::F, 4) => 5 - bourbaki,
        _ => bourbaki,
    }
}

/// Renders a weight map as `pi_1 + 2pi_3`, optionally in GOV numbering.
pub fn format_weights(t: TypeLabel, w: &BTreeMap<usize, i64>, gov: bool) -> String {
    let mut terms: Vec<(usize, i64)> = w
        .iter()
        .map(|(i, c)| (if gov { gov_label(t, *i) } else { *i }, *c))
        .collect();
    terms.sort();
    terms
        .iter()
        .map(|(i, c)| {
            if *c == 1 {
                format!("pi{i}")
            } else {
                format!("{c}pi{i}")
            }
        })
        .collect::<Vec<_>>()
        .join("+")
}

/// Closed-form root count.
pub fn expected_root_count(t: TypeLabel) -> usize {
    let n = t.rank;
    match t.series {
        Series::A => n * (n + 1),
        Series::B | Series::C => 2 * n * n,
        Series::D => 2 * n * (n - 1),
        Series::E => match n {
            6 => 72,
            7 => 126,
            _ => 240,
        },
        Series::F => 48,
        Series::G => 12,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_has_two_roots() {
        let rs = build_root_system(Series::A, 1).unwrap();
        assert_eq!(rs.roots, vec![vec![1], vec![-1]]);
    }

    #[test]
    fn opposition_involutions() {
        let nontrivial = |t: &str| {
            let rs = RootSystem::from_label(t.parse().unwrap());
            let all: BTreeSet<usize> = (1..=rs.rank()).collect();
            opposition_involution(&rs.cartan, &all)
                .into_iter()
                .filter(|(a, b)| a < b)
                .collect::<Vec<_>>()
        };
        assert_eq!(nontrivial("A4"), vec![(1, 4), (2, 3)]);
        assert_eq!(nontrivial("D5"), vec![(4, 5)]);
        assert_eq!(nontrivial("E6"), vec![(1, 6), (3, 5)]);
        for t in ["A1", "B3", "C4", "D4", "D6", "E7", "E8", "F4", "G2"] {
            assert!(nontrivial(t).is_empty(), "{t}");
        }
        let e6 = RootSystem::from_label("E6".parse().unwrap());
        let sub = opposition_involution(&e6.cartan, &BTreeSet::from([3, 4, 5]));
        assert_eq!(sub, BTreeMap::from([(3, 5), (4, 4), (5, 3)]));
    }

    #[test]
    fn g2_long_and_short() {
        let rs = build_root_system(Series::G, 2).unwrap();
        assert_eq!(rs.roots.len(), 12);
        let long = rs.roots.iter().filter(|r| rs.is_long(r)).count();
        assert_eq!(long, 6);
        assert_eq!(rs.highest_root, vec![3, 2]);
        assert_eq!(rs.highest_short_root, Some(vec![2, 1]));
    }

    #[test]
    fn invalid_rank_rejected() {
        assert!(build_root_system(Series::D, 3).is_err());
        assert!(build_root_system(Series::E, 9).is_err());
    }

    #[test]
    fn gov_map_is_bijective() {
        for t in ["E6", "E7", "E8", "F4"] {
            let t: TypeLabel = t.parse().unwrap();
            let imgs: BTreeSet<usize> = (1..=t.rank).map(|i| gov_label(t, i)).collect();
            assert_eq!(imgs, (1..=t.rank).collect());
        }
    }
}

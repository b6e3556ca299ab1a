//! Chevalley bases.
//!
//! Basis order: positive roots (as in [`RootSystem::positive_roots`]), the
//! negative roots in the same order, then the simple coroots `h_1..h_r`.
//!
//! `[e_a, e_-a] = h_a` (the coroot), `[h_i, e_a] = <a, alpha_i^vee> e_a`, and
//! `[e_a, e_b] = N_{a,b} e_{a+b}`. For every positive non-simple root `x` the
//! extraspecial pair is `(s, x - s)` with `s` the first simple root (by index)
//! such that `x - s` is a root; we set `N_{s, x-s} = p + 1 > 0`. All other
//! constants follow from the standard identities
//!
//! * `N_{a,b} / (c,c) = N_{b,c} / (a,a) = N_{c,a} / (b,b)` when `a + b + c = 0`,
//! * `N_{-a,-b} = -N_{a,b}`,
//! * the four-root relation for `a + b + c + d = 0`.

use super::{Field, LieAlgebra, Provenance};
use crate::exact::{q, SVec, Q};
use crate::rootsys::{RootSystem, TypeLabel};
use num::{Signed, Zero};
use std::collections::HashMap;

fn neg(r: &[i64]) -> Vec<i64> {
    r.iter().map(|x| -x).collect()
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn is_pos(r: &[i64]) -> bool {
    RootSystem::height(r) > 0
}

/// Structure constants `N_{a,b}` for all pairs of roots.
pub struct StructureConstants<'a> {
    rs: &'a RootSystem,
    positive: HashMap<(usize, usize), Q>,
}

impl<'a> StructureConstants<'a> {
    pub fn new(rs: &'a RootSystem) -> Self {
        let mut sc = StructureConstants {
            rs,
            positive: HashMap::new(),
        };
        let pos = rs.positive_roots.clone();
        let npos = pos.len();
        for xi in pos.iter().filter(|r| RootSystem::height(r) >= 2) {
            let decomps: Vec<(usize, usize)> = (0..npos)
                .filter_map(|a| {
                    let b: Vec<i64> = xi.iter().zip(&pos[a]).map(|(x, y)| x - y).collect();
                    rs.root_index(&b).filter(|&bi| bi < npos).map(|bi| (a, bi))
                })
                .collect();
            let (a1, b1) = *decomps
                .iter()
                .find(|(a, _)| RootSystem::height(&pos[*a]) == 1)
                .expect("every non-simple positive root has a simple summand");
            let p = sc.string_down(&pos[b1], &pos[a1]);
            let n1 = q(p + 1);
            sc.positive.insert((a1, b1), n1.clone());
            sc.positive.insert((b1, a1), -n1.clone());
            let norm_xi = rs.norm2(xi);
            let (al1, be1) = (pos[a1].clone(), pos[b1].clone());
            for &(a, b) in &decomps {
                if a == a1 || a == b1 || a > b {
                    continue;
                }
                let (al, be) = (pos[a].clone(), pos[b].clone());
                let mut s = Q::zero();
                let d1 = add(&be, &neg(&al1));
                if rs.is_root(&d1) {
                    s += sc.n(&be, &neg(&al1)) * sc.n(&al, &neg(&be1)) / rs.norm2(&d1);
                }
                let d2 = add(&al, &neg(&al1));
                if rs.is_root(&d2) {
                    s += sc.n(&neg(&al1), &al) * sc.n(&be, &neg(&be1)) / rs.norm2(&d2);
                }
                let v = &norm_xi / &n1 * s;
                sc.positive.insert((b, a), -v.clone());
                sc.positive.insert((a, b), v);
            }
        }
        sc
    }

    /// Largest `p` with `beta - p*alpha` a root.
    fn string_down(&self, beta: &[i64], alpha: &[i64]) -> i64 {
        let mut p = 0;
        let mut cur = beta.to_vec();
        loop {
            cur = add(&cur, &neg(alpha));
            if self.rs.is_root(&cur) {
                p += 1;
            } else {
                return p;
            }
        }
    }

    /// `N_{a,b}`; zero when `a + b` is not a root.
    pub fn n(&self, a: &[i64], b: &[i64]) -> Q {
        let s = add(a, b);
        if !self.rs.is_root(&s) {
            return Q::zero();
        }
        let rs = self.rs;
        match (is_pos(a), is_pos(b)) {
            (true, true) => {
                let (ia, ib) = (rs.root_index(a).unwrap(), rs.root_index(b).unwrap());
                self.positive
                    .get(&(ia, ib))
                    .cloned()
                    .expect("positive pair filled by height")
            }
            (false, false) => -self.n(&neg(a), &neg(b)),
            (true, false) => {
                let c = neg(&s);
                if is_pos(&s) {
                    rs.norm2(&c) / rs.norm2(a) * self.n(b, &c)
                } else {
                    rs.norm2(&c) / rs.norm2(b) * self.n(&c, a)
                }
            }
            (false, true) => -self.n(b, a),
        }
    }
}

/// Index of the Chevalley basis vector `e_r`.
pub fn root_basis_index(rs: &RootSystem, r: &[i64]) -> Option<usize> {
    rs.root_index(r)
}

/// Index of the simple coroot `h_i` (0-based `i`).
pub fn cartan_basis_index(rs: &RootSystem, i: usize) -> usize {
    rs.roots.len() + i
}

/// Root vector `e_r` as an element.
pub fn root_vector(rs: &RootSystem, r: &[i64]) -> Option<SVec> {
    rs.root_index(r).map(SVec::unit)
}

/// Coroot `h_r` expressed in the simple coroots.
pub fn coroot_element(rs: &RootSystem, r: &[i64]) -> SVec {
    let c = rs.coroot_coeffs(r);
    SVec::from_pairs(
        c.iter()
            .enumerate()
            .map(|(i, x)| (cartan_basis_index(rs, i), q(*x))),
    )
}

/// Cartan element `h` with `alpha_j(h) = delta_ij` (fundamental coweight of 0-based node `i`).
pub fn fundamental_coweight(rs: &RootSystem, i: usize) -> SVec {
    let n = rs.rank();
    // Solve sum_k c_k <alpha_j, alpha_k^vee> = delta_ij.
    let m: crate::exact::Mat = (0..n)
        .map(|j| (0..n).map(|k| q(rs.cartan[k][j])).collect())
        .collect();
    let inv = crate::linalg::inverse(&m).expect("Cartan matrix is invertible");
    SVec::from_pairs((0..n).map(|k| (cartan_basis_index(rs, k), inv[k][i].clone())))
}

fn root_label(r: &[i64]) -> String {
    let body: Vec<String> = r.iter().map(|x| x.to_string()).collect();
    format!("e[{}]", body.join(","))
}

/// Complex simple Lie algebra in a Chevalley basis.
pub fn chevalley_algebra(rs: &RootSystem) -> LieAlgebra {
    let sc = StructureConstants::new(rs);
    let nr = rs.roots.len();
    let rank = rs.rank();
    let mut labels: Vec<String> = rs.roots.iter().map(|r| root_label(r)).collect();
    labels.extend((1..=rank).map(|i| format!("h{i}")));
    let sum_index: HashMap<(usize, usize), (usize, Q)> = {
        let mut m = HashMap::new();
        for (a, ra) in rs.roots.iter().enumerate() {
            for (b, rb) in rs.roots.iter().enumerate() {
                let s = add(ra, rb);
                if let Some(k) = rs.root_index(&s) {
                    m.insert((a, b), (k, sc.n(ra, rb)));
                }
            }
        }
        m
    };
    LieAlgebra::from_upper(
        rs.type_label.to_string(),
        labels,
        Field::Complex,
        Provenance::Chevalley(rs.type_label),
        |i, j| {
            if i < nr && j < nr {
                let (ra, rb) = (&rs.roots[i], &rs.roots[j]);
                if ra.iter().zip(rb).all(|(x, y)| x + y == 0) {
                    return coroot_element(rs, ra);
                }
                match sum_index.get(&(i, j)) {
                    Some((k, c)) if !c.is_zero() => SVec::from_pairs([(*k, c.clone())]),
                    _ => SVec::zero(),
                }
            } else if i < nr {
                // [e_a, h_k] = -<a, alpha_k^vee> e_a
                let k = j - nr;
                let c = rs.pairing_simple(&rs.roots[i], k);
                SVec::from_pairs([(i, q(-c))])
            } else {
                SVec::zero()
            }
        },
    )
}

/// The rational span of the Chevalley basis, viewed as the split real form.
pub fn split_real_form(l: &LieAlgebra) -> Result<LieAlgebra, super::LieError> {
    let Provenance::Chevalley(t) = l.provenance().clone() else {
        return Err(super::LieError::Other(
            "split real form needs a Chevalley algebra".into(),
        ));
    };
    let mut out = l.clone();
    out.set_field(Field::Real);
    out.set_provenance(Provenance::NormalRealForm(t));
    out.set_name(split_name(t));
    Ok(out)
}

/// Conventional name of the split real form.
pub fn split_name(t: TypeLabel) -> String {
    use crate::rootsys::Series::*;
    let n = t.rank;
    match t.series {
        A => format!("sl{}(R)", n + 1),
        B => format!("so({},{})", n, n + 1),
        C => format!("sp{}(R)", n),
        D => format!("so({},{})", n, n),
        E => format!("e{}({})", n, n),
        F => "f4(4)".into(),
        G => "g2(2)".into(),
    }
}

/// Absolute value of every structure constant matches `p + 1`.
pub fn check_string_magnitudes(rs: &RootSystem) -> bool {
    let sc = StructureConstants::new(rs);
    for a in &rs.roots {
        for b in &rs.roots {
            let s = add(a, b);
            if !rs.is_root(&s) {
                continue;
            }
            let p = sc.string_down(b, a);
            if sc.n(a, b).abs() != q(p + 1) {
                return false;
            }
        }
    }
    true
}

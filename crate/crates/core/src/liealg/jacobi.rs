//! Jacobi identity checks on structure constants.

use super::chevalley::{cartan_basis_index, chevalley_algebra};
use super::matrix::{classical_real_form, FormName};
use super::LieAlgebra;
use crate::rootsys::{RootSystem, Series, TypeLabel};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Number of basis triples `i < j < k` with nonzero Jacobi residual.
pub fn jacobi_exhaustive(l: &LieAlgebra) -> usize {
    let n = l.dim();
    (0..n)
        .into_par_iter()
        .map(|i| {
            let mut bad = 0;
            for j in i + 1..n {
                for k in j + 1..n {
                    if !l.jacobi_residual(i, j, k).is_zero() {
                        bad += 1;
                    }
                }
            }
            bad
        })
        .sum()
}

/// Violations among `samples` random basis triples plus every triple with an index in `cartan`.
pub fn jacobi_randomized(l: &LieAlgebra, cartan: &[usize], samples: usize, seed: u64) -> usize {
    let n = l.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random: Vec<(usize, usize, usize)> = (0..samples)
        .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)))
        .collect();
    let random_bad = random
        .par_iter()
        .filter(|&&(i, j, k)| !l.jacobi_residual(i, j, k).is_zero())
        .count();
    let cartan_bad: usize = cartan
        .par_iter()
        .map(|&c| {
            let mut bad = 0;
            for j in 0..n {
                for k in j + 1..n {
                    if !l.jacobi_residual(c, j, k).is_zero() {
                        bad += 1;
                    }
                }
            }
            bad
        })
        .sum();
    random_bad + cartan_bad
}

/// Violation count of one algebra in [`suite`].
#[derive(Clone, Debug, serde::Serialize)]
pub struct JacobiResult {
    pub algebra: String,
    pub dim: usize,
    pub exhaustive: bool,
    pub violations: usize,
}

/// Exhaustive checks on every Chevalley algebra of dimension at most 52 and every
/// classical real form of dimension at most 66; `samples` random triples plus all
/// Cartan-touching triples on E6, E7, E8.
pub fn suite(samples: usize) -> Vec<JacobiResult> {
    let mut out: Vec<JacobiResult> = TypeLabel::all_up_to(8)
        .into_par_iter()
        .map(RootSystem::from_label)
        .filter(|rs| rs.algebra_dim() <= 52)
        .map(|rs| {
            let l = chevalley_algebra(&rs);
            JacobiResult {
                algebra: rs.type_label.to_string(),
                dim: l.dim(),
                exhaustive: true,
                violations: jacobi_exhaustive(&l),
            }
        })
        .collect();
    out.extend(
        FormName::all_up_to_dim(66)
            .into_par_iter()
            .map(|f| {
                let c = classical_real_form(f.clone()).expect("classical form builds");
                JacobiResult {
                    algebra: f.to_string(),
                    dim: c.algebra.dim(),
                    exhaustive: true,
                    violations: jacobi_exhaustive(&c.algebra),
                }
            })
            .collect::<Vec<_>>(),
    );
    for rank in 6..=8 {
        let rs = RootSystem::from_label(TypeLabel::new(Series::E, rank).expect("E6 to E8"));
        let l = chevalley_algebra(&rs);
        let cartan: Vec<usize> = (0..rank).map(|i| cartan_basis_index(&rs, i)).collect();
        out.push(JacobiResult {
            algebra: rs.type_label.to_string(),
            dim: l.dim(),
            exhaustive: false,
            violations: jacobi_randomized(&l, &cartan, samples, rank as u64),
        });
    }
    out
}

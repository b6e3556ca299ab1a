//! Non-conical data: for a semisimple `xi` with `theta = B(xi, .)`,
//! `g = k + p` with `k = h + R eta`, and `dtheta` symplectic on `p`.

use crate::exact::{fmt_q, SVec, Q};
use crate::liealg::LieAlgebra;
use crate::linalg::{null_space, rank_dense, Subspace};
use num::Zero;
use serde::Serialize;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ContactizeError {
    #[error("the form theta is zero")]
    ZeroForm,
    #[error("theta vanishes on its stabilizer: the orbit is conical")]
    Conical,
    #[error("no element of the center of k pairs nontrivially with theta")]
    NoEta,
    #[error("p (dim {dim}) does not complement h in ker theta")]
    BadComplement { dim: usize },
    #[error("dtheta has rank {rank} on p of dimension {dim}")]
    Degenerate { rank: usize, dim: usize },
}

/// `k = {x : theta o ad_x = 0}`, the stabilizer of `theta`.
pub fn stabilizer(l: &LieAlgebra, theta: &SVec) -> Subspace {
    null_space(l.dim(), l.dtheta_rows(theta))
}

/// Whether `theta` vanishes on its own stabilizer.
pub fn conical_check(l: &LieAlgebra, theta: &SVec) -> Result<bool, ContactizeError> {
    if theta.is_zero() {
        return Err(ContactizeError::ZeroForm);
    }
    Ok(stabilizer(l, theta).basis().iter().all(|v| v.dot(theta).is_zero()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PChoice {
    /// B-orthogonal complement of `k`.
    Orthogonal,
    /// Image of `ad_xi`.
    AdImage,
}

#[derive(Clone, Debug)]
pub struct Contactization {
    pub xi: SVec,
    pub theta: SVec,
    pub k: Subspace,
    pub h: Subspace,
    pub eta: SVec,
    pub p: Subspace,
    pub p_choice: PChoice,
    /// `B(xi, xi) = 0`.
    pub isotropic: bool,
    /// Rank of `dtheta` on `p`.
    pub dtheta_rank: usize,
}

/// Gram matrix of `dtheta` on a list of vectors.
pub fn dtheta_gram(l: &LieAlgebra, theta: &SVec, vecs: &[SVec]) -> Vec<Vec<Q>> {
    vecs.iter()
        .map(|a| vecs.iter().map(|b| -l.bracket(a, b).dot(theta)).collect())
        .collect()
}

pub fn build_contactization(l: &LieAlgebra, xi: &SVec) -> Result<Contactization, ContactizeError> {
    let theta = l.killing_dual(xi);
    if theta.is_zero() {
        return Err(ContactizeError::ZeroForm);
    }
    let k = stabilizer(l, &theta);
    if k.basis().iter().all(|v| v.dot(&theta).is_zero()) {
        return Err(ContactizeError::Conical);
    }
    let ker_theta = l.kernel_of_form(&theta);
    let h = k.intersect(&ker_theta);
    let center = l.center_of(&k);
    let eta = center
        .basis()
        .iter()
        .find(|z| !z.dot(&theta).is_zero())
        .map(|z| z.scale(&z.dot(&theta).recip()))
        .ok_or(ContactizeError::NoEta)?;
    let (_, _, k_null) = l.killing_inertia(&k);
    let (p, p_choice) = if k_null == 0 {
        (l.orth_complement(&k).intersect(&ker_theta), PChoice::Orthogonal)
    } else {
        let image = l.span((0..l.dim()).map(|j| l.bracket(xi, &SVec::unit(j))));
        (image.intersect(&ker_theta), PChoice::AdImage)
    };
    if p.dim() + h.dim() != ker_theta.dim() || !p.meets_trivially(&h) {
        return Err(ContactizeError::BadComplement { dim: p.dim() });
    }
    let gram = dtheta_gram(l, &theta, p.basis());
    let dtheta_rank = rank_dense(&gram);
    if dtheta_rank != p.dim() {
        return Err(ContactizeError::Degenerate {
            rank: dtheta_rank,
            dim: p.dim(),
        });
    }
    Ok(Contactization {
        isotropic: l.killing(xi, xi).is_zero(),
        xi: xi.clone(),
        theta,
        k,
        h,
        eta,
        p,
        p_choice,
        dtheta_rank,
    })
}

/// Evidence that `(g, s, dtheta)` is a symplectic symmetric Lie algebra.
#[derive(Clone, Debug, Serialize)]
pub struct SymplecticCertificate {
    pub dim_k: usize,
    pub dim_h: usize,
    pub dim_p: usize,
    pub pp_in_k: bool,
    pub kp_in_p: bool,
    /// `h` is an ideal of `k`.
    pub h_ideal: bool,
    pub dtheta_invariant: bool,
    /// `c` with `ad_xi^2 = c` on `p`; `c > 0` real eigenvalues, `c < 0` imaginary.
    /// `None` when `ad_xi^2` is not a real scalar there (complex `xi` in a realification).
    pub ad_xi_squared: Option<String>,
    pub is_symplectic_symmetric: bool,
}

pub fn verify_symplectic_symmetric(l: &LieAlgebra, c: &Contactization) -> SymplecticCertificate {
    let pp_in_k = l.bracket_violation(&c.p, &c.p, &c.k).is_none();
    let kp_in_p = l.bracket_violation(&c.k, &c.p, &c.p).is_none();
    let h_ideal = l.bracket_violation(&c.k, &c.h, &c.h).is_none();
    let mut dtheta_invariant = true;
    'outer: for x in c.k.basis() {
        let images: Vec<SVec> = c.p.basis().iter().map(|a| l.bracket(x, a)).collect();
        for (ia, a) in c.p.basis().iter().enumerate() {
            for (ib, b) in c.p.basis().iter().enumerate().skip(ia) {
                let s = l.bracket(&images[ia], b).add(&l.bracket(a, &images[ib]));
                if !s.dot(&c.theta).is_zero() {
                    dtheta_invariant = false;
                    break 'outer;
                }
            }
        }
    }
    let scalar = ad_xi_squared_scalar(l, c);
    let is_symplectic_symmetric = pp_in_k && kp_in_p && h_ideal && dtheta_invariant;
    SymplecticCertificate {
        dim_k: c.k.dim(),
        dim_h: c.h.dim(),
        dim_p: c.p.dim(),
        pp_in_k,
        kp_in_p,
        h_ideal,
        dtheta_invariant,
        ad_xi_squared: scalar.as_ref().map(fmt_q),
        is_symplectic_symmetric,
    }
}

/// The scalar `c` with `[xi, [xi, x]] = c x` for all `x` in `p`, if there is one.
pub fn ad_xi_squared_scalar(l: &LieAlgebra, c: &Contactization) -> Option<Q> {
    let mut scalar: Option<Q> = None;
    for x in c.p.basis() {
        let y = l.bracket(&c.xi, &l.bracket(&c.xi, x));
        let (i, a) = x.leading()?;
        let s = y.get(*i) / a;
        if y != x.scale(&s) {
            return None;
        }
        match &scalar {
            Some(t) if *t != s => return None,
            _ => scalar = Some(s),
        }
    }
    scalar
}

//! Properties over the corpus of split real forms of rank at most 4: every root
//! vector, every coroot, and the regular sl2-triple of every positive root.

use contactgrad::contactize::{build_contactization, conical_check, verify_symplectic_symmetric};
use contactgrad::exact::SVec;
use contactgrad::liealg::chevalley::{coroot_element, root_vector};
use contactgrad::liealg::{chevalley_algebra, fundamental_coweight, split_real_form, LieAlgebra};
use contactgrad::linalg::rank_dense;
use contactgrad::rootsys::{depth_one_node_set, RootSystem, Series, TypeLabel};
use contactgrad::sl2kit::*;
use num::Zero;
use rayon::prelude::*;

fn corpus(max_rank: usize) -> Vec<(RootSystem, LieAlgebra)> {
    TypeLabel::all_up_to(max_rank)
        .into_par_iter()
        .map(|t| {
            let rs = RootSystem::from_label(t);
            let l = split_real_form(&chevalley_algebra(&rs)).unwrap();
            (rs, l)
        })
        .collect()
}

/// Root vectors and coroots, tagged with whether they were built as nilpotent.
fn elements(rs: &RootSystem) -> Vec<(String, SVec)> {
    let mut out = Vec::new();
    for r in &rs.roots {
        out.push((format!("e{r:?}"), root_vector(rs, r).unwrap()));
    }
    for r in &rs.positive_roots {
        out.push((format!("h{r:?}"), coroot_element(rs, r)));
    }
    out
}

#[test]
fn conical_iff_nilpotent() {
    let mut checked = 0;
    for (rs, l) in corpus(4) {
        let bad: Vec<String> = elements(&rs)
            .par_iter()
            .filter_map(|(name, x)| {
                let conical = conical_check(&l, &l.killing_dual(x)).unwrap();
                (conical != l.is_ad_nilpotent(x)).then(|| format!("{} {name}", rs.type_label))
            })
            .collect();
        assert!(bad.is_empty(), "{bad:?}");
        checked += rs.roots.len() + rs.positive_roots.len();
    }
    assert!(checked > 300);
}

fn regular_triples(rs: &RootSystem, l: &LieAlgebra) -> Vec<(Vec<i64>, Sl2Triple)> {
    rs.positive_roots
        .iter()
        .map(|mu| (mu.clone(), regular_sl2(l, rs, mu).unwrap()))
        .collect()
}

#[test]
fn dtheta_kernel_is_centralizer_of_e() {
    for (rs, l) in corpus(4) {
        regular_triples(&rs, &l).par_iter().for_each(|(mu, t)| {
            assert!(conical_check(&l, &l.killing_dual(&t.e)).unwrap());
            let k = dtheta_kernel(&l, t);
            let z = l.centralizer_of(&t.e);
            assert_eq!(k.dim(), z.dim(), "{} {mu:?}", rs.type_label);
            assert_eq!(k, z, "{} {mu:?}", rs.type_label);
        });
    }
}

#[test]
fn regular_triple_invariants() {
    for (rs, l) in corpus(4) {
        let g2 = rs.type_label.series == Series::G;
        regular_triples(&rs, &l).par_iter().for_each(|(mu, t)| {
            let tag = format!("{} {mu:?}", rs.type_label);
            let g = ad_h_gradation(&l, &t.h).unwrap();
            let cd = canonical_decomposition(&l, t);
            assert_eq!(cd.z.dim() + cd.v.dim() + cd.w.dim() + 3, l.dim(), "{tag}");
            assert!(l.is_subalgebra(&cd.h_alg), "{tag}");
            assert_eq!(l.normalizer_of_line(&t.e), cd.h_alg, "{tag}");
            if is_symmetric_type(&l, &cd).is_symmetric {
                if g.is_odd() {
                    let contact = is_contact_gradation(&l, &g).is_contact;
                    assert!(contact || (g2 && g.depth() == 3), "{tag}");
                } else {
                    assert!(g.is_short(), "{tag}");
                }
            }
        });
    }
}

#[test]
fn long_root_triples_up_to_rank_8() {
    corpus(8).par_iter().for_each(|(rs, l)| {
        let t = regular_sl2(l, rs, &rs.highest_root).unwrap();
        let g = ad_h_gradation(l, &t.h).unwrap();
        let cd = canonical_decomposition(l, &t);
        // sl2 itself has no degree -1 piece; the certificate flags it as the edge case.
        let c = is_contact_gradation(l, &g);
        assert!(c.is_contact || (c.a1_edge && l.dim() == 3), "{}", rs.type_label);
        assert!(is_symmetric_type(l, &cd).is_symmetric, "{}", rs.type_label);
    });
}

#[test]
fn contactization_invariants() {
    for (rs, l) in corpus(4) {
        let depth_one = depth_one_node_set(&rs);
        let mut xis: Vec<SVec> = (0..rs.rank()).map(|i| fundamental_coweight(&rs, i)).collect();
        xis.extend(rs.positive_roots.iter().map(|r| coroot_element(&rs, r)));
        let symmetric_count = std::sync::atomic::AtomicUsize::new(0);
        xis.par_iter().for_each(|xi| {
            let tag = format!("{} {xi}", rs.type_label);
            // Symmetric exactly when ad_xi has a single nonzero eigenvalue pair.
            let g = ad_h_gradation(&l, xi).unwrap();
            let symmetric = &(g.eigenvalues().len() == 3);
            if *symmetric {
                symmetric_count.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
            }
            let c = build_contactization(&l, xi).unwrap();
            // Kernel of dtheta from the full Gram matrix, independent of the stabilizer routine.
            let basis: Vec<SVec> = (0..l.dim()).map(SVec::unit).collect();
            let gram = contactgrad::contactize::dtheta_gram(&l, &c.theta, &basis);
            assert_eq!(l.dim() - rank_dense(&gram), c.k.dim(), "{tag}");
            for x in c.k.basis() {
                assert!(l.dtheta_rows(&c.theta).iter().all(|r| r.dot(x).is_zero()), "{tag}");
            }
            assert!(c.h.basis().iter().all(|x| x.dot(&c.theta).is_zero()), "{tag}");
            assert_eq!(c.eta.dot(&c.theta), contactgrad::exact::q(1), "{tag}");
            assert!(c.k.contains(&c.eta), "{tag}");
            assert_eq!(c.h.dim() + 1, c.k.dim(), "{tag}");
            let cert = verify_symplectic_symmetric(&l, &c);
            assert_eq!(cert.is_symplectic_symmetric, *symmetric, "{tag}");
            if *symmetric {
                let s = cert.ad_xi_squared.expect("scalar on p");
                assert_ne!(s, "0", "{tag}");
            }
        });
        assert!(symmetric_count.into_inner() >= depth_one.len(), "{}", rs.type_label);
    }
}

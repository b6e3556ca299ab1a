use contactgrad::contactize::conical_check;
use contactgrad::exact::{q, SVec};
use contactgrad::liealg::chevalley::coroot_element;
use contactgrad::liealg::matrix::DMat;
use contactgrad::liealg::{
    chevalley_algebra, classical_real_form, realified_element, realify, split_real_form, FormName,
    LieAlgebra,
};
use contactgrad::rootsys::{contact_grading_node_set, depth_one_node_set, RootSystem, Series, TypeLabel};
use contactgrad::satake::{djokovic_consistent, Color, SatakeDb};
use contactgrad::sl2kit::{ad_h_gradation, vinberg_short_check, ClassicalKind, Sl2Error};
use proptest::prelude::*;
use std::collections::BTreeSet;
use std::sync::OnceLock;

fn algebras() -> &'static Vec<LieAlgebra> {
    static A: OnceLock<Vec<LieAlgebra>> = OnceLock::new();
    A.get_or_init(|| {
        let mut v: Vec<LieAlgebra> = ["A2", "B2", "G2", "C3"]
            .iter()
            .map(|t| chevalley_algebra(&RootSystem::from_label(t.parse().unwrap())))
            .collect();
        for f in [FormName::Su(2, 1), FormName::So(2, 3), FormName::SoStar(4), FormName::Sp(1, 1)] {
            v.push(classical_real_form(f).unwrap().algebra);
        }
        v.push(realify(&v[0]).unwrap());
        v
    })
}

fn vec_in(dim: usize, coeffs: &[i64]) -> SVec {
    SVec::from_dense(&coeffs[..dim].iter().map(|&c| q(c)).collect::<Vec<_>>())
}

fn split(t: TypeLabel) -> (RootSystem, LieAlgebra) {
    let rs = RootSystem::from_label(t);
    let l = split_real_form(&chevalley_algebra(&rs)).unwrap();
    (rs, l)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn killing_is_ad_invariant(
        which in 0usize..9,
        x in prop::collection::vec(-3i64..=3, 40),
        y in prop::collection::vec(-3i64..=3, 40),
        z in prop::collection::vec(-3i64..=3, 40),
    ) {
        let l = &algebras()[which];
        let n = l.dim();
        let (x, y, z) = (vec_in(n, &x), vec_in(n, &y), vec_in(n, &z));
        let lhs = l.killing(&l.bracket(&x, &y), &z) + l.killing(&y, &l.bracket(&x, &z));
        prop_assert_eq!(lhs, q(0));
    }

    #[test]
    fn generic_cartan_elements_are_not_conical(
        t in 0usize..10,
        coeffs in prop::collection::vec(-4i64..=4, 4),
    ) {
        let types = TypeLabel::all_up_to(4)
            .into_iter()
            .filter(|t| t.rank >= 2)
            .collect::<Vec<_>>();
        let (rs, l) = split(types[t % types.len()]);
        let x = rs
            .positive_roots
            .iter()
            .take(rs.rank())
            .zip(&coeffs)
            .fold(SVec::zero(), |acc, (r, &c)| acc.add(&coroot_element(&rs, r).scale(&q(c))));
        prop_assume!(!x.is_zero());
        prop_assert!(!l.is_ad_nilpotent(&x));
        prop_assert_eq!(conical_check(&l, &l.killing_dual(&x)), Ok(false));
    }

    /// The sl_n verdict agrees with the spectrum of ad_h for h = diag of the sl2 weights.
    #[test]
    fn vinberg_sl_matches_ad_h_spectrum(parts in prop::collection::vec(1usize..=5, 1..=3)) {
        let n: usize = parts.iter().sum();
        prop_assume!((2..=7).contains(&n));
        let weights: Vec<i64> = parts
            .iter()
            .flat_map(|&m| (0..m).map(move |k| m as i64 - 1 - 2 * k as i64))
            .collect();
        let form = classical_real_form(FormName::SlR(n)).unwrap();
        let h = form.element(&DMat::diag(1, &weights)).unwrap();
        let g = ad_h_gradation(&form.algebra, &h).unwrap();
        match vinberg_short_check(ClassicalKind::Sl, &parts) {
            Ok(short) => {
                prop_assert!(g.is_even());
                prop_assert_eq!(short, g.is_short());
            }
            Err(Sl2Error::MixedParity(_)) => prop_assert!(g.is_odd()),
            Err(e) => prop_assert!(false, "{}", e),
        }
    }

    /// Whitening a black node outside the node set never breaks consistency.
    #[test]
    fn djokovic_monotone_under_whitening(pick in 0usize..10_000, node_pick in 0usize..16, mask in 0u32..256) {
        let all = SatakeDb::builtin().all(8).unwrap();
        let d = &all[pick % all.len()];
        let rank = d.underlying.rank;
        let mut sets = vec![
            contact_grading_node_set(&RootSystem::from_label(d.underlying)),
            depth_one_node_set(&RootSystem::from_label(d.underlying)),
        ];
        sets.push((0..rank).filter(|i| mask & (1 << i) != 0).collect::<BTreeSet<usize>>());
        let black: Vec<usize> = d.colors.iter().filter(|(_, c)| **c == Color::Black).map(|(i, _)| *i).collect();
        for pi1 in sets {
            let outside: Vec<usize> = black.iter().copied().filter(|i| !pi1.contains(i)).collect();
            if outside.is_empty() {
                continue;
            }
            let node = outside[node_pick % outside.len()];
            let mut whitened = d.clone();
            whitened.colors.insert(node, Color::White);
            prop_assert!(!djokovic_consistent(d, &pi1) || djokovic_consistent(&whitened, &pi1));
        }
    }
}

#[test]
fn realified_killing_is_twice_real_part() {
    for t in ["A1", "A2", "B2", "G2"] {
        let lc = chevalley_algebra(&RootSystem::from_label(t.parse().unwrap()));
        let lr = realify(&lc).unwrap();
        let n = lc.dim();
        let zero = SVec::zero();
        for a in 0..n {
            for b in 0..n {
                let (ea, eb) = (SVec::unit(a), SVec::unit(b));
                let bc = lc.killing(&ea, &eb);
                let re = |x: &SVec| realified_element(n, x, &zero);
                let im = |x: &SVec| realified_element(n, &zero, x);
                // B^c(x, iy) = i B^c(x, y) and B^c(ix, iy) = -B^c(x, y).
                assert_eq!(lr.killing(&re(&ea), &re(&eb)), q(2) * &bc, "{t}");
                assert_eq!(lr.killing(&re(&ea), &im(&eb)), q(0), "{t}");
                assert_eq!(lr.killing(&im(&ea), &im(&eb)), -(q(2) * &bc), "{t}");
            }
        }
    }
}

#[test]
fn root_system_invariants() {
    for t in TypeLabel::all_up_to(8) {
        let a = RootSystem::from_label(t);
        let b = RootSystem::from_label(t);
        let sum = |rs: &RootSystem| -> Vec<i64> {
            (0..rs.rank())
                .map(|i| rs.positive_roots.iter().map(|r| r[i]).sum())
                .collect()
        };
        assert_eq!(sum(&a), sum(&b), "{t}");
        assert_eq!(a.positive_roots, b.positive_roots, "{t}");
        // A1 and C_n (B2 = C2 included) have a single nonzero pairing 2; all others are 0 or 1.
        let doubled = t.rank == 1 || t.series == Series::C || t.to_string() == "B2";
        let pairings: Vec<i64> = (0..a.rank()).map(|i| a.pairing_simple(&a.highest_root, i)).collect();
        if doubled {
            let mut nonzero: Vec<i64> = pairings.iter().copied().filter(|&p| p != 0).collect();
            nonzero.sort();
            assert_eq!(nonzero, vec![2], "{t}");
        } else {
            assert!(pairings.iter().all(|&p| p == 0 || p == 1), "{t}: {pairings:?}");
        }
        let short: Vec<&Vec<i64>> = a.positive_roots.iter().filter(|r| !a.is_long(r)).collect();
        let dominant_short: Vec<&Vec<i64>> = short
            .iter()
            .copied()
            .filter(|r| (0..a.rank()).all(|i| a.pairing_simple(r, i) >= 0))
            .collect();
        match &a.highest_short_root {
            Some(s) => assert_eq!(dominant_short, vec![s], "{t}"),
            None => assert!(short.is_empty(), "{t}"),
        }
    }
}

use contactgrad::contactize::*;
use contactgrad::exact::{q, SVec};
use contactgrad::liealg::{
    chevalley_algebra, fundamental_coweight, realified_element, realify, split_real_form,
};
use contactgrad::rootsys::{RootSystem, TypeLabel};

fn split(t: &str) -> (RootSystem, contactgrad::liealg::LieAlgebra) {
    let rs = RootSystem::from_label(t.parse::<TypeLabel>().unwrap());
    let l = split_real_form(&chevalley_algebra(&rs)).unwrap();
    (rs, l)
}

#[test]
fn sl2r_nilpotent_is_conical_semisimple_is_not() {
    let (_, l) = split("A1");
    let e = SVec::unit(0);
    let h = SVec::unit(2);
    assert_eq!(conical_check(&l, &l.killing_dual(&e)), Ok(true));
    assert_eq!(conical_check(&l, &l.killing_dual(&h)), Ok(false));
    assert_eq!(
        build_contactization(&l, &e).unwrap_err(),
        ContactizeError::Conical
    );
    let c = build_contactization(&l, &h).unwrap();
    assert_eq!((c.k.dim(), c.h.dim(), c.p.dim()), (1, 0, 2));
    let cert = verify_symplectic_symmetric(&l, &c);
    assert!(cert.is_symplectic_symmetric);
    assert_eq!(cert.ad_xi_squared.as_deref(), Some("4"));
}

#[test]
fn sl2c_isotropy_follows_re_lambda_squared() {
    let (_, l) = split("A1");
    let lc = realify(&chevalley_algebra(&RootSystem::from_label("A1".parse().unwrap()))).unwrap();
    assert_eq!(l.dim(), 3);
    let h = SVec::unit(2);
    let hr = realified_element(3, &h, &SVec::zero());
    let er = realified_element(3, &SVec::unit(0), &SVec::zero());
    let fr = realified_element(3, &SVec::unit(1), &SVec::zero());
    assert_eq!(lc.killing(&hr, &hr), q(16));
    assert_eq!(lc.killing(&er, &fr), q(8));
    for (re, im, iso) in [(1, 0, false), (0, 1, false), (1, 1, true)] {
        let xi = realified_element(3, &h.scale(&q(re)), &h.scale(&q(im)));
        let c = build_contactization(&lc, &xi).unwrap();
        assert_eq!(c.isotropic, iso, "lambda = {re}+{im}i");
        assert_eq!((c.k.dim(), c.p.dim()), (2, 4));
        let cert = verify_symplectic_symmetric(&lc, &c);
        assert!(cert.is_symplectic_symmetric);
        let expect = match (re, im) {
            (1, 0) => Some("4"),
            (0, 1) => Some("-4"),
            _ => None,
        };
        assert_eq!(cert.ad_xi_squared.as_deref(), expect);
    }
}

#[test]
fn split_depth_one_coweights() {
    for (t, node, dk) in [("A2", 0, 4), ("B2", 0, 4), ("C3", 2, 9), ("D4", 0, 16)] {
        let (rs, l) = split(t);
        let xi = fundamental_coweight(&rs, node);
        let c = build_contactization(&l, &xi).unwrap();
        assert_eq!(c.k.dim(), dk, "{t}");
        let cert = verify_symplectic_symmetric(&l, &c);
        assert!(cert.is_symplectic_symmetric, "{t}: {cert:?}");
        assert_eq!(cert.ad_xi_squared.as_deref(), Some("1"));
    }
}

fn contactize_named(algebra: &str, xi: &str) -> (Contactization, SymplecticCertificate) {
    use contactgrad::classify::tables5to8::xi_matrix;
    use contactgrad::registry::{algebra as build, matrix_element};
    let b = build(algebra).unwrap();
    let f = b.form.as_ref().unwrap();
    let (n, d) = f.name.matrix_shape();
    let x = matrix_element(&b, &xi_matrix(xi, n, d).unwrap()).unwrap();
    let c = build_contactization(&b.algebra, &x).unwrap();
    let cert = verify_symplectic_symmetric(&b.algebra, &c);
    (c, cert)
}

#[test]
fn named_examples() {
    let (c, cert) = contactize_named("su(2)", "diag(i; 1, -1)");
    assert_eq!((c.k.dim(), c.p.dim()), (1, 2));
    assert!(cert.is_symplectic_symmetric);
    assert_eq!(cert.ad_xi_squared.as_deref(), Some("-4"));

    let (c, cert) = contactize_named("sp2(R)", "omega(2)");
    assert_eq!(c.p.dim(), 6);
    assert!(cert.is_symplectic_symmetric);

    let (_, cert) = contactize_named("sl3(R)", "diag(1; 1, 0, -1)");
    assert!(!cert.is_symplectic_symmetric);
}

/// On real absolutely simple rows, ad_xi^2 is a nonzero scalar on p.
#[test]
fn eigenvalue_dichotomy_on_table_rows() {
    use contactgrad::classify::tables5to8::{default_grid, verify_tables5to8};
    use contactgrad::classify::Status;
    let report = verify_tables5to8(&default_grid());
    let mut seen = 0;
    for row in &report.rows {
        if row.status != Status::Match || row.table_id == "8" {
            continue;
        }
        let cert = row.certificate.as_ref().expect("certificate");
        let s = cert["symplectic"]["ad_xi_squared"].as_str();
        assert!(s.is_some_and(|s| s != "0"), "{}: {cert}", row.key);
        seen += 1;
    }
    assert!(seen >= 12, "{seen}");
}

//! Non-conical orbits: the contactization of xi = lambda h in sl2(C) viewed as a real
//! algebra, and of a depth-one coweight in a split form.
//!
//! cargo run --example contactization

use contactgrad::contactize::{build_contactization, conical_check, verify_symplectic_symmetric};
use contactgrad::exact::{q, SVec};
use contactgrad::liealg::{chevalley_algebra, fundamental_coweight, realified_element, realify, split_real_form};
use contactgrad::rootsys::RootSystem;

fn main() {
    let a1 = RootSystem::from_label("A1".parse().unwrap());
    let l = realify(&chevalley_algebra(&a1)).unwrap();
    let h = SVec::unit(2);
    let e = realified_element(3, &SVec::unit(0), &SVec::zero());
    println!("nilpotent e: conical {:?}", conical_check(&l, &l.killing_dual(&e)));
    for (a, b) in [(1, 0), (0, 1), (1, 1), (2, 1)] {
        let xi = realified_element(3, &h.scale(&q(a)), &h.scale(&q(b)));
        let c = build_contactization(&l, &xi).expect("non-conical");
        let cert = verify_symplectic_symmetric(&l, &c);
        println!(
            "lambda = {a}+{b}i: B(xi,xi) = {}, dim k {}, dim p {}, p from {:?}, symplectic symmetric {}, ad_xi^2 on p {}",
            l.killing(&xi, &xi),
            c.k.dim(),
            c.p.dim(),
            c.p_choice,
            cert.is_symplectic_symmetric,
            cert.ad_xi_squared.as_deref().unwrap_or("not a real scalar")
        );
    }

    let c3 = RootSystem::from_label("C3".parse().unwrap());
    let l = split_real_form(&chevalley_algebra(&c3)).unwrap();
    let xi = fundamental_coweight(&c3, 2);
    let c = build_contactization(&l, &xi).unwrap();
    let cert = verify_symplectic_symmetric(&l, &c);
    println!("sp3(R), third coweight: dim k {}, dim p {}, symplectic symmetric {}", c.k.dim(), c.p.dim(), cert.is_symplectic_symmetric);
}

//! Conical orbits of root vectors: ker dtheta against the centralizer of e.
//!
//! cargo run --example conical_orbits

use contactgrad::contactize::conical_check;
use contactgrad::liealg::{chevalley_algebra, split_real_form};
use contactgrad::rootsys::{RootSystem, TypeLabel};
use contactgrad::sl2kit::{canonical_decomposition, dtheta_kernel, regular_sl2};

fn main() {
    for t in ["A3", "B2", "C3", "G2"] {
        let rs = RootSystem::from_label(t.parse::<TypeLabel>().unwrap());
        let l = split_real_form(&chevalley_algebra(&rs)).unwrap();
        for mu in [Some(&rs.highest_root), rs.highest_short_root.as_ref()].into_iter().flatten() {
            let tr = regular_sl2(&l, &rs, mu).unwrap();
            let conical = conical_check(&l, &l.killing_dual(&tr.e)).unwrap();
            let k = dtheta_kernel(&l, &tr);
            let cd = canonical_decomposition(&l, &tr);
            println!(
                "{t} root {mu:?}: conical {conical}, dim ker dtheta {}, equals Z(e) {}, dim h+m {}+{}",
                k.dim(),
                k == l.centralizer_of(&tr.e),
                cd.h_alg.dim(),
                cd.m.dim()
            );
        }
    }
}

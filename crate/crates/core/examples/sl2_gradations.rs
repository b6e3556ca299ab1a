//! Regular sl2-triples: the ad_h gradation, the contact test and the canonical
//! decomposition for the highest root and the highest short root of each split form.
//!
//! cargo run --example sl2_gradations

use contactgrad::registry::{algebra, root_triple, RootChoice};
use contactgrad::sl2kit::{ad_h_gradation, canonical_decomposition, is_contact_gradation, is_symmetric_type};

fn main() {
    for name in ["A2-split", "B3-split", "C3-split", "D4-split", "G2-split", "F4-split", "su(2,3)", "so(2,5)"] {
        let b = algebra(name).expect("registered name");
        for root in [RootChoice::Long, RootChoice::Short] {
            let Ok(t) = root_triple(&b, &root) else { continue };
            let l = &b.algebra;
            let g = ad_h_gradation(l, &t.h).expect("integral eigenvalues");
            let cd = canonical_decomposition(l, &t);
            let dims: Vec<String> = g.dims().iter().map(|(k, d)| format!("{k}:{d}")).collect();
            println!(
                "{:<9} {:<5} depth {} contact {:<5} symmetric {:<5} z {:>2} V {:>2} W {:>2}  [{}]",
                b.spec.to_string(),
                format!("{root:?}").to_lowercase(),
                g.depth(),
                is_contact_gradation(l, &g).is_contact,
                is_symmetric_type(l, &cd).is_symmetric,
                cd.z.dim(),
                cd.v.dim(),
                cd.w.dim(),
                dims.join(" ")
            );
        }
    }
}

//! Satake diagrams, the Djoković test for the contact gradation, and the depth-one forms.
//!
//! cargo run --example satake_diagrams [-- FORM]

use contactgrad::rootsys::{contact_grading_node_set, RootSystem};
use contactgrad::satake::{djokovic_consistent, enumerate_contact_real_forms, enumerate_depth_one_real_forms, SatakeDb};

fn main() {
    let db = SatakeDb::from_env().expect("Satake data");
    if let Some(form) = std::env::args().nth(1) {
        let d = db.lookup(&form, 8).expect("known real form");
        let pi1 = contact_grading_node_set(&RootSystem::from_label(d.underlying));
        print!("{}", d.ascii());
        println!("{} ({}), contact nodes {pi1:?}: consistent {}", d.real_form_name, d.class, djokovic_consistent(&d, &pi1));
        return;
    }
    let forms = enumerate_contact_real_forms(&db, 8).expect("data evaluates");
    println!("{} noncompact forms of rank <= 8 carry a contact gradation", forms.len());
    for d in forms.iter().filter(|d| d.underlying.rank <= 4) {
        println!("  {:<4} {:<6} {}", d.underlying.to_string(), d.class, d.real_form_name);
    }
    let depth_one = enumerate_depth_one_real_forms(&db, 4).expect("data evaluates");
    println!("depth-one gradations up to rank 4:");
    for f in depth_one {
        println!("  {:<12} node {} {:?}", f.diagram.real_form_name, f.node, f.kind);
    }
}

//! Highest roots, Dynkin marks and the node sets of the contact and depth-one gradations.
//!
//! cargo run --example root_systems

use contactgrad::rootsys::{
    contact_grading_node_set, depth_one_node_set, format_weights, highest_root_in_weights,
    RootSystem, TypeLabel,
};

fn main() {
    println!("{:<4} {:>5} {:>5}  {:<22} {:<18} {:<10} depth-one nodes", "type", "roots", "dim", "highest root", "in weights (GOV)", "contact");
    for t in TypeLabel::all_up_to(8) {
        let rs = RootSystem::from_label(t);
        let w = highest_root_in_weights(&rs);
        println!(
            "{:<4} {:>5} {:>5}  {:<22} {:<18} {:<10} {:?}",
            t.to_string(),
            rs.roots.len(),
            rs.algebra_dim(),
            format!("{:?}", rs.highest_root),
            format_weights(t, &w, true),
            format!("{:?}", contact_grading_node_set(&rs)),
            depth_one_node_set(&rs),
        );
    }
}

//! A Chevalley basis of G2: a few brackets, the Killing form and an exhaustive Jacobi check.
//!
//! cargo run --example chevalley_basis [-- TYPE]

use contactgrad::liealg::chevalley::{coroot_element, root_vector};
use contactgrad::liealg::{chevalley_algebra, jacobi_exhaustive};
use contactgrad::rootsys::{RootSystem, TypeLabel};

fn main() {
    let t: TypeLabel = std::env::args().nth(1).as_deref().unwrap_or("G2").parse().expect("type such as G2 or B3");
    let rs = RootSystem::from_label(t);
    let l = chevalley_algebra(&rs);
    println!("{t}: dim {}, {} positive roots, integer constants: {}", l.dim(), rs.num_positive(), l.has_integer_constants());

    let simple: Vec<Vec<i64>> = (0..rs.rank())
        .map(|i| (0..rs.rank()).map(|j| i64::from(i == j)).collect())
        .collect();
    for a in &simple {
        for b in &rs.positive_roots {
            let sum: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
            if rs.is_root(&sum) {
                let br = l.bracket(&root_vector(&rs, a).unwrap(), &root_vector(&rs, b).unwrap());
                println!("[e{a:?}, e{b:?}] = {br}");
            }
        }
    }
    let h = coroot_element(&rs, &rs.highest_root);
    println!("B(h_theta, h_theta) = {}", l.killing(&h, &h));
    let e = root_vector(&rs, &rs.highest_root).unwrap();
    let f = root_vector(&rs, &rs.highest_root.iter().map(|x| -x).collect::<Vec<_>>()).unwrap();
    println!("B(e_theta, e_-theta) = {}", l.killing(&e, &f));
    println!("Jacobi violations over all basis triples: {}", jacobi_exhaustive(&l));
}

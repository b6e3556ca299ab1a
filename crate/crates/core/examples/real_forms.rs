//! Classical and exceptional real forms from the name registry, with the signature of
//! the Killing form (the negative index is the dimension of a maximal compact subalgebra).
//!
//! cargo run --example real_forms [-- NAME...]

use contactgrad::linalg::Subspace;
use contactgrad::registry::algebra;

fn main() {
    let mut names: Vec<String> = std::env::args().skip(1).collect();
    if names.is_empty() {
        names = ["sl3(R)", "su(2,1)", "su*(4)", "sp2(R)", "sp(1,1)", "so(2,3)", "so*(8)", "sl2(C)", "g2(2)", "g2(C)"]
            .map(String::from)
            .to_vec();
    }
    println!("{:<10} {:>4} {:>5} {:>5} {:>5}", "algebra", "dim", "pos", "neg", "null");
    for name in names {
        match algebra(&name) {
            Ok(b) => {
                let l = &b.algebra;
                let (pos, neg, null) = l.killing_inertia(&Subspace::full(l.dim()));
                println!("{:<10} {:>4} {pos:>5} {neg:>5} {null:>5}", b.spec.to_string(), l.dim());
            }
            Err(e) => println!("{name}: {e}"),
        }
    }
}

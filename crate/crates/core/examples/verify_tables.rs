//! Rebuild every table from the primitives and print the summaries, or one table in full.
//!
//! cargo run --release --example verify_tables [-- ID]

use contactgrad::classify::{verify_all, verify_table};

fn main() {
    match std::env::args().nth(1) {
        Some(id) => match verify_table(&id) {
            Ok(r) => print!("{}", r.to_markdown()),
            Err(e) => eprintln!("{e}"),
        },
        None => {
            for r in verify_all() {
                println!("{}", r.summary());
            }
        }
    }
}

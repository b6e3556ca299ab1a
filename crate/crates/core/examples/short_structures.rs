//! The short-structure test on partitions of the defining representation.
//!
//! cargo run --example short_structures

use contactgrad::sl2kit::{vinberg_short_check, ClassicalKind};

fn main() {
    let parts: [&[usize]; 8] = [&[3, 1, 1], &[2, 2], &[2, 2, 2], &[3, 3], &[4], &[3, 1], &[2, 1], &[1, 1, 1]];
    for kind in [ClassicalKind::Sl, ClassicalKind::So, ClassicalKind::Sp] {
        for p in parts {
            let verdict = match vinberg_short_check(kind, p) {
                Ok(v) => v.to_string(),
                Err(e) => e.to_string(),
            };
            println!("{kind:?} {p:?}: {verdict}");
        }
    }
}

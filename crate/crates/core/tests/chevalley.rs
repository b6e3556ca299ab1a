use contactgrad::liealg::chevalley::{chevalley_algebra, check_string_magnitudes};
use contactgrad::rootsys::{RootSystem, TypeLabel};

fn jacobi_exhaustive(label: &str) -> usize {
    let rs = RootSystem::from_label(label.parse::<TypeLabel>().unwrap());
    let l = chevalley_algebra(&rs);
    let n = l.dim();
    let mut bad = 0;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if !l.jacobi_residual(i, j, k).is_zero() {
                    bad += 1;
                }
            }
        }
    }
    bad
}

#[test]
fn jacobi_small_types() {
    for t in ["A1", "A2", "B2", "G2", "C3", "B3", "A4", "D4"] {
        assert_eq!(jacobi_exhaustive(t), 0, "{t}");
    }
}

#[test]
fn magnitudes() {
    for t in ["G2", "F4", "B3", "C3", "E6"] {
        let rs = RootSystem::from_label(t.parse::<TypeLabel>().unwrap());
        assert!(check_string_magnitudes(&rs), "{t}");
    }
}

#[test]
fn dims_and_jacobi_f4() {
    for (t, d) in [("G2", 14), ("F4", 52), ("E6", 78)] {
        let rs = RootSystem::from_label(t.parse::<TypeLabel>().unwrap());
        assert_eq!(chevalley_algebra(&rs).dim(), d);
    }
    assert_eq!(jacobi_exhaustive("F4"), 0);
}

fn dump_sha256(label: &str) -> String {
    use sha2::{Digest, Sha256};
    let rs = RootSystem::from_label(label.parse::<TypeLabel>().unwrap());
    let dump = chevalley_algebra(&rs).structure_dump();
    Sha256::digest(dump.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

/// Digests of the structure-constant dumps, frozen from a run whose tables passed
/// the Jacobi and string-magnitude checks above. A change means the basis
/// normalization or sign convention moved.
#[test]
fn structure_constants_are_pinned() {
    for (t, digest) in [
        ("A2", "0c01b79625e5210d43a56b5e950e795496cea4541b9fbe9c695d36e7524d800e"),
        ("B3", "1c4ad38cb0c9e247220d5660c6e3f277a87121e32cc4453ff64e9d131d4bcc3a"),
        ("G2", "eff4b875015d8b0650487e2658fb682ab8949484cf200148854a5471403654d3"),
        ("F4", "86c4350021a8b4219c55eec19198a24b341d4ee156e8754710bab19b1c236bc4"),
        ("E6", "3582e99b386d9f5b471a6e358b038af43c64de92c2a097aab8b175415a9c48ad"),
    ] {
        assert_eq!(dump_sha256(t), digest, "{t}");
    }
}

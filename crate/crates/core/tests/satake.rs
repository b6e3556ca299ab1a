use contactgrad::rootsys::TypeLabel;
use contactgrad::satake::*;
use std::collections::BTreeSet;

#[test]
fn census_matches() {
    let db = SatakeDb::builtin();
    for t in TypeLabel::all_up_to(8) {
        assert_eq!(Some(db.real_form_count(t).unwrap()), census_count(t), "{t}");
    }
}

#[test]
fn contact_classes() {
    let db = SatakeDb::builtin();
    let forms = enumerate_contact_real_forms(&db, 8).unwrap();
    let classes: BTreeSet<String> = forms.iter().map(|d| d.class.clone()).collect();
    println!("{classes:?}");
    assert_eq!(classes.len(), 15);
    assert!(!classes.contains("EIV") && !classes.contains("FII"));
    println!("{}", db.lookup("su(2,3)", 8).unwrap().ascii());
}

/// Outer forms: no compact Cartan subalgebra.
fn known_outer(d: &SatakeDiagram) -> bool {
    let n = d.underlying.rank;
    match d.class.as_str() {
        "AI" | "AII" => n >= 2,
        "EI" | "EIV" => true,
        "BDI" if d.underlying.series.letter() == 'D' => d.parameters["p"] % 2 == 1,
        _ => false,
    }
}

#[test]
fn inner_type_matches_compact_cartan_list() {
    let db = SatakeDb::builtin();
    for d in db.all(8).unwrap() {
        assert_eq!(d.is_inner_type(), !known_outer(&d), "{}", d.real_form_name);
    }
}

#[test]
fn depth_one_enumeration() {
    let db = SatakeDb::builtin();
    let forms = enumerate_depth_one_real_forms(&db, 8).unwrap();
    let has = |name: &str, node: usize, kind: DepthOneKind| {
        forms
            .iter()
            .any(|f| f.diagram.real_form_name == name && f.node == node && f.kind == kind)
    };
    assert!(forms.iter().all(|f| f.diagram.underlying.series.letter() != 'E'
        || f.diagram.underlying.rank != 8));
    for n in 3..=6 {
        assert!(has(&format!("sp{n}(R)"), n, DepthOneKind::Hyperbolic));
        assert!(has(&format!("sp{n}(R)"), n, DepthOneKind::Elliptic));
    }
    for (p, q) in [(1, 4), (2, 3), (2, 5), (3, 4), (1, 6)] {
        assert!(has(&format!("so({p},{q})"), 1, DepthOneKind::Hyperbolic));
    }
    assert!(has("e6(-14)", 1, DepthOneKind::Elliptic));
    assert!(!has("e6(-14)", 1, DepthOneKind::Hyperbolic));
    assert!(has("e6(-26)", 1, DepthOneKind::Hyperbolic));
    assert!(has("e7(-25)", 7, DepthOneKind::Hyperbolic));
    assert!(has("e7(-5)", 7, DepthOneKind::Elliptic));
    assert!(!has("e7(-5)", 7, DepthOneKind::Hyperbolic));
}

#[test]
fn unitary_family_is_closed() {
    let db = SatakeDb::builtin();
    let forms = enumerate_contact_real_forms(&db, 8).unwrap();
    let names: BTreeSet<String> = forms.iter().map(|d| d.real_form_name.clone()).collect();
    for n in 2..=8 {
        // su(k+1, l+1) with k + l = n - 1 > 0.
        for p in 1..=(n + 1) / 2 {
            assert!(names.contains(&format!("su({p},{})", n + 1 - p)), "su({p},{})", n + 1 - p);
        }
        assert!(!names.contains(&format!("su({})", n + 1)));
        if n % 2 == 1 && n >= 3 {
            assert!(!names.contains(&format!("su*({})", n + 1)));
        }
    }
}

use contactgrad::liealg::chevalley::{cartan_basis_index, chevalley_algebra};
use contactgrad::liealg::{classical_real_form, jacobi_exhaustive, jacobi_randomized, FormName};
use contactgrad::rootsys::{RootSystem, TypeLabel};
use rayon::prelude::*;

#[test]
fn chevalley_exhaustive_up_to_f4() {
    let types: Vec<TypeLabel> = TypeLabel::all_up_to(8)
        .into_iter()
        .filter(|t| RootSystem::from_label(*t).algebra_dim() <= 52)
        .collect();
    assert!(types.iter().any(|t| t.to_string() == "F4"));
    for t in types {
        let l = chevalley_algebra(&RootSystem::from_label(t));
        assert_eq!(jacobi_exhaustive(&l), 0, "{t}");
    }
}

#[test]
fn classical_forms_exhaustive_up_to_dim_66() {
    let forms = FormName::all_up_to_dim(66);
    assert!(forms.len() > 100);
    let bad: Vec<String> = forms
        .par_iter()
        .filter_map(|f| {
            let c = classical_real_form(f.clone()).unwrap_or_else(|e| panic!("{f}: {e}"));
            assert_eq!(c.algebra.dim(), f.dim(), "{f}");
            (jacobi_exhaustive(&c.algebra) != 0).then(|| f.to_string())
        })
        .collect();
    assert!(bad.is_empty(), "Jacobi violations in {bad:?}");
}

#[test]
fn exceptional_e_randomized() {
    for (t, seed) in [("E6", 6), ("E7", 7), ("E8", 8)] {
        let rs = RootSystem::from_label(t.parse().unwrap());
        let l = chevalley_algebra(&rs);
        let cartan: Vec<usize> = (0..rs.rank()).map(|i| cartan_basis_index(&rs, i)).collect();
        assert_eq!(jacobi_randomized(&l, &cartan, 100_000, seed), 0, "{t}");
    }
}

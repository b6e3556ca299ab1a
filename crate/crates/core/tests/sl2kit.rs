use contactgrad::liealg::{chevalley_algebra, split_real_form};
use contactgrad::rootsys::{RootSystem, TypeLabel};
use contactgrad::sl2kit::*;

fn split(t: &str) -> (RootSystem, contactgrad::liealg::LieAlgebra) {
    let rs = RootSystem::from_label(t.parse::<TypeLabel>().unwrap());
    let l = split_real_form(&chevalley_algebra(&rs)).unwrap();
    (rs, l)
}

#[test]
fn g2_long_and_short() {
    let (rs, l) = split("G2");
    let t = regular_sl2(&l, &rs, &rs.highest_root).unwrap();
    let g = ad_h_gradation(&l, &t.h).unwrap();
    assert_eq!(g.depth(), 2);
    assert!(is_contact_gradation(&l, &g).is_contact);
    let cd = canonical_decomposition(&l, &t);
    assert_eq!((cd.z.dim(), cd.v.dim(), cd.w.dim()), (3, 4, 4));
    assert!(is_symmetric_type(&l, &cd).is_symmetric);

    let hs = rs.highest_short_root.clone().unwrap();
    let t = regular_sl2(&l, &rs, &hs).unwrap();
    let g = ad_h_gradation(&l, &t.h).unwrap();
    assert_eq!(g.depth(), 3);
    let cd = canonical_decomposition(&l, &t);
    assert_eq!((cd.z.dim(), cd.v.dim(), cd.w.dim()), (3, 2, 6));
    assert!(is_symmetric_type(&l, &cd).is_symmetric);
    assert_eq!(dtheta_kernel(&l, &t), l.centralizer_of(&t.e));
}

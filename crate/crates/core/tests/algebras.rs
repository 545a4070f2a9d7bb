use zzosp::algebras::{
    constraint_rank, embed_d_into_b, expected_dim, is_member, kernel_basis, rank_of, s_basis, verify_closure,
    verify_membership, verify_s_membership,
};
use zzosp::linalg::canonical_span;
use zzosp::AlgebraSpec;

mod common;
use common::grid;

/// `M² − rank` of the defining map, with `M` the matrix size.
fn nullity(spec: &AlgebraSpec) -> usize {
    spec.size() * spec.size() - constraint_rank(spec).unwrap()
}

#[test]
fn grid_size() {
    // six (m1, m2) pairs times six (n1, n2) pairs
    assert_eq!(grid().len(), 36);
}

#[test]
fn type_b_dimensions_agree_on_grid() {
    for (m1, m2, n1, n2) in grid() {
        let spec = AlgebraSpec::osp_b(m1, m2, n1, n2);
        let k = kernel_basis(&spec).unwrap();
        let s = s_basis(&spec).unwrap();
        let e = expected_dim(&spec).unwrap();
        assert_eq!(k.len(), e, "{spec} kernel");
        assert_eq!(s.len(), e, "{spec} s_basis");
        assert_eq!(nullity(&spec), e, "{spec} nullity");
    }
}

#[test]
fn type_d_dimensions_agree_on_grid() {
    for (m1, m2, n1, n2) in grid() {
        let Ok(spec) = AlgebraSpec::osp_d(m1, m2, n1, n2) else {
            assert_eq!(m1 + m2 + n1 + n2, 0);
            continue;
        };
        let e = expected_dim(&spec).unwrap();
        assert_eq!(kernel_basis(&spec).unwrap().len(), e, "{spec} kernel");
        assert_eq!(s_basis(&spec).unwrap().len(), e, "{spec} s_basis");
        assert_eq!(nullity(&spec), e, "{spec} nullity");
    }
}

#[test]
fn named_dimensions() {
    for ((m1, m2, n1, n2), d) in [((1, 0, 1, 0), 12), ((0, 0, 1, 0), 5), ((1, 1, 1, 1), 40), ((1, 0, 0, 0), 3)] {
        assert_eq!(kernel_basis(&AlgebraSpec::osp_b(m1, m2, n1, n2)).unwrap().len(), d);
    }
}

#[test]
fn both_bases_span_the_same_space() {
    for (m1, m2, n1, n2) in [(1, 0, 1, 0), (0, 1, 1, 0), (1, 1, 1, 1), (2, 0, 0, 2)] {
        let spec = AlgebraSpec::osp_b(m1, m2, n1, n2);
        let width = spec.size() * spec.size();
        let coords = |b: zzosp::Basis| b.elements.iter().map(|m| m.to_coords()).collect::<Vec<_>>();
        let k = canonical_span(&coords(kernel_basis(&spec).unwrap()), width);
        let s = canonical_span(&coords(s_basis(&spec).unwrap()), width);
        assert_eq!(k, s, "{spec}");
    }
}

#[test]
fn membership_on_grid() {
    for (m1, m2, n1, n2) in grid() {
        let spec = AlgebraSpec::osp_b(m1, m2, n1, n2);
        let s = verify_s_membership(&spec).unwrap();
        assert_eq!(s.total as usize, spec.size() * spec.size());
        assert!(s.passed(), "{spec} s_ij");
        let k = verify_membership(&kernel_basis(&spec).unwrap()).unwrap();
        assert!(k.passed(), "{spec} kernel");
    }
}

#[test]
fn closure_on_small_specs() {
    for spec in [AlgebraSpec::osp_b(1, 0, 1, 0), AlgebraSpec::osp_b(0, 1, 0, 1), AlgebraSpec::osp_d(1, 1, 1, 0).unwrap()] {
        let b = kernel_basis(&spec).unwrap();
        let r = verify_closure(&b).unwrap();
        assert_eq!(r.total as usize, b.len() * b.len());
        assert!(r.passed(), "{spec}");
    }
}

#[test]
fn type_d_embeds_in_type_b() {
    let d = AlgebraSpec::osp_d(1, 1, 1, 0).unwrap();
    let b = AlgebraSpec::osp_b(1, 1, 1, 0);
    let images: Vec<_> = kernel_basis(&d).unwrap().elements.iter().map(|m| embed_d_into_b(&d, m).unwrap()).collect();
    for m in &images {
        assert!(is_member(&b, m).unwrap());
    }
    assert_eq!(rank_of(&images).unwrap(), expected_dim(&d).unwrap());
}

use zzosp::algebras::{expected_dim, is_member, rank_of};
use zzosp::parastat::{
    bracket_span, family_sizes, graded_bracket_consistency, palev_ops, parafermion_ops, paraboson_ops,
    verify_generators, verify_relations, OperatorSystem, RelationFamily,
};
use zzosp::{AlgebraSpec, Degree};

fn check_all(system: &OperatorSystem) {
    for family in system.applicable_families() {
        let report = verify_relations(family, system).unwrap();
        let (m1, m2, n1, n2) = family_sizes(family, system);
        assert_eq!(report.total, family.declared_total(m1, m2, n1, n2), "{family} on {}", report.spec);
        assert!(report.passed(), "{family} on {}: {:?}", report.spec, report.counterexamples.first());
    }
    assert!(graded_bracket_consistency(system).unwrap().passed());
    assert!(verify_generators(system).unwrap().passed());
}

#[test]
fn osp_b_relation_suites() {
    for (m1, m2, n1, n2) in [(1, 1, 1, 1), (1, 0, 1, 0), (0, 1, 0, 1), (2, 1, 1, 2), (1, 2, 2, 0)] {
        let spec = AlgebraSpec::osp_b(m1, m2, n1, n2);
        check_all(&OperatorSystem::for_osp_b(&spec).unwrap());
    }
}

#[test]
fn pure_boson_suites() {
    for (n1, n2) in [(2, 2), (1, 0), (3, 1)] {
        let system = OperatorSystem::for_osp_b(&AlgebraSpec::osp_b(0, 0, n1, n2)).unwrap();
        assert_eq!(system.applicable_families(), [RelationFamily::BBSame, RelationFamily::BBMixed]);
        check_all(&system);
    }
}

#[test]
fn palev_suites() {
    for (n1, n2) in [(2, 2), (1, 1), (3, 0), (1, 2)] {
        check_all(&OperatorSystem::for_palev(n1, n2).unwrap());
    }
}

#[test]
fn every_family_is_exercised() {
    let mut seen = Vec::new();
    seen.extend(OperatorSystem::for_osp_b(&AlgebraSpec::osp_b(1, 1, 1, 1)).unwrap().applicable_families());
    seen.extend(OperatorSystem::for_palev(1, 1).unwrap().applicable_families());
    for f in RelationFamily::ALL {
        assert!(seen.contains(&f), "{f}");
    }
}

#[test]
fn generator_degrees_follow_family_split() {
    let spec = AlgebraSpec::osp_b(2, 1, 1, 2);
    let f = parafermion_ops(&spec).unwrap();
    let b = paraboson_ops(&spec).unwrap();
    for i in 0..3 {
        let want = if i < 2 { Degree::ZERO } else { Degree::BOTH };
        assert_eq!(f.creators[i].degree(), Some(want));
        assert_eq!(f.annihilators[i].degree(), Some(want));
        let want = if i < 1 { Degree::FIRST } else { Degree::SECOND };
        assert_eq!(b.creators[i].degree(), Some(want));
        assert_eq!(b.annihilators[i].degree(), Some(want));
    }
    for g in f.creators.iter().chain(&f.annihilators).chain(&b.creators).chain(&b.annihilators) {
        assert!(is_member(&spec, g).unwrap());
    }
    let a = palev_ops(1, 2).unwrap();
    assert_eq!(a.creators[0].degree(), Some(Degree::FIRST));
    assert_eq!(a.creators[2].degree(), Some(Degree::SECOND));
}

#[test]
fn bracket_placement_examples() {
    // family one pair anticommutes, cross-family pair commutes
    let b = paraboson_ops(&AlgebraSpec::osp_b(0, 0, 1, 1)).unwrap();
    let (x, y, z) = (&b.creators[0], &b.annihilators[0], &b.creators[1]);
    assert_eq!(x.bracket(y).unwrap(), x.anticommutator(y).unwrap());
    assert_eq!(x.bracket(z).unwrap(), x.commutator(z).unwrap());
    // family-two parafermion against family-one paraboson: dot = 1
    let spec = AlgebraSpec::osp_b(0, 1, 1, 0);
    let f = parafermion_ops(&spec).unwrap();
    let b = paraboson_ops(&spec).unwrap();
    assert_eq!(f.creators[0].bracket(&b.creators[0]).unwrap(), f.creators[0].anticommutator(&b.creators[0]).unwrap());
}

#[test]
fn parabosons_generate_osp_1_2() {
    let spec = AlgebraSpec::osp_b(0, 0, 1, 0);
    let span = bracket_span(&paraboson_ops(&spec).unwrap()).unwrap();
    assert_eq!(rank_of(&span).unwrap(), 5);
    assert_eq!(expected_dim(&spec).unwrap(), 5);
}

#[test]
fn declared_totals_for_acceptance_specs() {
    use RelationFamily::*;
    // index count × 2^arity, counted by hand
    assert_eq!(FF.declared_total(1, 1, 1, 1), 8 * 8);
    assert_eq!(BBSame.declared_total(0, 0, 2, 2), (8 + 8) * 8);
    assert_eq!(BBMixed.declared_total(0, 0, 2, 2), (2 * 2 * 4 + 2 * 2 * 4) * 8);
    assert_eq!(PFFamily1.declared_total(1, 1, 1, 1), (2 + 4 + 2 + 4) * 8);
    assert_eq!(ASame.declared_total(0, 0, 2, 2), (4 + 4) * 2 + (8 + 8) * 2);
    assert_eq!(AMixed.declared_total(0, 0, 2, 2), (4 + 4) * 2 + (16 + 16) * 2);
}

mod common;

use common::*;
use corep::classify_builders::{
    build_cdn, build_dual_group_algebra, build_example_6_1, build_example_6_2, build_group_algebra,
    build_taft, cyclic_table, extract_group_datum, klein_table, symmetric_3_table,
    validate_group_table, MuClass,
};
use corep::coalgebra_core::coradical;
use corep::exact_arith::{rat, CycField};
use corep::fusion::{fusion_ring, regular_element_sides, verify_ring_axioms};
use corep::hopf_core::{group_likes, normality_witness, right_adjoint, validate_hopf, HopfAlgebra};
use corep::quiver_analysis::{
    analyze_links, analyze_links_of_coalgebra, build_link_quiver, h1_component_from,
    h1_component_subcoalgebra, verdict, verdict_from, VerdictKind,
};
use corep::Error;

fn assert_same_hopf(a: &HopfAlgebra, b: &HopfAlgebra) {
    let n = a.dim();
    assert_eq!(n, b.dim(), "dimension");
    assert_eq!(
        a.coalgebra().basis_names(),
        b.coalgebra().basis_names(),
        "basis names"
    );
    let field = a.field();
    for i in 0..n {
        let ei = basis_vec(field, n, i);
        assert_eq!(
            a.coalgebra().delta_of(&ei),
            b.coalgebra().delta_of(&ei),
            "comultiplication at basis vector {i}"
        );
        assert_eq!(
            a.coalgebra().counit_of(&ei),
            b.coalgebra().counit_of(&ei),
            "counit at basis vector {i}"
        );
        assert_eq!(
            a.antipode_of(&ei),
            b.antipode_of(&ei),
            "antipode at basis vector {i}"
        );
        for j in 0..n {
            let ej = basis_vec(field, n, j);
            assert_eq!(a.mul(&ei, &ej), b.mul(&ei, &ej), "product ({i}, {j})");
        }
    }
}

#[test]
fn taft_2_2_matches_the_hand_built_four_dimensional_fixture() {
    let built = build_taft(2, 2, rat(0, 1), 1).unwrap();
    let field = CycField::new(2).unwrap();
    let fixture = small_taft_hopf(&field);
    assert_same_hopf(&built, &fixture);
}

#[test]
fn taft_rejects_invalid_data() {
    // μ must vanish when d = n.
    assert!(matches!(
        build_taft(2, 2, rat(1, 1), 1),
        Err(Error::InvalidDatum(_))
    ));
    // q = ζ₄ has order 4, not d = 2.
    assert!(matches!(
        build_taft(4, 2, rat(0, 1), 1),
        Err(Error::InvalidDatum(_))
    ));
    // d must divide n.
    assert!(matches!(
        build_taft(6, 4, rat(0, 1), 1),
        Err(Error::InvalidDatum(_))
    ));
    // d = 1 is out of range.
    assert!(matches!(
        build_taft(3, 1, rat(0, 1), 0),
        Err(Error::InvalidDatum(_))
    ));
}

#[test]
fn taft_builders_satisfy_the_hopf_axioms() {
    for (n, d, mu, qp) in [
        (2usize, 2usize, rat(0, 1), 1i64),
        (3, 3, rat(0, 1), 1),
        (4, 2, rat(1, 1), 2),
        (4, 4, rat(0, 1), 1),
        (6, 2, rat(-3, 5), 3),
        (6, 3, rat(0, 1), 2),
        (6, 6, rat(0, 1), 1),
    ] {
        let h = build_taft(n, d, mu, qp).unwrap();
        let report = validate_hopf(&h);
        assert!(
            report.is_valid(),
            "taft(n={n}, d={d}, q=z^{qp}) fails the axioms: {report:?}"
        );
    }
}

#[test]
fn taft_group_datum_roundtrips() {
    // (n, d, μ, q-power) → extracted (n, d, q, μ-class).
    let field4 = CycField::new(4).unwrap();
    let field6 = CycField::new(6).unwrap();

    let h = build_taft(4, 2, rat(1, 1), 2).unwrap();
    let datum = extract_group_datum(&h).unwrap();
    assert_eq!(datum.n, 4);
    assert_eq!(datum.d, 2);
    assert_eq!(datum.q, field4.root_of_unity(2));
    assert_eq!(datum.g_label, "g");
    assert!(datum.mu_raw.is_one());
    assert_eq!(datum.mu_class, MuClass::One);

    let h = build_taft(4, 4, rat(0, 1), 1).unwrap();
    let datum = extract_group_datum(&h).unwrap();
    assert_eq!(datum.n, 4);
    assert_eq!(datum.d, 4);
    assert_eq!(datum.q, field4.root_of_unity(1));
    assert_eq!(datum.mu_class, MuClass::Zero);

    let h = build_taft(6, 3, rat(0, 1), 2).unwrap();
    let datum = extract_group_datum(&h).unwrap();
    assert_eq!(datum.n, 6);
    assert_eq!(datum.d, 3);
    assert_eq!(datum.q, field6.root_of_unity(2));
    assert_eq!(datum.mu_class, MuClass::Zero);

    let h = build_taft(6, 2, rat(1, 1), 3).unwrap();
    let datum = extract_group_datum(&h).unwrap();
    assert_eq!(datum.d, 2);
    assert_eq!(datum.q, field6.root_of_unity(3));
    assert_eq!(datum.mu_class, MuClass::One);
}

#[test]
fn taft_4_has_the_basic_cycle_quiver_and_finite_type() {
    let h = build_taft(4, 4, rat(0, 1), 1).unwrap();
    let q = build_link_quiver(&h).unwrap();
    assert_eq!(q.vertex_count(), 4);
    let labels: Vec<&str> = q.vertices.iter().map(|v| v.label.as_str()).collect();
    assert_eq!(labels, ["1", "g", "g2", "g3"]);
    assert_eq!(q.arrow_total(), 4);
    for j in 0..4 {
        assert_eq!(q.arrows[(j + 1) % 4][j], 1, "arrow {j} -> {}", (j + 1) % 4);
    }
    let v = verdict(&h).unwrap();
    assert_eq!(v.kind, VerdictKind::Finite);
}

#[test]
fn group_algebra_builder_matches_the_hand_built_fixture() {
    let field = CycField::new(4).unwrap();
    let table = zn_table(4);
    let built = build_group_algebra("z4", &field, &table).unwrap();
    let fixture = group_hopf(&field, &table);
    assert_same_hopf(&built, &fixture);
    assert!(validate_hopf(&built).is_valid());
}

#[test]
fn dual_group_algebra_builder_matches_the_hand_built_fixture() {
    let field = CycField::new(1).unwrap();
    let table = s3_table();
    assert_eq!(table, symmetric_3_table());
    let built = build_dual_group_algebra("s3-dual", &field, &table).unwrap();
    let fixture = dual_group_hopf(&field, &table);
    assert_same_hopf(&built, &fixture);
    assert!(validate_hopf(&built).is_valid());
}

#[test]
fn group_table_validation_rejects_broken_tables() {
    // Ragged row.
    assert!(validate_group_table(&[vec![0, 1], vec![1]]).is_err());
    // Identity is not at index 0.
    assert!(validate_group_table(&[vec![1, 0], vec![0, 1]]).is_err());
    // Closed with identity but not associative.
    assert!(validate_group_table(&[vec![0, 1, 2], vec![1, 2, 0], vec![2, 1, 0]]).is_err());
    // No inverse for element 1.
    assert!(validate_group_table(&[vec![0, 1], vec![1, 1]]).is_err());
    // Out-of-range entry.
    assert!(validate_group_table(&[vec![0, 1], vec![1, 7]]).is_err());
    // The good ones pass.
    assert!(validate_group_table(&zn_table(5)).is_ok());
    assert!(validate_group_table(&klein_table()).is_ok());
    assert!(validate_group_table(&symmetric_3_table()).is_ok());
    assert_eq!(cyclic_table(4), zn_table(4));
}

#[test]
fn klein_group_builders_pass_the_axioms_both_ways() {
    let field = CycField::new(2).unwrap();
    let h = build_group_algebra("klein", &field, &klein_table()).unwrap();
    assert!(validate_hopf(&h).is_valid());
    let d = build_dual_group_algebra("klein-dual", &field, &klein_table()).unwrap();
    assert!(validate_hopf(&d).is_valid());
    assert_eq!(group_likes(&h).unwrap().len(), 4);
    assert_eq!(group_likes(&d).unwrap().len(), 4);
}

#[test]
fn path_coalgebra_of_the_three_cycle_is_finite_type() {
    let c = build_cdn(3, 2).unwrap();
    assert_eq!(c.dim(), 6);
    assert_eq!(coradical(&c).unwrap().dim(), 3);
    let qa = analyze_links_of_coalgebra(&c).unwrap();
    assert_eq!(qa.quiver.vertex_count(), 3);
    for i in 0..3 {
        assert_eq!(qa.quiver.arrows[(i + 1) % 3][i], 1, "arrow e{i} -> e{}", (i + 1) % 3);
    }
    assert_eq!(qa.quiver.arrow_total(), 3);
    let v = verdict_from(&qa).unwrap();
    assert_eq!(v.kind, VerdictKind::Finite);
}

#[test]
fn truncated_loop_coalgebra_is_a_single_loop() {
    let c = build_cdn(1, 2).unwrap();
    assert_eq!(c.dim(), 2);
    let qa = analyze_links_of_coalgebra(&c).unwrap();
    assert_eq!(qa.quiver.vertex_count(), 1);
    assert_eq!(qa.quiver.arrows[0][0], 1);
    assert_eq!(verdict_from(&qa).unwrap().kind, VerdictKind::Finite);
}

#[test]
fn path_coalgebra_with_no_paths_is_cosemisimple() {
    let c = build_cdn(4, 1).unwrap();
    assert_eq!(c.dim(), 4);
    let qa = analyze_links_of_coalgebra(&c).unwrap();
    assert_eq!(verdict_from(&qa).unwrap().kind, VerdictKind::Cosemisimple);
    assert_eq!(qa.quiver.arrow_total(), 0);
}

#[test]
fn sixteen_dimensional_example_passes_the_axioms() {
    let h = build_example_6_1().unwrap();
    assert_eq!(h.dim(), 16);
    let report = validate_hopf(&h);
    assert!(report.is_valid(), "axiom failure: {report:?}");
}

#[test]
fn sixteen_dimensional_example_full_analysis() {
    let h = build_example_6_1().unwrap();
    assert_eq!(group_likes(&h).unwrap().len(), 4);

    let qa = analyze_links(&h).unwrap();
    assert_eq!(
        qa.simples.iter().map(|s| s.rank * s.rank).collect::<Vec<_>>(),
        [1, 1, 1, 1, 4]
    );
    assert_eq!(qa.quiver.arrow_total(), 5);

    let v = verdict_from(&qa).unwrap();
    assert_eq!(v.kind, VerdictKind::Finite);
    assert_eq!(v.criterion2, Some(true));
    assert_eq!(v.criterion3, Some(true));
    assert_eq!(v.criterion4, Some(true));

    // The component subcoalgebra H₍₁₎ = span{1, c, y, cy} is pointed of
    // dimension 4.
    let h1 = h1_component_from(h.coalgebra(), &qa).unwrap();
    assert_eq!(h1.subspace.dim(), 4);
    assert!(h1.pointed);
    for name in ["1", "c", "y", "cy"] {
        let idx = h
            .coalgebra()
            .basis_names()
            .iter()
            .position(|n| n == name)
            .unwrap();
        assert!(
            h1.subspace.contains_vector(&basis_vec(h.field(), 16, idx)),
            "{name} should lie in the component subcoalgebra"
        );
    }

    // Group datum: n = 2 (G(H₍₁₎) = {1, c}), g = c, q = −1, d = 2, μ = 0.
    let datum = extract_group_datum(&h).unwrap();
    assert_eq!(datum.n, 2);
    assert_eq!(datum.g_label, "c");
    assert_eq!(datum.q, -&h.field().one());
    assert_eq!(datum.d, 2);
    assert_eq!(datum.mu_class, MuClass::Zero);

    // H₍₁₎ is not a normal Hopf subalgebra: conjugating c by x lands on b.
    let witness = normality_witness(&h, &h1.subspace);
    let msg = witness.expect("H_(1) is not normal in this example");
    assert!(msg.contains("x"), "witness should name the acting element: {msg}");
    assert!(msg.contains("b"), "witness should name the escaping image: {msg}");

    // Fusion ring sanity: rank identity holds, and the regular element on
    // the simple kc multiplies to dimension 16/... on both sides.
    let (h0, simples) = unit_first_simples(&h);
    let f = fusion_ring(&h, &h0, &simples).unwrap();
    assert!(verify_ring_axioms(&f).is_empty());
    assert_eq!(regular_element_sides(&f, 2), (6, 6));
}

#[test]
fn thirty_two_dimensional_example_passes_the_axioms() {
    let h = build_example_6_2(rat(1, 1)).unwrap();
    assert_eq!(h.dim(), 32);
    let report = validate_hopf(&h);
    assert!(report.is_valid(), "axiom failure: {report:?}");
}

#[test]
fn thirty_two_dimensional_example_full_analysis() {
    let h = build_example_6_2(rat(1, 1)).unwrap();
    assert_eq!(group_likes(&h).unwrap().len(), 4);

    let qa = analyze_links(&h).unwrap();
    assert_eq!(qa.h0.dim(), 8);
    assert_eq!(
        qa.simples.iter().map(|s| s.rank * s.rank).collect::<Vec<_>>(),
        [1, 1, 1, 1, 4]
    );
    assert_eq!(qa.quiver.arrow_total(), 8);

    let v = verdict_from(&qa).unwrap();
    assert_eq!(v.kind, VerdictKind::Infinite);
    assert_eq!(v.criterion2, Some(false));
    assert_eq!(v.criterion3, Some(false));
    assert_eq!(v.criterion4, Some(false));
    // Criterion (3): the unique arrow into k1 comes from the 4-dimensional
    // block, so its source has dimension 4 ≠ 1.
    assert!(
        v.offending.iter().any(|m| m.contains("dim 4")),
        "offending evidence should name the 4-dimensional source: {:?}",
        v.offending
    );

    let datum = extract_group_datum(&h);
    assert!(matches!(datum, Err(Error::NotApplicable(_))));

    let (h0, simples) = unit_first_simples(&h);
    let f = fusion_ring(&h, &h0, &simples).unwrap();
    assert!(verify_ring_axioms(&f).is_empty());
    assert_eq!(regular_element_sides(&f, 4), (12, 12));
}

#[test]
fn thirty_two_dimensional_example_verdict_is_lambda_independent() {
    let h = build_example_6_2(rat(2, 1)).unwrap();
    assert!(validate_hopf(&h).is_valid());
    assert_eq!(verdict(&h).unwrap().kind, VerdictKind::Infinite);
}

#[test]
fn adjoint_action_of_an_abelian_group_algebra_is_trivial() {
    let field = CycField::new(4).unwrap();
    let h = build_group_algebra("z4", &field, &cyclic_table(4)).unwrap();
    for a in 0..4 {
        for b in 0..4 {
            let va = basis_vec(&field, 4, a);
            let vb = basis_vec(&field, 4, b);
            assert_eq!(right_adjoint(&h, &va, &vb), vb);
        }
    }
    // Every subspace spanned by group-likes is normal; take H₍₁₎ = k1.
    let h1 = h1_component_subcoalgebra(&h).unwrap();
    assert_eq!(h1.subspace.dim(), 1);
    assert!(normality_witness(&h, &h1.subspace).is_none());
}

#[test]
fn sweedler_component_subcoalgebra_is_normal_because_it_is_everything() {
    let field = CycField::new(2).unwrap();
    let h = small_taft_hopf(&field);
    let h1 = h1_component_subcoalgebra(&h).unwrap();
    assert_eq!(h1.subspace.dim(), 4);
    assert!(normality_witness(&h, &h1.subspace).is_none());
}

#[test]
fn group_datum_is_not_applicable_to_cosemisimple_input() {
    let field = CycField::new(4).unwrap();
    let h = build_group_algebra("z4", &field, &cyclic_table(4)).unwrap();
    assert!(matches!(
        extract_group_datum(&h),
        Err(Error::NotApplicable(_))
    ));
}

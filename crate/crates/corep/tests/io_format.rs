mod common;

use common::*;
use corep::classify_builders::{build_cdn, build_example_6_1};
use corep::exact_arith::CycField;
use corep::io::{
    load_coalgebra, load_hopf, load_input, save_coalgebra, save_hopf, LoadedInput,
    DEFAULT_MAX_CYCLOTOMIC,
};
use corep::Error;

#[test]
fn hopf_round_trip_is_bit_exact() {
    let field = CycField::new(2).unwrap();
    let h = small_taft_hopf(&field);
    let text = save_hopf(&h);
    let back = match load_input(&text, DEFAULT_MAX_CYCLOTOMIC).unwrap() {
        LoadedInput::Hopf(b) => b,
        LoadedInput::Coalgebra(_) => panic!("algebra data lost in round trip"),
    };
    assert_eq!(back.dim(), 4);
    assert_eq!(back.coalgebra().basis_names(), h.coalgebra().basis_names());
    for i in 0..4 {
        let ei = basis_vec(&field, 4, i);
        assert_eq!(back.coalgebra().delta_of(&ei), h.coalgebra().delta_of(&ei));
        assert_eq!(back.antipode_of(&ei), h.antipode_of(&ei));
        for j in 0..4 {
            let ej = basis_vec(&field, 4, j);
            assert_eq!(back.mul(&ei, &ej), h.mul(&ei, &ej));
        }
    }
    // Serialization is deterministic.
    assert_eq!(save_hopf(&back), text);
}

#[test]
fn coalgebra_round_trip_preserves_structure() {
    let c = build_cdn(3, 2).unwrap();
    let text = save_coalgebra(&c);
    let back = load_coalgebra(&text, DEFAULT_MAX_CYCLOTOMIC).unwrap();
    assert_eq!(back.dim(), 6);
    assert_eq!(back.basis_names(), c.basis_names());
    let field = c.field();
    for i in 0..6 {
        let ei = basis_vec(field, 6, i);
        assert_eq!(back.delta_of(&ei), c.delta_of(&ei));
        assert_eq!(back.counit_of(&ei), c.counit_of(&ei));
    }
    // A plain coalgebra is not a Hopf input.
    assert!(matches!(
        load_hopf(&text, DEFAULT_MAX_CYCLOTOMIC),
        Err(Error::Parse(_))
    ));
}

#[test]
fn nontrivial_field_scalars_survive_the_round_trip() {
    let h = build_example_6_1().unwrap();
    let text = save_hopf(&h);
    assert!(text.contains("\"cyclotomic_order\": 4"));
    let back = load_hopf(&text, DEFAULT_MAX_CYCLOTOMIC).unwrap();
    let field = h.field();
    let n = h.dim();
    for i in 0..n {
        let ei = basis_vec(field, n, i);
        assert_eq!(back.coalgebra().delta_of(&ei), h.coalgebra().delta_of(&ei));
        assert_eq!(back.antipode_of(&ei), h.antipode_of(&ei));
    }
    assert_eq!(save_hopf(&back), text);
}

#[test]
fn malformed_documents_are_rejected_with_parse_errors() {
    let field = CycField::new(2).unwrap();
    let good = save_hopf(&small_taft_hopf(&field));

    // Truncated file.
    assert!(matches!(
        load_input(&good[..good.len() / 2], DEFAULT_MAX_CYCLOTOMIC),
        Err(Error::Parse(_))
    ));

    // Partial algebra data: drop the antipode only.
    let broken = {
        let mut doc: serde_json::Value = serde_json::from_str(&good).unwrap();
        doc.as_object_mut().unwrap().remove("antipode");
        doc.to_string()
    };
    assert!(matches!(
        load_input(&broken, DEFAULT_MAX_CYCLOTOMIC),
        Err(Error::Parse(_))
    ));

    // Out-of-range basis index.
    let broken = {
        let mut doc: serde_json::Value = serde_json::from_str(&good).unwrap();
        doc["comul"][0][0] = serde_json::json!(9);
        doc.to_string()
    };
    assert!(matches!(
        load_input(&broken, DEFAULT_MAX_CYCLOTOMIC),
        Err(Error::Parse(_))
    ));

    // Scalar with the wrong number of coordinates for the field.
    let broken = {
        let mut doc: serde_json::Value = serde_json::from_str(&good).unwrap();
        doc["counit"][0] = serde_json::json!(["1", "0"]);
        doc.to_string()
    };
    assert!(matches!(
        load_input(&broken, DEFAULT_MAX_CYCLOTOMIC),
        Err(Error::Parse(_))
    ));

    // Cyclotomic order above the cap.
    let broken = {
        let mut doc: serde_json::Value = serde_json::from_str(&good).unwrap();
        doc["field"]["cyclotomic_order"] = serde_json::json!(1024);
        doc.to_string()
    };
    assert!(matches!(
        load_input(&broken, DEFAULT_MAX_CYCLOTOMIC),
        Err(Error::Parse(_))
    ));
}

#[test]
fn perturbed_axioms_load_but_fail_validation() {
    // Perturbing one comultiplication cell keeps the file readable — the
    // loader accepts it — but the counit law now fails, which the
    // validation pass reports. (The CLI turns this split into exit 1
    // versus exit 2.)
    let field = CycField::new(2).unwrap();
    let good = save_hopf(&small_taft_hopf(&field));
    let mut doc: serde_json::Value = serde_json::from_str(&good).unwrap();
    let cell = doc["comul"]
        .as_array_mut()
        .unwrap()
        .iter_mut()
        .find(|e| e[0] == 2 && e[1] == 1 && e[2] == 2)
        .expect("the g⊗x cell of Δ(x) is present");
    cell[3] = serde_json::json!(["2"]);
    let loaded = load_input(&doc.to_string(), DEFAULT_MAX_CYCLOTOMIC).unwrap();
    let report = corep::coalgebra_core::validate_coalgebra(loaded.coalgebra());
    assert!(!report.is_valid());
}

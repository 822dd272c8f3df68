//! Coalgebra-layer tests: validation, dual algebras, wedges (against the
//! literal defining formula), coradicals, and coradical filtrations on
//! hand-rolled fixtures whose answers are known in closed form.

use corep::coalgebra_core::{
    coradical, coradical_filtration, dual_algebra, is_cosemisimple, is_subcoalgebra,
    restrict_to_subcoalgebra, tensor_square, validate_coalgebra, wedge, wedge_by_definition,
    Coalgebra,
};
use corep::exact_arith::{CycElem, CycField};
use corep::linalg::Subspace;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

/// The group-like coalgebra on `n` points: `Δ(e_i) = e_i ⊗ e_i`, `ε = 1`.
fn grouplike(field: &Arc<CycField>, n: usize) -> Coalgebra {
    let comul = (0..n).map(|i| (i, i, i, field.one())).collect();
    let counit = vec![field.one(); n];
    let names = (0..n).map(|i| format!("g{i}")).collect();
    Coalgebra::new("grouplike", field, n, names, comul, counit).unwrap()
}

/// The coalgebra underlying Sweedler's four-dimensional Hopf algebra, basis
/// `1, g, x, gx`: `g` group-like, `x` a `(1, g)`-skew-primitive.
fn sweedler(field: &Arc<CycField>) -> Coalgebra {
    let one = || field.one();
    let comul = vec![
        (0, 0, 0, one()), // Δ(1) = 1⊗1
        (1, 1, 1, one()), // Δ(g) = g⊗g
        (2, 2, 0, one()), // Δ(x) = x⊗1 + g⊗x
        (2, 1, 2, one()),
        (3, 3, 1, one()), // Δ(gx) = gx⊗g + 1⊗gx
        (3, 0, 3, one()),
    ];
    let counit = vec![one(), one(), field.zero(), field.zero()];
    let names = ["1", "g", "x", "gx"].map(String::from).to_vec();
    Coalgebra::new("sweedler", field, 4, names, comul, counit).unwrap()
}

/// Divided powers `d_0, …, d_N`: `Δ(d_i) = Σ_{j+k=i} d_j ⊗ d_k`,
/// `ε(d_i) = δ_{i,0}`. Coradical filtration grows one dimension per layer.
fn divided_powers(field: &Arc<CycField>, top: usize) -> Coalgebra {
    let mut comul = Vec::new();
    for i in 0..=top {
        for j in 0..=i {
            comul.push((i, j, i - j, field.one()));
        }
    }
    let mut counit = vec![field.zero(); top + 1];
    counit[0] = field.one();
    let names = (0..=top).map(|i| format!("d{i}")).collect();
    Coalgebra::new("divided-powers", field, top + 1, names, comul, counit).unwrap()
}

fn span_of_basis_subset(field: &Arc<CycField>, n: usize, idx: &[usize]) -> Subspace {
    let vecs: Vec<Vec<CycElem>> = idx
        .iter()
        .map(|&i| {
            let mut v = vec![field.zero(); n];
            v[i] = field.one();
            v
        })
        .collect();
    Subspace::from_spanning(field, n, &vecs)
}

fn random_subspace(rng: &mut ChaCha8Rng, field: &Arc<CycField>, n: usize, gens: usize) -> Subspace {
    let vecs: Vec<Vec<CycElem>> = (0..gens)
        .map(|_| {
            (0..n)
                .map(|_| field.from_int(rng.gen_range(-2..=2)))
                .collect()
        })
        .collect();
    Subspace::from_spanning(field, n, &vecs)
}

#[test]
fn fixtures_pass_validation() {
    let q = CycField::new(1).unwrap();
    for c in [grouplike(&q, 3), sweedler(&q), divided_powers(&q, 3)] {
        let report = validate_coalgebra(&c);
        assert!(report.is_valid(), "{}: {:?}", c.name(), report.violations);
    }
    let z4 = CycField::new(4).unwrap();
    assert!(validate_coalgebra(&sweedler(&z4)).is_valid());
}

#[test]
fn validation_catches_a_perturbed_comultiplication() {
    let q = CycField::new(1).unwrap();
    let good = sweedler(&q);
    // Perturb: add a spurious 1⊗1 term to Δ(x).
    let mut comul = good.comul().to_vec();
    comul.push((2, 0, 0, q.one()));
    let bad = Coalgebra::new(
        "sweedler-perturbed",
        &q,
        4,
        good.basis_names().to_vec(),
        comul,
        good.counit().to_vec(),
    )
    .unwrap();
    let report = validate_coalgebra(&bad);
    assert!(!report.is_valid());
    // The spurious term breaks the counit laws on basis vector 2 (= x).
    assert!(
        report.violations.iter().any(|v| v.contains("basis 2")),
        "violations should name the broken basis vector: {:?}",
        report.violations
    );
}

#[test]
fn validation_catches_a_broken_counit() {
    let q = CycField::new(1).unwrap();
    let good = grouplike(&q, 2);
    let bad = Coalgebra::new(
        "grouplike-bad-counit",
        &q,
        2,
        good.basis_names().to_vec(),
        good.comul().to_vec(),
        vec![q.one(), q.zero()], // ε(g1) should be 1
    )
    .unwrap();
    let report = validate_coalgebra(&bad);
    assert!(!report.is_valid());
    assert!(report.violations.iter().any(|v| v.contains("counit")));
}

#[test]
fn delta_matrix_agrees_with_sparse_delta() {
    let q = CycField::new(1).unwrap();
    let c = sweedler(&q);
    let dm = c.delta_matrix();
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0a1_0001);
    for _ in 0..10 {
        let v: Vec<CycElem> = (0..4).map(|_| q.from_int(rng.gen_range(-3..=3))).collect();
        assert_eq!(dm.apply(&v), c.delta_of(&v));
    }
}

#[test]
fn dual_of_grouplike_is_orthogonal_idempotents() {
    let q = CycField::new(1).unwrap();
    let c = grouplike(&q, 4);
    let a = dual_algebra(&c);
    assert!(a.is_associative());
    assert!(a.unit_is_two_sided());
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                let expected = if i == j && j == k { q.one() } else { q.zero() };
                assert_eq!(*a.sc(i, j, k), expected, "f{i}·f{j} at f{k}");
            }
        }
    }
    // The unit is ε = Σ f_i.
    assert!(a.unit().iter().all(|c| c.is_one()));
}

#[test]
fn dual_of_sweedler_is_associative_with_two_dimensional_radical() {
    let q = CycField::new(1).unwrap();
    let a = dual_algebra(&sweedler(&q));
    assert!(a.is_associative());
    assert!(a.unit_is_two_sided());
    let rad = corep::semisimple::jacobson_radical(&a);
    assert_eq!(rad.dim(), 2);
    // The radical annihilates the span of the group-likes: it is spanned by
    // the functionals dual to x and gx.
    let expected = span_of_basis_subset(&q, 4, &[2, 3]);
    assert_eq!(rad, expected);
}

#[test]
fn wedge_of_full_spaces_is_full() {
    let q = CycField::new(1).unwrap();
    let c = sweedler(&q);
    let full = c.full_space();
    assert!(wedge(&c, &full, &full).is_full());
}

#[test]
fn sweedler_wedge_of_grouplike_span_is_everything() {
    let q = CycField::new(1).unwrap();
    let c = sweedler(&q);
    let h0 = span_of_basis_subset(&q, 4, &[0, 1]);
    let w = wedge(&c, &h0, &h0);
    // x and gx are skew-primitive over {1, g}, so the wedge jumps to H.
    assert!(w.is_full());
}

#[test]
fn grouplike_wedges_match_sums_of_subcoalgebras() {
    // In a group-like coalgebra every subset span is a subcoalgebra, and the
    // wedge of subcoalgebras C ∧ D contains C + D; here it equals it.
    let q = CycField::new(1).unwrap();
    let c = grouplike(&q, 5);
    let v = span_of_basis_subset(&q, 5, &[0, 2]);
    let w = span_of_basis_subset(&q, 5, &[2, 4]);
    let expected = v.sum(&w).unwrap();
    assert_eq!(wedge(&c, &v, &w), expected);
}

#[test]
fn wedge_agrees_with_defining_formula_on_random_subspaces() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0a1_0002);
    let q = CycField::new(1).unwrap();
    let z4 = CycField::new(4).unwrap();
    let fixtures = [
        sweedler(&q),
        sweedler(&z4),
        divided_powers(&q, 3),
        grouplike(&q, 4),
    ];
    for c in &fixtures {
        for _ in 0..6 {
            let gv = rng.gen_range(0..=c.dim());
            let gw = rng.gen_range(0..=c.dim());
            let v = random_subspace(&mut rng, c.field(), c.dim(), gv);
            let w = random_subspace(&mut rng, c.field(), c.dim(), gw);
            let fast = wedge(c, &v, &w);
            let slow = wedge_by_definition(c, &v, &w);
            assert_eq!(fast, slow, "wedge mismatch on {} fixture", c.name());
        }
    }
}

#[test]
fn wedge_is_monotone_in_both_arguments() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0a1_0003);
    let q = CycField::new(1).unwrap();
    let c = divided_powers(&q, 4);
    for _ in 0..8 {
        let (gv, gw) = (rng.gen_range(0..=3), rng.gen_range(0..=3));
        let v = random_subspace(&mut rng, &q, 5, gv);
        let w = random_subspace(&mut rng, &q, 5, gw);
        let vbig = v.sum(&random_subspace(&mut rng, &q, 5, 1)).unwrap();
        assert!(wedge(&c, &vbig, &w).contains(&wedge(&c, &v, &w)));
        assert!(wedge(&c, &v, &vbig).contains(&wedge(&c, &v, &w.intersect(&vbig).unwrap())));
    }
}

#[test]
fn coradical_of_cosemisimple_fixtures_is_full() {
    let q = CycField::new(1).unwrap();
    let c = grouplike(&q, 4);
    assert!(coradical(&c).unwrap().is_full());
    assert!(is_cosemisimple(&c).unwrap());
}

#[test]
fn sweedler_coradical_is_the_grouplike_span() {
    let q = CycField::new(1).unwrap();
    let c = sweedler(&q);
    let h0 = coradical(&c).unwrap();
    assert_eq!(h0, span_of_basis_subset(&q, 4, &[0, 1]));
    assert!(!is_cosemisimple(&c).unwrap());
}

#[test]
fn coradical_contains_every_cosemisimple_subset_span() {
    // Brute-force partial maximality check: over every subset span that is
    // a subcoalgebra with semisimple dual, the coradical contains it.
    let q = CycField::new(1).unwrap();
    for c in [sweedler(&q), divided_powers(&q, 2)] {
        let n = c.dim();
        let h0 = coradical(&c).unwrap();
        for mask in 1u32..(1 << n) {
            let idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let s = span_of_basis_subset(&q, n, &idx);
            if !is_subcoalgebra(&c, &s) {
                continue;
            }
            let restricted = restrict_to_subcoalgebra(&c, &s).unwrap();
            let rad = corep::semisimple::jacobson_radical(&dual_algebra(&restricted));
            if rad.dim() == 0 {
                assert!(
                    h0.contains(&s),
                    "{}: cosemisimple subcoalgebra {:?} outside the coradical",
                    c.name(),
                    idx
                );
            }
        }
    }
}

#[test]
fn sweedler_filtration_has_dims_two_and_four() {
    let q = CycField::new(1).unwrap();
    let f = coradical_filtration(&sweedler(&q)).unwrap();
    assert_eq!(f.dims(), vec![2, 4]);
    assert!(f.layer(0).contains_vector(&[q.one(), q.one(), q.zero(), q.zero()]));
    assert!(f.layer(7).is_full(), "layer() clamps past the top");
}

#[test]
fn divided_powers_filtration_grows_one_dimension_per_layer() {
    let q = CycField::new(1).unwrap();
    let f = coradical_filtration(&divided_powers(&q, 4)).unwrap();
    assert_eq!(f.dims(), vec![1, 2, 3, 4, 5]);
    for (i, layer) in f.layers.iter().enumerate() {
        // H_i = span{d_0, …, d_i} exactly.
        assert_eq!(*layer, span_of_basis_subset(&q, 5, &(0..=i).collect::<Vec<_>>()));
    }
}

#[test]
fn filtration_layers_satisfy_the_comultiplication_bound() {
    // Δ(H_n) ⊆ Σ_{i+j=n} H_i ⊗ H_j — the defining property of a coalgebra
    // filtration, checked literally in the tensor square.
    let q = CycField::new(1).unwrap();
    for c in [sweedler(&q), divided_powers(&q, 3)] {
        let f = coradical_filtration(&c).unwrap();
        let n2 = c.dim() * c.dim();
        for (nn, layer) in f.layers.iter().enumerate() {
            // Assemble Σ_{i+j=nn} H_i ⊗ H_j as a span in K^{n²}.
            let mut target = Subspace::zero(&q, n2);
            for i in 0..=nn {
                let (hi, hj) = (f.layer(i), f.layer(nn - i));
                let mut spanning = Vec::new();
                for a in 0..hi.dim() {
                    for b in 0..hj.dim() {
                        let (va, vb) = (hi.basis_vector(a), hj.basis_vector(b));
                        let mut vec = vec![q.zero(); n2];
                        for (p, x) in va.iter().enumerate() {
                            for (r, y) in vb.iter().enumerate() {
                                if !x.is_zero() && !y.is_zero() {
                                    vec[p * c.dim() + r] = x * y;
                                }
                            }
                        }
                        spanning.push(vec);
                    }
                }
                target = target.sum(&Subspace::from_spanning(&q, n2, &spanning)).unwrap();
            }
            for a in 0..layer.dim() {
                assert!(
                    target.contains_vector(&c.delta_of(layer.basis_vector(a))),
                    "{}: Δ(H_{nn}) escapes Σ H_i⊗H_j",
                    c.name()
                );
            }
        }
    }
}

#[test]
fn restriction_to_grouplike_span_recovers_the_small_coalgebra() {
    let q = CycField::new(1).unwrap();
    let c = sweedler(&q);
    let s = span_of_basis_subset(&q, 4, &[0, 1]);
    let r = restrict_to_subcoalgebra(&c, &s).unwrap();
    assert_eq!(r.dim(), 2);
    assert!(validate_coalgebra(&r).is_valid());
    // The restriction is the group-like coalgebra on two points.
    let expected = grouplike(&q, 2);
    assert_eq!(r.comul(), expected.comul());
    assert_eq!(r.counit(), expected.counit());
}

#[test]
fn restriction_rejects_a_non_subcoalgebra() {
    let q = CycField::new(1).unwrap();
    let c = sweedler(&q);
    let s = span_of_basis_subset(&q, 4, &[2]); // span{x} is not a subcoalgebra
    assert!(!is_subcoalgebra(&c, &s));
    assert!(restrict_to_subcoalgebra(&c, &s).is_err());
}

#[test]
fn restriction_of_divided_powers_layer_keeps_divided_power_shape() {
    let q = CycField::new(1).unwrap();
    let c = divided_powers(&q, 4);
    let s = span_of_basis_subset(&q, 5, &[0, 1, 2]);
    assert!(is_subcoalgebra(&c, &s));
    let r = restrict_to_subcoalgebra(&c, &s).unwrap();
    assert!(validate_coalgebra(&r).is_valid());
    let expected = divided_powers(&q, 2);
    assert_eq!(r.comul(), expected.comul());
}

#[test]
fn tensor_square_spans_products_of_basis_vectors() {
    let q = CycField::new(1).unwrap();
    let s = span_of_basis_subset(&q, 3, &[0, 2]);
    let t = tensor_square(&s);
    assert_eq!(t.dim(), 4);
    // e0⊗e2 flattened at position 0*3+2 = 2.
    let mut v = vec![q.zero(); 9];
    v[2] = q.one();
    assert!(t.contains_vector(&v));
    // e1⊗e0 is not in the square.
    let mut u = vec![q.zero(); 9];
    u[3] = q.one();
    assert!(!t.contains_vector(&u));
}

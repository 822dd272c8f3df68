//! Semisimple-structure tests: radicals, centers, minimal polynomials,
//! central primitive idempotents, matrix units, and simple-subcoalgebra
//! decompositions, checked against fixtures with closed-form answers
//! (matrix algebras, group algebras of Z_n and S₃, quaternions).

use corep::coalgebra_core::{Algebra, Coalgebra};
use corep::exact_arith::{CycElem, CycField};
use corep::semisimple::{
    center, central_primitive_idempotents, is_multiplicative, jacobson_radical, matrix_units,
    minimal_polynomial, simple_subcoalgebras,
};
use corep::Error;
use std::sync::Arc;

/// Structure constants from a list of nonzero products `e_a·e_b = Σ c·e_c`.
fn algebra_from_sparse(
    field: &Arc<CycField>,
    dim: usize,
    products: &[(usize, usize, usize, i64)],
    unit: &[usize],
) -> Algebra {
    let mut table = vec![field.zero(); dim * dim * dim];
    for &(a, b, c, coeff) in products {
        table[(a * dim + b) * dim + c] = field.from_int(coeff);
    }
    let mut u = vec![field.zero(); dim];
    for &i in unit {
        u[i] = field.one();
    }
    Algebra::new(field, dim, table, u)
}

/// Full matrix algebra M_s(K): basis E_{ab} at index `a·s + b`.
fn matrix_algebra(field: &Arc<CycField>, s: usize) -> Algebra {
    let mut products = Vec::new();
    for a in 0..s {
        for b in 0..s {
            for c in 0..s {
                // E_{ab}·E_{bc} = E_{ac}
                products.push((a * s + b, b * s + c, a * s + c, 1));
            }
        }
    }
    let unit: Vec<usize> = (0..s).map(|a| a * s + a).collect();
    algebra_from_sparse(field, s * s, &products, &unit)
}

/// Group algebra from a multiplication table `g_a·g_b = g_{table[a][b]}`.
fn group_algebra(field: &Arc<CycField>, table: &[Vec<usize>]) -> Algebra {
    let n = table.len();
    let mut products = Vec::new();
    for (a, row) in table.iter().enumerate() {
        for (b, &c) in row.iter().enumerate() {
            products.push((a, b, c, 1));
        }
    }
    algebra_from_sparse(field, n, &products, &[0])
}

fn zn_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

/// S₃ as permutations of {0,1,2}; element order: e, r, r², s, sr, sr²
/// with r = (0 1 2) and s = (0 1).
fn s3_table() -> Vec<Vec<usize>> {
    type Perm = [usize; 3];
    let compose = |f: Perm, g: Perm| -> Perm { [f[g[0]], f[g[1]], f[g[2]]] };
    let e: Perm = [0, 1, 2];
    let r: Perm = [1, 2, 0];
    let s: Perm = [1, 0, 2];
    let elems: Vec<Perm> = vec![
        e,
        r,
        compose(r, r),
        s,
        compose(s, r),
        compose(s, compose(r, r)),
    ];
    elems
        .iter()
        .map(|&a| {
            elems
                .iter()
                .map(|&b| {
                    let ab = compose(a, b);
                    elems.iter().position(|&x| x == ab).unwrap()
                })
                .collect()
        })
        .collect()
}

/// The dual coalgebra of a group algebra: `Δ(f_c) = Σ_{ab=c} f_a ⊗ f_b`,
/// `ε(f_c) = δ_{c,e}`.
fn dual_group_coalgebra(field: &Arc<CycField>, table: &[Vec<usize>]) -> Coalgebra {
    let n = table.len();
    let mut comul = Vec::new();
    for (a, row) in table.iter().enumerate() {
        for (b, &c) in row.iter().enumerate() {
            comul.push((c, a, b, field.one()));
        }
    }
    let mut counit = vec![field.zero(); n];
    counit[0] = field.one();
    let names = (0..n).map(|i| format!("f{i}")).collect();
    Coalgebra::new("dual-group", field, n, names, comul, counit).unwrap()
}

/// The comatrix coalgebra C(r): basis g_{ab} at `a·r + b`,
/// `Δ(g_ab) = Σ_t g_at ⊗ g_tb`, `ε(g_ab) = δ_ab`.
fn comatrix_coalgebra(field: &Arc<CycField>, r: usize) -> Coalgebra {
    let mut comul = Vec::new();
    for a in 0..r {
        for b in 0..r {
            for t in 0..r {
                comul.push((a * r + b, a * r + t, t * r + b, field.one()));
            }
        }
    }
    let counit: Vec<CycElem> = (0..r * r)
        .map(|i| if i / r == i % r { field.one() } else { field.zero() })
        .collect();
    let names = (0..r * r).map(|i| format!("g{}{}", i / r, i % r)).collect();
    Coalgebra::new("comatrix", field, r * r, names, comul, counit).unwrap()
}

/// Hamilton quaternions over Q: basis 1, i, j, k. A division algebra, so no
/// rational splitting exists.
fn quaternions(field: &Arc<CycField>) -> Algebra {
    let p = |a: usize, b: usize, c: usize, s: i64| (a, b, c, s);
    let products = vec![
        p(0, 0, 0, 1),
        p(0, 1, 1, 1),
        p(0, 2, 2, 1),
        p(0, 3, 3, 1),
        p(1, 0, 1, 1),
        p(2, 0, 2, 1),
        p(3, 0, 3, 1),
        p(1, 1, 0, -1),
        p(2, 2, 0, -1),
        p(3, 3, 0, -1),
        p(1, 2, 3, 1),
        p(2, 1, 3, -1),
        p(2, 3, 1, 1),
        p(3, 2, 1, -1),
        p(3, 1, 2, 1),
        p(1, 3, 2, -1),
    ];
    algebra_from_sparse(field, 4, &products, &[0])
}

fn basis_vec(field: &Arc<CycField>, n: usize, i: usize) -> Vec<CycElem> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

#[test]
fn matrix_algebra_is_semisimple_with_trivial_center() {
    let q = CycField::new(1).unwrap();
    let a = matrix_algebra(&q, 2);
    assert!(a.is_associative());
    assert!(a.unit_is_two_sided());
    assert_eq!(jacobson_radical(&a).dim(), 0);
    let z = center(&a);
    assert_eq!(z.dim(), 1);
    assert!(z.contains_vector(&a.unit().to_vec()));
}

#[test]
fn upper_triangular_radical_is_the_strict_part() {
    // Basis E11, E12, E22 of upper-triangular 2×2 matrices.
    let q = CycField::new(1).unwrap();
    let a = algebra_from_sparse(
        &q,
        3,
        &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)],
        &[0, 2],
    );
    assert!(a.is_associative());
    let rad = jacobson_radical(&a);
    assert_eq!(rad.dim(), 1);
    assert!(rad.contains_vector(&basis_vec(&q, 3, 1)));
    // Not semisimple, so no central idempotent decomposition.
    assert!(matches!(
        central_primitive_idempotents(&a),
        Err(Error::Domain(_))
    ));
}

#[test]
fn group_algebra_radical_is_zero_in_characteristic_zero() {
    let q = CycField::new(1).unwrap();
    for table in [zn_table(4), s3_table()] {
        let a = group_algebra(&q, &table);
        assert!(a.is_associative());
        assert_eq!(jacobson_radical(&a).dim(), 0, "Maschke");
    }
}

#[test]
fn minimal_polynomials_match_hand_computations() {
    let q = CycField::new(1).unwrap();
    // Nilpotent E12 in M₂: minpoly t².
    let m2 = matrix_algebra(&q, 2);
    let mp = minimal_polynomial(&m2, &basis_vec(&q, 4, 1));
    assert_eq!(mp.deg(), Some(2));
    assert!(mp.coeff(0).is_zero() && mp.coeff(1).is_zero() && mp.coeff(2).is_one());
    // (1, 2) in Q×Q: minpoly (t−1)(t−2) = t² − 3t + 2.
    let qq = algebra_from_sparse(&q, 2, &[(0, 0, 0, 1), (1, 1, 1, 1)], &[0, 1]);
    let mut x = vec![q.one(), q.from_int(2)];
    let mp = minimal_polynomial(&qq, &x);
    assert_eq!(mp.deg(), Some(2));
    assert_eq!(mp.coeff(0), q.from_int(2));
    assert_eq!(mp.coeff(1), q.from_int(-3));
    // The identity (1, 1) has minpoly t − 1.
    x[1] = q.one();
    assert_eq!(minimal_polynomial(&qq, &x).deg(), Some(1));
}

#[test]
fn central_idempotents_of_a_product_of_lines() {
    let q = CycField::new(1).unwrap();
    let qq = algebra_from_sparse(&q, 2, &[(0, 0, 0, 1), (1, 1, 1, 1)], &[0, 1]);
    let idems = central_primitive_idempotents(&qq).unwrap();
    assert_eq!(idems.len(), 2);
    let mut sorted = idems.clone();
    sorted.sort_by_key(|v| v.iter().position(|c| !c.is_zero()));
    assert_eq!(sorted[0], basis_vec(&q, 2, 0));
    assert_eq!(sorted[1], basis_vec(&q, 2, 1));
}

#[test]
fn central_idempotents_of_z4_need_the_fourth_roots_of_unity() {
    // Over Q the group algebra of Z₄ hits the irreducible factor t² + 1.
    let q = CycField::new(1).unwrap();
    let a = group_algebra(&q, &zn_table(4));
    match central_primitive_idempotents(&a) {
        Err(Error::NonSplit { m: 1, degree: 2 }) => {}
        other => panic!("expected NonSplit with degree 2, got {other:?}"),
    }
    // Over Q(ζ₄) the four characters split it: e_j = ¼ Σ_a ζ^{−ja} g_a.
    let z4 = CycField::new(4).unwrap();
    let a = group_algebra(&z4, &zn_table(4));
    let idems = central_primitive_idempotents(&a).unwrap();
    assert_eq!(idems.len(), 4);
    for e in &idems {
        assert_eq!(a.mul(e, e), *e);
        // Discrete-Fourier oracle: each idempotent is ¼ Σ_a ζ^{−ja} g_a
        // for exactly one j ∈ {0, 1, 2, 3}.
        let quarter = z4.from_rational(corep::exact_arith::rat(1, 4));
        let matches: Vec<u64> = (0..4u64)
            .filter(|&j| {
                (0..4usize).all(|aa| {
                    let expect = &quarter * &z4.root_of_unity(-((j * aa as u64) as i64));
                    e[aa] == expect
                })
            })
            .collect();
        assert_eq!(matches.len(), 1, "idempotent is a DFT character projector");
    }
}

#[test]
fn matrix_units_of_m2_satisfy_the_relations() {
    let q = CycField::new(1).unwrap();
    let a = matrix_algebra(&q, 2);
    let idems = central_primitive_idempotents(&a).unwrap();
    assert_eq!(idems.len(), 1);
    let units = matrix_units(&a, &idems[0]).unwrap();
    assert_eq!(units.len(), 2);
    // The defining relations are asserted inside matrix_units; spot-check
    // that the diagonal units are a complete orthogonal pair.
    let e00 = &units[0][0];
    let e11 = &units[1][1];
    assert_eq!(a.mul(e00, e00), *e00);
    assert_eq!(a.mul(e11, e11), *e11);
    assert!(a.mul(e00, e11).iter().all(|c| c.is_zero()));
}

#[test]
fn matrix_units_of_m3_have_rank_three() {
    let q = CycField::new(1).unwrap();
    let a = matrix_algebra(&q, 3);
    let idems = central_primitive_idempotents(&a).unwrap();
    let units = matrix_units(&a, &idems[0]).unwrap();
    assert_eq!(units.len(), 3);
}

#[test]
fn quaternions_are_simple_but_do_not_split_over_q() {
    let q = CycField::new(1).unwrap();
    let h = quaternions(&q);
    assert!(h.is_associative());
    assert_eq!(jacobson_radical(&h).dim(), 0);
    assert_eq!(center(&h).dim(), 1);
    let idems = central_primitive_idempotents(&h).unwrap();
    assert_eq!(idems.len(), 1);
    match matrix_units(&h, &idems[0]) {
        Err(Error::NonSplit { m: 1, degree: 2 }) => {}
        other => panic!("expected NonSplit with degree 2, got {:?}", other.map(|_| ())),
    }
}

#[test]
fn s3_group_algebra_splits_rationally_into_1_1_4() {
    let q = CycField::new(1).unwrap();
    let a = group_algebra(&q, &s3_table());
    assert_eq!(center(&a).dim(), 3, "three conjugacy classes");
    let idems = central_primitive_idempotents(&a).unwrap();
    assert_eq!(idems.len(), 3);
    let mut ranks: Vec<usize> = idems
        .iter()
        .map(|f| matrix_units(&a, f).unwrap().len())
        .collect();
    ranks.sort_unstable();
    assert_eq!(ranks, vec![1, 1, 2]);
}

#[test]
fn grouplike_coalgebra_decomposes_into_points_in_basis_order() {
    let q = CycField::new(1).unwrap();
    let n = 4;
    let comul = (0..n).map(|i| (i, i, i, q.one())).collect();
    let counit = vec![q.one(); n];
    let names = (0..n).map(|i| format!("g{i}")).collect();
    let c = Coalgebra::new("grouplike", &q, n, names, comul, counit).unwrap();
    let simples = simple_subcoalgebras(&c).unwrap();
    assert_eq!(simples.len(), 4);
    for (i, s) in simples.iter().enumerate() {
        assert_eq!(s.rank, 1);
        assert_eq!(s.subspace.dim(), 1);
        assert!(s.subspace.contains_vector(&basis_vec(&q, n, i)), "basis order");
        assert_eq!(s.comatrix[0][0], basis_vec(&q, n, i));
    }
}

#[test]
fn comatrix_coalgebra_is_recovered_as_one_simple_block() {
    let q = CycField::new(1).unwrap();
    for r in [2usize, 3] {
        let c = comatrix_coalgebra(&q, r);
        let simples = simple_subcoalgebras(&c).unwrap();
        assert_eq!(simples.len(), 1);
        assert_eq!(simples[0].rank, r);
        assert!(simples[0].subspace.is_full());
        assert!(is_multiplicative(&c, &simples[0].comatrix));
    }
}

#[test]
fn multiplicative_matrices_are_stable_under_similarity() {
    // If G is a basic multiplicative matrix and S invertible, S·G·S⁻¹ is
    // again multiplicative with the same span.
    let q = CycField::new(1).unwrap();
    let c = comatrix_coalgebra(&q, 2);
    let g = &simple_subcoalgebras(&c).unwrap()[0].comatrix;
    // S = [[1, 1], [0, 1]], S⁻¹ = [[1, −1], [0, 1]]; h = S g S⁻¹ entrywise.
    let lin = |rows: &[(i64, (usize, usize))]| -> Vec<CycElem> {
        let mut v = vec![q.zero(); 4];
        for &(coef, (a, b)) in rows {
            for (acc, x) in v.iter_mut().zip(&g[a][b]) {
                *acc += &(&q.from_int(coef) * x);
            }
        }
        v
    };
    // h00 = g00 + g10, h01 = −g00 + g01 − g10 + g11, h10 = g10, h11 = −g10 + g11.
    let h = vec![
        vec![
            lin(&[(1, (0, 0)), (1, (1, 0))]),
            lin(&[(-1, (0, 0)), (1, (0, 1)), (-1, (1, 0)), (1, (1, 1))]),
        ],
        vec![lin(&[(1, (1, 0))]), lin(&[(-1, (1, 0)), (1, (1, 1))])],
    ];
    assert!(is_multiplicative(&c, &h));
    // A non-invertible change of entries destroys multiplicativity.
    let broken = vec![
        vec![g[0][0].clone(), g[0][1].clone()],
        vec![g[0][0].clone(), g[1][1].clone()],
    ];
    assert!(!is_multiplicative(&c, &broken));
}

#[test]
fn dual_of_z4_as_coalgebra_needs_zeta4_and_gives_characters() {
    // The coalgebra dual to the group algebra kZ₄: over Q the decomposition
    // must fail (NonSplit), over Q(ζ₄) it yields the four characters.
    let q = CycField::new(1).unwrap();
    let c = dual_group_coalgebra(&q, &zn_table(4));
    assert!(matches!(
        simple_subcoalgebras(&c),
        Err(Error::NonSplit { m: 1, degree: 2 })
    ));

    let z4 = CycField::new(4).unwrap();
    let c = dual_group_coalgebra(&z4, &zn_table(4));
    let simples = simple_subcoalgebras(&c).unwrap();
    assert_eq!(simples.len(), 4);
    // Each simple is spanned by a character χ_j = Σ_a ζ^{ja} f_a; check the
    // set of spans matches the DFT oracle exactly.
    for j in 0..4 {
        let chi: Vec<CycElem> = (0..4).map(|a| z4.root_of_unity((j * a) as i64)).collect();
        let hits = simples
            .iter()
            .filter(|s| s.rank == 1 && s.subspace.contains_vector(&chi))
            .count();
        assert_eq!(hits, 1, "character {j} spans exactly one simple");
    }
}

#[test]
fn dual_of_s3_decomposes_into_trivial_sign_and_a_2x2_block() {
    let q = CycField::new(1).unwrap();
    let c = dual_group_coalgebra(&q, &s3_table());
    let simples = simple_subcoalgebras(&c).unwrap();
    let dims: Vec<usize> = simples.iter().map(|s| s.subspace.dim()).collect();
    assert_eq!(dims, vec![1, 1, 4]);
    let ranks: Vec<usize> = simples.iter().map(|s| s.rank).collect();
    assert_eq!(ranks, vec![1, 1, 2]);
    // The rank-1 simples are spanned by the trivial and sign characters.
    let trivial: Vec<CycElem> = vec![q.one(); 6];
    let sign: Vec<CycElem> = (0..6)
        .map(|i| if i < 3 { q.one() } else { q.from_int(-1) })
        .collect();
    let has_trivial = simples[..2].iter().filter(|s| s.subspace.contains_vector(&trivial));
    let has_sign = simples[..2].iter().filter(|s| s.subspace.contains_vector(&sign));
    assert_eq!(has_trivial.count(), 1);
    assert_eq!(has_sign.count(), 1);
    assert!(is_multiplicative(&c, &simples[2].comatrix));
    // Direct sum: pairwise intersections are zero and dimensions add up.
    let s01 = simples[0].subspace.intersect(&simples[1].subspace).unwrap();
    let s02 = simples[0].subspace.intersect(&simples[2].subspace).unwrap();
    let s12 = simples[1].subspace.intersect(&simples[2].subspace).unwrap();
    assert!(s01.is_zero_space() && s02.is_zero_space() && s12.is_zero_space());
}

#[test]
fn mixed_direct_sum_sorts_blocks_by_rank_then_position() {
    // A coalgebra = C(2) ⊕ k ⊕ k assembled with the matrix block first;
    // the decomposition must still list the two points first (rank 1).
    let q = CycField::new(1).unwrap();
    let mut comul: Vec<(usize, usize, usize, CycElem)> = Vec::new();
    for a in 0..2usize {
        for b in 0..2usize {
            for t in 0..2usize {
                comul.push((a * 2 + b, a * 2 + t, t * 2 + b, q.one()));
            }
        }
    }
    comul.push((4, 4, 4, q.one()));
    comul.push((5, 5, 5, q.one()));
    let counit: Vec<CycElem> = vec![q.one(), q.zero(), q.zero(), q.one(), q.one(), q.one()];
    let names = ["g00", "g01", "g10", "g11", "p", "r"].map(String::from).to_vec();
    let c = Coalgebra::new("mixed", &q, 6, names, comul, counit).unwrap();
    let simples = simple_subcoalgebras(&c).unwrap();
    let ranks: Vec<usize> = simples.iter().map(|s| s.rank).collect();
    assert_eq!(ranks, vec![1, 1, 2]);
    assert!(simples[0].subspace.contains_vector(&basis_vec(&q, 6, 4)));
    assert!(simples[1].subspace.contains_vector(&basis_vec(&q, 6, 5)));
    assert_eq!(simples[2].subspace.dim(), 4);
}

#[test]
fn decomposition_rejects_a_non_cosemisimple_coalgebra() {
    // Sweedler's coalgebra has a two-dimensional radical in its dual.
    let q = CycField::new(1).unwrap();
    let comul = vec![
        (0, 0, 0, q.one()),
        (1, 1, 1, q.one()),
        (2, 2, 0, q.one()),
        (2, 1, 2, q.one()),
        (3, 3, 1, q.one()),
        (3, 0, 3, q.one()),
    ];
    let counit = vec![q.one(), q.one(), q.zero(), q.zero()];
    let names = ["1", "g", "x", "gx"].map(String::from).to_vec();
    let c = Coalgebra::new("sweedler", &q, 4, names, comul, counit).unwrap();
    assert!(matches!(simple_subcoalgebras(&c), Err(Error::Domain(_))));
}

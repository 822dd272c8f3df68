//! Shared test fixtures: group algebras, their duals, and the 4-dimensional
//! Hopf algebra generated by a group-like and a skew-primitive.

#![allow(dead_code)]

use corep::coalgebra_core::{coradical, restrict_to_subcoalgebra, Algebra, Coalgebra};
use corep::exact_arith::{CycElem, CycField};
use corep::hopf_core::HopfAlgebra;
use corep::linalg::{Matrix, Subspace};
use corep::primitives::{rotate_unit_first, to_ambient, AmbientSimple};
use corep::semisimple::simple_subcoalgebras;
use std::sync::Arc;

pub fn basis_vec(field: &Arc<CycField>, n: usize, i: usize) -> Vec<CycElem> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

/// Algebra from a list of nonzero products `e_a·e_b = Σ c·e_c`.
pub fn algebra_from_sparse(
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

pub fn zn_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

/// S₃ as permutations of {0,1,2}; element order: e, r, r², s, sr, sr².
pub fn s3_table() -> Vec<Vec<usize>> {
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

pub fn inverse_index(table: &[Vec<usize>], a: usize) -> usize {
    table[a].iter().position(|&p| p == 0).unwrap()
}

/// The group algebra kG as a Hopf algebra: Δ(g) = g⊗g, ε(g) = 1,
/// S(g) = g⁻¹.
pub fn group_hopf(field: &Arc<CycField>, table: &[Vec<usize>]) -> HopfAlgebra {
    let n = table.len();
    let mut products = Vec::new();
    for (a, row) in table.iter().enumerate() {
        for (b, &c) in row.iter().enumerate() {
            products.push((a, b, c, 1));
        }
    }
    let algebra = algebra_from_sparse(field, n, &products, &[0]);
    let comul = (0..n).map(|a| (a, a, a, field.one())).collect();
    let counit = vec![field.one(); n];
    let names = (0..n).map(|i| format!("g{i}")).collect();
    let coalgebra = Coalgebra::new("group", field, n, names, comul, counit).unwrap();
    let antipode = Matrix::from_fn(field, n, n, |r, c| {
        if r == inverse_index(table, c) {
            field.one()
        } else {
            field.zero()
        }
    });
    HopfAlgebra::new(coalgebra, algebra, antipode).unwrap()
}

/// The dual Hopf algebra (kG)*: pointwise multiplication of the dual basis,
/// Δ(f_c) = Σ_{ab=c} f_a ⊗ f_b, ε(f_c) = δ_{c,e}, S(f_c) = f_{c⁻¹}.
pub fn dual_group_hopf(field: &Arc<CycField>, table: &[Vec<usize>]) -> HopfAlgebra {
    let n = table.len();
    let products: Vec<_> = (0..n).map(|a| (a, a, a, 1)).collect();
    let all: Vec<usize> = (0..n).collect();
    let algebra = algebra_from_sparse(field, n, &products, &all);
    let mut comul = Vec::new();
    for (a, row) in table.iter().enumerate() {
        for (b, &c) in row.iter().enumerate() {
            comul.push((c, a, b, field.one()));
        }
    }
    let mut counit = vec![field.zero(); n];
    counit[0] = field.one();
    let names = (0..n).map(|i| format!("f{i}")).collect();
    let coalgebra = Coalgebra::new("dual-group", field, n, names, comul, counit).unwrap();
    let antipode = Matrix::from_fn(field, n, n, |r, c| {
        if r == inverse_index(table, c) {
            field.one()
        } else {
            field.zero()
        }
    });
    HopfAlgebra::new(coalgebra, algebra, antipode).unwrap()
}

/// The 4-dimensional Hopf algebra with g² = 1, x² = 0, xg = −gx,
/// Δ(g) = g⊗g, Δ(x) = x⊗1 + g⊗x, S(g) = g, S(x) = −gx.
/// Basis order 1, g, x, gx.
pub fn small_taft_hopf(field: &Arc<CycField>) -> HopfAlgebra {
    let products = [
        (0, 0, 0, 1),
        (0, 1, 1, 1),
        (0, 2, 2, 1),
        (0, 3, 3, 1),
        (1, 0, 1, 1),
        (1, 1, 0, 1),
        (1, 2, 3, 1),
        (1, 3, 2, 1),
        (2, 0, 2, 1),
        (2, 1, 3, -1),
        (3, 0, 3, 1),
        (3, 1, 2, -1),
    ];
    let algebra = algebra_from_sparse(field, 4, &products, &[0]);
    let comul = vec![
        (0, 0, 0, field.one()),
        (1, 1, 1, field.one()),
        (2, 2, 0, field.one()),
        (2, 1, 2, field.one()),
        (3, 3, 1, field.one()),
        (3, 0, 3, field.one()),
    ];
    let counit = vec![field.one(), field.one(), field.zero(), field.zero()];
    let names = vec!["1".into(), "g".into(), "x".into(), "gx".into()];
    let coalgebra = Coalgebra::new("taft-2", field, 4, names, comul, counit).unwrap();
    let mut antipode = Matrix::zero(field, 4, 4);
    antipode.set(0, 0, field.one());
    antipode.set(1, 1, field.one());
    antipode.set(3, 2, -&field.one());
    antipode.set(2, 3, field.one());
    HopfAlgebra::new(coalgebra, algebra, antipode).unwrap()
}

/// Coradical + ambient simples, with the unit simple rotated to the front.
pub fn unit_first_simples(h: &HopfAlgebra) -> (Subspace, Vec<AmbientSimple>) {
    let h0 = coradical(h.coalgebra()).unwrap();
    let restricted = restrict_to_subcoalgebra(h.coalgebra(), &h0).unwrap();
    let simples: Vec<AmbientSimple> = simple_subcoalgebras(&restricted)
        .unwrap()
        .iter()
        .map(|s| to_ambient(&h0, s))
        .collect();
    let simples = rotate_unit_first(simples, h.unit_vector()).unwrap();
    (h0, simples)
}

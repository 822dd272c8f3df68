//! The fusion ring of the coradical: products of simple subcoalgebras
//! decomposed back into the simple list.
//!
//! For simples `C_i, C_j ⊆ H₀` the span of `C_i·C_j` is again a subcoalgebra
//! (multiplication is a coalgebra map), and under the dual Chevalley property
//! it lies inside `H₀`, hence is a direct sum of simples of `H`. The table
//! records which simples appear: `α_{ij}^t = 1` exactly when `C_t ⊆ C_i·C_j`.
//! On the examples this crate targets the products are multiplicity-free, so
//! these support coefficients satisfy the genuine fusion-ring identities; the
//! axiom checker reports any failure instead of silently accepting one.
//!
//! Conventions: index `0` is the unit simple `K·1`; `i*` is the index with
//! `C_{i*} = S(C_i)`; `β_{ik} = Σ_t α_{ik}^t` counts the simple summands of
//! `C_i·C_k`.

use crate::exec::map_indexed;
use crate::hopf_core::{dual_chevalley_witness, HopfAlgebra};
use crate::linalg::Subspace;
use crate::primitives::{to_ambient, AmbientSimple};
use crate::semisimple::simple_subcoalgebras;
use crate::{coalgebra_core::restrict_to_subcoalgebra, Error, Result};

/// The fusion data of a coradical: ranks `r_i`, support table
/// `α[i][j][t] ∈ {0, 1}`, and the antipode involution `i ↦ i*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionRing {
    pub ranks: Vec<usize>,
    pub table: Vec<Vec<Vec<usize>>>,
    pub involution: Vec<usize>,
}

impl FusionRing {
    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    /// `α_{ij}^t`.
    pub fn coeff(&self, i: usize, j: usize, t: usize) -> usize {
        self.table[i][j][t]
    }

    /// `β_{ik} = Σ_t α_{ik}^t`, the number of simple summands of `C_i·C_k`.
    pub fn beta(&self, i: usize, k: usize) -> usize {
        self.table[i][k].iter().sum()
    }
}

/// Find the unique simple equal to `span`, or fail loudly: the decomposition
/// of a subcoalgebra of `H₀` can only produce simples of `H`.
fn match_simple(simples: &[AmbientSimple], span: &Subspace, what: &str) -> Result<usize> {
    for (t, s) in simples.iter().enumerate() {
        if s.subspace.dim() == span.dim() && s.subspace.contains(span) {
            return Ok(t);
        }
    }
    Err(Error::MatchFailure(format!(
        "{what} does not match any simple subcoalgebra of the coradical"
    )))
}

/// Compute the fusion ring of `H₀` from the ambient simple list, which must
/// have the unit simple `K·1` at index 0. Requires the dual Chevalley
/// property (products of simples must stay in the coradical).
pub fn fusion_ring(
    h: &HopfAlgebra,
    h0: &Subspace,
    simples: &[AmbientSimple],
) -> Result<FusionRing> {
    let k = simples.len();
    if k == 0 {
        return Err(Error::Domain("empty simple list".into()));
    }
    if simples[0].rank != 1 || !simples[0].subspace.contains_vector(h.unit_vector()) {
        return Err(Error::Domain(
            "fusion requires the unit simple K·1 at index 0 of the simple list".into(),
        ));
    }
    if let Some(witness) = dual_chevalley_witness(h, h0) {
        return Err(Error::DualChevalleyRequired(witness));
    }

    // One product decomposition per ordered pair, independently.
    let rows: Vec<Result<Vec<usize>>> = map_indexed(k * k, |ij| {
        let (i, j) = (ij / k, ij % k);
        let mut products = Vec::new();
        for row in &simples[i].comatrix {
            for a in row {
                for col in &simples[j].comatrix {
                    for b in col {
                        products.push(h.mul(a, b));
                    }
                }
            }
        }
        let span = Subspace::from_spanning(h.field(), h.dim(), &products);
        let restricted = restrict_to_subcoalgebra(h.coalgebra(), &span)?;
        let blocks = simple_subcoalgebras(&restricted)?;
        let mut alpha = vec![0usize; k];
        let mut covered = 0usize;
        for block in &blocks {
            let ambient = to_ambient(&span, block);
            let t = match_simple(
                simples,
                &ambient.subspace,
                &format!("a simple summand of C_{i}·C_{j}"),
            )?;
            if alpha[t] != 0 {
                return Err(Error::MatchFailure(format!(
                    "C_{i}·C_{j} matched simple {t} twice"
                )));
            }
            alpha[t] = 1;
            covered += ambient.subspace.dim();
        }
        if covered != span.dim() {
            return Err(Error::MatchFailure(format!(
                "summands of C_{i}·C_{j} cover {covered} of {} dimensions",
                span.dim()
            )));
        }
        Ok(alpha)
    });

    let mut table = vec![vec![Vec::new(); k]; k];
    for (ij, row) in rows.into_iter().enumerate() {
        table[ij / k][ij % k] = row?;
    }

    // i* is the simple equal to S(C_i); S is a coalgebra anti-map, so the
    // image span of a simple subcoalgebra is again a simple subcoalgebra.
    let mut involution = Vec::with_capacity(k);
    for (i, s) in simples.iter().enumerate() {
        let images: Vec<Vec<_>> = (0..s.subspace.dim())
            .map(|a| h.antipode_of(s.subspace.basis_vector(a)))
            .collect();
        let span = Subspace::from_spanning(h.field(), h.dim(), &images);
        involution.push(match_simple(simples, &span, &format!("S(C_{i})"))?);
    }

    Ok(FusionRing {
        ranks: simples.iter().map(|s| s.rank).collect(),
        table,
        involution,
    })
}

/// Check the fusion-ring axioms on the computed table, returning one message
/// per violation: unit row and column, the duality law `α_{ij}^0 = [j = i*]`,
/// involution consistency, the Frobenius symmetry `α_{ik}^t = α_{tk*}^i`,
/// associativity, and the rank identity `r_i r_j = Σ_t α_{ij}^t r_t`.
pub fn verify_ring_axioms(f: &FusionRing) -> Vec<String> {
    let k = f.len();
    let mut out = Vec::new();
    for j in 0..k {
        for t in 0..k {
            if f.coeff(0, j, t) != usize::from(t == j) {
                out.push(format!("unit row fails at (j, t) = ({j}, {t})"));
            }
            if f.coeff(j, 0, t) != usize::from(t == j) {
                out.push(format!("unit column fails at (j, t) = ({j}, {t})"));
            }
        }
    }
    for i in 0..k {
        if f.involution[f.involution[i]] != i {
            out.push(format!("involution is not an involution at {i}"));
        }
        if f.ranks[f.involution[i]] != f.ranks[i] {
            out.push(format!("involution changes the rank at {i}"));
        }
        for j in 0..k {
            if f.coeff(i, j, 0) != usize::from(j == f.involution[i]) {
                out.push(format!("duality law fails at (i, j) = ({i}, {j})"));
            }
        }
    }
    for i in 0..k {
        for kk in 0..k {
            for t in 0..k {
                if f.coeff(i, kk, t) != f.coeff(t, f.involution[kk], i) {
                    out.push(format!("Frobenius symmetry fails at (i, k, t) = ({i}, {kk}, {t})"));
                }
            }
        }
    }
    for i in 0..k {
        for j in 0..k {
            for l in 0..k {
                for s in 0..k {
                    let lhs: usize = (0..k).map(|t| f.coeff(i, j, t) * f.coeff(t, l, s)).sum();
                    let rhs: usize = (0..k).map(|t| f.coeff(j, l, t) * f.coeff(i, t, s)).sum();
                    if lhs != rhs {
                        out.push(format!(
                            "associativity fails at (i, j, l; s) = ({i}, {j}, {l}; {s})"
                        ));
                    }
                }
            }
        }
    }
    for i in 0..k {
        for j in 0..k {
            let total: usize = (0..k).map(|t| f.coeff(i, j, t) * f.ranks[t]).sum();
            if total != f.ranks[i] * f.ranks[j] {
                out.push(format!(
                    "rank identity fails at (i, j) = ({i}, {j}): {total} ≠ {}·{}",
                    f.ranks[i], f.ranks[j]
                ));
            }
        }
    }
    out
}

/// Perron–Frobenius consistency: for every `i` the rank vector is an
/// eigenvector of the fusion matrix `(N_i)_{jt} = α_{ij}^t` with eigenvalue
/// `r_i`, i.e. `Σ_t α_{ij}^t r_t = r_i r_j` for all `j`.
pub fn perron_check(f: &FusionRing) -> bool {
    let k = f.len();
    (0..k).all(|i| {
        (0..k).all(|j| {
            (0..k).map(|t| f.coeff(i, j, t) * f.ranks[t]).sum::<usize>() == f.ranks[i] * f.ranks[j]
        })
    })
}

/// Both sides of the regular-element identity at `k`:
/// `r_k · Σ_i r_i` and `Σ_i r_i β_{ik}`. They agree for every `k` in a
/// genuine fusion ring; the reported pair makes the agreement visible.
pub fn regular_element_sides(f: &FusionRing, k: usize) -> (usize, usize) {
    let total: usize = f.ranks.iter().sum();
    let lhs = f.ranks[k] * total;
    let rhs = (0..f.len()).map(|i| f.ranks[i] * f.beta(i, k)).sum();
    (lhs, rhs)
}

/// Indices unreachable from the unit by repeatedly fusing with arbitrary
/// simples (empty when the fusion action is transitive, as it always is for
/// the coradical of a Hopf algebra — a nonempty answer is diagnostic).
pub fn transitivity_unreached(f: &FusionRing) -> Vec<usize> {
    let k = f.len();
    let mut seen = vec![false; k];
    seen[0] = true;
    let mut frontier = vec![0usize];
    while let Some(t) = frontier.pop() {
        for i in 0..k {
            for s in 0..k {
                if f.coeff(i, t, s) > 0 && !seen[s] {
                    seen[s] = true;
                    frontier.push(s);
                }
            }
        }
    }
    (0..k).filter(|&t| !seen[t]).collect()
}

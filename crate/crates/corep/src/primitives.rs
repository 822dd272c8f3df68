//! Primitive-matrix families between simple subcoalgebras.
//!
//! For simple subcoalgebras `C, D ⊆ H₀` with basic multiplicative matrices
//! `(c_jt)` (size `r`) and `(d_uk)` (size `s`), a **primitive matrix** over
//! the pair is an `r × s` array `X = (x_jk)` of elements of `H` with
//!
//! ```text
//! Δ(x_jk) = Σ_t c_jt ⊗ x_tk  +  Σ_u x_ju ⊗ d_uk ,
//! ```
//!
//! no entry in `H₀`. For `r = s = 1` this is a classical skew-primitive.
//! The families attached to `(C, D)` live inside the wedge `W = C ∧ D`: the
//! quotient `W/(C + D)` is a `(C, D)`-bicomodule, semisimple with all simple
//! factors of dimension `rs`, so `dim W/(C+D) = N·rs` and `N` is the number
//! of independent families — the arrow multiplicity `D → C` in the link
//! quiver.
//!
//! The decomposition is eigenvalue-free: hitting the quotient with the
//! corner matrix units `e^C_11 ⇀ · ↼ e^D_11` cuts out an `N`-dimensional
//! corner `V₁₁`, and each corner vector regenerates its whole simple factor
//! through `x̄_jk = e^C_{1j} ⇀ w ↼ e^D_{k1}`. Families are then lifted from
//! the quotient to literal solutions of the comultiplication identity by a
//! linear solve with corrections in `W ∩ H₀ = C + D`.

use crate::coalgebra_core::{wedge, Coalgebra};
use crate::exact_arith::CycElem;
use crate::linalg::{solve, tensor_vec, Matrix, Subspace};
use crate::semisimple::SimpleSubcoalgebra;
use crate::{Error, Result};

/// A simple subcoalgebra of the coradical transported to ambient `H`
/// coordinates (the decomposition itself is computed on the restricted
/// coradical coalgebra, whose basis is the canonical basis of `H₀`).
#[derive(Clone)]
pub struct AmbientSimple {
    /// The simple subcoalgebra as a subspace of `H` (dimension `rank²`).
    pub subspace: Subspace,
    pub rank: usize,
    /// Basic multiplicative matrix entries as vectors in `H`.
    pub comatrix: Vec<Vec<Vec<CycElem>>>,
    /// Matrix units of the dual block, still as functionals on `H₀`
    /// (coordinates against the canonical basis of the `H₀` subspace).
    pub dual_units: Vec<Vec<Vec<CycElem>>>,
}

/// Transport a simple subcoalgebra of the restricted coradical into ambient
/// coordinates: a restricted coefficient vector `(v_a)` becomes
/// `Σ_a v_a · b_a` over the canonical basis `b_a` of `h0`.
pub fn to_ambient(h0: &Subspace, s: &SimpleSubcoalgebra) -> AmbientSimple {
    let field = h0.field();
    let n = h0.ambient_dim();
    let lift = |v: &[CycElem]| -> Vec<CycElem> {
        let mut out = vec![field.zero(); n];
        for (a, coeff) in v.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for (acc, b) in out.iter_mut().zip(h0.basis_vector(a)) {
                *acc += &(coeff * b);
            }
        }
        out
    };
    let r = s.rank;
    let comatrix: Vec<Vec<Vec<CycElem>>> = (0..r)
        .map(|a| (0..r).map(|b| lift(&s.comatrix[a][b])).collect())
        .collect();
    let mut spanning = Vec::with_capacity(r * r);
    for row in &comatrix {
        for g in row {
            spanning.push(g.clone());
        }
    }
    let subspace = Subspace::from_spanning(field, n, &spanning);
    assert_eq!(subspace.dim(), r * r, "transport preserves independence");
    AmbientSimple { subspace, rank: r, comatrix, dual_units: s.dual_units.clone() }
}

/// Rotate the simple containing the unit to the front, keeping the relative
/// order of the rest. The unit of a Hopf algebra is group-like, so exactly
/// one simple — a rank-1 one — contains it; anything else is a domain error.
pub fn rotate_unit_first(
    mut simples: Vec<AmbientSimple>,
    unit: &[CycElem],
) -> crate::Result<Vec<AmbientSimple>> {
    let pos = simples
        .iter()
        .position(|s| s.subspace.contains_vector(unit))
        .ok_or_else(|| crate::Error::Domain("no simple subcoalgebra contains the unit".into()))?;
    if simples[pos].rank != 1 {
        return Err(crate::Error::Domain(
            "the simple containing the unit is not one-dimensional".into(),
        ));
    }
    let unit_simple = simples.remove(pos);
    simples.insert(0, unit_simple);
    Ok(simples)
}

/// One primitive matrix: an `r × s` grid of vectors in `H` satisfying the
/// comultiplication identity against the pair's multiplicative matrices.
#[derive(Clone)]
pub struct PrimitiveMatrix {
    pub entries: Vec<Vec<Vec<CycElem>>>,
}

/// Everything the quiver layer needs about one ordered pair `(C, D)`.
#[derive(Clone)]
pub struct LinkAnalysis {
    /// `W = C ∧ D`.
    pub wedge: Subspace,
    /// `C + D` (equals `W ∩ H₀`).
    pub sum_cd: Subspace,
    /// `dim W/(C + D)`.
    pub quotient_dim: usize,
    /// Arrow multiplicity `N = quotient_dim / (r·s)`.
    pub arrow_count: usize,
    /// One lifted primitive matrix per arrow.
    pub families: Vec<PrimitiveMatrix>,
}

/// Extend a functional on `H₀` to a row vector on `H` through the canonical
/// projection `π(v) = v − reduce_{H₀}(v)`: entry `j` is `φ(π(e_j))`.
fn functional_row(h: &Coalgebra, h0: &Subspace, phi: &[CycElem]) -> Vec<CycElem> {
    let n = h.dim();
    let field = h.field();
    let mut row = vec![field.zero(); n];
    for (j, slot) in row.iter_mut().enumerate() {
        let mut e = vec![field.zero(); n];
        e[j] = field.one();
        let residue = h0.reduce(&e);
        let proj: Vec<CycElem> = e.iter().zip(&residue).map(|(a, b)| a - b).collect();
        let coords = h0
            .coords(&proj)
            .expect("projection lands in the coradical by construction");
        let mut acc = field.zero();
        for (p, c) in phi.iter().zip(&coords) {
            if !p.is_zero() && !c.is_zero() {
                acc += &(p * c);
            }
        }
        *slot = acc;
    }
    row
}

/// `φ ⇀ u = (φ ⊗ id)Δ(u)` for a functional given as a row on `H`.
fn hit_left(h: &Coalgebra, row: &[CycElem], u: &[CycElem]) -> Vec<CycElem> {
    let n = h.dim();
    let t = h.delta_of(u);
    let field = h.field();
    let mut out = vec![field.zero(); n];
    for (jk, v) in t.iter().enumerate() {
        if !v.is_zero() {
            let (j, k) = (jk / n, jk % n);
            if !row[j].is_zero() {
                out[k] += &(&row[j] * v);
            }
        }
    }
    out
}

/// `u ↼ φ = (id ⊗ φ)Δ(u)`.
fn hit_right(h: &Coalgebra, u: &[CycElem], row: &[CycElem]) -> Vec<CycElem> {
    let n = h.dim();
    let t = h.delta_of(u);
    let field = h.field();
    let mut out = vec![field.zero(); n];
    for (jk, v) in t.iter().enumerate() {
        if !v.is_zero() {
            let (j, k) = (jk / n, jk % n);
            if !row[k].is_zero() {
                out[j] += &(v * &row[k]);
            }
        }
    }
    out
}

/// The comultiplication defect `Δ(x_jk) − Σ_t c_jt⊗x_tk − Σ_u x_ju⊗d_uk`
/// of a candidate grid, flattened per entry.
fn family_defect(
    h: &Coalgebra,
    cmat: &[Vec<Vec<CycElem>>],
    dmat: &[Vec<Vec<CycElem>>],
    xs: &[Vec<Vec<CycElem>>],
) -> Vec<Vec<CycElem>> {
    let n = h.dim();
    let r = cmat.len();
    let s = dmat.len();
    let mut out = Vec::with_capacity(r * s);
    for j in 0..r {
        for k in 0..s {
            let mut defect = h.delta_of(&xs[j][k]);
            for (t, xrow) in xs.iter().enumerate() {
                let term = tensor_vec(&cmat[j][t], &xrow[k]);
                for (acc, x) in defect.iter_mut().zip(&term) {
                    *acc = &*acc - x;
                }
            }
            for (u, xcol) in xs[j].iter().enumerate() {
                let term = tensor_vec(xcol, &dmat[u][k]);
                for (acc, x) in defect.iter_mut().zip(&term) {
                    *acc = &*acc - x;
                }
            }
            debug_assert_eq!(defect.len(), n * n);
            out.push(defect);
        }
    }
    out
}

/// Analyze the ordered pair `(C, D)`: wedge, quotient dimension, arrow
/// multiplicity, and one lifted primitive matrix per arrow.
///
/// `h0` must be the coradical of `h`, and `cs`, `ds` simple subcoalgebras of
/// it in ambient coordinates. Internal-error variants report arithmetic
/// violations of the structure theory (divisibility, corner dimension, lift
/// solvability) — none are reachable through valid inputs.
pub fn analyze_link(
    h: &Coalgebra,
    h0: &Subspace,
    cs: &AmbientSimple,
    ds: &AmbientSimple,
) -> Result<LinkAnalysis> {
    let n = h.dim();
    let field = h.field();
    let (r, s) = (cs.rank, ds.rank);
    let w = wedge(h, &cs.subspace, &ds.subspace);
    let sum_cd = cs.subspace.sum(&ds.subspace)?;
    let w_cap_h0 = w.intersect(h0)?;
    assert_eq!(
        w_cap_h0, sum_cd,
        "the wedge of distinct simples meets the coradical exactly in their sum"
    );
    let quotient_dim = w.dim() - sum_cd.dim();
    if quotient_dim % (r * s) != 0 {
        return Err(Error::DivisibilityViolation { quotient_dim, rs: r * s });
    }
    let arrow_count = quotient_dim / (r * s);
    if arrow_count == 0 {
        return Ok(LinkAnalysis {
            wedge: w,
            sum_cd,
            quotient_dim,
            arrow_count,
            families: Vec::new(),
        });
    }

    // Quotient machinery: representatives of W/(C+D) and the coordinate map.
    let reps = sum_cd.complement_in(&w)?;
    let full_cols = sum_cd.dim() + reps.len();
    let basis_mat = Matrix::from_fn(field, n, full_cols, |row, col| {
        if col < sum_cd.dim() {
            sum_cd.basis_vector(col)[row].clone()
        } else {
            reps[col - sum_cd.dim()][row].clone()
        }
    });
    let quot_coords = |v: &[CycElem]| -> Vec<CycElem> {
        let sol = solve(&basis_mat, v).expect("vector lies in the wedge");
        sol[sum_cd.dim()..].to_vec()
    };

    // Functional rows for all matrix units of both blocks.
    let c_rows: Vec<Vec<Vec<CycElem>>> = (0..r)
        .map(|j| {
            (0..r)
                .map(|k| functional_row(h, h0, &cs.dual_units[j][k]))
                .collect()
        })
        .collect();
    let d_rows: Vec<Vec<Vec<CycElem>>> = (0..s)
        .map(|j| {
            (0..s)
                .map(|k| functional_row(h, h0, &ds.dual_units[j][k]))
                .collect()
        })
        .collect();

    // Corner V₁₁ = e^C_11 ⇀ (W/(C+D)) ↼ e^D_11, in quotient coordinates.
    let corner_classes: Vec<Vec<CycElem>> = (0..w.dim())
        .map(|i| {
            let hitv = hit_right(h, &hit_left(h, &c_rows[0][0], w.basis_vector(i)), &d_rows[0][0]);
            quot_coords(&hitv)
        })
        .collect();
    let v11 = Subspace::from_spanning(field, quotient_dim, &corner_classes);
    if v11.dim() != arrow_count {
        return Err(Error::MatchFailure(format!(
            "corner dimension {} disagrees with arrow multiplicity {arrow_count}",
            v11.dim()
        )));
    }

    let mut families = Vec::with_capacity(arrow_count);
    for i in 0..arrow_count {
        // Lift the corner class back to a vector of W, regenerate the full
        // grid of quotient representatives, then solve for corrections in
        // C + D making the comultiplication identity exact.
        let cls = v11.basis_vector(i);
        let mut w_vec = vec![field.zero(); n];
        for (l, coeff) in cls.iter().enumerate() {
            if !coeff.is_zero() {
                for (acc, b) in w_vec.iter_mut().zip(&reps[l]) {
                    *acc += &(coeff * b);
                }
            }
        }
        let rep_grid: Vec<Vec<Vec<CycElem>>> = (0..r)
            .map(|j| {
                (0..s)
                    .map(|k| hit_left(h, &c_rows[0][j], &hit_right(h, &w_vec, &d_rows[k][0])))
                    .collect()
            })
            .collect();

        // Unknowns: corrections δ_jk ∈ C + D, coordinates against the
        // canonical basis of sum_cd; column layout ((j·s + k)·m + l).
        let m = sum_cd.dim();
        let cols = r * s * m;
        let rows = r * s * n * n;
        let defects = family_defect(h, &cs.comatrix, &ds.comatrix, &rep_grid);
        let mut rhs = Vec::with_capacity(rows);
        for d in &defects {
            for x in d {
                rhs.push(-x);
            }
        }
        // Effect of δ_{t,k'} = b_l on equation block (j, k):
        //   +Δ(b_l)                    if (t, k') == (j, k)
        //   −c_jt ⊗ b_l                if k' == k
        //   −b_l ⊗ d_{k',k}            if t == j
        let mut sys = Matrix::zero(field, rows, cols);
        for t in 0..r {
            for kp in 0..s {
                for l in 0..m {
                    let col = (t * s + kp) * m + l;
                    let b = sum_cd.basis_vector(l);
                    let db = h.delta_of(b);
                    {
                        let block = (t * s + kp) * n * n;
                        for (idx, v) in db.iter().enumerate() {
                            if !v.is_zero() {
                                let cur = sys.at(block + idx, col) + v;
                                sys.set(block + idx, col, cur);
                            }
                        }
                    }
                    for j in 0..r {
                        let block = (j * s + kp) * n * n;
                        let term = tensor_vec(&cs.comatrix[j][t], b);
                        for (idx, v) in term.iter().enumerate() {
                            if !v.is_zero() {
                                let cur = sys.at(block + idx, col) - v;
                                sys.set(block + idx, col, cur);
                            }
                        }
                    }
                    for k in 0..s {
                        let block = (t * s + k) * n * n;
                        let term = tensor_vec(b, &ds.comatrix[kp][k]);
                        for (idx, v) in term.iter().enumerate() {
                            if !v.is_zero() {
                                let cur = sys.at(block + idx, col) - v;
                                sys.set(block + idx, col, cur);
                            }
                        }
                    }
                }
            }
        }
        let correction = solve(&sys, &rhs).ok_or_else(|| {
            Error::LiftFailure(format!(
                "no correction in C+D makes family {i} of a ({r}×{s}) pair primitive"
            ))
        })?;
        let entries: Vec<Vec<Vec<CycElem>>> = (0..r)
            .map(|j| {
                (0..s)
                    .map(|k| {
                        let mut x = rep_grid[j][k].clone();
                        for l in 0..m {
                            let coeff = &correction[(j * s + k) * m + l];
                            if !coeff.is_zero() {
                                for (acc, b) in x.iter_mut().zip(sum_cd.basis_vector(l)) {
                                    *acc += &(coeff * b);
                                }
                            }
                        }
                        x
                    })
                    .collect()
            })
            .collect();
        // The identity must now hold exactly, and no entry may fall into H₀.
        let check = family_defect(h, &cs.comatrix, &ds.comatrix, &entries);
        assert!(
            check.iter().all(|d| d.iter().all(CycElem::is_zero)),
            "lifted family satisfies the primitive-matrix identity"
        );
        for row in &entries {
            for x in row {
                assert!(!h0.contains_vector(x), "primitive-matrix entries avoid the coradical");
            }
        }
        families.push(PrimitiveMatrix { entries });
    }

    // Families together with C + D span the whole wedge.
    let mut spanning: Vec<Vec<CycElem>> = Vec::new();
    for i in 0..sum_cd.dim() {
        spanning.push(sum_cd.basis_vector(i).to_vec());
    }
    for f in &families {
        for row in &f.entries {
            for x in row {
                spanning.push(x.clone());
            }
        }
    }
    let span = Subspace::from_spanning(field, n, &spanning);
    assert_eq!(span, w, "C + D plus all families span the wedge exactly");

    Ok(LinkAnalysis { wedge: w, sum_cd, quotient_dim, arrow_count, families })
}

/// Are `C` and `D` directly linked: `C + D ⊊ C∧D + D∧C`?
pub fn directly_linked(h: &Coalgebra, cs: &AmbientSimple, ds: &AmbientSimple) -> Result<bool> {
    let wcd = wedge(h, &cs.subspace, &ds.subspace);
    let wdc = wedge(h, &ds.subspace, &cs.subspace);
    let both = wcd.sum(&wdc)?;
    let sum_cd = cs.subspace.sum(&ds.subspace)?;
    Ok(both.dim() > sum_cd.dim())
}

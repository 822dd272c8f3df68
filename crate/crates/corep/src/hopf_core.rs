//! The Hopf-algebra layer: bundled structure constants for `(H, m, u, Δ, ε, S)`,
//! full axiom validation, group-likes, skew-primitive spaces, and the dual
//! Chevalley property (`H₀` a subalgebra stable under the antipode).
//!
//! Validation reports every violated axiom cell rather than stopping at the
//! first, so a perturbed input names all the places it breaks.

use crate::coalgebra_core::{
    coradical, dual_algebra, restrict_to_subcoalgebra, validate_coalgebra, Algebra, Coalgebra,
};
use crate::exact_arith::{CycElem, CycField};
use crate::exec::map_indexed;
use crate::linalg::{tensor_vec, Matrix, Subspace};
use crate::semisimple::{jacobson_radical, simple_subcoalgebras};
use crate::{Error, Result};
use std::collections::BTreeMap;

/// A finite-dimensional Hopf algebra over `Q(ζ_m)` in structure constants.
/// Construction checks shape compatibility only; axioms live in
/// [`validate_hopf`].
#[derive(Clone)]
pub struct HopfAlgebra {
    coalgebra: Coalgebra,
    algebra: Algebra,
    /// Antipode as an `n × n` matrix acting on coefficient columns.
    antipode: Matrix,
}

impl HopfAlgebra {
    pub fn new(coalgebra: Coalgebra, algebra: Algebra, antipode: Matrix) -> Result<HopfAlgebra> {
        let n = coalgebra.dim();
        if algebra.dim() != n {
            return Err(Error::Domain(format!(
                "algebra dimension {} differs from coalgebra dimension {n}",
                algebra.dim()
            )));
        }
        if algebra.field() != coalgebra.field() {
            return Err(Error::Domain("algebra and coalgebra fields differ".into()));
        }
        if antipode.rows() != n || antipode.cols() != n {
            return Err(Error::Domain(format!(
                "antipode is {}×{}, expected {n}×{n}",
                antipode.rows(),
                antipode.cols()
            )));
        }
        Ok(HopfAlgebra { coalgebra, algebra, antipode })
    }

    pub fn name(&self) -> &str {
        self.coalgebra.name()
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.coalgebra
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn field(&self) -> &std::sync::Arc<crate::exact_arith::CycField> {
        self.coalgebra.field()
    }

    pub fn dim(&self) -> usize {
        self.coalgebra.dim()
    }

    pub fn unit_vector(&self) -> &[CycElem] {
        self.algebra.unit()
    }

    pub fn mul(&self, x: &[CycElem], y: &[CycElem]) -> Vec<CycElem> {
        self.algebra.mul(x, y)
    }

    pub fn antipode_of(&self, v: &[CycElem]) -> Vec<CycElem> {
        self.antipode.apply(v)
    }
}

/// Validation outcome for the full Hopf axiom set.
#[derive(Debug, Clone)]
pub struct HopfValidationReport {
    pub violations: Vec<String>,
}

impl HopfValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check every Hopf axiom cell by cell: associativity, two-sided unit,
/// coassociativity and counit laws, `Δ` and `ε` as algebra maps,
/// `Δ(1) = 1⊗1`, both antipode identities, and antipode bijectivity.
pub fn validate_hopf(h: &HopfAlgebra) -> HopfValidationReport {
    let n = h.dim();
    let field = h.field();
    let mut violations = validate_coalgebra(h.coalgebra()).violations;
    let alg = h.algebra();

    if !alg.is_associative() {
        violations.push("multiplication is not associative".into());
    }
    if !alg.unit_is_two_sided() {
        violations.push("the stored unit is not a two-sided identity".into());
    }

    // Δ(1) = 1 ⊗ 1 and ε(1) = 1.
    let delta_one = h.coalgebra().delta_of(alg.unit());
    if delta_one != tensor_vec(alg.unit(), alg.unit()) {
        violations.push("Δ(1) ≠ 1⊗1".into());
    }
    if !h.coalgebra().counit_of(alg.unit()).is_one() {
        violations.push("ε(1) ≠ 1".into());
    }

    // Group Δ sparsely by source for the bialgebra and antipode checks.
    let mut by_source: Vec<Vec<(usize, usize, CycElem)>> = vec![Vec::new(); n];
    for &(i, j, k, ref mu) in h.coalgebra().comul() {
        by_source[i].push((j, k, mu.clone()));
    }

    // Sparse basis products e_a·e_b, computed once; the bialgebra check is
    // quadratic in comultiplication terms, so dense products would dominate.
    let sparse_products: Vec<Vec<(usize, CycElem)>> = (0..n * n)
        .map(|ab| {
            let (a, b) = (ab / n, ab % n);
            (0..n)
                .filter_map(|c| {
                    let v = alg.sc(a, b, c);
                    if v.is_zero() {
                        None
                    } else {
                        Some((c, v.clone()))
                    }
                })
                .collect()
        })
        .collect();

    // Bialgebra: Δ(e_a e_b) = Δ(e_a)·Δ(e_b) and ε(e_a e_b) = ε(e_a)ε(e_b),
    // pairwise over the basis (data-parallel: the pairs are independent).
    let pair_violations: Vec<Vec<String>> = map_indexed(n * n, |ab| {
        let (a, b) = (ab / n, ab % n);
        let mut local = Vec::new();
        // diff = Δ(e_a e_b) − Δ(e_a)·Δ(e_b), accumulated sparsely.
        let mut diff: BTreeMap<(usize, usize), CycElem> = BTreeMap::new();
        for &(c, ref pc) in &sparse_products[a * n + b] {
            for &(j, k, ref mu) in &by_source[c] {
                *diff.entry((j, k)).or_insert_with(|| field.zero()) += &(pc * mu);
            }
        }
        for &(j, k, ref mu) in &by_source[a] {
            for &(jp, kp, ref nu) in &by_source[b] {
                let coeff = mu * nu;
                for &(c, ref lc) in &sparse_products[j * n + jp] {
                    let clc = &coeff * lc;
                    for &(d, ref rd) in &sparse_products[k * n + kp] {
                        *diff.entry((c, d)).or_insert_with(|| field.zero()) -= &(&clc * rd);
                    }
                }
            }
        }
        for ((c, d), v) in diff {
            if !v.is_zero() {
                local.push(format!(
                    "Δ is not multiplicative on e_{a}·e_{b} at tensor cell ({c}, {d})"
                ));
            }
        }
        let mut eps_prod = field.zero();
        for &(c, ref pc) in &sparse_products[a * n + b] {
            eps_prod += &(pc * &h.coalgebra().counit()[c]);
        }
        let eps_ab = &h.coalgebra().counit()[a] * &h.coalgebra().counit()[b];
        if eps_prod != eps_ab {
            local.push(format!("ε is not multiplicative on e_{a}·e_{b}"));
        }
        local
    });
    for mut v in pair_violations {
        violations.append(&mut v);
    }

    // Antipode: Σ S(x₁)x₂ = ε(x)·1 = Σ x₁S(x₂) on the basis.
    for a in 0..n {
        let mut left = vec![field.zero(); n];
        let mut right = vec![field.zero(); n];
        for &(j, k, ref mu) in &by_source[a] {
            let sj: Vec<CycElem> = (0..n).map(|r| h.antipode().at(r, j).clone()).collect();
            let sk: Vec<CycElem> = (0..n).map(|r| h.antipode().at(r, k).clone()).collect();
            let ek = {
                let mut v = vec![field.zero(); n];
                v[k] = field.one();
                v
            };
            let ej = {
                let mut v = vec![field.zero(); n];
                v[j] = field.one();
                v
            };
            for (c, x) in alg.mul(&sj, &ek).iter().enumerate() {
                left[c] += &(mu * x);
            }
            for (c, x) in alg.mul(&ej, &sk).iter().enumerate() {
                right[c] += &(mu * x);
            }
        }
        let target: Vec<CycElem> = alg
            .unit()
            .iter()
            .map(|u| &h.coalgebra().counit()[a] * u)
            .collect();
        if left != target {
            violations.push(format!("left antipode identity fails on basis {a}"));
        }
        if right != target {
            violations.push(format!("right antipode identity fails on basis {a}"));
        }
    }

    if h.antipode().rank() != n {
        violations.push("antipode is not bijective".into());
    }

    HopfValidationReport { violations }
}

/// The group-like elements of `H`, exactly: the basic multiplicative
/// matrices of the rank-1 simple subcoalgebras of the coradical, normalized
/// by `ε(g) = 1`, in the canonical block order.
pub fn group_likes(h: &HopfAlgebra) -> Result<Vec<Vec<CycElem>>> {
    let h0 = coradical(h.coalgebra())?;
    let restricted = restrict_to_subcoalgebra(h.coalgebra(), &h0)?;
    let simples = simple_subcoalgebras(&restricted)?;
    let mut out = Vec::new();
    for s in simples {
        if s.rank != 1 {
            continue;
        }
        let ambient = crate::primitives::to_ambient(&h0, &s);
        let g = ambient.comatrix[0][0].clone();
        debug_assert_eq!(
            h.coalgebra().delta_of(&g),
            tensor_vec(&g, &g),
            "rank-1 comatrix entries are group-like"
        );
        out.push(g);
    }
    Ok(out)
}

/// The space of `(g, h)`-skew-primitives `{x : Δx = g⊗x + x⊗h}`, together
/// with its trivial part `K·(g − h)`.
pub struct SkewPrimitives {
    /// All solutions, the trivial line included.
    pub space: Subspace,
    /// `span{g − h}` (zero-dimensional when `g = h`... never: `g ≠ h` gives
    /// dimension 1, `g = h` gives 0 since the difference vanishes).
    pub trivial: Subspace,
}

impl SkewPrimitives {
    /// Dimension of the genuinely new part.
    pub fn nontrivial_dim(&self) -> usize {
        self.space.dim() - self.trivial.dim()
    }
}

/// Solve the linear condition `Δx = g⊗x + x⊗h` for fixed group-likes.
pub fn skew_primitives(hopf: &HopfAlgebra, g: &[CycElem], h: &[CycElem]) -> SkewPrimitives {
    let n = hopf.dim();
    let field = hopf.field();
    // Column i: Δ(e_i) − g⊗e_i − e_i⊗h, an n²-vector; kernel = solutions.
    let delta = hopf.coalgebra().delta_matrix();
    let mut mat = Matrix::zero(field, n * n, n);
    for i in 0..n {
        let mut col: Vec<CycElem> = (0..n * n).map(|r| delta.at(r, i).clone()).collect();
        for (j, gj) in g.iter().enumerate() {
            if !gj.is_zero() {
                col[j * n + i] = &col[j * n + i] - gj;
            }
        }
        for (k, hk) in h.iter().enumerate() {
            if !hk.is_zero() {
                col[i * n + k] = &col[i * n + k] - hk;
            }
        }
        for (r, v) in col.into_iter().enumerate() {
            if !v.is_zero() {
                mat.set(r, i, v);
            }
        }
    }
    let space = mat.kernel();
    let diff: Vec<CycElem> = g.iter().zip(h).map(|(a, b)| a - b).collect();
    let trivial = Subspace::from_spanning(field, n, &[diff]);
    debug_assert!(trivial.dim() == 0 || space.contains(&trivial));
    SkewPrimitives { space, trivial }
}

/// Dual Chevalley property: is the coradical a Hopf subalgebra?
/// Returns `None` when it holds, otherwise a description of one violation.
pub fn dual_chevalley_witness(h: &HopfAlgebra, h0: &Subspace) -> Option<String> {
    if !h0.contains_vector(h.unit_vector()) {
        return Some("the unit does not lie in the coradical".into());
    }
    for i in 0..h0.dim() {
        for j in 0..h0.dim() {
            let p = h.mul(h0.basis_vector(i), h0.basis_vector(j));
            if !h0.contains_vector(&p) {
                return Some(format!(
                    "H₀ is not closed under multiplication: basis product ({i}, {j}) escapes"
                ));
            }
        }
    }
    for i in 0..h0.dim() {
        let s = h.antipode_of(h0.basis_vector(i));
        if !h0.contains_vector(&s) {
            return Some(format!("S(H₀) ⊄ H₀: antipode image of basis vector {i} escapes"));
        }
    }
    None
}

/// Convenience wrapper: compute the coradical and check the dual Chevalley
/// property in one call.
pub fn has_dual_chevalley(h: &HopfAlgebra) -> Result<bool> {
    let h0 = crate::coalgebra_core::coradical(h.coalgebra())?;
    Ok(dual_chevalley_witness(h, &h0).is_none())
}

/// The restriction of `H`'s multiplication to the coradical, as an algebra
/// on the canonical basis of `h0` — requires the dual Chevalley property.
pub fn coradical_algebra(h: &HopfAlgebra, h0: &Subspace) -> Result<Algebra> {
    if let Some(w) = dual_chevalley_witness(h, h0) {
        return Err(Error::DualChevalleyRequired(w));
    }
    let d = h0.dim();
    let field = h.field();
    let mut table = vec![field.zero(); d * d * d];
    for a in 0..d {
        for b in 0..d {
            let p = h.mul(h0.basis_vector(a), h0.basis_vector(b));
            let coords = h0.coords(&p).expect("closed under multiplication");
            for (c, coeff) in coords.into_iter().enumerate() {
                table[(a * d + b) * d + c] = coeff;
            }
        }
    }
    let unit = h0.coords(h.unit_vector()).expect("unit lies in the coradical");
    Ok(Algebra::new(field, d, table, unit))
}

/// Convenience: is `H` cosemisimple (coradical everything)?
pub fn is_cosemisimple_hopf(h: &HopfAlgebra) -> Result<bool> {
    Ok(jacobson_radical(&dual_algebra(h.coalgebra())).dim() == 0)
}

/// The right adjoint action `ad_r(act)(a) = Σ S(act₍₁₎) · a · act₍₂₎`.
pub fn right_adjoint(h: &HopfAlgebra, act: &[CycElem], a: &[CycElem]) -> Vec<CycElem> {
    let n = h.dim();
    let field = h.field();
    let delta = h.coalgebra().delta_of(act);
    let mut out = vec![field.zero(); n];
    for i in 0..n {
        for j in 0..n {
            let c = &delta[i * n + j];
            if c.is_zero() {
                continue;
            }
            let mut left = vec![field.zero(); n];
            left[i] = c.clone();
            let term = h.mul(&h.mul(&h.antipode_of(&left), a), &basis_unit(field, n, j));
            for (o, t) in out.iter_mut().zip(term) {
                *o += &t;
            }
        }
    }
    out
}

fn basis_unit(field: &std::sync::Arc<CycField>, n: usize, j: usize) -> Vec<CycElem> {
    let mut v = vec![field.zero(); n];
    v[j] = field.one();
    v
}

/// Is the subspace stable under the right adjoint action (the defining
/// condition for a normal Hopf subalgebra)? Returns `None` when stable,
/// otherwise a description of the first escaping pair found.
pub fn normality_witness(h: &HopfAlgebra, sub: &Subspace) -> Option<String> {
    let n = h.dim();
    let field = h.field();
    for act_idx in 0..n {
        let act = basis_unit(field, n, act_idx);
        for row in 0..sub.dim() {
            let image = right_adjoint(h, &act, sub.basis_vector(row));
            if !sub.contains_vector(&image) {
                let c = h.coalgebra();
                return Some(format!(
                    "ad_r({})({}) = {} escapes the subspace",
                    c.basis_names()[act_idx],
                    c.describe_vector(sub.basis_vector(row)),
                    c.describe_vector(&image)
                ));
            }
        }
    }
    None
}

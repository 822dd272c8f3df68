//! The coalgebra data model: validation, dual algebras, wedges of subspaces,
//! the coradical, and the coradical filtration.
//!
//! A [`Coalgebra`] is a finite-dimensional `(H, Δ, ε)` given by structure
//! constants: `Δ(e_i) = Σ_{j,k} μ[i][j][k] e_j ⊗ e_k`, stored sparsely as
//! `(i, j, k, coeff)` quadruples, and `ε` as a dense vector. Tensors `H ⊗ H`
//! are flattened by `(j, k) ↦ j·n + k`, the same convention
//! [`crate::linalg::Matrix::kron`] uses, so `Δ` is the `n² × n` matrix with
//! `Δ[(j·n+k)][i] = μ[i][j][k]`.
//!
//! The coradical is computed through the dual: `H₀ = (Rad H*)^⊥`, with the
//! radical supplied by the trace form in [`crate::semisimple`]. Wedges
//! `V ∧ W = Δ⁻¹(V⊗H + H⊗W)` are single preimage computations; the constraint
//! matrix is assembled sparsely from the identity
//! `(V⊗H + H⊗W)⁰ = V⁰ ⊗ W⁰`, which keeps the working dimension at
//! `(n−dim V)·(n−dim W) × n` instead of `n² × n²`.

use crate::exact_arith::{CycElem, CycField};
use crate::linalg::{preimage, solve_many, Matrix, Subspace};
use crate::semisimple;
use crate::{Error, Result};
use std::sync::Arc;

/// A finite-dimensional coalgebra over `Q(ζ_m)` in structure constants.
#[derive(Clone)]
pub struct Coalgebra {
    name: String,
    field: Arc<CycField>,
    dim: usize,
    basis_names: Vec<String>,
    /// Sparse comultiplication: `(i, j, k, μ)` meaning `Δ(e_i) ∋ μ·e_j⊗e_k`,
    /// sorted by `(i, j, k)`, no zero coefficients, no duplicate keys.
    comul: Vec<(usize, usize, usize, CycElem)>,
    counit: Vec<CycElem>,
}

impl Coalgebra {
    /// Assemble a coalgebra; canonicalizes the sparse comultiplication
    /// (sorts, merges duplicates, drops zeros) and checks index bounds.
    /// Axioms are *not* checked here — see [`validate_coalgebra`].
    pub fn new(
        name: impl Into<String>,
        field: &Arc<CycField>,
        dim: usize,
        basis_names: Vec<String>,
        comul: Vec<(usize, usize, usize, CycElem)>,
        counit: Vec<CycElem>,
    ) -> Result<Coalgebra> {
        if basis_names.len() != dim {
            return Err(Error::Domain(format!(
                "{} basis names for dimension {dim}",
                basis_names.len()
            )));
        }
        if counit.len() != dim {
            return Err(Error::Domain(format!(
                "counit vector has length {}, expected {dim}",
                counit.len()
            )));
        }
        let mut sorted = comul;
        for &(i, j, k, _) in &sorted {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::Domain(format!(
                    "comultiplication index ({i},{j},{k}) out of range for dimension {dim}"
                )));
            }
        }
        sorted.sort_by_key(|&(i, j, k, _)| (i, j, k));
        let mut merged: Vec<(usize, usize, usize, CycElem)> = Vec::with_capacity(sorted.len());
        for (i, j, k, c) in sorted {
            match merged.last_mut() {
                Some(last) if (last.0, last.1, last.2) == (i, j, k) => last.3 += &c,
                _ => merged.push((i, j, k, c)),
            }
        }
        merged.retain(|(_, _, _, c)| !c.is_zero());
        Ok(Coalgebra {
            name: name.into(),
            field: Arc::clone(field),
            dim,
            basis_names,
            comul: merged,
            counit,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn comul(&self) -> &[(usize, usize, usize, CycElem)] {
        &self.comul
    }

    pub fn counit(&self) -> &[CycElem] {
        &self.counit
    }

    /// `ε` applied to a coefficient vector.
    pub fn counit_of(&self, v: &[CycElem]) -> CycElem {
        let mut acc = self.field.zero();
        for (c, e) in v.iter().zip(&self.counit) {
            if !c.is_zero() && !e.is_zero() {
                acc += &(c * e);
            }
        }
        acc
    }

    /// `Δ` applied to a coefficient vector, flattened to length `n²`.
    pub fn delta_of(&self, v: &[CycElem]) -> Vec<CycElem> {
        let n = self.dim;
        let mut out = vec![self.field.zero(); n * n];
        for &(i, j, k, ref mu) in &self.comul {
            if !v[i].is_zero() {
                out[j * n + k] += &(mu * &v[i]);
            }
        }
        out
    }

    /// The `n² × n` matrix of `Δ` (columns indexed by the domain basis).
    pub fn delta_matrix(&self) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zero(&self.field, n * n, n);
        for &(i, j, k, ref mu) in &self.comul {
            m.set(j * n + k, i, mu.clone());
        }
        m
    }

    /// The full space as a subspace handle.
    pub fn full_space(&self) -> Subspace {
        Subspace::full(&self.field, self.dim)
    }

    /// Pretty-print a coefficient vector in the coalgebra's basis names.
    pub fn describe_vector(&self, v: &[CycElem]) -> String {
        let mut parts = Vec::new();
        for (c, name) in v.iter().zip(&self.basis_names) {
            if c.is_zero() {
                continue;
            }
            if c.is_one() {
                parts.push(name.clone());
            } else {
                parts.push(format!("({})*{}", c, name));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

/// Result of [`validate_coalgebra`]: the list of violated axiom cells
/// (empty = valid).
#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check coassociativity and the counit laws cell by cell; every violated
/// cell is reported (the report carries failures, this function never errs).
pub fn validate_coalgebra(c: &Coalgebra) -> ValidationReport {
    let n = c.dim();
    let field = c.field();
    let mut violations = Vec::new();

    // Group the sparse Δ by source index for repeated expansion.
    let mut by_source: Vec<Vec<(usize, usize, CycElem)>> = vec![Vec::new(); n];
    for &(i, j, k, ref mu) in c.comul() {
        by_source[i].push((j, k, mu.clone()));
    }

    for i in 0..n {
        // (Δ⊗id)Δ(e_i) − (id⊗Δ)Δ(e_i), accumulated sparsely over (a,b,c).
        let mut acc: std::collections::BTreeMap<(usize, usize, usize), CycElem> =
            std::collections::BTreeMap::new();
        for &(j, k, ref mu) in &by_source[i] {
            for &(a, b, ref nu) in &by_source[j] {
                *acc.entry((a, b, k)).or_insert_with(|| field.zero()) += &(mu * nu);
            }
            for &(b, cc, ref nu) in &by_source[k] {
                let term = -&(mu * nu);
                *acc.entry((j, b, cc)).or_insert_with(|| field.zero()) += &term;
            }
        }
        for ((a, b, cc), v) in acc {
            if !v.is_zero() {
                violations.push(format!(
                    "coassociativity fails on basis {i} at cell ({a},{b},{cc}): residue {v}"
                ));
            }
        }

        // Counit laws: (ε⊗id)Δ(e_i) = e_i = (id⊗ε)Δ(e_i).
        let mut left = vec![field.zero(); n];
        let mut right = vec![field.zero(); n];
        for &(j, k, ref mu) in &by_source[i] {
            left[k] += &(mu * &c.counit()[j]);
            right[j] += &(mu * &c.counit()[k]);
        }
        for t in 0..n {
            let expected = if t == i { field.one() } else { field.zero() };
            if left[t] != expected {
                violations.push(format!(
                    "left counit law fails on basis {i} at component {t}: got {}, expected {}",
                    left[t], expected
                ));
            }
            if right[t] != expected {
                violations.push(format!(
                    "right counit law fails on basis {i} at component {t}: got {}, expected {}",
                    right[t], expected
                ));
            }
        }
    }
    ValidationReport { violations }
}

/// A finite-dimensional associative unital algebra in structure constants:
/// `e_a · e_b = Σ_c table[a][b][c] e_c`. Produced by [`dual_algebra`] and by
/// the Hopf layer's multiplication tables.
#[derive(Clone)]
pub struct Algebra {
    field: Arc<CycField>,
    dim: usize,
    /// Dense `n³` table, index `(a·n + b)·n + c`.
    table: Vec<CycElem>,
    unit: Vec<CycElem>,
}

impl Algebra {
    pub fn new(field: &Arc<CycField>, dim: usize, table: Vec<CycElem>, unit: Vec<CycElem>) -> Algebra {
        assert_eq!(table.len(), dim * dim * dim, "structure-constant table size");
        assert_eq!(unit.len(), dim, "unit vector length");
        Algebra { field: Arc::clone(field), dim, table, unit }
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Structure constant: coefficient of `e_c` in `e_a·e_b`.
    pub fn sc(&self, a: usize, b: usize, c: usize) -> &CycElem {
        &self.table[(a * self.dim + b) * self.dim + c]
    }

    pub fn unit(&self) -> &[CycElem] {
        &self.unit
    }

    /// Product of two coefficient vectors.
    pub fn mul(&self, x: &[CycElem], y: &[CycElem]) -> Vec<CycElem> {
        let n = self.dim;
        let mut out = vec![self.field.zero(); n];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let xy = xa * yb;
                for c in 0..n {
                    let t = self.sc(a, b, c);
                    if !t.is_zero() {
                        out[c] += &(&xy * t);
                    }
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by `x` on the algebra itself.
    pub fn left_mult_matrix(&self, x: &[CycElem]) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zero(&self.field, n, n);
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for b in 0..n {
                for c in 0..n {
                    let t = self.sc(a, b, c);
                    if !t.is_zero() {
                        let v = &(xa * t) + m.at(c, b);
                        m.set(c, b, v);
                    }
                }
            }
        }
        m
    }

    /// Full associativity check `(e_a e_b) e_c = e_a (e_b e_c)`; O(n⁵), so
    /// meant for tests and small-dimension debug assertions.
    pub fn is_associative(&self) -> bool {
        let n = self.dim;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let mut lhs = vec![self.field.zero(); n];
                    let mut rhs = vec![self.field.zero(); n];
                    for d in 0..n {
                        let ab_d = self.sc(a, b, d);
                        if !ab_d.is_zero() {
                            for e in 0..n {
                                let t = self.sc(d, c, e);
                                if !t.is_zero() {
                                    lhs[e] += &(ab_d * t);
                                }
                            }
                        }
                        let bc_d = self.sc(b, c, d);
                        if !bc_d.is_zero() {
                            for e in 0..n {
                                let t = self.sc(a, d, e);
                                if !t.is_zero() {
                                    rhs[e] += &(bc_d * t);
                                }
                            }
                        }
                    }
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Check that the stored unit is a two-sided unit.
    pub fn unit_is_two_sided(&self) -> bool {
        let n = self.dim;
        for b in 0..n {
            let mut basis = vec![self.field.zero(); n];
            basis[b] = self.field.one();
            if self.mul(&self.unit, &basis) != basis || self.mul(&basis, &self.unit) != basis {
                return false;
            }
        }
        true
    }
}

/// The dual algebra `H*` on the dual basis: `(f·g)(x) = (f⊗g)(Δx)`, unit `ε`.
/// Associativity follows from coassociativity (debug-asserted at small
/// dimensions).
pub fn dual_algebra(c: &Coalgebra) -> Algebra {
    let n = c.dim();
    let field = c.field();
    let mut table = vec![field.zero(); n * n * n];
    // f_a·f_b = Σ_i μ[i][a][b] f_i.
    for &(i, a, b, ref mu) in c.comul() {
        table[(a * n + b) * n + i] = mu.clone();
    }
    let alg = Algebra::new(field, n, table, c.counit().to_vec());
    debug_assert!(n > 12 || alg.is_associative(), "dual of a coassociative coalgebra is associative");
    alg
}

/// The wedge `V ∧ W = Δ⁻¹(V⊗H + H⊗W)`.
///
/// Computed as one preimage: the annihilator of `V⊗H + H⊗W` is `V⁰ ⊗ W⁰`, so
/// the wedge is the kernel of the `(n−dim V)(n−dim W) × n` matrix
/// `kron(ann V, ann W) · Δ`, assembled sparsely from the comultiplication
/// triples without materializing the `n² × n` map.
pub fn wedge(c: &Coalgebra, v: &Subspace, w: &Subspace) -> Subspace {
    let n = c.dim();
    assert_eq!(v.ambient_dim(), n, "wedge operand ambient mismatch");
    assert_eq!(w.ambient_dim(), n, "wedge operand ambient mismatch");
    let field = c.field();
    if v.is_full() && w.is_full() {
        return c.full_space();
    }
    let av = v.annihilator_matrix();
    let aw = w.annihilator_matrix();
    let (rv, rw) = (av.rows(), aw.rows());
    if rv == 0 || rw == 0 {
        // V or W is the full space: V⊗H + H⊗W is everything, wedge is H.
        return c.full_space();
    }
    // Nonzero columns of the annihilators, for sparse assembly.
    let mut av_cols: Vec<Vec<(usize, CycElem)>> = vec![Vec::new(); n];
    let mut aw_cols: Vec<Vec<(usize, CycElem)>> = vec![Vec::new(); n];
    for r in 0..rv {
        for j in 0..n {
            if !av.at(r, j).is_zero() {
                av_cols[j].push((r, av.at(r, j).clone()));
            }
        }
    }
    for s in 0..rw {
        for k in 0..n {
            if !aw.at(s, k).is_zero() {
                aw_cols[k].push((s, aw.at(s, k).clone()));
            }
        }
    }
    let mut constraint = Matrix::zero(field, rv * rw, n);
    for &(i, j, k, ref mu) in c.comul() {
        for (r, vr) in &av_cols[j] {
            let mv = mu * vr;
            for (s, ws) in &aw_cols[k] {
                let add = &mv * ws;
                let cur = constraint.at(r * rw + s, i);
                let newv = cur + &add;
                constraint.set(r * rw + s, i, newv);
            }
        }
    }
    constraint.kernel()
}

/// Reference-formula wedge for cross-checking: literally build
/// `V⊗H + H⊗W ⊆ K^{n²}` and take the preimage under the `Δ` matrix.
/// Quadratic in memory; intended for tests on small fixtures.
pub fn wedge_by_definition(c: &Coalgebra, v: &Subspace, w: &Subspace) -> Subspace {
    let n = c.dim();
    let field = c.field();
    let mut spanning: Vec<Vec<CycElem>> = Vec::new();
    for a in 0..v.dim() {
        let va = v.basis_vector(a);
        for t in 0..n {
            let mut vec = vec![field.zero(); n * n];
            for (j, coeff) in va.iter().enumerate() {
                vec[j * n + t] = coeff.clone();
            }
            spanning.push(vec);
        }
    }
    for b in 0..w.dim() {
        let wb = w.basis_vector(b);
        for t in 0..n {
            let mut vec = vec![field.zero(); n * n];
            for (k, coeff) in wb.iter().enumerate() {
                vec[t * n + k] = coeff.clone();
            }
            spanning.push(vec);
        }
    }
    let target = Subspace::from_spanning(field, n * n, &spanning);
    preimage(&c.delta_matrix(), &target).expect("dimensions line up by construction")
}

/// Span of `{v_a ⊗ v_b}` inside `K^{n²}` for a subspace's basis — the test
/// space for "is this a subcoalgebra".
pub fn tensor_square(s: &Subspace) -> Subspace {
    let n = s.ambient_dim();
    let field = s.field();
    let mut spanning = Vec::with_capacity(s.dim() * s.dim());
    for a in 0..s.dim() {
        for b in 0..s.dim() {
            let (va, vb) = (s.basis_vector(a), s.basis_vector(b));
            let mut vec = vec![field.zero(); n * n];
            for (j, x) in va.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (k, y) in vb.iter().enumerate() {
                    if !y.is_zero() {
                        vec[j * n + k] = x * y;
                    }
                }
            }
            spanning.push(vec);
        }
    }
    Subspace::from_spanning(field, n * n, &spanning)
}

/// Is `Δ(S) ⊆ S ⊗ S`?
pub fn is_subcoalgebra(c: &Coalgebra, s: &Subspace) -> bool {
    let t = tensor_square(s);
    (0..s.dim()).all(|i| t.contains_vector(&c.delta_of(s.basis_vector(i))))
}

/// Restrict a coalgebra to a subcoalgebra: new structure constants on the
/// canonical basis of `s`. Errors if `s` is not actually a subcoalgebra.
/// Basis names are inherited descriptions of the canonical basis vectors.
pub fn restrict_to_subcoalgebra(c: &Coalgebra, s: &Subspace) -> Result<Coalgebra> {
    let n = c.dim();
    let d = s.dim();
    let field = c.field();
    // Columns: flattened v_b ⊗ v_c for the canonical basis of s.
    let mut cols: Vec<Vec<CycElem>> = Vec::with_capacity(d * d);
    for b in 0..d {
        for cc in 0..d {
            let (vb, vc) = (s.basis_vector(b), s.basis_vector(cc));
            let mut col = vec![field.zero(); n * n];
            for (j, x) in vb.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (k, y) in vc.iter().enumerate() {
                    if !y.is_zero() {
                        col[j * n + k] = x * y;
                    }
                }
            }
            cols.push(col);
        }
    }
    let tensor_basis = Matrix::from_fn(field, n * n, d * d, |r, col| cols[col][r].clone());
    let rhs: Vec<Vec<CycElem>> = (0..d).map(|a| c.delta_of(s.basis_vector(a))).collect();
    let solutions = solve_many(&tensor_basis, &rhs).ok_or_else(|| {
        Error::Domain("restriction target is not a subcoalgebra (Δ leaves S⊗S)".into())
    })?;
    let mut comul = Vec::new();
    for (a, sol) in solutions.iter().enumerate() {
        for b in 0..d {
            for cc in 0..d {
                let coeff = &sol[b * d + cc];
                if !coeff.is_zero() {
                    comul.push((a, b, cc, coeff.clone()));
                }
            }
        }
    }
    let counit: Vec<CycElem> = (0..d).map(|a| c.counit_of(s.basis_vector(a))).collect();
    let names: Vec<String> = (0..d).map(|a| c.describe_vector(s.basis_vector(a))).collect();
    Coalgebra::new(format!("{}|sub", c.name()), field, d, names, comul, counit)
}

/// The coradical `H₀ = (Rad H*)^⊥`, asserted to be a subcoalgebra.
pub fn coradical(c: &Coalgebra) -> Result<Subspace> {
    let dual = dual_algebra(c);
    let radical = semisimple::jacobson_radical(&dual);
    // Orthogonal complement in H of a subspace of H*: the kernel of the
    // radical's basis matrix acting on coefficient columns.
    let h0 = if radical.dim() == 0 {
        c.full_space()
    } else {
        radical.basis().kernel()
    };
    assert!(is_subcoalgebra(c, &h0), "the coradical must be a subcoalgebra");
    Ok(h0)
}

/// The coradical filtration `H₀ ⊆ H₁ ⊆ …`, all layers, ending at the full
/// space. `H_n = H_{n−1} ∧ H₀`.
#[derive(Clone)]
pub struct Filtration {
    pub layers: Vec<Subspace>,
}

impl Filtration {
    /// Number of stored layers (`H₀ … H_N`).
    pub fn len(&self) -> usize {
        self.layers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }

    /// `H_n`, clamped at the top layer (the filtration is constant beyond it).
    pub fn layer(&self, n: usize) -> &Subspace {
        &self.layers[n.min(self.layers.len() - 1)]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.layers.iter().map(Subspace::dim).collect()
    }
}

/// Compute the full coradical filtration. Terminates within `dim H` wedge
/// steps for any valid coalgebra; exceeding the bound or stabilizing below
/// the full space indicates an arithmetic bug and panics.
pub fn coradical_filtration(c: &Coalgebra) -> Result<Filtration> {
    let h0 = coradical(c)?;
    let mut layers = vec![h0.clone()];
    while !layers.last().unwrap().is_full() {
        assert!(
            layers.len() <= c.dim(),
            "coradical filtration failed to terminate within dim H steps"
        );
        let next = wedge(c, layers.last().unwrap(), &h0);
        let prev = layers.last().unwrap();
        assert!(
            next.contains(prev) && next.dim() > prev.dim(),
            "coradical filtration stabilized below the full space"
        );
        layers.push(next);
    }
    Ok(Filtration { layers })
}

/// True iff the coradical is everything.
pub fn is_cosemisimple(c: &Coalgebra) -> Result<bool> {
    Ok(coradical(c)?.is_full())
}

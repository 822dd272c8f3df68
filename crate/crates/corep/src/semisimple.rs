//! Semisimple-algebra structure: the Jacobson radical, centers, central
//! primitive idempotents, matrix units, and the decomposition of a
//! cosemisimple coalgebra into simple subcoalgebras carrying basic
//! multiplicative matrices.
//!
//! Everything works over `Q(ζ_m)`, characteristic zero, so the radical of a
//! finite-dimensional algebra is exactly the radical of the trace form of
//! the regular representation, `T(x, y) = tr(L_{xy})`. Splitting the
//! semisimple quotient into matrix blocks requires the field to split the
//! algebra; when it does not, the minimal polynomial of some element picks
//! up a nonlinear irreducible factor and computation stops with
//! [`Error::NonSplit`] naming that degree.
//!
//! The coalgebra-side entry point is [`simple_subcoalgebras`]: a cosemisimple
//! coalgebra decomposes **uniquely** into a direct sum of simple
//! subcoalgebras, each spanned by the entries of an `r × r` basic
//! multiplicative matrix `G = (g_{ab})` with `Δ(g_{ab}) = Σ_t g_{at} ⊗ g_{tb}`
//! and `ε(g_{ab}) = δ_{ab}`. The entries are recovered as the dual basis of a
//! full system of matrix units in the dual algebra.

use crate::coalgebra_core::{dual_algebra, Algebra, Coalgebra};
use crate::exact_arith::poly::{factor_over_field, CPoly};
use crate::exact_arith::CycElem;
use crate::linalg::{solve, solve_many, tensor_vec, Matrix, Subspace};
use crate::{Error, Result};

/// The Jacobson radical of a finite-dimensional algebra, as the radical of
/// the regular trace form `T(x, y) = tr(L_{xy})`.
///
/// With `τ_c = tr(L_{e_c}) = Σ_k sc(c, k, k)`, the Gram matrix is
/// `T[a][b] = Σ_c sc(a, b, c) τ_c`, and the radical is its kernel.
pub fn jacobson_radical(alg: &Algebra) -> Subspace {
    let n = alg.dim();
    let field = alg.field();
    let tau: Vec<_> = (0..n)
        .map(|c| {
            let mut t = field.zero();
            for k in 0..n {
                t += alg.sc(c, k, k);
            }
            t
        })
        .collect();
    let gram = Matrix::from_fn(field, n, n, |a, b| {
        let mut t = field.zero();
        for (c, tc) in tau.iter().enumerate() {
            let s = alg.sc(a, b, c);
            if !s.is_zero() && !tc.is_zero() {
                t += &(s * tc);
            }
        }
        t
    });
    let rad = gram.kernel();
    debug_assert!(radical_is_ideal(alg, &rad), "trace-form radical must be a two-sided ideal");
    rad
}

/// Debug cross-check: is the subspace a two-sided ideal?
fn radical_is_ideal(alg: &Algebra, rad: &Subspace) -> bool {
    if alg.dim() > 12 {
        return true; // skip the O(n³·dim) check at scale
    }
    let n = alg.dim();
    for i in 0..rad.dim() {
        let r = rad.basis_vector(i);
        for b in 0..n {
            let mut e = vec![alg.field().zero(); n];
            e[b] = alg.field().one();
            if !rad.contains_vector(&alg.mul(r, &e)) || !rad.contains_vector(&alg.mul(&e, r)) {
                return false;
            }
        }
    }
    true
}

/// The center `Z(A) = {z : zb = bz for all b}`, as the kernel of the stacked
/// commutator maps `z ↦ z·e_b − e_b·z`.
pub fn center(alg: &Algebra) -> Subspace {
    let n = alg.dim();
    // Row (b·n + c), column a: coefficient of e_c in e_a·e_b − e_b·e_a.
    let stacked = Matrix::from_fn(alg.field(), n * n, n, |rc, a| {
        let (b, c) = (rc / n, rc % n);
        alg.sc(a, b, c) - alg.sc(b, a, c)
    });
    stacked.kernel()
}

/// The monic minimal polynomial of `x` in a unital algebra, where `unit` is
/// the multiplicative identity of the (sub)algebra under consideration —
/// pass `alg.unit()` for the whole algebra, or a corner idempotent `e` when
/// working inside `eAe`.
pub fn minimal_polynomial_with_unit(alg: &Algebra, x: &[CycElem], unit: &[CycElem]) -> CPoly {
    let n = alg.dim();
    let field = alg.field();
    let mut powers: Vec<Vec<CycElem>> = vec![unit.to_vec()];
    loop {
        let k = powers.len();
        let last = alg.mul(powers.last().unwrap(), x);
        let mat = Matrix::from_fn(field, n, k, |r, c| powers[c][r].clone());
        if let Some(coeffs) = solve(&mat, &last) {
            // x^k = Σ c_i x^i  ⟹  minpoly = t^k − Σ c_i t^i.
            let mut poly: Vec<CycElem> = coeffs.iter().map(|c| -c).collect();
            poly.push(field.one());
            return CPoly::from_coeffs(field, poly);
        }
        powers.push(last);
        assert!(powers.len() <= n + 1, "minimal polynomial must have degree at most dim");
    }
}

/// Minimal polynomial over the algebra's own unit.
pub fn minimal_polynomial(alg: &Algebra, x: &[CycElem]) -> CPoly {
    minimal_polynomial_with_unit(alg, x, alg.unit())
}

/// Evaluate a polynomial at an algebra element (Horner), with `unit` the
/// relevant identity (constant term contributes `c₀·unit`).
fn eval_in_algebra(alg: &Algebra, p: &CPoly, x: &[CycElem], unit: &[CycElem]) -> Vec<CycElem> {
    let field = alg.field();
    let n = alg.dim();
    let mut acc = vec![field.zero(); n];
    for c in p.coeffs().iter().rev() {
        acc = alg.mul(&acc, x);
        if !c.is_zero() {
            for (a, u) in acc.iter_mut().zip(unit) {
                *a += &(c * u);
            }
        }
    }
    acc
}

/// The central primitive idempotents of a **semisimple** algebra, in a
/// deterministic order.
///
/// Method: compute the center `Z`, find a separating element `z ∈ Z` (one
/// whose minimal polynomial has degree `dim Z`) by scanning the
/// deterministic family `z_t = Σ_i t^{i−1} z_i`, factor the minimal
/// polynomial, and form Lagrange interpolation idempotents at its roots.
/// Errors with [`Error::NonSplit`] if the minimal polynomial has a nonlinear
/// irreducible factor, and with a domain error if the algebra has a nonzero
/// radical.
pub fn central_primitive_idempotents(alg: &Algebra) -> Result<Vec<Vec<CycElem>>> {
    let n = alg.dim();
    let field = alg.field();
    if n == 0 {
        return Ok(Vec::new());
    }
    if jacobson_radical(alg).dim() != 0 {
        return Err(Error::Domain(
            "central primitive idempotents require a semisimple algebra".into(),
        ));
    }
    let z_space = center(alg);
    let k = z_space.dim();
    if k == 1 {
        return Ok(vec![alg.unit().to_vec()]);
    }

    // Separating central element: z_t = Σ_i t^{i−1} z_i works for all but
    // finitely many t (primitive element theorem, characteristic zero), so a
    // bounded scan is complete.
    let guard = 2 * n * n * k + 8;
    let mut separating: Option<(Vec<CycElem>, CPoly)> = None;
    'scan: for t in 1..=guard {
        let mut z = vec![field.zero(); n];
        let mut weight = field.one();
        let t_elem = field.from_int(t as i64);
        for i in 0..k {
            for (acc, b) in z.iter_mut().zip(z_space.basis_vector(i)) {
                *acc += &(&weight * b);
            }
            weight = &weight * &t_elem;
        }
        let mp = minimal_polynomial(alg, &z);
        if mp.deg() == Some(k) {
            separating = Some((z, mp));
            break 'scan;
        }
    }
    let (z, mp) = separating.expect("a separating central element exists within the scan bound");

    let factors = factor_over_field(&mp)?;
    let mut roots: Vec<CycElem> = Vec::with_capacity(k);
    for (f, mult) in &factors {
        let d = f.deg().unwrap_or(0);
        if d > 1 {
            return Err(Error::NonSplit { m: field.order(), degree: d });
        }
        assert_eq!(*mult, 1, "minimal polynomial of a semisimple element is squarefree");
        // Monic linear factor t + c₀ has root −c₀.
        roots.push(-&f.coeff(0));
    }
    assert_eq!(roots.len(), k, "split squarefree minimal polynomial has dim Z roots");

    let mut idempotents = Vec::with_capacity(k);
    for (i, li) in roots.iter().enumerate() {
        // e_i = ∏_{j≠i} (z − λ_j) / (λ_i − λ_j).
        let mut p = CPoly::one(field);
        for (j, lj) in roots.iter().enumerate() {
            if j != i {
                let denom = li - lj;
                let lin = CPoly::from_coeffs(field, vec![-lj, field.one()]);
                p = p.mul(&lin).mul_scalar(&denom.inv().expect("distinct roots"));
            }
        }
        let e = eval_in_algebra(alg, &p, &z, alg.unit());
        idempotents.push(e);
    }

    // The defining identities are cheap to confirm and guard the whole
    // downstream decomposition, so check them unconditionally.
    let mut total = vec![field.zero(); n];
    for e in &idempotents {
        for (t, x) in total.iter_mut().zip(e) {
            *t += x;
        }
    }
    assert_eq!(total, alg.unit().to_vec(), "central idempotents must sum to the unit");
    for (i, a) in idempotents.iter().enumerate() {
        assert_eq!(alg.mul(a, a), *a, "idempotency");
        for b in idempotents.iter().skip(i + 1) {
            assert!(alg.mul(a, b).iter().all(CycElem::is_zero), "orthogonality");
        }
    }
    Ok(idempotents)
}

/// Span of `{f·e_a·g}` over the basis — the corner (or one-sided) slice of
/// the algebra between two idempotents.
fn corner_subspace(alg: &Algebra, f: &[CycElem], g: &[CycElem]) -> Subspace {
    let n = alg.dim();
    let field = alg.field();
    let mut spanning = Vec::with_capacity(n);
    for a in 0..n {
        let mut e = vec![field.zero(); n];
        e[a] = field.one();
        spanning.push(alg.mul(&alg.mul(f, &e), g));
    }
    Subspace::from_spanning(field, n, &spanning)
}

/// Extract `γ` from a product known to lie in `K·e`; asserts exact
/// proportionality.
fn scalar_of_multiple(prod: &[CycElem], e: &[CycElem]) -> CycElem {
    let pivot = e
        .iter()
        .position(|c| !c.is_zero())
        .expect("reference idempotent is nonzero");
    let gamma = prod[pivot].div_exact(&e[pivot]).expect("nonzero pivot");
    for (p, b) in prod.iter().zip(e) {
        assert_eq!(*p, &gamma * b, "product must be a scalar multiple of the idempotent");
    }
    gamma
}

/// A full system of matrix units for one block of a semisimple algebra.
///
/// `block_idem` must be a central primitive idempotent `F`; the block
/// `B = F·A·F` is then simple, and if the field splits it, `B ≅ M_r(K)`.
/// Returns `r × r` elements `e[j][k]` of `A` with `e[j][k]·e[l][m] =
/// δ_{kl} e[j][m]` and `Σ_j e[j][j] = F`.
///
/// Method: refine `F` to a primitive idempotent `e` by repeatedly splitting
/// along CRT idempotents of the minimal polynomial of corner elements; then
/// take a basis `x_j` of `Be` and the dual basis `y_k` of `eB` under the
/// pairing `y·x ∈ eBe = K·e`, and set `e[j][k] = x_j·y_k`.
pub fn matrix_units(alg: &Algebra, block_idem: &[CycElem]) -> Result<Vec<Vec<Vec<CycElem>>>> {
    let field = alg.field();
    let block = corner_subspace(alg, block_idem, block_idem);
    let block_dim = block.dim();
    assert!(block_dim > 0, "a central primitive idempotent spans a nonzero block");

    // Refine to a primitive idempotent: e is primitive iff dim eAe = 1.
    let mut e = block_idem.to_vec();
    let mut corner = block.clone();
    let mut worst_nonlinear: Option<usize> = None;
    let mut refine_guard = 0usize;
    while corner.dim() > 1 {
        refine_guard += 1;
        assert!(refine_guard <= block_dim + 2, "idempotent refinement must terminate");
        let d = corner.dim();
        // Deterministic candidate scan inside the corner. Generic corner
        // elements have irreducible minimal polynomials (irrational
        // spectra), so the scan leans on arithmetically special elements:
        // the canonical basis, pairwise products (which reach projected
        // group-like elements with root-of-unity spectra), pairwise sums
        // and differences, and finally a capped small-height enumeration.
        let mut split: Option<Vec<CycElem>> = None;
        let basis: Vec<Vec<CycElem>> = (0..d).map(|l| corner.basis_vector(l).to_vec()).collect();
        let mut candidates: Vec<Vec<CycElem>> = Vec::new();
        candidates.extend(basis.iter().cloned());
        for i in 0..d {
            for j in 0..d {
                candidates.push(alg.mul(&basis[i], &basis[j]));
            }
        }
        for i in 0..d {
            for j in (i + 1)..d {
                let sum: Vec<CycElem> =
                    basis[i].iter().zip(&basis[j]).map(|(a, b)| a + b).collect();
                let diff: Vec<CycElem> =
                    basis[i].iter().zip(&basis[j]).map(|(a, b)| a - b).collect();
                candidates.push(sum);
                candidates.push(diff);
            }
        }
        'heights: for h in 1..=3i64 {
            let width = (2 * h + 1) as usize;
            let total = width.pow(d as u32);
            if candidates.len() > 4000 {
                break 'heights;
            }
            for code in 0..total.min(60_000) {
                let mut coeffs = Vec::with_capacity(d);
                let mut rest = code;
                for _ in 0..d {
                    coeffs.push((rest % width) as i64 - h);
                    rest /= width;
                }
                // Skip repeats of smaller heights, sign duplicates, and
                // scalar multiples.
                if coeffs.iter().all(|&c| c.abs() < h) {
                    continue;
                }
                match coeffs.iter().find(|&&c| c != 0) {
                    None => continue,
                    Some(&first) if first < 0 => continue,
                    _ => {}
                }
                let g = coeffs.iter().fold(0i64, |acc, &c| {
                    let c = c.abs();
                    if acc == 0 { c } else if c == 0 { acc } else {
                        let (mut a, mut b) = (acc, c);
                        while b != 0 { let t = a % b; a = b; b = t; }
                        a
                    }
                });
                if g > 1 {
                    continue;
                }
                let mut u = vec![field.zero(); alg.dim()];
                for (l, &cl) in coeffs.iter().enumerate() {
                    if cl != 0 {
                        let w = field.from_int(cl);
                        for (a, b) in u.iter_mut().zip(&basis[l]) {
                            *a += &(&w * b);
                        }
                    }
                }
                candidates.push(u);
                if candidates.len() > 4000 {
                    break 'heights;
                }
            }
        }
        'candidates: for u in &candidates {
            let u = u.clone();
            if u.iter().all(CycElem::is_zero) {
                continue 'candidates;
            }
            let mp = minimal_polynomial_with_unit(alg, &u, &e);
            let factors = factor_over_field(&mp)?;
            for (f, _) in &factors {
                let fd = f.deg().unwrap_or(0);
                if fd > 1 {
                    worst_nonlinear = Some(worst_nonlinear.map_or(fd, |w| w.min(fd)));
                }
            }
            if factors.len() < 2 {
                continue 'candidates;
            }
            // ≥ 2 coprime primary components: build the CRT idempotent of
            // the first one. q = f₁^{m₁}, h = mp/q, a·h ≡ 1 (mod q); the
            // element (a·h)(u) is a proper idempotent below e.
            let (f1, m1) = &factors[0];
            let mut q = CPoly::one(field);
            for _ in 0..*m1 {
                q = q.mul(f1);
            }
            let (h, rem) = mp.divrem(&q);
            assert!(rem.is_zero(), "primary component divides the minimal polynomial");
            let (g, a) = h.half_ext_gcd(&q);
            assert_eq!(g.deg(), Some(0), "primary components are pairwise coprime");
            let a = a.mul_scalar(&g.coeff(0).inv().expect("unit gcd"));
            let crt = a.mul(&h);
            let cand = eval_in_algebra(alg, &crt, &u, &e);
            assert_eq!(alg.mul(&cand, &cand), cand, "CRT element is idempotent");
            assert!(!cand.iter().all(CycElem::is_zero), "CRT idempotent is nonzero");
            assert!(cand != e, "CRT idempotent is proper");
            split = Some(cand);
            break 'candidates;
        }
        match split {
            Some(new_e) => {
                e = new_e;
                corner = corner_subspace(alg, &e, &e);
            }
            None => {
                // No corner element separates: the corner is a division
                // algebra over K, so the field does not split the block.
                let degree = worst_nonlinear.ok_or_else(|| {
                    Error::MatchFailure("matrix-unit search exhausted without a witness".into())
                })?;
                return Err(Error::NonSplit { m: field.order(), degree });
            }
        }
    }

    // Bases of Be and eB inside A.
    let be = corner_subspace(alg, block_idem, &e);
    let eb = corner_subspace(alg, &e, block_idem);
    let r = be.dim();
    assert_eq!(eb.dim(), r, "row and column modules of a simple block agree");
    if r * r != block_dim {
        // Be is a module over the division corner; a strict inequality
        // means eAe ≠ K even though refinement bottomed out.
        return Err(Error::MatchFailure(format!(
            "block of dimension {block_dim} is not a split matrix algebra (module rank {r})"
        )));
    }
    let xs: Vec<Vec<CycElem>> = (0..r).map(|j| be.basis_vector(j).to_vec()).collect();
    let us: Vec<Vec<CycElem>> = (0..r).map(|j| eb.basis_vector(j).to_vec()).collect();

    // Gram matrix of the pairing eB × Be → eBe = K·e.
    let gram = Matrix::from_fn(field, r, r, |j, kk| {
        scalar_of_multiple(&alg.mul(&us[j], &xs[kk]), &e)
    });
    let identity_cols: Vec<Vec<CycElem>> = (0..r)
        .map(|j| {
            let mut col = vec![field.zero(); r];
            col[j] = field.one();
            col
        })
        .collect();
    let inv_cols = solve_many(&gram, &identity_cols)
        .expect("the module pairing of a simple block is nondegenerate");
    // y_j = Σ_l G⁻¹[j][l] u_l, so that y_j·x_k = δ_{jk} e.
    let ys: Vec<Vec<CycElem>> = (0..r)
        .map(|j| {
            let mut y = vec![field.zero(); alg.dim()];
            for (l, u) in us.iter().enumerate() {
                // Column j of G⁻¹ holds the solution of G·c = δ_j, i.e.
                // c_l = G⁻¹[l][j]; we need rows of G⁻¹ against Gᵀ, which is
                // the same system with the roles of j and l swapped.
                let c = &inv_cols[l][j];
                if !c.is_zero() {
                    for (acc, b) in y.iter_mut().zip(u) {
                        *acc += &(c * b);
                    }
                }
            }
            y
        })
        .collect();

    let units: Vec<Vec<Vec<CycElem>>> = (0..r)
        .map(|j| (0..r).map(|kk| alg.mul(&xs[j], &ys[kk])).collect())
        .collect();

    // Confirm the defining relations; these protect every later stage.
    let mut diag_sum = vec![field.zero(); alg.dim()];
    for (j, row) in units.iter().enumerate() {
        for (t, x) in diag_sum.iter_mut().zip(&row[j]) {
            *t += x;
        }
    }
    assert_eq!(diag_sum, block_idem.to_vec(), "diagonal units sum to the block idempotent");
    for j in 0..r {
        for kk in 0..r {
            for l in 0..r {
                for mm in 0..r {
                    let prod = alg.mul(&units[j][kk], &units[l][mm]);
                    let expected = if kk == l {
                        units[j][mm].clone()
                    } else {
                        vec![field.zero(); alg.dim()]
                    };
                    assert_eq!(prod, expected, "matrix-unit relation e_jk·e_lm = δ_kl e_jm");
                }
            }
        }
    }
    Ok(units)
}

/// One simple subcoalgebra of a cosemisimple coalgebra, with its basic
/// multiplicative matrix.
#[derive(Clone)]
pub struct SimpleSubcoalgebra {
    /// The subcoalgebra as a subspace of the ambient coalgebra (dim `rank²`).
    pub subspace: Subspace,
    /// Matrix size `r`: the subcoalgebra is a comatrix coalgebra `C(r)`.
    pub rank: usize,
    /// Basic multiplicative matrix entries `g[a][b]` as coefficient vectors:
    /// `Δ(g[a][b]) = Σ_t g[a][t] ⊗ g[t][b]`, `ε(g[a][b]) = δ_{ab}`.
    pub comatrix: Vec<Vec<Vec<CycElem>>>,
    /// The block's matrix units in the dual algebra, as functionals (dual
    /// basis coordinates): `⟨dual_units[j][k], comatrix[a][b]⟩ = δ_ja δ_kb`,
    /// vanishing on every other simple.
    pub dual_units: Vec<Vec<Vec<CycElem>>>,
}

/// Does the square array `g` satisfy the comatrix identities in `c`?
pub fn is_multiplicative(c: &Coalgebra, g: &[Vec<Vec<CycElem>>]) -> bool {
    let r = g.len();
    let n = c.dim();
    let field = c.field();
    for (a, row) in g.iter().enumerate() {
        if row.len() != r {
            return false;
        }
        for (b, gab) in row.iter().enumerate() {
            let mut expected = vec![field.zero(); n * n];
            for t in 0..r {
                let term = tensor_vec(&g[a][t], &g[t][b]);
                for (acc, x) in expected.iter_mut().zip(&term) {
                    *acc += x;
                }
            }
            if c.delta_of(gab) != expected {
                return false;
            }
            let eps = c.counit_of(gab);
            let want = if a == b { field.one() } else { field.zero() };
            if eps != want {
                return false;
            }
        }
    }
    true
}

/// Decompose a **cosemisimple** coalgebra into its simple subcoalgebras.
///
/// The list is ordered deterministically by `(rank, canonical basis key)`.
/// Errors: domain error if the coalgebra is not cosemisimple;
/// [`Error::NonSplit`] if the base field does not split the dual algebra.
pub fn simple_subcoalgebras(c: &Coalgebra) -> Result<Vec<SimpleSubcoalgebra>> {
    let n = c.dim();
    let field = c.field();
    let dual = dual_algebra(c);
    if jacobson_radical(&dual).dim() != 0 {
        return Err(Error::Domain(
            "simple subcoalgebra decomposition requires a cosemisimple coalgebra".into(),
        ));
    }
    let idems = central_primitive_idempotents(&dual)?;
    let mut all_units: Vec<Vec<CycElem>> = Vec::with_capacity(n);
    let mut block_units: Vec<Vec<Vec<Vec<CycElem>>>> = Vec::new();
    for f in &idems {
        let units = matrix_units(&dual, f)?;
        for row in &units {
            for u in row {
                all_units.push(u.clone());
            }
        }
        block_units.push(units);
    }
    assert_eq!(all_units.len(), n, "matrix units across all blocks form a basis of the dual");

    // Dual basis in C: with U the matrix whose rows are the units (in the
    // dual-basis coordinates of C*), the comatrix entries are the columns of
    // U⁻¹ — the pairing is ⟨f, v⟩ = Σ_a f_a v_a.
    let u_mat = Matrix::from_fn(field, n, n, |r, cc| all_units[r][cc].clone());
    let identity_cols: Vec<Vec<CycElem>> = (0..n)
        .map(|j| {
            let mut col = vec![field.zero(); n];
            col[j] = field.one();
            col
        })
        .collect();
    let dual_vectors = solve_many(&u_mat, &identity_cols).ok_or_else(|| {
        Error::MatchFailure("matrix units failed to form a basis of the dual algebra".into())
    })?;

    let mut blocks = Vec::with_capacity(block_units.len());
    let mut offset = 0;
    for units in block_units {
        let r = units.len();
        let mut comatrix = vec![vec![Vec::new(); r]; r];
        let mut spanning = Vec::with_capacity(r * r);
        for a in 0..r {
            for b in 0..r {
                let g = dual_vectors[offset + a * r + b].clone();
                spanning.push(g.clone());
                comatrix[a][b] = g;
            }
        }
        offset += r * r;
        let subspace = Subspace::from_spanning(field, n, &spanning);
        assert_eq!(subspace.dim(), r * r, "comatrix entries are linearly independent");
        assert!(
            is_multiplicative(c, &comatrix),
            "dual basis of matrix units is a basic multiplicative matrix"
        );
        blocks.push(SimpleSubcoalgebra { subspace, rank: r, comatrix, dual_units: units });
    }
    let total: usize = blocks.iter().map(|b| b.subspace.dim()).sum();
    assert_eq!(total, n, "simple subcoalgebras exhaust the coalgebra");
    blocks.sort_by(|x, y| {
        (x.rank, x.subspace.pivots(), x.subspace.canonical_key())
            .cmp(&(y.rank, y.subspace.pivots(), y.subspace.canonical_key()))
    });
    Ok(blocks)
}

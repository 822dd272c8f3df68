//! Exact dense linear algebra over `Q(ζ_m)`.
//!
//! Everything downstream — wedges, radicals, bicomodule decompositions —
//! reduces to the operations here: reduced row echelon form, kernels,
//! subspace sums/intersections/preimages, and Kronecker products. Matrices
//! are dense and row-major; a matrix of shape `r×c` acts on column vectors,
//! mapping `K^c → K^r`.
//!
//! [`Subspace`] is the canonical subspace representation: the basis is stored
//! as the reduced row echelon form of any spanning set, one basis vector per
//! row. Since rref is unique, subspace equality is matrix equality — the
//! property every "same simple subcoalgebra?" test in the analysis relies on.
//!
//! Pivoting picks, among the nonzero candidates of a column, the entry with
//! the smallest serialized size (ties to the lowest row). That keeps the
//! rationals small on the mid-sized systems the wedge computations produce,
//! without any modular machinery.

use crate::exact_arith::{CycElem, CycField};
use crate::{Error, Result};
use std::fmt;
use std::sync::Arc;

/// Dense row-major matrix over a cyclotomic field. Shape `rows × cols`,
/// acting on column vectors (`K^cols → K^rows`).
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Arc<CycField>,
    rows: usize,
    cols: usize,
    data: Vec<CycElem>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over Q(zeta_{}) [", self.rows, self.cols, self.field.order())?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    /// The `rows × cols` zero matrix.
    pub fn zero(field: &Arc<CycField>, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: Arc::clone(field),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    /// The `n × n` identity.
    pub fn identity(field: &Arc<CycField>, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Build from a closure over `(row, col)`.
    pub fn from_fn(
        field: &Arc<CycField>,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> CycElem,
    ) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { field: Arc::clone(field), rows, cols, data }
    }

    /// Build from row vectors; all rows must share one length.
    pub fn from_rows(field: &Arc<CycField>, rows: Vec<Vec<CycElem>>, cols: usize) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for row in rows {
            assert_eq!(row.len(), cols, "ragged row in matrix construction");
            data.extend(row);
        }
        Matrix { field: Arc::clone(field), rows: nrows, cols, data }
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at `(r, c)`.
    pub fn at(&self, r: usize, c: usize) -> &CycElem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: CycElem) {
        self.data[r * self.cols + c] = v;
    }

    /// One row as a slice.
    pub fn row(&self, r: usize) -> &[CycElem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycElem::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in add");
        Matrix::from_fn(&self.field, self.rows, self.cols, |r, c| self.at(r, c) + other.at(r, c))
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in sub");
        Matrix::from_fn(&self.field, self.rows, self.cols, |r, c| self.at(r, c) - other.at(r, c))
    }

    pub fn scale(&self, k: &CycElem) -> Matrix {
        Matrix::from_fn(&self.field, self.rows, self.cols, |r, c| self.at(r, c) * k)
    }

    /// Matrix product `self · other`.
    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in matmul");
        let mut out = Matrix::zero(&self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if !b.is_zero() {
                        let t = &(a * b) + out.at(r, c);
                        out.set(r, c, t);
                    }
                }
            }
        }
        out
    }

    /// Apply to a column vector.
    pub fn apply(&self, v: &[CycElem]) -> Vec<CycElem> {
        assert_eq!(v.len(), self.cols, "vector length mismatch in apply");
        (0..self.rows)
            .map(|r| {
                let mut acc = self.field.zero();
                for (c, x) in v.iter().enumerate() {
                    if !x.is_zero() && !self.at(r, c).is_zero() {
                        acc += &(self.at(r, c) * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> CycElem {
        assert_eq!(self.rows, self.cols, "trace of a non-square matrix");
        let mut acc = self.field.zero();
        for i in 0..self.rows {
            acc += self.at(i, i);
        }
        acc
    }

    /// Reduced row echelon form and the pivot-column list. Deterministic:
    /// each pivot is the candidate with the smallest serialized size.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m: Vec<Vec<CycElem>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let best = (r..self.rows)
                .filter(|&i| !m[i][c].is_zero())
                .min_by_key(|&i| (m[i][c].serialized_size(), i));
            let Some(best) = best else { continue };
            m.swap(r, best);
            let inv = m[r][c].inv().expect("pivot is nonzero");
            for x in m[r].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
            for i in 0..self.rows {
                if i != r && !m[i][c].is_zero() {
                    let factor = m[i][c].clone();
                    for j in 0..self.cols {
                        if !m[r][j].is_zero() {
                            let t = &m[r][j] * &factor;
                            m[i][j] = &m[i][j] - &t;
                        }
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (Matrix::from_rows(&self.field, m, self.cols), pivots)
    }

    /// Rank via rref.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Right null space `{v : M·v = 0}` as a canonical subspace of `K^cols`.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let mut vectors = Vec::new();
        let pivot_set: Vec<usize> = pivots.clone();
        for fc in 0..self.cols {
            if pivot_set.contains(&fc) {
                continue;
            }
            let mut v = vec![self.field.zero(); self.cols];
            v[fc] = self.field.one();
            for (i, &pc) in pivot_set.iter().enumerate() {
                v[pc] = -r.at(i, fc);
            }
            vectors.push(v);
        }
        Subspace::from_spanning(&self.field, self.cols, &vectors)
    }

    /// Kronecker product; `kron(A, B)(x ⊗ y) = Ax ⊗ By` with the flat pair
    /// index `(i, k) ↦ i·(rows of B) + k`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        Matrix::from_fn(
            &self.field,
            self.rows * other.rows,
            self.cols * other.cols,
            |r, c| {
                let (i, k) = (r / other.rows, r % other.rows);
                let (j, l) = (c / other.cols, c % other.cols);
                self.at(i, j) * other.at(k, l)
            },
        )
    }
}

/// The flattened tensor `x ⊗ y` of two coefficient vectors, index
/// `(j, k) ↦ j·len(y) + k` — the vector-level companion of [`Matrix::kron`].
pub fn tensor_vec(x: &[CycElem], y: &[CycElem]) -> Vec<CycElem> {
    let field = if let Some(first) = x.first() {
        first.field().clone()
    } else if let Some(first) = y.first() {
        first.field().clone()
    } else {
        panic!("tensor_vec of two empty vectors has no field to borrow");
    };
    let mut out = vec![field.zero(); x.len() * y.len()];
    for (j, a) in x.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (k, b) in y.iter().enumerate() {
            if !b.is_zero() {
                out[j * y.len() + k] = a * b;
            }
        }
    }
    out
}

/// One particular solution of `A·x = b` with all free variables set to zero,
/// or `None` if the system is inconsistent.
pub fn solve(a: &Matrix, b: &[CycElem]) -> Option<Vec<CycElem>> {
    assert_eq!(b.len(), a.rows(), "right-hand side length mismatch");
    let field = a.field();
    let augmented = Matrix::from_fn(field, a.rows(), a.cols() + 1, |r, c| {
        if c < a.cols() {
            a.at(r, c).clone()
        } else {
            b[r].clone()
        }
    });
    let (r, pivots) = augmented.rref();
    if pivots.contains(&a.cols()) {
        return None; // a pivot in the augmented column: inconsistent
    }
    let mut x = vec![field.zero(); a.cols()];
    for (i, &pc) in pivots.iter().enumerate() {
        x[pc] = r.at(i, a.cols()).clone();
    }
    Some(x)
}

/// Solve `A·x = b` for many right-hand sides with one elimination pass;
/// `None` if any system is inconsistent. Free variables are zero, as in
/// [`solve`].
pub fn solve_many(a: &Matrix, rhs: &[Vec<CycElem>]) -> Option<Vec<Vec<CycElem>>> {
    let field = a.field();
    let k = rhs.len();
    for b in rhs {
        assert_eq!(b.len(), a.rows(), "right-hand side length mismatch");
    }
    let augmented = Matrix::from_fn(field, a.rows(), a.cols() + k, |r, c| {
        if c < a.cols() {
            a.at(r, c).clone()
        } else {
            rhs[c - a.cols()][r].clone()
        }
    });
    let (r, pivots) = augmented.rref();
    if pivots.iter().any(|&p| p >= a.cols()) {
        return None;
    }
    let mut out = Vec::with_capacity(k);
    for j in 0..k {
        let mut x = vec![field.zero(); a.cols()];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = r.at(i, a.cols() + j).clone();
        }
        out.push(x);
    }
    Some(out)
}

/// A subspace of `K^n` in canonical form: the basis matrix is the rref of any
/// spanning set (one basis vector per row, full row rank), so equal subspaces
/// have identical representations.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    field: Arc<CycField>,
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} of K^{}) {:?}", self.dim(), self.ambient, self.basis)
    }
}

impl Subspace {
    /// The zero subspace of `K^ambient`.
    pub fn zero(field: &Arc<CycField>, ambient: usize) -> Subspace {
        Subspace {
            field: Arc::clone(field),
            ambient,
            basis: Matrix::zero(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    /// The full space `K^ambient`.
    pub fn full(field: &Arc<CycField>, ambient: usize) -> Subspace {
        Subspace {
            field: Arc::clone(field),
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Canonicalize a spanning set (zero vectors welcome, duplicates welcome).
    pub fn from_spanning(field: &Arc<CycField>, ambient: usize, vectors: &[Vec<CycElem>]) -> Subspace {
        for v in vectors {
            assert_eq!(v.len(), ambient, "spanning vector length mismatch");
        }
        let raw = Matrix::from_rows(field, vectors.to_vec(), ambient);
        let (r, pivots) = raw.rref();
        let rank = pivots.len();
        let basis = Matrix::from_fn(field, rank, ambient, |i, j| r.at(i, j).clone());
        Subspace { field: Arc::clone(field), ambient, basis, pivots }
    }

    /// Span of the rows of a matrix.
    pub fn from_rows_matrix(m: &Matrix) -> Subspace {
        let rows: Vec<Vec<CycElem>> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
        Subspace::from_spanning(m.field(), m.cols(), &rows)
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// The canonical rref basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// Pivot column of each basis row (strictly increasing).
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vector(&self, i: usize) -> &[CycElem] {
        self.basis.row(i)
    }

    /// Deterministic representatives of a complement of `self` inside
    /// `larger`: vectors of `larger`'s canonical basis that extend a basis
    /// of `self` to one of `larger` (their classes form a basis of the
    /// quotient `larger / self`). Errors unless `self ⊆ larger`.
    pub fn complement_in(&self, larger: &Subspace) -> Result<Vec<Vec<CycElem>>> {
        if self.ambient != larger.ambient {
            return Err(Error::Domain("complement_in: ambient dimensions differ".into()));
        }
        if !larger.contains(self) {
            return Err(Error::Domain("complement_in: subspace not contained in larger".into()));
        }
        let mut cur = self.clone();
        let mut reps = Vec::with_capacity(larger.dim() - self.dim());
        for i in 0..larger.dim() {
            let v = larger.basis_vector(i);
            if !cur.contains_vector(v) {
                reps.push(v.to_vec());
                let step = Subspace::from_spanning(&self.field, self.ambient, &[v.to_vec()]);
                cur = cur.sum(&step)?;
            }
        }
        assert_eq!(cur, *larger, "representatives complete the basis");
        Ok(reps)
    }

    /// A deterministic string key for the subspace, built from its canonical
    /// basis. Equal subspaces get equal keys, so this is a total order on
    /// subspaces of a fixed ambient space — used to fix output orderings.
    pub fn canonical_key(&self) -> String {
        let mut out = String::new();
        for i in 0..self.dim() {
            for x in self.basis.row(i) {
                out.push_str(&x.to_strings().join(","));
                out.push(';');
            }
            out.push('|');
        }
        out
    }

    pub fn is_zero_space(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Reduce a vector against the basis; returns the residue (zero iff the
    /// vector lies in the subspace).
    pub fn reduce(&self, v: &[CycElem]) -> Vec<CycElem> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut w = v.to_vec();
        for (i, &pc) in self.pivots.iter().enumerate() {
            if !w[pc].is_zero() {
                let factor = w[pc].clone();
                for j in 0..self.ambient {
                    let b = self.basis.at(i, j);
                    if !b.is_zero() {
                        let t = b * &factor;
                        w[j] = &w[j] - &t;
                    }
                }
            }
        }
        w
    }

    pub fn contains_vector(&self, v: &[CycElem]) -> bool {
        self.reduce(v).iter().all(CycElem::is_zero)
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        (0..other.dim()).all(|i| self.contains_vector(other.basis_vector(i)))
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies here.
    pub fn coords(&self, v: &[CycElem]) -> Option<Vec<CycElem>> {
        if !self.contains_vector(v) {
            return None;
        }
        // With an rref basis the coordinate at basis row i is just v[pivot_i].
        Some(self.pivots.iter().map(|&pc| v[pc].clone()).collect())
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::Domain(format!(
                "ambient dimension mismatch: {} vs {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    /// Sum of subspaces via stacked rref.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut vectors: Vec<Vec<CycElem>> =
            (0..self.dim()).map(|i| self.basis_vector(i).to_vec()).collect();
        vectors.extend((0..other.dim()).map(|i| other.basis_vector(i).to_vec()));
        Ok(Subspace::from_spanning(&self.field, self.ambient, &vectors))
    }

    /// Intersection via the kernel of the concatenated coefficient map
    /// (Zassenhaus-style): a kernel vector `(a, b)` of `[Uᵀ | −Wᵀ]` encodes
    /// one element `Σ aᵢuᵢ = Σ bⱼwⱼ` of the intersection.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let (da, db) = (self.dim(), other.dim());
        if da == 0 || db == 0 {
            return Ok(Subspace::zero(&self.field, self.ambient));
        }
        let concat = Matrix::from_fn(&self.field, self.ambient, da + db, |r, c| {
            if c < da {
                self.basis.at(c, r).clone()
            } else {
                -other.basis.at(c - da, r)
            }
        });
        let ker = concat.kernel();
        let mut vectors = Vec::with_capacity(ker.dim());
        for k in 0..ker.dim() {
            let coeffs = ker.basis_vector(k);
            let mut v = vec![self.field.zero(); self.ambient];
            for (i, a) in coeffs.iter().take(da).enumerate() {
                if a.is_zero() {
                    continue;
                }
                for j in 0..self.ambient {
                    let b = self.basis.at(i, j);
                    if !b.is_zero() {
                        v[j] += &(b * a);
                    }
                }
            }
            vectors.push(v);
        }
        Ok(Subspace::from_spanning(&self.field, self.ambient, &vectors))
    }

    /// A matrix whose rows span the annihilator `V⁰ ⊆ (K^n)*`: the functionals
    /// (in the dual basis) vanishing on this subspace. `(n − dim V)` rows, in
    /// canonical rref form.
    pub fn annihilator_matrix(&self) -> Matrix {
        self.basis.kernel().basis.clone()
    }

    /// Image of this subspace under a linear map (matrix acting on columns).
    pub fn map_through(&self, f: &Matrix) -> Subspace {
        assert_eq!(f.cols(), self.ambient, "map domain mismatch");
        let vectors: Vec<Vec<CycElem>> =
            (0..self.dim()).map(|i| f.apply(self.basis_vector(i))).collect();
        Subspace::from_spanning(&self.field, f.rows(), &vectors)
    }
}

/// Preimage `{v : f(v) ∈ W}`, computed as the kernel of the composition of
/// `f` with the projection onto a complement of `W` (concretely: the
/// annihilator rows of `W` applied after `f`).
pub fn preimage(f: &Matrix, w: &Subspace) -> Result<Subspace> {
    if f.rows() != w.ambient_dim() {
        return Err(Error::Domain(format!(
            "preimage: map codomain {} does not match subspace ambient {}",
            f.rows(),
            w.ambient_dim()
        )));
    }
    if w.is_full() {
        return Ok(Subspace::full(f.field(), f.cols()));
    }
    let ann = w.annihilator_matrix();
    Ok(ann.matmul(f).kernel())
}

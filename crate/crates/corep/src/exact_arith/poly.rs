//! Univariate polynomial arithmetic and factorization.
//!
//! Two coefficient levels share this module:
//!
//! - *rational* polynomials, plain little-endian `Vec<Rational>` with a small
//!   `qp_*` toolkit (trim/divrem/gcd/derivative), used internally and by the
//!   extended-Euclid field inverse;
//! - [`CPoly`], polynomials over a cyclotomic field `Q(ζ_m)`, with monic gcds,
//!   linear composition, squarefree decomposition and Galois conjugation.
//!
//! Factorization is the classical exact pipeline:
//!
//! - over `Q`: squarefree decomposition, then Zassenhaus — reduce the
//!   primitive integer image modulo a good small prime, Berlekamp there,
//!   Hensel-lift the modular factors past twice the Landau–Mignotte bound,
//!   and recombine subsets;
//! - over `Q(ζ_m)` with `φ(m) ≥ 2`: Trager's norm method — shift by `s·ζ`
//!   until the norm `N(p) = ∏_{a ∈ (Z/m)^×} σ_a(p)` is squarefree, factor the
//!   norm over `Q`, and pull each rational factor back through a gcd.
//!
//! The routines here exist to split minimal polynomials of desk-scale
//! semisimple algebras; they are complete and exact but deliberately simple
//! (dense arithmetic, deterministic searches, no modular shortcuts beyond the
//! single Zassenhaus prime).

use super::{format_rational, rat_i, CycElem, CycField, Rational};
use crate::{Error, Result};
use num::bigint::BigInt;
use num::{Integer, One, Signed, ToPrimitive, Zero};
use std::sync::Arc;

// ---------------------------------------------------------------------------
// Rational polynomials: little-endian Vec<Rational>, canonical zero = empty.
// ---------------------------------------------------------------------------

pub(crate) fn qp_trimmed(p: &[Rational]) -> Vec<Rational> {
    let mut v = p.to_vec();
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

pub(crate) fn qp_deg(p: &[Rational]) -> Option<usize> {
    let t = qp_trimmed(p);
    if t.is_empty() {
        None
    } else {
        Some(t.len() - 1)
    }
}

pub(crate) fn qp_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    qp_trimmed(&out)
}

pub(crate) fn qp_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let (a, b) = (qp_trimmed(a), qp_trimmed(b));
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    qp_trimmed(&out)
}

/// Division with remainder; panics on a zero divisor.
pub(crate) fn qp_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let b = qp_trimmed(b);
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut rem = qp_trimmed(a);
    let db = b.len() - 1;
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let lead_inv = b[db].recip();
    let mut quot = vec![Rational::zero(); rem.len() - db];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + db] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            let t = &c * bj;
            rem[i + j] -= t;
        }
        quot[i] = c;
    }
    (qp_trimmed(&quot), qp_trimmed(&rem))
}

pub(crate) fn qp_monic(p: &[Rational]) -> Vec<Rational> {
    let t = qp_trimmed(p);
    if t.is_empty() {
        return t;
    }
    let inv = t.last().unwrap().recip();
    t.iter().map(|c| c * &inv).collect()
}

pub(crate) fn qp_derivative(p: &[Rational]) -> Vec<Rational> {
    let t = qp_trimmed(p);
    if t.len() <= 1 {
        return Vec::new();
    }
    qp_trimmed(
        &t.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * rat_i(i as i64))
            .collect::<Vec<_>>(),
    )
}

/// Monic gcd; `gcd(0, 0) = 0`.
pub(crate) fn qp_gcd_monic(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r0 = qp_trimmed(a);
    let mut r1 = qp_trimmed(b);
    while !r1.is_empty() {
        let (_, r) = qp_divrem(&r0, &r1);
        r0 = r1;
        r1 = r;
    }
    qp_monic(&r0)
}

/// Half extended Euclid: returns `(g, u)` with `u·a ≡ g (mod b)` and
/// `g = gcd(a, b)` up to a unit; the field inverse builds on this.
pub(crate) fn qp_half_ext_gcd(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r0 = qp_trimmed(a);
    let mut r1 = qp_trimmed(b);
    let mut s0: Vec<Rational> = vec![Rational::one()];
    let mut s1: Vec<Rational> = Vec::new();
    while !r1.is_empty() {
        let (q, r) = qp_divrem(&r0, &r1);
        let s_next = qp_sub(&s0, &qp_mul(&q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s_next;
    }
    (r0, s0)
}

fn qp_key(p: &[Rational]) -> (usize, Vec<String>) {
    let t = qp_trimmed(p);
    (t.len(), t.iter().map(format_rational).collect())
}

// ---------------------------------------------------------------------------
// Polynomials over Q(ζ_m).
// ---------------------------------------------------------------------------

/// Dense univariate polynomial over a cyclotomic field, little-endian
/// coefficients, canonical form trimmed (zero polynomial = no coefficients).
#[derive(Clone, Debug)]
pub struct CPoly {
    field: Arc<CycField>,
    coeffs: Vec<CycElem>,
}

impl PartialEq for CPoly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}
impl Eq for CPoly {}

impl CPoly {
    /// The zero polynomial.
    pub fn zero(field: &Arc<CycField>) -> CPoly {
        CPoly { field: Arc::clone(field), coeffs: Vec::new() }
    }

    /// The constant polynomial `1`.
    pub fn one(field: &Arc<CycField>) -> CPoly {
        CPoly::from_coeffs(field, vec![field.one()])
    }

    /// The monomial `t`.
    pub fn x(field: &Arc<CycField>) -> CPoly {
        CPoly::from_coeffs(field, vec![field.zero(), field.one()])
    }

    /// Build from little-endian coefficients (trailing zeros trimmed).
    pub fn from_coeffs(field: &Arc<CycField>, mut coeffs: Vec<CycElem>) -> CPoly {
        while coeffs.last().is_some_and(CycElem::is_zero) {
            coeffs.pop();
        }
        CPoly { field: Arc::clone(field), coeffs }
    }

    /// Lift a rational polynomial into `K[t]`.
    pub fn from_qpoly(field: &Arc<CycField>, p: &[Rational]) -> CPoly {
        CPoly::from_coeffs(field, p.iter().map(|c| field.from_rational(c.clone())).collect())
    }

    /// Drop to `Q[t]` when every coefficient is rational.
    pub fn to_qpoly(&self) -> Option<Vec<Rational>> {
        self.coeffs.iter().map(CycElem::as_rational).collect()
    }

    /// The coefficient field.
    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    /// Little-endian coefficients (trimmed).
    pub fn coeffs(&self) -> &[CycElem] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// True iff this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The coefficient of `t^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> CycElem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Leading coefficient; `None` for zero.
    pub fn leading(&self) -> Option<&CycElem> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &CPoly) -> CPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(&self.coeff(i) + &other.coeff(i));
        }
        CPoly::from_coeffs(&self.field, out)
    }

    pub fn sub(&self, other: &CPoly) -> CPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(&self.coeff(i) - &other.coeff(i));
        }
        CPoly::from_coeffs(&self.field, out)
    }

    pub fn mul(&self, other: &CPoly) -> CPoly {
        if self.is_zero() || other.is_zero() {
            return CPoly::zero(&self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        CPoly::from_coeffs(&self.field, out)
    }

    /// Multiply by a scalar.
    pub fn mul_scalar(&self, c: &CycElem) -> CPoly {
        CPoly::from_coeffs(&self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Division with remainder; panics on a zero divisor.
    pub fn divrem(&self, d: &CPoly) -> (CPoly, CPoly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.deg().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (CPoly::zero(&self.field), self.clone());
        }
        let lead_inv = d.leading().unwrap().inv().expect("nonzero leading coefficient");
        let mut quot = vec![self.field.zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                let t = &c * dj;
                rem[i + j] = &rem[i + j] - &t;
            }
            quot[i] = c;
        }
        (CPoly::from_coeffs(&self.field, quot), CPoly::from_coeffs(&self.field, rem))
    }

    /// Scale to leading coefficient 1 (zero stays zero).
    pub fn monic(&self) -> CPoly {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.mul_scalar(&l.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Half extended Euclid: returns `(g, u)` with `u·self ≡ g (mod other)`
    /// and `g = gcd(self, other)` (not normalized to monic).
    pub fn half_ext_gcd(&self, other: &CPoly) -> (CPoly, CPoly) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut u0 = CPoly::one(&self.field);
        let mut u1 = CPoly::zero(&self.field);
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let next_u = u0.sub(&q.mul(&u1));
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = next_u;
        }
        (r0, u0)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd_monic(a: &CPoly, b: &CPoly) -> CPoly {
        let mut r0 = a.clone();
        let mut r1 = b.clone();
        while !r1.is_zero() {
            let (_, r) = r0.divrem(&r1);
            r0 = r1;
            r1 = r;
        }
        r0.monic()
    }

    /// Formal derivative.
    pub fn derivative(&self) -> CPoly {
        if self.coeffs.len() <= 1 {
            return CPoly::zero(&self.field);
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale(&rat_i(i as i64)))
            .collect();
        CPoly::from_coeffs(&self.field, out)
    }

    /// Evaluate at a field element (Horner).
    pub fn eval(&self, x: &CycElem) -> CycElem {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// `p(a·t + b)` by Horner over `K[t]`.
    pub fn compose_linear(&self, a: &CycElem, b: &CycElem) -> CPoly {
        let lin = CPoly::from_coeffs(&self.field, vec![b.clone(), a.clone()]);
        let mut acc = CPoly::zero(&self.field);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&CPoly::from_coeffs(&self.field, vec![c.clone()]));
        }
        acc
    }

    /// Apply the Galois conjugation `σ_a` to every coefficient.
    pub fn galois(&self, a: u64) -> Result<CPoly> {
        let coeffs = self.coeffs.iter().map(|c| c.galois(a)).collect::<Result<Vec<_>>>()?;
        Ok(CPoly::from_coeffs(&self.field, coeffs))
    }

    /// `p / gcd(p, p′)` — the product of the distinct irreducible factors.
    pub fn squarefree_part(&self) -> CPoly {
        if self.is_zero() {
            return self.clone();
        }
        let g = CPoly::gcd_monic(self, &self.derivative());
        let (q, r) = self.divrem(&g);
        debug_assert!(r.is_zero());
        q.monic()
    }

    /// Squarefree decomposition: monic pairwise-coprime squarefree parts with
    /// their multiplicities, `p = lc · ∏ partᵢ^{multᵢ}`.
    pub fn squarefree_decomposition(&self) -> Vec<(CPoly, usize)> {
        let p = self.monic();
        if p.deg().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        // g accumulates factors with multiplicity ≥ i+1; w the distinct ones
        // still alive at multiplicity i.
        let mut g = CPoly::gcd_monic(&p, &p.derivative());
        let (mut w, r) = p.divrem(&g);
        debug_assert!(r.is_zero());
        w = w.monic();
        let mut i = 1usize;
        while w.deg().unwrap_or(0) > 0 {
            let wn = CPoly::gcd_monic(&g, &w);
            let (part, r) = w.divrem(&wn);
            debug_assert!(r.is_zero());
            if part.deg().unwrap_or(0) > 0 {
                out.push((part.monic(), i));
            }
            let (gn, r) = g.divrem(&wn);
            debug_assert!(r.is_zero());
            g = gn;
            w = wn;
            i += 1;
            assert!(i <= self.coeffs.len() + 1, "squarefree decomposition failed to terminate");
        }
        out
    }

    fn sort_key(&self) -> (usize, Vec<Vec<String>>) {
        (self.coeffs.len(), self.coeffs.iter().map(CycElem::to_strings).collect())
    }
}

// ---------------------------------------------------------------------------
// F_p polynomial arithmetic (small prime, u64 coefficients).
// ---------------------------------------------------------------------------

type FpPoly = Vec<u64>; // little-endian, trimmed, zero = empty

fn fpm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn fp_pow_scalar(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = fpm(r, a, p);
        }
        a = fpm(a, a, p);
        e >>= 1;
    }
    r
}

fn fp_inv_scalar(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "inverse of zero mod p");
    fp_pow_scalar(a, p - 2, p)
}

fn fp_trim(mut v: FpPoly) -> FpPoly {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn fp_deg(v: &[u64]) -> Option<usize> {
    if v.is_empty() {
        None
    } else {
        Some(v.len() - 1)
    }
}

fn fp_sub(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] = c % p;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] = (out[i] + p - c % p) % p;
    }
    fp_trim(out)
}

fn fp_mul(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if y != 0 {
                out[i + j] = (out[i + j] + fpm(x, y, p)) % p;
            }
        }
    }
    fp_trim(out)
}

fn fp_divrem(a: &[u64], b: &[u64], p: u64) -> (FpPoly, FpPoly) {
    let b = fp_trim(b.to_vec());
    assert!(!b.is_empty(), "F_p polynomial division by zero");
    let mut rem = fp_trim(a.to_vec());
    let db = b.len() - 1;
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let lead_inv = fp_inv_scalar(b[db], p);
    let mut quot = vec![0u64; rem.len() - db];
    for i in (0..quot.len()).rev() {
        let c = fpm(rem[i + db], lead_inv, p);
        if c == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            rem[i + j] = (rem[i + j] + p - fpm(c, bj, p)) % p;
        }
        quot[i] = c;
    }
    (fp_trim(quot), fp_trim(rem))
}

fn fp_monic(a: &[u64], p: u64) -> FpPoly {
    let a = fp_trim(a.to_vec());
    match a.last() {
        None => a,
        Some(&l) => {
            let inv = fp_inv_scalar(l, p);
            a.iter().map(|&c| fpm(c, inv, p)).collect()
        }
    }
}

fn fp_gcd(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    let mut r0 = fp_trim(a.to_vec());
    let mut r1 = fp_trim(b.to_vec());
    while !r1.is_empty() {
        let (_, r) = fp_divrem(&r0, &r1, p);
        r0 = r1;
        r1 = r;
    }
    fp_monic(&r0, p)
}

/// Bezout pair for coprime `g, h`: `σ·g + τ·h = 1`.
fn fp_bezout(g: &[u64], h: &[u64], p: u64) -> (FpPoly, FpPoly) {
    let mut r0 = fp_trim(g.to_vec());
    let mut r1 = fp_trim(h.to_vec());
    let mut s0: FpPoly = vec![1];
    let mut s1: FpPoly = Vec::new();
    let mut t0: FpPoly = Vec::new();
    let mut t1: FpPoly = vec![1];
    while !r1.is_empty() {
        let (q, r) = fp_divrem(&r0, &r1, p);
        let s_next = fp_sub(&s0, &fp_mul(&q, &s1, p), p);
        let t_next = fp_sub(&t0, &fp_mul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s_next;
        t0 = t1;
        t1 = t_next;
    }
    assert_eq!(fp_deg(&r0), Some(0), "fp_bezout requires coprime inputs");
    let inv = fp_inv_scalar(r0[0], p);
    let s = s0.iter().map(|&c| fpm(c, inv, p)).collect();
    let t = t0.iter().map(|&c| fpm(c, inv, p)).collect();
    (s, t)
}

fn fp_derivative(a: &[u64], p: u64) -> FpPoly {
    if a.len() <= 1 {
        return Vec::new();
    }
    fp_trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| fpm(c, (i as u64) % p, p))
            .collect(),
    )
}

fn fp_mul_mod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> FpPoly {
    let (_, r) = fp_divrem(&fp_mul(a, b, p), f, p);
    r
}

/// `x^e mod f` by binary exponentiation.
fn fp_pow_x_mod(e: u64, f: &[u64], p: u64) -> FpPoly {
    let mut result: FpPoly = vec![1];
    let mut base: FpPoly = {
        let (_, r) = fp_divrem(&[0, 1], f, p);
        r
    };
    let mut k = e;
    while k > 0 {
        if k & 1 == 1 {
            result = fp_mul_mod(&result, &base, f, p);
        }
        k >>= 1;
        if k > 0 {
            base = fp_mul_mod(&base, &base, f, p);
        }
    }
    result
}

fn fp_product(list: &[FpPoly], p: u64) -> FpPoly {
    let mut acc: FpPoly = vec![1];
    for f in list {
        acc = fp_mul(&acc, f, p);
    }
    acc
}

/// Kernel basis of an `n×n` matrix over `F_p` (`mat[row][col]`, acting on
/// column vectors).
fn fp_kernel(mut mat: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let rows = mat.len();
    let cols = if rows == 0 { return Vec::new() } else { mat[0].len() };
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        let Some(sel) = (r..rows).find(|&i| mat[i][c] % p != 0) else {
            continue;
        };
        mat.swap(r, sel);
        let inv = fp_inv_scalar(mat[r][c], p);
        for j in 0..cols {
            mat[r][j] = fpm(mat[r][j], inv, p);
        }
        for i in 0..rows {
            if i != r && mat[i][c] != 0 {
                let factor = mat[i][c];
                for j in 0..cols {
                    let t = fpm(factor, mat[r][j], p);
                    mat[i][j] = (mat[i][j] + p - t) % p;
                }
            }
        }
        pivots.push((r, c));
        r += 1;
        if r == rows {
            break;
        }
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::new();
    for fc in 0..cols {
        if pivot_cols.contains(&fc) {
            continue;
        }
        let mut v = vec![0u64; cols];
        v[fc] = 1;
        for &(pr, pc) in &pivots {
            v[pc] = (p - mat[pr][fc] % p) % p;
        }
        basis.push(v);
    }
    basis
}

// ---------------------------------------------------------------------------
// Berlekamp factorization of a monic squarefree polynomial over F_p.
// ---------------------------------------------------------------------------

/// Full splitting of a monic squarefree `f` into monic irreducibles over
/// `F_p`, deterministic (classical Berlekamp with exhaustive constants).
fn berlekamp(f: &[u64], p: u64) -> Vec<FpPoly> {
    let f = fp_monic(f, p);
    let n = fp_deg(&f).expect("nonzero input");
    if n == 1 {
        return vec![f];
    }
    // Frobenius matrix: row i holds x^{i·p} mod f.
    let xp = fp_pow_x_mod(p, &f, p);
    let mut rows: Vec<FpPoly> = Vec::with_capacity(n);
    rows.push(vec![1]);
    for _ in 1..n {
        let next = fp_mul_mod(rows.last().unwrap(), &xp, &f, p);
        rows.push(next);
    }
    // Kernel of (Frobenius − identity), acting on coefficient columns.
    let mut mat = vec![vec![0u64; n]; n];
    for (i, row) in rows.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            mat[j][i] = c;
        }
    }
    for i in 0..n {
        mat[i][i] = (mat[i][i] + p - 1) % p;
    }
    let basis = fp_kernel(mat, p);
    let r = basis.len();
    if r == 1 {
        return vec![f];
    }
    let mut factors: Vec<FpPoly> = vec![f];
    for v in &basis {
        if factors.len() == r {
            break;
        }
        let v = fp_trim(v.clone());
        if fp_deg(&v).unwrap_or(0) == 0 {
            continue; // constants never split anything
        }
        let mut refined: Vec<FpPoly> = Vec::new();
        for u in &factors {
            if fp_deg(u) == Some(1) {
                refined.push(u.clone());
                continue;
            }
            let mut remaining = u.clone();
            for c in 0..p {
                if fp_deg(&remaining).unwrap_or(0) == 0 {
                    break;
                }
                let mut vc = v.clone();
                if vc.is_empty() {
                    vc = vec![0];
                }
                vc[0] = (vc[0] + p - c) % p;
                let g = fp_gcd(&remaining, &fp_trim(vc), p);
                let dg = fp_deg(&g).unwrap_or(0);
                if dg >= 1 && dg < fp_deg(&remaining).unwrap() {
                    let (q, rr) = fp_divrem(&remaining, &g, p);
                    debug_assert!(rr.is_empty());
                    refined.push(g);
                    remaining = q;
                }
            }
            if fp_deg(&remaining).unwrap_or(0) >= 1 {
                refined.push(fp_monic(&remaining, p));
            }
        }
        factors = refined;
    }
    assert_eq!(factors.len(), r, "Berlekamp splitting incomplete");
    let mut factors: Vec<FpPoly> = factors.iter().map(|u| fp_monic(u, p)).collect();
    factors.sort();
    factors
}

// ---------------------------------------------------------------------------
// Integer polynomial helpers for the Hensel/Zassenhaus stage.
// ---------------------------------------------------------------------------

fn z_trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn z_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    z_trim(out)
}

fn z_sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    z_trim(out)
}

fn z_mod_reduce(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    z_trim(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn z_to_fp(a: &[BigInt], p: u64) -> FpPoly {
    let pb = BigInt::from(p);
    fp_trim(a.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect())
}

/// Symmetric representative: coefficients mapped into `(−m/2, m/2]`.
fn z_balanced(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    z_trim(
        a.iter()
            .map(|c| {
                let mut r = c.mod_floor(m);
                if &r * 2 > *m {
                    r -= m;
                }
                r
            })
            .collect(),
    )
}

fn z_content(a: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
    }
    g
}

fn z_primitive(a: &[BigInt]) -> Vec<BigInt> {
    let a = z_trim(a.to_vec());
    if a.is_empty() {
        return a;
    }
    let mut g = z_content(&a);
    if a.last().unwrap().is_negative() {
        g = -g;
    }
    a.iter().map(|c| c / &g).collect()
}

fn z_norm1(a: &[BigInt]) -> BigInt {
    a.iter().map(Signed::abs).sum()
}

fn z_to_qpoly(a: &[BigInt]) -> Vec<Rational> {
    a.iter().map(|c| Rational::from(c.clone())).collect()
}

/// Clear denominators of a rational polynomial: the primitive integer
/// polynomial with the same roots and positive leading coefficient.
fn q_clear_denominators(p: &[Rational]) -> Vec<BigInt> {
    let p = qp_trimmed(p);
    let mut d = BigInt::one();
    for c in &p {
        d = d.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p.iter().map(|c| (c * Rational::from(d.clone())).to_integer()).collect();
    z_primitive(&ints)
}

// ---------------------------------------------------------------------------
// Hensel lifting (linear steps, monic factors, divide-and-conquer tree).
// ---------------------------------------------------------------------------

/// Lift the coprime monic factorization `F ≡ g₀·h₀ (mod p)` to
/// `F ≡ G·H (mod p^k)`, all monic, coefficients reduced into `[0, p^k)`.
fn hensel_pair(f_target: &[BigInt], g0: &[u64], h0: &[u64], p: u64, k: usize) -> (Vec<BigInt>, Vec<BigInt>) {
    let (sigma, tau) = fp_bezout(g0, h0, p);
    let pb = BigInt::from(p);
    let mut modulus = pb.clone();
    let mut g: Vec<BigInt> = g0.iter().map(|&c| BigInt::from(c)).collect();
    let mut h: Vec<BigInt> = h0.iter().map(|&c| BigInt::from(c)).collect();
    for _ in 1..k {
        let next = &modulus * &pb;
        // error = (F − G·H)/p^j, reduced mod p
        let prod = z_mul(&g, &h);
        let diff = z_mod_reduce(&z_sub(f_target, &prod), &next);
        let ebar: FpPoly = fp_trim(
            diff.iter()
                .map(|c| {
                    let (q, r) = c.div_rem(&modulus);
                    assert!(r.is_zero(), "Hensel error term not divisible by p^j");
                    q.mod_floor(&pb).to_u64().unwrap()
                })
                .collect(),
        );
        if !ebar.is_empty() {
            // Solve Δg·h₀ + Δh·g₀ ≡ ē (mod p) with deg Δg < deg g₀.
            let (_, dg) = fp_divrem(&fp_mul(&tau, &ebar, p), g0, p);
            let num = fp_sub(&ebar, &fp_mul(&dg, h0, p), p);
            let (dh, rem) = fp_divrem(&num, g0, p);
            assert!(rem.is_empty(), "Hensel correction division must be exact");
            let _ = &sigma; // Bezout partner folded into the exact division above
            for (i, &c) in dg.iter().enumerate() {
                if c != 0 {
                    if g.len() <= i {
                        g.resize(i + 1, BigInt::zero());
                    }
                    g[i] = (&g[i] + &modulus * BigInt::from(c)).mod_floor(&next);
                }
            }
            for (i, &c) in dh.iter().enumerate() {
                if c != 0 {
                    if h.len() <= i {
                        h.resize(i + 1, BigInt::zero());
                    }
                    h[i] = (&h[i] + &modulus * BigInt::from(c)).mod_floor(&next);
                }
            }
        }
        modulus = next;
    }
    (z_mod_reduce(&g, &modulus), z_mod_reduce(&h, &modulus))
}

/// Lift all modular factors of the monic `F` (mod `p^k`) through a balanced
/// product tree; returns monic lifts in the order of `facs`.
fn hensel_tree(f_target: &[BigInt], facs: &[FpPoly], p: u64, k: usize) -> Vec<Vec<BigInt>> {
    if facs.len() == 1 {
        return vec![f_target.to_vec()];
    }
    let half = facs.len() / 2;
    let g0 = fp_product(&facs[..half], p);
    let h0 = fp_product(&facs[half..], p);
    let (g, h) = hensel_pair(f_target, &g0, &h0, p, k);
    let mut out = hensel_tree(&g, &facs[..half], p, k);
    out.extend(hensel_tree(&h, &facs[half..], p, k));
    out
}

// ---------------------------------------------------------------------------
// Zassenhaus over Q.
// ---------------------------------------------------------------------------

fn small_primes_from(start: u64) -> impl Iterator<Item = u64> {
    (start..).filter(|&n| {
        if n < 2 {
            return false;
        }
        let mut d = 2u64;
        while d * d <= n {
            if n % d == 0 {
                return false;
            }
            d += 1;
        }
        true
    })
}

/// Factor a monic squarefree rational polynomial into monic irreducibles
/// over `Q` (deterministically ordered).
fn zassenhaus_monic_squarefree(fq: &[Rational]) -> Vec<Vec<Rational>> {
    let fq = qp_monic(fq);
    let n = qp_deg(&fq).expect("nonzero polynomial");
    if n <= 1 {
        return vec![fq];
    }
    let g = q_clear_denominators(&fq); // primitive, positive leading coeff
    let lead = g.last().unwrap().clone();

    // A prime where the reduction stays squarefree of full degree. Only
    // finitely many primes divide lc·disc, so this search terminates fast.
    let mut chosen = None;
    for p in small_primes_from(3).take_while(|&p| p < 1_000_000) {
        if (&lead).mod_floor(&BigInt::from(p)).is_zero() {
            continue;
        }
        let gp = z_to_fp(&g, p);
        if fp_deg(&gp) != Some(n) {
            continue;
        }
        let d = fp_gcd(&gp, &fp_derivative(&gp, p), p);
        if fp_deg(&d) == Some(0) {
            chosen = Some(p);
            break;
        }
    }
    let p = chosen.expect("no squarefree prime found for a squarefree rational polynomial");

    let modular = berlekamp(&fp_monic(&z_to_fp(&g, p), p), p);
    if modular.len() == 1 {
        return vec![fq];
    }

    // Landau–Mignotte style bound: any candidate lc·∏-subset product has
    // coefficients bounded by 2^n · ‖g‖₁ · |lc|; lift until p^k exceeds twice
    // that so balanced representatives are exact.
    let bound: BigInt = (BigInt::one() << n) * z_norm1(&g) * lead.abs();
    let mut k = 1usize;
    let mut pk = BigInt::from(p);
    while pk <= &bound * 2 {
        pk *= BigInt::from(p);
        k += 1;
    }

    // Monic image of g mod p^k.
    let lead_inv = {
        let e = lead.extended_gcd(&pk);
        assert!(e.gcd.is_one(), "leading coefficient invertible mod p^k");
        e.x.mod_floor(&pk)
    };
    let f_monic: Vec<BigInt> = z_mod_reduce(
        &g.iter().map(|c| (c * &lead_inv).mod_floor(&pk)).collect::<Vec<_>>(),
        &pk,
    );
    let mut live = hensel_tree(&f_monic, &modular, p, k);
    live.sort();

    let mut g_rem = g;
    let mut out: Vec<Vec<Rational>> = Vec::new();
    let mut size = 1usize;
    while 2 * size <= live.len() {
        let mut found = None;
        let indices: Vec<usize> = (0..live.len()).collect();
        let mut combo = Vec::new();
        subset_search(&indices, size, 0, &mut combo, &mut |subset| {
            let lc = g_rem.last().unwrap().clone();
            let mut cand: Vec<BigInt> = vec![lc.mod_floor(&pk)];
            for &i in subset {
                cand = z_mod_reduce(&z_mul(&cand, &live[i]), &pk);
            }
            let cand = z_primitive(&z_balanced(&cand, &pk));
            if cand.is_empty() || z_trim(cand.clone()).len() < 2 {
                return false;
            }
            let (q, r) = qp_divrem(&z_to_qpoly(&g_rem), &z_to_qpoly(&cand));
            if r.is_empty() {
                found = Some((subset.to_vec(), cand, q));
                true
            } else {
                false
            }
        });
        match found {
            Some((subset, cand, quot)) => {
                out.push(qp_monic(&z_to_qpoly(&cand)));
                g_rem = q_clear_denominators(&quot);
                let keep: Vec<Vec<BigInt>> = live
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, f)| f.clone())
                    .collect();
                live = keep;
            }
            None => size += 1,
        }
    }
    if qp_deg(&z_to_qpoly(&g_rem)).unwrap_or(0) >= 1 {
        out.push(qp_monic(&z_to_qpoly(&g_rem)));
    }
    out.sort_by_key(|f| qp_key(f));
    debug_assert_eq!(
        qp_deg(&out.iter().fold(vec![Rational::one()], |acc, f| qp_mul(&acc, f))),
        Some(n),
        "factor degrees must sum to the input degree"
    );
    out
}

/// Depth-first subset enumeration in lexicographic order; stops early when
/// the visitor returns `true`.
fn subset_search(
    indices: &[usize],
    size: usize,
    start: usize,
    combo: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if combo.len() == size {
        return visit(combo);
    }
    for i in start..indices.len() {
        combo.push(indices[i]);
        if subset_search(indices, size, i + 1, combo, visit) {
            combo.pop();
            return true;
        }
        combo.pop();
    }
    false
}

/// Factor an arbitrary nonzero rational polynomial into monic irreducibles
/// with multiplicities (constant content dropped), deterministically ordered.
pub fn factor_over_q(p: &[Rational]) -> Vec<(Vec<Rational>, usize)> {
    let p = qp_trimmed(p);
    assert!(!p.is_empty(), "cannot factor the zero polynomial");
    if p.len() == 1 {
        return Vec::new();
    }
    // Squarefree decomposition by repeated gcds (characteristic 0).
    let p = qp_monic(&p);
    let mut out = Vec::new();
    let mut g = qp_gcd_monic(&p, &qp_derivative(&p));
    let (mut w, _) = qp_divrem(&p, &g);
    let mut mult = 1usize;
    while qp_deg(&w).unwrap_or(0) > 0 {
        let wn = qp_gcd_monic(&g, &w);
        let (part, r) = qp_divrem(&w, &wn);
        debug_assert!(r.is_empty());
        if qp_deg(&part).unwrap_or(0) > 0 {
            for fac in zassenhaus_monic_squarefree(&part) {
                out.push((fac, mult));
            }
        }
        let (gn, r) = qp_divrem(&g, &wn);
        debug_assert!(r.is_empty());
        g = gn;
        w = wn;
        mult += 1;
    }
    out.sort_by(|a, b| qp_key(&a.0).cmp(&qp_key(&b.0)).then(a.1.cmp(&b.1)));
    out
}

// ---------------------------------------------------------------------------
// Trager's method over Q(ζ_m).
// ---------------------------------------------------------------------------

/// Factor a monic squarefree polynomial over `Q(ζ_m)` (field degree ≥ 2) by
/// the norm method.
fn trager_monic_squarefree(p: &CPoly) -> Result<Vec<CPoly>> {
    let field = p.field().clone();
    let m = field.order();
    let deg = p.deg().expect("nonzero polynomial");
    if deg == 1 {
        return Ok(vec![p.monic()]);
    }
    let zeta = field.zeta();
    let one = field.one();
    // Only finitely many shifts make the norm non-squarefree (one per pair of
    // roots conjugate up to a ζ-multiple), so this bound is generous.
    let shift_limit = (deg * deg * field.degree() + 8) as i64;
    for s in 0..=shift_limit {
        let shift = zeta.scale(&rat_i(s));
        let shifted = p.compose_linear(&one, &(-&shift)); // p(t − sζ)
        let mut norm = CPoly::one(&field);
        for a in 1..=m {
            if a.gcd(&m) == 1 {
                norm = norm.mul(&shifted.galois(a)?);
            }
        }
        let nq = norm
            .to_qpoly()
            .expect("a full Galois norm always has rational coefficients");
        let d = qp_gcd_monic(&nq, &qp_derivative(&nq));
        if qp_deg(&d) != Some(0) {
            continue;
        }
        let rational_factors = zassenhaus_monic_squarefree(&qp_monic(&nq));
        let mut out = Vec::new();
        for fq in &rational_factors {
            let lifted = CPoly::from_qpoly(&field, fq).compose_linear(&one, &shift);
            let g = CPoly::gcd_monic(p, &lifted);
            if g.deg().unwrap_or(0) >= 1 {
                out.push(g.monic());
            }
        }
        debug_assert_eq!(
            out.iter().map(|f| f.deg().unwrap()).sum::<usize>(),
            deg,
            "Trager factors must multiply back to the input"
        );
        out.sort_by_key(CPoly::sort_key);
        return Ok(out);
    }
    Err(Error::Domain(
        "no squarefree Trager shift found (exceeded the theoretical bound; this indicates a bug)"
            .into(),
    ))
}

/// Factor a nonzero polynomial over its cyclotomic field into monic
/// irreducibles with multiplicities, deterministically ordered.
pub fn factor_over_field(p: &CPoly) -> Result<Vec<(CPoly, usize)>> {
    if p.is_zero() {
        return Err(Error::Domain("cannot factor the zero polynomial".into()));
    }
    if p.deg() == Some(0) {
        return Ok(Vec::new());
    }
    let field = p.field().clone();
    let mut out = Vec::new();
    for (part, mult) in p.squarefree_decomposition() {
        let irreducibles = if field.degree() == 1 {
            let fq = part
                .to_qpoly()
                .expect("degree-1 cyclotomic fields contain only rationals");
            zassenhaus_monic_squarefree(&fq)
                .into_iter()
                .map(|f| CPoly::from_qpoly(&field, &f))
                .collect()
        } else {
            trager_monic_squarefree(&part)?
        };
        for f in irreducibles {
            out.push((f, mult));
        }
    }
    out.sort_by(|a, b| a.0.sort_key().cmp(&b.0.sort_key()).then(a.1.cmp(&b.1)));
    Ok(out)
}

/// The distinct roots of `p` lying in its coefficient field (read off the
/// monic linear factors), deterministically ordered.
pub fn roots_in_field(p: &CPoly) -> Result<Vec<CycElem>> {
    let factors = factor_over_field(p)?;
    let mut roots = Vec::new();
    for (f, _) in factors {
        if f.deg() == Some(1) {
            roots.push(-&f.coeff(0));
        }
    }
    Ok(roots)
}

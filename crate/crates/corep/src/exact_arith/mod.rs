//! Exact arithmetic over `Q` and over cyclotomic fields `Q(ζ_m)`.
//!
//! Every coefficient in the crate is either a [`Rational`] (arbitrary-precision,
//! always reduced) or a [`CycElem`]: an element of `Q(ζ_m)` stored in the power
//! basis `1, ζ, …, ζ^{φ(m)−1}` and kept fully reduced modulo the `m`-th
//! cyclotomic polynomial `Φ_m`. Equality is coefficient-wise; there is no
//! floating point and no approximation anywhere.
//!
//! One analysis uses one ambient field: the input fixes `m` once and every
//! derived quantity lives in `Q(ζ_m)`. Mixing elements of different fields is
//! a caller bug and panics with a descriptive message; the deserialization
//! layer rejects mixed-field inputs with a proper error before arithmetic can
//! ever see them.
//!
//! The [`poly`] submodule carries the univariate polynomial arithmetic and the
//! factorization routines (Berlekamp + Hensel + Zassenhaus over `Q`, Trager
//! norms over `Q(ζ_m)`) that the semisimple-decomposition code needs for
//! minimal polynomials. It is sized and tested for that workload — minimal
//! polynomials of desk-scale algebras — not tuned as a general-purpose
//! factorization engine.

pub mod poly;

use crate::{Error, Result};
use num::bigint::BigInt;
use num::{BigRational, Integer, One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::Arc;

/// Arbitrary-precision rational number, always stored reduced with positive
/// denominator (the representation `num` maintains).
pub type Rational = BigRational;

/// Shorthand for the rational `n/d`.
///
/// Panics if `d == 0`; intended for literals in code and tests.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for the integer rational `n`.
pub fn rat_i(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// Parse `"p/q"` or `"p"` (optional sign, arbitrary precision) into a reduced
/// rational. Rejects empty parts and zero denominators.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num_s, den_s) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let numer = BigInt::from_str(num_s)
        .map_err(|_| Error::Parse(format!("invalid rational numerator in {s:?}")))?;
    let denom = match den_s {
        Some(d) => BigInt::from_str(d)
            .map_err(|_| Error::Parse(format!("invalid rational denominator in {s:?}")))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(numer, denom))
}

/// Format a rational as `"p/q"`, or `"p"` when the denominator is 1.
/// This is the on-disk coefficient format; round-trips bit-exactly through
/// [`parse_rational`].
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Euler's totient `φ(m)` by trial-division factorization (`m ≥ 1`).
pub fn euler_phi(m: u64) -> u64 {
    assert!(m >= 1, "euler_phi requires m >= 1");
    let mut n = m;
    let mut phi = m;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            phi = phi / p * (p - 1);
        }
        p += 1;
    }
    if n > 1 {
        phi = phi / n * (n - 1);
    }
    phi
}

/// All positive divisors of `m`, ascending.
fn divisors(m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= m {
        if m % d == 0 {
            out.push(d);
            if d != m / d {
                out.push(m / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

/// Exact division of integer polynomials with a *monic* divisor
/// (little-endian coefficients). Panics if the remainder is nonzero —
/// callers only divide where exactness is a theorem.
fn zpoly_div_exact_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    assert!(!den.is_empty() && den.last().unwrap().is_one(), "divisor must be monic");
    let dn = den.len() - 1;
    let mut rem: Vec<BigInt> = num.to_vec();
    if rem.len() < den.len() {
        assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
        return vec![BigInt::zero()];
    }
    let qlen = rem.len() - dn;
    let mut quot = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn].clone();
        if c.is_zero() {
            continue;
        }
        quot[i] = c.clone();
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
    }
    assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
    while quot.len() > 1 && quot.last().unwrap().is_zero() {
        quot.pop();
    }
    quot
}

/// The `m`-th cyclotomic polynomial `Φ_m` as little-endian integer
/// coefficients (degree `φ(m)`, monic), computed by iterated exact division of
/// `x^m − 1` by `Φ_d` over the proper divisors `d | m`.
pub fn cyclotomic_polynomial(m: u64) -> Vec<BigInt> {
    assert!(m >= 1, "cyclotomic_polynomial requires m >= 1");
    let mut table: BTreeMap<u64, Vec<BigInt>> = BTreeMap::new();
    for d in divisors(m) {
        // x^d − 1
        let mut num = vec![BigInt::zero(); (d + 1) as usize];
        num[0] = -BigInt::one();
        num[d as usize] = BigInt::one();
        let mut phi_d = num;
        for e in divisors(d) {
            if e < d {
                phi_d = zpoly_div_exact_monic(&phi_d, &table[&e]);
            }
        }
        table.insert(d, phi_d);
    }
    table.remove(&m).unwrap()
}

/// The field `Q(ζ_m)`: order `m`, degree `φ(m)`, and the reduction modulus
/// `Φ_m`. Constructed once per analysis and shared via [`Arc`]; all elements
/// hold a handle to their field.
#[derive(Debug)]
pub struct CycField {
    m: u64,
    degree: usize,
    /// Monic `Φ_m`, little-endian, length `degree + 1`, rational coefficients
    /// (integral in fact; stored rational for uniform arithmetic).
    modulus: Vec<Rational>,
}

impl PartialEq for CycField {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m
    }
}
impl Eq for CycField {}

impl CycField {
    /// Construct `Q(ζ_m)`. `m = 1` and `m = 2` give `Q` itself (degree 1).
    pub fn new(m: u64) -> Result<Arc<CycField>> {
        if m == 0 {
            return Err(Error::Domain("cyclotomic order must be positive".into()));
        }
        let phi = cyclotomic_polynomial(m);
        let degree = phi.len() - 1;
        let modulus = phi.into_iter().map(Rational::from).collect();
        Ok(Arc::new(CycField { m, degree, modulus }))
    }

    /// The cyclotomic order `m`.
    pub fn order(&self) -> u64 {
        self.m
    }

    /// The extension degree `φ(m)` over `Q`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The reduction modulus `Φ_m` (monic, little-endian).
    pub fn modulus(&self) -> &[Rational] {
        &self.modulus
    }

    /// The zero element.
    pub fn zero(self: &Arc<Self>) -> CycElem {
        CycElem {
            field: Arc::clone(self),
            coeffs: vec![Rational::zero(); self.degree],
        }
    }

    /// The unit element.
    pub fn one(self: &Arc<Self>) -> CycElem {
        self.from_rational(Rational::one())
    }

    /// Embed a rational into the field.
    pub fn from_rational(self: &Arc<Self>, r: Rational) -> CycElem {
        let mut coeffs = vec![Rational::zero(); self.degree];
        coeffs[0] = r;
        CycElem { field: Arc::clone(self), coeffs }
    }

    /// Embed a small integer into the field.
    pub fn from_int(self: &Arc<Self>, n: i64) -> CycElem {
        self.from_rational(rat_i(n))
    }

    /// The distinguished primitive `m`-th root of unity `ζ_m`.
    /// (For `m ∈ {1, 2}` this is the rational `1` resp. `−1`.)
    pub fn zeta(self: &Arc<Self>) -> CycElem {
        self.reduce_poly(vec![Rational::zero(), Rational::one()])
    }

    /// `ζ_m^k` in canonical form; `k` may be negative (`ζ^{−1} = ζ^{m−1}`).
    pub fn root_of_unity(self: &Arc<Self>, k: i64) -> CycElem {
        let k = k.rem_euclid(self.m as i64) as u64;
        self.zeta().pow(k)
    }

    /// Reduce an arbitrary-length little-endian coefficient vector modulo
    /// `Φ_m` into a canonical element.
    pub fn reduce_poly(self: &Arc<Self>, mut p: Vec<Rational>) -> CycElem {
        let d = self.degree;
        if p.len() > d {
            for i in (d..p.len()).rev() {
                if p[i].is_zero() {
                    continue;
                }
                let c = std::mem::replace(&mut p[i], Rational::zero());
                // x^i = x^{i−d} · x^d ≡ −x^{i−d} · Σ_{j<d} Φ_j x^j
                for j in 0..d {
                    if !self.modulus[j].is_zero() {
                        let t = &c * &self.modulus[j];
                        p[i - d + j] -= t;
                    }
                }
            }
        }
        p.truncate(d);
        p.resize(d, Rational::zero());
        CycElem { field: Arc::clone(self), coeffs: p }
    }

    /// Element from exactly `φ(m)` power-basis coefficients.
    pub fn from_coeffs(self: &Arc<Self>, coeffs: Vec<Rational>) -> Result<CycElem> {
        if coeffs.len() != self.degree {
            return Err(Error::Domain(format!(
                "expected {} power-basis coefficients for Q(zeta_{}), got {}",
                self.degree,
                self.m,
                coeffs.len()
            )));
        }
        Ok(CycElem { field: Arc::clone(self), coeffs })
    }
}

/// An element of `Q(ζ_m)` in canonical (fully reduced) power-basis form.
/// Arithmetic is via the `&a + &b`-style reference operators; elements of
/// different fields must never meet (panic).
#[derive(Clone)]
pub struct CycElem {
    field: Arc<CycField>,
    coeffs: Vec<Rational>,
}

impl PartialEq for CycElem {
    fn eq(&self, other: &Self) -> bool {
        self.assert_same_field(other);
        self.coeffs == other.coeffs
    }
}
impl Eq for CycElem {}

impl fmt::Debug for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycElem[m={}]({})", self.field.m, self)
    }
}

impl fmt::Display for CycElem {
    /// Human-readable form like `1/2 - z^2` with `z = ζ_m`; used in reports
    /// and DOT labels, not for serialization.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = c.is_negative();
            if first {
                if sign {
                    write!(f, "-")?;
                }
                first = false;
            } else if sign {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_str = format_rational(&mag);
            if i == 0 {
                write!(f, "{coeff_str}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{coeff_str}*")?;
                }
                if i == 1 {
                    write!(f, "z")?;
                } else {
                    write!(f, "z^{i}")?;
                }
            }
        }
        Ok(())
    }
}

impl CycElem {
    /// The owning field handle.
    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    /// Power-basis coefficients (length `φ(m)`).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    fn assert_same_field(&self, other: &CycElem) {
        assert!(
            self.field.m == other.field.m,
            "field mismatch: Q(zeta_{}) vs Q(zeta_{})",
            self.field.m,
            other.field.m
        );
    }

    /// True iff this is the zero element.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// True iff this is the unit element.
    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational part if the element lies in `Q ⊆ Q(ζ_m)`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// True iff the element lies in the prime field `Q`.
    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// Multiply by a rational scalar.
    pub fn scale(&self, r: &Rational) -> CycElem {
        CycElem {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse by the extended Euclidean algorithm against
    /// `Φ_m`. Errors on zero.
    pub fn inv(&self) -> Result<CycElem> {
        if self.is_zero() {
            return Err(Error::Domain("division by zero in Q(zeta_m)".into()));
        }
        // Extended Euclid in Q[x]: find u with u·a ≡ gcd (a, Φ_m) = const.
        let a: Vec<Rational> = self.coeffs.clone();
        let (g, u) = poly::qp_half_ext_gcd(&a, &self.field.modulus);
        // a is nonzero of degree < deg Φ_m and Φ_m is irreducible, so the gcd
        // is a nonzero constant.
        assert!(g.len() == 1 && !g[0].is_zero(), "cyclotomic modulus not coprime to nonzero element");
        let ginv = g[0].recip();
        let coeffs: Vec<Rational> = u.iter().map(|c| c * &ginv).collect();
        Ok(self.field.reduce_poly(coeffs))
    }

    /// `self / other`; errors if `other` is zero.
    pub fn div_exact(&self, other: &CycElem) -> Result<CycElem> {
        Ok(self * &other.inv()?)
    }

    /// `self^k` for `k ≥ 0` by binary exponentiation.
    pub fn pow(&self, k: u64) -> CycElem {
        let mut result = self.field.one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Multiplicative order when the element is a root of unity, else `None`.
    ///
    /// The torsion of `Q(ζ_m)^×` is generated by `−ζ_m` and has order
    /// `lcm(2, m)`, so iterating powers that far is a complete test.
    pub fn order_of_root_of_unity(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let bound = if self.field.m % 2 == 0 { self.field.m } else { 2 * self.field.m };
        let mut acc = self.clone();
        for k in 1..=bound {
            if acc.is_one() {
                return Some(k);
            }
            acc = &acc * self;
        }
        None
    }

    /// The Galois conjugate `σ_a` with `σ_a(ζ) = ζ^a`; requires
    /// `gcd(a, m) = 1`.
    pub fn galois(&self, a: u64) -> Result<CycElem> {
        let m = self.field.m;
        if a.gcd(&m) != 1 {
            return Err(Error::Domain(format!(
                "galois exponent {a} not coprime to cyclotomic order {m}"
            )));
        }
        let zeta = self.field.zeta();
        let mut result = self.field.zero();
        let mut zpow = self.field.one(); // ζ^{a·i} accumulated incrementally
        let step = zeta.pow(a % m);
        for c in &self.coeffs {
            if !c.is_zero() {
                result += &zpow.scale(c);
            }
            zpow = &zpow * &step;
        }
        Ok(result)
    }

    /// Serialize to the on-disk form: one `"p/q"`/`"p"` string per power-basis
    /// coefficient, in order `1, ζ, …, ζ^{φ(m)−1}`.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(format_rational).collect()
    }

    /// Deserialize from the on-disk form; the length must be exactly `φ(m)`.
    pub fn from_strings(field: &Arc<CycField>, parts: &[String]) -> Result<CycElem> {
        if parts.len() != field.degree {
            return Err(Error::Parse(format!(
                "coefficient vector has length {}, expected {} for Q(zeta_{})",
                parts.len(),
                field.degree,
                field.m
            )));
        }
        let coeffs = parts.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?;
        field.from_coeffs(coeffs)
    }

    /// Total serialized length in bytes, the pivot-selection size measure used
    /// by the row reduction (smallest-entry pivoting).
    pub fn serialized_size(&self) -> usize {
        self.to_strings().iter().map(String::len).sum()
    }
}

impl AddAssign<&CycElem> for CycElem {
    fn add_assign(&mut self, rhs: &CycElem) {
        self.assert_same_field(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl SubAssign<&CycElem> for CycElem {
    fn sub_assign(&mut self, rhs: &CycElem) {
        self.assert_same_field(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}

impl Add for &CycElem {
    type Output = CycElem;
    fn add(self, rhs: &CycElem) -> CycElem {
        self.assert_same_field(rhs);
        CycElem {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &CycElem {
    type Output = CycElem;
    fn sub(self, rhs: &CycElem) -> CycElem {
        self.assert_same_field(rhs);
        CycElem {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &CycElem {
    type Output = CycElem;
    fn neg(self) -> CycElem {
        CycElem {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(Neg::neg).collect(),
        }
    }
}

impl Mul for &CycElem {
    type Output = CycElem;
    fn mul(self, rhs: &CycElem) -> CycElem {
        self.assert_same_field(rhs);
        let d = self.field.degree;
        let mut prod = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        self.field.reduce_poly(prod)
    }
}

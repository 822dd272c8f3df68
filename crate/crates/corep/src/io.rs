//! The JSON structure-constant file format.
//!
//! A file describes a coalgebra — and, when the three algebra fields are all
//! present, a Hopf algebra — over `Q(ζ_m)` by sparse structure constants:
//!
//! ```json
//! {
//!   "name": "sweedler",
//!   "field": { "cyclotomic_order": 2 },
//!   "dim": 4,
//!   "basis_names": ["1", "g", "x", "gx"],
//!   "comul": [[0, 0, 0, ["1"]], [2, 2, 0, ["1"]], [2, 1, 2, ["1"]]],
//!   "counit": [["1"], ["1"], ["0"], ["0"]],
//!   "mul": [[0, 0, 0, ["1"]]],
//!   "unit": [["1"], ["0"], ["0"], ["0"]],
//!   "antipode": [[0, 0, ["1"]]]
//! }
//! ```
//!
//! Scalars are arrays of `φ(m)` rational strings (`"p/q"` or `"p"`) in the
//! power basis `1, ζ, …, ζ^{φ(m)−1}`; round-trips are bit-exact. All indices
//! are 0-based; unlisted entries are zero. A `comul` entry `[i, j, k, c]`
//! contributes `c·(e_j ⊗ e_k)` to `Δ(e_i)`; a `mul` entry `[i, j, k, c]`
//! contributes `c·e_k` to `e_i·e_j`; an `antipode` entry `[i, j, c]`
//! contributes `c·e_j` to `S(e_i)`. Either all of `mul`, `unit`, `antipode`
//! are present (Hopf input) or none (plain coalgebra).

use crate::coalgebra_core::{Algebra, Coalgebra};
use crate::exact_arith::{format_rational, parse_rational, CycElem, CycField};
use crate::hopf_core::HopfAlgebra;
use crate::linalg::Matrix;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// Default cap on the cyclotomic order accepted from input files: `Φ_m`
/// expansion and power-basis arithmetic grow with `φ(m)`, so unbounded
/// orders from untrusted files are refused.
pub const DEFAULT_MAX_CYCLOTOMIC: u64 = 512;

#[derive(Serialize, Deserialize)]
struct FieldSpec {
    cyclotomic_order: u64,
}

/// The document as stored on disk. Scalars are kept as string arrays here;
/// conversion to [`CycElem`] happens in [`load_coalgebra`] / [`load_hopf`].
#[derive(Serialize, Deserialize)]
struct Document {
    name: String,
    field: FieldSpec,
    dim: usize,
    basis_names: Vec<String>,
    comul: Vec<(usize, usize, usize, Vec<String>)>,
    counit: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mul: Option<Vec<(usize, usize, usize, Vec<String>)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    unit: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    antipode: Option<Vec<(usize, usize, Vec<String>)>>,
}

/// A loaded input: always a coalgebra, a full Hopf algebra when the file
/// carries the algebra data.
pub enum LoadedInput {
    Coalgebra(Coalgebra),
    Hopf(HopfAlgebra),
}

impl LoadedInput {
    pub fn coalgebra(&self) -> &Coalgebra {
        match self {
            LoadedInput::Coalgebra(c) => c,
            LoadedInput::Hopf(h) => h.coalgebra(),
        }
    }

    pub fn name(&self) -> &str {
        self.coalgebra().name()
    }
}

fn scalar_to_strings(c: &CycElem) -> Vec<String> {
    c.coeffs().iter().map(format_rational).collect()
}

fn scalar_from_strings(field: &Arc<CycField>, s: &[String]) -> Result<CycElem> {
    if s.len() != field.degree() {
        return Err(Error::Parse(format!(
            "scalar has {} coordinates, the field Q(zeta_{}) needs {}",
            s.len(),
            field.order(),
            field.degree()
        )));
    }
    let coeffs = s.iter().map(|t| parse_rational(t)).collect::<Result<Vec<_>>>()?;
    field.from_coeffs(coeffs)
}

fn check_index(i: usize, dim: usize, what: &str) -> Result<()> {
    if i >= dim {
        return Err(Error::Parse(format!(
            "{what} index {i} out of range for dimension {dim}"
        )));
    }
    Ok(())
}

fn parse_document(text: &str) -> Result<Document> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("malformed JSON input: {e}")))
}

fn realize(doc: &Document, max_cyclotomic: u64) -> Result<LoadedInput> {
    let m = doc.field.cyclotomic_order;
    if m > max_cyclotomic {
        return Err(Error::Parse(format!(
            "cyclotomic order {m} exceeds the cap {max_cyclotomic}"
        )));
    }
    let field = CycField::new(m)?;
    let dim = doc.dim;
    if doc.basis_names.len() != dim {
        return Err(Error::Parse(format!(
            "{} basis names for dimension {dim}",
            doc.basis_names.len()
        )));
    }
    if doc.counit.len() != dim {
        return Err(Error::Parse(format!(
            "counit has {} entries, expected {dim}",
            doc.counit.len()
        )));
    }
    let mut comul = Vec::with_capacity(doc.comul.len());
    for (i, j, k, c) in &doc.comul {
        check_index(*i, dim, "comul")?;
        check_index(*j, dim, "comul")?;
        check_index(*k, dim, "comul")?;
        comul.push((*i, *j, *k, scalar_from_strings(&field, c)?));
    }
    let counit = doc
        .counit
        .iter()
        .map(|c| scalar_from_strings(&field, c))
        .collect::<Result<Vec<_>>>()?;
    let coalgebra = Coalgebra::new(
        doc.name.clone(),
        &field,
        dim,
        doc.basis_names.clone(),
        comul,
        counit,
    )?;

    match (&doc.mul, &doc.unit, &doc.antipode) {
        (None, None, None) => Ok(LoadedInput::Coalgebra(coalgebra)),
        (Some(mul), Some(unit), Some(antipode)) => {
            if unit.len() != dim {
                return Err(Error::Parse(format!(
                    "unit has {} entries, expected {dim}",
                    unit.len()
                )));
            }
            let mut table = vec![field.zero(); dim * dim * dim];
            for (i, j, k, c) in mul {
                check_index(*i, dim, "mul")?;
                check_index(*j, dim, "mul")?;
                check_index(*k, dim, "mul")?;
                table[(i * dim + j) * dim + k] = scalar_from_strings(&field, c)?;
            }
            let unit_vec = unit
                .iter()
                .map(|c| scalar_from_strings(&field, c))
                .collect::<Result<Vec<_>>>()?;
            let algebra = Algebra::new(&field, dim, table, unit_vec);
            let mut s = Matrix::zero(&field, dim, dim);
            for (i, j, c) in antipode {
                check_index(*i, dim, "antipode")?;
                check_index(*j, dim, "antipode")?;
                s.set(*j, *i, scalar_from_strings(&field, c)?);
            }
            Ok(LoadedInput::Hopf(HopfAlgebra::new(coalgebra, algebra, s)?))
        }
        _ => Err(Error::Parse(
            "a Hopf input needs all three of mul, unit, antipode; a coalgebra input none".into(),
        )),
    }
}

/// Parse an input document from JSON text.
pub fn load_input(text: &str, max_cyclotomic: u64) -> Result<LoadedInput> {
    realize(&parse_document(text)?, max_cyclotomic)
}

/// Parse a plain coalgebra (a Hopf input degrades to its coalgebra).
pub fn load_coalgebra(text: &str, max_cyclotomic: u64) -> Result<Coalgebra> {
    match load_input(text, max_cyclotomic)? {
        LoadedInput::Coalgebra(c) => Ok(c),
        LoadedInput::Hopf(h) => Ok(h.coalgebra().clone()),
    }
}

/// Parse a Hopf-algebra input; plain coalgebras are refused.
pub fn load_hopf(text: &str, max_cyclotomic: u64) -> Result<HopfAlgebra> {
    match load_input(text, max_cyclotomic)? {
        LoadedInput::Hopf(h) => Ok(h),
        LoadedInput::Coalgebra(_) => Err(Error::Parse(
            "the input is a plain coalgebra (no mul/unit/antipode)".into(),
        )),
    }
}

fn document_of_coalgebra(c: &Coalgebra) -> Document {
    let n = c.dim();
    let field = c.field();
    let mut comul = Vec::new();
    for i in 0..n {
        let mut e = vec![field.zero(); n];
        e[i] = field.one();
        let d = c.delta_of(&e);
        for j in 0..n {
            for k in 0..n {
                let v = &d[j * n + k];
                if !v.is_zero() {
                    comul.push((i, j, k, scalar_to_strings(v)));
                }
            }
        }
    }
    let counit = (0..n)
        .map(|i| {
            let mut e = vec![field.zero(); n];
            e[i] = field.one();
            scalar_to_strings(&c.counit_of(&e))
        })
        .collect();
    Document {
        name: c.name().to_string(),
        field: FieldSpec {
            cyclotomic_order: field.order(),
        },
        dim: n,
        basis_names: c.basis_names().to_vec(),
        comul,
        counit,
        mul: None,
        unit: None,
        antipode: None,
    }
}

/// Serialize a plain coalgebra to the JSON format (pretty, deterministic).
pub fn save_coalgebra(c: &Coalgebra) -> String {
    finish(document_of_coalgebra(c))
}

/// Serialize a Hopf algebra to the JSON format (pretty, deterministic).
pub fn save_hopf(h: &HopfAlgebra) -> String {
    let n = h.dim();
    let mut doc = document_of_coalgebra(h.coalgebra());
    let mut mul = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = h.algebra().sc(i, j, k);
                if !v.is_zero() {
                    mul.push((i, j, k, scalar_to_strings(v)));
                }
            }
        }
    }
    let unit = h.unit_vector().iter().map(scalar_to_strings).collect();
    let mut antipode = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let v = h.antipode().at(j, i);
            if !v.is_zero() {
                antipode.push((i, j, scalar_to_strings(v)));
            }
        }
    }
    doc.mul = Some(mul);
    doc.unit = Some(unit);
    doc.antipode = Some(antipode);
    finish(doc)
}

fn finish(doc: Document) -> String {
    let mut out = serde_json::to_string_pretty(&doc).expect("document serialization");
    out.push('\n');
    out
}

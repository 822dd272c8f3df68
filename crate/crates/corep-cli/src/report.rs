//! The JSON analysis report: a deterministic, byte-stable summary of one
//! full pipeline run. Timing fields are present in the schema but always
//! null so that identical inputs produce identical bytes.

use corep::classify_builders::{extract_group_datum, GroupDatum, MuClass};
use corep::coalgebra_core::{coradical_filtration, Coalgebra};
use corep::exact_arith::format_rational;
use corep::fusion::fusion_ring;
use corep::hopf_core::HopfAlgebra;
use corep::io::LoadedInput;
use corep::quiver_analysis::{
    analyze_links, analyze_links_of_coalgebra, conjecture_4_11_report, to_dot, verdict_from,
    QuiverAnalysis, Verdict, VerdictKind,
};
use corep::{Error, Result};
use serde::Serialize;

#[derive(Serialize)]
pub struct InputInfo {
    pub name: String,
    pub sha256: String,
    pub kind: &'static str,
    pub dim: usize,
    pub cyclotomic_order: u64,
}

#[derive(Serialize)]
pub struct FusionReport {
    pub ranks: Vec<usize>,
    pub involution: Vec<usize>,
    /// `table[i][j][t]` = multiplicity of `C_t` in `C_i · C_j`.
    pub table: Vec<Vec<Vec<usize>>>,
}

#[derive(Serialize)]
pub struct QuiverReport {
    pub labels: Vec<String>,
    pub ranks: Vec<usize>,
    /// `arrows[i][j]` = number of arrows from vertex `j` to vertex `i`.
    pub arrows: Vec<Vec<usize>>,
}

#[derive(Serialize)]
pub struct ClassReport {
    pub vertices: Vec<usize>,
    pub label: String,
    pub dynkin: bool,
    pub euclidean: bool,
}

#[derive(Serialize)]
pub struct VerdictReport {
    pub kind: &'static str,
    pub criterion2: Option<bool>,
    pub criterion3: Option<bool>,
    pub criterion4: Option<bool>,
    pub conakayama: bool,
    pub offending: Vec<String>,
}

#[derive(Serialize)]
pub struct DatumReport {
    pub n: usize,
    pub g: String,
    pub q: Vec<String>,
    pub q_display: String,
    pub d: usize,
    pub mu_class: String,
    pub mu_raw: Vec<String>,
}

#[derive(Serialize)]
pub struct DegreeRowReport {
    pub index: usize,
    pub label: String,
    pub in_degree: usize,
    pub out_degree: usize,
    pub balanced: bool,
}

#[derive(Serialize)]
pub struct ConjectureReport {
    pub rows: Vec<DegreeRowReport>,
    pub unit_in_degree: usize,
    pub unit_in_divides_all: bool,
}

#[derive(Serialize)]
pub struct TimingReport {
    pub coradical_ms: Option<u64>,
    pub decomposition_ms: Option<u64>,
    pub quiver_ms: Option<u64>,
    pub fusion_ms: Option<u64>,
    pub verdict_ms: Option<u64>,
    pub datum_ms: Option<u64>,
}

#[derive(Serialize)]
pub struct AnalysisReport {
    pub input: InputInfo,
    /// Dimensions of the coradical filtration layers `H₀ ⊆ H₁ ⊆ …`.
    pub coradical_dims: Vec<usize>,
    pub simple_ranks: Vec<usize>,
    pub simple_dims: Vec<usize>,
    pub quiver: QuiverReport,
    pub separated: Vec<ClassReport>,
    pub verdict: VerdictReport,
    /// Present only for Hopf input.
    pub fusion: Option<FusionReport>,
    /// Present only for Hopf input of finite type.
    pub group_datum: Option<DatumReport>,
    pub conjecture: ConjectureReport,
    pub timing_ms: TimingReport,
}

pub fn verdict_kind_str(k: VerdictKind) -> &'static str {
    match k {
        VerdictKind::Cosemisimple => "cosemisimple",
        VerdictKind::Finite => "finite",
        VerdictKind::Infinite => "infinite",
    }
}

/// The human verdict line for terminal summaries.
pub fn verdict_line(k: VerdictKind) -> &'static str {
    match k {
        VerdictKind::Cosemisimple => "cosemisimple",
        VerdictKind::Finite => "finite corepresentation type",
        VerdictKind::Infinite => "infinite corepresentation type",
    }
}

fn datum_report(d: &GroupDatum) -> DatumReport {
    DatumReport {
        n: d.n,
        g: d.g_label.clone(),
        q: d.q.coeffs().iter().map(format_rational).collect(),
        q_display: format!("{}", d.q),
        d: d.d,
        mu_class: format!("{}", d.mu_class),
        mu_raw: d.mu_raw.coeffs().iter().map(format_rational).collect(),
    }
}

/// Everything one pipeline run produces, for both report serialization and
/// terminal summaries.
pub struct PipelineOutput {
    pub report: AnalysisReport,
    pub dot: String,
    pub verdict: Verdict,
}

/// Run the full pipeline on a loaded input. The `sha256` is the hex digest
/// of the raw input bytes, computed by the caller.
pub fn run_pipeline(input: &LoadedInput, sha256: String) -> Result<PipelineOutput> {
    match input {
        LoadedInput::Hopf(h) => run_hopf(h, sha256),
        LoadedInput::Coalgebra(c) => run_coalgebra(c, sha256),
    }
}

fn base_report(
    qa: &QuiverAnalysis,
    verdict: &Verdict,
    coradical_dims: Vec<usize>,
    input: InputInfo,
) -> AnalysisReport {
    let quiver = QuiverReport {
        labels: qa.quiver.vertices.iter().map(|v| v.label.clone()).collect(),
        ranks: qa.quiver.vertices.iter().map(|v| v.rank).collect(),
        arrows: qa.quiver.arrows.clone(),
    };
    let separated = verdict
        .separated_classes
        .iter()
        .map(|c| ClassReport {
            vertices: c.vertices.clone(),
            label: c.label.clone(),
            dynkin: c.dynkin,
            euclidean: c.euclidean,
        })
        .collect();
    let conj = conjecture_4_11_report(&qa.quiver);
    AnalysisReport {
        input,
        coradical_dims,
        simple_ranks: qa.simples.iter().map(|s| s.rank).collect(),
        simple_dims: qa.simples.iter().map(|s| s.rank * s.rank).collect(),
        quiver,
        separated,
        verdict: VerdictReport {
            kind: verdict_kind_str(verdict.kind),
            criterion2: verdict.criterion2,
            criterion3: verdict.criterion3,
            criterion4: verdict.criterion4,
            conakayama: verdict.conakayama,
            offending: verdict.offending.clone(),
        },
        fusion: None,
        group_datum: None,
        conjecture: ConjectureReport {
            rows: conj
                .rows
                .iter()
                .map(|r| DegreeRowReport {
                    index: r.index,
                    label: r.label.clone(),
                    in_degree: r.in_degree,
                    out_degree: r.out_degree,
                    balanced: r.balanced,
                })
                .collect(),
            unit_in_degree: conj.unit_in_degree,
            unit_in_divides_all: conj.unit_in_divides_all,
        },
        timing_ms: TimingReport {
            coradical_ms: None,
            decomposition_ms: None,
            quiver_ms: None,
            fusion_ms: None,
            verdict_ms: None,
            datum_ms: None,
        },
    }
}

fn run_hopf(h: &HopfAlgebra, sha256: String) -> Result<PipelineOutput> {
    let qa = analyze_links(h)?;
    let verdict = verdict_from(&qa)?;
    let filtration = coradical_filtration(h.coalgebra())?;
    let info = InputInfo {
        name: h.name().to_string(),
        sha256,
        kind: "hopf",
        dim: h.dim(),
        cyclotomic_order: h.field().order(),
    };
    let mut report = base_report(
        &qa,
        &verdict,
        filtration.layers.iter().map(|l| l.dim()).collect(),
        info,
    );
    let f = fusion_ring(h, &qa.h0, &qa.simples)?;
    report.fusion = Some(FusionReport {
        ranks: f.ranks.clone(),
        involution: f.involution.clone(),
        table: f.table.clone(),
    });
    if verdict.kind == VerdictKind::Finite {
        match extract_group_datum(h) {
            Ok(d) => report.group_datum = Some(datum_report(&d)),
            Err(Error::NotApplicable(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(PipelineOutput {
        dot: to_dot(&qa.quiver),
        report,
        verdict,
    })
}

fn run_coalgebra(c: &Coalgebra, sha256: String) -> Result<PipelineOutput> {
    let qa = analyze_links_of_coalgebra(c)?;
    let verdict = verdict_from(&qa)?;
    let filtration = coradical_filtration(c)?;
    let info = InputInfo {
        name: c.name().to_string(),
        sha256,
        kind: "coalgebra",
        dim: c.dim(),
        cyclotomic_order: c.field().order(),
    };
    let report = base_report(
        &qa,
        &verdict,
        filtration.layers.iter().map(|l| l.dim()).collect(),
        info,
    );
    Ok(PipelineOutput {
        dot: to_dot(&qa.quiver),
        report,
        verdict,
    })
}

/// Serialize a report deterministically (pretty JSON, trailing newline).
pub fn report_to_json(r: &AnalysisReport) -> String {
    let mut s = serde_json::to_string_pretty(r).expect("report serialization");
    s.push('\n');
    s
}

/// Format a MuClass for terminal summaries.
pub fn mu_summary(m: &MuClass) -> String {
    format!("{m}")
}

//! `corep` — exact corepresentation-type analysis from the command line.
//!
//! Subcommands: `validate`, `analyze`, `quiver`, `fusion`, `verdict`,
//! `datum`, `demo`. Inputs are JSON structure-constant files; see the
//! library's `io` module for the format.

mod report;

use clap::{Parser, Subcommand};
use corep::classify_builders::{
    build_cdn, build_dual_group_algebra, build_example_6_1, build_example_6_2, build_group_algebra,
    build_taft, cyclic_table, extract_group_datum, klein_table, symmetric_3_table,
};
use corep::coalgebra_core::{validate_coalgebra, Coalgebra};
use corep::exact_arith::{parse_rational, CycField, Rational};
use corep::fusion::fusion_ring;
use corep::hopf_core::{validate_hopf, HopfAlgebra};
use corep::io::{load_input, save_coalgebra, save_hopf, LoadedInput, DEFAULT_MAX_CYCLOTOMIC};
use corep::quiver_analysis::{analyze_links, analyze_links_of_coalgebra, to_dot, LinkQuiver};
use corep::Error;
use report::{mu_summary, report_to_json, run_pipeline, verdict_line, PipelineOutput};
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "corep",
    version,
    about = "Exact corepresentation-type analysis of finite-dimensional coalgebras and Hopf algebras"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check a structure-constant file against the coalgebra/Hopf axioms
    Validate {
        path: PathBuf,
        /// Largest accepted cyclotomic order
        #[arg(long, default_value_t = DEFAULT_MAX_CYCLOTOMIC)]
        max_cyclotomic: u64,
    },
    /// Run the full pipeline: coradical, simples, fusion, quiver, verdict, datum
    Analyze {
        path: PathBuf,
        /// Write the JSON analysis report here
        #[arg(long)]
        report: Option<PathBuf>,
        /// Write the link quiver in DOT format here
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Largest accepted cyclotomic order
        #[arg(long, default_value_t = DEFAULT_MAX_CYCLOTOMIC)]
        max_cyclotomic: u64,
    },
    /// Print the link quiver (vertices, arrow matrix, optional DOT file)
    Quiver {
        path: PathBuf,
        /// Write the link quiver in DOT format here
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Largest accepted cyclotomic order
        #[arg(long, default_value_t = DEFAULT_MAX_CYCLOTOMIC)]
        max_cyclotomic: u64,
    },
    /// Print the fusion ring of the simple subcoalgebras (Hopf input only)
    Fusion {
        path: PathBuf,
        /// Largest accepted cyclotomic order
        #[arg(long, default_value_t = DEFAULT_MAX_CYCLOTOMIC)]
        max_cyclotomic: u64,
    },
    /// Print the corepresentation-type verdict line
    Verdict {
        path: PathBuf,
        /// Largest accepted cyclotomic order
        #[arg(long, default_value_t = DEFAULT_MAX_CYCLOTOMIC)]
        max_cyclotomic: u64,
    },
    /// Print the group datum of the component subcoalgebra H_(1)
    Datum {
        path: PathBuf,
        /// Largest accepted cyclotomic order
        #[arg(long, default_value_t = DEFAULT_MAX_CYCLOTOMIC)]
        max_cyclotomic: u64,
    },
    /// Write a builder fixture as a JSON structure-constant file
    Demo {
        /// One of: taft, group, dualgroup, cdn, h16, h32
        name: String,
        /// Group order n (taft) or cycle length n (cdn)
        #[arg(long)]
        n: Option<usize>,
        /// Order d of q (taft) or truncation length d (cdn)
        #[arg(long)]
        d: Option<usize>,
        /// Taft parameter μ, a rational (0 unless d < n)
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        /// Taft parameter q: 1, -1, i, -i, or z^k for ζ_n^k
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
        /// Group for group/dualgroup: z<N>, s3, or klein
        #[arg(long)]
        group: Option<String>,
        /// λ parameter of the 32-dimensional example (default 1)
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        /// Output path (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    // Die quietly on SIGPIPE (e.g. `corep fusion f.json | head`) like other
    // Unix tools instead of panicking mid-println.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Validate {
            path,
            max_cyclotomic,
        } => cmd_validate(&path, max_cyclotomic),
        Cmd::Analyze {
            path,
            report,
            dot,
            max_cyclotomic,
        } => cmd_analyze(&path, report.as_deref(), dot.as_deref(), max_cyclotomic),
        Cmd::Quiver {
            path,
            dot,
            max_cyclotomic,
        } => cmd_quiver(&path, dot.as_deref(), max_cyclotomic),
        Cmd::Fusion {
            path,
            max_cyclotomic,
        } => cmd_fusion(&path, max_cyclotomic),
        Cmd::Verdict {
            path,
            max_cyclotomic,
        } => cmd_verdict(&path, max_cyclotomic),
        Cmd::Datum {
            path,
            max_cyclotomic,
        } => cmd_datum(&path, max_cyclotomic),
        Cmd::Demo {
            name,
            n,
            d,
            mu,
            q,
            group,
            lambda,
            out,
        } => cmd_demo(&name, n, d, mu, q, group, lambda, out.as_deref()),
    }
}

/// Exit codes shared by the analysis commands.
const EXIT_UNREADABLE: u8 = 1;
const EXIT_AXIOMS: u8 = 2;
const EXIT_NON_SPLIT: u8 = 3;
const EXIT_DUAL_CHEVALLEY: u8 = 4;

fn read_input(path: &Path, max_cyclotomic: u64) -> Result<(LoadedInput, String), String> {
    let bytes = std::fs::read(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| format!("{} is not UTF-8", path.display()))?;
    let input = load_input(&text, max_cyclotomic)
        .map_err(|e| format!("cannot parse {}: {e}", path.display()))?;
    let sha256 = hex::encode(Sha256::digest(&bytes));
    Ok((input, sha256))
}

fn analysis_exit(e: &Error) -> u8 {
    match e {
        Error::NonSplit { .. } => EXIT_NON_SPLIT,
        Error::DualChevalleyRequired(_) => EXIT_DUAL_CHEVALLEY,
        _ => EXIT_UNREADABLE,
    }
}

fn fail(msg: &str, code: u8) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code)
}

fn cmd_validate(path: &Path, max_cyclotomic: u64) -> ExitCode {
    let (input, _) = match read_input(path, max_cyclotomic) {
        Ok(v) => v,
        Err(msg) => return fail(&msg, EXIT_UNREADABLE),
    };
    match &input {
        LoadedInput::Coalgebra(c) => {
            let report = validate_coalgebra(c);
            if report.is_valid() {
                println!("{}: valid coalgebra (dim {})", input.name(), c.dim());
                ExitCode::SUCCESS
            } else {
                for v in &report.violations {
                    println!("violation: {v}");
                }
                ExitCode::from(EXIT_AXIOMS)
            }
        }
        LoadedInput::Hopf(h) => {
            let report = validate_hopf(h);
            if report.is_valid() {
                println!("{}: valid Hopf algebra (dim {})", input.name(), h.dim());
                ExitCode::SUCCESS
            } else {
                for v in &report.violations {
                    println!("violation: {v}");
                }
                ExitCode::from(EXIT_AXIOMS)
            }
        }
    }
}

fn summarize(out: &PipelineOutput) {
    let r = &out.report;
    println!(
        "input: {} ({} of dim {} over Q(zeta_{}))",
        r.input.name, r.input.kind, r.input.dim, r.input.cyclotomic_order
    );
    println!("coradical filtration dims: {:?}", r.coradical_dims);
    println!(
        "simple subcoalgebras: ranks {:?}, dims {:?}",
        r.simple_ranks, r.simple_dims
    );
    println!(
        "link quiver: {} vertices, {} arrows",
        r.quiver.labels.len(),
        r.quiver.arrows.iter().flatten().sum::<usize>()
    );
    let sep: Vec<&str> = r.separated.iter().map(|c| c.label.as_str()).collect();
    println!("separated quiver components: {}", sep.join(", "));
    println!("verdict: {}", verdict_line(out.verdict.kind));
    for o in &r.verdict.offending {
        println!("  obstruction: {o}");
    }
    if let Some(d) = &r.group_datum {
        println!(
            "group datum of H_(1): n={}, g={}, q={}, d={}, mu={}",
            d.n, d.g, d.q_display, d.d, d.mu_class
        );
    }
}

fn cmd_analyze(
    path: &Path,
    report_path: Option<&Path>,
    dot_path: Option<&Path>,
    max_cyclotomic: u64,
) -> ExitCode {
    let (input, sha256) = match read_input(path, max_cyclotomic) {
        Ok(v) => v,
        Err(msg) => return fail(&msg, EXIT_UNREADABLE),
    };
    let out = match run_pipeline(&input, sha256) {
        Ok(o) => o,
        Err(e) => return fail(&format!("{e}"), analysis_exit(&e)),
    };
    summarize(&out);
    if let Some(p) = report_path {
        if let Err(e) = std::fs::write(p, report_to_json(&out.report)) {
            return fail(&format!("cannot write report {}: {e}", p.display()), 1);
        }
    }
    if let Some(p) = dot_path {
        if let Err(e) = std::fs::write(p, &out.dot) {
            return fail(&format!("cannot write DOT {}: {e}", p.display()), 1);
        }
    }
    ExitCode::SUCCESS
}

fn quiver_of(input: &LoadedInput) -> corep::Result<LinkQuiver> {
    Ok(match input {
        LoadedInput::Hopf(h) => analyze_links(h)?.quiver,
        LoadedInput::Coalgebra(c) => analyze_links_of_coalgebra(c)?.quiver,
    })
}

fn cmd_quiver(path: &Path, dot_path: Option<&Path>, max_cyclotomic: u64) -> ExitCode {
    let (input, _) = match read_input(path, max_cyclotomic) {
        Ok(v) => v,
        Err(msg) => return fail(&msg, EXIT_UNREADABLE),
    };
    let q = match quiver_of(&input) {
        Ok(q) => q,
        Err(e) => return fail(&format!("{e}"), analysis_exit(&e)),
    };
    println!("{} vertices, {} arrows", q.vertex_count(), q.arrow_total());
    for v in &q.vertices {
        println!("  vertex {}: {} (rank {})", v.index, v.label, v.rank);
    }
    for i in 0..q.vertex_count() {
        for j in 0..q.vertex_count() {
            let m = q.arrows[i][j];
            if m > 0 {
                println!(
                    "  {} -> {}  (multiplicity {m})",
                    q.vertices[j].label, q.vertices[i].label
                );
            }
        }
    }
    if let Some(p) = dot_path {
        if let Err(e) = std::fs::write(p, to_dot(&q)) {
            return fail(&format!("cannot write DOT {}: {e}", p.display()), 1);
        }
    }
    ExitCode::SUCCESS
}

fn cmd_fusion(path: &Path, max_cyclotomic: u64) -> ExitCode {
    let (input, _) = match read_input(path, max_cyclotomic) {
        Ok(v) => v,
        Err(msg) => return fail(&msg, EXIT_UNREADABLE),
    };
    let h = match &input {
        LoadedInput::Hopf(h) => h,
        LoadedInput::Coalgebra(_) => {
            return fail("the fusion ring needs a Hopf input (mul/unit/antipode)", 1)
        }
    };
    let (qa, f) = match analyze_links(h).and_then(|qa| {
        let f = fusion_ring(h, &qa.h0, &qa.simples)?;
        Ok((qa, f))
    }) {
        Ok(v) => v,
        Err(e) => return fail(&format!("{e}"), analysis_exit(&e)),
    };
    let labels: Vec<&str> = qa.quiver.vertices.iter().map(|v| v.label.as_str()).collect();
    println!("simples: {}", labels.join(", "));
    println!("ranks: {:?}", f.ranks);
    println!(
        "involution: {}",
        f.involution
            .iter()
            .enumerate()
            .map(|(i, &s)| format!("{} -> {}", labels[i], labels[s]))
            .collect::<Vec<_>>()
            .join(", ")
    );
    for i in 0..f.len() {
        for j in 0..f.len() {
            let terms: Vec<String> = f.table[i][j]
                .iter()
                .enumerate()
                .filter(|(_, &m)| m > 0)
                .map(|(t, &m)| {
                    if m == 1 {
                        labels[t].to_string()
                    } else {
                        format!("{m}·{}", labels[t])
                    }
                })
                .collect();
            let rhs = if terms.is_empty() {
                "0".to_string()
            } else {
                terms.join(" + ")
            };
            println!("{} * {} = {rhs}", labels[i], labels[j]);
        }
    }
    ExitCode::SUCCESS
}

fn cmd_verdict(path: &Path, max_cyclotomic: u64) -> ExitCode {
    let (input, sha256) = match read_input(path, max_cyclotomic) {
        Ok(v) => v,
        Err(msg) => return fail(&msg, EXIT_UNREADABLE),
    };
    match run_pipeline(&input, sha256) {
        Ok(out) => {
            println!("{}", verdict_line(out.verdict.kind));
            ExitCode::SUCCESS
        }
        Err(e) => fail(&format!("{e}"), analysis_exit(&e)),
    }
}

fn cmd_datum(path: &Path, max_cyclotomic: u64) -> ExitCode {
    let (input, _) = match read_input(path, max_cyclotomic) {
        Ok(v) => v,
        Err(msg) => return fail(&msg, EXIT_UNREADABLE),
    };
    let h = match &input {
        LoadedInput::Hopf(h) => h,
        LoadedInput::Coalgebra(_) => {
            return fail("the group datum needs a Hopf input (mul/unit/antipode)", 1)
        }
    };
    match extract_group_datum(h) {
        Ok(datum) => {
            println!(
                "group datum of H_(1): n={}, g={}, q={}, d={}, mu={}",
                datum.n,
                datum.g_label,
                datum.q,
                datum.d,
                mu_summary(&datum.mu_class)
            );
            ExitCode::SUCCESS
        }
        Err(Error::NotApplicable(msg)) => {
            println!("no group datum: {msg}");
            ExitCode::SUCCESS
        }
        Err(e) => fail(&format!("{e}"), analysis_exit(&e)),
    }
}

/// Parse the Taft `q` flag: `1`, `-1`, `i`, `-i`, or `z^k` (= ζ_n^k).
fn parse_q(n: usize, s: &str) -> Result<i64, String> {
    let t = s.trim();
    if let Some(k) = t.strip_prefix("z^").or_else(|| t.strip_prefix("zeta^")) {
        return k
            .parse::<i64>()
            .map_err(|_| format!("cannot parse root-of-unity power in {t:?}"));
    }
    match t {
        "1" => Ok(0),
        "-1" if n % 2 == 0 => Ok(n as i64 / 2),
        "-1" => Err(format!("-1 is not an n-th root of unity for odd n = {n}")),
        "i" if n % 4 == 0 => Ok(n as i64 / 4),
        "-i" if n % 4 == 0 => Ok(3 * (n as i64) / 4),
        "i" | "-i" => Err(format!("±i needs 4 | n, got n = {n}")),
        _ => Err(format!(
            "cannot parse q = {t:?}: use 1, -1, i, -i, or z^k for zeta_{n}^k"
        )),
    }
}

fn parse_rat_flag(name: &str, s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| format!("cannot parse --{name} {s:?}: {e}"))
}

#[allow(clippy::too_many_arguments)]
fn cmd_demo(
    name: &str,
    n: Option<usize>,
    d: Option<usize>,
    mu: Option<String>,
    q: Option<String>,
    group: Option<String>,
    lambda: Option<String>,
    out: Option<&Path>,
) -> ExitCode {
    let text = match build_demo(name, n, d, mu, q, group, lambda) {
        Ok(t) => t,
        Err(msg) => return fail(&msg, 1),
    };
    match out {
        Some(p) => {
            if let Err(e) = std::fs::write(p, text) {
                return fail(&format!("cannot write {}: {e}", p.display()), 1);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::SUCCESS
}

fn group_table_by_name(g: &str) -> Result<(String, Vec<Vec<usize>>), String> {
    let g = g.trim().to_lowercase();
    if g == "s3" {
        return Ok(("s3".into(), symmetric_3_table()));
    }
    if g == "klein" {
        return Ok(("klein".into(), klein_table()));
    }
    if let Some(num) = g.strip_prefix('z') {
        let n: usize = num
            .parse()
            .map_err(|_| format!("cannot parse cyclic group order in {g:?}"))?;
        if n == 0 {
            return Err("cyclic group order must be positive".into());
        }
        return Ok((format!("z{n}"), cyclic_table(n)));
    }
    Err(format!("unknown group {g:?}: use z<N>, s3, or klein"))
}

fn hopf_json(h: Result<HopfAlgebra, Error>) -> Result<String, String> {
    h.map(|h| save_hopf(&h)).map_err(|e| format!("{e}"))
}

fn coalgebra_json(c: Result<Coalgebra, Error>) -> Result<String, String> {
    c.map(|c| save_coalgebra(&c)).map_err(|e| format!("{e}"))
}

fn build_demo(
    name: &str,
    n: Option<usize>,
    d: Option<usize>,
    mu: Option<String>,
    q: Option<String>,
    group: Option<String>,
    lambda: Option<String>,
) -> Result<String, String> {
    match name {
        "taft" => {
            let n = n.ok_or("taft needs --n")?;
            let d = d.ok_or("taft needs --d")?;
            let mu = match mu {
                Some(s) => parse_rat_flag("mu", &s)?,
                None => Rational::from_integer(0.into()),
            };
            let q = q.ok_or("taft needs --q (1, -1, i, -i, or z^k)")?;
            let qp = parse_q(n, &q)?;
            hopf_json(build_taft(n, d, mu, qp))
        }
        "group" | "dualgroup" => {
            let g = group.ok_or_else(|| format!("{name} needs --group (z<N>, s3, or klein)"))?;
            let (gname, table) = group_table_by_name(&g)?;
            let field = CycField::new(1).map_err(|e| format!("{e}"))?;
            if name == "group" {
                hopf_json(build_group_algebra(&format!("k[{gname}]"), &field, &table))
            } else {
                hopf_json(build_dual_group_algebra(
                    &format!("k[{gname}]*"),
                    &field,
                    &table,
                ))
            }
        }
        "cdn" => {
            let n = n.ok_or("cdn needs --n (cycle length)")?;
            let d = d.ok_or("cdn needs --d (truncation length)")?;
            coalgebra_json(build_cdn(n, d))
        }
        "h16" => hopf_json(build_example_6_1()),
        "h32" => {
            let lam = match lambda {
                Some(s) => parse_rat_flag("lambda", &s)?,
                None => Rational::from_integer(1.into()),
            };
            hopf_json(build_example_6_2(lam))
        }
        _ => Err(format!(
            "unknown demo {name:?}: use taft, group, dualgroup, cdn, h16, or h32"
        )),
    }
}

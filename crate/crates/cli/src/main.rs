//! `toughcert` — spectral toughness certificates from the command line.

use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use toughcert::certify::{
    certify, falsify_sweep, oracle_crosscheck, CertOptions, SweepConfig, SweepReport, Theorem,
};
use toughcert::graph::{build_family, ExtremalSpec};
use toughcert::lemmas::{verify_lemma, LemmaReport, LEMMA_TOKENS};
use toughcert::spectral::{eta1_lower_bounds, spectral_summary, EigOptions};
use toughcert::toughness::{
    is_t_tough, toughness_exact, CutWitness, OracleOptions, Rational, Variant,
};
use toughcert::{compare_families, Error, FamilyComparison};
use toughcert_cli::report::{
    fmt_bool, fmt_f64, fmt_rational, fmt_toughness, fmt_vertices, Document,
};
use toughcert_cli::{io, CliError};

/// Default seed for every randomized subcommand.
const DEFAULT_SEED: u64 = 1729;

#[derive(Parser)]
#[command(
    name = "toughcert",
    version,
    about = "Certify graph toughness from distance signless Laplacian eigenvalues"
)]
struct Cli {
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Seed feeding all randomized subcommands.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Eigensolver residual tolerance, relative to the eigenvalue.
    #[arg(long, global = true, default_value_t = 1e-9)]
    residual_tol: f64,

    /// Eigensolver Rayleigh-quotient settling tolerance.
    #[arg(long, global = true, default_value_t = 1e-12)]
    rel_change: f64,

    /// Relative half-width of the equality band around certificate thresholds.
    #[arg(long, global = true, default_value_t = 1e-7)]
    band: f64,

    /// Margin above which a comparison counts as strictly positive.
    #[arg(long, global = true, default_value_t = 1e-9)]
    strict_margin: f64,

    /// Largest order the exact toughness oracle accepts.
    #[arg(long, global = true, default_value_t = 24)]
    oracle_cap: usize,

    /// Worker threads for sweeps (default: all cores). Reports are
    /// independent of this setting.
    #[arg(long, global = true)]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Tau,
    TauPrime,
}

impl VariantArg {
    fn variant(self) -> Variant {
        match self {
            VariantArg::Tau => Variant::Tau,
            VariantArg::TauPrime => Variant::TauPrime,
        }
    }
}

fn variant_name(v: Variant) -> &'static str {
    match v {
        Variant::Tau => "tau",
        Variant::TauPrime => "tau-prime",
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum EmitFormat {
    G6,
    Edges,
}

#[derive(Subcommand)]
enum Command {
    /// Distance signless Laplacian summary of a graph file.
    Spectra {
        /// graph6 or edge-list file; `-` reads standard input.
        file: String,
    },
    /// Exact toughness via brute-force cut enumeration.
    Toughness {
        file: String,
        /// Decide `t`-toughness instead of computing the exact values.
        #[arg(long, value_name = "NUM/DEN")]
        t: Option<String>,
        /// Objective for the decision query.
        #[arg(long, value_enum, requires = "t")]
        variant: Option<VariantArg>,
    },
    /// Run one spectral certificate against a graph.
    Certify {
        file: String,
        /// One of 1.1, 1.2, 1.3a, 1.3b.
        #[arg(long)]
        theorem: String,
        /// Toughness denominator for theorems 1.2 and 1.3b.
        #[arg(long)]
        q: Option<i64>,
        /// Toughness level for theorem 1.3a.
        #[arg(long)]
        t: Option<i64>,
        /// Replay the verdict's claim against the exact oracle.
        #[arg(long)]
        crosscheck: bool,
    },
    /// Build a hub-join family graph and print it.
    Extremal {
        /// Hub clique size.
        #[arg(long)]
        s: usize,
        /// Comma-separated clique sizes, e.g. 18,1,1.
        #[arg(long, value_delimiter = ',', required = true)]
        parts: Vec<usize>,
        #[arg(long, value_enum, default_value = "g6")]
        emit: EmitFormat,
    },
    /// Compare a family against its reference composition.
    Compare {
        #[arg(long)]
        s: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        parts: Vec<usize>,
        /// Small-part size of the reference composition.
        #[arg(long)]
        p: usize,
    },
    /// Randomized falsification sweep for one certificate.
    Sweep {
        #[arg(long)]
        theorem: String,
        #[arg(long, default_value_t = 200)]
        count: usize,
        /// Inclusive order range, e.g. 20..24.
        #[arg(long, default_value = "20..24")]
        n: String,
        #[arg(long)]
        q: Option<i64>,
        #[arg(long)]
        t: Option<i64>,
        /// Hub size / minimum degree for family instances.
        #[arg(long)]
        delta: Option<usize>,
        /// Append a flat per-instance table to the report.
        #[arg(long)]
        table: bool,
    },
    /// Run the supporting-inequality verifiers.
    VerifyLemmas {
        /// One of 2.1, 2.2, 2.3, 2.4, 2.5, 3.1; default runs all.
        #[arg(long)]
        lemma: Option<String>,
    },
}

struct RunConfig {
    eig: EigOptions,
    band: f64,
    strict_margin: f64,
    oracle: OracleOptions,
    seed: u64,
}

impl RunConfig {
    fn from_cli(cli: &Cli) -> Result<RunConfig, CliError> {
        if cli.residual_tol <= 0.0 || cli.rel_change <= 0.0 || cli.band <= 0.0 || cli.strict_margin <= 0.0
        {
            return Err(CliError::Parse("tolerances must be positive".to_string()));
        }
        if cli.oracle_cap < 4 {
            return Err(CliError::Parse("--oracle-cap must be at least 4".to_string()));
        }
        Ok(RunConfig {
            eig: EigOptions {
                rel_change: cli.rel_change,
                residual_tol: cli.residual_tol,
                ..EigOptions::default()
            },
            band: cli.band,
            strict_margin: cli.strict_margin,
            oracle: OracleOptions { cap: cli.oracle_cap },
            seed: cli.seed,
        })
    }

    fn cert(&self) -> CertOptions {
        CertOptions { band: self.band, eig: self.eig.clone() }
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match execute(&cli) {
        Ok((text, property_failed)) => match write_output(&cli.out, &text) {
            Ok(()) => i32::from(property_failed),
            Err(e) => {
                eprintln!("error: {e}");
                2
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    std::process::exit(code);
}

fn write_output(out: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn execute(cli: &Cli) -> Result<(String, bool), CliError> {
    let cfg = RunConfig::from_cli(cli)?;
    if let Some(workers) = cli.workers {
        if workers == 0 {
            return Err(CliError::Parse("--workers must be positive".to_string()));
        }
        // Ignore the error if a pool already exists; determinism does not
        // depend on the thread count.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(workers).build_global();
    }
    match &cli.command {
        Command::Spectra { file } => cmd_spectra(file, &cfg),
        Command::Toughness { file, t, variant } => cmd_toughness(file, t, *variant, &cfg),
        Command::Certify { file, theorem, q, t, crosscheck } => {
            cmd_certify(file, theorem, *q, *t, *crosscheck, &cfg)
        }
        Command::Extremal { s, parts, emit } => cmd_extremal(*s, parts, *emit),
        Command::Compare { s, parts, p } => cmd_compare(*s, parts, *p, &cfg),
        Command::Sweep { theorem, count, n, q, t, delta, table } => {
            cmd_sweep(theorem, *count, n, *q, *t, *delta, *table, &cfg)
        }
        Command::VerifyLemmas { lemma } => cmd_verify_lemmas(lemma.as_deref(), &cfg),
    }
}

fn cmd_spectra(file: &str, cfg: &RunConfig) -> Result<(String, bool), CliError> {
    let g = io::read_graph(file)?;
    let summary = spectral_summary(&g, &cfg.eig)?;
    let (bound_w, bound_s) = eta1_lower_bounds(&g)?;
    let mut doc = Document::new("spectral-summary");
    doc.push("order", g.order().to_string());
    doc.push("size", g.size().to_string());
    doc.push("min-degree", g.min_degree().unwrap().to_string());
    doc.push("wiener", summary.wiener.to_string());
    doc.push("transmission-regular", fmt_bool(summary.transmission_regular));
    doc.push(
        "transmission-k",
        summary.transmission_k.map_or_else(|| "none".to_string(), |k| k.to_string()),
    );
    doc.push("eta1", fmt_f64(summary.eta1));
    doc.push("bound-wiener", fmt_f64(bound_w));
    doc.push("bound-size", fmt_f64(bound_s));
    Ok((doc.render(), false))
}

fn parse_rational(text: &str) -> Result<Rational, CliError> {
    let bad = || CliError::Parse(format!("expected NUM or NUM/DEN, got {text:?}"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let num: i64 = num.trim().parse().map_err(|_| bad())?;
    let den: i64 = den.trim().parse().map_err(|_| bad())?;
    if den <= 0 {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

fn push_witness(doc: &mut Document, prefix: &str, witness: &Option<CutWitness>) {
    match witness {
        Some(w) => {
            doc.push(format!("{prefix}-set"), fmt_vertices(&w.vertices));
            doc.push(format!("{prefix}-components"), w.components.to_string());
            doc.push(format!("{prefix}-ratio"), fmt_rational(&w.ratio));
        }
        None => {
            doc.push(format!("{prefix}-set"), "none");
            doc.push(format!("{prefix}-components"), "none");
            doc.push(format!("{prefix}-ratio"), "none");
        }
    }
}

fn cmd_toughness(
    file: &str,
    t: &Option<String>,
    variant: Option<VariantArg>,
    cfg: &RunConfig,
) -> Result<(String, bool), CliError> {
    let g = io::read_graph(file)?;
    if let Some(target_text) = t {
        let target = parse_rational(target_text)?;
        let v = variant.map_or(Variant::Tau, VariantArg::variant);
        let (tough, witness) = is_t_tough(&g, target, v, &cfg.oracle)?;
        let mut doc = Document::new("toughness-decision");
        doc.push("order", g.order().to_string());
        doc.push("size", g.size().to_string());
        doc.push("variant", variant_name(v));
        doc.push("target", fmt_rational(&target));
        doc.push("tough", fmt_bool(tough));
        push_witness(&mut doc, "witness", &witness);
        return Ok((doc.render(), false));
    }
    let report = toughness_exact(&g, &cfg.oracle)?;
    let mut doc = Document::new("toughness-report");
    doc.push("order", g.order().to_string());
    doc.push("size", g.size().to_string());
    doc.push("tau", fmt_toughness(&report.tau));
    push_witness(&mut doc, "tau-witness", &report.tau_witness);
    doc.push("tau-prime", fmt_toughness(&report.tau_prime));
    push_witness(&mut doc, "tau-prime-witness", &report.tau_prime_witness);
    Ok((doc.render(), false))
}

fn certificate_level(
    theorem: Theorem,
    q: Option<i64>,
    t: Option<i64>,
) -> Result<i64, CliError> {
    let need = |flag: &str, got: Option<i64>, reject: (&str, Option<i64>)| -> Result<i64, CliError> {
        if reject.1.is_some() {
            return Err(CliError::Parse(format!(
                "theorem {} does not take --{}",
                theorem.token(),
                reject.0
            )));
        }
        got.ok_or_else(|| {
            CliError::Parse(format!("theorem {} requires --{flag}", theorem.token()))
        })
    };
    match theorem {
        Theorem::OneTough => {
            if q.is_some() || t.is_some() {
                return Err(CliError::Parse(
                    "theorem 1.1 takes neither --q nor --t".to_string(),
                ));
            }
            Ok(1)
        }
        Theorem::FractionalTough | Theorem::OrderDegree => need("q", q, ("t", t)),
        Theorem::OrderSize => need("t", t, ("q", q)),
    }
}

fn cmd_certify(
    file: &str,
    theorem: &str,
    q: Option<i64>,
    t: Option<i64>,
    crosscheck: bool,
    cfg: &RunConfig,
) -> Result<(String, bool), CliError> {
    let theorem = Theorem::from_token(theorem)
        .ok_or_else(|| CliError::Parse(format!("unknown theorem {theorem:?}")))?;
    let level = certificate_level(theorem, q, t)?;
    let g = io::read_graph(file)?;
    let outcome = certify(&g, theorem, level, &cfg.cert())?;
    let mut property_failed = false;
    let mut oracle_value = "none".to_string();
    let mut oracle_notes: Vec<String> = Vec::new();
    if crosscheck {
        match oracle_crosscheck(&g, &outcome, &cfg.oracle) {
            Ok(None) => oracle_value = "no-claim".to_string(),
            Ok(Some(check)) => {
                oracle_value =
                    if check.consistent { "consistent" } else { "inconsistent" }.to_string();
                property_failed = !check.consistent;
                oracle_notes.push(format!(
                    "oracle says {} {} {}",
                    variant_name(check.variant),
                    if check.oracle_tough { ">=" } else { "<" },
                    fmt_rational(&check.target)
                ));
                if let Some(w) = check.witness {
                    oracle_notes.push(format!(
                        "violating cut {} leaves {} components",
                        fmt_vertices(&w.vertices),
                        w.components
                    ));
                }
            }
            Err(Error::CapacityExceeded { order, cap }) => {
                oracle_value = "skipped-capacity".to_string();
                oracle_notes.push(format!("order {order} exceeds the oracle cap {cap}"));
            }
            Err(e) => return Err(e.into()),
        }
    }
    let opt = |v: Option<f64>| v.map_or_else(|| "none".to_string(), fmt_f64);
    let mut doc = Document::new("certificate");
    doc.push("theorem", theorem.token());
    doc.push("order", g.order().to_string());
    doc.push("size", g.size().to_string());
    doc.push("variant", variant_name(outcome.variant));
    doc.push("target", fmt_rational(&outcome.target));
    doc.push("verdict", outcome.verdict.token());
    doc.push("eta1", opt(outcome.eta1));
    doc.push("threshold", opt(outcome.threshold));
    doc.push("band", opt(outcome.band));
    doc.push("margin", opt(outcome.margin));
    doc.push("oracle", oracle_value);
    for (i, line) in outcome.log.iter().enumerate() {
        doc.push(format!("log-{}", i + 1), line);
    }
    for (i, line) in oracle_notes.iter().enumerate() {
        doc.push(format!("note-{}", i + 1), line);
    }
    Ok((doc.render(), property_failed))
}

fn cmd_extremal(s: usize, parts: &[usize], emit: EmitFormat) -> Result<(String, bool), CliError> {
    let spec = ExtremalSpec::new(s, parts.to_vec())?;
    let g = build_family(&spec);
    let text = match emit {
        EmitFormat::G6 => format!("{}\n", io::write_graph6(&g)?),
        EmitFormat::Edges => io::write_edge_list(&g),
    };
    Ok((text, false))
}

fn comparison_document(cmp: &FamilyComparison) -> Document {
    let join = |xs: &[usize]| {
        xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
    };
    let mut doc = Document::new("comparison");
    doc.push("order", cmp.order.to_string());
    doc.push("hub", cmp.hub.to_string());
    doc.push("small-part", cmp.small_part.to_string());
    doc.push("parts", join(&cmp.parts));
    doc.push("reference-parts", join(&cmp.reference_parts));
    doc.push("eta1-parts", fmt_f64(cmp.eta1_parts));
    doc.push("eta1-reference", fmt_f64(cmp.eta1_reference));
    doc.push("difference", fmt_f64(cmp.difference));
    doc.push("strict", fmt_bool(cmp.strict));
    doc.push("matches-reference", fmt_bool(cmp.matches_reference));
    doc.push("premises-met", fmt_bool(cmp.premises_met));
    for (i, line) in cmp.premise_notes.iter().enumerate() {
        doc.push(format!("premise-note-{}", i + 1), line);
    }
    doc
}

fn cmd_compare(
    s: usize,
    parts: &[usize],
    p: usize,
    cfg: &RunConfig,
) -> Result<(String, bool), CliError> {
    let cmp = compare_families(s, parts, p, cfg.strict_margin, &cfg.eig)?;
    Ok((comparison_document(&cmp).render(), false))
}

fn sweep_table(report: &SweepReport) -> String {
    let mut out = String::from(
        "index order kind verdict eta1 threshold tau-sound tau-prime-sound exception-ok\n",
    );
    let flag = |v: Option<bool>| match v {
        None => "-".to_string(),
        Some(true) => "yes".to_string(),
        Some(false) => "no".to_string(),
    };
    let num = |v: Option<f64>| v.map_or_else(|| "-".to_string(), fmt_f64);
    for inst in &report.instances {
        out.push_str(&format!(
            "{} {} {} {} {} {} {} {} {}\n",
            inst.index,
            inst.order,
            inst.kind,
            inst.verdict.token(),
            num(inst.eta1),
            num(inst.threshold),
            flag(inst.tau_sound),
            flag(inst.tau_prime_sound),
            flag(inst.exception_consistent),
        ));
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    theorem: &str,
    count: usize,
    n: &str,
    q: Option<i64>,
    t: Option<i64>,
    delta: Option<usize>,
    table: bool,
    cfg: &RunConfig,
) -> Result<(String, bool), CliError> {
    let theorem = Theorem::from_token(theorem)
        .ok_or_else(|| CliError::Parse(format!("unknown theorem {theorem:?}")))?;
    let (lo, hi) = n
        .split_once("..")
        .and_then(|(a, b)| Some((a.parse::<usize>().ok()?, b.parse::<usize>().ok()?)))
        .ok_or_else(|| CliError::Parse(format!("expected an order range LO..HI, got {n:?}")))?;
    let config = SweepConfig {
        theorem,
        seed: cfg.seed,
        count,
        n_lo: lo,
        n_hi: hi,
        q: q.unwrap_or(match theorem {
            Theorem::FractionalTough => 2,
            _ => 1,
        }),
        t: t.unwrap_or(2),
        delta: delta.unwrap_or(2),
        oracle_cap: cfg.oracle.cap,
    };
    let report = falsify_sweep(&config, &cfg.cert())?;
    // The tau-prime reading backs every certificate; the tau reading is
    // additionally binding for the certificates that claim it.
    let mut violations = report.tau_prime_violations + report.exception_mismatches;
    if theorem.variant() == Variant::Tau {
        violations += report.tau_violations;
    }
    let mut doc = Document::new("sweep-report");
    doc.push("theorem", theorem.token());
    doc.push("seed", report.seed.to_string());
    doc.push("count", report.count.to_string());
    doc.push("n-lo", report.n_lo.to_string());
    doc.push("n-hi", report.n_hi.to_string());
    doc.push("certified", report.certified.to_string());
    doc.push("extremal-exception", report.exceptional.to_string());
    doc.push("inconclusive", report.inconclusive.to_string());
    doc.push("precondition-failed", report.precondition_failed.to_string());
    doc.push("oracle-checked", report.oracle_checked.to_string());
    doc.push("tau-violations", report.tau_violations.to_string());
    doc.push("tau-prime-violations", report.tau_prime_violations.to_string());
    doc.push("exception-mismatches", report.exception_mismatches.to_string());
    let mut text = doc.render();
    if table {
        text.push('\n');
        text.push_str(&sweep_table(&report));
    }
    Ok((text, violations > 0))
}

fn lemma_document(report: &LemmaReport) -> Document {
    let mut doc = Document::new("lemma-report");
    doc.push("id", report.id);
    doc.push("name", report.name);
    doc.push("cases", report.cases.to_string());
    doc.push("failures", report.failures.to_string());
    doc.push("worst", fmt_f64(report.worst));
    doc.push("pass", fmt_bool(report.pass));
    for (i, line) in report.notes.iter().enumerate() {
        doc.push(format!("note-{}", i + 1), line);
    }
    doc
}

fn cmd_verify_lemmas(lemma: Option<&str>, cfg: &RunConfig) -> Result<(String, bool), CliError> {
    let tokens: Vec<&str> = match lemma {
        Some(token) => vec![token],
        None => LEMMA_TOKENS.to_vec(),
    };
    let mut blocks = Vec::new();
    let mut any_failed = false;
    for token in tokens {
        let report = verify_lemma(token, cfg.seed, &cfg.eig)?;
        any_failed |= !report.pass;
        blocks.push(lemma_document(&report).render());
    }
    Ok((blocks.join("\n"), any_failed))
}

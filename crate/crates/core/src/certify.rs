//! Spectral toughness certificates.
//!
//! Each certificate compares the largest distance-signless-Laplacian
//! eigenvalue of the input graph against a closed-form threshold, under
//! theorem-specific preconditions on the order, minimum degree and the
//! toughness level. Comparisons honor a numeric band around the threshold:
//! strictly below the band certifies, inside the band either recognizes the
//! known exceptional family or refuses to conclude (a cospectral mate cannot
//! be ruled out numerically), and above is always inconclusive — this wrapper
//! never reports a graph as not tough.

use crate::error::{Error, Result};
use crate::extremal::{quotient_closed_form, CharPolyParams};
use crate::generate::{
    dense_low_degree, dense_near_complete, perturbed_family, random_connected_gnp,
};
use crate::graph::{build_family, recognize_family, ExtremalSpec, Graph};
use crate::spectral::{dsl_matrix, perron_value, EigOptions};
use crate::toughness::{is_t_tough, CutWitness, OracleOptions, Rational, Variant, ORDER_LIMIT};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::fmt;

/// The four certificates, named by their command-line tokens.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem {
    /// `1.1` — 1-toughness for graphs with minimum degree `δ ≥ 2`.
    OneTough,
    /// `1.2` — `1/q`-toughness, threshold from the `s = 1` closed form.
    FractionalTough,
    /// `1.3a` — `t`-toughness (integer `t ≥ 2`) from an order/size threshold.
    OrderSize,
    /// `1.3b` — `1/q`-toughness from an order/degree threshold.
    OrderDegree,
}

impl Theorem {
    pub fn token(self) -> &'static str {
        match self {
            Theorem::OneTough => "1.1",
            Theorem::FractionalTough => "1.2",
            Theorem::OrderSize => "1.3a",
            Theorem::OrderDegree => "1.3b",
        }
    }

    pub fn from_token(token: &str) -> Option<Theorem> {
        match token {
            "1.1" => Some(Theorem::OneTough),
            "1.2" => Some(Theorem::FractionalTough),
            "1.3a" => Some(Theorem::OrderSize),
            "1.3b" => Some(Theorem::OrderDegree),
            _ => None,
        }
    }

    /// The toughness reading this certificate asserts. The order-based
    /// certificates are backed by results stated for the `τ′` parameter, so
    /// they only claim the weaker reading; sweeps measure both.
    pub fn variant(self) -> Variant {
        match self {
            Theorem::OneTough | Theorem::FractionalTough => Variant::Tau,
            Theorem::OrderSize | Theorem::OrderDegree => Variant::TauPrime,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Eigenvalue strictly below the threshold band: the graph is tough.
    Certified,
    /// Eigenvalue inside the band and the graph is the exceptional family.
    ExtremalException,
    /// No conclusion; the condition is sufficient, not necessary.
    Inconclusive,
    /// The theorem's hypotheses do not apply to this input.
    PreconditionFailed,
}

impl Verdict {
    pub fn token(self) -> &'static str {
        match self {
            Verdict::Certified => "certified",
            Verdict::ExtremalException => "extremal-exception",
            Verdict::Inconclusive => "inconclusive",
            Verdict::PreconditionFailed => "precondition-failed",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

#[derive(Debug, Clone)]
pub struct CertOptions {
    /// Relative half-width of the equality band around the threshold.
    pub band: f64,
    pub eig: EigOptions,
}

impl Default for CertOptions {
    fn default() -> CertOptions {
        CertOptions { band: 1e-7, eig: EigOptions::default() }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CertOutcome {
    pub theorem: Theorem,
    pub verdict: Verdict,
    /// The toughness level the certificate would establish.
    pub target: Rational,
    pub variant: Variant,
    /// Eigenvalue of the input graph (absent when preconditions fail).
    pub eta1: Option<f64>,
    pub threshold: Option<f64>,
    /// Absolute band width applied around the threshold.
    pub band: Option<f64>,
    /// `threshold − eta1`.
    pub margin: Option<f64>,
    /// Precondition evaluations and classification notes, in order.
    pub log: Vec<String>,
    /// Filled in by [`oracle_crosscheck`], `None` until then.
    pub oracle_crosscheck: Option<bool>,
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.order() == 0 {
        return Err(Error::EmptyResult("certification of the empty graph"));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

fn note(log: &mut Vec<String>, label: impl fmt::Display, pass: bool) -> bool {
    log.push(format!("{label}: {}", if pass { "satisfied" } else { "violated" }));
    pass
}

fn graph_eta1(g: &Graph, eig: &EigOptions) -> Result<f64> {
    let m = dsl_matrix(g)?;
    Ok(perron_value(&m, eig)?.0)
}

fn threshold_eta1(params: &CharPolyParams, eig: &EigOptions) -> Result<f64> {
    let q = quotient_closed_form(params)?;
    Ok(perron_value(&q.to_dense(), eig)?.0)
}

fn failed(theorem: Theorem, target: Rational, log: Vec<String>) -> CertOutcome {
    CertOutcome {
        theorem,
        verdict: Verdict::PreconditionFailed,
        target,
        variant: theorem.variant(),
        eta1: None,
        threshold: None,
        band: None,
        margin: None,
        log,
        oracle_crosscheck: None,
    }
}

/// Shared classification against a threshold. `exceptional` carries the
/// family that attains the threshold for non-strict certificates; strict
/// thresholds pass `None`.
fn classify(
    eta1: f64,
    threshold: f64,
    band_abs: f64,
    exceptional: Option<(&Graph, &ExtremalSpec)>,
    log: &mut Vec<String>,
) -> Verdict {
    if eta1 < threshold - band_abs {
        return Verdict::Certified;
    }
    if eta1 <= threshold + band_abs {
        match exceptional {
            Some((g, spec)) => {
                if recognize_family(g, spec) {
                    return Verdict::ExtremalException;
                }
                log.push(
                    "eta1 sits in the numeric band at the threshold but the graph is not \
                     the exceptional family; a cospectral mate cannot be ruled out"
                        .to_string(),
                );
            }
            None => {
                log.push(
                    "eta1 sits in the numeric band at a strict threshold; refusing to certify"
                        .to_string(),
                );
            }
        }
    }
    Verdict::Inconclusive
}

fn finish(
    theorem: Theorem,
    target: Rational,
    g: &Graph,
    params_threshold: f64,
    exceptional: Option<&ExtremalSpec>,
    opts: &CertOptions,
    mut log: Vec<String>,
) -> Result<CertOutcome> {
    let eta1 = graph_eta1(g, &opts.eig)?;
    let band_abs = opts.band * params_threshold.abs();
    let verdict = classify(
        eta1,
        params_threshold,
        band_abs,
        exceptional.map(|spec| (g, spec)),
        &mut log,
    );
    Ok(CertOutcome {
        theorem,
        verdict,
        target,
        variant: theorem.variant(),
        eta1: Some(eta1),
        threshold: Some(params_threshold),
        band: Some(band_abs),
        margin: Some(params_threshold - eta1),
        log,
        oracle_crosscheck: None,
    })
}

/// 1-toughness certificate for graphs with minimum degree at least 2.
pub fn certify_1tough(g: &Graph, opts: &CertOptions) -> Result<CertOutcome> {
    require_connected(g)?;
    let theorem = Theorem::OneTough;
    let target = Rational::new(1, 1);
    let n = g.order();
    let delta = g.min_degree().unwrap();
    let mut log = vec![format!("n = {n}"), format!("delta = {delta}")];
    let mut ok = note(&mut log, "delta >= 2", delta >= 2);
    ok &= note(&mut log, format!("n >= 11*delta = {}", 11 * delta), n >= 11 * delta);
    // n >= delta²/2 + 2δ, checked as 2n >= δ² + 4δ to stay in integers.
    ok &= note(
        &mut log,
        format!("2n >= delta^2 + 4*delta = {}", delta * delta + 4 * delta),
        2 * n >= delta * delta + 4 * delta,
    );
    if !ok {
        return Ok(failed(theorem, target, log));
    }
    let params = CharPolyParams::BStar { n: n as i64, delta: delta as i64 };
    let threshold = threshold_eta1(&params, &opts.eig)?;
    let spec = params.family_spec()?;
    finish(theorem, target, g, threshold, Some(&spec), opts, log)
}

/// `1/q`-toughness certificate. `q` must be a positive integer.
pub fn certify_fractional(g: &Graph, q: i64, opts: &CertOptions) -> Result<CertOutcome> {
    if q < 1 {
        return Err(Error::InvalidParameter(format!(
            "fractional certificate needs a positive integer q, got {q}"
        )));
    }
    require_connected(g)?;
    let theorem = Theorem::FractionalTough;
    let target = Rational::new(1, q);
    let n = g.order() as i64;
    let mut log = vec![format!("n = {n}"), format!("q = {q}")];
    // n >= 2q² + 3q + 3/q + 4, as n·q >= 2q³ + 3q² + 4q + 3.
    let bound_num = 2 * q * q * q + 3 * q * q + 4 * q + 3;
    let ceil_bound = (bound_num + q - 1) / q;
    let pass = note(&mut log, format!("n >= ceil((2q^3+3q^2+4q+3)/q) = {ceil_bound}"), n * q >= bound_num);
    if bound_num % q != 0 && n == ceil_bound {
        log.push(format!(
            "order sits exactly on the rounded-up bound (raw bound {bound_num}/{q} is not an integer)"
        ));
    }
    if !pass {
        return Ok(failed(theorem, target, log));
    }
    let params = CharPolyParams::BTilde { n, s: 1, q };
    let threshold = threshold_eta1(&params, &opts.eig)?;
    let spec = params.family_spec()?;
    finish(theorem, target, g, threshold, Some(&spec), opts, log)
}

/// `t`-toughness certificate from the order/size threshold
/// `(2n² + 2n − 4t)/n`; strict, with no exceptional family.
pub fn certify_order_size(g: &Graph, t: i64, opts: &CertOptions) -> Result<CertOutcome> {
    require_connected(g)?;
    let theorem = Theorem::OrderSize;
    let target = Rational::new(t.max(1), 1);
    let n = g.order() as i64;
    let m = g.size() as i64;
    let mut log = vec![format!("n = {n}"), format!("m = {m}"), format!("t = {t}")];
    let mut ok = note(&mut log, "t >= 2", t >= 2);
    if t >= 1 {
        ok &= note(
            &mut log,
            format!("n >= 2t^2 + 2t = {}", 2 * t * t + 2 * t),
            n >= 2 * t * t + 2 * t,
        );
    }
    if !ok {
        return Ok(failed(theorem, target, log));
    }
    let nf = n as f64;
    let threshold = (2.0 * nf * nf + 2.0 * nf - 4.0 * t as f64) / nf;
    // The threshold implies this size bound; record it for the log.
    let edge_floor = (n - 1) * (n - 2) / 2 + t - 1;
    log.push(format!("implied size bound: m > {edge_floor} (m = {m})"));
    finish(theorem, target, g, threshold, None, opts, log)
}

/// `1/q`-toughness certificate from the order/degree threshold
/// `2n + 4δq + 2 − 2(δq+1)(δq+2δ+2)/n`; strict, with no exceptional family.
pub fn certify_order_degree(g: &Graph, q: i64, opts: &CertOptions) -> Result<CertOutcome> {
    require_connected(g)?;
    let theorem = Theorem::OrderDegree;
    let target = Rational::new(1, q.max(1));
    let n = g.order() as i64;
    let m = g.size() as i64;
    let delta = g.min_degree().unwrap() as i64;
    let mut log = vec![format!("n = {n}"), format!("m = {m}"), format!("delta = {delta}")];
    let mut ok = note(&mut log, "q >= 1", q >= 1);
    if ok {
        log.push(format!("q = {q}"));
        // δ >= t + 1 with t = 1/q, i.e. δq >= q + 1.
        ok &= note(&mut log, "delta*q >= q + 1", delta * q >= q + 1);
        // n >= (2/q + 3 + q)δ + q/2 + 5, scaled by 2q.
        let lhs1 = 2 * q * n;
        let rhs1 = (2 * q * q + 6 * q + 4) * delta + q * q + 10 * q;
        ok &= note(&mut log, format!("2qn >= (2q^2+6q+4)*delta + q^2 + 10q = {rhs1}"), lhs1 >= rhs1);
        // n >= (q(δ(δ+4)+1) + 9δ + 6)/6, scaled by 6.
        let rhs2 = q * (delta * delta + 4 * delta + 1) + 9 * delta + 6;
        ok &= note(&mut log, format!("6n >= q*(delta^2+4*delta+1) + 9*delta + 6 = {rhs2}"), 6 * n >= rhs2);
    }
    if !ok {
        return Ok(failed(theorem, target, log));
    }
    let (nf, df, qf) = (n as f64, delta as f64, q as f64);
    let threshold =
        2.0 * nf + 4.0 * df * qf + 2.0 - 2.0 * (df * qf + 1.0) * (df * qf + 2.0 * df + 2.0) / nf;
    let inner = n - delta * q - 1;
    let edge_floor = inner * (inner - 1) / 2 + delta * (delta * q + 1);
    log.push(format!("implied size bound: m > {edge_floor} (m = {m})"));
    finish(theorem, target, g, threshold, None, opts, log)
}

/// Dispatch by theorem. `level` is `q` for the fractional certificates and
/// `t` for the order/size one; it is ignored by the 1-tough certificate.
pub fn certify(g: &Graph, theorem: Theorem, level: i64, opts: &CertOptions) -> Result<CertOutcome> {
    match theorem {
        Theorem::OneTough => certify_1tough(g, opts),
        Theorem::FractionalTough => certify_fractional(g, level, opts),
        Theorem::OrderSize => certify_order_size(g, level, opts),
        Theorem::OrderDegree => certify_order_degree(g, level, opts),
    }
}

/// Result of replaying a certificate's claim against the exact oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Crosscheck {
    pub variant: Variant,
    pub target: Rational,
    /// What the oracle decided about the graph at the target level.
    pub oracle_tough: bool,
    /// Whether the oracle agrees with the verdict's claim: `Certified`
    /// claims tough, `ExtremalException` claims not tough.
    pub consistent: bool,
    pub witness: Option<CutWitness>,
}

/// Replays a `Certified` or `ExtremalException` claim against the exact
/// oracle. Returns `None` for verdicts that claim nothing.
pub fn oracle_crosscheck(
    g: &Graph,
    outcome: &CertOutcome,
    oracle: &OracleOptions,
) -> Result<Option<Crosscheck>> {
    let claim = match outcome.verdict {
        Verdict::Certified => true,
        Verdict::ExtremalException => false,
        _ => return Ok(None),
    };
    let (oracle_tough, witness) = is_t_tough(g, outcome.target, outcome.variant, oracle)?;
    Ok(Some(Crosscheck {
        variant: outcome.variant,
        target: outcome.target,
        oracle_tough,
        consistent: oracle_tough == claim,
        witness,
    }))
}

// --- falsification sweep -------------------------------------------------------

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub theorem: Theorem,
    pub seed: u64,
    pub count: usize,
    /// Inclusive order range for generated instances.
    pub n_lo: usize,
    pub n_hi: usize,
    /// `q` for theorems 1.2 / 1.3b (ignored otherwise).
    pub q: i64,
    /// `t` for theorem 1.3a (ignored otherwise).
    pub t: i64,
    /// Hub size / minimum degree used for family instances (1.1, 1.3b).
    pub delta: usize,
    /// Orders up to this get the exact-oracle replay.
    pub oracle_cap: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepInstance {
    pub index: usize,
    pub order: usize,
    /// Generator mode: `family`, `family-plus-edges`, `dense` or `random`.
    pub kind: &'static str,
    pub verdict: Verdict,
    pub eta1: Option<f64>,
    pub threshold: Option<f64>,
    /// Oracle replay of a `Certified` claim under the `τ` reading.
    pub tau_sound: Option<bool>,
    /// Oracle replay of a `Certified` claim under the `τ′` reading.
    pub tau_prime_sound: Option<bool>,
    /// Oracle confirmation that an `ExtremalException` is indeed not tough.
    pub exception_consistent: Option<bool>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepReport {
    pub theorem: Theorem,
    pub seed: u64,
    pub count: usize,
    pub n_lo: usize,
    pub n_hi: usize,
    pub certified: usize,
    pub exceptional: usize,
    pub inconclusive: usize,
    pub precondition_failed: usize,
    /// Instances small enough for the exact oracle that made a claim.
    pub oracle_checked: usize,
    /// Certified instances the oracle found not tough under `τ`.
    pub tau_violations: usize,
    /// Certified instances the oracle found not tough under `τ′`.
    pub tau_prime_violations: usize,
    /// Exceptional instances the oracle found tough after all.
    pub exception_mismatches: usize,
    pub instances: Vec<SweepInstance>,
}

/// SplitMix64-style per-instance seed derivation: instance streams are
/// independent of each other and of the worker count.
fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// The family each theorem's sweep leans on. For the non-strict certificates
/// this is the exceptional family; for the strict ones it is a family just
/// below the claimed toughness, which the sweep must never certify.
fn sweep_family(cfg: &SweepConfig, n: usize) -> Result<ExtremalSpec> {
    let (hub, singles) = match cfg.theorem {
        Theorem::OneTough => (cfg.delta, cfg.delta),
        Theorem::FractionalTough => (1, cfg.q.max(1) as usize),
        Theorem::OrderSize => {
            let t = cfg.t.max(1) as usize;
            (t, t)
        }
        Theorem::OrderDegree => (cfg.delta, cfg.delta * cfg.q.max(1) as usize),
    };
    if n < hub + singles + 2 {
        return Err(Error::InvalidParameter(format!(
            "sweep order {n} too small for the family with hub {hub} and {singles} singletons"
        )));
    }
    let mut parts = vec![n - hub - singles];
    parts.extend(std::iter::repeat(1).take(singles));
    ExtremalSpec::new(hub, parts)
}

fn sweep_instance_graph(
    cfg: &SweepConfig,
    rng: &mut ChaCha8Rng,
    n: usize,
) -> Result<(Graph, &'static str)> {
    let spec = sweep_family(cfg, n)?;
    Ok(match rng.gen_range(0..4u32) {
        0 => (build_family(&spec), "family"),
        1 => {
            let extra = rng.gen_range(1..=3);
            (perturbed_family(rng, &spec, extra)?, "family-plus-edges")
        }
        2 => match cfg.theorem {
            // Degree-constrained theorems reject near-complete graphs outright,
            // so pin the minimum degree at the swept delta instead.
            Theorem::OneTough | Theorem::OrderDegree => {
                let deletions = rng.gen_range(0..=2);
                (
                    dense_low_degree(rng, n, cfg.delta, deletions)?,
                    "dense-low-degree",
                )
            }
            _ => {
                let deletions = rng.gen_range(0..=(n - 2) / 2);
                (dense_near_complete(rng, n, deletions)?, "dense")
            }
        },
        _ => {
            let p = rng.gen_range(0.3..0.9);
            (random_connected_gnp(rng, n, p)?, "random")
        }
    })
}

fn sweep_one(cfg: &SweepConfig, opts: &CertOptions, index: usize) -> Result<SweepInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(cfg.seed, index as u64));
    let n = rng.gen_range(cfg.n_lo..=cfg.n_hi);
    let (g, kind) = sweep_instance_graph(cfg, &mut rng, n)?;
    let level = match cfg.theorem {
        Theorem::OrderSize => cfg.t,
        _ => cfg.q,
    };
    let outcome = certify(&g, cfg.theorem, level, opts)?;
    let oracle = OracleOptions { cap: cfg.oracle_cap };
    let mut tau_sound = None;
    let mut tau_prime_sound = None;
    let mut exception_consistent = None;
    if g.order() <= cfg.oracle_cap.min(ORDER_LIMIT) {
        match outcome.verdict {
            Verdict::Certified => {
                tau_sound = Some(is_t_tough(&g, outcome.target, Variant::Tau, &oracle)?.0);
                tau_prime_sound =
                    Some(is_t_tough(&g, outcome.target, Variant::TauPrime, &oracle)?.0);
            }
            Verdict::ExtremalException => {
                let tough = is_t_tough(&g, outcome.target, outcome.variant, &oracle)?.0;
                exception_consistent = Some(!tough);
            }
            _ => {}
        }
    }
    Ok(SweepInstance {
        index,
        order: g.order(),
        kind,
        verdict: outcome.verdict,
        eta1: outcome.eta1,
        threshold: outcome.threshold,
        tau_sound,
        tau_prime_sound,
        exception_consistent,
    })
}

/// Runs `count` seeded instances against a certificate and replays every
/// claim the exact oracle can reach. Instances are independent, so the
/// report does not depend on the number of worker threads.
pub fn falsify_sweep(cfg: &SweepConfig, opts: &CertOptions) -> Result<SweepReport> {
    if cfg.count == 0 {
        return Err(Error::InvalidParameter("sweep needs at least one instance".to_string()));
    }
    if cfg.n_lo < 4 || cfg.n_lo > cfg.n_hi {
        return Err(Error::InvalidParameter(format!(
            "bad sweep order range [{}, {}]",
            cfg.n_lo, cfg.n_hi
        )));
    }
    // Surface impossible family parameters before spawning workers.
    sweep_family(cfg, cfg.n_lo)?;
    let instances: Result<Vec<SweepInstance>> =
        (0..cfg.count).into_par_iter().map(|i| sweep_one(cfg, opts, i)).collect();
    let instances = instances?;
    let mut report = SweepReport {
        theorem: cfg.theorem,
        seed: cfg.seed,
        count: cfg.count,
        n_lo: cfg.n_lo,
        n_hi: cfg.n_hi,
        certified: 0,
        exceptional: 0,
        inconclusive: 0,
        precondition_failed: 0,
        oracle_checked: 0,
        tau_violations: 0,
        tau_prime_violations: 0,
        exception_mismatches: 0,
        instances,
    };
    for inst in &report.instances {
        match inst.verdict {
            Verdict::Certified => report.certified += 1,
            Verdict::ExtremalException => report.exceptional += 1,
            Verdict::Inconclusive => report.inconclusive += 1,
            Verdict::PreconditionFailed => report.precondition_failed += 1,
        }
        if inst.tau_sound.is_some() || inst.exception_consistent.is_some() {
            report.oracle_checked += 1;
        }
        if inst.tau_sound == Some(false) {
            report.tau_violations += 1;
        }
        if inst.tau_prime_sound == Some(false) {
            report.tau_prime_violations += 1;
        }
        if inst.exception_consistent == Some(false) {
            report.exception_mismatches += 1;
        }
    }
    Ok(report)
}

//! Numeric verifiers for the supporting inequalities behind the
//! certificates. Each verifier replays one inequality over a seeded case
//! mix — deterministic witnesses plus randomized instances — and reports
//! case counts, failures and the tightest margin it saw.

use crate::error::{Error, Result};
use crate::extremal::{compare_families, quotient_closed_form, CharPolyParams};
use crate::generate::{random_comparison_sample, random_connected_gnp};
use crate::graph::{build_family, ExtremalSpec, Graph};
use crate::spectral::{
    dsl_matrix, perron_value, quotient, transmissions, wiener_index, EigOptions, Partition,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const LEMMA_TOKENS: [&str; 6] = ["2.1", "2.2", "2.3", "2.4", "2.5", "3.1"];

#[derive(Debug, Clone)]
pub struct LemmaReport {
    /// Command-line token for this inequality.
    pub id: &'static str,
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    /// Tightest margin observed; the measured quantity is verifier-specific
    /// and spelled out in `notes`.
    pub worst: f64,
    pub pass: bool,
    pub notes: Vec<String>,
}

impl LemmaReport {
    fn new(id: &'static str, name: &'static str) -> LemmaReport {
        LemmaReport { id, name, cases: 0, failures: 0, worst: f64::INFINITY, pass: true, notes: Vec::new() }
    }

    fn record(&mut self, margin: f64, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        self.worst = self.worst.min(margin);
        if !ok {
            self.failures += 1;
            self.pass = false;
            if self.notes.len() < 16 {
                self.notes.push(detail());
            }
        }
    }

    fn finish(mut self, summary: String) -> LemmaReport {
        self.notes.insert(0, summary);
        self
    }
}

fn eta1(g: &Graph, opts: &EigOptions) -> Result<f64> {
    Ok(perron_value(&dsl_matrix(g)?, opts)?.0)
}

/// `2.1` — removing an edge from a connected graph, while keeping it
/// connected, strictly raises the largest eigenvalue.
pub fn verify_edge_deletion(seed: u64, opts: &EigOptions) -> Result<LemmaReport> {
    let mut report = LemmaReport::new("2.1", "edge deletion raises eta1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x2101);
    let mut bases: Vec<Graph> = vec![
        Graph::cycle(6)?,
        Graph::complete(7),
        Graph::complete_bipartite(3, 4),
        build_family(&ExtremalSpec::new(2, vec![6, 1, 1])?),
    ];
    for _ in 0..12 {
        let n = rng.gen_range(6..=12);
        let p = rng.gen_range(0.35..0.85);
        bases.push(random_connected_gnp(&mut rng, n, p)?);
    }
    for g in &bases {
        let before = eta1(g, opts)?;
        let mut removable: Vec<(usize, usize)> = Vec::new();
        for (u, v) in g.edges() {
            let mut h = g.clone();
            h.remove_edge(u, v);
            if h.is_connected() {
                removable.push((u, v));
            }
        }
        if removable.is_empty() {
            continue;
        }
        for _ in 0..removable.len().min(3) {
            let (u, v) = removable[rng.gen_range(0..removable.len())];
            let mut h = g.clone();
            h.remove_edge(u, v);
            let after = eta1(&h, opts)?;
            let margin = after - before;
            report.record(margin, margin > 1e-7, || {
                format!("n = {}, removing ({u}, {v}): eta1 moved by {margin:.3e}", g.order())
            });
        }
    }
    let worst = report.worst;
    Ok(report.finish(format!("margin is eta1(G - e) - eta1(G); smallest seen {worst:.3e}")))
}

/// `2.2` — the spectral radius of an equitable quotient equals the spectral
/// radius of the full matrix. Exercised on the closed-form families, whose
/// natural partitions are equitable.
pub fn verify_quotient_equality(opts: &EigOptions) -> Result<LemmaReport> {
    let mut report = LemmaReport::new("2.2", "equitable quotient preserves the spectral radius");
    let mut params: Vec<CharPolyParams> = Vec::new();
    for delta in 1..=4i64 {
        params.push(CharPolyParams::BStar { n: 11 * delta.max(2), delta });
    }
    for s in 1..=2i64 {
        for q in 1..=3i64 {
            params.push(CharPolyParams::BTilde { n: 20 + 3 * q + 2 * s, s, q });
        }
    }
    for delta in 2..=3i64 {
        for s in 1..=delta {
            params.push(CharPolyParams::B2 { n: 24, delta, s });
        }
    }
    for p in &params {
        let g = p.family_graph()?;
        let partition = p.family_partition()?;
        let m = dsl_matrix(&g)?;
        let q = quotient(&m, &partition)?;
        let closed = quotient_closed_form(p)?;
        let mut entry_gap = 0.0f64;
        for i in 0..3 {
            for j in 0..3 {
                entry_gap = entry_gap.max((q.get(i, j) - closed.get(i, j)).abs());
            }
        }
        let full = perron_value(&m, opts)?.0;
        let reduced = perron_value(&q.to_dense(), opts)?.0;
        let scale = full.abs().max(1.0);
        let gap = (full - reduced).abs() / scale;
        let ok = q.is_equitable() && entry_gap <= 1e-9 && gap <= 1e-8;
        report.record(-gap, ok, || {
            format!(
                "{}: equitable = {}, entry gap {entry_gap:.3e}, radius gap {gap:.3e}",
                p.label(),
                q.is_equitable()
            )
        });
    }
    // A handmade equitable partition away from the family shapes.
    let g = Graph::complete_bipartite(2, 3);
    let m = dsl_matrix(&g)?;
    let partition = Partition::new(5, vec![vec![0, 1], vec![2, 3, 4]])?;
    let q = quotient(&m, &partition)?;
    let full = perron_value(&m, opts)?.0;
    let reduced = perron_value(&q.to_dense(), opts)?.0;
    let gap = (full - reduced).abs() / full.abs().max(1.0);
    report.record(-gap, q.is_equitable() && gap <= 1e-8, || {
        format!("K_2,3: radius gap {gap:.3e}")
    });
    let worst = -report.worst;
    Ok(report.finish(format!("margin is -(relative radius gap); largest gap {worst:.3e}")))
}

/// `2.3` — `eta1 >= 4W/n`, with equality exactly on transmission-regular
/// graphs; also checks the weaker size-based floor `4(n-1) - 4m/n`.
pub fn verify_wiener_bound(seed: u64, opts: &EigOptions) -> Result<LemmaReport> {
    let mut report = LemmaReport::new("2.3", "Wiener transmission bound");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x2301);
    let mut regular: Vec<Graph> = Vec::new();
    for n in [4usize, 5, 7, 12, 20, 40] {
        regular.push(Graph::cycle(n)?);
    }
    for n in [2usize, 5, 17, 40] {
        regular.push(Graph::complete(n));
    }
    for r in 2..=5usize {
        regular.push(Graph::complete_bipartite(r, r));
    }
    let mut irregular: Vec<Graph> =
        vec![Graph::path(4), Graph::star(3), Graph::complete_bipartite(2, 3)];
    for _ in 0..20 {
        let n = rng.gen_range(5..=12);
        let p = rng.gen_range(0.3..0.9);
        irregular.push(random_connected_gnp(&mut rng, n, p)?);
    }
    for (g, expect_regular) in regular
        .iter()
        .map(|g| (g, true))
        .chain(irregular.iter().map(|g| (g, false)))
    {
        let n = g.order() as f64;
        let value = eta1(g, opts)?;
        let scale = value.abs().max(1.0);
        let wiener_floor = 4.0 * wiener_index(g)? as f64 / n;
        let size_floor = 4.0 * (n - 1.0) - 4.0 * g.size() as f64 / n;
        let trs = transmissions(g)?;
        let is_regular = trs.iter().all(|&t| t == trs[0]);
        let margin = (value - wiener_floor) / scale;
        let mut ok = margin >= -1e-9 && value >= size_floor - 1e-9 * scale;
        ok &= is_regular == expect_regular;
        if is_regular {
            ok &= margin.abs() <= 1e-8;
        } else {
            ok &= margin > 1e-9;
        }
        report.record(margin, ok, || {
            format!(
                "n = {}, m = {}: eta1 = {value:.6}, 4W/n = {wiener_floor:.6}, regular = {is_regular}",
                g.order(),
                g.size()
            )
        });
    }
    let worst = report.worst;
    Ok(report.finish(format!(
        "margin is (eta1 - 4W/n)/eta1, zero on transmission-regular cases; smallest seen {worst:.3e}"
    )))
}

fn verify_comparison(
    id: &'static str,
    name: &'static str,
    force_p_one: bool,
    seed: u64,
    opts: &EigOptions,
) -> Result<LemmaReport> {
    let mut report = LemmaReport::new(id, name);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ if force_p_one { 0x2401 } else { 0x2501 });
    let strict_margin = 1e-9;
    for _ in 0..30 {
        let sample = random_comparison_sample(&mut rng, force_p_one);
        let cmp = compare_families(sample.s, &sample.parts, sample.p, strict_margin, opts)?;
        debug_assert!(cmp.premises_met, "generator must satisfy the premises");
        let (margin, ok) = if cmp.matches_reference {
            // Equality case: the composition is already the reference.
            (cmp.difference.abs(), cmp.difference.abs() <= 1e-8 * cmp.eta1_reference.abs())
        } else {
            (cmp.difference, cmp.strict)
        };
        report.record(margin, ok, || {
            format!(
                "s = {}, parts = {:?}, p = {}: difference {:.3e} (reference {:?})",
                cmp.hub, cmp.parts, cmp.small_part, cmp.difference, cmp.reference_parts
            )
        });
    }
    let worst = report.worst;
    Ok(report.finish(format!(
        "margin is eta1(parts) - eta1(reference), expected > 0 off the reference; smallest seen {worst:.3e}"
    )))
}

/// `2.4` — with unit small parts, every other composition has a strictly
/// larger eigenvalue than the reference `[n - s - (c-1), 1, …, 1]`.
pub fn verify_unit_comparison(seed: u64, opts: &EigOptions) -> Result<LemmaReport> {
    verify_comparison("2.4", "composition comparison, unit small parts", true, seed, opts)
}

/// `2.5` — the same comparison with small parts of size `p >= 1`.
pub fn verify_general_comparison(seed: u64, opts: &EigOptions) -> Result<LemmaReport> {
    verify_comparison("2.5", "composition comparison, general small parts", false, seed, opts)
}

/// `3.1` — `eta1 >= 2n - 2`, with equality exactly on complete graphs.
pub fn verify_complete_floor(seed: u64, opts: &EigOptions) -> Result<LemmaReport> {
    let mut report = LemmaReport::new("3.1", "complete-graph floor");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x3101);
    let mut cases: Vec<Graph> = Vec::new();
    for n in [2usize, 3, 8, 21, 40] {
        cases.push(Graph::complete(n));
    }
    for n in [5usize, 9, 15] {
        let mut g = Graph::complete(n);
        g.remove_edge(0, 1);
        cases.push(g);
    }
    cases.push(Graph::cycle(9)?);
    cases.push(Graph::path(7));
    for _ in 0..15 {
        let n = rng.gen_range(4..=12);
        let p = rng.gen_range(0.3..0.95);
        cases.push(random_connected_gnp(&mut rng, n, p)?);
    }
    for g in &cases {
        let n = g.order() as f64;
        let value = eta1(g, opts)?;
        let floor = 2.0 * n - 2.0;
        let scale = value.abs().max(1.0);
        let margin = (value - floor) / scale;
        let near_floor = margin.abs() <= 1e-8;
        let ok = margin >= -1e-9 && (g.is_complete() == near_floor);
        report.record(margin, ok, || {
            format!(
                "n = {}, m = {}: eta1 = {value:.6} vs floor {floor}, complete = {}",
                g.order(),
                g.size(),
                g.is_complete()
            )
        });
    }
    let worst = report.worst;
    Ok(report.finish(format!(
        "margin is (eta1 - (2n - 2))/eta1, zero exactly on complete graphs; smallest seen {worst:.3e}"
    )))
}

/// Runs the verifier named by `token` (see [`LEMMA_TOKENS`]).
pub fn verify_lemma(token: &str, seed: u64, opts: &EigOptions) -> Result<LemmaReport> {
    match token {
        "2.1" => verify_edge_deletion(seed, opts),
        "2.2" => verify_quotient_equality(opts),
        "2.3" => verify_wiener_bound(seed, opts),
        "2.4" => verify_unit_comparison(seed, opts),
        "2.5" => verify_general_comparison(seed, opts),
        "3.1" => verify_complete_floor(seed, opts),
        _ => Err(Error::InvalidParameter(format!(
            "unknown inequality token {token:?}; expected one of {LEMMA_TOKENS:?}"
        ))),
    }
}

/// Runs every verifier with the same seed.
pub fn verify_all(seed: u64, opts: &EigOptions) -> Result<Vec<LemmaReport>> {
    LEMMA_TOKENS.iter().map(|t| verify_lemma(t, seed, opts)).collect()
}

//! Exact toughness by exhaustive vertex-cut enumeration over bitmask
//! adjacency. Intended for small graphs; the order cap keeps runtimes sane.
//!
//! Two quantities are computed over all cuts `S` with `c(G − S) ≥ 2`:
//! the toughness `τ = min |S| / c(G − S)` and the variant
//! `τ′ = min |S| / (c(G − S) − 1)`. Complete graphs have no vertex cut and
//! both values are reported as infinite.

use crate::error::{Error, Result};
use crate::graph::Graph;
use num::rational::Ratio;

pub type Rational = Ratio<i64>;

/// Hard ceiling imposed by the `u64` bitmask representation.
pub const ORDER_LIMIT: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Toughness {
    Finite(Rational),
    Infinite,
}

impl Toughness {
    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            Toughness::Finite(r) => Some(*r),
            Toughness::Infinite => None,
        }
    }
}

/// A vertex cut witnessing a toughness value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutWitness {
    /// Deleted vertices, ascending.
    pub vertices: Vec<usize>,
    /// Component count of the remainder.
    pub components: usize,
    /// The objective value this cut attains (`|S|/c` or `|S|/(c−1)`).
    pub ratio: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToughnessReport {
    pub tau: Toughness,
    pub tau_prime: Toughness,
    pub tau_witness: Option<CutWitness>,
    pub tau_prime_witness: Option<CutWitness>,
}

/// Which objective a decision query uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    /// `t`-tough: `t · c(G − S) ≤ |S|` for every cut.
    Tau,
    /// Variant reading: `t · (c(G − S) − 1) ≤ |S|` for every cut.
    TauPrime,
}

#[derive(Debug, Clone)]
pub struct OracleOptions {
    /// Largest order accepted; raising it beyond ~28 gets expensive fast.
    pub cap: usize,
}

impl Default for OracleOptions {
    fn default() -> OracleOptions {
        OracleOptions { cap: 24 }
    }
}

fn check_input(g: &Graph, opts: &OracleOptions) -> Result<()> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyResult("toughness of the empty graph"));
    }
    let cap = opts.cap.min(ORDER_LIMIT);
    if n > cap {
        return Err(Error::CapacityExceeded { order: n, cap });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

fn adjacency_masks(g: &Graph) -> Vec<u64> {
    (0..g.order())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | (1u64 << w)))
        .collect()
}

/// Counts components of the graph restricted to `alive` (a nonempty mask).
fn count_components(adj: &[u64], mut alive: u64) -> usize {
    let mut count = 0;
    while alive != 0 {
        count += 1;
        let seed = alive & alive.wrapping_neg();
        let mut comp = seed;
        let mut frontier = seed;
        while frontier != 0 {
            let mut reach = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                reach |= adj[v];
            }
            frontier = reach & alive & !comp;
            comp |= frontier;
        }
        alive &= !comp;
    }
    count
}

fn cut_vertices(mask: u64) -> Vec<usize> {
    let mut out = Vec::new();
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

/// First subset mask of the given popcount, or `None` when impossible.
fn first_subset(size: usize, n: usize) -> Option<u64> {
    if size == 0 || size > n {
        return None;
    }
    Some((1u64 << size) - 1)
}

/// Successor of `mask` among `n`-bit masks of equal popcount (Gosper's hack).
/// Widened to 128 bits so the carry cannot wrap even at `n = 64`.
fn next_subset(mask: u64, n: usize) -> Option<u64> {
    let m = mask as u128;
    let c = m & m.wrapping_neg();
    let r = m + c;
    if r >= 1u128 << n {
        return None;
    }
    Some((r | (((m ^ r) >> 2) / c)) as u64)
}

struct Best {
    ratio: Rational,
    witness: CutWitness,
}

fn consider(best: &mut Option<Best>, ratio: Rational, mask: u64, comps: usize) {
    // Strict improvement only: the first cut attaining a value (in
    // size-then-mask order) stays the witness, which keeps the pruned and
    // unpruned scans byte-identical.
    if best.as_ref().map_or(true, |b| ratio < b.ratio) {
        *best = Some(Best {
            ratio,
            witness: CutWitness { vertices: cut_vertices(mask), components: comps, ratio },
        });
    }
}

fn scan(g: &Graph, prune: bool) -> ToughnessReport {
    let n = g.order();
    let adj = adjacency_masks(g);
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best_tau: Option<Best> = None;
    let mut best_tau_prime: Option<Best> = None;
    // A cut must leave at least two vertices behind.
    for size in 1..=n.saturating_sub(2) {
        if prune {
            // Even the best case (all survivors isolated) cannot improve on
            // the current minima once |S|/(n − |S|) is too large.
            let s = size as i64;
            let rest = (n - size) as i64;
            let tau_floor = Rational::new(s, rest);
            let tau_prime_floor = if rest > 1 { Rational::new(s, rest - 1) } else { tau_floor };
            let tau_open = best_tau.as_ref().map_or(true, |b| tau_floor < b.ratio);
            let tp_open = best_tau_prime.as_ref().map_or(true, |b| tau_prime_floor < b.ratio);
            if !tau_open && !tp_open {
                break;
            }
        }
        let mut mask = match first_subset(size, n) {
            Some(m) => m,
            None => break,
        };
        loop {
            let alive = full & !mask;
            let comps = count_components(&adj, alive);
            if comps >= 2 {
                let s = size as i64;
                consider(&mut best_tau, Rational::new(s, comps as i64), mask, comps);
                consider(&mut best_tau_prime, Rational::new(s, comps as i64 - 1), mask, comps);
            }
            mask = match next_subset(mask, n) {
                Some(m) => m,
                None => break,
            };
        }
    }
    match (best_tau, best_tau_prime) {
        (Some(t), Some(tp)) => ToughnessReport {
            tau: Toughness::Finite(t.ratio),
            tau_prime: Toughness::Finite(tp.ratio),
            tau_witness: Some(t.witness),
            tau_prime_witness: Some(tp.witness),
        },
        // No vertex cut at all: connected input must be complete.
        _ => ToughnessReport {
            tau: Toughness::Infinite,
            tau_prime: Toughness::Infinite,
            tau_witness: None,
            tau_prime_witness: None,
        },
    }
}

/// Exact toughness and variant, with pruned enumeration.
pub fn toughness_exact(g: &Graph, opts: &OracleOptions) -> Result<ToughnessReport> {
    check_input(g, opts)?;
    Ok(scan(g, true))
}

/// Reference implementation without the size-based pruning; scans every
/// subset. Exists so tests can confirm the pruning changes nothing.
pub fn toughness_exact_unpruned(g: &Graph, opts: &OracleOptions) -> Result<ToughnessReport> {
    check_input(g, opts)?;
    Ok(scan(g, false))
}

/// Decides whether `g` is `t`-tough (under the chosen variant) and returns a
/// violating cut when it is not. Complete graphs are `t`-tough for every `t`.
pub fn is_t_tough(
    g: &Graph,
    t: Rational,
    variant: Variant,
    opts: &OracleOptions,
) -> Result<(bool, Option<CutWitness>)> {
    if t <= Rational::new(0, 1) {
        return Err(Error::InvalidParameter(format!("toughness level must be positive, got {t}")));
    }
    check_input(g, opts)?;
    let n = g.order();
    let adj = adjacency_masks(g);
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    for size in 1..=n.saturating_sub(2) {
        // Largest possible component count is n − |S|; if even that cannot
        // violate the bound, no larger cut can either.
        let s = size as i64;
        let c_max = (n - size) as i64;
        let most = match variant {
            Variant::Tau => t * c_max,
            Variant::TauPrime => t * (c_max - 1),
        };
        if most <= Rational::new(s, 1) {
            break;
        }
        let mut mask = match first_subset(size, n) {
            Some(m) => m,
            None => break,
        };
        loop {
            let alive = full & !mask;
            let comps = count_components(&adj, alive) as i64;
            if comps >= 2 {
                let demand = match variant {
                    Variant::Tau => t * comps,
                    Variant::TauPrime => t * (comps - 1),
                };
                if demand > Rational::new(s, 1) {
                    let denom = match variant {
                        Variant::Tau => comps,
                        Variant::TauPrime => comps - 1,
                    };
                    return Ok((
                        false,
                        Some(CutWitness {
                            vertices: cut_vertices(mask),
                            components: comps as usize,
                            ratio: Rational::new(s, denom),
                        }),
                    ));
                }
            }
            mask = match next_subset(mask, n) {
                Some(m) => m,
                None => break,
            };
        }
    }
    Ok((true, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, ExtremalSpec};

    fn rat(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    fn report(g: &Graph) -> ToughnessReport {
        toughness_exact(g, &OracleOptions::default()).unwrap()
    }

    #[test]
    fn complete_graphs_are_infinitely_tough() {
        for n in [1usize, 2, 5] {
            let r = report(&Graph::complete(n));
            assert_eq!(r.tau, Toughness::Infinite);
            assert_eq!(r.tau_prime, Toughness::Infinite);
            assert!(r.tau_witness.is_none());
        }
    }

    #[test]
    fn known_small_values() {
        // Star K_{1,3}: delete the center, 3 components.
        let r = report(&Graph::star(3));
        assert_eq!(r.tau, Toughness::Finite(rat(1, 3)));
        assert_eq!(r.tau_prime, Toughness::Finite(rat(1, 2)));
        let w = r.tau_witness.unwrap();
        assert_eq!(w.vertices, vec![0]);
        assert_eq!(w.components, 3);

        // Cycle C_5: two deletions split it into two paths.
        let r = report(&Graph::cycle(5).unwrap());
        assert_eq!(r.tau, Toughness::Finite(rat(1, 1)));
        assert_eq!(r.tau_prime, Toughness::Finite(rat(2, 1)));

        // Path P_4: delete an interior vertex.
        let r = report(&Graph::path(4));
        assert_eq!(r.tau, Toughness::Finite(rat(1, 2)));
        assert_eq!(r.tau_prime, Toughness::Finite(rat(1, 1)));

        // K_{2,3}: delete the small side.
        let r = report(&Graph::complete_bipartite(2, 3));
        assert_eq!(r.tau, Toughness::Finite(rat(2, 3)));
        assert_eq!(r.tau_prime, Toughness::Finite(rat(1, 1)));
    }

    #[test]
    fn family_graph_value() {
        // K_2 ∨ (K_5 + K_1 + K_1): deleting the hub leaves 3 parts.
        let spec = ExtremalSpec::new(2, vec![5, 1, 1]).unwrap();
        let r = report(&build_family(&spec));
        assert_eq!(r.tau, Toughness::Finite(rat(2, 3)));
        assert_eq!(r.tau_prime, Toughness::Finite(rat(1, 1)));
        let w = r.tau_witness.unwrap();
        assert_eq!(w.vertices, vec![0, 1]);
        assert_eq!(w.components, 3);
    }

    #[test]
    fn witness_actually_attains_the_reported_ratio() {
        let g = Graph::from_edges(
            7,
            &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 3)],
        )
        .unwrap();
        let r = report(&g);
        let w = r.tau_witness.unwrap();
        let (rest, _) = g.delete_vertices(&w.vertices).unwrap();
        assert_eq!(rest.components().len(), w.components);
        assert_eq!(rat(w.vertices.len() as i64, w.components as i64), w.ratio);
        assert_eq!(Toughness::Finite(w.ratio), r.tau);
    }

    #[test]
    fn tau_prime_dominates_tau() {
        let graphs = [
            Graph::star(4),
            Graph::path(6),
            Graph::cycle(7).unwrap(),
            Graph::complete_bipartite(3, 4),
        ];
        for g in &graphs {
            let r = report(g);
            let (t, tp) = (r.tau.as_rational().unwrap(), r.tau_prime.as_rational().unwrap());
            assert!(tp >= t);
        }
    }

    #[test]
    fn decision_queries_match_the_exact_value() {
        let opts = OracleOptions::default();
        let g = Graph::cycle(6).unwrap(); // τ = 1, τ′ = 3/2
        assert!(is_t_tough(&g, rat(1, 1), Variant::Tau, &opts).unwrap().0);
        let (ok, w) = is_t_tough(&g, rat(9, 8), Variant::Tau, &opts).unwrap();
        assert!(!ok);
        let w = w.unwrap();
        assert!(rat(w.vertices.len() as i64, w.components as i64) < rat(9, 8));
        assert!(is_t_tough(&g, rat(3, 2), Variant::TauPrime, &opts).unwrap().0);
        assert!(!is_t_tough(&g, rat(2, 1), Variant::TauPrime, &opts).unwrap().0);
        // Complete graphs pass any level.
        let k6 = Graph::complete(6);
        assert!(is_t_tough(&k6, rat(1000, 1), Variant::Tau, &opts).unwrap().0);
        assert!(is_t_tough(&k6, rat(1000, 1), Variant::TauPrime, &opts).unwrap().0);
        assert!(is_t_tough(&g, rat(0, 1), Variant::Tau, &opts).is_err());
    }

    #[test]
    fn guards_reject_bad_input() {
        let opts = OracleOptions::default();
        let disconnected = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(toughness_exact(&disconnected, &opts), Err(Error::Disconnected));
        let big = Graph::cycle(25).unwrap();
        assert_eq!(
            toughness_exact(&big, &opts),
            Err(Error::CapacityExceeded { order: 25, cap: 24 })
        );
        let loose = OracleOptions { cap: 100 };
        let g65 = Graph::cycle(65).unwrap();
        assert_eq!(
            toughness_exact(&g65, &loose),
            Err(Error::CapacityExceeded { order: 65, cap: 64 })
        );
    }

    #[test]
    fn pruned_and_unpruned_agree_exactly() {
        let opts = OracleOptions::default();
        let graphs = [
            Graph::star(5),
            Graph::path(7),
            Graph::cycle(8).unwrap(),
            Graph::complete_bipartite(3, 5),
            build_family(&ExtremalSpec::new(2, vec![4, 1, 1]).unwrap()),
            Graph::complete(6),
        ];
        for g in &graphs {
            let fast = toughness_exact(g, &opts).unwrap();
            let slow = toughness_exact_unpruned(g, &opts).unwrap();
            assert_eq!(fast, slow);
        }
    }
}

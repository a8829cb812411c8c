//! Deterministic graph generators for sweeps and property tests: seeded
//! random connected graphs, near-complete graphs, family perturbations, and
//! isomorph-free enumeration of all connected graphs of a given small order.

use crate::error::{Error, Result};
use crate::graph::{build_family, ExtremalSpec, Graph};
use rand::seq::SliceRandom;
use rand::Rng;
use std::collections::HashSet;

/// Random connected graph: a random recursive tree plus each remaining pair
/// independently with probability `p`. Not uniform over connected graphs,
/// but deterministic for a fixed generator state.
pub fn random_connected_gnp(rng: &mut impl Rng, n: usize, p: f64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyResult("random graph on zero vertices"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("edge probability {p} outside [0, 1]")));
    }
    let mut g = Graph::empty(n);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(u, v)?;
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if !g.has_edge(u, v) && rng.gen_bool(p) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// Complete graph minus up to `deletions` random edges, never disconnecting.
/// Deletions that would disconnect the graph are skipped.
pub fn dense_near_complete(rng: &mut impl Rng, n: usize, deletions: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "near-complete generator needs n >= 2, got {n}"
        )));
    }
    let mut g = Graph::complete(n);
    let mut pairs: Vec<(usize, usize)> = g.edges();
    pairs.shuffle(rng);
    let mut removed = 0;
    for (u, v) in pairs {
        if removed == deletions {
            break;
        }
        g.remove_edge(u, v);
        if g.is_connected() {
            removed += 1;
        } else {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// Complete graph with vertex 0 trimmed down to exactly `delta` random
/// neighbours, then up to `deletions` extra edges removed elsewhere while
/// keeping every other degree strictly above `delta`.  The result is a dense
/// graph whose minimum degree is pinned at `delta`.
pub fn dense_low_degree(
    rng: &mut impl Rng,
    n: usize,
    delta: usize,
    deletions: usize,
) -> Result<Graph> {
    if delta == 0 || n < delta + 3 {
        return Err(Error::InvalidParameter(format!(
            "pinned-degree generator needs 1 <= delta <= n - 3, got delta={delta}, n={n}"
        )));
    }
    let mut g = Graph::complete(n);
    let mut others: Vec<usize> = (1..n).collect();
    others.shuffle(rng);
    for &v in &others[delta..] {
        g.remove_edge(0, v);
    }
    let mut pairs: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(u, _)| u != 0)
        .collect();
    pairs.shuffle(rng);
    let mut removed = 0;
    for (u, v) in pairs {
        if removed == deletions {
            break;
        }
        if g.degree(u) <= delta + 1 || g.degree(v) <= delta + 1 {
            continue;
        }
        g.remove_edge(u, v);
        if g.is_connected() {
            removed += 1;
        } else {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// Random vertex relabeling of `g`.
pub fn random_relabel(rng: &mut impl Rng, g: &Graph) -> Graph {
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(rng);
    g.relabel(&perm).expect("shuffled identity is a permutation")
}

/// Family graph with up to `extra` edges added from singleton parts into the
/// large clique, always leaving the last singleton untouched so the minimum
/// degree of the family is preserved.
pub fn perturbed_family(
    rng: &mut impl Rng,
    spec: &ExtremalSpec,
    extra: usize,
) -> Result<Graph> {
    let mut g = build_family(spec);
    let s = spec.hub();
    let parts = spec.parts();
    if parts.len() < 2 || parts[0] < 2 || *parts.last().unwrap() != 1 {
        return Err(Error::InvalidSpec(
            "perturbation expects a family with a large clique and singleton parts".to_string(),
        ));
    }
    let big_lo = s;
    let big_hi = s + parts[0];
    let singles: Vec<usize> = (big_hi..g.order()).collect();
    if singles.len() < 2 {
        return Ok(g);
    }
    for _ in 0..extra {
        // singles[0] is the protected one
        let v = singles[rng.gen_range(1..singles.len())];
        let w = rng.gen_range(big_lo..big_hi);
        g.add_edge(v, w)?;
    }
    Ok(g)
}

/// Random parameters for a family comparison: hub size, part composition and
/// small-part size `p` satisfying the comparison-lemma premises.
#[derive(Debug, Clone)]
pub struct ComparisonSample {
    pub s: usize,
    pub parts: Vec<usize>,
    pub p: usize,
}

pub fn random_comparison_sample(rng: &mut impl Rng, force_p_one: bool) -> ComparisonSample {
    let p = if force_p_one { 1 } else { rng.gen_range(1..=3) };
    let c = rng.gen_range(2..=4usize);
    let s = rng.gen_range(1..=3);
    let mut parts: Vec<usize> = (0..c - 1).map(|_| rng.gen_range(p..=p + 2)).collect();
    let second = parts.iter().copied().max().unwrap_or(p);
    parts.push(second + 2 * p + rng.gen_range(0..=3));
    ComparisonSample { s, parts, p }
}

// --- exhaustive enumeration ----------------------------------------------------

/// Canonical 28-bit-or-smaller code of a graph on `n <= 8` vertices given as
/// neighbor bitmasks: the lexicographically largest packed upper triangle
/// over all vertex orderings with non-increasing degrees.
fn canon_code(n: usize, adj: &[u32]) -> u64 {
    struct Search<'a> {
        n: usize,
        adj: &'a [u32],
        deg: Vec<u32>,
        total_bits: usize,
        best: u64,
        have_best: bool,
    }

    impl Search<'_> {
        fn descend(&mut self, perm: &mut Vec<usize>, used: &mut [bool], prefix: u64, bits: usize) {
            if perm.len() == self.n {
                if !self.have_best || prefix > self.best {
                    self.best = prefix;
                    self.have_best = true;
                }
                return;
            }
            // Restricting to degree-sorted orderings keeps the code an
            // isomorphism invariant while cutting the search down hard.
            let max_deg = (0..self.n)
                .filter(|&v| !used[v])
                .map(|v| self.deg[v])
                .max()
                .unwrap();
            for v in 0..self.n {
                if used[v] || self.deg[v] != max_deg {
                    continue;
                }
                let mut p = prefix;
                for &u in perm.iter() {
                    p = (p << 1) | u64::from(self.adj[u] >> v & 1);
                }
                let nb = bits + perm.len();
                if self.have_best && p < (self.best >> (self.total_bits - nb)) {
                    continue;
                }
                used[v] = true;
                perm.push(v);
                self.descend(perm, used, p, nb);
                perm.pop();
                used[v] = false;
            }
        }
    }

    let mut s = Search {
        n,
        adj,
        deg: adj.iter().map(|m| m.count_ones()).collect(),
        total_bits: n * (n - 1) / 2,
        best: 0,
        have_best: false,
    };
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    s.descend(&mut perm, &mut used, 0, 0);
    s.best
}

fn masks_to_graph(adj: &[u32]) -> Graph {
    let n = adj.len();
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if adj[u] >> v & 1 == 1 {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// One representative per isomorphism class of connected graphs on exactly
/// `n` vertices, built by vertex augmentation with canonical-code dedupe.
/// Practical up to `n = 8` (11117 classes).
pub fn enumerate_connected_classes(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > 8 {
        return Err(Error::InvalidParameter(format!(
            "connected-class enumeration supports 1 <= n <= 8, got {n}"
        )));
    }
    let mut reps: Vec<Vec<u32>> = vec![vec![0]];
    for k in 1..n {
        let mut seen: HashSet<u64> = HashSet::new();
        let mut next: Vec<Vec<u32>> = Vec::new();
        for adj in &reps {
            // Attaching the new vertex to any nonempty subset keeps the
            // graph connected, and every connected (k+1)-vertex graph arises
            // from deleting one of its non-cut vertices.
            for nb in 1u32..(1 << k) {
                let mut a = adj.clone();
                a.push(nb);
                for v in 0..k {
                    if nb >> v & 1 == 1 {
                        a[v] |= 1 << k;
                    }
                }
                if seen.insert(canon_code(k + 1, &a)) {
                    next.push(a);
                }
            }
        }
        reps = next;
    }
    Ok(reps.iter().map(|a| masks_to_graph(a)).collect())
}

/// Connected isomorphism-class counts for orders 1 through 8.
pub const CONNECTED_CLASS_COUNTS: [usize; 8] = [1, 1, 2, 6, 21, 112, 853, 11117];

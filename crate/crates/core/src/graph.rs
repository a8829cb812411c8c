//! Simple undirected graphs with deterministic adjacency-list layout, the
//! hub-join families used by the certifier, and breadth-first distance tables.

use crate::error::{Error, Result};

/// An undirected simple graph on vertices `0..n`.
///
/// Neighbor lists are kept sorted, so iteration order (and everything derived
/// from it: component order, distance tables, serialized forms) is a pure
/// function of the edge set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// The empty graph on `n` vertices (no edges).
    pub fn empty(n: usize) -> Graph {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from an explicit edge list. Rejects loops and
    /// out-of-range endpoints; duplicate edges collapse to one.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Minimum vertex degree, or `None` for the graph on zero vertices.
    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order() {
            return Err(Error::VertexOutOfRange { vertex: v, order: self.order() });
        }
        Ok(())
    }

    /// Inserts the edge `{u, v}`. Returns `true` if the edge was new.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidEdge { u, v, reason: "self-loop" });
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(iu) => {
                self.adj[u].insert(iu, v);
                let iv = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(iv, u);
                Ok(true)
            }
        }
    }

    /// Removes the edge `{u, v}` if present. Returns `true` if it was there.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if !self.has_edge(u, v) {
            return false;
        }
        let iu = self.adj[u].binary_search(&v).unwrap();
        self.adj[u].remove(iu);
        let iv = self.adj[v].binary_search(&u).unwrap();
        self.adj[v].remove(iv);
        true
    }

    /// All edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.order() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.adj.iter().all(|nb| nb.len() == n.saturating_sub(1))
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == n
    }

    /// Connected components, each sorted ascending, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(u) = stack.pop() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Induced subgraph after deleting the vertex set `cut` (duplicates are
    /// tolerated). Returns the subgraph together with `map[new] = old`.
    pub fn delete_vertices(&self, cut: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let n = self.order();
        let mut removed = vec![false; n];
        for &v in cut {
            self.check_vertex(v)?;
            removed[v] = true;
        }
        let map: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
        if map.is_empty() {
            return Err(Error::EmptyResult("vertex deletion removed every vertex"));
        }
        let mut back = vec![usize::MAX; n];
        for (new, &old) in map.iter().enumerate() {
            back[old] = new;
        }
        let mut g = Graph::empty(map.len());
        for (new, &old) in map.iter().enumerate() {
            for &w in &self.adj[old] {
                if !removed[w] && old < w {
                    g.add_edge(new, back[w])?;
                }
            }
        }
        Ok((g, map))
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`. `perm` must be a
    /// permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        if perm.len() != n {
            return Err(Error::InvalidParameter(format!(
                "relabeling has length {}, graph order is {n}",
                perm.len()
            )));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return Err(Error::InvalidParameter(
                    "relabeling is not a permutation".to_string(),
                ));
            }
            seen[p] = true;
        }
        let mut g = Graph::empty(n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v])?;
        }
        Ok(g)
    }

    // --- standard constructions -------------------------------------------

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 1..n {
            g.add_edge(u - 1, u).unwrap();
        }
        g
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!(
                "cycle needs at least 3 vertices, got {n}"
            )));
        }
        let mut g = Graph::path(n);
        g.add_edge(n - 1, 0)?;
        Ok(g)
    }

    /// Star with `leaves` leaves (order `leaves + 1`, center `0`).
    pub fn star(leaves: usize) -> Graph {
        let mut g = Graph::empty(leaves + 1);
        for v in 1..=leaves {
            g.add_edge(0, v).unwrap();
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = Graph::empty(a + b);
        for u in 0..a {
            for v in a..(a + b) {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }
}

// --- hub-join families -----------------------------------------------------

/// Description of the join `K_s ∨ (K_{n1} + ... + K_{nc})`: a hub clique on
/// `s` vertices joined to a disjoint union of cliques.
///
/// Part sizes are stored in non-increasing order regardless of input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalSpec {
    hub: usize,
    parts: Vec<usize>,
}

impl ExtremalSpec {
    pub fn new(hub: usize, parts: Vec<usize>) -> Result<ExtremalSpec> {
        if hub == 0 && parts.is_empty() {
            return Err(Error::InvalidSpec("no hub and no parts".to_string()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidSpec("zero-size part".to_string()));
        }
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(ExtremalSpec { hub, parts })
    }

    pub fn hub(&self) -> usize {
        self.hub
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    pub fn order(&self) -> usize {
        self.hub + self.parts.iter().sum::<usize>()
    }
}

/// Builds the graph described by `spec` with layout: hub vertices first
/// (`0..s`), then each part as a consecutive block in stored (non-increasing)
/// part order.
pub fn build_family(spec: &ExtremalSpec) -> Graph {
    let n = spec.order();
    let s = spec.hub();
    let mut g = Graph::empty(n);
    for u in 0..s {
        for v in (u + 1)..n {
            g.add_edge(u, v).unwrap();
        }
    }
    let mut base = s;
    for &p in spec.parts() {
        for u in base..(base + p) {
            for v in (u + 1)..(base + p) {
                g.add_edge(u, v).unwrap();
            }
        }
        base += p;
    }
    g
}

/// Structural membership test: is `g` isomorphic to the graph described by
/// `spec`? Works for any labeling; no isomorphism search is needed because
/// hub vertices are exactly the universal ones whenever there are two or
/// more parts.
pub fn recognize_family(g: &Graph, spec: &ExtremalSpec) -> bool {
    let n = g.order();
    if n != spec.order() {
        return false;
    }
    // With at most one part the family is a complete graph.
    if spec.part_count() <= 1 {
        return g.is_complete();
    }
    let universal: Vec<usize> = (0..n).filter(|&v| g.degree(v) == n - 1).collect();
    if universal.len() != spec.hub() {
        return false;
    }
    let residual = if universal.is_empty() {
        g.clone()
    } else {
        match g.delete_vertices(&universal) {
            Ok((h, _)) => h,
            Err(_) => return false,
        }
    };
    let comps = residual.components();
    if comps.len() != spec.part_count() {
        return false;
    }
    let mut sizes: Vec<usize> = comps.iter().map(Vec::len).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    if sizes != spec.parts() {
        return false;
    }
    // Every component must induce a clique.
    comps.iter().all(|comp| {
        comp.iter()
            .all(|&u| comp.iter().all(|&v| u == v || residual.has_edge(u, v)))
    })
}

// --- distances ---------------------------------------------------------------

/// Dense table of pairwise shortest-path distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    d: Vec<u32>,
}

impl DistanceTable {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.d[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.d[i * self.n..(i + 1) * self.n]
    }

    /// Eccentricity of vertex `i` (largest distance from it).
    pub fn eccentricity(&self, i: usize) -> u32 {
        self.row(i).iter().copied().max().unwrap_or(0)
    }
}

/// All-pairs distances by one breadth-first search per vertex. The graph must
/// be connected (distances would otherwise be undefined).
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceTable> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyResult("distance table of the empty graph"));
    }
    let mut d = vec![u32::MAX; n * n];
    let mut queue = std::collections::VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        row[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = row[u];
            for &v in g.neighbors(u) {
                if row[v] == u32::MAX {
                    row[v] = du + 1;
                    queue.push_back(v);
                }
            }
        }
        if row.contains(&u32::MAX) {
            return Err(Error::Disconnected);
        }
    }
    Ok(DistanceTable { n, d })
}

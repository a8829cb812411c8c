//! Distance signless Laplacian assembly and its Perron (largest) eigenvalue.
//!
//! For a connected graph the matrix of interest is `Q_D = Tr + D`, where `D`
//! is the pairwise-distance matrix and `Tr` the diagonal matrix of row sums
//! of `D` (vertex transmissions). `Q_D` is symmetric, nonnegative and
//! irreducible, so the power method with a positive start vector converges to
//! the largest eigenvalue and a positive eigenvector.

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, Graph};

/// Row-major dense square matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    order: usize,
    entries: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(order: usize) -> DenseMatrix {
        DenseMatrix { order, entries: vec![0.0; order * order] }
    }

    pub fn identity(order: usize) -> DenseMatrix {
        let mut m = DenseMatrix::zeros(order);
        for i in 0..order {
            m.set(i, i, 1.0);
        }
        m
    }

    /// The all-ones matrix `J`.
    pub fn all_ones(order: usize) -> DenseMatrix {
        DenseMatrix { order, entries: vec![1.0; order * order] }
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<DenseMatrix> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return Err(Error::InvalidParameter("matrix rows are not square".to_string()));
        }
        let entries = rows.iter().flatten().copied().collect();
        Ok(DenseMatrix { order, entries })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.entries[i * self.order + j] = value;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|&e| e >= 0.0)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn matvec(&self, x: &[f64], out: &mut [f64]) {
        debug_assert_eq!(x.len(), self.order);
        debug_assert_eq!(out.len(), self.order);
        for i in 0..self.order {
            let row = self.row(i);
            let mut acc = 0.0;
            for j in 0..self.order {
                acc += row[j] * x[j];
            }
            out[i] = acc;
        }
    }
}

// --- graph-derived matrices --------------------------------------------------

/// Vertex transmissions: `tr(v) = Σ_u d(v, u)`. Connected graphs only.
pub fn transmissions(g: &Graph) -> Result<Vec<u64>> {
    let d = all_pairs_distances(g)?;
    Ok((0..g.order())
        .map(|v| d.row(v).iter().map(|&x| x as u64).sum())
        .collect())
}

/// Wiener index `W = Σ_{i<j} d(i, j)`; the transmissions sum to `2W`.
pub fn wiener_index(g: &Graph) -> Result<u64> {
    let total: u64 = transmissions(g)?.iter().sum();
    debug_assert_eq!(total % 2, 0);
    Ok(total / 2)
}

/// Assembles the distance signless Laplacian `Q_D = Tr + D`.
pub fn dsl_matrix(g: &Graph) -> Result<DenseMatrix> {
    let n = g.order();
    let d = all_pairs_distances(g)?;
    let mut m = DenseMatrix::zeros(n);
    for i in 0..n {
        let mut tr = 0.0;
        for j in 0..n {
            let dij = d.get(i, j) as f64;
            tr += dij;
            m.set(i, j, dij);
        }
        m.set(i, i, tr);
    }
    Ok(m)
}

// --- eigensolver ---------------------------------------------------------------

/// Power-method controls. The defaults are what every caller in this crate
/// uses; loosen `max_iter` only for experiments.
#[derive(Debug, Clone)]
pub struct EigOptions {
    /// Relative change in the Rayleigh quotient required between iterations.
    pub rel_change: f64,
    /// Sup-norm residual `‖Mx − λx‖∞` bound, relative to `λ`.
    pub residual_tol: f64,
    pub max_iter: usize,
}

impl Default for EigOptions {
    fn default() -> EigOptions {
        EigOptions { rel_change: 1e-12, residual_tol: 1e-9, max_iter: 100_000 }
    }
}

/// Largest eigenvalue and unit eigenvector of a nonnegative symmetric matrix
/// by power iteration from the normalized all-ones vector.
///
/// Convergence requires both the Rayleigh quotient to settle (relative change
/// at most `rel_change`) and the residual `‖Mx − λx‖∞` to drop below
/// `residual_tol · max(λ, 1)`. Failure to converge is an error carrying the
/// last residual, never a silent wrong answer.
pub fn perron_value(m: &DenseMatrix, opts: &EigOptions) -> Result<(f64, Vec<f64>)> {
    let n = m.order();
    if n == 0 {
        return Err(Error::InvalidParameter("eigensolve on an empty matrix".to_string()));
    }
    if !m.is_nonnegative() {
        return Err(Error::InvalidParameter(
            "power iteration requires a nonnegative matrix".to_string(),
        ));
    }
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut y = vec![0.0; n];
    let mut prev = f64::NAN;
    let mut last_residual = f64::INFINITY;
    for it in 0..opts.max_iter {
        m.matvec(&x, &mut y);
        // x is kept at unit 2-norm, so the Rayleigh quotient is x·Mx.
        let lambda: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let mut residual = 0.0f64;
        for i in 0..n {
            residual = residual.max((y[i] - lambda * x[i]).abs());
        }
        last_residual = residual;
        let scale = lambda.abs().max(1.0);
        if it > 0
            && (lambda - prev).abs() <= opts.rel_change * scale
            && residual <= opts.residual_tol * scale
        {
            return Ok((lambda, x));
        }
        prev = lambda;
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm == 0.0 {
            // The all-ones vector is annihilated; for a nonnegative matrix
            // that means every row is zero.
            return Ok((0.0, x));
        }
        for i in 0..n {
            x[i] = y[i] / norm;
        }
    }
    Err(Error::NonConvergence { iterations: opts.max_iter, residual: last_residual })
}

// --- partitions and quotient matrices ---------------------------------------

/// A partition of `0..order` into nonempty blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    order: usize,
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(order: usize, blocks: Vec<Vec<usize>>) -> Result<Partition> {
        let mut seen = vec![false; order];
        let mut covered = 0usize;
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::InvalidParameter("empty partition block".to_string()));
            }
            for &v in block {
                if v >= order {
                    return Err(Error::VertexOutOfRange { vertex: v, order });
                }
                if seen[v] {
                    return Err(Error::InvalidParameter(format!(
                        "vertex {v} appears in two partition blocks"
                    )));
                }
                seen[v] = true;
                covered += 1;
            }
        }
        if covered != order {
            return Err(Error::InvalidParameter(format!(
                "partition covers {covered} of {order} vertices"
            )));
        }
        Ok(Partition { order, blocks })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }
}

/// Block-averaged quotient of a square matrix, with an exact equitability
/// flag: the partition is equitable for `M` when inside each block every row
/// has the same sum over each other block.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientMatrix {
    entries: Vec<f64>,
    order: usize,
    equitable: bool,
}

impl QuotientMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order + j]
    }

    pub fn is_equitable(&self) -> bool {
        self.equitable
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let mut m = DenseMatrix::zeros(self.order);
        for i in 0..self.order {
            for j in 0..self.order {
                m.set(i, j, self.get(i, j));
            }
        }
        m
    }

    pub(crate) fn from_parts(order: usize, entries: Vec<f64>, equitable: bool) -> QuotientMatrix {
        debug_assert_eq!(entries.len(), order * order);
        QuotientMatrix { entries, order, equitable }
    }
}

/// Quotient of `m` under `p`. Equitability is decided by exact comparison of
/// row sums, which is meaningful here because every matrix we quotient has
/// small integer entries (exactly representable, exactly summable).
pub fn quotient(m: &DenseMatrix, p: &Partition) -> Result<QuotientMatrix> {
    if m.order() != p.order() {
        return Err(Error::InvalidParameter(format!(
            "partition order {} does not match matrix order {}",
            p.order(),
            m.order()
        )));
    }
    let b = p.blocks().len();
    let mut entries = vec![0.0; b * b];
    let mut equitable = true;
    for (bi, rows) in p.blocks().iter().enumerate() {
        for (bj, cols) in p.blocks().iter().enumerate() {
            let mut first = f64::NAN;
            let mut total = 0.0;
            for (k, &r) in rows.iter().enumerate() {
                let s: f64 = cols.iter().map(|&c| m.get(r, c)).sum();
                if k == 0 {
                    first = s;
                } else if s != first {
                    equitable = false;
                }
                total += s;
            }
            entries[bi * b + bj] = total / rows.len() as f64;
        }
    }
    Ok(QuotientMatrix::from_parts(b, entries, equitable))
}

// --- summaries ---------------------------------------------------------------

/// Everything the command-line `spectra` report needs, computed in one pass.
#[derive(Debug, Clone)]
pub struct SpectralSummary {
    pub eta1: f64,
    pub perron: Vec<f64>,
    pub transmissions: Vec<u64>,
    pub wiener: u64,
    pub transmission_regular: bool,
    /// The common transmission when the graph is transmission-regular.
    pub transmission_k: Option<u64>,
}

/// Two classical lower bounds on the largest eigenvalue of `Q_D`:
/// `4W/n` (average transmission) and `4(n−1) − 4m/n` (order/size form).
pub fn eta1_lower_bounds(g: &Graph) -> Result<(f64, f64)> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyResult("bounds on the empty graph"));
    }
    let w = wiener_index(g)? as f64;
    let n_f = n as f64;
    let m_f = g.size() as f64;
    Ok((4.0 * w / n_f, 4.0 * (n_f - 1.0) - 4.0 * m_f / n_f))
}

pub fn spectral_summary(g: &Graph, opts: &EigOptions) -> Result<SpectralSummary> {
    let trs = transmissions(g)?;
    let total: u64 = trs.iter().sum();
    let wiener = total / 2;
    let regular = trs.windows(2).all(|w| w[0] == w[1]);
    let m = dsl_matrix(g)?;
    let (eta1, perron) = perron_value(&m, opts)?;
    Ok(SpectralSummary {
        eta1,
        perron,
        transmission_k: if regular { trs.first().copied() } else { None },
        transmissions: trs,
        wiener,
        transmission_regular: regular,
    })
}

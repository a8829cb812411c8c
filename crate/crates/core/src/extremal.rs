//! Closed-form 3×3 quotient matrices for the hub-join families, their
//! characteristic polynomials, and spectral comparisons between families.
//!
//! Each closed form carries two cubics: a hand-expanded one (`transcribed`)
//! and one recomputed from the integer matrix by direct determinant expansion
//! (`determinant`). The two are compared coefficient-by-coefficient in exact
//! integer arithmetic; the determinant route is authoritative whenever they
//! disagree, and disagreements are surfaced as [`Discrepancy`] reports rather
//! than silently repaired.

use crate::error::{Error, Result};
use crate::graph::{build_family, ExtremalSpec, Graph};
use crate::spectral::{
    dsl_matrix, perron_value, EigOptions, Partition, QuotientMatrix,
};

/// Parameters of the three closed-form quotients.
///
/// * `BStar { n, delta }` — quotient of `K_δ ∨ (K_{n−2δ} + δK_1)`, block order
///   (merged singletons, large clique, hub).
/// * `BTilde { n, s, q }` — quotient of `K_s ∨ (K_{n−s−sq} + sq·K_1)`, block
///   order (hub, large clique, merged singletons). `s = 1` is the threshold
///   matrix used by the fractional-toughness certifier.
/// * `B2 { n, delta, s }` — quotient of `K_s ∨ (K_{n−s−sk} + s·K_k)` with
///   `k = δ − s + 1`, block order (merged small cliques, large clique, hub).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharPolyParams {
    BStar { n: i64, delta: i64 },
    BTilde { n: i64, s: i64, q: i64 },
    B2 { n: i64, delta: i64, s: i64 },
}

impl CharPolyParams {
    /// Structural range check: every block of the underlying family must be
    /// nonempty.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidParameter(msg));
        match *self {
            CharPolyParams::BStar { n, delta } => {
                if delta < 1 {
                    return fail(format!("BStar needs delta >= 1, got {delta}"));
                }
                if n < 2 * delta + 1 {
                    return fail(format!("BStar needs n > 2*delta, got n = {n}, delta = {delta}"));
                }
            }
            CharPolyParams::BTilde { n, s, q } => {
                if s < 1 || q < 1 {
                    return fail(format!("BTilde needs s, q >= 1, got s = {s}, q = {q}"));
                }
                if n < s + s * q + 1 {
                    return fail(format!(
                        "BTilde needs n >= s + s*q + 1, got n = {n}, s = {s}, q = {q}"
                    ));
                }
            }
            CharPolyParams::B2 { n, delta, s } => {
                if s < 1 || delta < s {
                    return fail(format!("B2 needs 1 <= s <= delta, got s = {s}, delta = {delta}"));
                }
                let k = delta - s + 1;
                if n < s + s * k + 1 {
                    return fail(format!(
                        "B2 needs n >= s + s*(delta - s + 1) + 1, got n = {n}, \
                         delta = {delta}, s = {s}"
                    ));
                }
            }
        }
        Ok(())
    }

    /// Integer entries of the quotient matrix.
    pub fn entries(&self) -> Result<[[i64; 3]; 3]> {
        self.validate()?;
        Ok(match *self {
            CharPolyParams::BStar { n, delta } => [
                [2 * n + delta - 4, 2 * n - 4 * delta, delta],
                [2 * delta, 2 * n - delta - 2, delta],
                [delta, n - 2 * delta, n + delta - 2],
            ],
            CharPolyParams::BTilde { n, s, q } => [
                [n + s - 2, n - s - s * q, s * q],
                [s, 2 * n - s - 2, 2 * s * q],
                [s, 2 * n - 2 * s - 2 * s * q, 2 * n - s + 2 * s * q - 4],
            ],
            CharPolyParams::B2 { n, delta, s } => {
                let k = delta - s + 1;
                [
                    [2 * n - s + 2 * (s - 1) * k - 2, 2 * (n - s - s * k), s],
                    [2 * s * k, 2 * n - s - 2, s],
                    [s * k, n - s - s * k, n + s - 2],
                ]
            }
        })
    }

    /// The family whose distance signless Laplacian this matrix quotients.
    pub fn family_spec(&self) -> Result<ExtremalSpec> {
        self.validate()?;
        let (hub, parts) = match *self {
            CharPolyParams::BStar { n, delta } => {
                let mut parts = vec![(n - 2 * delta) as usize];
                parts.extend(std::iter::repeat(1).take(delta as usize));
                (delta as usize, parts)
            }
            CharPolyParams::BTilde { n, s, q } => {
                let mut parts = vec![(n - s - s * q) as usize];
                parts.extend(std::iter::repeat(1).take((s * q) as usize));
                (s as usize, parts)
            }
            CharPolyParams::B2 { n, delta, s } => {
                let k = (delta - s + 1) as usize;
                let mut parts = vec![(n - s - s * (delta - s + 1)) as usize];
                parts.extend(std::iter::repeat(k).take(s as usize));
                (s as usize, parts)
            }
        };
        ExtremalSpec::new(hub, parts)
    }

    pub fn family_graph(&self) -> Result<Graph> {
        Ok(build_family(&self.family_spec()?))
    }

    /// The vertex partition (in this matrix's block order) matching the
    /// layout `build_family` produces for [`Self::family_spec`].
    pub fn family_partition(&self) -> Result<Partition> {
        self.validate()?;
        let (n, hub, large, small_each) = match *self {
            CharPolyParams::BStar { n, delta } => (n, delta, n - 2 * delta, 1),
            CharPolyParams::BTilde { n, s, q } => (n, s, n - s - s * q, 1),
            CharPolyParams::B2 { n, delta, s } => {
                (n, s, n - s - s * (delta - s + 1), delta - s + 1)
            }
        };
        let (n, hub, large) = (n as usize, hub as usize, large as usize);
        let hub_block: Vec<usize> = (0..hub).collect();
        // build_family sorts parts by non-increasing size, so the large
        // clique precedes the small parts unless they outsize it.
        let (large_block, small_block): (Vec<usize>, Vec<usize>) =
            if large as i64 >= small_each {
                ((hub..hub + large).collect(), (hub + large..n).collect())
            } else {
                ((n - large..n).collect(), (hub..n - large).collect())
            };
        let blocks = match self {
            CharPolyParams::BStar { .. } | CharPolyParams::B2 { .. } => {
                vec![small_block, large_block, hub_block]
            }
            CharPolyParams::BTilde { .. } => vec![hub_block, large_block, small_block],
        };
        Partition::new(n, blocks)
    }

    /// Coefficients `[c2, c1, c0]` of the hand-expanded monic cubic
    /// `x³ + c2·x² + c1·x + c0`, transcribed term-for-term (including any
    /// transcription slips — see [`charpoly_discrepancies`]).
    pub fn transcribed_coeffs(&self) -> Result<[i128; 3]> {
        self.validate()?;
        Ok(match *self {
            CharPolyParams::BStar { n, delta } => {
                let (n, d) = (n as i128, delta as i128);
                let c2 = -(5 * n + d - 8);
                let c1 = 8 * n * n - (d + 26) * n + 8 * d * d - 4 * d + 20;
                let c0 = -4 * n * n * n + (2 * d + 20) * n * n
                    - (2 * d * d + 2 * d + 32) * n
                    - 2 * d * d * d
                    + 18 * d * d
                    - 4 * d
                    + 16;
                [c2, c1, c0]
            }
            CharPolyParams::BTilde { n, s, q } => {
                let (n, s, q) = (n as i128, s as i128, q as i128);
                let c2 = -(5 * n + 2 * q * s - s - 8);
                let c1 = (4 * q * q + 4 * q) * s * s
                    + (2 * n * q - 3 * n - 8 * q + 4) * s
                    + 8 * n * n
                    - 26 * n
                    + 20;
                let c0 = -4 * n * n * n + 2 * (s + 10) * n * n
                    - (4 * q * q * s * s + 4 * q * s * s - 4 * q * s + 6 * s + 32) * n
                    - 2 * q * q * s * s * s
                    + 8 * q * q * s * s
                    + 10 * q * s * s
                    - 8 * q * s
                    + 4 * s
                    + 16;
                [c2, c1, c0]
            }
            CharPolyParams::B2 { n, delta, s } => {
                let (n, d, s) = (n as i128, delta as i128, s as i128);
                let c2 = 2 * s * s - (2 * d + 3) * s - 5 * n + 2 * d + 8;
                // The s⁴ term below appears with exponent 2 in the expanded
                // form this transcribes; the determinant route corrects it.
                let c1 = 4 * s * s - (8 * d + 12) * s * s * s
                    + (-2 * n + 4 * d * d + 12 * d + 16) * s * s
                    + (2 * d * n + 5 * n - 8 * d - 12) * s
                    + 8 * n * n
                    - (6 * d + 26) * n
                    + 8 * d
                    + 20;
                let c0 = -2 * s * s * s * s * s
                    - (4 * n - 4 * d - 14) * s * s * s * s
                    + (8 * d * n + 12 * n - 2 * d * d - 24 * d - 30) * s * s * s
                    - (4 * d * d * n + 12 * d * n + 12 * n - 10 * d * d - 28 * d - 26) * s * s
                    - (2 * n * n - 4 * d * n - 10 * n + 8 * d + 12) * s
                    - 4 * n * n * n
                    + 4 * d * n * n
                    + 20 * n * n
                    - 12 * d * n
                    - 32 * n
                    + 8 * d
                    + 16;
                [c2, c1, c0]
            }
        })
    }

    /// Coefficients `[c2, c1, c0]` recomputed from the matrix itself:
    /// trace, principal 2×2 minors, determinant. Exact, and authoritative.
    pub fn determinant_coeffs(&self) -> Result<[i128; 3]> {
        let m = self.entries()?;
        let a: Vec<Vec<i128>> =
            m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
        let trace = a[0][0] + a[1][1] + a[2][2];
        let minors = (a[0][0] * a[1][1] - a[0][1] * a[1][0])
            + (a[0][0] * a[2][2] - a[0][2] * a[2][0])
            + (a[1][1] * a[2][2] - a[1][2] * a[2][1]);
        let det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
            - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
        Ok([-trace, minors, -det])
    }

    pub fn label(&self) -> String {
        match *self {
            CharPolyParams::BStar { n, delta } => format!("BStar(n={n}, delta={delta})"),
            CharPolyParams::BTilde { n, s, q } => format!("BTilde(n={n}, s={s}, q={q})"),
            CharPolyParams::B2 { n, delta, s } => format!("B2(n={n}, delta={delta}, s={s})"),
        }
    }
}

/// The closed-form quotient as a ready-to-eigensolve matrix. Always marked
/// equitable: tests pin these entries against block-averaged quotients of the
/// assembled distance signless Laplacians.
pub fn quotient_closed_form(params: &CharPolyParams) -> Result<QuotientMatrix> {
    let e = params.entries()?;
    let entries: Vec<f64> = e.iter().flatten().map(|&x| x as f64).collect();
    Ok(QuotientMatrix::from_parts(3, entries, true))
}

/// One coefficient-level disagreement between a transcribed formula and its
/// exact recomputation.
#[derive(Debug, Clone, PartialEq)]
pub struct Discrepancy {
    /// What was checked, e.g. `charpoly BStar(n=22, delta=2)`.
    pub source: String,
    /// Which variable the power refers to (`x` for cubics, `n` for the
    /// Wiener closed form).
    pub variable: &'static str,
    pub power: u32,
    pub transcribed: f64,
    pub authoritative: f64,
}

/// Compares the transcribed cubic against the determinant expansion, one
/// report per differing coefficient.
pub fn charpoly_discrepancies(params: &CharPolyParams) -> Result<Vec<Discrepancy>> {
    let t = params.transcribed_coeffs()?;
    let d = params.determinant_coeffs()?;
    let mut out = Vec::new();
    // Index i holds the coefficient of x^(2 - i).
    for i in 0..3 {
        if t[i] != d[i] {
            out.push(Discrepancy {
                source: format!("charpoly {}", params.label()),
                variable: "x",
                power: (2 - i) as u32,
                transcribed: t[i] as f64,
                authoritative: d[i] as f64,
            });
        }
    }
    Ok(out)
}

/// Evaluates both cubics at `x`: `(transcribed, determinant)`.
pub fn charpoly_eval(params: &CharPolyParams, x: f64) -> Result<(f64, f64)> {
    let t = params.transcribed_coeffs()?;
    let d = params.determinant_coeffs()?;
    let eval = |c: &[i128; 3]| {
        ((x + c[0] as f64) * x + c[1] as f64) * x + c[2] as f64
    };
    Ok((eval(&t), eval(&d)))
}

/// Largest real root of the monic cubic `x³ + c2·x² + c1·x + c0`.
///
/// Uses the trigonometric form when all roots are real and Cardano's formula
/// otherwise, then polishes with a few Newton steps.
pub fn cubic_largest_real_root(c2: f64, c1: f64, c0: f64) -> f64 {
    let shift = c2 / 3.0;
    let p = c1 - c2 * c2 / 3.0;
    let q = 2.0 * c2.powi(3) / 27.0 - c2 * c1 / 3.0 + c0;
    let disc = (q / 2.0) * (q / 2.0) + (p / 3.0) * (p / 3.0) * (p / 3.0);
    let y = if p < 0.0 && disc <= 0.0 {
        // Three real roots; the k = 0 branch is the largest.
        let r = (-p / 3.0).sqrt();
        let cos_arg = (-q / (2.0 * r * r * r)).clamp(-1.0, 1.0);
        2.0 * r * (cos_arg.acos() / 3.0).cos()
    } else {
        let sq = disc.max(0.0).sqrt();
        (-q / 2.0 + sq).cbrt() + (-q / 2.0 - sq).cbrt()
    };
    let mut x = y - shift;
    for _ in 0..4 {
        let f = ((x + c2) * x + c1) * x + c0;
        let fp = (3.0 * x + 2.0 * c2) * x + c1;
        if fp.abs() > 0.0 {
            let step = f / fp;
            x -= step;
            if step.abs() <= 1e-15 * x.abs().max(1.0) {
                break;
            }
        } else {
            break;
        }
    }
    x
}

/// Largest real root of the determinant cubic for `params`.
pub fn largest_charpoly_root(params: &CharPolyParams) -> Result<f64> {
    let c = params.determinant_coeffs()?;
    Ok(cubic_largest_real_root(c[0] as f64, c[1] as f64, c[2] as f64))
}

// --- family comparisons ------------------------------------------------------

/// Integer quotient entries for `K_s ∨ (K_{n−s−(c−1)p} + (c−1)K_p)` in block
/// order (hub, large clique, merged small cliques). This is the reference
/// family the comparison lemma pushes every composition towards.
pub fn reference_quotient_entries(n: i64, s: i64, c: i64, p: i64) -> Result<[[i64; 3]; 3]> {
    if s < 1 || p < 1 || c < 2 {
        return Err(Error::InvalidParameter(format!(
            "reference quotient needs s >= 1, p >= 1, c >= 2, got s = {s}, p = {p}, c = {c}"
        )));
    }
    let small = (c - 1) * p;
    if n - s - small < 1 {
        return Err(Error::InvalidParameter(format!(
            "reference quotient needs n - s - (c-1)p >= 1, got n = {n}, s = {s}, c = {c}, p = {p}"
        )));
    }
    Ok([
        [n + s - 2, n - s - small, small],
        [s, 2 * n - s - 2, 2 * small],
        [s, 2 * (n - s - small), 2 * n - s + 2 * (c - 2) * p - 2],
    ])
}

/// Spectral comparison of a family against its reference composition.
#[derive(Debug, Clone)]
pub struct FamilyComparison {
    pub order: usize,
    pub hub: usize,
    pub small_part: usize,
    /// The composition under test, non-increasing.
    pub parts: Vec<usize>,
    /// The reference composition `[n − s − (c−1)p, p, …, p]`.
    pub reference_parts: Vec<usize>,
    pub eta1_parts: f64,
    pub eta1_reference: f64,
    /// `eta1_parts − eta1_reference`; the comparison lemma says this is
    /// nonnegative, and zero exactly on the reference composition.
    pub difference: f64,
    /// `difference > strict_margin`.
    pub strict: bool,
    /// Whether `parts` already is the reference composition.
    pub matches_reference: bool,
    /// Lemma premises (`n_c ≥ p`, `n₁ − n₂ ≥ 2p`). Violations do not abort
    /// the computation; the result is informational.
    pub premises_met: bool,
    pub premise_notes: Vec<String>,
}

/// Compares `η₁(K_s ∨ (K_{parts}))` against the reference composition with
/// small-part size `p`. `strict_margin` is the positivity threshold for
/// declaring the inequality strict.
pub fn compare_families(
    s: usize,
    parts: &[usize],
    p: usize,
    strict_margin: f64,
    opts: &EigOptions,
) -> Result<FamilyComparison> {
    if p == 0 {
        return Err(Error::InvalidParameter("small-part size p must be positive".to_string()));
    }
    let spec = ExtremalSpec::new(s, parts.to_vec())?;
    let c = spec.part_count();
    if c < 2 {
        return Err(Error::InvalidParameter(format!(
            "family comparison needs at least 2 parts, got {c}"
        )));
    }
    let n = spec.order();
    let small_total = (c - 1) * p;
    if n < s + small_total + 1 {
        return Err(Error::InvalidParameter(format!(
            "reference composition is empty: n = {n}, s = {s}, (c-1)p = {small_total}"
        )));
    }
    let mut reference_parts = vec![n - s - small_total];
    reference_parts.extend(std::iter::repeat(p).take(c - 1));
    let reference = ExtremalSpec::new(s, reference_parts.clone())?;

    let mut premise_notes = Vec::new();
    let sorted = spec.parts();
    if let Some(&last) = sorted.last() {
        if last < p {
            premise_notes.push(format!("smallest part {last} is below p = {p}"));
        }
    }
    if sorted[0] < sorted[1] + 2 * p {
        premise_notes.push(format!(
            "largest-part gap {} is below 2p = {}",
            sorted[0] - sorted[1],
            2 * p
        ));
    }

    let eig = |g: &Graph| -> Result<f64> {
        let m = dsl_matrix(g)?;
        Ok(perron_value(&m, opts)?.0)
    };
    let eta1_parts = eig(&build_family(&spec))?;
    let eta1_reference = eig(&build_family(&reference))?;
    let difference = eta1_parts - eta1_reference;
    let matches_reference = sorted == reference.parts();
    Ok(FamilyComparison {
        order: n,
        hub: s,
        small_part: p,
        parts: sorted.to_vec(),
        reference_parts: reference.parts().to_vec(),
        eta1_parts,
        eta1_reference,
        difference,
        strict: difference > strict_margin,
        matches_reference,
        premises_met: premise_notes.is_empty(),
        premise_notes,
    })
}

// --- Wiener closed form --------------------------------------------------------

/// Wiener-index cross-check for the exceptional family
/// `K_δ ∨ (K_{n−2δ} + δK_1)`.
#[derive(Debug, Clone)]
pub struct WienerCheck {
    pub order: usize,
    pub delta: usize,
    /// Ground truth from breadth-first distances.
    pub bfs: u64,
    /// Corrected closed form `n²/2 + (δ − ½)n − 3δ²/2 − δ/2`.
    pub corrected: f64,
    /// The closed form as transcribed, whose linear-in-`n` term lost its
    /// factor of `n`.
    pub transcribed: f64,
    /// Coefficient-level differences between the two readings (powers of `n`).
    pub discrepancies: Vec<Discrepancy>,
}

pub fn extremal_wiener_check(n: usize, delta: usize) -> Result<WienerCheck> {
    let params = CharPolyParams::BStar { n: n as i64, delta: delta as i64 };
    params.validate()?;
    let g = params.family_graph()?;
    let bfs = crate::spectral::wiener_index(&g)?;
    let (nf, d) = (n as f64, delta as f64);
    // As polynomials in n: coefficient index = power of n.
    let corrected = [-1.5 * d * d - 0.5 * d, d - 0.5, 0.5];
    let transcribed = [(d - 0.5) - 1.5 * d * d - 0.5 * d, 0.0, 0.5];
    let eval = |c: &[f64; 3]| c[0] + c[1] * nf + c[2] * nf * nf;
    let mut discrepancies = Vec::new();
    for power in 0..3usize {
        if corrected[power] != transcribed[power] {
            discrepancies.push(Discrepancy {
                source: format!("wiener closed form (n={n}, delta={delta})"),
                variable: "n",
                power: power as u32,
                transcribed: transcribed[power],
                authoritative: corrected[power],
            });
        }
    }
    Ok(WienerCheck {
        order: n,
        delta,
        bfs,
        corrected: eval(&corrected),
        transcribed: eval(&transcribed),
        discrepancies,
    })
}

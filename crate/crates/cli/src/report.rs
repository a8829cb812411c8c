//! The key-value report format.
//!
//! Every subcommand emits one or more documents: a `kind:` line followed by
//! `key: value` lines, blank-line separated when there are several. Each
//! kind has a published schema of required keys; `note-*` style keys are
//! free-form extras. Values are plain text: floats with 12 significant
//! digits, rationals as `num/den`, vertex sets space-separated, booleans as
//! `true`/`false`. Identical inputs and flags produce byte-identical output.

use num::rational::Ratio;
use toughcert::toughness::{Rational, Toughness};

/// Formats with 12 significant digits, fixed-point.
pub fn fmt_f64(x: f64) -> String {
    if x == 0.0 {
        return "0.00000000000".to_string();
    }
    if !x.is_finite() {
        return if x.is_nan() { "nan".to_string() } else { "inf".to_string() };
    }
    let exponent = x.abs().log10().floor() as i32;
    let decimals = (11 - exponent).clamp(0, 17) as usize;
    format!("{x:.decimals$}")
}

pub fn fmt_rational(r: &Rational) -> String {
    let reduced = Ratio::new(*r.numer(), *r.denom());
    format!("{}/{}", reduced.numer(), reduced.denom())
}

pub fn fmt_toughness(t: &Toughness) -> String {
    match t.as_rational() {
        Some(r) => fmt_rational(&r),
        None => "inf".to_string(),
    }
}

pub fn fmt_bool(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

pub fn fmt_vertices(vs: &[usize]) -> String {
    if vs.is_empty() {
        return "none".to_string();
    }
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

/// Required keys per document kind, in emission order. Keys not listed here
/// are allowed after the required ones when they match the kind's free-form
/// prefixes (`log-`, `note-`, `premise-note-`).
pub fn schema(kind: &str) -> Option<&'static [&'static str]> {
    match kind {
        "spectral-summary" => Some(&[
            "order",
            "size",
            "min-degree",
            "wiener",
            "transmission-regular",
            "transmission-k",
            "eta1",
            "bound-wiener",
            "bound-size",
        ]),
        "toughness-report" => Some(&[
            "order",
            "size",
            "tau",
            "tau-witness-set",
            "tau-witness-components",
            "tau-witness-ratio",
            "tau-prime",
            "tau-prime-witness-set",
            "tau-prime-witness-components",
            "tau-prime-witness-ratio",
        ]),
        "toughness-decision" => Some(&[
            "order",
            "size",
            "variant",
            "target",
            "tough",
            "witness-set",
            "witness-components",
            "witness-ratio",
        ]),
        "certificate" => Some(&[
            "theorem",
            "order",
            "size",
            "variant",
            "target",
            "verdict",
            "eta1",
            "threshold",
            "band",
            "margin",
            "oracle",
        ]),
        "comparison" => Some(&[
            "order",
            "hub",
            "small-part",
            "parts",
            "reference-parts",
            "eta1-parts",
            "eta1-reference",
            "difference",
            "strict",
            "matches-reference",
            "premises-met",
        ]),
        "sweep-report" => Some(&[
            "theorem",
            "seed",
            "count",
            "n-lo",
            "n-hi",
            "certified",
            "extremal-exception",
            "inconclusive",
            "precondition-failed",
            "oracle-checked",
            "tau-violations",
            "tau-prime-violations",
            "exception-mismatches",
        ]),
        "lemma-report" => Some(&["id", "name", "cases", "failures", "worst", "pass"]),
        _ => None,
    }
}

const FREE_PREFIXES: [&str; 3] = ["log-", "note-", "premise-note-"];

#[derive(Debug, Clone)]
pub struct Document {
    kind: &'static str,
    entries: Vec<(String, String)>,
}

impl Document {
    /// Panics on an unpublished kind; the schema table is the registry.
    pub fn new(kind: &'static str) -> Document {
        assert!(schema(kind).is_some(), "unknown document kind {kind}");
        Document { kind, entries: Vec::new() }
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.entries.push((key.into(), value.into()));
    }

    /// Renders the document, checking it against the schema: required keys
    /// in order, then only free-form keys.
    pub fn render(&self) -> String {
        let errors = validate(self.kind, &self.entries);
        assert!(errors.is_empty(), "document {} violates its schema: {errors:?}", self.kind);
        let mut out = format!("kind: {}\n", self.kind);
        for (k, v) in &self.entries {
            out.push_str(&format!("{k}: {v}\n"));
        }
        out
    }
}

/// Schema check shared by the emitter and the tests: the required keys must
/// appear first and in order, and every remaining key must carry a known
/// free-form prefix.
pub fn validate(kind: &str, entries: &[(String, String)]) -> Vec<String> {
    let mut errors = Vec::new();
    let Some(required) = schema(kind) else {
        return vec![format!("unknown kind {kind}")];
    };
    for (i, want) in required.iter().enumerate() {
        match entries.get(i) {
            Some((k, _)) if k == want => {}
            Some((k, _)) => errors.push(format!("key {i} is {k}, expected {want}")),
            None => errors.push(format!("missing required key {want}")),
        }
    }
    for (k, _) in entries.iter().skip(required.len()) {
        if !FREE_PREFIXES.iter().any(|p| k.starts_with(p)) {
            errors.push(format!("unexpected key {k}"));
        }
    }
    errors
}

/// Parses rendered documents back into (kind, entries) pairs, for
/// round-trip validation in tests.
pub fn parse_documents(text: &str) -> Result<Vec<(String, Vec<(String, String)>)>, String> {
    let mut docs = Vec::new();
    for block in text.split("\n\n").filter(|b| !b.trim().is_empty()) {
        let mut kind = None;
        let mut entries = Vec::new();
        for line in block.lines().filter(|l| !l.is_empty()) {
            let (k, v) = line
                .split_once(": ")
                .ok_or_else(|| format!("line {line:?} is not `key: value`"))?;
            if kind.is_none() {
                if k != "kind" {
                    return Err(format!("document starts with {k:?}, expected kind"));
                }
                kind = Some(v.to_string());
            } else {
                entries.push((k.to_string(), v.to_string()));
            }
        }
        docs.push((kind.ok_or("empty document")?, entries));
    }
    Ok(docs)
}

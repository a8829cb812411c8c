//! Graph file formats: graph6 and a plain edge list.
//!
//! graph6 stores the order, then the upper triangle of the adjacency matrix
//! column by column, six bits per printable byte, each offset by 63. The
//! edge list is `n m` on the first line followed by `m` unordered pairs.
//! Writing then parsing either format reproduces the graph exactly, and
//! parsing then writing a canonical graph6 line reproduces its bytes.

use crate::CliError;
use toughcert::Graph;

/// Largest order the 4-byte graph6 header can express; longer headers are
/// deliberately unsupported.
pub const GRAPH6_MAX_ORDER: usize = 258_047;

fn parse_error(msg: impl Into<String>) -> CliError {
    CliError::Parse(msg.into())
}

/// Serializes into a single canonical graph6 line (no trailing newline).
pub fn write_graph6(g: &Graph) -> Result<String, CliError> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(parse_error(format!(
            "graph6 supports at most {GRAPH6_MAX_ORDER} vertices, got {n}"
        )));
    }
    let mut bytes: Vec<u8> = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else {
        bytes.push(126);
        bytes.push(((n >> 12) & 0x3f) as u8 + 63);
        bytes.push(((n >> 6) & 0x3f) as u8 + 63);
        bytes.push((n & 0x3f) as u8 + 63);
    }
    let mut acc: u8 = 0;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                bytes.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(bytes).unwrap())
}

/// Parses one graph6 line. Padding bits must be zero and every data byte
/// must sit in the printable 63..=126 range.
pub fn parse_graph6(text: &str) -> Result<Graph, CliError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let line = lines.next().ok_or_else(|| parse_error("empty graph6 input"))?.trim();
    if lines.next().is_some() {
        return Err(parse_error("expected a single graph6 line"));
    }
    let bytes = line.as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(parse_error("graph6 bytes must lie in 63..=126"));
    }
    let (n, header_len) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(parse_error(format!(
                "graph6 orders above {GRAPH6_MAX_ORDER} are not supported"
            )));
        }
        if bytes.len() < 4 {
            return Err(parse_error("truncated graph6 order header"));
        }
        let n = ((bytes[1] as usize - 63) << 12)
            | ((bytes[2] as usize - 63) << 6)
            | (bytes[3] as usize - 63);
        if n <= 62 {
            return Err(parse_error("overlong graph6 order header"));
        }
        (n, 4)
    } else {
        (bytes[0] as usize - 63, 1)
    };
    let bits = n * (n - 1) / 2;
    let expect = bits.div_ceil(6);
    let data = &bytes[header_len..];
    if data.len() != expect {
        return Err(parse_error(format!(
            "graph6 body for n = {n} needs {expect} bytes, got {}",
            data.len()
        )));
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    // Trailing padding bits must be zero.
    while k < 6 * expect {
        let byte = data[k / 6] - 63;
        if (byte >> (5 - k % 6)) & 1 == 1 {
            return Err(parse_error("nonzero padding bits in graph6 body"));
        }
        k += 1;
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// Serializes as `n m` followed by one `u v` line per edge, `u < v`,
/// lexicographically sorted.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses the edge-list format. The header must match the body exactly.
pub fn parse_edge_list(text: &str) -> Result<Graph, CliError> {
    let mut tokens = text.split_whitespace();
    let mut next_usize = |what: &str| -> Result<usize, CliError> {
        let tok = tokens
            .next()
            .ok_or_else(|| parse_error(format!("edge list ended while reading {what}")))?;
        tok.parse::<usize>()
            .map_err(|_| parse_error(format!("bad {what} {tok:?} in edge list")))
    };
    let n = next_usize("order")?;
    let m = next_usize("size")?;
    let mut edges = Vec::with_capacity(m);
    for e in 0..m {
        let u = next_usize(&format!("edge {e}"))?;
        let v = next_usize(&format!("edge {e}"))?;
        edges.push((u, v));
    }
    if let Some(extra) = tokens.next() {
        return Err(parse_error(format!("trailing token {extra:?} after {m} edges")));
    }
    let g = Graph::from_edges(n, &edges)?;
    if g.size() != m {
        return Err(parse_error(format!(
            "edge list declares {m} edges but {} are distinct",
            g.size()
        )));
    }
    Ok(g)
}

/// Decides between the two formats: graph6 bytes are all ≥ 63, so a leading
/// ASCII digit can only start an edge list.
pub fn parse_graph(text: &str) -> Result<Graph, CliError> {
    match text.trim_start().bytes().next() {
        None => Err(parse_error("empty graph input")),
        Some(b'0'..=b'9') => parse_edge_list(text),
        Some(_) => parse_graph6(text),
    }
}

/// Reads a graph from a file, or from standard input when `path` is `-`.
pub fn read_graph(path: &str) -> Result<Graph, CliError> {
    let text = if path == "-" {
        let mut buf = String::new();
        use std::io::Read;
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        std::fs::read_to_string(path)?
    };
    parse_graph(&text)
}

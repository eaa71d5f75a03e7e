//! Plain-text formats for graphs, complexes, split trees, Betti tables and
//! collapse certificates.
//!
//! Every writer produces text that its parser reads back to an equal value,
//! and writing that value again reproduces the text byte for byte. Lines
//! starting with `#` and blank lines are ignored by all parsers.

use std::fmt::Write as _;

use indr_core::collapse::{CollapseSequence, FreePair};
use indr_core::{BettiTable, Graph, Provenance, SimplicialComplex, SplitNode, SplitTree, SquareFreeIdeal, VertexSet};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing header line `{0}`")]
    MissingHeader(&'static str),
    #[error("expected {expected} records after the header, found {found}")]
    Count { expected: usize, found: usize },
    #[error(transparent)]
    Core(#[from] indr_core::Error),
}

type Result<T> = std::result::Result<T, FormatError>;

/// Content lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end()))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, message: message.into() }
}

fn numbers(line: usize, fields: &[&str]) -> Result<Vec<usize>> {
    fields.iter().map(|f| f.parse::<usize>().map_err(|_| syntax(line, format!("`{f}` is not a number")))).collect()
}

/// Splits `line` into its keyword and the remaining fields.
fn keyword(line: &str) -> (&str, Vec<&str>) {
    let mut it = line.split_whitespace();
    let head = it.next().unwrap_or("");
    (head, it.collect())
}

fn join_set(s: VertexSet) -> String {
    s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn set_of(line: usize, n: usize, fields: &[&str]) -> Result<VertexSet> {
    let vs = numbers(line, fields)?;
    if let Some(&v) = vs.iter().find(|&&v| v == 0 || v > n) {
        return Err(syntax(line, format!("vertex {v} outside 1..={n}")));
    }
    Ok(VertexSet::from_vertices(vs))
}

pub fn write_graph(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("p {} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or(FormatError::MissingHeader("p <n> <m>"))?;
    let (kw, fields) = keyword(header);
    if kw != "p" || fields.len() != 2 {
        return Err(syntax(hl, "expected `p <n> <m>`"));
    }
    let nm = numbers(hl, &fields)?;
    let (n, m) = (nm[0], nm[1]);
    let mut edges = Vec::with_capacity(m);
    for (ln, line) in lines {
        let (kw, fields) = keyword(line);
        if kw != "e" || fields.len() != 2 {
            return Err(syntax(ln, "expected `e <u> <v>`"));
        }
        let uv = numbers(ln, &fields)?;
        let e = (uv[0].min(uv[1]), uv[0].max(uv[1]));
        if edges.contains(&e) {
            return Err(syntax(ln, format!("repeated edge {} {}", e.0, e.1)));
        }
        edges.push(e);
    }
    if edges.len() != m {
        return Err(FormatError::Count { expected: m, found: edges.len() });
    }
    Ok(Graph::new(n, edges)?)
}

pub fn write_complex(d: &SimplicialComplex) -> String {
    let mut out = format!("c {} {}\n", d.n(), d.facets().len());
    for &f in d.facets() {
        if f.is_empty() {
            out.push_str("f\n");
        } else {
            let _ = writeln!(out, "f {}", join_set(f));
        }
    }
    out
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or(FormatError::MissingHeader("c <n> <facets>"))?;
    let (kw, fields) = keyword(header);
    if kw != "c" || fields.len() != 2 {
        return Err(syntax(hl, "expected `c <n> <facets>`"));
    }
    let nk = numbers(hl, &fields)?;
    let (n, k) = (nk[0], nk[1]);
    let mut facets = Vec::with_capacity(k);
    for (ln, line) in lines {
        let (kw, fields) = keyword(line);
        if kw != "f" {
            return Err(syntax(ln, "expected `f <v1> <v2> ...`"));
        }
        facets.push(set_of(ln, n, &fields)?);
    }
    if facets.len() != k {
        return Err(FormatError::Count { expected: k, found: facets.len() });
    }
    Ok(SimplicialComplex::from_facets(n, facets)?)
}

/// One node per line, children indented two spaces below their parent with
/// `J1` before `J2`.
pub fn write_split_tree(t: &SplitTree) -> String {
    fn go(t: &SplitTree, depth: usize, out: &mut String) {
        let pad = "  ".repeat(depth);
        match &t.node {
            SplitNode::Zero => {
                let _ = writeln!(out, "{pad}leaf zero");
            }
            SplitNode::Unit => {
                let _ = writeln!(out, "{pad}leaf unit");
            }
            SplitNode::Principal(m) => {
                let _ = writeln!(out, "{pad}leaf principal {}", join_set(*m));
            }
            SplitNode::Split { pivot, left, right } => {
                let _ = writeln!(out, "{pad}split x={pivot}");
                go(left, depth + 1, out);
                go(right, depth + 1, out);
            }
        }
    }
    let mut out = String::new();
    go(t, 0, &mut out);
    out
}

/// Rebuilds a split tree over `n` variables, recomputing each node's ideal
/// and checking every splitting step.
pub fn parse_split_tree(text: &str, n: usize) -> Result<SplitTree> {
    let lines: Vec<(usize, usize, &str)> = content_lines(text)
        .map(|(ln, l)| {
            let indent = l.len() - l.trim_start().len();
            (ln, indent, l.trim_start())
        })
        .collect();
    let mut pos = 0;
    let tree = parse_node(&lines, &mut pos, 0, n)?;
    if let Some(&(ln, _, _)) = lines.get(pos) {
        return Err(syntax(ln, "trailing content after the root node"));
    }
    Ok(tree)
}

fn parse_node(lines: &[(usize, usize, &str)], pos: &mut usize, depth: usize, n: usize) -> Result<SplitTree> {
    let Some(&(ln, indent, body)) = lines.get(*pos) else {
        return Err(FormatError::MissingHeader("split x=<v> | leaf ..."));
    };
    if indent != 2 * depth {
        return Err(syntax(ln, format!("expected indentation {}, found {indent}", 2 * depth)));
    }
    *pos += 1;
    let (kw, fields) = keyword(body);
    match (kw, fields.as_slice()) {
        ("leaf", ["zero"]) => Ok(SplitTree::leaf(SquareFreeIdeal::zero(n)).expect("zero leaf")),
        ("leaf", ["unit"]) => Ok(SplitTree::leaf(SquareFreeIdeal::unit(n)).expect("unit leaf")),
        ("leaf", ["principal", rest @ ..]) if !rest.is_empty() => {
            let m = set_of(ln, n, rest)?;
            Ok(SplitTree::leaf(SquareFreeIdeal::principal(n, m)).expect("principal leaf"))
        }
        ("split", [x]) => {
            let v = x
                .strip_prefix("x=")
                .and_then(|v| v.parse::<usize>().ok())
                .filter(|&v| v >= 1 && v <= n)
                .ok_or_else(|| syntax(ln, format!("bad pivot `{x}`")))?;
            let left = parse_node(lines, pos, depth + 1, n)?;
            let right = parse_node(lines, pos, depth + 1, n)?;
            SplitTree::join(v, left, right).map_err(|e| syntax(ln, e.to_string()))
        }
        _ => Err(syntax(ln, format!("unrecognized node `{body}`"))),
    }
}

/// `beta <i> <j> <value>` per nonzero entry, sorted by `(i, j)`.
pub fn write_betti_machine(t: &BettiTable) -> String {
    let mut out = String::new();
    for ((i, j), v) in t.entries() {
        let _ = writeln!(out, "beta {i} {j} {v}");
    }
    out
}

pub fn parse_betti_machine(text: &str, n: usize, provenance: Provenance) -> Result<BettiTable> {
    let mut table = BettiTable::new(n, provenance);
    let mut last = None;
    for (ln, line) in content_lines(text) {
        let (kw, fields) = keyword(line);
        if kw != "beta" || fields.len() != 3 {
            return Err(syntax(ln, "expected `beta <i> <j> <value>`"));
        }
        let ij = numbers(ln, &fields[..2])?;
        let v: u64 = fields[2].parse().map_err(|_| syntax(ln, format!("`{}` is not a number", fields[2])))?;
        let key = (ij[0], ij[1]);
        if last.is_some_and(|k| k >= key) {
            return Err(syntax(ln, "entries out of order or repeated"));
        }
        if v == 0 {
            return Err(syntax(ln, "zero entries are not written"));
        }
        last = Some(key);
        table.add(key.0, key.1, v)?;
    }
    Ok(table)
}

/// Grid with one column per homological degree `i` and one row per `j - i`,
/// dots for zeros.
pub fn write_betti_grid(t: &BettiTable) -> String {
    let entries: Vec<_> = t.entries().collect();
    if entries.is_empty() {
        return "(zero module)\n".to_string();
    }
    let cols = entries.iter().map(|((i, _), _)| *i).max().unwrap_or(0) + 1;
    let rows = entries.iter().map(|((i, j), _)| j - i).max().unwrap_or(0) + 1;
    let cell = |i: usize, row: usize| match t.get(i, i + row) {
        0 => ".".to_string(),
        v => v.to_string(),
    };
    let widths: Vec<usize> =
        (0..cols).map(|i| (0..rows).map(|row| cell(i, row).len()).max().unwrap_or(1).max(i.to_string().len())).collect();
    let label = format!("{}:", rows - 1).len();
    let mut out = " ".repeat(label);
    for (i, w) in widths.iter().enumerate() {
        let _ = write!(out, " {i:>w$}");
    }
    out.push('\n');
    for row in 0..rows {
        let _ = write!(out, "{:>label$}", format!("{row}:"));
        for (i, w) in widths.iter().enumerate() {
            let _ = write!(out, " {:>w$}", cell(i, row));
        }
        out.push('\n');
    }
    out
}

/// `d <param>` followed by one `s <sigma> | <tau>` line per step.
pub fn write_certificate(seq: &CollapseSequence) -> String {
    let mut out = format!("d {}\n", seq.d);
    for p in &seq.steps {
        let fields: Vec<String> = std::iter::once("s".to_string())
            .chain(p.sigma.iter().map(|v| v.to_string()))
            .chain(std::iter::once("|".to_string()))
            .chain(p.tau.iter().map(|v| v.to_string()))
            .collect();
        let _ = writeln!(out, "{}", fields.join(" "));
    }
    out
}

pub fn parse_certificate(text: &str) -> Result<CollapseSequence> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or(FormatError::MissingHeader("d <param>"))?;
    let (kw, fields) = keyword(header);
    if kw != "d" || fields.len() != 1 {
        return Err(syntax(hl, "expected `d <param>`"));
    }
    let d = numbers(hl, &fields)?[0];
    let mut steps = Vec::new();
    for (ln, line) in lines {
        let (kw, fields) = keyword(line);
        let bar = fields.iter().position(|&f| f == "|");
        let (Some(bar), "s") = (bar, kw) else {
            return Err(syntax(ln, "expected `s <sigma> | <tau>`"));
        };
        let sigma = set_of(ln, VertexSet::MAX_VERTICES, &fields[..bar])?;
        let tau = set_of(ln, VertexSet::MAX_VERTICES, &fields[bar + 1..])?;
        steps.push(FreePair { sigma, tau });
    }
    Ok(CollapseSequence { d, steps })
}

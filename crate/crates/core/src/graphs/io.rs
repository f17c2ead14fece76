//! Edge-list files and the generator mini-language.
//!
//! Edge lists: a header line `n m`, then `m` lines `u v` (0-indexed); `#` starts a comment.
//!
//! Generator strings: `kneser:5,2`, `circulant:10:1,3,4,5,6,7,9`, `cayley:5x5:<json file
//! or inline json>`, `hamming:5,4`, `circclique:5,2`, `K5`, `C5`, `petersen`, `g5`,
//! `cartesian(A,B)`, `lex(A,B)`, `union(A,B)`, `identify(A,u,B,v)`, `line(A)`,
//! `complement(A)`.

use std::io::Read;

use serde_json::Value;

use super::{
    cartesian, cayley, circulant, circular_clique, complement, complete, cycle, disjoint_union, g5,
    hamming_cayley, identify, kneser, lexicographic, line_graph, make_graph, petersen,
    AbelianGroup, ConnectionSet, Graph, GroupElement,
};
use crate::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse("line 1", "missing 'n m' header"))?;
    let nums = parse_pair(header, hline)?;
    let (n, m) = (nums.0, nums.1);
    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        edges.push(parse_pair(line, lineno)?);
    }
    if edges.len() != m {
        return Err(Error::parse(
            "edge list",
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    make_graph(n, &edges)
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let parts: Vec<&str> = line.split_whitespace().collect();
    if parts.len() != 2 {
        return Err(Error::parse(
            format!("line {lineno}"),
            format!("expected two integers, found '{line}'"),
        ));
    }
    let p = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| Error::parse(format!("line {lineno}"), format!("bad integer '{s}'")))
    };
    Ok((p(parts[0])?, p(parts[1])?))
}

pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("# {}\n{} {}\n", g.label(), g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Resolves a graph argument: `-` reads an edge list from stdin, generator strings are
/// built directly, anything else is read as an edge-list file.
pub fn read_graph(spec: &str) -> Result<Graph> {
    let spec = spec.trim();
    if spec == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Error::input(format!("reading stdin: {e}")))?;
        return parse_edge_list(&text);
    }
    if looks_like_generator(spec) {
        return parse_graph_spec(spec);
    }
    let text = std::fs::read_to_string(spec)
        .map_err(|e| Error::input(format!("cannot read graph file '{spec}': {e}")))?;
    parse_edge_list(&text).map(|g| g.with_label(spec.to_string()))
}

const FUNCTIONS: [&str; 6] = [
    "cartesian",
    "lex",
    "union",
    "identify",
    "line",
    "complement",
];
const PREFIXED: [&str; 5] = [
    "kneser:",
    "circulant:",
    "cayley:",
    "hamming:",
    "circclique:",
];

fn looks_like_generator(spec: &str) -> bool {
    let head = spec.split('(').next().unwrap_or("");
    (spec.contains('(') && FUNCTIONS.contains(&head))
        || PREFIXED.iter().any(|p| spec.starts_with(p))
        || named_graph(spec).is_some()
}

fn named_graph(spec: &str) -> Option<Result<Graph>> {
    match spec {
        "petersen" => return Some(Ok(petersen())),
        "g5" | "G5" => return Some(Ok(g5())),
        _ => {}
    }
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if let Some(rest) = spec.strip_prefix('K') {
        if digits(rest) {
            return Some(rest.parse().map_err(|_| bad(spec)).and_then(complete));
        }
    }
    if let Some(rest) = spec.strip_prefix('C') {
        if digits(rest) {
            return Some(rest.parse().map_err(|_| bad(spec)).and_then(cycle));
        }
    }
    None
}

fn bad(spec: &str) -> Error {
    Error::parse(
        format!("graph '{spec}'"),
        "unrecognised graph specification",
    )
}

fn numbers(spec: &str, text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::parse(format!("graph '{spec}'"), format!("bad number '{t}'")))
        })
        .collect()
}

pub fn parse_graph_spec(spec: &str) -> Result<Graph> {
    let spec = spec.trim();
    if let Some(g) = named_graph(spec) {
        return g;
    }
    if let Some(rest) = spec.strip_prefix("kneser:") {
        let v = numbers(spec, rest)?;
        return match v.as_slice() {
            [n, k] => kneser(*n, *k),
            _ => Err(bad(spec)),
        };
    }
    if let Some(rest) = spec.strip_prefix("hamming:") {
        let v = numbers(spec, rest)?;
        return match v.as_slice() {
            [n, d] => hamming_cayley(*n, *d),
            _ => Err(bad(spec)),
        };
    }
    if let Some(rest) = spec.strip_prefix("circclique:") {
        let v = numbers(spec, rest)?;
        return match v.as_slice() {
            [p, q] => circular_clique(*p, *q),
            _ => Err(bad(spec)),
        };
    }
    if let Some(rest) = spec.strip_prefix("circulant:") {
        let (n, s) = rest.split_once(':').ok_or_else(|| bad(spec))?;
        let n: u32 = n.trim().parse().map_err(|_| bad(spec))?;
        let residues: Vec<u32> = if s.trim().is_empty() {
            Vec::new()
        } else {
            numbers(spec, s)?.into_iter().map(|x| x as u32).collect()
        };
        let s = ConnectionSet::cyclic(n, &residues)?;
        return circulant(n, &s);
    }
    if let Some(rest) = spec.strip_prefix("cayley:") {
        let (group, source) = rest.split_once(':').ok_or_else(|| bad(spec))?;
        let group = AbelianGroup::parse(group)?;
        let source = source.trim();
        let text = if source.starts_with('[') || source.starts_with('{') {
            source.to_string()
        } else {
            std::fs::read_to_string(source)
                .map_err(|e| Error::input(format!("cannot read connection set '{source}': {e}")))?
        };
        let s = parse_connection_set(&group, &text)?;
        return cayley(&group, &s);
    }
    let open = spec.find('(').ok_or_else(|| bad(spec))?;
    if !spec.ends_with(')') {
        return Err(bad(spec));
    }
    let name = &spec[..open];
    let args = split_args(&spec[open + 1..spec.len() - 1]);
    let graph_arg = |i: usize| parse_graph_spec(&args[i]);
    match (name, args.len()) {
        ("cartesian", 2) => Ok(cartesian(&graph_arg(0)?, &graph_arg(1)?)),
        ("lex", 2) => Ok(lexicographic(&graph_arg(0)?, &graph_arg(1)?)),
        ("union", 2) => Ok(disjoint_union(&graph_arg(0)?, &graph_arg(1)?)),
        ("line", 1) => Ok(line_graph(&graph_arg(0)?)),
        ("complement", 1) => Ok(complement(&graph_arg(0)?)),
        ("identify", 4) => {
            let u = args[1].trim().parse().map_err(|_| bad(spec))?;
            let v = args[3].trim().parse().map_err(|_| bad(spec))?;
            identify(&graph_arg(0)?, u, &graph_arg(2)?, v)
        }
        _ => Err(bad(spec)),
    }
}

/// Splits at depth-0 commas. Purely numeric pieces are glued back onto the preceding
/// piece so that `circulant:5:1,4` survives as one argument; `identify` keeps its
/// numeric vertex arguments because they follow a `)` or a generator without a list.
fn split_args(text: &str) -> Vec<String> {
    let mut raw = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in text.chars() {
        match ch {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            _ => {}
        }
        if ch == ',' && depth == 0 {
            raw.push(std::mem::take(&mut cur));
        } else {
            cur.push(ch);
        }
    }
    raw.push(cur);
    let mut out: Vec<String> = Vec::new();
    for piece in raw {
        let numeric = !piece.trim().is_empty() && piece.trim().bytes().all(|b| b.is_ascii_digit());
        match out.last_mut() {
            Some(prev) if numeric && takes_number_list(prev) => {
                prev.push(',');
                prev.push_str(&piece);
            }
            _ => out.push(piece),
        }
    }
    out.into_iter().map(|s| s.trim().to_string()).collect()
}

fn takes_number_list(prev: &str) -> bool {
    let prev = prev.trim();
    ["kneser:", "circulant:", "hamming:", "circclique:"]
        .iter()
        .any(|p| prev.starts_with(p))
        && !prev.ends_with(')')
}

/// Connection set JSON: `[[r1,..,rd], ...]`, or an object with an `"S"` (or `"elements"`)
/// array of such vectors. Cyclic groups also accept bare integers.
pub fn parse_connection_set(group: &AbelianGroup, text: &str) -> Result<ConnectionSet> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| Error::parse("connection set", e.to_string()))?;
    let list = match &value {
        Value::Array(a) => a.clone(),
        Value::Object(o) => o
            .get("S")
            .or_else(|| o.get("elements"))
            .and_then(Value::as_array)
            .cloned()
            .ok_or_else(|| Error::parse("connection set", "expected an \"S\" array"))?,
        _ => return Err(Error::parse("connection set", "expected an array")),
    };
    let mut elements = Vec::with_capacity(list.len());
    for (i, item) in list.iter().enumerate() {
        let loc = format!("connection set[{i}]");
        let residues: Vec<u32> = match item {
            Value::Number(n) => vec![n
                .as_u64()
                .ok_or_else(|| Error::parse(&loc, "expected a non-negative integer"))?
                as u32],
            Value::Array(a) => a
                .iter()
                .map(|x| {
                    x.as_u64()
                        .map(|v| v as u32)
                        .ok_or_else(|| Error::parse(&loc, "expected non-negative integers"))
                })
                .collect::<Result<_>>()?,
            _ => return Err(Error::parse(&loc, "expected an element vector")),
        };
        elements.push(GroupElement::new(residues));
    }
    ConnectionSet::new(group.clone(), elements)
}

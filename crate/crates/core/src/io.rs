//! Plain-text instance formats.
//!
//! ```text
//! tournament <n>      then one `u v` line per directed edge u -> v (exactly n(n-1)/2 lines)
//! colouring <n>       then one `u v` line per red pair, u < v (blue is implicit)
//! graph <n>           then one `u v` line per edge, u < v
//! bipartite <a> <b>   then one `i j` line per edge, i < a, j < b
//! ```
//!
//! Ids are whitespace-separated decimals. Blank lines and lines starting with
//! `#` are ignored. Encoders list pairs in lexicographic order so output is
//! canonical for a given object.

use std::fmt::Write as _;

use crate::colouring::TwoColouring;
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Graph};
use crate::tournament::Tournament;

/// Any object readable from the text formats.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Instance {
    Tournament(Tournament),
    Colouring(TwoColouring),
    Graph(Graph),
    Bipartite(BipartiteGraph),
}

pub fn encode_tournament(t: &Tournament) -> String {
    let mut s = format!("tournament {}\n", t.n());
    for (u, v) in t.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn encode_colouring(c: &TwoColouring) -> String {
    let mut s = format!("colouring {}\n", c.n());
    for (u, v) in c.red_pairs() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn encode_graph(g: &Graph) -> String {
    let mut s = format!("graph {}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn encode_bipartite(h: &BipartiteGraph) -> String {
    let mut s = format!("bipartite {} {}\n", h.a_size(), h.b_size());
    for (i, j) in h.edges() {
        let _ = writeln!(s, "{i} {j}");
    }
    s
}

pub fn encode(instance: &Instance) -> String {
    match instance {
        Instance::Tournament(t) => encode_tournament(t),
        Instance::Colouring(c) => encode_colouring(c),
        Instance::Graph(g) => encode_graph(g),
        Instance::Bipartite(h) => encode_bipartite(h),
    }
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
}

fn lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            return None;
        }
        let mut tokens = Vec::new();
        let mut start = None;
        for (byte, ch) in raw.char_indices().chain(std::iter::once((raw.len(), ' '))) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(byte),
                (true, Some(s)) => {
                    tokens.push(Token {
                        text: &raw[s..byte],
                        column: raw[..s].chars().count() + 1,
                    });
                    start = None;
                }
                _ => {}
            }
        }
        Some(Line {
            number: i + 1,
            tokens,
        })
    })
}

fn number(line: &Line<'_>, idx: usize) -> Result<usize> {
    let tok = &line.tokens[idx];
    tok.text.parse::<usize>().map_err(|_| {
        Error::parse(
            line.number,
            tok.column,
            format!("expected a non-negative integer, found `{}`", tok.text),
        )
    })
}

fn expect_len(line: &Line<'_>, len: usize, what: &str) -> Result<()> {
    if line.tokens.len() != len {
        let column = line.tokens.get(len).map_or(1, |t| t.column);
        return Err(Error::parse(
            line.number,
            column,
            format!(
                "expected {what} ({len} fields), found {} fields",
                line.tokens.len()
            ),
        ));
    }
    Ok(())
}

fn end_line(text: &str) -> usize {
    text.lines().count() + 1
}

/// Parses `u v` pair lines with `u, v < bound_u, bound_v`.
fn pairs<'a>(
    body: impl Iterator<Item = Line<'a>>,
    bound_u: usize,
    bound_v: usize,
    mut accept: impl FnMut(&Line<'a>, usize, usize) -> Result<()>,
) -> Result<()> {
    for line in body {
        expect_len(&line, 2, "an edge line `u v`")?;
        let u = number(&line, 0)?;
        let v = number(&line, 1)?;
        if u >= bound_u {
            return Err(Error::parse(
                line.number,
                line.tokens[0].column,
                format!("id {u} out of range (< {bound_u})"),
            ));
        }
        if v >= bound_v {
            return Err(Error::parse(
                line.number,
                line.tokens[1].column,
                format!("id {v} out of range (< {bound_v})"),
            ));
        }
        accept(&line, u, v)?;
    }
    Ok(())
}

pub fn decode(text: &str) -> Result<Instance> {
    let mut it = lines(text);
    let header = it
        .next()
        .ok_or_else(|| Error::parse(1, 1, "empty input: expected a header line"))?;
    let keyword = header.tokens[0].text;
    match keyword {
        "tournament" | "colouring" | "graph" => {
            expect_len(&header, 2, &format!("`{keyword} <n>`"))?;
            let n = number(&header, 1)?;
            let mut seen = crate::bits::BitMatrix::new(n, n);
            let mut count = 0usize;
            pairs(it, n, n, |line, u, v| {
                if u == v {
                    return Err(Error::parse(
                        line.number,
                        line.tokens[1].column,
                        format!("self-loop at {u}"),
                    ));
                }
                if keyword != "tournament" && u > v {
                    return Err(Error::parse(
                        line.number,
                        line.tokens[0].column,
                        format!("pair must be written with u < v, found {u} {v}"),
                    ));
                }
                if seen.get(u, v) || seen.get(v, u) {
                    return Err(Error::parse(
                        line.number,
                        1,
                        format!("duplicate edge on pair {{{u}, {v}}}"),
                    ));
                }
                seen.set(u, v, true);
                count += 1;
                Ok(())
            })?;
            let edges = (0..n).flat_map(|u| (0..n).filter(move |&v| u != v).map(move |v| (u, v)));
            let present: Vec<(usize, usize)> = edges.filter(|&(u, v)| seen.get(u, v)).collect();
            match keyword {
                "tournament" => {
                    let expected = n * n.saturating_sub(1) / 2;
                    if count != expected {
                        return Err(Error::parse(
                            end_line(text),
                            1,
                            format!("tournament on {n} vertices needs {expected} edge lines, found {count}"),
                        ));
                    }
                    Ok(Instance::Tournament(Tournament::from_edges(n, present)?))
                }
                "colouring" => Ok(Instance::Colouring(TwoColouring::from_red_pairs(
                    n, present,
                )?)),
                _ => Ok(Instance::Graph(Graph::from_edges(n, present)?)),
            }
        }
        "bipartite" => {
            expect_len(&header, 3, "`bipartite <a> <b>`")?;
            let a = number(&header, 1)?;
            let b = number(&header, 2)?;
            let mut h = BipartiteGraph::empty(a, b);
            pairs(it, a, b, |line, i, j| {
                if h.has_edge(i, j) {
                    return Err(Error::parse(
                        line.number,
                        1,
                        format!("duplicate edge ({i}, {j})"),
                    ));
                }
                h.add_edge(i, j);
                Ok(())
            })?;
            Ok(Instance::Bipartite(h))
        }
        other => Err(Error::parse(
            header.number,
            header.tokens[0].column,
            format!(
                "unknown header `{other}` (expected tournament, colouring, graph or bipartite)"
            ),
        )),
    }
}

fn wrong_kind(expected: &str, got: &Instance) -> Error {
    let got = match got {
        Instance::Tournament(_) => "tournament",
        Instance::Colouring(_) => "colouring",
        Instance::Graph(_) => "graph",
        Instance::Bipartite(_) => "bipartite",
    };
    Error::parse(
        1,
        1,
        format!("expected a {expected} file, found a {got} file"),
    )
}

pub fn decode_tournament(text: &str) -> Result<Tournament> {
    match decode(text)? {
        Instance::Tournament(t) => Ok(t),
        other => Err(wrong_kind("tournament", &other)),
    }
}

pub fn decode_colouring(text: &str) -> Result<TwoColouring> {
    match decode(text)? {
        Instance::Colouring(c) => Ok(c),
        other => Err(wrong_kind("colouring", &other)),
    }
}

pub fn decode_graph(text: &str) -> Result<Graph> {
    match decode(text)? {
        Instance::Graph(g) => Ok(g),
        other => Err(wrong_kind("graph", &other)),
    }
}

pub fn decode_bipartite(text: &str) -> Result<BipartiteGraph> {
    match decode(text)? {
        Instance::Bipartite(h) => Ok(h),
        other => Err(wrong_kind("bipartite", &other)),
    }
}

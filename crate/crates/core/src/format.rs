//! Plain-text instance files. Blank lines and `#` comments are ignored;
//! parse errors carry 1-based line numbers.
//!
//! ```text
//! digraph <n>            intervals <n>                  bigraph <a> <b>
//! <u> <v>                <v> <lS> <rS> <lT> <rT>        A <i> <l> <r>
//!                                                       B <j> <l> <r>
//! ```
//!
//! Orderings, vertex sets and weights are whitespace-separated integers.
//! A subdivision map file is `subdivision <n> <k>` followed by the arcs of
//! the origin digraph.

use std::fmt::Write as _;

use crate::domination::IntervalBigraphRep;
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::interval::{format_coord, parse_coord, Coord, Interval, IntervalRep};
use crate::ordering::{OrderingRole, VertexOrdering};
use crate::pointpoint::{k_subdivision, SubdivisionMap};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Non-empty lines with comments stripped, paired with their line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn parse_usize(line: usize, tok: &str, what: &str) -> Result<usize> {
    tok.parse().map_err(|_| parse_err(line, format!("expected {what}, found {tok:?}")))
}

fn parse_coord_at(line: usize, tok: &str) -> Result<Coord> {
    parse_coord(tok).ok_or_else(|| parse_err(line, format!("expected a coordinate, found {tok:?}")))
}

fn expect_arity(line: usize, tokens: &[&str], count: usize) -> Result<()> {
    if tokens.len() != count {
        return Err(parse_err(line, format!("expected {count} fields, found {}", tokens.len())));
    }
    Ok(())
}

/// Header line: the keyword followed by `counts` sizes.
fn header<'a>(
    lines: &mut impl Iterator<Item = (usize, Vec<&'a str>)>,
    keyword: &str,
    counts: usize,
) -> Result<Vec<usize>> {
    let (line, tokens) = lines.next().ok_or_else(|| parse_err(1, format!("missing `{keyword}` header")))?;
    if tokens[0] != keyword {
        return Err(parse_err(line, format!("expected `{keyword}` header, found {:?}", tokens[0])));
    }
    expect_arity(line, &tokens, counts + 1)?;
    tokens[1..].iter().map(|t| parse_usize(line, t, "a size")).collect()
}

fn arc_lines<'a>(lines: impl Iterator<Item = (usize, Vec<&'a str>)>, n: usize) -> Result<Vec<(usize, usize)>> {
    let mut edges = Vec::new();
    for (line, tokens) in lines {
        expect_arity(line, &tokens, 2)?;
        let u = parse_usize(line, tokens[0], "a vertex")?;
        let v = parse_usize(line, tokens[1], "a vertex")?;
        for x in [u, v] {
            if x >= n {
                return Err(parse_err(line, format!("vertex {x} out of range for n = {n}")));
            }
        }
        edges.push((u, v));
    }
    Ok(edges)
}

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let mut lines = content_lines(text);
    let n = header(&mut lines, "digraph", 1)?[0];
    Digraph::from_edges(n, arc_lines(lines, n)?)
}

/// Canonical form: header, then every arc (loops included) in sorted order.
pub fn emit_digraph(g: &Digraph) -> String {
    let mut out = format!("digraph {}\n", g.n());
    for (u, v) in g.edges_with_loops() {
        writeln!(out, "{u} {v}").expect("writing to a string");
    }
    out
}

pub fn parse_intervals(text: &str) -> Result<IntervalRep> {
    let mut lines = content_lines(text);
    let n = header(&mut lines, "intervals", 1)?[0];
    let mut pairs: Vec<Option<(Interval, Interval)>> = vec![None; n];
    let mut last_line = 1;
    for (line, tokens) in lines {
        last_line = line;
        expect_arity(line, &tokens, 5)?;
        let v = parse_usize(line, tokens[0], "a vertex")?;
        if v >= n {
            return Err(parse_err(line, format!("vertex {v} out of range for n = {n}")));
        }
        if pairs[v].is_some() {
            return Err(parse_err(line, format!("vertex {v} listed twice")));
        }
        let c: Vec<Coord> = tokens[1..].iter().map(|t| parse_coord_at(line, t)).collect::<Result<_>>()?;
        let (s, t) = (Interval::new(c[0], c[1]), Interval::new(c[2], c[3]));
        for iv in [s, t] {
            if !iv.is_well_formed() {
                return Err(parse_err(line, format!("interval {iv} has its ends reversed")));
            }
        }
        pairs[v] = Some((s, t));
    }
    let pairs: Vec<(Interval, Interval)> = pairs
        .into_iter()
        .enumerate()
        .map(|(v, p)| p.ok_or_else(|| parse_err(last_line, format!("vertex {v} has no intervals"))))
        .collect::<Result<_>>()?;
    IntervalRep::new(pairs)
}

pub fn emit_intervals(rep: &IntervalRep) -> String {
    let mut out = format!("intervals {}\n", rep.n());
    for (v, (s, t)) in rep.pairs().iter().enumerate() {
        let c = [s.lo, s.hi, t.lo, t.hi].map(|x| format_coord(&x));
        writeln!(out, "{v} {} {} {} {}", c[0], c[1], c[2], c[3]).expect("writing to a string");
    }
    out
}

pub fn parse_bigraph(text: &str) -> Result<IntervalBigraphRep> {
    let mut lines = content_lines(text);
    let sizes = header(&mut lines, "bigraph", 2)?;
    let mut parts: [Vec<Option<Interval>>; 2] = [vec![None; sizes[0]], vec![None; sizes[1]]];
    let mut last_line = 1;
    for (line, tokens) in lines {
        last_line = line;
        expect_arity(line, &tokens, 4)?;
        let side = match tokens[0] {
            "A" => 0,
            "B" => 1,
            other => return Err(parse_err(line, format!("expected `A` or `B`, found {other:?}"))),
        };
        let i = parse_usize(line, tokens[1], "a vertex")?;
        if i >= sizes[side] {
            return Err(parse_err(line, format!("{} vertex {i} out of range", tokens[0])));
        }
        if parts[side][i].is_some() {
            return Err(parse_err(line, format!("{} vertex {i} listed twice", tokens[0])));
        }
        let iv = Interval::new(parse_coord_at(line, tokens[2])?, parse_coord_at(line, tokens[3])?);
        if !iv.is_well_formed() {
            return Err(parse_err(line, format!("interval {iv} has its ends reversed")));
        }
        parts[side][i] = Some(iv);
    }
    let [a, b] = parts.map(|p| {
        p.into_iter()
            .enumerate()
            .map(|(i, iv)| iv.ok_or_else(|| parse_err(last_line, format!("vertex {i} has no interval"))))
            .collect::<Result<Vec<_>>>()
    });
    IntervalBigraphRep::new(a?, b?)
}

pub fn emit_bigraph(rep: &IntervalBigraphRep) -> String {
    let mut out = format!("bigraph {} {}\n", rep.a().len(), rep.b().len());
    for (label, ivs) in [("A", rep.a()), ("B", rep.b())] {
        for (i, iv) in ivs.iter().enumerate() {
            writeln!(out, "{label} {i} {} {}", format_coord(&iv.lo), format_coord(&iv.hi))
                .expect("writing to a string");
        }
    }
    out
}

/// Whitespace-separated non-negative integers, across any number of lines.
pub fn parse_list(text: &str) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for (line, tokens) in content_lines(text) {
        for tok in tokens {
            out.push(tok.parse().map_err(|_| parse_err(line, format!("expected an integer, found {tok:?}")))?);
        }
    }
    Ok(out)
}

fn parse_ids(text: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for (line, tokens) in content_lines(text) {
        for tok in tokens {
            out.push(parse_usize(line, tok, "a vertex")?);
        }
    }
    Ok(out)
}

pub fn parse_ordering(text: &str, role: OrderingRole) -> Result<VertexOrdering> {
    VertexOrdering::new(parse_ids(text)?, role)
}

pub fn parse_set(text: &str) -> Result<Vec<usize>> {
    parse_ids(text)
}

pub fn parse_weights(text: &str) -> Result<Vec<u64>> {
    parse_list(text)
}

/// One line of space-separated ids; used for orderings and vertex sets.
pub fn emit_list<T: ToString>(items: &[T]) -> String {
    let words: Vec<String> = items.iter().map(ToString::to_string).collect();
    format!("{}\n", words.join(" "))
}

pub fn parse_subdivision(text: &str) -> Result<SubdivisionMap> {
    let mut lines = content_lines(text);
    let sizes = header(&mut lines, "subdivision", 2)?;
    let origin = Digraph::from_edges(sizes[0], arc_lines(lines, sizes[0])?)?;
    k_subdivision(&origin, sizes[1])
}

pub fn emit_subdivision(map: &SubdivisionMap) -> String {
    let mut out = format!("subdivision {} {}\n", map.origin().n(), map.k());
    for &(u, v) in map.arcs() {
        writeln!(out, "{u} {v}").expect("writing to a string");
    }
    out
}

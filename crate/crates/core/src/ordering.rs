//! Vertex orderings: DUF and umbrella-free verification, the six forbidden
//! quadruple patterns of reflexive interval digraphs, and the interval
//! construction that turns a pattern-free ordering into a representation.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Digraph, UndirectedGraph};
use crate::interval::{normalize, Coord, Interval, IntervalRep};

/// Largest graph for which a failing structure check searches for the
/// lexicographically least witness; larger graphs use the witness read off
/// the failed construction.
pub const LEX_WITNESS_LIMIT: usize = 2000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderingRole {
    Duf,
    ReflexiveInterval,
    Cocomparability,
    Adjusted,
}

/// A permutation of `0..n`; `perm()[i]` is the vertex at position `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexOrdering {
    perm: Vec<usize>,
    position: Vec<usize>,
    role: OrderingRole,
}

impl VertexOrdering {
    pub fn new(perm: Vec<usize>, role: OrderingRole) -> Result<Self> {
        let n = perm.len();
        let mut position = vec![usize::MAX; n];
        for (i, &v) in perm.iter().enumerate() {
            if v >= n {
                return Err(Error::InvalidOrdering(format!("vertex {v} out of range for {n} vertices")));
            }
            if position[v] != usize::MAX {
                return Err(Error::InvalidOrdering(format!("vertex {v} appears twice")));
            }
            position[v] = i;
        }
        Ok(VertexOrdering { perm, position, role })
    }

    pub fn identity(n: usize, role: OrderingRole) -> Self {
        VertexOrdering { perm: (0..n).collect(), position: (0..n).collect(), role }
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn role(&self) -> OrderingRole {
        self.role
    }

    pub fn with_role(mut self, role: OrderingRole) -> Self {
        self.role = role;
        self
    }

    pub(crate) fn expect_len(&self, n: usize) -> Result<()> {
        if self.len() == n {
            Ok(())
        } else {
            Err(Error::InvalidOrdering(format!("ordering has {} vertices, graph has {n}", self.len())))
        }
    }
}

/// Forbidden patterns (i)..(vi) over `a < b <= c < d`, plus the triple
/// violations of the DUF and umbrella-free conditions over `i < j < k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StructureKind {
    I,
    II,
    III,
    IV,
    V,
    VI,
    /// `(i,k)` is an arc but neither `(i,j)` nor `(j,k)` is.
    DufForward,
    /// `(k,i)` is an arc but neither `(k,j)` nor `(j,i)` is.
    DufBackward,
    /// `ik` is an edge but neither `ij` nor `jk` is.
    Umbrella,
}

impl StructureKind {
    pub const QUADRUPLES: [StructureKind; 6] = [
        StructureKind::I,
        StructureKind::II,
        StructureKind::III,
        StructureKind::IV,
        StructureKind::V,
        StructureKind::VI,
    ];

    /// Whether the two middle vertices may coincide.
    pub fn allows_shared_middle(self) -> bool {
        matches!(self, StructureKind::I | StructureKind::II | StructureKind::IV | StructureKind::V)
    }

    /// The same pattern with every arc reversed.
    pub fn transposed(self) -> StructureKind {
        use StructureKind::*;
        match self {
            I => IV,
            II => V,
            III => VI,
            IV => I,
            V => II,
            VI => III,
            DufForward => DufBackward,
            DufBackward => DufForward,
            Umbrella => Umbrella,
        }
    }
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            StructureKind::I => "(i)",
            StructureKind::II => "(ii)",
            StructureKind::III => "(iii)",
            StructureKind::IV => "(iv)",
            StructureKind::V => "(v)",
            StructureKind::VI => "(vi)",
            StructureKind::DufForward => "duf-forward",
            StructureKind::DufBackward => "duf-backward",
            StructureKind::Umbrella => "umbrella",
        };
        f.write_str(s)
    }
}

/// Vertices are listed in ordering order: `(a, b, c, d)` for the quadruple
/// patterns, `(i, j, k)` for triple violations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct StructureWitness {
    pub kind: StructureKind,
    pub vertices: Vec<usize>,
}

impl fmt::Display for StructureWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(f, "{} on ({})", self.kind, names.join(", "))
    }
}

/// Arc conditions of a quadruple pattern, ignoring positions.
pub fn pattern_arcs_hold(g: &Digraph, kind: StructureKind, a: usize, b: usize, c: usize, d: usize) -> bool {
    let e = |u, v| g.has_edge(u, v);
    match kind {
        StructureKind::I => e(a, d) && !e(a, b) && !e(c, d),
        StructureKind::II => e(a, d) && e(b, c) && !e(a, c) && !e(b, d),
        StructureKind::III => e(a, c) && e(b, d) && !e(a, d) && !e(b, c),
        StructureKind::IV => e(d, a) && !e(b, a) && !e(d, c),
        StructureKind::V => e(d, a) && e(c, b) && !e(c, a) && !e(d, b),
        StructureKind::VI => e(c, a) && e(d, b) && !e(d, a) && !e(c, b),
        _ => false,
    }
}

impl StructureWitness {
    /// Re-checks the witness against `g` and `ord`.
    pub fn holds(&self, g: &Digraph, ord: &VertexOrdering) -> bool {
        let v = &self.vertices;
        if v.iter().any(|&x| x >= g.n() || x >= ord.len()) {
            return false;
        }
        let p: Vec<usize> = v.iter().map(|&x| ord.position(x)).collect();
        match self.kind {
            StructureKind::DufForward | StructureKind::DufBackward => {
                if v.len() != 3 || !(p[0] < p[1] && p[1] < p[2]) {
                    return false;
                }
                let (i, j, k) = (v[0], v[1], v[2]);
                if self.kind == StructureKind::DufForward {
                    g.has_edge(i, k) && !g.has_edge(i, j) && !g.has_edge(j, k)
                } else {
                    g.has_edge(k, i) && !g.has_edge(k, j) && !g.has_edge(j, i)
                }
            }
            StructureKind::Umbrella => false,
            kind => {
                if v.len() != 4 {
                    return false;
                }
                let middle_ok = if kind.allows_shared_middle() { p[1] <= p[2] } else { p[1] < p[2] };
                p[0] < p[1] && middle_ok && p[2] < p[3] && pattern_arcs_hold(g, kind, v[0], v[1], v[2], v[3])
            }
        }
    }

    /// Re-checks an umbrella witness against an undirected graph.
    pub fn holds_undirected(&self, h: &UndirectedGraph, ord: &VertexOrdering) -> bool {
        if self.kind != StructureKind::Umbrella || self.vertices.len() != 3 {
            return false;
        }
        let (i, j, k) = (self.vertices[0], self.vertices[1], self.vertices[2]);
        ord.position(i) < ord.position(j)
            && ord.position(j) < ord.position(k)
            && h.has_edge(i, k)
            && !h.has_edge(i, j)
            && !h.has_edge(j, k)
    }
}

/// Scans every arc spanning at least one vertex for an uncovered middle
/// vertex. Returns the violation whose positions `(i, j, k)` are
/// lexicographically least, or `None` if `ord` is a DUF-ordering.
pub fn verify_duf_ordering(g: &Digraph, ord: &VertexOrdering) -> Result<Option<StructureWitness>> {
    ord.expect_len(g.n())?;
    for pi in 0..g.n() {
        let u = ord.perm[pi];
        let mut best: Option<(usize, usize, StructureKind)> = None;
        let forward = g.out_neighbors(u).iter().map(|&v| (v, StructureKind::DufForward));
        let backward = g.in_neighbors(u).iter().map(|&v| (v, StructureKind::DufBackward));
        for (v, kind) in forward.chain(backward) {
            let pk = ord.position(v);
            if pk <= pi + 1 {
                continue;
            }
            for pj in pi + 1..pk {
                if best.is_some_and(|(bj, _, _)| pj > bj) {
                    break;
                }
                let w = ord.perm[pj];
                let covered = match kind {
                    StructureKind::DufForward => g.has_edge(u, w) || g.has_edge(w, v),
                    _ => g.has_edge(v, w) || g.has_edge(w, u),
                };
                if !covered {
                    let cand = (pj, pk, kind);
                    if best.is_none_or(|b| cand < b) {
                        best = Some(cand);
                    }
                    break;
                }
            }
        }
        if let Some((pj, pk, kind)) = best {
            return Ok(Some(StructureWitness { kind, vertices: vec![u, ord.perm[pj], ord.perm[pk]] }));
        }
    }
    Ok(None)
}

/// Umbrella-free check: for `i < j < k` with `ik` an edge, `ij` or `jk`
/// must be an edge. Returns the lexicographically least violation.
pub fn verify_cocomparability_ordering(h: &UndirectedGraph, ord: &VertexOrdering) -> Result<Option<StructureWitness>> {
    ord.expect_len(h.n())?;
    for pi in 0..h.n() {
        let u = ord.perm[pi];
        let mut best: Option<(usize, usize)> = None;
        for &v in h.neighbors(u) {
            let pk = ord.position(v);
            if pk <= pi + 1 {
                continue;
            }
            for pj in pi + 1..pk {
                if best.is_some_and(|(bj, _)| pj > bj) {
                    break;
                }
                let w = ord.perm[pj];
                if !h.has_edge(u, w) && !h.has_edge(w, v) {
                    if best.is_none_or(|b| (pj, pk) < b) {
                        best = Some((pj, pk));
                    }
                    break;
                }
            }
        }
        if let Some((pj, pk)) = best {
            return Ok(Some(StructureWitness {
                kind: StructureKind::Umbrella,
                vertices: vec![u, ord.perm[pj], ord.perm[pk]],
            }));
        }
    }
    Ok(None)
}

/// Interval endpoints from the construction, all scaled by `n + 1` so they
/// are integers. Indexed by position; the point of position `p` is
/// `(p + 1)(n + 1)`.
struct Construction {
    /// First position after `p` that is not an out-neighbour (`n` if none).
    y_out: Vec<usize>,
    y_in: Vec<usize>,
    r_s: Vec<i64>,
    r_t: Vec<i64>,
    l_s: Vec<i64>,
    l_t: Vec<i64>,
}

/// First position after `p` missing from the sorted position list `above`,
/// and how many listed positions lie beyond it.
fn first_gap(p: usize, n: usize, above: &[usize]) -> (usize, usize) {
    let mut y = p + 1;
    for &q in above {
        if q == y {
            y += 1;
        } else {
            break;
        }
    }
    let y = y.min(n);
    let beyond = above.iter().filter(|&&q| q > y).count();
    (y, beyond)
}

fn construct(g: &Digraph, ord: &VertexOrdering) -> Construction {
    let n = g.n();
    let scale = (n + 1) as i64;
    let mut y_out = vec![0; n];
    let mut y_in = vec![0; n];
    let mut r_s = vec![0i64; n];
    let mut r_t = vec![0i64; n];
    let mut buf = Vec::new();
    for p in 0..n {
        let u = ord.perm[p];
        for (nbrs, y, r) in [(g.out_neighbors(u), &mut y_out, &mut r_s), (g.in_neighbors(u), &mut y_in, &mut r_t)] {
            buf.clear();
            buf.extend(nbrs.iter().map(|&v| ord.position[v]).filter(|&q| q > p));
            buf.sort_unstable();
            let (gap, beyond) = first_gap(p, n, &buf);
            y[p] = gap;
            r[p] = gap as i64 * scale + beyond as i64;
        }
    }
    let mut l_t = vec![0i64; n];
    let mut l_s = vec![0i64; n];
    for p in 0..n {
        let u = ord.perm[p];
        let point = (p as i64 + 1) * scale;
        l_t[p] =
            g.in_neighbors(u).iter().map(|&v| ord.position[v]).filter(|&q| q < p).map(|q| r_s[q]).fold(point, i64::min);
        l_s[p] = g
            .out_neighbors(u)
            .iter()
            .map(|&v| ord.position[v])
            .filter(|&q| q < p)
            .map(|q| r_t[q])
            .fold(point, i64::min);
    }
    Construction { y_out, y_in, r_s, r_t, l_s, l_t }
}

impl Construction {
    fn scaled_rep(&self, ord: &VertexOrdering) -> IntervalRep {
        let n = ord.len();
        let mut pairs = vec![(Interval::int(0, 0), Interval::int(0, 0)); n];
        for p in 0..n {
            pairs[ord.perm[p]] = (Interval::int(self.l_s[p], self.r_s[p]), Interval::int(self.l_t[p], self.r_t[p]));
        }
        IntervalRep::new(pairs).expect("construction yields ordered endpoints")
    }

    fn rational_rep(&self, ord: &VertexOrdering) -> IntervalRep {
        let n = ord.len();
        let scale = (n + 1) as i64;
        let c = |x: i64| Coord::new(x, scale);
        let mut pairs = vec![(Interval::int(0, 0), Interval::int(0, 0)); n];
        for p in 0..n {
            pairs[ord.perm[p]] =
                (Interval::new(c(self.l_s[p]), c(self.r_s[p])), Interval::new(c(self.l_t[p]), c(self.r_t[p])));
        }
        IntervalRep::new(pairs).expect("construction yields ordered endpoints")
    }
}

/// Arc test on positions.
struct PosView<'a> {
    g: &'a Digraph,
    ord: &'a VertexOrdering,
    reversed: bool,
}

impl PosView<'_> {
    fn e(&self, p: usize, q: usize) -> bool {
        let (u, v) = (self.ord.perm[p], self.ord.perm[q]);
        if self.reversed {
            self.g.has_edge(v, u)
        } else {
            self.g.has_edge(u, v)
        }
    }

    fn out_positions(&self, p: usize) -> impl Iterator<Item = usize> + '_ {
        let u = self.ord.perm[p];
        let list = if self.reversed { self.g.in_neighbors(u) } else { self.g.out_neighbors(u) };
        list.iter().map(|&v| self.ord.position[v])
    }

    fn in_positions(&self, p: usize) -> impl Iterator<Item = usize> + '_ {
        let u = self.ord.perm[p];
        let list = if self.reversed { self.g.out_neighbors(u) } else { self.g.in_neighbors(u) };
        list.iter().map(|&v| self.ord.position[v])
    }
}

/// Two positions `u < w` whose out-neighbourhoods beyond `w` are not
/// nested: `xu` is reached only from `u`, `xw` only from `w`.
fn nesting_violation(u: usize, w: usize, xu: usize, xw: usize) -> (StructureKind, [usize; 4]) {
    if xu < xw {
        (StructureKind::III, [u, w, xu, xw])
    } else {
        (StructureKind::II, [u, w, xw, xu])
    }
}

/// Reads a forbidden structure off a false arc `(i, j)`, `i < j`, that the
/// construction realized, following the correctness argument of the
/// construction step by step. Positions in, positions out.
fn derive_from_false_arc(
    view: &PosView<'_>,
    y: &[usize],
    r_s: &[i64],
    i: usize,
    j: usize,
) -> Option<(StructureKind, [usize; 4])> {
    let k = view.in_positions(j).filter(|&q| q < j).min_by_key(|&q| (r_s[q], q))?;
    if y[i] == y[k] {
        let p = y[i];
        let x = view.out_positions(i).filter(|&q| q > p && !view.e(k, q)).min()?;
        return Some(if i < k { nesting_violation(i, k, x, j) } else { nesting_violation(k, i, j, x) });
    }
    if y[k] < y[i] {
        let yk = y[k];
        if yk <= i {
            return Some((StructureKind::I, [k, yk, i, j]));
        }
        return Some(if i < k { nesting_violation(i, k, yk, j) } else { nesting_violation(k, i, j, yk) });
    }
    None
}

fn derive_witness(
    g: &Digraph,
    ord: &VertexOrdering,
    cons: &Construction,
    realized: &Digraph,
) -> Option<StructureWitness> {
    let (u, v) = realized.edges().find(|&(u, v)| !g.has_edge(u, v))?;
    let (pu, pv) = (ord.position[u], ord.position[v]);
    let (kind, quad) = if pu < pv {
        let view = PosView { g, ord, reversed: false };
        derive_from_false_arc(&view, &cons.y_out, &cons.r_s, pu, pv)?
    } else {
        let view = PosView { g, ord, reversed: true };
        let (kind, quad) = derive_from_false_arc(&view, &cons.y_in, &cons.r_t, pv, pu)?;
        (kind.transposed(), quad)
    };
    let w = StructureWitness { kind, vertices: quad.iter().map(|&p| ord.perm[p]).collect() };
    w.holds(g, ord).then_some(w)
}

/// Row-major bit matrix over positions.
struct BitMatrix {
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        BitMatrix { words, data: vec![0; words * n] }
    }

    fn set(&mut self, r: usize, c: usize) {
        self.data[r * self.words + c / 64] |= 1 << (c % 64);
    }

    fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.words..(r + 1) * self.words]
    }
}

/// Smallest index `>= start` whose bit is set in the word stream `word`.
fn first_from(words: usize, n: usize, start: usize, word: impl Fn(usize) -> u64) -> Option<usize> {
    if start >= n {
        return None;
    }
    let mut w = start / 64;
    let mut bits = word(w) & (!0u64 << (start % 64));
    loop {
        if bits != 0 {
            let idx = w * 64 + bits.trailing_zeros() as usize;
            return (idx < n).then_some(idx);
        }
        w += 1;
        if w >= words {
            return None;
        }
        bits = word(w);
    }
}

/// Lexicographically least `(a, b, c, d)` by positions over all six
/// patterns, ties resolved in pattern order. `O(n^3 / 64)`.
fn lex_least_witness(g: &Digraph, ord: &VertexOrdering) -> Option<StructureWitness> {
    let n = g.n();
    let mut out_m = BitMatrix::new(n);
    let mut in_m = BitMatrix::new(n);
    for (u, v) in g.edges_with_loops() {
        let (pu, pv) = (ord.position[u], ord.position[v]);
        out_m.set(pu, pv);
        in_m.set(pv, pu);
    }
    let words = out_m.words;
    let mut next_good = vec![None; n + 1];
    let mut good_d = vec![0usize; n];
    for a in 0..n {
        let mut best: Option<([usize; 3], StructureKind)> = None;
        let offer = |cand: [usize; 3], kind: StructureKind, best: &mut Option<([usize; 3], StructureKind)>| {
            if best.is_none_or(|(b, bk)| (cand, kind) < (b, bk)) {
                *best = Some((cand, kind));
            }
        };
        for (m, kinds) in [
            (&out_m, [StructureKind::I, StructureKind::II, StructureKind::III]),
            (&in_m, [StructureKind::IV, StructureKind::V, StructureKind::VI]),
        ] {
            let ra = m.row(a);
            // (i)/(iv): d in M[a], b not in M[a], d not in M[c].
            next_good[n] = None;
            for c in (a + 1..n).rev() {
                let rc = m.row(c);
                let d = first_from(words, n, c + 1, |w| ra[w] & !rc[w]);
                if let Some(d) = d {
                    good_d[c] = d;
                    next_good[c] = Some(c);
                } else {
                    next_good[c] = next_good[c + 1];
                }
            }
            for b in a + 1..n {
                if ra[b / 64] >> (b % 64) & 1 == 1 {
                    continue;
                }
                if let Some(c) = next_good[b] {
                    offer([b, c, good_d[c]], kinds[0], &mut best);
                }
                break;
            }
            for b in a + 1..n {
                let rb = m.row(b);
                // (ii)/(v): c in M[b] \ M[a], c >= b; d in M[a] \ M[b], d > c.
                if let Some(c) = first_from(words, n, b, |w| rb[w] & !ra[w]) {
                    if let Some(d) = first_from(words, n, c + 1, |w| ra[w] & !rb[w]) {
                        offer([b, c, d], kinds[1], &mut best);
                    }
                }
                // (iii)/(vi): c in M[a] \ M[b], c > b; d in M[b] \ M[a], d > c.
                if let Some(c) = first_from(words, n, b + 1, |w| ra[w] & !rb[w]) {
                    if let Some(d) = first_from(words, n, c + 1, |w| rb[w] & !ra[w]) {
                        offer([b, c, d], kinds[2], &mut best);
                    }
                }
                if best.is_some_and(|(cand, _)| cand[0] <= b) {
                    break;
                }
            }
        }
        if let Some(([b, c, d], kind)) = best {
            return Some(StructureWitness { kind, vertices: [a, b, c, d].iter().map(|&p| ord.perm[p]).collect() });
        }
    }
    None
}

fn require_reflexive(g: &Digraph) -> Result<()> {
    match g.missing_loop() {
        Some(v) => Err(Error::NotReflexive(v)),
        None => Ok(()),
    }
}

/// Runs the construction and compares its realization with `g`.
fn construct_and_check(g: &Digraph, ord: &VertexOrdering) -> (Construction, Option<Digraph>) {
    let cons = construct(g, ord);
    let realized = normalize(&cons.scaled_rep(ord)).digraph();
    if realized == *g {
        (cons, None)
    } else {
        (cons, Some(realized))
    }
}

/// `None` iff no forbidden pattern occurs in `ord`. Decided by running the
/// interval construction and checking that it realizes `g`; on failure the
/// lexicographically least witness is returned (graphs up to
/// [`LEX_WITNESS_LIMIT`] vertices), or one read off a false arc beyond that.
pub fn check_reflexive_interval_ordering(g: &Digraph, ord: &VertexOrdering) -> Result<Option<StructureWitness>> {
    ord.expect_len(g.n())?;
    require_reflexive(g)?;
    let (cons, realized) = construct_and_check(g, ord);
    let Some(realized) = realized else {
        return Ok(None);
    };
    let witness = if g.n() <= LEX_WITNESS_LIMIT {
        lex_least_witness(g, ord)
    } else {
        derive_witness(g, ord, &cons, &realized).or_else(|| lex_least_witness(g, ord))
    };
    Ok(Some(witness.expect("a failed construction always exposes a forbidden pattern")))
}

/// The witness read off the failed construction, regardless of size.
pub fn constructive_witness(g: &Digraph, ord: &VertexOrdering) -> Result<Option<StructureWitness>> {
    ord.expect_len(g.n())?;
    require_reflexive(g)?;
    let (cons, realized) = construct_and_check(g, ord);
    Ok(realized.and_then(|r| derive_witness(g, ord, &cons, &r)))
}

/// Interval representation of a reflexive digraph from a pattern-free
/// ordering. With vertices relabelled `1..n` along `ord`, vertex `i` gets
/// `r(S_i) = y_i - 1 + z_i/(n+1)` where `y_i` is the first non-out-neighbour
/// above `i` and `z_i` counts out-neighbours above `y_i`; `l(T_i)` is the
/// least of `i` and `r(S_j)` over earlier in-neighbours `j`. `T` mirrors
/// `S` with in- and out-neighbours swapped.
pub fn build_representation(g: &Digraph, ord: &VertexOrdering) -> Result<IntervalRep> {
    ord.expect_len(g.n())?;
    require_reflexive(g)?;
    let (cons, realized) = construct_and_check(g, ord);
    if realized.is_some() {
        let w = check_reflexive_interval_ordering(g, ord)?.expect("construction failed");
        return Err(Error::ForbiddenStructure(w));
    }
    Ok(cons.rational_rep(ord))
}

/// The construction without the structure check; the result realizes `g`
/// exactly when `ord` is pattern-free.
pub fn build_representation_unchecked(g: &Digraph, ord: &VertexOrdering) -> Result<IntervalRep> {
    ord.expect_len(g.n())?;
    require_reflexive(g)?;
    Ok(construct(g, ord).rational_rep(ord))
}

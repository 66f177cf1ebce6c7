//! Interval representations: each vertex `u` owns a source interval `S_u`
//! and a target interval `T_u`, and `(u, v)` is an arc iff `S_u` meets `T_v`.

use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::ordering::{OrderingRole, VertexOrdering};

/// Exact interval coordinate.
pub type Coord = Ratio<i64>;

/// Parses `7`, `-3/4` or `1.25` into an exact coordinate.
pub fn parse_coord(text: &str) -> Option<Coord> {
    let text = text.trim();
    if let Some((num, den)) = text.split_once('/') {
        let num: i64 = num.trim().parse().ok()?;
        let den: i64 = den.trim().parse().ok()?;
        if den == 0 {
            return None;
        }
        return Some(Coord::new(num, den));
    }
    if let Some((whole, frac)) = text.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) || frac.len() > 15 {
            return None;
        }
        let negative = whole.starts_with('-');
        let whole_val: i64 = if whole.is_empty() || whole == "-" { 0 } else { whole.parse().ok()? };
        let scale = 10i64.checked_pow(frac.len() as u32)?;
        let frac_val: i64 = frac.parse().ok()?;
        let magnitude = whole_val.checked_abs()?.checked_mul(scale)?.checked_add(frac_val)?;
        let num = if negative { -magnitude } else { magnitude };
        return Some(Coord::new(num, scale));
    }
    text.parse::<i64>().ok().map(Coord::from_integer)
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn format_coord(c: &Coord) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Closed interval `[lo, hi]`; degenerate intervals are allowed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Coord,
    pub hi: Coord,
}

impl Interval {
    pub fn new(lo: Coord, hi: Coord) -> Self {
        Interval { lo, hi }
    }

    pub fn int(lo: i64, hi: i64) -> Self {
        Interval::new(Coord::from_integer(lo), Coord::from_integer(hi))
    }

    pub fn is_well_formed(&self) -> bool {
        self.lo <= self.hi
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", format_coord(&self.lo), format_coord(&self.hi))
    }
}

/// One `(S_u, T_u)` pair per vertex, validated on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalRep {
    pairs: Vec<(Interval, Interval)>,
    first_unadjusted: Option<usize>,
}

impl IntervalRep {
    pub fn new(pairs: Vec<(Interval, Interval)>) -> Result<Self> {
        for (v, (s, t)) in pairs.iter().enumerate() {
            for iv in [s, t] {
                if !iv.is_well_formed() {
                    return Err(Error::MalformedInterval {
                        vertex: v,
                        lo: format_coord(&iv.lo),
                        hi: format_coord(&iv.hi),
                    });
                }
            }
        }
        let first_unadjusted = pairs.iter().position(|(s, t)| s.lo != t.lo);
        Ok(IntervalRep { pairs, first_unadjusted })
    }

    /// From `(l(S), r(S), l(T), r(T))` integer tuples.
    pub fn from_int_tuples(tuples: &[(i64, i64, i64, i64)]) -> Result<Self> {
        IntervalRep::new(
            tuples.iter().map(|&(ls, rs, lt, rt)| (Interval::int(ls, rs), Interval::int(lt, rt))).collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[(Interval, Interval)] {
        &self.pairs
    }

    pub fn s(&self, u: usize) -> &Interval {
        &self.pairs[u].0
    }

    pub fn t(&self, u: usize) -> &Interval {
        &self.pairs[u].1
    }

    /// True iff `l(S_u) = l(T_u)` for every vertex.
    pub fn is_adjusted(&self) -> bool {
        self.first_unadjusted.is_none()
    }

    pub fn first_unadjusted(&self) -> Option<usize> {
        self.first_unadjusted
    }

    /// Vertex whose two intervals are disjoint, if any.
    pub fn missing_loop(&self) -> Option<usize> {
        self.pairs.iter().position(|(s, t)| !s.intersects(t))
    }

    /// Representation of the reversed digraph: `S` and `T` swap roles.
    pub fn reversed(&self) -> IntervalRep {
        IntervalRep::new(self.pairs.iter().map(|&(s, t)| (t, s)).collect()).expect("already validated")
    }

    /// Representation of the subgraph induced by `set`, relabelled in the
    /// order given.
    pub fn restrict(&self, set: &[usize]) -> Result<IntervalRep> {
        let mut pairs = Vec::with_capacity(set.len());
        for &v in set {
            if v >= self.n() {
                return Err(Error::InvalidVertex { vertex: v, n: self.n() });
            }
            pairs.push(self.pairs[v]);
        }
        IntervalRep::new(pairs)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum End {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    S,
    T,
}

/// One of the `4n` endpoints of a representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Endpoint {
    pub vertex: usize,
    pub side: Side,
    pub end: End,
}

/// Interval with integer rank endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Span {
    pub lo: usize,
    pub hi: usize,
}

impl Span {
    pub fn intersects(&self, other: &Span) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }
}

/// Sort key shared by every normalization in the crate: coordinate first,
/// then left endpoints before right endpoints, then an item tie-break.
pub(crate) fn rank_order<K: Ord + Copy>(keys: &[(Coord, End, K)]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..keys.len()).collect();
    if keys.iter().all(|k| k.0.is_integer()) {
        idx.sort_unstable_by_key(|&i| (*keys[i].0.numer(), keys[i].1, keys[i].2));
    } else {
        idx.sort_unstable_by(|&a, &b| keys[a].cmp(&keys[b]));
    }
    idx
}

/// A representation whose `4n` endpoints are the distinct integers
/// `0..4n`, ordered as in the source with lefts first at shared coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedRep {
    s: Vec<Span>,
    t: Vec<Span>,
    events: Vec<Endpoint>,
    /// Per vertex, whether `l(S_u) = l(T_u)` held in the source.
    adjusted: Vec<bool>,
}

impl NormalizedRep {
    pub fn n(&self) -> usize {
        self.s.len()
    }

    pub fn s(&self, u: usize) -> Span {
        self.s[u]
    }

    pub fn t(&self, u: usize) -> Span {
        self.t[u]
    }

    /// Endpoints in increasing rank order.
    pub fn events(&self) -> &[Endpoint] {
        &self.events
    }

    /// The source satisfied `l(S_u) = l(T_u)` for every vertex.
    pub fn is_adjusted(&self) -> bool {
        self.adjusted.iter().all(|&a| a)
    }

    /// First vertex of the source with `l(S_u) != l(T_u)`.
    pub fn first_unadjusted(&self) -> Option<usize> {
        self.adjusted.iter().position(|&a| !a)
    }

    pub fn missing_loop(&self) -> Option<usize> {
        (0..self.n()).find(|&u| !self.s[u].intersects(&self.t[u]))
    }

    pub fn is_reflexive(&self) -> bool {
        self.missing_loop().is_none()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.s[u].intersects(&self.t[v])
    }

    /// Realized digraph by a single sweep over the endpoints; each meeting
    /// pair is reported once, when the later of the two intervals opens.
    pub fn digraph(&self) -> Digraph {
        let n = self.n();
        let mut active: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
        let mut slot: [Vec<usize>; 2] = [vec![0; n], vec![0; n]];
        let mut edges = Vec::new();
        for ev in &self.events {
            let (me, other) = match ev.side {
                Side::S => (0, 1),
                Side::T => (1, 0),
            };
            match ev.end {
                End::Left => {
                    for &w in &active[other] {
                        edges.push(if me == 0 { (ev.vertex, w) } else { (w, ev.vertex) });
                    }
                    slot[me][ev.vertex] = active[me].len();
                    active[me].push(ev.vertex);
                }
                End::Right => {
                    let pos = slot[me][ev.vertex];
                    let last = *active[me].last().expect("interval was opened");
                    active[me].swap_remove(pos);
                    if last != ev.vertex {
                        slot[me][last] = pos;
                    }
                }
            }
        }
        Digraph::from_edges(n, edges).expect("vertices in range")
    }

    /// Representation of the reversed digraph.
    pub fn reversed(&self) -> NormalizedRep {
        let events = self
            .events
            .iter()
            .map(|e| Endpoint {
                side: match e.side {
                    Side::S => Side::T,
                    Side::T => Side::S,
                },
                ..*e
            })
            .collect();
        NormalizedRep { s: self.t.clone(), t: self.s.clone(), events, adjusted: self.adjusted.clone() }
    }

    /// Normalized representation of the subgraph induced by `set`.
    pub fn restrict(&self, set: &[usize]) -> Result<NormalizedRep> {
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in set.iter().enumerate() {
            if v >= self.n() {
                return Err(Error::InvalidVertex { vertex: v, n: self.n() });
            }
            new_id[v] = i;
        }
        let k = set.len();
        let mut s = vec![Span { lo: 0, hi: 0 }; k];
        let mut t = vec![Span { lo: 0, hi: 0 }; k];
        let mut events = Vec::with_capacity(4 * k);
        for ev in &self.events {
            let id = new_id[ev.vertex];
            if id == usize::MAX {
                continue;
            }
            let rank = events.len();
            let span = match ev.side {
                Side::S => &mut s[id],
                Side::T => &mut t[id],
            };
            match ev.end {
                End::Left => span.lo = rank,
                End::Right => span.hi = rank,
            }
            events.push(Endpoint { vertex: id, ..*ev });
        }
        let adjusted = set.iter().map(|&v| self.adjusted[v]).collect();
        Ok(NormalizedRep { s, t, events, adjusted })
    }

    /// The same representation with integer coordinates.
    pub fn to_rep(&self) -> IntervalRep {
        let iv = |sp: Span| Interval::int(sp.lo as i64, sp.hi as i64);
        let pairs = (0..self.n()).map(|u| (iv(self.s[u]), iv(self.t[u]))).collect();
        IntervalRep::new(pairs).expect("ranks are ordered")
    }
}

/// Replaces every endpoint by its rank in the event order: coordinate, then
/// lefts before rights, then vertex id, then `S` before `T`. Closed-interval
/// intersections are unchanged.
pub fn normalize(rep: &IntervalRep) -> NormalizedRep {
    let n = rep.n();
    let mut keys = Vec::with_capacity(4 * n);
    let mut items = Vec::with_capacity(4 * n);
    for (v, (s, t)) in rep.pairs().iter().enumerate() {
        for (side, iv) in [(Side::S, s), (Side::T, t)] {
            for (end, c) in [(End::Left, iv.lo), (End::Right, iv.hi)] {
                keys.push((c, end, (v, side)));
                items.push(Endpoint { vertex: v, side, end });
            }
        }
    }
    let order = rank_order(&keys);
    let mut s = vec![Span { lo: 0, hi: 0 }; n];
    let mut t = vec![Span { lo: 0, hi: 0 }; n];
    let mut events = Vec::with_capacity(4 * n);
    for (rank, &i) in order.iter().enumerate() {
        let ev = items[i];
        let span = match ev.side {
            Side::S => &mut s[ev.vertex],
            Side::T => &mut t[ev.vertex],
        };
        match ev.end {
            End::Left => span.lo = rank,
            End::Right => span.hi = rank,
        }
        events.push(ev);
    }
    let adjusted = rep.pairs().iter().map(|(s, t)| s.lo == t.lo).collect();
    NormalizedRep { s, t, events, adjusted }
}

pub fn realize_digraph(rep: &IntervalRep) -> Digraph {
    normalize(rep).digraph()
}

/// True iff `rep` realizes exactly the arcs and loops of `g`.
pub fn verify_representation(rep: &IntervalRep, g: &Digraph) -> Result<bool> {
    if rep.n() != g.n() {
        return Err(Error::DimensionMismatch { expected: g.n(), found: rep.n() });
    }
    Ok(realize_digraph(rep) == *g)
}

pub fn is_reflexive(rep: &IntervalRep) -> bool {
    rep.missing_loop().is_none()
}

/// Orders vertices by the left end of `S_v ∩ T_v`.
pub fn extract_duf_ordering(rep: &NormalizedRep) -> Result<VertexOrdering> {
    if let Some(v) = rep.missing_loop() {
        return Err(Error::NotReflexive(v));
    }
    let mut perm: Vec<usize> = (0..rep.n()).collect();
    perm.sort_unstable_by_key(|&v| rep.s(v).lo.max(rep.t(v).lo));
    VertexOrdering::new(perm, OrderingRole::ReflexiveInterval)
}

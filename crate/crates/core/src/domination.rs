//! Splitting bigraphs, red-blue domination on interval bigraphs, and
//! minimum absorbing / dominating sets of reflexive interval digraphs.

use std::collections::BTreeMap;

use crate::certificate::{Certificate, Mode, Optimality, Property};
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::interval::{format_coord, rank_order, Coord, End, Interval, IntervalRep, NormalizedRep};

/// Bipartite graph with parts `A = {0..a}` and `B = {0..b}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bigraph {
    adj_a: Vec<Vec<usize>>,
    adj_b: Vec<Vec<usize>>,
}

impl Bigraph {
    /// Builds from `(i, j)` pairs with `i` in `A` and `j` in `B`.
    pub fn from_edges(a: usize, b: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj_a = vec![Vec::new(); a];
        let mut adj_b = vec![Vec::new(); b];
        for (i, j) in edges {
            if i >= a {
                return Err(Error::InvalidVertex { vertex: i, n: a });
            }
            if j >= b {
                return Err(Error::InvalidVertex { vertex: j, n: b });
            }
            adj_a[i].push(j);
            adj_b[j].push(i);
        }
        for list in adj_a.iter_mut().chain(adj_b.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Bigraph { adj_a, adj_b })
    }

    pub fn a_len(&self) -> usize {
        self.adj_a.len()
    }

    pub fn b_len(&self) -> usize {
        self.adj_b.len()
    }

    pub fn m(&self) -> usize {
        self.adj_a.iter().map(Vec::len).sum()
    }

    pub fn neighbors_of_a(&self, i: usize) -> &[usize] {
        &self.adj_a[i]
    }

    pub fn neighbors_of_b(&self, j: usize) -> &[usize] {
        &self.adj_b[j]
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj_a.get(i).is_some_and(|l| l.binary_search(&j).is_ok())
    }

    /// All `(i, j)` edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj_a.iter().enumerate().flat_map(|(i, l)| l.iter().map(move |&j| (i, j)))
    }

    /// The same graph as an undirected graph on `A` then `B`.
    pub fn to_undirected(&self) -> crate::graph::UndirectedGraph {
        let a = self.a_len();
        crate::graph::UndirectedGraph::from_edges(a + self.b_len(), self.edges().map(|(i, j)| (i, a + j)))
            .expect("indices in range")
    }
}

/// One interval per vertex of each part; `i` in `A` and `j` in `B` are
/// adjacent iff their intervals meet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalBigraphRep {
    a: Vec<Interval>,
    b: Vec<Interval>,
}

impl IntervalBigraphRep {
    /// Malformed intervals are reported with `A` vertices first, then `B`
    /// vertices offset by `|A|`.
    pub fn new(a: Vec<Interval>, b: Vec<Interval>) -> Result<Self> {
        for (v, iv) in a.iter().chain(b.iter()).enumerate() {
            if !iv.is_well_formed() {
                return Err(Error::MalformedInterval { vertex: v, lo: format_coord(&iv.lo), hi: format_coord(&iv.hi) });
            }
        }
        Ok(IntervalBigraphRep { a, b })
    }

    pub fn a(&self) -> &[Interval] {
        &self.a
    }

    pub fn b(&self) -> &[Interval] {
        &self.b
    }

    /// Sweep over all endpoints, lefts before rights at equal coordinates.
    pub fn bigraph(&self) -> Bigraph {
        let mut keys = Vec::with_capacity(2 * (self.a.len() + self.b.len()));
        for (part, ivs) in [(0u8, &self.a), (1u8, &self.b)] {
            for (v, iv) in ivs.iter().enumerate() {
                keys.push((iv.lo, End::Left, (part, v)));
                keys.push((iv.hi, End::Right, (part, v)));
            }
        }
        let mut active: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
        let mut slot: [Vec<usize>; 2] = [vec![0; self.a.len()], vec![0; self.b.len()]];
        let mut edges = Vec::new();
        for k in rank_order(&keys) {
            let (_, end, (part, v)) = keys[k];
            let (p, q) = (part as usize, 1 - part as usize);
            match end {
                End::Left => {
                    for &w in &active[q] {
                        edges.push(if p == 0 { (v, w) } else { (w, v) });
                    }
                    slot[p][v] = active[p].len();
                    active[p].push(v);
                }
                End::Right => {
                    let at = slot[p][v];
                    active[p].swap_remove(at);
                    if let Some(&moved) = active[p].get(at) {
                        slot[p][moved] = at;
                    }
                }
            }
        }
        Bigraph::from_edges(self.a.len(), self.b.len(), edges).expect("indices in range")
    }
}

/// Builds `B_G`: `u` in part `A` (the copy `u'`) is adjacent to `v` in part
/// `B` (the copy `v''`) iff `(u, v)` is an arc, loops included. With a
/// representation, `u'` gets `S_u` and `u''` gets `T_u`.
pub fn splitting_bigraph(g: &Digraph, rep: Option<&IntervalRep>) -> Result<(Bigraph, Option<IntervalBigraphRep>)> {
    let bigraph = Bigraph::from_edges(g.n(), g.n(), g.edges_with_loops()).expect("vertices in range");
    let model = match rep {
        None => None,
        Some(rep) => {
            if rep.n() != g.n() {
                return Err(Error::DimensionMismatch { expected: g.n(), found: rep.n() });
            }
            let a = rep.pairs().iter().map(|p| p.0).collect();
            let b = rep.pairs().iter().map(|p| p.1).collect();
            Some(IntervalBigraphRep::new(a, b)?)
        }
    };
    Ok((bigraph, model))
}

/// The quantities behind the greedy red-blue sweep. Positions refer to `A`
/// sorted by right endpoint; coordinates are dense ranks of the distinct
/// endpoint values, which preserve every intersection.
#[derive(Clone, Debug)]
pub struct RedBlueState {
    coords: Vec<Coord>,
    /// `A` indices sorted by right endpoint, ties by index.
    order: Vec<usize>,
    /// Rank of the largest right endpoint among the neighbours of each position.
    reach: Vec<Option<usize>>,
    /// The neighbour attaining `reach`, smallest `B` index on ties.
    best: Vec<Option<usize>>,
    /// First position whose left endpoint lies beyond `reach`.
    next: Vec<Option<usize>>,
}

impl RedBlueState {
    pub fn new(rep: &IntervalBigraphRep) -> Self {
        let mut coords: Vec<Coord> = rep.a.iter().chain(rep.b.iter()).flat_map(|iv| [iv.lo, iv.hi]).collect();
        // Integer coordinates compare much faster as plain integers.
        let integral = coords.iter().all(|c| c.is_integer());
        if integral {
            coords.sort_unstable_by_key(|c| *c.numer());
        } else {
            coords.sort_unstable();
        }
        coords.dedup();
        let rank = |c: &Coord| {
            if integral {
                coords.binary_search_by_key(c.numer(), |x| *x.numer()).expect("collected")
            } else {
                coords.binary_search(c).expect("collected")
            }
        };
        let a: Vec<(usize, usize)> = rep.a.iter().map(|iv| (rank(&iv.lo), rank(&iv.hi))).collect();
        let b: Vec<(usize, usize)> = rep.b.iter().map(|iv| (rank(&iv.lo), rank(&iv.hi))).collect();

        let mut order: Vec<usize> = (0..a.len()).collect();
        order.sort_unstable_by_key(|&i| (a[i].1, i));

        // B by left endpoint with a running best (largest right, then smallest index).
        let mut b_by_left: Vec<usize> = (0..b.len()).collect();
        b_by_left.sort_unstable_by_key(|&j| (b[j].0, j));
        let b_lefts: Vec<usize> = b_by_left.iter().map(|&j| b[j].0).collect();
        let mut prefix_best: Vec<usize> = Vec::with_capacity(b.len());
        for &j in &b_by_left {
            let keep = match prefix_best.last() {
                Some(&cur) if (b[cur].1, std::cmp::Reverse(cur)) >= (b[j].1, std::cmp::Reverse(j)) => cur,
                _ => j,
            };
            prefix_best.push(keep);
        }

        let mut reach = Vec::with_capacity(a.len());
        let mut best = Vec::with_capacity(a.len());
        for &i in &order {
            let (lo, hi) = a[i];
            let count = b_lefts.partition_point(|&l| l <= hi);
            let cand = count.checked_sub(1).map(|k| prefix_best[k]).filter(|&j| b[j].1 >= lo);
            reach.push(cand.map(|j| b[j].1));
            best.push(cand);
        }

        // A by left endpoint with suffix minima of right-order positions.
        let mut position = vec![0; a.len()];
        for (p, &i) in order.iter().enumerate() {
            position[i] = p;
        }
        let mut a_by_left: Vec<usize> = (0..a.len()).collect();
        a_by_left.sort_unstable_by_key(|&i| a[i].0);
        let a_lefts: Vec<usize> = a_by_left.iter().map(|&i| a[i].0).collect();
        let mut suffix_min = vec![usize::MAX; a.len() + 1];
        for k in (0..a.len()).rev() {
            suffix_min[k] = suffix_min[k + 1].min(position[a_by_left[k]]);
        }
        let next = reach
            .iter()
            .map(|r| {
                let r = (*r)?;
                let k = a_lefts.partition_point(|&l| l <= r);
                Some(suffix_min[k]).filter(|&p| p != usize::MAX)
            })
            .collect();

        RedBlueState { coords, order, reach, best, next }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// `A` vertex at right-order position `p`.
    pub fn a_at(&self, p: usize) -> usize {
        self.order[p]
    }

    /// Largest right endpoint over the neighbours of position `p`.
    pub fn reach(&self, p: usize) -> Option<Coord> {
        self.reach[p].map(|r| self.coords[r])
    }

    pub fn best_neighbor(&self, p: usize) -> Option<usize> {
        self.best[p]
    }

    pub fn next_uncovered(&self, p: usize) -> Option<usize> {
        self.next[p]
    }

    /// First `A` vertex without neighbours, if any.
    pub fn isolated(&self) -> Option<usize> {
        self.best.iter().position(Option::is_none).map(|p| self.order[p])
    }

    /// Jump sequence of positions visited by the greedy sweep.
    pub fn visits(&self) -> Vec<usize> {
        let mut out = Vec::new();
        if self.is_empty() {
            return out;
        }
        let mut p = Some(0);
        while let Some(cur) = p {
            out.push(cur);
            p = self.next[cur];
        }
        out
    }
}

/// Minimum subset of `B` whose neighbourhoods cover `A`; `None` iff some
/// `A` vertex has no neighbour.
pub fn red_blue_min_dominating(rep: &IntervalBigraphRep) -> Option<Certificate> {
    let set = greedy_cover(rep)?;
    Some(verify_red_blue(&rep.bigraph(), &set, "red-blue-greedy", Optimality::Minimum))
}

/// The greedy sweep alone, without re-checking the cover.
fn greedy_cover(rep: &IntervalBigraphRep) -> Option<Vec<usize>> {
    let state = RedBlueState::new(rep);
    if state.isolated().is_some() {
        return None;
    }
    Some(state.visits().into_iter().map(|p| state.best[p].expect("no isolated vertices")).collect())
}

/// Checks that `set` (indices into `B`) covers every `A` vertex.
pub fn verify_red_blue(bigraph: &Bigraph, set: &[usize], algorithm: &str, optimality: Optimality) -> Certificate {
    let mut set = set.to_vec();
    set.sort_unstable();
    set.dedup();
    let in_range = set.iter().all(|&j| j < bigraph.b_len());
    let covers = in_range && {
        let mut covered = vec![false; bigraph.a_len()];
        for &j in &set {
            for &i in bigraph.neighbors_of_b(j) {
                covered[i] = true;
            }
        }
        covered.iter().all(|&c| c)
    };
    let checks = BTreeMap::from([(Property::RedBlueCover, covers)]);
    Certificate::from_checks(set, checks, algorithm, optimality)
}

fn spans_as_bigraph(rep: &NormalizedRep) -> IntervalBigraphRep {
    let iv = |lo: usize, hi: usize| Interval::int(lo as i64, hi as i64);
    let a = (0..rep.n()).map(|u| iv(rep.s(u).lo, rep.s(u).hi)).collect();
    let b = (0..rep.n()).map(|u| iv(rep.t(u).lo, rep.t(u).hi)).collect();
    IntervalBigraphRep { a, b }
}

/// Minimum absorbing set of a reflexive interval digraph: the `V'`-dominating
/// sets of its splitting bigraph are exactly its absorbing sets.
pub fn min_absorbing_reflexive(rep: &NormalizedRep) -> Result<Certificate> {
    let g = rep.digraph();
    min_absorbing_reflexive_on(rep, &g)
}

/// Same as [`min_absorbing_reflexive`] when the realized digraph is at hand.
pub fn min_absorbing_reflexive_on(rep: &NormalizedRep, g: &Digraph) -> Result<Certificate> {
    if rep.n() != g.n() {
        return Err(Error::DimensionMismatch { expected: rep.n(), found: g.n() });
    }
    if let Some(v) = rep.missing_loop() {
        return Err(Error::NotReflexive(v));
    }
    // The result is re-checked against the digraph itself below.
    let cover = greedy_cover(&spans_as_bigraph(rep)).expect("loops leave no isolated vertex");
    Certificate::checked(g, cover, Mode::Absorbing, "min-absorbing-reflexive", Optimality::Minimum)
}

/// Minimum dominating set, via the reversed representation.
pub fn min_dominating_reflexive(rep: &NormalizedRep) -> Result<Certificate> {
    if let Some(v) = rep.missing_loop() {
        return Err(Error::NotReflexive(v));
    }
    let g = rep.digraph();
    let reversed = rep.reversed();
    let cover = greedy_cover(&spans_as_bigraph(&reversed)).expect("loops leave no isolated vertex");
    Certificate::checked(&g, cover, Mode::Dominating, "min-dominating-reflexive", Optimality::Minimum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::interval::normalize;

    fn c(num: i64, den: i64) -> Coord {
        Coord::new(num, den)
    }

    fn three_by_three() -> IntervalBigraphRep {
        IntervalBigraphRep::new(
            vec![Interval::int(0, 1), Interval::int(2, 3), Interval::int(4, 5)],
            vec![Interval::new(c(1, 2), c(5, 2)), Interval::new(c(14, 5), c(9, 2)), Interval::new(c(21, 5), c(6, 1))],
        )
        .unwrap()
    }

    #[test]
    fn symmetric_triangle_splits_into_six_cycle() {
        let (b, model) = splitting_bigraph(&fixtures::symmetric_triangle(), None).unwrap();
        assert!(model.is_none());
        let h = b.to_undirected();
        assert_eq!(h.m(), 6);
        assert!((0..6).all(|v| h.neighbors(v).len() == 2));
        // Connected: walk the cycle from 0.
        let (mut prev, mut cur, mut steps) = (0, h.neighbors(0)[0], 1);
        while cur != 0 {
            let nxt = *h.neighbors(cur).iter().find(|&&w| w != prev).unwrap();
            prev = cur;
            cur = nxt;
            steps += 1;
        }
        assert_eq!(steps, 6);
    }

    #[test]
    fn splitting_includes_loops() {
        let g = Digraph::from_edges(1, [(0, 0)]).unwrap();
        let (b, _) = splitting_bigraph(&g, None).unwrap();
        assert_eq!(b.edges().collect::<Vec<_>>(), vec![(0, 0)]);
        let (b, _) = splitting_bigraph(&fixtures::directed_triangle(), None).unwrap();
        assert_eq!(b.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 0)]);
    }

    #[test]
    fn splitting_model_matches_bigraph() {
        let rep = fixtures::two_vertex_rep();
        let g = crate::interval::realize_digraph(&rep);
        let (b, model) = splitting_bigraph(&g, Some(&rep)).unwrap();
        assert_eq!(model.unwrap().bigraph(), b);
        assert_eq!(b.edges().collect::<Vec<_>>(), vec![(0, 0), (0, 1), (1, 1)]);
        let short = IntervalRep::from_int_tuples(&[(0, 0, 0, 0)]).unwrap();
        assert_eq!(splitting_bigraph(&g, Some(&short)), Err(Error::DimensionMismatch { expected: 2, found: 1 }));
    }

    #[test]
    fn single_cover() {
        let rep = IntervalBigraphRep::new(vec![Interval::int(0, 1)], vec![Interval::new(c(1, 2), c(2, 1))]).unwrap();
        let cert = red_blue_min_dominating(&rep).unwrap();
        assert_eq!(cert.set(), &[0]);
        assert!(cert.passed());
    }

    #[test]
    fn three_by_three_state_and_answer() {
        let rep = three_by_three();
        let state = RedBlueState::new(&rep);
        assert_eq!(state.reach(0), Some(c(5, 2)));
        assert_eq!(state.best_neighbor(0), Some(0));
        assert_eq!(state.next_uncovered(0), Some(2));
        assert_eq!(state.reach(2), Some(c(6, 1)));
        assert_eq!(state.best_neighbor(2), Some(2));
        assert_eq!(state.next_uncovered(2), None);
        let cert = red_blue_min_dominating(&rep).unwrap();
        assert_eq!(cert.set(), &[0, 2]);
        assert!(cert.passed());
    }

    #[test]
    fn isolated_red_vertex() {
        let rep =
            IntervalBigraphRep::new(vec![Interval::int(0, 1), Interval::int(5, 6)], vec![Interval::int(1, 2)]).unwrap();
        assert_eq!(red_blue_min_dominating(&rep), None);
        assert_eq!(RedBlueState::new(&rep).isolated(), Some(1));
    }

    #[test]
    fn empty_red_part_needs_nothing() {
        let rep = IntervalBigraphRep::new(vec![], vec![Interval::int(0, 1)]).unwrap();
        assert!(red_blue_min_dominating(&rep).unwrap().is_empty());
    }

    #[test]
    fn ties_pick_smallest_blue_index() {
        let rep =
            IntervalBigraphRep::new(vec![Interval::int(0, 1)], vec![Interval::int(1, 3), Interval::int(0, 3)]).unwrap();
        assert_eq!(red_blue_min_dominating(&rep).unwrap().set(), &[0]);
    }

    #[test]
    fn two_vertex_absorbing_and_dominating() {
        let rep = normalize(&fixtures::two_vertex_rep());
        assert_eq!(min_absorbing_reflexive(&rep).unwrap().set(), &[1]);
        assert_eq!(min_dominating_reflexive(&rep).unwrap().set(), &[0]);
        let single = normalize(&IntervalRep::from_int_tuples(&[(3, 4, 4, 9)]).unwrap());
        assert_eq!(min_absorbing_reflexive(&single).unwrap().set(), &[0]);
        assert_eq!(min_dominating_reflexive(&single).unwrap().set(), &[0]);
    }

    #[test]
    fn non_reflexive_rejected() {
        let rep = normalize(&IntervalRep::from_int_tuples(&[(0, 0, 0, 0), (0, 1, 2, 3)]).unwrap());
        assert_eq!(min_absorbing_reflexive(&rep), Err(Error::NotReflexive(1)));
        assert_eq!(min_dominating_reflexive(&rep), Err(Error::NotReflexive(1)));
    }
}

//! Brute-force reference solvers. Everything here works on `u64` vertex
//! masks and refuses inputs beyond its budget; the production algorithms
//! are tested against these.

use std::time::{Duration, Instant};

use crate::certificate::{Certificate, Mode, Optimality};
use crate::domination::{verify_red_blue, Bigraph};
use crate::error::{Error, Result};
use crate::graph::{Digraph, UndirectedGraph};
use crate::ordering::{
    check_reflexive_interval_ordering, verify_duf_ordering, OrderingRole, StructureKind, StructureWitness,
    VertexOrdering,
};
use crate::pointpoint::AntiWalkWitness;

/// Largest instance any mask-based oracle accepts.
pub const HARD_CAP: usize = 64;

/// Vertex limits per oracle family, plus an optional wall-clock cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub subset_n: usize,
    pub permutation_n: usize,
    pub k33_n: usize,
    pub time_cap: Option<Duration>,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { subset_n: 16, permutation_n: 8, k33_n: 30, time_cap: None }
    }
}

impl OracleBudget {
    /// The default budget with every vertex limit set to `n`.
    pub fn with_n(n: usize) -> Self {
        OracleBudget { subset_n: n, permutation_n: n, k33_n: n, time_cap: None }
    }

    fn admit(limit: usize, n: usize) -> Result<()> {
        let limit = limit.min(HARD_CAP);
        if n > limit {
            return Err(Error::BudgetExceeded { n, limit });
        }
        Ok(())
    }

    fn clock(&self) -> Clock {
        Clock { deadline: self.time_cap.map(|d| Instant::now() + d), ticks: 0 }
    }
}

struct Clock {
    deadline: Option<Instant>,
    ticks: u32,
}

impl Clock {
    fn tick(&mut self) -> Result<()> {
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks % 4096 == 1 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    return Err(Error::TimeCapExceeded);
                }
            }
        }
        Ok(())
    }
}

fn bit(v: usize) -> u64 {
    1u64 << v
}

fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Out-neighbour and in-neighbour masks, loops excluded.
fn masks(g: &Digraph) -> (Vec<u64>, Vec<u64>) {
    let mut out = vec![0u64; g.n()];
    let mut inn = vec![0u64; g.n()];
    for (u, v) in g.edges() {
        out[u] |= bit(v);
        inn[v] |= bit(u);
    }
    (out, inn)
}

fn mask_weight(mask: u64, weights: Option<&[u64]>) -> u64 {
    match weights {
        None => mask.count_ones() as u64,
        Some(w) => members(mask).iter().map(|&v| w[v]).sum(),
    }
}

/// What [`brute_kernel`] looks for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelQuery {
    /// Any kernel.
    Exists,
    Min,
    Max,
}

struct KernelSearch<'a> {
    n: usize,
    out: Vec<u64>,
    nbr: Vec<u64>,
    weights: Option<&'a [u64]>,
    query: KernelQuery,
    best: Option<(u64, u64)>,
    clock: Clock,
}

impl KernelSearch<'_> {
    /// Forces members for excluded vertices left with one possible absorber;
    /// `None` when some excluded vertex can no longer be absorbed.
    fn propagate(&self, mut inc: u64, mut exc: u64) -> Option<(u64, u64)> {
        loop {
            let mut changed = false;
            for w in members(exc) {
                if self.out[w] & inc != 0 {
                    continue;
                }
                let open = self.out[w] & !inc & !exc;
                if open == 0 {
                    return None;
                }
                if open.count_ones() == 1 {
                    let v = open.trailing_zeros() as usize;
                    inc |= bit(v);
                    exc |= self.nbr[v];
                    changed = true;
                }
            }
            if inc & exc != 0 {
                return None;
            }
            if !changed {
                return Some((inc, exc));
            }
        }
    }

    fn search(&mut self, inc: u64, exc: u64) -> Result<bool> {
        self.clock.tick()?;
        let Some((inc, exc)) = self.propagate(inc, exc) else {
            return Ok(false);
        };
        if self.query == KernelQuery::Min {
            if let Some((bw, _)) = self.best {
                if mask_weight(inc, self.weights) >= bw {
                    return Ok(false);
                }
            }
        }
        let all = if self.n == 64 { u64::MAX } else { bit(self.n) - 1 };
        let open = all & !inc & !exc;
        if open == 0 {
            // Every vertex is decided, and propagation checked absorption.
            let w = mask_weight(inc, self.weights);
            let improves = match (self.query, self.best) {
                (_, None) => true,
                (KernelQuery::Min, Some((bw, _))) => w < bw,
                (KernelQuery::Max, Some((bw, _))) => w > bw,
                (KernelQuery::Exists, Some(_)) => false,
            };
            if improves {
                self.best = Some((w, inc));
            }
            return Ok(self.query == KernelQuery::Exists);
        }
        let v = open.trailing_zeros() as usize;
        if self.search(inc | bit(v), exc | self.nbr[v])? {
            return Ok(true);
        }
        self.search(inc, exc | bit(v))
    }
}

/// Kernels by backtracking over independent sets, with weights (if given)
/// replacing sizes. `None` when the digraph has no kernel.
pub fn brute_kernel(
    g: &Digraph,
    query: KernelQuery,
    weights: Option<&[u64]>,
    budget: &OracleBudget,
) -> Result<Option<Certificate>> {
    OracleBudget::admit(budget.subset_n, g.n())?;
    if let Some(w) = weights {
        if w.len() != g.n() {
            return Err(Error::WeightLength { expected: g.n(), found: w.len() });
        }
    }
    let (out, inn) = masks(g);
    let nbr = (0..g.n()).map(|v| out[v] | inn[v]).collect();
    let mut search = KernelSearch { n: g.n(), out, nbr, weights, query, best: None, clock: budget.clock() };
    search.search(0, 0)?;
    let optimality = match query {
        KernelQuery::Exists => Optimality::Feasible,
        KernelQuery::Min => Optimality::Minimum,
        KernelQuery::Max => Optimality::Maximum,
    };
    match search.best {
        None => Ok(None),
        Some((_, mask)) => Certificate::checked(g, members(mask), Mode::Kernel, "brute-kernel", optimality).map(Some),
    }
}

/// Every kernel of `g`, as sorted vertex lists in lexicographic order of masks.
pub fn all_kernels(g: &Digraph, budget: &OracleBudget) -> Result<Vec<Vec<usize>>> {
    OracleBudget::admit(budget.subset_n.min(20), g.n())?;
    let (out, inn) = masks(g);
    let mut clock = budget.clock();
    let mut found = Vec::new();
    for mask in 0u64..1 << g.n() {
        clock.tick()?;
        let vs = members(mask);
        let independent = vs.iter().all(|&v| (out[v] | inn[v]) & mask == 0);
        let absorbing = (0..g.n()).all(|v| mask >> v & 1 == 1 || out[v] & mask != 0);
        if independent && absorbing {
            found.push(vs);
        }
    }
    Ok(found)
}

/// Minimum absorbing set by iterative deepening: the lowest vertex not yet
/// absorbed must be joined by itself or one of its out-neighbours.
pub fn brute_min_absorbing(g: &Digraph, budget: &OracleBudget) -> Result<Certificate> {
    OracleBudget::admit(budget.subset_n, g.n())?;
    let (out, _) = masks(g);
    let n = g.n();
    let all = if n == 64 { u64::MAX } else { bit(n) - 1 };
    let mut clock = budget.clock();

    fn extend(out: &[u64], all: u64, chosen: u64, left: usize, clock: &mut Clock) -> Result<Option<u64>> {
        clock.tick()?;
        let absorbed = chosen | (0..out.len()).filter(|&v| out[v] & chosen != 0).fold(0, |m, v| m | bit(v));
        let missing = all & !absorbed;
        if missing == 0 {
            return Ok(Some(chosen));
        }
        if left == 0 {
            return Ok(None);
        }
        let v = missing.trailing_zeros() as usize;
        for cand in members(bit(v) | out[v]) {
            if let Some(found) = extend(out, all, chosen | bit(cand), left - 1, clock)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }

    for size in 0..=n {
        if let Some(mask) = extend(&out, all, 0, size, &mut clock)? {
            return Certificate::checked(g, members(mask), Mode::Absorbing, "brute-min-absorbing", Optimality::Minimum);
        }
    }
    unreachable!("the whole vertex set absorbs")
}

/// Minimum dominating set: minimum absorbing set of the reversal.
pub fn brute_min_dominating(g: &Digraph, budget: &OracleBudget) -> Result<Certificate> {
    let set = brute_min_absorbing(&g.reverse(), budget)?.into_set();
    Certificate::checked(g, set, Mode::Dominating, "brute-min-dominating", Optimality::Minimum)
}

/// Maximum-weight independent set by branch and bound. Loops are ignored.
pub fn brute_max_independent(g: &Digraph, weights: Option<&[u64]>, budget: &OracleBudget) -> Result<Certificate> {
    OracleBudget::admit(budget.subset_n, g.n())?;
    if let Some(w) = weights {
        if w.len() != g.n() {
            return Err(Error::WeightLength { expected: g.n(), found: w.len() });
        }
    }
    let (out, inn) = masks(g);
    let nbr: Vec<u64> = (0..g.n()).map(|v| out[v] | inn[v]).collect();
    let n = g.n();
    let all = if n == 64 { u64::MAX } else { bit(n) - 1 };
    let mut clock = budget.clock();
    let mut best = (0u64, 0u64);

    fn go(
        nbr: &[u64],
        weights: Option<&[u64]>,
        chosen: u64,
        open: u64,
        best: &mut (u64, u64),
        clock: &mut Clock,
    ) -> Result<()> {
        clock.tick()?;
        let w = mask_weight(chosen, weights);
        if open == 0 {
            if w > best.0 {
                *best = (w, chosen);
            }
            return Ok(());
        }
        if w + mask_weight(open, weights) <= best.0 {
            return Ok(());
        }
        let v = open.trailing_zeros() as usize;
        go(nbr, weights, chosen | bit(v), open & !bit(v) & !nbr[v], best, clock)?;
        go(nbr, weights, chosen, open & !bit(v), best, clock)
    }

    go(&nbr, weights, 0, all, &mut best, &mut clock)?;
    Certificate::checked(g, members(best.1), Mode::Independent, "brute-max-independent", Optimality::Maximum)
}

/// Minimum subset of part `B` covering part `A`, by enumerating subsets in
/// increasing size. `None` when some `A` vertex has no neighbour.
pub fn brute_red_blue(bigraph: &Bigraph, budget: &OracleBudget) -> Result<Option<Certificate>> {
    OracleBudget::admit(budget.subset_n, bigraph.b_len())?;
    OracleBudget::admit(HARD_CAP, bigraph.a_len())?;
    let a = bigraph.a_len();
    let b = bigraph.b_len();
    let target = if a == 64 { u64::MAX } else { bit(a) - 1 };
    let cover: Vec<u64> = (0..b).map(|j| bigraph.neighbors_of_b(j).iter().fold(0, |m, &i| m | bit(i))).collect();
    let mut clock = budget.clock();
    for size in 0..=b {
        // Gosper's hack walks the masks with exactly `size` bits.
        let mut mask: u64 = if size == 0 { 0 } else { (1u64 << size) - 1 };
        loop {
            clock.tick()?;
            let covered = members(mask).iter().fold(0, |m, &j| m | cover[j]);
            if covered == target {
                return Ok(Some(verify_red_blue(bigraph, &members(mask), "brute-red-blue", Optimality::Minimum)));
            }
            if size == 0 {
                break;
            }
            let low = mask & mask.wrapping_neg();
            let ripple = mask + low;
            mask = (((ripple ^ mask) >> 2) / low) | ripple;
            if size == 64 || mask >> b != 0 {
                break;
            }
        }
    }
    Ok(None)
}

/// Two vertex triples inducing `K3,3` in an undirected graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct K33Witness {
    pub left: [usize; 3],
    pub right: [usize; 3],
}

impl K33Witness {
    pub fn holds(&self, h: &UndirectedGraph) -> bool {
        let inside = |t: &[usize; 3]| !h.has_edge(t[0], t[1]) && !h.has_edge(t[0], t[2]) && !h.has_edge(t[1], t[2]);
        let across = self.left.iter().all(|&x| self.right.iter().all(|&y| h.has_edge(x, y)));
        let mut all: Vec<usize> = self.left.iter().chain(self.right.iter()).copied().collect();
        all.sort_unstable();
        all.dedup();
        all.len() == 6 && inside(&self.left) && inside(&self.right) && across
    }
}

/// Looks for an induced `K3,3`: every independent triple is paired with an
/// independent triple among its common neighbours.
pub fn find_induced_k33(h: &UndirectedGraph, budget: &OracleBudget) -> Result<Option<K33Witness>> {
    OracleBudget::admit(budget.k33_n, h.n())?;
    let n = h.n();
    let adj: Vec<u64> = (0..n).map(|v| h.neighbors(v).iter().fold(0, |m, &w| m | bit(w))).collect();
    let mut clock = budget.clock();
    let independent_triples = |pool: u64| {
        let vs = members(pool);
        let mut out = Vec::new();
        for (x, &i) in vs.iter().enumerate() {
            for (y, &j) in vs.iter().enumerate().skip(x + 1) {
                if adj[i] & bit(j) != 0 {
                    continue;
                }
                for &k in &vs[y + 1..] {
                    if adj[i] & bit(k) == 0 && adj[j] & bit(k) == 0 {
                        out.push([i, j, k]);
                    }
                }
            }
        }
        out
    };
    let all = if n == 64 { u64::MAX } else { bit(n) - 1 };
    for left in independent_triples(all) {
        clock.tick()?;
        let common = adj[left[0]] & adj[left[1]] & adj[left[2]];
        if let Some(right) = independent_triples(common).into_iter().next() {
            return Ok(Some(K33Witness { left, right }));
        }
    }
    Ok(None)
}

/// Which ordering [`brute_ordering_search`] tries to find.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderingSearch {
    Duf,
    ReflexiveInterval,
}

/// Tries every permutation in lexicographic order; returns the first that
/// passes the requested check.
pub fn brute_ordering_search(
    g: &Digraph,
    kind: OrderingSearch,
    budget: &OracleBudget,
) -> Result<Option<VertexOrdering>> {
    OracleBudget::admit(budget.permutation_n, g.n())?;
    let role = match kind {
        OrderingSearch::Duf => OrderingRole::Duf,
        OrderingSearch::ReflexiveInterval => OrderingRole::ReflexiveInterval,
    };
    let mut clock = budget.clock();
    let mut perm: Vec<usize> = (0..g.n()).collect();
    loop {
        clock.tick()?;
        let ord = VertexOrdering::new(perm.clone(), role)?;
        let violation = match kind {
            OrderingSearch::Duf => verify_duf_ordering(g, &ord)?,
            OrderingSearch::ReflexiveInterval => check_reflexive_interval_ordering(g, &ord)?,
        };
        if violation.is_none() {
            return Ok(Some(ord));
        }
        if !next_permutation(&mut perm) {
            return Ok(None);
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("p[i] qualifies");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Every quadruple pattern `(i)`..`(vi)` under `ord`, straight from the
/// definitions, in lexicographic order of positions.
pub fn brute_forbidden_structures(g: &Digraph, ord: &VertexOrdering) -> Vec<StructureWitness> {
    let n = g.n();
    let p = ord.perm();
    let e = |x: usize, y: usize| g.has_edge(p[x], p[y]);
    let mut found = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b..n {
                for d in c + 1..n {
                    let distinct = b < c;
                    let hits = [
                        (StructureKind::I, e(a, d) && !e(a, b) && !e(c, d)),
                        (StructureKind::II, e(a, d) && e(b, c) && !e(a, c) && !e(b, d)),
                        (StructureKind::III, distinct && e(a, c) && e(b, d) && !e(a, d) && !e(b, c)),
                        (StructureKind::IV, e(d, a) && !e(b, a) && !e(d, c)),
                        (StructureKind::V, e(d, a) && e(c, b) && !e(c, a) && !e(d, b)),
                        (StructureKind::VI, distinct && e(c, a) && e(d, b) && !e(d, a) && !e(c, b)),
                    ];
                    for (kind, hit) in hits {
                        if hit {
                            found.push(StructureWitness { kind, vertices: vec![p[a], p[b], p[c], p[d]] });
                        }
                    }
                }
            }
        }
    }
    found
}

/// Lexicographically least anti-directed walk of length 3 by scanning all
/// quadruples.
pub fn brute_anti_directed_walk(g: &Digraph) -> Option<AntiWalkWitness> {
    let n = g.n();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if g.has_edge(a, b) && g.has_edge(c, b) && g.has_edge(c, d) && !g.has_edge(a, d) {
                        return Some(AntiWalkWitness { vertices: [a, b, c, d] });
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::IntervalBigraphRep;
    use crate::fixtures;
    use crate::interval::{Coord, Interval};

    fn budget() -> OracleBudget {
        OracleBudget::default()
    }

    #[test]
    fn kernel_oracle_examples() {
        let b = budget();
        assert_eq!(brute_kernel(&fixtures::no_kernel_duf(), KernelQuery::Exists, None, &b).unwrap(), None);
        let min = brute_kernel(&fixtures::path3(), KernelQuery::Min, None, &b).unwrap().unwrap();
        assert_eq!(min.set(), &[0, 2]);
        let single = brute_kernel(&Digraph::empty(1), KernelQuery::Max, None, &b).unwrap().unwrap();
        assert_eq!(single.set(), &[0]);
    }

    #[test]
    fn kernel_oracle_agrees_with_plain_enumeration() {
        let b = budget();
        let g = Digraph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (2, 0)]).unwrap();
        let kernels = all_kernels(&g, &b).unwrap();
        let min = kernels.iter().map(Vec::len).min();
        let max = kernels.iter().map(Vec::len).max();
        assert_eq!(brute_kernel(&g, KernelQuery::Min, None, &b).unwrap().map(|c| c.len()), min);
        assert_eq!(brute_kernel(&g, KernelQuery::Max, None, &b).unwrap().map(|c| c.len()), max);
    }

    #[test]
    fn absorbing_oracle_examples() {
        let b = budget();
        let star = Digraph::from_edges(4, [(1, 0), (2, 0), (3, 0)]).unwrap();
        assert_eq!(brute_min_absorbing(&star, &b).unwrap().set(), &[0]);
        let arc = Digraph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(brute_min_absorbing(&arc, &b).unwrap().set(), &[1]);
        assert_eq!(brute_min_dominating(&arc, &b).unwrap().set(), &[0]);
        assert_eq!(brute_min_absorbing(&Digraph::empty(3), &b).unwrap().set(), &[0, 1, 2]);
    }

    #[test]
    fn independent_oracle_examples() {
        let b = budget();
        let complete = Digraph::from_edges(4, (0..4).flat_map(|u| (0..4).map(move |v| (u, v)))).unwrap();
        assert_eq!(brute_max_independent(&complete, None, &b).unwrap().len(), 1);
        let c4 = Digraph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(brute_max_independent(&c4, None, &b).unwrap().len(), 2);
        assert_eq!(brute_max_independent(&Digraph::empty(5), None, &b).unwrap().len(), 5);
    }

    #[test]
    fn red_blue_oracle_examples() {
        let b = budget();
        let c = Coord::new;
        let rep = IntervalBigraphRep::new(
            vec![Interval::int(0, 1), Interval::int(2, 3), Interval::int(4, 5)],
            vec![Interval::new(c(1, 2), c(5, 2)), Interval::new(c(14, 5), c(9, 2)), Interval::new(c(21, 5), c(6, 1))],
        )
        .unwrap();
        assert_eq!(brute_red_blue(&rep.bigraph(), &b).unwrap().unwrap().len(), 2);
        let one = Bigraph::from_edges(1, 2, [(0, 1)]).unwrap();
        assert_eq!(brute_red_blue(&one, &b).unwrap().unwrap().set(), &[1]);
        let isolated = Bigraph::from_edges(2, 1, [(0, 0)]).unwrap();
        assert_eq!(brute_red_blue(&isolated, &b).unwrap(), None);
    }

    #[test]
    fn k33_search() {
        let b = budget();
        let k33 = UndirectedGraph::from_edges(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v)))).unwrap();
        let w = find_induced_k33(&k33, &b).unwrap().unwrap();
        assert!(w.holds(&k33));
        let chord =
            UndirectedGraph::from_edges(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).chain([(0, 1)])).unwrap();
        assert_eq!(find_induced_k33(&chord, &b).unwrap(), None);
    }

    #[test]
    fn ordering_search_separates_classes() {
        let b = budget();
        assert_eq!(brute_ordering_search(&fixtures::directed_triangle(), OrderingSearch::Duf, &b).unwrap(), None);
        assert!(brute_ordering_search(&fixtures::symmetric_triangle(), OrderingSearch::Duf, &b).unwrap().is_some());
        let k33 = fixtures::oriented_k33_reflexive();
        assert!(brute_ordering_search(&k33, OrderingSearch::Duf, &b).unwrap().is_some());
        assert_eq!(brute_ordering_search(&k33, OrderingSearch::ReflexiveInterval, &b).unwrap(), None);
    }

    #[test]
    fn budgets_are_enforced() {
        let tight = OracleBudget::with_n(3);
        let g = Digraph::empty(4);
        assert_eq!(
            brute_kernel(&g, KernelQuery::Min, None, &tight).unwrap_err(),
            Error::BudgetExceeded { n: 4, limit: 3 }
        );
        assert!(matches!(brute_ordering_search(&g, OrderingSearch::Duf, &tight), Err(Error::BudgetExceeded { .. })));
        let huge = OracleBudget::with_n(1000);
        assert_eq!(
            brute_min_absorbing(&Digraph::empty(65), &huge).unwrap_err(),
            Error::BudgetExceeded { n: 65, limit: HARD_CAP }
        );
    }

    #[test]
    fn time_cap_trips() {
        let budget = OracleBudget { time_cap: Some(Duration::ZERO), ..OracleBudget::with_n(40) };
        assert_eq!(brute_min_absorbing(&Digraph::empty(40), &budget).unwrap_err(), Error::TimeCapExceeded);
    }

    #[test]
    fn anti_walk_scan() {
        let w = brute_anti_directed_walk(&fixtures::anti_walk_example()).unwrap();
        assert_eq!(w.vertices, [0, 1, 2, 3]);
        assert_eq!(brute_anti_directed_walk(&fixtures::directed_triangle()), None);
    }
}

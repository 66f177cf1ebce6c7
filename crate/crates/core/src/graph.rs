//! Dense-integer directed and undirected graphs.
//!
//! Vertices are `0..n`. Self-loops of a [`Digraph`] live in a separate flag
//! vector and are never part of the adjacency lists or of `m`.

use rustc_hash::FxHashSet;

use crate::error::{Error, Result};

#[inline]
fn key(u: usize, v: usize) -> u64 {
    ((u as u64) << 32) | v as u64
}

#[derive(Clone, Debug)]
pub struct Digraph {
    n: usize,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
    loops: Vec<bool>,
    index: FxHashSet<u64>,
}

impl Digraph {
    /// Edgeless, loopless digraph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Digraph {
            n,
            out_adj: vec![Vec::new(); n],
            in_adj: vec![Vec::new(); n],
            loops: vec![false; n],
            index: FxHashSet::default(),
        }
    }

    /// Builds a digraph from arcs; `(u, u)` sets the loop flag on `u` and
    /// repeated arcs are collapsed. Adjacency lists come out sorted.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Digraph::empty(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::InvalidVertex { vertex: w, n });
                }
            }
            if u == v {
                g.loops[u] = true;
            } else if g.index.insert(key(u, v)) {
                g.out_adj[u].push(v);
                g.in_adj[v].push(u);
            }
        }
        for list in g.out_adj.iter_mut().chain(g.in_adj.iter_mut()) {
            list.sort_unstable();
        }
        Ok(g)
    }

    /// Like [`Digraph::from_edges`] with a loop added on every vertex.
    pub fn reflexive_from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Digraph::from_edges(n, edges.into_iter().chain((0..n).map(|v| (v, v))))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of arcs, not counting self-loops.
    pub fn m(&self) -> usize {
        self.index.len()
    }

    pub fn out_neighbors(&self, u: usize) -> &[usize] {
        &self.out_adj[u]
    }

    pub fn in_neighbors(&self, u: usize) -> &[usize] {
        &self.in_adj[u]
    }

    pub fn has_loop(&self, u: usize) -> bool {
        self.loops[u]
    }

    pub fn loops(&self) -> &[bool] {
        &self.loops
    }

    pub fn loop_count(&self) -> usize {
        self.loops.iter().filter(|&&l| l).count()
    }

    /// Arc membership; `has_edge(u, u)` reports the loop flag.
    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v {
            self.loops[u]
        } else {
            self.index.contains(&key(u, v))
        }
    }

    /// `u` and `v` are distinct and joined by an arc in either direction.
    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u != v && (self.has_edge(u, v) || self.has_edge(v, u))
    }

    /// First vertex without a loop, if any.
    pub fn missing_loop(&self) -> Option<usize> {
        self.loops.iter().position(|&l| !l)
    }

    pub fn is_reflexive(&self) -> bool {
        self.missing_loop().is_none()
    }

    /// Non-loop arcs in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out_adj.iter().enumerate().flat_map(|(u, outs)| outs.iter().map(move |&v| (u, v)))
    }

    /// Every arc including loops, in lexicographic order.
    pub fn edges_with_loops(&self) -> Vec<(usize, usize)> {
        let mut all: Vec<_> = self.edges().collect();
        all.extend((0..self.n).filter(|&v| self.loops[v]).map(|v| (v, v)));
        all.sort_unstable();
        all
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, n: self.n })
        }
    }

    /// Same vertex set, arcs reversed, loops kept.
    pub fn reverse(&self) -> Digraph {
        Digraph {
            n: self.n,
            out_adj: self.in_adj.clone(),
            in_adj: self.out_adj.clone(),
            loops: self.loops.clone(),
            index: self.index.iter().map(|&k| k.rotate_right(32)).collect(),
        }
    }

    /// Subgraph induced by `set`. Vertex `set[i]` becomes vertex `i` in the
    /// result; the returned map lists, for each new vertex, its old id.
    pub fn induced_subgraph(&self, set: &[usize]) -> Result<(Digraph, Vec<usize>)> {
        let mut relabel = vec![usize::MAX; self.n];
        for (i, &v) in set.iter().enumerate() {
            self.check_vertex(v)?;
            if relabel[v] != usize::MAX {
                return Err(Error::InvalidCertificate(format!("vertex {v} repeated in subset")));
            }
            relabel[v] = i;
        }
        let mut edges = Vec::new();
        for &u in set {
            if self.loops[u] {
                edges.push((relabel[u], relabel[u]));
            }
            for &v in &self.out_adj[u] {
                if relabel[v] != usize::MAX {
                    edges.push((relabel[u], relabel[v]));
                }
            }
        }
        let sub = Digraph::from_edges(set.len(), edges)?;
        Ok((sub, set.to_vec()))
    }

    /// Underlying simple graph: loops dropped, arcs symmetrised.
    pub fn underlying_undirected(&self) -> UndirectedGraph {
        UndirectedGraph::from_edges(self.n, self.edges()).expect("vertices already validated")
    }

    /// Bitmask adjacency for small graphs (`n <= 64`): bit `v` of `out[u]`
    /// is set iff `(u, v)` is an arc, loops included.
    pub fn out_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "bitmask view needs n <= 64");
        (0..self.n)
            .map(|u| {
                let mut mask = if self.loops[u] { 1u64 << u } else { 0 };
                for &v in &self.out_adj[u] {
                    mask |= 1 << v;
                }
                mask
            })
            .collect()
    }
}

impl PartialEq for Digraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.loops == other.loops && self.out_adj == other.out_adj
    }
}

impl Eq for Digraph {}

/// Simple undirected graph on `0..n` without loops.
#[derive(Clone, Debug)]
pub struct UndirectedGraph {
    n: usize,
    adj: Vec<Vec<usize>>,
    index: FxHashSet<u64>,
}

impl UndirectedGraph {
    /// Loops in the input are ignored; repeated edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut index = FxHashSet::default();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::InvalidVertex { vertex: w, n });
                }
            }
            if u != v && index.insert(key(u.min(v), u.max(v))) {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(UndirectedGraph { n, adj, index })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.index.len()
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.index.contains(&key(u.min(v), u.max(v)))
    }

    /// Edges `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Each edge becomes a pair of opposite arcs; no loops.
    pub fn symmetric_digraph(&self) -> Digraph {
        Digraph::from_edges(self.n, self.edges().flat_map(|(u, v)| [(u, v), (v, u)]))
            .expect("vertices already validated")
    }

    /// Bitmask adjacency for `n <= 64`.
    pub fn masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "bitmask view needs n <= 64");
        self.adj.iter().map(|ns| ns.iter().fold(0u64, |m, &v| m | (1 << v))).collect()
    }
}

impl PartialEq for UndirectedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for UndirectedGraph {}

pub fn reverse(g: &Digraph) -> Digraph {
    g.reverse()
}

pub fn induced_subgraph(g: &Digraph, set: &[usize]) -> Result<(Digraph, Vec<usize>)> {
    g.induced_subgraph(set)
}

pub fn underlying_undirected(g: &Digraph) -> UndirectedGraph {
    g.underlying_undirected()
}

pub fn symmetric_digraph(h: &UndirectedGraph) -> Digraph {
    h.symmetric_digraph()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use proptest::prelude::*;

    fn arcs(g: &Digraph) -> Vec<(usize, usize)> {
        g.edges_with_loops()
    }

    #[test]
    fn reverse_single_arc() {
        let g = Digraph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(arcs(&g.reverse()), vec![(1, 0)]);
    }

    #[test]
    fn reverse_empty_is_fixed_point() {
        let g = Digraph::empty(3);
        assert_eq!(g.reverse(), g);
    }

    #[test]
    fn reverse_twice_on_no_kernel_fixture() {
        let g = fixtures::no_kernel_duf();
        assert_eq!(g.reverse().reverse(), g);
        assert!(g.reverse().has_edge(1, 0) && g.reverse().has_edge(0, 2));
    }

    #[test]
    fn induced_path_endpoints_edgeless() {
        let g = Digraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let (sub, map) = g.induced_subgraph(&[0, 2]).unwrap();
        assert_eq!(sub.n(), 2);
        assert_eq!(sub.m(), 0);
        assert_eq!(map, vec![0, 2]);
    }

    #[test]
    fn induced_pair_of_no_kernel_fixture_is_symmetric() {
        let g = fixtures::no_kernel_duf();
        let (sub, _) = g.induced_subgraph(&[0, 1]).unwrap();
        assert_eq!(arcs(&sub), vec![(0, 1), (1, 0)]);
    }

    #[test]
    fn induced_rejects_out_of_range() {
        let g = Digraph::empty(2);
        assert_eq!(g.induced_subgraph(&[0, 5]).unwrap_err(), Error::InvalidVertex { vertex: 5, n: 2 });
    }

    #[test]
    fn underlying_of_symmetric_pair() {
        let g = Digraph::from_edges(2, [(0, 1), (1, 0)]).unwrap();
        let h = g.underlying_undirected();
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn underlying_of_directed_triangle() {
        let h = fixtures::directed_triangle().underlying_undirected();
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn underlying_drops_loops() {
        let g = Digraph::from_edges(2, [(0, 0), (1, 1)]).unwrap();
        assert_eq!(g.underlying_undirected().m(), 0);
    }

    #[test]
    fn symmetric_digraph_counts() {
        let k3 = UndirectedGraph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.symmetric_digraph().m(), 6);
        let c4 = UndirectedGraph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let d = c4.symmetric_digraph();
        assert_eq!(d.m(), 8);
        assert_eq!(d.loop_count(), 0);
    }

    #[test]
    fn m_excludes_loops() {
        let g = Digraph::from_edges(2, [(0, 0), (0, 1), (0, 1)]).unwrap();
        assert_eq!(g.m(), 1);
        assert!(g.has_edge(0, 0));
        assert!(!g.has_edge(1, 1));
    }

    fn arb_digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
        (0..=max_n).prop_flat_map(|n| {
            proptest::collection::vec((0..n.max(1), 0..n.max(1)), 0..=n * n).prop_map(move |es| {
                let es = es.into_iter().filter(|&(u, v)| u < n && v < n);
                Digraph::from_edges(n, es).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn reverse_is_involution(g in arb_digraph(8)) {
            prop_assert_eq!(g.reverse().reverse(), g);
        }

        #[test]
        fn adjacency_invariants(g in arb_digraph(8)) {
            let out_total: usize = (0..g.n()).map(|u| g.out_neighbors(u).len()).sum();
            let in_total: usize = (0..g.n()).map(|u| g.in_neighbors(u).len()).sum();
            prop_assert_eq!(out_total, g.m());
            prop_assert_eq!(in_total, g.m());
            for (u, v) in g.edges() {
                prop_assert!(u != v);
                prop_assert!(g.in_neighbors(v).contains(&u));
            }
        }

        #[test]
        fn underlying_left_inverse(g in arb_digraph(8)) {
            let h = g.underlying_undirected();
            prop_assert_eq!(h.symmetric_digraph().underlying_undirected(), h);
        }

        #[test]
        fn induced_on_everything_is_identity(g in arb_digraph(8)) {
            let all: Vec<usize> = (0..g.n()).collect();
            let (sub, map) = g.induced_subgraph(&all).unwrap();
            prop_assert_eq!(map, all);
            prop_assert_eq!(sub, g);
        }
    }
}

//! Point-point digraphs (every interval a single point), the k-subdivision
//! of a digraph, and the maps that carry kernels and absorbing sets between
//! a digraph and its subdivision.

use std::fmt;

use serde::Serialize;

use crate::certificate::{normalize_set, verify_set, Mode};
use crate::error::{Error, Result};
use crate::graph::Digraph;

/// Point labels for each vertex: `(u, v)` is an arc iff `source[u] == target[v]`.
/// Labels are component ids of the splitting bigraph, numbered by the
/// smallest node they contain (`u` for a source copy, `n + v` for a target).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointRep {
    pub source: Vec<usize>,
    pub target: Vec<usize>,
}

impl PointRep {
    pub fn n(&self) -> usize {
        self.source.len()
    }

    /// The digraph these points realize, loops included.
    pub fn digraph(&self) -> Digraph {
        let n = self.n();
        let mut by_point: Vec<Vec<usize>> = vec![Vec::new(); 2 * n];
        for (v, &p) in self.target.iter().enumerate() {
            by_point[p].push(v);
        }
        let edges = (0..n).flat_map(|u| by_point[self.source[u]].iter().map(move |&v| (u, v)));
        Digraph::from_edges(n, edges.collect::<Vec<_>>()).expect("vertices in range")
    }
}

/// Arcs `(a, b)`, `(c, b)`, `(c, d)` present and `(a, d)` absent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AntiWalkWitness {
    pub vertices: [usize; 4],
}

impl AntiWalkWitness {
    pub fn holds(&self, g: &Digraph) -> bool {
        let [a, b, c, d] = self.vertices;
        g.has_edge(a, b) && g.has_edge(c, b) && g.has_edge(c, d) && !g.has_edge(a, d)
    }
}

impl fmt::Display for AntiWalkWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.vertices;
        write!(f, "anti-directed walk ({a}, {b}, {c}, {d})")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointPointResult {
    Accepted(PointRep),
    Rejected(AntiWalkWitness),
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Splits the splitting bigraph into components; the digraph is
/// point-point iff every component is complete bipartite.
pub fn recognize_point_point(g: &Digraph) -> PointPointResult {
    let n = g.n();
    let mut parent: Vec<usize> = (0..2 * n).collect();
    for (u, v) in g.edges_with_loops() {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, n + v));
        if ru != rv {
            // Keep the smallest node as root so roots double as component ids.
            let (lo, hi) = if ru < rv { (ru, rv) } else { (rv, ru) };
            parent[hi] = lo;
        }
    }
    let id: Vec<usize> = (0..2 * n).map(|x| find(&mut parent, x)).collect();
    let mut sources = vec![0usize; 2 * n];
    let mut targets = vec![0usize; 2 * n];
    let mut arcs = vec![0usize; 2 * n];
    for u in 0..n {
        sources[id[u]] += 1;
        targets[id[n + u]] += 1;
    }
    for (u, _) in g.edges_with_loops() {
        arcs[id[u]] += 1;
    }
    let failing = (0..2 * n).find(|&c| arcs[c] > 0 && arcs[c] != sources[c] * targets[c]);
    match failing {
        None => PointPointResult::Accepted(PointRep { source: id[..n].to_vec(), target: id[n..].to_vec() }),
        Some(c) => {
            let w = witness_in_component(g, (0..n).filter(|&a| id[a] == c));
            PointPointResult::Rejected(w.expect("a connected bipartite graph that is not complete has one"))
        }
    }
}

/// Lexicographically least walk starting from the given source vertices.
fn witness_in_component(g: &Digraph, starts: impl Iterator<Item = usize>) -> Option<AntiWalkWitness> {
    let with_loop = |v: usize, list: &[usize]| -> Vec<usize> {
        let mut all = list.to_vec();
        if g.has_loop(v) {
            let at = all.partition_point(|&x| x < v);
            all.insert(at, v);
        }
        all
    };
    for a in starts {
        for b in with_loop(a, g.out_neighbors(a)) {
            for c in with_loop(b, g.in_neighbors(b)) {
                if c == a {
                    continue;
                }
                for d in with_loop(c, g.out_neighbors(c)) {
                    if !g.has_edge(a, d) {
                        return Some(AntiWalkWitness { vertices: [a, b, c, d] });
                    }
                }
            }
        }
    }
    None
}

/// An anti-directed walk of length 3, if the digraph has one.
pub fn find_anti_directed_walk(g: &Digraph) -> Option<AntiWalkWitness> {
    match recognize_point_point(g) {
        PointPointResult::Accepted(_) => None,
        PointPointResult::Rejected(w) => Some(w),
    }
}

/// A digraph with every arc replaced by a directed path through `k` new
/// vertices. Originals keep their ids; the path of the `e`-th arc (in
/// sorted order) uses ids `n + e*k .. n + (e+1)*k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivisionMap {
    origin: Digraph,
    host: Digraph,
    k: usize,
    arcs: Vec<(usize, usize)>,
}

impl SubdivisionMap {
    pub fn origin(&self) -> &Digraph {
        &self.origin
    }

    pub fn host(&self) -> &Digraph {
        &self.host
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Original arcs in the order their paths were numbered.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// Host ids of the path vertices of arc number `e`, in path order.
    pub fn path(&self, e: usize) -> std::ops::Range<usize> {
        let start = self.origin.n() + e * self.k;
        start..start + self.k
    }

    /// Host ids of the path vertices at 1-based positions `first, first+2, ...`.
    fn every_other(&self, e: usize, first: usize) -> impl Iterator<Item = usize> {
        self.path(e).skip(first - 1).step_by(2)
    }

    fn half(&self) -> Result<usize> {
        if self.k % 2 == 1 {
            return Err(Error::OddSubdivision(self.k));
        }
        Ok(self.k / 2)
    }
}

/// Builds the k-subdivision of an irreflexive digraph.
pub fn k_subdivision(g: &Digraph, k: usize) -> Result<SubdivisionMap> {
    if k == 0 {
        return Err(Error::InvalidParameter("subdivision needs k >= 1".into()));
    }
    if let Some(v) = (0..g.n()).find(|&v| g.has_loop(v)) {
        return Err(Error::NotIrreflexive(v));
    }
    let arcs: Vec<(usize, usize)> = g.edges().collect();
    let n = g.n();
    let mut edges = Vec::with_capacity((k + 1) * arcs.len());
    for (e, &(i, j)) in arcs.iter().enumerate() {
        let start = n + e * k;
        edges.push((i, start));
        for t in 0..k - 1 {
            edges.push((start + t, start + t + 1));
        }
        edges.push((start + k - 1, j));
    }
    let host = Digraph::from_edges(n + k * arcs.len(), edges)?;
    Ok(SubdivisionMap { origin: g.clone(), host, k, arcs })
}

fn check_mode(mode: Mode) -> Result<()> {
    match mode {
        Mode::Kernel | Mode::Absorbing => Ok(()),
        other => {
            Err(Error::InvalidCertificate(format!("lift and project support kernel and absorbing sets, not {other:?}")))
        }
    }
}

/// Carries a kernel (or absorbing set) of the origin to the host: each path
/// takes its even positions when its head is outside `s`, its odd positions
/// when the head is inside. The result has `|s| + (k/2)m` vertices.
pub fn lift_set(map: &SubdivisionMap, s: &[usize], mode: Mode) -> Result<Vec<usize>> {
    check_mode(mode)?;
    map.half()?;
    if !verify_set(&map.origin, s, mode)?.passed() {
        return Err(Error::InvalidCertificate(format!("input is not {} in the origin", mode_name(mode))));
    }
    let set = normalize_set(map.origin.n(), s)?;
    let mut member = vec![false; map.origin.n()];
    for &v in &set {
        member[v] = true;
    }
    let mut out = set;
    for (e, &(_, j)) in map.arcs.iter().enumerate() {
        out.extend(map.every_other(e, if member[j] { 1 } else { 2 }));
    }
    out.sort_unstable();
    Ok(out)
}

/// Carries a kernel (or absorbing set) of the host back to the origin. For
/// absorbing sets, paths holding more than `k/2` selected vertices are first
/// reset to their odd positions plus the head of the arc.
pub fn project_set(map: &SubdivisionMap, s: &[usize], mode: Mode) -> Result<Vec<usize>> {
    check_mode(mode)?;
    let half = map.half()?;
    if !verify_set(&map.host, s, mode)?.passed() {
        return Err(Error::InvalidCertificate(format!("input is not {} in the host", mode_name(mode))));
    }
    let n = map.origin.n();
    let mut member = vec![false; map.host.n()];
    for &v in s {
        member[v] = true;
    }
    if mode == Mode::Absorbing {
        for (e, &(_, j)) in map.arcs.iter().enumerate() {
            if map.path(e).filter(|&x| member[x]).count() > half {
                member[j] = true;
            }
        }
    }
    Ok((0..n).filter(|&v| member[v]).collect())
}

fn mode_name(mode: Mode) -> &'static str {
    match mode {
        Mode::Kernel => "a kernel",
        _ => "an absorbing set",
    }
}

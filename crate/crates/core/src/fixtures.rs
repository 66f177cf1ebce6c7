//! Small named digraphs that separate the classes handled by this crate.
//! Letters a, b, c, d map to vertices 0, 1, 2, 3.

use crate::graph::Digraph;
use crate::interval::{Coord, Interval, IntervalRep};

fn build(n: usize, edges: &[(usize, usize)]) -> Digraph {
    Digraph::from_edges(n, edges.iter().copied()).expect("fixture edges are in range")
}

fn reflexive(n: usize, edges: &[(usize, usize)]) -> Digraph {
    Digraph::reflexive_from_edges(n, edges.iter().copied()).expect("fixture edges are in range")
}

/// Semi-complete digraph on a, b, c, d without a kernel; the order
/// (a, b, c, d) is a DUF-ordering of it.
pub fn no_kernel_duf() -> Digraph {
    build(4, &[(0, 1), (1, 0), (2, 0), (0, 3), (1, 2), (3, 1), (2, 3), (3, 2)])
}

/// DUF-ordering of [`no_kernel_duf`].
pub fn no_kernel_duf_order() -> Vec<usize> {
    vec![0, 1, 2, 3]
}

/// a -> b -> c -> a. Point-point, but without any DUF-ordering.
pub fn directed_triangle() -> Digraph {
    build(3, &[(0, 1), (1, 2), (2, 0)])
}

/// All six arcs between three vertices, no loops. Every order is DUF, yet
/// its splitting bigraph is an induced 6-cycle.
pub fn symmetric_triangle() -> Digraph {
    build(3, &[(0, 1), (1, 0), (1, 2), (2, 1), (2, 0), (0, 2)])
}

/// K3,3 with every edge oriented from {0,1,2} to {3,4,5} and a loop on
/// each vertex: reflexive and DUF, but not a reflexive interval digraph.
pub fn oriented_k33_reflexive() -> Digraph {
    let mut edges = Vec::new();
    for u in 0..3 {
        for v in 3..6 {
            edges.push((u, v));
        }
    }
    reflexive(6, &edges)
}

/// (a,b), (a,c), (b,c), (c,b), (c,d) without loops; a, b, c, d is an
/// anti-directed walk, so it is not point-point.
pub fn anti_walk_example() -> Digraph {
    build(4, &[(0, 1), (0, 2), (1, 2), (2, 1), (2, 3)])
}

/// The same arcs as [`anti_walk_example`] with loops everywhere.
pub fn anti_walk_example_reflexive() -> Digraph {
    reflexive(4, &[(0, 1), (0, 2), (1, 2), (2, 1), (2, 3)])
}

/// v2, v3, v4 -> v1 with loops on all four vertices (v1 = 0). Adjusted
/// interval digraph that is not an interval nest digraph.
pub fn in_star_reflexive() -> Digraph {
    reflexive(4, &[(1, 0), (2, 0), (3, 0)])
}

/// Adjusted representation of [`in_star_reflexive`]: every interval starts
/// at the vertex's own coordinate, and v1 reaches back to cover the others.
pub fn in_star_adjusted_rep() -> IntervalRep {
    IntervalRep::from_int_tuples(&[(0, 0, 0, 3), (1, 1, 1, 1), (2, 2, 2, 2), (3, 3, 3, 3)])
        .expect("well-formed fixture")
}

/// (a,b), (a,d), (c,b), (c,d) plus loops; underlying graph is an induced C4.
pub fn catch_not_adjusted() -> Digraph {
    reflexive(4, &[(0, 1), (0, 3), (2, 1), (2, 3)])
}

/// (a,b), (c,b), (b,d), (d,b) plus loops.
pub fn nest_not_catch() -> Digraph {
    reflexive(4, &[(0, 1), (2, 1), (1, 3), (3, 1)])
}

/// Interval nest representation of [`nest_not_catch`].
pub fn nest_not_catch_rep() -> IntervalRep {
    IntervalRep::from_int_tuples(&[(1, 2, 1, 1), (2, 4, 2, 4), (4, 5, 5, 5), (3, 3, 3, 3)])
        .expect("well-formed fixture")
}

/// Two-vertex reflexive representation S0=[0,2], T0=[1,3], S1=[4,6],
/// T1=[3/2,5]; realizes the single arc (0,1) plus both loops.
pub fn two_vertex_rep() -> IntervalRep {
    IntervalRep::new(vec![
        (Interval::int(0, 2), Interval::int(1, 3)),
        (Interval::int(4, 6), Interval::new(Coord::new(3, 2), Coord::from_integer(5))),
    ])
    .expect("well-formed fixture")
}

/// Directed path 0 -> 1 -> 2.
pub fn path3() -> Digraph {
    build(3, &[(0, 1), (1, 2)])
}

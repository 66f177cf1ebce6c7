//! Helpers shared by the integration tests and the acceptance harness.
#![allow(dead_code)]

use digraph_kernels::generate;
use digraph_kernels::graph::Digraph;
use digraph_kernels::interval::IntervalRep;
use digraph_kernels::ordering::{OrderingRole, VertexOrdering};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every digraph on `n` vertices, with or without loops, in mask order.
pub fn all_digraphs(n: usize, loops: bool) -> impl Iterator<Item = Digraph> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).filter(|&(u, v)| loops || u != v).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        Digraph::from_edges(n, edges).unwrap()
    })
}

/// All orderings of `0..n` with the given role.
pub fn all_orderings(n: usize, role: OrderingRole) -> Vec<VertexOrdering> {
    use itertools::Itertools;
    (0..n).permutations(n).map(|p| VertexOrdering::new(p, role).unwrap()).collect()
}

/// Random reflexive representation with `1..=max_n` vertices and a random
/// interval length limit, so that sparse and dense instances both appear.
pub fn random_reflexive_rep(rng: &mut ChaCha8Rng, max_n: usize) -> IntervalRep {
    let n = rng.random_range(1..=max_n);
    let max_len = match rng.random_range(0..4) {
        0 => None,
        k => Some(k as u64 * 2),
    };
    generate::reflexive_interval(n, rng.random(), max_len)
}

pub fn random_adjusted_rep(rng: &mut ChaCha8Rng, max_n: usize) -> IntervalRep {
    let n = rng.random_range(1..=max_n);
    let max_len = match rng.random_range(0..4) {
        0 => None,
        k => Some(k as u64 * 2),
    };
    generate::adjusted_interval(n, rng.random(), max_len)
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random subset of `0..n`, each vertex kept with probability one half.
pub fn random_subset(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    (0..n).filter(|_| rng.random_bool(0.5)).collect()
}

/// Every digraph on `n` vertices with a loop on each vertex.
pub fn all_reflexive_digraphs(n: usize) -> impl Iterator<Item = Digraph> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).filter(|&(u, v)| u != v).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        Digraph::reflexive_from_edges(n, edges).unwrap()
    })
}

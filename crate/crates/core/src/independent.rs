//! Maximum (weighted) independent sets of DUF-digraphs. Along a
//! DUF-ordering, non-adjacency of the underlying graph is transitive from
//! left to right, so independent sets are exactly the chains of a DAG.

use crate::certificate::{check_weights, Certificate, Mode, Optimality};
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::ordering::{verify_duf_ordering, VertexOrdering};

/// Longest-chain values over the non-adjacency DAG of an ordering.
#[derive(Clone, Debug)]
pub struct ChainDag {
    perm: Vec<usize>,
    /// Best chain weight starting at each position.
    value: Vec<u64>,
    /// Next position on that chain.
    next: Vec<Option<usize>>,
}

impl ChainDag {
    /// Fills the table right to left; ties go to the smallest position.
    pub fn new(g: &Digraph, ord: &VertexOrdering, weights: Option<&[u64]>) -> Self {
        let n = g.n();
        let perm = ord.perm().to_vec();
        let mut value = vec![0u64; n];
        let mut next = vec![None; n];
        for i in (0..n).rev() {
            let u = perm[i];
            let mut best: Option<(u64, usize)> = None;
            for j in i + 1..n {
                if !g.adjacent(u, perm[j]) && best.is_none_or(|(bv, _)| value[j] > bv) {
                    best = Some((value[j], j));
                }
            }
            value[i] = weights.map_or(1, |w| w[u]) + best.map_or(0, |b| b.0);
            next[i] = best.map(|b| b.1);
        }
        ChainDag { perm, value, next }
    }

    pub fn value(&self, position: usize) -> u64 {
        self.value[position]
    }

    pub fn next(&self, position: usize) -> Option<usize> {
        self.next[position]
    }

    /// Vertices of the best chain starting at `position`.
    pub fn chain(&self, position: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut cur = Some(position);
        while let Some(p) = cur {
            out.push(self.perm[p]);
            cur = self.next[p];
        }
        out
    }

    /// Start of the heaviest chain overall.
    pub fn best_start(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for p in 0..self.value.len() {
            if best.is_none_or(|b| self.value[p] > self.value[b]) {
                best = Some(p);
            }
        }
        best
    }
}

/// Maximum-weight independent set (maximum size without weights) of a
/// DUF-ordered digraph. Loops do not affect independence.
pub fn max_independent_duf(g: &Digraph, ord: &VertexOrdering, weights: Option<&[u64]>) -> Result<Certificate> {
    ord.expect_len(g.n())?;
    check_weights(g.n(), weights)?;
    if let Some(w) = verify_duf_ordering(g, ord)? {
        return Err(Error::NotDufOrdered(w));
    }
    let dag = ChainDag::new(g, ord, weights);
    let set = dag.best_start().map(|p| dag.chain(p)).unwrap_or_default();
    Certificate::checked(g, set, Mode::Independent, "max-independent-duf", Optimality::Maximum)
}

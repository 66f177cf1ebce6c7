//! Kernel algorithms: the linear-time kernel of a reflexive interval
//! digraph, the min/max-kernel dynamic program over a DUF-ordering, its
//! O(n^2) form for adjusted representations, and minimum independent
//! dominating sets of cocomparability graphs.

use crate::certificate::{check_weights, Certificate, Mode, Objective, Optimality};
use crate::error::{Error, Result};
use crate::graph::{Digraph, UndirectedGraph};
use crate::interval::NormalizedRep;
use crate::ordering::{verify_cocomparability_ordering, verify_duf_ordering, VertexOrdering};

/// The vertices `z_0, ..., z_t` picked by the linear kernel scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZSequence {
    /// Picked vertices, in increasing `r(S)` order.
    pub vertices: Vec<usize>,
    /// `removed[i]` counts `z_i` together with the in-neighbours it removed.
    pub removed: Vec<usize>,
}

/// Scans vertices by increasing `r(S)`; each vertex still present is picked
/// and removed together with its surviving in-neighbours.
pub fn z_sequence(rep: &NormalizedRep, g: &Digraph) -> ZSequence {
    let n = rep.n();
    let mut by_right: Vec<usize> = (0..n).collect();
    by_right.sort_unstable_by_key(|&u| rep.s(u).hi);
    let mut gone = vec![false; n];
    let mut seq = ZSequence { vertices: Vec::new(), removed: Vec::new() };
    for z in by_right {
        if gone[z] {
            continue;
        }
        gone[z] = true;
        let mut count = 1;
        for &w in g.in_neighbors(z) {
            if !gone[w] {
                gone[w] = true;
                count += 1;
            }
        }
        seq.vertices.push(z);
        seq.removed.push(count);
    }
    seq
}

/// A kernel of the reflexive interval digraph realized by `rep`.
pub fn kernel_linear(rep: &NormalizedRep) -> Result<Certificate> {
    let g = rep.digraph();
    kernel_linear_on(rep, &g)
}

/// Same as [`kernel_linear`] when the realized digraph is already at hand.
pub fn kernel_linear_on(rep: &NormalizedRep, g: &Digraph) -> Result<Certificate> {
    if rep.n() != g.n() {
        return Err(Error::DimensionMismatch { expected: rep.n(), found: g.n() });
    }
    if let Some(v) = rep.missing_loop() {
        return Err(Error::NotReflexive(v));
    }
    let seq = z_sequence(rep, g);
    let mut kernel = Vec::new();
    if let Some(&last) = seq.vertices.last() {
        kernel.push(last);
        for &z in seq.vertices.iter().rev().skip(1) {
            let kept = *kernel.last().expect("nonempty");
            if !g.has_edge(z, kept) {
                kernel.push(z);
            }
        }
    }
    Certificate::checked(g, kernel, Mode::Kernel, "kernel-linear", Optimality::Feasible)
}

/// One row of the kernel dynamic program, indexed by ordering position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelEntry {
    /// `G[i, n]` has no kernel containing `i` that the recursion can build.
    Undefined,
    Defined {
        /// Size of the stored set, or its weight when weights are given.
        value: u64,
        size: usize,
        /// Position of the next member, if any.
        next: Option<usize>,
    },
}

/// Results of the dynamic program: for each position `i`, a kernel of the
/// suffix `G[i, n]` that contains `i`, stored as successor links.
#[derive(Clone, Debug)]
pub struct KernelTable {
    perm: Vec<usize>,
    entries: Vec<KernelEntry>,
    objective: Objective,
}

impl KernelTable {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn objective(&self) -> Objective {
        self.objective
    }

    pub fn entry(&self, position: usize) -> KernelEntry {
        self.entries[position]
    }

    /// Follows successor links from `position`; `None` if undefined.
    pub fn materialize(&self, position: usize) -> Option<Vec<usize>> {
        let KernelEntry::Defined { size, .. } = self.entries[position] else {
            return None;
        };
        let mut set = Vec::with_capacity(size);
        let mut cur = Some(position);
        while let Some(p) = cur {
            set.push(self.perm[p]);
            cur = match self.entries[p] {
                KernelEntry::Defined { next, .. } => next,
                KernelEntry::Undefined => unreachable!("links only point at defined entries"),
            };
        }
        Some(set)
    }
}

/// Fills the table without checking the ordering.
fn fill_table(g: &Digraph, ord: &VertexOrdering, objective: Objective, weights: Option<&[u64]>) -> KernelTable {
    let n = g.n();
    let perm = ord.perm().to_vec();
    let pos = |v: usize| ord.position(v);
    let weight = |p: usize| weights.map_or(1, |w| w[perm[p]]);
    let mut entries = vec![KernelEntry::Undefined; n];
    // Stamps are position + 1 so that zero means "never marked".
    let mut in_mark = vec![0usize; n];
    let mut out_mark = vec![0usize; n];
    let mut l_index = vec![usize::MAX; n];
    let mut later = Vec::with_capacity(n);
    for i in (0..n).rev() {
        let stamp = i + 1;
        let u = perm[i];
        let mut later_in = 0;
        for &w in g.in_neighbors(u) {
            let p = pos(w);
            in_mark[p] = stamp;
            if p > i {
                later_in += 1;
            }
        }
        for &w in g.out_neighbors(u) {
            out_mark[pos(w)] = stamp;
        }
        if later_in == n - 1 - i {
            entries[i] = KernelEntry::Defined { value: weight(i), size: 1, next: None };
            continue;
        }
        // Non-in-neighbours of i above i, in order.
        later.clear();
        for p in i + 1..n {
            if in_mark[p] != stamp {
                l_index[p] = later.len();
                later.push(p);
            }
        }
        let mut best: Option<(u64, usize, usize)> = None;
        for (t, &j) in later.iter().enumerate() {
            if out_mark[j] == stamp {
                continue;
            }
            let KernelEntry::Defined { value, size, .. } = entries[j] else {
                continue;
            };
            // Every earlier element of the list must be an in-neighbour of j.
            let covered = g
                .in_neighbors(perm[j])
                .iter()
                .map(|&w| pos(w))
                .filter(|&p| p > i && p < j && in_mark[p] != stamp && l_index[p] < t)
                .count();
            if covered != t {
                continue;
            }
            if best.is_none_or(|(bv, _, _)| objective.better(value, bv)) {
                best = Some((value, size, j));
            }
        }
        if let Some((value, size, j)) = best {
            entries[i] = KernelEntry::Defined { value: value + weight(i), size: size + 1, next: Some(j) };
        }
    }
    KernelTable { perm, entries, objective }
}

/// Runs the dynamic program on a DUF-ordered digraph.
pub fn kernel_table(
    g: &Digraph,
    ord: &VertexOrdering,
    objective: Objective,
    weights: Option<&[u64]>,
) -> Result<KernelTable> {
    ord.expect_len(g.n())?;
    check_weights(g.n(), weights)?;
    if let Some(w) = verify_duf_ordering(g, ord)? {
        return Err(Error::NotDufOrdered(w));
    }
    Ok(fill_table(g, ord, objective, weights))
}

fn best_prefix_kernel(g: &Digraph, ord: &VertexOrdering, table: &KernelTable) -> Option<usize> {
    let mut best: Option<(u64, usize)> = None;
    for j in 0..g.n() {
        let KernelEntry::Defined { value, .. } = table.entry(j) else {
            continue;
        };
        let earlier_in = g.in_neighbors(ord.perm()[j]).iter().filter(|&&w| ord.position(w) < j).count();
        if earlier_in == j && best.is_none_or(|(bv, _)| table.objective.better(value, bv)) {
            best = Some((value, j));
        }
    }
    best.map(|(_, j)| j)
}

/// Minimum or maximum kernel (by size, or by total weight when `weights`
/// is given) of a DUF-ordered digraph; `None` when there is no kernel.
pub fn optimal_kernel_duf(
    g: &Digraph,
    ord: &VertexOrdering,
    objective: Objective,
    weights: Option<&[u64]>,
) -> Result<Option<Certificate>> {
    let table = kernel_table(g, ord, objective, weights)?;
    if g.n() == 0 {
        return Certificate::checked(g, Vec::new(), Mode::Kernel, "kernel-dp-duf", objective.into()).map(Some);
    }
    let Some(j) = best_prefix_kernel(g, ord, &table) else {
        return Ok(None);
    };
    let set = table.materialize(j).expect("chosen entry is defined");
    Certificate::checked(g, set, Mode::Kernel, "kernel-dp-duf", objective.into()).map(Some)
}

/// The O(n^2) form of [`optimal_kernel_duf`] for adjusted representations,
/// where every candidate set `P_i` is a contiguous run of positions.
pub fn optimal_kernel_adjusted(rep: &NormalizedRep, objective: Objective) -> Result<Option<Certificate>> {
    if let Some(v) = rep.first_unadjusted() {
        return Err(Error::NotAdjusted(v));
    }
    let g = rep.digraph();
    let n = g.n();
    if n == 0 {
        return Certificate::checked(&g, Vec::new(), Mode::Kernel, "kernel-dp-adjusted", objective.into()).map(Some);
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.sort_unstable_by_key(|&u| rep.s(u).lo);
    let mut pos = vec![0; n];
    for (p, &u) in perm.iter().enumerate() {
        pos[u] = p;
    }
    // Adjusted representations are reflexive, so both maxima are at least i.
    let max_out: Vec<usize> =
        perm.iter().enumerate().map(|(i, &u)| g.out_neighbors(u).iter().map(|&w| pos[w]).fold(i, usize::max)).collect();
    let max_in: Vec<usize> =
        perm.iter().enumerate().map(|(i, &u)| g.in_neighbors(u).iter().map(|&w| pos[w]).fold(i, usize::max)).collect();
    let mut suffix_min_out = vec![usize::MAX; n + 1];
    for j in (0..n).rev() {
        suffix_min_out[j] = suffix_min_out[j + 1].min(max_out[j]);
    }

    let mut value: Vec<Option<(u64, usize)>> = vec![None; n];
    for i in (0..n).rev() {
        if max_in[i] == n - 1 {
            value[i] = Some((1, usize::MAX));
            continue;
        }
        let first = max_out[i].max(max_in[i]) + 1;
        let last = suffix_min_out[max_in[i] + 1];
        let mut best: Option<(u64, usize)> = None;
        for (j, entry) in value.iter().enumerate().take(last.min(n - 1) + 1).skip(first) {
            if let Some((v, _)) = *entry {
                if best.is_none_or(|(bv, _)| objective.better(v, bv)) {
                    best = Some((v, j));
                }
            }
        }
        value[i] = best.map(|(v, j)| (v + 1, j));
    }

    let y = max_out.iter().copied().min().expect("n > 0");
    let mut best: Option<(u64, usize)> = None;
    for (j, entry) in value.iter().enumerate().take(y + 1) {
        if let Some((v, _)) = *entry {
            if best.is_none_or(|(bv, _)| objective.better(v, bv)) {
                best = Some((v, j));
            }
        }
    }
    let Some((_, start)) = best else {
        return Ok(None);
    };
    let mut set = Vec::new();
    let mut cur = start;
    loop {
        set.push(perm[cur]);
        let (_, next) = value[cur].expect("linked entries are defined");
        if next == usize::MAX {
            break;
        }
        cur = next;
    }
    Certificate::checked(&g, set, Mode::Kernel, "kernel-dp-adjusted", objective.into()).map(Some)
}

/// Minimum independent dominating set of a cocomparability graph, given a
/// cocomparability ordering of it.
pub fn min_independent_dominating_cocomp(h: &UndirectedGraph, ord: &VertexOrdering) -> Result<Certificate> {
    ord.expect_len(h.n())?;
    if let Some(w) = verify_cocomparability_ordering(h, ord)? {
        return Err(Error::NotCocompOrdered(w));
    }
    let d = h.symmetric_digraph();
    let table = fill_table(&d, ord, Objective::Min, None);
    let set = match best_prefix_kernel(&d, ord, &table) {
        Some(j) => table.materialize(j).expect("chosen entry is defined"),
        None if h.n() == 0 => Vec::new(),
        None => unreachable!("symmetric digraphs always have a kernel"),
    };
    Certificate::checked(&d, set, Mode::Solution, "min-independent-dominating-cocomp", Optimality::Minimum)
}

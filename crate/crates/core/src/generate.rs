//! Seeded random instances. Equal parameters and seed give equal output.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::domination::IntervalBigraphRep;
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::interval::{normalize, Interval, IntervalRep};
use crate::pointpoint::{k_subdivision, SubdivisionMap};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn check_probability(name: &str, p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("{name} must lie in [0, 1], got {p}")));
    }
    Ok(())
}

/// Interval lengths are drawn from `0..=max_len`; `None` lets them span
/// the whole grid, `Some(c)` with a small constant keeps the digraph sparse.
fn span_limit(n: usize, max_len: Option<u64>) -> i64 {
    max_len.map_or(4 * n as i64, |c| c as i64)
}

/// Reflexive interval digraph representation: each vertex draws an anchor
/// on the grid `[0, 4n]` and both of its intervals contain it. The result
/// is normalized to ranks `0..4n`.
pub fn reflexive_interval(n: usize, seed: u64, max_len: Option<u64>) -> IntervalRep {
    let mut r = rng(seed);
    let grid = 4 * n as i64;
    let limit = span_limit(n, max_len);
    let around = |r: &mut ChaCha8Rng, anchor: i64| {
        let lo = (anchor - r.random_range(0..=limit)).max(0);
        let hi = (anchor + r.random_range(0..=limit)).min(grid);
        Interval::int(lo, hi)
    };
    let pairs = (0..n)
        .map(|_| {
            let anchor = r.random_range(0..=grid);
            (around(&mut r, anchor), around(&mut r, anchor))
        })
        .collect();
    let rep = IntervalRep::new(pairs).expect("intervals contain their anchor");
    normalize(&rep).to_rep()
}

/// Adjusted representation: `S_u` and `T_u` share their left endpoint.
/// Coordinates stay on the grid, since normalizing would split shared ends.
pub fn adjusted_interval(n: usize, seed: u64, max_len: Option<u64>) -> IntervalRep {
    let mut r = rng(seed);
    let grid = 4 * n as i64;
    let limit = span_limit(n, max_len);
    let pairs = (0..n)
        .map(|_| {
            let left = r.random_range(0..=grid);
            let s = Interval::int(left, (left + r.random_range(0..=limit)).min(grid));
            let t = Interval::int(left, (left + r.random_range(0..=limit)).min(grid));
            (s, t)
        })
        .collect();
    IntervalRep::new(pairs).expect("left ends precede right ends")
}

/// Random intervals for parts of size `a` and `b` on the grid `[0, grid]`.
pub fn interval_bigraph(a: usize, b: usize, grid: u64, seed: u64) -> IntervalBigraphRep {
    let mut r = rng(seed);
    let grid = grid as i64;
    let mut draw = |_| {
        let x = r.random_range(0..=grid);
        let y = r.random_range(0..=grid);
        Interval::int(x.min(y), x.max(y))
    };
    let left = (0..a).map(&mut draw).collect();
    let right = (0..b).map(&mut draw).collect();
    IntervalBigraphRep::new(left, right).expect("ends are ordered")
}

/// Each ordered pair of distinct vertices is an arc with probability `p`,
/// each vertex has a loop with probability `loop_p`.
pub fn random_digraph(n: usize, p: f64, loop_p: f64, seed: u64) -> Result<Digraph> {
    check_probability("arc probability", p)?;
    check_probability("loop probability", loop_p)?;
    let mut r = rng(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            let chance = if u == v { loop_p } else { p };
            if r.random_bool(chance) {
                edges.push((u, v));
            }
        }
    }
    Digraph::from_edges(n, edges)
}

/// The k-subdivision of a loop-free random digraph.
pub fn subdivided(n: usize, p: f64, k: usize, seed: u64) -> Result<SubdivisionMap> {
    k_subdivision(&random_digraph(n, p, 0.0, seed)?, k)
}

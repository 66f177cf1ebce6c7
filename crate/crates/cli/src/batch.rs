//! `verify --batch`: random reflexive interval instances, each solved by the
//! fast algorithms and by the oracles, checked concurrently.

use digraph_kernels::certificate::Objective;
use digraph_kernels::domination::{min_absorbing_reflexive, min_dominating_reflexive};
use digraph_kernels::generate;
use digraph_kernels::independent::max_independent_duf;
use digraph_kernels::interval::{extract_duf_ordering, normalize};
use digraph_kernels::kernel::{kernel_linear, optimal_kernel_duf};
use digraph_kernels::oracle::{self, KernelQuery, OracleBudget};
use rayon::prelude::*;
use serde::Serialize;

use crate::commands::Result;
use crate::report::Outcome;

#[derive(Debug, Serialize)]
struct Disagreement {
    instance: usize,
    seed: u64,
    n: usize,
    check: &'static str,
}

/// SplitMix64 step, so neighbouring batch seeds give unrelated instances.
fn mix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

fn check_instance(instance: usize, seed: u64, max_n: usize) -> Result<Vec<Disagreement>> {
    let n = 1 + (seed % max_n as u64) as usize;
    let max_len = match (seed >> 32) % 4 {
        0 => None,
        c => Some(2 * c),
    };
    let rep = normalize(&generate::reflexive_interval(n, seed, max_len));
    let g = rep.digraph();
    let ord = extract_duf_ordering(&rep)?;
    let budget = OracleBudget::with_n(max_n);

    let size = |c: Option<digraph_kernels::certificate::Certificate>| c.map(|c| c.len());
    let mut failed = Vec::new();
    let mut expect = |check: &'static str, ok: bool| {
        if !ok {
            failed.push(Disagreement { instance, seed, n, check });
        }
    };
    expect("kernel-linear", kernel_linear(&rep)?.passed());
    for (objective, query, check) in
        [(Objective::Min, KernelQuery::Min, "min-kernel"), (Objective::Max, KernelQuery::Max, "max-kernel")]
    {
        let fast = optimal_kernel_duf(&g, &ord, objective, None)?;
        let passed = fast.as_ref().is_none_or(|c| c.passed());
        expect(check, passed && size(fast) == size(oracle::brute_kernel(&g, query, None, &budget)?));
    }
    let absorbing = min_absorbing_reflexive(&rep)?;
    expect("absorbing", absorbing.passed() && absorbing.len() == oracle::brute_min_absorbing(&g, &budget)?.len());
    let dominating = min_dominating_reflexive(&rep)?;
    expect("dominating", dominating.passed() && dominating.len() == oracle::brute_min_dominating(&g, &budget)?.len());
    let mis = max_independent_duf(&g, &ord, None)?;
    expect("mis", mis.passed() && mis.len() == oracle::brute_max_independent(&g, None, &budget)?.len());
    Ok(failed)
}

pub fn run(count: usize, max_n: usize, seed: u64) -> Result<Outcome> {
    if max_n == 0 {
        return Err(crate::commands::CliError::Usage("--max-n must be positive".into()));
    }
    let results: Vec<Vec<Disagreement>> = (0..count)
        .into_par_iter()
        .map(|i| check_instance(i, mix(seed ^ mix(i as u64)), max_n))
        .collect::<Result<_>>()?;
    let disagreements: Vec<Disagreement> = results.into_iter().flatten().collect();
    let agree = disagreements.is_empty();
    let report = serde_json::json!({
        "status": if agree { "agree" } else { "disagree" },
        "instances": count,
        "disagreements": disagreements,
    });
    Ok(if agree { Outcome::Json(report) } else { Outcome::Failed(report) })
}

//! Subcommand implementations. Each returns an [`Outcome`] for `main` to print.

use std::fs;
use std::path::{Path, PathBuf};

use digraph_kernels::certificate::{verify_set, Certificate, Mode, Objective, Optimality};
use digraph_kernels::domination::{min_absorbing_reflexive, min_dominating_reflexive, red_blue_min_dominating};
use digraph_kernels::domination::{verify_red_blue, RedBlueState};
use digraph_kernels::format::{
    emit_bigraph, emit_digraph, emit_intervals, emit_subdivision, parse_bigraph, parse_digraph, parse_intervals,
    parse_ordering, parse_set, parse_subdivision, parse_weights,
};
use digraph_kernels::generate;
use digraph_kernels::graph::Digraph;
use digraph_kernels::independent::max_independent_duf;
use digraph_kernels::interval::{extract_duf_ordering, normalize, NormalizedRep};
use digraph_kernels::kernel::{kernel_linear, optimal_kernel_adjusted, optimal_kernel_duf};
use digraph_kernels::oracle::{self, KernelQuery, OracleBudget, OrderingSearch};
use digraph_kernels::ordering::{
    build_representation, check_reflexive_interval_ordering, verify_cocomparability_ordering, verify_duf_ordering,
    OrderingRole, VertexOrdering,
};
use digraph_kernels::pointpoint::{k_subdivision, lift_set, project_set, recognize_point_point, PointPointResult};
use serde_json::json;

use crate::report::Outcome;
use crate::{batch, Command, GenArgs, GenKind, KernelArgs, MapArgs, MapMode, ModeArg, ObjectiveArg};
use crate::{OracleProblem, OrderingKind, VerifyArgs};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] digraph_kernels::error::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    File { path: PathBuf, source: digraph_kernels::error::Error },
    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, CliError>;

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

/// Reads and parses a file, naming the file in parse errors.
fn load<T>(path: &Path, parse: impl FnOnce(&str) -> digraph_kernels::error::Result<T>) -> Result<T> {
    parse(&read(path)?).map_err(|source| CliError::File { path: path.to_owned(), source })
}

fn first_keyword(text: &str) -> Option<&str> {
    text.lines().map(|l| l.split('#').next().unwrap_or("")).find_map(|l| l.split_whitespace().next())
}

/// A digraph file, or an interval representation realized as a digraph.
fn load_graph(path: &Path) -> Result<Digraph> {
    let text = read(path)?;
    let parsed = match first_keyword(&text) {
        Some("intervals") => parse_intervals(&text).map(|rep| normalize(&rep).digraph()),
        _ => parse_digraph(&text),
    };
    parsed.map_err(|source| CliError::File { path: path.to_owned(), source })
}

fn load_rep(path: &Path) -> Result<NormalizedRep> {
    Ok(normalize(&load(path, parse_intervals)?))
}

fn load_weights(path: Option<&PathBuf>) -> Result<Option<Vec<u64>>> {
    path.map(|p| load(p, parse_weights)).transpose()
}

/// A digraph with an ordering file, or a representation with its extracted ordering.
fn graph_and_ordering(
    input: &Path,
    ordering: Option<&PathBuf>,
    role: OrderingRole,
) -> Result<(Digraph, VertexOrdering)> {
    match ordering {
        Some(ord) => Ok((load(input, parse_digraph)?, load(ord, |t| parse_ordering(t, role))?)),
        None => {
            let rep = load_rep(input)?;
            let ord = extract_duf_ordering(&rep)?;
            Ok((rep.digraph(), ord))
        }
    }
}

/// Re-runs the definitional checks of `mode` on the set before reporting it.
fn solved(g: &Digraph, cert: &Certificate, mode: Mode, weights: Option<&[u64]>) -> Result<Outcome> {
    let provenance = cert.provenance();
    let checked = Certificate::checked(g, cert.set().to_vec(), mode, &provenance.algorithm, provenance.optimality)?;
    Ok(Outcome::solved(&checked, weights)?)
}

fn no_kernel() -> Outcome {
    Outcome::None(json!({ "status": "no-kernel" }))
}

pub fn run(command: &Command) -> Result<Outcome> {
    match command {
        Command::Kernel { rep } => {
            let rep = load_rep(rep)?;
            let g = rep.digraph();
            solved(&g, &kernel_linear(&rep)?, Mode::Kernel, None)
        }
        Command::MinKernel(args) => optimal_kernel(args, Objective::Min),
        Command::MaxKernel(args) => optimal_kernel(args, Objective::Max),
        Command::Absorbing { rep } => {
            let rep = load_rep(rep)?;
            solved(&rep.digraph(), &min_absorbing_reflexive(&rep)?, Mode::Absorbing, None)
        }
        Command::Dominating { rep } => {
            let rep = load_rep(rep)?;
            solved(&rep.digraph(), &min_dominating_reflexive(&rep)?, Mode::Dominating, None)
        }
        Command::Mis { input, ordering, weights } => {
            let weights = load_weights(weights.as_ref())?;
            let (g, ord) = graph_and_ordering(input, ordering.as_ref(), OrderingRole::Duf)?;
            let cert = max_independent_duf(&g, &ord, weights.as_deref())?;
            solved(&g, &cert, Mode::Independent, weights.as_deref())
        }
        Command::RedBlue { bigraph } => {
            let rep = load(bigraph, parse_bigraph)?;
            match red_blue_min_dominating(&rep) {
                Some(cert) => {
                    let provenance = cert.provenance();
                    let checked =
                        verify_red_blue(&rep.bigraph(), cert.set(), &provenance.algorithm, provenance.optimality);
                    Ok(Outcome::solved(&checked, None)?)
                }
                None => Ok(Outcome::None(json!({
                    "status": "no-dominating-set",
                    "isolated": RedBlueState::new(&rep).isolated(),
                }))),
            }
        }
        Command::RecognizePp { digraph } => {
            let g = load_graph(digraph)?;
            Ok(match recognize_point_point(&g) {
                PointPointResult::Accepted(points) => {
                    Outcome::json(json!({ "status": "point-point", "points": points }))
                }
                PointPointResult::Rejected(w) => Outcome::json(json!({
                    "status": "not-point-point",
                    "witness": w.vertices,
                    "description": w.to_string(),
                })),
            })
        }
        Command::CheckOrdering { digraph, ordering, kind } => check_ordering(digraph, ordering, *kind),
        Command::BuildRep { digraph, ordering } => {
            let g = load(digraph, parse_digraph)?;
            let ord = load(ordering, |t| parse_ordering(t, OrderingRole::ReflexiveInterval))?;
            Ok(Outcome::Text(emit_intervals(&build_representation(&g, &ord)?)))
        }
        Command::Subdivide { digraph, k, host } => {
            let map = k_subdivision(&load(digraph, parse_digraph)?, *k)?;
            if let Some(path) = host {
                fs::write(path, emit_digraph(map.host()))
                    .map_err(|source| CliError::Io { path: path.clone(), source })?;
            }
            Ok(Outcome::Text(emit_subdivision(&map)))
        }
        Command::Lift(args) => carry(args, true),
        Command::Project(args) => carry(args, false),
        Command::Oracle { problem, input, budget_n, objective, weights } => {
            let budget = budget_n.map_or_else(OracleBudget::default, OracleBudget::with_n);
            let weights = load_weights(weights.as_ref())?;
            run_oracle(*problem, input, &budget, *objective, weights.as_deref())
        }
        Command::Verify(args) => verify(args),
        Command::Gen(args) => gen(args),
    }
}

fn optimal_kernel(args: &KernelArgs, objective: Objective) -> Result<Outcome> {
    let weights = load_weights(args.weights.as_ref())?;
    let (g, cert) = if args.adjusted {
        if args.ordering.is_some() {
            return Err(CliError::Usage("--adjusted takes an interval representation, not an ordering".into()));
        }
        if weights.is_some() {
            return Err(CliError::Usage("--adjusted does not take weights".into()));
        }
        let rep = load_rep(&args.input)?;
        (rep.digraph(), optimal_kernel_adjusted(&rep, objective)?)
    } else {
        let (g, ord) = graph_and_ordering(&args.input, args.ordering.as_ref(), OrderingRole::Duf)?;
        let cert = optimal_kernel_duf(&g, &ord, objective, weights.as_deref())?;
        (g, cert)
    };
    match cert {
        Some(cert) => solved(&g, &cert, Mode::Kernel, weights.as_deref()),
        None => Ok(no_kernel()),
    }
}

fn check_ordering(digraph: &Path, ordering: &Path, kind: OrderingKind) -> Result<Outcome> {
    let g = load(digraph, parse_digraph)?;
    let role = match kind {
        OrderingKind::Duf => OrderingRole::Duf,
        OrderingKind::Reflexive => OrderingRole::ReflexiveInterval,
        OrderingKind::Cocomp => OrderingRole::Cocomparability,
    };
    let ord = load(ordering, |t| parse_ordering(t, role))?;
    let witness = match kind {
        OrderingKind::Duf => verify_duf_ordering(&g, &ord)?,
        OrderingKind::Reflexive => check_reflexive_interval_ordering(&g, &ord)?,
        OrderingKind::Cocomp => verify_cocomparability_ordering(&g.underlying_undirected(), &ord)?,
    };
    Ok(match witness {
        None => Outcome::status("valid"),
        Some(w) => Outcome::json(json!({ "status": "invalid", "witness": w, "description": w.to_string() })),
    })
}

fn carry(args: &MapArgs, lift: bool) -> Result<Outcome> {
    let map = load(&args.map, parse_subdivision)?;
    let set = load(&args.set, parse_set)?;
    let mode = match args.mode {
        MapMode::Kernel => Mode::Kernel,
        MapMode::Absorbing => Mode::Absorbing,
    };
    let (image, target, algorithm) = if lift {
        (lift_set(&map, &set, mode)?, map.host(), "lift")
    } else {
        (project_set(&map, &set, mode)?, map.origin(), "project")
    };
    let cert = Certificate::checked(target, image, mode, algorithm, Optimality::Feasible)?;
    Ok(Outcome::solved(&cert, None)?)
}

fn run_oracle(
    problem: OracleProblem,
    input: &Path,
    budget: &OracleBudget,
    objective: Option<ObjectiveArg>,
    weights: Option<&[u64]>,
) -> Result<Outcome> {
    if objective.is_some() && !matches!(problem, OracleProblem::Kernel) {
        return Err(CliError::Usage("--objective applies to the kernel oracle only".into()));
    }
    if weights.is_some() && !matches!(problem, OracleProblem::Kernel | OracleProblem::Mis) {
        return Err(CliError::Usage("--weights applies to the kernel and mis oracles only".into()));
    }
    if let OracleProblem::RedBlue = problem {
        let rep = load(input, parse_bigraph)?;
        return Ok(match oracle::brute_red_blue(&rep.bigraph(), budget)? {
            Some(cert) => Outcome::solved(&cert, None)?,
            None => Outcome::None(json!({ "status": "no-dominating-set" })),
        });
    }
    let g = load_graph(input)?;
    let found = |value: serde_json::Value| Outcome::json(json!({ "status": "found", "witness": value }));
    match problem {
        OracleProblem::Kernel => {
            let query = match objective {
                None => KernelQuery::Exists,
                Some(ObjectiveArg::Min) => KernelQuery::Min,
                Some(ObjectiveArg::Max) => KernelQuery::Max,
            };
            match oracle::brute_kernel(&g, query, weights, budget)? {
                Some(cert) => solved(&g, &cert, Mode::Kernel, weights),
                None => Ok(no_kernel()),
            }
        }
        OracleProblem::Absorbing => solved(&g, &oracle::brute_min_absorbing(&g, budget)?, Mode::Absorbing, None),
        OracleProblem::Dominating => solved(&g, &oracle::brute_min_dominating(&g, budget)?, Mode::Dominating, None),
        OracleProblem::Mis => {
            solved(&g, &oracle::brute_max_independent(&g, weights, budget)?, Mode::Independent, weights)
        }
        OracleProblem::K33 => Ok(match oracle::find_induced_k33(&g.underlying_undirected(), budget)? {
            Some(w) => found(json!({ "left": w.left, "right": w.right })),
            None => Outcome::status("none"),
        }),
        OracleProblem::DufOrdering | OracleProblem::ReflexiveOrdering => {
            let kind = match problem {
                OracleProblem::DufOrdering => OrderingSearch::Duf,
                _ => OrderingSearch::ReflexiveInterval,
            };
            Ok(match oracle::brute_ordering_search(&g, kind, budget)? {
                Some(ord) => found(json!(ord.perm())),
                None => Outcome::status("none"),
            })
        }
        OracleProblem::AntiWalk => Ok(match oracle::brute_anti_directed_walk(&g) {
            Some(w) => found(json!(w.vertices)),
            None => Outcome::status("none"),
        }),
        OracleProblem::RedBlue => unreachable!("handled above"),
    }
}

fn verify(args: &VerifyArgs) -> Result<Outcome> {
    if let Some(count) = args.batch {
        return batch::run(count, args.max_n, args.seed);
    }
    let (Some(digraph), Some(set), Some(mode)) = (&args.digraph, &args.set, args.mode) else {
        return Err(CliError::Usage("verify needs a digraph, a set and --mode".into()));
    };
    let g = load_graph(digraph)?;
    let set = load(set, parse_set)?;
    let mode = match mode {
        ModeArg::Independent => Mode::Independent,
        ModeArg::Absorbing => Mode::Absorbing,
        ModeArg::Dominating => Mode::Dominating,
        ModeArg::Kernel => Mode::Kernel,
        ModeArg::Solution => Mode::Solution,
    };
    let cert = verify_set(&g, &set, mode)?;
    Ok(Outcome::json(json!({
        "status": if cert.passed() { "verified" } else { "rejected" },
        "set": cert.set(),
        "checks": cert.checks(),
    })))
}

fn gen(args: &GenArgs) -> Result<Outcome> {
    let text = match args.kind {
        GenKind::ReflexiveInterval if args.adjusted => {
            emit_intervals(&generate::adjusted_interval(args.n, args.seed, args.max_len))
        }
        GenKind::ReflexiveInterval => emit_intervals(&generate::reflexive_interval(args.n, args.seed, args.max_len)),
        GenKind::IntervalBigraph => {
            let (a, b) = (args.a.unwrap_or(args.n), args.b.unwrap_or(args.n));
            if args.grid == 0 {
                return Err(CliError::Usage("--grid must be positive".into()));
            }
            emit_bigraph(&generate::interval_bigraph(a, b, args.grid, args.seed))
        }
        GenKind::RandomDigraph => emit_digraph(&generate::random_digraph(args.n, args.p, args.loop_p, args.seed)?),
        GenKind::Subdivided => emit_subdivision(&generate::subdivided(args.n, args.p, args.k, args.seed)?),
    };
    Ok(Outcome::Text(text))
}

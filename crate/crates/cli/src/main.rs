//! Command-line interface for the digraph statistics library.
//!
//! Exit codes: 0 success, 1 a verification or bound check failed
//! (a counterexample must be loud), 2 usage or input error.

use std::io::Read;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use digraph_stats::census::{census_bounds, census_residuals, census_with_jobs};
use digraph_stats::cig::{n_cubed_over_16, CircularIntervalDigraph};
use digraph_stats::digraph::{format_edge_list, parse_edge_list, Digraph, PathKind};
use digraph_stats::families::{layered_tournaments, recursive_family};
use digraph_stats::path4::{
    check_outdegree_corollary, four_tuple_stats_with_jobs, identity_residuals, p4_bound_reports,
    FourTupleStats,
};
use digraph_stats::rational::{BoundReport, Exact};
use digraph_stats::search::{
    local_search, random_free_digraph, verify_cig, verify_thomasse_with_resume, Freeness,
    Objective, SearchConfig,
};

#[derive(Parser)]
#[command(
    name = "digraph-stats",
    version,
    about = "Exact subgraph statistics, bounds and exhaustive verification for simple digraphs"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Seven-type triad census of a digon-free digraph, with identity
    /// residuals and bound verdicts.
    Census {
        /// Edge-list file, or `-` for stdin.
        file: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Also classify every triple directly and compare (debug recount).
        #[arg(long, default_value_t = false)]
        check: bool,
    },
    /// Is the digraph free of directed cycles of length at most k?
    Kfree {
        file: String,
        #[arg(long)]
        k: usize,
    },
    /// Count s-vertex walks, paths or induced paths.
    Count {
        file: String,
        #[arg(long)]
        s: usize,
        #[arg(long, value_enum)]
        kind: KindArg,
    },
    /// Emit a generated digraph in edge-list format.
    Gen {
        #[command(subcommand)]
        what: GenCommand,
    },
    /// Interval report (α, β, ξ, γ, path count, n³/16 verdict) for a
    /// circular interval digraph.
    CigReport {
        /// Edge-list file (vertex order = circle order), `-` for stdin, or
        /// an inline generator spec `gbeta:N:B[:x=T1,T2,...]`.
        source: String,
    },
    /// Four-vertex path statistics of a 3-free digraph.
    P4Report {
        file: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Every bound report applicable to the input digraph.
    Bounds {
        file: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Exhaustive small-n verification sweeps.
    Verify {
        #[command(subcommand)]
        what: VerifyCommand,
    },
    /// Stochastic hill climbing for extremal digraphs.
    Search {
        #[arg(long, value_enum)]
        objective: ObjectiveArg,
        /// Forbidden cycle length: 2 (digon-free) or 3.
        #[arg(long = "free")]
        free: u8,
        #[arg(long)]
        n: usize,
        /// Maximum number of accepted moves.
        #[arg(long)]
        steps: usize,
        /// Seed for the plateau walk and the starting digraph.
        #[arg(long)]
        seed: u64,
        /// Start from this edge-list file instead of a seeded random graph.
        #[arg(long)]
        init: Option<String>,
        /// Break objective ties toward smaller ξ in index circular order.
        #[arg(long, default_value_t = false)]
        cig_tiebreak: bool,
    },
}

#[derive(Subcommand)]
enum GenCommand {
    /// Uniform circular interval digraph: all pairs of length ≤ beta.
    Gbeta {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        beta: usize,
        /// Length-beta edges to remove: tails `3,7` and/or pairs `3-8`.
        #[arg(long, value_delimiter = ',')]
        remove_x: Vec<String>,
    },
    /// Recursive square construction on 4^i vertices.
    Recursive {
        #[arg(long)]
        i: u32,
    },
    /// Four acyclic tournaments arranged in a cycle (3-free).
    Layered {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Maximize induced 3-vertex paths over all digon-free digraphs.
    Thomasse {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Record partition progress here and pick it up on restart.
        #[arg(long)]
        resume: Option<std::path::PathBuf>,
    },
    /// Sweep circular interval representations (extent vectors).
    Cig {
        #[arg(long)]
        n: usize,
        /// Per-vertex extent ceiling; default ⌊(n−1)/2⌋.
        #[arg(long)]
        max_extent: Option<usize>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Walk,
    Path,
    Induced,
}

#[derive(Clone, Copy, ValueEnum)]
enum ObjectiveArg {
    P3,
    P4,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(all_checks_passed) => {
            if all_checks_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .context("reading stdin")?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn load_digraph(path: &str) -> Result<Digraph> {
    let text = read_input(path)?;
    parse_edge_list(&text).map_err(|e| anyhow!("{path}: {e}"))
}

/// Writes to stdout, treating a closed pipe as a normal early exit.
fn write_stdout(text: &str) -> Result<()> {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let result = out.write_all(text.as_bytes()).and_then(|_| out.flush());
    match result {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => std::process::exit(0),
        Err(e) => Err(e.into()),
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    write_stdout(&format!("{}\n", serde_json::to_string_pretty(value)?))
}

fn run(cmd: Command) -> Result<bool> {
    match cmd {
        Command::Census { file, jobs, check } => cmd_census(&file, jobs, check),
        Command::Kfree { file, k } => cmd_kfree(&file, k),
        Command::Count { file, s, kind } => cmd_count(&file, s, kind),
        Command::Gen { what } => cmd_gen(what),
        Command::CigReport { source } => cmd_cig_report(&source),
        Command::P4Report { file, jobs } => cmd_p4_report(&file, jobs),
        Command::Bounds { file, jobs } => cmd_bounds(&file, jobs),
        Command::Verify { what } => cmd_verify(what),
        Command::Search {
            objective,
            free,
            n,
            steps,
            seed,
            init,
            cig_tiebreak,
        } => cmd_search(objective, free, n, steps, seed, init, cig_tiebreak),
    }
}

#[derive(Serialize)]
struct CensusOut {
    n: usize,
    m: usize,
    s1: u64,
    s2: u64,
    s3: u64,
    s4: u64,
    s5: u64,
    s6: u64,
    s7: u64,
    residuals: [i128; 5],
    bounds: Vec<BoundReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    recount_matches: Option<bool>,
}

fn cmd_census(file: &str, jobs: usize, check: bool) -> Result<bool> {
    let g = load_digraph(file)?;
    let c = census_with_jobs(&g, jobs)?;
    let residuals = census_residuals(&g, &c);
    let bounds = census_bounds(&g, &c)?;
    let recount_matches = check.then(|| {
        digraph_stats::census::census_bruteforce(&g).map(|b| b == c).unwrap_or(false)
    });
    let ok = residuals.iter().all(|&r| r == 0)
        && bounds.iter().all(|b| b.holds)
        && recount_matches != Some(false);
    print_json(&CensusOut {
        n: g.n(),
        m: g.edge_count(),
        s1: c.s1,
        s2: c.s2,
        s3: c.s3,
        s4: c.s4,
        s5: c.s5,
        s6: c.s6,
        s7: c.s7,
        residuals,
        bounds,
        recount_matches,
    })?;
    Ok(ok)
}

fn cmd_kfree(file: &str, k: usize) -> Result<bool> {
    if k == 0 {
        bail!("--k must be at least 1");
    }
    let g = load_digraph(file)?;
    #[derive(Serialize)]
    struct Out {
        n: usize,
        k: usize,
        k_free: bool,
    }
    print_json(&Out {
        n: g.n(),
        k,
        k_free: g.is_k_free(k),
    })?;
    Ok(true)
}

fn cmd_count(file: &str, s: usize, kind: KindArg) -> Result<bool> {
    if s == 0 {
        bail!("--s must be at least 1");
    }
    let g = load_digraph(file)?;
    let (kind, label) = match kind {
        KindArg::Walk => (PathKind::Walk, "walk"),
        KindArg::Path => (PathKind::Path, "path"),
        KindArg::Induced => (PathKind::InducedPath, "induced"),
    };
    #[derive(Serialize)]
    struct Out<'a> {
        n: usize,
        s: usize,
        kind: &'a str,
        count: String,
    }
    print_json(&Out {
        n: g.n(),
        s,
        kind: label,
        count: g.count_sequences(s, kind).to_string(),
    })?;
    Ok(true)
}

/// `3` (a tail of an H_β edge) or `3-8` (a full edge).
fn parse_removals(n: usize, beta: usize, tokens: &[String]) -> Result<Vec<(usize, usize)>> {
    tokens
        .iter()
        .filter(|t| !t.is_empty())
        .map(|token| {
            if let Some((a, b)) = token.split_once('-') {
                let u: usize = a.parse().context("bad removal edge")?;
                let v: usize = b.parse().context("bad removal edge")?;
                Ok((u, v))
            } else {
                let tail: usize = token.parse().context("bad removal tail")?;
                if tail >= n {
                    bail!("removal tail {tail} out of range");
                }
                Ok((tail, (tail + beta) % n))
            }
        })
        .collect()
}

fn cmd_gen(what: GenCommand) -> Result<bool> {
    let (header, g) = match what {
        GenCommand::Gbeta { n, beta, remove_x } => {
            let x = parse_removals(n, beta, &remove_x)?;
            let cig = digraph_stats::cig::g_beta_minus_x(n, beta, &x)?;
            let mut header = format!("# gbeta n={n} beta={beta}");
            if !x.is_empty() {
                let tails: Vec<String> = x.iter().map(|&(u, _)| u.to_string()).collect();
                header.push_str(&format!(" minus x={}", tails.join(",")));
            }
            (header, cig.to_digraph())
        }
        GenCommand::Recursive { i } => (format!("# recursive i={i}"), recursive_family(i)?),
        GenCommand::Layered { n } => (format!("# layered n={n}"), layered_tournaments(n)?),
    };
    write_stdout(&format!("{header}\n{}", format_edge_list(&g)))?;
    Ok(true)
}

#[derive(Serialize)]
struct CigReportOut {
    n: usize,
    /// The n³/16 ceiling is a theorem for 2-free interval digraphs only.
    two_free: bool,
    alpha: Option<u64>,
    beta: u64,
    xi: u64,
    gamma: Option<i64>,
    epsilon: u8,
    p3: u64,
    bound_16: BoundReport,
}

fn cmd_cig_report(source: &str) -> Result<bool> {
    let cig = if let Some(spec) = source.strip_prefix("gbeta:") {
        let parts: Vec<&str> = spec.split(':').collect();
        if parts.len() < 2 || parts.len() > 3 {
            bail!("generator spec must be gbeta:N:B[:x=T1,T2,...]");
        }
        let n: usize = parts[0].parse().context("bad n in generator spec")?;
        let beta: usize = parts[1].parse().context("bad beta in generator spec")?;
        let tails: Vec<String> = match parts.get(2) {
            Some(x) => x
                .strip_prefix("x=")
                .ok_or_else(|| anyhow!("third field must be x=T1,T2,..."))?
                .split(',')
                .map(str::to_string)
                .collect(),
            None => Vec::new(),
        };
        let x = parse_removals(n, beta, &tails)?;
        digraph_stats::cig::g_beta_minus_x(n, beta, &x)?
    } else {
        let g = load_digraph(source)?;
        CircularIntervalDigraph::from_digraph_in_index_order(&g)?
    };
    let state = cig.extreme_state();
    let p3 = cig.induced_p3();
    let bound_16 = BoundReport::le(
        "p3 <= n^3/16",
        Exact::from_u64(p3),
        n_cubed_over_16(cig.n()),
    );
    let ok = bound_16.holds;
    print_json(&CigReportOut {
        n: cig.n(),
        two_free: cig.is_two_free(),
        alpha: state.alpha.finite().map(|a| a as u64),
        beta: state.beta as u64,
        xi: state.xi,
        gamma: state.gamma,
        epsilon: state.epsilon,
        p3,
        bound_16,
    })?;
    Ok(ok)
}

#[derive(Serialize)]
struct P4ReportOut {
    n: usize,
    #[serde(flatten)]
    stats: FourTupleStats,
    identities: IdentityResiduals,
    bounds: Vec<BoundReport>,
}

#[derive(Serialize)]
struct IdentityResiduals {
    residual_24p4_vs_4s_plus_r: i128,
    residual_24p4_vs_n4_plus_3s_minus_n: i128,
}

fn cmd_p4_report(file: &str, jobs: usize) -> Result<bool> {
    let g = load_digraph(file)?;
    let stats = four_tuple_stats_with_jobs(&g, jobs)?;
    let [ra, rb] = identity_residuals(g.n(), &stats);
    let mut bounds = p4_bound_reports(g.n(), &stats);
    if g.n() > 0 {
        bounds.push(check_outdegree_corollary(&g)?);
    }
    let ok = ra == 0 && rb == 0 && bounds.iter().all(|b| b.holds);
    print_json(&P4ReportOut {
        n: g.n(),
        stats,
        identities: IdentityResiduals {
            residual_24p4_vs_4s_plus_r: ra,
            residual_24p4_vs_n4_plus_3s_minus_n: rb,
        },
        bounds,
    })?;
    Ok(ok)
}

#[derive(Serialize)]
struct BoundsOut {
    n: usize,
    m: usize,
    two_free: bool,
    three_free: bool,
    reports: Vec<BoundReport>,
}

fn cmd_bounds(file: &str, jobs: usize) -> Result<bool> {
    let g = load_digraph(file)?;
    let two_free = g.is_k_free(2);
    let three_free = g.is_k_free(3);
    let mut reports = Vec::new();
    if two_free {
        let c = census_with_jobs(&g, jobs)?;
        reports.extend(census_bounds(&g, &c)?);
    }
    if three_free {
        let stats = four_tuple_stats_with_jobs(&g, jobs)?;
        reports.extend(p4_bound_reports(g.n(), &stats));
        if g.n() > 0 {
            reports.push(check_outdegree_corollary(&g)?);
        }
    }
    let ok = reports.iter().all(|r| r.holds);
    print_json(&BoundsOut {
        n: g.n(),
        m: g.edge_count(),
        two_free,
        three_free,
        reports,
    })?;
    Ok(ok)
}

fn cmd_verify(what: VerifyCommand) -> Result<bool> {
    match what {
        VerifyCommand::Thomasse { n, jobs, resume } => {
            let r = verify_thomasse_with_resume(n, jobs, resume.as_deref())?;
            #[derive(Serialize)]
            struct Out {
                n: usize,
                total: String,
                max_p3: u64,
                witness_edges: Vec<(usize, usize)>,
                thomasse: BoundReport,
                bondy: BoundReport,
            }
            let ok = r.thomasse.holds && r.bondy.holds;
            print_json(&Out {
                n: r.n,
                total: r.total.to_string(),
                max_p3: r.max_p3,
                witness_edges: r.witness_edges,
                thomasse: r.thomasse,
                bondy: r.bondy,
            })?;
            Ok(ok)
        }
        VerifyCommand::Cig { n, max_extent, jobs } => {
            let r = verify_cig(n, max_extent, jobs)?;
            #[derive(Serialize)]
            struct Out {
                n: usize,
                max_extent: usize,
                total_representations: String,
                two_free_count: u64,
                max_p3: u64,
                witness_xi: u64,
                witness_extents: Vec<usize>,
                bound_16: BoundReport,
            }
            let ok = r.bound16.holds;
            print_json(&Out {
                n: r.n,
                max_extent: r.max_extent,
                total_representations: r.total_representations.to_string(),
                two_free_count: r.two_free_count,
                max_p3: r.max_p3,
                witness_xi: r.witness_xi,
                witness_extents: r.witness_extents,
                bound_16: r.bound16,
            })?;
            Ok(ok)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    objective: ObjectiveArg,
    free: u8,
    n: usize,
    steps: usize,
    seed: u64,
    init: Option<String>,
    cig_tiebreak: bool,
) -> Result<bool> {
    let freeness = match free {
        2 => Freeness::TwoFree,
        3 => Freeness::ThreeFree,
        other => bail!("--free must be 2 or 3, got {other}"),
    };
    let objective = match objective {
        ObjectiveArg::P3 => Objective::InducedP3,
        ObjectiveArg::P4 => Objective::P4,
    };
    let start = match init {
        Some(path) => {
            let g = load_digraph(&path)?;
            if g.n() != n {
                bail!("--init digraph has {} vertices, expected --n {n}", g.n());
            }
            g
        }
        None => random_free_digraph(n, freeness, seed),
    };
    let cfg = SearchConfig {
        objective,
        freeness,
        budget: steps,
        rng_seed: seed,
        cig_tiebreak,
    };
    let outcome = local_search(&start, &cfg)?;

    let mut bounds = Vec::new();
    match objective {
        Objective::InducedP3 => {
            let best = Exact::from_u64(outcome.best_value);
            bounds.push(BoundReport::le(
                "best_p3 <= (n-1)n(n+1)/15",
                best.clone(),
                digraph_stats::census::thomasse_bound(n),
            ));
            bounds.push(BoundReport::le(
                "best_p3 <= 2n^3/25",
                best,
                digraph_stats::census::bondy_bound(n),
            ));
        }
        Objective::P4 => {
            let n_e = Exact::from_u64(n as u64);
            let n4 = &(&n_e * &n_e) * &(&n_e * &n_e);
            bounds.push(BoundReport::le(
                "75*best_p4 <= 4n^4",
                &Exact::from_int(75) * &Exact::from_u64(outcome.best_value),
                &Exact::from_int(4) * &n4,
            ));
        }
    }
    let ok = bounds.iter().all(|b| b.holds);

    #[derive(Serialize)]
    struct Out {
        objective: &'static str,
        freeness: u8,
        n: usize,
        steps: usize,
        seed: u64,
        best_value: u64,
        best_edges: Vec<(usize, usize)>,
        trace: Vec<digraph_stats::search::TraceEntry>,
        bounds: Vec<BoundReport>,
    }
    print_json(&Out {
        objective: match objective {
            Objective::InducedP3 => "p3",
            Objective::P4 => "p4",
        },
        freeness: free,
        n,
        steps,
        seed,
        best_value: outcome.best_value,
        best_edges: outcome.best.edges().to_vec(),
        trace: outcome.trace,
        bounds,
    })?;
    Ok(ok)
}

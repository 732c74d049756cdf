//! Front end over the state polytope library: computes states and indices
//! of ideal pieces, verifies chain decompositions and evaluates regularity
//! bounds, reporting everything as deterministic JSON on stdout.
//!
//! Exit codes: 0 all requested work passed, 1 a verification failed,
//! 2 bad input, 3 enumeration budget exhausted, 4 a chain hypothesis does
//! not hold for the given input.

mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use statepoly::gotzmann::{gotzmann_representation, DEFAULT_TERM_CAP};
use statepoly::parse::{parse_ideal_file, parse_rational_vector, parse_weight_vector};
use statepoly::scalar::rat_string;
use statepoly::states::{state_polytope, states_with};
use statepoly::{
    mu, mu_dual, ChainConfig, ChainInstance, EnumerationLimits, Error, GradedPiece,
    IdealPresentation, OneParamSubgroup, TVariant,
};

use report::{
    input_digest, ChecksPayload, GotzmannPayload, MuCheckJson, MuDualPayload, MuPayload,
    PolytopeCheckJson, PolytopeJson, RunReport, StatesCheckJson, StatesPayload, Timing,
    VerifyChainPayload, VerticesCheckJson,
};

#[derive(Parser)]
#[command(
    name = "statepoly",
    version,
    about = "States, state polytopes and stability indices of ideal pieces, exactly"
)]
struct Cli {
    /// Cap on partial column selections visited during enumeration.
    /// Falls back to the STATEPOLY_BUDGET environment variable, then to
    /// ten million.
    #[arg(long, global = true)]
    budget: Option<u64>,

    /// Worker threads for the enumeration (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Attach wall-clock timing to the report. Off by default so identical
    /// inputs produce byte-identical output.
    #[arg(long, global = true)]
    timings: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate all states of one graded piece and its polytope vertices
    States(StatesArgs),
    /// The stability index of one graded piece against a weight vector
    Mu(MuArgs),
    /// Assemble a chain and verify its decomposition identities
    VerifyChain(VerifyChainArgs),
    /// The regularity bound attached to a Hilbert polynomial
    Gotzmann(GotzmannArgs),
}

#[derive(Args)]
struct StatesArgs {
    /// Ideal file: a `vars: k` header, then one generator per line
    #[arg(long)]
    ideal: String,
    /// Degree of the piece
    #[arg(long)]
    degree: u32,
}

#[derive(Args)]
struct MuArgs {
    #[arg(long)]
    ideal: String,
    #[arg(long)]
    degree: u32,
    /// Comma-separated integer weights, one per variable
    #[arg(long, allow_hyphen_values = true)]
    weights: String,
    /// Also compute the index through the quotient and report the equality
    #[arg(long)]
    dual: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum CheckKind {
    States,
    Polytope,
    Vertices,
    Mu,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    /// Cross terms spanning the two sides actually merged at each step
    Proof,
    /// Cross terms as stated: the previous block against everything beyond
    Statement,
}

#[derive(Args)]
struct VerifyChainArgs {
    /// Chain config: JSON with n, boundaries and per-block generators
    #[arg(long)]
    config: String,
    #[arg(long)]
    degree: u32,
    #[arg(long, value_enum, default_value = "proof")]
    variant: VariantArg,
    /// Which decomposition checks to run
    #[arg(long, value_enum, value_delimiter = ',', default_value = "all")]
    check: Vec<CheckKind>,
    /// Weight vector for the index check, repeatable
    #[arg(long = "mu-weights", allow_hyphen_values = true)]
    mu_weights: Vec<String>,
}

#[derive(Args)]
struct GotzmannArgs {
    /// Hilbert polynomial coefficients, constant first, e.g. "1,2" for 2t+1
    #[arg(long, allow_hyphen_values = true)]
    hilbert: String,
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::BudgetExceeded { .. } => 3,
        Error::HypothesisViolation(_) => 4,
        Error::WitnessViolated(_) => 1,
        _ => 2,
    }
}

fn fail(err: Error) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(exit_code_for(&err))
}

fn budget_from(cli: &Cli) -> Result<u64, Error> {
    if let Some(b) = cli.budget {
        return Ok(b);
    }
    match std::env::var("STATEPOLY_BUDGET") {
        Ok(text) => text
            .trim()
            .parse()
            .map_err(|_| Error::InvalidInput(format!("STATEPOLY_BUDGET is not a number: {text}"))),
        Err(_) => Ok(EnumerationLimits::default().budget),
    }
}

fn read_file(path: &str) -> Result<Vec<u8>, Error> {
    std::fs::read(path).map_err(|e| Error::InvalidInput(format!("cannot read {path}: {e}")))
}

fn ideal_piece(bytes: &[u8], degree: u32) -> Result<GradedPiece, Error> {
    let text = std::str::from_utf8(bytes)
        .map_err(|_| Error::Parse("ideal file is not valid UTF-8".into()))?;
    let (n_vars, generators) = parse_ideal_file(text)?;
    IdealPresentation::new(n_vars, generators)?.graded_piece(degree)
}

fn cmd_states(cli: &Cli, args: &StatesArgs) -> Result<(RunReport<StatesPayload>, bool), Error> {
    let bytes = read_file(&args.ideal)?;
    let piece = ideal_piece(&bytes, args.degree)?;
    let limits = EnumerationLimits {
        budget: budget_from(cli)?,
        parallel: true,
    };
    let all = states_with(&piece, &limits)?;
    let hull = state_polytope(&piece, &limits)?;
    let payload = StatesPayload {
        n_vars: piece.n_vars(),
        degree: args.degree,
        q: piece.q(),
        p: piece.p(),
        states: all.points().iter().cloned().collect(),
        polytope: PolytopeJson::from_polytope(&hull),
    };
    let report = RunReport {
        command: "states",
        digest: input_digest("states", &bytes, &[args.degree.to_string()]),
        outcome: "value",
        payload,
        timing: None,
    };
    Ok((report, true))
}

fn cmd_mu(cli: &Cli, args: &MuArgs) -> Result<(RunReport<MuPayload>, bool), Error> {
    let _ = cli;
    let bytes = read_file(&args.ideal)?;
    let piece = ideal_piece(&bytes, args.degree)?;
    let weights = parse_weight_vector(&args.weights)?;
    let rho = OneParamSubgroup::new(weights.clone())?;
    let value = mu(&piece, &rho)?;
    let mut pass = true;
    let dual = if args.dual {
        let dual_value = mu_dual(&piece, &rho)?;
        let equal = dual_value == value;
        pass = equal;
        Some(MuDualPayload {
            mu_dual: rat_string(&dual_value),
            equal,
        })
    } else {
        None
    };
    let payload = MuPayload {
        n_vars: piece.n_vars(),
        degree: args.degree,
        weights,
        recentred: rho.recentred().iter().map(rat_string).collect(),
        mu: rat_string(&value),
        dual,
    };
    let report = RunReport {
        command: "mu",
        digest: input_digest(
            "mu",
            &bytes,
            &[
                args.degree.to_string(),
                args.weights.clone(),
                args.dual.to_string(),
            ],
        ),
        outcome: if pass { "value" } else { "fail" },
        payload,
        timing: None,
    };
    Ok((report, pass))
}

fn requested(checks: &[CheckKind], kind: CheckKind) -> bool {
    checks.contains(&CheckKind::All) || checks.contains(&kind)
}

fn cmd_verify_chain(
    cli: &Cli,
    args: &VerifyChainArgs,
) -> Result<(RunReport<VerifyChainPayload>, bool), Error> {
    let bytes = read_file(&args.config)?;
    let text = std::str::from_utf8(&bytes)
        .map_err(|_| Error::Parse("chain config is not valid UTF-8".into()))?;
    let config = ChainConfig::from_json(text)?;
    let variant = match args.variant {
        VariantArg::Proof => TVariant::Proof,
        VariantArg::Statement => TVariant::Statement,
    };
    let mu_weights = args
        .mu_weights
        .iter()
        .map(|s| parse_weight_vector(s))
        .collect::<Result<Vec<_>, _>>()?;
    if requested(&args.check, CheckKind::Mu) && mu_weights.is_empty() {
        return Err(Error::InvalidInput(
            "the mu check needs at least one --mu-weights vector".into(),
        ));
    }

    let inst = ChainInstance::assemble(&config, args.degree, variant)?;
    let limits = EnumerationLimits {
        budget: budget_from(cli)?,
        parallel: true,
    };
    let mut checks = ChecksPayload::default();
    let mut pass = true;

    if requested(&args.check, CheckKind::States) {
        let r = inst.verify_states(&limits)?;
        pass &= r.pass();
        checks.states = Some(StatesCheckJson {
            pass: r.pass(),
            full_states: r.full_states,
            combined_states: r.combined_states,
            missing: r.missing,
            extra: r.extra,
        });
    }
    if requested(&args.check, CheckKind::Polytope) {
        let r = inst.verify_polytope(&limits)?;
        pass &= r.pass();
        checks.polytope = Some(PolytopeCheckJson {
            pass: r.pass(),
            full_vertices: r.full_vertices,
            combined_vertices: r.combined_vertices,
        });
    }
    if requested(&args.check, CheckKind::Vertices) {
        let r = inst.verify_sharpness(&limits)?;
        pass &= r.pass();
        checks.vertices = Some(VerticesCheckJson {
            pass: r.pass(),
            expected_product: r.expected_product(),
            block_vertex_counts: r.block_vertex_counts,
            full_vertex_count: r.full_vertex_count,
        });
    }
    if requested(&args.check, CheckKind::Mu) {
        let mut rows = Vec::new();
        for weights in &mu_weights {
            let rho = OneParamSubgroup::new(weights.clone())?;
            let r = inst.verify_mu(&rho)?;
            pass &= r.pass();
            rows.push(MuCheckJson {
                weights: weights.clone(),
                pass: r.pass(),
                lhs: rat_string(&r.lhs),
                rhs: rat_string(&r.flat_rhs),
                block_mu: r.block_mu.iter().map(rat_string).collect(),
            });
        }
        checks.mu = Some(rows);
    }

    let payload = VerifyChainPayload {
        n_vars: inst.n_vars(),
        degree: args.degree,
        variant: match variant {
            TVariant::Proof => "proof",
            TVariant::Statement => "statement",
        },
        boundaries: inst.boundaries().to_vec(),
        q: inst.full().q(),
        tau: inst.tau(),
        checks,
    };
    let mut params = vec![
        args.degree.to_string(),
        payload.variant.to_string(),
        args.check
            .iter()
            .map(|c| format!("{c:?}"))
            .collect::<Vec<_>>()
            .join(","),
    ];
    params.extend(args.mu_weights.iter().cloned());
    let report = RunReport {
        command: "verify-chain",
        digest: input_digest("verify-chain", &bytes, &params),
        outcome: if pass { "pass" } else { "fail" },
        payload,
        timing: None,
    };
    Ok((report, pass))
}

fn cmd_gotzmann(args: &GotzmannArgs) -> Result<(RunReport<GotzmannPayload>, bool), Error> {
    let coeffs = parse_rational_vector(&args.hilbert)?;
    let representation = gotzmann_representation(&coeffs, DEFAULT_TERM_CAP)?;
    let payload = GotzmannPayload {
        coefficients: coeffs.iter().map(rat_string).collect(),
        gotzmann_number: representation.len() as u64,
        representation,
    };
    let report = RunReport {
        command: "gotzmann",
        digest: input_digest("gotzmann", &[], &[args.hilbert.clone()]),
        outcome: "value",
        payload,
        timing: None,
    };
    Ok((report, true))
}

fn finish<P: serde::Serialize>(
    started: Instant,
    timings: bool,
    outcome: Result<(RunReport<P>, bool), Error>,
) -> ExitCode {
    match outcome {
        Ok((mut report, pass)) => {
            if timings {
                report.timing = Some(Timing {
                    millis: started.elapsed().as_millis(),
                });
            }
            report.print();
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => fail(err),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: cannot size the thread pool: {e}");
            return ExitCode::from(2);
        }
    }
    let started = Instant::now();
    match &cli.command {
        Command::States(args) => finish(started, cli.timings, cmd_states(&cli, args)),
        Command::Mu(args) => finish(started, cli.timings, cmd_mu(&cli, args)),
        Command::VerifyChain(args) => finish(started, cli.timings, cmd_verify_chain(&cli, args)),
        Command::Gotzmann(args) => finish(started, cli.timings, cmd_gotzmann(args)),
    }
}

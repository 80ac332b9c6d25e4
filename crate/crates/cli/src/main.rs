//! `comin`: decide and enumerate feasible Schubert problems on cominuscule
//! flag varieties.
//!
//! Exit codes: 0 success, 1 infeasible verdict (`feasible`) or a reported
//! disagreement (`verify`, `horn compare`, `conjecture naive-lg`), 2 usage
//! or input error, 3 enumeration cap exceeded.

mod render;

use clap::{Args, Parser, Subcommand, ValueEnum};
use comin::feasibility::{Caps, Mode, Solver, DEFAULT_TUPLE_CAP};
use comin::horn::{self, LambdaSource};
use comin::notation::{format_position, parse_position};
use comin::oracles::{self, OracleKind};
use comin::orbit::{m_of_p, max_rank};
use comin::space::{build_space, Position, Space, DEFAULT_IDEAL_CAP};
use comin::Error;
use render::Rendered;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser, Debug)]
#[command(name = "comin", version, about = "Feasibility of Schubert problems on cominuscule flag varieties")]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

/// Settings shared by every subcommand; each can also be set through a
/// `COMIN_` environment variable.
#[derive(Args, Debug)]
struct Config {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text, env = "COMIN_FORMAT")]
    format: Format,
    /// Which λ-tuples the recursion ranges over.
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Top, env = "COMIN_MODE")]
    mode: ModeArg,
    /// Product rule used by `verify` and as the λ source of `conjecture naive-lg`.
    #[arg(long, global = true, value_enum, default_value_t = OracleArg::Auto, env = "COMIN_ORACLE")]
    oracle: OracleArg,
    /// Maximum number of order ideals enumerated for one space.
    #[arg(long, global = true, default_value_t = DEFAULT_IDEAL_CAP, env = "COMIN_IDEAL_CAP", value_parser = positive)]
    ideal_cap: usize,
    /// Maximum number of tuples examined by one enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_TUPLE_CAP, env = "COMIN_TUPLE_CAP", value_parser = positive)]
    tuple_cap: usize,
    /// Report timings on stderr.
    #[arg(short, long, global = true, env = "COMIN_VERBOSE")]
    verbose: bool,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Top,
    Full,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Top => Mode::Top,
            ModeArg::Full => Mode::Full,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OracleArg {
    Lr,
    Shifted,
    Quadric,
    Auto,
}

impl From<OracleArg> for OracleKind {
    fn from(o: OracleArg) -> OracleKind {
        match o {
            OracleArg::Lr => OracleKind::Lr,
            OracleArg::Shifted => OracleKind::Shifted,
            OracleArg::Quadric => OracleKind::Quadric,
            OracleArg::Auto => OracleKind::Auto,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Describe a space or its orbit data.
    #[command(subcommand)]
    Space(SpaceCommand),
    /// Decide whether a tuple of Schubert positions is feasible.
    Feasible {
        space: String,
        #[arg(required = true)]
        positions: Vec<String>,
    },
    /// List the feasible s-tuples (top-degree unless --all).
    Enumerate {
        space: String,
        #[arg(short, long)]
        s: usize,
        /// Include tuples below top degree.
        #[arg(long)]
        all: bool,
    },
    /// Print the linear inequalities cutting out the feasible s-tuples.
    Inequalities {
        space: String,
        #[arg(short, long)]
        s: usize,
    },
    /// Compare the recursion with a product rule on every top-degree s-tuple.
    Verify {
        space: String,
        #[arg(short, long)]
        s: usize,
    },
    /// Horn recursions on Grassmannians.
    #[command(subcommand)]
    Horn(HornCommand),
    /// Conjecture checks.
    #[command(subcommand)]
    Conjecture(ConjectureCommand),
}

#[derive(Subcommand, Debug)]
enum SpaceCommand {
    /// Root system, marked node, dimension and number of positions.
    Info { space: String },
    /// The orbit data: rank, dim z and the Levi quotient for each r.
    Orbits { space: String },
}

#[derive(Subcommand, Debug)]
enum HornCommand {
    /// Classical Horn, one-factor Horn, the recursion and the
    /// Littlewood-Richardson rule on every top-degree s-tuple of Gr(k,n).
    Compare {
        space: String,
        #[arg(short, long)]
        s: usize,
    },
}

#[derive(Subcommand, Debug)]
enum ConjectureCommand {
    /// Naive inequalities on LG(n) against the shifted rule.
    NaiveLg {
        #[arg(short, long)]
        n: usize,
        #[arg(short, long, default_value_t = 3)]
        s: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = run(&cli);
    if cli.config.verbose {
        eprintln!("elapsed {:.3?}", start.elapsed());
    }
    match result {
        Ok(out) => {
            match cli.config.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("serialisable output")),
                Format::Text => print!("{}", out.text),
            }
            out.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::CapExceeded { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn space_of(text: &str) -> comin::Result<Space> {
    build_space(text)
}

fn positions_of(space: &Space, texts: &[String]) -> comin::Result<Vec<Position>> {
    texts.iter().map(|t| parse_position(space, t)).collect()
}

fn gr_shape(space: &Space) -> comin::Result<(usize, usize)> {
    match space.factors.as_slice() {
        [f] => match f.kind() {
            comin::space::SpaceKind::Grassmannian { k, n } => Ok((k, n)),
            _ => Err(Error::InvalidArgument(format!("{} is not a Grassmannian", space.name()))),
        },
        _ => Err(Error::InvalidArgument(format!("{} is not a Grassmannian", space.name()))),
    }
}

/// All ordered `s`-tuples of positions with codimensions summing to `dim`.
fn top_tuples(space: &Space, s: usize, cap: usize) -> comin::Result<Vec<Vec<Position>>> {
    let all = space.enumerate_positions(cap, None)?;
    let codims: Vec<usize> = all.iter().map(|p| space.codim(p)).collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(s);
    fn go(
        all: &[Position],
        codims: &[usize],
        s: usize,
        left: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<Position>>,
        cap: usize,
    ) -> comin::Result<()> {
        if cur.len() == s {
            if left == 0 {
                if out.len() >= cap {
                    return Err(Error::CapExceeded { what: format!("{s}-tuples"), cap });
                }
                out.push(cur.iter().map(|&i| all[i].clone()).collect());
            }
            return Ok(());
        }
        for i in 0..all.len() {
            if codims[i] <= left {
                cur.push(i);
                go(all, codims, s, left - codims[i], cur, out, cap)?;
                cur.pop();
            }
        }
        Ok(())
    }
    go(&all, &codims, s, space.dim(), &mut cur, &mut out, cap)?;
    Ok(out)
}

fn run(cli: &Cli) -> comin::Result<Rendered> {
    let cfg = &cli.config;
    let solver = Solver::new(Caps { ideals: cfg.ideal_cap, tuples: cfg.tuple_cap });
    let mode: Mode = cfg.mode.into();
    match &cli.command {
        Command::Space(SpaceCommand::Info { space }) => {
            let space = space_of(space)?;
            let mut factors = Vec::new();
            for f in &space.factors {
                factors.push(render::FactorInfo {
                    name: f.name(),
                    root_system: f.root_system().name(),
                    node: f.node() + 1,
                    dim: f.dim(),
                    positions: f.enumerate_positions(cfg.ideal_cap, None)?.len(),
                    max_orbit_rank: max_rank(f),
                });
            }
            Ok(render::space_info(&space, factors))
        }
        Command::Space(SpaceCommand::Orbits { space }) => {
            let space = space_of(space)?;
            let mut rows = Vec::new();
            for (j, f) in space.factors.iter().enumerate() {
                for d in m_of_p(f)?.iter() {
                    rows.push(render::OrbitRow {
                        factor: j,
                        r: d.r,
                        dim_z: d.dim_z(),
                        levi_quotient: d.levi_quotient().name(),
                        omitted: d.omitted.iter().map(|&v| v + 1).collect(),
                        lambdas: d.num_lambdas(),
                    });
                }
            }
            Ok(render::orbits(&space, rows))
        }
        Command::Feasible { space, positions } => {
            let space = space_of(space)?;
            let pos = positions_of(&space, positions)?;
            let report = solver.is_feasible(&space, &pos, mode)?;
            render::feasible(&space, &pos, &report, mode)
        }
        Command::Enumerate { space, s, all } => {
            let space = space_of(space)?;
            let tuples = solver.enumerate_feasible(&space, *s, !all, mode)?;
            Ok(render::enumerate(&space, *s, !all, &tuples))
        }
        Command::Inequalities { space, s } => {
            let space = space_of(space)?;
            let list = solver.emit_inequalities(&space, *s)?;
            Ok(render::inequalities(&space, *s, &list))
        }
        Command::Verify { space, s } => {
            let space = space_of(space)?;
            let oracle: OracleKind = cfg.oracle.into();
            let mut checked = 0;
            let mut feasible = 0;
            let mut mismatches = Vec::new();
            for t in top_tuples(&space, *s, cfg.tuple_cap)? {
                let rec = solver.is_feasible(&space, &t, mode)?.feasible;
                let truth = oracles::product_nonzero(&space, &t, oracle)?;
                checked += 1;
                feasible += truth as usize;
                if rec != truth {
                    mismatches.push(render::Mismatch {
                        tuple: t.iter().map(|p| format_position(&space, p)).collect(),
                        recursion: rec,
                        oracle: truth,
                    });
                }
            }
            Ok(render::verify(&space, *s, oracle, checked, feasible, mismatches))
        }
        Command::Horn(HornCommand::Compare { space, s }) => {
            let space = space_of(space)?;
            let (k, n) = gr_shape(&space)?;
            let c = horn::compare_gr(k, n, *s)?;
            Ok(render::horn_compare(&space, *s, &c))
        }
        Command::Conjecture(ConjectureCommand::NaiveLg { n, s }) => {
            if *n == 0 || *s == 0 {
                return Err(Error::InvalidArgument("need n ≥ 1 and s ≥ 1".into()));
            }
            let source = match cfg.oracle {
                OracleArg::Lr => LambdaSource::Oracle,
                OracleArg::Auto => LambdaSource::Recursion,
                other => {
                    return Err(Error::InvalidArgument(format!(
                        "λ-tuples live on Grassmannians; --oracle {} does not apply",
                        OracleKind::from(other)
                    )))
                }
            };
            let c = horn::compare_naive_lg(*n, *s, source)?;
            Ok(render::naive_lg(*n, *s, source, &c))
        }
    }
}

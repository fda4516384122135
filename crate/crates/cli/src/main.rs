//! `schubitope`: command-line access to the library.
//!
//! Output is JSON on stdout unless `--pretty` is given. Exit codes: 0 on
//! success, 1 when a verification sweep finds a counterexample, 2 on
//! malformed input, 3 when a size cap is exceeded, 4 on an internal error.

mod render;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use schubitope::algebra::{key, schubert, Composition, Permutation};
use schubitope::diagram::{rothe, skyline, Diagram, DiagramJson};
use schubitope::matroid::{SchubertMatroid, DEFAULT_BASIS_CAP};
use schubitope::polytope::{schubitope as build_schubitope, DEFAULT_POINT_CAP};
use schubitope::subset::Subset;
use schubitope::verify::{self, SweepOptions, SweepReport, DEFAULT_SEED};
use schubitope::weyl::{chi_character_with, chi_support_with, CharacterLimits};
use schubitope::Error;

#[derive(Debug, Parser)]
#[command(name = "schubitope", version, about = "Schubert and key polynomials, Schubitopes and flagged Weyl module characters")]
struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,

    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Schubert polynomial of a permutation.
    Schubert {
        /// One-line notation: digits ("41532") for n <= 9, else comma-separated.
        #[arg(long)]
        perm: String,
    },
    /// Key polynomial of a composition.
    Key {
        /// Comma-separated parts, e.g. "3,2,1,0,1".
        #[arg(long)]
        comp: String,
    },
    /// Rothe diagram of a permutation.
    Rothe {
        #[arg(long)]
        perm: String,
    },
    /// Skyline diagram of a composition.
    Skyline {
        #[arg(long)]
        comp: String,
    },
    /// Dual character of the flagged Weyl module of a diagram.
    Chi {
        /// Diagram JSON file, or "-" for stdin.
        #[arg(long, value_name = "FILE")]
        diagram: String,
        /// Only the support {xi^C : C <= D}.
        #[arg(long, conflicts_with = "full_character")]
        support_only: bool,
        /// The character with multiplicities (the default).
        #[arg(long)]
        full_character: bool,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Schubitope of a diagram.
    Schubitope {
        #[arg(long, value_name = "FILE")]
        diagram: String,
        /// Print the bounds z_I (the default).
        #[arg(long, conflicts_with = "lattice_points")]
        inequalities: bool,
        /// Print the lattice points.
        #[arg(long)]
        lattice_points: bool,
        #[arg(long, default_value_t = DEFAULT_POINT_CAP)]
        point_cap: usize,
    },
    /// Schubert matroid SM_n(s).
    Matroid {
        #[arg(long)]
        n: usize,
        /// Defining set, comma-separated (may be empty).
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        /// List the bases (the default).
        #[arg(long, conflicts_with = "rank")]
        bases: bool,
        /// Rank of the given comma-separated set.
        #[arg(long, value_name = "I")]
        rank: Option<String>,
        #[arg(long, default_value_t = DEFAULT_BASIS_CAP)]
        basis_cap: usize,
    },
    /// Exhaustive verification sweeps.
    Verify {
        #[command(subcommand)]
        sweep: Sweep,
    },
}

#[derive(Debug, Args, Clone, Copy)]
struct LimitArgs {
    /// Maximum number of diagrams C <= D to enumerate.
    #[arg(long, default_value_t = CharacterLimits::default().diagram_cap)]
    diagram_cap: usize,
    /// Maximum entries of one weight-space matrix.
    #[arg(long, default_value_t = CharacterLimits::default().matrix_cap)]
    matrix_cap: usize,
}

impl LimitArgs {
    fn limits(self) -> CharacterLimits {
        CharacterLimits { diagram_cap: self.diagram_cap, matrix_cap: self.matrix_cap }
    }
}

#[derive(Debug, Args, Clone, Copy)]
struct SweepArgs {
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Stop at the first counterexample.
    #[arg(long)]
    fail_fast: bool,
    /// Worker threads (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Report elapsed_ms as 0 so that output is reproducible byte for byte.
    #[arg(long)]
    no_timing: bool,
    #[arg(long, default_value_t = DEFAULT_POINT_CAP)]
    point_cap: usize,
    #[command(flatten)]
    limits: LimitArgs,
}

impl SweepArgs {
    fn options(self) -> SweepOptions {
        SweepOptions {
            jobs: self.jobs,
            fail_fast: self.fail_fast,
            seed: self.seed,
            limits: self.limits.limits(),
            point_cap: self.point_cap,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Sweep {
    /// All w in S_n: support = Schubitope lattice points = {xi^C}.
    Schubert {
        #[arg(long, default_value_t = 5)]
        n: usize,
        /// Also compare the full dual character with the Schubert polynomial.
        #[arg(long)]
        full_character: bool,
        #[command(flatten)]
        common: SweepArgs,
    },
    /// All compositions with bounded parts and length.
    Key {
        #[arg(long, default_value_t = 3)]
        max_part: u32,
        #[arg(long, default_value_t = 3)]
        max_len: usize,
        #[arg(long)]
        full_character: bool,
        #[command(flatten)]
        common: SweepArgs,
    },
    /// theta = rank on one-column, Rothe, skyline and random diagrams.
    Theta {
        /// Largest one-column grid, and the Rothe diagrams of S_n.
        #[arg(long, default_value_t = 5)]
        n: usize,
        /// Random diagrams per grid size 3..=6.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[command(flatten)]
        common: SweepArgs,
    },
    /// Lattice points of every Schubert matroid polytope are its vertices.
    Matroid {
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[command(flatten)]
        common: SweepArgs,
    },
}

enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

/// What to print: JSON, and the human rendering for `--pretty`.
struct Output {
    json: Value,
    pretty: String,
    counterexample: bool,
}

impl Output {
    fn new(json: Value, pretty: String) -> Self {
        Output { json, pretty, counterexample: false }
    }
}

fn read_diagram(path: &str) -> Result<Diagram, Failure> {
    let text = if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Io(format!("reading stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Io(format!("reading {path}: {e}")))?
    };
    let json: DiagramJson = serde_json::from_str(&text)
        .map_err(|e| Failure::Lib(Error::Malformed(format!("diagram JSON: {e}"))))?;
    Ok(Diagram::from_json(&json)?)
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn sweep_output(report: SweepReport, no_timing: bool) -> Output {
    let mut report = report;
    if no_timing {
        report.elapsed_ms = 0;
    }
    let counterexample = !report.all_passed();
    let pretty = render::reports(std::slice::from_ref(&report));
    Output { json: to_value(&report), pretty, counterexample }
}

fn run(cmd: Command) -> Result<Output, Failure> {
    Ok(match cmd {
        Command::Schubert { perm } => {
            let f = schubert(&perm.parse::<Permutation>()?)?;
            Output::new(to_value(&f.to_json()), f.to_string())
        }
        Command::Key { comp } => {
            let f = key(&comp.parse::<Composition>()?)?;
            Output::new(to_value(&f.to_json()), f.to_string())
        }
        Command::Rothe { perm } => {
            let d = rothe(&perm.parse::<Permutation>()?)?;
            Output::new(to_value(&d.to_json()), render::diagram(&d))
        }
        Command::Skyline { comp } => {
            let d = skyline(&comp.parse::<Composition>()?)?;
            Output::new(to_value(&d.to_json()), render::diagram(&d))
        }
        Command::Chi { diagram, support_only, full_character: _, limits } => {
            let d = read_diagram(&diagram)?;
            if support_only {
                let pts = chi_support_with(&d, &limits.limits())?;
                Output::new(json!(pts.to_json()), render::points(&pts))
            } else {
                let f = chi_character_with(&d, &limits.limits())?;
                Output::new(to_value(&f.to_json()), f.to_string())
            }
        }
        Command::Schubitope { diagram, inequalities: _, lattice_points, point_cap } => {
            let gp = build_schubitope(&read_diagram(&diagram)?)?;
            if lattice_points {
                let pts = gp.lattice_points_with_cap(point_cap)?;
                Output::new(json!(pts.to_json()), render::points(&pts))
            } else {
                Output::new(to_value(&gp.to_json()), render::inequalities(&gp))
            }
        }
        Command::Matroid { n, s, bases: _, rank, basis_cap } => {
            let m = SchubertMatroid::new(n, Subset::parse_in(n, &s)?)?;
            match rank {
                Some(set) => {
                    let set = Subset::parse_in(n, &set)?;
                    // the bases are enumerated to honor the cap
                    let bases = m.bases_with_cap(basis_cap)?;
                    let r = bases.iter().map(|b| b.intersection(set).len()).max().unwrap_or(0);
                    Output::new(json!(r), r.to_string())
                }
                None => {
                    let bases = m.bases_with_cap(basis_cap)?;
                    let lists: Vec<Vec<usize>> = bases.iter().map(|b| b.to_vec()).collect();
                    let pretty = bases.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n");
                    Output::new(json!(lists), pretty)
                }
            }
        }
        Command::Verify { sweep } => run_sweep(sweep)?,
    })
}

fn run_sweep(sweep: Sweep) -> Result<Output, Failure> {
    let (report, no_timing) = match sweep {
        Sweep::Schubert { n, full_character, common } => {
            let opts = common.options();
            let r = if full_character {
                verify::sweep_schubert_characters(n, &opts)?
            } else {
                verify::sweep_schubert(n, &opts)?
            };
            (r, common.no_timing)
        }
        Sweep::Key { max_part, max_len, full_character, common } => {
            let opts = common.options();
            let r = if full_character {
                verify::sweep_key_characters(max_part, max_len, &opts)?
            } else {
                verify::sweep_key(max_part, max_len, &opts)?
            };
            (r, common.no_timing)
        }
        Sweep::Theta { n, samples, common } => {
            let mut corpus = verify::one_column_corpus(n);
            corpus.extend(verify::rothe_corpus(n));
            corpus.extend(verify::skyline_corpus(3, 3));
            corpus.extend(verify::random_corpus(common.seed, 3..=6, samples));
            let r = verify::sweep_theta_rank(&format!("theta-rank-n{n}"), &corpus, &common.options())?;
            (r, common.no_timing)
        }
        Sweep::Matroid { n, common } => {
            (verify::sweep_matroid_polytopes(n, &common.options())?, common.no_timing)
        }
    };
    Ok(sweep_output(report, no_timing))
}

fn emit(cli_output: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match cli_output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Io(format!("writing {}: {e}", path.display()))),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|()| out.flush())
                .map_err(|e| Failure::Io(format!("writing stdout: {e}")))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(cli.command).and_then(|out| {
        let mut text = if cli.pretty {
            out.pretty
        } else {
            serde_json::to_string(&out.json).expect("JSON values serialize")
        };
        if !text.ends_with('\n') {
            text.push('\n');
        }
        emit(&cli.output, &text)?;
        Ok(out.counterexample)
    });
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Malformed(_) => 2,
                Error::CapExceeded { .. } => 3,
                Error::Internal(_) => 4,
            })
        }
    }
}

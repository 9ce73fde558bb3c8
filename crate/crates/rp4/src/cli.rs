//! The `rp4` command line. Exit codes: 0 success, 1 check failed, 2 usage
//! or malformed input.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rp4_core::complex::{
    cross_polytope_boundary, simplex_boundary, Simplex, SimplicialComplex,
};
use rp4_core::constructions::{self as cons, ConstructionError};
use rp4_core::designs::{self, Design};
use rp4_core::flips::{apply_flip, ReduceConfig};
use rp4_core::homology::homology;
use rp4_core::manifold::is_antipodal;
use rp4_core::symmetry::{are_isomorphic, automorphism_group, format_cycles};

use crate::io::{self, format_complex, Format, IoError};
use crate::parallel;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "rp4", version, about = "Build and check triangulations of projective space")]
pub struct Cli {
    /// Worker threads for link checks and restarts (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct SearchArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Move budget per search.
    #[arg(long, default_value_t = 20_000)]
    pub budget: usize,
    #[arg(long, default_value_t = 1)]
    pub restarts: usize,
}

impl SearchArgs {
    fn config(&self) -> ReduceConfig {
        ReduceConfig { seed: self.seed, budget: self.budget, restarts: self.restarts, ..ReduceConfig::default() }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate a named complex.
    Gen {
        /// x6, x12, x32, s4-32, rp4-c1, rp4-c2, rp4-c3, rp4-k6, rp2-6, rp3-11,
        /// kuehnel:<n>, simplex:<n>, crosspoly:<n>
        name: String,
        #[arg(short, long, default_value = "-")]
        output: String,
        #[arg(long, value_enum, default_value_t = Format::Fl)]
        format: Format,
        /// Also write every intermediate complex into this directory.
        #[arg(long)]
        stages: Option<PathBuf>,
    },
    /// Print the f-vector and Euler characteristic.
    Fvector { file: String },
    /// Print integer homology, one line per dimension.
    Homology { file: String },
    /// Print the automorphism group: order, generators, orbit sizes.
    Aut { file: String },
    /// Exit 0 with a bijection if the complexes are isomorphic, else 1.
    Iso { a: String, b: String },
    /// Exit 0 iff the input is a closed pseudomanifold with every vertex
    /// link certified a sphere.
    Manifold {
        file: String,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Check an involution for antipodality.
    Antipodal {
        file: String,
        /// Involution in cycle notation, e.g. "(1 2)(3 4)".
        #[arg(long)]
        inv: String,
    },
    /// Quotient by an antipodal involution.
    Quotient {
        file: String,
        #[arg(long)]
        inv: String,
        #[arg(short, long, default_value = "-")]
        output: String,
        #[arg(long, value_enum, default_value_t = Format::Fl)]
        format: Format,
    },
    /// Reduce by bistellar flips; prints the move trace, one move per line.
    Reduce {
        file: String,
        #[command(flatten)]
        search: SearchArgs,
        /// Write the reduced complex here.
        #[arg(short, long)]
        output: Option<String>,
        /// Replay this trace instead of searching, then print the result.
        #[arg(long, conflicts_with_all = ["seed", "budget", "restarts"])]
        replay: Option<String>,
    },
    /// Block designs from K_6.
    Design {
        #[arg(value_enum)]
        name: DesignName,
        /// Edge, matching and factorization tables.
        #[arg(long)]
        table: bool,
        /// Exit 0 iff the design has its stated parameters.
        #[arg(long)]
        verify: bool,
        /// One block per line.
        #[arg(long)]
        blocks: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DesignName {
    K6,
    Witt22,
    BiplaneE,
    BiplaneM,
    DesignE,
    DesignM,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] IoError),
    #[error("{0}")]
    Construction(ConstructionError),
}

impl From<ConstructionError> for CliError {
    fn from(e: ConstructionError) -> Self {
        CliError::Construction(e)
    }
}

/// Output of a command: text for stdout and the exit code.
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: EXIT_OK }
    }

    fn check(stdout: String, passed: bool) -> Self {
        Outcome { stdout, code: if passed { EXIT_OK } else { EXIT_FAILED } }
    }
}

/// Parses `args` (including the program name), runs the command, prints
/// its output and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(&cli) {
        Ok(out) => {
            if !out.stdout.is_empty() {
                if let Err(e) = io::write_sink("-", &out.stdout) {
                    eprintln!("rp4: {e}");
                    return EXIT_USAGE;
                }
            }
            out.code
        }
        Err(e) => {
            eprintln!("rp4: {e}");
            match e {
                CliError::Construction(_) => EXIT_FAILED,
                _ => EXIT_USAGE,
            }
        }
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let jobs = parallel::worker_count(cli.jobs);
    match &cli.command {
        Command::Gen { name, output, format, stages } => {
            let generated = generate(name)?;
            if let Some(dir) = stages {
                std::fs::create_dir_all(dir)
                    .map_err(|source| IoError::Io { path: dir.display().to_string(), source })?;
                for (stage, c) in &generated.stages {
                    let path = dir.join(format!("{stage}.fl"));
                    io::write_sink(&path.to_string_lossy(), &io::format_fl(c))?;
                }
            }
            let text = format_complex(&generated.complex, *format);
            if output == "-" {
                Ok(Outcome::ok(text))
            } else {
                io::write_sink(output, &text)?;
                Ok(Outcome::ok(String::new()))
            }
        }
        Command::Fvector { file } => {
            let c = io::load_complex(file)?;
            let f: Vec<String> = c.f_vector().0.iter().map(usize::to_string).collect();
            Ok(Outcome::ok(format!("dim={}\nf={}\nchi={}\n", c.dim(), f.join(","), c.euler_characteristic())))
        }
        Command::Homology { file } => {
            let c = io::load_complex(file)?;
            let mut out = String::new();
            for (k, h) in homology(&c).iter().enumerate() {
                let _ = writeln!(out, "H_{k} = {h}");
            }
            Ok(Outcome::ok(out))
        }
        Command::Aut { file } => {
            let c = io::load_complex(file)?;
            let g = automorphism_group(&c);
            let mut out = format!("order={}\n", g.order);
            for p in &g.generators {
                let _ = writeln!(out, "generator={}", format_cycles(p));
            }
            let join = |xs: Vec<usize>| xs.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
            let _ = writeln!(out, "vertex_orbits={}", join(g.vertex_orbit_sizes()));
            let _ = writeln!(out, "facet_orbits={}", join(g.facet_orbit_sizes()));
            Ok(Outcome::ok(out))
        }
        Command::Iso { a, b } => {
            let (ca, cb) = (io::load_complex(a)?, io::load_complex(b)?);
            match are_isomorphic(&ca, &cb) {
                Some(map) => {
                    let mut out = String::from("isomorphic=true\n");
                    for (x, y) in &map {
                        let _ = writeln!(out, "{x}={y}");
                    }
                    Ok(Outcome::ok(out))
                }
                None => Ok(Outcome::check(String::from("isomorphic=false\n"), false)),
            }
        }
        Command::Manifold { file, search } => {
            let c = io::load_complex(file)?;
            let report = parallel::check_manifold(&c, &search.config(), jobs);
            let mut out = format!("closed_pseudomanifold={}\n", report.pseudomanifold.closed);
            if let Some((ridge, n)) = &report.pseudomanifold.bad_ridge {
                let _ = writeln!(out, "bad_ridge={ridge} facets={n}");
            }
            if report.pseudomanifold.components != 1 {
                let _ = writeln!(out, "components={}", report.pseudomanifold.components);
            }
            for (v, status) in &report.links {
                let _ = writeln!(out, "link {v}={status}");
            }
            let certified = report.links.iter().filter(|(_, s)| s.is_sphere()).count();
            let _ = writeln!(out, "certified={certified}/{}", c.n_vertices());
            Ok(Outcome::check(out, report.all_certified()))
        }
        Command::Antipodal { file, inv } => {
            let c = io::load_complex(file)?;
            let sigma = io::parse_involution(inv, &c)?;
            let report = is_antipodal(&c, &sigma);
            let mut out = format!("antipodal={}\n", report.is_antipodal());
            if let Some(d) = report.min_distance {
                let _ = writeln!(out, "min_distance={d}");
            }
            if let Some(f) = &report.failure {
                let _ = writeln!(out, "failure={f}");
            }
            Ok(Outcome::check(out, report.is_antipodal()))
        }
        Command::Quotient { file, inv, output, format } => {
            let c = io::load_complex(file)?;
            let sigma = io::parse_involution(inv, &c)?;
            let report = is_antipodal(&c, &sigma);
            if let Some(f) = report.failure {
                return Ok(Outcome::check(format!("antipodal=false\nfailure={f}\n"), false));
            }
            let q = c.quotient(&sigma).map_err(ConstructionError::from)?;
            let text = format_complex(&q, *format);
            if output == "-" {
                Ok(Outcome::ok(text))
            } else {
                io::write_sink(output, &text)?;
                Ok(Outcome::ok(String::new()))
            }
        }
        Command::Reduce { file, search, output, replay } => {
            let c = io::load_complex(file)?;
            if let Some(trace) = replay {
                let moves = io::parse_trace(&io::read_source(trace)?)?;
                let mut current = c;
                for (i, mv) in moves.iter().enumerate() {
                    current = apply_flip(&current, mv)
                        .map_err(|e| CliError::Usage(format!("move {} ({mv}): {e}", i + 1)))?;
                }
                return Ok(Outcome::ok(format_complex(&current, Format::Fl)));
            }
            let report = parallel::reduce_restarts(&c, &search.config(), jobs)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            if let Some(path) = output {
                io::write_sink(path, &io::format_fl(&report.complex))?;
            }
            let f: Vec<String> = report.complex.f_vector().0.iter().map(usize::to_string).collect();
            eprintln!(
                "certified={} moves={} trace={} restart={} f={}",
                report.certified,
                report.moves_used,
                report.trace.len(),
                report.restart,
                f.join(",")
            );
            Ok(Outcome::check(io::format_trace(&report.trace), report.certified))
        }
        Command::Design { name, table, verify, blocks } => design(*name, *table, *verify, *blocks),
    }
}

/// A generated complex and its named intermediate stages.
pub struct Generated {
    pub complex: SimplicialComplex,
    pub stages: Vec<(String, SimplicialComplex)>,
}

fn stage_facets(name: String, facets: &[Simplex]) -> Result<(String, SimplicialComplex), CliError> {
    let c = SimplicialComplex::new(facets.iter().cloned()).map_err(ConstructionError::from)?;
    Ok((name, c))
}

fn parse_size(name: &str, arg: &str) -> Result<usize, CliError> {
    arg.parse().map_err(|_| CliError::Usage(format!("{name}: expected a non-negative integer, got {arg:?}")))
}

/// Builds one of the named complexes.
pub fn generate(name: &str) -> Result<Generated, CliError> {
    let plain = |complex| Ok(Generated { complex, stages: Vec::new() });
    if let Some((kind, arg)) = name.split_once(':') {
        let n = parse_size(kind, arg)?;
        return match kind {
            "kuehnel" => plain(cons::kuehnel_rp(n)?),
            "simplex" if n >= 1 => plain(simplex_boundary(n)),
            "crosspoly" if n >= 1 => plain(cross_polytope_boundary(n)),
            "simplex" | "crosspoly" => Err(CliError::Usage(format!("{kind}: n must be at least 1"))),
            _ => Err(CliError::Usage(format!("unknown generator {name:?}"))),
        };
    }
    match name {
        "x6" | "x12" | "x32" | "s4-32" | "rp4-c1" => {
            let c = cons::c1_pipeline()?;
            let stages = vec![
                ("x6".to_string(), c.x6.clone()),
                ("x12".to_string(), c.x12.clone()),
                ("x32".to_string(), c.x32.clone()),
                ("after-round1".to_string(), c.after_round1.clone()),
                ("s4-32".to_string(), c.s4_32.clone()),
                ("rp4".to_string(), c.rp4.clone()),
            ];
            let complex = stages.iter().find(|(s, _)| s == name).map_or_else(|| c.rp4.clone(), |(_, x)| x.clone());
            Ok(Generated { complex, stages })
        }
        "rp4-c2" => {
            let c = cons::c2_pipeline()?;
            let mut stages = Vec::new();
            for (k, s) in c.stages.iter().enumerate() {
                stages.push(stage_facets(format!("stage{}", k + 1), s)?);
            }
            stages.push(("ball".to_string(), c.ball.clone()));
            stages.push(("ball-boundary".to_string(), c.x3_boundary.clone()));
            stages.push(("rp4".to_string(), c.rp4.clone()));
            Ok(Generated { complex: c.rp4, stages })
        }
        "rp4-c3" => {
            let c = cons::c3_pipeline()?;
            let mut stages = Vec::new();
            for (k, s) in c.stages.iter().enumerate() {
                stages.push(stage_facets(format!("stage{}", k + 1), s)?);
            }
            stages.push(("ball".to_string(), c.ball.clone()));
            stages.push(("ball-boundary".to_string(), c.boundary.clone()));
            stages.push(("rp4".to_string(), c.rp4.clone()));
            Ok(Generated { complex: c.rp4, stages })
        }
        "rp4-k6" => plain(cons::rp4_from_k6()?),
        "rp2-6" => plain(cons::rp2_6()),
        "rp3-11" => plain(cons::rp3_11()?),
        _ => Err(CliError::Usage(format!("unknown generator {name:?}"))),
    }
}

fn design(name: DesignName, table: bool, verify: bool, blocks: bool) -> Result<Outcome, CliError> {
    let k6 = designs::build_k6();
    if name == DesignName::K6 {
        if verify || blocks {
            return Err(CliError::Usage("k6 only supports --table".to_string()));
        }
        return Ok(Outcome::ok(k6.tables()));
    }
    if table {
        return Err(CliError::Usage("--table is only for k6".to_string()));
    }
    let (d, params): (Design, (usize, usize, usize, usize)) = match name {
        DesignName::Witt22 => (designs::witt22(&k6), (3, 22, 6, 1)),
        DesignName::BiplaneE => (designs::biplane_e(&k6), (2, 16, 6, 2)),
        DesignName::BiplaneM => (designs::biplane_m(&k6), (2, 16, 6, 2)),
        DesignName::DesignE => (designs::design_e(&k6), (2, 10, 4, 2)),
        DesignName::DesignM => (designs::design_m(&k6), (2, 10, 4, 2)),
        DesignName::K6 => unreachable!("handled above"),
    };
    let mut out = String::new();
    if blocks {
        out.push_str(&d.render_blocks());
    }
    let mut passed = true;
    if verify || !blocks {
        let (t, v, k, lambda) = params;
        let check = designs::verify_design(&d, t, v, k, lambda);
        let sizes: Vec<String> = d.intersection_sizes().iter().map(usize::to_string).collect();
        let _ = writeln!(out, "design={t}-({v},{k},{lambda})");
        let _ = writeln!(out, "blocks={}", d.blocks.len());
        let _ = writeln!(out, "intersections={}", sizes.join(","));
        let _ = writeln!(out, "verified={}", check.holds);
        if let Some((subset, count)) = &check.counterexample {
            let names: Vec<String> = subset.iter().map(|&p| designs::point_name(p)).collect();
            let _ = writeln!(out, "counterexample={} count={count}", names.join(" "));
        }
        passed = check.holds;
    }
    Ok(Outcome::check(out, passed))
}

//! `rectmatch`: generate instances, solve, verify, run the exact oracles,
//! compile 1-in-3 SAT formulas, benchmark and render.
//!
//! Exit codes: 0 success, 1 domain failure (a check failed, an oracle
//! refused, bad input data), 2 usage error.

mod bench;
mod svg;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use rectmatch::geometry::{candidate_bichromatic, candidate_monochromatic, Color, Coord, PointSet};
use rectmatch::matchers::{
    approx_mbrm, approx_mmrm, brute_force_max_matching_guarded, perfect_matching, verify_matching,
    Mode, SolveReport, MATCHING_GUARD,
};
use rectmatch::reductions::{
    bichromatize, blocking_gadget, compile_planar_1in3, monochromatize, random_instance, red_fill,
    variable_gadget, Clause, CombLayout, Formula, GadgetInstance, Literal, Side, VariableRecord,
};

const GUARD_VAR: &str = "RECTMATCH_ORACLE_GUARD";

#[derive(Parser)]
#[command(
    name = "rectmatch",
    version,
    about = "Strong rectangle matchings of colored point sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a point file: a random instance or one of the gadgets.
    Gen(GenArgs),
    /// Run a 1/4-approximation and write its report as JSON.
    Solve(SolveArgs),
    /// Check a reported matching against a point file.
    Verify(VerifyArgs),
    /// Exact maximum matching, or with --perfect the perfect-matching decision.
    Oracle(OracleArgs),
    /// Compile a planar 1-in-3 SAT formula into a point set and sidecar.
    CompileSat(CompileArgs),
    /// Approximation against the exact optimum on seeded random instances, as CSV.
    Bench(BenchArgs),
    /// Draw points and an optional matching as SVG.
    Render(RenderArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Mono,
    Bi,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Mono => Mode::Mono,
            ModeArg::Bi => Mode::Bi,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ColorArg {
    R,
    B,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Above,
    Below,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GenKind {
    /// `--n` distinct random points on the `[0..grid]²` lattice.
    #[arg(long)]
    random: bool,
    /// The 12-point blocking cluster.
    #[arg(long)]
    blocking: bool,
    /// A variable gadget of degree D, filled with red points.
    #[arg(long, value_name = "D")]
    variable: Option<usize>,
    /// A single compiled clause, e.g. `u,-v,w` (`-` negates).
    #[arg(long, value_name = "LITERALS", allow_hyphen_values = true)]
    clause: Option<String>,
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    kind: GenKind,
    #[arg(long, default_value_t = 12)]
    n: usize,
    #[arg(long, default_value_t = 20)]
    grid: u32,
    #[arg(long, default_value_t = 0.5)]
    red_fraction: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Color of the blocking cluster.
    #[arg(long, value_enum, default_value = "b")]
    color: ColorArg,
    /// Side of the clause comb.
    #[arg(long, value_enum, default_value = "above")]
    side: SideArg,
    /// Also write the gadget sidecar (allowed segments, variable numbering).
    #[arg(long, value_name = "FILE")]
    sidecar: Option<PathBuf>,
    #[arg(short, long, value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Alg {
    Approx,
}

#[derive(Args)]
struct SolveArgs {
    /// Point file, `-` for stdin.
    points: PathBuf,
    #[arg(long, value_enum)]
    mode: ModeArg,
    #[arg(long, value_enum, default_value = "approx")]
    alg: Alg,
    /// Also compute the optimum with the exact oracle.
    #[arg(long)]
    with_oracle: bool,
    #[arg(short, long, value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    points: PathBuf,
    /// A solve or oracle report.
    #[arg(long, value_name = "FILE")]
    matching: PathBuf,
    /// Also require every point to be matched.
    #[arg(long)]
    perfect: bool,
}

#[derive(Args)]
struct OracleArgs {
    points: PathBuf,
    #[arg(long, value_enum)]
    mode: ModeArg,
    /// Decide whether a perfect matching exists; prints `true` or `false`.
    #[arg(long)]
    perfect: bool,
    #[arg(short, long, value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Recolor {
    None,
    Mono,
    Bi,
}

#[derive(Args)]
struct CompileArgs {
    /// Formula JSON.
    #[arg(long, value_name = "FILE")]
    formula: PathBuf,
    /// Comb layout JSON; derived from the clause sides when absent.
    #[arg(long, value_name = "FILE")]
    layout: Option<PathBuf>,
    /// Emit the all-blue or bichromatic version instead. No sidecar is
    /// written for those: their point indices differ from the compiled
    /// instance.
    #[arg(long, value_enum, default_value = "none")]
    recolor: Recolor,
    /// Point file to write.
    #[arg(short, long, value_name = "FILE")]
    output: PathBuf,
    /// Sidecar JSON; defaults to `<output>.sidecar.json`.
    #[arg(long, value_name = "FILE")]
    sidecar: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchMode {
    Mono,
    Bi,
    Both,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, default_value_t = 100)]
    trials: u64,
    #[arg(long, default_value_t = 12)]
    n: usize,
    /// First seed; trial `t` uses `seed + t`.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 20)]
    grid: u32,
    #[arg(long, default_value_t = 0.5)]
    red_fraction: f64,
    #[arg(long, value_enum, default_value = "both")]
    mode: BenchMode,
    #[arg(short, long, value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct RenderArgs {
    points: PathBuf,
    /// A solve or oracle report whose rectangles are drawn.
    #[arg(long, value_name = "FILE")]
    matching: Option<PathBuf>,
    #[arg(short, long, value_name = "FILE")]
    output: Option<PathBuf>,
}

/// Why a command failed; decides the exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
}

impl From<rectmatch::Error> for Failure {
    fn from(e: rectmatch::Error) -> Self {
        match e {
            rectmatch::Error::Guard { .. } => {
                Failure::Domain(format!("{e} (set {GUARD_VAR} to raise the limit)"))
            }
            e => Failure::Domain(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(a) => gen(a),
        Command::Solve(a) => solve(a),
        Command::Verify(a) => verify(a),
        Command::Oracle(a) => oracle(a),
        Command::CompileSat(a) => compile_sat(a),
        Command::Bench(a) => bench::run(a),
        Command::Render(a) => render(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            eprintln!("rectmatch: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("rectmatch: {msg}");
            ExitCode::from(2)
        }
    }
}

fn oracle_guard() -> Result<usize, Failure> {
    match std::env::var(GUARD_VAR) {
        Err(_) => Ok(MATCHING_GUARD),
        Ok(v) => v.trim().parse().map_err(|_| {
            Failure::Usage(format!(
                "{GUARD_VAR} must be a non-negative integer, got {v:?}"
            ))
        }),
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    let res = if path == Path::new("-") {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
    Ok(text)
}

fn read_points(path: &Path) -> Result<PointSet, Failure> {
    PointSet::from_text(&read_input(path)?)
        .map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

fn read_report(path: &Path) -> Result<SolveReport, Failure> {
    SolveReport::from_json(&read_input(path)?)
        .map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

fn write_output(path: Option<&Path>, text: &str) -> Outcome {
    let res = match path {
        Some(p) => fs::write(p, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    };
    res.map_err(|e| {
        Failure::Domain(format!(
            "{}: {e}",
            path.map_or("stdout".into(), |p| p.display().to_string())
        ))
    })
}

fn with_header(header: &str, s: &PointSet) -> String {
    format!("# {header}\n{}", s.to_text())
}

fn gen(a: GenArgs) -> Outcome {
    let k = &a.kind;
    let (header, points, sidecar) = if k.random {
        let s = random_instance(a.n, a.grid, a.red_fraction, a.seed)
            .map_err(|e| Failure::Usage(e.to_string()))?;
        (
            format!(
                "random n={} grid={} red-fraction={} seed={}",
                a.n, a.grid, a.red_fraction, a.seed
            ),
            s,
            None,
        )
    } else if k.blocking {
        let color = match a.color {
            ColorArg::R => Color::Red,
            ColorArg::B => Color::Blue,
        };
        let s = blocking_gadget((Coord::zero(), Coord::zero()), Coord::one(), color)?;
        (
            "blocking cluster M1 (first four points) and M2".to_string(),
            s,
            None,
        )
    } else if let Some(d) = k.variable {
        let g = variable_gadget(d, (0, 0)).map_err(|e| Failure::Usage(e.to_string()))?;
        let pts: Vec<_> = g.points.iter().map(|&(x, y)| (x, y, Color::Blue)).collect();
        let blues = PointSet::from_ints(&pts)?;
        let inst = GadgetInstance {
            grid_bound: 0,
            allowed_segments: g.segments.clone(),
            provenance: format!("variable gadget, degree {d}"),
            variables: vec![VariableRecord {
                name: "x".into(),
                boundary: (0..pts.len()).collect(),
            }],
            points: blues,
        };
        let filled = red_fill(&inst)?;
        let inst = GadgetInstance {
            grid_bound: bound(&filled),
            points: filled,
            ..inst
        };
        (
            format!("variable gadget, degree {d}, red fill"),
            inst.points.clone(),
            Some(inst),
        )
    } else {
        let lits = k.clause.as_deref().expect("clap enforces one generator");
        let f = clause_formula(lits, a.side)?;
        let layout = CombLayout::for_formula(&f)?;
        let inst = compile_planar_1in3(&f, &layout)?;
        (
            format!("single clause {lits}"),
            inst.points.clone(),
            Some(inst),
        )
    };
    if let Some(path) = &a.sidecar {
        let inst = sidecar
            .ok_or_else(|| Failure::Usage("--sidecar applies to --variable and --clause".into()))?;
        write_output(Some(path), &inst.sidecar_json())?;
    }
    write_output(a.output.as_deref(), &with_header(&header, &points))
}

fn bound(s: &PointSet) -> u64 {
    s.iter()
        .flat_map(|p| [p.x.to_i64(), p.y.to_i64()])
        .flatten()
        .max()
        .unwrap_or(0)
        .max(0) as u64
}

fn clause_formula(text: &str, side: SideArg) -> Result<Formula, Failure> {
    let lits: Vec<Literal> = text
        .split(',')
        .map(|t| {
            let t = t.trim();
            match t.strip_prefix('-') {
                Some(v) => Literal::neg(v),
                None => Literal::pos(t),
            }
        })
        .collect();
    let literals: [Literal; 3] = lits.try_into().map_err(|_| {
        Failure::Usage(format!(
            "--clause takes three comma-separated literals, got {text:?}"
        ))
    })?;
    let mut variables: Vec<String> = Vec::new();
    for l in &literals {
        if !variables.contains(&l.var) {
            variables.push(l.var.clone());
        }
    }
    let side = match side {
        SideArg::Above => Side::Above,
        SideArg::Below => Side::Below,
    };
    let f = Formula {
        variables,
        clauses: vec![Clause { literals, side }],
    };
    f.validate().map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(f)
}

fn solve(a: SolveArgs) -> Outcome {
    let s = read_points(&a.points)?;
    let mode = Mode::from(a.mode);
    let Alg::Approx = a.alg;
    let mut report = match mode {
        Mode::Mono => approx_mmrm(&s)?,
        Mode::Bi => approx_mbrm(&s)?,
    };
    if a.with_oracle {
        let opt = brute_force_max_matching_guarded(&s, mode, oracle_guard()?)?;
        report.optimal_size = Some(opt.len());
    }
    write_output(a.output.as_deref(), &(report.to_json() + "\n"))
}

fn verify(a: VerifyArgs) -> Outcome {
    let s = read_points(&a.points)?;
    let report = read_report(&a.matching)?;
    let v = verify_matching(&s, &report.matching);
    print!("{v}");
    println!("size          {}", report.matching.len());
    if !v.is_strong_matching() {
        return Err(Failure::Domain("not a strong matching".into()));
    }
    if a.perfect && !v.perfect.passed {
        return Err(Failure::Domain("not perfect".into()));
    }
    Ok(())
}

fn oracle(a: OracleArgs) -> Outcome {
    let s = read_points(&a.points)?;
    let mode = Mode::from(a.mode);
    let guard = oracle_guard()?;
    if a.perfect {
        let found = perfect_matching(&s, mode, &[], guard)?;
        return write_output(
            a.output.as_deref(),
            if found.is_some() { "true\n" } else { "false\n" },
        );
    }
    let m = brute_force_max_matching_guarded(&s, mode, guard)?;
    let candidates = match mode {
        Mode::Mono => candidate_monochromatic(&s).len(),
        Mode::Bi => candidate_bichromatic(&s).len(),
    };
    let report = SolveReport {
        optimal_size: Some(m.len()),
        matching: m,
        algorithm: "brute-force".into(),
        candidate_count: candidates,
        family_sizes: Vec::new(),
    };
    write_output(a.output.as_deref(), &(report.to_json() + "\n"))
}

fn compile_sat(a: CompileArgs) -> Outcome {
    let f = Formula::from_json(&read_input(&a.formula)?)?;
    let layout = match &a.layout {
        None => CombLayout::for_formula(&f)?,
        Some(p) => {
            let l: CombLayout = serde_json::from_str(&read_input(p)?)
                .map_err(|e| Failure::Domain(format!("{}: {e}", p.display())))?;
            l.validate(&f)?;
            l
        }
    };
    let inst = compile_planar_1in3(&f, &layout)?;
    eprintln!(
        "{} points, grid bound {}",
        inst.points.len(),
        inst.grid_bound
    );
    let header = format!(
        "{} variables, {} clauses",
        f.variables.len(),
        f.clauses.len()
    );
    match a.recolor {
        Recolor::None => {
            let side = a.sidecar.clone().unwrap_or_else(|| {
                let mut p = a.output.clone().into_os_string();
                p.push(".sidecar.json");
                p.into()
            });
            write_output(Some(&side), &inst.sidecar_json())?;
            write_output(
                Some(&a.output),
                &with_header(&format!("compiled, {header}"), &inst.points),
            )
        }
        Recolor::Mono => write_output(
            Some(&a.output),
            &with_header(&format!("all blue, {header}"), &monochromatize(&inst)?),
        ),
        Recolor::Bi => write_output(
            Some(&a.output),
            &with_header(&format!("bichromatic, {header}"), &bichromatize(&inst)?),
        ),
    }
}

fn render(a: RenderArgs) -> Outcome {
    let s = read_points(&a.points)?;
    let m = match &a.matching {
        Some(p) => Some(read_report(p)?.matching),
        None => None,
    };
    if let Some(m) = &m {
        if let Some(&(i, j)) = m.pairs.iter().find(|&&(i, j)| i >= s.len() || j >= s.len()) {
            return Err(Failure::Domain(format!(
                "pair ({i}, {j}) is out of range for {} points",
                s.len()
            )));
        }
    }
    write_output(a.output.as_deref(), &svg::render(&s, m.as_ref()))
}

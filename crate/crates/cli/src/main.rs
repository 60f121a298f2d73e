//! `compute`: parses a polynomial system from a file, runs one of the
//! Groebner basis engines over it and prints the resulting basis to stdout,
//! one polynomial per line in descending leading-power-product order.
//!
//! Exit codes: 0 on success, 1 on input or usage errors, 2 when a selected
//! critical pair exceeds `--degree-cap`.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, ValueEnum};
use groebner::text::{render_monomial, render_signature};
use groebner::{
    buchberger, f5b, matrix_f5, parse_system, reduce_basis, render_polynomial, EngineError,
    F5Config, FieldElement, MacaulayMatrix, MatrixConfig, Polynomial, RejectReason, Ring,
    RunStats, Strategy, TraceEvent,
};

#[derive(Parser)]
#[command(
    name = "compute",
    about = "Compute a Groebner basis of a polynomial system",
    disable_help_subcommand = true
)]
struct Args {
    /// Input file: `vars:`/`field:`/`order:` headers, then one polynomial per line.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,

    /// Engine to run.
    #[arg(long, value_enum, value_name = "ENGINE")]
    engine: Option<EngineKind>,

    /// Critical-pair selection strategy (f5b engine).
    #[arg(long, value_enum, default_value_t = StrategyKind::Incremental, value_name = "STRATEGY")]
    strategy: StrategyKind,

    /// Interreduce the output into the unique reduced basis.
    #[arg(long)]
    reduce: bool,

    /// Write run statistics as JSON to this path.
    #[arg(long, value_name = "PATH")]
    stats: Option<PathBuf>,

    /// Stream one line per engine event to stderr.
    #[arg(long)]
    trace: bool,

    /// Largest matrix degree to process (required by the matrixf5 engine).
    #[arg(long, value_name = "D")]
    max_degree: Option<u32>,

    /// Abort with exit code 2 when a selected pair's lcm degree exceeds this.
    #[arg(long, value_name = "D")]
    degree_cap: Option<u32>,

    /// Skip reducer vetting during signature-respecting reduction.
    #[arg(long)]
    relaxed_reduction: bool,

    /// Disable the syzygy criterion.
    #[arg(long)]
    no_syzygy: bool,

    /// Disable the rewritten criterion.
    #[arg(long)]
    no_rewritten: bool,

    /// Write the pre- and post-elimination matrix of every degree round
    /// to `deg{d}_pre.txt` / `deg{d}_post.txt` in this directory.
    #[arg(long, value_name = "DIR")]
    dump_matrices: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineKind {
    F5b,
    Buchberger,
    Matrixf5,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyKind {
    Incremental,
    #[value(name = "mindeg")]
    MinDeg,
}

impl From<StrategyKind> for Strategy {
    fn from(k: StrategyKind) -> Strategy {
        match k {
            StrategyKind::Incremental => Strategy::Incremental,
            StrategyKind::MinDeg => Strategy::MinDegree,
        }
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        // Usage errors are input errors: exit 1, not clap's default 2.
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    run(args)
}

fn run(args: Args) -> ExitCode {
    let (Some(input), Some(engine)) = (args.input.clone(), args.engine) else {
        let _ = Args::command().print_help();
        return ExitCode::from(1);
    };

    let text = match fs::read_to_string(&input) {
        Ok(text) => text,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", input.display());
            return ExitCode::from(1);
        }
    };
    let (ring, polys) = match parse_system(&text) {
        Ok(parsed) => parsed,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };

    let mut sink;
    let mut trace = None;
    if args.trace {
        let trace_ring = ring.clone();
        sink = move |event: TraceEvent| eprintln!("{}", render_event(&trace_ring, &event));
        trace = Some(&mut sink as &mut dyn FnMut(TraceEvent));
    }

    let mut rounds = Vec::new();
    let outcome = match engine {
        EngineKind::F5b => {
            let cfg = F5Config {
                strategy: args.strategy.into(),
                use_syzygy: !args.no_syzygy,
                use_rewritten: !args.no_rewritten,
                relaxed_reduction: args.relaxed_reduction,
                degree_cap: args.degree_cap,
            };
            f5b(&polys, &cfg, trace).map(|out| (out.basis, out.stats))
        }
        EngineKind::Buchberger => buchberger(&polys),
        EngineKind::Matrixf5 => {
            let Some(max_degree) = args.max_degree else {
                eprintln!("error: --engine matrixf5 requires --max-degree");
                return ExitCode::from(1);
            };
            let cfg = MatrixConfig {
                max_degree,
                use_syzygy: !args.no_syzygy,
                use_rewritten: !args.no_rewritten,
            };
            matrix_f5(&polys, &cfg, trace).map(|out| {
                rounds = out.rounds;
                (out.basis, out.stats)
            })
        }
    };

    let (basis, stats) = match outcome {
        Ok(result) => result,
        Err(e @ EngineError::DegreeCapExceeded { .. }) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };

    if let Some(dir) = &args.dump_matrices {
        if let Err(e) = write_dumps(dir, &ring, &rounds) {
            eprintln!("error: cannot write matrix dump: {e}");
            return ExitCode::from(1);
        }
    }
    if let Some(path) = &args.stats {
        if let Err(e) = write_stats(path, &stats) {
            eprintln!("error: cannot write stats: {e}");
            return ExitCode::from(1);
        }
    }

    for poly in ordered_output(&ring, basis, args.reduce) {
        println!("{}", render_polynomial(&ring, &poly));
    }
    ExitCode::SUCCESS
}

/// Reduced output is canonical already; raw output is sorted descending by
/// leading power product, ties kept in creation order.
fn ordered_output(ring: &Ring, basis: Vec<Polynomial>, reduce: bool) -> Vec<Polynomial> {
    if reduce {
        return reduce_basis(&basis);
    }
    let order = ring.order();
    let mut out = basis;
    out.sort_by(|a, b| {
        let (pa, pb) = (a.lpp().expect("nonzero"), b.lpp().expect("nonzero"));
        order.cmp(pb, pa).expect("same arity")
    });
    out
}

fn write_stats(path: &std::path::Path, stats: &RunStats) -> std::io::Result<()> {
    let mut value = serde_json::to_value(stats).expect("stats serialize");
    let object = value.as_object_mut().expect("stats object");
    object.insert("schema".to_owned(), serde_json::Value::from(1u64));
    let mut text = serde_json::to_string_pretty(&value).expect("stats render");
    text.push('\n');
    fs::write(path, text)
}

fn write_dumps(
    dir: &std::path::Path,
    ring: &Ring,
    rounds: &[groebner::matrix::MatrixRound],
) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    for round in rounds {
        let d = round.degree;
        fs::write(dir.join(format!("deg{d}_pre.txt")), render_matrix(ring, &round.pre))?;
        fs::write(dir.join(format!("deg{d}_post.txt")), render_matrix(ring, &round.post))?;
    }
    Ok(())
}

/// Header line of column monomials, then one `label<TAB>coefficients` line
/// per row, rows in ascending signature order as the matrix stores them.
fn render_matrix(ring: &Ring, m: &MacaulayMatrix) -> String {
    let mut out = String::new();
    let header: Vec<String> = m.columns.iter().map(|c| render_monomial(ring, c)).collect();
    out.push_str(&header.join(" "));
    out.push('\n');
    for row in &m.rows {
        out.push_str(&render_signature(ring, &row.label));
        out.push('\t');
        let coeffs: Vec<String> = row.coeffs.iter().map(coeff_text).collect();
        out.push_str(&coeffs.join(" "));
        out.push('\n');
    }
    out
}

fn coeff_text(c: &FieldElement) -> String {
    match c {
        FieldElement::Modular(r) => r.to_string(),
        FieldElement::Rational(q) => q.to_string(),
    }
}

fn render_event(ring: &Ring, event: &TraceEvent) -> String {
    match event {
        TraceEvent::PairSelected { f_gen, g_gen, lcm, degree } => format!(
            "select [F{f_gen}, F{g_gen}] lcm {} degree {degree}",
            render_monomial(ring, lcm)
        ),
        TraceEvent::PairRejected { f_gen, g_gen, reason } => {
            let reason = match reason {
                RejectReason::Syzygy => "syzygy",
                RejectReason::Rewritten => "rewritten",
                RejectReason::SignatureTie => "signature-tie",
            };
            format!("reject [F{f_gen}, F{g_gen}] {reason}")
        }
        TraceEvent::ReductionStep { target_gen, reducer_gen } => {
            format!("reduce F{target_gen} by F{reducer_gen}")
        }
        TraceEvent::BasisInsert { gen, sig, poly } => format!(
            "insert F{gen} sig {} poly {}",
            render_signature(ring, sig),
            render_polynomial(ring, poly)
        ),
        TraceEvent::ZeroReduction { gen, sig } => {
            format!("zero F{gen} sig {}", render_signature(ring, sig))
        }
    }
}

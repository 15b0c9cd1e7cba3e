use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use grassform::singsets::{CheckOutcome, Direction};
use grassform::textio::{parse_gram, parse_plane_set, write_gram, write_plane_set, write_subspace, write_witness};
use grassform::{
    check_condition_s, reconstruct_form_via, singular_set, verify_theorem, BilinearForm, Error,
    Field, Grassmannian, Mode, PlaneSet, Subspace, Via,
};

/// Singular-restriction sets of symplectic forms over GF(q).
#[derive(Parser)]
#[command(name = "grassform", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every k-dimensional subspace of GF(q)^n in canonical order.
    Enumerate {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Print the k-planes on which the form given by a Gram file is singular.
    Sset {
        #[arg(long)]
        q: Option<u32>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: usize,
        /// Gram file, or `-` for standard input.
        #[arg(long)]
        gram: PathBuf,
    },
    /// Decide the incidence condition for a plane set.
    Check {
        /// Plane set file; standard input when omitted or `-`.
        #[arg(long)]
        set: Option<PathBuf>,
        /// On acceptance, echo the set to stdout and send the witness to stderr.
        #[arg(long)]
        emit_set: bool,
    },
    /// Recover a symplectic form whose singular set is the given plane set.
    Reconstruct {
        #[arg(long)]
        set: Option<PathBuf>,
        /// Pipeline; defaults to direct when k = n-2 and dual otherwise.
        #[arg(long, value_enum)]
        via: Option<ViaArg>,
    },
    /// Run both directions of the characterization over a family of forms.
    VerifyTheorem {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Sampled)]
        mode: ModeArg,
        #[arg(long, default_value_t = 10)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum ViaArg {
    Direct,
    Dual,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Sampled,
}

const REJECTED: u8 = 1;
const INPUT: u8 = 2;
const INTERNAL: u8 = 3;

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Failure {
        Failure {
            code: INPUT,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::ConditionS(_) => REJECTED,
            Error::NotCollineation(_) | Error::SolutionSpace(_) | Error::Verification(_) => INTERNAL,
            _ => INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CliResult = Result<u8, Failure>;

fn read_input(path: Option<&PathBuf>) -> Result<String, Failure> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(p).map_err(|e| Failure::input(format!("{}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::input(format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn emit(out: &str) -> Result<(), Failure> {
    io::stdout().lock().write_all(out.as_bytes()).map_err(|e| Failure {
        code: INTERNAL,
        message: format!("stdout: {e}"),
    })
}

fn enumerate(q: u32, n: usize, k: usize) -> CliResult {
    let field = Field::with_order(q)?;
    let g = Grassmannian::new(&field, n, k)?;
    let set = PlaneSet::from_planes(&field, n, k, g.iter())?;
    emit(&write_plane_set(&set))?;
    Ok(0)
}

fn sset(q: Option<u32>, n: Option<usize>, k: usize, gram: &PathBuf) -> CliResult {
    let m = parse_gram(&read_input(Some(gram))?)?;
    if let Some(q) = q.filter(|&q| q as usize != m.field().order()) {
        return Err(Failure::input(format!("--q {q} disagrees with the Gram header")));
    }
    if let Some(n) = n.filter(|&n| n != m.rows()) {
        return Err(Failure::input(format!("--n {n} disagrees with the Gram header")));
    }
    let form = BilinearForm::plain(m)?;
    if !form.is_non_singular() {
        return Err(Failure::input("form is singular (not non-singular)"));
    }
    if !form.is_symplectic() {
        return Err(Failure::input("form is not symplectic"));
    }
    if k % 2 == 1 {
        eprintln!("note: k={k} is odd, so every {k}-plane is singular");
    }
    emit(&write_plane_set(&singular_set(&form, k)?))?;
    Ok(0)
}

fn block(s: &Subspace) -> String {
    let b = write_subspace(s);
    if b.is_empty() {
        "(zero subspace)\n".into()
    } else {
        b
    }
}

fn check(set: Option<&PathBuf>, emit_set: bool) -> CliResult {
    let x = parse_plane_set(&read_input(set)?)?;
    match check_condition_s(&x)? {
        CheckOutcome::Accepted(w) => {
            let (from, to) = match w.direction() {
                Direction::LineToHyperplane => ("line", "hyperplane"),
                Direction::HyperplaneToLine => ("hyperplane", "line"),
            };
            let report = format!(
                "# accepted: {} ({from}, {to}) pairs\n{}",
                w.len(),
                write_witness(&w)
            );
            if emit_set {
                eprint!("{report}");
                emit(&write_plane_set(&x))?;
            } else {
                emit(&report)?;
            }
            Ok(0)
        }
        CheckOutcome::Rejected(c) => {
            let s_kind = match c.direction {
                Direction::LineToHyperplane => "line",
                Direction::HyperplaneToLine => "hyperplane",
            };
            emit(&format!(
                "rejected: {c}\n# failing {s_kind}\n{}# offending plane\n{}",
                block(&c.s),
                block(&c.plane)
            ))?;
            Ok(REJECTED)
        }
    }
}

fn reconstruct(set: Option<&PathBuf>, via: Option<ViaArg>) -> CliResult {
    let x = parse_plane_set(&read_input(set)?)?;
    let via = match via {
        Some(ViaArg::Direct) => Via::Direct,
        Some(ViaArg::Dual) => Via::Dual,
        None if x.k() + 2 == x.n() => Via::Direct,
        None => Via::Dual,
    };
    let report = reconstruct_form_via(&x, via)?;
    let mut out = write_gram(report.form.gram());
    for line in report.to_string().lines() {
        out.push_str("# ");
        out.push_str(line);
        out.push('\n');
    }
    emit(&out)?;
    Ok(0)
}

fn verify(q: u32, n: usize, k: usize, mode: ModeArg, samples: usize, seed: u64) -> CliResult {
    let mode = match mode {
        ModeArg::Exhaustive => Mode::Exhaustive,
        ModeArg::Sampled => Mode::Sampled,
    };
    let summary = verify_theorem(q, n, k, mode, samples, seed)?;
    emit(&format!("{summary}\n"))?;
    for f in &summary.failures {
        eprintln!("failure: {f}");
    }
    Ok(if summary.failures.is_empty() { 0 } else { INTERNAL })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Enumerate { q, n, k } => enumerate(*q, *n, *k),
        Command::Sset { q, n, k, gram } => sset(*q, *n, *k, gram),
        Command::Check { set, emit_set } => check(set.as_ref(), *emit_set),
        Command::Reconstruct { set, via } => reconstruct(set.as_ref(), *via),
        Command::VerifyTheorem {
            q,
            n,
            k,
            mode,
            samples,
            seed,
        } => verify(*q, *n, *k, *mode, *samples, *seed),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

//! `qtc`: validate instance files, compute braidings and run the center
//! round-trip from the command line.
//!
//! Exit codes: 0 all checks pass, 1 load or usage error, 2 a check failed,
//! 3 a referenced name does not exist.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use sha2::{Digest, Sha256};

use qtc_core::center::{check_half_braiding, default_family, f2, roundtrip_check};
use qtc_core::gqc::validate_all;
use qtc_core::instances::InstanceDescriptor;
use qtc_core::io::{load_instance, save_instance, InstanceDocument};
use qtc_core::lemma::check_lemma_identities;
use qtc_core::report::{check_cases, compare_maps, Report};
use qtc_core::ydmod::{check_braiding_inverse, hexagon_left, hexagon_right, validate_yd, yd_braiding};
use qtc_core::{Error, Matrix};

const WORKERS_VAR: &str = "QTC_WORKERS";

#[derive(Parser)]
#[command(name = "qtc", version, about = "Exact checks for quasi-Turaev group coalgebras and their Yetter-Drinfeld modules")]
struct Cli {
    /// Report format on standard output.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    report: Format,
    /// Include wall times per check (makes reports run-dependent).
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run the algebra, coalgebra, antipode and crossing axiom suites.
    Validate { instance: PathBuf },
    /// Check the identities between the four auxiliary elements.
    LemmaCheck { instance: PathBuf },
    /// Check the YD axioms for a named module.
    YdValidate {
        instance: PathBuf,
        #[arg(long)]
        module: String,
    },
    /// Compute the braiding of two named modules and its inverse.
    Braid {
        instance: PathBuf,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check both hexagons on one triple of named modules.
    Hexagon {
        instance: PathBuf,
        #[arg(long, num_args = 3, value_names = ["A", "B", "C"])]
        modules: Vec<String>,
    },
    /// f1 o f2 = id on a module and f2 o f1 = id on the test family.
    CenterRoundtrip {
        instance: PathBuf,
        #[arg(long)]
        module: String,
        /// Largest number of regular factors in the test family; its size is
        /// `n + n^2 + .. + n^depth` for a group of order n.
        #[arg(long, default_value_t = 2)]
        depth: usize,
    },
    /// Build a named instance and write it, with its builtin YD modules.
    Generate {
        /// trivial, graded_line, constant_hopf or twisted_dual.
        builder: String,
        /// Builder parameter, repeatable: group, pi, g (Zn, S3, AxB), cocycle
        /// (trivial, minus, zeta), order (of the root of unity in the field).
        #[arg(long = "param", value_name = "K=V")]
        params: Vec<String>,
        /// Instance file to write.
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
    },
}

/// Why a command stopped early, mapped to an exit code.
enum Failure {
    Usage(String),
    Load(Error),
    Missing(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownName(n) => Failure::Missing(n),
            Error::BuilderValidation(_)
            | Error::AntipodeSolveFailed(_)
            | Error::NotACocycle(..)
            | Error::NotNormalized(..)
            | Error::NotConjInvariant(..)
            | Error::BraidingNotInvertible(_) => Failure::Check(e.to_string()),
            other => Failure::Load(other),
        }
    }
}

#[derive(Serialize)]
struct Envelope<'a> {
    tool: &'static str,
    version: &'static str,
    command: &'a str,
    instance_digest: Option<String>,
    passed: bool,
    suites: &'a [Report],
}

struct Loaded {
    doc: InstanceDocument,
    digest: String,
}

fn load(path: &Path) -> Result<Loaded, Failure> {
    let bytes = std::fs::read(path).map_err(|e| Failure::Load(Error::Io { path: path.display().to_string(), message: e.to_string() }))?;
    let digest = format!("sha256:{:x}", Sha256::digest(&bytes));
    let text = String::from_utf8(bytes)
        .map_err(|e| Failure::Load(Error::Parse { location: path.display().to_string(), message: e.to_string() }))?;
    let doc = load_instance(&text).map_err(|e| match e {
        Error::UnknownName(n) => Failure::Missing(n),
        other => Failure::Load(other),
    })?;
    Ok(Loaded { doc, digest })
}

fn emit(cli: &Cli, command: &str, digest: Option<String>, mut suites: Vec<Report>) -> ExitCode {
    if !cli.timings {
        for s in &mut suites {
            s.strip_timings();
        }
    }
    let passed = suites.iter().all(|s| s.passed());
    match cli.report {
        Format::Json => {
            let env = Envelope { tool: "qtc", version: env!("CARGO_PKG_VERSION"), command, instance_digest: digest, passed, suites: &suites };
            println!("{}", serde_json::to_string_pretty(&env).expect("report serializes"));
        }
        Format::Text => {
            println!("qtc {} {command}", env!("CARGO_PKG_VERSION"));
            if let Some(d) = digest {
                println!("instance {d}");
            }
            for s in &suites {
                print!("{}", s.to_text());
            }
            println!("{}", if passed { "PASS" } else { "FAIL" });
        }
    }
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}

fn matrix_json(m: &Matrix) -> serde_json::Value {
    json!((0..m.rows()).map(|i| m.row(i).iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn run(cli: &Cli) -> Result<ExitCode, Failure> {
    match &cli.command {
        Command::Validate { instance } => {
            let l = load(instance)?;
            Ok(emit(cli, "validate", Some(l.digest), vec![validate_all(&l.doc.coalgebra)]))
        }
        Command::LemmaCheck { instance } => {
            let l = load(instance)?;
            Ok(emit(cli, "lemma-check", Some(l.digest), vec![check_lemma_identities(&l.doc.coalgebra)]))
        }
        Command::YdValidate { instance, module } => {
            let l = load(instance)?;
            let m = l.doc.yd_module(module)?;
            Ok(emit(cli, "yd-validate", Some(l.digest), vec![validate_yd(&l.doc.coalgebra, m)]))
        }
        Command::Braid { instance, left, right, out } => {
            let l = load(instance)?;
            let h = &l.doc.coalgebra;
            let (m, n) = (l.doc.yd_module(left)?, l.doc.yd_module(right)?);
            let mut report = Report::new("braiding");
            for c in check_braiding_inverse(h, m, n.module()) {
                report.push(c);
            }
            if report.passed() {
                let (c, hat) = yd_braiding(h, m, n)?;
                let body = json!({ "left": left, "right": right, "braiding": matrix_json(&c), "inverse": matrix_json(&hat) });
                let text = serde_json::to_string_pretty(&body).expect("serializable") + "\n";
                std::fs::write(out, text)
                    .map_err(|e| Failure::Load(Error::Io { path: out.display().to_string(), message: e.to_string() }))?;
            }
            Ok(emit(cli, "braid", Some(l.digest), vec![report]))
        }
        Command::Hexagon { instance, modules } => {
            let l = load(instance)?;
            let h = &l.doc.coalgebra;
            let ms = modules.iter().map(|n| l.doc.yd_module(n)).collect::<Result<Vec<_>, _>>()?;
            let mut report = Report::new("hexagon");
            report.push(check_cases("hexagon.left", "c_{U,V(x)W} = a^-1 (^UV (x) c_{U,W}) a (c_{U,V} (x) W) a^-1", &[], vec![vec![]], |_| {
                let (lhs, rhs) = hexagon_left(h, ms[0], ms[1].module(), ms[2].module())?;
                Ok(compare_maps(&lhs, &rhs))
            }));
            report.push(check_cases("hexagon.right", "c_{U(x)V,W} = a (c_{U,^VW} (x) V) a^-1 (U (x) c_{V,W}) a", &[], vec![vec![]], |_| {
                let (lhs, rhs) = hexagon_right(h, ms[0], ms[1], ms[2].module())?;
                Ok(compare_maps(&lhs, &rhs))
            }));
            report.notes.push(format!("U = {}, V = {}, W = {}", modules[0], modules[1], modules[2]));
            Ok(emit(cli, "hexagon", Some(l.digest), vec![report]))
        }
        Command::CenterRoundtrip { instance, module, depth } => {
            if *depth == 0 {
                return Err(Failure::Usage("--depth must be at least 1".into()));
            }
            let l = load(instance)?;
            let h = &l.doc.coalgebra;
            let m = l.doc.yd_module(module)?;
            let family = default_family(h, *depth);
            let mut rt = roundtrip_check(h, m, None, &family);
            rt.notes.push(format!("test family of {} modules (depth {depth})", family.len()));
            let hb = check_half_braiding(h, &f2(h, m, &family));
            Ok(emit(cli, "center-roundtrip", Some(l.digest), vec![rt, hb]))
        }
        Command::Generate { builder, params, out } => {
            let d = InstanceDescriptor::from_pairs(builder, params)?;
            if !InstanceDescriptor::builder_names().contains(&builder.as_str()) {
                return Err(Failure::Missing(format!("{builder} (builders: {})", InstanceDescriptor::builder_names().join(", "))));
            }
            let b = d.build()?;
            let mut doc = InstanceDocument::new(b.field, b.coalgebra);
            doc.yd_modules = b.yd_modules;
            let text = save_instance(&doc);
            std::fs::write(out, &text)
                .map_err(|e| Failure::Load(Error::Io { path: out.display().to_string(), message: e.to_string() }))?;
            let mut report = validate_all(&doc.coalgebra);
            report.notes.push(format!("{} written to {}", b.label, out.display()));
            let digest = format!("sha256:{:x}", Sha256::digest(text.as_bytes()));
            Ok(emit(cli, "generate", Some(digest), vec![report]))
        }
    }
}

fn configure_workers() -> Result<(), Failure> {
    let Ok(v) = std::env::var(WORKERS_VAR) else {
        return Ok(());
    };
    let n: usize = v.trim().parse().ok().filter(|&n| n >= 1).ok_or_else(|| Failure::Usage(format!("{WORKERS_VAR} must be a positive integer, got `{v}`")))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| Failure::Usage(e.to_string()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = configure_workers().and_then(|_| run(&cli));
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Load(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Missing(name)) => {
            eprintln!("error: unknown name `{name}`");
            ExitCode::from(3)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn error_classes() {
        assert!(matches!(Failure::from(Error::UnknownName("x".into())), Failure::Missing(_)));
        assert!(matches!(Failure::from(Error::BuilderValidation("x".into())), Failure::Check(_)));
        assert!(matches!(Failure::from(Error::Param("x".into())), Failure::Load(_)));
    }

    #[test]
    fn matrices_are_rows_of_scalar_strings() {
        let m = Matrix::identity(2);
        assert_eq!(matrix_json(&m), json!([["1", "0"], ["0", "1"]]));
    }
}

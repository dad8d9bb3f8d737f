//! `hopfbench`: verification suites, element evaluation, and structure-constant export.

mod eval;
mod expr;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hopf_core::algfile::AlgebraFile;
use hopf_core::error::{Error, Result};
use hopf_core::report::{render, Format, Mode};
use hopf_core::suite::{export_object, import_object, run_suite, Fixtures, SuiteConfig, EXPORTABLE};

use eval::{Structure, Target};

#[derive(Parser, Debug)]
#[command(name = "hopfbench", version, about = "Exact verification of the Taft-family Hopf structures")]
struct Cli {
    /// Worker threads; results do not depend on it.
    #[arg(long, global = true, env = "HOPFBENCH_JOBS")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Generators,
    Sample,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run verification suites and write a report.
    Verify {
        #[arg(long)]
        p: u32,
        /// Comma-separated suite names, `all`, or `mutations`.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Defaults to exhaustive at p = 2 and generators above.
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        /// Seeded samples in generators and sample modes.
        #[arg(long, default_value_t = 10_000)]
        sample_size: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        /// Report path; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        fail_fast: bool,
    },
    /// Evaluate an element expression, e.g. `del * z` or `E |> z`.
    Eval {
        #[arg(long)]
        p: u32,
        #[arg(long, value_enum, default_value = "product")]
        structure: Structure,
        /// Algebra the expression lives in; chosen from the generator names when absent.
        #[arg(long, value_enum)]
        algebra: Option<Target>,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Write the canonical structure-constant file of a named object.
    Export {
        #[arg(long)]
        p: u32,
        /// One of taft, taft-dual, ddouble, hdouble, uqsl2, hqsl2, cqzd, chain(n).
        object: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Read an algebra file, rebuild the structure, and write it back canonically.
    Import {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn check_p(p: u32) -> Result<()> {
    if p < 2 {
        return Err(Error::Usage(format!("p must be at least 2, got {p}")));
    }
    Ok(())
}

fn write_out(path: &Option<PathBuf>, stdout: &mut dyn Write, bytes: &[u8]) -> Result<()> {
    match path {
        Some(path) => std::fs::write(path, bytes).map_err(|e| Error::Usage(format!("cannot write {}: {e}", path.display()))),
        None => stdout.write_all(bytes).map_err(|e| Error::Usage(format!("cannot write output: {e}"))),
    }
}

/// Runs a command; `Ok(false)` means a check failed.
fn run(cmd: Command, stdout: &mut dyn Write) -> Result<bool> {
    match cmd {
        Command::Verify { p, suite, mode, sample_size, seed, format, out, fail_fast } => {
            check_p(p)?;
            let mode = match mode {
                None => SuiteConfig::default_mode(p, sample_size, seed),
                Some(ModeArg::Exhaustive) => Mode::Exhaustive,
                Some(ModeArg::Generators) => Mode::Generators { guard_samples: sample_size, seed },
                Some(ModeArg::Sample) => Mode::Sample { n: sample_size, seed },
            };
            let config = SuiteConfig { p, suite, mode, fail_fast };
            let report = run_suite(&config)?;
            let fmt = match format {
                FormatArg::Text => Format::Text,
                FormatArg::Json => Format::Json,
            };
            write_out(&out, stdout, &render(&report, fmt))?;
            Ok(report.all_passed())
        }
        Command::Eval { p, structure, algebra, expr } => {
            check_p(p)?;
            let fx = Fixtures::new(p)?;
            let s = eval::evaluate(&fx, &expr, structure, algebra)?;
            write_out(&None, stdout, format!("{s}\n").as_bytes())?;
            Ok(true)
        }
        Command::Export { p, object, out } => {
            check_p(p)?;
            if !EXPORTABLE.iter().any(|o| *o == object) && !object.starts_with("chain(") {
                return Err(Error::Usage(format!("unknown object {object:?}; expected one of {}", EXPORTABLE.join(", "))));
            }
            let fx = Fixtures::new(p)?;
            write_out(&out, stdout, export_object(&fx, &object)?.to_json().as_bytes())?;
            Ok(true)
        }
        Command::Import { file, out } => {
            let text = std::fs::read_to_string(&file).map_err(|e| Error::Usage(format!("cannot read {}: {e}", file.display())))?;
            let f = AlgebraFile::from_json(&text)?;
            let hopf_name = f.action.as_ref().map(|b| b.hopf.clone());
            let mut back = import_object(&f)?.export(hopf_name.as_deref())?;
            back.name = f.name.clone();
            write_out(&out, stdout, back.to_json().as_bytes())?;
            Ok(true)
        }
    }
}

/// Parses `args` (program name first), runs the command, and returns the exit code.
fn dispatch(args: Vec<OsString>, stdout: &mut dyn Write) -> u8 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    if let Some(n) = cli.jobs {
        if n == 0 {
            eprintln!("error: --jobs must be at least 1");
            return 2;
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: cannot configure {n} workers: {e}");
            return 2;
        }
    }
    match run(cli.command, stdout) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e @ (Error::Usage(_) | Error::Parse { .. } | Error::Format(_))) => {
            eprintln!("error: {e}");
            2
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn main() -> ExitCode {
    ExitCode::from(dispatch(std::env::args_os().collect(), &mut std::io::stdout().lock()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (u8, String) {
        let mut out = Vec::new();
        let argv = std::iter::once("hopfbench").chain(args.iter().copied()).map(OsString::from).collect();
        let code = dispatch(argv, &mut out);
        (code, String::from_utf8(out).unwrap().trim_end().to_string())
    }

    #[test]
    fn eval_examples() {
        assert_eq!(call(&["eval", "--p", "2", "del * z"]), (0, "(q − q^{-1})·1 − z·del".into()));
        assert_eq!(call(&["eval", "--p", "2", "del * z"]).1, call(&["eval", "--p", "2", "(q - q^-1) + q^-2 z del"]).1);
        assert_eq!(call(&["eval", "--p", "3", "--structure", "action", "E |> z"]), (0, "−q·z^2".into()));
        assert_eq!(call(&["eval", "--p", "2", "--structure", "action", "E |> z"]), (0, "0".into()));
        assert_eq!(call(&["eval", "--p", "2", "1 # 1"]), (0, "1".into()));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["verify", "--p", "1"]).0, 2);
        assert_eq!(call(&["verify", "--p", "2", "--suite", "bogus"]).0, 2);
        assert_eq!(call(&["verify", "--p", "2", "--mode", "sample", "--sample-size", "0"]).0, 2);
        assert_eq!(call(&["eval", "--p", "2", "z + * del"]).0, 2);
        assert_eq!(call(&["eval", "--p", "1", "z"]).0, 2);
        assert_eq!(call(&["export", "--p", "2", "chain(0)"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["verify", "--p", "2", "--suite", "remarks"]).0, 0);
        assert_eq!(call(&["verify", "--p", "2", "--suite", "mutations"]).0, 1);
    }

    #[test]
    fn export_import_round_trip() {
        let dir = std::env::temp_dir().join(format!("hopfbench-unit-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let file = dir.join("uqsl2.json");
        let (code, text) = call(&["export", "--p", "2", "uqsl2"]);
        assert_eq!(code, 0);
        std::fs::write(&file, format!("{text}\n")).unwrap();
        let (code, back) = call(&["import", file.to_str().unwrap()]);
        assert_eq!((code, back), (0, text.clone()));
        assert!(text.contains("\"dim\":16"));
        std::fs::remove_dir_all(&dir).ok();
    }
}

//! `gbent`: exact analysis of generalized bent functions from the
//! command line.
//!
//! Exit status: 0 when the requested property verified (or the command
//! succeeded), 1 when a verification failed, 2 on input or usage errors.

use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;

use gbent_cli::commands::{self, CliError, Outcome};
use gbent_cli::report::Format;
use gbent_cli::selftest::run_selftest;
use gbent_cli::table::parse_table;
use gbent_core::analysis::Mode;
use gbent_core::GbFunc;

const USAGE: &str = "\
usage: gbent <command> [options]

commands:
  analyze [--format structured|plain] FILE
      gbent verdict, regularity class, dual table, sign pattern
  zpkbent [--format ...] FILE
      Z_{p^k}-bentness by the all-scalars and prime-power routes (l = 1)
  characterize --mode A|B|C|D [--t N] [--s N] [--format ...] FILE
      component characterization at the given parameters; verifies that
      its verdict agrees with the direct gbent test
  rds [--format ...] FILE
      relative-difference-set checks on the graph, parameters
      (p^n, p^k, p^n, p^(n-k)) (l = 1, n >= k)
  gray [--format ...] FILE
      plateaued order of the generalized Gray image (l = 1)
  construct --spread P M K | --lift K FILE | --quad P L K N [--out FILE]
      write a function table
  selftest
      run the built-in identity suites

FILE may be `-` for standard input. Table format: a `p l n k` header
line, then p^(l*n) values in [0, p^k); `#` starts a comment line.

exit status: 0 verified, 1 verification failed, 2 input error.";

struct Args {
    positional: Vec<String>,
    format: Format,
    mode: Option<String>,
    t: Option<u32>,
    s: Option<u32>,
    out: Option<String>,
    spread: bool,
    lift: bool,
    quad: bool,
}

fn parse_args(mut raw: impl Iterator<Item = String>) -> Result<Args, CliError> {
    let mut args = Args {
        positional: Vec::new(),
        format: Format::Plain,
        mode: None,
        t: None,
        s: None,
        out: None,
        spread: false,
        lift: false,
        quad: false,
    };
    while let Some(arg) = raw.next() {
        let (flag, inline) = match arg.split_once('=') {
            Some((f, v)) => (f.to_string(), Some(v.to_string())),
            None => (arg.clone(), None),
        };
        let mut value = |name: &str| -> Result<String, CliError> {
            inline
                .clone()
                .or_else(|| raw.next())
                .ok_or_else(|| CliError(format!("flag {name} needs a value")))
        };
        match flag.as_str() {
            "--format" => {
                args.format = match value("--format")?.as_str() {
                    "structured" => Format::Structured,
                    "plain" => Format::Plain,
                    other => return Err(CliError(format!("unknown format `{other}`"))),
                }
            }
            "--mode" => args.mode = Some(value("--mode")?),
            "--t" => {
                args.t = Some(
                    value("--t")?
                        .parse()
                        .map_err(|_| CliError("--t expects a small integer".into()))?,
                )
            }
            "--s" => {
                args.s = Some(
                    value("--s")?
                        .parse()
                        .map_err(|_| CliError("--s expects a small integer".into()))?,
                )
            }
            "--out" => args.out = Some(value("--out")?),
            "--spread" => args.spread = true,
            "--lift" => args.lift = true,
            "--quad" => args.quad = true,
            _ if flag.starts_with("--") => {
                return Err(CliError(format!("unknown flag `{flag}`")));
            }
            _ => args.positional.push(arg),
        }
    }
    Ok(args)
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError(format!("reading stdin: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError(format!("reading {path}: {e}")))
    }
}

fn load_func(args: &Args) -> Result<GbFunc, CliError> {
    let path = args
        .positional
        .first()
        .ok_or_else(|| CliError("expected a table file argument (or `-` for stdin)".into()))?;
    let text = read_input(path)?;
    parse_table(&text).map_err(|e| CliError(format!("{path}: {e}")))
}

fn parse_positional_u64(args: &[String], at: usize, what: &str) -> Result<u64, CliError> {
    args.get(at)
        .ok_or_else(|| CliError(format!("missing {what}")))?
        .parse()
        .map_err(|_| CliError(format!("{what} must be an integer")))
}

fn parse_positional_u32(args: &[String], at: usize, what: &str) -> Result<u32, CliError> {
    u32::try_from(parse_positional_u64(args, at, what)?)
        .map_err(|_| CliError(format!("{what} out of range")))
}

fn run_construct(args: &Args) -> Result<String, CliError> {
    let pos = &args.positional;
    match (args.spread, args.lift, args.quad) {
        (true, false, false) => {
            let p = parse_positional_u64(pos, 0, "spread parameter p")?;
            let m = parse_positional_u32(pos, 1, "spread parameter m")?;
            let k = parse_positional_u32(pos, 2, "spread parameter k")?;
            commands::construct_spread(p, m, k)
        }
        (false, true, false) => {
            let k = parse_positional_u32(pos, 0, "lift target exponent k")?;
            let path = pos
                .get(1)
                .ok_or_else(|| CliError("lift needs a p-ary table file".into()))?;
            let text = read_input(path)?;
            let g = parse_table(&text).map_err(|e| CliError(format!("{path}: {e}")))?;
            commands::construct_lift(&g, k)
        }
        (false, false, true) => {
            let p = parse_positional_u64(pos, 0, "quad parameter p")?;
            let l = parse_positional_u32(pos, 1, "quad parameter l")?;
            let k = parse_positional_u32(pos, 2, "quad parameter k")?;
            let n = parse_positional_u32(pos, 3, "quad parameter n")?;
            commands::construct_quad(p, l, k, n)
        }
        _ => Err(CliError("construct needs exactly one of --spread, --lift, --quad".into())),
    }
}

fn parse_mode(name: &str) -> Result<Mode, CliError> {
    match name {
        "A" | "a" => Ok(Mode::A),
        "B" | "b" => Ok(Mode::B),
        "C" | "c" => Ok(Mode::C),
        "D" | "d" => Ok(Mode::D),
        other => Err(CliError(format!("unknown mode `{other}` (expected A, B, C, or D)"))),
    }
}

fn dispatch(command: &str, args: &Args) -> Result<Outcome, CliError> {
    match command {
        "analyze" => commands::analyze(&load_func(args)?, args.format),
        "zpkbent" => commands::zpkbent(&load_func(args)?, args.format),
        "characterize" => {
            let mode_name = args
                .mode
                .as_deref()
                .ok_or_else(|| CliError("characterize needs --mode A|B|C|D".into()))?;
            let mode = parse_mode(mode_name)?;
            let f = load_func(args)?;
            commands::characterize(&f, mode, args.t.unwrap_or(1), args.s.unwrap_or(1), args.format)
        }
        "rds" => commands::rds(&load_func(args)?, args.format),
        "gray" => commands::gray(&load_func(args)?, args.format),
        "construct" => {
            let table = run_construct(args)?;
            if let Some(path) = &args.out {
                std::fs::write(path, &table)
                    .map_err(|e| CliError(format!("writing {path}: {e}")))?;
                Ok(Outcome { stdout: String::new(), verified: true })
            } else {
                Ok(Outcome { stdout: table, verified: true })
            }
        }
        "selftest" => {
            let (text, ok) = run_selftest();
            Ok(Outcome { stdout: text, verified: ok })
        }
        other => Err(CliError(format!("unknown command `{other}`"))),
    }
}

fn main() -> ExitCode {
    let mut argv = std::env::args().skip(1);
    let Some(command) = argv.next() else {
        eprintln!("{USAGE}");
        return ExitCode::from(2);
    };
    if command == "--help" || command == "-h" || command == "help" {
        println!("{USAGE}");
        return ExitCode::SUCCESS;
    }
    let args = match parse_args(argv) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let start = Instant::now();
    match dispatch(&command, &args) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            eprintln!("elapsed: {:.2?}", start.elapsed());
            if outcome.verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

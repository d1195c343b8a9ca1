//! `satlim`: saturability, limits and apolarity from plain-text problem files.

mod commands;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use commands::{Fail, Report};

#[derive(Parser, Debug)]
#[command(name = "satlim", version, about = "Saturability of homogeneous ideals, limits and apolarity")]
pub struct Cli {
    /// Emit the JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Include wall-clock timing in the report.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct FileArg {
    /// Problem file.
    pub file: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Saturation I : S_+^∞.
    Saturate(FileArg),
    /// Hilbert function of S/I, or of S/I^k with --power.
    Hilbert {
        #[command(flatten)]
        input: FileArg,
        #[arg(long, default_value_t = 1)]
        power: u32,
        /// Single degree, comma separated for multigradings (e.g. `0,3`).
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
        /// Degrees shown without --at.
        #[arg(long, default_value_t = 12)]
        bound: usize,
    },
    /// Dimension of ObFib(I, Isat).
    Obfib {
        #[command(flatten)]
        input: FileArg,
        /// Generators of a line ideal J for the line-and-points route.
        #[arg(long)]
        line: Option<String>,
        /// Evaluate the cokernel route in one multidegree instead (e.g. `0,-1`).
        #[arg(long, allow_hyphen_values = true)]
        degree: Option<String>,
    },
    /// Dimension and basis of Hom(I, S/I) in one degree.
    Hom0 {
        #[command(flatten)]
        input: FileArg,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        degree: String,
    },
    /// Is I saturable? Supported for (1,d,d,…) with d ≤ 5.
    Decide {
        #[command(flatten)]
        input: FileArg,
        /// Also screen candidate ideals between I and Isat for stickiness.
        #[arg(long)]
        screen: bool,
        /// Treat [Isat] as a smooth point when screening.
        #[arg(long)]
        assert_smooth: bool,
    },
    /// Limit ideal of a family (`family(e):`) or of moving points (`points(e):`).
    Limit {
        #[command(flatten)]
        input: FileArg,
        /// Overrides the `(e)` bound in the file.
        #[arg(long)]
        degree_bound: Option<i64>,
    },
    /// Certify limits of spans (`family(e):` with `limits:` and `orders:`).
    VerifyLimitForms(FileArg),
    /// Cactus rank tools for ternary forms (`form:` files).
    Rank3 {
        #[command(subcommand)]
        op: Rank3Op,
    },
    /// Run the replication suite.
    Replicate {
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Restrict to these criteria, e.g. `AC1,AC4`.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum Rank3Op {
    /// Apolar ideal Ann(F) and the Hilbert function of S/Ann(F).
    Ann(FileArg),
    /// A generator of Ann(F) in degree ⌈(d+1)/2⌉ not divisible by a linear form.
    Middle {
        #[command(flatten)]
        input: FileArg,
        #[arg(long, default_value = "a0")]
        linear: String,
    },
    /// Certificate through a linear form whose square annihilates F.
    SquareCert {
        #[command(flatten)]
        input: FileArg,
        #[arg(long, default_value = "a0")]
        linear: String,
    },
    /// Certificate for a x0 x1 x2^(d-2) + G(x0,x2) + H(x1,x2).
    Special3(FileArg),
    /// Certificate for a x0 x2^(d-1) + G(x0,x1) + H(x1,x2).
    Special4(FileArg),
    /// Search coordinates for a wild-pattern certificate, given a border rank.
    ExcludeWild {
        #[command(flatten)]
        input: FileArg,
        #[arg(long)]
        border_rank: i64,
        /// Extra change of coordinates, rows separated by `;`.
        #[arg(long)]
        matrix: Vec<String>,
    },
}

impl Command {
    fn name(&self) -> String {
        match self {
            Command::Saturate(_) => "saturate".into(),
            Command::Hilbert { .. } => "hilbert".into(),
            Command::Obfib { .. } => "obfib".into(),
            Command::Hom0 { .. } => "hom0".into(),
            Command::Decide { .. } => "decide".into(),
            Command::Limit { .. } => "limit".into(),
            Command::VerifyLimitForms(_) => "verify-limit-forms".into(),
            Command::Replicate { .. } => "replicate".into(),
            Command::Rank3 { op } => format!(
                "rank3 {}",
                match op {
                    Rank3Op::Ann(_) => "ann",
                    Rank3Op::Middle { .. } => "middle",
                    Rank3Op::SquareCert { .. } => "square-cert",
                    Rank3Op::Special3(_) => "special3",
                    Rank3Op::Special4(_) => "special4",
                    Rank3Op::ExcludeWild { .. } => "exclude-wild",
                }
            ),
        }
    }

    fn file(&self) -> Option<&str> {
        match self {
            Command::Saturate(f) | Command::VerifyLimitForms(f) => Some(&f.file),
            Command::Limit { input, .. } => Some(&input.file),
            Command::Hilbert { input, .. } | Command::Obfib { input, .. } | Command::Hom0 { input, .. } | Command::Decide { input, .. } => {
                Some(&input.file)
            }
            Command::Rank3 { op } => Some(match op {
                Rank3Op::Ann(f) | Rank3Op::Special3(f) | Rank3Op::Special4(f) => &f.file,
                Rank3Op::Middle { input, .. } | Rank3Op::SquareCert { input, .. } | Rank3Op::ExcludeWild { input, .. } => &input.file,
            }),
            Command::Replicate { .. } => None,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = cli.command.name();
    let t0 = Instant::now();
    let (text, hash) = match cli.command.file() {
        Some(path) => match std::fs::read(path) {
            Ok(bytes) => (Some(String::from_utf8_lossy(&bytes).into_owned()), format!("{:x}", Sha256::digest(&bytes))),
            Err(e) => return finish(&cli, &name, String::new(), Err(Fail::Input(format!("{path}: {e}"))), t0),
        },
        None => (None, format!("{:x}", Sha256::digest(name.as_bytes()))),
    };
    let out = std::panic::catch_unwind(|| commands::dispatch(&cli.command, text.as_deref()))
        .unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(Fail::Internal(msg.unwrap_or_else(|| "panic".into())))
        });
    finish(&cli, &name, hash, out, t0)
}

fn finish(cli: &Cli, name: &str, hash: String, out: Result<Report, Fail>, t0: Instant) -> ExitCode {
    let timing = cli.timing.then(|| t0.elapsed().as_millis() as u64);
    let code = match &out {
        Ok(r) => r.exit,
        Err(f) => f.code(),
    };
    let mut stdout = std::io::stdout().lock();
    if cli.json {
        let mut obj = json!({
            "command": name,
            "input_hash": hash,
            "certificates": [],
            "assumptions": [],
            "timing_ms": timing,
        });
        match out {
            Ok(r) => {
                if let Some(v) = r.verdict {
                    obj["verdict"] = Value::String(v);
                } else {
                    obj["value"] = r.value;
                }
                obj["certificates"] = Value::Array(r.certificates);
                obj["assumptions"] = json!(r.assumptions);
            }
            Err(f) => {
                obj["verdict"] = Value::String(f.kind().into());
                obj["error"] = Value::String(f.message());
            }
        }
        let _ = writeln!(stdout, "{}", serde_json::to_string_pretty(&obj).expect("json"));
    } else {
        match out {
            Ok(r) => {
                let _ = write!(stdout, "{}", r.text);
                if let Some(ms) = timing {
                    let _ = writeln!(stdout, "time: {ms} ms");
                }
            }
            Err(f) => eprintln!("satlim {name}: {}", f.message()),
        }
    }
    ExitCode::from(code)
}

//! The `ordtop` command line, as a library so it can be driven in-process.

pub mod descriptor;
pub mod suite;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::classes::{dc, rd_auto, sc, wd_finite};
use crate::classify::{classify, space_json};
use crate::error::{Error, Result};
use crate::set::{canonical, PointSet};
use crate::space::FiniteSpace;
use crate::zoo::{curated_results, verify_claim, Claim, Verdict, ZooSpaceId};
pub use descriptor::{Space, SpaceDescriptor};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "ordtop", version, about = "Order-theoretic topology on finite spaces and a zoo of infinite ones")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide the separation and compactness properties of a space.
    Classify {
        #[arg(long)]
        space: PathBuf,
    },
    /// List one of the set families of a finite space.
    Sets {
        #[arg(long)]
        space: PathBuf,
        #[arg(long, value_enum)]
        which: Which,
    },
    /// Check a claim certificate about a zoo space.
    Verify {
        #[arg(long)]
        claim: PathBuf,
    },
    /// Run the theorem catalog over all small posets and random larger ones.
    Suite {
        #[arg(long, default_value_t = 4)]
        max_size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        samples: usize,
        /// Check one representative per isomorphism class.
        #[arg(long)]
        dedup: bool,
        /// Run the per-instance checks on this space only.
        #[arg(long)]
        space: Option<PathBuf>,
    },
    /// List the curated results for the zoo spaces.
    Zoo {
        /// One space id, e.g. JOHNSTONE_SCOTT; all spaces when omitted.
        id: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Which {
    Sc,
    Dc,
    Rd,
    Wd,
    Irr,
    Kx,
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub tool_version: &'static str,
    pub input_digest: String,
    pub command: String,
    pub seed: Option<u64>,
    /// Always null: timing would break byte-identical reports.
    pub wall_clock: Option<f64>,
    pub results: Value,
}

pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn load_space(path: &Path) -> Result<(String, Space)> {
    let text = read(path)?;
    let space = SpaceDescriptor::from_json(&text)?.build()?;
    Ok((text, space))
}

fn named(x: &FiniteSpace, family: &[PointSet]) -> Vec<Vec<String>> {
    canonical(family.to_vec()).iter().map(|&s| x.names(s)).collect()
}

fn report(command: &str, input: &[u8], seed: Option<u64>, results: Value) -> RunReport {
    RunReport {
        tool_version: env!("CARGO_PKG_VERSION"),
        input_digest: digest(input),
        command: command.to_string(),
        seed,
        wall_clock: None,
        results,
    }
}

fn zoo_table(ids: &[ZooSpaceId]) -> Result<Value> {
    let mut out = Vec::new();
    for &id in ids {
        out.push(json!({"space": id, "curated": curated_results(id)?}));
    }
    Ok(Value::Array(out))
}

fn dispatch(cmd: &Command) -> Result<(i32, RunReport)> {
    match cmd {
        Command::Classify { space } => {
            let (text, s) = load_space(space)?;
            let results = match s {
                Space::Finite(x) => json!({"space": space_json(&x), "properties": classify(&x)?}),
                Space::Zoo(id) => zoo_table(&[id])?,
            };
            Ok((EXIT_OK, report("classify", text.as_bytes(), None, results)))
        }
        Command::Sets { space, which } => {
            let (text, s) = load_space(space)?;
            let Space::Finite(x) = s else {
                return Err(Error::WrongGrammar("set families are listed for finite spaces only".into()));
            };
            let family = match which {
                Which::Sc => sc(&x),
                Which::Dc => dc(&x)?,
                Which::Rd => rd_auto(&x)?,
                Which::Wd => wd_finite(&x)?,
                Which::Irr => x.irr_c()?,
                Which::Kx => x.compact_saturated()?,
            };
            let name = format!("{which:?}").to_lowercase();
            let results = json!({"family": name, "sets": named(&x, &family)});
            Ok((EXIT_OK, report(&format!("sets {name}"), text.as_bytes(), None, results)))
        }
        Command::Verify { claim } => {
            let text = read(claim)?;
            let c = Claim::from_json(&text)?;
            let verdict = verify_claim(&c)?;
            let code = if verdict == Verdict::Verified { EXIT_OK } else { EXIT_FAIL };
            let results = json!({"space": c.space, "kind": c.kind(), "verdict": verdict});
            Ok((code, report("verify", text.as_bytes(), None, results)))
        }
        Command::Suite { max_size, seed, samples, dedup, space } => {
            let (input, r) = match space {
                Some(path) => {
                    let (text, s) = load_space(path)?;
                    let Space::Finite(x) = s else {
                        return Err(Error::WrongGrammar("the suite runs on finite spaces only".into()));
                    };
                    crate::limits::check_carrier("suite space", x.len())?;
                    (text, suite::run_single(&x))
                }
                None => (
                    format!("suite max_size={max_size} seed={seed} samples={samples} dedup={dedup}"),
                    suite::run_suite(*max_size, *seed, *samples, *dedup)?,
                ),
            };
            let code = if r.passed() { EXIT_OK } else { EXIT_FAIL };
            let results = serde_json::to_value(&r).expect("suite reports serialize");
            Ok((code, report("suite", input.as_bytes(), Some(*seed), results)))
        }
        Command::Zoo { id } => {
            let ids = match id {
                Some(s) => vec![s.parse::<ZooSpaceId>()?],
                None => ZooSpaceId::ALL.to_vec(),
            };
            let input = id.clone().unwrap_or_default();
            Ok((EXIT_OK, report("zoo", input.as_bytes(), None, zoo_table(&ids)?)))
        }
    }
}

/// Parse `args` (including the program name) and run the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match dispatch(&cli.command) {
        Ok((code, r)) => {
            let mut text = serde_json::to_string_pretty(&r).expect("reports serialize");
            text.push('\n');
            match &cli.out {
                Some(path) => match std::fs::write(path, &text) {
                    Ok(()) => Outcome { code, stdout: String::new(), stderr: String::new() },
                    Err(e) => Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: format!("error: {e}\n") },
                },
                None => Outcome { code, stdout: text, stderr: String::new() },
            }
        }
        Err(e) => Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

//! Command-line front end. [`run`] takes explicit streams so it can be driven
//! from tests; `main` just wires it to the process.

use std::io::{Read, Write};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::alexander::{alexander_quandle, quotient_by_elements};
use crate::iso::are_isomorphic;
use crate::knots::{build_twist_spun_trefoil, equivalence_classes, find_tuple, twist_spun_two_bridge_quandle};
use crate::quandle::{dihedral_quandle, orbits, trivial_quandle, Quandle, QuandleError};
use crate::text::{emit_quandle, parse_automorphism, parse_group, parse_quandle_file, parse_quandle_table};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const DEFAULT_MAX_P: u64 = 1000;

#[derive(Debug, Parser)]
#[command(name = "knotquandle", version, about = "Finite quandles and knot quandles of twist-spun knots")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit a quandle table
    #[command(subcommand)]
    Build(BuildKind),
    /// Knot quandle of the m-twist-spun trefoil (1 <= m <= 5)
    Trefoil { m: u32 },
    /// Knot quandle of the 2-twist-spun 2-bridge knot of type (p, q)
    #[command(allow_negative_numbers = true)]
    Twobridge { p: u64, q: i64 },
    /// Check the quandle axioms of a table
    Check { file: String },
    /// Decide whether two quandles are isomorphic
    Iso { a: String, b: String },
    /// List the orbits of a quandle
    Orbits { file: String },
    /// Classes of units mod p under q ~ +-q^(+-1)
    Classes { p: u64 },
    /// Smallest p with l mutually inequivalent 2-bridge types
    Tuple {
        l: usize,
        #[arg(long = "max-p", default_value_t = DEFAULT_MAX_P)]
        max_p: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum BuildKind {
    Trivial { p: usize },
    Dihedral { p: usize },
    Alexander { group: String, aut: String },
    Quotient {
        group: String,
        aut: String,
        #[arg(required = true)]
        elements: Vec<usize>,
    },
}

/// Runs one command. Returns the process exit code.
pub fn run<I, S>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let rendered = e.render().to_string();
                    let first = rendered.lines().next().unwrap_or("usage error");
                    let _ = writeln!(err, "{first}");
                    EXIT_USAGE
                }
            };
        }
    };
    let mut input = Input { stdin, consumed: false };
    match execute(cli.command, &mut input) {
        Ok(Outcome { text, code }) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_DOMAIN
        }
    }
}

struct Outcome {
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: EXIT_OK }
    }
}

struct Input<'a> {
    stdin: &'a mut dyn Read,
    consumed: bool,
}

impl Input<'_> {
    /// Reads a file, or standard input for `-` (once).
    fn read(&mut self, path: &str) -> Result<String, String> {
        if path == "-" {
            if self.consumed {
                return Err("standard input can only be used once".into());
            }
            self.consumed = true;
            let mut text = String::new();
            self.stdin.read_to_string(&mut text).map_err(|e| format!("stdin: {e}"))?;
            Ok(text)
        } else {
            std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
        }
    }

    fn quandle(&mut self, path: &str) -> Result<Quandle, String> {
        let text = self.read(path)?;
        parse_quandle_file(&text).map_err(|e| format!("{path}: {e}"))
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn execute(command: Command, input: &mut Input<'_>) -> Result<Outcome, String> {
    let text = match command {
        Command::Build(kind) => emit_quandle(&build(kind, input)?),
        Command::Trefoil { m } => {
            let t = build_twist_spun_trefoil(m).map_err(|e| e.to_string())?;
            format!(
                "# trefoil m={} group={} monodromy={}\n{}",
                t.m,
                t.group_name,
                join(&t.monodromy),
                emit_quandle(&t.quandle)
            )
        }
        Command::Twobridge { p, q } => {
            let quandle = twist_spun_two_bridge_quandle(p, q).map_err(|e| e.to_string())?;
            let inversion: Vec<u64> = (0..p).map(|a| (p - a) % p).collect();
            format!(
                "# twobridge p={p} q={q} group=Z/{p} monodromy={}\n{}",
                join(&inversion),
                emit_quandle(&quandle)
            )
        }
        Command::Check { file } => {
            let raw = parse_quandle_table(&input.read(&file)?).map_err(|e| format!("{file}: {e}"))?;
            return Ok(match raw.validate() {
                Ok(()) => Outcome::ok("ok\n".into()),
                Err(QuandleError::Axiom(v)) => {
                    Outcome { text: format!("violation {v}\n"), code: EXIT_DOMAIN }
                }
                Err(e) => return Err(e.to_string()),
            });
        }
        Command::Iso { a, b } => {
            let (qa, qb) = (input.quandle(&a)?, input.quandle(&b)?);
            format!("{}\n", are_isomorphic(&qa, &qb))
        }
        Command::Orbits { file } => {
            let parts = orbits(&input.quandle(&file)?);
            let mut text = format!("orbits {}\n", parts.len());
            for orbit in &parts {
                text.push_str(&join(orbit));
                text.push('\n');
            }
            text
        }
        Command::Classes { p } => {
            let classes = equivalence_classes(p).map_err(|e| e.to_string())?;
            let mut text = format!("classes {}\n", classes.len());
            for class in &classes {
                text.push_str(&join(&class.representatives));
                text.push('\n');
            }
            text
        }
        Command::Tuple { l, max_p } => match find_tuple(l, max_p) {
            Ok(t) => format!("{} {}\n", t.p, join(&t.qs)),
            Err(crate::knots::KnotError::NotFound { .. }) => {
                return Ok(Outcome { text: "notfound\n".into(), code: EXIT_DOMAIN });
            }
            Err(e) => return Err(e.to_string()),
        },
    };
    Ok(Outcome::ok(text))
}

fn build(kind: BuildKind, input: &mut Input<'_>) -> Result<Quandle, String> {
    match kind {
        BuildKind::Trivial { p } => trivial_quandle(p).map_err(|e| e.to_string()),
        BuildKind::Dihedral { p } => dihedral_quandle(p).map_err(|e| e.to_string()),
        BuildKind::Alexander { group, aut } => {
            let g = parse_group(&input.read(&group)?).map_err(|e| format!("{group}: {e}"))?;
            let phi = parse_automorphism(&input.read(&aut)?, &g).map_err(|e| format!("{aut}: {e}"))?;
            alexander_quandle(&g, &phi).map_err(|e| e.to_string())
        }
        BuildKind::Quotient { group, aut, elements } => {
            let g = parse_group(&input.read(&group)?).map_err(|e| format!("{group}: {e}"))?;
            let phi = parse_automorphism(&input.read(&aut)?, &g).map_err(|e| format!("{aut}: {e}"))?;
            quotient_by_elements(&g, &phi, &elements).map_err(|e| e.to_string())
        }
    }
}

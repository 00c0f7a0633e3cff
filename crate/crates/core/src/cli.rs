//! The `minseq` command line.
//!
//! Exit codes: 0 affirmative, 1 negative, 2 usage or input error,
//! 3 search gave up within its caps.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};

use crate::calculus::{check_derivation, parse_derivation, Derivation, System};
use crate::formula::Sequent;
use crate::metatheory::{
    census, closure, contains, degree_report, elaborate, CensusBounds, DegreeBounds, Family,
};
use crate::prover::{search, Policy, Prover, SearchBounds, SearchOutcome};
use crate::semantics::{is_minimal, is_valid, minimize, EnumerationBounds};
use crate::syntax::parse_sequent;

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_EXHAUSTED: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "minseq", version, about = "Minimal sequent calculus toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PolicyArg {
    Leftmost,
    Rightmost,
    Random,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Standard,
    Extended,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse a sequent and print it in canonical form.
    Parse { sequent: String },
    /// Decide classical validity.
    Valid { sequent: String },
    /// Decide minimality (valid, and no proper sub-multiset is valid).
    Minimal { sequent: String },
    /// Print a minimal sub-multiset of a valid sequent.
    Minimize { sequent: String },
    /// Construct a derivation of a minimal sequent.
    Prove {
        sequent: String,
        /// Elaborate the derivation into this system.
        #[arg(long)]
        system: Option<String>,
        #[arg(long, value_enum, default_value = "leftmost")]
        policy: PolicyArg,
        /// Seed for the random policy.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Check a derivation read from a file or stdin.
    Check {
        #[arg(long)]
        system: String,
        /// Derivation file, `-` for stdin.
        #[arg(default_value = "-")]
        file: String,
    },
    /// Backward proof search in a system.
    Search {
        sequent: String,
        #[arg(long)]
        system: String,
        #[arg(long)]
        max_width: Option<usize>,
        #[arg(long)]
        max_depth: Option<usize>,
        /// Do not discard semantically invalid premises.
        #[arg(long)]
        no_pruning: bool,
    },
    /// Decide whether the first system contains the second.
    Contains { outer: String, inner: String },
    /// Rewrite a derivation into another system.
    Elaborate {
        /// Derivation file, `-` for stdin.
        #[arg(long, default_value = "-")]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Classify a family of systems and print a CSV table.
    Census {
        #[arg(long, value_enum, default_value = "standard")]
        family: FamilyArg,
        #[arg(long, default_value_t = 2)]
        vars: usize,
        #[arg(long, default_value_t = 4)]
        max_connectives: usize,
        #[arg(long, default_value_t = 8)]
        spot_checks: usize,
        /// Worker threads (defaults to all cores).
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Formula-, minimal- and sequent-completeness of a system.
    Degrees {
        #[arg(long)]
        system: String,
        #[arg(long, default_value_t = 2)]
        vars: usize,
        #[arg(long, default_value_t = 4)]
        max_connectives: usize,
        #[arg(long, default_value_t = 3)]
        max_formulas: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// A failure already reported to the user, carrying the exit code.
struct Exit(i32);

type Outcome = Result<i32, Exit>;

impl Io<'_> {
    fn fail(&mut self, msg: impl std::fmt::Display) -> Exit {
        let _ = writeln!(self.err, "minseq: {msg}");
        Exit(EXIT_USAGE)
    }

    fn say(&mut self, msg: impl std::fmt::Display) {
        let _ = writeln!(self.out, "{msg}");
    }

    fn read_input(&mut self, file: &str) -> Result<String, Exit> {
        let mut text = String::new();
        let read = if file == "-" {
            self.stdin.read_to_string(&mut text).map(|_| ())
        } else {
            std::fs::read_to_string(file).map(|t| text = t)
        };
        read.map_err(|e| self.fail(format!("cannot read {file}: {e}")))?;
        Ok(text)
    }

    fn sequent(&mut self, text: &str) -> Result<Sequent, Exit> {
        parse_sequent(text).map_err(|e| self.fail(e))
    }

    fn system(&mut self, text: &str) -> Result<System, Exit> {
        System::parse(text).map_err(|e| self.fail(e))
    }

    fn derivation(&mut self, file: &str) -> Result<Derivation, Exit> {
        let text = self.read_input(file)?;
        parse_derivation(text.trim()).map_err(|e| self.fail(e))
    }
}

/// Runs the command line with explicit streams and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_YES };
            let target: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let mut io = Io {
        stdin,
        out: stdout,
        err: stderr,
    };
    match dispatch(cli.command, &mut io) {
        Ok(code) | Err(Exit(code)) => code,
    }
}

fn yes_no(yes: bool) -> i32 {
    if yes {
        EXIT_YES
    } else {
        EXIT_NO
    }
}

fn with_jobs<R: Send>(jobs: Option<usize>, io: &mut Io, f: impl FnOnce() -> R + Send) -> Result<R, Exit> {
    match jobs {
        None => Ok(f()),
        Some(0) => Err(io.fail("--jobs must be at least 1")),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| io.fail(e))?;
            Ok(pool.install(f))
        }
    }
}

fn dispatch(cmd: Command, io: &mut Io) -> Outcome {
    match cmd {
        Command::Parse { sequent } => {
            let s = io.sequent(&sequent)?;
            io.say(&s);
            Ok(EXIT_YES)
        }
        Command::Valid { sequent } => {
            let s = io.sequent(&sequent)?;
            let v = is_valid(&s).map_err(|e| io.fail(e))?;
            io.say(if v { "valid" } else { "invalid" });
            Ok(yes_no(v))
        }
        Command::Minimal { sequent } => {
            let s = io.sequent(&sequent)?;
            let v = is_minimal(&s).map_err(|e| io.fail(e))?;
            io.say(if v { "minimal" } else { "not minimal" });
            Ok(yes_no(v))
        }
        Command::Minimize { sequent } => {
            let s = io.sequent(&sequent)?;
            if !is_valid(&s).map_err(|e| io.fail(e))? {
                io.say("invalid");
                return Ok(EXIT_NO);
            }
            let m = minimize(&s).map_err(|e| io.fail(e))?;
            io.say(m);
            Ok(EXIT_YES)
        }
        Command::Prove {
            sequent,
            system,
            policy,
            seed,
        } => {
            let s = io.sequent(&sequent)?;
            let policy = match (policy, seed) {
                (PolicyArg::Leftmost, _) => Policy::Leftmost,
                (PolicyArg::Rightmost, _) => Policy::Rightmost,
                (PolicyArg::Random, Some(seed)) => Policy::Random(seed),
                (PolicyArg::Random, None) => return Err(io.fail("--policy random requires --seed")),
            };
            let target = system.map(|t| io.system(&t)).transpose()?;
            if !is_valid(&s).map_err(|e| io.fail(e))? {
                io.say("not valid");
                return Ok(EXIT_NO);
            }
            if !is_minimal(&s).map_err(|e| io.fail(e))? {
                io.say("not minimal");
                return Ok(EXIT_NO);
            }
            let mut d = Prover::new(policy)
                .prove_minimal(&s)
                .map_err(|e| io.fail(e))?;
            if let Some(t) = target {
                match elaborate(&d, &t) {
                    Ok(e) => d = e,
                    Err(e) => {
                        let _ = writeln!(io.err, "minseq: {e}");
                        return Ok(EXIT_NO);
                    }
                }
            }
            io.say(d);
            Ok(EXIT_YES)
        }
        Command::Check { system, file } => {
            let sys = io.system(&system)?;
            let d = io.derivation(&file)?;
            let report = check_derivation(&sys, &d);
            if report.ok() {
                io.say("ok");
            }
            for v in &report.violations {
                io.say(v);
            }
            Ok(yes_no(report.ok()))
        }
        Command::Search {
            sequent,
            system,
            max_width,
            max_depth,
            no_pruning,
        } => {
            let s = io.sequent(&sequent)?;
            let sys = io.system(&system)?;
            let mut b = SearchBounds::for_goal(&s);
            if let Some(w) = max_width {
                b.max_width = w;
            }
            if let Some(d) = max_depth {
                b.max_depth = d;
            }
            if no_pruning {
                b = b.syntactic();
            }
            let out = search(&sys, &s, &b);
            io.say(out.summary());
            Ok(match out {
                SearchOutcome::Derivable(d) => {
                    io.say(d);
                    EXIT_YES
                }
                SearchOutcome::Underivable { definitive: true } => EXIT_NO,
                _ => EXIT_EXHAUSTED,
            })
        }
        Command::Contains { outer, inner } => {
            let s = io.system(&outer)?;
            let t = io.system(&inner)?;
            let yes = contains(&s, &t);
            io.say(format!("closure: {}", closure(&s)));
            io.say(if yes { "contains" } else { "does not contain" });
            Ok(yes_no(yes))
        }
        Command::Elaborate { from, to } => {
            let dst = io.system(&to)?;
            let d = io.derivation(&from)?;
            match elaborate(&d, &dst) {
                Ok(e) => {
                    io.say(e);
                    Ok(EXIT_YES)
                }
                Err(e) => {
                    let _ = writeln!(io.err, "minseq: {e}");
                    Ok(EXIT_NO)
                }
            }
        }
        Command::Census {
            family,
            vars,
            max_connectives,
            spot_checks,
            jobs,
        } => {
            let family = match family {
                FamilyArg::Standard => Family::Standard,
                FamilyArg::Extended => Family::Extended,
            };
            let bounds = CensusBounds {
                formulas: EnumerationBounds::formulas(vars, max_connectives),
                spot_checks,
            };
            let report = with_jobs(jobs, io, || census(family, &bounds))?.map_err(|e| io.fail(e))?;
            let _ = write!(io.out, "{}", report.to_csv());
            let complete = report.rows.iter().filter(|r| r.empirical.is_complete()).count();
            let _ = writeln!(
                io.err,
                "{} systems, {} valid formulas, {} complete in {} classes",
                report.rows.len(),
                report.corpus_size,
                complete,
                report.classes.len()
            );
            if !report.consistent() {
                let _ = writeln!(io.err, "prediction and experiment disagree");
            }
            Ok(yes_no(report.consistent()))
        }
        Command::Degrees {
            system,
            vars,
            max_connectives,
            max_formulas,
            jobs,
        } => {
            let sys = io.system(&system)?;
            let bounds = DegreeBounds {
                formulas: EnumerationBounds::formulas(vars, max_connectives),
                sequents: EnumerationBounds::sequents(vars, max_connectives, max_formulas)
                    .distinct(true),
            };
            let report =
                with_jobs(jobs, io, || degree_report(&sys, &bounds))?.map_err(|e| io.fail(e))?;
            io.say(&report);
            Ok(EXIT_YES)
        }
    }
}

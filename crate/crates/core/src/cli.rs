//! Command-line front end. Exit codes: 0 when every check passes, 1 when a
//! check fails, 2 on usage errors.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::family::{build_f, structural_facts};
use crate::irred::{self, DEFAULT_BUDGET};
use crate::verify::{self, SweepReport};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Parser, Debug)]
#[command(name = "relprime", about = "Exact checks for the family (1+X)^n + (-1)^n (X^n + 1)")]
pub struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    /// Write the output to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print f_n and its structural facts.
    Fpoly { n: u32 },
    /// Gcd of f_m and f_n, checked against 6 | mn.
    Gcd { m: u32, n: u32 },
    /// All pairs 2 <= m < n <= MAX.
    Sweep {
        #[arg(long = "max", default_value_t = verify::DEFAULT_SWEEP_BOUND)]
        max: u32,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Irreducibility certificates for the cofactors of orders 7..=MAX.
    Appendix {
        #[arg(long = "max", default_value_t = verify::DEFAULT_APPENDIX_BOUND)]
        max: u32,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        /// Budget for a second attempt on inconclusive cofactors.
        #[arg(long, default_value_t = verify::DEFAULT_FALLBACK_BUDGET)]
        fallback: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Irreducibility certificate for the cofactor of order n.
    Irred {
        n: u32,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Arithmetic modulo 127 around f_6(3).
    Mod127,
    /// Binomial divisibility lemmas, reduction identities and phi divisibility.
    Lemmas {
        #[arg(long, default_value_t = 7)]
        pmax: u64,
        #[arg(long, default_value_t = 3000)]
        nmax: u64,
        #[arg(long, default_value_t = 10)]
        smax: u64,
    },
    /// Regular-sequence decision for (p_1, p_b, p_c).
    Regseq {
        #[arg(long = "max", conflicts_with_all = ["b", "c"])]
        max: Option<u32>,
        #[arg(requires = "c")]
        b: Option<u32>,
        c: Option<u32>,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// The factorizations of f_2, ..., f_10.
    Table,
}

struct Output {
    body: String,
    pass: bool,
}

fn report_output(r: &SweepReport, format: Format) -> Output {
    let body = match format {
        Format::Json => r.to_json() + "\n",
        Format::Text => r.to_text(),
    };
    Output { body, pass: r.pass }
}

fn usage(msg: impl std::fmt::Display) -> std::result::Result<Output, String> {
    Err(msg.to_string())
}

fn execute(cli: &Cli, err: &mut dyn Write) -> std::result::Result<Output, String> {
    let fmt = cli.format;
    match &cli.command {
        Command::Fpoly { n } => {
            let f = build_f(*n).map_err(|e| e.to_string())?;
            let facts = if *n >= 2 { structural_facts(*n).ok() } else { None };
            let body = match fmt {
                Format::Json => serde_json::to_string(&json!({ "n": n, "poly": f, "facts": facts })).unwrap() + "\n",
                Format::Text => {
                    let mut s = format!("f_{n} = {f}\n");
                    if let Some(fa) = &facts {
                        s += &format!(
                            "degree={} leading={} x(x+1)|f={} (x^2+x+1)|f={} f(1)={} palindromic={}\n",
                            fa.degree, fa.leading, fa.divisible_by_x_x1, fa.divisible_by_cyclo3, fa.value_at_1, fa.palindromic
                        );
                    }
                    s
                }
            };
            Ok(Output { body, pass: true })
        }
        Command::Gcd { m, n } => {
            let r = irred::gcd_f_pair(*m, *n).map_err(|e| e.to_string())?;
            let body = match fmt {
                Format::Json => serde_json::to_string(&r).unwrap() + "\n",
                Format::Text => format!(
                    "{} gcd({m},{n}): {} (6|mn: {})\n",
                    if r.consistent { "PASS" } else { "FAIL" },
                    r.gcd,
                    r.expected_trivial
                ),
            };
            Ok(Output { body, pass: r.consistent })
        }
        Command::Sweep { max, jobs } => {
            let r = verify::sweep_theorem(*max, verify::resolve_jobs(*jobs)).map_err(|e| e.to_string())?;
            Ok(report_output(&r, fmt))
        }
        Command::Appendix { max, budget, fallback, jobs } => {
            if *max > verify::DEFAULT_APPENDIX_BOUND {
                let _ = writeln!(err, "warning: appendix up to {max} takes a long time (degrees near {max})");
            }
            let r = verify::sweep_appendix(*max, *budget, *fallback, verify::resolve_jobs(*jobs)).map_err(|e| e.to_string())?;
            Ok(report_output(&r, fmt))
        }
        Command::Irred { n, budget } => {
            let (target, name) = verify::irred_target(*n).map_err(|e| e.to_string())?;
            if target.degree() == Some(0) {
                return usage(format!("cofactor of order {n} is a unit"));
            }
            let cert = irred::prop41_certificate(&target, &name, *budget).map_err(|e| e.to_string())?;
            let pass = cert.is_irreducible();
            let body = match fmt {
                Format::Json => serde_json::to_string(&cert).unwrap() + "\n",
                Format::Text => {
                    let mut s = String::new();
                    for w in &cert.used_primes {
                        s += &format!("p={} n_p={} {}\n", w.p, w.np, w.profile);
                    }
                    s += &format!(
                        "{} {}: {} degree={} nu={} primes_used={} primes_scanned={}\n",
                        if pass { "PASS" } else { "FAIL" },
                        cert.target,
                        cert.verdict.label(),
                        cert.degree,
                        cert.nu,
                        cert.used_primes.len(),
                        cert.primes_scanned
                    );
                    s
                }
            };
            Ok(Output { body, pass })
        }
        Command::Mod127 => {
            let r = verify::check_mod127().map_err(|e| e.to_string())?;
            Ok(report_output(&r, fmt))
        }
        Command::Lemmas { pmax, nmax, smax } => {
            let r = verify::lemma_suite(*pmax, *nmax, *smax).map_err(|e| e.to_string())?;
            Ok(report_output(&r, fmt))
        }
        Command::Regseq { max, b, c, jobs } => match (max, b, c) {
            (None, Some(b), Some(c)) => {
                let regular = verify::regseq_1bc(*b, *c).map_err(|e| e.to_string())?;
                let expected = (*b as u64 * *c as u64).is_multiple_of(6);
                let body = match fmt {
                    Format::Json => serde_json::to_string(&json!({
                        "a": 1, "b": b, "c": c, "regular": regular, "expected": expected
                    }))
                    .unwrap()
                        + "\n",
                    Format::Text => format!(
                        "{} regseq(1,{b},{c}): {}\n",
                        if regular == expected { "PASS" } else { "FAIL" },
                        if regular { "regular" } else { "not regular" }
                    ),
                };
                Ok(Output { body, pass: regular == expected })
            }
            (max, None, None) => {
                let bound = max.unwrap_or(verify::DEFAULT_SWEEP_BOUND);
                let r = verify::sweep_regseq(bound, verify::resolve_jobs(*jobs)).map_err(|e| e.to_string())?;
                Ok(report_output(&r, fmt))
            }
            _ => usage("regseq takes either --max B or two orders b c"),
        },
        Command::Table => Ok(report_output(&verify::check_table(), fmt)),
    }
}

/// Runs the CLI on `argv` (including the program name), writing to the
/// given streams, and returns the exit code.
pub fn run_cli_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = err.write_all(text.as_bytes());
            }
            return code;
        }
    };
    match execute(&cli, err) {
        Ok(output) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &output.body).map_err(|e| e.to_string()),
                None => out.write_all(output.body.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: {e}");
                return 2;
            }
            if output.pass {
                0
            } else {
                1
            }
        }
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

pub fn run_cli<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_cli_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

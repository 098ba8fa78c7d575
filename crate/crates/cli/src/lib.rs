//! Command-line front end: subcommand dispatch, JSON report emission,
//! catalog export and the exit-code contract (0 = all pass,
//! 1 = verification failure, 2 = usage or input error).

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};

use pvix_core::exact::RatFun;
use pvix_core::monad::{verify_monad, MonadCoeffs};
use pvix_core::okamoto::{apply_word, hierarchy_check_with_artifacts, OkamotoOp};
use pvix_core::pvi::catalog::{Catalog, SolutionJson};
use pvix_core::pvi::{catalog, pvi_residual, PviSolution};
use pvix_core::report::{Case, VerificationReport};
use pvix_core::suite;
use pvix_core::Sign;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "pvix",
    about = "Exact verification of an algebraic Painleve VI solution hierarchy",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum SignArg {
    Plus,
    Minus,
}

impl From<SignArg> for Sign {
    fn from(s: SignArg) -> Sign {
        match s {
            SignArg::Plus => Sign::Plus,
            SignArg::Minus => Sign::Minus,
        }
    }
}

#[derive(Args)]
struct OutDir {
    /// Directory for heavy outputs, written as content-hash-named JSON
    #[arg(long = "out")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Verify a cataloged object
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Monad coefficient table commands
    Monad {
        #[command(subcommand)]
        action: MonadAction,
    },
    /// Derive the ground-state solutions from the connection pipeline
    #[command(name = "derive-m0")]
    DeriveM0 {
        #[arg(long)]
        sign: SignArg,
    },
    /// Apply transformation words to cataloged solutions
    Okamoto {
        #[command(subcommand)]
        action: OkamotoAction,
    },
    /// Climb the creation-operator hierarchy and check every link
    Hierarchy {
        #[arg(long = "max-m", default_value_t = 4)]
        max_m: u32,
        #[command(flatten)]
        out: OutDir,
    },
    /// Catalog import/export
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Run the full property suite with a reproducible seed
    Selftest {
        #[arg(long, default_value_t = suite::DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum VerifyTarget {
    /// Exact residual certificate for a cataloged solution
    Pvi {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        sign: SignArg,
    },
}

#[derive(Subcommand)]
enum MonadAction {
    /// Check injectivity and isotropy of the generated coefficients
    Verify {
        #[arg(long)]
        m: u32,
    },
}

#[derive(Subcommand)]
enum OkamotoAction {
    /// Apply a generator word (rightmost-first) to a cataloged solution
    Apply {
        /// Word over R1..R5, B, Q, Q^-1, e.g. "R5" or "B R5"
        #[arg(long)]
        word: String,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        sign: SignArg,
        #[command(flatten)]
        out: OutDir,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Emit every catalog entry in the JSON solution format
    Export {
        #[command(flatten)]
        out: OutDir,
    },
}

/// Serializable shape of a computed (possibly uncataloged) solution.
fn solution_value(name: &str, s: &PviSolution) -> serde_json::Value {
    let strings = |p: &pvix_core::exact::Poly| -> Vec<String> {
        p.coeffs().iter().map(|c| c.to_string()).collect()
    };
    serde_json::json!({
        "name": name,
        "theta": s.theta.0.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
        "lambda": {
            "num": strings(s.lambda.num()),
            "den": strings(s.lambda.den()),
        },
    })
}

fn content_hash_name(content: &str) -> String {
    let digest = Sha256::digest(content.as_bytes());
    let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
    format!("{}.json", &hex[..16])
}

fn write_artifact(dir: &Path, content: &str) -> std::io::Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let path = dir.join(content_hash_name(content));
    fs::write(&path, content)?;
    Ok(path)
}

fn emit(report: &VerificationReport) -> i32 {
    println!(
        "{}",
        serde_json::to_string_pretty(report).expect("report serializes")
    );
    if report.passed() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn usage_error(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    EXIT_USAGE
}

fn lambda_summary(lambda: &RatFun) -> String {
    format!("lambda(w) = {lambda}")
}

fn cmd_verify_pvi(m: u32, sign: Sign) -> i32 {
    let s = match catalog(m, sign) {
        Ok(s) => s,
        Err(e) => return usage_error(&e.to_string()),
    };
    let case = Case::timed(|| match pvi_residual(&s) {
        Ok(r) => Case::check(
            format!("residual {m}{sign}"),
            r.is_zero(),
            if r.is_zero() {
                "identically zero".to_string()
            } else {
                "nonzero residual".to_string()
            },
        ),
        Err(e) => Case::error(format!("residual {m}{sign}"), e.to_string()),
    });
    emit(&VerificationReport::new(
        format!("verify pvi --m {m} --sign {sign}"),
        vec![case],
    ))
}

fn cmd_monad_verify(m: u32) -> i32 {
    emit(&verify_monad(&MonadCoeffs::generate(m)))
}

fn cmd_derive_m0(sign: Sign) -> i32 {
    let case = Case::timed(|| match pvix_core::connection::solve_lambda0(sign) {
        Ok(derived) => {
            let reference = catalog(0, sign).expect("ground state cataloged").lambda;
            Case::check(
                format!("derive-m0 {sign}"),
                derived == reference,
                lambda_summary(&derived),
            )
        }
        Err(e) => Case::error(format!("derive-m0 {sign}"), e.to_string()),
    });
    emit(&VerificationReport::new(
        format!("derive-m0 --sign {sign}"),
        vec![case],
    ))
}

fn cmd_okamoto_apply(word: &str, m: u32, sign: Sign, out: Option<&Path>) -> i32 {
    let op: OkamotoOp = match word.parse() {
        Ok(op) => op,
        Err(e) => return usage_error(&e),
    };
    let start = match catalog(m, sign) {
        Ok(s) => s,
        Err(e) => return usage_error(&e.to_string()),
    };
    let name = format!("apply \"{word}\" to level {m}{sign}");
    let case = Case::timed(|| match apply_word(&op, &start) {
        Ok(image) => {
            let value = solution_value(&name, &image);
            let content = serde_json::to_string_pretty(&value).expect("serializes");
            let detail = match out {
                Some(dir) => match write_artifact(dir, &content) {
                    Ok(path) => format!("theta = {}; written to {}", image.theta, path.display()),
                    Err(e) => return Case::error(name.clone(), format!("write failed: {e}")),
                },
                None => format!("theta = {}; {}", image.theta, lambda_summary(&image.lambda)),
            };
            Case::pass(name.clone(), detail)
        }
        Err(e) => Case::error(name.clone(), e.to_string()),
    });
    emit(&VerificationReport::new(
        format!("okamoto apply --word {word:?} --m {m} --sign {sign}"),
        vec![case],
    ))
}

fn cmd_hierarchy(max_m: u32, out: Option<&Path>) -> i32 {
    let cat = Catalog::standard();
    let (mut report, artifacts) = hierarchy_check_with_artifacts(&cat, max_m);
    if let Some(dir) = out {
        for (name, solution) in &artifacts {
            let content = serde_json::to_string_pretty(&solution_value(name, solution))
                .expect("serializes");
            match write_artifact(dir, &content) {
                Ok(path) => report.cases.push(Case::pass(
                    format!("artifact {name}"),
                    format!("written to {}", path.display()),
                )),
                Err(e) => {
                    report
                        .cases
                        .push(Case::error(format!("artifact {name}"), e.to_string()));
                }
            }
        }
        report = VerificationReport::new(report.command.clone(), report.cases);
    }
    emit(&report)
}

fn cmd_catalog_export(out: Option<&Path>) -> i32 {
    let cat = Catalog::standard();
    let entries: Vec<SolutionJson> = cat.entries().map(SolutionJson::from).collect();
    let content = serde_json::to_string_pretty(&entries).expect("serializes");
    match out {
        Some(dir) => {
            let case = match write_artifact(dir, &content) {
                Ok(path) => Case::pass(
                    "catalog export",
                    format!("{} entries written to {}", entries.len(), path.display()),
                ),
                Err(e) => Case::error("catalog export", e.to_string()),
            };
            emit(&VerificationReport::new("catalog export", vec![case]))
        }
        None => {
            println!("{content}");
            EXIT_PASS
        }
    }
}

/// Parses and dispatches; returns the process exit code.
pub fn run<I>(args: I) -> i32
where
    I: IntoIterator<Item = String>,
{
    let mut argv = vec!["pvix".to_string()];
    argv.extend(args);
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own help/version on stdout with success
            if e.use_stderr() {
                eprint!("{e}");
                return EXIT_USAGE;
            }
            print!("{e}");
            return EXIT_PASS;
        }
    };
    match cli.cmd {
        Cmd::Verify {
            target: VerifyTarget::Pvi { m, sign },
        } => cmd_verify_pvi(m, sign.into()),
        Cmd::Monad {
            action: MonadAction::Verify { m },
        } => cmd_monad_verify(m),
        Cmd::DeriveM0 { sign } => cmd_derive_m0(sign.into()),
        Cmd::Okamoto {
            action:
                OkamotoAction::Apply {
                    word,
                    m,
                    sign,
                    out,
                },
        } => cmd_okamoto_apply(&word, m, sign.into(), out.out.as_deref()),
        Cmd::Hierarchy { max_m, out } => cmd_hierarchy(max_m, out.out.as_deref()),
        Cmd::Catalog {
            action: CatalogAction::Export { out },
        } => cmd_catalog_export(out.out.as_deref()),
        Cmd::Selftest { seed } => emit(&suite::selftest(seed)),
    }
}

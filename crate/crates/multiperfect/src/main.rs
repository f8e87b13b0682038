//! Command-line front end: feasibility checks, spread and code construction,
//! file-based verification.
//!
//! Exit codes: 0 for success and positive verdicts, 1 for negative verdicts
//! (infeasible parameters, failed verification; a witness is printed), 2 for
//! usage, I/O, parse, and size-cap errors.

use clap::{Parser, Subcommand, ValueEnum};
use multiperfect::codes::{
    construct_general_perfect, kernel_basis, verify_cr1_bruteforce, verify_perfect_bruteforce,
    CheckMatrix, PerfectVerdict, RegularVerdict, DEFAULT_ENUM_CAP, DEFAULT_VERIFY_CAP,
};
use multiperfect::io::{
    format_code, format_matrix, format_recipe, format_spread, parse_code, parse_spread,
};
use multiperfect::multispread::{classify, perfect_code_spread, Classification, Multispread};
use multiperfect::params::{enumerate_feasible, feasible_general, Recipe};
use multiperfect::Error;
use serde_json::json;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "multiperfect",
    about = "Multifold 1-perfect codes and multispreads in Hamming graphs",
    version
)]
struct Cli {
    /// Emit machine-readable JSON instead of prose.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a mu-fold 1-perfect code exists in H(n, q).
    ParamsCheck {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        mu: u64,
    },
    /// List every feasible (n, mu) for H(n, q) with n below a bound.
    ParamsEnum {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n_max: usize,
    },
    /// Construct the multispread behind an additive mu-fold 1-perfect code.
    SpreadConstruct {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        mu: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Re-classify a spread file and compare with its header.
    SpreadVerify {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Construct a mu-fold 1-perfect code in H(n, q) as a coset recipe, or
    /// as an explicit codeword list with --explicit.
    CodeConstruct {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        mu: u64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        explicit: bool,
    },
    /// Sweep every ball of the graph against an explicit code file.
    CodeVerify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = VerifyMode::Perfect)]
        mode: VerifyMode,
    },
    /// Turn a spread file into a check matrix file.
    MatrixExport {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyMode {
    /// Every radius-1 ball must contain the same number of codewords.
    Perfect,
    /// Code and complement must each have a uniform code-neighbor count.
    Cr1,
}

fn main() -> ExitCode {
    // Die quietly when a pipe closes early (e.g. piping into head), like
    // other line-oriented tools.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_file(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_file(path: &Path, contents: &str) -> Result<(), String> {
    std::fs::write(path, contents).map_err(|e| format!("{}: {e}", path.display()))
}

fn fail(e: Error) -> String {
    e.to_string()
}

fn fail_in(path: &Path, e: Error) -> String {
    e.display_with_path(&path.display().to_string())
}

/// Factored cardinality, e.g. "8388608 = 2^23" or "6 = 3 * 2^1".
fn cardinality_string(r: &Recipe) -> String {
    let factored = if r.kappa == 1 {
        format!("{}^{}", r.p, r.k)
    } else {
        format!("{} * {}^{}", r.kappa, r.p, r.k)
    };
    format!("{} = {}", r.cardinality, factored)
}

fn violated_names(conds: &[multiperfect::params::Condition]) -> Vec<String> {
    conds.iter().map(|c| c.name().to_string()).collect()
}

fn run(cli: &Cli) -> Result<u8, String> {
    match &cli.command {
        Command::ParamsCheck { q, n, mu } => params_check(cli, *q, *n, *mu),
        Command::ParamsEnum { q, n_max } => params_enum(cli, *q, *n_max),
        Command::SpreadConstruct { p, t, n, mu, out } => spread_construct(cli, *p, *t, *n, *mu, out),
        Command::SpreadVerify { input } => spread_verify(cli, input),
        Command::CodeConstruct {
            q,
            n,
            mu,
            out,
            explicit,
        } => code_construct(cli, *q, *n, *mu, out, *explicit),
        Command::CodeVerify { input, mode } => code_verify(cli, input, *mode),
        Command::MatrixExport { input, out } => matrix_export(cli, input, out),
    }
}

fn params_check(cli: &Cli, q: u64, n: usize, mu: u64) -> Result<u8, String> {
    let verdict = feasible_general(q, n, mu).map_err(fail)?;
    match verdict.recipe {
        Some(r) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "feasible": true,
                        "q": q,
                        "n": n,
                        "mu": mu,
                        "cardinality": r.cardinality.to_string(),
                        "kappa": r.kappa,
                        "k": r.k,
                        "recipe": {
                            "p": r.p,
                            "t": r.t,
                            "m": r.m,
                            "s": r.s,
                            "alpha": r.alpha,
                            "beta": r.beta,
                            "gamma": r.gamma,
                            "mu_additive": r.mu_additive,
                        },
                    }))
                    .expect("static json")
                );
            } else {
                println!("feasible: a {mu}-fold 1-perfect code exists in H({n}, {q})");
                println!("cardinality: {}", cardinality_string(&r));
                println!(
                    "additive part: mu = {}, check matrix {} x {} over GF({})",
                    r.mu_additive,
                    r.m,
                    r.n * r.t,
                    r.p
                );
                println!(
                    "composition: s = {}, alpha = {}, beta = {}, gamma = {}",
                    r.s, r.alpha, r.beta, r.gamma
                );
            }
            Ok(0)
        }
        None => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "feasible": false,
                        "q": q,
                        "n": n,
                        "mu": mu,
                        "violated": violated_names(&verdict.violated),
                    }))
                    .expect("static json")
                );
            } else {
                println!("infeasible: violated {}", violated_names(&verdict.violated).join(", "));
            }
            Ok(1)
        }
    }
}

fn params_enum(cli: &Cli, q: u64, n_max: usize) -> Result<u8, String> {
    let rows = enumerate_feasible(q, n_max).map_err(fail)?;
    if cli.json {
        let items: Vec<_> = rows
            .iter()
            .map(|r| {
                json!({
                    "n": r.n,
                    "mu": r.mu,
                    "kappa": r.kappa,
                    "k": r.k,
                    "degenerate": r.degenerate,
                })
            })
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "q": q,
                "n_max": n_max,
                "rows": items,
            }))
            .expect("static json")
        );
    } else {
        println!("feasible mu-fold 1-perfect parameters in H(n, {q}), n <= {n_max}:");
        for r in &rows {
            let tag = if r.degenerate { "  (degenerate: n = 1)" } else { "" };
            println!("n = {:<4} mu = {:<6} kappa = {:<4} k = {}{}", r.n, r.mu, r.kappa, r.k, tag);
        }
        if rows.is_empty() {
            println!("(none)");
        }
    }
    Ok(0)
}

fn spread_construct(
    cli: &Cli,
    p: u32,
    t: usize,
    n: usize,
    mu: u64,
    out: &Path,
) -> Result<u8, String> {
    let ms = match perfect_code_spread(p, t, n, mu) {
        Ok(ms) => ms,
        Err(Error::Infeasible(conds)) => {
            let names = violated_names(&conds);
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "constructed": false,
                        "violated": names,
                    }))
                    .expect("static json")
                );
            } else {
                println!("infeasible: violated {}", names.join(", "));
            }
            return Ok(1);
        }
        Err(e) => return Err(fail(e)),
    };
    write_file(out, &format_spread(&ms).map_err(fail)?)?;
    if cli.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "constructed": true,
                "p": p,
                "t": t,
                "n": n,
                "m": ms.m(),
                "lambda": ms.lambda(),
                "mu": ms.mu(),
                "path": out.display().to_string(),
            }))
            .expect("static json")
        );
    } else {
        println!(
            "wrote ({}, {})-multispread with {} blocks over GF({})^{} to {}",
            ms.lambda(),
            ms.mu(),
            ms.n(),
            p,
            ms.m(),
            out.display()
        );
    }
    Ok(0)
}

fn spread_verify(cli: &Cli, input: &Path) -> Result<u8, String> {
    let text = read_file(input)?;
    let doc = parse_spread(&text).map_err(|e| fail_in(input, e))?;
    let classification =
        classify(&doc.blocks, doc.p, doc.t, doc.m).map_err(|e| fail_in(input, e))?;
    let (verified, classified, witness) = match &classification {
        Classification::Spread { lambda, mu } => {
            ((*lambda, *mu) == (doc.lambda, doc.mu), Some((*lambda, *mu)), None)
        }
        Classification::NotSpread(w) => (false, None, Some(w.to_string())),
    };
    if cli.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "verified": verified,
                "claimed": [doc.lambda, doc.mu],
                "classified": classified.map(|(l, m)| vec![l, m]),
                "witness": witness,
                "n": doc.blocks.len(),
            }))
            .expect("static json")
        );
    } else if verified {
        println!(
            "verified: ({}, {})-multispread with {} blocks over GF({})^{}",
            doc.lambda,
            doc.mu,
            doc.blocks.len(),
            doc.p,
            doc.m
        );
    } else if let Some((l, m)) = classified {
        println!(
            "classification mismatch: file claims (lambda, mu) = ({}, {}) but the blocks form a ({}, {})-multispread",
            doc.lambda, doc.mu, l, m
        );
    } else {
        println!("not a multispread: {}", witness.unwrap_or_default());
    }
    Ok(if verified { 0 } else { 1 })
}

fn code_construct(
    cli: &Cli,
    q: u64,
    n: usize,
    mu: u64,
    out: &Path,
    explicit: bool,
) -> Result<u8, String> {
    let cap = explicit.then_some(DEFAULT_ENUM_CAP);
    let built = match construct_general_perfect(q, n, mu, cap) {
        Ok(b) => b,
        Err(Error::Infeasible(conds)) => {
            let names = violated_names(&conds);
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "constructed": false,
                        "violated": names,
                    }))
                    .expect("static json")
                );
            } else {
                println!("infeasible: violated {}", names.join(", "));
            }
            return Ok(1);
        }
        Err(e) => return Err(fail(e)),
    };
    let r = &built.recipe;
    let format = if explicit { "code" } else { "recipe" };
    let contents = if let Some(code) = &built.code {
        format_code(code).map_err(fail)?
    } else {
        format_recipe(&built.check, &built.syndromes).map_err(fail)?
    };
    write_file(out, &contents)?;
    if cli.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "constructed": true,
                "q": q,
                "n": n,
                "mu": mu,
                "kappa": r.kappa,
                "cardinality": r.cardinality.to_string(),
                "m": r.m,
                "rank": built.check.rank(),
                "format": format,
                "path": out.display().to_string(),
            }))
            .expect("static json")
        );
    } else {
        println!(
            "constructed a {mu}-fold 1-perfect code in H({n}, {q}): {} codewords as {} coset(s) of an additive kernel",
            cardinality_string(r),
            r.kappa
        );
        println!(
            "check matrix {} x {} over GF({}), rank {}",
            built.check.m(),
            built.check.matrix().cols(),
            r.p,
            built.check.rank()
        );
        println!("wrote {format} to {}", out.display());
    }
    Ok(0)
}

fn code_verify(cli: &Cli, input: &Path, mode: VerifyMode) -> Result<u8, String> {
    let text = read_file(input)?;
    let code = parse_code(&text).map_err(|e| fail_in(input, e))?;
    match mode {
        VerifyMode::Perfect => {
            match verify_perfect_bruteforce(&code, DEFAULT_VERIFY_CAP).map_err(fail)? {
                PerfectVerdict::Perfect { mu } => {
                    if cli.json {
                        println!(
                            "{}",
                            serde_json::to_string_pretty(&json!({
                                "verified": true,
                                "mode": "perfect",
                                "mu": mu,
                                "codewords": code.len(),
                            }))
                            .expect("static json")
                        );
                    } else {
                        println!(
                            "verified: every radius-1 ball of H({}, {}) contains exactly {} of the {} codewords",
                            code.n(),
                            code.q(),
                            mu,
                            code.len()
                        );
                    }
                    Ok(0)
                }
                PerfectVerdict::NotPerfect { witness } => {
                    if cli.json {
                        println!(
                            "{}",
                            serde_json::to_string_pretty(&json!({
                                "verified": false,
                                "mode": "perfect",
                                "witness": witness.to_string(),
                            }))
                            .expect("static json")
                        );
                    } else {
                        println!("not multifold perfect: {witness}");
                    }
                    Ok(1)
                }
            }
        }
        VerifyMode::Cr1 => match verify_cr1_bruteforce(&code, DEFAULT_VERIFY_CAP).map_err(fail)? {
            RegularVerdict::Regular(qm) => {
                if cli.json {
                    let rows = qm.rows();
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&json!({
                            "verified": true,
                            "mode": "cr1",
                            "lambda": qm.lambda,
                            "mu": qm.mu,
                            "quotient": [rows[0].to_vec(), rows[1].to_vec()],
                        }))
                        .expect("static json")
                    );
                } else {
                    println!(
                        "verified: completely regular with covering radius 1, quotient matrix {qm}"
                    );
                }
                Ok(0)
            }
            RegularVerdict::NotRegular { in_code, witness } => {
                if cli.json {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&json!({
                            "verified": false,
                            "mode": "cr1",
                            "in_code": in_code,
                            "witness": witness.to_string(),
                        }))
                        .expect("static json")
                    );
                } else {
                    let side = if in_code { "codewords" } else { "non-codewords" };
                    println!("not completely regular (uneven {side}): {witness}");
                }
                Ok(1)
            }
        },
    }
}

fn matrix_export(cli: &Cli, input: &Path, out: &Path) -> Result<u8, String> {
    let text = read_file(input)?;
    let doc = parse_spread(&text).map_err(|e| fail_in(input, e))?;
    let ms = match Multispread::new(doc.blocks, doc.p, doc.t, doc.m) {
        Ok(ms) => ms,
        Err(Error::NotMultispread(w)) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "exported": false,
                        "witness": w.to_string(),
                    }))
                    .expect("static json")
                );
            } else {
                println!("not a multispread: {w}");
            }
            return Ok(1);
        }
        Err(e) => return Err(fail_in(input, e)),
    };
    let cm = CheckMatrix::from_multispread(&ms);
    write_file(out, &format_matrix(&cm).map_err(fail)?)?;
    let (rank, basis) = kernel_basis(&cm);
    if cli.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "exported": true,
                "rows": cm.m(),
                "cols": cm.matrix().cols(),
                "rank": rank,
                "kernel_dimension": basis.len(),
                "path": out.display().to_string(),
            }))
            .expect("static json")
        );
    } else {
        println!(
            "wrote {} x {} check matrix over GF({}) to {} (rank {}, kernel dimension {})",
            cm.m(),
            cm.matrix().cols(),
            cm.p(),
            out.display(),
            rank,
            basis.len()
        );
    }
    Ok(0)
}

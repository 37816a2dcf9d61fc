use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use regge3j::census::{run_census, CensusConfig, CensusKind, OutputFormat};
use regge3j::flat::{classify_flat, detect_flat_forbidden, identify_alpha, prolong_value};
use regge3j::partition::{classify, classify_super_beta, selector_profile};
use regge3j::regge::orbit;
use regge3j::{Error, HalfInt, ParityClass, Symbol3j};

#[derive(Parser)]
#[command(
    name = "regge3j",
    version,
    about = "Exact Wigner 3-j and super 3-j symbols"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a classical 3-j symbol.
    Eval(SymbolArgs),
    /// Evaluate a super 3-j symbol.
    SuperEval {
        #[command(flatten)]
        symbol: SymbolArgs,
        #[arg(long, value_enum, default_value_t = Path::Product)]
        path: Path,
    },
    /// Print the Regge orbit of a symbol as symmetry classes.
    Orbit(SymbolArgs),
    /// Print the partition label and selector profile of a symbol.
    Classify(SymbolArgs),
    /// Prolong a forbidden flat beta symbol and identify its alpha partner.
    Prolong(SymbolArgs),
    /// Enumerate all symmetry classes up to a spin cutoff and verify the
    /// partition laws.
    Census {
        #[arg(long, value_enum, default_value_t = Kind::Classical)]
        kind: Kind,
        #[arg(long)]
        jmax: HalfInt,
        #[arg(long, value_enum, default_value_t = Format::JsonLines)]
        format: Format,
        /// Worker count; 0 uses all cores. REGGE3J_THREADS overrides.
        #[arg(long, default_value_t = 0)]
        threads: usize,
    },
}

/// Six half-integer tokens: the j-triple, a literal `/`, then the m-triple.
#[derive(Args)]
struct SymbolArgs {
    #[arg(
        num_args = 7,
        allow_hyphen_values = true,
        value_name = "J1 J2 J3 / M1 M2 M3"
    )]
    tokens: Vec<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Path {
    Product,
    Direct,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Classical,
    Super,
    Flat,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    JsonLines,
    Csv,
}

fn parse_symbol(args: &SymbolArgs) -> Result<Symbol3j, Error> {
    args.tokens.join(" ").parse()
}

fn exit_code_for(e: &Error) -> ExitCode {
    match e {
        Error::Internal(_) => ExitCode::from(3),
        _ => ExitCode::from(2),
    }
}

fn run(command: &Command) -> Result<(), Error> {
    let out = std::io::stdout();
    match command {
        Command::Eval(args) => {
            let s = parse_symbol(args)?;
            s.validate_classical().map_err(Error::NotClassical)?;
            let v = regge3j::wigner_3j(&s)?;
            println!("{}", serde_json::to_string(&v).expect("serialize"));
        }
        Command::SuperEval { symbol, path } => {
            let s = parse_symbol(symbol)?;
            s.validate_super().map_err(|v| match v {
                regge3j::SuperViolation::Parent => Error::ForbiddenParent,
                other => Error::NotSuper(other),
            })?;
            match path {
                Path::Product => {
                    let v = regge3j::super_3j(&s)?;
                    println!("{}", serde_json::to_string(&v).expect("serialize"));
                }
                Path::Direct => {
                    let v = regge3j::super3j::compute_super_3j_direct::<regge3j::Int>(&s)?;
                    println!("{}", serde_json::to_string(&v).expect("serialize"));
                }
                Path::Both => {
                    let p = regge3j::super_3j(&s)?;
                    let d = regge3j::super3j::compute_super_3j_direct::<regge3j::Int>(&s)?;
                    if p != d {
                        return Err(Error::Internal(format!(
                            "path mismatch on {s}: product {p}, direct {d}"
                        )));
                    }
                    println!(
                        "{}",
                        json!({
                            "product": p,
                            "direct": d,
                        })
                    );
                }
            }
        }
        Command::Orbit(args) => {
            let s = parse_symbol(args)?;
            let r = orbit(&s);
            let classes: Vec<String> = r
                .classes
                .iter()
                .map(|c| c.canonical().to_string())
                .collect();
            println!("{}", json!({ "classes": classes, "n_empty": r.n_empty }));
        }
        Command::Classify(args) => {
            let s = parse_symbol(args)?;
            let label = match s.classify_parity() {
                ParityClass::Beta { .. } if s.validate_classical().is_err() => {
                    classify_super_beta(&s)?
                }
                _ => classify(&s)?,
            };
            let p = selector_profile(&s);
            println!(
                "{}",
                json!({
                    "parity": s.classify_parity().label(),
                    "partition": label.0,
                    "selectors": {
                        "n0_d": p.n0_d,
                        "n0_pm": p.n0_pm,
                        "n0_m": p.n0_m,
                        "n0_r": p.n0_r,
                    },
                })
            );
        }
        Command::Prolong(args) => {
            let s = parse_symbol(args)?;
            let f = detect_flat_forbidden(&s).ok_or(Error::NotFlatForbidden)?;
            let v = prolong_value::<regge3j::Int>(&f)?;
            let alpha = identify_alpha(&f);
            println!(
                "{}",
                json!({
                    "value": v,
                    "alpha": alpha.to_string(),
                    "partition": classify_flat(&f)?.0,
                })
            );
        }
        Command::Census {
            kind,
            jmax,
            format,
            threads,
        } => {
            let config = CensusConfig {
                j_max: *jmax,
                kind: match kind {
                    Kind::Classical => CensusKind::Classical,
                    Kind::Super => CensusKind::Super,
                    Kind::Flat => CensusKind::Flat,
                },
                format: match format {
                    Format::JsonLines => OutputFormat::JsonLines,
                    Format::Csv => OutputFormat::Csv,
                },
                parallelism: *threads,
            };
            let report = run_census(&config);
            report
                .write(config.format, out.lock())
                .map_err(|e| Error::Internal(format!("output: {e}")))?;
            if !report.violations.is_empty() {
                return Err(Error::Internal(format!(
                    "census found {} violation(s)",
                    report.violations.len()
                )));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are not usage errors.
            if e.use_stderr() {
                let _ = e.print();
                return ExitCode::from(1);
            }
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    match run(&cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = writeln!(std::io::stderr(), "error: {e}");
            exit_code_for(&e)
        }
    }
}

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use schurlie::decompose::{class3_stem, make_catalog, CatalogId, Family};
use schurlie::{FieldSpec, LieAlgebra};
use schurlie_cli::document::AlgebraDocument;
use schurlie_cli::report::{build_report, render_pretty, ReportOptions, DEFAULT_PRIME};
use schurlie_cli::suite::{builtin_suite, load_directory, run_suite};
use schurlie_cli::CliError;

#[derive(Debug, Parser)]
#[command(name = "schurlie", version, about = "Multipliers, squares and capability of small nilpotent Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse a document and check the Jacobi identity.
    Validate { path: PathBuf },
    /// Print a named algebra as a document.
    Catalog {
        /// A, H, L4_3, L5_5, L5_8, L6_22, L6_7_2, L1 or StemClass3.
        name: Option<String>,
        #[arg(long)]
        list: bool,
        /// Heisenberg rank.
        #[arg(long, default_value_t = 1)]
        m: usize,
        /// Dimension of `A` and `StemClass3`.
        #[arg(long)]
        n: Option<usize>,
        /// Parameter of L6_22.
        #[arg(long, allow_hyphen_values = true)]
        eps: Option<String>,
        /// Parameter of L6_7_2.
        #[arg(long, allow_hyphen_values = true)]
        eta: Option<String>,
        /// Work over GF(p) instead of the rationals.
        #[arg(long)]
        prime: Option<u64>,
        /// Dimension of an added abelian summand.
        #[arg(long, default_value_t = 0)]
        abelian: usize,
    },
    /// Classify a document and evaluate the formulas.
    Report {
        path: PathBuf,
        /// Also run the oracles and compare.
        #[arg(long)]
        oracle: bool,
        /// Prime for the epicenter sweep of rational input (default 5).
        #[arg(long)]
        prime: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Apply a seeded random change of basis first.
        #[arg(long)]
        randomize_basis: bool,
        #[arg(long)]
        pretty: bool,
    },
    /// Cross-check the builtin suite or a directory of documents.
    Check {
        /// `builtin` or a directory.
        #[arg(default_value = "builtin")]
        suite: String,
        #[arg(long)]
        prime: Option<u64>,
        #[arg(long)]
        pretty: bool,
    },
}

const NAMES: &[(&str, &str, &str)] = &[
    ("A", "--n", "abelian of dimension n"),
    ("H", "2m+1", "Heisenberg of rank m (--m)"),
    ("L4_3", "4", "[x1,x2]=x3, [x1,x3]=x4"),
    ("L5_5", "5", "[x1,x2]=x3, [x1,x3]=x5, [x2,x4]=x5"),
    ("L5_8", "5", "[x1,x2]=x4, [x1,x3]=x5"),
    ("L6_22", "6", "--eps e; characteristic other than 2"),
    ("L6_7_2", "6", "--eta e; characteristic 2"),
    ("L1", "7", "[x1,x2]=x6=[x3,x4], [x1,x5]=x7=[x2,x3]"),
    ("StemClass3", "--n >= 4", "class-3 stem with two-dimensional derived subalgebra"),
];

fn read(path: &Path) -> Result<AlgebraDocument, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    AlgebraDocument::parse(&text)
}

fn validate(path: &Path) -> Result<(), CliError> {
    let l = read(path)?.to_algebra()?;
    let violations = l.validate();
    for v in &violations {
        let residual: Vec<String> = v.residual.iter().map(ToString::to_string).collect();
        println!("jacobi fails at ({}, {}, {}): [{}]", v.i + 1, v.j + 1, v.k + 1, residual.join(", "));
    }
    if violations.is_empty() {
        println!("ok: dim {} over {}", l.dim(), l.field());
        Ok(())
    } else {
        Err(CliError::Validation(violations.len()))
    }
}

fn catalog_algebra(
    name: &str,
    m: usize,
    n: Option<usize>,
    eps: Option<&str>,
    eta: Option<&str>,
    field: FieldSpec,
    abelian: usize,
) -> Result<LieAlgebra, CliError> {
    let param = |s: Option<&str>| s.map(|s| field.parse(s)).transpose();
    let need_n = || n.ok_or_else(|| CliError::Usage(format!("{name} needs --n")));
    let family = match name {
        "A" => Family::Abelian(need_n()?),
        "H" => Family::Heisenberg(m),
        "L4_3" => Family::L43,
        "L5_5" => Family::L55,
        "L5_8" => Family::L58,
        "L6_22" => Family::L622(param(eps)?),
        "L6_7_2" => Family::L672(param(eta)?),
        "L1" => Family::L1,
        "StemClass3" => {
            let stem = class3_stem(field, need_n()?)?;
            return Ok(stem.direct_sum(&LieAlgebra::abelian(field, abelian))?);
        }
        other => return Err(CliError::Usage(format!("unknown catalog name {other:?}; try --list"))),
    };
    Ok(make_catalog(&CatalogId::new(family, abelian), field)?)
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Validate { path } => validate(&path),
        Command::Catalog {
            name,
            list,
            m,
            n,
            eps,
            eta,
            prime,
            abelian,
        } => {
            if list {
                for (name, dim, note) in NAMES {
                    println!("{name:<12}{dim:<10}{note}");
                }
                return Ok(());
            }
            let name = name.ok_or_else(|| CliError::Usage("catalog needs a name or --list".into()))?;
            let field = match prime {
                Some(p) => FieldSpec::prime(p)?,
                None => FieldSpec::Rationals,
            };
            let l = catalog_algebra(&name, m, n, eps.as_deref(), eta.as_deref(), field, abelian)?;
            println!("{}", AlgebraDocument::from_algebra(&l).to_json());
            Ok(())
        }
        Command::Report {
            path,
            oracle,
            prime,
            seed,
            randomize_basis,
            pretty,
        } => {
            let doc = read(&path)?;
            let opts = ReportOptions {
                oracle,
                prime,
                seed,
                randomize_basis,
            };
            let report = build_report(&doc, &opts)?;
            if pretty {
                print!("{}", render_pretty(&report));
            } else {
                println!("{}", report.to_json());
            }
            match report.failed() {
                0 => Ok(()),
                n => Err(CliError::Mismatch(n)),
            }
        }
        Command::Check { suite, prime, pretty } => {
            let prime = prime.unwrap_or(DEFAULT_PRIME);
            FieldSpec::prime(prime)?;
            let cases = if suite == "builtin" {
                builtin_suite()
            } else {
                load_directory(Path::new(&suite))?
            };
            let summary = run_suite(&cases, prime);
            if pretty {
                print!("{}", schurlie_cli::suite::render_pretty(&summary));
            } else {
                println!("{}", summary.to_json());
            }
            summary.into_result().map(drop).map_err(|(_, e)| e)
        }
    }
}

fn main() -> ExitCode {
    // clap's own usage errors exit with 2, which is taken by Jacobi failures.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

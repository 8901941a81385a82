use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use schurdet::asmlab::{self, EnumOptions, RefinedTable};
use schurdet::exactnum::fmt_rat;
use schurdet::harness::{self, SuiteOptions, SuiteReport};
use schurdet::symfunc;
use schurdet::{BigRat, Exec, Partition};

#[derive(Parser)]
#[command(name = "schurdet", version, about = "Exact verification of staircase Schur identities and ASM enumeration")]
struct Cli {
    /// Run every check on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Alternating sign matrices.
    Asm {
        #[command(subcommand)]
        action: AsmAction,
    },
    /// Schur polynomials.
    Schur {
        #[command(subcommand)]
        action: SchurAction,
    },
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Summarize a saved JSON report.
    Report {
        path: PathBuf,
    },
}

#[derive(clap::Args, Clone, Copy)]
struct SizeArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = asmlab::DEFAULT_CAP)]
    cap: usize,
    /// Enumerate even above the cap.
    #[arg(long)]
    force: bool,
}

impl SizeArgs {
    fn opts(&self) -> EnumOptions {
        EnumOptions { cap: self.cap, force: self.force }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Kind {
    /// First-row and last-row positions of the +1.
    FirstLast,
    /// First-row and first-column positions of the +1.
    Rowcol,
}

#[derive(Subcommand)]
enum AsmAction {
    /// Number of n×n ASMs, by enumeration and by the product formula.
    Count {
        #[command(flatten)]
        size: SizeArgs,
    },
    /// Doubly-refined enumeration table.
    Refined {
        #[command(flatten)]
        size: SizeArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, value_enum, default_value = "first-last")]
        kind: Kind,
    },
    /// Determinant of the doubly-refined table against its closed form.
    Det {
        #[command(flatten)]
        size: SizeArgs,
    },
}

#[derive(Subcommand)]
enum SchurAction {
    /// Evaluate s_λ at a point.
    Eval {
        #[arg(long)]
        partition: String,
        /// `ones` or a comma-separated list of rationals, one per part.
        #[arg(long, default_value = "ones")]
        at: String,
    },
    /// Print s_λ as a polynomial in z1..zN.
    Poly {
        #[arg(long)]
        partition: String,
    },
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// asm, theorem1, theorem2, wheel, recursion, bazin, minexp, schur, appendixB or all.
    suite: String,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    l: Option<u32>,
    #[arg(long)]
    lp: Option<u32>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long = "N")]
    big_n: Option<usize>,
    #[arg(long, default_value_t = harness::DEFAULT_SEED)]
    seed: u64,
    /// Write the JSON report here.
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long, default_value_t = asmlab::DEFAULT_CAP)]
    cap: usize,
    #[arg(long)]
    force: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    schurdet::par::configure_threads_from_env();
    let exec = if cli.sequential { Exec::Sequential } else { Exec::default() };
    match run(cli.command, exec) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn parse_partition(s: &str) -> Result<Partition> {
    s.parse::<Partition>().with_context(|| format!("invalid partition {s:?}"))
}

fn parse_point(at: &str, len: usize) -> Result<Vec<BigRat>> {
    if at == "ones" {
        return Ok(vec![BigRat::from_integer(1.into()); len]);
    }
    let pts = at
        .split(',')
        .map(|t| t.trim().parse::<BigRat>().with_context(|| format!("invalid rational {t:?}")))
        .collect::<Result<Vec<_>>>()?;
    if pts.len() != len {
        bail!("expected {len} values, got {}", pts.len());
    }
    Ok(pts)
}

fn print_table(t: &RefinedTable, format: Format) {
    match format {
        Format::Text => print!("{t}"),
        Format::Csv => print!("{}", t.to_csv()),
        Format::Json => println!("{}", serde_json::to_string_pretty(&t.to_json()).expect("json")),
    }
}

fn run(command: Command, exec: Exec) -> Result<bool> {
    match command {
        Command::Asm { action } => match action {
            AsmAction::Count { size } => {
                let count = asmlab::enumerate(size.n, size.opts())?.count();
                let formula = asmlab::count_formula(size.n);
                println!("{count}");
                Ok(formula == count.into())
            }
            AsmAction::Refined { size, format, kind } => {
                let t = match kind {
                    Kind::FirstLast => asmlab::refined_matrix(size.n, size.opts(), exec)?,
                    Kind::Rowcol => asmlab::refined_rowcol(size.n, size.opts(), exec)?,
                };
                print_table(&t, format);
                Ok(true)
            }
            AsmAction::Det { size } => {
                let (det, expected) = asmlab::theorem1_values(size.n, size.opts(), exec)?;
                let ok = BigRat::from_integer(det.clone()) == expected;
                println!("det = {det}\nexpected = {}\n{}", fmt_rat(&expected), if ok { "match" } else { "MISMATCH" });
                Ok(ok)
            }
        },
        Command::Schur { action } => match action {
            SchurAction::Eval { partition, at } => {
                let lambda = parse_partition(&partition)?;
                if lambda.is_empty() {
                    println!("1");
                    return Ok(true);
                }
                let pts = parse_point(&at, lambda.len())?;
                let v = symfunc::schur_specialized(&lambda, &pts)?;
                println!("{}", fmt_rat(&v));
                Ok(true)
            }
            SchurAction::Poly { partition } => {
                let lambda = parse_partition(&partition)?;
                println!("{}", symfunc::schur_bialternant(&lambda));
                Ok(true)
            }
        },
        Command::Verify(args) => {
            let opts = SuiteOptions {
                seed: args.seed,
                exec,
                n: args.n,
                l: args.l,
                lp: args.lp,
                m: args.m,
                big_n: args.big_n,
                asm: EnumOptions { cap: args.cap, force: args.force },
            };
            let report = harness::run_suite(&args.suite, &opts)?;
            match args.format {
                Format::Json => println!("{}", report.to_json()),
                _ => print!("{}", report.to_text()),
            }
            if let Some(path) = args.json {
                std::fs::write(&path, report.to_json()).with_context(|| format!("writing {}", path.display()))?;
            }
            Ok(report.ok())
        }
        Command::Report { path } => {
            let text = std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
            let report = SuiteReport::from_json(&text).context("malformed report")?;
            print!("{}", report.to_text());
            Ok(report.ok())
        }
    }
}

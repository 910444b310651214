use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use kminor::groups::orbits_limited;
use kminor::{
    build_mdd, format_miniterms, parse, partition_space_limited, to_dot, CatalogueCode,
    FunctionTable, Partition, Relation, SubgroupKind, DEFAULT_SPACE_LIMIT,
};

mod report;
mod verify;

use report::{analyze, Skip};
use verify::Status;

#[derive(Parser)]
#[command(
    name = "kminor",
    version,
    about = "Minors and minor complexities of k-valued functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every metric of one function as JSON.
    Analyze {
        #[command(flatten)]
        func: FunctionArgs,
        /// Metrics to leave out (imp, sub).
        #[arg(long, value_delimiter = ',')]
        skip: Vec<SkipMetric>,
    },
    /// Emit the minor decision diagram in DOT.
    Mdd {
        #[command(flatten)]
        func: FunctionArgs,
        /// Write to this file instead of stdout.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Partition P_k^n under an equivalence relation.
    Classify {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, value_enum)]
        relation: RelationArg,
        /// Only list members with f(0,...,0) = 0.
        #[arg(long)]
        zero_preserving: bool,
    },
    /// Partition P_k^n into orbits of an affine subgroup.
    Orbits {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, value_parser = parse_group)]
        group: SubgroupKind,
    },
    /// Parse a ring-sum expression and print its codes.
    Parse {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        expr: String,
    },
    /// Check the built-in fixtures.
    Verify {
        /// A suite id or "all".
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: String,
        #[arg(long, value_enum, default_value_t = VerifyFormat::Text)]
        format: VerifyFormat,
    },
}

#[derive(Args)]
struct FunctionArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
    /// Decimal catalogue code.
    #[arg(long, group = "function")]
    code: Option<String>,
    /// Base-k digit string, one digit per row starting at row 0.
    #[arg(long, group = "function")]
    table: Option<String>,
    /// Ring-sum expression such as "x1^0x2 ⊕ x1x3".
    #[arg(long, group = "function")]
    rse: Option<String>,
}

impl FunctionArgs {
    fn function(&self) -> Result<FunctionTable> {
        let f = match (&self.code, &self.table, &self.rse) {
            (Some(c), None, None) => CatalogueCode::parse_decimal(self.k, self.n, c)?.decode()?,
            (None, Some(t), None) => CatalogueCode::parse_digits(self.k, self.n, t)?.decode()?,
            (None, None, Some(e)) => parse(e, self.k, self.n)?,
            _ => bail!("give exactly one of --code, --table, --rse"),
        };
        Ok(f)
    }
}

#[derive(Args)]
struct SpaceArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = PartitionFormat::Csv)]
    format: PartitionFormat,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Lift the limit of 2^26 functions.
    #[arg(long)]
    unsafe_large: bool,
    /// Write to this file instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

impl SpaceArgs {
    fn limit(&self) -> u64 {
        if self.unsafe_large {
            u64::MAX
        } else {
            DEFAULT_SPACE_LIMIT
        }
    }

    fn run(&self, job: impl FnOnce(u64) -> kminor::Result<Partition> + Send) -> Result<Partition> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs)
            .build()?;
        Ok(pool.install(|| job(self.limit()))?)
    }

    fn emit(&self, p: &Partition) -> Result<()> {
        let text = match self.format {
            PartitionFormat::Csv => p.to_csv(),
            PartitionFormat::Json => p.to_json() + "\n",
        };
        write_out(self.output.as_ref(), &text)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SkipMetric {
    Imp,
    Sub,
}

#[derive(Clone, Copy, ValueEnum)]
enum RelationArg {
    Cmr,
    Mnr,
    Nof,
    Equiv,
}

impl From<RelationArg> for Relation {
    fn from(r: RelationArg) -> Relation {
        match r {
            RelationArg::Cmr => Relation::Cmr,
            RelationArg::Mnr => Relation::Mnr,
            RelationArg::Nof => Relation::Nof,
            RelationArg::Equiv => Relation::Equiv,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PartitionFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyFormat {
    Text,
    Json,
}

fn parse_group(s: &str) -> Result<SubgroupKind, String> {
    s.parse()
}

fn parse_suite(s: &str) -> Result<String, String> {
    if s == "all" || verify::SUITES.contains(&s) {
        Ok(s.to_string())
    } else {
        Err(format!(
            "unknown suite (all, {})",
            verify::SUITES.join(", ")
        ))
    }
}

fn write_out(path: Option<&PathBuf>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            io::stdout().lock().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Analyze { func, skip } => {
            let skip = Skip {
                imp: skip.iter().any(|s| matches!(s, SkipMetric::Imp)),
                sub: skip.iter().any(|s| matches!(s, SkipMetric::Sub)),
            };
            let report = analyze(&func.function()?, skip);
            println!("{}", serde_json::to_string_pretty(&report)?);
        }
        Command::Mdd { func, dot } => {
            write_out(dot.as_ref(), &to_dot(&build_mdd(&func.function()?)))?;
        }
        Command::Classify {
            space,
            relation,
            zero_preserving,
        } => {
            let p = space
                .run(|limit| partition_space_limited(space.k, space.n, relation.into(), limit))?;
            space.emit(&if zero_preserving {
                p.zero_preserving()
            } else {
                p
            })?;
        }
        Command::Orbits { space, group } => {
            let p = space.run(|limit| orbits_limited(space.k, space.n, group, limit))?;
            space.emit(&p)?;
        }
        Command::Parse { k, n, expr } => {
            let f = parse(&expr, k, n)?;
            let out = serde_json::json!({
                "k": k,
                "n": n,
                "code": f.encode().to_string(),
                "digits": report::digits(&f),
                "miniterms": format_miniterms(&f),
            });
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
        Command::Verify { suite, format } => {
            let ids: Vec<&str> = if suite == "all" {
                verify::SUITES.to_vec()
            } else {
                vec![suite.as_str()]
            };
            let mut worst = Status::Pass;
            let mut reports = Vec::new();
            for id in ids {
                let r = verify::run(id)?;
                worst = worst.max(r.status);
                if format == VerifyFormat::Text {
                    print_text(&r);
                }
                reports.push(r);
            }
            if format == VerifyFormat::Json {
                println!("{}", serde_json::to_string_pretty(&reports)?);
            }
            if worst == Status::Fail {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_text(r: &verify::SuiteReport) {
    println!("{} {}", r.status, r.suite);
    for c in r.checks.iter().filter(|c| c.status != Status::Pass) {
        println!("  {} {}", c.status, c.name);
        println!("    expected {}", c.expected);
        println!("    actual   {}", c.actual);
    }
    for note in &r.notes {
        println!("  note {note}");
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use tanglegrams::oracle::{Oracle, Permutation, TreeShape};
use tanglegrams::partitions::partitions_of;
use tanglegrams::species::{
    binary_tree_cycle_index, labeled_counts, odd_double_factorial, r_closed_form, r_coefficient,
};
use tanglegrams::table::{render, CountTable, OutputFormat};
use tanglegrams::{CycleIndexSeries, Error, TanglegramCounter, TanglegramFamily};

/// Exit code for internal mismatches (failed cross-checks, non-integral counts).
const EXIT_MISMATCH: u8 = 1;
/// Exit code for usage errors and guard violations.
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "tanglegrams", version, about = "Count unlabeled tanglegrams with cycle-index series")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print counts for one or more tanglegram families.
    Counts {
        /// Family to count; repeat for several.
        #[arg(long = "family", value_enum, required = true)]
        families: Vec<FamilyArg>,
        /// Chain length for `chain` and `chain-unordered`.
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: u32,
        #[arg(long, value_enum, default_value_t = FormatArg::Table)]
        format: FormatArg,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print the cycle index of rooted (R) or unrooted (U) binary trees.
    Zindex {
        #[arg(value_enum)]
        which: TreeKind,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_degree: u32,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Cross-check the symbolic counts against brute-force enumeration.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: u32,
    },
    /// Print the unlabeled generating function of R or U.
    Gf {
        #[arg(value_enum)]
        which: TreeKind,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_degree: u32,
        #[arg(long, value_enum, default_value_t = FormatArg::Table)]
        format: FormatArg,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    RootedOrdered,
    RootedUnordered,
    UnrootedOrdered,
    UnrootedUnordered,
    Chain,
    ChainUnordered,
}

impl FamilyArg {
    fn family(self, k: usize) -> TanglegramFamily {
        match self {
            FamilyArg::RootedOrdered => TanglegramFamily::RootedOrdered,
            FamilyArg::RootedUnordered => TanglegramFamily::RootedUnordered,
            FamilyArg::UnrootedOrdered => TanglegramFamily::UnrootedOrdered,
            FamilyArg::UnrootedUnordered => TanglegramFamily::UnrootedUnordered,
            FamilyArg::Chain => TanglegramFamily::Chain(k),
            FamilyArg::ChainUnordered => TanglegramFamily::ChainUnordered(k),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Json,
    Csv,
    Bfile,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Table => OutputFormat::Table,
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Bfile => OutputFormat::Bfile,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TreeKind {
    #[value(name = "R")]
    Rooted,
    #[value(name = "U")]
    Unrooted,
}

#[derive(Debug)]
enum Failure {
    Library(Error),
    Io(io::Error),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn emit(text: &str, output: Option<&PathBuf>) -> io::Result<()> {
    match output {
        Some(path) => fs::write(path, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn cmd_counts(
    families: &[TanglegramFamily],
    max_n: usize,
    format: OutputFormat,
    output: Option<&PathBuf>,
) -> Result<(), Failure> {
    let counter = TanglegramCounter::new(max_n);
    let tables = families
        .iter()
        .map(|&family| Ok(CountTable::new(family.to_string(), counter.counts(family)?)))
        .collect::<Result<Vec<_>, Error>>()?;
    emit(&render(format, &tables), output)?;
    Ok(())
}

fn tree_cycle_index(which: TreeKind, max_degree: usize) -> Result<CycleIndexSeries, Error> {
    let counter = TanglegramCounter::new(max_degree);
    match which {
        TreeKind::Rooted => Ok(counter.rooted_cycle_index().clone()),
        TreeKind::Unrooted => counter.unrooted_cycle_index().cloned(),
    }
}

fn cmd_zindex(which: TreeKind, max_degree: usize, output: Option<&PathBuf>) -> Result<(), Failure> {
    let series = tree_cycle_index(which, max_degree)?;
    emit(&format!("{series}\n"), output)?;
    Ok(())
}

fn cmd_gf(
    which: TreeKind,
    max_degree: usize,
    format: OutputFormat,
    output: Option<&PathBuf>,
) -> Result<(), Failure> {
    let series = tree_cycle_index(which, max_degree)?;
    let (label, first) = match which {
        TreeKind::Rooted => ("rooted-trees", 1),
        TreeKind::Unrooted => ("unrooted-trees", 2),
    };
    let rows = series
        .unlabeled_gf()
        .into_iter()
        .enumerate()
        .skip(first)
        .map(|(n, c)| {
            if c.is_integer() {
                Ok((n, c.to_integer()))
            } else {
                Err(Error::NonIntegerCount {
                    family: label.into(),
                    n,
                    value: c.to_string(),
                })
            }
        })
        .collect::<Result<Vec<_>, Error>>()?;
    emit(&render(format, &[CountTable::new(label, rows)]), output)?;
    Ok(())
}

struct Report {
    failures: usize,
}

impl Report {
    fn record(&mut self, name: &str, result: Result<String, String>) {
        match result {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(detail) => {
                self.failures += 1;
                println!("FAIL {name}: {detail}");
            }
        }
    }
}

fn cmd_verify(max_n: usize) -> Result<(), Failure> {
    let oracle = Oracle::default();
    let limit = oracle.limits.max_burnside_leaves;
    if max_n > limit {
        return Err(Error::SizeLimitExceeded {
            what: "verify",
            n: max_n,
            limit,
        }
        .into());
    }
    let counter = TanglegramCounter::new(max_n);
    let mut report = Report { failures: 0 };

    report.record(
        "rooted enumeration size",
        (1..=max_n).try_for_each(|n| {
            let got = oracle.enumerate_rooted(n).map_err(|e| e.to_string())?.len();
            let want = labeled_counts(n).0;
            if want == got.into() {
                Ok(())
            } else {
                Err(format!("n = {n}: {got} trees, expected {want}"))
            }
        })
        .map(|()| format!("n = 1..{max_n}")),
    );

    if max_n >= 2 {
        report.record(
            "unrooted enumeration size",
            (2..=max_n).try_for_each(|n| {
                let got = oracle.enumerate_unrooted(n).map_err(|e| e.to_string())?.len();
                let want = odd_double_factorial(2 * n as i64 - 5);
                if want == got.into() {
                    Ok(())
                } else {
                    Err(format!("n = {n}: {got} trees, expected {want}"))
                }
            })
            .map(|()| format!("n = 2..{max_n}")),
        );
    } else {
        println!("SKIP unrooted enumeration size: needs n >= 2");
    }

    let zr = binary_tree_cycle_index(max_n);
    let rooted_tables = (1..=max_n)
        .map(|n| oracle.fixed_points(TreeShape::Rooted, n))
        .collect::<Result<Vec<_>, Error>>()?;
    let unrooted_tables = (2..=max_n)
        .map(|n| oracle.fixed_points(TreeShape::Unrooted, n))
        .collect::<Result<Vec<_>, Error>>()?;

    report.record(
        "fixed points equal Z_R coefficients",
        rooted_tables
            .iter()
            .try_for_each(|table| {
                for lambda in partitions_of(table.leaves()) {
                    let sigma = Permutation::with_cycle_type(&lambda);
                    let fixed = table.get(&sigma).unwrap_or_default();
                    let r = r_coefficient(&lambda, &zr).map_err(|e| e.to_string())?;
                    if BigInt::from(fixed) != r {
                        return Err(format!("λ = {lambda}: {fixed} fixed trees, r_λ = {r}"));
                    }
                }
                Ok(())
            })
            .map(|()| format!("n = 1..{max_n}")),
    );

    report.record(
        "closed form equals Z_R coefficients",
        (0..=max_n)
            .try_for_each(|n| {
                for lambda in partitions_of(n) {
                    let r = r_coefficient(&lambda, &zr).map_err(|e| e.to_string())?;
                    let closed = r_closed_form(&lambda);
                    if closed != r {
                        return Err(format!("λ = {lambda}: closed form {closed}, r_λ = {r}"));
                    }
                }
                Ok(())
            })
            .map(|()| format!("n = 0..{max_n}")),
    );

    report.record(
        "rooted-ordered direct formula equals Z_R * Z_R",
        (1..=max_n)
            .try_for_each(|n| {
                let direct = counter.count(TanglegramFamily::RootedOrdered, n);
                let kron = counter.count_via_cycle_index(TanglegramFamily::RootedOrdered, n);
                match (direct, kron) {
                    (Ok(a), Ok(b)) if a == b => Ok(()),
                    (a, b) => Err(format!("n = {n}: {a:?} vs {b:?}")),
                }
            })
            .map(|()| format!("n = 1..{max_n}")),
    );

    let families = [
        TanglegramFamily::RootedOrdered,
        TanglegramFamily::RootedUnordered,
        TanglegramFamily::UnrootedOrdered,
        TanglegramFamily::UnrootedUnordered,
        TanglegramFamily::Chain(1),
        TanglegramFamily::Chain(3),
        TanglegramFamily::ChainUnordered(3),
    ];
    for family in families {
        let lo = family.min_leaves();
        let name = format!("Burnside equals species count for {family}");
        if max_n < lo {
            println!("SKIP {name}: needs n >= {lo}");
            continue;
        }
        let tables = match TreeShape::of(family) {
            TreeShape::Rooted => &rooted_tables,
            TreeShape::Unrooted => &unrooted_tables,
        };
        report.record(
            &name,
            tables
                .iter()
                .try_for_each(|table| {
                    let n = table.leaves();
                    let brute = table.orbit_count(family).map_err(|e| e.to_string())?;
                    let symbolic = counter.count(family, n).map_err(|e| e.to_string())?;
                    if brute == symbolic {
                        Ok(())
                    } else {
                        Err(format!("n = {n}: Burnside {brute}, species {symbolic}"))
                    }
                })
                .map(|()| format!("n = {lo}..{max_n}")),
        );
    }

    if report.failures == 0 {
        println!("all checks passed");
        Ok(())
    } else {
        println!("{} check(s) failed", report.failures);
        Err(Failure::Mismatch)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Counts {
            families,
            k,
            max_n,
            format,
            output,
        } => {
            let families: Vec<_> = families.iter().map(|f| f.family(k as usize)).collect();
            cmd_counts(&families, max_n as usize, format.into(), output.as_ref())
        }
        Command::Zindex {
            which,
            max_degree,
            output,
        } => cmd_zindex(which, max_degree as usize, output.as_ref()),
        Command::Verify { max_n } => cmd_verify(max_n as usize),
        Command::Gf {
            which,
            max_degree,
            format,
            output,
        } => cmd_gf(which, max_degree as usize, format.into(), output.as_ref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(EXIT_MISMATCH),
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Library(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::NonIntegerCoefficient { .. } | Error::NonIntegerCount { .. } => {
                    ExitCode::from(EXIT_MISMATCH)
                }
                Error::SizeLimitExceeded { limit, .. } => {
                    eprintln!("hint: the brute-force oracle is limited to n <= {limit}");
                    ExitCode::from(EXIT_USAGE)
                }
                _ => ExitCode::from(EXIT_USAGE),
            }
        }
    }
}

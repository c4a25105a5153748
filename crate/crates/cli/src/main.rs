use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cubelift::type_b::{phi_ranks, render_table, table_b};
use cubelift::verify::suite;
use cubelift::weak::write_word_list;
use cubelift::{
    augmented_pre_reeb, build_tower, deletion_a, deletion_b, pre_reeb, type_a, type_b, Error, HeightChoice, TowerKind,
    TowerRealization, WeakOrder,
};

#[derive(Parser)]
#[command(name = "cubelift", version, about = "Cubic coordinates along weak-order deletion towers")]
struct Cli {
    /// Worker threads for pair scans.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the weak order of rank N.
    Gen(GenArgs),
    /// Write the pre-Reeb graph of the deletion from rank N to N-1.
    Reeb(ReebArgs),
    /// Build the tower realization up to rank N and write its coordinates.
    Lift(LiftArgs),
    /// Run every check for rank N and print one line per assertion.
    Verify(Target),
    /// Write the type-B table of the augmented graph in chain order.
    ExportTable(TableArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Type {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
}

impl From<Type> for TowerKind {
    fn from(t: Type) -> Self {
        match t {
            Type::A => TowerKind::A,
            Type::B => TowerKind::B,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Dot,
    Tsv,
    Words,
}

#[derive(Clone, Copy, ValueEnum)]
enum Heights {
    Nu,
    Minimal,
}

#[derive(Args)]
struct Target {
    #[arg(long = "type", value_enum)]
    kind: Type,
    #[arg(long)]
    rank: usize,
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    target: Target,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ReebArgs {
    #[command(flatten)]
    target: Target,
    /// Add the auxiliary edges.
    #[arg(long)]
    augmented: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct LiftArgs {
    #[command(flatten)]
    target: Target,
    #[arg(long, value_enum, default_value = "nu")]
    heights: Heights,
    #[arg(long, value_enum, default_value = "tsv")]
    format: Format,
    /// Coordinates go here and the per-level metadata to `<out>.meta`.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, default_value_t = 3)]
    rank: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::RankTooLarge { .. } | Error::RankTooSmall { .. } | Error::Parse { .. } | Error::Io(_) => {
                Failure::Usage(e.to_string())
            }
            e => Failure::Verification(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn reject_format(format: Format, allowed: &[Format], command: &str) -> Result<(), Failure> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        let name = format.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
        Err(Failure::Usage(format!("{command} does not support --format {name}")))
    }
}

fn gen(args: &GenArgs) -> Result<(), Failure> {
    reject_format(args.format, &[Format::Text, Format::Dot, Format::Words], "gen")?;
    let n = args.target.rank;
    let (text, dot, words) = match args.target.kind {
        Type::A => {
            let order = WeakOrder::from_words(cubelift::perms(n)?)?;
            (order.poset().to_text(), order.poset().hasse_digraph().to_dot(&format!("S{n}"), None), write_word_list(order.words()))
        }
        Type::B => {
            let order = WeakOrder::from_words(cubelift::signed_perms(n)?)?;
            (order.poset().to_text(), order.poset().hasse_digraph().to_dot(&format!("W{n}"), None), write_word_list(order.words()))
        }
    };
    let text = match args.format {
        Format::Dot => dot,
        Format::Words => words,
        _ => text,
    };
    emit(args.out.as_deref(), &text)
}

fn reeb(args: &ReebArgs) -> Result<(), Failure> {
    reject_format(args.format, &[Format::Text, Format::Dot], "reeb")?;
    let n = args.target.rank;
    let build = |pr| if args.augmented { augmented_pre_reeb(pr) } else { pre_reeb(pr) };
    let (graph, ranks, name) = match args.target.kind {
        Type::A => {
            let d = deletion_a(n)?;
            let mut g = build(d.projection())?;
            type_a::relabel(&d, &mut g);
            let ranks = type_a::class_subsets(&d, &g).iter().map(|a| a.len()).collect::<Vec<_>>();
            (g.graph().clone(), ranks, format!("A{n}"))
        }
        Type::B => {
            let d = deletion_b(n)?;
            let mut g = build(d.projection())?;
            type_b::relabel(&d, &mut g);
            let ranks = phi_ranks(&d, &g);
            (g.graph().clone(), ranks, format!("B{n}"))
        }
    };
    let text = match args.format {
        Format::Dot => graph.to_dot(&name, Some(&ranks)),
        _ => graph.to_text(),
    };
    emit(args.out.as_deref(), &text)
}

fn lift(args: &LiftArgs) -> Result<(), Failure> {
    reject_format(args.format, &[Format::Tsv], "lift")?;
    let choice = match args.heights {
        Heights::Nu => HeightChoice::Nu,
        Heights::Minimal => HeightChoice::Minimal,
    };
    let t: TowerRealization<i64> = build_tower(args.target.kind.into(), args.target.rank, choice)?;
    t.check()?;
    emit(args.out.as_deref(), &t.to_tsv())?;
    match &args.out {
        Some(path) => {
            let mut meta = path.clone().into_os_string();
            meta.push(".meta");
            fs::write(meta, t.metadata())?;
        }
        None => eprint!("{}", t.metadata()),
    }
    Ok(())
}

fn verify(target: &Target) -> Result<(), Failure> {
    let report = suite(target.kind.into(), target.rank)?;
    print!("{report}");
    let failed = report.failures().count();
    println!("{} of {} checks passed", report.len() - failed, report.len());
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Verification(format!("{failed} checks failed")))
    }
}

fn export_table(args: &TableArgs) -> Result<(), Failure> {
    let rows = table_b(args.rank)?;
    emit(args.out.as_deref(), &render_table(&rows))
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Gen(a) => gen(a),
        Command::Reeb(a) => reeb(a),
        Command::Lift(a) => lift(a),
        Command::Verify(t) => verify(t),
        Command::ExportTable(a) => export_table(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.max(1)).build() {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match pool.install(|| run(&cli)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

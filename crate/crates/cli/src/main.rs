use std::io::{IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use permeq::report::{self, Format, TableRequest, VerifyConfig};
use permeq::sequences::{Figure1, Kind};
use permeq::{
    parse_partition, Engine, Error, Mode, Permutation, Preset, ReplacementPartition, RewriteSystem,
};

#[derive(Parser)]
#[command(name = "permeq", version, about = "Equivalence classes of permutations under pattern-replacement moves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Class counts and identity-class sizes next to published values.
    Table(TableArgs),
    /// Run every check and exit non-zero on any mismatch.
    Verify(VerifyArgs),
    /// List the class of a permutation.
    Class(ClassArgs),
    /// Shortest move sequence between two permutations.
    Path(PathArgs),
}

#[derive(Args)]
#[group(multiple = false)]
struct PartitionChoice {
    /// Named partition (P1..P7, PK).
    #[arg(long)]
    preset: Vec<Preset>,
    /// Explicit partition, e.g. "123,321" or "213,231|132,312".
    #[arg(long)]
    partition: Vec<String>,
}

impl PartitionChoice {
    fn resolve(&self) -> Result<Vec<ReplacementPartition>, Error> {
        let mut out: Vec<ReplacementPartition> = self.preset.iter().map(Preset::partition).collect();
        for spec in &self.partition {
            out.push(parse_partition(spec)?);
        }
        Ok(out)
    }

    fn single(&self) -> Result<ReplacementPartition, Error> {
        let all = self.resolve()?;
        match <[ReplacementPartition; 1]>::try_from(all) {
            Ok([one]) => Ok(one),
            Err(v) => Err(Error::InvalidArgument(format!(
                "expected exactly one partition, got {}",
                v.len()
            ))),
        }
    }
}

#[derive(Args)]
struct Common {
    #[arg(long, default_value = "text")]
    format: Format,
    /// Worker threads (default: all cores).
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    partition: PartitionChoice,
    /// general, adjacent, doubly or values; repeatable.
    #[arg(long)]
    mode: Vec<Mode>,
    /// classes or identity; repeatable.
    #[arg(long)]
    kind: Vec<Kind>,
    /// Largest n (default: 7 general, 8 adjacent or values, 10 doubly).
    #[arg(long)]
    n_max: Option<usize>,
    /// Published values to compare against (default: built in).
    #[arg(long)]
    fixtures: Option<PathBuf>,
    #[arg(long, short)]
    quiet: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 7)]
    n_max: usize,
    #[arg(long)]
    fixtures: Option<PathBuf>,
    #[arg(long, short)]
    quiet: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct ClassArgs {
    perm: Permutation,
    #[command(flatten)]
    partition: PartitionChoice,
    #[arg(long, default_value = "general")]
    mode: Mode,
    /// Print at most this many members.
    #[arg(long)]
    limit: Option<usize>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct PathArgs {
    from: Permutation,
    to: Permutation,
    #[command(flatten)]
    partition: PartitionChoice,
    #[arg(long, default_value = "general")]
    mode: Mode,
    #[command(flatten)]
    common: Common,
}

enum Outcome {
    Ok,
    Negative,
}

fn progress_printer(quiet: bool) -> impl FnMut(&str) {
    let tty = std::io::stderr().is_terminal();
    move |msg: &str| {
        if quiet {
            return;
        }
        let mut err = std::io::stderr().lock();
        if tty {
            let _ = write!(err, "\r\x1b[2K{msg}");
        } else {
            let _ = writeln!(err, "{msg}");
        }
    }
}

fn clear_progress(quiet: bool) {
    if !quiet && std::io::stderr().is_terminal() {
        eprint!("\r\x1b[2K");
    }
}

fn load_figure(path: &Option<PathBuf>) -> Result<Figure1, Error> {
    match path {
        Some(p) => Figure1::from_path(p),
        None => Ok(Figure1::embedded().clone()),
    }
}

fn run_table(args: TableArgs) -> Result<Outcome, Error> {
    let mut partitions = args.partition.resolve()?;
    if partitions.is_empty() {
        partitions = Preset::NUMBERED.iter().map(Preset::partition).collect();
    }
    let modes = if args.mode.is_empty() {
        vec![Mode::General, Mode::AdjPositions, Mode::AdjBoth]
    } else {
        args.mode
    };
    let kinds = if args.kind.is_empty() { Kind::ALL.to_vec() } else { args.kind };
    let req = TableRequest {
        n_max: args.n_max,
        threads: args.common.threads,
        figure: load_figure(&args.fixtures)?,
        ..TableRequest::new(partitions, modes, kinds)
    };
    let rows = report::table(&req, &mut progress_printer(args.quiet))?;
    clear_progress(args.quiet);
    print!("{}", report::render(&rows, args.common.format)?);
    Ok(Outcome::Ok)
}

fn run_verify(args: VerifyArgs) -> Result<Outcome, Error> {
    let cfg = VerifyConfig {
        threads: args.common.threads,
        figure: load_figure(&args.fixtures)?,
        ..VerifyConfig::new(args.n_max)
    };
    let rows = report::verify(&cfg, &mut progress_printer(args.quiet))?;
    clear_progress(args.quiet);
    print!("{}", report::render(&rows, args.common.format)?);
    let failures = rows.iter().filter(|r| r.is_failure()).count();
    let matches = rows.iter().filter(|r| r.status == report::Status::Match).count();
    eprintln!("{} rows, {matches} MATCH, {failures} failing", rows.len());
    Ok(if failures == 0 { Outcome::Ok } else { Outcome::Negative })
}

fn run_class(args: ClassArgs) -> Result<Outcome, Error> {
    let system = RewriteSystem::new(args.partition.single()?, args.mode);
    let engine = Engine::with_threads(args.common.threads);
    let members = engine.eq_class(&args.perm, &system)?;
    let shown = &members[..args.limit.unwrap_or(members.len()).min(members.len())];
    match args.common.format {
        Format::Json => {
            let doc = json!({
                "permutation": args.perm,
                "partition": system.partition().label(),
                "mode": args.mode,
                "size": members.len(),
                "members": shown,
                "truncated": shown.len() < members.len(),
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
        }
        Format::Csv => {
            println!("rank,permutation");
            for p in shown {
                println!("{},{}", p.rank().index, csv_field(&p.to_string()));
            }
        }
        Format::Text => {
            println!("size {}", members.len());
            for p in shown {
                println!("{p}");
            }
            if shown.len() < members.len() {
                println!("... {} more", members.len() - shown.len());
            }
        }
    }
    Ok(Outcome::Ok)
}

fn csv_field(s: &str) -> String {
    if s.contains(',') { format!("\"{s}\"") } else { s.to_string() }
}

fn run_path(args: PathArgs) -> Result<Outcome, Error> {
    let system = RewriteSystem::new(args.partition.single()?, args.mode);
    let engine = Engine::with_threads(args.common.threads);
    let path = engine.reachable(&args.from, &args.to, &system)?;
    if let Some(path) = &path {
        path.verify(&system)?;
    }
    match (args.common.format, &path) {
        (Format::Json, _) => {
            let doc = match &path {
                Some(p) => json!({ "connected": true, "steps": p.len(), "path": p }),
                None => json!({ "connected": false, "from": args.from, "to": args.to }),
            };
            println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
        }
        (Format::Csv, Some(p)) => {
            println!("step,before,positions,from_pattern,to_pattern,after");
            let mut afters = p.steps.iter().skip(1).map(|s| s.before).chain([p.end]);
            for (i, step) in p.steps.iter().enumerate() {
                let positions: Vec<String> = step.mv.positions.iter().map(|x| (x + 1).to_string()).collect();
                println!(
                    "{},{},\"{}\",{},{},{}",
                    i + 1,
                    csv_field(&step.before.to_string()),
                    positions.join(","),
                    step.mv.from_pattern,
                    step.mv.to_pattern,
                    csv_field(&afters.next().expect("one after per step").to_string()),
                );
            }
        }
        (Format::Text, Some(p)) => {
            println!("{}", p.start);
            let mut afters = p.steps.iter().skip(1).map(|s| s.before).chain([p.end]);
            for step in &p.steps {
                println!("  {}", step.mv);
                println!("{}", afters.next().expect("one after per step"));
            }
            println!("steps {}", p.len());
        }
        (_, None) => println!("NOT_CONNECTED"),
    }
    Ok(if path.is_some() { Outcome::Ok } else { Outcome::Negative })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Table(a) => run_table(a),
        Command::Verify(a) => run_verify(a),
        Command::Class(a) => run_class(a),
        Command::Path(a) => run_path(a),
    };
    match result {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Negative) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

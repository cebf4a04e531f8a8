use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use msca::analysis::{
    admits_agreement, admits_strong_agreement, branching_violations, is_safe, is_strongly_safe,
};
use msca::io::{self, a1_operands, a2_operands};
use msca::synthesis::{choreography, mpc, orchestration, Controller, MpcProperty, TieBreak};
use msca::{compose, Msca, StateVector};

/// Composition and controller synthesis for modal service contract automata.
#[derive(Parser)]
#[command(name = "msca", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compose automata left to right.
    Compose {
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
    },
    /// Synthesise a controller.
    Synth(SynthArgs),
    /// Decide a property; prints true or false.
    Check(CheckArgs),
    /// Print rank and sizes.
    Info { input: PathBuf },
    /// Render as Graphviz.
    Export {
        #[arg(long, required = true)]
        dot: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
        input: PathBuf,
    },
    /// Write the bundled example automata.
    Fixtures {
        #[arg(long)]
        dir: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Mpc,
    Orchestration,
    Choreography,
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Agreement,
    StrongAgreement,
}

#[derive(Clone, Copy, ValueEnum)]
enum Tiebreak {
    Lexmin,
    Lexmax,
}

#[derive(Args)]
struct SynthArgs {
    #[arg(long)]
    kind: Kind,
    /// Property enforced by the most permissive controller.
    #[arg(long, conflicts_with = "forbidden")]
    property: Option<Property>,
    /// States to avoid, e.g. "q0,p1;q2,p1".
    #[arg(long)]
    forbidden: Option<String>,
    #[arg(long, value_enum, default_value = "lexmin")]
    tiebreak: Tiebreak,
    #[arg(short, long)]
    output: Option<PathBuf>,
    input: PathBuf,
}

#[derive(Args)]
#[command(group(ArgGroup::new("property").required(true).args([
    "safe", "strongly_safe", "admits_agreement", "admits_strong_agreement", "branching",
])))]
struct CheckArgs {
    #[arg(long)]
    safe: bool,
    #[arg(long)]
    strongly_safe: bool,
    #[arg(long)]
    admits_agreement: bool,
    #[arg(long)]
    admits_strong_agreement: bool,
    /// Also prints every violating transition.
    #[arg(long)]
    branching: bool,
    input: PathBuf,
}

fn read(path: &Path) -> anyhow::Result<Msca> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    io::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(output: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_forbidden(spec: &str) -> BTreeSet<StateVector> {
    spec.split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|s| StateVector::new(s.split(',').map(str::trim)))
        .collect()
}

fn slug(name: &str) -> String {
    let mut out = String::new();
    for (i, c) in name.chars().enumerate() {
        if c.is_uppercase() && i > 0 {
            out.push('-');
        }
        out.extend(c.to_lowercase());
    }
    out
}

fn synth(args: &SynthArgs) -> anyhow::Result<ExitCode> {
    let a = read(&args.input)?;
    let tiebreak = match args.tiebreak {
        Tiebreak::Lexmin => TieBreak::LexMin,
        Tiebreak::Lexmax => TieBreak::LexMax,
    };
    let controller = match args.kind {
        Kind::Mpc => {
            let property = match (&args.forbidden, args.property) {
                (Some(states), _) => MpcProperty::ExplicitForbidden(parse_forbidden(states)),
                (None, Some(Property::StrongAgreement)) => MpcProperty::StrongAgreement,
                (None, _) => MpcProperty::Agreement,
            };
            mpc(&a, &property)?
        }
        Kind::Orchestration | Kind::Choreography
            if args.property.is_some() || args.forbidden.is_some() =>
        {
            bail!("--property and --forbidden only apply to --kind mpc")
        }
        Kind::Orchestration => orchestration(&a)?,
        Kind::Choreography => choreography(&a, tiebreak)?,
    };
    match controller {
        Controller::Empty => {
            eprintln!("synthesis result is empty");
            Ok(ExitCode::from(1))
        }
        Controller::Automaton(k) => {
            emit(args.output.as_deref(), &io::serialize(&k))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn check(args: &CheckArgs) -> anyhow::Result<ExitCode> {
    let a = read(&args.input)?;
    let holds = if args.safe {
        is_safe(&a)
    } else if args.strongly_safe {
        is_strongly_safe(&a)
    } else if args.admits_agreement {
        admits_agreement(&a)
    } else if args.admits_strong_agreement {
        admits_strong_agreement(&a)
    } else {
        let violations = branching_violations(&a, &BTreeSet::new());
        println!("{}", violations.is_empty());
        for t in &violations {
            println!("{t}");
        }
        return Ok(ExitCode::SUCCESS);
    };
    println!("{holds}");
    Ok(ExitCode::SUCCESS)
}

fn write_fixtures(dir: &Path) -> anyhow::Result<()> {
    for (scenario, operands) in [("a1", a1_operands()), ("a2", a2_operands())] {
        let sub = dir.join(scenario);
        fs::create_dir_all(&sub).with_context(|| format!("creating {}", sub.display()))?;
        for (i, a) in operands.iter().enumerate() {
            let path = sub.join(format!("{}-{}.json", i + 1, slug(a.name())));
            emit(Some(&path), &io::serialize(a))?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Compose { output, inputs } => {
            let operands = inputs
                .iter()
                .map(|p| read(p))
                .collect::<anyhow::Result<Vec<_>>>()?;
            emit(output.as_deref(), &io::serialize(&compose(&operands)?))?;
        }
        Command::Synth(args) => return synth(&args),
        Command::Check(args) => return check(&args),
        Command::Info { input } => {
            let a = read(&input)?;
            println!("name: {}", a.name());
            println!("rank: {}", a.rank());
            println!("states: {}", a.states().len());
            println!("transitions: {}", a.transitions().len());
            println!("finals: {}", a.finals().len());
            println!("flavor: {}", a.flavor());
        }
        Command::Export { output, input, .. } => {
            emit(output.as_deref(), &io::to_dot(&read(&input)?))?;
        }
        Command::Fixtures { dir } => write_fixtures(&dir)?,
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

//! `cocone`: colimits, limits, expressions and regular languages from files.
//!
//! Exit codes: 0 success, 2 unreadable or malformed input (and usage
//! errors), 3 type errors, 4 a failed property check.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cocone::check::{run_suite, CheckConfig, Suite};
use cocone::dcospan::{colim_functor, lim_functor};
use cocone::expr::{compile, eval_mode, parse_program, Program};
use cocone::io::{self, DiagramInput};
use cocone::kleene::kleene_pipeline;
use cocone::{Arrow, Error, Mode};

#[derive(Parser)]
#[command(name = "cocone", version, about = "Finite colimits and limits, computed compositionally")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Cospan,
    Span,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Cospan => Mode::Cospan,
            ModeArg::Span => Mode::Span,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Colimit of a diagram file as a cospan of its feet.
    Colim {
        file: PathBuf,
        /// `span` also evaluates the compiled expression with spans, giving the limit.
        #[arg(long, value_enum, default_value = "cospan")]
        mode: ModeArg,
    },
    /// Limit of a diagram file as a span of its feet.
    Limit { file: PathBuf },
    /// Compile a diagram file into an expression program.
    Compile { file: PathBuf },
    /// Evaluate an expression program.
    Eval {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "cospan")]
        mode: ModeArg,
    },
    /// Regular expression for every initial and final state of an automaton file.
    Kleene { file: PathBuf },
    /// Run a property suite.
    Check {
        /// separable, functoriality, compiler, duality, nested, feedback, monoidal or kleene.
        suite: Suite,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 200, value_parser = positive)]
        cases: usize,
        #[arg(long, default_value_t = 4, value_parser = positive)]
        sizes: usize,
        #[arg(long = "max-len", default_value_t = 8, value_parser = positive)]
        max_len: usize,
    },
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

enum Failure {
    Input(String),
    Type(String),
    Property(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::Json { .. } | Error::UnknownName { .. } | Error::DuplicateName { .. } => {
                Failure::Input(e.to_string())
            }
            _ => Failure::Type(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn arrow_text(a: &Arrow) -> String {
    format!("{}: {a}\napex: {}\n", a.mode(), a.apex())
}

fn plain(input: DiagramInput, what: &str) -> Result<cocone::dcospan::DiagramCospan, Failure> {
    match input {
        DiagramInput::Plain(c) => Ok(c),
        DiagramInput::Monoidal(_) => Err(Failure::Input(format!(
            "{what} is not available for monoidal diagrams; only the cospan colimit is"
        ))),
    }
}

fn colim(file: &Path, mode: Mode, format: Format) -> Outcome {
    let input = io::parse_diagram(&read(file)?)?;
    if format == Format::Dot {
        return Ok(match &input {
            DiagramInput::Plain(c) => io::diagram_dot(c),
            DiagramInput::Monoidal(m) => io::monoidal_dot(m),
        });
    }
    let cospan = Arrow::Cospan(match &input {
        DiagramInput::Plain(c) => colim_functor(c),
        DiagramInput::Monoidal(m) => m.colim(),
    });
    let mut arrows = vec![cospan];
    if mode == Mode::Span {
        let c = plain(input, "span evaluation")?;
        arrows.push(eval_mode(&compile(&c), Mode::Span)?);
    }
    Ok(match format {
        Format::Json => {
            let mut out = serde_json::Map::new();
            for a in &arrows {
                out.insert(a.mode().to_string(), serde_json::to_value(a).expect("arrows serialize"));
            }
            pretty(&Value::Object(out))
        }
        _ => arrows.iter().map(arrow_text).collect(),
    })
}

fn limit(file: &Path, format: Format) -> Outcome {
    let c = plain(io::parse_diagram(&read(file)?)?, "the limit")?;
    Ok(match format {
        Format::Dot => io::diagram_dot(&c),
        Format::Json => pretty(&json!({ "span": Arrow::Span(lim_functor(&c)) })),
        Format::Text => arrow_text(&Arrow::Span(lim_functor(&c))),
    })
}

fn compile_file(file: &Path, format: Format) -> Outcome {
    let c = plain(io::parse_diagram(&read(file)?)?, "compilation")?;
    let c = io::printable(&c);
    Ok(match format {
        Format::Dot => io::diagram_dot(&c),
        Format::Json => pretty(&json!({ "program": Program::from_expr(compile(&c)).to_string() })),
        Format::Text => Program::from_expr(compile(&c)).to_string(),
    })
}

fn eval_file(file: &Path, mode: Mode, format: Format) -> Outcome {
    let program = parse_program(&read(file)?)?;
    let a = eval_mode(&program.expr, mode)?;
    Ok(match format {
        Format::Dot => io::arrow_dot(&a),
        Format::Json => pretty(&json!({ a.mode().to_string(): a })),
        Format::Text => arrow_text(&a),
    })
}

fn kleene(file: &Path, format: Format) -> Outcome {
    let g = io::parse_automaton(&read(file)?)?;
    if format == Format::Dot {
        return Ok(io::automaton_dot(&g));
    }
    let table = kleene_pipeline(&g)?;
    Ok(match format {
        Format::Json => pretty(&io::kleene_to_json(&table)),
        _ => io::kleene_text(&table),
    })
}

fn check(suite: Suite, config: CheckConfig, format: Format) -> Outcome {
    let report = run_suite(suite, config);
    let text = match format {
        Format::Json => {
            let mut v = serde_json::to_value(&report).expect("reports serialize");
            v["ok"] = json!(report.ok());
            v["reproduce"] = json!(report.reproducer());
            pretty(&v)
        }
        Format::Dot => return Err(Failure::Input("check has no dot output".into())),
        Format::Text => report.to_string(),
    };
    if report.ok() {
        Ok(text)
    } else {
        Err(Failure::Property(text))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    let outcome = match cli.command {
        Command::Colim { file, mode } => colim(&file, mode.into(), format),
        Command::Limit { file } => limit(&file, format),
        Command::Compile { file } => compile_file(&file, format),
        Command::Eval { file, mode } => eval_file(&file, mode.into(), format),
        Command::Kleene { file } => kleene(&file, format),
        Command::Check { suite, seed, cases, sizes, max_len } => {
            check(suite, CheckConfig { seed, cases, sizes, max_len }, format)
        }
    };
    match outcome {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Type(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Property(report)) => {
            print!("{report}");
            ExitCode::from(4)
        }
    }
}

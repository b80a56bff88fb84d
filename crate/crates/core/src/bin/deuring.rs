use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use deuring::render::{self, Format};
use deuring::verify::{table_ids, tables_for_dimension, verify_table};
use deuring::{classify, density_report, CmConfig, FieldSize, NamedGroup};

#[derive(Parser)]
#[command(
    name = "deuring",
    version,
    about = "Prime splitting and BT1 types of reduced CM abelian varieties"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Md)]
    format: OutFormat,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Md,
    Csv,
    Json,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Self {
        match f {
            OutFormat::Md => Format::Md,
            OutFormat::Csv => Format::Csv,
            OutFormat::Json => Format::Json,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Inspect the built-in Galois groups.
    Group {
        #[command(subcommand)]
        action: GroupAction,
    },
    /// Splitting pattern and BT1 type for one Frobenius and CM type.
    Classify {
        #[arg(long)]
        group: String,
        #[arg(long)]
        sigma: String,
        /// CM type as a list of class members, e.g. "S1=[1,y]".
        #[arg(long, conflicts_with = "cm_type_class")]
        cm_type: Option<String>,
        /// Letter of a primitive CM type class, as listed by `cmtypes`.
        #[arg(long)]
        cm_type_class: Option<String>,
    },
    /// Primitive CM types up to equivalence.
    Cmtypes {
        #[arg(long)]
        group: String,
    },
    /// Regenerate the published tables, optionally diffing against them.
    Tables {
        #[arg(long, conflicts_with = "table")]
        dim: Option<usize>,
        /// Table id; see `tables --list`.
        #[arg(long)]
        table: Option<String>,
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        list: bool,
    },
    /// Census of ordinary abelian surfaces over F_q by b-number, q = p^n.
    Density {
        #[arg(long)]
        p: u64,
        /// One or more exponents.
        #[arg(long, num_args = 1.., default_values_t = [1])]
        n: Vec<u32>,
    },
}

#[derive(Subcommand)]
enum GroupAction {
    List,
    Show { name: String },
}

enum Failure {
    Usage(String),
    Mismatch(String),
}

impl From<deuring::Error> for Failure {
    fn from(e: deuring::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let format: Format = cli.format.into();
    match &cli.command {
        Command::Group {
            action: GroupAction::List,
        } => Ok(render::group_list(format)),
        Command::Group {
            action: GroupAction::Show { name },
        } => {
            let cfg = CmConfig::standard(name.parse::<NamedGroup>()?);
            Ok(render::group_show(&cfg, format))
        }
        Command::Classify {
            group,
            sigma,
            cm_type,
            cm_type_class,
        } => {
            let cfg = CmConfig::standard(group.parse::<NamedGroup>()?);
            let s = cfg.group().element(sigma)?;
            let (ty, label) = match (cm_type, cm_type_class) {
                (Some(text), None) => (cfg.parse_cm_type(text)?, None),
                (None, Some(label)) => {
                    let class = cfg.class_by_label(label)?;
                    let named = cfg
                        .named_types()
                        .into_iter()
                        .find(|(l, _)| *l == class.label);
                    let ty = named.map_or(class.representative, |(_, t)| t);
                    (ty, Some(class.label))
                }
                _ => {
                    return Err(Failure::Usage(
                        "give exactly one of --cm-type or --cm-type-class".into(),
                    ))
                }
            };
            let mut c = classify(&cfg, s, &ty);
            c.cm_class = label.or_else(|| {
                cfg.cm_type_classes()
                    .into_iter()
                    .find(|k| k.members.contains(&ty))
                    .map(|k| k.label)
            });
            Ok(render::classification(&c, format))
        }
        Command::Cmtypes { group } => {
            let cfg = CmConfig::standard(group.parse::<NamedGroup>()?);
            Ok(render::cm_types(&cfg, format))
        }
        Command::Tables {
            dim,
            table,
            verify,
            list,
        } => {
            if *list {
                return Ok(table_ids().join("\n") + "\n");
            }
            let ids: Vec<&str> = match (dim, table) {
                (Some(d), _) if (1..=3).contains(d) => tables_for_dimension(*d),
                (Some(d), _) => return Err(Failure::Usage(format!("no tables for dimension {d}"))),
                (None, Some(t)) => vec![t.as_str()],
                (None, None) => table_ids(),
            };
            let reports = ids
                .iter()
                .map(|id| verify_table(id))
                .collect::<Result<Vec<_>, _>>()?;
            let text = render::table_reports(&reports, *verify, format);
            if *verify && reports.iter().any(|r| !r.passed()) {
                return Err(Failure::Mismatch(text));
            }
            Ok(text)
        }
        Command::Density { p, n } => {
            let reports = n
                .iter()
                .map(|&n| FieldSize::new(*p, n).and_then(|f| density_report(&f)))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(render::density(&reports, format))
        }
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), String> {
    match &cli.out {
        Some(path) => {
            fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, code) = match run(&cli) {
        Ok(text) => (text, ExitCode::SUCCESS),
        Err(Failure::Mismatch(text)) => (text, ExitCode::from(1)),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    if let Err(msg) = emit(&cli, &text) {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    code
}

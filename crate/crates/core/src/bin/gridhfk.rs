use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gridhfk::battery::{self, Battery, BatteryOptions};
use gridhfk::corpus;
use gridhfk::grid::CuspKind;
use gridhfk::homology::{GridComplex, HomologyOptions, ReportFlavor};
use gridhfk::invariants::{lambda_status_in, InvariantOptions, Sign};
use gridhfk::moves::{apply_script, connect_sum_aligned, parse_script};
use gridhfk::{Error, GridDiagram};

#[derive(Parser)]
#[command(name = "gridhfk", version, about = "Knot Floer homology and Legendrian invariants from grid diagrams")]
struct Cli {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Ignore the generator budget.
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Size, components, classical invariants and front statistics.
    Info {
        grid: String,
        #[arg(long)]
        json: bool,
    },
    /// ASCII picture, top row first.
    Show { grid: String },
    /// Bigraded homology of the knot the grid's front is a mirror of.
    Homology {
        grid: String,
        #[arg(long, value_enum, default_value = "tilde")]
        flavor: FlavorArg,
        #[arg(long)]
        json: bool,
    },
    /// Status of the class of x+ or x-.
    Invariant {
        grid: String,
        #[arg(long, default_value = "+", allow_hyphen_values = true)]
        sign: String,
        /// Report as the transverse invariant (always uses x+).
        #[arg(long)]
        theta: bool,
        /// Also search for a minus-flavor preimage up to this U-degree.
        #[arg(long)]
        minus_cap: Option<u32>,
    },
    /// Apply a move script (a file, or inline text with `;` or `\n` separators).
    Moves {
        grid: String,
        script: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Connected sum, aligning both grids by cyclic row shifts first.
    Connsum {
        left: String,
        right: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Alexander polynomial mod 2.
    Alex { grid: String },
    /// Run a verification battery and print one line per check.
    Verify {
        #[arg(long, default_value = "all")]
        battery: String,
    },
    /// Built-in grids.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Subcommand)]
enum CorpusAction {
    List,
    /// Write one entry, or all of them with `all`, as grid files.
    Export {
        name: String,
        #[arg(long, default_value = ".")]
        dir: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FlavorArg {
    Tilde,
    Hat,
}

enum Failure {
    Usage(String),
    Lib(Error),
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

/// A path, or the name of a built-in grid.
fn load(arg: &str) -> Result<GridDiagram, Failure> {
    let path = Path::new(arg);
    if !path.exists() {
        if let Some(e) = corpus::find(arg) {
            return Ok(e.grid);
        }
    }
    Ok(corpus::load_grid(path)?)
}

fn write_or_print(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string(v).expect("serializable"));
}

fn run(cli: Cli) -> Result<(), Failure> {
    let hopts = HomologyOptions {
        force: cli.force,
        threads: cli.threads,
        ..Default::default()
    };
    match cli.command {
        Command::Info { grid, json } => {
            let g = load(&grid)?;
            let comps = g.component_count();
            let mut v = json!({ "n": g.n(), "components": comps });
            if comps == 1 {
                let ci = g.classical_invariants()?;
                let front = g.front_projection()?;
                v["tb"] = json!(ci.tb);
                v["r"] = json!(ci.r);
                v["sl_plus"] = json!(ci.sl_plus);
                v["sl_minus"] = json!(ci.sl_minus);
                v["crossings"] = json!(front.crossings.len());
                v["writhe"] = json!(front.writhe());
                v["cusps_up"] = json!(front.cusp_count(CuspKind::Up));
                v["cusps_down"] = json!(front.cusp_count(CuspKind::Down));
            }
            if json {
                print_json(&v);
            } else {
                let obj = v.as_object().expect("object");
                for (k, val) in obj {
                    println!("{k}: {val}");
                }
                println!("note: the front is of the mirror knot");
            }
        }
        Command::Show { grid } => print!("{}", load(&grid)?.render()),
        Command::Homology { grid, flavor, json } => {
            let g = load(&grid)?;
            let report = GridComplex::new(&g, &hopts)?.homology(&hopts)?;
            let flavor = match flavor {
                FlavorArg::Tilde => ReportFlavor::Tilde,
                FlavorArg::Hat => ReportFlavor::Hat,
            };
            if json {
                print_json(&report.to_json(flavor));
            } else {
                let (name, poly, ranks) = match flavor {
                    ReportFlavor::Tilde => ("tilde", &report.poincare, report.tilde_ranks.clone()),
                    ReportFlavor::Hat => ("hat", &report.hat_poincare, report.hat_ranks()),
                };
                println!("homology of the mirror knot, {name} flavor");
                println!("poincare: {poly}");
                println!("total rank: {}", ranks.values().sum::<usize>());
                println!("alexander mod 2: {}", report.alexander_mod2);
            }
        }
        Command::Invariant { grid, sign, theta, minus_cap } => {
            let g = load(&grid)?;
            let sign: Sign = if theta { Sign::Plus } else { sign.parse()? };
            let opts = InvariantOptions { homology: hopts, minus_cap };
            let cx = GridComplex::new(&g, &opts.homology)?;
            let mut status = lambda_status_in(&cx, sign, opts.minus_cap)?;
            status.transverse = theta;
            print_json(&status.to_json());
        }
        Command::Moves { grid, script, out } => {
            let g = load(&grid)?;
            let text = if Path::new(&script).is_file() {
                std::fs::read_to_string(&script)
                    .map_err(|e| Failure::Usage(format!("cannot read {script}: {e}")))?
            } else {
                script.replace("\\n", "\n").replace(';', "\n")
            };
            let h = apply_script(&g, &parse_script(&text)?)?;
            write_or_print(&h.to_file_string(), out.as_deref())?;
        }
        Command::Connsum { left, right, out } => {
            let s = connect_sum_aligned(&load(&left)?, &load(&right)?)?;
            write_or_print(&s.to_file_string(), out.as_deref())?;
        }
        Command::Alex { grid } => {
            let g = load(&grid)?;
            println!("{}", GridComplex::new(&g, &hopts)?.alexander_polynomial()?);
        }
        Command::Verify { battery } => {
            let b: Battery = battery.parse().map_err(|_| Failure::Usage(format!("unknown battery {battery:?}")))?;
            let opts = BatteryOptions { homology: hopts, ..Default::default() };
            let checks = battery::run(b, &opts)?;
            print!("{}", battery::format_table(&checks));
            if checks.iter().any(|c| !c.passed && !c.optional) {
                return Err(Failure::Checks);
            }
        }
        Command::Corpus { action } => match action {
            CorpusAction::List => {
                for e in corpus::builtin() {
                    println!("{:<14} n={:<3} {}", e.name, e.grid.n(), e.provenance);
                }
            }
            CorpusAction::Export { name, dir } => {
                let entries: Vec<_> = if name == "all" {
                    corpus::builtin()
                } else {
                    vec![corpus::find(&name).ok_or_else(|| Failure::Usage(format!("no corpus entry {name:?}")))?]
                };
                for e in entries {
                    let path = dir.join(format!("{}.grid", e.name));
                    let text = format!("# {}\n{}", e.provenance, e.grid.to_file_string());
                    write_or_print(&text, Some(&path))?;
                    println!("{}", path.display());
                }
            }
        },
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
        Err(Failure::Checks) => ExitCode::from(2),
    }
}

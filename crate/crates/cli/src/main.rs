use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use cardy_core::action::build_catalog;
use cardy_core::hurwitz::evaluate;
use cardy_core::io::{
    cardy_json, catalog_json, element_json, info_json, parse_json, parse_surfaces, rational_json,
    subgroup_from_generators, surface_json, GroupDocument, GroupInput,
};
use cardy_core::oracle::oracle_for_spec;
use cardy_core::rational::{format, one};
use cardy_core::{
    hecke_check, CardyFrobeniusAlgebra, ConjugationAction, Error, Report, DEFAULT_ORDER_BOUND,
    DEFAULT_TUPLE_BOUND,
};
use clap::{Parser, ValueEnum};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Command {
    /// Orders of G, K, N_G(K), N and X, and whether K is core-free.
    Info,
    /// Interior and boundary field catalog.
    Fields,
    /// Bases of A and B; the full structure with --dump.
    Algebra,
    /// Axiom report for A, B and the Cardy-Frobenius structure.
    Check,
    /// Hurwitz number of a surface (a list of surfaces multiplies).
    Hurwitz,
    /// Brute-force value for the same surface input.
    Oracle,
    /// Hecke algebra comparison for G acting on G/S.
    Hecke,
}

/// Cardy-Frobenius algebras of finite groups and Hurwitz numbers of seamed surfaces.
#[derive(Debug, Parser)]
#[command(name = "cardy", version)]
struct Cli {
    command: Command,

    /// Group document: {"degree", "generators", "k_generators"}.
    #[arg(long, value_name = "FILE")]
    group: PathBuf,

    /// Surface document, or an array of them (required by hurwitz and oracle).
    #[arg(long, value_name = "FILE")]
    surface: Option<PathBuf>,

    /// Generators of S for hecke: inline JSON array of permutations, or a file holding one.
    #[arg(long, value_name = "JSON")]
    subgroup_generators: Option<String>,

    /// Emit full structure constants, forms and evaluation traces.
    #[arg(long)]
    dump: bool,

    #[arg(long, value_name = "N", default_value_t = DEFAULT_ORDER_BOUND)]
    order_bound: usize,

    #[arg(long, value_name = "N", default_value_t = DEFAULT_TUPLE_BOUND)]
    tuple_bound: u64,
}

enum Failure {
    Error(Error),
    Axioms(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

type Outcome = Result<Value, Failure>;

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))
}

fn with_file<T>(path: &Path, result: Result<T, Error>) -> Result<T, Error> {
    result.map_err(|e| match e {
        Error::Parse { path: p, message } => Error::Parse { path: p, message: format!("{message} (in {})", path.display()) },
        other => other,
    })
}

fn load_group(cli: &Cli) -> Result<GroupInput, Error> {
    let doc: GroupDocument = with_file(&cli.group, parse_json(&read(&cli.group)?))?;
    doc.build(cli.order_bound)
}

fn load_algebra(input: &GroupInput) -> Result<CardyFrobeniusAlgebra, Error> {
    let action = ConjugationAction::new(&input.group, &input.k)?;
    let catalog = build_catalog(action.nset)?.with_provenance(input.digest.clone());
    CardyFrobeniusAlgebra::build(catalog)
}

fn surfaces(cli: &Cli) -> Result<Vec<cardy_core::SurfaceSpec>, Error> {
    let path = cli.surface.as_ref().ok_or_else(|| Error::Input(format!("{} requires --surface", format!("{:?}", cli.command).to_lowercase())))?;
    with_file(path, parse_surfaces(&read(path)?))
}

fn report_outcome(report: Report, value: Value) -> Outcome {
    if report.all_passed() {
        Ok(value)
    } else {
        Err(Failure::Axioms(value))
    }
}

fn run(cli: &Cli) -> Outcome {
    let input = load_group(cli)?;
    match cli.command {
        Command::Info => {
            let action = ConjugationAction::new(&input.group, &input.k)?;
            Ok(info_json(&input, &action))
        }
        Command::Fields => Ok(catalog_json(&load_algebra(&input)?.catalog)),
        Command::Algebra => {
            let h = load_algebra(&input)?;
            if cli.dump {
                Ok(cardy_json(&h))
            } else {
                Ok(json!({
                    "A": {"dim": h.a.dim(), "basis": h.a.basis_labels()},
                    "B": {"dim": h.b.dim(), "basis": h.b.basis_labels()},
                }))
            }
        }
        Command::Check => {
            let h = load_algebra(&input)?;
            let mut report = Report::new();
            report.merge("A", h.a.verify_equipped());
            report.merge("B", h.b.verify_equipped());
            report.merge("cardy", h.verify_cardy_frobenius());
            let value = serde_json::to_value(&report).expect("report serializes");
            report_outcome(report, value)
        }
        Command::Hurwitz => {
            let h = load_algebra(&input)?;
            let specs = surfaces(cli)?;
            let mut total = one();
            let mut components = Vec::new();
            for spec in &specs {
                let result = evaluate(&h, spec)?;
                total *= &result.value;
                if cli.dump {
                    let trace: Vec<Value> = result
                        .trace
                        .iter()
                        .map(|(stage, x)| {
                            let alg = if stage == "A" { &h.a } else { &h.b };
                            json!({"stage": stage, "element": element_json(alg, x)})
                        })
                        .collect();
                    components.push(json!({"surface": surface_json(spec), "hurwitz": rational_json(&result.value), "trace": trace}));
                }
            }
            let mut out = json!({"hurwitz": format(&total)});
            if cli.dump {
                out["components"] = Value::Array(components);
            }
            Ok(out)
        }
        Command::Oracle => {
            let h = load_algebra(&input)?;
            let specs = surfaces(cli)?;
            let mut total = one();
            let mut tuples = 0u64;
            for spec in &specs {
                let result = oracle_for_spec(&h, spec, cli.tuple_bound)?;
                total *= result.value;
                tuples += result.tuples_examined;
            }
            Ok(json!({"hurwitz_oracle": format(&total), "tuples": tuples}))
        }
        Command::Hecke => {
            let raw = cli
                .subgroup_generators
                .as_deref()
                .ok_or_else(|| Error::Input("hecke requires --subgroup-generators".into()))?;
            let text = if Path::new(raw).is_file() { read(Path::new(raw))? } else { raw.to_string() };
            let generators: Vec<Vec<usize>> = parse_json(&text)?;
            let s = subgroup_from_generators(&input.group, &generators)?;
            let result = hecke_check(&input.group, &s)?;
            let value = json!({
                "S_order": s.order(),
                "double_cosets": result.double_cosets,
                "dim_B": result.dim_b,
                "report": serde_json::to_value(&result.report).expect("report serializes"),
            });
            report_outcome(result.report, value)
        }
    }
}

fn print(value: &Value) {
    let text = serde_json::to_string_pretty(value).expect("JSON values serialize");
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(value) => {
            print(&value);
            ExitCode::SUCCESS
        }
        Err(Failure::Axioms(value)) => {
            print(&value);
            ExitCode::from(1)
        }
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Input(_) | Error::Parse { .. } => 2,
                Error::Resource(_) => 3,
                Error::Logic(_) => 1,
            })
        }
    }
}

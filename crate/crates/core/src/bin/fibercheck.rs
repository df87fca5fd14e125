use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use fibercheck::decompose::minimal_primes;
use fibercheck::exactnum::{FieldConfig, QuadExt};
use fibercheck::geometry::{
    contract, fiber, image_closure, is_finite, preimage, FiberKind, Point, PolyMap,
};
use fibercheck::ideals::Ideal;
use fibercheck::paperlab::{self, PaperScenario, Registry, Scenario};
use fibercheck::polyring::{parse_poly, OrderSpec, Polynomial, VariableSet};
use fibercheck::{Error, Result};

type F = QuadExt;

/// Exact Groebner-basis checks for polynomial maps between affine varieties.
#[derive(Parser)]
#[command(name = "fibercheck", version)]
struct Cli {
    /// Coefficient field: `q` or `qsqrt:<d>`. Defaults to the scenario's field
    /// for map subcommands and to `q` otherwise.
    #[arg(long, global = true)]
    field: Option<FieldConfig>,
    /// Comma-separated variable names for ideal subcommands.
    #[arg(long, global = true, default_value = "x,y,z")]
    vars: String,
    /// Monomial order: lex, grevlex or block:<k>.
    #[arg(long, global = true, default_value = "grevlex")]
    order: OrderSpec,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Scenario file replacing the built-in one.
    #[arg(long, global = true)]
    scenario: Option<std::path::PathBuf>,
    /// Name of the map record used by finite, image, preimage, contract and fiber.
    #[arg(long, global = true, default_value = "phi")]
    map: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the claim registry against the scenario.
    VerifyPaper {
        /// Run a single claim.
        #[arg(long)]
        claim: Option<String>,
    },
    /// Reduced Groebner basis of the generators.
    Gb { gens: Vec<String> },
    /// Normal form of a polynomial modulo the ideal of the generators.
    Nf { poly: String, gens: Vec<String> },
    /// Elimination ideal over the variables that remain.
    Eliminate {
        /// Comma-separated variables to drop.
        #[arg(long)]
        drop: String,
        gens: Vec<String>,
    },
    /// Krull dimension.
    Dim { gens: Vec<String> },
    /// Ideal membership.
    Member { poly: String, gens: Vec<String> },
    /// Membership in the radical.
    RadicalMember { poly: String, gens: Vec<String> },
    /// Finiteness test for the scenario map.
    Finite,
    /// Closure of the image of V(source ideal + gens), gens over the source variables.
    Image { gens: Vec<String> },
    /// Preimage ideal of gens over the target variables.
    Preimage { gens: Vec<String> },
    /// Contraction to the target of gens over the source variables.
    Contract { gens: Vec<String> },
    /// Points of the fiber over a target point.
    Fiber {
        #[arg(long)]
        point: String,
    },
    /// Minimal primes over the configured field.
    MinPrimes { gens: Vec<String> },
}

enum Outcome {
    Done,
    ClaimFailed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::ClaimFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn load_scenario(cli: &Cli) -> Result<String> {
    match &cli.scenario {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display()))),
        None => Ok(paperlab::SPHERE_MAP_SCENARIO.to_string()),
    }
}

fn field(cli: &Cli) -> FieldConfig {
    cli.field.unwrap_or_else(FieldConfig::rationals)
}

fn ideal(cli: &Cli, gens: &[String]) -> Result<Ideal<F>> {
    let vars = VariableSet::parse(&cli.vars)?;
    Ideal::parse(&vars, gens, &field(cli))
}

fn poly(cli: &Cli, text: &str) -> Result<Polynomial<F>> {
    let vars = VariableSet::parse(&cli.vars)?;
    Ok(parse_poly(text, &vars, &field(cli))?)
}

/// The scenario map and the field to read its arguments in.
fn scenario_map(cli: &Cli) -> Result<(PolyMap<F>, FieldConfig)> {
    let scenario = Scenario::parse(&load_scenario(cli)?)?;
    let cfg = cli.field.unwrap_or_else(|| *scenario.field());
    Ok((scenario.map(&cli.map)?.clone(), cfg))
}

fn print_ideal(cli: &Cli, i: &Ideal<F>) {
    let gb = i.gb(&cli.order);
    let basis: Vec<String> = gb
        .elements()
        .iter()
        .map(|g| g.render(i.vars(), &cli.order))
        .collect();
    if cli.json {
        println!("{}", json!({ "vars": i.vars().names(), "basis": basis }));
    } else {
        println!("{{{}}}", basis.join(", "));
    }
}

fn print_value(cli: &Cli, key: &str, value: serde_json::Value) {
    if cli.json {
        println!("{}", json!({ key: value }));
    } else {
        match value {
            serde_json::Value::String(s) => println!("{s}"),
            other => println!("{other}"),
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    cli.order.validate(VariableSet::parse(&cli.vars)?.len())?;
    match &cli.command {
        Command::VerifyPaper { claim } => {
            let scenario = PaperScenario::load(&load_scenario(cli)?)?;
            let registry = Registry::standard();
            let reports = match claim {
                Some(id) => vec![registry.run_claim(id, &scenario)?],
                None => registry.run_all(&scenario),
            };
            if cli.json {
                print!("{}", paperlab::render_json(&reports));
            } else {
                print!("{}", paperlab::render_table(&registry, &reports));
                for note in paperlab::NOTES {
                    println!("NOTE {note}");
                }
            }
            return Ok(if paperlab::all_pass(&reports) {
                Outcome::Done
            } else {
                Outcome::ClaimFailed
            });
        }
        Command::Gb { gens } => print_ideal(cli, &ideal(cli, gens)?),
        Command::Nf { poly: f, gens } => {
            let i = ideal(cli, gens)?;
            let r = i.gb(&cli.order).normal_form(&poly(cli, f)?);
            print_value(cli, "normal_form", json!(r.render(i.vars(), &cli.order)));
        }
        Command::Eliminate { drop, gens } => {
            let drop: Vec<&str> = drop.split(',').map(str::trim).collect();
            print_ideal(cli, &ideal(cli, gens)?.eliminate(&drop)?);
        }
        Command::Dim { gens } => {
            let i = ideal(cli, gens)?;
            print_value(cli, "dim", json!(i.krull_dim()?));
        }
        Command::Member { poly: f, gens } => {
            let i = ideal(cli, gens)?;
            print_value(cli, "member", json!(i.member(&poly(cli, f)?)));
        }
        Command::RadicalMember { poly: f, gens } => {
            let i = ideal(cli, gens)?;
            print_value(
                cli,
                "radical_member",
                json!(i.radical_member(&poly(cli, f)?)),
            );
        }
        Command::Finite => {
            let (phi, _) = scenario_map(cli)?;
            let f = is_finite(&phi)?;
            let witness: Vec<String> = f.witness.iter().map(|(v, e)| format!("{v}^{e}")).collect();
            if cli.json {
                println!("{}", json!({ "finite": f.finite, "witness": witness }));
            } else {
                println!("{}", f.finite);
                if !witness.is_empty() {
                    println!("pure powers: {}", witness.join(", "));
                }
            }
        }
        Command::Image { gens } => {
            let (phi, cfg) = scenario_map(cli)?;
            let z = Ideal::parse(phi.source_vars(), gens, &cfg)?;
            print_ideal(cli, &image_closure(&phi, &z)?);
        }
        Command::Preimage { gens } => {
            let (phi, cfg) = scenario_map(cli)?;
            let j = Ideal::parse(phi.target_vars(), gens, &cfg)?;
            print_ideal(cli, &preimage(&phi, &j)?);
        }
        Command::Contract { gens } => {
            let (phi, cfg) = scenario_map(cli)?;
            let j = Ideal::parse(phi.source_vars(), gens, &cfg)?;
            print_ideal(cli, &contract(&phi, &j)?);
        }
        Command::Fiber { point } => {
            let (phi, cfg) = scenario_map(cli)?;
            let q = Point::parse(point, &cfg)?;
            let r = fiber(&phi, &q, &cfg)?;
            match &r.kind {
                FiberKind::Points(points) => {
                    let shown: Vec<String> = points.iter().map(ToString::to_string).collect();
                    if cli.json {
                        println!("{}", json!({ "points": shown }));
                    } else {
                        for p in shown {
                            println!("{p}");
                        }
                    }
                }
                FiberKind::Unsolved(i) => {
                    if cli.json {
                        println!(
                            "{}",
                            json!({ "unsolved": i.display_basis(), "zero_dimensional": r.zero_dimensional })
                        );
                    } else {
                        println!("unsolved: {}", i.display_basis());
                        println!("zero-dimensional: {}", r.zero_dimensional);
                    }
                }
            }
        }
        Command::MinPrimes { gens } => {
            let i = ideal(cli, gens)?;
            let comps = minimal_primes(&i, &field(cli))?;
            let shown: Vec<String> = comps.primes.iter().map(|p| p.display_basis()).collect();
            if cli.json {
                println!(
                    "{}",
                    json!({ "primes": shown, "certified": comps.certified })
                );
            } else {
                for p in shown {
                    println!("{p}");
                }
                println!("certified: {}", comps.certified);
            }
        }
    }
    Ok(Outcome::Done)
}

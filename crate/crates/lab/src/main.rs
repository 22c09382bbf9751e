use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ordlab::campaign::{run_campaign, CampaignName, CampaignSpec};
use ordlab::checks::{self, ConvergenceMode, TopologyKind, Verdict};
use ordlab::error::{exit, Context, LabError, LabResult};
use ordlab::io::{load_hom, load_poset, parse_generator, render, PosetFile, TopologyDump};
use ordlab_core::library::boolean_power;
use ordlab_core::Limits;
use serde::Serialize;

/// Finite order-theory laboratory. File arguments accept `-` for standard
/// input and library names such as `2`, `2^3`, `chain4`, `M3`, `N5`.
#[derive(Parser)]
#[command(name = "ordlab", version)]
struct Cli {
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lattice certificate of a poset.
    Check { poset: String },
    /// Breadth and an irredundant witness of a lattice.
    Breadth {
        lattice: String,
        /// Use suprema instead of infima.
        #[arg(long)]
        dual: bool,
        /// Exit with a counterexample status unless the breadth equals this.
        #[arg(long)]
        expect: Option<usize>,
    },
    /// Open sets of a topology on a poset.
    Topology {
        poset: String,
        #[arg(long, value_enum, default_value = "interval")]
        kind: TopologyKind,
    },
    /// Separation properties of a topology on a poset.
    Hausdorff {
        poset: String,
        #[arg(long, value_enum, default_value = "interval")]
        kind: TopologyKind,
    },
    /// Product of posets, ordered pointwise.
    Product {
        #[arg(required = true)]
        posets: Vec<String>,
        /// Also compare the product's interval topology with the product topology.
        #[arg(long)]
        verify_topology: bool,
    },
    /// The boolean lattice 2^n.
    Boolean { n: usize },
    /// Classify a map between posets and check what its class guarantees.
    Hom { file: String },
    /// Convergence of a principal filter.
    Converge {
        poset: String,
        /// Comma-separated labels or a literal such as {"generator":["a","b"]}.
        #[arg(long)]
        generator: String,
        #[arg(long, value_enum, default_value = "order")]
        mode: ConvergenceMode,
    },
    /// Run a verification campaign: prop-2-1, lemma-2, lemma-3, fact-1-1,
    /// product-lemma, hausdorff, breadth-2n or star-preservation.
    Campaign {
        name: String,
        /// Largest carrier size (defaults per campaign).
        #[arg(long)]
        limit: Option<usize>,
        /// Random instances on top of the fixed family.
        #[arg(long, default_value_t = 0)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

struct Outcome {
    json: String,
    violation: Option<String>,
}

fn emit<T: Serialize>(value: &T, pretty: bool) -> Outcome {
    Outcome {
        json: render(value, pretty),
        violation: None,
    }
}

fn verdict<T: Serialize>(v: Verdict<T>, pretty: bool) -> Outcome {
    Outcome {
        json: render(&v.output, pretty),
        violation: v.violation,
    }
}

fn run(cli: Cli, limits: &Limits) -> LabResult<Outcome> {
    let pretty = cli.pretty;
    Ok(match cli.command {
        Command::Check { poset } => emit(&checks::check(&load_poset(&poset, limits)?), pretty),
        Command::Breadth {
            lattice,
            dual,
            expect,
        } => verdict(
            checks::breadth(&load_poset(&lattice, limits)?, dual, expect, limits)?,
            pretty,
        ),
        Command::Topology { poset, kind } => {
            let p = load_poset(&poset, limits)?;
            emit(&TopologyDump::of(&kind.of(&p), limits)?, pretty)
        }
        Command::Hausdorff { poset, kind } => verdict(
            checks::hausdorff(&load_poset(&poset, limits)?, kind),
            pretty,
        ),
        Command::Product {
            posets,
            verify_topology,
        } => {
            let factors = posets
                .iter()
                .map(|a| load_poset(a, limits))
                .collect::<LabResult<Vec<_>>>()?;
            verdict(
                checks::product_of(&factors, verify_topology, limits)?,
                pretty,
            )
        }
        Command::Boolean { n } => emit(
            &PosetFile::from_poset(&boolean_power(n, limits).context("boolean")?),
            pretty,
        ),
        Command::Hom { file } => {
            let hom = load_hom(&file, limits)?;
            verdict(
                checks::hom(
                    &hom.domain,
                    &hom.codomain,
                    &hom.map,
                    checks::HomChecks::ALL,
                    limits,
                )?,
                pretty,
            )
        }
        Command::Converge {
            poset,
            generator,
            mode,
        } => {
            let p = load_poset(&poset, limits)?;
            let g = parse_generator(&generator, &p)?;
            let v = checks::converge(&p, g, mode, limits)?;
            if !v.output.complete_lattice {
                eprintln!(
                    "warning: not a complete lattice; missing bounds count as non-convergence"
                );
            }
            verdict(v, pretty)
        }
        Command::Campaign {
            name,
            limit,
            trials,
            seed,
        } => {
            let name: CampaignName = name.parse()?;
            let spec = CampaignSpec {
                name,
                size_limit: limit.unwrap_or(name.default_limit()),
                trials,
                seed,
            };
            let result = run_campaign(&spec, limits)?;
            let violation = result.witness.as_ref().map(|w| w.reason.clone());
            Outcome {
                json: render(&result, pretty),
                violation,
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                exit::FAILURE as u8
            } else {
                exit::OK as u8
            });
        }
    };
    let outcome = ordlab::limits_from_env().and_then(|limits| run(cli, &limits));
    match outcome {
        Ok(Outcome { json, violation }) => {
            println!("{json}");
            match violation {
                Some(reason) => {
                    eprintln!("counterexample: {reason}");
                    ExitCode::from(exit::COUNTEREXAMPLE as u8)
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(e) => report(e),
    }
}

fn report(e: LabError) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(e.exit_code() as u8)
}

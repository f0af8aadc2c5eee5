use std::fmt::Display;
use std::fs;
use std::hash::Hash;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ornlat::digraph::{path_hypergraph, DigraphJson, HypergraphJson};
use ornlat::enumerate::{broom_count, broom_table, comb_bijections, comb_count};
use ornlat::fixtures::{by_name, CATALOG};
use ornlat::intreeval::{IntreevalHypergraph, IntreevalJson, Sampling};
use ornlat::ornament::{aorn_poset, orn_poset};
use ornlat::polytope::hypergraphic_skeleton;
use ornlat::reorient::{areori_poset, rbi_poset, Ambient};
use ornlat::sourcing::asour_poset;
use ornlat::verify::{run_all, run_suite, Options, Suite};
use ornlat::{Digraph, Error, FinitePoset, Hypergraph};

/// Ornamentation, reorientation and sourcing posets of small directed graphs.
#[derive(Parser)]
#[command(name = "ornlat", version)]
struct Cli {
    /// Worker threads for parallel checks (defaults to the number of cores).
    #[arg(long, global = true, env = "ORNLAT_WORKERS")]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List or print the built-in graphs.
    Fixtures {
        #[command(subcommand)]
        action: FixtureAction,
    },
    /// Build a poset and report its size and whether it is a lattice.
    Build {
        kind: PosetKind,
        #[command(flatten)]
        input: GraphInput,
        /// Write the Hasse diagram as Graphviz.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Write elements and cover relations as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run a single property check; exits with 1 if it fails.
    Check {
        property: Property,
        #[command(flatten)]
        input: GraphInput,
        /// Poset for `lattice` and `semidistributive`.
        #[arg(long, value_enum, default_value = "orn")]
        poset: PosetKind,
    },
    /// Count ornamentations of brooms and combs.
    Enumerate {
        #[command(subcommand)]
        family: FamilyCommand,
    },
    /// Run a verification suite over all increasing trees up to `--n` vertices.
    Verify {
        suite: SuiteArg,
        #[arg(long)]
        n: usize,
        /// Check this many random subhypergraphs per tree (intreeval only).
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the report as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Record wall time per check in the report.
        #[arg(long)]
        timings: bool,
    },
    /// Polytope constructions.
    Polytope {
        #[command(subcommand)]
        action: PolytopeAction,
    },
}

#[derive(Subcommand)]
enum FixtureAction {
    List,
    Emit { name: String },
}

#[derive(Subcommand)]
enum FamilyCommand {
    Broom {
        #[arg(long, required_unless_present = "table")]
        m: Option<usize>,
        #[arg(long, required_unless_present = "table")]
        n: Option<usize>,
        /// Print the table for all `m, n <= size` as CSV.
        #[arg(long, value_name = "SIZE", conflicts_with_all = ["m", "n"])]
        table: Option<usize>,
    },
    Comb {
        #[arg(long)]
        n: usize,
        /// Also check the bijections with labeled Dyck paths and matchings.
        #[arg(long)]
        bijections: bool,
    },
}

#[derive(Subcommand)]
enum PolytopeAction {
    /// Vertices and ω-oriented edges of a hypergraphic polytope.
    Skeleton {
        /// Hypergraph JSON `{"n": .., "hyperedges": [[..], ..]}`.
        #[arg(long, conflicts_with = "paths_of")]
        input: Option<PathBuf>,
        /// Use the path hypergraph of a fixture.
        #[arg(long, value_name = "FIXTURE")]
        paths_of: Option<String>,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// JSON input file.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Built-in graph name such as `X`, `I4` or `broom(2,3)`.
    #[arg(long)]
    fixture: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum PosetKind {
    Orn,
    Areori,
    Asour,
    Aorn,
    Rbi,
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Lattice,
    Semidistributive,
    Unstarred,
    Pic,
    StarSparse,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Semidistributive,
    Macneille,
    Equivalences,
    Quotient,
    Intreeval,
    Realization,
    All,
}

enum Failure {
    /// A requested check ran and failed.
    Check,
    Input(String),
    Guard(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::SizeLimit { .. } => Failure::Guard(e.to_string()),
            e => Failure::Input(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_graph(input: &GraphInput) -> Result<Digraph, Failure> {
    match (&input.input, &input.fixture) {
        (Some(p), _) => Ok(Digraph::try_from(read_json::<DigraphJson>(p)?)?),
        (_, Some(name)) => Ok(by_name(name)?),
        _ => unreachable!("clap requires one input"),
    }
}

/// Intreeval input: a JSON file with `tree` and `hyperedges`, or the full path hypergraph of a
/// fixture tree.
fn load_intreeval(input: &GraphInput) -> Result<IntreevalHypergraph, Failure> {
    match (&input.input, &input.fixture) {
        (Some(p), _) => Ok(IntreevalHypergraph::from_json(read_json::<IntreevalJson>(p)?)?),
        (_, Some(name)) => Ok(IntreevalHypergraph::full(&by_name(name)?)?),
        _ => unreachable!("clap requires one input"),
    }
}

fn write(path: &Path, contents: &str) -> Outcome {
    fs::write(path, contents).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn verdict(ok: bool, what: &str, witness: Option<String>) -> Outcome {
    if ok {
        println!("{what}: yes");
        Ok(())
    } else {
        println!("{what}: no");
        if let Some(w) = witness {
            println!("witness: {w}");
        }
        Err(Failure::Check)
    }
}

fn report_poset<K: Clone + Eq + Hash + Display>(
    p: &FinitePoset<K>,
    dot: Option<&Path>,
    json: Option<&Path>,
) -> Outcome {
    println!("elements: {}", p.len());
    println!("covers: {}", p.covers().len());
    println!("lattice: {}", if p.is_lattice() { "yes" } else { "no" });
    if let Some(path) = dot {
        write(path, &p.to_dot(|k| k.to_string()))?;
    }
    if let Some(path) = json {
        write(path, &serde_json::to_string_pretty(&p.to_json(|k| k.to_string().into()))?)?;
    }
    Ok(())
}

fn check_poset<K: Clone + Eq + Hash + Display>(p: &FinitePoset<K>, property: Property) -> Outcome {
    match property {
        Property::Lattice => {
            let witness =
                p.lattice_counterexample()?.map(|(i, j, what)| format!("{} and {} have no {what}", p.key(i), p.key(j)));
            verdict(witness.is_none(), "lattice", witness)
        }
        Property::Semidistributive => {
            let l = match p.lattice() {
                Ok(l) => l,
                Err(Error::NotALattice(..)) => {
                    return verdict(false, "semidistributive", Some("not a lattice".into()));
                }
                Err(e) => return Err(e.into()),
            };
            let join = l.is_join_semidistributive()?;
            let meet = l.is_meet_semidistributive()?;
            let witness =
                (!join || !meet).then(|| format!("join semidistributive: {join}, meet semidistributive: {meet}"));
            verdict(join && meet, "semidistributive", witness)
        }
        _ => unreachable!("graph properties are handled by the caller"),
    }
}

fn with_poset(kind: PosetKind, d: &Digraph, f: &mut dyn FnMut(&dyn PosetView) -> Outcome) -> Outcome {
    match kind {
        PosetKind::Orn => f(&orn_poset(d)?),
        PosetKind::Aorn => f(&aorn_poset(d)?),
        PosetKind::Areori => f(&areori_poset(&Ambient::of(d)?)?),
        PosetKind::Rbi => f(&rbi_poset(&Ambient::of(d)?)?),
        PosetKind::Asour => f(&asour_poset(&Arc::new(path_hypergraph(d)))?),
    }
}

/// Object-safe view so one closure can handle every key type.
trait PosetView {
    fn report(&self, dot: Option<&Path>, json: Option<&Path>) -> Outcome;
    fn check(&self, property: Property) -> Outcome;
}

impl<K: Clone + Eq + Hash + Display> PosetView for FinitePoset<K> {
    fn report(&self, dot: Option<&Path>, json: Option<&Path>) -> Outcome {
        report_poset(self, dot, json)
    }

    fn check(&self, property: Property) -> Outcome {
        check_poset(self, property)
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Fixtures { action: FixtureAction::List } => {
            for name in CATALOG {
                println!("{name}");
            }
            Ok(())
        }
        Command::Fixtures { action: FixtureAction::Emit { name } } => {
            println!("{}", serde_json::to_string_pretty(&by_name(&name)?.to_json())?);
            Ok(())
        }
        Command::Build { kind, input, dot, json } => {
            let d = load_graph(&input)?;
            with_poset(kind, &d, &mut |p| p.report(dot.as_deref(), json.as_deref()))
        }
        Command::Check { property, input, poset } => match property {
            Property::Lattice | Property::Semidistributive => {
                let d = load_graph(&input)?;
                with_poset(poset, &d, &mut |p| p.check(property))
            }
            Property::Unstarred => {
                let d = load_graph(&input)?;
                let starred = d.is_starred_tree()?;
                let witness =
                    d.transitive_closure().has_induced_alternating_cycle().map(|c| format!("alternating cycle {c:?}"));
                verdict(!starred, "unstarred", witness)
            }
            Property::Pic => {
                let ii = load_intreeval(&input)?;
                let witness = ii.path_intersection_counterexample().map(|(a, b)| format!("{a} and {b}"));
                verdict(witness.is_none(), "path intersection closed", witness)
            }
            Property::StarSparse => {
                let ii = load_intreeval(&input)?;
                let witness = ii.star_cycle().map(|(u, v, c)| format!("star graph at ({u},{v}) has cycle {c:?}"));
                verdict(witness.is_none(), "star sparse", witness)
            }
        },
        Command::Enumerate { family: FamilyCommand::Broom { m, n, table } } => {
            if let Some(size) = table {
                let t = broom_table(size, size);
                let header: Vec<String> = (0..=size).map(|n| format!("n={n}")).collect();
                println!("m,{}", header.join(","));
                for (m, row) in t.iter().enumerate() {
                    let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                    println!("{m},{}", cells.join(","));
                }
            } else {
                println!("{}", broom_count(m.expect("clap"), n.expect("clap")));
            }
            Ok(())
        }
        Command::Enumerate { family: FamilyCommand::Comb { n, bijections } } => {
            println!("{}", comb_count(n));
            if bijections {
                let r = comb_bijections(n)?;
                println!("{}", serde_json::to_string_pretty(&r)?);
                if !r.passed() {
                    return Err(Failure::Check);
                }
            }
            Ok(())
        }
        Command::Verify { suite, n, sample, seed, json, timings } => {
            let opts = Options { n, sampling: sample.map(|count| Sampling { count, seed }), timings };
            let report = match suite {
                SuiteArg::All => run_all(&opts)?,
                s => run_suite(suite_of(s), &opts)?,
            };
            let failed = report.failures().count();
            println!("{}: {} checks, {} failed", report.suite, report.checks.len(), failed);
            for f in report.failures() {
                println!("FAIL {} {}: {}", f.name, f.instance, f.witness.as_deref().unwrap_or(""));
            }
            if let Some(path) = json {
                write(&path, &report.to_json())?;
            }
            if report.passed {
                Ok(())
            } else {
                Err(Failure::Check)
            }
        }
        Command::Polytope { action: PolytopeAction::Skeleton { input, paths_of, dot, json } } => {
            let h: Hypergraph = match (input, paths_of) {
                (Some(p), _) => Hypergraph::try_from(read_json::<HypergraphJson>(&p)?)?,
                (_, Some(name)) => path_hypergraph(&by_name(&name)?),
                _ => return Err(Failure::Input("one of --input or --paths-of is required".into())),
            };
            let sk = hypergraphic_skeleton(&Arc::new(h))?;
            println!("vertices: {}", sk.keys.len());
            println!("edges: {}", sk.arcs.len());
            if let Some(path) = dot {
                write(&path, &sk.to_dot(|s| s.to_string()))?;
            }
            if let Some(path) = json {
                write(&path, &serde_json::to_string_pretty(&sk.to_json(|s| s.to_string().into()))?)?;
            }
            Ok(())
        }
    }
}

fn suite_of(s: SuiteArg) -> Suite {
    match s {
        SuiteArg::Semidistributive => Suite::Semidistributive,
        SuiteArg::Macneille => Suite::MacNeille,
        SuiteArg::Equivalences => Suite::Equivalences,
        SuiteArg::Quotient => Suite::Quotient,
        SuiteArg::Intreeval => Suite::Intreeval,
        SuiteArg::Realization => Suite::Realization,
        SuiteArg::All => unreachable!("handled by the caller"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(w) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(w).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Guard(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(4)
        }
    }
}

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use credence::{
    agr, agr_rf, agr_star, agr_un, classify_class, export_dot, export_pedigree_dot, run_simulation, serialize_pedigree,
    un, Agent, BeliefState, Error, Formula, ParseErrorKind, PedigreedBeliefState, Profile, Relation, Scenario,
    SimConfig, Topology,
};

#[derive(Parser)]
#[command(name = "credence", version, about = "Belief states over conflicting ranked sources")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a scenario and print the class membership of every source.
    Validate { scenario: PathBuf },
    /// Aggregate a set of sources.
    Aggregate {
        scenario: PathBuf,
        #[arg(long, value_enum)]
        op: Op,
        /// `all` or a comma-separated list of source ids.
        #[arg(long, default_value = "all")]
        sources: String,
    },
    /// Fuse the pedigreed belief states of several agents.
    Fuse {
        scenario: PathBuf,
        #[arg(long, default_value = "all")]
        agents: String,
        /// Also write the fused pedigree to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate the conditional "if p then q" against an induced state.
    Query {
        scenario: PathBuf,
        #[arg(long, conflicts_with = "sources", required_unless_present = "sources")]
        agent: Option<String>,
        #[arg(long)]
        sources: Option<String>,
        #[arg(long = "if")]
        condition: String,
        #[arg(long = "then")]
        consequent: String,
    },
    /// Run the gossip simulator.
    Simulate {
        scenario: PathBuf,
        /// complete, ring, none, star:<agent> or edges:<a>-<b>,...
        #[arg(long, default_value = "complete")]
        topology: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        rounds: usize,
        #[arg(long, default_value_t = 0.0)]
        dup: f64,
        #[arg(long, default_value_t = 0.0)]
        drop: f64,
    },
    /// Write a Graphviz rendering of one state.
    ExportDot {
        scenario: PathBuf,
        #[arg(long, group = "target")]
        source: Option<String>,
        #[arg(long, group = "target")]
        agent: Option<String>,
        #[arg(long, group = "target")]
        fused: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Un,
    Agrun,
    Agrrf,
    Agrstar,
    Agr,
}

struct Failure {
    code: u8,
    stdout: String,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            stdout: String::new(),
            message: message.into(),
        }
    }

    fn domain(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            stdout: String::new(),
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownSource(_) | Error::UnknownAgent(_) | Error::InvalidTopology(_) => Failure::usage(e.to_string()),
            Error::ZeroRounds | Error::InvalidProbability(_) => Failure::usage(e.to_string()),
            _ => Failure::domain(e.to_string()),
        }
    }
}

type CmdResult = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            print!("{}", f.stdout);
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> CmdResult {
    match command {
        Command::Validate { scenario } => validate(&scenario),
        Command::Aggregate { scenario, op, sources } => {
            let s = load(&scenario)?;
            aggregate(&select_sources(&s, &sources)?, op)
        }
        Command::Fuse { scenario, agents, out } => {
            let s = load(&scenario)?;
            fuse(&s, &agents, out.as_deref())
        }
        Command::Query {
            scenario,
            agent,
            sources,
            condition,
            consequent,
        } => {
            let s = load(&scenario)?;
            let state = match (agent, sources) {
                (Some(id), _) => find_agent(&s, &id)?.induced_state(),
                (None, Some(ids)) => agr(&select_sources(&s, &ids)?),
                (None, None) => return Err(Failure::usage("one of --agent or --sources is required")),
            };
            query(&s, &state, &condition, &consequent)
        }
        Command::Simulate {
            scenario,
            topology,
            seed,
            rounds,
            dup,
            drop,
        } => {
            let s = load(&scenario)?;
            let topology: Topology = topology.parse().map_err(|e: Error| Failure::usage(e.to_string()))?;
            let mut config = SimConfig::new(seed, rounds);
            config.duplication_prob = dup;
            config.drop_prob = drop;
            simulate(&s, &topology, &config)
        }
        Command::ExportDot {
            scenario,
            source,
            agent,
            fused,
            out,
        } => {
            let s = load(&scenario)?;
            let dot = if let Some(id) = source {
                let src = s
                    .sources
                    .get(&id)
                    .ok_or_else(|| Failure::usage(format!("unknown source `{id}`")))?;
                export_dot(&src.state.to_layers())
            } else if let Some(id) = agent {
                export_pedigree_dot(&find_agent(&s, &id)?.pedigree())
            } else if fused {
                export_pedigree_dot(&fuse_agents(&s, &s.agents.iter().collect::<Vec<_>>())?)
            } else {
                return Err(Failure::usage("one of --source, --agent or --fused is required"));
            };
            emit(dot, out.as_deref())
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read(path)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
        .and_then(|bytes| {
            String::from_utf8(bytes).map_err(|_| Failure::usage(format!("{}: invalid UTF-8", path.display())))
        })
}

fn load(path: &Path) -> Result<Scenario, Failure> {
    let text = read(path)?;
    Scenario::parse(&text).map_err(|e| {
        let message = format!("{}:{e}", path.display());
        match e.kind {
            ParseErrorKind::InvalidState { .. } => Failure::domain(message),
            _ => Failure::usage(message),
        }
    })
}

fn validate(path: &Path) -> CmdResult {
    let text = read(path)?;
    let scenario = match Scenario::parse(&text) {
        Ok(s) => s,
        Err(e) => {
            let message = format!("{}:{e}", path.display());
            return Err(match &e.kind {
                ParseErrorKind::InvalidState { source, error } => {
                    let witness = match error.as_ref() {
                        Error::NotModular { x, y, z } => format!("not-modular {x} {y} {z}"),
                        Error::NotTransitive { x, y, z } => format!("not-transitive {x} {y} {z}"),
                        other => other.to_string(),
                    };
                    Failure {
                        code: 1,
                        stdout: format!("INVALID {source} {witness}\n"),
                        message,
                    }
                }
                _ => Failure::usage(message),
            });
        }
    };
    let mut out = String::new();
    for s in scenario.sources.sources() {
        let flags = classify_class(s.state.relation());
        let _ = writeln!(out, "OK {} {}", s.id, flags.names().join(","));
    }
    Ok(out)
}

fn select_sources(s: &Scenario, ids: &str) -> Result<Profile, Failure> {
    if ids == "all" {
        return Ok(s.sources.clone());
    }
    let ids: Vec<&str> = ids.split(',').map(str::trim).filter(|i| !i.is_empty()).collect();
    Ok(s.sources.subset(&ids)?)
}

fn find_agent<'a>(s: &'a Scenario, id: &str) -> Result<&'a Agent, Failure> {
    s.agent(id).ok_or_else(|| Failure::usage(format!("unknown agent `{id}`")))
}

fn print_relation(out: &mut String, r: &Relation) {
    for (x, y) in r.named_pairs() {
        let _ = writeln!(out, "{x} < {y}");
    }
}

fn aggregate(profile: &Profile, op: Op) -> CmdResult {
    let relation = match op {
        Op::Un => un(profile),
        Op::Agrun => agr_un(profile).into_relation(),
        Op::Agrrf => agr_rf(profile),
        Op::Agrstar => agr_star(profile).into_relation(),
        Op::Agr => agr(profile).into_relation(),
    };
    let mut out = String::new();
    print_relation(&mut out, &relation);
    if let Ok(state) = BeliefState::from_relation(relation) {
        let _ = writeln!(out, "layers: {}", state.to_layers());
    }
    Ok(out)
}

fn fuse_agents(s: &Scenario, agents: &[&Agent]) -> Result<PedigreedBeliefState, Failure> {
    let pedigrees: Vec<PedigreedBeliefState> = agents.iter().map(|a| a.pedigree()).collect();
    Ok(PedigreedBeliefState::fuse(s.universe(), &pedigrees)?)
}

fn fuse(s: &Scenario, ids: &str, out: Option<&Path>) -> CmdResult {
    let agents: Vec<&Agent> = if ids == "all" {
        s.agents.iter().collect()
    } else {
        ids.split(',')
            .map(str::trim)
            .filter(|i| !i.is_empty())
            .map(|id| find_agent(s, id))
            .collect::<Result<_, _>>()?
    };
    let fused = fuse_agents(s, &agents)?;
    let text = serialize_pedigree(&fused);
    if let Some(path) = out {
        std::fs::write(path, &text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    }
    Ok(format!("{text}layers: {}\n", fused.induced_state().to_layers()))
}

fn query(s: &Scenario, state: &BeliefState, condition: &str, consequent: &str) -> CmdResult {
    let props = s
        .props()
        .ok_or_else(|| Failure::usage("queries need a scenario declared with `vars`"))?;
    let parse = |text: &str| Formula::parse(text).map_err(|e| Failure::usage(format!("formula `{text}`: {e}")));
    let p = parse(condition)?;
    let q = parse(consequent)?;
    let status = match state.evaluate_conditional(&p, &q, props) {
        Ok(status) => status,
        Err(Error::VacuousCondition) => {
            return Err(Failure {
                code: 1,
                stdout: "VACUOUS\n".into(),
                message: format!("`{condition}` has no models"),
            })
        }
        Err(e @ Error::UndeclaredVariable(_)) => return Err(Failure::usage(e.to_string())),
        Err(e) => return Err(e.into()),
    };
    let mut out = String::new();
    for (flag, name) in [
        (status.bel, "BEL"),
        (status.disbel, "DISBEL"),
        (status.agn, "AGN"),
        (status.con, "CON"),
    ] {
        if flag {
            let _ = writeln!(out, "{name}");
        }
    }
    let u = s.universe();
    let choice: Vec<&str> = status.choice_set.iter().map(|w| u.name(*w)).collect();
    let _ = writeln!(out, "choice: {}", choice.join(" "));
    Ok(out)
}

fn simulate(s: &Scenario, topology: &Topology, config: &SimConfig) -> CmdResult {
    let report = run_simulation(s.universe(), &s.agents, topology, config)?;
    let mut out = String::new();
    let _ = writeln!(out, "rounds: {}", report.rounds_executed);
    let _ = writeln!(out, "settled: {}", report.settled_round);
    let _ = writeln!(out, "converged: {}", report.converged);
    let _ = writeln!(out, "messages: {}", report.message_count);
    let _ = writeln!(out, "dropped: {}", report.dropped_count);
    for (id, state) in &report.final_states {
        let _ = writeln!(out, "agent {id}: {}", state.induced_state().to_layers());
    }
    let _ = writeln!(out, "MATCHES_GLOBAL: {}", report.matches_global);
    Ok(out)
}

fn emit(text: String, out: Option<&Path>) -> CmdResult {
    match out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

//! Deterministic multi-agent fusion simulator.
//!
//! Agents sit on an undirected topology and repeatedly exchange their full
//! pedigreed belief states. Each round:
//!
//! 1. the edge list is shuffled (Fisher-Yates driven by [`SplitMix64`]);
//! 2. for every edge `(u, v)` in that order, `u` sends to `v`, then `v`
//!    sends its (possibly just updated) state to `u`;
//! 3. each message draws two coins in order, drop then duplicate. A dropped
//!    message is not delivered; a duplicated one is delivered twice. The
//!    receiver merges every delivery immediately.
//!
//! A round in which every message was delivered and no state changed is
//! quiescent; the simulation stops after the first quiescent round or after
//! `max_rounds`.
//!
//! The RNG is fully specified so that other implementations can replay a
//! schedule exactly:
//!
//! ```text
//! state  = state + 0x9E3779B97F4A7C15           (wrapping)
//! z      = state
//! z      = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 (wrapping)
//! z      = (z ^ (z >> 27)) * 0x94D049BB133111EB (wrapping)
//! output = z ^ (z >> 31)
//!
//! coin(p)         = (output >> 11) * 2^-53 < p
//! shuffle(edges)  = for i in (1..len).rev(): swap(i, output % (i + 1))
//! ```

use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::pedigree::{global_reference, Agent, PedigreedBeliefState};
use crate::universe::WorldUniverse;

/// SplitMix64 pseudo-random generator.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn coin(&mut self, p: f64) -> bool {
        self.next_f64() < p
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = (self.next_u64() % (i as u64 + 1)) as usize;
            items.swap(i, j);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Topology {
    Complete,
    /// Agents in declaration order, last linked back to first.
    Ring,
    Star(String),
    Edges(Vec<(String, String)>),
}

/// `complete`, `ring`, `star:<id>`, `edges:<a>-<b>,<c>-<d>` or `none`.
impl FromStr for Topology {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "complete" => return Ok(Topology::Complete),
            "ring" => return Ok(Topology::Ring),
            "none" => return Ok(Topology::Edges(Vec::new())),
            _ => {}
        }
        if let Some(center) = s.strip_prefix("star:") {
            if center.is_empty() {
                return Err(Error::InvalidTopology("star needs a center agent".into()));
            }
            return Ok(Topology::Star(center.to_string()));
        }
        if let Some(list) = s.strip_prefix("edges:") {
            let edges = list
                .split(',')
                .map(str::trim)
                .filter(|e| !e.is_empty())
                .map(|e| match e.split('-').collect::<Vec<_>>()[..] {
                    [a, b] if !a.is_empty() && !b.is_empty() => Ok((a.to_string(), b.to_string())),
                    _ => Err(Error::InvalidTopology(format!("bad edge `{e}`"))),
                })
                .collect::<Result<Vec<_>>>()?;
            return Ok(Topology::Edges(edges));
        }
        Err(Error::InvalidTopology(format!("unknown topology `{s}`")))
    }
}

impl Topology {
    /// Resolves to undirected edges `(i, j)`, `i < j`, over agent positions,
    /// deduplicated and sorted.
    pub fn edges(&self, agents: &[Agent]) -> Result<Vec<(usize, usize)>> {
        let n = agents.len();
        let position = |id: &str| {
            agents
                .iter()
                .position(|a| a.id == id)
                .ok_or_else(|| Error::UnknownAgent(id.to_string()))
        };
        let mut edges: Vec<(usize, usize)> = match self {
            Topology::Complete => (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .collect(),
            Topology::Ring => (0..n)
                .map(|i| (i, (i + 1) % n))
                .filter(|(i, j)| i != j)
                .collect(),
            Topology::Star(center) => {
                let c = position(center)?;
                (0..n).filter(|&i| i != c).map(|i| (c, i)).collect()
            }
            Topology::Edges(list) => {
                let mut out = Vec::with_capacity(list.len());
                for (a, b) in list {
                    let (i, j) = (position(a)?, position(b)?);
                    if i == j {
                        return Err(Error::InvalidTopology(format!("self-loop on `{a}`")));
                    }
                    out.push((i, j));
                }
                out
            }
        };
        for e in &mut edges {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(edges)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimConfig {
    pub seed: u64,
    pub max_rounds: usize,
    pub duplication_prob: f64,
    pub drop_prob: f64,
}

impl SimConfig {
    pub fn new(seed: u64, max_rounds: usize) -> Self {
        Self {
            seed,
            max_rounds,
            duplication_prob: 0.0,
            drop_prob: 0.0,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.max_rounds == 0 {
            return Err(Error::ZeroRounds);
        }
        for p in [self.duplication_prob, self.drop_prob] {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidProbability(p.to_string()));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimReport {
    pub rounds_executed: usize,
    /// Last round in which some agent's state changed; 0 if none ever did.
    pub settled_round: usize,
    /// Final pedigreed state per agent, in agent order.
    pub final_states: Vec<(String, PedigreedBeliefState)>,
    pub converged: bool,
    pub matches_global: bool,
    /// Deliveries, duplicates included.
    pub message_count: usize,
    pub dropped_count: usize,
    pub global: PedigreedBeliefState,
}

pub fn run_simulation(
    universe: &Arc<WorldUniverse>,
    agents: &[Agent],
    topology: &Topology,
    config: &SimConfig,
) -> Result<SimReport> {
    if agents.is_empty() {
        return Err(Error::NoAgents);
    }
    config.validate()?;
    let mut edges = topology.edges(agents)?;
    let global = global_reference(universe, agents)?;
    let mut states: Vec<PedigreedBeliefState> = agents.iter().map(Agent::pedigree).collect();
    let mut rng = SplitMix64::new(config.seed);

    let mut report = SimReport {
        rounds_executed: 0,
        settled_round: 0,
        final_states: Vec::new(),
        converged: false,
        matches_global: false,
        message_count: 0,
        dropped_count: 0,
        global,
    };

    for round in 1..=config.max_rounds {
        report.rounds_executed = round;
        rng.shuffle(&mut edges);
        let mut changed = false;
        let mut all_delivered = true;
        for &(u, v) in edges.iter() {
            for (from, to) in [(u, v), (v, u)] {
                let dropped = rng.coin(config.drop_prob);
                let duplicated = rng.coin(config.duplication_prob);
                if dropped {
                    report.dropped_count += 1;
                    all_delivered = false;
                    continue;
                }
                let message = states[from].clone();
                for _ in 0..if duplicated { 2 } else { 1 } {
                    report.message_count += 1;
                    let merged = states[to].merge(&message)?;
                    if merged != states[to] {
                        states[to] = merged;
                        changed = true;
                    }
                }
            }
        }
        if changed {
            report.settled_round = round;
        } else if all_delivered {
            report.converged = true;
            break;
        }
    }

    report.matches_global = states.iter().all(|s| *s == report.global);
    report.final_states = agents.iter().map(|a| a.id.clone()).zip(states).collect();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aggregate::{Profile, Rank, Source};
    use crate::belief::BeliefState;
    use crate::relation::Relation;

    #[test]
    fn splitmix_reference_values() {
        // Reference outputs for seed 0 of the published SplitMix64 generator.
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(rng.next_u64(), 0x6E78_9E6A_A1B9_65F4);
        assert_eq!(rng.next_u64(), 0x06C4_5D18_8009_454F);
    }

    #[test]
    fn coins_at_extremes() {
        let mut rng = SplitMix64::new(42);
        for _ in 0..1000 {
            assert!(!rng.coin(0.0));
            assert!(rng.coin(1.0));
        }
    }

    #[test]
    fn topology_parsing() {
        assert_eq!("complete".parse::<Topology>().unwrap(), Topology::Complete);
        assert_eq!("ring".parse::<Topology>().unwrap(), Topology::Ring);
        assert_eq!("star:A".parse::<Topology>().unwrap(), Topology::Star("A".into()));
        assert_eq!(
            "edges:a-b, b-c".parse::<Topology>().unwrap(),
            Topology::Edges(vec![("a".into(), "b".into()), ("b".into(), "c".into())])
        );
        assert_eq!("none".parse::<Topology>().unwrap(), Topology::Edges(vec![]));
        assert!("mesh".parse::<Topology>().is_err());
        assert!("edges:a-b-c".parse::<Topology>().is_err());
        assert!("star:".parse::<Topology>().is_err());
    }

    fn agents(u: &Arc<WorldUniverse>, ids: &[&str]) -> Vec<Agent> {
        ids.iter()
            .map(|id| Agent::new(*id, Profile::empty(u)))
            .collect()
    }

    #[test]
    fn topology_edges() {
        let u = Arc::new(WorldUniverse::new(["a"]).unwrap());
        let ag = agents(&u, &["p", "q", "r"]);
        assert_eq!(Topology::Complete.edges(&ag).unwrap(), vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(Topology::Ring.edges(&ag).unwrap(), vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(Topology::Star("q".into()).edges(&ag).unwrap(), vec![(0, 1), (1, 2)]);
        assert_eq!(Topology::Ring.edges(&ag[..2]).unwrap(), vec![(0, 1)]);
        assert!(Topology::Ring.edges(&ag[..1]).unwrap().is_empty());
        assert_eq!(
            Topology::Star("z".into()).edges(&ag).unwrap_err(),
            Error::UnknownAgent("z".into())
        );
        let self_loop = Topology::Edges(vec![("p".into(), "p".into())]);
        assert!(matches!(self_loop.edges(&ag), Err(Error::InvalidTopology(_))));
    }

    fn shared_source() -> (Arc<WorldUniverse>, Vec<Agent>) {
        let u = Arc::new(WorldUniverse::new(["a", "b", "c"]).unwrap());
        let s = |id: &str, rank, pairs: &[(&str, &str)]| {
            let r = Relation::from_named_pairs(&u, pairs.iter().copied()).unwrap();
            Source::new(id, rank, BeliefState::from_relation(r).unwrap())
        };
        let s0 = s("s0", 1, &[("b", "a"), ("b", "c")]);
        let s1 = s("s1", 1, &[("a", "b"), ("c", "b")]);
        let s2 = s("s2", 2, &[("a", "b"), ("c", "b")]);
        let a1 = Agent::new("A1'", Profile::new(&u, vec![s0, s2.clone()]).unwrap());
        let a2 = Agent::new("A2'", Profile::new(&u, vec![s1, s2]).unwrap());
        (u, vec![a1, a2])
    }

    #[test]
    fn two_agents_converge_in_two_rounds() {
        let (u, ag) = shared_source();
        let report = run_simulation(&u, &ag, &Topology::Complete, &SimConfig::new(1, 10)).unwrap();
        assert!(report.converged && report.matches_global);
        assert!(report.rounds_executed <= 2);
        for (_, s) in &report.final_states {
            let pairs: Vec<_> = s.pairs().collect();
            assert_eq!(pairs, vec![((0, 1), Rank(2)), ((2, 1), Rank(2))]);
        }
    }

    #[test]
    fn full_duplication_is_harmless() {
        let (u, ag) = shared_source();
        let mut cfg = SimConfig::new(7, 10);
        cfg.duplication_prob = 1.0;
        let dup = run_simulation(&u, &ag, &Topology::Complete, &cfg).unwrap();
        let plain = run_simulation(&u, &ag, &Topology::Complete, &SimConfig::new(7, 10)).unwrap();
        assert_eq!(dup.final_states, plain.final_states);
        assert_eq!(dup.message_count, 2 * plain.message_count);
    }

    #[test]
    fn no_edges_keeps_initial_states() {
        let (u, ag) = shared_source();
        let report = run_simulation(&u, &ag, &Topology::Edges(vec![]), &SimConfig::new(3, 5)).unwrap();
        assert!(report.converged);
        assert_eq!(report.rounds_executed, 1);
        assert_eq!(report.message_count, 0);
        assert_eq!(report.final_states[0].1, ag[0].pedigree());
        assert_eq!(report.final_states[1].1, ag[1].pedigree());
    }

    #[test]
    fn config_errors() {
        let (u, ag) = shared_source();
        assert_eq!(
            run_simulation(&u, &ag, &Topology::Complete, &SimConfig::new(0, 0)).unwrap_err(),
            Error::ZeroRounds
        );
        let mut cfg = SimConfig::new(0, 3);
        cfg.drop_prob = 1.5;
        assert!(matches!(
            run_simulation(&u, &ag, &Topology::Complete, &cfg),
            Err(Error::InvalidProbability(_))
        ));
        assert_eq!(
            run_simulation(&u, &[], &Topology::Complete, &SimConfig::new(0, 3)).unwrap_err(),
            Error::NoAgents
        );
    }

    #[test]
    fn total_drop_never_converges() {
        let (u, mut ag) = shared_source();
        // A1' alone holds the dissenting rank-1 source.
        ag[1] = Agent::new("A2'", ag[1].informants.subset(&["s2"]).unwrap());
        ag[0] = Agent::new("A1'", ag[0].informants.subset(&["s0"]).unwrap());
        let mut cfg = SimConfig::new(0, 4);
        cfg.drop_prob = 1.0;
        let r = run_simulation(&u, &ag, &Topology::Complete, &cfg).unwrap();
        assert!(!r.converged && !r.matches_global);
        assert_eq!(r.rounds_executed, 4);
        assert_eq!(r.dropped_count, 8);
    }
}

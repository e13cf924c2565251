//! Belief states that represent conflicting collective opinions as modular,
//! transitive relations over a finite set of worlds, aggregation of ranked
//! information sources into such states, and order-invariant fusion of
//! multiple agents' pedigreed belief states.

pub mod aggregate;
pub mod belief;
pub mod dot;
pub mod error;
pub mod logic;
pub mod pedigree;
pub mod relation;
pub mod scenario;
pub mod sim;
pub mod universe;

pub use aggregate::{agr, agr_rf, agr_star, agr_un, un, Profile, Rank, Source};
pub use belief::{classify_class, BeliefState, Block, ClassFlags, ConditionalStatus, LayeredForm};
pub use dot::{export_dot, export_pedigree_dot};
pub use error::{Error, Result};
pub use logic::{Formula, FormulaError, PropUniverse, Valuation};
pub use pedigree::{fuse_equal_rank, global_reference, Agent, PedigreedBeliefState};
pub use relation::{PropertyFlags, Relation};
pub use scenario::{parse_pedigree, serialize_pedigree, ParseError, ParseErrorKind, Scenario, WorldDecl};
pub use sim::{run_simulation, SimConfig, SimReport, SplitMix64, Topology};
pub use universe::WorldUniverse;

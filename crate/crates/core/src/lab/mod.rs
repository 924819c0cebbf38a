//! Generators for α ≤ 2 graphs, the minimal-counterexample property
//! battery, the check that K_⌈n/2⌉ is immersed, and a search harness tying
//! them together.

mod battery;
mod generators;
mod half_clique;
mod harness;

use thiserror::Error;

pub use battery::{
    pair_coloring, property_battery, property_battery_with, revalidate, BatteryOptions,
    ConditionResult, PropertyReport, Verdict, Witness, CONDITIONS, EDGE_MINIMAL,
};
pub use generators::{
    all_graphs, alpha2_enumerate, alpha2_random, dense56_random, read_graph6_stream,
    MAX_ENUMERATION_VERTICES,
};
pub use half_clique::{half_clique_check, HalfCliqueVerdict};
pub use harness::{
    search_harness, GraphSource, HarnessConfig, SearchReport, Survivor, VerdictTally,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabError {
    #[error("exhaustive enumeration supports n ≤ {max}, got {n}; pipe larger graphs in as a graph6 stream")]
    EnumerationTooLarge { n: usize, max: usize },
    #[error("generator needs 1 ≤ n ≤ 62, got {n}")]
    Order { n: usize },
    #[error("graph6 stream, line {line}: {reason}")]
    Stream { line: usize, reason: String },
    #[error("independence number is at least 3: {triple:?} is independent")]
    AlphaAtLeastThree { triple: [usize; 3] },
}

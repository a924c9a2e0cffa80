//! Strong edge coloring of bounded-degree sparse graphs, driven by labeled
//! non-backtracking walks in odd graphs.
//!
//! The crate is organized around three layers:
//!
//! * [`graph`], [`families`], [`girth`], [`mad`](mod@mad), [`thread`], [`conflict`] —
//!   plain simple-graph machinery: generators, exact structural measurements
//!   (girth by parity, maximum average degree as an exact rational), threads
//!   and pendant peeling, and the conflict graph whose proper vertex
//!   colorings are exactly the strong edge colorings.
//! * [`odd`] — the odd graph `O_n` on the `(n-1)`-subsets of `{1..2n-1}`,
//!   its canonical edge labeling, constructive prescribed-end special walks
//!   of every admissible length, and an exact dynamic-programming oracle
//!   that independently decides walk existence.
//! * [`coloring`] — verification, greedy and exact strong-coloring solvers,
//!   the caterpillar/pendant extension machinery built on odd-graph walks,
//!   and the full reduction algorithm that colors high-girth or low-mad
//!   graphs with `2Δ - 1` colors, emitting a replayable trace.
//!
//! Everything is deterministic: ties are broken by least vertex id, least
//! element, or least color throughout.

pub mod conflict;
pub mod families;
pub mod girth;
pub mod graph;
pub mod mad;
pub mod odd;
pub mod thread;
pub mod coloring;

pub use conflict::{conflict_graph, conflicting_pairs};
pub use families::{generate, GraphFamily};
pub use girth::{girth_profile, GirthProfile};
pub use graph::{build_graph, parse_graph, peel_pendants, write_graph, GraphError, PeelResult, SimpleGraph};
pub use mad::{mad, Density};
pub use thread::{find_thread, CaterpillarSpine, Thread};

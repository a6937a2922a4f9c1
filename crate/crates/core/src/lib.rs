//! Nil clean graphs of finite rings.
//!
//! Vertices are the elements of a finite ring R; two distinct vertices x, y
//! are adjacent when x + y is nil clean, i.e. an idempotent plus a
//! nilpotent. The crate builds the rings, the graphs and their exact
//! invariants, and runs a battery of structural claims about them over
//! configurable ring families.

pub mod bitset;
pub mod config;
pub mod error;
pub mod export;
pub mod graph;
pub mod harness;
pub mod nilclean;
pub mod ring;
pub mod scan;
pub mod verdict;

pub use bitset::ElementSet;
pub use config::Families;
pub use error::{Error, Result};
pub use graph::{build_graph, InvariantReport, Length, NilCleanGraph};
pub use harness::{run_suite, SuiteReport, SuiteSettings, TheoremCase};
pub use nilclean::{NilCleanProfile, ProfileDocument};
pub use ring::{build_quotient_by_nilradical, build_ring, CosetMap, Elem, Ring, RingSpec};
pub use scan::{ScanOptions, ScanRow};
pub use verdict::{Verdict, Witness};

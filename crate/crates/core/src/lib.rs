//! Maximal repetitions (runs), longest Lyndon words and Lyndon trees.
//!
//! All runs of a string are found in linear time from the longest Lyndon
//! word starting at each position, computed for a pair of opposite symbol
//! orders with a right-to-left stack scan over the inverse suffix array.
//! The same scan builds the two Lyndon trees of `#w$`, whose right nodes
//! carry the runs and answer 2-period queries in constant time.
//!
//! Positions in the public API are 1-based and inclusive. Position `n + 1`
//! is the end sentinel `$`, position `0` is the start sentinel `#` (trees
//! only).

pub mod error;
pub mod generate;
pub mod harness;
pub mod lyndon;
pub mod oracle;
pub mod pipeline;
pub mod rational;
pub mod runs;
pub mod suffix;
pub mod text;
pub mod tree;

mod interval;

pub use error::{Error, Result};
pub use interval::{Interval, Run};
pub use lyndon::{duval_factorization, is_lyndon, longest_lyndon, LongestLyndon, LyndonArray};
pub use rational::{rational_sum, Rational};
pub use runs::{br_set, candidate_to_run, compute_all_runs, statistics, BrSet, RunSet, RunStats};
pub use suffix::SuffixContext;
pub use text::{map_symbols, Order, Text};
pub use tree::{LyndonTree, TwoPeriodIndex};

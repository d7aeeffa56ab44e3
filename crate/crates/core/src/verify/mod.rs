//! End-to-end checks: the application catalog, the seven-item
//! counterexample and good-tree statistics.

pub mod catalog;
pub mod counterexample;
pub mod trees;

pub use catalog::{case, run_case, AlphaRecord, Case, CaseRecord, CaseResult, Prediction, Threshold, Verdict, CATALOG};
pub use counterexample::{counterexample_report, crossover_sweep, spot_check, CounterexampleReport, Crossover, SpotCheck, Sweep};
pub use trees::{
    good_tree, good_tree_consistent, tree_edge_counts, tree_stats, trend_nondecreasing, TreeEdgeCounts, TreeMode, TreeStats,
};

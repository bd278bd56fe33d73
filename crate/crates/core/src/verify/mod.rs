//! The built-in ring catalog, the theorem harness that evaluates claims about
//! δ-quasipolar and related rings over it, and counterexample search.

mod catalog;
mod search;
mod theorems;

pub use catalog::{analyze_entries, analyze_rings, default_catalog, AnalyzedRing, CatalogEntry, ExpectedFacts};
pub use search::{search_counterexample, Counterexample};
pub use theorems::{
    render_table, suite_passes, theorem_suite, SuiteOptions, TheoremResult, TheoremStatus, Witness,
    DEFAULT_PRODUCT_ORDER_LIMIT,
};

//! Exact pattern matching on weighted strings with average-case sublinear
//! search.
//!
//! A weighted string assigns each position a probability distribution over
//! an alphabet. Given a threshold `1/z`, a plain string occurs validly at a
//! position when the product of its letters' probabilities there is at least
//! `1/z`. Two searches are provided:
//!
//! * [`wpm_search`]: weighted pattern, plain text.
//! * [`wtm_search`]: plain pattern, weighted text.
//!
//! Both filter the text with exact search for plain strings that any valid
//! occurrence must contain, then verify the surviving windows. The
//! [`oracle`] module holds brute-force references and [`genmodel`] the
//! random instance generator.

pub mod alphabet;
pub mod bounds;
pub mod colour;
pub mod engines;
pub mod error;
pub mod genmodel;
pub mod oracle;
pub mod plan;
mod report;
pub mod weighted;
pub mod wpm;
pub mod wtm;

pub use alphabet::{Alphabet, Letter};
pub use bounds::{black_bound, ell_refined_ok, partition_fragments, weight_ratio_ok};
pub use colour::{
    build_black_matrix, colour_positions, heavy_projection, longest_clean_run, BlackMatrix, Colour,
    Colouring,
};
pub use engines::{InspectionCounter, MultiSearcher, SkipSearcher, TextAccess};
pub use error::{Error, Result};
pub use plan::{Filter, PlanMode, SearchPlan};
pub use report::SearchReport;
pub use weighted::{
    is_valid_window, window_log_probability, PlainString, Position, Threshold, WeightedString,
    WeightedStringBuilder,
};
pub use wpm::{naive_wpm, verify_wpm_candidate, wpm_search, WpmQuery};
pub use wtm::{naive_wtm, verify_wtm_candidate, wtm_search, LazyClassifiedText, WtmQuery};

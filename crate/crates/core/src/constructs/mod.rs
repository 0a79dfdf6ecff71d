//! Constructions, built-in fixtures, and the text and DOT formats.

pub mod dot;
pub mod fixtures;
pub mod format;
pub mod hsum;

pub use dot::export_dot;
pub use fixtures::{boolean_algebra, fig2_members, fixture, gen_fig2, named, FIXTURE_NAMES};
pub use format::{parse, serialize, Document};
pub use hsum::{boolean_block_decomposition, horizontal_components, horizontal_sum, mo, HorizontalSum};

//! Exact sexagesimal arithmetic, Old Babylonian metrology, and solid
//! geometry, with a small interpreter that replays the volume procedures
//! of cuneiform tablets step by step and checks each intermediate value
//! the scribe wrote down.
//!
//! The crate is organised in four layers:
//!
//! - [`sexagesimal`]: arbitrary-precision rationals with base-60 parsing
//!   and rendering, regularity tests, and exact reciprocals.
//! - [`metrology`]: the closed Old Babylonian unit catalog (nindan, kùš,
//!   volume-sar, sìla, gur, gur₇), exact conversions, the volume-to-grain
//!   storage rule, and mixed-radix capacity breakdowns.
//! - [`solids`]: exact volume formulas for the solids that appear in the
//!   tablet corpus, arbitrary-precision evaluation where π or cot(π/n)
//!   enters, polyhedron meshes with Euler characteristic, and a numeric
//!   slab oracle for cross-checking every closed form.
//! - [`tablet`]: the replay engine. Scripts transcribe a tablet's
//!   computation line by line; the interpreter recomputes each step
//!   exactly and labels it `Ok`, `AnnotatedError` (a known scribal slip),
//!   or `Mismatch`.
//!
//! Three scripts ship with the crate: both problems of SMT No. 14
//! (frustum-of-a-pyramid interior of a grain tower, and its capacity)
//! and the grain-heap problem of BM 85194 Rev. II 41-49.

pub mod metrology;
pub mod sexagesimal;
pub mod solids;
pub mod tablet;

pub use metrology::{CapacityBreakdown, Dimension, Quantity, Unit};
pub use sexagesimal::{parse_sex, FormatMode, SexDigits, SexRational};

//! Exact computation of stable twisted cohomology dimensions.
//!
//! * [`stablecohom`]: dim H^{|λ|}(Aut(F_n); S_λ(H)) and the Out(F_n) analogue
//!   in the stable range, by symmetric-group characters and independently by
//!   plethysm, plus exterior/symmetric power corollaries and stable ranges.
//! * [`mcg`]: generator degrees of H^*(Γ; S_λ(H)) over the stable cohomology
//!   of surface mapping class groups.
//! * [`symfunc`]: the plethysm Sym^k ∘ Sym^l and its stable coefficients.
//! * [`characters`], [`setpart`], [`partition`]: the combinatorics underneath.
//!
//! All arithmetic is exact. Anything that must be an integer is checked to be
//! one.

pub mod acceptance;
pub mod cache;
pub mod characters;
pub mod error;
pub mod mcg;
pub mod partition;
pub mod setpart;
pub mod stablecohom;
pub mod symfunc;

pub use characters::ClassFunction;
pub use error::{Error, Result};
pub use mcg::SurfaceVariant;
pub use partition::Partition;
pub use setpart::{GradedSeries, LabelAlphabet, LabelSet, SetPartition};
pub use stablecohom::{CoefficientTag, DimensionTable, GroupFamily, Method, StableRange, Statement, TableRow};
pub use symfunc::{PowerSumExpansion, SchurExpansion, StableMultiplicity, StableSource};

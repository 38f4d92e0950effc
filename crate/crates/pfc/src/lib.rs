//! Unequal-error-protected broadcast of progressive-resolution layered streams.
//!
//! The pipeline, end to end:
//!
//! 1. [`wavelet`] turns an image into an ordered stack of priority layers
//!    (a reversible 5/3 multiresolution decomposition; layer 0 alone yields
//!    the lowest resolution, each further layer doubles it).
//! 2. [`uep`] protects each layer with a Reed-Solomon code at a per-layer
//!    rate (stronger codes for more important layers), then interleaves the
//!    codewords column-wise into fountain input symbols.
//! 3. [`fountain`] encodes those symbols with a systematic raptor code and
//!    emits self-describing packets; any large-enough subset decodes.
//! 4. [`channel`] models per-receiver packet erasure (i.i.d. or bursty
//!    Gilbert-Elliott) so one broadcast serves receivers of very different
//!    loss rates.
//! 5. [`planner`] calibrates per-rate recovery curves by simulation and
//!    assigns per-layer rates greedily under a total-overhead budget.
//! 6. [`sim`] wires the whole thing into a multi-receiver broadcast
//!    simulator and reports, per receiver, the distribution of achieved
//!    resolution levels against an equal-protection baseline.
//!
//! Receivers with clean channels recover every layer; receivers with lossy
//! channels still recover the leading layers, so everyone gets *some*
//! resolution instead of nothing.

pub mod channel;
pub mod fountain;
pub mod gf;
pub mod planner;
mod seeding;
pub mod sim;
pub mod uep;
pub mod wavelet;

pub use seeding::mix_seed;

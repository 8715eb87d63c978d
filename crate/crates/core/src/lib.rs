//! Input-convex surrogates for distribution-grid voltage response.
//!
//! The crate covers the full pipeline:
//!
//! - [`grid`] — radial feeder model and a backward/forward-sweep branch-flow
//!   solver used as the ground-truth voltage engine.
//! - [`datagen`] — seeded scenario sampling that pairs injection vectors with
//!   true voltage deviations.
//! - [`icnn`] — the input-convex network itself: gated non-negative hidden
//!   weights, sign-unconstrained passthrough layers, the input-duplication
//!   construction, and convexity checks.
//! - [`train`] — hand-derived reverse-mode gradients for this fixed
//!   architecture, the three convexification strategies (post-check clamping,
//!   hard clamp gating, smooth weight gating), and evaluation metrics.
//! - [`regulate`] — projected gradient descent over box-constrained reactive
//!   injections, globally optimal because the trained surrogate is convex.
//!
//! Everything is per-unit and deterministic: every random draw goes through
//! a named ChaCha8 stream (see [`rng`]), so datasets, training runs, and
//! experiment tables replay bit-for-bit from their seeds.

pub mod datagen;
pub mod grid;
pub mod icnn;
pub mod matrix;
pub mod regulate;
pub mod rng;
pub mod train;
pub mod util;

pub use grid::{Bus, Line, PowerFlowSolution, RadialNetwork};
pub use icnn::{Activation, GateMode, IcnnModel};
pub use train::{TrainConfig, TrainReport, TrainStrategy};

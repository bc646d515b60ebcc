//! Proper motions as spinors `S = exp(B)` acting by `S A S^-1`.

mod spinor;
mod trajectory;

pub use spinor::{Spinor, SpinorKind};
pub use trajectory::{sample_trajectory, Trajectory, TrajectorySample};

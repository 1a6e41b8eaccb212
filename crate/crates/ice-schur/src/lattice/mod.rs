//! The free-fermionic six-vertex engine: spin grammar, weight presets,
//! boundary construction, state enumeration and symbolic partition
//! functions.
//!
//! Columns are numbered `1..=n_cols` from the right (column 1 is the
//! rightmost physical position), matching the shift parameter attached to
//! each column. Rows are numbered `1..=n_rows` from the top.

mod state;
mod system;
mod vertex;
mod weights;
mod ybe;

pub use state::{
    enumerate_states, enumerate_states_generic, partition_function, render_state, LatticeState,
    StateProfile,
};
pub use system::LatticeSystem;
pub use vertex::{classify_vertex, Spin, VertexClass};
pub use weights::{TParam, VertexWeights, WeightPreset, WeightTable};
pub use ybe::{
    attach_row_swap, calibrate_column_wiring, calibrate_row_wiring, column_ybe_cases,
    frozen_column_wiring, frozen_row_wiring, row_ybe_cases, CrossingRead, Wiring, YbeCase,
};

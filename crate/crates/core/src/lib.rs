//! Combinatorial Reeb graph smoothing and truncation, extended persistence
//! diagrams of Reeb graphs, diagram transport under truncated smoothing, and
//! realization of admissible piecewise-linear vineyards by Reeb graph
//! sequences.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`] and [`band`]: the Reeb graph data model, validation, vertex
//!   classification and interval-preimage components.
//! * [`persistence`]: extended persistence diagrams via pairing sweeps, plus a
//!   matrix-reduction oracle.
//! * [`smoothing`]: ε-smoothing, τ-truncation and their composition.
//! * [`transport`]: the diagram-side map, type-preserving bottleneck distance
//!   and shift matchings.
//! * [`vineyard`]: parameter recovery, admissibility and realization.
//! * [`io`] and [`plot`]: text file formats and SVG output.
//!
//! All value comparisons use an absolute tolerance, [`DEFAULT_TOL`] unless the
//! caller passes another one.

pub mod band;
pub mod error;
pub mod graph;
pub mod io;
pub mod par;
pub mod persistence;
pub mod plot;
pub mod random;
pub mod smoothing;
pub mod transport;
mod matching;
mod union_find;
pub mod vineyard;

pub use band::{band_components, band_inclusion, BandElement, BandPartition};
pub use error::{Error, Result};
pub use graph::{
    betti, classify, genericity, suppress_regular, validate, Genericity, ReebGraph,
    ValidationReport, VertexClass, Violation,
};
pub use par::Exec;
pub use persistence::{
    diagram_equal, ext1_partner, ext1_partners, extended_diagram, extended_diagram_oracle,
    ExtendedDiagram, PairKind, PersistencePair,
};
pub use smoothing::{
    genericity_guard, predict_critical_values, reach_table, smooth, truncate, truncated_smooth,
    ReachTable, TransportParams,
};
pub use transport::{
    bottleneck, shift_bound, shift_diagram, transport, transport_point, Assignment,
    BottleneckResult, Matching, ShiftVector,
};
pub use vineyard::{
    interpolate, is_admissible, realize, recover_params, sample_path, PathSample, Realization,
    RealizeOptions, Vineyard,
};

/// Default absolute tolerance for comparing function values.
pub const DEFAULT_TOL: f64 = 1e-9;

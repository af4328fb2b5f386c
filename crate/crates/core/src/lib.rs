//! Exact combinatorics of diagrammatic Cherednik algebras: loadings,
//! θ-dominance, semistandard tableaux and their degrees, θ-diagonal cuts and
//! graded dimension bookkeeping.
//!
//! All positions are exact: rationals plus an integer coefficient of an
//! infinitesimal `ε`. Nothing here goes through floating point except
//! rendering.

pub mod combinatorics;
pub mod cut;
pub mod error;
pub mod exactpos;
pub mod graded;
pub mod loading;
pub mod problem;
pub mod render;
pub mod tableaux;

pub use combinatorics::{
    count_multipartitions, enumerate_multipartitions, partitions, Characteristic, Multipartition, Node, Params,
    ParamsViolation, Residue,
};
pub use cut::{
    admits_cut, diagonal_sets, lambda_set, lambda_set_in, red_lines_in_band, split, split_pair, split_tableau,
    subquotient_graded_dim, verify_index_bijection, verify_tableau_bijection, BijectionReport, CutDecomposition,
    CutMode, CutSet, CutSpec, IndexBijectionReport, Region, SplitPair, SplitPieces,
};
pub use error::{Error, Result};
pub use exactpos::{parse_rational, Position};
pub use graded::{factor_decomposition, kunneth_combine, poly_mul, ExtTable, GradedPoly};
pub use loading::{
    charged_loading, node_position, r_dominates, residue_sequence, theta_dominates, ChargedLoading, DominancePoset,
    LoadingEntry,
};
pub use problem::{load_problem, Problem};
pub use render::{render_russian, render_theta_diagram, Class, Figure, Primitive};
pub use tableaux::{
    build_diagram, count_crossings, enumerate_sstd, sstd_generating_poly, tableau_degree, Crossing, CrossingReport,
    Filling, RedStrand, Strand, StrandDiagram, Tableau,
};

pub use num_rational::BigRational;

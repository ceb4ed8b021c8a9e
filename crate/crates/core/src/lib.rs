//! Multiple chessboard complexes and the tools to study them: generators,
//! exact integer homology, the cyclic reversed-lexicographic shelling order,
//! connectivity-bound formulas, and a colored Tverberg partition search.

pub mod board;
pub mod bounds;
pub mod complex;
pub mod error;
pub mod exact;
pub mod homology;
pub mod io;
pub mod lp;
pub mod shelling;
pub mod snf;
pub mod tverberg;

pub use board::{
    bier_sphere, general_chessboard, multi_chessboard, multipartite, two_one_j, uniform_chessboard, BoardSpec,
    GeneralBoardSpec, TwoOneJSpec,
};
pub use bounds::{
    bound_report, bound_scan, mu_rational, mu_two_one_j, mu_unit_columns, render_tsv, BoundReport, ScanGrid,
};
pub use complex::{FVector, Simplex, SimplicialComplex, Square, Vertex};
pub use error::{Error, Result};
pub use homology::{
    boundary_matrices, homological_connectivity, homology, homology_with, top_betti, ConnectivityReport, HomologyGroup,
    HomologyOptions, HomologySummary,
};
pub use shelling::{
    compare_facets, lexicographic_order, priority_sequence, shelling_order, verify_shelling, wedge_summary, FacetOrder,
    FacetTuple, Lacuna, PrioritySequence, Relabel, ShellingCertificate, Violation,
};
pub use snf::{smith_normal_form, SmithForm, SparseIntMatrix};
pub use tverberg::{
    hulls_intersect, random_instance, search_partition, verify_theorem, PartitionCertificate, SearchOptions,
    SearchOutcome, SearchStatus, TheoremStats, TverbergInstance, Witness,
};

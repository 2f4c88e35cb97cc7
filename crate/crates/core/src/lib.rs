//! Torus-fixed points of the Hilbert scheme of points in the plane: the
//! spine of the T-graph, universal families over Białynicki-Birula cells,
//! symbolic Macaulay matrices and their minors, and per-degree matroids of
//! specialized ideals.

pub mod arrows;
pub mod det;
pub mod error;
pub mod field;
pub mod macaulay;
pub mod matroid;
pub mod poly;
pub mod poset;
pub mod specialize;
pub mod staircase;
pub mod universal;

pub use arrows::{direct_path, negative_arrows, paths_from, positive_arrows, Arrow, CellArrows, Path};
pub use error::{Error, Result};
pub use field::{Field, PrimeField, Rationals, DEFAULT_PRIME};
pub use macaulay::{
    bar_quotient, direct_path_certificate, macaulay_matrix, verify_minors_nonzero, verify_minors_sweep, BarQuotient,
    MacaulayMatrix, MinorReport, SweepReport, DEFAULT_MAX_MINORS,
};
pub use matroid::{matroid_of_degree, tropical_fingerprint, Matroid, MatroidDump};
pub use poly::{CMonomial, CPolynomial, CVar};
pub use poset::{
    dominance_leq, lex_extremes, poset_hasse, spine_graph, spine_graph_with_bound, DominancePoset, SpineEdge,
    SpineGraph, Witness,
};
pub use specialize::{
    edge_probe, initial_ideal, parse_point, specialize_family, specialize_ideal, specialized_hilbert_function,
    EdgeWitness, LexOrder, Point, SpecializedIdeal,
};
pub use staircase::{enumerate_ideals, ideals_with_hf, Grading, HilbertFunction, Monomial, MonomialIdeal};
pub use universal::{universal_generators, universal_generators_pathsum, FamilyPolynomial, PathSums, UniversalFamily};

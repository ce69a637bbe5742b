//! Enumeration and combinatorial realization of the polyhedra whose
//! vertices all carry the same cyclic arrangement of regular faces.
//!
//! The crate proceeds in three layers:
//!
//! * [`figure`] and [`counting`]: vertex figures and the exact
//!   vertex/edge/face relations they imply.
//! * [`enumeration`]: the case analysis that yields five Platonic solids,
//!   thirteen Archimedean solids, prisms and antiprisms, together with a
//!   brute-force oracle that checks nothing was missed.
//! * [`realization`]: every classified figure built as a rotation system
//!   on the sphere and checked against [`catalog`].

pub mod catalog;
pub mod counting;
pub mod enumeration;
pub mod figure;
pub mod realization;
pub mod solid;

pub use catalog::{
    format_symbol, lookup, parse_family_symbol, parse_symbol, reference_catalog, CatalogEntry, CatalogRecord,
    SymbolError,
};
pub use counting::{
    balance_check, counts, edge_count, enumerate_regular, euler_check, face_count, regular_vertex_count,
    vertex_count, CountData, Infeasible, Quantity, Rational,
};
pub use enumeration::{full_catalog, Classification, Pattern};
pub use figure::{canonical_figure, FigureError, VertexFigure};
pub use solid::{Class, ProofCase, Solid};

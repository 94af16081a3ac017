//! Constructive generation and verification of cubic graphs that admit a
//! hexagon double cover: a family of 6-cycles such that every edge of the
//! graph lies on exactly two of them.
//!
//! The library is organized bottom-up:
//!
//! - [`graph`] — small simple graphs of maximum degree 3, girth, distance.
//! - [`graph6`] — the standard graph6 text encoding.
//! - [`canon`] — canonical labeling, certificates, automorphism groups.
//! - [`cycles`] — fixed-length cycle enumeration (hexagon listing).
//! - [`subiso`] — subgraph embedding search (induced and non-induced).
//! - [`cdc`] — double covers by 6-cycles: validation and structure checks.
//! - [`oracle`] — exhaustive search for hexagon double covers.
//! - [`config`] — edge labelings induced on subgraphs by a cover, the
//!   validity rules they satisfy, and seed configuration enumeration.
//! - [`equiv`] — equivalence of configurations across graphs and
//!   self-similarity of expansions.
//! - [`expand`] — the guided expansion search engine.
//! - [`seedlab`] — derivation of minimal expansions and base graphs from
//!   seeds; catalog construction.
//! - [`ham`] — Hamiltonian cycles, boundary trace patterns, equivalent
//!   path systems, and splicing.
//! - [`generator`] — the substitution-based generator for the full family.
//! - [`enumerate`] — independent exhaustive enumeration of cubic graphs.
//! - [`circulant`] / [`mcsd`] — circulant graphs, Möbius–Kantor and torus
//!   families, minimal cyclic spanning-distance orderings.
//! - [`catalog_io`] — text serialization for catalogs and covers.

pub mod canon;
pub mod catalog_io;
pub mod cdc;
pub mod circulant;
pub mod config;
pub mod cycles;
pub mod enumerate;
pub mod equiv;
pub mod expand;
pub mod generator;
pub mod graph;
pub mod graph6;
pub mod ham;
pub mod mcsd;
pub mod oracle;
pub mod seedlab;
pub mod subiso;

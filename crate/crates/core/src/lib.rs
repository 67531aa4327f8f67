//! Classify generating sequences of finite groups by the isomorphism type of
//! their edge-labeled Cayley graphs, up to relabeling of the edges.
//!
//! The crate provides concrete group models ([`groups`]), finitely presented
//! groups with coset enumeration ([`presentation`]), Cayley graphs
//! ([`cayley`]), labeled graph isomorphism ([`iso`]), the classifier
//! ([`classify`]) and closed-form results for dicyclic groups ([`theory`]).
//!
//! ```
//! use cayley_equiv::{classify, ClassifyOptions, FiniteGroup};
//!
//! let dc12 = FiniteGroup::dicyclic(3).unwrap();
//! let report = classify(&dc12, 2, &ClassifyOptions::default()).unwrap();
//! assert_eq!(report.class_count(), 4);
//! ```
//!
//! Runnable walkthroughs live in `examples/`:
//! `dicyclic_theorem`, `cayley_figures`, `presentations`,
//! `classify_symmetric`, `undirected_equivalence` and `iso_witness`.

pub mod cayley;
pub mod classify;
pub mod cli;
pub mod error;
pub mod groups;
pub mod iso;
pub mod presentation;
pub mod theory;

pub use cayley::{CayleyGraph, DotOptions, UndirectedLabeledGraph};
pub use classify::{classify, ClassificationReport, ClassifyOptions, Mode};
pub use error::{Error, Result};
pub use groups::{ElementId, FiniteGroup, GeneratingSequence, OrderMultiset, Permutation};
pub use iso::{brute_force_iso, directed_iso, undirected_iso, IsoWitness};
pub use presentation::{parse_presentation, todd_coxeter, Enumeration, PiVariant, Presentation};

//! hirschlab computes the dual graph of an ideal in a polynomial ring —
//! vertices are minimal primes, edges join primes whose sum has height one
//! more than the ideal — measures its diameter, decides the Hirsch
//! property diam(I) <= height(I), and evaluates weighted-connectivity
//! diameter bounds.
//!
//! The crate is organized as:
//! - [`algebra`]: exact coefficients, monomials, term orders, polynomials
//! - [`groebner`]: Buchberger, normal forms, initial ideals, intersections
//! - [`monomial_ideal`]: minimal primes as minimal transversals, colons
//! - [`hilbert`]: Hilbert numerators and multiplicities
//! - [`graph`]: weighted graphs, connectivity, the diameter bounds
//! - [`dual_graph`]: report assembly, theorem checks, certificates
//! - [`input`] / [`report`]: the text input format and JSON reports

pub mod algebra;
pub mod commands;
pub mod dual_graph;
pub mod error;
pub mod graph;
pub mod groebner;
pub mod hilbert;
pub mod input;
pub mod monomial_ideal;
pub mod parallel;
pub mod report;

pub use algebra::{BaseOrder, Coeff, CoefficientField, Monomial, PolyRing, Polynomial, TermOrder};
pub use dual_graph::{
    certify_squarefree_ci, ci_regularity, dual_graph_from_primes, dual_graph_monomial,
    gorenstein_hvec_bound, multiplicity_weights, theorem_deg_from_graph, theorem_deg_report,
    verify_comp, AnalyzerConfig, CiCertificate, CompReport, DualGraphReport, HirschVerdict,
    PrimeList, TheoremDegReport, WeightChoice,
};
pub use error::{Error, ParseError, Result};
pub use graph::{
    layered_extremal_graph, menger_bound, prefix_profile, refined_bound, rw_bound, star_example,
    ConnectivityProfile, ExtNat, GraphDocument, PrefixProfile, RefinedBound, WeightedGraph,
};
pub use groebner::{
    buchberger, height_via_initial, ideal_intersection, initial_ideal, intersect_all, normal_form,
    s_polynomial, same_ideal, GroebnerBasis, IdealPresentation,
};
pub use hilbert::{hilbert, HilbertData, IntPoly};
pub use input::{parse_document, parse_polynomial, InputDocument};
pub use monomial_ideal::{facets_to_dual_graph, MonomialIdeal, MonomialPrime};

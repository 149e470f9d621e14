//! Exact metric invariants of ℤⁿ-periodic graphs.
//!
//! A ℤⁿ-periodic length space is modelled as a finite weighted graph whose
//! edges carry ℤⁿ voltages; the derived cover is the periodic space and the
//! deck group acts by shifting sheets. Everything downstream is computed in
//! exact rational arithmetic on that model:
//!
//! * shortest paths on the (infinite) cover, orbit balls, the quotient
//!   diameter ([`cover`]),
//! * the stable-norm unit ball as an exact rational polytope, its gauge,
//!   volume and lattice quantities ([`ball`], [`lattice`], [`stable`]),
//! * systole, stable systole, asymptotic volume, the measured deviation of
//!   the distance from the stable norm, and the Margulis-type volume/systole
//!   inequalities ([`invariants`]),
//! * mass in homology, optimal-cycle component counts and annuli growth
//!   ([`mass`]),
//! * every explicit constant of the underlying estimates ([`constants`]),
//! * an interval-selection verifier/searcher for piecewise-linear paths
//!   ([`bp`]).
//!
//! Irrational intermediates (√n, fractional powers) live in outward-rounded
//! rational intervals ([`interval`]); comparisons are either decided soundly
//! or reported as undecided, never silently passed.

pub mod ball;
pub mod bp;
pub mod constants;
pub mod cover;
pub mod cycles;
pub mod gallery;
pub mod interval;
pub mod invariants;
pub mod lattice;
pub mod lp;
pub mod mass;
pub mod metric;
pub mod model;
pub mod num;
pub mod report;
pub mod stable;

pub use interval::{RationalInterval, Verdict};
pub use model::{LatticeVector, QuotientGraph};

//! Exact equivariant Ehrhart theory for lattice polytopes under finite
//! linear group actions.
//!
//! Everything in this crate is computed in exact arithmetic: arbitrary
//! precision rationals, cyclotomic numbers for character values, and
//! rational generating functions with structured denominators. The main
//! pipeline binds a finite group to a lattice polytope, computes the
//! Ehrhart series of every fixed subpolytope, and assembles the
//! equivariant Ehrhart series together with its H*-numerator,
//! polynomiality and effectiveness verdicts. Specialized exact pipelines
//! cover graphic zonotopes, invariant half-open triangulations,
//! hypersimplices under cyclic actions, prime permutahedra, and
//! invariant-hypersurface certificates.
//!
//! The crate is `no_std` (with `alloc`); a companion crate provides the
//! command line interface and file formats.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod action;
pub mod certificates;
pub mod cyclotomic;
pub mod equivariant;
pub mod eulerian;
pub mod families;
pub mod group;
pub mod halfopen;
pub mod hypersimplex;
pub mod linalg;
pub mod lp;
pub mod poly;
pub mod polytope;
pub mod quasi;
pub mod rational;
pub mod ring;
pub mod series;
pub mod zonotope;

pub use cyclotomic::Cyclotomic;
pub use poly::Polynomial;
pub use quasi::Quasipolynomial;
pub use rational::Rational;
pub use series::RationalSeries;

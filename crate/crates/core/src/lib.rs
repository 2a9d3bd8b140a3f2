//! Exact combinatorics of parahoric subgroups attached to a semisimple,
//! simply connected group over a curve.
//!
//! The crate is organised bottom-up:
//!
//! * [`rootsys`]: Cartan matrices, root enumeration, coroots and marks for
//!   the simple types A–G and finite products of them.
//! * [`apartment`]: rational points of the apartment, the Weyl alcove, facets
//!   and reduction modulo the affine Weyl group.
//! * [`parahoric`]: filtration exponents of parahoric subgroups and their
//!   classification (maximal, hyperspecial, standard, containment).
//! * [`localtype`]: the dictionary between local representations `(d, Δ)` of
//!   a cyclic isotropy group and rational weights in the alcove.
//! * [`dimension`]: rank counts `e(θ)`, flag-variety dimensions and the
//!   dimension formulas for representation and moduli spaces.
//! * [`parabolic`]: parabolic degree arithmetic for line bundles.
//!
//! Everything here is exact; there is no floating point anywhere in the
//! crate. Rational numbers are [`Q`], a `Ratio<i128>`.

pub mod apartment;
pub mod dimension;
mod error;
mod linalg;
pub mod localtype;
pub mod parabolic;
pub mod parahoric;
pub mod rational;
pub mod rootsys;
pub mod wire;

pub use apartment::{AffineWeylElement, AlcoveVerdict, ApartmentPoint, Facet, Reduction, Wall};
pub use dimension::{DimensionReport, EVertex, ModuliSpec};
pub use error::{Error, Result};
pub use localtype::LocalType;
pub use parabolic::ParabolicLine;
pub use parahoric::{Exponents, Flags, ParahoricDescriptor};
pub use rational::Q;
pub use rootsys::{Root, RootId, RootSystem, SimpleType};

//! Exact commutative algebra for checking images, preimages, fibers and
//! irreducible components of polynomial maps between affine varieties.
//!
//! Everything is generic over [`exactnum::Scalar`], implemented for the
//! rationals and for quadratic extensions `Q(sqrt d)`. Floating point types
//! are deliberately not scalars.

pub mod decompose;
pub mod error;
pub mod exactnum;
pub mod geometry;
pub mod groebner;
pub mod ideals;
pub mod paperlab;
pub mod polyring;

pub use error::{Error, Result};

/// Rational numbers.
pub type Q = exactnum::Rational;
/// Elements of `Q(sqrt d)`.
pub type Qd = exactnum::QuadExt;
pub type QPoly = polyring::Polynomial<Q>;
pub type QdPoly = polyring::Polynomial<Qd>;
pub type QIdeal = ideals::Ideal<Q>;
pub type QdIdeal = ideals::Ideal<Qd>;
pub type QVariety = geometry::AffineVariety<Q>;
pub type QdVariety = geometry::AffineVariety<Qd>;
pub type QMap = geometry::PolyMap<Q>;
pub type QdMap = geometry::PolyMap<Qd>;

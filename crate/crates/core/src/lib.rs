//! Exact computations around elliptic K3 surfaces: binary forms and their
//! factorisation data, Weierstrass fibrations and Kodaira fibres, even
//! lattices, Hermite's invariants of binary quartics, and the dual
//! constructions that relate families of K3 surfaces.
//!
//! The polynomial kernel is generic over an exact [`field::Field`]; the
//! aliases below fix the scalar to arbitrary-precision rationals, which is
//! what every higher-level module uses.

pub mod duality;
pub mod elliptic;
pub mod exactpoly;
pub mod field;
pub mod hermite_aj;
pub mod lattice;
pub mod sample;

pub type Rational = num_rational::BigRational;
pub type UniPoly = exactpoly::Poly<Rational>;
pub type HomPoly = exactpoly::HomPoly<Rational>;
pub type BiHomPoly = exactpoly::BiHomPoly<Rational>;
pub type MPoly = exactpoly::MPoly<Rational>;

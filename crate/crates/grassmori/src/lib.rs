//! Exact-arithmetic toolkit for the birational geometry of blow-ups of
//! Grassmannians and prime Fano varieties at finitely many general points.
//!
//! Everything is computed over the rationals — no floating point anywhere:
//!
//! * [`exactlin`] — rank / nullspace / solve / determinant over `BigRational`,
//!   via fraction-free elimination.
//! * [`lattice`] — divisor and curve classes on the blow-up `X_k`, the
//!   intersection pairing and top self-intersection numbers.
//! * [`cones`] — rational polyhedral cones: duality (with respect to an
//!   explicit bilinear form), membership, extremal rays.
//! * [`fano`] — Mori-cone generators and the Fano / weak-Fano classifier for
//!   blow-ups of prime Fano varieties at general points.
//! * [`grassmann`] — Plücker embedding, affine charts, osculating spans,
//!   Schubert loci and their linear divisors, multiplicities at a point.
//! * [`orbits`] — flag-stabilizer Lie subalgebras, orbit dimensions of Borel
//!   actions, complexity and sphericity of `G(r,n)_k`, effective-cone catalog.
//! * [`sbld`] — the stable base locus chamber decomposition of the effective
//!   cone of `G(r,n)_1`, and the five standard cones for `k = 1`.
//! * [`cli`] — the command-line front end (`grassmori` binary).

pub mod cli;
pub mod cones;
pub mod exactlin;
pub mod fano;
pub mod grassmann;
pub mod lattice;
pub mod orbits;
pub mod sbld;

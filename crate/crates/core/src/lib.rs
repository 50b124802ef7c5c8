//! Nilpotent orbits in orthogonal Lie algebras over fields of characteristic 2.
//!
//! The crate is organized bottom-up:
//!
//! - [`gfield`]: exact arithmetic in GF(2^e).
//! - [`quadspace`]: quadratic spaces, their radicals and Witt types, the
//!   orthogonal group (transvections, Dickson invariant) and the Lie
//!   algebra o(V).
//! - [`formmodule`]: Jordan types, index functions, symbols and their
//!   validity conditions, the normalized indecomposable modules over F_q and
//!   synthesis of a module from a symbol.
//! - [`orbitoracle`]: brute-force orbit partition of the nilpotent elements
//!   of o(V)(F_q) under O(V) and SO(V).
//! - [`census`]: partition counts, closed-form orbit counts, Weyl-group
//!   irreducible counts and the Springer cardinality check.

pub mod census;
pub mod formmodule;
pub mod gfield;
pub mod orbitoracle;
pub mod quadspace;

pub use formmodule::{FormModule, ModuleError, Symbol};
pub use gfield::{FieldElem, FieldError, FieldSpec, ModulusTable};
pub use quadspace::{Matrix, QuadSpace, SpaceError, SpaceKind, Vector};

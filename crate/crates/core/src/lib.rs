// SPDX-License-Identifier: Apache-2.0

//! Realizability and explicit construction of triangles on the Eisenstein
//! lattice `Z[w]`.
//!
//! A triangle with integer squared sides `a^2, b^2, c^2` and area
//! `(sqrt(3)/4) n` sits on the lattice exactly when `n` is an integer and one
//! squared side has even exponent at every prime `p = 2 (mod 3)`. The
//! [`embedding`] module builds the vertices from a factorization in `Z[w]`;
//! the [`oracle`] module finds every embedding by exhaustive search.

pub mod arith;
pub mod eisenstein;
pub mod embedding;
pub mod exec;
pub mod factorization;
pub mod oracle;

pub use eisenstein::{EisensteinInt, RingError, UnitValue};
pub use embedding::{
    embed, triangle_properties, validate, verify_embedding, EmbedError, LatticeTriangle,
    RealizabilityReport, TriangleSpec,
};
pub use exec::Execution;
pub use factorization::{EisensteinFactorization, FactorError, PrimeClass};
pub use oracle::SymmetryClass;

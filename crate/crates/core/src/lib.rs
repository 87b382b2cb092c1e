//! Exact arithmetic in the Eisenstein integers `Z[w]` and the field `Q(w)`
//! (`w` a primitive cube root of unity), together with the machinery for
//! deciding arithmetic descent of specializations of the cubic Kummer cover
//! `t^3 = x`:
//!
//! * [`eisenstein`]: ring and field arithmetic, norm, conjugation, Euclidean
//!   division, factorization and cube testing.
//! * [`residue`]: the finite rings `Z[w]/(3^k)` and their dense image sets.
//! * [`descent`]: the descent form `g(x, y) = (x + wy)^2 (x + w^2 y)`, its
//!   inverse and the classification of specialization points.
//! * [`verify`]: exhaustive checks of the two residue-ring statements used to
//!   rule out points on `t^3 = 3(z^3 + 2)`.
//! * [`search`]: height-bounded enumeration of rational points on a cover.
//! * [`cli`]: the command-line front end.

pub mod cli;
pub mod descent;
pub mod eisenstein;
mod error;
pub mod intfactor;
pub mod report;
pub mod residue;
pub mod search;
pub mod verify;

pub use descent::{classify, eval_g, solve_g, DescentClassification, DescentWitness, PointValue};
pub use eisenstein::{EisensteinInt, EisensteinRational, EisensteinUnit, Factorization};
pub use error::{Error, Result};
pub use residue::{ResidueElement, ResidueRing, ResidueSet};
pub use search::{HeightBound, SearchReport};
pub use verify::{Lemma, VerificationReport};

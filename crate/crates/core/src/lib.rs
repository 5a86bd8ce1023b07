//! Finite semigroups and their right congruences.
//!
//! Elements are positional indices into a Cayley table. Transformations act
//! on the right and compose left to right, so `x(fg) = (xf)g`.

pub mod classify;
pub mod congruence;
pub mod error;
pub mod format;
pub mod green;
pub mod library;
pub mod semigroup;
pub mod structure;
pub mod transform;
mod unionfind;
pub mod verify;

pub use classify::{classify, Properties};
pub use congruence::{
    enumerate_right_congruences, find_x_sequence, minimal_generating_pairs, quotient_semigroup,
    rc_diameter, rc_generate, CongruenceLattice, Diameter, GeneratingPairs, Multiplier, PairSet,
    RightCongruence, Step, XSequence, DEFAULT_EXACT_LIMIT,
};
pub use error::{Error, Result};
pub use format::{parse, Format, Parsed};
pub use green::{green_data, maximal_subgroups, schutzenberger, DClassBox, GreenData, SchutzGroup};
pub use semigroup::{FiniteSemigroup, SubsetClosure};
pub use structure::{
    archimedean_decomposition, completeness_check, cr_decomposition, diagonal_cyclic_witness,
    h_congruence_check, rees_construct, rees_coordinates, theta_congruence, Decomposition,
    ReesCoordinates, ReesSemigroup, ReesStructure, SandwichEntry,
};
pub use transform::{from_transformations, Transformation, TransformationSemigroup};
pub use verify::{isomorphic, PairChoice, VerificationReport};

//! Koszul duality: CE, Harrison, Bar and Cobar, with weight truncation,
//! the adjunction correspondences and the comparison squares.

mod adjunction;
mod comparison;
mod constructions;
mod freelie;
mod presentation;
mod truncate;

pub use adjunction::{algebra_map_witness, linear_map_witness, Adjunction, AdjunctionKind, Augmented};
pub use comparison::{
    abelianize, algebra_mismatch, comass_check_augmented, comass_check_commutative,
    enveloping_of_presentation, forget, lie_functor, presentation_mismatch,
};
pub use constructions::{bar, ce, cobar, harrison};
pub use freelie::{expand, is_lyndon, lyndon_words, standard_bracketing, FreeLieBasis, FreeLieElement, LieTree};
pub use presentation::{sort_symmetric, Flavor, Presentation, Quadratic, Word, WordPoly};
pub use truncate::{stable_through, truncate, Truncated, Truncation, MAX_TRUNCATION_DIM};

//! Pointwise Kan extensions over finite data, density and codensity tests,
//! adjunction detection, and the executable law suite. Everything is
//! computed by the comma-limit formula; non-pointwise extensions are out of
//! scope.

mod adjunction;
mod cones;
mod extension;
pub mod laws;
mod nerve;

pub use adjunction::{
    check_adjunction, left_adjoint_via_ran, Adjunction, AdjunctionFailure, LeftAdjointOutcome,
};
pub use cones::{
    colimit_in_category, cofactorizations, enumerate_cocones, enumerate_cones,
    factor_through_initial, factor_through_terminal, factorizations, limit_in_category, Cocone,
    Cone,
};
pub use extension::{
    is_codense, is_dense, left_kan, right_kan, DensityReport, LanResult, LanWitness, RanResult,
    RanWitness,
};
pub use nerve::{lan_yoneda_along, nerve, realize, realize_map, ElementsCategory, Realization};

#[cfg(test)]
mod tests;

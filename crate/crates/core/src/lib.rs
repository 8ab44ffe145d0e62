//! A computation engine for finite category theory: validated finite
//! categories, pointwise Kan extensions, codensity monads with their unit and
//! multiplication, Isbell conjugation on finite presheaves, Eilenberg-Moore
//! categories, and batteries of executable law checks over generated
//! instances.
//!
//! Everything is exact, deterministic, and budgeted: identical inputs and
//! seeds produce identical outputs, and every enumeration is capped by a
//! [`budget::Budget`].

pub mod budget;
pub mod error;
pub mod fincat;
pub mod finset;
pub mod generate;
pub mod isbell;
pub mod kan;
pub mod monad;
pub mod presheaf;
pub mod report;
pub mod specfile;
pub mod sweeps;

pub use budget::Budget;
pub use error::{Error, Result};

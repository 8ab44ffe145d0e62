use super::codensity::{codensity_monad, CodensityOutcome};
use super::{find_monad_isomorphism, Monad};
use crate::budget::Budget;
use crate::error::Result;
use crate::fincat::{find_natural_isomorphism, FullSubcategory, Functor, NatTransformation};
use crate::kan::{is_dense, left_kan};

/// Whether F is recovered as the left Kan extension of its own restriction
/// to the subcategory.
#[derive(Debug)]
pub enum ArityOutcome {
    Holds { witness: NatTransformation },
    Fails { lan_values: Vec<(String, String)> },
    /// The extension does not exist at the listed objects.
    NoExtension { missing: Vec<String> },
}

impl ArityOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, ArityOutcome::Holds { .. })
    }
}

pub fn arity_check(f: &Functor, sub: &FullSubcategory, budget: &Budget) -> Result<ArityOutcome> {
    let i = &sub.inclusion;
    let restricted = Functor::compose(f, i);
    let lan = left_kan(i, &restricted, budget)?;
    let Some(ext) = &lan.extension else {
        let missing = lan
            .witnesses
            .iter()
            .enumerate()
            .filter(|(_, w)| w.is_none())
            .map(|(b, _)| sub.parent.object_name(b).to_string())
            .collect();
        return Ok(ArityOutcome::NoExtension { missing });
    };
    match find_natural_isomorphism(ext, f, budget)? {
        Some(witness) => Ok(ArityOutcome::Holds { witness }),
        None => Ok(ArityOutcome::Fails {
            lan_values: (0..sub.parent.object_count())
                .map(|b| {
                    (
                        sub.parent.object_name(b).to_string(),
                        sub.parent.object_name(ext.obj(b)).to_string(),
                    )
                })
                .collect(),
        }),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub enum ArityTheoremReport {
    /// Density hypothesis fails; nothing to verify.
    NotDense,
    /// The codensity monad is missing somewhere; nothing to verify.
    NoCodensityMonad { missing: Vec<String> },
    /// The codensity endofunctor does not have the subcategory as an arity;
    /// the implication is vacuous at this instance.
    Vacuous,
    /// Arity holds and the monad is isomorphic to the identity monad.
    Verified,
    /// Arity holds but the monad is not the identity. Never expected.
    Contradiction,
}

/// Executable form of "a codensity monad of a dense full subcategory with
/// that subcategory as an arity is the identity".
pub fn verify_arity_theorem(sub: &FullSubcategory, budget: &Budget) -> Result<ArityTheoremReport> {
    if !is_dense(&sub.inclusion, budget)?.holds {
        return Ok(ArityTheoremReport::NotDense);
    }
    let monad = match codensity_monad(sub, budget)? {
        CodensityOutcome::Exists(c) => c.monad,
        CodensityOutcome::Missing { objects } => {
            return Ok(ArityTheoremReport::NoCodensityMonad { missing: objects })
        }
    };
    match arity_check(&monad.endo, sub, budget)? {
        ArityOutcome::Holds { .. } => {
            let id = Monad::identity(&sub.parent);
            if find_monad_isomorphism(&monad, &id, budget)?.is_some() {
                Ok(ArityTheoremReport::Verified)
            } else {
                Ok(ArityTheoremReport::Contradiction)
            }
        }
        ArityOutcome::Fails { .. } | ArityOutcome::NoExtension { .. } => {
            Ok(ArityTheoremReport::Vacuous)
        }
    }
}

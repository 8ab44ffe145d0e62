//! Monads on finite categories: codensity monads of full subcategories with
//! their universal-property unit and multiplication, Eilenberg-Moore
//! categories, monad morphisms and comparison functors, fixed points,
//! idempotency analysis, the arity theorem, and the generically-idempotent
//! search.

mod algebra;
mod analysis;
mod arity;
mod codensity;
mod generic;

pub use algebra::{comparison_from_monad_morphism, em_category, EMAlgebra, EMCategory};
pub use analysis::{
    fixed_points, idempotency_analysis, lift_fixed_to_algebras, limit_dense_witness,
    EqualizerCertificate, IdempotencyReport, ObjectIdempotency,
};
pub use arity::{arity_check, verify_arity_theorem, ArityOutcome, ArityTheoremReport};
pub use codensity::{
    codensity_monad, codensity_monad_of, restriction_comparison, CodensityOutcome,
};
pub use generic::{
    codense_in_algebras, conjecture_probe, gi_search, CodenseReport, ConjectureReport, GiOutcome,
};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::fincat::{natural_isomorphisms, Cat, Functor, NatTransformation};

/// An endofunctor with unit and multiplication, law-checked at construction.
#[derive(Debug, Clone)]
pub struct Monad {
    pub name: String,
    pub carrier: Cat,
    pub endo: Functor,
    /// id => T
    pub unit: NatTransformation,
    /// T T => T
    pub mult: NatTransformation,
}

impl Monad {
    pub fn new(
        name: impl Into<String>,
        endo: Functor,
        unit: NatTransformation,
        mult: NatTransformation,
    ) -> Result<Monad> {
        let carrier = endo.source().clone();
        let m = Monad {
            name: name.into(),
            carrier,
            endo,
            unit,
            mult,
        };
        let report = m.law_report();
        if !report.holds() {
            return Err(Error::Internal(format!(
                "monad {} violates its laws: {:?}",
                m.name, report.failures
            )));
        }
        Ok(m)
    }

    /// Constructor for deliberately unchecked data, used to exercise the law
    /// checker on corrupted tables.
    pub fn new_unchecked(
        name: impl Into<String>,
        endo: Functor,
        unit: NatTransformation,
        mult: NatTransformation,
    ) -> Monad {
        let carrier = endo.source().clone();
        Monad {
            name: name.into(),
            carrier,
            endo,
            unit,
            mult,
        }
    }

    pub fn identity(carrier: &Cat) -> Monad {
        let endo = Functor::identity(carrier);
        Monad {
            name: "id".into(),
            carrier: carrier.clone(),
            endo: endo.clone(),
            unit: NatTransformation::identity(&endo),
            mult: NatTransformation::identity(&endo),
        }
    }

    /// T applied to an object.
    pub fn apply(&self, k: usize) -> usize {
        self.endo.obj(k)
    }

    /// Componentwise law verification; failures list every violating
    /// component rather than stopping at the first.
    pub fn law_report(&self) -> MonadLawReport {
        let k_cat = &self.carrier;
        let t = &self.endo;
        let mut failures = Vec::new();
        for k in 0..k_cat.object_count() {
            let tk = t.obj(k);
            // mult . T(unit) = id_{T k}
            let lhs = k_cat.compose(self.mult.component(k), t.mor(self.unit.component(k)));
            if lhs != k_cat.identity(tk) {
                failures.push(MonadLawFailure {
                    law: "mult . T(unit) = id",
                    object: k_cat.object_name(k).to_string(),
                });
            }
            // mult . unit_{T k} = id_{T k}
            let lhs = k_cat.compose(self.mult.component(k), self.unit.component(tk));
            if lhs != k_cat.identity(tk) {
                failures.push(MonadLawFailure {
                    law: "mult . unit_T = id",
                    object: k_cat.object_name(k).to_string(),
                });
            }
            // mult . T(mult) = mult . mult_{T k}
            let lhs = k_cat.compose(self.mult.component(k), t.mor(self.mult.component(k)));
            let rhs = k_cat.compose(self.mult.component(k), self.mult.component(tk));
            if lhs != rhs {
                failures.push(MonadLawFailure {
                    law: "mult . T(mult) = mult . mult_T",
                    object: k_cat.object_name(k).to_string(),
                });
            }
        }
        MonadLawReport { failures }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct MonadLawFailure {
    pub law: &'static str,
    pub object: String,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct MonadLawReport {
    pub failures: Vec<MonadLawFailure>,
}

impl MonadLawReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn check_monad_laws(m: &Monad) -> MonadLawReport {
    m.law_report()
}

/// A morphism of monads on a shared carrier: a natural transformation
/// compatible with both units and multiplications.
#[derive(Debug, Clone)]
pub struct MonadMorphism {
    pub source: Monad,
    pub target: Monad,
    pub transform: NatTransformation,
}

impl MonadMorphism {
    pub fn new(
        source: Monad,
        target: Monad,
        transform: NatTransformation,
    ) -> Result<MonadMorphism> {
        let m = MonadMorphism {
            source,
            target,
            transform,
        };
        m.check()?;
        Ok(m)
    }

    fn check(&self) -> Result<()> {
        let k_cat = &self.source.carrier;
        for k in 0..k_cat.object_count() {
            if !unit_compatible(&self.source, &self.target, &self.transform, k) {
                return Err(Error::Internal(format!(
                    "monad morphism breaks the unit at {}",
                    k_cat.object_name(k)
                )));
            }
            if !mult_compatible(&self.source, &self.target, &self.transform, k) {
                return Err(Error::Internal(format!(
                    "monad morphism breaks the multiplication at {}",
                    k_cat.object_name(k)
                )));
            }
        }
        Ok(())
    }

    pub fn is_iso(&self) -> bool {
        self.transform.is_iso()
    }

    pub fn component(&self, k: usize) -> usize {
        self.transform.component(k)
    }
}

fn unit_compatible(s: &Monad, t: &Monad, phi: &NatTransformation, k: usize) -> bool {
    let cat = &s.carrier;
    cat.compose(phi.component(k), s.unit.component(k)) == t.unit.component(k)
}

fn mult_compatible(s: &Monad, t: &Monad, phi: &NatTransformation, k: usize) -> bool {
    let cat = &s.carrier;
    // (phi * phi)_k : S S k -> T T k, as T(phi_k) . phi_{S k}
    let hstar = cat.compose(t.endo.mor(phi.component(k)), phi.component(s.apply(k)));
    let lhs = cat.compose(phi.component(k), s.mult.component(k));
    let rhs = cat.compose(t.mult.component(k), hstar);
    lhs == rhs
}

/// All monad isomorphisms S => T: natural isomorphisms of the endofunctors
/// commuting with both structure maps. Canonically ordered. Every
/// endofunctor isomorphism is enumerated because the canonically-first
/// natural isomorphism need not respect the units.
pub fn monad_isomorphisms(
    s: &Monad,
    t: &Monad,
    budget: &Budget,
) -> Result<Vec<NatTransformation>> {
    let isos = natural_isomorphisms(&s.endo, &t.endo, budget)?;
    Ok(isos
        .into_iter()
        .filter(|phi| {
            (0..s.carrier.object_count())
                .all(|k| unit_compatible(s, t, phi, k) && mult_compatible(s, t, phi, k))
        })
        .collect())
}

/// First monad isomorphism in canonical order, if any.
pub fn find_monad_isomorphism(
    s: &Monad,
    t: &Monad,
    budget: &Budget,
) -> Result<Option<NatTransformation>> {
    Ok(monad_isomorphisms(s, t, budget)?.into_iter().next())
}

#[cfg(test)]
mod tests;

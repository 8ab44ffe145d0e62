use super::{EMAlgebra, EMCategory, Monad};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::fincat::{FinCategory, FullSubcategory, Functor, RawCategory};
use crate::kan::{factor_through_terminal, limit_in_category, Cone};

/// Objects whose unit component is invertible, as a full subcategory.
pub fn fixed_points(m: &Monad, budget: &Budget) -> Result<FullSubcategory> {
    let fixed: Vec<usize> = (0..m.carrier.object_count())
        .filter(|&k| m.carrier.is_iso(m.unit.component(k)))
        .collect();
    FullSubcategory::new(&m.carrier, fixed, budget)
}

/// Each fixed point is an algebra with structure map the inverse of its
/// unit component; every arrow between fixed points is a homomorphism.
pub fn lift_fixed_to_algebras(
    m: &Monad,
    fix: &FullSubcategory,
    alg: &EMCategory,
) -> Result<Functor> {
    let k_cat = &m.carrier;
    let on_objects: Vec<usize> = fix
        .objects
        .iter()
        .map(|&k| {
            let xi = k_cat
                .inverse(m.unit.component(k))
                .ok_or_else(|| Error::Internal("fixed point without invertible unit".into()))?;
            alg.algebra_index(k, xi)
                .ok_or_else(|| Error::Internal("inverted unit is not a structure map".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let on_morphisms: Vec<usize> = fix
        .category
        .morphism_indices()
        .map(|fm| {
            let h = fix.inclusion.mor(fm);
            let (src, tgt) = (fix.category.dom(fm), fix.category.cod(fm));
            alg.morphism_index(on_objects[src], on_objects[tgt], h)
                .ok_or_else(|| Error::Internal("fixed arrow is not a homomorphism".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Functor::new(
        "fix_lift",
        fix.category.clone(),
        alg.category.clone(),
        on_objects,
        on_morphisms,
    )
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct ObjectIdempotency {
    pub object: String,
    pub unit_invertible: bool,
    pub mult_invertible: bool,
    pub unit_at_t_invertible: bool,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct IdempotencyReport {
    pub per_object: Vec<ObjectIdempotency>,
    /// mult_k invertible iff unit_{T k} invertible; provable, must hold.
    pub pointwise_equivalence_holds: bool,
    /// Objects where "mult_k invertible iff unit_k invertible" fails. The
    /// stated biconditional is tallied but never fails a run.
    pub literal_biconditional_failures: Vec<String>,
}

/// Per-object invertibility survey of the structure maps. Asserts the
/// provable equivalence (mult_k iso iff unit at T(k) iso) and separately
/// tallies the stronger per-object biconditional against unit_k.
pub fn idempotency_analysis(m: &Monad) -> IdempotencyReport {
    let k_cat = &m.carrier;
    let mut per_object = Vec::new();
    let mut equiv = true;
    let mut literal = Vec::new();
    for k in 0..k_cat.object_count() {
        let o = ObjectIdempotency {
            object: k_cat.object_name(k).to_string(),
            unit_invertible: k_cat.is_iso(m.unit.component(k)),
            mult_invertible: k_cat.is_iso(m.mult.component(k)),
            unit_at_t_invertible: k_cat.is_iso(m.unit.component(m.apply(k))),
        };
        if o.mult_invertible != o.unit_at_t_invertible {
            equiv = false;
        }
        if o.mult_invertible != o.unit_invertible {
            literal.push(o.object.clone());
        }
        per_object.push(o);
    }
    IdempotencyReport {
        per_object,
        pointwise_equivalence_holds: equiv,
        literal_biconditional_failures: literal,
    }
}

#[derive(Debug)]
pub enum EqualizerCertificate {
    /// The equalizer of (unit_k . xi, id_{T k}) exists and the canonical
    /// comparison from the carrier is invertible.
    Produced {
        equalizer_object: usize,
        comparison: usize,
    },
    /// Finite categories need not have equalizers.
    NoEqualizer,
}

/// Present an algebra carrier as the equalizer of unit . structure against
/// the identity on T(k).
pub fn limit_dense_witness(
    m: &Monad,
    alg: &EMAlgebra,
    budget: &Budget,
) -> Result<EqualizerCertificate> {
    let k_cat = &m.carrier;
    let k = alg.object;
    let tk = m.apply(k);
    let parallel = k_cat.compose(m.unit.component(k), alg.structure);

    let shape = parallel_pair_shape(budget)?;
    let d = Functor::new(
        "eq_pair",
        shape,
        k_cat.clone(),
        vec![tk, tk],
        vec![
            k_cat.identity(tk),
            k_cat.identity(tk),
            parallel,
            k_cat.identity(tk),
        ],
    )?;
    let Some(cone) = limit_in_category(&d, budget)? else {
        return Ok(EqualizerCertificate::NoEqualizer);
    };
    // the carrier cones over the pair through its unit
    let from = Cone {
        apex: k,
        legs: vec![m.unit.component(k), m.unit.component(k)],
    };
    let comparison = factor_through_terminal(&d, &cone, &from)?;
    if k_cat.is_iso(comparison) {
        Ok(EqualizerCertificate::Produced {
            equalizer_object: cone.apex,
            comparison,
        })
    } else {
        Err(Error::Internal(
            "equalizer exists but the canonical comparison is not invertible".into(),
        ))
    }
}

pub(crate) fn parallel_pair_shape(budget: &Budget) -> Result<crate::fincat::Cat> {
    FinCategory::validate(
        &RawCategory {
            name: "pair".into(),
            objects: vec!["s".into(), "t".into()],
            morphisms: vec![
                ("ids".into(), "s".into(), "s".into()),
                ("idt".into(), "t".into(), "t".into()),
                ("u".into(), "s".into(), "t".into()),
                ("v".into(), "s".into(), "t".into()),
            ],
            identities: vec![("s".into(), "ids".into()), ("t".into(), "idt".into())],
            composites: vec![
                ("ids".into(), "ids".into(), "ids".into()),
                ("idt".into(), "idt".into(), "idt".into()),
                ("u".into(), "ids".into(), "u".into()),
                ("idt".into(), "u".into(), "u".into()),
                ("v".into(), "ids".into(), "v".into()),
                ("idt".into(), "v".into(), "v".into()),
            ],
        },
        budget,
    )
}

use super::cones::{factor_through_terminal, Cone};
use super::extension::right_kan;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::fincat::{natural_families, Functor, NatTransformation};

/// A verified adjunction L -| R with unit and counit satisfying the triangle
/// identities; the hom bijection is R(g) . eta_c in one direction.
#[derive(Debug, Clone)]
pub struct Adjunction {
    pub left: Functor,
    pub right: Functor,
    pub unit: NatTransformation,
    pub counit: NatTransformation,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub enum AdjunctionFailure {
    /// |hom(L c, d)| != |hom(c, R d)|; names the witnessing pair.
    CardinalityMismatch { c: String, d: String },
    /// No natural unit induces a bijective transpose.
    NoNaturalUnit,
}

/// Search for an adjunction L -| R: candidate units id => R L are enumerated
/// naturally, and the first whose transpose g |-> R(g) . eta_c is bijective
/// on every hom pair wins. Triangle identities are then verified.
pub fn check_adjunction(
    l: &Functor,
    r: &Functor,
    budget: &Budget,
) -> Result<std::result::Result<Adjunction, AdjunctionFailure>> {
    let c_cat = l.source();
    let d_cat = l.target();
    for c in 0..c_cat.object_count() {
        for d in 0..d_cat.object_count() {
            if d_cat.hom(l.obj(c), d).len() != c_cat.hom(c, r.obj(d)).len() {
                return Ok(Err(AdjunctionFailure::CardinalityMismatch {
                    c: c_cat.object_name(c).to_string(),
                    d: d_cat.object_name(d).to_string(),
                }));
            }
        }
    }

    let rl = Functor::compose(r, l);
    let id_c = Functor::identity(c_cat);
    let units = natural_families(&id_c, &rl, false, None, budget)?;
    'units: for unit in units {
        // transpose must be bijective on every hom pair
        for c in 0..c_cat.object_count() {
            for d in 0..d_cat.object_count() {
                let mut images: Vec<usize> = d_cat
                    .hom(l.obj(c), d)
                    .iter()
                    .map(|&g| c_cat.compose(r.mor(g), unit.component(c)))
                    .collect();
                images.sort_unstable();
                images.dedup();
                if images.len() != d_cat.hom(l.obj(c), d).len() {
                    continue 'units;
                }
            }
        }
        // counit at d: the unique g: L R d -> d with R(g) . eta_{R d} = id
        let mut counit_comps = Vec::with_capacity(d_cat.object_count());
        for d in 0..d_cat.object_count() {
            let rd = r.obj(d);
            let g = d_cat
                .hom(l.obj(rd), d)
                .iter()
                .copied()
                .find(|&g| c_cat.compose(r.mor(g), unit.component(rd)) == c_cat.identity(rd))
                .ok_or_else(|| Error::Internal("bijective transpose missing the identity".into()))?;
            counit_comps.push(g);
        }
        let counit = NatTransformation::new(
            Functor::compose(l, r),
            Functor::identity(d_cat),
            counit_comps,
        )?;
        // triangle identities
        let tri_l = (0..c_cat.object_count()).all(|c| {
            d_cat.compose(counit.component(l.obj(c)), l.mor(unit.component(c)))
                == d_cat.identity(l.obj(c))
        });
        let tri_r = (0..d_cat.object_count()).all(|d| {
            c_cat.compose(r.mor(counit.component(d)), unit.component(r.obj(d)))
                == c_cat.identity(r.obj(d))
        });
        if tri_l && tri_r {
            return Ok(Ok(Adjunction {
                left: l.clone(),
                right: r.clone(),
                unit,
                counit,
            }));
        }
    }
    Ok(Err(AdjunctionFailure::NoNaturalUnit))
}

#[derive(Debug)]
pub enum LeftAdjointOutcome {
    Found {
        left: Functor,
        adjunction: Adjunction,
    },
    NotRightAdjoint {
        reason: String,
    },
}

/// Decide whether R: A -> B is a right adjoint by computing Ran_R(1_A) and
/// checking that R preserves it: the canonical comparison R . Ran_R(1) =>
/// Ran_R(R) must be invertible. On success the extension is the left adjoint
/// and the result is cross-validated through the direct adjunction search.
pub fn left_adjoint_via_ran(r: &Functor, budget: &Budget) -> Result<LeftAdjointOutcome> {
    let a_cat = r.source();
    let ran1 = right_kan(r, &Functor::identity(a_cat), budget)?;
    let Some(l) = &ran1.extension else {
        return Ok(LeftAdjointOutcome::NotRightAdjoint {
            reason: format!(
                "Ran_{}(1) does not exist at {:?}",
                r.name,
                ran1.missing_objects(r)
            ),
        });
    };
    let ran_r = right_kan(r, r, budget)?;
    let Some(_) = &ran_r.extension else {
        return Ok(LeftAdjointOutcome::NotRightAdjoint {
            reason: format!("Ran_{}({}) does not exist", r.name, r.name),
        });
    };

    // canonical comparison at b: legs R(pi^b_(a,f)) factored through the
    // terminal cone of Ran_R(R)(b)
    let b_cat = r.target();
    for b in 0..b_cat.object_count() {
        let w1 = ran1.witnesses[b].as_ref().unwrap();
        let wr = ran_r.witnesses[b].as_ref().unwrap();
        let legs: Vec<usize> = wr
            .comma
            .objects
            .iter()
            .map(|&(a, arrow)| {
                let idx = w1.comma.object_index(a, arrow).unwrap();
                r.mor(w1.cone.legs[idx])
            })
            .collect();
        let from = Cone {
            apex: r.obj(w1.cone.apex),
            legs,
        };
        let diagram = Functor::compose(r, &wr.comma.projection);
        let kappa = factor_through_terminal(&diagram, &wr.cone, &from)?;
        if !b_cat.is_iso(kappa) {
            return Ok(LeftAdjointOutcome::NotRightAdjoint {
                reason: format!(
                    "R does not preserve Ran_R(1): comparison at {} is {} which is not invertible",
                    b_cat.object_name(b),
                    b_cat.mor_name(kappa)
                ),
            });
        }
    }

    match check_adjunction(l, r, budget)? {
        Ok(adjunction) => Ok(LeftAdjointOutcome::Found {
            left: l.clone(),
            adjunction,
        }),
        Err(f) => Err(Error::Internal(format!(
            "preservation held but the adjunction search failed: {f:?}"
        ))),
    }
}

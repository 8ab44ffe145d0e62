use super::{Monad, MonadMorphism};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::fincat::{FullSubcategory, Functor, NatTransformation};
use crate::kan::{factor_through_terminal, right_kan, Cone, RanResult, RanWitness};

/// The codensity monad of a functor, when the right Kan extension of the
/// functor along itself exists at every object.
#[derive(Debug)]
pub enum CodensityOutcome {
    Exists(Box<CodensityMonad>),
    /// Objects (of the codomain) where the pointwise limit is missing.
    Missing { objects: Vec<String> },
}

impl CodensityOutcome {
    pub fn into_monad(self) -> Result<Monad> {
        match self {
            CodensityOutcome::Exists(c) => Ok(c.monad),
            CodensityOutcome::Missing { objects } => Err(Error::missing_at(
                "codensity monad".to_string(),
                objects.join(","),
            )),
        }
    }

    pub fn as_exists(&self) -> Option<&CodensityMonad> {
        match self {
            CodensityOutcome::Exists(c) => Some(c),
            CodensityOutcome::Missing { .. } => None,
        }
    }
}

#[derive(Debug)]
pub struct CodensityMonad {
    pub monad: Monad,
    pub ran: RanResult,
}

/// Codensity monad of a full subcategory inclusion.
pub fn codensity_monad(sub: &FullSubcategory, budget: &Budget) -> Result<CodensityOutcome> {
    codensity_monad_of(&sub.inclusion, budget)
}

/// Codensity monad of an arbitrary functor f: A -> K. The endofunctor is
/// Ran_f f; the unit factors the tautological cone (the arrows themselves)
/// and the multiplication factors the cone built from two layers of
/// projections. Laws are verified before returning; a law failure here is a
/// construction bug and surfaces as a hard error.
pub fn codensity_monad_of(f: &Functor, budget: &Budget) -> Result<CodensityOutcome> {
    let k_cat = f.target();
    let ran = right_kan(f, f, budget)?;
    if !ran.total() {
        return Ok(CodensityOutcome::Missing {
            objects: ran.missing_objects(f),
        });
    }
    let endo = ran.extension.clone().unwrap();
    let wit: Vec<&RanWitness> = ran.witnesses.iter().map(|w| w.as_ref().unwrap()).collect();

    // unit at k: the cone whose leg at (a, arrow: k -> f a) is the arrow
    let mut unit_comps = Vec::with_capacity(k_cat.object_count());
    for k in 0..k_cat.object_count() {
        let legs: Vec<usize> = wit[k].comma.objects.iter().map(|&(_, arrow)| arrow).collect();
        let from = Cone { apex: k, legs };
        let diagram = Functor::compose(f, &wit[k].comma.projection);
        unit_comps.push(factor_through_terminal(&diagram, &wit[k].cone, &from)?);
    }
    let unit = NatTransformation::new(
        Functor::identity(k_cat),
        endo.clone(),
        unit_comps,
    )?;

    // mult at k: the cone from T(T k) whose leg at (a, arrow) is the T(k)
    // projection taken at (a, pi^k_(a, arrow))
    let mut mult_comps = Vec::with_capacity(k_cat.object_count());
    for k in 0..k_cat.object_count() {
        let tk = endo.obj(k);
        let legs: Vec<usize> = wit[k]
            .comma
            .objects
            .iter()
            .enumerate()
            .map(|(pos, &(a, _))| {
                let leg_k = wit[k].cone.legs[pos];
                let idx = wit[tk].comma.object_index(a, leg_k).ok_or_else(|| {
                    Error::Internal("projection leg missing from the T(k) comma".into())
                })?;
                Ok(wit[tk].cone.legs[idx])
            })
            .collect::<Result<Vec<usize>>>()?;
        let from = Cone {
            apex: endo.obj(tk),
            legs,
        };
        let diagram = Functor::compose(f, &wit[k].comma.projection);
        mult_comps.push(factor_through_terminal(&diagram, &wit[k].cone, &from)?);
    }
    let mult = NatTransformation::new(
        Functor::compose(&endo, &endo),
        endo.clone(),
        mult_comps,
    )?;

    let monad = Monad::new(format!("T_{}", f.name), endo, unit, mult)?;
    Ok(CodensityOutcome::Exists(Box::new(CodensityMonad {
        monad,
        ran,
    })))
}

/// The canonical monad morphism T_i => T_{i.u} induced by restricting a
/// subcategory along u: A -> B (with i: B -> K). Built from the universal
/// map i => Ran_u(i.u), the functoriality of Ran_i, and the canonical
/// isomorphism Ran_i(Ran_u(i.u)) = Ran_{i.u}(i.u).
pub fn restriction_comparison(
    u: &Functor,
    i: &Functor,
    budget: &Budget,
) -> Result<MonadMorphism> {
    let k_cat = i.target();
    let iu = Functor::compose(i, u);
    let t_i = match codensity_monad_of(i, budget)? {
        CodensityOutcome::Exists(c) => c,
        CodensityOutcome::Missing { objects } => {
            return Err(Error::missing_at("T_i", objects.join(",")))
        }
    };
    let t_iu = match codensity_monad_of(&iu, budget)? {
        CodensityOutcome::Exists(c) => c,
        CodensityOutcome::Missing { objects } => {
            return Err(Error::missing_at("T_{i.u}", objects.join(",")))
        }
    };

    // inner extension R1 = Ran_u(i.u): B -> K with its cones
    let r1 = right_kan(u, &iu, budget)?;
    let Some(r1_ext) = &r1.extension else {
        return Err(Error::missing("Ran_u(i.u) needed for the canonical map"));
    };
    let r1_wit: Vec<&RanWitness> = r1.witnesses.iter().map(|w| w.as_ref().unwrap()).collect();

    // kappa: i => R1, from the universal property: the cone from i(b) over
    // the comma b / u has leg i(g) at (a, g: b -> u a)
    let b_cat = i.source();
    let mut kappa_comps = Vec::with_capacity(b_cat.object_count());
    for b in 0..b_cat.object_count() {
        let legs: Vec<usize> = r1_wit[b]
            .comma
            .objects
            .iter()
            .map(|&(_, g)| i.mor(g))
            .collect();
        let from = Cone {
            apex: i.obj(b),
            legs,
        };
        let diagram = Functor::compose(&iu, &r1_wit[b].comma.projection);
        kappa_comps.push(factor_through_terminal(&diagram, &r1_wit[b].cone, &from)?);
    }
    let kappa = NatTransformation::new(i.clone(), r1_ext.clone(), kappa_comps)?;

    // Ran_i applied to kappa, landing in Ran_i(R1)
    let ran_r1 = right_kan(i, r1_ext, budget)?;
    let Some(_) = &ran_r1.extension else {
        return Err(Error::missing("Ran_i(Ran_u(i.u))"));
    };
    let rr_wit: Vec<&RanWitness> = ran_r1.witnesses.iter().map(|w| w.as_ref().unwrap()).collect();
    let ti_wit: Vec<&RanWitness> = t_i.ran.witnesses.iter().map(|w| w.as_ref().unwrap()).collect();

    let mut phi_comps = Vec::with_capacity(k_cat.object_count());
    for k in 0..k_cat.object_count() {
        // first: T_i(k) -> Ran_i(R1)(k), legs kappa_b . pi^k_(b, g)
        let legs: Vec<usize> = rr_wit[k]
            .comma
            .objects
            .iter()
            .map(|&(b_obj, g)| {
                let idx = ti_wit[k]
                    .comma
                    .object_index(b_obj, g)
                    .ok_or_else(|| Error::Internal("comma object mismatch".into()))?;
                Ok(k_cat.compose(kappa.component(b_obj), ti_wit[k].cone.legs[idx]))
            })
            .collect::<Result<Vec<usize>>>()?;
        let from = Cone {
            apex: ti_wit[k].cone.apex,
            legs,
        };
        let diagram = Functor::compose(r1_ext, &rr_wit[k].comma.projection);
        let step1 = factor_through_terminal(&diagram, &rr_wit[k].cone, &from)?;

        // second: the canonical comparison Ran_i(R1)(k) -> T_{i.u}(k); its
        // leg at (a, h: k -> i u a) goes through the (u a, h) projection and
        // the evaluation R1(u a) -> i(u(a)) at (a, id)
        let legs: Vec<usize> = t_iu.ran.witnesses[k]
            .as_ref()
            .unwrap()
            .comma
            .objects
            .iter()
            .map(|&(a, h)| {
                let ua = u.obj(a);
                let outer = rr_wit[k]
                    .comma
                    .object_index(ua, h)
                    .ok_or_else(|| Error::Internal("outer comma object missing".into()))?;
                let inner = r1_wit[ua]
                    .comma
                    .object_index(a, b_cat.identity(ua))
                    .ok_or_else(|| Error::Internal("inner comma object missing".into()))?;
                Ok(k_cat.compose(
                    r1_wit[ua].cone.legs[inner],
                    rr_wit[k].cone.legs[outer],
                ))
            })
            .collect::<Result<Vec<usize>>>()?;
        let tiu_wit = t_iu.ran.witnesses[k].as_ref().unwrap();
        let from = Cone {
            apex: rr_wit[k].cone.apex,
            legs,
        };
        let diagram = Functor::compose(&iu, &tiu_wit.comma.projection);
        let step2 = factor_through_terminal(&diagram, &tiu_wit.cone, &from)?;
        if !k_cat.is_iso(step2) {
            return Err(Error::Internal(
                "Ran_i(Ran_u(i.u)) and Ran_{i.u}(i.u) failed to coincide".into(),
            ));
        }
        phi_comps.push(k_cat.compose(step2, step1));
    }
    let transform = NatTransformation::new(
        t_i.monad.endo.clone(),
        t_iu.monad.endo.clone(),
        phi_comps,
    )?;
    MonadMorphism::new(t_i.monad, t_iu.monad, transform)
}

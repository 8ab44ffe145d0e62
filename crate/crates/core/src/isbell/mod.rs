//! Isbell conjugation on finite presheaves: the dual adjunction between
//! presheaves and copresheaves, the codensity monad of the Yoneda embedding
//! computed through the end formula, and verifiers for the theorems that
//! identify the two.

mod codensity;
mod theorems;

pub use codensity::{codensity_of_yoneda, EndPresheaf};
pub use theorems::{
    leinster_conjugation_check, swap_adjunction_check, verify_main_theorem, LeinsterReport,
    MainTheoremReport, SwapReport,
};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::finset::{FinFunction, FinSetObject};
use crate::presheaf::{
    conat_set, coyoneda, coyoneda_map, nat_set, yoneda, yoneda_map, Copresheaf, CopresheafMap,
    Presheaf, PresheafMap,
};

/// O(P): the copresheaf a |-> Nat(P, y a), with covariant action by
/// postcomposition along the Yoneda embedding's morphism part.
pub fn isbell_o(p: &Presheaf, budget: &Budget) -> Result<Copresheaf> {
    let base = &p.base;
    let mut at = Vec::with_capacity(base.object_count());
    let mut families = Vec::with_capacity(base.object_count());
    for a in 0..base.object_count() {
        let nats = nat_set(p, &yoneda(base, a), budget)?;
        at.push(nats.set.clone());
        families.push(nats);
    }
    let mut act = Vec::with_capacity(base.morphism_count());
    for m in base.morphism_indices() {
        let (a, a2) = (base.dom(m), base.cod(m));
        let push = yoneda_map(base, m)?;
        let table: Vec<usize> = families[a]
            .families
            .iter()
            .map(|beta| {
                let composed: Vec<FinFunction> = beta
                    .iter()
                    .enumerate()
                    .map(|(b_obj, comp)| FinFunction::compose(&push.components[b_obj], comp))
                    .collect();
                families[a2]
                    .position_of(&composed)
                    .ok_or_else(|| Error::Internal("postcomposition left the nat-set".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        act.push(FinFunction::new(at[a].clone(), at[a2].clone(), table)?);
    }
    Copresheaf::new(base.clone(), at, act)
}

/// O on a presheaf map h: P -> P2, contravariantly: O(P2) -> O(P) by
/// precomposition.
pub fn isbell_o_on_map(h: &PresheafMap, budget: &Budget) -> Result<CopresheafMap> {
    let base = &h.source.base;
    let o_src = isbell_o(&h.source, budget)?;
    let o_tgt = isbell_o(&h.target, budget)?;
    let mut components = Vec::with_capacity(base.object_count());
    for a in 0..base.object_count() {
        let ya = yoneda(base, a);
        let from = nat_set(&h.target, &ya, budget)?;
        let into = nat_set(&h.source, &ya, budget)?;
        let table: Vec<usize> = from
            .families
            .iter()
            .map(|beta| {
                let composed: Vec<FinFunction> = beta
                    .iter()
                    .enumerate()
                    .map(|(b_obj, comp)| FinFunction::compose(comp, &h.components[b_obj]))
                    .collect();
                into.position_of(&composed)
                    .ok_or_else(|| Error::Internal("precomposition left the nat-set".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        components.push(FinFunction::new(
            o_tgt.at[a].clone(),
            o_src.at[a].clone(),
            table,
        )?);
    }
    CopresheafMap::new(o_tgt, o_src, components)
}

/// Spec(Q): the presheaf a |-> Nat(Q, hom(a, -)), with contravariant action
/// by postcomposition along the co-Yoneda embedding's morphism part.
pub fn isbell_spec(q: &Copresheaf, budget: &Budget) -> Result<Presheaf> {
    let base = &q.base;
    let mut at = Vec::with_capacity(base.object_count());
    let mut families = Vec::with_capacity(base.object_count());
    for a in 0..base.object_count() {
        let nats = conat_set(q, &coyoneda(base, a), budget)?;
        at.push(nats.set.clone());
        families.push(nats);
    }
    let mut act = Vec::with_capacity(base.morphism_count());
    for m in base.morphism_indices() {
        let (a, a2) = (base.dom(m), base.cod(m));
        // coyoneda_map(m): hom(a2, -) => hom(a, -); Spec(Q)(a2) -> Spec(Q)(a)
        let push = coyoneda_map(base, m)?;
        let table: Vec<usize> = families[a2]
            .families
            .iter()
            .map(|delta| {
                let composed: Vec<FinFunction> = delta
                    .iter()
                    .enumerate()
                    .map(|(b_obj, comp)| FinFunction::compose(&push.components[b_obj], comp))
                    .collect();
                families[a]
                    .position_of(&composed)
                    .ok_or_else(|| Error::Internal("postcomposition left the conat-set".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        act.push(FinFunction::new(at[a2].clone(), at[a].clone(), table)?);
    }
    Presheaf::new(base.clone(), at, act)
}

/// Spec on a copresheaf map g: Q -> Q2, contravariantly: Spec(Q2) -> Spec(Q)
/// by precomposition.
pub fn isbell_spec_on_map(g: &CopresheafMap, budget: &Budget) -> Result<PresheafMap> {
    let base = &g.source.base;
    let s_src = isbell_spec(&g.source, budget)?;
    let s_tgt = isbell_spec(&g.target, budget)?;
    let mut components = Vec::with_capacity(base.object_count());
    for a in 0..base.object_count() {
        let ca = coyoneda(base, a);
        let from = conat_set(&g.target, &ca, budget)?;
        let into = conat_set(&g.source, &ca, budget)?;
        let table: Vec<usize> = from
            .families
            .iter()
            .map(|delta| {
                let composed: Vec<FinFunction> = delta
                    .iter()
                    .enumerate()
                    .map(|(b_obj, comp)| FinFunction::compose(comp, &g.components[b_obj]))
                    .collect();
                into.position_of(&composed)
                    .ok_or_else(|| Error::Internal("precomposition left the conat-set".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        components.push(FinFunction::new(
            s_tgt.at[a].clone(),
            s_src.at[a].clone(),
            table,
        )?);
    }
    PresheafMap::new(s_tgt, s_src, components)
}

/// The unit P => Spec(O(P)) of the conjugation: an element x of P(b) goes to
/// the family evaluating each natural transformation at x.
pub fn isbell_unit(p: &Presheaf, budget: &Budget) -> Result<PresheafMap> {
    let base = &p.base;
    let o_p = isbell_o(p, budget)?;
    let spec_o_p = isbell_spec(&o_p, budget)?;
    // per object a, the enumerated Nat(P, y a) in canonical order
    let o_families: Vec<_> = (0..base.object_count())
        .map(|a| nat_set(p, &yoneda(base, a), budget))
        .collect::<Result<Vec<_>>>()?;
    let target_families: Vec<_> = (0..base.object_count())
        .map(|b| conat_set(&o_p, &coyoneda(base, b), budget))
        .collect::<Result<Vec<_>>>()?;

    let mut components = Vec::with_capacity(base.object_count());
    for b in 0..base.object_count() {
        let cyb = coyoneda(base, b);
        let table: Vec<usize> = (0..p.at[b].len())
            .map(|x| {
                // family at a: Nat(P, y a) -> hom(b, a), beta |-> beta_b(x)
                let family: Vec<FinFunction> = (0..base.object_count())
                    .map(|a| {
                        let values: Vec<usize> = o_families[a]
                            .families
                            .iter()
                            .map(|beta| beta[b].apply(x))
                            .collect();
                        FinFunction::new(o_p.at[a].clone(), cyb.at[a].clone(), values).unwrap()
                    })
                    .collect();
                target_families[b]
                    .position_of(&family)
                    .ok_or_else(|| Error::Internal("evaluation family is not natural".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        components.push(FinFunction::new(
            p.at[b].clone(),
            spec_o_p.at[b].clone(),
            table,
        )?);
    }
    PresheafMap::new(p.clone(), spec_o_p, components)
}

/// The dual unit Q => O(Spec(Q)) on the copresheaf side, by evaluation.
pub fn isbell_counit(q: &Copresheaf, budget: &Budget) -> Result<CopresheafMap> {
    let base = &q.base;
    let s_q = isbell_spec(q, budget)?;
    let o_s_q = isbell_o(&s_q, budget)?;
    let s_families: Vec<_> = (0..base.object_count())
        .map(|b| conat_set(q, &coyoneda(base, b), budget))
        .collect::<Result<Vec<_>>>()?;
    let target_families: Vec<_> = (0..base.object_count())
        .map(|a| nat_set(&s_q, &yoneda(base, a), budget))
        .collect::<Result<Vec<_>>>()?;

    let mut components = Vec::with_capacity(base.object_count());
    for a in 0..base.object_count() {
        let ya = yoneda(base, a);
        let table: Vec<usize> = (0..q.at[a].len())
            .map(|x| {
                // family at b: Spec(Q)(b) -> hom(b, a), p |-> p_a(x)
                let family: Vec<FinFunction> = (0..base.object_count())
                    .map(|b_obj| {
                        let values: Vec<usize> = s_families[b_obj]
                            .families
                            .iter()
                            .map(|p_fam| p_fam[a].apply(x))
                            .collect();
                        FinFunction::new(s_q.at[b_obj].clone(), ya.at[b_obj].clone(), values)
                            .unwrap()
                    })
                    .collect();
                target_families[a]
                    .position_of(&family)
                    .ok_or_else(|| Error::Internal("evaluation family is not natural".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        components.push(FinFunction::new(
            q.at[a].clone(),
            o_s_q.at[a].clone(),
            table,
        )?);
    }
    CopresheafMap::new(q.clone(), o_s_q, components)
}

/// Count check for the conjugation bijection Nat(Q, O P) = Nat(P, Spec Q),
/// with the underlying hom-sets returned for inspection.
pub fn conjugation_bijection_sizes(
    p: &Presheaf,
    q: &Copresheaf,
    budget: &Budget,
) -> Result<(FinSetObject, FinSetObject)> {
    let o_p = isbell_o(p, budget)?;
    let s_q = isbell_spec(q, budget)?;
    let lhs = conat_set(q, &o_p, budget)?;
    let rhs = nat_set(p, &s_q, budget)?;
    Ok(((*lhs.set).clone(), (*rhs.set).clone()))
}

#[cfg(test)]
mod tests;

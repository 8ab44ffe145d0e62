use std::collections::HashMap;

use super::{Presheaf, PresheafMap};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::fincat::Cat;
use crate::finset::{self, Diagram, FinFunction, SetOb};

/// A diagram of presheaves over a common base: a functor from `shape` into
/// presheaf-land, stored concretely.
#[derive(Debug, Clone)]
pub struct PshDiagram {
    pub shape: Cat,
    pub at: Vec<Presheaf>,
    pub arrows: Vec<PresheafMap>,
}

impl PshDiagram {
    pub fn new(shape: Cat, at: Vec<Presheaf>, arrows: Vec<PresheafMap>) -> Result<PshDiagram> {
        let d = PshDiagram { shape, at, arrows };
        d.check()?;
        Ok(d)
    }

    pub(crate) fn new_unchecked(
        shape: Cat,
        at: Vec<Presheaf>,
        arrows: Vec<PresheafMap>,
    ) -> PshDiagram {
        let d = PshDiagram { shape, at, arrows };
        debug_assert!(d.check().is_ok());
        d
    }

    fn check(&self) -> Result<()> {
        if self.at.len() != self.shape.object_count()
            || self.arrows.len() != self.shape.morphism_count()
        {
            return Err(Error::Internal("presheaf diagram table mismatch".into()));
        }
        for m in self.shape.morphism_indices() {
            let arr = &self.arrows[m];
            if arr.source != self.at[self.shape.dom(m)] || arr.target != self.at[self.shape.cod(m)]
            {
                return Err(Error::Internal(format!(
                    "presheaf diagram endpoints wrong at {}",
                    self.shape.mor_name(m)
                )));
            }
        }
        for o in 0..self.shape.object_count() {
            let id = &self.arrows[self.shape.identity(o)];
            if id.components.iter().enumerate().any(|(a, c)| {
                c.mapping() != FinFunction::identity(&self.at[o].at[a]).mapping()
            }) {
                return Err(Error::Internal("presheaf diagram identity broken".into()));
            }
        }
        for g in self.shape.morphism_indices() {
            for f in self.shape.morphism_indices() {
                if self.shape.cod(f) != self.shape.dom(g) {
                    continue;
                }
                let gf = self.shape.compose(g, f);
                let comp = PresheafMap::compose(&self.arrows[g], &self.arrows[f]);
                if self.arrows[gf]
                    .components
                    .iter()
                    .zip(&comp.components)
                    .any(|(a, b)| a.mapping() != b.mapping())
                {
                    return Err(Error::Internal("presheaf diagram composition broken".into()));
                }
            }
        }
        Ok(())
    }

    /// Throw away the presheaf structure and keep the single-object fiber.
    fn fiber(&self, b: usize) -> Result<Diagram> {
        Diagram::new(
            self.shape.clone(),
            self.at.iter().map(|p| p.at[b].clone()).collect(),
            self.arrows
                .iter()
                .map(|m| m.components[b].clone())
                .collect(),
        )
    }
}

/// Pointwise limit of a diagram of presheaves: the fiber at each base object
/// is the finite-set limit, and the action is induced componentwise.
/// Returns the limit presheaf together with its projection maps. The empty
/// diagram yields the terminal presheaf on `base`.
pub fn presheaf_limit(
    base: &Cat,
    d: &PshDiagram,
    budget: &Budget,
) -> Result<(Presheaf, Vec<PresheafMap>)> {
    let base = base.clone();
    let n_obj = base.object_count();
    let mut fibers = Vec::with_capacity(n_obj);
    for b in 0..n_obj {
        fibers.push(finset::limit(&d.fiber(b)?, budget)?);
    }
    // tuple index lookup per object
    let lookups: Vec<HashMap<&[usize], usize>> = fibers
        .iter()
        .map(|l| {
            l.tuples
                .iter()
                .enumerate()
                .map(|(i, t)| (t.as_slice(), i))
                .collect()
        })
        .collect();
    let at: Vec<SetOb> = fibers.iter().map(|l| l.object.clone()).collect();
    let mut act = Vec::with_capacity(base.morphism_count());
    for f in base.morphism_indices() {
        let (b, b2) = (base.dom(f), base.cod(f));
        let table: Vec<usize> = fibers[b2]
            .tuples
            .iter()
            .map(|t| {
                let mapped: Vec<usize> = t
                    .iter()
                    .enumerate()
                    .map(|(leg, &x)| d.at[leg].act[f].apply(x))
                    .collect();
                *lookups[b].get(mapped.as_slice()).expect("limit action escapes the limit")
            })
            .collect();
        act.push(FinFunction::new(at[b2].clone(), at[b].clone(), table)?);
    }
    let limit = Presheaf::new(base, at, act)?;
    let projections = (0..d.shape.object_count())
        .map(|leg| {
            PresheafMap::new(
                limit.clone(),
                d.at[leg].clone(),
                (0..n_obj)
                    .map(|b| fibers[b].projections[leg].clone())
                    .collect(),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((limit, projections))
}

/// Pointwise colimit of a diagram of presheaves, with injection maps. The
/// empty diagram yields the empty presheaf on `base`.
pub fn presheaf_colimit(
    base: &Cat,
    d: &PshDiagram,
    budget: &Budget,
) -> Result<(Presheaf, Vec<PresheafMap>)> {
    let base = base.clone();
    let n_obj = base.object_count();
    let mut fibers = Vec::with_capacity(n_obj);
    for b in 0..n_obj {
        fibers.push(finset::colimit(&d.fiber(b)?, budget)?);
    }
    let at: Vec<SetOb> = fibers.iter().map(|c| c.object.clone()).collect();
    let mut act = Vec::with_capacity(base.morphism_count());
    for f in base.morphism_indices() {
        let (b, b2) = (base.dom(f), base.cod(f));
        // class at b2 -> act on any member (leg, x), take its class; the leg
        // naturality squares make this independent of the member chosen
        let mut table = vec![usize::MAX; at[b2].len()];
        for leg in 0..d.shape.object_count() {
            for x in 0..d.at[leg].at[b2].len() {
                let class = fibers[b2].injections[leg].apply(x);
                let mapped = d.at[leg].act[f].apply(x);
                let image = fibers[b].injections[leg].apply(mapped);
                if table[class] == usize::MAX {
                    table[class] = image;
                } else if table[class] != image {
                    return Err(Error::Internal(
                        "colimit action not well defined".into(),
                    ));
                }
            }
        }
        if table.iter().any(|&v| v == usize::MAX) {
            return Err(Error::Internal("colimit class with no member".into()));
        }
        act.push(FinFunction::new(at[b2].clone(), at[b].clone(), table)?);
    }
    let colimit = Presheaf::new(base, at, act)?;
    let injections = (0..d.shape.object_count())
        .map(|leg| {
            PresheafMap::new(
                d.at[leg].clone(),
                colimit.clone(),
                (0..n_obj)
                    .map(|b| fibers[b].injections[leg].clone())
                    .collect(),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((colimit, injections))
}

/// The S-fold power of a presheaf: at(b) = functions S -> P(b), action by
/// postcomposition with P's action. Equals the |S|-fold product of P up to
/// the canonical tupling isomorphism.
pub fn power_presheaf(p: &Presheaf, s: &SetOb, budget: &Budget) -> Result<Presheaf> {
    let base = &p.base;
    let mut at = Vec::with_capacity(base.object_count());
    let mut funcs = Vec::with_capacity(base.object_count());
    for b in 0..base.object_count() {
        let (set, fs) = finset::hom_set(s, &p.at[b], budget)?;
        at.push(set);
        funcs.push(fs);
    }
    let mut act = Vec::with_capacity(base.morphism_count());
    for f in base.morphism_indices() {
        let (b, b2) = (base.dom(f), base.cod(f));
        let table: Vec<usize> = funcs[b2]
            .iter()
            .map(|phi| {
                let composed = FinFunction::compose(&p.act[f], phi);
                at[b]
                    .position(&composed.token())
                    .expect("power action escapes the function set")
            })
            .collect();
        act.push(FinFunction::new(at[b2].clone(), at[b].clone(), table)?);
    }
    Presheaf::new(base.clone(), at, act)
}

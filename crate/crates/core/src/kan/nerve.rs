use std::collections::HashMap;

use super::cones::{colimit_in_category, factor_through_initial, Cocone};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::fincat::{Cat, FinCategory, Functor, MorData};
use crate::finset::{FinFunction, FinSetObject};
use crate::presheaf::{
    presheaf_colimit, yoneda, yoneda_map, Presheaf, PresheafMap, PshDiagram, PshFunctor,
};

/// The category of elements of a presheaf: objects (a, x in P(a)), morphisms
/// (a, x) -> (a', x') are base arrows m: a -> a' with P(m)(x') = x.
#[derive(Debug, Clone)]
pub struct ElementsCategory {
    pub category: Cat,
    pub projection: Functor,
    pub objects: Vec<(usize, usize)>,
    lookup: HashMap<(usize, usize), usize>,
}

impl ElementsCategory {
    pub fn new(p: &Presheaf, budget: &Budget) -> Result<ElementsCategory> {
        let base = &p.base;
        let mut objects = Vec::new();
        for a in 0..base.object_count() {
            for x in 0..p.at[a].len() {
                objects.push((a, x));
            }
        }
        let lookup: HashMap<(usize, usize), usize> = objects
            .iter()
            .enumerate()
            .map(|(i, &k)| (k, i))
            .collect();
        let mut morphisms = Vec::new();
        let mut mor_data = Vec::new();
        let mut identities = vec![usize::MAX; objects.len()];
        for (i, &(a, x)) in objects.iter().enumerate() {
            for (j, &(a2, x2)) in objects.iter().enumerate() {
                for &m in base.hom(a, a2) {
                    if p.act[m].apply(x2) == x {
                        let idx = morphisms.len();
                        morphisms.push(MorData {
                            name: format!(
                                "[{}:{}>{}]",
                                base.mor_name(m),
                                p.at[a].token(x),
                                p.at[a2].token(x2)
                            ),
                            dom: i,
                            cod: j,
                        });
                        mor_data.push((i, j, m));
                        if i == j && m == base.identity(a) {
                            identities[i] = idx;
                        }
                    }
                }
            }
        }
        let mor_lookup: HashMap<(usize, usize, usize), usize> = mor_data
            .iter()
            .enumerate()
            .map(|(i, &k)| (k, i))
            .collect();
        let mut compose = HashMap::new();
        for (gi, &(gs, gt, gm)) in mor_data.iter().enumerate() {
            for (fi, &(fs, ft, fm)) in mor_data.iter().enumerate() {
                if ft == gs {
                    let m = base.compose(gm, fm);
                    compose.insert((gi, fi), mor_lookup[&(fs, gt, m)]);
                }
            }
        }
        let names = objects
            .iter()
            .map(|&(a, x)| format!("({}|{})", base.object_name(a), p.at[a].token(x)))
            .collect();
        let category = FinCategory::assemble_checked(
            "el".into(),
            names,
            morphisms,
            identities,
            compose,
            budget,
        )?;
        let projection = Functor::new(
            "proj",
            category.clone(),
            base.clone(),
            objects.iter().map(|&(a, _)| a).collect(),
            mor_data.iter().map(|&(_, _, m)| m).collect(),
        )?;
        Ok(ElementsCategory {
            category,
            projection,
            objects,
            lookup,
        })
    }

    pub fn object_index(&self, a: usize, x: usize) -> Option<usize> {
        self.lookup.get(&(a, x)).copied()
    }
}

/// The realization of a presheaf along f: A -> B: the colimit in B of f
/// composed with the projection from the category of elements. This is the
/// value of the left Kan extension of f along the Yoneda embedding.
#[derive(Debug)]
pub struct Realization {
    pub elements: ElementsCategory,
    pub diagram: Functor,
    pub cocone: Cocone,
}

impl Realization {
    pub fn apex(&self) -> usize {
        self.cocone.apex
    }
}

pub fn realize(f: &Functor, p: &Presheaf, budget: &Budget) -> Result<Option<Realization>> {
    let elements = ElementsCategory::new(p, budget)?;
    let diagram = Functor::compose(f, &elements.projection);
    Ok(colimit_in_category(&diagram, budget)?.map(|cocone| Realization {
        elements,
        diagram,
        cocone,
    }))
}

/// The morphism of realizations induced by a presheaf map h: P -> Q.
pub fn realize_map(
    from: &Realization,
    to: &Realization,
    h: &PresheafMap,
) -> Result<usize> {
    let legs: Vec<usize> = from
        .elements
        .objects
        .iter()
        .map(|&(a, x)| {
            let idx = to
                .elements
                .object_index(a, h.components[a].apply(x))
                .ok_or_else(|| Error::Internal("element image missing".into()))?;
            Ok(to.cocone.legs[idx])
        })
        .collect::<Result<Vec<usize>>>()?;
    let target_cocone = Cocone {
        apex: to.cocone.apex,
        legs,
    };
    factor_through_initial(&from.diagram, &from.cocone, &target_cocone)
}

/// The nerve of f: A -> B: the presheaf-valued functor b |-> B(f-, b).
pub fn nerve(f: &Functor, budget: &Budget) -> Result<PshFunctor> {
    let _ = budget;
    let a_cat = f.source();
    let b_cat = f.target();
    let mut at = Vec::with_capacity(b_cat.object_count());
    for b in 0..b_cat.object_count() {
        let sets: Vec<_> = (0..a_cat.object_count())
            .map(|a| {
                FinSetObject::new(
                    b_cat
                        .hom(f.obj(a), b)
                        .iter()
                        .map(|&u| b_cat.mor_name(u).to_string())
                        .collect(),
                )
                .unwrap()
            })
            .collect();
        let act = a_cat
            .morphism_indices()
            .map(|k| {
                let (a, a2) = (a_cat.dom(k), a_cat.cod(k));
                let table = b_cat
                    .hom(f.obj(a2), b)
                    .iter()
                    .map(|&u| {
                        let pulled = b_cat.compose(u, f.mor(k));
                        b_cat
                            .hom(f.obj(a), b)
                            .iter()
                            .position(|&v| v == pulled)
                            .unwrap()
                    })
                    .collect();
                FinFunction::new(sets[a2].clone(), sets[a].clone(), table).unwrap()
            })
            .collect();
        at.push(Presheaf::new(a_cat.clone(), sets, act)?);
    }
    let act = b_cat
        .morphism_indices()
        .map(|m| {
            let (b, b2) = (b_cat.dom(m), b_cat.cod(m));
            let components = (0..a_cat.object_count())
                .map(|a| {
                    let table = b_cat
                        .hom(f.obj(a), b)
                        .iter()
                        .map(|&u| {
                            let pushed = b_cat.compose(m, u);
                            b_cat
                                .hom(f.obj(a), b2)
                                .iter()
                                .position(|&v| v == pushed)
                                .unwrap()
                        })
                        .collect();
                    FinFunction::new(at[b].at[a].clone(), at[b2].at[a].clone(), table).unwrap()
                })
                .collect();
            PresheafMap::new(at[b].clone(), at[b2].clone(), components)
        })
        .collect::<Result<Vec<_>>>()?;
    PshFunctor::new(format!("nerve_{}", f.name), b_cat.clone(), at, act)
}

/// The presheaf-valued left Kan extension of the Yoneda embedding along
/// g: A -> B, computed pointwise as a colimit of representables over the
/// comma category g / b.
pub fn lan_yoneda_along(g: &Functor, budget: &Budget) -> Result<PshFunctor> {
    let a_cat = g.source();
    let b_cat = g.target();
    let mut at: Vec<Presheaf> = Vec::with_capacity(b_cat.object_count());
    let mut commas = Vec::with_capacity(b_cat.object_count());
    let mut injections: Vec<Vec<PresheafMap>> = Vec::with_capacity(b_cat.object_count());
    for b in 0..b_cat.object_count() {
        let comma = crate::fincat::CommaCategory::over(g, b, budget)?;
        let legs: Vec<Presheaf> = comma
            .objects
            .iter()
            .map(|&(a, _)| yoneda(a_cat, a))
            .collect();
        let arrows: Vec<PresheafMap> = comma
            .category
            .morphism_indices()
            .map(|cm| yoneda_map(a_cat, comma.projection.mor(cm)))
            .collect::<Result<Vec<_>>>()?;
        let diagram = PshDiagram::new_unchecked(comma.category.clone(), legs, arrows);
        let (colim, inj) = presheaf_colimit(a_cat, &diagram, budget)?;
        at.push(colim);
        injections.push(inj);
        commas.push(comma);
    }
    let mut act = Vec::with_capacity(b_cat.morphism_count());
    for m in b_cat.morphism_indices() {
        let (b, b2) = (b_cat.dom(m), b_cat.cod(m));
        // classes at b are generated by comma objects (a, h); push forward to
        // (a, m . h) and take its class at b2
        let components = (0..a_cat.object_count())
            .map(|c| {
                let mut table = vec![usize::MAX; at[b].at[c].len()];
                for (leg, &(a, h)) in commas[b].objects.iter().enumerate() {
                    let pushed = b_cat.compose(m, h);
                    let leg2 = commas[b2]
                        .object_index(a, pushed)
                        .ok_or_else(|| Error::Internal("comma push lost an object".into()))?;
                    for x in 0..injections[b][leg].components[c].dom.len() {
                        let cls = injections[b][leg].components[c].apply(x);
                        let img = injections[b2][leg2].components[c].apply(x);
                        if table[cls] == usize::MAX {
                            table[cls] = img;
                        } else if table[cls] != img {
                            return Err(Error::Internal(
                                "induced colimit map not well defined".into(),
                            ));
                        }
                    }
                }
                if table.iter().any(|&v| v == usize::MAX) {
                    return Err(Error::Internal("colimit class with no generator".into()));
                }
                FinFunction::new(at[b].at[c].clone(), at[b2].at[c].clone(), table)
            })
            .collect::<Result<Vec<_>>>()?;
        act.push(PresheafMap::new(at[b].clone(), at[b2].clone(), components)?);
    }
    PshFunctor::new(format!("Lan_{}(y)", g.name), b_cat.clone(), at, act)
}

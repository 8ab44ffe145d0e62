use std::collections::HashMap;

use super::{Cat, FinCategory, Functor, MorData};
use crate::budget::Budget;
use crate::error::Result;

/// A full subcategory on a chosen object subset, with its induced inclusion.
/// Hom-sets between selected objects are exactly the parent's hom-sets.
#[derive(Debug, Clone)]
pub struct FullSubcategory {
    pub parent: Cat,
    /// Parent object indices, ascending.
    pub objects: Vec<usize>,
    pub category: Cat,
    pub inclusion: Functor,
}

impl PartialEq for FullSubcategory {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.objects == other.objects
    }
}

impl FullSubcategory {
    pub fn new(parent: &Cat, mut objects: Vec<usize>, budget: &Budget) -> Result<FullSubcategory> {
        objects.sort_unstable();
        objects.dedup();
        let mut mor_keep: Vec<usize> = Vec::new();
        let selected = |o: usize| objects.binary_search(&o).is_ok();
        for m in parent.morphism_indices() {
            if selected(parent.dom(m)) && selected(parent.cod(m)) {
                mor_keep.push(m);
            }
        }
        let obj_back: HashMap<usize, usize> =
            objects.iter().enumerate().map(|(i, &o)| (o, i)).collect();
        let mor_back: HashMap<usize, usize> =
            mor_keep.iter().enumerate().map(|(i, &m)| (m, i)).collect();

        let morphisms = mor_keep
            .iter()
            .map(|&m| MorData {
                name: parent.mor_name(m).to_string(),
                dom: obj_back[&parent.dom(m)],
                cod: obj_back[&parent.cod(m)],
            })
            .collect();
        let identities = objects
            .iter()
            .map(|&o| mor_back[&parent.identity(o)])
            .collect();
        let mut compose = HashMap::new();
        for (gi, &g) in mor_keep.iter().enumerate() {
            for (fi, &f) in mor_keep.iter().enumerate() {
                if parent.cod(f) == parent.dom(g) {
                    compose.insert((gi, fi), mor_back[&parent.compose(g, f)]);
                }
            }
        }
        let names: Vec<&str> = objects.iter().map(|&o| parent.object_name(o)).collect();
        let category = FinCategory::assemble_checked(
            format!("{}[{}]", parent.name, names.join(",")),
            names.iter().map(|s| s.to_string()).collect(),
            morphisms,
            identities,
            compose,
            budget,
        )?;
        let inclusion = Functor::new(
            format!("incl_{}", category.name),
            category.clone(),
            parent.clone(),
            objects.clone(),
            mor_keep,
        )?;
        Ok(FullSubcategory {
            parent: parent.clone(),
            objects,
            category,
            inclusion,
        })
    }

    pub fn from_names(parent: &Cat, names: &[&str], budget: &Budget) -> Result<FullSubcategory> {
        let objects = names
            .iter()
            .map(|n| {
                parent.object_index(n).ok_or_else(|| {
                    crate::error::Error::missing(format!("object {n} in {}", parent.name))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        FullSubcategory::new(parent, objects, budget)
    }

    pub fn contains(&self, parent_obj: usize) -> bool {
        self.objects.binary_search(&parent_obj).is_ok()
    }
}

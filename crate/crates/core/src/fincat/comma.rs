use std::collections::HashMap;

use super::{Cat, FinCategory, Functor, MorData};
use crate::budget::Budget;
use crate::error::Result;

/// The comma category b / F: objects are arrows f: b -> F(a), morphisms are
/// source arrows h: a -> a' with F(h) . f = f'. Comes with the projection to
/// F's source. May be empty.
#[derive(Debug, Clone)]
pub struct CommaCategory {
    pub category: Cat,
    pub projection: Functor,
    /// Per comma object: (a, f) with a in F.source and f in F.target.
    pub objects: Vec<(usize, usize)>,
    obj_lookup: HashMap<(usize, usize), usize>,
}

impl CommaCategory {
    /// Build b / F for an object b of F's target.
    pub fn under(b: usize, f: &Functor, budget: &Budget) -> Result<CommaCategory> {
        let src = f.source();
        let tgt = f.target();
        let mut objects: Vec<(usize, usize)> = Vec::new();
        for a in 0..src.object_count() {
            for &arrow in tgt.hom(b, f.obj(a)) {
                objects.push((a, arrow));
            }
        }
        let obj_lookup: HashMap<(usize, usize), usize> = objects
            .iter()
            .enumerate()
            .map(|(i, &k)| (k, i))
            .collect();

        let mut morphisms = Vec::new();
        let mut mor_data: Vec<(usize, usize, usize)> = Vec::new(); // (src obj, tgt obj, h)
        let mut identities = vec![usize::MAX; objects.len()];
        for (i, &(a, arr)) in objects.iter().enumerate() {
            for (j, &(a2, arr2)) in objects.iter().enumerate() {
                for &h in src.hom(a, a2) {
                    if tgt.compose(f.mor(h), arr) == arr2 {
                        let idx = morphisms.len();
                        morphisms.push(MorData {
                            name: format!(
                                "[{}:{}>{}]",
                                src.mor_name(h),
                                tgt.mor_name(arr),
                                tgt.mor_name(arr2)
                            ),
                            dom: i,
                            cod: j,
                        });
                        mor_data.push((i, j, h));
                        if i == j && h == src.identity(a) {
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
        for (gi, &(gs, gt, gh)) in mor_data.iter().enumerate() {
            for (fi, &(fs, ft, fh)) in mor_data.iter().enumerate() {
                if ft == gs {
                    let h = src.compose(gh, fh);
                    compose.insert((gi, fi), mor_lookup[&(fs, gt, h)]);
                }
            }
        }
        let obj_names = objects
            .iter()
            .map(|&(a, arr)| format!("({}|{})", src.object_name(a), tgt.mor_name(arr)))
            .collect();
        let category = FinCategory::assemble_checked(
            format!("({}\\{})", tgt.object_name(b), f.name),
            obj_names,
            morphisms,
            identities,
            compose,
            budget,
        )?;
        let projection = Functor::new(
            "proj",
            category.clone(),
            src.clone(),
            objects.iter().map(|&(a, _)| a).collect(),
            mor_data.iter().map(|&(_, _, h)| h).collect(),
        )?;
        Ok(CommaCategory {
            category,
            projection,
            objects,
            obj_lookup,
        })
    }

    /// Build F / b (arrows F(a) -> b), used for left Kan extensions.
    /// Realized as b / F^op inside the opposite categories, but constructed
    /// directly here to keep morphism orientation readable.
    pub fn over(f: &Functor, b: usize, budget: &Budget) -> Result<CommaCategory> {
        let src = f.source();
        let tgt = f.target();
        let mut objects: Vec<(usize, usize)> = Vec::new();
        for a in 0..src.object_count() {
            for &arrow in tgt.hom(f.obj(a), b) {
                objects.push((a, arrow));
            }
        }
        let obj_lookup: HashMap<(usize, usize), usize> = objects
            .iter()
            .enumerate()
            .map(|(i, &k)| (k, i))
            .collect();
        let mut morphisms = Vec::new();
        let mut mor_data: Vec<(usize, usize, usize)> = Vec::new();
        let mut identities = vec![usize::MAX; objects.len()];
        for (i, &(a, arr)) in objects.iter().enumerate() {
            for (j, &(a2, arr2)) in objects.iter().enumerate() {
                for &h in src.hom(a, a2) {
                    // triangle: arr2 . F(h) = arr
                    if tgt.compose(arr2, f.mor(h)) == arr {
                        let idx = morphisms.len();
                        morphisms.push(MorData {
                            name: format!(
                                "[{}:{}>{}]",
                                src.mor_name(h),
                                tgt.mor_name(arr),
                                tgt.mor_name(arr2)
                            ),
                            dom: i,
                            cod: j,
                        });
                        mor_data.push((i, j, h));
                        if i == j && h == src.identity(a) {
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
        for (gi, &(gs, gt, gh)) in mor_data.iter().enumerate() {
            for (fi, &(fs, ft, fh)) in mor_data.iter().enumerate() {
                if ft == gs {
                    let h = src.compose(gh, fh);
                    compose.insert((gi, fi), mor_lookup[&(fs, gt, h)]);
                }
            }
        }
        let obj_names = objects
            .iter()
            .map(|&(a, arr)| format!("({}|{})", src.object_name(a), tgt.mor_name(arr)))
            .collect();
        let category = FinCategory::assemble_checked(
            format!("({}/{})", f.name, tgt.object_name(b)),
            obj_names,
            morphisms,
            identities,
            compose,
            budget,
        )?;
        let projection = Functor::new(
            "proj",
            category.clone(),
            src.clone(),
            objects.iter().map(|&(a, _)| a).collect(),
            mor_data.iter().map(|&(_, _, h)| h).collect(),
        )?;
        Ok(CommaCategory {
            category,
            projection,
            objects,
            obj_lookup,
        })
    }

    pub fn object_index(&self, a: usize, arrow: usize) -> Option<usize> {
        self.obj_lookup.get(&(a, arrow)).copied()
    }
}

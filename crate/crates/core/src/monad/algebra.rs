use std::collections::HashMap;

use super::{Monad, MonadMorphism};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::fincat::{Cat, FinCategory, Functor, MorData};
use crate::kan::check_adjunction;

/// An algebra (k, xi: T k -> k) satisfying xi . unit = id and
/// xi . T(xi) = xi . mult.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EMAlgebra {
    pub object: usize,
    pub structure: usize,
}

/// The Eilenberg-Moore category of a monad, realized as a finite category
/// together with the free-forgetful adjunction.
#[derive(Debug)]
pub struct EMCategory {
    pub monad: Monad,
    pub algebras: Vec<EMAlgebra>,
    pub category: Cat,
    pub forgetful: Functor,
    pub free: Functor,
    /// Per Alg-morphism: (source algebra, target algebra, underlying arrow).
    pub morphism_data: Vec<(usize, usize, usize)>,
    mor_lookup: HashMap<(usize, usize, usize), usize>,
}

impl EMCategory {
    pub fn algebra_index(&self, object: usize, structure: usize) -> Option<usize> {
        self.algebras
            .iter()
            .position(|a| a.object == object && a.structure == structure)
    }

    pub fn morphism_index(&self, src: usize, tgt: usize, arrow: usize) -> Option<usize> {
        self.mor_lookup.get(&(src, tgt, arrow)).copied()
    }
}

/// Exhaustively enumerate algebras and their morphisms. Structure maps are
/// pruned on xi . unit = id before the associativity filter; morphisms are
/// all carrier arrows making the compatibility square commute.
pub fn em_category(m: &Monad, budget: &Budget) -> Result<EMCategory> {
    let k_cat = &m.carrier;
    let t = &m.endo;
    let mut algebras = Vec::new();
    for k in 0..k_cat.object_count() {
        let tk = t.obj(k);
        for &xi in k_cat.hom(tk, k) {
            if k_cat.compose(xi, m.unit.component(k)) != k_cat.identity(k) {
                continue;
            }
            if k_cat.compose(xi, t.mor(xi)) != k_cat.compose(xi, m.mult.component(k)) {
                continue;
            }
            algebras.push(EMAlgebra {
                object: k,
                structure: xi,
            });
        }
    }

    let mut morphisms = Vec::new();
    let mut mor_data = Vec::new();
    let mut identities = vec![usize::MAX; algebras.len()];
    for (i, a) in algebras.iter().enumerate() {
        for (j, b) in algebras.iter().enumerate() {
            for &h in k_cat.hom(a.object, b.object) {
                if k_cat.compose(h, a.structure) != k_cat.compose(b.structure, t.mor(h)) {
                    continue;
                }
                let idx = morphisms.len();
                morphisms.push(MorData {
                    name: format!(
                        "[{}:{}>{}]",
                        k_cat.mor_name(h),
                        k_cat.mor_name(a.structure),
                        k_cat.mor_name(b.structure)
                    ),
                    dom: i,
                    cod: j,
                });
                mor_data.push((i, j, h));
                if i == j && h == k_cat.identity(a.object) {
                    identities[i] = idx;
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
                let h = k_cat.compose(gh, fh);
                compose.insert((gi, fi), mor_lookup[&(fs, gt, h)]);
            }
        }
    }
    let names = algebras
        .iter()
        .map(|a| {
            format!(
                "({}|{})",
                k_cat.object_name(a.object),
                k_cat.mor_name(a.structure)
            )
        })
        .collect();
    let category = FinCategory::assemble_checked(
        format!("Alg({})", m.name),
        names,
        morphisms,
        identities,
        compose,
        budget,
    )?;

    let forgetful = Functor::new(
        "U",
        category.clone(),
        k_cat.clone(),
        algebras.iter().map(|a| a.object).collect(),
        mor_data.iter().map(|&(_, _, h)| h).collect(),
    )?;

    // free algebra at k is (T k, mult_k)
    let free_obj: Vec<usize> = (0..k_cat.object_count())
        .map(|k| {
            algebras
                .iter()
                .position(|a| a.object == t.obj(k) && a.structure == m.mult.component(k))
                .ok_or_else(|| Error::Internal("free algebra not found".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let free_mor: Vec<usize> = k_cat
        .morphism_indices()
        .map(|f| {
            let (k, k2) = (k_cat.dom(f), k_cat.cod(f));
            mor_lookup
                .get(&(free_obj[k], free_obj[k2], t.mor(f)))
                .copied()
                .ok_or_else(|| Error::Internal("free morphism not an algebra morphism".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let free = Functor::new("F", k_cat.clone(), category.clone(), free_obj, free_mor)?;

    // forgetful . free must be T on the nose
    let uf = Functor::compose(&forgetful, &free);
    if uf.on_objects() != t.on_objects() || uf.on_morphisms() != t.on_morphisms() {
        return Err(Error::Internal("U . F differs from the endofunctor".into()));
    }
    match check_adjunction(&free, &forgetful, budget)? {
        Ok(_) => {}
        Err(e) => {
            return Err(Error::Internal(format!(
                "free-forgetful adjunction not found: {e:?}"
            )))
        }
    }

    Ok(EMCategory {
        monad: m.clone(),
        algebras,
        category,
        forgetful,
        free,
        morphism_data: mor_data,
        mor_lookup,
    })
}

/// The comparison functor Alg(T) -> Alg(S) induced by a monad morphism
/// phi: S => T: precompose every structure map with phi, keep the arrows.
pub fn comparison_from_monad_morphism(
    phi: &MonadMorphism,
    alg_target: &EMCategory,
    alg_source: &EMCategory,
) -> Result<Functor> {
    let k_cat = &phi.source.carrier;
    let on_objects: Vec<usize> = alg_target
        .algebras
        .iter()
        .map(|a| {
            let pulled = k_cat.compose(a.structure, phi.component(a.object));
            alg_source.algebra_index(a.object, pulled).ok_or_else(|| {
                Error::Internal("pulled-back structure map is not an algebra".into())
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let on_morphisms: Vec<usize> = alg_target
        .morphism_data
        .iter()
        .map(|&(src, tgt, h)| {
            alg_source
                .morphism_index(on_objects[src], on_objects[tgt], h)
                .ok_or_else(|| Error::Internal("comparison loses a morphism".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Functor::new(
        format!("K_{}", phi.source.name),
        alg_target.category.clone(),
        alg_source.category.clone(),
        on_objects,
        on_morphisms,
    )
}

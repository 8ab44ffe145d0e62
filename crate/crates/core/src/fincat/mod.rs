//! Fully enumerated finite categories and the structure-preserving maps
//! between them. Objects and morphisms carry stable string identifiers and
//! every enumeration order is the declared order, so all downstream searches
//! are deterministic.

mod comma;
mod functor;
mod iso;
mod subcategory;
mod transform;

pub use comma::CommaCategory;
pub use functor::{enumerate_functors, Functor};
pub use iso::{find_natural_isomorphism, natural_families, natural_isomorphisms};
pub use subcategory::FullSubcategory;
pub use transform::NatTransformation;

use std::collections::HashMap;
use std::sync::Arc;

use crate::budget::Budget;
use crate::error::{Error, Result, ValidationIssue, ValidationReport};

pub type Cat = Arc<FinCategory>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorData {
    pub name: String,
    pub dom: usize,
    pub cod: usize,
}

/// Raw tables prior to validation. The validator reports every violated
/// axiom, not just the first.
#[derive(Debug, Clone, Default)]
pub struct RawCategory {
    pub name: String,
    pub objects: Vec<String>,
    /// (morphism name, domain object name, codomain object name)
    pub morphisms: Vec<(String, String, String)>,
    /// (object name, identity morphism name)
    pub identities: Vec<(String, String)>,
    /// (g, f, h) meaning g . f = h
    pub composites: Vec<(String, String, String)>,
}

/// A finite category: objects, morphisms, identities and a total composition
/// table for composable pairs. Immutable after validation.
#[derive(Debug)]
pub struct FinCategory {
    pub name: String,
    objects: Vec<String>,
    morphisms: Vec<MorData>,
    identities: Vec<usize>,
    compose: HashMap<(usize, usize), usize>,
    /// hom[x][y] lists morphism indices x -> y in declared order.
    hom: Vec<Vec<Vec<usize>>>,
    /// Two-sided inverse per morphism, when one exists.
    inverses: Vec<Option<usize>>,
    obj_index: HashMap<String, usize>,
    mor_index: HashMap<String, usize>,
}

impl PartialEq for FinCategory {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects
            && self.morphisms == other.morphisms
            && self.identities == other.identities
            && self.compose == other.compose
    }
}

impl Eq for FinCategory {}

impl FinCategory {
    /// Validate raw tables into a category, or report every violated axiom.
    pub fn validate(raw: &RawCategory, budget: &Budget) -> Result<Cat> {
        let mut report = ValidationReport::default();

        let mut obj_index = HashMap::new();
        for (i, o) in raw.objects.iter().enumerate() {
            if obj_index.insert(o.clone(), i).is_some() {
                report.push(ValidationIssue::DuplicateName {
                    name: o.clone(),
                    context: "objects".into(),
                });
            }
        }
        let mut mor_index = HashMap::new();
        let mut morphisms = Vec::new();
        for (i, (name, dom, cod)) in raw.morphisms.iter().enumerate() {
            if mor_index.insert(name.clone(), i).is_some() {
                report.push(ValidationIssue::DuplicateName {
                    name: name.clone(),
                    context: "morphisms".into(),
                });
            }
            let d = obj_index.get(dom).copied();
            let c = obj_index.get(cod).copied();
            if d.is_none() {
                report.push(ValidationIssue::UnknownObject {
                    name: dom.clone(),
                    context: format!("domain of {name}"),
                });
            }
            if c.is_none() {
                report.push(ValidationIssue::UnknownObject {
                    name: cod.clone(),
                    context: format!("codomain of {name}"),
                });
            }
            morphisms.push(MorData {
                name: name.clone(),
                dom: d.unwrap_or(0),
                cod: c.unwrap_or(0),
            });
        }
        if !report.is_ok() {
            return Err(Error::Validation(report));
        }
        if morphisms.len() > budget.max_morphisms {
            report.push(ValidationIssue::TooLarge {
                morphisms: morphisms.len(),
                cap: budget.max_morphisms,
            });
            return Err(Error::Validation(report));
        }

        // identities
        let mut identities = vec![usize::MAX; raw.objects.len()];
        for (obj, mor) in &raw.identities {
            let (Some(&o), Some(&m)) = (obj_index.get(obj), mor_index.get(mor)) else {
                report.push(ValidationIssue::UnknownMorphism {
                    name: mor.clone(),
                    context: format!("identity of {obj}"),
                });
                continue;
            };
            if morphisms[m].dom != o || morphisms[m].cod != o {
                report.push(ValidationIssue::BadIdentityEndpoints {
                    object: obj.clone(),
                    morphism: mor.clone(),
                });
            }
            identities[o] = m;
        }
        for (o, &id) in identities.iter().enumerate() {
            if id == usize::MAX {
                report.push(ValidationIssue::MissingIdentity {
                    object: raw.objects[o].clone(),
                });
            }
        }

        // composition table
        let mut compose: HashMap<(usize, usize), usize> = HashMap::new();
        for (g, f, h) in &raw.composites {
            let (Some(&gi), Some(&fi), Some(&hi)) = (
                mor_index.get(g),
                mor_index.get(f),
                mor_index.get(h),
            ) else {
                for n in [g, f, h] {
                    if !mor_index.contains_key(n) {
                        report.push(ValidationIssue::UnknownMorphism {
                            name: n.clone(),
                            context: format!("compose {g} . {f} = {h}"),
                        });
                    }
                }
                continue;
            };
            if morphisms[fi].cod != morphisms[gi].dom {
                report.push(ValidationIssue::NotComposable {
                    g: g.clone(),
                    f: f.clone(),
                });
                continue;
            }
            if morphisms[hi].dom != morphisms[fi].dom || morphisms[hi].cod != morphisms[gi].cod {
                report.push(ValidationIssue::CompositeEndpointsMismatch {
                    g: g.clone(),
                    f: f.clone(),
                    h: h.clone(),
                });
                continue;
            }
            compose.insert((gi, fi), hi);
        }

        // totality over composable pairs
        for g in 0..morphisms.len() {
            for f in 0..morphisms.len() {
                if morphisms[f].cod == morphisms[g].dom && !compose.contains_key(&(g, f)) {
                    report.push(ValidationIssue::MissingComposite {
                        g: morphisms[g].name.clone(),
                        f: morphisms[f].name.clone(),
                    });
                }
            }
        }
        if !report.is_ok() {
            return Err(Error::Validation(report));
        }

        // identity laws
        for (f, m) in morphisms.iter().enumerate() {
            let idc = identities[m.cod];
            let idd = identities[m.dom];
            if compose[&(idc, f)] != f {
                report.push(ValidationIssue::IdentityLawViolation {
                    morphism: m.name.clone(),
                    composite: morphisms[compose[&(idc, f)]].name.clone(),
                });
            }
            if compose[&(f, idd)] != f {
                report.push(ValidationIssue::IdentityLawViolation {
                    morphism: m.name.clone(),
                    composite: morphisms[compose[&(f, idd)]].name.clone(),
                });
            }
        }

        // associativity over all composable triples
        for h in 0..morphisms.len() {
            for g in 0..morphisms.len() {
                if morphisms[g].cod != morphisms[h].dom {
                    continue;
                }
                let hg = compose[&(h, g)];
                for f in 0..morphisms.len() {
                    if morphisms[f].cod != morphisms[g].dom {
                        continue;
                    }
                    let gf = compose[&(g, f)];
                    if compose[&(h, gf)] != compose[&(hg, f)] {
                        report.push(ValidationIssue::NonAssociativeTriple {
                            h: morphisms[h].name.clone(),
                            g: morphisms[g].name.clone(),
                            f: morphisms[f].name.clone(),
                        });
                    }
                }
            }
        }
        report.into_result()?;

        Ok(Arc::new(FinCategory::assemble(
            raw.name.clone(),
            raw.objects.clone(),
            morphisms,
            identities,
            compose,
            obj_index,
            mor_index,
        )))
    }

    fn assemble(
        name: String,
        objects: Vec<String>,
        morphisms: Vec<MorData>,
        identities: Vec<usize>,
        compose: HashMap<(usize, usize), usize>,
        obj_index: HashMap<String, usize>,
        mor_index: HashMap<String, usize>,
    ) -> FinCategory {
        let mut hom = vec![vec![Vec::new(); objects.len()]; objects.len()];
        for (i, m) in morphisms.iter().enumerate() {
            hom[m.dom][m.cod].push(i);
        }
        let mut inverses = vec![None; morphisms.len()];
        for (m, md) in morphisms.iter().enumerate() {
            for &n in &hom[md.cod][md.dom] {
                if compose[&(n, m)] == identities[md.dom] && compose[&(m, n)] == identities[md.cod]
                {
                    inverses[m] = Some(n);
                    break;
                }
            }
        }
        FinCategory {
            name,
            objects,
            morphisms,
            identities,
            compose,
            hom,
            inverses,
            obj_index,
            mor_index,
        }
    }

    /// Trusted constructor for internally derived categories (comma,
    /// algebra, opposite). Still checks the axioms, but panics instead of
    /// reporting: a failure here is a bug in the derivation.
    pub(crate) fn assemble_checked(
        name: String,
        objects: Vec<String>,
        morphisms: Vec<MorData>,
        identities: Vec<usize>,
        compose: HashMap<(usize, usize), usize>,
        budget: &Budget,
    ) -> Result<Cat> {
        if morphisms.len() > budget.max_derived_morphisms {
            return Err(Error::budget(
                format!("derived category {name}"),
                morphisms.len() as u64,
                budget.max_derived_morphisms as u64,
            ));
        }
        let obj_index = objects
            .iter()
            .enumerate()
            .map(|(i, o)| (o.clone(), i))
            .collect();
        let mor_index = morphisms
            .iter()
            .enumerate()
            .map(|(i, m)| (m.name.clone(), i))
            .collect();
        let cat = FinCategory::assemble(
            name, objects, morphisms, identities, compose, obj_index, mor_index,
        );
        debug_assert!(cat.check_axioms(), "derived category violates axioms");
        Ok(Arc::new(cat))
    }

    fn check_axioms(&self) -> bool {
        for (f, m) in self.morphisms.iter().enumerate() {
            if self.compose(self.identities[m.cod], f) != f
                || self.compose(f, self.identities[m.dom]) != f
            {
                return false;
            }
        }
        for h in 0..self.morphisms.len() {
            for g in 0..self.morphisms.len() {
                if self.morphisms[g].cod != self.morphisms[h].dom {
                    continue;
                }
                for f in 0..self.morphisms.len() {
                    if self.morphisms[f].cod != self.morphisms[g].dom {
                        continue;
                    }
                    if self.compose(h, self.compose(g, f)) != self.compose(self.compose(h, g), f) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn object_name(&self, o: usize) -> &str {
        &self.objects[o]
    }

    pub fn object_names(&self) -> &[String] {
        &self.objects
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.obj_index.get(name).copied()
    }

    pub fn mor_name(&self, m: usize) -> &str {
        &self.morphisms[m].name
    }

    pub fn mor_index(&self, name: &str) -> Option<usize> {
        self.mor_index.get(name).copied()
    }

    pub fn dom(&self, m: usize) -> usize {
        self.morphisms[m].dom
    }

    pub fn cod(&self, m: usize) -> usize {
        self.morphisms[m].cod
    }

    pub fn identity(&self, o: usize) -> usize {
        self.identities[o]
    }

    pub fn is_identity(&self, m: usize) -> bool {
        self.identities[self.morphisms[m].dom] == m && self.morphisms[m].dom == self.morphisms[m].cod
    }

    /// g . f, defined exactly when cod(f) = dom(g).
    pub fn compose(&self, g: usize, f: usize) -> usize {
        *self
            .compose
            .get(&(g, f))
            .unwrap_or_else(|| panic!("compose undefined: {} . {}", self.mor_name(g), self.mor_name(f)))
    }

    pub fn hom(&self, x: usize, y: usize) -> &[usize] {
        &self.hom[x][y]
    }

    pub fn inverse(&self, m: usize) -> Option<usize> {
        self.inverses[m]
    }

    pub fn is_iso(&self, m: usize) -> bool {
        self.inverses[m].is_some()
    }

    pub fn morphism_indices(&self) -> std::ops::Range<usize> {
        0..self.morphisms.len()
    }

    /// Same objects and morphism names, arrows reversed, composition
    /// transposed. Applying it twice restores the original exactly.
    pub fn opposite(self: &Cat, budget: &Budget) -> Result<Cat> {
        let morphisms = self
            .morphisms
            .iter()
            .map(|m| MorData {
                name: m.name.clone(),
                dom: m.cod,
                cod: m.dom,
            })
            .collect();
        let compose = self
            .compose
            .iter()
            .map(|(&(g, f), &h)| ((f, g), h))
            .collect();
        FinCategory::assemble_checked(
            format!("{}^op", self.name.trim_end_matches("^op")),
            self.objects.clone(),
            morphisms,
            self.identities.clone(),
            compose,
            budget,
        )
    }

    /// Export back to raw tables (used by the emitter and by round-trips).
    pub fn to_raw(&self) -> RawCategory {
        RawCategory {
            name: self.name.clone(),
            objects: self.objects.clone(),
            morphisms: self
                .morphisms
                .iter()
                .map(|m| {
                    (
                        m.name.clone(),
                        self.objects[m.dom].clone(),
                        self.objects[m.cod].clone(),
                    )
                })
                .collect(),
            identities: self
                .identities
                .iter()
                .enumerate()
                .map(|(o, &m)| (self.objects[o].clone(), self.morphisms[m].name.clone()))
                .collect(),
            composites: {
                let mut v: Vec<_> = self
                    .compose
                    .iter()
                    .map(|(&(g, f), &h)| {
                        (
                            self.morphisms[g].name.clone(),
                            self.morphisms[f].name.clone(),
                            self.morphisms[h].name.clone(),
                        )
                    })
                    .collect();
                v.sort();
                v
            },
        }
    }
}

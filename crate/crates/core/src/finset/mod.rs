//! The category of finite sets as a computational target. Sets carry ordered
//! token lists; constructed sets encode their provenance in the tokens
//! (tuples for limits, class representatives for colimits) so repeated runs
//! are bit-identical.

mod limits;

pub use limits::{colimit, hom_set, limit, ColimitResult, LimitResult};

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::Cat;

pub type SetOb = Arc<FinSetObject>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinSetObject {
    elems: Vec<String>,
    index: HashMap<String, usize>,
}

impl FinSetObject {
    pub fn new(elems: Vec<String>) -> Result<SetOb> {
        let mut index = HashMap::new();
        for (i, e) in elems.iter().enumerate() {
            if index.insert(e.clone(), i).is_some() {
                return Err(Error::Internal(format!("duplicate element token {e}")));
            }
        }
        Ok(Arc::new(FinSetObject { elems, index }))
    }

    pub fn empty() -> SetOb {
        FinSetObject::new(Vec::new()).unwrap()
    }

    pub fn singleton(token: impl Into<String>) -> SetOb {
        FinSetObject::new(vec![token.into()]).unwrap()
    }

    /// {0, 1, ..., n-1} with decimal tokens.
    pub fn range(n: usize) -> SetOb {
        FinSetObject::new((0..n).map(|i| i.to_string()).collect()).unwrap()
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn token(&self, i: usize) -> &str {
        &self.elems[i]
    }

    pub fn tokens(&self) -> &[String] {
        &self.elems
    }

    pub fn position(&self, token: &str) -> Option<usize> {
        self.index.get(token).copied()
    }
}

/// A function between finite sets, stored positionally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinFunction {
    pub dom: SetOb,
    pub cod: SetOb,
    map: Vec<usize>,
}

impl FinFunction {
    pub fn new(dom: SetOb, cod: SetOb, map: Vec<usize>) -> Result<FinFunction> {
        if map.len() != dom.len() {
            return Err(Error::Internal("function table length mismatch".into()));
        }
        if let Some(&bad) = map.iter().find(|&&i| i >= cod.len()) {
            return Err(Error::Internal(format!(
                "function image index {bad} out of range (codomain size {})",
                cod.len()
            )));
        }
        Ok(FinFunction { dom, cod, map })
    }

    pub fn identity(s: &SetOb) -> FinFunction {
        FinFunction {
            dom: s.clone(),
            cod: s.clone(),
            map: (0..s.len()).collect(),
        }
    }

    /// g after f.
    pub fn compose(g: &FinFunction, f: &FinFunction) -> FinFunction {
        debug_assert_eq!(f.cod, g.dom, "composition endpoint mismatch");
        FinFunction {
            dom: f.dom.clone(),
            cod: g.cod.clone(),
            map: f.map.iter().map(|&i| g.map[i]).collect(),
        }
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn mapping(&self) -> &[usize] {
        &self.map
    }

    pub fn is_bijective(&self) -> bool {
        if self.dom.len() != self.cod.len() {
            return false;
        }
        let mut seen = vec![false; self.cod.len()];
        for &i in &self.map {
            if seen[i] {
                return false;
            }
            seen[i] = true;
        }
        true
    }

    pub fn inverse(&self) -> Option<FinFunction> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0usize; self.dom.len()];
        for (i, &j) in self.map.iter().enumerate() {
            inv[j] = i;
        }
        Some(FinFunction {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            map: inv,
        })
    }

    /// Canonical token of this function: image tokens in domain order.
    pub fn token(&self) -> String {
        let images: Vec<&str> = self.map.iter().map(|&i| self.cod.token(i)).collect();
        format!("[{}]", images.join(","))
    }
}

/// A finite-set-valued diagram: a functor from a finite shape, stored as
/// per-object sets and per-morphism functions.
#[derive(Debug, Clone)]
pub struct Diagram {
    pub shape: Cat,
    pub at: Vec<SetOb>,
    pub act: Vec<FinFunction>,
}

impl Diagram {
    pub fn new(shape: Cat, at: Vec<SetOb>, act: Vec<FinFunction>) -> Result<Diagram> {
        let d = Diagram { shape, at, act };
        d.check()?;
        Ok(d)
    }

    fn check(&self) -> Result<()> {
        let shape = &self.shape;
        if self.at.len() != shape.object_count() || self.act.len() != shape.morphism_count() {
            return Err(Error::Internal("diagram table length mismatch".into()));
        }
        for m in shape.morphism_indices() {
            let f = &self.act[m];
            if f.dom != self.at[shape.dom(m)] || f.cod != self.at[shape.cod(m)] {
                return Err(Error::Internal(format!(
                    "diagram action endpoints wrong at {}",
                    shape.mor_name(m)
                )));
            }
        }
        for o in 0..shape.object_count() {
            if self.act[shape.identity(o)].map != FinFunction::identity(&self.at[o]).map {
                return Err(Error::Internal(format!(
                    "diagram does not send id_{} to the identity",
                    shape.object_name(o)
                )));
            }
        }
        for g in shape.morphism_indices() {
            for f in shape.morphism_indices() {
                if shape.cod(f) != shape.dom(g) {
                    continue;
                }
                let gf = shape.compose(g, f);
                let composed = FinFunction::compose(&self.act[g], &self.act[f]);
                if self.act[gf].map != composed.map {
                    return Err(Error::Internal(format!(
                        "diagram breaks composition at {} . {}",
                        shape.mor_name(g),
                        shape.mor_name(f)
                    )));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests;

//! Finite-set-valued presheaves and copresheaves on a finite base. The
//! presheaf category itself is never materialized; presheaves are values and
//! operations act on given values.

mod functor;
mod lex;
mod limits;
mod natset;
mod yoneda;

pub use functor::{pshfunctor_isomorphism, PshFunctor};
pub use lex::{preserves_finite_limits, LexProbeReport, LexReport};
pub use limits::{power_presheaf, presheaf_colimit, presheaf_limit, PshDiagram};
pub use natset::{
    conat_set, copresheaf_isomorphisms, nat_search_size, nat_set, presheaf_isomorphisms, NatSet,
};
pub use yoneda::{coyoneda, coyoneda_map, yoneda, yoneda_map};

use crate::error::{Error, Result};
use crate::fincat::Cat;
use crate::finset::{FinFunction, FinSetObject, SetOb};

/// A contravariant finite-set-valued functor: act(f: a -> a') maps
/// at(a') to at(a), and act(g . f) = act(f) . act(g).
#[derive(Debug, Clone, PartialEq)]
pub struct Presheaf {
    pub base: Cat,
    pub at: Vec<SetOb>,
    pub act: Vec<FinFunction>,
}

/// The covariant sibling: act(f: a -> a') maps at(a) to at(a').
#[derive(Debug, Clone, PartialEq)]
pub struct Copresheaf {
    pub base: Cat,
    pub at: Vec<SetOb>,
    pub act: Vec<FinFunction>,
}

fn check_tables(
    base: &Cat,
    at: &[SetOb],
    act: &[FinFunction],
    contravariant: bool,
) -> Result<()> {
    if at.len() != base.object_count() || act.len() != base.morphism_count() {
        return Err(Error::Internal("presheaf table length mismatch".into()));
    }
    for m in base.morphism_indices() {
        let (src, tgt) = if contravariant {
            (base.cod(m), base.dom(m))
        } else {
            (base.dom(m), base.cod(m))
        };
        if act[m].dom != at[src] || act[m].cod != at[tgt] {
            return Err(Error::Internal(format!(
                "action endpoints wrong at {}",
                base.mor_name(m)
            )));
        }
    }
    for o in 0..base.object_count() {
        if act[base.identity(o)].mapping() != FinFunction::identity(&at[o]).mapping() {
            return Err(Error::Internal(format!(
                "identity action not the identity at {}",
                base.object_name(o)
            )));
        }
    }
    for g in base.morphism_indices() {
        for f in base.morphism_indices() {
            if base.cod(f) != base.dom(g) {
                continue;
            }
            let gf = base.compose(g, f);
            let expected = if contravariant {
                FinFunction::compose(&act[f], &act[g])
            } else {
                FinFunction::compose(&act[g], &act[f])
            };
            if act[gf].mapping() != expected.mapping() {
                return Err(Error::Internal(format!(
                    "functor law broken at {} . {}",
                    base.mor_name(g),
                    base.mor_name(f)
                )));
            }
        }
    }
    Ok(())
}

impl Presheaf {
    pub fn new(base: Cat, at: Vec<SetOb>, act: Vec<FinFunction>) -> Result<Presheaf> {
        check_tables(&base, &at, &act, true)?;
        Ok(Presheaf { base, at, act })
    }

    pub fn terminal(base: &Cat) -> Presheaf {
        let at: Vec<SetOb> = (0..base.object_count())
            .map(|_| FinSetObject::singleton("*"))
            .collect();
        let act = base
            .morphism_indices()
            .map(|m| {
                FinFunction::new(at[base.cod(m)].clone(), at[base.dom(m)].clone(), vec![0])
                    .unwrap()
            })
            .collect();
        Presheaf {
            base: base.clone(),
            at,
            act,
        }
    }

    pub fn empty(base: &Cat) -> Presheaf {
        let at: Vec<SetOb> = (0..base.object_count())
            .map(|_| FinSetObject::empty())
            .collect();
        let act = base
            .morphism_indices()
            .map(|m| {
                FinFunction::new(
                    at[base.cod(m)].clone(),
                    at[base.dom(m)].clone(),
                    Vec::new(),
                )
                .unwrap()
            })
            .collect();
        Presheaf {
            base: base.clone(),
            at,
            act,
        }
    }

    pub fn constant(base: &Cat, set: &SetOb) -> Presheaf {
        let at: Vec<SetOb> = (0..base.object_count()).map(|_| set.clone()).collect();
        let act = base
            .morphism_indices()
            .map(|_| FinFunction::identity(set))
            .collect();
        Presheaf {
            base: base.clone(),
            at,
            act,
        }
    }

    /// View as a covariant functor on the given opposite base. Morphism
    /// indices agree because `opposite` preserves them.
    pub fn to_copresheaf(&self, base_op: &Cat) -> Copresheaf {
        debug_assert_eq!(base_op.morphism_count(), self.base.morphism_count());
        Copresheaf {
            base: base_op.clone(),
            at: self.at.clone(),
            act: self.act.clone(),
        }
    }

    pub fn total_size(&self) -> usize {
        self.at.iter().map(|s| s.len()).sum()
    }
}

impl Copresheaf {
    pub fn new(base: Cat, at: Vec<SetOb>, act: Vec<FinFunction>) -> Result<Copresheaf> {
        check_tables(&base, &at, &act, false)?;
        Ok(Copresheaf { base, at, act })
    }

    pub fn terminal(base: &Cat) -> Copresheaf {
        let at: Vec<SetOb> = (0..base.object_count())
            .map(|_| FinSetObject::singleton("*"))
            .collect();
        let act = base
            .morphism_indices()
            .map(|m| {
                FinFunction::new(at[base.dom(m)].clone(), at[base.cod(m)].clone(), vec![0])
                    .unwrap()
            })
            .collect();
        Copresheaf {
            base: base.clone(),
            at,
            act,
        }
    }

    pub fn to_presheaf(&self, base_op: &Cat) -> Presheaf {
        debug_assert_eq!(base_op.morphism_count(), self.base.morphism_count());
        Presheaf {
            base: base_op.clone(),
            at: self.at.clone(),
            act: self.act.clone(),
        }
    }

    pub fn total_size(&self) -> usize {
        self.at.iter().map(|s| s.len()).sum()
    }
}

/// A map of presheaves: per-object components commuting with the actions.
#[derive(Debug, Clone, PartialEq)]
pub struct PresheafMap {
    pub source: Presheaf,
    pub target: Presheaf,
    pub components: Vec<FinFunction>,
}

impl PresheafMap {
    pub fn new(source: Presheaf, target: Presheaf, components: Vec<FinFunction>) -> Result<Self> {
        let m = PresheafMap {
            source,
            target,
            components,
        };
        m.check()?;
        Ok(m)
    }

    fn check(&self) -> Result<()> {
        let base = &self.source.base;
        if self.components.len() != base.object_count() {
            return Err(Error::Internal("presheaf map table length mismatch".into()));
        }
        for a in 0..base.object_count() {
            if self.components[a].dom != self.source.at[a]
                || self.components[a].cod != self.target.at[a]
            {
                return Err(Error::Internal(format!(
                    "component endpoints wrong at {}",
                    base.object_name(a)
                )));
            }
        }
        for f in base.morphism_indices() {
            let a = base.dom(f);
            let lhs = FinFunction::compose(&self.components[a], &self.source.act[f]);
            let rhs = FinFunction::compose(&self.target.act[f], &self.components[base.cod(f)]);
            if lhs.mapping() != rhs.mapping() {
                return Err(Error::Internal(format!(
                    "presheaf map naturality fails at {}",
                    base.mor_name(f)
                )));
            }
        }
        Ok(())
    }

    pub fn identity(p: &Presheaf) -> PresheafMap {
        PresheafMap {
            source: p.clone(),
            target: p.clone(),
            components: p.at.iter().map(FinFunction::identity).collect(),
        }
    }

    /// g after f.
    pub fn compose(g: &PresheafMap, f: &PresheafMap) -> PresheafMap {
        PresheafMap {
            source: f.source.clone(),
            target: g.target.clone(),
            components: f
                .components
                .iter()
                .zip(&g.components)
                .map(|(a, b)| FinFunction::compose(b, a))
                .collect(),
        }
    }

    pub fn is_iso(&self) -> bool {
        self.components.iter().all(|c| c.is_bijective())
    }

    pub fn inverse(&self) -> Option<PresheafMap> {
        let comps: Option<Vec<FinFunction>> =
            self.components.iter().map(|c| c.inverse()).collect();
        comps.map(|components| PresheafMap {
            source: self.target.clone(),
            target: self.source.clone(),
            components,
        })
    }

    pub fn token(&self) -> String {
        let parts: Vec<String> = self.components.iter().map(|c| c.token()).collect();
        format!("{{{}}}", parts.join(";"))
    }
}

/// A map of copresheaves.
#[derive(Debug, Clone, PartialEq)]
pub struct CopresheafMap {
    pub source: Copresheaf,
    pub target: Copresheaf,
    pub components: Vec<FinFunction>,
}

impl CopresheafMap {
    pub fn new(
        source: Copresheaf,
        target: Copresheaf,
        components: Vec<FinFunction>,
    ) -> Result<Self> {
        let m = CopresheafMap {
            source,
            target,
            components,
        };
        m.check()?;
        Ok(m)
    }

    fn check(&self) -> Result<()> {
        let base = &self.source.base;
        if self.components.len() != base.object_count() {
            return Err(Error::Internal("copresheaf map table length mismatch".into()));
        }
        for a in 0..base.object_count() {
            if self.components[a].dom != self.source.at[a]
                || self.components[a].cod != self.target.at[a]
            {
                return Err(Error::Internal(format!(
                    "component endpoints wrong at {}",
                    base.object_name(a)
                )));
            }
        }
        for f in base.morphism_indices() {
            let (a, a2) = (base.dom(f), base.cod(f));
            let lhs = FinFunction::compose(&self.components[a2], &self.source.act[f]);
            let rhs = FinFunction::compose(&self.target.act[f], &self.components[a]);
            if lhs.mapping() != rhs.mapping() {
                return Err(Error::Internal(format!(
                    "copresheaf map naturality fails at {}",
                    base.mor_name(f)
                )));
            }
        }
        Ok(())
    }

    pub fn compose(g: &CopresheafMap, f: &CopresheafMap) -> CopresheafMap {
        CopresheafMap {
            source: f.source.clone(),
            target: g.target.clone(),
            components: f
                .components
                .iter()
                .zip(&g.components)
                .map(|(a, b)| FinFunction::compose(b, a))
                .collect(),
        }
    }

    pub fn is_iso(&self) -> bool {
        self.components.iter().all(|c| c.is_bijective())
    }

    pub fn token(&self) -> String {
        let parts: Vec<String> = self.components.iter().map(|c| c.token()).collect();
        format!("{{{}}}", parts.join(";"))
    }
}

#[cfg(test)]
mod tests;

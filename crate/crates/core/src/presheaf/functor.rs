use super::natset::presheaf_isomorphisms;
use super::{Presheaf, PresheafMap};
use crate::budget::{Budget, SearchMeter};
use crate::error::{Error, Result};
use crate::fincat::Cat;

/// A presheaf-valued functor on a finite category: one presheaf per object
/// of `source`, one presheaf map per morphism, functor laws checked.
#[derive(Debug, Clone)]
pub struct PshFunctor {
    pub name: String,
    pub source: Cat,
    pub at: Vec<Presheaf>,
    pub act: Vec<PresheafMap>,
}

impl PshFunctor {
    pub fn new(
        name: impl Into<String>,
        source: Cat,
        at: Vec<Presheaf>,
        act: Vec<PresheafMap>,
    ) -> Result<PshFunctor> {
        let f = PshFunctor {
            name: name.into(),
            source,
            at,
            act,
        };
        f.check()?;
        Ok(f)
    }

    fn check(&self) -> Result<()> {
        if self.at.len() != self.source.object_count()
            || self.act.len() != self.source.morphism_count()
        {
            return Err(Error::Internal("presheaf functor table mismatch".into()));
        }
        for m in self.source.morphism_indices() {
            if self.act[m].source != self.at[self.source.dom(m)]
                || self.act[m].target != self.at[self.source.cod(m)]
            {
                return Err(Error::Internal(format!(
                    "presheaf functor endpoints wrong at {}",
                    self.source.mor_name(m)
                )));
            }
        }
        for o in 0..self.source.object_count() {
            let id = &self.act[self.source.identity(o)];
            let expect = PresheafMap::identity(&self.at[o]);
            if id.components.iter().zip(&expect.components).any(|(a, b)| a.mapping() != b.mapping())
            {
                return Err(Error::Internal("presheaf functor identity broken".into()));
            }
        }
        for g in self.source.morphism_indices() {
            for f in self.source.morphism_indices() {
                if self.source.cod(f) != self.source.dom(g) {
                    continue;
                }
                let gf = self.source.compose(g, f);
                let comp = PresheafMap::compose(&self.act[g], &self.act[f]);
                if self.act[gf]
                    .components
                    .iter()
                    .zip(&comp.components)
                    .any(|(a, b)| a.mapping() != b.mapping())
                {
                    return Err(Error::Internal("presheaf functor composition broken".into()));
                }
            }
        }
        Ok(())
    }
}

/// Search for a natural isomorphism between presheaf-valued functors:
/// candidate components are invertible presheaf maps per object, pruned on
/// every naturality square as soon as both ends are chosen. Deterministic,
/// first witness in canonical order.
pub fn pshfunctor_isomorphism(
    f: &PshFunctor,
    g: &PshFunctor,
    budget: &Budget,
) -> Result<Option<Vec<PresheafMap>>> {
    let base = &f.source;
    let mut candidates: Vec<Vec<PresheafMap>> = Vec::with_capacity(base.object_count());
    for b in 0..base.object_count() {
        let isos = presheaf_isomorphisms(&f.at[b], &g.at[b], budget)?;
        if isos.is_empty() {
            return Ok(None);
        }
        candidates.push(isos);
    }
    let mut chosen: Vec<Option<usize>> = vec![None; base.object_count()];
    let mut meter = SearchMeter::new(budget, "pshfunctor_isomorphism");

    fn square_ok(
        f: &PshFunctor,
        g: &PshFunctor,
        candidates: &[Vec<PresheafMap>],
        chosen: &[Option<usize>],
        m: usize,
    ) -> bool {
        let base = &f.source;
        let (b, b2) = (base.dom(m), base.cod(m));
        let (Some(cb), Some(cb2)) = (chosen[b], chosen[b2]) else {
            return true;
        };
        let lhs = PresheafMap::compose(&candidates[b2][cb2], &f.act[m]);
        let rhs = PresheafMap::compose(&g.act[m], &candidates[b][cb]);
        lhs.components
            .iter()
            .zip(&rhs.components)
            .all(|(a, b)| a.mapping() == b.mapping())
    }

    fn rec(
        f: &PshFunctor,
        g: &PshFunctor,
        candidates: &[Vec<PresheafMap>],
        chosen: &mut Vec<Option<usize>>,
        next: usize,
        meter: &mut SearchMeter,
    ) -> Result<Option<Vec<PresheafMap>>> {
        let base = &f.source;
        if next == base.object_count() {
            return Ok(Some(
                chosen
                    .iter()
                    .enumerate()
                    .map(|(b, c)| candidates[b][c.unwrap()].clone())
                    .collect(),
            ));
        }
        for c in 0..candidates[next].len() {
            meter.tick()?;
            chosen[next] = Some(c);
            let ok = base
                .morphism_indices()
                .filter(|&m| base.dom(m).max(base.cod(m)) == next)
                .all(|m| square_ok(f, g, candidates, chosen, m));
            if ok {
                if let Some(found) = rec(f, g, candidates, chosen, next + 1, meter)? {
                    return Ok(Some(found));
                }
            }
            chosen[next] = None;
        }
        Ok(None)
    }
    rec(f, g, &candidates, &mut chosen, 0, &mut meter)
}

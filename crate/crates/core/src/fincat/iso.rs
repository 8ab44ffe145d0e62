use super::functor::same_cat;
use super::{Functor, NatTransformation};
use crate::budget::{Budget, SearchMeter};
use crate::error::{Error, Result};

/// Enumerate natural families F => G by choosing components in object order
/// and pruning every naturality square as soon as both ends are assigned.
/// Results come out in lexicographic component order; `only_iso` restricts
/// candidates to invertible components; `cap` bounds how many are collected
/// (None collects all).
pub fn natural_families(
    f: &Functor,
    g: &Functor,
    only_iso: bool,
    cap: Option<usize>,
    budget: &Budget,
) -> Result<Vec<NatTransformation>> {
    if !same_cat(f.source(), g.source()) || !same_cat(f.target(), g.target()) {
        return Err(Error::Internal(
            "natural family search between non-parallel functors".into(),
        ));
    }
    let base = f.source();
    let amb = f.target();
    // candidate components per object
    let mut candidates: Vec<Vec<usize>> = Vec::with_capacity(base.object_count());
    for a in 0..base.object_count() {
        let all = amb.hom(f.obj(a), g.obj(a));
        let cs: Vec<usize> = if only_iso {
            all.iter().copied().filter(|&m| amb.is_iso(m)).collect()
        } else {
            all.to_vec()
        };
        if cs.is_empty() {
            return Ok(Vec::new());
        }
        candidates.push(cs);
    }

    let mut meter = SearchMeter::new(budget, "natural_families");
    let mut chosen = vec![usize::MAX; base.object_count()];
    let mut out = Vec::new();
    search(
        f,
        g,
        &candidates,
        &mut chosen,
        0,
        &mut out,
        cap,
        &mut meter,
    )?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn search(
    f: &Functor,
    g: &Functor,
    candidates: &[Vec<usize>],
    chosen: &mut Vec<usize>,
    next: usize,
    out: &mut Vec<NatTransformation>,
    cap: Option<usize>,
    meter: &mut SearchMeter,
) -> Result<()> {
    let base = f.source();
    let amb = f.target();
    if next == base.object_count() {
        let t = NatTransformation::new(f.clone(), g.clone(), chosen.clone())
            .expect("pruned family fails naturality");
        out.push(t);
        return Ok(());
    }
    for &c in &candidates[next] {
        meter.tick()?;
        chosen[next] = c;
        let mut ok = true;
        'squares: for m in base.morphism_indices() {
            let (a, a2) = (base.dom(m), base.cod(m));
            if a.max(a2) != next || chosen[a] == usize::MAX || chosen[a2] == usize::MAX {
                continue;
            }
            let lhs = amb.compose(g.mor(m), chosen[a]);
            let rhs = amb.compose(chosen[a2], f.mor(m));
            if lhs != rhs {
                ok = false;
                break 'squares;
            }
        }
        if ok {
            search(f, g, candidates, chosen, next + 1, out, cap, meter)?;
            if let Some(c) = cap {
                if out.len() >= c {
                    chosen[next] = usize::MAX;
                    return Ok(());
                }
            }
        }
        chosen[next] = usize::MAX;
    }
    Ok(())
}

/// First natural isomorphism F => G in canonical order, or None after an
/// exhaustive search.
pub fn find_natural_isomorphism(
    f: &Functor,
    g: &Functor,
    budget: &Budget,
) -> Result<Option<NatTransformation>> {
    Ok(natural_families(f, g, true, Some(1), budget)?.into_iter().next())
}

/// All natural isomorphisms F => G, canonically ordered.
pub fn natural_isomorphisms(
    f: &Functor,
    g: &Functor,
    budget: &Budget,
) -> Result<Vec<NatTransformation>> {
    natural_families(f, g, true, None, budget)
}

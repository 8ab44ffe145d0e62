use crate::budget::{Budget, SearchMeter};
use crate::error::{Error, Result};
use crate::fincat::Functor;

/// A cone over a diagram d: shape -> C. `legs[o]` is a morphism
/// apex -> d(o) in C, indexed by shape object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone {
    pub apex: usize,
    pub legs: Vec<usize>,
}

/// A cocone under a diagram: `legs[o]` is a morphism d(o) -> apex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cocone {
    pub apex: usize,
    pub legs: Vec<usize>,
}

/// All cones over d, grouped in apex order then lexicographic leg order.
/// Legs are chosen object by object with every connecting morphism checked
/// as soon as both of its endpoints have legs.
pub fn enumerate_cones(d: &Functor, budget: &Budget) -> Result<Vec<Cone>> {
    let shape = d.source();
    let target = d.target();
    let mut out = Vec::new();
    let mut meter = SearchMeter::new(budget, "enumerate_cones");
    for apex in 0..target.object_count() {
        let mut legs = vec![usize::MAX; shape.object_count()];
        cone_rec(d, apex, &mut legs, 0, &mut out, &mut meter)?;
    }
    Ok(out)
}

fn cone_rec(
    d: &Functor,
    apex: usize,
    legs: &mut Vec<usize>,
    next: usize,
    out: &mut Vec<Cone>,
    meter: &mut SearchMeter,
) -> Result<()> {
    let shape = d.source();
    let target = d.target();
    if next == shape.object_count() {
        out.push(Cone {
            apex,
            legs: legs.clone(),
        });
        return Ok(());
    }
    for &leg in target.hom(apex, d.obj(next)) {
        meter.tick()?;
        legs[next] = leg;
        let ok = shape.morphism_indices().all(|m| {
            let (o, o2) = (shape.dom(m), shape.cod(m));
            if o.max(o2) != next || legs[o] == usize::MAX || legs[o2] == usize::MAX {
                return true;
            }
            target.compose(d.mor(m), legs[o]) == legs[o2]
        });
        if ok {
            cone_rec(d, apex, legs, next + 1, out, meter)?;
        }
        legs[next] = usize::MAX;
    }
    Ok(())
}

/// Morphisms h: from -> cone.apex making every leg triangle commute.
pub fn factorizations(d: &Functor, cone: &Cone, from: &Cone) -> Vec<usize> {
    let target = d.target();
    target
        .hom(from.apex, cone.apex)
        .iter()
        .copied()
        .filter(|&h| {
            cone.legs
                .iter()
                .zip(&from.legs)
                .all(|(&tl, &fl)| target.compose(tl, h) == fl)
        })
        .collect()
}

/// The terminal cone over d, if one exists: enumerates all cones, filters
/// candidates by the cardinality constraint |cones(apex x)| = |hom(x, t)|,
/// then verifies unique factorization of every cone. Canonical-first.
pub fn limit_in_category(d: &Functor, budget: &Budget) -> Result<Option<Cone>> {
    let cones = enumerate_cones(d, budget)?;
    let target = d.target();
    let mut per_apex = vec![0usize; target.object_count()];
    for c in &cones {
        per_apex[c.apex] += 1;
    }
    'candidates: for cand in &cones {
        for x in 0..target.object_count() {
            if target.hom(x, cand.apex).len() != per_apex[x] {
                continue 'candidates;
            }
        }
        for other in &cones {
            if factorizations(d, cand, other).len() != 1 {
                continue 'candidates;
            }
        }
        return Ok(Some(cand.clone()));
    }
    Ok(None)
}

/// Unique factorization of `from` through a terminal cone. Errors if the
/// cone is not terminal after all; that signals a bug upstream.
pub fn factor_through_terminal(d: &Functor, terminal: &Cone, from: &Cone) -> Result<usize> {
    let f = factorizations(d, terminal, from);
    match f.as_slice() {
        [h] => Ok(*h),
        _ => Err(Error::Internal(format!(
            "expected exactly one factorization, found {}",
            f.len()
        ))),
    }
}

/// All cocones under d, via cones in the opposite world.
pub fn enumerate_cocones(d: &Functor, budget: &Budget) -> Result<Vec<Cocone>> {
    let (d_op, _, _) = dualize(d, budget)?;
    let cones = enumerate_cones(&d_op, budget)?;
    Ok(cones
        .into_iter()
        .map(|c| Cocone {
            apex: c.apex,
            legs: c.legs,
        })
        .collect())
}

/// The initial cocone under d (the colimit), if one exists.
pub fn colimit_in_category(d: &Functor, budget: &Budget) -> Result<Option<Cocone>> {
    let (d_op, _, _) = dualize(d, budget)?;
    Ok(limit_in_category(&d_op, budget)?.map(|c| Cocone {
        apex: c.apex,
        legs: c.legs,
    }))
}

/// Cocone factorization: h: cocone.apex -> to.apex with h . legs commuting.
pub fn cofactorizations(d: &Functor, cocone: &Cocone, to: &Cocone) -> Vec<usize> {
    let target = d.target();
    target
        .hom(cocone.apex, to.apex)
        .iter()
        .copied()
        .filter(|&h| {
            cocone
                .legs
                .iter()
                .zip(&to.legs)
                .all(|(&cl, &tl)| target.compose(h, cl) == tl)
        })
        .collect()
}

pub fn factor_through_initial(d: &Functor, initial: &Cocone, to: &Cocone) -> Result<usize> {
    let f = cofactorizations(d, initial, to);
    match f.as_slice() {
        [h] => Ok(*h),
        _ => Err(Error::Internal(format!(
            "expected exactly one cofactorization, found {}",
            f.len()
        ))),
    }
}

/// The same diagram read inside the opposite categories; morphism and object
/// indices are preserved by `opposite`, so tables carry over unchanged.
fn dualize(d: &Functor, budget: &Budget) -> Result<(Functor, crate::fincat::Cat, crate::fincat::Cat)> {
    let shape_op = d.source().opposite(budget)?;
    let target_op = d.target().opposite(budget)?;
    let f = Functor::new(
        format!("{}^op", d.name),
        shape_op.clone(),
        target_op.clone(),
        d.on_objects().to_vec(),
        d.on_morphisms().to_vec(),
    )?;
    Ok((f, shape_op, target_op))
}

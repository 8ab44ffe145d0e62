use super::{Copresheaf, CopresheafMap, Presheaf, PresheafMap};
use crate::budget::{Budget, SearchMeter};
use crate::error::{Error, Result};
use crate::finset::{FinFunction, FinSetObject, SetOb};

/// The set of all natural transformations P => Q, reified: element i of
/// `set` is the canonical token of `families[i]`.
#[derive(Debug, Clone)]
pub struct NatSet {
    pub set: SetOb,
    pub families: Vec<Vec<FinFunction>>,
}

impl NatSet {
    pub fn len(&self) -> usize {
        self.families.len()
    }

    pub fn is_empty(&self) -> bool {
        self.families.is_empty()
    }

    pub fn position_of(&self, family: &[FinFunction]) -> Option<usize> {
        let token = family_token(family);
        self.set.position(&token)
    }
}

pub(crate) fn family_token(family: &[FinFunction]) -> String {
    let parts: Vec<String> = family.iter().map(|c| c.token()).collect();
    format!("{{{}}}", parts.join(";"))
}

/// Exhaustively enumerate natural families P => Q by constraint propagation:
/// components are chosen object by object and every naturality square is
/// pruned as soon as both of its components exist. Objects are visited in
/// ascending |Q(a)| order to fail fast; the result is re-sorted canonically,
/// so the heuristic order is unobservable.
pub fn nat_set(p: &Presheaf, q: &Presheaf, budget: &Budget) -> Result<NatSet> {
    let base = &p.base;
    let n = base.object_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&a| (q.at[a].len(), a));

    // candidate component tables per object, enumerated lazily as odometers
    // would be; here the per-object space |Q(a)|^|P(a)| is walked in lex order
    let mut chosen: Vec<Option<Vec<usize>>> = vec![None; n];
    let mut out: Vec<Vec<FinFunction>> = Vec::new();
    let mut meter = SearchMeter::new(budget, "nat_set");

    // contravariant naturality: for f: a -> a', beta_a . P(f) = Q(f) . beta_{a'}
    let square_ok = |chosen: &[Option<Vec<usize>>], f: usize| -> bool {
        let (a, a2) = (base.dom(f), base.cod(f));
        let (Some(ca), Some(ca2)) = (&chosen[a], &chosen[a2]) else {
            return true;
        };
        (0..p.at[a2].len()).all(|x| ca[p.act[f].apply(x)] == q.act[f].apply(ca2[x]))
    };

    fn rec(
        p: &Presheaf,
        q: &Presheaf,
        order: &[usize],
        pos: usize,
        chosen: &mut Vec<Option<Vec<usize>>>,
        out: &mut Vec<Vec<FinFunction>>,
        meter: &mut SearchMeter,
        square_ok: &dyn Fn(&[Option<Vec<usize>>], usize) -> bool,
    ) -> Result<()> {
        let base = &p.base;
        if pos == order.len() {
            let family: Vec<FinFunction> = (0..base.object_count())
                .map(|a| {
                    FinFunction::new(
                        p.at[a].clone(),
                        q.at[a].clone(),
                        chosen[a].clone().unwrap(),
                    )
                    .unwrap()
                })
                .collect();
            out.push(family);
            return Ok(());
        }
        let a = order[pos];
        let (dom_n, cod_n) = (p.at[a].len(), q.at[a].len());
        if dom_n > 0 && cod_n == 0 {
            return Ok(());
        }
        let mut table = vec![0usize; dom_n];
        loop {
            meter.tick()?;
            chosen[a] = Some(table.clone());
            let ok = base
                .morphism_indices()
                .filter(|&f| base.dom(f) == a || base.cod(f) == a)
                .all(|f| square_ok(chosen, f));
            if ok {
                rec(p, q, order, pos + 1, chosen, out, meter, square_ok)?;
            }
            chosen[a] = None;
            // odometer
            let mut i = dom_n;
            loop {
                if i == 0 {
                    return Ok(());
                }
                i -= 1;
                table[i] += 1;
                if table[i] < cod_n {
                    break;
                }
                table[i] = 0;
            }
        }
    }
    rec(p, q, &order, 0, &mut chosen, &mut out, &mut meter, &square_ok)?;

    out.sort_by_key(|f| family_token(f));
    let tokens: Vec<String> = out.iter().map(|f| family_token(f)).collect();
    let set = FinSetObject::new(tokens)?;
    Ok(NatSet { set, families: out })
}

/// Natural transformations between covariant functors, same discipline.
pub fn conat_set(p: &Copresheaf, q: &Copresheaf, budget: &Budget) -> Result<NatSet> {
    let base = &p.base;
    let n = base.object_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&a| (q.at[a].len(), a));

    let mut chosen: Vec<Option<Vec<usize>>> = vec![None; n];
    let mut out: Vec<Vec<FinFunction>> = Vec::new();
    let mut meter = SearchMeter::new(budget, "conat_set");

    // covariant naturality: for f: a -> a', beta_{a'} . P(f) = Q(f) . beta_a
    let square_ok = |chosen: &[Option<Vec<usize>>], f: usize| -> bool {
        let (a, a2) = (base.dom(f), base.cod(f));
        let (Some(ca), Some(ca2)) = (&chosen[a], &chosen[a2]) else {
            return true;
        };
        (0..p.at[a].len()).all(|x| ca2[p.act[f].apply(x)] == q.act[f].apply(ca[x]))
    };

    fn rec(
        p: &Copresheaf,
        q: &Copresheaf,
        order: &[usize],
        pos: usize,
        chosen: &mut Vec<Option<Vec<usize>>>,
        out: &mut Vec<Vec<FinFunction>>,
        meter: &mut SearchMeter,
        square_ok: &dyn Fn(&[Option<Vec<usize>>], usize) -> bool,
    ) -> Result<()> {
        let base = &p.base;
        if pos == order.len() {
            let family: Vec<FinFunction> = (0..base.object_count())
                .map(|a| {
                    FinFunction::new(
                        p.at[a].clone(),
                        q.at[a].clone(),
                        chosen[a].clone().unwrap(),
                    )
                    .unwrap()
                })
                .collect();
            out.push(family);
            return Ok(());
        }
        let a = order[pos];
        let (dom_n, cod_n) = (p.at[a].len(), q.at[a].len());
        if dom_n > 0 && cod_n == 0 {
            return Ok(());
        }
        let mut table = vec![0usize; dom_n];
        loop {
            meter.tick()?;
            chosen[a] = Some(table.clone());
            let ok = base
                .morphism_indices()
                .filter(|&f| base.dom(f) == a || base.cod(f) == a)
                .all(|f| square_ok(chosen, f));
            if ok {
                rec(p, q, order, pos + 1, chosen, out, meter, square_ok)?;
            }
            chosen[a] = None;
            let mut i = dom_n;
            loop {
                if i == 0 {
                    return Ok(());
                }
                i -= 1;
                table[i] += 1;
                if table[i] < cod_n {
                    break;
                }
                table[i] = 0;
            }
        }
    }
    rec(p, q, &order, 0, &mut chosen, &mut out, &mut meter, &square_ok)?;

    out.sort_by_key(|f| family_token(f));
    let tokens: Vec<String> = out.iter().map(|f| family_token(f)).collect();
    let set = FinSetObject::new(tokens)?;
    Ok(NatSet { set, families: out })
}

/// All invertible presheaf maps P -> Q, canonically ordered.
pub fn presheaf_isomorphisms(p: &Presheaf, q: &Presheaf, budget: &Budget) -> Result<Vec<PresheafMap>> {
    let nats = nat_set(p, q, budget)?;
    nats.families
        .into_iter()
        .filter(|f| f.iter().all(|c| c.is_bijective()))
        .map(|components| PresheafMap::new(p.clone(), q.clone(), components))
        .collect()
}

/// All invertible copresheaf maps P -> Q, canonically ordered.
pub fn copresheaf_isomorphisms(
    p: &Copresheaf,
    q: &Copresheaf,
    budget: &Budget,
) -> Result<Vec<CopresheafMap>> {
    let nats = conat_set(p, q, budget)?;
    nats.families
        .into_iter()
        .filter(|f| f.iter().all(|c| c.is_bijective()))
        .map(|components| CopresheafMap::new(p.clone(), q.clone(), components))
        .collect()
}

/// Guard for the worst-case component space before a nat_set call; callers
/// that sweep generated instances use it to skip rather than abort.
pub fn nat_search_size(p: &Presheaf, q: &Presheaf) -> Result<u64> {
    let mut total: u64 = 1;
    for a in 0..p.base.object_count() {
        let space = (q.at[a].len() as u64)
            .checked_pow(p.at[a].len() as u32)
            .ok_or_else(|| Error::budget("nat_search_size", u64::MAX, 0))?;
        total = total
            .checked_mul(space.max(1))
            .ok_or_else(|| Error::budget("nat_search_size", u64::MAX, 0))?;
    }
    Ok(total)
}

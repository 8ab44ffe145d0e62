//! Deterministic instance generators: named lattices, skeletal finite sets,
//! seeded random categories and presheaves, and the exhaustive lattice
//! enumerator behind the sweep corpora. Outputs always pass validation.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::budget::Budget;
use crate::error::Result;
use crate::fincat::{Cat, FinCategory, RawCategory};
use crate::finset::{FinFunction, FinSetObject};
use crate::presheaf::Presheaf;

/// Build the thin category of a finite poset. `leq` must be a partial order
/// on positions of `names`.
pub fn poset_category(
    name: &str,
    names: &[&str],
    leq: impl Fn(usize, usize) -> bool,
    budget: &Budget,
) -> Result<Cat> {
    let mut raw = RawCategory {
        name: name.to_string(),
        objects: names.iter().map(|s| s.to_string()).collect(),
        ..Default::default()
    };
    let n = names.len();
    let mor_name = |i: usize, j: usize| {
        if i == j {
            format!("id_{}", names[i])
        } else {
            format!("le_{}_{}", names[i], names[j])
        }
    };
    for i in 0..n {
        for j in 0..n {
            if i == j || leq(i, j) {
                raw.morphisms
                    .push((mor_name(i, j), names[i].into(), names[j].into()));
            }
        }
    }
    for i in 0..n {
        raw.identities.push((names[i].into(), mor_name(i, i)));
    }
    for i in 0..n {
        for j in 0..n {
            if !(i == j || leq(i, j)) {
                continue;
            }
            for k in 0..n {
                if !(j == k || leq(j, k)) {
                    continue;
                }
                raw.composites
                    .push((mor_name(j, k), mor_name(i, j), mor_name(i, k)));
            }
        }
    }
    FinCategory::validate(&raw, budget)
}

/// The n-element chain 0 <= 1 <= ... <= n-1.
pub fn chain(n: usize, budget: &Budget) -> Result<Cat> {
    let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    poset_category(&format!("chain{n}"), &refs, |i, j| i < j, budget)
}

/// The four-element diamond lattice bot < a, b < top with a, b incomparable.
pub fn diamond(budget: &Budget) -> Result<Cat> {
    let names = ["bot", "a", "b", "top"];
    poset_category(
        "diamond",
        &names,
        |i, j| i == 0 && j != 0 || j == 3 && i != 3,
        budget,
    )
}

/// The power-set lattice of an n-element set, objects named by bitmask.
pub fn powerset(n: u32, budget: &Budget) -> Result<Cat> {
    let size = 1usize << n;
    let names: Vec<String> = (0..size).map(|m| format!("p{m}")).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    poset_category(
        &format!("powerset{n}"),
        &refs,
        |i, j| i != j && i & j == i,
        budget,
    )
}

/// Skeletal finite sets of size <= max: objects 0..=max, morphisms all
/// functions, composition by function composition.
pub fn finset_skeleton(max: usize, budget: &Budget) -> Result<Cat> {
    let mut raw = RawCategory {
        name: format!("finset{max}"),
        objects: (0..=max).map(|i| i.to_string()).collect(),
        ..Default::default()
    };
    // every function m -> n as its image table
    let mut tables: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    for m in 0..=max {
        for n in 0..=max {
            if m == 0 {
                tables.push((m, n, Vec::new()));
                continue;
            }
            if n == 0 {
                continue;
            }
            let mut t = vec![0usize; m];
            loop {
                tables.push((m, n, t.clone()));
                let mut i = m;
                loop {
                    if i == 0 {
                        break;
                    }
                    i -= 1;
                    t[i] += 1;
                    if t[i] < n {
                        break;
                    }
                    t[i] = 0;
                }
                if t.iter().all(|&v| v == 0) {
                    break;
                }
            }
        }
    }
    let fname = |m: usize, n: usize, t: &[usize]| {
        if m == n && t.iter().enumerate().all(|(i, &v)| i == v) {
            format!("id{m}")
        } else if m == 0 {
            format!("f0to{n}_e")
        } else {
            let digits: String = t.iter().map(|v| v.to_string()).collect();
            format!("f{m}to{n}_{digits}")
        }
    };
    for (m, n, t) in &tables {
        raw.morphisms
            .push((fname(*m, *n, t), m.to_string(), n.to_string()));
    }
    for m in 0..=max {
        let idt: Vec<usize> = (0..m).collect();
        raw.identities.push((m.to_string(), fname(m, m, &idt)));
    }
    for (gm, gn, gt) in &tables {
        for (fm, fn_, ft) in &tables {
            if fn_ != gm {
                continue;
            }
            let comp: Vec<usize> = ft.iter().map(|&i| gt[i]).collect();
            raw.composites.push((
                fname(*gm, *gn, gt),
                fname(*fm, *fn_, ft),
                fname(*fm, *gn, &comp),
            ));
        }
    }
    FinCategory::validate(&raw, budget)
}

/// A seeded random category: a random poset, sometimes with one extra
/// endomorphism (an involution or an idempotent) glued onto an object with
/// pass-through composition. Identical (bounds, seed) give identical output.
pub fn random_category(n_objects: usize, seed: u64, budget: &Budget) -> Result<Cat> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_ca7);
    let n = n_objects.max(1);
    let mut rank: Vec<usize> = (0..n).collect();
    rank.shuffle(&mut rng);
    let mut leq = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            if rank[i] < rank[j] && rng.gen_bool(0.5) {
                leq[i][j] = true;
            }
        }
    }
    // transitive closure
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if leq[i][k] && leq[k][j] {
                    leq[i][j] = true;
                }
            }
        }
    }
    let twist: Option<(usize, bool)> = if rng.gen_bool(0.5) {
        Some((rng.gen_range(0..n), rng.gen_bool(0.5)))
    } else {
        None
    };

    let names: Vec<String> = (0..n).map(|i| format!("o{i}")).collect();
    let mut raw = RawCategory {
        name: format!("rand{n}s{seed}"),
        objects: names.clone(),
        ..Default::default()
    };
    let mor_name = |i: usize, j: usize| {
        if i == j {
            format!("id_o{i}")
        } else {
            format!("m_{i}_{j}")
        }
    };
    let rel = |i: usize, j: usize| i == j || leq[i][j];
    for i in 0..n {
        for j in 0..n {
            if rel(i, j) {
                raw.morphisms
                    .push((mor_name(i, j), names[i].clone(), names[j].clone()));
            }
        }
    }
    if let Some((x, _)) = twist {
        raw.morphisms
            .push((format!("e_o{x}"), names[x].clone(), names[x].clone()));
    }
    for i in 0..n {
        raw.identities.push((names[i].clone(), mor_name(i, i)));
    }
    for i in 0..n {
        for j in 0..n {
            if !rel(i, j) {
                continue;
            }
            for k in 0..n {
                if rel(j, k) {
                    raw.composites
                        .push((mor_name(j, k), mor_name(i, j), mor_name(i, k)));
                }
            }
        }
    }
    if let Some((x, involutive)) = twist {
        let e = format!("e_o{x}");
        let ee = if involutive { mor_name(x, x) } else { e.clone() };
        raw.composites.push((e.clone(), e.clone(), ee));
        raw.composites.push((e.clone(), mor_name(x, x), e.clone()));
        raw.composites.push((mor_name(x, x), e.clone(), e.clone()));
        for u in 0..n {
            if u != x && rel(u, x) {
                raw.composites
                    .push((e.clone(), mor_name(u, x), mor_name(u, x)));
            }
            if u != x && rel(x, u) {
                raw.composites
                    .push((mor_name(x, u), e.clone(), mor_name(x, u)));
            }
        }
    }
    FinCategory::validate(&raw, budget)
}

/// All lattices with exactly n elements, one representative per isomorphism
/// class, each realized as a thin category. Objects are named 0..n-1 in a
/// linear extension order.
pub fn all_lattices(n: usize, budget: &Budget) -> Result<Vec<Cat>> {
    assert!(n >= 1 && n <= 6, "lattice enumeration is sized for n <= 6");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    let mut state = vec![0u8; pairs.len()];
    loop {
        // decode pair states: 0 incomparable, 1 i<j, 2 j<i
        let mut leq = vec![vec![false; n]; n];
        for (p, &(i, j)) in pairs.iter().enumerate() {
            match state[p] {
                1 => leq[i][j] = true,
                2 => leq[j][i] = true,
                _ => {}
            }
        }
        if is_transitive(&leq) && is_lattice(&leq) {
            let canon = canonical_form(&leq);
            if seen.insert(canon) {
                let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
                let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
                let idx = out.len();
                out.push(poset_category(
                    &format!("lat{n}_{idx}"),
                    &refs,
                    |i, j| leq[i][j],
                    budget,
                )?);
            }
        }
        // odometer
        let mut p = 0;
        loop {
            if p == pairs.len() {
                return Ok(out);
            }
            state[p] += 1;
            if state[p] < 3 {
                break;
            }
            state[p] = 0;
            p += 1;
        }
        if pairs.is_empty() {
            return Ok(out);
        }
    }
}

fn is_transitive(leq: &[Vec<bool>]) -> bool {
    let n = leq.len();
    for i in 0..n {
        for j in 0..n {
            if !leq[i][j] {
                continue;
            }
            for k in 0..n {
                if leq[j][k] && !leq[i][k] {
                    return false;
                }
            }
        }
    }
    true
}

fn is_lattice(leq: &[Vec<bool>]) -> bool {
    let n = leq.len();
    let le = |i: usize, j: usize| i == j || leq[i][j];
    for a in 0..n {
        for b in (a + 1)..n {
            // unique greatest lower bound
            let lowers: Vec<usize> = (0..n).filter(|&x| le(x, a) && le(x, b)).collect();
            if lowers
                .iter()
                .filter(|&&m| lowers.iter().all(|&x| le(x, m)))
                .count()
                != 1
            {
                return false;
            }
            let uppers: Vec<usize> = (0..n).filter(|&x| le(a, x) && le(b, x)).collect();
            if uppers
                .iter()
                .filter(|&&m| uppers.iter().all(|&x| le(m, x)))
                .count()
                != 1
            {
                return false;
            }
        }
    }
    true
}

fn canonical_form(leq: &[Vec<bool>]) -> u64 {
    let n = leq.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    permute(&mut perm, 0, &mut |p| {
        let mut bits = 0u64;
        for i in 0..n {
            for j in 0..n {
                if leq[p[i]][p[j]] {
                    bits |= 1 << (i * n + j);
                }
            }
        }
        if bits < best {
            best = bits;
        }
    });
    best
}

fn permute(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

/// A seeded random presheaf on `base`: a coproduct of random representables
/// quotiented by randomly chosen element identifications, closed under the
/// presheaf action. Always satisfies the functor laws by construction.
pub fn random_presheaf(base: &Cat, seed: u64, budget: &Budget) -> Result<Presheaf> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e3779b9);
    if base.object_count() == 0 {
        return Presheaf::new(base.clone(), Vec::new(), Vec::new());
    }
    let k = rng.gen_range(1..=3usize);
    let picks: Vec<usize> = (0..k)
        .map(|_| rng.gen_range(0..base.object_count()))
        .collect();

    // coproduct of representables: at(b) = disjoint union of hom(b, a_i)
    let mut at_elems: Vec<Vec<(usize, usize)>> = vec![Vec::new(); base.object_count()];
    for b in 0..base.object_count() {
        for (i, &a) in picks.iter().enumerate() {
            for &m in base.hom(b, a) {
                at_elems[b].push((i, m));
            }
        }
    }

    // random identifications within an object's fiber, closed under the
    // contravariant action via union-find on all (object, element) pairs
    let mut offsets = vec![0usize; base.object_count() + 1];
    for b in 0..base.object_count() {
        offsets[b + 1] = offsets[b] + at_elems[b].len();
    }
    let total = offsets[base.object_count()];
    let mut parent: Vec<usize> = (0..total).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
        }
        parent[i]
    }
    let union = |parent: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra < rb {
            parent[rb] = ra;
        } else {
            parent[ra] = rb;
        }
    };
    let n_idents = rng.gen_range(0..=2usize);
    for _ in 0..n_idents {
        let b = rng.gen_range(0..base.object_count());
        if at_elems[b].len() < 2 {
            continue;
        }
        let x = rng.gen_range(0..at_elems[b].len());
        let y = rng.gen_range(0..at_elems[b].len());
        union(&mut parent, offsets[b] + x, offsets[b] + y);
    }
    // close under action: x ~ y at b forces act(f)(x) ~ act(f)(y) for all
    // f: c -> b; iterate to a fixed point
    let act_elem = |b: usize, e: usize, f: usize, c: usize, at: &[Vec<(usize, usize)>]| {
        // P = coproduct of hom(-, a_i); action precomposes
        let (i, m) = at[b][e];
        let m2 = base.compose(m, f);
        at[c].iter().position(|&p| p == (i, m2)).unwrap()
    };
    loop {
        let mut changed = false;
        for f in base.morphism_indices() {
            let (c, b) = (base.dom(f), base.cod(f));
            for x in 0..at_elems[b].len() {
                for y in 0..at_elems[b].len() {
                    if find(&mut parent, offsets[b] + x) == find(&mut parent, offsets[b] + y) {
                        let fx = act_elem(b, x, f, c, &at_elems);
                        let fy = act_elem(b, y, f, c, &at_elems);
                        if find(&mut parent, offsets[c] + fx) != find(&mut parent, offsets[c] + fy)
                        {
                            union(&mut parent, offsets[c] + fx, offsets[c] + fy);
                            changed = true;
                        }
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }

    // per-object class lists
    let mut at_sets = Vec::with_capacity(base.object_count());
    let mut class_of: Vec<Vec<usize>> = vec![Vec::new(); base.object_count()];
    for b in 0..base.object_count() {
        let mut reps: Vec<usize> = Vec::new();
        let mut idx = vec![usize::MAX; at_elems[b].len()];
        for x in 0..at_elems[b].len() {
            let r = find(&mut parent, offsets[b] + x);
            if let Some(p) = reps.iter().position(|&q| q == r) {
                idx[x] = p;
            } else {
                idx[x] = reps.len();
                reps.push(r);
            }
        }
        class_of[b] = idx;
        let tokens: Vec<String> = reps
            .iter()
            .enumerate()
            .map(|(ci, _)| format!("q{b}_{ci}"))
            .collect();
        at_sets.push(FinSetObject::new(tokens)?);
    }
    let mut acts = Vec::with_capacity(base.morphism_count());
    for f in base.morphism_indices() {
        let (c, b) = (base.dom(f), base.cod(f));
        let mut table = vec![0usize; at_sets[b].len()];
        for x in 0..at_elems[b].len() {
            let fx = act_elem(b, x, f, c, &at_elems);
            table[class_of[b][x]] = class_of[c][fx];
        }
        acts.push(FinFunction::new(
            at_sets[b].clone(),
            at_sets[c].clone(),
            table,
        )?);
    }
    let _ = budget;
    Presheaf::new(base.clone(), at_sets, acts)
}

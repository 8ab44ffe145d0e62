use super::*;
use crate::budget::Budget;
use crate::fincat::FinCategory;
use crate::finset::FinFunction;
use crate::generate::{chain, poset_category, random_category, random_presheaf};

fn b() -> Budget {
    Budget::default()
}

fn arrow_cat() -> crate::fincat::Cat {
    FinCategory::validate(&crate::fincat::tests::walking_arrow(), &b()).unwrap()
}

#[test]
fn yoneda_of_chain_top_is_pointwise_singleton() {
    let c3 = chain(3, &b()).unwrap();
    let y2 = yoneda(&c3, 2);
    for a in 0..3 {
        assert_eq!(y2.at[a].len(), 1);
    }
}

#[test]
fn yoneda_in_discrete_category() {
    let disc = poset_category("disc", &["a", "b"], |_, _| false, &b()).unwrap();
    let ya = yoneda(&disc, 0);
    assert_eq!(ya.at[0].len(), 1);
    assert_eq!(ya.at[1].len(), 0);
}

#[test]
fn yoneda_on_walking_arrow_enumerates_homs() {
    let cat = arrow_cat();
    let y1 = yoneda(&cat, 1);
    assert_eq!(y1.at[0].tokens(), &["u".to_string()]);
    assert_eq!(y1.at[1].tokens(), &["id1".to_string()]);
}

#[test]
fn coyoneda_on_walking_arrow() {
    let cat = arrow_cat();
    let c0 = coyoneda(&cat, 0);
    assert_eq!(c0.at[0].tokens(), &["id0".to_string()]);
    assert_eq!(c0.at[1].tokens(), &["u".to_string()]);
}

#[test]
fn coyoneda_is_yoneda_on_the_opposite() {
    let cat = arrow_cat();
    let op = cat.opposite(&b()).unwrap();
    for a in 0..cat.object_count() {
        let via_op = yoneda(&op, a).to_copresheaf(&cat);
        let direct = coyoneda(&cat, a);
        assert_eq!(via_op.at, direct.at);
        for m in cat.morphism_indices() {
            assert_eq!(via_op.act[m].mapping(), direct.act[m].mapping());
        }
    }
}

/// Unpruned oracle: enumerate every component tuple and filter all
/// naturality squares at the end.
fn nat_set_unpruned(p: &Presheaf, q: &Presheaf) -> Vec<String> {
    let base = &p.base;
    let n = base.object_count();
    let mut tables: Vec<Vec<Vec<usize>>> = Vec::new(); // per object: all functions
    for a in 0..n {
        let mut fs = Vec::new();
        let (dn, cn) = (p.at[a].len(), q.at[a].len());
        if dn == 0 {
            fs.push(Vec::new());
        } else if cn > 0 {
            let mut t = vec![0usize; dn];
            loop {
                fs.push(t.clone());
                let mut i = dn;
                loop {
                    if i == 0 {
                        break;
                    }
                    i -= 1;
                    t[i] += 1;
                    if t[i] < cn {
                        break;
                    }
                    t[i] = 0;
                }
                if t.iter().all(|&v| v == 0) {
                    break;
                }
            }
        }
        tables.push(fs);
    }
    let mut picks = vec![0usize; n];
    let mut out = Vec::new();
    if tables.iter().any(|t| t.is_empty()) {
        return out;
    }
    loop {
        let natural = base.morphism_indices().all(|f| {
            let (a, a2) = (base.dom(f), base.cod(f));
            (0..p.at[a2].len()).all(|x| {
                tables[a][picks[a]][p.act[f].apply(x)] == q.act[f].apply(tables[a2][picks[a2]][x])
            })
        });
        if natural {
            let family: Vec<FinFunction> = (0..n)
                .map(|a| {
                    FinFunction::new(
                        p.at[a].clone(),
                        q.at[a].clone(),
                        tables[a][picks[a]].clone(),
                    )
                    .unwrap()
                })
                .collect();
            out.push(super::natset::family_token(&family));
        }
        let mut i = n;
        loop {
            if i == 0 {
                out.sort();
                return out;
            }
            i -= 1;
            picks[i] += 1;
            if picks[i] < tables[i].len() {
                break;
            }
            picks[i] = 0;
        }
    }
}

#[test]
fn yoneda_lemma_on_generated_presheaves() {
    for seed in 0..25 {
        let cat = random_category(3, seed, &b()).unwrap();
        let p = random_presheaf(&cat, seed * 31 + 1, &b()).unwrap();
        for a in 0..cat.object_count() {
            let ya = yoneda(&cat, a);
            let nats = nat_set(&ya, &p, &b()).unwrap();
            assert_eq!(nats.len(), p.at[a].len(), "seed {seed} object {a}");
            // canonical bijection: evaluate at the identity
            let id_pos = ya.at[a]
                .position(cat.mor_name(cat.identity(a)))
                .unwrap();
            let mut images: Vec<usize> = nats
                .families
                .iter()
                .map(|fam| fam[a].apply(id_pos))
                .collect();
            images.sort_unstable();
            images.dedup();
            assert_eq!(images.len(), p.at[a].len(), "evaluation not bijective");
        }
    }
}

#[test]
fn nat_set_into_terminal_is_singleton() {
    let cat = arrow_cat();
    let p = random_presheaf(&cat, 5, &b()).unwrap();
    let t = Presheaf::terminal(&cat);
    assert_eq!(nat_set(&p, &t, &b()).unwrap().len(), 1);
}

#[test]
fn nat_set_constant_two_on_walking_arrow_has_four_families() {
    let cat = arrow_cat();
    let two = crate::finset::FinSetObject::range(2);
    let p = Presheaf::constant(&cat, &two);
    let nats = nat_set(&p, &p, &b()).unwrap();
    let oracle = nat_set_unpruned(&p, &p);
    assert_eq!(oracle.len(), 4);
    assert_eq!(nats.set.tokens(), oracle.as_slice());
}

#[test]
fn pruned_and_unpruned_enumerations_agree() {
    for seed in 0..20 {
        let cat = random_category(3, seed, &b()).unwrap();
        let p = random_presheaf(&cat, seed * 7, &b()).unwrap();
        let q = random_presheaf(&cat, seed * 7 + 3, &b()).unwrap();
        if nat_search_size(&p, &q).map(|s| s > 200_000).unwrap_or(true) {
            continue;
        }
        let fast = nat_set(&p, &q, &b()).unwrap();
        let slow = nat_set_unpruned(&p, &q);
        assert_eq!(fast.set.tokens(), slow.as_slice(), "seed {seed}");
    }
}

#[test]
fn empty_presheaf_diagram_needs_terminal() {
    let cat = arrow_cat();
    let empty_shape = FinCategory::validate(
        &crate::fincat::RawCategory {
            name: "empty".into(),
            ..Default::default()
        },
        &b(),
    )
    .unwrap();
    let d = PshDiagram::new(empty_shape, vec![], vec![]).unwrap();
    let (lim, _) = presheaf_limit(&cat, &d, &b()).unwrap();
    // isomorphic to the terminal presheaf: singleton fibers everywhere
    assert!(lim.at.iter().all(|s| s.len() == 1));
    let (col, _) = presheaf_colimit(&cat, &d, &b()).unwrap();
    assert_eq!(col.total_size(), 0);
}

#[test]
fn product_with_terminal_is_isomorphic_to_p() {
    let cat = arrow_cat();
    let p = random_presheaf(&cat, 11, &b()).unwrap();
    let t = Presheaf::terminal(&cat);
    let disc = poset_category("disc", &["l", "r"], |_, _| false, &b()).unwrap();
    let d = PshDiagram::new(
        disc,
        vec![p.clone(), t.clone()],
        vec![PresheafMap::identity(&p), PresheafMap::identity(&t)],
    )
    .unwrap();
    let (prod, projections) = presheaf_limit(&cat, &d, &b()).unwrap();
    assert!(projections[0].is_iso());
    assert_eq!(prod.total_size(), p.total_size());
}

#[test]
fn equalizer_computed_objectwise_matches_direct_count() {
    let c2 = chain(2, &b()).unwrap();
    let two = crate::finset::FinSetObject::range(2);
    let p = Presheaf::constant(&c2, &two);
    // two distinct parallel maps p -> p: identity and the swap
    let ident = PresheafMap::identity(&p);
    let swap = PresheafMap::new(
        p.clone(),
        p.clone(),
        vec![
            FinFunction::new(two.clone(), two.clone(), vec![1, 0]).unwrap(),
            FinFunction::new(two.clone(), two.clone(), vec![1, 0]).unwrap(),
        ],
    )
    .unwrap();
    // parallel pair shape
    let raw = crate::fincat::RawCategory {
        name: "pair".into(),
        objects: vec!["s".into(), "t".into()],
        morphisms: vec![
            ("ids".into(), "s".into(), "s".into()),
            ("idt".into(), "t".into(), "t".into()),
            ("u".into(), "s".into(), "t".into()),
            ("v".into(), "s".into(), "t".into()),
        ],
        identities: vec![("s".into(), "ids".into()), ("t".into(), "idt".into())],
        composites: vec![
            ("ids".into(), "ids".into(), "ids".into()),
            ("idt".into(), "idt".into(), "idt".into()),
            ("u".into(), "ids".into(), "u".into()),
            ("idt".into(), "u".into(), "u".into()),
            ("v".into(), "ids".into(), "v".into()),
            ("idt".into(), "v".into(), "v".into()),
        ],
    };
    let shape = FinCategory::validate(&raw, &b()).unwrap();
    let d = PshDiagram::new(
        shape,
        vec![p.clone(), p.clone()],
        vec![
            PresheafMap::identity(&p),
            PresheafMap::identity(&p),
            ident.clone(),
            swap.clone(),
        ],
    )
    .unwrap();
    let (eq, _) = presheaf_limit(&c2, &d, &b()).unwrap();
    for a in 0..2 {
        let direct = (0..p.at[a].len())
            .filter(|&x| ident.components[a].apply(x) == swap.components[a].apply(x))
            .count();
        assert_eq!(eq.at[a].len(), direct);
    }
}

#[test]
fn power_by_singleton_and_empty() {
    let cat = arrow_cat();
    let p = random_presheaf(&cat, 3, &b()).unwrap();
    let single = crate::finset::FinSetObject::singleton("*");
    let pw = power_presheaf(&p, &single, &b()).unwrap();
    for a in 0..cat.object_count() {
        assert_eq!(pw.at[a].len(), p.at[a].len());
    }
    let empty = crate::finset::FinSetObject::empty();
    let pe = power_presheaf(&p, &empty, &b()).unwrap();
    for a in 0..cat.object_count() {
        assert_eq!(pe.at[a].len(), 1);
    }
}

#[test]
fn power_of_representable_on_walking_arrow() {
    let cat = arrow_cat();
    let y1 = yoneda(&cat, 1);
    let s = crate::finset::FinSetObject::range(2);
    let pw = power_presheaf(&y1, &s, &b()).unwrap();
    assert_eq!(pw.at[0].len(), 1);
    assert_eq!(pw.at[1].len(), 1);
}

#[test]
fn representable_copresheaf_preserves_probed_limits() {
    let c3 = chain(3, &b()).unwrap();
    let probe = crate::fincat::Functor::new(
        "binary",
        poset_category("disc", &["l", "r"], |_, _| false, &b()).unwrap(),
        c3.clone(),
        vec![1, 2],
        vec![c3.identity(1), c3.identity(2)],
    )
    .unwrap();
    let rep = coyoneda(&c3, 0);
    let report = preserves_finite_limits(&rep, &[probe], &b()).unwrap();
    assert!(report.all_preserved());
}

#[test]
fn constant_copresheaf_fails_binary_product_probe() {
    let c3 = chain(3, &b()).unwrap();
    let probe = crate::fincat::Functor::new(
        "binary",
        poset_category("disc", &["l", "r"], |_, _| false, &b()).unwrap(),
        c3.clone(),
        vec![1, 2],
        vec![c3.identity(1), c3.identity(2)],
    )
    .unwrap();
    let two = crate::finset::FinSetObject::range(2);
    let konst = Copresheaf {
        base: c3.clone(),
        at: (0..3).map(|_| two.clone()).collect(),
        act: c3.morphism_indices().map(|_| FinFunction::identity(&two)).collect(),
    };
    let report = preserves_finite_limits(&konst, &[probe], &b()).unwrap();
    assert!(!report.all_preserved());
    match &report.probes[0] {
        LexProbeReport::NotPreserved {
            domain_size,
            limit_size,
            ..
        } => {
            assert_eq!(*domain_size, 2);
            assert_eq!(*limit_size, 4);
        }
        other => panic!("expected a failed probe, got {other:?}"),
    }
}

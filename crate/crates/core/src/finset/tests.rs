use super::*;
use crate::budget::Budget;
use crate::generate::{chain, random_category, random_presheaf};

fn b() -> Budget {
    Budget::default()
}

fn set(tokens: &[&str]) -> SetOb {
    FinSetObject::new(tokens.iter().map(|s| s.to_string()).collect()).unwrap()
}

/// Covariant diagrams on a shape are presheaves on the opposite shape; the
/// seeded presheaf generator therefore doubles as a diagram generator.
pub(crate) fn random_diagram(shape: &crate::fincat::Cat, seed: u64, budget: &Budget) -> Diagram {
    let shape_op = shape.opposite(budget).unwrap();
    let p = random_presheaf(&shape_op, seed, budget).unwrap();
    let q = p.to_copresheaf(shape);
    Diagram::new(shape.clone(), q.at, q.act).unwrap()
}

#[test]
fn hom_set_counts() {
    let x = set(&["a", "b"]);
    let y = set(&["0", "1"]);
    let (s, fs) = hom_set(&x, &y, &b()).unwrap();
    assert_eq!(s.len(), 4);
    assert_eq!(fs.len(), 4);
    // lexicographic: first function is constant 0
    assert_eq!(s.token(0), "[0,0]");

    let (empty_dom, fs) = hom_set(&FinSetObject::empty(), &y, &b()).unwrap();
    assert_eq!(empty_dom.len(), 1);
    assert_eq!(fs[0].token(), "[]");

    let (none, _) = hom_set(&x, &FinSetObject::empty(), &b()).unwrap();
    assert_eq!(none.len(), 0);
}

#[test]
fn limit_of_discrete_pair_is_product() {
    let shape = crate::generate::poset_category("disc2", &["l", "r"], |_, _| false, &b()).unwrap();
    let d = Diagram::new(
        shape,
        vec![set(&["a", "b"]), set(&["0", "1", "2"])],
        vec![
            FinFunction::identity(&set(&["a", "b"])),
            FinFunction::identity(&set(&["0", "1", "2"])),
        ],
    )
    .unwrap();
    let lim = limit(&d, &b()).unwrap();
    assert_eq!(lim.object.len(), 6);
    assert_eq!(lim.object.token(0), "(a,0)");
}

#[test]
fn equalizer_of_equal_arrows_is_whole_domain() {
    // parallel pair shape: s ==> t
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
    let shape = crate::fincat::FinCategory::validate(&raw, &b()).unwrap();
    let dom = set(&["x", "y"]);
    let cod = set(&["0", "1"]);
    let f = FinFunction::new(dom.clone(), cod.clone(), vec![0, 1]).unwrap();
    let d = Diagram::new(
        shape,
        vec![dom.clone(), cod],
        vec![
            FinFunction::identity(&dom),
            FinFunction::identity(&set(&["0", "1"])),
            f.clone(),
            f,
        ],
    )
    .unwrap();
    let lim = limit(&d, &b()).unwrap();
    assert_eq!(lim.object.len(), 2);
}

#[test]
fn limit_of_empty_shape_is_singleton_and_colimit_empty() {
    let empty_shape = crate::fincat::FinCategory::validate(
        &crate::fincat::RawCategory {
            name: "empty".into(),
            ..Default::default()
        },
        &b(),
    )
    .unwrap();
    let d = Diagram::new(empty_shape, vec![], vec![]).unwrap();
    assert_eq!(limit(&d, &b()).unwrap().object.len(), 1);
    assert_eq!(colimit(&d, &b()).unwrap().object.len(), 0);
}

#[test]
fn coproduct_sizes_add() {
    let shape = crate::generate::poset_category("disc2", &["l", "r"], |_, _| false, &b()).unwrap();
    let d = Diagram::new(
        shape,
        vec![set(&["a", "b"]), set(&["0", "1", "2"])],
        vec![
            FinFunction::identity(&set(&["a", "b"])),
            FinFunction::identity(&set(&["0", "1", "2"])),
        ],
    )
    .unwrap();
    let col = colimit(&d, &b()).unwrap();
    assert_eq!(col.object.len(), 5);
}

#[test]
fn quotient_by_identity_pair_is_codomain() {
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
    let shape = crate::fincat::FinCategory::validate(&raw, &b()).unwrap();
    let s = set(&["x", "y"]);
    let d = Diagram::new(
        shape,
        vec![s.clone(), s.clone()],
        vec![
            FinFunction::identity(&s),
            FinFunction::identity(&s),
            FinFunction::identity(&s),
            FinFunction::identity(&s),
        ],
    )
    .unwrap();
    let col = colimit(&d, &b()).unwrap();
    assert_eq!(col.object.len(), 2);
}

/// Independent oracle for the generated equivalence: repeated scanning over
/// the arrow relation until no class merges happen, no union-find involved.
fn closure_oracle(d: &Diagram) -> usize {
    let shape = &d.shape;
    let n = shape.object_count();
    let mut offsets = vec![0usize; n + 1];
    for o in 0..n {
        offsets[o + 1] = offsets[o] + d.at[o].len();
    }
    let total = offsets[n];
    let mut class: Vec<usize> = (0..total).collect();
    loop {
        let mut changed = false;
        for m in shape.morphism_indices() {
            let (a, a2) = (shape.dom(m), shape.cod(m));
            for x in 0..d.at[a].len() {
                let i = offsets[a] + x;
                let j = offsets[a2] + d.act[m].apply(x);
                if class[i] != class[j] {
                    let (lo, hi) = (class[i].min(class[j]), class[i].max(class[j]));
                    for c in class.iter_mut() {
                        if *c == hi {
                            *c = lo;
                        }
                    }
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let mut reps: Vec<usize> = class.clone();
    reps.sort_unstable();
    reps.dedup();
    reps.len()
}

#[test]
fn pushout_glues_along_a_point() {
    // span shape: l <- m -> r
    let raw = crate::fincat::RawCategory {
        name: "span".into(),
        objects: vec!["m".into(), "l".into(), "r".into()],
        morphisms: vec![
            ("idm".into(), "m".into(), "m".into()),
            ("idl".into(), "l".into(), "l".into()),
            ("idr".into(), "r".into(), "r".into()),
            ("pl".into(), "m".into(), "l".into()),
            ("pr".into(), "m".into(), "r".into()),
        ],
        identities: vec![
            ("m".into(), "idm".into()),
            ("l".into(), "idl".into()),
            ("r".into(), "idr".into()),
        ],
        composites: vec![
            ("idm".into(), "idm".into(), "idm".into()),
            ("idl".into(), "idl".into(), "idl".into()),
            ("idr".into(), "idr".into(), "idr".into()),
            ("pl".into(), "idm".into(), "pl".into()),
            ("idl".into(), "pl".into(), "pl".into()),
            ("pr".into(), "idm".into(), "pr".into()),
            ("idr".into(), "pr".into(), "pr".into()),
        ],
    };
    let shape = crate::fincat::FinCategory::validate(&raw, &b()).unwrap();
    let point = set(&["*"]);
    let two = set(&["0", "1"]);
    let d = Diagram::new(
        shape,
        vec![point.clone(), two.clone(), two.clone()],
        vec![
            FinFunction::identity(&point),
            FinFunction::identity(&two),
            FinFunction::identity(&two),
            FinFunction::new(point.clone(), two.clone(), vec![0]).unwrap(),
            FinFunction::new(point.clone(), two.clone(), vec![0]).unwrap(),
        ],
    )
    .unwrap();
    assert_eq!(closure_oracle(&d), 3);
    let col = colimit(&d, &b()).unwrap();
    assert_eq!(col.object.len(), 3);
}

#[test]
fn colimit_classes_match_scanning_oracle_on_random_diagrams() {
    for seed in 0..30 {
        let shape = random_category(3, seed, &b()).unwrap();
        let d = random_diagram(&shape, seed.wrapping_mul(7), &b());
        let col = colimit(&d, &b()).unwrap();
        assert_eq!(col.object.len(), closure_oracle(&d), "seed {seed}");
    }
}

#[test]
fn limit_is_determined_at_an_initial_shape_object() {
    // a covariant diagram over a shape with an initial object takes its
    // limit there, with a bijective projection; dually for colimits at a
    // terminal object
    for seed in 0..20 {
        let shape = chain(3, &b()).unwrap();
        let d = random_diagram(&shape, seed, &b());
        let lim = limit(&d, &b()).unwrap();
        assert!(lim.projections[0].is_bijective(), "seed {seed}");
        let col = colimit(&d, &b()).unwrap();
        assert!(col.injections[2].is_bijective(), "seed {seed}");
    }
}

#[test]
fn cones_sampled_through_the_limit_factor_uniquely() {
    use rand::prelude::*;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
    let mut checked = 0usize;
    for seed in 0..200 {
        if checked >= 1000 {
            break;
        }
        let shape = random_category(3, seed, &b()).unwrap();
        let d = random_diagram(&shape, seed + 1000, &b());
        let lim = limit(&d, &b()).unwrap();
        for _ in 0..40 {
            // a random cone: a random function into the limit, spread out
            // through the projections
            let apex = set(&["c0", "c1"]);
            if lim.object.is_empty() {
                break;
            }
            let h: Vec<usize> = (0..2).map(|_| rng.gen_range(0..lim.object.len())).collect();
            let legs: Vec<FinFunction> = lim
                .projections
                .iter()
                .map(|p| {
                    FinFunction::new(
                        apex.clone(),
                        p.cod.clone(),
                        h.iter().map(|&i| p.apply(i)).collect(),
                    )
                    .unwrap()
                })
                .collect();
            // count mediating functions with proj . m = legs
            let (_, candidates) = hom_set(&apex, &lim.object, &b()).unwrap();
            let mediators = candidates
                .iter()
                .filter(|m| {
                    lim.projections.iter().zip(&legs).all(|(p, leg)| {
                        FinFunction::compose(p, m).mapping() == leg.mapping()
                    })
                })
                .count();
            assert_eq!(mediators, 1, "seed {seed}");
            checked += 1;
        }
    }
    assert!(checked >= 1000, "sampled {checked} cones");
}

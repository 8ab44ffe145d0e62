use super::*;
use crate::budget::Budget;
use crate::fincat::{
    enumerate_functors, natural_families, FullSubcategory, Functor, NatTransformation,
};
use crate::generate::{chain, diamond, poset_category};

fn b() -> Budget {
    Budget::default()
}

/// Independent poset oracle: the meet is the greatest common lower bound,
/// read off the hom relation directly.
fn poset_meet(cat: &crate::fincat::Cat, xs: &[usize]) -> Option<usize> {
    let le = |i: usize, j: usize| !cat.hom(i, j).is_empty();
    let lowers: Vec<usize> = (0..cat.object_count())
        .filter(|&c| xs.iter().all(|&x| le(c, x)))
        .collect();
    lowers
        .iter()
        .copied()
        .find(|&m| lowers.iter().all(|&c| le(c, m)))
}

#[test]
fn binary_meet_in_chain() {
    let c3 = chain(3, &b()).unwrap();
    let disc = poset_category("disc", &["l", "r"], |_, _| false, &b()).unwrap();
    let d = Functor::new(
        "pair12",
        disc,
        c3.clone(),
        vec![1, 2],
        vec![c3.identity(1), c3.identity(2)],
    )
    .unwrap();
    let cone = limit_in_category(&d, &b()).unwrap().unwrap();
    assert_eq!(cone.apex, 1);
    assert_eq!(poset_meet(&c3, &[1, 2]), Some(1));
}

#[test]
fn empty_limit_needs_a_terminal_object() {
    let disc2 = poset_category("disc2", &["a", "b"], |_, _| false, &b()).unwrap();
    let empty = crate::fincat::FinCategory::validate(
        &crate::fincat::RawCategory {
            name: "empty".into(),
            ..Default::default()
        },
        &b(),
    )
    .unwrap();
    let d = Functor::new("e", empty, disc2, vec![], vec![]).unwrap();
    assert!(limit_in_category(&d, &b()).unwrap().is_none());
}

#[test]
fn pullback_in_diamond_is_the_meet() {
    let dia = diamond(&b()).unwrap();
    // cospan shape: l -> m <- r
    let raw = crate::fincat::RawCategory {
        name: "cospan".into(),
        objects: vec!["l".into(), "r".into(), "m".into()],
        morphisms: vec![
            ("idl".into(), "l".into(), "l".into()),
            ("idr".into(), "r".into(), "r".into()),
            ("idm".into(), "m".into(), "m".into()),
            ("f".into(), "l".into(), "m".into()),
            ("g".into(), "r".into(), "m".into()),
        ],
        identities: vec![
            ("l".into(), "idl".into()),
            ("r".into(), "idr".into()),
            ("m".into(), "idm".into()),
        ],
        composites: vec![
            ("idl".into(), "idl".into(), "idl".into()),
            ("idr".into(), "idr".into(), "idr".into()),
            ("idm".into(), "idm".into(), "idm".into()),
            ("f".into(), "idl".into(), "f".into()),
            ("idm".into(), "f".into(), "f".into()),
            ("g".into(), "idr".into(), "g".into()),
            ("idm".into(), "g".into(), "g".into()),
        ],
    };
    let shape = crate::fincat::FinCategory::validate(&raw, &b()).unwrap();
    // legs a -> top <- b
    let a = dia.object_index("a").unwrap();
    let bb = dia.object_index("b").unwrap();
    let top = dia.object_index("top").unwrap();
    let d = Functor::new(
        "cospan_ab",
        shape,
        dia.clone(),
        vec![a, bb, top],
        vec![
            dia.identity(a),
            dia.identity(bb),
            dia.identity(top),
            dia.hom(a, top)[0],
            dia.hom(bb, top)[0],
        ],
    )
    .unwrap();
    let cone = limit_in_category(&d, &b()).unwrap().unwrap();
    assert_eq!(Some(cone.apex), poset_meet(&dia, &[a, bb]));
    assert_eq!(dia.object_name(cone.apex), "bot");
}

#[test]
fn right_kan_along_identity_is_identity() {
    let c3 = chain(3, &b()).unwrap();
    let id = Functor::identity(&c3);
    let ran = right_kan(&id, &id, &b()).unwrap();
    let ext = ran.extension.unwrap();
    assert_eq!(ext.on_objects(), &[0, 1, 2]);
    let cell = ran.two_cell.unwrap();
    assert!(cell.components().iter().all(|&c| c3.is_iso(c)));
}

#[test]
fn right_kan_of_chain_inclusion_is_upper_reflection() {
    let c3 = chain(3, &b()).unwrap();
    let sub = FullSubcategory::from_names(&c3, &["0", "2"], &b()).unwrap();
    let i = &sub.inclusion;
    let ran = right_kan(i, i, &b()).unwrap();
    let ext = ran.extension.as_ref().unwrap();
    // oracle: meet of the subcategory objects above the argument
    for k in 0..3 {
        let uppers: Vec<usize> = sub
            .objects
            .iter()
            .copied()
            .filter(|&a| !c3.hom(k, a).is_empty())
            .collect();
        let expected = poset_meet(&c3, &uppers).unwrap();
        assert_eq!(ext.obj(k), expected, "at object {k}");
    }
    assert_eq!(ext.on_objects(), &[0, 2, 2]);
}

#[test]
fn left_kan_of_dense_inclusion_is_identity() {
    let c3 = chain(3, &b()).unwrap();
    let all = FullSubcategory::new(&c3, vec![0, 1, 2], &b()).unwrap();
    let lan = left_kan(&all.inclusion, &all.inclusion, &b()).unwrap();
    let ext = lan.extension.unwrap();
    assert!(
        crate::fincat::find_natural_isomorphism(&ext, &Functor::identity(&c3), &b())
            .unwrap()
            .is_some()
    );
}

#[test]
fn density_reports() {
    let c3 = chain(3, &b()).unwrap();
    let single = FullSubcategory::from_names(&c3, &["2"], &b()).unwrap();
    let report = is_dense(&single.inclusion, &b()).unwrap();
    assert!(!report.holds);
    // computed values are reported for inspection
    assert_eq!(report.computed.len(), 3);

    let join_dense = FullSubcategory::from_names(&c3, &["1", "2"], &b()).unwrap();
    let report = is_dense(&join_dense.inclusion, &b()).unwrap();
    assert!(report.holds);

    let all = FullSubcategory::new(&c3, vec![0, 1, 2], &b()).unwrap();
    assert!(is_dense(&all.inclusion, &b()).unwrap().holds);
    assert!(is_codense(&all.inclusion, &b()).unwrap().holds);
}

#[test]
fn adjunction_identity_case() {
    let c3 = chain(3, &b()).unwrap();
    let id = Functor::identity(&c3);
    let adj = check_adjunction(&id, &id, &b()).unwrap().unwrap();
    assert!(adj.unit.is_iso());
}

#[test]
fn reflection_is_left_adjoint_to_inclusion() {
    let c3 = chain(3, &b()).unwrap();
    let sub = FullSubcategory::from_names(&c3, &["0", "2"], &b()).unwrap();
    // upper reflection onto {0, 2}
    let refl = Functor::new(
        "refl",
        c3.clone(),
        sub.category.clone(),
        vec![0, 1, 1],
        c3.morphism_indices()
            .map(|m| {
                let (d, c) = (
                    if c3.dom(m) == 0 { 0 } else { 1 },
                    if c3.cod(m) == 0 { 0 } else { 1 },
                );
                sub.category.hom(d, c)[0]
            })
            .collect(),
    )
    .unwrap();
    let adj = check_adjunction(&refl, &sub.inclusion, &b()).unwrap();
    let adj = adj.expect("reflection -| inclusion");
    // Galois oracle: hom(L c, d) nonempty iff hom(c, R d) nonempty
    for c in 0..3 {
        for d in 0..2 {
            assert_eq!(
                sub.category.hom(refl.obj(c), d).is_empty(),
                c3.hom(c, sub.inclusion.obj(d)).is_empty()
            );
        }
    }
    drop(adj);

    // the wrong order fails fast on hom cardinalities
    let failure = check_adjunction(&sub.inclusion, &refl, &b()).unwrap();
    assert!(matches!(
        failure,
        Err(AdjunctionFailure::CardinalityMismatch { .. })
    ));
}

#[test]
fn left_adjoint_via_ran_matches_direct_search() {
    let c3 = chain(3, &b()).unwrap();
    let sub = FullSubcategory::from_names(&c3, &["0", "2"], &b()).unwrap();
    match left_adjoint_via_ran(&sub.inclusion, &b()).unwrap() {
        LeftAdjointOutcome::Found { left, .. } => {
            // value at 1 is the upper reflection 2, read inside the parent
            assert_eq!(
                sub.category.object_name(left.obj(1)),
                "2"
            );
        }
        other => panic!("expected a left adjoint, got {other:?}"),
    }

    let id3 = Functor::identity(&c3);
    match left_adjoint_via_ran(&id3, &b()).unwrap() {
        LeftAdjointOutcome::Found { left, .. } => assert_eq!(left, id3),
        other => panic!("expected identity, got {other:?}"),
    }

    // constant at a non-terminal object is not a right adjoint
    let konst = Functor::constant(&c3, &c3, 0);
    assert!(matches!(
        left_adjoint_via_ran(&konst, &b()).unwrap(),
        LeftAdjointOutcome::NotRightAdjoint { .. }
    ));
}

#[test]
fn right_kan_universal_property_against_enumerated_competitors() {
    let c3 = chain(3, &b()).unwrap();
    let sub = FullSubcategory::from_names(&c3, &["0", "2"], &b()).unwrap();
    let i = &sub.inclusion;
    let ran = right_kan(i, i, &b()).unwrap();
    let ext = ran.extension.as_ref().unwrap();
    let cell = ran.two_cell.as_ref().unwrap();

    let mut checked = 0usize;
    for h in enumerate_functors(&c3, &c3, &b()).unwrap() {
        let hi = Functor::compose(&h, i);
        for phi in natural_families(&hi, i, false, None, &b()).unwrap() {
            let mediators: Vec<NatTransformation> = natural_families(&h, ext, false, None, &b())
                .unwrap()
                .into_iter()
                .filter(|alpha| {
                    let whiskered = alpha.whisker_right(i);
                    let composite = NatTransformation::vertical(cell, &whiskered);
                    composite.components() == phi.components()
                })
                .collect();
            assert_eq!(mediators.len(), 1, "functor {:?}", h.on_objects());
            checked += 1;
        }
    }
    assert!(checked > 0);
}

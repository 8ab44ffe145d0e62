use super::{Copresheaf, CopresheafMap, Presheaf, PresheafMap};
use crate::error::Result;
use crate::fincat::Cat;
use crate::finset::{FinFunction, FinSetObject, SetOb};

fn hom_as_set(base: &Cat, x: usize, y: usize) -> SetOb {
    FinSetObject::new(
        base.hom(x, y)
            .iter()
            .map(|&m| base.mor_name(m).to_string())
            .collect(),
    )
    .unwrap()
}

/// hom(-, a) with action by precomposition.
pub fn yoneda(base: &Cat, a: usize) -> Presheaf {
    let at: Vec<SetOb> = (0..base.object_count())
        .map(|b| hom_as_set(base, b, a))
        .collect();
    let act = base
        .morphism_indices()
        .map(|f| {
            let (b, b2) = (base.dom(f), base.cod(f));
            let table = base
                .hom(b2, a)
                .iter()
                .map(|&g| {
                    let gf = base.compose(g, f);
                    base.hom(b, a).iter().position(|&m| m == gf).unwrap()
                })
                .collect();
            FinFunction::new(at[b2].clone(), at[b].clone(), table).unwrap()
        })
        .collect();
    Presheaf {
        base: base.clone(),
        at,
        act,
    }
}

/// The presheaf map hom(-, a) => hom(-, a2) induced by m: a -> a2 via
/// postcomposition; this is the morphism part of the Yoneda embedding.
pub fn yoneda_map(base: &Cat, m: usize) -> Result<PresheafMap> {
    let (a, a2) = (base.dom(m), base.cod(m));
    let (pa, pa2) = (yoneda(base, a), yoneda(base, a2));
    let components = (0..base.object_count())
        .map(|b| {
            let table = base
                .hom(b, a)
                .iter()
                .map(|&g| {
                    let mg = base.compose(m, g);
                    base.hom(b, a2).iter().position(|&k| k == mg).unwrap()
                })
                .collect();
            FinFunction::new(pa.at[b].clone(), pa2.at[b].clone(), table).unwrap()
        })
        .collect();
    PresheafMap::new(pa, pa2, components)
}

/// hom(a, -) with action by postcomposition.
pub fn coyoneda(base: &Cat, a: usize) -> Copresheaf {
    let at: Vec<SetOb> = (0..base.object_count())
        .map(|b| hom_as_set(base, a, b))
        .collect();
    let act = base
        .morphism_indices()
        .map(|f| {
            let (b, b2) = (base.dom(f), base.cod(f));
            let table = base
                .hom(a, b)
                .iter()
                .map(|&g| {
                    let fg = base.compose(f, g);
                    base.hom(a, b2).iter().position(|&m| m == fg).unwrap()
                })
                .collect();
            FinFunction::new(at[b].clone(), at[b2].clone(), table).unwrap()
        })
        .collect();
    Copresheaf {
        base: base.clone(),
        at,
        act,
    }
}

/// The copresheaf map hom(a2, -) => hom(a, -) induced by m: a -> a2 via
/// precomposition; contravariant in the argument.
pub fn coyoneda_map(base: &Cat, m: usize) -> Result<CopresheafMap> {
    let (a, a2) = (base.dom(m), base.cod(m));
    let (ca, ca2) = (coyoneda(base, a), coyoneda(base, a2));
    let components = (0..base.object_count())
        .map(|b| {
            let table = base
                .hom(a2, b)
                .iter()
                .map(|&g| {
                    let gm = base.compose(g, m);
                    base.hom(a, b).iter().position(|&k| k == gm).unwrap()
                })
                .collect();
            FinFunction::new(ca2.at[b].clone(), ca.at[b].clone(), table).unwrap()
        })
        .collect();
    CopresheafMap::new(ca2, ca, components)
}

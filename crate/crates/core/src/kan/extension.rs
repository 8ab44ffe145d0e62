use super::cones::{
    colimit_in_category, factor_through_initial, factor_through_terminal, limit_in_category,
    Cocone, Cone,
};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::fincat::{
    find_natural_isomorphism, CommaCategory, Functor, NatTransformation,
};

/// Per-object witness that the pointwise extension exists there.
#[derive(Debug, Clone)]
pub struct RanWitness {
    pub comma: CommaCategory,
    pub cone: Cone,
}

#[derive(Debug, Clone)]
pub struct LanWitness {
    pub comma: CommaCategory,
    pub cocone: Cocone,
}

/// A pointwise right Kan extension. Partial existence is first class: the
/// assembled functor and 2-cell are only present when every object of the
/// codomain admits its limiting cone.
#[derive(Debug)]
pub struct RanResult {
    pub witnesses: Vec<Option<RanWitness>>,
    pub extension: Option<Functor>,
    /// The universal 2-cell Ran . F => G.
    pub two_cell: Option<NatTransformation>,
}

impl RanResult {
    pub fn total(&self) -> bool {
        self.extension.is_some()
    }

    pub fn missing_objects(&self, along: &Functor) -> Vec<String> {
        self.witnesses
            .iter()
            .enumerate()
            .filter(|(_, w)| w.is_none())
            .map(|(b, _)| along.target().object_name(b).to_string())
            .collect()
    }
}

#[derive(Debug)]
pub struct LanResult {
    pub witnesses: Vec<Option<LanWitness>>,
    pub extension: Option<Functor>,
    /// The universal 2-cell G => Lan . F.
    pub two_cell: Option<NatTransformation>,
}

impl LanResult {
    pub fn total(&self) -> bool {
        self.extension.is_some()
    }
}

/// Pointwise right Kan extension of g along f, computed per object as the
/// limit over the comma category b / f of g . proj.
pub fn right_kan(f: &Functor, g: &Functor, budget: &Budget) -> Result<RanResult> {
    let b_cat = f.target();
    let c_cat = g.target();
    let mut witnesses: Vec<Option<RanWitness>> = Vec::with_capacity(b_cat.object_count());
    for b in 0..b_cat.object_count() {
        let comma = CommaCategory::under(b, f, budget)?;
        let diagram = Functor::compose(g, &comma.projection);
        let cone = limit_in_category(&diagram, budget)?;
        witnesses.push(cone.map(|cone| RanWitness { comma, cone }));
    }
    if witnesses.iter().any(|w| w.is_none()) {
        return Ok(RanResult {
            witnesses,
            extension: None,
            two_cell: None,
        });
    }
    let wit: Vec<&RanWitness> = witnesses.iter().map(|w| w.as_ref().unwrap()).collect();

    let on_objects: Vec<usize> = wit.iter().map(|w| w.cone.apex).collect();
    let mut on_morphisms = Vec::with_capacity(b_cat.morphism_count());
    for m in b_cat.morphism_indices() {
        let (b, b2) = (b_cat.dom(m), b_cat.cod(m));
        // cone from Ran(b) over the comma at b2: at (a, h: b2 -> f a) use the
        // b-cone leg at (a, h . m)
        let legs: Vec<usize> = wit[b2]
            .comma
            .objects
            .iter()
            .map(|&(a, arrow)| {
                let pulled = b_cat.compose(arrow, m);
                let idx = wit[b].comma.object_index(a, pulled).ok_or_else(|| {
                    Error::Internal("comma reindexing lost an object".into())
                })?;
                Ok(wit[b].cone.legs[idx])
            })
            .collect::<Result<Vec<usize>>>()?;
        let from = Cone {
            apex: wit[b].cone.apex,
            legs,
        };
        let diagram = Functor::compose(g, &wit[b2].comma.projection);
        on_morphisms.push(factor_through_terminal(&diagram, &wit[b2].cone, &from)?);
    }
    let extension = Functor::new(
        format!("Ran_{}({})", f.name, g.name),
        b_cat.clone(),
        c_cat.clone(),
        on_objects,
        on_morphisms,
    )?;

    // universal 2-cell at a: the cone leg at (a, id_{f a})
    let a_cat = f.source();
    let components: Vec<usize> = (0..a_cat.object_count())
        .map(|a| {
            let fa = f.obj(a);
            let idx = wit[fa]
                .comma
                .object_index(a, b_cat.identity(fa))
                .ok_or_else(|| Error::Internal("identity arrow missing from comma".into()))?;
            Ok(wit[fa].cone.legs[idx])
        })
        .collect::<Result<Vec<usize>>>()?;
    let two_cell = NatTransformation::new(Functor::compose(&extension, f), g.clone(), components)?;

    Ok(RanResult {
        witnesses,
        extension: Some(extension),
        two_cell: Some(two_cell),
    })
}

/// Pointwise left Kan extension of g along f: colimit over f / b.
pub fn left_kan(f: &Functor, g: &Functor, budget: &Budget) -> Result<LanResult> {
    let b_cat = f.target();
    let c_cat = g.target();
    let mut witnesses: Vec<Option<LanWitness>> = Vec::with_capacity(b_cat.object_count());
    for b in 0..b_cat.object_count() {
        let comma = CommaCategory::over(f, b, budget)?;
        let diagram = Functor::compose(g, &comma.projection);
        let cocone = colimit_in_category(&diagram, budget)?;
        witnesses.push(cocone.map(|cocone| LanWitness { comma, cocone }));
    }
    if witnesses.iter().any(|w| w.is_none()) {
        return Ok(LanResult {
            witnesses,
            extension: None,
            two_cell: None,
        });
    }
    let wit: Vec<&LanWitness> = witnesses.iter().map(|w| w.as_ref().unwrap()).collect();

    let on_objects: Vec<usize> = wit.iter().map(|w| w.cocone.apex).collect();
    let mut on_morphisms = Vec::with_capacity(b_cat.morphism_count());
    for m in b_cat.morphism_indices() {
        let (b, b2) = (b_cat.dom(m), b_cat.cod(m));
        // cocone under the comma at b with apex Lan(b2): at (a, h: f a -> b)
        // use the b2-cocone leg at (a, m . h)
        let legs: Vec<usize> = wit[b]
            .comma
            .objects
            .iter()
            .map(|&(a, arrow)| {
                let pushed = b_cat.compose(m, arrow);
                let idx = wit[b2].comma.object_index(a, pushed).ok_or_else(|| {
                    Error::Internal("comma reindexing lost an object".into())
                })?;
                Ok(wit[b2].cocone.legs[idx])
            })
            .collect::<Result<Vec<usize>>>()?;
        let to = Cocone {
            apex: wit[b2].cocone.apex,
            legs,
        };
        let diagram = Functor::compose(g, &wit[b].comma.projection);
        on_morphisms.push(factor_through_initial(&diagram, &wit[b].cocone, &to)?);
    }
    let extension = Functor::new(
        format!("Lan_{}({})", f.name, g.name),
        b_cat.clone(),
        c_cat.clone(),
        on_objects,
        on_morphisms,
    )?;

    let a_cat = f.source();
    let components: Vec<usize> = (0..a_cat.object_count())
        .map(|a| {
            let fa = f.obj(a);
            let idx = wit[fa]
                .comma
                .object_index(a, b_cat.identity(fa))
                .ok_or_else(|| Error::Internal("identity arrow missing from comma".into()))?;
            Ok(wit[fa].cocone.legs[idx])
        })
        .collect::<Result<Vec<usize>>>()?;
    let two_cell = NatTransformation::new(g.clone(), Functor::compose(&extension, f), components)?;

    Ok(LanResult {
        witnesses,
        extension: Some(extension),
        two_cell: Some(two_cell),
    })
}

/// How a density check turned out: either a witness, or the computed values
/// of the extension (or the objects where it failed to exist).
#[derive(Debug)]
pub struct DensityReport {
    pub holds: bool,
    pub witness: Option<NatTransformation>,
    pub computed: Vec<(String, Option<String>)>,
}

/// i is dense iff Lan_i i exists pointwise and is naturally isomorphic to
/// the identity.
pub fn is_dense(i: &Functor, budget: &Budget) -> Result<DensityReport> {
    let lan = left_kan(i, i, budget)?;
    let b_cat = i.target();
    let computed: Vec<(String, Option<String>)> = (0..b_cat.object_count())
        .map(|b| {
            (
                b_cat.object_name(b).to_string(),
                lan.witnesses[b]
                    .as_ref()
                    .map(|w| b_cat.object_name(w.cocone.apex).to_string()),
            )
        })
        .collect();
    let witness = match &lan.extension {
        Some(ext) => find_natural_isomorphism(ext, &Functor::identity(b_cat), budget)?,
        None => None,
    };
    Ok(DensityReport {
        holds: witness.is_some(),
        witness,
        computed,
    })
}

/// i is codense iff Ran_i i is naturally isomorphic to the identity.
pub fn is_codense(i: &Functor, budget: &Budget) -> Result<DensityReport> {
    let ran = right_kan(i, i, budget)?;
    let b_cat = i.target();
    let computed: Vec<(String, Option<String>)> = (0..b_cat.object_count())
        .map(|b| {
            (
                b_cat.object_name(b).to_string(),
                ran.witnesses[b]
                    .as_ref()
                    .map(|w| b_cat.object_name(w.cone.apex).to_string()),
            )
        })
        .collect();
    let witness = match &ran.extension {
        Some(ext) => find_natural_isomorphism(ext, &Functor::identity(b_cat), budget)?,
        None => None,
    };
    Ok(DensityReport {
        holds: witness.is_some(),
        witness,
        computed,
    })
}

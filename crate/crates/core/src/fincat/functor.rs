use super::Cat;
use crate::budget::Budget;
use crate::error::{Error, Result, ValidationIssue, ValidationReport};

/// A functor between finite categories: an object map and a morphism map,
/// law-checked at construction. Equality is on-the-nose equality of maps.
#[derive(Debug, Clone)]
pub struct Functor {
    pub name: String,
    source: Cat,
    target: Cat,
    on_objects: Vec<usize>,
    on_morphisms: Vec<usize>,
}

impl PartialEq for Functor {
    fn eq(&self, other: &Self) -> bool {
        self.on_objects == other.on_objects
            && self.on_morphisms == other.on_morphisms
            && same_cat(&self.source, &other.source)
            && same_cat(&self.target, &other.target)
    }
}

impl Eq for Functor {}

pub(crate) fn same_cat(a: &Cat, b: &Cat) -> bool {
    std::sync::Arc::ptr_eq(a, b) || a == b
}

impl Functor {
    pub fn new(
        name: impl Into<String>,
        source: Cat,
        target: Cat,
        on_objects: Vec<usize>,
        on_morphisms: Vec<usize>,
    ) -> Result<Functor> {
        let f = Functor {
            name: name.into(),
            source,
            target,
            on_objects,
            on_morphisms,
        };
        f.check()?;
        Ok(f)
    }

    fn check(&self) -> Result<()> {
        let mut report = ValidationReport::default();
        if self.on_objects.len() != self.source.object_count()
            || self.on_morphisms.len() != self.source.morphism_count()
        {
            return Err(Error::Internal(format!(
                "functor {} has tables of the wrong length",
                self.name
            )));
        }
        for m in self.source.morphism_indices() {
            let img = self.on_morphisms[m];
            if self.target.dom(img) != self.on_objects[self.source.dom(m)]
                || self.target.cod(img) != self.on_objects[self.source.cod(m)]
            {
                report.push(ValidationIssue::FunctorEndpoints {
                    morphism: self.source.mor_name(m).to_string(),
                });
            }
        }
        if !report.is_ok() {
            return report.into_result();
        }
        for o in 0..self.source.object_count() {
            if self.on_morphisms[self.source.identity(o)]
                != self.target.identity(self.on_objects[o])
            {
                report.push(ValidationIssue::FunctorIdentity {
                    object: self.source.object_name(o).to_string(),
                });
            }
        }
        for g in self.source.morphism_indices() {
            for f in self.source.morphism_indices() {
                if self.source.cod(f) != self.source.dom(g) {
                    continue;
                }
                let lhs = self.on_morphisms[self.source.compose(g, f)];
                let rhs = self
                    .target
                    .compose(self.on_morphisms[g], self.on_morphisms[f]);
                if lhs != rhs {
                    report.push(ValidationIssue::FunctorComposite {
                        g: self.source.mor_name(g).to_string(),
                        f: self.source.mor_name(f).to_string(),
                    });
                }
            }
        }
        report.into_result()
    }

    pub fn identity(cat: &Cat) -> Functor {
        Functor {
            name: format!("id_{}", cat.name),
            source: cat.clone(),
            target: cat.clone(),
            on_objects: (0..cat.object_count()).collect(),
            on_morphisms: cat.morphism_indices().collect(),
        }
    }

    /// g after f.
    pub fn compose(g: &Functor, f: &Functor) -> Functor {
        assert!(
            same_cat(f.target(), g.source()),
            "functor composition endpoint mismatch"
        );
        Functor {
            name: format!("{}.{}", g.name, f.name),
            source: f.source.clone(),
            target: g.target.clone(),
            on_objects: f.on_objects.iter().map(|&o| g.on_objects[o]).collect(),
            on_morphisms: f.on_morphisms.iter().map(|&m| g.on_morphisms[m]).collect(),
        }
    }

    /// Constant functor at an object.
    pub fn constant(source: &Cat, target: &Cat, at: usize) -> Functor {
        Functor {
            name: format!("const_{}", target.object_name(at)),
            source: source.clone(),
            target: target.clone(),
            on_objects: vec![at; source.object_count()],
            on_morphisms: vec![target.identity(at); source.morphism_count()],
        }
    }

    /// The same functor viewed between the opposite categories.
    pub fn opposite(&self, src_op: &Cat, tgt_op: &Cat) -> Functor {
        Functor {
            name: format!("{}^op", self.name),
            source: src_op.clone(),
            target: tgt_op.clone(),
            on_objects: self.on_objects.clone(),
            on_morphisms: self.on_morphisms.clone(),
        }
    }

    pub fn source(&self) -> &Cat {
        &self.source
    }

    pub fn target(&self) -> &Cat {
        &self.target
    }

    pub fn obj(&self, o: usize) -> usize {
        self.on_objects[o]
    }

    pub fn mor(&self, m: usize) -> usize {
        self.on_morphisms[m]
    }

    pub fn on_objects(&self) -> &[usize] {
        &self.on_objects
    }

    pub fn on_morphisms(&self) -> &[usize] {
        &self.on_morphisms
    }

    /// Whether every source hom-set surjects onto the target hom-set between
    /// the image objects, and injectively so.
    pub fn is_fully_faithful(&self) -> bool {
        for x in 0..self.source.object_count() {
            for y in 0..self.source.object_count() {
                let image: Vec<usize> = self
                    .source
                    .hom(x, y)
                    .iter()
                    .map(|&m| self.on_morphisms[m])
                    .collect();
                let target_hom = self.target.hom(self.obj(x), self.obj(y));
                if image.len() != target_hom.len() {
                    return false;
                }
                let mut seen = image.clone();
                seen.sort_unstable();
                seen.dedup();
                if seen.len() != image.len() {
                    return false;
                }
            }
        }
        true
    }
}

/// Exhaustively enumerate functors A -> B in canonical order. Object maps
/// are explored lexicographically; morphism images are forced for identities
/// and pruned against composition as soon as both factors are assigned.
pub fn enumerate_functors(source: &Cat, target: &Cat, budget: &Budget) -> Result<Vec<Functor>> {
    let mut out = Vec::new();
    let n_obj = source.object_count();
    if target.object_count() == 0 {
        if n_obj == 0 {
            out.push(Functor::identity(target));
        }
        return Ok(out);
    }
    let mut obj_map = vec![0usize; n_obj];
    let mut count: u64 = 0;
    loop {
        extend_morphisms(source, target, &obj_map, &mut out, &mut count, budget)?;
        // odometer over object maps
        let mut i = 0;
        loop {
            if i == n_obj {
                return Ok(out);
            }
            obj_map[i] += 1;
            if obj_map[i] < target.object_count() {
                break;
            }
            obj_map[i] = 0;
            i += 1;
        }
        if n_obj == 0 {
            return Ok(out);
        }
    }
}

fn extend_morphisms(
    source: &Cat,
    target: &Cat,
    obj_map: &[usize],
    out: &mut Vec<Functor>,
    count: &mut u64,
    budget: &Budget,
) -> Result<()> {
    let n_mor = source.morphism_count();
    let mut mor_map = vec![usize::MAX; n_mor];
    for o in 0..source.object_count() {
        mor_map[source.identity(o)] = target.identity(obj_map[o]);
    }
    fn rec(
        source: &Cat,
        target: &Cat,
        obj_map: &[usize],
        mor_map: &mut Vec<usize>,
        next: usize,
        out: &mut Vec<Functor>,
        count: &mut u64,
        budget: &Budget,
    ) -> Result<()> {
        *count += 1;
        if *count > budget.max_functors {
            return Err(Error::budget("enumerate_functors", *count, budget.max_functors));
        }
        let n_mor = source.morphism_count();
        let mut m = next;
        while m < n_mor && mor_map[m] != usize::MAX {
            m += 1;
        }
        if m == n_mor {
            let f = Functor {
                name: String::from("enum"),
                source: source.clone(),
                target: target.clone(),
                on_objects: obj_map.to_vec(),
                on_morphisms: mor_map.clone(),
            };
            // Composition closure was pruned pairwise; the full check is
            // cheap at enumerable sizes and guards the pruning logic.
            if f.check().is_ok() {
                out.push(f);
            }
            return Ok(());
        }
        let dom = obj_map[source.dom(m)];
        let cod = obj_map[source.cod(m)];
        for &img in target.hom(dom, cod) {
            mor_map[m] = img;
            let mut ok = true;
            'outer: for g in 0..n_mor {
                if mor_map[g] == usize::MAX {
                    continue;
                }
                for f in 0..n_mor {
                    if mor_map[f] == usize::MAX || source.cod(f) != source.dom(g) {
                        continue;
                    }
                    let gf = source.compose(g, f);
                    if mor_map[gf] != usize::MAX
                        && mor_map[gf] != target.compose(mor_map[g], mor_map[f])
                    {
                        ok = false;
                        break 'outer;
                    }
                }
            }
            if ok {
                rec(source, target, obj_map, mor_map, m + 1, out, count, budget)?;
            }
            mor_map[m] = usize::MAX;
        }
        Ok(())
    }
    rec(source, target, obj_map, &mut mor_map, 0, out, count, budget)
}

use super::functor::same_cat;
use super::Functor;
use crate::error::{Error, Result, ValidationIssue, ValidationReport};

/// A natural transformation between parallel functors, stored as one target
/// morphism per source object. Naturality is checked on every morphism at
/// construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatTransformation {
    source: Functor,
    target: Functor,
    components: Vec<usize>,
}

impl NatTransformation {
    pub fn new(source: Functor, target: Functor, components: Vec<usize>) -> Result<Self> {
        if !same_cat(source.source(), target.source()) || !same_cat(source.target(), target.target())
        {
            return Err(Error::Internal(
                "natural transformation between non-parallel functors".into(),
            ));
        }
        let t = NatTransformation {
            source,
            target,
            components,
        };
        t.check()?;
        Ok(t)
    }

    fn check(&self) -> Result<()> {
        let mut report = ValidationReport::default();
        let base = self.source.source();
        let amb = self.source.target();
        if self.components.len() != base.object_count() {
            return Err(Error::Internal("component table of the wrong length".into()));
        }
        for a in 0..base.object_count() {
            let c = self.components[a];
            if amb.dom(c) != self.source.obj(a) || amb.cod(c) != self.target.obj(a) {
                report.push(ValidationIssue::ComponentEndpoints {
                    object: base.object_name(a).to_string(),
                });
            }
        }
        if !report.is_ok() {
            return report.into_result();
        }
        for f in base.morphism_indices() {
            let (a, a2) = (base.dom(f), base.cod(f));
            let lhs = amb.compose(self.target.mor(f), self.components[a]);
            let rhs = amb.compose(self.components[a2], self.source.mor(f));
            if lhs != rhs {
                report.push(ValidationIssue::NaturalitySquare {
                    morphism: base.mor_name(f).to_string(),
                });
            }
        }
        report.into_result()
    }

    pub fn identity(f: &Functor) -> NatTransformation {
        let comps = (0..f.source().object_count())
            .map(|a| f.target().identity(f.obj(a)))
            .collect();
        NatTransformation {
            source: f.clone(),
            target: f.clone(),
            components: comps,
        }
    }

    pub fn source(&self) -> &Functor {
        &self.source
    }

    pub fn target(&self) -> &Functor {
        &self.target
    }

    pub fn component(&self, a: usize) -> usize {
        self.components[a]
    }

    pub fn components(&self) -> &[usize] {
        &self.components
    }

    pub fn is_iso(&self) -> bool {
        let amb = self.source.target();
        self.components.iter().all(|&c| amb.is_iso(c))
    }

    pub fn inverse(&self) -> Option<NatTransformation> {
        let amb = self.source.target();
        let comps: Option<Vec<usize>> = self.components.iter().map(|&c| amb.inverse(c)).collect();
        comps.map(|components| NatTransformation {
            source: self.target.clone(),
            target: self.source.clone(),
            components,
        })
    }

    /// Vertical composition: (beta . alpha)_a = beta_a . alpha_a.
    pub fn vertical(beta: &NatTransformation, alpha: &NatTransformation) -> NatTransformation {
        debug_assert_eq!(alpha.target, beta.source);
        let amb = alpha.source.target();
        let components = alpha
            .components
            .iter()
            .zip(&beta.components)
            .map(|(&a, &b)| amb.compose(b, a))
            .collect();
        NatTransformation {
            source: alpha.source.clone(),
            target: beta.target.clone(),
            components,
        }
    }

    /// Whisker on the right by a functor into the base: (alpha . H)_x = alpha_{H x}.
    pub fn whisker_right(&self, h: &Functor) -> NatTransformation {
        let components = (0..h.source().object_count())
            .map(|x| self.components[h.obj(x)])
            .collect();
        NatTransformation {
            source: Functor::compose(&self.source, h),
            target: Functor::compose(&self.target, h),
            components,
        }
    }

    /// Whisker on the left by a functor out of the ambient: (H . alpha)_a = H(alpha_a).
    pub fn whisker_left(&self, h: &Functor) -> NatTransformation {
        let components = self.components.iter().map(|&c| h.mor(c)).collect();
        NatTransformation {
            source: Functor::compose(h, &self.source),
            target: Functor::compose(h, &self.target),
            components,
        }
    }
}

use super::Copresheaf;
use crate::budget::Budget;
use crate::error::Result;
use crate::fincat::Functor;
use crate::finset::{self, Diagram};
use crate::kan::limit_in_category;

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub enum LexProbeReport {
    /// The comparison P(lim c_j) -> lim P(c_j) is a bijection.
    Preserved { probe: String },
    NotPreserved {
        probe: String,
        domain_size: usize,
        limit_size: usize,
        injective: bool,
        surjective: bool,
    },
    /// The probe has no limit in the base; skipped with a warning.
    NoLimit { probe: String },
}

#[derive(Debug, Clone, Default, serde::Serialize)]
pub struct LexReport {
    pub probes: Vec<LexProbeReport>,
}

impl LexReport {
    pub fn all_preserved(&self) -> bool {
        self.probes
            .iter()
            .all(|p| matches!(p, LexProbeReport::Preserved { .. }))
    }
}

/// For each probe diagram with a limit in the base, build the canonical
/// comparison P(lim c_j) -> lim P(c_j) from the limiting cone legs and test
/// it for bijectivity.
pub fn preserves_finite_limits(
    p: &Copresheaf,
    probes: &[Functor],
    budget: &Budget,
) -> Result<LexReport> {
    let mut report = LexReport::default();
    for probe in probes {
        let name = probe.name.clone();
        let Some(cone) = limit_in_category(probe, budget)? else {
            report.probes.push(LexProbeReport::NoLimit { probe: name });
            continue;
        };
        let shape = probe.source();
        let image = Diagram::new(
            shape.clone(),
            (0..shape.object_count())
                .map(|o| p.at[probe.obj(o)].clone())
                .collect(),
            shape
                .morphism_indices()
                .map(|m| p.act[probe.mor(m)].clone())
                .collect(),
        )?;
        let lim = finset::limit(&image, budget)?;
        let apex_set = &p.at[cone.apex];
        let mut image_indices = Vec::with_capacity(apex_set.len());
        let mut seen = vec![false; lim.tuples.len()];
        for x in 0..apex_set.len() {
            let tuple: Vec<usize> = cone
                .legs
                .iter()
                .map(|&leg| p.act[leg].apply(x))
                .collect();
            let idx = lim
                .tuples
                .iter()
                .position(|t| t == &tuple)
                .ok_or_else(|| {
                    crate::error::Error::Internal(
                        "lex comparison lands outside the limit".into(),
                    )
                })?;
            image_indices.push(idx);
            seen[idx] = true;
        }
        let injective = {
            let mut sorted = image_indices.clone();
            sorted.sort_unstable();
            sorted.dedup();
            sorted.len() == image_indices.len()
        };
        let surjective = seen.iter().all(|&s| s);
        if injective && surjective && apex_set.len() == lim.tuples.len() {
            report.probes.push(LexProbeReport::Preserved { probe: name });
        } else {
            report.probes.push(LexProbeReport::NotPreserved {
                probe: name,
                domain_size: apex_set.len(),
                limit_size: lim.tuples.len(),
                injective,
                surjective,
            });
        }
    }
    Ok(report)
}

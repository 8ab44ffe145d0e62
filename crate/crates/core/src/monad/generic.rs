use super::algebra::{em_category, EMCategory};
use super::analysis::{fixed_points, lift_fixed_to_algebras};
use super::codensity::{codensity_monad, codensity_monad_of, restriction_comparison, CodensityOutcome};
use super::{find_monad_isomorphism, Monad, MonadMorphism};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::fincat::{FullSubcategory, Functor, NatTransformation};
use crate::kan::{factor_through_terminal, is_codense, Cone};

/// Result of searching for a full subcategory whose codensity monad is the
/// given monad.
#[derive(Debug)]
pub enum GiOutcome {
    Found {
        witness: FullSubcategory,
        monad: Monad,
        iso: NatTransformation,
        subsets_tried: usize,
    },
    NoneFound {
        subsets_tried: usize,
        nonexistent: usize,
    },
}

impl GiOutcome {
    pub fn witness(&self) -> Option<&FullSubcategory> {
        match self {
            GiOutcome::Found { witness, .. } => Some(witness),
            GiOutcome::NoneFound { .. } => None,
        }
    }
}

/// Search full subcategories in ascending size, then lexicographically, for
/// one whose codensity monad is isomorphic to m as a monad. Candidates are
/// restricted to subsets of the fixed points (a codensity monad fixes every
/// object of its inducing subcategory); `prune_to_fixed: false` audits the
/// full subset lattice instead.
pub fn gi_search(m: &Monad, prune_to_fixed: bool, budget: &Budget) -> Result<GiOutcome> {
    let pool: Vec<usize> = if prune_to_fixed {
        fixed_points(m, budget)?.objects
    } else {
        (0..m.carrier.object_count()).collect()
    };
    let mut tried = 0usize;
    let mut nonexistent = 0usize;
    for size in 0..=pool.len() {
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            if tried as u64 >= budget.max_subsets {
                return Err(Error::budget(
                    "gi_search subsets",
                    tried as u64,
                    budget.max_subsets,
                ));
            }
            tried += 1;
            let objects: Vec<usize> = subset.iter().map(|&i| pool[i]).collect();
            let sub = FullSubcategory::new(&m.carrier, objects, budget)?;
            match codensity_monad(&sub, budget)? {
                CodensityOutcome::Exists(c) => {
                    if let Some(iso) = find_monad_isomorphism(&c.monad, m, budget)? {
                        return Ok(GiOutcome::Found {
                            witness: sub,
                            monad: c.monad,
                            iso,
                            subsets_tried: tried,
                        });
                    }
                }
                CodensityOutcome::Missing { .. } => nonexistent += 1,
            }
            if !next_k_subset(&mut subset, pool.len()) {
                break;
            }
        }
    }
    Ok(GiOutcome::NoneFound {
        subsets_tried: tried,
        nonexistent,
    })
}

/// Advance a k-subset of 0..n in lexicographic order; false when exhausted.
fn next_k_subset(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] != i + n - k {
            subset[i] += 1;
            for j in (i + 1)..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[derive(Debug, Default, serde::Serialize)]
pub struct ConjectureReport {
    pub gi_witness: Option<Vec<String>>,
    pub fixed_points: Vec<String>,
    pub t_fix_exists: bool,
    /// phi: T_fix => T_witness, from the restriction comparison.
    pub phi_constructed: bool,
    pub phi_invertible: bool,
    /// sigma: M => Ran_U U, the structure-semantics comparison.
    pub sigma_invertible: bool,
    /// psi: Ran_U U => T_fix, from the restriction comparison along the
    /// fixed-point lift.
    pub psi_constructed: bool,
    pub psi_invertible: bool,
    /// The two composites M => M and T_fix => T_fix are identities.
    pub mutually_inverse: bool,
    /// Ground truth at this instance: T_fix is isomorphic to M as a monad.
    pub t_fix_isomorphic_to_m: bool,
    pub notes: Vec<String>,
}

/// Gather evidence for the fixed-point characterization: build the two
/// canonical maps between the codensity monad of the fixed points and the
/// monad itself, and report whether they are mutually inverse monad
/// isomorphisms. Nothing is asserted; the report records what was computed.
pub fn conjecture_probe(m: &Monad, budget: &Budget) -> Result<ConjectureReport> {
    let mut report = ConjectureReport::default();
    let k_cat = &m.carrier;

    let gi = gi_search(m, true, budget)?;
    let GiOutcome::Found {
        witness, iso: tau, ..
    } = gi
    else {
        report
            .notes
            .push("monad is not generically idempotent within budget; probe skipped".into());
        return Ok(report);
    };
    report.gi_witness = Some(
        witness
            .objects
            .iter()
            .map(|&o| k_cat.object_name(o).to_string())
            .collect(),
    );

    let fix = fixed_points(m, budget)?;
    report.fixed_points = fix
        .objects
        .iter()
        .map(|&o| k_cat.object_name(o).to_string())
        .collect();
    let t_fix = match codensity_monad(&fix, budget)? {
        CodensityOutcome::Exists(c) => c.monad,
        CodensityOutcome::Missing { objects } => {
            report.t_fix_exists = false;
            report
                .notes
                .push(format!("codensity monad of the fixed points missing at {objects:?}"));
            return Ok(report);
        }
    };
    report.t_fix_exists = true;
    report.t_fix_isomorphic_to_m = find_monad_isomorphism(&t_fix, m, budget)?.is_some();

    // phi: T_fix => T_witness via the connecting inclusion witness -> fix
    let connecting = connecting_functor(&witness, &fix)?;
    let phi = match restriction_comparison(&connecting, &fix.inclusion, budget) {
        Ok(phi) => phi,
        Err(e) => {
            report.notes.push(format!("phi construction failed: {e}"));
            return Ok(report);
        }
    };
    report.phi_constructed = true;
    report.phi_invertible = phi.is_iso();

    // sigma: M => Ran_U U via the structure-semantics cone
    let alg = em_category(m, budget)?;
    let (sigma_iso, psi) = match structure_semantics_route(m, &alg, &fix, budget) {
        Ok(v) => v,
        Err(e) => {
            report.notes.push(format!("psi construction failed: {e}"));
            return Ok(report);
        }
    };
    report.sigma_invertible = sigma_iso.is_some();
    report.psi_constructed = true;
    report.psi_invertible = psi.is_iso();

    if let Some(sigma) = sigma_iso {
        // round trips: tau . phi . psi . sigma on M, and the other way
        let m_to_fix = NatTransformation::vertical(&psi.transform, &sigma);
        let fix_to_m = NatTransformation::vertical(&tau, &phi.transform);
        let round_m = NatTransformation::vertical(&fix_to_m, &m_to_fix);
        let round_fix = NatTransformation::vertical(&m_to_fix, &fix_to_m);
        let id_m = (0..k_cat.object_count())
            .all(|k| round_m.component(k) == k_cat.identity(m.apply(k)));
        let id_fix = (0..k_cat.object_count())
            .all(|k| round_fix.component(k) == k_cat.identity(t_fix.apply(k)));
        report.mutually_inverse = id_m && id_fix;
    }
    Ok(report)
}

/// The inclusion of one full subcategory into a larger one on the same
/// parent, as a functor between the induced categories.
fn connecting_functor(smaller: &FullSubcategory, larger: &FullSubcategory) -> Result<Functor> {
    let on_objects: Vec<usize> = smaller
        .objects
        .iter()
        .map(|&o| {
            larger
                .objects
                .binary_search(&o)
                .map_err(|_| Error::Internal("witness object is not a fixed point".into()))
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let on_morphisms: Vec<usize> = smaller
        .category
        .morphism_indices()
        .map(|fm| {
            let parent_m = smaller.inclusion.mor(fm);
            larger
                .inclusion
                .on_morphisms()
                .iter()
                .position(|&pm| pm == parent_m)
                .ok_or_else(|| Error::Internal("witness arrow missing from fixed points".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Functor::new(
        "connect",
        smaller.category.clone(),
        larger.category.clone(),
        on_objects,
        on_morphisms,
    )
}

/// sigma: M => Ran_U U (invertible exactly when structure semantics holds at
/// this size) and psi: Ran_U U => T_fix via the fixed-point lift.
fn structure_semantics_route(
    m: &Monad,
    alg: &EMCategory,
    fix: &FullSubcategory,
    budget: &Budget,
) -> Result<(Option<NatTransformation>, MonadMorphism)> {
    let k_cat = &m.carrier;
    let u = &alg.forgetful;
    let ran_u = match codensity_monad_of(u, budget)? {
        CodensityOutcome::Exists(c) => c,
        CodensityOutcome::Missing { objects } => {
            return Err(Error::missing_at("Ran_U(U)", objects.join(",")))
        }
    };
    // sigma_k: T(k) -> Ran_U U (k): legs at ((k', xi'), f: k -> k') are
    // xi' . T(f)
    let mut sigma_comps = Vec::with_capacity(k_cat.object_count());
    for k in 0..k_cat.object_count() {
        let wit = ran_u.ran.witnesses[k].as_ref().unwrap();
        let legs: Vec<usize> = wit
            .comma
            .objects
            .iter()
            .map(|&(alg_idx, f)| {
                let a = &alg.algebras[alg_idx];
                k_cat.compose(a.structure, m.endo.mor(f))
            })
            .collect();
        let from = Cone {
            apex: m.apply(k),
            legs,
        };
        let diagram = Functor::compose(u, &wit.comma.projection);
        sigma_comps.push(factor_through_terminal(&diagram, &wit.cone, &from)?);
    }
    let sigma = NatTransformation::new(
        m.endo.clone(),
        ran_u.monad.endo.clone(),
        sigma_comps,
    )?;
    let sigma = if sigma.is_iso() { Some(sigma) } else { None };

    let j = lift_fixed_to_algebras(m, fix, alg)?;
    let psi = restriction_comparison(&j, u, budget)?;
    // psi lands in T_{U . j}; U . j is the fixed-point inclusion on the
    // nose, so the target is T_fix up to the same construction
    Ok((sigma, psi))
}

#[derive(Debug, serde::Serialize)]
pub struct CodenseReport {
    pub lifted: bool,
    pub codense_in_algebras: bool,
    pub idempotent_on_subcategory: bool,
    /// When codense and idempotent on the subcategory, the search must
    /// succeed; recorded here.
    pub gi_confirmed: Option<bool>,
}

/// Lift a full subcategory of fixed points into the algebras and test
/// whether it is codense there; when it is, and the monad is idempotent on
/// it, cross-check that the generically-idempotent search succeeds.
pub fn codense_in_algebras(
    sub: &FullSubcategory,
    m: &Monad,
    alg: &EMCategory,
    budget: &Budget,
) -> Result<CodenseReport> {
    let k_cat = &m.carrier;
    for &a in &sub.objects {
        if !k_cat.is_iso(m.unit.component(a)) {
            return Err(Error::missing(format!(
                "object {} does not lift to an algebra (unit not invertible)",
                k_cat.object_name(a)
            )));
        }
    }
    let lift = lift_fixed_to_algebras(m, sub, alg)?;
    let codense = is_codense(&lift, budget)?.holds;
    let idem = sub
        .objects
        .iter()
        .all(|&a| k_cat.is_iso(m.mult.component(a)));
    let gi_confirmed = if codense && idem {
        Some(matches!(
            gi_search(m, true, budget)?,
            GiOutcome::Found { .. }
        ))
    } else {
        None
    };
    Ok(CodenseReport {
        lifted: true,
        codense_in_algebras: codense,
        idempotent_on_subcategory: idem,
        gi_confirmed,
    })
}

//! Forcing sets, forcing numbers f(M), and the maximum forcing number F(G).

use crate::error::ComputeError;
use crate::graph::Graph;
use crate::hitting::minimum_hitting_set;
use crate::matchings::{
    count_pms_containing, enumerate_perfect_matchings, symmetric_difference_cycles, Matching,
};
use crate::set::EdgeSet;
use serde::Serialize;

/// A matching together with a minimum forcing set for it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForcingCertificate {
    pub matching: Matching,
    pub forcing_set: EdgeSet,
    pub number: usize,
}

/// True iff `m` is the unique perfect matching containing `s`.
pub fn is_forcing_set(g: &Graph, m: &Matching, s: &EdgeSet) -> Result<bool, ComputeError> {
    if !m.is_perfect(g) {
        return Err(ComputeError::NotAPerfectMatching);
    }
    if !s.is_subset(m.edges()) {
        return Err(ComputeError::NotASubsetOfMatching);
    }
    Ok(count_pms_containing(g, s, 2).is_exactly_one())
}

/// Constraint family for f(M): for every M-alternating cycle C, the forcing
/// set must contain an edge of M on C. The alternating cycles are exactly the
/// symmetric-difference cycles against every other perfect matching.
fn alternating_constraints(
    g: &Graph,
    m: &Matching,
    pms: &[Matching],
) -> Result<Vec<EdgeSet>, ComputeError> {
    let mut constraints = Vec::new();
    for other in pms {
        if other.edges() == m.edges() {
            continue;
        }
        for cycle in symmetric_difference_cycles(g, m, other)? {
            constraints.push(cycle.frame_a); // the M side of the cycle
        }
    }
    constraints.sort_by(|a, b| a.size_lex_cmp(b));
    constraints.dedup();
    Ok(constraints)
}

/// Minimum forcing set of `m`, as a hitting set over the M-alternating
/// cycles; the result is cross-checked with the uniqueness test.
pub fn forcing_number(
    g: &Graph,
    m: &Matching,
    pm_cap: usize,
) -> Result<ForcingCertificate, ComputeError> {
    if !m.is_perfect(g) {
        return Err(ComputeError::NotAPerfectMatching);
    }
    let pms = enumerate_perfect_matchings(g, pm_cap)?;
    let constraints = alternating_constraints(g, m, &pms)?;
    let forcing_set = minimum_hitting_set(g.edge_count(), &constraints, None)
        .expect("alternating constraints are nonempty frames");
    debug_assert!(forcing_set.is_subset(m.edges()));
    if !is_forcing_set(g, m, &forcing_set)? {
        // the two routes disagree; this would be a solver bug
        return Err(ComputeError::Domain(
            "hitting-set forcing set failed the uniqueness cross-check".into(),
        ));
    }
    Ok(ForcingCertificate {
        number: forcing_set.len(),
        forcing_set,
        matching: m.clone(),
    })
}

/// F(G): the maximum of f(M) over all perfect matchings, with a witness.
/// Ties go to the lexicographically smallest matching.
pub fn max_forcing_number(
    g: &Graph,
    pm_cap: usize,
) -> Result<(usize, ForcingCertificate), ComputeError> {
    let pms = enumerate_perfect_matchings(g, pm_cap)?;
    if pms.is_empty() {
        return Err(ComputeError::NoPerfectMatching);
    }
    let mut best: Option<ForcingCertificate> = None;
    for m in &pms {
        let cert = forcing_number(g, m, pm_cap)?;
        // pms are in canonical order, so strict comparison keeps the
        // lexicographically smallest witness among ties
        if best.as_ref().is_none_or(|b| cert.number > b.number) {
            best = Some(cert);
        }
    }
    let best = best.expect("at least one matching");
    Ok((best.number, best))
}

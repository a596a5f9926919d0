//! Complete forcing sets: the ordering-driven construction, two independent
//! verifiers, and the exact solver for cf(G).

use crate::error::ComputeError;
use crate::forcing::is_forcing_set;
use crate::graph::{connectivity, degeneracy, distance_matrix, Graph};
use crate::hitting::minimum_hitting_set;
use crate::matchings::{enumerate_nice_cycles, enumerate_perfect_matchings};
use crate::set::{EdgeSet, VertexOrdering, VertexSet};
use num::rational::Ratio;
use serde::Serialize;

/// Enumeration caps for the exact paths. Saturating a cap downgrades
/// `exact_cf` to the constructed upper bound instead of failing.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Caps {
    pub pm_cap: usize,
    pub cycle_cap: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            pm_cap: 1_000_000,
            cycle_cap: 1_000_000,
        }
    }
}

/// One selection step of the construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstructionStep {
    /// The selected vertex (earliest surviving vertex of the ordering).
    pub vertex: usize,
    /// Residual boundary of the vertex, in original edge indices (B_i).
    pub boundary: EdgeSet,
    /// Number of residual edges incident to a neighbor of the vertex (|A_i|).
    pub neighbor_incident: usize,
    /// Exact average 2-degree of the vertex in the residual graph.
    pub avg_two_degree: Ratio<u64>,
}

/// Full trace of one construction run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstructionTrace {
    pub ordering: VertexOrdering,
    pub steps: Vec<ConstructionStep>,
    /// B: union of the per-step boundaries.
    pub covered: EdgeSet,
    /// S = E \ B, the constructed complete forcing set.
    pub forcing_set: EdgeSet,
}

impl ConstructionTrace {
    pub fn selected_vertices(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.vertex).collect()
    }
}

/// Runs the construction: repeatedly select the earliest surviving vertex of
/// the ordering, move its residual incident edges into B, delete its closed
/// residual neighborhood; return S = E \ B. Isolated residual vertices are
/// still selected (with an empty boundary) and removed.
pub fn algorithm_a(
    g: &Graph,
    ordering: &VertexOrdering,
) -> Result<ConstructionTrace, ComputeError> {
    if !connectivity(g).0 {
        return Err(ComputeError::Disconnected);
    }
    assert_eq!(ordering.len(), g.vertex_count(), "ordering size mismatch");
    let mut alive = vec![true; g.vertex_count()];
    let mut covered = g.empty_edge_set();
    let mut steps = Vec::new();
    for &v in ordering.as_slice() {
        if !alive[v] {
            continue;
        }
        let mut boundary = g.empty_edge_set();
        let mut neighbors = Vec::new();
        for &(u, e) in g.adjacency(v) {
            if alive[u] {
                boundary.insert(e);
                neighbors.push(u);
            }
        }
        // |A_i| and avg in the residual graph, before deletion
        let residual_degree = |w: usize| g.adjacency(w).iter().filter(|&&(x, _)| alive[x]).count();
        let mut neighbor_edges = g.empty_edge_set();
        let mut t = 0u64;
        for &u in &neighbors {
            t += residual_degree(u) as u64;
            for &(x, e) in g.adjacency(u) {
                if alive[x] {
                    neighbor_edges.insert(e);
                }
            }
        }
        let d = neighbors.len() as u64;
        let avg = if d == 0 {
            Ratio::from_integer(0)
        } else {
            Ratio::new(t, d)
        };
        covered = covered.union(&boundary);
        alive[v] = false;
        for &u in &neighbors {
            alive[u] = false;
        }
        steps.push(ConstructionStep {
            vertex: v,
            boundary,
            neighbor_incident: neighbor_edges.len(),
            avg_two_degree: avg,
        });
    }
    let forcing_set = covered.complement();
    Ok(ConstructionTrace {
        ordering: ordering.clone(),
        steps,
        covered,
        forcing_set,
    })
}

/// Ordering that repeatedly picks the residual vertex with the minimum exact
/// average 2-degree (ties to the lowest index), deletes its closed
/// neighborhood, and finally appends the deleted-but-unselected vertices in
/// index order.
pub fn order_min_avg_two_degree(g: &Graph) -> VertexOrdering {
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    let mut selected = Vec::new();
    loop {
        let residual_degree = |w: usize| g.adjacency(w).iter().filter(|&&(x, _)| alive[x]).count();
        let best = (0..n).filter(|&v| alive[v]).min_by_key(|&v| {
            let d = residual_degree(v) as u64;
            let avg = if d == 0 {
                Ratio::from_integer(0)
            } else {
                let t: u64 = g
                    .adjacency(v)
                    .iter()
                    .filter(|&&(u, _)| alive[u])
                    .map(|&(u, _)| residual_degree(u) as u64)
                    .sum();
                Ratio::new(t, d)
            };
            (avg, v)
        });
        let v = match best {
            None => break,
            Some(v) => v,
        };
        selected.push(v);
        let neighbors: Vec<usize> = g
            .adjacency(v)
            .iter()
            .filter(|&&(u, _)| alive[u])
            .map(|&(u, _)| u)
            .collect();
        alive[v] = false;
        for u in neighbors {
            alive[u] = false;
        }
    }
    let mut order = selected.clone();
    let in_order: VertexSet = VertexSet::from_indices(n, &selected);
    order.extend((0..n).filter(|&v| !in_order.contains(v)));
    VertexOrdering::new(order).expect("selection covers each vertex once")
}

/// Ordering that front-loads the min-degree peel order.
pub fn order_degeneracy(g: &Graph) -> VertexOrdering {
    degeneracy(g).1
}

/// Exhaustively searches (desk scale) for a vertex set W of pairwise distance
/// at least 3 maximizing |boundary(W)|, and returns an ordering with W first,
/// plus the witness W and |boundary(W)|. Since members of W share no incident
/// edges, |boundary(W)| is the sum of their degrees.
pub fn order_w_set(
    g: &Graph,
    guard: usize,
) -> Result<(VertexOrdering, VertexSet, usize), ComputeError> {
    let n = g.vertex_count();
    if n > guard {
        return Err(ComputeError::GuardExceeded { n, limit: guard });
    }
    let dist = distance_matrix(g);
    let mut best: Option<(usize, Vec<usize>)> = None;
    let mut current: Vec<usize> = Vec::new();
    fn extend(
        g: &Graph,
        dist: &[Vec<usize>],
        from: usize,
        current: &mut Vec<usize>,
        best: &mut Option<(usize, Vec<usize>)>,
    ) {
        if !current.is_empty() {
            let score: usize = current.iter().map(|&v| g.degree(v)).sum();
            if best.as_ref().is_none_or(|(b, _)| score > *b) {
                *best = Some((score, current.clone()));
            }
        }
        for v in from..g.vertex_count() {
            if current.iter().all(|&u| dist[u][v] >= 3) {
                current.push(v);
                extend(g, dist, v + 1, current, best);
                current.pop();
            }
        }
    }
    extend(g, &dist, 0, &mut current, &mut best);
    let (score, w) = best.ok_or(ComputeError::EmptyGraph)?;
    let wset = VertexSet::from_indices(n, &w);
    let mut order = w.clone();
    order.extend((0..n).filter(|&v| !wset.contains(v)));
    Ok((
        VertexOrdering::new(order).expect("permutation"),
        wset,
        score,
    ))
}

/// True iff `s` intersects every perfect matching in a forcing set of it.
pub fn is_complete_forcing_set_definitional(
    g: &Graph,
    s: &EdgeSet,
    pm_cap: usize,
) -> Result<bool, ComputeError> {
    let pms = enumerate_perfect_matchings(g, pm_cap)?;
    if pms.is_empty() {
        return Err(ComputeError::NoPerfectMatching);
    }
    for m in &pms {
        let inside = s.intersection(m.edges());
        if !is_forcing_set(g, m, &inside)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff `s` intersects both frames of every nice cycle.
pub fn is_complete_forcing_set_frames(
    g: &Graph,
    s: &EdgeSet,
    caps: Caps,
) -> Result<bool, ComputeError> {
    let cycles = enumerate_nice_cycles(g, caps.pm_cap, caps.cycle_cap)?;
    Ok(cycles
        .iter()
        .all(|c| s.intersects(&c.frame_a) && s.intersects(&c.frame_b)))
}

/// How a `CfResult` value was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CfMethod {
    Exact,
    ConstructedUpperBound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CfResult {
    pub value: usize,
    pub optimal_set: EdgeSet,
    pub method: CfMethod,
    /// Number of distinct nice-cycle frames fed to the hitting-set solver.
    pub constraints_used: usize,
}

/// Built-in ordering strategies, in tournament order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Strategy {
    GivenIndex,
    MinAvgTwoDegree,
    Degeneracy,
    WSet,
}

impl Strategy {
    pub fn label(self) -> &'static str {
        match self {
            Strategy::GivenIndex => "given-index",
            Strategy::MinAvgTwoDegree => "min-avg-2-degree",
            Strategy::Degeneracy => "degeneracy",
            Strategy::WSet => "w-set",
        }
    }
}

/// Default size guard for the exhaustive W-set search.
pub const W_SET_GUARD: usize = 16;

/// Runs every built-in strategy and returns the smallest output set;
/// ties break by strategy list order.
pub fn best_construction(g: &Graph) -> Result<(ConstructionTrace, Strategy), ComputeError> {
    let mut candidates: Vec<(ConstructionTrace, Strategy)> = vec![
        (
            algorithm_a(g, &VertexOrdering::identity(g.vertex_count()))?,
            Strategy::GivenIndex,
        ),
        (
            algorithm_a(g, &order_min_avg_two_degree(g))?,
            Strategy::MinAvgTwoDegree,
        ),
        (algorithm_a(g, &order_degeneracy(g))?, Strategy::Degeneracy),
    ];
    if let Ok((ordering, _, _)) = order_w_set(g, W_SET_GUARD) {
        candidates.push((algorithm_a(g, &ordering)?, Strategy::WSet));
    }
    Ok(candidates
        .into_iter()
        .min_by_key(|(trace, _)| trace.forcing_set.len())
        .expect("at least one strategy"))
}

/// Exact cf(G) as a minimum hitting set over the nice-cycle frames. Cap
/// saturation degrades to the constructed upper bound rather than failing.
pub fn exact_cf(g: &Graph, caps: Caps) -> Result<CfResult, ComputeError> {
    let (trace, _) = best_construction(g)?;
    let cycles = match enumerate_nice_cycles(g, caps.pm_cap, caps.cycle_cap) {
        Ok(cycles) => cycles,
        Err(e) if e.is_saturation() => {
            return Ok(CfResult {
                value: trace.forcing_set.len(),
                optimal_set: trace.forcing_set,
                method: CfMethod::ConstructedUpperBound,
                constraints_used: 0,
            });
        }
        Err(e) => return Err(e),
    };
    let mut constraints: Vec<EdgeSet> = Vec::with_capacity(cycles.len() * 2);
    for c in cycles {
        constraints.push(c.frame_a);
        constraints.push(c.frame_b);
    }
    constraints.sort_by(|a, b| a.size_lex_cmp(b));
    constraints.dedup();
    let optimal_set = minimum_hitting_set(g.edge_count(), &constraints, Some(&trace.forcing_set))
        .expect("frames are nonempty");
    if !is_complete_forcing_set_definitional(g, &optimal_set, caps.pm_cap)? {
        return Err(ComputeError::Domain(
            "hitting-set optimum failed the definitional cross-check".into(),
        ));
    }
    Ok(CfResult {
        value: optimal_set.len(),
        optimal_set,
        method: CfMethod::Exact,
        constraints_used: constraints.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{graph_h, graph_l};
    use crate::graph::{cartesian_product, gen_cycle, gen_path};

    #[test]
    fn example_run_on_h_with_identity_ordering() {
        let g = graph_h();
        let trace = algorithm_a(&g, &VertexOrdering::identity(8)).unwrap();
        // S = {bc, bd, de, df, ef, eg, fg, gh}
        assert_eq!(trace.forcing_set.to_vec(), vec![2, 3, 7, 8, 9, 10, 11, 12]);
        // B = {ab, ah, cd, ce, cf}
        assert_eq!(trace.covered.to_vec(), vec![0, 1, 4, 5, 6]);
        assert_eq!(trace.selected_vertices(), vec![0, 2, 6]);
    }

    #[test]
    fn selected_vertices_are_separated_with_disjoint_boundaries() {
        let g = graph_h();
        let dist = distance_matrix(&g);
        for ordering in [
            VertexOrdering::identity(8),
            order_min_avg_two_degree(&g),
            order_degeneracy(&g),
        ] {
            let trace = algorithm_a(&g, &ordering).unwrap();
            let sel = trace.selected_vertices();
            for i in 0..sel.len() {
                for j in i + 1..sel.len() {
                    // closed neighborhoods are deleted, so later selections
                    // are never adjacent to earlier ones
                    assert!(dist[sel[i]][sel[j]] >= 2);
                    assert!(!trace.steps[i].boundary.intersects(&trace.steps[j].boundary));
                }
            }
        }
    }

    #[test]
    fn min_avg_ordering_on_h() {
        let g = graph_h();
        let ordering = order_min_avg_two_degree(&g);
        let trace = algorithm_a(&g, &ordering).unwrap();
        assert_eq!(trace.selected_vertices(), vec![0, 4]); // a then e
        assert_eq!(trace.steps[0].avg_two_degree, Ratio::new(5, 2));
        assert_eq!(trace.steps[1].avg_two_degree, Ratio::new(3, 1));
        assert_eq!(trace.forcing_set.len(), 7);
    }

    #[test]
    fn trace_audit_sums_to_s() {
        let g = graph_h();
        for ordering in [VertexOrdering::identity(8), order_min_avg_two_degree(&g)] {
            let trace = algorithm_a(&g, &ordering).unwrap();
            let total: usize = trace
                .steps
                .iter()
                .map(|s| s.neighbor_incident - s.boundary.len())
                .collect::<Vec<_>>()
                .iter()
                .sum();
            assert_eq!(total, trace.forcing_set.len());
            // |A_i| never exceeds avg * |B_i| (edges between neighbors are
            // counted once in the set but twice in the 2-degree)
            for s in &trace.steps {
                let lhs = Ratio::from_integer(s.neighbor_incident as u64);
                let rhs = s.avg_two_degree * Ratio::from_integer(s.boundary.len() as u64);
                assert!(lhs <= rhs);
            }
        }
    }

    #[test]
    fn w_set_on_l_is_a_singleton() {
        let g = graph_l();
        let (ordering, w, boundary_size) = order_w_set(&g, W_SET_GUARD).unwrap();
        // diameter 2, so no two vertices are at distance 3
        assert_eq!(w.len(), 1);
        assert_eq!(boundary_size, 5);
        // the W-set analysis only guarantees m - |boundary(W)| = 13; the run
        // keeps selecting past W and does one edge better
        let trace = algorithm_a(&g, &ordering).unwrap();
        assert_eq!(trace.forcing_set.len(), 12);
        assert!(trace.forcing_set.len() <= g.edge_count() - boundary_size);
    }

    #[test]
    fn l_with_a_e_first_beats_w_set() {
        let g = graph_l();
        let ordering = VertexOrdering::new(vec![0, 4, 1, 2, 3, 5, 6, 7]).unwrap();
        let trace = algorithm_a(&g, &ordering).unwrap();
        assert_eq!(trace.forcing_set.len(), 12);
        let (best, _) = best_construction(&g).unwrap();
        assert!(best.forcing_set.len() <= 12);
    }

    #[test]
    fn k2_construction_is_empty() {
        let g = gen_path(2).unwrap();
        for strategy in [
            algorithm_a(&g, &VertexOrdering::identity(2)).unwrap(),
            algorithm_a(&g, &order_min_avg_two_degree(&g)).unwrap(),
            best_construction(&g).unwrap().0,
        ] {
            assert!(strategy.forcing_set.is_empty());
        }
    }

    #[test]
    fn disconnected_is_rejected() {
        let g = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            algorithm_a(&g, &VertexOrdering::identity(4)),
            Err(ComputeError::Disconnected)
        );
    }

    #[test]
    fn verifiers_on_the_example_set() {
        let g = graph_h();
        // S = {cf, fd, de, ec, ah, ef} = indices {6, 8, 7, 5, 1, 9}
        let s = EdgeSet::from_indices(13, &[1, 5, 6, 7, 8, 9]);
        assert_eq!(
            is_complete_forcing_set_definitional(&g, &s, 1_000_000),
            Ok(true)
        );
        assert_eq!(
            is_complete_forcing_set_frames(&g, &s, Caps::default()),
            Ok(true)
        );
        assert_eq!(
            is_complete_forcing_set_definitional(&g, &g.empty_edge_set(), 1_000_000),
            Ok(false)
        );
        assert_eq!(
            is_complete_forcing_set_definitional(&g, &g.full_edge_set(), 1_000_000),
            Ok(true)
        );
    }

    #[test]
    fn c4_verifier_cases() {
        let g = gen_cycle(4).unwrap();
        let one = EdgeSet::from_indices(4, &[0]);
        assert_eq!(
            is_complete_forcing_set_frames(&g, &one, Caps::default()),
            Ok(false)
        );
        let adjacent = EdgeSet::from_indices(4, &[0, 1]);
        assert_eq!(
            is_complete_forcing_set_frames(&g, &adjacent, Caps::default()),
            Ok(true)
        );
        assert_eq!(
            is_complete_forcing_set_definitional(&g, &adjacent, 1_000_000),
            Ok(true)
        );
    }

    #[test]
    fn exact_cf_values() {
        let h = graph_h();
        let r = exact_cf(&h, Caps::default()).unwrap();
        assert_eq!(r.value, 6);
        assert_eq!(r.method, CfMethod::Exact);
        assert!(is_complete_forcing_set_frames(&h, &r.optimal_set, Caps::default()).unwrap());

        let c4 = gen_cycle(4).unwrap();
        assert_eq!(exact_cf(&c4, Caps::default()).unwrap().value, 2);

        let k2 = gen_path(2).unwrap();
        assert_eq!(exact_cf(&k2, Caps::default()).unwrap().value, 0);
    }

    #[test]
    fn exact_cf_degrades_to_upper_bound_on_cap() {
        let g = graph_h();
        let r = exact_cf(
            &g,
            Caps {
                pm_cap: 2,
                cycle_cap: 2,
            },
        )
        .unwrap();
        assert_eq!(r.method, CfMethod::ConstructedUpperBound);
        assert!(r.value >= 6);
        assert!(is_complete_forcing_set_definitional(&g, &r.optimal_set, 1_000_000).unwrap());
    }

    #[test]
    fn grid_formula_small() {
        let p2 = gen_path(2).unwrap();
        let g22 = cartesian_product(&p2, &p2).unwrap();
        assert_eq!(exact_cf(&g22, Caps::default()).unwrap().value, 2);
        let p4 = gen_path(4).unwrap();
        let g24 = cartesian_product(&p2, &p4).unwrap();
        assert_eq!(exact_cf(&g24, Caps::default()).unwrap().value, 5);
    }

    #[test]
    fn exact_cf_no_pm_is_an_error() {
        let star = Graph::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(
            exact_cf(&star, Caps::default()),
            Err(ComputeError::NoPerfectMatching)
        );
    }
}

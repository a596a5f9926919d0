//! Perfect matching enumeration and nice-cycle machinery.

use crate::error::ComputeError;
use crate::graph::{induced_delete, Graph};
use crate::set::{EdgeSet, VertexSet};
use serde::Serialize;
use std::collections::BTreeMap;

/// A matching, held as an edge-index set. Construction checks disjointness.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Matching {
    edges: EdgeSet,
}

impl Matching {
    pub fn new(g: &Graph, edges: EdgeSet) -> Result<Self, ComputeError> {
        if edges.universe() != g.edge_count() {
            return Err(ComputeError::UniverseMismatch);
        }
        let mut covered = vec![false; g.vertex_count()];
        for e in edges.iter() {
            let (u, v) = g.endpoints(e);
            if covered[u] || covered[v] {
                return Err(ComputeError::NotAPerfectMatching);
            }
            covered[u] = true;
            covered[v] = true;
        }
        Ok(Matching { edges })
    }

    pub fn from_edge_indices(g: &Graph, indices: &[usize]) -> Result<Self, ComputeError> {
        Self::new(g, EdgeSet::from_indices(g.edge_count(), indices))
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    pub fn is_perfect(&self, g: &Graph) -> bool {
        g.vertex_count().is_multiple_of(2) && self.edges.len() * 2 == g.vertex_count()
    }
}

fn lowest_uncovered(covered: &[bool]) -> Option<usize> {
    covered.iter().position(|&c| !c)
}

/// Depth-first walk over perfect-matching completions. `visit` returns false
/// to stop the whole search early.
fn walk_completions(
    g: &Graph,
    covered: &mut [bool],
    chosen: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    let v = match lowest_uncovered(covered) {
        None => return visit(chosen),
        Some(v) => v,
    };
    // branch over v's incident edges in edge-index order
    let mut incident: Vec<(usize, usize)> = g
        .adjacency(v)
        .iter()
        .filter(|&&(u, _)| !covered[u])
        .map(|&(u, e)| (e, u))
        .collect();
    incident.sort_unstable();
    for (e, u) in incident {
        covered[v] = true;
        covered[u] = true;
        chosen.push(e);
        let keep_going = walk_completions(g, covered, chosen, visit);
        chosen.pop();
        covered[v] = false;
        covered[u] = false;
        if !keep_going {
            return false;
        }
    }
    true
}

/// All perfect matchings of `g`, in lexicographic order of their sorted
/// edge-index tuples. Odd vertex count yields an empty list.
pub fn enumerate_perfect_matchings(g: &Graph, cap: usize) -> Result<Vec<Matching>, ComputeError> {
    if g.vertex_count() % 2 == 1 {
        return Ok(Vec::new());
    }
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut covered = vec![false; g.vertex_count()];
    let mut chosen = Vec::new();
    let mut overflow = false;
    walk_completions(g, &mut covered, &mut chosen, &mut |m| {
        if out.len() >= cap {
            overflow = true;
            return false;
        }
        let mut edges = m.to_vec();
        edges.sort_unstable();
        out.push(edges);
        true
    });
    if overflow {
        return Err(ComputeError::PmCapExceeded { cap });
    }
    out.sort();
    out.into_iter()
        .map(|edges| Matching::from_edge_indices(g, &edges))
        .collect()
}

/// Result of a capped count: either exact, or saturated at the cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PmCount {
    Exact(usize),
    AtLeast(usize),
}

impl PmCount {
    pub fn is_exactly_one(self) -> bool {
        self == PmCount::Exact(1)
    }

    pub fn value(self) -> usize {
        match self {
            PmCount::Exact(k) | PmCount::AtLeast(k) => k,
        }
    }
}

/// Number of perfect matchings containing every edge of `s`, counting stops
/// at `cap`. Returns 0 when `s` is not a matching.
pub fn count_pms_containing(g: &Graph, s: &EdgeSet, cap: usize) -> PmCount {
    assert_eq!(s.universe(), g.edge_count(), "edge set universe mismatch");
    if g.vertex_count() % 2 == 1 {
        return PmCount::Exact(0);
    }
    let mut covered = vec![false; g.vertex_count()];
    for e in s.iter() {
        let (u, v) = g.endpoints(e);
        if covered[u] || covered[v] {
            return PmCount::Exact(0); // not a matching
        }
        covered[u] = true;
        covered[v] = true;
    }
    let mut count = 0usize;
    let mut chosen = Vec::new();
    walk_completions(g, &mut covered, &mut chosen, &mut |_| {
        count += 1;
        count < cap
    });
    if count >= cap {
        PmCount::AtLeast(cap)
    } else {
        PmCount::Exact(count)
    }
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    count_pms_containing(g, &g.empty_edge_set(), 1).value() >= 1
}

/// An even cycle whose removal leaves a perfectly matchable graph, with its
/// two alternating edge-halves (frames).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NiceCycle {
    /// Cyclic vertex sequence, canonical: starts at the lowest vertex and
    /// proceeds toward its lower-indexed cycle neighbor.
    pub vertices: Vec<usize>,
    pub edges: EdgeSet,
    pub frame_a: EdgeSet,
    pub frame_b: EdgeSet,
}

impl NiceCycle {
    /// Relabels frames so `frame_a` holds the lowest-indexed cycle edge.
    pub fn canonicalize_frames(&mut self) {
        let lowest = self.edges.min().expect("cycle has edges");
        if !self.frame_a.contains(lowest) {
            std::mem::swap(&mut self.frame_a, &mut self.frame_b);
        }
    }
}

/// Rotates/reflects a cycle's vertex sequence into canonical form.
fn canonical_cycle_sequence(seq: &[usize]) -> Vec<usize> {
    let k = seq.len();
    let start = (0..k).min_by_key(|&i| seq[i]).expect("nonempty");
    let fwd = seq[(start + 1) % k];
    let bwd = seq[(start + k - 1) % k];
    let mut out = Vec::with_capacity(k);
    if fwd <= bwd {
        for i in 0..k {
            out.push(seq[(start + i) % k]);
        }
    } else {
        for i in 0..k {
            out.push(seq[(start + k - i) % k]);
        }
    }
    out
}

/// Decomposes `m1 symdiff m2` into vertex-disjoint even cycles. Frames keep
/// the argument labeling: `frame_a` from `m1`, `frame_b` from `m2`.
pub fn symmetric_difference_cycles(
    g: &Graph,
    m1: &Matching,
    m2: &Matching,
) -> Result<Vec<NiceCycle>, ComputeError> {
    if !m1.is_perfect(g) || !m2.is_perfect(g) {
        return Err(ComputeError::NotAPerfectMatching);
    }
    let diff = m1.edges().symmetric_difference(m2.edges());
    // every vertex touched by the difference has exactly two incident edges
    let n = g.vertex_count();
    let mut incident: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n]; // (neighbor, edge)
    for e in diff.iter() {
        let (u, v) = g.endpoints(e);
        incident[u].push((v, e));
        incident[v].push((u, e));
    }
    let mut visited = vec![false; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if incident[start].is_empty() || visited[start] {
            continue;
        }
        let mut seq = vec![start];
        let mut edge_ids = Vec::new();
        visited[start] = true;
        // canonical direction: lower-indexed neighbor first
        let (mut cur, mut via) = *incident[start].iter().min().expect("degree 2");
        edge_ids.push(via);
        while cur != start {
            visited[cur] = true;
            seq.push(cur);
            let &(next, e) = incident[cur]
                .iter()
                .find(|&&(_, e)| e != via)
                .expect("alternating cycle has degree 2");
            edge_ids.push(e);
            via = e;
            cur = next;
        }
        let edges = EdgeSet::from_indices(g.edge_count(), &edge_ids);
        cycles.push(NiceCycle {
            vertices: seq,
            frame_a: edges.intersection(m1.edges()),
            frame_b: edges.intersection(m2.edges()),
            edges,
        });
    }
    cycles.sort_by_key(|a| a.edges.to_vec());
    Ok(cycles)
}

/// Every nice cycle of `g` exactly once, as the union of symmetric-difference
/// decompositions over all pairs of perfect matchings. Frames are canonical.
pub fn enumerate_nice_cycles(
    g: &Graph,
    pm_cap: usize,
    cycle_cap: usize,
) -> Result<Vec<NiceCycle>, ComputeError> {
    let pms = enumerate_perfect_matchings(g, pm_cap)?;
    if pms.is_empty() {
        return Err(ComputeError::NoPerfectMatching);
    }
    let mut seen: BTreeMap<Vec<usize>, NiceCycle> = BTreeMap::new();
    for i in 0..pms.len() {
        for j in i + 1..pms.len() {
            for mut cycle in symmetric_difference_cycles(g, &pms[i], &pms[j])? {
                let key = cycle.edges.to_vec();
                if let std::collections::btree_map::Entry::Vacant(e) = seen.entry(key) {
                    cycle.canonicalize_frames();
                    cycle.vertices = canonical_cycle_sequence(&cycle.vertices);
                    e.insert(cycle);
                    if seen.len() > cycle_cap {
                        return Err(ComputeError::CycleCapExceeded { cap: cycle_cap });
                    }
                }
            }
        }
    }
    Ok(seen.into_values().collect())
}

/// True iff the sequence is an even cycle whose removal leaves a graph with a
/// perfect matching (an empty remainder counts).
pub fn is_nice_cycle(g: &Graph, seq: &[usize]) -> Result<bool, ComputeError> {
    let k = seq.len();
    if k < 3 {
        return Err(ComputeError::NotACycle(format!("length {k} < 3")));
    }
    let mut seen = vec![false; g.vertex_count()];
    for &v in seq {
        if v >= g.vertex_count() {
            return Err(ComputeError::NotACycle(format!("vertex {v} out of range")));
        }
        if seen[v] {
            return Err(ComputeError::NotACycle(format!("repeated vertex {v}")));
        }
        seen[v] = true;
    }
    for i in 0..k {
        let (u, v) = (seq[i], seq[(i + 1) % k]);
        if g.edge_between(u, v).is_none() {
            return Err(ComputeError::NotACycle(format!("{u} and {v} not adjacent")));
        }
    }
    if k % 2 == 1 {
        return Ok(false);
    }
    let removed = VertexSet::from_indices(g.vertex_count(), seq);
    let rest = induced_delete(g, &removed);
    Ok(rest.graph.vertex_count() == 0 || has_perfect_matching(&rest.graph))
}

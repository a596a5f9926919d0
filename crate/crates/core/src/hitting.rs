//! Exact minimum hitting set by branch and bound, shared by the forcing-number
//! and complete-forcing solvers.
//!
//! The solver returns the minimum-size hitting set, and among those the
//! lexicographically smallest (by sorted index sequence). It runs in two
//! phases: find the optimum size, then fix edges in increasing index order
//! with feasibility checks at that size.

use crate::set::EdgeSet;

struct Solver {
    universe: usize,
    constraints: Vec<EdgeSet>,
}

impl Solver {
    /// Deduplicates and drops constraints that are supersets of others.
    fn new(universe: usize, constraints: &[EdgeSet]) -> Self {
        let mut sorted: Vec<EdgeSet> = constraints.to_vec();
        sorted.sort_by(|a, b| a.size_lex_cmp(b));
        sorted.dedup();
        let mut minimal: Vec<EdgeSet> = Vec::new();
        for c in sorted {
            if !minimal.iter().any(|kept| kept.is_subset(&c)) {
                minimal.push(c);
            }
        }
        Solver {
            universe,
            constraints: minimal,
        }
    }

    fn greedy_cover(&self) -> Option<EdgeSet> {
        let mut chosen = EdgeSet::new(self.universe);
        loop {
            let unhit: Vec<&EdgeSet> = self
                .constraints
                .iter()
                .filter(|c| !c.intersects(&chosen))
                .collect();
            if unhit.is_empty() {
                return Some(chosen);
            }
            let best = (0..self.universe)
                .map(|e| (unhit.iter().filter(|c| c.contains(e)).count(), e))
                .max_by_key(|&(hits, e)| (hits, std::cmp::Reverse(e)))?;
            if best.0 == 0 {
                return None; // some constraint is empty
            }
            chosen.insert(best.1);
        }
    }

    /// Greedy packing of pairwise-disjoint unhit constraints; its size is a
    /// valid lower bound on the number of further edges needed.
    fn packing_bound(unhit: &[EdgeSet]) -> usize {
        let mut order: Vec<usize> = (0..unhit.len()).collect();
        order.sort_by_key(|&i| unhit[i].len());
        let mut used: Option<EdgeSet> = None;
        let mut count = 0;
        for i in order {
            match used {
                None => {
                    used = Some(unhit[i].clone());
                    count += 1;
                }
                Some(ref mut u) => {
                    if !u.intersects(&unhit[i]) {
                        *u = u.union(&unhit[i]);
                        count += 1;
                    }
                }
            }
        }
        count
    }

    /// Depth-first search for a hitting set of size at most `budget` that
    /// contains `chosen` and avoids `forbidden`. In optimizing mode
    /// (`stop_at_first = false`) it tightens `best` as it goes.
    fn search(
        &self,
        chosen: &mut EdgeSet,
        chosen_len: usize,
        forbidden: &mut EdgeSet,
        best: &mut usize,
        stop_at_first: bool,
    ) -> bool {
        let unhit: Vec<EdgeSet> = self
            .constraints
            .iter()
            .filter(|c| !c.intersects(chosen))
            .map(|c| c.difference(forbidden))
            .collect();
        if unhit.is_empty() {
            if chosen_len < *best || (stop_at_first && chosen_len <= *best) {
                *best = (*best).min(chosen_len);
                return true;
            }
            return false;
        }
        if unhit.iter().any(|c| c.is_empty()) {
            return false; // a constraint has all its edges forbidden
        }
        let bound = chosen_len + Self::packing_bound(&unhit);
        if stop_at_first {
            if bound > *best {
                return false;
            }
        } else if bound >= *best {
            return false;
        }
        // branch on the lowest-indexed edge of a smallest unhit constraint
        let target = unhit
            .iter()
            .min_by_key(|c| (c.len(), c.min()))
            .expect("unhit nonempty");
        let e = target.min().expect("constraint nonempty");
        chosen.insert(e);
        let found = self.search(chosen, chosen_len + 1, forbidden, best, stop_at_first);
        chosen.remove(e);
        if found && stop_at_first {
            return true;
        }
        forbidden.insert(e);
        let found_excl = self.search(chosen, chosen_len, forbidden, best, stop_at_first);
        forbidden.remove(e);
        found || found_excl
    }

    fn optimum_size(&self, upper_hint: Option<&EdgeSet>) -> Option<usize> {
        let incumbent = match upper_hint {
            Some(s) if self.constraints.iter().all(|c| c.intersects(s)) => s.clone(),
            _ => self.greedy_cover()?,
        };
        let mut best = incumbent.len();
        let mut chosen = EdgeSet::new(self.universe);
        let mut forbidden = EdgeSet::new(self.universe);
        self.search(&mut chosen, 0, &mut forbidden, &mut best, false);
        Some(best)
    }

    fn feasible(&self, chosen: &EdgeSet, forbidden: &EdgeSet, budget: usize) -> bool {
        let mut chosen = chosen.clone();
        let len = chosen.len();
        let mut forbidden = forbidden.clone();
        let mut best = budget;
        self.search(&mut chosen, len, &mut forbidden, &mut best, true)
    }

    fn lex_smallest_of_size(&self, size: usize) -> EdgeSet {
        let mut chosen = EdgeSet::new(self.universe);
        let mut forbidden = EdgeSet::new(self.universe);
        for e in 0..self.universe {
            if chosen.len() == size {
                break;
            }
            chosen.insert(e);
            if !self.feasible(&chosen, &forbidden, size) {
                chosen.remove(e);
                forbidden.insert(e);
            }
        }
        debug_assert!(self.constraints.iter().all(|c| c.intersects(&chosen)));
        chosen
    }
}

/// Minimum hitting set over `constraints` (subsets of `0..universe`).
/// `upper_hint` is an optional known hitting set used as the starting
/// incumbent. Returns `None` iff some constraint is empty.
pub fn minimum_hitting_set(
    universe: usize,
    constraints: &[EdgeSet],
    upper_hint: Option<&EdgeSet>,
) -> Option<EdgeSet> {
    if constraints.iter().any(|c| c.is_empty()) {
        return None;
    }
    let solver = Solver::new(universe, constraints);
    if solver.constraints.is_empty() {
        return Some(EdgeSet::new(universe));
    }
    let size = solver.optimum_size(upper_hint)?;
    Some(solver.lex_smallest_of_size(size))
}

//! Closed-form upper and lower bounds on the complete forcing number, plus
//! the spectral and automorphism machinery they rest on.

use crate::construct::{exact_cf, Caps, CfMethod};
use crate::error::ComputeError;
use crate::forcing::{forcing_number, max_forcing_number};
use crate::graph::{connectivity, cyclomatic, degeneracy, degree_stats, two_degree, Graph};
use crate::matchings::Matching;
use serde::Serialize;

pub const DEFAULT_TOL: f64 = 1e-10;
/// Default vertex-count guard for the automorphism search.
pub const AUT_GUARD: usize = 20;
/// Vertex-count guard under which `full_report` attempts exact cf.
const EXACT_CF_GUARD: usize = 12;

const MAX_POWER_ITERATIONS: usize = 1_000_000;

/// Spectral radius of a connected graph by power iteration on A + I with a
/// strictly positive start vector. The +I shift keeps bipartite spectra from
/// oscillating between +rho and -rho.
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<f64, ComputeError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(ComputeError::EmptyGraph);
    }
    if !connectivity(g).0 {
        return Err(ComputeError::Disconnected);
    }
    let mut v = vec![1.0 / (n as f64).sqrt(); n];
    let mut previous = f64::NAN;
    for _ in 0..MAX_POWER_ITERATIONS {
        let mut w = v.clone(); // the +I part
        for &(a, b) in g.edges() {
            w[a] += v[b];
            w[b] += v[a];
        }
        let rayleigh: f64 = v.iter().zip(&w).map(|(x, y)| x * y).sum();
        if (rayleigh - previous).abs() < tol {
            return Ok(rayleigh - 1.0);
        }
        previous = rayleigh;
        let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        for x in &mut w {
            *x /= norm;
        }
        v = w;
    }
    Err(ComputeError::NonConvergence {
        iterations: MAX_POWER_ITERATIONS,
    })
}

/// Lower bound on the spectral radius from 2-degrees:
/// sqrt(sum t_i^2 / sum d_i^2). The ratio is reduced exactly before the
/// square root, so regular graphs come out exact.
pub fn yu_rho_lower_bound(g: &Graph) -> Result<f64, ComputeError> {
    let mut num: u128 = 0;
    let mut den: u128 = 0;
    for v in 0..g.vertex_count() {
        let t = two_degree(g, v) as u128;
        let d = g.degree(v) as u128;
        num += t * t;
        den += d * d;
    }
    if den == 0 {
        return Err(ComputeError::Domain(
            "all vertices isolated: zero degree sum".into(),
        ));
    }
    let gcd = num::integer::gcd(num, den);
    Ok(((num / gcd) as f64 / (den / gcd) as f64).sqrt())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BoundKind {
    Upper,
    Lower,
    Exact,
}

/// One named bound with its raw value, integer rounding (floor for upper
/// bounds, ceiling for lower bounds), and applicability.
#[derive(Clone, Debug, Serialize)]
pub struct BoundEntry {
    pub name: &'static str,
    pub kind: BoundKind,
    pub raw: Option<f64>,
    pub rounded: Option<i64>,
    pub applicable: bool,
    pub reason: Option<String>,
    pub anchor: &'static str,
}

impl BoundEntry {
    fn upper(name: &'static str, anchor: &'static str, raw: f64) -> Self {
        BoundEntry {
            name,
            kind: BoundKind::Upper,
            raw: Some(raw),
            rounded: Some(raw.floor() as i64),
            applicable: true,
            reason: None,
            anchor,
        }
    }

    fn lower(name: &'static str, anchor: &'static str, raw: f64) -> Self {
        let clamped = raw.max(0.0);
        BoundEntry {
            name,
            kind: BoundKind::Lower,
            raw: Some(raw),
            rounded: Some(clamped.ceil() as i64),
            applicable: true,
            reason: (raw < 0.0).then(|| "raw value negative, clamped to 0".to_string()),
            anchor,
        }
    }

    fn exact(name: &'static str, anchor: &'static str, value: usize) -> Self {
        BoundEntry {
            name,
            kind: BoundKind::Exact,
            raw: Some(value as f64),
            rounded: Some(value as i64),
            applicable: true,
            reason: None,
            anchor,
        }
    }

    fn inapplicable(
        name: &'static str,
        kind: BoundKind,
        anchor: &'static str,
        reason: impl Into<String>,
    ) -> Self {
        BoundEntry {
            name,
            kind,
            raw: None,
            rounded: None,
            applicable: false,
            reason: Some(reason.into()),
            anchor,
        }
    }
}

/// cf(G) <= (1 - 1/rho) |E|.
pub fn bound_spectral(g: &Graph, tol: f64) -> BoundEntry {
    const NAME: &str = "spectral";
    const ANCHOR: &str = "upper bound via spectral radius";
    match spectral_radius(g, tol) {
        Ok(rho) if rho >= 1.0 => {
            BoundEntry::upper(NAME, ANCHOR, (1.0 - 1.0 / rho) * g.edge_count() as f64)
        }
        Ok(_) => {
            BoundEntry::inapplicable(NAME, BoundKind::Upper, ANCHOR, "spectral radius below 1")
        }
        Err(e) => BoundEntry::inapplicable(NAME, BoundKind::Upper, ANCHOR, e.to_string()),
    }
}

/// cf(G) <= (1 - 1/(2 sqrt(d Delta) - d)) |E| for d-degenerate G.
pub fn bound_degeneracy(g: &Graph) -> BoundEntry {
    const NAME: &str = "degeneracy";
    const ANCHOR: &str = "upper bound via degeneracy and max degree";
    let (d, _) = degeneracy(g);
    if d == 0 {
        return BoundEntry::inapplicable(NAME, BoundKind::Upper, ANCHOR, "graph has no edges");
    }
    let delta = degree_stats(g).1 as f64;
    let t = 2.0 * (d as f64 * delta).sqrt() - d as f64;
    BoundEntry::upper(NAME, ANCHOR, (1.0 - 1.0 / t) * g.edge_count() as f64)
}

/// cf(G) <= (1 - 1/sqrt(2m - n + 1)) m for connected G.
pub fn bound_sqrt_2m_n(g: &Graph) -> BoundEntry {
    const NAME: &str = "sqrt(2m-n+1)";
    const ANCHOR: &str = "via rho <= sqrt(2m-n+1) for connected graphs";
    if !connectivity(g).0 {
        return BoundEntry::inapplicable(NAME, BoundKind::Upper, ANCHOR, "graph is disconnected");
    }
    let (n, m) = (g.vertex_count() as f64, g.edge_count() as f64);
    let root = (2.0 * m - n + 1.0).sqrt();
    if root < 1.0 {
        return BoundEntry::inapplicable(NAME, BoundKind::Upper, ANCHOR, "2m - n + 1 below 1");
    }
    BoundEntry::upper(NAME, ANCHOR, (1.0 - 1.0 / root) * m)
}

/// cf(G) <= (1 - 1/(sqrt(8 Delta - 16) + 2 sqrt(3))) |E| for planar G
/// (planarity is a caller assertion).
pub fn bound_planar_spectral(g: &Graph, planar: bool) -> BoundEntry {
    const NAME: &str = "planar-spectral";
    const ANCHOR: &str = "via the planar spectral radius bound";
    if !planar {
        return BoundEntry::inapplicable(NAME, BoundKind::Upper, ANCHOR, "planar flag not set");
    }
    let delta = degree_stats(g).1;
    if delta < 2 {
        return BoundEntry::inapplicable(NAME, BoundKind::Upper, ANCHOR, "max degree below 2");
    }
    let t = (8.0 * delta as f64 - 16.0).sqrt() + 2.0 * 3.0_f64.sqrt();
    BoundEntry::upper(NAME, ANCHOR, (1.0 - 1.0 / t) * g.edge_count() as f64)
}

/// cf(G) <= (1 - 1/(2 sqrt(2 Delta) - 2)) |E| for outerplanar G
/// (outerplanarity is a caller assertion).
pub fn bound_outerplanar(g: &Graph, outerplanar: bool) -> BoundEntry {
    const NAME: &str = "outerplanar";
    const ANCHOR: &str = "outerplanar graphs are 2-degenerate";
    if !outerplanar {
        return BoundEntry::inapplicable(
            NAME,
            BoundKind::Upper,
            ANCHOR,
            "outerplanar flag not set",
        );
    }
    let delta = degree_stats(g).1;
    if delta < 2 {
        return BoundEntry::inapplicable(
            NAME,
            BoundKind::Upper,
            ANCHOR,
            "max degree below the assumed degeneracy 2",
        );
    }
    let t = 2.0 * (2.0 * delta as f64).sqrt() - 2.0;
    BoundEntry::upper(NAME, ANCHOR, (1.0 - 1.0 / t) * g.edge_count() as f64)
}

/// cf(G) <= (1 - 1/Delta) |E|.
pub fn bound_max_degree(g: &Graph) -> BoundEntry {
    const NAME: &str = "max-degree";
    const ANCHOR: &str = "via rho <= max degree";
    let delta = degree_stats(g).1;
    if delta == 0 {
        return BoundEntry::inapplicable(NAME, BoundKind::Upper, ANCHOR, "graph has no edges");
    }
    BoundEntry::upper(
        NAME,
        ANCHOR,
        (1.0 - 1.0 / delta as f64) * g.edge_count() as f64,
    )
}

/// Prior-work bound cf(G) <= 2 (m - n + omega).
pub fn bound_cyclomatic(g: &Graph) -> BoundEntry {
    BoundEntry::upper(
        "cyclomatic",
        "prior work: twice the cyclomatic number",
        2.0 * cyclomatic(g) as f64,
    )
}

/// Prior-work bound cf(G) <= |E| - Delta.
pub fn bound_e_minus_delta(g: &Graph) -> BoundEntry {
    BoundEntry::upper(
        "edges-minus-max-degree",
        "prior work: |E| - max degree",
        (g.edge_count() - degree_stats(g).1) as f64,
    )
}

/// The weaker degeneracy route through rho <= sqrt(4 d (Delta - d)).
pub fn bound_deg_via_spectral(g: &Graph) -> BoundEntry {
    const NAME: &str = "degeneracy-via-spectral";
    const ANCHOR: &str = "via rho <= sqrt(4d(Delta-d))";
    let (d, _) = degeneracy(g);
    let delta = degree_stats(g).1;
    if d == 0 {
        return BoundEntry::inapplicable(NAME, BoundKind::Upper, ANCHOR, "graph has no edges");
    }
    if delta <= d {
        return BoundEntry::inapplicable(
            NAME,
            BoundKind::Upper,
            ANCHOR,
            "max degree equals degeneracy, bound degenerates",
        );
    }
    let t = (4.0 * d as f64 * (delta - d) as f64).sqrt();
    if t < 1.0 {
        return BoundEntry::inapplicable(NAME, BoundKind::Upper, ANCHOR, "4d(Delta-d) below 1");
    }
    BoundEntry::upper(NAME, ANCHOR, (1.0 - 1.0 / t) * g.edge_count() as f64)
}

/// Pairs (d, Delta) on the integer grid 1 <= d <= Delta <= max where
/// 2 sqrt(d Delta) - d > sqrt(4 d (Delta - d)), i.e. where the direct
/// degeneracy bound is NOT stronger than the spectral route. Reported as a
/// finding, not asserted away: the comparison fails whenever Delta < 2d.
pub fn degeneracy_bound_comparison_grid(max: u64) -> Vec<(u64, u64)> {
    let mut violations = Vec::new();
    for d in 1..=max {
        for delta in d..=max {
            let direct = 2.0 * ((d * delta) as f64).sqrt() - d as f64;
            let via_spectral = (4 * d * (delta - d)) as f64;
            if direct * direct > via_spectral + 1e-9 {
                violations.push((d, delta));
            }
        }
    }
    violations
}

/// Upper bound for the Cartesian product of `sizes.len()` trees with the
/// stated maximum degree.
pub fn tree_product_bound(sizes: &[usize], delta: usize) -> Result<f64, ComputeError> {
    if delta == 0 {
        return Err(ComputeError::Domain("max degree must be positive".into()));
    }
    if sizes.is_empty() || sizes.contains(&0) {
        return Err(ComputeError::Domain("tree sizes must be >= 1".into()));
    }
    let m = sizes.len() as f64;
    let edges: f64 = (0..sizes.len())
        .map(|i| {
            (sizes[i] as f64 - 1.0)
                * sizes
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &nj)| nj as f64)
                    .product::<f64>()
        })
        .sum();
    let t = 2.0 * (m * delta as f64).sqrt() - m;
    Ok((1.0 - 1.0 / t) * edges)
}

/// Complete automorphism list by backtracking with degree and partial
/// adjacency pruning. Guarded to desk scale.
pub fn automorphisms(g: &Graph, guard: usize, cap: usize) -> Result<Vec<Vec<usize>>, ComputeError> {
    let n = g.vertex_count();
    if n > guard {
        return Err(ComputeError::GuardExceeded { n, limit: guard });
    }
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        g: &Graph,
        v: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
        cap: usize,
    ) -> Result<(), ComputeError> {
        let n = g.vertex_count();
        if v == n {
            if out.len() >= cap {
                return Err(ComputeError::AutCapExceeded { cap });
            }
            out.push(image.clone());
            return Ok(());
        }
        for w in 0..n {
            if used[w] || g.degree(w) != g.degree(v) {
                continue;
            }
            let consistent = (0..v)
                .all(|u| g.edge_between(u, v).is_some() == g.edge_between(image[u], w).is_some());
            if !consistent {
                continue;
            }
            image[v] = w;
            used[w] = true;
            let r = extend(g, v + 1, image, used, out, cap);
            used[w] = false;
            image[v] = usize::MAX;
            r?;
        }
        Ok(())
    }
    extend(g, 0, &mut image, &mut used, &mut out, cap)?;
    Ok(out)
}

/// Orbit partition of the edge set under the full automorphism group,
/// via union-find closure. Orbits are sorted by their smallest edge.
pub fn edge_orbits(g: &Graph, guard: usize, cap: usize) -> Result<Vec<Vec<usize>>, ComputeError> {
    let auts = automorphisms(g, guard, cap)?;
    let m = g.edge_count();
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for aut in &auts {
        for e in 0..m {
            let (u, v) = g.endpoints(e);
            let img = g
                .edge_between(aut[u], aut[v])
                .expect("automorphism preserves adjacency");
            let (a, b) = (find(&mut parent, e), find(&mut parent, img));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut orbits: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for e in 0..m {
        let root = find(&mut parent, e);
        orbits.entry(root).or_default().push(e);
    }
    Ok(orbits.into_values().collect())
}

pub fn is_edge_transitive(g: &Graph, guard: usize, cap: usize) -> Result<bool, ComputeError> {
    Ok(edge_orbits(g, guard, cap)?.len() <= 1)
}

/// Averaging lower bound from a family of perfect matchings where each edge
/// appears in at most `k` of them: cf(G) >= (sum of f(M_i)) / k.
pub fn lower_bound_matching_family(
    g: &Graph,
    family: &[Matching],
    k: usize,
    pm_cap: usize,
) -> Result<f64, ComputeError> {
    if k == 0 {
        return Err(ComputeError::Domain("k must be positive".into()));
    }
    let mut multiplicity = vec![0usize; g.edge_count()];
    for m in family {
        if !m.is_perfect(g) {
            return Err(ComputeError::NotAPerfectMatching);
        }
        for e in m.edges().iter() {
            multiplicity[e] += 1;
        }
    }
    let found = multiplicity.iter().copied().max().unwrap_or(0);
    if found > k {
        return Err(ComputeError::MultiplicityExceedsK { found, k });
    }
    let mut total = 0usize;
    for m in family {
        total += forcing_number(g, m, pm_cap)?.number;
    }
    Ok(total as f64 / k as f64)
}

/// cf(G) >= (2|E|/|V|) F(G) for edge-transitive G.
pub fn lower_bound_edge_transitive(
    g: &Graph,
    guard: usize,
    aut_cap: usize,
    pm_cap: usize,
) -> Result<f64, ComputeError> {
    if !is_edge_transitive(g, guard, aut_cap)? {
        return Err(ComputeError::NotEdgeTransitive);
    }
    let (f, _) = max_forcing_number(g, pm_cap)?;
    Ok(2.0 * g.edge_count() as f64 / g.vertex_count() as f64 * f as f64)
}

/// A formula value that is clamped at 0 because cf is nonnegative; the raw
/// (possibly negative) value is kept for formula fidelity.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ClampedBound {
    pub raw: f64,
    pub value: f64,
    pub clamped: bool,
}

impl ClampedBound {
    fn new(raw: f64) -> Self {
        ClampedBound {
            raw,
            value: raw.max(0.0),
            clamped: raw < 0.0,
        }
    }
}

/// cf(G) >= (1 - ln(2e)/ln(k)) nk/2 for an edge-transitive k-regular
/// bipartite graph on n vertices. Informative only for larger k; negative
/// values are clamped.
pub fn lower_bound_regular_bipartite(n: usize, k: usize) -> Result<ClampedBound, ComputeError> {
    if n == 0 || n % 2 == 1 {
        return Err(ComputeError::Domain("n must be positive and even".into()));
    }
    if k < 2 {
        return Err(ComputeError::Domain("k must be at least 2".into()));
    }
    let ratio = (2.0 * std::f64::consts::E).ln() / (k as f64).ln();
    Ok(ClampedBound::new((1.0 - ratio) * n as f64 * k as f64 / 2.0))
}

/// Lower and upper bounds for cf(Q_n), n >= 4:
/// (1 - ln(2e)/ln(n)) n 2^(n-1) <= cf(Q_n) <= n 2^(n-1) - 5 2^(n-3).
pub fn qn_bounds(n: usize) -> Result<(ClampedBound, u64), ComputeError> {
    if n < 4 {
        return Err(ComputeError::Domain("n must be at least 4".into()));
    }
    let edges = n as u64 * (1u64 << (n - 1));
    let lower = lower_bound_regular_bipartite(1 << n, n)?;
    let upper = edges - 5 * (1u64 << (n - 3));
    Ok((lower, upper))
}

/// cf(C_n^k) >= (k/2) n^k for even n >= 4.
pub fn cnk_lower(n: usize, k: usize) -> Result<f64, ComputeError> {
    if n < 4 || n % 2 == 1 {
        return Err(ComputeError::Domain("n must be even and at least 4".into()));
    }
    if k < 1 {
        return Err(ComputeError::Domain("k must be at least 1".into()));
    }
    Ok(k as f64 / 2.0 * (n as f64).powi(k as i32))
}

/// Caller assertions about the graph; planarity is never computed here.
#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct BoundFlags {
    pub planar: bool,
    pub outerplanar: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub flags: BoundFlags,
    pub entries: Vec<BoundEntry>,
}

impl BoundReport {
    pub fn to_markdown(&self) -> String {
        let mut out = String::from(
            "| name | kind | raw | rounded | applicable | anchor |\n|---|---|---|---|---|---|\n",
        );
        for e in &self.entries {
            let raw = e.raw.map_or("-".to_string(), |v| format!("{v:.6}"));
            let rounded = e.rounded.map_or("-".to_string(), |v| v.to_string());
            let applicable = if e.applicable {
                "yes".to_string()
            } else {
                format!("no ({})", e.reason.as_deref().unwrap_or(""))
            };
            out.push_str(&format!(
                "| {} | {:?} | {} | {} | {} | {} |\n",
                e.name, e.kind, raw, rounded, applicable, e.anchor
            ));
        }
        out
    }
}

/// Every applicable bound, in fixed registry order, plus the trivial bound m
/// and, at desk scale, exact cf for sandwich validation.
pub fn full_report(g: &Graph, flags: BoundFlags, caps: Caps, tol: f64) -> BoundReport {
    let mut entries = vec![
        BoundEntry::upper("trivial", "cf(G) <= |E|", g.edge_count() as f64),
        bound_spectral(g, tol),
        bound_degeneracy(g),
        bound_sqrt_2m_n(g),
        bound_planar_spectral(g, flags.planar),
        bound_outerplanar(g, flags.outerplanar),
        bound_max_degree(g),
        bound_cyclomatic(g),
        bound_e_minus_delta(g),
        bound_deg_via_spectral(g),
    ];
    const ET_NAME: &str = "edge-transitive";
    const ET_ANCHOR: &str = "lower bound: (2|E|/|V|) F(G) for edge-transitive graphs";
    entries.push(
        match lower_bound_edge_transitive(g, AUT_GUARD, caps.pm_cap, caps.pm_cap) {
            Ok(v) => BoundEntry::lower(ET_NAME, ET_ANCHOR, v),
            Err(e) => BoundEntry::inapplicable(ET_NAME, BoundKind::Lower, ET_ANCHOR, e.to_string()),
        },
    );
    const EXACT_NAME: &str = "exact";
    const EXACT_ANCHOR: &str = "exact solver over nice-cycle frames";
    if g.vertex_count() <= EXACT_CF_GUARD {
        entries.push(match exact_cf(g, caps) {
            Ok(r) if r.method == CfMethod::Exact => {
                BoundEntry::exact(EXACT_NAME, EXACT_ANCHOR, r.value)
            }
            Ok(r) => BoundEntry {
                name: EXACT_NAME,
                kind: BoundKind::Upper,
                raw: Some(r.value as f64),
                rounded: Some(r.value as i64),
                applicable: true,
                reason: Some("caps saturated: constructed upper bound only".into()),
                anchor: EXACT_ANCHOR,
            },
            Err(e) => {
                BoundEntry::inapplicable(EXACT_NAME, BoundKind::Exact, EXACT_ANCHOR, e.to_string())
            }
        });
    } else {
        entries.push(BoundEntry::inapplicable(
            EXACT_NAME,
            BoundKind::Exact,
            EXACT_ANCHOR,
            format!("graph above the desk-scale guard of {EXACT_CF_GUARD} vertices"),
        ));
    }
    BoundReport { flags, entries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::graph_h;
    use crate::graph::{gen_cycle, gen_hypercube, gen_path};
    use crate::matchings::enumerate_perfect_matchings;

    const TOL: f64 = 1e-10;

    #[test]
    fn spectral_radius_of_h() {
        let rho = spectral_radius(&graph_h(), TOL).unwrap();
        let expected = (5.0 + 5.0_f64.sqrt()) / 2.0;
        assert!((rho - expected).abs() < 1e-9, "rho = {rho}");
    }

    #[test]
    fn spectral_radius_of_regular_graphs() {
        assert!((spectral_radius(&gen_cycle(4).unwrap(), TOL).unwrap() - 2.0).abs() < 1e-12);
        assert!((spectral_radius(&gen_path(2).unwrap(), TOL).unwrap() - 1.0).abs() < 1e-12);
        assert!((spectral_radius(&gen_hypercube(3).unwrap(), TOL).unwrap() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn spectral_radius_preconditions() {
        let empty = Graph::new(0, vec![]).unwrap();
        assert_eq!(spectral_radius(&empty, TOL), Err(ComputeError::EmptyGraph));
        let two = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(spectral_radius(&two, TOL), Err(ComputeError::Disconnected));
    }

    #[test]
    fn yu_bound_values() {
        let h = graph_h();
        let yu = yu_rho_lower_bound(&h).unwrap();
        assert!((yu - (1150.0 / 90.0_f64).sqrt()).abs() < 1e-12);
        // exact on regular graphs
        assert_eq!(yu_rho_lower_bound(&gen_cycle(6).unwrap()).unwrap(), 2.0);
        assert_eq!(yu_rho_lower_bound(&gen_path(2).unwrap()).unwrap(), 1.0);
        assert_eq!(yu_rho_lower_bound(&gen_hypercube(3).unwrap()).unwrap(), 3.0);
        let isolated = Graph::new(3, vec![]).unwrap();
        assert!(yu_rho_lower_bound(&isolated).is_err());
    }

    #[test]
    fn upper_bounds_on_h() {
        let h = graph_h();
        let spectral = bound_spectral(&h, TOL);
        assert!((spectral.raw.unwrap() - 9.406888).abs() < 1e-4);
        assert_eq!(spectral.rounded, Some(9));
        let degen = bound_degeneracy(&h);
        assert!((degen.raw.unwrap() - 9.6906).abs() < 1e-3);
        assert_eq!(degen.rounded, Some(9));
        assert_eq!(bound_cyclomatic(&h).rounded, Some(12));
        assert_eq!(bound_e_minus_delta(&h).rounded, Some(9));
    }

    #[test]
    fn conditional_bounds_respect_flags() {
        let h = graph_h();
        assert!(!bound_planar_spectral(&h, false).applicable);
        assert!(bound_planar_spectral(&h, true).applicable);
        assert!(!bound_outerplanar(&h, false).applicable);
    }

    #[test]
    fn tree_product_bound_values() {
        // single path P_n: m = 1, Delta = 2
        let b = tree_product_bound(&[5], 2).unwrap();
        let coeff = 1.0 - 1.0 / (2.0 * 2.0_f64.sqrt() - 1.0);
        assert!((b - coeff * 4.0).abs() < 1e-12);
        assert!(tree_product_bound(&[3, 3], 0).is_err());
    }

    #[test]
    fn q3_automorphisms_and_orbits() {
        let q3 = gen_hypercube(3).unwrap();
        let auts = automorphisms(&q3, AUT_GUARD, 1_000_000).unwrap();
        assert_eq!(auts.len(), 48);
        assert!(is_edge_transitive(&q3, AUT_GUARD, 1_000_000).unwrap());
        for aut in &auts {
            for &(u, v) in q3.edges() {
                assert!(q3.edge_between(aut[u], aut[v]).is_some());
            }
        }
    }

    #[test]
    fn c4_is_edge_transitive_with_one_orbit() {
        let c4 = gen_cycle(4).unwrap();
        let orbits = edge_orbits(&c4, AUT_GUARD, 1_000_000).unwrap();
        assert_eq!(orbits.len(), 1);
        assert_eq!(orbits[0].len(), 4);
    }

    #[test]
    fn h_is_not_edge_transitive() {
        assert!(!is_edge_transitive(&graph_h(), AUT_GUARD, 1_000_000).unwrap());
    }

    #[test]
    fn edge_transitive_lower_bound_tight_on_c4() {
        let c4 = gen_cycle(4).unwrap();
        let lb = lower_bound_edge_transitive(&c4, AUT_GUARD, 1_000_000, 1_000_000).unwrap();
        assert_eq!(lb, 2.0);
        assert_eq!(
            lower_bound_edge_transitive(&graph_h(), AUT_GUARD, 1_000_000, 1_000_000),
            Err(ComputeError::NotEdgeTransitive)
        );
    }

    #[test]
    fn matching_family_bounds() {
        let h = graph_h();
        let pms = enumerate_perfect_matchings(&h, 1_000_000).unwrap();
        // max edge multiplicity across all 7 matchings of H is 4
        let lb = lower_bound_matching_family(&h, &pms, 4, 1_000_000).unwrap();
        assert!((lb - 13.0 / 4.0).abs() < 1e-12);
        assert_eq!(
            lower_bound_matching_family(&h, &pms, 2, 1_000_000),
            Err(ComputeError::MultiplicityExceedsK { found: 4, k: 2 })
        );
        // a single matching degenerates to f(M)
        let single = &pms[..1];
        let lb = lower_bound_matching_family(&h, single, 1, 1_000_000).unwrap();
        assert_eq!(
            lb,
            forcing_number(&h, &pms[0], 1_000_000).unwrap().number as f64
        );
        // two edge-disjoint matchings of C4 give cf(C4) = 2 exactly
        let c4 = gen_cycle(4).unwrap();
        let c4_pms = enumerate_perfect_matchings(&c4, 100).unwrap();
        assert_eq!(
            lower_bound_matching_family(&c4, &c4_pms, 1, 100).unwrap(),
            2.0
        );
    }

    #[test]
    fn qn_and_cnk_formulas() {
        let (lower, upper) = qn_bounds(4).unwrap();
        assert_eq!(upper, 22);
        assert!(lower.raw < 0.0);
        assert!(lower.clamped);
        assert_eq!(lower.value, 0.0);
        let (lower6, upper6) = qn_bounds(6).unwrap();
        assert_eq!(upper6, 152);
        assert!(lower6.raw > 0.0);
        assert_eq!(cnk_lower(4, 2).unwrap(), 16.0);
        assert!(qn_bounds(3).is_err());
        assert!(cnk_lower(5, 2).is_err());
    }

    #[test]
    fn comparison_grid_reports_violations() {
        // the claimed dominance fails exactly where Delta < 2d
        let violations = degeneracy_bound_comparison_grid(50);
        assert!(!violations.is_empty());
        for &(d, delta) in &violations {
            assert!(delta < 2 * d);
        }
        for d in 1..=50u64 {
            for delta in (2 * d)..=50 {
                assert!(!violations.contains(&(d, delta)));
            }
        }
    }

    #[test]
    fn full_report_on_h() {
        let h = graph_h();
        let report = full_report(&h, BoundFlags::default(), Caps::default(), TOL);
        let get = |name: &str| {
            report
                .entries
                .iter()
                .find(|e| e.name == name)
                .unwrap()
                .clone()
        };
        assert_eq!(get("spectral").rounded, Some(9));
        assert_eq!(get("degeneracy").rounded, Some(9));
        assert_eq!(get("cyclomatic").rounded, Some(12));
        assert_eq!(get("edges-minus-max-degree").rounded, Some(9));
        assert_eq!(get("exact").rounded, Some(6));
        assert!(!get("edge-transitive").applicable);
        assert!(report.to_markdown().contains("| spectral |"));
    }

    #[test]
    fn full_report_on_c4() {
        let c4 = gen_cycle(4).unwrap();
        let report = full_report(&c4, BoundFlags::default(), Caps::default(), TOL);
        let get = |name: &str| {
            report
                .entries
                .iter()
                .find(|e| e.name == name)
                .unwrap()
                .clone()
        };
        assert_eq!(get("cyclomatic").rounded, Some(2));
        assert_eq!(get("edge-transitive").rounded, Some(2));
        assert_eq!(get("exact").rounded, Some(2));
    }
}

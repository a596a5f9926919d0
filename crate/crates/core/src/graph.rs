//! Immutable simple undirected graphs with dense, stable vertex and edge indices.

use crate::set::{EdgeSet, VertexOrdering, VertexSet};
use num::rational::Ratio;
use serde::Serialize;

/// A simple undirected graph. Edge indices are dense `0..m` and fixed for the
/// lifetime of the value; every operation in the crate speaks in these indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(skip)]
    adj: Vec<Vec<(usize, usize)>>, // (neighbor, edge index), sorted by neighbor
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("line {line}: malformed header, expected \"n m\"")]
    MalformedHeader { line: usize },
    #[error("line {line}: expected edge \"u v\"")]
    MalformedEdge { line: usize },
    #[error("line {line}: vertex index {index} out of range (n = {n})")]
    IndexOutOfRange { line: usize, index: usize, n: usize },
    #[error("line {line}: loop at vertex {vertex}")]
    Loop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("expected {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("generator parameter {value} below minimum {min}")]
    ParameterBelowMinimum { value: usize, min: usize },
}

impl Graph {
    /// Builds a graph from an explicit edge list; edge index = list position.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        let mut g = Graph {
            n,
            edges: Vec::with_capacity(edges.len()),
            adj: vec![Vec::new(); n],
        };
        for (i, (u, v)) in edges.into_iter().enumerate() {
            g.push_edge(u, v, i + 1)?;
        }
        g.sort_adjacency();
        Ok(g)
    }

    fn push_edge(&mut self, u: usize, v: usize, line: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::IndexOutOfRange {
                line,
                index: u,
                n: self.n,
            });
        }
        if v >= self.n {
            return Err(GraphError::IndexOutOfRange {
                line,
                index: v,
                n: self.n,
            });
        }
        if u == v {
            return Err(GraphError::Loop { line, vertex: u });
        }
        if self.edge_between(u, v).is_some() {
            let (a, b) = (u.min(v), u.max(v));
            return Err(GraphError::DuplicateEdge { line, u: a, v: b });
        }
        let id = self.edges.len();
        self.edges.push((u.min(v), u.max(v)));
        self.adj[u].push((v, id));
        self.adj[v].push((u, id));
        Ok(())
    }

    fn sort_adjacency(&mut self) {
        for a in &mut self.adj {
            a.sort_unstable();
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints of edge `e` as `(min, max)`.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted `(neighbor, edge index)` pairs of `v`.
    pub fn adjacency(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(u, _)| u)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.adj
            .get(u)?
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
    }

    pub fn empty_vertex_set(&self) -> VertexSet {
        VertexSet::new(self.n)
    }

    pub fn empty_edge_set(&self) -> EdgeSet {
        EdgeSet::new(self.edges.len())
    }

    pub fn full_edge_set(&self) -> EdgeSet {
        EdgeSet::full(self.edges.len())
    }

    /// Parses the edge-list text format: header `n m`, then `m` lines `u v`.
    /// Lines starting with `#` are ignored; LF and CRLF both accepted.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut graph: Option<Graph> = None;
        let mut found = 0usize;
        let mut expected = 0usize;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.trim();
            if content.is_empty() || content.starts_with('#') {
                continue;
            }
            let mut fields = content.split_whitespace();
            match graph {
                None => {
                    let n: usize = fields
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or(GraphError::MalformedHeader { line })?;
                    let m: usize = fields
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or(GraphError::MalformedHeader { line })?;
                    if fields.next().is_some() {
                        return Err(GraphError::MalformedHeader { line });
                    }
                    expected = m;
                    graph = Some(Graph {
                        n,
                        edges: Vec::with_capacity(m),
                        adj: vec![Vec::new(); n],
                    });
                }
                Some(ref mut g) => {
                    let u: usize = fields
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or(GraphError::MalformedEdge { line })?;
                    let v: usize = fields
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or(GraphError::MalformedEdge { line })?;
                    if fields.next().is_some() {
                        return Err(GraphError::MalformedEdge { line });
                    }
                    g.push_edge(u, v, line)?;
                    found += 1;
                }
            }
        }
        let mut g = graph.ok_or(GraphError::MalformedHeader { line: 1 })?;
        if found != expected {
            return Err(GraphError::EdgeCountMismatch { expected, found });
        }
        g.sort_adjacency();
        Ok(g)
    }

    /// Serializes to the edge-list format: header, then edges in index order.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Generators. Each documents its canonical vertex numbering.
// ---------------------------------------------------------------------------

/// Path on `n >= 1` vertices `0 - 1 - ... - (n-1)`.
pub fn gen_path(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::ParameterBelowMinimum { value: n, min: 1 });
    }
    Graph::new(n, (1..n).map(|i| (i - 1, i)).collect())
}

/// Cycle `0 - 1 - ... - (n-1) - 0`, `n >= 3`.
pub fn gen_cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::ParameterBelowMinimum { value: n, min: 3 });
    }
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((0, n - 1));
    Graph::new(n, edges)
}

/// Complete graph on `n >= 1` vertices; edges in lexicographic order.
pub fn gen_complete(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::ParameterBelowMinimum { value: n, min: 1 });
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, edges)
}

/// Complete multipartite graph; part `i` holds the next `parts[i]` vertex
/// indices, edges in lexicographic order.
pub fn gen_complete_multipartite(parts: &[usize]) -> Result<Graph, GraphError> {
    if parts.is_empty() || parts.iter().any(|&p| p < 1) {
        return Err(GraphError::ParameterBelowMinimum { value: 0, min: 1 });
    }
    let n: usize = parts.iter().sum();
    let mut part_of = vec![0usize; n];
    let mut next = 0;
    for (i, &p) in parts.iter().enumerate() {
        for _ in 0..p {
            part_of[next] = i;
            next += 1;
        }
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

/// Wheel on `n >= 4` vertices: cycle `0..n-1` plus hub `n-1` joined to all.
pub fn gen_wheel(n: usize) -> Result<Graph, GraphError> {
    if n < 4 {
        return Err(GraphError::ParameterBelowMinimum { value: n, min: 4 });
    }
    let rim = n - 1;
    let mut edges: Vec<(usize, usize)> = (1..rim).map(|i| (i - 1, i)).collect();
    edges.push((0, rim - 1));
    for v in 0..rim {
        edges.push((v, rim));
    }
    Graph::new(n, edges)
}

/// `n`-dimensional hypercube, `n >= 1`: the `n`-fold Cartesian product of K2.
/// Vertices carry their binary labels (first factor = highest bit).
pub fn gen_hypercube(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::ParameterBelowMinimum { value: n, min: 1 });
    }
    let k2 = gen_path(2)?;
    let mut g = k2.clone();
    for _ in 1..n {
        g = cartesian_product(&g, &k2)?;
    }
    Ok(g)
}

/// Cartesian product with row-major vertex pairing `(u, v) -> u * |V(h)| + v`.
/// Edges: all `g`-edges at fixed second coordinate first would reorder per
/// vertex; here edges are emitted grouped by the `g` vertex, `h`-edges first.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let nh = h.vertex_count();
    let mut edges = Vec::new();
    for u in 0..g.vertex_count() {
        for &(a, b) in h.edges() {
            edges.push((u * nh + a, u * nh + b));
        }
    }
    for &(u, v) in g.edges() {
        for a in 0..nh {
            edges.push((u * nh + a, v * nh + a));
        }
    }
    Graph::new(g.vertex_count() * nh, edges)
}

// ---------------------------------------------------------------------------
// Degree, boundary, and structural primitives.
// ---------------------------------------------------------------------------

/// Per-vertex degrees plus max and min degree.
pub fn degree_stats(g: &Graph) -> (Vec<usize>, usize, usize) {
    let degrees: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
    let max = degrees.iter().copied().max().unwrap_or(0);
    let min = degrees.iter().copied().min().unwrap_or(0);
    (degrees, max, min)
}

/// Sum of the degrees of the neighbors of `v`.
pub fn two_degree(g: &Graph, v: usize) -> usize {
    g.neighbors(v).map(|u| g.degree(u)).sum()
}

/// `t_v / d_v` as an exact rational; 0 when `v` is isolated.
pub fn avg_two_degree(g: &Graph, v: usize) -> Ratio<u64> {
    let d = g.degree(v) as u64;
    if d == 0 {
        Ratio::from_integer(0)
    } else {
        Ratio::new(two_degree(g, v) as u64, d)
    }
}

/// Edges with exactly one endpoint in `s`.
pub fn boundary(g: &Graph, s: &VertexSet) -> EdgeSet {
    let mut out = g.empty_edge_set();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if s.contains(u) != s.contains(v) {
            out.insert(e);
        }
    }
    out
}

/// Induced subgraph on `V \ x`, with maps from its indices back to the
/// original graph's indices.
pub struct InducedSubgraph {
    pub graph: Graph,
    /// New vertex index -> original vertex index.
    pub vertex_to_original: Vec<usize>,
    /// New edge index -> original edge index.
    pub edge_to_original: Vec<usize>,
}

pub fn induced_delete(g: &Graph, x: &VertexSet) -> InducedSubgraph {
    let mut vertex_to_original = Vec::new();
    let mut new_index = vec![usize::MAX; g.vertex_count()];
    for (v, slot) in new_index.iter_mut().enumerate() {
        if !x.contains(v) {
            *slot = vertex_to_original.len();
            vertex_to_original.push(v);
        }
    }
    let mut edges = Vec::new();
    let mut edge_to_original = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if !x.contains(u) && !x.contains(v) {
            edges.push((new_index[u], new_index[v]));
            edge_to_original.push(e);
        }
    }
    let graph = Graph::new(vertex_to_original.len(), edges)
        .expect("induced subgraph of a simple graph is simple");
    InducedSubgraph {
        graph,
        vertex_to_original,
        edge_to_original,
    }
}

/// `(is_connected, component count)`. The empty graph has 0 components.
pub fn connectivity(g: &Graph) -> (bool, usize) {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut components = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        components += 1;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
    }
    (components <= 1, components)
}

/// Cycle-space dimension `m - n + omega`.
pub fn cyclomatic(g: &Graph) -> usize {
    let (_, omega) = connectivity(g);
    g.edge_count() + omega - g.vertex_count()
}

/// Degeneracy by min-degree peeling (ties to the lowest vertex index),
/// together with the full peel order.
pub fn degeneracy(g: &Graph) -> (usize, VertexOrdering) {
    let n = g.vertex_count();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    let mut d = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("vertex remains");
        d = d.max(deg[v]);
        alive[v] = false;
        order.push(v);
        for u in g.neighbors(v) {
            if alive[u] {
                deg[u] -= 1;
            }
        }
    }
    (
        d,
        VertexOrdering::new(order).expect("peel order is a permutation"),
    )
}

/// All-pairs distances by BFS from every vertex; `usize::MAX` = unreachable.
pub fn distance_matrix(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut dist = vec![vec![usize::MAX; n]; n];
    for (s, row) in dist.iter_mut().enumerate() {
        row[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for u in g.neighbors(v) {
                if row[u] == usize::MAX {
                    row[u] = row[v] + 1;
                    queue.push_back(u);
                }
            }
        }
    }
    dist
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{graph_h, graph_l};

    #[test]
    fn parse_k2() {
        let g = Graph::parse_edge_list("2 1\n0 1").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn parse_graph_h() {
        let g = graph_h();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 13);
        let (degrees, max, min) = degree_stats(&g);
        assert_eq!(degrees, vec![2, 3, 4, 4, 4, 4, 3, 2]);
        assert_eq!((max, min), (4, 2));
    }

    #[test]
    fn parse_rejects_loops_and_duplicates() {
        assert_eq!(
            Graph::parse_edge_list("2 1\n0 0"),
            Err(GraphError::Loop { line: 2, vertex: 0 })
        );
        assert_eq!(
            Graph::parse_edge_list("3 2\n0 1\n1 0"),
            Err(GraphError::DuplicateEdge {
                line: 3,
                u: 0,
                v: 1
            })
        );
        assert_eq!(
            Graph::parse_edge_list("2 1\n0 5"),
            Err(GraphError::IndexOutOfRange {
                line: 2,
                index: 5,
                n: 2
            })
        );
        assert!(matches!(
            Graph::parse_edge_list("nope"),
            Err(GraphError::MalformedHeader { line: 1 })
        ));
    }

    #[test]
    fn parse_accepts_comments_and_crlf() {
        let g = Graph::parse_edge_list("# a comment\r\n2 1\r\n# another\r\n0 1\r\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn serialize_round_trip() {
        let g = graph_h();
        let text = g.to_edge_list();
        let g2 = Graph::parse_edge_list(&text).unwrap();
        assert_eq!(g.edges(), g2.edges());
        assert_eq!(g.vertex_count(), g2.vertex_count());
    }

    #[test]
    fn hypercube_shapes() {
        let q3 = gen_hypercube(3).unwrap();
        assert_eq!(q3.vertex_count(), 8);
        assert_eq!(q3.edge_count(), 12);
        assert!((0..8).all(|v| q3.degree(v) == 3));
        let q4 = gen_hypercube(4).unwrap();
        assert_eq!((q4.vertex_count(), q4.edge_count()), (16, 32));
        // binary labels: 0 is adjacent exactly to the powers of two
        let mut nbrs: Vec<usize> = q4.neighbors(0).collect();
        nbrs.sort_unstable();
        assert_eq!(nbrs, vec![1, 2, 4, 8]);
    }

    #[test]
    fn p2_times_p2_is_c4() {
        let g = cartesian_product(&gen_path(2).unwrap(), &gen_path(2).unwrap()).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 4));
        assert!((0..4).all(|v| g.degree(v) == 2));
        assert!(connectivity(&g).0);
    }

    #[test]
    fn generator_minimums() {
        assert!(gen_cycle(2).is_err());
        assert!(gen_wheel(3).is_err());
        assert!(gen_path(0).is_err());
        assert!(gen_hypercube(0).is_err());
    }

    #[test]
    fn two_degree_on_h() {
        let g = graph_h();
        assert_eq!(g.degree(0), 2);
        assert_eq!(two_degree(&g, 0), 5);
        assert_eq!(avg_two_degree(&g, 0), Ratio::new(5, 2));
        assert_eq!(g.degree(2), 4);
        assert_eq!(two_degree(&g, 2), 15);
        assert_eq!(avg_two_degree(&g, 2), Ratio::new(15, 4));
    }

    #[test]
    fn avg_two_degree_isolated_vertex() {
        let g = Graph::new(3, vec![(0, 1)]).unwrap();
        assert_eq!(avg_two_degree(&g, 2), Ratio::from_integer(0));
    }

    #[test]
    fn boundary_on_h() {
        let g = graph_h();
        let s = VertexSet::from_indices(8, &[0]);
        let b = boundary(&g, &s);
        assert_eq!(b.to_vec(), vec![0, 1]); // ab, ah
        assert!(boundary(&g, &VertexSet::full(8)).is_empty());
        assert!(boundary(&g, &g.empty_vertex_set()).is_empty());
    }

    #[test]
    fn boundary_on_l_singleton() {
        let g = graph_l();
        let s = VertexSet::from_indices(8, &[0]);
        assert_eq!(boundary(&g, &s).len(), 5);
    }

    #[test]
    fn boundary_complement_symmetry() {
        let g = graph_h();
        let s = VertexSet::from_indices(8, &[1, 4, 6]);
        assert_eq!(boundary(&g, &s), boundary(&g, &s.complement()));
    }

    #[test]
    fn induced_delete_on_h() {
        let g = graph_h();
        // N[a] = {a, b, h}
        let x = VertexSet::from_indices(8, &[0, 1, 7]);
        let sub = induced_delete(&g, &x);
        assert_eq!(sub.graph.vertex_count(), 5);
        assert_eq!(sub.graph.edge_count(), 8);
        assert_eq!(sub.vertex_to_original, vec![2, 3, 4, 5, 6]);
        for (e, &orig) in sub.edge_to_original.iter().enumerate() {
            let (u, v) = sub.graph.endpoints(e);
            let (ou, ov) = g.endpoints(orig);
            assert_eq!(
                (sub.vertex_to_original[u], sub.vertex_to_original[v]),
                (ou, ov)
            );
        }
    }

    #[test]
    fn induced_delete_identity_and_empty() {
        let g = graph_h();
        let sub = induced_delete(&g, &g.empty_vertex_set());
        assert_eq!(sub.graph.edges(), g.edges());
        assert_eq!(sub.vertex_to_original, (0..8).collect::<Vec<_>>());
        let k2 = gen_path(2).unwrap();
        let all = VertexSet::full(2);
        let sub = induced_delete(&k2, &all);
        assert_eq!(sub.graph.vertex_count(), 0);
    }

    #[test]
    fn connectivity_and_cyclomatic() {
        let h = graph_h();
        assert_eq!(connectivity(&h), (true, 1));
        assert_eq!(cyclomatic(&h), 6);
        let k2 = gen_path(2).unwrap();
        assert_eq!(cyclomatic(&k2), 0);
        let two_k2 = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(connectivity(&two_k2), (false, 2));
        assert_eq!(cyclomatic(&two_k2), 0);
    }

    #[test]
    fn degeneracy_values() {
        assert_eq!(degeneracy(&graph_h()).0, 3);
        assert_eq!(degeneracy(&gen_path(5).unwrap()).0, 1);
        assert_eq!(degeneracy(&gen_complete(4).unwrap()).0, 3);
    }

    #[test]
    fn product_edge_count() {
        let g = gen_path(4).unwrap();
        let h = gen_cycle(5).unwrap();
        let p = cartesian_product(&g, &h).unwrap();
        assert_eq!(
            p.edge_count(),
            g.edge_count() * h.vertex_count() + g.vertex_count() * h.edge_count()
        );
    }
}

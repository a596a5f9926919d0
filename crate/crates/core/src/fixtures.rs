//! Small named graphs used by tests and the `report-paper` command.

use crate::graph::Graph;

/// Vertex names a..h map to indices 0..7 in all fixtures.
pub const VERTEX_NAMES: [&str; 8] = ["a", "b", "c", "d", "e", "f", "g", "h"];

/// The 8-vertex, 13-edge graph with seven perfect matchings and complete
/// forcing number 6. Edge order: ab ah bc bd cd ce cf de df ef eg fg gh.
pub fn graph_h() -> Graph {
    Graph::new(
        8,
        vec![
            (0, 1),
            (0, 7),
            (1, 2),
            (1, 3),
            (2, 3),
            (2, 4),
            (2, 5),
            (3, 4),
            (3, 5),
            (4, 5),
            (4, 6),
            (5, 6),
            (6, 7),
        ],
    )
    .expect("fixture is simple")
}

/// The 8-vertex, 18-edge graph of diameter 2 where the construction beats the
/// boundary-of-W bound. Edge order follows the figure's draw order.
pub fn graph_l() -> Graph {
    Graph::new(
        8,
        vec![
            (0, 2),
            (0, 1),
            (0, 3),
            (0, 5),
            (0, 7),
            (2, 1),
            (2, 3),
            (2, 5),
            (2, 7),
            (4, 1),
            (4, 6),
            (4, 3),
            (4, 5),
            (4, 7),
            (6, 7),
            (6, 1),
            (6, 3),
            (6, 5),
        ],
    )
    .expect("fixture is simple")
}

/// Translates an edge set of `g` into `u-v` name pairs for display.
pub fn edge_names(g: &Graph, edges: impl IntoIterator<Item = usize>) -> Vec<String> {
    edges
        .into_iter()
        .map(|e| {
            let (u, v) = g.endpoints(e);
            format!("{}{}", VERTEX_NAMES[u], VERTEX_NAMES[v])
        })
        .collect()
}

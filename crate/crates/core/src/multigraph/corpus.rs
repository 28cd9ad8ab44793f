use super::{GraphError, Multigraph};

/// Names accepted by [`named_graph`], with a short description.
pub const CORPUS: &[(&str, &str)] = &[
    ("petersen", "Petersen graph: outer 5-cycle 0-4, spokes i-(i+5), inner pentagram"),
    ("k4", "complete graph on 4 vertices"),
    ("k5", "complete graph on 5 vertices"),
    ("k33", "complete bipartite graph K3,3"),
    ("prism3", "triangular prism: two triangles joined by a perfect matching"),
    ("prism5", "pentagonal prism"),
    ("cube", "3-dimensional hypercube"),
    ("wheel4", "wheel with hub 0 of degree 4 and rim 1-2-3-4"),
    ("theta", "two vertices joined by three parallel edges"),
    ("fat_triangle", "triangle with every edge doubled"),
    ("truncated_k4", "K4 with every vertex replaced by a triangle"),
    ("heawood", "Heawood graph"),
    ("moebius_kantor", "Moebius-Kantor graph GP(8,3)"),
    ("dodecahedron", "dodecahedral graph GP(10,2)"),
    ("two_k4_shared_vertex", "two copies of K4 glued at vertex 0"),
    ("k4_pair_hub", "two K4 joined by edge 0-4 plus a hub 8 adjacent to the other six vertices"),
];

fn complete(n: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push((i, j));
        }
    }
    out
}

fn generalized_petersen(n: u32, k: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for i in 0..n {
        out.push((i, (i + 1) % n));
    }
    for i in 0..n {
        out.push((i, n + i));
    }
    for i in 0..n {
        out.push((n + i, n + (i + k) % n));
    }
    out
}

fn truncated_k4() -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for v in 0..4 {
        out.push((3 * v, 3 * v + 1));
        out.push((3 * v + 1, 3 * v + 2));
        out.push((3 * v + 2, 3 * v));
    }
    // Slot of neighbour b at vertex a: b's rank among a's three neighbours.
    let slot = |a: u32, b: u32| 3 * a + if b < a { b } else { b - 1 };
    for (a, b) in complete(4) {
        out.push((slot(a, b), slot(b, a)));
    }
    out
}

/// Canonical labeled instance of a named graph.
pub fn named_graph(name: &str) -> Result<Multigraph, GraphError> {
    let (n, pairs): (u32, Vec<(u32, u32)>) = match name {
        "petersen" => (10, generalized_petersen(5, 2)),
        "k4" => (4, complete(4)),
        "k5" => (5, complete(5)),
        "k33" | "k3_3" => {
            let mut p = Vec::new();
            for i in 0..3 {
                for j in 3..6 {
                    p.push((i, j));
                }
            }
            (6, p)
        }
        "prism3" => (
            6,
            vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        ),
        "prism5" => (10, generalized_petersen(5, 1)),
        "cube" => {
            let mut p = Vec::new();
            for i in 0..8u32 {
                for b in 0..3 {
                    let j = i ^ (1 << b);
                    if i < j {
                        p.push((i, j));
                    }
                }
            }
            (8, p)
        }
        "wheel4" => (
            5,
            vec![(1, 2), (2, 3), (3, 4), (4, 1), (0, 1), (0, 2), (0, 3), (0, 4)],
        ),
        "theta" => (2, vec![(0, 1), (0, 1), (0, 1)]),
        "fat_triangle" => (3, vec![(0, 1), (0, 1), (1, 2), (1, 2), (2, 0), (2, 0)]),
        "truncated_k4" => (12, truncated_k4()),
        "heawood" => {
            let mut p: Vec<(u32, u32)> = (0..14).map(|i| (i, (i + 1) % 14)).collect();
            for i in (0..14).step_by(2) {
                p.push((i, (i + 5) % 14));
            }
            (14, p)
        }
        "moebius_kantor" => (16, generalized_petersen(8, 3)),
        "dodecahedron" => (20, generalized_petersen(10, 2)),
        "two_k4_shared_vertex" => {
            let mut p = complete(4);
            for (a, b) in complete(4) {
                let map = |x: u32| if x == 0 { 0 } else { x + 3 };
                p.push((map(a), map(b)));
            }
            (7, p)
        }
        "k4_pair_hub" => {
            let mut p = complete(4);
            p.extend(complete(4).into_iter().map(|(a, b)| (a + 4, b + 4)));
            p.push((0, 4));
            for x in [1, 2, 3, 5, 6, 7] {
                p.push((8, x));
            }
            (9, p)
        }
        _ => return Err(GraphError::UnknownName(name.to_string())),
    };
    Multigraph::from_pairs(n, &pairs)
}

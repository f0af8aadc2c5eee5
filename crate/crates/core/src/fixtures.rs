//! Named graphs used in tests, the CLI and the verification suites.

use crate::bits::Vertex;
use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// The increasing path `1 -> 2 -> ... -> n`.
pub fn path(n: usize) -> Digraph {
    let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    Digraph::new(n, &edges).unwrap()
}

/// The smallest starred tree: two sources into a vertex with two out-neighbours.
pub fn x_tree() -> Digraph {
    Digraph::new(5, &[(1, 3), (2, 3), (3, 4), (3, 5)]).unwrap()
}

pub fn diamond() -> Digraph {
    Digraph::new(4, &[(1, 2), (1, 3), (2, 4), (3, 4)]).unwrap()
}

/// A five-vertex digraph with an acyclic sourcing whose reorientation is cyclic.
pub fn r_graph() -> Digraph {
    Digraph::new(5, &[(1, 3), (1, 5), (2, 4), (2, 5), (3, 4)]).unwrap()
}

/// The tree `{13, 23, 34, 45, 46}`.
pub fn double_star() -> Digraph {
    Digraph::new(6, &[(1, 3), (2, 3), (3, 4), (4, 5), (4, 6)]).unwrap()
}

/// `m` bristles `1..=m` pointing into the first vertex `m + 1` of a handle `m+1 -> ... -> m+n`.
/// With `n = 0` the bristles are isolated vertices.
pub fn broom(m: usize, n: usize) -> Digraph {
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    if n > 0 {
        edges.extend((1..=m).map(|b| (b, m + 1)));
        edges.extend((m + 1..m + n).map(|h| (h, h + 1)));
    }
    Digraph::new(m + n, &edges).unwrap()
}

/// Teeth `1, 3, ..., 2n-1` and handle `2, 4, ..., 2n`; tooth `i` points to `i + 1`,
/// handle node `i` points to `i + 2`.
pub fn comb(n: usize) -> Digraph {
    let mut edges = Vec::new();
    for i in 1..=2 * n {
        if i % 2 == 1 {
            edges.push((i, i + 1));
        } else if i + 2 <= 2 * n {
            edges.push((i, i + 2));
        }
    }
    Digraph::new(2 * n, &edges).unwrap()
}

/// The graph obtained from `d` by deleting vertex `x` and relabelling the rest in order.
pub fn delete_vertex(d: &Digraph, x: Vertex) -> Digraph {
    let relabel = |v: Vertex| if v > x { v - 1 } else { v };
    let edges: Vec<_> =
        d.edges().into_iter().filter(|&(u, v)| u != x && v != x).map(|(u, v)| (relabel(u), relabel(v))).collect();
    Digraph::new(d.n() - 1, &edges).unwrap()
}

pub const CATALOG: &[&str] = &["I1..I8", "X", "D", "R", "double-star", "broom(m,n)", "comb(n)"];

/// Resolve a fixture name such as `X`, `D`, `I4`, `broom(2,3)` or `comb(2)`.
pub fn by_name(name: &str) -> Result<Digraph> {
    let unknown = || Error::UnknownFixture(name.to_string());
    let args = |s: &str| -> Result<Vec<usize>> {
        s.trim_end_matches(')').split(',').map(|a| a.trim().parse::<usize>().map_err(|_| unknown())).collect()
    };
    match name {
        "X" => Ok(x_tree()),
        "D" | "diamond" => Ok(diamond()),
        "R" => Ok(r_graph()),
        "double-star" => Ok(double_star()),
        _ => {
            if let Some(rest) = name.strip_prefix('I') {
                let n = rest.parse::<usize>().map_err(|_| unknown())?;
                Ok(path(n))
            } else if let Some(rest) = name.strip_prefix("broom(") {
                match args(rest)?[..] {
                    [m, n] => Ok(broom(m, n)),
                    _ => Err(unknown()),
                }
            } else if let Some(rest) = name.strip_prefix("comb(") {
                match args(rest)?[..] {
                    [n] => Ok(comb(n)),
                    _ => Err(unknown()),
                }
            } else {
                Err(unknown())
            }
        }
    }
}

//! Join, corona and the four products on `V(G1) x V(G2)`.
//!
//! Vertex numbering of the results:
//!
//! * join: vertices of `G1` keep their indices, vertex `j` of `G2` becomes
//!   `|V(G1)| + j`;
//! * corona: copy `i` of `G2` occupies `i*|V(G2)| .. (i+1)*|V(G2)|`, and the
//!   host vertices of `G1` come last, host `i` at `|V(G1)|*|V(G2)| + i`;
//! * lexicographic, cartesian, tensor, strong: the pair `(i, j)` is vertex
//!   `i*|V(G2)| + j`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

/// How composite vertices relate to factor vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductVertexMap {
    Join { left: usize, right: usize },
    Corona { hosts: usize, copy_order: usize },
    Pairs { left: usize, right: usize },
}

impl ProductVertexMap {
    pub fn order(&self) -> usize {
        match *self {
            ProductVertexMap::Join { left, right } => left + right,
            ProductVertexMap::Corona { hosts, copy_order } => hosts * (1 + copy_order),
            ProductVertexMap::Pairs { left, right } => left * right,
        }
    }

    /// Composite index of the pair `(i, j)` in a product on `V(G1) x V(G2)`.
    pub fn pair(&self, i: usize, j: usize) -> usize {
        match *self {
            ProductVertexMap::Pairs { left, right } => {
                debug_assert!(i < left && j < right);
                i * right + j
            }
            _ => panic!("pair() called on a {self:?} map"),
        }
    }

    /// Inverse of [`ProductVertexMap::pair`].
    pub fn split(&self, v: usize) -> (usize, usize) {
        match *self {
            ProductVertexMap::Pairs { right, .. } => (v / right, v % right),
            _ => panic!("split() called on a {self:?} map"),
        }
    }

    pub fn join_left(&self, i: usize) -> usize {
        match *self {
            ProductVertexMap::Join { .. } => i,
            _ => panic!("join_left() called on a {self:?} map"),
        }
    }

    pub fn join_right(&self, j: usize) -> usize {
        match *self {
            ProductVertexMap::Join { left, .. } => left + j,
            _ => panic!("join_right() called on a {self:?} map"),
        }
    }

    /// Vertex `j` of the copy of `G2` attached to host `i`.
    pub fn corona_copy(&self, i: usize, j: usize) -> usize {
        match *self {
            ProductVertexMap::Corona { copy_order, .. } => i * copy_order + j,
            _ => panic!("corona_copy() called on a {self:?} map"),
        }
    }

    pub fn corona_host(&self, i: usize) -> usize {
        match *self {
            ProductVertexMap::Corona { hosts, copy_order } => hosts * copy_order + i,
            _ => panic!("corona_host() called on a {self:?} map"),
        }
    }

    /// One-line description written next to product graphs by the CLI.
    pub fn describe(&self) -> String {
        match *self {
            ProductVertexMap::Join { left, .. } => {
                format!("G1 vertex i -> i; G2 vertex j -> {left} + j")
            }
            ProductVertexMap::Corona { hosts, copy_order } => format!(
                "copy i of G2, vertex j -> i*{copy_order} + j; host i of G1 -> {} + i",
                hosts * copy_order
            ),
            ProductVertexMap::Pairs { right, .. } => format!("(i, j) -> i*{right} + j"),
        }
    }
}

fn checked_order(a: usize, b: usize, combine: fn(u128, u128) -> u128) -> Result<usize> {
    let order = combine(a as u128, b as u128);
    if order > MAX_ORDER as u128 {
        return Err(Error::OrderTooLarge { order, max: MAX_ORDER });
    }
    Ok(order as usize)
}

fn canon(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// `G1 + G2`: disjoint union plus every edge between the two sides.
pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let map = ProductVertexMap::Join {
        left: g1.order(),
        right: g2.order(),
    };
    let order = checked_order(g1.order(), g2.order(), |a, b| a + b)?;
    let mut edges: BTreeSet<_> = g1.edges().collect();
    edges.extend(g2.edges().map(|(u, v)| (map.join_right(u), map.join_right(v))));
    for i in 0..g1.order() {
        for j in 0..g2.order() {
            edges.insert((map.join_left(i), map.join_right(j)));
        }
    }
    Ok(Graph::from_canonical(order, edges))
}

/// `G1 o G2`: one copy of `G2` per vertex of `G1`, host `i` adjacent to all
/// of copy `i`.
pub fn corona(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let map = ProductVertexMap::Corona {
        hosts: g1.order(),
        copy_order: g2.order(),
    };
    let order = checked_order(g1.order(), g2.order(), |a, b| a * (1 + b))?;
    let mut edges: BTreeSet<_> = g1
        .edges()
        .map(|(u, v)| (map.corona_host(u), map.corona_host(v)))
        .collect();
    for i in 0..g1.order() {
        edges.extend(g2.edges().map(|(u, v)| (map.corona_copy(i, u), map.corona_copy(i, v))));
        let host = map.corona_host(i);
        for j in 0..g2.order() {
            edges.insert(canon(host, map.corona_copy(i, j)));
        }
    }
    Ok(Graph::from_canonical(order, edges))
}

fn pairs_map(g1: &Graph, g2: &Graph) -> Result<ProductVertexMap> {
    checked_order(g1.order(), g2.order(), |a, b| a * b)?;
    Ok(ProductVertexMap::Pairs {
        left: g1.order(),
        right: g2.order(),
    })
}

/// Edges `(a, x)(a, y)` for `xy` in `E(G2)` and `(a, x)(b, x)` for `ab` in
/// `E(G1)`.
fn cartesian_edges(g1: &Graph, g2: &Graph, map: &ProductVertexMap) -> BTreeSet<(usize, usize)> {
    let mut edges = BTreeSet::new();
    for a in 0..g1.order() {
        edges.extend(g2.edges().map(|(x, y)| canon(map.pair(a, x), map.pair(a, y))));
    }
    for x in 0..g2.order() {
        edges.extend(g1.edges().map(|(a, b)| canon(map.pair(a, x), map.pair(b, x))));
    }
    edges
}

/// Edges `(a, x)(b, y)` and `(a, y)(b, x)` for `ab` in `E(G1)`, `xy` in
/// `E(G2)`.
fn tensor_edges(g1: &Graph, g2: &Graph, map: &ProductVertexMap) -> BTreeSet<(usize, usize)> {
    let mut edges = BTreeSet::new();
    for (a, b) in g1.edges() {
        for (x, y) in g2.edges() {
            edges.insert(canon(map.pair(a, x), map.pair(b, y)));
            edges.insert(canon(map.pair(a, y), map.pair(b, x)));
        }
    }
    edges
}

/// `G1[G2]`: `(a, x) ~ (b, y)` iff `ab` in `E(G1)`, or `a = b` and `xy` in
/// `E(G2)`.
pub fn lexicographic(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let map = pairs_map(g1, g2)?;
    let mut edges = BTreeSet::new();
    for a in 0..g1.order() {
        edges.extend(g2.edges().map(|(x, y)| canon(map.pair(a, x), map.pair(a, y))));
    }
    for (a, b) in g1.edges() {
        for x in 0..g2.order() {
            for y in 0..g2.order() {
                edges.insert(canon(map.pair(a, x), map.pair(b, y)));
            }
        }
    }
    Ok(Graph::from_canonical(map.order(), edges))
}

pub fn cartesian(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let map = pairs_map(g1, g2)?;
    Ok(Graph::from_canonical(map.order(), cartesian_edges(g1, g2, &map)))
}

pub fn tensor(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let map = pairs_map(g1, g2)?;
    Ok(Graph::from_canonical(map.order(), tensor_edges(g1, g2, &map)))
}

/// Union of the cartesian and tensor edge sets.
pub fn strong(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let map = pairs_map(g1, g2)?;
    let mut edges = cartesian_edges(g1, g2, &map);
    edges.extend(tensor_edges(g1, g2, &map));
    Ok(Graph::from_canonical(map.order(), edges))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Operation {
    Join,
    Corona,
    #[serde(alias = "lexicographic")]
    Lex,
    #[serde(alias = "cartesian")]
    Cart,
    Tensor,
    Strong,
}

impl Operation {
    pub const ALL: [Operation; 6] = [
        Operation::Join,
        Operation::Corona,
        Operation::Lex,
        Operation::Cart,
        Operation::Tensor,
        Operation::Strong,
    ];

    pub fn apply(self, g1: &Graph, g2: &Graph) -> Result<Graph> {
        match self {
            Operation::Join => join(g1, g2),
            Operation::Corona => corona(g1, g2),
            Operation::Lex => lexicographic(g1, g2),
            Operation::Cart => cartesian(g1, g2),
            Operation::Tensor => tensor(g1, g2),
            Operation::Strong => strong(g1, g2),
        }
    }

    pub fn vertex_map(self, g1: &Graph, g2: &Graph) -> ProductVertexMap {
        match self {
            Operation::Join => ProductVertexMap::Join {
                left: g1.order(),
                right: g2.order(),
            },
            Operation::Corona => ProductVertexMap::Corona {
                hosts: g1.order(),
                copy_order: g2.order(),
            },
            _ => ProductVertexMap::Pairs {
                left: g1.order(),
                right: g2.order(),
            },
        }
    }

    /// Size of the result from factor orders and sizes alone.
    pub fn expected_size(self, g1: &Graph, g2: &Graph) -> usize {
        let (n1, m1, n2, m2) = (g1.order(), g1.size(), g2.order(), g2.size());
        match self {
            Operation::Join => m1 + m2 + n1 * n2,
            Operation::Corona => m1 + n1 * m2 + n1 * n2,
            Operation::Lex => m1 * n2 * n2 + n1 * m2,
            Operation::Cart => n1 * m2 + n2 * m1,
            Operation::Tensor => 2 * m1 * m2,
            Operation::Strong => n1 * m2 + n2 * m1 + 2 * m1 * m2,
        }
    }
}

impl FromStr for Operation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "join" => Ok(Operation::Join),
            "corona" => Ok(Operation::Corona),
            "lex" | "lexicographic" => Ok(Operation::Lex),
            "cart" | "cartesian" => Ok(Operation::Cart),
            "tensor" => Ok(Operation::Tensor),
            "strong" => Ok(Operation::Strong),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

impl fmt::Display for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Operation::Join => "join",
            Operation::Corona => "corona",
            Operation::Lex => "lex",
            Operation::Cart => "cart",
            Operation::Tensor => "tensor",
            Operation::Strong => "strong",
        })
    }
}

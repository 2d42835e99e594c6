//! Label layouts of the composite graphs, without any hypothesis checks.
//!
//! Every function returns the label of each composite vertex in the vertex
//! numbering of [`crate::products`]. Except for the two closed-form layouts,
//! composite labels are base labels shifted by a multiple of a factor order;
//! when that order is a multiple of `p`, a factor edge keeps its endpoint
//! sum modulo `p` in every copy.

use crate::graph::{Bipartition, Side};
use crate::labeling::Labeling;

/// Labels of `G o P_{p-1}` for a host graph of order `n`.
///
/// Copy `i` is the path `u_1 ... u_{p-1}` on vertices `i*(p-1) ..`, hosts
/// follow. Block `i` (copy `i` plus host `i`) receives `p*i + 1 ..= p*(i+1)`.
pub fn corona_path(n: usize, p: u64) -> Vec<u64> {
    let half_up = p.div_ceil(2);
    let half_down = (p - 1) / 2;
    let path_len = (p - 1) as usize;
    let mut labels = vec![0; n * p as usize];
    for i in 0..n {
        let base = p * i as u64;
        for j in 1..=p - 1 {
            labels[i * path_len + (j - 1) as usize] = if j <= half_down {
                j + half_up + base
            } else {
                j - half_down + base
            };
        }
        labels[n * path_len + i] = half_up + base;
    }
    labels
}

/// Labels of `K_p x G` for a bipartite `G` of order `order`.
///
/// Composite vertex `(t, s)` is `t*order + s`. A side-one vertex of rank `r`
/// takes block `r`; a side-two vertex of rank `r` takes block `r1 + r` with
/// the copies of `K_p` listed in descending order, the last copy taking the
/// top of the block.
pub fn complete_tensor(p: u64, order: usize, sides: &Bipartition) -> Vec<u64> {
    let ranks = sides.rank_within_side();
    let side_one = sides.side(Side::One).len() as u64;
    let mut labels = vec![0; p as usize * order];
    for t in 1..=p {
        for s in 0..order {
            let rank = ranks[s] as u64;
            let label = match sides.side_of(s) {
                Side::One => t + p * rank,
                Side::Two if t < p => p - t + p * (side_one + rank),
                Side::Two => p + p * (side_one + rank),
            };
            labels[(t - 1) as usize * order + s] = label;
        }
    }
    labels
}

/// `G1 + G2`: `G1` keeps its labels, `G2`'s are shifted by `|V(G1)|`.
pub fn join(lab1: &Labeling, lab2: &Labeling) -> Vec<u64> {
    let shift = lab1.len() as u64;
    lab1.as_slice()
        .iter()
        .copied()
        .chain(lab2.as_slice().iter().map(|&x| x + shift))
        .collect()
}

/// `G1 o G2`: copy `i` of `G2` gets `g2 + i*|V(G2)|`, hosts get
/// `g1 + |V(G1)|*|V(G2)|`.
pub fn corona(lab1: &Labeling, lab2: &Labeling) -> Vec<u64> {
    let hosts = lab1.len();
    let copy_order = lab2.len() as u64;
    let mut labels = Vec::with_capacity(hosts * (1 + lab2.len()));
    for i in 0..hosts as u64 {
        labels.extend(lab2.as_slice().iter().map(|&x| x + copy_order * i));
    }
    let top = hosts as u64 * copy_order;
    labels.extend(lab1.as_slice().iter().map(|&x| x + top));
    labels
}

/// `G1[G2]` with `|V(G1)| = left`: `(i, j)` gets `g2(j) + i*|V(G2)|`.
pub fn lexicographic(left: usize, lab2: &Labeling) -> Vec<u64> {
    let block = lab2.len() as u64;
    (0..left as u64)
        .flat_map(|i| lab2.as_slice().iter().map(move |&x| x + block * i))
        .collect()
}

/// Products where `(a, j)` gets `g1(a) + j*|V(G1)|` (cartesian, tensor,
/// strong), with `|V(G2)| = right`.
pub fn blocks_by_second(lab1: &Labeling, right: usize) -> Vec<u64> {
    let block = lab1.len() as u64;
    lab1.as_slice()
        .iter()
        .flat_map(|&x| (0..right as u64).map(move |j| x + block * j))
        .collect()
}

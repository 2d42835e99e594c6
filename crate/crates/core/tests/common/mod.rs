//! Test-only oracles and corpus generators. Nothing here calls into the
//! library's labeling or search code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use legendre_cordial::graph::{make_complete, make_cycle, make_path, make_star};
use legendre_cordial::Graph;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

/// `true` iff some `x` in `1..p` has `x^2 = s (mod p)` and `p` does not
/// divide `s`.
pub fn is_residue_brute(s: u64, p: u64) -> bool {
    let r = s % p;
    r != 0 && (1..p).any(|x| x * x % p == r)
}

/// `(e0, e1)` by direct enumeration of edges.
pub fn naive_tally(g: &Graph, labels: &[u64], p: u64) -> (u64, u64) {
    let mut t = (0, 0);
    for (u, v) in g.edges() {
        if is_residue_brute(labels[u] + labels[v], p) {
            t.1 += 1;
        } else {
            t.0 += 1;
        }
    }
    t
}

pub fn is_permutation(labels: &[u64]) -> bool {
    let mut sorted = labels.to_vec();
    sorted.sort_unstable();
    sorted.iter().copied().eq(1..=labels.len() as u64)
}

/// All permutations of `1..=n` (Heap's algorithm).
pub fn permutations(n: usize) -> Vec<Vec<u64>> {
    let mut a: Vec<u64> = (1..=n as u64).collect();
    let mut out = vec![a.clone()];
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Number of labelings with `lo <= e1 - e0 <= hi`, by full enumeration.
pub fn naive_count(g: &Graph, p: u64, lo: i64, hi: i64) -> u64 {
    permutations(g.order())
        .iter()
        .filter(|perm| {
            let (e0, e1) = naive_tally(g, perm, p);
            (lo..=hi).contains(&(e1 as i64 - e0 as i64))
        })
        .count() as u64
}

/// Uniform labelled tree on `n >= 2` vertices from a random Prüfer code.
pub fn random_tree(n: usize, rng: &mut StdRng) -> Vec<(usize, usize)> {
    if n == 2 {
        return vec![(0, 1)];
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Random tree plus `extra` random chords (fewer if the graph fills up).
pub fn random_connected(n: usize, extra: usize, rng: &mut StdRng) -> Graph {
    let tree = random_tree(n, rng);
    let present: BTreeSet<(usize, usize)> = tree.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    let mut absent: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|e| !present.contains(e))
        .collect();
    absent.shuffle(rng);
    let edges = tree.into_iter().chain(absent.into_iter().take(extra));
    Graph::new(n, edges).unwrap()
}

/// Paths, cycles, complete graphs and stars of order `1..=max`.
pub fn families_up_to(max: usize) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 1..=max {
        out.push((format!("path:{n}"), make_path(n).unwrap()));
        if n >= 3 {
            out.push((format!("cycle:{n}"), make_cycle(n).unwrap()));
        }
        out.push((format!("complete:{n}"), make_complete(n).unwrap()));
        out.push((format!("star:{n}"), make_star(n).unwrap()));
    }
    out
}

/// Families of exactly order `n`, skipping duplicates of smaller cases.
pub fn families_of_order(n: usize) -> Vec<(String, Graph)> {
    let mut out = vec![(format!("path:{n}"), make_path(n).unwrap())];
    if n >= 3 {
        out.push((format!("cycle:{n}"), make_cycle(n).unwrap()));
    }
    if n >= 4 {
        out.push((format!("star:{n}"), make_star(n).unwrap()));
        out.push((format!("complete:{n}"), make_complete(n).unwrap()));
    } else if n == 1 {
        out.clear();
        out.push(("complete:1".into(), make_complete(1).unwrap()));
    }
    out
}

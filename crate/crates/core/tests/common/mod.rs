//! Brute-force oracles that share no code with the library's solvers.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, VecDeque};

use gasket_core::{Adjacency, GasketGraph};

pub fn adjacency_lists<G: Adjacency>(g: &G) -> Vec<Vec<usize>> {
    (0..g.vertex_count())
        .map(|v| g.neighbors(v).to_vec())
        .collect()
}

pub fn bfs(adj: &[Vec<usize>], source: usize) -> Vec<Option<u32>> {
    let mut dist = vec![None; adj.len()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap();
        for &w in &adj[u] {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Edge counts of every simple path from `from` to `to`.
pub fn simple_path_lengths(adj: &[Vec<usize>], from: usize, to: usize) -> BTreeSet<usize> {
    fn go(
        adj: &[Vec<usize>],
        v: usize,
        to: usize,
        depth: usize,
        seen: &mut [bool],
        out: &mut BTreeSet<usize>,
    ) {
        if v == to {
            out.insert(depth);
            return;
        }
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                go(adj, w, to, depth + 1, seen, out);
                seen[w] = false;
            }
        }
    }
    let mut seen = vec![false; adj.len()];
    seen[from] = true;
    let mut out = BTreeSet::new();
    go(adj, from, to, 0, &mut seen, &mut out);
    out
}

/// Lengths of every simple cycle, each found from its smallest vertex.
pub fn simple_cycle_lengths(adj: &[Vec<usize>]) -> BTreeSet<usize> {
    fn go(
        adj: &[Vec<usize>],
        root: usize,
        v: usize,
        depth: usize,
        seen: &mut [bool],
        out: &mut BTreeSet<usize>,
    ) {
        for &w in &adj[v] {
            if w == root && depth >= 2 {
                out.insert(depth + 1);
            } else if w > root && !seen[w] {
                seen[w] = true;
                go(adj, root, w, depth + 1, seen, out);
                seen[w] = false;
            }
        }
    }
    let mut out = BTreeSet::new();
    let mut seen = vec![false; adj.len()];
    for root in 0..adj.len() {
        seen[root] = true;
        go(adj, root, root, 0, &mut seen, &mut out);
        seen[root] = false;
    }
    out
}

/// Minimum dominating set size by trying subsets in increasing size.
pub fn brute_force_domination(adj: &[Vec<usize>]) -> usize {
    let n = adj.len();
    assert!(n <= 20);
    let closed: Vec<u32> = (0..n)
        .map(|v| adj[v].iter().fold(1u32 << v, |m, &w| m | 1 << w))
        .collect();
    let full = (1u32 << n) - 1;
    (0..=full)
        .filter(|&s| {
            (0..n)
                .filter(|&v| s >> v & 1 == 1)
                .fold(0, |m, v| m | closed[v])
                == full
        })
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

/// Checks a vertex sequence is a simple path or cycle along edges of `g`.
pub fn is_simple_walk(g: &GasketGraph, seq: &[usize], closed: bool) -> bool {
    let mut seen = vec![false; g.vertex_count()];
    for &v in seq {
        if v >= seen.len() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    let steps_ok = seq.windows(2).all(|w| g.neighbors(w[0]).contains(&w[1]));
    let closing_ok =
        !closed || (seq.len() >= 3 && g.neighbors(seq[seq.len() - 1]).contains(&seq[0]));
    steps_ok && closing_ok
}

/// Plain exhaustive search: can some move sequence put a pebble on `target`?
/// No pruning beyond memoization.
pub fn naive_reachable(
    adj: &[Vec<usize>],
    counts: &[u32],
    target: usize,
    memo: &mut HashMap<Vec<u32>, bool>,
) -> bool {
    if counts[target] > 0 {
        return true;
    }
    if let Some(&r) = memo.get(counts) {
        return r;
    }
    let mut result = false;
    'outer: for u in 0..adj.len() {
        if counts[u] < 2 {
            continue;
        }
        for &w in &adj[u] {
            let mut next = counts.to_vec();
            next[u] -= 2;
            next[w] += 1;
            if naive_reachable(adj, &next, target, memo) {
                result = true;
                break 'outer;
            }
        }
    }
    memo.insert(counts.to_vec(), result);
    result
}

/// Every distribution of `weight` pebbles over `n` vertices.
pub fn all_distributions(n: usize, weight: u32) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![vec![weight]];
    }
    (0..=weight)
        .flat_map(|first| {
            all_distributions(n - 1, weight - first)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

/// Pebbling number from the naive search.
pub fn naive_pebbling_number(adj: &[Vec<usize>]) -> u32 {
    let n = adj.len();
    let mut memos: Vec<HashMap<Vec<u32>, bool>> = vec![HashMap::new(); n];
    (1..)
        .find(|&t| {
            all_distributions(n, t)
                .iter()
                .all(|c| (0..n).all(|target| naive_reachable(adj, c, target, &mut memos[target])))
        })
        .unwrap()
}

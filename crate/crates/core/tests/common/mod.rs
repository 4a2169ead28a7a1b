//! Independent oracles shared by the integration tests. Nothing here calls
//! the canonical labeling, the recognizers or the cubic generator.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use circle_core::{Graph, Letter, Word};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Each letter twice, in random order.
pub fn random_word(rng: &mut StdRng, letters: &[String]) -> Word {
    let mut tokens: Vec<Letter> = letters.iter().chain(letters).map(|l| Letter::new(l.clone())).collect();
    tokens.shuffle(rng);
    Word::from_tokens(tokens).unwrap()
}

pub fn names(prefix: &str, k: usize) -> Vec<String> {
    (0..k).map(|i| format!("{prefix}{i}")).collect()
}

/// Adjacent label pairs read directly off occurrence positions: `a` and `b`
/// interlace iff exactly one occurrence of `b` lies between those of `a`.
pub fn interlaced_labels(w: &Word) -> BTreeSet<(String, String)> {
    let mut pos: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
    for (i, t) in w.tokens().iter().enumerate() {
        pos.entry(t.as_str()).or_default().push(i);
    }
    let mut out = BTreeSet::new();
    for (a, pa) in &pos {
        for (b, pb) in &pos {
            if a < b {
                let inside = pb.iter().filter(|&&q| pa[0] < q && q < pa[1]).count();
                if inside == 1 {
                    out.insert((a.to_string(), b.to_string()));
                }
            }
        }
    }
    out
}

pub fn graph_labels(g: &Graph) -> BTreeSet<(String, String)> {
    g.edges()
        .into_iter()
        .map(|(u, v)| {
            let (a, b) = (g.label(u), g.label(v));
            if a < b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect()
}

/// Plain backtracking isomorphism test.
pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    if n != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    dg.sort();
    dh.sort();
    if dg != dh {
        return false;
    }
    fn go(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let i = map.len();
        if i == g.order() {
            return true;
        }
        for j in 0..h.order() {
            if used[j] || g.degree(i) != h.degree(j) {
                continue;
            }
            if (0..i).any(|k| g.has_edge(i, k) != h.has_edge(j, map[k])) {
                continue;
            }
            map.push(j);
            used[j] = true;
            if go(g, h, map, used) {
                return true;
            }
            used[j] = false;
            map.pop();
        }
        false
    }
    go(g, h, &mut Vec::new(), &mut vec![false; n])
}

/// Every labeled cubic graph on `0..n`, each exactly once: the lowest
/// unfinished vertex picks all its missing neighbors at once. With
/// `pin_root`, vertex 0 is forced onto neighbors 1, 2, 3.
pub fn labeled_cubic(n: usize, pin_root: bool) -> Vec<Graph> {
    fn go(adj: &mut Vec<Vec<usize>>, out: &mut Vec<Graph>) {
        let n = adj.len();
        let Some(v) = (0..n).find(|&v| adj[v].len() < 3) else {
            let mut g = Graph::new(n);
            for (u, row) in adj.iter().enumerate() {
                for &w in row {
                    if u < w {
                        g.add_edge(u, w);
                    }
                }
            }
            out.push(g);
            return;
        };
        let need = 3 - adj[v].len();
        let cands: Vec<usize> = (v + 1..n).filter(|&w| adj[w].len() < 3 && !adj[v].contains(&w)).collect();
        let mut pick = Vec::new();
        choose(&cands, need, 0, &mut pick, &mut |set: &[usize]| {
            for &w in set {
                adj[v].push(w);
                adj[w].push(v);
            }
            go(adj, out);
            for &w in set {
                adj[v].pop();
                adj[w].pop();
            }
        });
    }
    let mut adj = vec![Vec::new(); n];
    if pin_root {
        for w in 1..=3 {
            adj[0].push(w);
            adj[w].push(0);
        }
    }
    let mut out = Vec::new();
    go(&mut adj, &mut out);
    out
}

fn choose(items: &[usize], k: usize, from: usize, pick: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if pick.len() == k {
        f(pick);
        return;
    }
    for i in from..items.len() {
        pick.push(items[i]);
        choose(items, k, i + 1, pick, f);
        pick.pop();
    }
}

fn bfs_connected(g: &Graph) -> bool {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Per-vertex (triangles, vertices at distance two), sorted.
fn invariant(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut out: Vec<(usize, usize)> = (0..n)
        .map(|v| {
            let nb: Vec<usize> = g.neighbors(v).collect();
            let tri = nb.iter().enumerate().map(|(i, &a)| nb[i + 1..].iter().filter(|&&b| g.has_edge(a, b)).count()).sum();
            let two = (0..n).filter(|&w| w != v && !g.has_edge(v, w) && nb.iter().any(|&a| g.has_edge(a, w))).count();
            (tri, two)
        })
        .collect();
    out.sort();
    out
}

/// Number of isomorphism classes of connected cubic graphs on `n` vertices,
/// quotienting the labeled enumeration by backtracking isomorphism.
pub fn oracle_connected_cubic_count(n: usize) -> usize {
    let mut buckets: BTreeMap<Vec<(usize, usize)>, Vec<Graph>> = BTreeMap::new();
    // every connected cubic graph has a labeling with N(0) = {1, 2, 3}
    for g in labeled_cubic(n, true) {
        if !bfs_connected(&g) {
            continue;
        }
        let reps = buckets.entry(invariant(&g)).or_default();
        if !reps.iter().any(|r| isomorphic(r, &g)) {
            reps.push(g);
        }
    }
    buckets.values().map(Vec::len).sum()
}

//! Cubic graphs up to isomorphism.
//!
//! Connected graphs are grown in breadth-first labeling order: vertices are
//! completed in index order, and a vertex takes new neighbors only from the
//! lowest-numbered untouched vertices. Every connected cubic graph has such a
//! labeling, so the canonical keys of all completed graphs cover every class.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::LabError;
use crate::graph::{bits, CanonicalKey, Graph};

pub const MIN_CUBIC_ORDER: usize = 4;
pub const MAX_CUBIC_ORDER: usize = 14;

fn check_order(n: usize) -> Result<(), LabError> {
    if n % 2 == 1 || !(MIN_CUBIC_ORDER..=MAX_CUBIC_ORDER).contains(&n) {
        return Err(LabError::BadOrder(n));
    }
    Ok(())
}

struct Grower {
    n: usize,
    adj: Vec<u64>,
    fresh: usize,
    found: BTreeSet<CanonicalKey>,
}

impl Grower {
    fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    fn link(&mut self, u: usize, v: usize) {
        self.adj[u] ^= 1 << v;
        self.adj[v] ^= 1 << u;
    }

    fn grow(&mut self, i: usize) {
        if i == self.n {
            let g = Graph::from_edges(self.n, &edges_of(&self.adj)).expect("valid");
            let key = g.canonical_key().expect("order within canonical range");
            self.found.insert(key);
            return;
        }
        if i >= self.fresh {
            // nothing reaches vertex i: the graph would be disconnected
            return;
        }
        let need = 3 - self.degree(i);
        if need == 0 {
            self.grow(i + 1);
            return;
        }
        let candidates: Vec<usize> = (i + 1..self.fresh)
            .filter(|&j| self.degree(j) < 3 && self.adj[i] >> j & 1 == 0)
            .collect();
        for new in 0..=need {
            if self.fresh + new > self.n {
                break;
            }
            let old = need - new;
            if old > candidates.len() {
                continue;
            }
            for pick in subsets(candidates.len(), old) {
                let chosen: Vec<usize> = bits(pick).map(|k| candidates[k]).collect();
                let added: Vec<usize> = (self.fresh..self.fresh + new).collect();
                for &j in chosen.iter().chain(&added) {
                    self.link(i, j);
                }
                self.fresh += new;
                self.grow(i + 1);
                self.fresh -= new;
                for &j in chosen.iter().chain(&added) {
                    self.link(i, j);
                }
            }
        }
    }
}

fn edges_of(adj: &[u64]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (u, &row) in adj.iter().enumerate() {
        for v in bits(row) {
            if u < v {
                out.push((u, v));
            }
        }
    }
    out
}

/// Masks of all `k`-subsets of `0..m`.
fn subsets(m: usize, k: usize) -> impl Iterator<Item = u64> {
    (0u64..1 << m).filter(move |s| s.count_ones() as usize == k)
}

/// One canonical representative per isomorphism class of connected cubic
/// graphs on `n` vertices, sorted by canonical key.
pub fn connected_cubic_classes(n: usize) -> Result<Vec<(CanonicalKey, Graph)>, LabError> {
    check_order(n)?;
    // vertex 0 always takes vertices 1, 2, 3; vertex 1 then picks its two
    // remaining neighbors, which splits the work into independent branches
    let mut root = Grower { n, adj: vec![0; n], fresh: 4, found: BTreeSet::new() };
    for j in 1..=3 {
        root.link(0, j);
    }
    let mut branches: Vec<(Vec<u64>, usize)> = Vec::new();
    let candidates = [2usize, 3];
    for new in 0..=2usize {
        for pick in subsets(2, 2 - new) {
            if 4 + new > n {
                continue;
            }
            let mut adj = root.adj.clone();
            for j in bits(pick).map(|k| candidates[k]).chain(4..4 + new) {
                adj[1] ^= 1 << j;
                adj[j] ^= 1 << 1;
            }
            branches.push((adj, 4 + new));
        }
    }
    let found: Vec<BTreeSet<CanonicalKey>> = branches
        .into_par_iter()
        .map(|(adj, fresh)| {
            let mut g = Grower { n, adj, fresh, found: BTreeSet::new() };
            g.grow(2);
            g.found
        })
        .collect();
    let mut keys: Vec<CanonicalKey> = found.into_iter().flatten().collect();
    keys.sort();
    keys.dedup();
    Ok(keys.into_iter().map(|k| (k, k.to_graph())).collect())
}

/// All cubic graphs on `n` vertices up to isomorphism. Disconnected ones are
/// disjoint unions of connected classes, one per multiset of components.
pub fn enumerate_cubic(n: usize, connected_only: bool) -> Result<Vec<Graph>, LabError> {
    check_order(n)?;
    if connected_only {
        return Ok(connected_cubic_classes(n)?.into_iter().map(|(_, g)| g).collect());
    }
    let mut pool: Vec<Graph> = Vec::new();
    for m in (MIN_CUBIC_ORDER..=n).step_by(2) {
        pool.extend(connected_cubic_classes(m)?.into_iter().map(|(_, g)| g));
    }
    let mut out = Vec::new();
    multisets(&pool, n, 0, &mut Vec::new(), &mut out)?;
    Ok(out)
}

/// Every multiset of `pool` entries (non-decreasing indices from `from`) whose
/// orders sum to `left`, as assembled graphs.
fn multisets(pool: &[Graph], left: usize, from: usize, picked: &mut Vec<usize>, out: &mut Vec<Graph>) -> Result<(), LabError> {
    if left == 0 {
        let parts: Vec<Graph> = picked.iter().map(|&i| pool[i].clone()).collect();
        out.push(super::assemble_disconnected(&parts)?);
        return Ok(());
    }
    for i in from..pool.len() {
        if pool[i].order() <= left {
            picked.push(i);
            multisets(pool, left - pool[i].order(), i, picked, out)?;
            picked.pop();
        }
    }
    Ok(())
}

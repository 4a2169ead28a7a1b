//! Canonical labeling by individualization and refinement.
//!
//! Search nodes are ordered partitions refined to equitability by neighbor
//! counts; leaves are discrete partitions, i.e. vertex orders, and the key is
//! the largest adjacency code over all leaves. Subtrees are skipped when a
//! twin transposition or an already-found automorphism fixing the current
//! prefix maps them onto one that was explored.

use super::{Graph, GraphError, Vertex};

pub const MAX_CANON_VERTICES: usize = 16;

/// Isomorphism-class key: the order plus the upper-triangle adjacency bits
/// of the canonically relabeled graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    n: u8,
    bits: u128,
}

#[inline]
fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

impl CanonicalKey {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// The canonical representative of the class.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let mut g = Graph::new(n);
        for j in 1..n {
            for i in 0..j {
                if self.bits >> pair_index(i, j) & 1 == 1 {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }
}

fn code(adj: &[u64], order: &[Vertex]) -> u128 {
    let mut c = 0u128;
    for j in 1..order.len() {
        let row = adj[order[j]];
        for (i, &u) in order[..j].iter().enumerate() {
            if row >> u & 1 == 1 {
                c |= 1 << pair_index(i, j);
            }
        }
    }
    c
}

/// Split cells by neighbor counts into every cell until nothing changes.
fn refine(adj: &[u64], cells: &mut Vec<Vec<Vertex>>) {
    loop {
        let masks: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let mut split_at = None;
        for (ci, cell) in cells.iter().enumerate() {
            if cell.len() == 1 {
                continue;
            }
            let mut keyed: Vec<(Vec<u8>, Vertex)> = cell
                .iter()
                .map(|&v| {
                    let sig = masks.iter().map(|m| (adj[v] & m).count_ones() as u8).collect();
                    (sig, v)
                })
                .collect();
            if keyed.iter().all(|(s, _)| *s == keyed[0].0) {
                continue;
            }
            keyed.sort();
            let mut groups: Vec<Vec<Vertex>> = Vec::new();
            for (i, (sig, v)) in keyed.iter().enumerate() {
                if i == 0 || keyed[i - 1].0 != *sig {
                    groups.push(Vec::new());
                }
                groups.last_mut().unwrap().push(*v);
            }
            split_at = Some((ci, groups));
            break;
        }
        match split_at {
            Some((ci, groups)) => {
                cells.splice(ci..=ci, groups);
            }
            None => return,
        }
    }
}

struct Search<'a> {
    adj: &'a [u64],
    best: Option<(u128, Vec<Vertex>)>,
    first: Option<(u128, Vec<Vertex>)>,
    automorphisms: Vec<Vec<Vertex>>,
}

impl Search<'_> {
    fn are_twins(&self, u: Vertex, v: Vertex) -> bool {
        let outside = !(1u64 << u | 1u64 << v);
        self.adj[u] & outside == self.adj[v] & outside
    }

    fn record_automorphism(&mut self, from: &[Vertex], to: &[Vertex]) {
        if from == to {
            return;
        }
        let mut gamma = vec![0; from.len()];
        for (&a, &b) in from.iter().zip(to) {
            gamma[a] = b;
        }
        self.automorphisms.push(gamma);
    }

    fn leaf(&mut self, order: Vec<Vertex>) {
        let c = code(self.adj, &order);
        match &self.first {
            None => self.first = Some((c, order.clone())),
            Some((fc, fo)) if *fc == c => {
                let fo = fo.clone();
                self.record_automorphism(&fo, &order);
            }
            _ => {}
        }
        match &self.best {
            Some((bc, bo)) if *bc == c => {
                let bo = bo.clone();
                self.record_automorphism(&bo, &order);
            }
            Some((bc, _)) if *bc > c => {}
            _ => self.best = Some((c, order)),
        }
    }

    fn explore(&mut self, mut cells: Vec<Vec<Vertex>>, prefix: &mut Vec<Vertex>) {
        refine(self.adj, &mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(cells.into_iter().map(|c| c[0]).collect());
            return;
        };
        let cell = cells[target].clone();
        let mut tried: Vec<Vertex> = Vec::new();
        for &v in &cell {
            if tried.iter().any(|&u| self.are_twins(u, v)) {
                continue;
            }
            let covered = self.automorphisms.iter().any(|g| {
                prefix.iter().all(|&p| g[p] == p) && tried.iter().any(|&u| g[u] == v)
            });
            if covered {
                continue;
            }
            let mut next = cells.clone();
            let rest: Vec<Vertex> = cell.iter().copied().filter(|&u| u != v).collect();
            next.splice(target..=target, [vec![v], rest]);
            prefix.push(v);
            self.explore(next, prefix);
            prefix.pop();
            tried.push(v);
        }
    }
}

/// Canonical key of `g` together with the relabeling `perm`, where vertex
/// `v` of `g` becomes vertex `perm[v]` of `key.to_graph()`.
pub fn canonical_form(g: &Graph) -> Result<(CanonicalKey, Vec<Vertex>), GraphError> {
    let n = g.order();
    if n > MAX_CANON_VERTICES {
        return Err(GraphError::TooLarge(n, MAX_CANON_VERTICES));
    }
    if n == 0 {
        return Ok((CanonicalKey { n: 0, bits: 0 }, Vec::new()));
    }
    let mut search = Search { adj: g.rows(), best: None, first: None, automorphisms: Vec::new() };
    search.explore(vec![g.vertices().collect()], &mut Vec::new());
    let (bits_, order) = search.best.expect("search reaches a leaf");
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok((CanonicalKey { n: n as u8, bits: bits_ }, perm))
}

impl Graph {
    pub fn canonical_key(&self) -> Result<CanonicalKey, GraphError> {
        canonical_form(self).map(|(k, _)| k)
    }
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool, GraphError> {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        // still report oversize inputs
        for x in [g, h] {
            if x.order() > MAX_CANON_VERTICES {
                return Err(GraphError::TooLarge(x.order(), MAX_CANON_VERTICES));
            }
        }
        return Ok(false);
    }
    Ok(g.canonical_key()? == h.canonical_key()?)
}

//! Splits: vertex bipartitions whose crossing edges form a complete
//! bipartite graph.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{bits, components_within, Graph, Vertex};

/// Largest order accepted by the bipartition sweeps.
pub const MAX_SPLIT_VERTICES: usize = 16;
/// Largest order accepted by [`split_lc_commutes`].
pub const MAX_LC_CHECK_VERTICES: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SplitError {
    #[error("vertex sets do not partition the graph")]
    NotAPartition,
    #[error("graph has {0} vertices; splits need at least 4")]
    TooSmall(usize),
    #[error("graph has {0} vertices, more than the supported {1}")]
    TooLarge(usize, usize),
    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),
}

/// `(V1, X1; V2, X2)` with sorted vertex lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Split {
    #[serde(rename = "V1")]
    pub v1: Vec<Vertex>,
    #[serde(rename = "X1")]
    pub x1: Vec<Vertex>,
    #[serde(rename = "V2")]
    pub v2: Vec<Vertex>,
    #[serde(rename = "X2")]
    pub x2: Vec<Vertex>,
}

fn mask_of(list: &[Vertex], n: usize) -> Result<u64, SplitError> {
    let mut m = 0u64;
    for &v in list {
        if v >= n {
            return Err(SplitError::UnknownVertex(v));
        }
        if m >> v & 1 == 1 {
            return Err(SplitError::NotAPartition);
        }
        m |= 1 << v;
    }
    Ok(m)
}

impl Split {
    fn from_masks(v1: u64, x1: u64, v2: u64, x2: u64) -> Split {
        Split {
            v1: bits(v1).collect(),
            x1: bits(x1).collect(),
            v2: bits(v2).collect(),
            x2: bits(x2).collect(),
        }
    }

    pub fn v1_mask(&self) -> u64 {
        self.v1.iter().fold(0, |m, &v| m | 1 << v)
    }
}

/// Boundary sets of the bipartition `(side, rest)`: the vertices of each side
/// with a neighbor across.
fn boundaries(g: &Graph, side: u64) -> (u64, u64) {
    let other = g.vertex_mask() & !side;
    let x1 = bits(side).filter(|&v| g.row(v) & other != 0).fold(0, |m, v| m | 1 << v);
    let x2 = bits(other).filter(|&v| g.row(v) & side != 0).fold(0, |m, v| m | 1 << v);
    (x1, x2)
}

fn is_split_side(g: &Graph, side: u64) -> bool {
    let n = g.order();
    let size = side.count_ones() as usize;
    if size < 2 || n - size < 2 {
        return false;
    }
    let (x1, x2) = boundaries(g, side);
    let other = g.vertex_mask() & !side;
    bits(x1).all(|v| g.row(v) & other == x2)
}

/// The split on the bipartition `(side, complement)`, if there is one.
pub fn split_on(g: &Graph, side: u64) -> Option<Split> {
    let side = side & g.vertex_mask();
    if !is_split_side(g, side) {
        return None;
    }
    let (x1, x2) = boundaries(g, side);
    Some(Split::from_masks(side, x1, g.vertex_mask() & !side, x2))
}

pub fn validate_split(g: &Graph, s: &Split) -> Result<bool, SplitError> {
    let n = g.order();
    let v1 = mask_of(&s.v1, n)?;
    let v2 = mask_of(&s.v2, n)?;
    if v1 & v2 != 0 || v1 | v2 != g.vertex_mask() {
        return Err(SplitError::NotAPartition);
    }
    let x1 = mask_of(&s.x1, n)?;
    let x2 = mask_of(&s.x2, n)?;
    if x1 & !v1 != 0 || x2 & !v2 != 0 {
        return Ok(false);
    }
    Ok(boundaries(g, v1) == (x1, x2) && is_split_side(g, v1))
}

fn check_order(g: &Graph, max: usize) -> Result<(), SplitError> {
    let n = g.order();
    if n < 4 {
        return Err(SplitError::TooSmall(n));
    }
    if n > max {
        return Err(SplitError::TooLarge(n, max));
    }
    Ok(())
}

/// Subsets of `0..n` of size `k` as masks, in lexicographic order of their
/// sorted element lists.
fn combinations(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let mut idx: Vec<usize> = (0..k).collect();
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let mask = idx.iter().fold(0u64, |m, &i| m | 1 << i);
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                done = true;
                break;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(mask)
    })
}

/// First split in order of increasing `|V1|`, then lexicographic `V1`.
pub fn find_split(g: &Graph) -> Result<Option<Split>, SplitError> {
    check_order(g, MAX_SPLIT_VERTICES)?;
    let n = g.order();
    for k in 2..=n - 2 {
        if let Some(side) = combinations(n, k).find(|&m| is_split_side(g, m)) {
            return Ok(split_on(g, side));
        }
    }
    Ok(None)
}

/// At least five vertices and no split.
pub fn is_prime(g: &Graph) -> Result<bool, SplitError> {
    if g.order() < 5 {
        return Ok(false);
    }
    Ok(find_split(g)?.is_none())
}

/// Unions of some but not all of `parts`.
fn proper_unions(parts: &[u64]) -> impl Iterator<Item = u64> + '_ {
    let c = parts.len();
    (1u64..(1u64 << c).saturating_sub(1)).map(move |pick| bits(pick).fold(0, |m, i| m | parts[i]))
}

/// Splits from twin pairs, from unions of components, and from unions of
/// components of `G - v` at a cutpoint `v`.
pub fn simple_splits(g: &Graph) -> Result<Vec<Split>, SplitError> {
    check_order(g, crate::graph::MAX_VERTICES)?;
    let mut sides: Vec<u64> = Vec::new();
    for t in g.twin_pairs() {
        sides.push(1 << t.u | 1 << t.v);
    }
    let comps = g.components();
    if comps.len() > 1 {
        for h in proper_unions(&comps) {
            if h.count_ones() < 2 {
                continue;
            }
            sides.push(h);
            for v in bits(h) {
                sides.push(h & !(1 << v));
            }
        }
    }
    for v in g.cutpoints() {
        let rest = components_within(g.rows(), g.vertex_mask() & !(1 << v));
        for h in proper_unions(&rest) {
            if h.count_ones() >= 2 {
                sides.push(h);
            }
        }
    }
    let mut seen = BTreeSet::new();
    Ok(sides
        .into_iter()
        .filter(|&s| seen.insert(s))
        .filter_map(|s| split_on(g, s))
        .collect())
}

/// Whether `G` and its local complement at `v` have splits on exactly the
/// same bipartitions.
pub fn split_lc_commutes(g: &Graph, v: Vertex) -> Result<bool, SplitError> {
    check_order(g, MAX_LC_CHECK_VERTICES)?;
    let h = g.local_complement(v).map_err(|_| SplitError::UnknownVertex(v))?;
    let n = g.order();
    // bipartitions are unordered, so fix vertex 0 on the first side
    let rest = crate::graph::full_mask(n) & !1;
    let mut sub = rest;
    loop {
        let side = sub | 1;
        if is_split_side(g, side) != is_split_side(&h, side) {
            return Ok(false);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & rest;
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{standard_graph, StandardGraph};

    fn sg(s: StandardGraph) -> Graph {
        standard_graph(s).unwrap()
    }

    fn two_triangles() -> Graph {
        Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap()
    }

    /// Literal check of the definition on a bipartition, by pair scanning.
    fn oracle_has_split(g: &Graph, side: u64) -> bool {
        let n = g.order();
        let a: Vec<usize> = (0..n).filter(|v| side >> v & 1 == 1).collect();
        let b: Vec<usize> = (0..n).filter(|v| side >> v & 1 == 0).collect();
        if a.len() < 2 || b.len() < 2 {
            return false;
        }
        let x1: Vec<usize> = a.iter().copied().filter(|&u| b.iter().any(|&w| g.has_edge(u, w))).collect();
        let x2: Vec<usize> = b.iter().copied().filter(|&w| a.iter().any(|&u| g.has_edge(u, w))).collect();
        x1.iter().all(|&u| x2.iter().all(|&w| g.has_edge(u, w)))
    }

    #[test]
    fn validate_examples() {
        let k4 = sg(StandardGraph::Complete(4));
        let s = Split { v1: vec![0, 1], x1: vec![0, 1], v2: vec![2, 3], x2: vec![2, 3] };
        assert_eq!(validate_split(&k4, &s), Ok(true));

        let c5 = sg(StandardGraph::Cycle(5));
        // vertices 1..5 in cyclic order are 0..4 here
        let s = Split { v1: vec![0, 1], x1: vec![0, 1], v2: vec![2, 3, 4], x2: vec![2, 4] };
        assert_eq!(validate_split(&c5, &s), Ok(false));

        let t = two_triangles();
        let s = Split { v1: vec![0, 1, 2], x1: vec![], v2: vec![3, 4, 5], x2: vec![] };
        assert_eq!(validate_split(&t, &s), Ok(true));

        let bad = Split { v1: vec![0, 1], x1: vec![], v2: vec![1, 2, 3], x2: vec![] };
        assert_eq!(validate_split(&k4, &bad), Err(SplitError::NotAPartition));
        let short = Split { v1: vec![0], x1: vec![], v2: vec![1, 2, 3], x2: vec![] };
        assert_eq!(validate_split(&k4, &short), Ok(false));
    }

    #[test]
    fn find_split_examples() {
        let c5 = sg(StandardGraph::Cycle(5));
        // all 10 bipartitions with sides of size 2 and 3
        let sides: Vec<u64> = combinations(5, 2).collect();
        assert_eq!(sides.len(), 10);
        assert!(sides.iter().all(|&s| !oracle_has_split(&c5, s)));
        assert_eq!(find_split(&c5), Ok(None));

        let c4 = sg(StandardGraph::Cycle(4));
        let s = find_split(&c4).unwrap().unwrap();
        assert_eq!(validate_split(&c4, &s), Ok(true));

        let k33 = sg(StandardGraph::CompleteBipartite(3, 3));
        let s = find_split(&k33).unwrap().unwrap();
        assert_eq!(s.v1, vec![0, 1]);
        assert!(k33.twin_pairs().iter().any(|t| (t.u, t.v) == (0, 1) && !t.adjacent));
        assert_eq!(validate_split(&k33, &s), Ok(true));

        assert_eq!(find_split(&sg(StandardGraph::Complete(3))), Err(SplitError::TooSmall(3)));
        assert_eq!(find_split(&Graph::new(17)), Err(SplitError::TooLarge(17, 16)));
    }

    #[test]
    fn primality() {
        assert_eq!(is_prime(&sg(StandardGraph::Cycle(5))), Ok(true));
        assert_eq!(is_prime(&sg(StandardGraph::Cycle(4))), Ok(false));
        assert_eq!(is_prime(&sg(StandardGraph::Complete(4))), Ok(false));
        assert_eq!(is_prime(&sg(StandardGraph::Wheel(5))), Ok(true));
        assert_eq!(is_prime(&sg(StandardGraph::CompleteBipartite(3, 3))), Ok(false));
    }

    #[test]
    fn simple_split_examples() {
        let k4 = sg(StandardGraph::Complete(4));
        let s = simple_splits(&k4).unwrap();
        assert_eq!(s.len(), 6);
        assert!(s.iter().all(|x| validate_split(&k4, x) == Ok(true)));

        let t = two_triangles();
        let s = simple_splits(&t).unwrap();
        assert!(s.iter().any(|x| x.v1 == vec![0, 1, 2] && x.x1.is_empty() && x.x2.is_empty()));
        assert!(s.iter().all(|x| validate_split(&t, x) == Ok(true)));

        // bowtie: triangles 0-1-2 and 2-3-4 sharing cutpoint 2
        let bowtie = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let s = simple_splits(&bowtie).unwrap();
        assert!(s.iter().any(|x| x.v1 == vec![0, 1] && x.x2 == vec![2]));
        assert!(s.iter().all(|x| validate_split(&bowtie, x) == Ok(true)));

        assert!(simple_splits(&sg(StandardGraph::Cycle(5))).unwrap().is_empty());
        assert_eq!(simple_splits(&Graph::new(3)), Err(SplitError::TooSmall(3)));
    }

    #[test]
    fn lc_commutation_examples() {
        let k4 = sg(StandardGraph::Complete(4));
        let c5 = sg(StandardGraph::Cycle(5));
        for v in 0..4 {
            assert_eq!(split_lc_commutes(&k4, v), Ok(true));
        }
        for v in 0..5 {
            assert_eq!(split_lc_commutes(&c5, v), Ok(true));
            let h = c5.local_complement(v).unwrap();
            assert!(combinations(5, 2).all(|s| !oracle_has_split(&h, s)));
        }
        assert_eq!(split_lc_commutes(&Graph::new(15), 0), Err(SplitError::TooLarge(15, 14)));
        assert_eq!(split_lc_commutes(&k4, 9), Err(SplitError::UnknownVertex(9)));
    }

    #[test]
    fn combination_order() {
        let got: Vec<u64> = combinations(4, 2).collect();
        assert_eq!(got, vec![0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100]);
        assert_eq!(combinations(3, 3).count(), 1);
    }

    #[test]
    fn split_side_matches_oracle_on_small_graphs() {
        // every graph on 5 vertices, every bipartition
        for code in 0u32..1 << 10 {
            let mut g = Graph::new(5);
            let mut k = 0;
            for u in 0..5 {
                for v in u + 1..5 {
                    if code >> k & 1 == 1 {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            for side in 0u64..32 {
                assert_eq!(split_on(&g, side).is_some(), oracle_has_split(&g, side));
            }
        }
    }
}

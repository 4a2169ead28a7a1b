//! Circle-graph recognition, two ways.
//!
//! [`recognize`] searches for a realizing double occurrence word directly and
//! is the authority: a returned word is a certificate anyone can re-check.
//! [`obstruction_free`] instead closes the input under local complementation
//! and looks for an induced `W5`, `BW3` or `W7` in every member.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{bits, contains_induced, standard_graph, CanonicalKey, Graph, GraphError, StandardGraph, Vertex};
use crate::words::{least_dihedral_rotation, Letter, Word};

pub const DEFAULT_MAX_RECOGNIZE: usize = 14;
pub const DEFAULT_ORBIT_CAP: usize = 100_000;

#[derive(Debug, Clone, Error)]
pub enum RecognitionError {
    #[error("graph has {0} vertices, more than the recognizer cap {1}")]
    TooLarge(usize, usize),
    #[error("word alphabet does not match the graph's vertex labels")]
    AlphabetMismatch,
    #[error("local equivalence orbit exceeded {cap} members")]
    OrbitCapExceeded { cap: usize, partial: Box<LocalEquivalenceOrbit> },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Word search with a configurable size cap.
#[derive(Debug, Clone, Copy)]
pub struct Recognizer {
    pub max_vertices: usize,
}

impl Default for Recognizer {
    fn default() -> Self {
        Recognizer { max_vertices: DEFAULT_MAX_RECOGNIZE }
    }
}

pub fn recognize(g: &Graph) -> Result<Option<Word>, RecognitionError> {
    Recognizer::default().recognize(g)
}

impl Recognizer {
    /// A word whose interlacement graph is exactly `g` (same labels), or
    /// `None` when `g` is not a circle graph.
    ///
    /// Components are realized separately and concatenated.
    pub fn recognize(&self, g: &Graph) -> Result<Option<Word>, RecognitionError> {
        if g.order() > self.max_vertices {
            return Err(RecognitionError::TooLarge(g.order(), self.max_vertices));
        }
        let mut seq: Vec<Vertex> = Vec::with_capacity(2 * g.order());
        for comp in g.components() {
            match realize_component(g, comp) {
                Some(part) => seq.extend(part),
                None => return Ok(None),
            }
        }
        let tokens = seq.into_iter().map(|v| Letter::new(g.label(v))).collect();
        Ok(Some(Word::from_tokens(tokens).expect("each vertex placed twice")))
    }
}

/// Insertion order: highest degree first, then always the vertex with most
/// already-placed neighbors (ties by degree, then index).
fn insertion_order(g: &Graph, comp: u64) -> Vec<Vertex> {
    let mut order = Vec::new();
    let mut placed = 0u64;
    let mut left = comp;
    while left != 0 {
        let v = bits(left)
            .max_by_key(|&v| ((g.row(v) & placed).count_ones(), g.degree(v), std::cmp::Reverse(v)))
            .expect("nonempty");
        order.push(v);
        placed |= 1 << v;
        left &= !(1 << v);
    }
    order
}

struct WordSearch<'a> {
    g: &'a Graph,
    order: Vec<Vertex>,
    dead: HashSet<Vec<Vertex>>,
}

impl WordSearch<'_> {
    fn extend(&mut self, seq: &mut Vec<Vertex>, depth: usize, placed: u64) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let key = least_dihedral_rotation(seq);
        if self.dead.contains(&key) {
            return false;
        }
        let v = self.order[depth];
        let target = self.g.row(v) & placed;
        let len = seq.len();
        let mut parity = Vec::with_capacity(len + 1);
        parity.push(0u64);
        for &x in seq.iter() {
            parity.push(parity.last().unwrap() ^ 1 << x);
        }
        // inserting before position 0 is the same cyclic gap as after the
        // end, so the first letter stays pinned at the front
        let lo = if len == 0 { 0 } else { 1 };
        for i in lo..=len {
            for j in i..=len {
                if parity[i] ^ parity[j] != target {
                    continue;
                }
                seq.insert(j, v);
                seq.insert(i, v);
                let ok = self.extend(seq, depth + 1, placed | 1 << v);
                if ok {
                    return true;
                }
                seq.remove(i);
                seq.remove(j);
            }
        }
        self.dead.insert(key);
        false
    }
}

fn realize_component(g: &Graph, comp: u64) -> Option<Vec<Vertex>> {
    let mut search = WordSearch { g, order: insertion_order(g, comp), dead: HashSet::new() };
    let mut seq = Vec::new();
    if search.extend(&mut seq, 0, 0) {
        Some(seq)
    } else {
        None
    }
}

/// Whether the interlacement graph of `w` is exactly `g`.
pub fn verify_realization(g: &Graph, w: &Word) -> Result<bool, RecognitionError> {
    let mut labels = g.labels();
    labels.sort();
    let letters: Vec<String> = w.letters().iter().map(|l| l.as_str().to_owned()).collect();
    if labels != letters {
        return Err(RecognitionError::AlphabetMismatch);
    }
    let h = w.interlacement().map_err(|_| RecognitionError::AlphabetMismatch)?;
    Ok(&h == g)
}

/// Isomorphism classes reachable by local complementations.
///
/// Representatives keep the seed's vertex labels; `keys` lists the classes in
/// breadth-first discovery order.
#[derive(Debug, Clone)]
pub struct LocalEquivalenceOrbit {
    keys: Vec<CanonicalKey>,
    representatives: BTreeMap<CanonicalKey, Graph>,
}

impl LocalEquivalenceOrbit {
    pub fn size(&self) -> usize {
        self.keys.len()
    }

    pub fn contains(&self, key: &CanonicalKey) -> bool {
        self.representatives.contains_key(key)
    }

    pub fn keys(&self) -> &[CanonicalKey] {
        &self.keys
    }

    pub fn members(&self) -> impl Iterator<Item = &Graph> {
        self.keys.iter().map(|k| &self.representatives[k])
    }

    pub fn representative(&self, key: &CanonicalKey) -> Option<&Graph> {
        self.representatives.get(key)
    }
}

pub fn local_equivalence_orbit(g: &Graph, cap: usize) -> Result<LocalEquivalenceOrbit, RecognitionError> {
    let (orbit, _) = explore(g, cap, |_| None)?;
    Ok(orbit)
}

/// Breadth-first walk over the orbit, stopping at the first member for which
/// `probe` returns a witness.
fn explore<F>(g: &Graph, cap: usize, mut probe: F) -> Result<(LocalEquivalenceOrbit, Option<Witness>), RecognitionError>
where
    F: FnMut(&Graph) -> Option<Witness>,
{
    let mut orbit = LocalEquivalenceOrbit { keys: Vec::new(), representatives: BTreeMap::new() };
    let seed = g.canonical_key()?;
    orbit.keys.push(seed);
    orbit.representatives.insert(seed, g.clone());
    if let Some(w) = probe(g) {
        return Ok((orbit, Some(w)));
    }
    let mut queue = VecDeque::from([g.clone()]);
    while let Some(h) = queue.pop_front() {
        for v in h.vertices() {
            let next = h.local_complement(v)?;
            let key = next.canonical_key()?;
            if orbit.representatives.contains_key(&key) {
                continue;
            }
            if orbit.keys.len() >= cap {
                return Err(RecognitionError::OrbitCapExceeded { cap, partial: Box::new(orbit) });
            }
            orbit.keys.push(key);
            orbit.representatives.insert(key, next.clone());
            if let Some(w) = probe(&next) {
                return Ok((orbit, Some(w)));
            }
            queue.push_back(next);
        }
    }
    Ok((orbit, None))
}

/// The three minimal circle-graph obstructions under local equivalence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Obstruction {
    W5,
    BW3,
    W7,
}

impl Obstruction {
    pub const ALL: [Obstruction; 3] = [Obstruction::W5, Obstruction::BW3, Obstruction::W7];

    pub fn graph(self) -> Graph {
        let which = match self {
            Obstruction::W5 => StandardGraph::Wheel(5),
            Obstruction::BW3 => StandardGraph::BW3,
            Obstruction::W7 => StandardGraph::Wheel(7),
        };
        standard_graph(which).expect("valid parameters")
    }

    pub fn name(self) -> &'static str {
        match self {
            Obstruction::W5 => "W5",
            Obstruction::BW3 => "BW3",
            Obstruction::W7 => "W7",
        }
    }
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for Obstruction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    /// Member of the input's local equivalence class, on the input's labels.
    #[serde(rename = "orbit_member_edges", serialize_with = "edges_of")]
    pub member: Graph,
    pub obstruction: Obstruction,
    /// Obstruction vertex `i` maps to member vertex `embedding[i]`.
    pub embedding: Vec<Vertex>,
}

fn edges_of<S: Serializer>(g: &Graph, s: S) -> Result<S::Ok, S::Error> {
    g.edges().serialize(s)
}

impl Witness {
    /// Re-check the embedding against the stored member graph.
    pub fn is_valid_embedding(&self) -> bool {
        let h = self.obstruction.graph();
        let k = h.order();
        if self.embedding.len() != k {
            return false;
        }
        let distinct: HashSet<_> = self.embedding.iter().collect();
        distinct.len() == k
            && self.embedding.iter().all(|&v| v < self.member.order())
            && (0..k).all(|i| {
                (0..k).all(|j| i == j || h.has_edge(i, j) == self.member.has_edge(self.embedding[i], self.embedding[j]))
            })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RecognitionCertificate {
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub word: Option<Word>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

fn obstruction_in(member: &Graph, patterns: &[(Obstruction, Graph)]) -> Option<Witness> {
    patterns.iter().find_map(|(obstruction, pattern)| {
        contains_induced(member, pattern).map(|embedding| Witness {
            member: member.clone(),
            obstruction: *obstruction,
            embedding,
        })
    })
}

fn patterns() -> Vec<(Obstruction, Graph)> {
    Obstruction::ALL.iter().map(|&o| (o, o.graph())).collect()
}

/// Scan the local equivalence orbit for an induced obstruction. The verdict
/// is `true` (circle graph) iff none is found; the word is never filled in.
/// The scan stops at the first witness, so the cap only binds on graphs
/// whose orbit is obstruction-free up to that point.
pub fn obstruction_free(g: &Graph, cap: usize) -> Result<RecognitionCertificate, RecognitionError> {
    if g.order() < 6 {
        return Ok(RecognitionCertificate { verdict: true, word: None, witness: None });
    }
    let patterns = patterns();
    let (_, witness) = explore(g, cap, |m| obstruction_in(m, &patterns))?;
    Ok(RecognitionCertificate { verdict: witness.is_none(), word: None, witness })
}

/// Word search first; on failure, an obstruction witness from the orbit.
pub fn certify(g: &Graph, cap: usize) -> Result<RecognitionCertificate, RecognitionError> {
    if let Some(word) = recognize(g)? {
        return Ok(RecognitionCertificate { verdict: true, word: Some(word), witness: None });
    }
    let mut cert = obstruction_free(g, cap)?;
    cert.verdict = false;
    Ok(cert)
}

/// Obstruction verdicts memoized per isomorphism class. Every member of a
/// computed orbit shares the verdict, so whole orbits are cached at once.
#[derive(Debug, Default)]
pub struct ObstructionCache {
    verdicts: HashMap<CanonicalKey, bool>,
    pub cap: usize,
}

impl ObstructionCache {
    pub fn new(cap: usize) -> Self {
        ObstructionCache { verdicts: HashMap::new(), cap }
    }

    pub fn is_obstruction_free(&mut self, g: &Graph) -> Result<bool, RecognitionError> {
        if g.order() < 6 {
            return Ok(true);
        }
        let key = g.canonical_key()?;
        if let Some(&v) = self.verdicts.get(&key) {
            return Ok(v);
        }
        let patterns = patterns();
        let orbit = local_equivalence_orbit(g, self.cap)?;
        let verdict = !orbit.members().any(|m| obstruction_in(m, &patterns).is_some());
        for k in orbit.keys() {
            self.verdicts.insert(*k, verdict);
        }
        Ok(verdict)
    }
}

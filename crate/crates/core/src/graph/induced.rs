use super::{Graph, Vertex};

/// Find an induced copy of `pattern` in `host`.
///
/// Returns the lexicographically smallest embedding `f` (pattern vertex `i`
/// maps to `f[i]`) that preserves both edges and non-edges.
pub fn contains_induced(host: &Graph, pattern: &Graph) -> Option<Vec<Vertex>> {
    let k = pattern.order();
    if k > host.order() {
        return None;
    }
    let mut map = Vec::with_capacity(k);
    if extend(host, pattern, &mut map, 0) {
        Some(map)
    } else {
        None
    }
}

fn extend(host: &Graph, pattern: &Graph, map: &mut Vec<Vertex>, used: u64) -> bool {
    let i = map.len();
    if i == pattern.order() {
        return true;
    }
    let need = pattern.degree(i);
    for v in host.vertices() {
        if used >> v & 1 == 1 || host.degree(v) < need {
            continue;
        }
        let consistent = map
            .iter()
            .enumerate()
            .all(|(j, &w)| pattern.has_edge(i, j) == host.has_edge(v, w));
        if consistent {
            map.push(v);
            if extend(host, pattern, map, used | 1 << v) {
                return true;
            }
            map.pop();
        }
    }
    false
}

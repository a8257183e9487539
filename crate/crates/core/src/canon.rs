//! Canonical labeling for graphs on at most 16 vertices.
//!
//! Iterated color refinement (degree / neighbor-color signatures) followed by
//! backtracking over the coarsest non-singleton cell. Leaves that reproduce
//! the current best code yield automorphisms, whose orbits prune sibling
//! branches; this keeps highly symmetric inputs (complete multipartite, cages)
//! tractable. The code of a graph is the graph6 line of its canonical form,
//! so codes are printable and totally ordered.

use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::Graph;
use crate::graph6::emit_graph6;
use crate::Result;

/// Hard cap on canonicalizable graphs. Larger graphs are compared
/// structurally via family descriptors instead.
pub const CANON_CAP: usize = 16;

/// Isomorphism-invariant total-order key: two graphs share a code iff they
/// are isomorphic (within the supported size range).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(pub Vec<u8>);

impl core::fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "CanonicalCode({})", self.as_str())
    }
}

impl CanonicalCode {
    /// Codes are graph6 lines, hence ASCII.
    pub fn as_str(&self) -> &str {
        core::str::from_utf8(&self.0).expect("codes are ASCII")
    }
}

/// Computes the canonical code of `g` (cap: 16 vertices).
pub fn canonical_code(g: &Graph) -> Result<CanonicalCode> {
    Ok(CanonicalCode(emit_graph6(&canonical_form(g)?)?.into_bytes()))
}

/// Canonically relabeled copy of `g`.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let (n, rows) = to_compact(g)?;
    if n <= 1 {
        return Ok(g.clone());
    }
    let mut s = Search::new(n, rows);
    s.run();
    let perm = s.best_perm;
    Ok(g.relabel(&perm[..n]))
}

/// Number of automorphisms of `g` (cap: 12 vertices).
pub fn count_automorphisms(g: &Graph) -> Result<u64> {
    let n = g.n();
    if n > 12 {
        return Err(Error::UnsupportedSize(alloc::format!(
            "automorphism counting capped at 12 vertices, got {n}"
        )));
    }
    if n <= 1 {
        return Ok(1);
    }
    let m = g.num_edges();
    let full = n * (n - 1) / 2;
    if m == 0 || m == full {
        return Ok(factorial(n));
    }
    let (n, rows) = to_compact(g)?;
    let mut colors = [0u8; 16];
    refine(n, &rows, &mut colors);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (colors[v], v));
    let mut image = [usize::MAX; 16];
    let mut used = 0u16;
    let mut count = 0u64;
    auto_rec(n, &rows, &colors, &order, 0, &mut image, &mut used, &mut count);
    Ok(count)
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

#[allow(clippy::too_many_arguments)]
fn auto_rec(
    n: usize,
    rows: &[u16; 16],
    colors: &[u8; 16],
    order: &[usize],
    depth: usize,
    image: &mut [usize; 16],
    used: &mut u16,
    count: &mut u64,
) {
    if depth == n {
        *count += 1;
        return;
    }
    let v = order[depth];
    for w in 0..n {
        if *used >> w & 1 == 1 || colors[w] != colors[v] {
            continue;
        }
        // adjacency with all previously mapped vertices must match exactly
        let ok = order[..depth].iter().all(|&u| {
            let e1 = rows[v] >> u & 1;
            let e2 = rows[w] >> image[u] & 1;
            e1 == e2
        });
        if !ok {
            continue;
        }
        image[v] = w;
        *used |= 1 << w;
        auto_rec(n, rows, colors, order, depth + 1, image, used, count);
        *used &= !(1 << w);
    }
}

pub(crate) fn to_compact(g: &Graph) -> Result<(usize, [u16; 16])> {
    let n = g.n();
    if n > CANON_CAP {
        return Err(Error::UnsupportedSize(alloc::format!(
            "canonical labeling capped at {CANON_CAP} vertices, got {n}"
        )));
    }
    let mut rows = [0u16; 16];
    for (u, row) in rows.iter_mut().enumerate().take(n) {
        for v in g.neighbors(u) {
            *row |= 1 << v;
        }
    }
    Ok((n, rows))
}

/// Fast path for enumeration loops: canonical upper-triangle bits of the
/// graph given by compact rows. Equal keys iff isomorphic (fixed n).
pub(crate) fn canon_key(n: usize, rows: [u16; 16]) -> u128 {
    if n <= 1 {
        return 0;
    }
    let mut s = Search::new(n, rows);
    s.run();
    s.best_code
}

struct Search {
    n: usize,
    rows: [u16; 16],
    best_code: u128,
    best_perm: [usize; 16],
    gens: Vec<[usize; 16]>,
    base: Vec<usize>,
}

impl Search {
    fn new(n: usize, rows: [u16; 16]) -> Self {
        Search {
            n,
            rows,
            best_code: u128::MAX,
            best_perm: [0; 16],
            gens: Vec::new(),
            base: Vec::new(),
        }
    }

    fn run(&mut self) {
        let mut colors = [0u8; 16];
        refine(self.n, &self.rows, &mut colors);
        self.dfs(colors);
    }

    fn dfs(&mut self, colors: [u8; 16]) {
        let n = self.n;
        // first non-singleton cell, by color value
        let mut cell_color = None;
        let mut counts = [0u8; 17];
        for v in 0..n {
            counts[colors[v] as usize] += 1;
        }
        for (c, &count) in counts.iter().enumerate().take(n) {
            if count >= 2 {
                cell_color = Some(c as u8);
                break;
            }
        }
        let Some(cc) = cell_color else {
            self.leaf(&colors);
            return;
        };
        let cands: Vec<usize> = (0..n).filter(|&v| colors[v] == cc).collect();
        // orbit pruning: generators fixing the current base pointwise
        let mut parent: [usize; 16] = core::array::from_fn(|i| i);
        for g in &self.gens {
            if self.base.iter().any(|&b| g[b] != b) {
                continue;
            }
            for (v, &gv) in g.iter().enumerate().take(n) {
                union(&mut parent, v, gv);
            }
        }
        let mut seen_roots: Vec<usize> = Vec::new();
        for &v in &cands {
            let root = find(&mut parent, v);
            if seen_roots.contains(&root) {
                continue;
            }
            seen_roots.push(root);
            let mut child = colors;
            // individualize v: fresh color, then re-refine
            let fresh = (0..n).map(|u| child[u]).max().unwrap() + 1;
            child[v] = fresh;
            refine(n, &self.rows, &mut child);
            self.base.push(v);
            self.dfs(child);
            self.base.pop();
            // newly found generators may merge remaining candidates
            for g in &self.gens {
                if self.base.iter().any(|&b| g[b] != b) {
                    continue;
                }
                for (u, &gu) in g.iter().enumerate().take(n) {
                    union(&mut parent, u, gu);
                }
            }
        }
    }

    fn leaf(&mut self, colors: &[u8; 16]) {
        let n = self.n;
        let mut perm = [0usize; 16]; // old vertex -> new label
        for v in 0..n {
            perm[v] = colors[v] as usize;
        }
        let code = code_of(n, &self.rows, &perm);
        if code < self.best_code {
            self.best_code = code;
            self.best_perm = perm;
        } else if code == self.best_code {
            // perm and best_perm send G to the same labeled graph, so
            // best_perm^{-1} ∘ perm is an automorphism.
            let mut inv_best = [0usize; 16];
            for v in 0..n {
                inv_best[self.best_perm[v]] = v;
            }
            let mut a = [0usize; 16];
            for v in 0..n {
                a[v] = inv_best[perm[v]];
            }
            if (0..n).any(|v| a[v] != v) && !self.gens.contains(&a) {
                self.gens.push(a);
            }
        }
    }
}

fn union(parent: &mut [usize; 16], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

fn find(parent: &mut [usize; 16], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

/// Upper-triangle bits of the relabeled graph, row-major, MSB-first.
fn code_of(n: usize, rows: &[u16; 16], perm: &[usize; 16]) -> u128 {
    let mut inv = [0usize; 16];
    for v in 0..n {
        inv[perm[v]] = v;
    }
    let mut code = 0u128;
    for i in 0..n {
        for j in (i + 1)..n {
            code <<= 1;
            if rows[inv[i]] >> inv[j] & 1 == 1 {
                code |= 1;
            }
        }
    }
    code
}

/// Iterated (vertex color, neighbor-color-count) refinement. Color ranks are
/// assigned by signature order, so the result is isomorphism-invariant.
fn refine(n: usize, rows: &[u16; 16], colors: &mut [u8; 16]) {
    loop {
        let mut masks = [0u16; 17];
        for v in 0..n {
            masks[colors[v] as usize] |= 1 << v;
        }
        let ncolors = (0..n).map(|v| colors[v]).max().unwrap_or(0) as usize + 1;
        let mut sigs: Vec<(u8, [u8; 16], usize)> = (0..n)
            .map(|v| {
                let mut cnt = [0u8; 16];
                for (c, item) in cnt.iter_mut().enumerate().take(ncolors.min(16)) {
                    *item = (rows[v] & masks[c]).count_ones() as u8;
                }
                (colors[v], cnt, v)
            })
            .collect();
        sigs.sort_unstable();
        let mut new_colors = [0u8; 16];
        let mut rank = 0u8;
        for i in 0..n {
            if i > 0 && (sigs[i].0, sigs[i].1) != (sigs[i - 1].0, sigs[i - 1].1) {
                rank += 1;
            }
            new_colors[sigs[i].2] = rank;
        }
        if new_colors[..n] == colors[..n] {
            break;
        }
        *colors = new_colors;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn relabel_invariance_k33() {
        let g = Graph::complete_multipartite(&[3, 3]).unwrap();
        let c0 = canonical_code(&g).unwrap();
        let perm = vec![4, 2, 0, 5, 1, 3];
        let c1 = canonical_code(&g.relabel(&perm)).unwrap();
        assert_eq!(c0, c1);
    }

    #[test]
    fn degree_sequences_separate() {
        let p3 = Graph::path(3);
        let k2k1 = Graph::from_edges(3, &[(0, 1)]);
        assert_ne!(canonical_code(&p3).unwrap(), canonical_code(&k2k1).unwrap());
    }

    #[test]
    fn eleven_classes_on_four_vertices() {
        // Oracle: bucket all 2^6 labeled 4-vertex graphs by code.
        let mut codes = alloc::collections::BTreeSet::new();
        for mask in 0u32..64 {
            let mut g = Graph::empty(4);
            let mut bit = 0;
            for u in 0..4 {
                for v in (u + 1)..4 {
                    if mask >> bit & 1 == 1 {
                        g.add_edge(u, v);
                    }
                    bit += 1;
                }
            }
            codes.insert(canonical_code(&g).unwrap());
        }
        assert_eq!(codes.len(), 11);
    }

    #[test]
    fn symmetric_graphs_stay_cheap() {
        // K_{6,6} has |Aut| = 2·(6!)^2; orbit pruning must keep this fast.
        let g = Graph::complete_multipartite(&[6, 6]).unwrap();
        let c = canonical_code(&g).unwrap();
        let mut perm: Vec<usize> = (0..12).rev().collect();
        perm.swap(0, 3);
        assert_eq!(c, canonical_code(&g.relabel(&perm)).unwrap());
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(count_automorphisms(&Graph::complete(3)).unwrap(), 6);
        assert_eq!(count_automorphisms(&Graph::cycle(5)).unwrap(), 10);
        assert_eq!(count_automorphisms(&Graph::book(2)).unwrap(), 4);
        assert_eq!(count_automorphisms(&Graph::star(3)).unwrap(), 6);
        // Petersen graph
        let pet = Graph::from_edges(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            ],
        );
        assert_eq!(count_automorphisms(&pet).unwrap(), 120);
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::empty(17);
        assert!(matches!(canonical_code(&g), Err(Error::UnsupportedSize(_))));
    }
}

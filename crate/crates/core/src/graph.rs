//! Undirected simple graphs over bit-row adjacency.
//!
//! Vertices are `0..n`. Row `v` is a bitset of neighbors packed into `u64`
//! words, so neighborhood intersection is a word-parallel AND + popcount —
//! the hot loop of copy counting.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::Result;

/// Undirected simple graph with bit-row adjacency.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges=", self.n, self.num_edges())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Graph { n, words, rows: vec![0u64; n * words] }
    }

    /// Graph from an explicit edge list. Duplicate edges are idempotent.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g.debug_check();
        g
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v);
            }
        }
        g.debug_check();
        g
    }

    /// Complete multipartite graph with the given part sizes, parts laid out
    /// as consecutive vertex ranges in declaration order.
    pub fn complete_multipartite(sizes: &[usize]) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::InvalidArgument("part sizes must be nonempty".into()));
        }
        if sizes.contains(&0) {
            return Err(Error::InvalidArgument("part sizes must be positive".into()));
        }
        let n: usize = sizes.iter().sum();
        let mut g = Graph::empty(n);
        let mut start = 0usize;
        let mut bounds = Vec::with_capacity(sizes.len());
        for &s in sizes {
            bounds.push((start, start + s));
            start += s;
        }
        for (pi, &(a0, a1)) in bounds.iter().enumerate() {
            for &(b0, b1) in bounds.iter().skip(pi + 1) {
                for u in a0..a1 {
                    for v in b0..b1 {
                        g.add_edge(u, v);
                    }
                }
            }
        }
        g.debug_check();
        Ok(g)
    }

    /// Star with `edges` edges (`S_{edges+1}`, center is vertex 0).
    pub fn star(edges: usize) -> Self {
        let mut g = Graph::empty(edges + 1);
        for leaf in 1..=edges {
            g.add_edge(0, leaf);
        }
        g
    }

    /// Matching with `edges` disjoint edges (`q K_2`).
    pub fn matching(edges: usize) -> Self {
        let mut g = Graph::empty(2 * edges);
        for i in 0..edges {
            g.add_edge(2 * i, 2 * i + 1);
        }
        g
    }

    /// Path on `n` vertices.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0);
        }
        g
    }

    /// Book `B_p`: `p` triangles sharing one edge (vertices 0,1).
    pub fn book(pages: usize) -> Self {
        let mut g = Graph::empty(pages + 2);
        g.add_edge(0, 1);
        for p in 0..pages {
            g.add_edge(0, p + 2);
            g.add_edge(1, p + 2);
        }
        g
    }

    /// Wheel: a hub joined to every vertex of a cycle on `rim` vertices.
    pub fn wheel(rim: usize) -> Self {
        let mut g = Graph::empty(rim + 1);
        for i in 0..rim {
            g.add_edge(rim, i);
            g.add_edge(i, (i + 1) % rim);
        }
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn words_per_row(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Adds edge `uv`; loops are rejected.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "loops are not allowed");
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.rows[u * self.words + v / 64] |= 1u64 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1u64 << (u % 64);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / 64] &= !(1u64 << (v % 64));
        self.rows[v * self.words + u / 64] &= !(1u64 << (u % 64));
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Number of edges `m`.
    pub fn num_edges(&self) -> usize {
        let total: usize = (0..self.n).map(|v| self.degree(v)).sum();
        total / 2
    }

    /// Iterator over edges as ordered pairs `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v))
        })
    }

    /// Iterator over the neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> Neighbors<'_> {
        Neighbors { row: self.row(v), word_idx: 0, current: self.row(v)[0] }
    }

    /// `|N(u) ∩ N(v)|` by word-parallel AND + popcount.
    pub fn common_neighbors_count(&self, u: usize, v: usize) -> usize {
        let (ru, rv) = (self.row(u), self.row(v));
        ru.iter().zip(rv).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    /// (min degree, max degree, sum of squared degrees).
    ///
    /// The degree-square sum never exceeds `m^2 + m`; this is asserted in
    /// debug builds.
    pub fn degree_stats(&self) -> (usize, usize, u64) {
        let mut dmin = usize::MAX;
        let mut dmax = 0usize;
        let mut sq = 0u64;
        if self.n == 0 {
            return (0, 0, 0);
        }
        for v in 0..self.n {
            let d = self.degree(v);
            dmin = dmin.min(d);
            dmax = dmax.max(d);
            sq += (d as u64) * (d as u64);
        }
        let m = self.num_edges() as u64;
        debug_assert!(sq <= m * m + m, "degree-square sum exceeds m^2+m");
        (dmin, dmax, sq)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Subgraph induced on `verts` (new vertex `i` is `verts[i]`).
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut g = Graph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Copy with isolated vertices removed (relabeled to `0..k`).
    pub fn strip_isolated(&self) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&v| self.degree(v) > 0).collect();
        self.induced(&keep)
    }

    /// Connected components as sorted vertex lists, ordered by minimum vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Debug-build structural invariants: symmetry, no loops, Lemma-style
    /// degree-square bound.
    pub fn debug_check(&self) {
        #[cfg(debug_assertions)]
        {
            for u in 0..self.n {
                assert!(!self.has_edge(u, u), "loop at {u}");
                for v in (u + 1)..self.n {
                    assert_eq!(self.has_edge(u, v), self.has_edge(v, u), "asymmetry {u},{v}");
                }
            }
            let _ = self.degree_stats();
        }
    }
}

/// Iterator over set bits of a bit row.
pub struct Neighbors<'a> {
    row: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for Neighbors<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let b = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word_idx * 64 + b);
            }
            self.word_idx += 1;
            if self.word_idx >= self.row.len() {
                return None;
            }
            self.current = self.row[self.word_idx];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multipartite_edge_counts() {
        let g = Graph::complete_multipartite(&[3, 3]).unwrap();
        assert_eq!(g.num_edges(), 9);
        let g = Graph::complete_multipartite(&[1]).unwrap();
        assert_eq!((g.n(), g.num_edges()), (1, 0));
        let g = Graph::complete_multipartite(&[2, 2, 2]).unwrap();
        assert_eq!(g.num_edges(), 12);
        assert!(Graph::complete_multipartite(&[]).is_err());
    }

    #[test]
    fn degree_stats_examples() {
        // T_{7,2} = K_{4,3}
        let g = Graph::complete_multipartite(&[4, 3]).unwrap();
        assert_eq!(g.degree_stats(), (3, 4, 84));
        assert!(84 <= 12 * 12 + 12);
        assert_eq!(Graph::empty(5).degree_stats(), (0, 0, 0));
        assert_eq!(Graph::complete(4).degree_stats(), (3, 3, 36));
    }

    #[test]
    fn neighbors_and_common() {
        let g = Graph::complete_multipartite(&[4, 3]).unwrap();
        assert_eq!(g.neighbors(0).collect::<Vec<_>>(), vec![4, 5, 6]);
        assert_eq!(g.common_neighbors_count(0, 1), 3);
        assert_eq!(g.common_neighbors_count(0, 4), 0);
    }

    #[test]
    fn components_split() {
        let g = Graph::from_edges(5, &[(0, 1), (2, 3)]);
        let comps = g.components();
        assert_eq!(comps, vec![vec![0, 1], vec![2, 3], vec![4]]);
        assert!(!g.is_connected());
        assert!(Graph::cycle(5).is_connected());
    }

    #[test]
    fn named_small_graphs() {
        assert_eq!(Graph::star(3).degree_stats(), (1, 3, 12));
        assert_eq!(Graph::matching(2).num_edges(), 2);
        assert_eq!(Graph::book(2).num_edges(), 5);
        assert_eq!(Graph::wheel(5).num_edges(), 10);
        assert_eq!(Graph::cycle(5).num_edges(), 5);
    }
}

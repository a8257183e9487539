//! Constructors and enumerators for the Turán-type graph families, with
//! explicit bookkeeping of part sizes, added class-edges, and deleted
//! cross-edges.
//!
//! Parts are consecutive vertex ranges with sizes sorted descending
//! (`n_1 >= ... >= n_r`). Members of the q-edge-addition family are keyed by
//! `FamilyDescriptor`, the multiset of (part size, embedded-shape code)
//! pairs; for hosts small enough to canonicalize, descriptor enumeration is
//! cross-validated against canonical codes of the full graphs.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::canon::{canon_key, canonical_code, CanonicalCode, CANON_CAP};
use crate::error::Error;
use crate::graph::Graph;
use crate::spectral::EmbeddedSpec;
use crate::Result;

/// Default cap on the number of added edges in family enumeration.
pub const FAMILY_Q_CAP: usize = 6;
/// Cap on exhaustive enumeration of all graphs up to isomorphism.
pub const ALL_GRAPHS_CAP: usize = 8;

/// A graph together with its multipartite scaffold: parts, base sizes, and
/// the exact lists of added class-edges and deleted cross-edges.
#[derive(Debug, Clone)]
pub struct PartitionedGraph {
    graph: Graph,
    parts: Vec<Vec<usize>>,
    base_sizes: Vec<usize>,
    added_class_edges: Vec<(usize, usize)>,
    deleted_cross_edges: Vec<(usize, usize)>,
}

impl PartitionedGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn base_sizes(&self) -> &[usize] {
        &self.base_sizes
    }

    pub fn added_class_edges(&self) -> &[(usize, usize)] {
        &self.added_class_edges
    }

    pub fn deleted_cross_edges(&self) -> &[(usize, usize)] {
        &self.deleted_cross_edges
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// alpha_1: number of added class-edges.
    pub fn alpha1(&self) -> usize {
        self.added_class_edges.len()
    }

    /// alpha_2: number of deleted cross-edges.
    pub fn alpha2(&self) -> usize {
        self.deleted_cross_edges.len()
    }

    /// Part index of a vertex.
    pub fn part_of(&self, v: usize) -> usize {
        let mut off = 0usize;
        for (i, &s) in self.base_sizes.iter().enumerate() {
            if v < off + s {
                return i;
            }
            off += s;
        }
        unreachable!("vertex out of range")
    }

    /// The embedded graph of part `i` (class-edges within the part, isolated
    /// vertices stripped).
    pub fn embedded_shape(&self, i: usize) -> Graph {
        let part = &self.parts[i];
        self.graph.induced(part).strip_isolated()
    }

    /// Isomorphism key: sorted multiset of (part size, embedded-shape code).
    pub fn descriptor(&self) -> Result<FamilyDescriptor> {
        let mut pairs = Vec::with_capacity(self.parts.len());
        for i in 0..self.parts.len() {
            let code = canonical_code(&self.embedded_shape(i))?;
            pairs.push((self.base_sizes[i], code));
        }
        pairs.sort();
        Ok(FamilyDescriptor(pairs))
    }

    /// View as an embedded spec (sizes plus per-part shapes placed on
    /// leading vertices); requires no deleted cross-edges, and yields a graph
    /// isomorphic to `self.graph()`.
    pub fn embedded_spec(&self) -> Result<EmbeddedSpec> {
        if !self.deleted_cross_edges.is_empty() {
            return Err(Error::InvalidArgument(
                "embedded spec requires no deleted cross-edges".into(),
            ));
        }
        let shapes: Vec<Graph> = (0..self.parts.len()).map(|i| self.embedded_shape(i)).collect();
        EmbeddedSpec::new(self.base_sizes.clone(), shapes)
    }
}

/// Multiset of (part size, embedded-shape canonical code) pairs; equal
/// descriptors identify isomorphic family members.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FamilyDescriptor(pub Vec<(usize, CanonicalCode)>);

impl FamilyDescriptor {
    /// Compact human-readable label: `s<size>` per part, `s<size>:<code>`
    /// when the part hosts edges.
    pub fn label(&self) -> alloc::string::String {
        use core::fmt::Write;
        let mut out = alloc::string::String::new();
        for (i, (size, code)) in self.0.iter().enumerate() {
            if i > 0 {
                out.push('|');
            }
            let shape = code.as_str();
            // the code of an edgeless shape is the graph6 of the empty graph
            if shape == "?" {
                let _ = write!(out, "s{size}");
            } else {
                let _ = write!(out, "s{size}:{shape}");
            }
        }
        out
    }
}

/// Part sizes of the Turán graph `T_{n,r}`, sorted descending.
pub fn turan_sizes(n: usize, r: usize) -> Vec<usize> {
    let big = n % r;
    let mut sizes = vec![n / r + 1; big];
    sizes.extend(vec![n / r; r - big]);
    sizes
}

/// The Turán graph `T_{n,r}` with parts as equal as possible.
pub fn turan(n: usize, r: usize) -> Result<PartitionedGraph> {
    if r == 0 || r > n {
        return Err(Error::InvalidArgument(alloc::format!(
            "need 1 <= r <= n, got r = {r}, n = {n}"
        )));
    }
    perturbed_multipartite(&turan_sizes(n, r), &[], &[])
}

/// `K_r(sizes)` plus `class_edges` minus `cross_nonedges`, with exact
/// alpha bookkeeping. Sizes must be sorted descending; every class edge must
/// be internal to one part and absent from the base; every deleted edge must
/// join two parts.
pub fn perturbed_multipartite(
    sizes: &[usize],
    class_edges: &[(usize, usize)],
    cross_nonedges: &[(usize, usize)],
) -> Result<PartitionedGraph> {
    if sizes.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidArgument("part sizes must be sorted descending".into()));
    }
    let mut graph = Graph::complete_multipartite(sizes)?;
    let n = graph.n();
    let mut parts = Vec::with_capacity(sizes.len());
    let mut off = 0usize;
    for &s in sizes {
        parts.push((off..off + s).collect::<Vec<_>>());
        off += s;
    }
    let part_of = |v: usize| -> usize {
        let mut off = 0usize;
        for (i, &s) in sizes.iter().enumerate() {
            if v < off + s {
                return i;
            }
            off += s;
        }
        usize::MAX
    };
    let mut added = Vec::new();
    for &(u, v) in class_edges {
        if u >= n || v >= n || u == v {
            return Err(Error::InvalidArgument(alloc::format!(
                "class edge ({u}, {v}) out of range"
            )));
        }
        if part_of(u) != part_of(v) {
            return Err(Error::InvalidArgument(alloc::format!(
                "edge ({u}, {v}) joins two parts, so it is not a class-edge"
            )));
        }
        if graph.has_edge(u, v) {
            return Err(Error::InvalidArgument(alloc::format!(
                "class edge ({u}, {v}) listed twice"
            )));
        }
        graph.add_edge(u, v);
        added.push((u.min(v), u.max(v)));
    }
    let mut deleted = Vec::new();
    for &(u, v) in cross_nonedges {
        if u >= n || v >= n || u == v {
            return Err(Error::InvalidArgument(alloc::format!(
                "cross edge ({u}, {v}) out of range"
            )));
        }
        if part_of(u) == part_of(v) {
            return Err(Error::InvalidArgument(alloc::format!(
                "edge ({u}, {v}) is internal to a part, so it is not a cross-edge"
            )));
        }
        if !graph.has_edge(u, v) {
            return Err(Error::InvalidArgument(alloc::format!(
                "cross edge ({u}, {v}) already deleted"
            )));
        }
        graph.remove_edge(u, v);
        deleted.push((u.min(v), u.max(v)));
    }
    added.sort_unstable();
    deleted.sort_unstable();
    graph.debug_check();
    Ok(PartitionedGraph {
        graph,
        parts,
        base_sizes: sizes.to_vec(),
        added_class_edges: added,
        deleted_cross_edges: deleted,
    })
}

/// `Y_{n,r,q}`: Turán graph plus a q-edge matching in a largest part.
pub fn y_graph(n: usize, r: usize, q: usize) -> Result<PartitionedGraph> {
    let sizes = checked_sizes(n, r)?;
    if 2 * q > sizes[0] {
        return Err(Error::InvalidArgument(alloc::format!(
            "matching with {q} edges needs {} vertices but the largest part has {}",
            2 * q,
            sizes[0]
        )));
    }
    let edges: Vec<(usize, usize)> = (0..q).map(|i| (2 * i, 2 * i + 1)).collect();
    perturbed_multipartite(&sizes, &edges, &[])
}

/// `L_{n,r,q}`: Turán graph plus `K_3` (q = 3) or the star `S_{q+1}`
/// (otherwise) in a smallest part.
pub fn l_graph(n: usize, r: usize, q: usize) -> Result<PartitionedGraph> {
    let sizes = checked_sizes(n, r)?;
    let off: usize = sizes[..r - 1].iter().sum();
    let smallest = sizes[r - 1];
    let edges: Vec<(usize, usize)> = if q == 3 {
        if smallest < 3 {
            return Err(Error::InvalidArgument(
                "K_3 needs 3 vertices in the smallest part".into(),
            ));
        }
        vec![(off, off + 1), (off, off + 2), (off + 1, off + 2)]
    } else {
        if q + 1 > smallest {
            return Err(Error::InvalidArgument(alloc::format!(
                "star with {q} edges needs {} vertices but the smallest part has {smallest}",
                q + 1
            )));
        }
        (1..=q).map(|i| (off, off + i)).collect()
    };
    perturbed_multipartite(&sizes, &edges, &[])
}

/// `T_{n,r,q}`: Turán graph plus the star `S_{q+1}` in a largest part.
pub fn t_star_graph(n: usize, r: usize, q: usize) -> Result<PartitionedGraph> {
    let sizes = checked_sizes(n, r)?;
    if q + 1 > sizes[0] {
        return Err(Error::InvalidArgument(alloc::format!(
            "star with {q} edges needs {} vertices but the largest part has {}",
            q + 1,
            sizes[0]
        )));
    }
    let edges: Vec<(usize, usize)> = (1..=q).map(|i| (0, i)).collect();
    perturbed_multipartite(&sizes, &edges, &[])
}

fn checked_sizes(n: usize, r: usize) -> Result<Vec<usize>> {
    if r == 0 || r > n {
        return Err(Error::InvalidArgument(alloc::format!(
            "need 1 <= r <= n, got r = {r}, n = {n}"
        )));
    }
    Ok(turan_sizes(n, r))
}

/// Splits the edge set into (class edges, cross edges) relative to the parts.
#[allow(clippy::type_complexity)]
pub fn classify_edges(pg: &PartitionedGraph) -> (Vec<(usize, usize)>, Vec<(usize, usize)>) {
    let mut class = Vec::new();
    let mut cross = Vec::new();
    for (u, v) in pg.graph.edges() {
        if pg.part_of(u) == pg.part_of(v) {
            class.push((u, v));
        } else {
            cross.push((u, v));
        }
    }
    (class, cross)
}

/// Builds the family member realizing an embedded spec, with part sizes
/// sorted descending.
pub fn from_embedded_spec(spec: &EmbeddedSpec) -> Result<PartitionedGraph> {
    let mut order: Vec<usize> = (0..spec.sizes().len()).collect();
    order.sort_by_key(|&i| core::cmp::Reverse(spec.sizes()[i]));
    let sizes: Vec<usize> = order.iter().map(|&i| spec.sizes()[i]).collect();
    let mut edges = Vec::new();
    let mut off = 0usize;
    for &i in &order {
        let h = &spec.embedded()[i];
        for (a, b) in h.edges() {
            edges.push((off + a, off + b));
        }
        off += spec.sizes()[i];
    }
    perturbed_multipartite(&sizes, &edges, &[])
}

/// All isomorphism classes of graphs with exactly `m` edges and no isolated
/// vertices, each in canonical form, sorted by canonical code.
pub fn edge_graph_shapes(m: usize) -> Result<Vec<Graph>> {
    if m > 8 {
        return Err(Error::UnsupportedSize(alloc::format!(
            "edge-graph shapes capped at 8 edges, got {m}"
        )));
    }
    let mut cur: Vec<Graph> = vec![Graph::empty(0)];
    for _ in 0..m {
        let mut next: BTreeMap<CanonicalCode, Graph> = BTreeMap::new();
        for g in &cur {
            let n = g.n();
            // new edge between existing non-adjacent vertices
            for u in 0..n {
                for v in (u + 1)..n {
                    if !g.has_edge(u, v) {
                        let mut h = g.clone();
                        h.add_edge(u, v);
                        next.entry(canonical_code(&h)?).or_insert(h);
                    }
                }
            }
            // new edge from an existing vertex to a fresh vertex
            for u in 0..n {
                let mut h = Graph::empty(n + 1);
                for (a, b) in g.edges() {
                    h.add_edge(a, b);
                }
                h.add_edge(u, n);
                next.entry(canonical_code(&h)?).or_insert(h);
            }
            // disjoint fresh edge
            let mut h = Graph::empty(n + 2);
            for (a, b) in g.edges() {
                h.add_edge(a, b);
            }
            h.add_edge(n, n + 1);
            next.entry(canonical_code(&h)?).or_insert(h);
        }
        cur = next.into_values().collect();
    }
    Ok(cur)
}

/// Enumerates one member per isomorphism class of the family obtained from
/// `T_{n,r}` by adding `q` edges, keyed (and ordered) by `FamilyDescriptor`.
///
/// For `n <= 16` the enumeration is cross-validated against canonical codes
/// of the fully realized graphs; a disagreement is surfaced as
/// `DescriptorMismatch`, never silently resolved.
pub fn enumerate_family(n: usize, r: usize, q: usize) -> Result<Vec<PartitionedGraph>> {
    enumerate_family_capped(n, r, q, FAMILY_Q_CAP)
}

/// `enumerate_family` with an explicit cap on `q`.
pub fn enumerate_family_capped(
    n: usize,
    r: usize,
    q: usize,
    q_cap: usize,
) -> Result<Vec<PartitionedGraph>> {
    if q > q_cap {
        return Err(Error::UnsupportedSize(alloc::format!(
            "family enumeration capped at q = {q_cap}, got {q}"
        )));
    }
    let sizes = checked_sizes(n, r)?;
    let slots: usize = sizes.iter().map(|&s| s * (s - 1) / 2).sum();
    if slots < q {
        return Err(Error::InvalidArgument(alloc::format!(
            "no placement: T_{{{n},{r}}} has only {slots} class slots for {q} edges"
        )));
    }
    let shapes_by_m: Vec<Vec<Graph>> =
        (0..=q).map(edge_graph_shapes).collect::<Result<Vec<_>>>()?;
    let empty_code = canonical_code(&Graph::empty(0))?;
    let shape_codes: Vec<Vec<CanonicalCode>> = shapes_by_m
        .iter()
        .map(|v| v.iter().map(canonical_code).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;

    // distribute q edges over parts; dedup by descriptor
    let mut found: BTreeMap<FamilyDescriptor, Vec<(usize, usize)>> = BTreeMap::new();
    let mut assignment: Vec<(usize, usize)> = Vec::new(); // (m, shape index) per part
    distribute(
        &sizes,
        &shapes_by_m,
        &shape_codes,
        &empty_code,
        q,
        0,
        &mut assignment,
        &mut found,
    );

    let mut out = Vec::with_capacity(found.len());
    for (descriptor, assignment) in &found {
        let mut edges = Vec::new();
        let mut off = 0usize;
        for (part, &(m, si)) in assignment.iter().enumerate() {
            let shape = &shapes_by_m[m][si];
            for (a, b) in shape.edges() {
                edges.push((off + a, off + b));
            }
            off += sizes[part];
        }
        let pg = perturbed_multipartite(&sizes, &edges, &[])?;
        debug_assert_eq!(&pg.descriptor()?, descriptor);
        out.push(pg);
    }

    if n <= CANON_CAP {
        cross_validate(&sizes, q, &out)?;
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn distribute(
    sizes: &[usize],
    shapes_by_m: &[Vec<Graph>],
    shape_codes: &[Vec<CanonicalCode>],
    empty_code: &CanonicalCode,
    remaining: usize,
    part: usize,
    assignment: &mut Vec<(usize, usize)>,
    found: &mut BTreeMap<FamilyDescriptor, Vec<(usize, usize)>>,
) {
    if part == sizes.len() {
        if remaining == 0 {
            let mut pairs: Vec<(usize, CanonicalCode)> = assignment
                .iter()
                .enumerate()
                .map(|(p, &(m, si))| {
                    let code =
                        if m == 0 { empty_code.clone() } else { shape_codes[m][si].clone() };
                    (sizes[p], code)
                })
                .collect();
            pairs.sort();
            found.entry(FamilyDescriptor(pairs)).or_insert_with(|| assignment.clone());
        }
        return;
    }
    for m in 0..=remaining {
        for (si, shape) in shapes_by_m[m].iter().enumerate() {
            if shape.n() > sizes[part] {
                continue;
            }
            assignment.push((m, si));
            distribute(
                sizes,
                shapes_by_m,
                shape_codes,
                empty_code,
                remaining - m,
                part + 1,
                assignment,
                found,
            );
            assignment.pop();
        }
    }
}

/// Labeled brute force: all q-subsets of class slots, bucketed by canonical
/// code of the full graph. Must reproduce exactly the descriptor classes.
fn cross_validate(sizes: &[usize], q: usize, members: &[PartitionedGraph]) -> Result<()> {
    let base = Graph::complete_multipartite(sizes)?;
    let mut slots = Vec::new();
    let mut off = 0usize;
    for &s in sizes {
        for a in 0..s {
            for b in (a + 1)..s {
                slots.push((off + a, off + b));
            }
        }
        off += s;
    }
    let mut buckets: BTreeSet<CanonicalCode> = BTreeSet::new();
    let mut pick = vec![0usize; q];
    enumerate_subsets(&slots, q, 0, 0, &mut pick, &mut |subset| {
        let mut g = base.clone();
        for &i in subset {
            let (u, v) = slots[i];
            g.add_edge(u, v);
        }
        buckets.insert(canonical_code(&g)?);
        Ok(())
    })?;
    if buckets.len() != members.len() {
        return Err(Error::DescriptorMismatch(alloc::format!(
            "descriptor enumeration found {} classes, canonical-code oracle found {}",
            members.len(),
            buckets.len()
        )));
    }
    let mut member_codes = BTreeSet::new();
    for pg in members {
        let code = canonical_code(pg.graph())?;
        if !buckets.contains(&code) {
            return Err(Error::DescriptorMismatch(
                "descriptor member missing from labeled enumeration".into(),
            ));
        }
        if !member_codes.insert(code) {
            return Err(Error::DescriptorMismatch(
                "two descriptors realize isomorphic graphs".into(),
            ));
        }
    }
    Ok(())
}

fn enumerate_subsets(
    slots: &[(usize, usize)],
    q: usize,
    depth: usize,
    start: usize,
    pick: &mut [usize],
    f: &mut impl FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    if depth == q {
        return f(pick);
    }
    for i in start..slots.len() {
        pick[depth] = i;
        enumerate_subsets(slots, q, depth + 1, i + 1, pick, f)?;
    }
    Ok(())
}

/// One canonical representative per isomorphism class of all `n`-vertex
/// graphs (`n <= 8`), ordered by canonical key. Labeled Gray-code enumeration
/// over all adjacency masks with a sorted-degree prefilter and canonical
/// deduplication.
pub fn enumerate_all_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > ALL_GRAPHS_CAP {
        return Err(Error::UnsupportedSize(alloc::format!(
            "exhaustive enumeration supports 1 <= n <= {ALL_GRAPHS_CAP}, got {n}"
        )));
    }
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            pairs.push((u, v));
        }
    }
    let nbits = pairs.len();
    let mut rows = [0u16; 16];
    let mut degs = [0i32; 16];
    let mut keys: BTreeSet<u128> = BTreeSet::new();
    // empty graph (mask 0)
    keys.insert(canon_key(n, rows));
    // Gray code: step k flips bit trailing_zeros(k)
    for k in 1u64..(1u64 << nbits) {
        let bit = k.trailing_zeros() as usize;
        let (u, v) = pairs[bit];
        rows[u] ^= 1 << v;
        rows[v] ^= 1 << u;
        let delta = if rows[u] >> v & 1 == 1 { 1 } else { -1 };
        degs[u] += delta;
        degs[v] += delta;
        // every class has a labeling with non-increasing degrees
        if (1..n).all(|i| degs[i - 1] >= degs[i]) {
            keys.insert(canon_key(n, rows));
        }
    }
    Ok(keys.into_iter().map(|key| key_to_graph(n, key)).collect())
}

/// Rebuilds a graph from its canonical upper-triangle key (row-major,
/// MSB-first as produced by the canonical search).
fn key_to_graph(n: usize, key: u128) -> Graph {
    let mut g = Graph::empty(n);
    let nbits = n * (n - 1) / 2;
    let mut idx = 0usize;
    for i in 0..n {
        for j in (i + 1)..n {
            if key >> (nbits - 1 - idx) & 1 == 1 {
                g.add_edge(i, j);
            }
            idx += 1;
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn turan_examples() {
        let t = turan(7, 2).unwrap();
        assert_eq!(t.base_sizes(), &[4, 3]);
        assert_eq!(t.graph().num_edges(), 12);
        let t = turan(6, 3).unwrap();
        assert_eq!(t.graph().num_edges(), 12);
        let t = turan(5, 5).unwrap();
        assert_eq!(t.graph().num_edges(), 10); // K_5
        assert!(turan(3, 4).is_err());
    }

    #[test]
    fn y_l_t_constructors() {
        let y = y_graph(7, 2, 2).unwrap();
        assert_eq!(y.graph().num_edges(), 14);
        assert_eq!(y.alpha1(), 2);
        let l = l_graph(6, 3, 1).unwrap();
        assert_eq!(l.graph().num_edges(), 13);
        // q=3 hosts a triangle
        let l3 = l_graph(8, 2, 3).unwrap();
        let shape = l3.embedded_shape(1);
        assert_eq!((shape.n(), shape.num_edges()), (3, 3));
        // q=2 hosts the star P_3
        let l2 = l_graph(8, 2, 2).unwrap();
        let shape = l2.embedded_shape(1);
        assert_eq!((shape.n(), shape.num_edges()), (3, 2));
        // L_{9,2,1}: edge goes in the 4-part (smallest)
        let l1 = l_graph(9, 2, 1).unwrap();
        assert_eq!(l1.embedded_shape(1).n(), 2);
        assert_eq!(l1.embedded_shape(0).n(), 0);
        let t = t_star_graph(9, 2, 3).unwrap();
        assert_eq!(t.embedded_shape(0).num_edges(), 3);
        assert!(y_graph(7, 2, 3).is_err()); // matching of 3 needs 6 > 4
    }

    #[test]
    fn t_star_equals_l_when_r_divides_n() {
        for q in [1usize, 2, 4, 5] {
            let a = t_star_graph(12, 2, q).unwrap();
            let b = l_graph(12, 2, q).unwrap();
            assert_eq!(a.descriptor().unwrap(), b.descriptor().unwrap(), "q = {q}");
        }
        // q = 3 differs: K_3 vs star
        let a = t_star_graph(12, 2, 3).unwrap();
        let b = l_graph(12, 2, 3).unwrap();
        assert_ne!(a.descriptor().unwrap(), b.descriptor().unwrap());
    }

    #[test]
    fn perturbed_bookkeeping() {
        let pg = perturbed_multipartite(&[4, 3], &[(0, 1)], &[]).unwrap();
        assert_eq!((pg.alpha1(), pg.alpha2()), (1, 0));
        assert_eq!(pg.graph().num_edges(), 13);
        let pg = perturbed_multipartite(&[4, 3], &[], &[(0, 4)]).unwrap();
        assert_eq!((pg.alpha1(), pg.alpha2()), (0, 1));
        assert_eq!(pg.graph().num_edges(), 11);
        // violations are named
        assert!(perturbed_multipartite(&[4, 3], &[(0, 4)], &[]).is_err());
        assert!(perturbed_multipartite(&[4, 3], &[], &[(0, 1)]).is_err());
        assert!(perturbed_multipartite(&[3, 4], &[], &[]).is_err());
    }

    #[test]
    fn classify_splits() {
        let t = turan(6, 3).unwrap();
        let (class, cross) = classify_edges(&t);
        assert!(class.is_empty());
        assert_eq!(cross.len(), 12);
        let y = y_graph(7, 2, 2).unwrap();
        let (class, cross) = classify_edges(&y);
        assert_eq!((class.len(), cross.len()), (2, 12));
    }

    #[test]
    fn shape_counts() {
        let expect = [1usize, 1, 2, 5, 11, 26, 68];
        for (m, &want) in expect.iter().enumerate() {
            assert_eq!(edge_graph_shapes(m).unwrap().len(), want, "m = {m}");
        }
    }

    #[test]
    fn family_class_counts() {
        assert_eq!(enumerate_family(7, 2, 1).unwrap().len(), 2);
        // spot examples from the battery scale, structural only
        assert_eq!(enumerate_family(12, 2, 2).unwrap().len(), 3);
        assert_eq!(enumerate_family(12, 3, 2).unwrap().len(), 3);
        assert!(enumerate_family(12, 2, 7).is_err());
    }

    #[test]
    fn family_members_include_named_graphs() {
        let members = enumerate_family(12, 2, 3).unwrap();
        let descs: Vec<_> = members.iter().map(|m| m.descriptor().unwrap()).collect();
        for named in [y_graph(12, 2, 3), l_graph(12, 2, 3), t_star_graph(12, 2, 3)] {
            let d = named.unwrap().descriptor().unwrap();
            assert_eq!(descs.iter().filter(|&x| *x == d).count(), 1);
        }
    }

    #[test]
    fn all_graphs_counts() {
        let expect = [1usize, 2, 4, 11, 34, 156];
        for (i, &want) in expect.iter().enumerate() {
            let n = i + 1;
            assert_eq!(enumerate_all_graphs(n).unwrap().len(), want, "n = {n}");
        }
        assert!(enumerate_all_graphs(9).is_err());
    }
}

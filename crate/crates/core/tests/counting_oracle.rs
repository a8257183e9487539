//! Copy-counting against an independent brute-force oracle.
//!
//! The oracle enumerates candidate vertex subsets and edge subsets and
//! recognizes copies by canonical code; it shares no code path with the
//! backtracking embedder it checks.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use specsat_core::canon::canonical_code;
use specsat_core::counting::{analyze_pattern, count_copies, count_copies_through_edge, Pattern};
use specsat_core::graph::Graph;

/// Brute force: all f-subsets S, all e(F)-subsets of E(G[S]) spanning S,
/// counted when isomorphic to F.
fn oracle_count(pattern: &Graph, host: &Graph) -> u64 {
    let f = pattern.n();
    let ef = pattern.num_edges();
    let pattern_code = canonical_code(pattern).unwrap();
    let n = host.n();
    let mut count = 0u64;
    let mut subset: Vec<usize> = Vec::new();
    fn rec(
        n: usize,
        f: usize,
        start: usize,
        subset: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]),
    ) {
        if subset.len() == f {
            visit(subset);
            return;
        }
        for v in start..n {
            subset.push(v);
            rec(n, f, v + 1, subset, visit);
            subset.pop();
        }
    }
    rec(n, f, 0, &mut subset, &mut |s: &[usize]| {
        let induced = host.induced(s);
        let edges: Vec<(usize, usize)> = induced.edges().collect();
        if edges.len() < ef {
            return;
        }
        // choose ef edges, require full support, compare canonically
        let mut pick: Vec<usize> = Vec::new();
        fn rec_edges(
            edges: &[(usize, usize)],
            ef: usize,
            start: usize,
            pick: &mut Vec<usize>,
            visit: &mut impl FnMut(&[usize]),
        ) {
            if pick.len() == ef {
                visit(pick);
                return;
            }
            for i in start..edges.len() {
                pick.push(i);
                rec_edges(edges, ef, i + 1, pick, visit);
                pick.pop();
            }
        }
        let f_local = s.len();
        rec_edges(&edges, ef, 0, &mut pick, &mut |p: &[usize]| {
            let chosen: Vec<(usize, usize)> = p.iter().map(|&i| edges[i]).collect();
            let mut covered = vec![false; f_local];
            for &(a, b) in &chosen {
                covered[a] = true;
                covered[b] = true;
            }
            if !covered.iter().all(|&c| c) {
                return;
            }
            let sub = Graph::from_edges(f_local, &chosen);
            if canonical_code(&sub).unwrap() == pattern_code {
                count += 1;
            }
        });
    });
    count
}

fn pattern_pool() -> Vec<(&'static str, Pattern)> {
    let pool: Vec<(&'static str, Graph)> = vec![
        ("K3", Graph::complete(3)),
        ("P4", Graph::path(4)),
        ("C4", Graph::cycle(4)),
        ("K13", Graph::star(3)),
        ("C5", Graph::cycle(5)),
        ("K4", Graph::complete(4)),
        ("paw", Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3)])),
        ("bull", Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)])),
    ];
    pool.into_iter().map(|(name, g)| (name, analyze_pattern(&g).unwrap())).collect()
}

fn random_host(rng: &mut StdRng) -> Graph {
    let n = rng.random_range(6..=10);
    let p = rng.random_range(0.25..0.75);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

#[test]
fn two_hundred_random_instances_match_oracle() {
    let mut rng = StdRng::seed_from_u64(20250810);
    let pool = pattern_pool();
    for trial in 0..200 {
        let host = random_host(&mut rng);
        let (name, pattern) = &pool[trial % pool.len()];
        let fast = count_copies(pattern, &host).unwrap();
        let slow = oracle_count(pattern.graph(), &host);
        assert_eq!(fast, slow, "trial {trial} pattern {name} host {host:?}");
    }
}

#[test]
fn edge_deletion_identity_on_random_battery() {
    let mut rng = StdRng::seed_from_u64(77001);
    let pool = pattern_pool();
    let mut tested = 0;
    while tested < 200 {
        let host = random_host(&mut rng);
        let edges: Vec<(usize, usize)> = host.edges().collect();
        if edges.is_empty() {
            continue;
        }
        let e = edges[rng.random_range(0..edges.len())];
        let (_, pattern) = &pool[tested % pool.len()];
        let with = count_copies(pattern, &host).unwrap();
        let mut removed = host.clone();
        removed.remove_edge(e.0, e.1);
        let without = count_copies(pattern, &removed).unwrap();
        let through = count_copies_through_edge(pattern, &host, e).unwrap();
        assert_eq!(with - without, through, "host {host:?} edge {e:?}");
        tested += 1;
    }
}

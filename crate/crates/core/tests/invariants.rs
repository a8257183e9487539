//! Property tests for the structural and spectral invariants.

use proptest::prelude::*;

use specsat_core::canon::canonical_code;
use specsat_core::graph::Graph;
use specsat_core::graph6::{emit_graph6, parse_graph6};
use specsat_core::spectral::{kelmans_rewire, spectral_radius};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let bits = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), bits).prop_map(move |mask| {
            let mut g = Graph::empty(n);
            let mut idx = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if mask[idx] {
                        g.add_edge(u, v);
                    }
                    idx += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph6_roundtrip_is_identity(g in arb_graph(40)) {
        let line = emit_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&line).unwrap(), g);
    }

    #[test]
    fn canonical_code_is_relabel_invariant(g in arb_graph(8), seed in any::<u64>()) {
        let n = g.n();
        let perm = {
            let mut p: Vec<usize> = (0..n).collect();
            let mut state = seed | 1;
            for i in (1..n).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let j = (state >> 33) as usize % (i + 1);
                p.swap(i, j);
            }
            p
        };
        prop_assert_eq!(
            canonical_code(&g).unwrap(),
            canonical_code(&g.relabel(&perm)).unwrap()
        );
    }

    #[test]
    fn rayleigh_quotient_lower_bounds_lambda(g in arb_graph(12), weights in proptest::collection::vec(1u32..1000, 12)) {
        prop_assume!(g.num_edges() > 0);
        let n = g.n();
        let y: Vec<f64> = (0..n).map(|v| weights[v] as f64).collect();
        let norm: f64 = y.iter().map(|v| v * v).sum::<f64>();
        let rayleigh: f64 = g.edges().map(|(u, v)| 2.0 * y[u] * y[v]).sum::<f64>() / norm;
        let r = spectral_radius(&g, 1e-10).unwrap();
        prop_assert!(rayleigh <= r.interval.1 + 1e-9, "rayleigh {} vs hi {}", rayleigh, r.interval.1);
    }

    #[test]
    fn adding_an_edge_strictly_increases_lambda(g in arb_graph(10)) {
        prop_assume!(g.is_connected() && g.n() >= 2);
        let n = g.n();
        let missing: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        prop_assume!(!missing.is_empty());
        let (u, v) = missing[0];
        let mut bigger = g.clone();
        bigger.add_edge(u, v);
        let before = spectral_radius(&g, 1e-11).unwrap();
        let after = spectral_radius(&bigger, 1e-11).unwrap();
        prop_assert!(after.interval.0 > before.interval.1,
            "no certified increase: {:?} vs {:?}", before.interval, after.interval);
    }

    #[test]
    fn kelmans_rewire_does_not_decrease_lambda(g in arb_graph(9), pick in any::<(u8, u8)>()) {
        prop_assume!(g.is_connected() && g.n() >= 3);
        let n = g.n();
        let (u, v) = ((pick.0 as usize) % n, (pick.1 as usize) % n);
        prop_assume!(u != v);
        let r = spectral_radius(&g, 1e-11).unwrap();
        // orient the rewiring toward the larger Perron entry
        let (u, v) = if r.perron[u] >= r.perron[v] { (u, v) } else { (v, u) };
        let moved = kelmans_rewire(&g, u, v).unwrap();
        if moved == g {
            return Ok(());
        }
        let r2 = spectral_radius(&moved, 1e-11).unwrap();
        // x_u >= x_v guarantees a strict increase
        prop_assert!(r2.interval.1 > r.interval.0,
            "lambda decreased: {:?} -> {:?}", r.interval, r2.interval);
    }
}

#[test]
fn degree_square_bound_over_all_small_graphs() {
    // Every 5-vertex labeled graph satisfies the degree-square inequality.
    for mask in 0u32..(1 << 10) {
        let mut g = Graph::empty(5);
        let mut idx = 0;
        for u in 0..5 {
            for v in (u + 1)..5 {
                if mask >> idx & 1 == 1 {
                    g.add_edge(u, v);
                }
                idx += 1;
            }
        }
        let (_, _, sq) = g.degree_stats();
        let m = g.num_edges() as u64;
        assert!(sq <= m * m + m);
    }
}

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use totdist_core::clique::{clique_number, greedy_degree_clique};
use totdist_core::metrics::{
    all_pairs, digraph_eccentricities, digraph_radii, graph_metrics, is_connected,
    is_strongly_connected, radius_diameter, wiener, wiener_digraph,
};
use totdist_core::{Digraph, Graph, Wiener};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::new(n).unwrap();
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

// Dense enough that a fair share is connected.
fn connected_leaning(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, any::<u64>()).prop_map(|(n, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut g = Graph::new(n).unwrap();
        for v in 1..n {
            let u = rand::Rng::gen_range(&mut rng, 0..v);
            g.add_edge(u, v).unwrap();
        }
        for v in 0..n {
            for u in 0..v {
                if rand::Rng::gen_bool(&mut rng, 0.15) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    })
}

fn digraph_strategy(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n, 0.1f64..0.7, any::<u64>()).prop_map(|(n, p, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut d = Digraph::new(n).unwrap();
        for u in 0..n {
            for v in 0..n {
                if u != v && rand::Rng::gen_bool(&mut rng, p) {
                    d.add_arc(u, v).unwrap();
                }
            }
        }
        d
    })
}

fn shuffled(n: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

fn sorted<T: Ord + Clone>(v: &[T]) -> Vec<T> {
    let mut v = v.to_vec();
    v.sort();
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn wiener_is_the_matrix_sum(g in graph_strategy(11)) {
        let m = all_pairs(&g);
        let n = g.order();
        let mut sum = 0u64;
        let mut finite = true;
        for u in 0..n {
            prop_assert_eq!(m.get(u, u), Some(0));
            for v in 0..n {
                prop_assert_eq!(m.get(u, v), m.get(v, u));
                match m.get(u, v) {
                    Some(d) if u < v => sum += u64::from(d),
                    None => finite = false,
                    _ => {}
                }
            }
        }
        let expected = if finite { Wiener::Finite(sum) } else { Wiener::Infinite };
        prop_assert_eq!(wiener(&g), expected);
        prop_assert_eq!(wiener(&g).is_finite(), is_connected(&g));
    }

    #[test]
    fn triangle_inequality(d in digraph_strategy(9)) {
        let m = all_pairs(&d);
        let n = d.order();
        for u in 0..n {
            for v in 0..n {
                for w in 0..n {
                    if let (Some(a), Some(b), Some(c)) = (m.get(u, w), m.get(u, v), m.get(v, w)) {
                        prop_assert!(a <= b + c);
                    }
                }
            }
        }
    }

    #[test]
    fn radius_diameter_sandwich(g in connected_leaning(12)) {
        let (r, d) = radius_diameter(&g);
        if is_connected(&g) {
            let (r, d) = (r.unwrap(), d.unwrap());
            prop_assert!(r <= d && d <= 2 * r);
        } else {
            prop_assert_eq!((r, d), (None, None));
        }
    }

    #[test]
    fn doubled_radius_definition(d in digraph_strategy(9)) {
        let ecc = digraph_eccentricities(&d);
        let by_hand = ecc
            .out
            .iter()
            .zip(&ecc.inward)
            .map(|(a, b)| Some((*a)? + (*b)?))
            .collect::<Option<Vec<u32>>>()
            .map(|v| v.into_iter().min().unwrap());
        prop_assert_eq!(digraph_radii(&d).doubled_radius, by_hand);
        prop_assert_eq!(wiener_digraph(&d).is_finite(), is_strongly_connected(&d));
        prop_assert_eq!(by_hand.is_some(), is_strongly_connected(&d));
    }

    #[test]
    fn graph_metrics_survive_relabelling(g in connected_leaning(10), seed in any::<u64>()) {
        let base = graph_metrics(&g);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..100 {
            let p = shuffled(g.order(), &mut rng);
            let h = graph_metrics(&g.relabel(&p).unwrap());
            prop_assert_eq!(h.wiener, base.wiener);
            prop_assert_eq!((h.radius, h.diameter), (base.radius, base.diameter));
            prop_assert_eq!(sorted(&h.eccentricities), sorted(&base.eccentricities));
        }
    }

    #[test]
    fn digraph_metrics_survive_relabelling(d in digraph_strategy(8), seed in any::<u64>()) {
        let w = wiener_digraph(&d);
        let radii = digraph_radii(&d);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..100 {
            let p = shuffled(d.order(), &mut rng);
            let e = d.relabel(&p).unwrap();
            prop_assert_eq!(wiener_digraph(&e), w);
            prop_assert_eq!(digraph_radii(&e), radii);
        }
    }

    #[test]
    fn greedy_clique_guarantee(g in graph_strategy(12), min_degree in 0usize..12) {
        let n = g.order();
        let t = greedy_degree_clique(&g, min_degree);
        prop_assert!(g.is_clique(&t));
        prop_assert!(t.iter().all(|&v| g.degree(v) >= min_degree));
        prop_assert!(t.len() <= clique_number(&g).unwrap());
        let s = (0..n).filter(|&v| g.degree(v) >= min_degree).count();
        if min_degree < n {
            prop_assert!(t.len() >= s.div_ceil(n - min_degree));
        }
        if s == 0 {
            prop_assert!(t.is_empty());
        }
    }
}

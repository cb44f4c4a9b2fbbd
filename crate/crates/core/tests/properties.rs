use std::collections::BTreeMap;

use binedge::admissible::{groebner_basis, has_shortcut_subsequence, is_admissible};
use binedge::betti::verify_tree_basis_size;
use binedge::buchberger::oracle_matches;
use binedge::caterpillar::{two_phase_labeling, decompose, label_one_at, sweep_labeling, Variant};
use binedge::closedness::{is_weakly_closed_labeling, m_of_labeling};
use binedge::corpus::{random_caterpillar, random_labeling, random_tree, rng};
use binedge::primes::{generator_membership, minimal_primes};
use binedge::Graph;
use proptest::prelude::*;
use rand::Rng;

/// A connected graph: a random tree plus random extra edges.
fn connected(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>(), 0usize..8).prop_map(|(n, seed, extra)| {
        let mut r = rng(seed);
        let t = random_tree(n, &mut r);
        let mut edges = t.edges().to_vec();
        if n >= 3 {
            for _ in 0..extra {
                let (u, v) = (r.gen_range(1..=n), r.gen_range(1..=n));
                if u != v && !edges.contains(&(u.min(v), u.max(v))) {
                    edges.push((u.min(v), u.max(v)));
                }
            }
        }
        Graph::new(n, &edges).unwrap()
    })
}

fn caterpillar(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, any::<u64>()).prop_map(|(n, seed)| random_caterpillar(n, &mut rng(seed)))
}

/// Simple paths of `g` starting at `v`, up to `max_len` vertices.
fn paths_from(g: &Graph, v: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack = vec![vec![v]];
    while let Some(p) = stack.pop() {
        if p.len() >= 2 {
            out.push(p.clone());
        }
        if p.len() == max_len {
            continue;
        }
        for &w in g.neighbors(*p.last().unwrap()) {
            if !p.contains(&w) {
                let mut q = p.clone();
                q.push(w);
                stack.push(q);
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn distances_form_a_metric(g in connected(9)) {
        let d = g.distance_table();
        for u in g.vertices() {
            prop_assert_eq!(d[u][u], Some(0));
            for v in g.vertices() {
                prop_assert_eq!(d[u][v], d[v][u]);
                for w in g.vertices() {
                    prop_assert!(d[u][w].unwrap() <= d[u][v].unwrap() + d[v][w].unwrap());
                }
            }
        }
    }

    #[test]
    fn components_partition_the_rest(g in connected(9), mask in any::<u16>()) {
        let removed: Vec<usize> = g.vertices().filter(|v| mask >> (v - 1) & 1 == 1).collect();
        let comps = g.components_without(&removed);
        let total: usize = comps.iter().map(Vec::len).sum();
        prop_assert_eq!(total + removed.len(), g.n());
    }

    #[test]
    fn tree_bridges_are_all_edges(n in 1usize..20, seed in any::<u64>()) {
        let t = random_tree(n, &mut rng(seed));
        prop_assert_eq!(t.bridges(), t.edges().to_vec());
        prop_assert!(t.is_tree());
    }

    #[test]
    fn star_transform_round_trips(g in connected(9)) {
        let s = g.star_transform();
        prop_assert_eq!(s.edge_count(), g.edge_count());
        prop_assert_eq!(s.unstar(), g);
    }

    #[test]
    fn square_contains_the_graph(g in connected(9)) {
        let sq = g.square();
        for &(u, v) in g.edges() {
            prop_assert!(sq.has_edge(u, v));
        }
        for &(u, v) in sq.edges() {
            prop_assert!(g.distance(u, v).unwrap().unwrap() <= 2);
        }
    }

    #[test]
    fn chords_are_shortcuts(g in connected(7)) {
        for v in g.vertices() {
            for p in paths_from(&g, v, 6) {
                let chord = (0..p.len()).any(|a| (a + 2..p.len()).any(|b| g.has_edge(p[a], p[b])));
                prop_assert_eq!(chord, has_shortcut_subsequence(&g, &p));
            }
        }
    }

    #[test]
    fn basis_elements_are_admissible(g in connected(8)) {
        for e in groebner_basis(&g) {
            prop_assert!(is_admissible(&g, &e.path).unwrap());
            prop_assert_eq!(e.degree(), e.path.len());
        }
    }

    #[test]
    fn basis_ignores_adjacency_order(g in connected(8), seed in any::<u64>()) {
        let mut r = rng(seed);
        let mut order = BTreeMap::new();
        for v in g.vertices() {
            let mut nb = g.neighbors(v).to_vec();
            rand::seq::SliceRandom::shuffle(nb.as_mut_slice(), &mut r);
            order.insert(v, nb);
        }
        let h = Graph::with_adjacency_order(g.n(), g.edges(), &order).unwrap();
        prop_assert_eq!(groebner_basis(&g), groebner_basis(&h));
    }

    #[test]
    fn oracle_agrees_on_small_graphs(g in connected(5), seed in any::<u64>()) {
        let h = g.relabel(&random_labeling(g.n(), &mut rng(seed))).unwrap();
        prop_assert!(oracle_matches(&h, 5).unwrap());
    }

    #[test]
    fn caterpillar_labelings_keep_labels_close(t in caterpillar(30), pick in any::<u64>()) {
        let n = t.n();
        let v = (pick % n as u64) as usize + 1;
        let dec = decompose(&t).unwrap();
        let lab = label_one_at(&t, v).unwrap();
        prop_assert_eq!(lab.label(v), 1);
        prop_assert!(t.relabel(&lab).unwrap().consecutive_labels_within_two());
        let lab = two_phase_labeling(&t, v, Variant::AssignN).unwrap();
        prop_assert_eq!(lab.label(v), n);
        prop_assert!(t.relabel(&lab).unwrap().consecutive_labels_within_two());
        if dec.position(v).is_some() {
            let lab = two_phase_labeling(&t, v, Variant::PathStart).unwrap();
            prop_assert!(t.relabel(&lab).unwrap().consecutive_labels_within_two());
        }
        let sweep = t.relabel(&sweep_labeling(&t).unwrap()).unwrap();
        prop_assert!(sweep.consecutive_labels_within_two());
        prop_assert!(is_weakly_closed_labeling(&sweep));
    }

    #[test]
    fn caterpillar_basis_size_matches_beta13(t in caterpillar(16), pick in any::<u64>()) {
        let v = (pick % t.n() as u64) as usize + 1;
        let h = t.relabel(&label_one_at(&t, v).unwrap()).unwrap();
        let r = verify_tree_basis_size(&h).unwrap();
        prop_assert!(r.equal, "{} != {}", r.lhs, r.rhs);
        prop_assert!(m_of_labeling(&h).unwrap() <= 3);
    }

    #[test]
    fn minimal_primes_are_minimal(g in connected(10)) {
        for pc in minimal_primes(&g, 20).unwrap() {
            prop_assert!(generator_membership(&g, &pc));
            let c = pc.components.len();
            for &i in &pc.s {
                let rest: Vec<usize> = pc.s.iter().copied().filter(|&v| v != i).collect();
                prop_assert!(g.components_without(&rest).len() < c);
            }
        }
    }
}

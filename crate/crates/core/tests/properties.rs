//! Property tests over randomly generated small graphs.

use proptest::prelude::*;

use distbal::atlas::canonical_form;
use distbal::balance::{distance_partition, edge_counts, vertex_counts, Convention};
use distbal::distance::all_pairs_distances;
use distbal::graph::Graph;
use distbal::product::{cartesian_product, lexicographic_product};
use distbal::{parse_graph6, to_graph6};

/// A random simple graph on 1..=8 vertices from a random edge mask.
fn small_graph() -> impl Strategy<Value = Graph> {
    (1usize..=8)
        .prop_flat_map(|n| {
            let m = n * (n - 1) / 2;
            (Just(n), 0u32..(1u32 << m))
        })
        .prop_map(|(n, mask)| {
            let mut pairs = Vec::new();
            let mut bit = 0;
            for j in 1..n {
                for i in 0..j {
                    if mask & (1 << bit) != 0 {
                        pairs.push((i, j));
                    }
                    bit += 1;
                }
            }
            Graph::from_edge_list(n, &pairs).unwrap()
        })
}

fn connected_graph() -> impl Strategy<Value = Graph> {
    small_graph().prop_filter("connected", Graph::is_connected)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, ..ProptestConfig::default() })]

    #[test]
    fn graph6_round_trip(g in small_graph()) {
        let line = to_graph6(&g);
        let back = parse_graph6(&line).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(to_graph6(&back), line);
    }

    #[test]
    fn product_edge_counts((a, b) in (small_graph(), small_graph())) {
        let c = cartesian_product(&a, &b).unwrap();
        prop_assert_eq!(
            c.edge_count(),
            a.vertex_count() * b.edge_count() + b.vertex_count() * a.edge_count()
        );
        let l = lexicographic_product(&a, &b).unwrap();
        prop_assert_eq!(
            l.edge_count(),
            a.edge_count() * b.vertex_count() * b.vertex_count()
                + a.vertex_count() * b.edge_count()
        );
        prop_assert_eq!(c.is_connected(), a.is_connected() && b.is_connected());
    }

    #[test]
    fn distance_matrix_shape(g in connected_graph()) {
        let d = all_pairs_distances(&g);
        let n = g.vertex_count();
        for u in 0..n {
            prop_assert_eq!(d.get(u, u), 0);
            for v in 0..n {
                prop_assert_eq!(d.get(u, v), d.get(v, u));
                prop_assert_eq!(d.get(u, v) == 1, g.has_edge(u, v));
                for w in 0..n {
                    prop_assert!(d.get(u, v) <= d.get(u, w) + d.get(w, v));
                }
            }
        }
    }

    #[test]
    fn endpoint_edge_distances_differ_by_at_most_one(g in connected_graph()) {
        let d = all_pairs_distances(&g);
        for f in g.edges() {
            for e in g.edges() {
                let da = d.vertex_edge_distance(f.u(), *e) as i64;
                let db = d.vertex_edge_distance(f.v(), *e) as i64;
                prop_assert!((da - db).abs() <= 1);
                let ee = d.edge_edge_distance(*f, *e);
                prop_assert_eq!(ee, d.edge_edge_distance(*e, *f));
                prop_assert!(ee as i64 <= da.min(db));
            }
        }
    }

    #[test]
    fn strict_accounting_and_partition_agree(g in connected_graph()) {
        let d = all_pairs_distances(&g);
        for e in g.edges() {
            let (na, nb, nz) = vertex_counts(&g, &d, e.u(), e.v()).unwrap();
            prop_assert_eq!(na + nb + nz, g.vertex_count());
            prop_assert!(na >= 1 && nb >= 1);
            if g.is_bipartite() {
                prop_assert_eq!(nz, 0);
            }

            let (ma, mb, mz) = edge_counts(&g, &d, e.u(), e.v(), Convention::Strict).unwrap();
            prop_assert_eq!(ma + mb + mz, g.edge_count() - 1);
            let (ra, rb, rz) = edge_counts(&g, &d, e.v(), e.u(), Convention::Strict).unwrap();
            prop_assert_eq!((ra, rb, rz), (mb, ma, mz));
            let (aa, ab, az) = edge_counts(&g, &d, e.u(), e.v(), Convention::Augmented).unwrap();
            prop_assert_eq!((aa, ab, az), (ma + 1, mb + 1, mz));

            let p = distance_partition(&g, &d, e.u(), e.v()).unwrap();
            prop_assert_eq!(p.side_sums(), (ma, mb, mz));
            for (&(i, j), cell) in p.cells() {
                prop_assert!((i as i32 - j as i32).abs() <= 1);
                prop_assert!(!cell.is_empty());
            }
            prop_assert_eq!(p.cell_size(0, 0), 0);
        }
    }

    #[test]
    fn canonical_form_ignores_labels((g, seed) in (small_graph(), any::<u64>())) {
        let n = g.vertex_count();
        // A cheap deterministic shuffle of 0..n.
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        let h = g.relabel(&perm);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        prop_assert!(distbal::are_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn report_value_sets_are_consistent(g in connected_graph()) {
        for conv in [Convention::Strict, Convention::Augmented] {
            let r = distbal::full_report(&g, conv).unwrap();
            prop_assert_eq!(r.db, r.gt_db_values.contains(1));
            if let Some(w) = r.gt_nedb {
                prop_assert!(r.gt_edb_values.contains(w.t), "nicely t outside value set");
            }
            if let Some(w) = r.gt_ndb {
                prop_assert!(r.gt_db_values.contains(w.t));
            }
        }
    }

    #[test]
    fn indices_are_isomorphism_invariant(g in connected_graph()) {
        let n = g.vertex_count();
        let perm: Vec<usize> = (0..n).map(|i| (i + n / 2) % n).collect();
        let h = g.relabel(&perm);
        prop_assert_eq!(distbal::szeged_index(&g).unwrap(), distbal::szeged_index(&h).unwrap());
        for conv in [Convention::Strict, Convention::Augmented] {
            prop_assert_eq!(
                distbal::edge_szeged_index(&g, conv).unwrap(),
                distbal::edge_szeged_index(&h, conv).unwrap()
            );
        }
    }
}

/// Isomorphism behaves as an equivalence relation on a fixed mixed corpus.
#[test]
fn isomorphism_is_an_equivalence_relation() {
    use distbal::generate::{complete, complete_bipartite, cycle, path};
    let corpus = [
        path(4).unwrap(),
        cycle(4).unwrap(),
        cycle(5).unwrap(),
        complete(4).unwrap(),
        complete_bipartite(2, 2).unwrap(),
        complete_bipartite(1, 3).unwrap(),
        path(4).unwrap().relabel(&[2, 0, 3, 1]),
    ];
    for (i, a) in corpus.iter().enumerate() {
        assert!(distbal::are_isomorphic(a, a).unwrap());
        for (j, b) in corpus.iter().enumerate() {
            let ab = distbal::are_isomorphic(a, b).unwrap();
            let ba = distbal::are_isomorphic(b, a).unwrap();
            assert_eq!(ab, ba, "symmetry broke at ({i}, {j})");
            for c in &corpus {
                let bc = distbal::are_isomorphic(b, c).unwrap();
                let ac = distbal::are_isomorphic(a, c).unwrap();
                if ab && bc {
                    assert!(ac, "transitivity broke");
                }
            }
        }
    }
    // C_4 and K[2,2] are the same class; the relabeled path joins path(4).
    assert!(distbal::are_isomorphic(&corpus[1], &corpus[4]).unwrap());
    assert!(distbal::are_isomorphic(&corpus[0], &corpus[6]).unwrap());
}

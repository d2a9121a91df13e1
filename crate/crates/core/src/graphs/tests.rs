use super::*;
use crate::partitions::{cor, Partition};
use crate::rational::ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
    let e: Vec<_> = edges.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
    Graph::from_edges(n, &e).unwrap()
}

fn cycle(n: usize) -> Graph {
    let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &e).unwrap()
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Graph {
    let mut gr = Graph::empty(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                gr.add_edge(u, v);
            }
        }
    }
    gr
}

/// Oracle: every proper cut, counted pair by pair.
fn cut_minimal_naive(gr: &Graph) -> bool {
    let n = gr.n();
    (1..(1u64 << n) - 1).all(|s| {
        let (mut e, mut ne) = (0, 0);
        for u in (0..n).filter(|&u| s >> u & 1 == 1) {
            for v in (0..n).filter(|&v| s >> v & 1 == 0) {
                if gr.has_edge(u, v) {
                    e += 1
                } else {
                    ne += 1
                }
            }
        }
        e <= ne
    })
}

/// Oracle: the τ-weight definition evaluated term by term in rationals.
fn h_naive(gr: &Graph) -> Rational {
    let mut sum = Rational::ZERO;
    for (v, w) in gr.edges() {
        for u in (0..gr.n()).filter(|&u| u != v && u != w) {
            let tau = match (gr.has_edge(v, u), gr.has_edge(w, u)) {
                (false, false) => Rational::ONE,
                (true, true) => ratio(1, 3),
                _ => Rational::ZERO,
            };
            sum = sum.checked_add(tau).unwrap();
        }
    }
    sum.checked_div(Rational::from_int(gr.edge_count() as i128)).unwrap()
}

#[test]
fn pair_index_is_colex() {
    assert_eq!(pair_index(0, 1), 0);
    assert_eq!(pair_index(0, 2), 1);
    assert_eq!(pair_index(2, 1), 2);
    assert_eq!(pair_index(0, 3), 3);
    for idx in 0..2016 {
        let (i, j) = pair_from_index(idx);
        assert!(i < j);
        assert_eq!(pair_index(i, j), idx);
    }
}

#[test]
fn edge_count_is_half_popcount() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..50 {
        let gr = random_graph(&mut rng, 20, 0.3);
        assert_eq!(gr.edge_count(), gr.edges().count());
        assert!(gr.edges().all(|(u, v)| gr.has_edge(v, u) && u != v));
    }
    assert!(Graph::empty(65).is_err());
    assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
    assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
}

#[test]
fn staircase_examples() {
    let gr = staircase(9, &p("3,3,2,2,2,1")).unwrap();
    assert_eq!(gr.n(), 9);
    assert_eq!(gr.edge_count(), 13);
    let gr = staircase(3, &p("1")).unwrap();
    assert_eq!(gr.edge_count(), 1);
    assert_eq!(gr.isolated_vertices().count_ones(), 1);
    assert!(staircase(8, &p("3,3,2,2,2,1")).is_err());
}

#[test]
fn staircase_of_conjugate_is_isomorphic() {
    for l in Partition::all_up_to(8) {
        let n = l.box_size() + 1;
        if n > MAX_CANONICAL_VERTICES {
            continue;
        }
        let a = canonical_form(&staircase(n, &l).unwrap()).unwrap();
        let b = canonical_form(&staircase(n, &l.conjugate()).unwrap()).unwrap();
        assert_eq!(a, b, "{l:?}");
    }
}

#[test]
fn cut_counts() {
    let k22 = g(4, &[(1, 3), (1, 4), (2, 3), (2, 4)]);
    assert_eq!(k22.edges_across(0b0011), 4);
    assert_eq!(k22.non_edges_across(0b0011), 0);
    assert_eq!((k22.edges_across(0), k22.non_edges_across(0)), (0, 0));
    // w_1 is vertex 4 (after v_1..v_3)
    let st = staircase(8, &p("3,3,1")).unwrap();
    assert_eq!(st.edges_across(1 << 3), 3);
    assert_eq!(st.non_edges_across(1 << 3), 4);
    let r = st.cut_report(1 << 3);
    assert_eq!(r.cut_set, vec![4]);
    assert_eq!(r.edges_across + r.non_edges_across, 7);
    assert!(!r.perfect);
}

#[test]
fn cut_minimality_examples() {
    let two_edges = g(4, &[(1, 2), (3, 4)]);
    assert!(two_edges.is_cut_minimal().unwrap().is_ok());
    let k22 = g(4, &[(1, 3), (1, 4), (2, 3), (2, 4)]);
    match k22.is_cut_minimal().unwrap() {
        CutVerdict::Violated(w) => {
            assert_eq!(w.cut_set, vec![1]);
            assert_eq!((w.edges_across, w.non_edges_across), (2, 1));
        }
        CutVerdict::Ok => panic!("K_2,2 is not cut-minimal"),
    }
    assert!(Graph::empty(33).unwrap().is_cut_minimal().is_err());
}

#[test]
fn staircases_at_n_min_are_cut_minimal() {
    for l in Partition::all_up_to(12) {
        let gr = staircase(l.n_min(), &l).unwrap();
        assert!(gr.is_cut_minimal().unwrap().is_ok(), "{l:?}");
    }
}

#[test]
fn cut_scan_matches_naive_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..400 {
        let n = rng.gen_range(2..=9);
        let d = rng.gen_range(0.1..0.6);
        let gr = random_graph(&mut rng, n, d);
        assert_eq!(gr.is_cut_minimal().unwrap().is_ok(), cut_minimal_naive(&gr), "{gr:?}");
    }
}

#[test]
fn witness_is_smallest_violating_side() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let n = rng.gen_range(3..=8);
        let gr = random_graph(&mut rng, n, 0.6);
        if let CutVerdict::Violated(w) = gr.is_cut_minimal().unwrap() {
            let mask = w.cut_set.iter().fold(0u64, |m, &v| m | 1 << (v - 1));
            assert!(2 * w.edges_across > w.cut_set.len() * (n - w.cut_set.len()));
            // nothing strictly smaller violates
            let best = (1..(1u64 << n) - 1)
                .filter(|&s| {
                    let k = s.count_ones() as usize;
                    2 * gr.edges_across(s) > k * (n - k)
                })
                .map(|s| (s.count_ones(), s))
                .min()
                .unwrap();
            assert_eq!(best, (mask.count_ones(), mask));
        }
    }
}

#[test]
fn large_cut_scan_uses_chunks_consistently() {
    // 20+ vertices take the chunked path
    let l = p("5,4,3,2,1").blowup(2).unwrap();
    let gr = staircase(l.n_min(), &l).unwrap();
    assert_eq!(gr.n(), 22);
    assert!(gr.is_cut_minimal().unwrap().is_ok());
    let mut bad = gr.clone();
    // v_1 already meets every w; one more neighbor pushes its valency past 10
    bad.add_edge(0, 20);
    match bad.is_cut_minimal().unwrap() {
        CutVerdict::Violated(w) => assert_eq!(w.cut_set, vec![1]),
        CutVerdict::Ok => panic!("valency 11 on 22 vertices"),
    }
}

#[test]
fn h_examples() {
    assert_eq!(g(3, &[(1, 2)]).h().unwrap(), Rational::ONE);
    assert_eq!(g(4, &[(1, 2), (3, 4)]).h().unwrap(), Rational::from_int(2));
    assert_eq!(Graph::empty(4).unwrap().h(), Err(Error::Edgeless));
    for l in Partition::all_up_to(12) {
        let gr = staircase(l.n_min(), &l).unwrap();
        assert_eq!(gr.h().unwrap(), l.h(), "{l:?}");
    }
}

#[test]
fn odd_triangle_examples() {
    let k3 = g(3, &[(1, 2), (1, 3), (2, 3)]);
    assert_eq!(k3.count_odd_triangles(), 1);
    assert_eq!(k3.h().unwrap(), ratio(1, 3));
    for n in 3..10 {
        assert_eq!(g(n, &[(1, 2)]).count_odd_triangles(), n as u64 - 2);
    }
    assert_eq!(Graph::empty(6).unwrap().count_odd_triangles(), 0);
}

#[test]
fn tau_sum_equals_odd_triangles_exhaustive() {
    for n in 3..=6 {
        let pairs = n * (n - 1) / 2;
        for mask in 1..(1u64 << pairs) {
            let gr = Graph::from_pair_mask(n, mask).unwrap();
            let (ones, threes) = gr.tau_counts();
            assert_eq!(threes % 3, 0);
            assert_eq!(ones + threes / 3, gr.count_odd_triangles());
            assert_eq!(gr.h_by_tau(), gr.h_by_odd_triangles());
        }
    }
}

#[test]
fn h_routes_agree_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..10_000 {
        let n = rng.gen_range(3..=16);
        let d = rng.gen_range(0.05..0.9);
        let gr = random_graph(&mut rng, n, d);
        if gr.edge_count() == 0 {
            continue;
        }
        assert_eq!(gr.h_by_tau().unwrap(), gr.h_by_odd_triangles().unwrap());
    }
    for _ in 0..300 {
        let n = rng.gen_range(3..=9);
        let gr = random_graph(&mut rng, n, 0.4);
        if gr.edge_count() > 0 {
            assert_eq!(gr.h().unwrap(), h_naive(&gr));
        }
    }
}

#[test]
fn blowup_examples() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let l: Partition = {
            let m = rng.gen_range(1..=8);
            let all: Vec<_> = Partition::all_of(m).collect();
            all[rng.gen_range(0..all.len())].clone()
        };
        let n = l.box_size() + rng.gen_range(0..3);
        let c = rng.gen_range(1..=3);
        if n * c > 64 {
            continue;
        }
        let lhs = staircase(n, &l).unwrap().blowup(c).unwrap();
        let rhs = staircase(c * n, &l.blowup(c).unwrap()).unwrap();
        assert_eq!(lhs, rhs, "{l:?} c={c}");
    }
    for _ in 0..200 {
        let n = rng.gen_range(3..=8);
        let gr = random_graph(&mut rng, n, 0.4);
        let c = rng.gen_range(1..=4);
        if gr.edge_count() == 0 {
            continue;
        }
        let b = gr.blowup(c).unwrap();
        assert_eq!(b.edge_count(), c * c * gr.edge_count());
        assert_eq!(b.h().unwrap(), gr.h().unwrap().checked_mul_int(c as i128).unwrap());
    }
    assert!(Graph::empty(33).unwrap().blowup(2).is_err());
    assert!(Graph::empty(3).unwrap().blowup(0).is_err());
}

#[test]
fn blowup_preserves_cut_minimality() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut checked = 0;
    while checked < 100 {
        let n = rng.gen_range(3..=8);
        let gr = random_graph(&mut rng, n, 0.25);
        if !gr.is_cut_minimal().unwrap().is_ok() {
            continue;
        }
        let c = rng.gen_range(2..=3);
        assert!(gr.blowup(c).unwrap().is_cut_minimal().unwrap().is_ok(), "{gr:?}");
        checked += 1;
    }
}

#[test]
fn edge_deletion_preserves_cut_minimality() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for l in Partition::all_up_to(9) {
        let mut gr = staircase(l.n_min(), &l).unwrap();
        while gr.edge_count() > 0 {
            let edges: Vec<_> = gr.edges().collect();
            let (u, v) = edges[rng.gen_range(0..edges.len())];
            gr.remove_edge(u, v);
            assert!(gr.is_cut_minimal().unwrap().is_ok());
        }
    }
}

#[test]
fn mw_certificate_examples() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..500 {
        let n = rng.gen_range(3..=7);
        let gr = random_graph(&mut rng, n, 0.4);
        let cert = mw_certificate(&gr);
        assert_eq!(cert.m_total as u64, 3 * gr.count_odd_triangles());
        if gr.is_cut_minimal().unwrap().is_ok() {
            assert!(cert.min_m_v() >= gr.edge_count());
        }
    }
    for t in 1..=5 {
        let gr = staircase(2 * t + 1, &cor(t).unwrap()).unwrap();
        assert!(mw_certificate(&gr).sharp, "t={t}");
    }
    // isolated vertex sees every edge
    let gr = g(5, &[(1, 2), (3, 4)]);
    assert_eq!(mw_certificate(&gr).m_v[4], 2);
}

#[test]
fn predicates() {
    let k3 = g(3, &[(1, 2), (1, 3), (2, 3)]);
    assert_eq!((k3.is_triangle_free(), k3.is_bipartite()), (false, false));
    let st = staircase(9, &p("3,3,2,2,2,1")).unwrap();
    assert_eq!((st.is_triangle_free(), st.is_bipartite()), (true, true));
    let c5 = cycle(5);
    assert_eq!((c5.is_triangle_free(), c5.is_bipartite()), (true, false));
    assert!(cycle(6).is_bipartite());
    let two = g(7, &[(1, 2), (2, 3), (3, 1), (5, 6)]);
    assert!(!two.is_bipartite());
}

#[test]
fn recognize_examples() {
    let st = staircase(9, &p("3,3,2,2,2,1")).unwrap();
    assert_eq!(staircase_recognize(&st), Some(p("6,5,2")));
    assert_eq!(staircase_recognize(&cycle(6)), None);
    assert_eq!(staircase_recognize(&g(4, &[(1, 2), (3, 4)])), None);
    assert_eq!(staircase_recognize(&Graph::empty(4).unwrap()), None);
    // relabeled staircases are still recognized
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for l in Partition::all_up_to(10) {
        let n = l.box_size() + 2;
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let gr = staircase(n, &l).unwrap().permute(&perm);
        let got = staircase_recognize(&gr).unwrap();
        assert!(got == l || got == l.conjugate());
        assert!(got.parts() >= l.conjugate().parts() && got.parts() >= l.parts());
    }
}

#[test]
fn canonical_form_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..300 {
        let n = rng.gen_range(1..=10);
        let d = rng.gen_range(0.1..0.9);
        let gr = random_graph(&mut rng, n, d);
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let a = canonical_form(&gr).unwrap();
        assert_eq!(a, canonical_form(&gr.permute(&perm)).unwrap());
        assert_eq!(canonical_form(&a.graph()).unwrap(), a);
        assert_eq!(a.graph().edge_count(), gr.edge_count());
    }
    let c4 = cycle(4);
    let two = g(4, &[(1, 2), (3, 4)]);
    assert_ne!(canonical_form(&c4).unwrap(), canonical_form(&two).unwrap());
    assert!(canonical_form(&Graph::empty(11).unwrap()).is_err());
}

#[test]
fn canonical_form_separates_all_classes_n5() {
    // 34 isomorphism classes of graphs on 5 vertices
    let mut forms = std::collections::BTreeSet::new();
    for mask in 0..(1u64 << 10) {
        forms.insert(canonical_form(&Graph::from_pair_mask(5, mask).unwrap()).unwrap());
    }
    assert_eq!(forms.len(), 34);
    let mut forms6 = std::collections::BTreeSet::new();
    for mask in 0..(1u64 << 15) {
        forms6.insert(canonical_form(&Graph::from_pair_mask(6, mask).unwrap()).unwrap());
    }
    assert_eq!(forms6.len(), 156);
}

#[test]
fn canonical_hex_is_row_major() {
    // single edge on 3 vertices: canonical labeling puts it last in colex
    // order, i.e. pair {1,2}; row-major bits (01,02,12) = 001 -> "2"
    let f = canonical_form(&g(3, &[(1, 2)])).unwrap();
    assert_eq!(f.graph().edges().collect::<Vec<_>>(), vec![(1, 2)]);
    assert_eq!(f.to_hex(), "2");
    assert_eq!(canonical_form(&Graph::empty(4).unwrap()).unwrap().to_hex(), "00");
}

#[test]
fn text_format_round_trip() {
    let st = staircase(8, &p("3,3,1")).unwrap();
    let text = st.to_text();
    assert!(text.starts_with("8\n1 4\n"));
    assert_eq!(Graph::from_text(&text).unwrap(), st);
    assert_eq!(Graph::from_text("3\n1 2\n\n2 3\n").unwrap().edge_count(), 1);
    assert!(Graph::from_text("3\n2 1\n").is_err());
    assert!(Graph::from_text("3\n1 4\n").is_err());
    assert!(Graph::from_text("x\n").is_err());
    assert!(Graph::from_text("").is_err());
}

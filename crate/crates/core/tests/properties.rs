use flagomega::charney::{omega, omega_by_dimension, omega_right_angled};
use flagomega::complex::{build_flag_complex, link, FlagComplex, Simplex, WeightedGraph};
use flagomega::coxeter::{classify_component, CoxeterGraph, CoxeterType, Weight};
use flagomega::exact::Rational;
use flagomega::homology::{homology, is_ghs, smith_normal_form, IntMatrix};
use flagomega::reduction::{delta_omega_direct, delta_omega_inclusion_exclusion, reduce_pipeline};
use num_bigint::BigInt;
use proptest::prelude::*;

/// Graphs on up to `max_v` vertices; `None` entries are non-edges.
fn weighted_graph(max_v: usize, weights: std::ops::RangeInclusive<u32>) -> impl Strategy<Value = WeightedGraph> {
    (1..=max_v).prop_flat_map(move |n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(prop::option::weighted(0.6, weights.clone()), pairs).prop_map(move |ws| {
            let ids: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
            let mut g = WeightedGraph::new(ids.clone()).unwrap();
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if let Some(m) = ws[k] {
                        g = g.with_edge(&ids[i], &ids[j], m);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn finite_complex(max_v: usize, max_w: u32) -> impl Strategy<Value = FlagComplex> {
    weighted_graph(max_v, 2..=max_w).prop_filter_map("some clique spans an infinite group", |g| build_flag_complex(&g).ok())
}

fn permuted(g: &CoxeterGraph, perm: &[usize]) -> CoxeterGraph {
    let n = g.rank();
    let mut h = CoxeterGraph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            h.set(perm[i], perm[j], g.weight(i, j));
        }
    }
    h
}

/// The textbook recursive definition: a homology sphere whose vertex links
/// are one dimension lower.
fn ghs_recursive(s: &FlagComplex, n: isize) -> bool {
    if !homology(s).is_sphere(n) {
        return false;
    }
    (0..s.graph().len()).all(|v| ghs_recursive(&link(s, &Simplex::new(vec![v])).unwrap(), n - 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn snf_ignores_unimodular_changes(
        rows in prop::collection::vec(prop::collection::vec(-6i64..=6, 4), 3),
        ops in prop::collection::vec((any::<bool>(), 0usize..4, 0usize..4, -3i64..=3), 0..12),
    ) {
        let m = IntMatrix::from_rows(&rows);
        let before = smith_normal_form(&m);
        let mut t = m.clone();
        for (on_rows, a, b, q) in ops {
            let q = BigInt::from(q);
            if on_rows && a % 3 != b % 3 {
                t.row_sub(a % 3, b % 3, &q);
            } else if !on_rows && a != b {
                t.col_sub(a, b, &q);
            }
        }
        prop_assert_eq!(smith_normal_form(&t), before);
    }

    #[test]
    fn classification_survives_relabeling(
        (t, perm) in prop::sample::select(CoxeterType::all_up_to(8, 12))
            .prop_flat_map(|t| (Just(t), Just((0..t.rank()).collect::<Vec<_>>()).prop_shuffle())),
    ) {
        prop_assert_eq!(classify_component(&permuted(&t.diagram(), &perm)), Some(t));
    }

    #[test]
    fn omega_by_dimension_sums_to_omega(s in finite_complex(7, 6)) {
        let total: Rational = omega_by_dimension(&s).into_iter().sum();
        prop_assert_eq!(&total, &omega(&s));
        if s.graph().is_right_angled() {
            prop_assert_eq!(omega_right_angled(&s), Some(total));
        } else {
            prop_assert_eq!(omega_right_angled(&s), None);
        }
    }

    #[test]
    fn direct_change_matches_recomputation(s in finite_complex(6, 7), pick in any::<prop::sample::Index>(), u in 2u32..7) {
        let heavy: Vec<_> = s.graph().edges().into_iter().filter(|e| e.2 >= 3).collect();
        prop_assume!(!heavy.is_empty());
        let (i, j, m) = heavy[pick.index(heavy.len())];
        let u = 2 + u % (m - 1);
        let direct = delta_omega_direct(&s, (i, j), u).unwrap();
        let mut g = s.graph().clone();
        g.set_weight(i, j, Weight::Finite(u)).unwrap();
        let after = build_flag_complex(&g).unwrap();
        prop_assert_eq!(&direct, &(omega(&after) - omega(&s)));
        prop_assert_eq!(delta_omega_inclusion_exclusion(&s, (i, j), u).unwrap(), direct);
    }

    #[test]
    fn pipeline_telescopes(s in finite_complex(6, 7)) {
        let trace = reduce_pipeline(&s).unwrap();
        prop_assert_eq!(trace.total_delta(), omega(&trace.final_complex) - omega(&s));
        prop_assert!(trace.final_complex.graph().is_right_angled());
        for w in trace.steps.windows(2) {
            prop_assert_eq!(&w[0].omega_after, &w[1].omega_before);
        }
        prop_assert!(trace.steps.iter().all(|st| st.agreed != Some(false)));
    }

    #[test]
    fn euler_characteristic_matches_betti_numbers(s in finite_complex(7, 3)) {
        let h = homology(&s);
        let reduced: i64 = h.betti().iter().enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum();
        // betti()[0] is degree -1
        prop_assert_eq!(-reduced, s.euler_characteristic() - 1);
    }

    #[test]
    fn flat_ghs_check_matches_recursion(s in finite_complex(7, 2), shift in -1isize..=1) {
        let n = s.dim() + shift;
        prop_assert_eq!(is_ghs(&s, n).holds, ghs_recursive(&s, n));
    }

    #[test]
    fn link_of_link_is_link(s in finite_complex(7, 4), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        // pick tau among simplices with at least one vertex, sigma a face of it
        let cells: Vec<_> = s.cells().filter(|c| !c.simplex.is_empty()).collect();
        prop_assume!(!cells.is_empty());
        let tau = &cells[a.index(cells.len())].simplex;
        let keep = b.index(tau.len() + 1);
        let sigma = Simplex::new(tau.vertices()[..keep].to_vec());
        let rest: Vec<String> = s.names(tau)[keep..].to_vec();

        let direct = link(&s, tau).unwrap();
        let outer = link(&s, &sigma).unwrap();
        let ids: Vec<&str> = rest.iter().map(String::as_str).collect();
        let inner = link(&outer, &outer.simplex_by_ids(&ids).unwrap()).unwrap();
        prop_assert_eq!(direct.graph(), inner.graph());
    }

    #[test]
    fn lowering_a_weight_keeps_the_simplices(s in finite_complex(6, 7), pick in any::<prop::sample::Index>()) {
        let heavy: Vec<_> = s.graph().edges().into_iter().filter(|e| e.2 >= 3).collect();
        prop_assume!(!heavy.is_empty());
        let (i, j, m) = heavy[pick.index(heavy.len())];
        for u in 2..m {
            let mut g = s.graph().clone();
            g.set_weight(i, j, Weight::Finite(u)).unwrap();
            let t = build_flag_complex(&g).expect("lowering keeps every group finite");
            let before: Vec<&Simplex> = s.cells().map(|c| &c.simplex).collect();
            let after: Vec<&Simplex> = t.cells().map(|c| &c.simplex).collect();
            prop_assert_eq!(before, after);
        }
    }
}

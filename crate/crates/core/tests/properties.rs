mod common;

use chromsym::csf::{chromatic_poly_dc, csf, csf_blocks, csf_dc, csf_subsets};
use chromsym::graphs::{
    attach, build_elementary, build_spider, build_sun, disjoint_union, BodyKind, ElementaryKind, WeightedMultigraph,
};
use chromsym::partitions::{partitions_of, transpose};
use chromsym::positivity::{e_positivity, has_connected_partition, s_positivity, wolfgang_scan};
use chromsym::symfunc::{e_to_p, e_to_s, evaluate_ones, p_to_e, rat, s_to_e, to_basis};
use chromsym::{Basis, Graph, Guards, Partition, SymFunc};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let k = pairs.len();
        prop::collection::vec(prop::bool::weighted(0.4), k).prop_map(move |keep| {
            let edges = pairs.iter().zip(&keep).filter(|(_, &b)| b).map(|(&e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn arb_partition(max: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=4, 1..=4)
        .prop_filter("weight", move |v| v.iter().sum::<usize>() <= max)
        .prop_map(Partition::from_parts)
}

fn arb_symfunc(basis: Basis) -> impl Strategy<Value = SymFunc> {
    (1usize..=6).prop_flat_map(move |d| {
        let parts = partitions_of(d).unwrap();
        let k = parts.len();
        prop::collection::vec(-5i64..=5, k).prop_map(move |cs| {
            SymFunc::from_terms(basis, d, parts.iter().cloned().zip(cs.into_iter().map(rat))).unwrap()
        })
    })
}

/// Connected graphs small enough to hang off a complete body.
fn connected_piece(size: usize, kind: u8) -> Graph {
    match (kind % 3, size) {
        (_, 1 | 2) | (0, _) => build_elementary(ElementaryKind::Path, size).unwrap(),
        (1, _) => build_elementary(ElementaryKind::Complete, size).unwrap(),
        _ => build_spider(&vec![1; size - 1]).unwrap(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn engines_agree(g in arb_graph(8)) {
        let guards = Guards::default();
        let a = csf_subsets(&g, &guards).unwrap();
        prop_assert_eq!(&a, &csf_dc(&WeightedMultigraph::from_graph(&g)));
        prop_assert_eq!(&a, &csf_blocks(&g, &guards).unwrap());
    }

    #[test]
    fn specialization_is_chromatic_polynomial(g in arb_graph(7), x in 0u64..6) {
        let guards = Guards::default();
        let (f, _) = csf(&g, &guards).unwrap();
        let chi = chromatic_poly_dc(&g, &guards).unwrap();
        prop_assert_eq!(evaluate_ones(&f, x).unwrap(), chromsym::Rational::from_integer(chi.evaluate(x as i64)));
    }

    #[test]
    fn disjoint_union_multiplies(g in arb_graph(5), h in arb_graph(4)) {
        let guards = Guards::default();
        let u = disjoint_union(&g, &h).unwrap();
        let lhs = p_to_e(&csf(&u, &guards).unwrap().0).unwrap();
        let rhs = p_to_e(&csf(&g, &guards).unwrap().0).unwrap()
            .multiply(&p_to_e(&csf(&h, &guards).unwrap().0).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn basis_round_trips(f in arb_symfunc(Basis::Elementary)) {
        prop_assert_eq!(&p_to_e(&e_to_p(&f).unwrap()).unwrap(), &f);
        prop_assert_eq!(&s_to_e(&e_to_s(&f).unwrap()).unwrap(), &f);
        let via_p = to_basis(&to_basis(&f, Basis::PowerSum).unwrap(), Basis::Schur).unwrap();
        prop_assert_eq!(via_p, e_to_s(&f).unwrap());
    }

    #[test]
    fn conversion_is_multiplicative(f in arb_symfunc(Basis::Elementary), g in arb_symfunc(Basis::Elementary)) {
        prop_assume!(f.degree() + g.degree() <= 9);
        let lhs = e_to_p(&f.multiply(&g).unwrap()).unwrap();
        let rhs = e_to_p(&f).unwrap().multiply(&e_to_p(&g).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn transpose_is_involution(lambda in arb_partition(12)) {
        prop_assert_eq!(transpose(&transpose(&lambda)), lambda.clone());
        prop_assert_eq!(transpose(&lambda).weight(), lambda.weight());
    }

    #[test]
    fn e_positive_implies_connected_partitions_and_s_positive(g in arb_graph(7)) {
        prop_assume!(g.is_connected());
        let guards = Guards::default();
        let e = e_positivity(&g, &guards).unwrap();
        if e.positive {
            prop_assert!(wolfgang_scan(&g, &guards).unwrap().is_empty());
            prop_assert!(s_positivity(&g, &guards).unwrap().positive);
        }
        prop_assert_eq!(e.positive, e.witness.is_none());
    }

    #[test]
    fn attachments_inherit_missing_types(
        n in 3usize..=4,
        sizes in prop::collection::vec(1usize..=3, 4),
        kinds in prop::collection::vec(0u8..3, 4),
        anchors in prop::collection::vec(0usize..3, 4),
    ) {
        let sizes = &sizes[..n];
        prop_assume!(n + sizes.iter().sum::<usize>() <= 12);
        let sun = build_sun(BodyKind::Complete, n, sizes).unwrap();
        let body = build_elementary(ElementaryKind::Complete, n).unwrap();
        let pieces: Vec<Graph> = (0..n).map(|i| connected_piece(sizes[i], kinds[i])).collect();
        let spec: Vec<(usize, &Graph, usize)> =
            (0..n).map(|i| (i, &pieces[i], anchors[i] % sizes[i])).collect();
        let g = attach(&body, &spec).unwrap();
        for lambda in wolfgang_scan(&sun, &Guards::default()).unwrap() {
            prop_assert!(has_connected_partition(&g, &lambda).unwrap().is_none(), "type {}", lambda);
        }
    }
}

#[test]
fn builder_graphs_have_consistent_engines() {
    let guards = Guards::default();
    for (name, g) in common::builder_graphs(10) {
        let a = csf_subsets(&g, &guards).unwrap();
        assert_eq!(a, csf_blocks(&g, &guards).unwrap(), "{name}");
        assert_eq!(a.degree(), g.vertex_count(), "{name}");
    }
}

use proptest::collection::vec;
use proptest::prelude::*;

use dmg_core::equivalence::{
    find_long_inducing_path, inducing_path_exists, is_maximal, markov_equivalent, maximal_dmg,
    potential_parent, potential_sibling, separable, IndependenceModel, InducingPathKind, MODEL_CAP,
};
use dmg_core::marginalize::latent_projection;
use dmg_core::oracle::{latent_projection_bruteforce, mu_separation_table_bruteforce, ROUTE_CAP};
use dmg_core::separation::{
    colliders_in, delta_separated, find_mu_connecting_walk_colliders_in_c, is_mu_connecting, mu_separated,
    mu_separated_via_augmentation, SeparationQuery,
};
use dmg_core::timeseries::{proof_horizon, rolling_sweep, unroll};
use dmg_core::{Dmg, Edge, VertexId, VertexSet};

fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
}

fn build(n: usize, directed: &[bool], bidirected: &[bool]) -> Dmg {
    let d = (0..n * n).filter(|&i| directed[i]).map(|i| (VertexId::new(i / n), VertexId::new(i % n)));
    let pairs: Vec<(VertexId, VertexId)> =
        (0..n).flat_map(|i| (i..n).map(move |j| (VertexId::new(i), VertexId::new(j)))).collect();
    let b = pairs.into_iter().zip(bidirected).filter(|(_, &keep)| keep).map(|(p, _)| p);
    Dmg::from_ids(labels(n), d, b).unwrap()
}

/// Random DMG with up to `max_n` vertices; each edge present with
/// probability `p`.
fn dmg(max_n: usize, p: f64) -> impl Strategy<Value = Dmg> {
    (1..=max_n).prop_flat_map(move |n| {
        (vec(prop::bool::weighted(p), n * n), vec(prop::bool::weighted(p), n * (n + 1) / 2))
            .prop_map(move |(d, b)| build(n, &d, &b))
    })
}

fn dg(max_n: usize, p: f64) -> impl Strategy<Value = Dmg> {
    (1..=max_n).prop_flat_map(move |n| vec(prop::bool::weighted(p), n * n).prop_map(move |d| build(n, &d, &vec![false; n * (n + 1) / 2])))
}

/// Adds `α ↔ α` and `β ↔ β` for every `α ↔ β`.
fn with_self_siblings(g: &Dmg) -> Dmg {
    let extra: Vec<Edge> = g
        .bidirected_edges()
        .flat_map(|(a, b)| [Edge::bidirected(a, a), Edge::bidirected(b, b)])
        .collect();
    g.with_edges(g.edges().chain(extra).collect::<std::collections::BTreeSet<_>>()).unwrap()
}

fn singleton_queries(g: &Dmg) -> impl Iterator<Item = SeparationQuery> + '_ {
    let n = g.order();
    g.vertices().flat_map(move |a| {
        g.vertices().flat_map(move |b| {
            (0..1u64 << n).map(move |c| {
                SeparationQuery::new(VertexSet::singleton(a), VertexSet::singleton(b), VertexSet::from_mask(c))
            })
        })
    })
}

fn subset_of(g: &Dmg, mask: u64) -> VertexSet {
    VertexSet::from_mask(mask & ((1u64 << g.order()) - 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ancestors_form_a_closure(g in dmg(6, 0.3), m1 in any::<u64>(), m2 in any::<u64>()) {
        let c = subset_of(&g, m1);
        let bigger = c.union(&subset_of(&g, m2));
        let an = g.ancestors(&c).unwrap();
        prop_assert!(c.is_subset(&an));
        prop_assert!(an.is_subset(&g.ancestors(&bigger).unwrap()));
        prop_assert_eq!(g.ancestors(&an).unwrap(), an);
    }

    #[test]
    fn supergraph_is_a_partial_order(g in dmg(5, 0.4), drop1 in any::<u64>(), drop2 in any::<u64>()) {
        prop_assert_eq!(g.induced_subgraph(&g.all_vertices()).unwrap(), g.clone());
        let edges: Vec<Edge> = g.edges().collect();
        let keep = |drop: u64, from: &[Edge]| -> Vec<Edge> {
            from.iter().enumerate().filter(|(i, _)| drop >> (i % 64) & 1 == 0).map(|(_, &e)| e).collect()
        };
        let h1 = g.with_edges(keep(drop1, &edges)).unwrap();
        let h2 = g.with_edges(keep(drop2, &h1.edges().collect::<Vec<_>>())).unwrap();
        prop_assert!(g.is_supergraph(&g).unwrap());
        prop_assert!(g.is_supergraph(&h1).unwrap() && h1.is_supergraph(&h2).unwrap());
        prop_assert!(g.is_supergraph(&h2).unwrap());
        if h1.is_supergraph(&g).unwrap() {
            prop_assert_eq!(h1, g);
        }
    }

    #[test]
    fn canonical_dg_round_trip(g in dmg(4, 0.3)) {
        let g = with_self_siblings(&g);
        let c = g.canonical_dg();
        prop_assert!(c.is_dg());
        prop_assert_eq!(c.order(), g.order() + g.bidirected_edges().count());
        prop_assert_eq!(latent_projection(&c, &(0..g.order()).map(VertexId::new).collect()).unwrap(), g);
    }

    #[test]
    fn walk_search_matches_routes_and_augmentation(g in dmg(5, 0.3)) {
        let table = mu_separation_table_bruteforce(&g, ROUTE_CAP).unwrap();
        let n = g.order();
        for (i, q) in singleton_queries(&g).enumerate() {
            let walk = mu_separated(&g, &q).unwrap();
            prop_assert_eq!(walk, table[i], "{:?}", q);
            prop_assert_eq!(walk, mu_separated_via_augmentation(&g, &q).unwrap(), "{:?}", q);
        }
        prop_assert_eq!(table.len(), (n * n) << n);
    }

    #[test]
    fn strengthened_witness_exists(g in dmg(5, 0.35), a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let q = SeparationQuery::new(subset_of(&g, a), subset_of(&g, b), subset_of(&g, c));
        let witness = find_mu_connecting_walk_colliders_in_c(&g, &q).unwrap();
        prop_assert_eq!(witness.is_none(), mu_separated(&g, &q).unwrap());
        if let Some(w) = witness {
            prop_assert!(is_mu_connecting(&g, &w, &q.c));
            prop_assert!(colliders_in(&w, &q.c));
            prop_assert!(q.a.contains(w.start()) && q.b.contains(w.end()));
        }
    }

    #[test]
    fn trivial_separations(g in dmg(5, 0.4), a in any::<u64>(), c in any::<u64>()) {
        let c = subset_of(&g, a | c);
        let a = subset_of(&g, a);
        let all = g.all_vertices();
        prop_assert!(mu_separated(&g, &SeparationQuery::new(a.clone(), all.clone(), c.clone())).unwrap());
        prop_assert!(mu_separated(&g, &SeparationQuery::new(all.clone(), VertexSet::new(), c.clone())).unwrap());
        prop_assert!(mu_separated(&g, &SeparationQuery::new(VertexSet::new(), all, c)).unwrap());
    }

    #[test]
    fn delta_matches_mu_on_dgs(g in dg(5, 0.3)) {
        for a in g.vertices() {
            for b in g.vertices().filter(|&b| b != a) {
                for mask in 0..1u64 << g.order() {
                    let c = VertexSet::from_mask(mask);
                    if c.contains(a) || c.contains(b) {
                        continue;
                    }
                    let (sa, sb) = (VertexSet::singleton(a), VertexSet::singleton(b));
                    let delta = delta_separated(&g, &sa, &sb, &c).unwrap();
                    let mu = mu_separated(&g, &SeparationQuery::new(sa, sb.clone(), c.union(&sb))).unwrap();
                    prop_assert_eq!(delta, mu);
                }
            }
        }
    }

    #[test]
    fn dg_separability_is_non_adjacency(g in dg(5, 0.3)) {
        let model = IndependenceModel::of(&g, MODEL_CAP).unwrap();
        for a in g.vertices() {
            for b in g.vertices() {
                prop_assert_eq!(model.inseparable(a, b), g.has_directed(a, b));
            }
        }
    }

    #[test]
    fn loops_decide_self_separation(g in dmg(5, 0.3)) {
        let g = with_self_siblings(&g);
        for a in g.vertices() {
            let rest = g.all_vertices().difference(&VertexSet::singleton(a));
            let q = SeparationQuery::new(VertexSet::singleton(a), VertexSet::singleton(a), rest);
            let no_loops = !g.has_directed(a, a) && !g.has_bidirected(a, a);
            prop_assert_eq!(no_loops, mu_separated(&g, &q).unwrap());
        }
    }

    #[test]
    fn projection_laws(g in dmg(5, 0.3), o1 in any::<u64>(), o2 in any::<u64>()) {
        let o1 = subset_of(&g, o1);
        let o2 = o1.intersection(&subset_of(&g, o2));
        let m1 = latent_projection(&g, &o1).unwrap();
        prop_assert_eq!(&m1, &latent_projection_bruteforce(&g, &o1, ROUTE_CAP).unwrap());
        // o2 in the numbering of m1.
        let o2_in_m1: VertexSet = o1.iter().enumerate().filter(|(_, v)| o2.contains(*v)).map(|(i, _)| VertexId::new(i)).collect();
        prop_assert_eq!(latent_projection(&m1, &o2_in_m1).unwrap(), latent_projection(&g, &o2).unwrap());
        let members: Vec<VertexId> = o1.iter().collect();
        for (i, &a) in members.iter().enumerate() {
            let an_g = g.ancestors(&VertexSet::singleton(a)).unwrap();
            let an_m = m1.ancestors(&VertexSet::singleton(VertexId::new(i))).unwrap();
            for (j, &b) in members.iter().enumerate() {
                prop_assert_eq!(an_g.contains(b), an_m.contains(VertexId::new(j)));
            }
        }
        let closed = with_self_siblings(&g);
        prop_assert!(latent_projection(&closed, &o1).unwrap().satisfies_self_sibling_property());
    }

    #[test]
    fn inseparability_is_an_inducing_path(g in dmg(5, 0.3)) {
        let model = IndependenceModel::of(&g, MODEL_CAP).unwrap();
        for a in g.vertices() {
            for b in g.vertices() {
                let sep = separable(&g, a, b).unwrap();
                prop_assert_eq!(sep.is_none(), inducing_path_exists(&g, a, b, InducingPathKind::Any).unwrap());
                prop_assert_eq!(sep.is_none(), model.inseparable(a, b));
                if let Some(d) = sep {
                    let q = SeparationQuery::new(VertexSet::singleton(a), VertexSet::singleton(b), d);
                    prop_assert!(mu_separated(&g, &q).unwrap());
                }
            }
        }
    }

    #[test]
    fn adding_induced_edges_keeps_the_model(g in dmg(4, 0.3)) {
        for a in g.vertices() {
            for b in g.vertices() {
                let cases = [
                    (InducingPathKind::Bidirected, Edge::bidirected(a, b)),
                    (InducingPathKind::Directed, Edge::directed(a, b)),
                ];
                for (kind, e) in cases {
                    if !g.has_edge(e) && inducing_path_exists(&g, a, b, kind).unwrap() {
                        prop_assert!(markov_equivalent(&g, &g.add_edge(e).unwrap(), MODEL_CAP).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn actual_edges_are_potential_edges(g in dmg(5, 0.3)) {
        let model = IndependenceModel::of(&g, MODEL_CAP).unwrap();
        for (a, b) in g.directed_edges() {
            prop_assert!(potential_parent(&model, a, b));
        }
        for (a, b) in g.bidirected_edges() {
            prop_assert!(potential_sibling(&model, a, b));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn chains_to_the_maximal_graph_stay_equivalent(g in dmg(4, 0.3), order in any::<u64>()) {
        let n = maximal_dmg(&g, MODEL_CAP).unwrap();
        prop_assert!(n.is_supergraph(&g).unwrap());
        prop_assert!(is_maximal(&n, MODEL_CAP).unwrap());
        let mut missing: Vec<Edge> = n.edges().filter(|&e| !g.has_edge(e)).collect();
        let shift = (order as usize) % missing.len().max(1);
        missing.rotate_left(shift);
        if order & 1 == 1 {
            missing.reverse();
        }
        let model = IndependenceModel::of(&g, MODEL_CAP).unwrap();
        let mut step = g.clone();
        for e in missing {
            step = step.add_edge(e).unwrap();
            prop_assert_eq!(&IndependenceModel::of(&step, MODEL_CAP).unwrap(), &model);
        }
        prop_assert_eq!(step, n);
    }

    #[test]
    fn unidirected_paths_give_directed_ones_in_maximal_graphs(g in dmg(4, 0.35)) {
        let n = maximal_dmg(&g, MODEL_CAP).unwrap();
        for (a, b) in n.directed_edges().filter(|(a, b)| a != b) {
            let e = Edge::directed(a, b);
            let without = n.remove_edge(e).unwrap();
            if find_long_inducing_path(&n, a, b, InducingPathKind::Unidirected).unwrap().is_some() {
                prop_assert!(inducing_path_exists(&without, a, b, InducingPathKind::Directed).unwrap());
            }
        }
    }

    #[test]
    fn full_loop_models_are_determined_by_conditioned_targets(g in dmg(4, 0.3), drop in any::<u64>()) {
        let loops: Vec<Edge> = g.vertices().flat_map(|v| [Edge::directed(v, v), Edge::bidirected(v, v)]).collect();
        let g = g.with_edges(g.edges().chain(loops.iter().copied()).collect::<std::collections::BTreeSet<_>>()).unwrap();
        let n = maximal_dmg(&g, MODEL_CAP).unwrap();
        let kept = n.edges().enumerate().filter(|(i, e)| e.is_loop() || drop >> (i % 64) & 1 == 0).map(|(_, e)| e);
        let h = n.with_edges(kept).unwrap();
        let (m1, m2) = (IndependenceModel::of(&g, MODEL_CAP).unwrap(), IndependenceModel::of(&h, MODEL_CAP).unwrap());
        let restricted_equal = g.vertices().all(|a| {
            g.vertices().all(|b| {
                (0..1u64 << g.order())
                    .filter(|c| c >> a.index() & 1 == 0 && c >> b.index() & 1 == 1)
                    .all(|c| m1.separated(a, b, c) == m2.separated(a, b, c))
            })
        });
        prop_assert_eq!(restricted_equal, m1 == m2);
    }

    #[test]
    fn unrolled_graphs_are_acyclic_and_counted(g in dg(5, 0.3), t in 0usize..5) {
        let u = unroll(&g, t).unwrap();
        prop_assert_eq!(u.dag().order(), g.order() * (t + 1));
        prop_assert_eq!(u.dag().edge_count(), g.edge_count() * t * (t + 1) / 2);
        for (x, y) in u.dag().directed_edges() {
            prop_assert!(u.slice_of(x).1 < u.slice_of(y).1);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn rolled_and_unrolled_separation_correspond(g in dg(4, 0.25)) {
        let bound = proof_horizon(&g);
        for o in rolling_sweep(&g, &[1, 2, 3, bound], MODEL_CAP).unwrap() {
            prop_assert!(!o.check.rolled || o.check.unrolled, "{:?}", o);
            if o.horizon == bound {
                prop_assert_eq!(o.check.rolled, o.check.unrolled, "{:?}", o);
            }
        }
    }
}

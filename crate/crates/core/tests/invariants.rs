use proptest::prelude::*;

use unicyclic::edgelist::{parse_edge_list, write_edge_list};
use unicyclic::spectra::laplacian_spectral_radius;
use unicyclic::transforms::flatten_trees;
use unicyclic::{canonical_form, decompose_unicyclic, Graph};

/// A cycle on `1..=g` with every later vertex hung off an earlier one.
fn unicyclic() -> impl Strategy<Value = Graph> {
    (3usize..=8, 0usize..=6)
        .prop_flat_map(|(g, extra)| {
            let anchors: Vec<_> = (0..extra).map(|i| 0..g + i).collect();
            (Just(g), anchors)
        })
        .prop_map(|(g, anchors)| {
            let n = g + anchors.len();
            let cycle = (1..=g).map(|v| (v, v % g + 1));
            let trees = anchors.iter().enumerate().map(|(i, &a)| (a + 1, g + i + 1));
            Graph::new(n, cycle.chain(trees)).unwrap()
        })
}

fn relabeled() -> impl Strategy<Value = (Graph, Vec<usize>)> {
    unicyclic().prop_flat_map(|g| {
        let perm: Vec<usize> = g.vertices().collect();
        (Just(g), Just(perm).prop_shuffle())
    })
}

proptest! {
    #[test]
    fn edge_list_round_trip(g in unicyclic()) {
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in relabeled()) {
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert_eq!(g.girth(), h.girth());
    }

    #[test]
    fn decomposition_accounts_for_every_vertex(g in unicyclic()) {
        let d = decompose_unicyclic(&g).unwrap();
        prop_assert_eq!(Some(d.girth()), g.girth());
        prop_assert_eq!(d.girth() + d.attach_sizes().iter().sum::<usize>(), g.order());
        for v in d.c_set() {
            prop_assert_eq!(d.tree_vertices(v).unwrap().len(), d.attach_size(v).unwrap());
        }
    }

    #[test]
    fn flattening_keeps_shape_and_never_raises_lambda(g in unicyclic()) {
        let (h, _) = flatten_trees(&g).unwrap();
        let (dg, dh) = (decompose_unicyclic(&g).unwrap(), decompose_unicyclic(&h).unwrap());
        let mut a = dg.attach_sizes().to_vec();
        let mut b = dh.attach_sizes().to_vec();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
        prop_assert_eq!(h.order(), g.order());
        let (lg, lh) = (laplacian_spectral_radius(&g).unwrap(), laplacian_spectral_radius(&h).unwrap());
        prop_assert!(lh <= lg + 1e-9, "{} > {}", lh, lg);
    }
}

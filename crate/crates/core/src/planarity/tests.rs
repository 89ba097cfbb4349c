use rand::Rng as _;

use super::*;
use crate::graph::{connected_components, spanning_forest, subgraph};
use crate::oracle::{is_kuratowski_subdivision, is_planar_by_subdivision_search};
use crate::rng::rng_from_seed;

fn random_graph(seed: u64, max_n: usize) -> Graph {
    let mut rng = rng_from_seed(seed);
    let n = rng.gen_range(1..=max_n);
    let p: f64 = rng.gen_range(0.1..0.9);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

fn check_witness(g: &Graph, k: &KuratowskiSubdivision) {
    assert!(!is_planar_subset(g, &k.edges), "witness is planar");
    assert!(is_kuratowski_subdivision(g, &k.edges), "witness is not a subdivision");
    for e in k.edges.iter() {
        let mut less = k.edges.clone();
        less.remove(e);
        assert!(is_planar_subset(g, &less), "witness edge {e} is redundant");
    }
    let expected = match k.kind {
        KuratowskiKind::K5 => 5,
        KuratowskiKind::K33 => 6,
    };
    assert_eq!(k.branch_vertices.len(), expected);
}

#[test]
fn verdicts_on_named_graphs() {
    assert!(is_planar(&Graph::complete(4)));
    assert!(!is_planar(&Graph::complete(5)));
    assert!(!is_planar(&Graph::complete_bipartite(3, 3)));
    assert!(!is_planar(&Graph::petersen()));
    assert!(is_planar(&Graph::empty(0)));
    assert!(is_planar(&Graph::empty(7)));
    assert!(is_planar(&Graph::complete_bipartite(2, 9)));
}

#[test]
fn triangle_embeds_with_two_faces() {
    let g = Graph::cycle(3);
    let out = embed(&g);
    let emb = out.embedding().expect("triangle is planar");
    assert_eq!(emb.face_count(&g), 2);
    assert!(emb.satisfies_euler(&g));
}

#[test]
fn k5_witness_uses_every_edge() {
    let g = Graph::complete(5);
    let k = embed(&g).witness().cloned().expect("K5 is not planar");
    assert_eq!(k.kind, KuratowskiKind::K5);
    assert_eq!(k.branch_vertices, vec![0, 1, 2, 3, 4]);
    assert_eq!(k.edges, g.edge_set());
    check_witness(&g, &k);
}

#[test]
fn k33_witness_is_k33() {
    let g = Graph::complete_bipartite(3, 3);
    let k = extract_kuratowski(&g).unwrap();
    assert_eq!(k.kind, KuratowskiKind::K33);
    assert_eq!(k.edges.len(), 9);
}

#[test]
fn petersen_witness_is_a_k33_subdivision() {
    let g = Graph::petersen();
    let k = embed(&g).witness().cloned().unwrap();
    assert_eq!(k.kind, KuratowskiKind::K33);
    check_witness(&g, &k);
}

#[test]
fn pendant_edge_is_not_part_of_the_witness() {
    let mut edges = Graph::complete(5).edges().to_vec();
    edges.push((4, 5));
    let g = Graph::new(6, edges).unwrap();
    let k = extract_kuratowski(&g).unwrap();
    assert_eq!(k.edges.to_vec(), (0..10).collect::<Vec<_>>());
    let slow = extract_kuratowski_by_deletion(&g).unwrap();
    assert_eq!(slow.edges, k.edges);
}

#[test]
fn planar_input_has_no_witness() {
    assert_eq!(extract_kuratowski(&Graph::complete(4)), Err(PlanarityError::Planar));
    assert_eq!(
        extract_kuratowski_by_deletion(&Graph::cycle(5)),
        Err(PlanarityError::Planar)
    );
}

#[test]
fn dense_witness_goes_through_the_shrinking_path() {
    let g = Graph::complete(12);
    let k = extract_kuratowski(&g).unwrap();
    check_witness(&g, &k);
}

#[test]
fn subgraph_mode_on_named_graphs() {
    for seed in 0..20 {
        let k5 = Graph::complete(5);
        assert_eq!(edge_addition_subgraph(&k5, seed).len(), 9);
        let k33 = Graph::complete_bipartite(3, 3);
        assert_eq!(edge_addition_subgraph(&k33, seed).len(), 8);
        let k4 = Graph::complete(4);
        assert_eq!(edge_addition_subgraph(&k4, seed), k4.edge_set());
    }
}

#[test]
fn subgraph_mode_is_deterministic_per_seed() {
    let g = random_graph(99, 40);
    assert_eq!(edge_addition_subgraph(&g, 5), edge_addition_subgraph(&g, 5));
}

#[test]
fn agrees_with_subdivision_search_on_random_small_graphs() {
    for seed in 0..1500 {
        let g = random_graph(seed, 8);
        let planar = is_planar(&g);
        assert_eq!(planar, is_planar_by_subdivision_search(&g), "seed {seed}: {g:?}");
        match embed(&g) {
            PlanarityOutcome::Planar(emb) => {
                assert!(planar);
                assert!(emb.satisfies_euler(&g), "seed {seed}");
            }
            PlanarityOutcome::NonPlanar(k) => {
                assert!(!planar);
                check_witness(&g, &k);
            }
        }
    }
}

#[test]
fn embeddings_of_larger_planar_graphs_satisfy_euler() {
    // planar subgraph mode gives planar inputs of realistic size
    for seed in 0..60 {
        let g = random_graph(seed + 10_000, 60);
        let kept = edge_addition_subgraph(&g, seed);
        let sub = subgraph(&g, &kept).graph;
        let out = embed(&sub);
        let emb = out.embedding().unwrap_or_else(|| panic!("seed {seed}: subgraph not planar"));
        assert!(emb.satisfies_euler(&sub), "seed {seed}");
    }
}

#[test]
fn subgraph_mode_is_planar_and_spanning() {
    for seed in 0..200 {
        let g = random_graph(seed + 500, 30);
        let kept = edge_addition_subgraph(&g, seed);
        assert!(is_planar_subset(&g, &kept), "seed {seed}");
        let sub = subgraph(&g, &kept).graph;
        assert_eq!(
            connected_components(&sub).len(),
            connected_components(&g).len(),
            "seed {seed}"
        );
        assert!(kept.len() >= spanning_forest(&g).len());
        if is_planar(&g) {
            assert_eq!(kept, g.edge_set());
        }
    }
}

#[test]
fn fast_and_plain_extraction_both_give_valid_witnesses() {
    for seed in 0..150 {
        let g = random_graph(seed + 7_000, 12);
        if is_planar(&g) {
            continue;
        }
        check_witness(&g, &extract_kuratowski(&g).unwrap());
        check_witness(&g, &extract_kuratowski_by_deletion(&g).unwrap());
    }
}

#[test]
fn every_graph_on_six_vertices() {
    for n in 1..=6usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            let g = Graph::new(n, edges).unwrap();
            let truth = is_planar_by_subdivision_search(&g);
            assert_eq!(is_planar(&g), truth, "{g:?}");
            if let Some(rot) = embed_subset(&g, &g.edge_set()) {
                assert!(Embedding::new(&g, rot).unwrap().satisfies_euler(&g), "{g:?}");
            }
            let kept = edge_addition_subgraph(&g, mask as u64);
            assert!(is_planar_by_subdivision_search(&subgraph(&g, &kept).graph), "{g:?}");
        }
    }
}

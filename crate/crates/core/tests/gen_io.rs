use mps_core::generate::*;
use mps_core::graph::connected_components;
use mps_core::io::*;
use mps_core::{EdgeSet, Graph};
use proptest::prelude::*;

#[test]
fn regular_examples() {
    assert_eq!(gen_regular(4, 3, 9).unwrap(), Graph::complete(4));
    let g = gen_regular(100, 6, 1).unwrap();
    assert_eq!(g.edge_count(), 300);
    assert!(g.degrees().iter().all(|&d| d == 6));
    let cycles = gen_regular(6, 2, 4).unwrap();
    assert!(cycles.degrees().iter().all(|&d| d == 2));
    assert!(connected_components(&cycles).iter().all(|c| c.len() >= 3));
}

#[test]
fn regular_graphs_on_the_benchmark_grid() {
    for density in [2, 3, 5, 10, 20] {
        let spec = GeneratorSpec {
            family: Family::Regular,
            n: 100,
            density,
            seed: 3,
        };
        let g = spec.generate().unwrap();
        assert_eq!(g.edge_count(), density * 100);
        assert!(g.degrees().iter().all(|&d| d == 2 * density));
        assert_eq!(edge_list_text(&g), edge_list_text(&spec.generate().unwrap()));
    }
}

#[test]
fn regular_rejects_infeasible_requests() {
    assert_eq!(gen_regular(7, 3, 0), Err(GenError::InfeasibleRegular { n: 7, degree: 3 }));
    assert!(gen_regular(6, 6, 0).is_err());
}

#[test]
fn scale_free_examples() {
    let tree = gen_scale_free(5, 1, 2).unwrap();
    assert_eq!(tree.edge_count(), 4);
    assert_eq!(connected_components(&tree).len(), 1);
    let g = gen_scale_free(100, 2, 2).unwrap();
    assert_eq!(g.edge_count(), 2 * (100 - 3) + 3);
    assert_eq!(connected_components(&g).len(), 1);
}

#[test]
fn scale_free_edge_counts_track_density() {
    for d in [2, 3, 5, 10, 20] {
        let g = gen_scale_free(1000, d, 5).unwrap();
        let target = d * 1000;
        // the seed clique on d + 1 vertices accounts for the gap
        assert_eq!(target - g.edge_count(), d * (d + 1) / 2);
    }
}

#[test]
fn scale_free_degrees_are_heavier_tailed_than_regular() {
    let mut ratios = Vec::new();
    for seed in 0..20 {
        let ba = gen_scale_free(1000, 3, seed).unwrap();
        let reg = gen_regular(1000, 6, seed).unwrap();
        let max = |g: &Graph| *g.degrees().iter().max().unwrap() as f64;
        ratios.push(max(&ba) / max(&reg));
    }
    assert!(ratios.iter().all(|&r| r > 3.0), "{ratios:?}");
}

#[test]
fn edge_list_examples() {
    assert_eq!(parse_edge_list("3\n0 1\n1 2\n").unwrap(), Graph::path(3));
    let e = parse_edge_list("3\n0 1\n# note\n1 0\n").unwrap_err();
    assert_eq!(e.line, 4);
    assert_eq!(e.kind, ParseErrorKind::Duplicate { u: 1, v: 0, first_line: 2 });
    assert_eq!(parse_edge_list("2\n1 1\n").unwrap_err().kind, ParseErrorKind::SelfLoop(1));
    assert_eq!(parse_edge_list("2\n0 2\n").unwrap_err().line, 2);
    assert_eq!(parse_edge_list("\n# only comments\n").unwrap_err().kind, ParseErrorKind::MissingHeader);
    assert_eq!(parse_edge_list("2\n0 x\n").unwrap_err().line, 2);
    assert_eq!(parse_edge_list("4\n").unwrap(), Graph::empty(4));
}

#[test]
fn gml_examples() {
    let text = r#"
Creator "hand written"
graph [
  directed 0
  node [ id 10 label "a" ]
  node [ id 20 ]
  node [ id 30 graphics [ x 1.0 y 2.0 ] ]
  node [ id 40 ]
  edge [ source 10 target 20 ]
  edge [ source 10 target 30 ]
  edge [ source 10 target 40 ]
  edge [ source 20 target 30 ]
  edge [ source 20 target 40 ]
  edge [ source 30 target 40 weight 2 ]
]
"#;
    assert_eq!(parse_gml(text).unwrap(), Graph::complete(4));
    let bad = "graph [\n node [ id 1 ]\n node [ id 2 ]\n edge [ source 1 target 2 ]\n edge [ source 2 target 1 ]\n]";
    let e = parse_gml(bad).unwrap_err();
    assert_eq!(e.line, 5);
    assert!(matches!(e.kind, ParseErrorKind::Duplicate { first_line: 4, .. }));
    assert_eq!(parse_gml("graph [ edge [ source 1 target 2 ] ]").unwrap_err().kind, ParseErrorKind::UnknownNode(1));
    assert_eq!(parse_gml("graph [ node [ id 1 ]").unwrap_err().kind, ParseErrorKind::UnexpectedEnd);
    assert_eq!(parse_gml(&gml_text(&Graph::petersen())).unwrap(), Graph::petersen());
}

#[test]
fn files_round_trip() {
    let dir = std::env::temp_dir().join(format!("mps-io-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let g = Graph::complete(5);
    let el = dir.join("k5.el");
    write_graph(&el, &g).unwrap();
    assert_eq!(read_graph(&el, None).unwrap(), g);
    let gml = dir.join("k5.gml");
    write_graph(&gml, &g).unwrap();
    assert_eq!(read_graph(&gml, None).unwrap(), g);

    let sub = dir.join("none.el");
    write_subgraph(&sub, &g, &EdgeSet::new(10)).unwrap();
    assert_eq!(std::fs::read_to_string(&sub).unwrap(), "5\n");
    write_subgraph(&sub, &g, &g.edge_set()).unwrap();
    assert_eq!(std::fs::read_to_string(&sub).unwrap(), std::fs::read_to_string(&el).unwrap());

    assert!(matches!(read_graph(&dir.join("x.bin"), None), Err(IoError::UnknownFormat(_))));
    assert!(matches!(read_graph(&dir.join("missing.el"), None), Err(IoError::Io { .. })));
    std::fs::remove_dir_all(&dir).unwrap();
}

proptest! {
    #[test]
    fn edge_list_round_trip(n in 1usize..30, pairs in proptest::collection::btree_set((0usize..30, 0usize..30), 0..80)) {
        let edges: Vec<_> = pairs
            .into_iter()
            .filter(|&(u, v)| u < v && v < n)
            .collect();
        let g = Graph::new(n, edges).unwrap();
        let text = edge_list_text(&g);
        prop_assert_eq!(parse_edge_list(&text).unwrap(), g.clone());
        prop_assert_eq!(edge_list_text(&parse_edge_list(&text).unwrap()), text);
        prop_assert_eq!(parse_gml(&gml_text(&g)).unwrap(), g);
    }

    #[test]
    fn parsers_never_panic(text in "\\PC{0,200}") {
        let _ = parse_edge_list(&text);
        let _ = parse_gml(&text);
    }
}

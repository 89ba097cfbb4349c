//! Decodes bytes into a small graph (first byte: vertex count, then
//! endpoint pairs) and cross-checks the planarity test, the embedder, the
//! witness and, for tiny graphs, the brute-force oracle.

#![no_main]

use libfuzzer_sys::fuzz_target;
use mps_core::oracle::{is_kuratowski_subdivision, is_planar_by_subdivision_search};
use mps_core::planarity::{embed, is_planar, is_planar_subset};
use mps_core::Graph;

fuzz_target!(|data: &[u8]| {
    let Some((&head, rest)) = data.split_first() else {
        return;
    };
    let n = (head % 24) as usize + 1;
    let mut seen = std::collections::BTreeSet::new();
    for pair in rest.chunks_exact(2) {
        let (u, v) = (pair[0] as usize % n, pair[1] as usize % n);
        if u != v {
            seen.insert((u.min(v), u.max(v)));
        }
    }
    let g = Graph::new(n, seen).unwrap();
    let planar = is_planar(&g);
    let outcome = embed(&g);
    assert_eq!(outcome.is_planar(), planar);
    if let Some(emb) = outcome.embedding() {
        assert!(emb.satisfies_euler(&g));
    }
    if let Some(k) = outcome.witness() {
        assert!(is_kuratowski_subdivision(&g, &k.edges));
        assert!(!is_planar_subset(&g, &k.edges));
    }
    if n <= 8 {
        assert_eq!(planar, is_planar_by_subdivision_search(&g));
    }
});

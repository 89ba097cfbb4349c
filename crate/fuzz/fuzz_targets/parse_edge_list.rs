#![no_main]

use libfuzzer_sys::fuzz_target;
use mps_core::io::{edge_list_text, parse_edge_list};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    // accepted graphs must survive a write/read cycle unchanged
    if let Ok(g) = parse_edge_list(text) {
        assert_eq!(parse_edge_list(&edge_list_text(&g)).unwrap(), g);
    }
});

#![no_main]

use libfuzzer_sys::fuzz_target;
use mps_core::io::{gml_text, parse_gml};

fuzz_target!(|data: &[u8]| {
    let text = String::from_utf8_lossy(data);
    if let Ok(g) = parse_gml(&text) {
        assert_eq!(parse_gml(&gml_text(&g)).unwrap(), g);
    }
});

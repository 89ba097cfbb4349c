#![no_main]

use libfuzzer_sys::fuzz_target;
use mps_core::exact::parse_point;

fuzz_target!(|data: &[u8]| {
    let Some((&size, rest)) = data.split_first() else {
        return;
    };
    let text = String::from_utf8_lossy(rest);
    if let Ok(x) = parse_point(&text, size as usize) {
        assert_eq!(x.len(), size as usize);
        assert!(x.iter().all(|v| (0.0..=1.0).contains(v)));
    }
});

#![no_main]

use libfuzzer_sys::fuzz_target;
use mps_bench::{read_records, records_csv};

fuzz_target!(|data: &[u8]| {
    if let Ok(records) = read_records(data) {
        let text = records_csv(&records);
        assert_eq!(read_records(text.as_bytes()).unwrap().len(), records.len());
    }
});

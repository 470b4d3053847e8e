#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(rec) = doubletorus_cli::parse_record(text) {
            let line = rec.to_string();
            assert_eq!(line, text);
            assert_eq!(doubletorus_cli::parse_record(&line), Ok(rec));
        }
    }
});

#![no_main]

use libfuzzer_sys::fuzz_target;
use srg::io::{format_state, format_state_named, parse_state};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let g = srg::bundled::mapk();
    if let Ok(s) = parse_state(text, &g) {
        assert_eq!(parse_state(&format_state(&s), &g).unwrap(), s);
        assert_eq!(parse_state(&format_state_named(&s, &g), &g).unwrap(), s);
        let _ = srg::step(&g, &s);
    }
});

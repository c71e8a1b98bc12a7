#![no_main]

use libfuzzer_sys::fuzz_target;
use srg::io::{format_network, parse_network};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(g) = parse_network(text) {
        let again = parse_network(&format_network(&g)).expect("formatted network reparses");
        assert_eq!(again, g);
    }
});

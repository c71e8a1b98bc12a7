#![no_main]

use libfuzzer_sys::fuzz_target;
use srg::boolenc::{bn_step, decode_state, encode_network, encode_state, BooleanState};

// Each input byte contributes its low bit.
fuzz_target!(|data: &[u8]| {
    let bits = BooleanState::new(data.iter().map(|b| b & 1 == 1).collect());
    match decode_state(&bits) {
        Ok(s) => {
            assert_eq!(encode_state(&s), bits);
            let g = srg::bundled::mapk();
            if s.len() == g.vertex_count() {
                let bn = encode_network(&g);
                let image = bn_step(&bn, &bits).unwrap();
                assert_eq!(decode_state(&image).unwrap(), srg::step(&g, &s).unwrap());
            }
        }
        Err(_) => assert!(bits.bits().len() % 2 == 1 || bits.has_invalid_code()),
    }
});

#![no_main]

use libfuzzer_sys::fuzz_target;
use srg::phenotype::Phenotype;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let g = srg::bundled::mapk();
    if let Ok(p) = Phenotype::parse(text, &g) {
        for (v, value) in p.assignment() {
            assert_eq!(p.value(*v), Some(*value));
        }
    }
});

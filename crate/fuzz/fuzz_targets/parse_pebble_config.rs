#![no_main]

use gasket_core::generate;
use gasket_core::pebbling::{is_cover_solvable, ConfigSpec, SearchBudget};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(spec) = text.parse::<ConfigSpec>() else {
        return;
    };
    let g = generate(2).unwrap();
    if let Ok(c) = spec.resolve(&g) {
        let budget = SearchBudget {
            max_weight: 24,
            ..SearchBudget::default()
        };
        let _ = is_cover_solvable(&g, &c, budget);
    }
});

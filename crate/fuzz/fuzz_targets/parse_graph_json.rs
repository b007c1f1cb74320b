#![no_main]

use gasket_core::io::{export_to_string, from_json, ExportFormat};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    // Anything accepted must survive a round trip unchanged.
    if let Ok(g) = from_json(text) {
        let again = from_json(&export_to_string(&g, ExportFormat::Json)).expect("re-export parses");
        assert_eq!(g, again);
        let _ = export_to_string(&g, ExportFormat::Dot);
    }
});

#![no_main]

use gasket_core::io::ExportFormat;
use gasket_core::pebbling::VertexRef;
use gasket_core::verify::Suite;
use gasket_core::Corner;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(c) = s.parse::<Corner>() {
            assert_eq!(c.as_str().parse::<Corner>().unwrap(), c);
        }
        if let Ok(f) = s.parse::<ExportFormat>() {
            assert_eq!(f.to_string().parse::<ExportFormat>().unwrap(), f);
        }
        if let Ok(suite) = s.parse::<Suite>() {
            assert_eq!(suite.to_string().parse::<Suite>().unwrap(), suite);
        }
        let _ = s.parse::<VertexRef>();
    }
});

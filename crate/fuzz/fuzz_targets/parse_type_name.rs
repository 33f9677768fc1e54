#![no_main]
use libfuzzer_sys::fuzz_target;
use whittaker_z::lie::{build_cartan, dualize};

fuzz_target!(|data: &[u8]| {
    if data.len() > 64 {
        return;
    }
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(c) = build_cartan(s) {
            let twice = dualize(&dualize(&c));
            assert_eq!(twice.matrix(), c.matrix());
        }
    }
});

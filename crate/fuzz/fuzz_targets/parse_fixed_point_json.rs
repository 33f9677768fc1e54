#![no_main]
use libfuzzer_sys::fuzz_target;
use whittaker_z::localization::{localized_integral, FixedPointDatum};

fuzz_target!(|data: &[u8]| {
    if data.len() > 2048 {
        return;
    }
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(points) = FixedPointDatum::from_json(s) {
            if points.iter().map(|p| p.weights().len()).sum::<usize>() <= 24 {
                let _ = localized_integral(&points);
            }
        }
    }
});

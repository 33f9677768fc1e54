#![no_main]
use libfuzzer_sys::fuzz_target;
use whittaker_z::partition::SeriesTable;

fuzz_target!(|data: &[u8]| {
    if data.len() > 4096 {
        return;
    }
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(table) = SeriesTable::from_json(s) {
            let json = table.to_json();
            let again = SeriesTable::from_json(&json).expect("emitted table parses");
            assert_eq!(again.to_json(), json);
            let _ = table.to_csv();
        }
    }
});

#![no_main]
use libfuzzer_sys::fuzz_target;
use whittaker_z::arith::{RationalFunction, VarSet};

fuzz_target!(|data: &[u8]| {
    if data.len() > 512 {
        return;
    }
    if let Ok(s) = std::str::from_utf8(data) {
        let vars = VarSet::standard(2, true);
        if let Ok(f) = RationalFunction::parse(s, &vars) {
            // canonical text re-parses to the same value
            let text = f.to_string();
            let again = RationalFunction::parse(&text, &vars).expect("canonical form parses");
            assert_eq!(again, f);
            assert_eq!(again.to_string(), text);
        }
    }
});

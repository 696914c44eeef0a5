#![no_main]

use libfuzzer_sys::fuzz_target;
use planar_turan::pattern::Pattern;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(p) = s.parse::<Pattern>() {
        let shown = p.to_string();
        let back: Pattern = shown.parse().expect("displayed pattern reparses");
        assert_eq!(back, p.normalized());
        assert_eq!(back.to_string(), shown);
    }
});

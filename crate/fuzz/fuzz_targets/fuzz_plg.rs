#![no_main]

use libfuzzer_sys::fuzz_target;
use planar_turan::embed::{parse_plg, serialize_plg};

fuzz_target!(|data: &[u8]| {
    if let Ok(g) = parse_plg(data) {
        let text = serialize_plg(&g);
        let again = parse_plg(text.as_bytes()).expect("serialized graph reparses");
        assert_eq!(serialize_plg(&again), text);
        assert_eq!(again.edge_count(), g.edge_count());
    }
});

#![no_main]

use libfuzzer_sys::fuzz_target;
use symgraph::Config;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(c) = Config::from_json(text) {
        assert!(c.validate().is_ok());
    }
});

#![no_main]

use libfuzzer_sys::fuzz_target;
use symgraph::perm::Permutation;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(p) = Permutation::from_json(text) {
        assert_eq!(Permutation::from_json(&p.to_json()).unwrap(), p);
    }
});

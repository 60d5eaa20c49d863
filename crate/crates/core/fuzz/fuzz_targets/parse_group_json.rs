#![no_main]

use libfuzzer_sys::fuzz_target;
use symgraph::graph::GroupSpec;
use symgraph::perm::PermGroup;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    // Keep degrees small so a parsed group stays cheap to build.
    if text.len() > 4096 {
        return;
    }
    if let Ok(g) = PermGroup::from_json(text) {
        assert!(g.order_u128() >= 1);
    }
    let _ = GroupSpec::parse(text);
});

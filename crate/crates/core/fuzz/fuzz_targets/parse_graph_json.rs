#![no_main]

use libfuzzer_sys::fuzz_target;
use symgraph::graph::Graph;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(g) = Graph::from_json(text) {
        let again = Graph::from_json(&g.to_json()).unwrap();
        assert_eq!(again.vertex_count(), g.vertex_count());
        assert_eq!(again.edge_count(), g.edge_count());
    }
});

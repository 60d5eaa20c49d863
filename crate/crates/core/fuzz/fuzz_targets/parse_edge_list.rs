#![no_main]

use libfuzzer_sys::fuzz_target;
use symgraph::graph::Graph;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(g) = Graph::from_edge_list(text, None) {
        let again = Graph::from_edge_list(&g.to_edge_list(), Some(g.vertex_count())).unwrap();
        assert_eq!(again.edge_count(), g.edge_count());
    }
});

#![no_main]

use libfuzzer_sys::fuzz_target;
use symgraph::perm::Permutation;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(p) = Permutation::parse_cycles(text, None) {
        // Whatever parses must survive a round trip through its own notation.
        let again = Permutation::parse_cycles(&p.to_string(), Some(p.degree())).unwrap();
        assert_eq!(p, again);
        assert!(p.then(&p.inverse()).is_identity());
    }
});

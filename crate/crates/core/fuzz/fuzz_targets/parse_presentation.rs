#![no_main]

use libfuzzer_sys::fuzz_target;
use symgraph::atlas::Presentation;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let mut parts = text.splitn(2, '\n');
    let head = parts.next().unwrap_or("");
    if let Ok(p) = Presentation::parse(head) {
        let again = Presentation::parse(&p.to_string()).unwrap();
        assert_eq!(again.relators(), p.relators());
        if let Some(word) = parts.next() {
            let _ = p.parse_word(word);
        }
    }
});

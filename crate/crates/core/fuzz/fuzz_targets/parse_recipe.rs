#![no_main]

use libfuzzer_sys::fuzz_target;
use symgraph::graph::Recipe;

// Parsing only: building a recipe can legitimately take a long time.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let _ = Recipe::parse(text);
});

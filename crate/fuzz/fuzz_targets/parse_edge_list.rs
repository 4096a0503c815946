#![no_main]

use libfuzzer_sys::fuzz_target;

use bei_lab::graph::Graph;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(g) = Graph::parse_edge_list(text) {
        let back = Graph::parse_edge_list(&g.to_edge_list_json()).expect("emitted JSON parses");
        assert_eq!(back, g);
    }
});

#![no_main]

use std::sync::OnceLock;

use libfuzzer_sys::fuzz_target;

use bei_lab::poly::{PolyRing, Polynomial, TermOrder};

fuzz_target!(|data: &[u8]| {
    static RING: OnceLock<std::sync::Arc<PolyRing>> = OnceLock::new();
    let ring = RING.get_or_init(|| {
        PolyRing::new(vec![1, 2, 3, 4], 32003, TermOrder::DegRevLex).unwrap()
    });
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(f) = Polynomial::parse(ring, text) {
        if !f.is_zero() {
            let back = Polynomial::parse(ring, &f.to_string()).expect("printer output parses");
            assert_eq!(back, f);
        }
    }
});

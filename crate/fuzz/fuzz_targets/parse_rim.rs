#![no_main]

use gext::Rim;
use libfuzzer_sys::fuzz_target;

// First two bytes pick n and k, the rest is the label list.
fuzz_target!(|data: &[u8]| {
    let [n, k, rest @ ..] = data else { return };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    let (n, k) = (*n as usize % 40, *k as usize % 40);
    if let Ok(rim) = Rim::parse(n, k, text) {
        assert_eq!(rim.k(), k);
        assert_eq!(Rim::parse(n, k, &rim.to_label_string()).unwrap(), rim);
        assert_eq!(rim.decompose().reconstruct().unwrap(), rim);
    }
});

#![no_main]

use gext_cli::query::QueryResult;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(q) = QueryResult::from_json(text) {
        let encoded = q.to_json();
        let again = QueryResult::from_json(&encoded).expect("re-encoded output decodes");
        assert_eq!(again, q);
        assert_eq!(again.to_json(), encoded);
    }
});

#![no_main]
use homhopf_cli::parse_input_str;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(doc) = parse_input_str(s) {
        // whatever parses must serialize back to an equivalent document
        let again = parse_input_str(&doc.to_json().to_string()).expect("serialized document parses");
        assert_eq!(again.to_json(), doc.to_json());
    }
});

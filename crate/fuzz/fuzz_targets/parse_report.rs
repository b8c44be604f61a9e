#![no_main]
use homhopf_cli::parse_report;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(r) = parse_report(s) {
        let _ = r.to_text();
        assert_eq!(parse_report(&r.to_json()).unwrap(), r);
    }
});

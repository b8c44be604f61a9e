#![no_main]
use homhopf_core::foundation::{parse_scalar, scalar_to_string};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Some(x) = parse_scalar(s) {
        assert_eq!(parse_scalar(&scalar_to_string(&x)), Some(x));
    }
});

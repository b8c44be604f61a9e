//! Replays the fuzz seed corpora through the assertions the fuzz targets make.

use std::fs;
use std::path::PathBuf;

use homhopf_cli::{parse_input_str, parse_report};
use homhopf_core::foundation::{parse_scalar, scalar_to_string};

fn corpus(target: &str) -> Vec<String> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<String> = fs::read_dir(dir)
        .unwrap()
        .map(|e| fs::read_to_string(e.unwrap().path()).unwrap())
        .collect();
    out.sort();
    assert!(!out.is_empty());
    out
}

#[test]
fn input_seeds() {
    let mut parsed = 0;
    for s in corpus("parse_input") {
        if let Ok(doc) = parse_input_str(&s) {
            let again = parse_input_str(&doc.to_json().to_string()).unwrap();
            assert_eq!(again.to_json(), doc.to_json());
            parsed += 1;
        }
    }
    assert!(parsed >= 7);
}

#[test]
fn report_seeds() {
    for s in corpus("parse_report") {
        let r = parse_report(&s).unwrap();
        assert_eq!(parse_report(&r.to_json()).unwrap(), r);
    }
}

#[test]
fn scalar_seeds() {
    let mut rejected = 0;
    for s in corpus("parse_scalar") {
        match parse_scalar(&s) {
            Some(x) => assert_eq!(parse_scalar(&scalar_to_string(&x)), Some(x)),
            None => rejected += 1,
        }
    }
    // only the zero denominator is refused
    assert_eq!(rejected, 1);
}

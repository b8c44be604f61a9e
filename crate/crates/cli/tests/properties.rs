use homhopf_cli::{parse_input_str, IssueKind};
use proptest::prelude::*;
use serde_json::json;

fn rational() -> impl Strategy<Value = (i64, i64)> {
    (-6i64..=6, 1i64..=4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parser_never_panics(text in "\\PC{0,200}") {
        let _ = parse_input_str(&text);
    }

    #[test]
    fn twist_matrices_round_trip(entries in proptest::collection::vec(rational(), 4)) {
        let cells: Vec<String> = entries.iter().map(|(p, q)| format!("{p}/{q}")).collect();
        let matrix = json!([[cells[0], cells[1]], [cells[2], cells[3]]]);
        let text = json!({ "hom_lie": { "g": { "dim": 2, "bracket": [], "phi": { "matrix": matrix } } } }).to_string();
        let det = entries[0].0 * entries[3].0 * entries[1].1 * entries[2].1
            - entries[1].0 * entries[2].0 * entries[0].1 * entries[3].1;
        match parse_input_str(&text) {
            Ok(doc) => {
                prop_assert!(det != 0);
                let again = parse_input_str(&doc.to_json().to_string()).unwrap();
                prop_assert_eq!(&again.hom_lie["g"], &doc.hom_lie["g"]);
            }
            Err(e) => {
                prop_assert_eq!(det, 0);
                prop_assert_eq!(e.issues[0].kind, IssueKind::InverseMismatch);
            }
        }
    }
}

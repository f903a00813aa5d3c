//! The document parser and validation pipeline must never panic on
//! untrusted input: the same property the fuzz targets in fuzz/ exercise
//! under libFuzzer, mirrored here so it runs on every `cargo test`.

use proptest::prelude::*;

use uncertainty_cli::bounds::{run_bounds, PerpMode};
use uncertainty_cli::io::{
    operators_from_document, parse_problem_document, perp_from_document, state_from_document,
};

proptest! {
    #[test]
    fn arbitrary_bytes_never_panic(bytes in proptest::collection::vec(any::<u8>(), 0..512)) {
        let _ = parse_problem_document(&bytes);
    }

    #[test]
    fn json_fragments_never_panic(s in "[\\{\\}\\[\\],:0-9eE+\\-\\.\"aAbBstate_perp ]{0,256}") {
        let _ = parse_problem_document(s.as_bytes());
    }

    #[test]
    fn random_documents_drive_pipeline_without_panic(
        dim in 2usize..5,
        state in proptest::collection::vec((-2.0f64..2.0, -2.0f64..2.0), 2..5),
        entries in proptest::collection::vec((-2.0f64..2.0, -2.0f64..2.0), 4..25),
        hermitize in any::<bool>(),
    ) {
        let state_json: Vec<String> = state.iter().map(|(re, im)| format!("[{re},{im}]")).collect();
        let mut rows = Vec::new();
        for i in 0..dim {
            let mut row = Vec::new();
            for j in 0..dim {
                let (re, im) = entries[(i * dim + j) % entries.len()];
                // optionally make it Hermitian so both accept and reject paths run
                if hermitize && i > j {
                    let (re2, im2) = entries[(j * dim + i) % entries.len()];
                    row.push(format!("[{re2},{}]", -im2));
                } else {
                    row.push(format!("[{re},{im}]"));
                }
            }
            rows.push(format!("[{}]", row.join(",")));
        }
        if hermitize {
            // zero the diagonal imaginary parts
            rows = (0..dim).map(|i| {
                let mut row = Vec::new();
                for j in 0..dim {
                    if i == j {
                        let (re, _) = entries[(i * dim + j) % entries.len()];
                        row.push(format!("[{re},0.0]"));
                    } else if i > j {
                        let (re, im) = entries[(j * dim + i) % entries.len()];
                        row.push(format!("[{re},{}]", -im));
                    } else {
                        let (re, im) = entries[(i * dim + j) % entries.len()];
                        row.push(format!("[{re},{im}]"));
                    }
                }
                format!("[{}]", row.join(","))
            }).collect();
        }
        let matrix = format!("[{}]", rows.join(","));
        let json = format!(
            r#"{{"state": [{}], "A": {matrix}, "B": {matrix}}}"#,
            state_json.join(",")
        );
        if let Ok(doc) = parse_problem_document(json.as_bytes()) {
            let _ = state_from_document(&doc);
            let _ = operators_from_document(&doc);
            let _ = perp_from_document(&doc);
            let _ = run_bounds(&doc, PerpMode::Random, 3);
            let _ = run_bounds(&doc, PerpMode::Saturating, 3);
        }
    }
}

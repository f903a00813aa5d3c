#![no_main]

use libfuzzer_sys::fuzz_target;

use uncertainty_cli::io::{
    operators_from_document, parse_problem_document, perp_from_document, state_from_document,
};

fuzz_target!(|data: &[u8]| {
    let Ok(doc) = parse_problem_document(data) else {
        return;
    };
    let _ = state_from_document(&doc);
    let _ = operators_from_document(&doc);
    let _ = perp_from_document(&doc);
});

#![no_main]

use libfuzzer_sys::fuzz_target;

use uncertainty_cli::bounds::{run_bounds, PerpMode};
use uncertainty_cli::io::parse_problem_document;

fuzz_target!(|data: &[u8]| {
    let Ok(doc) = parse_problem_document(data) else {
        return;
    };
    // bound the matrix work per input; validation itself is size-agnostic
    let dim = doc.a.as_ref().map_or(0, Vec::len);
    let state_len = doc.state.as_ref().map_or(0, Vec::len);
    if dim > 16 || state_len > 16 {
        return;
    }
    for mode in [PerpMode::Random, PerpMode::Saturating, PerpMode::File] {
        let _ = run_bounds(&doc, mode, 0);
    }
});

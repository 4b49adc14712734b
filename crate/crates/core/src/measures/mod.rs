//! Bounds, direct evaluation of the three measures, and the certificates
//! that back the values.

mod bell;
mod bounds;
mod decomposition;
mod report;

pub use bell::{
    bell_extraction, bell_extraction_with, extract_bell_pairs, verify_extraction, BellExtraction,
    BellExtractionError, BellMove, BELL_MATCHING_CAP, BELL_STATE_CAP,
};
pub use bounds::{bounds, classify, BoundsReport, Classification};
pub use decomposition::{
    apply_lc_sequence, closest_product_state, closest_separable_state, css_stabilizer_form,
    css_stabilizer_form_with, decomposition_with, minimal_decomposition, separable_state_with,
    sign_function, transport_css, transport_state, Decomposition, SeparableStateDescription,
    StabilizerSumForm,
};
pub use report::{evaluate, EntanglementReport, MeasureValue, Measures};

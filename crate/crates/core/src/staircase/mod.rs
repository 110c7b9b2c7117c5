//! Staircase diagrams, labellings, the `Λ` map and generating series.

mod bijection;
mod diagram;
mod enumerate;
mod labelling;
mod series;

pub use bijection::{
    complete_bp_bijection_check, count_diagrams, iterated_bp_holds, smooth_bijection_check,
    BijectionReport,
};
pub use diagram::{AxiomViolation, DiagramJson, StaircaseDiagram};
pub use enumerate::{
    broken_intervals, connected_blocks, dyck_decode, dyck_encode, enumerate_diagrams,
    increasing_intervals, is_increasing, DiagramFilter, DyckPath,
};
pub use labelling::{
    is_nearly_maximal, is_nearly_maximal_element, label_ok, lambda_bar, lambda_max,
    lambda_product, lambda_product_along, maximal_labelling, validate_labelling, LabelViolation,
    Labelling, NearlyMaximalLabels,
};
pub use series::{
    broken_counts, catalan, series_coefficients, sqrt_one_minus_4t, SeriesName, SeriesSpec,
};

//! Double Ore extensions in two variables over polynomial rings: exact
//! normal-form arithmetic, consistency checks, skew PBW classification and
//! a free-algebra oracle for Hilbert series.

pub mod catalogue;
pub mod classify;
pub mod dsl;
pub mod element;
pub mod engine;
pub mod error;
pub mod linalg;
pub mod maps;
pub mod oracle;
pub mod poly;
pub mod presentation;
pub mod report;
pub mod scalar;
pub mod verdict;

pub use catalogue::{default_example, get_example, Example};
pub use classify::{
    check_graded_biconditional, check_trimmed_biconditional, classify, doe_to_spbw,
    is_double_via_det, spbw_to_doe, ClassificationReport, SpbwView,
};
pub use dsl::{parse_element, parse_presentation, parse_presentation_with, print_presentation, PresentationSource};
pub use element::{Element, XMonomial};
pub use engine::{multiply, x_times_ring, Engine};
pub use error::{Error, Result};
pub use maps::{Column2, EndoDescriptor, Matrix2, StructureMaps};
pub use oracle::{free_dims, hilbert_closed_form, pbw_freeness_check, FreenessCertificate, OracleMode, DEFAULT_WORD_CAP};
pub use poly::{BasePoly, RingDescriptor};
pub use presentation::{
    det_sigma, det_sigma_endo, grading_check, overlap_consistency_check, DoePresentation, PresentationData,
};
pub use report::ReportDocument;
pub use scalar::Scalar;
pub use verdict::{Decision, Verdict};

//! Relation-suite engine: instantiates every defining, minimal, derived,
//! pure-Lie, coproduct, coassociativity, and two-parameter identity as an
//! exact operator equation, evaluates on certified windows, and aggregates
//! serializable reports. A pass is a bit-exact zero; a fail carries one
//! nonzero witness entry; inconclusive marks an empty certified window or a
//! missing operator, and never counts as a pass.

pub mod relations;
pub mod report;
pub mod suites;

pub use report::{CaseReport, ConfigDump, RelationId, Status, SuiteReport, Summary, Witness};
pub use suites::{
    build_units, negative_control_delta, negative_control_hx2, run_suite, run_suite_mode,
    run_units, scalar_choices, Backend, CheckUnit, Config, Suite,
};

//! Instance generators and machine checks of the regularity bounds, with
//! JSON-lines reports.

mod check;
mod instance;
mod run;
mod suite;

pub use check::CheckId;
pub use instance::{
    enumerate_instances, matroid_complexes, partition_matroid, random_instance, uniform_matroid, Instance,
    InstanceKind, MAX_FAMILY_VERTICES, MAX_GRAPH_VERTICES, MAX_MATROID_GROUND_SET, MAX_RANDOM_VERTICES,
};
pub use run::{run_checks, CheckConfig, CheckRecord, Status, MAX_N};
pub use suite::{run_suite, suite_instances, SuiteConfig, SuiteReport};

//! Scenario runner for the k3kit checks: parses scenario files, runs them in
//! parallel and renders text or JSON reports.

pub mod bundled;
pub mod report;
pub mod run;
pub mod scenario;

pub use bundled::bundled;
pub use report::{emit, Format, Report, ScenarioReport, Status};
pub use run::{run, run_all, RunOptions};
pub use scenario::{parse_scenario, parse_scenarios, Kind, Scenario, ScenarioError};

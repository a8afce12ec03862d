use crate::scenario::{parse_scenarios, Scenario};

/// Scenario files compiled into the binary, by file name.
pub const FILES: &[(&str, &str)] = &[
    ("fibers.scn", include_str!("../scenarios/fibers.scn")),
    ("lattices.scn", include_str!("../scenarios/lattices.scn")),
    ("hermite.scn", include_str!("../scenarios/hermite.scn")),
    ("constructions.scn", include_str!("../scenarios/constructions.scn")),
];

/// All bundled scenarios. The files are checked by the test suite, so a
/// parse failure here is a build defect.
pub fn bundled() -> Vec<Scenario> {
    FILES
        .iter()
        .flat_map(|(name, text)| parse_scenarios(text).unwrap_or_else(|e| panic!("bundled {name}: {e}")))
        .collect()
}

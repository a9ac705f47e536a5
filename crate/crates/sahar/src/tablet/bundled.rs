//! Scripts shipped with the crate, one per attested procedure.

use super::{parse_script, Script};

/// Catalog row for one bundled script.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BundledInfo {
    pub name: &'static str,
    pub tablet: &'static str,
    pub lines: &'static str,
    pub summary: &'static str,
}

const SMT14_P1: &str = include_str!("scripts/smt14_p1.tablet");
const SMT14_P2: &str = include_str!("scripts/smt14_p2.tablet");
const BM85194_R41: &str = include_str!("scripts/bm85194_r41.tablet");

const CATALOG: [(BundledInfo, &str); 3] = [
    (
        BundledInfo {
            name: "SMT14-P1",
            tablet: "SMT No. 14",
            lines: "Obv. L1-L17",
            summary: "grain-heap: volume and height to top length, width, length",
        },
        SMT14_P1,
    ),
    (
        BundledInfo {
            name: "SMT14-P2",
            tablet: "SMT No. 14",
            lines: "Rev. L1-L7",
            summary: "grain capacity of the heap via the storage constant",
        },
        SMT14_P2,
    ),
    (
        BundledInfo {
            name: "BM85194-R41",
            tablet: "BM 85194",
            lines: "Rev. II L41-L49",
            summary: "square excavation with sloping sides, frustum volume",
        },
        BM85194_R41,
    ),
];

pub fn list_bundled() -> Vec<BundledInfo> {
    CATALOG.iter().map(|(info, _)| *info).collect()
}

pub fn bundled_source(name: &str) -> Option<&'static str> {
    CATALOG
        .iter()
        .find(|(info, _)| info.name == name)
        .map(|(_, src)| *src)
}

/// Parses a bundled script by name. The sources are covered by tests,
/// so parsing cannot fail here.
pub fn bundled(name: &str) -> Option<Script> {
    bundled_source(name).map(|src| parse_script(src).expect("bundled script parses"))
}

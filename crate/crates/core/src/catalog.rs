//! Reference conformations. Each entry is a `.knotw` document compiled into
//! the crate together with the knot type it must classify as.

use alloc::vec::Vec;

use crate::knot_id::KnotTag;
use crate::lattice::{parse_knotw, Lattice, Polygon};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub lattice: Lattice,
    /// Full `.knotw` text.
    pub text: &'static str,
    pub expected: KnotTag,
    pub provenance: &'static str,
}

impl CatalogEntry {
    pub fn polygon(&self) -> Polygon {
        parse_knotw(self.text).expect("catalog entries parse")
    }
}

macro_rules! entry {
    ($name:literal, $lattice:expr, $tag:expr, $prov:literal) => {
        CatalogEntry {
            name: $name,
            lattice: $lattice,
            text: include_str!(concat!("../catalog/", $name, ".knotw")),
            expected: $tag,
            provenance: $prov,
        }
    };
}

pub const ENTRIES: &[CatalogEntry] = &[
    entry!("square", Lattice::Cubic, KnotTag::Unknot, "unit square"),
    entry!("square_sh", Lattice::Sh, KnotTag::Unknot, "unit rhombus"),
    entry!("hexagon", Lattice::Sh, KnotTag::Unknot, "unit hexagon"),
    entry!("trefoil_cubic12", Lattice::Cubic, KnotTag::K3_1, "12 sticks, 24 edges; bounded depth-first search"),
    entry!("trefoil_sh11", Lattice::Sh, KnotTag::K3_1, "default census at max stick length 3"),
    entry!("figure_eight_sh11", Lattice::Sh, KnotTag::K4_1, "default census at max stick length 6"),
];

pub fn entries() -> &'static [CatalogEntry] {
    ENTRIES
}

pub fn get(name: &str) -> Option<&'static CatalogEntry> {
    ENTRIES.iter().find(|e| e.name == name)
}

pub fn of_lattice(lattice: Lattice) -> Vec<&'static CatalogEntry> {
    ENTRIES.iter().filter(|e| e.lattice == lattice).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot_id::classify;
    use crate::lattice::validate;

    #[test]
    fn entries_reclassify() {
        for e in ENTRIES {
            let p = e.polygon();
            assert_eq!(p.lattice(), e.lattice, "{}", e.name);
            assert!(validate(&p).is_valid(), "{}", e.name);
            assert_eq!(classify(&p).unwrap().tag, e.expected, "{}", e.name);
        }
    }
}

//! Fixed inputs shared by the benchmarks.

use cardy_core::io::{parse_json, GroupDocument, GroupInput};
use cardy_core::{CardyFrobeniusAlgebra, SurfaceSpec, DEFAULT_ORDER_BOUND};

pub const S4_TRIVIAL: &str = include_str!("../../../data/groups/s4_trivial.json");
pub const S4_DOUBLE_TRANSPOSITION: &str = include_str!("../../../data/groups/s4_double_transposition.json");
pub const A5_Z2: &str = include_str!("../../../data/groups/a5_z2.json");

pub fn group_input(text: &str) -> GroupInput {
    let doc: GroupDocument = parse_json(text).expect("bundled group document parses");
    doc.build(DEFAULT_ORDER_BOUND).expect("bundled group builds")
}

pub fn algebra(text: &str) -> CardyFrobeniusAlgebra {
    let input = group_input(text);
    CardyFrobeniusAlgebra::from_pair(&input.group, &input.k).expect("bundled pair builds")
}

/// Genus one, one interior point, two contours with chained boundary fields.
pub fn sample_surface(h: &CardyFrobeniusAlgebra) -> SurfaceSpec {
    let label = |x: usize, y: usize| h.catalog.boundary[h.catalog.orbit_of(x, y)].label.clone();
    let last = h.reps.dimension - 1;
    SurfaceSpec {
        orientable: true,
        twice_genus: 2,
        interior: vec![h.catalog.interior[h.a.dim() - 1].label.clone()],
        boundary: vec![vec![label(0, last), label(last, 0)], vec![label(last, last)]],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_build() {
        let h = algebra(A5_Z2);
        assert_eq!(h.b.dim(), 40);
        assert!(cardy_core::evaluate(&h, &sample_surface(&h)).is_ok());
    }
}

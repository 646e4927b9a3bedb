#![allow(dead_code)]

use std::io::Write;

use cardy_core::io::{parse_json, GroupDocument, GroupInput};
use cardy_core::{CardyFrobeniusAlgebra, SurfaceSpec, DEFAULT_ORDER_BOUND};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SPECS_PER_PAIR: usize = 30;
pub const CORPUS_SEED: u64 = 0x00C0_FFEE;

pub const GROUP_FILES: [(&str, &str); 7] = [
    ("Z2/{e}", include_str!("../../../../data/groups/z2_trivial.json")),
    ("Z3/{e}", include_str!("../../../../data/groups/z3_trivial.json")),
    ("S3/{e}", include_str!("../../../../data/groups/s3_trivial.json")),
    ("S3/<(0 1)>", include_str!("../../../../data/groups/s3_transposition.json")),
    ("S4/{e}", include_str!("../../../../data/groups/s4_trivial.json")),
    ("S4/<(0 1)(2 3)>", include_str!("../../../../data/groups/s4_double_transposition.json")),
    ("A5/<(0 1)(2 3)>", include_str!("../../../../data/groups/a5_z2.json")),
];

pub struct Pair {
    pub name: &'static str,
    pub input: GroupInput,
    pub h: CardyFrobeniusAlgebra,
}

pub fn load(name: &str) -> Pair {
    let (name, text) = GROUP_FILES.iter().find(|(n, _)| *n == name).expect("known pair");
    build(name, text)
}

fn build(name: &'static str, text: &str) -> Pair {
    let doc: GroupDocument = parse_json(text).unwrap();
    let input = doc.build(DEFAULT_ORDER_BOUND).unwrap();
    let h = CardyFrobeniusAlgebra::from_pair(&input.group, &input.k).unwrap();
    Pair { name, input, h }
}

pub fn suite() -> Vec<Pair> {
    GROUP_FILES.iter().map(|(name, text)| build(name, text)).collect()
}

/// A contour read off a closed chain of points, so that its T-tensor is
/// nonzero.
fn chain_contour(h: &CardyFrobeniusAlgebra, len: usize, rng: &mut ChaCha8Rng) -> Vec<String> {
    let npts = h.reps.dimension;
    let mut points: Vec<usize> = (0..len).map(|_| rng.gen_range(0..npts)).collect();
    points.push(points[0]);
    points.windows(2).map(|w| h.catalog.boundary[h.catalog.orbit_of(w[0], w[1])].label.clone()).collect()
}

/// `count` random specs with ε ∈ {0,1}, 2g ≤ 4, m ≤ 2, s ≤ 2, m_i ≤ 2.
pub fn corpus(h: &CardyFrobeniusAlgebra, seed: u64, count: usize) -> Vec<SurfaceSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let interior: Vec<String> = h.catalog.interior.iter().map(|f| f.label.clone()).collect();
    let boundary: Vec<String> = h.catalog.boundary.iter().map(|f| f.label.clone()).collect();
    (0..count)
        .map(|_| {
            let orientable = rng.gen_bool(0.5);
            let twice_genus = if orientable { 2 * rng.gen_range(0..=2) } else { rng.gen_range(1..=4) };
            let m = rng.gen_range(0..=2);
            let s = rng.gen_range(0..=2);
            let interior_fields = (0..m).map(|_| interior.choose(&mut rng).unwrap().clone()).collect();
            let contours = (0..s)
                .map(|_| {
                    let len = rng.gen_range(1..=2);
                    if rng.gen_bool(0.5) {
                        chain_contour(h, len, &mut rng)
                    } else {
                        (0..len).map(|_| boundary.choose(&mut rng).unwrap().clone()).collect()
                    }
                })
                .collect();
            SurfaceSpec { orientable, twice_genus, interior: interior_fields, boundary: contours }
        })
        .collect()
}

pub fn pair_corpus(index: usize, pair: &Pair) -> Vec<SurfaceSpec> {
    corpus(&pair.h, CORPUS_SEED + index as u64, SPECS_PER_PAIR)
}

/// Writes a criterion line past the test harness's output capture.
pub fn announce(criterion: &str, passed: bool, detail: &str) {
    let status = if passed { "PASS" } else { "FAIL" };
    let mut err = std::io::stderr().lock();
    let _ = writeln!(err, "criterion {criterion}: {status} ({detail})");
}

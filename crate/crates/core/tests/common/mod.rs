#![allow(dead_code)]

use std::path::PathBuf;

use zzosp::algebras::verify_block_conditions;
use zzosp::{AlgebraSpec, Degree};

/// All `(m1, m2, n1, n2)` with `m1 + m2 ≤ 2` and `n1 + n2 ≤ 2`.
pub fn grid() -> Vec<(usize, usize, usize, usize)> {
    let pairs: Vec<(usize, usize)> = (0..=2).flat_map(|a| (0..=2 - a).map(move |b| (a, b))).collect();
    pairs.iter().flat_map(|&(m1, m2)| pairs.iter().map(move |&(n1, n2)| (m1, m2, n1, n2))).collect()
}

pub fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden").join(name)
}

/// Set to regenerate golden files instead of comparing against them.
pub fn blessing() -> bool {
    std::env::var_os("ZZOSP_BLESS").is_some()
}

pub const REPORT_GOLDEN: &str = "report_ospB_1_1_1_1.json";
pub const ADJUDICATION_GOLDEN: &str = "block_adjudication_ospB_1_1_1_1.json";

pub fn report_args(jobs: usize) -> Vec<String> {
    "report --algebra ospB --m1 1 --m2 1 --n1 1 --n2 1 --jobs"
        .split_whitespace()
        .map(String::from)
        .chain([jobs.to_string()])
        .collect()
}

pub fn adjudication_json() -> String {
    let adj = verify_block_conditions(&AlgebraSpec::osp_b(1, 1, 1, 1)).unwrap();
    let mut s = serde_json::to_string_pretty(&adj).unwrap();
    s.push('\n');
    s
}

/// `a1 b1 + a2 b2 mod 2` from the bit pair.
pub fn dot(a: Degree, b: Degree) -> i64 {
    let (a1, a2) = (a.a1() as i64, a.a2() as i64);
    let (b1, b2) = (b.a1() as i64, b.a2() as i64);
    (a1 * b1 + a2 * b2) % 2
}

/// Block sign table of the graded supertranspose: block `(r, c)` of `Aᵀ`
/// is `sign[r][c]·(A_{c,r})ᵗ`, blocks ordered (0,0), (1,1), (1,0), (0,1).
pub const SIGN_TABLE: [[i64; 4]; 4] = [[1, 1, -1, -1], [1, 1, 1, 1], [1, -1, 1, -1], [1, -1, -1, 1]];

pub fn block(d: Degree) -> usize {
    match (d.a1(), d.a2()) {
        (0, 0) => 0,
        (1, 1) => 1,
        (1, 0) => 2,
        _ => 3,
    }
}

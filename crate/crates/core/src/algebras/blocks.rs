//! Block-level description of osp(2m1+1,2m2|2n1,2n2) and its adjudication
//! against the defining condition `AᵀJ + JA = 0`.
//!
//! Type-B matrices are cut into a 9×9 grid of blocks with row/column sizes
//! `m1, m2, m1, m2, 1, n1, n2, n1, n2`. The published block relations are
//! transcribed verbatim (including two malformed degree subscripts) and each
//! one is tested against the kernel basis, together with its sign-flipped
//! variant, so the report shows exactly which reading is consistent.

use serde::{Deserialize, Serialize};

use crate::gmatrix::GradedMatrix;
use crate::grading::{Degree, Signature};
use crate::linalg::Echelon;
use crate::report::{CheckReport, Counterexample};
use crate::scalars::Scalar;

use super::{kernel_basis, AlgebraError, AlgebraSpec, Family};

/// A named block such as `a^{[2,3]}` with the degree subscript as printed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockRef {
    pub name: String,
    /// 1-based position in the 9×9 block grid.
    pub grid: (usize, usize),
    /// The printed degree subscript, or `None` where it is malformed.
    pub printed_degree: Option<Degree>,
    pub printed_text: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RelationKind {
    /// `lhs = sign · rhsᵗ`
    Transposed,
    Skew,
    Symmetric,
    Zero,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockRelation {
    pub kind: RelationKind,
    pub lhs: BlockRef,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<BlockRef>,
    /// Printed sign for transposition relations.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign: Option<i8>,
}

impl BlockRelation {
    pub fn describe(&self) -> String {
        match (self.kind, &self.rhs, self.sign) {
            (RelationKind::Transposed, Some(r), Some(s)) => {
                format!("{} = {}{}^t", self.lhs.printed_text, if s < 0 { "-" } else { "" }, r.printed_text)
            }
            (RelationKind::Skew, _, _) => format!("{} skew symmetric", self.lhs.printed_text),
            (RelationKind::Symmetric, _, _) => format!("{} symmetric", self.lhs.printed_text),
            _ => format!("{} = 0", self.lhs.printed_text),
        }
    }
}

/// Outcome for one relation over the whole kernel basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationVerdict {
    pub relation: String,
    pub holds_as_printed: bool,
    /// Which readings hold on the algebra: for transpositions `"+"`/`"-"`,
    /// otherwise `"skew"`, `"symmetric"`, `"zero"`.
    pub consistent_readings: Vec<String>,
    /// Whether printed degree subscripts equal the grid degrees of the blocks.
    pub degree_labels: DegreeLabels,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum DegreeLabels {
    Match,
    Mismatch { block: String, printed: Degree, grid: Degree },
    Malformed { block: String, printed_text: String, grid: Degree },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockAdjudication {
    pub spec: AlgebraSpec,
    pub kernel_dim: usize,
    /// Dimension of the matrices satisfying every printed relation.
    pub printed_solution_dim: usize,
    /// Same, after replacing each failing relation by its consistent reading
    /// (when exactly one exists).
    pub adjudicated_solution_dim: usize,
    pub relations: Vec<RelationVerdict>,
    pub report: CheckReport,
}

impl BlockAdjudication {
    pub fn discrepancies(&self) -> impl Iterator<Item = &RelationVerdict> {
        self.relations
            .iter()
            .filter(|v| !v.holds_as_printed || !matches!(v.degree_labels, DegreeLabels::Match))
    }
}

/// The block relations as published, one line per source line.
const PRINTED: &[(&str, &str, i8)] = &[
    ("a[3,3](0,0)", "a[1,1](0,0)", -1),
    ("a[3,4](1,1)", "a[2,1](1,1)", -1),
    ("a[4,3](1,1)", "a[1,2](1,1)", -1),
    ("a[4,4](0,0)", "a[2,2](0,0)", -1),
    ("a[2,3]1,1)", "a[1,4](1,1)", -1),
    ("a[4,1](1,1)", "a[3,2](1,1)", -1),
    ("a[1,3](0,0)", "skew", 0),
    ("a[2,4](0,0)", "skew", 0),
    ("a[3,1](0,0)", "skew", 0),
    ("a[4,2](0,0)", "skew", 0),
    ("a[5,1](0,0)", "a[3,5](0,0)", -1),
    ("a[5,2](1,1)", "a[4,5](1,1)", -1),
    ("a[5,3](0,0)", "a[1,5](0,0)", -1),
    ("a[5,4](1,1)", "a[2,5](1,1)", -1),
    ("a[5,5](0,0)", "zero", 0),
    ("d[3,3](0,0)", "d[1,1](0,0)", -1),
    ("d[3,4](1,1)", "d[2,1](1,1)", 1),
    ("d[4,3](1,1)", "d[1,2](1,1)", 1),
    ("d[4,4](0,0)", "d[2,2](0,0)", -1),
    ("d[2,3]1,1)", "d[1,4](1,1)", -1),
    ("d[4,1](1,1)", "d[3,2](1,1)", -1),
    ("d[1,3](0,0)", "symmetric", 0),
    ("d[2,4](0,0)", "symmetric", 0),
    ("d[3,1](0,0)", "symmetric", 0),
    ("d[4,2](0,0)", "symmetric", 0),
    ("c[1,1](1,0)", "b[3,3](1,0)", 1),
    ("c[1,2](0,1)", "b[4,3](0,1)", -1),
    ("c[1,3](1,0)", "b[1,3](1,0)", 1),
    ("c[1,4](0,1)", "b[2,3](0,1)", -1),
    ("c[1,5](1,0)", "b[5,3](1,0)", 1),
    ("c[2,1](0,1)", "b[3,4](0,1)", 1),
    ("c[2,2](1,0)", "b[4,4](1,0)", -1),
    ("c[2,3](0,1)", "b[1,4](0,1)", 1),
    ("c[2,4](1,0)", "b[2,4](1,0)", -1),
    ("c[2,5](0,1)", "b[5,4](0,1)", 1),
    ("c[3,1](1,0)", "b[3,1](1,0)", -1),
    ("c[3,2](0,1)", "b[4,1](0,1)", 1),
    ("c[3,3](1,0)", "b[1,1](1,0)", -1),
    ("c[3,4](0,1)", "b[2,1](0,1)", 1),
    ("c[3,5](1,0)", "b[5,1](1,0)", -1),
    ("c[4,1](0,1)", "b[3,2](0,1)", -1),
    ("c[4,2](1,0)", "b[4,2](1,0)", 1),
    ("c[4,3](0,1)", "b[1,2](0,1)", -1),
    ("c[4,4](1,0)", "b[2,2](1,0)", 1),
    ("c[4,5](0,1)", "b[5,2](0,1)", -1),
];

fn parse_block(text: &str) -> BlockRef {
    let letter = text.as_bytes()[0] as char;
    let close = text.find(']').expect("block text has an index");
    let nums: Vec<usize> = text[2..close].split(',').map(|s| s.parse().expect("block index")).collect();
    let (r, c) = (nums[0], nums[1]);
    let grid = match letter {
        'a' => (r, c),
        'b' => (r, c + 5),
        'c' => (r + 5, c),
        'd' => (r + 5, c + 5),
        _ => unreachable!("block letters are a-d"),
    };
    let suffix = &text[close + 1..];
    let printed_degree = suffix
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .and_then(|s| {
            let bits: Vec<u8> = s.split(',').filter_map(|x| x.parse().ok()).collect();
            (bits.len() == 2).then(|| Degree::new(bits[0], bits[1]))
        });
    BlockRef { name: format!("{letter}[{r},{c}]"), grid, printed_degree, printed_text: text.to_string() }
}

/// The transcribed block relations.
pub fn printed_relations() -> Vec<BlockRelation> {
    PRINTED
        .iter()
        .map(|&(lhs, rhs, sign)| {
            let lhs = parse_block(lhs);
            match rhs {
                "skew" => BlockRelation { kind: RelationKind::Skew, lhs, rhs: None, sign: None },
                "symmetric" => BlockRelation { kind: RelationKind::Symmetric, lhs, rhs: None, sign: None },
                "zero" => BlockRelation { kind: RelationKind::Zero, lhs, rhs: None, sign: None },
                _ => BlockRelation { kind: RelationKind::Transposed, lhs, rhs: Some(parse_block(rhs)), sign: Some(sign) },
            }
        })
        .collect()
}

/// Index ranges of the 9 row/column blocks.
struct Grid {
    offsets: [usize; 10],
    degrees: [Degree; 9],
}

impl Grid {
    fn new(spec: &AlgebraSpec) -> Self {
        let blocks = Signature::osp_blocks(spec.m1, spec.m2, spec.n1, spec.n2);
        let mut offsets = [0; 10];
        for (k, (n, _)) in blocks.iter().enumerate() {
            offsets[k + 1] = offsets[k] + n;
        }
        Grid { offsets, degrees: blocks.map(|(_, d)| d) }
    }

    fn range(&self, k: usize) -> std::ops::Range<usize> {
        self.offsets[k - 1]..self.offsets[k]
    }

    fn degree(&self, (r, c): (usize, usize)) -> Degree {
        self.degrees[r - 1] + self.degrees[c - 1]
    }
}

/// One linear equation `Σ coeff · A[i][j] = 0` per entry of the relation.
fn equations(grid: &Grid, rel: &BlockRelation, sign: i64) -> Equations {
    let rows = grid.range(rel.lhs.grid.0);
    let cols = grid.range(rel.lhs.grid.1);
    let mut out = Vec::new();
    for (r, i) in rows.clone().enumerate() {
        for (c, j) in cols.clone().enumerate() {
            let eq = match rel.kind {
                RelationKind::Zero => vec![((i, j), 1)],
                // within one block, (r, c) ↔ (c, r) at the same offsets
                RelationKind::Skew => vec![((i, j), 1), ((rows.start + c, cols.start + r), 1)],
                RelationKind::Symmetric => vec![((i, j), 1), ((rows.start + c, cols.start + r), -1)],
                RelationKind::Transposed => {
                    let rhs = rel.rhs.as_ref().expect("transposition has a right-hand side");
                    let rrows = grid.range(rhs.grid.0);
                    let rcols = grid.range(rhs.grid.1);
                    assert_eq!((rrows.len(), rcols.len()), (cols.len(), rows.len()), "block shapes");
                    vec![((i, j), 1), ((rrows.start + c, rcols.start + r), -sign)]
                }
            };
            out.push(eq);
        }
    }
    out
}

fn residual_of(a: &GradedMatrix, eqs: &[Vec<((usize, usize), i64)>]) -> GradedMatrix {
    let mut triples = Vec::new();
    for eq in eqs {
        let value = eq.iter().fold(Scalar::zero(), |acc, &((i, j), c)| &acc + &(&Scalar::from_int(c) * &a.get(i, j)));
        if !value.is_zero() {
            let (pos, _) = eq[0];
            triples.push((pos.0, pos.1, value));
        }
    }
    GradedMatrix::from_triples(a.signature().clone(), triples).expect("indices in range")
}

fn holds_on(basis: &[GradedMatrix], eqs: &[Vec<((usize, usize), i64)>]) -> bool {
    basis.iter().all(|a| residual_of(a, eqs).is_zero())
}

/// Entrywise linear equations: each is a list of `((row, col), coefficient)`.
type Equations = Vec<Vec<((usize, usize), i64)>>;

fn solution_dim(size: usize, systems: &[Equations]) -> usize {
    let width = size * size;
    let mut ech = Echelon::new(width);
    for eqs in systems {
        for eq in eqs {
            let mut row = vec![Scalar::zero(); width];
            for &((i, j), c) in eq {
                row[i * size + j] = &row[i * size + j] + &Scalar::from_int(c);
            }
            ech.insert(&row);
        }
    }
    width - ech.rank()
}

fn degree_labels(grid: &Grid, rel: &BlockRelation) -> DegreeLabels {
    for b in std::iter::once(&rel.lhs).chain(rel.rhs.as_ref()) {
        let g = grid.degree(b.grid);
        match b.printed_degree {
            None => return DegreeLabels::Malformed { block: b.name.clone(), printed_text: b.printed_text.clone(), grid: g },
            Some(p) if p != g => return DegreeLabels::Mismatch { block: b.name.clone(), printed: p, grid: g },
            _ => {}
        }
    }
    DegreeLabels::Match
}

/// Tests every published block relation of type-B osp against the exact
/// kernel basis of `AᵀJ + JA = 0`.
pub fn verify_block_conditions(spec: &AlgebraSpec) -> Result<BlockAdjudication, AlgebraError> {
    if spec.family != Family::OspB {
        return Err(AlgebraError::UnsupportedFamily { family: spec.family, op: "verify_block_conditions" });
    }
    let basis = kernel_basis(spec)?;
    let grid = Grid::new(spec);
    let size = spec.size();
    let relations = printed_relations();

    let mut report = CheckReport::new("block_conditions", *spec);
    let mut verdicts = Vec::with_capacity(relations.len());
    let mut printed_systems = Vec::new();
    let mut adjudicated_systems = Vec::new();

    for rel in &relations {
        let printed_sign = rel.sign.map_or(1, i64::from);
        let printed = equations(&grid, rel, printed_sign);
        for (k, a) in basis.elements.iter().enumerate() {
            let residual = residual_of(a, &printed);
            report.record((!residual.is_zero()).then(|| Counterexample {
                indices: vec![k + 1],
                signs: None,
                relation: Some(rel.describe()),
                residual,
            }));
        }
        let holds_as_printed = holds_on(&basis.elements, &printed);

        let candidates: Vec<(String, Equations)> = match rel.kind {
            RelationKind::Transposed => vec![("+".into(), equations(&grid, rel, 1)), ("-".into(), equations(&grid, rel, -1))],
            RelationKind::Skew | RelationKind::Symmetric => {
                let skew = BlockRelation { kind: RelationKind::Skew, ..rel.clone() };
                let sym = BlockRelation { kind: RelationKind::Symmetric, ..rel.clone() };
                vec![("skew".into(), equations(&grid, &skew, 1)), ("symmetric".into(), equations(&grid, &sym, 1))]
            }
            RelationKind::Zero => vec![("zero".into(), printed.clone())],
        };
        let consistent: Vec<(String, Equations)> =
            candidates.into_iter().filter(|(_, eqs)| holds_on(&basis.elements, eqs)).collect();

        adjudicated_systems.push(if !holds_as_printed && consistent.len() == 1 {
            consistent[0].1.clone()
        } else {
            printed.clone()
        });
        printed_systems.push(printed);
        verdicts.push(RelationVerdict {
            relation: rel.describe(),
            holds_as_printed,
            consistent_readings: consistent.into_iter().map(|(name, _)| name).collect(),
            degree_labels: degree_labels(&grid, rel),
        });
    }

    Ok(BlockAdjudication {
        spec: *spec,
        kernel_dim: basis.len(),
        printed_solution_dim: solution_dim(size, &printed_systems),
        adjudicated_solution_dim: solution_dim(size, &adjudicated_systems),
        relations: verdicts,
        report,
    })
}

/// Extracts block `(r, c)` (1-based grid position) of a type-B matrix,
/// embedded at its own position.
pub fn block_of(spec: &AlgebraSpec, a: &GradedMatrix, grid_pos: (usize, usize)) -> GradedMatrix {
    let grid = Grid::new(spec);
    a.restrict(grid.range(grid_pos.0), grid.range(grid_pos.1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    #[test]
    fn transcription_shape() {
        let rels = printed_relations();
        assert_eq!(rels.len(), 45);
        let malformed: Vec<_> = rels.iter().filter(|r| r.lhs.printed_degree.is_none()).map(|r| r.lhs.name.clone()).collect();
        assert_eq!(malformed, vec!["a[2,3]", "d[2,3]"]);
    }

    #[test]
    fn so3_conditions_hold() {
        let adj = verify_block_conditions(&AlgebraSpec::osp_b(1, 0, 0, 0)).unwrap();
        assert_eq!(adj.kernel_dim, 3);
        for name in ["a[3,3](0,0) = -a[1,1](0,0)^t", "a[1,3](0,0) skew symmetric", "a[3,1](0,0) skew symmetric"] {
            let v = adj.relations.iter().find(|v| v.relation == name).unwrap();
            assert!(v.holds_as_printed, "{name}");
        }
    }

    #[test]
    fn zero_matrix_satisfies_everything() {
        let spec = AlgebraSpec::osp_b(1, 1, 1, 1);
        let grid = Grid::new(&spec);
        let zero = GradedMatrix::zero(Arc::new(spec.signature()));
        for rel in printed_relations() {
            let eqs = equations(&grid, &rel, rel.sign.map_or(1, i64::from));
            assert!(residual_of(&zero, &eqs).is_zero());
        }
    }

    #[test]
    fn other_families_are_rejected() {
        assert!(verify_block_conditions(&AlgebraSpec::osp_d(1, 0, 0, 0).unwrap()).is_err());
    }
}

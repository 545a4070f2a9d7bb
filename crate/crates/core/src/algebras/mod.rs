//! Matrix realizations of gl/sl(m1,m2|n1,n2) and the orthosymplectic algebras
//! osp(2m1+1,2m2|2n1,2n2) (type B) and osp(2m1,2m2|2n1,2n2) (type D).
//!
//! The orthosymplectic algebras are defined as the solution space of
//! `AᵀJ + JA = 0`, with `Aᵀ` the graded supertranspose. Two bases are built
//! independently: the spanning matrices `s_ij` (reduced to an independent
//! subset) and an exact kernel basis of the defining linear map.

mod blocks;
mod identities;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::grading::{GradingError, Signature};
use crate::gmatrix::{GradedMatrix, MatrixError};
use crate::linalg::{self, Echelon};
use crate::report::{nonzero_residual, CheckReport};
use crate::scalars::Scalar;

pub use blocks::{
    block_of, printed_relations, verify_block_conditions, BlockAdjudication, BlockRef, BlockRelation, DegreeLabels,
    RelationKind, RelationVerdict,
};
pub use identities::{verify_grading, verify_jacobi, verify_lie_reduction, verify_super_reduction, verify_symmetry};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("invalid algebra spec: {0}")]
    InvalidSpec(String),
    #[error("{op} is not defined for the {family} family")]
    UnsupportedFamily { family: Family, op: &'static str },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Grading(#[from] GradingError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "gl")]
    Gl,
    #[serde(rename = "sl")]
    Sl,
    #[serde(rename = "ospB")]
    OspB,
    #[serde(rename = "ospD")]
    OspD,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Gl => "gl",
            Family::Sl => "sl",
            Family::OspB => "ospB",
            Family::OspD => "ospD",
        }
    }

    pub fn is_osp(self) -> bool {
        matches!(self, Family::OspB | Family::OspD)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "gl" => Ok(Family::Gl),
            "sl" => Ok(Family::Sl),
            "ospb" | "b" => Ok(Family::OspB),
            "ospd" | "d" => Ok(Family::OspD),
            _ => Err(AlgebraError::InvalidSpec(format!("unknown algebra family '{s}' (expected gl, sl, ospB or ospD)"))),
        }
    }
}

/// A family together with its parameters `(m1, m2, n1, n2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSpec")]
pub struct AlgebraSpec {
    #[serde(rename = "algebra")]
    pub family: Family,
    pub m1: usize,
    pub m2: usize,
    pub n1: usize,
    pub n2: usize,
}

#[derive(Deserialize)]
struct RawSpec {
    algebra: Family,
    m1: usize,
    m2: usize,
    n1: usize,
    n2: usize,
}

impl TryFrom<RawSpec> for AlgebraSpec {
    type Error = AlgebraError;
    fn try_from(r: RawSpec) -> Result<Self, Self::Error> {
        AlgebraSpec::new(r.algebra, r.m1, r.m2, r.n1, r.n2)
    }
}

impl AlgebraSpec {
    pub fn new(family: Family, m1: usize, m2: usize, n1: usize, n2: usize) -> Result<Self, AlgebraError> {
        let spec = AlgebraSpec { family, m1, m2, n1, n2 };
        if spec.size() == 0 {
            return Err(AlgebraError::InvalidSpec(format!("{spec} has matrix size 0")));
        }
        Ok(spec)
    }

    pub fn gl(m1: usize, m2: usize, n1: usize, n2: usize) -> Result<Self, AlgebraError> {
        Self::new(Family::Gl, m1, m2, n1, n2)
    }

    pub fn sl(m1: usize, m2: usize, n1: usize, n2: usize) -> Result<Self, AlgebraError> {
        Self::new(Family::Sl, m1, m2, n1, n2)
    }

    /// osp(2m1+1, 2m2 | 2n1, 2n2); every parameter tuple is valid.
    pub fn osp_b(m1: usize, m2: usize, n1: usize, n2: usize) -> Self {
        AlgebraSpec { family: Family::OspB, m1, m2, n1, n2 }
    }

    pub fn osp_d(m1: usize, m2: usize, n1: usize, n2: usize) -> Result<Self, AlgebraError> {
        Self::new(Family::OspD, m1, m2, n1, n2)
    }

    pub fn m(&self) -> usize {
        self.m1 + self.m2
    }

    pub fn n(&self) -> usize {
        self.n1 + self.n2
    }

    /// Matrix size `M`.
    pub fn size(&self) -> usize {
        match self.family {
            Family::Gl | Family::Sl => self.m() + self.n(),
            Family::OspB => 2 * self.m() + 1 + 2 * self.n(),
            Family::OspD => 2 * self.m() + 2 * self.n(),
        }
    }

    pub fn signature(&self) -> Signature {
        let (m1, m2, n1, n2) = (self.m1, self.m2, self.n1, self.n2);
        match self.family {
            Family::Gl | Family::Sl => Signature::gl(m1, m2, n1, n2).expect("validated spec is nonempty"),
            Family::OspB => Signature::osp(m1, m2, n1, n2),
            Family::OspD => Signature::osp_even(m1, m2, n1, n2),
        }
    }

    fn require_osp(&self, op: &'static str) -> Result<(), AlgebraError> {
        if self.family.is_osp() {
            Ok(())
        } else {
            Err(AlgebraError::UnsupportedFamily { family: self.family, op })
        }
    }

    /// The index of the middle row/column of type B, if present.
    pub fn middle_index(&self) -> Option<usize> {
        (self.family == Family::OspB).then(|| 2 * self.m())
    }

    /// Offset of the first symplectic index.
    fn symplectic_offset(&self) -> usize {
        match self.family {
            Family::OspB => 2 * self.m() + 1,
            _ => 2 * self.m(),
        }
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{}|{},{})", self.family, self.m1, self.m2, self.n1, self.n2)
    }
}

/// A linearly independent family of matrices in an algebra, with labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Basis {
    pub spec: AlgebraSpec,
    pub elements: Vec<GradedMatrix>,
    pub labels: Vec<String>,
}

impl Basis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &GradedMatrix)> {
        self.labels.iter().map(String::as_str).zip(&self.elements)
    }
}

/// The bilinear form `J` of the orthosymplectic algebras on their index layout.
pub fn j_matrix(spec: &AlgebraSpec) -> Result<GradedMatrix, AlgebraError> {
    spec.require_osp("j_matrix")?;
    let sig = Arc::new(spec.signature());
    let (m, n) = (spec.m(), spec.n());
    let p = spec.symplectic_offset();
    let mut triples = Vec::with_capacity(2 * m + 2 * n + 1);
    for i in 0..m {
        triples.push((i, m + i, Scalar::one()));
        triples.push((m + i, i, Scalar::one()));
    }
    if let Some(mid) = spec.middle_index() {
        triples.push((mid, mid, Scalar::one()));
    }
    for i in 0..n {
        triples.push((p + i, p + n + i, Scalar::one()));
        triples.push((p + n + i, p + i, Scalar::from_int(-1)));
    }
    Ok(GradedMatrix::from_triples(sig, triples)?)
}

/// `u_ij = (−1)^{d(i)·d(j)}` on the osp index layout.
pub fn u_matrix(spec: &AlgebraSpec) -> Result<GradedMatrix, AlgebraError> {
    spec.require_osp("u_matrix")?;
    let sig = Arc::new(spec.signature());
    let size = sig.len();
    let mut triples = Vec::with_capacity(size * size);
    for i in 0..size {
        for j in 0..size {
            triples.push((i, j, Scalar::from_int(sig.degree(i).sign(sig.degree(j)))));
        }
    }
    Ok(GradedMatrix::from_triples(sig, triples)?)
}

fn check_signature(spec: &AlgebraSpec, a: &GradedMatrix) -> Result<(), AlgebraError> {
    if **a.signature() != spec.signature() {
        return Err(MatrixError::SignatureMismatch.into());
    }
    Ok(())
}

/// The matrix whose vanishing defines membership: `AᵀJ + JA` for osp,
/// `Str(A)·e_11` for sl, zero for gl.
pub fn defining_residual(spec: &AlgebraSpec, a: &GradedMatrix) -> Result<GradedMatrix, AlgebraError> {
    check_signature(spec, a)?;
    match spec.family {
        Family::Gl => Ok(GradedMatrix::zero(a.signature().clone())),
        Family::Sl => Ok(GradedMatrix::from_triples(a.signature().clone(), [(0, 0, a.supertrace())])?),
        Family::OspB | Family::OspD => {
            let j = j_matrix(spec)?.with_signature(a.signature().clone())?;
            Ok(a.graded_transpose().mul(&j)?.add(&j.mul(a)?)?)
        }
    }
}

pub fn is_member(spec: &AlgebraSpec, a: &GradedMatrix) -> Result<bool, AlgebraError> {
    Ok(defining_residual(spec, a)?.is_zero())
}

/// A matrix tagged with its 0-based `(i, j)`.
pub type IndexedMatrix = ((usize, usize), GradedMatrix);

/// All `M²` spanning matrices `s_ij = Σ_k J_ik e_kj − u_ij Σ_k J_jk e_ki`,
/// in lexicographic `(i, j)` order.
pub fn s_matrices(spec: &AlgebraSpec) -> Result<Vec<IndexedMatrix>, AlgebraError> {
    spec.require_osp("s_basis")?;
    let j = j_matrix(spec)?;
    let sig = j.signature().clone();
    let size = sig.len();
    let mut out = Vec::with_capacity(size * size);
    for i in 0..size {
        for jj in 0..size {
            let u = sig.degree(i).sign(sig.degree(jj));
            let mut triples = Vec::new();
            for k in 0..size {
                let jik = j.get(i, k);
                if !jik.is_zero() {
                    triples.push((k, jj, jik));
                }
                let jjk = j.get(jj, k);
                if !jjk.is_zero() {
                    triples.push((k, i, &jjk * &Scalar::from_int(-u)));
                }
            }
            out.push(((i, jj), GradedMatrix::from_triples(sig.clone(), triples)?));
        }
    }
    Ok(out)
}

/// The independent subset of the `s_ij`, kept in generation order.
pub fn s_basis(spec: &AlgebraSpec) -> Result<Basis, AlgebraError> {
    let all = s_matrices(spec)?;
    let width = spec.size() * spec.size();
    let mut ech = Echelon::new(width);
    let mut elements = Vec::new();
    let mut labels = Vec::new();
    for ((i, j), m) in all {
        if ech.insert(&m.to_coords()) {
            labels.push(format!("s[{},{}]", i + 1, j + 1));
            elements.push(m);
        }
    }
    Ok(Basis { spec: *spec, elements, labels })
}

/// The elementary matrices `e_ij`, a basis of gl.
pub fn elementary_basis(spec: &AlgebraSpec) -> Result<Basis, AlgebraError> {
    let sig = Arc::new(spec.signature());
    let size = sig.len();
    let mut elements = Vec::with_capacity(size * size);
    let mut labels = Vec::with_capacity(size * size);
    for i in 0..size {
        for j in 0..size {
            elements.push(GradedMatrix::elem(sig.clone(), i, j)?);
            labels.push(format!("e[{},{}]", i + 1, j + 1));
        }
    }
    Ok(Basis { spec: *spec, elements, labels })
}

/// Rows of the defining linear map as functionals on row-major coordinates.
fn constraint_rows(spec: &AlgebraSpec) -> Result<Vec<Vec<Scalar>>, AlgebraError> {
    let sig = Arc::new(spec.signature());
    let size = sig.len();
    let width = size * size;
    match spec.family {
        Family::Gl => Err(AlgebraError::UnsupportedFamily { family: spec.family, op: "kernel_basis" }),
        Family::Sl => {
            let mut row = vec![Scalar::zero(); width];
            for i in 0..size {
                row[i * size + i] = Scalar::from_int(sig.supertrace_sign(i));
            }
            Ok(vec![row])
        }
        Family::OspB | Family::OspD => {
            let mut rows = vec![vec![Scalar::zero(); width]; width];
            for i in 0..size {
                for j in 0..size {
                    let e = GradedMatrix::elem(sig.clone(), i, j)?;
                    let image = defining_residual(spec, &e)?;
                    for (r, c, v) in image.entries() {
                        rows[r * size + c][i * size + j] = v.clone();
                    }
                }
            }
            Ok(rows)
        }
    }
}

/// Exact kernel basis of the defining map, in reduced echelon form over
/// row-major coordinates (pivots 1, ordered by pivot position).
pub fn kernel_basis(spec: &AlgebraSpec) -> Result<Basis, AlgebraError> {
    let rows = constraint_rows(spec)?;
    let size = spec.size();
    let width = size * size;
    let mut ech = Echelon::new(width);
    for r in &rows {
        ech.insert(r);
    }
    let kernel = linalg::canonical_span(&ech.null_space(), width);
    let sig = Arc::new(spec.signature());
    let mut elements = Vec::with_capacity(kernel.len());
    let mut labels = Vec::with_capacity(kernel.len());
    for v in kernel {
        let p = v.iter().position(|x| !x.is_zero()).expect("kernel rows are nonzero");
        labels.push(format!("k[{},{}]", p / size + 1, p % size + 1));
        elements.push(GradedMatrix::from_coords(sig.clone(), &v));
    }
    Ok(Basis { spec: *spec, elements, labels })
}

/// Rank of the constraint system, counted independently of the kernel routine.
pub fn constraint_rank(spec: &AlgebraSpec) -> Result<usize, AlgebraError> {
    let rows = constraint_rows(spec)?;
    Ok(linalg::rank(&rows, spec.size() * spec.size()))
}

/// Closed-form dimension: type B `m(2m+1) + n(2n+1) + 2n(2m+1)`,
/// type D `m(2m−1) + n(2n+1) + 4mn`, with `m = m1+m2`, `n = n1+n2`.
pub fn expected_dim(spec: &AlgebraSpec) -> Result<usize, AlgebraError> {
    let (m, n) = (spec.m(), spec.n());
    match spec.family {
        Family::OspB => Ok(m * (2 * m + 1) + n * (2 * n + 1) + 2 * n * (2 * m + 1)),
        Family::OspD => Ok(m * (2 * m).saturating_sub(1) + n * (2 * n + 1) + 4 * m * n),
        _ => Err(AlgebraError::UnsupportedFamily { family: spec.family, op: "expected_dim" }),
    }
}

pub fn rank_of(matrices: &[GradedMatrix]) -> Result<usize, AlgebraError> {
    Ok(independent_subset(matrices)?.len())
}

/// Positions of the matrices retained by in-order echelon reduction.
pub fn independent_subset(matrices: &[GradedMatrix]) -> Result<Vec<usize>, AlgebraError> {
    let Some(first) = matrices.first() else {
        return Ok(Vec::new());
    };
    let size = first.size();
    let mut ech = Echelon::new(size * size);
    let mut kept = Vec::new();
    for (k, m) in matrices.iter().enumerate() {
        if m.signature() != first.signature() {
            return Err(MatrixError::SignatureMismatch.into());
        }
        if ech.insert(&m.to_coords()) {
            kept.push(k);
        }
    }
    Ok(kept)
}

/// Reduces labeled matrices to an independent subset, preserving order.
pub fn reduce_span(spec: &AlgebraSpec, matrices: Vec<GradedMatrix>, labels: Vec<String>) -> Result<Basis, AlgebraError> {
    let kept = independent_subset(&matrices)?;
    let mut elements = Vec::with_capacity(kept.len());
    let mut kept_labels = Vec::with_capacity(kept.len());
    let mut matrices: Vec<Option<GradedMatrix>> = matrices.into_iter().map(Some).collect();
    for k in kept {
        elements.push(matrices[k].take().expect("each index kept once"));
        kept_labels.push(labels.get(k).cloned().unwrap_or_else(|| format!("#{}", k + 1)));
    }
    Ok(Basis { spec: *spec, elements, labels: kept_labels })
}

/// Membership of every basis element; instance indices are 1-based basis positions.
pub fn verify_membership(basis: &Basis) -> Result<CheckReport, AlgebraError> {
    let mut report = CheckReport::new("membership", basis.spec);
    let residuals = basis
        .elements
        .iter()
        .map(|m| defining_residual(&basis.spec, m))
        .collect::<Result<Vec<_>, _>>()?;
    for (k, r) in residuals.into_iter().enumerate() {
        report.record(nonzero_residual(vec![k + 1], r));
    }
    Ok(report)
}

/// Membership of all `M²` matrices `s_ij`; indices are `[i, j]`.
pub fn verify_s_membership(spec: &AlgebraSpec) -> Result<CheckReport, AlgebraError> {
    let mut report = CheckReport::new("s_membership", *spec);
    for ((i, j), m) in s_matrices(spec)? {
        report.record(nonzero_residual(vec![i + 1, j + 1], defining_residual(spec, &m)?));
    }
    Ok(report)
}

/// For every ordered pair of basis elements, the graded bracket satisfies the
/// defining condition.
pub fn verify_closure(basis: &Basis) -> Result<CheckReport, AlgebraError> {
    let mut report = CheckReport::new("closure", basis.spec);
    let n = basis.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
    let spec = basis.spec;
    let els = &basis.elements;
    // signature errors are impossible once the first bracket succeeds
    if let Some(x) = els.first() {
        defining_residual(&spec, x)?;
    }
    report.run(&pairs, |&(a, b)| {
        let br = els[a].bracket(&els[b]).expect("basis elements share a signature");
        let r = defining_residual(&spec, &br).expect("signature checked");
        nonzero_residual(vec![a + 1, b + 1], r)
    });
    Ok(report)
}

/// Copies a type-D matrix into the type-B layout of the same parameters by
/// inserting a zero middle row and column.
pub fn embed_d_into_b(spec: &AlgebraSpec, a: &GradedMatrix) -> Result<GradedMatrix, AlgebraError> {
    if spec.family != Family::OspD {
        return Err(AlgebraError::UnsupportedFamily { family: spec.family, op: "embed_d_into_b" });
    }
    check_signature(spec, a)?;
    let b = AlgebraSpec::osp_b(spec.m1, spec.m2, spec.n1, spec.n2);
    let mid = 2 * spec.m();
    Ok(a.reindex(Arc::new(b.signature()), |i| if i < mid { i } else { i + 1 })?)
}

/// The 1-based e_ij notation used in tests and docs.
pub fn e1(sig: &Arc<Signature>, i: usize, j: usize) -> Result<GradedMatrix, MatrixError> {
    if i == 0 || j == 0 {
        return Err(MatrixError::IndexOutOfRange { row: i, col: j, size: sig.len() });
    }
    GradedMatrix::elem(sig.clone(), i - 1, j - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig_of(spec: &AlgebraSpec) -> Arc<Signature> {
        Arc::new(spec.signature())
    }

    fn dense(m: &GradedMatrix) -> Vec<Vec<i64>> {
        use num_traits::ToPrimitive;
        (0..m.size())
            .map(|i| {
                (0..m.size())
                    .map(|j| {
                        let v = m.get(i, j);
                        assert!(v.irr().numer().to_i64() == Some(0));
                        v.rat().to_integer().to_i64().unwrap()
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn spec_validation() {
        assert!(AlgebraSpec::gl(0, 0, 0, 0).is_err());
        assert!(AlgebraSpec::osp_d(0, 0, 0, 0).is_err());
        assert_eq!(AlgebraSpec::osp_b(0, 0, 0, 0).size(), 1);
        assert_eq!(AlgebraSpec::osp_b(1, 1, 1, 1).size(), 9);
        assert_eq!(AlgebraSpec::osp_d(1, 1, 1, 1).unwrap().size(), 8);
        assert_eq!("ospB".parse::<Family>().unwrap(), Family::OspB);
        assert!("so".parse::<Family>().is_err());
        let text = serde_json::to_string(&AlgebraSpec::osp_b(1, 0, 2, 0)).unwrap();
        assert_eq!(text, r#"{"algebra":"ospB","m1":1,"m2":0,"n1":2,"n2":0}"#);
        assert!(serde_json::from_str::<AlgebraSpec>(r#"{"algebra":"gl","m1":0,"m2":0,"n1":0,"n2":0}"#).is_err());
    }

    #[test]
    fn j_examples() {
        assert_eq!(dense(&j_matrix(&AlgebraSpec::osp_b(0, 0, 0, 0)).unwrap()), vec![vec![1]]);
        assert_eq!(
            dense(&j_matrix(&AlgebraSpec::osp_b(1, 0, 0, 0)).unwrap()),
            vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]
        );
        assert_eq!(
            dense(&j_matrix(&AlgebraSpec::osp_b(0, 0, 1, 0)).unwrap()),
            vec![vec![1, 0, 0], vec![0, 0, 1], vec![0, -1, 0]]
        );
        assert_eq!(
            dense(&j_matrix(&AlgebraSpec::osp_d(1, 0, 1, 0).unwrap()).unwrap()),
            vec![vec![0, 1, 0, 0], vec![1, 0, 0, 0], vec![0, 0, 0, 1], vec![0, 0, -1, 0]]
        );
        assert!(matches!(
            j_matrix(&AlgebraSpec::gl(1, 0, 0, 0).unwrap()),
            Err(AlgebraError::UnsupportedFamily { .. })
        ));
    }

    #[test]
    fn j_symmetry_and_invertibility() {
        let spec = AlgebraSpec::osp_b(1, 1, 1, 1);
        let j = j_matrix(&spec).unwrap();
        let m = 2 * spec.m() + 1;
        for i in 0..spec.size() {
            for k in 0..spec.size() {
                if i < m && k < m {
                    assert_eq!(j.get(i, k), j.get(k, i));
                } else if i >= m && k >= m {
                    assert_eq!(j.get(i, k), -&j.get(k, i));
                }
            }
        }
        // J² is ±1 on the diagonal, hence invertible
        let jj = j.mul(&j).unwrap();
        for i in 0..spec.size() {
            assert_eq!(jj.get(i, i), Scalar::from_int(if i < m { 1 } else { -1 }));
        }
        assert_eq!(jj.nnz(), spec.size());
    }

    #[test]
    fn membership_examples() {
        let spec = AlgebraSpec::osp_b(0, 0, 1, 0);
        let s = sig_of(&spec);
        let b_minus = e1(&s, 1, 2).unwrap().sub(&e1(&s, 3, 1).unwrap()).unwrap().scale(&Scalar::sqrt2());
        assert!(is_member(&spec, &b_minus).unwrap());
        // wrong relative sign
        let bad = e1(&s, 1, 2).unwrap().add(&e1(&s, 3, 1).unwrap()).unwrap();
        assert!(!is_member(&spec, &bad).unwrap());

        let sl = AlgebraSpec::sl(1, 1, 0, 0).unwrap();
        assert!(!is_member(&sl, &e1(&sig_of(&sl), 1, 1).unwrap()).unwrap());
        for spec in [sl, AlgebraSpec::osp_b(1, 1, 1, 1), AlgebraSpec::gl(1, 0, 0, 2).unwrap()] {
            assert!(is_member(&spec, &GradedMatrix::zero(sig_of(&spec))).unwrap());
        }
        let other = Arc::new(Signature::gl(3, 0, 0, 0).unwrap());
        assert!(is_member(&spec, &GradedMatrix::zero(other)).is_err());
    }

    #[test]
    fn membership_matches_hand_expansion() {
        // (AᵀJ + JA) for A = √2(e12 − e31) on ospB(0,0,1,0):
        // Aᵀ = √2(e21·(+1) − e13·(−1)) since e12 has degree (1,0) with d(1)=(0,0)
        // and e31 has degree (1,0) with d(3)=(1,0).
        let spec = AlgebraSpec::osp_b(0, 0, 1, 0);
        let s = sig_of(&spec);
        let a = e1(&s, 1, 2).unwrap().sub(&e1(&s, 3, 1).unwrap()).unwrap();
        let at = a.graded_transpose();
        assert_eq!(at, e1(&s, 2, 1).unwrap().add(&e1(&s, 1, 3).unwrap()).unwrap());
        // AᵀJ = (e21 + e13)(e11 + e23 − e32) = e21 − e12
        // JA  = (e11 + e23 − e32)(e12 − e31) = e12 − e21
        let j = j_matrix(&spec).unwrap();
        assert_eq!(at.mul(&j).unwrap(), e1(&s, 2, 1).unwrap().sub(&e1(&s, 1, 2).unwrap()).unwrap());
        assert_eq!(j.mul(&a).unwrap(), e1(&s, 1, 2).unwrap().sub(&e1(&s, 2, 1).unwrap()).unwrap());
    }

    #[test]
    fn u_examples() {
        assert_eq!(dense(&u_matrix(&AlgebraSpec::osp_b(0, 0, 0, 0)).unwrap()), vec![vec![1]]);
        assert_eq!(
            dense(&u_matrix(&AlgebraSpec::osp_b(0, 0, 1, 0)).unwrap()),
            vec![vec![1, 1, 1], vec![1, -1, -1], vec![1, -1, -1]]
        );
        for spec in [AlgebraSpec::osp_b(1, 1, 1, 1), AlgebraSpec::osp_d(0, 2, 1, 1).unwrap()] {
            let u = u_matrix(&spec).unwrap();
            assert_eq!(u.transpose(), u);
        }
        assert!(u_matrix(&AlgebraSpec::sl(1, 0, 1, 0).unwrap()).is_err());
    }

    #[test]
    fn s_basis_sizes() {
        let zero = s_basis(&AlgebraSpec::osp_b(0, 0, 0, 0)).unwrap();
        assert!(zero.is_empty());
        assert_eq!(s_basis(&AlgebraSpec::osp_b(1, 0, 0, 0)).unwrap().len(), 3);
        assert_eq!(s_basis(&AlgebraSpec::osp_b(0, 0, 1, 0)).unwrap().len(), 5);
        let all = s_matrices(&AlgebraSpec::osp_b(1, 0, 0, 0)).unwrap();
        let ms: Vec<GradedMatrix> = all.into_iter().map(|(_, m)| m).collect();
        assert_eq!(rank_of(&ms).unwrap(), 3);
    }

    #[test]
    fn s_matrices_are_proportional_in_pairs() {
        // s_ji = −u_ij s_ij, checked rather than assumed
        let spec = AlgebraSpec::osp_b(1, 1, 1, 1);
        let all = s_matrices(&spec).unwrap();
        let size = spec.size();
        let sig = spec.signature();
        for i in 0..size {
            for j in 0..size {
                let sij = &all[i * size + j].1;
                let sji = &all[j * size + i].1;
                let u = sig.degree(i).sign(sig.degree(j));
                assert_eq!(sji, &sij.scale(&Scalar::from_int(-u)), "s[{},{}]", i + 1, j + 1);
            }
        }
    }

    #[test]
    fn kernel_sizes() {
        assert_eq!(kernel_basis(&AlgebraSpec::osp_b(1, 0, 1, 0)).unwrap().len(), 12);
        assert_eq!(kernel_basis(&AlgebraSpec::sl(1, 0, 1, 0).unwrap()).unwrap().len(), 3);
        assert!(kernel_basis(&AlgebraSpec::osp_b(0, 0, 0, 0)).unwrap().is_empty());
        assert!(kernel_basis(&AlgebraSpec::gl(1, 0, 1, 0).unwrap()).is_err());
    }

    #[test]
    fn kernel_basis_is_canonical_and_homogeneous() {
        let spec = AlgebraSpec::osp_b(1, 1, 0, 1);
        let basis = kernel_basis(&spec).unwrap();
        let size = spec.size();
        let mut last = None;
        for m in &basis.elements {
            let coords = m.to_coords();
            let p = coords.iter().position(|x| !x.is_zero()).unwrap();
            assert!(coords[p].is_one());
            assert!(last.is_none_or(|q| q < p), "pivots increase");
            for other in &basis.elements {
                if other != m {
                    assert!(other.get(p / size, p % size).is_zero(), "pivot columns are cleared");
                }
            }
            last = Some(p);
            assert!(m.degree().is_some());
        }
    }

    #[test]
    fn expected_dims() {
        assert_eq!(expected_dim(&AlgebraSpec::osp_b(1, 0, 1, 0)).unwrap(), 12);
        assert_eq!(expected_dim(&AlgebraSpec::osp_b(0, 0, 1, 0)).unwrap(), 5);
        assert_eq!(expected_dim(&AlgebraSpec::osp_d(1, 0, 0, 0).unwrap()).unwrap(), 1);
        assert_eq!(expected_dim(&AlgebraSpec::osp_b(1, 1, 1, 1)).unwrap(), 40);
        assert!(expected_dim(&AlgebraSpec::sl(1, 0, 0, 0).unwrap()).is_err());
    }

    #[test]
    fn rank_of_examples() {
        let spec = AlgebraSpec::gl(1, 0, 1, 0).unwrap();
        let s = sig_of(&spec);
        let e12 = e1(&s, 1, 2).unwrap();
        let set = vec![e12.clone(), e12.scale(&Scalar::from_int(2)), e1(&s, 2, 1).unwrap()];
        assert_eq!(rank_of(&set).unwrap(), 2);
        assert_eq!(rank_of(&[]).unwrap(), 0);
        let other = GradedMatrix::zero(Arc::new(Signature::gl(2, 0, 0, 0).unwrap()));
        assert!(rank_of(&[e12, other]).is_err());
        let b = reduce_span(&spec, set, vec!["a".into(), "b".into(), "c".into()]).unwrap();
        assert_eq!(b.labels, vec!["a", "c"]);
    }

    #[test]
    fn closure_on_small_algebras() {
        let basis = kernel_basis(&AlgebraSpec::osp_b(1, 0, 1, 0)).unwrap();
        let report = verify_closure(&basis).unwrap();
        assert_eq!((report.total, report.failed), (144, 0));

        let so2 = kernel_basis(&AlgebraSpec::osp_d(1, 0, 0, 0).unwrap()).unwrap();
        assert_eq!(so2.len(), 1);
        let report = verify_closure(&so2).unwrap();
        assert_eq!((report.total, report.failed), (1, 0));
    }

    #[test]
    fn closure_flags_injected_non_member() {
        let spec = AlgebraSpec::osp_b(1, 0, 0, 0);
        let mut basis = kernel_basis(&spec).unwrap();
        let s = sig_of(&spec);
        basis.elements.push(e1(&s, 1, 1).unwrap());
        basis.labels.push("bad".into());
        let report = verify_closure(&basis).unwrap();
        assert!(report.failed > 0);
        let membership = verify_membership(&basis).unwrap();
        assert_eq!(membership.failed, 1);
        assert_eq!(membership.counterexamples[0].indices, vec![4]);
    }

    #[test]
    fn osp_d_embeds_into_osp_b() {
        let d = AlgebraSpec::osp_d(1, 1, 1, 0).unwrap();
        let b = AlgebraSpec::osp_b(1, 1, 1, 0);
        for m in &kernel_basis(&d).unwrap().elements {
            let lifted = embed_d_into_b(&d, m).unwrap();
            assert!(is_member(&b, &lifted).unwrap());
            assert_eq!(lifted.degree(), m.degree());
        }
    }

    #[test]
    fn grading_of_s_matrices() {
        let spec = AlgebraSpec::osp_b(1, 1, 1, 1);
        let sig = spec.signature();
        for ((i, j), m) in s_matrices(&spec).unwrap() {
            if !m.is_zero() {
                assert_eq!(m.degree(), Some(sig.degree(i) + sig.degree(j)));
            }
        }
    }
}

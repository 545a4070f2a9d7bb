//! Square matrices over Q(√2) whose row/column indices carry Z2×Z2 degrees.
//!
//! Storage is sparse (a sorted map of nonzero entries) but semantics are dense:
//! an absent entry is zero. Indices are 0-based in the API and 1-based in the
//! JSON encoding.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::grading::{Degree, Signature};
use crate::scalars::{int_from_json, int_to_json, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("signature mismatch between operands")]
    SignatureMismatch,
    #[error("index ({row}, {col}) out of range for a {size}x{size} matrix")]
    IndexOutOfRange { row: usize, col: usize, size: usize },
    #[error("matrix is not homogeneous")]
    NotHomogeneous,
}

#[derive(Clone, PartialEq, Eq)]
pub struct GradedMatrix {
    signature: Arc<Signature>,
    entries: BTreeMap<(usize, usize), Scalar>,
}

impl GradedMatrix {
    pub fn zero(signature: Arc<Signature>) -> Self {
        GradedMatrix { signature, entries: BTreeMap::new() }
    }

    pub fn identity(signature: Arc<Signature>) -> Self {
        let entries = (0..signature.len()).map(|i| ((i, i), Scalar::one())).collect();
        GradedMatrix { signature, entries }
    }

    /// The elementary matrix `e_ij` with a single 1 at `(i, j)`.
    pub fn elem(signature: Arc<Signature>, i: usize, j: usize) -> Result<Self, MatrixError> {
        let mut m = GradedMatrix::zero(signature);
        m.set(i, j, Scalar::one())?;
        Ok(m)
    }

    /// Builds a matrix from `(row, col, value)` triples; repeated positions add.
    pub fn from_triples(
        signature: Arc<Signature>,
        triples: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Result<Self, MatrixError> {
        let mut m = GradedMatrix::zero(signature);
        for (i, j, v) in triples {
            m.add_at(i, j, &v)?;
        }
        Ok(m)
    }

    pub fn signature(&self) -> &Arc<Signature> {
        &self.signature
    }

    pub fn size(&self) -> usize {
        self.signature.len()
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) -> Result<(), MatrixError> {
        self.check_index(i, j)?;
        if value.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), value);
        }
        Ok(())
    }

    fn add_at(&mut self, i: usize, j: usize, value: &Scalar) -> Result<(), MatrixError> {
        self.check_index(i, j)?;
        accumulate(&mut self.entries, (i, j), value);
        Ok(())
    }

    fn check_index(&self, i: usize, j: usize) -> Result<(), MatrixError> {
        let size = self.size();
        if i >= size || j >= size {
            return Err(MatrixError::IndexOutOfRange { row: i, col: j, size });
        }
        Ok(())
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    fn same_signature(&self, other: &GradedMatrix) -> Result<(), MatrixError> {
        if Arc::ptr_eq(&self.signature, &other.signature) || self.signature == other.signature {
            Ok(())
        } else {
            Err(MatrixError::SignatureMismatch)
        }
    }

    /// The unique degree of a homogeneous matrix; the zero matrix reports `(0,0)`.
    pub fn degree(&self) -> Option<Degree> {
        let mut found: Option<Degree> = None;
        for &(i, j) in self.entries.keys() {
            let g = self.signature.position_degree(i, j);
            match found {
                None => found = Some(g),
                Some(h) if h != g => return None,
                _ => {}
            }
        }
        Some(found.unwrap_or(Degree::ZERO))
    }

    pub fn homogeneous_parts(&self) -> HomogeneousParts {
        let mut parts: [GradedMatrix; 4] = std::array::from_fn(|_| GradedMatrix::zero(self.signature.clone()));
        for (&(i, j), v) in &self.entries {
            let g = self.signature.position_degree(i, j);
            parts[g.index()].entries.insert((i, j), v.clone());
        }
        HomogeneousParts { parts }
    }

    pub fn add(&self, other: &GradedMatrix) -> Result<GradedMatrix, MatrixError> {
        self.add_scaled(other, &Scalar::one())
    }

    pub fn sub(&self, other: &GradedMatrix) -> Result<GradedMatrix, MatrixError> {
        self.add_scaled(other, &Scalar::from_int(-1))
    }

    /// `self + c·other`.
    pub fn add_scaled(&self, other: &GradedMatrix, c: &Scalar) -> Result<GradedMatrix, MatrixError> {
        self.same_signature(other)?;
        let mut out = self.clone();
        if c.is_zero() {
            return Ok(out);
        }
        for (&pos, v) in &other.entries {
            accumulate(&mut out.entries, pos, &(c * v));
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> GradedMatrix {
        if c.is_zero() {
            return GradedMatrix::zero(self.signature.clone());
        }
        let entries = self.entries.iter().map(|(&pos, v)| (pos, c * v)).collect();
        GradedMatrix { signature: self.signature.clone(), entries }
    }

    pub fn neg(&self) -> GradedMatrix {
        let entries = self.entries.iter().map(|(&pos, v)| (pos, -v)).collect();
        GradedMatrix { signature: self.signature.clone(), entries }
    }

    pub fn mul(&self, other: &GradedMatrix) -> Result<GradedMatrix, MatrixError> {
        self.same_signature(other)?;
        let mut entries = BTreeMap::new();
        for (&(i, k), a) in &self.entries {
            for (&(_, j), b) in other.entries.range((k, 0)..(k + 1, 0)) {
                accumulate(&mut entries, (i, j), &(a * b));
            }
        }
        Ok(GradedMatrix { signature: self.signature.clone(), entries })
    }

    /// `AB − BA`, ignoring the grading.
    pub fn commutator(&self, other: &GradedMatrix) -> Result<GradedMatrix, MatrixError> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// `AB + BA`, ignoring the grading.
    pub fn anticommutator(&self, other: &GradedMatrix) -> Result<GradedMatrix, MatrixError> {
        self.mul(other)?.add(&other.mul(self)?)
    }

    /// The graded bracket `⟦x_a, y_b⟧ = x_a y_b − (−1)^{a·b} y_b x_a`, extended
    /// bilinearly over homogeneous parts.
    pub fn bracket(&self, other: &GradedMatrix) -> Result<GradedMatrix, MatrixError> {
        self.same_signature(other)?;
        if let (Some(a), Some(b)) = (self.degree(), other.degree()) {
            return self.homogeneous_bracket(other, a, b);
        }
        let xs = self.homogeneous_parts();
        let ys = other.homogeneous_parts();
        let mut out = GradedMatrix::zero(self.signature.clone());
        for a in Degree::ALL {
            let x = xs.part(a);
            if x.is_zero() {
                continue;
            }
            for b in Degree::ALL {
                let y = ys.part(b);
                if y.is_zero() {
                    continue;
                }
                out = out.add(&x.homogeneous_bracket(y, a, b)?)?;
            }
        }
        Ok(out)
    }

    fn homogeneous_bracket(&self, other: &GradedMatrix, a: Degree, b: Degree) -> Result<GradedMatrix, MatrixError> {
        let sign = Scalar::from_int(-a.sign(b));
        self.mul(other)?.add_scaled(&other.mul(self)?, &sign)
    }

    /// Graded supertranspose: `e_ij ↦ (−1)^{(d(i)+d(j))·d(i)} e_ji`, extended linearly.
    pub fn graded_transpose(&self) -> GradedMatrix {
        let sig = &self.signature;
        let entries = self
            .entries
            .iter()
            .map(|(&(i, j), v)| {
                let g = sig.position_degree(i, j);
                let v = if g.dot(sig.degree(i)) == 1 { -v } else { v.clone() };
                ((j, i), v)
            })
            .collect();
        GradedMatrix { signature: sig.clone(), entries }
    }

    /// Plain transpose, ignoring the grading.
    pub fn transpose(&self) -> GradedMatrix {
        let entries = self.entries.iter().map(|(&(i, j), v)| ((j, i), v.clone())).collect();
        GradedMatrix { signature: self.signature.clone(), entries }
    }

    /// `Σ_i σ(i) A_ii` with `σ = +1` on degrees (0,0), (1,1) and `−1` on (1,0), (0,1).
    pub fn supertrace(&self) -> Scalar {
        let mut acc = Scalar::zero();
        for (&(i, j), v) in &self.entries {
            if i == j {
                if self.signature.supertrace_sign(i) > 0 {
                    acc += v;
                } else {
                    acc -= v;
                }
            }
        }
        acc
    }

    /// Row-major flattening to a dense coordinate vector of length `M²`.
    pub fn to_coords(&self) -> Vec<Scalar> {
        let m = self.size();
        let mut v = vec![Scalar::zero(); m * m];
        for (&(i, j), x) in &self.entries {
            v[i * m + j] = x.clone();
        }
        v
    }

    pub fn from_coords(signature: Arc<Signature>, coords: &[Scalar]) -> Self {
        let m = signature.len();
        assert_eq!(coords.len(), m * m, "coordinate vector length must be M^2");
        let entries = coords
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(k, x)| ((k / m, k % m), x.clone()))
            .collect();
        GradedMatrix { signature, entries }
    }

    /// Copy of the `rows × cols` sub-block at the given offsets, re-embedded at
    /// the same position. Entries outside the block are dropped.
    pub fn restrict(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> GradedMatrix {
        let entries = self
            .entries
            .iter()
            .filter(|(&(i, j), _)| rows.contains(&i) && cols.contains(&j))
            .map(|(&pos, v)| (pos, v.clone()))
            .collect();
        GradedMatrix { signature: self.signature.clone(), entries }
    }

    /// Re-attaches the entries to another signature of the same size.
    pub fn with_signature(&self, signature: Arc<Signature>) -> Result<GradedMatrix, MatrixError> {
        if signature.len() != self.size() {
            return Err(MatrixError::SignatureMismatch);
        }
        Ok(GradedMatrix { signature, entries: self.entries.clone() })
    }

    /// Maps entry positions through `index_map` into a matrix over `signature`.
    pub fn reindex(&self, signature: Arc<Signature>, index_map: impl Fn(usize) -> usize) -> Result<GradedMatrix, MatrixError> {
        GradedMatrix::from_triples(signature, self.entries.iter().map(|(&(i, j), v)| (index_map(i), index_map(j), v.clone())))
    }
}

fn accumulate(entries: &mut BTreeMap<(usize, usize), Scalar>, pos: (usize, usize), value: &Scalar) {
    if value.is_zero() {
        return;
    }
    match entries.get_mut(&pos) {
        Some(slot) => {
            *slot += value;
            if slot.is_zero() {
                entries.remove(&pos);
            }
        }
        None => {
            entries.insert(pos, value.clone());
        }
    }
}

/// The four homogeneous components of a matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousParts {
    parts: [GradedMatrix; 4],
}

impl HomogeneousParts {
    pub fn part(&self, g: Degree) -> &GradedMatrix {
        &self.parts[g.index()]
    }

    pub fn iter(&self) -> impl Iterator<Item = (Degree, &GradedMatrix)> {
        Degree::ALL.into_iter().map(move |g| (g, self.part(g)))
    }
}

impl fmt::Debug for GradedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedMatrix({}x{}; ", self.size(), self.size())?;
        let mut first = true;
        for (&(i, j), v) in &self.entries {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "[{},{}]={}", i + 1, j + 1, v)?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for GradedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.size();
        let cells: Vec<Vec<String>> = (0..m).map(|i| (0..m).map(|j| self.get(i, j).to_string()).collect()).collect();
        let width = cells.iter().flatten().map(|c| c.chars().count()).max().unwrap_or(1);
        for row in cells {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[ {} ]", line.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixDoc {
    size: usize,
    signature: Signature,
    entries: Vec<Vec<serde_json::Value>>,
}

impl Serialize for GradedMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let entries = self
            .entries
            .iter()
            .map(|(&(i, j), v)| {
                let mut row = vec![serde_json::Value::from(i + 1), serde_json::Value::from(j + 1)];
                row.extend(v.to_parts().iter().map(int_to_json));
                row
            })
            .collect();
        MatrixDoc { size: self.size(), signature: (*self.signature).clone(), entries }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GradedMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let doc = MatrixDoc::deserialize(deserializer)?;
        if doc.signature.len() != doc.size {
            return Err(D::Error::custom("signature length differs from size"));
        }
        let mut m = GradedMatrix::zero(Arc::new(doc.signature));
        for row in &doc.entries {
            if row.len() != 6 {
                return Err(D::Error::custom("matrix entry must have six components"));
            }
            let idx = |v: &serde_json::Value| v.as_u64().filter(|&k| k >= 1).map(|k| k as usize - 1);
            let (i, j) = match (idx(&row[0]), idx(&row[1])) {
                (Some(i), Some(j)) => (i, j),
                _ => return Err(D::Error::custom("matrix indices must be positive integers")),
            };
            let mut parts: Vec<BigInt> = Vec::with_capacity(4);
            for v in &row[2..] {
                parts.push(int_from_json(v).ok_or_else(|| D::Error::custom("scalar component is not an integer"))?);
            }
            let value = Scalar::from_parts(parts.try_into().expect("length checked")).map_err(D::Error::custom)?;
            if value.is_zero() {
                return Err(D::Error::custom("zero entries must be omitted"));
            }
            if m.entries.contains_key(&(i, j)) {
                return Err(D::Error::custom("duplicate matrix entry"));
            }
            m.set(i, j, value).map_err(D::Error::custom)?;
        }
        Ok(m)
    }
}

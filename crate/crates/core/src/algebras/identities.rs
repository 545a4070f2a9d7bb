//! Bracket identities checked exhaustively over a homogeneous basis.

use crate::gmatrix::{GradedMatrix, MatrixError};
use crate::grading::Degree;
use crate::report::{nonzero_residual, CheckReport, Counterexample};
use crate::scalars::Scalar;

use super::{AlgebraError, Basis};

fn degrees(basis: &Basis) -> Result<Vec<Degree>, AlgebraError> {
    basis
        .elements
        .iter()
        .map(|m| m.degree().ok_or(AlgebraError::Matrix(MatrixError::NotHomogeneous)))
        .collect()
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect()
}

fn bracket(x: &GradedMatrix, y: &GradedMatrix) -> GradedMatrix {
    x.bracket(y).expect("basis elements share a signature")
}

/// `⟦x_a, y_b⟧` is zero or homogeneous of degree `a + b`.
pub fn verify_grading(basis: &Basis) -> Result<CheckReport, AlgebraError> {
    let degs = degrees(basis)?;
    let els = &basis.elements;
    let mut report = CheckReport::new("grading", basis.spec);
    report.run(&pairs(els.len()), |&(a, b)| {
        let br = bracket(&els[a], &els[b]);
        let ok = br.is_zero() || br.degree() == Some(degs[a] + degs[b]);
        (!ok).then(|| Counterexample { indices: vec![a + 1, b + 1], signs: None, relation: None, residual: br })
    });
    Ok(report)
}

/// `⟦x_a, y_b⟧ + (−1)^{a·b} ⟦y_b, x_a⟧ = 0`.
pub fn verify_symmetry(basis: &Basis) -> Result<CheckReport, AlgebraError> {
    let degs = degrees(basis)?;
    let els = &basis.elements;
    let mut report = CheckReport::new("symmetry", basis.spec);
    report.run(&pairs(els.len()), |&(a, b)| {
        let lhs = bracket(&els[a], &els[b]);
        let rhs = bracket(&els[b], &els[a]);
        let residual = lhs.add_scaled(&rhs, &Scalar::from_int(degs[a].sign(degs[b]))).expect("same signature");
        nonzero_residual(vec![a + 1, b + 1], residual)
    });
    Ok(report)
}

/// `⟦x_a, ⟦y_b, z_c⟧⟧ = ⟦⟦x_a, y_b⟧, z_c⟧ + (−1)^{a·b} ⟦y_b, ⟦x_a, z_c⟧⟧` over all
/// ordered triples.
pub fn verify_jacobi(basis: &Basis) -> Result<CheckReport, AlgebraError> {
    use rayon::prelude::*;

    let degs = degrees(basis)?;
    let els = &basis.elements;
    let n = els.len();
    let table: Vec<GradedMatrix> = pairs(n).par_iter().map(|&(a, b)| bracket(&els[a], &els[b])).collect();
    let pair = |a: usize, b: usize| &table[a * n + b];
    let triples: Vec<(usize, usize, usize)> =
        (0..n).flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c)))).collect();
    let mut report = CheckReport::new("jacobi", basis.spec);
    report.run(&triples, |&(a, b, c)| {
        let lhs = bracket(&els[a], pair(b, c));
        let first = bracket(pair(a, b), &els[c]);
        let second = bracket(&els[b], pair(a, c));
        let residual = lhs
            .sub(&first)
            .and_then(|r| r.add_scaled(&second, &Scalar::from_int(-degs[a].sign(degs[b]))))
            .expect("same signature");
        nonzero_residual(vec![a + 1, b + 1, c + 1], residual)
    });
    Ok(report)
}

/// When every basis degree lies in a subgroup on which the sign rule equals
/// the Z2 parity product (for example `{(0,0),(1,0)}`), the graded bracket is
/// the ordinary super bracket `xy − (−1)^{|x||y|} yx`.
///
/// Each pair contributes one instance that fails if either the sign rule
/// disagrees with the parity product or the brackets differ.
pub fn verify_super_reduction(basis: &Basis) -> Result<CheckReport, AlgebraError> {
    let degs = degrees(basis)?;
    let els = &basis.elements;
    let mut report = CheckReport::new("super_reduction", basis.spec);
    report.run(&pairs(els.len()), |&(a, b)| {
        let (da, db) = (degs[a], degs[b]);
        let parity = (da.is_odd() && db.is_odd()) as u8;
        let (x, y) = (&els[a], &els[b]);
        let super_bracket = if parity == 1 { x.anticommutator(y) } else { x.commutator(y) }.expect("same signature");
        let residual = bracket(x, y).sub(&super_bracket).expect("same signature");
        if da.dot(db) != parity {
            return Some(Counterexample {
                indices: vec![a + 1, b + 1],
                signs: None,
                relation: Some(format!("sign rule {}·{} differs from parity product", da, db)),
                residual,
            });
        }
        nonzero_residual(vec![a + 1, b + 1], residual)
    });
    Ok(report)
}

/// When all basis degrees are `(0,0)` or `(1,1)`, every graded bracket is a
/// plain commutator.
pub fn verify_lie_reduction(basis: &Basis) -> Result<CheckReport, AlgebraError> {
    let degs = degrees(basis)?;
    let els = &basis.elements;
    let mut report = CheckReport::new("lie_reduction", basis.spec);
    report.run(&pairs(els.len()), |&(a, b)| {
        let (x, y) = (&els[a], &els[b]);
        let residual = bracket(x, y).sub(&x.commutator(y).expect("same signature")).expect("same signature");
        if degs[a].is_odd() || degs[b].is_odd() {
            return Some(Counterexample {
                indices: vec![a + 1, b + 1],
                signs: None,
                relation: Some("basis element outside the (0,0)/(1,1) components".into()),
                residual,
            });
        }
        nonzero_residual(vec![a + 1, b + 1], residual)
    });
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::{elementary_basis, kernel_basis, AlgebraSpec};

    #[test]
    fn identities_on_small_osp() {
        let basis = kernel_basis(&AlgebraSpec::osp_b(0, 1, 1, 0)).unwrap();
        for report in [verify_grading(&basis), verify_symmetry(&basis), verify_jacobi(&basis)] {
            let report = report.unwrap();
            assert!(report.passed(), "{}: {:?}", report.check, report.counterexamples.first());
        }
        let n = basis.len() as u64;
        assert_eq!(verify_jacobi(&basis).unwrap().total, n * n * n);
    }

    #[test]
    fn reductions() {
        let super_case = kernel_basis(&AlgebraSpec::osp_b(1, 0, 1, 0)).unwrap();
        assert!(verify_super_reduction(&super_case).unwrap().passed());
        let lie_case = kernel_basis(&AlgebraSpec::osp_b(1, 1, 0, 0)).unwrap();
        assert!(verify_lie_reduction(&lie_case).unwrap().passed());
        // a genuinely Z2×Z2-graded case violates both reductions
        let mixed = kernel_basis(&AlgebraSpec::osp_b(0, 0, 1, 1)).unwrap();
        assert!(!verify_super_reduction(&mixed).unwrap().passed());
        assert!(!verify_lie_reduction(&mixed).unwrap().passed());
    }

    #[test]
    fn inhomogeneous_basis_is_rejected() {
        let spec = AlgebraSpec::gl(1, 0, 1, 0).unwrap();
        let mut basis = elementary_basis(&spec).unwrap();
        basis.elements[0] = basis.elements[0].add(&basis.elements[1]).unwrap();
        assert!(verify_jacobi(&basis).is_err());
    }
}

//! Exact Gaussian elimination over Q(√2).

use crate::scalars::Scalar;

/// An incrementally built reduced row echelon form.
///
/// Rows are kept fully reduced with pivots normalized to 1, so the stored
/// rows are the canonical basis of the span of everything inserted so far.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    width: usize,
    /// `(pivot column, row)`, sorted by pivot column.
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl Echelon {
    pub fn new(width: usize) -> Self {
        Echelon { width, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Reduces `v` against the current rows, returning the remainder.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.width, "vector width mismatch");
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let c = v[*p].clone();
            axpy(&mut v, &c, row);
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Inserts `v`; returns `true` when it was independent of the rows so far.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("pivot is nonzero");
        for x in v.iter_mut().skip(p) {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = row[p].clone();
                axpy(row, &c, &v);
            }
        }
        let at = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(at, (p, v));
        true
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|(p, _)| *p)
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Scalar]> {
        self.rows.iter().map(|(_, r)| r.as_slice())
    }

    /// Basis of `{x : r·x = 0 for every stored row r}`, one vector per free
    /// column, in increasing order of that column.
    pub fn null_space(&self) -> Vec<Vec<Scalar>> {
        let mut is_pivot = vec![false; self.width];
        for (p, _) in &self.rows {
            is_pivot[*p] = true;
        }
        (0..self.width)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut x = vec![Scalar::zero(); self.width];
                x[f] = Scalar::one();
                for (p, row) in &self.rows {
                    if !row[f].is_zero() {
                        x[*p] = -&row[f];
                    }
                }
                x
            })
            .collect()
    }
}

/// `v -= c·w`.
fn axpy(v: &mut [Scalar], c: &Scalar, w: &[Scalar]) {
    for (x, y) in v.iter_mut().zip(w) {
        if !y.is_zero() {
            *x -= &(c * y);
        }
    }
}

/// Rank of a set of coordinate vectors.
pub fn rank(vectors: &[Vec<Scalar>], width: usize) -> usize {
    let mut ech = Echelon::new(width);
    for v in vectors {
        ech.insert(v);
    }
    ech.rank()
}

/// Canonical basis (reduced echelon rows) of the span of `vectors`.
pub fn canonical_span(vectors: &[Vec<Scalar>], width: usize) -> Vec<Vec<Scalar>> {
    let mut ech = Echelon::new(width);
    for v in vectors {
        ech.insert(v);
    }
    ech.rows().map(<[Scalar]>::to_vec).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    #[test]
    fn rank_basics() {
        assert_eq!(rank(&[], 3), 0);
        assert_eq!(rank(&[v(&[0, 1, 0]), v(&[0, 2, 0]), v(&[1, 0, 0])], 3), 2);
        assert_eq!(rank(&[v(&[1, 1, 0]), v(&[0, 1, 1]), v(&[1, 0, -1])], 3), 2);
    }

    #[test]
    fn reduced_form_is_canonical() {
        let a = canonical_span(&[v(&[2, 4, 0]), v(&[1, 3, 1])], 3);
        let b = canonical_span(&[v(&[0, 1, 1]), v(&[1, 0, -2]), v(&[3, 5, -1])], 3);
        assert_eq!(a, b);
        assert_eq!(a, vec![v(&[1, 0, -2]), v(&[0, 1, 1])]);
    }

    #[test]
    fn irrational_pivots() {
        let r2 = Scalar::sqrt2();
        let rows = vec![vec![r2.clone(), Scalar::from_int(2)], vec![Scalar::one(), r2]];
        // second row is the first divided by √2
        assert_eq!(rank(&rows, 2), 1);
    }

    #[test]
    fn null_space_of_single_constraint() {
        let mut ech = Echelon::new(3);
        ech.insert(&v(&[1, 1, 1]));
        let ns = ech.null_space();
        assert_eq!(ns, vec![v(&[-1, 1, 0]), v(&[-1, 0, 1])]);
    }

    proptest! {
        #[test]
        fn null_space_is_annihilated(rows in prop::collection::vec(prop::collection::vec(-3i64..4, 5), 0..5)) {
            let rows: Vec<Vec<Scalar>> = rows.iter().map(|r| v(r)).collect();
            let mut ech = Echelon::new(5);
            for r in &rows {
                ech.insert(r);
            }
            let ns = ech.null_space();
            prop_assert_eq!(ns.len() + ech.rank(), 5);
            for x in &ns {
                for r in &rows {
                    let dot = r.iter().zip(x).fold(Scalar::zero(), |acc, (a, b)| &acc + &(a * b));
                    prop_assert!(dot.is_zero());
                }
            }
            for r in &rows {
                prop_assert!(ech.contains(r));
            }
        }
    }
}

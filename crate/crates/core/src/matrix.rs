//! Dense exact matrices over a prime field or the rationals.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

/// Row-major dense matrix with homogeneous entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub field: FieldSpec,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, field: FieldSpec, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "expected {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        for e in &entries {
            if e.field() != field {
                return Err(Error::FieldMismatch {
                    expected: field.to_string(),
                    found: e.field().to_string(),
                });
            }
        }
        Ok(Matrix {
            rows,
            cols,
            field,
            entries,
        })
    }

    pub fn zero(rows: usize, cols: usize, field: FieldSpec) -> Self {
        Matrix {
            rows,
            cols,
            field,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(n: usize, field: FieldSpec) -> Self {
        let mut m = Matrix::zero(n, n, field);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_i64(rows: usize, cols: usize, field: FieldSpec, data: &[i64]) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix {
            rows,
            cols,
            field,
            entries: data.iter().map(|&x| field.from_i64(x)).collect(),
        }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Matrix product. Shape or field mismatch is a programming error
    /// and panics; external inputs are validated at parse time.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        assert_eq!(self.field, other.field, "matrix product field mismatch");
        let mut out = Matrix::zero(self.rows, other.cols, self.field);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j).add(&a.mul(other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Entrywise sum; shape mismatch panics (see `mul`).
    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "matrix sum shape mismatch"
        );
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).add(other.get(i, j)));
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let mut out = self.clone();
        for e in &mut out.entries {
            *e = e.mul(c);
        }
        out
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn augment(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("augment".into()));
        }
        let mut out = Matrix::zero(self.rows, self.cols + other.cols, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        Ok(out)
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("stack".into()));
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Matrix::new(self.rows + other.rows, self.cols, self.field, entries)
    }

    /// Reduced row echelon form. Returns the pivot columns.
    /// Pivot choice: first nonzero entry scanning rows top-down (deterministic).
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    let a = self.get(r, j).clone();
                    let b = self.get(pr, j).clone();
                    self.set(r, j, b);
                    self.set(pr, j, a);
                }
            }
            let inv = self.get(r, c).inv();
            for j in 0..self.cols {
                let v = self.get(r, j).mul(&inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i != r && !self.get(i, c).is_zero() {
                    let f = self.get(i, c).clone();
                    for j in 0..self.cols {
                        let v = self.get(i, j).sub(&f.mul(self.get(r, j)));
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Rank via exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right nullspace, one column vector per basis element.
    pub fn nullspace(&self) -> Vec<Matrix> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();
        let mut basis = Vec::new();
        for &f in &free {
            let mut v = Matrix::zero(self.cols, 1, self.field);
            v.set(f, 0, self.field.one());
            for (r, &pc) in pivots.iter().enumerate() {
                v.set(pc, 0, m.get(r, f).neg());
            }
            basis.push(v);
        }
        basis
    }

    /// Determinant (square matrices), by fraction-free elimination over the field.
    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let mut det = self.field.one();
        let n = self.rows;
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return self.field.zero();
            };
            if pr != c {
                det = det.neg();
                for j in 0..n {
                    let a = m.get(c, j).clone();
                    let b = m.get(pr, j).clone();
                    m.set(c, j, b);
                    m.set(pr, j, a);
                }
            }
            let piv = m.get(c, c).clone();
            det = det.mul(&piv);
            let inv = piv.inv();
            for i in c + 1..n {
                if !m.get(i, c).is_zero() {
                    let f = m.get(i, c).mul(&inv);
                    for j in c..n {
                        let v = m.get(i, j).sub(&f.mul(m.get(c, j)));
                        m.set(i, j, v);
                    }
                }
            }
        }
        det
    }

    /// Inverse of an invertible square matrix; `None` if singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = self.augment(&Matrix::identity(n, self.field)).unwrap();
        let pivots = aug.rref();
        if pivots.len() < n || pivots.iter().take(n).enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        let mut inv = Matrix::zero(n, n, self.field);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Some(inv)
    }
}

/// Exact rank of `m` over its field.
pub fn rank(m: &Matrix) -> usize {
    m.rank()
}

/// Outcome of an exact linear solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveResult {
    /// One exact solution (free variables set to zero).
    Solution(Matrix),
    Inconsistent,
}

/// Solves `A x = b` exactly. `b` may have several columns.
pub fn solve(a: &Matrix, b: &Matrix) -> Result<SolveResult> {
    if a.rows != b.rows {
        return Err(Error::DimensionMismatch(format!(
            "A has {} rows, b has {}",
            a.rows, b.rows
        )));
    }
    if a.field != b.field {
        return Err(Error::FieldMismatch {
            expected: a.field.to_string(),
            found: b.field.to_string(),
        });
    }
    let mut aug = a.augment(b)?;
    let pivots = aug.rref();
    if pivots.iter().any(|&p| p >= a.cols) {
        return Ok(SolveResult::Inconsistent);
    }
    let mut x = Matrix::zero(a.cols, b.cols, a.field);
    for (r, &pc) in pivots.iter().enumerate() {
        for j in 0..b.cols {
            x.set(pc, j, aug.get(r, a.cols + j).clone());
        }
    }
    Ok(SolveResult::Solution(x))
}

/// Dimension of `{X : X M = M X for all M}`, via the nullspace of the
/// stacked commutation system on the n^2 entries of X.
pub fn commutant_dimension(mats: &[Matrix]) -> Result<usize> {
    if mats.is_empty() {
        return Err(Error::DimensionMismatch(
            "commutant of an empty set needs an explicit size; use commutant_dimension_sized"
                .into(),
        ));
    }
    let n = mats[0].rows;
    let field = mats[0].field;
    commutant_dimension_sized(mats, n, field)
}

pub fn commutant_dimension_sized(mats: &[Matrix], n: usize, field: FieldSpec) -> Result<usize> {
    for m in mats {
        if m.rows != n || m.cols != n {
            return Err(Error::DimensionMismatch(
                "commutant input must be square of equal size".into(),
            ));
        }
        if m.field != field {
            return Err(Error::FieldMismatch {
                expected: field.to_string(),
                found: m.field.to_string(),
            });
        }
    }
    if mats.is_empty() {
        return Ok(n * n);
    }
    // one row per (matrix, i, j) equation, columns indexed by X[a][b]
    let mut sys = Matrix::zero(mats.len() * n * n, n * n, field);
    let mut row = 0;
    for m in mats {
        for i in 0..n {
            for j in 0..n {
                // sum_k X[i][k] M[k][j] - M[i][k] X[k][j] = 0
                for k in 0..n {
                    let c1 = sys.get(row, i * n + k).add(m.get(k, j));
                    sys.set(row, i * n + k, c1);
                    let c2 = sys.get(row, k * n + j).sub(m.get(i, k));
                    sys.set(row, k * n + j, c2);
                }
                row += 1;
            }
        }
    }
    Ok(n * n - sys.rank())
}

/// Kronecker product: block `(i, j)` equals `a[i][j] * b`.
pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    assert_eq!(a.field, b.field);
    let mut out = Matrix::zero(a.rows * b.rows, a.cols * b.cols, a.field);
    for i in 0..a.rows {
        for j in 0..a.cols {
            let c = a.get(i, j);
            if c.is_zero() {
                continue;
            }
            for k in 0..b.rows {
                for l in 0..b.cols {
                    out.set(i * b.rows + k, j * b.cols + l, c.mul(b.get(k, l)));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_identity_and_zero() {
        let f = FieldSpec::Rational;
        assert_eq!(Matrix::identity(2, f).rank(), 2);
        assert_eq!(Matrix::zero(2, 2, f).rank(), 0);
    }

    #[test]
    fn rank_dependent_rows_f5() {
        let f = FieldSpec::Prime(5);
        let m = Matrix::from_i64(2, 2, f, &[1, 2, 2, 4]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn rank_equals_transpose_rank() {
        let f = FieldSpec::Prime(7);
        let m = Matrix::from_i64(3, 4, f, &[1, 2, 3, 4, 2, 4, 6, 8, 0, 1, 1, 0]);
        assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn solve_identity() {
        let f = FieldSpec::Rational;
        let a = Matrix::identity(3, f);
        let b = Matrix::from_i64(3, 1, f, &[4, 5, 6]);
        assert_eq!(solve(&a, &b).unwrap(), SolveResult::Solution(b));
    }

    #[test]
    fn solve_inconsistent() {
        let f = FieldSpec::Rational;
        let a = Matrix::zero(2, 2, f);
        let b = Matrix::from_i64(2, 1, f, &[1, 0]);
        assert_eq!(solve(&a, &b).unwrap(), SolveResult::Inconsistent);
    }

    #[test]
    fn solve_diagonal_rational() {
        let f = FieldSpec::Rational;
        let a = Matrix::from_i64(2, 2, f, &[2, 0, 0, 3]);
        let b = Matrix::from_i64(2, 1, f, &[1, 1]);
        let SolveResult::Solution(x) = solve(&a, &b).unwrap() else {
            panic!("expected solution");
        };
        assert_eq!(*x.get(0, 0), f.from_i64(1).div(&f.from_i64(2)));
        assert_eq!(*x.get(1, 0), f.from_i64(1).div(&f.from_i64(3)));
    }

    #[test]
    fn solve_dimension_mismatch() {
        let f = FieldSpec::Rational;
        let a = Matrix::zero(2, 2, f);
        let b = Matrix::zero(3, 1, f);
        assert!(solve(&a, &b).is_err());
    }

    #[test]
    fn commutant_trivial_cases() {
        let f = FieldSpec::Prime(3);
        assert_eq!(commutant_dimension_sized(&[], 3, f).unwrap(), 9);
        let id = Matrix::identity(3, f);
        assert_eq!(commutant_dimension(&[id]).unwrap(), 9);
    }

    #[test]
    fn commutant_s2_permutation_mats() {
        let f = FieldSpec::Prime(3);
        let id = Matrix::identity(2, f);
        let swap = Matrix::from_i64(2, 2, f, &[0, 1, 1, 0]);
        assert_eq!(commutant_dimension(&[id, swap]).unwrap(), 2);
    }

    #[test]
    fn kron_identities() {
        let f = FieldSpec::Rational;
        let i2 = Matrix::identity(2, f);
        assert_eq!(kron(&i2, &i2), Matrix::identity(4, f));
        let z = Matrix::zero(1, 1, f);
        let any = Matrix::from_i64(2, 3, f, &[1, 2, 3, 4, 5, 6]);
        assert!(kron(&z, &any).is_zero());
        let a = Matrix::from_i64(2, 2, f, &[1, 1, 0, 1]);
        let b = Matrix::from_i64(1, 1, f, &[2]);
        assert_eq!(kron(&a, &b), Matrix::from_i64(2, 2, f, &[2, 2, 0, 2]));
    }

    #[test]
    fn kron_mixed_product() {
        let f = FieldSpec::Prime(7);
        let a = Matrix::from_i64(2, 2, f, &[1, 2, 3, 4]);
        let b = Matrix::from_i64(2, 2, f, &[0, 1, 1, 1]);
        let c = Matrix::from_i64(2, 2, f, &[2, 0, 0, 5]);
        let d = Matrix::from_i64(2, 2, f, &[1, 1, 0, 3]);
        let lhs = kron(&a, &b).mul(&kron(&c, &d));
        let rhs = kron(&a.mul(&c), &b.mul(&d));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_roundtrip() {
        let f = FieldSpec::Prime(5);
        let m = Matrix::from_i64(2, 2, f, &[1, 2, 3, 4]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2, f));
        let sing = Matrix::from_i64(2, 2, f, &[1, 2, 2, 4]);
        assert!(sing.inverse().is_none());
    }
}

//! Finite posets, topological linear extensions, and exact Möbius
//! inversion with arbitrary-precision integer values.

use num::bigint::BigInt;
use num::traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::Matrix;

/// A finite partial order given by its full relation matrix.
#[derive(Debug, Clone)]
pub struct FinitePoset {
    pub size: usize,
    leq: Vec<Vec<bool>>,
}

impl FinitePoset {
    /// Validates reflexivity, antisymmetry, and transitivity.
    pub fn new(leq: Vec<Vec<bool>>) -> Result<Self> {
        let n = leq.len();
        if leq.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidInput("relation matrix must be square".into()));
        }
        for i in 0..n {
            if !leq[i][i] {
                return Err(Error::NotPartialOrder(format!("not reflexive at {i}")));
            }
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(Error::NotPartialOrder(format!(
                        "antisymmetry fails at {i},{j}"
                    )));
                }
                for k in 0..n {
                    if leq[i][j] && leq[j][k] && !leq[i][k] {
                        return Err(Error::NotPartialOrder(format!(
                            "transitivity fails at {i},{j},{k}"
                        )));
                    }
                }
            }
        }
        Ok(FinitePoset { size: n, leq })
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x][y]
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq[x][y]
    }

    /// Linear extension by Kahn's algorithm, taking the lowest available
    /// index at each step. Deterministic for a fixed poset.
    pub fn linear_extension(&self) -> Vec<usize> {
        let n = self.size;
        let mut placed = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for _ in 0..n {
            let next = (0..n)
                .find(|&x| !placed[x] && (0..n).all(|y| placed[y] || !self.lt(y, x)))
                .expect("a finite poset always has a minimal element");
            placed[next] = true;
            out.push(next);
        }
        out
    }

    pub fn down_set(&self, x: usize) -> Vec<usize> {
        (0..self.size).filter(|&y| self.leq[y][x]).collect()
    }

    pub fn is_minimal(&self, x: usize) -> bool {
        (0..self.size).all(|y| !self.lt(y, x))
    }
}

/// Möbius function values for every comparable pair, exact integers.
#[derive(Debug, Clone)]
pub struct MobiusTable {
    pub size: usize,
    values: Vec<Vec<BigInt>>,
}

impl MobiusTable {
    /// Computes mu by the defining recursion along a linear extension:
    /// mu(x,x) = 1 and mu(x,y) = -sum over x <= z < y of mu(x,z).
    pub fn new(poset: &FinitePoset) -> Self {
        let n = poset.size;
        let ext = poset.linear_extension();
        let mut values = vec![vec![BigInt::zero(); n]; n];
        for x in 0..n {
            values[x][x] = BigInt::one();
            for &y in &ext {
                if poset.lt(x, y) {
                    let mut acc = BigInt::zero();
                    for z in 0..n {
                        if poset.leq(x, z) && poset.lt(z, y) {
                            acc += &values[x][z];
                        }
                    }
                    values[x][y] = -acc;
                }
            }
        }
        MobiusTable { size: n, values }
    }

    pub fn mu(&self, x: usize, y: usize) -> &BigInt {
        &self.values[x][y]
    }

    /// mu cast into a field, for building inverse change-of-basis matrices.
    pub fn mu_in(&self, x: usize, y: usize, field: &FieldSpec) -> Scalar {
        field.from_bigint(&self.values[x][y])
    }
}

/// Zeta transform: c'(x) = sum over y <= x of c(y).
pub fn zeta_transform(poset: &FinitePoset, c: &[BigInt]) -> Vec<BigInt> {
    (0..poset.size)
        .map(|x| {
            let mut acc = BigInt::zero();
            for y in 0..poset.size {
                if poset.leq(y, x) {
                    acc += &c[y];
                }
            }
            acc
        })
        .collect()
}

/// Möbius inversion: recovers c from its zeta transform,
/// c(x) = sum over y <= x of mu(y, x) c'(y).
pub fn mobius_invert(poset: &FinitePoset, mob: &MobiusTable, cz: &[BigInt]) -> Vec<BigInt> {
    (0..poset.size)
        .map(|x| {
            let mut acc = BigInt::zero();
            for y in 0..poset.size {
                if poset.leq(y, x) {
                    acc += mob.mu(y, x) * &cz[y];
                }
            }
            acc
        })
        .collect()
}

/// Zeta matrix over a field: Z[x][y] = 1 iff y <= x (rows indexed by x).
pub fn zeta_matrix(poset: &FinitePoset, field: &FieldSpec) -> Matrix {
    let n = poset.size;
    let mut m = Matrix::zero(n, n, *field);
    for x in 0..n {
        for y in 0..n {
            if poset.leq(y, x) {
                m.set(x, y, field.one());
            }
        }
    }
    m
}

/// Möbius matrix over a field: M[x][y] = mu(y, x); inverse of the zeta matrix.
pub fn mobius_matrix(poset: &FinitePoset, mob: &MobiusTable, field: &FieldSpec) -> Matrix {
    let n = poset.size;
    let mut m = Matrix::zero(n, n, *field);
    for x in 0..n {
        for y in 0..n {
            if poset.leq(y, x) {
                m.set(x, y, mob.mu_in(y, x, field));
            }
        }
    }
    m
}

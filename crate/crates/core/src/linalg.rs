//! Dense exact matrices over a coefficient ring, with Gaussian elimination over `Q`.

use crate::arith::{Field, Ring, Q};
use crate::error::{Error, Result};
use num_traits::Zero;
use std::fmt;

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<C: Ring> {
    rows: usize,
    cols: usize,
    data: Vec<C>,
}

impl<C: Ring> Matrix<C> {
    /// All-zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![C::zero(); rows * cols] }
    }

    /// Identity.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, C::one());
        }
        m
    }

    /// From row vectors.
    pub fn from_rows(rows: Vec<Vec<C>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// From a generator function.
    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> C) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry `(i, j)` (0-based).
    pub fn get(&self, i: usize, j: usize) -> &C {
        &self.data[i * self.cols + j]
    }

    /// Sets entry `(i, j)`.
    pub fn set(&mut self, i: usize, j: usize, v: C) {
        self.data[i * self.cols + j] = v;
    }

    /// Applies `f` to every entry.
    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> Matrix<D> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Entrywise sum.
    pub fn add(&self, o: &Self) -> Result<Self> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} + {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect(),
        })
    }

    /// Entrywise difference.
    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.scale_by(&C::one().neg()))
    }

    /// Multiplication by a ring element.
    pub fn scale_by(&self, s: &C) -> Self {
        self.map(|a| a.mul(s))
    }

    /// Matrix product.
    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.cols != o.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut r = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * r.cols + j;
                    r.data[idx] = Ring::add(&r.data[idx], &Ring::mul(&a, b));
                }
            }
        }
        Ok(r)
    }

    /// Kronecker (tensor) product `self ⊗ o`.
    pub fn kron(&self, o: &Self) -> Self {
        let mut r = Self::zeros(self.rows * o.rows, self.cols * o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        r.set(i * o.rows + k, j * o.cols + l, a.mul(o.get(k, l)));
                    }
                }
            }
        }
        r
    }

    /// Transpose.
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Trace of a square matrix.
    pub fn trace(&self) -> C {
        (0..self.rows.min(self.cols)).fold(C::zero(), |acc, i| Ring::add(&acc, self.get(i, i)))
    }

    /// `[self, o] = self·o − o·self`.
    pub fn commutator(&self, o: &Self) -> Result<Self> {
        self.mul(o)?.sub(&o.mul(self)?)
    }

    /// True when every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// True when the matrix is a scalar multiple of the identity.
    pub fn scalar_value(&self) -> Option<C> {
        if self.rows != self.cols || self.rows == 0 {
            return None;
        }
        let d = self.get(0, 0).clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                let ok = if i == j { *v == d } else { v.is_zero() };
                if !ok {
                    return None;
                }
            }
        }
        Some(d)
    }

    /// Matrix–vector product.
    pub fn apply(&self, v: &[C]) -> Result<Vec<C>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch("matrix-vector".into()));
        }
        Ok((0..self.rows)
            .map(|i| (0..self.cols).fold(C::zero(), |acc, j| Ring::add(&acc, &Ring::mul(&self.get(i, j), &v[j]))))
            .collect())
    }

    /// Integer power of a square matrix.
    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut r = Self::identity(self.rows);
        for _ in 0..e {
            r = r.mul(self)?;
        }
        Ok(r)
    }
}

impl<C: Field> Matrix<C> {
    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row >= m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else { continue };
            if p != row {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, row * m.cols + j);
                }
            }
            let inv = m.get(row, col).inv();
            for j in 0..m.cols {
                let v = m.get(row, j).mul(&inv);
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r != row && !m.get(r, col).is_zero() {
                    let f = m.get(r, col).clone();
                    for j in 0..m.cols {
                        let v = Ring::sub(m.get(r, j), &Ring::mul(&f, m.get(row, j)));
                        m.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    /// Rank.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space.
    pub fn nullspace(&self) -> Vec<Vec<C>> {
        let (r, piv) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !piv.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![C::zero(); self.cols];
                v[f] = C::one();
                for (i, &p) in piv.iter().enumerate() {
                    v[p] = r.get(i, f).neg();
                }
                v
            })
            .collect()
    }

    /// Solves `self · x = b`; errors unless the solution exists and is unique.
    pub fn solve(&self, b: &[C]) -> Result<Vec<C>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch("right-hand side length".into()));
        }
        let aug = Self::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let (r, piv) = aug.rref();
        if piv.contains(&self.cols) {
            return Err(Error::SingularSystem("inconsistent system".into()));
        }
        if piv.len() < self.cols {
            return Err(Error::SingularSystem(format!(
                "rank {} < {} unknowns",
                piv.len(),
                self.cols
            )));
        }
        Ok((0..self.cols).map(|i| r.get(i, self.cols).clone()).collect())
    }

    /// Inverse of a square matrix.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                C::one()
            } else {
                C::zero()
            }
        });
        let (r, piv) = aug.rref();
        if piv.len() < n || piv[n - 1] >= n {
            return Err(Error::SingularSystem("singular matrix".into()));
        }
        Ok(Self::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
    }
}

impl Matrix<Q> {
    /// Parses a row-major JSON array of `"p/q"` strings (numbers are accepted too).
    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let rows = v.as_array().ok_or_else(|| Error::Parse("matrix must be an array of rows".into()))?;
        let mut out = Vec::new();
        for r in rows {
            let cells = r.as_array().ok_or_else(|| Error::Parse("matrix row must be an array".into()))?;
            let mut row = Vec::new();
            for c in cells {
                let s = match c {
                    serde_json::Value::String(s) => s.clone(),
                    serde_json::Value::Number(n) => n.to_string(),
                    _ => return Err(Error::Parse("matrix entries must be strings or numbers".into())),
                };
                row.push(crate::arith::parse_q(&s)?);
            }
            out.push(row);
        }
        Self::from_rows(out)
    }

    /// True when every entry is zero (rational specialization helper).
    pub fn all_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }
}

impl<C: Ring + fmt::Display> fmt::Display for Matrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, qi};

    #[test]
    fn solve_and_inverse() {
        let a = Matrix::from_rows(vec![vec![qi(2), qi(1)], vec![qi(1), qi(3)]]).unwrap();
        let x = a.solve(&[qi(3), qi(5)]).unwrap();
        assert_eq!(x, vec![q(4, 5), q(7, 5)]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(2));
    }

    #[test]
    fn nullspace_of_rank_one() {
        let a = Matrix::from_rows(vec![vec![qi(1), qi(2)], vec![qi(2), qi(4)]]).unwrap();
        let ns = a.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(a.apply(&ns[0]).unwrap().iter().all(|x| x.is_zero()));
    }

    #[test]
    fn singular_system_reported() {
        let a = Matrix::from_rows(vec![vec![qi(1), qi(2)], vec![qi(2), qi(4)]]).unwrap();
        assert!(matches!(a.solve(&[qi(1), qi(3)]), Err(Error::SingularSystem(_))));
    }
}

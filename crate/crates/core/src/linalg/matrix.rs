use std::fmt;
use std::ops::{Index, IndexMut};

use super::Gf3;
use crate::{Error, Result};

/// Dense row-major matrix over GF(3).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gf3Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Gf3>,
}

/// Reduced row echelon form together with its pivot structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RrefResult {
    pub rref: Gf3Matrix,
    /// Strictly increasing; row `i` of `rref` has its leading 1 in `pivot_cols[i]`.
    pub pivot_cols: Vec<usize>,
    pub rank: usize,
}

impl RrefResult {
    pub fn free_cols(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.rref.cols];
        for &p in &self.pivot_cols {
            is_pivot[p] = true;
        }
        (0..self.rref.cols).filter(|&c| !is_pivot[c]).collect()
    }
}

/// Pivot variables written as GF(3)-linear forms in the free variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParametricSolution {
    pub n_vars: usize,
    pub pivot_cols: Vec<usize>,
    pub free_cols: Vec<usize>,
    /// `coefficients[i][j]` multiplies free variable `free_cols[j]` in the value of `pivot_cols[i]`.
    pub coefficients: Vec<Vec<Gf3>>,
}

impl ParametricSolution {
    /// Extends an assignment of the free variables (in `free_cols` order) to a full kernel vector.
    pub fn evaluate(&self, free_values: &[Gf3]) -> Result<Vec<Gf3>> {
        if free_values.len() != self.free_cols.len() {
            return Err(Error::DimensionMismatch {
                expected: self.free_cols.len(),
                got: free_values.len(),
            });
        }
        let mut x = vec![Gf3::ZERO; self.n_vars];
        for (&c, &v) in self.free_cols.iter().zip(free_values) {
            x[c] = v;
        }
        for (&p, coeffs) in self.pivot_cols.iter().zip(&self.coefficients) {
            x[p] = coeffs.iter().zip(free_values).map(|(&a, &b)| a * b).sum();
        }
        Ok(x)
    }

    /// Like [`evaluate`](Self::evaluate) but returns `None` as soon as some pivot variable is zero.
    pub fn evaluate_nonzero(&self, free_values: &[Gf3]) -> Option<Vec<Gf3>> {
        debug_assert_eq!(free_values.len(), self.free_cols.len());
        let mut x = vec![Gf3::ZERO; self.n_vars];
        for (&c, &v) in self.free_cols.iter().zip(free_values) {
            if v.is_zero() {
                return None;
            }
            x[c] = v;
        }
        for (&p, coeffs) in self.pivot_cols.iter().zip(&self.coefficients) {
            let v: Gf3 = coeffs.iter().zip(free_values).map(|(&a, &b)| a * b).sum();
            if v.is_zero() {
                return None;
            }
            x[p] = v;
        }
        Some(x)
    }
}

impl Gf3Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Gf3Matrix {
            rows,
            cols,
            data: vec![Gf3::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Gf3::ONE;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Gf3>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Ok(Gf3Matrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Builds a matrix from integer entries, each reduced modulo 3.
    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        let rows: Vec<Vec<Gf3>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| Gf3::new(v)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Gf3] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Gf3> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn transpose(&self) -> Gf3Matrix {
        let mut t = Gf3Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    /// `self * x` for a column vector `x`.
    pub fn mul_vec(&self, x: &[Gf3]) -> Result<Vec<Gf3>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: x.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(x).map(|(&a, &b)| a * b).sum())
            .collect())
    }

    /// `yᵀ * self` for a row-coefficient vector `y`.
    pub fn combine_rows(&self, y: &[Gf3]) -> Result<Vec<Gf3>> {
        if y.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: y.len(),
            });
        }
        let mut out = vec![Gf3::ZERO; self.cols];
        for (i, &c) in y.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, &a) in out.iter_mut().zip(self.row(i)) {
                *o += c * a;
            }
        }
        Ok(out)
    }

    /// The matrix formed by the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Result<Gf3Matrix> {
        if let Some(&bad) = cols.iter().find(|&&c| c >= self.cols) {
            return Err(Error::ColumnOutOfRange {
                index: bad,
                cols: self.cols,
            });
        }
        let mut m = Gf3Matrix::zeros(self.rows, cols.len());
        for i in 0..self.rows {
            for (k, &c) in cols.iter().enumerate() {
                m[(i, k)] = self[(i, c)];
            }
        }
        Ok(m)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Gauss-Jordan elimination, scanning columns left to right and rows top to bottom.
    pub fn rref(&self) -> RrefResult {
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            // every nonzero element is its own inverse
            let inv = m[(r, c)];
            if inv != Gf3::ONE {
                for j in c..m.cols {
                    m[(r, j)] = m[(r, j)] * inv;
                }
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m[(i, c)];
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = m[(r, j)];
                    m[(i, j)] = m[(i, j)] - f * v;
                }
            }
            pivot_cols.push(c);
            r += 1;
        }
        RrefResult {
            rank: pivot_cols.len(),
            rref: m,
            pivot_cols,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// One basis vector per free column, with that column set to 1 and the other free columns 0.
    pub fn nullspace_basis(&self) -> Vec<Vec<Gf3>> {
        let param = self.solve_parametric();
        (0..param.free_cols.len())
            .map(|k| {
                let mut unit = vec![Gf3::ZERO; param.free_cols.len()];
                unit[k] = Gf3::ONE;
                param.evaluate(&unit).expect("unit vector has matching length")
            })
            .collect()
    }

    /// Rank of the submatrix formed by `cols`. Duplicate indices count once.
    pub fn column_submatrix_rank(&self, cols: &[usize]) -> Result<usize> {
        let mut cols = cols.to_vec();
        cols.sort_unstable();
        cols.dedup();
        if cols.is_empty() {
            return Ok(0);
        }
        Ok(self.select_columns(&cols)?.rank())
    }

    pub fn solve_parametric(&self) -> ParametricSolution {
        self.rref().parametric()
    }
}

impl RrefResult {
    pub fn parametric(&self) -> ParametricSolution {
        let free_cols = self.free_cols();
        let coefficients = (0..self.rank)
            .map(|i| free_cols.iter().map(|&f| -self.rref[(i, f)]).collect())
            .collect();
        ParametricSolution {
            n_vars: self.rref.cols,
            pivot_cols: self.pivot_cols.clone(),
            free_cols,
            coefficients,
        }
    }
}

impl Index<(usize, usize)> for Gf3Matrix {
    type Output = Gf3;
    fn index(&self, (i, j): (usize, usize)) -> &Gf3 {
        assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Gf3Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Gf3 {
        assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Gf3Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

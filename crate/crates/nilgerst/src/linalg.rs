//! Exact dense linear algebra over ℚ(i).
//!
//! Everything reduces to Gaussian elimination with exact division. Pivots are
//! chosen deterministically: columns left to right, first nonzero row from
//! the top, so kernels, solutions and echelon forms are reproducible.

use crate::scalar::GaussianRational as Q;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_columns(cols: Vec<Vec<Q>>, rows: usize) -> Self {
        let c = cols.len();
        assert!(cols.iter().all(|col| col.len() == rows), "ragged columns");
        let mut m = Self::zeros(rows, c);
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Q {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Q) {
        self.data[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<Q> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn conj_transpose(&self) -> Matrix {
        let mut m = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(c, r, self.at(r, c).conj());
            }
        }
        m
    }

    pub fn mat_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = Q::zero();
                for c in 0..self.cols {
                    let e = self.at(r, c);
                    if !e.is_zero() && !v[c].is_zero() {
                        acc += &(e * &v[c]);
                    }
                }
                acc
            })
            .collect()
    }

    /// `[self | right]` side by side.
    pub fn augment(&self, right: &Matrix) -> Matrix {
        assert_eq!(self.rows, right.rows);
        let mut m = Matrix::zeros(self.rows, self.cols + right.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, self.at(r, c).clone());
            }
            for c in 0..right.cols {
                m.set(r, self.cols + c, right.at(r, c).clone());
            }
        }
        m
    }

    /// `self` on top of `below`.
    pub fn stack(&self, below: &Matrix) -> Matrix {
        assert_eq!(self.cols, below.cols);
        let mut m = Matrix::zeros(self.rows + below.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, self.at(r, c).clone());
            }
        }
        for r in 0..below.rows {
            for c in 0..self.cols {
                m.set(self.rows + r, c, below.at(r, c).clone());
            }
        }
        m
    }

    /// Reduced row echelon form and the pivot column indices.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    m.data.swap(p * m.cols + c, row * m.cols + c);
                }
            }
            let inv = m.at(row, col).inv().expect("pivot is nonzero");
            for c in col..m.cols {
                let v = m.at(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r != row && !m.at(r, col).is_zero() {
                    let f = m.at(r, col).clone();
                    for c in col..m.cols {
                        let v = m.at(r, c) - &(m.at(row, c) * &f);
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of `ker(self)` as coordinate vectors in the domain, one per
    /// free column, parameterized with the free coordinate set to 1.
    pub fn kernel_basis(&self) -> Vec<Vec<Q>> {
        let (r, pivots) = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![Q::zero(); self.cols];
            vec[free] = Q::one();
            for col in 0..self.cols {
                if let Some(prow) = pivot_set[col] {
                    vec[col] = -r.at(prow, free);
                }
            }
            basis.push(vec);
        }
        basis
    }

    /// One exact solution of `self · x = b`, or `None` if inconsistent.
    /// Free coordinates are set to zero, so the solution is deterministic.
    pub fn solve(&self, b: &[Q]) -> Option<Vec<Q>> {
        assert_eq!(b.len(), self.rows);
        let rhs = Matrix::from_columns(vec![b.to_vec()], self.rows);
        let (r, pivots) = self.augment(&rhs).rref();
        if pivots.contains(&self.cols) {
            return None; // pivot in the constants column
        }
        let mut x = vec![Q::zero(); self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = r.at(row, self.cols).clone();
        }
        Some(x)
    }

    /// Indices of a maximal independent set of columns, scanning left to right.
    pub fn independent_columns(&self) -> Vec<usize> {
        self.rref().1
    }

    pub fn det(&self) -> Q {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Q::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.at(r, col).is_zero()) else {
                return Q::zero();
            };
            if p != col {
                for c in 0..n {
                    m.data.swap(p * n + c, col * n + c);
                }
                det = -det;
            }
            let pivot = m.at(col, col).clone();
            det *= &pivot;
            let inv = pivot.inv().unwrap();
            for r in col + 1..n {
                if !m.at(r, col).is_zero() {
                    let f = m.at(r, col) * &inv;
                    for c in col..n {
                        let v = m.at(r, c) - &(m.at(col, c) * &f);
                        m.set(r, c, v);
                    }
                }
            }
        }
        det
    }

    /// Exact inverse; `None` if singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let (r, pivots) = self.augment(&Matrix::identity(n)).rref();
        if pivots.len() < n || pivots.iter().take(n).enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for row in 0..n {
            for c in 0..n {
                inv.set(row, c, r.at(row, n + c).clone());
            }
        }
        Some(inv)
    }
}

/// Rank of the span of a set of coordinate vectors.
pub fn span_rank(vectors: &[Vec<Q>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Matrix::from_rows(vectors.to_vec()).rank()
}

/// `a ⊆ span(b)`, exact.
pub fn span_contains(b: &[Vec<Q>], a: &[Vec<Q>]) -> bool {
    if a.is_empty() {
        return true;
    }
    if b.is_empty() {
        return a.iter().all(|v| v.iter().all(Q::is_zero));
    }
    let rank_b = span_rank(b);
    let mut all = b.to_vec();
    all.extend(a.iter().cloned());
    span_rank(&all) == rank_b
}

/// Exact equality of spans.
pub fn span_eq(a: &[Vec<Q>], b: &[Vec<Q>]) -> bool {
    span_contains(a, b) && span_contains(b, a)
}

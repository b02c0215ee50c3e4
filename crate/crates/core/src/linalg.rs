//! Dense exact Gaussian elimination over the rationals.

use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<Scalar>>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![vec![Scalar::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>, cols: usize) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == cols));
        Self {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vec<Scalar>], rows: usize) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m.data[i][j] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.data[i][j] = x;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        self.data.iter().map(|r| r[j].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.iter().all(Zero::is_zero))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j][i] = self.data[i][j].clone();
            }
        }
        t
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = self.clone();
        for row in &mut out.data {
            for x in row.iter_mut() {
                *x *= c;
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs.data[k][j];
                    if !b.is_zero() {
                        out.data[i][j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        self.data
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.data[i][c].is_zero()) else {
                continue;
            };
            self.data.swap(r, p);
            let inv = Scalar::one() / &self.data[r][c];
            for x in self.data[r].iter_mut() {
                *x *= &inv;
            }
            let pivot_row = self.data[r].clone();
            for i in 0..self.rows {
                if i == r || self.data[i][c].is_zero() {
                    continue;
                }
                let f = self.data[i][c].clone();
                for (x, p) in self.data[i].iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x -= &f * p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of `{x : A x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -m.data[r][f].clone();
                }
                v
            })
            .collect()
    }

    /// Some solution of `A x = b`, if one exists.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.data[i][j] = self.data[i][j].clone();
            }
            aug.data[i][self.cols] = b[i].clone();
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.data[r][self.cols].clone();
        }
        Some(x)
    }
}

/// Incrementally built echelon basis of a subspace of `k^n`, remembering how
/// each reduced row is expressed in the inserted vectors.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    dim: usize,
    // (pivot column, reduced vector, combination of inserted vectors)
    rows: Vec<(usize, Vec<Scalar>, Vec<Scalar>)>,
    inserted: usize,
}

impl EchelonBasis {
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            rows: Vec::new(),
            inserted: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        let mut v = v.to_vec();
        let mut combo = vec![Scalar::zero(); self.inserted];
        for (pc, row, rc) in &self.rows {
            if v[*pc].is_zero() {
                continue;
            }
            let f = v[*pc].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
            for (x, r) in combo.iter_mut().zip(rc) {
                if !r.is_zero() {
                    *x += &f * r;
                }
            }
        }
        (v, combo)
    }

    /// Inserts `v`; returns false (and leaves the basis unchanged) when `v`
    /// is already in the span.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.dim);
        let (residual, combo) = self.reduce(v);
        let Some(pc) = residual.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = Scalar::one() / &residual[pc];
        let row: Vec<Scalar> = residual.iter().map(|x| x * &inv).collect();
        // residual = v - Σ combo_k · inserted_k
        let mut rc: Vec<Scalar> = combo.iter().map(|x| -x * &inv).collect();
        rc.push(inv.clone());
        let idx = self.inserted;
        self.inserted += 1;
        for (_, _, c) in self.rows.iter_mut() {
            c.push(Scalar::zero());
        }
        debug_assert_eq!(rc.len(), idx + 1);
        self.rows.push((pc, row, rc));
        true
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).0.iter().all(Zero::is_zero)
    }

    /// Coordinates of `v` in terms of the successfully inserted vectors.
    pub fn express(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let (residual, combo) = self.reduce(v);
        residual.iter().all(Zero::is_zero).then_some(combo)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn m(rows: &[&[i64]]) -> Matrix {
        let cols = rows[0].len();
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
            cols,
        )
    }

    #[test]
    fn rank_and_nullspace() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(a.apply(&ns[0]).iter().all(Zero::is_zero));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(&[&[1, 1], &[1, -1]]);
        assert_eq!(a.solve(&[int(2), int(0)]).unwrap(), vec![int(1), int(1)]);
        let b = m(&[&[1, 1], &[2, 2]]);
        assert!(b.solve(&[int(1), int(3)]).is_none());
    }

    #[test]
    fn echelon_basis_expresses_in_inserted_vectors() {
        let mut e = EchelonBasis::new(3);
        assert!(e.insert(&[int(1), int(1), int(0)]));
        assert!(e.insert(&[int(0), int(1), int(1)]));
        assert!(!e.insert(&[int(1), int(2), int(1)]));
        let c = e.express(&[int(2), int(3), int(1)]).unwrap();
        assert_eq!(c, vec![int(2), int(1)]);
        assert!(e.express(&[int(0), int(0), int(1)]).is_none());
    }
}

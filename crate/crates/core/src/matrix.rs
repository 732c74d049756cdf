use crate::scalar::Scalar;
use crate::{Error, Result};

/// Dense row-major matrix over an exact scalar.
///
/// The workhorse is [`Matrix::rref`]: every subspace in this crate is stored
/// as the reduced row echelon form of a spanning set, which makes equality,
/// membership and dimension questions canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    n_cols: usize,
    rows: Vec<Vec<T>>,
}

impl<T: Scalar> Matrix<T> {
    pub fn new(n_cols: usize, rows: Vec<Vec<T>>) -> Result<Self> {
        for r in &rows {
            if r.len() != n_cols {
                return Err(Error::InvalidInput(format!(
                    "row has {} entries, expected {}",
                    r.len(),
                    n_cols
                )));
            }
        }
        Ok(Matrix { n_cols, rows })
    }

    pub fn empty(n_cols: usize) -> Self {
        Matrix {
            n_cols,
            rows: Vec::new(),
        }
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.rows[i]
    }

    pub fn push_row(&mut self, row: Vec<T>) -> Result<()> {
        if row.len() != self.n_cols {
            return Err(Error::InvalidInput(format!(
                "row has {} entries, expected {}",
                row.len(),
                self.n_cols
            )));
        }
        self.rows.push(row);
        Ok(())
    }

    /// Vertical concatenation; both operands keep their column count.
    pub fn stacked(&self, other: &Matrix<T>) -> Result<Matrix<T>> {
        if other.n_cols != self.n_cols {
            return Err(Error::InvalidInput(format!(
                "cannot stack {} columns onto {}",
                other.n_cols, self.n_cols
            )));
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(Matrix {
            n_cols: self.n_cols,
            rows,
        })
    }

    /// Reduces in place to reduced row echelon form and returns the pivot
    /// columns in increasing order. Zero rows are dropped, so afterwards
    /// `n_rows() == rank` and equal row spaces give identical matrices.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..self.n_cols {
            let Some(src) = (pivot_row..self.rows.len()).find(|&r| !self.rows[r][col].is_zero())
            else {
                continue;
            };
            self.rows.swap(pivot_row, src);
            let inv = T::one() / self.rows[pivot_row][col].clone();
            for x in &mut self.rows[pivot_row][col..] {
                *x = x.clone() * inv.clone();
            }
            for r in 0..self.rows.len() {
                if r != pivot_row && !self.rows[r][col].is_zero() {
                    let factor = self.rows[r][col].clone();
                    for c in col..self.n_cols {
                        let delta = factor.clone() * self.rows[pivot_row][c].clone();
                        self.rows[r][c] = self.rows[r][c].clone() - delta;
                    }
                }
            }
            pivots.push(col);
            pivot_row += 1;
            if pivot_row == self.rows.len() {
                break;
            }
        }
        self.rows.truncate(pivot_row);
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Reduces `v` against the rows of an RREF matrix with the given pivot
    /// columns; the remainder is zero exactly when `v` lies in the row space.
    pub fn reduce_against(&self, pivots: &[usize], v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.n_cols {
            return Err(Error::InvalidInput(format!(
                "vector has {} entries, expected {}",
                v.len(),
                self.n_cols
            )));
        }
        let mut out = v.to_vec();
        for (row, &col) in self.rows.iter().zip(pivots) {
            if out[col].is_zero() {
                continue;
            }
            let factor = out[col].clone();
            for c in col..self.n_cols {
                let delta = factor.clone() * row[c].clone();
                out[c] = out[c].clone() - delta;
            }
        }
        Ok(out)
    }

    /// Basis for the right nullspace, one vector per non-pivot column of the
    /// RREF. Rows of the result satisfy `self * v == 0`.
    pub fn nullspace(&self) -> Matrix<T> {
        let mut rref = self.clone();
        let pivots = rref.rref();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut m = vec![None; self.n_cols];
            for (i, &c) in pivots.iter().enumerate() {
                m[c] = Some(i);
            }
            m
        };
        let mut basis = Vec::new();
        for free in 0..self.n_cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![T::zero(); self.n_cols];
            v[free] = T::one();
            for (&col, row) in pivots.iter().zip(rref.rows.iter()) {
                v[col] = T::zero() - row[free].clone();
            }
            basis.push(v);
        }
        Matrix {
            n_cols: self.n_cols,
            rows: basis,
        }
    }

    /// New matrix whose columns are `idx` of `self`, in that order. Indices
    /// may repeat or permute; each must be in range.
    pub fn select_columns(&self, idx: &[usize]) -> Result<Matrix<T>> {
        for &c in idx {
            if c >= self.n_cols {
                return Err(Error::InvalidInput(format!(
                    "column {} out of range (matrix has {})",
                    c, self.n_cols
                )));
            }
        }
        let rows = self
            .rows
            .iter()
            .map(|r| idx.iter().map(|&c| r[c].clone()).collect())
            .collect();
        Ok(Matrix {
            n_cols: idx.len(),
            rows,
        })
    }

    /// Row space intersection by the Zassenhaus block trick: reduce
    /// `[A | A; B | 0]` and read the intersection off the rows whose left
    /// half vanished.
    pub fn intersect_rows(&self, other: &Matrix<T>) -> Result<Matrix<T>> {
        if other.n_cols != self.n_cols {
            return Err(Error::InvalidInput(format!(
                "cannot intersect {} columns with {}",
                other.n_cols, self.n_cols
            )));
        }
        let n = self.n_cols;
        let mut rows = Vec::with_capacity(self.n_rows() + other.n_rows());
        for r in &self.rows {
            let mut wide = r.clone();
            wide.extend(r.iter().cloned());
            rows.push(wide);
        }
        for r in &other.rows {
            let mut wide = r.clone();
            wide.extend(std::iter::repeat_with(T::zero).take(n));
            rows.push(wide);
        }
        let mut big = Matrix {
            n_cols: 2 * n,
            rows,
        };
        big.rref();
        let mut out = Vec::new();
        for row in big.rows {
            if row[..n].iter().all(|x| x.is_zero()) {
                let tail = row[n..].to_vec();
                if tail.iter().any(|x| !x.is_zero()) {
                    out.push(tail);
                }
            }
        }
        let mut m = Matrix {
            n_cols: n,
            rows: out,
        };
        m.rref();
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;
    use num_traits::Zero;

    fn rat_rows(rows: &[&[i64]]) -> Matrix<Rat> {
        let n_cols = rows[0].len();
        Matrix::new(
            n_cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| Rat::from_integer(x.into())).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn rref_is_canonical() {
        let mut a = rat_rows(&[&[2, 4, 0], &[1, 2, 1]]);
        let pivots = a.rref();
        assert_eq!(pivots, vec![0, 2]);
        assert_eq!(a, rat_rows(&[&[1, 2, 0], &[0, 0, 1]]));

        // same row space entered in a different order and scaling
        let mut b = rat_rows(&[&[3, 6, 3], &[-1, -2, 0]]);
        b.rref();
        assert_eq!(a, b);
    }

    #[test]
    fn rank_and_zero_rows() {
        let a = rat_rows(&[&[1, 2], &[2, 4], &[3, 6]]);
        assert_eq!(a.rank(), 1);
        let mut r = a.clone();
        r.rref();
        assert_eq!(r.n_rows(), 1);
    }

    #[test]
    fn membership_via_reduction() {
        let mut a = rat_rows(&[&[1, 0, 1], &[0, 1, 1]]);
        let pivots = a.rref();
        let inside = [
            Rat::from_integer(2.into()),
            Rat::from_integer(3.into()),
            Rat::from_integer(5.into()),
        ];
        let rem = a.reduce_against(&pivots, &inside).unwrap();
        assert!(rem.iter().all(|x| x.is_zero()));
        let outside = [
            Rat::from_integer(1.into()),
            Rat::from_integer(0.into()),
            Rat::from_integer(0.into()),
        ];
        let rem = a.reduce_against(&pivots, &outside).unwrap();
        assert!(rem.iter().any(|x| !x.is_zero()));
    }

    #[test]
    fn nullspace_annihilates() {
        let a = rat_rows(&[&[1, 2, 3], &[0, 1, 1]]);
        let ns = a.nullspace();
        assert_eq!(ns.n_rows(), 1);
        for v in ns.rows() {
            for row in a.rows() {
                let dot: Rat = row.iter().zip(v).map(|(x, y)| x.clone() * y.clone()).sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn intersection_of_planes_in_three_space() {
        // span{e0,e1} meet span{e1,e2} = span{e1}
        let a = rat_rows(&[&[1, 0, 0], &[0, 1, 0]]);
        let b = rat_rows(&[&[0, 1, 0], &[0, 0, 1]]);
        let m = a.intersect_rows(&b).unwrap();
        assert_eq!(m, rat_rows(&[&[0, 1, 0]]));
    }

    #[test]
    fn intersection_with_skew_spans() {
        // span{(1,1,0),(0,0,1)} meet span{(1,0,0),(0,1,0)} = span{(1,1,0)}
        let a = rat_rows(&[&[1, 1, 0], &[0, 0, 1]]);
        let b = rat_rows(&[&[1, 0, 0], &[0, 1, 0]]);
        let m = a.intersect_rows(&b).unwrap();
        assert_eq!(m, rat_rows(&[&[1, 1, 0]]));
    }

    #[test]
    fn disjoint_row_spaces_intersect_trivially() {
        let a = rat_rows(&[&[1, 0, 0]]);
        let b = rat_rows(&[&[0, 1, 0]]);
        let m = a.intersect_rows(&b).unwrap();
        assert_eq!(m.n_rows(), 0);
    }
}

//! Dense matrices over GF(q) and exact elimination.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::FiniteField;

#[derive(Clone, PartialEq, Eq)]
pub struct MatrixGF {
    field: Arc<FiniteField>,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for MatrixGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "MatrixGF {}x{} over {}",
            self.rows, self.cols, self.field
        )?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

/// Reduced row-echelon form with its rank and pivot columns.
#[derive(Debug, Clone)]
pub struct Rref {
    pub matrix: MatrixGF,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

fn same_field(a: &FiniteField, b: &FiniteField) -> Result<()> {
    if std::ptr::eq(a, b) || a == b {
        Ok(())
    } else {
        Err(Error::FieldMismatch)
    }
}

impl MatrixGF {
    pub fn new(field: Arc<FiniteField>, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if rows * cols != data.len() {
            return Err(Error::ShapeMismatch(format!(
                "{rows}x{cols} matrix from {} entries",
                data.len()
            )));
        }
        if let Some(&bad) = data.iter().find(|&&v| !field.contains(v as u64)) {
            return Err(Error::ElementOutOfRange {
                value: bad as u64,
                order: field.order(),
            });
        }
        Ok(MatrixGF {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn zeros(field: Arc<FiniteField>, rows: usize, cols: usize) -> Self {
        MatrixGF {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: Arc<FiniteField>, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(field: Arc<FiniteField>, cols: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::ShapeMismatch(format!(
                    "row of length {} in a matrix with {cols} columns",
                    r.len()
                )));
            }
            data.extend_from_slice(r);
        }
        Self::new(field, rows.len(), cols, data)
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        assert!(self.field.contains(v as u64));
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> MatrixGF {
        let mut out = Self::zeros(self.field.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[c * self.rows + r] = self.get(r, c);
            }
        }
        out
    }

    pub fn mul(&self, other: &MatrixGF) -> Result<MatrixGF> {
        same_field(&self.field, &other.field)?;
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Self::zeros(f.clone(), self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let idx = r * other.cols + c;
                    out.data[idx] = f.add(out.data[idx], f.mul(a, other.get(k, c)));
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MatrixGF) -> Result<MatrixGF> {
        same_field(&self.field, &other.field)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch("difference of unequal shapes".into()));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| self.field.sub(a, b))
            .collect();
        Ok(MatrixGF {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &MatrixGF) -> Result<MatrixGF> {
        same_field(&self.field, &other.field)?;
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "stacking {} and {} columns",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(MatrixGF {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Horizontal concatenation.
    pub fn augment(&self, other: &MatrixGF) -> Result<MatrixGF> {
        same_field(&self.field, &other.field)?;
        if self.rows != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "augmenting {} and {} rows",
                self.rows, other.rows
            )));
        }
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(other.row(r));
        }
        Ok(MatrixGF {
            field: self.field.clone(),
            rows: self.rows,
            cols,
            data,
        })
    }

    /// Keeps only the listed rows, in order.
    pub fn select_rows(&self, rows: impl IntoIterator<Item = usize>) -> MatrixGF {
        let mut data = Vec::new();
        let mut count = 0;
        for r in rows {
            data.extend_from_slice(self.row(r));
            count += 1;
        }
        MatrixGF {
            field: self.field.clone(),
            rows: count,
            cols: self.cols,
            data,
        }
    }

    /// Keeps the columns in `range`.
    pub fn select_cols(&self, range: std::ops::Range<usize>) -> MatrixGF {
        let cols = range.len();
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(&self.row(r)[range.clone()]);
        }
        MatrixGF {
            field: self.field.clone(),
            rows: self.rows,
            cols,
            data,
        }
    }

    /// Gauss–Jordan elimination; the pivot of each column is its first
    /// nonzero entry at or below the current row.
    pub fn rref(&self) -> Rref {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                let idx = r * m.cols + j;
                m.data[idx] = f.mul(m.data[idx], inv);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor != 0 {
                    let neg = f.neg(factor);
                    for j in c..m.cols {
                        let v = f.add(m.get(i, j), f.mul(neg, m.get(r, j)));
                        m.data[i * m.cols + j] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            matrix: m,
            rank: r,
            pivots,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Canonical basis of the row space: the nonzero rows of the rref.
    pub fn row_basis(&self) -> MatrixGF {
        let rr = self.rref();
        rr.matrix.select_rows(0..rr.rank)
    }

    /// Basis (as rows) of `{x : M x^T = 0}`.
    pub fn null_space(&self) -> MatrixGF {
        let f = &self.field;
        let rr = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &rr.pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut out = Self::zeros(f.clone(), free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            out.data[k * self.cols + fc] = 1;
            for (i, &pc) in rr.pivots.iter().enumerate() {
                out.data[k * self.cols + pc] = f.neg(rr.matrix.get(i, fc));
            }
        }
        out
    }

    /// Basis of rowspace(self) ∩ rowspace(other) by Zassenhaus' method:
    /// eliminate `[A | A ; B | 0]` and read off the rows whose left half vanished.
    pub fn row_space_intersect(&self, other: &MatrixGF) -> Result<MatrixGF> {
        same_field(&self.field, &other.field)?;
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch(
                "intersecting spaces of different length".into(),
            ));
        }
        let n = self.cols;
        let top = self.augment(self)?;
        let bottom = other.augment(&Self::zeros(self.field.clone(), other.rows, n))?;
        let rr = top.stack(&bottom)?.rref();
        let keep: Vec<usize> = (0..rr.rank).filter(|&i| rr.pivots[i] >= n).collect();
        Ok(rr
            .matrix
            .select_rows(keep)
            .select_cols(n..2 * n)
            .row_basis())
    }

    /// Basis of rowspace(self) + rowspace(other).
    pub fn row_space_sum(&self, other: &MatrixGF) -> Result<MatrixGF> {
        Ok(self.stack(other)?.row_basis())
    }

    /// `M v^T` for a single vector.
    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        let f = &self.field;
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gf(q: u64) -> Arc<FiniteField> {
        Arc::new(FiniteField::with_order(q).unwrap())
    }

    fn random(
        field: &Arc<FiniteField>,
        rows: usize,
        cols: usize,
        rng: &mut ChaCha8Rng,
    ) -> MatrixGF {
        let data = (0..rows * cols)
            .map(|_| rng.gen_range(0..field.order()))
            .collect();
        MatrixGF::new(field.clone(), rows, cols, data).unwrap()
    }

    #[test]
    fn rref_examples() {
        let f = gf(2);
        let id = MatrixGF::identity(f.clone(), 3);
        let rr = id.rref();
        assert_eq!(rr.matrix, id);
        assert_eq!(rr.rank, 3);

        let m = MatrixGF::from_rows(f.clone(), 3, &[vec![1, 1, 1], vec![1, 1, 1]]).unwrap();
        let rr = m.rref();
        assert_eq!(rr.rank, 1);
        assert_eq!(rr.matrix.row_vecs(), vec![vec![1, 1, 1], vec![0, 0, 0]]);
        assert_eq!(rr.pivots, vec![0]);
    }

    #[test]
    fn rref_is_idempotent_and_rank_is_stable_gf9() {
        let f = gf(9);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let m = random(&f, 5, 8, &mut rng);
            let rr = m.rref();
            assert_eq!(rr.matrix.rref().matrix, rr.matrix);
            assert_eq!(rr.matrix.rank(), rr.rank);
            // Row space preserved: stacking adds nothing.
            assert_eq!(m.stack(&rr.matrix).unwrap().rank(), rr.rank);
        }
    }

    #[test]
    fn rank_equals_transpose_rank() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let f = gf(q);
            for _ in 0..1000 {
                let rows = rng.gen_range(1..6);
                let cols = rng.gen_range(1..6);
                let m = random(&f, rows, cols, &mut rng);
                assert_eq!(m.rank(), m.transpose().rank());
            }
        }
    }

    #[test]
    fn null_space_examples() {
        let f = gf(2);
        let m = MatrixGF::from_rows(f.clone(), 3, &[vec![1, 1, 1]]).unwrap();
        let ns = m.null_space();
        assert_eq!(ns.rows(), 2);
        for r in 0..ns.rows() {
            assert_eq!(m.apply(ns.row(r)), vec![0]);
        }
        assert_eq!(MatrixGF::identity(f.clone(), 4).null_space().rows(), 0);

        let hamming = MatrixGF::from_rows(
            f,
            7,
            &[
                vec![1, 0, 0, 0, 1, 1, 0],
                vec![0, 1, 0, 0, 1, 0, 1],
                vec![0, 0, 1, 0, 0, 1, 1],
                vec![0, 0, 0, 1, 1, 1, 1],
            ],
        )
        .unwrap();
        let dual = hamming.null_space();
        assert_eq!(dual.rows(), 3);
        assert_eq!(dual.null_space().row_basis(), hamming.row_basis());
    }

    #[test]
    fn double_null_space_recovers_row_space() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let f = gf(q);
            for _ in 0..100 {
                let m = random(&f, rng.gen_range(1..5), rng.gen_range(1..7), &mut rng);
                let ns = m.null_space();
                assert_eq!(ns.rows(), m.cols() - m.rank());
                for r in 0..ns.rows() {
                    assert!(m.apply(ns.row(r)).iter().all(|&v| v == 0));
                }
                let back = if ns.rows() == 0 {
                    MatrixGF::identity(f.clone(), m.cols())
                } else {
                    ns.null_space()
                };
                assert_eq!(back.row_basis(), m.row_basis());
            }
        }
    }

    #[test]
    fn intersection_examples() {
        let f = gf(2);
        let a = MatrixGF::from_rows(f.clone(), 4, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0]]).unwrap();
        let b = MatrixGF::from_rows(f.clone(), 4, &[vec![0, 0, 1, 0], vec![0, 0, 0, 1]]).unwrap();
        assert_eq!(a.row_space_intersect(&b).unwrap().rows(), 0);
        assert_eq!(a.row_space_intersect(&a).unwrap(), a.row_basis());
        let c = MatrixGF::from_rows(f.clone(), 3, &[vec![1, 1, 1]]).unwrap();
        assert!(a.row_space_intersect(&c).is_err());
        let g3 = gf(3);
        let d = MatrixGF::zeros(g3, 1, 4);
        assert_eq!(a.row_space_intersect(&d).unwrap_err(), Error::FieldMismatch);
    }

    #[test]
    fn intersection_dimension_formula_gf5() {
        let f = gf(5);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..1000 {
            let n = rng.gen_range(1..7);
            let a = random(&f, rng.gen_range(1..5), n, &mut rng);
            let b = random(&f, rng.gen_range(1..5), n, &mut rng);
            let inter = a.row_space_intersect(&b).unwrap();
            let sum = a.row_space_sum(&b).unwrap();
            assert_eq!(a.rank() + b.rank(), sum.rows() + inter.rows());
            // Every intersection row lies in both spaces.
            for r in 0..inter.rows() {
                let v = MatrixGF::from_rows(f.clone(), n, &[inter.row(r).to_vec()]).unwrap();
                assert_eq!(a.stack(&v).unwrap().rank(), a.rank());
                assert_eq!(b.stack(&v).unwrap().rank(), b.rank());
            }
        }
    }

    #[test]
    fn products() {
        let f = gf(2);
        let u = MatrixGF::from_rows(f.clone(), 3, &[vec![1, 1, 1]]).unwrap();
        let v = MatrixGF::from_rows(f.clone(), 3, &[vec![1, 0, 1]]).unwrap();
        assert_eq!(u.mul(&v.transpose()).unwrap().row_vecs(), vec![vec![0]]);
        assert!(u.mul(&v).is_err());

        let g7 = gf(7);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            let a = random(&g7, 4, 4, &mut rng);
            let b = random(&g7, 4, 4, &mut rng);
            let id = MatrixGF::identity(g7.clone(), 4);
            assert_eq!(a.mul(&id).unwrap(), a);
            let lhs = a.mul(&b).unwrap().transpose();
            let rhs = b.transpose().mul(&a.transpose()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn constructor_validates() {
        let f = gf(3);
        assert!(MatrixGF::new(f.clone(), 2, 2, vec![0, 1, 2]).is_err());
        assert!(MatrixGF::new(f, 1, 2, vec![0, 3]).is_err());
    }
}

use std::fmt;

use super::{Field, FieldElem};
use crate::{Error, Result};

/// Row-major dense matrix over a single field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<FieldElem>,
}

/// Output of [`DenseMatrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: DenseMatrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl DenseMatrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from rows; all rows must have `cols` entries in `field`.
    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<FieldElem>>) -> Result<Self> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Dimension(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            if let Some(bad) = r.iter().find(|e| !field.contains(e)) {
                return Err(Error::Invalid(format!("entry {bad} is not in {field}")));
            }
            data.extend(r);
        }
        Ok(DenseMatrix {
            rows: nrows,
            cols,
            field,
            data,
        })
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Self::from_rows(field, cols, rows).expect("rectangular input")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, r: usize, c: usize) -> &FieldElem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldElem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<FieldElem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> DenseMatrix {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[FieldElem]) -> Vec<FieldElem> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form. Pivot choice is deterministic: columns left to
    /// right, first row at or below the current one with a nonzero entry.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    let pivot_entry = m.get(r, j);
                    if pivot_entry.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) - &(&factor * pivot_entry);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        let rank = pivots.len();
        Rref {
            matrix: m,
            pivots,
            rank,
        }
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.field, self.cols);
        for r in 0..self.rows {
            e.insert(self.row(r).to_vec());
        }
        e.rank()
    }

    /// Right null space basis: one vector per free column (ascending), with that
    /// coordinate set to 1.
    pub fn kernel_basis(&self) -> Vec<Vec<FieldElem>> {
        let Rref {
            matrix, pivots, ..
        } = self.rref();
        let mut is_pivot = vec![None; self.cols];
        for (k, &p) in pivots.iter().enumerate() {
            is_pivot[p] = Some(k);
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free].is_some() {
                continue;
            }
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (k, &p) in pivots.iter().enumerate() {
                let e = matrix.get(k, free);
                if !e.is_zero() {
                    v[p] = -e;
                }
            }
            basis.push(v);
        }
        basis
    }

    pub fn determinant(&self) -> Result<FieldElem> {
        if self.rows != self.cols {
            return Err(Error::Dimension("determinant of a non-square matrix".into()));
        }
        let mut m = self.clone();
        let mut det = self.field.one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(self.field.zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det = &det * &pivot;
            let inv = pivot.inv();
            for i in c + 1..m.rows {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c) * &inv;
                for j in c..m.cols {
                    let v = m.get(i, j) - &(&factor * m.get(c, j));
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<DenseMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.field.one());
        }
        let red = aug.rref();
        if red.pivots.iter().take(n).copied().ne(0..n) || red.rank < n {
            return None;
        }
        let mut inv = Self::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, red.matrix.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl fmt::Display for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|e| e.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Incrementally built row echelon basis of a subspace of `K^width`.
///
/// Rows are stored with a unit pivot and are reduced against every earlier
/// row, so reducing a vector against the rows in insertion order is exact.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    width: usize,
    rows: Vec<(usize, Vec<FieldElem>)>,
}

impl Echelon {
    pub fn new(field: Field, width: usize) -> Self {
        Echelon {
            field,
            width,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Reduces `v` modulo the stored span.
    pub fn reduce(&self, mut v: Vec<FieldElem>) -> Vec<FieldElem> {
        debug_assert_eq!(v.len(), self.width);
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let factor = v[*p].clone();
            for (j, e) in row.iter().enumerate().skip(*p) {
                if !e.is_zero() {
                    v[j] -= &(&factor * e);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[FieldElem]) -> bool {
        self.reduce(v.to_vec()).iter().all(FieldElem::is_zero)
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<FieldElem>) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|e| !e.is_zero()) else {
            return false;
        };
        let inv = v[p].inv();
        for e in v.iter_mut().skip(p) {
            if !e.is_zero() {
                *e = &*e * &inv;
            }
        }
        self.rows.push((p, v));
        true
    }

    /// The stored rows (pivot-normalised, insertion order).
    pub fn basis(&self) -> impl Iterator<Item = &[FieldElem]> {
        self.rows.iter().map(|(_, r)| r.as_slice())
    }

    /// Reduced row echelon basis of the span, sorted by pivot.
    pub fn rref_rows(&self) -> Vec<Vec<FieldElem>> {
        if self.rows.is_empty() {
            return Vec::new();
        }
        let m = DenseMatrix::from_rows(
            self.field,
            self.width,
            self.rows.iter().map(|(_, r)| r.clone()).collect(),
        )
        .expect("rows have echelon width");
        let red = m.rref();
        red.matrix.to_rows().into_iter().take(red.rank).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: Field = Field::Rational;

    #[test]
    fn rref_identity() {
        let id = DenseMatrix::identity(Q, 2);
        let red = id.rref();
        assert_eq!(red.matrix, id);
        assert_eq!(red.rank, 2);
        assert_eq!(red.pivots, vec![0, 1]);
    }

    #[test]
    fn rref_proportional_rows() {
        let m = DenseMatrix::from_i64(Q, &[&[1, 2], &[2, 4]]);
        let red = m.rref();
        assert_eq!(red.matrix, DenseMatrix::from_i64(Q, &[&[1, 2], &[0, 0]]));
        assert_eq!(red.rank, 1);
    }

    #[test]
    fn rref_over_f2() {
        let f2 = Field::Prime(2);
        let m = DenseMatrix::from_i64(f2, &[&[1, 1], &[1, 0]]);
        assert_eq!(m.rref().rank, 2);
        assert_eq!(m.rref().matrix, DenseMatrix::identity(f2, 2));
    }

    #[test]
    fn kernel_examples() {
        let z = DenseMatrix::zeros(Q, 2, 3);
        let k = z.kernel_basis();
        assert_eq!(k.len(), 3);
        for (i, v) in k.iter().enumerate() {
            for (j, e) in v.iter().enumerate() {
                assert_eq!(e.is_one(), i == j);
            }
        }
        assert!(DenseMatrix::identity(Q, 3).kernel_basis().is_empty());
        let m = DenseMatrix::from_i64(Q, &[&[1, 1, 0]]);
        let k = m.kernel_basis();
        let expect = vec![
            vec![Q.from_i64(-1), Q.from_i64(1), Q.from_i64(0)],
            vec![Q.from_i64(0), Q.from_i64(0), Q.from_i64(1)],
        ];
        assert_eq!(k, expect);
    }

    #[test]
    fn inverse_and_determinant() {
        let m = DenseMatrix::from_i64(Q, &[&[2, 1], &[7, 4]]);
        assert_eq!(m.determinant().unwrap(), Q.one());
        let inv = m.inverse().unwrap();
        assert_eq!(inv, DenseMatrix::from_i64(Q, &[&[4, -1], &[-7, 2]]));
        let sing = DenseMatrix::from_i64(Q, &[&[1, 2], &[2, 4]]);
        assert!(sing.inverse().is_none());
        assert!(sing.determinant().unwrap().is_zero());
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..5, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(-3i64..=3, c), r)
        })
    }

    fn build(field: Field, rows: &[Vec<i64>]) -> DenseMatrix {
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        DenseMatrix::from_i64(field, &refs)
    }

    proptest! {
        #[test]
        fn rank_nullity(rows in small_matrix()) {
            let m = build(Q, &rows);
            let red = m.rref();
            prop_assert_eq!(red.rank + m.kernel_basis().len(), m.cols());
            for v in m.kernel_basis() {
                prop_assert!(m.mul_vec(&v).iter().all(FieldElem::is_zero));
            }
        }

        #[test]
        fn rref_idempotent(rows in small_matrix()) {
            let m = build(Q, &rows);
            let once = m.rref().matrix;
            prop_assert_eq!(once.rref().matrix, once.clone());
        }

        #[test]
        fn rank_agrees_mod_large_prime(rows in small_matrix()) {
            // entries are tiny, so every minor is far below this prime
            let p = Field::Prime(1_000_000_007);
            prop_assert_eq!(build(Q, &rows).rank(), build(p, &rows).rank());
        }

        #[test]
        fn echelon_rank_matches_rref(rows in small_matrix()) {
            let m = build(Q, &rows);
            prop_assert_eq!(m.rank(), m.rref().rank);
        }
    }
}

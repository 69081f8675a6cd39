use std::collections::{BTreeMap, HashMap};

use super::{Field, FieldElem};

/// Sparse vector: strictly increasing indices, no stored zeros.
pub type SparseVec = Vec<(usize, FieldElem)>;

/// Echelon basis of a subspace with sparse rows, keyed by pivot column.
///
/// Incoming vectors are reduced column by column in increasing order, so the
/// residue of [`SparseEchelon::reduce`] has no entry in any pivot column.
#[derive(Clone, Debug)]
pub struct SparseEchelon {
    field: Field,
    rows: Vec<SparseVec>,
    pivot_of: HashMap<usize, usize>,
}

impl SparseEchelon {
    pub fn new(field: Field) -> Self {
        SparseEchelon {
            field,
            rows: Vec::new(),
            pivot_of: HashMap::new(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| r[0].0)
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn reduce(&self, v: &[(usize, FieldElem)]) -> SparseVec {
        if self.rows.is_empty() {
            return v.iter().filter(|(_, c)| !c.is_zero()).cloned().collect();
        }
        let mut acc: BTreeMap<usize, FieldElem> = v
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .cloned()
            .collect();
        let mut out = Vec::new();
        while let Some((col, c)) = acc.pop_first() {
            if c.is_zero() {
                continue;
            }
            match self.pivot_of.get(&col) {
                Some(&r) => {
                    for (j, e) in self.rows[r].iter().skip(1) {
                        let delta = &c * e;
                        match acc.get_mut(j) {
                            Some(slot) => *slot -= &delta,
                            None => {
                                acc.insert(*j, -delta);
                            }
                        }
                    }
                }
                None => out.push((col, c)),
            }
        }
        out
    }

    pub fn contains(&self, v: &[(usize, FieldElem)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v`; returns the reduced, pivot-normalised row when the rank grew.
    pub fn insert(&mut self, v: &[(usize, FieldElem)]) -> Option<&SparseVec> {
        let mut r = self.reduce(v);
        if r.is_empty() {
            return None;
        }
        let inv = r[0].1.inv();
        for (_, e) in r.iter_mut() {
            *e = &*e * &inv;
        }
        self.pivot_of.insert(r[0].0, self.rows.len());
        self.rows.push(r);
        self.rows.last()
    }

    /// Fully reduced echelon rows sorted by pivot.
    pub fn rref_rows(&self) -> Vec<SparseVec> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| self.rows[r][0].0);
        let mut done = SparseEchelon::new(self.field);
        let mut out: Vec<SparseVec> = Vec::with_capacity(order.len());
        for &r in order.iter().rev() {
            let row = &self.rows[r];
            let (p, lead) = row[0].clone();
            let tail = done.reduce(&row[1..]);
            let mut full = vec![(p, lead)];
            full.extend(tail);
            done.pivot_of.insert(p, done.rows.len());
            done.rows.push(full.clone());
            out.push(full);
        }
        out.reverse();
        out
    }
}

/// Dense to sparse.
pub fn sparsify(v: &[FieldElem]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

/// Sparse to dense of the given width.
pub fn densify(field: Field, v: &[(usize, FieldElem)], width: usize) -> Vec<FieldElem> {
    let mut out = vec![field.zero(); width];
    for (i, c) in v {
        out[*i] = c.clone();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::DenseMatrix;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn matches_dense_rref(rows in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 5), 1..6)) {
            let q = Field::Rational;
            let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            let dense = DenseMatrix::from_i64(q, &refs);
            let mut e = SparseEchelon::new(q);
            for r in 0..dense.rows() {
                e.insert(&sparsify(dense.row(r)));
            }
            let red = dense.rref();
            prop_assert_eq!(e.rank(), red.rank);
            let sparse_rref: Vec<Vec<FieldElem>> =
                e.rref_rows().iter().map(|r| densify(q, r, 5)).collect();
            let dense_rref: Vec<Vec<FieldElem>> = red.matrix.to_rows().into_iter().take(red.rank).collect();
            prop_assert_eq!(sparse_rref, dense_rref);
        }
    }
}

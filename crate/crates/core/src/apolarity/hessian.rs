use std::sync::Arc;

use crate::groebner::is_quadratic_ideal;
use crate::invariants::codim;
use crate::polyring::{Ideal, Polynomial, Ring};
use crate::{Error, Property, Result, Verdict, Witness};

use super::inverse::{inverse_system, is_cone};

/// The matrix `(∂²f/∂x_i∂x_j)`.
#[derive(Clone, Debug)]
pub struct HessianData {
    ring: Arc<Ring>,
    entries: Vec<Vec<Polynomial>>,
}

impl HessianData {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<Polynomial>] {
        &self.entries
    }

    pub fn determinant(&self) -> Polynomial {
        determinant(&self.entries)
    }

    /// All nonzero `t×t` minors, each row/column pair once.
    pub fn minors(&self, t: usize) -> Result<Vec<Polynomial>> {
        minors(&self.entries, &self.ring, t)
    }

    pub fn minors_ideal(&self, t: usize) -> Result<Ideal> {
        minors_ideal(self, t)
    }
}

pub fn hessian(f: &Polynomial) -> Result<HessianData> {
    let ring = f.ring().clone();
    let n = ring.n();
    if n < 2 {
        return Err(Error::Invalid("the Hessian needs at least two variables".into()));
    }
    let first: Vec<Polynomial> = (0..n).map(|i| f.derivative(i)).collect();
    let mut entries = vec![vec![Polynomial::zero(&ring); n]; n];
    for i in 0..n {
        for j in i..n {
            let e = first[i].derivative(j);
            entries[j][i] = e.clone();
            entries[i][j] = e;
        }
    }
    Ok(HessianData { ring, entries })
}

/// Determinant of a square polynomial matrix by expansion over column
/// subsets.
pub fn determinant(m: &[Vec<Polynomial>]) -> Polynomial {
    let k = m.len();
    let rows: Vec<usize> = (0..k).collect();
    let ring = m[0][0].ring().clone();
    let table = subset_table(m, &ring, &rows, k);
    table[(1 << k) - 1].clone()
}

/// `D[mask]` = minor on the first `|mask|` of `rows` and the columns in
/// `mask`, for `|mask| ≤ t`.
fn subset_table(m: &[Vec<Polynomial>], ring: &Arc<Ring>, rows: &[usize], t: usize) -> Vec<Polynomial> {
    let n = m[0].len();
    let mut table = vec![Polynomial::zero(ring); 1 << n];
    table[0] = Polynomial::from_i64(ring, 1);
    let mut masks: Vec<usize> = (1..1usize << n).filter(|m| m.count_ones() as usize <= t).collect();
    masks.sort_by_key(|m| m.count_ones());
    for mask in masks {
        let row = rows[mask.count_ones() as usize - 1];
        let mut acc = Polynomial::zero(ring);
        for j in (0..n).filter(|j| mask >> j & 1 == 1) {
            let a = &m[row][j];
            let rest = &table[mask & !(1 << j)];
            if a.is_zero() || rest.is_zero() {
                continue;
            }
            let term = a * rest;
            if (mask >> (j + 1)).count_ones() % 2 == 0 {
                acc = &acc + &term;
            } else {
                acc = &acc - &term;
            }
        }
        table[mask] = acc;
    }
    table
}

/// Nonzero `t×t` minors of a symmetric matrix, one per unordered pair of
/// row and column sets.
pub fn minors(m: &[Vec<Polynomial>], ring: &Arc<Ring>, t: usize) -> Result<Vec<Polynomial>> {
    let n = m.len();
    if t == 0 || t > n {
        return Err(Error::Invalid(format!("minor size {t} outside 1..={n}")));
    }
    let mut out = Vec::new();
    for row_mask in (0..1usize << n).filter(|r| r.count_ones() as usize == t) {
        let rows: Vec<usize> = (0..n).filter(|i| row_mask >> i & 1 == 1).collect();
        let table = subset_table(m, ring, &rows, t);
        for col_mask in (row_mask..1usize << n).filter(|c| c.count_ones() as usize == t) {
            if !table[col_mask].is_zero() {
                out.push(table[col_mask].clone());
            }
        }
    }
    Ok(out)
}

/// Ideal of the `t×t` minors with minimal generators.
pub fn minors_ideal(h: &HessianData, t: usize) -> Result<Ideal> {
    let gens = h.minors(t)?;
    if gens.is_empty() {
        return Ok(Ideal::zero(&h.ring));
    }
    Ideal::new(&h.ring, gens)?.minimalized()
}

/// For a non-cone cubic in 3 or 4 variables, `R_f` is quadratic iff Koszul iff
/// the 2-minors of the Hessian have codimension `n`. Other `n` report the
/// codimension without a verdict. The answer is cross-checked against the
/// generators of `I_f`.
pub fn theorem34_check(f: &Polynomial) -> Result<Verdict> {
    if f.is_zero() || f.degree() != Some(3) || !f.is_homogeneous() {
        return Err(Error::Invalid(format!("`{f}` is not a cubic form")));
    }
    if is_cone(f)? {
        return Err(Error::Invalid(format!("`{f}` is a cone")));
    }
    let n = f.ring().n();
    let c = codim(&minors_ideal(&hessian(f)?, 2)?)?;
    let witness = Witness::Codimension { codim: c, n };
    if !(3..=4).contains(&n) {
        return Ok(Verdict::undetermined(Property::Koszul, witness)
            .with_note("the Hessian criterion is established only for 3 and 4 variables"));
    }
    let quadratic = is_quadratic_ideal(&inverse_system(f)?.ideal)?;
    if quadratic != (c == n) {
        return Err(Error::Invalid(format!(
            "Hessian codimension {c} disagrees with the generators of I_f"
        )));
    }
    Ok(if c == n {
        Verdict::yes(Property::Koszul, witness).with_note("I_f is generated by quadrics")
    } else {
        Verdict::no(Property::Quadratic, witness).with_note("I_f has a minimal generator of degree 3")
    })
}

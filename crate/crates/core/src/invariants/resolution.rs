use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::groebner::QuotientRing;
use crate::polyring::{LinearSpace, Monomial, Polynomial};
use crate::scalars::{Field, FieldElem, SparseEchelon, SparseVec};
use crate::{Error, Result};

/// `R = S/I` truncated at degree `top`: standard monomial bases of each
/// `R_d` and the multiplication tables `x_v : R_d → R_{d+1}`.
#[derive(Clone, Debug)]
pub struct GradedQuotient {
    q: QuotientRing,
    top: u32,
    basis: Vec<Vec<Monomial>>,
    index: Vec<HashMap<Monomial, usize>>,
    mult: Vec<Vec<Vec<SparseVec>>>,
}

impl GradedQuotient {
    pub fn new(q: &QuotientRing, top: u32) -> Self {
        let basis = q.standard_monomials_up_to(top);
        let index: Vec<HashMap<Monomial, usize>> = basis
            .iter()
            .map(|level| level.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect())
            .collect();
        let mut gq = GradedQuotient {
            q: q.clone(),
            top,
            basis,
            index,
            mult: Vec::new(),
        };
        let n = q.n();
        let ring = q.ring().clone();
        let mut mult = Vec::with_capacity(top as usize);
        for d in 0..top as usize {
            let table: Vec<Vec<SparseVec>> = gq.basis[d]
                .iter()
                .map(|b| {
                    (0..n)
                        .map(|v| {
                            let c = b.mul_var(v);
                            match gq.index[d + 1].get(&c) {
                                Some(&k) => vec![(k, ring.field().one())],
                                None => gq.coordinates(d as u32 + 1, &Polynomial::monomial(&ring, c)),
                            }
                        })
                        .collect()
                })
                .collect();
            mult.push(table);
        }
        gq.mult = mult;
        gq
    }

    pub fn quotient(&self) -> &QuotientRing {
        &self.q
    }

    pub fn top(&self) -> u32 {
        self.top
    }

    pub fn field(&self) -> Field {
        self.q.ring().field()
    }

    pub fn dim(&self, d: u32) -> usize {
        self.basis[d as usize].len()
    }

    pub fn basis(&self, d: u32) -> &[Monomial] {
        &self.basis[d as usize]
    }

    pub fn position(&self, d: u32, m: &Monomial) -> Option<usize> {
        self.index[d as usize].get(m).copied()
    }

    /// Coordinates of the class of a degree-`d` form in the standard basis.
    pub fn coordinates(&self, d: u32, f: &Polynomial) -> SparseVec {
        let nf = self.q.normal_form(f);
        let mut v: SparseVec = nf
            .terms()
            .map(|(m, c)| {
                let k = self.index[d as usize]
                    .get(m)
                    .copied()
                    .expect("normal forms of degree-d forms are standard of degree d");
                (k, c.clone())
            })
            .collect();
        v.sort_by_key(|(k, _)| *k);
        v
    }

    /// `x_v` times the `b`-th standard monomial of degree `d`.
    pub fn mul_var(&self, d: u32, b: usize, v: usize) -> &SparseVec {
        &self.mult[d as usize][b][v]
    }
}

/// What is being resolved over `R`.
#[derive(Clone, Debug)]
pub enum Subject {
    /// The residue field `K = R/m`.
    ResidueField,
    /// `R/L` for an ideal `L` generated by the given linear forms.
    Cyclic(LinearSpace),
}

impl Subject {
    pub fn label(&self) -> String {
        match self {
            Subject::ResidueField => "K".into(),
            Subject::Cyclic(l) => format!("R/{}", l.ideal()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: u32,
    pub beta: u64,
    /// Entry sits on the degree boundary and is never cited by verdicts.
    pub flagged: bool,
}

/// Graded Betti numbers `β_ij` for `i ≤ i_max`, `j ≤ d_max`. Only nonzero
/// entries are stored, sorted by `(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub subject: String,
    pub i_max: usize,
    pub d_max: u32,
    pub entries: Vec<BettiEntry>,
    /// `complete_columns[i]`: no generator of `F_i` can have degree above
    /// `d_max`, so the column total is exact.
    pub complete_columns: Vec<bool>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries
            .iter()
            .find(|e| e.i == i && e.j == j)
            .map_or(0, |e| e.beta)
    }

    pub fn is_flagged(&self, j: u32) -> bool {
        j >= self.d_max
    }

    /// `β_i = Σ_j β_ij` over the computed range.
    pub fn total(&self, i: usize) -> u64 {
        self.entries.iter().filter(|e| e.i == i).map(|e| e.beta).sum()
    }

    pub fn totals(&self) -> Vec<u64> {
        (0..=self.i_max).map(|i| self.total(i)).collect()
    }

    /// `β_{i,i}` for `i = 0..=i_max`.
    pub fn linear_strand(&self) -> Vec<u64> {
        (0..=self.i_max).map(|i| self.get(i, i as u32)).collect()
    }

    /// First unflagged entry off the diagonal, in `(i, j)` order.
    pub fn nonlinear_witness(&self) -> Option<&BettiEntry> {
        self.entries
            .iter()
            .find(|e| e.j as usize != e.i && !e.flagged && e.beta > 0)
    }

    /// No unflagged entry off the diagonal.
    pub fn is_linear(&self) -> bool {
        self.nonlinear_witness().is_none()
    }

    /// `Σ_i (−1)^i β_ij` for `j ≤ min(i_max, d_max)`: every `i` that can
    /// contribute (`i ≤ j`) lies in the table there.
    pub fn euler_coefficients(&self) -> Vec<i64> {
        let top = (self.i_max as u32).min(self.d_max);
        (0..=top)
            .map(|j| {
                self.entries
                    .iter()
                    .filter(|e| e.j == j)
                    .map(|e| if e.i % 2 == 0 { e.beta as i64 } else { -(e.beta as i64) })
                    .sum()
            })
            .collect()
    }
}

/// A graded free module: generator degrees and the image of each generator
/// in the previous module (coordinates at that degree).
struct FreeModule {
    degrees: Vec<u32>,
    images: Vec<SparseVec>,
}

/// Coordinates of `(F)_d = ⊕_k R_{d − a_k}`.
struct Layout {
    /// `(generator, offset)` for generators of degree ≤ d, by offset.
    blocks: Vec<(usize, usize)>,
    dim: usize,
}

impl FreeModule {
    fn layout(&self, gq: &GradedQuotient, d: u32) -> Layout {
        let mut blocks = Vec::new();
        let mut off = 0;
        for (k, &a) in self.degrees.iter().enumerate() {
            if a <= d {
                blocks.push((k, off));
                off += gq.dim(d - a);
            }
        }
        Layout { blocks, dim: off }
    }
}

impl Layout {
    fn locate(&self, idx: usize) -> (usize, usize) {
        let p = self.blocks.partition_point(|&(_, off)| off <= idx) - 1;
        let (k, off) = self.blocks[p];
        (k, idx - off)
    }

    fn offset(&self, k: usize) -> usize {
        self.blocks
            .iter()
            .find(|(g, _)| *g == k)
            .map(|(_, off)| *off)
            .expect("generator active at this degree")
    }
}

struct Layouts<'a> {
    module: &'a FreeModule,
    cache: HashMap<u32, Layout>,
}

impl<'a> Layouts<'a> {
    fn new(module: &'a FreeModule) -> Self {
        Layouts {
            module,
            cache: HashMap::new(),
        }
    }

    fn get(&mut self, gq: &GradedQuotient, d: u32) -> &Layout {
        let module = self.module;
        self.cache.entry(d).or_insert_with(|| module.layout(gq, d))
    }
}

/// `x_v · w` for `w ∈ (F)_d`.
fn mul_vec(gq: &GradedQuotient, lay: &mut Layouts, d: u32, v: usize, w: &SparseVec) -> SparseVec {
    let mut acc: BTreeMap<usize, FieldElem> = BTreeMap::new();
    let src: Vec<(usize, usize)> = {
        let l = lay.get(gq, d);
        w.iter().map(|(idx, _)| l.locate(*idx)).collect()
    };
    let module = lay.module;
    let degrees = &module.degrees;
    let dst = lay.get(gq, d + 1);
    for ((k, local), (_, c)) in src.iter().zip(w) {
        let e = d - degrees[*k];
        let off = dst.offset(*k);
        for (j, c2) in gq.mul_var(e, *local, v) {
            let slot = acc.entry(off + j).or_insert_with(|| gq.field().zero());
            *slot += &(c * c2);
        }
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// Minimal graded free resolution of `subject` over `Q`, degree by degree in
/// the standard-monomial basis, for homological degrees `≤ i_max` and
/// internal degrees `≤ d_max`. Each syzygy module is `ker φ_i`; its minimal
/// generators in degree `d` are a complement of `R_1·(ker φ_i)_{d−1}` in
/// `(ker φ_i)_d`.
pub fn minimal_resolution(q: &QuotientRing, subject: &Subject, i_max: usize, d_max: u32) -> Result<BettiTable> {
    if i_max < 1 || (d_max as usize) < i_max {
        return Err(Error::Invalid("resolution bounds need 1 <= i_max <= d_max".into()));
    }
    let ring = q.ring().clone();
    let n = ring.n();
    let field = ring.field();
    let forms: Vec<Polynomial> = match subject {
        Subject::ResidueField => (0..n).map(|v| Polynomial::var(&ring, v)).collect(),
        Subject::Cyclic(l) => {
            if l.ring() != &ring {
                return Err(Error::RingMismatch);
            }
            l.basis().to_vec()
        }
    };
    let gq = GradedQuotient::new(q, d_max);
    let mut entries: BTreeMap<(usize, u32), u64> = BTreeMap::new();
    if gq.dim(0) == 0 {
        return Ok(table(subject, i_max, d_max, entries, q));
    }
    entries.insert((0, 0), 1);

    // F_1: the forms, independent modulo I
    let mut ech = SparseEchelon::new(field);
    let mut first = FreeModule {
        degrees: Vec::new(),
        images: Vec::new(),
    };
    for f in &forms {
        let c = gq.coordinates(1, f);
        if ech.insert(&c).is_some() {
            first.degrees.push(1);
            first.images.push(c);
        }
    }
    if !first.degrees.is_empty() {
        entries.insert((1, 1), first.degrees.len() as u64);
    }
    let f0 = FreeModule {
        degrees: vec![0],
        images: Vec::new(),
    };
    let mut prev = f0;
    let mut cur = first;
    for i in 1..i_max {
        if cur.degrees.is_empty() {
            break;
        }
        let next = syzygies(&gq, &prev, &cur, d_max);
        for &a in &next.degrees {
            *entries.entry((i + 1, a)).or_insert(0) += 1;
        }
        prev = cur;
        cur = next;
    }
    Ok(table(subject, i_max, d_max, entries, q))
}

fn table(subject: &Subject, i_max: usize, d_max: u32, entries: BTreeMap<(usize, u32), u64>, q: &QuotientRing) -> BettiTable {
    // rate(R) ≤ (max degree of a Gröbner basis) − 1 bounds the top degree
    // of F_i for K by 1 + rate·(i − 1)
    let g = q.gb().max_degree().unwrap_or(1).max(2);
    let complete_columns = (0..=i_max)
        .map(|i| match subject {
            Subject::ResidueField => i == 0 || 1 + (g - 1) * (i as u32 - 1) < d_max,
            Subject::Cyclic(_) => i <= 1,
        })
        .collect();
    BettiTable {
        subject: subject.label(),
        i_max,
        d_max,
        entries: entries
            .into_iter()
            .map(|((i, j), beta)| BettiEntry {
                i,
                j,
                beta,
                flagged: j >= d_max,
            })
            .collect(),
        complete_columns,
    }
}

const SCREEN_PRIME: u64 = (1 << 61) - 1;

/// Cheap certificate that `R_1·ker_{d−1}` already fills `ker_d`, using ranks
/// over a prime field. Reduction mod `p` can only lower ranks, so
/// `cols − rank_p(φ) = rank_p(products)` forces
/// `dim ker_d ≤ rank_p(products) ≤ rank(products) ≤ dim ker_d`. Returns the
/// products that are independent mod `p` (hence over the base field) as a
/// basis of `ker_d`, or `None` when the test is inconclusive.
fn screen(field: Field, columns: &[&SparseVec], products: &[SparseVec]) -> Option<Vec<SparseVec>> {
    let small = match field {
        Field::Rational => Field::Prime(SCREEN_PRIME),
        f => f,
    };
    let reduce = |v: &SparseVec| -> Option<SparseVec> {
        v.iter()
            .map(|(i, c)| {
                let c = match c.as_rational() {
                    Some(r) => small.from_rational(r).ok()?,
                    None => c.clone(),
                };
                Some((*i, c))
            })
            .filter(|x| x.as_ref().map_or(true, |(_, c)| !c.is_zero()))
            .collect()
    };
    let mut phi = SparseEchelon::new(small);
    for c in columns {
        phi.insert(&reduce(c)?);
    }
    let kernel_bound = columns.len() - phi.rank();
    if kernel_bound > products.len() {
        return None;
    }
    let mut span = SparseEchelon::new(small);
    let mut basis = Vec::with_capacity(kernel_bound);
    for p in products {
        if span.insert(&reduce(p)?).is_some() {
            basis.push(p.clone());
        }
    }
    (span.rank() == kernel_bound).then_some(basis)
}

/// Minimal generators of `ker(φ : cur → prev)` up to degree `d_max`.
fn syzygies(gq: &GradedQuotient, prev: &FreeModule, cur: &FreeModule, d_max: u32) -> FreeModule {
    let field = gq.field();
    let n = gq.quotient().n();
    let mut prev_lay = Layouts::new(prev);
    let mut cur_lay = Layouts::new(cur);
    let lowest = *cur.degrees.iter().min().expect("nonempty module");
    // images[k][e][b] = b · φ(e_k) for b the b-th standard monomial of degree e
    let mut images: Vec<Vec<Vec<SparseVec>>> = cur.images.iter().map(|img| vec![vec![img.clone()]]).collect();
    let mut out = FreeModule {
        degrees: Vec::new(),
        images: Vec::new(),
    };
    let mut ker_prev: Vec<SparseVec> = Vec::new();
    for d in lowest..=d_max {
        // extend the image caches to degree d
        for (k, &a) in cur.degrees.iter().enumerate() {
            if a > d {
                continue;
            }
            let e = d - a;
            while images[k].len() <= e as usize {
                let le = images[k].len() as u32;
                let level: Vec<SparseVec> = gq
                    .basis(le)
                    .iter()
                    .map(|b| {
                        let v = (0..n).rev().find(|&v| b.exp(v) > 0).expect("positive degree");
                        let mut exps = b.exps().to_vec();
                        exps[v] -= 1;
                        let parent = gq
                            .position(le - 1, &Monomial::from_exps(exps))
                            .expect("divisors of standard monomials are standard");
                        mul_vec(gq, &mut prev_lay, a + le - 1, v, &images[k][le as usize - 1][parent])
                    })
                    .collect();
                images[k].push(level);
            }
        }
        let rows = prev_lay.get(gq, d).dim;
        let cols_layout: Vec<(usize, usize)> = cur_lay.get(gq, d).blocks.clone();
        let columns: Vec<&SparseVec> = cols_layout
            .iter()
            .flat_map(|(k, _)| images[*k][(d - cur.degrees[*k]) as usize].iter())
            .collect();
        let products: Vec<SparseVec> = if d > lowest {
            ker_prev
                .iter()
                .flat_map(|w| (0..n).map(|v| (w, v)).collect::<Vec<_>>())
                .map(|(w, v)| mul_vec(gq, &mut cur_lay, d - 1, v, w))
                .collect()
        } else {
            Vec::new()
        };
        if let Some(basis) = screen(field, &columns, &products) {
            ker_prev = basis;
            continue;
        }
        let mut ech = SparseEchelon::new(field);
        let mut kernel: Vec<SparseVec> = Vec::new();
        for (col, img) in columns.iter().enumerate() {
            let mut aug = (*img).clone();
            aug.push((rows + col, field.one()));
            let r = ech.reduce(&aug);
            if r[0].0 >= rows {
                kernel.push(r.into_iter().map(|(i, c)| (i - rows, c)).collect());
            } else {
                ech.insert(&r);
            }
        }
        // R_1 · ker_{d-1}, then new generators complete it to ker_d
        let mut span = SparseEchelon::new(field);
        for p in &products {
            span.insert(p);
        }
        if span.rank() < kernel.len() {
            for w in &kernel {
                if let Some(row) = span.insert(w) {
                    out.degrees.push(d);
                    out.images.push(row.clone());
                }
            }
        }
        ker_prev = span.rows().to_vec();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{Ideal, Ring};
    use crate::scalars::Field;

    fn quotient(names: &[&str], gens: &[&str]) -> QuotientRing {
        let r = Ring::with_names(names.iter().map(|s| s.to_string()).collect(), Field::Rational).unwrap();
        QuotientRing::new(&Ideal::parse(&r, gens).unwrap()).unwrap()
    }

    #[test]
    fn dual_numbers_are_linear() {
        let q = quotient(&["x"], &["x^2"]);
        let t = minimal_resolution(&q, &Subject::ResidueField, 5, 9).unwrap();
        assert_eq!(t.linear_strand(), vec![1; 6]);
        assert!(t.is_linear());
        assert_eq!(t.totals(), vec![1; 6]);
    }

    #[test]
    fn cube_relation_is_not_linear() {
        let q = quotient(&["x"], &["x^3"]);
        let t = minimal_resolution(&q, &Subject::ResidueField, 4, 9).unwrap();
        assert_eq!(t.get(1, 1), 1);
        assert_eq!(t.get(2, 3), 1);
        assert_eq!(t.get(3, 4), 1);
        assert_eq!(t.get(4, 6), 1);
        let w = t.nonlinear_witness().unwrap();
        assert_eq!((w.i, w.j, w.beta), (2, 3, 1));
    }

    #[test]
    fn polynomial_ring_gives_koszul_complex() {
        let q = quotient(&["x", "y", "z"], &[]);
        let t = minimal_resolution(&q, &Subject::ResidueField, 4, 6).unwrap();
        assert_eq!(t.linear_strand(), vec![1, 3, 3, 1, 0]);
        assert_eq!(t.entries.len(), 4);
    }

    #[test]
    fn euler_characteristic_matches_hilbert_series() {
        let q = quotient(&["x", "y", "z"], &["x^2", "x*y", "y^2 + x*z", "y*z"]);
        let t = minimal_resolution(&q, &Subject::ResidueField, 4, 6).unwrap();
        let h = crate::invariants::hilbert_series(&q, 6).series();
        let inv = h.inverse().unwrap();
        for (j, c) in t.euler_coefficients().iter().enumerate() {
            assert_eq!(inv.coeff(j), &num_rational::BigRational::from_integer((*c).into()));
        }
    }

    #[test]
    fn cyclic_quotient_by_a_variable() {
        // over K[x,y]/(xy), the module R/(x) has the periodic resolution ··· → R → R
        let q = quotient(&["x", "y"], &["x*y"]);
        let r = q.ring().clone();
        let l = LinearSpace::variables(&r, &[0]);
        let t = minimal_resolution(&q, &Subject::Cyclic(l), 4, 6).unwrap();
        assert_eq!(t.linear_strand(), vec![1, 1, 1, 1, 1]);
        assert!(t.is_linear());
    }
}

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::polyring::{Ideal, Monomial, Polynomial, Ring, TermOrder};
use crate::scalars::FieldElem;
use crate::{Error, Result};

/// Terms sorted decreasingly under the basis' term order.
pub(crate) type Sorted = Vec<(Monomial, FieldElem)>;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GbStats {
    pub pairs_processed: usize,
    pub zero_reductions: usize,
    pub pairs_discarded: usize,
    pub reduction_steps: usize,
}

/// Reduced Gröbner basis (monic, sorted increasingly by leading monomial).
///
/// When computed with a degree cap the basis is a truncated `d`-Gröbner basis:
/// it decides membership for homogeneous elements of degree at most the cap.
#[derive(Clone)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    order: TermOrder,
    ideal: Ideal,
    elements: Vec<Polynomial>,
    sorted: Vec<Sorted>,
    truncated_at: Option<u32>,
    stats: GbStats,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    /// The ideal the basis was computed from.
    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn stats(&self) -> GbStats {
        self.stats
    }

    /// `Some(d)` when pairs above degree `d` were left unprocessed.
    pub fn truncated_at(&self) -> Option<u32> {
        self.truncated_at
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated_at.is_some()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.sorted.iter().map(|p| p[0].0.clone()).collect()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.elements.iter().filter_map(Polynomial::degree).max()
    }

    /// True when the basis contains a nonzero constant.
    pub fn is_unit_ideal(&self) -> bool {
        self.sorted.iter().any(|p| p[0].0.is_one())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let mut steps = 0;
        let r = reduce_full(to_sorted(f, &self.order), &self.sorted, &self.order, &mut steps);
        from_sorted(&self.ring, r)
    }

    /// Membership test; exact for homogeneous `f` of degree at most the cap
    /// when the basis is truncated.
    pub fn contains(&self, f: &Polynomial) -> bool {
        if let (Some(cap), Some(d)) = (self.truncated_at, f.degree()) {
            assert!(d <= cap, "membership above the truncation degree");
        }
        self.normal_form(f).is_zero()
    }

    /// Buchberger's criterion: every S-polynomial of the basis reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        for i in 0..self.sorted.len() {
            for j in i + 1..self.sorted.len() {
                let lcm = self.sorted[i][0].0.lcm(&self.sorted[j][0].0);
                if let Some(cap) = self.truncated_at {
                    if lcm.degree() > cap {
                        continue;
                    }
                }
                let s = s_polynomial(&self.sorted[i], &self.sorted[j], &self.order);
                let mut steps = 0;
                if !reduce_full(s, &self.sorted, &self.order, &mut steps).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// No term of any element is divisible by another element's leading
    /// monomial, and leading coefficients are one.
    pub fn is_reduced(&self) -> bool {
        let lms = self.leading_monomials();
        self.sorted.iter().enumerate().all(|(i, p)| {
            p[0].1.is_one()
                && p.iter().all(|(m, _)| {
                    lms.iter()
                        .enumerate()
                        .all(|(j, lm)| j == i || !lm.divides(m))
                })
        })
    }
}

impl fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let els: Vec<String> = self.elements.iter().map(|g| g.to_string()).collect();
        write!(f, "GB[{}]{{{}}}", self.order, els.join(", "))
    }
}

/// Reduced Gröbner basis of `ideal` under `order`.
///
/// Pairs are selected by sugar degree, ties broken by the lcm under `order`
/// and then by element indices, so the run is deterministic. The product and
/// chain criteria are applied in Gebauer–Möller form. With `degree_cap` the
/// input must be homogeneous; pairs and generators above the cap are left
/// unprocessed and the result is flagged as truncated if any remained.
pub fn buchberger(ideal: &Ideal, order: &TermOrder, degree_cap: Option<u32>) -> Result<GroebnerBasis> {
    if degree_cap.is_some() && !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    if order.n() != ideal.ring().n() {
        return Err(Error::Dimension("term order arity differs from the ring".into()));
    }
    let mut engine = Engine::new(order.clone(), ideal.is_homogeneous());
    let mut pending: Vec<(u32, Sorted)> = ideal
        .generators()
        .iter()
        .map(|g| (g.degree().unwrap_or(0), to_sorted(g, order)))
        .collect();
    // generators enter by degree (homogeneous) or all up front (otherwise)
    if ideal.is_homogeneous() {
        pending.sort_by_key(|(d, _)| *d);
    } else {
        for (d, g) in pending.drain(..) {
            engine.add_reduced(g, d);
        }
    }
    pending.reverse();
    let mut truncated = false;
    loop {
        let next_gen = pending.last().map(|(d, _)| *d);
        let next_pair = engine.best_pair();
        let take_gen = match (next_gen, next_pair.as_ref()) {
            (None, None) => break,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (Some(d), Some((_, s))) => d <= *s,
        };
        let degree = if take_gen {
            next_gen.unwrap_or(0)
        } else {
            next_pair.as_ref().map(|(_, s)| *s).unwrap_or(0)
        };
        if let Some(cap) = degree_cap {
            if degree > cap {
                truncated = true;
                break;
            }
        }
        if take_gen {
            let (d, g) = pending.pop().expect("checked");
            engine.add_reduced(g, d);
        } else {
            let (k, sugar) = next_pair.expect("checked");
            let pair = engine.pairs.swap_remove(k);
            engine.stats.pairs_processed += 1;
            let s = s_polynomial(&engine.basis[pair.i], &engine.basis[pair.j], order);
            engine.add_reduced(s, sugar);
        }
        if engine.basis.iter().any(|p| p[0].0.is_one()) {
            pending.clear();
            engine.pairs.clear();
        }
    }
    let sorted = interreduce(&engine.basis, order, &mut engine.stats);
    let ring = ideal.ring().clone();
    let elements = sorted.iter().map(|p| from_sorted(&ring, p.clone())).collect();
    Ok(GroebnerBasis {
        ring,
        order: order.clone(),
        ideal: ideal.clone(),
        elements,
        sorted,
        truncated_at: if truncated { degree_cap } else { None },
        stats: engine.stats,
    })
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Engine {
    order: TermOrder,
    homogeneous: bool,
    basis: Vec<Sorted>,
    sugar: Vec<u32>,
    pairs: Vec<Pair>,
    stats: GbStats,
}

impl Engine {
    fn new(order: TermOrder, homogeneous: bool) -> Self {
        Engine {
            order,
            homogeneous,
            basis: Vec::new(),
            sugar: Vec::new(),
            pairs: Vec::new(),
            stats: GbStats::default(),
        }
    }

    /// Index and sugar of the next pair: smallest sugar, then smallest lcm,
    /// then smallest indices.
    fn best_pair(&self) -> Option<(usize, u32)> {
        let mut best: Option<usize> = None;
        for (k, p) in self.pairs.iter().enumerate() {
            best = match best {
                None => Some(k),
                Some(b) => {
                    let q = &self.pairs[b];
                    let ord = p
                        .sugar
                        .cmp(&q.sugar)
                        .then_with(|| self.order.cmp(&p.lcm, &q.lcm))
                        .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)));
                    if ord == Ordering::Less {
                        Some(k)
                    } else {
                        Some(b)
                    }
                }
            };
        }
        best.map(|k| (k, self.pairs[k].sugar))
    }

    fn add_reduced(&mut self, f: Sorted, sugar: u32) {
        let r = reduce_full(f, &self.basis, &self.order, &mut self.stats.reduction_steps);
        if r.is_empty() {
            self.stats.zero_reductions += 1;
            return;
        }
        let r = make_monic(r);
        let sugar = if self.homogeneous { r[0].0.degree() } else { sugar.max(r[0].0.degree()) };
        self.basis.push(r);
        self.sugar.push(sugar);
        self.update(self.basis.len() - 1);
    }

    /// Gebauer–Möller update for the new element `h`.
    fn update(&mut self, h: usize) {
        let lm_h = self.basis[h][0].0.clone();

        let before = self.pairs.len();
        let basis = &self.basis;
        self.pairs.retain(|p| {
            let lm_i = &basis[p.i][0].0;
            let lm_j = &basis[p.j][0].0;
            !(lm_h.divides(&p.lcm) && lm_i.lcm(&lm_h) != p.lcm && lm_j.lcm(&lm_h) != p.lcm)
        });
        self.stats.pairs_discarded += before - self.pairs.len();

        let cands: Vec<(usize, Monomial, bool)> = (0..h)
            .map(|g| {
                let lm_g = &self.basis[g][0].0;
                (g, lm_g.lcm(&lm_h), lm_g.is_coprime(&lm_h))
            })
            .collect();
        // chain criterion among the new pairs
        let keep: Vec<bool> = cands
            .iter()
            .map(|(_, l, _)| {
                !cands
                    .iter()
                    .any(|(_, l2, _)| l2 != l && l2.divides(l))
            })
            .collect();
        let mut added = 0;
        for (k, (g, l, _)) in cands.iter().enumerate() {
            if !keep[k] {
                continue;
            }
            // one representative per lcm class; a coprime member kills the class
            let class: Vec<usize> = (0..cands.len())
                .filter(|&k2| keep[k2] && cands[k2].1 == *l)
                .collect();
            if class[0] != k || class.iter().any(|&k2| cands[k2].2) {
                continue;
            }
            let sugar = if self.homogeneous {
                l.degree()
            } else {
                let s_g = self.sugar[*g] + l.degree() - self.basis[*g][0].0.degree();
                let s_h = self.sugar[h] + l.degree() - lm_h.degree();
                s_g.max(s_h)
            };
            self.pairs.push(Pair {
                i: *g,
                j: h,
                lcm: l.clone(),
                sugar,
            });
            added += 1;
        }
        self.stats.pairs_discarded += cands.len() - added;
    }
}

/// True when every S-pair of `gens` reduces to zero modulo `gens`, i.e. the
/// given generators are already a Gröbner basis for `order`.
pub fn is_groebner_basis(gens: &[Polynomial], order: &TermOrder) -> bool {
    let sorted: Vec<Sorted> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| to_sorted(g, order))
        .collect();
    let mut steps = 0;
    (0..sorted.len()).all(|i| {
        (i + 1..sorted.len()).all(|j| {
            let s = s_polynomial(&sorted[i], &sorted[j], order);
            reduce_full(s, &sorted, order, &mut steps).is_empty()
        })
    })
}

pub(crate) fn to_sorted(p: &Polynomial, order: &TermOrder) -> Sorted {
    p.sorted_terms(order)
}

pub(crate) fn from_sorted(ring: &Arc<Ring>, s: Sorted) -> Polynomial {
    Polynomial::from_terms(ring, s)
}

fn make_monic(mut p: Sorted) -> Sorted {
    if p[0].1.is_one() {
        return p;
    }
    let inv = p[0].1.inv();
    for (_, c) in p.iter_mut() {
        *c = &*c * &inv;
    }
    p
}

/// `a - coef * mono * b` where `a` and `b` are sorted decreasingly.
fn sub_scaled(a: &[(Monomial, FieldElem)], b: &[(Monomial, FieldElem)], coef: &FieldElem, mono: &Monomial, order: &TermOrder) -> Sorted {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut shifted: Option<(Monomial, FieldElem)> = None;
    loop {
        if shifted.is_none() && j < b.len() {
            shifted = Some((b[j].0.mul(mono), -&(&b[j].1 * coef)));
            j += 1;
        }
        match (a.get(i), shifted.as_ref()) {
            (None, None) => break,
            (Some(t), None) => {
                out.push(t.clone());
                i += 1;
            }
            (None, Some(_)) => {
                out.push(shifted.take().expect("checked"));
            }
            (Some(t), Some(s)) => match order.cmp(&t.0, &s.0) {
                Ordering::Greater => {
                    out.push(t.clone());
                    i += 1;
                }
                Ordering::Less => out.push(shifted.take().expect("checked")),
                Ordering::Equal => {
                    let c = &t.1 + &s.1;
                    if !c.is_zero() {
                        out.push((t.0.clone(), c));
                    }
                    i += 1;
                    shifted = None;
                }
            },
        }
    }
    out
}

pub(crate) fn s_polynomial(f: &Sorted, g: &Sorted, order: &TermOrder) -> Sorted {
    let lcm = f[0].0.lcm(&g[0].0);
    let uf = f[0].0.quotient_of(&lcm).expect("lcm");
    let ug = g[0].0.quotient_of(&lcm).expect("lcm");
    // both monic: uf*f - ug*g, leading terms cancel
    let left: Sorted = f[1..]
        .iter()
        .map(|(m, c)| (m.mul(&uf), c.clone()))
        .collect();
    let one = f[0].1.field().one();
    let ratio = &f[0].1 * &g[0].1.inv();
    let scaled_left: Sorted = if ratio.is_one() {
        left
    } else {
        let inv = f[0].1.inv();
        left.into_iter().map(|(m, c)| (m, &c * &inv)).collect()
    };
    let coef = if ratio.is_one() { one } else { g[0].1.inv() };
    sub_scaled(&scaled_left, &g[1..], &coef, &ug, order)
}

/// Full reduction of `f` by `basis` (every term, not only the leading one).
pub(crate) fn reduce_full(f: Sorted, basis: &[Sorted], order: &TermOrder, steps: &mut usize) -> Sorted {
    let mut p = f;
    let mut start = 0;
    let mut rem: Sorted = Vec::new();
    while start < p.len() {
        let (m, c) = &p[start];
        let reducer = basis.iter().find(|g| g[0].0.divides(m));
        match reducer {
            Some(g) => {
                *steps += 1;
                let q = g[0].0.quotient_of(m).expect("divides");
                let coef = if g[0].1.is_one() { c.clone() } else { c * &g[0].1.inv() };
                p = sub_scaled(&p[start + 1..], &g[1..], &coef, &q, order);
                start = 0;
            }
            None => {
                rem.push(p[start].clone());
                start += 1;
            }
        }
    }
    rem
}

fn interreduce(basis: &[Sorted], order: &TermOrder, stats: &mut GbStats) -> Vec<Sorted> {
    // minimal basis: drop elements whose leading monomial is divisible by
    // another's (ties keep the earliest)
    let mut minimal: Vec<Sorted> = Vec::new();
    for (i, p) in basis.iter().enumerate() {
        let lm = &p[0].0;
        let redundant = basis.iter().enumerate().any(|(j, q)| {
            j != i && q[0].0.divides(lm) && (q[0].0 != *lm || j < i)
        });
        if !redundant {
            minimal.push(p.clone());
        }
    }
    let mut out: Vec<Sorted> = Vec::with_capacity(minimal.len());
    for (i, p) in minimal.iter().enumerate() {
        let others: Vec<Sorted> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, q)| q.clone())
            .collect();
        let tail = reduce_full(p[1..].to_vec(), &others, order, &mut stats.reduction_steps);
        let mut full = vec![p[0].clone()];
        full.extend(tail);
        out.push(make_monic(full));
    }
    out.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    out
}

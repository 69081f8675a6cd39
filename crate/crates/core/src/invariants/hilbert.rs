use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::groebner::{InitialIdeal, QuotientRing};
use crate::polyring::Monomial;
use crate::scalars::TruncatedSeries;

/// Hilbert series `H(z) = K(z)/(1−z)^n = h(z)/(1−z)^dim` of a standard graded
/// quotient, together with the prefix `dim R_0, …, dim R_D` counted from
/// standard monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    n: usize,
    k_polynomial: Vec<BigInt>,
    numerator: Vec<BigInt>,
    dim: usize,
    prefix: Vec<BigInt>,
}

impl HilbertSeries {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Numerator over `(1−z)^n`.
    pub fn k_polynomial(&self) -> &[BigInt] {
        &self.k_polynomial
    }

    /// The reduced numerator `h(z)`, over `(1−z)^dim`.
    pub fn numerator(&self) -> &[BigInt] {
        &self.numerator
    }

    /// Krull dimension: the pole order at `z = 1`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `dim R_d` for `d = 0..=D`.
    pub fn prefix(&self) -> &[BigInt] {
        &self.prefix
    }

    pub fn truncation(&self) -> usize {
        self.prefix.len() - 1
    }

    pub fn prefix_i64(&self) -> Vec<i64> {
        self.prefix
            .iter()
            .map(|c| i64::try_from(c).expect("Hilbert function fits in i64"))
            .collect()
    }

    pub fn series(&self) -> TruncatedSeries {
        TruncatedSeries::new(
            self.prefix.iter().cloned().map(BigRational::from_integer).collect(),
            self.truncation(),
        )
    }

    /// Expansion of the closed form `h(z)/(1−z)^dim` up to degree `top`.
    pub fn closed_form_prefix(&self, top: usize) -> Vec<BigInt> {
        expand(&self.numerator, self.dim, top)
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = format_poly(&self.numerator);
        match self.dim {
            0 => write!(f, "{num}"),
            1 => write!(f, "({num})/(1-z)"),
            d => write!(f, "({num})/(1-z)^{d}"),
        }
    }
}

fn format_poly(c: &[BigInt]) -> String {
    let mut s = String::new();
    for (i, a) in c.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let mag = a.abs();
        let sign = if a.is_negative() { "-" } else { "+" };
        if s.is_empty() {
            if a.is_negative() {
                s.push('-');
            }
        } else {
            s.push_str(&format!(" {sign} "));
        }
        let body = match (i, mag.is_one()) {
            (0, _) => mag.to_string(),
            (1, true) => "z".into(),
            (1, false) => format!("{mag}*z"),
            (_, true) => format!("z^{i}"),
            (_, false) => format!("{mag}*z^{i}"),
        };
        s.push_str(&body);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// Coefficients of `num/(1−z)^k` up to degree `top`.
fn expand(num: &[BigInt], k: usize, top: usize) -> Vec<BigInt> {
    let mut c: Vec<BigInt> = (0..=top)
        .map(|i| num.get(i).cloned().unwrap_or_else(BigInt::zero))
        .collect();
    for _ in 0..k {
        // divide by (1 − z): prefix sums
        for i in 1..=top {
            let prev = c[i - 1].clone();
            c[i] += prev;
        }
    }
    c
}

fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(out)
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn one_minus_z_pow(d: u32) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); d as usize + 1];
    p[0] = BigInt::one();
    p[d as usize] -= BigInt::one();
    p
}

/// Numerator `K(z)` of the Hilbert series of `S/(gens)` over `(1−z)^n`, by
/// the recursion `K(I) = K(I + (x)) + z·K(I : x)` on a variable `x` shared by
/// several generators; pairwise coprime generators give `Π (1 − z^{deg})`.
pub fn monomial_k_polynomial(n: usize, gens: &[Monomial]) -> Vec<BigInt> {
    let minimal = InitialIdeal::from_monomials(n, gens);
    let gens = minimal.generators();
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    if minimal.is_unit() {
        return vec![BigInt::zero()];
    }
    let mut counts = vec![0usize; n];
    for g in gens {
        for v in g.support() {
            counts[v] += 1;
        }
    }
    let pivot = (0..n).max_by_key(|&v| (counts[v], std::cmp::Reverse(v))).expect("n >= 1");
    if counts[pivot] <= 1 {
        return gens
            .iter()
            .fold(vec![BigInt::one()], |acc, g| poly_mul(&acc, &one_minus_z_pow(g.degree())));
    }
    let x = Monomial::var(n, pivot);
    let mut plus: Vec<Monomial> = gens.iter().filter(|g| g.exp(pivot) == 0).cloned().collect();
    plus.push(x.clone());
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut e = g.exps().to_vec();
            e[pivot] = e[pivot].saturating_sub(1);
            Monomial::from_exps(e)
        })
        .collect();
    let a = monomial_k_polynomial(n, &plus);
    let b = monomial_k_polynomial(n, &colon);
    let mut zb = vec![BigInt::zero()];
    zb.extend(b);
    poly_add(&a, &zb)
}

/// Divides out `(1 − z)` as long as it divides `k`; returns `(h, dim)`.
fn reduce_k_polynomial(n: usize, k: &[BigInt]) -> (Vec<BigInt>, usize) {
    let mut h = k.to_vec();
    let mut dim = n;
    if h.iter().all(Zero::is_zero) {
        return (vec![BigInt::zero()], 0);
    }
    while dim > 0 && h.iter().sum::<BigInt>().is_zero() {
        // synthetic division by (1 − z): q_i = Σ_{j≤i} h_j
        let mut q = Vec::with_capacity(h.len() - 1);
        let mut acc = BigInt::zero();
        for c in &h[..h.len() - 1] {
            acc += c;
            q.push(acc.clone());
        }
        h = trim(q);
        dim -= 1;
    }
    (h, dim)
}

/// Hilbert series of a monomial quotient `S/(gens)` with prefix to `top`.
pub fn monomial_hilbert_series(n: usize, gens: &[Monomial], top: usize) -> HilbertSeries {
    let k = monomial_k_polynomial(n, gens);
    let (numerator, dim) = reduce_k_polynomial(n, &k);
    let prefix = expand(&k, n, top);
    HilbertSeries {
        n,
        k_polynomial: k,
        numerator,
        dim,
        prefix,
    }
}

/// Hilbert series of `Q`: the prefix counts standard monomials degree by
/// degree; the closed form comes from the initial ideal. The two are
/// checked against each other.
pub fn hilbert_series(q: &QuotientRing, top: usize) -> HilbertSeries {
    let n = q.n();
    let k = monomial_k_polynomial(n, q.initial_ideal().generators());
    let (numerator, dim) = reduce_k_polynomial(n, &k);
    let prefix: Vec<BigInt> = q
        .standard_monomials_up_to(top as u32)
        .iter()
        .map(|level| BigInt::from(level.len()))
        .collect();
    let hs = HilbertSeries {
        n,
        k_polynomial: k,
        numerator,
        dim,
        prefix,
    };
    assert_eq!(
        hs.closed_form_prefix(top),
        hs.prefix,
        "standard monomial counts disagree with the closed form"
    );
    hs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{Ideal, Ring};
    use crate::scalars::Field;
    use proptest::prelude::*;

    fn ring(names: &[&str]) -> std::sync::Arc<Ring> {
        Ring::with_names(names.iter().map(|s| s.to_string()).collect(), Field::Rational).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn exceptional_algebra() {
        let r = ring(&["x", "y", "z"]);
        for sign in ["+", "-"] {
            let i = Ideal::parse(&r, &["x^2", "x*y", &format!("y^2 {sign} x*z"), "y*z"]).unwrap();
            let h = hilbert_series(&QuotientRing::new(&i).unwrap(), 12);
            let mut expect = vec![1, 3, 2];
            expect.extend([1; 10]);
            assert_eq!(h.prefix_i64(), expect);
            assert_eq!(h.dim(), 1);
            assert_eq!(h.to_string(), "(1 + 2*z - z^2 - z^3)/(1-z)");
        }
    }

    #[test]
    fn polynomial_ring() {
        let r = ring(&["x", "y"]);
        let h = hilbert_series(&QuotientRing::polynomial_ring(&r), 5);
        assert_eq!(h.prefix_i64(), vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(h.numerator(), ints(&[1]).as_slice());
        assert_eq!(h.dim(), 2);
    }

    #[test]
    fn binary_cubic_inverse_system() {
        // I_f for f = x^3 + y^3 is (xy, x^3 - y^3)
        let r = ring(&["x", "y"]);
        let i = Ideal::parse(&r, &["x*y", "x^3 - y^3"]).unwrap();
        let h = hilbert_series(&QuotientRing::new(&i).unwrap(), 6);
        assert_eq!(h.prefix_i64(), vec![1, 2, 2, 1, 0, 0, 0]);
        assert_eq!(h.dim(), 0);
        assert_eq!(h.numerator(), ints(&[1, 2, 2, 1]).as_slice());
    }

    #[test]
    fn unit_ideal_has_zero_series() {
        let h = monomial_hilbert_series(2, &[Monomial::one(2)], 3);
        assert_eq!(h.prefix_i64(), vec![0, 0, 0, 0]);
    }

    fn monomial_ideal() -> impl Strategy<Value = (usize, Vec<Vec<u16>>)> {
        (1usize..=4).prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(proptest::collection::vec(0u16..=3, n), 0..=5),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn closed_form_matches_counts((n, exps) in monomial_ideal()) {
            let gens: Vec<Monomial> = exps.into_iter().map(Monomial::from_exps).collect();
            let h = monomial_hilbert_series(n, &gens, 12);
            let init = InitialIdeal::from_monomials(n, &gens);
            let counts: Vec<BigInt> = (0..=12u32)
                .map(|d| BigInt::from(Monomial::all_of_degree(n, d).iter().filter(|m| !init.contains(m)).count()))
                .collect();
            prop_assert_eq!(h.prefix(), counts.as_slice());
            prop_assert_eq!(h.closed_form_prefix(12), counts);
        }
    }
}

use std::fmt;

/// Exponent vector with cached total degree.
///
/// The derived `Ord` is plain lexicographic comparison of exponent vectors and
/// only serves as a canonical storage order; term orders live in
/// [`super::TermOrder`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u16>,
    degree: u32,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial {
            exps: vec![0; n],
            degree: 0,
        }
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    pub fn from_exps(exps: Vec<u16>) -> Self {
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Product; panics on exponent overflow (far beyond desk-scale degrees).
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.n(), other.n());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.exps[i] = m.exps[i].checked_add(1).expect("exponent overflow");
        m.degree += 1;
        m
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect(),
            degree: other.degree - self.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::from_exps(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::from_exps(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, _)| i)
    }

    /// Lowest-index variable occurring, if any.
    pub fn first_var(&self) -> Option<usize> {
        self.exps.iter().position(|&e| e > 0)
    }

    /// Embeds into a ring with more variables; `positions[i]` is the new index
    /// of variable `i`.
    pub fn embed(&self, n_new: usize, positions: &[usize]) -> Monomial {
        let mut exps = vec![0; n_new];
        for (i, &e) in self.exps.iter().enumerate() {
            exps[positions[i]] = e;
        }
        Monomial {
            exps,
            degree: self.degree,
        }
    }

    /// All monomials of degree `d` in `n` variables, lexicographically
    /// descending (x1^d first).
    pub fn all_of_degree(n: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u16; n];
        fn rec(i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
            let n = cur.len();
            if i + 1 == n {
                cur[i] = left as u16;
                out.push(Monomial::from_exps(cur.clone()));
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e as u16;
                rec(i + 1, left - e, cur, out);
            }
        }
        if n == 0 {
            if d == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        rec(0, d, &mut cur, &mut out);
        out
    }

    pub fn format(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let parts: Vec<String> = self
            .support()
            .map(|i| match self.exps[i] {
                1 => names[i].clone(),
                e => format!("{}^{e}", names[i]),
            })
            .collect();
        parts.join("*")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = Monomial::from_exps(vec![2, 0, 1]);
        let b = Monomial::from_exps(vec![1, 1, 0]);
        assert_eq!(a.lcm(&b), Monomial::from_exps(vec![2, 1, 1]));
        assert_eq!(a.gcd(&b), Monomial::from_exps(vec![1, 0, 0]));
        assert_eq!(a.mul(&b).degree(), 5);
        assert!(!a.is_coprime(&b));
        assert!(b.quotient_of(&a).is_none());
        let c = Monomial::from_exps(vec![1, 0, 0]);
        assert_eq!(c.quotient_of(&a), Some(Monomial::from_exps(vec![1, 0, 1])));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(Monomial::all_of_degree(3, 3).len(), 10);
        assert_eq!(Monomial::all_of_degree(4, 5).len(), 56);
        assert_eq!(Monomial::all_of_degree(1, 4).len(), 1);
        assert_eq!(Monomial::all_of_degree(3, 0), vec![Monomial::one(3)]);
    }
}

use std::cmp::Ordering;
use std::fmt;

use super::Monomial;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    DegRevLex,
    /// Degrevlex on the first `k` variables (in permutation order), ties broken
    /// by degrevlex on the rest. Eliminates the first block.
    Block(usize),
}

/// A monomial order together with a ranking of the variables: `perm[0]` is the
/// largest variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TermOrder {
    kind: OrderKind,
    perm: Vec<usize>,
}

impl TermOrder {
    pub fn new(kind: OrderKind, perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &v in &perm {
            if v >= n || seen[v] {
                return Err(Error::Invalid(format!("{perm:?} is not a permutation")));
            }
            seen[v] = true;
        }
        if let OrderKind::Block(k) = kind {
            if k > n {
                return Err(Error::Invalid(format!("block size {k} exceeds {n} variables")));
            }
        }
        Ok(TermOrder { kind, perm })
    }

    pub fn lex(n: usize) -> Self {
        TermOrder {
            kind: OrderKind::Lex,
            perm: (0..n).collect(),
        }
    }

    /// Degree reverse lexicographic with `x1 > x2 > … > xn`.
    pub fn degrevlex(n: usize) -> Self {
        TermOrder {
            kind: OrderKind::DegRevLex,
            perm: (0..n).collect(),
        }
    }

    /// Block order eliminating the given variables (they form the first block,
    /// the remaining ones keep their relative order).
    pub fn elimination(n: usize, vars: &[usize]) -> Result<Self> {
        let mut perm: Vec<usize> = vars.to_vec();
        perm.extend((0..n).filter(|v| !vars.contains(v)));
        Self::new(OrderKind::Block(vars.len()), perm)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn is_graded(&self) -> bool {
        !matches!(self.kind, OrderKind::Lex)
    }

    /// `Greater` when `a > b`.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.kind {
            OrderKind::Lex => lex(&self.perm, a, b),
            OrderKind::DegRevLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| revlex(&self.perm, a, b)),
            OrderKind::Block(k) => {
                let (first, rest) = self.perm.split_at(k);
                block_degrevlex(first, a, b).then_with(|| block_degrevlex(rest, a, b))
            }
        }
    }

    /// Textual form: `lex`, `degrevlex`, `lex-perm:…`, `revlex-perm:…` or
    /// `block:k:…`, with 1-based variable indices from largest to smallest.
    pub fn spec(&self) -> String {
        let identity = self.perm.iter().enumerate().all(|(i, &v)| i == v);
        let perm = self
            .perm
            .iter()
            .map(|v| (v + 1).to_string())
            .collect::<Vec<_>>()
            .join(",");
        match (self.kind, identity) {
            (OrderKind::Lex, true) => "lex".into(),
            (OrderKind::DegRevLex, true) => "degrevlex".into(),
            (OrderKind::Lex, false) => format!("lex-perm:{perm}"),
            (OrderKind::DegRevLex, false) => format!("revlex-perm:{perm}"),
            (OrderKind::Block(k), _) => format!("block:{k}:{perm}"),
        }
    }

    /// Parses [`TermOrder::spec`] strings. Permutation entries may be 1-based
    /// indices or variable names.
    pub fn parse(spec: &str, names: &[String]) -> Result<Self> {
        let n = names.len();
        let spec = spec.trim();
        let perm_of = |s: &str| -> Result<Vec<usize>> {
            s.split(',')
                .map(|t| {
                    let t = t.trim();
                    if let Some(i) = names.iter().position(|nm| nm == t) {
                        return Ok(i);
                    }
                    match t.parse::<usize>() {
                        Ok(i) if (1..=n).contains(&i) => Ok(i - 1),
                        _ => Err(Error::Invalid(format!("unknown variable `{t}` in order"))),
                    }
                })
                .collect()
        };
        match spec {
            "lex" => return Ok(Self::lex(n)),
            "degrevlex" | "revlex" | "grevlex" => return Ok(Self::degrevlex(n)),
            _ => {}
        }
        if let Some(p) = spec.strip_prefix("lex-perm:") {
            return Self::new(OrderKind::Lex, perm_of(p)?);
        }
        if let Some(p) = spec.strip_prefix("revlex-perm:") {
            return Self::new(OrderKind::DegRevLex, perm_of(p)?);
        }
        if let Some(rest) = spec.strip_prefix("block:") {
            let (k, p) = rest
                .split_once(':')
                .ok_or_else(|| Error::Invalid(format!("malformed block order `{spec}`")))?;
            let k = k
                .parse()
                .map_err(|_| Error::Invalid(format!("malformed block size `{k}`")))?;
            return Self::new(OrderKind::Block(k), perm_of(p)?);
        }
        Err(Error::Invalid(format!("unknown term order `{spec}`")))
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec())
    }
}

fn lex(perm: &[usize], a: &Monomial, b: &Monomial) -> Ordering {
    for &v in perm {
        match a.exp(v).cmp(&b.exp(v)) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

/// Reverse lexicographic tie-break for equal degrees: the monomial with the
/// smaller exponent in the smallest variable is larger.
fn revlex(perm: &[usize], a: &Monomial, b: &Monomial) -> Ordering {
    for &v in perm.iter().rev() {
        match a.exp(v).cmp(&b.exp(v)) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

fn block_degrevlex(vars: &[usize], a: &Monomial, b: &Monomial) -> Ordering {
    let da: u32 = vars.iter().map(|&v| a.exp(v) as u32).sum();
    let db: u32 = vars.iter().map(|&v| b.exp(v) as u32).sum();
    da.cmp(&db).then_with(|| revlex(vars, a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exps(e.to_vec())
    }

    #[test]
    fn degrevlex_basics() {
        let o = TermOrder::degrevlex(3);
        // x^2 > xy > y^2 > xz > yz > z^2
        let chain = [
            m(&[2, 0, 0]),
            m(&[1, 1, 0]),
            m(&[0, 2, 0]),
            m(&[1, 0, 1]),
            m(&[0, 1, 1]),
            m(&[0, 0, 2]),
        ];
        for w in chain.windows(2) {
            assert_eq!(o.cmp(&w[0], &w[1]), Ordering::Greater, "{:?} > {:?}", w[0], w[1]);
        }
    }

    #[test]
    fn lex_and_perm() {
        let o = TermOrder::lex(2);
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
        let names: Vec<String> = ["x", "y", "z", "t"].iter().map(|s| s.to_string()).collect();
        let o = TermOrder::parse("revlex-perm:t,x,y,z", &names).unwrap();
        assert_eq!(o.perm(), &[3, 0, 1, 2]);
        assert_eq!(o.spec(), "revlex-perm:4,1,2,3");
        assert_eq!(TermOrder::parse(&o.spec(), &names).unwrap(), o);
        // z^2 is the smallest quadric, then xt... t is largest
        assert_eq!(o.cmp(&m(&[1, 0, 0, 1]), &m(&[2, 0, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn block_eliminates() {
        let o = TermOrder::elimination(3, &[2]).unwrap();
        assert_eq!(o.cmp(&m(&[0, 0, 1]), &m(&[5, 5, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[2, 0, 0]), &m(&[1, 1, 0])), Ordering::Greater);
    }

    fn orders() -> impl Strategy<Value = TermOrder> {
        prop_oneof![
            Just(TermOrder::lex(3)),
            Just(TermOrder::degrevlex(3)),
            Just(TermOrder::new(OrderKind::DegRevLex, vec![2, 0, 1]).unwrap()),
            Just(TermOrder::elimination(3, &[1]).unwrap()),
            Just(TermOrder::new(OrderKind::Block(2), vec![1, 2, 0]).unwrap()),
        ]
    }

    fn mono() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u16..4, 3).prop_map(Monomial::from_exps)
    }

    proptest! {
        #[test]
        fn multiplicative(o in orders(), a in mono(), b in mono(), c in mono()) {
            let before = o.cmp(&a, &b);
            prop_assert_eq!(o.cmp(&c.mul(&a), &c.mul(&b)), before);
            prop_assert_ne!(o.cmp(&c.mul(&a), &Monomial::one(3)), Ordering::Less);
        }

        #[test]
        fn total(o in orders(), a in mono(), b in mono()) {
            prop_assert_eq!(o.cmp(&a, &b) == Ordering::Equal, a == b);
            prop_assert_eq!(o.cmp(&a, &b), o.cmp(&b, &a).reverse());
        }
    }
}

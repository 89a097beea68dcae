//! Monomials, monomial orders, and multivariate polynomials over a field.
//!
//! Exponents are capped at 255 per variable and rings at 12 variables; every
//! example in range fits comfortably and the caps guard against accidental
//! blowup.

use std::cmp::Ordering;
use std::fmt;

use crate::scalar::Field;

pub const MAX_VARS: usize = 12;
/// Cap on exponents in ring and module inputs. Internal products (normal
/// forms of basis products, lcms in S-polynomials) may exceed it and only
/// hit the hard representation bound below.
pub const MAX_EXPONENT: u16 = 255;
const HARD_EXPONENT_BOUND: u16 = 1 << 14;

/// Exponent vector; length equals the ambient variable count.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn new(exponents: Vec<u16>) -> Self {
        assert!(exponents.len() <= MAX_VARS, "too many variables");
        assert!(
            exponents.iter().all(|&e| e <= HARD_EXPONENT_BOUND),
            "exponent out of representable range"
        );
        Monomial(exponents)
    }

    /// All exponents within the input cap.
    pub fn within_input_cap(&self) -> bool {
        self.0.iter().all(|&e| e <= MAX_EXPONENT)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial::new(vec![0; nvars])
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial::new(e)
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial::new(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut e = self.0.clone();
        e[i] += 1;
        Monomial::new(e)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, defined when `self` divides `other`.
    pub fn quotient(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial::new(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect()))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd_is_one(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// `Some(i)` when the monomial is a positive pure power of variable `i`.
    pub fn pure_power(&self) -> Option<usize> {
        let mut var = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if var.is_some() {
                    return None;
                }
                var = Some(i);
            }
        }
        var
    }

    pub fn render(&self, vars: &[String]) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(vars[i].clone()),
                _ => parts.push(format!("{}^{}", vars[i], e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{:?}", self.0)
    }
}

/// Monomial orders; variable precedence is declaration order (first declared
/// variable is largest).
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    DegRevLex,
    Lex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match self {
            MonomialOrder::DegRevLex => {
                match a.degree().cmp(&b.degree()) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
                // Equal degree: the one whose last nonzero exponent
                // difference is negative is larger.
                for i in (0..a.nvars()).rev() {
                    match a.0[i].cmp(&b.0[i]) {
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => {}
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Lex => {
                for i in 0..a.nvars() {
                    match a.0[i].cmp(&b.0[i]) {
                        Ordering::Equal => {}
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// A polynomial kept sorted with terms strictly descending under a fixed
/// monomial order. Operations take the order explicitly; mixing orders on one
/// polynomial is a caller bug.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial<K: Field> {
    terms: Vec<(Monomial, K)>,
}

impl<K: Field> Polynomial<K> {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn from_terms(terms: Vec<(Monomial, K)>, order: MonomialOrder) -> Self {
        let mut terms = terms;
        terms.sort_by(|(a, _), (b, _)| order.cmp(b, a));
        let mut out: Vec<(Monomial, K)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((pm, pc)) if *pm == m => *pc = pc.clone() + c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial { terms: out }
    }

    pub fn monomial(m: Monomial) -> Self {
        Polynomial { terms: vec![(m, K::one())] }
    }

    pub fn constant(nvars: usize, c: K) -> Self {
        if c.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial { terms: vec![(Monomial::one(nvars), c)] }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, K)] {
        &self.terms
    }

    pub fn leading(&self) -> Option<&(Monomial, K)> {
        self.terms.first()
    }

    pub fn constant_coeff(&self) -> K {
        self.terms
            .iter()
            .find(|(m, _)| m.is_one())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(K::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.degree();
                self.terms.iter().all(|(m, _)| m.degree() == d)
            }
        }
    }

    pub fn total_degree(&self) -> usize {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Polynomial<K>, order: MonomialOrder) -> Polynomial<K> {
        let mut out: Vec<(Monomial, K)> = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut a, mut b) = (0, 0);
        while a < self.terms.len() || b < other.terms.len() {
            let pick = match (self.terms.get(a), other.terms.get(b)) {
                (Some((ma, _)), Some((mb, _))) => order.cmp(ma, mb),
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (None, None) => unreachable!(),
            };
            match pick {
                Ordering::Greater => {
                    out.push(self.terms[a].clone());
                    a += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[b].clone());
                    b += 1;
                }
                Ordering::Equal => {
                    let c = self.terms[a].1.clone() + other.terms[b].1.clone();
                    if !c.is_zero() {
                        out.push((self.terms[a].0.clone(), c));
                    }
                    a += 1;
                    b += 1;
                }
            }
        }
        Polynomial { terms: out }
    }

    pub fn scale(&self, c: &K) -> Polynomial<K> {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), c.clone() * x.clone())).collect(),
        }
    }

    pub fn neg(&self) -> Polynomial<K> {
        Polynomial { terms: self.terms.iter().map(|(m, x)| (m.clone(), -x.clone())).collect() }
    }

    /// Multiply by the single term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &K, order: MonomialOrder) -> Polynomial<K> {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let terms: Vec<(Monomial, K)> =
            self.terms.iter().map(|(tm, tc)| (tm.mul(m), tc.clone() * c.clone())).collect();
        // Term order is preserved by multiplication with a fixed monomial.
        debug_assert!(terms.windows(2).all(|w| order.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial { terms }
    }

    pub fn mul(&self, other: &Polynomial<K>, order: MonomialOrder) -> Polynomial<K> {
        let mut acc = Vec::new();
        for (m, c) in &self.terms {
            for (n, d) in &other.terms {
                acc.push((m.mul(n), c.clone() * d.clone()));
            }
        }
        Polynomial::from_terms(acc, order)
    }

    /// Divide through by the leading coefficient.
    pub fn monic(&self, _order: MonomialOrder) -> Polynomial<K> {
        match self.terms.first() {
            None => Polynomial::zero(),
            Some((_, lc)) => self.scale(&lc.inv()),
        }
    }

    pub fn render(&self, vars: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            if m.is_one() {
                out.push_str(&format!("{c}"));
            } else if c.is_one() {
                out.push_str(&m.render(vars));
            } else {
                out.push_str(&format!("{c}*{}", m.render(vars)));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::F5;
    use num_traits::One;

    fn m(e: &[u16]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn degrevlex_ordering() {
        let o = MonomialOrder::DegRevLex;
        // Degree dominates.
        assert_eq!(o.cmp(&m(&[2, 0, 0]), &m(&[1, 0, 0])), Ordering::Greater);
        // Same degree: x*z < y^2 in degrevlex (z-exponent larger means smaller).
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        // x > y > z.
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 1, 0]), &m(&[0, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn lex_ordering() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 9])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1]), &m(&[1, 0])), Ordering::Greater);
    }

    #[test]
    fn polynomial_normalization() {
        let o = MonomialOrder::DegRevLex;
        let p: Polynomial<F5> = Polynomial::from_terms(
            vec![
                (m(&[1, 0]), F5::new(2)),
                (m(&[0, 1]), F5::new(1)),
                (m(&[1, 0]), F5::new(3)),
            ],
            o,
        );
        // 2x + 3x = 5x = 0 in F5, leaving just y.
        assert_eq!(p.terms().len(), 1);
        assert_eq!(p.leading().unwrap().0, m(&[0, 1]));
    }

    #[test]
    fn polynomial_arithmetic() {
        let o = MonomialOrder::DegRevLex;
        let x: Polynomial<F5> = Polynomial::monomial(m(&[1, 0]));
        let y: Polynomial<F5> = Polynomial::monomial(m(&[0, 1]));
        let s = x.add(&y, o);
        let p = s.mul(&s, o); // (x+y)^2 = x^2 + 2xy + y^2
        assert_eq!(p.terms().len(), 3);
        assert_eq!(p.leading().unwrap().0, m(&[2, 0]));
        assert_eq!(sv_coeff(&p, &m(&[1, 1])), F5::new(2));
    }

    fn sv_coeff(p: &Polynomial<F5>, mm: &Monomial) -> F5 {
        p.terms()
            .iter()
            .find(|(t, _)| t == mm)
            .map(|(_, c)| *c)
            .unwrap_or_else(|| F5::new(0))
    }

    #[test]
    fn monomial_divisibility() {
        assert!(m(&[1, 0]).divides(&m(&[2, 1])));
        assert!(!m(&[0, 2]).divides(&m(&[2, 1])));
        assert_eq!(m(&[1, 0]).quotient(&m(&[2, 1])), Some(m(&[1, 1])));
        assert_eq!(m(&[2, 0]).lcm(&m(&[1, 1])), m(&[2, 1]));
        assert_eq!(m(&[0, 3]).pure_power(), Some(1));
        assert_eq!(m(&[1, 1]).pure_power(), None);
        assert_eq!(m(&[0, 0]).pure_power(), None);
        assert!(Monomial::one(2).is_one());
    }

    #[test]
    fn render_uses_names() {
        let vars: Vec<String> = vec!["x".into(), "y".into()];
        let p: Polynomial<F5> = Polynomial::from_terms(
            vec![(m(&[2, 0]), F5::one()), (m(&[0, 0]), F5::new(3))],
            MonomialOrder::DegRevLex,
        );
        assert_eq!(p.render(&vars), "x^2 + 3");
    }
}

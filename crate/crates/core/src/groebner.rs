//! Buchberger's algorithm for zero-dimensional ideals, normal forms, and the
//! standard-monomial basis of the quotient.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial};
use crate::scalar::Field;

/// A reduced Gröbner basis: generators monic, in normal form with respect to
/// one another, sorted ascending by leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<K: Field> {
    pub nvars: usize,
    pub order: MonomialOrder,
    gens: Vec<Polynomial<K>>,
}

impl<K: Field> GroebnerBasis<K> {
    pub fn generators(&self) -> &[Polynomial<K>] {
        &self.gens
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.gens.iter().map(|g| &g.leading().expect("nonzero generator").0)
    }

    pub fn divides_leading(&self, m: &Monomial) -> bool {
        self.leading_monomials().any(|lm| lm.divides(m))
    }
}

/// The unique remainder of `p` supported on standard monomials; k-linear in
/// `p` for a fixed basis.
pub fn normal_form<K: Field>(p: &Polynomial<K>, gb: &GroebnerBasis<K>) -> Polynomial<K> {
    reduce_by(p, &gb.gens, gb.order)
}

fn s_polynomial<K: Field>(
    f: &Polynomial<K>,
    g: &Polynomial<K>,
    order: MonomialOrder,
) -> Polynomial<K> {
    let (lmf, lcf) = f.leading().unwrap();
    let (lmg, lcg) = g.leading().unwrap();
    let l = lmf.lcm(lmg);
    let a = lmf.quotient(&l).unwrap();
    let b = lmg.quotient(&l).unwrap();
    f.mul_term(&a, &lcg.clone(), order).add(&g.mul_term(&b, &(-lcf.clone()), order), order)
}

/// Buchberger with normal-strategy pair selection (lcm degree, then indices)
/// and the coprime-leading-term criterion, followed by inter-reduction to the
/// unique reduced basis.
pub fn buchberger<K: Field>(
    generators: &[Polynomial<K>],
    nvars: usize,
    order: MonomialOrder,
) -> Result<GroebnerBasis<K>> {
    let mut basis: Vec<Polynomial<K>> = Vec::new();
    for g in generators {
        if g.is_zero() {
            continue;
        }
        if !g.constant_coeff().is_zero() {
            // A nonzero constant term makes the generator a unit of the
            // local ring.
            return Err(Error::UnitInIdeal);
        }
        basis.push(g.monic(order));
    }

    let mut pairs: BTreeSet<(usize, usize, usize)> = BTreeSet::new();
    let queue_pairs = |pairs: &mut BTreeSet<(usize, usize, usize)>,
                           basis: &[Polynomial<K>],
                           j: usize| {
        for i in 0..j {
            if basis[i].is_zero() {
                continue;
            }
            let lmi = &basis[i].leading().unwrap().0;
            let lmj = &basis[j].leading().unwrap().0;
            if lmi.gcd_is_one(lmj) {
                continue;
            }
            pairs.insert((lmi.lcm(lmj).degree(), i, j));
        }
    };
    for j in 0..basis.len() {
        queue_pairs(&mut pairs, &basis, j);
    }

    while let Some(&(d, i, j)) = pairs.iter().next() {
        pairs.remove(&(d, i, j));
        if basis[i].is_zero() || basis[j].is_zero() {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let h = reduce_by(&s, &basis, order);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Err(Error::UnitInIdeal);
        }
        let h = h.monic(order);
        basis.push(h);
        queue_pairs(&mut pairs, &basis, basis.len() - 1);
    }

    // Inter-reduce to the reduced basis: drop generators whose leading term
    // is divisible by another, then put every tail in normal form.
    let mut keep: Vec<Polynomial<K>> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let lm = &g.leading().unwrap().0;
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            if i == j || h.is_zero() {
                return false;
            }
            let lmh = &h.leading().unwrap().0;
            lmh.divides(lm) && (lmh != lm || j < i)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    let mut reduced: Vec<Polynomial<K>> = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<Polynomial<K>> =
            keep.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g.clone()).collect();
        let h = reduce_by(&keep[i], &others, order);
        if h.is_constant() && !h.is_zero() {
            return Err(Error::UnitInIdeal);
        }
        if !h.is_zero() {
            reduced.push(h.monic(order));
        }
    }
    reduced.sort_by(|a, b| {
        let (la, lb) = (&a.leading().unwrap().0, &b.leading().unwrap().0);
        la.degree().cmp(&lb.degree()).then_with(|| order.cmp(lb, la))
    });
    Ok(GroebnerBasis { nvars, order, gens: reduced })
}

fn reduce_by<K: Field>(
    p: &Polynomial<K>,
    basis: &[Polynomial<K>],
    order: MonomialOrder,
) -> Polynomial<K> {
    let mut work = p.clone();
    let mut remainder: Vec<(Monomial, K)> = Vec::new();
    'outer: while let Some((lm, lc)) = work.leading().cloned() {
        for g in basis {
            if g.is_zero() {
                continue;
            }
            let (lmg, lcg) = g.leading().unwrap();
            if lmg.divides(&lm) {
                let q = lmg.quotient(&lm).unwrap();
                let c = -(lc.clone() * lcg.clone().inv());
                work = work.add(&g.mul_term(&q, &c, order), order);
                continue 'outer;
            }
        }
        remainder.push((lm, lc));
        let rest: Vec<(Monomial, K)> = work.terms()[1..].to_vec();
        work = Polynomial::from_terms(rest, order);
    }
    Polynomial::from_terms(remainder, order)
}

/// All monomials outside the leading-term ideal, sorted by degree then the
/// active order. Detects non-Artinian input (a variable with no pure power
/// among the leading terms) before enumerating.
pub fn standard_monomials<K: Field>(
    gb: &GroebnerBasis<K>,
    names: &[String],
    dim_cap: usize,
) -> Result<Vec<Monomial>> {
    for i in 0..gb.nvars {
        let covered = gb.leading_monomials().any(|lm| lm.pure_power() == Some(i));
        if !covered {
            return Err(Error::NotArtinian {
                variable: names.get(i).cloned().unwrap_or_else(|| format!("#{i}")),
            });
        }
    }
    let mut standard: Vec<Monomial> = Vec::new();
    let mut frontier: BTreeSet<Monomial> = BTreeSet::new();
    frontier.insert(Monomial::one(gb.nvars));
    while !frontier.is_empty() {
        let mut next: BTreeSet<Monomial> = BTreeSet::new();
        for m in frontier {
            if gb.divides_leading(&m) {
                continue;
            }
            if standard.len() == dim_cap {
                return Err(Error::SizeCap {
                    detail: format!("quotient dimension exceeds cap {dim_cap}"),
                });
            }
            standard.push(m.clone());
            for i in 0..gb.nvars {
                next.insert(m.mul_var(i));
            }
        }
        frontier = next;
    }
    // Within a degree, larger monomials come first (1, x, y, z, xz, yz, ...).
    standard.sort_by(|a, b| (a.degree().cmp(&b.degree())).then_with(|| gb.order.cmp(b, a)));
    Ok(standard)
}

/// Independent divisibility oracle for monomial ideals: counts the monomials
/// in the bounding box not divisible by any generator. Used by tests to
/// cross-check `standard_monomials`.
pub fn monomial_ideal_standard_count(gens: &[Monomial], nvars: usize) -> Option<usize> {
    let mut bounds = vec![None; nvars];
    for g in gens {
        if let Some(i) = g.pure_power() {
            let e = g.exponents()[i];
            let b: &mut Option<u16> = &mut bounds[i];
            *b = Some(b.map_or(e, |cur| cur.min(e)));
        }
    }
    let bounds: Option<Vec<u16>> = bounds.into_iter().collect();
    let bounds = bounds?;
    let mut count = 0usize;
    let mut exps = vec![0u16; nvars];
    loop {
        let m = Monomial::new(exps.clone());
        if !gens.iter().any(|g| g.divides(&m)) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == nvars {
                return Some(count);
            }
            exps[i] += 1;
            if exps[i] < bounds[i] {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{F32003, F5};
    use num_traits::One;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn mono(e: &[u16]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn mpoly<K: Field>(e: &[u16]) -> Polynomial<K> {
        Polynomial::monomial(mono(e))
    }

    fn binom<K: Field>(a: &[u16], b: &[u16]) -> Polynomial<K> {
        Polynomial::from_terms(
            vec![(mono(a), K::one()), (mono(b), -K::one())],
            MonomialOrder::DegRevLex,
        )
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let gens: Vec<Polynomial<F5>> =
            vec![mpoly(&[2, 0, 0]), mpoly(&[1, 1, 0]), mpoly(&[0, 2, 0]), mpoly(&[0, 0, 2])];
        let gb = buchberger(&gens, 3, MonomialOrder::DegRevLex).unwrap();
        let lms: Vec<Monomial> = gb.leading_monomials().cloned().collect();
        assert_eq!(
            lms,
            vec![mono(&[2, 0, 0]), mono(&[1, 1, 0]), mono(&[0, 2, 0]), mono(&[0, 0, 2])]
        );
        let sm = standard_monomials(&gb, &names(&["x", "y", "z"]), 512).unwrap();
        assert_eq!(
            sm,
            vec![
                mono(&[0, 0, 0]),
                mono(&[1, 0, 0]),
                mono(&[0, 1, 0]),
                mono(&[0, 0, 1]),
                mono(&[1, 0, 1]),
                mono(&[0, 1, 1]),
            ]
        );
    }

    /// Worked by hand: the e = 3 binomial ideal reduces to the basis
    /// {x1x2, x1x3, x2x3, x1^2 - x3^2, x2^2 - x3^2, x3^3} with standard
    /// monomials 1, x1, x2, x3, x3^2 (Hilbert series 1 + 3t + t^2).
    #[test]
    fn e3_binomial_ideal() {
        let gens: Vec<Polynomial<F32003>> = vec![
            binom(&[2, 0, 0], &[0, 2, 0]),
            binom(&[0, 2, 0], &[0, 0, 2]),
            mpoly(&[1, 1, 0]),
            mpoly(&[1, 0, 1]),
            mpoly(&[0, 1, 1]),
        ];
        let gb = buchberger(&gens, 3, MonomialOrder::DegRevLex).unwrap();
        let lms: BTreeSet<Monomial> = gb.leading_monomials().cloned().collect();
        let expected: BTreeSet<Monomial> = [
            mono(&[2, 0, 0]),
            mono(&[0, 2, 0]),
            mono(&[1, 1, 0]),
            mono(&[1, 0, 1]),
            mono(&[0, 1, 1]),
            mono(&[0, 0, 3]),
        ]
        .into_iter()
        .collect();
        assert_eq!(lms, expected);
        let sm = standard_monomials(&gb, &names(&["x1", "x2", "x3"]), 512).unwrap();
        assert_eq!(
            sm,
            vec![
                mono(&[0, 0, 0]),
                mono(&[1, 0, 0]),
                mono(&[0, 1, 0]),
                mono(&[0, 0, 1]),
                mono(&[0, 0, 2]),
            ]
        );
        // Reduction path x1^2 -> x2^2 -> x3^2.
        let nf = normal_form(&mpoly::<F32003>(&[2, 0, 0]), &gb);
        assert_eq!(nf, mpoly(&[0, 0, 2]));
    }

    #[test]
    fn unit_in_ideal_detected() {
        // x - 1 has a nonzero constant term, hence is a unit locally.
        let p: Polynomial<F5> = Polynomial::from_terms(
            vec![(mono(&[1]), F5::one()), (mono(&[0]), -F5::one())],
            MonomialOrder::DegRevLex,
        );
        match buchberger(&[p], 1, MonomialOrder::DegRevLex) {
            Err(Error::UnitInIdeal) => {}
            other => panic!("expected UnitInIdeal, got {other:?}"),
        }
    }

    #[test]
    fn normal_form_examples() {
        let gens: Vec<Polynomial<F5>> =
            vec![mpoly(&[2, 0, 0]), mpoly(&[1, 1, 0]), mpoly(&[0, 2, 0]), mpoly(&[0, 0, 2])];
        let gb = buchberger(&gens, 3, MonomialOrder::DegRevLex).unwrap();
        // x^2*y is in the ideal.
        assert!(normal_form(&mpoly::<F5>(&[2, 1, 0]), &gb).is_zero());
        // 1 is already standard.
        let one: Polynomial<F5> = Polynomial::constant(3, F5::one());
        assert_eq!(normal_form(&one, &gb), one);
    }

    #[test]
    fn not_artinian_detected() {
        let gens: Vec<Polynomial<F5>> =
            vec![mpoly(&[1, 1, 0]), mpoly(&[1, 0, 1]), mpoly(&[0, 1, 1])];
        let gb = buchberger(&gens, 3, MonomialOrder::DegRevLex).unwrap();
        match standard_monomials(&gb, &names(&["x", "y", "z"]), 512) {
            Err(Error::NotArtinian { variable }) => assert_eq!(variable, "x"),
            other => panic!("expected NotArtinian, got {other:?}"),
        }
    }

    #[test]
    fn standard_count_matches_divisibility_oracle() {
        let gens =
            vec![mono(&[2, 0, 0]), mono(&[1, 1, 0]), mono(&[0, 2, 0]), mono(&[0, 0, 2])];
        let polys: Vec<Polynomial<F5>> =
            gens.iter().map(|g| Polynomial::monomial(g.clone())).collect();
        let gb = buchberger(&polys, 3, MonomialOrder::DegRevLex).unwrap();
        let sm = standard_monomials(&gb, &names(&["x", "y", "z"]), 512).unwrap();
        assert_eq!(Some(sm.len()), monomial_ideal_standard_count(&gens, 3));
    }

    #[test]
    fn two_variable_truncation() {
        let gens: Vec<Polynomial<F5>> = vec![mpoly(&[2, 0]), mpoly(&[1, 1]), mpoly(&[0, 2])];
        let gb = buchberger(&gens, 2, MonomialOrder::DegRevLex).unwrap();
        let sm = standard_monomials(&gb, &names(&["x", "y"]), 512).unwrap();
        assert_eq!(sm, vec![mono(&[0, 0]), mono(&[1, 0]), mono(&[0, 1])]);
    }
}

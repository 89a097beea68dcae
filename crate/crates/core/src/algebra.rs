//! Artinian local algebras R = k[x_1..x_n]/I presented on their
//! standard-monomial basis, with an eagerly materialized multiplication
//! table, powers of the maximal ideal, socle, Hilbert function, and the
//! local tensor product.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, normal_form, standard_monomials, GroebnerBasis};
use crate::linalg::{DenseAcc, Matrix, SparseVec, Subspace};
use crate::poly::{Monomial, MonomialOrder, Polynomial};
use crate::scalar::Field;

/// Construction caps; the dimension cap keeps multiplication tables and
/// resolution matrices at desk scale.
#[derive(Clone, Copy, Debug)]
pub struct Caps {
    pub dim_cap: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { dim_cap: 512 }
    }
}

/// Numerical profile of an algebra.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct AlgebraProfile {
    /// k-dimension of R.
    pub dim: usize,
    /// h_d = dim m^d / m^(d+1); sums to `dim`, h_0 = 1, h_1 = embedding_dim.
    pub hilbert: Vec<usize>,
    pub embedding_dim: usize,
    pub socle_dim: usize,
    /// dim_k m^2.
    pub m2_dim: usize,
    /// Least t with m^t = 0.
    pub nil_index: usize,
}

/// A finite-dimensional local algebra over k with basis the standard
/// monomials of a zero-dimensional ideal. Immutable after construction.
pub struct ArtinAlgebra<K: Field> {
    pub vars: Vec<String>,
    pub order: MonomialOrder,
    pub gb: GroebnerBasis<K>,
    /// The constant-free generators the algebra was built from (kept for
    /// printing ring specs and replay).
    pub input_gens: Vec<Polynomial<K>>,
    /// basis[0] = 1; sorted by degree, then descending monomial order.
    pub basis: Vec<Monomial>,
    /// Total degree of each basis monomial.
    pub degrees: Vec<usize>,
    /// All input generators homogeneous.
    pub graded: bool,
    pub profile: AlgebraProfile,
    index: std::collections::BTreeMap<Monomial, u32>,
    table: Vec<SparseVec<K>>,
    var_mult: Vec<Matrix<K>>,
    /// powers[t] = m^t as a subspace, t = 0 ..= nil_index.
    powers: Vec<Subspace<K>>,
    socle: Subspace<K>,
}

impl<K: Field> ArtinAlgebra<K> {
    pub fn from_quotient(
        vars: Vec<String>,
        generators: Vec<Polynomial<K>>,
        order: MonomialOrder,
        caps: Caps,
    ) -> Result<Arc<Self>> {
        let nvars = vars.len();
        assert!(nvars >= 1, "at least one variable");
        for g in &generators {
            if g.terms().iter().any(|(m, _)| !m.within_input_cap()) {
                return Err(Error::SizeCap {
                    detail: format!(
                        "generator exponent above the input cap {}",
                        crate::poly::MAX_EXPONENT
                    ),
                });
            }
        }
        let gb = buchberger(&generators, nvars, order)?;
        let basis = standard_monomials(&gb, &vars, caps.dim_cap)?;
        let dim = basis.len();
        let index: std::collections::BTreeMap<Monomial, u32> =
            basis.iter().enumerate().map(|(i, m)| (m.clone(), i as u32)).collect();

        let coords_of = |p: &Polynomial<K>| -> SparseVec<K> {
            let mut v: Vec<(u32, K)> =
                p.terms().iter().map(|(m, c)| (index[m], c.clone())).collect();
            v.sort_by_key(|&(i, _)| i);
            v
        };

        let mut table = vec![Vec::new(); dim * dim];
        for i in 0..dim {
            for j in i..dim {
                let prod = basis[i].mul(&basis[j]);
                let coords = match index.get(&prod) {
                    Some(&t) => vec![(t, K::one())],
                    None => {
                        let nf = normal_form(&Polynomial::monomial(prod), &gb);
                        coords_of(&nf)
                    }
                };
                table[i * dim + j] = coords.clone();
                table[j * dim + i] = coords;
            }
        }

        let mut var_mult = Vec::with_capacity(nvars);
        for v in 0..nvars {
            let xv = normal_form(&Polynomial::monomial(Monomial::var(v, nvars)), &gb);
            let xv = coords_of(&xv);
            let mut acc = DenseAcc::new(dim);
            let cols = (0..dim)
                .map(|j| {
                    for (i, c) in &xv {
                        for (t, w) in &table[*i as usize * dim + j] {
                            acc.add(*t, c.clone() * w.clone());
                        }
                    }
                    acc.drain()
                })
                .collect();
            var_mult.push(Matrix::from_columns(dim, cols));
        }

        // Powers of the maximal ideal by iterated multiplication; failure to
        // reach zero means the ideal is not m-primary.
        let full = Subspace::from_spanning(
            dim,
            (0..dim as u32).map(|i| vec![(i, K::one())]),
        );
        let m1 = Subspace::from_spanning(
            dim,
            (1..dim as u32).map(|i| vec![(i, K::one())]),
        );
        let mut powers = vec![full, m1];
        loop {
            let prev = powers.last().unwrap();
            if prev.dim() == 0 {
                break;
            }
            let next = Subspace::from_spanning(
                dim,
                prev.basis().iter().flat_map(|row| {
                    var_mult.iter().map(move |a| a.apply(row))
                }),
            );
            if next.dim() == prev.dim() {
                return Err(Error::NotLocal);
            }
            powers.push(next);
        }
        let nil_index = powers.len() - 1;
        let hilbert: Vec<usize> =
            (0..nil_index).map(|d| powers[d].dim() - powers[d + 1].dim()).collect();

        let stacked = stack_actions(&var_mult);
        let socle_cols = stacked.kernel_basis();
        let socle = Subspace::from_spanning(
            dim,
            socle_cols.columns().cloned(),
        );

        let graded = generators.iter().all(Polynomial::is_homogeneous);
        let profile = AlgebraProfile {
            dim,
            embedding_dim: hilbert.get(1).copied().unwrap_or(0),
            socle_dim: socle.dim(),
            m2_dim: powers.get(2).map_or(0, Subspace::dim),
            nil_index,
            hilbert,
        };
        let degrees = basis.iter().map(Monomial::degree).collect();

        Ok(Arc::new(ArtinAlgebra {
            vars,
            order,
            gb,
            input_gens: generators,
            basis,
            degrees,
            graded,
            profile,
            index,
            table,
            var_mult,
            powers,
            socle,
        }))
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// Multiplication table entry: basis_i * basis_j in basis coordinates.
    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec<K> {
        &self.table[i * self.dim() + j]
    }

    /// Multiplication-by-x_v matrix.
    pub fn var_action(&self, v: usize) -> &Matrix<K> {
        &self.var_mult[v]
    }

    pub fn var_actions(&self) -> &[Matrix<K>] {
        &self.var_mult
    }

    /// Coordinates of the image of a polynomial.
    pub fn element(&self, p: &Polynomial<K>) -> SparseVec<K> {
        let nf = normal_form(p, &self.gb);
        let mut v: Vec<(u32, K)> =
            nf.terms().iter().map(|(m, c)| (self.index[m], c.clone())).collect();
        v.sort_by_key(|&(i, _)| i);
        v
    }

    /// Position of a standard monomial in the basis.
    pub fn basis_index(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).map(|&i| i as usize)
    }

    pub fn one_elem(&self) -> SparseVec<K> {
        vec![(0, K::one())]
    }

    /// Product of two elements in basis coordinates.
    pub fn mul_elems(&self, a: &SparseVec<K>, b: &SparseVec<K>) -> SparseVec<K> {
        let mut acc = DenseAcc::new(self.dim());
        self.mul_elems_into(a, b, &mut acc);
        acc.drain()
    }

    pub fn mul_elems_into(&self, a: &SparseVec<K>, b: &SparseVec<K>, acc: &mut DenseAcc<K>) {
        let dim = self.dim();
        for (i, x) in a {
            for (j, y) in b {
                let xy = x.clone() * y.clone();
                for (t, w) in &self.table[*i as usize * dim + *j as usize] {
                    acc.add(*t, xy.clone() * w.clone());
                }
            }
        }
    }

    /// Product of an element with a basis monomial, accumulated into `acc`
    /// with row indices offset by `offset`.
    pub fn mul_elem_basis_into(
        &self,
        a: &SparseVec<K>,
        j: usize,
        offset: u32,
        acc: &mut DenseAcc<K>,
    ) {
        let dim = self.dim();
        for (i, x) in a {
            for (t, w) in &self.table[*i as usize * dim + j] {
                acc.add(offset + *t, x.clone() * w.clone());
            }
        }
    }

    /// Basis of m^t; t beyond the nilpotency index gives the zero subspace.
    pub fn maximal_ideal_power(&self, t: usize) -> &Subspace<K> {
        let t = t.min(self.powers.len() - 1);
        &self.powers[t]
    }

    /// ann(m) = { r : m r = 0 }.
    pub fn socle(&self) -> &Subspace<K> {
        &self.socle
    }

    /// For Artinian local rings: one-dimensional socle.
    pub fn is_gorenstein(&self) -> bool {
        self.profile.socle_dim == 1
    }

    /// Render an element on the monomial basis.
    pub fn render_elem(&self, v: &SparseVec<K>) -> String {
        if v.is_empty() {
            return "0".to_string();
        }
        v.iter()
            .map(|(i, c)| {
                let m = self.basis[*i as usize].render(&self.vars);
                if self.basis[*i as usize].is_one() {
                    format!("{c}")
                } else if c.is_one() {
                    m
                } else {
                    format!("{c}*{m}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// The local tensor product R (x)_k S, presented as the quotient by the
    /// union of the two ideals in the disjoint union of the variables.
    /// Colliding names from the right factor get a `_2` suffix.
    pub fn local_tensor(r1: &Self, r2: &Self, caps: Caps) -> Result<Arc<Self>> {
        if r1.dim() * r2.dim() > caps.dim_cap {
            return Err(Error::SizeCap {
                detail: format!(
                    "tensor dimension {} exceeds cap {}",
                    r1.dim() * r2.dim(),
                    caps.dim_cap
                ),
            });
        }
        let mut vars = r1.vars.clone();
        for name in &r2.vars {
            let mut candidate = name.clone();
            while vars.contains(&candidate) {
                candidate.push_str("_2");
            }
            vars.push(candidate);
        }
        let (n1, n2) = (r1.nvars(), r2.nvars());
        let widen = |p: &Polynomial<K>, left: bool| -> Polynomial<K> {
            let terms = p
                .terms()
                .iter()
                .map(|(m, c)| {
                    let mut e = vec![0u16; n1 + n2];
                    for (i, &x) in m.exponents().iter().enumerate() {
                        e[if left { i } else { n1 + i }] = x;
                    }
                    (Monomial::new(e), c.clone())
                })
                .collect();
            Polynomial::from_terms(terms, r1.order)
        };
        let mut gens: Vec<Polynomial<K>> =
            r1.input_gens.iter().map(|p| widen(p, true)).collect();
        gens.extend(r2.input_gens.iter().map(|p| widen(p, false)));
        ArtinAlgebra::from_quotient(vars, gens, r1.order, caps)
    }
}

/// Stack action matrices vertically: the kernel of the result is the common
/// kernel (used for socles).
pub fn stack_actions<K: Field>(actions: &[Matrix<K>]) -> Matrix<K> {
    let Some(first) = actions.first() else {
        return Matrix::zero(0, 0);
    };
    let cols = first.cols();
    let rows: usize = actions.iter().map(Matrix::rows).sum();
    let mut data: Vec<SparseVec<K>> = vec![Vec::new(); cols];
    let mut offset = 0u32;
    for a in actions {
        assert_eq!(a.cols(), cols);
        for (c, col) in a.columns().enumerate() {
            for (r, x) in col {
                data[c].push((offset + r, x.clone()));
            }
        }
        offset += a.rows() as u32;
    }
    for col in &mut data {
        col.sort_by_key(|&(i, _)| i);
    }
    Matrix::from_columns(rows, data)
}


#[cfg(test)]
mod exponent_cap_tests {
    use super::*;
    use crate::poly::Monomial;
    use crate::Rat;

    #[test]
    fn high_power_principal_quotient() {
        // Table products reach x^398 internally; only the input is capped.
        let r: std::sync::Arc<ArtinAlgebra<Rat>> = ArtinAlgebra::from_quotient(
            vec!["x".into()],
            vec![Polynomial::monomial(Monomial::new(vec![200]))],
            MonomialOrder::DegRevLex,
            Caps::default(),
        )
        .unwrap();
        assert_eq!(r.profile.dim, 200);
        assert!(r.is_gorenstein());
        assert_eq!(r.profile.nil_index, 200);
    }

    #[test]
    fn input_cap_enforced() {
        match ArtinAlgebra::<Rat>::from_quotient(
            vec!["x".into()],
            vec![Polynomial::monomial(Monomial::new(vec![300]))],
            MonomialOrder::DegRevLex,
            Caps::default(),
        ) {
            Err(Error::SizeCap { detail }) => assert!(detail.contains("input cap")),
            other => panic!("expected SizeCap, got {:?}", other.map(|r| r.profile.clone())),
        }
    }
}

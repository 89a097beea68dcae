//! Minimal free resolutions by iterated syzygy computation, Betti numbers,
//! Tor and Ext dimensions, the linear-resolution predicate, and the bounded
//! G-dimension-zero certificate.

use std::sync::Arc;

use crate::algebra::ArtinAlgebra;
use crate::error::Result;
use crate::linalg::{Budget, DenseAcc, Echelon, Matrix, Outcome, SparseVec};
use crate::module::{
    hom_module_with_maps, regular_module, select_minimal_generators, submodule_of_free,
    PresentedModule, RMatrix,
};
use crate::scalar::Field;

/// An incrementally extended minimal free resolution. `betti[i]` is the rank
/// of the i-th free module; `differentials[i]` is d_{i+1}. When `complete`,
/// the last computed kernel was zero and the module has finite projective
/// dimension (hence is free over an Artinian ring after minimization).
pub struct Resolution<K: Field> {
    pub module: Arc<PresentedModule<K>>,
    pub differentials: Vec<RMatrix<K>>,
    pub betti: Vec<usize>,
    pub complete: bool,
}

impl<K: Field> Resolution<K> {
    pub fn new(module: Arc<PresentedModule<K>>) -> Self {
        let b0 = module.b0();
        let b1 = module.b1();
        if b1 == 0 {
            Resolution { module, differentials: Vec::new(), betti: vec![b0], complete: true }
        } else {
            let d1 = module.presentation.clone();
            Resolution { module, differentials: vec![d1], betti: vec![b0, b1], complete: false }
        }
    }

    pub fn ring(&self) -> &Arc<ArtinAlgebra<K>> {
        self.module.ring()
    }

    /// Extend so that betti[0..=steps] are computed (or the resolution
    /// terminates earlier).
    pub fn extend_to(&mut self, steps: usize, budget: &Budget) -> Result<()> {
        while self.betti.len() <= steps && !self.complete {
            let last = self.differentials.last().expect("incomplete resolution has a last map");
            let next = syzygy_step(self.ring(), last, budget)?;
            if next.cols == 0 {
                self.complete = true;
            } else {
                self.betti.push(next.cols);
                self.differentials.push(next);
            }
        }
        Ok(())
    }

    /// Betti numbers b_0..b_steps, padding zeros after termination.
    pub fn betti_padded(&self, steps: usize) -> Vec<u64> {
        (0..=steps).map(|i| self.betti.get(i).copied().unwrap_or(0) as u64).collect()
    }

    /// dim_k Tor_i(M, N) for i = 0..=max_i, computed as the homology of the
    /// minimal resolution of M tensored with N.
    pub fn tor_dims(&mut self, n: &PresentedModule<K>, max_i: usize, budget: &Budget) -> Result<Vec<usize>> {
        assert!(Arc::ptr_eq(self.ring(), n.ring()), "modules over the same ring");
        self.extend_to(max_i + 1, budget)?;
        let qn = n.space.dim;
        let mut ranks = vec![0usize; max_i + 2]; // ranks[i] = rank(T_i), T_0 unused
        for i in 1..=max_i + 1 {
            let Some(d) = self.differentials.get(i - 1) else { break };
            let rows = qn * d.rows;
            let mut ech: Echelon<K> = Echelon::new(rows);
            let mut acc = DenseAcc::new(rows);
            for j in 0..d.cols {
                for w in 0..qn {
                    for (row, e) in d.column(j) {
                        n.space.act_elem_col(e, w, *row * qn as u32, &mut acc);
                    }
                    let col = acc.drain();
                    ech.add(&col, budget)?;
                }
            }
            ranks[i] = ech.rank();
        }
        let b = |i: usize| self.betti.get(i).copied().unwrap_or(0);
        let mut out = Vec::with_capacity(max_i + 1);
        out.push(qn * b(0) - ranks[1]);
        for i in 1..=max_i {
            out.push(qn * b(i) - ranks[i] - ranks[i + 1]);
        }
        Ok(out)
    }

    /// dim_k Ext^i(M, N) for i = 0..=max_i via Hom(resolution of M, N).
    pub fn ext_dims(&mut self, n: &PresentedModule<K>, max_i: usize, budget: &Budget) -> Result<Vec<usize>> {
        assert!(Arc::ptr_eq(self.ring(), n.ring()), "modules over the same ring");
        self.extend_to(max_i + 1, budget)?;
        let qn = n.space.dim;
        let mut ranks = vec![0usize; max_i + 2];
        for i in 1..=max_i + 1 {
            let Some(d) = self.differentials.get(i - 1) else { break };
            // Delta_i : N^{b_{i-1}} -> N^{b_i}, block (c, r) = action of d[r][c].
            let mut by_row: Vec<Vec<(usize, &SparseVec<K>)>> = vec![Vec::new(); d.rows];
            for c in 0..d.cols {
                for (r, e) in d.column(c) {
                    by_row[*r as usize].push((c, e));
                }
            }
            let rows = qn * d.cols;
            let mut ech: Echelon<K> = Echelon::new(rows);
            let mut acc = DenseAcc::new(rows);
            for r in 0..d.rows {
                for w in 0..qn {
                    for (c, e) in &by_row[r] {
                        n.space.act_elem_col(e, w, (*c * qn) as u32, &mut acc);
                    }
                    let col = acc.drain();
                    ech.add(&col, budget)?;
                }
            }
            ranks[i] = ech.rank();
        }
        let b = |i: usize| self.betti.get(i).copied().unwrap_or(0);
        let mut out = Vec::with_capacity(max_i + 1);
        out.push(qn * b(0) - ranks[1]);
        for i in 1..=max_i {
            out.push(qn * b(i) - ranks[i + 1] - ranks[i]);
        }
        Ok(out)
    }

    /// The j-th syzygy module Syz_j = im(d_j) as a presented module;
    /// `None` when it is zero (resolution terminated before step j).
    pub fn syzygy_module(&mut self, j: usize, budget: &Budget) -> Result<Option<Arc<PresentedModule<K>>>> {
        assert!(j >= 1);
        self.extend_to(j, budget)?;
        let Some(d) = self.differentials.get(j - 1) else {
            return Ok(None);
        };
        let dim = self.ring().dim() as u32;
        let vectors: Vec<SparseVec<K>> = (0..d.cols)
            .map(|c| {
                let mut flat: SparseVec<K> = Vec::new();
                for (row, e) in d.column(c) {
                    for (i, x) in e {
                        flat.push((*row * dim + i, x.clone()));
                    }
                }
                flat.sort_by_key(|&(i, _)| i);
                flat
            })
            .collect();
        submodule_of_free(self.ring().clone(), d.rows, vectors, budget).map(Some)
    }
}

/// One syzygy step: the canonical k-kernel of the expanded differential,
/// followed by selection of the kernel vectors whose classes form the rref
/// pivot basis of K/mK.
fn syzygy_step<K: Field>(
    ring: &Arc<ArtinAlgebra<K>>,
    d: &RMatrix<K>,
    budget: &Budget,
) -> Result<RMatrix<K>> {
    let dim = ring.dim();
    let nrows = d.rows * dim;
    let ncols = d.cols * dim;
    let mut ech = Echelon::with_tracking(nrows, ncols);
    let mut kernel: Vec<SparseVec<K>> = Vec::new();
    let mut acc = DenseAcc::new(nrows);
    for j in 0..d.cols {
        for m in 0..dim {
            d.expand_column_into(ring, j, m, &mut acc);
            let col = acc.drain();
            match ech.add(&col, budget)? {
                Outcome::Dependent(Some(t)) => kernel.push(t),
                Outcome::Dependent(None) => unreachable!("tracking enabled"),
                Outcome::Pivot(_) => {}
            }
        }
    }
    drop(ech);
    select_minimal_generators(ring, d.cols, &kernel, budget)
}

/// Largest t such that the induced maps F_i/mF_i -> mF_{i-1}/m^2 F_{i-1} are
/// injective for every computed step i <= t (so t = computed length means
/// "linear as far as computed"; a free module is vacuously linear).
pub fn linear_to<K: Field>(res: &Resolution<K>) -> usize {
    let ring = res.ring();
    let m2 = ring.maximal_ideal_power(2);
    let free = m2.free_coords();
    debug_assert_eq!(free.first(), Some(&0));
    let pos_of: std::collections::BTreeMap<u32, usize> =
        free.iter().skip(1).enumerate().map(|(p, &c)| (c, p)).collect();
    let e = pos_of.len();
    let budget = Budget::unlimited();
    for (idx, d) in res.differentials.iter().enumerate() {
        let rows = e * d.rows;
        let mut ech: Echelon<K> = Echelon::new(rows);
        let mut ok = true;
        for c in 0..d.cols {
            let mut col: SparseVec<K> = Vec::new();
            for (row, entry) in d.column(c) {
                let class = m2.reduce(entry);
                for (i, x) in class {
                    let p = pos_of[&i];
                    col.push((*row * e as u32 + p as u32, x));
                }
            }
            col.sort_by_key(|&(i, _)| i);
            if let Outcome::Dependent(_) = ech.add(&col, &budget).expect("unlimited") {
                ok = false;
                break;
            }
        }
        if !ok {
            return idx;
        }
    }
    res.differentials.len()
}

pub fn is_linear_resolution<K: Field>(res: &Resolution<K>) -> bool {
    linear_to(res) == res.differentials.len()
}

/// Bounded G-dimension-zero certificate: reflexivity of the natural map
/// M -> Hom(Hom(M,R),R) plus Ext vanishing windows for M and M^*.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct GdimZeroReport {
    pub reflexive: bool,
    pub ext_m_vanish_to: usize,
    pub ext_mstar_vanish_to: usize,
    pub depth: usize,
}

impl GdimZeroReport {
    pub fn passes(&self) -> bool {
        self.reflexive
            && self.ext_m_vanish_to == self.depth
            && self.ext_mstar_vanish_to == self.depth
    }
}

fn vanish_prefix(dims: &[usize]) -> usize {
    // dims[0] is degree 0 and never part of the window.
    dims.iter().skip(1).take_while(|&&d| d == 0).count()
}

pub fn gdim_zero_certificate<K: Field>(
    m: &Arc<PresentedModule<K>>,
    depth: usize,
    budget: &Budget,
) -> Result<GdimZeroReport> {
    assert!(depth >= 1);
    let ring = m.ring().clone();
    let reg = regular_module(ring.clone(), budget)?;
    let (mstar, star_maps, _) = hom_module_with_maps(m, &reg, budget)?;
    let (mdstar, _, dd_sub) = hom_module_with_maps(&mstar, &reg, budget)?;
    let qm = m.space.dim;
    let qr = ring.dim();
    // ev(e_j) in Hom_k(M^*, R): flat index t*qr + a for Phi_t(e_j) = column j
    // of the t-th basis map.
    let mut ev_cols: Vec<SparseVec<K>> = Vec::with_capacity(qm);
    for j in 0..qm {
        let mut flat: SparseVec<K> = Vec::new();
        for (t, phi) in star_maps.iter().enumerate() {
            for (a, x) in phi.column(j) {
                flat.push(((t * qr) as u32 + a, x.clone()));
            }
        }
        flat.sort_by_key(|&(i, _)| i);
        let coords = dd_sub.coordinates(&flat).expect("evaluation map is R-linear");
        ev_cols.push(
            coords
                .into_iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i as u32, x))
                .collect(),
        );
    }
    let ev = Matrix::from_columns(mdstar.space.dim, ev_cols);
    let reflexive = mdstar.space.dim == qm && ev.rank() == qm;

    let mut res_m = Resolution::new(m.clone());
    let ext_m = res_m.ext_dims(&reg, depth, budget)?;
    let mut res_star = Resolution::new(mstar);
    let ext_star = res_star.ext_dims(&reg, depth, budget)?;
    Ok(GdimZeroReport {
        reflexive,
        ext_m_vanish_to: vanish_prefix(&ext_m),
        ext_mstar_vanish_to: vanish_prefix(&ext_star),
        depth,
    })
}

/// Homological invariant suite for a computed resolution: d∘d = 0, interior
/// homology zero, minimality (entries in m), and agreement of the Betti
/// numbers with dim Tor_i(M,k) and dim Ext^i(M,k).
pub fn verify_resolution<K: Field>(
    res: &mut Resolution<K>,
    k_module: &PresentedModule<K>,
    max_i: usize,
    budget: &Budget,
) -> std::result::Result<(), String> {
    let ring = res.ring().clone();
    let t = res.differentials.len().min(max_i);
    for d in &res.differentials[..t] {
        if !d.entries_in_m() {
            return Err("differential entry outside the maximal ideal".to_string());
        }
    }
    for i in 0..t.saturating_sub(1) {
        let composed = res.differentials[i].compose(&res.differentials[i + 1], &ring);
        if !composed.is_zero() {
            return Err(format!("d_{} . d_{} != 0", i + 1, i + 2));
        }
    }
    // Interior exactness: nullity of the expanded d_i equals the rank of the
    // expanded d_{i+1}.
    for i in 0..t.saturating_sub(1) {
        let di = res.differentials[i].expand(&ring);
        let di1 = res.differentials[i + 1].expand(&ring);
        let nullity = di.cols() - di.rank();
        if nullity != di1.rank() {
            return Err(format!(
                "homology at step {} has dimension {}",
                i + 1,
                nullity - di1.rank()
            ));
        }
    }
    let check = res.betti_padded(t);
    let tor = res.tor_dims(k_module, t, budget).map_err(|e| e.to_string())?;
    let ext = res.ext_dims(k_module, t, budget).map_err(|e| e.to_string())?;
    let tor_u: Vec<u64> = tor.iter().map(|&x| x as u64).collect();
    let ext_u: Vec<u64> = ext.iter().map(|&x| x as u64).collect();
    if check != tor_u {
        return Err(format!("betti {check:?} != Tor(M,k) {tor_u:?}"));
    }
    if check != ext_u {
        return Err(format!("betti {check:?} != Ext(M,k) {ext_u:?}"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Caps;
    use crate::module::{canonical_module, cyclic_module, ideal_submodule, residue_field};
    use crate::poly::{Monomial, MonomialOrder, Polynomial};
    use crate::F32003;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn mpoly(e: &[u16]) -> Polynomial<F32003> {
        Polynomial::monomial(Monomial::new(e.to_vec()))
    }

    fn ring_xyz() -> Arc<ArtinAlgebra<F32003>> {
        ArtinAlgebra::from_quotient(
            names(&["x", "y", "z"]),
            vec![mpoly(&[2, 0, 0]), mpoly(&[1, 1, 0]), mpoly(&[0, 2, 0]), mpoly(&[0, 0, 2])],
            MonomialOrder::DegRevLex,
            Caps::default(),
        )
        .unwrap()
    }

    fn ring_a() -> Arc<ArtinAlgebra<F32003>> {
        ArtinAlgebra::from_quotient(
            names(&["a", "b"]),
            vec![mpoly(&[2, 0]), mpoly(&[1, 1]), mpoly(&[0, 2])],
            MonomialOrder::DegRevLex,
            Caps::default(),
        )
        .unwrap()
    }

    fn ring_b3() -> Arc<ArtinAlgebra<F32003>> {
        let mut gens = vec![
            Polynomial::from_terms(
                vec![
                    (Monomial::new(vec![2, 0, 0]), F32003::new(1)),
                    (Monomial::new(vec![0, 2, 0]), F32003::new(-1)),
                ],
                MonomialOrder::DegRevLex,
            ),
            Polynomial::from_terms(
                vec![
                    (Monomial::new(vec![0, 2, 0]), F32003::new(1)),
                    (Monomial::new(vec![0, 0, 2]), F32003::new(-1)),
                ],
                MonomialOrder::DegRevLex,
            ),
        ];
        gens.push(mpoly(&[1, 1, 0]));
        gens.push(mpoly(&[1, 0, 1]));
        gens.push(mpoly(&[0, 1, 1]));
        ArtinAlgebra::from_quotient(
            names(&["x1", "x2", "x3"]),
            gens,
            MonomialOrder::DegRevLex,
            Caps::default(),
        )
        .unwrap()
    }

    #[test]
    fn omega_betti_doubles() {
        // b_i(omega) = 2, 3, 6, 12, ... over k[x,y,z]/(x^2,xy,y^2,z^2).
        let budget = Budget::unlimited();
        let r = ring_xyz();
        let w = canonical_module(r, &budget).unwrap();
        let mut res = Resolution::new(w);
        res.extend_to(5, &budget).unwrap();
        assert_eq!(res.betti, vec![2, 3, 6, 12, 24, 48]);
    }

    #[test]
    fn k_betti_over_b3_matches_series() {
        // 1/(1 - 3t + t^2): 1, 3, 8, 21, 55, 144, 377.
        let budget = Budget::unlimited();
        let r = ring_b3();
        let k = residue_field(r, &budget).unwrap();
        let mut res = Resolution::new(k);
        res.extend_to(6, &budget).unwrap();
        assert_eq!(res.betti, vec![1, 3, 8, 21, 55, 144, 377]);
    }

    #[test]
    fn free_module_resolution_terminates() {
        let budget = Budget::unlimited();
        let r = ring_b3();
        let w = canonical_module(r, &budget).unwrap();
        let mut res = Resolution::new(w);
        res.extend_to(10, &budget).unwrap();
        assert!(res.complete);
        assert_eq!(res.betti, vec![1]);
        assert_eq!(res.betti_padded(4), vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn tor_vanishing_split_powers() {
        // Tor_i(R/x, R/y) = 0 for i > 0 over k[x,y]/(x^3,y^3); Tor_0 = 1.
        let budget = Budget::unlimited();
        let r: Arc<ArtinAlgebra<F32003>> = ArtinAlgebra::from_quotient(
            names(&["x", "y"]),
            vec![mpoly(&[3, 0]), mpoly(&[0, 3])],
            MonomialOrder::DegRevLex,
            Caps::default(),
        )
        .unwrap();
        let m = cyclic_module(r.clone(), &[mpoly(&[1, 0])], &budget).unwrap();
        let n = cyclic_module(r.clone(), &[mpoly(&[0, 1])], &budget).unwrap();
        let mut res = Resolution::new(m);
        let tor = res.tor_dims(&n, 6, &budget).unwrap();
        assert_eq!(tor, vec![1, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn tor_of_k_gives_betti() {
        let budget = Budget::unlimited();
        let r = ring_a();
        let k = residue_field(r.clone(), &budget).unwrap();
        let w = canonical_module(r, &budget).unwrap();
        let mut res = Resolution::new(w);
        let tor = res.tor_dims(&k, 4, &budget).unwrap();
        assert_eq!(tor, vec![2, 3, 6, 12, 24]);
        let ext = res.ext_dims(&k, 4, &budget).unwrap();
        assert_eq!(ext, vec![2, 3, 6, 12, 24]);
    }

    #[test]
    fn ext_tor_vanishing_for_ideal_z() {
        // Ext^i(M, R) = 0 and Tor_i(M, omega) = 0 for M = (z), i >= 1.
        let budget = Budget::unlimited();
        let r = ring_xyz();
        let m = ideal_submodule(r.clone(), &[mpoly(&[0, 0, 1])], &budget).unwrap();
        let reg = regular_module(r.clone(), &budget).unwrap();
        let w = canonical_module(r, &budget).unwrap();
        let mut res = Resolution::new(m);
        let ext = res.ext_dims(&reg, 6, &budget).unwrap();
        assert_eq!(&ext[1..], &[0, 0, 0, 0, 0, 0]);
        let tor = res.tor_dims(&w, 6, &budget).unwrap();
        assert_eq!(&tor[1..], &[0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn ext_zero_is_hom() {
        let budget = Budget::unlimited();
        let r = ring_xyz();
        let reg = regular_module(r.clone(), &budget).unwrap();
        let m = ideal_submodule(r.clone(), &[mpoly(&[0, 0, 1])], &budget).unwrap();
        // Ext^0(R, M) = Hom(R, M) = M.
        let mut res = Resolution::new(reg.clone());
        let ext = res.ext_dims(&m, 3, &budget).unwrap();
        assert_eq!(ext, vec![m.length(), 0, 0, 0]);
    }

    #[test]
    fn gorenstein_self_injectivity() {
        // Ext^i(k, B) = 0 for 1 <= i <= 6 and Ext^0 has dimension 1.
        let budget = Budget::unlimited();
        let r = ring_b3();
        let k = residue_field(r.clone(), &budget).unwrap();
        let reg = regular_module(r, &budget).unwrap();
        let mut res = Resolution::new(k);
        let ext = res.ext_dims(&reg, 6, &budget).unwrap();
        assert_eq!(ext, vec![1, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn linearity_examples() {
        let budget = Budget::unlimited();
        // k over k[a,b]/(a^2,ab,b^2) has a linear resolution.
        let r = ring_a();
        let k = residue_field(r.clone(), &budget).unwrap();
        let mut res = Resolution::new(k);
        res.extend_to(5, &budget).unwrap();
        assert!(is_linear_resolution(&res));
        // A free module is vacuously linear.
        let b = ring_b3();
        let w = canonical_module(b, &budget).unwrap();
        let mut resw = Resolution::new(w);
        resw.extend_to(3, &budget).unwrap();
        assert!(is_linear_resolution(&resw));
        // M = R/(x) over k[x,y,z]/(x^2,xy,y^2,z^2) is the identity-surjection
        // instance of the linear comparison setup.
        let r26 = ring_xyz();
        let m = cyclic_module(r26, &[mpoly(&[1, 0, 0])], &budget).unwrap();
        let mut resm = Resolution::new(m);
        resm.extend_to(5, &budget).unwrap();
        assert!(is_linear_resolution(&resm));
    }

    #[test]
    fn gdim_certificate_examples() {
        let budget = Budget::unlimited();
        // M = R: reflexive, all Ext vanish.
        let r = ring_xyz();
        let reg = regular_module(r.clone(), &budget).unwrap();
        let rep = gdim_zero_certificate(&reg, 4, &budget).unwrap();
        assert!(rep.passes());
        // omega over Gorenstein B: free, certificate passes.
        let b = ring_b3();
        let wb = canonical_module(b, &budget).unwrap();
        let rep = gdim_zero_certificate(&wb, 4, &budget).unwrap();
        assert!(rep.passes());
        // omega over the non-Gorenstein A: certificate fails.
        let a = ring_a();
        let wa = canonical_module(a, &budget).unwrap();
        let rep = gdim_zero_certificate(&wa, 4, &budget).unwrap();
        assert!(!rep.passes());
    }

    #[test]
    fn invariant_suite_on_sample_resolutions() {
        let budget = Budget::unlimited();
        let r = ring_xyz();
        let k = residue_field(r.clone(), &budget).unwrap();
        let w = canonical_module(r.clone(), &budget).unwrap();
        let mut res = Resolution::new(w);
        res.extend_to(5, &budget).unwrap();
        verify_resolution(&mut res, &k, 5, &budget).unwrap();
        let m = ideal_submodule(r, &[mpoly(&[0, 0, 1])], &budget).unwrap();
        let mut resm = Resolution::new(m);
        resm.extend_to(5, &budget).unwrap();
        verify_resolution(&mut resm, &k, 5, &budget).unwrap();
    }

    #[test]
    fn syzygy_module_generators_match_betti() {
        let budget = Budget::unlimited();
        let r = ring_xyz();
        let w = canonical_module(r, &budget).unwrap();
        let mut res = Resolution::new(w);
        res.extend_to(3, &budget).unwrap();
        let syz1 = res.syzygy_module(1, &budget).unwrap().unwrap();
        assert_eq!(syz1.b0(), res.betti[1]);
        let syz2 = res.syzygy_module(2, &budget).unwrap().unwrap();
        assert_eq!(syz2.b0(), res.betti[2]);
    }
}

#[cfg(test)]
mod bench_heavy {
    use super::*;
    use crate::algebra::Caps;
    use crate::module::residue_field;
    use crate::poly::{Monomial, MonomialOrder, Polynomial};
    use crate::F32003;

    fn ring_b(e: usize) -> Arc<ArtinAlgebra<F32003>> {
        let mut gens: Vec<Polynomial<F32003>> = Vec::new();
        for i in 0..e - 1 {
            let mut a = vec![0u16; e];
            a[i] = 2;
            let mut b = vec![0u16; e];
            b[i + 1] = 2;
            gens.push(Polynomial::from_terms(
                vec![(Monomial::new(a), F32003::new(1)), (Monomial::new(b), F32003::new(-1))],
                MonomialOrder::DegRevLex,
            ));
        }
        for j in 0..e {
            for l in j + 1..e {
                let mut m = vec![0u16; e];
                m[j] = 1;
                m[l] = 1;
                gens.push(Polynomial::monomial(Monomial::new(m)));
            }
        }
        ArtinAlgebra::from_quotient(
            (0..e).map(|i| format!("x{}", i + 1)).collect(),
            gens,
            MonomialOrder::DegRevLex,
            Caps::default(),
        )
        .unwrap()
    }

    #[test]
    #[ignore = "manual benchmark"]
    fn bench_b3_k_to_10() {
        let budget = Budget::unlimited();
        let r = ring_b(3);
        let k = residue_field(r, &budget).unwrap();
        let mut res = Resolution::new(k);
        let t0 = std::time::Instant::now();
        res.extend_to(10, &budget).unwrap();
        eprintln!("b3 k betti to 10: {:?} in {:?}, ops {}", res.betti, t0.elapsed(), budget.used());
        assert_eq!(res.betti[10], 17711);
    }

    #[test]
    #[ignore = "manual benchmark"]
    fn bench_xyz_quadrics_omega_to_10() {
        use crate::module::canonical_module;
        let budget = Budget::unlimited();
        let r: Arc<ArtinAlgebra<F32003>> = ArtinAlgebra::from_quotient(
            vec!["x".into(), "y".into(), "z".into()],
            vec![
                Polynomial::monomial(Monomial::new(vec![2, 0, 0])),
                Polynomial::monomial(Monomial::new(vec![1, 1, 0])),
                Polynomial::monomial(Monomial::new(vec![0, 2, 0])),
                Polynomial::monomial(Monomial::new(vec![0, 0, 2])),
            ],
            MonomialOrder::DegRevLex,
            Caps::default(),
        )
        .unwrap();
        let w = canonical_module(r, &budget).unwrap();
        let mut res = Resolution::new(w);
        let t0 = std::time::Instant::now();
        res.extend_to(10, &budget).unwrap();
        eprintln!("xyz omega betti to 10: {:?} in {:?}, ops {}", res.betti, t0.elapsed(), budget.used());
        assert_eq!(res.betti, vec![2, 3, 6, 12, 24, 48, 96, 192, 384, 768, 1536]);
    }

    #[test]
    #[ignore = "manual benchmark"]
    fn bench_tensor_k_to_8() {
        use crate::module::residue_field;
        let budget = Budget::unlimited();
        let a: Arc<ArtinAlgebra<F32003>> = ArtinAlgebra::from_quotient(
            vec!["a".into(), "b".into()],
            vec![
                Polynomial::monomial(Monomial::new(vec![2, 0])),
                Polynomial::monomial(Monomial::new(vec![1, 1])),
                Polynomial::monomial(Monomial::new(vec![0, 2])),
            ],
            MonomialOrder::DegRevLex,
            Caps::default(),
        )
        .unwrap();
        let b = ring_b(3);
        let t = ArtinAlgebra::local_tensor(&a, &b, Caps::default()).unwrap();
        let k = residue_field(t, &budget).unwrap();
        let mut res = Resolution::new(k);
        let t0 = std::time::Instant::now();
        res.extend_to(8, &budget).unwrap();
        eprintln!("tensor k betti to 8: {:?} in {:?}, ops {}", res.betti, t0.elapsed(), budget.used());
        assert_eq!(res.betti, vec![1, 5, 18, 57, 169, 482, 1341, 3669, 9922]);
    }

    #[test]
    #[ignore = "manual benchmark"]
    fn bench_b4_k_to_10() {
        let budget = Budget::unlimited();
        let r = ring_b(4);
        let k = residue_field(r, &budget).unwrap();
        let mut res = Resolution::new(k);
        let t0 = std::time::Instant::now();
        res.extend_to(10, &budget).unwrap();
        eprintln!("b4 k betti to 10: {:?} in {:?}, ops {}", res.betti, t0.elapsed(), budget.used());
        assert_eq!(res.betti[10], 564719);
    }
}

//! Finitely generated modules over an Artinian algebra: concrete k-space
//! realizations with variable actions, minimal presentations, matrices over
//! R, Matlis duality, and Hom modules.

use std::collections::VecDeque;
use std::sync::{Arc, Mutex};

use crate::algebra::{stack_actions, ArtinAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{Budget, DenseAcc, Echelon, Matrix, Outcome, QuotientSpace, SparseVec, Subspace};
use crate::poly::Polynomial;
use crate::scalar::Field;

/// A finite-length module presented concretely: a k-space of dimension `dim`
/// with one action matrix per ring variable. The action of an arbitrary ring
/// element is assembled from memoized basis-monomial actions.
pub struct KModule<K: Field> {
    pub ring: Arc<ArtinAlgebra<K>>,
    pub dim: usize,
    pub actions: Vec<Matrix<K>>,
    monomial_actions: Mutex<std::collections::BTreeMap<usize, Arc<Matrix<K>>>>,
}

impl<K: Field> KModule<K> {
    pub fn new(ring: Arc<ArtinAlgebra<K>>, dim: usize, actions: Vec<Matrix<K>>) -> Self {
        assert_eq!(actions.len(), ring.nvars());
        for a in &actions {
            assert_eq!(a.rows(), dim);
            assert_eq!(a.cols(), dim);
        }
        KModule { ring, dim, actions, monomial_actions: Mutex::new(Default::default()) }
    }

    /// R as a module over itself.
    pub fn regular(ring: Arc<ArtinAlgebra<K>>) -> Self {
        let actions = ring.var_actions().to_vec();
        let dim = ring.dim();
        KModule::new(ring, dim, actions)
    }

    /// Hom_k(M, k) with the contragredient action: transposed matrices.
    pub fn dual(&self) -> KModule<K> {
        let actions = self.actions.iter().map(Matrix::transpose).collect();
        KModule::new(self.ring.clone(), self.dim, actions)
    }

    /// Action of the basis monomial with the given index.
    pub fn monomial_action(&self, idx: usize) -> Arc<Matrix<K>> {
        if idx == 0 {
            return Arc::new(Matrix::identity(self.dim));
        }
        if let Some(a) = self.monomial_actions.lock().unwrap().get(&idx) {
            return a.clone();
        }
        let m = &self.ring.basis[idx];
        let v = m.exponents().iter().position(|&e| e > 0).expect("non-unit monomial");
        let mut e = m.exponents().to_vec();
        e[v] -= 1;
        let parent = crate::poly::Monomial::new(e);
        let result = match self.ring.basis_index(&parent) {
            Some(pidx) => {
                let pa = self.monomial_action(pidx);
                Arc::new(self.actions[v].mul(&pa))
            }
            None => {
                // A divisor of a standard monomial is standard, so this
                // branch is unreachable for valid indices.
                unreachable!("divisor of a standard monomial must be standard")
            }
        };
        self.monomial_actions.lock().unwrap().insert(idx, result.clone());
        result
    }

    /// Apply the action of a ring element to a module element.
    pub fn act(&self, r: &SparseVec<K>, v: &SparseVec<K>) -> SparseVec<K> {
        let mut acc = DenseAcc::new(self.dim);
        for (m, c) in r {
            let a = self.monomial_action(*m as usize);
            for (row, x) in a.apply(v) {
                acc.add(row, c.clone() * x);
            }
        }
        acc.drain()
    }

    /// Accumulate `r . e_j` into `acc` at the given row offset.
    pub fn act_elem_col(&self, r: &SparseVec<K>, j: usize, offset: u32, acc: &mut DenseAcc<K>) {
        for (m, c) in r {
            let a = self.monomial_action(*m as usize);
            for (row, x) in a.column(j) {
                acc.add(offset + *row, c.clone() * x.clone());
            }
        }
    }

    /// m·M as a subspace: the sum of the images of the variable actions.
    pub fn radical(&self) -> Subspace<K> {
        Subspace::from_spanning(
            self.dim,
            self.actions.iter().flat_map(|a| a.columns().cloned()),
        )
    }

    /// m·W for a subspace W of the module.
    pub fn radical_of(&self, w: &Subspace<K>) -> Subspace<K> {
        Subspace::from_spanning(
            self.dim,
            w.basis().iter().flat_map(|row| self.actions.iter().map(move |a| a.apply(row))),
        )
    }

    /// dim Hom(k, M) = dim ann_M(m).
    pub fn socle_dim(&self) -> usize {
        if self.dim == 0 {
            return 0;
        }
        self.dim - stack_actions(&self.actions).rank()
    }
}

/// A matrix with entries in R (each entry a coordinate vector on the algebra
/// basis), stored column-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrix<K: Field> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Vec<(u32, SparseVec<K>)>>,
}

impl<K: Field> RMatrix<K> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RMatrix { rows, cols, data: vec![Vec::new(); cols] }
    }

    pub fn from_columns(rows: usize, columns: Vec<Vec<(u32, SparseVec<K>)>>) -> Self {
        let cols = columns.len();
        for col in &columns {
            debug_assert!(col.windows(2).all(|w| w[0].0 < w[1].0));
            debug_assert!(col.iter().all(|(r, _)| (*r as usize) < rows));
        }
        RMatrix { rows, cols, data: columns }
    }

    pub fn column(&self, c: usize) -> &[(u32, SparseVec<K>)] {
        &self.data[c]
    }

    pub fn entry(&self, r: usize, c: usize) -> Option<&SparseVec<K>> {
        self.data[c]
            .binary_search_by_key(&(r as u32), |&(i, _)| i)
            .ok()
            .map(|pos| &self.data[c][pos].1)
    }

    /// Every entry lies in m: no coordinate on the basis element 1.
    pub fn entries_in_m(&self) -> bool {
        self.data
            .iter()
            .flat_map(|col| col.iter())
            .all(|(_, e)| e.first().map(|&(i, _)| i != 0).unwrap_or(true))
    }

    /// Composition `self . other` over R.
    pub fn compose(&self, other: &RMatrix<K>, ring: &ArtinAlgebra<K>) -> RMatrix<K> {
        assert_eq!(self.cols, other.rows);
        let mut acc = DenseAcc::new(ring.dim() * self.rows);
        let columns = (0..other.cols)
            .map(|c| {
                for (r, e) in other.column(c) {
                    for (row, f) in self.column(*r as usize) {
                        let prod = ring.mul_elems(f, e);
                        for (i, x) in prod {
                            acc.add(*row * ring.dim() as u32 + i, x);
                        }
                    }
                }
                let flat = acc.drain();
                let mut col: Vec<(u32, SparseVec<K>)> = Vec::new();
                for (idx, x) in flat {
                    let row = idx / ring.dim() as u32;
                    let coord = idx % ring.dim() as u32;
                    match col.last_mut() {
                        Some((r, e)) if *r == row => e.push((coord, x)),
                        _ => col.push((row, vec![(coord, x)])),
                    }
                }
                col
            })
            .collect();
        RMatrix::from_columns(self.rows, columns)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    /// The k-linear expansion of column `j * dim + m` of the induced map
    /// R^cols -> R^rows, accumulated into `acc`.
    pub fn expand_column_into(
        &self,
        ring: &ArtinAlgebra<K>,
        j: usize,
        m: usize,
        acc: &mut DenseAcc<K>,
    ) {
        let dim = ring.dim() as u32;
        for (row, e) in self.column(j) {
            ring.mul_elem_basis_into(e, m, *row * dim, acc);
        }
    }

    /// Materialized k-expansion (rows*dim x cols*dim).
    pub fn expand(&self, ring: &ArtinAlgebra<K>) -> Matrix<K> {
        let dim = ring.dim();
        let mut acc = DenseAcc::new(self.rows * dim);
        let mut columns = Vec::with_capacity(self.cols * dim);
        for j in 0..self.cols {
            for m in 0..dim {
                self.expand_column_into(ring, j, m, &mut acc);
                columns.push(acc.drain());
            }
        }
        Matrix::from_columns(self.rows * dim, columns)
    }

    pub fn render(&self, ring: &ArtinAlgebra<K>) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| match self.entry(r, c) {
                        Some(e) => ring.render_elem(e),
                        None => "0".to_string(),
                    })
                    .collect()
            })
            .collect()
    }
}

/// Apply the block-diagonal action of variable `v` on R^b to an expanded
/// vector (coordinates j*dim + m).
fn block_var_apply<K: Field>(
    ring: &ArtinAlgebra<K>,
    v: usize,
    vec: &SparseVec<K>,
    acc: &mut DenseAcc<K>,
) -> SparseVec<K> {
    let dim = ring.dim() as u32;
    let action = ring.var_action(v);
    for (idx, x) in vec {
        let j = idx / dim;
        let m = idx % dim;
        for (t, w) in action.column(m as usize) {
            acc.add(j * dim + t, x.clone() * w.clone());
        }
    }
    acc.drain()
}

/// A module given by a minimal presentation R^b1 -> R^b0 together with its
/// concrete realization.
pub struct PresentedModule<K: Field> {
    pub space: KModule<K>,
    /// Minimal generators as elements of `space` (lifts of a basis of M/mM).
    pub gens: Vec<SparseVec<K>>,
    /// b0 x b1 matrix with entries in m: minimal generators of the first
    /// syzygy of `gens`.
    pub presentation: RMatrix<K>,
}

impl<K: Field> PresentedModule<K> {
    pub fn ring(&self) -> &Arc<ArtinAlgebra<K>> {
        &self.space.ring
    }

    pub fn b0(&self) -> usize {
        self.gens.len()
    }

    pub fn b1(&self) -> usize {
        self.presentation.cols
    }

    pub fn length(&self) -> usize {
        self.space.dim
    }

    pub fn is_free(&self) -> bool {
        self.b1() == 0
    }

    /// Minimal presentation of a concrete module: generators are the
    /// rref-pivot lifts of a basis of M/mM, relations the minimal generators
    /// of the kernel of R^b0 -> M.
    pub fn from_kmodule(space: KModule<K>, budget: &Budget) -> Result<Arc<Self>> {
        if space.dim == 0 {
            return Err(Error::ZeroModule);
        }
        let radical = space.radical();
        let quot = QuotientSpace::new(radical);
        let gens: Vec<SparseVec<K>> =
            (0..quot.dim()).map(|i| vec![(quot.rep(i), K::one())]).collect();
        let presentation = syzygy_of_generators(&space, &gens, budget)?;
        Ok(Arc::new(PresentedModule { space, gens, presentation }))
    }

    /// The image of a free-module element (coords j*dim + m) in the module.
    pub fn evaluate_free(&self, vec: &SparseVec<K>) -> SparseVec<K> {
        let dim = self.ring().dim() as u32;
        let mut acc = DenseAcc::new(self.space.dim);
        for (idx, x) in vec {
            let j = (idx / dim) as usize;
            let m = (idx % dim) as usize;
            let a = self.space.monomial_action(m);
            for (row, y) in a.apply(&self.gens[j]) {
                acc.add(row, x.clone() * y);
            }
        }
        acc.drain()
    }
}

/// Minimal generators of the kernel of R^{gens.len()} -> M, e_j -> gens[j],
/// as an RMatrix with entries in m.
fn syzygy_of_generators<K: Field>(
    space: &KModule<K>,
    gens: &[SparseVec<K>],
    budget: &Budget,
) -> Result<RMatrix<K>> {
    let ring = space.ring.clone();
    let dim = ring.dim();
    let b0 = gens.len();
    let ncols = b0 * dim;
    let mut ech = Echelon::with_tracking(space.dim, ncols);
    let mut kernel: Vec<SparseVec<K>> = Vec::new();
    let mut acc = DenseAcc::new(space.dim);
    for g in gens {
        for m in 0..dim {
            let a = space.monomial_action(m);
            for (row, x) in a.apply(g) {
                acc.add(row, x);
            }
            let col = acc.drain();
            match ech.add(&col, budget)? {
                Outcome::Dependent(Some(t)) => kernel.push(t),
                Outcome::Dependent(None) => unreachable!("tracking enabled"),
                Outcome::Pivot(_) => {}
            }
        }
    }
    select_minimal_generators(&ring, b0, &kernel, budget)
}

/// From a spanning set of a submodule Z of the expanded free module R^b
/// (already a k-basis), choose the vectors whose classes form the rref pivot
/// basis of Z/mZ, and reshape them into an RMatrix.
pub(crate) fn select_minimal_generators<K: Field>(
    ring: &Arc<ArtinAlgebra<K>>,
    b: usize,
    kernel: &[SparseVec<K>],
    budget: &Budget,
) -> Result<RMatrix<K>> {
    let dim = ring.dim();
    let mut sel = Echelon::new(b * dim);
    let mut acc = DenseAcc::new(b * dim);
    for v in 0..ring.nvars() {
        for k in kernel {
            let col = block_var_apply(ring, v, k, &mut acc);
            sel.add(&col, budget)?;
        }
    }
    let mut chosen: Vec<&SparseVec<K>> = Vec::new();
    for k in kernel {
        if let Outcome::Pivot(_) = sel.add(k, budget)? {
            chosen.push(k);
        }
    }
    let columns = chosen
        .into_iter()
        .map(|k| {
            let mut col: Vec<(u32, SparseVec<K>)> = Vec::new();
            for (idx, x) in k {
                let row = idx / dim as u32;
                let coord = idx % dim as u32;
                match col.last_mut() {
                    Some((r, e)) if *r == row => e.push((coord, x.clone())),
                    _ => col.push((row, vec![(coord, x.clone())])),
                }
            }
            col
        })
        .collect();
    let out = RMatrix::from_columns(b, columns);
    debug_assert!(out.entries_in_m(), "selected syzygies must have entries in m");
    Ok(out)
}

/// k as an R-module.
pub fn residue_field<K: Field>(ring: Arc<ArtinAlgebra<K>>, budget: &Budget) -> Result<Arc<PresentedModule<K>>> {
    let n = ring.nvars();
    let space = KModule::new(ring, 1, vec![Matrix::zero(1, 1); n]);
    PresentedModule::from_kmodule(space, budget)
}

/// R as a module over itself (free of rank one).
pub fn regular_module<K: Field>(ring: Arc<ArtinAlgebra<K>>, budget: &Budget) -> Result<Arc<PresentedModule<K>>> {
    PresentedModule::from_kmodule(KModule::regular(ring), budget)
}

/// The canonical module omega = Hom_k(R, k) with action (r.f)(s) = f(rs).
pub fn canonical_module<K: Field>(
    ring: Arc<ArtinAlgebra<K>>,
    budget: &Budget,
) -> Result<Arc<PresentedModule<K>>> {
    PresentedModule::from_kmodule(KModule::regular(ring).dual(), budget)
}

/// Matlis dual M^v = Hom_k(M, k), minimally presented.
pub fn matlis_dual<K: Field>(m: &PresentedModule<K>, budget: &Budget) -> Result<Arc<PresentedModule<K>>> {
    PresentedModule::from_kmodule(m.space.dual(), budget)
}

/// The submodule of the free module R^b generated by the given expanded
/// vectors, as a module in its own right.
pub fn submodule_of_free<K: Field>(
    ring: Arc<ArtinAlgebra<K>>,
    b: usize,
    vectors: Vec<SparseVec<K>>,
    budget: &Budget,
) -> Result<Arc<PresentedModule<K>>> {
    let ambient = b * ring.dim();
    let mut sub = Subspace::empty(ambient);
    let mut queue: VecDeque<SparseVec<K>> = vectors.into();
    let mut acc = DenseAcc::new(ambient);
    while let Some(v) = queue.pop_front() {
        if sub.insert(&v) {
            for var in 0..ring.nvars() {
                queue.push_back(block_var_apply(&ring, var, &v, &mut acc));
            }
        }
    }
    if sub.dim() == 0 {
        return Err(Error::ZeroModule);
    }
    let actions: Vec<Matrix<K>> = (0..ring.nvars())
        .map(|var| {
            let cols = sub
                .basis()
                .iter()
                .map(|row| {
                    let img = block_var_apply(&ring, var, row, &mut acc);
                    sub.coordinates(&img)
                        .expect("closure")
                        .into_iter()
                        .enumerate()
                        .filter(|(_, x)| !x.is_zero())
                        .map(|(i, x)| (i as u32, x))
                        .collect()
                })
                .collect();
            Matrix::from_columns(sub.dim(), cols)
        })
        .collect();
    let space = KModule::new(ring, sub.dim(), actions);
    PresentedModule::from_kmodule(space, budget)
}

/// The ideal (f_1..f_s) of R as a submodule of R.
pub fn ideal_submodule<K: Field>(
    ring: Arc<ArtinAlgebra<K>>,
    polys: &[Polynomial<K>],
    budget: &Budget,
) -> Result<Arc<PresentedModule<K>>> {
    let vectors: Vec<SparseVec<K>> = polys.iter().map(|p| ring.element(p)).collect();
    submodule_of_free(ring, 1, vectors, budget)
}

/// The cyclic module R/(f_1..f_s).
pub fn cyclic_module<K: Field>(
    ring: Arc<ArtinAlgebra<K>>,
    polys: &[Polynomial<K>],
    budget: &Budget,
) -> Result<Arc<PresentedModule<K>>> {
    let vectors: Vec<SparseVec<K>> = polys.iter().map(|p| ring.element(p)).collect();
    quotient_of_free(ring, 1, vectors, budget)
}

/// The cokernel of a user matrix over R (rows need not be minimal; the
/// result is re-minimalized).
pub fn coker_module<K: Field>(
    ring: Arc<ArtinAlgebra<K>>,
    mat: &RMatrix<K>,
    budget: &Budget,
) -> Result<Arc<PresentedModule<K>>> {
    let dim = ring.dim();
    let mut acc = DenseAcc::new(mat.rows * dim);
    let vectors: Vec<SparseVec<K>> = (0..mat.cols)
        .map(|c| {
            for (row, e) in mat.column(c) {
                for (i, x) in e {
                    acc.add(*row * dim as u32 + i, x.clone());
                }
            }
            acc.drain()
        })
        .collect();
    quotient_of_free(ring, mat.rows, vectors, budget)
}

/// R^b modulo the submodule generated by the given expanded vectors.
pub fn quotient_of_free<K: Field>(
    ring: Arc<ArtinAlgebra<K>>,
    b: usize,
    vectors: Vec<SparseVec<K>>,
    budget: &Budget,
) -> Result<Arc<PresentedModule<K>>> {
    let ambient = b * ring.dim();
    let mut sub = Subspace::empty(ambient);
    let mut queue: VecDeque<SparseVec<K>> = vectors.into();
    let mut acc = DenseAcc::new(ambient);
    while let Some(v) = queue.pop_front() {
        if sub.insert(&v) {
            for var in 0..ring.nvars() {
                queue.push_back(block_var_apply(&ring, var, &v, &mut acc));
            }
        }
    }
    let quot = QuotientSpace::new(sub);
    if quot.dim() == 0 {
        return Err(Error::ZeroModule);
    }
    let actions: Vec<Matrix<K>> = (0..ring.nvars())
        .map(|var| {
            let cols = (0..quot.dim())
                .map(|f| {
                    let rep = vec![(quot.rep(f), K::one())];
                    let img = block_var_apply(&ring, var, &rep, &mut acc);
                    quot.project(&img)
                })
                .collect();
            Matrix::from_columns(quot.dim(), cols)
        })
        .collect();
    let space = KModule::new(ring, quot.dim(), actions);
    PresentedModule::from_kmodule(space, budget)
}

/// Hom_R(M, N) a k-subspace of Hom_k(M, N) cut out by the R-linearity
/// conditions, together with the basis maps (needed for double duals).
pub fn hom_module_with_maps<K: Field>(
    m: &PresentedModule<K>,
    n: &PresentedModule<K>,
    budget: &Budget,
) -> Result<(Arc<PresentedModule<K>>, Vec<Matrix<K>>, Subspace<K>)> {
    assert!(Arc::ptr_eq(m.ring(), n.ring()), "modules over the same ring");
    let ring = m.ring().clone();
    let (qm, qn) = (m.space.dim, n.space.dim);
    let unknowns = qm * qn;
    // Unknown Phi[a][b] (output a, input b) has flat index b*qn + a.
    // Constraints per variable v: sum_j Phi[r][j] Am[j][c] - An[r][j] Phi[j][c] = 0,
    // indexed (v; c*qn + r).
    let nvars = ring.nvars();
    let am_rows: Vec<Matrix<K>> = m.space.actions.iter().map(Matrix::transpose).collect();
    let mut cols: Vec<SparseVec<K>> = Vec::with_capacity(unknowns);
    for b in 0..qm {
        for a in 0..qn {
            let mut col: Vec<(u32, K)> = Vec::new();
            for v in 0..nvars {
                let base = (v * qm * qn) as u32;
                for (c, x) in am_rows[v].column(b) {
                    col.push((base + c * qn as u32 + a as u32, x.clone()));
                }
                for (r, y) in n.space.actions[v].column(a) {
                    col.push((base + b as u32 * qn as u32 + r, -y.clone()));
                }
            }
            cols.push(crate::linalg::sv_normalize(col));
        }
    }
    let constraint = Matrix::from_columns(nvars * qm * qn, cols);
    let kernel = constraint.kernel_basis();
    let hom_sub = Subspace::from_spanning(unknowns, kernel.columns().cloned());
    let h = hom_sub.dim();
    if h == 0 {
        return Err(Error::ZeroModule);
    }
    let basis_maps: Vec<Matrix<K>> = hom_sub
        .basis()
        .iter()
        .map(|row| {
            let mut cols: Vec<SparseVec<K>> = vec![Vec::new(); qm];
            for (idx, x) in row {
                let b = (*idx as usize) / qn;
                let a = (*idx as usize) % qn;
                cols[b].push((a as u32, x.clone()));
            }
            Matrix::from_columns(qn, cols)
        })
        .collect();
    // Variable actions on Hom: Phi -> An_v . Phi.
    let actions: Vec<Matrix<K>> = (0..nvars)
        .map(|v| {
            let cols = basis_maps
                .iter()
                .map(|phi| {
                    let composed = n.space.actions[v].mul(phi);
                    let mut flat: SparseVec<K> = Vec::new();
                    for (b, col) in composed.columns().enumerate() {
                        for (a, x) in col {
                            flat.push(((b * qn) as u32 + a, x.clone()));
                        }
                    }
                    flat.sort_by_key(|&(i, _)| i);
                    let coords = hom_sub
                        .coordinates(&flat)
                        .expect("action preserves R-linearity");
                    coords
                        .into_iter()
                        .enumerate()
                        .filter(|(_, x)| !x.is_zero())
                        .map(|(i, x)| (i as u32, x))
                        .collect()
                })
                .collect();
            Matrix::from_columns(h, cols)
        })
        .collect();
    let space = KModule::new(ring, h, actions);
    let module = PresentedModule::from_kmodule(space, budget)?;
    Ok((module, basis_maps, hom_sub))
}

/// Hom_R(M, N), minimally presented.
pub fn hom_module<K: Field>(
    m: &PresentedModule<K>,
    n: &PresentedModule<K>,
    budget: &Budget,
) -> Result<Arc<PresentedModule<K>>> {
    hom_module_with_maps(m, n, budget).map(|(h, _, _)| h)
}

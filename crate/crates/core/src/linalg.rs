//! Exact sparse linear algebra over a [`Field`]: reduced row echelon form,
//! rank, kernel bases, and the incremental echelon engine that backs syzygy
//! computation.
//!
//! Pivot selection is deterministic everywhere (leftmost nonzero, rows in
//! order), so every basis choice downstream is reproducible run to run.

use std::cell::Cell;
use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};

use crate::error::{Error, Result};
use crate::scalar::Field;

/// Sparse vector: strictly increasing indices, no stored zeros.
pub type SparseVec<K> = Vec<(u32, K)>;

/// Entry-operation budget for elimination passes. Counts actual scalar
/// multiply-accumulate work, not an a-priori dense estimate.
pub struct Budget {
    limit: u64,
    used: Cell<u64>,
}

impl Budget {
    pub const DEFAULT_LIMIT: u64 = 100_000_000;

    pub fn new(limit: u64) -> Self {
        Budget { limit, used: Cell::new(0) }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    pub fn used(&self) -> u64 {
        self.used.get()
    }

    pub fn charge(&self, ops: u64) -> Result<()> {
        let total = self.used.get().saturating_add(ops);
        self.used.set(total);
        if total > self.limit {
            Err(Error::SizeCap {
                detail: format!("entry-operation budget {} exhausted", self.limit),
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Budget::DEFAULT_LIMIT)
    }
}

/// Drop zeros, combine duplicates, sort by index.
pub fn sv_normalize<K: Field>(mut v: Vec<(u32, K)>) -> SparseVec<K> {
    v.sort_by_key(|&(i, _)| i);
    let mut out: SparseVec<K> = Vec::with_capacity(v.len());
    for (i, x) in v {
        match out.last_mut() {
            Some((j, y)) if *j == i => *y = y.clone() + x,
            _ => out.push((i, x)),
        }
    }
    out.retain(|(_, x)| !x.is_zero());
    out
}

/// `dst + c * src` on sorted sparse vectors.
pub fn sv_axpy<K: Field>(dst: &SparseVec<K>, c: &K, src: &SparseVec<K>) -> SparseVec<K> {
    let mut out = Vec::with_capacity(dst.len() + src.len());
    let (mut a, mut b) = (0, 0);
    while a < dst.len() || b < src.len() {
        match (dst.get(a), src.get(b)) {
            (Some((i, x)), Some((j, y))) if i == j => {
                let v = x.clone() + c.clone() * y.clone();
                if !v.is_zero() {
                    out.push((*i, v));
                }
                a += 1;
                b += 1;
            }
            (Some((i, x)), Some((j, _))) if i < j => {
                out.push((*i, x.clone()));
                a += 1;
            }
            (Some(_), Some((j, y))) => {
                let v = c.clone() * y.clone();
                if !v.is_zero() {
                    out.push((*j, v));
                }
                b += 1;
            }
            (Some((i, x)), None) => {
                out.push((*i, x.clone()));
                a += 1;
            }
            (None, Some((j, y))) => {
                let v = c.clone() * y.clone();
                if !v.is_zero() {
                    out.push((*j, v));
                }
                b += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

pub fn sv_get<K: Field>(v: &SparseVec<K>, i: u32) -> K {
    match v.binary_search_by_key(&i, |&(j, _)| j) {
        Ok(pos) => v[pos].1.clone(),
        Err(_) => K::zero(),
    }
}

pub fn sv_scale<K: Field>(v: &SparseVec<K>, c: &K) -> SparseVec<K> {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, c.clone() * x.clone())).collect()
}

/// Sparse matrix in column-major order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<K: Field> {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec<K>>,
}

impl<K: Field> Matrix<K> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.data[i].push((i as u32, K::one()));
        }
        m
    }

    pub fn from_columns(rows: usize, columns: Vec<SparseVec<K>>) -> Self {
        let cols = columns.len();
        for c in &columns {
            debug_assert!(c.iter().all(|&(i, _)| (i as usize) < rows));
            debug_assert!(c.windows(2).all(|w| w[0].0 < w[1].0));
        }
        Matrix { rows, cols, data: columns }
    }

    /// Dense row-major convenience constructor (tests, small inputs).
    pub fn from_rows(rows: Vec<Vec<K>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = vec![Vec::new(); ncols];
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged rows");
            for (c, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    data[c].push((r as u32, x.clone()));
                }
            }
        }
        Matrix { rows: nrows, cols: ncols, data }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&n| K::from_int(n)).collect()).collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, c: usize) -> &SparseVec<K> {
        &self.data[c]
    }

    pub fn columns(&self) -> impl Iterator<Item = &SparseVec<K>> {
        self.data.iter()
    }

    pub fn get(&self, r: usize, c: usize) -> K {
        sv_get(&self.data[c], r as u32)
    }

    pub fn set(&mut self, r: usize, c: usize, v: K) {
        let col = &mut self.data[c];
        match col.binary_search_by_key(&(r as u32), |&(j, _)| j) {
            Ok(pos) => {
                if v.is_zero() {
                    col.remove(pos);
                } else {
                    col[pos].1 = v;
                }
            }
            Err(pos) => {
                if !v.is_zero() {
                    col.insert(pos, (r as u32, v));
                }
            }
        }
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn transpose(&self) -> Matrix<K> {
        let mut data = vec![Vec::new(); self.rows];
        for (c, col) in self.data.iter().enumerate() {
            for (r, x) in col {
                data[*r as usize].push((c as u32, x.clone()));
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    /// Matrix-vector product `self * v`.
    pub fn apply(&self, v: &SparseVec<K>) -> SparseVec<K> {
        let mut acc: Vec<(u32, K)> = Vec::new();
        for (c, x) in v {
            for (r, y) in &self.data[*c as usize] {
                acc.push((*r, x.clone() * y.clone()));
            }
        }
        sv_normalize(acc)
    }

    pub fn mul(&self, other: &Matrix<K>) -> Matrix<K> {
        assert_eq!(self.cols, other.rows);
        let data = other.data.iter().map(|col| self.apply(col)).collect();
        Matrix { rows: self.rows, cols: other.cols, data }
    }

    /// Reduced row echelon form with deterministic pivoting (leftmost nonzero
    /// column, rows processed in order). Returns the rref and the strictly
    /// increasing pivot columns.
    pub fn rref(&self) -> (Matrix<K>, Vec<usize>) {
        let mut rows: Vec<SparseVec<K>> = vec![Vec::new(); self.rows];
        for (c, col) in self.data.iter().enumerate() {
            for (r, x) in col {
                rows[*r as usize].push((c as u32, x.clone()));
            }
        }
        let mut pivots = Vec::new();
        let mut pr = 0usize;
        for col in 0..self.cols as u32 {
            let Some(sel) = (pr..self.rows).find(|&r| !sv_get(&rows[r], col).is_zero()) else {
                continue;
            };
            rows.swap(pr, sel);
            let lead = sv_get(&rows[pr], col);
            let inv = lead.inv();
            rows[pr] = sv_scale(&rows[pr], &inv);
            for r in 0..self.rows {
                if r != pr {
                    let a = sv_get(&rows[r], col);
                    if !a.is_zero() {
                        rows[r] = sv_axpy(&rows[r], &(-a), &rows[pr]);
                    }
                }
            }
            pivots.push(col as usize);
            pr += 1;
            if pr == self.rows {
                break;
            }
        }
        let mut data = vec![Vec::new(); self.cols];
        for (r, row) in rows.iter().enumerate() {
            for (c, x) in row {
                data[*c as usize].push((r as u32, x.clone()));
            }
        }
        (Matrix { rows: self.rows, cols: self.cols, data }, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new(self.rows);
        let budget = Budget::unlimited();
        for col in &self.data {
            ech.add(col, &budget).expect("unlimited budget");
        }
        ech.rank()
    }

    /// Canonical basis of the right null space, as the columns of the result:
    /// one basis vector per free column, with the free variable set to 1,
    /// other free variables 0, and pivot coordinates read off the rref.
    pub fn kernel_basis(&self) -> Matrix<K> {
        let (r, pivots) = self.rref();
        let pivot_set: BTreeMap<usize, usize> =
            pivots.iter().enumerate().map(|(row, &col)| (col, row)).collect();
        let mut columns = Vec::new();
        for f in 0..self.cols {
            if pivot_set.contains_key(&f) {
                continue;
            }
            let mut v: Vec<(u32, K)> = vec![(f as u32, K::one())];
            for (&pcol, &prow) in &pivot_set {
                let e = r.get(prow, f);
                if !e.is_zero() {
                    v.push((pcol as u32, -e));
                }
            }
            columns.push(sv_normalize(v));
        }
        Matrix::from_columns(self.cols, columns)
    }
}

/// Reusable dense accumulator for building sparse vectors out of many small
/// contributions.
pub struct DenseAcc<K: Field> {
    vals: Vec<K>,
    touched: Vec<u32>,
}

impl<K: Field> DenseAcc<K> {
    pub fn new(len: usize) -> Self {
        DenseAcc { vals: vec![K::zero(); len], touched: Vec::new() }
    }

    pub fn ensure(&mut self, len: usize) {
        if self.vals.len() < len {
            self.vals.resize(len, K::zero());
        }
    }

    pub fn add(&mut self, i: u32, x: K) {
        let slot = &mut self.vals[i as usize];
        if slot.is_zero() {
            self.touched.push(i);
        }
        *slot = slot.clone() + x;
    }

    /// Drain into a sorted sparse vector, resetting the accumulator.
    pub fn drain(&mut self) -> SparseVec<K> {
        self.touched.sort_unstable();
        self.touched.dedup();
        let mut out = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            let x = std::mem::replace(&mut self.vals[i as usize], K::zero());
            if !x.is_zero() {
                out.push((i, x));
            }
        }
        self.touched.clear();
        out
    }
}

/// Outcome of feeding one column to the [`Echelon`] engine.
pub enum Outcome<K> {
    /// Column was independent; its leading coordinate became a pivot.
    Pivot(u32),
    /// Column reduced to zero. When tracking, carries the combination of
    /// previously fed columns (by insertion id) witnessing the dependency:
    /// a canonical kernel vector with coefficient 1 on the current column.
    Dependent(Option<SparseVec<K>>),
}

/// Incremental column echelon over a field, with optional combination
/// tracking. Feeding the columns of a matrix in order yields its rank
/// profile; with tracking, the dependent columns yield exactly the canonical
/// rref-derived kernel basis.
pub struct Echelon<K: Field> {
    nrows: usize,
    pivot_of: BTreeMap<u32, usize>,
    cols: Vec<SparseVec<K>>,
    tracks: Vec<SparseVec<K>>,
    tracking: bool,
    fed: u32,
    scratch: Vec<K>,
    heap: BinaryHeap<Reverse<u32>>,
    touched: Vec<u32>,
    tscratch: Vec<K>,
    ttouched: Vec<u32>,
}

impl<K: Field> Echelon<K> {
    pub fn new(nrows: usize) -> Self {
        Echelon {
            nrows,
            pivot_of: BTreeMap::new(),
            cols: Vec::new(),
            tracks: Vec::new(),
            tracking: false,
            fed: 0,
            scratch: vec![K::zero(); nrows],
            heap: BinaryHeap::new(),
            touched: Vec::new(),
            tscratch: Vec::new(),
            ttouched: Vec::new(),
        }
    }

    pub fn with_tracking(nrows: usize, expected_cols: usize) -> Self {
        let mut e = Echelon::new(nrows);
        e.tracking = true;
        e.tscratch = vec![K::zero(); expected_cols];
        e
    }

    pub fn rank(&self) -> usize {
        self.pivot_of.len()
    }

    pub fn fed(&self) -> u32 {
        self.fed
    }

    pub fn add(&mut self, col: &SparseVec<K>, budget: &Budget) -> Result<Outcome<K>> {
        let id = self.fed;
        self.fed += 1;
        debug_assert!(col.iter().all(|&(i, _)| (i as usize) < self.nrows));
        for (i, x) in col {
            self.scratch[*i as usize] = x.clone();
            self.heap.push(Reverse(*i));
            self.touched.push(*i);
        }
        if self.tracking {
            if id as usize >= self.tscratch.len() {
                self.tscratch.resize(id as usize + 1, K::zero());
            }
            self.tscratch[id as usize] = K::one();
            self.ttouched.push(id);
        }
        let mut ops: u64 = 0;
        let mut lead: Option<u32> = None;
        let mut last: Option<u32> = None;
        while let Some(Reverse(c)) = self.heap.pop() {
            if last == Some(c) {
                continue;
            }
            last = Some(c);
            let val = self.scratch[c as usize].clone();
            if val.is_zero() {
                continue;
            }
            match self.pivot_of.get(&c) {
                Some(&idx) => {
                    let neg = -val;
                    // Leading entry of the pivot column is 1 at c, so this
                    // cancels scratch[c]; all other support is strictly below.
                    for (i, x) in &self.cols[idx] {
                        let cur = std::mem::replace(&mut self.scratch[*i as usize], K::zero());
                        self.scratch[*i as usize] = cur + neg.clone() * x.clone();
                        if *i > c {
                            self.heap.push(Reverse(*i));
                            self.touched.push(*i);
                        }
                    }
                    ops += self.cols[idx].len() as u64;
                    if self.tracking {
                        for (i, x) in &self.tracks[idx] {
                            if self.tscratch[*i as usize].is_zero() {
                                self.ttouched.push(*i);
                            }
                            let cur =
                                std::mem::replace(&mut self.tscratch[*i as usize], K::zero());
                            self.tscratch[*i as usize] = cur + neg.clone() * x.clone();
                        }
                        ops += self.tracks[idx].len() as u64;
                    }
                }
                None => {
                    lead = Some(c);
                    break;
                }
            }
        }
        budget.charge(ops)?;
        match lead {
            Some(c) => {
                // Collect the remainder (everything still in scratch), scale
                // so the leading coefficient is 1, and store as a new pivot.
                let inv = self.scratch[c as usize].inv();
                self.touched.sort_unstable();
                self.touched.dedup();
                let mut v: SparseVec<K> = Vec::new();
                for &i in &self.touched {
                    let x = std::mem::replace(&mut self.scratch[i as usize], K::zero());
                    if i >= c && !x.is_zero() {
                        v.push((i, inv.clone() * x));
                    }
                }
                self.heap.clear();
                self.touched.clear();
                let track = if self.tracking {
                    self.collect_track(Some(&inv))
                } else {
                    Vec::new()
                };
                let idx = self.cols.len();
                self.cols.push(v);
                if self.tracking {
                    self.tracks.push(track);
                } else {
                    self.tracks.push(Vec::new());
                }
                self.pivot_of.insert(c, idx);
                Ok(Outcome::Pivot(c))
            }
            None => {
                for &i in &self.touched {
                    self.scratch[i as usize] = K::zero();
                }
                self.heap.clear();
                self.touched.clear();
                let track =
                    if self.tracking { Some(self.collect_track(None)) } else { None };
                Ok(Outcome::Dependent(track))
            }
        }
    }

    fn collect_track(&mut self, scale: Option<&K>) -> SparseVec<K> {
        self.ttouched.sort_unstable();
        self.ttouched.dedup();
        let mut t: SparseVec<K> = Vec::new();
        for &i in &self.ttouched {
            let x = std::mem::replace(&mut self.tscratch[i as usize], K::zero());
            if !x.is_zero() {
                let x = match scale {
                    Some(s) => s.clone() * x,
                    None => x,
                };
                t.push((i, x));
            }
        }
        self.ttouched.clear();
        t
    }
}

/// A subspace of k^n held in reduced row echelon form: canonical basis rows
/// with strictly increasing pivots, pivot coefficient 1, and pivot
/// coordinates eliminated from every other row.
#[derive(Clone, Debug)]
pub struct Subspace<K: Field> {
    ambient: usize,
    rows: Vec<SparseVec<K>>,
    pivots: Vec<u32>,
}

impl<K: Field> Subspace<K> {
    pub fn empty(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_spanning<I: IntoIterator<Item = SparseVec<K>>>(ambient: usize, vecs: I) -> Self {
        let mut s = Subspace::empty(ambient);
        for v in vecs {
            s.insert(&v);
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Canonical basis rows (rref of the row space).
    pub fn basis(&self) -> &[SparseVec<K>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[u32] {
        &self.pivots
    }

    /// Reduce `v` modulo the subspace; the result has no support on pivots.
    pub fn reduce(&self, v: &SparseVec<K>) -> SparseVec<K> {
        let mut w = v.clone();
        for (pos, &p) in self.pivots.iter().enumerate() {
            let a = sv_get(&w, p);
            if !a.is_zero() {
                w = sv_axpy(&w, &(-a), &self.rows[pos]);
            }
        }
        w
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Coordinates of a member vector on the canonical basis rows.
    pub fn coordinates(&self, v: &SparseVec<K>) -> Option<Vec<K>> {
        let coords: Vec<K> = self.pivots.iter().map(|&p| sv_get(v, p)).collect();
        let mut check = v.clone();
        for (pos, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                check = sv_axpy(&check, &(-c.clone()), &self.rows[pos]);
            }
        }
        check.is_empty().then_some(coords)
    }

    /// Insert a vector; returns true when the dimension grew.
    pub fn insert(&mut self, v: &SparseVec<K>) -> bool {
        let w = self.reduce(v);
        let Some((lead, val)) = w.first().cloned() else {
            return false;
        };
        let inv = val.inv();
        let w = sv_scale(&w, &inv);
        for row in self.rows.iter_mut() {
            let a = sv_get(row, lead);
            if !a.is_zero() {
                *row = sv_axpy(row, &(-a), &w);
            }
        }
        let pos = self.pivots.partition_point(|&p| p < lead);
        self.pivots.insert(pos, lead);
        self.rows.insert(pos, w);
        true
    }

    /// Free (non-pivot) coordinates, ascending.
    pub fn free_coords(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.ambient - self.pivots.len());
        let mut it = self.pivots.iter().peekable();
        for i in 0..self.ambient as u32 {
            if it.peek() == Some(&&i) {
                it.next();
            } else {
                out.push(i);
            }
        }
        out
    }
}

/// The quotient of k^n by a subspace, with the free coordinates as the
/// canonical basis of the quotient.
#[derive(Clone, Debug)]
pub struct QuotientSpace<K: Field> {
    pub sub: Subspace<K>,
    reps: Vec<u32>,
}

impl<K: Field> QuotientSpace<K> {
    pub fn new(sub: Subspace<K>) -> Self {
        let reps = sub.free_coords();
        QuotientSpace { sub, reps }
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// Ambient representative of the i-th quotient basis vector.
    pub fn rep(&self, i: usize) -> u32 {
        self.reps[i]
    }

    /// Quotient coordinates of an ambient vector.
    pub fn project(&self, v: &SparseVec<K>) -> SparseVec<K> {
        let r = self.sub.reduce(v);
        // After reduction the support avoids pivots, so it sits on the reps.
        r.into_iter()
            .map(|(i, x)| {
                let pos = self.reps.binary_search(&i).expect("reduced support off basis");
                (pos as u32, x)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Fp;
    use num_rational::BigRational;

    type F5 = Fp<5>;
    type Q = BigRational;

    #[test]
    fn rref_identity_fixed() {
        let m: Matrix<Q> = Matrix::identity(2);
        let (r, p) = m.rref();
        assert_eq!(r, m);
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn rref_zero_fixed() {
        let m: Matrix<Q> = Matrix::zero(3, 2);
        let (r, p) = m.rref();
        assert!(r.is_zero_matrix());
        assert!(p.is_empty());
    }

    #[test]
    fn rref_rank_one_fixed() {
        // [[1,2],[2,4]] over Q row-reduces to [[1,2],[0,0]] with pivot column 0.
        let m: Matrix<Q> = Matrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        let (r, p) = m.rref();
        assert_eq!(r, Matrix::from_int_rows(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn kernel_identity_empty() {
        let m: Matrix<Q> = Matrix::identity(3);
        assert_eq!(m.kernel_basis().cols(), 0);
    }

    #[test]
    fn kernel_zero_matrix_standard_basis() {
        let m: Matrix<Q> = Matrix::zero(2, 3);
        let k = m.kernel_basis();
        assert_eq!(k, Matrix::identity(3));
    }

    #[test]
    fn kernel_rank_one_fixed() {
        // Solved by hand: x + 2y = 0 gives basis (-2, 1).
        let m: Matrix<Q> = Matrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        let k = m.kernel_basis();
        assert_eq!(k, Matrix::from_int_rows(&[&[-2], &[1]]));
    }

    #[test]
    fn rank_examples() {
        let m: Matrix<Q> = Matrix::identity(4);
        assert_eq!(m.rank(), 4);
        let z: Matrix<Q> = Matrix::zero(3, 3);
        assert_eq!(z.rank(), 0);
        // 2 * row1 = row2 mod 5.
        let m5: Matrix<F5> = Matrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(m5.rank(), 1);
    }

    #[test]
    fn echelon_tracking_matches_rref_kernel() {
        let m: Matrix<F5> = Matrix::from_int_rows(&[
            &[1, 2, 3, 0],
            &[2, 4, 1, 3],
            &[0, 0, 2, 1],
        ]);
        let k = m.kernel_basis();
        let mut ech = Echelon::with_tracking(m.rows(), m.cols());
        let budget = Budget::unlimited();
        let mut kernel_cols = Vec::new();
        for col in m.columns() {
            if let Outcome::Dependent(Some(t)) = ech.add(col, &budget).unwrap() {
                kernel_cols.push(t);
            }
        }
        let k2 = Matrix::from_columns(m.cols(), kernel_cols);
        assert_eq!(k, k2);
    }

    #[test]
    fn subspace_membership_and_quotient() {
        let s: Subspace<Q> = Subspace::from_spanning(
            3,
            vec![
                vec![(0u32, Q::from_int(1)), (1, Q::from_int(2))],
                vec![(1u32, Q::from_int(1)), (2, Q::from_int(1))],
            ],
        );
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&vec![(0u32, Q::from_int(2)), (1, Q::from_int(5)), (2, Q::from_int(1))]));
        let q = QuotientSpace::new(s);
        assert_eq!(q.dim(), 1);
    }

    #[test]
    fn budget_exhaustion_reported() {
        let budget = Budget::new(1);
        let m: Matrix<F5> = Matrix::from_int_rows(&[&[1, 2], &[2, 3]]);
        let mut ech = Echelon::new(2);
        let mut failed = false;
        for col in m.columns() {
            if ech.add(col, &budget).is_err() {
                failed = true;
            }
        }
        assert!(failed);
    }
}

//! Exact sparse rational linear algebra: rank, kernel, solving with witness,
//! homology dimensions.
//!
//! Two elimination strategies are kept on purpose. `rank` pivots by a
//! minimal-fill heuristic over sparse rows; `rank_dense` is a plain dense
//! elimination used as an independent cross-check. Everything is exact, so
//! pivot choice is purely a performance decision and the two must agree.
//!
//! Column order is inherited from the caller (slices order columns by the
//! global word order), which makes kernels, witnesses resulting from `solve`,
//! and echelon reductions reproducible across runs.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::rational::Rat;

/// One sparse row: column index to nonzero coefficient.
pub type SparseVec = BTreeMap<usize, Rat>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactqError {
    DimensionMismatch { expected: usize, got: usize },
    NotAComplex,
}

impl fmt::Display for ExactqError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactqError::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            ExactqError::NotAComplex => {
                write!(f, "not a complex: composition of differentials is nonzero")
            }
        }
    }
}

pub type Result<T> = core::result::Result<T, ExactqError>;

/// Sparse matrix over the rationals; no zero entries are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            data: vec![SparseVec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = SparseMatrix::zero(n, n);
        for i in 0..n {
            m.data[i].insert(i, Rat::one());
        }
        m
    }

    /// Builds from columns given as sparse (row, value) lists.
    pub fn from_columns(rows: usize, columns: &[Vec<(usize, Rat)>]) -> Self {
        let mut m = SparseMatrix::zero(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            for (r, v) in col {
                m.set(*r, c, v.clone());
            }
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<SparseVec>) -> Self {
        for row in &rows {
            debug_assert!(row.keys().all(|&c| c < cols));
        }
        SparseMatrix {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &SparseVec {
        &self.data[r]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        assert!(r < self.rows && c < self.cols, "index out of range");
        if v.is_zero() {
            self.data[r].remove(&c);
        } else {
            self.data[r].insert(c, v);
        }
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&Rat> {
        self.data[r].get(&c)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_empty())
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut t = SparseMatrix::zero(self.cols, self.rows);
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row {
                t.data[*c].insert(r, v.clone());
            }
        }
        t
    }

    /// `self * rhs`.
    pub fn mul(&self, rhs: &SparseMatrix) -> Result<SparseMatrix> {
        if self.cols != rhs.rows {
            return Err(ExactqError::DimensionMismatch {
                expected: self.cols,
                got: rhs.rows,
            });
        }
        let mut out = SparseMatrix::zero(self.rows, rhs.cols);
        for (r, row) in self.data.iter().enumerate() {
            let mut acc = SparseVec::new();
            for (k, a) in row {
                for (c, b) in &rhs.data[*k] {
                    let term = a * b;
                    add_into(&mut acc, *c, term);
                }
            }
            out.data[r] = acc;
        }
        Ok(out)
    }

    /// `self * v` for a dense vector.
    pub fn mul_vec(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        if v.len() != self.cols {
            return Err(ExactqError::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        let mut out = vec![Rat::zero(); self.rows];
        for (r, row) in self.data.iter().enumerate() {
            let mut acc = Rat::zero();
            for (c, a) in row {
                if !v[*c].is_zero() {
                    acc += a * &v[*c];
                }
            }
            out[r] = acc;
        }
        Ok(out)
    }

    /// Exact rank via sparse elimination with a minimal-fill pivot heuristic.
    pub fn rank(&self) -> usize {
        let mut live: Vec<SparseVec> = self
            .data
            .iter()
            .filter(|r| !r.is_empty())
            .cloned()
            .collect();
        let mut rank = 0;
        while !live.is_empty() {
            let mut col_count: BTreeMap<usize, usize> = BTreeMap::new();
            for row in &live {
                for c in row.keys() {
                    *col_count.entry(*c).or_insert(0) += 1;
                }
            }
            // Markowitz cost (nnz(row)-1)*(nnz(col)-1); ties broken by (col, row)
            // so the pivot choice is deterministic.
            let mut best: Option<(usize, usize, usize)> = None; // (cost, col, row)
            for (i, row) in live.iter().enumerate() {
                let rn = row.len() - 1;
                for c in row.keys() {
                    let cost = rn * (col_count[c] - 1);
                    let cand = (cost, *c, i);
                    if best.is_none_or(|b| cand < b) {
                        best = Some(cand);
                    }
                }
            }
            let (_, pc, pr) = best.expect("nonempty live rows");
            let pivot_row = live.swap_remove(pr);
            let pv = pivot_row[&pc].clone();
            let mut next: Vec<SparseVec> = Vec::with_capacity(live.len());
            for mut row in live {
                if let Some(f) = row.remove(&pc) {
                    let scale = &f / &pv;
                    for (c, v) in &pivot_row {
                        if *c == pc {
                            continue;
                        }
                        sub_scaled(&mut row, *c, v, &scale);
                    }
                }
                if !row.is_empty() {
                    next.push(row);
                }
            }
            live = next;
            rank += 1;
        }
        rank
    }

    /// Independent dense-elimination rank, kept as a cross-check oracle.
    #[allow(clippy::needless_range_loop)] // two rows of `a` are accessed per step
    pub fn rank_dense(&self) -> usize {
        let mut a: Vec<Vec<Rat>> = vec![vec![Rat::zero(); self.cols]; self.rows];
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row {
                a[r][*c] = v.clone();
            }
        }
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            for r in 0..self.rows {
                if r != rank && !a[r][col].is_zero() {
                    let f = &a[r][col] / &a[rank][col];
                    for c in col..self.cols {
                        let t = &f * &a[rank][c];
                        a[r][c] = &a[r][c] - &t;
                    }
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    /// Canonical reduced row echelon form, pivoting left to right.
    pub fn rref(&self) -> Rref {
        let mut rows: Vec<SparseVec> = self.data.clone();
        let mut pivots = Vec::new();
        let mut top = 0;
        for col in 0..self.cols {
            let Some(p) = (top..rows.len()).find(|&r| rows[r].contains_key(&col)) else {
                continue;
            };
            rows.swap(top, p);
            let pv = rows[top][&col].clone();
            if !pv.is_one() {
                let row = core::mem::take(&mut rows[top]);
                rows[top] = row.into_iter().map(|(c, v)| (c, v / &pv)).collect();
            }
            let pivot_row = rows[top].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == top {
                    continue;
                }
                if let Some(f) = row.remove(&col) {
                    for (c, v) in &pivot_row {
                        if *c == col {
                            continue;
                        }
                        sub_scaled(row, *c, v, &f);
                    }
                }
            }
            pivots.push(col);
            top += 1;
            if top == rows.len() {
                break;
            }
        }
        rows.truncate(top);
        Rref {
            cols: self.cols,
            rows,
            pivots,
        }
    }

    /// Basis of `ker(self)`, one vector per free column of the RREF.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let rref = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &rref.pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (row, &pc) in rref.rows.iter().zip(&rref.pivots) {
                if let Some(x) = row.get(&free) {
                    v[pc] = -x.clone();
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Indices of a maximal independent set of columns (the RREF pivots).
    pub fn image_column_indices(&self) -> Vec<usize> {
        self.rref().pivots
    }

    /// Dense copy of column `c`.
    pub fn column(&self, c: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.rows];
        for (r, row) in self.data.iter().enumerate() {
            if let Some(x) = row.get(&c) {
                v[r] = x.clone();
            }
        }
        v
    }

    /// Returns some `x` with `self * x = v` when `v` is in the column span.
    pub fn solve(&self, v: &[Rat]) -> Result<Option<Vec<Rat>>> {
        if v.len() != self.rows {
            return Err(ExactqError::DimensionMismatch {
                expected: self.rows,
                got: v.len(),
            });
        }
        Ok(LinearSolver::new(self).solve(v))
    }
}

/// Reduced row echelon form: pivot rows (in pivot order) over the original columns.
pub struct Rref {
    pub cols: usize,
    pub rows: Vec<SparseVec>,
    pub pivots: Vec<usize>,
}

/// Precomputed elimination of `[A | I]`, reusable for many right-hand sides.
pub struct LinearSolver {
    cols: usize,
    rows: usize,
    /// Pivot rows: (pivot column, transform row over the original row indices).
    pivot_rows: Vec<(usize, SparseVec)>,
    /// Transform rows whose A-part vanished; these give consistency constraints.
    null_rows: Vec<SparseVec>,
}

impl LinearSolver {
    pub fn new(m: &SparseMatrix) -> Self {
        // Gauss-Jordan on [A | I], tracking the transform part.
        let mut a: Vec<SparseVec> = m.data.clone();
        let mut e: Vec<SparseVec> = (0..m.rows)
            .map(|r| {
                let mut s = SparseVec::new();
                s.insert(r, Rat::one());
                s
            })
            .collect();
        let mut pivots = Vec::new();
        let mut top = 0;
        for col in 0..m.cols {
            let Some(p) = (top..a.len()).find(|&r| a[r].contains_key(&col)) else {
                continue;
            };
            a.swap(top, p);
            e.swap(top, p);
            let pv = a[top][&col].clone();
            if !pv.is_one() {
                a[top] = core::mem::take(&mut a[top])
                    .into_iter()
                    .map(|(c, v)| (c, v / &pv))
                    .collect();
                e[top] = core::mem::take(&mut e[top])
                    .into_iter()
                    .map(|(c, v)| (c, v / &pv))
                    .collect();
            }
            let pa = a[top].clone();
            let pe = e[top].clone();
            for r in 0..a.len() {
                if r == top {
                    continue;
                }
                if let Some(f) = a[r].remove(&col) {
                    for (c, v) in &pa {
                        if *c == col {
                            continue;
                        }
                        sub_scaled(&mut a[r], *c, v, &f);
                    }
                    for (c, v) in &pe {
                        sub_scaled(&mut e[r], *c, v, &f);
                    }
                }
            }
            pivots.push(col);
            top += 1;
            if top == a.len() {
                break;
            }
        }
        let mut pivot_rows = Vec::with_capacity(top);
        for (i, &pc) in pivots.iter().enumerate() {
            pivot_rows.push((pc, e[i].clone()));
        }
        let mut null_rows = Vec::new();
        for r in top..a.len() {
            debug_assert!(a[r].is_empty());
            null_rows.push(e[r].clone());
        }
        LinearSolver {
            cols: m.cols,
            rows: m.rows,
            pivot_rows,
            null_rows,
        }
    }

    /// Witness with all free variables set to zero, or `None` if inconsistent.
    pub fn solve(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(v.len(), self.rows, "right-hand side length mismatch");
        for row in &self.null_rows {
            if !dot(row, v).is_zero() {
                return None;
            }
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (pc, row) in &self.pivot_rows {
            x[*pc] = dot(row, v);
        }
        Some(x)
    }

    /// True when `v` lies in the column span.
    pub fn contains(&self, v: &[Rat]) -> bool {
        self.null_rows.iter().all(|row| dot(row, v).is_zero())
    }

    pub fn rank(&self) -> usize {
        self.pivot_rows.len()
    }
}

/// Incremental row space in echelon form, pivoting on the *largest* column of
/// each row. Reducing a vector eliminates its largest reducible coordinates,
/// so quotient representatives keep the lexicographically least columns.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<SparseVec>,
    pivot_to_row: BTreeMap<usize, usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn from_rows(rows: impl IntoIterator<Item = SparseVec>) -> Self {
        let mut e = Echelon::new();
        for r in rows {
            e.insert(r);
        }
        e
    }

    /// Reduces `v` modulo the row space; untouched coordinates are the
    /// non-pivot ones.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        loop {
            let hit = v
                .keys()
                .rev()
                .find_map(|c| self.pivot_to_row.get(c).map(|&r| (*c, r)));
            let Some((c, r)) = hit else {
                return v;
            };
            let f = v[&c].clone();
            for (rc, rv) in &self.rows[r] {
                sub_scaled(&mut v, *rc, rv, &f);
            }
        }
    }

    /// Reduces and, if nonzero remains, adds it as a new row. Returns whether
    /// the vector enlarged the space.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let red = self.reduce(v);
        let Some((&pc, pv)) = red.iter().next_back() else {
            return false;
        };
        let pv = pv.clone();
        let row: SparseVec = red.into_iter().map(|(c, v)| (c, v / &pv)).collect();
        self.pivot_to_row.insert(pc, self.rows.len());
        self.rows.push(row);
        true
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn pivot_cols(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivot_to_row.keys().copied()
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.pivot_to_row.contains_key(&c)
    }
}

/// `dim ker(d_out) - rank(d_in)` after checking `d_out ∘ d_in = 0`.
pub fn homology_dim(d_in: &SparseMatrix, d_out: &SparseMatrix) -> Result<usize> {
    let comp = d_out.mul(d_in)?;
    if !comp.is_zero() {
        return Err(ExactqError::NotAComplex);
    }
    let cycles = d_out.cols() - d_out.rank();
    Ok(cycles - d_in.rank())
}

fn add_into(v: &mut SparseVec, c: usize, x: Rat) {
    if x.is_zero() {
        return;
    }
    match v.entry(c) {
        alloc::collections::btree_map::Entry::Vacant(e) => {
            e.insert(x);
        }
        alloc::collections::btree_map::Entry::Occupied(mut e) => {
            let sum = e.get() + &x;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

/// `v[c] -= scale * x`, pruning zeros.
fn sub_scaled(v: &mut SparseVec, c: usize, x: &Rat, scale: &Rat) {
    add_into(v, c, -(x * scale));
}

fn dot(row: &SparseVec, v: &[Rat]) -> Rat {
    let mut acc = Rat::zero();
    for (c, x) in row {
        if !v[*c].is_zero() {
            acc += x * &v[*c];
        }
    }
    acc
}

/// Dense sparse-vector conversion helpers used by slice builders.
pub fn dense_to_sparse(v: &[Rat]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn sparse_to_dense(v: &SparseVec, len: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); len];
    for (c, x) in v {
        out[*c] = x.clone();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn m(rows: usize, cols: usize, entries: &[(usize, usize, i64)]) -> SparseMatrix {
        let mut out = SparseMatrix::zero(rows, cols);
        for &(r, c, v) in entries {
            out.set(r, c, rat(v));
        }
        out
    }

    #[test]
    fn rank_examples() {
        assert_eq!(
            m(2, 2, &[(0, 0, 1), (0, 1, 2), (1, 0, 2), (1, 1, 4)]).rank(),
            1
        );
        assert_eq!(SparseMatrix::zero(3, 5).rank(), 0);
        for n in [1, 4, 7] {
            assert_eq!(SparseMatrix::identity(n).rank(), n);
        }
    }

    #[test]
    fn rank_strategies_agree() {
        let samples = [
            m(
                3,
                3,
                &[(0, 0, 1), (0, 2, 3), (1, 1, 5), (2, 0, 2), (2, 2, 6)],
            ),
            m(
                4,
                3,
                &[(0, 0, 2), (1, 0, 4), (2, 1, 1), (3, 2, 7), (0, 2, 1)],
            ),
            SparseMatrix::zero(5, 5),
            SparseMatrix::identity(6),
        ];
        for s in &samples {
            assert_eq!(s.rank(), s.rank_dense());
        }
    }

    #[test]
    fn kernel_examples() {
        let k = m(1, 2, &[(0, 0, 1), (0, 1, 1)]).kernel_basis();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![rat(-1), rat(1)]);

        assert!(SparseMatrix::identity(4).kernel_basis().is_empty());
        assert!(m(1, 1, &[(0, 0, 2)]).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let a = m(
            2,
            4,
            &[(0, 0, 1), (0, 1, 2), (0, 3, 1), (1, 1, 1), (1, 2, -1)],
        );
        let ker = a.kernel_basis();
        assert_eq!(ker.len(), a.cols() - a.rank());
        for v in &ker {
            assert!(a.mul_vec(v).unwrap().iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn solve_examples() {
        let a = m(1, 1, &[(0, 0, 2)]);
        assert_eq!(a.solve(&[rat(6)]).unwrap(), Some(vec![rat(3)]));

        let b = m(2, 1, &[(0, 0, 1)]);
        assert_eq!(b.solve(&[rat(0), rat(1)]).unwrap(), None);

        let z = SparseMatrix::zero(2, 3);
        assert_eq!(z.solve(&[rat(0), rat(0)]).unwrap(), Some(vec![rat(0); 3]));

        assert!(matches!(
            a.solve(&[rat(1), rat(2)]),
            Err(ExactqError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn solve_cross_checked_by_rank() {
        let a = m(3, 2, &[(0, 0, 1), (1, 1, 2), (2, 0, 1), (2, 1, 2)]);
        for v in [
            vec![rat(1), rat(2), rat(3)],
            vec![rat(1), rat(0), rat(2)],
            vec![rat(2), rat(2), rat(3)],
        ] {
            let x = a.solve(&v).unwrap();
            // rank([A|v]) == rank(A) iff v in span.
            let mut aug = SparseMatrix::zero(3, 3);
            for (r, row) in a.data.iter().enumerate() {
                for (c, val) in row {
                    aug.set(r, *c, val.clone());
                }
            }
            for (r, val) in v.iter().enumerate() {
                aug.set(r, 2, val.clone());
            }
            assert_eq!(x.is_some(), aug.rank() == a.rank());
            if let Some(x) = x {
                assert_eq!(a.mul_vec(&x).unwrap(), v);
            }
        }
    }

    #[test]
    fn homology_dim_examples() {
        let z3 = SparseMatrix::zero(3, 3);
        assert_eq!(homology_dim(&z3, &z3).unwrap(), 3);

        let id = SparseMatrix::identity(2);
        let from_above = SparseMatrix::zero(2, 2);
        assert_eq!(homology_dim(&from_above, &id).unwrap(), 0);

        let d_in = m(1, 1, &[(0, 0, 2)]);
        let d_out = SparseMatrix::zero(1, 1);
        assert_eq!(homology_dim(&d_in, &d_out).unwrap(), 0);

        assert_eq!(homology_dim(&id, &id), Err(ExactqError::NotAComplex));
    }

    #[test]
    fn echelon_reduces_largest_first() {
        // Rows e0+e2 and 2*e1: pivots land on columns 2 and 1, so reduction
        // keeps column 0 as the quotient representative.
        let r1: SparseVec = [(0, rat(1)), (2, rat(1))].into_iter().collect();
        let r2: SparseVec = [(1, rat(2))].into_iter().collect();
        let e = Echelon::from_rows([r1, r2]);
        assert_eq!(e.rank(), 2);
        assert!(e.is_pivot(2) && e.is_pivot(1) && !e.is_pivot(0));

        let v: SparseVec = [(1, rat(-2))].into_iter().collect();
        assert!(e.reduce(v).is_empty());

        let w: SparseVec = [(2, rat(3))].into_iter().collect();
        let red = e.reduce(w);
        assert_eq!(red, [(0, rat(-3))].into_iter().collect::<SparseVec>());
    }

    #[test]
    fn ratio_arithmetic_in_elimination() {
        let a = m(2, 2, &[(0, 0, 2), (0, 1, 3), (1, 0, 5), (1, 1, 7)]);
        assert_eq!(a.rank(), 2);
        let x = a.solve(&[ratio(1, 2), ratio(1, 3)]).unwrap().unwrap();
        assert_eq!(a.mul_vec(&x).unwrap(), vec![ratio(1, 2), ratio(1, 3)]);
    }
}

//! The chain maps between the complexes, verified map slices, the two short
//! exact sequences with their long exact sequences, and the end-to-end
//! Godbillon-Vey verification pipeline.

pub mod gv;
pub mod les;

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::complexes::{ops, BuildError, GradedSlice};
use crate::exactq::{sparse_to_dense, LinearSolver, SparseMatrix};
use crate::liealg::{AssocPresentation, LiePresentation, PbwMemo};
use crate::rational::{rat, ratio, Rat};
use crate::words::{wedge_normalize, Chain, Letter, PbwMonomial, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapError {
    NotInKernel,
    NotHomogeneous,
    NotAChainMap { degree: usize },
    LiftFailed { degree: usize },
    NotACycle { degree: usize },
    Inconsistent(String),
}

impl fmt::Display for MapError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapError::NotInKernel => write!(f, "chain is not in the kernel of the projection"),
            MapError::NotHomogeneous => write!(f, "chain mixes tensor degrees"),
            MapError::NotAChainMap { degree } => {
                write!(
                    f,
                    "map does not commute with differentials at degree {degree}"
                )
            }
            MapError::LiftFailed { degree } => {
                write!(
                    f,
                    "projection is not surjective on the slice at degree {degree}"
                )
            }
            MapError::NotACycle { degree } => write!(f, "chain is not a cycle at degree {degree}"),
            MapError::Inconsistent(m) => write!(f, "internal consistency error: {m}"),
        }
    }
}

impl From<BuildError> for MapError {
    fn from(e: BuildError) -> MapError {
        MapError::Inconsistent(e.to_string())
    }
}

pub type MapResult<T> = core::result::Result<T, MapError>;

/// All permutations of `0..n` in lexicographic order, with signs.
pub fn permutations_with_sign(n: usize) -> Vec<(Vec<usize>, i32)> {
    fn rec(
        items: &mut Vec<usize>,
        prefix: &mut Vec<usize>,
        sign: i32,
        out: &mut Vec<(Vec<usize>, i32)>,
    ) {
        if items.is_empty() {
            out.push((prefix.clone(), sign));
            return;
        }
        for k in 0..items.len() {
            let v = items.remove(k);
            prefix.push(v);
            // removing position k applies k transpositions
            let s = if k % 2 == 0 { sign } else { -sign };
            rec(items, prefix, s, out);
            prefix.pop();
            items.insert(k, v);
        }
    }
    let mut out = Vec::new();
    rec(&mut (0..n).collect(), &mut Vec::new(), 1, &mut out);
    out
}

/// Word-wise wedge projection `g^{⊗n} → g^{∧n}` with normalization signs.
pub fn pi1(c: &Chain) -> Chain {
    c.map_words(|w| {
        let Word::Tensor(ls) = w else {
            panic!("expected tensor words")
        };
        match wedge_normalize(ls) {
            Some((s, sorted)) => Chain::from_term(Word::Wedge(sorted), rat(s.into())),
            None => Chain::zero(),
        }
    })
}

/// Projection to canonical cyclic-orbit representatives.
pub fn pi2(c: &Chain) -> Chain {
    ops::cyclic_normalize(c)
}

fn antisymmetrize_tail(letters: &[Letter]) -> Chain {
    let n = letters.len() - 1;
    let mut out = Chain::zero();
    for (perm, sign) in permutations_with_sign(n) {
        let mut ls = Vec::with_capacity(letters.len());
        ls.push(letters[0].clone());
        for &p in &perm {
            ls.push(letters[1 + p].clone());
        }
        out.add_term(Word::Tensor(ls), rat(sign.into()));
    }
    out
}

/// `θ(a_0∧…∧a_n) = Σ_{σ∈S_n} sgn(σ) (a_0, a_{σ^{-1}(1)}, …)`, landing in the
/// cyclic quotient (canonical representatives).
pub fn theta(c: &Chain) -> Chain {
    ops::cyclic_normalize(&theta_raw(c))
}

/// The same antisymmetrization before projecting to the cyclic quotient.
pub fn theta_raw(c: &Chain) -> Chain {
    c.map_words(|w| {
        let Word::Wedge(ls) = w else {
            panic!("expected wedge words")
        };
        if ls.is_empty() {
            return Chain::from_word(Word::Tensor(Vec::new()));
        }
        antisymmetrize_tail(ls)
    })
}

/// `φ(a_0, a_1, …, a_n) = Σ_{σ∈S_n} sgn(σ) (a_0, a_{σ^{-1}(1)}, …)` into the
/// Hochschild complex.
pub fn phi(c: &Chain) -> Chain {
    c.map_words(|w| {
        let Word::Tensor(ls) = w else {
            panic!("expected tensor words")
        };
        if ls.is_empty() {
            return Chain::from_word(w.clone());
        }
        antisymmetrize_tail(ls)
    })
}

fn gens_to_monos(letters: &[Letter]) -> Vec<Letter> {
    letters
        .iter()
        .map(|l| match l {
            Letter::Gen(i) => Letter::Mono(PbwMonomial::generator(*i)),
            Letter::Mono(_) => panic!("expected generator letters"),
        })
        .collect()
}

/// Inclusion of the Lie algebra into its enveloping algebra on tensor words.
pub fn mu1(c: &Chain) -> Chain {
    c.map_words(|w| {
        let Word::Tensor(ls) = w else {
            panic!("expected tensor words")
        };
        Chain::from_word(Word::Tensor(gens_to_monos(ls)))
    })
}

/// The same inclusion on wedge words.
pub fn mu2(c: &Chain) -> Chain {
    c.map_words(|w| {
        let Word::Wedge(ls) = w else {
            panic!("expected wedge words")
        };
        Chain::from_word(Word::Wedge(gens_to_monos(ls)))
    })
}

/// Chain-level `α`: `(1/n) b' h φ` on a chain in `ker π_1` of tensor degree
/// `n+1`. Returns the canonical representative in `A^{⊗n}`; classes in the
/// norm-quotient model are compared through [`ops::reduce_mod_n_image`].
pub fn alpha_chain(alg: &AssocPresentation, x: &Chain) -> MapResult<Chain> {
    if !pi1(x).is_zero() {
        return Err(MapError::NotInKernel);
    }
    if x.is_zero() {
        return Ok(Chain::zero());
    }
    let mut sizes = x.words().map(Word::degree);
    let first = sizes.next().expect("nonzero chain");
    if sizes.any(|s| s != first) {
        return Err(MapError::NotHomogeneous);
    }
    let n = first - 1;
    if n == 0 {
        return Ok(Chain::zero());
    }
    let mut memo = PbwMemo::new();
    let out = ops::b_prime(alg, &ops::h_operator(&phi(x)), &mut memo);
    Ok(out.scale(&ratio(1, n as i64)))
}

/// Quasi-isomorphism from the `(b, B)` total complex into the `(b, b')`
/// bicomplex: column `2c` receives `x_c` and column `2c-1` receives `sN x_c`.
pub fn iota(alg: &AssocPresentation, x: &[Chain]) -> Vec<Chain> {
    if x.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Chain::zero(); 2 * x.len() - 1];
    for (c, xc) in x.iter().enumerate() {
        out[2 * c] = out[2 * c].add(xc);
        if c >= 1 {
            let sn = ops::extra_s(alg, &ops::cyclic_n(xc));
            out[2 * c - 1] = out[2 * c - 1].add(&sn);
        }
    }
    out
}

/// Natural projection from the `(b, b')` bicomplex to the cyclic quotient:
/// keep the first (`b`) column, project to coinvariants.
pub fn p_project(y: &[Chain]) -> Chain {
    match y.first() {
        Some(c) => ops::cyclic_normalize(c),
        None => Chain::zero(),
    }
}

/// Total differential of the mixed complex: `D(x)_c = δ(x_c) + d(x_{c+1})`.
pub fn mixed_total_d(lie: &LiePresentation, x: &[Chain]) -> Vec<Chain> {
    let mut out = vec![Chain::zero(); x.len()];
    for c in 0..x.len() {
        out[c] = ops::mixed_delta(lie, &x[c]);
        if c + 1 < x.len() {
            out[c] = out[c].add(&ops::kahler_d(&x[c + 1]));
        }
    }
    out
}

/// Total differential of the `(b, B)` complex: `D(x)_c = b(x_c) + B(x_{c+1})`.
pub fn bb_total_d(alg: &AssocPresentation, x: &[Chain]) -> Vec<Chain> {
    let mut memo = PbwMemo::new();
    let mut out = vec![Chain::zero(); x.len()];
    for c in 0..x.len() {
        out[c] = ops::hochschild_b(alg, &x[c], &mut memo);
        if c + 1 < x.len() {
            out[c] = out[c].add(&ops::connes_b(alg, &x[c + 1]));
        }
    }
    out
}

/// Total differential of the `(b, b')` bicomplex: columns alternate `b` and
/// `-b'`; rows alternate `1 - t` (out of odd columns) and `N`.
pub fn bbprime_total_d(alg: &AssocPresentation, y: &[Chain]) -> Vec<Chain> {
    let mut memo = PbwMemo::new();
    let mut out = vec![Chain::zero(); y.len()];
    for p in 0..y.len() {
        let vert = if p % 2 == 0 {
            ops::hochschild_b(alg, &y[p], &mut memo)
        } else {
            ops::b_prime(alg, &y[p], &mut memo).neg()
        };
        out[p] = vert;
        if p + 1 < y.len() {
            let horiz = if (p + 1) % 2 == 1 {
                y[p + 1].sub(&ops::cyclic_t(&y[p + 1]))
            } else {
                ops::cyclic_n(&y[p + 1])
            };
            out[p] = out[p].add(&horiz);
        }
    }
    out
}

/// A chain map restricted to slices: one matrix per source degree, verified
/// to commute with the differentials at construction.
pub struct ChainMapSlice {
    /// `matrices[n]` maps source degree `n` to target degree `n - shift`.
    pub matrices: Vec<SparseMatrix>,
    pub shift: usize,
}

impl ChainMapSlice {
    /// Builds and verifies `target_d ∘ f = f ∘ source_d` degree-wise.
    pub fn build(
        source: &GradedSlice,
        target: &GradedSlice,
        shift: usize,
        mut f: impl FnMut(&Chain) -> Chain,
    ) -> MapResult<ChainMapSlice> {
        let mut matrices = Vec::new();
        for n in 0..=source.max_degree {
            let Some(tn) = n.checked_sub(shift) else {
                matrices.push(SparseMatrix::zero(0, source.dim(n)));
                continue;
            };
            if tn > target.max_degree {
                return Err(MapError::Inconsistent("target slice too short".to_string()));
            }
            let tcell = target.cell(tn);
            let mut cols = Vec::with_capacity(source.dim(n));
            for b in source.cell(n).basis() {
                let coords = tcell.coords(&f(b))?;
                cols.push(coords.into_iter().collect::<Vec<_>>());
            }
            matrices.push(SparseMatrix::from_columns(tcell.dim(), &cols));
        }
        let map = ChainMapSlice { matrices, shift };
        for n in 1..=source.max_degree {
            let Some(tn) = n.checked_sub(shift) else {
                continue;
            };
            if tn == 0 {
                continue;
            }
            let lhs = target.diff(tn).mul(&map.matrices[n]).expect("shape");
            let rhs = map.matrices[n - 1].mul(source.diff(n)).expect("shape");
            if lhs != rhs {
                return Err(MapError::NotAChainMap { degree: n });
            }
        }
        Ok(map)
    }

    pub fn matrix(&self, source_degree: usize) -> &SparseMatrix {
        &self.matrices[source_degree]
    }
}

/// Homology of one degree of a slice, with a solver expressing any cycle's
/// class in the representative basis (boundary parts are discarded).
pub struct HomologySpace {
    pub degree: usize,
    pub reps: Vec<Chain>,
    dim_cell: usize,
    solver: LinearSolver,
}

impl HomologySpace {
    pub fn new(slice: &GradedSlice, degree: usize) -> HomologySpace {
        use crate::exactq::{dense_to_sparse, Echelon};
        let d_out = slice.diff(degree);
        let kernel = d_out.kernel_basis();
        let d_in = slice.diff_into(degree);
        let image_cols = d_in.image_column_indices();
        let mut ech = Echelon::new();
        for &c in &image_cols {
            ech.insert(dense_to_sparse(&d_in.column(c)));
        }
        let mut reps = Vec::new();
        let mut rep_vecs = Vec::new();
        for v in &kernel {
            if ech.insert(dense_to_sparse(v)) {
                reps.push(slice.cell(degree).chain_dense(v));
                rep_vecs.push(v.clone());
            }
        }
        // columns: representatives first, then an image basis
        let dim_cell = slice.dim(degree);
        let mut cols: Vec<Vec<(usize, Rat)>> = Vec::new();
        for v in &rep_vecs {
            cols.push(sparse_entries(v));
        }
        for &c in &image_cols {
            cols.push(sparse_entries(&d_in.column(c)));
        }
        let solver = LinearSolver::new(&SparseMatrix::from_columns(dim_cell, &cols));
        HomologySpace {
            degree,
            reps,
            dim_cell,
            solver,
        }
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// Class coordinates of a cycle given by dense cell coordinates.
    pub fn class_of_coords(&self, v: &[Rat]) -> MapResult<Vec<Rat>> {
        debug_assert_eq!(v.len(), self.dim_cell);
        let x = self.solver.solve(v).ok_or(MapError::NotACycle {
            degree: self.degree,
        })?;
        Ok(x[..self.reps.len()].to_vec())
    }

    /// Class coordinates of a cycle chain living in the slice's cell.
    pub fn class_of_chain(&self, slice: &GradedSlice, z: &Chain) -> MapResult<Vec<Rat>> {
        if self.dim_cell == 0 {
            return if z.is_zero() {
                Ok(Vec::new())
            } else {
                Err(MapError::NotACycle {
                    degree: self.degree,
                })
            };
        }
        let coords = slice.cell(self.degree).coords(z)?;
        self.class_of_coords(&sparse_to_dense(&coords, self.dim_cell))
    }
}

fn sparse_entries(v: &[Rat]) -> Vec<(usize, Rat)> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

/// Boundary membership with witness: solves `d(w) = z` in the slice and
/// returns the witness chain, or `None` when `z` is not a boundary.
pub fn boundary_witness(slice: &GradedSlice, degree: usize, z: &Chain) -> MapResult<Option<Chain>> {
    let coords = slice.cell(degree).coords(z)?;
    let dense = sparse_to_dense(&coords, slice.dim(degree));
    if degree >= slice.max_degree {
        return Ok(None);
    }
    let d_in = slice.diff(degree + 1);
    match d_in.solve(&dense) {
        Ok(Some(w)) => Ok(Some(slice.cell(degree + 1).chain_dense(&w))),
        Ok(None) => Ok(None),
        Err(e) => Err(MapError::Inconsistent(e.to_string())),
    }
}

/// Induced map on homology via a representative chase: each source
/// representative is pushed through `f` and re-expressed in the target's
/// representative basis (equality up to boundaries, certified by the solve).
pub fn induced_on_homology(
    source: &HomologySpace,
    target: (&GradedSlice, &HomologySpace),
    mut f: impl FnMut(&Chain) -> Chain,
) -> MapResult<SparseMatrix> {
    let mut cols = Vec::with_capacity(source.dim());
    for r in &source.reps {
        let image = f(r);
        let class = target.1.class_of_chain(target.0, &image)?;
        cols.push(sparse_entries(&class));
    }
    Ok(SparseMatrix::from_columns(target.1.dim(), &cols))
}

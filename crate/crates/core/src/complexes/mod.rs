//! Chain complexes as graded slices with explicit sparse differentials, and
//! their homology.
//!
//! A [`GradedSlice`] is a finite ordered basis for each degree of one
//! (complex, weight, length) cell together with the differential matrices
//! between consecutive degrees; `d ∘ d = 0` is verified at build time.
//! Quotient complexes (cyclic coinvariants, forms modulo `Im d`) choose
//! canonical orbit/coset representatives; kernel subcomplexes carry an
//! echelonized chain basis.

pub mod ops;

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::exactq::{dense_to_sparse, SparseMatrix, SparseVec};
use crate::liealg::{AssocPresentation, LiePresentation, PbwMemo};
use crate::rational::Rat;
use crate::words::{
    form_words_capped, form_words_exact, tensor_gen_words, tensor_mono_words, wedge_gen_words,
    wedge_mono_words, wedge_normalize, Chain, GenSet, Letter, Word, WordKind,
};

/// A Lie structure for the Leibniz/exterior complexes: either a Lie
/// presentation proper, or an associative algebra with its commutator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LieLike {
    Lie(LiePresentation),
    Commutator(AssocPresentation),
}

impl LieLike {
    pub fn gen_set(&self) -> GenSet {
        match self {
            LieLike::Lie(l) => l.gen_set(),
            LieLike::Commutator(a) => a.gen_set(),
        }
    }

    pub fn graded(&self) -> bool {
        match self {
            LieLike::Lie(l) => l.graded(),
            LieLike::Commutator(a) => a.graded(),
        }
    }

    /// Whether tensor slots hold PBW monomials.
    pub fn mono_letters(&self) -> bool {
        match self {
            LieLike::Lie(_) => false,
            LieLike::Commutator(a) => a.mono_letters(),
        }
    }

    pub fn names(&self) -> Option<&[String]> {
        match self {
            LieLike::Lie(l) => l.names(),
            LieLike::Commutator(a) => a.names(),
        }
    }

    pub fn letter_bracket(&self, a: &Letter, b: &Letter, memo: &mut PbwMemo) -> Vec<(Letter, Rat)> {
        match self {
            LieLike::Lie(l) => {
                let (Letter::Gen(i), Letter::Gen(j)) = (a, b) else {
                    panic!("Lie presentations use bare generator letters");
                };
                l.bracket_gen(*i, *j)
                    .into_iter()
                    .map(|(k, c)| (Letter::Gen(k), c))
                    .collect()
            }
            LieLike::Commutator(alg) => alg.letter_commutator(a, b, memo),
        }
    }
}

/// The chain complexes of the suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplexId {
    /// Leibniz complex `(g^{⊗*}, d)`, augmented by `k ← g`.
    Cl(LieLike),
    /// Exterior (Chevalley-Eilenberg) complex `(g^{∧*}, d)`.
    Lambda(LieLike),
    /// Kernel of the projection `g^{⊗(n+2)} → g^{∧(n+2)}`, reindexed so that
    /// its degree-`n` cell sits under tensor degree `n+2`.
    KerPi1Shift2(LieLike),
    /// Hochschild complex `(A^{⊗(*+1)}, b)`.
    Chh(AssocPresentation),
    /// Connes' cyclic quotient `(A^{⊗(*+1)}/(1-t), b)`.
    CLambda(AssocPresentation),
    /// Kernel of the cyclic projection, degree-aligned with `Chh`.
    KerPi2(AssocPresentation),
    /// The bar column `(A^{⊗(*+1)}, b')`.
    BPrimeColumn(AssocPresentation),
    /// Differential forms `(S(g) ⊗ Λ*(g), δ)`.
    MixedOmega(LiePresentation),
    /// Forms modulo `Im d`, with the induced `δ`.
    MixedOmegaModImD(LiePresentation),
}

impl ComplexId {
    pub fn family(&self) -> &'static str {
        match self {
            ComplexId::Cl(_) => "leibniz",
            ComplexId::Lambda(_) => "lie",
            ComplexId::KerPi1Shift2(_) => "ker-pi1",
            ComplexId::Chh(_) => "hochschild",
            ComplexId::CLambda(_) => "cyclic",
            ComplexId::KerPi2(_) => "ker-pi2",
            ComplexId::BPrimeColumn(_) => "bprime",
            ComplexId::MixedOmega(_) => "mixed",
            ComplexId::MixedOmegaModImD(_) => "mixed-mod-d",
        }
    }

    pub fn names(&self) -> Option<&[String]> {
        match self {
            ComplexId::Cl(l) | ComplexId::Lambda(l) | ComplexId::KerPi1Shift2(l) => l.names(),
            ComplexId::Chh(a)
            | ComplexId::CLambda(a)
            | ComplexId::KerPi2(a)
            | ComplexId::BPrimeColumn(a) => a.names(),
            ComplexId::MixedOmega(l) | ComplexId::MixedOmegaModImD(l) => l.names(),
        }
    }

    /// Parser/renderer hint for the slice's basis words.
    pub fn word_kind(&self) -> WordKind {
        match self {
            ComplexId::Cl(l) | ComplexId::KerPi1Shift2(l) => {
                if l.mono_letters() {
                    WordKind::TensorMono
                } else {
                    WordKind::TensorGen
                }
            }
            ComplexId::Lambda(l) => {
                if l.mono_letters() {
                    WordKind::WedgeMono
                } else {
                    WordKind::WedgeGen
                }
            }
            ComplexId::Chh(a)
            | ComplexId::CLambda(a)
            | ComplexId::KerPi2(a)
            | ComplexId::BPrimeColumn(a) => {
                if a.mono_letters() {
                    WordKind::TensorMono
                } else {
                    WordKind::TensorGen
                }
            }
            ComplexId::MixedOmega(_) | ComplexId::MixedOmegaModImD(_) => WordKind::Form,
        }
    }

    fn graded(&self) -> bool {
        match self {
            ComplexId::Cl(l) | ComplexId::Lambda(l) | ComplexId::KerPi1Shift2(l) => l.graded(),
            ComplexId::Chh(a)
            | ComplexId::CLambda(a)
            | ComplexId::KerPi2(a)
            | ComplexId::BPrimeColumn(a) => a.graded(),
            ComplexId::MixedOmega(l) | ComplexId::MixedOmegaModImD(l) => l.graded(),
        }
    }

    fn needs_length(&self) -> bool {
        match self {
            ComplexId::Cl(l) | ComplexId::Lambda(l) | ComplexId::KerPi1Shift2(l) => {
                l.mono_letters()
            }
            ComplexId::Chh(a)
            | ComplexId::CLambda(a)
            | ComplexId::KerPi2(a)
            | ComplexId::BPrimeColumn(a) => a.mono_letters(),
            // monomial coefficients are unbounded even over a finite algebra
            ComplexId::MixedOmega(_) | ComplexId::MixedOmegaModImD(_) => true,
        }
    }

    /// The raw (ambient) differential; quotient complexes still need their
    /// normalization applied afterwards.
    pub fn apply_raw(&self, c: &Chain, memo: &mut PbwMemo) -> Chain {
        match self {
            ComplexId::Cl(l) | ComplexId::KerPi1Shift2(l) => ops::leibniz_d(l, c, memo),
            ComplexId::Lambda(l) => ops::ce_d(l, c, memo),
            ComplexId::Chh(a) | ComplexId::CLambda(a) | ComplexId::KerPi2(a) => {
                ops::hochschild_b(a, c, memo)
            }
            ComplexId::BPrimeColumn(a) => ops::b_prime(a, c, memo),
            ComplexId::MixedOmega(l) | ComplexId::MixedOmegaModImD(l) => ops::mixed_delta(l, c),
        }
    }

    /// Projection to the complex's canonical representatives (identity for
    /// non-quotient complexes).
    pub fn normalize(&self, c: &Chain) -> Chain {
        match self {
            ComplexId::CLambda(_) => ops::cyclic_normalize(c),
            ComplexId::MixedOmegaModImD(l) => ops::reduce_mod_im_d(l, c),
            _ => c.clone(),
        }
    }

    /// The differential of the complex on canonical representatives.
    pub fn apply(&self, c: &Chain) -> Chain {
        let mut memo = PbwMemo::new();
        self.normalize(&self.apply_raw(&self.normalize(c), &mut memo))
    }
}

/// Is `d(c) = 0` in the named complex?
pub fn is_cycle(id: &ComplexId, c: &Chain) -> bool {
    id.apply(c).is_zero()
}

/// Does `d(w) = x` hold exactly (after quotient normalization)?
pub fn boundary_witness_check(id: &ComplexId, x: &Chain, w: &Chain) -> bool {
    id.apply(w) == id.normalize(x)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BuildError {
    /// The requested slice is infinite; names the missing grading constraint.
    InfiniteSlice {
        complex: String,
        missing: &'static str,
    },
    /// Consecutive differentials failed to compose to zero.
    NotAComplex { complex: String, degree: usize },
    /// A chain left the slice (or a subspace membership check failed).
    Coords(String),
}

impl fmt::Display for BuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildError::InfiniteSlice { complex, missing } => {
                write!(
                    f,
                    "slice of `{complex}` is infinite without a {missing} constraint"
                )
            }
            BuildError::NotAComplex { complex, degree } => {
                write!(
                    f,
                    "`{complex}`: differentials do not compose to zero at degree {degree}"
                )
            }
            BuildError::Coords(msg) => write!(f, "coordinate error: {msg}"),
        }
    }
}

pub type BuildResult<T> = core::result::Result<T, BuildError>;

/// Weight/length constraints cutting a finite slice. `length` caps the total
/// symmetric-algebra exponent, except for `MixedOmegaModImD`, where the
/// length splitting is exact.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Grading {
    pub weight: Option<i64>,
    pub length: Option<u32>,
}

impl Grading {
    pub fn weight(w: i64) -> Grading {
        Grading {
            weight: Some(w),
            length: None,
        }
    }

    pub fn weight_length(w: i64, l: u32) -> Grading {
        Grading {
            weight: Some(w),
            length: Some(l),
        }
    }

    pub fn ungraded() -> Grading {
        Grading::default()
    }
}

/// How an arbitrary chain is expressed in a cell's coordinates.
#[derive(Clone, Debug)]
enum CellModel {
    /// Plain word basis.
    Words,
    /// Cyclic-orbit representatives; chains are normalized before lookup.
    CyclicQuot,
    /// Coset representatives modulo `Im d`; chains are reduced before lookup.
    ModImD(LiePresentation),
    /// Kernel subspace with an echelonized basis; the basis vectors are
    /// indexed by the free columns of the projection's RREF, so coordinates
    /// are read off directly and membership is certified by reconstruction.
    Kernel {
        ambient: Vec<Word>,
        free_cols: Vec<usize>,
    },
}

/// One degree of a graded slice.
#[derive(Clone, Debug)]
pub struct SliceCell {
    /// Ordered basis; unit-coefficient single words except for kernel cells.
    basis: Vec<Chain>,
    /// Basis labels for word-based cells (equal to `basis` word lists).
    words: Vec<Word>,
    model: CellModel,
}

impl SliceCell {
    fn from_words(words: Vec<Word>, model: CellModel) -> SliceCell {
        let basis = words.iter().map(|w| Chain::from_word(w.clone())).collect();
        SliceCell {
            basis,
            words,
            model,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Ordered basis chains.
    pub fn basis(&self) -> &[Chain] {
        &self.basis
    }

    /// Basis words of word-based cells; kernel cells have none.
    pub fn basis_words(&self) -> Option<&[Word]> {
        if matches!(self.model, CellModel::Kernel { .. }) {
            None
        } else {
            Some(&self.words)
        }
    }

    fn word_index(&self, w: &Word) -> BuildResult<usize> {
        self.words
            .binary_search(w)
            .map_err(|_| BuildError::Coords(alloc::format!("word not in cell: {w:?}")))
    }

    /// Coordinates of a chain in this cell's basis.
    pub fn coords(&self, c: &Chain) -> BuildResult<SparseVec> {
        match &self.model {
            CellModel::Words => {
                let mut v = SparseVec::new();
                for (w, x) in c.terms() {
                    v.insert(self.word_index(w)?, x.clone());
                }
                Ok(v)
            }
            CellModel::CyclicQuot => {
                let n = ops::cyclic_normalize(c);
                let mut v = SparseVec::new();
                for (w, x) in n.terms() {
                    v.insert(self.word_index(w)?, x.clone());
                }
                Ok(v)
            }
            CellModel::ModImD(lie) => {
                let n = ops::reduce_mod_im_d(lie, c);
                let mut v = SparseVec::new();
                for (w, x) in n.terms() {
                    v.insert(self.word_index(w)?, x.clone());
                }
                Ok(v)
            }
            CellModel::Kernel { ambient, free_cols } => {
                let mut coords = SparseVec::new();
                for (w, x) in c.terms() {
                    let ai = ambient.binary_search(w).map_err(|_| {
                        BuildError::Coords(alloc::format!("word not in ambient cell: {w:?}"))
                    })?;
                    if let Ok(k) = free_cols.binary_search(&ai) {
                        coords.insert(k, x.clone());
                    }
                }
                // membership certificate: the free coordinates reconstruct c
                let mut recon = Chain::zero();
                for (k, x) in &coords {
                    recon.add_scaled(&self.basis[*k], x);
                }
                if &recon != c {
                    return Err(BuildError::Coords(
                        "chain is not in the kernel subcomplex".to_string(),
                    ));
                }
                Ok(coords)
            }
        }
    }

    /// Chain represented by sparse coordinates.
    pub fn chain(&self, coords: &SparseVec) -> Chain {
        let mut out = Chain::zero();
        for (i, x) in coords {
            out.add_scaled(&self.basis[*i], x);
        }
        out
    }

    pub fn chain_dense(&self, coords: &[Rat]) -> Chain {
        let mut out = Chain::zero();
        for (i, x) in coords.iter().enumerate() {
            if !x.is_zero() {
                out.add_scaled(&self.basis[i], x);
            }
        }
        out
    }
}

/// A finite slice of a complex: per-degree bases and differentials.
#[derive(Clone, Debug)]
pub struct GradedSlice {
    pub id: ComplexId,
    pub grading: Grading,
    pub max_degree: usize,
    cells: Vec<SliceCell>,
    /// `diffs[n]` maps degree `n` to degree `n-1`; `diffs[0]` is the zero map
    /// out of degree 0.
    diffs: Vec<SparseMatrix>,
}

impl GradedSlice {
    pub fn dim(&self, degree: usize) -> usize {
        self.cells.get(degree).map_or(0, SliceCell::dim)
    }

    pub fn cell(&self, degree: usize) -> &SliceCell {
        &self.cells[degree]
    }

    pub fn diff(&self, degree: usize) -> &SparseMatrix {
        &self.diffs[degree]
    }

    /// The differential entering degree `n` (zero-width at the top).
    pub fn diff_into(&self, degree: usize) -> SparseMatrix {
        if degree < self.max_degree {
            self.diffs[degree + 1].clone()
        } else {
            SparseMatrix::zero(self.dim(degree), 0)
        }
    }
}

fn enum_cell_words(id: &ComplexId, grading: Grading, degree: usize) -> Vec<Word> {
    let cap = grading.length;
    let filter_cap = |words: Vec<Word>| -> Vec<Word> {
        match cap {
            Some(c) => words.into_iter().filter(|w| w.length() <= c).collect(),
            None => words,
        }
    };
    match id {
        ComplexId::Cl(l) => {
            if l.mono_letters() {
                tensor_mono_words(l.gen_set(), grading.weight, degree, cap.unwrap_or(0))
            } else {
                filter_cap(tensor_gen_words(l.gen_set(), grading.weight, degree))
            }
        }
        ComplexId::Lambda(l) => {
            if l.mono_letters() {
                wedge_mono_words(l.gen_set(), grading.weight, degree, cap.unwrap_or(0))
            } else {
                filter_cap(wedge_gen_words(l.gen_set(), grading.weight, degree))
            }
        }
        ComplexId::Chh(a)
        | ComplexId::CLambda(a)
        | ComplexId::KerPi2(a)
        | ComplexId::BPrimeColumn(a) => {
            if a.mono_letters() {
                tensor_mono_words(a.gen_set(), grading.weight, degree + 1, cap.unwrap_or(0))
            } else {
                filter_cap(tensor_gen_words(a.gen_set(), grading.weight, degree + 1))
            }
        }
        ComplexId::KerPi1Shift2(l) => {
            if l.mono_letters() {
                tensor_mono_words(l.gen_set(), grading.weight, degree + 2, cap.unwrap_or(0))
            } else {
                filter_cap(tensor_gen_words(l.gen_set(), grading.weight, degree + 2))
            }
        }
        ComplexId::MixedOmega(l) => {
            form_words_capped(l.gen_set(), grading.weight, degree, cap.unwrap_or(0))
        }
        ComplexId::MixedOmegaModImD(l) => {
            form_words_exact(l.gen_set(), grading.weight, degree, cap.unwrap_or(0))
        }
    }
}

fn build_cell(id: &ComplexId, grading: Grading, degree: usize) -> BuildResult<SliceCell> {
    match id {
        ComplexId::CLambda(_) => {
            let ambient = enum_cell_words(id, grading, degree);
            let mut reps: Vec<Word> = Vec::new();
            for w in &ambient {
                if let Some((rep, _)) = ops::cyclic_orbit_rep(w) {
                    if rep == *w {
                        reps.push(rep);
                    }
                }
            }
            Ok(SliceCell::from_words(reps, CellModel::CyclicQuot))
        }
        ComplexId::MixedOmegaModImD(lie) => {
            let ambient = enum_cell_words(id, grading, degree);
            let kept: Vec<Word> = if degree == 0 {
                ambient
            } else {
                // eliminate the image of the exterior derivative from one
                // length up, pivoting out the largest ambient words
                use crate::exactq::Echelon;
                let sources = form_words_exact(
                    lie.gen_set(),
                    grading.weight,
                    degree - 1,
                    grading.length.unwrap_or(0) + 1,
                );
                let index: BTreeMap<&Word, usize> = ambient.iter().zip(0..).collect();
                let mut ech = Echelon::new();
                for s in &sources {
                    let dv = ops::kahler_d(&Chain::from_word(s.clone()));
                    let row: SparseVec = dv.terms().map(|(w, x)| (index[w], x.clone())).collect();
                    ech.insert(row);
                }
                ambient
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !ech.is_pivot(*i))
                    .map(|(_, w)| w.clone())
                    .collect()
            };
            Ok(SliceCell::from_words(kept, CellModel::ModImD(lie.clone())))
        }
        ComplexId::KerPi1Shift2(l) => {
            let ambient = enum_cell_words(id, grading, degree);
            let target = if l.mono_letters() {
                wedge_mono_words(
                    l.gen_set(),
                    grading.weight,
                    degree + 2,
                    grading.length.unwrap_or(0),
                )
            } else {
                let cap = grading.length;
                wedge_gen_words(l.gen_set(), grading.weight, degree + 2)
                    .into_iter()
                    .filter(|w| cap.is_none_or(|c| w.length() <= c))
                    .collect()
            };
            let tindex: BTreeMap<&Word, usize> = target.iter().zip(0..).collect();
            let mut cols = Vec::with_capacity(ambient.len());
            for w in &ambient {
                let Word::Tensor(ls) = w else { unreachable!() };
                match wedge_normalize(ls) {
                    Some((s, sorted)) => {
                        let tw = Word::Wedge(sorted);
                        cols.push(vec![(tindex[&tw], crate::rational::rat(s.into()))]);
                    }
                    None => cols.push(Vec::new()),
                }
            }
            let proj = SparseMatrix::from_columns(target.len(), &cols);
            Ok(kernel_cell(ambient, &proj))
        }
        ComplexId::KerPi2(_) => {
            let ambient = enum_cell_words(id, grading, degree);
            let mut reps: Vec<Word> = Vec::new();
            for w in &ambient {
                if let Some((rep, _)) = ops::cyclic_orbit_rep(w) {
                    if rep == *w {
                        reps.push(rep);
                    }
                }
            }
            let rindex: BTreeMap<&Word, usize> = reps.iter().zip(0..).collect();
            let mut cols = Vec::with_capacity(ambient.len());
            for w in &ambient {
                match ops::cyclic_orbit_rep(w) {
                    Some((rep, s)) => {
                        cols.push(vec![(rindex[&rep], crate::rational::rat(s.into()))])
                    }
                    None => cols.push(Vec::new()),
                }
            }
            let proj = SparseMatrix::from_columns(reps.len(), &cols);
            Ok(kernel_cell(ambient, &proj))
        }
        _ => Ok(SliceCell::from_words(
            enum_cell_words(id, grading, degree),
            CellModel::Words,
        )),
    }
}

fn kernel_cell(ambient: Vec<Word>, proj: &SparseMatrix) -> SliceCell {
    let kernel = proj.kernel_basis();
    let mut is_pivot = vec![false; proj.cols()];
    for c in proj.image_column_indices() {
        is_pivot[c] = true;
    }
    let free_cols: Vec<usize> = (0..proj.cols()).filter(|&c| !is_pivot[c]).collect();
    debug_assert_eq!(free_cols.len(), kernel.len());
    let basis: Vec<Chain> = kernel
        .iter()
        .map(|v| {
            let mut c = Chain::zero();
            for (i, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    c.add_term(ambient[i].clone(), x.clone());
                }
            }
            c
        })
        .collect();
    SliceCell {
        basis,
        words: Vec::new(),
        model: CellModel::Kernel { ambient, free_cols },
    }
}

/// Builds the slice for degrees `0..=max_degree`, checking `d ∘ d = 0`.
pub fn build_slice(
    id: &ComplexId,
    grading: Grading,
    max_degree: usize,
) -> BuildResult<GradedSlice> {
    if id.graded() && grading.weight.is_none() {
        return Err(BuildError::InfiniteSlice {
            complex: id.family().to_string(),
            missing: "weight",
        });
    }
    if id.needs_length() && grading.length.is_none() {
        return Err(BuildError::InfiniteSlice {
            complex: id.family().to_string(),
            missing: "length",
        });
    }
    let mut cells = Vec::with_capacity(max_degree + 1);
    for n in 0..=max_degree {
        cells.push(build_cell(id, grading, n)?);
    }
    let mut memo = PbwMemo::new();
    let mut diffs = Vec::with_capacity(max_degree + 1);
    diffs.push(SparseMatrix::zero(0, cells[0].dim()));
    for n in 1..=max_degree {
        let (source, target) = (&cells[n], &cells[n - 1]);
        let mut cols = Vec::with_capacity(source.dim());
        for b in source.basis() {
            let image = id.apply_raw(b, &mut memo);
            let coords = target.coords(&image)?;
            cols.push(coords.into_iter().collect::<Vec<_>>());
        }
        diffs.push(SparseMatrix::from_columns(target.dim(), &cols));
    }
    for n in 2..=max_degree {
        let comp = diffs[n - 1].mul(&diffs[n]).expect("shape mismatch");
        if !comp.is_zero() {
            return Err(BuildError::NotAComplex {
                complex: id.family().to_string(),
                degree: n,
            });
        }
    }
    Ok(GradedSlice {
        id: id.clone(),
        grading,
        max_degree,
        cells,
        diffs,
    })
}

/// Per-degree cycle/boundary/homology dimensions with representatives.
#[derive(Clone, Debug)]
pub struct DegreeHomology {
    pub degree: usize,
    pub cycles: usize,
    pub boundaries: usize,
    pub homology: usize,
    pub representatives: Vec<Chain>,
}

#[derive(Clone, Debug)]
pub struct HomologyReport {
    pub rows: Vec<DegreeHomology>,
}

/// Homology of every degree of the slice. The top degree sees no incoming
/// boundaries beyond the built range; build one degree past what you report.
pub fn homology(slice: &GradedSlice) -> HomologyReport {
    let mut rows = Vec::with_capacity(slice.max_degree + 1);
    for n in 0..=slice.max_degree {
        rows.push(homology_at(slice, n));
    }
    HomologyReport { rows }
}

fn homology_at(slice: &GradedSlice, n: usize) -> DegreeHomology {
    use crate::exactq::Echelon;
    let d_out = slice.diff(n);
    let kernel = d_out.kernel_basis();
    let d_in = slice.diff_into(n);
    let mut ech = Echelon::new();
    for c in 0..d_in.cols() {
        ech.insert(dense_to_sparse(&d_in.column(c)));
    }
    let boundaries = ech.rank();
    let mut reps = Vec::new();
    for v in &kernel {
        if ech.insert(dense_to_sparse(v)) {
            reps.push(slice.cell(n).chain_dense(v));
        }
    }
    debug_assert_eq!(reps.len(), kernel.len() - boundaries);
    DegreeHomology {
        degree: n,
        cycles: kernel.len(),
        boundaries,
        homology: kernel.len() - boundaries,
        representatives: reps,
    }
}

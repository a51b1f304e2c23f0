//! Short exact sequences of complexes, their long exact sequences via the
//! connecting homomorphism, and the ladder between the relative and cyclic
//! sequences.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::Zero;

use crate::complexes::{build_slice, ComplexId, GradedSlice, Grading, LieLike};
use crate::exactq::{sparse_to_dense, SparseMatrix};
use crate::liealg::AssocPresentation;
use crate::rational::Rat;
use crate::words::Chain;

use super::{
    induced_on_homology, phi, pi1, pi2, theta, ChainMapSlice, HomologySpace, MapError, MapResult,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SesKind {
    /// `0 → ker π_1 [2] → CL → Λ → 0`
    Pi1,
    /// `0 → ker π_2 → CHH → C^λ → 0`
    Pi2,
}

/// The three complexes of a short exact sequence, with the projection's
/// matrices verified to commute with the differentials.
pub struct SesSlices {
    pub kind: SesKind,
    /// Kernel subcomplex; its cell `m` sits at aligned degree `m + sub_shift`.
    pub sub: GradedSlice,
    pub sub_shift: usize,
    pub mid: GradedSlice,
    pub quot: GradedSlice,
    proj: ChainMapSlice,
}

impl SesSlices {
    fn project(&self, c: &Chain) -> Chain {
        match self.kind {
            SesKind::Pi1 => pi1(c),
            SesKind::Pi2 => pi2(c),
        }
    }

    fn sub_cell_degree(&self, aligned: usize) -> Option<usize> {
        aligned
            .checked_sub(self.sub_shift)
            .filter(|m| *m <= self.sub.max_degree)
    }

    /// Homology of the kernel complex at an aligned degree.
    pub fn sub_homology(&self, aligned: usize) -> HomologySpace {
        match self.sub_cell_degree(aligned) {
            Some(m) => HomologySpace::new(&self.sub, m),
            None => HomologySpace::empty(aligned),
        }
    }
}

impl HomologySpace {
    /// The zero space (used for degrees below a kernel complex's shift).
    pub fn empty(degree: usize) -> HomologySpace {
        let slice_dim = 0;
        let solver = crate::exactq::LinearSolver::new(&SparseMatrix::zero(slice_dim, 0));
        HomologySpace {
            degree,
            reps: Vec::new(),
            dim_cell: slice_dim,
            solver,
        }
    }
}

/// Builds the Leibniz/exterior sequence over a Lie structure. Cells run to
/// `max_degree` in the middle and quotient complexes.
pub fn build_ses_pi1(lie: &LieLike, grading: Grading, max_degree: usize) -> MapResult<SesSlices> {
    let mid = build_slice(&ComplexId::Cl(lie.clone()), grading, max_degree)?;
    let quot = build_slice(&ComplexId::Lambda(lie.clone()), grading, max_degree)?;
    let sub = build_slice(
        &ComplexId::KerPi1Shift2(lie.clone()),
        grading,
        max_degree.saturating_sub(2),
    )?;
    let proj = ChainMapSlice::build(&mid, &quot, 0, pi1)?;
    Ok(SesSlices {
        kind: SesKind::Pi1,
        sub,
        sub_shift: 2,
        mid,
        quot,
        proj,
    })
}

/// Builds the Hochschild/cyclic sequence over an associative presentation.
pub fn build_ses_pi2(
    alg: &AssocPresentation,
    grading: Grading,
    max_degree: usize,
) -> MapResult<SesSlices> {
    let mid = build_slice(&ComplexId::Chh(alg.clone()), grading, max_degree)?;
    let quot = build_slice(&ComplexId::CLambda(alg.clone()), grading, max_degree)?;
    let sub = build_slice(&ComplexId::KerPi2(alg.clone()), grading, max_degree)?;
    let proj = ChainMapSlice::build(&mid, &quot, 0, pi2)?;
    Ok(SesSlices {
        kind: SesKind::Pi2,
        sub,
        sub_shift: 0,
        mid,
        quot,
        proj,
    })
}

/// Snake-lemma connecting chain: lift the quotient cycle through the
/// projection, apply the middle differential, certify the result lands in
/// the kernel subcomplex, and return it.
pub fn connecting_chain(ses: &SesSlices, degree: usize, z: &Chain) -> MapResult<Chain> {
    let zc = ses.quot.cell(degree).coords(z)?;
    let zd = sparse_to_dense(&zc, ses.quot.dim(degree));
    // cycle precondition
    let dz = ses
        .quot
        .diff(degree)
        .mul_vec(&zd)
        .map_err(|e| MapError::Inconsistent(e.to_string()))?;
    if !dz.iter().all(Zero::is_zero) {
        return Err(MapError::NotACycle { degree });
    }
    if degree == 0 {
        // the snake lands one degree down, which is the zero space here
        return Ok(Chain::zero());
    }
    let lift = ses
        .proj
        .matrix(degree)
        .solve(&zd)
        .map_err(|e| MapError::Inconsistent(e.to_string()))?
        .ok_or(MapError::LiftFailed { degree })?;
    let dx = ses
        .mid
        .diff(degree)
        .mul_vec(&lift)
        .map_err(|e| MapError::Inconsistent(e.to_string()))?;
    let y = ses.mid.cell(degree - 1).chain_dense(&dx);
    // certify membership in the kernel subcomplex
    if !ses.project(&y).is_zero() {
        return Err(MapError::Inconsistent(
            "connecting chain is not in the kernel".to_string(),
        ));
    }
    match ses.sub_cell_degree(degree - 1) {
        Some(m) => {
            ses.sub.cell(m).coords(&y)?;
        }
        None => {
            // below the kernel complex's range the kernel is zero
            if !y.is_zero() {
                return Err(MapError::Inconsistent(
                    "nonzero connecting chain below the kernel range".to_string(),
                ));
            }
        }
    }
    Ok(y)
}

/// Connecting homomorphism on a homology class: the class of the snake chain
/// in the kernel complex's homology.
pub fn connecting_map(
    ses: &SesSlices,
    degree: usize,
    z: &Chain,
    target: &HomologySpace,
) -> MapResult<Vec<Rat>> {
    let y = connecting_chain(ses, degree, z)?;
    target.class_of_chain(&ses.sub, &y)
}

/// One position of an assembled long exact sequence.
#[derive(Clone, Debug)]
pub struct LesPosition {
    pub group: String,
    pub degree: usize,
    pub dim: usize,
    pub incoming_rank: usize,
    pub outgoing_kernel_dim: usize,
    pub composite_zero: bool,
    pub exact: bool,
}

#[derive(Clone, Debug, Default)]
pub struct LesReport {
    pub positions: Vec<LesPosition>,
}

impl LesReport {
    pub fn all_exact(&self) -> bool {
        !self.positions.is_empty() && self.positions.iter().all(|p| p.exact)
    }
}

/// Homology spaces and induced matrices of one assembled sequence.
pub struct LesData {
    pub max_degree: usize,
    pub sub_h: Vec<HomologySpace>,
    pub mid_h: Vec<HomologySpace>,
    pub quot_h: Vec<HomologySpace>,
    /// `incl[n]`: H_n(sub) → H_n(mid)
    pub incl: Vec<SparseMatrix>,
    /// `proj[n]`: H_n(mid) → H_n(quot)
    pub proj: Vec<SparseMatrix>,
    /// `conn[n]`: H_n(quot) → H_{n-1}(sub); `conn[0]` is the zero map.
    pub conn: Vec<SparseMatrix>,
}

/// Assembles the long exact sequence with homology computed for degrees
/// `0..=max_degree` (slices must have been built at least one degree past).
pub fn assemble_les(ses: &SesSlices, max_degree: usize) -> MapResult<(LesReport, LesData)> {
    let sub_h: Vec<HomologySpace> = (0..=max_degree).map(|n| ses.sub_homology(n)).collect();
    let mid_h: Vec<HomologySpace> = (0..=max_degree)
        .map(|n| HomologySpace::new(&ses.mid, n))
        .collect();
    let quot_h: Vec<HomologySpace> = (0..=max_degree)
        .map(|n| HomologySpace::new(&ses.quot, n))
        .collect();

    let mut incl = Vec::with_capacity(max_degree + 1);
    let mut proj = Vec::with_capacity(max_degree + 1);
    let mut conn = Vec::with_capacity(max_degree + 1);
    for n in 0..=max_degree {
        // kernel chains are middle chains; the inclusion is the identity
        let i = if sub_h[n].dim() == 0 {
            SparseMatrix::zero(mid_h[n].dim(), 0)
        } else {
            let mut cols = Vec::new();
            for r in &sub_h[n].reps {
                let class = mid_h[n].class_of_chain(&ses.mid, r)?;
                cols.push(super::sparse_entries(&class));
            }
            SparseMatrix::from_columns(mid_h[n].dim(), &cols)
        };
        incl.push(i);

        let p = induced_on_homology(&mid_h[n], (&ses.quot, &quot_h[n]), |c| ses.project(c))?;
        proj.push(p);

        let d = if n == 0 {
            SparseMatrix::zero(0, quot_h[0].dim())
        } else {
            let mut cols = Vec::new();
            for r in &quot_h[n].reps {
                let class = connecting_map(ses, n, r, &sub_h[n - 1])?;
                cols.push(super::sparse_entries(&class));
            }
            SparseMatrix::from_columns(sub_h[n - 1].dim(), &cols)
        };
        conn.push(d);
    }

    let mut positions = Vec::new();
    for n in (0..=max_degree).rev() {
        // at H_n(sub): incoming ∂_{n+1}, outgoing incl_n
        if n < max_degree {
            positions.push(position(
                format!("H_{n}(sub)"),
                n,
                sub_h[n].dim(),
                &conn[n + 1],
                &incl[n],
            ));
        }
        // at H_n(mid): incoming incl_n, outgoing proj_n
        positions.push(position(
            format!("H_{n}(mid)"),
            n,
            mid_h[n].dim(),
            &incl[n],
            &proj[n],
        ));
        // at H_n(quot): incoming proj_n, outgoing ∂_n
        positions.push(position(
            format!("H_{n}(quot)"),
            n,
            quot_h[n].dim(),
            &proj[n],
            &conn[n],
        ));
    }
    let report = LesReport { positions };
    Ok((
        report,
        LesData {
            max_degree,
            sub_h,
            mid_h,
            quot_h,
            incl,
            proj,
            conn,
        },
    ))
}

fn position(
    group: String,
    degree: usize,
    dim: usize,
    incoming: &SparseMatrix,
    outgoing: &SparseMatrix,
) -> LesPosition {
    let incoming_rank = incoming.rank();
    let outgoing_kernel_dim = outgoing.cols() - outgoing.rank();
    let composite_zero = outgoing.mul(incoming).map(|m| m.is_zero()).unwrap_or(false);
    LesPosition {
        group,
        degree,
        dim,
        incoming_rank,
        outgoing_kernel_dim,
        composite_zero,
        exact: composite_zero && incoming_rank == outgoing_kernel_dim,
    }
}

#[derive(Clone, Debug)]
pub struct SquareCheck {
    pub name: &'static str,
    pub degree: usize,
    pub pass: bool,
}

/// The verified ladder between the two long exact sequences.
pub struct LadderReport {
    /// LES of the Leibniz/exterior sequence of `A` as a Lie algebra.
    pub relative: LesReport,
    /// LES of the Hochschild/cyclic sequence of `A`.
    pub cyclic: LesReport,
    /// Homology-level square commutation, representative by representative.
    pub squares: Vec<SquareCheck>,
    /// Chain-level matrix identity `θ∘π_1 = π_2∘φ` per tensor degree.
    pub chain_squares: Vec<(usize, bool)>,
}

impl LadderReport {
    pub fn all_pass(&self) -> bool {
        self.relative.all_exact()
            && self.cyclic.all_exact()
            && self.squares.iter().all(|s| s.pass)
            && self.chain_squares.iter().all(|(_, ok)| *ok)
    }
}

/// Chain-level check that `θ∘π_1 = π_2∘φ` on every basis word of a Leibniz
/// cell of tensor degree `m`.
pub fn chain_square_holds(mid1: &GradedSlice, quot2: &GradedSlice, m: usize) -> MapResult<bool> {
    if m == 0 {
        return Ok(true);
    }
    let target = quot2.cell(m - 1);
    for b in mid1.cell(m).basis() {
        let lhs = target.coords(&theta(&pi1(b)))?;
        let rhs = target.coords(&pi2(&phi(b)))?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Builds both sequences for the algebra, assembles their LES reports, and
/// checks every ladder square on homology representatives. Homology degrees
/// run to `max_degree` on the Leibniz side and `max_degree - 1` on the
/// Hochschild side (the columns lower degree by one).
pub fn verify_ladder(
    alg: &AssocPresentation,
    grading: Grading,
    max_degree: usize,
) -> MapResult<LadderReport> {
    let lie_like = LieLike::Commutator(alg.clone());
    let ses1 = build_ses_pi1(&lie_like, grading, max_degree + 1)?;
    let ses2 = build_ses_pi2(alg, grading, max_degree)?;
    let (relative, d1) = assemble_les(&ses1, max_degree)?;
    let (cyclic, d2) = assemble_les(&ses2, max_degree.saturating_sub(1))?;

    let mut squares = Vec::new();
    let mut chain_squares = Vec::new();
    for m in 1..=max_degree {
        chain_squares.push((m, chain_square_holds(&ses1.mid, &ses2.quot, m)?));

        // middle square: θ∘(π_1)_* = (π_2)_*∘φ on H_m of the Leibniz complex
        let mut pass = true;
        for v in &d1.mid_h[m].reps {
            let lhs = d2.quot_h[m - 1].class_of_chain(&ses2.quot, &theta(&pi1(v)))?;
            let rhs = d2.quot_h[m - 1].class_of_chain(&ses2.quot, &pi2(&phi(v)))?;
            if lhs != rhs {
                pass = false;
            }
        }
        squares.push(SquareCheck {
            name: "middle",
            degree: m,
            pass,
        });

        // left square: φ restricted to the kernel lands in the kernel and
        // commutes with the inclusions
        let mut pass = true;
        for w in &d1.sub_h[m].reps {
            let fw = phi(w);
            if !pi2(&fw).is_zero() {
                pass = false;
                continue;
            }
            let down = d2.sub_h[m - 1].class_of_chain(&ses2.sub, &fw)?;
            let direct = d2.mid_h[m - 1].class_of_chain(&ses2.mid, &fw)?;
            let via = d2.incl[m - 1]
                .mul_vec(&down)
                .map_err(|e| MapError::Inconsistent(e.to_string()))?;
            if via != direct {
                pass = false;
            }
        }
        squares.push(SquareCheck {
            name: "left",
            degree: m,
            pass,
        });

        // connecting square: α_*∘∂_1 = ∂_2∘θ_* out of H_m of the quotient
        if m >= 2 {
            let mut pass = true;
            for v in &d1.quot_h[m].reps {
                let y1 = connecting_chain(&ses1, m, v)?;
                let z1 = d2.sub_h[m - 2].class_of_chain(&ses2.sub, &phi(&y1))?;
                let t = theta(v);
                let z2 = connecting_map(&ses2, m - 1, &t, &d2.sub_h[m - 2])?;
                if z1 != z2 {
                    pass = false;
                }
            }
            squares.push(SquareCheck {
                name: "connecting",
                degree: m,
                pass,
            });
        }
    }

    Ok(LadderReport {
        relative,
        cyclic,
        squares,
        chain_squares,
    })
}

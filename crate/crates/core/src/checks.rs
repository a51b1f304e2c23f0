//! Named verification suites shared by the CLI and the acceptance tests.
//!
//! Every check is exact (rational arithmetic, no tolerances) and
//! deterministic: fixed algebra fixtures, fixed grading grids, fixed sample
//! chains. A failing check carries a short witness description.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::complexes::{build_slice, ops, ComplexId, GradedSlice, Grading, LieLike};
use crate::exactq::LinearSolver;
use crate::liealg::{fixtures, AssocPresentation, LiePresentation, PbwMemo};
use crate::maps::les::{
    assemble_les, build_ses_pi1, build_ses_pi2, chain_square_holds, verify_ladder,
};
use crate::maps::{self, gv};
use crate::rational::rat;
use crate::words::{render_chain, Chain, Word};

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    /// The identity or property the check verifies.
    pub anchor: String,
    pub pass: bool,
    pub witness: Option<String>,
}

impl CheckResult {
    fn pass(name: impl Into<String>, anchor: impl Into<String>) -> CheckResult {
        CheckResult {
            name: name.into(),
            anchor: anchor.into(),
            pass: true,
            witness: None,
        }
    }

    fn fail(name: impl Into<String>, anchor: impl Into<String>, witness: String) -> CheckResult {
        CheckResult {
            name: name.into(),
            anchor: anchor.into(),
            pass: false,
            witness: Some(witness),
        }
    }

    fn of(
        name: impl Into<String>,
        anchor: impl Into<String>,
        failure: Option<String>,
    ) -> CheckResult {
        match failure {
            None => CheckResult::pass(name, anchor),
            Some(w) => CheckResult::fail(name, anchor, w),
        }
    }
}

pub fn all_pass(checks: &[CheckResult]) -> bool {
    !checks.is_empty() && checks.iter().all(|c| c.pass)
}

/// The weight grid used by the axiom suite.
const WEIGHTS: core::ops::RangeInclusive<i64> = -3..=4;
const MAX_DEGREE: usize = 5;
const LENGTH_CAP: u32 = 3;

fn dd_zero(slice: &GradedSlice) -> Option<String> {
    for n in 2..=slice.max_degree {
        let comp = slice.diff(n - 1).mul(slice.diff(n)).expect("shape");
        if !comp.is_zero() {
            return Some(format!(
                "d∘d ≠ 0 at degree {n}, weight {:?}",
                slice.grading.weight
            ));
        }
    }
    None
}

fn witt_gradings() -> Vec<Grading> {
    WEIGHTS
        .map(|w| Grading::weight_length(w, LENGTH_CAP))
        .collect()
}

fn finite_lies() -> Vec<(&'static str, LiePresentation)> {
    vec![
        ("sl2", LiePresentation::Table(fixtures::sl2())),
        ("solvable2", LiePresentation::Table(fixtures::solvable2())),
        ("abelian2", LiePresentation::Table(fixtures::abelian2())),
    ]
}

fn finite_algs() -> Vec<(&'static str, AssocPresentation)> {
    vec![
        (
            "dual-numbers",
            AssocPresentation::Table(fixtures::dual_numbers()),
        ),
        ("poly3", AssocPresentation::Table(fixtures::poly3())),
    ]
}

/// `d ∘ d = 0` across the whole grid of built slices.
pub fn dd_zero_suite() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let witt = LiePresentation::witt();
    let u_witt = AssocPresentation::u_witt();

    for (family, id) in [
        ("leibniz", ComplexId::Cl(LieLike::Lie(witt.clone()))),
        ("lie", ComplexId::Lambda(LieLike::Lie(witt.clone()))),
    ] {
        let mut failure = None;
        for g in witt_gradings() {
            let g = Grading {
                weight: g.weight,
                length: None,
            };
            match build_slice(&id, g, MAX_DEGREE) {
                Ok(s) => failure = failure.or_else(|| dd_zero(&s)),
                Err(e) => failure = Some(e.to_string()),
            }
        }
        out.push(CheckResult::of(
            format!("dd-zero/{family}/witt"),
            "d∘d = 0 on all weight slices, degrees ≤ 5",
            failure,
        ));
    }

    for (family, id) in [
        ("hochschild", ComplexId::Chh(u_witt.clone())),
        ("cyclic", ComplexId::CLambda(u_witt.clone())),
        ("bprime", ComplexId::BPrimeColumn(u_witt.clone())),
        (
            "leibniz",
            ComplexId::Cl(LieLike::Commutator(u_witt.clone())),
        ),
    ] {
        let mut failure = None;
        for g in witt_gradings() {
            match build_slice(&id, g, MAX_DEGREE) {
                Ok(s) => failure = failure.or_else(|| dd_zero(&s)),
                Err(e) => failure = Some(e.to_string()),
            }
        }
        out.push(CheckResult::of(
            format!("dd-zero/{family}/u-witt"),
            "d∘d = 0 on all (weight, length ≤ 3) slices, degrees ≤ 5",
            failure,
        ));
    }

    for (name, lie) in finite_lies() {
        for (family, id) in [
            ("leibniz", ComplexId::Cl(LieLike::Lie(lie.clone()))),
            ("lie", ComplexId::Lambda(LieLike::Lie(lie.clone()))),
        ] {
            let failure = match build_slice(&id, Grading::ungraded(), MAX_DEGREE) {
                Ok(s) => dd_zero(&s),
                Err(e) => Some(e.to_string()),
            };
            out.push(CheckResult::of(
                format!("dd-zero/{family}/{name}"),
                "d∘d = 0 on degrees ≤ 5",
                failure,
            ));
        }
    }

    for (name, alg) in finite_algs() {
        for (family, id) in [
            ("hochschild", ComplexId::Chh(alg.clone())),
            ("cyclic", ComplexId::CLambda(alg.clone())),
            ("bprime", ComplexId::BPrimeColumn(alg.clone())),
        ] {
            let failure = match build_slice(&id, Grading::ungraded(), MAX_DEGREE) {
                Ok(s) => dd_zero(&s),
                Err(e) => Some(e.to_string()),
            };
            out.push(CheckResult::of(
                format!("dd-zero/{family}/{name}"),
                "d∘d = 0 on degrees ≤ 5",
                failure,
            ));
        }
    }

    // differential-form module: δ² = 0 slice-wise, d² = 0 and δd + dδ = 0
    // word-wise, hence the total differential squares to zero
    let mut delta_fail = None;
    let mut d_fail = None;
    let mut mix_fail = None;
    for g in witt_gradings() {
        let id = ComplexId::MixedOmega(witt.clone());
        match build_slice(&id, g, MAX_DEGREE) {
            Ok(s) => {
                delta_fail = delta_fail.or_else(|| dd_zero(&s));
                for n in 0..=s.max_degree {
                    for b in s.cell(n).basis() {
                        let dd = ops::kahler_d(&ops::kahler_d(b));
                        if !dd.is_zero() {
                            d_fail.get_or_insert(format!("d∘d ≠ 0 on {}", render_chain(b, None)));
                        }
                        let anti = ops::kahler_d(&ops::mixed_delta(&witt, b))
                            .add(&ops::mixed_delta(&witt, &ops::kahler_d(b)));
                        if !anti.is_zero() {
                            mix_fail
                                .get_or_insert(format!("δd + dδ ≠ 0 on {}", render_chain(b, None)));
                        }
                    }
                }
            }
            Err(e) => delta_fail = Some(e.to_string()),
        }
    }
    out.push(CheckResult::of(
        "dd-zero/mixed-delta/witt",
        "δ∘δ = 0 on all (weight, length ≤ 3) slices, degrees ≤ 5",
        delta_fail,
    ));
    out.push(CheckResult::of(
        "dd-zero/kahler-d/witt",
        "d∘d = 0 for the exterior derivative on the same slices",
        d_fail,
    ));
    out.push(CheckResult::of(
        "dd-zero/mixed-total/witt",
        "δd + dδ = 0, so the total differential D = δ + d squares to zero",
        mix_fail,
    ));

    // quotient by Im d keeps δ a differential
    let mut failure = None;
    for w in WEIGHTS {
        for l in 0..=LENGTH_CAP {
            let id = ComplexId::MixedOmegaModImD(witt.clone());
            match build_slice(&id, Grading::weight_length(w, l), 4) {
                Ok(s) => failure = failure.or_else(|| dd_zero(&s)),
                Err(e) => failure = Some(e.to_string()),
            }
        }
    }
    out.push(CheckResult::of(
        "dd-zero/mixed-mod-d/witt",
        "induced δ squares to zero on the quotient by Im d",
        failure,
    ));

    out
}

/// Structural identities of the presentations themselves.
pub fn algebra_suite() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let witt = LiePresentation::witt();

    let mut failure = None;
    for i in -1..=8 {
        for j in -1..=8 {
            for k in -1..=8 {
                if !witt.jacobi_holds(i, j, k) {
                    failure.get_or_insert(format!("Jacobi fails at ({i},{j},{k})"));
                }
            }
        }
    }
    out.push(CheckResult::of(
        "jacobi/witt",
        "[[x,y],z] + [[y,z],x] + [[z,x],y] = 0 for indices in [-1, 8]",
        failure,
    ));

    // commutator of the enveloping product restricts to the bracket
    let u = AssocPresentation::u_witt();
    let mut memo = PbwMemo::new();
    let mut failure = None;
    for i in -1..=4 {
        for j in -1..=4 {
            let comm = u.letter_commutator(
                &crate::words::Letter::Mono(crate::words::PbwMonomial::generator(i)),
                &crate::words::Letter::Mono(crate::words::PbwMonomial::generator(j)),
                &mut memo,
            );
            let expect: Vec<(crate::words::Letter, crate::rational::Rat)> = witt
                .bracket_gen(i, j)
                .into_iter()
                .map(|(k, c)| {
                    (
                        crate::words::Letter::Mono(crate::words::PbwMonomial::generator(k)),
                        c,
                    )
                })
                .collect();
            if comm != expect {
                failure.get_or_insert(format!("commutator mismatch at ({i},{j})"));
            }
        }
    }
    out.push(CheckResult::of(
        "pbw-commutator",
        "xy - yx = [x,y] on generators of the enveloping algebra",
        failure,
    ));

    // weight additivity of the bracket
    let mut failure = None;
    for i in -1..=6 {
        for j in -1..=6 {
            for (k, _) in witt.bracket_gen(i, j) {
                if i64::from(k) != i64::from(i) + i64::from(j) {
                    failure.get_or_insert(format!("weight not additive at ({i},{j})"));
                }
            }
        }
    }
    out.push(CheckResult::of(
        "weight-additive",
        "bracket output weight = sum of input weights",
        failure,
    ));

    out
}

/// The cyclic-algebra identities relating `b`, `b'`, `t`, `N`, `s`, `h`, `B`.
pub fn cyclic_suite() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let mut algebras: Vec<(String, AssocPresentation, Grading)> = finite_algs()
        .into_iter()
        .map(|(n, a)| (n.to_string(), a, Grading::ungraded()))
        .collect();
    for w in [-1i64, 0, 1] {
        algebras.push((
            format!("u-witt(w={w})"),
            AssocPresentation::u_witt(),
            Grading::weight_length(w, 2),
        ));
    }

    for (name, alg, grading) in &algebras {
        let chh = match build_slice(&ComplexId::Chh(alg.clone()), *grading, 4) {
            Ok(s) => s,
            Err(e) => {
                out.push(CheckResult::fail(
                    format!("cyclic/{name}"),
                    "slice build",
                    e.to_string(),
                ));
                continue;
            }
        };
        let mut memo = PbwMemo::new();

        // b(1 - t) = (1 - t) b' on every basis word
        let mut failure = None;
        for n in 0..=chh.max_degree {
            for w in chh.cell(n).basis() {
                let y = w.sub(&ops::cyclic_t(w));
                let lhs = ops::hochschild_b(alg, &y, &mut memo);
                let bp = ops::b_prime(alg, w, &mut memo);
                let rhs = bp.sub(&ops::cyclic_t(&bp));
                if lhs != rhs {
                    failure.get_or_insert(format!(
                        "degree {n}, word {}",
                        render_chain(w, alg.names())
                    ));
                }
            }
        }
        out.push(CheckResult::of(
            format!("b-vs-bprime/{name}"),
            "b(1-t) = (1-t)b' on degrees ≤ 4",
            failure,
        ));

        // ker π_2 = Im(1 - t): dimension and mutual containment
        let ker = match build_slice(&ComplexId::KerPi2(alg.clone()), *grading, 4) {
            Ok(s) => s,
            Err(e) => {
                out.push(CheckResult::fail(
                    format!("cyclic/{name}"),
                    "kernel build",
                    e.to_string(),
                ));
                continue;
            }
        };
        let mut failure = None;
        for n in 0..=4 {
            let cell = chh.cell(n);
            let dim = cell.dim();
            let mut cols = Vec::with_capacity(dim);
            for w in cell.basis() {
                let y = w.sub(&ops::cyclic_t(w));
                let coords = cell.coords(&y).expect("slice closed under t");
                cols.push(coords.into_iter().collect::<Vec<_>>());
            }
            let one_minus_t = crate::exactq::SparseMatrix::from_columns(dim, &cols);
            if one_minus_t.rank() != ker.dim(n) {
                failure.get_or_insert(format!("rank(1-t) ≠ dim ker π_2 at degree {n}"));
                continue;
            }
            // each kernel basis chain lies in Im(1 - t)
            let solver = LinearSolver::new(&one_minus_t);
            for k in ker.cell(n).basis() {
                let coords = cell.coords(k).expect("kernel chain in ambient");
                let dense = crate::exactq::sparse_to_dense(&coords, dim);
                if solver.solve(&dense).is_none() {
                    failure.get_or_insert(format!("kernel chain outside Im(1-t) at degree {n}"));
                }
            }
            // and each (1-t) image projects to zero
            for w in cell.basis() {
                let y = w.sub(&ops::cyclic_t(w));
                if !maps::pi2(&y).is_zero() {
                    failure.get_or_insert(format!("(1-t) image escapes ker π_2 at degree {n}"));
                }
            }
        }
        out.push(CheckResult::of(
            format!("ker-pi2-eq-im/{name}"),
            "ker π_2 = Im(1-t) (dimension and containment), degrees ≤ 4",
            failure,
        ));

        // b' h = h b on Im(1 - t) modulo Im N, and h is injective there
        let mut failure = None;
        for n in 1..=chh.max_degree {
            let cell = chh.cell(n);
            let mut h_cols = Vec::new();
            for w in cell.basis() {
                let y = w.sub(&ops::cyclic_t(w));
                let lhs = ops::b_prime(alg, &ops::h_operator(&y), &mut memo);
                let rhs = ops::h_operator(&ops::hochschild_b(alg, &y, &mut memo));
                if !ops::reduce_mod_n_image(&lhs.sub(&rhs)).is_zero() {
                    failure.get_or_insert(format!(
                        "b'h ≠ hb mod N at degree {n} on {}",
                        render_chain(w, alg.names())
                    ));
                }
                let hy = ops::reduce_mod_n_image(&ops::h_operator(&y));
                let coords = cell.coords(&hy).expect("h stays in the slice");
                h_cols.push(coords.into_iter().collect::<Vec<_>>());
            }
            // rank of h on Im(1-t) equals dim Im(1-t)
            let h_matrix = crate::exactq::SparseMatrix::from_columns(cell.dim(), &h_cols);
            let expected = ker.dim(n);
            if h_matrix.rank() != expected {
                failure.get_or_insert(format!("h not injective on Im(1-t) at degree {n}"));
            }
        }
        out.push(CheckResult::of(
            format!("h-conjugation/{name}"),
            "b'∘h = h∘b on Im(1-t) mod Im N, h injective there, degrees ≤ 4",
            failure,
        ));

        // the bar column is contractible: b's + sb' = 1
        let mut failure = None;
        for n in 0..=chh.max_degree {
            for w in chh.cell(n).basis() {
                let mut acc = ops::b_prime(alg, &ops::extra_s(alg, w), &mut memo);
                if n >= 1 {
                    acc = acc.add(&ops::extra_s(alg, &ops::b_prime(alg, w, &mut memo)));
                }
                if &acc != w {
                    failure.get_or_insert(format!("b's + sb' ≠ 1 at degree {n}"));
                }
            }
        }
        out.push(CheckResult::of(
            format!("bprime-contraction/{name}"),
            "b'∘s + s∘b' = 1 (the bar column is acyclic)",
            failure,
        ));

        // B² = 0 and Bb + bB = 0
        let mut failure = None;
        for n in 0..=3.min(chh.max_degree) {
            for w in chh.cell(n).basis() {
                let bb = ops::connes_b(alg, &ops::connes_b(alg, w));
                if !bb.is_zero() {
                    failure.get_or_insert(format!("B² ≠ 0 at degree {n}"));
                }
                let anti = ops::connes_b(alg, &ops::hochschild_b(alg, w, &mut memo))
                    .add(&ops::hochschild_b(alg, &ops::connes_b(alg, w), &mut memo));
                if !anti.is_zero() {
                    failure.get_or_insert(format!("Bb + bB ≠ 0 at degree {n}"));
                }
            }
        }
        out.push(CheckResult::of(
            format!("connes-b/{name}"),
            "B∘B = 0 and B∘b + b∘B = 0 on degrees ≤ 3",
            failure,
        ));
    }
    out
}

/// Contraction of the nonzero-weight form slices: `δγ_n + γ_{n-1}δ = 1`,
/// `γ[Im d] ⊆ Im d`, and vanishing homology.
pub fn contraction_suite() -> Vec<CheckResult> {
    let witt = LiePresentation::witt();
    let id = ComplexId::MixedOmegaModImD(witt.clone());
    let mut out = Vec::new();
    for q in [-2i64, -1, 1, 2, 3] {
        let mut identity_fail = None;
        let mut homology_fail = None;
        let mut imd_fail = None;
        for l in 0..=LENGTH_CAP {
            let s = match build_slice(&id, Grading::weight_length(q, l), 4) {
                Ok(s) => s,
                Err(e) => {
                    identity_fail = Some(e.to_string());
                    continue;
                }
            };
            for n in 0..=3usize {
                for w in s.cell(n).basis() {
                    let gamma_w = match ops::gamma_homotopy(w) {
                        Ok(g) => g,
                        Err(e) => {
                            identity_fail.get_or_insert(e.to_string());
                            continue;
                        }
                    };
                    let mut acc = ops::reduce_mod_im_d(&witt, &ops::mixed_delta(&witt, &gamma_w));
                    if n >= 1 {
                        let dw = ops::reduce_mod_im_d(&witt, &ops::mixed_delta(&witt, w));
                        if !dw.is_zero() {
                            acc = acc.add(&ops::reduce_mod_im_d(
                                &witt,
                                &ops::gamma_homotopy(&dw).expect("weight q ≠ 0"),
                            ));
                        }
                    }
                    if &acc != w {
                        identity_fail.get_or_insert(format!(
                            "δγ + γδ ≠ 1 at weight {q}, length {l}, degree {n} on {}",
                            render_chain(w, None)
                        ));
                    }
                }
            }
            let h = crate::complexes::homology(&s);
            for row in h.rows.iter().take(4) {
                if row.homology != 0 {
                    homology_fail.get_or_insert(format!(
                        "nonzero homology at weight {q}, length {l}, degree {}",
                        row.degree
                    ));
                }
            }
            // γ preserves Im d on sampled image elements
            let full = build_slice(
                &ComplexId::MixedOmega(witt.clone()),
                Grading::weight_length(q, l),
                3,
            )
            .expect("mixed slice");
            for n in 0..=2usize {
                for w in full.cell(n).basis().iter().take(8) {
                    let z = ops::kahler_d(w);
                    if z.is_zero() {
                        continue;
                    }
                    match ops::gamma_homotopy(&z) {
                        Ok(g) => {
                            if !ops::reduce_mod_im_d(&witt, &g).is_zero() {
                                imd_fail.get_or_insert(format!(
                                    "γ(Im d) escapes Im d at weight {q}, length {l}"
                                ));
                            }
                        }
                        Err(e) => {
                            imd_fail.get_or_insert(e.to_string());
                        }
                    }
                }
            }
        }
        out.push(CheckResult::of(
            format!("contraction/weight{q}"),
            "δγ_n + γ_{n-1}δ = 1 on the quotient by Im d, n ≤ 3, lengths ≤ 3",
            identity_fail,
        ));
        out.push(CheckResult::of(
            format!("contraction-homology/weight{q}"),
            "the nonzero-weight quotient slices have zero homology",
            homology_fail,
        ));
        out.push(CheckResult::of(
            format!("gamma-imd/weight{q}"),
            "γ[Im d] ⊆ Im d on sampled image elements",
            imd_fail,
        ));
    }
    out
}

/// The weight-0, length-1 subcomplex of the quotient module.
pub fn weight0_length1_suite() -> Vec<CheckResult> {
    let witt = LiePresentation::witt();
    let id = ComplexId::MixedOmegaModImD(witt.clone());
    let mut out = Vec::new();
    let s = match build_slice(&id, Grading::weight_length(0, 1), 5) {
        Ok(s) => s,
        Err(e) => {
            out.push(CheckResult::fail(
                "w0-l1/basis",
                "slice build",
                e.to_string(),
            ));
            return out;
        }
    };
    let e0 = Word::Form(crate::words::FormWord::new(
        crate::words::PbwMonomial::generator(0),
        vec![],
    ));
    let em1_de1 = Word::Form(crate::words::FormWord::new(
        crate::words::PbwMonomial::generator(-1),
        vec![1],
    ));
    let gv = Word::Form(crate::words::FormWord::new(
        crate::words::PbwMonomial::generator(-1),
        vec![0, 1],
    ));
    let basis_ok = s.cell(0).basis_words() == Some(core::slice::from_ref(&e0))
        && s.cell(1).basis_words() == Some(core::slice::from_ref(&em1_de1))
        && s.cell(2).basis_words() == Some(core::slice::from_ref(&gv))
        && (3..=5).all(|n| s.dim(n) == 0);
    out.push(CheckResult::of(
        "w0-l1/basis",
        "basis is exactly {e0; e-1 ⊗ de1; e-1 ⊗ de0∧de1} in degrees 0..2, empty beyond",
        if basis_ok {
            None
        } else {
            Some("unexpected basis".to_string())
        },
    ));

    let d1_ok = s.diff(1).get(0, 0) == Some(&rat(2));
    let d2_ok = s.diff(2).is_zero();
    out.push(CheckResult::of(
        "w0-l1/delta",
        "δ(e-1 ⊗ de1) = 2 e0 and δ(e-1 ⊗ de0∧de1) = 0 in the quotient",
        if d1_ok && d2_ok {
            None
        } else {
            Some("unexpected differential".to_string())
        },
    ));

    let h = crate::complexes::homology(&s);
    let h2_ok = h.rows[2].homology == 1 && h.rows[2].representatives == vec![Chain::from_word(gv)];
    out.push(CheckResult::of(
        "w0-l1/h2",
        "dim H_2 = 1, generated by e-1 ⊗ de0∧de1",
        if h2_ok {
            None
        } else {
            Some("unexpected homology".to_string())
        },
    ));
    out
}

/// Chain-level square `θ∘π_1 = π_2∘φ` on Leibniz slices of the enveloping
/// algebra and of the finite fixtures.
pub fn chain_square_suite() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let mut cases: Vec<(String, AssocPresentation, Grading)> = vec![(
        "u-witt".to_string(),
        AssocPresentation::u_witt(),
        Grading::weight_length(0, 2),
    )];
    for (n, a) in finite_algs() {
        cases.push((n.to_string(), a, Grading::ungraded()));
    }
    for (name, alg, grading) in cases {
        let result = (|| -> Result<Option<String>, crate::maps::MapError> {
            let mid = build_slice(&ComplexId::Cl(LieLike::Commutator(alg.clone())), grading, 4)?;
            let quot = build_slice(&ComplexId::CLambda(alg.clone()), grading, 3)?;
            for m in 1..=4usize {
                if !chain_square_holds(&mid, &quot, m)? {
                    return Ok(Some(format!("θ∘π_1 ≠ π_2∘φ at tensor degree {m}")));
                }
            }
            Ok(None)
        })();
        let failure = match result {
            Ok(f) => f,
            Err(e) => Some(e.to_string()),
        };
        out.push(CheckResult::of(
            format!("chain-square/{name}"),
            "θ∘π_1 = π_2∘φ as matrices on tensor degrees ≤ 4",
            failure,
        ));
    }
    out
}

/// Ladder commutation (squares on homology representatives) for the finite
/// fixtures.
pub fn ladder_suite() -> Vec<CheckResult> {
    let mut out = Vec::new();
    out.extend(chain_square_suite());
    for (name, alg) in finite_algs() {
        match verify_ladder(&alg, Grading::ungraded(), 3) {
            Ok(report) => {
                let mut failure = None;
                if !report.relative.all_exact() {
                    failure.get_or_insert("relative sequence not exact".to_string());
                }
                if !report.cyclic.all_exact() {
                    failure.get_or_insert("cyclic sequence not exact".to_string());
                }
                for s in &report.squares {
                    if !s.pass {
                        failure.get_or_insert(format!(
                            "square {} fails at degree {}",
                            s.name, s.degree
                        ));
                    }
                }
                for (m, ok) in &report.chain_squares {
                    if !ok {
                        failure.get_or_insert(format!("chain square fails at degree {m}"));
                    }
                }
                out.push(CheckResult::of(
                    format!("ladder/{name}"),
                    "map of long exact sequences commutes on homology representatives",
                    failure,
                ));
            }
            Err(e) => {
                out.push(CheckResult::fail(
                    format!("ladder/{name}"),
                    "ladder build",
                    e.to_string(),
                ));
            }
        }
    }
    out
}

/// LES exactness for both sequences over the four fixtures, degrees ≤ 4.
pub fn exactness_suite() -> Vec<CheckResult> {
    let mut out = Vec::new();
    for (name, lie) in [
        ("sl2", fixtures::sl2()),
        ("solvable2", fixtures::solvable2()),
    ] {
        let lie_like = LieLike::Lie(LiePresentation::Table(lie));
        let result =
            build_ses_pi1(&lie_like, Grading::ungraded(), 5).and_then(|ses| assemble_les(&ses, 4));
        let failure = match result {
            Ok((report, _)) => report
                .positions
                .iter()
                .find(|p| !p.exact)
                .map(|p| format!("not exact at {} (degree {})", p.group, p.degree)),
            Err(e) => Some(e.to_string()),
        };
        out.push(CheckResult::of(
            format!("les-relative/{name}"),
            "the relative long exact sequence is exact at every interior position, degrees ≤ 4",
            failure,
        ));
    }
    for (name, alg) in finite_algs() {
        let result =
            build_ses_pi2(&alg, Grading::ungraded(), 5).and_then(|ses| assemble_les(&ses, 4));
        let failure = match result {
            Ok((report, _)) => report
                .positions
                .iter()
                .find(|p| !p.exact)
                .map(|p| format!("not exact at {} (degree {})", p.group, p.degree)),
            Err(e) => Some(e.to_string()),
        };
        out.push(CheckResult::of(
            format!("les-cyclic/{name}"),
            "the cyclic long exact sequence is exact at every interior position, degrees ≤ 4",
            failure,
        ));
    }
    out
}

/// The nine-step Godbillon-Vey pipeline as named checks.
pub fn gv_suite() -> Vec<CheckResult> {
    gv::gv_pipeline()
        .checks
        .into_iter()
        .map(|c| CheckResult {
            name: format!("gv/{}", c.name),
            anchor: c.anchor,
            pass: c.pass,
            witness: if c.pass {
                None
            } else {
                Some(
                    c.witnesses
                        .iter()
                        .map(|(l, w)| format!("{l}: {}", render_chain(w, None)))
                        .collect::<Vec<_>>()
                        .join("; "),
                )
            },
        })
        .collect()
}

/// Everything the `axioms` verification command runs.
pub fn axiom_suite() -> Vec<CheckResult> {
    let mut out = Vec::new();
    out.extend(algebra_suite());
    out.extend(dd_zero_suite());
    out.extend(cyclic_suite());
    out.extend(contraction_suite());
    out.extend(weight0_length1_suite());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra_and_w0l1_checks_pass() {
        for c in algebra_suite().iter().chain(weight0_length1_suite().iter()) {
            assert!(c.pass, "{}: {:?}", c.name, c.witness);
        }
    }

    #[test]
    fn gv_suite_passes() {
        let checks = gv_suite();
        assert_eq!(checks.len(), 9);
        assert!(all_pass(&checks));
    }
}

//! The differential operators, quotient normalizations, and homotopies.
//!
//! All operators act term-wise on [`Chain`]s and extend linearly; the empty
//! chain always maps to the empty chain.

use alloc::vec::Vec;

use num_traits::One;

use crate::liealg::{poisson, AssocPresentation, LiePresentation, PbwMemo};
use crate::rational::{rat, ratio, Rat};
use crate::words::{
    form_words_exact, wedge_normalize, wedge_normalize_indices, Chain, FormWord, GenIndex, Letter,
    PbwMonomial, Word,
};

use super::LieLike;

fn parity_sign(k: usize) -> Rat {
    if k & 1 == 0 {
        Rat::one()
    } else {
        -Rat::one()
    }
}

fn expect_tensor(w: &Word) -> &[Letter] {
    match w {
        Word::Tensor(ls) => ls,
        _ => panic!("expected a tensor word, got {w:?}"),
    }
}

fn expect_wedge(w: &Word) -> &[Letter] {
    match w {
        Word::Wedge(ls) => ls,
        _ => panic!("expected a wedge word, got {w:?}"),
    }
}

fn expect_form(w: &Word) -> &FormWord {
    match w {
        Word::Form(f) => f,
        _ => panic!("expected a form word, got {w:?}"),
    }
}

/// Boundary of the Leibniz complex:
/// `d(g_1,…,g_n) = Σ_{i<j} (-1)^j (g_1,…,g_{i-1},[g_i,g_j],g_{i+1},…,ĝ_j,…,g_n)`.
/// Degrees 0 and 1 map to zero (the complex is augmented by `k ← g`).
pub fn leibniz_d(lie: &LieLike, c: &Chain, memo: &mut PbwMemo) -> Chain {
    let mut out = Chain::zero();
    for (w, coeff) in c.terms() {
        let letters = expect_tensor(w);
        let n = letters.len();
        for i in 0..n {
            for j in (i + 1)..n {
                // 1-based sign (-1)^(j+1) for 0-based j
                let sign = parity_sign(j + 1);
                for (l, bc) in lie.letter_bracket(&letters[i], &letters[j], memo) {
                    let mut ls = Vec::with_capacity(n - 1);
                    ls.extend_from_slice(&letters[..i]);
                    ls.push(l);
                    ls.extend_from_slice(&letters[i + 1..j]);
                    ls.extend_from_slice(&letters[j + 1..]);
                    out.add_term(Word::Tensor(ls), coeff * &sign * bc);
                }
            }
        }
    }
    out
}

/// The same boundary with exterior powers in place of tensor powers; wedge
/// words are re-normalized after the bracket insertion.
pub fn ce_d(lie: &LieLike, c: &Chain, memo: &mut PbwMemo) -> Chain {
    let mut out = Chain::zero();
    for (w, coeff) in c.terms() {
        let letters = expect_wedge(w);
        let n = letters.len();
        for i in 0..n {
            for j in (i + 1)..n {
                let sign = parity_sign(j + 1);
                for (l, bc) in lie.letter_bracket(&letters[i], &letters[j], memo) {
                    let mut ls = Vec::with_capacity(n - 1);
                    ls.extend_from_slice(&letters[..i]);
                    ls.push(l);
                    ls.extend_from_slice(&letters[i + 1..j]);
                    ls.extend_from_slice(&letters[j + 1..]);
                    let Some((ws, sorted)) = wedge_normalize(&ls) else {
                        continue;
                    };
                    out.add_term(Word::Wedge(sorted), coeff * &sign * bc * rat(ws.into()));
                }
            }
        }
    }
    out
}

/// Hochschild boundary on `A^{⊗(n+1)}`:
/// `b = Σ_{i<n} (-1)^i (…, a_i a_{i+1}, …) + (-1)^n (a_n a_0, a_1, …, a_{n-1})`.
pub fn hochschild_b(alg: &AssocPresentation, c: &Chain, memo: &mut PbwMemo) -> Chain {
    let mut out = Chain::zero();
    for (w, coeff) in c.terms() {
        let letters = expect_tensor(w);
        let n1 = letters.len();
        if n1 <= 1 {
            continue;
        }
        let n = n1 - 1;
        for i in 0..n {
            let sign = parity_sign(i);
            for (l, mc) in alg.letter_mul(&letters[i], &letters[i + 1], memo) {
                let mut ls = Vec::with_capacity(n);
                ls.extend_from_slice(&letters[..i]);
                ls.push(l);
                ls.extend_from_slice(&letters[i + 2..]);
                out.add_term(Word::Tensor(ls), coeff * &sign * mc);
            }
        }
        let sign = parity_sign(n);
        for (l, mc) in alg.letter_mul(&letters[n], &letters[0], memo) {
            let mut ls = Vec::with_capacity(n);
            ls.push(l);
            ls.extend_from_slice(&letters[1..n]);
            out.add_term(Word::Tensor(ls), coeff * &sign * mc);
        }
    }
    out
}

/// The bar boundary `b' = Σ_{i=0}^{n-1} (-1)^i (…, a_i a_{i+1}, …)`.
pub fn b_prime(alg: &AssocPresentation, c: &Chain, memo: &mut PbwMemo) -> Chain {
    let mut out = Chain::zero();
    for (w, coeff) in c.terms() {
        let letters = expect_tensor(w);
        let n1 = letters.len();
        if n1 <= 1 {
            continue;
        }
        for i in 0..n1 - 1 {
            let sign = parity_sign(i);
            for (l, mc) in alg.letter_mul(&letters[i], &letters[i + 1], memo) {
                let mut ls = Vec::with_capacity(n1 - 1);
                ls.extend_from_slice(&letters[..i]);
                ls.push(l);
                ls.extend_from_slice(&letters[i + 2..]);
                out.add_term(Word::Tensor(ls), coeff * &sign * mc);
            }
        }
    }
    out
}

/// Cyclic rotation `t(a_0,…,a_n) = (-1)^n (a_n, a_0, …, a_{n-1})`.
pub fn cyclic_t(c: &Chain) -> Chain {
    let mut out = Chain::zero();
    for (w, coeff) in c.terms() {
        let letters = expect_tensor(w);
        let n1 = letters.len();
        if n1 == 0 {
            out.add_term(w.clone(), coeff.clone());
            continue;
        }
        let sign = parity_sign(n1 - 1);
        let mut ls = Vec::with_capacity(n1);
        ls.push(letters[n1 - 1].clone());
        ls.extend_from_slice(&letters[..n1 - 1]);
        out.add_term(Word::Tensor(ls), coeff * &sign);
    }
    out
}

/// The norm `N = Σ_{i=0}^{n} t^i` (degree-wise).
pub fn cyclic_n(c: &Chain) -> Chain {
    let mut out = Chain::zero();
    for (w, coeff) in c.terms() {
        let n1 = expect_tensor(w).len().max(1);
        let mut acc = Chain::from_term(w.clone(), coeff.clone());
        let mut sum = Chain::zero();
        for _ in 0..n1 {
            sum = sum.add(&acc);
            acc = cyclic_t(&acc);
        }
        out = out.add(&sum);
    }
    out
}

/// Extra degeneracy `s(a_0,…,a_n) = (1, a_0, …, a_n)`.
pub fn extra_s(alg: &AssocPresentation, c: &Chain) -> Chain {
    c.map_words(|w| {
        let letters = expect_tensor(w);
        let mut ls = Vec::with_capacity(letters.len() + 1);
        ls.push(alg.unit_letter());
        ls.extend_from_slice(letters);
        Chain::from_word(Word::Tensor(ls))
    })
}

/// Connes' boundary `B = (1 - t) ∘ s ∘ N`, raising degree by one.
pub fn connes_b(alg: &AssocPresentation, c: &Chain) -> Chain {
    let sn = extra_s(alg, &cyclic_n(c));
    sn.sub(&cyclic_t(&sn))
}

/// `h = -1/(n+1) (t + 2t² + ⋯ + n tⁿ)` on a degree-`n` chain.
pub fn h_operator(c: &Chain) -> Chain {
    let mut out = Chain::zero();
    for (w, coeff) in c.terms() {
        let n1 = expect_tensor(w).len();
        if n1 <= 1 {
            continue;
        }
        let n = (n1 - 1) as i64;
        let mut acc = Chain::from_term(w.clone(), coeff.clone());
        for i in 1..=n {
            acc = cyclic_t(&acc);
            out.add_scaled(&acc, &ratio(-i, n + 1));
        }
    }
    out
}

/// Canonical cyclic-orbit data of one tensor word: the lexicographically
/// least rotation, the sign relating the word to it, or `None` when the
/// orbit is sign-degenerate (the class is zero in characteristic zero).
pub fn cyclic_orbit_rep(w: &Word) -> Option<(Word, i32)> {
    let letters = expect_tensor(w);
    let n1 = letters.len();
    if n1 == 0 {
        return Some((w.clone(), 1));
    }
    let step_sign: i32 = if (n1 - 1) & 1 == 0 { 1 } else { -1 };
    let mut best: Option<(Vec<Letter>, i32)> = None;
    let mut cur = letters.to_vec();
    let mut sign = 1;
    for _ in 0..n1 {
        match &mut best {
            None => best = Some((cur.clone(), sign)),
            Some((bw, bs)) => match cur.cmp(bw) {
                core::cmp::Ordering::Less => {
                    *bw = cur.clone();
                    *bs = sign;
                }
                core::cmp::Ordering::Equal => {
                    if *bs != sign {
                        return None; // rep reached with both signs: class is zero
                    }
                }
                core::cmp::Ordering::Greater => {}
            },
        }
        cur.rotate_right(1);
        sign *= step_sign;
    }
    let (bw, bs) = best.expect("orbit nonempty");
    // [w] = bs^{-1} [rep]? rotations give t^k(w) = sign_k * word_k, so
    // [w] = sign_k * [word_k]; for word_k = rep, sign_k = bs.
    Some((Word::Tensor(bw), bs))
}

/// Projection to canonical cyclic-orbit representatives (the Connes quotient).
pub fn cyclic_normalize(c: &Chain) -> Chain {
    let mut out = Chain::zero();
    for (w, coeff) in c.terms() {
        if let Some((rep, sign)) = cyclic_orbit_rep(w) {
            out.add_term(rep, coeff * rat(sign.into()));
        }
    }
    out
}

/// Reduces modulo the image of the norm operator `N`, orbit-locally; used by
/// the `A^{⊗(*+1)}/N` model carrying the image of the kernel identification.
pub fn reduce_mod_n_image(c: &Chain) -> Chain {
    use crate::exactq::{Echelon, SparseVec};
    use alloc::collections::{BTreeMap, BTreeSet};

    if c.is_zero() {
        return Chain::zero();
    }
    // Ambient: all words in the cyclic orbits meeting the support.
    let mut ambient: BTreeSet<Word> = BTreeSet::new();
    let mut orbit_reps: BTreeSet<Word> = BTreeSet::new();
    for w in c.words() {
        let letters = expect_tensor(w);
        let n1 = letters.len().max(1);
        let mut cur = letters.to_vec();
        for _ in 0..n1 {
            ambient.insert(Word::Tensor(cur.clone()));
            cur.rotate_right(1);
        }
        if let Some((rep, _)) = cyclic_orbit_rep(w) {
            orbit_reps.insert(rep);
        } else {
            // degenerate orbit: N vanishes on it, but we still may reduce by
            // N of the plain least rotation (which is zero); nothing to add.
        }
    }
    let index: BTreeMap<&Word, usize> = ambient.iter().zip(0..).collect();
    let mut ech = Echelon::new();
    for rep in &orbit_reps {
        let nv = cyclic_n(&Chain::from_word(rep.clone()));
        let row: SparseVec = nv.terms().map(|(w, x)| (index[w], x.clone())).collect();
        ech.insert(row);
    }
    let vec: SparseVec = c.terms().map(|(w, x)| (index[w], x.clone())).collect();
    let red = ech.reduce(vec);
    let words: Vec<&Word> = ambient.iter().collect();
    let mut out = Chain::zero();
    for (i, x) in red {
        out.add_term(words[i].clone(), x);
    }
    out
}

/// Poisson-Rinehart boundary on differential-form words:
/// `δ(a ⊗ g_1∧…∧g_n) = Σ_i (-1)^{i+1} {a,g_i} ⊗ … + Σ_{i<j} (-1)^{j+1} a ⊗ …[g_i,g_j]…`.
pub fn mixed_delta(lie: &LiePresentation, c: &Chain) -> Chain {
    let mut out = Chain::zero();
    for (w, coeff) in c.terms() {
        let f = expect_form(w);
        let n = f.form.len();
        for i in 0..n {
            // 1-based sign (-1)^{i+1}: positive for the first factor
            let sign = parity_sign(i);
            let mut rest = Vec::with_capacity(n - 1);
            rest.extend_from_slice(&f.form[..i]);
            rest.extend_from_slice(&f.form[i + 1..]);
            for (m, pc) in poisson(lie, &f.coeff, f.form[i]) {
                out.add_term(
                    Word::Form(FormWord::new(m, rest.clone())),
                    coeff * &sign * pc,
                );
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                // 1-based sign (-1)^{j+1}
                let sign = parity_sign(j);
                for (k, bc) in lie.bracket_gen(f.form[i], f.form[j]) {
                    let mut ixs = Vec::with_capacity(n - 1);
                    ixs.extend_from_slice(&f.form[..i]);
                    ixs.push(k);
                    ixs.extend_from_slice(&f.form[i + 1..j]);
                    ixs.extend_from_slice(&f.form[j + 1..]);
                    let Some((ws, sorted)) = wedge_normalize_indices(&ixs) else {
                        continue;
                    };
                    out.add_term(
                        Word::Form(FormWord::new(f.coeff.clone(), sorted)),
                        coeff * &sign * bc * rat(ws.into()),
                    );
                }
            }
        }
    }
    out
}

/// Kähler exterior derivative: `d(e_i^k ⊗ ω) = k e_i^{k-1} ⊗ de_i ∧ ω`,
/// extended as a derivation over the coefficient monomial.
pub fn kahler_d(c: &Chain) -> Chain {
    let mut out = Chain::zero();
    for (w, coeff) in c.terms() {
        let f = expect_form(w);
        for (i, k) in f.coeff.exps() {
            if f.form.contains(i) {
                continue;
            }
            let rest = f.coeff.without_factor(*i).expect("factor present");
            let mut ixs = Vec::with_capacity(f.form.len() + 1);
            ixs.push(*i);
            ixs.extend_from_slice(&f.form);
            let (sign, sorted) = wedge_normalize_indices(&ixs).expect("distinct indices");
            out.add_term(
                Word::Form(FormWord::new(rest, sorted)),
                coeff * rat(i64::from(*k)) * rat(sign.into()),
            );
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightZeroHomotopy;

impl core::fmt::Display for WeightZeroHomotopy {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "homotopy undefined at weight 0")
    }
}

/// Contracting homotopy of the nonzero-weight form slices:
/// `γ_n(f ⊗ ω) = ((-1)^{n+1} / wt) (f ⊗ ω ∧ de_0)` with `wt` the total weight
/// of the term. Errors when a weight-zero term is present.
pub fn gamma_homotopy(c: &Chain) -> core::result::Result<Chain, WeightZeroHomotopy> {
    let mut out = Chain::zero();
    for (w, coeff) in c.terms() {
        let f = expect_form(w);
        let wt = f.weight();
        if wt == 0 {
            return Err(WeightZeroHomotopy);
        }
        let n = f.form.len();
        let sign = parity_sign(n + 1);
        let mut ixs = Vec::with_capacity(n + 1);
        ixs.extend_from_slice(&f.form);
        ixs.push(0);
        let Some((ws, sorted)) = wedge_normalize_indices(&ixs) else {
            continue; // de_0 already present: the appended wedge vanishes
        };
        out.add_term(
            Word::Form(FormWord::new(f.coeff.clone(), sorted)),
            coeff * &sign * ratio(i64::from(ws), wt),
        );
    }
    Ok(out)
}

/// Reduces a form chain modulo `Im d`, slice by slice: grouped by
/// (weight, length, form degree), eliminating the lexicographically largest
/// ambient words so representatives keep the least ones.
pub fn reduce_mod_im_d(lie: &LiePresentation, c: &Chain) -> Chain {
    use crate::exactq::{Echelon, SparseVec};
    use alloc::collections::BTreeMap;

    let graded = lie.graded();
    let gs = lie.gen_set();
    let mut groups: BTreeMap<(i64, u32, usize), Chain> = BTreeMap::new();
    for (w, coeff) in c.terms() {
        let f = expect_form(w);
        let key = (
            if graded { f.weight() } else { 0 },
            f.length(),
            f.form.len(),
        );
        groups
            .entry(key)
            .or_insert_with(Chain::zero)
            .add_term(w.clone(), coeff.clone());
    }
    let mut out = Chain::zero();
    for ((wt, len, deg), part) in groups {
        if deg == 0 {
            out = out.add(&part);
            continue;
        }
        let weight = if graded { Some(wt) } else { None };
        let ambient = form_words_exact(gs, weight, deg, len);
        let index: BTreeMap<&Word, usize> = ambient.iter().zip(0..).collect();
        let sources = form_words_exact(gs, weight, deg - 1, len + 1);
        let mut ech = Echelon::new();
        for s in &sources {
            let dv = kahler_d(&Chain::from_word(s.clone()));
            let row: SparseVec = dv.terms().map(|(w, x)| (index[w], x.clone())).collect();
            ech.insert(row);
        }
        let vec: SparseVec = part.terms().map(|(w, x)| (index[w], x.clone())).collect();
        for (i, x) in ech.reduce(vec) {
            out.add_term(ambient[i].clone(), x);
        }
    }
    out
}

/// Generators with multiplicity of a monomial as single-generator form words;
/// helper shared by tests.
pub fn monomial_as_form(m: PbwMonomial) -> Word {
    Word::Form(FormWord::new(m, Vec::new()))
}

/// Form word constructor used throughout the tests.
pub fn form(coeff: &[GenIndex], form_part: &[GenIndex]) -> Word {
    Word::Form(FormWord::new(
        PbwMonomial::from_factors(coeff.iter().copied()),
        form_part.to_vec(),
    ))
}

//! Deterministic enumeration of slice bases.
//!
//! Finiteness always comes from the gradings: generator indices are bounded
//! below by -1, so fixing weight (and total length, where letters are
//! monomials) cuts a finite basis. Output is strictly ordered under the
//! global word order and re-running yields identical lists.

use alloc::vec;
use alloc::vec::Vec;

use super::{FormWord, GenIndex, Letter, PbwMonomial, Word};

/// The generator alphabet of a presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenSet {
    /// `e_i`, `i >= -1`, graded by `weight(e_i) = i`.
    Witt,
    /// A finite basis indexed `0..n`; ungraded (every weight is zero).
    Finite(usize),
}

impl GenSet {
    fn admits(self, weight: Option<i64>) -> bool {
        match self {
            GenSet::Witt => true,
            GenSet::Finite(_) => matches!(weight, None | Some(0)),
        }
    }
}

/// All tensor words of the given degree over bare generators.
pub fn tensor_gen_words(gs: GenSet, weight: Option<i64>, degree: usize) -> Vec<Word> {
    gen_sequences(gs, weight, degree, false)
        .into_iter()
        .map(|s| Word::tensor_of_gens(&s))
        .collect()
}

/// All strictly increasing wedge words of the given degree over generators.
pub fn wedge_gen_words(gs: GenSet, weight: Option<i64>, degree: usize) -> Vec<Word> {
    wedge_gen_indices(gs, weight, degree)
        .into_iter()
        .map(|s| Word::wedge_of_gens(&s))
        .collect()
}

/// Index tuples of strictly increasing generator wedges.
pub fn wedge_gen_indices(gs: GenSet, weight: Option<i64>, degree: usize) -> Vec<Vec<GenIndex>> {
    gen_sequences(gs, weight, degree, true)
}

fn gen_sequences(
    gs: GenSet,
    weight: Option<i64>,
    degree: usize,
    strict: bool,
) -> Vec<Vec<GenIndex>> {
    if !gs.admits(weight) {
        return Vec::new();
    }
    if degree == 0 {
        // the distinguished empty word, weight 0
        return if weight.unwrap_or(0) == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(degree);
    match gs {
        GenSet::Witt => {
            let w = weight.expect("a weight is required to cut a finite Witt slice");
            witt_gen_rec(w, degree, strict, i64::from(MIN_INDEX), &mut cur, &mut out);
        }
        GenSet::Finite(n) => {
            finite_gen_rec(n, degree, strict, 0, &mut cur, &mut out);
        }
    }
    out
}

const MIN_INDEX: GenIndex = -1;

fn witt_gen_rec(
    w_rem: i64,
    slots: usize,
    strict: bool,
    lo: i64,
    cur: &mut Vec<GenIndex>,
    out: &mut Vec<Vec<GenIndex>>,
) {
    if slots == 0 {
        if w_rem == 0 {
            out.push(cur.clone());
        }
        return;
    }
    // Remaining slots each contribute at least -1 (strict: an increasing run),
    // which bounds the candidate index above.
    let k = (slots - 1) as i64;
    let mut i = lo;
    loop {
        let future_min = if strict { k * i + k * (k + 1) / 2 } else { -k };
        if i + future_min > w_rem {
            break;
        }
        cur.push(i as GenIndex);
        let next_lo = if strict { i + 1 } else { i64::from(MIN_INDEX) };
        witt_gen_rec(w_rem - i, slots - 1, strict, next_lo, cur, out);
        cur.pop();
        i += 1;
    }
}

fn finite_gen_rec(
    n: usize,
    slots: usize,
    strict: bool,
    lo: usize,
    cur: &mut Vec<GenIndex>,
    out: &mut Vec<Vec<GenIndex>>,
) {
    if slots == 0 {
        out.push(cur.clone());
        return;
    }
    let start = if strict { lo } else { 0 };
    for i in start..n {
        cur.push(i as GenIndex);
        finite_gen_rec(n, slots - 1, strict, i + 1, cur, out);
        cur.pop();
    }
}

/// Monomials of exact length with the given weight (weight ignored when the
/// alphabet is ungraded).
pub fn pbw_monomials_exact(gs: GenSet, weight: Option<i64>, length: u32) -> Vec<PbwMonomial> {
    if !gs.admits(weight) {
        return Vec::new();
    }
    if length == 0 {
        return if weight.unwrap_or(0) == 0 {
            vec![PbwMonomial::unit()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(length as usize);
    match gs {
        GenSet::Witt => {
            let w = weight.expect("a weight is required to cut a finite Witt slice");
            witt_mono_rec(w, length as usize, i64::from(MIN_INDEX), &mut cur, &mut out);
        }
        GenSet::Finite(n) => {
            finite_mono_rec(n, length as usize, 0, &mut cur, &mut out);
        }
    }
    let mut monos: Vec<PbwMonomial> = out
        .into_iter()
        .map(|f| PbwMonomial::from_factors(f.iter().copied()))
        .collect();
    monos.sort();
    monos
}

fn witt_mono_rec(
    w_rem: i64,
    slots: usize,
    lo: i64,
    cur: &mut Vec<GenIndex>,
    out: &mut Vec<Vec<GenIndex>>,
) {
    if slots == 1 {
        if w_rem >= lo {
            cur.push(w_rem as GenIndex);
            out.push(cur.clone());
            cur.pop();
        }
        return;
    }
    // non-decreasing factors: all remaining are >= i, so slots * i <= w_rem
    let mut i = lo;
    while i * slots as i64 <= w_rem {
        cur.push(i as GenIndex);
        witt_mono_rec(w_rem - i, slots - 1, i, cur, out);
        cur.pop();
        i += 1;
    }
}

fn finite_mono_rec(
    n: usize,
    slots: usize,
    lo: usize,
    cur: &mut Vec<GenIndex>,
    out: &mut Vec<Vec<GenIndex>>,
) {
    if slots == 0 {
        out.push(cur.clone());
        return;
    }
    for i in lo..n {
        cur.push(i as GenIndex);
        finite_mono_rec(n, slots - 1, i, cur, out);
        cur.pop();
    }
}

/// Monomial letters available inside a slice: length at most `cap`, weight in
/// the feasible box for a total-weight-`w` word.
fn mono_pool(gs: GenSet, weight: Option<i64>, cap: u32) -> Vec<PbwMonomial> {
    let mut pool = Vec::new();
    match gs {
        GenSet::Witt => {
            let w = weight.expect("a weight is required to cut a finite Witt slice");
            for len in 0..=cap {
                let lo = -i64::from(len);
                let hi = w + i64::from(cap - len);
                for v in lo..=hi {
                    pool.extend(pbw_monomials_exact(gs, Some(v), len));
                }
            }
        }
        GenSet::Finite(_) => {
            for len in 0..=cap {
                pool.extend(pbw_monomials_exact(gs, None, len));
            }
        }
    }
    pool.sort();
    pool
}

/// Tensor words over monomial letters with total length at most `length_cap`.
pub fn tensor_mono_words(
    gs: GenSet,
    weight: Option<i64>,
    degree: usize,
    length_cap: u32,
) -> Vec<Word> {
    mono_words(gs, weight, degree, length_cap, false)
        .into_iter()
        .map(Word::Tensor)
        .collect()
}

/// Strictly increasing wedge words over monomial letters.
pub fn wedge_mono_words(
    gs: GenSet,
    weight: Option<i64>,
    degree: usize,
    length_cap: u32,
) -> Vec<Word> {
    mono_words(gs, weight, degree, length_cap, true)
        .into_iter()
        .map(Word::Wedge)
        .collect()
}

fn mono_words(
    gs: GenSet,
    weight: Option<i64>,
    degree: usize,
    length_cap: u32,
    strict: bool,
) -> Vec<Vec<Letter>> {
    if !gs.admits(weight) {
        return Vec::new();
    }
    if degree == 0 {
        return if weight.unwrap_or(0) == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let pool = mono_pool(gs, weight, length_cap);
    let target = match gs {
        GenSet::Witt => weight.expect("weight required"),
        GenSet::Finite(_) => 0,
    };
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::with_capacity(degree);
    mono_word_rec(
        &pool,
        target,
        degree,
        length_cap as i64,
        strict,
        0,
        &mut cur,
        &mut out,
    );
    let mut words: Vec<Vec<Letter>> = out
        .into_iter()
        .map(|ix| {
            ix.into_iter()
                .map(|i| Letter::Mono(pool[i].clone()))
                .collect()
        })
        .collect();
    words.sort();
    words
}

#[allow(clippy::too_many_arguments)]
fn mono_word_rec(
    pool: &[PbwMonomial],
    w_rem: i64,
    slots: usize,
    len_rem: i64,
    strict: bool,
    lo: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if slots == 0 {
        if w_rem == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let start = if strict { lo } else { 0 };
    for (off, m) in pool[start..].iter().enumerate() {
        let i = start + off;
        let len = i64::from(m.length());
        if len > len_rem {
            continue;
        }
        let next_w = w_rem - m.weight();
        // remaining slots can reach at least -(remaining length)
        if next_w < -(len_rem - len) {
            continue;
        }
        cur.push(i);
        mono_word_rec(
            pool,
            next_w,
            slots - 1,
            len_rem - len,
            strict,
            i + 1,
            cur,
            out,
        );
        cur.pop();
    }
}

/// Kähler-differential words with coefficient monomials of *exact* length.
pub fn form_words_exact(
    gs: GenSet,
    weight: Option<i64>,
    form_degree: usize,
    length: u32,
) -> Vec<Word> {
    if !gs.admits(weight) {
        return Vec::new();
    }
    let mut out = Vec::new();
    match gs {
        GenSet::Witt => {
            let w = weight.expect("a weight is required to cut a finite Witt slice");
            let n = form_degree as i64;
            // minimal sum of `form_degree` distinct indices >= -1
            let min_form = n * (n - 3) / 2;
            let lo = -i64::from(length);
            let hi = w - min_form;
            for v in lo..=hi {
                let coeffs = pbw_monomials_exact(gs, Some(v), length);
                if coeffs.is_empty() {
                    continue;
                }
                let forms = wedge_gen_indices(GenSet::Witt, Some(w - v), form_degree);
                for c in &coeffs {
                    for f in &forms {
                        out.push(Word::Form(FormWord::new(c.clone(), f.clone())));
                    }
                }
            }
        }
        GenSet::Finite(_) => {
            let coeffs = pbw_monomials_exact(gs, None, length);
            let forms = wedge_gen_indices(gs, None, form_degree);
            for c in &coeffs {
                for f in &forms {
                    out.push(Word::Form(FormWord::new(c.clone(), f.clone())));
                }
            }
        }
    }
    out.sort();
    out
}

/// Kähler-differential words with coefficient length up to `cap`.
pub fn form_words_capped(
    gs: GenSet,
    weight: Option<i64>,
    form_degree: usize,
    cap: u32,
) -> Vec<Word> {
    let mut out = Vec::new();
    for len in 0..=cap {
        out.extend(form_words_exact(gs, weight, form_degree, len));
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    /// Brute-force oracle: filter every index tuple in a box.
    fn brute_tuples(weight: i64, degree: usize, strict: bool) -> BTreeSet<Vec<GenIndex>> {
        let hi = (weight + degree as i64 + 2) as GenIndex;
        let mut out = BTreeSet::new();
        let mut stack = vec![Vec::new()];
        while let Some(t) = stack.pop() {
            if t.len() == degree {
                let sum: i64 = t.iter().map(|&i| i as i64).sum();
                let ok_strict = !strict || t.windows(2).all(|w| w[0] < w[1]);
                if sum == weight && ok_strict {
                    out.insert(t);
                }
                continue;
            }
            for i in -1..=hi {
                let mut next = t.clone();
                next.push(i);
                stack.push(next);
            }
        }
        out
    }

    #[test]
    fn wedge_weight0_degree3_is_exactly_gv_word() {
        let words = wedge_gen_words(GenSet::Witt, Some(0), 3);
        assert_eq!(words, vec![Word::wedge_of_gens(&[-1, 0, 1])]);
        assert_eq!(brute_tuples(0, 3, true).len(), 1);
    }

    #[test]
    fn tensor_weight0_degree3_has_ten_words() {
        let words = tensor_gen_words(GenSet::Witt, Some(0), 3);
        assert_eq!(words.len(), 10);
        let expect = brute_tuples(0, 3, false);
        let got: BTreeSet<Vec<GenIndex>> = words
            .iter()
            .map(|w| match w {
                Word::Tensor(ls) => ls
                    .iter()
                    .map(|l| match l {
                        Letter::Gen(i) => *i,
                        _ => panic!("generator letters expected"),
                    })
                    .collect(),
                _ => panic!("tensor words expected"),
            })
            .collect();
        assert_eq!(got, expect);
        // 6 permutations of (-1,0,1), 3 arrangements of (-1,-1,2), and (0,0,0)
        assert!(got.contains(&vec![0, 0, 0]));
        assert!(got.contains(&vec![-1, 2, -1]));
    }

    #[test]
    fn wedge_weight0_degree4_is_empty() {
        assert!(wedge_gen_words(GenSet::Witt, Some(0), 4).is_empty());
        assert!(brute_tuples(0, 4, true).is_empty());
    }

    #[test]
    fn enumeration_is_sorted_and_stable() {
        for w in -3..=4 {
            for d in 0..=4 {
                let a = tensor_gen_words(GenSet::Witt, Some(w), d);
                let b = tensor_gen_words(GenSet::Witt, Some(w), d);
                assert_eq!(a, b);
                assert!(a.windows(2).all(|p| p[0] < p[1]));
                for word in &a {
                    assert_eq!(word.witt_weight(), w);
                }
            }
        }
    }

    #[test]
    fn monomials_by_length_and_weight() {
        let m = pbw_monomials_exact(GenSet::Witt, Some(0), 2);
        assert_eq!(
            m,
            vec![
                PbwMonomial::from_factors([-1, 1]),
                PbwMonomial::from_factors([0, 0])
            ]
        );
        let u = pbw_monomials_exact(GenSet::Witt, Some(0), 0);
        assert_eq!(u, vec![PbwMonomial::unit()]);
        assert!(pbw_monomials_exact(GenSet::Witt, Some(-3), 2).is_empty());
        assert_eq!(pbw_monomials_exact(GenSet::Witt, Some(-2), 2).len(), 1); // e_{-1}^2
    }

    #[test]
    fn finite_alphabet_counts() {
        assert_eq!(tensor_gen_words(GenSet::Finite(2), None, 3).len(), 8);
        assert_eq!(wedge_gen_words(GenSet::Finite(3), None, 2).len(), 3);
        assert!(tensor_gen_words(GenSet::Finite(2), Some(1), 3).is_empty());
    }

    #[test]
    fn weight0_length1_form_cells() {
        // the L = 1, q = 0 cells of the differential-form module
        let n0 = form_words_exact(GenSet::Witt, Some(0), 0, 1);
        assert_eq!(
            n0,
            vec![Word::Form(FormWord::new(PbwMonomial::generator(0), vec![]))]
        );
        let n1 = form_words_exact(GenSet::Witt, Some(0), 1, 1);
        assert_eq!(n1.len(), 3);
        let n2 = form_words_exact(GenSet::Witt, Some(0), 2, 1);
        assert_eq!(n2.len(), 4);
        let n3 = form_words_exact(GenSet::Witt, Some(0), 3, 1);
        assert_eq!(n3.len(), 2);
    }

    #[test]
    fn tensor_mono_words_match_a_brute_pool_filter() {
        // independent route: take every tuple over a generous monomial pool
        // and filter by total weight and length
        for (w, d, cap) in [(0i64, 2usize, 2u32), (1, 3, 2), (-2, 2, 3)] {
            let mut pool: Vec<PbwMonomial> = Vec::new();
            for len in 0..=cap {
                for v in -(cap as i64)..=(w + cap as i64) {
                    pool.extend(pbw_monomials_exact(GenSet::Witt, Some(v), len));
                }
            }
            let mut brute: Vec<Vec<Letter>> = vec![Vec::new()];
            for _ in 0..d {
                let mut next = Vec::new();
                for t in &brute {
                    for m in &pool {
                        let mut u = t.clone();
                        u.push(Letter::Mono(m.clone()));
                        next.push(u);
                    }
                }
                brute = next;
            }
            let mut expect: Vec<Word> = brute
                .into_iter()
                .map(Word::Tensor)
                .filter(|word| word.witt_weight() == w && word.length() <= cap)
                .collect();
            expect.sort();
            expect.dedup();
            assert_eq!(
                tensor_mono_words(GenSet::Witt, Some(w), d, cap),
                expect,
                "cell ({w},{d},{cap})"
            );
        }
    }

    #[test]
    fn tensor_mono_words_small_cell() {
        // degree 2, weight 0, length <= 2 over the enveloping alphabet
        let words = tensor_mono_words(GenSet::Witt, Some(0), 2, 2);
        // (1,1), (1,e0), (e0,1), (1, e-1 e1), (e-1 e1, 1), (1, e0^2), (e0^2, 1),
        // (e0,e0), (e-1,e1), (e1,e-1)
        assert_eq!(words.len(), 10);
        for w in &words {
            assert_eq!(w.witt_weight(), 0);
            assert!(w.length() <= 2);
        }
    }
}

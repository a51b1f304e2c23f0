//! Canonical combinatorial basis elements (tensor, wedge, PBW and
//! differential-form words) and formal rational linear combinations of them.
//!
//! Words are the universal value type of every complex in the crate: a slice
//! basis is an ordered word list, and every operator maps a [`Chain`] to a
//! [`Chain`]. The global order on words (kind, then degree, then content)
//! drives matrix column order, so it must stay total and stable.

mod enumerate;
mod text;

pub use enumerate::*;
pub use text::{parse_chain, parse_word, render_chain, render_word, ParseError, WordKind};

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::rational::Rat;

/// Index of a generator `e_i = x^{i+1} d/dx` (Witt, `i >= -1`) or a position
/// in a finite basis table.
pub type GenIndex = i32;

/// Commutative monomial in the generators, kept in normal order
/// (ascending index, positive exponents). The empty monomial is the unit.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PbwMonomial {
    exps: Vec<(GenIndex, u32)>,
}

impl PbwMonomial {
    pub fn unit() -> Self {
        PbwMonomial::default()
    }

    pub fn generator(i: GenIndex) -> Self {
        PbwMonomial {
            exps: alloc::vec![(i, 1)],
        }
    }

    /// Collects arbitrary factors into normal order.
    pub fn from_factors(factors: impl IntoIterator<Item = GenIndex>) -> Self {
        let mut m = PbwMonomial::unit();
        for i in factors {
            m.push_factor(i);
        }
        m
    }

    pub fn is_unit(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exps(&self) -> &[(GenIndex, u32)] {
        &self.exps
    }

    /// Total exponent (the length grading `L`).
    pub fn length(&self) -> u32 {
        self.exps.iter().map(|(_, k)| *k).sum()
    }

    /// Sum of `index * exponent` over all factors.
    pub fn weight(&self) -> i64 {
        self.exps.iter().map(|(i, k)| *i as i64 * *k as i64).sum()
    }

    pub fn push_factor(&mut self, i: GenIndex) {
        match self.exps.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(pos) => self.exps[pos].1 += 1,
            Err(pos) => self.exps.insert(pos, (i, 1)),
        }
    }

    /// Commutative product in the symmetric algebra.
    pub fn mul(&self, other: &PbwMonomial) -> PbwMonomial {
        let mut out = self.clone();
        for (i, k) in &other.exps {
            for _ in 0..*k {
                out.push_factor(*i);
            }
        }
        out
    }

    /// Removes one factor `e_i`; `None` if absent.
    pub fn without_factor(&self, i: GenIndex) -> Option<PbwMonomial> {
        let pos = self.exps.binary_search_by_key(&i, |(j, _)| *j).ok()?;
        let mut out = self.clone();
        if out.exps[pos].1 == 1 {
            out.exps.remove(pos);
        } else {
            out.exps[pos].1 -= 1;
        }
        Some(out)
    }

    /// Generators with multiplicity, ascending.
    pub fn factors(&self) -> impl Iterator<Item = GenIndex> + '_ {
        self.exps
            .iter()
            .flat_map(|(i, k)| core::iter::repeat_n(*i, *k as usize))
    }
}

/// A tensor/wedge slot: a bare generator, or a PBW monomial when the complex
/// is built over an enveloping algebra.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Gen(GenIndex),
    Mono(PbwMonomial),
}

impl Letter {
    pub fn length(&self) -> u32 {
        match self {
            Letter::Gen(_) => 1,
            Letter::Mono(m) => m.length(),
        }
    }

    /// Weight under the Witt grading; finite tables are ungraded and pass a
    /// weight of zero through [`crate::liealg`] instead.
    pub fn witt_weight(&self) -> i64 {
        match self {
            Letter::Gen(i) => *i as i64,
            Letter::Mono(m) => m.weight(),
        }
    }

    pub fn unit() -> Letter {
        Letter::Mono(PbwMonomial::unit())
    }
}

/// Kähler-differential word `f ⊗ de_{j_1} ∧ … ∧ de_{j_n}` with `f` a monomial
/// and the form part strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FormWord {
    pub coeff: PbwMonomial,
    pub form: Vec<GenIndex>,
}

impl FormWord {
    pub fn new(coeff: PbwMonomial, form: Vec<GenIndex>) -> Self {
        debug_assert!(
            form.windows(2).all(|w| w[0] < w[1]),
            "form part must be strictly increasing"
        );
        FormWord { coeff, form }
    }

    pub fn weight(&self) -> i64 {
        self.coeff.weight() + self.form.iter().map(|j| *j as i64).sum::<i64>()
    }

    pub fn length(&self) -> u32 {
        self.coeff.length()
    }
}

/// A basis element of a graded slice.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Word {
    /// Ordered tensor word; the empty word is the `k` summand in degree 0.
    Tensor(Vec<Letter>),
    /// Strictly increasing wedge word; the empty word is the `k` summand.
    Wedge(Vec<Letter>),
    /// Bare symmetric/enveloping-algebra monomial.
    Pbw(PbwMonomial),
    /// Differential-form word.
    Form(FormWord),
}

impl Word {
    fn kind_rank(&self) -> u8 {
        match self {
            Word::Tensor(_) => 0,
            Word::Wedge(_) => 1,
            Word::Pbw(_) => 2,
            Word::Form(_) => 3,
        }
    }

    /// Tensor/wedge degree, or the form degree for differential words.
    pub fn degree(&self) -> usize {
        match self {
            Word::Tensor(ls) | Word::Wedge(ls) => ls.len(),
            Word::Pbw(_) => 0,
            Word::Form(f) => f.form.len(),
        }
    }

    /// Total symmetric-algebra exponent carried by the word.
    pub fn length(&self) -> u32 {
        match self {
            Word::Tensor(ls) | Word::Wedge(ls) => ls.iter().map(Letter::length).sum(),
            Word::Pbw(m) => m.length(),
            Word::Form(f) => f.length(),
        }
    }

    /// Weight under the Witt grading.
    pub fn witt_weight(&self) -> i64 {
        match self {
            Word::Tensor(ls) | Word::Wedge(ls) => ls.iter().map(Letter::witt_weight).sum(),
            Word::Pbw(m) => m.weight(),
            Word::Form(f) => f.weight(),
        }
    }

    pub fn tensor_of_gens(indices: &[GenIndex]) -> Word {
        Word::Tensor(indices.iter().map(|i| Letter::Gen(*i)).collect())
    }

    pub fn wedge_of_gens(indices: &[GenIndex]) -> Word {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        Word::Wedge(indices.iter().map(|i| Letter::Gen(*i)).collect())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.kind_rank()
            .cmp(&other.kind_rank())
            .then(self.degree().cmp(&other.degree()))
            .then_with(|| match (self, other) {
                (Word::Tensor(a), Word::Tensor(b)) | (Word::Wedge(a), Word::Wedge(b)) => a.cmp(b),
                (Word::Pbw(a), Word::Pbw(b)) => a.cmp(b),
                (Word::Form(a), Word::Form(b)) => (&a.coeff, &a.form).cmp(&(&b.coeff, &b.form)),
                _ => unreachable!("kind ranks equal"),
            })
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sorts `items`, returning the permutation sign, or `None` when two entries
/// coincide (so the wedge is zero).
pub fn sort_with_sign<T: Ord>(items: &mut [T]) -> Option<i32> {
    // Insertion sort; slices here have at most a handful of entries.
    let mut sign = 1;
    for i in 1..items.len() {
        let mut j = i;
        while j > 0 {
            match items[j - 1].cmp(&items[j]) {
                core::cmp::Ordering::Greater => {
                    items.swap(j - 1, j);
                    sign = -sign;
                    j -= 1;
                }
                core::cmp::Ordering::Equal => return None,
                core::cmp::Ordering::Less => break,
            }
        }
    }
    Some(sign)
}

/// Canonical form of a wedge product: the sorted word and the sign of the
/// sorting permutation, or `None` when a factor repeats.
pub fn wedge_normalize(factors: &[Letter]) -> Option<(i32, Vec<Letter>)> {
    let mut sorted = factors.to_vec();
    let sign = sort_with_sign(&mut sorted)?;
    Some((sign, sorted))
}

/// Same for bare generator indices (used by the form part of Kähler words).
pub fn wedge_normalize_indices(indices: &[GenIndex]) -> Option<(i32, Vec<GenIndex>)> {
    let mut sorted = indices.to_vec();
    let sign = sort_with_sign(&mut sorted)?;
    Some((sign, sorted))
}

/// Finite formal rational combination of words; zero coefficients are never
/// stored and words are kept normalized by construction.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Chain {
    terms: BTreeMap<Word, Rat>,
}

impl Chain {
    pub fn zero() -> Chain {
        Chain::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn from_term(word: Word, coeff: Rat) -> Chain {
        let mut c = Chain::zero();
        c.add_term(word, coeff);
        c
    }

    pub fn from_word(word: Word) -> Chain {
        Chain::from_term(word, Rat::from_integer(1.into()))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rat)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, Rat)> {
        self.terms.into_iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn coeff(&self, word: &Word) -> Option<&Rat> {
        self.terms.get(word)
    }

    pub fn add_term(&mut self, word: Word, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Chain) -> Chain {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Chain) -> Chain {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Chain {
        Chain {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, s: &Rat) -> Chain {
        if s.is_zero() {
            return Chain::zero();
        }
        Chain {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * s)).collect(),
        }
    }

    pub fn add_scaled(&mut self, other: &Chain, s: &Rat) {
        if s.is_zero() {
            return;
        }
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c * s);
        }
    }

    /// Linear extension of a word-wise map.
    pub fn map_words(&self, mut f: impl FnMut(&Word) -> Chain) -> Chain {
        let mut out = Chain::zero();
        for (w, c) in &self.terms {
            out.add_scaled(&f(w), c);
        }
        out
    }

    /// The single term of a one-term chain.
    pub fn single(&self) -> Option<(&Word, &Rat)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }
}

impl core::ops::Add<&Chain> for &Chain {
    type Output = Chain;
    fn add(self, rhs: &Chain) -> Chain {
        Chain::add(self, rhs)
    }
}

impl core::ops::Sub<&Chain> for &Chain {
    type Output = Chain;
    fn sub(self, rhs: &Chain) -> Chain {
        Chain::sub(self, rhs)
    }
}

impl core::iter::Sum for Chain {
    fn sum<I: Iterator<Item = Chain>>(iter: I) -> Chain {
        let mut out = Chain::zero();
        for c in iter {
            out = out.add(&c);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn gen(i: GenIndex) -> Letter {
        Letter::Gen(i)
    }

    #[test]
    fn wedge_normalize_examples() {
        // one transposition
        let (s, w) = wedge_normalize(&[gen(1), gen(-1)]).unwrap();
        assert_eq!(s, -1);
        assert_eq!(w, alloc::vec![gen(-1), gen(1)]);

        // repeated factor is zero
        assert!(wedge_normalize(&[gen(0), gen(0)]).is_none());

        // already sorted
        let (s, w) = wedge_normalize(&[gen(-1), gen(0), gen(1)]).unwrap();
        assert_eq!(s, 1);
        assert_eq!(w, alloc::vec![gen(-1), gen(0), gen(1)]);
    }

    #[test]
    fn sort_sign_matches_parity() {
        let mut v = [3, 1, 2];
        assert_eq!(sort_with_sign(&mut v), Some(1)); // 3-cycle, even
        let mut v = [2, 1];
        assert_eq!(sort_with_sign(&mut v), Some(-1));
    }

    #[test]
    fn monomial_normal_order_and_gradings() {
        let m = PbwMonomial::from_factors([2, -1, -1]);
        assert_eq!(m.exps(), &[(-1, 2), (2, 1)]);
        assert_eq!(m.length(), 3);
        assert_eq!(m.weight(), 0); // 2*(-1) + 1*2
        assert_eq!(
            m.without_factor(2).unwrap(),
            PbwMonomial::from_factors([-1, -1])
        );
        assert_eq!(m.without_factor(5), None);
        assert!(PbwMonomial::unit().is_unit());
        assert_eq!(PbwMonomial::unit().weight(), 0);
    }

    #[test]
    fn form_word_gradings() {
        let f = FormWord::new(PbwMonomial::generator(-1), alloc::vec![0, 1]);
        assert_eq!(f.weight(), 0);
        assert_eq!(f.length(), 1);
        let g = FormWord::new(PbwMonomial::unit(), alloc::vec![3]);
        assert_eq!(g.weight(), 3);
        assert_eq!(g.length(), 0);
    }

    #[test]
    fn chain_arithmetic_is_canonical() {
        let w1 = Word::tensor_of_gens(&[-1, 1]);
        let w2 = Word::tensor_of_gens(&[0, 0]);
        let mut c = Chain::zero();
        c.add_term(w1.clone(), ratio(1, 2));
        c.add_term(w2.clone(), rat(1));
        c.add_term(w1.clone(), ratio(1, 2));
        assert_eq!(c.coeff(&w1), Some(&rat(1)));

        let d = c.sub(&c);
        assert!(d.is_zero());

        let e = c.scale(&rat(0));
        assert!(e.is_zero());

        // add/scale commute and associate on a sample
        let a = Chain::from_term(w1.clone(), rat(2));
        let b = Chain::from_term(w2.clone(), rat(3));
        assert_eq!(a.add(&b), b.add(&a));
        assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
    }

    #[test]
    fn word_order_is_kind_then_degree() {
        let t1 = Word::tensor_of_gens(&[5]);
        let t2 = Word::tensor_of_gens(&[-1, 0]);
        let w = Word::wedge_of_gens(&[-1]);
        let p = Word::Pbw(PbwMonomial::generator(0));
        let f = Word::Form(FormWord::new(PbwMonomial::unit(), alloc::vec![0]));
        assert!(t1 < t2); // degree first within a kind
        assert!(t2 < w); // tensor before wedge
        assert!(w < p && p < f);
    }
}

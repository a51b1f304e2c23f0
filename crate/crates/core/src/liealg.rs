//! Lie-algebra and associative-algebra presentations: the polynomial vector
//! fields `e_i = x^{i+1} d/dx` with `[e_i, e_j] = (j-i) e_{i+j}`, finite
//! structure-constant tables, PBW arithmetic in an enveloping algebra, the
//! Poisson bracket on the symmetric algebra, and the weight/length gradings.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::rational::{rat, Rat};
use crate::words::{Chain, GenIndex, GenSet, Letter, PbwMonomial, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableError {
    BadName { index: usize, name: String },
    DuplicateName { name: String },
    Shape { detail: String },
    Antisymmetry { i: usize, j: usize },
    Jacobi { i: usize, j: usize, k: usize },
    UnitLaw { i: usize },
    Associativity { i: usize, j: usize, k: usize },
}

impl fmt::Display for TableError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableError::BadName { index, name } => {
                write!(f, "invalid basis name `{name}` at index {index}")
            }
            TableError::DuplicateName { name } => write!(f, "duplicate basis name `{name}`"),
            TableError::Shape { detail } => write!(f, "malformed table: {detail}"),
            TableError::Antisymmetry { i, j } => {
                write!(f, "antisymmetry fails at basis pair ({i}, {j})")
            }
            TableError::Jacobi { i, j, k } => {
                write!(f, "Jacobi identity fails at basis triple ({i}, {j}, {k})")
            }
            TableError::UnitLaw { i } => write!(f, "unit law fails at basis element {i}"),
            TableError::Associativity { i, j, k } => {
                write!(f, "associativity fails at basis triple ({i}, {j}, {k})")
            }
        }
    }
}

pub type TableResult<T> = core::result::Result<T, TableError>;

/// Sparse element of a finitely presented algebra: basis index to coefficient.
pub type Combo = Vec<(GenIndex, Rat)>;

fn combo_add(acc: &mut BTreeMap<GenIndex, Rat>, k: GenIndex, v: Rat) {
    if v.is_zero() {
        return;
    }
    let e = acc.entry(k).or_insert_with(Rat::zero);
    *e += v;
    if e.is_zero() {
        acc.remove(&k);
    }
}

fn combo_from(acc: BTreeMap<GenIndex, Rat>) -> Combo {
    acc.into_iter().collect()
}

fn validate_names(names: &[String]) -> TableResult<()> {
    for (index, name) in names.iter().enumerate() {
        let bad = name.is_empty()
            || name == "1"
            || name.chars().any(|c| "(),∧⊗*^ \t".contains(c))
            || (name.starts_with('e') && name[1..].parse::<i64>().is_ok());
        if bad {
            return Err(TableError::BadName {
                index,
                name: name.clone(),
            });
        }
        if names[..index].contains(name) {
            return Err(TableError::DuplicateName { name: name.clone() });
        }
    }
    Ok(())
}

/// Finite Lie algebra given by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieTable {
    names: Vec<String>,
    brackets: Vec<Vec<Combo>>, // brackets[i][j] = [b_i, b_j]
}

impl LieTable {
    /// Validates antisymmetry on all basis pairs and Jacobi on all triples.
    pub fn new(names: Vec<String>, brackets: Vec<Vec<Combo>>) -> TableResult<LieTable> {
        validate_names(&names)?;
        let n = names.len();
        if brackets.len() != n || brackets.iter().any(|r| r.len() != n) {
            return Err(TableError::Shape {
                detail: format_shape(n, "brackets"),
            });
        }
        let t = LieTable { names, brackets };
        for i in 0..n {
            for j in 0..n {
                let mut sum: BTreeMap<GenIndex, Rat> = BTreeMap::new();
                for (k, c) in &t.brackets[i][j] {
                    combo_add(&mut sum, *k, c.clone());
                }
                for (k, c) in &t.brackets[j][i] {
                    combo_add(&mut sum, *k, c.clone());
                }
                if !sum.is_empty() {
                    return Err(TableError::Antisymmetry { i, j });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if !t.jacobi_holds(i, j, k) {
                        return Err(TableError::Jacobi { i, j, k });
                    }
                }
            }
        }
        Ok(t)
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    fn bracket(&self, i: GenIndex, j: GenIndex) -> Combo {
        self.brackets[i as usize][j as usize].clone()
    }

    fn bracket_combo(&self, a: &Combo, b: &Combo) -> Combo {
        let mut acc = BTreeMap::new();
        for (i, x) in a {
            for (j, y) in b {
                for (k, c) in &self.brackets[*i as usize][*j as usize] {
                    combo_add(&mut acc, *k, x * y * c);
                }
            }
        }
        combo_from(acc)
    }

    fn jacobi_holds(&self, i: usize, j: usize, k: usize) -> bool {
        let gi = vec![(i as GenIndex, Rat::one())];
        let gj = vec![(j as GenIndex, Rat::one())];
        let gk = vec![(k as GenIndex, Rat::one())];
        let mut acc = BTreeMap::new();
        for (a, b, c) in [(&gi, &gj, &gk), (&gj, &gk, &gi), (&gk, &gi, &gj)] {
            let inner = self.bracket_combo(a, b);
            for (m, v) in self.bracket_combo(&inner, c) {
                combo_add(&mut acc, m, v);
            }
        }
        acc.is_empty()
    }
}

fn format_shape(n: usize, what: &str) -> String {
    let mut s = String::from(what);
    s.push_str(" table must be ");
    s.push_str(&n.to_string());
    s.push('x');
    s.push_str(&n.to_string());
    s
}

/// Lie algebra presentation: the Witt bracket rule on all `e_i`, or a finite
/// structure-constant table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LiePresentation {
    /// `[e_i, e_j] = scale * (j - i) e_{i+j}`; the rule is never truncated,
    /// finiteness always comes from grading constraints.
    Witt {
        scale: i64,
    },
    Table(LieTable),
}

impl LiePresentation {
    pub fn witt() -> Self {
        let p = LiePresentation::Witt { scale: 1 };
        debug_assert!(p.witt_jacobi_spot_check(4));
        p
    }

    /// Witt bracket rescaled by an integer; still a Lie algebra, used as a
    /// perturbation fixture in regression tests.
    pub fn witt_scaled(scale: i64) -> Self {
        let p = LiePresentation::Witt { scale };
        debug_assert!(p.witt_jacobi_spot_check(4));
        p
    }

    pub fn gen_set(&self) -> GenSet {
        match self {
            LiePresentation::Witt { .. } => GenSet::Witt,
            LiePresentation::Table(t) => GenSet::Finite(t.dim()),
        }
    }

    /// Whether the weight grading is nontrivial.
    pub fn graded(&self) -> bool {
        matches!(self, LiePresentation::Witt { .. })
    }

    pub fn names(&self) -> Option<&[String]> {
        match self {
            LiePresentation::Witt { .. } => None,
            LiePresentation::Table(t) => Some(t.names()),
        }
    }

    /// `[e_i, e_j]` as a sparse combination of generators.
    pub fn bracket_gen(&self, i: GenIndex, j: GenIndex) -> Combo {
        match self {
            LiePresentation::Witt { scale } => {
                let c = i64::from(j - i) * scale;
                if c == 0 {
                    Vec::new()
                } else {
                    vec![(i + j, rat(c))]
                }
            }
            LiePresentation::Table(t) => t.bracket(i, j),
        }
    }

    pub fn jacobi_holds(&self, i: GenIndex, j: GenIndex, k: GenIndex) -> bool {
        match self {
            LiePresentation::Witt { .. } => {
                let mut acc: BTreeMap<GenIndex, Rat> = BTreeMap::new();
                for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                    for (m, v) in self.bracket_gen(a, b) {
                        for (n, w) in self.bracket_gen(m, c) {
                            combo_add(&mut acc, n, v.clone() * w);
                        }
                    }
                }
                acc.is_empty()
            }
            LiePresentation::Table(t) => t.jacobi_holds(i as usize, j as usize, k as usize),
        }
    }

    fn witt_jacobi_spot_check(&self, hi: GenIndex) -> bool {
        for i in -1..=hi {
            for j in -1..=hi {
                for k in -1..=hi {
                    if !self.jacobi_holds(i, j, k) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Finite unital associative algebra given by a multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultTable {
    names: Vec<String>,
    unit: usize,
    products: Vec<Vec<Combo>>,
}

impl MultTable {
    /// Validates the unit laws and associativity on all basis triples.
    pub fn new(
        names: Vec<String>,
        unit: usize,
        products: Vec<Vec<Combo>>,
    ) -> TableResult<MultTable> {
        validate_names(&names)?;
        let n = names.len();
        if unit >= n {
            return Err(TableError::Shape {
                detail: "unit index out of range".to_string(),
            });
        }
        if products.len() != n || products.iter().any(|r| r.len() != n) {
            return Err(TableError::Shape {
                detail: format_shape(n, "products"),
            });
        }
        let t = MultTable {
            names,
            unit,
            products,
        };
        for i in 0..n {
            let gi = vec![(i as GenIndex, Rat::one())];
            let left = t.mul_combo(&vec![(unit as GenIndex, Rat::one())], &gi);
            let right = t.mul_combo(&gi, &vec![(unit as GenIndex, Rat::one())]);
            if left != gi || right != gi {
                return Err(TableError::UnitLaw { i });
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let gi = vec![(i as GenIndex, Rat::one())];
                    let gj = vec![(j as GenIndex, Rat::one())];
                    let gk = vec![(k as GenIndex, Rat::one())];
                    let lhs = t.mul_combo(&t.mul_combo(&gi, &gj), &gk);
                    let rhs = t.mul_combo(&gi, &t.mul_combo(&gj, &gk));
                    if lhs != rhs {
                        return Err(TableError::Associativity { i, j, k });
                    }
                }
            }
        }
        Ok(t)
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn unit_index(&self) -> usize {
        self.unit
    }

    fn mul(&self, i: GenIndex, j: GenIndex) -> Combo {
        self.products[i as usize][j as usize].clone()
    }

    fn mul_combo(&self, a: &Combo, b: &Combo) -> Combo {
        let mut acc = BTreeMap::new();
        for (i, x) in a {
            for (j, y) in b {
                for (k, c) in &self.products[*i as usize][*j as usize] {
                    combo_add(&mut acc, *k, x * y * c);
                }
            }
        }
        combo_from(acc)
    }
}

/// Associative presentation: the enveloping algebra of a Lie presentation in
/// its PBW basis, or a finite multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AssocPresentation {
    Pbw(LiePresentation),
    Table(MultTable),
}

impl AssocPresentation {
    pub fn u_witt() -> Self {
        AssocPresentation::Pbw(LiePresentation::witt())
    }

    /// Alphabet of the underlying generator indices.
    pub fn gen_set(&self) -> GenSet {
        match self {
            AssocPresentation::Pbw(l) => l.gen_set(),
            AssocPresentation::Table(t) => GenSet::Finite(t.dim()),
        }
    }

    pub fn graded(&self) -> bool {
        match self {
            AssocPresentation::Pbw(l) => l.graded(),
            AssocPresentation::Table(_) => false,
        }
    }

    /// Whether tensor slots hold PBW monomials rather than bare generators.
    pub fn mono_letters(&self) -> bool {
        matches!(self, AssocPresentation::Pbw(_))
    }

    pub fn names(&self) -> Option<&[String]> {
        match self {
            AssocPresentation::Pbw(l) => l.names(),
            AssocPresentation::Table(t) => Some(t.names()),
        }
    }

    pub fn unit_letter(&self) -> Letter {
        match self {
            AssocPresentation::Pbw(_) => Letter::unit(),
            AssocPresentation::Table(t) => Letter::Gen(t.unit_index() as GenIndex),
        }
    }

    /// Product of two tensor slots as a sparse combination of slots.
    pub fn letter_mul(&self, a: &Letter, b: &Letter, memo: &mut PbwMemo) -> Vec<(Letter, Rat)> {
        match self {
            AssocPresentation::Pbw(lie) => {
                let (Letter::Mono(u), Letter::Mono(v)) = (a, b) else {
                    panic!("enveloping-algebra slots must be monomials");
                };
                pbw_multiply(lie, u, v, memo)
                    .into_iter()
                    .map(|(m, c)| (Letter::Mono(m), c))
                    .collect()
            }
            AssocPresentation::Table(t) => {
                let (Letter::Gen(i), Letter::Gen(j)) = (a, b) else {
                    panic!("table-algebra slots must be basis generators");
                };
                t.mul(*i, *j)
                    .into_iter()
                    .map(|(k, c)| (Letter::Gen(k), c))
                    .collect()
            }
        }
    }

    /// `ab - ba`, the commutator Lie bracket of the algebra.
    pub fn letter_commutator(
        &self,
        a: &Letter,
        b: &Letter,
        memo: &mut PbwMemo,
    ) -> Vec<(Letter, Rat)> {
        let mut acc: BTreeMap<Letter, Rat> = BTreeMap::new();
        for (l, c) in self.letter_mul(a, b, memo) {
            let e = acc.entry(l).or_insert_with(Rat::zero);
            *e += c;
        }
        for (l, c) in self.letter_mul(b, a, memo) {
            let e = acc.entry(l).or_insert_with(Rat::zero);
            *e -= c;
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }
}

/// Cache of normal-ordering rewrites, keyed by the raw factor sequence.
/// Purely an accelerator: results are independent of cache state.
#[derive(Default)]
pub struct PbwMemo {
    map: BTreeMap<Vec<GenIndex>, Vec<(PbwMonomial, Rat)>>,
}

impl PbwMemo {
    pub fn new() -> Self {
        PbwMemo::default()
    }
}

/// Rewrites an arbitrary product of generators into the PBW basis:
/// `e_j e_i = e_i e_j - [e_i, e_j]` for `j > i`. Terminates because each
/// rewrite lowers the inversion count or the word length.
pub fn normal_order(
    lie: &LiePresentation,
    seq: &[GenIndex],
    memo: &mut PbwMemo,
) -> Vec<(PbwMonomial, Rat)> {
    let inv = seq.windows(2).position(|w| w[0] > w[1]);
    let Some(pos) = inv else {
        return vec![(PbwMonomial::from_factors(seq.iter().copied()), Rat::one())];
    };
    if let Some(hit) = memo.map.get(seq) {
        return hit.clone();
    }
    let mut acc: BTreeMap<PbwMonomial, Rat> = BTreeMap::new();
    // swap the inverted pair
    let mut swapped = seq.to_vec();
    swapped.swap(pos, pos + 1);
    for (m, c) in normal_order(lie, &swapped, memo) {
        let e = acc.entry(m).or_insert_with(Rat::zero);
        *e += c;
    }
    // plus [e_a, e_b] contracted into one slot: e_a e_b = e_b e_a + [e_a, e_b]
    let (a, b) = (seq[pos], seq[pos + 1]);
    for (k, c) in lie.bracket_gen(a, b) {
        let mut contracted = Vec::with_capacity(seq.len() - 1);
        contracted.extend_from_slice(&seq[..pos]);
        contracted.push(k);
        contracted.extend_from_slice(&seq[pos + 2..]);
        for (m, c2) in normal_order(lie, &contracted, memo) {
            let e = acc.entry(m).or_insert_with(Rat::zero);
            *e += &c * c2;
        }
    }
    let out: Vec<(PbwMonomial, Rat)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    memo.map.insert(seq.to_vec(), out.clone());
    out
}

/// Product in the enveloping algebra, expressed in the PBW basis.
pub fn pbw_multiply(
    lie: &LiePresentation,
    u: &PbwMonomial,
    v: &PbwMonomial,
    memo: &mut PbwMemo,
) -> Vec<(PbwMonomial, Rat)> {
    let seq: Vec<GenIndex> = u.factors().chain(v.factors()).collect();
    normal_order(lie, &seq, memo)
}

/// Chain-level enveloping product on `Word::Pbw` chains.
pub fn pbw_multiply_chains(
    lie: &LiePresentation,
    a: &Chain,
    b: &Chain,
    memo: &mut PbwMemo,
) -> Chain {
    let mut out = Chain::zero();
    for (wa, ca) in a.terms() {
        let Word::Pbw(u) = wa else {
            panic!("expected monomial words")
        };
        for (wb, cb) in b.terms() {
            let Word::Pbw(v) = wb else {
                panic!("expected monomial words")
            };
            for (m, c) in pbw_multiply(lie, u, v, memo) {
                out.add_term(Word::Pbw(m), ca * cb * c);
            }
        }
    }
    out
}

/// Poisson bracket `{a, e_g}` on the symmetric algebra: the derivation that
/// replaces one factor at a time by its bracket with `e_g`, multiplying
/// commutatively. On a weight-homogeneous monomial, `{f, e_0} = -wt(f) f`.
pub fn poisson(lie: &LiePresentation, a: &PbwMonomial, g: GenIndex) -> Vec<(PbwMonomial, Rat)> {
    let mut acc: BTreeMap<PbwMonomial, Rat> = BTreeMap::new();
    for (i, k) in a.exps() {
        let rest = a.without_factor(*i).expect("factor present");
        for (m, c) in lie.bracket_gen(*i, g) {
            let mono = rest.mul(&PbwMonomial::generator(m));
            let e = acc.entry(mono).or_insert_with(Rat::zero);
            *e += rat(i64::from(*k)) * c;
        }
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// Chain-level Poisson bracket on `Word::Pbw` chains.
pub fn poisson_chain(lie: &LiePresentation, a: &Chain, g: GenIndex) -> Chain {
    a.map_words(|w| {
        let Word::Pbw(m) = w else {
            panic!("expected monomial words")
        };
        let mut out = Chain::zero();
        for (mono, c) in poisson(lie, m, g) {
            out.add_term(Word::Pbw(mono), c);
        }
        out
    })
}

/// Bilinear bracket on chains of degree-1 tensor words over generators.
pub fn bracket(lie: &LiePresentation, a: &Chain, b: &Chain) -> Chain {
    let mut out = Chain::zero();
    for (wa, ca) in a.terms() {
        let Word::Tensor(la) = wa else {
            panic!("expected degree-1 tensor words")
        };
        let [Letter::Gen(i)] = la.as_slice() else {
            panic!("expected degree-1 tensor words")
        };
        for (wb, cb) in b.terms() {
            let Word::Tensor(lb) = wb else {
                panic!("expected degree-1 tensor words")
            };
            let [Letter::Gen(j)] = lb.as_slice() else {
                panic!("expected degree-1 tensor words")
            };
            for (k, c) in lie.bracket_gen(*i, *j) {
                out.add_term(Word::tensor_of_gens(&[k]), ca * cb * c);
            }
        }
    }
    out
}

/// Weight of a word under the presentation's grading; finite tables are
/// ungraded and every word has weight zero.
pub fn weight(graded: bool, w: &Word) -> i64 {
    if graded {
        w.witt_weight()
    } else {
        0
    }
}

/// Built-in fixtures.
pub mod fixtures {
    use super::*;

    fn combo(entries: &[(GenIndex, i64)]) -> Combo {
        entries.iter().map(|(k, c)| (*k, rat(*c))).collect()
    }

    /// sl2 with basis (e, f, h): `[e,f] = h`, `[h,e] = 2e`, `[h,f] = -2f`.
    pub fn sl2() -> LieTable {
        let names = vec!["e".to_string(), "f".to_string(), "h".to_string()];
        let z = Vec::new;
        let brackets = vec![
            vec![z(), combo(&[(2, 1)]), combo(&[(0, -2)])],
            vec![combo(&[(2, -1)]), z(), combo(&[(1, 2)])],
            vec![combo(&[(0, 2)]), combo(&[(1, -2)]), z()],
        ];
        LieTable::new(names, brackets).expect("sl2 table is valid")
    }

    /// The 2-dimensional solvable algebra: `[x, y] = y`.
    pub fn solvable2() -> LieTable {
        let names = vec!["x".to_string(), "y".to_string()];
        let brackets = vec![
            vec![Vec::new(), combo(&[(1, 1)])],
            vec![combo(&[(1, -1)]), Vec::new()],
        ];
        LieTable::new(names, brackets).expect("solvable2 table is valid")
    }

    /// The abelian 2-dimensional algebra.
    pub fn abelian2() -> LieTable {
        let names = vec!["a".to_string(), "b".to_string()];
        let brackets = vec![vec![Vec::new(), Vec::new()], vec![Vec::new(), Vec::new()]];
        LieTable::new(names, brackets).expect("abelian2 table is valid")
    }

    /// Dual numbers `Q[x]/(x^2)`, basis (u, x) with unit u.
    pub fn dual_numbers() -> MultTable {
        let names = vec!["u".to_string(), "x".to_string()];
        let products = vec![
            vec![combo(&[(0, 1)]), combo(&[(1, 1)])],
            vec![combo(&[(1, 1)]), Vec::new()],
        ];
        MultTable::new(names, 0, products).expect("dual-numbers table is valid")
    }

    /// Truncated polynomials `Q[x]/(x^3)`, basis (u, x, x2) with unit u.
    pub fn poly3() -> MultTable {
        let names = vec!["u".to_string(), "x".to_string(), "x2".to_string()];
        let products = vec![
            vec![combo(&[(0, 1)]), combo(&[(1, 1)]), combo(&[(2, 1)])],
            vec![combo(&[(1, 1)]), combo(&[(2, 1)]), Vec::new()],
            vec![combo(&[(2, 1)]), Vec::new(), Vec::new()],
        ];
        MultTable::new(names, 0, products).expect("poly3 table is valid")
    }

    /// Lie fixture lookup by CLI name.
    pub fn lie_by_name(name: &str) -> Option<LiePresentation> {
        match name {
            "witt" => Some(LiePresentation::witt()),
            "sl2" => Some(LiePresentation::Table(sl2())),
            "solvable2" => Some(LiePresentation::Table(solvable2())),
            "abelian2" => Some(LiePresentation::Table(abelian2())),
            _ => None,
        }
    }

    /// Associative fixture lookup by CLI name.
    pub fn assoc_by_name(name: &str) -> Option<AssocPresentation> {
        match name {
            "u-witt" => Some(AssocPresentation::u_witt()),
            "dual-numbers" => Some(AssocPresentation::Table(dual_numbers())),
            "poly3" => Some(AssocPresentation::Table(poly3())),
            _ => None,
        }
    }
}

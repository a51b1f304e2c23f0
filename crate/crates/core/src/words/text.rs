//! Textual grammar for words and chains, used by CLI/JSON output.
//!
//! Examples of the grammar: `(e-1,e0,e1)` (tensor), `e-1∧e0∧e1` (wedge),
//! `e-1^2*e2` (monomial), `e-1^2*e2 ⊗ de0∧de1` (differential form),
//! `1/2*(e-1,e0,e1) - 1/2*(e0,e-1,e1)` (chain). Rendering round-trips
//! through [`parse_word`]/[`parse_chain`] given the word kind of the
//! surrounding slice. Finite presentations substitute their basis names for
//! the `e<i>` labels.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::{One, Signed};

use crate::rational::{self, Rat};

use super::{Chain, FormWord, GenIndex, Letter, PbwMonomial, Word};

/// Shape hint for the parser; rendering is shape-driven and needs none.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WordKind {
    TensorGen,
    TensorMono,
    WedgeGen,
    WedgeMono,
    Pbw,
    Form,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError(pub String);

impl core::fmt::Display for ParseError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "parse error: {}", self.0)
    }
}

type Result<T> = core::result::Result<T, ParseError>;

fn err<T>(msg: impl core::fmt::Display) -> Result<T> {
    Err(ParseError(msg.to_string()))
}

fn gen_label(i: GenIndex, names: Option<&[String]>) -> String {
    if let Some(names) = names {
        if i >= 0 {
            if let Some(n) = names.get(i as usize) {
                return n.clone();
            }
        }
    }
    format!("e{i}")
}

fn render_monomial(m: &PbwMonomial, names: Option<&[String]>) -> String {
    if m.is_unit() {
        return "1".to_string();
    }
    let mut parts = Vec::new();
    for (i, k) in m.exps() {
        let base = gen_label(*i, names);
        if *k == 1 {
            parts.push(base);
        } else {
            parts.push(format!("{base}^{k}"));
        }
    }
    parts.join("*")
}

fn render_letter(l: &Letter, names: Option<&[String]>) -> String {
    match l {
        Letter::Gen(i) => gen_label(*i, names),
        Letter::Mono(m) => render_monomial(m, names),
    }
}

pub fn render_word(w: &Word, names: Option<&[String]>) -> String {
    match w {
        Word::Tensor(ls) => {
            if ls.is_empty() {
                "1".to_string()
            } else {
                let inner: Vec<String> = ls.iter().map(|l| render_letter(l, names)).collect();
                format!("({})", inner.join(","))
            }
        }
        Word::Wedge(ls) => {
            if ls.is_empty() {
                "1".to_string()
            } else {
                let inner: Vec<String> = ls.iter().map(|l| render_letter(l, names)).collect();
                inner.join("∧")
            }
        }
        Word::Pbw(m) => render_monomial(m, names),
        Word::Form(f) => {
            if f.form.is_empty() {
                render_monomial(&f.coeff, names)
            } else {
                let forms: Vec<String> = f
                    .form
                    .iter()
                    .map(|j| format!("d{}", gen_label(*j, names)))
                    .collect();
                format!("{} ⊗ {}", render_monomial(&f.coeff, names), forms.join("∧"))
            }
        }
    }
}

pub fn render_chain(c: &Chain, names: Option<&[String]>) -> String {
    if c.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (w, coeff)) in c.terms().enumerate() {
        let neg = coeff.is_negative();
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = coeff.abs();
        if !a.is_one() {
            out.push_str(&rational::render(&a));
            out.push('*');
        }
        out.push_str(&render_word(w, names));
    }
    out
}

fn parse_index(tok: &str, names: Option<&[String]>) -> Result<GenIndex> {
    if let Some(names) = names {
        if let Some(pos) = names.iter().position(|n| n == tok) {
            return Ok(pos as GenIndex);
        }
    }
    let Some(num) = tok.strip_prefix('e') else {
        return err(format!("unknown generator `{tok}`"));
    };
    num.parse::<GenIndex>()
        .map_err(|_| ParseError(format!("bad generator index in `{tok}`")))
}

fn parse_factor(tok: &str, names: Option<&[String]>) -> Result<(GenIndex, u32)> {
    let (base, exp) = match tok.split_once('^') {
        Some((b, e)) => {
            let k: u32 = e
                .trim()
                .parse()
                .map_err(|_| ParseError(format!("bad exponent in `{tok}`")))?;
            if k == 0 {
                return err(format!("zero exponent in `{tok}`"));
            }
            (b.trim(), k)
        }
        None => (tok, 1),
    };
    Ok((parse_index(base, names)?, exp))
}

fn parse_monomial(s: &str, names: Option<&[String]>) -> Result<PbwMonomial> {
    let s = s.trim();
    if s == "1" {
        return Ok(PbwMonomial::unit());
    }
    if s.is_empty() {
        return err("empty monomial");
    }
    let mut m = PbwMonomial::unit();
    for tok in s.split('*') {
        let (i, k) = parse_factor(tok.trim(), names)?;
        for _ in 0..k {
            m.push_factor(i);
        }
    }
    Ok(m)
}

fn parse_letter(s: &str, mono: bool, names: Option<&[String]>) -> Result<Letter> {
    let s = s.trim();
    if mono {
        Ok(Letter::Mono(parse_monomial(s, names)?))
    } else {
        Ok(Letter::Gen(parse_index(s, names)?))
    }
}

pub fn parse_word(kind: WordKind, s: &str, names: Option<&[String]>) -> Result<Word> {
    let s = s.trim();
    match kind {
        WordKind::TensorGen | WordKind::TensorMono => {
            let mono = kind == WordKind::TensorMono;
            if s == "1" {
                return Ok(Word::Tensor(Vec::new()));
            }
            let Some(inner) = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')) else {
                return err(format!("tensor word must be parenthesized: `{s}`"));
            };
            let letters: Result<Vec<Letter>> = inner
                .split(',')
                .map(|t| parse_letter(t, mono, names))
                .collect();
            Ok(Word::Tensor(letters?))
        }
        WordKind::WedgeGen | WordKind::WedgeMono => {
            let mono = kind == WordKind::WedgeMono;
            if s == "1" {
                return Ok(Word::Wedge(Vec::new()));
            }
            let letters: Result<Vec<Letter>> =
                s.split('∧').map(|t| parse_letter(t, mono, names)).collect();
            let letters = letters?;
            if !letters.windows(2).all(|w| w[0] < w[1]) {
                return err(format!("wedge word not strictly increasing: `{s}`"));
            }
            Ok(Word::Wedge(letters))
        }
        WordKind::Pbw => Ok(Word::Pbw(parse_monomial(s, names)?)),
        WordKind::Form => {
            let (coeff, form) = match s.split_once('⊗') {
                Some((c, f)) => (parse_monomial(c, names)?, f.trim()),
                None => (parse_monomial(s, names)?, ""),
            };
            let mut indices = Vec::new();
            if !form.is_empty() {
                for tok in form.split('∧') {
                    let tok = tok.trim();
                    let Some(rest) = tok.strip_prefix('d') else {
                        return err(format!("form factor must start with `d`: `{tok}`"));
                    };
                    indices.push(parse_index(rest.trim(), names)?);
                }
            }
            if !indices.windows(2).all(|w| w[0] < w[1]) {
                return err(format!("form part not strictly increasing: `{s}`"));
            }
            Ok(Word::Form(FormWord::new(coeff, indices)))
        }
    }
}

fn looks_like_rational(s: &str) -> bool {
    !s.is_empty()
        && s.chars()
            .all(|c| c.is_ascii_digit() || c == '-' || c == '/')
}

fn parse_term(kind: WordKind, s: &str, names: Option<&[String]>) -> Result<(Word, Rat)> {
    let s = s.trim();
    if let Some((head, tail)) = s.split_once('*') {
        if looks_like_rational(head.trim()) {
            let coeff = rational::parse(head)
                .ok_or_else(|| ParseError(format!("bad coefficient `{head}`")))?;
            return Ok((parse_word(kind, tail, names)?, coeff));
        }
    }
    Ok((parse_word(kind, s, names)?, Rat::one()))
}

/// Parses the output of [`render_chain`]: terms joined by ` + ` / ` - `
/// with an optional leading minus.
pub fn parse_chain(kind: WordKind, s: &str, names: Option<&[String]>) -> Result<Chain> {
    let s = s.trim();
    if s == "0" {
        return Ok(Chain::zero());
    }
    let mut out = Chain::zero();
    let (mut rest, mut sign) = match s.strip_prefix('-') {
        Some(r) => (r.trim_start(), -Rat::one()),
        None => (s, Rat::one()),
    };
    loop {
        let plus = rest.find(" + ");
        let minus = rest.find(" - ");
        let (term, next_sign, tail) = match (plus, minus) {
            (Some(p), Some(m)) if p < m => (&rest[..p], Rat::one(), &rest[p + 3..]),
            (Some(_), Some(m)) => (&rest[..m], -Rat::one(), &rest[m + 3..]),
            (Some(p), None) => (&rest[..p], Rat::one(), &rest[p + 3..]),
            (None, Some(m)) => (&rest[..m], -Rat::one(), &rest[m + 3..]),
            (None, None) => {
                let (w, c) = parse_term(kind, rest, names)?;
                out.add_term(w, c * &sign);
                return Ok(out);
            }
        };
        let (w, c) = parse_term(kind, term, names)?;
        out.add_term(w, c * &sign);
        sign = next_sign;
        rest = tail;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};
    use alloc::vec;

    #[test]
    fn render_matches_grammar() {
        let w = Word::Form(FormWord::new(
            PbwMonomial::from_factors([-1, -1, 2]),
            vec![0, 1],
        ));
        assert_eq!(render_word(&w, None), "e-1^2*e2 ⊗ de0∧de1");
        assert_eq!(
            render_word(&Word::tensor_of_gens(&[-1, 0, 1]), None),
            "(e-1,e0,e1)"
        );
        assert_eq!(
            render_word(&Word::wedge_of_gens(&[-1, 0, 1]), None),
            "e-1∧e0∧e1"
        );
        assert_eq!(render_word(&Word::Tensor(vec![]), None), "1");
        assert_eq!(render_word(&Word::Pbw(PbwMonomial::unit()), None), "1");
    }

    #[test]
    fn word_round_trips() {
        let cases: Vec<(WordKind, Word)> = vec![
            (WordKind::TensorGen, Word::tensor_of_gens(&[-1, 0, 1])),
            (WordKind::TensorGen, Word::Tensor(vec![])),
            (WordKind::WedgeGen, Word::wedge_of_gens(&[-1, 2])),
            (WordKind::WedgeGen, Word::Wedge(vec![])),
            (
                WordKind::Pbw,
                Word::Pbw(PbwMonomial::from_factors([-1, -1, 3])),
            ),
            (
                WordKind::Form,
                Word::Form(FormWord::new(
                    PbwMonomial::from_factors([0, 0]),
                    vec![-1, 1],
                )),
            ),
            (
                WordKind::Form,
                Word::Form(FormWord::new(PbwMonomial::unit(), vec![3])),
            ),
            (
                WordKind::TensorMono,
                Word::Tensor(vec![
                    Letter::unit(),
                    Letter::Mono(PbwMonomial::from_factors([0, 0])),
                    Letter::Mono(PbwMonomial::generator(-1)),
                ]),
            ),
            (
                WordKind::WedgeMono,
                Word::Wedge(vec![
                    Letter::Mono(PbwMonomial::generator(-1)),
                    Letter::Mono(PbwMonomial::generator(0)),
                ]),
            ),
        ];
        for (kind, w) in cases {
            let s = render_word(&w, None);
            assert_eq!(
                parse_word(kind, &s, None).unwrap(),
                w,
                "round trip of `{s}`"
            );
        }
    }

    #[test]
    fn chain_round_trips() {
        let mut c = Chain::zero();
        c.add_term(Word::tensor_of_gens(&[-1, 0, 1]), ratio(1, 2));
        c.add_term(Word::tensor_of_gens(&[0, -1, 1]), ratio(-1, 2));
        c.add_term(Word::tensor_of_gens(&[-1, -1, 2]), ratio(1, 6));
        let s = render_chain(&c, None);
        assert_eq!(parse_chain(WordKind::TensorGen, &s, None).unwrap(), c);

        assert_eq!(
            parse_chain(WordKind::TensorGen, "0", None).unwrap(),
            Chain::zero()
        );
        let neg = Chain::from_term(Word::tensor_of_gens(&[0]), rat(-2));
        assert_eq!(
            parse_chain(WordKind::TensorGen, &render_chain(&neg, None), None).unwrap(),
            neg
        );
    }

    #[test]
    fn named_basis_round_trips() {
        let names: Vec<String> = vec!["u".into(), "x".into()];
        let w = Word::tensor_of_gens(&[0, 1, 1]);
        let s = render_word(&w, Some(&names));
        assert_eq!(s, "(u,x,x)");
        assert_eq!(
            parse_word(WordKind::TensorGen, &s, Some(&names)).unwrap(),
            w
        );
    }

    #[test]
    fn parse_rejects_malformed() {
        assert!(parse_word(WordKind::TensorGen, "e0,e1", None).is_err());
        assert!(parse_word(WordKind::WedgeGen, "e1∧e0", None).is_err());
        assert!(parse_word(WordKind::Pbw, "e0^0", None).is_err());
        assert!(parse_word(WordKind::Form, "e0 ⊗ e1", None).is_err());
        assert!(parse_word(WordKind::TensorGen, "(f0)", None).is_err());
    }
}

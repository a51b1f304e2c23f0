//! Exhaustive associativity of the enveloping product on all triples of
//! monomials with length ≤ 3 over the index window [-1, 4], and the
//! agreement of the two elimination strategies on the slice matrices.

use std::collections::BTreeMap;

use hlcy_core::complexes::{build_slice, ComplexId, Grading, LieLike};
use hlcy_core::liealg::{pbw_multiply, LiePresentation, PbwMemo};
use hlcy_core::rational::{is_zero, Rat};
use hlcy_core::words::PbwMonomial;

fn monomials_up_to(len: usize, lo: i32, hi: i32) -> Vec<PbwMonomial> {
    let mut out = vec![PbwMonomial::unit()];
    let mut frontier = vec![Vec::<i32>::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for f in &frontier {
            let start = f.last().copied().unwrap_or(lo);
            for i in start..=hi {
                let mut g = f.clone();
                g.push(i);
                out.push(PbwMonomial::from_factors(g.iter().copied()));
                next.push(g);
            }
        }
        frontier = next;
    }
    out
}

fn combine(
    lie: &LiePresentation,
    left: &[(PbwMonomial, Rat)],
    right: &PbwMonomial,
    flip: bool,
    memo: &mut PbwMemo,
) -> BTreeMap<PbwMonomial, Rat> {
    let mut acc: BTreeMap<PbwMonomial, Rat> = BTreeMap::new();
    for (m, x) in left {
        let prod = if flip {
            pbw_multiply(lie, right, m, memo)
        } else {
            pbw_multiply(lie, m, right, memo)
        };
        for (n, y) in prod {
            let e = acc.entry(n).or_insert_with(|| Rat::from_integer(0.into()));
            *e += x * y;
        }
    }
    acc.retain(|_, v| !is_zero(v));
    acc
}

fn assert_associative_on(monos: &[PbwMonomial]) {
    let lie = LiePresentation::witt();
    let mut memo = PbwMemo::new();
    for a in monos {
        for b in monos {
            let ab = pbw_multiply(&lie, a, b, &mut memo);
            for c in monos {
                let bc = pbw_multiply(&lie, b, c, &mut memo);
                let lhs = combine(&lie, &ab, c, false, &mut memo);
                let rhs = combine(&lie, &bc, a, true, &mut memo);
                assert_eq!(lhs, rhs, "associativity fails on ({a:?})({b:?})({c:?})");
            }
        }
    }
}

#[test]
fn enveloping_product_associative_exhaustive_small() {
    // all triples of length ≤ 2 over [-1, 4], plus length ≤ 3 over [-1, 1]
    let monos = monomials_up_to(2, -1, 4);
    assert_eq!(monos.len(), 1 + 6 + 21);
    assert_associative_on(&monos);
    assert_associative_on(&monomials_up_to(3, -1, 1));
}

#[test]
#[ignore = "exhaustive over 84^3 triples; takes a few minutes"]
fn enveloping_product_associative_on_the_full_window() {
    let monos = monomials_up_to(3, -1, 4);
    assert_eq!(monos.len(), 1 + 6 + 21 + 56);
    assert_associative_on(&monos);
}

#[test]
fn elimination_strategies_agree_on_slice_matrices() {
    let mut checked = 0usize;
    let witt = LieLike::Lie(LiePresentation::witt());
    for w in -2..=2 {
        let s = build_slice(&ComplexId::Cl(witt.clone()), Grading::weight(w), 4).unwrap();
        for n in 1..=4 {
            let m = s.diff(n);
            if m.rows() <= 200 && m.cols() <= 200 {
                assert_eq!(m.rank(), m.rank_dense(), "weight {w} degree {n}");
                checked += 1;
            }
        }
    }
    let alg = hlcy_core::AssocPresentation::Table(hlcy_core::liealg::fixtures::poly3());
    let s = build_slice(&ComplexId::Chh(alg), Grading::ungraded(), 4).unwrap();
    for n in 1..=4 {
        let m = s.diff(n);
        assert_eq!(m.rank(), m.rank_dense(), "hochschild degree {n}");
        checked += 1;
    }
    assert!(checked >= 20);
}

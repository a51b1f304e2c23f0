//! Property tests for the exact kernel of the crate: chain arithmetic,
//! the textual grammar, the squared-to-zero identities, and the cyclic
//! operator algebra, all on randomly generated small inputs.

use proptest::prelude::*;

use hlcy_core::complexes::{ops, LieLike};
use hlcy_core::liealg::{pbw_multiply, AssocPresentation, LiePresentation, PbwMemo};
use hlcy_core::rational::{rat, ratio, Rat};
use hlcy_core::words::{
    parse_chain, parse_word, render_chain, render_word, sort_with_sign, Chain, FormWord, GenIndex,
    Letter, PbwMonomial, Word, WordKind,
};

fn small_rat() -> impl Strategy<Value = Rat> {
    (-12i64..13, 1i64..7).prop_map(|(n, d)| ratio(n, d))
}

fn gen_index() -> impl Strategy<Value = GenIndex> {
    -1i32..6
}

fn monomial(max_len: usize) -> impl Strategy<Value = PbwMonomial> {
    proptest::collection::vec(gen_index(), 0..=max_len).prop_map(PbwMonomial::from_factors)
}

fn tensor_gen_word(max_degree: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec(gen_index(), 0..=max_degree).prop_map(|v| Word::tensor_of_gens(&v))
}

fn wedge_gen_word(max_degree: usize) -> impl Strategy<Value = Word> {
    proptest::collection::btree_set(gen_index(), 0..=max_degree).prop_map(|s| {
        let v: Vec<GenIndex> = s.into_iter().collect();
        Word::wedge_of_gens(&v)
    })
}

fn tensor_mono_word(max_degree: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec(monomial(2), 1..=max_degree)
        .prop_map(|ms| Word::Tensor(ms.into_iter().map(Letter::Mono).collect()))
}

fn form_word() -> impl Strategy<Value = Word> {
    (
        monomial(3),
        proptest::collection::btree_set(gen_index(), 0..=3),
    )
        .prop_map(|(m, s)| Word::Form(FormWord::new(m, s.into_iter().collect())))
}

fn chain_of(words: impl Strategy<Value = Word> + 'static) -> impl Strategy<Value = Chain> {
    proptest::collection::vec((words, small_rat()), 0..5).prop_map(|terms| {
        let mut c = Chain::zero();
        for (w, x) in terms {
            c.add_term(w, x);
        }
        c
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn chain_arithmetic_laws(
        a in chain_of(tensor_gen_word(4)),
        b in chain_of(tensor_gen_word(4)),
        c in chain_of(tensor_gen_word(4)),
        s in small_rat(),
    ) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.add(&b).scale(&s), a.scale(&s).add(&b.scale(&s)));
        // no stored zeros
        for (_, x) in a.add(&b).terms() {
            prop_assert!(!num_traits::Zero::is_zero(x));
        }
    }

    #[test]
    fn words_render_and_parse_back(
        t in tensor_gen_word(4),
        w in wedge_gen_word(4),
        m in monomial(4),
        f in form_word(),
        u in tensor_mono_word(3),
    ) {
        for (kind, word) in [
            (WordKind::TensorGen, t),
            (WordKind::WedgeGen, w),
            (WordKind::Pbw, Word::Pbw(m)),
            (WordKind::Form, f),
            (WordKind::TensorMono, u),
        ] {
            let s = render_word(&word, None);
            prop_assert_eq!(parse_word(kind, &s, None).unwrap(), word, "grammar `{}`", s);
        }
    }

    #[test]
    fn chains_render_and_parse_back(c in chain_of(tensor_gen_word(3))) {
        let s = render_chain(&c, None);
        prop_assert_eq!(parse_chain(WordKind::TensorGen, &s, None).unwrap(), c, "grammar `{}`", s);
    }

    #[test]
    fn sorting_sign_is_a_permutation_sign(mut v in proptest::collection::vec(0i32..40, 0..6)) {
        let distinct = {
            let mut d = v.clone();
            d.sort_unstable();
            d.dedup();
            d.len() == v.len()
        };
        let sign = sort_with_sign(&mut v);
        prop_assert_eq!(sign.is_some(), distinct);
        if let Some(s) = sign {
            prop_assert!(s == 1 || s == -1);
            prop_assert!(v.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn leibniz_differential_squares_to_zero(c in chain_of(tensor_gen_word(5))) {
        let lie = LieLike::Lie(LiePresentation::witt());
        let mut memo = PbwMemo::new();
        let dd = ops::leibniz_d(&lie, &ops::leibniz_d(&lie, &c, &mut memo), &mut memo);
        prop_assert!(dd.is_zero());
    }

    #[test]
    fn exterior_differential_squares_to_zero(c in chain_of(wedge_gen_word(5))) {
        let lie = LieLike::Lie(LiePresentation::witt());
        let mut memo = PbwMemo::new();
        let dd = ops::ce_d(&lie, &ops::ce_d(&lie, &c, &mut memo), &mut memo);
        prop_assert!(dd.is_zero());
    }

    #[test]
    fn hochschild_and_bar_square_to_zero(c in chain_of(tensor_mono_word(4))) {
        let alg = AssocPresentation::u_witt();
        let mut memo = PbwMemo::new();
        let bb = ops::hochschild_b(&alg, &ops::hochschild_b(&alg, &c, &mut memo), &mut memo);
        prop_assert!(bb.is_zero());
        let pp = ops::b_prime(&alg, &ops::b_prime(&alg, &c, &mut memo), &mut memo);
        prop_assert!(pp.is_zero());
    }

    #[test]
    fn b_intertwines_with_bar_through_one_minus_t(c in chain_of(tensor_mono_word(4))) {
        let alg = AssocPresentation::u_witt();
        let mut memo = PbwMemo::new();
        let y = c.sub(&ops::cyclic_t(&c));
        let lhs = ops::hochschild_b(&alg, &y, &mut memo);
        let bp = ops::b_prime(&alg, &c, &mut memo);
        let rhs = bp.sub(&ops::cyclic_t(&bp));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn cyclic_rotation_has_full_period(w in tensor_mono_word(4)) {
        let n1 = match &w {
            Word::Tensor(ls) => ls.len(),
            _ => unreachable!(),
        };
        let mut c = Chain::from_word(w.clone());
        for _ in 0..n1 {
            c = ops::cyclic_t(&c);
        }
        prop_assert_eq!(c, Chain::from_word(w));
    }

    #[test]
    fn norm_annihilates_one_minus_t(c in chain_of(tensor_mono_word(3))) {
        let y = c.sub(&ops::cyclic_t(&c));
        prop_assert!(ops::cyclic_normalize(&y).is_zero());
        let n = ops::cyclic_n(&y);
        prop_assert!(n.is_zero());
    }

    #[test]
    fn cyclic_normalization_is_idempotent(c in chain_of(tensor_mono_word(4))) {
        let once = ops::cyclic_normalize(&c);
        prop_assert_eq!(ops::cyclic_normalize(&once), once.clone());
    }

    #[test]
    fn enveloping_product_is_associative(
        a in monomial(3),
        b in monomial(3),
        c in monomial(3),
    ) {
        let lie = LiePresentation::witt();
        let mut memo = PbwMemo::new();
        let mut lhs = std::collections::BTreeMap::new();
        for (m, x) in pbw_multiply(&lie, &a, &b, &mut memo) {
            for (n, y) in pbw_multiply(&lie, &m, &c, &mut memo) {
                *lhs.entry(n).or_insert_with(|| rat(0)) += &x * y;
            }
        }
        let mut rhs = std::collections::BTreeMap::new();
        for (m, x) in pbw_multiply(&lie, &b, &c, &mut memo) {
            for (n, y) in pbw_multiply(&lie, &a, &m, &mut memo) {
                *rhs.entry(n).or_insert_with(|| rat(0)) += &x * y;
            }
        }
        lhs.retain(|_, v| !num_traits::Zero::is_zero(v));
        rhs.retain(|_, v| !num_traits::Zero::is_zero(v));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn enveloping_product_preserves_weight(a in monomial(3), b in monomial(3)) {
        let lie = LiePresentation::witt();
        let mut memo = PbwMemo::new();
        let w = a.weight() + b.weight();
        for (m, _) in pbw_multiply(&lie, &a, &b, &mut memo) {
            prop_assert_eq!(m.weight(), w);
        }
    }

    #[test]
    fn mixed_differentials_anticommute(c in chain_of(form_word())) {
        let lie = LiePresentation::witt();
        let dd = ops::kahler_d(&ops::kahler_d(&c));
        prop_assert!(dd.is_zero());
        let delta2 = ops::mixed_delta(&lie, &ops::mixed_delta(&lie, &c));
        prop_assert!(delta2.is_zero());
        let anti = ops::kahler_d(&ops::mixed_delta(&lie, &c))
            .add(&ops::mixed_delta(&lie, &ops::kahler_d(&c)));
        prop_assert!(anti.is_zero());
    }

    #[test]
    fn cyclic_boundary_is_well_defined_on_classes(
        c in chain_of(tensor_mono_word(3)),
        k in chain_of(tensor_mono_word(3)),
    ) {
        // shifting a chain by an element of Im(1-t) does not change the
        // induced boundary in the quotient
        let alg = AssocPresentation::u_witt();
        let id = hlcy_core::ComplexId::CLambda(alg);
        let shifted = c.add(&k.sub(&ops::cyclic_t(&k)));
        prop_assert_eq!(id.apply(&shifted), id.apply(&c));
    }

    #[test]
    fn quotient_delta_is_well_defined_mod_im_d(
        c in chain_of(form_word()),
        z in chain_of(form_word()),
    ) {
        let lie = LiePresentation::witt();
        let id = hlcy_core::ComplexId::MixedOmegaModImD(lie);
        let shifted = c.add(&ops::kahler_d(&z));
        prop_assert_eq!(id.apply(&shifted), id.apply(&c));
    }

    #[test]
    fn elimination_strategies_agree(
        entries in proptest::collection::vec(((0usize..8, 0usize..8), small_rat()), 0..24),
    ) {
        let mut m = hlcy_core::SparseMatrix::zero(8, 8);
        for ((r, c), v) in entries {
            m.set(r, c, v);
        }
        let rank = m.rank();
        prop_assert_eq!(rank, m.rank_dense());
        prop_assert_eq!(rank + m.kernel_basis().len(), m.cols());
    }

    #[test]
    fn delta_preserves_weight_and_length(w in form_word()) {
        let lie = LiePresentation::witt();
        let (weight, length) = (w.witt_weight(), w.length());
        for (out, _) in ops::mixed_delta(&lie, &Chain::from_word(w.clone())).terms() {
            prop_assert_eq!(out.witt_weight(), weight);
            prop_assert_eq!(out.length(), length);
        }
        // the exterior derivative preserves weight and drops length by one
        for (out, _) in ops::kahler_d(&Chain::from_word(w.clone())).terms() {
            prop_assert_eq!(out.witt_weight(), weight);
            prop_assert_eq!(out.length() + 1, length);
        }
    }
}

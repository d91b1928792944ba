//! Normal ordering in the fermion–current algebra: the listed operator products,
//! confluence of the rewrite system, antisymmetry, mode extraction and admissibility.

use s1fc::algebra::{
    admissible, mode_extract, normal_order, normal_order_with, parse_word, reorder_normal, Kind, Letter, ModeLetter,
    NormalForm, Spectral, Strategy, Symbolic,
};
use s1fc::arith::{qi, RationalFunction, Ring};
use s1fc::Error;
use std::collections::BTreeMap;

fn parsed(text: &str) -> (Vec<Letter>, Symbolic) {
    parse_word(text).unwrap().to_letters().unwrap()
}

fn nf(text: &str) -> (NormalForm<RationalFunction>, Symbolic) {
    let (w, ctx) = parsed(text);
    (normal_order(&ctx, &w).unwrap(), ctx)
}

fn rf(s: &str) -> RationalFunction {
    RationalFunction::parse(s).unwrap()
}

/// All words of length `len` over the five generators, one site per letter.
fn words(len: usize) -> Vec<Vec<Letter>> {
    let mut out = vec![vec![]];
    for site in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                Kind::ALL.iter().map(move |k| {
                    let mut v = w.clone();
                    v.push(Letter::new(*k, site));
                    v
                })
            })
            .collect();
    }
    out
}

#[test]
fn confluence_on_all_words_up_to_length_four() {
    let ctx = Symbolic::numbered(4);
    let mut checked = 0;
    for len in 1..=4 {
        for w in words(len) {
            let reference = normal_order_with(&ctx, &w, Strategy::First).unwrap();
            for s in [Strategy::Last, Strategy::Seeded(1), Strategy::Seeded(0x5eed)] {
                assert_eq!(normal_order_with(&ctx, &w, s).unwrap(), reference, "{w:?} with {s:?}");
            }
            checked += 1;
        }
    }
    assert_eq!(checked, 5 + 25 + 125 + 625);
}

#[test]
fn confluence_with_repeated_sites() {
    // commuting letters may share a spectral variable inside a normal-ordered word
    let ctx = Symbolic::numbered(3);
    for w in words(3).into_iter().filter(|w| w[0].kind == w[2].kind) {
        let mut w = w;
        w[2].site = 0;
        let a = reorder_normal(&ctx, &w).unwrap();
        let b = s1fc::algebra::Orderer::new(&ctx, Strategy::Last).canon(&w).unwrap();
        assert_eq!(a, b, "{w:?}");
    }
}

#[test]
fn coincident_non_commuting_letters_are_rejected() {
    let ctx = Symbolic::numbered(2);
    let w = vec![Letter::new(Kind::J0, 0), Letter::new(Kind::C, 1), Letter::new(Kind::B, 0)];
    assert!(matches!(reorder_normal(&ctx, &w), Err(Error::SingularExtraction(_))));
    let w = vec![Letter::new(Kind::Jp, 0), Letter::new(Kind::Jm, 0)];
    assert!(matches!(normal_order(&ctx, &w), Err(Error::SingularExtraction(_))));
}

#[test]
fn current_current_products() {
    let (n, ctx) = nf("j0(x) j0(y)");
    let (jj, _) = parsed(":j0(x) j0(y):");
    let mut expect = reorder_normal(&ctx, &jj).unwrap();
    expect.add_term(vec![], rf("2/(x-y)^2"));
    assert_eq!(n, expect);

    let (n, ctx) = nf("j+(x) j-(y)");
    let mut expect = NormalForm::word(vec![Letter::new(Kind::Jp, 0), Letter::new(Kind::Jm, 1)]);
    expect.add_term(vec![Letter::new(Kind::J0, 1)], Ring::neg(&ctx.inv_diff(0, 1)));
    expect.add_term(vec![], rf("-1/(x-y)^2"));
    assert_eq!(n, expect);
}

#[test]
fn single_generators_are_normal() {
    for k in Kind::ALL {
        let ctx = Symbolic::numbered(1);
        let w = vec![Letter::new(k, 0)];
        assert_eq!(normal_order(&ctx, &w).unwrap(), NormalForm::word(w.clone()));
    }
}

#[test]
fn fermion_transposition_flips_signs() {
    let ctx = Symbolic::numbered(3);
    for (a, b) in [(Kind::B, Kind::C), (Kind::B, Kind::B), (Kind::C, Kind::C), (Kind::C, Kind::B)] {
        for third in Kind::ALL {
            let w1 = vec![Letter::new(a, 0), Letter::new(b, 1), Letter::new(third, 2)];
            let w2 = vec![Letter::new(b, 1), Letter::new(a, 0), Letter::new(third, 2)];
            let n1 = normal_order(&ctx, &w1).unwrap();
            let n2 = normal_order(&ctx, &w2).unwrap();
            assert_eq!(n1, n2.scaled(&ctx.constant(&qi(-1))), "{a:?} {b:?} {third:?}");
        }
    }
}

#[test]
fn correction_denominators_are_differences() {
    // every coefficient vanishes after multiplying by a high power of the
    // Vandermonde-type product of differences and is then a polynomial
    let ctx = Symbolic::numbered(4);
    let mut vand = RationalFunction::constant(qi(1));
    for i in 0..4 {
        for j in i + 1..4 {
            let d = ctx.diff(i, j);
            vand = Ring::mul(&vand, &Ring::mul(&d, &d));
        }
    }
    for w in words(4).into_iter().step_by(7) {
        for (_, c) in normal_order(&ctx, &w).unwrap().terms() {
            assert!(Ring::mul(c, &vand).as_polynomial().is_some(), "{w:?}: {c}");
        }
    }
}

#[test]
fn mode_extraction() {
    let modes = |pairs: &[(&str, u32)]| -> BTreeMap<String, u32> {
        pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    };
    let (n, ctx) = nf("b*(x)");
    let out = mode_extract(&n, &ctx, &modes(&[("x", 1)])).unwrap();
    assert_eq!(out.into_iter().collect::<Vec<_>>(), vec![(vec![ModeLetter { kind: Kind::B, mode: 1 }], qi(1))]);

    let (w, ctx) = parsed(":j+(x) j-(y):");
    let n = reorder_normal(&ctx, &w).unwrap();
    let out = mode_extract(&n, &ctx, &modes(&[("x", 1), ("y", 1)])).unwrap();
    let jpjm = vec![ModeLetter { kind: Kind::Jp, mode: 1 }, ModeLetter { kind: Kind::Jm, mode: 1 }];
    assert_eq!(out.into_iter().collect::<Vec<_>>(), vec![(jpjm, qi(1))]);

    // x^1 y^0 of :j+(x) j-(y): is j+_2 j-_1
    let out = mode_extract(&n, &ctx, &modes(&[("x", 2), ("y", 1)])).unwrap();
    let expect = vec![ModeLetter { kind: Kind::Jp, mode: 2 }, ModeLetter { kind: Kind::Jm, mode: 1 }];
    assert_eq!(out.keys().cloned().collect::<Vec<_>>(), vec![expect]);

    // the plain product keeps its double pole
    let (n, ctx) = nf("j0(x) j0(y)");
    let res = mode_extract(&n, &ctx, &modes(&[("x", 1), ("y", 1)]));
    assert!(matches!(res, Err(Error::SingularExtraction(_))));
}

#[test]
fn mode_extraction_of_a_regular_coefficient_matches_its_expansion() {
    // (x+y)²·:b*(x): has x^p y^q coefficients binomial(2,q) at p+q = 2
    let ctx = Symbolic::new(vec!["x".into(), "y".into()]);
    let mut n = NormalForm::default();
    n.add_term(vec![Letter::new(Kind::B, 0)], rf("(x+y)^2"));
    for (px, qy, c) in [(0u32, 2u32, 1i64), (1, 1, 2), (2, 0, 1)] {
        // the b* mode absorbs any extra power of x
        let modes: BTreeMap<String, u32> = [("x".to_string(), px + 1), ("y".to_string(), qy + 1)].into();
        let out = mode_extract(&n, &ctx, &modes).unwrap();
        assert_eq!(out.values().cloned().collect::<Vec<_>>(), vec![qi(c)], "x^{px} y^{qy}");
    }
}

#[test]
fn admissibility_examples() {
    let mw = |s: &str| parse_word(s).unwrap().to_modes().unwrap();
    assert!(admissible(&mw("b*_1 b*_2 j-_1"), 3).ok);
    assert!(admissible(&mw("b*_1 c*_1"), 2).ok);
    let a = admissible(&mw("j+_1 j0_1"), 2);
    assert!(!a.ok);
    assert_eq!(a.charge, 2);
    assert!(!admissible(&mw("b*_1 c*_1 j0_1"), 2).fits);
}

#[test]
fn word_syntax_errors() {
    for bad in ["j+(x", ":j+(x) j-(y)", "q(x)", "b*_0", "b*", "j+()"] {
        assert!(matches!(parse_word(bad), Err(Error::Parse(_))), "{bad}");
    }
}

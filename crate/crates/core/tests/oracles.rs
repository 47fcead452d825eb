//! Independent oracles: a Leibniz determinant over hand-rolled derivatives,
//! and values worked out by hand.

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use shw::closed_forms::{golden_bracket, witt_bracket, witt_shift};
use shw::grammar::parse_poly;
use shw::index::{enumerate_rows, BracketContext, MultiIndex};
use shw::poly::{rat, ratio, ExponentVector, GenPolynomial, Rational};
use shw::vandermonde::{quasi_triangular_det, van_det, vanishing_certificate, VanInput, VanishingCertificate};
use shw::wronskian::{bracket, bracket_expanded, DetMode};

fn p(d: usize, s: &str) -> GenPolynomial {
    parse_poly(s, d).unwrap()
}

fn ps(d: usize, s: &[&str]) -> Vec<GenPolynomial> {
    s.iter().map(|t| p(d, t)).collect()
}

fn ctx(d: usize, k: usize) -> BracketContext {
    BracketContext::new(d, k).unwrap()
}

fn ev(v: &[i64]) -> ExponentVector {
    ExponentVector::from_ints(v)
}

fn partial(f: &GenPolynomial, r: &MultiIndex) -> GenPolynomial {
    let mut out = GenPolynomial::zero(f.dim());
    for (e, c) in f.terms() {
        let mut coeff = c.clone();
        let mut exps = Vec::new();
        for (n, &ri) in e.entries().iter().zip(r.entries()) {
            for j in 0..ri {
                coeff *= n - rat(j as i64);
            }
            exps.push(n - rat(ri as i64));
        }
        out = &out + &GenPolynomial::monomial(ExponentVector::new(exps), coeff);
    }
    out
}

fn leibniz_bracket(d: usize, k: usize, args: &[GenPolynomial]) -> GenPolynomial {
    let rows = enumerate_rows(d, k);
    assert_eq!(rows.len(), args.len());
    let m: Vec<Vec<GenPolynomial>> = rows.iter().map(|r| args.iter().map(|f| partial(f, r)).collect()).collect();
    let n = args.len();
    let mut total = GenPolynomial::zero(d);
    for perm in (0..n).permutations(n) {
        let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
        let mut term = GenPolynomial::one(d);
        for (i, &j) in perm.iter().enumerate() {
            term = &term * &m[i][j];
            if term.is_zero() {
                break;
            }
        }
        total = if inversions % 2 == 0 { &total + &term } else { &total - &term };
    }
    total
}

fn random_poly(r: &mut ChaCha8Rng, d: usize, max_exp: i64, terms: usize) -> GenPolynomial {
    let mut out = GenPolynomial::zero(d);
    for _ in 0..terms {
        let e: Vec<i64> = (0..d).map(|_| r.gen_range(0..=max_exp)).collect();
        out = &out + &GenPolynomial::monomial(ev(&e), ratio(r.gen_range(-5..=5), r.gen_range(1..=3)));
    }
    out
}

#[test]
fn engine_matches_leibniz_on_random_arguments() {
    let mut r = ChaCha8Rng::seed_from_u64(7);
    for (d, k, samples) in [(1, 1, 8), (1, 2, 8), (1, 3, 8), (1, 4, 4), (2, 1, 8), (3, 1, 4), (2, 2, 2)] {
        let c = ctx(d, k);
        for _ in 0..samples {
            let args: Vec<GenPolynomial> = (0..c.arity()).map(|_| random_poly(&mut r, d, k as i64 + 2, 3)).collect();
            let want = leibniz_bracket(d, k, &args);
            assert_eq!(bracket(&c, &args, DetMode::FractionFree).unwrap(), want, "({d},{k})");
            assert_eq!(bracket(&c, &args, DetMode::Cofactor).unwrap(), want, "({d},{k})");
            assert_eq!(bracket_expanded(&c, &args).unwrap(), want, "({d},{k})");
        }
    }
}

#[test]
fn engine_matches_leibniz_on_laurent_and_fractional_exponents() {
    let c = ctx(2, 1);
    for args in [["x", "y", "y^-1"], ["x^(1/2)", "y", "x*y^(3/2)"], ["1", "x^-2*y", "x^(2/3) + y"]] {
        let args = ps(2, &args);
        assert_eq!(bracket(&c, &args, DetMode::Auto).unwrap(), leibniz_bracket(2, 1, &args));
    }
}

#[test]
fn published_brackets_by_leibniz() {
    let sl2 = |a: &str, b: &str| leibniz_bracket(1, 1, &ps(1, &[a, b]));
    assert_eq!(sl2("-2*x", "1"), p(1, "2"));
    assert_eq!(sl2("-2*x", "-x^2"), p(1, "2*x^2"));
    assert_eq!(sl2("1", "-x^2"), p(1, "-2*x"));
    assert_eq!(leibniz_bracket(2, 1, &ps(2, &["x", "y", "y^-1"])), p(2, "2*y^-1"));
    assert_eq!(leibniz_bracket(2, 2, &ps(2, &["1", "x", "y", "x^2", "x*y", "x*y^2"])), p(2, "4*x"));
    assert_eq!(leibniz_bracket(3, 1, &ps(3, &["x", "y", "z", "x*y"])), p(3, "x*y"));
    assert_eq!(leibniz_bracket(3, 1, &ps(3, &["1", "y", "z", "x*y"])), p(3, "y"));
    assert_eq!(leibniz_bracket(2, 1, &ps(2, &["1", "x", "x*y"])), p(2, "x"));
    assert_eq!(leibniz_bracket(2, 1, &ps(2, &["1", "y", "x*y"])), p(2, "-y"));
    assert_eq!(leibniz_bracket(2, 1, &ps(2, &["x", "y", "x*y"])), p(2, "-x*y"));
}

#[test]
fn hand_worked_values() {
    assert_eq!(bracket(&ctx(2, 1), &ps(2, &["x*y", "x^2", "y"]), DetMode::Auto).unwrap(), p(2, "-x^2*y"));
    assert_eq!(bracket(&ctx(1, 2), &ps(1, &["1", "x", "x^2"]), DetMode::Auto).unwrap(), p(1, "2"));
    assert_eq!(bracket(&ctx(1, 1), &ps(1, &["x^3", "x^5"]), DetMode::Auto).unwrap(), p(1, "2*x^7"));

    let line = VanInput::new(ctx(1, 2), vec![ev(&[0]), ev(&[1]), ev(&[2])]).unwrap();
    assert_eq!(van_det(&line), rat(2));
    assert_eq!(quasi_triangular_det(&line), rat(2));
    let half = VanInput::new(ctx(1, 1), vec![ExponentVector::new(vec![ratio(1, 2)]), ev(&[2])]).unwrap();
    assert_eq!(van_det(&half), ratio(3, 2));

    let dup = VanInput::new(ctx(2, 1), vec![ev(&[1, 1]), ev(&[1, 1]), ev(&[0, 2])]).unwrap();
    assert_eq!(vanishing_certificate(&dup), VanishingCertificate::DuplicateColumns(0, 1));
    let flat = VanInput::new(ctx(2, 1), vec![ev(&[0, 0]), ev(&[0, 1]), ev(&[0, 2])]).unwrap();
    assert_eq!(vanishing_certificate(&flat), VanishingCertificate::ConstantCoordinate(0));
    let low = VanInput::new(ctx(2, 2), vec![ev(&[0, 0]), ev(&[1, 0]), ev(&[0, 1]), ev(&[0, 2]), ev(&[1, 1]), ev(&[0, 3])]).unwrap();
    assert_eq!(vanishing_certificate(&low), VanishingCertificate::DeficientDegree(0));
    assert_eq!(van_det(&low), rat(0));

    let c = ctx(2, 1);
    assert_eq!(witt_shift(&c), ratio(1, 2));
    let w = witt_bracket(&c, &[ev(&[0, 0]), ev(&[1, 0]), ev(&[0, 1])]).unwrap();
    assert_eq!(w.omega, rat(1));
    assert_eq!(w.index_sum, ev(&[1, 1]));
    let half = ExponentVector::new(vec![ratio(3, 2), ratio(3, 2)]);
    assert_eq!(w.to_poly(&c), GenPolynomial::monomial(half, Rational::from_integer(1.into())));

    let g = golden_bracket(&ctx(2, 1), &ev(&[2, 0]), &ev(&[0, 0])).unwrap();
    assert_eq!(g.to_poly(), p(2, "2*x"));
    assert_eq!(golden_bracket(&ctx(2, 1), &ev(&[2, 0]), &ev(&[1, 1])).unwrap().to_poly(), p(2, "-x^2*y"));
}

#[test]
fn tower_by_leibniz() {
    for n in 2..=5u32 {
        for l in 0..=n {
            let args: Vec<GenPolynomial> = (0..=n)
                .filter(|&j| j != l)
                .map(|j| {
                    let f: i64 = (1..=j as i64).product();
                    GenPolynomial::monomial(ev(&[j as i64]), ratio(1, f))
                })
                .collect();
            let f: i64 = (1..=(n - l) as i64).product();
            let want = GenPolynomial::monomial(ev(&[(n - l) as i64]), ratio(1, f));
            assert_eq!(leibniz_bracket(1, n as usize - 1, &args), want, "N={n} l={l}");
        }
    }
}

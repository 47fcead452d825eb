//! Replays the published reference values and the identities they rest on.
//!
//! Each criterion is a function returning a short detail on success or the
//! first disagreement on failure. Random samples use fixed seeds.

use crate::closed_forms::{
    golden_arguments, golden_bracket, golden_bracket_at, lonely_arguments, lonely_structure_bracket,
    lonely_structure_bracket_differential, witt_bracket, witt_element, witt_shift,
};
use crate::error::Result;
use crate::grammar::parse_poly;
use crate::index::{
    arity, degree_shift, degree_shift_by_enumeration, enumerate_rows, standard_monomials, unnormalized_monomials,
    BracketContext, MultiIndex,
};
use crate::lab::{
    bracket_image, classify, closure_iterate, degree_sum_diagnostics, divergence_witness, divergence_witness_for,
    is_closed, is_perfect, low_degree_span, monomial_top_perfect_possible, Classification, ClosureLimits,
    ClosureStatus, DegreeLabel, SpanBasis,
};
use crate::poly::{factorial, rat, rat_big, ratio, ExponentVector, GenPolynomial, Rational};
use crate::vandermonde::{
    ordinary_vandermonde, quasi_triangular_det, van_det, vanishing_certificate, VanInput, VanishingCertificate,
};
use crate::wronskian::{bracket, bracket_monomial, DetMode};
use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

/// Result of one criterion.
#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub id: u32,
    pub title: &'static str,
    pub outcome: std::result::Result<String, String>,
    pub seconds: f64,
}

impl CriterionReport {
    pub fn passed(&self) -> bool {
        self.outcome.is_ok()
    }

    pub fn detail(&self) -> &str {
        match &self.outcome {
            Ok(s) | Err(s) => s,
        }
    }

    /// One line: `criterion N [PASS|FAIL] title: detail`.
    pub fn line(&self) -> String {
        format!(
            "criterion {:>2} [{}] {} ({:.2}s): {}",
            self.id,
            if self.passed() { "PASS" } else { "FAIL" },
            self.title,
            self.seconds,
            self.detail()
        )
    }
}

type Check = std::result::Result<String, String>;

/// Identifiers and titles of the criteria, in order.
pub const CRITERIA: [(u32, &str); 14] = [
    (1, "sl(2) realisation"),
    (2, "divided-power tower"),
    (3, "plane algebra tables"),
    (4, "Vandermonde identity"),
    (5, "translation invariance"),
    (6, "degree-shift identities"),
    (7, "one-replacement structure formula"),
    (8, "two-replacement formula grid"),
    (9, "second-power replacement constants"),
    (10, "lonely algebras are closed"),
    (11, "chubby and lanky algebras diverge"),
    (12, "perfection"),
    (13, "Witt-type relations"),
    (14, "consistency of constant brackets"),
];

/// Run one criterion by identifier.
pub fn run_criterion(id: u32) -> CriterionReport {
    let title = CRITERIA.iter().find(|(i, _)| *i == id).map(|(_, t)| *t).unwrap_or("unknown");
    let start = Instant::now();
    let outcome = match id {
        1 => c01_sl2(),
        2 => c02_tower(),
        3 => c03_plane_tables(),
        4 => c04_vandermonde(),
        5 => c05_translation(),
        6 => c06_shift(),
        7 => c07_structure(),
        8 => c08_golden_grid(),
        9 => c09_second_power(),
        10 => c10_lonely_closed(),
        11 => c11_divergence(),
        12 => c12_perfection(),
        13 => c13_witt(),
        14 => c14_consistency(),
        _ => Err(format!("no criterion {id}")),
    };
    CriterionReport { id, title, outcome, seconds: start.elapsed().as_secs_f64() }
}

/// Run every criterion in order.
pub fn run_all() -> Vec<CriterionReport> {
    CRITERIA.iter().map(|(id, _)| run_criterion(*id)).collect()
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn lift<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn p(d: usize, s: &str) -> GenPolynomial {
    parse_poly(s, d).expect("valid literal")
}

fn ps(d: usize, src: &[&str]) -> Vec<GenPolynomial> {
    src.iter().map(|s| p(d, s)).collect()
}

fn ctx(d: usize, k: usize) -> BracketContext {
    BracketContext::new(d, k).expect("valid context")
}

fn ev(v: &[i64]) -> ExponentVector {
    ExponentVector::from_ints(v)
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_rational(r: &mut ChaCha8Rng, lo: i64, hi: i64, max_den: i64) -> Rational {
    ratio(r.gen_range(lo..=hi), r.gen_range(1..=max_den))
}

/// Every exponent vector with entries in `0..=max`.
fn exponent_box(d: usize, max: i64) -> Vec<ExponentVector> {
    (0..d).map(|_| 0..=max).multi_cartesian_product().map(|v| ev(&v)).collect()
}

/// Every exponent vector of total degree exactly `deg`.
fn homogeneous_exponents(d: usize, deg: usize) -> Vec<ExponentVector> {
    enumerate_rows(d, deg)
        .into_iter()
        .filter(|r| r.norm() as usize == deg)
        .map(|r| ExponentVector::from_index(&r))
        .collect()
}

fn c01_sl2() -> Check {
    let c = ctx(1, 1);
    let (e, h, f) = (p(1, "1"), p(1, "-2*x"), p(1, "-x^2"));
    let w = |a: &GenPolynomial, b: &GenPolynomial| lift(bracket(&c, &[a.clone(), b.clone()], DetMode::Auto));
    ensure!(w(&h, &e)? == e.scale(&rat(2)), "[h,e] != 2e");
    ensure!(w(&h, &f)? == f.scale(&rat(-2)), "[h,f] != -2f");
    ensure!(w(&e, &f)? == h, "[e,f] != h");
    Ok("[h,e]=2e, [h,f]=-2f, [e,f]=h".into())
}

fn divided_power(d1_power: u32) -> GenPolynomial {
    GenPolynomial::monomial(ev(&[d1_power as i64]), Rational::one() / rat_big(factorial(d1_power)))
}

fn c02_tower() -> Check {
    let mut count = 0;
    for n in 2..=6u32 {
        let c = ctx(1, n as usize - 1);
        for l in 0..=n {
            let args: Vec<GenPolynomial> = (0..=n).filter(|&j| j != l).map(divided_power).collect();
            for mode in [DetMode::FractionFree, DetMode::Cofactor] {
                let v = lift(bracket(&c, &args, mode))?;
                ensure!(v == divided_power(n - l), "N={n}, removed power {l}: got {v}");
            }
            count += 1;
        }
    }
    let c = ctx(1, 2);
    let v = lift(lonely_structure_bracket(&c, &MultiIndex::new(vec![1]), &ev(&[3])))?;
    ensure!(v.scale(&ratio(-1, 6)) == divided_power(2), "structure form of the N=3 tower: {v}");
    Ok(format!("{count} removals for N=2..6"))
}

type Entry<'a> = (&'a [&'a str], &'a str);

fn c03_plane_tables() -> Check {
    let c = ctx(2, 1);
    let tables: [(&str, &[Entry]); 3] = [
        ("x^2", &[(&["1", "x", "y"], "1"), (&["1", "x", "x^2"], "0"), (&["1", "y", "x^2"], "-2*x"), (&["x", "y", "x^2"], "-x^2")]),
        ("x*y", &[(&["1", "x", "y"], "1"), (&["1", "x", "x*y"], "x"), (&["1", "y", "x*y"], "-y"), (&["x", "y", "x*y"], "-x*y")]),
        ("y^2", &[(&["1", "x", "y"], "1"), (&["1", "x", "y^2"], "2*y"), (&["1", "y", "y^2"], "0"), (&["x", "y", "y^2"], "-y^2")]),
    ];
    for (top, rows) in tables {
        for (args, want) in rows {
            let args = ps(2, args);
            for mode in [DetMode::Cofactor, DetMode::FractionFree] {
                let got = lift(bracket(&c, &args, mode))?;
                ensure!(got == p(2, want), "algebra with {top}: bracket {:?} = {got}, expected {want}", args.iter().map(|a| a.to_string()).collect::<Vec<_>>());
            }
        }
        let gens = ps(2, &["1", "x", "y", top]);
        let report = lift(closure_iterate(&c, &gens, &ClosureLimits::defaults(&c)))?;
        ensure!(report.status == ClosureStatus::Stabilized && report.basis.len() == 4, "closure of algebra with {top}: {:?}", report.dims);
    }
    let image = lift(bracket_image(&c, &ps(2, &["1", "x", "y", "x^2"])))?;
    ensure!(!image.contains(&p(2, "y")), "image of the x^2 algebra contains y");
    let image = lift(bracket_image(&c, &ps(2, &["1", "x", "y", "x*y"])))?;
    ensure!(image.len() == 4, "image of the xy algebra has dimension {}", image.len());
    let laurent = lift(bracket(&c, &ps(2, &["x", "y", "y^-1"]), DetMode::Auto))?;
    ensure!(laurent == p(2, "2*y^-1"), "[x,y,1/y] = {laurent}");
    Ok("three tables, closures of dimension 4".into())
}

fn random_tuples(r: &mut ChaCha8Rng, d: usize, n: usize) -> Vec<ExponentVector> {
    (0..n)
        .map(|_| ExponentVector::new((0..d).map(|_| random_rational(r, -3, 6, 3)).collect()))
        .collect()
}

fn c04_vandermonde() -> Check {
    let mut r = rng(4);
    let mut total = 0;
    for d in 1..=3 {
        for k in 1..=3 {
            let c = ctx(d, k);
            for _ in 0..200 {
                let mut tuples = random_tuples(&mut r, d, c.arity());
                if r.gen_bool(0.2) {
                    tuples = tuples.iter().map(|t| ExponentVector::new(t.entries().iter().map(|q| q.floor().abs()).collect())).collect();
                }
                let input = lift(VanInput::new(c.clone(), tuples.clone()))?;
                let v = van_det(&input);
                ensure!(v == quasi_triangular_det(&input), "({d},{k}): determinants disagree on {tuples:?}");
                if vanishing_certificate(&input) != VanishingCertificate::NoneFound {
                    ensure!(v.is_zero(), "({d},{k}): certificate without vanishing");
                }
                tuples.swap(0, c.arity() - 1);
                let swapped = van_det(&lift(VanInput::new(c.clone(), tuples))?);
                ensure!(swapped == -v.clone(), "({d},{k}): column swap did not negate");
                total += 1;
            }
        }
    }
    for n in 2..=7 {
        let c = ctx(1, n - 1);
        for _ in 0..20 {
            let ms: Vec<Rational> = (0..n).map(|_| random_rational(&mut r, -5, 5, 4)).collect();
            let input = lift(VanInput::new(c.clone(), ms.iter().map(|m| ExponentVector::new(vec![m.clone()])).collect()))?;
            ensure!(van_det(&input) == ordinary_vandermonde(&ms), "ordinary Vandermonde mismatch at N={n}");
        }
    }
    let c = ctx(2, 2);
    let std_input = lift(VanInput::new(c.clone(), c.rows().iter().map(ExponentVector::from_index).collect()))?;
    ensure!(van_det(&std_input) == rat(4), "standard rows at (2,2) give {}", van_det(&std_input));
    ensure!(quasi_triangular_det(&std_input) == rat(4), "quasi-triangular standard value");
    ensure!(vanishing_certificate(&std_input) == VanishingCertificate::NoneFound, "certificate on standard rows");
    let flat = lift(VanInput::new(ctx(2, 1), vec![ev(&[1, 0]), ev(&[1, 1]), ev(&[1, 2])]))?;
    ensure!(van_det(&flat).is_zero(), "constant coordinate should vanish");
    let line = lift(VanInput::new(ctx(1, 2), vec![ev(&[0]), ev(&[1]), ev(&[2])]))?;
    ensure!(van_det(&line) == rat(2) && quasi_triangular_det(&line) == rat(2), "ordinary 3x3 value");
    Ok(format!("{total} random inputs, standard value 4"))
}

fn c05_translation() -> Check {
    let mut r = rng(5);
    for d in 1..=3 {
        for k in 1..=3 {
            let c = ctx(d, k);
            for _ in 0..100 {
                let tuples = random_tuples(&mut r, d, c.arity());
                let s = ExponentVector::new((0..d).map(|_| random_rational(&mut r, -7, 7, 5)).collect());
                let moved: Vec<ExponentVector> = tuples.iter().map(|t| t.add(&s)).collect();
                let a = van_det(&lift(VanInput::new(c.clone(), tuples))?);
                let b = van_det(&lift(VanInput::new(c.clone(), moved))?);
                ensure!(a == b, "({d},{k}): shift changed the determinant");
            }
        }
    }
    Ok("900 shifted inputs".into())
}

fn c06_shift() -> Check {
    for d in 1..=8usize {
        for k in 1..=8usize {
            let n = arity(d, k);
            let num = &n * BigUint::from(k);
            ensure!((&num % BigUint::from(d + 1)).is_zero(), "kN/(d+1) not integral at ({d},{k})");
            let closed = degree_shift(d, k);
            let counted = degree_shift_by_enumeration(d, k);
            ensure!(closed == counted, "({d},{k}): closed {closed:?} vs enumerated {counted:?}");
            let rows = enumerate_rows(d, k);
            for i in 0..d {
                let s: u64 = rows.iter().map(|r| r.entries()[i] as u64).sum();
                ensure!(BigUint::from(s) == closed.per_coordinate, "({d},{k}): coordinate {i} sum {s}");
            }
        }
    }
    let c = ctx(2, 1);
    let dg = degree_sum_diagnostics(&c, &ps(2, &["1", "x", "y"]));
    ensure!(dg.coordinates.iter().all(|x| x.label == DegreeLabel::Exact), "low-degree plane not exact");
    let dg = degree_sum_diagnostics(&c, &ps(2, &["1", "x", "y", "x*y"]));
    ensure!(dg.promising, "xy algebra not promising");
    let c = ctx(2, 10);
    let tower: Vec<GenPolynomial> = (0..=100).map(|j| GenPolynomial::mono(&[0, j])).collect();
    let dg = degree_sum_diagnostics(&c, &tower);
    ensure!(dg.coordinates[0].label == DegreeLabel::Deficient, "power tower of y not deficient in x");
    Ok("64 contexts".into())
}

fn c07_structure() -> Check {
    let mut cases = 0;
    for d in 1..=3 {
        for k in 1..=3 {
            let c = ctx(d, k);
            let monos = exponent_box(d, k as i64 + 2);
            for row in c.rows() {
                for a in &monos {
                    let closed = lift(lonely_structure_bracket(&c, row, a))?;
                    let mono = GenPolynomial::monomial(a.clone(), Rational::one());
                    let args = lift(lonely_arguments(&c, row, mono.clone()))?;
                    let engine = lift(bracket(&c, &args, DetMode::Auto))?;
                    ensure!(closed == engine, "({d},{k}) row {row} a={mono}: closed {closed} vs engine {engine}");
                    let diff = lift(lonely_structure_bracket_differential(&c, row, &mono))?;
                    ensure!(diff == closed, "({d},{k}) row {row}: differential form differs");
                    cases += 1;
                }
                let own = lift(lonely_structure_bracket(&c, row, &ExponentVector::from_index(row)))?;
                ensure!(own == GenPolynomial::constant(d, rat_big(row.factorial())), "self slot {row} gives {own}");
            }
        }
    }
    let v = lift(lonely_structure_bracket(&ctx(2, 1), &MultiIndex::new(vec![1, 0]), &ev(&[2, 0])))?;
    ensure!(v == p(2, "2*x"), "row x with x^2 gives {v}");
    Ok(format!("{cases} row/monomial pairs"))
}

/// Displayed closed form for unnormalised arguments `(q, p, rows 3..N)` at `d = 2`.
fn displayed_two_replacement(k: usize, n: &[i64; 2], m: &[i64; 2]) -> GenPolynomial {
    let constants = [2i64, 48, 331776, 19813556551680];
    let (dp, dq) = (rat(n[0] + n[1]), rat(m[0] + m[1]));
    let mut c = rat(constants[k - 2]);
    for l in 2..=k as i64 {
        c *= (&dp - rat(l)) * (&dq - rat(l));
    }
    c *= (&dp - rat(1)) * rat(m[0]) - (&dq - rat(1)) * rat(n[0]);
    GenPolynomial::monomial(ev(&[n[0] + m[0] - 1, n[1] + m[1]]), c)
}

/// Raw expanded form for arguments `(p, rows 3..N, q)` at `d = 2`.
fn raw_two_replacement(k: usize, n: &[i64; 2], m: &[i64; 2]) -> GenPolynomial {
    let constants = [-2i64, -48, 331776, 19813556551680];
    let (n1, n2, m1, m2) = (n[0], n[1], m[0], m[1]);
    let mut c = rat(constants[k - 2]);
    for l in 2..=k as i64 {
        c *= rat(m1 + m2 - l) * rat(n1 + n2 - l);
    }
    c *= rat(m1 * n2 - m1 - m2 * n1 + n1);
    GenPolynomial::monomial(ev(&[n1 + m1 - 1, n2 + m2]), c)
}

fn golden_point(c: &BracketContext, n: [i64; 2], m: [i64; 2]) -> std::result::Result<(), String> {
    let (ne, me) = (ev(&n), ev(&m));
    let closed = lift(golden_bracket(c, &ne, &me))?.to_poly();
    let engine = lift(bracket(c, &lift(golden_arguments(c, 0, &ne, &me))?, DetMode::Auto))?;
    ensure!(closed == engine, "k={} n={n:?} m={m:?}: closed {closed} vs engine {engine}", c.order());
    let k = c.order();
    if k >= 2 {
        let (pp, qq) = (GenPolynomial::monomial(ne, rat(1)), GenPolynomial::monomial(me, rat(1)));
        let mut args = unnormalized_monomials(c);
        args[0] = qq.clone();
        args[1] = pp.clone();
        let engine = lift(bracket(c, &args, DetMode::Auto))?;
        let shown = displayed_two_replacement(k, &n, &m);
        ensure!(engine == shown, "k={k} n={n:?} m={m:?}: unnormalised engine {engine} vs displayed {shown}");
        let mut raw_args = vec![pp];
        raw_args.extend(unnormalized_monomials(c).into_iter().skip(2));
        raw_args.push(qq);
        let engine = lift(bracket(c, &raw_args, DetMode::Auto))?;
        let raw = raw_two_replacement(k, &n, &m);
        ensure!(engine == raw, "k={k} n={n:?} m={m:?}: raw order engine {engine} vs raw {raw}");
    }
    Ok(())
}

fn c08_golden_grid() -> Check {
    let mut points = 0;
    for k in 1..=3 {
        let c = ctx(2, k);
        for v in (0..4).map(|_| 0..=5i64).multi_cartesian_product() {
            golden_point(&c, [v[0], v[1]], [v[2], v[3]])?;
            points += 1;
        }
    }
    let mut r = rng(8);
    for k in 4..=5 {
        let c = ctx(2, k);
        for _ in 0..200 {
            let v: Vec<i64> = (0..4).map(|_| r.gen_range(0..=9)).collect();
            golden_point(&c, [v[0], v[1]], [v[2], v[3]])?;
            points += 1;
        }
    }
    for (d, k) in [(3, 1), (3, 2)] {
        let c = ctx(d, k);
        for _ in 0..100 {
            let n = ExponentVector::new((0..d).map(|_| rat(r.gen_range(0..=5))).collect());
            let m = ExponentVector::new((0..d).map(|_| rat(r.gen_range(0..=5))).collect());
            let coord = r.gen_range(0..d);
            let closed = lift(golden_bracket_at(&c, coord, &n, &m))?.to_poly();
            let engine = lift(bracket(&c, &lift(golden_arguments(&c, coord, &n, &m))?, DetMode::Auto))?;
            ensure!(closed == engine, "({d},{k}) coordinate {coord}: closed {closed} vs engine {engine}");
        }
    }
    for k in 1..=4 {
        let c = ctx(2, k);
        let unit = lift(golden_bracket(&c, &ev(&[1, 0]), &ev(&[0, 0])))?;
        ensure!(unit.coeff == rat(1), "p=x, q=1 gives {}", unit.coeff);
        let zero = lift(golden_bracket(&c, &ev(&[0, k as i64 + 1]), &ev(&[0, k as i64 + 2])))?;
        ensure!(zero.coeff.is_zero(), "powers of y give {}", zero.coeff);
    }
    let g = lift(golden_bracket(&ctx(2, 1), &ev(&[2, 0]), &ev(&[1, 1])))?;
    ensure!(g.to_poly() == p(2, "-x^2*y"), "p=x^2, q=xy gives {}", g.to_poly());
    Ok(format!("{points} exponent points"))
}

/// Displayed form for unnormalised arguments `(q, x, y, p, rows 5..N)` at `d = 2`.
fn displayed_second_power(k: usize, n: &[i64; 2], m: &[i64; 2]) -> GenPolynomial {
    let constants = [1i64, 48, 497664, 39627113103360];
    let (dp, dq) = (n[0] + n[1], m[0] + m[1]);
    let mut c = -rat(constants[k - 2]);
    for l in 3..=k as i64 {
        c *= rat(dp - l) * rat(dq - l);
    }
    let curly = (dp - 1) * (dp - 2) * m[0] * (m[0] - 1) - (dq - 1) * (dq - 2) * n[0] * (n[0] - 1);
    c *= rat(curly);
    GenPolynomial::monomial(ev(&[n[0] + m[0] - 2, n[1] + m[1]]), c)
}

fn c09_second_power() -> Check {
    let raw_constants = [1i64, 48, -497664, -39627113103360];
    let mut r = rng(9);
    for k in 2..=5 {
        let c = ctx(2, k);
        for _ in 0..50 {
            let n = [r.gen_range(0..=7), r.gen_range(0..=7)];
            let m = [r.gen_range(0..=7), r.gen_range(0..=7)];
            let (pp, qq) = (GenPolynomial::mono(&n), GenPolynomial::mono(&m));
            let mut args = unnormalized_monomials(&c);
            args[0] = qq.clone();
            args[3] = pp.clone();
            let engine = lift(bracket(&c, &args, DetMode::Auto))?;
            let shown = displayed_second_power(k, &n, &m);
            ensure!(engine == shown, "k={k} n={n:?} m={m:?}: engine {engine} vs displayed {shown}");
            let unnorm = unnormalized_monomials(&c);
            let mut raw_args = vec![pp];
            raw_args.extend([unnorm[1].clone(), unnorm[2].clone()]);
            raw_args.extend(unnorm.into_iter().skip(4));
            raw_args.push(qq);
            let engine = lift(bracket(&c, &raw_args, DetMode::Auto))?;
            let raw = shown.scale(&(rat(raw_constants[k - 2]) / -rat([1i64, 48, 497664, 39627113103360][k - 2])));
            ensure!(engine == raw, "k={k} n={n:?} m={m:?}: raw order engine {engine} vs {raw}");
        }
    }
    let mut args = unnormalized_monomials(&ctx(2, 2));
    args[0] = p(2, "1");
    args[3] = p(2, "x^2");
    let v = lift(bracket(&ctx(2, 2), &args, DetMode::Auto))?;
    ensure!(v == p(2, "4"), "p=x^2, q=1 gives {v}");
    Ok("200 exponent points".into())
}

fn random_top(r: &mut ChaCha8Rng, d: usize, deg: usize) -> GenPolynomial {
    let monos = homogeneous_exponents(d, deg);
    loop {
        let mut top = GenPolynomial::zero(d);
        for e in &monos {
            if r.gen_bool(0.5) {
                top.add_term(e.clone(), rat(r.gen_range(-4..=4)));
            }
        }
        if !top.is_zero() {
            return top;
        }
    }
}

fn c10_lonely_closed() -> Check {
    let mut r = rng(10);
    let mut count = 0;
    for d in 1..=3 {
        for k in 1..=3 {
            let c = ctx(d, k);
            for _ in 0..20 {
                let top = random_top(&mut r, d, k + 1);
                let mut basis = unnormalized_monomials(&c);
                basis.push(top.clone());
                let check = lift(is_closed(&c, &basis))?;
                ensure!(check.closed, "({d},{k}) top {top} not closed: {:?}", check.witness.map(|w| w.value.to_string()));
                let dim = SpanBasis::from_polys(d, &basis).len();
                ensure!(dim == c.arity() + 1, "({d},{k}) dimension {dim}");
                let class = lift(classify(&c, &basis))?;
                ensure!(matches!(class, Classification::Lonely { .. }), "({d},{k}) top {top} classified {}", class.name());
                count += 1;
            }
        }
    }
    let check = lift(is_closed(&ctx(3, 1), &ps(3, &["1", "x", "y", "z", "x*y"])))?;
    ensure!(check.closed, "space algebra with xy not closed");
    let check = lift(is_closed(&ctx(2, 1), &ps(2, &["1", "x", "y", "x^2", "x*y"])))?;
    let escaped = check.witness.map(|w| w.value.total_degree());
    ensure!(!check.closed && escaped == Some(Some(rat(3))), "chubby plane algebra: escape degree {escaped:?}");
    Ok(format!("{count} random tops"))
}

#[derive(Clone, Copy, Debug)]
enum Case {
    A,
    B,
    C,
    Lanky(i64),
}

/// Expected coefficient of step `n -> n+1` in the divergence sequence.
fn expected_step(k: i64, case: Case, p: &ExponentVector, q: &ExponentVector, coord: usize, n: i64) -> Rational {
    let deg_p = p.norm().to_integer().to_i64().expect("small");
    let deg_q = q.norm().to_integer().to_i64().expect("small");
    let deg_pn = (n + 1) * k + (deg_p - k);
    let mut c = Rational::one() / rat_big(factorial(k as u32) * factorial(k as u32 - 1));
    for l in 2..=k {
        c *= rat(deg_pn - l) * rat(deg_q - l);
    }
    let m1 = q.get(coord).to_integer().to_i64().expect("small");
    let n1 = p.get(coord).to_integer().to_i64().expect("small");
    let pattern = match case {
        Case::A => k * (m1 + n),
        Case::B => k * (m1 - n1 + n),
        Case::C => (n + 1) * k,
        Case::Lanky(l) => n * k + l - 1,
    };
    c * rat(pattern)
}

fn c11_divergence() -> Check {
    let table: [(usize, usize, Case, &str, &str, usize); 12] = [
        (2, 1, Case::A, "x^2", "y^2", 0),
        (2, 1, Case::B, "x^2", "x*y", 0),
        (2, 1, Case::C, "x*y", "y^2", 0),
        (2, 1, Case::Lanky(2), "x^2", "x^3", 0),
        (2, 2, Case::A, "x^3", "y^3", 0),
        (2, 2, Case::B, "x^3", "x*y^2", 0),
        (2, 2, Case::C, "x*y^2", "y^3", 0),
        (2, 2, Case::Lanky(3), "x^3", "x^5", 0),
        (3, 1, Case::A, "x^2", "y*z", 0),
        (3, 1, Case::B, "x^2", "x*z", 0),
        (3, 1, Case::C, "x*z", "y^2", 0),
        (3, 1, Case::Lanky(3), "z^2", "z^4", 2),
    ];
    let steps = 10;
    for (d, k, case, q, pp, coord) in table {
        let c = ctx(d, k);
        let (qe, pe) = (p(d, q).support()[0].clone(), p(d, pp).support()[0].clone());
        let w = lift(divergence_witness_for(&c, coord, &pe, &qe, steps))?;
        let deg_p = pe.norm().to_integer().to_i64().expect("small");
        let mut cur = pe.clone();
        for n in 0..steps {
            let step = &w.steps[n + 1];
            let want = expected_step(k as i64, case, &pe, &qe, coord, n as i64);
            ensure!(!step.coeff.is_zero(), "({d},{k}) {case:?}: zero coefficient at step {}", n + 1);
            ensure!(step.coeff == want, "({d},{k}) {case:?} step {}: coefficient {} vs {}", n + 1, step.coeff, want);
            cur = cur.add(&qe).sub(&ExponentVector::unit(d, coord));
            ensure!(step.exps == cur, "({d},{k}) {case:?} step {}: wrong monomial", n + 1);
            let want_deg = (n as i64 + 2) * k as i64 + (deg_p - k as i64);
            ensure!(step.exps.norm() == rat(want_deg), "({d},{k}) {case:?} step {}: degree", n + 1);
        }
        let mut gens = unnormalized_monomials(&c);
        gens.push(p(d, q));
        gens.push(p(d, pp));
        let class = lift(classify(&c, &gens))?;
        let expected = if matches!(case, Case::Lanky(_)) { "lanky" } else { "chubby" };
        ensure!(class.name() == expected, "({d},{k}) {case:?}: classified {}", class.name());
        let w = lift(divergence_witness(&c, &class, steps))?;
        ensure!(w.steps.iter().all(|s| !s.coeff.is_zero()), "({d},{k}) {case:?}: classified witness vanished");
        let report = lift(closure_iterate(&c, &gens, &ClosureLimits::defaults(&c)))?;
        ensure!(report.status == ClosureStatus::DegreeCapHit, "({d},{k}) {case:?}: closure {:?}", report.status);
        ensure!(report.dims.windows(2).all(|x| x[0] < x[1]), "({d},{k}) {case:?}: dims {:?}", report.dims);
    }
    let lanky = lift(classify(&ctx(2, 1), &ps(2, &["1", "x", "y", "x^3"])))?;
    ensure!(lanky == Classification::Lanky { coord: 0, excess: 2 }, "x^3 algebra classified {lanky:?}");
    let chubby = lift(classify(&ctx(2, 1), &ps(2, &["1", "x", "y", "x^2*y"])))?;
    ensure!(chubby.name() == "chubby", "x^2 y algebra classified {chubby:?}");
    Ok("12 witnesses of length 10, closures hit the cap".into())
}

fn c12_perfection() -> Check {
    let c = ctx(3, 1);
    let perfect = ps(3, &["1", "x", "y", "z", "x*y + y*z + x*z"]);
    ensure!(lift(is_perfect(&c, &perfect))?.perfect, "space algebra with the symmetric quadric not perfect");
    let relations: [(&[&str], &str); 5] = [
        (&["x", "y", "z", "x*y + y*z + x*z"], "x*y + y*z + x*z"),
        (&["1", "x", "y", "x*y + y*z + x*z"], "x + y"),
        (&["1", "x", "z", "x*y + y*z + x*z"], "-x - z"),
        (&["1", "y", "z", "x*y + y*z + x*z"], "y + z"),
        (&["1", "x", "y", "z"], "1"),
    ];
    for (args, want) in relations {
        let got = lift(bracket(&c, &ps(3, args), DetMode::Auto))?;
        ensure!(got == p(3, want), "relation {args:?}: {got} vs {want}");
    }
    let check = lift(is_perfect(&c, &ps(3, &["1", "x", "y", "z", "x*y"])))?;
    ensure!(!check.perfect && check.missing == ps(3, &["z"]), "xy space algebra: missing {:?}", check.missing);
    let plane = ctx(2, 1);
    ensure!(lift(is_perfect(&plane, &ps(2, &["1", "x", "y", "x*y"])))?.perfect, "xy plane algebra not perfect");
    for top in ["x^2", "y^2"] {
        ensure!(!lift(is_perfect(&plane, &ps(2, &["1", "x", "y", top])))?.perfect, "{top} plane algebra perfect");
    }
    for n in 2..=5 {
        let line = ctx(1, n - 1);
        let basis: Vec<GenPolynomial> = (0..=n as u32).map(divided_power).collect();
        ensure!(lift(is_perfect(&line, &basis))?.perfect, "line algebra up to degree {n} not perfect");
    }
    for (d, k) in [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1)] {
        let c = ctx(d, k);
        let mut any = false;
        for top in homogeneous_exponents(d, k + 1) {
            let mut basis = unnormalized_monomials(&c);
            basis.push(GenPolynomial::monomial(top, rat(1)));
            any |= lift(is_perfect(&c, &basis))?.perfect;
        }
        ensure!(any == monomial_top_perfect_possible(&c), "({d},{k}): exhaustive {any}");
    }
    Ok("relations reproduced, six contexts searched".into())
}

fn c13_witt() -> Check {
    let mut r = rng(13);
    for (d, k) in [(1, 1), (1, 2), (2, 1)] {
        let c = ctx(d, k);
        for _ in 0..100 {
            let idx: Vec<ExponentVector> = (0..c.arity())
                .map(|_| ExponentVector::new((0..d).map(|_| random_rational(&mut r, -6, 6, 4)).collect()))
                .collect();
            let wb = lift(witt_bracket(&c, &idx))?;
            let args: Vec<GenPolynomial> = idx.iter().map(|i| witt_element(&c, i)).collect();
            let engine = lift(bracket(&c, &args, DetMode::Auto))?;
            ensure!(engine == wb.to_poly(&c), "({d},{k}): engine {engine} vs omega {} at {:?}", wb.omega, wb.index_sum);
            let exps: Vec<ExponentVector> = args.iter().map(|a| a.support()[0].clone()).collect();
            let mb = lift(bracket_monomial(&c, &exps))?;
            ensure!(mb.coeff == wb.omega, "({d},{k}): monomial path coefficient differs");
        }
    }
    let c = ctx(1, 1);
    ensure!(witt_shift(&c) == rat(1), "line shift");
    for _ in 0..50 {
        let (i, j) = (r.gen_range(-20..=20), r.gen_range(-20..=20));
        let wb = lift(witt_bracket(&c, &[ev(&[i]), ev(&[j])]))?;
        ensure!(wb.omega == rat(j - i) && wb.index_sum == ev(&[i + j]), "[a_{i}, a_{j}]");
    }
    for n in 2..=6 {
        ensure!(witt_shift(&ctx(1, n - 1)) == ratio(n as i64, 2), "shift for N={n}");
    }
    ensure!(witt_shift(&ctx(2, 1)) == ratio(1, 2), "plane shift");
    let wb = lift(witt_bracket(&c, &[ev(&[3]), ev(&[5])]))?;
    ensure!(wb.omega == rat(2) && wb.index_sum == ev(&[8]), "[a_3, a_5]");
    Ok("300 rational index tuples".into())
}

fn c14_consistency() -> Check {
    let mut searched = 0;
    for (d, k) in [(1, 1), (1, 2), (2, 1)] {
        let c = ctx(d, k);
        let standard: Vec<ExponentVector> = c.rows().iter().map(ExponentVector::from_index).sorted().collect();
        let monos = exponent_box(d, k as i64 + 2);
        let mut found_standard = false;
        for combo in monos.iter().cloned().combinations(c.arity()) {
            let mb = lift(bracket_monomial(&c, &combo))?;
            searched += 1;
            if mb.coeff.is_zero() || !mb.exps.is_zero() {
                continue;
            }
            let sorted: Vec<ExponentVector> = combo.into_iter().sorted().collect();
            ensure!(sorted == standard, "({d},{k}): non-standard constant bracket {sorted:?}");
            found_standard = true;
        }
        ensure!(found_standard, "({d},{k}): standard set did not give a constant");
        ensure!(lift(bracket(&c, &standard_monomials(&c), DetMode::Auto))? == GenPolynomial::one(d), "({d},{k}): normalised standard bracket");
    }
    let low = low_degree_span(&ctx(2, 2));
    let image = lift(bracket_image(&ctx(2, 2), low.elements()))?;
    ensure!(image.len() == 1 && image.contains(&GenPolynomial::one(2)), "low-degree image");
    let class = lift(classify(&ctx(2, 2), low.elements()))?;
    ensure!(class == Classification::Trivial, "low-degree algebra classified {class:?}");
    let report = lift(closure_iterate(&ctx(2, 2), low.elements(), &ClosureLimits::defaults(&ctx(2, 2))))?;
    ensure!(report.status == ClosureStatus::Stabilized && report.dims.last() == Some(&6), "low-degree closure {:?}", report.dims);
    Ok(format!("{searched} monomial tuples"))
}

//! Every example runs and prints its headline values.

#[path = "../examples/bracket.rs"]
mod bracket;
#[path = "../examples/rows_shift.rs"]
mod rows_shift;
#[path = "../examples/vandermonde.rs"]
mod vandermonde;
#[path = "../examples/structure.rs"]
mod structure;
#[path = "../examples/golden.rs"]
mod golden;
#[path = "../examples/witt.rs"]
mod witt;
#[path = "../examples/classify.rs"]
mod classify;
#[path = "../examples/closure.rs"]
mod closure;
#[path = "../examples/perfect.rs"]
mod perfect;
#[path = "../examples/diagnose.rs"]
mod diagnose;

#[test]
fn bracket_example() {
    let out = bracket::run_example();
    assert!(out.contains("[-2*x, 1] = 2\n"));
    assert!(out.contains("[1, -x^2] = -2*x\n"));
    assert!(out.ends_with("= 4*x\n"));
}

#[test]
fn rows_shift_example() {
    assert!(rows_shift::run_example().contains("d=2 k=2 N=6 shift=4 total=8 rows=(0,0) (1,0) (0,1) (2,0) (1,1) (0,2)"));
}

#[test]
fn vandermonde_example() {
    let out = vandermonde::run_example();
    assert!(out.starts_with("0,0;1,0;0,1;2,0;1,1;0,2: det=4 triangular=4"));
    assert!(out.contains("certificate=DeficientDegree(0)"));
}

#[test]
fn closed_form_examples() {
    assert!(!structure::run_example().contains("false"));
    assert!(!golden::run_example().contains("false"));
    assert!(golden::run_example().starts_with("k=1 p=x^2 q=x*y: -x^2*y"));
    let out = witt::run_example();
    assert!(out.contains("[a_3, a_5] = 2 a_8"));
    assert!(out.contains("plane shift 1/2: x^(3/2)*y^(3/2)"));
}

#[test]
fn lab_examples() {
    let out = classify::run_example();
    assert!(out.contains("<1, x, y, x*y>: lonely\n"));
    assert!(out.contains("<1, x, y, x^3>: lanky escaping via x^3, x^4"));
    assert!(out.contains("<x, y, x*y>: inconsistent"));
    let out = closure::run_example();
    assert!(out.contains("stabilized dims [4, 4]"));
    assert!(out.contains("<1, x, y, x^2, x*y>: degree_cap_hit"));
    let out = perfect::run_example();
    assert!(out.contains("perfect=false missing=[z]"));
    assert!(out.contains("d=2 k=2: a monomial top can be perfect: false"));
    let out = diagnose::run_example();
    assert!(out.contains("x 0 deficient"));
    assert!(out.contains("promising true"));
}

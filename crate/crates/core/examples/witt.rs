//! Shifted monomials close under the bracket with Vandermonde structure constants.

use shw::closed_forms::{witt_bracket, witt_shift};
use shw::grammar::format_poly;
use shw::index::BracketContext;
use shw::poly::ExponentVector;

pub fn run_example() -> String {
    let mut out = String::new();
    let line = BracketContext::new(1, 1).unwrap();
    for (i, j) in [(3, 5), (-2, 4), (0, 0)] {
        let w = witt_bracket(&line, &[ExponentVector::from_ints(&[i]), ExponentVector::from_ints(&[j])]).unwrap();
        out += &format!("[a_{i}, a_{j}] = {} a_{}\n", w.omega, w.index_sum.get(0));
    }
    let plane = BracketContext::new(2, 1).unwrap();
    let idx: Vec<ExponentVector> = [[0, 0], [1, 0], [0, 1]].iter().map(|v| ExponentVector::from_ints(v)).collect();
    let w = witt_bracket(&plane, &idx).unwrap();
    out += &format!("plane shift {}: {}\n", witt_shift(&plane), format_poly(&w.to_poly(&plane)));
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}

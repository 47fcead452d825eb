//! Generalised Vandermonde determinants and vanishing certificates.

use shw::cli::parse_tuples;
use shw::index::BracketContext;
use shw::vandermonde::{quasi_triangular_det, van_det, vanishing_certificate, VanInput};

pub fn run_example() -> String {
    let mut out = String::new();
    let ctx = BracketContext::new(2, 2).unwrap();
    for tuples in ["0,0;1,0;0,1;2,0;1,1;0,2", "1/2,0;3,1;0,-1;2,2;1,5;4,1/3", "0,0;1,0;0,1;0,2;1,1;0,3"] {
        let input = VanInput::new(ctx.clone(), parse_tuples(tuples, 2).unwrap()).unwrap();
        out += &format!(
            "{tuples}: det={} triangular={} certificate={:?}\n",
            van_det(&input),
            quasi_triangular_det(&input),
            vanishing_certificate(&input)
        );
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}

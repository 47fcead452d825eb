//! Row order, arity and degree shift for a few contexts.

use shw::index::{degree_shift, BracketContext};

pub fn run_example() -> String {
    let mut out = String::new();
    for (d, k) in [(1, 3), (2, 1), (2, 2), (3, 2)] {
        let ctx = BracketContext::new(d, k).unwrap();
        let rows: Vec<String> = ctx.rows().iter().map(|r| format!("({r})")).collect();
        let shift = degree_shift(d, k);
        out += &format!(
            "d={d} k={k} N={} shift={} total={} rows={}\n",
            ctx.arity(),
            shift.per_coordinate,
            shift.total,
            rows.join(" ")
        );
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}

//! Acceptance run: one line per criterion, nonzero exit on any failure.

use shw::cli;
use shw::selfcheck::{run_criterion, CRITERIA};
use std::process::ExitCode;

fn criterion_15() -> Result<String, String> {
    let out = cli::run(&["selfcheck"]);
    if out.exit_code != 0 {
        return Err(format!("selfcheck exited {}: {}", out.exit_code, out.stdout));
    }
    let passes = out.stdout.lines().filter(|l| l.contains("[PASS]")).count();
    if passes != CRITERIA.len() || !out.stdout.contains("all criteria passed") {
        return Err(format!("{passes} passing lines"));
    }
    Ok(format!("{passes} criteria replayed, exit 0"))
}

fn main() -> ExitCode {
    let mut failed = 0;
    for (id, _) in CRITERIA {
        let report = run_criterion(id);
        println!("{}", report.line());
        if !report.passed() {
            failed += 1;
        }
    }
    let outcome = criterion_15();
    match &outcome {
        Ok(d) => println!("criterion 15 [PASS] selfcheck command: {d}"),
        Err(d) => {
            println!("criterion 15 [FAIL] selfcheck command: {d}");
            failed += 1;
        }
    }
    if failed == 0 {
        println!("acceptance: 15/15 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}

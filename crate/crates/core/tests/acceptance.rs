//! One PASS/FAIL line per acceptance criterion; exits non-zero on any FAIL.

use std::process::ExitCode;
use std::time::Duration;

use kr_soliton::verify::{criterion, Config, CRITERIA};

fn main() -> ExitCode {
    let cfg = Config::default();
    println!("acceptance seed {:#x}", cfg.seed);
    let mut all = true;
    for (id, title) in CRITERIA {
        let outcomes = criterion(id, &cfg);
        let slow = id == 2 && outcomes.iter().any(|o| o.elapsed > Duration::from_secs(60));
        let ok = !outcomes.is_empty() && outcomes.iter().all(|o| o.passed()) && !slow;
        all &= ok;
        let cases: usize = outcomes.iter().map(|o| o.cases).sum();
        println!("{} criterion {id} ({title}): {cases} cases", if ok { "PASS" } else { "FAIL" });
        for o in &outcomes {
            println!("    {}", o.summary());
            for f in o.failures.iter().take(5) {
                println!("        {f}");
            }
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

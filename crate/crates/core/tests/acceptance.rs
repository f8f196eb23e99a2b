//! Runs every reproduction criterion at full depth and prints one PASS/FAIL line per criterion.
//!
//! One sub-check is known not to hold: the largest irreducible degree of `Sp4(4)` is 340, not the
//! value 425 given by the closed form `q⁴+2q³+2q²+2q+1` (that family of characters is empty at
//! `q = 4`). The criterion is still reported as FAIL. The run only exits nonzero if anything else
//! fails, or if that sub-check unexpectedly starts to hold.

use std::process::ExitCode;

use sgp_core::groups::Registry;
use sgp_core::verify::{Tier, Verifier};

const KNOWN_FAILURE: (u8, &str) = (7, "largest degree equals q⁴+2q³+2q²+2q+1");

fn main() -> ExitCode {
    let verifier = Verifier::new(Registry::default(), 0);
    let mut unexpected = Vec::new();
    for report in verifier.run(Tier::Full) {
        println!("{}", report.summary_line());
        for check in &report.checks {
            let known = (report.id, check.name.as_str()) == KNOWN_FAILURE;
            if known && check.passed {
                unexpected.push(format!("[{}] {} now holds: {}", report.id, check.name, check.detail));
            }
            if !known && !check.passed {
                unexpected.push(format!("[{}] {}: {}", report.id, check.name, check.detail));
            }
            if known && !check.passed {
                println!("     known: {} ({})", check.name, check.detail);
            }
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: all criteria as expected");
        ExitCode::SUCCESS
    } else {
        for u in &unexpected {
            println!("unexpected: {u}");
        }
        ExitCode::FAILURE
    }
}

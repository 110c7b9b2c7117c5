//! Runs every acceptance criterion and prints one line per criterion.

use std::process::ExitCode;
use std::time::Instant;

use bruhat_forge::verify::{run, SweepConfig, Theorem};

fn main() -> ExitCode {
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let cfg = SweepConfig::default();
    let mut failed = 0;
    for (k, t) in Theorem::ALL.into_iter().enumerate() {
        if !filter.is_empty() && !filter.iter().any(|f| t.id().contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let res = run(t, &cfg);
        let secs = start.elapsed().as_secs_f64();
        match res {
            Ok(r) if r.passed() => {
                println!("PASS {:>2} {:<22} {} ({} checks, {secs:.1}s)", k + 1, t.id(), t.summary(), r.checked);
                if std::env::var_os("ACCEPTANCE_NOTES").is_some() {
                    r.notes.iter().for_each(|n| println!("       {n}"));
                }
            }
            Ok(r) => {
                failed += 1;
                println!(
                    "FAIL {:>2} {:<22} {} ({} of {} checks failed, {secs:.1}s)",
                    k + 1,
                    t.id(),
                    t.summary(),
                    r.counterexamples.len(),
                    r.checked
                );
                for c in r.counterexamples.iter().take(10) {
                    println!("       {c}");
                }
            }
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {:<22} error: {e}", k + 1, t.id());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}

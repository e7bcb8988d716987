//! The built-in consistency suites on a small support.
use multiseg::selfcheck::{run_selfcheck, SelfCheckOptions};
use multiseg::Support;

fn main() -> multiseg::Result<()> {
    let opts = SelfCheckOptions { support: Support::ints(1, 4), max_content: 6, random: 200, ..Default::default() };
    for r in run_selfcheck(&opts)? {
        match &r.failure {
            None => println!("PASS {} ({} checked)", r.name, r.checked),
            Some(f) => println!("FAIL {}: {f}", r.name),
        }
    }
    Ok(())
}

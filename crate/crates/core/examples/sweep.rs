//! Rigidity sweeps over the simple, ladder and Arthur families.
use multiseg::{mw_dual, rigidity_sweep, Family, Support};

fn main() -> multiseg::Result<()> {
    let cases = [
        (Family::Simple, Support::ints(1, 5), 9),
        (Family::Ladder, Support::ints(1, 5), 9),
        (Family::Arthur, Support::ints(-2, 2), 9),
    ];
    for (family, support, content) in cases {
        let s = rigidity_sweep(family, support, content, &mw_dual)?;
        println!("{family:?} on {support}: {} checked, {} failures", s.checked, s.failures.len());
    }
    Ok(())
}

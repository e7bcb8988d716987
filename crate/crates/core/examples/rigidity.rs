//! Rigidity of single multisegments, with witnesses when it fails.
use multiseg::{mw_dual, rigidity_check, Multisegment};

fn main() -> multiseg::Result<()> {
    for s in ["{[-1,0],[0,1]}", "{[1],[2]}", "{[1],[2],[2,3]}"] {
        let alpha: Multisegment = s.parse()?;
        let report = rigidity_check(&alpha, &mw_dual)?;
        println!("{alpha}: singleton={} in a class of {}", report.singleton, report.class_size);
        for w in &report.witnesses {
            println!("  witness {w}");
        }
    }
    Ok(())
}

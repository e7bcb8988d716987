//! The invariant profile e, L, n, c, S and the endoscopic count C.
use multiseg::{invariant_profile, Multisegment};

fn main() -> multiseg::Result<()> {
    for s in ["{[1],[2],[3,5],[4,6],[6,7]}", "{[1],[3]}", "{[1,2],[2,3],[3,4]}"] {
        let alpha: Multisegment = s.parse()?;
        let p = invariant_profile(&alpha)?;
        println!(
            "{alpha}: e={} L={} n={} c={} S={} C={}",
            p.e_max, p.longest, p.count, p.components, p.cover_size, p.endoscopic
        );
    }
    Ok(())
}

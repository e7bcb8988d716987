//! Family membership and the block decomposition of Arthur-type multisegments.
use multiseg::{arthur_decompose, classify, Multisegment};

fn main() -> multiseg::Result<()> {
    for s in ["{[0],[1]}", "{[-1,0],[0,1],[0]}", "{[1,2],[2,3]}", "{[0,1],[0]}"] {
        let alpha: Multisegment = s.parse()?;
        let c = classify(&alpha);
        println!("{alpha}: simple={} ladder={} arthur={}", c.simple, c.ladder, c.arthur);
        if let Some(d) = arthur_decompose(&alpha)? {
            for (block, k) in &d.blocks {
                println!("  block {block} x{k} about {}", d.offset);
            }
        }
    }
    Ok(())
}

//! Rank triangles of a multisegment and of its dual.
use multiseg::{dual_ranks, multisegment_from_ranks, ranks, Multisegment};

fn main() -> multiseg::Result<()> {
    let alpha: Multisegment = "{[1,3],[2,4],[3,5]}".parse()?;
    let r = ranks(&alpha);
    print!("{}", r.render());
    assert_eq!(multisegment_from_ranks(&r)?, alpha);
    println!("dual ranks from path counts:");
    print!("{}", dual_ranks(&alpha).render());
    Ok(())
}

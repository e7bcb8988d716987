//! All multisegments of a weight, and the upper set of one of them.
use multiseg::{action_closure, enumerate_weight, upper_set, Weight};

fn main() -> multiseg::Result<()> {
    let w = Weight::from_ints(&[(1, 1), (2, 2), (3, 1)]);
    let class = enumerate_weight(&w)?;
    println!("weight {w}: {} multisegments", class.len());
    let bottom = &class[0];
    let above = upper_set(bottom)?;
    let closure = action_closure(bottom)?;
    println!("above {bottom}: {} by ranks, {} by actions", above.len(), closure.len());
    Ok(())
}

//! The elementary actions and the partial order they generate.
use multiseg::{act_conjunction, act_union_intersection, leq, upper_set, Multisegment};

fn main() -> multiseg::Result<()> {
    let alpha: Multisegment = "{[1],[2],[2,3]}".parse()?;
    for i in 0..alpha.len() {
        for j in i + 1..alpha.len() {
            if let Some(b) = act_union_intersection(&alpha, i, j)? {
                println!("union/intersection on ({i},{j}): {b}");
            }
            if let Some(b) = act_conjunction(&alpha, i, j)? {
                println!("conjunction on ({i},{j}): {b}");
            }
        }
    }
    for beta in upper_set(&alpha)? {
        println!("{alpha} <= {beta}: {}", leq(&alpha, &beta));
    }
    Ok(())
}

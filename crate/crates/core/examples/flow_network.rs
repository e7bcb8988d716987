//! The precedence graph behind the path-count dual, as DOT.
use multiseg::{PrecedenceGraph, Multisegment};
use multiseg::flow::disjoint_paths;

fn main() -> multiseg::Result<()> {
    let alpha: Multisegment = "{[1,2],[2,3],[3,4]}".parse()?;
    let g = PrecedenceGraph::build(&alpha);
    print!("{}", g.to_dot());
    let (lo, hi) = (alpha.min_value().unwrap(), alpha.max_value().unwrap());
    println!("// {} disjoint paths from {lo} to {hi}", disjoint_paths(&g, lo, hi).len());
    Ok(())
}

//! Zelevinsky dual by both engines, with the iteration trace.
use multiseg::{flow_dual, mw_dual_traced, Multisegment};

fn main() -> multiseg::Result<()> {
    let input = std::env::args().nth(1).unwrap_or_else(|| "{[1],[2],[3,5],[4,6],[6,7]}".into());
    let alpha: Multisegment = input.parse()?;
    let (dual, trace) = mw_dual_traced(&alpha);
    for (k, it) in trace.iterations.iter().enumerate() {
        let chain: Vec<String> = it.chain.iter().map(|l| l.segment.to_string()).collect();
        println!("iteration {}: chain {} emits {}", k + 1, chain.join(" "), it.emitted);
    }
    println!("mw   : {dual}");
    println!("flow : {}", flow_dual(&alpha)?);
    Ok(())
}

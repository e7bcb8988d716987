//! Exact combinatorics of multisegments.
//!
//! A multisegment is a finite multiset of runs of consecutive values. This
//! crate computes its Zelevinsky dual by two independent routes (the
//! Mœglin–Waldspurger iteration in [`mw`] and vertex-disjoint path counts in
//! [`flow`]), converts to and from rank triangles, classifies the simple,
//! ladder and Arthur-type families, and checks the rigidity property
//! exhaustively over weight classes.
//!
//! ```
//! use multiseg::{mw_dual, flow_dual, Multisegment};
//!
//! let alpha: Multisegment = "{[1],[2],[3,5],[4,6],[6,7]}".parse().unwrap();
//! let dual = mw_dual(&alpha);
//! assert_eq!(dual.to_string(), "{[1,4],[4,6],[5,7]}");
//! assert_eq!(flow_dual(&alpha).unwrap(), dual);
//! ```

pub mod cli;
pub mod error;
pub mod families;
pub mod flow;
pub mod invariants;
pub mod json;
pub mod multisegment;
pub mod mw;
pub mod order;
pub mod parse;
pub mod ranks;
pub mod rigidity;
pub mod segment;
pub mod selfcheck;
pub mod space;
pub mod value;

pub use error::{Error, Result};
pub use families::{arthur_decompose, center, classify, is_arthur, is_ladder, is_simple, ArthurDecomposition};
pub use flow::{dual_ranks, flow_dual, PrecedenceGraph};
pub use invariants::{endoscopic_count, invariant_profile, InvariantProfile};
pub use multisegment::{Multisegment, Weight};
pub use mw::{mw_dual, mw_dual_traced, mw_first_segment, DualTrace};
pub use order::{act_conjunction, act_union_intersection, leq};
pub use parse::{format_multisegment, parse_multisegment};
pub use ranks::{multisegment_from_ranks, ranks, RankTriangle};
pub use rigidity::{rigidity_check, rigidity_sweep, Engine, Family, RigidityReport};
pub use segment::Segment;
pub use space::{action_closure, enumerate_weight, upper_set, Support};
pub use value::Value;

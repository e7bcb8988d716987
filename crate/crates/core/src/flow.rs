//! The network route to the dual.
//!
//! Every value `a` of every segment becomes a vertex; a segment `Dn` that
//! precedes `Dm` contributes edges `v(Dm, a+1) -> v(Dn, a)`. The dual rank
//! `r~[i,j]` is the maximum number of vertex-disjoint paths from level `j`
//! down to level `i`, found as a unit-capacity max flow on the split network.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use crate::error::Result;
use crate::multisegment::Multisegment;
use crate::ranks::RankTriangle;
use crate::value::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    /// Canonical index of the segment.
    pub segment: usize,
    pub value: Value,
}

#[derive(Clone, Debug)]
pub struct PrecedenceGraph {
    vertices: Vec<Vertex>,
    levels: BTreeMap<Value, Vec<usize>>,
    out: Vec<Vec<usize>>,
}

impl PrecedenceGraph {
    pub fn build(alpha: &Multisegment) -> Self {
        let segs = alpha.segments();
        let mut vertices = Vec::with_capacity(alpha.content());
        let mut start = Vec::with_capacity(segs.len());
        let mut levels: BTreeMap<Value, Vec<usize>> = BTreeMap::new();
        for (k, s) in segs.iter().enumerate() {
            start.push(vertices.len());
            for a in s.values() {
                levels.entry(a).or_default().push(vertices.len());
                vertices.push(Vertex { segment: k, value: a });
            }
        }
        let id = |k: usize, a: Value| start[k] + segs[k].base().steps_to(a) as usize;
        let mut out = vec![Vec::new(); vertices.len()];
        for (n, dn) in segs.iter().enumerate() {
            for (m, dm) in segs.iter().enumerate() {
                if !dn.precedes(dm) {
                    continue;
                }
                for a in dn.values() {
                    if dm.contains(a.succ()) {
                        out[id(m, a.succ())].push(id(n, a));
                    }
                }
            }
        }
        PrecedenceGraph { vertices, levels, out }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Vertex ids of level `a`, i.e. one per segment containing `a`.
    pub fn level(&self, a: Value) -> &[usize] {
        self.levels.get(&a).map_or(&[], Vec::as_slice)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out.iter().enumerate().flat_map(|(u, vs)| vs.iter().map(move |&v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    pub fn to_dot(&self) -> String {
        let name = |v: &Vertex| format!("\"D{}_{}\"", v.segment, v.value);
        let mut s = String::from("digraph precedence {\n");
        for v in &self.vertices {
            let _ = writeln!(s, "  {};", name(v));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(s, "  {} -> {};", name(&self.vertices[u]), name(&self.vertices[v]));
        }
        s.push_str("}\n");
        s
    }
}

#[derive(Clone, Debug)]
struct Arc {
    to: usize,
    cap: u32,
    initial: u32,
    rev: usize,
}

/// A small integral flow network solved with Dinic's algorithm.
#[derive(Clone, Debug)]
pub struct FlowNetwork {
    adj: Vec<Vec<Arc>>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork { adj: vec![Vec::new(); nodes] }
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn add_node(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        let rev_from = self.adj[to].len() + usize::from(from == to);
        let rev_to = self.adj[from].len();
        self.adj[from].push(Arc { to, cap, initial: cap, rev: rev_from });
        self.adj[to].push(Arc { to: from, cap: 0, initial: 0, rev: rev_to });
    }

    fn bfs(&self, s: usize, t: usize, level: &mut [i32]) -> bool {
        level.fill(-1);
        level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for a in &self.adj[u] {
                if a.cap > 0 && level[a.to] < 0 {
                    level[a.to] = level[u] + 1;
                    queue.push_back(a.to);
                }
            }
        }
        level[t] >= 0
    }

    fn dfs(&mut self, u: usize, t: usize, pushed: u32, level: &[i32], iter: &mut [usize]) -> u32 {
        if u == t {
            return pushed;
        }
        while iter[u] < self.adj[u].len() {
            let k = iter[u];
            let Arc { to, cap, rev, .. } = self.adj[u][k];
            if cap > 0 && level[to] == level[u] + 1 {
                let got = self.dfs(to, t, pushed.min(cap), level, iter);
                if got > 0 {
                    self.adj[u][k].cap -= got;
                    self.adj[to][rev].cap += got;
                    return got;
                }
            }
            iter[u] += 1;
        }
        0
    }

    /// Maximum flow value from `s` to `t`. Leaves the residual state behind
    /// so that [`FlowNetwork::flow_paths`] can decompose it.
    pub fn max_flow(&mut self, s: usize, t: usize) -> u32 {
        let n = self.adj.len();
        let mut level = vec![-1; n];
        let mut iter = vec![0; n];
        let mut total = 0;
        while self.bfs(s, t, &mut level) {
            iter.fill(0);
            loop {
                let f = self.dfs(s, t, u32::MAX, &level, &mut iter);
                if f == 0 {
                    break;
                }
                total += f;
            }
        }
        total
    }

    /// Decompose the current flow into `s -> t` node paths (unit capacities).
    pub fn flow_paths(&self, s: usize, t: usize) -> Vec<Vec<usize>> {
        let mut used: Vec<Vec<u32>> = self
            .adj
            .iter()
            .map(|arcs| arcs.iter().map(|a| a.initial.saturating_sub(a.cap)).collect())
            .collect();
        let mut paths = Vec::new();
        loop {
            let mut path = vec![s];
            let mut u = s;
            while u != t {
                let Some(k) = (0..self.adj[u].len()).find(|&k| used[u][k] > 0 && self.adj[u][k].initial > 0)
                else {
                    return paths;
                };
                used[u][k] -= 1;
                u = self.adj[u][k].to;
                path.push(u);
            }
            paths.push(path);
        }
    }
}

/// Split network of a precedence graph: vertex `v` becomes `2v -> 2v+1`.
fn split_base(graph: &PrecedenceGraph) -> FlowNetwork {
    let mut net = FlowNetwork::new(2 * graph.vertex_count());
    for v in 0..graph.vertex_count() {
        net.add_arc(2 * v, 2 * v + 1, 1);
    }
    for (u, v) in graph.edges() {
        net.add_arc(2 * u + 1, 2 * v, 1);
    }
    net
}

/// The split network with terminal arcs for the query `(i, j)`; returns the
/// network with its source and sink node ids.
pub fn query_network(graph: &PrecedenceGraph, i: Value, j: Value) -> (FlowNetwork, usize, usize) {
    attach_terminals(split_base(graph), graph, i, j)
}

fn attach_terminals(mut net: FlowNetwork, graph: &PrecedenceGraph, i: Value, j: Value) -> (FlowNetwork, usize, usize) {
    let s = net.add_node();
    let t = net.add_node();
    for &v in graph.level(j) {
        net.add_arc(s, 2 * v, 1);
    }
    for &v in graph.level(i) {
        net.add_arc(2 * v + 1, t, 1);
    }
    (net, s, t)
}

/// Maximum set of vertex-disjoint paths from level `j` to level `i`, each
/// given as the list of graph vertices it visits.
pub fn disjoint_paths(graph: &PrecedenceGraph, i: Value, j: Value) -> Vec<Vec<usize>> {
    let (mut net, s, t) = query_network(graph, i, j);
    net.max_flow(s, t);
    net.flow_paths(s, t)
        .into_iter()
        .map(|p| p.into_iter().filter(|&x| x != s && x != t && x % 2 == 0).map(|x| x / 2).collect())
        .collect()
}

/// Ranks of the dual computed by max flow for every pair `i < j`.
pub fn dual_ranks(alpha: &Multisegment) -> RankTriangle {
    let (Some(min), Some(max)) = (alpha.min_value(), alpha.max_value()) else {
        return RankTriangle::empty();
    };
    let graph = PrecedenceGraph::build(alpha);
    let base = split_base(&graph);
    RankTriangle::from_fn(min, max, |i, j| {
        if i == j {
            return graph.level(i).len() as u32;
        }
        if graph.level(i).is_empty() || graph.level(j).is_empty() {
            return 0;
        }
        let (mut net, s, t) = attach_terminals(base.clone(), &graph, i, j);
        net.max_flow(s, t)
    })
}

pub fn flow_dual(alpha: &Multisegment) -> Result<Multisegment> {
    dual_ranks(alpha).to_multisegment()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ranks::ranks;

    fn ms(pairs: &[(i64, i64)]) -> Multisegment {
        Multisegment::from_ints(pairs)
    }

    fn v(x: i64) -> Value {
        Value::int(x)
    }

    #[test]
    fn graph_examples() {
        let g = PrecedenceGraph::build(&ms(&[(1, 1), (2, 2)]));
        assert_eq!(g.vertex_count(), 2);
        let edges: Vec<_> = g.edges().map(|(a, b)| (g.vertices()[a], g.vertices()[b])).collect();
        assert_eq!(
            edges,
            vec![(Vertex { segment: 1, value: v(2) }, Vertex { segment: 0, value: v(1) })]
        );

        let g = PrecedenceGraph::build(&ms(&[(5, 5)]));
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));

        let g = PrecedenceGraph::build(&ms(&[(1, 2), (1, 2)]));
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 0));
    }

    #[test]
    fn levels_match_weight() {
        let a = ms(&[(1, 1), (2, 2), (3, 5), (4, 6), (6, 7)]);
        let g = PrecedenceGraph::build(&a);
        for (value, count) in a.weight().iter() {
            assert_eq!(g.level(value).len(), count);
        }
        for (u, w) in g.edges() {
            assert_eq!(g.vertices()[u].value.pred(), g.vertices()[w].value);
        }
    }

    #[test]
    fn max_flow_small_networks() {
        let mut net = FlowNetwork::new(3);
        net.add_arc(0, 1, 1);
        assert_eq!(net.max_flow(0, 2), 0);

        // diamond: s -> a -> t, s -> b -> t
        let mut net = FlowNetwork::new(4);
        net.add_arc(0, 1, 1);
        net.add_arc(0, 2, 1);
        net.add_arc(1, 3, 1);
        net.add_arc(2, 3, 1);
        assert_eq!(net.max_flow(0, 3), 2);
        assert_eq!(net.flow_paths(0, 3).len(), 2);

        let g = PrecedenceGraph::build(&ms(&[(1, 1), (2, 2)]));
        let (mut net, s, t) = query_network(&g, v(1), v(2));
        assert_eq!(net.max_flow(s, t), 1);
    }

    #[test]
    fn max_flow_needs_residual_arcs() {
        // the greedy first path s-a-d-t blocks both others unless undone
        let (s, a, b, c, d, t) = (0, 1, 2, 3, 4, 5);
        let mut net = FlowNetwork::new(6);
        for (x, y) in [(s, a), (s, b), (a, c), (a, d), (b, d), (c, t), (d, t)] {
            net.add_arc(x, y, 1);
        }
        assert_eq!(net.max_flow(s, t), 2);
    }

    #[test]
    fn dual_rank_examples() {
        let r = dual_ranks(&ms(&[(1, 1), (2, 2)]));
        assert_eq!((r.get(v(1), v(1)), r.get(v(2), v(2)), r.get(v(1), v(2))), (1, 1, 1));
        let r = dual_ranks(&ms(&[(1, 2), (1, 2)]));
        assert_eq!(r.get(v(1), v(2)), 0);
        let simple = ms(&[(1, 3), (2, 4), (3, 5)]);
        assert_eq!(dual_ranks(&simple), ranks(&simple));
    }

    #[test]
    fn flow_dual_examples() {
        assert_eq!(
            flow_dual(&ms(&[(1, 1), (2, 2), (3, 5), (4, 6), (6, 7)])).unwrap(),
            ms(&[(1, 4), (4, 6), (5, 7)])
        );
        assert_eq!(flow_dual(&Multisegment::empty()).unwrap(), Multisegment::empty());
        assert_eq!(flow_dual(&ms(&[(1, 2)])).unwrap(), ms(&[(1, 1), (2, 2)]));
    }

    #[test]
    fn disjoint_paths_share_no_vertex() {
        let a = ms(&[(1, 2), (1, 3), (2, 4), (3, 4), (2, 3)]);
        let g = PrecedenceGraph::build(&a);
        let r = dual_ranks(&a);
        for (i, j, rank) in r.entries().filter(|(i, j, _)| i < j) {
            let paths = disjoint_paths(&g, i, j);
            assert_eq!(paths.len() as u32, rank);
            let mut seen = std::collections::HashSet::new();
            for p in &paths {
                assert_eq!(g.vertices()[p[0]].value, j);
                assert_eq!(g.vertices()[*p.last().unwrap()].value, i);
                for &x in p {
                    assert!(seen.insert(x), "vertex {x} reused");
                }
            }
        }
    }

    #[test]
    fn dot_names_vertices_by_segment_and_value() {
        let dot = PrecedenceGraph::build(&ms(&[(1, 1), (2, 2)])).to_dot();
        assert!(dot.contains("\"D1_2\" -> \"D0_1\";"));
    }
}

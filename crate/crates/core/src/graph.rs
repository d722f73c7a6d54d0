//! Directed graphs, Hamiltonian-path instances, path validation, planted
//! instance generation, and the instance text format.
//!
//! Graphs are simple (no self-loops, no duplicate arcs) with nodes
//! `0..n-1`. Adjacency lists are kept sorted ascending so that every
//! construction path yields the same canonical object.

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Index of a node, valid only inside a graph with more nodes than it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NodeId(pub u32);

impl NodeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("node {0} out of range (graph has {1} nodes)")]
    NodeOutOfRange(u32, u32),
    #[error("self-loop at node {0}")]
    SelfLoop(u32),
    #[error("duplicate arc {0} -> {1}")]
    DuplicateArc(u32, u32),
}

/// Errors from parsing the instance text format, each with its 1-based
/// line number.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: malformed header, expected `n m s e`")]
    MalformedHeader { line: usize },
    #[error("line {line}: expected `u v`")]
    MalformedArc { line: usize },
    #[error("line {line}: node {id} out of range (n = {n})")]
    NodeOutOfRange { line: usize, id: u64, n: u32 },
    #[error("line {line}: self-loop at node {id}")]
    SelfLoop { line: usize, id: u32 },
    #[error("line {line}: duplicate arc {u} -> {v}")]
    DuplicateArc { line: usize, u: u32, v: u32 },
    #[error("line {line}: endpoints must differ when n >= 2")]
    EqualEndpoints { line: usize },
    #[error("line {line}: expected {expected} arc lines, found more input")]
    TooManyArcs { line: usize, expected: usize },
    #[error("expected {expected} arc lines, found {found}")]
    TooFewArcs { expected: usize, found: usize },
    #[error("line {line}: n must be at least 1")]
    EmptyGraph { line: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("n must be at least 2, got {0}")]
    TooFewNodes(u32),
    #[error("delta must be in 1..n, got delta={delta} for n={n}")]
    BadDelta { delta: u32, n: u32 },
}

/// Simple directed graph in canonical form: adjacency lists sorted
/// ascending, no self-loops, no duplicate arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiGraph {
    adj: Vec<Vec<NodeId>>,
}

impl DiGraph {
    pub fn new(n: u32) -> Self {
        DiGraph {
            adj: vec![Vec::new(); n as usize],
        }
    }

    /// Builds a graph from an arc list, rejecting self-loops, duplicates,
    /// and out-of-range endpoints.
    pub fn from_arcs(n: u32, arcs: &[(u32, u32)]) -> Result<Self, GraphError> {
        let mut g = DiGraph::new(n);
        for &(u, v) in arcs {
            g.add_arc(u, v)?;
        }
        g.canonicalize();
        Ok(g)
    }

    fn add_arc(&mut self, u: u32, v: u32) -> Result<(), GraphError> {
        let n = self.node_count();
        if u >= n {
            return Err(GraphError::NodeOutOfRange(u, n));
        }
        if v >= n {
            return Err(GraphError::NodeOutOfRange(v, n));
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.adj[u as usize].contains(&NodeId(v)) {
            return Err(GraphError::DuplicateArc(u, v));
        }
        self.adj[u as usize].push(NodeId(v));
        Ok(())
    }

    fn canonicalize(&mut self) {
        for list in &mut self.adj {
            list.sort_unstable();
        }
    }

    #[inline]
    pub fn node_count(&self) -> u32 {
        self.adj.len() as u32
    }

    pub fn arc_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }

    #[inline]
    pub fn successors(&self, v: NodeId) -> &[NodeId] {
        &self.adj[v.index()]
    }

    pub fn has_arc(&self, u: NodeId, v: NodeId) -> bool {
        self.adj[u.index()].binary_search(&v).is_ok()
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        (0..self.node_count()).map(NodeId)
    }

    /// All arcs in canonical order (source ascending, then target).
    pub fn arcs(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.nodes()
            .flat_map(move |u| self.successors(u).iter().map(move |&v| (u, v)))
    }

    /// Graph with every arc orientation reversed. An involution.
    pub fn invert(&self) -> DiGraph {
        let mut g = DiGraph::new(self.node_count());
        for (u, v) in self.arcs() {
            g.adj[v.index()].push(u);
        }
        g.canonicalize();
        g
    }
}

/// Ordered node sequence; a candidate path through some graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NodePath(pub Vec<NodeId>);

impl NodePath {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Nodes that appear more than once.
    pub fn duplicates(&self) -> BTreeSet<NodeId> {
        let mut seen = BTreeSet::new();
        let mut dups = BTreeSet::new();
        for &v in &self.0 {
            if !seen.insert(v) {
                dups.insert(v);
            }
        }
        dups
    }

    pub fn parse(text: &str) -> Option<NodePath> {
        let mut nodes = Vec::new();
        for tok in text.split_whitespace() {
            nodes.push(NodeId(tok.parse().ok()?));
        }
        Some(NodePath(nodes))
    }
}

impl fmt::Display for NodePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.0 {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{}", v)?;
            first = false;
        }
        Ok(())
    }
}

/// A Hamiltonian-path problem: graph plus fixed endpoints. `planted`
/// records the generator's hidden path and never enters the wire format.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: DiGraph,
    pub s: NodeId,
    pub e: NodeId,
    pub planted: Option<NodePath>,
}

/// True iff `p` starts at `s`, ends at `e`, visits every node of `g`
/// exactly once, and walks only arcs of `g`. Total: never errors.
pub fn validate_path(g: &DiGraph, s: NodeId, e: NodeId, p: &NodePath) -> bool {
    let n = g.node_count() as usize;
    if p.len() != n || n == 0 {
        return false;
    }
    if p.0[0] != s || *p.0.last().unwrap() != e {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in &p.0 {
        if v.index() >= n || seen[v.index()] {
            return false;
        }
        seen[v.index()] = true;
    }
    p.0.windows(2).all(|w| g.has_arc(w[0], w[1]))
}

/// Generates a random instance with a planted Hamiltonian path.
///
/// The planted path is a uniform random permutation of the nodes
/// (Fisher–Yates). Each node then receives `delta` additional outbound
/// arc targets, sampled without replacement from all nodes; samples that
/// would create a self-loop or duplicate an existing arc are discarded,
/// so realized out-degree is at most `delta + 1`. Endpoints are the
/// permutation's first and last elements.
///
/// Randomness comes from `ChaCha8Rng::seed_from_u64(seed)`; identical
/// `(n, delta, seed)` always produce identical instances.
pub fn gen_graph(n: u32, delta: u32, seed: u64) -> Result<Instance, GenError> {
    if n < 2 {
        return Err(GenError::TooFewNodes(n));
    }
    if delta == 0 || delta >= n {
        return Err(GenError::BadDelta { delta, n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut perm: Vec<u32> = (0..n).collect();
    for i in (1..n as usize).rev() {
        let j = rng.random_range(0..=i);
        perm.swap(i, j);
    }

    let mut arcs: BTreeSet<(u32, u32)> = perm.windows(2).map(|w| (w[0], w[1])).collect();
    for &u in &perm {
        // delta targets sampled without replacement from U(all nodes)
        let mut pool: Vec<u32> = (0..n).collect();
        for k in 0..delta as usize {
            let j = rng.random_range(k..pool.len());
            pool.swap(k, j);
            let t = pool[k];
            if t != u {
                arcs.insert((u, t));
            }
        }
    }

    let arcs: Vec<(u32, u32)> = arcs.into_iter().collect();
    let graph = DiGraph::from_arcs(n, &arcs).expect("generator respects graph invariants");
    let planted = NodePath(perm.iter().map(|&v| NodeId(v)).collect());
    let instance = Instance {
        s: NodeId(perm[0]),
        e: NodeId(perm[n as usize - 1]),
        graph,
        planted: Some(planted),
    };
    debug_assert!(validate_path(
        &instance.graph,
        instance.s,
        instance.e,
        instance.planted.as_ref().unwrap()
    ));
    Ok(instance)
}

impl Instance {
    /// Parses the instance text format.
    ///
    /// Line 1 is `n m s e`; the next `m` lines are `u v`, one arc each.
    /// Every malformed input is reported with its line number.
    pub fn parse(text: &str) -> Result<Instance, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());

        let (hline, header) = lines.next().ok_or(ParseError::MalformedHeader { line: 1 })?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 4 {
            return Err(ParseError::MalformedHeader { line: hline });
        }
        let parse_u64 = |s: &str| s.parse::<u64>().ok();
        let n64 = parse_u64(fields[0]).ok_or(ParseError::MalformedHeader { line: hline })?;
        let m = parse_u64(fields[1]).ok_or(ParseError::MalformedHeader { line: hline })?
            as usize;
        let s64 = parse_u64(fields[2]).ok_or(ParseError::MalformedHeader { line: hline })?;
        let e64 = parse_u64(fields[3]).ok_or(ParseError::MalformedHeader { line: hline })?;
        if n64 == 0 {
            return Err(ParseError::EmptyGraph { line: hline });
        }
        if n64 > u32::MAX as u64 {
            return Err(ParseError::NodeOutOfRange {
                line: hline,
                id: n64,
                n: u32::MAX,
            });
        }
        let n = n64 as u32;
        for &id in &[s64, e64] {
            if id >= n64 {
                return Err(ParseError::NodeOutOfRange {
                    line: hline,
                    id,
                    n,
                });
            }
        }
        if n >= 2 && s64 == e64 {
            return Err(ParseError::EqualEndpoints { line: hline });
        }

        let mut graph = DiGraph::new(n);
        let mut count = 0usize;
        for (lineno, line) in lines {
            if count == m {
                return Err(ParseError::TooManyArcs {
                    line: lineno,
                    expected: m,
                });
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(ParseError::MalformedArc { line: lineno });
            }
            let u64v = parse_u64(fields[0]).ok_or(ParseError::MalformedArc { line: lineno })?;
            let v64v = parse_u64(fields[1]).ok_or(ParseError::MalformedArc { line: lineno })?;
            for &id in &[u64v, v64v] {
                if id >= n64 {
                    return Err(ParseError::NodeOutOfRange {
                        line: lineno,
                        id,
                        n,
                    });
                }
            }
            let (u, v) = (u64v as u32, v64v as u32);
            match graph.add_arc(u, v) {
                Ok(()) => {}
                Err(GraphError::SelfLoop(_)) => {
                    return Err(ParseError::SelfLoop { line: lineno, id: u })
                }
                Err(GraphError::DuplicateArc(_, _)) => {
                    return Err(ParseError::DuplicateArc { line: lineno, u, v })
                }
                Err(GraphError::NodeOutOfRange(id, _)) => {
                    return Err(ParseError::NodeOutOfRange {
                        line: lineno,
                        id: id as u64,
                        n,
                    })
                }
            }
            count += 1;
        }
        if count != m {
            return Err(ParseError::TooFewArcs {
                expected: m,
                found: count,
            });
        }
        graph.canonicalize();
        Ok(Instance {
            graph,
            s: NodeId(s64 as u32),
            e: NodeId(e64 as u32),
            planted: None,
        })
    }

    /// Canonical text form: header then arcs sorted by source, then target.
    /// The planted path is deliberately excluded.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} {} {} {}\n",
            self.graph.node_count(),
            self.graph.arc_count(),
            self.s,
            self.e
        );
        for (u, v) in self.graph.arcs() {
            out.push_str(&format!("{} {}\n", u, v));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: u32, arcs: &[(u32, u32)]) -> DiGraph {
        DiGraph::from_arcs(n, arcs).unwrap()
    }

    fn path(nodes: &[u32]) -> NodePath {
        NodePath(nodes.iter().map(|&v| NodeId(v)).collect())
    }

    #[test]
    fn validate_smallest_hpath() {
        let gr = g(2, &[(0, 1)]);
        assert!(validate_path(&gr, NodeId(0), NodeId(1), &path(&[0, 1])));
    }

    #[test]
    fn validate_rejects_unvisited_node() {
        let gr = g(3, &[(0, 1), (1, 2), (0, 2)]);
        assert!(!validate_path(&gr, NodeId(0), NodeId(2), &path(&[0, 2])));
    }

    #[test]
    fn validate_rejects_repeated_node() {
        let gr = g(3, &[(0, 1), (1, 0), (1, 2)]);
        assert!(!validate_path(
            &gr,
            NodeId(0),
            NodeId(2),
            &path(&[0, 1, 0, 2])
        ));
    }

    #[test]
    fn validate_rejects_wrong_endpoints_and_missing_arcs() {
        let gr = g(3, &[(0, 1), (1, 2)]);
        assert!(validate_path(&gr, NodeId(0), NodeId(2), &path(&[0, 1, 2])));
        assert!(!validate_path(&gr, NodeId(1), NodeId(2), &path(&[0, 1, 2])));
        assert!(!validate_path(&gr, NodeId(0), NodeId(1), &path(&[0, 1, 2])));
        assert!(!validate_path(&gr, NodeId(0), NodeId(2), &path(&[0, 2, 1])));
    }

    #[test]
    fn validate_single_node() {
        let gr = DiGraph::new(1);
        assert!(validate_path(&gr, NodeId(0), NodeId(0), &path(&[0])));
    }

    #[test]
    fn invert_single_arc() {
        let gr = g(2, &[(0, 1)]);
        let inv = gr.invert();
        assert!(inv.has_arc(NodeId(1), NodeId(0)));
        assert!(!inv.has_arc(NodeId(0), NodeId(1)));
    }

    #[test]
    fn invert_three_arcs() {
        let gr = g(3, &[(0, 1), (0, 2), (2, 1)]);
        let inv = gr.invert();
        let want = g(3, &[(1, 0), (2, 0), (1, 2)]);
        assert_eq!(inv, want);
    }

    #[test]
    fn gen_rejects_bad_params() {
        assert!(gen_graph(1, 1, 0).is_err());
        assert!(gen_graph(5, 5, 0).is_err());
        assert!(gen_graph(5, 0, 0).is_err());
    }

    #[test]
    fn gen_n2_contains_planted_arc() {
        let inst = gen_graph(2, 1, 12345).unwrap();
        let planted = inst.planted.clone().unwrap();
        assert!(validate_path(&inst.graph, inst.s, inst.e, &planted));
        assert!(inst.graph.has_arc(inst.s, inst.e));
    }

    #[test]
    fn gen_out_degree_bound() {
        for seed in 0..20 {
            let inst = gen_graph(17, 3, seed).unwrap();
            assert_eq!(inst.graph.node_count(), 17);
            for v in inst.graph.nodes() {
                assert!(inst.graph.successors(v).len() <= 4);
            }
            let planted = inst.planted.clone().unwrap();
            assert!(validate_path(&inst.graph, inst.s, inst.e, &planted));
        }
    }

    #[test]
    fn gen_is_deterministic() {
        let a = gen_graph(17, 3, 99).unwrap();
        let b = gen_graph(17, 3, 99).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_text(), b.to_text());
    }

    #[test]
    fn parse_minimal() {
        let inst = Instance::parse("2 1 0 1\n0 1\n").unwrap();
        assert_eq!(inst.graph.node_count(), 2);
        assert_eq!(inst.s, NodeId(0));
        assert_eq!(inst.e, NodeId(1));
        assert!(inst.graph.has_arc(NodeId(0), NodeId(1)));
    }

    #[test]
    fn parse_write_round_trip() {
        let t = "3 2 0 2\n0 1\n1 2\n";
        let inst = Instance::parse(t).unwrap();
        assert_eq!(inst.to_text(), t);
    }

    #[test]
    fn parse_rejects_self_loop_with_line() {
        let err = Instance::parse("3 1 0 2\n0 0\n").unwrap_err();
        assert_eq!(err, ParseError::SelfLoop { line: 2, id: 0 });
    }

    #[test]
    fn parse_rejects_duplicate_arc() {
        let err = Instance::parse("3 2 0 2\n0 1\n0 1\n").unwrap_err();
        assert_eq!(err, ParseError::DuplicateArc { line: 3, u: 0, v: 1 });
    }

    #[test]
    fn parse_rejects_out_of_range() {
        let err = Instance::parse("3 1 0 2\n0 7\n").unwrap_err();
        assert!(matches!(err, ParseError::NodeOutOfRange { line: 2, .. }));
    }

    #[test]
    fn parse_rejects_equal_endpoints() {
        let err = Instance::parse("3 1 1 1\n0 1\n").unwrap_err();
        assert_eq!(err, ParseError::EqualEndpoints { line: 1 });
    }

    #[test]
    fn parse_rejects_arc_count_mismatch() {
        assert!(matches!(
            Instance::parse("3 2 0 2\n0 1\n").unwrap_err(),
            ParseError::TooFewArcs { .. }
        ));
        assert!(matches!(
            Instance::parse("3 1 0 2\n0 1\n1 2\n").unwrap_err(),
            ParseError::TooManyArcs { .. }
        ));
    }
}

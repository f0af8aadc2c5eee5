//! Directed graphs on `[n]`, path hypergraphs and tree predicates.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::bits::{Vertex, VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out: Vec<VertexSet>,
    inn: Vec<VertexSet>,
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Digraph(n={}, {:?})", self.n, self.edges())
    }
}

impl Digraph {
    pub fn new(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let mut g = Digraph { n, out: vec![VertexSet::EMPTY; n], inn: vec![VertexSet::EMPTY; n] };
        for &(u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::VertexOutOfRange { v: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.out[u - 1].insert(v);
            g.inn[v - 1].insert(u);
        }
        Ok(g)
    }

    /// Like [`Digraph::new`] but rejects any edge `(u, v)` with `u > v`.
    pub fn new_increasing(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        if let Some(&(u, v)) = edges.iter().find(|(u, v)| u > v) {
            return Err(Error::NotIncreasing(u, v));
        }
        Self::new(n, edges)
    }

    pub fn empty(n: usize) -> Self {
        Digraph { n, out: vec![VertexSet::EMPTY; n], inn: vec![VertexSet::EMPTY; n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.n
    }

    pub fn all(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn out_neighbors(&self, v: Vertex) -> VertexSet {
        self.out[v - 1]
    }

    pub fn in_neighbors(&self, v: Vertex) -> VertexSet {
        self.inn[v - 1]
    }

    pub fn outdegree(&self, v: Vertex) -> usize {
        self.out[v - 1].len()
    }

    pub fn indegree(&self, v: Vertex) -> usize {
        self.inn[v - 1].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.out[u - 1].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(|s| s.len()).sum()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        self.vertices().flat_map(|u| self.out[u - 1].iter().map(move |v| (u, v))).collect()
    }

    pub fn is_increasing(&self) -> bool {
        self.edges().iter().all(|(u, v)| u < v)
    }

    /// Vertices reachable from `u` by a directed path of length at least one.
    pub fn reachable_from(&self, u: Vertex) -> VertexSet {
        self.reachable_within(u, self.all())
    }

    /// Vertices reachable from `u` by a nonempty path whose vertices all lie in `within`.
    pub fn reachable_within(&self, u: Vertex, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::EMPTY;
        let mut frontier = self.out[u - 1].intersection(within);
        while !frontier.is_empty() {
            seen = seen.union(frontier);
            let mut next = VertexSet::EMPTY;
            for w in frontier.iter() {
                next = next.union(self.out[w - 1]);
            }
            frontier = next.intersection(within).difference(seen);
        }
        seen
    }

    /// Vertices of `within` that reach `v` through a path inside `within`, together with `v`.
    pub fn coreachable_within(&self, v: Vertex, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for w in frontier.iter() {
                next = next.union(self.inn[w - 1]);
            }
            frontier = next.intersection(within).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    pub fn transitive_closure(&self) -> Digraph {
        let mut g = Digraph::empty(self.n);
        for u in self.vertices() {
            for v in self.reachable_from(u).without(u).iter() {
                g.out[u - 1].insert(v);
                g.inn[v - 1].insert(u);
            }
        }
        g
    }

    /// Edges `(u, w)` of `self` with no intermediate `v` such that `(u, v)` and `(v, w)` are edges.
    /// Meaningful as a Hasse diagram when `self` is transitively closed and acyclic.
    pub fn transitive_reduction(&self) -> Digraph {
        let mut g = Digraph::empty(self.n);
        for (u, w) in self.edges() {
            let mids = self.out[u - 1].intersection(self.inn[w - 1]);
            if mids.is_empty() {
                g.out[u - 1].insert(w);
                g.inn[w - 1].insert(u);
            }
        }
        g
    }

    /// Subgraph induced on `keep`, vertices keep their labels.
    pub fn induced(&self, keep: VertexSet) -> Digraph {
        let mut g = Digraph::empty(self.n);
        for v in keep.iter() {
            g.out[v - 1] = self.out[v - 1].intersection(keep);
            g.inn[v - 1] = self.inn[v - 1].intersection(keep);
        }
        g
    }

    /// A topological order, or `None` if the graph has a directed cycle.
    pub fn topological_order(&self) -> Option<Vec<Vertex>> {
        let mut indeg: Vec<usize> = self.vertices().map(|v| self.indegree(v)).collect();
        let mut ready: BTreeSet<Vertex> = self.vertices().filter(|&v| indeg[v - 1] == 0).collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for w in self.out[v - 1].iter() {
                indeg[w - 1] -= 1;
                if indeg[w - 1] == 0 {
                    ready.insert(w);
                }
            }
        }
        (order.len() == self.n).then_some(order)
    }

    /// A directed cycle, if any, found deterministically among the vertices left over by
    /// topological sorting.
    pub fn find_cycle(&self) -> Option<Vec<Vertex>> {
        let mut indeg: Vec<usize> = self.vertices().map(|v| self.indegree(v)).collect();
        let mut alive = self.all();
        let mut ready: Vec<Vertex> = self.vertices().filter(|&v| indeg[v - 1] == 0).collect();
        while let Some(v) = ready.pop() {
            alive.remove(v);
            for w in self.out[v - 1].iter() {
                indeg[w - 1] -= 1;
                if indeg[w - 1] == 0 {
                    ready.push(w);
                }
            }
        }
        let start = alive.min()?;
        // Every remaining vertex has an in-neighbour that also remains; walk backwards.
        let mut walk = vec![start];
        let mut at = start;
        loop {
            at = self.inn[at - 1].intersection(alive).min().unwrap();
            if let Some(i) = walk.iter().position(|&x| x == at) {
                let mut cycle = walk[i..].to_vec();
                cycle.reverse();
                return Some(cycle);
            }
            walk.push(at);
        }
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// `{u : u reaches v}` including `v`.
    pub fn down_set(&self, v: Vertex) -> VertexSet {
        self.coreachable_within(v, self.all())
    }

    /// `{w : v reaches w}` including `v`.
    pub fn up_set(&self, v: Vertex) -> VertexSet {
        self.reachable_from(v).with(v)
    }

    pub fn is_tree(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut undirected = 0;
        for u in self.vertices() {
            undirected += self.out[u - 1].iter().filter(|&v| !(v < u && self.has_edge(v, u))).count();
        }
        if undirected != self.n - 1 {
            return false;
        }
        let mut seen = VertexSet::singleton(1);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for w in frontier.iter() {
                next = next.union(self.out[w - 1]).union(self.inn[w - 1]);
            }
            frontier = next.difference(seen);
            seen = seen.union(frontier);
        }
        seen == self.all()
    }

    /// A tree whose edges all point toward a single root.
    pub fn is_rooted_tree(&self) -> bool {
        self.is_tree() && self.vertices().all(|v| self.outdegree(v) <= 1)
    }

    fn require_tree(&self) -> Result<()> {
        if self.is_tree() {
            Ok(())
        } else {
            Err(Error::NotATree)
        }
    }

    /// Compare `u` and `v` in the order of a directed tree.
    pub fn tree_order(&self, u: Vertex, v: Vertex) -> Result<TreeRelation> {
        self.require_tree()?;
        if let Some(p) = self.directed_path(u, v) {
            Ok(TreeRelation::Below(p))
        } else if let Some(p) = self.directed_path(v, u) {
            Ok(TreeRelation::Above(p))
        } else {
            Ok(TreeRelation::Incomparable)
        }
    }

    /// Vertex sequence of the directed path from `u` to `v` found by BFS, if any.
    pub fn directed_path(&self, u: Vertex, v: Vertex) -> Option<Vec<Vertex>> {
        if u == v {
            return Some(vec![u]);
        }
        let mut parent = vec![0usize; self.n + 1];
        let mut seen = VertexSet::singleton(u);
        let mut queue = std::collections::VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for y in self.out[x - 1].difference(seen).iter() {
                seen.insert(y);
                parent[y] = x;
                if y == v {
                    let mut path = vec![v];
                    let mut c = v;
                    while c != u {
                        c = parent[c];
                        path.push(c);
                    }
                    path.reverse();
                    return Some(path);
                }
                queue.push_back(y);
            }
        }
        None
    }

    /// The directed tree interval `[u, v]_T` as a vertex set.
    pub fn tree_interval(&self, u: Vertex, v: Vertex) -> Option<VertexSet> {
        self.directed_path(u, v).map(|p| p.into_iter().collect())
    }

    /// Starred iff some `u <=_T v` has `indeg(u) >= 2` and `outdeg(v) >= 2`.
    pub fn classify_tree(&self) -> Result<TreeClass> {
        self.require_tree()?;
        for u in self.vertices().filter(|&u| self.indegree(u) >= 2) {
            if let Some(v) = self.up_set(u).iter().find(|&v| self.outdegree(v) >= 2) {
                return Ok(TreeClass::Starred { u, v });
            }
        }
        Ok(TreeClass::Unstarred)
    }

    pub fn is_starred_tree(&self) -> Result<bool> {
        Ok(matches!(self.classify_tree()?, TreeClass::Starred { .. }))
    }

    /// Searches for an induced cycle of length at least four in the underlying undirected
    /// graph along which edge directions alternate. Returns its vertices in cyclic order.
    pub fn has_induced_alternating_cycle(&self) -> Option<Vec<Vertex>> {
        assert!(self.n <= 24, "alternating cycle search is exponential in n");
        let und: Vec<VertexSet> = (0..self.n).map(|i| self.out[i].union(self.inn[i])).collect();
        let mut subsets: Vec<u64> =
            (0..1u64 << self.n).filter(|s| s.count_ones() >= 4 && s.count_ones() % 2 == 0).collect();
        subsets.sort_by_key(|s| (s.count_ones(), *s));
        for bits in subsets {
            let s = VertexSet(bits);
            let ok = s.iter().all(|v| {
                let out = self.out[v - 1].intersection(s).len();
                let inn = self.inn[v - 1].intersection(s).len();
                (out == 2 && inn == 0) || (out == 0 && inn == 2)
            });
            if !ok {
                continue;
            }
            let start = s.min().unwrap();
            let mut cycle = vec![start];
            let mut prev = 0;
            let mut cur = start;
            loop {
                let next = und[cur - 1].intersection(s).iter().find(|&w| w != prev).unwrap();
                if next == start {
                    break;
                }
                cycle.push(next);
                prev = cur;
                cur = next;
            }
            if cycle.len() == s.len() {
                return Some(cycle);
            }
        }
        None
    }

    /// Distinct `a, b, c, d, e` with `a, b → c → d, e` where `a, b` and `d, e` are pairwise
    /// non-adjacent.
    pub fn converging_diverging_witness(&self) -> Option<[Vertex; 5]> {
        let adjacent = |x: Vertex, y: Vertex| self.has_edge(x, y) || self.has_edge(y, x);
        let spread = |set: VertexSet| {
            let v = set.to_vec();
            v.iter()
                .enumerate()
                .flat_map(|(i, &x)| v[i + 1..].iter().map(move |&y| (x, y)))
                .filter(|&(x, y)| !adjacent(x, y))
                .collect::<Vec<_>>()
        };
        self.vertices().find_map(|c| {
            let ins = spread(self.in_neighbors(c));
            let outs = spread(self.out_neighbors(c));
            ins.iter().find_map(|&(a, b)| {
                outs.iter().find(|&&(d, e)| ![d, e].iter().any(|&x| x == a || x == b)).map(|&(d, e)| [a, b, c, d, e])
            })
        })
    }

    pub fn to_json(&self) -> DigraphJson {
        DigraphJson { n: self.n, edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeRelation {
    /// `u <=_T v`, with the path from `u` to `v`.
    Below(Vec<Vertex>),
    /// `v <_T u`, with the path from `v` to `u`.
    Above(Vec<Vertex>),
    Incomparable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeClass {
    Unstarred,
    Starred { u: Vertex, v: Vertex },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DigraphJson {
    pub n: usize,
    pub edges: Vec<[Vertex; 2]>,
}

impl TryFrom<DigraphJson> for Digraph {
    type Error = Error;

    fn try_from(j: DigraphJson) -> Result<Digraph> {
        let edges: Vec<_> = j.edges.iter().map(|e| (e[0], e[1])).collect();
        Digraph::new(j.n, &edges)
    }
}

/// A hypergraph on `[n]` with hyperedges of size at least two, stored sorted
/// lexicographically by their increasing vertex lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    hyperedges: Vec<VertexSet>,
}

impl std::fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Hypergraph(n={}, {:?})", self.n, self.hyperedges)
    }
}

fn lex_key(s: &VertexSet) -> Vec<Vertex> {
    s.to_vec()
}

impl Hypergraph {
    pub fn new(n: usize, hyperedges: Vec<VertexSet>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let all = VertexSet::full(n);
        for h in &hyperedges {
            if h.len() < 2 {
                return Err(Error::InvalidHyperedge(h.to_vec(), "fewer than two vertices"));
            }
            if !h.is_subset(all) {
                return Err(Error::InvalidHyperedge(h.to_vec(), "vertex out of range"));
            }
        }
        let mut hyperedges = hyperedges;
        hyperedges.sort_by_key(lex_key);
        if let Some(w) = hyperedges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidHyperedge(w[0].to_vec(), "duplicate"));
        }
        Ok(Hypergraph { n, hyperedges })
    }

    pub fn from_lists(n: usize, lists: &[&[Vertex]]) -> Result<Self> {
        Self::new(n, lists.iter().map(|l| l.iter().copied().collect()).collect())
    }

    /// The hypergraph of 2-element edges of a graph.
    pub fn of_edges(d: &Digraph) -> Self {
        let hs = d.edges().into_iter().map(|(u, v)| VertexSet::singleton(u).with(v)).collect();
        Self::new(d.n(), hs).expect("graph edges form a valid hypergraph")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn hyperedges(&self) -> &[VertexSet] {
        &self.hyperedges
    }

    pub fn len(&self) -> usize {
        self.hyperedges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperedges.is_empty()
    }

    pub fn index_of(&self, h: VertexSet) -> Option<usize> {
        self.hyperedges.binary_search_by_key(&lex_key(&h), lex_key).ok()
    }

    /// Sub-hypergraph keeping the hyperedges whose indices are set in `mask`.
    pub fn restrict(&self, mask: u64) -> Hypergraph {
        let hs = self.hyperedges.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, h)| *h).collect();
        Hypergraph { n: self.n, hyperedges: hs }
    }

    pub fn to_json(&self) -> HypergraphJson {
        HypergraphJson { n: self.n, hyperedges: self.hyperedges.iter().map(|h| h.to_vec()).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphJson {
    pub n: usize,
    pub hyperedges: Vec<Vec<Vertex>>,
}

impl TryFrom<HypergraphJson> for Hypergraph {
    type Error = Error;

    fn try_from(j: HypergraphJson) -> Result<Hypergraph> {
        Hypergraph::new(j.n, j.hyperedges.iter().map(|h| h.iter().copied().collect()).collect())
    }
}

/// Vertex sets of all directed paths with at least two vertices.
pub fn path_hypergraph(d: &Digraph) -> Hypergraph {
    fn extend(d: &Digraph, last: Vertex, visited: VertexSet, acc: &mut BTreeSet<Vec<Vertex>>) {
        for w in d.out_neighbors(last).difference(visited).iter() {
            let next = visited.with(w);
            acc.insert(next.to_vec());
            extend(d, w, next, acc);
        }
    }
    let mut acc = BTreeSet::new();
    for v in d.vertices() {
        extend(d, v, VertexSet::singleton(v), &mut acc);
    }
    let hs = acc.into_iter().map(|l| l.into_iter().collect()).collect();
    Hypergraph::new(d.n(), hs).expect("paths have at least two vertices")
}

/// Every tree on `[n]` with edges oriented from smaller to larger label.
pub fn increasing_trees(n: usize) -> Vec<Digraph> {
    match n {
        0 => vec![],
        1 => vec![Digraph::empty(1)],
        2 => vec![Digraph::new(2, &[(1, 2)]).unwrap()],
        _ => {
            let total = n.pow(n as u32 - 2);
            let mut out = Vec::with_capacity(total);
            let mut seq = vec![1usize; n - 2];
            for idx in 0..total {
                let mut r = idx;
                for s in seq.iter_mut().rev() {
                    *s = r % n + 1;
                    r /= n;
                }
                let edges: Vec<_> = prufer_decode(n, &seq).into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
                out.push(Digraph::new(n, &edges).unwrap());
            }
            out
        }
    }
}

fn prufer_decode(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n + 1];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (1..=n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<_> = (1..=n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Every increasing digraph on `[n]`, one per subset of the pairs `u < v`.
pub fn increasing_digraphs(n: usize) -> Vec<Digraph> {
    let pairs: Vec<_> = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
    assert!(pairs.len() <= 20, "too many digraphs to enumerate");
    (0..1u64 << pairs.len())
        .map(|mask| {
            let es: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, p)| *p).collect();
            Digraph::new(n, &es).unwrap()
        })
        .collect()
}

//! Subhypergraphs of the path hypergraph of an increasing tree, and when their acyclic
//! sourcings form a lattice.

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::{Vertex, VertexSet};
use crate::digraph::{path_hypergraph, Digraph, DigraphJson, Hypergraph};
use crate::error::{Error, Result};
use crate::order::FinitePoset;
use crate::ornament::{orn_join, orn_meet, Ornamentation};
use crate::sourcing::{acyclic_sourcings, Sourcing};

/// Exhaustive sweeps are refused above this many tree paths unless sampling.
pub const MAX_EXHAUSTIVE_PATHS: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntreevalJson {
    pub tree: DigraphJson,
    pub hyperedges: Vec<Vec<Vertex>>,
}

#[derive(Clone, Debug)]
pub struct IntreevalHypergraph {
    tree: Digraph,
    hyperedges: Arc<Hypergraph>,
}

impl IntreevalHypergraph {
    pub fn new(tree: &Digraph, hyperedges: Hypergraph) -> Result<Self> {
        if !tree.is_tree() || !tree.is_increasing() {
            return Err(Error::NotATree);
        }
        let all = path_hypergraph(tree);
        if let Some(h) = hyperedges.hyperedges().iter().find(|h| all.index_of(**h).is_none()) {
            return Err(Error::NotAPath(h.to_vec()));
        }
        Ok(IntreevalHypergraph { tree: tree.clone(), hyperedges: Arc::new(hyperedges) })
    }

    pub fn from_lists(tree: &Digraph, lists: &[&[Vertex]]) -> Result<Self> {
        Self::new(tree, Hypergraph::from_lists(tree.n(), lists)?)
    }

    /// The whole path hypergraph of `tree`.
    pub fn full(tree: &Digraph) -> Result<Self> {
        Self::new(tree, path_hypergraph(tree))
    }

    pub fn tree(&self) -> &Digraph {
        &self.tree
    }

    pub fn hypergraph(&self) -> &Arc<Hypergraph> {
        &self.hyperedges
    }

    pub fn edges(&self) -> &[VertexSet] {
        self.hyperedges.hyperedges()
    }

    pub fn to_json(&self) -> IntreevalJson {
        IntreevalJson { tree: self.tree.to_json(), hyperedges: self.edges().iter().map(|h| h.to_vec()).collect() }
    }

    pub fn from_json(j: IntreevalJson) -> Result<Self> {
        let tree = Digraph::try_from(j.tree)?;
        let hs = j.hyperedges.iter().map(|h| h.iter().copied().collect()).collect();
        Self::new(&tree, Hypergraph::new(tree.n(), hs)?)
    }

    pub fn is_intersection_closed(&self) -> bool {
        let hs = self.edges();
        hs.iter().all(|&i| {
            hs.iter().all(|&j| {
                let k = i.intersection(j);
                k.len() <= 1 || self.hyperedges.index_of(k).is_some()
            })
        })
    }

    /// A pair `(I, J)` violating path intersection closure, if any.
    pub fn path_intersection_counterexample(&self) -> Option<(VertexSet, VertexSet)> {
        let hs = self.edges();
        for &i in hs {
            for &j in hs {
                let k = i.intersection(j);
                if k.len() <= 1 || i.min() >= k.min() || j.max() <= k.max() {
                    continue;
                }
                let span = self.tree.tree_interval(j.min().unwrap(), i.max().unwrap()).expect("comparable endpoints");
                if !hs.iter().any(|&c| k.is_subset(c) && c.is_subset(span)) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_path_intersection_closed(&self) -> bool {
        self.path_intersection_counterexample().is_none()
    }

    /// The bipartite graph between in-neighbours of `u` and out-neighbours of `v`,
    /// joined when some hyperedge contains both.
    pub fn star_graph(&self, u: Vertex, v: Vertex) -> Result<StarGraph> {
        if !self.tree.up_set(u).contains(v) {
            return Err(Error::Incomparable(u, v));
        }
        let left = self.tree.in_neighbors(u);
        let right = self.tree.out_neighbors(v);
        let mut edges = Vec::new();
        for a in left.iter() {
            for b in right.iter() {
                if self.edges().iter().any(|h| h.contains(a) && h.contains(b)) {
                    edges.push((a, b));
                }
            }
        }
        Ok(StarGraph { u, v, left, right, edges })
    }

    /// The first cycle found in a star graph, scanning `u ≤ v` in increasing order.
    pub fn star_cycle(&self) -> Option<(Vertex, Vertex, Vec<Vertex>)> {
        for u in self.tree.vertices() {
            for v in self.tree.up_set(u).iter() {
                if let Some(c) = self.star_graph(u, v).unwrap().find_cycle() {
                    return Some((u, v, c));
                }
            }
        }
        None
    }

    pub fn is_star_sparse(&self) -> bool {
        self.star_cycle().is_none()
    }

    /// `S(I)` is the largest `w ∈ I` whose ornament contains `min(I)`.
    pub fn sour_restricted(&self, o: &Ornamentation) -> Result<Sourcing> {
        o.validate(&self.tree)?;
        Sourcing::from_fn(&self.hyperedges, |i| {
            let start = i.min().unwrap();
            i.iter().rev().find(|&w| o.get(w).contains(start)).unwrap()
        })
    }

    fn require_acyclic(&self, s: &Sourcing) -> Result<()> {
        if **s.ambient() != *self.hyperedges {
            return Err(Error::AmbientMismatch("sourcing is not on this hypergraph"));
        }
        if !s.is_acyclic() {
            return Err(Error::AcyclicityRequired("sourcing"));
        }
        Ok(())
    }

    /// Smallest ornamentation whose restricted sourcing is `s`.
    pub fn minorn(&self, s: &Sourcing) -> Result<Ornamentation> {
        self.require_acyclic(s)?;
        let t = &self.tree;
        let mut acc = Ornamentation::minimal(t.n());
        for (&i, &src) in self.edges().iter().zip(s.choice()) {
            let single = Ornamentation::minimal(t.n()).with(src, i.intersection(t.down_set(src)));
            acc = orn_join(t, &acc, &single)?;
        }
        Ok(acc)
    }

    /// Largest ornamentation whose restricted sourcing is `s`.
    pub fn maxorn(&self, s: &Sourcing) -> Result<Ornamentation> {
        self.require_acyclic(s)?;
        let t = &self.tree;
        let mut acc = Ornamentation::maximal(t);
        for (&i, &src) in self.edges().iter().zip(s.choice()) {
            let below = i.intersection(t.down_set(src));
            let sets = t
                .vertices()
                .map(|v| if src < v && i.contains(v) { t.down_set(v).difference(below) } else { t.down_set(v) })
                .collect();
            acc = orn_meet(t, &acc, &Ornamentation::from_sets_unchecked(sets))?;
        }
        Ok(acc)
    }

    fn require_lattice_hypotheses(&self) -> Result<()> {
        if let Some((i, j)) = self.path_intersection_counterexample() {
            return Err(Error::Hypothesis(format!("not path intersection closed at {i}, {j}")));
        }
        if let Some((u, v, c)) = self.star_cycle() {
            return Err(Error::Hypothesis(format!("star graph at ({u},{v}) has cycle {c:?}")));
        }
        Ok(())
    }

    fn combine(&self, sourcings: &[Sourcing], join: bool) -> Result<Sourcing> {
        self.require_lattice_hypotheses()?;
        for s in sourcings {
            self.require_acyclic(s)?;
        }
        if sourcings.is_empty() {
            return Ok(if join { Sourcing::all_min(&self.hyperedges) } else { Sourcing::all_max(&self.hyperedges) });
        }
        let hs = self.edges();
        Sourcing::from_fn(&self.hyperedges, |i| {
            let mut banned = VertexSet::EMPTY;
            for s in sourcings {
                for (&j, &src) in hs.iter().zip(s.choice()) {
                    if i.contains(src) {
                        banned = banned.union(VertexSet(j.0 & if join { below_mask(src) } else { above_mask(src) }));
                    }
                }
            }
            let left = i.difference(banned);
            if join { left.min() } else { left.max() }
                .expect("max(I) is never removed by a join, min(I) never by a meet")
        })
    }

    /// Join in the acyclic sourcing lattice by the per-hyperedge formula.
    pub fn asour_join(&self, sourcings: &[Sourcing]) -> Result<Sourcing> {
        self.combine(sourcings, true)
    }

    /// Meet in the acyclic sourcing lattice by the mirrored formula.
    pub fn asour_meet(&self, sourcings: &[Sourcing]) -> Result<Sourcing> {
        self.combine(sourcings, false)
    }

    pub fn asour_poset(&self) -> Result<FinitePoset<Sourcing>> {
        FinitePoset::from_relation(acyclic_sourcings(&self.hyperedges)?, Sourcing::leq)
    }
}

/// Vertices numerically below `v`.
fn below_mask(v: Vertex) -> u64 {
    (1u64 << (v - 1)) - 1
}

/// Vertices numerically above `v`.
fn above_mask(v: Vertex) -> u64 {
    if v >= 64 {
        0
    } else {
        !((1u64 << v) - 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarGraph {
    pub u: Vertex,
    pub v: Vertex,
    pub left: VertexSet,
    pub right: VertexSet,
    pub edges: Vec<(Vertex, Vertex)>,
}

impl StarGraph {
    fn neighbors(&self, x: Vertex) -> Vec<Vertex> {
        let mut out: Vec<_> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == x {
                    Some(b)
                } else if b == x {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// A cycle as an alternating vertex sequence, found by depth-first search from the
    /// smallest vertex, always trying the smallest neighbour first.
    pub fn find_cycle(&self) -> Option<Vec<Vertex>> {
        let nodes = self.left.union(self.right);
        let mut seen = VertexSet::EMPTY;
        for root in nodes.iter() {
            if seen.contains(root) {
                continue;
            }
            let mut stack: Vec<Vertex> = vec![root];
            if let Some(c) = self.dfs(root, 0, &mut seen, &mut stack) {
                return Some(c);
            }
        }
        None
    }

    fn dfs(&self, x: Vertex, parent: Vertex, seen: &mut VertexSet, stack: &mut Vec<Vertex>) -> Option<Vec<Vertex>> {
        seen.insert(x);
        for y in self.neighbors(x) {
            if y == parent {
                continue;
            }
            if seen.contains(y) {
                let at = stack.iter().position(|&z| z == y)?;
                return Some(stack[at..].to_vec());
            }
            stack.push(y);
            if let Some(c) = self.dfs(y, x, seen, stack) {
                return Some(c);
            }
            stack.pop();
        }
        None
    }

    pub fn is_acyclic(&self) -> bool {
        self.find_cycle().is_none()
    }
}

/// Lengths of the inclusion-minimal directed cycles of the hyperedge digraph of `s`,
/// one entry per distinct hyperedge set, sorted.
pub fn minimal_cycle_lengths(s: &Sourcing) -> Vec<usize> {
    let hs = s.ambient().hyperedges();
    let m = hs.len();
    assert!(m <= 64, "cycle enumeration keys hyperedge sets by u64 masks");
    let arcs: Vec<u64> = (0..m)
        .map(|i| {
            (0..m)
                .filter(|&j| j != i && hs[j].contains(s.choice()[i]) && s.choice()[j] != s.choice()[i])
                .fold(0u64, |acc, j| acc | 1 << j)
        })
        .collect();
    let mut cycles: BTreeSet<u64> = BTreeSet::new();
    fn walk(arcs: &[u64], start: usize, at: usize, used: u64, out: &mut BTreeSet<u64>) {
        let next = arcs[at];
        if next >> start & 1 == 1 {
            out.insert(used);
        }
        let mut rest = next & !used & !((1u64 << start) - 1) & !(1u64 << start);
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            walk(arcs, start, j, used | 1 << j, out);
        }
    }
    for start in 0..m {
        walk(&arcs, start, start, 1 << start, &mut cycles);
    }
    let minimal: Vec<u64> =
        cycles.iter().copied().filter(|&c| !cycles.iter().any(|&d| d != c && d & !c == 0)).collect();
    let mut lengths: Vec<usize> = minimal.iter().map(|c| c.count_ones() as usize).collect();
    lengths.sort_unstable();
    lengths
}

#[derive(Clone, Debug, Serialize)]
pub struct Discrepancy {
    pub hyperedges: Vec<Vec<Vertex>>,
    pub is_lattice: bool,
    pub path_intersection_closed: bool,
    pub star_sparse: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CharacterizationReport {
    pub tree: Vec<[Vertex; 2]>,
    pub paths: usize,
    pub sampled: bool,
    pub hypergraphs_checked: usize,
    pub lattices: usize,
    pub join_pairs_checked: usize,
    pub discrepancies: Vec<Discrepancy>,
    pub join_failures: Vec<String>,
}

impl CharacterizationReport {
    pub fn passed(&self) -> bool {
        self.discrepancies.is_empty() && self.join_failures.is_empty()
    }

    fn absorb(&mut self, o: CharacterizationReport) {
        self.hypergraphs_checked += o.hypergraphs_checked;
        self.lattices += o.lattices;
        self.join_pairs_checked += o.join_pairs_checked;
        self.discrepancies.extend(o.discrepancies);
        self.join_failures.extend(o.join_failures);
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Sampling {
    pub count: usize,
    pub seed: u64,
}

/// Compares lattice-hood of acyclic sourcings with the two predicates on one hypergraph;
/// when both hold, also compares the join formula with the poset join on every pair.
pub fn check_one(ii: &IntreevalHypergraph) -> Result<CharacterizationReport> {
    let poset = ii.asour_poset()?;
    let is_lattice = poset.is_lattice();
    let pic = ii.is_path_intersection_closed();
    let ss = ii.is_star_sparse();
    let mut r = CharacterizationReport { hypergraphs_checked: 1, lattices: is_lattice as usize, ..Default::default() };
    if is_lattice != (pic && ss) {
        r.discrepancies.push(Discrepancy {
            hyperedges: ii.edges().iter().map(|h| h.to_vec()).collect(),
            is_lattice,
            path_intersection_closed: pic,
            star_sparse: ss,
        });
        return Ok(r);
    }
    if is_lattice {
        for a in 0..poset.len() {
            for b in a..poset.len() {
                r.join_pairs_checked += 1;
                let formula = ii.asour_join(&[poset.key(a).clone(), poset.key(b).clone()])?;
                let expected = poset.join(a, b).map(|j| poset.key(j));
                if Some(&formula) != expected {
                    r.join_failures.push(format!(
                        "{:?}: {} ∨ {} gave {}",
                        ii.edges(),
                        poset.key(a),
                        poset.key(b),
                        formula
                    ));
                }
            }
        }
    }
    Ok(r)
}

/// Runs [`check_one`] on every subhypergraph of `P(t)`, or on a seeded random sample of them.
pub fn characterization_check(t: &Digraph, sampling: Option<Sampling>) -> Result<CharacterizationReport> {
    let all = path_hypergraph(t);
    let m = all.len();
    let masks: Vec<u64> = match sampling {
        None if m > MAX_EXHAUSTIVE_PATHS => {
            return Err(Error::SizeLimit { what: "subhypergraphs without sampling", bound: 1 << MAX_EXHAUSTIVE_PATHS })
        }
        None => (0..1u64 << m).collect(),
        Some(Sampling { count, seed }) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            if m < 63 && count as u64 >= 1 << m {
                (0..1u64 << m).collect()
            } else {
                let limit = if m >= 63 { usize::MAX } else { 1usize << m };
                let mut picked: Vec<u64> =
                    sample(&mut rng, limit.min(1 << 40), count).into_iter().map(|x| x as u64).collect();
                picked.sort_unstable();
                picked
            }
        }
    };
    let parts: Vec<Result<CharacterizationReport>> = masks
        .par_iter()
        .map(|&mask| check_one(&IntreevalHypergraph { tree: t.clone(), hyperedges: Arc::new(all.restrict(mask)) }))
        .collect();
    let mut report = CharacterizationReport {
        tree: t.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        paths: m,
        sampled: sampling.is_some() && masks.len() < (1usize << m.min(62)),
        ..Default::default()
    };
    for p in parts {
        report.absorb(p?);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::increasing_trees;
    use crate::fixtures::{double_star, path, x_tree};
    use crate::ornament::enumerate_ornamentations;
    use crate::sourcing::all_sourcings;

    fn example_pair() -> IntreevalHypergraph {
        IntreevalHypergraph::from_lists(&double_star(), &[&[1, 3, 4, 5], &[2, 3, 4, 6]]).unwrap()
    }

    fn example_square() -> IntreevalHypergraph {
        IntreevalHypergraph::from_lists(&double_star(), &[&[1, 3, 4, 5], &[2, 3, 4, 5], &[2, 3, 4, 6], &[1, 3, 4, 6]])
            .unwrap()
    }

    fn all_subhypergraphs(t: &Digraph) -> Vec<IntreevalHypergraph> {
        let all = path_hypergraph(t);
        (0..1u64 << all.len())
            .map(|m| IntreevalHypergraph { tree: t.clone(), hyperedges: Arc::new(all.restrict(m)) })
            .collect()
    }

    #[test]
    fn json_round_trip() {
        let q = example_square();
        let j = q.to_json();
        let back =
            IntreevalHypergraph::from_json(serde_json::from_str(&serde_json::to_string(&j).unwrap()).unwrap()).unwrap();
        assert_eq!(back.edges(), q.edges());
        assert_eq!(back.tree(), q.tree());
    }

    #[test]
    fn rejects_non_paths() {
        assert!(IntreevalHypergraph::from_lists(&double_star(), &[&[1, 2]]).is_err());
        assert!(IntreevalHypergraph::from_lists(&double_star(), &[&[1, 4]]).is_err());
    }

    #[test]
    fn predicates_on_fixtures() {
        let p = example_pair();
        assert!(!p.is_path_intersection_closed());
        assert!(p.is_star_sparse());
        assert!(!p.asour_poset().unwrap().is_lattice());
        let q = example_square();
        assert!(q.is_path_intersection_closed());
        let (u, v, c) = q.star_cycle().unwrap();
        assert_eq!((u, v, c), (3, 4, vec![1, 5, 2, 6]));
        assert!(!q.asour_poset().unwrap().is_lattice());
        assert!(q.star_graph(5, 6).is_err());
        for n in 1..=6 {
            for t in increasing_trees(n) {
                let full = IntreevalHypergraph::full(&t).unwrap();
                assert!(full.is_path_intersection_closed());
                if t.is_rooted_tree() {
                    assert!(full.is_star_sparse());
                }
            }
        }
    }

    #[test]
    fn small_hypergraphs() {
        for t in increasing_trees(5) {
            for ii in all_subhypergraphs(&t) {
                if ii.is_intersection_closed() {
                    assert!(ii.is_path_intersection_closed());
                }
                let hs = ii.edges();
                if hs.iter().all(|&a| hs.iter().all(|&b| a == b || a.intersection(b).len() <= 1)) {
                    assert!(ii.is_path_intersection_closed());
                }
                if hs.len() <= 2 {
                    assert!(ii.is_star_sparse());
                }
            }
        }
    }

    #[test]
    fn example_upper_bounds() {
        let q = example_square();
        let h = q.hypergraph();
        let order: [&[Vertex]; 4] = [&[1, 3, 4, 5], &[2, 3, 4, 5], &[2, 3, 4, 6], &[1, 3, 4, 6]];
        let mk = |vals: [Vertex; 4]| {
            let pairs: Vec<(&[Vertex], Vertex)> = order.iter().copied().zip(vals).collect();
            Sourcing::from_pairs(h, &pairs).unwrap()
        };
        let s1 = mk([1, 5, 2, 1]);
        let s2 = mk([1, 2, 2, 6]);
        let t1 = mk([5, 5, 2, 6]);
        let t2 = mk([1, 5, 6, 6]);
        let glued = mk([1, 5, 2, 6]);
        assert!(!glued.is_acyclic());
        let p = q.asour_poset().unwrap();
        let idx = |s: &Sourcing| p.index_of(s).unwrap();
        let uppers: Vec<usize> = (0..p.len()).filter(|&k| p.leq(idx(&s1), k) && p.leq(idx(&s2), k)).collect();
        let minimal: Vec<&Sourcing> =
            uppers.iter().filter(|&&a| !uppers.iter().any(|&b| b != a && p.leq(b, a))).map(|&a| p.key(a)).collect();
        let mut expected = vec![&t1, &t2];
        expected.sort();
        let mut minimal = minimal;
        minimal.sort();
        assert_eq!(minimal, expected);
    }

    #[test]
    fn cycle_lengths() {
        let i3 = IntreevalHypergraph::full(&path(3)).unwrap();
        let h = i3.hypergraph();
        assert!(minimal_cycle_lengths(&Sourcing::all_min(h)).is_empty());
        let cyc = Sourcing::from_pairs(h, &[(&[1, 2], 2), (&[2, 3], 3), (&[1, 2, 3], 1)]).unwrap();
        assert_eq!(minimal_cycle_lengths(&cyc), vec![2]);
        let x = IntreevalHypergraph::full(&x_tree()).unwrap();
        let found_four = all_sourcings(x.hypergraph()).unwrap().iter().any(|s| minimal_cycle_lengths(s).contains(&4));
        assert!(found_four);
    }

    #[test]
    fn star_sparse_cycles_are_short() {
        for t in increasing_trees(4) {
            for ii in all_subhypergraphs(&t).into_iter().step_by(3) {
                if !ii.is_star_sparse() {
                    continue;
                }
                for s in all_sourcings(ii.hypergraph()).unwrap() {
                    assert!(minimal_cycle_lengths(&s).iter().all(|&l| l == 2), "{:?} {s}", ii.edges());
                }
            }
        }
    }

    #[test]
    fn restricted_sourcings() {
        for t in increasing_trees(4).into_iter().chain([x_tree(), double_star()]) {
            let orns = enumerate_ornamentations(&t).unwrap();
            for ii in all_subhypergraphs(&t).into_iter().step_by(7) {
                let h = ii.hypergraph();
                assert_eq!(ii.sour_restricted(&Ornamentation::minimal(t.n())).unwrap(), Sourcing::all_min(h));
                assert_eq!(ii.sour_restricted(&Ornamentation::maximal(&t)).unwrap(), Sourcing::all_max(h));
                let sours: Vec<Sourcing> = orns.iter().map(|o| ii.sour_restricted(o).unwrap()).collect();
                let ss = ii.is_star_sparse();
                for s in &sours {
                    assert!(!minimal_cycle_lengths(s).contains(&2));
                    assert!(!ss || s.is_acyclic());
                }
                for i in 0..orns.len() {
                    for j in 0..orns.len() {
                        if orns[i].leq(&orns[j]) {
                            assert!(sours[i].leq(&sours[j]));
                        }
                    }
                }
                if !ss {
                    continue;
                }
                for s in acyclic_sourcings(h).unwrap() {
                    let lo = ii.minorn(&s).unwrap();
                    let hi = ii.maxorn(&s).unwrap();
                    let fiber: Vec<&Ornamentation> =
                        orns.iter().zip(&sours).filter(|(_, x)| **x == s).map(|(o, _)| o).collect();
                    let interval: Vec<&Ornamentation> = orns.iter().filter(|o| lo.leq(o) && o.leq(&hi)).collect();
                    assert_eq!(fiber, interval);
                }
            }
        }
    }

    #[test]
    fn single_hyperedge_minorn() {
        let t = double_star();
        let ii = IntreevalHypergraph::from_lists(&t, &[&[1, 3, 4, 5]]).unwrap();
        let s = Sourcing::new(ii.hypergraph(), vec![4]).unwrap();
        let o = ii.minorn(&s).unwrap();
        assert_eq!(o, Ornamentation::minimal(6).with(4, VertexSet::from_iter([1, 3, 4])));
        assert_eq!(ii.minorn(&Sourcing::all_min(ii.hypergraph())).unwrap(), Ornamentation::minimal(6));
    }

    #[test]
    fn join_formula_on_tamari() {
        let ii = IntreevalHypergraph::full(&path(4)).unwrap();
        let p = ii.asour_poset().unwrap();
        assert_eq!(p.len(), 14);
        let l = p.lattice().unwrap();
        for a in 0..p.len() {
            assert_eq!(&ii.asour_join(&[p.key(a).clone()]).unwrap(), p.key(a));
            assert_eq!(&ii.asour_join(&[p.key(a).clone(), p.key(l.bottom()).clone()]).unwrap(), p.key(a));
            for b in 0..p.len() {
                let pair = [p.key(a).clone(), p.key(b).clone()];
                assert_eq!(&ii.asour_join(&pair).unwrap(), p.key(l.join(a, b)));
                assert_eq!(&ii.asour_meet(&pair).unwrap(), p.key(l.meet(a, b)));
            }
        }
        assert!(matches!(example_pair().asour_join(&[]), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn characterization_small() {
        let r = characterization_check(&path(3), None).unwrap();
        assert_eq!((r.hypergraphs_checked, r.lattices), (8, 8));
        assert!(r.passed());
        for t in increasing_trees(4) {
            let r = characterization_check(&t, None).unwrap();
            assert!(r.passed(), "{:?}", r.discrepancies);
        }
        let r = characterization_check(&x_tree(), Some(Sampling { count: 20, seed: 7 })).unwrap();
        assert!(r.sampled && r.hypergraphs_checked == 20 && r.passed());
    }
}

//! Reorientations of transitively closed increasing digraphs.
//!
//! A reorientation is stored as a mask over the ambient edges in lexicographic
//! order: bit `i` set means edge `i` is reversed.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::bits::{Vertex, VertexSet};
use crate::digraph::{Digraph, DigraphJson};
use crate::error::{Error, Result};
use crate::order::FinitePoset;
use crate::ornament::{orn_join, orn_meet, Ornamentation, MAX_PERMUTATION_VERTICES};
use crate::perm::{factorial, permutations, positions, Permutation};

pub type EdgeMask = u64;

pub const MAX_AMBIENT_EDGES: usize = 64;
/// Enumerations over all subsets of ambient edges are refused beyond this many edges.
pub const MAX_SUBSET_EDGES: usize = 24;

/// A transitively closed increasing digraph with its edge indexing.
#[derive(Debug, PartialEq, Eq)]
pub struct Ambient {
    graph: Digraph,
    edges: Vec<(Vertex, Vertex)>,
    index: HashMap<(Vertex, Vertex), usize>,
    /// `(uv, vw, uw)` edge indices for every `u -> v -> w`.
    triangles: Vec<(usize, usize, usize)>,
}

impl Ambient {
    pub fn new(e: Digraph) -> Result<Arc<Self>> {
        if let Some(&(u, v)) = e.edges().iter().find(|(u, v)| u > v) {
            return Err(Error::NotIncreasing(u, v));
        }
        if e.transitive_closure() != e {
            return Err(Error::AmbientMismatch("ambient graph must be transitively closed"));
        }
        let edges = e.edges();
        if edges.len() > MAX_AMBIENT_EDGES {
            return Err(Error::SizeLimit { what: "ambient edges", bound: MAX_AMBIENT_EDGES as u64 });
        }
        let index: HashMap<_, _> = edges.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let mut triangles = Vec::new();
        for &(u, v) in &edges {
            for w in e.out_neighbors(v).iter() {
                triangles.push((index[&(u, v)], index[&(v, w)], index[&(u, w)]));
            }
        }
        Ok(Arc::new(Ambient { graph: e, edges, index, triangles }))
    }

    /// The ambient `tc(d)`.
    pub fn of(d: &Digraph) -> Result<Arc<Self>> {
        Self::new(d.transitive_closure())
    }

    pub fn graph(&self) -> &Digraph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.index.get(&(u, v)).copied()
    }

    pub fn full_mask(&self) -> EdgeMask {
        if self.edges.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.edges.len()) - 1
        }
    }

    pub fn mask_of(&self, pairs: &[(Vertex, Vertex)]) -> Result<EdgeMask> {
        pairs.iter().try_fold(0u64, |m, &(u, v)| {
            self.edge_index(u, v)
                .map(|i| m | 1 << i)
                .ok_or(Error::AmbientMismatch("reversed pair is not an ambient edge"))
        })
    }

    pub fn pairs_of(&self, mask: EdgeMask) -> Vec<(Vertex, Vertex)> {
        self.edges.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect()
    }

    /// The relation `mask` as a digraph with arcs `u -> v` for `(u, v)` in it.
    pub fn as_digraph(&self, mask: EdgeMask) -> Digraph {
        Digraph::new(self.n(), &self.pairs_of(mask)).unwrap()
    }

    /// The reoriented graph: reversed edges point from larger to smaller vertex.
    pub fn oriented(&self, mask: EdgeMask) -> Digraph {
        let es: Vec<_> = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| if mask >> i & 1 == 1 { (v, u) } else { (u, v) })
            .collect();
        Digraph::new(self.n(), &es).unwrap()
    }

    pub fn is_acyclic_mask(&self, mask: EdgeMask) -> bool {
        let n = self.n();
        let mut out = vec![VertexSet::EMPTY; n];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                out[v - 1].insert(u);
            } else {
                out[u - 1].insert(v);
            }
        }
        let mut alive = VertexSet::full(n);
        loop {
            let mut has_in = VertexSet::EMPTY;
            for v in alive.iter() {
                has_in = has_in.union(out[v - 1]);
            }
            let sources = alive.difference(has_in);
            if sources.is_empty() {
                return alive.is_empty();
            }
            alive = alive.difference(sources);
        }
    }

    pub fn is_closed_mask(&self, mask: EdgeMask) -> bool {
        self.triangles.iter().all(|&(a, b, c)| mask >> a & mask >> b & 1 == 0 || mask >> c & 1 == 1)
    }

    pub fn is_coclosed_mask(&self, mask: EdgeMask) -> bool {
        self.is_closed_mask(!mask & self.full_mask())
    }

    /// Transitive closure of the relation `mask` (stays inside the ambient edges).
    pub fn closure_mask(&self, mask: EdgeMask) -> EdgeMask {
        let mut m = mask;
        loop {
            let mut next = m;
            for &(a, b, c) in &self.triangles {
                if m >> a & m >> b & 1 == 1 {
                    next |= 1 << c;
                }
            }
            if next == m {
                return m;
            }
            m = next;
        }
    }

    /// Edges `(u, v)` with `u` placed after `v` in `π`.
    pub fn rev_of_permutation(&self, p: &[Vertex]) -> EdgeMask {
        let pos = positions(p);
        self.edges.iter().enumerate().filter(|(_, &(u, v))| pos[u] > pos[v]).fold(0, |m, (i, _)| m | 1 << i)
    }

    /// Acyclic reorientation masks, sorted, by filtering all subsets.
    pub fn acyclic_masks_by_filter(&self) -> Result<Vec<EdgeMask>> {
        if self.edge_count() > MAX_SUBSET_EDGES {
            return Err(Error::SizeLimit { what: "reorientation subsets", bound: 1 << MAX_SUBSET_EDGES });
        }
        Ok((0..=self.full_mask()).filter(|&m| self.is_acyclic_mask(m)).collect())
    }

    /// Acyclic reorientation masks, sorted, as images of permutations.
    pub fn acyclic_masks_by_permutations(&self) -> Result<Vec<EdgeMask>> {
        if self.n() > MAX_PERMUTATION_VERTICES {
            return Err(Error::SizeLimit { what: "permutation search", bound: factorial(MAX_PERMUTATION_VERTICES) });
        }
        let set: HashSet<EdgeMask> = permutations(self.n()).map(|p| self.rev_of_permutation(&p)).collect();
        let mut v: Vec<_> = set.into_iter().collect();
        v.sort_unstable();
        Ok(v)
    }

    /// Acyclic reorientation masks using whichever search is smaller.
    pub fn acyclic_masks(&self) -> Result<Vec<EdgeMask>> {
        let perms = if self.n() <= 20 { factorial(self.n()) } else { u64::MAX };
        if self.edge_count() <= MAX_SUBSET_EDGES && (1u64 << self.edge_count()) <= perms {
            self.acyclic_masks_by_filter()
        } else {
            self.acyclic_masks_by_permutations()
        }
    }

    fn all_masks(&self) -> Result<impl Iterator<Item = EdgeMask>> {
        if self.edge_count() > MAX_SUBSET_EDGES {
            return Err(Error::SizeLimit { what: "reorientation subsets", bound: 1 << MAX_SUBSET_EDGES });
        }
        Ok(0..=self.full_mask())
    }
}

#[derive(Clone)]
pub struct Reorientation {
    ambient: Arc<Ambient>,
    rev: EdgeMask,
}

impl PartialEq for Reorientation {
    fn eq(&self, o: &Self) -> bool {
        self.rev == o.rev && (Arc::ptr_eq(&self.ambient, &o.ambient) || self.ambient == o.ambient)
    }
}

impl Eq for Reorientation {}

impl std::hash::Hash for Reorientation {
    fn hash<H: std::hash::Hasher>(&self, h: &mut H) {
        self.rev.hash(h);
    }
}

impl PartialOrd for Reorientation {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Reorientation {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        self.rev.cmp(&o.rev)
    }
}

impl fmt::Debug for Reorientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Reorientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rev_pairs().iter().map(|(u, v)| format!("{u}{v}")).collect();
        write!(f, "rev{{{}}}", parts.join(","))
    }
}

impl Reorientation {
    pub fn new(ambient: &Arc<Ambient>, rev: &[(Vertex, Vertex)]) -> Result<Self> {
        Ok(Reorientation { rev: ambient.mask_of(rev)?, ambient: ambient.clone() })
    }

    pub fn from_mask(ambient: &Arc<Ambient>, rev: EdgeMask) -> Self {
        debug_assert_eq!(rev & !ambient.full_mask(), 0);
        Reorientation { ambient: ambient.clone(), rev }
    }

    pub fn ambient(&self) -> &Arc<Ambient> {
        &self.ambient
    }

    pub fn mask(&self) -> EdgeMask {
        self.rev
    }

    pub fn rev_pairs(&self) -> Vec<(Vertex, Vertex)> {
        self.ambient.pairs_of(self.rev)
    }

    pub fn is_reversed(&self, u: Vertex, v: Vertex) -> bool {
        self.ambient.edge_index(u, v).is_some_and(|i| self.rev >> i & 1 == 1)
    }

    pub fn oriented(&self) -> Digraph {
        self.ambient.oriented(self.rev)
    }

    pub fn leq(&self, o: &Self) -> bool {
        self.rev & !o.rev == 0
    }

    pub fn is_acyclic(&self) -> bool {
        self.ambient.is_acyclic_mask(self.rev)
    }

    /// A directed cycle of the reoriented graph, if any.
    pub fn find_cycle(&self) -> Option<Vec<Vertex>> {
        self.oriented().find_cycle()
    }

    pub fn is_transitively_closed(&self) -> bool {
        self.ambient.is_closed_mask(self.rev)
    }

    pub fn is_transitively_coclosed(&self) -> bool {
        self.ambient.is_coclosed_mask(self.rev)
    }

    pub fn is_transitively_biclosed(&self) -> bool {
        self.is_transitively_closed() && self.is_transitively_coclosed()
    }

    pub fn to_json(&self) -> ReorientationJson {
        ReorientationJson {
            ambient: self.ambient.graph.to_json(),
            rev: self.rev_pairs().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn from_json(j: &ReorientationJson) -> Result<Self> {
        let amb = Ambient::new(Digraph::try_from(j.ambient.clone())?)?;
        let pairs: Vec<_> = j.rev.iter().map(|p| (p[0], p[1])).collect();
        Reorientation::new(&amb, &pairs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReorientationJson {
    pub ambient: DigraphJson,
    pub rev: Vec<[Vertex; 2]>,
}

fn check_ambient(d: &Digraph, amb: &Ambient) -> Result<()> {
    if d.n() != amb.n() || &d.transitive_closure() != amb.graph() {
        return Err(Error::AmbientMismatch("reorientation ambient is not tc(d)"));
    }
    Ok(())
}

/// `orn{R}` computed from a reversal mask without ambient checks.
pub(crate) fn orn_from_rev(d: &Digraph, amb: &Ambient, rev: EdgeMask) -> Ornamentation {
    let rel = amb.as_digraph(rev);
    let sets = d
        .vertices()
        .map(|v| {
            let reach = rel.down_set(v);
            d.coreachable_within(v, reach)
        })
        .collect();
    Ornamentation::from_sets_unchecked(sets)
}

/// `orn{R}(v)` is the largest ornament at `v` among vertices reaching `v` along reversed edges.
pub fn orn_of_reorientation(d: &Digraph, r: &Reorientation) -> Result<Ornamentation> {
    check_ambient(d, &r.ambient)?;
    Ok(orn_from_rev(d, &r.ambient, r.rev))
}

/// `(u, v)` is reversed iff `u ∈ O(v)`.
pub fn reori_of_ornamentation(d: &Digraph, o: &Ornamentation) -> Result<Reorientation> {
    o.validate(d)?;
    let amb = Ambient::of(d)?;
    let pairs: Vec<_> = amb.edges().iter().copied().filter(|&(u, v)| o.get(v).contains(u)).collect();
    Reorientation::new(&amb, &pairs)
}

/// For a tree: `(u, v)` is reversed iff no `w` has `u ∉ O(w)` while `O(w)` contains both
/// `v` and the successor of `u` on the path to `v`.
pub fn maxreori_of_ornamentation(t: &Digraph, o: &Ornamentation) -> Result<Reorientation> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    o.validate(t)?;
    let amb = Ambient::of(t)?;
    let mut pairs = Vec::new();
    for &(u, v) in amb.edges() {
        let path = t.directed_path(u, v).expect("tree edge of tc");
        let next = path[1];
        let blocked = t.vertices().any(|w| {
            let s = o.get(w);
            !s.contains(u) && s.contains(next) && s.contains(v)
        });
        if !blocked {
            pairs.push((u, v));
        }
    }
    Reorientation::new(&amb, &pairs)
}

pub fn areori_of_permutation(amb: &Arc<Ambient>, p: &[Vertex]) -> Reorientation {
    Reorientation::from_mask(amb, amb.rev_of_permutation(p))
}

/// All permutations `π` with `areori{π} = r`, in lexicographic order.
pub fn linear_extensions(r: &Reorientation) -> Vec<Permutation> {
    let g = r.oriented();
    let n = g.n();
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(n);
    fn go(g: &Digraph, placed: VertexSet, word: &mut Vec<Vertex>, out: &mut Vec<Permutation>) {
        if word.len() == g.n() {
            out.push(word.clone());
            return;
        }
        for v in g.all().difference(placed).iter() {
            if g.in_neighbors(v).is_subset(placed) {
                word.push(v);
                go(g, placed.with(v), word, out);
                word.pop();
            }
        }
    }
    go(&g, VertexSet::EMPTY, &mut word, &mut out);
    out
}

fn poset_of_masks(amb: &Arc<Ambient>, masks: Vec<EdgeMask>) -> Result<FinitePoset<Reorientation>> {
    let elems = masks.into_iter().map(|m| Reorientation::from_mask(amb, m)).collect();
    FinitePoset::from_relation(elems, |a, b| a.leq(b))
}

pub fn areori_poset(amb: &Arc<Ambient>) -> Result<FinitePoset<Reorientation>> {
    poset_of_masks(amb, amb.acyclic_masks()?)
}

pub fn reori_poset(amb: &Arc<Ambient>) -> Result<FinitePoset<Reorientation>> {
    poset_of_masks(amb, amb.all_masks()?.collect())
}

pub fn rcl_poset(amb: &Arc<Ambient>) -> Result<FinitePoset<Reorientation>> {
    poset_of_masks(amb, amb.all_masks()?.filter(|&m| amb.is_closed_mask(m)).collect())
}

pub fn rco_poset(amb: &Arc<Ambient>) -> Result<FinitePoset<Reorientation>> {
    poset_of_masks(amb, amb.all_masks()?.filter(|&m| amb.is_coclosed_mask(m)).collect())
}

pub fn biclosed_masks(amb: &Ambient) -> Result<Vec<EdgeMask>> {
    Ok(amb.all_masks()?.filter(|&m| amb.is_closed_mask(m) && amb.is_coclosed_mask(m)).collect())
}

pub fn rbi_poset(amb: &Arc<Ambient>) -> Result<FinitePoset<Reorientation>> {
    poset_of_masks(amb, biclosed_masks(amb)?)
}

/// The transitive reduction of every induced subgraph is a forest.
pub fn areori_forest_criterion(amb: &Ambient) -> bool {
    let g = amb.graph();
    let n = g.n();
    assert!(n <= 24, "forest criterion is exponential in n");
    (0..1u64 << n).all(|bits| {
        let red = g.induced(VertexSet(bits)).transitive_reduction();
        let mut parent: Vec<usize> = (0..=n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        red.edges().into_iter().all(|(u, v)| {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            parent[a] = b;
            a != b
        })
    })
}

/// The forest criterion, cross-checked against the order-theoretic test.
pub fn areori_is_lattice(amb: &Arc<Ambient>) -> Result<bool> {
    let criterion = areori_forest_criterion(amb);
    let poset = areori_poset(amb)?;
    if criterion != poset.is_lattice() {
        return Err(Error::Inconsistent(format!("forest criterion {criterion} disagrees with poset check")));
    }
    Ok(criterion)
}

fn require_lattice(amb: &Ambient, r1: &Reorientation, r2: &Reorientation) -> Result<()> {
    if r1.ambient != r2.ambient {
        return Err(Error::AmbientMismatch("reorientations of different graphs"));
    }
    if !r1.is_acyclic() || !r2.is_acyclic() {
        return Err(Error::AcyclicityRequired("reorientation"));
    }
    if !areori_forest_criterion(amb) {
        return Err(Error::NotALattice(0, 0, "join or meet"));
    }
    Ok(())
}

/// `rev(R1 ∨ R2) = tc(rev(R1) ∪ rev(R2))`, valid when acyclic reorientations form a lattice.
pub fn areori_join(r1: &Reorientation, r2: &Reorientation) -> Result<Reorientation> {
    require_lattice(&r1.ambient, r1, r2)?;
    Ok(areori_join_unchecked(r1, r2))
}

/// The complement of `rev(R1 ∧ R2)` is `tc` of the complement of `rev(R1) ∩ rev(R2)`.
pub fn areori_meet(r1: &Reorientation, r2: &Reorientation) -> Result<Reorientation> {
    require_lattice(&r1.ambient, r1, r2)?;
    Ok(areori_meet_unchecked(r1, r2))
}

fn areori_join_unchecked(r1: &Reorientation, r2: &Reorientation) -> Reorientation {
    Reorientation::from_mask(&r1.ambient, r1.ambient.closure_mask(r1.rev | r2.rev))
}

fn areori_meet_unchecked(r1: &Reorientation, r2: &Reorientation) -> Reorientation {
    let amb = &r1.ambient;
    let full = amb.full_mask();
    let co = amb.closure_mask(full & !(r1.rev & r2.rev));
    Reorientation::from_mask(amb, full & !co)
}

/// Join in the lattice of biclosed reorientations of a tree: `tc(rev(R1) ∪ rev(R2))`.
pub fn rbi_join_tree(r1: &Reorientation, r2: &Reorientation) -> Reorientation {
    areori_join_unchecked(r1, r2)
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct QuotientReport {
    pub acyclic_reorientations: usize,
    pub image_size: usize,
    pub pairs_checked: usize,
    pub closed_pairs_checked: usize,
    pub failures: Vec<String>,
}

impl QuotientReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For an unstarred tree, checks that `R ↦ orn{R}` sends meets and joins of acyclic
/// reorientations to meets and joins of ornamentations, and that it sends intersections of
/// transitively closed reorientations to meets.
pub fn quotient_check_unstarred(t: &Digraph) -> Result<QuotientReport> {
    if let crate::digraph::TreeClass::Starred { u, v } = t.classify_tree()? {
        return Err(Error::Starred(u, v));
    }
    let amb = Ambient::of(t)?;
    let masks = amb.acyclic_masks()?;
    let orns: Vec<Ornamentation> = masks.iter().map(|&m| orn_from_rev(t, &amb, m)).collect();
    let mut report = QuotientReport {
        acyclic_reorientations: masks.len(),
        image_size: orns.iter().collect::<HashSet<_>>().len(),
        ..Default::default()
    };
    let reos: Vec<Reorientation> = masks.iter().map(|&m| Reorientation::from_mask(&amb, m)).collect();
    for i in 0..reos.len() {
        for j in i..reos.len() {
            report.pairs_checked += 1;
            let meet = orn_from_rev(t, &amb, areori_meet_unchecked(&reos[i], &reos[j]).rev);
            let join = orn_from_rev(t, &amb, areori_join_unchecked(&reos[i], &reos[j]).rev);
            if meet != orn_meet(t, &orns[i], &orns[j])? {
                report.failures.push(format!("meet of {} and {}", reos[i], reos[j]));
            }
            if join != orn_join(t, &orns[i], &orns[j])? {
                report.failures.push(format!("join of {} and {}", reos[i], reos[j]));
            }
        }
    }
    let closed = closed_meet_failures(t, &amb)?;
    report.closed_pairs_checked = closed.0;
    report.failures.extend(closed.1);
    Ok(report)
}

/// Checks `orn{R1 ∩ R2} = orn{R1} ∧ orn{R2}` on transitively closed reorientations.
pub fn closed_meet_failures(d: &Digraph, amb: &Arc<Ambient>) -> Result<(usize, Vec<String>)> {
    let closed: Vec<EdgeMask> = amb.all_masks()?.filter(|&m| amb.is_closed_mask(m)).collect();
    let orns: Vec<Ornamentation> = closed.iter().map(|&m| orn_from_rev(d, amb, m)).collect();
    let mut count = 0;
    let mut failures = Vec::new();
    for i in 0..closed.len() {
        for j in i..closed.len() {
            count += 1;
            if orn_from_rev(d, amb, closed[i] & closed[j]) != orn_meet(d, &orns[i], &orns[j])? {
                failures.push(format!(
                    "closed meet of {} and {}",
                    Reorientation::from_mask(amb, closed[i]),
                    Reorientation::from_mask(amb, closed[j])
                ));
            }
        }
    }
    Ok((count, failures))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{increasing_digraphs, increasing_trees};
    use crate::fixtures::{comb, diamond, path, x_tree};
    use crate::order::poset_isomorphic;
    use crate::ornament::{enumerate_ornamentations, orn_poset};
    use crate::perm::permutations;

    fn weak_order(n: usize) -> FinitePoset<Permutation> {
        let inv = |p: &Permutation| {
            let pos = positions(p);
            let mut s = HashSet::new();
            for a in 1..=n {
                for b in a + 1..=n {
                    if pos[a] > pos[b] {
                        s.insert((a, b));
                    }
                }
            }
            s
        };
        FinitePoset::from_relation(permutations(n).collect(), |a, b| inv(a).is_subset(&inv(b))).unwrap()
    }

    /// Cycle search by DFS over all vertex sequences, independent of topological sorting.
    fn has_cycle_brute(g: &Digraph) -> bool {
        fn dfs(g: &Digraph, start: Vertex, at: Vertex, seen: VertexSet) -> bool {
            g.out_neighbors(at).iter().any(|w| w == start || (!seen.contains(w) && dfs(g, start, w, seen.with(w))))
        }
        g.vertices().any(|v| dfs(g, v, v, VertexSet::singleton(v)))
    }

    #[test]
    fn closure_predicates() {
        let amb = Ambient::of(&x_tree()).unwrap();
        let empty = Reorientation::from_mask(&amb, 0);
        let full = Reorientation::from_mask(&amb, amb.full_mask());
        for r in [&empty, &full] {
            assert!(r.is_acyclic() && r.is_transitively_biclosed());
        }
        let r = Reorientation::new(&amb, &[(1, 4), (3, 4), (2, 5), (3, 5)]).unwrap();
        assert!(r.is_transitively_biclosed());
        assert!(!r.is_acyclic());
        let cyc = r.find_cycle().unwrap();
        assert_eq!(cyc.len(), 4);
        let mut sorted = cyc.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 2, 4, 5]);
    }

    #[test]
    fn acyclicity_agrees_with_dfs() {
        for d in increasing_digraphs(4) {
            let amb = Ambient::of(&d).unwrap();
            for m in 0..=amb.full_mask() {
                assert_eq!(amb.is_acyclic_mask(m), !has_cycle_brute(&amb.oriented(m)));
            }
            assert_eq!(amb.acyclic_masks_by_filter().unwrap(), amb.acyclic_masks_by_permutations().unwrap());
        }
    }

    #[test]
    fn orn_of_extremes() {
        let d = diamond();
        let amb = Ambient::of(&d).unwrap();
        let lo = Reorientation::from_mask(&amb, 0);
        let hi = Reorientation::from_mask(&amb, amb.full_mask());
        assert_eq!(orn_of_reorientation(&d, &lo).unwrap(), Ornamentation::minimal(4));
        assert_eq!(orn_of_reorientation(&d, &hi).unwrap(), Ornamentation::maximal(&d));
        assert!(orn_of_reorientation(&path(4), &lo).is_err());
    }

    fn fiber_extremes(d: &Digraph) -> Vec<(Ornamentation, usize, usize)> {
        let amb = Ambient::of(d).unwrap();
        let mut fibers: HashMap<Ornamentation, Vec<EdgeMask>> = HashMap::new();
        for m in 0..=amb.full_mask() {
            fibers.entry(orn_from_rev(d, &amb, m)).or_default().push(m);
        }
        let mut out: Vec<_> = fibers
            .into_iter()
            .map(|(o, f)| {
                let maxima = f.iter().filter(|&&a| !f.iter().any(|&b| b != a && a & !b == 0)).count();
                let minima = f.iter().filter(|&&a| !f.iter().any(|&b| b != a && b & !a == 0)).count();
                (o, minima, maxima)
            })
            .collect();
        out.sort();
        out
    }

    #[test]
    fn fibers_without_extremes() {
        for n in 1..=4 {
            for d in increasing_digraphs(n) {
                assert!(fiber_extremes(&d).iter().all(|e| e.2 == 1));
            }
        }
        let two_min: Vec<_> =
            fiber_extremes(&path(4)).into_iter().filter(|e| e.1 == 2).map(|e| e.0.to_string()).collect();
        assert_eq!(two_min, vec!["[1|2|3|1234]"]);
        let d = Digraph::new(5, &[(1, 2), (1, 5), (2, 3), (3, 4), (4, 5)]).unwrap();
        let ex = fiber_extremes(&d);
        assert_eq!(ex[0], (Ornamentation::minimal(5), 1, 2));
        assert_eq!(ex.iter().filter(|e| e.2 == 2).count(), 6);
    }

    #[test]
    fn surjective_and_monotone() {
        for d in increasing_digraphs(4) {
            let amb = Ambient::of(&d).unwrap();
            let image: HashSet<_> = (0..=amb.full_mask()).map(|m| orn_from_rev(&d, &amb, m)).collect();
            let all: HashSet<_> = enumerate_ornamentations(&d).unwrap().into_iter().collect();
            assert_eq!(image, all);
            for a in 0..=amb.full_mask() {
                for e in 0..amb.edge_count() {
                    let b = a | 1 << e;
                    assert!(orn_from_rev(&d, &amb, a).leq(&orn_from_rev(&d, &amb, b)));
                }
            }
        }
    }

    #[test]
    fn reori_is_minimum_closed_section() {
        for d in increasing_digraphs(4).into_iter().step_by(5) {
            let amb = Ambient::of(&d).unwrap();
            for o in enumerate_ornamentations(&d).unwrap() {
                let r = reori_of_ornamentation(&d, &o).unwrap();
                assert_eq!(orn_of_reorientation(&d, &r).unwrap(), o);
                assert!(r.is_transitively_closed());
                for m in 0..=amb.full_mask() {
                    if amb.is_closed_mask(m) && orn_from_rev(&d, &amb, m) == o {
                        assert_eq!(r.mask() & !m, 0);
                    }
                }
            }
        }
        assert_eq!(reori_of_ornamentation(&path(3), &Ornamentation::minimal(3)).unwrap().mask(), 0);
    }

    #[test]
    fn maxreori_is_fiber_maximum() {
        for t in increasing_trees(5).into_iter().step_by(4).chain([x_tree()]) {
            let amb = Ambient::of(&t).unwrap();
            for o in enumerate_ornamentations(&t).unwrap() {
                let top = maxreori_of_ornamentation(&t, &o).unwrap();
                let lo = reori_of_ornamentation(&t, &o).unwrap();
                assert!(top.is_transitively_closed());
                let fiber: Vec<_> = (0..=amb.full_mask()).filter(|&m| orn_from_rev(&t, &amb, m) == o).collect();
                assert!(fiber.contains(&top.mask()));
                assert!(fiber.iter().all(|&m| m & !top.mask() == 0));
                let closed_fiber: Vec<_> = fiber.iter().copied().filter(|&m| amb.is_closed_mask(m)).collect();
                let interval: Vec<_> = (0..=amb.full_mask())
                    .filter(|&m| amb.is_closed_mask(m) && lo.mask() & !m == 0 && m & !top.mask() == 0)
                    .collect();
                assert_eq!(closed_fiber, interval);
            }
        }
        assert!(maxreori_of_ornamentation(&diamond(), &Ornamentation::minimal(4)).is_err());
    }

    #[test]
    fn weak_order_and_counts() {
        let amb = Ambient::of(&path(3)).unwrap();
        let p = areori_poset(&amb).unwrap();
        assert_eq!(p.len(), 6);
        assert!(poset_isomorphic(&p, &weak_order(3)).is_some());
        assert!(!areori_is_lattice(&Ambient::of(&x_tree()).unwrap()).unwrap());
        assert_eq!(areori_poset(&Ambient::of(&comb(2)).unwrap()).unwrap().len(), 12);
    }

    #[test]
    fn permutation_map() {
        let amb = Ambient::of(&path(4)).unwrap();
        assert_eq!(areori_of_permutation(&amb, &[1, 2, 3, 4]).mask(), 0);
        assert_eq!(areori_of_permutation(&amb, &[4, 3, 2, 1]).mask(), amb.full_mask());
        let w = weak_order(4);
        assert_eq!(w.covers().len(), 36);
        let mut checked = 0;
        for (i, j) in w.covers() {
            let a = areori_of_permutation(&amb, w.key(i));
            let b = areori_of_permutation(&amb, w.key(j));
            assert!(a.leq(&b));
            checked += 1;
        }
        assert_eq!(checked, 36);
        for d in [x_tree(), diamond(), comb(2)] {
            let amb = Ambient::of(&d).unwrap();
            let mut total = 0;
            for m in amb.acyclic_masks().unwrap() {
                let r = Reorientation::from_mask(&amb, m);
                let exts = linear_extensions(&r);
                for p in &exts {
                    assert_eq!(areori_of_permutation(&amb, p), r);
                }
                total += exts.len();
            }
            assert_eq!(total as u64, factorial(d.n()));
        }
    }

    #[test]
    fn lattice_criterion_agrees() {
        for n in 1..=5 {
            for d in increasing_digraphs(n) {
                let amb = Ambient::of(&d).unwrap();
                areori_is_lattice(&amb).unwrap();
            }
        }
    }

    #[test]
    fn join_meet_formulas() {
        for d in increasing_digraphs(4).into_iter().chain([path(5), comb(2)]) {
            let amb = Ambient::of(&d).unwrap();
            if !areori_forest_criterion(&amb) {
                continue;
            }
            let p = areori_poset(&amb).unwrap();
            let l = p.lattice().unwrap();
            for i in 0..p.len() {
                for j in 0..p.len() {
                    assert_eq!(&areori_join(p.key(i), p.key(j)).unwrap(), p.key(l.join(i, j)));
                    assert_eq!(&areori_meet(p.key(i), p.key(j)).unwrap(), p.key(l.meet(i, j)));
                }
            }
        }
        let amb = Ambient::of(&x_tree()).unwrap();
        let r = Reorientation::from_mask(&amb, 0);
        assert!(matches!(areori_join(&r, &r), Err(Error::NotALattice(..))));
    }

    #[test]
    fn closure_posets() {
        let d = diamond();
        let amb = Ambient::of(&d).unwrap();
        assert!(!rbi_poset(&amb).unwrap().is_lattice());
        assert!(rcl_poset(&amb).unwrap().is_lattice());
        assert!(rco_poset(&amb).unwrap().is_lattice());
        let reori = reori_poset(&amb).unwrap();
        assert_eq!(reori.len(), 1 << amb.edge_count());
        assert_eq!(reori.covers().len(), amb.edge_count() << (amb.edge_count() - 1));
        for t in increasing_trees(5).into_iter().step_by(6) {
            let amb = Ambient::of(&t).unwrap();
            let p = rbi_poset(&amb).unwrap();
            let l = p.lattice().unwrap();
            for i in 0..p.len() {
                for j in 0..p.len() {
                    assert_eq!(&rbi_join_tree(p.key(i), p.key(j)), p.key(l.join(i, j)));
                }
            }
        }
    }

    #[test]
    fn biclosed_acyclic_for_unstarred() {
        for n in 1..=7 {
            for t in increasing_trees(n) {
                if t.is_starred_tree().unwrap() {
                    continue;
                }
                let amb = Ambient::of(&t).unwrap();
                for m in biclosed_masks(&amb).unwrap() {
                    assert!(amb.is_acyclic_mask(m));
                }
            }
        }
    }

    #[test]
    fn quotient_small() {
        let r = quotient_check_unstarred(&path(3)).unwrap();
        assert!(r.passed());
        assert_eq!(r.pairs_checked, 21);
        let r = quotient_check_unstarred(&path(4)).unwrap();
        assert!(r.passed());
        assert_eq!((r.acyclic_reorientations, r.image_size), (24, 14));
        assert!(matches!(quotient_check_unstarred(&x_tree()), Err(Error::Starred(3, 3))));
        for d in increasing_digraphs(4) {
            let amb = Ambient::of(&d).unwrap();
            assert!(closed_meet_failures(&d, &amb).unwrap().1.is_empty());
        }
    }

    #[test]
    fn arbitrary_reorientations_do_not_preserve_joins() {
        let d = path(3);
        let amb = Ambient::of(&d).unwrap();
        let mut join_fail = false;
        for a in 0..=amb.full_mask() {
            for b in 0..=amb.full_mask() {
                let j = orn_from_rev(&d, &amb, a | b);
                let oj = orn_join(&d, &orn_from_rev(&d, &amb, a), &orn_from_rev(&d, &amb, b)).unwrap();
                join_fail |= j != oj;
            }
        }
        assert!(join_fail);
    }

    #[test]
    fn json_round_trip() {
        let amb = Ambient::of(&x_tree()).unwrap();
        let r = Reorientation::new(&amb, &[(1, 4), (3, 4)]).unwrap();
        let s = serde_json::to_string(&r.to_json()).unwrap();
        let back = Reorientation::from_json(&serde_json::from_str(&s).unwrap()).unwrap();
        assert_eq!(back, r);
        assert!(Reorientation::new(&amb, &[(1, 2)]).is_err());
    }

    #[test]
    fn orn_poset_of_path_is_lattice() {
        assert!(orn_poset(&path(4)).unwrap().is_lattice());
    }
}

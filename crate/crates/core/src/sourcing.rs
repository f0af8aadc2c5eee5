//! Sourcings of hypergraphs and their relation to reorientations and ornamentations.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::bits::{Vertex, VertexSet};
use crate::digraph::{path_hypergraph, Digraph, Hypergraph};
use crate::error::{Error, Result};
use crate::order::FinitePoset;
use crate::ornament::{acyclic_ornamentations, Ornamentation, MAX_PERMUTATION_VERTICES};
use crate::perm::{factorial, permutations, positions};
use crate::reorient::{orn_from_rev, Ambient, EdgeMask, Reorientation};

/// Filtering all sourcings is preferred while their number stays below this.
pub const MAX_SOURCING_FILTER: u64 = 1_000_000;
/// Hard limit on the number of sourcings materialised at once.
pub const MAX_SOURCINGS: u64 = 4_000_000;

/// A choice of one vertex `S(H) ∈ H` per hyperedge, indexed like `ambient.hyperedges()`.
#[derive(Clone)]
pub struct Sourcing {
    ambient: Arc<Hypergraph>,
    choice: Vec<Vertex>,
}

impl PartialEq for Sourcing {
    fn eq(&self, o: &Self) -> bool {
        self.choice == o.choice && (Arc::ptr_eq(&self.ambient, &o.ambient) || self.ambient == o.ambient)
    }
}

impl Eq for Sourcing {}

impl std::hash::Hash for Sourcing {
    fn hash<H: std::hash::Hasher>(&self, h: &mut H) {
        self.choice.hash(h);
    }
}

impl PartialOrd for Sourcing {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Sourcing {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        self.choice.cmp(&o.choice)
    }
}

impl fmt::Display for Sourcing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.choice.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Sourcing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Sourcing {
    pub fn new(ambient: &Arc<Hypergraph>, choice: Vec<Vertex>) -> Result<Self> {
        if choice.len() != ambient.len() {
            return Err(Error::InvalidSourcing(format!("{} sources for {} hyperedges", choice.len(), ambient.len())));
        }
        for (h, &v) in ambient.hyperedges().iter().zip(&choice) {
            if !h.contains(v) {
                return Err(Error::InvalidSourcing(format!("source {v} is not in hyperedge {h}")));
            }
        }
        Ok(Sourcing { ambient: ambient.clone(), choice })
    }

    /// Builds a sourcing from `f(H)` for each hyperedge.
    pub fn from_fn(ambient: &Arc<Hypergraph>, f: impl Fn(VertexSet) -> Vertex) -> Result<Self> {
        let choice = ambient.hyperedges().iter().map(|&h| f(h)).collect();
        Self::new(ambient, choice)
    }

    /// Looks up sources given as `(hyperedge, source)` pairs; every hyperedge must appear.
    pub fn from_pairs(ambient: &Arc<Hypergraph>, pairs: &[(&[Vertex], Vertex)]) -> Result<Self> {
        let mut choice = vec![0; ambient.len()];
        for &(h, v) in pairs {
            let i = ambient
                .index_of(h.iter().copied().collect())
                .ok_or_else(|| Error::InvalidSourcing(format!("{h:?} is not a hyperedge")))?;
            choice[i] = v;
        }
        Self::new(ambient, choice)
    }

    pub fn all_min(ambient: &Arc<Hypergraph>) -> Self {
        Sourcing { ambient: ambient.clone(), choice: ambient.hyperedges().iter().map(|&h| h.min().unwrap()).collect() }
    }

    pub fn all_max(ambient: &Arc<Hypergraph>) -> Self {
        Sourcing { ambient: ambient.clone(), choice: ambient.hyperedges().iter().map(|&h| h.max().unwrap()).collect() }
    }

    pub fn ambient(&self) -> &Arc<Hypergraph> {
        &self.ambient
    }

    pub fn choice(&self) -> &[Vertex] {
        &self.choice
    }

    /// `S(H)`, or `None` if `h` is not a hyperedge.
    pub fn source_of(&self, h: VertexSet) -> Option<Vertex> {
        self.ambient.index_of(h).map(|i| self.choice[i])
    }

    pub fn leq(&self, o: &Self) -> bool {
        self.choice.iter().zip(&o.choice).all(|(a, b)| a <= b)
    }

    /// Arcs `H → H'` whenever `S(H) ∈ H' ∖ {S(H')}`.
    fn hyperedge_arcs(&self) -> Vec<Vec<usize>> {
        let hs = self.ambient.hyperedges();
        (0..hs.len())
            .map(|i| {
                (0..hs.len())
                    .filter(|&j| j != i && hs[j].contains(self.choice[i]) && self.choice[j] != self.choice[i])
                    .collect()
            })
            .collect()
    }

    /// A shortest cycle `H0 → H1 → ... → H0` of hyperedge indices, if any.
    pub fn hyperedge_cycle(&self) -> Option<Vec<usize>> {
        let arcs = self.hyperedge_arcs();
        let mut best: Option<Vec<usize>> = None;
        for start in 0..arcs.len() {
            let mut parent = vec![usize::MAX; arcs.len()];
            let mut queue = VecDeque::from([start]);
            let mut found = None;
            'bfs: while let Some(x) = queue.pop_front() {
                for &y in &arcs[x] {
                    if y == start {
                        found = Some(x);
                        break 'bfs;
                    }
                    if parent[y] == usize::MAX {
                        parent[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            if let Some(mut x) = found {
                let mut cyc = vec![x];
                while x != start {
                    x = parent[x];
                    cyc.push(x);
                }
                cyc.reverse();
                if best.as_ref().is_none_or(|b| cyc.len() < b.len()) {
                    best = Some(cyc);
                }
            }
        }
        best
    }

    /// Arcs `h → S(H)` for `h ∈ H ∖ {S(H)}`.
    pub fn vertex_digraph(&self) -> Digraph {
        let mut arcs = Vec::new();
        for (h, &s) in self.ambient.hyperedges().iter().zip(&self.choice) {
            arcs.extend(h.without(s).iter().map(|u| (u, s)));
        }
        Digraph::new(self.ambient.n(), &arcs).expect("arcs join distinct vertices of [n]")
    }

    pub fn is_acyclic(&self) -> bool {
        let by_vertices = self.vertex_digraph().is_acyclic();
        debug_assert_eq!(by_vertices, self.hyperedge_cycle().is_none());
        by_vertices
    }

    pub fn to_json(&self) -> SourcingJson {
        SourcingJson {
            hyperedges: self.ambient.hyperedges().iter().map(|h| h.to_vec()).collect(),
            sources: self.choice.clone(),
        }
    }

    pub fn from_json(j: &SourcingJson) -> Result<Self> {
        let n = j.hyperedges.iter().flatten().copied().max().unwrap_or(0);
        let h = Hypergraph::new(n, j.hyperedges.iter().map(|h| h.iter().copied().collect()).collect())?;
        let h = Arc::new(h);
        if j.sources.len() != j.hyperedges.len() {
            return Err(Error::InvalidSourcing("sources and hyperedges differ in length".into()));
        }
        let mut choice = vec![0; h.len()];
        for (list, &s) in j.hyperedges.iter().zip(&j.sources) {
            choice[h.index_of(list.iter().copied().collect()).unwrap()] = s;
        }
        Sourcing::new(&h, choice)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourcingJson {
    pub hyperedges: Vec<Vec<Vertex>>,
    pub sources: Vec<Vertex>,
}

pub fn sourcing_count(h: &Hypergraph) -> u64 {
    h.hyperedges().iter().fold(1u64, |acc, e| acc.saturating_mul(e.len() as u64))
}

/// Every sourcing of `h` in lexicographic order of the choice vectors.
pub fn all_sourcings(h: &Arc<Hypergraph>) -> Result<Vec<Sourcing>> {
    if sourcing_count(h) > MAX_SOURCINGS {
        return Err(Error::SizeLimit { what: "sourcings", bound: MAX_SOURCINGS });
    }
    let options: Vec<Vec<Vertex>> = h.hyperedges().iter().map(|e| e.to_vec()).collect();
    let mut idx = vec![0usize; options.len()];
    let mut out = Vec::new();
    loop {
        out.push(Sourcing { ambient: h.clone(), choice: idx.iter().zip(&options).map(|(&i, o)| o[i]).collect() });
        let mut k = options.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < options[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// Each hyperedge sourced at its earliest member in the word `π`.
pub fn asour_of_permutation(h: &Arc<Hypergraph>, p: &[Vertex]) -> Sourcing {
    let pos = positions(p);
    let choice = h.hyperedges().iter().map(|e| e.iter().min_by_key(|&v| pos[v]).unwrap()).collect();
    Sourcing { ambient: h.clone(), choice }
}

pub fn acyclic_sourcings_by_filter(h: &Arc<Hypergraph>) -> Result<Vec<Sourcing>> {
    let mut v: Vec<_> = all_sourcings(h)?.into_iter().filter(Sourcing::is_acyclic).collect();
    v.sort();
    Ok(v)
}

pub fn acyclic_sourcings_by_permutations(h: &Arc<Hypergraph>) -> Result<Vec<Sourcing>> {
    if h.n() > MAX_PERMUTATION_VERTICES {
        return Err(Error::SizeLimit { what: "permutation search", bound: factorial(MAX_PERMUTATION_VERTICES) });
    }
    let set: HashSet<Sourcing> = permutations(h.n()).map(|p| asour_of_permutation(h, &p)).collect();
    let mut v: Vec<_> = set.into_iter().collect();
    v.sort();
    Ok(v)
}

/// Acyclic sourcings, sorted; filters all sourcings when there are few enough.
pub fn acyclic_sourcings(h: &Arc<Hypergraph>) -> Result<Vec<Sourcing>> {
    let perms = if h.n() <= 20 { factorial(h.n()) } else { u64::MAX };
    let count = sourcing_count(h);
    if count <= MAX_SOURCING_FILTER && (count <= perms || h.n() > MAX_PERMUTATION_VERTICES) {
        acyclic_sourcings_by_filter(h)
    } else {
        acyclic_sourcings_by_permutations(h)
    }
}

pub fn sour_poset(h: &Arc<Hypergraph>) -> Result<FinitePoset<Sourcing>> {
    FinitePoset::from_relation(all_sourcings(h)?, Sourcing::leq)
}

pub fn asour_poset(h: &Arc<Hypergraph>) -> Result<FinitePoset<Sourcing>> {
    FinitePoset::from_relation(acyclic_sourcings(h)?, Sourcing::leq)
}

fn check_paths(d: &Digraph, s: &Sourcing) -> Result<()> {
    if *s.ambient != path_hypergraph(d) {
        return Err(Error::AmbientMismatch("sourcing is not on the path hypergraph of the graph"));
    }
    Ok(())
}

/// `(min P, max P)` for every path `P` sourced at its top.
pub fn rev_of_sourcing(d: &Digraph, s: &Sourcing) -> Result<Vec<(Vertex, Vertex)>> {
    check_paths(d, s)?;
    let mut rev: Vec<_> = s
        .ambient
        .hyperedges()
        .iter()
        .zip(&s.choice)
        .filter(|&(&h, &v)| h.max() == Some(v))
        .map(|(&h, _)| (h.min().unwrap(), h.max().unwrap()))
        .collect();
    rev.sort_unstable();
    rev.dedup();
    Ok(rev)
}

pub fn reori_of_sourcing(d: &Digraph, s: &Sourcing) -> Result<Reorientation> {
    let rev = rev_of_sourcing(d, s)?;
    Reorientation::new(&Ambient::of(d)?, &rev)
}

pub fn orn_of_sourcing(d: &Digraph, s: &Sourcing) -> Result<Ornamentation> {
    let r = reori_of_sourcing(d, s)?;
    Ok(orn_from_rev(d, r.ambient(), r.mask()))
}

/// `S(P)` is the largest `w ∈ P` whose ornament contains the start of `P`.
pub fn sour_of_ornamentation(d: &Digraph, o: &Ornamentation) -> Result<Sourcing> {
    o.validate(d)?;
    let h = Arc::new(path_hypergraph(d));
    Sourcing::from_fn(&h, |p| {
        let start = p.min().unwrap();
        p.iter().rev().find(|&w| o.get(w).contains(start)).unwrap()
    })
}

/// `S(P)` is the source of the tournament that `r` induces on `P`.
pub fn asour_of_reorientation(d: &Digraph, r: &Reorientation) -> Result<Sourcing> {
    if d.transitive_closure() != *r.ambient().graph() {
        return Err(Error::AmbientMismatch("reorientation ambient is not tc(d)"));
    }
    if !r.is_acyclic() {
        return Err(Error::AcyclicityRequired("reorientation"));
    }
    let g = r.oriented();
    let h = Arc::new(path_hypergraph(d));
    Sourcing::from_fn(&h, |p| p.iter().find(|&u| p.without(u).is_subset(g.out_neighbors(u))).unwrap())
}

/// Pairs `(u, S(P))` for `u ∈ P ∖ {S(P)}`, as arcs of a digraph.
pub fn arr_of_sourcing(s: &Sourcing) -> Digraph {
    s.vertex_digraph()
}

/// `rev(areori{S}) = tc(arr(S)) ∩ tc(d)`.
pub fn areori_of_sourcing(d: &Digraph, s: &Sourcing) -> Result<Reorientation> {
    check_paths(d, s)?;
    if !s.is_acyclic() {
        return Err(Error::AcyclicityRequired("sourcing"));
    }
    let amb = Ambient::of(d)?;
    let arr = arr_of_sourcing(s).transitive_closure();
    let mask: EdgeMask =
        amb.edges().iter().enumerate().filter(|(_, &(u, v))| arr.has_edge(u, v)).fold(0, |m, (i, _)| m | 1 << i);
    Ok(Reorientation::from_mask(&amb, mask))
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SourcingIsoReport {
    pub acyclic_sourcings: usize,
    pub acyclic_ornamentations: usize,
    pub injective: bool,
    pub onto: bool,
    pub order_isomorphism: bool,
}

impl SourcingIsoReport {
    pub fn passed(&self) -> bool {
        self.injective && self.onto && self.order_isomorphism
    }
}

/// Checks that `S ↦ orn{S}` is an order isomorphism from acyclic sourcings of `P(d)` onto
/// acyclic ornamentations of `d`.
pub fn asour_aorn_isomorphism_check(d: &Digraph) -> Result<SourcingIsoReport> {
    let h = Arc::new(path_hypergraph(d));
    let sours = acyclic_sourcings(&h)?;
    let aorn = acyclic_ornamentations(d)?;
    let amb = Ambient::of(d)?;
    let orns: Vec<Ornamentation> = sours
        .iter()
        .map(|s| {
            let rev = rev_of_sourcing(d, s)?;
            Ok(orn_from_rev(d, &amb, amb.mask_of(&rev)?))
        })
        .collect::<Result<_>>()?;
    let image: HashSet<&Ornamentation> = orns.iter().collect();
    let onto = image.len() == aorn.len() && aorn.iter().all(|o| image.contains(o));
    let order_isomorphism =
        (0..sours.len()).all(|i| (0..sours.len()).all(|j| sours[i].leq(&sours[j]) == orns[i].leq(&orns[j])));
    Ok(SourcingIsoReport {
        acyclic_sourcings: sours.len(),
        acyclic_ornamentations: aorn.len(),
        injective: image.len() == sours.len(),
        onto,
        order_isomorphism,
    })
}

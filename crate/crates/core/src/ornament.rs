//! Ornaments, ornamentations and the ornamentation lattice.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::{Vertex, VertexSet};
use crate::digraph::{Digraph, TreeRelation};
use crate::error::{Error, Result};
use crate::order::FinitePoset;
use crate::perm::{factorial, permutations};
use crate::reorient::{orn_from_rev, Ambient};

/// Enumeration refuses to produce more ornamentations than this.
pub const MAX_ORNAMENTATIONS: usize = 2_000_000;
/// Permutation searches are refused above this many vertices.
pub const MAX_PERMUTATION_VERTICES: usize = 10;

/// An assignment `v ↦ O(v)` of an ornament to every vertex.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ornamentation {
    sets: Vec<VertexSet>,
}

impl Ornamentation {
    /// Validates the ornament and nesting conditions against `d`.
    pub fn new(d: &Digraph, sets: Vec<VertexSet>) -> Result<Self> {
        let o = Ornamentation { sets };
        o.validate(d)?;
        Ok(o)
    }

    pub(crate) fn from_sets_unchecked(sets: Vec<VertexSet>) -> Self {
        Ornamentation { sets }
    }

    pub fn from_lists(d: &Digraph, lists: &[&[Vertex]]) -> Result<Self> {
        Self::new(d, lists.iter().map(|l| l.iter().copied().collect()).collect())
    }

    /// `v ↦ {v}`.
    pub fn minimal(n: usize) -> Self {
        Ornamentation { sets: (1..=n).map(VertexSet::singleton).collect() }
    }

    /// `v ↦` the down-set of `v`.
    pub fn maximal(d: &Digraph) -> Self {
        Ornamentation { sets: d.vertices().map(|v| d.down_set(v)).collect() }
    }

    pub fn n(&self) -> usize {
        self.sets.len()
    }

    pub fn get(&self, v: Vertex) -> VertexSet {
        self.sets[v - 1]
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn with(&self, v: Vertex, s: VertexSet) -> Self {
        let mut sets = self.sets.clone();
        sets[v - 1] = s;
        Ornamentation { sets }
    }

    /// Componentwise inclusion.
    pub fn leq(&self, other: &Self) -> bool {
        self.sets.iter().zip(&other.sets).all(|(a, b)| a.is_subset(*b))
    }

    pub fn validate(&self, d: &Digraph) -> Result<()> {
        if self.n() != d.n() {
            return Err(Error::AmbientMismatch("ornamentation size differs from graph"));
        }
        for v in d.vertices() {
            let s = self.get(v);
            if !is_ornament(d, v, s) {
                return Err(Error::InvalidOrnamentation(format!("{s} is not an ornament at {v}")));
            }
            for u in s.iter() {
                if !self.get(u).is_subset(s) {
                    return Err(Error::InvalidOrnamentation(format!("O({u}) is not inside O({v})")));
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> OrnamentationJson {
        OrnamentationJson { n: self.n(), o: (1..=self.n()).map(|v| (v.to_string(), self.get(v).to_vec())).collect() }
    }

    pub fn from_json(d: &Digraph, j: &OrnamentationJson) -> Result<Self> {
        if j.n != d.n() {
            return Err(Error::AmbientMismatch("ornamentation size differs from graph"));
        }
        let mut sets = Ornamentation::minimal(j.n).sets;
        for (k, members) in &j.o {
            let v: Vertex = k.parse().map_err(|_| Error::InvalidOrnamentation(format!("bad vertex key {k:?}")))?;
            if v == 0 || v > j.n {
                return Err(Error::VertexOutOfRange { v, n: j.n });
            }
            sets[v - 1] = members.iter().copied().collect();
        }
        Ornamentation::new(d, sets)
    }
}

impl fmt::Debug for Ornamentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Lists each `O(v)` in vertex order, e.g. `[1|12|3]` (vertices written without separators
/// when all labels are single digits).
impl fmt::Display for Ornamentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.n() < 10;
        let parts: Vec<String> = self
            .sets
            .iter()
            .map(|s| {
                let vs: Vec<String> = s.iter().map(|v| v.to_string()).collect();
                if compact {
                    vs.concat()
                } else {
                    vs.join(",")
                }
            })
            .collect();
        write!(f, "[{}]", parts.join("|"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrnamentationJson {
    pub n: usize,
    #[serde(rename = "O")]
    pub o: BTreeMap<String, Vec<Vertex>>,
}

/// Every member of `s` reaches `v` inside `s`.
pub fn is_ornament(d: &Digraph, v: Vertex, s: VertexSet) -> bool {
    s.contains(v) && d.coreachable_within(v, s) == s
}

/// All ornaments at `v`, sorted.
pub fn ornaments_at(d: &Digraph, v: Vertex) -> Vec<VertexSet> {
    let mut seen: HashSet<VertexSet> = HashSet::from([VertexSet::singleton(v)]);
    let mut stack = vec![VertexSet::singleton(v)];
    while let Some(s) = stack.pop() {
        let mut growth = VertexSet::EMPTY;
        for w in s.iter() {
            growth = growth.union(d.in_neighbors(w));
        }
        for w in growth.difference(s).iter() {
            let t = s.with(w);
            if seen.insert(t) {
                stack.push(t);
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort_by_key(|s| (s.len(), s.to_vec()));
    out
}

/// All ornamentations of `d`, assigned vertex by vertex in topological order.
pub fn enumerate_ornamentations(d: &Digraph) -> Result<Vec<Ornamentation>> {
    enumerate_ornamentations_bounded(d, MAX_ORNAMENTATIONS)
}

pub fn enumerate_ornamentations_bounded(d: &Digraph, limit: usize) -> Result<Vec<Ornamentation>> {
    let order = d.topological_order().unwrap_or_else(|| d.vertices().collect());
    let choices: Vec<Vec<VertexSet>> = d.vertices().map(|v| ornaments_at(d, v)).collect();
    let mut out = Vec::new();
    let mut sets = vec![VertexSet::EMPTY; d.n()];
    let mut assigned = VertexSet::EMPTY;
    fn go(
        k: usize,
        order: &[Vertex],
        choices: &[Vec<VertexSet>],
        sets: &mut Vec<VertexSet>,
        assigned: &mut VertexSet,
        out: &mut Vec<Ornamentation>,
        limit: usize,
    ) -> Result<()> {
        let Some(&v) = order.get(k) else {
            if out.len() >= limit {
                return Err(Error::SizeLimit { what: "ornamentations", bound: limit as u64 });
            }
            out.push(Ornamentation { sets: sets.clone() });
            return Ok(());
        };
        'next: for &s in &choices[v - 1] {
            for u in s.intersection(*assigned).iter() {
                if !sets[u - 1].is_subset(s) {
                    continue 'next;
                }
            }
            for u in assigned.iter() {
                if sets[u - 1].contains(v) && !s.is_subset(sets[u - 1]) {
                    continue 'next;
                }
            }
            sets[v - 1] = s;
            assigned.insert(v);
            go(k + 1, order, choices, sets, assigned, out, limit)?;
            assigned.remove(v);
        }
        Ok(())
    }
    go(0, &order, &choices, &mut sets, &mut assigned, &mut out, limit)?;
    out.sort();
    Ok(out)
}

fn check_sizes(d: &Digraph, o1: &Ornamentation, o2: &Ornamentation) -> Result<()> {
    if o1.n() != d.n() || o2.n() != d.n() {
        return Err(Error::AmbientMismatch("ornamentations over different graphs"));
    }
    Ok(())
}

/// `(O1 ∧ O2)(v)` is the largest ornament at `v` inside `O1(v) ∩ O2(v)`.
pub fn orn_meet(d: &Digraph, o1: &Ornamentation, o2: &Ornamentation) -> Result<Ornamentation> {
    check_sizes(d, o1, o2)?;
    let sets = d.vertices().map(|v| d.coreachable_within(v, o1.get(v).intersection(o2.get(v)))).collect();
    Ok(Ornamentation { sets })
}

/// `(O1 ∨ O2)(v)` is the least set containing `v` and closed under `u ↦ O1(u) ∪ O2(u)`.
pub fn orn_join(d: &Digraph, o1: &Ornamentation, o2: &Ornamentation) -> Result<Ornamentation> {
    check_sizes(d, o1, o2)?;
    let step: Vec<VertexSet> = d.vertices().map(|u| o1.get(u).union(o2.get(u))).collect();
    let sets = d
        .vertices()
        .map(|v| {
            let mut s = VertexSet::singleton(v);
            loop {
                let next = s.iter().fold(s, |acc, u| acc.union(step[u - 1]));
                if next == s {
                    return s;
                }
                s = next;
            }
        })
        .collect();
    Ok(Ornamentation { sets })
}

pub fn orn_poset(d: &Digraph) -> Result<FinitePoset<Ornamentation>> {
    FinitePoset::from_relation(enumerate_ornamentations(d)?, |a, b| a.leq(b))
}

/// A cover `lower ⋖ upper` together with the vertices `(u, v)` with `upper(v) = lower(u) ∪ lower(v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    pub lower: Ornamentation,
    pub upper: Ornamentation,
    pub witness: (Vertex, Vertex),
}

/// Covers of `Orn(d)` produced by the local criterion: enlarge one `O(v)` by some `O(u)`,
/// subject to every vertex of `O(u) ∖ O(v)` with an edge into `O(v)` having the same ornament as `u`.
pub fn cover_relations(d: &Digraph) -> Result<Vec<Cover>> {
    let all = enumerate_ornamentations(d)?;
    let mut out = Vec::new();
    for o1 in &all {
        let mut seen: HashSet<Ornamentation> = HashSet::new();
        for v in d.vertices() {
            for u in d.vertices().filter(|&u| !o1.get(v).contains(u)) {
                let ou = o1.get(u);
                let target = o1.get(v);
                let attaches =
                    ou.difference(target).iter().filter(|&w| !d.out_neighbors(w).intersection(target).is_empty());
                if attaches.into_iter().any(|w| o1.get(w) != ou) {
                    continue;
                }
                let o2 = o1.with(v, ou.union(target));
                if o2.validate(d).is_ok() && seen.insert(o2.clone()) {
                    out.push(Cover { lower: o1.clone(), upper: o2, witness: (u, v) });
                }
            }
        }
    }
    Ok(out)
}

/// `J_P(v) = P` for the path `P` from `u` to `v`, singletons elsewhere.
pub fn jp(t: &Digraph, u: Vertex, v: Vertex) -> Result<Ornamentation> {
    let p = path_set(t, u, v)?;
    Ok(Ornamentation::minimal(t.n()).with(v, p))
}

/// `M_P(w) = T≤w ∖ T≤u` when `u <_T w ≤_T v`, and `T≤w` otherwise.
pub fn mp(t: &Digraph, u: Vertex, v: Vertex) -> Result<Ornamentation> {
    let p = path_set(t, u, v)?;
    let below_u = t.down_set(u);
    let sets = t
        .vertices()
        .map(|w| {
            let dw = t.down_set(w);
            if w != u && p.contains(w) {
                dw.difference(below_u)
            } else {
                dw
            }
        })
        .collect();
    Ok(Ornamentation { sets })
}

fn path_set(t: &Digraph, u: Vertex, v: Vertex) -> Result<VertexSet> {
    match t.tree_order(u, v)? {
        TreeRelation::Below(p) if p.len() >= 2 => Ok(p.into_iter().collect()),
        _ => Err(Error::NotAPath(vec![u, v])),
    }
}

/// The image of all permutations under `π ↦ orn{areori{π}}`.
pub fn acyclic_ornamentations(d: &Digraph) -> Result<HashSet<Ornamentation>> {
    if d.n() > MAX_PERMUTATION_VERTICES {
        return Err(Error::SizeLimit { what: "permutation search", bound: factorial(MAX_PERMUTATION_VERTICES) });
    }
    let amb = Ambient::of(d)?;
    let mut seen_rev = HashSet::new();
    let mut out = HashSet::new();
    for p in permutations(d.n()) {
        let rev = amb.rev_of_permutation(&p);
        if seen_rev.insert(rev) {
            out.insert(orn_from_rev(d, &amb, rev));
        }
    }
    Ok(out)
}

/// Decides whether `o = orn{R}` for some acyclic reorientation `R` of `tc(d)`.
pub fn is_acyclic_ornamentation(d: &Digraph, o: &Ornamentation) -> Result<bool> {
    o.validate(d)?;
    if d.is_tree() && !d.is_starred_tree()? {
        return Ok(true);
    }
    Ok(acyclic_ornamentations(d)?.contains(o))
}

pub fn aorn_poset(d: &Digraph) -> Result<FinitePoset<Ornamentation>> {
    let acyclic = acyclic_ornamentations(d)?;
    let mut elems: Vec<_> = acyclic.into_iter().collect();
    elems.sort();
    FinitePoset::from_relation(elems, |a, b| a.leq(b))
}

//! Finite posets and lattices stored as bit matrices.
//!
//! Elements are reindexed along a linear extension at construction time, so
//! `i < j` whenever element `i` is strictly below element `j`. Meets and joins
//! use this to find the only possible candidate in one word scan.

mod iso;
mod macneille;

use std::collections::HashMap;
use std::fmt::Write as _;
use std::hash::Hash;

use serde::Serialize;

use crate::bits::BitRow;
use crate::error::{Error, Result};

pub use iso::poset_isomorphic;
pub use macneille::{macneille_completion, MacNeille};

/// Posets larger than this are refused by lattice checks and construction.
pub const MAX_POSET: usize = 1 << 16;
/// Meet and join tables are only materialised up to this many elements.
pub const MAX_TABLE: usize = 2048;
/// Up to this size the triple-based semidistributivity test is run as a cross-check.
pub const TRIPLE_CHECK_LIMIT: usize = 300;

#[derive(Clone, Debug)]
pub struct FinitePoset<K> {
    keys: Vec<K>,
    index: HashMap<K, usize>,
    down: Vec<BitRow>,
    up: Vec<BitRow>,
    lower: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JoinRepresentation {
    pub element: usize,
    pub parts: Vec<usize>,
}

impl<K: Clone + Eq + Hash> FinitePoset<K> {
    /// Build and validate a poset from a `leq` predicate. Witness indices in errors refer to
    /// positions in `elements`.
    pub fn from_relation(elements: Vec<K>, leq: impl Fn(&K, &K) -> bool) -> Result<Self> {
        let n = elements.len();
        if n > MAX_POSET {
            return Err(Error::SizeLimit { what: "poset elements", bound: MAX_POSET as u64 });
        }
        let mut down = vec![BitRow::new(n); n];
        for (j, b) in elements.iter().enumerate() {
            for (i, a) in elements.iter().enumerate() {
                if leq(a, b) {
                    down[j].set(i);
                }
            }
        }
        Self::from_down_rows(elements, down)
    }

    /// Build from explicit down-set rows (`down[j]` has bit `i` iff `i <= j`).
    pub fn from_down_rows(elements: Vec<K>, down: Vec<BitRow>) -> Result<Self> {
        let n = elements.len();
        let mut up = vec![BitRow::new(n); n];
        for (j, row) in down.iter().enumerate() {
            for i in row.ones() {
                up[i].set(j);
            }
        }
        for i in 0..n {
            if !down[i].get(i) {
                return Err(Error::RelationViolation { axiom: "reflexive", witness: vec![i] });
            }
        }
        for i in 0..n {
            if let Some(j) = up[i].and(&down[i]).ones().find(|&j| j != i) {
                return Err(Error::RelationViolation { axiom: "antisymmetric", witness: vec![i, j] });
            }
        }
        for i in 0..n {
            for j in up[i].ones() {
                if !up[j].is_subset(&up[i]) {
                    let k = up[j].ones().find(|&k| !up[i].get(k)).unwrap();
                    return Err(Error::RelationViolation { axiom: "transitive", witness: vec![i, j, k] });
                }
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (down[i].count(), i));
        let mut pos = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            pos[old] = new;
        }
        let permute = |rows: &[BitRow]| -> Vec<BitRow> {
            order
                .iter()
                .map(|&old| {
                    let mut r = BitRow::new(n);
                    for i in rows[old].ones() {
                        r.set(pos[i]);
                    }
                    r
                })
                .collect()
        };
        let down = permute(&down);
        let up = permute(&up);
        let mut slots: Vec<Option<K>> = elements.into_iter().map(Some).collect();
        let keys: Vec<K> = order.iter().map(|&old| slots[old].take().unwrap()).collect();
        let index = keys.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect::<HashMap<_, _>>();
        if index.len() != n {
            return Err(Error::RelationViolation { axiom: "duplicate-free", witness: vec![] });
        }
        let mut lower = vec![Vec::new(); n];
        let mut upper = vec![Vec::new(); n];
        for j in 0..n {
            let mut strict = down[j].clone();
            strict.clear(j);
            for i in strict.ones() {
                if up[i].and(&strict).count() == 1 {
                    lower[j].push(i);
                    upper[i].push(j);
                }
            }
        }
        Ok(FinitePoset { keys, index, down, up, lower, upper })
    }

    pub fn index_of(&self, k: &K) -> Option<usize> {
        self.index.get(k).copied()
    }
}

impl<K> FinitePoset<K> {
    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn keys(&self) -> &[K] {
        &self.keys
    }

    pub fn key(&self, i: usize) -> &K {
        &self.keys[i]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.down[j].get(i)
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    pub fn down_row(&self, i: usize) -> &BitRow {
        &self.down[i]
    }

    pub fn up_row(&self, i: usize) -> &BitRow {
        &self.up[i]
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower[i]
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper[i]
    }

    /// Hasse diagram edges `(lower, upper)`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<_> = (0..self.len()).flat_map(|j| self.lower[j].iter().map(move |&i| (i, j))).collect();
        out.sort_unstable();
        out
    }

    /// Length of the longest chain ending at each element.
    pub fn ranks(&self) -> Vec<usize> {
        let mut rank = vec![0; self.len()];
        for j in 0..self.len() {
            rank[j] = self.lower[j].iter().map(|&i| rank[i] + 1).max().unwrap_or(0);
        }
        rank
    }

    pub fn bottom(&self) -> Option<usize> {
        (!self.is_empty() && self.up[0].count() == self.len()).then_some(0)
    }

    pub fn top(&self) -> Option<usize> {
        let t = self.len().checked_sub(1)?;
        (self.down[t].count() == self.len()).then_some(t)
    }

    pub fn meet(&self, i: usize, j: usize) -> Option<usize> {
        let lb = self.down[i].and(&self.down[j]);
        let c = lb.highest()?;
        lb.is_subset(&self.down[c]).then_some(c)
    }

    pub fn join(&self, i: usize, j: usize) -> Option<usize> {
        let ub = self.up[i].and(&self.up[j]);
        let c = ub.lowest()?;
        ub.is_subset(&self.up[c]).then_some(c)
    }

    /// `Ok(None)` for a lattice, otherwise the first pair without a meet or join.
    pub fn lattice_counterexample(&self) -> Result<Option<(usize, usize, &'static str)>> {
        if self.len() > MAX_POSET {
            return Err(Error::SizeLimit { what: "lattice check", bound: MAX_POSET as u64 });
        }
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if self.meet(i, j).is_none() {
                    return Ok(Some((i, j, "meet")));
                }
                if self.join(i, j).is_none() {
                    return Ok(Some((i, j, "join")));
                }
            }
        }
        Ok(None)
    }

    /// Finite nonempty posets are lattices iff every pair has a meet and a join.
    pub fn is_lattice(&self) -> bool {
        !self.is_empty() && matches!(self.lattice_counterexample(), Ok(None))
    }

    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.lower[i].len() == 1).collect()
    }

    pub fn meet_irreducibles(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.upper[i].len() == 1).collect()
    }

    pub fn lower_cover(&self, x: usize) -> Result<usize> {
        match self.lower[x][..] {
            [c] => Ok(c),
            _ => Err(Error::NonUniqueCover(x, "lower")),
        }
    }

    pub fn upper_cover(&self, x: usize) -> Result<usize> {
        match self.upper[x][..] {
            [c] => Ok(c),
            _ => Err(Error::NonUniqueCover(x, "upper")),
        }
    }

    /// Validated view with meet and join tables.
    pub fn lattice(&self) -> Result<Lattice<'_, K>> {
        Lattice::new(self)
    }

    /// Subposet on the elements selected by `keep`, preserving the order.
    pub fn subposet(&self, keep: &[usize]) -> FinitePoset<K>
    where
        K: Clone + Eq + Hash,
    {
        let keys: Vec<K> = keep.iter().map(|&i| self.keys[i].clone()).collect();
        let down = keep
            .iter()
            .map(|&j| {
                let mut r = BitRow::new(keep.len());
                for (a, &i) in keep.iter().enumerate() {
                    if self.leq(i, j) {
                        r.set(a);
                    }
                }
                r
            })
            .collect();
        FinitePoset::from_down_rows(keys, down).expect("restriction of a partial order")
    }

    /// Graphviz rendering of the Hasse diagram, with elements grouped by rank.
    pub fn to_dot(&self, label: impl Fn(&K) -> String) -> String {
        let mut s = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n");
        for (i, k) in self.keys.iter().enumerate() {
            let _ = writeln!(s, "  n{i} [label=\"{}\"];", label(k).replace('"', "\\\""));
        }
        let ranks = self.ranks();
        let top = ranks.iter().copied().max().unwrap_or(0);
        for r in 0..=top {
            let members: Vec<String> = (0..self.len()).filter(|&i| ranks[i] == r).map(|i| format!("n{i}")).collect();
            if !members.is_empty() {
                let _ = writeln!(s, "  {{ rank=same; {}; }}", members.join("; "));
            }
        }
        for (i, j) in self.covers() {
            let _ = writeln!(s, "  n{i} -> n{j};");
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self, key: impl Fn(&K) -> serde_json::Value) -> serde_json::Value {
        serde_json::json!({
            "elements": self.keys.iter().map(key).collect::<Vec<_>>(),
            "covers": self.covers().into_iter().map(|(i, j)| [i, j]).collect::<Vec<_>>(),
        })
    }
}

/// A lattice view over a poset with precomputed meet and join tables.
pub struct Lattice<'a, K> {
    poset: &'a FinitePoset<K>,
    meet: Vec<u32>,
    join: Vec<u32>,
}

impl<'a, K> Lattice<'a, K> {
    fn new(poset: &'a FinitePoset<K>) -> Result<Self> {
        let n = poset.len();
        if n > MAX_TABLE {
            return Err(Error::SizeLimit { what: "lattice tables", bound: MAX_TABLE as u64 });
        }
        if n == 0 {
            return Err(Error::NotALattice(0, 0, "bottom"));
        }
        let mut meet = vec![0u32; n * n];
        let mut join = vec![0u32; n * n];
        for i in 0..n {
            for j in i..n {
                let m = poset.meet(i, j).ok_or(Error::NotALattice(i, j, "meet"))?;
                let k = poset.join(i, j).ok_or(Error::NotALattice(i, j, "join"))?;
                meet[i * n + j] = m as u32;
                meet[j * n + i] = m as u32;
                join[i * n + j] = k as u32;
                join[j * n + i] = k as u32;
            }
        }
        Ok(Lattice { poset, meet, join })
    }

    pub fn poset(&self) -> &'a FinitePoset<K> {
        self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i * self.len() + j] as usize
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i * self.len() + j] as usize
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.len() - 1
    }

    pub fn join_all(&self, xs: &[usize]) -> usize {
        xs.iter().fold(self.bottom(), |acc, &x| self.join(acc, x))
    }

    pub fn meet_all(&self, xs: &[usize]) -> usize {
        xs.iter().fold(self.top(), |acc, &x| self.meet(acc, x))
    }

    /// The unique minimal `z` with `x ∨ z = y`, for a cover `x ⋖ y`.
    pub fn k_join(&self, x: usize, y: usize) -> Option<usize> {
        let mut set = BitRow::new(self.len());
        for z in self.poset.down_row(y).ones() {
            if self.join(x, z) == y {
                set.set(z);
            }
        }
        let m = set.lowest()?;
        set.is_subset(self.poset.up_row(m)).then_some(m)
    }

    /// The unique maximal `z` with `y ∧ z = x`, for a cover `x ⋖ y`.
    pub fn k_meet(&self, x: usize, y: usize) -> Option<usize> {
        let mut set = BitRow::new(self.len());
        for z in self.poset.up_row(x).ones() {
            if self.meet(y, z) == x {
                set.set(z);
            }
        }
        let m = set.highest()?;
        set.is_subset(self.poset.down_row(m)).then_some(m)
    }

    fn join_sd_by_covers(&self) -> bool {
        (0..self.len()).all(|y| self.poset.lower_covers(y).iter().all(|&x| self.k_join(x, y).is_some()))
    }

    fn meet_sd_by_covers(&self) -> bool {
        (0..self.len()).all(|y| self.poset.lower_covers(y).iter().all(|&x| self.k_meet(x, y).is_some()))
    }

    /// `x ∨ y = x ∨ z` implies `x ∨ (y ∧ z) = x ∨ y`, over all triples.
    pub fn join_sd_by_triples(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| {
            (0..n).all(|y| {
                let xy = self.join(x, y);
                (y + 1..n).all(|z| self.join(x, z) != xy || self.join(x, self.meet(y, z)) == xy)
            })
        })
    }

    pub fn meet_sd_by_triples(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| {
            (0..n).all(|y| {
                let xy = self.meet(x, y);
                (y + 1..n).all(|z| self.meet(x, z) != xy || self.meet(x, self.join(y, z)) == xy)
            })
        })
    }

    pub fn is_join_semidistributive(&self) -> Result<bool> {
        let by_covers = self.join_sd_by_covers();
        if self.len() <= TRIPLE_CHECK_LIMIT && by_covers != self.join_sd_by_triples() {
            return Err(Error::Inconsistent("join semidistributivity tests disagree".into()));
        }
        Ok(by_covers)
    }

    pub fn is_meet_semidistributive(&self) -> Result<bool> {
        let by_covers = self.meet_sd_by_covers();
        if self.len() <= TRIPLE_CHECK_LIMIT && by_covers != self.meet_sd_by_triples() {
            return Err(Error::Inconsistent("meet semidistributivity tests disagree".into()));
        }
        Ok(by_covers)
    }

    pub fn canonical_join_representation(&self, y: usize) -> Result<JoinRepresentation> {
        let mut parts = self
            .poset
            .lower_covers(y)
            .iter()
            .map(|&x| self.k_join(x, y).ok_or(Error::NotSemidistributive("join")))
            .collect::<Result<Vec<_>>>()?;
        parts.sort_unstable();
        Ok(JoinRepresentation { element: y, parts })
    }

    pub fn canonical_meet_representation(&self, x: usize) -> Result<JoinRepresentation> {
        let mut parts = self
            .poset
            .upper_covers(x)
            .iter()
            .map(|&y| self.k_meet(x, y).ok_or(Error::NotSemidistributive("meet")))
            .collect::<Result<Vec<_>>>()?;
        parts.sort_unstable();
        Ok(JoinRepresentation { element: x, parts })
    }

    /// `κ∨(m) = k∨(m, m*)` for a meet irreducible `m`.
    pub fn kappa_join(&self, m: usize) -> Result<usize> {
        let up = self.poset.upper_cover(m)?;
        self.k_join(m, up).ok_or(Error::NotSemidistributive("join"))
    }

    /// `κ∧(j) = k∧(j_*, j)` for a join irreducible `j`.
    pub fn kappa_meet(&self, j: usize) -> Result<usize> {
        let down = self.poset.lower_cover(j)?;
        self.k_meet(down, j).ok_or(Error::NotSemidistributive("meet"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn boolean(k: usize) -> FinitePoset<u32> {
        FinitePoset::from_relation((0..1u32 << k).collect(), |a, b| a & !b == 0).unwrap()
    }

    pub(crate) fn chain(k: usize) -> FinitePoset<usize> {
        FinitePoset::from_relation((0..k).collect(), |a, b| a <= b).unwrap()
    }

    pub(crate) fn antichain(k: usize) -> FinitePoset<usize> {
        FinitePoset::from_relation((0..k).collect(), |a, b| a == b).unwrap()
    }

    #[test]
    fn construction_and_axioms() {
        let p = FinitePoset::from_relation(vec!['a'], |_, _| true).unwrap();
        assert_eq!(p.len(), 1);
        assert!(p.is_lattice());
        let b = boolean(2);
        assert_eq!(b.covers().len(), 4);
        let err = FinitePoset::from_relation(vec![0, 1], |_, _| true).unwrap_err();
        assert!(matches!(err, Error::RelationViolation { axiom: "antisymmetric", .. }));
        let err = FinitePoset::from_relation(vec![0, 1, 2], |a, b| a == b || (a + 1 == *b)).unwrap_err();
        assert!(matches!(err, Error::RelationViolation { axiom: "transitive", .. }));
        let err = FinitePoset::from_relation(vec![0, 1], |a, b| a < b).unwrap_err();
        assert!(matches!(err, Error::RelationViolation { axiom: "reflexive", .. }));
    }

    #[test]
    fn linear_extension_indexing() {
        let p = FinitePoset::from_relation(vec![3u32, 1, 0, 2], |a, b| a & !b == 0).unwrap();
        assert_eq!(p.key(0), &0);
        assert_eq!(p.key(3), &3);
        for i in 0..p.len() {
            for j in 0..p.len() {
                if p.lt(i, j) {
                    assert!(i < j);
                }
            }
        }
    }

    #[test]
    fn meets_and_joins() {
        let b = boolean(3);
        let l = b.lattice().unwrap();
        for i in 0..8 {
            for j in 0..8 {
                assert_eq!(*b.key(l.meet(i, j)), b.key(i) & b.key(j));
                assert_eq!(*b.key(l.join(i, j)), b.key(i) | b.key(j));
            }
        }
        let a = antichain(2);
        assert!(!a.is_lattice());
        assert_eq!(a.lattice_counterexample().unwrap(), Some((0, 1, "meet")));
    }

    #[test]
    fn irreducibles() {
        let b = boolean(2);
        let atoms: Vec<u32> = b.join_irreducibles().iter().map(|&i| *b.key(i)).collect();
        assert_eq!(atoms, vec![1, 2]);
        let c = chain(4);
        assert_eq!(c.join_irreducibles(), vec![1, 2, 3]);
        assert!(matches!(b.lower_cover(3), Err(Error::NonUniqueCover(3, "lower"))));
        assert_eq!(c.upper_cover(1).unwrap(), 2);
    }

    #[test]
    fn semidistributivity_of_small_lattices() {
        let l = boolean(3);
        let l = l.lattice().unwrap();
        assert!(l.is_join_semidistributive().unwrap() && l.is_meet_semidistributive().unwrap());
        // M3 is neither.
        let m3 = FinitePoset::from_relation(vec![0, 1, 2, 3, 4], |a, b| a == b || *a == 0 || *b == 4).unwrap();
        let l = m3.lattice().unwrap();
        assert!(!l.is_join_semidistributive().unwrap());
        assert!(!l.is_meet_semidistributive().unwrap());
        // N5 is semidistributive but not distributive.
        let n5 = FinitePoset::from_relation(vec![0, 1, 2, 3, 4], |a, b| {
            a == b || *a == 0 || *b == 4 || (*a == 1 && *b == 2)
        })
        .unwrap();
        let l = n5.lattice().unwrap();
        assert!(l.is_join_semidistributive().unwrap() && l.is_meet_semidistributive().unwrap());
    }

    #[test]
    fn canonical_representations_in_boolean_lattice() {
        let b = boolean(3);
        let l = b.lattice().unwrap();
        assert!(l.canonical_join_representation(0).unwrap().parts.is_empty());
        let top = b.index_of(&7).unwrap();
        let parts: Vec<u32> = l.canonical_join_representation(top).unwrap().parts.iter().map(|&i| *b.key(i)).collect();
        assert_eq!(parts, vec![1, 2, 4]);
        for j in b.join_irreducibles() {
            let m = l.kappa_meet(j).unwrap();
            assert_eq!(l.kappa_join(m).unwrap(), j);
        }
    }

    #[test]
    fn dot_and_json() {
        let c = chain(2);
        let dot = c.to_dot(|k| k.to_string());
        assert!(dot.contains("n0 -> n1"));
        let j = c.to_json(|k| serde_json::json!(k));
        assert_eq!(j["covers"], serde_json::json!([[0, 1]]));
    }

    #[test]
    fn subposet_keeps_order() {
        let b = boolean(2);
        let s = b.subposet(&[1, 2]);
        assert_eq!(s.len(), 2);
        assert!(!s.is_lattice());
    }
}

//! Ornamentations of combs, labeled Dyck paths and indecomposable perfect matchings.

use std::collections::HashSet;

use serde::Serialize;

use crate::bits::VertexSet;
use crate::error::{Error, Result};
use crate::fixtures::comb;
use crate::ornament::{enumerate_ornamentations, Ornamentation};

/// Bijections are only checked exhaustively up to this comb size.
pub const MAX_BIJECTION_N: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LabeledDyckPath {
    /// `true` for an up step.
    pub steps: Vec<bool>,
    /// One label per down step, in order.
    pub labels: Vec<usize>,
}

impl LabeledDyckPath {
    pub fn semilength(&self) -> usize {
        self.labels.len()
    }

    /// Height of the top endpoint of each down step, or `None` if the steps do not form a
    /// Dyck path.
    pub fn down_heights(&self) -> Option<Vec<usize>> {
        let mut h = 0usize;
        let mut out = Vec::new();
        for &up in &self.steps {
            if up {
                h += 1;
            } else {
                out.push(h);
                h = h.checked_sub(1)?;
            }
        }
        (h == 0).then_some(out)
    }

    pub fn is_valid(&self) -> bool {
        match self.down_heights() {
            Some(hs) => hs.len() == self.labels.len() && hs.iter().zip(&self.labels).all(|(h, l)| l <= h),
            None => false,
        }
    }

    pub fn word(&self) -> String {
        let mut labels = self.labels.iter();
        self.steps.iter().map(|&up| if up { "U".to_string() } else { format!("D{}", labels.next().unwrap()) }).collect()
    }
}

/// All Dyck paths of semilength `n` with all admissible labelings.
pub fn labeled_dyck_paths(n: usize) -> Vec<LabeledDyckPath> {
    fn paths(n: usize, ups: usize, downs: usize, cur: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
        if downs == n {
            out.push(cur.clone());
            return;
        }
        if ups < n {
            cur.push(true);
            paths(n, ups + 1, downs, cur, out);
            cur.pop();
        }
        if downs < ups {
            cur.push(false);
            paths(n, ups, downs + 1, cur, out);
            cur.pop();
        }
    }
    let mut shapes = Vec::new();
    paths(n, 0, 0, &mut Vec::new(), &mut shapes);
    let mut out = Vec::new();
    for steps in shapes {
        let heights = LabeledDyckPath { steps: steps.clone(), labels: vec![0; n] }.down_heights().unwrap();
        let mut labels = vec![0usize; n];
        loop {
            out.push(LabeledDyckPath { steps: steps.clone(), labels: labels.clone() });
            let Some(k) = (0..n).rev().find(|&k| labels[k] < heights[k]) else { break };
            labels[k] += 1;
            for l in &mut labels[k + 1..] {
                *l = 0;
            }
        }
    }
    out
}

/// A perfect matching of `[2m]` as pairs `(a, b)` with `a < b`, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PerfectMatching {
    pub pairs: Vec<(usize, usize)>,
}

impl PerfectMatching {
    pub fn new(mut pairs: Vec<(usize, usize)>) -> Result<Self> {
        for p in &mut pairs {
            if p.0 > p.1 {
                *p = (p.1, p.0);
            }
        }
        pairs.sort_unstable();
        let mut seen: Vec<usize> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        seen.sort_unstable();
        if seen != (1..=2 * pairs.len()).collect::<Vec<_>>() {
            return Err(Error::Inconsistent(format!("{pairs:?} is not a perfect matching")));
        }
        Ok(PerfectMatching { pairs })
    }

    pub fn size(&self) -> usize {
        2 * self.pairs.len()
    }

    fn partner(&self) -> Vec<usize> {
        let mut p = vec![0; self.size() + 1];
        for &(a, b) in &self.pairs {
            p[a] = b;
            p[b] = a;
        }
        p
    }

    /// No proper prefix `[2k]` is a union of pairs.
    pub fn is_indecomposable(&self) -> bool {
        let partner = self.partner();
        let mut open = 0i64;
        for x in 1..self.size() {
            open += if partner[x] > x { 1 } else { -1 };
            if open == 0 {
                return false;
            }
        }
        true
    }
}

pub fn perfect_matchings(size: usize) -> Vec<PerfectMatching> {
    fn go(free: &mut Vec<usize>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<PerfectMatching>) {
        if free.is_empty() {
            out.push(PerfectMatching {
                pairs: {
                    let mut p = cur.clone();
                    p.sort_unstable();
                    p
                },
            });
            return;
        }
        let a = free.remove(0);
        for i in 0..free.len() {
            let b = free.remove(i);
            cur.push((a, b));
            go(free, cur, out);
            cur.pop();
            free.insert(i, b);
        }
        free.insert(0, a);
    }
    assert!(size.is_multiple_of(2));
    let mut out = Vec::new();
    go(&mut (1..=size).collect(), &mut Vec::new(), &mut out);
    out
}

pub fn indecomposable_matchings(size: usize) -> Vec<PerfectMatching> {
    perfect_matchings(size).into_iter().filter(PerfectMatching::is_indecomposable).collect()
}

fn handle(i: usize) -> usize {
    2 * i
}

fn tooth(i: usize) -> usize {
    2 * i - 1
}

/// Handle restriction gives the Dyck path: the `i`-th down step tops out at the number of
/// ornaments containing handle node `i`; its label counts handle ornaments containing tooth `i`.
pub fn ornamentation_to_dyck(n: usize, o: &Ornamentation) -> LabeledDyckPath {
    let count = |x: usize| (1..=n).filter(|&j| o.get(handle(j)).contains(x)).count();
    let mut steps = Vec::with_capacity(2 * n);
    let mut labels = Vec::with_capacity(n);
    let mut prev = 1usize;
    for i in 1..=n {
        let c = count(handle(i));
        steps.extend(std::iter::repeat_n(true, c + 1 - prev));
        steps.push(false);
        labels.push(count(tooth(i)));
        prev = c;
    }
    LabeledDyckPath { steps, labels }
}

pub fn dyck_to_ornamentation(n: usize, p: &LabeledDyckPath) -> Result<Ornamentation> {
    if !p.is_valid() || p.semilength() != n {
        return Err(Error::Inconsistent(format!("{} is not a labeled Dyck path of semilength {n}", p.word())));
    }
    let c = p.down_heights().unwrap();
    let parent: Vec<Option<usize>> =
        (0..n).map(|i| if c[i] <= 1 { None } else { (i + 1..n).find(|&j| c[j] == c[i] - 1) }).collect();
    // ancestors[i] lists i and its ancestors, from the smallest ornament to the largest.
    let ancestors: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            let mut chain = vec![i];
            while let Some(q) = parent[*chain.last().unwrap()] {
                chain.push(q);
            }
            chain
        })
        .collect();
    let mut sets: Vec<VertexSet> = (1..=2 * n).map(VertexSet::singleton).collect();
    for i in 0..n {
        let chain = &ancestors[i];
        for (depth, &j) in chain.iter().enumerate() {
            sets[handle(j + 1) - 1].insert(handle(i + 1));
            if chain.len() - depth <= p.labels[i] {
                sets[handle(j + 1) - 1].insert(tooth(i + 1));
            }
        }
    }
    Ornamentation::new(&comb(n), sets)
}

/// Reads the path left to right starting from one free point: an up step adds a free point,
/// a down step labeled `ℓ` adds a point matched to the `(ℓ+1)`-st free point from the right,
/// and a final point closes the last free one.
pub fn dyck_to_matching(p: &LabeledDyckPath) -> Result<PerfectMatching> {
    if !p.is_valid() {
        return Err(Error::Inconsistent(format!("{} is not a labeled Dyck path", p.word())));
    }
    let mut free = vec![1usize];
    let mut pairs = Vec::new();
    let mut next = 2;
    let mut labels = p.labels.iter();
    for &up in &p.steps {
        if up {
            free.push(next);
        } else {
            let l = *labels.next().unwrap();
            let partner = free.remove(free.len() - 1 - l);
            pairs.push((partner, next));
        }
        next += 1;
    }
    pairs.push((free.pop().unwrap(), next));
    PerfectMatching::new(pairs)
}

pub fn matching_to_dyck(m: &PerfectMatching) -> Option<LabeledDyckPath> {
    let partner = m.partner();
    let last = m.size();
    let mut free = vec![1usize];
    if partner[1] == 0 {
        return None;
    }
    let mut steps = Vec::new();
    let mut labels = Vec::new();
    for x in 2..last {
        if partner[x] > x {
            free.push(x);
            steps.push(true);
        } else {
            let at = free.iter().position(|&f| f == partner[x])?;
            labels.push(free.len() - 1 - at);
            free.remove(at);
            if free.is_empty() {
                return None;
            }
            steps.push(false);
        }
    }
    (free == [partner[last]]).then_some(LabeledDyckPath { steps, labels })
}

#[derive(Clone, Debug, Serialize)]
pub struct BijectionReport {
    pub n: usize,
    pub count: String,
    pub ornamentations: usize,
    pub dyck_paths: usize,
    pub matchings: usize,
    pub roundtrip_failures: Vec<String>,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        let c = self.count.parse::<usize>().ok();
        self.roundtrip_failures.is_empty()
            && c == Some(self.ornamentations)
            && c == Some(self.dyck_paths)
            && c == Some(self.matchings)
    }
}

/// Runs both bijections over every object on all three sides.
pub fn comb_bijections(n: usize) -> Result<BijectionReport> {
    if n > MAX_BIJECTION_N {
        return Err(Error::SizeLimit { what: "comb bijection size", bound: MAX_BIJECTION_N as u64 });
    }
    let orns = enumerate_ornamentations(&comb(n))?;
    let paths = labeled_dyck_paths(n);
    let matchings = indecomposable_matchings(2 * n + 2);
    let mut failures = Vec::new();
    let path_set: HashSet<&LabeledDyckPath> = paths.iter().collect();
    let match_set: HashSet<&PerfectMatching> = matchings.iter().collect();
    let mut images = HashSet::new();
    for o in &orns {
        let p = ornamentation_to_dyck(n, o);
        if !path_set.contains(&p) {
            failures.push(format!("{o} maps to invalid path {}", p.word()));
        } else if dyck_to_ornamentation(n, &p).ok().as_ref() != Some(o) {
            failures.push(format!("{o} does not round-trip through {}", p.word()));
        }
        images.insert(p);
    }
    if images.len() != orns.len() {
        failures.push("ornamentation map is not injective".into());
    }
    let mut m_images = HashSet::new();
    for p in &paths {
        match dyck_to_matching(p) {
            Ok(m) if match_set.contains(&m) => {
                if matching_to_dyck(&m).as_ref() != Some(p) {
                    failures.push(format!("{} does not round-trip through {:?}", p.word(), m.pairs));
                }
                m_images.insert(m);
            }
            _ => failures.push(format!("{} maps outside indecomposable matchings", p.word())),
        }
    }
    if m_images.len() != paths.len() {
        failures.push("matching map is not injective".into());
    }
    Ok(BijectionReport {
        n,
        count: super::comb_count(n).to_string(),
        ornamentations: orns.len(),
        dyck_paths: paths.len(),
        matchings: matchings.len(),
        roundtrip_failures: failures,
    })
}

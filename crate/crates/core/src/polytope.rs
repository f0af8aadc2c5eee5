//! Hypergraphic polytopes and graphical zonotopes as exact vertex clouds.
//!
//! Skeleton edges are found pairwise: `p q` is an edge iff the midpoint of `p` and `q` is not
//! a convex combination of the other points. Each test is a phase-one simplex over the
//! rationals with Bland's rule.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::bits::BitRow;
use crate::digraph::{path_hypergraph, Digraph, Hypergraph};
use crate::error::{Error, Result};
use crate::order::{poset_isomorphic, FinitePoset};
use crate::ornament::orn_poset;
use crate::reorient::{Ambient, Reorientation};
use crate::sourcing::{acyclic_sourcings, asour_poset, Sourcing};

/// Clouds with more points than this are refused by the skeleton oracle.
pub const MAX_POINTS: usize = 600;

pub type Point = Vec<i64>;

/// `(n−1, n−3, …, 3−n, 1−n)`.
pub fn omega(n: usize) -> Vec<i64> {
    (0..n).map(|i| n as i64 - 1 - 2 * i as i64).collect()
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `Σ_H e_{S(H)}`.
pub fn sourcing_point(s: &Sourcing) -> Point {
    let mut p = vec![0; s.ambient().n()];
    for &v in s.choice() {
        p[v - 1] += 1;
    }
    p
}

/// Each edge contributes the basis vector of its tail after reorientation.
pub fn reorientation_point(r: &Reorientation) -> Point {
    let amb = r.ambient();
    let mut p = vec![0; amb.n()];
    for (i, &(u, v)) in amb.edges().iter().enumerate() {
        let tail = if r.mask() >> i & 1 == 1 { v } else { u };
        p[tail - 1] += 1;
    }
    p
}

fn check_distinct(points: &[Point]) -> Result<()> {
    let mut seen = HashSet::new();
    for p in points {
        if !seen.insert(p) {
            return Err(Error::DuplicatePoint(p.clone()));
        }
    }
    Ok(())
}

/// One point per acyclic sourcing; errors if two sourcings share a point.
pub fn hypergraphic_vertices(h: &Arc<Hypergraph>) -> Result<Vec<(Sourcing, Point)>> {
    let sourcings = acyclic_sourcings(h)?;
    if sourcings.len() > MAX_POINTS {
        return Err(Error::SizeLimit { what: "polytope vertices", bound: MAX_POINTS as u64 });
    }
    let out: Vec<(Sourcing, Point)> = sourcings
        .into_iter()
        .map(|s| {
            let p = sourcing_point(&s);
            (s, p)
        })
        .collect();
    check_distinct(&out.iter().map(|(_, p)| p.clone()).collect::<Vec<_>>())?;
    Ok(out)
}

/// One point per acyclic reorientation of the ambient graph.
pub fn zonotope_vertices(amb: &Arc<Ambient>) -> Result<Vec<(Reorientation, Point)>> {
    let masks = amb.acyclic_masks()?;
    if masks.len() > MAX_POINTS {
        return Err(Error::SizeLimit { what: "zonotope vertices", bound: MAX_POINTS as u64 });
    }
    let out: Vec<(Reorientation, Point)> = masks
        .into_iter()
        .map(|m| {
            let r = Reorientation::from_mask(amb, m);
            let p = reorientation_point(&r);
            (r, p)
        })
        .collect();
    check_distinct(&out.iter().map(|(_, p)| p.clone()).collect::<Vec<_>>())?;
    Ok(out)
}

/// Whether `Σ_j x_j a_j = b` has a solution with `x ≥ 0`, where `a_j` are the columns.
pub fn is_feasible(columns: &[Vec<i64>], b: &[i64]) -> bool {
    feasible_integer(columns, b).unwrap_or_else(|| feasible_rational(columns, b))
}

/// Phase one with integer-preserving pivots: entries stay integral with common denominator
/// `d`, the previous pivot. `None` on `i128` overflow.
fn feasible_integer(columns: &[Vec<i64>], b: &[i64]) -> Option<bool> {
    let rows = b.len();
    let cols = columns.len();
    let width = cols + rows + 1;
    let mut t: Vec<Vec<i128>> = (0..rows)
        .map(|r| {
            let sign: i128 = if b[r] < 0 { -1 } else { 1 };
            let mut row = vec![0i128; width];
            for (j, c) in columns.iter().enumerate() {
                row[j] = sign * c[r] as i128;
            }
            row[cols + r] = 1;
            row[width - 1] = sign * b[r] as i128;
            row
        })
        .collect();
    let mut z = vec![0i128; width];
    for row in &t {
        for j in 0..cols {
            z[j] -= row[j];
        }
        z[width - 1] -= row[width - 1];
    }
    t.push(z);
    let obj = rows;
    let mut basis: Vec<usize> = (cols..cols + rows).collect();
    let mut d: i128 = 1;
    while let Some(enter) = (0..width - 1).find(|&j| t[obj][j] < 0) {
        let mut leave: Option<usize> = None;
        for r in 0..rows {
            if t[r][enter] > 0 {
                leave = Some(match leave {
                    None => r,
                    Some(l) => {
                        let lhs = t[r][width - 1].checked_mul(t[l][enter])?;
                        let rhs = t[l][width - 1].checked_mul(t[r][enter])?;
                        if lhs < rhs || (lhs == rhs && basis[r] < basis[l]) {
                            r
                        } else {
                            l
                        }
                    }
                });
            }
        }
        let Some(r) = leave else { break };
        let a = t[r][enter];
        let prow = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let f = row[enter];
            for (x, &p) in row.iter_mut().zip(&prow) {
                let num = x.checked_mul(a)?.checked_sub(f.checked_mul(p)?)?;
                if num % d != 0 {
                    return None;
                }
                *x = num / d;
            }
        }
        d = a;
        basis[r] = enter;
    }
    Some(t[obj][width - 1] == 0)
}

fn feasible_rational(columns: &[Vec<i64>], b: &[i64]) -> bool {
    let rows = b.len();
    let cols = columns.len();
    let rat = |x: i64| BigRational::from_integer(BigInt::from(x));
    // Tableau `[A | I | b]` with one artificial variable per row.
    let width = cols + rows + 1;
    let mut t: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| {
            let mut row = vec![BigRational::zero(); width];
            let sign = if b[r] < 0 { -1 } else { 1 };
            for (j, c) in columns.iter().enumerate() {
                row[j] = rat(sign * c[r]);
            }
            row[cols + r] = rat(1);
            row[width - 1] = rat(sign * b[r]);
            row
        })
        .collect();
    let mut basis: Vec<usize> = (cols..cols + rows).collect();
    // Reduced costs of `min Σ artificials`.
    let mut z = vec![BigRational::zero(); width];
    for row in &t {
        for j in 0..cols {
            z[j] -= &row[j];
        }
        z[width - 1] -= &row[width - 1];
    }
    while let Some(enter) = (0..width - 1).find(|&j| z[j].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for (r, row) in t.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = &row[width - 1] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        let Some((r, _)) = leave else { break };
        let piv = t[r][enter].clone();
        for x in t[r].iter_mut() {
            *x /= &piv;
        }
        let prow = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != r && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (x, p) in row.iter_mut().zip(&prow) {
                    *x -= &f * p;
                }
            }
        }
        let f = z[enter].clone();
        for (x, p) in z.iter_mut().zip(&prow) {
            *x -= &f * p;
        }
        basis[r] = enter;
    }
    z[width - 1].is_zero()
}

/// Whether the segment `[p, q]` meets the convex hull of `others`.
fn segment_meets_hull(p: &Point, q: &Point, others: &[&Point]) -> bool {
    // Σ μ_k x_k − t p − s q = 0, Σ μ_k = 1, t + s = 1.
    let d = p.len();
    let mut columns: Vec<Vec<i64>> = others.iter().map(|x| x.iter().copied().chain([1, 0]).collect()).collect();
    columns.push(p.iter().map(|c| -c).chain([0, 1]).collect());
    columns.push(q.iter().map(|c| -c).chain([0, 1]).collect());
    let mut b = vec![0; d];
    b.extend([1, 1]);
    is_feasible(&columns, &b)
}

/// Undirected edges `(i, j)`, `i < j`, of the convex hull of `points`, which must be in convex
/// position. Two vertices span an edge iff their segment misses the hull of the other points.
pub fn skeleton(points: &[Point]) -> Result<Vec<(usize, usize)>> {
    skeleton_among(points, |_, _| true)
}

/// Skeleton of a generalized permutahedron, whose edges are all parallel to some `e_i − e_j`.
pub fn permutahedral_skeleton(points: &[Point]) -> Result<Vec<(usize, usize)>> {
    skeleton_among(points, |p, q| {
        let diff: Vec<i64> = p.iter().zip(q).map(|(a, b)| a - b).filter(|&x| x != 0).collect();
        diff.len() == 2 && diff[0] == -diff[1]
    })
}

fn skeleton_among(points: &[Point], candidate: impl Fn(&Point, &Point) -> bool + Sync) -> Result<Vec<(usize, usize)>> {
    if points.len() > MAX_POINTS {
        return Err(Error::SizeLimit { what: "skeleton points", bound: MAX_POINTS as u64 });
    }
    check_distinct(points)?;
    let pairs: Vec<(usize, usize)> = (0..points.len())
        .flat_map(|i| (i + 1..points.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| candidate(&points[i], &points[j]))
        .collect();
    // Pairs of points sharing a midpoint with another pair are diagonals.
    let mut sums: HashMap<Point, usize> = HashMap::new();
    for &(i, j) in &pairs {
        *sums.entry(point_sum(&points[i], &points[j])).or_default() += 1;
    }
    let mut edges: Vec<(usize, usize)> = pairs
        .into_par_iter()
        .filter(|&(i, j)| {
            if sums[&point_sum(&points[i], &points[j])] > 1 {
                return false;
            }
            let others: Vec<&Point> =
                points.iter().enumerate().filter(|&(k, _)| k != i && k != j).map(|(_, p)| p).collect();
            !segment_meets_hull(&points[i], &points[j], &others)
        })
        .collect();
    edges.sort_unstable();
    Ok(edges)
}

fn point_sum(p: &Point, q: &Point) -> Point {
    p.iter().zip(q).map(|(a, b)| a + b).collect()
}

/// Orients each edge from the endpoint with larger `⟨ω, ·⟩` to the one with smaller.
pub fn orient_edges(points: &[Point], edges: &[(usize, usize)]) -> Result<Vec<(usize, usize)>> {
    let Some(n) = points.first().map(Vec::len) else { return Ok(Vec::new()) };
    let w = omega(n);
    edges
        .iter()
        .map(|&(i, j)| match dot(&w, &points[i]).cmp(&dot(&w, &points[j])) {
            std::cmp::Ordering::Greater => Ok((i, j)),
            std::cmp::Ordering::Less => Ok((j, i)),
            std::cmp::Ordering::Equal => Err(Error::ZeroDirection(i, j)),
        })
        .collect()
}

/// The transitive closure of the oriented edges as a poset on `keys`.
pub fn closure_poset<K: Clone + Eq + std::hash::Hash>(
    keys: Vec<K>,
    points: &[Point],
    arcs: &[(usize, usize)],
) -> Result<FinitePoset<K>> {
    let n = keys.len();
    let w = omega(points.first().map_or(0, Vec::len));
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(dot(&w, &points[i])));
    let mut preds = vec![Vec::new(); n];
    for &(a, b) in arcs {
        preds[b].push(a);
    }
    let mut down = vec![BitRow::new(n); n];
    for &j in &order {
        down[j].set(j);
        for &a in &preds[j] {
            let row = down[a].clone();
            down[j].or_assign(&row);
        }
    }
    FinitePoset::from_down_rows(keys, down)
}

#[derive(Clone, Debug)]
pub struct OrientedSkeleton<K> {
    pub keys: Vec<K>,
    pub points: Vec<Point>,
    /// `(lower, upper)` index pairs into `keys`.
    pub arcs: Vec<(usize, usize)>,
}

impl<K: Clone + Eq + std::hash::Hash> OrientedSkeleton<K> {
    fn build(pairs: Vec<(K, Point)>) -> Result<Self> {
        let (keys, points): (Vec<K>, Vec<Point>) = pairs.into_iter().unzip();
        let arcs = orient_edges(&points, &permutahedral_skeleton(&points)?)?;
        Ok(OrientedSkeleton { keys, points, arcs })
    }

    pub fn poset(&self) -> Result<FinitePoset<K>> {
        closure_poset(self.keys.clone(), &self.points, &self.arcs)
    }

    /// Arcs as key pairs.
    pub fn arc_keys(&self) -> HashSet<(K, K)> {
        self.arcs.iter().map(|&(a, b)| (self.keys[a].clone(), self.keys[b].clone())).collect()
    }

    pub fn to_dot(&self, label: impl Fn(&K) -> String) -> String {
        let mut s = String::from("digraph skeleton {\n  rankdir=BT;\n");
        for (i, k) in self.keys.iter().enumerate() {
            s.push_str(&format!("  n{i} [label=\"{}\"];\n", label(k)));
        }
        let mut arcs = self.arcs.clone();
        arcs.sort_unstable();
        for (a, b) in arcs {
            s.push_str(&format!("  n{a} -> n{b};\n"));
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self, key: impl Fn(&K) -> serde_json::Value) -> serde_json::Value {
        let mut arcs = self.arcs.clone();
        arcs.sort_unstable();
        serde_json::json!({
            "vertices": self.keys.iter().zip(&self.points)
                .map(|(k, p)| serde_json::json!({ "key": key(k), "point": p }))
                .collect::<Vec<_>>(),
            "arcs": arcs.into_iter().map(|(a, b)| [a, b]).collect::<Vec<_>>(),
        })
    }
}

pub fn hypergraphic_skeleton(h: &Arc<Hypergraph>) -> Result<OrientedSkeleton<Sourcing>> {
    OrientedSkeleton::build(hypergraphic_vertices(h)?)
}

pub fn zonotope_skeleton(amb: &Arc<Ambient>) -> Result<OrientedSkeleton<Reorientation>> {
    OrientedSkeleton::build(zonotope_vertices(amb)?)
}

pub fn oriented_skeleton_poset(h: &Arc<Hypergraph>) -> Result<FinitePoset<Sourcing>> {
    hypergraphic_skeleton(h)?.poset()
}

fn same_relation<K: Clone + Eq + std::hash::Hash>(p: &FinitePoset<K>, q: &FinitePoset<K>) -> bool {
    p.len() == q.len()
        && (0..p.len()).all(|i| {
            q.index_of(p.key(i)).is_some_and(|qi| {
                (0..p.len()).all(|j| q.index_of(p.key(j)).is_some_and(|qj| p.leq(i, j) == q.leq(qi, qj)))
            })
        })
}

fn hasse_keys<K: Clone + Eq + std::hash::Hash>(p: &FinitePoset<K>) -> HashSet<(K, K)> {
    p.covers().into_iter().map(|(i, j)| (p.key(i).clone(), p.key(j).clone())).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct HypergraphRealization {
    pub vertices: usize,
    pub skeleton_edges: usize,
    /// The closure of the oriented skeleton is the acyclic sourcing order.
    pub closure_matches: bool,
    pub hasse_in_skeleton: bool,
    pub skeleton_is_hasse: bool,
}

impl HypergraphRealization {
    pub fn passed(&self) -> bool {
        self.closure_matches && self.hasse_in_skeleton
    }
}

pub fn hypergraph_realization(h: &Arc<Hypergraph>) -> Result<HypergraphRealization> {
    let sk = hypergraphic_skeleton(h)?;
    let closed = sk.poset()?;
    let asour = asour_poset(h)?;
    let hasse = hasse_keys(&asour);
    let arcs = sk.arc_keys();
    Ok(HypergraphRealization {
        vertices: sk.keys.len(),
        skeleton_edges: sk.arcs.len(),
        closure_matches: same_relation(&closed, &asour),
        hasse_in_skeleton: hasse.is_subset(&arcs),
        skeleton_is_hasse: hasse == arcs,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct RealizationReport {
    pub hypergraph: HypergraphRealization,
    /// `None` when the graph is not an unstarred tree.
    pub orn_isomorphic: Option<bool>,
    pub zonotope_vertices: usize,
    pub zonotope_edges: usize,
    /// The oriented zonotope skeleton is the Hasse diagram of the acyclic reorientations.
    pub zonotope_hasse_matches: bool,
}

impl RealizationReport {
    pub fn passed(&self) -> bool {
        self.hypergraph.passed() && self.orn_isomorphic != Some(false) && self.zonotope_hasse_matches
    }
}

/// Compares the oriented skeletons of the path hypergraphic polytope and of the zonotope of
/// the transitive closure with the combinatorial posets.
pub fn realization_check(d: &Digraph) -> Result<RealizationReport> {
    let h = Arc::new(path_hypergraph(d));
    let hypergraph = hypergraph_realization(&h)?;
    let unstarred = d.is_tree() && !d.is_starred_tree()?;
    let orn_isomorphic = if unstarred {
        let sk = oriented_skeleton_poset(&h)?;
        Some(poset_isomorphic(&sk, &orn_poset(d)?).is_some())
    } else {
        None
    };
    let amb = Ambient::of(d)?;
    let zsk = zonotope_skeleton(&amb)?;
    let areori = FinitePoset::from_relation(zsk.keys.clone(), Reorientation::leq)?;
    Ok(RealizationReport {
        hypergraph,
        orn_isomorphic,
        zonotope_vertices: zsk.keys.len(),
        zonotope_edges: zsk.arcs.len(),
        zonotope_hasse_matches: hasse_keys(&areori) == zsk.arc_keys(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::increasing_trees;
    use crate::fixtures::{broom, comb, path};
    use proptest::prelude::*;

    fn hyper(n: usize, lists: &[&[u8]]) -> Arc<Hypergraph> {
        let lists: Vec<Vec<crate::Vertex>> = lists.iter().map(|l| l.iter().map(|&v| v.into()).collect()).collect();
        let refs: Vec<&[crate::Vertex]> = lists.iter().map(Vec::as_slice).collect();
        Arc::new(Hypergraph::from_lists(n, &refs).unwrap())
    }

    #[test]
    fn omega_is_strictly_decreasing() {
        assert_eq!(omega(4), vec![3, 1, -1, -3]);
        assert_eq!(omega(1), vec![0]);
    }

    #[test]
    fn small_skeletons() {
        assert_eq!(skeleton(&[vec![0, 1], vec![1, 0]]).unwrap(), vec![(0, 1)]);
        let square = [vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]];
        assert_eq!(skeleton(&square).unwrap(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert!(matches!(skeleton(&[vec![1], vec![1]]), Err(Error::DuplicatePoint(_))));
        let tri = [vec![0, 0, 3], vec![0, 3, 0], vec![3, 0, 0], vec![1, 1, 1]];
        assert_eq!(skeleton(&tri[..3]).unwrap().len(), 3);
    }

    #[test]
    fn feasibility() {
        let cols = vec![vec![0, 0, 1], vec![2, 0, 1], vec![0, 2, 1]];
        assert!(is_feasible(&cols, &[1, 1, 1]));
        assert!(!is_feasible(&cols, &[2, 2, 1]));
        assert!(is_feasible(&cols[1..], &[2, 2, 2]));
        assert!(!is_feasible(&cols[1..2], &[1, 1, 1]));
        assert!(is_feasible(&[vec![-1], vec![1]], &[0]));
        assert!(is_feasible(&[vec![-1]], &[-3]));
    }

    proptest! {
        #[test]
        fn integer_pivoting_matches_rationals(
            cols in prop::collection::vec(prop::collection::vec(-4i64..5, 3), 1..9),
            b in prop::collection::vec(-6i64..7, 3),
        ) {
            let fast = feasible_integer(&cols, &b);
            prop_assert!(fast.is_some());
            prop_assert_eq!(fast.unwrap(), feasible_rational(&cols, &b));
        }
    }

    #[test]
    fn permutahedral_filter_agrees() {
        for t in increasing_trees(4) {
            let h = Arc::new(path_hypergraph(&t));
            let pts: Vec<Point> = hypergraphic_vertices(&h).unwrap().into_iter().map(|(_, p)| p).collect();
            assert_eq!(skeleton(&pts).unwrap(), permutahedral_skeleton(&pts).unwrap());
        }
    }

    #[test]
    fn pentagon_diagonals_are_not_edges() {
        let pentagon = [vec![0, 0], vec![2, 0], vec![3, 2], vec![1, 3], vec![-1, 2]];
        assert_eq!(skeleton(&pentagon).unwrap(), vec![(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]);
    }

    #[test]
    fn segment_and_associahedron() {
        let seg = hyper(2, &[&[1, 2]]);
        let v = hypergraphic_vertices(&seg).unwrap();
        let pts: HashSet<Point> = v.iter().map(|(_, p)| p.clone()).collect();
        assert_eq!(pts, HashSet::from([vec![1, 0], vec![0, 1]]));
        let chain = oriented_skeleton_poset(&seg).unwrap();
        assert_eq!(chain.len(), 2);
        assert!(chain.bottom().is_some() && chain.top().is_some());

        let i3 = Arc::new(path_hypergraph(&path(3)));
        let sk = hypergraphic_skeleton(&i3).unwrap();
        assert_eq!((sk.keys.len(), sk.arcs.len()), (5, 5));
        let p = sk.poset().unwrap();
        assert!(p.is_lattice());
        assert_eq!(
            sk.keys[p.bottom().map(|b| sk.keys.iter().position(|k| k == p.key(b)).unwrap()).unwrap()],
            Sourcing::all_min(&i3)
        );
        assert!(poset_isomorphic(&p, &orn_poset(&path(3)).unwrap()).is_some());
    }

    #[test]
    fn permutahedra() {
        for n in 2..=4usize {
            let pairs: Vec<Vec<u8>> = (1..=n as u8).flat_map(|u| (u + 1..=n as u8).map(move |v| vec![u, v])).collect();
            let refs: Vec<&[u8]> = pairs.iter().map(Vec::as_slice).collect();
            let h = hyper(n, &refs);
            let sk = hypergraphic_skeleton(&h).unwrap();
            assert_eq!(sk.keys.len(), (1..=n).product::<usize>());
            let mut deg = vec![0; sk.keys.len()];
            for &(a, b) in &sk.arcs {
                deg[a] += 1;
                deg[b] += 1;
            }
            assert!(deg.iter().all(|&d| d == n - 1), "n={n}");
        }
    }

    #[test]
    fn hexagon_is_weak_order() {
        let amb = Ambient::of(&path(3)).unwrap();
        let sk = zonotope_skeleton(&amb).unwrap();
        assert_eq!((sk.keys.len(), sk.arcs.len()), (6, 6));
        let p = sk.poset().unwrap();
        assert!(p.is_lattice());
        assert_eq!(p.ranks().into_iter().max(), Some(3));
    }

    #[test]
    fn realizations() {
        for t in [path(3), path(4), broom(2, 1), comb(2)] {
            let r = realization_check(&t).unwrap();
            assert!(r.passed(), "{t:?}: {r:?}");
            assert_eq!(r.orn_isomorphic, Some(true));
        }
        assert_eq!(realization_check(&comb(2)).unwrap().hypergraph.vertices, 10);
        for t in increasing_trees(4) {
            let r = realization_check(&t).unwrap();
            assert!(r.passed(), "{t:?}: {r:?}");
        }
    }

    #[test]
    fn skeleton_may_exceed_hasse() {
        for t in increasing_trees(4) {
            let r = hypergraph_realization(&Arc::new(path_hypergraph(&t))).unwrap();
            assert!(r.passed() && r.skeleton_is_hasse);
        }
        let h = hyper(3, &[&[1, 3], &[1, 2, 3]]);
        let r = hypergraph_realization(&h).unwrap();
        assert!(r.passed());
        assert!(!r.skeleton_is_hasse);
        assert_eq!((r.vertices, r.skeleton_edges), (4, 4));
        assert_eq!(asour_poset(&h).unwrap().covers().len(), 3);
    }
}

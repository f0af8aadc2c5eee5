use std::collections::BTreeMap;

use super::FinitePoset;

/// Colour refinement on the Hasse diagram, run jointly on both posets so colour ids agree.
fn refine<A, B>(p: &FinitePoset<A>, q: &FinitePoset<B>) -> (Vec<usize>, Vec<usize>) {
    let ranks = (p.ranks(), q.ranks());
    let init = |i: usize, poset_rank: &[usize], down: usize, up: usize, lo: usize, hi: usize| {
        vec![poset_rank[i], down, up, lo, hi]
    };
    let mut sig_p: Vec<Vec<usize>> = (0..p.len())
        .map(|i| {
            init(
                i,
                &ranks.0,
                p.down_row(i).count(),
                p.up_row(i).count(),
                p.lower_covers(i).len(),
                p.upper_covers(i).len(),
            )
        })
        .collect();
    let mut sig_q: Vec<Vec<usize>> = (0..q.len())
        .map(|i| {
            init(
                i,
                &ranks.1,
                q.down_row(i).count(),
                q.up_row(i).count(),
                q.lower_covers(i).len(),
                q.upper_covers(i).len(),
            )
        })
        .collect();
    let mut classes = 0;
    loop {
        let mut ids: BTreeMap<&Vec<usize>, usize> = BTreeMap::new();
        for s in sig_p.iter().chain(&sig_q) {
            let next = ids.len();
            ids.entry(s).or_insert(next);
        }
        let cp: Vec<usize> = sig_p.iter().map(|s| ids[s]).collect();
        let cq: Vec<usize> = sig_q.iter().map(|s| ids[s]).collect();
        let count = ids.len();
        if count == classes {
            return (cp, cq);
        }
        classes = count;
        let step = |c: &[usize], lower: &dyn Fn(usize) -> Vec<usize>, upper: &dyn Fn(usize) -> Vec<usize>, i: usize| {
            let mut lo: Vec<usize> = lower(i).into_iter().map(|j| c[j]).collect();
            let mut hi: Vec<usize> = upper(i).into_iter().map(|j| c[j]).collect();
            lo.sort_unstable();
            hi.sort_unstable();
            let mut s = vec![c[i], usize::MAX];
            s.extend(lo);
            s.push(usize::MAX);
            s.extend(hi);
            s
        };
        sig_p = (0..p.len())
            .map(|i| step(&cp, &|j| p.lower_covers(j).to_vec(), &|j| p.upper_covers(j).to_vec(), i))
            .collect();
        sig_q = (0..q.len())
            .map(|i| step(&cq, &|j| q.lower_covers(j).to_vec(), &|j| q.upper_covers(j).to_vec(), i))
            .collect();
    }
}

/// Decide whether two posets are isomorphic. On success returns the bijection `f` with
/// `p[i] ↦ q[f[i]]`; the witness is deterministic for fixed inputs.
pub fn poset_isomorphic<A, B>(p: &FinitePoset<A>, q: &FinitePoset<B>) -> Option<Vec<usize>> {
    if p.len() != q.len() || p.covers().len() != q.covers().len() {
        return None;
    }
    let (cp, cq) = refine(p, q);
    let mut hist_p = cp.clone();
    let mut hist_q = cq.clone();
    hist_p.sort_unstable();
    hist_q.sort_unstable();
    if hist_p != hist_q {
        return None;
    }
    let mut class_size: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in &cp {
        *class_size.entry(c).or_default() += 1;
    }
    // Singleton classes first, then grow along covers so each new element is constrained.
    let mut order: Vec<usize> = Vec::with_capacity(p.len());
    let mut placed = vec![false; p.len()];
    let mut seeds: Vec<usize> = (0..p.len()).collect();
    seeds.sort_by_key(|&i| (class_size[&cp[i]], i));
    for s in seeds {
        if placed[s] {
            continue;
        }
        let mut queue = std::collections::VecDeque::from([s]);
        placed[s] = true;
        while let Some(x) = queue.pop_front() {
            order.push(x);
            let mut nbrs: Vec<usize> = p.lower_covers(x).iter().chain(p.upper_covers(x)).copied().collect();
            nbrs.sort_by_key(|&i| (class_size[&cp[i]], i));
            for y in nbrs {
                if !placed[y] {
                    placed[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    let mut by_class: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (j, &c) in cq.iter().enumerate() {
        by_class.entry(c).or_default().push(j);
    }
    let mut f = vec![usize::MAX; p.len()];
    let mut used = vec![false; q.len()];
    if assign(0, &order, p, q, &cp, &by_class, &mut f, &mut used) {
        Some(f)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn assign<A, B>(
    depth: usize,
    order: &[usize],
    p: &FinitePoset<A>,
    q: &FinitePoset<B>,
    cp: &[usize],
    by_class: &BTreeMap<usize, Vec<usize>>,
    f: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&x) = order.get(depth) else {
        return true;
    };
    for &y in &by_class[&cp[x]] {
        if used[y] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&a| {
            let b = f[a];
            p.leq(x, a) == q.leq(y, b) && p.leq(a, x) == q.leq(b, y)
        });
        if !consistent {
            continue;
        }
        f[x] = y;
        used[y] = true;
        if assign(depth + 1, order, p, q, cp, by_class, f, used) {
            return true;
        }
        used[y] = false;
        f[x] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::super::tests::{antichain, boolean, chain};
    use super::*;

    fn check_witness<A, B>(p: &FinitePoset<A>, q: &FinitePoset<B>, f: &[usize]) {
        for i in 0..p.len() {
            for j in 0..p.len() {
                assert_eq!(p.leq(i, j), q.leq(f[i], f[j]));
            }
        }
    }

    #[test]
    fn identity_and_non_isomorphic() {
        let b = boolean(3);
        let f = poset_isomorphic(&b, &b).unwrap();
        check_witness(&b, &b, &f);
        assert!(poset_isomorphic(&chain(3), &antichain(3)).is_none());
        assert!(poset_isomorphic(&chain(3), &chain(4)).is_none());
    }

    #[test]
    fn relabelled_copy() {
        let b = boolean(4);
        let flipped = FinitePoset::from_relation((0..16u32).collect(), |a, b| (a ^ 5) & !(b ^ 5) == 0).unwrap();
        let f = poset_isomorphic(&b, &flipped).unwrap();
        check_witness(&b, &flipped, &f);
    }
}

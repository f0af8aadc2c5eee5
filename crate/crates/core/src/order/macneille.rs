use std::collections::HashSet;

use super::FinitePoset;
use crate::bits::BitRow;
use crate::error::Result;

/// Completion by cuts: every element is a down-closed set of the original poset.
#[derive(Clone, Debug)]
pub struct MacNeille {
    pub lattice: FinitePoset<BitRow>,
    /// `embedding[i]` is the index in `lattice` of the principal ideal of element `i`.
    pub embedding: Vec<usize>,
}

/// The cuts are exactly the intersections of families of principal ideals, the empty
/// family giving the whole poset.
pub fn macneille_completion<K>(p: &FinitePoset<K>) -> Result<MacNeille> {
    let n = p.len();
    let mut cuts: Vec<BitRow> = vec![BitRow::full(n)];
    let mut seen: HashSet<BitRow> = cuts.iter().cloned().collect();
    for x in 0..n {
        let current = cuts.len();
        for c in 0..current {
            let s = cuts[c].and(p.down_row(x));
            if seen.insert(s.clone()) {
                cuts.push(s);
            }
        }
    }
    let lattice = FinitePoset::from_relation(cuts, |a, b| a.is_subset(b))?;
    let embedding = (0..n).map(|x| lattice.index_of(p.down_row(x)).expect("principal ideals are cuts")).collect();
    Ok(MacNeille { lattice, embedding })
}

#[cfg(test)]
mod tests {
    use super::super::tests::{antichain, boolean, chain};
    use super::super::{poset_isomorphic, FinitePoset};
    use super::*;

    #[test]
    fn chain_is_complete() {
        let c = chain(4);
        let m = macneille_completion(&c).unwrap();
        assert_eq!(m.lattice.len(), 4);
        assert_eq!(m.embedding, vec![0, 1, 2, 3]);
    }

    #[test]
    fn antichain_gains_bounds() {
        let m = macneille_completion(&antichain(2)).unwrap();
        assert_eq!(m.lattice.len(), 4);
        assert!(m.lattice.is_lattice());
    }

    #[test]
    fn lattice_is_its_own_completion() {
        let b = boolean(3);
        let m = macneille_completion(&b).unwrap();
        assert!(poset_isomorphic(&m.lattice, &b).is_some());
    }

    #[test]
    fn irreducibles_generate_completion() {
        let b = boolean(3);
        let mut keep: Vec<usize> = b.join_irreducibles();
        keep.extend(b.meet_irreducibles());
        keep.sort_unstable();
        keep.dedup();
        let sub = b.subposet(&keep);
        let m = macneille_completion(&sub).unwrap();
        assert!(poset_isomorphic(&m.lattice, &b).is_some());
    }

    #[test]
    fn embedding_preserves_and_reflects() {
        let p = FinitePoset::from_relation(vec![0usize, 1, 2, 3], |a, b| a == b || (*a < 2 && *b >= 2)).unwrap();
        let m = macneille_completion(&p).unwrap();
        assert_eq!(m.lattice.len(), 7);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(p.leq(i, j), m.lattice.leq(m.embedding[i], m.embedding[j]));
            }
        }
    }
}

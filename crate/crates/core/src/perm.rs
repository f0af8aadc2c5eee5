//! Permutations of `[n]` in one-line notation.

use crate::bits::Vertex;

/// `π` as the word `π(1) π(2) ... π(n)`.
pub type Permutation = Vec<Vertex>;

/// Advance to the next permutation in lexicographic order; false after the last one.
pub fn next_permutation(p: &mut [Vertex]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let Some(i) = (0..p.len() - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..p.len()).rev().find(|&j| p[j] > p[i]).unwrap();
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// All permutations of `[n]` in lexicographic order.
pub fn permutations(n: usize) -> impl Iterator<Item = Permutation> {
    let mut cur: Option<Permutation> = Some((1..=n).collect());
    std::iter::from_fn(move || {
        let out = cur.take()?;
        let mut next = out.clone();
        if next_permutation(&mut next) {
            cur = Some(next);
        }
        Some(out)
    })
}

/// `positions[v]` is the index of `v` in the word (`π⁻¹(v) - 1`); slot 0 unused.
pub fn positions(p: &[Vertex]) -> Vec<usize> {
    let mut pos = vec![0; p.len() + 1];
    for (i, &v) in p.iter().enumerate() {
        pos[v] = i;
    }
    pos
}

/// Parse a word such as `"314625"` (single-digit entries only).
pub fn parse_word(s: &str) -> Option<Permutation> {
    let p: Permutation = s.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect::<Option<_>>()?;
    let mut sorted = p.clone();
    sorted.sort_unstable();
    (sorted == (1..=p.len()).collect::<Vec<_>>()).then_some(p)
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerates_all() {
        assert_eq!(permutations(0).count(), 1);
        assert_eq!(permutations(4).count(), 24);
        let all: Vec<_> = permutations(3).collect();
        assert_eq!(all[1], vec![1, 3, 2]);
        assert_eq!(all[5], vec![3, 2, 1]);
    }

    #[test]
    fn words() {
        assert_eq!(parse_word("314625"), Some(vec![3, 1, 4, 6, 2, 5]));
        assert_eq!(parse_word("112"), None);
        assert_eq!(positions(&[3, 1, 2])[3], 0);
    }
}

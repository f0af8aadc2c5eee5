//! Counting ornamentations of brooms and combs.

pub mod comb;
pub mod series;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::digraph::path_hypergraph;
use crate::error::{Error, Result};
use crate::fixtures::{broom, comb as comb_graph};
use crate::reorient::{Ambient, MAX_SUBSET_EDGES};
use crate::sourcing::sourcing_count;
use series::Series;

pub use comb::{comb_bijections, BijectionReport};

/// Truncation orders above this are refused by the series checks.
pub const MAX_SERIES_ORDER: usize = 64;

pub fn catalan(n: usize) -> BigInt {
    binomial(BigInt::from(2 * n), BigInt::from(n)) / BigInt::from(n + 1)
}

/// `(2k-1)!! = (2k)! / (2^k k!)`.
pub fn odd_double_factorial(k: usize) -> BigInt {
    let fact = |n: usize| (1..=n).fold(BigInt::one(), |a, i| a * i);
    fact(2 * k) / (BigInt::one() << k) / fact(k)
}

/// `B[m][n]` for `m ≤ max_m`, `n ≤ max_n`, by the recurrence over the largest ornament
/// holding a bristle.
pub fn broom_table(max_m: usize, max_n: usize) -> Vec<Vec<BigInt>> {
    let cat: Vec<BigInt> = (0..=max_n).map(catalan).collect();
    let mut b = vec![vec![BigInt::zero(); max_n + 1]; max_m + 1];
    for n in 0..=max_n {
        for m in 0..=max_m {
            if n == 0 {
                b[m][0] = BigInt::one();
                continue;
            }
            let mut s = BigInt::zero();
            for k in 0..=m {
                let choose = binomial(BigInt::from(m), BigInt::from(k));
                for l in 1..=n {
                    s += &choose * &cat[n - l] * &b[k][l - 1];
                }
            }
            b[m][n] = s;
        }
    }
    b
}

pub fn broom_count(m: usize, n: usize) -> BigInt {
    broom_table(m, n)[m][n].clone()
}

/// `E_n = (2n+1)!! − Σ_{k=1}^n (2k−1)!! E_{n−k}`.
pub fn comb_counts(max_n: usize) -> Vec<BigInt> {
    let mut e: Vec<BigInt> = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        let mut v = odd_double_factorial(n + 1);
        for k in 1..=n {
            v -= odd_double_factorial(k) * &e[n - k];
        }
        e.push(v);
    }
    e
}

pub fn comb_count(n: usize) -> BigInt {
    comb_counts(n).pop().unwrap()
}

#[derive(Clone, Debug, Serialize)]
pub struct SeriesReport {
    pub order_x: usize,
    pub order_y: usize,
    pub coefficients_checked: usize,
    pub failures: Vec<String>,
}

impl SeriesReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn catalan_series(order: usize) -> Series {
    Series::from_coeffs(order, (0..order).map(catalan))
}

/// `B_m(y)` for `m ≤ max_m`, solving `B_m (1 − yC) = 1 + yC Σ_{k<m} binom(m,k) B_k`.
pub fn broom_series_from_equation(max_m: usize, order: usize) -> Vec<Series> {
    let yc = catalan_series(order).shift();
    let denom = &Series::one(order) - &yc;
    let mut out: Vec<Series> = Vec::new();
    for m in 0..=max_m {
        let mut sum = Series::zero(order);
        for (k, bk) in out.iter().enumerate() {
            sum = &sum + &bk.scale(&binomial(BigInt::from(m), BigInt::from(k)));
        }
        let num = &Series::one(order) + &(&yc * &sum);
        out.push(num.div(&denom).expect("1 − yC has constant term 1"));
    }
    out
}

/// Checks, up to `x^order_x` and `y^order_y`, that the series from the functional equation
/// match the recurrence, that `B(x,y)(1 − e^x yC) = e^x`, the signed-binomial identity
/// `yB_mC = Σ (−1)^{m−k} binom(m,k) (B_k − 1)` (and without the `− 1` for `m ≥ 1`), and
/// `B_2 = C³(1 + yC)`.
pub fn broom_series_checks(order_x: usize, order_y: usize) -> Result<SeriesReport> {
    if order_x > MAX_SERIES_ORDER || order_y > MAX_SERIES_ORDER {
        return Err(Error::SizeLimit { what: "series truncation order", bound: MAX_SERIES_ORDER as u64 });
    }
    let order = order_y + 1;
    let table = broom_table(order_x.max(2), order_y);
    let rec: Vec<Series> = table.iter().map(|row| Series::from_coeffs(order, row.iter().cloned())).collect();
    let from_eq = broom_series_from_equation(order_x.max(2), order);
    let c = catalan_series(order);
    let yc = c.shift();
    let mut failures = Vec::new();
    let mut checked = 0;
    let mut compare = |what: String, a: &Series, b: &Series| {
        for k in 0..order {
            checked += 1;
            if a.coeff(k) != b.coeff(k) {
                failures.push(format!("{what}: coefficient of y^{k} is {} vs {}", a.coeff(k), b.coeff(k)));
            }
        }
    };
    for m in 0..=order_x {
        compare(format!("B_{m} equation vs recurrence"), &from_eq[m], &rec[m]);
        // x^m/m! coefficient of B(x,y)(1 − e^x yC) is B_m − yC Σ_k binom(m,k) B_k.
        let mut conv = Series::zero(order);
        for k in 0..=m {
            conv = &conv + &rec[k].scale(&binomial(BigInt::from(m), BigInt::from(k)));
        }
        compare(format!("generating function at x^{m}"), &(&rec[m] - &(&yc * &conv)), &Series::one(order));
        let mut signed = Series::zero(order);
        let mut signed_shifted = Series::zero(order);
        for k in 0..=m {
            let coef = binomial(BigInt::from(m), BigInt::from(k)) * if (m - k) % 2 == 0 { 1 } else { -1 };
            signed = &signed + &rec[k].scale(&coef);
            signed_shifted = &signed_shifted + &(&rec[k] - &Series::one(order)).scale(&coef);
        }
        let lhs = &yc * &rec[m];
        compare(format!("signed binomial identity with B_k - 1 at m={m}"), &lhs, &signed_shifted);
        // The alternating sum of binomials vanishes only for m ≥ 1, so the constant terms
        // can be dropped only there.
        if m >= 1 {
            compare(format!("signed binomial identity at m={m}"), &lhs, &signed);
        }
    }
    let b2 = &c.pow(3) * &(&Series::one(order) + &yc);
    compare("B_2 = C^3(1 + yC)".into(), &b2, &rec[2]);
    Ok(SeriesReport { order_x, order_y, coefficients_checked: checked, failures })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Family {
    Broom { m: usize, n: usize },
    Comb { n: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosedFormReport {
    pub family: Family,
    pub reorientations: (String, String),
    pub acyclic_reorientations: (String, String),
    pub sourcings: (String, String),
}

impl ClosedFormReport {
    pub fn passed(&self) -> bool {
        self.reorientations.0 == self.reorientations.1
            && self.acyclic_reorientations.0 == self.acyclic_reorientations.1
            && self.sourcings.0 == self.sourcings.1
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, i| a * i)
}

/// Compares the closed forms `(formula, brute force)` for the numbers of reorientations,
/// acyclic reorientations and sourcings of the family member.
pub fn closed_form_counts(family: Family) -> Result<ClosedFormReport> {
    let (t, reo, acyc, sour) = match family {
        Family::Broom { m, n } => {
            let prod: BigInt = (1..=n).fold(BigInt::one(), |a, k| a * BigInt::from(k).pow((n + 1 - k) as u32));
            (
                broom(m, n),
                BigInt::one() << (n * (2 * m + n).saturating_sub(1) / 2),
                factorial(n) * BigInt::from(n + 1).pow(m as u32),
                factorial(n + 1).pow(m as u32) * prod,
            )
        }
        Family::Comb { n } => {
            let prod: BigInt =
                (1..=n).fold(BigInt::one(), |a, k| a * BigInt::from(k).pow((n + 1 - k) as u32) * factorial(k + 1));
            (comb_graph(n), BigInt::one() << (n * n), factorial(n) * factorial(n + 1), prod)
        }
    };
    let amb = Ambient::of(&t)?;
    if amb.edge_count() > MAX_SUBSET_EDGES {
        return Err(Error::SizeLimit { what: "closed-form brute force edges", bound: MAX_SUBSET_EDGES as u64 });
    }
    let brute_acyclic = amb.acyclic_masks()?.len();
    Ok(ClosedFormReport {
        family,
        reorientations: (reo.to_string(), (BigInt::one() << amb.edge_count()).to_string()),
        acyclic_reorientations: (acyc.to_string(), brute_acyclic.to_string()),
        sourcings: (sour.to_string(), sourcing_count(&path_hypergraph(&t)).to_string()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::delete_vertex;
    use crate::ornament::enumerate_ornamentations;

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|x| x.try_into().unwrap()).collect()
    }

    #[test]
    fn recurrences() {
        let t = broom_table(4, 8);
        assert_eq!(ints(&t[0]), vec![1, 1, 2, 5, 14, 42, 132, 429, 1430]);
        assert_eq!(t[2][3], BigInt::from(42));
        assert_eq!(t[4][4], BigInt::from(1878));
        assert!(t.iter().all(|row| row[0].is_one()));
        assert_eq!(ints(&comb_counts(5)), vec![1, 2, 10, 74, 706, 8162]);
        assert_eq!(odd_double_factorial(3), BigInt::from(15));
    }

    #[test]
    fn brute_force_counts() {
        for m in 0..=3 {
            for n in 0..=4 {
                let brute = enumerate_ornamentations(&broom(m, n)).unwrap().len();
                assert_eq!(BigInt::from(brute), broom_count(m, n), "broom({m},{n})");
            }
        }
        for n in 0..=3 {
            assert_eq!(BigInt::from(enumerate_ornamentations(&comb_graph(n)).unwrap().len()), comb_count(n));
        }
    }

    #[test]
    fn comb_without_first_tooth() {
        let counts: Vec<usize> =
            (1..=4).map(|n| enumerate_ornamentations(&delete_vertex(&comb_graph(n), 1)).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 4, 26, 226]);
    }

    #[test]
    fn series() {
        let c = catalan_series(6);
        assert_eq!(ints(c.coeffs()), vec![1, 1, 2, 5, 14, 42]);
        let eq = broom_series_from_equation(2, 5);
        assert_eq!(ints(eq[1].coeffs()), vec![1, 2, 5, 14, 42]);
        assert_eq!(ints(eq[2].coeffs()), vec![1, 4, 13, 42, 138]);
        let r = broom_series_checks(6, 8).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert!(broom_series_checks(MAX_SERIES_ORDER + 1, 2).is_err());
        let b0 = &catalan_series(9);
        assert_ne!(&b0.shift() * b0, b0.clone());
        assert_eq!(&b0.shift() * b0, b0 - &Series::one(9));
    }

    #[test]
    fn closed_forms() {
        let r = closed_form_counts(Family::Broom { m: 2, n: 2 }).unwrap();
        assert_eq!(r.reorientations.0, "32");
        assert_eq!(r.acyclic_reorientations.0, "18");
        assert!(r.passed());
        let r = closed_form_counts(Family::Comb { n: 2 }).unwrap();
        assert_eq!(r.sourcings.0, "24");
        assert!(r.passed());
    }
}

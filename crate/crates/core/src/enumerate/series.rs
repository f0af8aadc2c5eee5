//! Truncated power series in one variable with big-integer coefficients.

use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `Σ a_k y^k` for `k < order`; arithmetic drops every term of degree `≥ order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<BigInt>,
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![BigInt::zero(); order] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, BigInt::one())
    }

    pub fn constant(order: usize, c: BigInt) -> Self {
        let mut s = Self::zero(order);
        if order > 0 {
            s.coeffs[0] = c;
        }
        s
    }

    /// Truncates or zero-pads `coeffs` to `order` terms.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = BigInt>) -> Self {
        let mut v: Vec<BigInt> = coeffs.into_iter().take(order).collect();
        v.resize(order, BigInt::zero());
        Series { coeffs: v }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Multiplication by `y`.
    pub fn shift(&self) -> Self {
        let order = self.order();
        Self::from_coeffs(order, std::iter::once(BigInt::zero()).chain(self.coeffs.iter().cloned()))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Series { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// `self / other`, requiring `other` to have constant term `±1`.
    pub fn div(&self, other: &Self) -> Option<Self> {
        let order = self.order().min(other.order());
        let c0 = other.coeffs.first()?;
        if !(c0.is_one() || (-c0).is_one()) {
            return None;
        }
        let mut q = vec![BigInt::zero(); order];
        for k in 0..order {
            let mut r = self.coeffs[k].clone();
            for j in 1..=k {
                r -= &other.coeffs[j] * &q[k - j];
            }
            q[k] = r * c0;
        }
        Some(Series { coeffs: q })
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.order()), |acc, _| &acc * self)
    }
}

impl Add for &Series {
    type Output = Series;

    fn add(self, o: &Series) -> Series {
        let order = self.order().min(o.order());
        Series { coeffs: (0..order).map(|k| &self.coeffs[k] + &o.coeffs[k]).collect() }
    }
}

impl Sub for &Series {
    type Output = Series;

    fn sub(self, o: &Series) -> Series {
        let order = self.order().min(o.order());
        Series { coeffs: (0..order).map(|k| &self.coeffs[k] - &o.coeffs[k]).collect() }
    }
}

impl Mul for &Series {
    type Output = Series;

    fn mul(self, o: &Series) -> Series {
        let order = self.order().min(o.order());
        let mut c = vec![BigInt::zero(); order];
        for (i, a) in self.coeffs.iter().enumerate().take(order) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(order - i) {
                c[i + j] += a * b;
            }
        }
        Series { coeffs: c }
    }
}

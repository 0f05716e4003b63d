//! Rational generating functions for coefficient statistics of
//! `s_(d,d) ∗ s_(d+k,d-k)`, and bounded-height tableau counts.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::closed_forms::{coeff_two_row, product_two_row};
use crate::error::{KronError, Result};
use crate::partition::{partitions_of, Partition};
use crate::symmetric::{kron_oracle, kron_vectors, pieri_mult_row, syt_count, SchurVector};

/// Dense polynomial in `q` with exact integer coefficients, lowest degree
/// first and no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly(Vec<BigInt>);

impl Poly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = Poly(coeffs);
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c q^e`.
    pub fn monomial(c: i64, e: usize) -> Self {
        let mut v = vec![BigInt::zero(); e + 1];
        v[e] = BigInt::from(c);
        Self::new(v)
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.0.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        Poly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        Poly::new(self.0.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    /// Multiplication by `q^e`.
    pub fn shift(&self, e: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![BigInt::zero(); e];
        v.extend(self.0.iter().cloned());
        Poly(v)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.0.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{mag}q^{e}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `numerator / denominator`, never reduced; equality is tested by
/// cross-multiplication.
#[derive(Clone, Debug)]
pub struct RationalGF {
    numerator: Poly,
    denominator: Poly,
}

impl RationalGF {
    /// Fails when the denominator has a zero constant term.
    pub fn new(numerator: Poly, denominator: Poly) -> Result<Self> {
        if denominator.coeff(0).is_zero() {
            return Err(KronError::NonUnitConstantTerm("0".into()));
        }
        Ok(RationalGF {
            numerator,
            denominator,
        })
    }

    pub fn zero() -> Self {
        RationalGF {
            numerator: Poly::zero(),
            denominator: Poly::one(),
        }
    }

    pub fn numerator(&self) -> &Poly {
        &self.numerator
    }

    pub fn denominator(&self) -> &Poly {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn add(&self, other: &RationalGF) -> RationalGF {
        if self.denominator == other.denominator {
            return RationalGF {
                numerator: self.numerator.add(&other.numerator),
                denominator: self.denominator.clone(),
            };
        }
        RationalGF {
            numerator: self
                .numerator
                .mul(&other.denominator)
                .add(&other.numerator.mul(&self.denominator)),
            denominator: self.denominator.mul(&other.denominator),
        }
    }

    pub fn scale(&self, c: i64) -> RationalGF {
        RationalGF {
            numerator: self.numerator.scale(&BigInt::from(c)),
            denominator: self.denominator.clone(),
        }
    }

    /// Multiplication by `q^e`.
    pub fn shift(&self, e: usize) -> RationalGF {
        RationalGF {
            numerator: self.numerator.shift(e),
            denominator: self.denominator.clone(),
        }
    }

    /// Equality as rational functions.
    pub fn same_function(&self, other: &RationalGF) -> bool {
        self.numerator.mul(&other.denominator) == other.numerator.mul(&self.denominator)
    }

    /// Taylor coefficients of `q^0..=q^order`.
    pub fn series(&self, order: usize) -> Result<Vec<BigInt>> {
        let lead = self.denominator.coeff(0);
        if !lead.abs().is_one() {
            return Err(KronError::NonUnitConstantTerm(lead.to_string()));
        }
        let mut out: Vec<BigInt> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.numerator.coeff(n);
            for (i, b) in self.denominator.coeffs().iter().enumerate().skip(1) {
                if i > n {
                    break;
                }
                acc -= b * &out[n - i];
            }
            out.push(acc * &lead);
        }
        Ok(out)
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

/// `(1-q)(1-q^2)^2(1-q^3)`.
pub fn common_denominator() -> Poly {
    let one_minus = |e: usize| Poly::one().sub(&Poly::monomial(1, e));
    one_minus(1)
        .mul(&one_minus(2))
        .mul(&one_minus(2))
        .mul(&one_minus(3))
}

fn g_signed(k: i64) -> RationalGF {
    if k < 0 {
        return RationalGF::zero();
    }
    let k = k as usize;
    let numerator = if k == 0 {
        Poly::one()
    } else {
        let mut num = Poly::monomial(1, k)
            .add(&Poly::monomial(1, k + 1))
            .add(&Poly::monomial(1, 2 * k + 1));
        for r in k + 2..=2 * k {
            num = num.add(&Poly::monomial(2, r));
        }
        num
    };
    RationalGF {
        numerator,
        denominator: common_denominator(),
    }
}

/// `G_k(q) = Σ_d (Σ_λ ⟨s_(d,d) ∗ s_(d+k,d-k), s_λ⟩) q^d`.
pub fn g_k(k: usize) -> RationalGF {
    g_signed(k as i64)
}

/// `L_{k,r}(q) = Σ_d #{λ ⊢ 2d : ⟨s_(d,d) ∗ s_(d+k,d-k), s_λ⟩ = r} q^d`.
pub fn l_kr(k: usize, r: usize) -> Result<RationalGF> {
    if r == 0 {
        return Err(KronError::BadR(0));
    }
    if r > k / 2 + 1 {
        return Ok(RationalGF::zero());
    }
    let base = k as i64 - 2 * r as i64 + 2;
    let l1 = g_signed(base)
        .add(&g_signed(base - 2).shift(6).scale(-2))
        .add(&g_signed(base - 4).shift(12));
    Ok(l1.shift(6 * r - 6))
}

/// `Σ_r r · L_{k,r}(q)`; equal to `G_k(q)` as a rational function.
pub fn weighted_l_sum(k: usize) -> Result<RationalGF> {
    let mut acc = RationalGF::zero();
    for r in 1..=k / 2 + 1 {
        acc = acc.add(&l_kr(k, r)?.scale(r as i64));
    }
    Ok(acc)
}

/// Sum of all coefficients of `s_(d,d) ∗ s_(d+k,d-k)`, computed directly.
pub fn coefficient_sum(d: usize, k: usize) -> Result<BigInt> {
    Ok(product_two_row(d, k)?.coeff_sum())
}

/// For each `r >= 1`, the number of `λ ⊢ 2d` with coefficient exactly `r`.
pub fn count_by_coefficient(d: usize, k: usize) -> Result<BTreeMap<u64, u64>> {
    let mut counts = BTreeMap::new();
    for lambda in partitions_of(2 * d, Some(4)) {
        let c = coeff_two_row(d, k, &lambda)?;
        if c > 0 {
            *counts.entry(c).or_insert(0) += 1;
        }
    }
    Ok(counts)
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

pub fn catalan(n: usize) -> BigInt {
    binomial(2 * n, n) / (n + 1)
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Closed-form count of standard tableaux with `n` cells and at most `h`
/// rows, `h ∈ {2, 3, 4, 5}`.
pub fn y_height(n: usize, h: usize) -> Result<BigInt> {
    let value = match h {
        2 => binomial(n, n / 2),
        3 => (0..=n / 2).map(|d| binomial(n, 2 * d) * catalan(d)).sum(),
        4 => catalan(n.div_ceil(2)) * catalan((n + 2) / 2),
        5 => (0..=n / 2)
            .map(|d| {
                let num = BigInt::from(6) * factorial(2 * d + 2) * catalan(d);
                let den = factorial(d + 2) * factorial(d + 3);
                binomial(n, 2 * d) * (num / den)
            })
            .sum(),
        _ => return Err(KronError::BadHeight(h)),
    };
    Ok(value)
}

/// `Σ_{λ ⊢ n, ℓ(λ) <= h} f^λ` by enumeration.
pub fn syt_count_bounded(n: usize, h: usize) -> BigInt {
    partitions_of(n, Some(h)).iter().map(syt_count).sum()
}

/// Both sides of the bounded-length Schur identity for `(n, h)`: the rug
/// `Σ_{λ ⊢ n, ℓ(λ) <= h} s_λ` and its product expression.
pub fn bounded_sum_sides(n: usize, h: usize) -> Result<(SchurVector, SchurVector)> {
    let lhs = SchurVector::rug(n, partitions_of(n, Some(h)).iter());
    let row = |shape: Partition, r: usize| pieri_mult_row(&SchurVector::basis(&shape), r);
    let rhs = match h {
        2 => row(Partition::one_row(n / 2), n.div_ceil(2)),
        3 => (0..=n / 2).fold(SchurVector::zero(n), |acc, d| {
            &acc + &row(Partition::two_row(d, d), n - 2 * d)
        }),
        4 if n.is_multiple_of(2) => {
            let d = n / 2;
            let square = SchurVector::basis(&Partition::two_row(d, d));
            let partner =
                &square + &SchurVector::basis(&Partition::two_row(d + 1, d.saturating_sub(1)));
            kron_vectors(&square, &partner)?
        }
        4 => {
            let d = n.div_ceil(2);
            let shape = Partition::two_row(d, d - 1);
            kron_oracle(&shape, &shape)?
        }
        5 => {
            let mut acc = SchurVector::zero(n);
            for d in 0..=n / 2 {
                for r in 0..=(n - 2 * d) / 4 {
                    let shape = Partition::new(vec![d + r, d + r, r, r]);
                    acc = &acc + &row(shape, n - 2 * d - 4 * r);
                }
            }
            acc
        }
        _ => return Err(KronError::BadHeight(h)),
    };
    Ok((lhs, rhs))
}

pub fn bounded_sum_identity_check(n: usize, h: usize) -> Result<bool> {
    let (lhs, rhs) = bounded_sum_sides(n, h)?;
    Ok(lhs == rhs)
}

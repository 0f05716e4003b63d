//! Exact symmetric-function arithmetic in the Schur basis and the
//! character-theoretic Kronecker oracle
//!
//! ```text
//! g_{μνλ} = Σ_ρ χ^μ_ρ χ^ν_ρ χ^λ_ρ / z_ρ
//! ```
//!
//! Characters come from the Murnaghan–Nakayama rule, memoized in a
//! [`CharacterCache`] shared by every oracle call.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use parking_lot::RwLock;

use crate::error::{KronError, Result};
use crate::partition::{partitions_of, Partition};

/// Sparse integer combination of Schur functions of a single degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurVector {
    degree: usize,
    coeffs: BTreeMap<Partition, BigInt>,
}

impl SchurVector {
    pub fn zero(degree: usize) -> Self {
        SchurVector {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// The single Schur function `s_λ`.
    pub fn basis(lambda: &Partition) -> Self {
        let mut v = Self::zero(lambda.degree());
        v.add_term(lambda, BigInt::one());
        v
    }

    /// The rug `Σ_{λ ∈ X} s_λ`.
    pub fn rug<'a>(degree: usize, shapes: impl IntoIterator<Item = &'a Partition>) -> Self {
        let mut v = Self::zero(degree);
        for lambda in shapes {
            v.add_term(lambda, BigInt::one());
        }
        v
    }

    /// Panics if `lambda` has the wrong degree.
    pub fn add_term(&mut self, lambda: &Partition, c: impl Into<BigInt>) {
        assert_eq!(
            lambda.degree(),
            self.degree,
            "term {lambda} does not have degree {}",
            self.degree
        );
        let c = c.into();
        if c.is_zero() {
            return;
        }
        let entry = self
            .coeffs
            .entry(lambda.clone())
            .or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(lambda);
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.coeffs
            .get(lambda)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Non-zero terms in decreasing lexicographic order of the partition.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.coeffs.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.degree);
        for (lambda, x) in &self.coeffs {
            out.add_term(lambda, x * c);
        }
        out
    }

    pub fn max_coeff(&self) -> BigInt {
        self.coeffs
            .values()
            .max()
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// Every coefficient is 0 or 1.
    pub fn is_multiplicity_free(&self) -> bool {
        self.coeffs.values().all(|c| c.is_one())
    }

    /// Sum of all coefficients.
    pub fn coeff_sum(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    fn combine(&self, other: &SchurVector, sign: i32) -> SchurVector {
        let degree = match (self.is_zero(), other.is_zero()) {
            (true, _) => other.degree,
            (_, true) => self.degree,
            _ => {
                assert_eq!(
                    self.degree, other.degree,
                    "adding Schur vectors of different degree"
                );
                self.degree
            }
        };
        let mut out = SchurVector {
            degree,
            coeffs: self.coeffs.clone(),
        };
        for (lambda, c) in &other.coeffs {
            out.add_term(lambda, c * sign);
        }
        out
    }
}

impl Add for &SchurVector {
    type Output = SchurVector;
    fn add(self, rhs: &SchurVector) -> SchurVector {
        self.combine(rhs, 1)
    }
}

impl Sub for &SchurVector {
    type Output = SchurVector;
    fn sub(self, rhs: &SchurVector) -> SchurVector {
        self.combine(rhs, -1)
    }
}

impl Neg for &SchurVector {
    type Output = SchurVector;
    fn neg(self) -> SchurVector {
        self.scale(&BigInt::from(-1))
    }
}

impl fmt::Display for SchurVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (lambda, c)) in self.terms().enumerate() {
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            match (i, sign) {
                (0, "+") => {}
                (0, _) => f.write_str("-")?,
                _ => write!(f, " {sign} ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag} ")?;
            }
            write!(f, "s{lambda}")?;
        }
        Ok(())
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `z_λ = Π_i i^{n_i} n_i!`, the centralizer order of a permutation of
/// cycle type `λ`.
pub fn z_value(lambda: &Partition) -> BigInt {
    lambda
        .multiplicities()
        .iter()
        .enumerate()
        .fold(BigInt::one(), |acc, (i, &m)| {
            acc * BigInt::from(i + 1).pow(m as u32) * factorial(m)
        })
}

/// Number of standard Young tableaux of shape `λ` by the hook length formula.
pub fn syt_count(lambda: &Partition) -> BigInt {
    let hooks = lambda
        .hook_lengths()
        .into_iter()
        .fold(BigInt::one(), |acc, h| acc * h);
    factorial(lambda.degree()) / hooks
}

/// Partitions obtained from `lambda` by removing a border strip of size `r`,
/// with the sign `(-1)^{height}` of the strip.
fn remove_border_strips(lambda: &Partition, r: usize) -> Vec<(Partition, bool)> {
    let len = lambda.len();
    // beta numbers: λ_i + (len - 1 - i), strictly decreasing
    let beta: Vec<usize> = (0..len).map(|i| lambda.part(i) + len - 1 - i).collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let height = beta.iter().filter(|&&c| c > target && c < b).count();
        let mut moved = beta.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|x, y| y.cmp(x));
        let parts = (0..len).map(|i| moved[i] - (len - 1 - i)).collect();
        out.push((Partition::new(parts), height % 2 == 1));
    }
    out
}

/// Dense character table of `S_n`, rows and columns in decreasing
/// lexicographic order.
#[derive(Debug)]
pub struct CharacterTable {
    n: usize,
    shapes: Vec<Partition>,
    index: HashMap<Partition, usize>,
    class_sizes: Vec<BigInt>,
    values: Vec<Vec<BigInt>>,
    n_factorial: BigInt,
}

impl CharacterTable {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.shapes
    }

    pub fn value(&self, lambda: &Partition, rho: &Partition) -> Option<&BigInt> {
        Some(&self.values[*self.index.get(lambda)?][*self.index.get(rho)?])
    }

    fn row(&self, lambda: &Partition) -> &[BigInt] {
        &self.values[self.index[lambda]]
    }

    /// `n! · g_{μνλ}` weights `|C_ρ| χ^μ_ρ χ^ν_ρ` for a fixed pair.
    fn pair_weights(&self, mu: &Partition, nu: &Partition) -> Vec<BigInt> {
        let (rm, rn) = (self.row(mu), self.row(nu));
        (0..self.shapes.len())
            .map(|j| &self.class_sizes[j] * &rm[j] * &rn[j])
            .collect()
    }

    fn coeff_from_weights(&self, weights: &[BigInt], lambda: &Partition) -> BigInt {
        let total: BigInt = weights
            .iter()
            .zip(self.row(lambda))
            .map(|(w, x)| w * x)
            .sum();
        debug_assert!((&total % &self.n_factorial).is_zero());
        total / &self.n_factorial
    }
}

/// Concurrent memo table for irreducible characters `χ^λ_ρ`.
///
/// Entries are written once and never evicted; concurrent writers insert
/// identical values for identical keys.
#[derive(Default)]
pub struct CharacterCache {
    values: RwLock<HashMap<(Partition, Partition), BigInt>>,
    tables: RwLock<HashMap<usize, Arc<CharacterTable>>>,
}

impl fmt::Debug for CharacterCache {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CharacterCache")
            .field("entries", &self.len())
            .finish()
    }
}

impl CharacterCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of memoized character values.
    pub fn len(&self) -> usize {
        self.values.read().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, lambda: &Partition, rho: &Partition) -> Option<BigInt> {
        self.values
            .read()
            .get(&(lambda.clone(), rho.clone()))
            .cloned()
    }

    /// Inserts a value without checking it. Existing entries are kept.
    pub fn insert(&self, lambda: Partition, rho: Partition, value: BigInt) {
        self.values.write().entry((lambda, rho)).or_insert(value);
    }

    /// All memoized values sorted by `(n, λ, ρ)`.
    pub fn entries(&self) -> Vec<(Partition, Partition, BigInt)> {
        let mut out: Vec<_> = self
            .values
            .read()
            .iter()
            .map(|((l, r), v)| (l.clone(), r.clone(), v.clone()))
            .collect();
        out.sort_by(|a, b| (a.0.degree(), &a.0, &a.1).cmp(&(b.0.degree(), &b.0, &b.1)));
        out
    }

    /// `χ^λ_ρ`.
    pub fn character(&self, lambda: &Partition, rho: &Partition) -> Result<BigInt> {
        check_degrees(lambda, rho)?;
        Ok(self.chi(lambda, rho))
    }

    fn chi(&self, lambda: &Partition, rho: &Partition) -> BigInt {
        if rho.is_empty() {
            return BigInt::one();
        }
        if let Some(v) = self.values.read().get(&(lambda.clone(), rho.clone())) {
            return v.clone();
        }
        // strip the largest part of ρ
        let r = rho.part(0);
        let rest = Partition::new(rho.parts()[1..].to_vec());
        let mut total = BigInt::zero();
        for (mu, negative) in remove_border_strips(lambda, r) {
            let x = self.chi(&mu, &rest);
            if negative {
                total -= x;
            } else {
                total += x;
            }
        }
        self.insert(lambda.clone(), rho.clone(), total.clone());
        total
    }

    /// The full character table of `S_n`, built once per `n`.
    pub fn table(&self, n: usize) -> Arc<CharacterTable> {
        if let Some(t) = self.tables.read().get(&n) {
            return Arc::clone(t);
        }
        let shapes = partitions_of(n, None);
        let compute_row = |lambda: &Partition| -> Vec<BigInt> {
            shapes.iter().map(|rho| self.chi(lambda, rho)).collect()
        };
        #[cfg(feature = "parallel")]
        let values: Vec<Vec<BigInt>> = {
            use rayon::prelude::*;
            shapes.par_iter().map(compute_row).collect()
        };
        #[cfg(not(feature = "parallel"))]
        let values: Vec<Vec<BigInt>> = shapes.iter().map(compute_row).collect();
        let n_factorial = factorial(n);
        let class_sizes = shapes
            .iter()
            .map(|rho| &n_factorial / z_value(rho))
            .collect();
        let index = shapes
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let table = Arc::new(CharacterTable {
            n,
            shapes,
            index,
            class_sizes,
            values,
            n_factorial,
        });
        self.tables.write().entry(n).or_insert(table).clone()
    }

    /// Full Schur expansion of `s_μ ∗ s_ν`.
    pub fn kron(&self, mu: &Partition, nu: &Partition) -> Result<SchurVector> {
        check_degrees(mu, nu)?;
        let table = self.table(mu.degree());
        let weights = table.pair_weights(mu, nu);
        let mut out = SchurVector::zero(mu.degree());
        for lambda in table.shapes() {
            out.add_term(lambda, table.coeff_from_weights(&weights, lambda));
        }
        Ok(out)
    }

    /// The Kronecker coefficient `g_{μνλ}`.
    pub fn kron_coeff(&self, mu: &Partition, nu: &Partition, lambda: &Partition) -> Result<BigInt> {
        check_degrees(mu, nu)?;
        check_degrees(mu, lambda)?;
        let table = self.table(mu.degree());
        let weights = table.pair_weights(mu, nu);
        Ok(table.coeff_from_weights(&weights, lambda))
    }
}

fn check_degrees(a: &Partition, b: &Partition) -> Result<()> {
    if a.degree() != b.degree() {
        return Err(KronError::DegreeMismatch {
            left: a.clone(),
            left_degree: a.degree(),
            right: b.clone(),
            right_degree: b.degree(),
        });
    }
    Ok(())
}

/// The process-wide character cache used by the free functions below.
pub fn global_cache() -> &'static CharacterCache {
    static CACHE: OnceLock<CharacterCache> = OnceLock::new();
    CACHE.get_or_init(CharacterCache::new)
}

/// `χ^λ_ρ` through the global cache.
pub fn character(lambda: &Partition, rho: &Partition) -> Result<BigInt> {
    global_cache().character(lambda, rho)
}

/// Brute-force `s_μ ∗ s_ν` through the global cache.
pub fn kron_oracle(mu: &Partition, nu: &Partition) -> Result<SchurVector> {
    global_cache().kron(mu, nu)
}

pub fn kron_coeff_oracle(mu: &Partition, nu: &Partition, lambda: &Partition) -> Result<BigInt> {
    global_cache().kron_coeff(mu, nu, lambda)
}

/// Kronecker product extended bilinearly to Schur vectors.
pub fn kron_vectors(f: &SchurVector, g: &SchurVector) -> Result<SchurVector> {
    let mut out = SchurVector::zero(f.degree());
    for (mu, a) in f.terms() {
        for (nu, b) in g.terms() {
            let prod = kron_oracle(mu, nu)?;
            out = &out + &prod.scale(&(a * b));
        }
    }
    Ok(out)
}

/// Shapes `μ ⊇ λ` with `μ/λ` a horizontal strip of size `r`.
fn horizontal_strips(lambda: &Partition, r: usize) -> Vec<Partition> {
    fn rec(
        lambda: &Partition,
        row: usize,
        left: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        let rows = lambda.len() + 1;
        if row == rows {
            if left == 0 {
                out.push(Partition::new(current.clone()));
            }
            return;
        }
        let base = lambda.part(row);
        let cap = if row == 0 {
            left
        } else {
            (lambda.part(row - 1) - base).min(left)
        };
        for add in 0..=cap {
            current.push(base + add);
            rec(lambda, row + 1, left - add, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda, 0, r, &mut Vec::new(), &mut out);
    out
}

/// `f · s_(r)` by the Pieri rule.
pub fn pieri_mult_row(f: &SchurVector, r: usize) -> SchurVector {
    let mut out = SchurVector::zero(f.degree() + r);
    for (lambda, c) in f.terms() {
        for mu in horizontal_strips(lambda, r) {
            out.add_term(&mu, c.clone());
        }
    }
    out
}

/// `f · s_(1^r)` by the dual Pieri rule (vertical strips).
pub fn pieri_mult_col(f: &SchurVector, r: usize) -> SchurVector {
    let mut out = SchurVector::zero(f.degree() + r);
    for (lambda, c) in f.terms() {
        for mu in horizontal_strips(&lambda.conjugate(), r) {
            out.add_term(&mu.conjugate(), c.clone());
        }
    }
    out
}

/// `s_(1)^⊥ f`: remove one corner box in every possible way.
pub fn perp_box(f: &SchurVector) -> SchurVector {
    let mut out = SchurVector::zero(f.degree().saturating_sub(1));
    for (lambda, c) in f.terms() {
        for i in 0..lambda.len() {
            if lambda.part(i) > lambda.part(i + 1) {
                let mut parts = lambda.parts().to_vec();
                parts[i] -= 1;
                out.add_term(&Partition::new(parts), c.clone());
            }
        }
    }
    out
}

/// `⟨f, g⟩` in the orthonormal Schur basis; 0 across different degrees.
pub fn scalar_product(f: &SchurVector, g: &SchurVector) -> BigInt {
    if f.degree() != g.degree() {
        return BigInt::zero();
    }
    f.terms().map(|(lambda, c)| c * g.coeff(lambda)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    fn vec_of(degree: usize, terms: &[(&[usize], i64)]) -> SchurVector {
        let mut v = SchurVector::zero(degree);
        for (l, c) in terms {
            v.add_term(&p(l), *c);
        }
        v
    }

    #[test]
    fn z_values() {
        assert_eq!(z_value(&p(&[1, 1, 1])), 6.into());
        assert_eq!(z_value(&p(&[2, 1])), 2.into());
        assert_eq!(z_value(&p(&[3])), 3.into());
        assert_eq!(z_value(&Partition::empty()), 1.into());
    }

    #[test]
    fn characters_small() {
        let c = CharacterCache::new();
        for rho in partitions_of(5, None) {
            assert_eq!(c.character(&p(&[5]), &rho).unwrap(), 1.into());
        }
        assert_eq!(c.character(&p(&[1, 1, 1]), &p(&[3])).unwrap(), 1.into());
        assert_eq!(
            c.character(&p(&[1, 1, 1]), &p(&[2, 1])).unwrap(),
            (-1).into()
        );
        assert_eq!(c.character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2.into());
        assert_eq!(c.character(&p(&[2, 1]), &p(&[3])).unwrap(), (-1).into());
        assert!(matches!(
            c.character(&p(&[2, 1]), &p(&[2])),
            Err(KronError::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn sign_character() {
        let c = CharacterCache::new();
        for rho in partitions_of(6, None) {
            let sign = if (6 - rho.len()) % 2 == 0 { 1 } else { -1 };
            assert_eq!(
                c.character(&Partition::one_column(6), &rho).unwrap(),
                sign.into()
            );
        }
    }

    #[test]
    fn syt_counts() {
        assert_eq!(syt_count(&p(&[3, 3])), 5.into());
        assert_eq!(syt_count(&p(&[7])), 1.into());
        assert_eq!(syt_count(&p(&[2, 2])), 2.into());
        assert_eq!(syt_count(&Partition::empty()), 1.into());
    }

    #[test]
    fn oracle_small_products() {
        assert_eq!(
            kron_oracle(&p(&[2, 1]), &p(&[2, 1])).unwrap(),
            vec_of(3, &[(&[3], 1), (&[2, 1], 1), (&[1, 1, 1], 1)])
        );
        let lam = p(&[3, 2, 1]);
        assert_eq!(
            kron_oracle(&p(&[6]), &lam).unwrap(),
            SchurVector::basis(&lam)
        );
        assert_eq!(
            kron_oracle(&Partition::one_column(6), &lam).unwrap(),
            SchurVector::basis(&lam.conjugate())
        );
        assert_eq!(
            kron_coeff_oracle(&p(&[2, 2]), &p(&[2, 2]), &p(&[4])).unwrap(),
            1.into()
        );
        assert_eq!(
            kron_coeff_oracle(&p(&[2, 2]), &p(&[2, 2]), &p(&[3, 1])).unwrap(),
            0.into()
        );
        assert_eq!(
            kron_coeff_oracle(&p(&[3, 3]), &p(&[6]), &p(&[3, 3])).unwrap(),
            1.into()
        );
        assert!(kron_oracle(&p(&[2]), &p(&[2, 1])).is_err());
    }

    #[test]
    fn pieri_rows() {
        assert_eq!(
            pieri_mult_row(&SchurVector::basis(&p(&[2, 1])), 1),
            vec_of(4, &[(&[3, 1], 1), (&[2, 2], 1), (&[2, 1, 1], 1)])
        );
        assert_eq!(
            pieri_mult_row(&SchurVector::basis(&Partition::empty()), 3),
            SchurVector::basis(&p(&[3]))
        );
        assert_eq!(
            pieri_mult_row(&SchurVector::basis(&p(&[2, 2])), 2),
            vec_of(6, &[(&[4, 2], 1), (&[3, 2, 1], 1), (&[2, 2, 2], 1)])
        );
    }

    #[test]
    fn pieri_columns() {
        assert_eq!(
            pieri_mult_col(&SchurVector::basis(&p(&[1])), 1),
            vec_of(2, &[(&[2], 1), (&[1, 1], 1)])
        );
        assert_eq!(
            pieri_mult_col(&SchurVector::basis(&p(&[2])), 2),
            vec_of(4, &[(&[3, 1], 1), (&[2, 1, 1], 1)])
        );
        assert_eq!(
            pieri_mult_col(&SchurVector::basis(&Partition::empty()), 3),
            SchurVector::basis(&p(&[1, 1, 1]))
        );
    }

    #[test]
    fn perp_removes_corners() {
        assert_eq!(
            perp_box(&SchurVector::basis(&p(&[2, 1]))),
            vec_of(2, &[(&[2], 1), (&[1, 1], 1)])
        );
        assert_eq!(
            perp_box(&SchurVector::basis(&p(&[5]))),
            SchurVector::basis(&p(&[4]))
        );
        assert_eq!(
            perp_box(&SchurVector::basis(&p(&[2, 2]))),
            SchurVector::basis(&p(&[2, 1]))
        );
    }

    #[test]
    fn scalar_products() {
        let a = SchurVector::basis(&p(&[3, 1]));
        assert_eq!(scalar_product(&a, &a), 1.into());
        assert_eq!(
            scalar_product(&a, &SchurVector::basis(&p(&[2, 2]))),
            0.into()
        );
        let rug_p = vec_of(4, &[(&[4], 1), (&[2, 2], 1), (&[1, 1, 1, 1], 1)]);
        assert_eq!(scalar_product(&rug_p, &rug_p), 3.into());
        assert_eq!(scalar_product(&a, &SchurVector::basis(&p(&[3]))), 0.into());
    }

    #[test]
    fn vector_arithmetic_keeps_invariants() {
        let a = vec_of(3, &[(&[3], 2), (&[2, 1], 1)]);
        let b = vec_of(3, &[(&[3], 2), (&[1, 1, 1], 4)]);
        let diff = &a - &b;
        assert_eq!(diff, vec_of(3, &[(&[2, 1], 1), (&[1, 1, 1], -4)]));
        assert_eq!(diff.coeff(&p(&[3])), 0.into());
        assert_eq!(diff.len(), 2);
        assert_eq!((&a - &a).len(), 0);
        assert_eq!(a.to_string(), "2 s[3] + s[2,1]");
        assert_eq!(diff.to_string(), "s[2,1] - 4 s[1,1,1]");
    }

    #[test]
    fn cache_entries_are_sorted_and_stable() {
        let c = CharacterCache::new();
        c.table(4);
        let entries = c.entries();
        assert!(entries.len() >= 25);
        assert!(entries.windows(2).all(|w| {
            (w[0].0.degree(), &w[0].0, &w[0].1) < (w[1].0.degree(), &w[1].0, &w[1].1)
        }));
        assert!(entries.iter().all(|(l, r, _)| l.degree() == r.degree()));
    }
}

//! Closed forms for Kronecker products with `s_(d,d)`.
//!
//! * two-row partner `s_(d+k,d-k)`: an indicator sum over the shifted
//!   parity sets `(k+i,k,i)P` and `(k+i+1,k+1,i)P`;
//! * hook partner `s_(2d-k,1^k)`: a recursion in `(d, k)` through the map
//!   [`phi`] plus four boundary shapes, and the hook indicator formula for a
//!   two-row shape against a hook.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{KronError, Result};
use crate::partition::{
    classify_shape, in_gamma_p, in_p, in_p_bar, partitions_of, phi, Partition, ShapeClass,
    ShiftVector,
};
use crate::symmetric::{
    kron_coeff_oracle, kron_oracle, perp_box, pieri_mult_row, scalar_product, SchurVector,
};

/// A collection of shifts `γ`, grouped so that the sets `γP` inside one
/// group are pairwise disjoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RugSpec {
    groups: Vec<Vec<ShiftVector>>,
}

fn shift(entries: &[usize]) -> ShiftVector {
    ShiftVector::new(entries).expect("shift families are partition shaped")
}

impl RugSpec {
    pub fn new(groups: Vec<Vec<ShiftVector>>) -> Self {
        RugSpec { groups }
    }

    /// Shifts of the two-row formula for `s_(d,d) ∗ s_(d+k,d-k)`, as one
    /// ungrouped list: `(k+i,k,i)` for `0 <= i <= k` and `(k+i+1,k+1,i)` for
    /// `1 <= i <= k`.
    pub fn two_row_shifts(k: usize) -> Vec<ShiftVector> {
        let mut out: Vec<_> = (0..=k).map(|i| shift(&[k + i, k, i])).collect();
        out.extend((1..=k).map(|i| shift(&[k + i + 1, k + 1, i])));
        out
    }

    /// The same shifts arranged in `⌊k/2⌋ + 1` disjoint groups.
    pub fn two_row(k: usize) -> Self {
        let mut groups = Vec::new();
        if k % 2 == 1 {
            groups.push(vec![
                shift(&[k, k]),
                shift(&[k + 1, k, 1]),
                shift(&[k + 2, k + 1, 1]),
            ]);
            for i in 1..=(k - 1) / 2 {
                groups.push(vec![
                    shift(&[k + 2 * i, k, 2 * i]),
                    shift(&[k + 2 * i + 1, k + 1, 2 * i]),
                    shift(&[k + 2 * i + 1, k, 2 * i + 1]),
                    shift(&[k + 2 * i + 2, k + 1, 2 * i + 1]),
                ]);
            }
        } else {
            groups.push(vec![shift(&[k, k])]);
            for i in 1..=k / 2 {
                groups.push(vec![
                    shift(&[k + 2 * i - 1, k, 2 * i - 1]),
                    shift(&[k + 2 * i, k + 1, 2 * i - 1]),
                    shift(&[k + 2 * i, k, 2 * i]),
                    shift(&[k + 2 * i + 1, k + 1, 2 * i]),
                ]);
            }
        }
        RugSpec { groups }
    }

    pub fn groups(&self) -> &[Vec<ShiftVector>] {
        &self.groups
    }

    pub fn shifts(&self) -> impl Iterator<Item = &ShiftVector> {
        self.groups.iter().flatten()
    }

    /// Number of shifts `γ` with `λ ∈ γP`.
    pub fn count(&self, lambda: &Partition) -> usize {
        self.shifts().filter(|g| in_gamma_p(lambda, g)).count()
    }

    /// `Σ_γ ⟨γP⟩` over partitions of `2d`.
    pub fn evaluate(&self, d: usize) -> SchurVector {
        let mut out = SchurVector::zero(2 * d);
        for lambda in partitions_of(2 * d, Some(4)) {
            out.add_term(&lambda, self.count(&lambda));
        }
        out
    }

    /// Whether every group contributes at most once to each `λ ⊢ 2d`.
    pub fn groups_disjoint_at(&self, d: usize) -> bool {
        partitions_of(2 * d, Some(4)).iter().all(|lambda| {
            self.groups
                .iter()
                .all(|g| g.iter().filter(|s| in_gamma_p(lambda, s)).count() <= 1)
        })
    }
}

fn check_two_row_params(d: usize, k: usize) -> Result<()> {
    if k > d {
        return Err(KronError::BadK {
            k: k as i64,
            reason: "two-row products need 0 <= k <= d",
        });
    }
    Ok(())
}

fn check_degree(lambda: &Partition, expected: usize) -> Result<()> {
    if lambda.degree() != expected {
        return Err(KronError::BadDegree {
            lambda: lambda.clone(),
            expected,
            actual: lambda.degree(),
        });
    }
    Ok(())
}

/// `⟨s_(d,d) ∗ s_(d+k,d-k), s_λ⟩` from the indicator formula; 0 whenever
/// `λ` has more than four parts.
pub fn coeff_two_row(d: usize, k: usize, lambda: &Partition) -> Result<u64> {
    check_two_row_params(d, k)?;
    check_degree(lambda, 2 * d)?;
    if lambda.len() > 4 {
        return Ok(0);
    }
    let hits = RugSpec::two_row_shifts(k)
        .iter()
        .filter(|g| in_gamma_p(lambda, g))
        .count();
    Ok(hits as u64)
}

/// The values `i` in `0..=k` with `λ ∈ (k+i,k,i)P` and in `1..=k` with
/// `λ ∈ (k+i+1,k+1,i)P`.
pub fn firing_indices(k: usize, lambda: &Partition) -> (Vec<usize>, Vec<usize>) {
    let first = (0..=k)
        .filter(|&i| in_gamma_p(lambda, &shift(&[k + i, k, i])))
        .collect();
    let second = (1..=k)
        .filter(|&i| in_gamma_p(lambda, &shift(&[k + i + 1, k + 1, i])))
        .collect();
    (first, second)
}

/// Full expansion of `s_(d,d) ∗ s_(d+k,d-k)` built from the grouped rugs.
pub fn product_two_row(d: usize, k: usize) -> Result<SchurVector> {
    check_two_row_params(d, k)?;
    Ok(RugSpec::two_row(k).evaluate(d))
}

fn padded4(lambda: &Partition) -> [usize; 4] {
    [
        lambda.part(0),
        lambda.part(1),
        lambda.part(2),
        lambda.part(3),
    ]
}

/// The cases `k = 0, 1, 2` built straight from their set descriptions:
/// `⟨P⟩`, `⟨P̄⟩`, and `⟨P ∩ no three parts equal⟩ + ⟨distinct parts⟩`,
/// where parts are counted after padding with zeros to four entries.
pub fn easy_case(d: usize, k: usize) -> Result<SchurVector> {
    let shapes = partitions_of(2 * d, Some(4));
    match k {
        0 => Ok(SchurVector::rug(2 * d, shapes.iter().filter(|l| in_p(l)))),
        1 => Ok(SchurVector::rug(
            2 * d,
            shapes.iter().filter(|l| in_p_bar(l)),
        )),
        2 => {
            if d < 2 {
                return Err(KronError::BadD {
                    d: d as i64,
                    reason: "the k = 2 case needs d >= 2",
                });
            }
            let no_three_equal = |l: &&Partition| {
                let p = padded4(l);
                !(p[0] == p[2] || p[1] == p[3])
            };
            let distinct = |l: &&Partition| padded4(l).windows(2).all(|w| w[0] > w[1]);
            let a = SchurVector::rug(
                2 * d,
                shapes.iter().filter(|l| in_p(l)).filter(no_three_equal),
            );
            let b = SchurVector::rug(2 * d, shapes.iter().filter(distinct));
            Ok(&a + &b)
        }
        _ => Err(KronError::BadK {
            k: k as i64,
            reason: "closed-form easy cases exist only for k in {0, 1, 2}",
        }),
    }
}

/// Which branch of the length recurrence applies to `λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RecurrenceBranch {
    /// `ℓ(λ) > 4`: the coefficient vanishes.
    Long,
    /// `ℓ(λ) = 4`: strip a full column of height 4.
    FourRows,
    /// `ℓ(λ) = 3`: Pieri correction through `s_(1)` and `s_(1)^⊥`.
    ThreeRows,
    /// `ℓ(λ) <= 2`: explicit parity rule.
    TwoRows,
}

/// Both sides of the length recurrence for `⟨s_(d,d) ∗ s_(d+k,d-k), s_λ⟩`,
/// each evaluated with the oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceSides {
    pub branch: RecurrenceBranch,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

fn two_row_pair(d: usize, k: usize) -> (Partition, Partition) {
    (Partition::two_row(d, d), Partition::two_row(d + k, d - k))
}

pub fn recurrence_sides(d: usize, k: usize, lambda: &Partition) -> Result<RecurrenceSides> {
    if d < 3 {
        return Err(KronError::BadD {
            d: d as i64,
            reason: "the recurrence needs d >= 3",
        });
    }
    if k + 2 > d {
        return Err(KronError::BadK {
            k: k as i64,
            reason: "the recurrence needs 0 <= k <= d - 2",
        });
    }
    check_degree(lambda, 2 * d)?;
    let (mu, nu) = two_row_pair(d, k);
    let lhs = kron_coeff_oracle(&mu, &nu, lambda)?;
    let (branch, rhs) = match lambda.len() {
        l if l > 4 => (RecurrenceBranch::Long, BigInt::zero()),
        4 => {
            let (mu2, nu2) = two_row_pair(d - 2, k);
            let inner = lambda.remove_column(4).expect("four rows");
            (
                RecurrenceBranch::FourRows,
                kron_coeff_oracle(&mu2, &nu2, &inner)?,
            )
        }
        3 => {
            let inner = SchurVector::basis(&lambda.remove_column(3).expect("three rows"));
            let (mu1, nu1) = two_row_pair(d - 1, k);
            let (mu2, nu2) = two_row_pair(d - 2, k);
            let up = scalar_product(&kron_oracle(&mu1, &nu1)?, &pieri_mult_row(&inner, 1));
            let down = scalar_product(&kron_oracle(&mu2, &nu2)?, &perp_box(&inner));
            (RecurrenceBranch::ThreeRows, up - down)
        }
        _ => {
            let l2 = lambda.part(1);
            let hit = l2 % 2 == k % 2 && l2 >= k;
            (RecurrenceBranch::TwoRows, BigInt::from(hit as u8))
        }
    };
    Ok(RecurrenceSides { branch, lhs, rhs })
}

/// Whether the applicable branch of the length recurrence holds.
pub fn check_recurrence(d: usize, k: usize, lambda: &Partition) -> Result<bool> {
    let sides = recurrence_sides(d, k, lambda)?;
    Ok(sides.lhs == sides.rhs)
}

fn ind(b: bool) -> i64 {
    b as i64
}

/// Leg length of a hook-like shape `(ν_2, 1^{ν_1})`.
fn hook_leg(nu: &Partition) -> Option<usize> {
    match classify_shape(nu) {
        ShapeClass::OneRow { .. } => Some(0),
        ShapeClass::OneColumn { n } => Some(n - 1),
        ShapeClass::Hook { m, .. } => Some(m),
        _ => None,
    }
}

/// Double-hook indicator formula, valid when `λ_1 - λ_2 <= m_1`.
fn double_hook_term(mu2: i64, nu_leg: i64, params: (usize, usize, usize, usize)) -> i64 {
    let (l1, l2, m2, m1) = (
        params.0 as i64,
        params.1 as i64,
        params.2 as i64,
        params.3 as i64,
    );
    let t = nu_leg - m1 - 2 * m2;
    let within = |x: i64| l2 <= x && x <= l1;
    let mid = ind((1..=2).contains(&t));
    ind(within(mu2 - m2)) * ind((0..=3).contains(&t))
        + ind(within(mu2 - m2 - 1)) * mid
        + ind(within(mu2 - m2 + 1)) * mid
        - ind(l2 + m2 + m1 == mu2) * mid
}

/// `g_{μνλ}` for a two-row `μ` and a hook (or one-row, one-column) `ν`
/// from the hook indicator formula. For `n >= 3`, `μ_2 >= 2` is required:
/// the hook term double counts when `μ` is itself a hook.
///
/// One-row and one-column `λ` are decided by `μ = ν` (resp. `μ = ν'`),
/// hooks by a two-term indicator, double hooks with `λ_1 - λ_2 <= m_1`
/// by a four-term indicator and the remaining double hooks through the
/// symmetry `g_{μνλ} = g_{μν'λ'}`. Shapes not contained in a double hook
/// give 0.
pub fn coeff_hook_rosas(mu: &Partition, nu: &Partition, lambda: &Partition) -> Result<i64> {
    let n = mu.degree();
    if mu.len() > 2 || (n > 2 && mu.part(1) < 2) {
        return Err(KronError::NotTwoRow(mu.clone()));
    }
    check_degree(nu, n)?;
    check_degree(lambda, n)?;
    let leg = hook_leg(nu).ok_or_else(|| KronError::NotHook(nu.clone()))?;
    let mu_pair = (mu.part(0) as i64, mu.part(1) as i64);
    let leg_i = leg as i64;
    let value = match classify_shape(lambda) {
        ShapeClass::OneRow { .. } => ind(mu == nu),
        ShapeClass::OneColumn { .. } => ind(*mu == nu.conjugate()),
        ShapeClass::Hook { m, .. } => {
            let (mu1, mu2) = mu_pair;
            let m = m as i64;
            ind(mu2 - 1 <= m && m <= mu1) * ind(m == leg_i)
                + ind(2 * mu2 <= m + leg_i + 1 && m + leg_i < 2 * mu1) * ind((m - leg_i).abs() <= 1)
        }
        ShapeClass::Other => 0,
        shape => {
            let params = shape.double_hook_params().expect("double hook");
            let (l1, l2, _, m1) = params;
            if l1 - l2 <= m1 {
                double_hook_term(mu_pair.1, leg_i, params)
            } else {
                let conj = lambda.conjugate();
                let conj_params = classify_shape(&conj)
                    .double_hook_params()
                    .expect("the conjugate of a double hook is a double hook");
                let conj_leg = (n - 1 - leg) as i64;
                double_hook_term(mu_pair.1, conj_leg, conj_params)
            }
        }
    };
    Ok(value)
}

/// `⌊n/2⌋` for possibly negative `n`.
fn half(n: i64) -> i64 {
    n.div_euclid(2)
}

/// Builds `(a, b, 2^twos, 1^ones)`; `None` if the exponents are negative or
/// the list is not a partition.
fn boundary_shape(a: i64, b: i64, twos: i64, ones: usize) -> Option<Partition> {
    if twos < 0 {
        return None;
    }
    let mut parts = vec![a, b];
    parts.extend(std::iter::repeat_n(2, twos as usize));
    parts.extend(std::iter::repeat_n(1, ones));
    Partition::from_exact(&parts)
}

/// The four boundary shapes added when stepping `s_(d,d) ∗ s_(2d-k,1^k)`
/// up to `s_(d+1,d+1) ∗ s_(2d-k+1,1^{k+1})`. Shapes that are not
/// partitions are dropped.
pub fn hook_boundary_terms(d: usize, k: usize) -> Vec<Partition> {
    let (d, k) = (d as i64, k as i64);
    let h_km1 = half(k - 1);
    let h_km2 = half(k - 2);
    let h_k = half(k);
    let r_k = h_km1 + k.rem_euclid(2);
    [
        boundary_shape(d - h_km1 + 1, d - h_km1, h_km1, 1),
        boundary_shape(d + 1 - r_k, d + 1 - r_k, r_k, 0),
        boundary_shape(d - h_km2, d - h_km2, h_km2, 2),
        boundary_shape(d + 2 - h_k, d - h_k, h_k, 0),
    ]
    .into_iter()
    .flatten()
    .collect()
}

/// `s_(d,d) ∗ s_(2d-k,1^k)` for `d >= 1`, `0 <= k <= 2d - 1`.
///
/// `k = 0` and `k = 2d - 1` are the identity and sign products, `(2, 2)` is
/// the conjugate of `(2, 1)`; everything else steps up from `(d-1, k-1)`.
pub fn product_hook(d: usize, k: usize) -> Result<SchurVector> {
    if d == 0 {
        return Err(KronError::BadD {
            d: 0,
            reason: "hook products need d >= 1",
        });
    }
    if k + 1 > 2 * d {
        return Err(KronError::BadK {
            k: k as i64,
            reason: "hook products need 0 <= k <= 2d - 1",
        });
    }
    if k == 0 {
        return Ok(SchurVector::basis(&Partition::two_row(d, d)));
    }
    if k == 2 * d - 1 {
        return Ok(SchurVector::basis(&Partition::new(vec![2; d])));
    }
    if d == 2 && k == 2 {
        // stepping up from d = 1 double counts (3,1); use ν ↦ ν' instead
        return Ok(conjugate_terms(&product_hook(2, 1)?));
    }
    let prev = product_hook(d - 1, k - 1)?;
    let mut out = SchurVector::zero(2 * d);
    for (lambda, c) in prev.terms() {
        out.add_term(&phi(lambda)?, c.clone());
    }
    for shape in hook_boundary_terms(d - 1, k - 1) {
        out.add_term(&shape, BigInt::one());
    }
    Ok(out)
}

/// Applies `λ ↦ λ'` to every term, i.e. multiplies by `s_(1^n)` under `∗`.
pub fn conjugate_terms(f: &SchurVector) -> SchurVector {
    let mut out = SchurVector::zero(f.degree());
    for (lambda, c) in f.terms() {
        out.add_term(&lambda.conjugate(), c.clone());
    }
    out
}

/// `λ̃ = (λ_1 + k, λ_2 + k, λ_3, …)`.
pub fn stretch_first_two(lambda: &Partition, k: usize) -> Partition {
    lambda.add_shift(&[k, k])
}

/// Compares `g_{(d,d)(d+1,1^{d-1})λ}` with
/// `g_{(d+k,d+k)(d+2k+1,1^{d-1})λ̃}` for every `λ ⊢ 2d` and `0 <= k <= k_max`,
/// returning the first mismatch `(k, λ)`.
pub fn stability_mismatch(d: usize, k_max: usize) -> Result<Option<(usize, Partition)>> {
    let base = product_hook(d, d - 1)?;
    for k in 0..=k_max {
        let big = product_hook(d + k, d - 1)?;
        for lambda in partitions_of(2 * d, None) {
            if base.coeff(&lambda) != big.coeff(&stretch_first_two(&lambda, k)) {
                return Ok(Some((k, lambda)));
            }
        }
    }
    Ok(None)
}

pub fn check_stability(d: usize, k_max: usize) -> Result<bool> {
    if d == 0 {
        return Err(KronError::BadD {
            d: 0,
            reason: "stability needs d >= 1",
        });
    }
    Ok(stability_mismatch(d, k_max)?.is_none())
}

pub const MAGIC_SHIFT: [usize; 3] = [6, 4, 2];

/// Shapes `λ ⊢ 2d` with positive coefficient in `s_(d,d) ∗ s_(d+k,d-k)`
/// whose shift by `(6,4,2)` does not gain exactly one, with both values.
pub fn magic_failures(d: usize, k: usize) -> Result<Vec<(Partition, u64, u64)>> {
    if k < 2 {
        return Err(KronError::BadK {
            k: k as i64,
            reason: "the (6,4,2) shift needs k >= 2",
        });
    }
    check_two_row_params(d, k)?;
    let mut out = Vec::new();
    for lambda in partitions_of(2 * d, Some(4)) {
        let c = coeff_two_row(d, k, &lambda)?;
        if c == 0 {
            continue;
        }
        let shifted = lambda.add_shift(&MAGIC_SHIFT);
        let c2 = coeff_two_row(d + 6, k + 2, &shifted)?;
        if c2 != c + 1 {
            out.push((lambda, c, c2));
        }
    }
    Ok(out)
}

pub fn verify_magic(d: usize, k: usize) -> Result<bool> {
    Ok(magic_failures(d, k)?.is_empty())
}

/// `λ ∈ γP ⇔ λ + (6,4,2) ∈ (γ + (2,2))P ∩ (γ + (4,2,2))P`.
pub fn shift_membership_holds(lambda: &Partition, gamma: &ShiftVector) -> bool {
    let shifted = lambda.add_shift(&MAGIC_SHIFT);
    let a = gamma
        .plus(&[2, 2])
        .expect("adding (2,2) keeps a partition shape");
    let b = gamma
        .plus(&[4, 2, 2])
        .expect("adding (4,2,2) keeps a partition shape");
    in_gamma_p(lambda, gamma) == (in_gamma_p(&shifted, &a) && in_gamma_p(&shifted, &b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    fn vec_of(degree: usize, terms: &[&[usize]]) -> SchurVector {
        SchurVector::rug(
            degree,
            terms.iter().map(|t| p(t)).collect::<Vec<_>>().iter(),
        )
    }

    #[test]
    fn two_row_coefficients() {
        assert_eq!(coeff_two_row(4, 2, &p(&[4, 4])).unwrap(), 1);
        assert_eq!(coeff_two_row(3, 3, &p(&[3, 3])).unwrap(), 1);
        assert_eq!(coeff_two_row(6, 2, &p(&[6, 4, 2])).unwrap(), 2);
        assert_eq!(coeff_two_row(2, 1, &p(&[3, 1])).unwrap(), 1);
        assert_eq!(coeff_two_row(3, 0, &p(&[4, 1, 1])).unwrap(), 0);
        assert_eq!(coeff_two_row(3, 0, &p(&[2, 1, 1, 1, 1])).unwrap(), 0);
        assert!(matches!(
            coeff_two_row(3, 0, &p(&[4, 1])),
            Err(KronError::BadDegree { .. })
        ));
        assert!(matches!(
            coeff_two_row(2, 3, &p(&[2, 2])),
            Err(KronError::BadK { .. })
        ));
    }

    #[test]
    fn two_row_products() {
        assert_eq!(product_two_row(1, 0).unwrap(), vec_of(2, &[&[2]]));
        assert_eq!(
            product_two_row(2, 1).unwrap(),
            vec_of(4, &[&[3, 1], &[2, 1, 1]])
        );
        assert_eq!(
            product_two_row(3, 1).unwrap(),
            vec_of(
                6,
                &[&[5, 1], &[4, 1, 1], &[3, 3], &[3, 2, 1], &[2, 2, 1, 1]]
            )
        );
    }

    #[test]
    fn grouping_covers_the_flat_shift_list() {
        for k in 0..9 {
            let mut grouped: Vec<_> = RugSpec::two_row(k).shifts().cloned().collect();
            let mut flat = RugSpec::two_row_shifts(k);
            grouped.sort();
            flat.sort();
            assert_eq!(grouped, flat, "k = {k}");
            assert_eq!(RugSpec::two_row(k).groups().len(), k / 2 + 1);
        }
    }

    #[test]
    fn easy_cases() {
        assert_eq!(
            easy_case(2, 0).unwrap(),
            vec_of(4, &[&[4], &[2, 2], &[1, 1, 1, 1]])
        );
        assert_eq!(easy_case(2, 1).unwrap(), vec_of(4, &[&[3, 1], &[2, 1, 1]]));
        assert_eq!(easy_case(6, 2).unwrap().coeff(&p(&[6, 4, 2])), 2.into());
        assert!(matches!(easy_case(3, 3), Err(KronError::BadK { .. })));
        assert!(matches!(easy_case(1, 2), Err(KronError::BadD { .. })));
    }

    #[test]
    fn recurrence_examples() {
        let s = recurrence_sides(4, 1, &p(&[3, 2, 2, 1])).unwrap();
        assert_eq!(s.branch, RecurrenceBranch::FourRows);
        assert_eq!((s.lhs, s.rhs), (1.into(), 1.into()));
        let s = recurrence_sides(3, 1, &p(&[4, 2])).unwrap();
        assert_eq!(s.branch, RecurrenceBranch::TwoRows);
        assert_eq!((s.lhs, s.rhs), (0.into(), 0.into()));
        let s = recurrence_sides(3, 0, &p(&[4, 1, 1])).unwrap();
        assert_eq!(s.branch, RecurrenceBranch::ThreeRows);
        assert_eq!((s.lhs, s.rhs), (0.into(), 0.into()));
        assert!(check_recurrence(3, 0, &p(&[4, 1, 1])).unwrap());
        assert!(matches!(
            check_recurrence(2, 0, &p(&[2, 2])),
            Err(KronError::BadD { .. })
        ));
        assert!(matches!(
            check_recurrence(4, 3, &p(&[4, 4])),
            Err(KronError::BadK { .. })
        ));
    }

    #[test]
    fn rosas_examples() {
        assert_eq!(
            coeff_hook_rosas(&p(&[2, 2]), &p(&[3, 1]), &p(&[3, 1])).unwrap(),
            1
        );
        assert_eq!(
            coeff_hook_rosas(&p(&[3, 3]), &p(&[6]), &p(&[3, 3])).unwrap(),
            1
        );
        assert_eq!(
            coeff_hook_rosas(&p(&[3, 3]), &p(&[4, 1, 1]), &p(&[6])).unwrap(),
            0
        );
        assert_eq!(
            coeff_hook_rosas(&p(&[5, 5]), &p(&[7, 1, 1, 1]), &p(&[4, 3, 3])).unwrap(),
            0
        );
        assert!(matches!(
            coeff_hook_rosas(&p(&[2, 1, 1]), &p(&[3, 1]), &p(&[3, 1])),
            Err(KronError::NotTwoRow(_))
        ));
        assert!(matches!(
            coeff_hook_rosas(&p(&[4, 1]), &p(&[3, 1, 1]), &p(&[3, 1, 1])),
            Err(KronError::NotTwoRow(_))
        ));
        assert_eq!(
            coeff_hook_rosas(&p(&[1, 1]), &p(&[2]), &p(&[1, 1])).unwrap(),
            1
        );
        assert!(matches!(
            coeff_hook_rosas(&p(&[3, 3]), &p(&[2, 2, 2]), &p(&[3, 3])),
            Err(KronError::NotHook(_))
        ));
    }

    #[test]
    fn hook_products() {
        assert_eq!(
            product_hook(2, 1).unwrap(),
            vec_of(4, &[&[3, 1], &[2, 1, 1]])
        );
        assert_eq!(
            product_hook(3, 2).unwrap(),
            vec_of(
                6,
                &[&[4, 2], &[3, 2, 1], &[2, 2, 2], &[4, 1, 1], &[3, 1, 1, 1]]
            )
        );
        assert_eq!(product_hook(3, 0).unwrap(), vec_of(6, &[&[3, 3]]));
        assert_eq!(product_hook(3, 5).unwrap(), vec_of(6, &[&[2, 2, 2]]));
        assert!(product_hook(3, 6).is_err());
        assert!(product_hook(0, 0).is_err());
    }

    #[test]
    fn stability_small() {
        assert!(check_stability(1, 4).unwrap());
        assert!(check_stability(2, 3).unwrap());
        assert!(check_stability(3, 2).unwrap());
        // d = 2 matches s_(k+2,k+2) ∗ s_(2k+3,1) = s_(k+3,k+1) + s_(k+2,k+1,1)
        for k in 0..4 {
            assert_eq!(
                product_hook(k + 2, 1).unwrap(),
                vec_of(2 * k + 4, &[&[k + 3, k + 1], &[k + 2, k + 1, 1]])
            );
        }
    }

    #[test]
    fn magic_shift() {
        assert_eq!(coeff_two_row(10, 4, &p(&[10, 8, 2])).unwrap(), 2);
        assert_eq!(coeff_two_row(12, 4, &p(&[12, 8, 4])).unwrap(), 3);
        assert!(verify_magic(4, 2).unwrap());
        assert!(verify_magic(6, 2).unwrap());
        assert!(matches!(verify_magic(4, 1), Err(KronError::BadK { .. })));
    }

    #[test]
    fn shift_membership_spot() {
        let g = ShiftVector::new(&[2, 2]).unwrap();
        assert!(shift_membership_holds(&p(&[6, 4, 2]), &g));
        assert!(shift_membership_holds(&p(&[5, 1]), &g));
    }
}

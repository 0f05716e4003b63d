//! Integer partitions, shape classification and the parity sets `P`, `P̄`
//! and `γP` used to describe Kronecker products with `s_(d,d)`.
//!
//! Partitions are immutable values. The derived `Ord` is lexicographic on
//! the parts, so "decreasing lexicographic order" is simply descending `Ord`.

use std::fmt;
use std::str::FromStr;

use crate::error::{KronError, Result};

/// A non-increasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts the values non-increasingly and strips zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// Accepts `parts` only if it is already a partition, allowing trailing
    /// zeros. Returns `None` for non-monotone lists or interior zeros.
    pub fn from_exact(parts: &[i64]) -> Option<Self> {
        if parts.iter().any(|&p| p < 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Some(Partition(
            parts
                .iter()
                .filter(|&&p| p > 0)
                .map(|&p| p as usize)
                .collect(),
        ))
    }

    pub fn one_row(n: usize) -> Self {
        Partition::new(vec![n])
    }

    pub fn one_column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    /// `(a, b)` with zero second row allowed.
    pub fn two_row(a: usize, b: usize) -> Self {
        Partition::new(vec![a, b])
    }

    /// The hook `(arm, 1^leg)`.
    pub fn hook(arm: usize, leg: usize) -> Self {
        let mut parts = vec![arm];
        parts.extend(std::iter::repeat_n(1, leg));
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of non-zero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `i`-th part (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|j| self.0.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition(parts)
    }

    /// Componentwise sum with `shift` (padding with zeros).
    pub fn add_shift(&self, shift: &[usize]) -> Partition {
        let n = self.len().max(shift.len());
        Partition::new(
            (0..n)
                .map(|i| self.part(i) + shift.get(i).copied().unwrap_or(0))
                .collect(),
        )
    }

    /// Removes one box from each of the first `m` rows; `None` if the
    /// partition has fewer than `m` rows.
    pub fn remove_column(&self, m: usize) -> Option<Partition> {
        if self.len() < m {
            return None;
        }
        let mut parts = self.0.clone();
        for p in parts.iter_mut().take(m) {
            *p -= 1;
        }
        Some(Partition::new(parts))
    }

    /// Hook lengths of every cell, row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.degree());
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                hooks.push(row - j + conj.part(j) - i - 1);
            }
        }
        hooks
    }

    /// Multiplicity of each part size: entry `i` counts parts equal to `i + 1`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.part(0)];
        for &p in &self.0 {
            m[p - 1] += 1;
        }
        m
    }

    /// The first four parts, zero padded. Only meaningful when `len() <= 4`.
    fn padded4(&self) -> [usize; 4] {
        [self.part(0), self.part(1), self.part(2), self.part(3)]
    }
}

/// Builds a partition from arbitrary integers: sorts, strips zeros and
/// rejects negative values.
pub fn make_partition(values: &[i64]) -> Result<Partition> {
    if let Some(&neg) = values.iter().find(|&&v| v < 0) {
        return Err(KronError::NegativePart(neg));
    }
    Ok(Partition::new(values.iter().map(|&v| v as usize).collect()))
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

/// Parses `[6,4,2]`, `[]`, `6,4,2` and the exponent shorthand `[3,2^3,1]`.
impl FromStr for Partition {
    type Err = KronError;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| KronError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = s.trim();
        let inner = match (trimmed.strip_prefix('['), trimmed.strip_suffix(']')) {
            (Some(_), Some(_)) => &trimmed[1..trimmed.len() - 1],
            (None, None) => trimmed,
            _ => return Err(err("unbalanced brackets")),
        };
        let mut values = Vec::new();
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        for token in inner.split(',') {
            let token = token.trim();
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (token, "1"),
            };
            let base: i64 = base.parse().map_err(|_| err("expected an integer part"))?;
            let exp: usize = exp
                .parse()
                .map_err(|_| err("expected an integer exponent"))?;
            values.extend(std::iter::repeat_n(base, exp));
        }
        make_partition(&values)
    }
}

/// All partitions of `n` with at most `max_len` parts (unbounded when
/// `None`), in decreasing lexicographic order.
pub fn partitions_of(n: usize, max_len: Option<usize>) -> Vec<Partition> {
    fn rec(
        remaining: usize,
        max_part: usize,
        slots: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=max_part.min(remaining)).rev() {
            // the remaining slots must be able to hold what is left
            if p * slots < remaining {
                break;
            }
            prefix.push(p);
            rec(remaining - p, p, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    let slots = max_len.unwrap_or(n);
    rec(n, n, slots, &mut Vec::new(), &mut out);
    out
}

/// `λ ∈ P`: at most four parts and, padded with zeros to four entries,
/// all even or all odd.
pub fn in_p(lambda: &Partition) -> bool {
    if lambda.len() > 4 {
        return false;
    }
    let odd = lambda.padded4().iter().filter(|&&p| p % 2 == 1).count();
    odd == 0 || odd == 4
}

/// `λ ∈ P̄`: at most four parts, exactly two of the padded entries odd.
pub fn in_p_bar(lambda: &Partition) -> bool {
    lambda.len() <= 4 && !in_p(lambda)
}

/// A shift `γ` with at most four non-increasing entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShiftVector([usize; 4]);

impl ShiftVector {
    pub fn new(entries: &[usize]) -> Result<Self> {
        if entries.len() > 4 {
            return Err(KronError::ShiftTooLong(entries.len()));
        }
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(KronError::ShiftNotPartition(entries.to_vec()));
        }
        let mut e = [0; 4];
        e[..entries.len()].copy_from_slice(entries);
        Ok(ShiftVector(e))
    }

    pub fn from_partition(gamma: &Partition) -> Result<Self> {
        Self::new(gamma.parts())
    }

    pub fn entries(&self) -> [usize; 4] {
        self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Componentwise sum; stays non-increasing when both inputs are.
    pub fn plus(&self, other: &[usize]) -> Result<Self> {
        if other.len() > 4 {
            return Err(KronError::ShiftTooLong(other.len()));
        }
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(other) {
            *x += y;
        }
        Self::new(&e)
    }
}

impl fmt::Display for ShiftVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let len = self.0.iter().rposition(|&x| x > 0).map_or(0, |i| i + 1);
        let parts: Vec<String> = self.0[..len].iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `λ ∈ γP`: the padded difference `λ − γ` is non-negative, non-increasing
/// and lies in `P`.
pub fn in_gamma_p(lambda: &Partition, gamma: &ShiftVector) -> bool {
    if lambda.len() > 4 {
        return false;
    }
    let l = lambda.padded4();
    let g = gamma.0;
    let mut diff = [0usize; 4];
    for i in 0..4 {
        if l[i] < g[i] {
            return false;
        }
        diff[i] = l[i] - g[i];
    }
    if diff.windows(2).any(|w| w[0] < w[1]) {
        return false;
    }
    let odd = diff.iter().filter(|&&p| p % 2 == 1).count();
    odd == 0 || odd == 4
}

/// `(λ_1, …, λ_k) ↦ (λ_1 + 1, λ_2, …, λ_k, 1)`.
pub fn phi(lambda: &Partition) -> Result<Partition> {
    if lambda.is_empty() {
        return Err(KronError::EmptyPartition);
    }
    let mut parts = lambda.0.clone();
    parts[0] += 1;
    parts.push(1);
    Ok(Partition(parts))
}

/// Canonical shape tag of a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShapeClass {
    /// `(n)`, including the empty partition and `(1)`.
    OneRow { n: usize },
    /// `(1^n)` with `n >= 2`.
    OneColumn { n: usize },
    /// `(λ_1, 1^m)` with `λ_1 >= 2`, `m >= 1`.
    Hook { lambda1: usize, m: usize },
    /// `(λ_1, λ_2)` with `λ_2 >= 2`.
    TwoRow { lambda1: usize, lambda2: usize },
    /// `(λ_1, λ_2, 2^{m_2}, 1^{m_1})` with `λ_2 >= 2` and at least three rows.
    DoubleHook {
        lambda1: usize,
        lambda2: usize,
        m2: usize,
        m1: usize,
    },
    /// Not contained in a double hook (`λ_3 >= 3`).
    Other,
}

impl ShapeClass {
    /// Double-hook parameters `(λ_1, λ_2, m_2, m_1)` for shapes contained in
    /// a double hook with `λ_2 >= 2`.
    pub fn double_hook_params(&self) -> Option<(usize, usize, usize, usize)> {
        match *self {
            ShapeClass::TwoRow { lambda1, lambda2 } => Some((lambda1, lambda2, 0, 0)),
            ShapeClass::DoubleHook {
                lambda1,
                lambda2,
                m2,
                m1,
            } => Some((lambda1, lambda2, m2, m1)),
            _ => None,
        }
    }
}

pub fn classify_shape(lambda: &Partition) -> ShapeClass {
    let n = lambda.degree();
    match lambda.len() {
        0 | 1 => return ShapeClass::OneRow { n },
        _ => {}
    }
    if lambda.part(0) == 1 {
        return ShapeClass::OneColumn { n };
    }
    if lambda.part(1) == 1 {
        return ShapeClass::Hook {
            lambda1: lambda.part(0),
            m: lambda.len() - 1,
        };
    }
    if lambda.part(2) >= 3 {
        return ShapeClass::Other;
    }
    if lambda.len() == 2 {
        return ShapeClass::TwoRow {
            lambda1: lambda.part(0),
            lambda2: lambda.part(1),
        };
    }
    let tail = &lambda.parts()[2..];
    ShapeClass::DoubleHook {
        lambda1: lambda.part(0),
        lambda2: lambda.part(1),
        m2: tail.iter().filter(|&&p| p == 2).count(),
        m1: tail.iter().filter(|&&p| p == 1).count(),
    }
}

/// `λ_3 <= 2`: at most two rows longer than 2.
pub fn in_double_hook(lambda: &Partition) -> bool {
    lambda.part(2) <= 2
}

//! Verification sweeps comparing closed forms with the oracle or with
//! direct enumeration over bounded ranges.
//!
//! Work items may run concurrently; failures are sorted by `(d, k, λ)`
//! before the report is returned, so reports do not depend on scheduling.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::closed_forms::{
    coeff_hook_rosas, coeff_two_row, magic_failures, product_hook, recurrence_sides,
    stability_mismatch,
};
use crate::error::{KronError, Result};
use crate::partition::{partitions_of, Partition};
use crate::series::{
    bounded_sum_identity_check, coefficient_sum, count_by_coefficient, g_k, l_kr,
    syt_count_bounded, weighted_l_sum, y_height,
};
use crate::symmetric::{kron_coeff_oracle, kron_oracle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    Cleanest,
    Hook,
    Rosas,
    Magic,
    Stability,
    Recurrence,
    Bounded,
    Gf,
}

impl Target {
    pub const ALL: [Target; 8] = [
        Target::Cleanest,
        Target::Hook,
        Target::Rosas,
        Target::Magic,
        Target::Stability,
        Target::Recurrence,
        Target::Bounded,
        Target::Gf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Target::Cleanest => "cleanest",
            Target::Hook => "hook",
            Target::Rosas => "rosas",
            Target::Magic => "magic",
            Target::Stability => "stability",
            Target::Recurrence => "recurrence",
            Target::Bounded => "bounded",
            Target::Gf => "gf",
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Target {
    type Err = KronError;

    fn from_str(s: &str) -> Result<Self> {
        Target::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| KronError::Parse {
                input: s.to_string(),
                reason: "unknown verification target".into(),
            })
    }
}

/// Sweep bounds. `max_k = None` means "as large as the target allows".
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_d: usize,
    pub max_k: Option<usize>,
    pub max_n: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_d: 6,
            max_k: None,
            max_n: 10,
        }
    }
}

impl Bounds {
    fn k_cap(&self, natural: usize) -> usize {
        self.max_k.map_or(natural, |m| m.min(natural))
    }
}

/// One counterexample. For `bounded`, `d` holds `n` and `k` holds `h`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Failure {
    pub d: usize,
    pub k: usize,
    pub lambda: Option<Partition>,
    pub detail: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d={} k={}", self.d, self.k)?;
        if let Some(l) = &self.lambda {
            write!(f, " lambda={l}")?;
        }
        write!(f, ": {}", self.detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub target: Target,
    pub checked: usize,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} {}: {} checks, {} failures",
            if self.passed() { "PASS" } else { "FAIL" },
            self.target,
            self.checked,
            self.failures.len()
        )?;
        for failure in &self.failures {
            writeln!(f, "  {failure}")?;
        }
        Ok(())
    }
}

struct Tally {
    checked: usize,
    failures: Vec<Failure>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn check(
        &mut self,
        ok: bool,
        d: usize,
        k: usize,
        lambda: Option<&Partition>,
        detail: impl FnOnce() -> String,
    ) {
        self.checked += 1;
        if !ok {
            self.failures.push(Failure {
                d,
                k,
                lambda: lambda.cloned(),
                detail: detail(),
            });
        }
    }
}

fn fan_out<F>(items: Vec<(usize, usize)>, work: F) -> Result<Tally>
where
    F: Fn(usize, usize) -> Result<Tally> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    let parts: Vec<Result<Tally>> = {
        use rayon::prelude::*;
        items.into_par_iter().map(|(a, b)| work(a, b)).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let parts: Vec<Result<Tally>> = items.into_iter().map(|(a, b)| work(a, b)).collect();
    let mut total = Tally::new();
    for part in parts {
        let part = part?;
        total.checked += part.checked;
        total.failures.extend(part.failures);
    }
    total.failures.sort();
    Ok(total)
}

fn cleanest(d: usize, k: usize) -> Result<Tally> {
    let mut t = Tally::new();
    let oracle = kron_oracle(&Partition::two_row(d, d), &Partition::two_row(d + k, d - k))?;
    for lambda in partitions_of(2 * d, None) {
        let got = BigInt::from(coeff_two_row(d, k, &lambda)?);
        let want = oracle.coeff(&lambda);
        t.check(got == want, d, k, Some(&lambda), || {
            format!("closed form {got}, oracle {want}")
        });
    }
    let bound = BigInt::from(k / 2 + 1);
    let max = oracle.max_coeff();
    t.check(max <= bound, d, k, None, || {
        format!("max coefficient {max} exceeds {bound}")
    });
    Ok(t)
}

fn hook(d: usize, k: usize) -> Result<Tally> {
    let mut t = Tally::new();
    let got = product_hook(d, k)?;
    let want = kron_oracle(&Partition::two_row(d, d), &Partition::hook(2 * d - k, k))?;
    t.check(got == want, d, k, None, || {
        format!("recursion {got}, oracle {want}")
    });
    t.check(got.is_multiplicity_free(), d, k, None, || {
        format!("not multiplicity-free: {got}")
    });
    Ok(t)
}

fn rosas(d: usize, k: usize) -> Result<Tally> {
    let mut t = Tally::new();
    let mu = Partition::two_row(d, d);
    let nu = Partition::hook(2 * d - k, k);
    for lambda in partitions_of(2 * d, None) {
        let got = BigInt::from(coeff_hook_rosas(&mu, &nu, &lambda)?);
        let want = kron_coeff_oracle(&mu, &nu, &lambda)?;
        t.check(got == want, d, k, Some(&lambda), || {
            format!("indicator formula {got}, oracle {want}")
        });
    }
    Ok(t)
}

fn magic(d: usize, k: usize) -> Result<Tally> {
    let mut t = Tally::new();
    let failures = magic_failures(d, k)?;
    t.checked += 1;
    t.failures
        .extend(failures.into_iter().map(|(lambda, c, c2)| Failure {
            d,
            k,
            lambda: Some(lambda),
            detail: format!("coefficient {c}, shifted coefficient {c2}"),
        }));
    Ok(t)
}

fn stability(d: usize, k_max: usize) -> Result<Tally> {
    let mut t = Tally::new();
    t.checked += 1;
    if let Some((k, lambda)) = stability_mismatch(d, k_max)? {
        t.failures.push(Failure {
            d,
            k,
            lambda: Some(lambda),
            detail: "stretched coefficient differs".into(),
        });
    }
    Ok(t)
}

fn recurrence(d: usize, k: usize) -> Result<Tally> {
    let mut t = Tally::new();
    for lambda in partitions_of(2 * d, None) {
        let s = recurrence_sides(d, k, &lambda)?;
        t.check(s.lhs == s.rhs, d, k, Some(&lambda), || {
            format!("{:?} branch: lhs {}, rhs {}", s.branch, s.lhs, s.rhs)
        });
    }
    Ok(t)
}

fn bounded(n: usize, h: usize) -> Result<Tally> {
    let mut t = Tally::new();
    t.check(bounded_sum_identity_check(n, h)?, n, h, None, || {
        "Schur identity fails".into()
    });
    let closed = y_height(n, h)?;
    let counted = syt_count_bounded(n, h);
    t.check(closed == counted, n, h, None, || {
        format!("closed form {closed}, enumeration {counted}")
    });
    Ok(t)
}

fn gf(k: usize, max_d: usize) -> Result<Tally> {
    let mut t = Tally::new();
    let series = g_k(k).series(max_d)?;
    let r_max = k / 2 + 2;
    let l_series = (1..=r_max)
        .map(|r| l_kr(k, r)?.series(max_d))
        .collect::<Result<Vec<_>>>()?;
    for d in 0..=max_d {
        if d < k {
            t.check(series[d] == BigInt::from(0), d, k, None, || {
                format!("series coefficient {} below k", series[d])
            });
            continue;
        }
        let direct = coefficient_sum(d, k)?;
        t.check(series[d] == direct, d, k, None, || {
            format!("series {}, direct sum {direct}", series[d])
        });
        let counts = count_by_coefficient(d, k)?;
        for (i, ls) in l_series.iter().enumerate() {
            let r = (i + 1) as u64;
            let direct = BigInt::from(counts.get(&r).copied().unwrap_or(0));
            t.check(ls[d] == direct, d, k, None, || {
                format!("L series at r={r} is {}, count {direct}", ls[d])
            });
        }
    }
    let weighted = weighted_l_sum(k)?;
    t.check(weighted.same_function(&g_k(k)), 0, k, None, || {
        "weighted L sum differs from G".into()
    });
    Ok(t)
}

/// Runs one verification target.
///
/// Ranges: `cleanest`, `rosas`, `hook`, `recurrence` sweep `1 <= d <= max_d`
/// over every admissible `k` up to `max_k`; `magic` uses `2 <= k <= d`;
/// `stability` uses `k_max = max_k` (default 3); `bounded` sweeps
/// `1 <= n <= max_n` and `h ∈ {2,3,4,5}`; `gf` sweeps `k <= max_k`
/// (default 4) and `d <= max_d`.
pub fn run(target: Target, bounds: &Bounds) -> Result<Report> {
    let max_d = bounds.max_d;
    let tally = match target {
        Target::Cleanest => {
            let items = (1..=max_d)
                .flat_map(|d| (0..=bounds.k_cap(d)).map(move |k| (d, k)))
                .collect();
            fan_out(items, cleanest)?
        }
        Target::Hook => {
            let items = (1..=max_d)
                .flat_map(|d| (0..=bounds.k_cap(2 * d - 1)).map(move |k| (d, k)))
                .collect();
            fan_out(items, hook)?
        }
        Target::Rosas => {
            let items = (1..=max_d)
                .flat_map(|d| (0..=bounds.k_cap(2 * d - 1)).map(move |k| (d, k)))
                .collect();
            fan_out(items, rosas)?
        }
        Target::Magic => {
            let items = (2..=max_d)
                .flat_map(|d| (2..=bounds.k_cap(d)).map(move |k| (d, k)))
                .collect();
            fan_out(items, magic)?
        }
        Target::Stability => {
            let k_max = bounds.max_k.unwrap_or(3);
            fan_out((1..=max_d).map(|d| (d, k_max)).collect(), stability)?
        }
        Target::Recurrence => {
            let items = (3..=max_d)
                .flat_map(|d| (0..=bounds.k_cap(d - 2)).map(move |k| (d, k)))
                .collect();
            fan_out(items, recurrence)?
        }
        Target::Bounded => {
            let items = (1..=bounds.max_n)
                .flat_map(|n| (2..=5).map(move |h| (n, h)))
                .collect();
            fan_out(items, bounded)?
        }
        Target::Gf => {
            let k_max = bounds.max_k.unwrap_or(4);
            fan_out((0..=k_max).map(|k| (k, max_d)).collect(), gf)?
        }
    };
    Ok(Report {
        target,
        checked: tally.checked,
        failures: tally.failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> Bounds {
        Bounds {
            max_d: 4,
            max_k: None,
            max_n: 6,
        }
    }

    #[test]
    fn every_target_passes_on_small_ranges() {
        for target in Target::ALL {
            let report = run(target, &small()).unwrap();
            assert!(report.passed(), "{report}");
            assert!(report.checked > 0, "{target}");
        }
    }

    #[test]
    fn target_names_round_trip() {
        for target in Target::ALL {
            assert_eq!(target.name().parse::<Target>().unwrap(), target);
        }
        assert!("nope".parse::<Target>().is_err());
    }

    #[test]
    fn report_format() {
        let report = Report {
            target: Target::Magic,
            checked: 3,
            failures: vec![Failure {
                d: 4,
                k: 2,
                lambda: Some(Partition::two_row(4, 4)),
                detail: "x".into(),
            }],
        };
        assert_eq!(
            report.to_string(),
            "FAIL magic: 3 checks, 1 failures\n  d=4 k=2 lambda=[4,4]: x\n"
        );
    }
}

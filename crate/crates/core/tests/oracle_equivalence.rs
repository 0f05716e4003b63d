//! Closed forms against the character oracle on small ranges. The full
//! ranges live in the acceptance suite.

use kron_core::closed_forms::{
    coeff_hook_rosas, coeff_two_row, easy_case, firing_indices, product_hook, product_two_row,
    RugSpec,
};
use kron_core::partition::{partitions_of, Partition};
use kron_core::symmetric::{kron_coeff_oracle, kron_oracle};
use num_bigint::BigInt;

#[test]
fn two_row_matches_oracle() {
    for d in 1..=6 {
        for k in 0..=d {
            let mu = Partition::two_row(d, d);
            let nu = Partition::two_row(d + k, d - k);
            let oracle = kron_oracle(&mu, &nu).unwrap();
            assert_eq!(product_two_row(d, k).unwrap(), oracle, "d={d} k={k}");
            for lambda in partitions_of(2 * d, None) {
                assert_eq!(
                    BigInt::from(coeff_two_row(d, k, &lambda).unwrap()),
                    oracle.coeff(&lambda),
                    "d={d} k={k} lambda={lambda}"
                );
            }
        }
    }
}

#[test]
fn easy_cases_match_rug_formula() {
    for d in 1..=12 {
        for k in 0..=2.min(d) {
            if k == 2 && d < 2 {
                continue;
            }
            assert_eq!(
                easy_case(d, k).unwrap(),
                product_two_row(d, k).unwrap(),
                "d={d} k={k}"
            );
        }
    }
}

#[test]
fn hook_products_match_oracle() {
    for d in 1..=6 {
        for k in 0..2 * d {
            let got = product_hook(d, k).unwrap();
            let want =
                kron_oracle(&Partition::two_row(d, d), &Partition::hook(2 * d - k, k)).unwrap();
            assert_eq!(got, want, "d={d} k={k}");
            assert!(got.is_multiplicity_free());
        }
    }
}

#[test]
fn rosas_formula_matches_oracle() {
    for d in 1..=5 {
        let mu = Partition::two_row(d, d);
        for k in 0..2 * d {
            let nu = Partition::hook(2 * d - k, k);
            for lambda in partitions_of(2 * d, None) {
                let got = coeff_hook_rosas(&mu, &nu, &lambda).unwrap();
                let want = kron_coeff_oracle(&mu, &nu, &lambda).unwrap();
                assert_eq!(BigInt::from(got), want, "nu={nu} lambda={lambda}");
            }
        }
    }
}

#[test]
fn rosas_formula_for_other_two_row_shapes() {
    for n in 2..=9 {
        for mu in partitions_of(n, Some(2))
            .into_iter()
            .filter(|m| m.part(1) >= 2)
        {
            for k in 0..n {
                let nu = Partition::hook(n - k, k);
                for lambda in partitions_of(n, None) {
                    let got = coeff_hook_rosas(&mu, &nu, &lambda).unwrap();
                    let want = kron_coeff_oracle(&mu, &nu, &lambda).unwrap();
                    assert_eq!(BigInt::from(got), want, "mu={mu} nu={nu} lambda={lambda}");
                }
            }
        }
    }
}

#[test]
fn rug_groups_are_disjoint() {
    for k in 0..=6 {
        let spec = RugSpec::two_row(k);
        for d in k..=k + 8 {
            assert!(spec.groups_disjoint_at(d), "k={k} d={d}");
        }
    }
}

#[test]
fn firing_indices_share_parity() {
    for k in 0..=6 {
        for d in k..=k + 8 {
            for lambda in partitions_of(2 * d, Some(4)) {
                let (first, second) = firing_indices(k, &lambda);
                for family in [first, second] {
                    assert!(
                        family.windows(2).all(|w| w[1] == w[0] + 2),
                        "k={k} lambda={lambda} fired {family:?}"
                    );
                }
            }
        }
    }
}

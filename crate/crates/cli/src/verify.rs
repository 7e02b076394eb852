//! Oracle-versus-formula comparison over all small rank-four products.

use num_bigint::BigUint;
use subcount::numth::divisors;
use subcount::oracle::{enumerate_subgroups, FiniteAbelianGroup, DEFAULT_ORDER_BOUND};
use subcount::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disagreement {
    pub moduli: [u64; 4],
    /// `None` for the total count.
    pub order: Option<u64>,
    pub oracle: u64,
    pub formula: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerifyReport {
    pub max_order: u64,
    pub groups: usize,
    pub comparisons: usize,
    pub first_disagreement: Option<Disagreement>,
}

impl VerifyReport {
    pub fn pass(&self) -> bool {
        self.first_disagreement.is_none()
    }
}

/// Sorted tuples `m <= n <= r <= s` with `mnrs <= max_order`.
pub fn canonical_tuples(max_order: u64) -> Vec<[u64; 4]> {
    let mut out = Vec::new();
    for m in 1..=max_order {
        for n in m..=max_order / m {
            for r in n..=max_order / (m * n) {
                for s in r..=max_order / (m * n * r) {
                    out.push([m, n, r, s]);
                }
            }
        }
    }
    out
}

/// Compares the subgroup census of every canonical tuple against `total`
/// and, for each `k | mnrs`, against `by_order`. Stops at the first
/// disagreement.
pub fn verify_with<T, O>(max_order: u64, total: T, by_order: O) -> Result<VerifyReport>
where
    T: Fn([u64; 4]) -> Result<BigUint>,
    O: Fn([u64; 4], u64) -> Result<BigUint>,
{
    if max_order > DEFAULT_ORDER_BOUND {
        return Err(Error::ResourceLimit {
            order: max_order,
            bound: DEFAULT_ORDER_BOUND,
        });
    }
    let mut report = VerifyReport {
        max_order,
        ..Default::default()
    };
    for moduli in canonical_tuples(max_order) {
        let census = enumerate_subgroups(&FiniteAbelianGroup::new(moduli.to_vec())?)?;
        report.groups += 1;

        let formula = total(moduli)?;
        report.comparisons += 1;
        if formula != BigUint::from(census.total) {
            report.first_disagreement = Some(Disagreement {
                moduli,
                order: None,
                oracle: census.total,
                formula,
            });
            return Ok(report);
        }

        for k in divisors(moduli.iter().product())? {
            let oracle = census.by_order.get(&k).copied().unwrap_or(0);
            let formula = by_order(moduli, k)?;
            report.comparisons += 1;
            if formula != BigUint::from(oracle) {
                report.first_disagreement = Some(Disagreement {
                    moduli,
                    order: Some(k),
                    oracle,
                    formula,
                });
                return Ok(report);
            }
        }
    }
    Ok(report)
}

/// [`verify_with`] against the direct rank-four engine.
pub fn verify(max_order: u64) -> Result<VerifyReport> {
    use subcount::rank4::{count_rank4, count_rank4_order};
    verify_with(
        max_order,
        |[m, n, r, s]| count_rank4(m, n, r, s),
        |[m, n, r, s], k| count_rank4_order(m, n, r, s, k),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use subcount::rank4::count_rank4_order;

    #[test]
    fn canonical_tuples_are_sorted_and_bounded() {
        assert_eq!(canonical_tuples(1), vec![[1, 1, 1, 1]]);
        let t = canonical_tuples(16);
        assert!(t.contains(&[2, 2, 2, 2]));
        assert!(t
            .iter()
            .all(|x| x.windows(2).all(|w| w[0] <= w[1]) && x.iter().product::<u64>() <= 16));
        // number of multisets of four positive integers with product <= 16
        let brute = (1..=16u64)
            .flat_map(|a| {
                (a..=16).flat_map(move |b| {
                    (b..=16).flat_map(move |c| (c..=16).map(move |d| [a, b, c, d]))
                })
            })
            .filter(|x| x.iter().product::<u64>() <= 16)
            .count();
        assert_eq!(t.len(), brute);
    }

    #[test]
    fn small_ranges_pass() {
        let r = verify(1).unwrap();
        assert!(r.pass());
        assert_eq!(r.groups, 1);
        let r = verify(16).unwrap();
        assert!(r.pass());
    }

    #[test]
    fn wrong_formula_is_reported() {
        let r = verify_with(
            8,
            |[m, n, r, s]| subcount::rank4::count_rank4(m, n, r, s).map(|c| c + 1u8),
            |[m, n, r, s], k| count_rank4_order(m, n, r, s, k),
        )
        .unwrap();
        let d = r.first_disagreement.unwrap();
        assert_eq!(d.moduli, [1, 1, 1, 1]);
        assert_eq!(d.order, None);
        assert_eq!((d.oracle, d.formula), (1, BigUint::from(2u8)));
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(verify(257), Err(Error::ResourceLimit { .. })));
    }
}

use num_bigint::BigUint;
use subcount::numth::divisors;
use subcount::oracle::{enumerate_subgroups, FiniteAbelianGroup};
use subcount::rank4::{count_rank4, count_rank4_order};

#[test]
fn formulas_match_census_up_to_order_64() {
    let mut groups = 0;
    for m in 1..=64u64 {
        for n in 1..=64 / m {
            for r in 1..=64 / (m * n) {
                for s in 1..=64 / (m * n * r) {
                    let census =
                        enumerate_subgroups(&FiniteAbelianGroup::new(vec![m, n, r, s]).unwrap())
                            .unwrap();
                    assert_eq!(
                        count_rank4(m, n, r, s).unwrap(),
                        BigUint::from(census.total),
                        "({m},{n},{r},{s})"
                    );
                    for k in divisors(m * n * r * s).unwrap() {
                        let want = census.by_order.get(&k).copied().unwrap_or(0);
                        assert_eq!(
                            count_rank4_order(m, n, r, s, k).unwrap(),
                            BigUint::from(want),
                            "({m},{n},{r},{s};{k})"
                        );
                    }
                    groups += 1;
                }
            }
        }
    }
    assert!(groups > 1000);
}

#[test]
fn two_cubed_corner() {
    // Z_2 x Z_2 x Z_2 x Z_8: 7 + 5*2 + 8*4 + 9*8 + 3*16
    let census = enumerate_subgroups(&FiniteAbelianGroup::new(vec![2, 2, 2, 8]).unwrap()).unwrap();
    assert_eq!(census.total, 169);
    assert_eq!(count_rank4(2, 2, 2, 8).unwrap(), BigUint::from(169u32));
}

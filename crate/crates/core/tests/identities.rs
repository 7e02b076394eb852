use num_bigint::{BigInt, BigUint};
use subcount::goursat2::{count_rank2, count_rank2_order};
use subcount::numth::divisors;
use subcount::rank4::{
    count_rank4, count_rank4_order, count_via_primes, order_distribution, poly_order_distribution,
    poly_rank4, poly_rank4_order,
};

fn each_tuple(max: u64, mut f: impl FnMut(u64, u64, u64, u64)) {
    for m in 1..=max {
        for n in 1..=max {
            for r in 1..=max {
                for s in 1..=max {
                    f(m, n, r, s);
                }
            }
        }
    }
}

#[test]
fn direct_equals_prime_product() {
    each_tuple(8, |m, n, r, s| {
        assert_eq!(
            count_rank4(m, n, r, s).unwrap(),
            count_via_primes(m, n, r, s, None).unwrap()
        );
    });
    each_tuple(6, |m, n, r, s| {
        for k in divisors(m * n * r * s).unwrap() {
            assert_eq!(
                count_rank4_order(m, n, r, s, k).unwrap(),
                count_via_primes(m, n, r, s, Some(k)).unwrap(),
                "({m},{n},{r},{s};{k})"
            );
        }
    });
}

#[test]
fn order_counts_partition_and_are_dual() {
    each_tuple(8, |m, n, r, s| {
        let total = count_rank4(m, n, r, s).unwrap();
        let order = m * n * r * s;
        let dist = order_distribution(m, n, r, s).unwrap();
        assert_eq!(dist.values().sum::<BigUint>(), total);
        for k in divisors(order).unwrap() {
            let here = dist.get(&k).cloned().unwrap_or_default();
            let dual = dist.get(&(order / k)).cloned().unwrap_or_default();
            assert_eq!(here, dual, "({m},{n},{r},{s};{k})");
        }
    });
}

#[test]
fn rank_collapse() {
    for m in 1..=12 {
        for n in 1..=12 {
            let two = count_rank2(m, n).unwrap();
            assert_eq!(count_rank4(1, 1, m, n).unwrap(), two);
            assert_eq!(count_rank4(m, n, 1, 1).unwrap(), two);
            assert_eq!(count_rank4(m, 1, n, 1).unwrap(), two);
            for k in divisors(m * n).unwrap() {
                assert_eq!(
                    count_rank4_order(1, 1, m, n, k).unwrap(),
                    count_rank2_order(m, n, k).unwrap()
                );
            }
        }
    }
}

fn permutations() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                let d = 6 - (a + b + c) as isize;
                if a != b && b != c && a != c && (0..4).contains(&d) {
                    out.push([a, b, c, d as usize]);
                }
            }
        }
    }
    out
}

#[test]
fn permutation_invariance() {
    let perms = permutations();
    assert_eq!(perms.len(), 24);
    each_tuple(4, |m, n, r, s| {
        let args = [m, n, r, s];
        let base = order_distribution(m, n, r, s).unwrap();
        for p in &perms {
            let q = p.map(|i| args[i]);
            assert_eq!(
                order_distribution(q[0], q[1], q[2], q[3]).unwrap(),
                base,
                "{args:?} -> {q:?}"
            );
        }
    });
}

#[test]
fn polynomials_evaluate_to_integer_counts() {
    for p in [2u64, 3, 5] {
        for a in 0..=3u32 {
            for b in 0..=3 {
                for c in 0..=3 {
                    for d in 0..=3 {
                        let [pa, pb, pc, pd] = [a, b, c, d].map(|e| p.pow(e));
                        let total = BigInt::from(count_rank4(pa, pb, pc, pd).unwrap());
                        assert_eq!(
                            poly_rank4(a, b, c, d).eval(p),
                            total,
                            "p={p} ({a},{b},{c},{d})"
                        );
                        let dist = poly_order_distribution(a, b, c, d);
                        for (k, row) in dist.iter().enumerate() {
                            let want = BigInt::from(
                                count_rank4_order(pa, pb, pc, pd, p.pow(k as u32)).unwrap(),
                            );
                            assert_eq!(row.eval(p), want, "p={p} ({a},{b},{c},{d};{k})");
                            assert_eq!(*row, poly_rank4_order(a, b, c, d, k as u32).unwrap());
                        }
                    }
                }
            }
        }
    }
}

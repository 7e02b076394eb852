//! Independent ground truth for the counting formulas.
//!
//! Nothing here uses the Goursat parametrization to count: subgroups are found
//! by brute-force closure over element sets, and invariant factors come from
//! Smith normal forms of integer relation matrices.

mod census;
mod snf;

pub use census::{
    automorphism_count_bruteforce, enumerate_subgroups, enumerate_subgroups_bounded, subgroups,
    ElementSubgroup, FiniteAbelianGroup, SubgroupCensus, DEFAULT_ORDER_BOUND,
};
pub use snf::{smith_normal_form, smith_with_transforms, SmithForm};

use crate::goursat2::{AbelianPair, SubgroupDescriptor};

fn pair_from_diagonal(diag: &[u64]) -> AbelianPair {
    debug_assert_eq!(diag.len(), 2);
    AbelianPair {
        first: diag[0],
        second: diag[1],
    }
}

/// Invariant factors of `(Z_m x Z_n) / K` read off the Smith normal form of
/// the relation matrix whose rows are the generators of `K` together with
/// `(m, 0)` and `(0, n)`.
pub fn quotient_structure_oracle(desc: &SubgroupDescriptor) -> AbelianPair {
    let (m, n) = desc.moduli();
    let [g1, g2] = desc.generators();
    let rows = vec![
        vec![g1.0 as i64, g1.1 as i64],
        vec![g2.0 as i64, g2.1 as i64],
        vec![m as i64, 0],
        vec![0, n as i64],
    ];
    pair_from_diagonal(&smith_normal_form(&rows))
}

/// Invariant factors of the subgroup `K` itself.
///
/// `K` is the image of `Z^2` under `x -> x1*g1 + x2*g2`, so `K ~ Z^2 / L` with
/// `L` the lattice of coefficient vectors landing in `mZ x nZ`. `L` is the
/// projection of the integer kernel of `[g1 g2 (m,0) (0,n)]`, found from the
/// column transform of a Smith decomposition.
pub fn subgroup_structure_oracle(desc: &SubgroupDescriptor) -> AbelianPair {
    let (m, n) = desc.moduli();
    let [g1, g2] = desc.generators();
    let map = vec![
        vec![g1.0 as i64, g2.0 as i64, m as i64, 0],
        vec![g1.1 as i64, g2.1 as i64, 0, n as i64],
    ];
    let sf = smith_with_transforms(&map);
    let rank = sf.rank();
    let lattice: Vec<Vec<i64>> = (rank..4)
        .map(|col| vec![sf.right[0][col] as i64, sf.right[1][col] as i64])
        .collect();
    pair_from_diagonal(&smith_normal_form(&lattice))
}

use std::collections::{BTreeMap, HashSet, VecDeque};

use crate::error::{invalid, Error, Result};

/// Groups larger than this are refused by [`enumerate_subgroups`].
pub const DEFAULT_ORDER_BOUND: u64 = 256;

/// Hard ceiling for any bound; the addition table is `order^2` entries.
const MAX_ORDER: u64 = 4096;

/// Direct product of cyclic groups `Z_{moduli[0]} x Z_{moduli[1]} x ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteAbelianGroup {
    moduli: Vec<u64>,
}

impl FiniteAbelianGroup {
    pub fn new(moduli: Vec<u64>) -> Result<Self> {
        if moduli.contains(&0) {
            return invalid(format!("moduli must be positive, got {moduli:?}"));
        }
        Ok(Self { moduli })
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    /// `None` on overflow.
    pub fn order(&self) -> Option<u64> {
        self.moduli
            .iter()
            .try_fold(1u64, |acc, &m| acc.checked_mul(m))
    }
}

/// A subgroup as the sorted list of its elements, each a residue tuple.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSubgroup {
    pub elements: Vec<Vec<u64>>,
}

impl ElementSubgroup {
    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SubgroupCensus {
    pub by_order: BTreeMap<u64, u64>,
    pub total: u64,
}

/// Element indices in mixed radix with a precomputed addition table.
struct Arena {
    moduli: Vec<u64>,
    order: usize,
    add: Vec<u16>,
}

impl Arena {
    fn new(g: &FiniteAbelianGroup, order: usize) -> Self {
        let moduli = g.moduli.clone();
        let coords: Vec<Vec<u64>> = (0..order).map(|i| decode(&moduli, i)).collect();
        let mut add = vec![0u16; order * order];
        for i in 0..order {
            for j in 0..order {
                let sum: Vec<u64> = coords[i]
                    .iter()
                    .zip(&coords[j])
                    .zip(&moduli)
                    .map(|((a, b), m)| (a + b) % m)
                    .collect();
                add[i * order + j] = encode(&moduli, &sum) as u16;
            }
        }
        Self { moduli, order, add }
    }

    fn sum(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    fn words(&self) -> usize {
        self.order.div_ceil(64)
    }
}

fn decode(moduli: &[u64], mut idx: usize) -> Vec<u64> {
    moduli
        .iter()
        .map(|&m| {
            let r = idx as u64 % m;
            idx /= m as usize;
            r
        })
        .collect()
}

fn encode(moduli: &[u64], coords: &[u64]) -> usize {
    moduli
        .iter()
        .zip(coords)
        .rev()
        .fold(0usize, |acc, (&m, &c)| acc * m as usize + c as usize)
}

type Bits = Vec<u64>;

fn has(bits: &Bits, i: usize) -> bool {
    bits[i / 64] >> (i % 64) & 1 == 1
}

fn set(bits: &mut Bits, i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

fn members(bits: &Bits) -> Vec<usize> {
    let mut out = Vec::new();
    for (w, &word) in bits.iter().enumerate() {
        let mut word = word;
        while word != 0 {
            out.push(w * 64 + word.trailing_zeros() as usize);
            word &= word - 1;
        }
    }
    out
}

fn is_closed(arena: &Arena, bits: &Bits) -> bool {
    let els = members(bits);
    has(bits, 0)
        && els
            .iter()
            .all(|&a| els.iter().all(|&b| has(bits, arena.sum(a, b))))
}

/// `<H, g>`: in an abelian group this is the union of the cosets
/// `H + i*g` for `0 <= i < [<H, g> : H]`.
fn join(arena: &Arena, h: &Bits, h_elems: &[usize], g: usize) -> Bits {
    let mut out = h.clone();
    let mut step = g;
    while !has(h, step) {
        for &x in h_elems {
            set(&mut out, arena.sum(x, step));
        }
        step = arena.sum(step, g);
    }
    out
}

fn census_bits(g: &FiniteAbelianGroup, bound: u64) -> Result<(Arena, Vec<Bits>)> {
    let order = g.order().ok_or(Error::ResourceLimit {
        order: u64::MAX,
        bound,
    })?;
    let bound = bound.min(MAX_ORDER);
    if order > bound {
        return Err(Error::ResourceLimit { order, bound });
    }
    let arena = Arena::new(g, order as usize);

    let mut trivial = vec![0u64; arena.words()];
    set(&mut trivial, 0);
    let mut seen: HashSet<Bits> = HashSet::from([trivial.clone()]);
    let mut found = vec![trivial.clone()];
    let mut queue = VecDeque::from([trivial]);

    while let Some(h) = queue.pop_front() {
        let h_elems = members(&h);
        // <H, g> depends only on the coset g + H.
        let mut covered = h.clone();
        for g in 0..arena.order {
            if has(&covered, g) {
                continue;
            }
            for &x in &h_elems {
                set(&mut covered, arena.sum(x, g));
            }
            let joined = join(&arena, &h, &h_elems, g);
            if seen.insert(joined.clone()) {
                debug_assert!(is_closed(&arena, &joined), "join produced a non-subgroup");
                found.push(joined.clone());
                queue.push_back(joined);
            }
        }
    }
    Ok((arena, found))
}

/// Every subgroup of `g` as an element set, found by breadth-first closure
/// from the trivial subgroup.
pub fn subgroups(g: &FiniteAbelianGroup) -> Result<Vec<ElementSubgroup>> {
    let (arena, found) = census_bits(g, DEFAULT_ORDER_BOUND)?;
    let mut out: Vec<ElementSubgroup> = found
        .iter()
        .map(|bits| ElementSubgroup {
            elements: {
                let mut els: Vec<Vec<u64>> = members(bits)
                    .into_iter()
                    .map(|i| decode(&arena.moduli, i))
                    .collect();
                els.sort();
                els
            },
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Census of all subgroups of `g` by order, refusing groups above
/// [`DEFAULT_ORDER_BOUND`].
pub fn enumerate_subgroups(g: &FiniteAbelianGroup) -> Result<SubgroupCensus> {
    enumerate_subgroups_bounded(g, DEFAULT_ORDER_BOUND)
}

pub fn enumerate_subgroups_bounded(g: &FiniteAbelianGroup, bound: u64) -> Result<SubgroupCensus> {
    let (_, found) = census_bits(g, bound)?;
    let mut census = SubgroupCensus::default();
    for bits in &found {
        let order = bits.iter().map(|w| u64::from(w.count_ones())).sum();
        *census.by_order.entry(order).or_default() += 1;
        census.total += 1;
    }
    Ok(census)
}

/// Automorphisms of `Z_m x Z_n` counted by trying every pair of images for
/// the two standard generators. Only sensible for small `m*n`.
pub fn automorphism_count_bruteforce(m: u64, n: u64) -> u64 {
    let elems: Vec<(u64, u64)> = (0..m).flat_map(|x| (0..n).map(move |y| (x, y))).collect();
    let killed_by = |k: u64| -> Vec<(u64, u64)> {
        elems
            .iter()
            .copied()
            .filter(|&(x, y)| (k * x) % m == 0 && (k * y) % n == 0)
            .collect()
    };
    let (img1, img2) = (killed_by(m), killed_by(n));
    let size = (m * n) as usize;
    let mut count = 0;
    let mut hit = vec![false; size];
    for &(ax, ay) in &img1 {
        for &(bx, by) in &img2 {
            hit.iter_mut().for_each(|h| *h = false);
            let mut distinct = 0;
            for i in 0..m {
                for j in 0..n {
                    let x = (i * ax + j * bx) % m;
                    let y = (i * ay + j * by) % n;
                    let idx = (x * n + y) as usize;
                    if !hit[idx] {
                        hit[idx] = true;
                        distinct += 1;
                    }
                }
            }
            if distinct == size {
                count += 1;
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn census(moduli: &[u64]) -> SubgroupCensus {
        enumerate_subgroups(&FiniteAbelianGroup::new(moduli.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        let c = census(&[2, 2]);
        assert_eq!(c.by_order, BTreeMap::from([(1, 1), (2, 3), (4, 1)]));
        assert_eq!(c.total, 5);
        assert_eq!(census(&[2, 2, 2, 2]).total, 67);
        let c = census(&[1]);
        assert_eq!(c.by_order, BTreeMap::from([(1, 1)]));
        assert_eq!(census(&[]).total, 1);
    }

    #[test]
    fn cyclic_groups_have_one_subgroup_per_divisor() {
        for n in 1..=60u64 {
            let c = census(&[n]);
            let divs = crate::numth::divisors(n).unwrap();
            assert_eq!(c.total, divs.len() as u64);
            assert!(divs.iter().all(|d| c.by_order.get(d) == Some(&1)));
        }
    }

    #[test]
    fn bound_is_enforced() {
        let g = FiniteAbelianGroup::new(vec![16, 17]).unwrap();
        assert_eq!(
            enumerate_subgroups(&g),
            Err(Error::ResourceLimit {
                order: 272,
                bound: 256
            })
        );
        assert!(enumerate_subgroups_bounded(&g, 300).is_ok());
        assert!(FiniteAbelianGroup::new(vec![2, 0]).is_err());
    }

    #[test]
    fn listed_subgroups_are_closed_and_distinct() {
        for moduli in [vec![2, 4], vec![3, 3, 2], vec![2, 2, 2, 2], vec![6, 4]] {
            let g = FiniteAbelianGroup::new(moduli.clone()).unwrap();
            let subs = subgroups(&g).unwrap();
            assert_eq!(subs.len() as u64, enumerate_subgroups(&g).unwrap().total);
            for s in &subs {
                let set: HashSet<&Vec<u64>> = s.elements.iter().collect();
                assert!(set.contains(&vec![0; moduli.len()]));
                for a in &s.elements {
                    for b in &s.elements {
                        let sum: Vec<u64> = a
                            .iter()
                            .zip(b)
                            .zip(&moduli)
                            .map(|((x, y), m)| (x + y) % m)
                            .collect();
                        assert!(set.contains(&sum));
                    }
                }
            }
            assert!(subs.windows(2).all(|w| w[0] != w[1]));
        }
    }

    #[test]
    fn order_256_is_within_reach() {
        assert_eq!(census(&[4, 4, 4, 4]).total, 1983);
    }

    #[test]
    fn automorphisms_of_small_groups() {
        assert_eq!(automorphism_count_bruteforce(1, 1), 1);
        assert_eq!(automorphism_count_bruteforce(1, 8), 4);
        assert_eq!(automorphism_count_bruteforce(2, 2), 6);
        assert_eq!(automorphism_count_bruteforce(3, 3), 48);
    }
}

//! Cross-intersecting sum and product optima, `β`, and the direct tuple
//! enumeration oracles they are checked against.
//!
//! Sub-families of a family with `m` members are `m`-bit masks over member
//! indices; index order is word order, so comparing index lists compares
//! families in canonical order.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{largest_intersecting, SolveError};
use crate::family::{KernelSplit, SetFamily};
use crate::rational::ExactRational;

/// Cap on family size for exhaustive sub-family scans.
pub const MAX_SCAN_MEMBERS: usize = 24;

/// Default cap on the number of k-tuples the naive oracles may visit.
pub const DEFAULT_TUPLE_BUDGET: u64 = 1 << 24;

fn scan_guard(f: &SetFamily) -> Result<(), SolveError> {
    if f.len() > MAX_SCAN_MEMBERS {
        Err(SolveError::TooManyMembers { members: f.len(), cap: MAX_SCAN_MEMBERS })
    } else {
        Ok(())
    }
}

fn k_guard(k: u32) -> Result<(), SolveError> {
    if k < 2 {
        Err(SolveError::InvalidK(k))
    } else {
        Ok(())
    }
}

/// `disj[i]`: mask of members disjoint from member `i` (itself too, if empty).
fn disjointness(f: &SetFamily) -> Vec<u32> {
    let m = f.members();
    m.iter()
        .map(|&a| {
            m.iter()
                .enumerate()
                .filter(|(_, &b)| !a.intersects(b))
                .fold(0u32, |acc, (j, _)| acc | 1 << j)
        })
        .collect()
}

fn bits(mut s: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if s == 0 {
            None
        } else {
            let i = s.trailing_zeros() as usize;
            s &= s - 1;
            Some(i)
        }
    })
}

/// Members of `s` meeting every member of `s`.
fn kernel_mask(disj: &[u32], s: u32) -> u32 {
    bits(s).filter(|&i| disj[i] & s == 0).fold(0, |acc, i| acc | 1 << i)
}

/// Lexicographic order of the sorted index lists of two masks.
fn lex_less(s: u32, t: u32) -> bool {
    let diff = s ^ t;
    if diff == 0 {
        return false;
    }
    let d = diff.trailing_zeros();
    let above = |x: u32| (x as u64) >> (d + 1) != 0;
    if s >> d & 1 == 1 {
        above(t)
    } else {
        !above(s)
    }
}

fn full_mask(f: &SetFamily) -> u32 {
    ((1u64 << f.len()) - 1) as u32
}

/// Kernel sizes of sub-families addressed by member-index masks.
#[derive(Debug, Clone)]
pub struct SubfamilyScanner {
    disj: Vec<u32>,
    full: u32,
}

impl SubfamilyScanner {
    pub fn new(f: &SetFamily) -> Result<Self, SolveError> {
        scan_guard(f)?;
        Ok(SubfamilyScanner { disj: disjointness(f), full: full_mask(f) })
    }

    /// Mask selecting every member.
    pub fn full_mask(&self) -> u32 {
        self.full
    }

    /// `(|A*|, |A'|)` for the sub-family `A` selected by `mask`.
    pub fn kernel_sizes(&self, mask: u32) -> (u32, u32) {
        let kernel = kernel_mask(&self.disj, mask).count_ones();
        (kernel, mask.count_ones() - kernel)
    }
}

/// `β(F)`: the largest `c ≤ l(F)/|F|` with `|A*| + c|A'| ≤ l(F)` for every
/// sub-family `A`.
pub fn beta(f: &SetFamily) -> Result<ExactRational, SolveError> {
    if f.is_empty() {
        return Err(SolveError::EmptyFamily);
    }
    scan_guard(f)?;
    let l = largest_intersecting(f).0 as i64;
    let disj = disjointness(f);
    // best_kernel[r]: largest |A*| over sub-families with |A'| = r
    let mut best_kernel = vec![-1i64; f.len() + 1];
    for s in 0..=full_mask(f) {
        let kernel = kernel_mask(&disj, s).count_ones();
        let residue = (s.count_ones() - kernel) as usize;
        best_kernel[residue] = best_kernel[residue].max(kernel as i64);
    }
    let mut best = ExactRational::new(l, f.len() as i64);
    for (r, &kmax) in best_kernel.iter().enumerate().skip(1) {
        if kmax >= 0 {
            let c = ExactRational::new(l - kmax, r as i64);
            if c < best {
                best = c;
            }
        }
    }
    Ok(best)
}

/// Maximum of `Σ|A_i|` over cross-intersecting k-tuples, with the union
/// family `A` that attains it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumOptimum {
    pub value: u64,
    pub k: u32,
    pub union: SetFamily,
    pub split: KernelSplit,
}

impl SumOptimum {
    /// `A_1 = A` and `A_2 = ... = A_k = A*`. Each kernel member meets every
    /// member of `A`, so the tuple is cross-intersecting with sum `k|A*| + |A'|`.
    pub fn assignment(&self) -> Vec<SetFamily> {
        let mut tuple = vec![self.union.clone()];
        tuple.extend(std::iter::repeat_n(self.split.kernel.clone(), self.k as usize - 1));
        tuple
    }
}

fn sum_value(disj: &[u32], s: u32, k: u32) -> u64 {
    let kernel = kernel_mask(disj, s).count_ones() as u64;
    let residue = s.count_ones() as u64 - kernel;
    k as u64 * kernel + residue
}

/// Exact maximum of `Σ|A_i|` over cross-intersecting `A_1, ..., A_k ⊆ H`.
///
/// With `A` the union of a tuple, members of distinct `A_i'` parts cannot
/// coincide (a shared member would be disjoint from a member of one of the
/// families containing it), so `Σ|A_i'| ≤ |A'|`, and each `A_i* ⊆ A*`,
/// giving `Σ|A_i| ≤ k|A*| + |A'|`. [`SumOptimum::assignment`] attains that
/// value, so the optimum is the maximum of `k|A*| + |A'|` over all `A ⊆ H`.
/// The witness is the lexicographically least attaining `A`.
pub fn max_cross_sum(h: &SetFamily, k: u32) -> Result<SumOptimum, SolveError> {
    k_guard(k)?;
    scan_guard(h)?;
    let disj = disjointness(h);
    let mut best_value = 0;
    let mut best_mask = 0u32;
    for s in 0..=full_mask(h) {
        let v = sum_value(&disj, s, k);
        if v > best_value || (v == best_value && lex_less(s, best_mask)) {
            best_value = v;
            best_mask = s;
        }
    }
    let union = h.select(best_mask as u64);
    let split = union.split_kernel();
    Ok(SumOptimum { value: best_value, k, union, split })
}

/// Every union family `A ⊆ H` attaining the optimum of [`max_cross_sum`],
/// in canonical order.
pub fn cross_sum_attainers(h: &SetFamily, k: u32) -> Result<(u64, Vec<SetFamily>), SolveError> {
    k_guard(k)?;
    scan_guard(h)?;
    let disj = disjointness(h);
    let mut best_value = 0;
    let mut masks = Vec::new();
    for s in 0..=full_mask(h) {
        let v = sum_value(&disj, s, k);
        if v > best_value {
            best_value = v;
            masks.clear();
        }
        if v == best_value {
            masks.push(s);
        }
    }
    masks.sort_by(|&a, &b| {
        if lex_less(a, b) {
            std::cmp::Ordering::Less
        } else if a == b {
            std::cmp::Ordering::Equal
        } else {
            std::cmp::Ordering::Greater
        }
    });
    Ok((best_value, masks.into_iter().map(|s| h.select(s as u64)).collect()))
}

pub fn tuple_count_log2(members: usize, k: u32) -> u64 {
    members as u64 * k as u64
}

fn tuple_guard(h: &SetFamily, k: u32, budget: u64) -> Result<(), SolveError> {
    let log2 = tuple_count_log2(h.len(), k);
    if log2 >= 64 || 1u64 << log2 > budget {
        Err(SolveError::TupleBudget { log2, budget })
    } else {
        Ok(())
    }
}

fn cross_ok(disj: &[u32], a: u32, b: u32) -> bool {
    bits(a).all(|i| disj[i] & b == 0)
}

fn visit_tuples(disj: &[u32], full: u32, k: usize, tuple: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
    if tuple.len() == k {
        visit(tuple);
        return;
    }
    for s in 0..=full {
        if tuple.iter().all(|&t| cross_ok(disj, s, t)) {
            tuple.push(s);
            visit_tuples(disj, full, k, tuple, visit);
            tuple.pop();
        }
    }
}

/// Calls `visit` with every cross-intersecting k-tuple of sub-families of
/// `h`, as member-index masks (see [`SetFamily::select`]). Visits all
/// `(2^|h|)^k` tuples directly, filtering pairwise.
pub fn for_each_cross_tuple(
    h: &SetFamily,
    k: u32,
    budget: u64,
    mut visit: impl FnMut(&[u32]),
) -> Result<(), SolveError> {
    k_guard(k)?;
    scan_guard(h)?;
    tuple_guard(h, k, budget)?;
    let disj = disjointness(h);
    let mut tuple = Vec::with_capacity(k as usize);
    visit_tuples(&disj, full_mask(h), k as usize, &mut tuple, &mut visit);
    Ok(())
}

pub fn naive_max_cross_sum(h: &SetFamily, k: u32) -> Result<u64, SolveError> {
    naive_max_cross_sum_with_budget(h, k, DEFAULT_TUPLE_BUDGET)
}

pub fn naive_max_cross_sum_with_budget(h: &SetFamily, k: u32, budget: u64) -> Result<u64, SolveError> {
    let mut best = 0u64;
    for_each_cross_tuple(h, k, budget, |t| {
        best = best.max(t.iter().map(|s| s.count_ones() as u64).sum());
    })?;
    Ok(best)
}

pub fn naive_max_cross_product(h: &SetFamily, k: u32, budget: u64) -> Result<BigUint, SolveError> {
    let mut best = BigUint::zero();
    for_each_cross_tuple(h, k, budget, |t| {
        let p = t.iter().fold(BigUint::one(), |acc, s| acc * s.count_ones());
        if p > best {
            best = p;
        }
    })?;
    Ok(best)
}

/// Result of the product optimizer: exact, or bracketed when nothing proves
/// the lower bound optimal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProductOptimum {
    Exact { value: BigUint, witness: Vec<SetFamily> },
    Interval { lower: BigUint, upper: BigUint, lower_witness: Vec<SetFamily> },
}

impl ProductOptimum {
    pub fn is_exact(&self) -> bool {
        matches!(self, ProductOptimum::Exact { .. })
    }

    pub fn lower(&self) -> &BigUint {
        match self {
            ProductOptimum::Exact { value, .. } => value,
            ProductOptimum::Interval { lower, .. } => lower,
        }
    }

    pub fn upper(&self) -> &BigUint {
        match self {
            ProductOptimum::Exact { value, .. } => value,
            ProductOptimum::Interval { upper, .. } => upper,
        }
    }

    pub fn witness(&self) -> &[SetFamily] {
        match self {
            ProductOptimum::Exact { witness, .. } => witness,
            ProductOptimum::Interval { lower_witness, .. } => lower_witness,
        }
    }
}

/// Maximum of `Π|A_i|`.
///
/// For `k = 2` this is exact: for a fixed `A_1` the best partner is every
/// member meeting all of `A_1`, so a scan over `A_1` suffices. For `k ≥ 3`
/// the value `l(H)^k` (all families equal to a largest intersecting family)
/// is certified optimal when the sum optimum equals `k·l(H)`, by AM-GM.
/// Otherwise the result is the interval `[l(H)^k, ⌊(S/k)^k⌋]` with `S` the
/// sum optimum.
pub fn max_cross_product(h: &SetFamily, k: u32) -> Result<ProductOptimum, SolveError> {
    k_guard(k)?;
    scan_guard(h)?;
    if k == 2 {
        let disj = disjointness(h);
        let full = full_mask(h);
        let mut best = (0u64, 0u32, 0u32);
        for a in 0..=full {
            let partner = (0..h.len())
                .filter(|&j| disj[j] & a == 0)
                .fold(0u32, |acc, j| acc | 1 << j);
            let p = a.count_ones() as u64 * partner.count_ones() as u64;
            if p > best.0 || (p == best.0 && lex_less(a, best.1)) {
                best = (p, a, partner);
            }
        }
        let witness = vec![h.select(best.1 as u64), h.select(best.2 as u64)];
        return Ok(ProductOptimum::Exact { value: BigUint::from(best.0), witness });
    }

    let (l, largest) = largest_intersecting(h);
    let sum = max_cross_sum(h, k)?.value;
    let lower = BigUint::from(l).pow(k);
    let lower_witness = vec![largest; k as usize];
    if sum == k as u64 * l as u64 {
        return Ok(ProductOptimum::Exact { value: lower, witness: lower_witness });
    }
    let upper = BigUint::from(sum).pow(k) / BigUint::from(k).pow(k);
    if upper == lower {
        Ok(ProductOptimum::Exact { value: lower, witness: lower_witness })
    } else {
        Ok(ProductOptimum::Interval { lower, upper, lower_witness })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{are_cross_intersecting, make_family, GroundSet};

    fn fam(n: u32, sets: &[&[u32]]) -> SetFamily {
        let sets: Vec<Vec<u32>> = sets.iter().map(|s| s.to_vec()).collect();
        make_family(n, &sets).unwrap()
    }

    fn power(n: u32) -> SetFamily {
        SetFamily::power_set(GroundSet::new(n).unwrap())
    }

    fn singles(n: u32) -> SetFamily {
        SetFamily::empty_and_singletons(GroundSet::new(n).unwrap())
    }

    /// β straight from its definition: scan every sub-family with explicit
    /// kernel splits and take the binding ratio.
    fn beta_by_definition(f: &SetFamily) -> ExactRational {
        let l = (0u64..1 << f.len())
            .map(|m| f.select(m))
            .filter(|s| s.is_intersecting())
            .map(|s| s.len())
            .max()
            .unwrap() as i64;
        let mut c = ExactRational::new(l, f.len() as i64);
        for m in 0u64..1 << f.len() {
            let split = f.select(m).split_kernel();
            if !split.residue.is_empty() {
                let r = ExactRational::new(l - split.kernel.len() as i64, split.residue.len() as i64);
                if r < c {
                    c = r;
                }
            }
        }
        c
    }

    #[test]
    fn lex_order_on_masks() {
        assert!(lex_less(0b01, 0b11)); // [0] < [0,1]
        assert!(lex_less(0b011, 0b101)); // [0,1] < [0,2]
        assert!(!lex_less(0b101, 0b011));
        assert!(lex_less(0b1111, 0b0010)); // [0,1,2,3] < [1]
        assert!(!lex_less(0b10, 0b10));
        let mut masks: Vec<u32> = (0..16).collect();
        masks.sort_by(|&a, &b| {
            let la: Vec<usize> = bits(a).collect();
            let lb: Vec<usize> = bits(b).collect();
            la.cmp(&lb)
        });
        for w in masks.windows(2) {
            assert!(lex_less(w[0], w[1]));
        }
    }

    #[test]
    fn beta_cases() {
        assert_eq!(beta(&singles(3)).unwrap(), ExactRational::new(1, 4));
        assert_eq!(beta(&power(2)).unwrap(), ExactRational::new(1, 2));
        assert_eq!(beta(&fam(2, &[&[]])).unwrap(), ExactRational::integer(0));
        assert_eq!(
            beta(&SetFamily::empty(GroundSet::new(2).unwrap())),
            Err(SolveError::EmptyFamily)
        );
        assert!(matches!(beta(&power(5)), Err(SolveError::TooManyMembers { .. })));
    }

    #[test]
    fn beta_matches_definition_scan() {
        let h = fam(3, &[&[1, 2], &[1, 3]]).hereditary_closure();
        for f in [power(2), singles(3), h, fam(3, &[&[1], &[2], &[1, 2], &[2, 3]]), power(3)] {
            assert_eq!(beta(&f).unwrap(), beta_by_definition(&f), "{f}");
        }
    }

    #[test]
    fn cross_sum_cases() {
        let opt = max_cross_sum(&power(2), 3).unwrap();
        assert_eq!(opt.value, 6);
        assert_eq!(opt.union, fam(2, &[&[1], &[1, 2]]));
        let tuple = opt.assignment();
        assert_eq!(tuple.len(), 3);
        assert!(are_cross_intersecting(&tuple).unwrap());
        assert_eq!(tuple.iter().map(|f| f.len() as u64).sum::<u64>(), opt.value);

        let h = singles(3);
        let (value, attainers) = cross_sum_attainers(&h, 4).unwrap();
        assert_eq!(value, 4);
        assert!(attainers.contains(&h));
        assert!(attainers.contains(&fam(3, &[&[1]])));
        assert_eq!(max_cross_sum(&h, 4).unwrap().union, h);

        assert_eq!(max_cross_sum(&power(3), 2).unwrap().value, 8);
        assert_eq!(max_cross_sum(&power(3), 1), Err(SolveError::InvalidK(1)));
    }

    #[test]
    fn naive_sum_cases() {
        assert_eq!(naive_max_cross_sum(&power(2), 2).unwrap(), 4);
        assert_eq!(naive_max_cross_sum(&singles(3), 2).unwrap(), 4);
        assert_eq!(naive_max_cross_sum(&fam(2, &[&[]]), 2).unwrap(), 1);
        assert!(matches!(
            naive_max_cross_sum(&power(3), 4),
            Err(SolveError::TupleBudget { log2: 32, .. })
        ));
    }

    #[test]
    fn product_cases() {
        let p = max_cross_product(&power(2), 2).unwrap();
        assert_eq!(p, ProductOptimum::Exact {
            value: BigUint::from(4u32),
            witness: vec![fam(2, &[&[1], &[1, 2]]), fam(2, &[&[1], &[1, 2]])],
        });
        assert_eq!(max_cross_product(&fam(2, &[&[]]), 2).unwrap().lower(), &BigUint::zero());

        let p = max_cross_product(&power(2), 3).unwrap();
        assert!(p.is_exact());
        assert_eq!(p.lower(), &BigUint::from(8u32));

        // Sum optimum 4 exceeds 3·l = 3, so only a bracket is available.
        let p = max_cross_product(&singles(3), 3).unwrap();
        assert_eq!(p.lower(), &BigUint::from(1u32));
        assert_eq!(p.upper(), &BigUint::from(2u32));
        assert!(!p.is_exact());
        assert_eq!(naive_max_cross_product(&singles(3), 3, DEFAULT_TUPLE_BUDGET).unwrap(), BigUint::from(1u32));
    }

    #[test]
    fn k2_product_matches_tuple_enumeration() {
        let h = fam(3, &[&[1, 2], &[1, 3]]).hereditary_closure();
        for f in [power(2), singles(3), h, power(3), fam(3, &[&[1, 2], &[3]]).hereditary_closure()] {
            let exact = max_cross_product(&f, 2).unwrap();
            let naive = naive_max_cross_product(&f, 2, DEFAULT_TUPLE_BUDGET).unwrap();
            assert_eq!(exact.lower(), &naive, "{f}");
            assert!(are_cross_intersecting(exact.witness()).unwrap());
            let sum = max_cross_sum(&f, 2).unwrap().value;
            // AM-GM: 4·product ≤ sum²
            assert!(naive * 4u32 <= BigUint::from(sum * sum));
        }
    }
}

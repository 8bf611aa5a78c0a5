//! Exact extremal quantities of a family: the largest intersecting
//! sub-family, stars, Berge pairings, `β`, and cross-intersecting sum and
//! product optima.

mod clique;
mod cross;
mod matching;

use thiserror::Error;

use crate::family::{Element, FamilyError, SetFamily, SubsetWord};

pub use cross::{
    beta, cross_sum_attainers, for_each_cross_tuple, max_cross_product, max_cross_sum,
    naive_max_cross_product, naive_max_cross_sum, naive_max_cross_sum_with_budget,
    tuple_count_log2, ProductOptimum, SubfamilyScanner, SumOptimum, DEFAULT_TUPLE_BUDGET, MAX_SCAN_MEMBERS,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("family is not hereditary")]
    NotHereditary,
    #[error("family must be non-empty")]
    EmptyFamily,
    #[error("family has {members} members; subfamily scans are capped at {cap}")]
    TooManyMembers { members: usize, cap: usize },
    #[error("tuple enumeration needs 2^{log2} tuples, budget is {budget}")]
    TupleBudget { log2: u64, budget: u64 },
    #[error("k must be at least 2 (got {0})")]
    InvalidK(u32),
    #[error("no Berge pairing found ({unmatched} members unmatched); this is a defect")]
    PairingFailed { unmatched: usize },
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// Size of a largest intersecting sub-family with one attaining witness.
pub fn largest_intersecting(f: &SetFamily) -> (usize, SetFamily) {
    let verts: Vec<SubsetWord> = f.iter().filter(|w| !w.is_empty()).collect();
    let mut adj = vec![clique::Bits::new(verts.len()); verts.len()];
    for (i, &a) in verts.iter().enumerate() {
        for (j, &b) in verts.iter().enumerate().skip(i + 1) {
            if a.intersects(b) {
                adj[i].set(j);
                adj[j].set(i);
            }
        }
    }
    let seed = match best_star(f).center {
        Some(x) => (0..verts.len()).filter(|&i| verts[i].contains(x)).collect(),
        None => Vec::new(),
    };
    let best = clique::max_clique(&adj, seed);
    let witness = SetFamily::from_sorted_unchecked(f.ground(), best.iter().map(|&i| verts[i]).collect());
    (witness.len(), witness)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BestStar {
    pub center: Option<Element>,
    pub size: usize,
}

/// Largest star over the support, smallest centre on ties.
pub fn best_star(f: &SetFamily) -> BestStar {
    let mut best = BestStar { center: None, size: 0 };
    for x in f.union_support().elements() {
        let size = f.iter().filter(|w| w.contains(x)).count();
        if size > best.size {
            best = BestStar { center: Some(x), size };
        }
    }
    best
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarProperty {
    pub holds: bool,
    /// Smallest `x` whose star is a largest intersecting sub-family.
    pub center: Option<Element>,
    pub largest_intersecting: usize,
    pub best_star: BestStar,
    /// A largest intersecting sub-family (the counterexample when `holds` is false).
    pub witness: SetFamily,
}

pub fn has_star_property(f: &SetFamily) -> StarProperty {
    let (l, witness) = largest_intersecting(f);
    let star = best_star(f);
    let holds = star.center.is_none() || star.size == l;
    let center = if star.size == l { star.center } else { None };
    StarProperty { holds, center, largest_intersecting: l, best_star: star, witness }
}

/// A partition of a hereditary family into disjoint pairs of disjoint sets,
/// plus `∅` on its own when the size is odd.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pairing {
    /// Each pair ordered `(smaller, larger)`, pairs sorted by first word.
    pub pairs: Vec<(SubsetWord, SubsetWord)>,
    pub leftover_empty: bool,
}

impl Pairing {
    /// Checks every invariant against `source`; `Err` describes the first violation.
    pub fn validate(&self, source: &SetFamily) -> Result<(), String> {
        let mut covered = Vec::with_capacity(source.len());
        for &(a, b) in &self.pairs {
            if a.intersects(b) {
                return Err(format!("pair ({a}, {b}) is not disjoint"));
            }
            covered.push(a);
            covered.push(b);
        }
        if self.leftover_empty {
            covered.push(SubsetWord::EMPTY);
        }
        if self.leftover_empty != (source.len() % 2 == 1) {
            return Err("leftover_empty must hold exactly when the family size is odd".into());
        }
        covered.sort_unstable();
        let total = covered.len();
        covered.dedup();
        if covered.len() != total {
            return Err("a set is used twice".into());
        }
        if covered != source.members() {
            return Err("pairs do not cover the family exactly".into());
        }
        Ok(())
    }
}

/// Berge pairing via maximum matching in the disjointness graph. For odd
/// size `∅` is set aside and the rest must match perfectly.
pub fn berge_pairing(h: &SetFamily) -> Result<Pairing, SolveError> {
    if !h.is_hereditary() {
        return Err(SolveError::NotHereditary);
    }
    let leftover_empty = h.len() % 2 == 1;
    let verts: Vec<SubsetWord> = if leftover_empty {
        h.iter().filter(|w| !w.is_empty()).collect()
    } else {
        h.iter().collect()
    };
    let mut adj = vec![Vec::new(); verts.len()];
    for (i, &a) in verts.iter().enumerate() {
        for (j, &b) in verts.iter().enumerate().skip(i + 1) {
            if !a.intersects(b) {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    let mates = matching::max_matching(&adj);
    let unmatched = mates.iter().filter(|m| m.is_none()).count();
    if unmatched > 0 {
        return Err(SolveError::PairingFailed { unmatched });
    }
    let pairs = mates
        .iter()
        .enumerate()
        .filter_map(|(i, m)| m.filter(|&j| i < j).map(|j| (verts[i], verts[j])))
        .collect();
    Ok(Pairing { pairs, leftover_empty })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{make_family, GroundSet};

    fn fam(n: u32, sets: &[&[u32]]) -> SetFamily {
        let sets: Vec<Vec<u32>> = sets.iter().map(|s| s.to_vec()).collect();
        make_family(n, &sets).unwrap()
    }

    fn power(n: u32) -> SetFamily {
        SetFamily::power_set(GroundSet::new(n).unwrap())
    }

    /// Enumerates every sub-family.
    fn naive_largest_intersecting(f: &SetFamily) -> usize {
        (0u64..1 << f.len())
            .map(|m| f.select(m))
            .filter(|s| s.is_intersecting())
            .map(|s| s.len())
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn largest_intersecting_cases() {
        let (l, w) = largest_intersecting(&power(3));
        assert_eq!(l, naive_largest_intersecting(&power(3)));
        assert_eq!(l, 4);
        assert!(w.is_intersecting() && w.is_subfamily_of(&power(3)));

        let (l, w) = largest_intersecting(&fam(3, &[&[], &[1], &[2], &[3]]));
        assert_eq!(l, 1);
        assert_eq!(w, fam(3, &[&[1]]));

        let tri = fam(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(largest_intersecting(&tri).0, 3);

        assert_eq!(largest_intersecting(&fam(3, &[&[]])).0, 0);
        assert_eq!(largest_intersecting(&SetFamily::empty(GroundSet::new(3).unwrap())).0, 0);
    }

    #[test]
    fn largest_intersecting_matches_naive_on_pseudo_random_families() {
        let g5 = GroundSet::new(5).unwrap();
        let mut state = 0x9e37_79b9_7f4a_7c15u64;
        for _ in 0..60 {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let words = (0..32u32).filter(|i| state >> (i + 16) & 1 == 1 && *i % 3 != 1).map(SubsetWord);
            let f = SetFamily::from_words(g5, words).unwrap();
            if f.len() <= 14 {
                assert_eq!(largest_intersecting(&f).0, naive_largest_intersecting(&f), "{f}");
            }
        }
    }

    #[test]
    fn best_star_cases() {
        assert_eq!(best_star(&power(3)), BestStar { center: Some(1), size: 4 });
        assert_eq!(best_star(&fam(2, &[&[], &[2]])), BestStar { center: Some(2), size: 1 });
        assert_eq!(best_star(&fam(2, &[&[]])), BestStar { center: None, size: 0 });
    }

    #[test]
    fn star_property_cases() {
        let tri = fam(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        let sp = has_star_property(&tri);
        assert!(!sp.holds);
        assert_eq!((sp.largest_intersecting, sp.best_star.size), (3, 2));
        assert_eq!(sp.center, None);

        let sp = has_star_property(&fam(2, &[&[]]));
        assert!(sp.holds);
        assert_eq!(sp.center, None);

        let sp = has_star_property(&power(4));
        assert!(sp.holds);
        assert_eq!((sp.center, sp.largest_intersecting), (Some(1), 8));
    }

    #[test]
    fn pairing_cases() {
        let p = berge_pairing(&power(2)).unwrap();
        assert!(!p.leftover_empty);
        let s = |e: &[u32]| SubsetWord::from_elements(GroundSet::new(2).unwrap(), e).unwrap();
        let mut pairs = p.pairs.clone();
        pairs.sort();
        assert_eq!(pairs, vec![(s(&[]), s(&[1, 2])), (s(&[1]), s(&[2]))]);
        p.validate(&power(2)).unwrap();

        let h = fam(2, &[&[], &[1], &[2]]);
        let p = berge_pairing(&h).unwrap();
        assert!(p.leftover_empty);
        assert_eq!(p.pairs, vec![(s(&[1]), s(&[2]))]);

        let p = berge_pairing(&fam(2, &[&[]])).unwrap();
        assert!(p.pairs.is_empty() && p.leftover_empty);

        assert_eq!(berge_pairing(&fam(2, &[&[1, 2]])), Err(SolveError::NotHereditary));
    }

    #[test]
    fn pairing_validator_rejects_bad_pairings() {
        let h = power(2);
        let s = |e: &[u32]| SubsetWord::from_elements(GroundSet::new(2).unwrap(), e).unwrap();
        let bad = Pairing { pairs: vec![(s(&[1]), s(&[1, 2])), (s(&[]), s(&[2]))], leftover_empty: false };
        assert!(bad.validate(&h).is_err());
        let short = Pairing { pairs: vec![(s(&[1]), s(&[2]))], leftover_empty: false };
        assert!(short.validate(&h).is_err());
        let odd_flag = Pairing { pairs: vec![(s(&[1]), s(&[2])), (s(&[]), s(&[1, 2]))], leftover_empty: true };
        assert!(odd_flag.validate(&h).is_err());
    }

    #[test]
    fn pairing_large_power_set() {
        let h = power(7);
        berge_pairing(&h).unwrap().validate(&h).unwrap();
    }
}

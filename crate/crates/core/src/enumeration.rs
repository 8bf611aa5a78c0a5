//! Exhaustive generation of hereditary families through their bases.
//!
//! A hereditary family is determined by its antichain of bases, so the
//! generators walk antichains of `2^[n]` depth-first in increasing word
//! order and take closures on demand. Yield order is lexicographic on the
//! sorted member words of the antichain.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::family::{Element, FamilyError, GroundSet, SetFamily, SubsetWord};

/// Largest `n` swept without opting in.
pub const MAX_SWEEP_N: u32 = 5;
/// Hard ceiling; `n = 6` needs `allow_large`.
pub const MAX_ENUM_N: u32 = 6;
/// Largest `n` for canonical keys (`n!` relabelings).
pub const MAX_KEY_N: u32 = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumError {
    #[error("n = {n} exceeds the enumeration budget (max {max}{hint})")]
    OutOfBudget { n: u32, max: u32, hint: &'static str },
    #[error("unknown filter atom `{0}`")]
    UnknownFilter(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// `comparable[w]`: words that are subsets or supersets of `w`, `w` included.
fn comparability(n: u32) -> Vec<u64> {
    let size = 1u32 << n;
    (0..size)
        .map(|w| {
            (0..size)
                .filter(|&v| v & w == v || v & w == w)
                .fold(0u64, |acc, v| acc | 1 << v)
        })
        .collect()
}

fn all_words(n: u32) -> u64 {
    if n == 6 {
        u64::MAX
    } else {
        (1u64 << (1u32 << n)) - 1
    }
}

/// Depth-first iterator over antichains of `2^[n]`.
#[derive(Debug, Clone)]
pub struct AntichainIter {
    ground: GroundSet,
    comparable: Vec<u64>,
    // frame i > 0 holds the untried extensions after current[i - 1]
    stack: Vec<u64>,
    current: Vec<u32>,
    pending: bool,
}

impl AntichainIter {
    fn check_n(n: u32, allow_large: bool) -> Result<GroundSet, EnumError> {
        let max = if allow_large { MAX_ENUM_N } else { MAX_SWEEP_N };
        if n > max {
            let hint = if allow_large || n > MAX_ENUM_N { "" } else { "; n = 6 needs the large-sweep flag" };
            return Err(EnumError::OutOfBudget { n, max, hint });
        }
        Ok(GroundSet::new(n)?)
    }

    pub fn new(n: u32, allow_large: bool) -> Result<Self, EnumError> {
        let ground = Self::check_n(n, allow_large)?;
        Ok(AntichainIter {
            ground,
            comparable: comparability(n),
            stack: vec![all_words(n)],
            current: Vec::new(),
            pending: true,
        })
    }

    /// Antichains whose smallest member is `first`. Together with the empty
    /// antichain, the partitions over all words cover every antichain once.
    pub fn with_first(n: u32, first: SubsetWord, allow_large: bool) -> Result<Self, EnumError> {
        let ground = Self::check_n(n, allow_large)?;
        ground.check_word(first)?;
        let comparable = comparability(n);
        let w = first.bits();
        let above = all_words(n) & !((1u64 << w) | ((1u64 << w) - 1));
        let child = above & !comparable[w as usize];
        Ok(AntichainIter { ground, comparable, stack: vec![0, child], current: vec![w], pending: true })
    }

    fn emit(&self) -> SetFamily {
        let words = self.current.iter().map(|&w| SubsetWord(w)).collect();
        SetFamily::from_sorted_unchecked(self.ground, words)
    }
}

impl Iterator for AntichainIter {
    type Item = SetFamily;

    fn next(&mut self) -> Option<SetFamily> {
        if self.pending {
            self.pending = false;
            return Some(self.emit());
        }
        loop {
            let top = self.stack.last_mut()?;
            if *top == 0 {
                self.stack.pop();
                if self.stack.is_empty() {
                    return None;
                }
                self.current.pop();
                continue;
            }
            let w = top.trailing_zeros();
            *top &= *top - 1;
            let child = *top & !self.comparable[w as usize];
            self.current.push(w);
            self.stack.push(child);
            return Some(self.emit());
        }
    }
}

pub fn enum_antichains(n: u32, allow_large: bool) -> Result<AntichainIter, EnumError> {
    AntichainIter::new(n, allow_large)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FilterAtom {
    Nonempty,
    /// `H ≠ {∅}`
    NotJustEmptySet,
    CompressedWrt(Element),
    BasesShareElement,
    LeftCompressed,
}

impl FilterAtom {
    fn accepts(self, bases: &SetFamily, h: &SetFamily) -> bool {
        match self {
            FilterAtom::Nonempty => !h.is_empty(),
            FilterAtom::NotJustEmptySet => h.len() != 1 || !h.members()[0].is_empty(),
            FilterAtom::CompressedWrt(x) => h.compressed_wrt_unchecked(x),
            FilterAtom::BasesShareElement => !bases.is_empty() && !bases.common_elements().is_empty(),
            FilterAtom::LeftCompressed => h.is_left_compressed(),
        }
    }
}

impl fmt::Display for FilterAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FilterAtom::Nonempty => f.write_str("nonempty"),
            FilterAtom::NotJustEmptySet => f.write_str("not-just-empty-set"),
            FilterAtom::CompressedWrt(x) => write!(f, "compressed-wrt({x})"),
            FilterAtom::BasesShareElement => f.write_str("bases-share-element"),
            FilterAtom::LeftCompressed => f.write_str("left-compressed"),
        }
    }
}

/// Conjunction of filter atoms; the empty filter accepts everything.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HereditaryFilter {
    pub atoms: Vec<FilterAtom>,
}

impl HereditaryFilter {
    pub fn accepts(&self, bases: &SetFamily, h: &SetFamily) -> bool {
        self.atoms.iter().all(|a| a.accepts(bases, h))
    }

    fn validate(&self, ground: GroundSet) -> Result<(), EnumError> {
        for a in &self.atoms {
            if let FilterAtom::CompressedWrt(x) = a {
                ground.check_element(*x)?;
            }
        }
        Ok(())
    }
}

impl FromStr for HereditaryFilter {
    type Err = EnumError;

    fn from_str(s: &str) -> Result<Self, EnumError> {
        let mut atoms = Vec::new();
        for raw in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let atom = match raw {
                "nonempty" => FilterAtom::Nonempty,
                "not-just-empty-set" => FilterAtom::NotJustEmptySet,
                "bases-share-element" => FilterAtom::BasesShareElement,
                "left-compressed" => FilterAtom::LeftCompressed,
                _ => {
                    let x = raw
                        .strip_prefix("compressed-wrt(")
                        .and_then(|r| r.strip_suffix(')'))
                        .and_then(|r| r.trim().parse::<u32>().ok())
                        .ok_or_else(|| EnumError::UnknownFilter(raw.to_string()))?;
                    FilterAtom::CompressedWrt(x)
                }
            };
            atoms.push(atom);
        }
        Ok(HereditaryFilter { atoms })
    }
}

impl fmt::Display for HereditaryFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.atoms.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// Hereditary families over `[n]` passing `filter`, in antichain order.
pub fn enum_hereditary(
    n: u32,
    filter: &HereditaryFilter,
    allow_large: bool,
) -> Result<impl Iterator<Item = SetFamily> + '_, EnumError> {
    let iter = enum_antichains(n, allow_large)?;
    filter.validate(GroundSet::new(n)?)?;
    Ok(iter.filter_map(move |bases| {
        let h = bases.hereditary_closure();
        filter.accepts(&bases, &h).then_some(h)
    }))
}

/// Minimal sorted word list over all relabelings of the ground set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    pub n: u32,
    pub words: Vec<u32>,
}

fn relabel(w: u32, image: &[u32]) -> u32 {
    SubsetWord(w).elements().fold(0, |acc, e| acc | 1 << image[e as usize - 1])
}

pub fn canonical_key(f: &SetFamily) -> Result<CanonicalKey, EnumError> {
    let n = f.n();
    if n > MAX_KEY_N {
        return Err(EnumError::OutOfBudget { n, max: MAX_KEY_N, hint: "" });
    }
    let mut perm: Vec<u32> = (0..n).collect();
    let mut best: Option<Vec<u32>> = None;
    let mut consider = |perm: &[u32]| {
        let mut words: Vec<u32> = f.iter().map(|w| relabel(w.bits(), perm)).collect();
        words.sort_unstable();
        if best.as_ref().is_none_or(|b| words < *b) {
            best = Some(words);
        }
    };
    // Heap's algorithm.
    let mut c = vec![0usize; n as usize];
    consider(&perm);
    let mut i = 0;
    while i < n as usize {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            consider(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(CanonicalKey { n, words: best.unwrap_or_default() })
}

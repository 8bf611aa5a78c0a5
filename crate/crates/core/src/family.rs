//! Finite set families over a ground set `[n] = {1, ..., n}`.
//!
//! A subset of `[n]` is stored as an `n`-bit word, element `i` at bit `i - 1`.
//! A [`SetFamily`] keeps its members strictly increasing by word value, so
//! membership is a binary search and two families are equal iff their member
//! lists are equal.

use std::fmt;

use thiserror::Error;

/// Largest supported ground-set size.
pub const MAX_GROUND: u32 = 20;

/// Element of the ground set, 1-based.
pub type Element = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("ground-set size {0} out of range 1..={MAX_GROUND}")]
    GroundOutOfRange(u32),
    #[error("element {element} out of range 1..={n}")]
    ElementOutOfRange { element: u32, n: u32 },
    #[error("word {word:#x} has bits outside the ground set of size {n}")]
    WordOutOfRange { word: u32, n: u32 },
    #[error("swap elements must differ (got {0} twice)")]
    SameElements(u32),
    #[error("families are over different ground sets ({0} vs {1})")]
    GroundMismatch(u32, u32),
    #[error("at least two families are required")]
    TooFewFamilies,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroundSet {
    n: u32,
}

impl GroundSet {
    pub fn new(n: u32) -> Result<Self, FamilyError> {
        if n == 0 || n > MAX_GROUND {
            return Err(FamilyError::GroundOutOfRange(n));
        }
        Ok(GroundSet { n })
    }

    pub fn size(self) -> u32 {
        self.n
    }

    /// The word with every element of `[n]` set.
    pub fn full(self) -> SubsetWord {
        SubsetWord((1u32 << self.n) - 1)
    }

    pub fn elements(self) -> impl Iterator<Item = Element> {
        1..=self.n
    }

    pub fn check_element(self, x: Element) -> Result<(), FamilyError> {
        if x == 0 || x > self.n {
            Err(FamilyError::ElementOutOfRange { element: x, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn check_word(self, w: SubsetWord) -> Result<(), FamilyError> {
        if w.0 & !self.full().0 != 0 {
            Err(FamilyError::WordOutOfRange { word: w.0, n: self.n })
        } else {
            Ok(())
        }
    }
}

/// A subset of the ground set as a bit word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SubsetWord(pub u32);

impl SubsetWord {
    pub const EMPTY: SubsetWord = SubsetWord(0);

    pub fn from_elements(ground: GroundSet, elements: &[Element]) -> Result<Self, FamilyError> {
        let mut bits = 0u32;
        for &e in elements {
            ground.check_element(e)?;
            bits |= 1 << (e - 1);
        }
        Ok(SubsetWord(bits))
    }

    pub fn singleton(x: Element) -> Self {
        SubsetWord(1 << (x - 1))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, x: Element) -> bool {
        self.0 >> (x - 1) & 1 == 1
    }

    pub fn intersects(self, other: SubsetWord) -> bool {
        self.0 & other.0 != 0
    }

    pub fn is_subset_of(self, other: SubsetWord) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: SubsetWord) -> SubsetWord {
        SubsetWord(self.0 | other.0)
    }

    pub fn intersection(self, other: SubsetWord) -> SubsetWord {
        SubsetWord(self.0 & other.0)
    }

    pub fn with(self, x: Element) -> SubsetWord {
        SubsetWord(self.0 | 1 << (x - 1))
    }

    pub fn without(self, x: Element) -> SubsetWord {
        SubsetWord(self.0 & !(1 << (x - 1)))
    }

    /// Elements in increasing order.
    pub fn elements(self) -> impl Iterator<Item = Element> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let e = rest.trailing_zeros() + 1;
                rest &= rest - 1;
                Some(e)
            }
        })
    }

    /// `(A \ {y}) ∪ {x}` when `y ∈ A` and `x ∉ A`, otherwise `A`.
    /// Callers guarantee `x != y` and both in range.
    pub fn shift(self, x: Element, y: Element) -> SubsetWord {
        if self.contains(y) && !self.contains(x) {
            self.without(y).with(x)
        } else {
            self
        }
    }
}

impl fmt::Display for SubsetWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.elements().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// Checked single-set swap over `ground`.
pub fn delta(
    ground: GroundSet,
    set: SubsetWord,
    x: Element,
    y: Element,
) -> Result<SubsetWord, FamilyError> {
    ground.check_element(x)?;
    ground.check_element(y)?;
    ground.check_word(set)?;
    if x == y {
        return Err(FamilyError::SameElements(x));
    }
    Ok(set.shift(x, y))
}

/// A duplicate-free family of subsets of `[n]`, members in increasing word order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetFamily {
    ground: GroundSet,
    members: Vec<SubsetWord>,
}

/// The `(A*, A')` split: members meeting every member, and the rest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelSplit {
    pub kernel: SetFamily,
    pub residue: SetFamily,
}

/// Build a family from element lists; duplicate sets collapse.
pub fn make_family(n: u32, sets: &[Vec<Element>]) -> Result<SetFamily, FamilyError> {
    let ground = GroundSet::new(n)?;
    let words = sets
        .iter()
        .map(|s| SubsetWord::from_elements(ground, s))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SetFamily::from_words_unchecked(ground, words))
}

impl SetFamily {
    pub fn empty(ground: GroundSet) -> Self {
        SetFamily { ground, members: Vec::new() }
    }

    /// The power set `2^[n]`.
    pub fn power_set(ground: GroundSet) -> Self {
        let members = (0..=ground.full().0).map(SubsetWord).collect();
        SetFamily { ground, members }
    }

    pub fn from_words(
        ground: GroundSet,
        words: impl IntoIterator<Item = SubsetWord>,
    ) -> Result<Self, FamilyError> {
        let words: Vec<_> = words.into_iter().collect();
        for &w in &words {
            ground.check_word(w)?;
        }
        Ok(Self::from_words_unchecked(ground, words))
    }

    /// Sorts and dedups; words must already be valid over `ground`.
    pub(crate) fn from_words_unchecked(ground: GroundSet, mut words: Vec<SubsetWord>) -> Self {
        words.sort_unstable();
        words.dedup();
        SetFamily { ground, members: words }
    }

    /// Words must be strictly increasing and valid over `ground`.
    pub(crate) fn from_sorted_unchecked(ground: GroundSet, words: Vec<SubsetWord>) -> Self {
        debug_assert!(words.windows(2).all(|w| w[0] < w[1]));
        SetFamily { ground, members: words }
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn n(&self) -> u32 {
        self.ground.n
    }

    pub fn members(&self) -> &[SubsetWord] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, w: SubsetWord) -> bool {
        self.members.binary_search(&w).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = SubsetWord> + '_ {
        self.members.iter().copied()
    }

    /// Subfamily of members selected by `keep`.
    pub fn filter(&self, mut keep: impl FnMut(SubsetWord) -> bool) -> SetFamily {
        let members = self.members.iter().copied().filter(|&w| keep(w)).collect();
        SetFamily { ground: self.ground, members }
    }

    /// Subfamily picked by a bitmask over member indices.
    pub fn select(&self, mask: u64) -> SetFamily {
        let members = self
            .members
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &w)| w)
            .collect();
        SetFamily { ground: self.ground, members }
    }

    pub fn is_subfamily_of(&self, other: &SetFamily) -> bool {
        self.ground == other.ground && self.iter().all(|w| other.contains(w))
    }

    pub fn union_support(&self) -> SubsetWord {
        SubsetWord(self.members.iter().fold(0, |acc, w| acc | w.0))
    }

    /// `{∅} ∪ {{1}, ..., {n}}`.
    pub fn empty_and_singletons(ground: GroundSet) -> SetFamily {
        let mut words = vec![SubsetWord::EMPTY];
        words.extend(ground.elements().map(SubsetWord::singleton));
        SetFamily::from_words_unchecked(ground, words)
    }

    /// Smallest hereditary family containing every member.
    pub fn hereditary_closure(&self) -> SetFamily {
        if self.is_empty() {
            return SetFamily::empty(self.ground);
        }
        let n = self.ground.n;
        let submask_work: u64 = self.iter().map(|w| 1u64 << w.len()).sum();
        let table_work = (n as u64) << n;
        if submask_work <= table_work {
            let mut words = Vec::with_capacity(submask_work as usize);
            for base in self.iter() {
                // Enumerate submasks of `base`, including 0.
                let b = base.0;
                let mut s = b;
                loop {
                    words.push(SubsetWord(s));
                    if s == 0 {
                        break;
                    }
                    s = (s - 1) & b;
                }
            }
            SetFamily::from_words_unchecked(self.ground, words)
        } else {
            let size = 1usize << n;
            let mut present = vec![false; size];
            for w in self.iter() {
                present[w.0 as usize] = true;
            }
            for bit in 0..n {
                let b = 1usize << bit;
                for w in (0..size).rev() {
                    if w & b != 0 && present[w] {
                        present[w ^ b] = true;
                    }
                }
            }
            let words = (0..size)
                .filter(|&w| present[w])
                .map(|w| SubsetWord(w as u32))
                .collect();
            SetFamily::from_sorted_unchecked(self.ground, words)
        }
    }

    /// Members not strictly contained in another member.
    pub fn bases(&self) -> SetFamily {
        let n = self.ground.n;
        let m = self.len() as u64;
        if m * m <= (n as u64) << n {
            return self.filter(|w| !self.iter().any(|v| v != w && w.is_subset_of(v)));
        }
        let size = 1usize << n;
        let mut present = vec![false; size];
        for w in self.iter() {
            present[w.0 as usize] = true;
        }
        // covered[w]: some member is a strict superset of w
        let mut covered = vec![false; size];
        for w in (0..size).rev() {
            for bit in 0..n {
                let b = 1usize << bit;
                if w & b == 0 && (present[w | b] || covered[w | b]) {
                    covered[w] = true;
                    break;
                }
            }
        }
        self.filter(|w| !covered[w.0 as usize])
    }

    /// Closed under taking subsets. Checking single-element removals suffices.
    pub fn is_hereditary(&self) -> bool {
        self.iter()
            .all(|w| w.elements().all(|e| self.contains(w.without(e))))
    }

    pub fn star(&self, x: Element) -> Result<SetFamily, FamilyError> {
        self.ground.check_element(x)?;
        Ok(self.star_unchecked(x))
    }

    pub(crate) fn star_unchecked(&self, x: Element) -> SetFamily {
        self.filter(|w| w.contains(x))
    }

    /// Every two members (a member with itself included) intersect.
    pub fn is_intersecting(&self) -> bool {
        let m = &self.members;
        for (i, &a) in m.iter().enumerate() {
            if a.is_empty() {
                return false;
            }
            if m[i + 1..].iter().any(|&b| !a.intersects(b)) {
                return false;
            }
        }
        true
    }

    /// All members share an element; vacuous for the empty family.
    pub fn is_centred(&self) -> bool {
        match self.members.split_first() {
            None => true,
            Some((&first, rest)) => rest.iter().fold(first, |acc, &w| acc.intersection(w)).0 != 0,
        }
    }

    /// Elements shared by every member; empty for the empty family.
    pub fn common_elements(&self) -> SubsetWord {
        match self.members.split_first() {
            None => SubsetWord::EMPTY,
            Some((&first, rest)) => rest.iter().fold(first, |acc, &w| acc.intersection(w)),
        }
    }

    pub fn is_compressed_wrt(&self, x: Element) -> Result<bool, FamilyError> {
        self.ground.check_element(x)?;
        Ok(self.compressed_wrt_unchecked(x))
    }

    pub(crate) fn compressed_wrt_unchecked(&self, x: Element) -> bool {
        if !self.union_support().contains(x) {
            return false;
        }
        self.iter()
            .filter(|w| !w.contains(x))
            .all(|w| w.elements().all(|y| self.contains(w.without(y).with(x))))
    }

    pub fn is_left_compressed(&self) -> bool {
        self.iter().all(|w| {
            w.elements().all(|j| {
                (1..j)
                    .filter(|&i| !w.contains(i))
                    .all(|i| self.contains(w.without(j).with(i)))
            })
        })
    }

    /// The compression `Δ_{x,y}`: each member moves to its shift unless the
    /// shift is already a member.
    pub fn compress(&self, x: Element, y: Element) -> Result<SetFamily, FamilyError> {
        self.ground.check_element(x)?;
        self.ground.check_element(y)?;
        if x == y {
            return Err(FamilyError::SameElements(x));
        }
        Ok(self.compress_unchecked(x, y))
    }

    pub(crate) fn compress_unchecked(&self, x: Element, y: Element) -> SetFamily {
        let words = self
            .iter()
            .map(|a| {
                let d = a.shift(x, y);
                if d != a && !self.contains(d) {
                    d
                } else {
                    a
                }
            })
            .collect();
        SetFamily::from_words_unchecked(self.ground, words)
    }

    pub fn split_kernel(&self) -> KernelSplit {
        let (kernel, residue): (Vec<_>, Vec<_>) = self
            .iter()
            .partition(|&a| self.iter().all(|b| a.intersects(b)));
        KernelSplit {
            kernel: SetFamily::from_sorted_unchecked(self.ground, kernel),
            residue: SetFamily::from_sorted_unchecked(self.ground, residue),
        }
    }

    pub fn kernel(&self) -> SetFamily {
        self.split_kernel().kernel
    }
}

impl KernelSplit {
    /// Checks the partition invariants against `source`.
    pub fn is_valid_for(&self, source: &SetFamily) -> bool {
        let mut all: Vec<_> = self.kernel.iter().chain(self.residue.iter()).collect();
        all.sort_unstable();
        let before = all.len();
        all.dedup();
        all.len() == before
            && all == source.members
            && self.kernel.is_intersecting()
            && self.residue.iter().all(|r| source.iter().any(|s| !r.intersects(s)))
            && self.kernel.iter().all(|a| source.iter().all(|b| a.intersects(b)))
    }
}

/// True iff every set of one family meets every set of each other family.
pub fn are_cross_intersecting(families: &[SetFamily]) -> Result<bool, FamilyError> {
    let Some(first) = families.first() else {
        return Err(FamilyError::TooFewFamilies);
    };
    if families.len() < 2 {
        return Err(FamilyError::TooFewFamilies);
    }
    for f in families {
        if f.ground != first.ground {
            return Err(FamilyError::GroundMismatch(first.n(), f.n()));
        }
    }
    for (i, a) in families.iter().enumerate() {
        for b in &families[i + 1..] {
            if a.iter().any(|x| b.iter().any(|y| !x.intersects(y))) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

impl fmt::Display for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, w) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str("}")
    }
}

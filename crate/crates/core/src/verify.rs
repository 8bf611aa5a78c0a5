//! One checker per proved statement or open conjecture, plus sweeps over
//! enumerated families.
//!
//! A checker errors only on malformed input. A violated conjecture is a
//! [`Verdict::Fail`] with a witness; a violated theorem is a
//! [`Verdict::Defect`], meaning this library is wrong somewhere.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::enumeration::{canonical_key, enum_hereditary, EnumError, HereditaryFilter};
use crate::family::{are_cross_intersecting, Element, GroundSet, SetFamily, SubsetWord};
use crate::rational::ExactRational;
use crate::solvers::{
    berge_pairing, best_star, cross_sum_attainers, for_each_cross_tuple, has_star_property,
    largest_intersecting, max_cross_product, max_cross_sum, tuple_count_log2,
    SolveError, SubfamilyScanner, MAX_SCAN_MEMBERS,
};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Enum(#[from] EnumError),
}

fn precondition(msg: impl Into<String>) -> VerifyError {
    VerifyError::Precondition(msg.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckName {
    Complemma,
    Berge,
    Bergecor,
    Bergeprop,
    Snevily,
    Chvatal,
    Result2,
    Mainthm2,
    Mainthm,
    Weaksum,
    Strongsum,
    Prodconj,
}

impl CheckName {
    pub const ALL: [CheckName; 12] = [
        CheckName::Complemma,
        CheckName::Berge,
        CheckName::Bergecor,
        CheckName::Bergeprop,
        CheckName::Snevily,
        CheckName::Chvatal,
        CheckName::Result2,
        CheckName::Mainthm2,
        CheckName::Mainthm,
        CheckName::Weaksum,
        CheckName::Strongsum,
        CheckName::Prodconj,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::Complemma => "complemma",
            CheckName::Berge => "berge",
            CheckName::Bergecor => "bergecor",
            CheckName::Bergeprop => "bergeprop",
            CheckName::Snevily => "snevily",
            CheckName::Chvatal => "chvatal",
            CheckName::Result2 => "result2",
            CheckName::Mainthm2 => "mainthm2",
            CheckName::Mainthm => "mainthm",
            CheckName::Weaksum => "weaksum",
            CheckName::Strongsum => "strongsum",
            CheckName::Prodconj => "prodconj",
        }
    }

    /// Open statements; violating these is a discovery, not a bug.
    pub fn is_conjecture(self) -> bool {
        matches!(
            self,
            CheckName::Chvatal | CheckName::Weaksum | CheckName::Strongsum | CheckName::Prodconj
        )
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        CheckName::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| format!("unknown check `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    /// A conjecture fails on this input.
    Fail,
    /// A proved statement fails on this input.
    Defect,
    Skipped(String),
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Defect => "defect",
            Verdict::Skipped(_) => "skipped",
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Params {
    pub x: Option<u32>,
    pub k: Option<u32>,
    pub i: Option<u32>,
    pub j: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub kind: String,
    pub families: Vec<(String, SetFamily)>,
}

impl Witness {
    fn new(kind: &str) -> Self {
        Witness { kind: kind.to_string(), families: Vec::new() }
    }

    fn with(mut self, label: impl Into<String>, f: SetFamily) -> Self {
        self.families.push((label.into(), f));
        self
    }

    fn tuple(kind: &str, tuple: &[SetFamily]) -> Self {
        let mut w = Witness::new(kind);
        for (i, f) in tuple.iter().enumerate() {
            w = w.with(format!("A{}", i + 1), f.clone());
        }
        w
    }

    pub fn family(&self, label: &str) -> Option<&SetFamily> {
        self.families.iter().find(|(l, _)| l == label).map(|(_, f)| f)
    }

    /// Families labelled `A1, A2, ...` in order.
    pub fn tuple_families(&self) -> Vec<SetFamily> {
        (1..)
            .map_while(|i| self.family(&format!("A{i}")).cloned())
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub check: CheckName,
    pub family: SetFamily,
    pub params: Params,
    pub verdict: Verdict,
    pub values: BTreeMap<String, String>,
    pub witness: Option<Witness>,
}

impl CheckResult {
    fn new(check: CheckName, family: &SetFamily, params: Params) -> Self {
        CheckResult {
            check,
            family: family.clone(),
            params,
            verdict: Verdict::Pass,
            values: BTreeMap::new(),
            witness: None,
        }
    }

    fn value(mut self, key: &str, v: impl ToString) -> Self {
        self.values.insert(key.to_string(), v.to_string());
        self
    }

    fn violation(mut self, witness: Witness) -> Self {
        self.verdict = if self.check.is_conjecture() { Verdict::Fail } else { Verdict::Defect };
        self.witness = Some(witness);
        self
    }

    fn skipped(mut self, reason: impl Into<String>) -> Self {
        self.verdict = Verdict::Skipped(reason.into());
        self
    }

    fn sort_key(&self) -> (&'static str, u32, &[SubsetWord], Params) {
        (self.check.as_str(), self.family.n(), self.family.members(), self.params)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budgets {
    /// Largest number of sub-families a check may scan.
    pub subsets: u64,
    /// Largest number of k-tuples a tuple-level audit may visit.
    pub tuples: u64,
    /// Random draws for sampled phases.
    pub samples: u64,
    pub seed: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets { subsets: 1 << 22, tuples: 1 << 24, samples: 4096, seed: 0 }
    }
}

impl Budgets {
    fn scan_fits(&self, f: &SetFamily) -> bool {
        f.len() <= MAX_SCAN_MEMBERS && 1u64 << f.len() <= self.subsets
    }

    fn tuples_fit(&self, f: &SetFamily, k: u32) -> bool {
        let log2 = tuple_count_log2(f.len(), k);
        f.len() <= MAX_SCAN_MEMBERS && log2 < 64 && 1u64 << log2 <= self.tuples
    }
}

fn require_hereditary(h: &SetFamily) -> Result<(), VerifyError> {
    if h.is_hereditary() {
        Ok(())
    } else {
        Err(precondition("family is not hereditary"))
    }
}

fn require_nontrivial(h: &SetFamily) -> Result<(), VerifyError> {
    require_hereditary(h)?;
    if h.is_empty() || *h == just_empty_set(h.ground()) {
        return Err(precondition("family must differ from ∅ and {∅}"));
    }
    Ok(())
}

fn require_compressed(h: &SetFamily, x: Element) -> Result<(), VerifyError> {
    require_hereditary(h)?;
    h.ground().check_element(x).map_err(|e| precondition(e.to_string()))?;
    if !h.compressed_wrt_unchecked(x) {
        return Err(precondition(format!("family is not compressed with respect to {x}")));
    }
    Ok(())
}

fn require_k(k: u32, min: u32) -> Result<(), VerifyError> {
    if k < min {
        Err(precondition(format!("k = {k} is below the admissible minimum {min}")))
    } else {
        Ok(())
    }
}

fn just_empty_set(ground: GroundSet) -> SetFamily {
    SetFamily::from_sorted_unchecked(ground, vec![SubsetWord::EMPTY])
}

fn single(ground: GroundSet, w: SubsetWord) -> SetFamily {
    SetFamily::from_sorted_unchecked(ground, vec![w])
}

fn big_pow(base: usize, k: u32) -> BigUint {
    BigUint::from(base).pow(k)
}

/// The four compression-kernel clauses for `B = Δ_{i,j}(A)`.
pub fn check_complemma(a: &SetFamily, i: Element, j: Element) -> Result<CheckResult, VerifyError> {
    let b = a.compress(i, j).map_err(|e| precondition(e.to_string()))?;
    let params = Params { i: Some(i), j: Some(j), ..Params::default() };
    let a_star = a.kernel();
    let b_star = b.kernel();
    let r = CheckResult::new(CheckName::Complemma, a, params)
        .value("kernel_a", a_star.len())
        .value("kernel_b", b_star.len());
    let ground = a.ground();
    let fail = |r: CheckResult, clause: &str, set: SubsetWord| {
        let w = Witness::new(clause)
            .with("A", a.clone())
            .with("B", b.clone())
            .with("set", single(ground, set));
        r.value("clause", clause).violation(w)
    };
    for s in a_star.iter() {
        if !b_star.contains(s.shift(i, j)) {
            return Ok(fail(r, "i", s));
        }
    }
    for s in a_star.iter().filter(|&s| !b_star.contains(s)) {
        if a_star.contains(s.shift(i, j)) {
            return Ok(fail(r, "ii", s));
        }
    }
    for s in b_star.iter() {
        if !b_star.contains(s.shift(i, j)) {
            return Ok(fail(r, "iii", s));
        }
    }
    if a_star.len() > b_star.len() {
        let w = Witness::new("iv").with("A", a.clone()).with("B", b.clone());
        return Ok(r.value("clause", "iv").violation(w));
    }
    Ok(r)
}

/// The pairing of a hereditary family validates.
pub fn check_berge(h: &SetFamily) -> Result<CheckResult, VerifyError> {
    require_hereditary(h)?;
    let r = CheckResult::new(CheckName::Berge, h, Params::default());
    match berge_pairing(h) {
        Ok(p) => match p.validate(h) {
            Ok(()) => Ok(r
                .value("pairs", p.pairs.len())
                .value("leftover_empty", p.leftover_empty)),
            Err(msg) => Ok(r.value("error", msg).violation(Witness::new("pairing").with("H", h.clone()))),
        },
        Err(SolveError::PairingFailed { unmatched }) => Ok(r
            .value("unmatched", unmatched)
            .violation(Witness::new("pairing").with("H", h.clone()))),
        Err(e) => Err(e.into()),
    }
}

/// `l(H) ≤ |H|/2`.
pub fn check_bergecor(h: &SetFamily) -> Result<CheckResult, VerifyError> {
    require_hereditary(h)?;
    let (l, witness) = largest_intersecting(h);
    let r = CheckResult::new(CheckName::Bergecor, h, Params::default())
        .value("l", l)
        .value("size", h.len());
    if 2 * l > h.len() {
        return Ok(r.violation(Witness::new("largest_intersecting").with("L", witness)));
    }
    Ok(r)
}

/// If the bases share `x`, then `|H⟨x⟩| = |H|/2`, for every shared `x`.
pub fn check_bergeprop(h: &SetFamily) -> Result<CheckResult, VerifyError> {
    require_hereditary(h)?;
    let bases = h.bases();
    let shared = if bases.is_empty() { SubsetWord::EMPTY } else { bases.common_elements() };
    let mut r = CheckResult::new(CheckName::Bergeprop, h, Params::default())
        .value("shared", shared)
        .value("size", h.len());
    for x in shared.elements() {
        let star = h.star_unchecked(x);
        if 2 * star.len() != h.len() {
            r = r.value("x", x);
            return Ok(r.violation(Witness::new("star").with("star", star)));
        }
    }
    Ok(r)
}

/// Compressed with respect to `x` implies the star property at `x`.
pub fn check_snevily(h: &SetFamily, x: Element) -> Result<CheckResult, VerifyError> {
    require_compressed(h, x)?;
    let star = h.star_unchecked(x).len();
    let (l, witness) = largest_intersecting(h);
    let r = CheckResult::new(CheckName::Snevily, h, Params { x: Some(x), ..Params::default() })
        .value("star", star)
        .value("l", l);
    if star != l {
        return Ok(r.violation(Witness::new("largest_intersecting").with("L", witness)));
    }
    Ok(r)
}

/// Every hereditary family has the star property.
pub fn check_chvatal(h: &SetFamily) -> Result<CheckResult, VerifyError> {
    require_hereditary(h)?;
    let sp = has_star_property(h);
    let mut r = CheckResult::new(CheckName::Chvatal, h, Params::default())
        .value("l", sp.largest_intersecting)
        .value("best_star", sp.best_star.size);
    if let Some(x) = sp.center {
        r = r.value("center", x);
    }
    if !sp.holds {
        return Ok(r.violation(Witness::new("largest_intersecting").with("L", sp.witness)));
    }
    Ok(r)
}

/// `Σ ≤ k|H|/2`, `Π ≤ (|H|/2)^k`, both attained by a shared-base star.
pub fn check_result2(h: &SetFamily, k: u32, budgets: &Budgets) -> Result<CheckResult, VerifyError> {
    require_hereditary(h)?;
    if h.is_empty() {
        return Err(precondition("family must be non-empty"));
    }
    require_k(k, 2)?;
    let r = CheckResult::new(CheckName::Result2, h, Params { k: Some(k), ..Params::default() });
    if !budgets.scan_fits(h) {
        return Ok(r.skipped("budget_subsets"));
    }
    let sum = max_cross_sum(h, k)?;
    let product = max_cross_product(h, k)?;
    let size = h.len();
    let mut r = r
        .value("max_sum", sum.value)
        .value("product_lower", product.lower())
        .value("product_upper", product.upper())
        .value("size", size);
    if 2 * sum.value > k as u64 * size as u64 {
        return Ok(r.value("bound", "sum").violation(Witness::tuple("sum_tuple", &sum.assignment())));
    }
    if product.upper() * BigUint::from(2u32).pow(k) > big_pow(size, k) {
        return Ok(r
            .value("bound", "product")
            .violation(Witness::tuple("product_tuple", product.witness())));
    }
    let bases = h.bases();
    for x in bases.common_elements().elements() {
        let star = h.star_unchecked(x).len();
        let attained = 2 * star == size
            && sum.value == k as u64 * star as u64
            && product.is_exact()
            && *product.lower() == big_pow(star, k);
        if !attained {
            r = r.value("x", x).value("bound", "attainment");
            return Ok(r.violation(Witness::new("star").with("star", h.star_unchecked(x))));
        }
    }
    Ok(r)
}

fn mix_seed(seed: u64, f: &SetFamily, extra: u64) -> u64 {
    f.iter()
        .fold(seed ^ (f.n() as u64) << 56 ^ extra, |acc, w| {
            (acc ^ w.bits() as u64).wrapping_mul(0x100_0000_01b3)
        })
}

/// `(n+1)|A*| + |A'| ≤ (n+1)|H⟨x⟩|` for every `A ⊆ H`, with equality under
/// `A' ≠ ∅` exactly when `A = H = {∅} ∪ singletons`.
pub fn check_mainthm2(h: &SetFamily, x: Element, budgets: &Budgets) -> Result<CheckResult, VerifyError> {
    require_compressed(h, x)?;
    let n1 = h.n() as u64 + 1;
    let star = h.star_unchecked(x).len() as u64;
    let special = *h == SetFamily::empty_and_singletons(h.ground());
    let (l, _) = largest_intersecting(h);
    let mut r = CheckResult::new(CheckName::Mainthm2, h, Params { x: Some(x), ..Params::default() })
        .value("star", star);

    let masks: Box<dyn Iterator<Item = u32>> = if budgets.scan_fits(h) {
        r = r.value("coverage", "exhaustive");
        Box::new(0..=SubfamilyScanner::new(h)?.full_mask())
    } else if h.len() <= MAX_SCAN_MEMBERS {
        r = r.value("coverage", "partial");
        let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(budgets.seed, h, x as u64));
        let full = SubfamilyScanner::new(h)?.full_mask();
        let draws: Vec<u32> = (0..budgets.samples).map(|_| rng.gen::<u32>() & full).collect();
        Box::new(draws.into_iter())
    } else {
        return Ok(r.skipped("family exceeds the sub-family scan cap"));
    };
    let scanner = SubfamilyScanner::new(h)?;
    let full = scanner.full_mask();
    let mut scanned = 0u64;
    let mut equality_seen = false;
    for mask in masks {
        scanned += 1;
        let (kernel, residue) = scanner.kernel_sizes(mask);
        let lhs = n1 * kernel as u64 + residue as u64;
        let rhs = n1 * star;
        let tight = lhs == rhs && residue > 0;
        // With no residue, equality says A is an intersecting family as large
        // as the star; that must be a largest one.
        let flat_tight_bad = lhs == rhs && residue == 0 && kernel as usize != l;
        if lhs > rhs || flat_tight_bad || (tight && !(special && mask == full)) {
            let what = if lhs > rhs {
                "inequality"
            } else if flat_tight_bad {
                "kernel_equality"
            } else {
                "equality"
            };
            return Ok(r
                .value("scanned", scanned)
                .value("failure", what)
                .violation(Witness::new(what).with("A", h.select(mask as u64))));
        }
        equality_seen |= tight;
    }
    r = r.value("scanned", scanned).value("equality_case", equality_seen);
    if special && !equality_seen && r.values["coverage"] == "exhaustive" {
        return Ok(r.value("failure", "missing_equality").violation(Witness::new("equality").with("A", h.clone())));
    }
    Ok(r)
}

/// For compressed `H` and `k ≥ n+1`: optima `k|S|` and `|S|^k`,
/// with the extremal configurations audited.
pub fn check_mainthm(h: &SetFamily, x: Element, k: u32, budgets: &Budgets) -> Result<CheckResult, VerifyError> {
    require_compressed(h, x)?;
    let n = h.n();
    require_k(k, n + 1)?;
    let r = CheckResult::new(CheckName::Mainthm, h, Params { x: Some(x), k: Some(k), ..Params::default() });
    if !budgets.scan_fits(h) {
        return Ok(r.skipped("budget_subsets"));
    }
    let star_family = h.star_unchecked(x);
    let star = star_family.len();
    let (l, _) = largest_intersecting(h);
    let (sum, attainers) = cross_sum_attainers(h, k)?;
    let product = max_cross_product(h, k)?;
    let special = *h == SetFamily::empty_and_singletons(h.ground());
    let mut r = r
        .value("star", star)
        .value("max_sum", sum)
        .value("product_lower", product.lower())
        .value("product_upper", product.upper())
        .value("attainers", attainers.len());

    if sum != k as u64 * star as u64 {
        return Ok(r.value("failure", "sum").violation(Witness::new("sum").with("star", star_family)));
    }
    if !product.is_exact() || *product.lower() != big_pow(star, k) {
        return Ok(r
            .value("failure", "product")
            .violation(Witness::tuple("product_tuple", product.witness())));
    }
    // Clause (a) at union level: every attaining union is a largest
    // intersecting family, or the singleton exception at k = n + 1.
    let exception_allowed = k == n + 1 && special;
    for a in &attainers {
        let ok = (a.len() == l && a.is_intersecting()) || (exception_allowed && a == h);
        if !ok {
            return Ok(r.value("failure", "clause_a").violation(Witness::new("clause_a").with("A", a.clone())));
        }
    }
    if !attainers.contains(&star_family) || (exception_allowed && !attainers.contains(h)) {
        return Ok(r.value("failure", "clause_a_missing").violation(Witness::new("clause_a").with("star", star_family)));
    }
    let mut w = Witness::new("extremal_configurations");
    for a in attainers.iter().take(16) {
        let label = if *a == star_family {
            "star".to_string()
        } else if a == h {
            "h_with_empties".to_string()
        } else {
            format!("union_{}", w.families.len())
        };
        w = w.with(label, a.clone());
    }
    r.witness = Some(w);

    // Clauses (a) and (b) at tuple level when the enumeration fits.
    if !budgets.tuples_fit(h, k) {
        return Ok(r.value("tuple_audit", "skipped"));
    }
    let sum_target = k as u64 * star as u64;
    let product_target = (star as u64).pow(k);
    let mut bad: Option<(&'static str, Vec<u32>)> = None;
    let mut tuples = 0u64;
    let empty_mask_ok = |t: &[u32], full: u32| {
        let nonempty: Vec<&u32> = t.iter().filter(|&&m| m != 0).collect();
        nonempty.len() == 1 && *nonempty[0] == full
    };
    let full = SubfamilyScanner::new(h)?.full_mask();
    for_each_cross_tuple(h, k, budgets.tuples, |t| {
        if bad.is_some() {
            return;
        }
        tuples += 1;
        let s: u64 = t.iter().map(|m| m.count_ones() as u64).sum();
        let all_same_largest = t.iter().all(|&m| m == t[0])
            && t[0].count_ones() as usize == l
            && h.select(t[0] as u64).is_intersecting();
        if s == sum_target && !(all_same_largest || (exception_allowed && empty_mask_ok(t, full))) {
            bad = Some(("clause_a_tuple", t.to_vec()));
        }
        let p: u64 = t.iter().map(|m| m.count_ones() as u64).product();
        if p == product_target && !all_same_largest {
            bad = Some(("clause_b_tuple", t.to_vec()));
        }
    })?;
    r = r.value("tuple_audit", tuples);
    if let Some((what, t)) = bad {
        let tuple: Vec<SetFamily> = t.iter().map(|&m| h.select(m as u64)).collect();
        return Ok(r.value("failure", what).violation(Witness::tuple(what, &tuple)));
    }
    Ok(r)
}

/// Sum conjecture for `k ≥ n+1`: the optimum is `k|S|`.
pub fn check_weaksum(h: &SetFamily, k: u32, budgets: &Budgets) -> Result<CheckResult, VerifyError> {
    require_nontrivial(h)?;
    require_k(k, h.n() + 1)?;
    let r = CheckResult::new(CheckName::Weaksum, h, Params { k: Some(k), ..Params::default() });
    if !budgets.scan_fits(h) {
        return Ok(r.skipped("budget_subsets"));
    }
    let star = best_star(h).size as u64;
    let opt = max_cross_sum(h, k)?;
    let conjectured = k as u64 * star;
    let r = r.value("max_sum", opt.value).value("conjectured", conjectured);
    if opt.value > conjectured {
        return Ok(r.violation(Witness::tuple("sum_tuple", &opt.assignment())));
    }
    Ok(r)
}

/// Threshold `|H|/|S|`; the conjectured optimum is `max(|H|, k|S|)`.
fn strongsum_target(h: &SetFamily, k: u32) -> (ExactRational, &'static str, u64) {
    let star = best_star(h).size as i64;
    let size = h.len() as i64;
    let threshold = ExactRational::new(size, star);
    let ks = k as i64 * star;
    let (branch, target) = match ks.cmp(&size) {
        std::cmp::Ordering::Less => ("i", size),
        std::cmp::Ordering::Greater => ("ii", ks),
        std::cmp::Ordering::Equal => ("tie", size),
    };
    (threshold, branch, target as u64)
}

pub fn check_strongsum(h: &SetFamily, k: u32, budgets: &Budgets) -> Result<CheckResult, VerifyError> {
    require_nontrivial(h)?;
    require_k(k, 2)?;
    let r = CheckResult::new(CheckName::Strongsum, h, Params { k: Some(k), ..Params::default() });
    if !budgets.scan_fits(h) {
        return Ok(r.skipped("budget_subsets"));
    }
    let (threshold, branch, target) = strongsum_target(h, k);
    let opt = max_cross_sum(h, k)?;
    let r = r
        .value("threshold", threshold)
        .value("branch", branch)
        .value("max_sum", opt.value)
        .value("conjectured", target);
    if opt.value > target {
        return Ok(r.violation(Witness::tuple("sum_tuple", &opt.assignment())));
    }
    Ok(r)
}

/// Product conjecture: the optimum is `|S|^k`.
pub fn check_prodconj(h: &SetFamily, k: u32, budgets: &Budgets) -> Result<CheckResult, VerifyError> {
    require_nontrivial(h)?;
    require_k(k, 2)?;
    let r = CheckResult::new(CheckName::Prodconj, h, Params { k: Some(k), ..Params::default() });
    if !budgets.scan_fits(h) {
        return Ok(r.skipped("budget_subsets"));
    }
    let star = best_star(h).size;
    let target = big_pow(star, k);
    let product = max_cross_product(h, k)?;
    let r = r
        .value("conjectured", &target)
        .value("product_lower", product.lower())
        .value("product_upper", product.upper());
    if *product.lower() > target {
        return Ok(r.violation(Witness::tuple("product_tuple", product.witness())));
    }
    if product.is_exact() || *product.upper() <= target {
        return Ok(r.value("method", "optimizer"));
    }
    if !budgets.tuples_fit(h, k) {
        return Ok(r.skipped("product not certified and tuple enumeration exceeds budget_tuples"));
    }
    let mut best: (BigUint, Vec<u32>) = (BigUint::default(), Vec::new());
    for_each_cross_tuple(h, k, budgets.tuples, |t| {
        let p = t.iter().fold(BigUint::from(1u32), |acc, m| acc * m.count_ones());
        if p > best.0 {
            best = (p, t.to_vec());
        }
    })?;
    let r = r.value("method", "tuple_enumeration").value("max_product", &best.0);
    if best.0 > target {
        let tuple: Vec<SetFamily> = best.1.iter().map(|&m| h.select(m as u64)).collect();
        return Ok(r.violation(Witness::tuple("product_tuple", &tuple)));
    }
    Ok(r)
}

/// Runs the named check; parameters the check does not use are ignored.
pub fn run_check(
    check: CheckName,
    family: &SetFamily,
    params: Params,
    budgets: &Budgets,
) -> Result<CheckResult, VerifyError> {
    let need = |p: Option<u32>, name: &str| p.ok_or_else(|| precondition(format!("missing parameter {name}")));
    match check {
        CheckName::Complemma => check_complemma(family, need(params.i, "i")?, need(params.j, "j")?),
        CheckName::Berge => check_berge(family),
        CheckName::Bergecor => check_bergecor(family),
        CheckName::Bergeprop => check_bergeprop(family),
        CheckName::Snevily => check_snevily(family, need(params.x, "x")?),
        CheckName::Chvatal => check_chvatal(family),
        CheckName::Result2 => check_result2(family, need(params.k, "k")?, budgets),
        CheckName::Mainthm2 => check_mainthm2(family, need(params.x, "x")?, budgets),
        CheckName::Mainthm => check_mainthm(family, need(params.x, "x")?, need(params.k, "k")?, budgets),
        CheckName::Weaksum => check_weaksum(family, need(params.k, "k")?, budgets),
        CheckName::Strongsum => check_strongsum(family, need(params.k, "k")?, budgets),
        CheckName::Prodconj => check_prodconj(family, need(params.k, "k")?, budgets),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Revalidation {
    Consistent,
    Inconsistent(String),
}

fn tuple_sum(t: &[SetFamily]) -> u64 {
    t.iter().map(|f| f.len() as u64).sum()
}

fn tuple_product(t: &[SetFamily]) -> BigUint {
    t.iter().fold(BigUint::from(1u32), |acc, f| acc * f.len())
}

/// Replays a result. A conjecture failure is replayed from its witness
/// alone (is it a valid configuration beating the conjectured value?), so it
/// does not depend on the optimizers; every other verdict is replayed by
/// re-running the check.
pub fn revalidate(result: &CheckResult, budgets: &Budgets) -> Result<Revalidation, VerifyError> {
    use Revalidation::*;
    let f = &result.family;
    if matches!(result.verdict, Verdict::Fail | Verdict::Defect) && result.witness.is_none() {
        return Ok(Inconsistent("failure without a witness".into()));
    }
    if result.verdict == Verdict::Fail {
        if !result.check.is_conjecture() {
            return Ok(Inconsistent(format!("{} is proved; it cannot fail, only be a defect", result.check)));
        }
        let witness = result.witness.as_ref().expect("checked above");
        let star = best_star(f).size;
        let verdict = match result.check {
            CheckName::Chvatal => {
                let Some(l) = witness.family("L") else {
                    return Ok(Inconsistent("witness lacks family L".into()));
                };
                if !l.is_subfamily_of(f) || !l.is_intersecting() {
                    Inconsistent("witness L is not an intersecting sub-family".into())
                } else if l.len() <= star {
                    Inconsistent(format!("witness L has {} sets, a star has {star}", l.len()))
                } else {
                    Consistent
                }
            }
            _ => {
                let Some(k) = result.params.k else {
                    return Ok(Inconsistent("missing k".into()));
                };
                let tuple = witness.tuple_families();
                if tuple.len() != k as usize {
                    return Ok(Inconsistent(format!("witness has {} families, expected {k}", tuple.len())));
                }
                if !tuple.iter().all(|a| a.is_subfamily_of(f)) {
                    return Ok(Inconsistent("witness family is not a sub-family".into()));
                }
                if !are_cross_intersecting(&tuple).unwrap_or(false) {
                    return Ok(Inconsistent("witness tuple is not cross-intersecting".into()));
                }
                let beats = match result.check {
                    CheckName::Weaksum => tuple_sum(&tuple) > k as u64 * star as u64,
                    CheckName::Strongsum => tuple_sum(&tuple) > strongsum_target(f, k).2,
                    _ => tuple_product(&tuple) > big_pow(star, k),
                };
                if beats {
                    Consistent
                } else {
                    Inconsistent("witness does not beat the conjectured value".into())
                }
            }
        };
        return Ok(verdict);
    }
    let rerun = run_check(result.check, f, result.params, budgets)?;
    if rerun.verdict == result.verdict {
        Ok(Consistent)
    } else {
        Ok(Inconsistent(format!(
            "recorded {}, re-run gives {}",
            result.verdict.as_str(),
            rerun.verdict.as_str()
        )))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepConfig {
    pub checks: Vec<CheckName>,
    pub n: Vec<u32>,
    /// Explicit k values; `None` uses each check's default range.
    pub k: Option<Vec<u32>>,
    pub filter: HereditaryFilter,
    pub budgets: Budgets,
    /// Keep one family per relabeling class.
    pub iso: bool,
    /// Permit `n = 6`.
    pub allow_large: bool,
}

/// `3`, `2..4` (inclusive), or `2,3,5`.
pub fn parse_int_list(s: &str) -> Result<Vec<u32>, String> {
    let s = s.trim();
    let bad = || format!("bad integer list `{s}`");
    if let Some((a, b)) = s.split_once("..") {
        let a: u32 = a.trim().parse().map_err(|_| bad())?;
        let b: u32 = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
        if a > b {
            return Err(bad());
        }
        return Ok((a..=b).collect());
    }
    s.split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| bad()))
        .collect()
}

fn parse_u64(s: &str) -> Result<u64, String> {
    let s = s.trim();
    if let Some(exp) = s.strip_prefix("2^") {
        let e: u32 = exp.parse().map_err(|_| format!("bad number `{s}`"))?;
        return 1u64.checked_shl(e).filter(|_| e < 64).ok_or_else(|| format!("bad number `{s}`"));
    }
    s.parse().map_err(|_| format!("bad number `{s}`"))
}

fn parse_bool(s: &str) -> Result<bool, String> {
    match s.trim() {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        other => Err(format!("bad boolean `{other}`")),
    }
}

impl SweepConfig {
    /// Applies one `key=value` setting.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), String> {
        match key {
            "checks" => {
                self.checks = value
                    .split(',')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(str::parse)
                    .collect::<Result<_, _>>()?;
            }
            "n" => self.n = parse_int_list(value)?,
            "k" => self.k = Some(parse_int_list(value)?),
            "filter" => self.filter = value.parse().map_err(|e: EnumError| e.to_string())?,
            "budget_subsets" => self.budgets.subsets = parse_u64(value)?,
            "budget_tuples" => self.budgets.tuples = parse_u64(value)?,
            "samples" => self.budgets.samples = parse_u64(value)?,
            "seed" => self.budgets.seed = parse_u64(value)?,
            "iso" => self.iso = parse_bool(value)?,
            "allow_large" => self.allow_large = parse_bool(value)?,
            other => return Err(format!("unknown key `{other}`")),
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.checks.is_empty() {
            return Err("no checks configured".into());
        }
        if self.n.is_empty() {
            return Err("no n configured".into());
        }
        if let Some(ks) = &self.k {
            if ks.iter().any(|&k| k < 2) {
                return Err("k values must be at least 2".into());
            }
        }
        Ok(())
    }
}

impl SweepConfig {
    /// Parses settings without checking that the result is runnable, so
    /// callers can layer overrides on top before [`SweepConfig::validate`].
    pub fn parse_partial(text: &str) -> Result<Self, VerifyError> {
        let mut cfg = SweepConfig::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| VerifyError::Config { line: idx + 1, message };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| err("expected key=value".into()))?;
            cfg.set(key.trim(), value.trim()).map_err(err)?;
        }
        Ok(cfg)
    }
}

impl FromStr for SweepConfig {
    type Err = VerifyError;

    fn from_str(text: &str) -> Result<Self, VerifyError> {
        let cfg = SweepConfig::parse_partial(text)?;
        cfg.validate().map_err(|message| VerifyError::Config { line: 0, message })?;
        Ok(cfg)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub pass: u64,
    pub fail: u64,
    pub defect: u64,
    pub skipped: u64,
}

impl Summary {
    pub fn of(results: &[CheckResult]) -> Summary {
        let mut s = Summary::default();
        for r in results {
            match r.verdict {
                Verdict::Pass => s.pass += 1,
                Verdict::Fail => s.fail += 1,
                Verdict::Defect => s.defect += 1,
                Verdict::Skipped(_) => s.skipped += 1,
            }
        }
        s
    }

    pub fn total(&self) -> u64 {
        self.pass + self.fail + self.defect + self.skipped
    }
}

#[derive(Debug, Clone)]
pub struct SweepOutcome {
    pub results: Vec<CheckResult>,
    pub summary: Summary,
}

struct Job {
    check: CheckName,
    family: SetFamily,
    params: Params,
}

fn default_ks(check: CheckName, n: u32) -> Vec<u32> {
    match check {
        CheckName::Result2 => vec![2, 3],
        CheckName::Mainthm | CheckName::Weaksum => vec![n + 1, n + 2],
        CheckName::Strongsum | CheckName::Prodconj => (2..=n + 2).collect(),
        _ => Vec::new(),
    }
}

fn min_k(check: CheckName, n: u32) -> u32 {
    match check {
        CheckName::Mainthm | CheckName::Weaksum => n + 1,
        _ => 2,
    }
}

fn random_family(ground: GroundSet, rng: &mut ChaCha8Rng) -> SetFamily {
    let size = 1u32 << ground.size();
    let density: f64 = rng.gen_range(0.05..0.6);
    let words = (0..size).filter(|_| rng.gen_bool(density)).map(SubsetWord).collect();
    SetFamily::from_sorted_unchecked(ground, words)
}

fn complemma_jobs(n: u32, budgets: &Budgets, jobs: &mut Vec<Job>) -> Result<(), VerifyError> {
    let ground = GroundSet::new(n).map_err(|e| precondition(e.to_string()))?;
    if n < 2 {
        return Ok(());
    }
    let power = SetFamily::power_set(ground);
    let pairs: Vec<(u32, u32)> = ground
        .elements()
        .flat_map(|i| ground.elements().filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let members = 1u32 << n;
    if members < 64 && 1u64 << members <= budgets.subsets {
        for mask in 0u64..1 << members {
            let family = power.select(mask);
            for &(i, j) in &pairs {
                jobs.push(Job {
                    check: CheckName::Complemma,
                    family: family.clone(),
                    params: Params { i: Some(i), j: Some(j), ..Params::default() },
                });
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(budgets.seed ^ 0xc0_3b1e ^ n as u64);
        for _ in 0..budgets.samples {
            let family = random_family(ground, &mut rng);
            let (i, j) = pairs[rng.gen_range(0..pairs.len())];
            jobs.push(Job {
                check: CheckName::Complemma,
                family,
                params: Params { i: Some(i), j: Some(j), ..Params::default() },
            });
        }
    }
    Ok(())
}

fn plan(cfg: &SweepConfig) -> Result<Vec<Job>, VerifyError> {
    let mut jobs = Vec::new();
    for &n in &cfg.n {
        let mut families: Vec<SetFamily> = enum_hereditary(n, &cfg.filter, cfg.allow_large)?.collect();
        if cfg.iso {
            let mut seen = std::collections::HashSet::new();
            let mut kept = Vec::new();
            for f in families {
                if seen.insert(canonical_key(&f)?) {
                    kept.push(f);
                }
            }
            families = kept;
        }
        let ground = GroundSet::new(n).map_err(|e| precondition(e.to_string()))?;
        let trivial = just_empty_set(ground);
        for &check in &cfg.checks {
            let ks: Vec<u32> = cfg
                .k
                .clone()
                .unwrap_or_else(|| default_ks(check, n))
                .into_iter()
                .filter(|&k| k >= min_k(check, n))
                .collect();
            let mut push = |family: &SetFamily, params: Params| {
                jobs.push(Job { check, family: family.clone(), params });
            };
            match check {
                CheckName::Complemma => complemma_jobs(n, &cfg.budgets, &mut jobs)?,
                CheckName::Berge | CheckName::Bergecor | CheckName::Bergeprop | CheckName::Chvatal => {
                    for f in &families {
                        push(f, Params::default());
                    }
                }
                CheckName::Snevily | CheckName::Mainthm2 => {
                    for f in &families {
                        for x in ground.elements().filter(|&x| f.compressed_wrt_unchecked(x)) {
                            push(f, Params { x: Some(x), ..Params::default() });
                        }
                    }
                }
                CheckName::Mainthm => {
                    for f in &families {
                        for x in ground.elements().filter(|&x| f.compressed_wrt_unchecked(x)) {
                            for &k in &ks {
                                push(f, Params { x: Some(x), k: Some(k), ..Params::default() });
                            }
                        }
                    }
                }
                CheckName::Result2 => {
                    for f in families.iter().filter(|f| !f.is_empty()) {
                        for &k in &ks {
                            push(f, Params { k: Some(k), ..Params::default() });
                        }
                    }
                }
                CheckName::Weaksum | CheckName::Strongsum | CheckName::Prodconj => {
                    for f in families.iter().filter(|f| !f.is_empty() && **f != trivial) {
                        for &k in &ks {
                            push(f, Params { k: Some(k), ..Params::default() });
                        }
                    }
                }
            }
        }
    }
    Ok(jobs)
}

/// Runs every configured check in parallel and returns results sorted by
/// (check name, n, family words, parameters).
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepOutcome, VerifyError> {
    cfg.validate().map_err(|message| VerifyError::Config { line: 0, message })?;
    let jobs = plan(cfg)?;
    let budgets = cfg.budgets;
    let mut results = jobs
        .par_iter()
        .map(|job| {
            run_check(job.check, &job.family, job.params, &budgets).or_else(|e| match e {
                VerifyError::Solve(
                    err @ (SolveError::TooManyMembers { .. } | SolveError::TupleBudget { .. }),
                ) => Ok(CheckResult::new(job.check, &job.family, job.params).skipped(err.to_string())),
                other => Err(other),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    results.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    let summary = Summary::of(&results);
    Ok(SweepOutcome { results, summary })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::make_family;

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

    fn b() -> Budgets {
        Budgets::default()
    }

    #[test]
    fn complemma_examples() {
        let r = check_complemma(&fam(3, &[&[2, 3], &[2], &[1, 3]]), 1, 2).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.values["kernel_a"], "1");
        assert_eq!(r.values["kernel_b"], "1");
        let r = check_complemma(&fam(3, &[]), 1, 2).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        let tri = fam(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        let r = check_complemma(&tri, 1, 3).unwrap();
        assert_eq!(r.values["kernel_a"], "3");
        assert!(check_complemma(&tri, 2, 2).is_err());
    }

    #[test]
    fn berge_family_checks() {
        for h in [power(3), singles(3), fam(3, &[&[]]), fam(3, &[])] {
            assert_eq!(check_berge(&h).unwrap().verdict, Verdict::Pass);
            assert_eq!(check_bergecor(&h).unwrap().verdict, Verdict::Pass);
            assert_eq!(check_bergeprop(&h).unwrap().verdict, Verdict::Pass);
        }
        let r = check_bergecor(&power(3)).unwrap();
        assert_eq!((r.values["l"].as_str(), r.values["size"].as_str()), ("4", "8"));
        let r = check_bergeprop(&power(3)).unwrap();
        assert_eq!(r.values["shared"], "{1,2,3}");
        let r = check_berge(&singles(3)).unwrap();
        assert_eq!(r.values["leftover_empty"], "false");
        let r = check_berge(&fam(3, &[&[]])).unwrap();
        assert_eq!((r.values["pairs"].as_str(), r.values["leftover_empty"].as_str()), ("0", "true"));
        assert!(check_berge(&fam(2, &[&[1]])).is_err());
    }

    #[test]
    fn snevily_and_chvatal_examples() {
        let r = check_snevily(&power(3), 1).unwrap();
        assert_eq!((r.verdict.clone(), r.values["star"].as_str()), (Verdict::Pass, "4"));
        let h = fam(3, &[&[1, 2], &[1, 3]]).hereditary_closure();
        let r = check_snevily(&h, 1).unwrap();
        assert_eq!((r.values["star"].as_str(), r.values["l"].as_str()), ("3", "3"));
        let r = check_snevily(&fam(1, &[&[], &[1]]), 1).unwrap();
        assert_eq!(r.values["l"], "1");
        assert!(check_snevily(&h, 2).is_err());

        assert_eq!(check_chvatal(&fam(3, &[&[]])).unwrap().verdict, Verdict::Pass);
        let r = check_chvatal(&power(4)).unwrap();
        assert_eq!(r.values["best_star"], "8");
    }

    #[test]
    fn result2_examples() {
        let r = check_result2(&power(2), 2, &b()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!((r.values["max_sum"].as_str(), r.values["product_lower"].as_str()), ("4", "4"));
        let r = check_result2(&singles(3), 2, &b()).unwrap();
        assert_eq!(r.values["max_sum"], "4");
        let r = check_result2(&fam(2, &[&[]]), 2, &b()).unwrap();
        assert_eq!((r.verdict.clone(), r.values["max_sum"].as_str()), (Verdict::Pass, "1"));
        let tiny = Budgets { subsets: 4, ..b() };
        assert!(matches!(check_result2(&power(3), 2, &tiny).unwrap().verdict, Verdict::Skipped(_)));
    }

    #[test]
    fn mainthm2_examples() {
        let r = check_mainthm2(&singles(3), 1, &b()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.values["equality_case"], "true");
        let r = check_mainthm2(&power(2), 1, &b()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.values["equality_case"], "false");
        assert_eq!(r.values["scanned"], "16");
        let partial = Budgets { subsets: 8, samples: 50, ..b() };
        let r = check_mainthm2(&power(3), 1, &partial).unwrap();
        assert_eq!((r.values["coverage"].as_str(), r.values["scanned"].as_str()), ("partial", "50"));
    }

    #[test]
    fn mainthm_examples() {
        let h = fam(3, &[&[1, 2], &[1, 3]]).hereditary_closure();
        let r = check_mainthm(&h, 1, 4, &b()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        assert_eq!(r.values["max_sum"], "12");

        let r = check_mainthm(&singles(3), 1, 4, &b()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        let w = r.witness.unwrap();
        assert!(w.family("star").is_some());
        assert_eq!(w.family("h_with_empties"), Some(&singles(3)));

        let r = check_mainthm(&power(2), 1, 3, &b()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!((r.values["max_sum"].as_str(), r.values["product_lower"].as_str()), ("6", "8"));
        assert_ne!(r.values["tuple_audit"], "skipped");
        assert!(check_mainthm(&power(2), 1, 2, &b()).is_err());
    }

    #[test]
    fn conjecture_examples() {
        let r = check_strongsum(&singles(3), 2, &b()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.values["threshold"], "4/1");
        assert_eq!((r.values["branch"].as_str(), r.values["max_sum"].as_str()), ("i", "4"));
        let r = check_strongsum(&singles(3), 4, &b()).unwrap();
        assert_eq!(r.values["branch"], "tie");
        let r = check_prodconj(&power(2), 2, &b()).unwrap();
        assert_eq!((r.verdict.clone(), r.values["product_lower"].as_str()), (Verdict::Pass, "4"));
        let r = check_prodconj(&singles(3), 3, &b()).unwrap();
        assert_eq!((r.verdict.clone(), r.values["method"].as_str()), (Verdict::Pass, "tuple_enumeration"));
        let r = check_weaksum(&power(2), 3, &b()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert!(check_weaksum(&power(2), 2, &b()).is_err());
        assert!(check_weaksum(&fam(2, &[&[]]), 3, &b()).is_err());
    }

    #[test]
    fn config_parsing() {
        let cfg: SweepConfig = "# demo\nchecks = chvatal, berge\nn = 2..3\nk=2,4\nbudget_subsets=2^10\nseed=7\n"
            .parse()
            .unwrap();
        assert_eq!(cfg.checks, vec![CheckName::Chvatal, CheckName::Berge]);
        assert_eq!(cfg.n, vec![2, 3]);
        assert_eq!(cfg.k, Some(vec![2, 4]));
        assert_eq!(cfg.budgets.subsets, 1024);
        assert_eq!(cfg.budgets.seed, 7);
        assert!(matches!("checks=bogus\nn=2".parse::<SweepConfig>(), Err(VerifyError::Config { line: 1, .. })));
        assert!(matches!("checks=berge\nn=2\nwat".parse::<SweepConfig>(), Err(VerifyError::Config { line: 3, .. })));
        assert!("checks=berge".parse::<SweepConfig>().is_err());
        assert!("checks=berge\nn=2\nfilter=nope".parse::<SweepConfig>().is_err());
    }

    #[test]
    fn sweep_counts() {
        let cfg: SweepConfig = "checks=chvatal\nn=3".parse().unwrap();
        let out = run_sweep(&cfg).unwrap();
        assert_eq!(out.results.len(), 20);
        assert_eq!(out.summary, Summary { pass: 20, ..Summary::default() });

        let cfg: SweepConfig = "checks=mainthm2\nn=2".parse().unwrap();
        let out = run_sweep(&cfg).unwrap();
        assert!(out.summary.total() > 0);
        assert_eq!(out.summary.pass, out.summary.total());
    }

    #[test]
    fn revalidation_of_passes() {
        let r = check_chvatal(&power(3)).unwrap();
        assert_eq!(revalidate(&r, &b()).unwrap(), Revalidation::Consistent);
        let mut forged = r.clone();
        forged.verdict = Verdict::Defect;
        forged.witness = Some(Witness::new("forged"));
        assert!(matches!(revalidate(&forged, &b()).unwrap(), Revalidation::Inconsistent(_)));
    }
}

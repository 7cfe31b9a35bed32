//! Integer partitions, compositions and the refinement relation.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Weakly decreasing sequence of positive parts. The empty partition is allowed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts `parts` non-increasingly. Zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::NonPositivePart(0));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// Accepts signed input, as it arrives from parsers and user code.
    pub fn from_signed(parts: &[i64]) -> Result<Self> {
        if let Some(&bad) = parts.iter().find(|&&p| p <= 0) {
            return Err(Error::NonPositivePart(bad));
        }
        Partition::new(parts.iter().map(|&p| p as usize).collect())
    }

    /// Caller guarantees positive parts.
    pub(crate) fn from_unsorted(mut parts: Vec<usize>) -> Self {
        debug_assert!(!parts.contains(&0));
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `m^n = (m, ..., m)`, n times.
    pub fn rectangle(m: usize, n: usize) -> Result<Self> {
        if m == 0 && n > 0 {
            return Err(Error::NonPositivePart(0));
        }
        Ok(Partition { parts: vec![m; n] })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `k = |λ|`.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row `i` (0-based), zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn largest(&self) -> usize {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.largest();
        let parts = (0..cols).map(|j| self.parts.iter().filter(|&&p| p > j).count()).collect();
        Partition { parts }
    }

    /// Multiplicity of each part size, indexed by size.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.largest() + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    pub fn is_rectangle(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }

    pub fn to_composition(&self) -> Composition {
        Composition { parts: self.parts.clone() }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let s: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Parses `"5,3,1"`, `"2^4"`, or mixtures such as `"3,2^2"`. Empty input and
/// `"()"` give the empty partition.
fn parse_parts(text: &str, allow_zero: bool) -> Result<Vec<usize>> {
    let err = |reason: &str| Error::Parse { text: text.to_string(), reason: reason.to_string() };
    let trimmed = text.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']).trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    let mut parts = Vec::new();
    for token in trimmed.split(',') {
        let token = token.trim();
        let (base, exp) = match token.split_once('^') {
            Some((b, e)) => (b.trim(), e.trim()),
            None => (token, "1"),
        };
        let base: i64 = base.parse().map_err(|_| err("expected an integer part"))?;
        let exp: usize = exp.parse().map_err(|_| err("expected a non-negative exponent"))?;
        if base < 0 || (base == 0 && !allow_zero) {
            return Err(Error::NonPositivePart(base));
        }
        parts.extend(std::iter::repeat(base as usize).take(exp));
    }
    Ok(parts)
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s, false)?)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Ordered sequence of non-negative parts; one entry per tensor slot.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn has_zero_part(&self) -> bool {
        self.parts.contains(&0)
    }

    /// Drops zeros and sorts.
    pub fn to_partition(&self) -> Partition {
        Partition::from_unsorted(self.parts.iter().copied().filter(|&p| p > 0).collect())
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(Composition::new(parse_parts(s, true)?))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// `δ_d = (2d-1, 2d-3, ..., 3, 1)`, a partition of `d²`.
pub fn delta(d: usize) -> Result<Partition> {
    if d == 0 {
        return Err(Error::ZeroDimension);
    }
    Ok(Partition { parts: (1..=d).rev().map(|i| 2 * i - 1).collect() })
}

/// Multiset union of parts.
pub fn oplus(a: &Partition, b: &Partition) -> Partition {
    let mut parts = a.parts.clone();
    parts.extend_from_slice(&b.parts);
    Partition::from_unsorted(parts)
}

/// Sums the parts of `lambda` over each cycle of `sigma`, then sorts.
pub fn sigma_action(sigma: &Permutation, lambda: &Partition) -> Result<Partition> {
    if sigma.degree() != lambda.len() {
        return Err(Error::LengthMismatch { expected: lambda.len(), got: sigma.degree() });
    }
    let sums = sigma.cycles().iter().map(|c| c.iter().map(|&i| lambda.parts[i]).sum()).collect();
    Ok(Partition::from_unsorted(sums))
}

/// `λ ⊕ 1^(target - |λ|)`.
pub fn pad_with_ones(lambda: &Partition, target: usize) -> Result<Partition> {
    let weight = lambda.weight();
    if target < weight {
        return Err(Error::PadBelowWeight { target, weight });
    }
    let mut parts = lambda.parts.clone();
    parts.resize(lambda.len() + target - weight, 1);
    Ok(Partition { parts })
}

/// `[d;m] = Σ_{i=1..d} floor((2i-1)/m)`.
pub fn integer_part_count(d: usize, m: usize) -> usize {
    assert!(m >= 1, "m must be positive");
    (1..=d).map(|i| (2 * i - 1) / m).sum()
}

/// Young-diagram inclusion `lambda ⊂ mu`.
pub fn contains(lambda: &Partition, mu: &Partition) -> bool {
    lambda.len() <= mu.len() && lambda.parts.iter().zip(&mu.parts).all(|(a, b)| a <= b)
}

/// Every distinct partition obtained by removing one corner box.
pub fn remove_one_box(lambda: &Partition) -> Vec<Partition> {
    let mut out: Vec<Partition> = Vec::new();
    for i in 0..lambda.len() {
        // Only the last row of each run of equal rows has a removable corner;
        // other rows give the same shape after re-sorting.
        if i + 1 < lambda.len() && lambda.parts[i + 1] == lambda.parts[i] {
            continue;
        }
        let mut parts = lambda.parts.clone();
        parts[i] -= 1;
        if parts[i] == 0 {
            parts.remove(i);
        }
        out.push(Partition { parts });
    }
    out
}

/// Partitions of `k` in reverse-lexicographic order, optionally with at most
/// `max_len` parts.
pub fn partitions_of(k: usize, max_len: Option<usize>) -> PartitionsOf {
    PartitionsOf { next: Some(if k == 0 { Vec::new() } else { vec![k] }), max_len }
}

pub struct PartitionsOf {
    next: Option<Vec<usize>>,
    max_len: Option<usize>,
}

impl PartitionsOf {
    fn advance(a: &[usize]) -> Option<Vec<usize>> {
        let i = a.iter().rposition(|&p| p > 1)?;
        let x = a[i] - 1;
        let mut next = a[..i].to_vec();
        next.push(x);
        // the trailing ones plus the box taken from position i
        let mut remaining = a.len() - i;
        while remaining > 0 {
            let take = remaining.min(x);
            next.push(take);
            remaining -= take;
        }
        Some(next)
    }
}

impl Iterator for PartitionsOf {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        loop {
            let current = self.next.take()?;
            self.next = Self::advance(&current);
            if self.max_len.map_or(true, |cap| current.len() <= cap) {
                return Some(Partition { parts: current });
            }
        }
    }
}

/// A grouping of the parts of `μ` whose group sums give the target partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefinementWitness {
    /// `groups[g]` holds 0-based indices into the parts of `μ`, ascending;
    /// group `g` sums to `group_sums.parts()[g]`.
    pub groups: Vec<Vec<usize>>,
    pub group_sums: Partition,
}

impl RefinementWitness {
    /// Renders as `{2,1}→3, {1}→1` using part values of `mu`.
    pub fn describe(&self, mu: &[usize]) -> String {
        self.groups
            .iter()
            .zip(self.group_sums.parts())
            .map(|(g, s)| {
                let vals: Vec<String> = g.iter().map(|&i| mu[i].to_string()).collect();
                format!("{{{}}}→{}", vals.join(","), s)
            })
            .collect::<Vec<_>>()
            .join(", ")
    }
}

pub fn is_refinement(mu: &Partition, lambda: &Partition) -> bool {
    refinement_witness(mu, lambda).is_some()
}

/// Finds one grouping of the parts of `mu` summing to the parts of `lambda`.
///
/// Parts are placed largest first into target bins. Bins with equal residual
/// capacity are interchangeable, so only one of them is tried, and failed
/// `(position, residual multiset)` states are memoized.
pub fn refinement_witness(mu: &Partition, lambda: &Partition) -> Option<RefinementWitness> {
    if mu.weight() != lambda.weight() || mu.len() < lambda.len() {
        return None;
    }
    // mu is already sorted descending, so indices double as the search order.
    let mut search = RefinementSearch {
        parts: &mu.parts,
        residual: lambda.parts.clone(),
        assignment: vec![usize::MAX; mu.len()],
        failed: HashSet::new(),
    };
    if !search.run(0) {
        return None;
    }
    let mut groups = vec![Vec::new(); lambda.len()];
    for (idx, &bin) in search.assignment.iter().enumerate() {
        groups[bin].push(idx);
    }
    Some(RefinementWitness { groups, group_sums: lambda.clone() })
}

struct RefinementSearch<'a> {
    parts: &'a [usize],
    residual: Vec<usize>,
    assignment: Vec<usize>,
    failed: HashSet<(usize, Vec<usize>)>,
}

impl RefinementSearch<'_> {
    fn run(&mut self, pos: usize) -> bool {
        if pos == self.parts.len() {
            return self.residual.iter().all(|&r| r == 0);
        }
        if self.parts[pos] == 1 {
            // Only ones remain and weights agree: fill the bins in order.
            let mut bin = 0;
            for idx in pos..self.parts.len() {
                while self.residual[bin] == 0 {
                    bin += 1;
                }
                self.residual[bin] -= 1;
                self.assignment[idx] = bin;
            }
            return true;
        }
        let mut key_residual = self.residual.clone();
        key_residual.sort_unstable();
        let key = (pos, key_residual);
        if self.failed.contains(&key) {
            return false;
        }
        let value = self.parts[pos];
        let mut tried: Vec<usize> = Vec::new();
        for bin in 0..self.residual.len() {
            let r = self.residual[bin];
            if r < value || tried.contains(&r) {
                continue;
            }
            tried.push(r);
            self.residual[bin] -= value;
            self.assignment[pos] = bin;
            if self.run(pos + 1) {
                return true;
            }
            self.residual[bin] += value;
        }
        self.failed.insert(key);
        false
    }
}

/// Every set partition of the slots of `slots` (positive sizes, in slot
/// order) into groups whose sums are the parts of `target`. Each set
/// partition is produced exactly once; groups are aligned with the parts of
/// `target`, and among equal target parts the groups are ordered by their
/// smallest slot.
pub fn all_groupings(slots: &[usize], target: &Partition) -> Vec<RefinementWitness> {
    let mut out = Vec::new();
    if slots.iter().sum::<usize>() != target.weight() || slots.contains(&0) {
        return out;
    }
    let mut residual = target.parts.clone();
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); target.len()];
    enumerate_groupings(slots, target, 0, &mut residual, &mut groups, &mut out);
    out
}

fn enumerate_groupings(
    slots: &[usize],
    target: &Partition,
    pos: usize,
    residual: &mut [usize],
    groups: &mut [Vec<usize>],
    out: &mut Vec<RefinementWitness>,
) {
    if pos == slots.len() {
        if residual.iter().all(|&r| r == 0) {
            out.push(RefinementWitness { groups: groups.to_vec(), group_sums: target.clone() });
        }
        return;
    }
    let value = slots[pos];
    for bin in 0..residual.len() {
        if residual[bin] < value {
            continue;
        }
        if groups[bin].is_empty() {
            // Empty bins with the same target are interchangeable; use the first.
            let first_empty = (0..bin).any(|b| target.parts[b] == target.parts[bin] && groups[b].is_empty());
            if first_empty {
                continue;
            }
        }
        residual[bin] -= value;
        groups[bin].push(pos);
        enumerate_groupings(slots, target, pos + 1, residual, groups, out);
        groups[bin].pop();
        residual[bin] += value;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn make_partition_sorts() {
        let p = Partition::new(vec![1, 3, 5]).unwrap();
        assert_eq!(p.parts(), &[5, 3, 1]);
        assert_eq!(p.weight(), 9);
        let q = Partition::new(vec![6, 4, 3, 1, 1]).unwrap();
        assert_eq!(q.weight(), 15);
        assert_eq!(q.len(), 5);
        let e = Partition::new(vec![]).unwrap();
        assert_eq!(e.weight(), 0);
        assert!(e.is_empty());
    }

    #[test]
    fn rejects_non_positive_parts() {
        assert_eq!(Partition::new(vec![3, 0]), Err(Error::NonPositivePart(0)));
        assert_eq!(Partition::from_signed(&[2, -1]), Err(Error::NonPositivePart(-1)));
        assert!("3,-1".parse::<Partition>().is_err());
        assert!("3,x".parse::<Partition>().is_err());
        assert!("0".parse::<Partition>().is_err());
    }

    #[test]
    fn parses_rectangular_shorthand() {
        assert_eq!(part("2^4").parts(), &[2, 2, 2, 2]);
        assert_eq!(part("5,3,1").parts(), &[5, 3, 1]);
        assert_eq!(part("1,3^2").parts(), &[3, 3, 1]);
        assert_eq!(part("[3, 1]").parts(), &[3, 1]);
        assert!(part("").is_empty());
        let c: Composition = "2,0,1".parse().unwrap();
        assert_eq!(c.parts(), &[2, 0, 1]);
        assert_eq!(c.to_partition().parts(), &[2, 1]);
    }

    #[test]
    fn delta_is_staircase_of_odd_parts() {
        assert_eq!(delta(2).unwrap().parts(), &[3, 1]);
        assert_eq!(delta(3).unwrap().parts(), &[5, 3, 1]);
        assert_eq!(delta(1).unwrap().parts(), &[1]);
        assert_eq!(delta(0), Err(Error::ZeroDimension));
        for d in 1..20 {
            assert_eq!(delta(d).unwrap().weight(), d * d);
        }
    }

    #[test]
    fn oplus_is_multiset_union() {
        assert_eq!(oplus(&part("3,1"), &part("2")).parts(), &[3, 2, 1]);
        assert_eq!(oplus(&part("2,2"), &Partition::empty()).parts(), &[2, 2]);
        let rect = Partition::rectangle(2, integer_part_count(3, 2)).unwrap();
        assert_eq!(oplus(&rect, &part("1")).parts(), &[2, 2, 2, 1]);
    }

    #[test]
    fn sigma_action_worked_example() {
        let lambda = part("6,4,3,1,1");
        let sigma = Permutation::from_cycles(5, &[&[2, 5], &[1, 3, 4]]).unwrap();
        assert_eq!(sigma_action(&sigma, &lambda).unwrap().parts(), &[10, 5]);
        assert_eq!(sigma_action(&Permutation::identity(5), &lambda).unwrap(), lambda);
        let swap = Permutation::transposition(2, 1, 2).unwrap();
        assert_eq!(sigma_action(&swap, &part("3,1")).unwrap().parts(), &[4]);
        assert!(matches!(sigma_action(&Permutation::identity(3), &lambda), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn refinement_examples() {
        let target = part("5,3,1");
        let w = refinement_witness(&part("2,2,1^5"), &target).unwrap();
        assert_eq!(w.group_sums, target);
        let mu = part("2,2,1^5");
        for (g, &s) in w.groups.iter().zip(target.parts()) {
            assert_eq!(g.iter().map(|&i| mu.parts()[i]).sum::<usize>(), s);
        }
        assert!(is_refinement(&target, &target));
        assert!(!is_refinement(&part("4,2,2,1"), &target));
        assert!(!is_refinement(&part("3,1"), &target));
        assert!(is_refinement(&Partition::empty(), &Partition::empty()));
        assert!(!is_refinement(&Partition::empty(), &part("1")));
    }

    #[test]
    fn witness_description() {
        let mu = part("3,1");
        let w = refinement_witness(&mu, &part("3,1")).unwrap();
        assert_eq!(w.describe(mu.parts()), "{3}→3, {1}→1");
    }

    #[test]
    fn refinement_handles_many_ones_quickly() {
        let d = 64;
        let padded = pad_with_ones(&part("127,125"), d * d).unwrap();
        assert!(is_refinement(&padded, &delta(d).unwrap()));
        let padded = pad_with_ones(&part("126,126"), d * d).unwrap();
        assert!(!is_refinement(&padded, &delta(d).unwrap()));
    }

    #[test]
    fn pad_examples() {
        assert_eq!(pad_with_ones(&part("5,3"), 9).unwrap().parts(), &[5, 3, 1]);
        assert_eq!(pad_with_ones(&part("3,1"), 4).unwrap().parts(), &[3, 1]);
        assert_eq!(pad_with_ones(&part("2,2"), 9).unwrap().parts(), &[2, 2, 1, 1, 1, 1, 1]);
        assert!(matches!(pad_with_ones(&part("5,5"), 9), Err(Error::PadBelowWeight { .. })));
    }

    #[test]
    fn integer_part_count_examples() {
        assert_eq!(integer_part_count(2, 2), 1);
        assert_eq!(integer_part_count(3, 2), 3);
        assert_eq!(integer_part_count(5, 2), 10);
        assert_eq!(integer_part_count(2, 3), 1);
        assert_eq!(integer_part_count(3, 3), 2);
        assert_eq!(integer_part_count(5, 3), 7);
        for d in 1..30 {
            assert_eq!(integer_part_count(d, 1), d * d);
        }
    }

    #[test]
    fn containment_examples() {
        assert!(contains(&part("2,1"), &part("3,1")));
        assert!(!contains(&part("3,1"), &part("2,2")));
        assert!(contains(&part("3,1"), &part("3,1")));
        assert!(contains(&Partition::empty(), &part("1")));
        assert!(!contains(&part("1,1,1"), &part("3,1")));
    }

    #[test]
    fn remove_one_box_examples() {
        assert_eq!(remove_one_box(&part("2,2")), vec![part("2,1")]);
        let mut r = remove_one_box(&part("3,1"));
        r.sort();
        assert_eq!(r, vec![part("2,1"), part("3")]);
        assert_eq!(remove_one_box(&part("1")), vec![Partition::empty()]);
        assert!(remove_one_box(&Partition::empty()).is_empty());
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions_of(4, None).count(), 5);
        assert_eq!(partitions_of(9, None).count(), 30);
        assert_eq!(partitions_of(0, None).collect::<Vec<_>>(), vec![Partition::empty()]);
        let p5: Vec<Partition> = partitions_of(5, None).collect();
        let expected = ["5", "4,1", "3,2", "3,1,1", "2,2,1", "2,1,1,1", "1^5"];
        assert_eq!(p5, expected.iter().map(|s| part(s)).collect::<Vec<_>>());
        assert_eq!(partitions_of(6, Some(2)).count(), 4);
    }

    #[test]
    fn groupings_are_distinct_set_partitions() {
        // (2,1,1) into (3,1): slot 0 with either slot 1 or slot 2.
        let g = all_groupings(&[2, 1, 1], &part("3,1"));
        assert_eq!(g.len(), 2);
        // Equal targets: (1,1,1,1) into (2,2) has 3 set partitions.
        assert_eq!(all_groupings(&[1, 1, 1, 1], &part("2,2")).len(), 3);
        assert!(all_groupings(&[2, 2], &part("3,1")).is_empty());
    }
}

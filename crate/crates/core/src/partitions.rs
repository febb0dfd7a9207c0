//! Integer partitions.
//!
//! A [`Partition`] is kept in canonical weakly decreasing form, so structural
//! equality is partition equality and the derived lexicographic order puts
//! `(3)` before `(2,1)` before `(1,1,1)` when sorted in reverse.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Default upper bound on `n` for [`partitions_of`].
pub const DEFAULT_ENUMERATION_CAP: usize = 40;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
    weight: usize,
}

impl Partition {
    /// Builds a partition from parts in any order.
    pub fn new<I: IntoIterator<Item = i64>>(parts: I) -> Result<Self> {
        let mut out = Vec::new();
        for p in parts {
            if p < 1 {
                return Err(Error::InvalidPart(p));
            }
            out.push(p as usize);
        }
        Ok(Self::from_parts(out))
    }

    /// Builds a partition from positive parts in any order.
    ///
    /// Panics on a zero part; use [`Partition::new`] for untrusted input.
    pub fn from_parts(mut parts: Vec<usize>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "partition parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let weight = parts.iter().sum();
        Partition { parts, weight }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The one-part partition `(n)`; empty for `n = 0`.
    pub fn single(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n], weight: n }
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, 0 for the empty partition.
    pub fn first(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Multiplicities as `(part, count)` pairs, largest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, c)) if *q == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Multiset union of the parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() || j < other.parts.len() {
            let take_left = match (self.parts.get(i), other.parts.get(j)) {
                (Some(a), Some(b)) => a >= b,
                (Some(_), None) => true,
                _ => false,
            };
            if take_left {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        Partition { parts, weight: self.weight + other.weight }
    }

    /// Adds one part `k > 0`.
    pub fn with_part(&self, k: usize) -> Partition {
        assert!(k > 0);
        let pos = self.parts.partition_point(|&p| p >= k);
        let mut parts = self.parts.clone();
        parts.insert(pos, k);
        Partition { parts, weight: self.weight + k }
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts.cmp(&other.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse { pos: 0, msg: format!("expected [..], got {t:?}") })?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in inner.split(',') {
            let v: i64 =
                tok.trim().parse().map_err(|_| Error::Parse { pos: 0, msg: format!("bad part {:?}", tok.trim()) })?;
            parts.push(v);
        }
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<i64>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n` in lexicographically decreasing order, with the
/// default cap.
pub fn partitions_of(n: usize) -> Result<Vec<Partition>> {
    partitions_of_capped(n, DEFAULT_ENUMERATION_CAP)
}

pub fn partitions_of_capped(n: usize, cap: usize) -> Result<Vec<Partition>> {
    if n > cap {
        return Err(Error::GuardExceeded { what: "partition size", value: n, limit: cap });
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, n, &mut cur, &mut out);
    Ok(out)
}

fn fill(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        let weight = cur.iter().sum();
        out.push(Partition { parts: cur.clone(), weight });
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        cur.push(p);
        fill(rest - p, p, cur, out);
        cur.pop();
    }
}

/// The conjugate partition: `t[i]` is the number of parts `>= i + 1`.
pub fn transpose(lambda: &Partition) -> Partition {
    let parts: Vec<usize> =
        (1..=lambda.first()).map(|i| lambda.parts.iter().take_while(|&&p| p >= i).count()).collect();
    Partition { parts, weight: lambda.weight }
}

/// `lambda <=_p mu`: the parts of `mu` arise by summing disjoint groups of
/// parts of `lambda`.
pub fn refines_to(lambda: &Partition, mu: &Partition) -> bool {
    if lambda.weight != mu.weight {
        return false;
    }
    if lambda.len() < mu.len() {
        return false;
    }
    let counts = to_counts(lambda);
    let mut memo = HashMap::new();
    can_group(&counts, &mu.parts, &mut memo)
}

fn to_counts(p: &Partition) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for &x in &p.parts {
        *m.entry(x).or_insert(0) += 1;
    }
    m
}

type GroupMemo = HashMap<(Vec<(usize, usize)>, usize), bool>;

// Targets are consumed largest first; each target takes a sub-multiset of the
// remaining small parts that sums to it exactly.
fn can_group(rest: &BTreeMap<usize, usize>, targets: &[usize], memo: &mut GroupMemo) -> bool {
    let Some((&target, tail)) = targets.split_first() else {
        return rest.values().all(|&c| c == 0);
    };
    let key = (rest.iter().filter(|(_, &c)| c > 0).map(|(&k, &c)| (k, c)).collect::<Vec<_>>(), targets.len());
    if let Some(&hit) = memo.get(&key) {
        return hit;
    }
    let avail: Vec<(usize, usize)> = key.0.clone();
    let mut rest = rest.clone();
    let found = choose(&avail, 0, target, &mut rest, tail, memo);
    memo.insert(key, found);
    found
}

fn choose(
    avail: &[(usize, usize)],
    idx: usize,
    need: usize,
    rest: &mut BTreeMap<usize, usize>,
    tail: &[usize],
    memo: &mut GroupMemo,
) -> bool {
    if need == 0 {
        return can_group(rest, tail, memo);
    }
    if idx == avail.len() {
        return false;
    }
    let (part, _) = avail[idx];
    let have = rest[&part];
    let max_take = have.min(need / part);
    for take in (0..=max_take).rev() {
        *rest.get_mut(&part).unwrap() = have - take;
        let ok = choose(avail, idx + 1, need - take * part, rest, tail, memo);
        *rest.get_mut(&part).unwrap() = have;
        if ok {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: &[usize]) -> Partition {
        Partition::from_parts(v.to_vec())
    }

    #[test]
    fn make_partition_sorts() {
        assert_eq!(Partition::new([1, 3, 2]).unwrap().parts(), &[3, 2, 1]);
        assert_eq!(Partition::new([]).unwrap(), Partition::empty());
        assert_eq!(Partition::new([2, 2, 2]).unwrap().parts(), &[2, 2, 2]);
        assert_eq!(Partition::new([0, 1]), Err(Error::InvalidPart(0)));
        assert_eq!(Partition::new([-2]), Err(Error::InvalidPart(-2)));
    }

    #[test]
    fn enumeration_small() {
        assert_eq!(partitions_of(0).unwrap(), vec![Partition::empty()]);
        assert_eq!(partitions_of(3).unwrap(), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(partitions_of(5).unwrap().len(), 7);
        assert!(matches!(partitions_of(41), Err(Error::GuardExceeded { .. })));
    }

    // Independent count: p(n) via the coin-change recurrence.
    fn count_dp(n: usize) -> usize {
        let mut ways = vec![0usize; n + 1];
        ways[0] = 1;
        for part in 1..=n {
            for s in part..=n {
                ways[s] += ways[s - part];
            }
        }
        ways[n]
    }

    #[test]
    fn enumeration_counts_match_recurrence() {
        for n in 0..=30 {
            let all = partitions_of(n).unwrap();
            assert_eq!(all.len(), count_dp(n), "n = {n}");
            assert!(all.windows(2).all(|w| w[0] > w[1]), "order at n = {n}");
            assert!(all.iter().all(|q| q.weight() == n));
        }
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(transpose(&p(&[3, 1])), p(&[2, 1, 1]));
        assert_eq!(transpose(&p(&[1, 1, 1])), p(&[3]));
        assert_eq!(transpose(&Partition::empty()), Partition::empty());
    }

    #[test]
    fn transpose_is_involution() {
        for n in 0..=20 {
            for q in partitions_of(n).unwrap() {
                assert_eq!(transpose(&transpose(&q)), q);
            }
        }
    }

    #[test]
    fn refinement_examples() {
        assert!(refines_to(&p(&[1, 1, 1]), &p(&[2, 1])));
        assert!(refines_to(&p(&[2, 1, 1]), &p(&[2, 2])));
        assert!(!refines_to(&p(&[3, 1]), &p(&[2, 2])));
        assert!(!refines_to(&p(&[2, 1]), &p(&[2, 2])));
    }

    // Brute force: assign each part of lambda to a block of mu.
    fn refines_brute(lambda: &Partition, mu: &Partition) -> bool {
        if lambda.weight() != mu.weight() {
            return false;
        }
        fn go(i: usize, l: &[usize], sums: &mut Vec<usize>, mu: &[usize]) -> bool {
            if i == l.len() {
                return sums.iter().zip(mu).all(|(a, b)| a == b);
            }
            for b in 0..mu.len() {
                if sums[b] + l[i] <= mu[b] {
                    sums[b] += l[i];
                    if go(i + 1, l, sums, mu) {
                        return true;
                    }
                    sums[b] -= l[i];
                }
            }
            false
        }
        go(0, lambda.parts(), &mut vec![0; mu.len()], mu.parts())
    }

    #[test]
    fn refinement_matches_brute_force() {
        for n in 0..=8 {
            let all = partitions_of(n).unwrap();
            for a in &all {
                for b in &all {
                    assert_eq!(refines_to(a, b), refines_brute(a, b), "{a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn refinement_order_laws() {
        for n in 1..=7 {
            let all = partitions_of(n).unwrap();
            for a in &all {
                assert!(refines_to(a, &Partition::single(n)));
                assert!(refines_to(a, a));
                for b in &all {
                    for c in &all {
                        if refines_to(a, b) && refines_to(b, c) {
                            assert!(refines_to(a, c));
                        }
                    }
                }
            }
        }
        assert!(!refines_to(&p(&[1, 1]), &p(&[3])));
    }

    #[test]
    fn text_forms() {
        assert_eq!(p(&[3, 2, 1]).to_string(), "[3,2,1]");
        assert_eq!(Partition::empty().to_string(), "[]");
        assert_eq!("[1, 3,2]".parse::<Partition>().unwrap(), p(&[3, 2, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("[0]".parse::<Partition>().is_err());
        assert_eq!(serde_json::to_string(&p(&[2, 1])).unwrap(), "[2,1]");
    }

    #[test]
    fn multiplicities_and_union() {
        assert_eq!(p(&[3, 3, 1]).multiplicities(), vec![(3, 2), (1, 1)]);
        assert_eq!(p(&[2]).union(&p(&[2, 1])), p(&[2, 2, 1]));
        assert_eq!(p(&[3, 1]).with_part(2), p(&[3, 2, 1]));
    }

    proptest! {
        #[test]
        fn union_is_sorted_concat(a in proptest::collection::vec(1usize..9, 0..6),
                                  b in proptest::collection::vec(1usize..9, 0..6)) {
            let mut all = a.clone();
            all.extend(&b);
            prop_assert_eq!(p(&a).union(&p(&b)), p(&all));
        }

        #[test]
        fn display_parse_round_trip(a in proptest::collection::vec(1usize..20, 0..8)) {
            let q = p(&a);
            prop_assert_eq!(q.to_string().parse::<Partition>().unwrap(), q);
        }
    }
}

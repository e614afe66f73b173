//! Permutations in one-line notation, pattern containment, structural edits
//! and lexicographic enumeration.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest length accepted by [`unrank`], [`rank`] and [`Lexicographic`]; `20!` still fits in a `u64`.
pub const MAX_ENUM_LEN: usize = 20;

/// A permutation of `{1, ..., n}` in one-line notation.
///
/// Values are stored as `u8`, so `n` is limited to 255. Positions are
/// 1-based in every public method that takes or returns a position.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct Permutation(Vec<u8>);

impl Permutation {
    /// Builds a permutation from its values, checking that they form a bijection on `1..=n`.
    pub fn new(values: Vec<u8>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            let v = v as usize;
            if v == 0 || v > n {
                return Err(Error::Gap { len: n, value: v });
            }
            if seen[v] {
                return Err(Error::DuplicateValue(v));
            }
            seen[v] = true;
        }
        Ok(Permutation(values))
    }

    /// Wraps values already known to be a permutation.
    pub(crate) fn from_vec_unchecked(values: Vec<u8>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation(values)
    }

    pub fn identity(n: usize) -> Self {
        assert!(n <= u8::MAX as usize);
        Permutation((1..=n as u8).collect())
    }

    pub fn empty() -> Self {
        Permutation(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[u8] {
        &self.0
    }

    pub fn into_values(self) -> Vec<u8> {
        self.0
    }

    /// Value at 1-based `position`.
    pub fn at(&self, position: usize) -> u8 {
        self.0[position - 1]
    }

    /// `pos[v]` is the 0-based position of value `v`; index 0 is unused.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.len() + 1];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v as usize] = i;
        }
        pos
    }

    /// 1-based position of value 1, or `None` for the empty permutation.
    pub fn position_of_one(&self) -> Option<usize> {
        self.0.iter().position(|&v| v == 1).map(|i| i + 1)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Group inverse.
    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = (i + 1) as u8;
        }
        Permutation(inv)
    }

    pub fn reverse(&self) -> Self {
        Permutation(self.0.iter().rev().copied().collect())
    }

    /// Removes the entry at 1-based `position` and closes the gap in the value set.
    pub fn delete_entry(&self, position: usize) -> Result<Self> {
        if position == 0 || position > self.len() {
            return Err(Error::PositionOutOfRange {
                position,
                max: self.len(),
            });
        }
        Ok(self.delete_entry_unchecked(position - 1))
    }

    /// Deletes the entry at 0-based `index`.
    pub(crate) fn delete_entry_unchecked(&self, index: usize) -> Self {
        let removed = self.0[index];
        Permutation(
            self.0
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != index)
                .map(|(_, &v)| if v > removed { v - 1 } else { v })
                .collect(),
        )
    }

    /// Shifts every value up by one and inserts a 1 at 1-based `position`.
    pub fn insert_min(&self, position: usize) -> Result<Self> {
        if position == 0 || position > self.len() + 1 {
            return Err(Error::PositionOutOfRange {
                position,
                max: self.len() + 1,
            });
        }
        let mut values: Vec<u8> = self.0.iter().map(|&v| v + 1).collect();
        values.insert(position - 1, 1);
        Ok(Permutation(values))
    }

    /// Appends value `n + 1` at 0-based `index`.
    pub(crate) fn insert_max_unchecked(&self, index: usize) -> Self {
        let mut values = Vec::with_capacity(self.len() + 1);
        values.extend_from_slice(&self.0[..index]);
        values.push(self.len() as u8 + 1);
        values.extend_from_slice(&self.0[index..]);
        Permutation(values)
    }

    /// True iff some subsequence of `self` is order-isomorphic to `pattern`.
    pub fn contains(&self, pattern: &Permutation) -> bool {
        contains_pattern(self.values(), pattern.values())
    }

    /// Inversion counts attributed to left positions and right values.
    pub fn inversion_profile(&self) -> InversionProfile {
        let n = self.len();
        let mut inv_left = vec![0usize; n];
        let mut inv_right = vec![0usize; n];
        for i in 0..n {
            for j in i + 1..n {
                if self.0[i] > self.0[j] {
                    inv_left[i] += 1;
                    inv_right[self.0[j] as usize - 1] += 1;
                }
            }
        }
        InversionProfile {
            inv_left,
            inv_right,
        }
    }

    pub fn inversions(&self) -> usize {
        self.inversion_profile().inv_left.iter().sum()
    }
}

impl fmt::Display for Permutation {
    /// Compact digits when `n <= 9`, comma separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
        } else {
            for (i, v) in self.0.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_permutation(s)
    }
}

impl TryFrom<Vec<u8>> for Permutation {
    type Error = Error;

    fn try_from(values: Vec<u8>) -> Result<Self> {
        Permutation::new(values)
    }
}

impl From<Permutation> for Vec<u8> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

/// Parses `"2413"` (compact, `n <= 9` only) or `"2, 4, 1, 3"` / `"2 4 1 3"`.
pub fn parse_permutation(text: &str) -> Result<Permutation> {
    let text = text.trim();
    let separated = text.contains(|c: char| c == ',' || c.is_whitespace());
    let values: Vec<usize> = if separated {
        text.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::BadToken(t.to_string())))
            .collect::<Result<_>>()?
    } else {
        text.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::BadToken(c.to_string()))
            })
            .collect::<Result<_>>()?
    };
    if !separated && values.len() > 9 {
        return Err(Error::AmbiguousCompact(values.len()));
    }
    if values.len() > u8::MAX as usize {
        return Err(Error::TooLong(values.len()));
    }
    let n = values.len();
    let mut bytes = Vec::with_capacity(n);
    for v in values {
        if v == 0 || v > n {
            return Err(Error::Gap { len: n, value: v });
        }
        bytes.push(v as u8);
    }
    Permutation::new(bytes)
}

/// Per-position and per-value inversion counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InversionProfile {
    /// `inv_left[i]`: inversions whose left (larger) entry sits at position `i + 1`.
    pub inv_left: Vec<usize>,
    /// `inv_right[v - 1]`: inversions whose right (smaller) entry is the value `v`.
    pub inv_right: Vec<usize>,
}

/// Backtracking containment test over raw value slices.
///
/// For each pattern position the nearest earlier pattern values below and
/// above are precomputed, so each candidate is checked in constant time.
pub fn contains_pattern(host: &[u8], pattern: &[u8]) -> bool {
    let k = pattern.len();
    if k == 0 {
        return true;
    }
    if k > host.len() {
        return false;
    }
    let bounds = pattern_bounds(pattern);
    let mut chosen = vec![0usize; k];
    search(host, &bounds, &mut chosen, 0, 0)
}

/// `(lower, upper)`: indices of earlier pattern positions holding the closest
/// smaller and larger values.
fn pattern_bounds(pattern: &[u8]) -> Vec<(Option<usize>, Option<usize>)> {
    (0..pattern.len())
        .map(|j| {
            let mut lower: Option<usize> = None;
            let mut upper: Option<usize> = None;
            for a in 0..j {
                if pattern[a] < pattern[j] {
                    if lower.is_none_or(|l| pattern[a] > pattern[l]) {
                        lower = Some(a);
                    }
                } else if upper.is_none_or(|u| pattern[a] < pattern[u]) {
                    upper = Some(a);
                }
            }
            (lower, upper)
        })
        .collect()
}

fn search(
    host: &[u8],
    bounds: &[(Option<usize>, Option<usize>)],
    chosen: &mut [usize],
    j: usize,
    start: usize,
) -> bool {
    let k = bounds.len();
    if j == k {
        return true;
    }
    let (lower, upper) = bounds[j];
    // leave room for the remaining k - j - 1 pattern entries
    let last = host.len() - (k - j);
    for idx in start..=last {
        let v = host[idx];
        if lower.is_some_and(|l| host[chosen[l]] >= v) {
            continue;
        }
        if upper.is_some_and(|u| host[chosen[u]] <= v) {
            continue;
        }
        chosen[j] = idx;
        if search(host, bounds, chosen, j + 1, idx + 1) {
            return true;
        }
    }
    false
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// The permutation of length `n` with lexicographic rank `rank`.
pub fn unrank(n: usize, rank: u64) -> Result<Permutation> {
    if n > MAX_ENUM_LEN {
        return Err(Error::CapExceeded {
            what: "enumeration length",
            requested: n,
            cap: MAX_ENUM_LEN,
        });
    }
    let total = factorial(n);
    if rank >= total {
        return Err(Error::RankOutOfRange { rank, total });
    }
    let mut pool: Vec<u8> = (1..=n as u8).collect();
    let mut values = Vec::with_capacity(n);
    let mut rank = rank;
    for i in (0..n).rev() {
        let f = factorial(i);
        let idx = (rank / f) as usize;
        rank %= f;
        values.push(pool.remove(idx));
    }
    Ok(Permutation(values))
}

/// Lexicographic rank of `perm` among permutations of the same length.
pub fn rank(perm: &Permutation) -> u64 {
    let n = perm.len();
    assert!(n <= MAX_ENUM_LEN);
    let v = perm.values();
    let mut r = 0u64;
    for i in 0..n {
        let smaller_after = v[i + 1..].iter().filter(|&&w| w < v[i]).count() as u64;
        r += smaller_after * factorial(n - 1 - i);
    }
    r
}

/// In-place next permutation in lexicographic order; false when `a` was the last one.
pub fn next_permutation(a: &mut [u8]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Iterator over a rank range of `S_n` in lexicographic order.
#[derive(Clone, Debug)]
pub struct Lexicographic {
    current: Option<Vec<u8>>,
    remaining: u64,
}

impl Lexicographic {
    /// All of `S_n`.
    pub fn new(n: usize) -> Result<Self> {
        Self::range(n, 0, factorial(n.min(MAX_ENUM_LEN)))
    }

    /// Ranks `start..end`.
    pub fn range(n: usize, start: u64, end: u64) -> Result<Self> {
        let total = if n > MAX_ENUM_LEN {
            return Err(Error::CapExceeded {
                what: "enumeration length",
                requested: n,
                cap: MAX_ENUM_LEN,
            });
        } else {
            factorial(n)
        };
        if start > end || end > total {
            return Err(Error::RankOutOfRange {
                rank: end.max(start),
                total,
            });
        }
        let current = if start < end {
            Some(unrank(n, start)?.0)
        } else {
            None
        };
        Ok(Lexicographic {
            current,
            remaining: end - start,
        })
    }

    /// Visits each permutation as a borrowed slice, avoiding an allocation per item.
    pub fn for_each_slice(mut self, mut f: impl FnMut(&[u8])) {
        if let Some(mut cur) = self.current.take() {
            while self.remaining > 0 {
                f(&cur);
                self.remaining -= 1;
                if self.remaining > 0 {
                    next_permutation(&mut cur);
                }
            }
        }
    }
}

impl Iterator for Lexicographic {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.remaining == 0 {
            return None;
        }
        let cur = self.current.as_mut()?;
        let out = Permutation(cur.clone());
        self.remaining -= 1;
        if self.remaining > 0 {
            next_permutation(cur);
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = self.remaining as usize;
        (r, Some(r))
    }
}

/// Lexicographic enumeration of `S_n`, optionally limited to a rank range.
pub fn enumerate_sn(n: usize, rank_range: Option<(u64, u64)>) -> Result<Lexicographic> {
    match rank_range {
        Some((a, b)) => Lexicographic::range(n, a, b),
        None => Lexicographic::new(n),
    }
}

/// Splits `0..n!` into at most `chunks` contiguous rank ranges.
pub fn rank_chunks(n: usize, chunks: usize) -> Vec<(u64, u64)> {
    let total = factorial(n);
    let chunks = (chunks.max(1) as u64).min(total.max(1));
    let step = total.div_ceil(chunks);
    (0..chunks)
        .map(|c| (c * step, ((c + 1) * step).min(total)))
        .filter(|(a, b)| a < b)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn parse_forms() {
        assert_eq!(p("2413").values(), &[2, 4, 1, 3]);
        assert_eq!(p("2, 4, 1, 3").values(), &[2, 4, 1, 3]);
        assert_eq!(p("2 4 1 3").values(), &[2, 4, 1, 3]);
        assert_eq!(p("").len(), 0);
        assert_eq!(
            p("10,2,3,4,5,6,7,8,9,1").to_string(),
            "10,2,3,4,5,6,7,8,9,1"
        );
    }

    #[test]
    fn parse_errors() {
        assert!(matches!("2414".parse::<Permutation>(), Err(Error::DuplicateValue(4))));
        assert!(matches!("1245".parse::<Permutation>(), Err(Error::Gap { .. })));
        assert!(matches!("1,x,2".parse::<Permutation>(), Err(Error::BadToken(_))));
        assert!(matches!("0".parse::<Permutation>(), Err(Error::Gap { .. })));
    }

    #[test]
    fn containment_examples() {
        assert!(p("4127356").contains(&p("231")));
        assert!(!p("4127356").contains(&p("321")));
        assert!(p("35241").contains(&p("3241")));
        assert!(p("2413").contains(&Permutation::empty()));
        assert!(!p("12").contains(&p("123")));
    }

    #[test]
    fn deletion_and_insertion() {
        assert_eq!(p("2413").delete_entry(2).unwrap(), p("213"));
        assert_eq!(p("231").delete_entry(3).unwrap(), p("12"));
        assert_eq!(p("231").delete_entry(2).unwrap(), p("21"));
        assert_eq!(p("1").delete_entry(1).unwrap(), Permutation::empty());
        assert!(p("12").delete_entry(3).is_err());
        assert!(p("12").delete_entry(0).is_err());

        assert_eq!(p("231").insert_min(4).unwrap(), p("3421"));
        assert_eq!(p("12").insert_min(3).unwrap(), p("231"));
        assert_eq!(Permutation::empty().insert_min(1).unwrap(), p("1"));
        assert!(p("12").insert_min(4).is_err());
    }

    #[test]
    fn reversal() {
        assert_eq!(p("2413").reverse(), p("3142"));
        assert_eq!(p("21534").reverse(), p("43512"));
    }

    #[test]
    fn inversion_profile_example() {
        let prof = p("3142").inversion_profile();
        assert_eq!(prof.inv_left, vec![2, 0, 1, 0]);
        assert_eq!(prof.inv_right, vec![1, 2, 0, 0]);
        let id = Permutation::identity(5).inversion_profile();
        assert!(id.inv_left.iter().chain(&id.inv_right).all(|&c| c == 0));
    }

    #[test]
    fn lexicographic_s3() {
        let all: Vec<String> = enumerate_sn(3, None).unwrap().map(|q| q.to_string()).collect();
        assert_eq!(all, ["123", "132", "213", "231", "312", "321"]);
        assert_eq!(unrank(3, 3).unwrap(), p("231"));
        assert_eq!(rank(&p("231")), 3);
        assert!(unrank(3, 6).is_err());
    }

    #[test]
    fn rank_unrank_brute_force() {
        for n in 0..=6 {
            let listed: Vec<Permutation> = enumerate_sn(n, None).unwrap().collect();
            assert_eq!(listed.len() as u64, factorial(n));
            for (r, q) in listed.iter().enumerate() {
                assert_eq!(unrank(n, r as u64).unwrap(), *q);
                assert_eq!(rank(q), r as u64);
            }
            for w in listed.windows(2) {
                assert!(w[0] < w[1]);
            }
        }
    }

    #[test]
    fn chunks_partition_sn() {
        for n in 0..=6 {
            for c in [1, 3, 7, 1000] {
                let joined: Vec<Permutation> = rank_chunks(n, c)
                    .into_iter()
                    .flat_map(|(a, b)| enumerate_sn(n, Some((a, b))).unwrap())
                    .collect();
                let full: Vec<Permutation> = enumerate_sn(n, None).unwrap().collect();
                assert_eq!(joined, full);
            }
        }
    }

    #[test]
    fn s10_count() {
        let mut count = 0u64;
        Lexicographic::new(10).unwrap().for_each_slice(|_| count += 1);
        assert_eq!(count, 3_628_800);
    }
}

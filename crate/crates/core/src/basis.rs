//! Bases of the classes `{σ : rev-tier(σ) <= t}` and enumeration of
//! avoidance classes.
//!
//! A basis element has rev-tier at least `t + 1` while every one-entry
//! deletion has rev-tier at most `t`; since deleting entries never raises the
//! rev-tier, single deletions are enough. Basis elements have length between
//! `t + 3` and `3(t + 1)`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pairs::rev_tier;
use crate::perm::{contains_pattern, Permutation};
use crate::sweep::par_fold;

pub const BASIS_SCHEMA: &str = "revtier.basis.v1";
pub const MAX_BASIS_LEN: usize = 12;
pub const MAX_AV_N: usize = 11;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    /// Classify every permutation of each length.
    Exhaustive,
    /// Grow class members one length at a time and test their extensions.
    Extension,
}

impl Strategy {
    /// Exhaustive for `t <= 1`, extension above.
    pub fn default_for(t: usize) -> Strategy {
        if t <= 1 {
            Strategy::Exhaustive
        } else {
            Strategy::Extension
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisReport {
    pub tier_bound: usize,
    /// Elements grouped by length, each group sorted lexicographically.
    pub elements: BTreeMap<usize, Vec<Permutation>>,
    pub search_bound: usize,
    /// True when the search reached the length bound `3(t + 1)`.
    pub complete: bool,
}

impl BasisReport {
    pub fn all(&self) -> impl Iterator<Item = &Permutation> {
        self.elements.values().flatten()
    }

    pub fn len(&self) -> usize {
        self.elements.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Number of elements of each length, omitting empty lengths.
    pub fn histogram(&self) -> BTreeMap<usize, usize> {
        self.elements
            .iter()
            .filter(|(_, v)| !v.is_empty())
            .map(|(&n, v)| (n, v.len()))
            .collect()
    }

    /// One permutation per line, shortest first.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for p in self.all() {
            writeln!(out, "{p}").unwrap();
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let by_len: serde_json::Map<String, serde_json::Value> = self
            .elements
            .iter()
            .filter(|(_, v)| !v.is_empty())
            .map(|(n, v)| {
                (
                    n.to_string(),
                    serde_json::Value::from(v.iter().map(|p| p.to_string()).collect::<Vec<_>>()),
                )
            })
            .collect();
        serde_json::json!({
            "schema": BASIS_SCHEMA,
            "tier_bound": self.tier_bound,
            "complete": self.complete,
            "search_bound": self.search_bound,
            "count": self.len(),
            "elements": by_len,
        })
    }
}

/// Length bound `3(t + 1)` on basis elements.
pub fn length_bound(t: usize) -> usize {
    3 * (t + 1)
}

fn basis_test(values: &[u8], t: usize) -> bool {
    if rev_tier(values) <= t {
        return false;
    }
    let n = values.len();
    let mut buf = Vec::with_capacity(n);
    (0..n).all(|skip| {
        delete_into(values, skip, &mut buf);
        rev_tier(&buf) <= t
    })
}

fn delete_into(values: &[u8], skip: usize, buf: &mut Vec<u8>) {
    let removed = values[skip];
    buf.clear();
    buf.extend(
        values
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, &v)| if v > removed { v - 1 } else { v }),
    );
}

pub fn is_basis_element(perm: &Permutation, t: usize) -> bool {
    basis_test(perm.values(), t)
}

pub fn avoids_all(perm: &Permutation, basis: &[Permutation]) -> bool {
    basis.iter().all(|b| !perm.contains(b))
}

pub fn compute_basis(t: usize, max_len: usize, strategy: Strategy) -> Result<BasisReport> {
    compute_basis_with_progress(t, max_len, strategy, |_, _| {})
}

/// As [`compute_basis`], calling `progress(length, elements_found_at_length)`
/// after each length is finished.
pub fn compute_basis_with_progress(
    t: usize,
    max_len: usize,
    strategy: Strategy,
    mut progress: impl FnMut(usize, usize),
) -> Result<BasisReport> {
    if max_len > MAX_BASIS_LEN {
        return Err(Error::CapExceeded {
            what: "basis search length",
            requested: max_len,
            cap: MAX_BASIS_LEN,
        });
    }
    let mut elements = BTreeMap::new();
    match strategy {
        Strategy::Exhaustive => {
            for n in 1..=max_len {
                let mut found = par_fold(
                    n,
                    Vec::new,
                    |acc: &mut Vec<Permutation>, v| {
                        if basis_test(v, t) {
                            acc.push(Permutation::from_vec_unchecked(v.to_vec()));
                        }
                    },
                    |mut a, b| {
                        a.extend(b);
                        a
                    },
                );
                found.sort();
                progress(n, found.len());
                elements.insert(n, found);
            }
        }
        Strategy::Extension => {
            // class members of the current length; every length-(n+1) member
            // and basis element arises by inserting n + 1 into one of them
            let mut members = vec![Permutation::empty()];
            for n in 1..=max_len {
                let last_level = n == max_len;
                let results: Vec<(Vec<Permutation>, Vec<Permutation>)> = members
                    .par_iter()
                    .map(|m| {
                        let mut next = Vec::new();
                        let mut found = Vec::new();
                        for idx in 0..=m.len() {
                            let cand = m.insert_max_unchecked(idx);
                            if rev_tier(cand.values()) <= t {
                                if !last_level {
                                    next.push(cand);
                                }
                            } else if basis_test(cand.values(), t) {
                                found.push(cand);
                            }
                        }
                        (next, found)
                    })
                    .collect();
                let mut next = Vec::new();
                let mut found = Vec::new();
                for (a, b) in results {
                    next.extend(a);
                    found.extend(b);
                }
                found.sort();
                progress(n, found.len());
                elements.insert(n, found);
                members = next;
            }
        }
    }
    Ok(BasisReport {
        tier_bound: t,
        elements,
        search_bound: max_len,
        complete: max_len >= length_bound(t),
    })
}

/// `counts[n]` is the number of permutations of length `n` avoiding every
/// element of `basis`, for `0 <= n <= max_n`.
pub fn enumerate_av(basis: &[Permutation], max_n: usize) -> Result<Vec<u64>> {
    if max_n > MAX_AV_N {
        return Err(Error::CapExceeded {
            what: "avoidance class length",
            requested: max_n,
            cap: MAX_AV_N,
        });
    }
    let patterns: Vec<&[u8]> = basis.iter().map(|b| b.values()).collect();
    if patterns.iter().any(|p| p.is_empty()) {
        // everything contains the empty permutation
        return Ok(vec![0; max_n + 1]);
    }
    let mut counts = vec![1u64];
    let mut members = vec![Permutation::empty()];
    for n in 1..=max_n {
        let keep = n < max_n;
        let results: Vec<(u64, Vec<Permutation>)> = members
            .par_iter()
            .map(|m| {
                let mut kept = Vec::new();
                let mut count = 0;
                for idx in 0..=m.len() {
                    let cand = m.insert_max_unchecked(idx);
                    if patterns.iter().all(|p| !contains_pattern(cand.values(), p)) {
                        count += 1;
                        if keep {
                            kept.push(cand);
                        }
                    }
                }
                (count, kept)
            })
            .collect();
        let mut next = Vec::new();
        let mut total = 0;
        for (c, k) in results {
            total += c;
            next.extend(k);
        }
        counts.push(total);
        members = next;
    }
    Ok(counts)
}

/// `{2413, 2431, 23154}`
pub fn b1() -> Vec<Permutation> {
    ["2413", "2431", "23154"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect()
}

pub fn b2() -> Vec<Permutation> {
    [
        "24153", "24513", "24531", "42513", "42531", "231564", "261453", "523164", "562413",
        "562431", "6723154",
    ]
    .iter()
    .map(|s| s.parse().unwrap())
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn basis_membership() {
        assert!(is_basis_element(&p("2413"), 1));
        assert!(is_basis_element(&p("24153"), 2));
        assert!(!is_basis_element(&p("3241"), 1));
        assert!(!is_basis_element(&p("24153"), 1));
    }

    #[test]
    fn avoidance() {
        assert!(!avoids_all(&p("35241"), &[p("231")]));
        assert!(avoids_all(&p("35241"), &[]));
    }

    #[test]
    fn b1_both_strategies() {
        for s in [Strategy::Exhaustive, Strategy::Extension] {
            let r = compute_basis(1, 6, s).unwrap();
            let all: Vec<Permutation> = r.all().cloned().collect();
            assert_eq!(all, b1());
            assert!(r.complete);
        }
    }

    #[test]
    fn av_small() {
        assert_eq!(enumerate_av(&[p("231")], 5).unwrap()[5], 42);
        assert_eq!(
            enumerate_av(&[p("4321"), p("4213")], 7).unwrap()[1..],
            [1, 2, 6, 22, 89, 380, 1678]
        );
        assert_eq!(enumerate_av(&[], 4).unwrap(), vec![1, 1, 2, 6, 24]);
        assert!(enumerate_av(&[], 12).is_err());
    }

    #[test]
    fn report_serialization() {
        let r = compute_basis(1, 5, Strategy::Extension).unwrap();
        assert!(!r.complete);
        assert_eq!(r.to_text(), "2413\n2431\n23154\n");
        let j = r.to_json();
        assert_eq!(j["elements"]["4"][1], "2431");
        assert_eq!(j["schema"], BASIS_SCHEMA);
    }
}

//! Entringer numbers, down/up alternating permutations and the permutations
//! of maximal rev-tier.
//!
//! `R_{n,k}` is the set of length-`n` permutations of rev-tier `n - 2` whose
//! 1 sits in position `k + 1`. The bijection [`bijection_f`] sends the
//! alternating permutations of length `n - 1` starting with `k` onto it, so
//! `|R_{n,k}| = E(n - 1, k)`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pairs::rev_tier;
use crate::perm::Permutation;
use crate::sweep::par_fold;

pub const MAX_ALTERNATING_N: usize = 11;
pub const MAX_FAMILY_N: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntringerTable {
    pub max_n: usize,
    /// `entries[n][k]` for `1 <= k <= n`; index 0 unused in both coordinates.
    entries: Vec<Vec<BigUint>>,
}

impl EntringerTable {
    pub fn get(&self, n: usize, k: usize) -> BigUint {
        if n == 0 || n > self.max_n || k == 0 || k > n {
            return BigUint::zero();
        }
        self.entries[n][k].clone()
    }

    pub fn row(&self, n: usize) -> &[BigUint] {
        &self.entries[n][1..]
    }

    /// The Euler number `E_n`.
    pub fn row_sum(&self, n: usize) -> BigUint {
        self.row(n).iter().sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = (1..=self.max_n)
            .map(|n| {
                serde_json::json!({
                    "n": n,
                    "entries": self.row(n).iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                    "sum": self.row_sum(n).to_string(),
                })
            })
            .collect();
        serde_json::json!({ "max_n": self.max_n, "rows": rows })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,k,entringer\n");
        for n in 1..=self.max_n {
            for k in 1..=n {
                out.push_str(&format!("{n},{k},{}\n", self.entries[n][k]));
            }
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for n in 1..=self.max_n {
            let cells: Vec<String> = self.row(n).iter().map(|v| v.to_string()).collect();
            out.push_str(&format!("{n:>3}: {}  (sum {})\n", cells.join(" "), self.row_sum(n)));
        }
        out
    }
}

/// Boustrophedon recurrence `E(n,k) = E(n,k-1) + E(n-1,n+1-k)`.
pub fn entringer_table(max_n: usize) -> Result<EntringerTable> {
    if max_n == 0 {
        return Err(Error::InvalidArgument("max_n must be at least 1".into()));
    }
    let mut entries = vec![vec![BigUint::zero()]];
    entries.push(vec![BigUint::zero(), BigUint::one()]);
    for n in 2..=max_n {
        let mut row = vec![BigUint::zero(); n + 1];
        for k in 2..=n {
            row[k] = &row[k - 1] + &entries[n - 1][n + 1 - k];
        }
        entries.push(row);
    }
    Ok(EntringerTable { max_n, entries })
}

/// `π₁ > π₂ < π₃ > ...`
pub fn is_alternating_downup(perm: &Permutation) -> bool {
    perm.values()
        .windows(2)
        .enumerate()
        .all(|(i, w)| if i % 2 == 0 { w[0] > w[1] } else { w[0] < w[1] })
}

/// Down/up alternating permutations of length `n` in lexicographic order,
/// restricted to first entry `k` when given.
pub fn enumerate_alternating(n: usize, k: Option<usize>) -> Result<Vec<Permutation>> {
    if n > MAX_ALTERNATING_N {
        return Err(Error::CapExceeded {
            what: "alternating permutation length",
            requested: n,
            cap: MAX_ALTERNATING_N,
        });
    }
    let mut out = Vec::new();
    if n == 0 {
        if k.is_none() {
            out.push(Permutation::empty());
        }
        return Ok(out);
    }
    let mut used = vec![false; n + 1];
    let mut cur = Vec::with_capacity(n);
    let firsts: Vec<u8> = match k {
        Some(k) if k == 0 || k > n => return Ok(out),
        Some(k) => vec![k as u8],
        None => (1..=n as u8).collect(),
    };
    for f in firsts {
        used[f as usize] = true;
        cur.push(f);
        extend_alternating(n, &mut cur, &mut used, &mut out);
        cur.pop();
        used[f as usize] = false;
    }
    Ok(out)
}

fn extend_alternating(n: usize, cur: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Permutation>) {
    if cur.len() == n {
        out.push(Permutation::from_vec_unchecked(cur.clone()));
        return;
    }
    let last = *cur.last().unwrap();
    let descend = cur.len() % 2 == 1;
    for v in 1..=n as u8 {
        if used[v as usize] || (descend && v > last) || (!descend && v < last) {
            continue;
        }
        used[v as usize] = true;
        cur.push(v);
        extend_alternating(n, cur, used, out);
        cur.pop();
        used[v as usize] = false;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalTierFamily {
    pub n: usize,
    /// `R_{n,k}` keyed by `k`, each sorted; empty classes are omitted.
    pub members_by_k: BTreeMap<usize, Vec<Permutation>>,
}

impl MaximalTierFamily {
    pub fn count(&self, k: usize) -> usize {
        self.members_by_k.get(&k).map_or(0, Vec::len)
    }

    pub fn total(&self) -> usize {
        self.members_by_k.values().map(Vec::len).sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let by_k: serde_json::Map<String, serde_json::Value> = self
            .members_by_k
            .iter()
            .map(|(k, v)| {
                (
                    k.to_string(),
                    serde_json::Value::from(v.iter().map(|p| p.to_string()).collect::<Vec<_>>()),
                )
            })
            .collect();
        serde_json::json!({ "n": self.n, "total": self.total(), "members_by_k": by_k })
    }
}

/// Scans `S_n` for rev-tier `n - 2`.
pub fn maximal_tier_family(n: usize) -> Result<MaximalTierFamily> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "maximal tier family needs n >= 3, got {n}"
        )));
    }
    if n > MAX_FAMILY_N {
        return Err(Error::CapExceeded {
            what: "maximal tier family length",
            requested: n,
            cap: MAX_FAMILY_N,
        });
    }
    let members = par_fold(
        n,
        Vec::new,
        |acc: &mut Vec<Permutation>, v| {
            if rev_tier(v) == n - 2 {
                acc.push(Permutation::from_vec_unchecked(v.to_vec()));
            }
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    );
    let mut members_by_k: BTreeMap<usize, Vec<Permutation>> = BTreeMap::new();
    for p in members {
        let k = p.position_of_one().expect("nonempty") - 1;
        members_by_k.entry(k).or_default().push(p);
    }
    for v in members_by_k.values_mut() {
        v.sort();
    }
    Ok(MaximalTierFamily { n, members_by_k })
}

/// Sends an alternating permutation of length `n - 1` starting with `k` to a
/// member of `R_{n,k}`.
pub fn bijection_f(pi: &Permutation) -> Result<Permutation> {
    if pi.is_empty() || !is_alternating_downup(pi) {
        return Err(Error::NotAlternating(pi.to_string()));
    }
    let m = pi.len();
    let n = m + 1;
    let inv_l = pi.inversion_profile().inv_left;
    let mut slots: Vec<Option<u8>> = vec![None; n];
    for j in 1..=m {
        let rank = inv_l[j - 1] + if j % 2 == 1 { 2 } else { 1 };
        let idx = nth_open(&slots, rank).ok_or_else(|| Error::NotAlternating(pi.to_string()))?;
        slots[idx] = Some(j as u8);
    }
    let last = nth_open(&slots, 1).expect("one slot left");
    slots[last] = Some(n as u8);
    Ok(Permutation::from_vec_unchecked(
        slots.into_iter().map(|s| s.unwrap()).collect(),
    ))
}

fn nth_open(slots: &[Option<u8>], rank: usize) -> Option<usize> {
    slots
        .iter()
        .enumerate()
        .filter(|(_, s)| s.is_none())
        .nth(rank.checked_sub(1)?)
        .map(|(i, _)| i)
}

/// Inverse of [`bijection_f`]. Remaining values are ranked in ascending order.
pub fn bijection_f_inverse(sigma: &Permutation) -> Result<Permutation> {
    let n = sigma.len();
    if n < 2 || rev_tier(sigma.values()) != n - 2 {
        return Err(Error::NotMaximalTier(sigma.to_string()));
    }
    let inv_r = sigma.inversion_profile().inv_right;
    let mut remaining: Vec<u8> = (1..n as u8).collect();
    let mut out = Vec::with_capacity(n - 1);
    for j in 1..n {
        let rank = inv_r[j - 1] + if j % 2 == 1 { 0 } else { 1 };
        if rank == 0 || rank > remaining.len() {
            return Err(Error::NotMaximalTier(sigma.to_string()));
        }
        out.push(remaining.remove(rank - 1));
    }
    Ok(Permutation::from_vec_unchecked(out))
}

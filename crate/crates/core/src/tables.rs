//! Count tables by exact and cumulative rev-tier, and the refined counts
//! `η(n, k)`, `μ_U(n, t, k)`, `μ_D(n, t, k)` indexed by length `n`, rev-tier
//! `t` and the 1-based position `k` of the value 1.
//!
//! Brute-force tables come from exhaustive sweeps; the refined table also has
//! an independent route through the insertion recurrences, obtained by
//! tracking how inserting a new minimum at each position moves a permutation
//! between the three classes.

use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pairs::{tier_and_class, ClassLabel};
use crate::sweep::{merge_counts, par_fold};

pub const TABLE_SCHEMA: &str = "revtier.table.v1";
/// Hard cap for exhaustive tier tables.
pub const MAX_TIER_TABLE_N: usize = 11;
/// Length beyond which a sweep is considered long-running.
pub const DEFAULT_SWEEP_N: usize = 10;
pub const MAX_REFINED_N: usize = 10;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TableKind {
    ExactTier,
    CumulativeTier,
}

/// Counts indexed by `(n, t)`. Row `n` holds `t = 0..=max_tier(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub kind: TableKind,
    pub max_n: usize,
    rows: Vec<Vec<BigUint>>,
}

/// Largest rev-tier of a permutation of length `n`.
pub fn max_tier(n: usize) -> usize {
    n.saturating_sub(2)
}

impl CountTable {
    /// Count at `(n, t)`; zero outside the table for exact tables, `n!`
    /// beyond the last column for cumulative ones.
    pub fn get(&self, n: usize, t: usize) -> BigUint {
        if n == 0 || n > self.max_n {
            return BigUint::zero();
        }
        let row = &self.rows[n - 1];
        match row.get(t) {
            Some(v) => v.clone(),
            None => match self.kind {
                TableKind::ExactTier => BigUint::zero(),
                TableKind::CumulativeTier => row.last().cloned().unwrap_or_default(),
            },
        }
    }

    pub fn row(&self, n: usize) -> &[BigUint] {
        &self.rows[n - 1]
    }

    pub fn cumulative(&self) -> CountTable {
        match self.kind {
            TableKind::CumulativeTier => self.clone(),
            TableKind::ExactTier => CountTable {
                kind: TableKind::CumulativeTier,
                max_n: self.max_n,
                rows: self
                    .rows
                    .iter()
                    .map(|r| {
                        r.iter()
                            .scan(BigUint::zero(), |acc, v| {
                                *acc += v;
                                Some(acc.clone())
                            })
                            .collect()
                    })
                    .collect(),
            },
        }
    }

    /// Rows `n`, columns `t`, with blank cells where the exact table is empty.
    pub fn to_csv(&self) -> String {
        let cols = max_tier(self.max_n) + 1;
        let mut out = String::from("n");
        for t in 0..cols {
            match self.kind {
                TableKind::ExactTier => write!(out, ",t={t}").unwrap(),
                TableKind::CumulativeTier => write!(out, ",t<={t}").unwrap(),
            }
        }
        out.push('\n');
        for n in 1..=self.max_n {
            write!(out, "{n}").unwrap();
            for t in 0..cols {
                out.push(',');
                let filled = t <= max_tier(n) || self.kind == TableKind::CumulativeTier;
                if filled {
                    write!(out, "{}", self.get(n, t)).unwrap();
                }
            }
            out.push('\n');
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for n in 1..=self.max_n {
            let cols = match self.kind {
                TableKind::ExactTier => max_tier(n) + 1,
                TableKind::CumulativeTier => max_tier(self.max_n) + 1,
            };
            let cells: Vec<String> = (0..cols).map(|t| self.get(n, t).to_string()).collect();
            writeln!(out, "n={n:<3} {}", cells.join(" ")).unwrap();
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schema": TABLE_SCHEMA,
            "kind": self.kind,
            "max_n": self.max_n,
            "rows": (1..=self.max_n).map(|n| serde_json::json!({
                "n": n,
                "counts": self.row(n).iter().map(big_json).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }
}

pub(crate) fn big_json(v: &BigUint) -> serde_json::Value {
    match v.to_u64() {
        Some(x) => serde_json::Value::from(x),
        None => serde_json::Value::String(v.to_string()),
    }
}

fn check_cap(what: &'static str, requested: usize, cap: usize) -> Result<()> {
    if requested > cap {
        return Err(Error::CapExceeded {
            what,
            requested,
            cap,
        });
    }
    Ok(())
}

/// Histogram of rev-tiers over `S_n`, computed by a parallel sweep.
pub fn tier_histogram(n: usize) -> Vec<u64> {
    let mut hist = par_fold(
        n,
        || vec![0u64; max_tier(n) + 1],
        |acc, v| acc[crate::pairs::rev_tier(v)] += 1,
        merge_counts,
    );
    hist.resize(max_tier(n) + 1, 0);
    hist
}

/// Exact rev-tier counts for `1 <= n <= max_n`.
pub fn exact_tier_table(max_n: usize) -> Result<CountTable> {
    exact_tier_table_with_progress(max_n, |_| {})
}

/// As [`exact_tier_table`], calling `progress(n)` after each length completes.
pub fn exact_tier_table_with_progress(
    max_n: usize,
    mut progress: impl FnMut(usize),
) -> Result<CountTable> {
    check_cap("table length", max_n, MAX_TIER_TABLE_N)?;
    if max_n == 0 {
        return Err(Error::InvalidArgument("max_n must be at least 1".into()));
    }
    let rows = (1..=max_n)
        .map(|n| {
            let row = tier_histogram(n).into_iter().map(BigUint::from).collect();
            progress(n);
            row
        })
        .collect();
    Ok(CountTable {
        kind: TableKind::ExactTier,
        max_n,
        rows,
    })
}

pub fn cumulative_tier_table(max_n: usize) -> Result<CountTable> {
    Ok(exact_tier_table(max_n)?.cumulative())
}

/// `η`, `μ_U` and `μ_D` for `1 <= n <= max_n`; every lookup outside the stored range is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinedCounts {
    pub max_n: usize,
    /// `eta[n][k]`
    eta: Vec<Vec<BigUint>>,
    /// `mu_u[n][t][k]`
    mu_u: Vec<Vec<Vec<BigUint>>>,
    mu_d: Vec<Vec<Vec<BigUint>>>,
}

fn tier_slots(n: usize) -> usize {
    // one spare column: μ_D(n, t + 1, ·) is queried next to μ_U(n, t, ·)
    max_tier(n) + 2
}

impl RefinedCounts {
    fn zeros(max_n: usize) -> Self {
        let eta = (0..=max_n).map(|n| vec![BigUint::zero(); n + 2]).collect();
        let cube = || {
            (0..=max_n)
                .map(|n| vec![vec![BigUint::zero(); n + 2]; tier_slots(n)])
                .collect::<Vec<_>>()
        };
        RefinedCounts {
            max_n,
            eta,
            mu_u: cube(),
            mu_d: cube(),
        }
    }

    pub fn eta(&self, n: usize, k: usize) -> BigUint {
        self.eta
            .get(n)
            .and_then(|r| r.get(k))
            .cloned()
            .unwrap_or_default()
    }

    pub fn mu_u(&self, n: usize, t: usize, k: usize) -> BigUint {
        lookup(&self.mu_u, n, t, k)
    }

    pub fn mu_d(&self, n: usize, t: usize, k: usize) -> BigUint {
        lookup(&self.mu_d, n, t, k)
    }

    /// All permutations of length `n`, rev-tier `t`, with 1 at position `k`.
    pub fn f(&self, n: usize, t: usize, k: usize) -> BigUint {
        let base = self.mu_u(n, t, k) + self.mu_d(n, t, k);
        if t == 0 {
            base + self.eta(n, k)
        } else {
            base
        }
    }

    pub fn mu_u_total(&self, n: usize, t: usize) -> BigUint {
        (1..=n).map(|k| self.mu_u(n, t, k)).sum()
    }

    pub fn mu_d_total(&self, n: usize, t: usize) -> BigUint {
        (1..=n).map(|k| self.mu_d(n, t, k)).sum()
    }

    pub fn eta_total(&self, n: usize) -> BigUint {
        (1..=n).map(|k| self.eta(n, k)).sum()
    }

    pub fn f_total(&self, n: usize, t: usize) -> BigUint {
        (1..=n).map(|k| self.f(n, t, k)).sum()
    }

    /// Restriction to `n <= max_n`, for comparing tables of different sizes.
    pub fn truncated(&self, max_n: usize) -> RefinedCounts {
        let max_n = max_n.min(self.max_n);
        RefinedCounts {
            max_n,
            eta: self.eta[..=max_n].to_vec(),
            mu_u: self.mu_u[..=max_n].to_vec(),
            mu_d: self.mu_d[..=max_n].to_vec(),
        }
    }

    /// Every nonzero entry as `(family, n, t, k, count)`, in a fixed order.
    pub fn entries(&self) -> Vec<(&'static str, usize, usize, usize, BigUint)> {
        let mut out = Vec::new();
        for n in 1..=self.max_n {
            for k in 1..=n {
                let v = self.eta(n, k);
                if !v.is_zero() {
                    out.push(("eta", n, 0, k, v));
                }
            }
            for t in 0..=max_tier(n) {
                for k in 1..=n {
                    let v = self.mu_u(n, t, k);
                    if !v.is_zero() {
                        out.push(("mu_u", n, t, k, v));
                    }
                }
            }
            for t in 0..=max_tier(n) {
                for k in 1..=n {
                    let v = self.mu_d(n, t, k);
                    if !v.is_zero() {
                        out.push(("mu_d", n, t, k, v));
                    }
                }
            }
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("family,n,t,k,count\n");
        for (fam, n, t, k, v) in self.entries() {
            writeln!(out, "{fam},{n},{t},{k},{v}").unwrap();
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schema": TABLE_SCHEMA,
            "kind": "refined",
            "max_n": self.max_n,
            "entries": self.entries().into_iter().map(|(fam, n, t, k, v)| serde_json::json!({
                "family": fam, "n": n, "t": t, "k": k, "count": big_json(&v),
            })).collect::<Vec<_>>(),
        })
    }
}

fn lookup(cube: &[Vec<Vec<BigUint>>], n: usize, t: usize, k: usize) -> BigUint {
    cube.get(n)
        .and_then(|r| r.get(t))
        .and_then(|r| r.get(k))
        .cloned()
        .unwrap_or_default()
}

/// Refined counts by classifying every permutation of length at most `max_n`.
pub fn refined_counts_bruteforce(max_n: usize) -> Result<RefinedCounts> {
    check_cap("refined table length", max_n, MAX_REFINED_N)?;
    let mut table = RefinedCounts::zeros(max_n);
    for n in 1..=max_n {
        // flat index: class * (T * (n+1)) + t * (n+1) + k
        let tiers = tier_slots(n);
        let width = n + 1;
        let size = 3 * tiers * width;
        let counts = par_fold(
            n,
            || vec![0u64; size],
            |acc, v| {
                let (t, class) = tier_and_class(v);
                let k = v.iter().position(|&x| x == 1).unwrap() + 1;
                let c = match class {
                    ClassLabel::N => 0,
                    ClassLabel::MU => 1,
                    ClassLabel::MD => 2,
                };
                acc[c * tiers * width + t * width + k] += 1;
            },
            merge_counts,
        );
        for t in 0..tiers {
            for k in 1..=n {
                let at = |c: usize| BigUint::from(counts[c * tiers * width + t * width + k]);
                if t == 0 {
                    table.eta[n][k] = at(0);
                }
                table.mu_u[n][t][k] = at(1);
                table.mu_d[n][t][k] = at(2);
            }
        }
    }
    Ok(table)
}

/// Refined counts from the insertion recurrences, starting at `η(1, 1) = 1`.
pub fn refined_counts_recurrence(max_n: usize) -> Result<RefinedCounts> {
    if max_n == 0 {
        return Err(Error::InvalidArgument("max_n must be at least 1".into()));
    }
    let mut table = RefinedCounts::zeros(max_n);
    table.eta[1][1] = BigUint::from(1u8);
    for n in 1..max_n {
        let m = n + 1;
        // suffix sums over i >= j and prefix sums over i <= j of row n
        let suffix = |row: &dyn Fn(usize) -> BigUint, j: usize| -> BigUint {
            (j.max(1)..=n).map(row).sum()
        };
        let prefix = |row: &dyn Fn(usize) -> BigUint, j: isize| -> BigUint {
            if j < 1 {
                BigUint::zero()
            } else {
                (1..=(j as usize).min(n)).map(row).sum()
            }
        };
        let eta_n = |i: usize| table.eta(n, i);
        let mut next_eta = vec![BigUint::zero(); m + 2];
        for k in 1..=m {
            next_eta[k] = table.eta(n, k) + table.eta(n, k - 1);
        }
        let mut next_u = vec![vec![BigUint::zero(); m + 2]; tier_slots(m)];
        let mut next_d = vec![vec![BigUint::zero(); m + 2]; tier_slots(m)];
        for t in 0..=max_tier(m) {
            let mu_u_t = |i: usize| table.mu_u(n, t, i);
            let mu_d_t = |i: usize| table.mu_d(n, t, i);
            for k in 1..=m {
                let from_below = if t == 0 {
                    suffix(&eta_n, k + 1)
                } else {
                    suffix(&mu_d_t, k + 1)
                };
                next_u[t][k] = from_below + suffix(&mu_u_t, k.saturating_sub(1));
                if t >= 1 {
                    let raised = if t == 1 {
                        prefix(&eta_n, k as isize - 2)
                    } else {
                        let mu_u_lower = |i: usize| table.mu_u(n, t - 2, i);
                        prefix(&mu_u_lower, k as isize - 2)
                    };
                    next_d[t][k] = raised + prefix(&mu_d_t, k as isize);
                }
            }
        }
        table.eta[m] = next_eta;
        table.mu_u[m] = next_u;
        table.mu_d[m] = next_d;
    }
    Ok(table)
}

/// `binomial(n - 1, k - 1)`, the number of permutations of length `n` without
/// separated pairs whose 1 sits at position `k`.
pub fn eta_closed_form(n: usize, k: usize) -> Result<BigUint> {
    if k == 0 || k > n {
        return Err(Error::PositionOutOfRange { position: k, max: n });
    }
    Ok(binomial(n - 1, k - 1))
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u8);
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn small_exact_rows() {
        let t = exact_tier_table(5).unwrap();
        assert_eq!(t.row(1), &[b(1)]);
        assert_eq!(t.row(5), &[b(42), b(47), b(26), b(5)]);
        assert!(t.to_csv().lines().any(|l| l == "5,42,47,26,5"));
        assert!(t.to_csv().lines().any(|l| l == "3,5,1,,"));
    }

    #[test]
    fn cumulative_small() {
        let t = cumulative_tier_table(7).unwrap();
        assert_eq!(t.get(7, 2), b(3380));
        assert_eq!(t.get(7, 5), b(5040));
        assert_eq!(t.get(4, 8), b(24));
    }

    #[test]
    fn caps() {
        assert!(exact_tier_table(12).is_err());
        assert!(exact_tier_table(0).is_err());
        assert!(refined_counts_bruteforce(11).is_err());
    }

    #[test]
    fn eta_values() {
        assert_eq!(eta_closed_form(4, 2).unwrap(), b(3));
        assert_eq!(eta_closed_form(9, 1).unwrap(), b(1));
        let row: BigUint = (1..=6).map(|k| eta_closed_form(6, k).unwrap()).sum();
        assert_eq!(row, b(32));
        assert!(eta_closed_form(3, 0).is_err());
        assert!(eta_closed_form(3, 4).is_err());
    }

    #[test]
    fn refined_bruteforce_examples() {
        let r = refined_counts_bruteforce(7).unwrap();
        assert_eq!(r.eta_total(5), b(16));
        for n in 1..=7 {
            for t in 0..=max_tier(n) {
                assert!(r.mu_d(n, t, 1).is_zero());
            }
        }
        for k in 1..=2 {
            assert!(r.mu_u(1, 0, k).is_zero());
        }
        assert_eq!(r.mu_u_total(3, 0), b(1));
    }

    #[test]
    fn recurrence_matches_bruteforce_small() {
        let rec = refined_counts_recurrence(7).unwrap();
        let bf = refined_counts_bruteforce(7).unwrap();
        assert_eq!(rec, bf);
        assert_eq!(rec.mu_u_total(7, 1) + rec.mu_d_total(7, 1), b(1249));
    }
}

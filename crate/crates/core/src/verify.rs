//! Named invariant suites, run by `revtier verify <suite>`.
//!
//! Every check is exact. Exhaustive sweeps run up to the requested length,
//! except where a check is only meaningful or affordable at a smaller one
//! (the stacks-in-series machine and pattern checks stop at 8).

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::basis::{b1, b2, compute_basis, enumerate_av, is_basis_element, Strategy};
use crate::entringer::{
    bijection_f, bijection_f_inverse, entringer_table, enumerate_alternating, maximal_tier_family,
};
use crate::error::{Error, Result};
use crate::pairs::{
    max_tier_witness, orientations, rev_tier, rev_tier_by_pairs, rev_tier_by_pairs_dp,
    tier_and_class, ClassLabel, Orientation,
};
use crate::perm::{contains_pattern, factorial, rank, unrank, Lexicographic, Permutation};
use crate::series::{catalan_series, mu_u_series, tier_series, wilf_series, TruncatedSeries};
use crate::sorter::{emitted_per_pass, rev_tier_by_simulation, series_machine_sort};
use crate::sweep::par_fold;
use crate::tables::{
    cumulative_tier_table, exact_tier_table, max_tier, refined_counts_bruteforce,
    refined_counts_recurrence, RefinedCounts,
};

pub const VERIFY_SCHEMA: &str = "revtier.verify.v1";
pub const DEFAULT_VERIFY_N: usize = 9;
pub const MAX_VERIFY_N: usize = 10;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Suite {
    Permcore,
    Sorter,
    Pairs,
    Tables,
    Basis,
    Entringer,
    Series,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 8] = [
        "permcore", "sorter", "pairs", "tables", "basis", "entringer", "series", "all",
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Permcore => "permcore",
            Suite::Sorter => "sorter",
            Suite::Pairs => "pairs",
            Suite::Tables => "tables",
            Suite::Basis => "basis",
            Suite::Entringer => "entringer",
            Suite::Series => "series",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "permcore" => Suite::Permcore,
            "sorter" => Suite::Sorter,
            "pairs" => Suite::Pairs,
            "tables" => Suite::Tables,
            "basis" => Suite::Basis,
            "entringer" => Suite::Entringer,
            "series" => Suite::Series,
            "all" => Suite::All,
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "unknown suite {s:?}; expected one of {}",
                    Suite::NAMES.join(", ")
                )))
            }
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub max_n: usize,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            out.push_str(&format!("{mark} {}::{} ({} ms)", c.suite, c.name, c.millis));
            if !c.detail.is_empty() {
                out.push_str(" - ");
                out.push_str(&c.detail);
            }
            out.push('\n');
        }
        let failed = self.failures().count();
        out.push_str(&format!(
            "{} checks, {} failed\n",
            self.checks.len(),
            failed
        ));
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schema": VERIFY_SCHEMA,
            "max_n": self.max_n,
            "passed": self.passed(),
            "checks": self.checks,
        })
    }
}

/// Runs `suite` with exhaustive sweeps up to length `max_n`.
pub fn run(suite: Suite, max_n: usize) -> Result<VerifyReport> {
    run_with_progress(suite, max_n, |_| {})
}

/// As [`run`], handing each finished check to `progress`.
pub fn run_with_progress(
    suite: Suite,
    max_n: usize,
    mut progress: impl FnMut(&Check),
) -> Result<VerifyReport> {
    if max_n > MAX_VERIFY_N {
        return Err(Error::CapExceeded {
            what: "verify length",
            requested: max_n,
            cap: MAX_VERIFY_N,
        });
    }
    if max_n < 3 {
        return Err(Error::InvalidArgument(format!(
            "verify needs max_n >= 3, got {max_n}"
        )));
    }
    let suites: Vec<Suite> = match suite {
        Suite::All => vec![
            Suite::Permcore,
            Suite::Sorter,
            Suite::Pairs,
            Suite::Tables,
            Suite::Basis,
            Suite::Entringer,
            Suite::Series,
        ],
        s => vec![s],
    };
    let mut runner = Runner {
        suite: "",
        checks: Vec::new(),
        progress: &mut progress,
    };
    for s in suites {
        runner.suite = s.name();
        match s {
            Suite::Permcore => permcore_suite(&mut runner, max_n),
            Suite::Sorter => sorter_suite(&mut runner, max_n),
            Suite::Pairs => pairs_suite(&mut runner, max_n),
            Suite::Tables => tables_suite(&mut runner, max_n),
            Suite::Basis => basis_suite(&mut runner, max_n),
            Suite::Entringer => entringer_suite(&mut runner, max_n),
            Suite::Series => series_suite(&mut runner, max_n),
            Suite::All => unreachable!(),
        }
    }
    Ok(VerifyReport {
        max_n,
        checks: runner.checks,
    })
}

struct Runner<'a> {
    suite: &'static str,
    checks: Vec<Check>,
    progress: &'a mut dyn FnMut(&Check),
}

/// `Ok(detail)` passes, `Err(detail)` fails.
type Outcome = std::result::Result<String, String>;

impl Runner<'_> {
    fn check(&mut self, name: impl Into<String>, f: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let outcome = f();
        let (passed, detail) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        let c = Check {
            suite: self.suite,
            name: name.into(),
            passed,
            detail,
            millis: start.elapsed().as_millis(),
        };
        (self.progress)(&c);
        self.checks.push(c);
    }
}

/// Checks `pred` on every permutation of each length in `lens`; reports the
/// lexicographically first counterexample.
fn exhaustive(
    lens: impl IntoIterator<Item = usize>,
    pred: impl Fn(&[u8]) -> bool + Sync + Send,
) -> Outcome {
    let mut total = 0u64;
    for n in lens {
        let bad = par_fold(
            n,
            || None::<Vec<u8>>,
            |acc, v| {
                if acc.is_none() && !pred(v) {
                    *acc = Some(v.to_vec());
                }
            },
            |a, b| match (a, b) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            },
        );
        if let Some(v) = bad {
            return Err(format!(
                "counterexample {}",
                Permutation::from_vec_unchecked(v)
            ));
        }
        total += factorial(n);
    }
    Ok(format!("{total} permutations"))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn naive_contains(host: &[u8], pattern: &[u8]) -> bool {
    let n = host.len();
    let k = pattern.len();
    if k > n {
        return false;
    }
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .any(|m| {
            let sub: Vec<u8> = (0..n).filter(|i| m >> i & 1 == 1).map(|i| host[i]).collect();
            (0..k).all(|a| (0..k).all(|b| (sub[a] < sub[b]) == (pattern[a] < pattern[b])))
        })
}

fn permcore_suite(r: &mut Runner, max_n: usize) {
    let small = max_n.min(7);
    r.check("containment agrees with subsequence search", || {
        let patterns: Vec<Permutation> = (1..=4)
            .flat_map(|k| Lexicographic::new(k).unwrap())
            .collect();
        exhaustive(1..=small, |v| {
            patterns
                .iter()
                .all(|p| contains_pattern(v, p.values()) == naive_contains(v, p.values()))
        })
    });
    r.check("delete_entry inverts insert_min", || {
        exhaustive(0..=small, |v| {
            let p = Permutation::from_vec_unchecked(v.to_vec());
            (1..=v.len() + 1).all(|i| {
                p.insert_min(i)
                    .and_then(|q| q.delete_entry(i))
                    .is_ok_and(|q| q == p)
            })
        })
    });
    r.check("lexicographic enumeration and ranking", || {
        for n in 0..=max_n.min(8) {
            let mut count = 0u64;
            let mut prev: Option<Permutation> = None;
            for p in Lexicographic::new(n).map_err(|e| e.to_string())? {
                ensure(rank(&p) == count, || format!("rank of {p} is not {count}"))?;
                ensure(unrank(n, count).ok().as_ref() == Some(&p), || {
                    format!("unrank({n}, {count}) != {p}")
                })?;
                if let Some(q) = &prev {
                    ensure(q < &p, || format!("{q} does not precede {p}"))?;
                }
                prev = Some(p);
                count += 1;
            }
            ensure(count == factorial(n), || format!("{count} != {n}!"))?;
        }
        Ok(String::new())
    });
    r.check("inversions of a permutation and its inverse agree", || {
        exhaustive(1..=small, |v| {
            let p = Permutation::from_vec_unchecked(v.to_vec());
            let prof = p.inversion_profile();
            let l: usize = prof.inv_left.iter().sum();
            let rt: usize = prof.inv_right.iter().sum();
            l == rt && l == p.inverse().inversions()
        })
    });
}

fn sorter_suite(r: &mut Runner, max_n: usize) {
    r.check("simulation tier equals pair tier", || {
        exhaustive(1..=max_n, |v| {
            let p = Permutation::from_vec_unchecked(v.to_vec());
            rev_tier_by_simulation(&p).0 == rev_tier(v)
        })
    });
    r.check("every pass emits a value", || {
        exhaustive(1..=max_n, |v| emitted_per_pass(v).iter().all(|&e| e > 0))
    });
    let machine_n = max_n.min(8);
    r.check("k stacks in series sort exactly tier <= k - 1", || {
        exhaustive(1..=machine_n, |v| {
            let p = Permutation::from_vec_unchecked(v.to_vec());
            let t = rev_tier(v);
            (1..=v.len()).all(|k| series_machine_sort(&p, k).sorted == (t < k))
        })
    });
    r.check("machine states conserve the values", || {
        exhaustive(1..=max_n.min(6), |v| {
            let p = Permutation::from_vec_unchecked(v.to_vec());
            let n = v.len();
            let whole = |parts: &[&[u8]]| {
                let mut all: Vec<u8> = parts.concat();
                all.sort_unstable();
                all.into_iter().eq(1..=n as u8)
            };
            let (_, trace) = rev_tier_by_simulation(&p);
            let reverse_ok = trace
                .steps
                .iter()
                .all(|s| whole(&[&s.output, &s.stack, &s.input]));
            let series_ok = (1..=n).all(|k| {
                series_machine_sort(&p, k).trace.iter().all(|s| {
                    let mut parts: Vec<&[u8]> = vec![&s.input, &s.output];
                    parts.extend(s.stacks.iter().map(Vec::as_slice));
                    whole(&parts)
                })
            });
            reverse_ok && series_ok
        })
    });
}

fn pairs_suite(r: &mut Runner, max_n: usize) {
    r.check("greedy pair tier equals DP tier", || {
        exhaustive(1..=max_n, |v| {
            let p = Permutation::from_vec_unchecked(v.to_vec());
            rev_tier_by_pairs(&p).0 == rev_tier_by_pairs_dp(&p)
        })
    });
    let small = max_n.min(8);
    r.check("231 iff a Down pair, 132 iff an Up pair", || {
        exhaustive(1..=small, |v| {
            let p = Permutation::from_vec_unchecked(v.to_vec());
            let o = orientations(&p);
            contains_pattern(v, &[2, 3, 1]) == o.contains(&Orientation::Down)
                && contains_pattern(v, &[1, 3, 2]) == o.contains(&Orientation::Up)
        })
    });
    r.check("deleting an entry never raises the tier", || {
        exhaustive(1..=small, |v| {
            let p = Permutation::from_vec_unchecked(v.to_vec());
            let t = rev_tier(v);
            (0..v.len()).all(|i| rev_tier(p.delete_entry_unchecked(i).values()) <= t)
        })
    });
    r.check("maximal tier is n - 2 and attained", || {
        for n in 2..=12 {
            let w = max_tier_witness(n).map_err(|e| e.to_string())?;
            ensure(rev_tier(w.values()) == n - 2, || format!("witness {w} for n = {n}"))?;
        }
        exhaustive(2..=max_n, |v| rev_tier(v) <= v.len() - 2)
    });
    r.check("classes partition S_n", || {
        for n in 1..=max_n {
            let counts = par_fold(
                n,
                || [0u64; 3],
                |acc, v| {
                    let i = match tier_and_class(v).1 {
                        ClassLabel::N => 0,
                        ClassLabel::MU => 1,
                        ClassLabel::MD => 2,
                    };
                    acc[i] += 1;
                },
                |a, b| [a[0] + b[0], a[1] + b[1], a[2] + b[2]],
            );
            let sum: u64 = counts.iter().sum();
            ensure(sum == factorial(n), || format!("n = {n}: {counts:?}"))?;
        }
        Ok(String::new())
    });
    r.check("position of 1 in up and down classes", || {
        exhaustive(1..=max_n, |v| {
            let n = v.len();
            let k = v.iter().position(|&x| x == 1).unwrap() + 1;
            match tier_and_class(v).1 {
                ClassLabel::MU => k + 1 < n,
                ClassLabel::MD => k > 2,
                ClassLabel::N => true,
            }
        })
    });
    r.check("reversal swaps up and down classes", || {
        exhaustive(1..=max_n, |v| {
            let (t, c) = tier_and_class(v);
            let rev: Vec<u8> = v.iter().rev().copied().collect();
            let (rt, rc) = tier_and_class(&rev);
            match c {
                ClassLabel::MU => rc == ClassLabel::MD && rt == t + 1,
                ClassLabel::MD => rc == ClassLabel::MU && rt + 1 == t,
                ClassLabel::N => rc == ClassLabel::N && rt == t,
            }
        })
    });
}

fn compare_refined(a: &RefinedCounts, b: &RefinedCounts, max_n: usize) -> Outcome {
    for n in 1..=max_n {
        for k in 1..=n {
            ensure(a.eta(n, k) == b.eta(n, k), || format!("eta({n},{k})"))?;
            for t in 0..=max_tier(n) + 1 {
                ensure(a.mu_u(n, t, k) == b.mu_u(n, t, k), || format!("mu_U({n},{t},{k})"))?;
                ensure(a.mu_d(n, t, k) == b.mu_d(n, t, k), || format!("mu_D({n},{t},{k})"))?;
            }
        }
    }
    Ok(format!("n <= {max_n}"))
}

/// Count identities on the recurrence table.
pub fn refined_identities(rc: &RefinedCounts) -> Outcome {
    let top = rc.max_n;
    for n in 1..=top {
        for t in 0..=max_tier(n) {
            for k in [n, n.saturating_sub(1)] {
                ensure(rc.mu_u(n, t, k).is_zero(), || format!("mu_U({n},{t},{k}) != 0"))?;
            }
            for k in [1, 2] {
                ensure(rc.mu_d(n, t, k).is_zero(), || format!("mu_D({n},{t},{k}) != 0"))?;
            }
            for k in 1..=n {
                ensure(rc.mu_u(n, t, k) == rc.mu_d(n, t + 1, n - k + 1), || {
                    format!("mu_U({n},{t},{k}) != mu_D({n},{},{})", t + 1, n - k + 1)
                })?;
            }
            ensure(rc.mu_u_total(n, t) == rc.mu_d_total(n, t + 1), || {
                format!("totals differ at n = {n}, t = {t}")
            })?;
            if t >= 1 && n >= 3 {
                let s: BigUint = (1..n).map(|m| rc.mu_d(m, t, m)).sum();
                ensure(rc.mu_u(n, t, n - 2) == s, || format!("mu_U({n},{t},{})", n - 2))?;
            }
        }
    }
    Ok(format!("n <= {top}"))
}

fn tables_suite(r: &mut Runner, max_n: usize) {
    let brute_n = max_n.min(9);
    let rec = refined_counts_recurrence(12);
    r.check("recurrences match brute-force refined counts", || {
        let rec = rec.as_ref().map_err(|e| e.to_string())?;
        let brute = refined_counts_bruteforce(brute_n).map_err(|e| e.to_string())?;
        compare_refined(rec, &brute, brute_n)
    });
    r.check("refined count identities", || {
        refined_identities(rec.as_ref().map_err(|e| e.to_string())?)
    });
    r.check("refined counts add up to the tier table", || {
        let rec = rec.as_ref().map_err(|e| e.to_string())?;
        let table = exact_tier_table(max_n).map_err(|e| e.to_string())?;
        for n in 1..=max_n {
            let mut row_sum = BigUint::zero();
            for t in 0..=max_tier(n) {
                ensure(rec.f_total(n, t) == table.get(n, t), || format!("f({n},{t})"))?;
                row_sum += table.get(n, t);
            }
            ensure(row_sum == BigUint::from(factorial(n)), || format!("row {n}"))?;
        }
        Ok(format!("n <= {max_n}"))
    });
    r.check("maximal tier counts are Euler numbers", || {
        let table = exact_tier_table(max_n).map_err(|e| e.to_string())?;
        let e = entringer_table(max_n).map_err(|e| e.to_string())?;
        for n in 3..=max_n {
            ensure(table.get(n, n - 2) == e.row_sum(n - 1), || format!("n = {n}"))?;
        }
        Ok(String::new())
    });
}

fn basis_suite(r: &mut Runner, max_n: usize) {
    r.check("tier <= 1 iff avoiding B1, tier <= 2 iff avoiding B2", || {
        let (b1, b2) = (b1(), b2());
        exhaustive(1..=max_n, |v| {
            let t = rev_tier(v);
            let a1 = b1.iter().all(|b| !contains_pattern(v, b.values()));
            let a2 = b2.iter().all(|b| !contains_pattern(v, b.values()));
            (t <= 1) == a1 && (t <= 2) == a2
        })
    });
    let len = max_n.min(9);
    for t in 0..=2 {
        r.check(format!("extension and exhaustive agree for t = {t}"), || {
            let a = compute_basis(t, len, Strategy::Exhaustive).map_err(|e| e.to_string())?;
            let b = compute_basis(t, len, Strategy::Extension).map_err(|e| e.to_string())?;
            ensure(a == b, || "reports differ".into())?;
            if let Some(p) = a.all().find(|p| !is_basis_element(p, t)) {
                return Err(format!("{p} is not a basis element"));
            }
            let expected = match t {
                1 => Some(b1()),
                2 => Some(b2()),
                _ => None,
            };
            if let Some(exp) = expected {
                let got: Vec<Permutation> = a.all().cloned().collect();
                ensure(got == exp, || format!("got {got:?}"))?;
            }
            Ok(format!("{} elements up to length {len}", a.len()))
        });
    }
    r.check("Av(4321, 4213) and Av(B1) are equinumerous", || {
        let top = (max_n + 1).min(10);
        let a = enumerate_av(&["4321".parse().unwrap(), "4213".parse().unwrap()], top)
            .map_err(|e| e.to_string())?;
        let b = enumerate_av(&b1(), top).map_err(|e| e.to_string())?;
        let cum = cumulative_tier_table(max_n).map_err(|e| e.to_string())?;
        ensure(a == b, || format!("{a:?} != {b:?}"))?;
        for n in 1..=max_n {
            ensure(BigUint::from(a[n]) == cum.get(n, 1), || format!("n = {n}"))?;
        }
        Ok(format!("n <= {top}"))
    });
}

fn entringer_suite(r: &mut Runner, max_n: usize) {
    let table = entringer_table(12).expect("max_n >= 1");
    r.check("Entringer recurrence counts alternating permutations", || {
        for n in 1..=max_n {
            for k in 1..=n {
                let c = enumerate_alternating(n, Some(k)).map_err(|e| e.to_string())?.len();
                ensure(BigUint::from(c) == table.get(n, k), || format!("E({n},{k})"))?;
            }
        }
        Ok(String::new())
    });
    let top = (max_n + 1).min(10);
    r.check("|R(n,k)| = E(n-1,k)", || {
        for n in 3..=top {
            let fam = maximal_tier_family(n).map_err(|e| e.to_string())?;
            for k in 0..=n {
                ensure(BigUint::from(fam.count(k)) == table.get(n - 1, k), || {
                    format!("R({n},{k}) = {}", fam.count(k))
                })?;
            }
            for (k, members) in &fam.members_by_k {
                for s in members {
                    let back = bijection_f_inverse(s).map_err(|e| e.to_string())?;
                    ensure(back.at(1) as usize == *k, || format!("f^-1({s}) = {back}"))?;
                    ensure(bijection_f(&back).ok().as_ref() == Some(s), || {
                        format!("f(f^-1({s})) != {s}")
                    })?;
                }
            }
        }
        Ok(format!("3 <= n <= {top}"))
    });
    r.check("f lands in R(n,k) and round-trips", || {
        for m in 1..=max_n {
            for pi in enumerate_alternating(m, None).map_err(|e| e.to_string())? {
                let s = bijection_f(&pi).map_err(|e| e.to_string())?;
                let k = pi.at(1) as usize;
                ensure(rev_tier(s.values()) == m - 1, || format!("f({pi}) = {s}"))?;
                ensure(s.position_of_one() == Some(k + 1), || format!("f({pi}) = {s}"))?;
                let back = bijection_f_inverse(&s).map_err(|e| e.to_string())?;
                ensure(back == pi, || format!("f^-1(f({pi})) = {back}"))?;
            }
        }
        Ok(format!("lengths <= {max_n}"))
    });
}

fn ints(s: &TruncatedSeries) -> std::result::Result<Vec<BigUint>, String> {
    s.to_integers()
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|c| c.to_biguint().ok_or_else(|| format!("negative coefficient {c}")))
        .collect()
}

fn series_suite(r: &mut Runner, max_n: usize) {
    let order = 13;
    r.check("tier series match the tier table", || {
        let table = exact_tier_table(max_n).map_err(|e| e.to_string())?;
        for t in 0..=2 {
            let c = ints(&tier_series(t, order).map_err(|e| e.to_string())?)?;
            for n in 1..=max_n {
                ensure(c[n] == table.get(n, t), || format!("t = {t}, n = {n}"))?;
            }
        }
        Ok(format!("n <= {max_n}"))
    });
    r.check("Wilf series matches tier <= 1 and Av(4321, 4213)", || {
        let c = ints(&wilf_series(order).map_err(|e| e.to_string())?)?;
        let cum = cumulative_tier_table(max_n).map_err(|e| e.to_string())?;
        let av = enumerate_av(&["4321".parse().unwrap(), "4213".parse().unwrap()], max_n)
            .map_err(|e| e.to_string())?;
        ensure(c[0].is_one(), || "constant term".into())?;
        for n in 1..=max_n {
            ensure(c[n] == cum.get(n, 1), || format!("n = {n}"))?;
            ensure(c[n] == BigUint::from(av[n]), || format!("Av at n = {n}"))?;
        }
        Ok(format!("n <= {max_n}"))
    });
    r.check("closed forms match the recurrence totals", || {
        let rec = refined_counts_recurrence(12).map_err(|e| e.to_string())?;
        for j in 0..=2usize {
            let c = ints(&mu_u_series(j, order).map_err(|e| e.to_string())?)?;
            let fact = BigUint::from(factorial(j));
            for n in 1..=12 {
                ensure(&c[n] % &fact == BigUint::zero(), || format!("j = {j}, n = {n}"))?;
                ensure(&c[n] / &fact == rec.mu_u_total(n, j), || {
                    format!("j = {j}, n = {n}: {} vs {}", c[n], rec.mu_u_total(n, j))
                })?;
            }
        }
        Ok("n <= 12".into())
    });
    r.check("up-oriented tier 0 plus (1 - x)/(1 - 2x) is Catalan", || {
        let m0 = ints(&mu_u_series(0, order).map_err(|e| e.to_string())?)?;
        let cat = ints(&catalan_series(order))?;
        for n in 0..order {
            // (1 - x)/(1 - 2x) = 1 + x + 2x^2 + 4x^3 + ...
            let ratio = if n == 0 { 1u64 } else { 1 << (n - 1) };
            ensure(&m0[n] + BigUint::from(ratio) == cat[n], || format!("n = {n}"))?;
        }
        Ok(String::new())
    });
    r.check("series coefficients are integral", || {
        let mut all = vec![wilf_series(20), Ok(catalan_series(20))];
        for j in 0..=2 {
            all.push(mu_u_series(j, 20));
            all.push(tier_series(j, 20));
        }
        for s in all {
            let s = s.map_err(|e| e.to_string())?;
            ensure(s.is_integral(), || format!("{s}"))?;
            ensure(s.coeffs().iter().all(|c| c.to_integer().to_i128().is_some()), || {
                "overflow".into()
            })?;
        }
        Ok(String::new())
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().name(), name);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn naive_containment() {
        assert!(naive_contains(&[3, 5, 2, 4, 1], &[2, 3, 1]));
        assert!(!naive_contains(&[1, 2, 3], &[2, 1]));
    }

    #[test]
    fn small_run() {
        let r = run(Suite::Permcore, 5).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        assert!(run(Suite::All, 11).is_err());
    }
}

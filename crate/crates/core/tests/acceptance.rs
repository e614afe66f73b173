//! One PASS/FAIL line per acceptance criterion.
//!
//! A criterion that disagrees with a printed value is reported as FAIL. The
//! process only exits nonzero when such a failure has no independent
//! confirmation of the computed value, i.e. when the code is suspect rather
//! than the printed data.

use std::process::Command;
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use revtier::basis::{b1, b2, compute_basis, enumerate_av, Strategy};
use revtier::entringer::{
    bijection_f, bijection_f_inverse, entringer_table, enumerate_alternating, maximal_tier_family,
};
use revtier::pairs::{rev_tier, rev_tier_by_pairs, rev_tier_by_pairs_dp};
use revtier::perm::Permutation;
use revtier::series::{mu_u_series, tier_series, wilf_series};
use revtier::sorter::{rev_tier_by_simulation, series_machine_sort};
use revtier::sweep::par_fold;
use revtier::tables::{
    exact_tier_table, refined_counts_bruteforce, refined_counts_recurrence, CountTable,
};
use revtier::verify::refined_identities;

/// Rev-tier counts, rows n = 1..10, columns t = 0..n-2 (t = 0 only for n <= 2).
const TABLE_1: [&[u64]; 10] = [
    &[1],
    &[2],
    &[5, 1],
    &[14, 8, 2],
    &[42, 47, 26, 5],
    &[132, 248, 228, 96, 16],
    &[429, 1249, 1702, 1178, 421, 61],
    &[1430, 6154, 11704, 11840, 6816, 2102, 272],
    &[4862, 30013, 76845, 106567, 88020, 43347, 11841, 1385],
    &[16796, 145764, 490866, 896560, 997056, 697644, 302002, 74176, 7936],
];

/// Rev-tier at most t, rows n = 1..10, columns t = 0..8.
const TABLE_2: [[u64; 9]; 10] = [
    [1, 1, 1, 1, 1, 1, 1, 1, 1],
    [2, 2, 2, 2, 2, 2, 2, 2, 2],
    [5, 6, 6, 6, 6, 6, 6, 6, 6],
    [14, 22, 24, 24, 24, 24, 24, 24, 24],
    [42, 89, 115, 120, 120, 120, 120, 120, 120],
    [132, 380, 608, 704, 720, 720, 720, 720, 720],
    [429, 1678, 3380, 4558, 4979, 5040, 5040, 5040, 5040],
    [1430, 7584, 19288, 31128, 37946, 40048, 40320, 40320, 40320],
    [4862, 34875, 111720, 218287, 306307, 349654, 361495, 362880, 362880],
    [16796, 162560, 653426, 1549986, 2547042, 3244686, 3546688, 3620864, 3628800],
];

const EULER: [u64; 8] = [1, 2, 5, 16, 61, 272, 1385, 7936];

enum Verdict {
    Pass(String),
    /// Mismatch with printed data; the computed value is independently confirmed.
    Conflict(String),
    Fail(String),
}

fn table_1(table: &CountTable) -> Verdict {
    let mut conflicts = Vec::new();
    let mut unconfirmed = Vec::new();
    let cum = table.cumulative();
    for (i, row) in TABLE_1.iter().enumerate() {
        let n = i + 1;
        for (t, &printed) in row.iter().enumerate() {
            let got = table.get(n, t);
            if got == BigUint::from(printed) {
                continue;
            }
            let row_sum: BigUint = table.row(n).iter().sum();
            let fact: u64 = (1..=n as u64).product();
            let printed_diff = if t == 0 {
                TABLE_2[i][0]
            } else {
                TABLE_2[i][t] - TABLE_2[i][t - 1]
            };
            let msg = format!("(n={n}, t={t}) printed {printed}, computed {got}");
            if row_sum == BigUint::from(fact)
                && got == BigUint::from(printed_diff)
                && cum.get(n, t) == BigUint::from(TABLE_2[i][t])
            {
                conflicts.push(format!(
                    "{msg}; row sums to {n}! and matches printed cumulative counts"
                ));
            } else {
                unconfirmed.push(msg);
            }
        }
    }
    if !unconfirmed.is_empty() {
        Verdict::Fail(unconfirmed.join("; "))
    } else if !conflicts.is_empty() {
        Verdict::Conflict(conflicts.join("; "))
    } else {
        Verdict::Pass("all 45 printed entries match".into())
    }
}

fn table_2(table: &CountTable) -> Verdict {
    let cum = table.cumulative();
    let mut bad = Vec::new();
    for (i, row) in TABLE_2.iter().enumerate() {
        for (t, &printed) in row.iter().enumerate() {
            if cum.get(i + 1, t) != BigUint::from(printed) {
                bad.push(format!("(n={}, t<={t})", i + 1));
            }
        }
    }
    if bad.is_empty() {
        Verdict::Pass(format!("90 entries match, (9, t<=3) = {}", cum.get(9, 3)))
    } else {
        Verdict::Fail(bad.join(", "))
    }
}

fn basis() -> Verdict {
    let got1: Vec<Permutation> = compute_basis(1, 6, Strategy::Exhaustive)
        .unwrap()
        .all()
        .cloned()
        .collect();
    let got2: Vec<Permutation> = compute_basis(2, 9, Strategy::Extension)
        .unwrap()
        .all()
        .cloned()
        .collect();
    if got1 != b1() {
        return Verdict::Fail(format!("B1 = {got1:?}"));
    }
    if got2 != b2() {
        return Verdict::Fail(format!("B2 = {got2:?}"));
    }
    let ext = compute_basis(3, 9, Strategy::Extension).unwrap();
    if ext.complete {
        return Verdict::Fail("B3 search marked complete".into());
    }
    let hist: Vec<usize> = ext.histogram().values().copied().collect();
    if hist == [16, 24, 11, 1] {
        return Verdict::Pass("B1, B2 exact; B3 16/24/11/1, incomplete".into());
    }
    let exh = compute_basis(3, 9, Strategy::Exhaustive).unwrap();
    let msg = format!(
        "B1, B2 exact; B3 up to length 9 computes as {hist:?}, printed [16, 24, 11, 1]"
    );
    if exh == ext {
        Verdict::Conflict(format!(
            "{msg}; exhaustive search over S_6..S_9 gives the same elements"
        ))
    } else {
        Verdict::Fail(format!("{msg}; exhaustive search disagrees"))
    }
}

fn oracles() -> Verdict {
    for n in 1..=9 {
        let bad = par_fold(
            n,
            || None::<Vec<u8>>,
            |acc, v| {
                if acc.is_some() {
                    return;
                }
                let p = Permutation::new(v.to_vec()).unwrap();
                let sim = rev_tier_by_simulation(&p).0;
                if sim != rev_tier_by_pairs(&p).0 || sim != rev_tier_by_pairs_dp(&p) {
                    *acc = Some(v.to_vec());
                }
            },
            |a, b| a.or(b),
        );
        if let Some(v) = bad {
            return Verdict::Fail(format!("tiers disagree on {v:?}"));
        }
    }
    for n in 1..=8 {
        let bad = par_fold(
            n,
            || None::<Vec<u8>>,
            |acc, v| {
                if acc.is_some() {
                    return;
                }
                let p = Permutation::new(v.to_vec()).unwrap();
                let t = rev_tier(v);
                if !(1..=n).all(|k| series_machine_sort(&p, k).sorted == (t < k)) {
                    *acc = Some(v.to_vec());
                }
            },
            |a, b| a.or(b),
        );
        if let Some(v) = bad {
            return Verdict::Fail(format!("series machine disagrees on {v:?}"));
        }
    }
    Verdict::Pass("simulation = greedy = DP on S_1..S_9; series machine on S_1..S_8".into())
}

fn entringer(table: &CountTable) -> Verdict {
    let e = entringer_table(10).unwrap();
    for n in 3..=10 {
        let fam = maximal_tier_family(n).unwrap();
        for k in 0..=n {
            if BigUint::from(fam.count(k)) != e.get(n - 1, k) {
                return Verdict::Fail(format!("|R({n},{k})| = {}", fam.count(k)));
            }
        }
    }
    for (i, &euler) in EULER.iter().enumerate() {
        let n = i + 3;
        if table.get(n, n - 2) != BigUint::from(euler) || e.row_sum(n - 1) != BigUint::from(euler) {
            return Verdict::Fail(format!("diagonal at n = {n}"));
        }
    }
    for m in 1..=9 {
        for pi in enumerate_alternating(m, None).unwrap() {
            let s = bijection_f(&pi).unwrap();
            if bijection_f_inverse(&s).ok() != Some(pi.clone()) {
                return Verdict::Fail(format!("round trip fails at {pi}"));
            }
        }
    }
    Verdict::Pass("R(n,k) = E(n-1,k) for 3 <= n <= 10; diagonal 1..7936; round trips to length 9".into())
}

fn coeffs(s: revtier::Result<revtier::series::TruncatedSeries>) -> Vec<i64> {
    s.unwrap()
        .to_integers()
        .unwrap()
        .iter()
        .map(|c| c.to_i64().unwrap())
        .collect()
}

fn series(av: &[u64]) -> Verdict {
    let printed: [(usize, usize, &[i64]); 3] = [
        (0, 3, &[1, 6, 26, 100, 365]),
        (1, 4, &[2, 21, 148, 884, 4852, 25407, 129480, 649576]),
        (2, 5, &[10, 160, 1636, 13704, 102876, 722772, 4867904]),
    ];
    for (j, start, expect) in printed {
        let c = coeffs(mu_u_series(j, 12));
        if &c[start..start + expect.len()] != expect || c[..start].iter().any(|&x| x != 0) {
            return Verdict::Fail(format!("M^U_{j} = {c:?}"));
        }
    }
    let t2 = coeffs(tier_series(2, 8));
    if t2[..8] != [0, 0, 0, 0, 2, 26, 228, 1702] {
        return Verdict::Fail(format!("tier 2 = {t2:?}"));
    }
    let w = coeffs(wilf_series(11));
    for n in 1..=10 {
        if w[n] as u64 != TABLE_2[n - 1][1] || w[n] as u64 != av[n] {
            return Verdict::Fail(format!("Wilf series at n = {n}: {}", w[n]));
        }
    }
    Verdict::Pass("printed expansions, tier 2 series, Wilf series = Table 2 = Av(4321, 4213) to n = 10".into())
}

fn recurrences() -> Verdict {
    let rec = refined_counts_recurrence(12).unwrap();
    let brute = refined_counts_bruteforce(9).unwrap();
    if rec.truncated(9) != brute {
        return Verdict::Fail("recurrence and brute force differ for n <= 9".into());
    }
    match refined_identities(&rec) {
        Ok(_) => Verdict::Pass("brute force n <= 9; identities n <= 12".into()),
        Err(e) => Verdict::Fail(e),
    }
}

fn verify_cli() -> Verdict {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_revtier"))
        .args(["verify", "all", "--max-n", "9"])
        .output()
        .expect("run revtier");
    let secs = start.elapsed().as_secs_f64();
    let text = String::from_utf8_lossy(&out.stdout);
    let summary = text.lines().last().unwrap_or("").to_string();
    if out.status.code() == Some(0) && secs <= 600.0 {
        Verdict::Pass(format!("exit 0 in {secs:.1} s ({summary})"))
    } else {
        Verdict::Fail(format!("exit {:?} in {secs:.1} s ({summary})", out.status.code()))
    }
}

fn main() {
    let table = exact_tier_table(10).unwrap();
    let av = enumerate_av(&["4321".parse().unwrap(), "4213".parse().unwrap()], 10).unwrap();

    let criteria: Vec<(&str, Box<dyn Fn() -> Verdict>)> = vec![
        ("Table 1 reproduction", Box::new(|| table_1(&table))),
        ("Table 2 reproduction", Box::new(|| table_2(&table))),
        ("basis mining", Box::new(basis)),
        ("oracle equivalence", Box::new(oracles)),
        ("Entringer family", Box::new(|| entringer(&table))),
        ("series coefficients", Box::new(|| series(&av))),
        ("recurrence vs brute force", Box::new(recurrences)),
        ("verify all --max-n 9", Box::new(verify_cli)),
    ];

    let mut unconfirmed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = check();
        let secs = start.elapsed().as_secs_f64();
        let (mark, detail) = match verdict {
            Verdict::Pass(d) => ("PASS", d),
            Verdict::Conflict(d) => ("FAIL", format!("conflicts with printed data: {d}")),
            Verdict::Fail(d) => {
                unconfirmed += 1;
                ("FAIL", d)
            }
        };
        println!("{mark} criterion {} ({name}, {secs:.1} s): {detail}", i + 1);
    }
    if unconfirmed > 0 {
        eprintln!("{unconfirmed} criteria failed without independent confirmation");
        std::process::exit(1);
    }
}

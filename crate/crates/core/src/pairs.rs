//! Separated pairs and the rev-tier characterization.
//!
//! `(i, i + 1)` is separated when some value larger than `i + 1` sits strictly
//! between them. It is oriented `Up` when `i` comes first and `Down` otherwise.
//! The rev-tier of a permutation is the length of the longest sequence of
//! separated pairs with increasing `i` whose orientations alternate, starting
//! with `Down`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    Down,
    Up,
    NotSeparated,
}

impl Orientation {
    fn flipped(self) -> Orientation {
        match self {
            Orientation::Down => Orientation::Up,
            Orientation::Up => Orientation::Down,
            Orientation::NotSeparated => Orientation::NotSeparated,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Orientation::Down => 'D',
            Orientation::Up => 'U',
            Orientation::NotSeparated => '.',
        }
    }
}

/// The partition of all permutations into three blocks.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClassLabel {
    /// No separated pair at all.
    N,
    /// Smallest separated pair is up-oriented.
    #[serde(rename = "M_U")]
    MU,
    /// Smallest separated pair is down-oriented.
    #[serde(rename = "M_D")]
    MD,
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassLabel::N => "N",
            ClassLabel::MU => "M_U",
            ClassLabel::MD => "M_D",
        })
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PatternKind {
    /// `231`, witnessed by a down separated pair.
    P231,
    /// `132`, witnessed by an up separated pair.
    P132,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparatedPairProfile {
    /// Entry `i - 1` is the orientation of `(i, i + 1)`.
    pub orientations: Vec<Orientation>,
    pub tier: usize,
    pub class_label: ClassLabel,
    /// Pair indices `i` of a longest alternating sequence starting with `Down`.
    pub witness_sequence: Vec<usize>,
}

impl SeparatedPairProfile {
    pub fn of(perm: &Permutation) -> Self {
        let orientations = orientations(perm);
        let witness_sequence = greedy_alternating(&orientations);
        SeparatedPairProfile {
            tier: witness_sequence.len(),
            class_label: label_from(&orientations),
            orientations,
            witness_sequence,
        }
    }

    /// Orientation string such as `"DU."`.
    pub fn signature(&self) -> String {
        self.orientations.iter().map(|o| o.symbol()).collect()
    }
}

/// Orientation of `(i, i + 1)` for `1 <= i <= n - 1`.
pub fn pair_orientation(perm: &Permutation, i: usize) -> Result<Orientation> {
    let n = perm.len();
    if i == 0 || i >= n {
        return Err(Error::PositionOutOfRange {
            position: i,
            max: n.saturating_sub(1),
        });
    }
    let pos = perm.positions();
    Ok(orientation_at(perm.values(), &pos, i))
}

fn orientation_at(values: &[u8], pos: &[usize], i: usize) -> Orientation {
    let (p, q) = (pos[i], pos[i + 1]);
    let (lo, hi) = if p < q { (p, q) } else { (q, p) };
    let separated = values[lo + 1..hi].iter().any(|&v| v as usize > i + 1);
    match (separated, p < q) {
        (false, _) => Orientation::NotSeparated,
        (true, true) => Orientation::Up,
        (true, false) => Orientation::Down,
    }
}

pub fn orientations(perm: &Permutation) -> Vec<Orientation> {
    let pos = perm.positions();
    (1..perm.len())
        .map(|i| orientation_at(perm.values(), &pos, i))
        .collect()
}

/// Single greedy scan: take the first `Down`, then the next `Up`, and so on.
fn greedy_alternating(orientations: &[Orientation]) -> Vec<usize> {
    let mut want = Orientation::Down;
    let mut picked = Vec::new();
    for (idx, &o) in orientations.iter().enumerate() {
        if o == want {
            picked.push(idx + 1);
            want = want.flipped();
        }
    }
    picked
}

fn label_from(orientations: &[Orientation]) -> ClassLabel {
    match orientations
        .iter()
        .find(|&&o| o != Orientation::NotSeparated)
    {
        None => ClassLabel::N,
        Some(Orientation::Up) => ClassLabel::MU,
        Some(_) => ClassLabel::MD,
    }
}

/// Rev-tier and a witness sequence of pair indices.
pub fn rev_tier_by_pairs(perm: &Permutation) -> (usize, Vec<usize>) {
    let witness = greedy_alternating(&orientations(perm));
    (witness.len(), witness)
}

/// Rev-tier of a raw value slice without allocating; the hot path of every sweep.
pub fn rev_tier(values: &[u8]) -> usize {
    scan(values).0
}

/// Rev-tier together with the class label.
pub fn tier_and_class(values: &[u8]) -> (usize, ClassLabel) {
    scan(values)
}

fn scan(values: &[u8]) -> (usize, ClassLabel) {
    let n = values.len();
    let mut pos = [0u8; 256];
    for (i, &v) in values.iter().enumerate() {
        pos[v as usize] = i as u8;
    }
    let mut want_down = true;
    let mut tier = 0;
    let mut label = ClassLabel::N;
    for i in 1..n {
        let (p, q) = (pos[i] as usize, pos[i + 1] as usize);
        let (lo, hi) = if p < q { (p, q) } else { (q, p) };
        if hi - lo < 2 || !values[lo + 1..hi].iter().any(|&v| v as usize > i + 1) {
            continue;
        }
        let down = q < p;
        if label == ClassLabel::N {
            label = if down { ClassLabel::MD } else { ClassLabel::MU };
        }
        if down == want_down {
            tier += 1;
            want_down = !want_down;
        }
    }
    (tier, label)
}

/// Rev-tier by dynamic programming over all alternating subsequences.
///
/// Independent of the greedy scan: `best[i][o]` is the longest alternating
/// sequence starting with `Down` that ends at pair `i` with orientation `o`.
pub fn rev_tier_by_pairs_dp(perm: &Permutation) -> usize {
    let orients = orientations(perm);
    let m = orients.len();
    // 0 = ends Down, 1 = ends Up
    let mut best = vec![[0usize; 2]; m];
    let mut overall = 0;
    for i in 0..m {
        let slot = match orients[i] {
            Orientation::Down => 0,
            Orientation::Up => 1,
            Orientation::NotSeparated => continue,
        };
        let mut len = if slot == 0 { 1 } else { 0 };
        for j in 0..i {
            let prev = best[j][1 - slot];
            if prev > 0 {
                len = len.max(prev + 1);
            }
        }
        best[i][slot] = len;
        overall = overall.max(len);
    }
    overall
}

/// Class label: `N` without separated pairs, else the orientation of the smallest one.
pub fn classify(perm: &Permutation) -> ClassLabel {
    label_from(&orientations(perm))
}

/// Follows the containment argument from a `132` (or `231`) occurrence to an
/// up (or down) separated pair `(i, i + 1)` and returns `i`.
///
/// `occurrence` lists the three values of the occurrence in position order.
pub fn witness_pair_from_pattern(
    perm: &Permutation,
    occurrence: [u8; 3],
    kind: PatternKind,
) -> Result<usize> {
    let pos = perm.positions();
    let n = perm.len();
    let invalid = || Error::InvalidOccurrence(format!("{occurrence:?} in {perm}"));
    if occurrence.iter().any(|&v| v == 0 || v as usize > n) {
        return Err(invalid());
    }
    let [x, y, z] = occurrence.map(|v| v as usize);
    if !(pos[x] < pos[y] && pos[y] < pos[z]) {
        return Err(invalid());
    }
    match kind {
        PatternKind::P132 => {
            if !(x < z && z < y) {
                return Err(invalid());
            }
            // (a, b, c) with a < c < b
            let (mut a, b, c) = (x, y, z);
            loop {
                if a + 1 == c || pos[a + 1] > pos[b] {
                    return Ok(a);
                }
                a += 1;
            }
        }
        PatternKind::P231 => {
            if !(z < x && x < y) {
                return Err(invalid());
            }
            // (m, h, a) with a < m < h
            let (m, h, mut a) = (x, y, z);
            loop {
                if a + 1 == m || pos[a + 1] < pos[h] {
                    return Ok(a);
                }
                // a + 1 lies right of h, giving the 231 occurrence (m, h, a + 1)
                a += 1;
            }
        }
    }
}

/// The alternating construction of length `n` with rev-tier `n - 2`:
/// evens descending, then `n`, then `1`, then odds ascending.
pub fn max_tier_witness(n: usize) -> Result<Permutation> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "maximal-tier construction needs n >= 2, got {n}"
        )));
    }
    if n > u8::MAX as usize {
        return Err(Error::TooLong(n));
    }
    let top_even = if n % 2 == 0 { n - 2 } else { n - 1 };
    let top_odd = if n % 2 == 0 { n - 1 } else { n - 2 };
    let mut values: Vec<u8> = (1..=top_even / 2).rev().map(|h| (2 * h) as u8).collect();
    values.push(n as u8);
    values.extend((0..=(top_odd - 1) / 2).map(|h| (2 * h + 1) as u8));
    Ok(Permutation::from_vec_unchecked(values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use Orientation::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(pair_orientation(&p("2413"), 1).unwrap(), Down);
        assert_eq!(pair_orientation(&p("2413"), 2).unwrap(), Up);
        assert_eq!(pair_orientation(&p("12345"), 3).unwrap(), NotSeparated);
        assert!(pair_orientation(&p("2413"), 4).is_err());
        assert!(pair_orientation(&p("2413"), 0).is_err());
    }

    #[test]
    fn tier_examples() {
        assert_eq!(rev_tier_by_pairs(&p("2413")), (2, vec![1, 2]));
        assert_eq!(rev_tier_by_pairs(&p("426135")).0, 4);
        assert_eq!(rev_tier_by_pairs(&p("12345")).0, 0);
        assert_eq!(rev_tier_by_pairs_dp(&p("2413")), 2);
        assert_eq!(rev_tier_by_pairs_dp(&p("231")), 1);
        assert_eq!(rev_tier(p("426135").values()), 4);
    }

    #[test]
    fn class_examples() {
        assert_eq!(classify(&p("123")), ClassLabel::N);
        assert_eq!(classify(&p("132")), ClassLabel::MU);
        assert_eq!(classify(&p("231")), ClassLabel::MD);
        let prof = SeparatedPairProfile::of(&p("2413"));
        assert_eq!(prof.signature(), "DU.");
        assert_eq!(prof.class_label, ClassLabel::MD);
    }

    #[test]
    fn witness_from_pattern() {
        assert_eq!(
            witness_pair_from_pattern(&p("231"), [2, 3, 1], PatternKind::P231).unwrap(),
            1
        );
        let q = p("21534");
        let i = witness_pair_from_pattern(&q, [1, 5, 4], PatternKind::P132).unwrap();
        assert!((1..=3).contains(&i));
        assert_eq!(pair_orientation(&q, i).unwrap(), Up);
        assert_eq!(
            witness_pair_from_pattern(&p("35142"), [3, 5, 4], PatternKind::P132).unwrap(),
            3
        );
        assert!(witness_pair_from_pattern(&p("231"), [1, 2, 3], PatternKind::P231).is_err());
        assert!(witness_pair_from_pattern(&p("231"), [2, 3, 1], PatternKind::P132).is_err());
    }

    #[test]
    fn maximal_construction() {
        assert_eq!(max_tier_witness(6).unwrap(), p("426135"));
        assert_eq!(max_tier_witness(7).unwrap(), p("6427135"));
        assert_eq!(max_tier_witness(2).unwrap(), p("21"));
        assert_eq!(max_tier_witness(3).unwrap(), p("231"));
        assert!(max_tier_witness(1).is_err());
        for n in 2..=12 {
            assert_eq!(rev_tier(max_tier_witness(n).unwrap().values()), n - 2);
        }
    }
}

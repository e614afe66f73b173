use proptest::prelude::*;
use revtier::pairs::{rev_tier, rev_tier_by_pairs_dp};
use revtier::perm::{contains_pattern, rank, unrank};
use revtier::sorter::simulate_tier;
use revtier::Permutation;

fn perm(max: usize) -> impl Strategy<Value = Permutation> {
    (0..=max)
        .prop_flat_map(|n| Just((1..=n as u8).collect::<Vec<u8>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn naive(host: &[u8], pattern: &[u8]) -> bool {
    let (n, k) = (host.len(), pattern.len());
    (0u32..1 << n).filter(|m| m.count_ones() as usize == k).any(|m| {
        let sub: Vec<u8> = (0..n).filter(|i| m >> i & 1 == 1).map(|i| host[i]).collect();
        (0..k).all(|a| (0..k).all(|b| (sub[a] < sub[b]) == (pattern[a] < pattern[b])))
    })
}

proptest! {
    #[test]
    fn insert_then_delete(p in perm(14), pos in 1usize..16) {
        let pos = 1 + (pos - 1) % (p.len() + 1);
        let q = p.insert_min(pos).unwrap();
        prop_assert_eq!(q.delete_entry(pos).unwrap(), p);
    }

    #[test]
    fn containment_matches_naive(h in perm(10), p in perm(5)) {
        prop_assert_eq!(contains_pattern(h.values(), p.values()), naive(h.values(), p.values()));
    }

    #[test]
    fn display_round_trips(p in perm(20)) {
        let s = p.to_string();
        prop_assert_eq!(s.parse::<Permutation>().unwrap(), p);
    }

    #[test]
    fn rank_round_trips(p in perm(12)) {
        prop_assert_eq!(unrank(p.len(), rank(&p)).unwrap(), p);
    }

    #[test]
    fn tiers_agree_on_long_inputs(p in perm(40)) {
        let t = rev_tier(p.values());
        prop_assert_eq!(simulate_tier(p.values()), t);
        prop_assert_eq!(rev_tier_by_pairs_dp(&p), t);
        prop_assert!(t <= p.len().saturating_sub(2));
    }

    #[test]
    fn deletion_never_raises_tier(p in perm(16), i in 0usize..16) {
        prop_assume!(!p.is_empty());
        let q = p.delete_entry(1 + i % p.len()).unwrap();
        prop_assert!(rev_tier(q.values()) <= rev_tier(p.values()));
    }
}

//! Synthetic transaction generator.
//!
//! Market-basket-shaped data built by overlaying source patterns with
//! noise, in the spirit of the classic benchmark generators. Output is a
//! pure function of the configuration, byte-identical across runs and
//! platforms.
//!
//! Distribution, exactly:
//!
//! * `patterns` source patterns are drawn first. Pattern lengths are
//!   uniform on `[1, 2·avg_len - 1]` (clamped to the item universe), with
//!   members uniform without replacement over `0..items`.
//! * Each transaction picks a primary pattern with a quadratic skew toward
//!   low indices (`idx = r²/patterns` for uniform `r`), making a few
//!   patterns dominate the way popular baskets do. With probability 1/4 a
//!   second pattern (same skew) is unioned in, and with probability 1/2
//!   one uniform noise item is added.
//! * Transactions are emitted grouped by primary pattern index (ascending,
//!   stable within a group), modeling batched arrivals: rows sharing a
//!   pattern sit near each other, so each item's bits cluster into few
//!   regions.
//!
//! Every transaction contains at least one item, so `items = 1` yields
//! `{0}` for every row.

use crate::dataset::TransactionDatabase;
use crate::rng::SplitMix64;

#[derive(Clone, Debug)]
pub struct SynthConfig {
    pub transactions: usize,
    pub items: u32,
    pub avg_len: usize,
    pub patterns: usize,
    pub seed: u64,
}

fn sample_distinct(rng: &mut SplitMix64, count: usize, universe: u32) -> Vec<u32> {
    let count = count.min(universe as usize).max(1);
    if count * 2 >= universe as usize {
        // dense draw: partial Fisher-Yates over the whole universe
        let mut pool: Vec<u32> = (0..universe).collect();
        for i in 0..count {
            let j = i + rng.below((universe as usize - i) as u64) as usize;
            pool.swap(i, j);
        }
        let mut out = pool[..count].to_vec();
        out.sort_unstable();
        out
    } else {
        let mut out: Vec<u32> = Vec::with_capacity(count);
        while out.len() < count {
            let candidate = rng.below(universe as u64) as u32;
            if !out.contains(&candidate) {
                out.push(candidate);
            }
        }
        out.sort_unstable();
        out
    }
}

/// Quadratically skewed pattern choice: floor(r² / n) for uniform r in 0..n.
fn skewed_index(rng: &mut SplitMix64, n: usize) -> usize {
    let r = rng.below(n as u64);
    ((r * r) / n as u64) as usize
}

pub fn generate(cfg: &SynthConfig) -> TransactionDatabase {
    assert!(cfg.transactions >= 1, "transactions must be >= 1");
    assert!(cfg.items >= 1, "items must be >= 1");
    assert!(cfg.avg_len >= 1, "avg_len must be >= 1");
    assert!(cfg.patterns >= 1, "patterns must be >= 1");
    assert!(
        cfg.avg_len as u64 <= cfg.items as u64,
        "avg_len must be <= items"
    );

    let mut rng = SplitMix64::new(cfg.seed);

    let max_pattern_len = (2 * cfg.avg_len).saturating_sub(1).max(1);
    let source_patterns: Vec<Vec<u32>> = (0..cfg.patterns)
        .map(|_| {
            let len = 1 + rng.below(max_pattern_len as u64) as usize;
            sample_distinct(&mut rng, len, cfg.items)
        })
        .collect();

    let mut buckets: Vec<Vec<Vec<u32>>> = vec![Vec::new(); cfg.patterns];
    for _ in 0..cfg.transactions {
        let primary = skewed_index(&mut rng, cfg.patterns);
        let mut txn = source_patterns[primary].clone();
        if rng.chance(1, 4) {
            let second = skewed_index(&mut rng, cfg.patterns);
            txn.extend_from_slice(&source_patterns[second]);
        }
        if rng.chance(1, 2) {
            txn.push(rng.below(cfg.items as u64) as u32);
        }
        txn.sort_unstable();
        txn.dedup();
        buckets[primary].push(txn);
    }

    let transactions: Vec<Vec<u32>> = buckets.into_iter().flatten().collect();
    TransactionDatabase::new(transactions)
}

/// Generated database rendered as transaction lines.
pub fn generate_text(cfg: &SynthConfig) -> String {
    let db = generate(cfg);
    let mut out = String::new();
    for t in db.transactions() {
        let mut first = true;
        for item in t {
            if !first {
                out.push(' ');
            }
            out.push_str(&item.to_string());
            first = false;
        }
        out.push('\n');
    }
    out
}

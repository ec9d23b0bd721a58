//! Differential fuzzing of the miners: decode bytes into a tiny database,
//! then require the projected miners to agree with the brute-force
//! reference in all three modes, at both word widths.

#![no_main]

use std::collections::BTreeMap;

use libfuzzer_sys::fuzz_target;
use ramp::dataset::TransactionDatabase;
use ramp::index::build_root_index;
use ramp::miner::{mine_all_collect, mine_closed, mine_max, MineOptions};
use ramp::oracle::{apriori_all, closed_filter, maximal_filter};
use ramp::words::Word;

const MAX_TRANSACTIONS: usize = 24;

/// byte 0 → min_sup (1..=4); every further byte is one transaction as an
/// 8-item membership mask (zero masks become empty transactions, which
/// ingest must tolerate).
fn decode(data: &[u8]) -> Option<(TransactionDatabase, u32)> {
    let (&first, rest) = data.split_first()?;
    if rest.is_empty() || rest.len() > MAX_TRANSACTIONS {
        return None;
    }
    let min_sup = 1 + (first % 4) as u32;
    let txns: Vec<Vec<u32>> = rest
        .iter()
        .map(|&mask| (0..8).filter(|bit| mask >> bit & 1 == 1).collect())
        .collect();
    Some((TransactionDatabase::new(txns), min_sup))
}

type Itemsets = Vec<(Vec<u32>, u32)>;

fn mine_for_width<W: Word>(
    db: &TransactionDatabase,
    min_sup: u32,
) -> (BTreeMap<Vec<u32>, u32>, Itemsets, Itemsets) {
    let opts = MineOptions::default();
    let root = build_root_index::<W>(db, min_sup);
    let (all, _) = mine_all_collect(&root, min_sup, &opts);
    let (mut max, _) = mine_max(&root, min_sup, &opts);
    let (mut closed, _) = mine_closed(&root, min_sup, &opts);
    max.sort();
    closed.sort();
    (all.into_iter().collect(), max, closed)
}

fuzz_target!(|data: &[u8]| {
    let Some((db, min_sup)) = decode(data) else {
        return;
    };

    let fi = apriori_all(&db, min_sup);
    let (all64, max64, closed64) = mine_for_width::<u64>(&db, min_sup);
    assert_eq!(all64, fi, "all-mode disagrees with reference");
    assert_eq!(max64, maximal_filter(&fi));
    assert_eq!(closed64, closed_filter(&fi));

    let (all32, max32, closed32) = mine_for_width::<u32>(&db, min_sup);
    assert_eq!(all32, all64, "width changed the all-mode output");
    assert_eq!(max32, max64);
    assert_eq!(closed32, closed64);

    // sandwich containment
    for entry in &max64 {
        assert!(closed64.contains(entry));
    }
    for (items, sup) in &closed64 {
        assert_eq!(all64.get(items), Some(sup));
    }
});

//! Brute-force reference miners used as ground truth in tests.
//!
//! Level-wise candidate generation with full dataset scans, plus the
//! maximal/closed filters defined by pairwise superset checks. Exponential
//! by nature; intended for test-sized inputs (a dozen items or so), not for
//! real mining.

use std::collections::BTreeMap;

use crate::dataset::TransactionDatabase;

/// All frequent itemsets keyed by canonical ascending item list.
/// Downward closed: every subset of a member is a member.
pub type FISet = BTreeMap<Vec<u32>, u32>;

/// `small ⊆ big`, both strictly ascending.
fn is_subset(small: &[u32], big: &[u32]) -> bool {
    let mut it = big.iter();
    'outer: for &s in small {
        for &b in it.by_ref() {
            if b == s {
                continue 'outer;
            }
            if b > s {
                return false;
            }
        }
        return false;
    }
    true
}

fn count_support(db: &TransactionDatabase, itemset: &[u32]) -> u32 {
    db.transactions()
        .iter()
        .filter(|t| is_subset(itemset, t))
        .count() as u32
}

/// Exact frequent-itemset set by level-wise search: join frequent
/// k-itemsets sharing a (k-1)-prefix, prune candidates with an infrequent
/// subset, then scan the dataset for the survivors' supports.
pub fn apriori_all(db: &TransactionDatabase, min_sup: u32) -> FISet {
    let min_sup = min_sup.max(1);
    let mut fi = FISet::new();

    let mut level: Vec<Vec<u32>> = db
        .item_supports()
        .into_iter()
        .filter(|&(_, sup)| sup >= min_sup)
        .map(|(item, sup)| {
            fi.insert(vec![item], sup);
            vec![item]
        })
        .collect();

    while !level.is_empty() {
        let mut next = Vec::new();
        for i in 0..level.len() {
            for j in i + 1..level.len() {
                let a = &level[i];
                let b = &level[j];
                if a[..a.len() - 1] != b[..b.len() - 1] {
                    continue;
                }
                let mut candidate = a.clone();
                candidate.push(b[b.len() - 1]);
                candidate.sort_unstable();
                // prune: every k-subset must already be frequent
                let prunable = (0..candidate.len()).any(|drop| {
                    let mut sub = candidate.clone();
                    sub.remove(drop);
                    !fi.contains_key(&sub)
                });
                if prunable {
                    continue;
                }
                let sup = count_support(db, &candidate);
                if sup >= min_sup {
                    fi.insert(candidate.clone(), sup);
                    next.push(candidate);
                }
            }
        }
        next.sort_unstable();
        next.dedup();
        level = next;
    }
    fi
}

/// Members of `fi` with no proper superset in `fi`.
pub fn maximal_filter(fi: &FISet) -> Vec<(Vec<u32>, u32)> {
    fi.iter()
        .filter(|(items, _)| {
            !fi.keys()
                .any(|other| other.len() > items.len() && is_subset(items, other))
        })
        .map(|(items, &sup)| (items.clone(), sup))
        .collect()
}

/// Members of `fi` with no equally frequent proper superset in `fi`.
pub fn closed_filter(fi: &FISet) -> Vec<(Vec<u32>, u32)> {
    fi.iter()
        .filter(|(items, &sup)| {
            !fi.iter().any(|(other, &other_sup)| {
                other.len() > items.len() && other_sup == sup && is_subset(items, other)
            })
        })
        .map(|(items, &sup)| (items.clone(), sup))
        .collect()
}

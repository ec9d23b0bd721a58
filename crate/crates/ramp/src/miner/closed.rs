//! Closed-frequent-itemset mining.
//!
//! Reuses the maximal miner's store and LIND machinery with support-aware
//! subsumption: a head is closed iff no stored superset carries the same
//! support. The check runs after the node's subtree returns, against the
//! node's LIND kept current through the same watermark refreshes the
//! maximal miner uses, so it sees both previously stored patterns and
//! everything the subtree just added.
//!
//! PEP applies here in closedness form: a tail item with the head's exact
//! support is a closure extension (its absence proves the head non-closed),
//! so it is absorbed into the head. Disabling `pep` restores the plain
//! post-recursion behaviour; the output is identical either way.

use crate::index::RootIndex;
use crate::words::Word;

use super::max::{collect_patterns, StoreCtx};
use super::store::levels_split;
use super::{
    lind_has_support, lind_propagate, lind_propagate_in_place, lind_refresh, Driver, MineOptions,
    MineRun, Node, Subsumption,
};

/// Mine the closed frequent itemsets with exact supports, in discovery
/// order.
pub fn mine_closed<W: Word>(
    root: &RootIndex<W>,
    min_sup: u32,
    opts: &MineOptions,
) -> (Vec<(Vec<u32>, u32)>, MineRun) {
    debug_assert!(min_sup.max(1) >= root.min_sup());
    let mut driver = Driver::new(root, min_sup, opts);
    let mut ctx = StoreCtx::new(root.item_count());
    let node = driver.root_node();
    let tail = driver.root_tail();
    explore(&mut driver, &mut ctx, node, &tail);

    let results = collect_patterns(root, &ctx.store);
    let run = driver.into_run(results.len() as u64);
    (results, run)
}

fn explore<W: Word>(
    driver: &mut Driver<'_, W>,
    ctx: &mut StoreCtx<W>,
    mut node: Node,
    tail: &[u32],
) {
    driver.stats.nodes += 1;
    let use_lind = matches!(driver.opts.subsumption, Subsumption::Lind);
    if driver.opts.verify_lind && use_lind {
        ctx.verify_lind(&node);
    }

    let child_level = node.depth + 1;
    let mark = driver.arena.mark(child_level);
    let counted = driver.count_tail(&node, tail);

    let mut kept = Vec::with_capacity(counted.len());
    for c in counted {
        if c.pair_pruned || c.support < driver.min_sup {
            continue;
        }
        if driver.opts.pep && c.support == node.support {
            let pos = node.head.partition_point(|&h| h < c.item);
            node.head.insert(pos, c.item);
            if use_lind {
                lind_propagate_in_place(
                    &mut ctx.linds[node.depth],
                    &ctx.store,
                    c.item,
                    &mut driver.stats.subsume_ops,
                );
            }
        } else {
            kept.push(c);
        }
    }
    let survivors = driver.reorder(kept);

    for i in 0..survivors.len() {
        let c = &survivors[i];
        let child = driver.make_child(&node, c);
        let child_tail: Vec<u32> = survivors[i + 1..].iter().map(|s| s.item).collect();
        if use_lind {
            let (parent, child_lind) = levels_split(&mut ctx.linds, node.depth);
            lind_propagate(
                parent,
                &ctx.store,
                c.item,
                child_lind,
                &mut driver.stats.subsume_ops,
            );
        }
        let watermark = ctx.store.len();
        explore(driver, ctx, child, &child_tail);
        if use_lind {
            lind_refresh(
                &mut ctx.linds[node.depth],
                &ctx.store,
                watermark,
                &node.head,
                &mut driver.stats.subsume_ops,
            );
        }
    }

    if !node.head.is_empty() {
        let not_closed = if use_lind {
            lind_has_support(
                &ctx.linds[node.depth],
                &ctx.store,
                node.support,
                &mut driver.stats.subsume_ops,
            )
        } else {
            ctx.store.superset_with_support_naive(
                &node.head,
                node.support,
                &mut driver.stats.subsume_ops,
            )
        };
        if !not_closed {
            ctx.store.add(&node.head, node.support);
        }
    }

    driver.arena.release(child_level, mark);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::parse_transactions_str;
    use crate::index::build_root_index;
    use crate::miner::mine_max;
    use crate::oracle::{apriori_all, closed_filter};
    use crate::samples::sample_store_db;

    fn mined_sorted(
        db: &crate::dataset::TransactionDatabase,
        min_sup: u32,
        opts: &MineOptions,
    ) -> Vec<(Vec<u32>, u32)> {
        let root = build_root_index::<u64>(db, min_sup);
        let (mut out, _) = mine_closed(&root, min_sup, opts);
        out.sort();
        out
    }

    #[test]
    fn sample_store_closed() {
        let db = sample_store_db();
        let opts = MineOptions {
            verify_lind: true,
            ..MineOptions::default()
        };
        let mined = mined_sorted(&db, 2, &opts);
        let expected = vec![
            (vec![0], 5),
            (vec![0, 1], 4),
            (vec![0, 1, 2], 2),
            (vec![0, 1, 3], 2),
            (vec![1], 5),
            (vec![2], 3),
            (vec![4], 2),
            (vec![8], 2),
        ];
        assert_eq!(mined, expected);
    }

    #[test]
    fn sample_store_min_sup_four() {
        let db = sample_store_db();
        let mined = mined_sorted(&db, 4, &MineOptions::default());
        assert_eq!(mined, vec![(vec![0], 5), (vec![0, 1], 4), (vec![1], 5)]);
    }

    #[test]
    fn identical_transactions_single_class() {
        let db = parse_transactions_str("1 2\n1 2\n1 2\n").unwrap();
        let mined = mined_sorted(&db, 1, &MineOptions::default());
        assert_eq!(mined, vec![(vec![1, 2], 3)]);
    }

    #[test]
    fn matches_oracle_filter() {
        let db = sample_store_db();
        for min_sup in 1..=6 {
            let mined = mined_sorted(&db, min_sup, &MineOptions::default());
            let mut expected = closed_filter(&apriori_all(&db, min_sup));
            expected.sort();
            assert_eq!(mined, expected, "min_sup {min_sup}");
        }
    }

    #[test]
    fn literal_post_recursion_check_without_pep() {
        let db = sample_store_db();
        for min_sup in 1..=5 {
            let with_pep = mined_sorted(&db, min_sup, &MineOptions::default());
            let without = mined_sorted(
                &db,
                min_sup,
                &MineOptions {
                    pep: false,
                    ..MineOptions::default()
                },
            );
            assert_eq!(with_pep, without);
        }
    }

    #[test]
    fn maximal_subset_of_closed() {
        let db = sample_store_db();
        for min_sup in 1..=6 {
            let root = build_root_index::<u64>(&db, min_sup);
            let (maximal, _) = mine_max(&root, min_sup, &MineOptions::default());
            let (closed, _) = mine_closed(&root, min_sup, &MineOptions::default());
            for m in &maximal {
                assert!(closed.contains(m), "{m:?} missing from closed output");
            }
            assert!(maximal.len() <= closed.len());
        }
    }
}

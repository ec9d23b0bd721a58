//! Maximal-frequent-itemset mining.
//!
//! On top of the shared driver this adds the three classic prunes plus
//! store-backed maximality checking:
//!
//! * HUTMFI: at node entry, if `head ∪ tail` is contained in a stored
//!   pattern the whole subtree is redundant.
//! * PEP: a tail item whose local support equals the head's occurs in
//!   every head transaction; it is moved into the head without descending.
//!   The head vector is unchanged by construction (the intersection is the
//!   identity on those rows).
//! * FHUT: each node's first child is flagged; when a flagged chain
//!   reports its entire head-union-tail frequent, the remaining siblings
//!   are skipped because everything they could produce is inside the
//!   just-recorded pattern.
//!
//! A node whose trimmed tail is empty is a leaf; its head is recorded iff
//! no stored pattern contains it (empty LIND, or a clean naive scan).

use crate::index::RootIndex;
use crate::words::Word;

use super::store::{contains_all, levels_split};
use super::{
    lind_indices, lind_propagate, lind_propagate_in_place, lind_refresh, lind_subsumes, Driver,
    Lind, MineOptions, MineRun, Node, PatternStore, Subsumption,
};

pub(crate) struct StoreCtx<W: Word> {
    pub store: PatternStore<W>,
    pub linds: Vec<Lind<W>>,
}

impl<W: Word> StoreCtx<W> {
    pub fn new(item_count: usize) -> Self {
        StoreCtx {
            store: PatternStore::new(item_count),
            linds: vec![Lind::new()],
        }
    }

    /// The LIND invariant: the selection at `node` is exactly the set of
    /// stored patterns containing the node's head.
    pub fn verify_lind(&self, node: &Node) {
        let selected = lind_indices(&self.linds[node.depth]);
        let expected: Vec<usize> = (0..self.store.len())
            .filter(|&j| contains_all(self.store.pattern(j), &node.head))
            .collect();
        assert_eq!(
            selected, expected,
            "LIND out of sync at head {:?}",
            node.head
        );
    }
}

/// Map stored patterns back to ascending original ids, in discovery order.
pub(crate) fn collect_patterns<W: Word>(
    root: &RootIndex<W>,
    store: &PatternStore<W>,
) -> Vec<(Vec<u32>, u32)> {
    store
        .patterns()
        .iter()
        .zip(store.supports())
        .map(|(p, &sup)| {
            let mut items: Vec<u32> = p.iter().map(|&i| root.original_id(i)).collect();
            items.sort_unstable();
            (items, sup)
        })
        .collect()
}

/// Mine the maximal frequent itemsets with exact supports, in discovery
/// order.
pub fn mine_max<W: Word>(
    root: &RootIndex<W>,
    min_sup: u32,
    opts: &MineOptions,
) -> (Vec<(Vec<u32>, u32)>, MineRun) {
    debug_assert!(min_sup.max(1) >= root.min_sup());
    let mut driver = Driver::new(root, min_sup, opts);
    let mut ctx = StoreCtx::new(root.item_count());
    let node = driver.root_node();
    let tail = driver.root_tail();
    explore(&mut driver, &mut ctx, node, &tail, true);

    let results = collect_patterns(root, &ctx.store);
    debug_assert!(store_is_antichain(&ctx.store));
    let run = driver.into_run(results.len() as u64);
    (results, run)
}

fn store_is_antichain<W: Word>(store: &PatternStore<W>) -> bool {
    let n = store.len();
    for i in 0..n {
        for j in 0..n {
            if i != j && contains_all(store.pattern(j), store.pattern(i)) {
                return false;
            }
        }
    }
    true
}

/// Returns true iff this node's full head-union-tail was confirmed frequent
/// through its leftmost chain (only meaningful when `is_hut` is set).
fn explore<W: Word>(
    driver: &mut Driver<'_, W>,
    ctx: &mut StoreCtx<W>,
    mut node: Node,
    tail: &[u32],
    is_hut: bool,
) -> bool {
    driver.stats.nodes += 1;
    let use_lind = matches!(driver.opts.subsumption, Subsumption::Lind);
    if driver.opts.verify_lind && use_lind {
        ctx.verify_lind(&node);
    }

    if driver.opts.hutmfi && !ctx.store.is_empty() {
        let subsumed = if use_lind {
            lind_subsumes(
                &ctx.linds[node.depth],
                &ctx.store,
                tail,
                &mut driver.stats.subsume_ops,
            )
        } else {
            let hut: Vec<u32> = node.head.iter().chain(tail).copied().collect();
            ctx.store
                .contains_superset_naive(&hut, &mut driver.stats.subsume_ops)
        };
        if subsumed {
            return false;
        }
    }

    let child_level = node.depth + 1;
    let mark = driver.arena.mark(child_level);
    let counted = driver.count_tail(&node, tail);

    let mut all_ext_frequent = true;
    let mut kept = Vec::with_capacity(counted.len());
    for c in counted {
        if c.pair_pruned || c.support < driver.min_sup {
            all_ext_frequent = false;
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

    if survivors.is_empty() {
        if !node.head.is_empty() {
            let subsumed = if use_lind {
                !ctx.linds[node.depth].is_empty()
            } else {
                ctx.store
                    .contains_superset_naive(&node.head, &mut driver.stats.subsume_ops)
            };
            if !subsumed {
                ctx.store.add(&node.head, node.support);
            }
        }
        driver.arena.release(child_level, mark);
        return is_hut && all_ext_frequent;
    }

    let mut leftmost_hut = false;
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
        let confirmed = explore(driver, ctx, child, &child_tail, i == 0);
        if use_lind {
            lind_refresh(
                &mut ctx.linds[node.depth],
                &ctx.store,
                watermark,
                &node.head,
                &mut driver.stats.subsume_ops,
            );
        }
        if i == 0 {
            leftmost_hut = confirmed;
            if driver.opts.fhut && confirmed {
                // everything the remaining siblings could reach is inside
                // the pattern the leftmost chain just confirmed
                break;
            }
        }
    }

    driver.arena.release(child_level, mark);
    is_hut && all_ext_frequent && leftmost_hut
}

//! All-frequent-itemset mining.
//!
//! Straight depth-first enumeration: count the tail, drop infrequent items,
//! reorder by ascending local support, emit each surviving child as it is
//! created (pre-order), recurse. Singletons are emitted at the root; the
//! empty itemset never is.

use std::io;

use crate::index::RootIndex;
use crate::words::Word;

use super::{Driver, ItemsetSink, MineOptions, MineRun, Node};

/// Mine every frequent itemset into `sink`. Returns the emission count and
/// run counters. A sink error aborts the mine and propagates.
///
/// `min_sup` is clamped to at least 1 and must not be below the threshold
/// the root index was built with. The `pep`/`fhut`/`hutmfi` options do not
/// apply to this mode and are ignored.
pub fn mine_all<W: Word, S: ItemsetSink + ?Sized>(
    root: &RootIndex<W>,
    min_sup: u32,
    opts: &MineOptions,
    sink: &mut S,
) -> io::Result<MineRun> {
    debug_assert!(min_sup.max(1) >= root.min_sup());
    let mut driver = Driver::new(root, min_sup, opts);
    let mut count = 0u64;
    let node = driver.root_node();
    let tail = driver.root_tail();
    explore(&mut driver, &node, &tail, sink, &mut count)?;
    Ok(driver.into_run(count))
}

/// [`mine_all`] collecting into a vector, for tests and small runs.
pub fn mine_all_collect<W: Word>(
    root: &RootIndex<W>,
    min_sup: u32,
    opts: &MineOptions,
) -> (Vec<(Vec<u32>, u32)>, MineRun) {
    let mut out = Vec::new();
    let run = mine_all(root, min_sup, opts, &mut |items: &[u32], support| {
        out.push((items.to_vec(), support));
        Ok(())
    })
    .expect("collecting sink cannot fail");
    (out, run)
}

fn explore<W: Word, S: ItemsetSink + ?Sized>(
    driver: &mut Driver<'_, W>,
    node: &Node,
    tail: &[u32],
    sink: &mut S,
    count: &mut u64,
) -> io::Result<()> {
    driver.stats.nodes += 1;
    let child_level = node.depth + 1;
    let mark = driver.arena.mark(child_level);

    let counted = driver.count_tail(node, tail);
    let survivors = driver.reorder(counted);

    for i in 0..survivors.len() {
        let c = &survivors[i];
        let items = driver.original_items(&node.head, Some(c.item));
        sink.emit(items, c.support)?;
        *count += 1;

        let child = driver.make_child(node, c);
        let child_tail: Vec<u32> = survivors[i + 1..].iter().map(|s| s.item).collect();
        explore(driver, &child, &child_tail, sink, count)?;
    }

    driver.arena.release(child_level, mark);
    Ok(())
}

//! Root-level vertical index with density compaction.
//!
//! Building the index removes infrequent items, drops rows that contain no
//! frequent item, and renumbers the surviving rows densely in their original
//! order before packing one bit-vector per frequent item. The compaction
//! raises the set-bit density per region, which directly shrinks every
//! projection computed during the mine.
//!
//! Frequent items are assigned dense internal ids in ascending support
//! order (ties by ascending original id), so the root tail is already in
//! mining order and deeper reorders stay cheap.

use std::collections::HashMap;

use crate::bitvec::BitVector;
use crate::dataset::TransactionDatabase;
use crate::words::Word;

/// Compacted per-item bit-vectors over remapped rows, plus the root PBR.
#[derive(Clone, Debug)]
pub struct RootIndex<W: Word> {
    /// `(original id, support)` per internal id, ascending by
    /// `(support, original id)`.
    frequent_items: Vec<(u32, u32)>,
    bitmaps: Vec<BitVector<W>>,
    row_count: usize,
    root_pbr: Vec<u32>,
    min_sup: u32,
}

impl<W: Word> RootIndex<W> {
    /// Number of frequent items (the internal id space).
    pub fn item_count(&self) -> usize {
        self.frequent_items.len()
    }

    pub fn frequent_items(&self) -> &[(u32, u32)] {
        &self.frequent_items
    }

    pub fn original_id(&self, internal: u32) -> u32 {
        self.frequent_items[internal as usize].0
    }

    pub fn support(&self, internal: u32) -> u32 {
        self.frequent_items[internal as usize].1
    }

    /// Internal id of an original item id, if it is frequent.
    pub fn internal_id(&self, original: u32) -> Option<u32> {
        self.frequent_items
            .iter()
            .position(|&(orig, _)| orig == original)
            .map(|i| i as u32)
    }

    pub fn bitmap(&self, internal: u32) -> &BitVector<W> {
        &self.bitmaps[internal as usize]
    }

    pub fn row_count(&self) -> usize {
        self.row_count
    }

    pub fn n_regions(&self) -> usize {
        self.row_count.div_ceil(W::BITS as usize)
    }

    pub fn root_pbr(&self) -> &[u32] {
        &self.root_pbr
    }

    pub fn min_sup(&self) -> u32 {
        self.min_sup
    }
}

/// Build the compacted root index for an absolute support threshold.
///
/// A threshold above every item's support yields an index with zero items
/// and zero rows.
pub fn build_root_index<W: Word>(db: &TransactionDatabase, min_sup: u32) -> RootIndex<W> {
    let min_sup = min_sup.max(1);
    let supports = db.item_supports();

    let mut frequent_items: Vec<(u32, u32)> = supports
        .into_iter()
        .filter(|&(_, sup)| sup >= min_sup)
        .collect();
    frequent_items.sort_unstable_by_key(|&(orig, sup)| (sup, orig));

    let internal_of: HashMap<u32, u32> = frequent_items
        .iter()
        .enumerate()
        .map(|(i, &(orig, _))| (orig, i as u32))
        .collect();

    // Rows with no frequent item are dropped; survivors keep original order.
    let kept: Vec<&Vec<u32>> = db
        .transactions()
        .iter()
        .filter(|t| t.iter().any(|item| internal_of.contains_key(item)))
        .collect();
    let row_count = kept.len();

    let mut bitmaps: Vec<BitVector<W>> = frequent_items
        .iter()
        .map(|_| BitVector::zeroed(row_count))
        .collect();
    for (row, t) in kept.iter().enumerate() {
        for item in t.iter() {
            if let Some(&internal) = internal_of.get(item) {
                bitmaps[internal as usize].set_row(row);
            }
        }
    }

    // Union of nonzero regions across all item vectors. Compaction makes
    // this the full region range, but compute it rather than assume it.
    let n_regions = row_count.div_ceil(W::BITS as usize);
    let root_pbr: Vec<u32> = (0..n_regions as u32)
        .filter(|&r| bitmaps.iter().any(|b| !b.words()[r as usize].is_zero()))
        .collect();
    debug_assert_eq!(
        root_pbr.len(),
        n_regions,
        "every kept row has a frequent item"
    );

    RootIndex {
        frequent_items,
        bitmaps,
        row_count,
        root_pbr,
        min_sup,
    }
}

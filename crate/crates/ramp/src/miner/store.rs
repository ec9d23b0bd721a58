//! Pattern store with vertical bitmaps and local index lists.
//!
//! Discovered maximal (or closed) patterns are kept append-only. Alongside
//! the pattern list, the store maintains one growable bit-vector per
//! root-frequent item over *pattern indices*: bit `j` of item `i` is set iff
//! item `i` occurs in pattern `j`. Subsumption questions then become word
//! operations on these bitmaps.
//!
//! A LIND is a node-local selection of candidate patterns: the sorted list
//! of bitmap blocks that still contain a pattern whose item set is a
//! superset of the node's head, each with the mask of surviving patterns in
//! that block. Propagating a LIND to a child is one AND per block against
//! the extending item's bitmap; an empty LIND at a leaf means the head is
//! not contained in any stored pattern. Blocks carry `W::BITS` patterns per
//! index, so the whole word width is compared per operation.
//!
//! Every word touched on these bitmaps is tallied into an operation counter
//! so the LIND strategy can be compared against the naive full-store scan
//! that answers the same queries.

use crate::words::Word;

/// Append-only pattern list plus per-item bitmaps over pattern indices.
pub struct PatternStore<W: Word> {
    patterns: Vec<Vec<u32>>,
    supports: Vec<u32>,
    item_words: Vec<Vec<W>>,
}

impl<W: Word> PatternStore<W> {
    pub fn new(item_count: usize) -> Self {
        PatternStore {
            patterns: Vec::new(),
            supports: Vec::new(),
            item_words: vec![Vec::new(); item_count],
        }
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn pattern(&self, idx: usize) -> &[u32] {
        &self.patterns[idx]
    }

    pub fn support(&self, idx: usize) -> u32 {
        self.supports[idx]
    }

    pub fn patterns(&self) -> &[Vec<u32>] {
        &self.patterns
    }

    pub fn supports(&self) -> &[u32] {
        &self.supports
    }

    /// Blocks currently addressable (`ceil(len / W::BITS)`).
    pub fn blocks(&self) -> usize {
        self.patterns.len().div_ceil(W::BITS as usize)
    }

    /// Word `block` of item `i`'s bitmap, zero-extended past allocation.
    #[inline]
    pub fn word(&self, item: u32, block: usize) -> W {
        self.item_words[item as usize]
            .get(block)
            .copied()
            .unwrap_or(W::ZERO)
    }

    /// Append a pattern, setting its bit in every member item's bitmap.
    /// Returns the new pattern's index.
    pub fn add(&mut self, items: &[u32], support: u32) -> usize {
        let idx = self.patterns.len();
        let block = idx / W::BITS as usize;
        let bit = (idx % W::BITS as usize) as u32;
        for &item in items {
            let words = &mut self.item_words[item as usize];
            if words.len() <= block {
                words.resize(block + 1, W::ZERO);
            }
            words[block] = words[block].with_bit(bit);
        }
        self.patterns.push(items.to_vec());
        self.supports.push(support);
        idx
    }

    /// Linear full-store scan: is some stored pattern a superset of `items`?
    /// Walks every block of the bitmaps, ANDing the member items' words.
    pub fn contains_superset_naive(&self, items: &[u32], ops: &mut u64) -> bool {
        if items.is_empty() {
            return !self.is_empty();
        }
        for block in 0..self.blocks() {
            if !self.fold_block(items, block, ops).is_zero() {
                return true;
            }
        }
        false
    }

    /// Linear full-store scan: is some stored superset of `items` stored
    /// with exactly `support`?
    pub fn superset_with_support_naive(&self, items: &[u32], support: u32, ops: &mut u64) -> bool {
        for block in 0..self.blocks() {
            let m = if items.is_empty() {
                self.block_occupancy(block)
            } else {
                self.fold_block(items, block, ops)
            };
            if self.mask_has_support(block, m, support) {
                return true;
            }
        }
        false
    }

    fn fold_block(&self, items: &[u32], block: usize, ops: &mut u64) -> W {
        let mut m = W::ONES;
        for &item in items {
            *ops += 1;
            m = m.and(self.word(item, block));
            if m.is_zero() {
                break;
            }
        }
        m
    }

    fn block_occupancy(&self, block: usize) -> W {
        let base = block * W::BITS as usize;
        let mut m = W::ZERO;
        for bit in 0..W::BITS {
            if base + bit as usize >= self.patterns.len() {
                break;
            }
            m = m.with_bit(bit);
        }
        m
    }

    fn mask_has_support(&self, block: usize, mask: W, support: u32) -> bool {
        if mask.is_zero() {
            return false;
        }
        let base = block * W::BITS as usize;
        for bit in 0..W::BITS {
            if mask.bit(bit) && self.supports[base + bit as usize] == support {
                return true;
            }
        }
        false
    }
}

/// Node-local candidate selection: ascending `(block, mask)` pairs with
/// nonzero masks. Every masked pattern contains the owning node's head.
pub type Lind<W> = Vec<(u32, W)>;

/// Build the child's LIND by ANDing each parent block with the extending
/// item's bitmap word; blocks whose mask empties are dropped.
pub fn lind_propagate<W: Word>(
    parent: &Lind<W>,
    store: &PatternStore<W>,
    item: u32,
    out: &mut Lind<W>,
    ops: &mut u64,
) {
    out.clear();
    for &(block, mask) in parent {
        *ops += 1;
        let m = mask.and(store.word(item, block as usize));
        if !m.is_zero() {
            out.push((block, m));
        }
    }
}

/// In-place variant of [`lind_propagate`], used when an item is absorbed
/// into the head without descending.
pub fn lind_propagate_in_place<W: Word>(
    lind: &mut Lind<W>,
    store: &PatternStore<W>,
    item: u32,
    ops: &mut u64,
) {
    lind.retain_mut(|entry| {
        *ops += 1;
        let m = entry.1.and(store.word(item, entry.0 as usize));
        entry.1 = m;
        !m.is_zero()
    });
}

/// Fold patterns stored since `watermark` back into a node's LIND: every new
/// pattern whose item bitmaps contain all of `head` joins the selection.
pub fn lind_refresh<W: Word>(
    lind: &mut Lind<W>,
    store: &PatternStore<W>,
    watermark: usize,
    head: &[u32],
    ops: &mut u64,
) {
    let end = store.len();
    if watermark >= end {
        return;
    }
    let bits = W::BITS as usize;
    let first = watermark / bits;
    let last = (end - 1) / bits;
    for block in first..=last {
        let lo = watermark.max(block * bits) - block * bits;
        let hi = end.min((block + 1) * bits) - block * bits;
        let mut m = W::ZERO;
        for bit in lo..hi {
            m = m.with_bit(bit as u32);
        }
        for &h in head {
            *ops += 1;
            m = m.and(store.word(h, block));
            if m.is_zero() {
                break;
            }
        }
        if m.is_zero() {
            continue;
        }
        match lind.binary_search_by_key(&(block as u32), |e| e.0) {
            Ok(i) => lind[i].1 = lind[i].1.or(m),
            Err(i) => lind.insert(i, (block as u32, m)),
        }
    }
}

/// Is some LIND-selected pattern a superset of `head ∪ items`? The LIND
/// already restricts to head-containing patterns, so only `items` are ANDed.
pub fn lind_subsumes<W: Word>(
    lind: &Lind<W>,
    store: &PatternStore<W>,
    items: &[u32],
    ops: &mut u64,
) -> bool {
    for &(block, mask) in lind {
        let mut m = mask;
        for &item in items {
            *ops += 1;
            m = m.and(store.word(item, block as usize));
            if m.is_zero() {
                break;
            }
        }
        if !m.is_zero() {
            return true;
        }
    }
    false
}

/// Does any LIND-selected pattern carry exactly this support?
pub fn lind_has_support<W: Word>(
    lind: &Lind<W>,
    store: &PatternStore<W>,
    support: u32,
    ops: &mut u64,
) -> bool {
    for &(block, mask) in lind {
        *ops += 1;
        if store.mask_has_support(block as usize, mask, support) {
            return true;
        }
    }
    false
}

/// `needle ⊆ haystack`, both strictly ascending.
pub(crate) fn contains_all(haystack: &[u32], needle: &[u32]) -> bool {
    let mut it = haystack.iter();
    'outer: for &n in needle {
        for &h in it.by_ref() {
            if h == n {
                continue 'outer;
            }
            if h > n {
                return false;
            }
        }
        return false;
    }
    true
}

/// Split the per-level LIND stack into `(level, level + 1)`, growing the
/// stack as the search deepens. Levels keep their capacity across subtrees.
pub(crate) fn levels_split<W: Word>(
    levels: &mut Vec<Lind<W>>,
    depth: usize,
) -> (&Lind<W>, &mut Lind<W>) {
    while levels.len() <= depth + 1 {
        levels.push(Lind::new());
    }
    let (lo, hi) = levels.split_at_mut(depth + 1);
    (&lo[depth], &mut hi[0])
}

/// Expand a LIND to the sorted list of selected pattern indices.
pub fn lind_indices<W: Word>(lind: &Lind<W>) -> Vec<usize> {
    let mut out = Vec::new();
    for &(block, mask) in lind {
        let base = block as usize * W::BITS as usize;
        for bit in 0..W::BITS {
            if mask.bit(bit) {
                out.push(base + bit as usize);
            }
        }
    }
    out
}

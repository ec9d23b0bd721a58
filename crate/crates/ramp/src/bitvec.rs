//! Vertical bit-vectors and region-projected intersection.
//!
//! A bit-vector stores one bit per transaction row, packed into fixed-width
//! [`Word`] regions. The support of `head ∪ {item}` is the popcount of the
//! word-wise AND of the two vectors. Counting visits only the regions listed
//! in the head's projected-bit-regions (PBR), the sorted indices of regions
//! where the head vector is nonzero. A region that is zero in the head
//! contributes nothing to any superset of the head.
//!
//! [`intersect_and_project`] fuses the two passes a naive implementation
//! would make per tail item (one to count, one to build the child vector):
//! it counts support, writes the child's words, and collects the child's
//! PBR in a single sweep over the parent's PBR.
//!
//! Child vectors keep the parent's region index space, so a PBR index is
//! valid against any ancestor's words as well as the root item bitmaps.
//! Only positions listed in the child's own PBR are meaningful; everything
//! else in a child buffer may hold stale data and is never read.

use crate::words::Word;

/// Owned bit-vector over transaction rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitVector<W: Word> {
    words: Vec<W>,
    len_rows: usize,
}

impl<W: Word> BitVector<W> {
    pub fn zeroed(len_rows: usize) -> Self {
        let n_regions = len_rows.div_ceil(W::BITS as usize);
        BitVector {
            words: vec![W::ZERO; n_regions],
            len_rows,
        }
    }

    pub fn from_rows(len_rows: usize, rows: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeroed(len_rows);
        for r in rows {
            v.set_row(r);
        }
        v
    }

    pub fn set_row(&mut self, row: usize) {
        debug_assert!(row < self.len_rows);
        let region = row / W::BITS as usize;
        let bit = (row % W::BITS as usize) as u32;
        self.words[region] = self.words[region].with_bit(bit);
    }

    pub fn row(&self, row: usize) -> bool {
        let region = row / W::BITS as usize;
        let bit = (row % W::BITS as usize) as u32;
        self.words[region].bit(bit)
    }

    pub fn words(&self) -> &[W] {
        &self.words
    }

    pub fn len_rows(&self) -> usize {
        self.len_rows
    }

    pub fn n_regions(&self) -> usize {
        self.words.len()
    }

    pub fn count_ones(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    /// Sorted indices of nonzero regions.
    pub fn nonzero_regions(&self) -> Vec<u32> {
        self.words
            .iter()
            .enumerate()
            .filter(|(_, w)| !w.is_zero())
            .map(|(i, _)| i as u32)
            .collect()
    }
}

/// Number of one-bits in a single region word.
pub fn count_set_bits<W: Word>(word: W) -> u32 {
    word.count_ones()
}

/// Support of `head ∪ item`, visiting only the head's projected regions.
///
/// Equals the full-scan intersection count whenever `head` is zero outside
/// `pbr`, which the projection maintains by construction.
pub fn support_over_pbr<W: Word>(head: &[W], item: &[W], pbr: &[u32]) -> u32 {
    let mut support = 0;
    for &region in pbr {
        let region = region as usize;
        support += head[region].and(item[region]).count_ones();
    }
    support
}

/// Count support of `head ∪ item` and materialize the child vector and its
/// PBR in the same sweep.
///
/// `child_words` must span the same region index space as `head` (positions
/// are written at the parent's region indices). When `project` is true only
/// nonzero results are written and indexed into `child_pbr`; when false
/// (full-scan counting) every visited position is written, including zeros,
/// and `child_pbr` is left untouched so the caller can reuse the full range.
pub fn intersect_and_project<W: Word>(
    head: &[W],
    item: &[W],
    pbr: &[u32],
    child_words: &mut [W],
    child_pbr: &mut Vec<u32>,
    project: bool,
) -> u32 {
    let mut support = 0;
    if project {
        for &region in pbr {
            let r = region as usize;
            let w = head[r].and(item[r]);
            if !w.is_zero() {
                support += w.count_ones();
                child_words[r] = w;
                child_pbr.push(region);
            }
        }
    } else {
        for &region in pbr {
            let r = region as usize;
            let w = head[r].and(item[r]);
            support += w.count_ones();
            child_words[r] = w;
        }
    }
    support
}

/// Root-level variant of [`intersect_and_project`]: the root head is the
/// implicit all-ones vector, so the child is a copy of the item's regions.
pub fn copy_and_project<W: Word>(
    item: &[W],
    pbr: &[u32],
    child_words: &mut [W],
    child_pbr: &mut Vec<u32>,
    project: bool,
) -> u32 {
    let mut support = 0;
    if project {
        for &region in pbr {
            let r = region as usize;
            let w = item[r];
            if !w.is_zero() {
                support += w.count_ones();
                child_words[r] = w;
                child_pbr.push(region);
            }
        }
    } else {
        for &region in pbr {
            let r = region as usize;
            let w = item[r];
            support += w.count_ones();
            child_words[r] = w;
        }
    }
    support
}

/// Per-depth bump heaps holding child head vectors and PBR index lists.
///
/// Depth-first search keeps a single path alive, so one heap per tree level
/// is enough: a node's children are bump-allocated in the level below it and
/// the watermark is rolled back when the node finishes. Word storage is
/// never re-zeroed on reuse; stale words outside a child's PBR are never
/// read. Heaps grow on demand, so allocation cannot fail mid-mine.
pub struct ProjectionArena<W: Word> {
    depths: Vec<DepthHeap<W>>,
    region_space: usize,
}

struct DepthHeap<W: Word> {
    words: Vec<W>,
    words_top: usize,
    regions: Vec<u32>,
}

/// Rollback point for one level, captured before a node allocates children.
#[derive(Clone, Copy, Debug)]
pub struct ArenaMark {
    words_top: usize,
    regions_len: usize,
}

impl<W: Word> ProjectionArena<W> {
    pub fn new(region_space: usize) -> Self {
        ProjectionArena {
            depths: Vec::new(),
            region_space,
        }
    }

    pub fn region_space(&self) -> usize {
        self.region_space
    }

    fn ensure_depth(&mut self, depth: usize) {
        while self.depths.len() <= depth {
            self.depths.push(DepthHeap {
                words: Vec::new(),
                words_top: 0,
                regions: Vec::new(),
            });
        }
    }

    pub fn mark(&mut self, depth: usize) -> ArenaMark {
        self.ensure_depth(depth);
        let h = &self.depths[depth];
        ArenaMark {
            words_top: h.words_top,
            regions_len: h.regions.len(),
        }
    }

    pub fn release(&mut self, depth: usize, mark: ArenaMark) {
        let h = &mut self.depths[depth];
        h.words_top = mark.words_top;
        h.regions.truncate(mark.regions_len);
    }

    /// Reserve one child window (a full region-space slice) at `depth`.
    /// Returns the window's base offset.
    pub fn alloc_child(&mut self, depth: usize) -> usize {
        self.ensure_depth(depth);
        let space = self.region_space;
        let h = &mut self.depths[depth];
        let base = h.words_top;
        if h.words.len() < base + space {
            h.words.resize(base + space, W::ZERO);
        }
        h.words_top = base + space;
        base
    }

    /// Borrow the parent head window at `parent_depth` together with the
    /// mutable child heap one level below.
    pub fn parent_and_child(
        &mut self,
        parent_depth: usize,
        parent_base: usize,
    ) -> (&[W], &[u32], &mut Vec<W>, &mut Vec<u32>) {
        self.ensure_depth(parent_depth + 1);
        let space = self.region_space;
        let (lo, hi) = self.depths.split_at_mut(parent_depth + 1);
        let parent = &lo[parent_depth];
        let child = &mut hi[0];
        (
            &parent.words[parent_base..parent_base + space],
            &parent.regions,
            &mut child.words,
            &mut child.regions,
        )
    }

    /// Borrow a head window and the region heap at its depth.
    pub fn parent_view(&self, depth: usize, base: usize) -> (&[W], &[u32]) {
        let h = &self.depths[depth];
        (&h.words[base..base + self.region_space], &h.regions)
    }

    pub fn words(&self, depth: usize, base: usize) -> &[W] {
        &self.depths[depth].words[base..base + self.region_space]
    }

    pub fn regions(&self, depth: usize, range: std::ops::Range<usize>) -> &[u32] {
        &self.depths[depth].regions[range]
    }

    pub fn regions_len(&self, depth: usize) -> usize {
        self.depths[depth].regions.len()
    }

    pub fn child_heap(&mut self, depth: usize) -> (&mut Vec<W>, &mut Vec<u32>) {
        self.ensure_depth(depth);
        let h = &mut self.depths[depth];
        (&mut h.words, &mut h.regions)
    }

    pub fn bump_words_top(&mut self, depth: usize, top: usize) {
        self.depths[depth].words_top = top;
    }
}

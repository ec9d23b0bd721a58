//! Depth-first itemset miners over the root index.
//!
//! One driver carries everything the three modes share: projected support
//! counting with fused child construction, 2-itemset pair pruning, dynamic
//! tail reordering, and the per-level projection arena. The mode entry
//! points ([`mine_all`], [`mine_max`], [`mine_closed`]) add their own
//! pruning and emission rules on top.
//!
//! A search node is a head itemset (dense internal ids), its bit-vector
//! (a window in the arena), its PBR, and the tail of candidate extension
//! items handed down by the parent. Internal ids are assigned in ascending
//! root-support order, and tails are resorted by ascending local support at
//! every node; ties break on ascending internal id.

mod all;
mod closed;
mod matrix;
mod max;
mod store;

pub use all::{mine_all, mine_all_collect};
pub use closed::mine_closed;
pub use matrix::PairMatrix;
pub use max::mine_max;
pub use store::{
    lind_has_support, lind_indices, lind_propagate, lind_propagate_in_place, lind_refresh,
    lind_subsumes, Lind, PatternStore,
};

use std::io;

use crate::bitvec::{copy_and_project, intersect_and_project, support_over_pbr, ProjectionArena};
use crate::index::RootIndex;
use crate::words::Word;

/// Mining output mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    All,
    Max,
    Closed,
}

/// How counting loops choose the regions they visit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Projection {
    /// Visit only the head's projected bit regions.
    Pbr,
    /// Simple loop over every root region.
    FullScan,
}

/// How stored patterns are consulted for subsumption/closedness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subsumption {
    /// Per-node local index lists propagated down the tree.
    Lind,
    /// Linear scan over the whole store at every query.
    LinearScan,
}

/// Tail ordering discipline.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReorderPolicy {
    /// Ascending local support, ties by ascending internal id.
    AscendingSupport,
    /// Static ascending original id (infrequent items still removed).
    Lexicographic,
}

/// Feature toggles. Every toggle preserves the mined output; they exist for
/// differential testing and measurement. `pep`, `fhut` and `hutmfi` only
/// apply to the modes that use them (max, and `pep` also closed).
#[derive(Clone, Debug)]
pub struct MineOptions {
    pub pair_prune: bool,
    pub pep: bool,
    pub fhut: bool,
    pub hutmfi: bool,
    /// Fuse support counting with child vector construction (one pass per
    /// tail item instead of two).
    pub erfco: bool,
    pub projection: Projection,
    pub subsumption: Subsumption,
    pub reorder: ReorderPolicy,
    /// Record `(head original ids, head PBR)` for every node created.
    pub collect_node_trace: bool,
    /// Re-derive every LIND from the raw pattern list and compare (slow;
    /// test use only).
    pub verify_lind: bool,
}

impl Default for MineOptions {
    fn default() -> Self {
        MineOptions {
            pair_prune: true,
            pep: true,
            fhut: true,
            hutmfi: true,
            erfco: true,
            projection: Projection::Pbr,
            subsumption: Subsumption::Lind,
            reorder: ReorderPolicy::AscendingSupport,
            collect_node_trace: false,
            verify_lind: false,
        }
    }
}

/// Operation counters for one mine.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MineStats {
    /// Word AND/copy operations spent counting supports and building child
    /// vectors.
    pub and_ops: u64,
    /// Word operations on pattern-index bitmaps (LIND upkeep or naive
    /// scans).
    pub subsume_ops: u64,
    /// Search-tree nodes expanded, including the root.
    pub nodes: u64,
}

/// Result summary of one mine.
#[derive(Clone, Debug, Default)]
pub struct MineRun {
    /// Itemsets emitted (all mode) or patterns stored (max/closed).
    pub count: u64,
    pub stats: MineStats,
    /// `(head original ids ascending, head PBR region indices)` per node,
    /// in creation order; empty unless requested.
    pub node_trace: Vec<(Vec<u32>, Vec<u32>)>,
}

/// Consumer of mined itemsets. Items arrive as ascending original ids.
pub trait ItemsetSink {
    fn emit(&mut self, items: &[u32], support: u32) -> io::Result<()>;
}

impl<F: FnMut(&[u32], u32) -> io::Result<()>> ItemsetSink for F {
    fn emit(&mut self, items: &[u32], support: u32) -> io::Result<()> {
        self(items, support)
    }
}

/// Where a node's PBR lives.
#[derive(Clone, Copy, Debug)]
pub(crate) enum PbrRef {
    /// The root PBR (also used by every node under full-scan counting).
    Root,
    /// A slice of the arena's region heap at the node's depth.
    Heap { start: usize, len: usize },
}

/// One search-tree node. The head vector occupies a region-space window in
/// the arena at `depth` (depth 0 is the root: empty head, no window).
pub(crate) struct Node {
    pub head: Vec<u32>,
    pub support: u32,
    pub depth: usize,
    pub words_base: usize,
    pub pbr: PbrRef,
}

/// Per-tail-item counting result at one node.
pub(crate) struct Counted {
    pub item: u32,
    pub support: u32,
    /// Known infrequent from the pair table; never counted.
    pub pair_pruned: bool,
    /// Child window (valid when the fused pass materialized it).
    pub words_base: usize,
    pub pbr: PbrRef,
}

pub(crate) struct Driver<'a, W: Word> {
    pub root: &'a RootIndex<W>,
    pub min_sup: u32,
    pub opts: &'a MineOptions,
    pub arena: ProjectionArena<W>,
    pub matrix: Option<PairMatrix>,
    pub stats: MineStats,
    pub trace: Vec<(Vec<u32>, Vec<u32>)>,
    emit_buf: Vec<u32>,
}

impl<'a, W: Word> Driver<'a, W> {
    pub fn new(root: &'a RootIndex<W>, min_sup: u32, opts: &'a MineOptions) -> Self {
        let matrix = if opts.pair_prune && root.item_count() >= 2 {
            Some(PairMatrix::new(root.item_count()))
        } else {
            None
        };
        Driver {
            root,
            min_sup: min_sup.max(1),
            opts,
            arena: ProjectionArena::new(root.n_regions()),
            matrix,
            stats: MineStats::default(),
            trace: Vec::new(),
            emit_buf: Vec::new(),
        }
    }

    pub fn root_node(&self) -> Node {
        Node {
            head: Vec::new(),
            support: self.root.row_count() as u32,
            depth: 0,
            words_base: 0,
            pbr: PbrRef::Root,
        }
    }

    /// Root tail: every frequent item, in the policy's order. Internal ids
    /// are already ascending-support, so that policy is the identity.
    pub fn root_tail(&self) -> Vec<u32> {
        let mut tail: Vec<u32> = (0..self.root.item_count() as u32).collect();
        if matches!(self.opts.reorder, ReorderPolicy::Lexicographic) {
            tail.sort_unstable_by_key(|&i| self.root.original_id(i));
        }
        tail
    }

    fn project(&self) -> bool {
        matches!(self.opts.projection, Projection::Pbr)
    }

    /// Count every tail item at `node`, fusing child construction when
    /// erfco is on. Pair-pruned items are skipped outright.
    pub fn count_tail(&mut self, node: &Node, tail: &[u32]) -> Vec<Counted> {
        let mut counted = Vec::with_capacity(tail.len());
        for &item in tail {
            if let Some(matrix) = &self.matrix {
                if !node.head.is_empty() && matrix.any_infrequent_with(&node.head, item) {
                    counted.push(Counted {
                        item,
                        support: 0,
                        pair_pruned: true,
                        words_base: 0,
                        pbr: PbrRef::Root,
                    });
                    continue;
                }
            }
            let c = if self.opts.erfco {
                let (support, words_base, pbr) = self.project_child(node, item);
                Counted {
                    item,
                    support,
                    pair_pruned: false,
                    words_base,
                    pbr,
                }
            } else {
                Counted {
                    item,
                    support: self.support_of(node, item),
                    pair_pruned: false,
                    words_base: 0,
                    pbr: PbrRef::Root,
                }
            };
            self.record_pair_outcome(&node.head, c.item, c.support);
            counted.push(c);
        }
        counted
    }

    fn record_pair_outcome(&mut self, head: &[u32], item: u32, support: u32) {
        let Some(matrix) = &mut self.matrix else {
            return;
        };
        if support >= self.min_sup {
            for &h in head {
                matrix.mark_frequent(h, item);
            }
        } else if head.len() == 1 {
            matrix.mark_infrequent(head[0], item);
        }
    }

    /// Support of `head ∪ {item}` without materializing the child.
    fn support_of(&mut self, node: &Node, item: u32) -> u32 {
        if node.depth == 0 {
            // first-scan supports are already known at the root
            return self.root.support(item);
        }
        let (head_words, regions) = self.arena.parent_view(node.depth, node.words_base);
        let pbr = match node.pbr {
            PbrRef::Root => self.root.root_pbr(),
            PbrRef::Heap { start, len } => &regions[start..start + len],
        };
        self.stats.and_ops += pbr.len() as u64;
        support_over_pbr(head_words, self.root.bitmap(item).words(), pbr)
    }

    /// Count and materialize the child vector/PBR for `head ∪ {item}` in a
    /// single pass over the parent's PBR.
    pub fn project_child(&mut self, node: &Node, item: u32) -> (u32, usize, PbrRef) {
        let project = self.project();
        let space = self.arena.region_space();
        let child_depth = node.depth + 1;
        let base = self.arena.alloc_child(child_depth);
        let item_words = self.root.bitmap(item).words();

        let (support, pbr_start, pbr_len) = if node.depth == 0 {
            let (child_words, child_regions) = self.arena.child_heap(child_depth);
            let pbr = self.root.root_pbr();
            self.stats.and_ops += pbr.len() as u64;
            let start = child_regions.len();
            let sup = copy_and_project(
                item_words,
                pbr,
                &mut child_words[base..base + space],
                child_regions,
                project,
            );
            (sup, start, child_regions.len() - start)
        } else {
            let (head_words, regions, child_words, child_regions) =
                self.arena.parent_and_child(node.depth, node.words_base);
            let pbr = match node.pbr {
                PbrRef::Root => self.root.root_pbr(),
                PbrRef::Heap { start, len } => &regions[start..start + len],
            };
            self.stats.and_ops += pbr.len() as u64;
            let start = child_regions.len();
            let sup = intersect_and_project(
                head_words,
                item_words,
                pbr,
                &mut child_words[base..base + space],
                child_regions,
                project,
            );
            (sup, start, child_regions.len() - start)
        };

        let pbr = if project {
            PbrRef::Heap {
                start: pbr_start,
                len: pbr_len,
            }
        } else {
            PbrRef::Root
        };
        (support, base, pbr)
    }

    /// Build the child node for a counted survivor, materializing its
    /// vector now if the counting pass did not.
    pub fn make_child(&mut self, node: &Node, c: &Counted) -> Node {
        let (words_base, pbr) = if self.opts.erfco {
            (c.words_base, c.pbr)
        } else {
            let (support, base, pbr) = self.project_child(node, c.item);
            debug_assert_eq!(support, c.support);
            (base, pbr)
        };
        let mut head = Vec::with_capacity(node.head.len() + 1);
        head.extend_from_slice(&node.head);
        let pos = head.partition_point(|&h| h < c.item);
        head.insert(pos, c.item);

        let child = Node {
            head,
            support: c.support,
            depth: node.depth + 1,
            words_base,
            pbr,
        };
        if self.opts.collect_node_trace {
            let items = self.original_items(&child.head, None).to_vec();
            let pbr = self.resolve_pbr(&child).to_vec();
            self.trace.push((items, pbr));
        }
        child
    }

    pub fn resolve_pbr(&self, node: &Node) -> &[u32] {
        match node.pbr {
            PbrRef::Root => self.root.root_pbr(),
            PbrRef::Heap { start, len } => self.arena.regions(node.depth, start..start + len),
        }
    }

    /// Drop infrequent (and pair-pruned) items, then order the survivors.
    pub fn reorder(&self, counted: Vec<Counted>) -> Vec<Counted> {
        let min_sup = self.min_sup;
        let mut survivors: Vec<Counted> = counted
            .into_iter()
            .filter(|c| !c.pair_pruned && c.support >= min_sup)
            .collect();
        match self.opts.reorder {
            ReorderPolicy::AscendingSupport => {
                survivors.sort_by_key(|c| (c.support, c.item));
            }
            ReorderPolicy::Lexicographic => {
                survivors.sort_by_key(|c| self.root.original_id(c.item));
            }
        }
        survivors
    }

    /// Map `head (∪ extra)` to ascending original ids in a reused buffer.
    pub fn original_items(&mut self, head: &[u32], extra: Option<u32>) -> &[u32] {
        self.emit_buf.clear();
        for &i in head {
            self.emit_buf.push(self.root.original_id(i));
        }
        if let Some(i) = extra {
            self.emit_buf.push(self.root.original_id(i));
        }
        self.emit_buf.sort_unstable();
        &self.emit_buf
    }

    pub fn into_run(self, count: u64) -> MineRun {
        MineRun {
            count,
            stats: self.stats,
            node_trace: self.trace,
        }
    }
}

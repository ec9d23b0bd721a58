//! Tri-state pair table used for 2-itemset pruning.
//!
//! A candidate `head ∪ {x}` is a superset of every pair `(h, x)` with
//! `h ∈ head`, so one known-infrequent pair proves the candidate infrequent
//! without touching the bit-vectors. Entries are filled lazily: a count at
//! a depth-1 node decides the pair outright, and any frequent itemset seen
//! deeper marks all of its pairs frequent. Unknown entries never prune.

const UNKNOWN: u8 = 0;
const FREQUENT: u8 = 1;
const INFREQUENT: u8 = 2;

/// Symmetric tri-state table over internal item ids, stored triangular.
pub struct PairMatrix {
    cells: Vec<u8>,
}

fn cell(a: u32, b: u32) -> usize {
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    let hi = hi as usize;
    hi * (hi - 1) / 2 + lo as usize
}

impl PairMatrix {
    pub fn new(item_count: usize) -> Self {
        let cells = vec![UNKNOWN; item_count * item_count.saturating_sub(1) / 2];
        PairMatrix { cells }
    }

    pub fn mark_frequent(&mut self, a: u32, b: u32) {
        self.cells[cell(a, b)] = FREQUENT;
    }

    pub fn mark_infrequent(&mut self, a: u32, b: u32) {
        debug_assert_ne!(self.cells[cell(a, b)], FREQUENT);
        self.cells[cell(a, b)] = INFREQUENT;
    }

    pub fn is_frequent(&self, a: u32, b: u32) -> bool {
        self.cells[cell(a, b)] == FREQUENT
    }

    /// True iff some pair `(h, x)` with `h ∈ head` is known infrequent.
    pub fn any_infrequent_with(&self, head: &[u32], x: u32) -> bool {
        head.iter().any(|&h| self.cells[cell(h, x)] == INFREQUENT)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_entries_never_prune() {
        let m = PairMatrix::new(5);
        assert!(!m.any_infrequent_with(&[0, 1, 2], 4));
    }

    #[test]
    fn one_infrequent_pair_prunes() {
        let mut m = PairMatrix::new(5);
        m.mark_infrequent(0, 4);
        assert!(m.any_infrequent_with(&[0, 1], 4));
        assert!(m.any_infrequent_with(&[4], 0), "symmetric");
        assert!(!m.any_infrequent_with(&[1, 2], 4));
    }

    #[test]
    fn frequent_pair_does_not_prune() {
        let mut m = PairMatrix::new(3);
        m.mark_frequent(0, 1);
        assert!(m.is_frequent(1, 0));
        assert!(!m.any_infrequent_with(&[0], 1));
    }
}

//! Fixed-width machine words used as bit-vector regions.
//!
//! A region holds `BITS` transaction rows. Counting the support of an
//! itemset is a sum of `count_ones` over ANDed regions, so the word width
//! is the unit of all projection bookkeeping. `u64` is the default width;
//! `u32` matches 32-bit region layouts; [`B1`] is a one-row-per-region
//! debug width that makes region indices coincide with row numbers, which
//! is convenient for tracing projections by hand.

use std::fmt::Debug;
use std::hash::Hash;

/// A bit-vector region word.
pub trait Word: Copy + Eq + Hash + Debug + Send + Sync + 'static {
    /// Rows stored per region.
    const BITS: u32;
    /// The empty region.
    const ZERO: Self;
    /// The saturated region (all `BITS` rows set).
    const ONES: Self;

    fn and(self, other: Self) -> Self;
    fn or(self, other: Self) -> Self;
    fn count_ones(self) -> u32;
    /// Set the bit for row offset `bit` (< `BITS`) within this region.
    fn with_bit(self, bit: u32) -> Self;
    fn bit(self, bit: u32) -> bool;

    fn is_zero(self) -> bool {
        self == Self::ZERO
    }
}

impl Word for u64 {
    const BITS: u32 = 64;
    const ZERO: Self = 0;
    const ONES: Self = u64::MAX;

    #[inline]
    fn and(self, other: Self) -> Self {
        self & other
    }

    #[inline]
    fn or(self, other: Self) -> Self {
        self | other
    }

    #[inline]
    fn count_ones(self) -> u32 {
        u64::count_ones(self)
    }

    #[inline]
    fn with_bit(self, bit: u32) -> Self {
        debug_assert!(bit < 64);
        self | (1u64 << bit)
    }

    #[inline]
    fn bit(self, bit: u32) -> bool {
        (self >> bit) & 1 == 1
    }
}

impl Word for u32 {
    const BITS: u32 = 32;
    const ZERO: Self = 0;
    const ONES: Self = u32::MAX;

    #[inline]
    fn and(self, other: Self) -> Self {
        self & other
    }

    #[inline]
    fn or(self, other: Self) -> Self {
        self | other
    }

    #[inline]
    fn count_ones(self) -> u32 {
        u32::count_ones(self)
    }

    #[inline]
    fn with_bit(self, bit: u32) -> Self {
        debug_assert!(bit < 32);
        self | (1u32 << bit)
    }

    #[inline]
    fn bit(self, bit: u32) -> bool {
        (self >> bit) & 1 == 1
    }
}

/// One-bit debug region: one transaction row per region, so region indices
/// equal row numbers. Only bit 0 is meaningful; the upper bits stay zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct B1(pub u8);

impl Word for B1 {
    const BITS: u32 = 1;
    const ZERO: Self = B1(0);
    const ONES: Self = B1(1);

    #[inline]
    fn and(self, other: Self) -> Self {
        B1(self.0 & other.0)
    }

    #[inline]
    fn or(self, other: Self) -> Self {
        B1(self.0 | other.0)
    }

    #[inline]
    fn count_ones(self) -> u32 {
        (self.0 & 1) as u32
    }

    #[inline]
    fn with_bit(self, bit: u32) -> Self {
        debug_assert!(bit == 0);
        B1(self.0 | 1)
    }

    #[inline]
    fn bit(self, _bit: u32) -> bool {
        self.0 & 1 == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn count_ones_zero_word() {
        assert_eq!(Word::count_ones(0u64), 0);
        assert_eq!(Word::count_ones(0u32), 0);
        assert_eq!(B1(0).count_ones(), 0);
    }

    #[test]
    fn count_ones_saturated_word() {
        assert_eq!(Word::count_ones(u64::ONES), 64);
        assert_eq!(Word::count_ones(u32::ONES), 32);
        assert_eq!(B1::ONES.count_ones(), 1);
    }

    #[test]
    fn count_ones_mixed_word() {
        // the two-column intersection pattern from the worked dataset
        assert_eq!(Word::count_ones(0b1100110u64), 4);
        assert_eq!(Word::count_ones(0b1100110u32), 4);
    }

    #[test]
    fn bit_set_and_get() {
        let w = 0u64.with_bit(3).with_bit(63);
        assert!(w.bit(3) && w.bit(63) && !w.bit(0));
        assert_eq!(Word::count_ones(w), 2);
    }
}

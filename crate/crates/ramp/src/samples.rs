//! Small bundled datasets used in tests, docs and fuzz corpora.

use crate::dataset::{parse_transactions_str, TransactionDatabase};

/// Seven store transactions over 17 items (letters a..q mapped to 0..16).
/// At an absolute support threshold of 2 the frequent items are
/// 0,1,2,3,4,8 (a,b,c,d,e,i) with supports 5,5,3,2,2,2.
pub const SAMPLE_STORE: &str = "\
0 1 2 5 6 11
0 1 7 8
1 4 9 14
2 4 12 8 16
0 1 3 13
0 1 2 3 10
0 15
";

pub fn sample_store_db() -> TransactionDatabase {
    parse_transactions_str(SAMPLE_STORE).expect("bundled sample parses")
}

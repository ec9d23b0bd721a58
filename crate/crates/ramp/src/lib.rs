//! Frequent-itemset mining over vertical bit-vectors.
//!
//! The miner enumerates the lexicographic set-enumeration tree depth-first,
//! counting candidate supports by ANDing per-item bit-vectors. Counting is
//! driven by projected bit regions (PBR): each node carries the sorted list
//! of word regions where its head vector is nonzero, and every counting
//! loop visits only those regions. Three output modes share the machinery:
//! all frequent itemsets, maximal only, and closed only. Maximal and closed
//! mining store discovered patterns as vertical bitmaps over pattern
//! indices and check subsumption through per-node local index lists, so a
//! candidate is compared only against stored patterns that contain its
//! head.
//!
//! A brute-force level-wise reference implementation lives in [`oracle`]
//! for differential testing.
//!
//! ```
//! use ramp::dataset::parse_transactions_str;
//! use ramp::index::build_root_index;
//! use ramp::miner::{mine_all_collect, MineOptions};
//!
//! let db = parse_transactions_str("1 2 3\n1 2\n2 3\n").unwrap();
//! let root = build_root_index::<u64>(&db, 2);
//! let (itemsets, _run) = mine_all_collect(&root, 2, &MineOptions::default());
//! assert!(itemsets.contains(&(vec![1, 2], 2)));
//! ```

pub mod bitvec;
pub mod dataset;
pub mod index;
pub mod miner;
pub mod oracle;
pub mod output;
pub mod rng;
pub mod samples;
pub mod synth;
pub mod words;

pub use dataset::{parse_transactions, TransactionDatabase};
pub use index::{build_root_index, RootIndex};
pub use miner::{MineOptions, MineRun, MineStats, Mode};
pub use words::{Word, B1};

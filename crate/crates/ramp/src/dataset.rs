//! Transaction dataset ingest.
//!
//! Input format: one transaction per line, ASCII decimal item ids separated
//! by whitespace. Blank lines are allowed and produce no transaction. Items
//! within a line are deduplicated and sorted, so ingest is canonical under
//! any permutation of a line.

use std::collections::BTreeMap;
use std::error::Error;
use std::fmt;
use std::io::BufRead;

/// Horizontal transaction list; each transaction is a strictly ascending,
/// duplicate-free list of item ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransactionDatabase {
    transactions: Vec<Vec<u32>>,
    item_universe: usize,
}

impl TransactionDatabase {
    /// Build from raw transactions, canonicalizing each (sort + dedup).
    /// Empty transactions are kept.
    pub fn new(mut transactions: Vec<Vec<u32>>) -> Self {
        let mut item_universe = 0usize;
        for t in &mut transactions {
            t.sort_unstable();
            t.dedup();
            if let Some(&max) = t.last() {
                item_universe = item_universe.max(max as usize + 1);
            }
        }
        TransactionDatabase {
            transactions,
            item_universe,
        }
    }

    pub fn transactions(&self) -> &[Vec<u32>] {
        &self.transactions
    }

    pub fn len(&self) -> usize {
        self.transactions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.transactions.is_empty()
    }

    /// Max item id + 1, or 0 for a database with no items.
    pub fn item_universe(&self) -> usize {
        self.item_universe
    }

    /// Number of transactions containing each item that occurs at all.
    pub fn item_supports(&self) -> BTreeMap<u32, u32> {
        let mut supports = BTreeMap::new();
        for t in &self.transactions {
            for &item in t {
                *supports.entry(item).or_insert(0u32) += 1;
            }
        }
        supports
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    /// Token is not a base-10 non-negative integer.
    Malformed,
    /// Token is an integer but does not fit an item id.
    Overflow,
}

/// Parse failure, carrying the 1-based line number and offending token.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub token: String,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ParseErrorKind::Malformed => {
                write!(f, "line {}: malformed item id {:?}", self.line, self.token)
            }
            ParseErrorKind::Overflow => {
                write!(
                    f,
                    "line {}: item id {:?} overflows u32",
                    self.line, self.token
                )
            }
        }
    }
}

impl Error for ParseError {}

#[derive(Debug)]
pub enum DatasetError {
    Parse(ParseError),
    Io(std::io::Error),
}

impl fmt::Display for DatasetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DatasetError::Parse(e) => e.fmt(f),
            DatasetError::Io(e) => write!(f, "read error: {e}"),
        }
    }
}

impl Error for DatasetError {}

impl From<ParseError> for DatasetError {
    fn from(e: ParseError) -> Self {
        DatasetError::Parse(e)
    }
}

impl From<std::io::Error> for DatasetError {
    fn from(e: std::io::Error) -> Self {
        DatasetError::Io(e)
    }
}

/// Parse a line-oriented transaction stream. One transaction per non-blank
/// line, in file order.
pub fn parse_transactions<R: BufRead>(reader: R) -> Result<TransactionDatabase, DatasetError> {
    let mut transactions = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let t = parse_line(&line, idx + 1)?;
        if let Some(t) = t {
            transactions.push(t);
        }
    }
    Ok(TransactionDatabase::new(transactions))
}

/// Convenience wrapper over [`parse_transactions`] for in-memory text.
pub fn parse_transactions_str(text: &str) -> Result<TransactionDatabase, ParseError> {
    match parse_transactions(text.as_bytes()) {
        Ok(db) => Ok(db),
        Err(DatasetError::Parse(e)) => Err(e),
        Err(DatasetError::Io(_)) => unreachable!("in-memory reads cannot fail"),
    }
}

fn parse_line(line: &str, line_no: usize) -> Result<Option<Vec<u32>>, ParseError> {
    let mut items = Vec::new();
    for token in line.split_ascii_whitespace() {
        let id = token.parse::<u32>().map_err(|_| {
            let kind = if !token.is_empty() && token.bytes().all(|b| b.is_ascii_digit()) {
                ParseErrorKind::Overflow
            } else {
                ParseErrorKind::Malformed
            };
            ParseError {
                line: line_no,
                token: token.to_string(),
                kind,
            }
        })?;
        items.push(id);
    }
    if items.is_empty() {
        return Ok(None);
    }
    items.sort_unstable();
    items.dedup();
    Ok(Some(items))
}

//! Result rendering and batched output.
//!
//! Itemset lines are `"i1 i2 ... ik (s)\n"`: ascending original ids,
//! single spaces, parenthesized support. On dense datasets most of a mine
//! is spent writing results, so lines are rendered with a direct
//! integer-to-ASCII routine into a byte buffer that is handed to the sink
//! only once enough itemsets have accumulated.

use std::io::{self, Write};

use crate::index::RootIndex;
use crate::miner::{mine_all, mine_closed, mine_max, ItemsetSink, MineOptions, MineRun, Mode};
use crate::words::Word;

/// Default flush threshold, in itemsets.
pub const DEFAULT_FLUSH_THRESHOLD: usize = 4096;

fn push_u32(out: &mut Vec<u8>, v: u32) {
    let mut digits = [0u8; 10];
    let mut v = v;
    let mut i = digits.len();
    loop {
        i -= 1;
        digits[i] = b'0' + (v % 10) as u8;
        v /= 10;
        if v == 0 {
            break;
        }
    }
    out.extend_from_slice(&digits[i..]);
}

/// Append one canonical itemset line. `items` must be nonempty ascending.
pub fn render_itemset_line(out: &mut Vec<u8>, items: &[u32], support: u32) {
    debug_assert!(!items.is_empty());
    let mut first = true;
    for &item in items {
        if !first {
            out.push(b' ');
        }
        push_u32(out, item);
        first = false;
    }
    out.extend_from_slice(b" (");
    push_u32(out, support);
    out.extend_from_slice(b")\n");
}

/// Order itemsets lexicographically by their numeric item sequence.
pub fn sort_itemsets(results: &mut [(Vec<u32>, u32)]) {
    results.sort_by(|a, b| a.0.cmp(&b.0));
}

/// Render a result list into one byte image.
pub fn render_lines(results: &[(Vec<u32>, u32)]) -> Vec<u8> {
    let mut out = Vec::new();
    for (items, support) in results {
        render_itemset_line(&mut out, items, *support);
    }
    out
}

/// Itemset sink that batches rendered lines and writes them out whenever
/// `threshold` itemsets have accumulated since the last write, plus once at
/// the end. The byte stream is identical to unbuffered writing.
pub struct ItemsetWriter<S: Write> {
    sink: S,
    buf: Vec<u8>,
    pending: usize,
    threshold: usize,
    emitted: u64,
}

impl<S: Write> ItemsetWriter<S> {
    pub fn new(sink: S, threshold: usize) -> Self {
        ItemsetWriter {
            sink,
            buf: Vec::new(),
            pending: 0,
            threshold: threshold.max(1),
            emitted: 0,
        }
    }

    pub fn emitted(&self) -> u64 {
        self.emitted
    }

    fn flush_buf(&mut self) -> io::Result<()> {
        if !self.buf.is_empty() {
            self.sink.write_all(&self.buf)?;
            self.buf.clear();
        }
        self.pending = 0;
        Ok(())
    }

    /// Write any pending lines and flush the sink.
    pub fn finish(&mut self) -> io::Result<()> {
        self.flush_buf()?;
        self.sink.flush()
    }
}

impl<S: Write> ItemsetSink for ItemsetWriter<S> {
    fn emit(&mut self, items: &[u32], support: u32) -> io::Result<()> {
        render_itemset_line(&mut self.buf, items, support);
        self.pending += 1;
        self.emitted += 1;
        if self.pending >= self.threshold {
            self.flush_buf()?;
        }
        Ok(())
    }
}

/// Run a mine and return its canonical byte image, optionally sorted.
///
/// This is the single rendering path the CLI and the differential tests
/// share, so "byte-identical output" means exactly that.
pub fn mine_to_bytes<W: Word>(
    root: &RootIndex<W>,
    min_sup: u32,
    mode: Mode,
    opts: &MineOptions,
    sorted: bool,
) -> (Vec<u8>, MineRun) {
    let (mut results, run) = match mode {
        Mode::All => {
            let mut out = Vec::new();
            let run = mine_all(root, min_sup, opts, &mut |items: &[u32], support| {
                out.push((items.to_vec(), support));
                Ok(())
            })
            .expect("vector sink cannot fail");
            (out, run)
        }
        Mode::Max => mine_max(root, min_sup, opts),
        Mode::Closed => mine_closed(root, min_sup, opts),
    };
    if sorted {
        sort_itemsets(&mut results);
    }
    (render_lines(&results), run)
}

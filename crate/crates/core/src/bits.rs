//! Dense adjacency bit matrix with word-parallel row operations.
//!
//! Rows are packed into `u64` words; neighbor-set intersections reduce to
//! AND + popcount over `⌈n/64⌉` words, which is what makes the census and
//! induced-path counters fast on graphs of a few thousand vertices.

const WORD_BITS: usize = 64;

#[derive(Clone, Debug)]
pub struct BitMatrix {
    n: usize,
    words_per_row: usize,
    words: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let words_per_row = n.div_ceil(WORD_BITS);
        BitMatrix {
            n,
            words_per_row,
            words: vec![0; n * words_per_row],
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize) {
        debug_assert!(row < self.n && col < self.n);
        self.words[row * self.words_per_row + col / WORD_BITS] |= 1u64 << (col % WORD_BITS);
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> bool {
        debug_assert!(row < self.n && col < self.n);
        self.words[row * self.words_per_row + col / WORD_BITS] & (1u64 << (col % WORD_BITS)) != 0
    }

    #[inline]
    pub fn row(&self, row: usize) -> &[u64] {
        let start = row * self.words_per_row;
        &self.words[start..start + self.words_per_row]
    }
}

/// |a ∩ b|
#[inline]
pub fn and_count(a: &[u64], b: &[u64]) -> u64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x & y).count_ones() as u64)
        .sum()
}

/// |a ∩ b ∩ {0..limit}| — intersection restricted to indices below `limit`.
#[inline]
pub fn and_count_below(a: &[u64], b: &[u64], limit: usize) -> u64 {
    let full = (limit / WORD_BITS).min(a.len());
    let mut total = 0u64;
    for i in 0..full {
        total += (a[i] & b[i]).count_ones() as u64;
    }
    let rem = limit % WORD_BITS;
    if rem != 0 && full < a.len() {
        let mask = (1u64 << rem) - 1;
        total += (a[full] & b[full] & mask).count_ones() as u64;
    }
    total
}

/// |a ∖ (b ∪ c ∪ d)|
#[inline]
pub fn andnot3_count(a: &[u64], b: &[u64], c: &[u64], d: &[u64]) -> u64 {
    let mut total = 0u64;
    for i in 0..a.len() {
        total += (a[i] & !b[i] & !c[i] & !d[i]).count_ones() as u64;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_roundtrip() {
        let mut m = BitMatrix::new(130);
        m.set(0, 0);
        m.set(5, 64);
        m.set(129, 129);
        assert!(m.get(0, 0));
        assert!(m.get(5, 64));
        assert!(m.get(129, 129));
        assert!(!m.get(0, 1));
        assert!(!m.get(64, 5));
    }

    #[test]
    fn masked_intersection() {
        let mut a = BitMatrix::new(100);
        let mut b = BitMatrix::new(100);
        for i in 0..100 {
            a.set(0, i);
            if i % 2 == 0 {
                b.set(0, i);
            }
        }
        assert_eq!(and_count(a.row(0), b.row(0)), 50);
        assert_eq!(and_count_below(a.row(0), b.row(0), 10), 5);
        assert_eq!(and_count_below(a.row(0), b.row(0), 65), 33);
        assert_eq!(and_count_below(a.row(0), b.row(0), 0), 0);
    }
}

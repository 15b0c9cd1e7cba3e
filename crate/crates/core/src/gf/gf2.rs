//! Bit-packed GF(2) matrices. Rows are stored as runs of `u64` words and
//! elimination is word-wise XOR.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64).max(1);
        BitMatrix {
            rows,
            cols,
            words,
            data: vec![0; rows * words],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, bit: bool) {
        let w = &mut self.data[r * self.words + c / 64];
        if bit {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.words {
            self.data.swap(a * self.words + w, b * self.words + w);
        }
    }

    /// `row[dst] ^= row[src]`
    #[inline]
    fn xor_row(&mut self, dst: usize, src: usize) {
        let (w, d, s) = (self.words, dst * self.words, src * self.words);
        for i in 0..w {
            let v = self.data[s + i];
            self.data[d + i] ^= v;
        }
    }

    /// Reduces in place to reduced row-echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c)) else {
                continue;
            };
            self.swap_rows(r, pr);
            for i in 0..self.rows {
                if i != r && self.get(i, c) {
                    self.xor_row(i, r);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wide_rows_span_words() {
        let mut m = BitMatrix::zeros(3, 130);
        m.set(0, 129, true);
        m.set(0, 3, true);
        m.set(1, 3, true);
        m.set(2, 70, true);
        m.set(2, 129, true);
        let piv = m.rref();
        assert_eq!(piv, vec![3, 70, 129]);
        assert!(m.get(0, 3) && !m.get(0, 129));
        assert!(m.get(1, 70) && !m.get(1, 129));
        assert!(m.get(2, 129));
    }
}

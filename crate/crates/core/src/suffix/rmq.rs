//! Range-minimum queries in O(1) with O(n) words.
//!
//! Positions are grouped in blocks of 64. Each position keeps a bitmask of
//! the increasing-minimum stack of its block prefix, so an in-block query
//! is a mask and a trailing-zero count. Block minima go into a sparse
//! table.

const BLOCK: usize = 64;

#[derive(Debug, Clone)]
pub struct Rmq {
    values: Vec<u32>,
    masks: Vec<u64>,
    // table[k][b] = argmin over blocks b .. b + 2^k
    table: Vec<Vec<u32>>,
}

impl Rmq {
    pub fn new(values: Vec<u32>) -> Self {
        let n = values.len();
        let mut masks = vec![0u64; n];
        for bs in (0..n).step_by(BLOCK) {
            let mut m = 0u64;
            for i in bs..(bs + BLOCK).min(n) {
                while m != 0 {
                    let top = 63 - m.leading_zeros() as usize;
                    if values[bs + top] >= values[i] {
                        m ^= 1 << top;
                    } else {
                        break;
                    }
                }
                m |= 1 << (i - bs);
                masks[i] = m;
            }
        }
        let mut rmq = Rmq {
            values,
            masks,
            table: Vec::new(),
        };
        let blocks = n.div_ceil(BLOCK);
        let base: Vec<u32> = (0..blocks)
            .map(|b| rmq.in_block(b * BLOCK, ((b + 1) * BLOCK).min(n) - 1) as u32)
            .collect();
        let mut table = vec![base];
        let mut width = 1;
        while 2 * width <= blocks {
            let prev = table.last().unwrap();
            let level: Vec<u32> = (0..=blocks - 2 * width)
                .map(|b| rmq.better(prev[b] as usize, prev[b + width] as usize) as u32)
                .collect();
            table.push(level);
            width *= 2;
        }
        rmq.table = table;
        rmq
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    fn better(&self, a: usize, b: usize) -> usize {
        if self.values[b] < self.values[a] {
            b
        } else {
            a
        }
    }

    #[inline]
    fn in_block(&self, l: usize, r: usize) -> usize {
        let bs = l - l % BLOCK;
        let m = self.masks[r] & (!0u64 << (l - bs));
        bs + m.trailing_zeros() as usize
    }

    /// Position of a minimum of `values[l..=r]`.
    pub fn argmin(&self, l: usize, r: usize) -> usize {
        debug_assert!(l <= r && r < self.values.len());
        let (bl, br) = (l / BLOCK, r / BLOCK);
        if bl == br {
            return self.in_block(l, r);
        }
        let mut best = self.in_block(l, (bl + 1) * BLOCK - 1);
        best = self.better(best, self.in_block(br * BLOCK, r));
        if bl + 1 < br {
            let (lo, hi) = (bl + 1, br - 1);
            let k = (hi - lo + 1).ilog2() as usize;
            let level = &self.table[k];
            best = self.better(best, level[lo] as usize);
            best = self.better(best, level[hi + 1 - (1 << k)] as usize);
        }
        best
    }

    pub fn min(&self, l: usize, r: usize) -> u32 {
        self.values[self.argmin(l, r)]
    }
}

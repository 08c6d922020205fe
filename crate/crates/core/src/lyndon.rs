//! Longest Lyndon word starting at every position of `ŵ = w$`, for both
//! orders, by a right-to-left stack scan driven by suffix ranks.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::suffix::SuffixContext;
use crate::text::Order;

/// Observer of the stack scan. `merged` fires on every pop, `pushed` after
/// the interval for position `start` is pushed.
pub(crate) trait ScanVisitor {
    fn merged(&mut self, _start: usize, _left_end: usize, _right: (usize, usize)) {}
    fn pushed(&mut self, _start: usize, _end: usize, _stack: &[(u32, u32)]) {}
}

impl ScanVisitor for () {}

/// Scans positions `n` down to `lowest`, seeding the stack with the
/// sentinel interval `[n+1..n+1]`. `less(i, k)` must report whether the
/// suffix at `i` is smaller than the suffix at `k`, which for a Lyndon word
/// starting at `i` and the stack top's factor starting at `k` decides
/// whether the two concatenate into a Lyndon word. Returns the pop count.
pub(crate) fn stack_scan<F, V>(n: usize, lowest: usize, less: F, visitor: &mut V) -> usize
where
    F: Fn(usize, usize) -> bool,
    V: ScanVisitor,
{
    let mut stack: Vec<(u32, u32)> = Vec::with_capacity(64);
    stack.push((n as u32 + 1, n as u32 + 1));
    let mut pops = 0;
    for i in (lowest..=n).rev() {
        let mut j = i;
        while let Some(&(top_start, top_end)) = stack.last() {
            if !less(i, top_start as usize) {
                break;
            }
            visitor.merged(i, j, (top_start as usize, top_end as usize));
            j = top_end as usize;
            stack.pop();
            pops += 1;
        }
        stack.push((i as u32, j as u32));
        visitor.pushed(i, j, &stack);
    }
    pops
}

/// End positions of the longest Lyndon words under one order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LongestLyndon {
    order: Order,
    ends: Vec<u32>,
    pops: usize,
}

impl LongestLyndon {
    pub fn order(&self) -> Order {
        self.order
    }

    /// End of the longest Lyndon word of `ŵ` starting at `i` (`1 ≤ i ≤ n`);
    /// may be `n + 1`.
    #[inline]
    pub fn end(&self, i: usize) -> usize {
        self.ends[i - 1] as usize
    }

    /// All ends, index `i - 1` for position `i`.
    pub fn ends(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.ends.iter().map(|&e| e as usize)
    }

    /// Number of stack pops the scan performed.
    pub fn pops(&self) -> usize {
        self.pops
    }
}

struct RecordEnds<'a>(&'a mut [u32]);

impl ScanVisitor for RecordEnds<'_> {
    fn pushed(&mut self, start: usize, end: usize, _stack: &[(u32, u32)]) {
        self.0[start - 1] = end as u32;
    }
}

/// Longest Lyndon word at every position under `order`.
pub fn longest_lyndon(ctx: &SuffixContext, order: Order) -> LongestLyndon {
    let n = ctx.len();
    let mut ends = vec![0u32; n];
    let pops = stack_scan(
        n,
        1,
        |i, k| ctx.rank(order, i) < ctx.rank(order, k),
        &mut RecordEnds(&mut ends),
    );
    LongestLyndon { order, ends, pops }
}

/// Longest Lyndon words for both orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LyndonArray {
    orders: [LongestLyndon; 2],
}

impl LyndonArray {
    pub fn compute(ctx: &SuffixContext) -> Self {
        let (asc, desc) = rayon::join(
            || longest_lyndon(ctx, Order::Ascending),
            || longest_lyndon(ctx, Order::Descending),
        );
        LyndonArray {
            orders: [asc, desc],
        }
    }

    pub fn get(&self, order: Order) -> &LongestLyndon {
        &self.orders[order.index()]
    }

    #[inline]
    pub fn end(&self, order: Order, i: usize) -> usize {
        self.orders[order.index()].end(i)
    }

    pub fn len(&self) -> usize {
        self.orders[0].ends.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Whether `s` is strictly smaller than each of its proper suffixes.
pub fn is_lyndon(s: &[u32], order: Order) -> Result<bool> {
    if s.is_empty() {
        return Err(Error::EmptyInput);
    }
    let (mut i, mut j) = (0, 1);
    while j < s.len() {
        match order.cmp_symbols(s[i], s[j]) {
            Ordering::Less => i = 0,
            Ordering::Equal => i += 1,
            Ordering::Greater => return Ok(false),
        }
        j += 1;
    }
    Ok(i == 0)
}

/// Lyndon factorization into non-increasing Lyndon factors.
pub fn duval_factorization(s: &[u32], order: Order) -> Vec<&[u32]> {
    let n = s.len();
    let mut factors = Vec::new();
    let mut k = 0;
    while k < n {
        let (mut i, mut j) = (k, k + 1);
        while j < n {
            match order.cmp_symbols(s[i], s[j]) {
                Ordering::Less => i = k,
                Ordering::Equal => i += 1,
                Ordering::Greater => break,
            }
            j += 1;
        }
        while k <= i {
            factors.push(&s[k..k + j - i]);
            k += j - i;
        }
    }
    factors
}

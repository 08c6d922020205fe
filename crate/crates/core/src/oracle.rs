//! Brute-force reference implementations. Everything here works on plain
//! symbol sequences with direct comparisons and shares no code with the
//! suffix-array based paths.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::interval::Run;
use crate::text::{Order, Text};

/// Longest input the oracles accept.
pub const ORACLE_LIMIT: usize = 2000;

fn guard(len: usize) -> Result<()> {
    if len > ORACLE_LIMIT {
        return Err(Error::OracleLimit {
            len,
            limit: ORACLE_LIMIT,
        });
    }
    Ok(())
}

/// A symbol of `#w$`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sym {
    Hash,
    Char(u32),
    Dollar,
}

pub fn cmp_sym(a: Sym, b: Sym, order: Order) -> Ordering {
    use Sym::*;
    match (a, b) {
        (Hash, Hash) | (Dollar, Dollar) => Ordering::Equal,
        (Hash, _) => Ordering::Less,
        (_, Hash) => Ordering::Greater,
        (Char(x), Char(y)) => order.cmp_symbols(x, y),
        (Dollar, Char(_)) => match order {
            Order::Ascending => Ordering::Less,
            Order::Descending => Ordering::Greater,
        },
        (Char(_), Dollar) => match order {
            Order::Ascending => Ordering::Greater,
            Order::Descending => Ordering::Less,
        },
    }
}

pub fn cmp_seq(a: &[Sym], b: &[Sym], order: Order) -> Ordering {
    for (&x, &y) in a.iter().zip(b) {
        match cmp_sym(x, y, order) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    a.len().cmp(&b.len())
}

/// `ŵ = w$`.
pub fn hat(text: &Text) -> Vec<Sym> {
    let mut s: Vec<Sym> = text.symbols().iter().map(|&c| Sym::Char(c)).collect();
    s.push(Sym::Dollar);
    s
}

/// `#w$`.
pub fn with_sentinels(text: &Text) -> Vec<Sym> {
    let mut s = vec![Sym::Hash];
    s.extend(hat(text));
    s
}

/// Smallest `p ≥ 1` with `s[k] = s[k + p]` for all valid `k`.
pub fn naive_smallest_period<T: PartialEq>(s: &[T]) -> Result<usize> {
    if s.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(periods_up_to(s, s.len()).unwrap_or(s.len()))
}

fn periods_up_to<T: PartialEq>(s: &[T], limit: usize) -> Option<usize> {
    (1..=limit.min(s.len())).find(|&p| (0..s.len() - p).all(|k| s[k] == s[k + p]))
}

/// Every run, by testing every interval; sorted by `(start, end)`.
pub fn naive_runs(text: &Text) -> Result<Vec<Run>> {
    guard(text.len())?;
    let w = text.symbols();
    let n = w.len();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let s = &w[i - 1..j];
            // only periods with 2p ≤ len can make a run
            let Some(p) = periods_up_to(s, s.len() / 2) else {
                continue;
            };
            let left_max = i == 1 || w[i - 2] != w[i + p - 2];
            let right_max = j == n || w[j] != w[j - p];
            if left_max && right_max {
                out.push(Run::new(i, j, p));
            }
        }
    }
    Ok(out)
}

/// Direct check against every proper suffix.
pub fn naive_is_lyndon(s: &[Sym], order: Order) -> bool {
    !s.is_empty() && (1..s.len()).all(|k| cmp_seq(s, &s[k..], order) == Ordering::Less)
}

/// Largest `j ≤ n + 1` with `ŵ[i..j]` Lyndon.
pub fn naive_longest_lyndon(text: &Text, order: Order, i: usize) -> Result<usize> {
    guard(text.len())?;
    if i == 0 || i > text.len() {
        return Err(Error::PositionOutOfRange {
            position: i,
            max: text.len(),
        });
    }
    let s = hat(text);
    Ok((i..=text.len() + 1)
        .rev()
        .find(|&j| naive_is_lyndon(&s[i - 1..j], order))
        .expect("a single symbol is Lyndon"))
}

/// Greedy factorization taking the longest Lyndon prefix each time.
pub fn naive_lyndon_factorization(s: &[Sym], order: Order) -> Vec<usize> {
    let mut lengths = Vec::new();
    let mut k = 0;
    while k < s.len() {
        let len = (1..=s.len() - k)
            .rev()
            .find(|&l| naive_is_lyndon(&s[k..k + l], order))
            .unwrap();
        lengths.push(len);
        k += len;
    }
    lengths
}

/// Lyndon tree by recursive standard factorization. Intervals are offsets
/// into the input, shifted by `base`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaiveTree {
    pub start: usize,
    pub end: usize,
    pub children: Option<Box<(NaiveTree, NaiveTree)>>,
}

impl NaiveTree {
    /// Internal nodes as `(start, left_end, end)`, sorted.
    pub fn splits(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(node) = stack.pop() {
            if let Some(children) = &node.children {
                out.push((node.start, children.0.end, node.end));
                stack.push(&children.0);
                stack.push(&children.1);
            }
        }
        out.sort_unstable();
        out
    }

    pub fn node_count(&self) -> usize {
        let mut count = 0;
        let mut stack = vec![self];
        while let Some(node) = stack.pop() {
            count += 1;
            if let Some(children) = &node.children {
                stack.push(&children.0);
                stack.push(&children.1);
            }
        }
        count
    }
}

pub fn naive_lyndon_tree(s: &[Sym], order: Order, base: usize) -> Result<NaiveTree> {
    guard(s.len())?;
    if !naive_is_lyndon(s, order) {
        return Err(Error::NotLyndon);
    }
    Ok(build_naive(s, order, base))
}

fn build_naive(s: &[Sym], order: Order, base: usize) -> NaiveTree {
    let end = base + s.len() - 1;
    if s.len() == 1 {
        return NaiveTree {
            start: base,
            end,
            children: None,
        };
    }
    let split = (1..s.len())
        .min_by(|&a, &b| cmp_seq(&s[a..], &s[b..], order))
        .unwrap();
    let left = build_naive(&s[..split], order, base);
    let right = build_naive(&s[split..], order, base + split);
    NaiveTree {
        start: base,
        end,
        children: Some(Box::new((left, right))),
    }
}

/// Lyndon tree of `#w$` with positions `0..=n+1`.
pub fn naive_sentinel_tree(text: &Text, order: Order) -> Result<NaiveTree> {
    naive_lyndon_tree(&with_sentinels(text), order, 0)
}

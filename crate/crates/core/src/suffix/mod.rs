//! Suffix arrays of `ŵ = w$` under both orders, the LCP array with a
//! range-minimum index, and the same structures for the reversed text.
//! Together they answer longest-common-extension queries in O(1).

pub mod doubling;
mod lcp;
mod rmq;
pub mod sais;

pub use lcp::lcp_array;
pub use rmq::Rmq;

use crate::error::{Error, Result};
use crate::text::{map_symbols, Order, Text};

/// Which suffix sorter to run. Induced sorting is linear; doubling exists
/// for cross-checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Sorter {
    #[default]
    InducedSorting,
    Doubling,
}

#[derive(Debug, Clone)]
struct Structures {
    sa: Vec<u32>,
    isa: Vec<u32>,
}

impl Structures {
    fn from_sa(sa: Vec<u32>) -> Self {
        let mut isa = vec![0u32; sa.len()];
        for (k, &p) in sa.iter().enumerate() {
            isa[p as usize] = k as u32;
        }
        Structures { sa, isa }
    }
}

/// Extensions shorter than this are found by direct comparison before
/// falling back to the range-minimum query.
const SCAN: usize = 16;

/// Suffix structures of a text. Positions passed in and out are 1-based.
#[derive(Debug, Clone)]
pub struct SuffixContext {
    n: usize,
    symbols: Vec<u32>,
    orders: [Structures; 2],
    lcp: Rmq,
    rev: Structures,
    rev_lcp: Rmq,
}

/// Sorts suffixes of `codes`, which must end with a unique 0.
fn sort(codes: &[u32], alphabet: usize, sorter: Sorter) -> Vec<u32> {
    match sorter {
        Sorter::InducedSorting => sais::suffix_array(codes, alphabet),
        Sorter::Doubling => doubling::suffix_array(codes),
    }
}

/// Ranks symbols densely when the declared alphabet is much larger than
/// the text, so bucket arrays stay O(n).
fn compact(text: &Text) -> Text {
    if (text.sigma() as usize) <= 2 * (text.len() + 2) {
        return text.clone();
    }
    let mut distinct: Vec<u32> = text.symbols().to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let symbols = text
        .symbols()
        .iter()
        .map(|s| distinct.binary_search(s).unwrap() as u32)
        .collect();
    Text::new(symbols, distinct.len() as u32).expect("ranks are below the distinct count")
}

impl SuffixContext {
    pub fn build(text: &Text) -> Result<Self> {
        Self::build_with(text, Sorter::default())
    }

    pub fn build_with(text: &Text, sorter: Sorter) -> Result<Self> {
        if text.is_empty() {
            return Err(Error::EmptyInput);
        }
        let text = compact(text);
        let n = text.len();
        let sigma = text.sigma() as usize;

        // Ascending: $ is already the unique smallest code 0.
        let asc = map_symbols(&text, Order::Ascending, false);
        let sa0 = sort(&asc, sigma + 1, sorter);
        let fwd = Structures::from_sa(sa0);
        let lcp = Rmq::new(lcp_array(&asc, &fwd.sa, &fwd.isa));
        drop(asc);

        // Descending: $ is the largest code; a virtual 0 below everything is
        // appended and its suffix dropped. $ is unique, so no suffix of ŵ is
        // a prefix of another and the extra symbol changes no comparison.
        let mut desc = map_symbols(&text, Order::Descending, false);
        desc.push(0);
        let mut sa1 = sort(&desc, sigma + 2, sorter);
        drop(desc);
        debug_assert_eq!(sa1[0] as usize, n + 1);
        sa1.remove(0);
        let bwd = Structures::from_sa(sa1);

        let mut rev: Vec<u32> = text.symbols().iter().rev().map(|&s| s + 1).collect();
        rev.push(0);
        let rev_structs = Structures::from_sa(sort(&rev, sigma + 1, sorter));
        let rev_lcp = Rmq::new(lcp_array(&rev, &rev_structs.sa, &rev_structs.isa));

        Ok(SuffixContext {
            n,
            symbols: text.symbols().to_vec(),
            orders: [fwd, bwd],
            lcp,
            rev: rev_structs,
            rev_lcp,
        })
    }

    /// Length of the underlying text (without `$`).
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Suffix array of `ŵ` under `order`, as 1-based positions `1..=n+1`.
    pub fn suffix_array(&self, order: Order) -> Vec<usize> {
        self.orders[order.index()]
            .sa
            .iter()
            .map(|&p| p as usize + 1)
            .collect()
    }

    /// Inverse suffix array of `ŵ` under `order`, indexed by 1-based
    /// position, with 1-based ranks.
    pub fn inverse_suffix_array(&self, order: Order) -> Vec<usize> {
        self.orders[order.index()]
            .isa
            .iter()
            .map(|&r| r as usize + 1)
            .collect()
    }

    /// 0-based rank of the suffix of `ŵ` starting at 1-based position `i`
    /// (`1 ≤ i ≤ n + 1`).
    #[inline]
    pub fn rank(&self, order: Order, i: usize) -> u32 {
        self.orders[order.index()].isa[i - 1]
    }

    /// LCP array of `ŵ` in ascending suffix order.
    pub fn lcp_array(&self) -> &[u32] {
        self.lcp.values()
    }

    fn check(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n {
            return Err(Error::PositionOutOfRange {
                position: i,
                max: self.n,
            });
        }
        Ok(())
    }

    /// Longest common prefix of `w[i..n]` and `w[j..n]`.
    pub fn lce(&self, i: usize, j: usize) -> Result<usize> {
        self.check(i)?;
        self.check(j)?;
        Ok(self.lce_unchecked(i, j))
    }

    /// As [`lce`](Self::lce) but also accepts `n + 1`, whose suffix is `$`.
    #[inline]
    pub(crate) fn lce_unchecked(&self, i: usize, j: usize) -> usize {
        if i == j {
            return self.n + 1 - i;
        }
        let w = &self.symbols;
        let limit = SCAN.min(self.n + 1 - i.max(j));
        let mut k = 0;
        while k < limit && w[i - 1 + k] == w[j - 1 + k] {
            k += 1;
        }
        if k < SCAN {
            return k;
        }
        let isa = &self.orders[0].isa;
        let (a, b) = (isa[i - 1] as usize, isa[j - 1] as usize);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.lcp.min(lo + 1, hi) as usize
    }

    /// Longest common suffix of `w[1..i]` and `w[1..j]`.
    pub fn lcs(&self, i: usize, j: usize) -> Result<usize> {
        self.check(i)?;
        self.check(j)?;
        Ok(self.lcs_unchecked(i, j))
    }

    /// As [`lcs`](Self::lcs) but accepts `0` (the empty prefix).
    #[inline]
    pub(crate) fn lcs_unchecked(&self, i: usize, j: usize) -> usize {
        if i == 0 || j == 0 {
            return 0;
        }
        if i == j {
            return i;
        }
        let w = &self.symbols;
        let limit = SCAN.min(i.min(j));
        let mut k = 0;
        while k < limit && w[i - 1 - k] == w[j - 1 - k] {
            k += 1;
        }
        if k < SCAN {
            return k;
        }
        // w[1..i] reversed starts at 0-based n - i of the reversed text.
        let (a, b) = (
            self.rev.isa[self.n - i] as usize,
            self.rev.isa[self.n - j] as usize,
        );
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.rev_lcp.min(lo + 1, hi) as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ctx(s: &str) -> SuffixContext {
        SuffixContext::build(&Text::from_bytes(s.as_bytes())).unwrap()
    }

    fn scan_lce(w: &[u8], i: usize, j: usize) -> usize {
        w[i - 1..]
            .iter()
            .zip(&w[j - 1..])
            .take_while(|(a, b)| a == b)
            .count()
    }

    fn scan_lcs(w: &[u8], i: usize, j: usize) -> usize {
        w[..i]
            .iter()
            .rev()
            .zip(w[..j].iter().rev())
            .take_while(|(a, b)| a == b)
            .count()
    }

    #[test]
    fn suffix_arrays_of_aab() {
        let c = ctx("aab");
        assert_eq!(c.suffix_array(Order::Ascending), vec![4, 1, 2, 3]);
        assert_eq!(c.suffix_array(Order::Descending), vec![3, 2, 1, 4]);
        assert_eq!(ctx("aaa").suffix_array(Order::Ascending), vec![4, 3, 2, 1]);
    }

    #[test]
    fn isa_inverts_sa() {
        let c = ctx("mississippi");
        for order in Order::BOTH {
            let sa = c.suffix_array(order);
            let isa = c.inverse_suffix_array(order);
            for (k, &p) in sa.iter().enumerate() {
                assert_eq!(isa[p - 1], k + 1);
            }
        }
    }

    #[test]
    fn lce_examples() {
        assert_eq!(ctx("aabaa").lce(1, 4), Ok(2));
        assert_eq!(ctx("aababaababb").lce(1, 6), Ok(5));
        assert_eq!(ctx("aababaababb").lce(3, 3), Ok(9));
    }

    #[test]
    fn lcs_examples() {
        assert_eq!(ctx("aababaababb").lcs(7, 9), Ok(1));
        assert_eq!(ctx("aababaababb").lcs(5, 5), Ok(5));
        assert_eq!(ctx("ab").lcs(1, 2), Ok(0));
    }

    #[test]
    fn errors() {
        assert!(matches!(
            SuffixContext::build(&Text::from_bytes(b"")),
            Err(Error::EmptyInput)
        ));
        let c = ctx("ab");
        assert!(c.lce(0, 1).is_err());
        assert!(c.lce(1, 3).is_err());
        assert!(c.lcs(3, 1).is_err());
    }

    #[test]
    fn huge_declared_alphabet_is_compacted() {
        let text = Text::new(vec![7, 1_000_000, 7, 1_000_000], u32::MAX).unwrap();
        let c = SuffixContext::build(&text).unwrap();
        assert_eq!(c.lce(1, 3), Ok(2));
        assert_eq!(c.suffix_array(Order::Ascending), vec![5, 3, 1, 4, 2]);
    }

    fn byte_strings() -> impl Strategy<Value = Vec<u8>> {
        prop_oneof![
            proptest::collection::vec(b'a'..=b'b', 1..256),
            proptest::collection::vec(b'a'..=b'd', 1..256),
            proptest::collection::vec(any::<u8>(), 1..128),
        ]
    }

    proptest! {
        #[test]
        fn lce_and_lcs_match_scans(w in byte_strings()) {
            let c = SuffixContext::build(&Text::from_bytes(&w)).unwrap();
            let n = w.len();
            for i in 1..=n {
                for j in 1..=n {
                    prop_assert_eq!(c.lce(i, j).unwrap(), scan_lce(&w, i, j));
                    prop_assert_eq!(c.lcs(i, j).unwrap(), scan_lcs(&w, i, j));
                }
            }
        }

        #[test]
        fn sorted_suffixes_and_lcp(w in byte_strings()) {
            let text = Text::from_bytes(&w);
            let c = SuffixContext::build(&text).unwrap();
            for order in Order::BOTH {
                let enc = map_symbols(&text, order, false);
                let sa = c.suffix_array(order);
                for k in 1..sa.len() {
                    prop_assert!(enc[sa[k - 1] - 1..] < enc[sa[k] - 1..]);
                }
            }
            let enc = map_symbols(&text, Order::Ascending, false);
            let sa = c.suffix_array(Order::Ascending);
            let lcp = c.lcp_array();
            for k in 1..sa.len() {
                let (a, b) = (&enc[sa[k - 1] - 1..], &enc[sa[k] - 1..]);
                let h = lcp[k] as usize;
                prop_assert_eq!(&a[..h], &b[..h]);
                prop_assert!(a.get(h) != b.get(h));
            }
        }

        #[test]
        fn sorters_agree(w in byte_strings()) {
            let text = Text::from_bytes(&w);
            let a = SuffixContext::build_with(&text, Sorter::InducedSorting).unwrap();
            let b = SuffixContext::build_with(&text, Sorter::Doubling).unwrap();
            for order in Order::BOTH {
                prop_assert_eq!(a.suffix_array(order), b.suffix_array(order));
            }
        }
    }
}

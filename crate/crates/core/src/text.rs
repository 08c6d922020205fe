use std::cmp::Ordering;

use crate::error::{Error, Result};

/// One of the two opposite total orders on the alphabet.
///
/// `Ascending` compares symbol values as integers and puts the end sentinel
/// `$` below every symbol. `Descending` is its reverse, so `$` is above every
/// symbol. The start sentinel `#` is the minimum under both.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Order {
    Ascending,
    Descending,
}

impl Order {
    pub const BOTH: [Order; 2] = [Order::Ascending, Order::Descending];

    pub fn index(self) -> usize {
        match self {
            Order::Ascending => 0,
            Order::Descending => 1,
        }
    }

    pub fn from_index(index: usize) -> Option<Order> {
        match index {
            0 => Some(Order::Ascending),
            1 => Some(Order::Descending),
            _ => None,
        }
    }

    pub fn complement(self) -> Order {
        match self {
            Order::Ascending => Order::Descending,
            Order::Descending => Order::Ascending,
        }
    }

    /// Compares two alphabet symbols.
    pub fn cmp_symbols(self, a: u32, b: u32) -> Ordering {
        match self {
            Order::Ascending => a.cmp(&b),
            Order::Descending => b.cmp(&a),
        }
    }
}

/// A string over the integer alphabet `[0, sigma)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Text {
    symbols: Vec<u32>,
    sigma: u32,
}

impl Text {
    pub fn new(symbols: Vec<u32>, sigma: u32) -> Result<Self> {
        if let Some((position, &symbol)) = symbols.iter().enumerate().find(|(_, &s)| s >= sigma) {
            return Err(Error::SymbolOutOfRange {
                position: position + 1,
                symbol,
                sigma,
            });
        }
        Ok(Text { symbols, sigma })
    }

    /// Builds a text from raw bytes, ranking the distinct bytes in ascending
    /// byte order so that `sigma` is the number of distinct bytes.
    pub fn from_bytes(bytes: &[u8]) -> Self {
        let mut present = [false; 256];
        for &b in bytes {
            present[b as usize] = true;
        }
        let mut rank = [0u32; 256];
        let mut sigma = 0u32;
        for (b, &p) in present.iter().enumerate() {
            if p {
                rank[b] = sigma;
                sigma += 1;
            }
        }
        Text {
            symbols: bytes.iter().map(|&b| rank[b as usize]).collect(),
            sigma,
        }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn sigma(&self) -> u32 {
        self.sigma
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    /// Symbol at 1-based position `i`.
    pub fn at(&self, i: usize) -> u32 {
        self.symbols[i - 1]
    }

    /// Number of distinct symbols that actually occur.
    pub fn distinct(&self) -> usize {
        let mut seen = vec![false; self.sigma as usize];
        let mut d = 0;
        for &s in &self.symbols {
            if !seen[s as usize] {
                seen[s as usize] = true;
                d += 1;
            }
        }
        d
    }

    /// Code of `ŵ[i]` (1-based, `i = n + 1` is `$`) under `order`, as laid
    /// out by [`map_symbols`] without the start sentinel.
    pub fn hat_code(&self, order: Order, i: usize) -> u32 {
        if i == self.len() + 1 {
            match order {
                Order::Ascending => 0,
                Order::Descending => self.sigma + 1,
            }
        } else {
            let s = self.at(i);
            match order {
                Order::Ascending => s + 1,
                Order::Descending => self.sigma - s,
            }
        }
    }

    /// Renders the text as a string when every symbol maps to a printable
    /// letter (`a` for symbol 0, and so on).
    pub fn to_letters(&self) -> Option<String> {
        if self.sigma > 26 {
            return None;
        }
        Some(
            self.symbols
                .iter()
                .map(|&s| char::from(b'a' + s as u8))
                .collect(),
        )
    }
}

/// Integer encoding of `ŵ = w$` (or `#w$` with `prepend_hash`) such that
/// integer comparison realizes `order`.
///
/// Ascending: `#` is 0, `$` is the smallest remaining code, symbols follow.
/// Descending: `#` is 0, symbols in reversed rank, `$` is `sigma + 1`.
pub fn map_symbols(text: &Text, order: Order, prepend_hash: bool) -> Vec<u32> {
    let n = text.len();
    let mut out = Vec::with_capacity(n + 1 + usize::from(prepend_hash));
    let shift = u32::from(prepend_hash);
    if prepend_hash {
        out.push(0);
    }
    match order {
        Order::Ascending => {
            out.extend(text.symbols().iter().map(|&s| s + 1 + shift));
            out.push(shift);
        }
        Order::Descending => {
            let sigma = text.sigma();
            out.extend(text.symbols().iter().map(|&s| sigma - s));
            out.push(sigma + 1);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Text {
        Text::from_bytes(s.as_bytes())
    }

    #[test]
    fn encodes_without_hash() {
        assert_eq!(
            map_symbols(&t("aab"), Order::Ascending, false),
            vec![1, 1, 2, 0]
        );
        assert_eq!(
            map_symbols(&t("aab"), Order::Descending, false),
            vec![2, 2, 1, 3]
        );
    }

    #[test]
    fn encodes_with_hash() {
        assert_eq!(
            map_symbols(&t("ab"), Order::Ascending, true),
            vec![0, 2, 3, 1]
        );
        assert_eq!(
            map_symbols(&t("ab"), Order::Descending, true),
            vec![0, 2, 1, 3]
        );
    }

    #[test]
    fn hat_code_agrees_with_encoding() {
        let text = t("abcab");
        for order in Order::BOTH {
            let enc = map_symbols(&text, order, false);
            for i in 1..=text.len() + 1 {
                assert_eq!(text.hat_code(order, i), enc[i - 1]);
            }
        }
    }

    #[test]
    fn orders_are_opposite() {
        for a in 0..5 {
            for b in 0..5 {
                assert_eq!(
                    Order::Ascending.cmp_symbols(a, b),
                    Order::Descending.cmp_symbols(a, b).reverse()
                );
            }
        }
        assert_eq!(Order::Ascending.complement(), Order::Descending);
    }

    #[test]
    fn encoding_is_monotone() {
        let text = Text::new(vec![3, 0, 2, 1, 3], 4).unwrap();
        for order in Order::BOTH {
            for hash in [false, true] {
                let enc = map_symbols(&text, order, hash);
                let off = usize::from(hash);
                for x in 0..text.len() {
                    for y in 0..text.len() {
                        let (a, b) = (text.symbols()[x], text.symbols()[y]);
                        assert_eq!(order.cmp_symbols(a, b), enc[x + off].cmp(&enc[y + off]));
                    }
                    // $ sits below every symbol ascending, above descending.
                    let dollar = enc[text.len() + off];
                    match order {
                        Order::Ascending => assert!(dollar < enc[x + off]),
                        Order::Descending => assert!(dollar > enc[x + off]),
                    }
                    if hash {
                        assert!(enc[0] < enc[x + 1] && enc[0] < dollar);
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_symbols_outside_alphabet() {
        assert_eq!(
            Text::new(vec![0, 2], 2),
            Err(Error::SymbolOutOfRange {
                position: 2,
                symbol: 2,
                sigma: 2
            })
        );
    }

    #[test]
    fn compacts_bytes() {
        let text = t("zaz");
        assert_eq!(text.symbols(), &[1, 0, 1]);
        assert_eq!(text.sigma(), 2);
        assert_eq!(text.distinct(), 2);
        assert!(t("").is_empty());
    }
}

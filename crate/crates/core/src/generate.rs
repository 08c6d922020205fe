//! Input generators for tests and benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::text::Text;

/// Prefix of length `n` of the Fibonacci word `abaababaabaab...`.
pub fn fibonacci(n: usize) -> Text {
    let mut a: Vec<u32> = vec![0];
    let mut b: Vec<u32> = vec![0, 1];
    while b.len() < n {
        let next = [b.as_slice(), a.as_slice()].concat();
        a = std::mem::replace(&mut b, next);
    }
    b.truncate(n);
    Text::new(b, 2).expect("binary symbols")
}

/// Prefix of length `n` of the Thue-Morse sequence.
pub fn thue_morse(n: usize) -> Text {
    let symbols = (0..n as u64).map(|k| k.count_ones() % 2).collect();
    Text::new(symbols, 2).expect("binary symbols")
}

/// `n` symbols drawn uniformly from `[0, sigma)`.
pub fn random(n: usize, sigma: u32, seed: u64) -> Text {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_with(&mut rng, n, sigma)
}

pub(crate) fn random_with<R: Rng>(rng: &mut R, n: usize, sigma: u32) -> Text {
    assert!(sigma >= 1, "alphabet must be non-empty");
    let symbols = (0..n).map(|_| rng.random_range(0..sigma)).collect();
    Text::new(symbols, sigma).expect("symbols below sigma")
}

pub fn unary(n: usize) -> Text {
    Text::new(vec![0; n], 1).expect("unary symbols")
}

//! Prefix-doubling suffix sorting, O(n log^2 n). Kept as an independent
//! construction path for cross-checking the induced-sorting one.

pub fn suffix_array(s: &[u32]) -> Vec<u32> {
    let n = s.len();
    let mut sa: Vec<u32> = (0..n as u32).collect();
    let mut rank: Vec<u64> = s.iter().map(|&c| u64::from(c)).collect();
    let mut next = vec![0u64; n];
    let mut k = 1;
    loop {
        let key = |i: u32| {
            let i = i as usize;
            let second = if i + k < n { rank[i + k] + 1 } else { 0 };
            (rank[i], second)
        };
        sa.sort_unstable_by_key(|&i| key(i));
        next[sa[0] as usize] = 0;
        for w in 1..n {
            let bump = u64::from(key(sa[w - 1]) != key(sa[w]));
            next[sa[w] as usize] = next[sa[w - 1] as usize] + bump;
        }
        std::mem::swap(&mut rank, &mut next);
        if n == 0 || rank[sa[n - 1] as usize] as usize == n - 1 || k >= n {
            break;
        }
        k *= 2;
    }
    sa
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn agrees_with_induced_sorting() {
        let s = [2u32, 2, 3, 2, 3, 2, 2, 3, 2, 3, 3, 0];
        assert_eq!(suffix_array(&s), super::super::sais::suffix_array(&s, 4));
    }
}

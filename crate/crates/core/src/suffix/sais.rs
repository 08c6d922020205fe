//! Suffix array construction by induced sorting.
//!
//! The input must end with a unique smallest symbol `0`.

const EMPTY: u32 = u32::MAX;

pub fn suffix_array(s: &[u32], alphabet: usize) -> Vec<u32> {
    let mut sa = vec![0u32; s.len()];
    sais(s, alphabet, &mut sa);
    sa
}

fn bucket_heads(sizes: &[u32]) -> Vec<u32> {
    let mut sum = 0;
    sizes
        .iter()
        .map(|&c| {
            let head = sum;
            sum += c;
            head
        })
        .collect()
}

fn bucket_tails(sizes: &[u32]) -> Vec<u32> {
    let mut sum = 0;
    sizes
        .iter()
        .map(|&c| {
            sum += c;
            sum
        })
        .collect()
}

fn sais(s: &[u32], alphabet: usize, sa: &mut [u32]) {
    let n = s.len();
    debug_assert!(n > 0 && s[n - 1] == 0);
    if n == 1 {
        sa[0] = 0;
        return;
    }

    // true = S-type
    let mut stype = vec![false; n];
    stype[n - 1] = true;
    for i in (0..n - 1).rev() {
        stype[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && stype[i + 1]);
    }
    let is_lms = |i: usize| i > 0 && stype[i] && !stype[i - 1];

    let mut sizes = vec![0u32; alphabet];
    for &c in s {
        sizes[c as usize] += 1;
    }

    // Sort LMS substrings.
    sa.fill(EMPTY);
    let mut tails = bucket_tails(&sizes);
    for (i, &c) in s.iter().enumerate().skip(1) {
        if is_lms(i) {
            let c = c as usize;
            tails[c] -= 1;
            sa[tails[c] as usize] = i as u32;
        }
    }
    induce(s, sa, &stype, &sizes);

    let mut m = 0;
    for k in 0..n {
        let p = sa[k] as usize;
        if is_lms(p) {
            sa[m] = p as u32;
            m += 1;
        }
    }

    // Name LMS substrings; names go to sa[m + p/2].
    sa[m..].fill(EMPTY);
    let mut names = 0u32;
    let mut prev: Option<usize> = None;
    for k in 0..m {
        let p = sa[k] as usize;
        let same = prev.is_some_and(|q| lms_equal(s, &stype, q, p));
        if !same {
            names += 1;
        }
        prev = Some(p);
        sa[m + p / 2] = names - 1;
    }
    let reduced: Vec<u32> = sa[m..n].iter().copied().filter(|&v| v != EMPTY).collect();
    debug_assert_eq!(reduced.len(), m);

    let mut reduced_sa = vec![0u32; m];
    if (names as usize) < m {
        sais(&reduced, names as usize, &mut reduced_sa);
    } else {
        for (i, &c) in reduced.iter().enumerate() {
            reduced_sa[c as usize] = i as u32;
        }
    }
    drop(reduced);

    let lms_positions: Vec<u32> = (1..n).filter(|&i| is_lms(i)).map(|i| i as u32).collect();
    sa.fill(EMPTY);
    let mut tails = bucket_tails(&sizes);
    for &r in reduced_sa.iter().rev() {
        let p = lms_positions[r as usize];
        let c = s[p as usize] as usize;
        tails[c] -= 1;
        sa[tails[c] as usize] = p;
    }
    induce(s, sa, &stype, &sizes);
}

fn induce(s: &[u32], sa: &mut [u32], stype: &[bool], sizes: &[u32]) {
    let n = s.len();
    let mut heads = bucket_heads(sizes);
    for k in 0..n {
        let j = sa[k];
        if j != EMPTY && j > 0 && !stype[j as usize - 1] {
            let c = s[j as usize - 1] as usize;
            sa[heads[c] as usize] = j - 1;
            heads[c] += 1;
        }
    }
    let mut tails = bucket_tails(sizes);
    for k in (0..n).rev() {
        let j = sa[k];
        if j != EMPTY && j > 0 && stype[j as usize - 1] {
            let c = s[j as usize - 1] as usize;
            tails[c] -= 1;
            sa[tails[c] as usize] = j - 1;
        }
    }
}

fn lms_equal(s: &[u32], stype: &[bool], a: usize, b: usize) -> bool {
    let is_lms = |i: usize| i > 0 && stype[i] && !stype[i - 1];
    let mut d = 0;
    loop {
        if s[a + d] != s[b + d] || stype[a + d] != stype[b + d] {
            return false;
        }
        if d > 0 {
            let (ea, eb) = (is_lms(a + d), is_lms(b + d));
            if ea || eb {
                return ea && eb;
            }
        }
        d += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive(s: &[u32]) -> Vec<u32> {
        let mut sa: Vec<u32> = (0..s.len() as u32).collect();
        sa.sort_by(|&a, &b| s[a as usize..].cmp(&s[b as usize..]));
        sa
    }

    #[test]
    fn small_inputs() {
        for s in [
            &[0u32][..],
            &[1, 0],
            &[1, 1, 2, 0],
            &[2, 1, 2, 1, 2, 1, 0],
            &[1, 1, 1, 1, 0],
        ] {
            let k = *s.iter().max().unwrap() as usize + 1;
            assert_eq!(suffix_array(s, k), naive(s), "{s:?}");
        }
    }

    proptest! {
        #[test]
        fn matches_naive_sort(mut v in proptest::collection::vec(1u32..5, 0..300)) {
            v.push(0);
            prop_assert_eq!(suffix_array(&v, 5), naive(&v));
        }

        #[test]
        fn matches_naive_on_repetitive(unit in proptest::collection::vec(1u32..3, 1..6), reps in 1usize..40) {
            let mut v: Vec<u32> = unit.iter().cycle().take(unit.len() * reps).copied().collect();
            v.push(0);
            prop_assert_eq!(suffix_array(&v, 3), naive(&v));
        }
    }
}

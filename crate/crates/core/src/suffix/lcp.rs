/// Adjacent-suffix LCP array by the rank-driven linear scan;
/// `lcp[k]` is the common prefix length of suffixes `sa[k - 1]` and `sa[k]`,
/// `lcp[0] = 0`.
pub fn lcp_array(s: &[u32], sa: &[u32], isa: &[u32]) -> Vec<u32> {
    let n = s.len();
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for i in 0..n {
        let r = isa[i] as usize;
        if r == 0 {
            h = 0;
            continue;
        }
        let j = sa[r - 1] as usize;
        while i + h < n && j + h < n && s[i + h] == s[j + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}

//! Deterministic enumeration of sweep parameter grids.

/// Partitions of `n` into weakly decreasing positive parts, in descending
/// lexicographic order: [n], [n−1, 1], …, [1, 1, …, 1]. `partitions(0)` is
/// the single empty partition.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        let top = remaining.min(max_part);
        for part in (1..=top).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n.max(1), &mut Vec::new(), &mut out);
    out
}

/// All multisets of SO blocks (p_k, q_k) ≠ (0, 0) with Σp_k ≤ p and
/// Σq_k ≤ q, each emitted in normalized order (descending by total, ties by
/// p descending) and enumerated deterministically. Includes the empty list.
pub fn so_block_lists(p: u32, q: u32) -> Vec<Vec<(u32, u32)>> {
    let mut candidates: Vec<(u32, u32)> = Vec::new();
    for a in 0..=p {
        for b in 0..=q {
            if a + b > 0 {
                candidates.push((a, b));
            }
        }
    }
    // Largest-first so generated sequences are already normalized.
    candidates.sort_by_key(|b| std::cmp::Reverse((b.0 + b.1, b.0)));

    fn rec(
        candidates: &[(u32, u32)],
        start: usize,
        p_rem: u32,
        q_rem: u32,
        prefix: &mut Vec<(u32, u32)>,
        out: &mut Vec<Vec<(u32, u32)>>,
    ) {
        out.push(prefix.clone());
        for (i, &(a, b)) in candidates.iter().enumerate().skip(start) {
            if a <= p_rem && b <= q_rem {
                prefix.push((a, b));
                rec(candidates, i, p_rem - a, q_rem - b, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&candidates, 0, p, q, &mut Vec::new(), &mut out);
    out
}

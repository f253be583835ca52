#![allow(dead_code)]

use std::collections::BTreeSet;

/// Set-based matrix reference: materializes the index sets of each
/// comparability and optimality level and intersects them.
pub fn brute_matrix(p: &[f64], q: &[f64]) -> [[u64; 3]; 3] {
    let mut p = p.to_vec();
    let mut q = q.to_vec();
    p.sort_by(|a, b| a.partial_cmp(b).unwrap());
    q.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let pooled: Vec<f64> = p.iter().chain(&q).copied().collect();
    let ub = pooled.iter().copied().fold(f64::INFINITY, f64::min);
    let um = pooled.iter().sum::<f64>() / pooled.len() as f64;

    let win: BTreeSet<usize> = (0..p.len()).filter(|&i| p[i] < q[i]).collect();
    let tie: BTreeSet<usize> = (0..p.len()).filter(|&i| p[i] == q[i]).collect();
    let lose: BTreeSet<usize> = (0..p.len()).filter(|&i| p[i] > q[i]).collect();
    let best: BTreeSet<usize> = (0..p.len()).filter(|&i| p[i] <= ub).collect();
    let avg: BTreeSet<usize> = (0..p.len()).filter(|&i| p[i] > ub && p[i] <= um).collect();
    let worst: BTreeSet<usize> = (0..p.len()).filter(|&i| p[i] > um).collect();

    let mut out = [[0u64; 3]; 3];
    for (r, c) in [&win, &tie, &lose].into_iter().enumerate() {
        for (k, o) in [&best, &avg, &worst].into_iter().enumerate() {
            out[r][k] = c.intersection(o).count() as u64;
        }
    }
    out
}

/// Two-sided exact rank-sum p-value by enumerating every way of choosing
/// which of the pooled ranks belong to the first sample.
pub fn enumerate_exact_p(p: &[f64], q: &[f64]) -> f64 {
    let m = p.len();
    let n = m + q.len();
    let mut pooled: Vec<(f64, bool)> = p
        .iter()
        .map(|&v| (v, true))
        .chain(q.iter().map(|&v| (v, false)))
        .collect();
    pooled.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let observed: usize = pooled.iter().enumerate().filter(|(_, x)| x.1).map(|(i, _)| i + 1).sum();
    let (mut le, mut ge, mut total) = (0u64, 0u64, 0u64);
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != m {
            continue;
        }
        let w: usize = (0..n).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).sum();
        total += 1;
        if w <= observed {
            le += 1;
        }
        if w >= observed {
            ge += 1;
        }
    }
    (2.0 * le.min(ge) as f64 / total as f64).min(1.0)
}

/// Every list of length `len` over `alphabet`.
pub fn all_lists(len: usize, alphabet: &[f64]) -> Vec<Vec<f64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                alphabet.iter().map(move |&a| {
                    let mut v = prefix.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
    }
    out
}

/// Non-decreasing lists only; pairing happens after sorting, so these cover
/// every multiset.
pub fn sorted_lists(len: usize, alphabet: &[f64]) -> Vec<Vec<f64>> {
    all_lists(len, alphabet)
        .into_iter()
        .filter(|v| v.windows(2).all(|w| w[0] <= w[1]))
        .collect()
}

//! Independent reference implementations. Nothing here shares code with the
//! library's kernels.
#![allow(dead_code)]

/// Full-table insertion/deletion edit distance.
pub fn naive_ed(a: &[u32], b: &[u32]) -> usize {
    let mut t = vec![vec![0usize; b.len() + 1]; a.len() + 1];
    for (x, row) in t.iter_mut().enumerate() {
        row[0] = x;
    }
    for (y, cell) in t[0].iter_mut().enumerate() {
        *cell = y;
    }
    for x in 1..=a.len() {
        for y in 1..=b.len() {
            t[x][y] = if a[x - 1] == b[y - 1] {
                t[x - 1][y - 1]
            } else {
                1 + t[x - 1][y].min(t[x][y - 1])
            };
        }
    }
    t[a.len()][b.len()]
}

/// LCS by enumerating every subsequence of `a`. Only for tiny inputs.
pub fn brute_lcs(a: &[u32], b: &[u32]) -> usize {
    assert!(a.len() <= 16);
    let is_subseq = |s: &[u32]| {
        let mut it = b.iter();
        s.iter().all(|x| it.any(|y| y == x))
    };
    (0u32..1 << a.len())
        .filter_map(|mask| {
            let s: Vec<u32> = (0..a.len()).filter(|i| mask >> i & 1 == 1).map(|i| a[i]).collect();
            is_subseq(&s).then_some(s.len())
        })
        .max()
        .unwrap_or(0)
}

/// First violating 1-based `(i, j, k)` with `i <= j < k`, one edit distance
/// per triple.
pub fn naive_violation(s: &[u32], num: i128, den: i128) -> Option<(usize, usize, usize)> {
    let n = s.len();
    for i in 1..=n {
        for j in i..=n {
            for k in j + 1..=n {
                let ed = naive_ed(&s[i - 1..j], &s[j..k]) as i128;
                if ed * den <= (den - num) * (k - i) as i128 {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

/// First failing rotation (1-based) and its triple in original positions.
pub fn naive_circle_violation(
    s: &[u32],
    num: i128,
    den: i128,
) -> Option<(usize, (usize, usize, usize))> {
    let n = s.len();
    for r in 0..n {
        let rot: Vec<u32> = (0..n).map(|p| s[(p + r) % n]).collect();
        if let Some((i, j, k)) = naive_violation(&rot, num, den) {
            let abs = |p: usize| (p - 1 + r) % n + 1;
            return Some((r + 1, (abs(i), abs(j), abs(k))));
        }
    }
    None
}

/// Tape-to-string map that rebuilds the full alphabet ordering at each step.
pub fn naive_derive(alphabet: usize, window: usize, tape: &[u32]) -> Vec<u32> {
    let mut order: Vec<u32> = (0..alphabet as u32).collect();
    let mut out: Vec<u32> = Vec::new();
    for (idx, &p) in tape.iter().enumerate() {
        let h = idx.min(window - 1);
        let recent: Vec<u32> = out.iter().rev().take(h).copied().collect();
        let rest: Vec<u32> = order.iter().copied().filter(|s| !recent.contains(s)).collect();
        order = recent.into_iter().chain(rest).collect();
        let s = order[h + p as usize - 1];
        out.push(s);
    }
    out
}

/// Lexicographic scan over all `q^n` words keeping any word far enough from
/// all kept words.
pub fn naive_greedy(n: usize, d: usize, q: u32, target: usize) -> Vec<Vec<u32>> {
    let mut kept: Vec<Vec<u32>> = Vec::new();
    let mut w = vec![0u32; n];
    loop {
        if kept.len() == target {
            break;
        }
        let far = kept
            .iter()
            .all(|k| k.iter().zip(&w).filter(|(a, b)| a != b).count() >= d);
        if far {
            kept.push(w.clone());
        }
        let mut pos = n;
        loop {
            if pos == 0 {
                return kept;
            }
            pos -= 1;
            w[pos] += 1;
            if w[pos] < q {
                break;
            }
            w[pos] = 0;
        }
    }
    kept
}

pub fn min_pairwise_hamming(words: &[Vec<u32>]) -> usize {
    let mut best = usize::MAX;
    for a in 0..words.len() {
        for b in a + 1..words.len() {
            let d = words[a].iter().zip(&words[b]).filter(|(x, y)| x != y).count();
            best = best.min(d);
        }
    }
    best
}

/// Whether every window of `w` consecutive symbols is duplicate-free.
pub fn windows_distinct(s: &[u32], w: usize) -> bool {
    let w = w.min(s.len()).max(1);
    s.windows(w).all(|win| {
        let mut v = win.to_vec();
        v.sort_unstable();
        v.windows(2).all(|p| p[0] != p[1])
    })
}

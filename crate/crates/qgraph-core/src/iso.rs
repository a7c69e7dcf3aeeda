//! Simultaneous isomorphism of families of square integer matrices.

use alloc::vec;
use alloc::vec::Vec;

use crate::IntMatrix;

fn signature(mats: &[&IntMatrix], v: usize) -> Vec<(i64, i64, i64)> {
    mats.iter()
        .map(|m| {
            let row: i64 = m.row(v).iter().sum();
            let col: i64 = (0..m.rows()).map(|i| m[(i, v)]).sum();
            (row, col, m[(v, v)])
        })
        .collect()
}

/// Visiting order: breadth first over the union of all adjacencies.
fn bfs_order(mats: &[&IntMatrix]) -> Vec<usize> {
    let n = mats[0].rows();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut head = order.len();
        order.push(start);
        while head < order.len() {
            let x = order[head];
            head += 1;
            for y in 0..n {
                if !seen[y] && mats.iter().any(|m| m[(x, y)] != 0 || m[(y, x)] != 0) {
                    seen[y] = true;
                    order.push(y);
                }
            }
        }
    }
    order
}

/// Finds `σ` with `dst[k][σ(i)][σ(j)] = src[k][i][j]` for every `k`, `i`, `j`.
///
/// `fixed` pins some images in advance. Returns `σ` as a vector indexed by
/// source vertex.
pub fn isomorphism(src: &[&IntMatrix], dst: &[&IntMatrix], fixed: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut found = None;
    search(src, dst, fixed, &mut |s| {
        found = Some(s.to_vec());
        false
    });
    found
}

/// First isomorphism that is also an involution, `σ(σ(i)) = i`.
pub fn involutive_isomorphism(src: &[&IntMatrix], dst: &[&IntMatrix], fixed: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut found = None;
    search(src, dst, fixed, &mut |s| {
        if s.iter().enumerate().all(|(i, &j)| s[j] == i) {
            found = Some(s.to_vec());
            false
        } else {
            true
        }
    });
    found
}

/// Number of isomorphisms, up to `limit`.
pub fn count_isomorphisms(src: &[&IntMatrix], dst: &[&IntMatrix], limit: usize) -> usize {
    let mut count = 0;
    search(src, dst, &[], &mut |_| {
        count += 1;
        count < limit
    });
    count
}

/// Backtracking over images; `visit` returns `false` to stop.
fn search(src: &[&IntMatrix], dst: &[&IntMatrix], fixed: &[(usize, usize)], visit: &mut dyn FnMut(&[usize]) -> bool) {
    assert_eq!(src.len(), dst.len());
    let n = src[0].rows();
    if dst[0].rows() != n {
        return;
    }
    let sig_s: Vec<_> = (0..n).map(|v| signature(src, v)).collect();
    let sig_d: Vec<_> = (0..n).map(|v| signature(dst, v)).collect();
    let order = bfs_order(src);
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    for &(a, b) in fixed {
        map[a] = b;
        used[b] = true;
    }
    fn consistent(src: &[&IntMatrix], dst: &[&IntMatrix], map: &[usize], v: usize, t: usize) -> bool {
        for (s, d) in src.iter().zip(dst) {
            for (u, &tu) in map.iter().enumerate() {
                if tu == usize::MAX || u == v {
                    continue;
                }
                if s[(v, u)] != d[(t, tu)] || s[(u, v)] != d[(tu, t)] {
                    return false;
                }
            }
        }
        true
    }
    for &(a, b) in fixed {
        if sig_s[a] != sig_d[b] || !consistent(src, dst, &map, a, b) {
            return;
        }
    }
    let todo: Vec<usize> = order.into_iter().filter(|&v| map[v] == usize::MAX).collect();
    #[allow(clippy::too_many_arguments)]
    fn rec(
        depth: usize,
        todo: &[usize],
        src: &[&IntMatrix],
        dst: &[&IntMatrix],
        sig_s: &[Vec<(i64, i64, i64)>],
        sig_d: &[Vec<(i64, i64, i64)>],
        map: &mut [usize],
        used: &mut [bool],
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if depth == todo.len() {
            return visit(map);
        }
        let v = todo[depth];
        for t in 0..map.len() {
            if used[t] || sig_s[v] != sig_d[t] || !consistent(src, dst, map, v, t) {
                continue;
            }
            map[v] = t;
            used[t] = true;
            let go_on = rec(depth + 1, todo, src, dst, sig_s, sig_d, map, used, visit);
            map[v] = usize::MAX;
            used[t] = false;
            if !go_on {
                return false;
            }
        }
        true
    }
    rec(0, &todo, src, dst, &sig_s, &sig_d, &mut map, &mut used, visit);
}

/// `P` with `P[i][σ(i)] = 1`, so that `Pᵀ · dst · P = src`.
pub fn as_permutation_matrix(sigma: &[usize]) -> IntMatrix {
    IntMatrix::permutation(sigma)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabelled_cycle() {
        let c = IntMatrix::from_fn(5, 5, |i, j| ((i + 1) % 5 == j) as i64);
        let perm = [3, 0, 4, 1, 2];
        let d = IntMatrix::from_fn(5, 5, |i, j| {
            let inv = |x| perm.iter().position(|&p| p == x).unwrap();
            c[(inv(i), inv(j))]
        });
        let s = isomorphism(&[&c], &[&d], &[]).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(d[(s[i], s[j])], c[(i, j)]);
            }
        }
        assert_eq!(count_isomorphisms(&[&c], &[&c], 100), 5);
        assert!(isomorphism(&[&c], &[&c.transpose()], &[(0, 0), (1, 1)]).is_none());
    }
}

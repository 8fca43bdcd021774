//! Independent oracles: dense F2 elimination and a brute-force homology
//! computation that shares no code with the library's engine.

#![allow(dead_code)]

use std::collections::BTreeMap;

use gridhfk::GridDiagram;

pub type DenseRow = Vec<u64>;

pub fn dense_rows(rows: usize, cols: usize, entries: impl IntoIterator<Item = (usize, usize)>) -> Vec<DenseRow> {
    let words = cols.div_ceil(64).max(1);
    let mut m = vec![vec![0u64; words]; rows];
    for (r, c) in entries {
        m[r][c / 64] ^= 1 << (c % 64);
    }
    m
}

/// Rank by row reduction on bit-packed rows.
pub fn dense_rank(mut m: Vec<DenseRow>, cols: usize) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        let (w, b) = (c / 64, 1u64 << (c % 64));
        let Some(p) = (rank..m.len()).find(|&r| m[r][w] & b != 0) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[w] & b != 0 {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn all_perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in all_perms(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// `I(P,Q) + I(Q,P)`: ordered pairs with the first point strictly south-west
/// of the second, counted both ways.
fn sw_pairs(p: &[(i64, i64)], q: &[(i64, i64)]) -> i64 {
    let mut count = 0;
    for a in p {
        for b in q {
            if a.0 < b.0 && a.1 < b.1 {
                count += 1;
            }
            if b.0 < a.0 && b.1 < a.1 {
                count += 1;
            }
        }
    }
    count
}

/// Maslov grading relative to one marker set: `J(x,x) - 2J(x,M) + J(M,M) + 1`
/// with `J(P,Q) = (I(P,Q) + I(Q,P)) / 2`.
fn maslov(x: &[usize], markers: &[usize]) -> i64 {
    let pts: Vec<(i64, i64)> = x.iter().enumerate().map(|(i, &r)| (2 * i as i64, 2 * r as i64)).collect();
    let mk: Vec<(i64, i64)> = markers
        .iter()
        .enumerate()
        .map(|(i, &r)| (2 * i as i64 + 1, 2 * r as i64 + 1))
        .collect();
    // sw_pairs(P, Q) = I(P,Q) + I(Q,P) = 2J(P,Q)
    let jxx = sw_pairs(&pts, &pts) / 2;
    let jmm = sw_pairs(&mk, &mk) / 2;
    jxx - sw_pairs(&pts, &mk) + jmm + 1
}

pub fn oracle_bigrading(g: &GridDiagram, x: &[usize]) -> (i64, i64) {
    let mo = maslov(x, g.o_rows());
    let mx = maslov(x, g.x_rows());
    let n = g.n() as i64;
    (mo, (mo - mx - (n - 1)) / 2)
}

/// Marker-free empty rectangles from `x`, by scanning every cell.
pub fn oracle_targets(g: &GridDiagram, x: &[usize]) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let width = (j + n - i) % n;
            let height = (x[j] + n - x[i]) % n;
            let in_cols = |c: usize| (c + n - i) % n < width;
            let in_rows = |r: usize| (r + n - x[i]) % n < height;
            let mut empty = true;
            for c in 0..n {
                if !in_cols(c) {
                    continue;
                }
                if in_rows(g.o_rows()[c]) || in_rows(g.x_rows()[c]) {
                    empty = false;
                }
                // a point on a vertical line strictly inside
                let strictly_inside_col = c != i && (c + n - i) % n < width;
                let r = x[c];
                let strictly_inside_row = r != x[i] && (r + n - x[i]) % n < height;
                if strictly_inside_col && strictly_inside_row {
                    empty = false;
                }
            }
            if empty {
                let mut y = x.to_vec();
                y.swap(i, j);
                out.push(y);
            }
        }
    }
    out
}

/// Fully blocked homology ranks keyed by `(M, A)`, by dense elimination over
/// all generators.
pub fn oracle_tilde_ranks(g: &GridDiagram) -> BTreeMap<(i64, i64), usize> {
    let perms = all_perms(g.n());
    let index: BTreeMap<Vec<usize>, usize> = perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let grading: Vec<(i64, i64)> = perms.iter().map(|p| oracle_bigrading(g, p)).collect();
    let mut slices: BTreeMap<(i64, i64), Vec<usize>> = BTreeMap::new();
    for (i, &gr) in grading.iter().enumerate() {
        slices.entry(gr).or_default().push(i);
    }
    let mut local = vec![0; perms.len()];
    for v in slices.values() {
        for (k, &i) in v.iter().enumerate() {
            local[i] = k;
        }
    }
    let mut rank_out: BTreeMap<(i64, i64), usize> = BTreeMap::new();
    for (&(m, a), gens) in &slices {
        let rows = slices.get(&(m - 1, a)).map_or(0, Vec::len);
        let mut entries = Vec::new();
        for (col, &i) in gens.iter().enumerate() {
            for y in oracle_targets(g, &perms[i]) {
                let t = index[&y];
                assert_eq!(grading[t], (m - 1, a), "rectangle changes bigrading unexpectedly");
                entries.push((local[t], col));
            }
        }
        rank_out.insert((m, a), dense_rank(dense_rows(rows, gens.len(), entries), gens.len()));
    }
    let mut out = BTreeMap::new();
    for (&(m, a), gens) in &slices {
        let h = gens.len() - rank_out[&(m, a)] - rank_out.get(&(m + 1, a)).copied().unwrap_or(0);
        if h > 0 {
            out.insert((m, a), h);
        }
    }
    out
}

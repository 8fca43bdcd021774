//! Sparse matrices over F2, stored column-major as sorted row-index lists.

use std::fmt::Write as _;

use crate::error::{Error, Result};

const NO_PIVOT: u32 = u32::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseF2Matrix {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<u32>>,
}

/// Sorts `v` and drops entries that occur an even number of times.
pub(crate) fn normalize_mod2(v: &mut Vec<u32>) {
    v.sort_unstable();
    let mut out = 0;
    let mut i = 0;
    while i < v.len() {
        let mut j = i;
        while j < v.len() && v[j] == v[i] {
            j += 1;
        }
        if (j - i) % 2 == 1 {
            v[out] = v[i];
            out += 1;
        }
        i = j;
    }
    v.truncate(out);
}

/// `acc ^= other` for sorted supports.
fn xor_into(acc: &mut Vec<u32>, other: &[u32], scratch: &mut Vec<u32>) {
    scratch.clear();
    scratch.reserve(acc.len() + other.len());
    let (mut i, mut j) = (0, 0);
    while i < acc.len() && j < other.len() {
        let (a, b) = (acc[i], other[j]);
        if a < b {
            scratch.push(a);
            i += 1;
        } else if b < a {
            scratch.push(b);
            j += 1;
        } else {
            i += 1;
            j += 1;
        }
    }
    scratch.extend_from_slice(&acc[i..]);
    scratch.extend_from_slice(&other[j..]);
    std::mem::swap(acc, scratch);
}

impl SparseF2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseF2Matrix {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        SparseF2Matrix {
            rows: n,
            cols: n,
            columns: (0..n as u32).map(|i| vec![i]).collect(),
        }
    }

    /// Builds a matrix from `(row, col)` positions; repeated positions add mod 2.
    pub fn from_entries(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut columns = vec![Vec::new(); cols];
        for (r, c) in entries {
            if r >= rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    found: r + 1,
                });
            }
            if c >= cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: c + 1,
                });
            }
            columns[c].push(r as u32);
        }
        for col in &mut columns {
            normalize_mod2(col);
        }
        Ok(SparseF2Matrix {
            rows,
            cols,
            columns,
        })
    }

    /// Builds a matrix from columns; each column is reduced mod 2.
    pub fn from_columns(rows: usize, mut columns: Vec<Vec<u32>>) -> Result<Self> {
        for col in &mut columns {
            normalize_mod2(col);
            if let Some(&last) = col.last() {
                if last as usize >= rows {
                    return Err(Error::DimensionMismatch {
                        expected: rows,
                        found: last as usize + 1,
                    });
                }
            }
        }
        Ok(SparseF2Matrix {
            rows,
            cols: columns.len(),
            columns,
        })
    }

    pub fn from_dense(dense: &[Vec<bool>]) -> Self {
        let rows = dense.len();
        let cols = dense.first().map_or(0, |r| r.len());
        let entries = (0..rows).flat_map(|r| (0..cols).filter(move |&c| dense[r][c]).map(move |c| (r, c)));
        SparseF2Matrix::from_entries(rows, cols, entries).expect("in bounds")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, c: usize) -> &[u32] {
        &self.columns[c]
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.columns[c].binary_search(&(r as u32)).is_ok()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |&r| (r as usize, c)))
    }

    pub fn transpose(&self) -> SparseF2Matrix {
        let mut columns = vec![Vec::new(); self.rows];
        for (r, c) in self.entries() {
            columns[r].push(c as u32);
        }
        SparseF2Matrix {
            rows: self.cols,
            cols: self.rows,
            columns,
        }
    }

    /// Product with a vector given by its support; returns the support.
    pub fn mul_support(&self, support: &[u32]) -> Vec<u32> {
        let mut acc = Vec::new();
        for &c in support {
            acc.extend_from_slice(&self.columns[c as usize]);
        }
        normalize_mod2(&mut acc);
        acc
    }

    /// `self * other`.
    pub fn mul(&self, other: &SparseF2Matrix) -> Result<SparseF2Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let columns = other.columns.iter().map(|c| self.mul_support(c)).collect();
        Ok(SparseF2Matrix {
            rows: self.rows,
            cols: other.cols,
            columns,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn rank(&self) -> usize {
        Reduction::run(self, None, false).rank()
    }

    /// Some `v` with `self * v = b`, or `None` when `b` is outside the column span.
    pub fn solve(&self, b: &[bool]) -> Result<Option<Vec<bool>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: b.len(),
            });
        }
        let support: Vec<u32> = (0..b.len()).filter(|&i| b[i]).map(|i| i as u32).collect();
        Ok(self.solve_support(&support).map(|sol| {
            let mut v = vec![false; self.cols];
            for c in sol {
                v[c as usize] = true;
            }
            v
        }))
    }

    /// Sparse form of [`solve`](Self::solve).
    pub fn solve_support(&self, b: &[u32]) -> Option<Vec<u32>> {
        Reduction::run(self, None, true).preimage(b)
    }

    /// Whether `b` lies in the column span, without building a preimage.
    pub fn in_column_span(&self, b: &[u32]) -> bool {
        Reduction::run(self, None, false).reduces_to_zero(b)
    }

    /// Coordinate text dump: one `row col` pair per line, 1-based.
    pub fn to_coordinate_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "% {} x {}, {} entries", self.rows, self.cols, self.nnz());
        for (r, c) in self.entries() {
            let _ = writeln!(out, "{} {}", r + 1, c + 1);
        }
        out
    }
}

/// Column reduction to a matrix whose nonzero columns have distinct lowest
/// (largest-index) rows, optionally tracking the column operations.
pub struct Reduction {
    reduced: Vec<Vec<u32>>,
    pivot_col: Vec<u32>,
    ops: Option<Vec<Vec<u32>>>,
    rank: usize,
}

impl Reduction {
    /// Reduces `m`. Columns flagged in `skip` are assumed to reduce to zero and
    /// are left out (the clearing optimization).
    pub fn run(m: &SparseF2Matrix, skip: Option<&[bool]>, track: bool) -> Reduction {
        let mut reduced: Vec<Vec<u32>> = Vec::with_capacity(m.cols);
        let mut ops: Option<Vec<Vec<u32>>> = track.then(|| Vec::with_capacity(m.cols));
        let mut pivot_col = vec![NO_PIVOT; m.rows];
        let mut scratch = Vec::new();
        let mut rank = 0;
        for (j, col) in m.columns.iter().enumerate() {
            if skip.is_some_and(|s| s[j]) {
                reduced.push(Vec::new());
                if let Some(ops) = ops.as_mut() {
                    ops.push(Vec::new());
                }
                continue;
            }
            let mut cur = col.clone();
            let mut op = vec![j as u32];
            while let Some(&low) = cur.last() {
                let p = pivot_col[low as usize];
                if p == NO_PIVOT {
                    break;
                }
                xor_into(&mut cur, &reduced[p as usize], &mut scratch);
                if let Some(ops) = ops.as_ref() {
                    xor_into(&mut op, &ops[p as usize], &mut scratch);
                }
            }
            if let Some(&low) = cur.last() {
                pivot_col[low as usize] = j as u32;
                rank += 1;
            }
            reduced.push(cur);
            if let Some(ops) = ops.as_mut() {
                ops.push(op);
            }
        }
        Reduction {
            reduced,
            pivot_col,
            ops,
            rank,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Rows that are the lowest entry of some reduced column.
    pub fn pivot_rows(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivot_col
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != NO_PIVOT)
            .map(|(r, _)| r)
    }

    fn reduce(&self, b: &[u32]) -> (Vec<u32>, Vec<u32>) {
        let mut cur = b.to_vec();
        normalize_mod2(&mut cur);
        let mut sol = Vec::new();
        let mut scratch = Vec::new();
        while let Some(&low) = cur.last() {
            let Some(&p) = self.pivot_col.get(low as usize) else {
                break;
            };
            if p == NO_PIVOT {
                break;
            }
            xor_into(&mut cur, &self.reduced[p as usize], &mut scratch);
            if let Some(ops) = &self.ops {
                xor_into(&mut sol, &ops[p as usize], &mut scratch);
            }
        }
        (cur, sol)
    }

    pub fn reduces_to_zero(&self, b: &[u32]) -> bool {
        self.reduce(b).0.is_empty()
    }

    /// Requires the reduction to have been run with tracking.
    pub fn preimage(&self, b: &[u32]) -> Option<Vec<u32>> {
        assert!(self.ops.is_some(), "preimage needs a tracked reduction");
        let (rest, mut sol) = self.reduce(b);
        if rest.is_empty() {
            normalize_mod2(&mut sol);
            Some(sol)
        } else {
            None
        }
    }
}

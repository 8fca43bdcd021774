//! Grid moves, their Legendrian/transverse classification, corner normalization
//! and the grid connected sum.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::{GridDiagram, Marker};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Corner {
    NW,
    NE,
    SW,
    SE,
}

impl Corner {
    pub const ALL: [Corner; 4] = [Corner::NW, Corner::NE, Corner::SW, Corner::SE];

    /// `(dx, dy)` offset of the corner inside a 2x2 block.
    fn offset(self) -> (usize, usize) {
        match self {
            Corner::SW => (0, 0),
            Corner::SE => (1, 0),
            Corner::NW => (0, 1),
            Corner::NE => (1, 1),
        }
    }
}

/// One of the eight (de)stabilization types: the marker that was subdivided and
/// the corner of the 2x2 block where the single new marker of the other kind lands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StabType {
    pub marker: Marker,
    pub corner: Corner,
}

impl StabType {
    pub const fn new(marker: Marker, corner: Corner) -> Self {
        StabType { marker, corner }
    }

    pub fn all() -> impl Iterator<Item = StabType> {
        [Marker::X, Marker::O]
            .into_iter()
            .flat_map(|m| Corner::ALL.into_iter().map(move |c| StabType::new(m, c)))
    }
}

impl fmt::Display for StabType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{:?}", self.marker, self.corner)
    }
}

impl FromStr for StabType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown stabilization type {s:?}"));
        let (m, c) = s.split_once(':').ok_or_else(bad)?;
        let marker = match m {
            "X" => Marker::X,
            "O" => Marker::O,
            _ => return Err(bad()),
        };
        let corner = match c {
            "NW" => Corner::NW,
            "NE" => Corner::NE,
            "SW" => Corner::SW,
            "SE" => Corner::SE,
            _ => return Err(bad()),
        };
        Ok(StabType { marker, corner })
    }
}

/// A grid move. Cell and row/column indices are 1-based, as in move scripts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GridMove {
    /// Every marker moves up `k` rows (mod n).
    CyclicRow(i64),
    /// Every marker moves right `k` columns (mod n).
    CyclicCol(i64),
    /// Swap rows `j` and `j+1`; `j = n` swaps the top and bottom rows.
    CommuteRows(usize),
    /// Swap columns `i` and `i+1`; `i = n` swaps the last and first columns.
    CommuteCols(usize),
    /// Subdivide the marked cell `(column, row)`.
    Stabilize {
        column: usize,
        row: usize,
        kind: StabType,
    },
    /// Collapse the 2x2 block whose lower-left cell is `(column, row)`; inverse
    /// of the stabilization with the same arguments.
    Destabilize {
        column: usize,
        row: usize,
        kind: StabType,
    },
}

/// Which structure a move is known to preserve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum MoveClass {
    /// Preserves only the topological knot type.
    Topological,
    /// Preserves the Legendrian knot type.
    Legendrian,
    /// Negative stabilization: preserves the transverse push-off only.
    TransverseOnly,
    /// Positive stabilization.
    PositiveStab,
}

pub fn classify_stab(kind: StabType) -> MoveClass {
    use Corner::*;
    match (kind.marker, kind.corner) {
        (_, NW) | (_, SE) => MoveClass::Legendrian,
        (Marker::X, NE) | (Marker::O, SW) => MoveClass::TransverseOnly,
        (Marker::X, SW) | (Marker::O, NE) => MoveClass::PositiveStab,
    }
}

impl GridMove {
    pub fn classify(&self) -> MoveClass {
        match *self {
            GridMove::CyclicRow(_)
            | GridMove::CyclicCol(_)
            | GridMove::CommuteRows(_)
            | GridMove::CommuteCols(_) => MoveClass::Legendrian,
            GridMove::Stabilize { kind, .. } | GridMove::Destabilize { kind, .. } => {
                classify_stab(kind)
            }
        }
    }

    pub fn apply(&self, g: &GridDiagram) -> Result<GridDiagram> {
        apply_move(g, self)
    }
}

impl fmt::Display for GridMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GridMove::CyclicRow(k) => write!(f, "cycR {k}"),
            GridMove::CyclicCol(k) => write!(f, "cycC {k}"),
            GridMove::CommuteRows(j) => write!(f, "commR {j}"),
            GridMove::CommuteCols(i) => write!(f, "commC {i}"),
            GridMove::Stabilize { column, row, kind } => write!(f, "stab {kind} {column} {row}"),
            GridMove::Destabilize { column, row, kind } => {
                write!(f, "destab {kind} {column} {row}")
            }
        }
    }
}

impl FromStr for GridMove {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let words: Vec<&str> = s.split_whitespace().collect();
        let int = |w: &str| -> Result<i64> {
            w.parse()
                .map_err(|_| Error::Parse(format!("expected an integer, got {w:?}")))
        };
        let index = |w: &str| -> Result<usize> {
            w.parse()
                .map_err(|_| Error::Parse(format!("expected a positive index, got {w:?}")))
        };
        match words.as_slice() {
            ["cycR", k] => Ok(GridMove::CyclicRow(int(k)?)),
            ["cycC", k] => Ok(GridMove::CyclicCol(int(k)?)),
            ["commR", j] => Ok(GridMove::CommuteRows(index(j)?)),
            ["commC", i] => Ok(GridMove::CommuteCols(index(i)?)),
            ["stab", t, c, r] => Ok(GridMove::Stabilize {
                column: index(c)?,
                row: index(r)?,
                kind: t.parse()?,
            }),
            ["destab", t, c, r] => Ok(GridMove::Destabilize {
                column: index(c)?,
                row: index(r)?,
                kind: t.parse()?,
            }),
            _ => Err(Error::Parse(format!("unrecognized move {s:?}"))),
        }
    }
}

/// Parses a move script: one move per line, blank lines and `#` comments ignored.
pub fn parse_script(text: &str) -> Result<Vec<GridMove>> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .map(|(line, l)| {
            l.parse().map_err(|e: Error| Error::Script {
                line,
                detail: e.to_string(),
            })
        })
        .collect()
}

pub fn apply_script(g: &GridDiagram, moves: &[GridMove]) -> Result<GridDiagram> {
    moves.iter().try_fold(g.clone(), |acc, m| m.apply(&acc))
}

fn check_index(what: &str, i: usize, n: usize) -> Result<usize> {
    if i == 0 || i > n {
        Err(Error::OutOfRange(format!("{what} {i} not in 1..{n}")))
    } else {
        Ok(i - 1)
    }
}

// Two chords of a circle cross iff exactly one endpoint of the second lies
// strictly inside the arc cut out by the first.
fn chords_interleave(a: (usize, usize), b: (usize, usize)) -> bool {
    let (lo, hi) = (a.0.min(a.1), a.0.max(a.1));
    let inside = |p: usize| lo < p && p < hi;
    inside(b.0) != inside(b.1)
}

fn commutation_legal(a: (usize, usize), b: (usize, usize)) -> bool {
    let shared = a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1;
    !shared && !chords_interleave(a, b)
}

pub fn apply_move(g: &GridDiagram, m: &GridMove) -> Result<GridDiagram> {
    let n = g.n();
    let o = g.o_rows();
    let x = g.x_rows();
    match *m {
        GridMove::CyclicRow(k) => {
            let k = k.rem_euclid(n as i64) as usize;
            let o = o.iter().map(|r| (r + k) % n).collect();
            let x = x.iter().map(|r| (r + k) % n).collect();
            GridDiagram::new(o, x)
        }
        GridMove::CyclicCol(k) => {
            let k = k.rem_euclid(n as i64) as usize;
            let mut o2 = vec![0; n];
            let mut x2 = vec![0; n];
            for c in 0..n {
                o2[(c + k) % n] = o[c];
                x2[(c + k) % n] = x[c];
            }
            GridDiagram::new(o2, x2)
        }
        GridMove::CommuteRows(j) => {
            let a = check_index("row", j, n)?;
            let b = (a + 1) % n;
            let cols = |r: usize| (g.column_of(Marker::O, r), g.column_of(Marker::X, r));
            if !commutation_legal(cols(a), cols(b)) {
                return Err(Error::IllegalCommutation {
                    axis: "rows",
                    index: a + 1,
                    next: b + 1,
                });
            }
            let swap = |r: &usize| {
                if *r == a {
                    b
                } else if *r == b {
                    a
                } else {
                    *r
                }
            };
            GridDiagram::new(o.iter().map(swap).collect(), x.iter().map(swap).collect())
        }
        GridMove::CommuteCols(i) => {
            let a = check_index("column", i, n)?;
            let b = (a + 1) % n;
            if !commutation_legal((o[a], x[a]), (o[b], x[b])) {
                return Err(Error::IllegalCommutation {
                    axis: "columns",
                    index: a + 1,
                    next: b + 1,
                });
            }
            let mut o2 = o.to_vec();
            let mut x2 = x.to_vec();
            o2.swap(a, b);
            x2.swap(a, b);
            GridDiagram::new(o2, x2)
        }
        GridMove::Stabilize { column, row, kind } => {
            let c = check_index("column", column, n)?;
            let r = check_index("row", row, n)?;
            if g.marker_at(c, r) != Some(kind.marker) {
                return Err(Error::NoSuchPattern {
                    kind: format!("stabilization {kind} (cell holds no {})", kind.marker),
                    column,
                    row,
                });
            }
            Ok(stabilize(g, c, r, kind))
        }
        GridMove::Destabilize { column, row, kind } => {
            let c = check_index("column", column, n)?;
            let r = check_index("row", row, n)?;
            destabilize(g, c, r, kind).ok_or_else(|| Error::NoSuchPattern {
                kind: kind.to_string(),
                column,
                row,
            })
        }
    }
}

/// Subdivides the 0-based cell `(c, r)`, which carries `kind.marker`, into a 2x2
/// block: the opposite marker goes to `kind.corner`, two copies of the original
/// marker fill the other diagonal, and the corner opposite `kind.corner` stays
/// empty. The displaced markers of the old row and column move into the
/// sub-row and sub-column away from the new marker.
fn stabilize(g: &GridDiagram, c: usize, r: usize, kind: StabType) -> GridDiagram {
    let n = g.n();
    let (dx, dy) = kind.corner.offset();
    let shift = |i: usize, at: usize| if i > at { i + 1 } else { i };
    let (same, other) = match kind.marker {
        Marker::X => (g.x_rows(), g.o_rows()),
        Marker::O => (g.o_rows(), g.x_rows()),
    };
    let mut same2 = vec![0; n + 1];
    let mut other2 = vec![0; n + 1];
    for col in 0..n {
        if col == c {
            continue;
        }
        let nc = shift(col, c);
        same2[nc] = shift(same[col], r);
        other2[nc] = if other[col] == r {
            // the displaced marker of the subdivided row
            r + 1 - dy
        } else {
            shift(other[col], r)
        };
    }
    // column c + dx holds the new marker and one copy of the old one
    other2[c + dx] = r + dy;
    same2[c + dx] = r + 1 - dy;
    // column c + 1 - dx holds the other copy and the displaced column marker
    same2[c + 1 - dx] = r + dy;
    other2[c + 1 - dx] = shift(other[c], r);
    let (o, x) = match kind.marker {
        Marker::X => (other2, same2),
        Marker::O => (same2, other2),
    };
    GridDiagram::new(o, x).expect("stabilization preserves validity")
}

fn destabilize(g: &GridDiagram, c: usize, r: usize, kind: StabType) -> Option<GridDiagram> {
    let n = g.n();
    if c + 1 >= n || r + 1 >= n || n < 3 {
        return None;
    }
    let (dx, dy) = kind.corner.offset();
    let s = kind.marker;
    let t = s.other();
    let at = |i, j| g.marker_at(c + i, r + j);
    if at(dx, dy) != Some(t)
        || at(1 - dx, dy) != Some(s)
        || at(dx, 1 - dy) != Some(s)
        || at(1 - dx, 1 - dy).is_some()
    {
        return None;
    }
    let (same, other) = match s {
        Marker::X => (g.x_rows(), g.o_rows()),
        Marker::O => (g.o_rows(), g.x_rows()),
    };
    let unshift = |i: usize| if i > c { i - 1 } else { i };
    let unshift_row = |i: usize| if i > r { i - 1 } else { i };
    let mut same2 = vec![0; n - 1];
    let mut other2 = vec![0; n - 1];
    for col in 0..n {
        if col == c || col == c + 1 {
            continue;
        }
        same2[unshift(col)] = unshift_row(same[col]);
        other2[unshift(col)] = unshift_row(other[col]);
    }
    same2[c] = r;
    other2[c] = unshift_row(other[c + 1 - dx]);
    let (o, x) = match s {
        Marker::X => (other2, same2),
        Marker::O => (same2, other2),
    };
    GridDiagram::new(o, x).ok()
}

/// Every legal move on `g`: nontrivial cyclic shifts, legal commutations,
/// all destabilizations, and (while `g.n() < max_size`) all stabilizations.
pub fn legal_moves(g: &GridDiagram, max_size: usize) -> Vec<GridMove> {
    let n = g.n();
    let mut out = Vec::new();
    for k in 1..n as i64 {
        out.push(GridMove::CyclicRow(k));
        out.push(GridMove::CyclicCol(k));
    }
    for i in 1..=n {
        for m in [GridMove::CommuteRows(i), GridMove::CommuteCols(i)] {
            if apply_move(g, &m).is_ok() {
                out.push(m);
            }
        }
    }
    for kind in StabType::all() {
        if n < max_size {
            for c in 0..n {
                let r = match kind.marker {
                    Marker::X => g.x_rows()[c],
                    Marker::O => g.o_rows()[c],
                };
                out.push(GridMove::Stabilize { column: c + 1, row: r + 1, kind });
            }
        }
        for c in 1..n {
            for r in 1..n {
                let m = GridMove::Destabilize { column: c, row: r, kind };
                if apply_move(g, &m).is_ok() {
                    out.push(m);
                }
            }
        }
    }
    out
}

pub fn has_x_upper_right(g: &GridDiagram) -> bool {
    let n = g.n();
    g.x_rows()[n - 1] == n - 1
}

pub fn has_o_lower_left(g: &GridDiagram) -> bool {
    g.o_rows()[0] == 0
}

/// The move sequence that puts an X in the upper-right corner cell and an O in
/// the lower-left corner cell: `X:NE` on the X of the first column, `O:NE` on
/// the O this creates, then a cyclic shift bringing the lower new X to the
/// corner. Empty when the grid already satisfies both conditions.
pub fn corner_normalization_moves(g: &GridDiagram) -> Vec<GridMove> {
    let n = g.n();
    if has_x_upper_right(g) && has_o_lower_left(g) {
        return Vec::new();
    }
    let c = 0;
    let r = g.x_rows()[c];
    let first = GridMove::Stabilize {
        column: c + 1,
        row: r + 1,
        kind: StabType::new(Marker::X, Corner::NE),
    };
    // The new O sits in cell (c+1, r+1), 0-based.
    let second = GridMove::Stabilize {
        column: c + 2,
        row: r + 2,
        kind: StabType::new(Marker::O, Corner::NE),
    };
    // The lower X of the first block ends up at (c+1, r) in the (n+2)-grid.
    let size = n + 2;
    let to_corner_col = (size - 1 - (c + 1)) as i64;
    let to_corner_row = (size - 1 - r) as i64;
    vec![
        first,
        second,
        GridMove::CyclicCol(to_corner_col),
        GridMove::CyclicRow(to_corner_row),
    ]
}

pub fn normalize_corners(g: &GridDiagram) -> GridDiagram {
    let moves = corner_normalization_moves(g);
    let out = apply_script(g, &moves).expect("normalization moves are always legal");
    debug_assert!(has_x_upper_right(&out) && has_o_lower_left(&out));
    out
}

/// Patches `g2` onto `g1` at the X in the upper-right corner of `g1` and the O
/// in the lower-left corner of `g2`, deleting both markers. The result has size
/// `n1 + n2 - 1`; the shared cell is `(n1, n1)`.
pub fn connect_sum(g1: &GridDiagram, g2: &GridDiagram) -> Result<GridDiagram> {
    if !has_x_upper_right(g1) || !has_o_lower_left(g2) {
        return Err(Error::CornerConditionUnmet);
    }
    let n1 = g1.n();
    let n2 = g2.n();
    let n = n1 + n2 - 1;
    let mut o = vec![0; n];
    let mut x = vec![0; n];
    let off = n1 - 1;
    o[..off].copy_from_slice(&g1.o_rows()[..off]);
    x[..off].copy_from_slice(&g1.x_rows()[..off]);
    // the shared column keeps g1's O and g2's X
    o[off] = g1.o_rows()[n1 - 1];
    x[off] = g2.x_rows()[0] + off;
    for c in 1..n2 {
        o[off + c] = g2.o_rows()[c] + off;
        x[off + c] = g2.x_rows()[c] + off;
    }
    GridDiagram::new(o, x)
}

/// Cyclic row shift bringing the X of the last column to the top row. A
/// Legendrian move, so unlike [`normalize_corners`] it keeps every invariant.
pub fn align_x_upper_right(g: &GridDiagram) -> GridMove {
    let n = g.n();
    GridMove::CyclicRow((n - 1 - g.x_rows()[n - 1]) as i64)
}

/// Cyclic row shift bringing the O of the first column to the bottom row.
pub fn align_o_lower_left(g: &GridDiagram) -> GridMove {
    GridMove::CyclicRow(-(g.o_rows()[0] as i64))
}

/// Connected sum after aligning each side by a cyclic row shift where needed.
pub fn connect_sum_aligned(g1: &GridDiagram, g2: &GridDiagram) -> Result<GridDiagram> {
    let left = apply_move(g1, &align_x_upper_right(g1))?;
    let right = apply_move(g2, &align_o_lower_left(g2))?;
    connect_sum(&left, &right)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unknot() -> GridDiagram {
        GridDiagram::from_sigma(&[1, 2], &[2, 1]).unwrap()
    }

    fn trefoil() -> GridDiagram {
        GridDiagram::from_sigma(&[1, 2, 3, 4, 5], &[3, 4, 5, 1, 2]).unwrap()
    }

    #[test]
    fn cyclic_row_on_unknot() {
        let g = apply_move(&unknot(), &GridMove::CyclicRow(1)).unwrap();
        assert_eq!(g.sigma_o(), vec![2, 1]);
        assert_eq!(g.sigma_x(), vec![1, 2]);
    }

    #[test]
    fn stabilize_unknot_x_nw() {
        let m = GridMove::Stabilize {
            column: 1,
            row: 2,
            kind: "X:NW".parse().unwrap(),
        };
        let g = apply_move(&unknot(), &m).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.component_count(), 1);
        // 2x2 block at columns 1-2, rows 2-3: O at NW, X at SW and NE
        assert_eq!(g.marker_at(0, 2), Some(Marker::O));
        assert_eq!(g.marker_at(0, 1), Some(Marker::X));
        assert_eq!(g.marker_at(1, 2), Some(Marker::X));
        assert_eq!(g.marker_at(1, 1), None);
    }

    #[test]
    fn every_stabilization_destabilizes_back() {
        for g in [unknot(), trefoil()] {
            for kind in StabType::all() {
                for c in 0..g.n() {
                    let r = match kind.marker {
                        Marker::X => g.x_rows()[c],
                        Marker::O => g.o_rows()[c],
                    };
                    let (column, row) = (c + 1, r + 1);
                    let s = apply_move(&g, &GridMove::Stabilize { column, row, kind }).unwrap();
                    assert_eq!(s.component_count(), 1, "{kind} at {column},{row}");
                    let back =
                        apply_move(&s, &GridMove::Destabilize { column, row, kind }).unwrap();
                    assert_eq!(back, g, "{kind} at {column},{row}");
                }
            }
        }
    }

    #[test]
    fn stabilize_requires_marker() {
        let m = GridMove::Stabilize {
            column: 1,
            row: 1,
            kind: "X:NW".parse().unwrap(),
        };
        assert!(matches!(
            apply_move(&unknot(), &m),
            Err(Error::NoSuchPattern { .. })
        ));
        let d = GridMove::Destabilize {
            column: 1,
            row: 1,
            kind: "X:NW".parse().unwrap(),
        };
        assert!(matches!(
            apply_move(&trefoil(), &d),
            Err(Error::NoSuchPattern { .. })
        ));
    }

    #[test]
    fn commutation_legality() {
        // columns 1 and 2 of this grid: rows {1,4} nested inside {... }
        let g = GridDiagram::from_sigma(&[1, 2, 3, 4], &[4, 3, 1, 2]).unwrap();
        // column 1 spans rows 1..4, column 2 spans rows 2..3: nested
        assert!(apply_move(&g, &GridMove::CommuteCols(1)).is_ok());
        // column 2 spans 2..3, column 3 spans 1..3: share row 3
        assert!(matches!(
            apply_move(&g, &GridMove::CommuteCols(2)),
            Err(Error::IllegalCommutation { .. })
        ));
        let t = trefoil();
        // columns 1 (rows 1,3) and 2 (rows 2,4) interleave
        assert!(matches!(
            apply_move(&t, &GridMove::CommuteCols(1)),
            Err(Error::IllegalCommutation { .. })
        ));
        assert!(matches!(
            apply_move(&t, &GridMove::CommuteRows(9)),
            Err(Error::OutOfRange(_))
        ));
    }

    #[test]
    fn classification() {
        let stab = |t: &str| GridMove::Stabilize {
            column: 1,
            row: 1,
            kind: t.parse().unwrap(),
        };
        assert_eq!(stab("X:SE").classify(), MoveClass::Legendrian);
        assert_eq!(stab("O:NW").classify(), MoveClass::Legendrian);
        assert_eq!(stab("O:SW").classify(), MoveClass::TransverseOnly);
        assert_eq!(stab("X:NE").classify(), MoveClass::TransverseOnly);
        assert_eq!(stab("X:SW").classify(), MoveClass::PositiveStab);
        assert_eq!(stab("O:NE").classify(), MoveClass::PositiveStab);
        assert_eq!(GridMove::CommuteRows(2).classify(), MoveClass::Legendrian);
    }

    #[test]
    fn normalize_unknot() {
        let g = normalize_corners(&unknot());
        assert_eq!(g.n(), 4);
        assert_eq!(g.marker_at(3, 3), Some(Marker::X));
        assert_eq!(g.marker_at(0, 0), Some(Marker::O));
        assert_eq!(g.component_count(), 1);
        assert_eq!(normalize_corners(&g), g);
    }

    #[test]
    fn connect_sum_of_two_unknots() {
        let g1 = GridDiagram::from_sigma(&[2, 1], &[1, 2]).unwrap();
        let g2 = GridDiagram::from_sigma(&[1, 2], &[2, 1]).unwrap();
        let s = connect_sum(&g1, &g2).unwrap();
        assert_eq!(s.sigma_o(), vec![2, 1, 3]);
        assert_eq!(s.sigma_x(), vec![1, 3, 2]);
        assert_eq!(s.component_count(), 1);
        assert!(matches!(
            connect_sum(&g2, &g1),
            Err(Error::CornerConditionUnmet)
        ));
    }

    #[test]
    fn trefoil_sum_size() {
        let s = connect_sum_aligned(&trefoil(), &trefoil()).unwrap();
        assert_eq!(s.n(), 9);
        assert_eq!(s.component_count(), 1);
    }

    #[test]
    fn script_round_trip() {
        let script = "cycR 1\n# comment\ncommC 3\nstab X:NW 2 4\ndestab O:SE 1 1\n";
        let moves = parse_script(script).unwrap();
        assert_eq!(moves.len(), 4);
        let text: Vec<String> = moves.iter().map(|m| m.to_string()).collect();
        assert_eq!(text, vec!["cycR 1", "commC 3", "stab X:NW 2 4", "destab O:SE 1 1"]);
        assert!(matches!(
            parse_script("cycR 1\nfoo"),
            Err(Error::Script { line: 2, .. })
        ));
    }
}

//! Grid diagrams, the knot they trace, and the Legendrian front of the mirror.
//!
//! Columns and rows are stored 0-based: the O of column `c` sits in cell
//! `(c, o[c])` and the X in cell `(c, x[c])`. Cell `(c, r)` spans vertical lines
//! `c..c+1` and horizontal lines `r..r+1`. The text format and every public
//! accessor that talks about "sigma" use the 1-based convention of the grid file.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GridDiagram {
    o: Vec<usize>,
    x: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Marker {
    O,
    X,
}

impl Marker {
    pub fn other(self) -> Marker {
        match self {
            Marker::O => Marker::X,
            Marker::X => Marker::O,
        }
    }
}

impl fmt::Display for Marker {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Marker::O => "O",
            Marker::X => "X",
        })
    }
}

fn check_permutation(field: &'static str, rows: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    for (c, &r) in rows.iter().enumerate() {
        if r >= n {
            return Err(Error::NotPermutation {
                field,
                n,
                detail: format!("column {} has row {} outside 1..{}", c + 1, r + 1, n),
            });
        }
        if seen[r] {
            return Err(Error::NotPermutation {
                field,
                n,
                detail: format!("row {} used twice", r + 1),
            });
        }
        seen[r] = true;
    }
    Ok(())
}

impl GridDiagram {
    /// Builds a grid from 0-based marker rows, one entry per column.
    pub fn new(o: Vec<usize>, x: Vec<usize>) -> Result<Self> {
        let n = o.len();
        if x.len() != n {
            return Err(Error::SizeMismatch {
                field: "X",
                expected: n,
                found: x.len(),
            });
        }
        if n < 2 {
            return Err(Error::TooSmall(n));
        }
        check_permutation("O", &o, n)?;
        check_permutation("X", &x, n)?;
        if let Some(c) = (0..n).find(|&c| o[c] == x[c]) {
            return Err(Error::MarkerCollision {
                column: c + 1,
                row: o[c] + 1,
            });
        }
        Ok(GridDiagram { o, x })
    }

    /// Builds a grid from 1-based `sigma_O`, `sigma_X` as written in grid files.
    pub fn from_sigma(sigma_o: &[usize], sigma_x: &[usize]) -> Result<Self> {
        let n = sigma_o.len();
        let lower = |field: &'static str, s: &[usize]| -> Result<Vec<usize>> {
            s.iter()
                .map(|&v| {
                    if v == 0 || v > n {
                        Err(Error::NotPermutation {
                            field,
                            n,
                            detail: format!("entry {v} outside 1..{n}"),
                        })
                    } else {
                        Ok(v - 1)
                    }
                })
                .collect()
        };
        GridDiagram::new(lower("O", sigma_o)?, lower("X", sigma_x)?)
    }

    /// Parses the grid file format: `n=<int>`, `O=<rows>`, `X=<rows>`, with `#`
    /// comment lines. Fields may also be separated by `;` on a single line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut n = None;
        let mut o = None;
        let mut x = None;
        let fields = text
            .lines()
            .filter(|l| !l.trim_start().starts_with('#'))
            .flat_map(|l| l.split(';'));
        for raw in fields {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got {line:?}")))?;
            let value = value.trim();
            match key.trim() {
                "n" => {
                    let v: usize = value
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad grid size {value:?}")))?;
                    n = Some(v);
                }
                k @ ("O" | "X") => {
                    let entries = value
                        .split(',')
                        .map(|s| {
                            s.trim()
                                .parse::<usize>()
                                .map_err(|_| Error::Parse(format!("bad {k} entry {s:?}")))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    if k == "O" {
                        o = Some(entries);
                    } else {
                        x = Some(entries);
                    }
                }
                other => return Err(Error::Parse(format!("unknown field {other:?}"))),
            }
        }
        let n = n.ok_or_else(|| Error::Parse("missing n=".into()))?;
        let o = o.ok_or_else(|| Error::Parse("missing O=".into()))?;
        let x = x.ok_or_else(|| Error::Parse("missing X=".into()))?;
        if n < 2 {
            return Err(Error::TooSmall(n));
        }
        for (field, v) in [("O", &o), ("X", &x)] {
            if v.len() != n {
                return Err(Error::SizeMismatch {
                    field,
                    expected: n,
                    found: v.len(),
                });
            }
        }
        GridDiagram::from_sigma(&o, &x)
    }

    /// Serializes in the grid file format.
    pub fn to_file_string(&self) -> String {
        let join = |v: &[usize]| {
            v.iter()
                .map(|r| (r + 1).to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        format!("n={}\nO={}\nX={}\n", self.n(), join(&self.o), join(&self.x))
    }

    pub fn n(&self) -> usize {
        self.o.len()
    }

    /// 0-based row of the O in each column.
    pub fn o_rows(&self) -> &[usize] {
        &self.o
    }

    /// 0-based row of the X in each column.
    pub fn x_rows(&self) -> &[usize] {
        &self.x
    }

    pub fn sigma_o(&self) -> Vec<usize> {
        self.o.iter().map(|r| r + 1).collect()
    }

    pub fn sigma_x(&self) -> Vec<usize> {
        self.x.iter().map(|r| r + 1).collect()
    }

    /// Marker in 0-based cell `(column, row)`, if any.
    pub fn marker_at(&self, column: usize, row: usize) -> Option<Marker> {
        if self.o[column] == row {
            Some(Marker::O)
        } else if self.x[column] == row {
            Some(Marker::X)
        } else {
            None
        }
    }

    /// 0-based column of `marker` in `row`.
    pub fn column_of(&self, marker: Marker, row: usize) -> usize {
        let rows = match marker {
            Marker::O => &self.o,
            Marker::X => &self.x,
        };
        rows.iter().position(|&r| r == row).expect("valid grid")
    }

    /// Number of link components: the cycles of `sigma_X^-1 . sigma_O`.
    pub fn component_count(&self) -> usize {
        let n = self.n();
        let mut x_inv = vec![0; n];
        for (c, &r) in self.x.iter().enumerate() {
            x_inv[r] = c;
        }
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut c = start;
            while !seen[c] {
                seen[c] = true;
                c = x_inv[self.o[c]];
            }
        }
        cycles
    }

    pub fn ensure_knot(&self) -> Result<()> {
        match self.component_count() {
            1 => Ok(()),
            k => Err(Error::MultiComponent(k)),
        }
    }

    /// Reflection across the main diagonal. The grid of a knot `K` read this way
    /// describes the mirror, so this is the utility for recovering `K` itself.
    pub fn transpose(&self) -> GridDiagram {
        let n = self.n();
        let mut o = vec![0; n];
        let mut x = vec![0; n];
        for c in 0..n {
            o[self.o[c]] = c;
            x[self.x[c]] = c;
        }
        GridDiagram { o, x }
    }

    /// ASCII picture, top row first, characters `.`, `X`, `O`.
    pub fn render(&self) -> String {
        let n = self.n();
        let mut out = String::with_capacity(n * (n + 1));
        for row in (0..n).rev() {
            for col in 0..n {
                out.push(match self.marker_at(col, row) {
                    Some(Marker::O) => 'O',
                    Some(Marker::X) => 'X',
                    None => '.',
                });
            }
            out.push('\n');
        }
        out
    }

    pub fn front_projection(&self) -> Result<FrontDiagram> {
        self.ensure_knot()?;
        Ok(FrontDiagram::trace(self))
    }

    pub fn classical_invariants(&self) -> Result<ClassicalInvariants> {
        Ok(self.front_projection()?.classical_invariants())
    }
}

impl fmt::Display for GridDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_file_string())
    }
}

impl std::str::FromStr for GridDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GridDiagram::parse(s)
    }
}

/// One straight piece of the rectilinear projection, oriented from `start` to
/// `end` (1-based cell coordinates of the two markers it joins).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Segment {
    pub start: (usize, usize),
    pub end: (usize, usize),
}

impl Segment {
    pub fn is_vertical(&self) -> bool {
        self.start.0 == self.end.0
    }

    /// Unit direction in grid coordinates (x right, y up).
    fn direction(&self) -> (i64, i64) {
        let dx = (self.end.0 as i64 - self.start.0 as i64).signum();
        let dy = (self.end.1 as i64 - self.start.1 as i64).signum();
        (dx, dy)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Crossing {
    /// `(column, row)` of the vertical and horizontal strand, 1-based.
    pub position: (usize, usize),
    pub sign: i8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CuspKind {
    Up,
    Down,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Cusp {
    /// Marker cell at the corner, 1-based.
    pub position: (usize, usize),
    pub kind: CuspKind,
}

/// The grid projection with front data attached.
///
/// After a 45 degree clockwise turn, north and east point rightwards and south
/// and west point leftwards, so a corner is a cusp exactly when the traversal
/// switches between those two groups. The horizontal strand is in front at
/// every crossing, which is the vertical-over grid convention with the
/// crossings reversed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrontDiagram {
    pub path: Vec<Segment>,
    pub crossings: Vec<Crossing>,
    pub cusps: Vec<Cusp>,
}

// Sign of the horizontal component after rotation: north/east positive.
fn rightward(d: (i64, i64)) -> i64 {
    d.0 + d.1
}

// Sign of the vertical component after rotation: north/west positive.
fn upward(d: (i64, i64)) -> i64 {
    d.1 - d.0
}

impl FrontDiagram {
    fn trace(g: &GridDiagram) -> FrontDiagram {
        let n = g.n();
        let mut path = Vec::with_capacity(2 * n);
        let mut col = 0;
        loop {
            // Columns run X -> O, rows run O -> X.
            let o_row = g.o[col];
            path.push(Segment {
                start: (col + 1, g.x[col] + 1),
                end: (col + 1, o_row + 1),
            });
            let next = g.column_of(Marker::X, o_row);
            path.push(Segment {
                start: (col + 1, o_row + 1),
                end: (next + 1, o_row + 1),
            });
            col = next;
            if col == 0 {
                break;
            }
        }

        let mut crossings = Vec::new();
        for v in path.iter().filter(|s| s.is_vertical()) {
            for h in path.iter().filter(|s| !s.is_vertical()) {
                let c = v.start.0;
                let r = h.start.1;
                let (r0, r1) = (v.start.1.min(v.end.1), v.start.1.max(v.end.1));
                let (c0, c1) = (h.start.0.min(h.end.0), h.start.0.max(h.end.0));
                if c0 < c && c < c1 && r0 < r && r < r1 {
                    // sign of over x under with the horizontal strand over
                    let sign = h.direction().0 * v.direction().1;
                    crossings.push(Crossing {
                        position: (c, r),
                        sign: sign as i8,
                    });
                }
            }
        }
        crossings.sort_by_key(|c| c.position);

        let mut cusps = Vec::new();
        let len = path.len();
        for k in 0..len {
            let incoming = path[k].direction();
            let outgoing = path[(k + 1) % len].direction();
            if rightward(incoming) != rightward(outgoing) {
                let kind = if upward(incoming) < 0 {
                    CuspKind::Down
                } else {
                    CuspKind::Up
                };
                cusps.push(Cusp {
                    position: path[k].end,
                    kind,
                });
            }
        }
        FrontDiagram {
            path,
            crossings,
            cusps,
        }
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    pub fn cusp_count(&self, kind: CuspKind) -> usize {
        self.cusps.iter().filter(|c| c.kind == kind).count()
    }

    pub fn classical_invariants(&self) -> ClassicalInvariants {
        let down = self.cusp_count(CuspKind::Down) as i64;
        let up = self.cusp_count(CuspKind::Up) as i64;
        let tb = self.writhe() - (up + down) / 2;
        let r = (down - up) / 2;
        ClassicalInvariants::new(tb, r)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassicalInvariants {
    pub tb: i64,
    pub r: i64,
    pub sl_plus: i64,
    pub sl_minus: i64,
}

impl ClassicalInvariants {
    pub fn new(tb: i64, r: i64) -> Self {
        ClassicalInvariants {
            tb,
            r,
            sl_plus: tb - r,
            sl_minus: tb + r,
        }
    }
}

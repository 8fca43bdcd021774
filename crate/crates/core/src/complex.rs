//! Generators of the grid chain complex, their Maslov and Alexander gradings,
//! and the rectangle differentials.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use smallvec::SmallVec;

use crate::grid::GridDiagram;

pub type Perm = SmallVec<[u8; 16]>;

/// A generator: vertical line `i` meets horizontal line `perm[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridState {
    perm: Perm,
}

impl GridState {
    pub fn new(perm: &[usize]) -> Option<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] || n > u8::MAX as usize {
                return None;
            }
            seen[p] = true;
        }
        Some(GridState {
            perm: perm.iter().map(|&p| p as u8).collect(),
        })
    }

    pub(crate) fn from_perm(perm: Perm) -> Self {
        GridState { perm }
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[u8] {
        &self.perm
    }

    pub fn row(&self, line: usize) -> usize {
        self.perm[line] as usize
    }

    pub fn points(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.perm.iter().enumerate().map(|(i, &p)| (i, p as usize))
    }

    pub fn swapped(&self, i: usize, j: usize) -> GridState {
        let mut perm = self.perm.clone();
        perm.swap(i, j);
        GridState { perm }
    }
}

impl fmt::Display for GridState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (i, p)) in self.points().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({i},{p})")?;
        }
        f.write_str("}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Bigrading {
    pub maslov: i32,
    pub alexander: i32,
}

impl Bigrading {
    pub const fn new(maslov: i32, alexander: i32) -> Self {
        Bigrading { maslov, alexander }
    }
}

impl std::ops::Add for Bigrading {
    type Output = Bigrading;

    fn add(self, rhs: Bigrading) -> Bigrading {
        Bigrading::new(self.maslov + rhs.maslov, self.alexander + rhs.alexander)
    }
}

impl std::ops::Sub for Bigrading {
    type Output = Bigrading;

    fn sub(self, rhs: Bigrading) -> Bigrading {
        Bigrading::new(self.maslov - rhs.maslov, self.alexander - rhs.alexander)
    }
}

impl fmt::Display for Bigrading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.maslov, self.alexander)
    }
}

/// Precomputed marker data used by the grading and rectangle kernels.
#[derive(Clone, Debug)]
pub struct GridKernel {
    n: usize,
    o: Vec<usize>,
    x: Vec<usize>,
    // I(O,O) + 1 and I(X,X) + 1
    o_const: i64,
    x_const: i64,
}

fn pairs_sw(rows: &[usize]) -> i64 {
    let mut count = 0;
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            if rows[i] < rows[j] {
                count += 1;
            }
        }
    }
    count
}

impl GridKernel {
    pub fn new(g: &GridDiagram) -> Self {
        let o = g.o_rows().to_vec();
        let x = g.x_rows().to_vec();
        GridKernel {
            n: g.n(),
            o_const: pairs_sw(&o) + 1,
            x_const: pairs_sw(&x) + 1,
            o,
            x,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    // I(p, M) + I(M, p) for the point set p against markers at cell centres.
    fn mixed(perm: &[u8], markers: &[usize]) -> i64 {
        let mut count = 0;
        for (i, &p) in perm.iter().enumerate() {
            let p = p as usize;
            for (c, &m) in markers.iter().enumerate() {
                // (i, p) strictly south-west of (c + 1/2, m + 1/2)
                if i <= c && p <= m {
                    count += 1;
                }
                // (c + 1/2, m + 1/2) strictly south-west of (i, p)
                if c < i && m < p {
                    count += 1;
                }
            }
        }
        count
    }

    fn self_pairs(perm: &[u8]) -> i64 {
        let mut count = 0;
        for i in 0..perm.len() {
            for j in i + 1..perm.len() {
                if perm[i] < perm[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Absolute `(M, A)` from the planar lattice-count formulas.
    pub fn bigrading(&self, perm: &[u8]) -> Bigrading {
        let own = Self::self_pairs(perm);
        let m_o = own - Self::mixed(perm, &self.o) + self.o_const;
        let m_x = own - Self::mixed(perm, &self.x) + self.x_const;
        let twice_a = m_o - m_x - (self.n as i64 - 1);
        debug_assert!(twice_a % 2 == 0, "Alexander grading must be integral for knots");
        Bigrading::new(m_o as i32, (twice_a / 2) as i32)
    }

    /// Visits every empty rectangle leaving `perm`. The callback gets the two
    /// moving vertical lines `(i, j)`, the height, the number of X markers inside
    /// and a bitmask of the O markers inside (bit `c` for the O of column `c`).
    ///
    /// With `marker_free` set only rectangles without markers are reported.
    #[inline]
    pub fn for_each_rectangle(
        &self,
        perm: &[u8],
        marker_free: bool,
        mut f: impl FnMut(usize, usize, usize, u32, u64),
    ) {
        let n = self.n;
        for i in 0..n {
            let base = perm[i] as usize;
            let offset = |r: usize| (r + n - base) % n;
            // smallest offset of a generator point strictly between the columns
            let mut min_point = n;
            // smallest offsets of markers in the covered cell columns
            let mut min_marker = n;
            let mut o_off: SmallVec<[(usize, usize); 16]> = SmallVec::new();
            let mut x_off: SmallVec<[usize; 16]> = SmallVec::new();
            for w in 1..n {
                let cell = (i + w - 1) % n;
                let oo = offset(self.o[cell]);
                let xo = offset(self.x[cell]);
                min_marker = min_marker.min(oo).min(xo);
                if marker_free && min_marker == 0 {
                    break;
                }
                if !marker_free {
                    o_off.push((cell, oo));
                    x_off.push(xo);
                }
                let j = (i + w) % n;
                let h = offset(perm[j] as usize);
                if h < min_point {
                    if marker_free {
                        if h <= min_marker {
                            f(i, j, h, 0, 0);
                        }
                    } else {
                        let nx = x_off.iter().filter(|&&d| d < h).count() as u32;
                        let mut mask = 0u64;
                        for &(c, d) in &o_off {
                            if d < h {
                                mask |= 1 << c;
                            }
                        }
                        f(i, j, h, nx, mask);
                    }
                }
                min_point = min_point.min(h);
                if min_point <= 1 {
                    break;
                }
            }
        }
    }
}

/// An empty rectangle from `from` to `to`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rectangle {
    pub from: GridState,
    pub to: GridState,
    /// Left and right vertical lines (the rectangle runs rightwards from `left`).
    pub left: usize,
    pub right: usize,
    pub width: usize,
    pub height: usize,
    /// Columns of the O markers inside.
    pub o_inside: Vec<usize>,
    pub n_o: usize,
    pub n_x: usize,
}

pub fn bigrading(g: &GridDiagram, x: &GridState) -> Bigrading {
    GridKernel::new(g).bigrading(x.perm())
}

/// All empty rectangles leaving `x`, annotated with their marker counts.
pub fn empty_rectangles(g: &GridDiagram, x: &GridState) -> Vec<Rectangle> {
    assert!(g.n() <= 64, "rectangle enumeration supports grids up to 64x64");
    let k = GridKernel::new(g);
    let n = g.n();
    let mut out = Vec::new();
    k.for_each_rectangle(x.perm(), false, |i, j, h, nx, mask| {
        let o_inside: Vec<usize> = (0..n).filter(|c| mask & (1 << c) != 0).collect();
        out.push(Rectangle {
            from: x.clone(),
            to: x.swapped(i, j),
            left: i,
            right: j,
            width: (j + n - i) % n,
            height: h,
            n_o: o_inside.len(),
            o_inside,
            n_x: nx as usize,
        });
    });
    out
}

/// Exponent vector of a monomial in `U_1 .. U_n` (one `U` per O marker).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub SmallVec<[u16; 16]>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(SmallVec::from_elem(0, n))
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn from_mask(n: usize, mask: u64) -> Self {
        Monomial((0..n).map(|c| ((mask >> c) & 1) as u16).collect())
    }

    /// All exponent vectors of total degree `d` in `n` variables.
    pub fn all_of_degree(n: usize, d: u32) -> Vec<Monomial> {
        fn rec(n: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
            if cur.len() + 1 == n {
                cur.push(left as u16);
                out.push(Monomial(cur.iter().copied().collect()));
                cur.pop();
                return;
            }
            for e in 0..=left {
                cur.push(e as u16);
                rec(n, left - e, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, d, &mut Vec::with_capacity(n), &mut out);
        }
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if e == 1 {
                write!(f, "U{}", i + 1)?;
            } else {
                write!(f, "U{}^{}", i + 1, e)?;
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("1")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    /// Rectangles avoiding every marker; all `U` set to zero.
    Tilde,
    /// Rectangles avoiding the X markers, weighted by the O markers they cover.
    Minus0,
}

/// A formal F2-sum of `U`-monomials times generators; terms occurring an even
/// number of times cancel.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Chain {
    terms: BTreeMap<(GridState, Monomial), ()>,
}

impl Chain {
    pub fn new() -> Self {
        Chain::default()
    }

    pub fn generator(x: GridState) -> Self {
        let n = x.n();
        let mut c = Chain::new();
        c.toggle(x, Monomial::one(n));
        c
    }

    pub fn toggle(&mut self, x: GridState, m: Monomial) {
        let key = (x, m);
        if self.terms.remove(&key).is_none() {
            self.terms.insert(key, ());
        }
    }

    pub fn add(&mut self, other: &Chain) {
        for (x, m) in other.terms() {
            self.toggle(x.clone(), m.clone());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GridState, &Monomial)> {
        self.terms.keys().map(|(x, m)| (x, m))
    }
}

/// `differential(x)` in the requested flavor.
pub fn differential(g: &GridDiagram, x: &GridState, flavor: Flavor) -> Chain {
    let k = GridKernel::new(g);
    differential_with(&k, x, &Monomial::one(g.n()), flavor)
}

pub(crate) fn differential_with(
    k: &GridKernel,
    x: &GridState,
    coeff: &Monomial,
    flavor: Flavor,
) -> Chain {
    let n = k.n();
    let mut out = Chain::new();
    match flavor {
        Flavor::Tilde => k.for_each_rectangle(x.perm(), true, |i, j, _, _, _| {
            out.toggle(x.swapped(i, j), coeff.clone());
        }),
        Flavor::Minus0 => k.for_each_rectangle(x.perm(), false, |i, j, _, nx, mask| {
            if nx == 0 {
                out.toggle(x.swapped(i, j), coeff.mul(&Monomial::from_mask(n, mask)));
            }
        }),
    }
    out
}

/// Applies the differential to a whole chain.
pub fn differential_chain(g: &GridDiagram, c: &Chain, flavor: Flavor) -> Chain {
    let k = GridKernel::new(g);
    let mut out = Chain::new();
    for (x, m) in c.terms() {
        out.add(&differential_with(&k, x, m, flavor));
    }
    out
}

/// Lexicographic rank of a permutation of `0..n`.
pub fn perm_rank(perm: &[u8]) -> u64 {
    let n = perm.len();
    let mut rank = 0u64;
    let mut used: u64 = 0;
    for (i, &p) in perm.iter().enumerate() {
        let smaller_free = (p as u64) - (used & ((1u64 << p) - 1)).count_ones() as u64;
        rank = rank * (n - i) as u64 + smaller_free;
        used |= 1 << p;
    }
    rank
}

/// Inverse of [`perm_rank`].
pub fn perm_unrank(n: usize, mut rank: u64) -> Perm {
    let mut digits: SmallVec<[u64; 16]> = SmallVec::from_elem(0, n);
    for i in (0..n).rev() {
        let base = (n - i) as u64;
        digits[i] = rank % base;
        rank /= base;
    }
    let mut free: SmallVec<[u8; 16]> = (0..n as u8).collect();
    digits
        .iter()
        .map(|&d| free.remove(d as usize))
        .collect()
}

/// Advances to the lexicographically next permutation; false after the last.
pub fn next_perm(p: &mut [u8]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
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

    fn all_states(n: usize) -> Vec<GridState> {
        let mut p: Perm = (0..n as u8).collect();
        let mut out = vec![GridState::from_perm(p.clone())];
        while next_perm(&mut p) {
            out.push(GridState::from_perm(p.clone()));
        }
        out
    }

    #[test]
    fn unknot_gradings() {
        let g = unknot();
        let plus = GridState::new(&[1, 0]).unwrap();
        let other = GridState::new(&[0, 1]).unwrap();
        assert_eq!(bigrading(&g, &plus), Bigrading::new(0, 0));
        assert_eq!(bigrading(&g, &other), Bigrading::new(-1, -1));
    }

    #[test]
    fn unknot_rectangles_are_all_marked() {
        let g = unknot();
        for x in all_states(2) {
            let rects = empty_rectangles(&g, &x);
            assert_eq!(rects.len(), 2);
            assert!(rects.iter().all(|r| r.n_o + r.n_x == 1));
            assert!(differential(&g, &x, Flavor::Tilde).is_zero());
        }
    }

    // Brute-force cell scan for a rectangle from `x` running right from line
    // `i` to line `j`.
    fn scan(g: &GridDiagram, x: &GridState, i: usize, j: usize) -> (bool, usize, usize) {
        let n = g.n();
        let w = (j + n - i) % n;
        let h = (x.row(j) + n - x.row(i)) % n;
        let mut empty = true;
        let (mut no, mut nx) = (0, 0);
        for dc in 0..w {
            let col = (i + dc) % n;
            for dr in 0..h {
                let row = (x.row(i) + dr) % n;
                match g.marker_at(col, row) {
                    Some(crate::grid::Marker::O) => no += 1,
                    Some(crate::grid::Marker::X) => nx += 1,
                    None => {}
                }
            }
            if dc > 0 {
                let off = (x.row(col) + n - x.row(i)) % n;
                if off > 0 && off < h {
                    empty = false;
                }
            }
        }
        (empty, no, nx)
    }

    #[test]
    fn rectangles_match_cell_scan() {
        let g = trefoil();
        for x in all_states(5) {
            let rects = empty_rectangles(&g, &x);
            let mut expected = Vec::new();
            for i in 0..5 {
                for j in 0..5 {
                    if i != j {
                        let (empty, no, nx) = scan(&g, &x, i, j);
                        if empty {
                            expected.push((i, j, no, nx));
                        }
                    }
                }
            }
            let mut got: Vec<_> = rects.iter().map(|r| (r.left, r.right, r.n_o, r.n_x)).collect();
            got.sort();
            expected.sort();
            assert_eq!(got, expected, "state {x}");
            assert!(rects.len() <= 5 * 4);
        }
    }

    #[test]
    fn complementary_rectangles_partition_o_markers() {
        // The two rectangles from x to y, plus the two mixed blocks (column
        // span of one, row span of the other), tile the torus.
        let g = GridDiagram::from_sigma(&[1, 2, 3, 4, 5], &[3, 5, 4, 1, 2]).unwrap();
        for x in all_states(5) {
            for i in 0..5 {
                for j in 0..5 {
                    if i == j {
                        continue;
                    }
                    let (_, a, _) = scan(&g, &x, i, j);
                    let (_, b, _) = scan(&g, &x, j, i);
                    // O markers of the grid not covered by either rectangle
                    let rest = (0..5)
                        .filter(|&c| {
                            let in_cols_a = (c + 5 - i) % 5 < (j + 5 - i) % 5;
                            let r = g.o_rows()[c];
                            let in_rows_a =
                                (r + 5 - x.row(i)) % 5 < (x.row(j) + 5 - x.row(i)) % 5;
                            in_cols_a != in_rows_a
                        })
                        .count();
                    assert_eq!(a + b + rest, 5);
                }
            }
        }
    }

    #[test]
    fn tilde_squares_to_zero_on_trefoil() {
        let g = trefoil();
        for x in all_states(5) {
            let d = differential(&g, &x, Flavor::Tilde);
            assert!(differential_chain(&g, &d, Flavor::Tilde).is_zero());
            let d = differential(&g, &x, Flavor::Minus0);
            assert!(differential_chain(&g, &d, Flavor::Minus0).is_zero());
        }
    }

    #[test]
    fn grading_laws_on_trefoil() {
        let g = trefoil();
        let k = GridKernel::new(&g);
        for x in all_states(5) {
            let gx = k.bigrading(x.perm());
            for r in empty_rectangles(&g, &x) {
                if r.n_x > 0 {
                    continue;
                }
                let gy = k.bigrading(r.to.perm());
                let a = r.n_o as i32;
                assert_eq!(gx.maslov - gy.maslov, 1 - 2 * a);
                assert_eq!(gx.alexander - gy.alexander, -a);
            }
        }
    }

    #[test]
    fn rank_round_trip() {
        for x in all_states(5) {
            let r = perm_rank(x.perm());
            assert_eq!(perm_unrank(5, r).as_slice(), x.perm());
        }
        assert_eq!(perm_rank(&[0, 1, 2, 3]), 0);
        assert_eq!(perm_rank(&[3, 2, 1, 0]), 23);
    }

    #[test]
    fn monomials_of_degree() {
        assert_eq!(Monomial::all_of_degree(3, 2).len(), 6);
        assert_eq!(Monomial::all_of_degree(4, 0).len(), 1);
        assert!(Monomial::all_of_degree(3, 2).iter().all(|m| m.degree() == 2));
    }
}

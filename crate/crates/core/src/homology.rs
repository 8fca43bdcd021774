//! Bigraded homology of the fully blocked grid complex, the Alexander
//! polynomial, and cycle-vanishing checks.
//!
//! The engine enumerates all `n!` generators once into a grading table, then
//! works one Alexander grading at a time: the marker-free differential
//! preserves `A`, so distinct Alexander fibers are independent and are
//! reduced in parallel. Inside a fiber the boundary blocks are reduced from
//! the top Maslov grading down, and pivot rows found in one block clear the
//! matching columns of the next.

use std::collections::{BTreeMap, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::complex::{
    differential_with, factorial, next_perm, perm_rank, perm_unrank, Bigrading, Chain, Flavor,
    GridKernel, GridState, Monomial, Perm,
};
use crate::error::{Error, Result};
use crate::f2::{normalize_mod2, Reduction, SparseF2Matrix};
use crate::grid::GridDiagram;
use crate::poly::{F2Laurent, Laurent2};

pub const DEFAULT_MAX_SLICE: usize = 5_000_000;
pub const MAX_SLICE_ENV: &str = "GRIDHFK_MAX_SLICE";
const SAMPLES: usize = 20_000;
const EXACT_ESTIMATE_LIMIT: u128 = 40_320;
const MAX_ENUMERABLE_N: usize = 20;

#[derive(Clone, Debug)]
pub struct HomologyOptions {
    /// Largest Alexander fiber (in generators) the engine will build.
    pub max_slice: usize,
    /// Ignore `max_slice`.
    pub force: bool,
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
}

impl Default for HomologyOptions {
    fn default() -> Self {
        let max_slice = std::env::var(MAX_SLICE_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_MAX_SLICE);
        HomologyOptions {
            max_slice,
            force: false,
            threads: None,
        }
    }
}

impl HomologyOptions {
    pub fn forced() -> Self {
        HomologyOptions {
            force: true,
            ..Default::default()
        }
    }

    pub(crate) fn run<T: Send>(&self, f: impl FnOnce() -> T + Send) -> T {
        match self.threads {
            Some(k) => rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .expect("thread pool")
                .install(f),
            None => f(),
        }
    }
}

/// Estimated size of the largest Alexander fiber: exact for small grids,
/// otherwise from a fixed-seed uniform sample of generators.
pub fn estimate_largest_fiber(g: &GridDiagram) -> u128 {
    let n = g.n();
    let total = factorial(n);
    let k = GridKernel::new(g);
    let mut counts: HashMap<i32, u64> = HashMap::new();
    if total <= EXACT_ESTIMATE_LIMIT {
        let mut p: Perm = (0..n as u8).collect();
        loop {
            *counts.entry(k.bigrading(&p).alexander).or_default() += 1;
            if !next_perm(&mut p) {
                break;
            }
        }
        return counts.values().copied().max().unwrap_or(0) as u128;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x6772_6964);
    let mut p: Perm = (0..n as u8).collect();
    for _ in 0..SAMPLES {
        for i in (1..n).rev() {
            let j = rng.gen_range(0..=i);
            p.swap(i, j);
        }
        *counts.entry(k.bigrading(&p).alexander).or_default() += 1;
    }
    let max = counts.values().copied().max().unwrap_or(0) as u128;
    max * total / SAMPLES as u128
}

pub fn check_budget(g: &GridDiagram, opts: &HomologyOptions) -> Result<()> {
    let n = g.n();
    if n > MAX_ENUMERABLE_N {
        return Err(Error::BudgetExceeded {
            estimated: u128::MAX,
            cap: opts.max_slice,
        });
    }
    if opts.force || factorial(n) <= opts.max_slice as u128 {
        return Ok(());
    }
    let estimated = estimate_largest_fiber(g);
    if estimated > opts.max_slice as u128 {
        return Err(Error::BudgetExceeded {
            estimated,
            cap: opts.max_slice,
        });
    }
    Ok(())
}

/// Every generator of a grid, bucketed by bigrading.
pub struct GridComplex {
    grid: GridDiagram,
    kernel: GridKernel,
    gradings: Vec<Bigrading>,
    local: Vec<u32>,
    // keyed by (A, M); generator ranks in increasing order
    slices: BTreeMap<(i32, i32), Vec<u64>>,
}

impl GridComplex {
    pub fn new(g: &GridDiagram, opts: &HomologyOptions) -> Result<Self> {
        g.ensure_knot()?;
        check_budget(g, opts)?;
        Ok(opts.run(|| GridComplex::enumerate(g)))
    }

    fn enumerate(g: &GridDiagram) -> GridComplex {
        let n = g.n();
        let total = factorial(n) as usize;
        let kernel = GridKernel::new(g);
        const CHUNK: usize = 1 << 12;
        let mut gradings = vec![Bigrading::new(0, 0); total];
        gradings
            .par_chunks_mut(CHUNK)
            .enumerate()
            .for_each(|(k, chunk)| {
                let mut p = perm_unrank(n, (k * CHUNK) as u64);
                let len = chunk.len();
                for (idx, slot) in chunk.iter_mut().enumerate() {
                    *slot = kernel.bigrading(&p);
                    if idx + 1 < len {
                        next_perm(&mut p);
                    }
                }
            });
        let mut slices: BTreeMap<(i32, i32), Vec<u64>> = BTreeMap::new();
        let mut local = vec![0u32; total];
        for (rank, gr) in gradings.iter().enumerate() {
            let slice = slices.entry((gr.alexander, gr.maslov)).or_default();
            local[rank] = slice.len() as u32;
            slice.push(rank as u64);
        }
        GridComplex {
            grid: g.clone(),
            kernel,
            gradings,
            local,
            slices,
        }
    }

    pub fn grid(&self) -> &GridDiagram {
        &self.grid
    }

    pub fn generator_count(&self) -> usize {
        self.gradings.len()
    }

    pub fn grading_of(&self, x: &GridState) -> Bigrading {
        self.gradings[perm_rank(x.perm()) as usize]
    }

    pub fn slice_len(&self, gr: Bigrading) -> usize {
        self.slices
            .get(&(gr.alexander, gr.maslov))
            .map_or(0, Vec::len)
    }

    /// Nonempty bigradings with their generator counts.
    pub fn slice_sizes(&self) -> BTreeMap<Bigrading, usize> {
        self.slices
            .iter()
            .map(|(&(a, m), v)| (Bigrading::new(m, a), v.len()))
            .collect()
    }

    pub fn generator(&self, gr: Bigrading, index: usize) -> GridState {
        let rank = self.slices[&(gr.alexander, gr.maslov)][index];
        GridState::from_perm(perm_unrank(self.grid.n(), rank))
    }

    fn local_index(&self, perm: &[u8]) -> u32 {
        self.local[perm_rank(perm) as usize]
    }

    /// `sum_x T^A(x)` over F2.
    pub fn generator_polynomial(&self) -> F2Laurent {
        let mut counts: BTreeMap<i32, usize> = BTreeMap::new();
        for (&(a, _), v) in &self.slices {
            *counts.entry(a).or_default() += v.len();
        }
        F2Laurent::from_exponents(
            counts
                .into_iter()
                .filter(|(_, c)| c % 2 == 1)
                .map(|(a, _)| a),
        )
    }

    /// `sum_x (-1)^M(x) T^A(x)` over the integers.
    pub fn signed_generator_count(&self) -> BTreeMap<i32, i64> {
        let mut out: BTreeMap<i32, i64> = BTreeMap::new();
        for (&(a, m), v) in &self.slices {
            let sign = if m.rem_euclid(2) == 0 { 1 } else { -1 };
            *out.entry(a).or_default() += sign * v.len() as i64;
        }
        out.retain(|_, c| *c != 0);
        out
    }

    pub fn alexander_polynomial(&self) -> Result<F2Laurent> {
        let gen_poly = self.generator_polynomial();
        let divisor = F2Laurent::from_exponents([0, -1]).pow(self.grid.n() as u32 - 1);
        let delta = gen_poly.div_exact(&divisor).ok_or_else(|| {
            Error::DivisionInexact(format!("{gen_poly} by (1 + T^-1)^{}", self.grid.n() - 1))
        })?;
        if !delta.is_symmetric() {
            return Err(Error::AsymmetricResult(delta.to_string()));
        }
        Ok(delta)
    }

    /// Whether `sum_x T^A(x) = delta * (1 + T^-1)^(n-1)` over F2.
    pub fn normalization_identity_holds(&self, delta: &F2Laurent) -> bool {
        let factor = F2Laurent::from_exponents([0, -1]).pow(self.grid.n() as u32 - 1);
        self.generator_polynomial() == delta.mul(&factor)
    }

    /// Boundary block from slice `gr` to the slice one Maslov grading below.
    pub fn boundary_block(&self, gr: Bigrading) -> SparseF2Matrix {
        let below = Bigrading::new(gr.maslov - 1, gr.alexander);
        let rows = self.slice_len(below);
        let Some(cols) = self.slices.get(&(gr.alexander, gr.maslov)) else {
            return SparseF2Matrix::zeros(rows, 0);
        };
        let n = self.grid.n();
        let columns: Vec<Vec<u32>> = cols
            .par_iter()
            .map(|&rank| {
                let mut p = perm_unrank(n, rank);
                let mut col = Vec::new();
                let mut targets: smallvec::SmallVec<[(usize, usize); 16]> = Default::default();
                self.kernel
                    .for_each_rectangle(&p, true, |i, j, _, _, _| targets.push((i, j)));
                for (i, j) in targets {
                    p.swap(i, j);
                    debug_assert_eq!(self.gradings[perm_rank(&p) as usize], below);
                    col.push(self.local_index(&p));
                    p.swap(i, j);
                }
                col
            })
            .collect();
        SparseF2Matrix::from_columns(rows, columns).expect("targets lie in the slice below")
    }

    fn fiber_ranks(&self, a: i32) -> BTreeMap<i32, usize> {
        let ms: Vec<i32> = self
            .slices
            .range((a, i32::MIN)..=(a, i32::MAX))
            .map(|(&(_, m), _)| m)
            .collect();
        // rank of the boundary leaving each Maslov grading
        let mut ranks: BTreeMap<i32, usize> = BTreeMap::new();
        let mut cleared: Option<(i32, Vec<bool>)> = None;
        for &m in ms.iter().rev() {
            let block = self.boundary_block(Bigrading::new(m, a));
            let skip = match &cleared {
                Some((cm, flags)) if *cm == m => Some(flags.as_slice()),
                _ => None,
            };
            let red = Reduction::run(&block, skip, false);
            ranks.insert(m, red.rank());
            let mut flags = vec![false; block.rows()];
            for r in red.pivot_rows() {
                flags[r] = true;
            }
            cleared = Some((m - 1, flags));
        }
        let mut homology = BTreeMap::new();
        for &m in &ms {
            let size = self.slices[&(a, m)].len();
            let out = ranks.get(&m).copied().unwrap_or(0);
            let incoming = ranks.get(&(m + 1)).copied().unwrap_or(0);
            let h = size - out - incoming;
            if h > 0 {
                homology.insert(m, h);
            }
        }
        homology
    }

    /// Ranks of the fully blocked homology in every bigrading.
    pub fn tilde_ranks(&self, opts: &HomologyOptions) -> BTreeMap<Bigrading, usize> {
        let fibers: Vec<i32> = {
            let mut v: Vec<i32> = self.slices.keys().map(|&(a, _)| a).collect();
            v.dedup();
            v
        };
        let per_fiber: Vec<(i32, BTreeMap<i32, usize>)> = opts.run(|| {
            fibers
                .par_iter()
                .map(|&a| (a, self.fiber_ranks(a)))
                .collect()
        });
        let mut out = BTreeMap::new();
        for (a, ranks) in per_fiber {
            for (m, h) in ranks {
                out.insert(Bigrading::new(m, a), h);
            }
        }
        out
    }

    pub fn homology(&self, opts: &HomologyOptions) -> Result<HomologyReport> {
        let tilde = self.tilde_ranks(opts);
        let mut poincare = Laurent2::zero();
        for (gr, &h) in &tilde {
            poincare.add_term(gr.maslov, gr.alexander, h as i64);
        }
        let k = self.grid.n() as u32 - 1;
        let hat_poincare = poincare.div_v_factor(k).ok_or_else(|| {
            Error::DivisionInexact(format!("{poincare} by (1 + q^-1t^-1)^{k}"))
        })?;
        if hat_poincare.terms().any(|(_, _, c)| c < 0) {
            return Err(Error::DivisionInexact(format!(
                "negative rank in quotient {hat_poincare}"
            )));
        }
        Ok(HomologyReport {
            grid_size: self.grid.n(),
            tilde_ranks: tilde,
            poincare,
            alexander_mod2: self.alexander_polynomial()?,
            hat_poincare,
        })
    }

    /// Whether the class of the fully blocked cycle `c` vanishes. `c` is a set
    /// of generators, all in bigrading `gr`.
    pub fn tilde_class_vanishes(&self, c: &[GridState]) -> Result<(Verdict, Option<Vec<GridState>>)> {
        let Some(first) = c.first() else {
            return Ok((Verdict::Vanishes, Some(Vec::new())));
        };
        let gr = self.grading_of(first);
        if c.iter().any(|x| self.grading_of(x) != gr) {
            return Err(Error::NotACycle("tilde (chain is not homogeneous)"));
        }
        let chain = c
            .iter()
            .fold(Chain::new(), |mut acc, x| {
                acc.add(&Chain::generator(x.clone()));
                acc
            });
        let one = Monomial::one(self.grid.n());
        let mut boundary = Chain::new();
        for (x, _) in chain.terms() {
            boundary.add(&differential_with(&self.kernel, x, &one, Flavor::Tilde));
        }
        if !boundary.is_zero() {
            return Err(Error::NotACycle("tilde"));
        }
        if chain.is_zero() {
            return Ok((Verdict::Vanishes, Some(Vec::new())));
        }
        let above = Bigrading::new(gr.maslov + 1, gr.alexander);
        let block = self.boundary_block(above);
        let mut target: Vec<u32> = chain.terms().map(|(x, _)| self.local_index(x.perm())).collect();
        normalize_mod2(&mut target);
        match block.solve_support(&target) {
            Some(pre) => {
                let check = block.mul_support(&pre);
                assert_eq!(check, target, "preimage verification failed");
                let states = pre
                    .iter()
                    .map(|&i| self.generator(above, i as usize))
                    .collect();
                Ok((Verdict::Vanishes, Some(states)))
            }
            None => Ok((Verdict::Survives, None)),
        }
    }

    /// Bounded search for a preimage of `c` under the associated graded minus
    /// differential, over unknowns `U^a y` of total `U`-degree at most `cap`.
    pub fn minus_class_vanishes(&self, c: &Chain, cap: u32) -> Result<Verdict> {
        let n = self.grid.n();
        if c.is_zero() {
            return Ok(Verdict::Vanishes);
        }
        let graded = |x: &GridState, m: &Monomial| {
            let g = self.grading_of(x);
            let d = m.degree() as i32;
            Bigrading::new(g.maslov - 2 * d, g.alexander - d)
        };
        let (x0, m0) = c.terms().next().unwrap();
        let gr = graded(x0, m0);
        if c.terms().any(|(x, m)| graded(x, m) != gr) {
            return Err(Error::NotACycle("minus (chain is not homogeneous)"));
        }
        let mut boundary = Chain::new();
        for (x, m) in c.terms() {
            boundary.add(&differential_with(&self.kernel, x, m, Flavor::Minus0));
        }
        if !boundary.is_zero() {
            return Err(Error::NotACycle("minus"));
        }
        let mut row_index: HashMap<(GridState, Monomial), u32> = HashMap::new();
        let mut index_of = |key: (GridState, Monomial)| {
            let next = row_index.len() as u32;
            *row_index.entry(key).or_insert(next)
        };
        let mut target: Vec<u32> = c.terms().map(|(x, m)| index_of((x.clone(), m.clone()))).collect();
        normalize_mod2(&mut target);
        let mut columns = Vec::new();
        for d in 0..=cap as i32 {
            let key = (gr.alexander + d, gr.maslov + 1 + 2 * d);
            let Some(ranks) = self.slices.get(&key) else {
                continue;
            };
            let monomials = Monomial::all_of_degree(n, d as u32);
            for &rank in ranks {
                let y = GridState::from_perm(perm_unrank(n, rank));
                for m in &monomials {
                    let image = differential_with(&self.kernel, &y, m, Flavor::Minus0);
                    let col: Vec<u32> = image
                        .terms()
                        .map(|(z, mz)| index_of((z.clone(), mz.clone())))
                        .collect();
                    columns.push(col);
                }
            }
        }
        let matrix = SparseF2Matrix::from_columns(row_index.len(), columns)?;
        Ok(if matrix.in_column_span(&target) {
            Verdict::Vanishes
        } else {
            Verdict::NoPreimageUpToCap
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    Vanishes,
    Survives,
    /// No preimage among the bounded unknowns; says nothing definite.
    NoPreimageUpToCap,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Vanishes => "Vanishes",
            Verdict::Survives => "Survives",
            Verdict::NoPreimageUpToCap => "NoPreimageUpToCap",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFlavor {
    Tilde,
    Hat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyReport {
    pub grid_size: usize,
    pub tilde_ranks: BTreeMap<Bigrading, usize>,
    /// Poincare polynomial of the fully blocked homology.
    pub poincare: Laurent2,
    pub alexander_mod2: F2Laurent,
    /// `poincare / (1 + q^-1 t^-1)^(n-1)`.
    pub hat_poincare: Laurent2,
}

fn ranks_of(p: &Laurent2) -> BTreeMap<Bigrading, usize> {
    p.terms()
        .map(|(m, a, c)| (Bigrading::new(m, a), c as usize))
        .collect()
}

impl HomologyReport {
    pub fn hat_ranks(&self) -> BTreeMap<Bigrading, usize> {
        ranks_of(&self.hat_poincare)
    }

    pub fn hat_total_rank(&self) -> usize {
        self.hat_poincare.total() as usize
    }

    pub fn tilde_total_rank(&self) -> usize {
        self.poincare.total() as usize
    }

    pub fn to_json(&self, flavor: ReportFlavor) -> Value {
        let (ranks, poincare) = match flavor {
            ReportFlavor::Tilde => (&self.poincare, &self.poincare),
            ReportFlavor::Hat => (&self.hat_poincare, &self.hat_poincare),
        };
        let ranks: Vec<Value> = ranks.terms().map(|(m, a, c)| json!([m, a, c])).collect();
        json!({
            "ranks": ranks,
            "poincare": poincare.to_string(),
            "alexander_mod2": self.alexander_mod2.to_string(),
            "hat_poincare": self.hat_poincare.to_string(),
        })
    }
}

/// Bigraded tensor product of two rank tables.
pub fn tensor_ranks(
    a: &BTreeMap<Bigrading, usize>,
    b: &BTreeMap<Bigrading, usize>,
) -> BTreeMap<Bigrading, usize> {
    let mut out = BTreeMap::new();
    for (ga, &ra) in a {
        for (gb, &rb) in b {
            *out.entry(*ga + *gb).or_insert(0) += ra * rb;
        }
    }
    out
}

/// The fully blocked complex restricted to some bigradings, with explicit
/// boundary blocks. Meant for inspection and small grids.
pub struct BigradedComplex {
    pub slices: BTreeMap<Bigrading, Vec<GridState>>,
    pub boundaries: BTreeMap<Bigrading, SparseF2Matrix>,
}

impl BigradedComplex {
    /// Builds every slice with Alexander grading `alexander` (all when `None`).
    pub fn build(cx: &GridComplex, alexander: Option<i32>) -> BigradedComplex {
        let mut slices = BTreeMap::new();
        let mut boundaries = BTreeMap::new();
        for (gr, len) in cx.slice_sizes() {
            if alexander.is_some_and(|a| a != gr.alexander) {
                continue;
            }
            slices.insert(gr, (0..len).map(|i| cx.generator(gr, i)).collect());
            boundaries.insert(gr, cx.boundary_block(gr));
        }
        BigradedComplex { slices, boundaries }
    }

    /// Every composite of consecutive boundary blocks vanishes.
    pub fn squares_to_zero(&self) -> bool {
        self.boundaries.iter().all(|(gr, d)| {
            let below = Bigrading::new(gr.maslov - 1, gr.alexander);
            match self.boundaries.get(&below) {
                Some(d2) if d2.cols() == d.rows() => {
                    d2.mul(d).map(|p| p.is_zero()).unwrap_or(false)
                }
                _ => true,
            }
        })
    }
}

pub fn tilde_homology(g: &GridDiagram, opts: &HomologyOptions) -> Result<HomologyReport> {
    GridComplex::new(g, opts)?.homology(opts)
}

pub fn alexander_polynomial(g: &GridDiagram) -> Result<F2Laurent> {
    GridComplex::new(g, &HomologyOptions::forced())?.alexander_polynomial()
}

//! Verification batteries: randomized move invariance, connected-sum
//! comparisons and the non-simplicity pipeline, run over the built-in corpus.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{differential, Bigrading, Flavor};
use crate::corpus::{self, CorpusEntry};
use crate::error::{Error, Result};
use crate::grid::{GridDiagram, Marker};
use crate::homology::{GridComplex, HomologyOptions, Verdict};
use crate::invariants::{
    kunneth_check, lambda_status_in, nonsimplicity_pipeline, x_minus, x_plus, Conclusion,
    InvariantOptions, Sign,
};
use crate::moves::{apply_move, connect_sum_aligned, legal_moves, Corner, GridMove, MoveClass, StabType};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    /// Depends on user-supplied data; not part of the default gate.
    pub optional: bool,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
            optional: false,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status}  {:<36} {}", self.name, self.detail)
    }
}

pub fn format_table(checks: &[Check]) -> String {
    checks.iter().map(|c| format!("{c}\n")).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Battery {
    Moves,
    Kunneth,
    Nonsimple,
    All,
}

impl FromStr for Battery {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "moves" => Ok(Battery::Moves),
            "kunneth" => Ok(Battery::Kunneth),
            "nonsimple" => Ok(Battery::Nonsimple),
            "all" => Ok(Battery::All),
            _ => Err(Error::Parse(format!("unknown battery {s:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct BatteryOptions {
    /// Random Legendrian move sequences per corpus grid.
    pub sequences: usize,
    /// Random transverse move sequences per corpus grid.
    pub transverse_sequences: usize,
    pub max_len: usize,
    /// Stabilizations stop once a grid reaches this size.
    pub max_size: usize,
    pub seed: u64,
    pub homology: HomologyOptions,
}

impl Default for BatteryOptions {
    fn default() -> Self {
        BatteryOptions {
            sequences: 200,
            transverse_sequences: 100,
            max_len: 8,
            max_size: 8,
            seed: 7,
            homology: HomologyOptions::default(),
        }
    }
}

pub fn run(b: Battery, opts: &BatteryOptions) -> Result<Vec<Check>> {
    Ok(match b {
        Battery::Moves => moves_battery(opts)?,
        Battery::Kunneth => kunneth_battery(opts)?,
        Battery::Nonsimple => nonsimple_battery(opts)?,
        Battery::All => {
            let mut v = moves_battery(opts)?;
            v.extend(kunneth_battery(opts)?);
            v.extend(nonsimple_battery(opts)?);
            v
        }
    })
}

/// What the move battery compares before and after a move sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snapshot {
    pub bigrading: Bigrading,
    pub verdict: Verdict,
    pub tb: i64,
    pub r: i64,
    pub sl_plus: i64,
    pub alexander: String,
    /// Both distinguished cycles are cycles in both flavors.
    pub cycles_closed: bool,
}

pub fn snapshot(g: &GridDiagram, opts: &HomologyOptions) -> Result<Snapshot> {
    let cx = GridComplex::new(g, opts)?;
    let status = lambda_status_in(&cx, Sign::Plus, None)?;
    let delta = cx.alexander_polynomial()?;
    if !cx.normalization_identity_holds(&delta) {
        return Err(Error::DivisionInexact(format!("normalization identity on {g}")));
    }
    let ci = g.classical_invariants()?;
    let cycles_closed = [x_plus(g), x_minus(g)].iter().all(|x| {
        differential(g, x, Flavor::Tilde).is_zero() && differential(g, x, Flavor::Minus0).is_zero()
    });
    Ok(Snapshot {
        bigrading: status.bigrading,
        verdict: status.tilde_verdict,
        tb: ci.tb,
        r: ci.r,
        sl_plus: ci.sl_plus,
        alexander: delta.to_string(),
        cycles_closed,
    })
}

/// A random sequence of at most `max_len` legal moves whose classes are in
/// `classes`.
pub fn random_sequence(
    g: &GridDiagram,
    classes: &[MoveClass],
    max_len: usize,
    max_size: usize,
    rng: &mut impl Rng,
) -> (GridDiagram, Vec<GridMove>) {
    let len = rng.gen_range(1..=max_len);
    let mut h = g.clone();
    let mut seq = Vec::with_capacity(len);
    for _ in 0..len {
        let options: Vec<GridMove> = legal_moves(&h, max_size)
            .into_iter()
            .filter(|m| classes.contains(&m.classify()))
            .collect();
        let m = *options.choose(rng).expect("cyclic shifts are always legal");
        h = apply_move(&h, &m).expect("listed moves are legal");
        seq.push(m);
    }
    (h, seq)
}

fn script(seq: &[GridMove]) -> String {
    seq.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

fn stabilized_at_each(g: &GridDiagram, kind: StabType) -> Vec<GridDiagram> {
    (0..g.n())
        .map(|c| {
            let r = match kind.marker {
                Marker::X => g.x_rows()[c],
                Marker::O => g.o_rows()[c],
            };
            apply_move(g, &GridMove::Stabilize { column: c + 1, row: r + 1, kind })
                .expect("cell carries the marker")
        })
        .collect()
}

fn shift_check(
    entry: &CorpusEntry,
    base: &Snapshot,
    kind: StabType,
    expected: Bigrading,
    opts: &HomologyOptions,
) -> Result<Check> {
    let mut observed = Vec::new();
    for h in stabilized_at_each(&entry.grid, kind) {
        let shift = snapshot(&h, opts)?.bigrading - base.bigrading;
        if !observed.contains(&shift) {
            observed.push(shift);
        }
    }
    let passed = observed == [expected];
    let seen: Vec<String> = observed.iter().map(ToString::to_string).collect();
    Ok(Check::new(
        format!("moves/{kind}-shift/{}", entry.name),
        passed,
        format!("expected {expected}, observed {}", seen.join(" ")),
    ))
}

pub fn moves_battery(opts: &BatteryOptions) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let legendrian = [MoveClass::Legendrian];
    let transverse = [MoveClass::Legendrian, MoveClass::TransverseOnly];
    for entry in corpus::builtin() {
        let g = &entry.grid;
        let base = snapshot(g, &opts.homology)?;
        let max_size = opts.max_size.max(g.n() + 1);

        let mut failure = None;
        for _ in 0..opts.sequences {
            let (h, seq) = random_sequence(g, &legendrian, opts.max_len, max_size, &mut rng);
            let s = snapshot(&h, &opts.homology)?;
            if s != base {
                failure = Some(format!("after [{}]: {s:?} vs {base:?}", script(&seq)));
                break;
            }
        }
        checks.push(Check::new(
            format!("moves/legendrian/{}", entry.name),
            failure.is_none() && base.cycles_closed,
            failure.unwrap_or_else(|| {
                format!("{} sequences; x+ at {}, {}", opts.sequences, base.bigrading, base.verdict)
            }),
        ));

        let mut failure = None;
        for _ in 0..opts.transverse_sequences {
            let (h, seq) = random_sequence(g, &transverse, opts.max_len, max_size, &mut rng);
            let s = snapshot(&h, &opts.homology)?;
            if s.verdict != base.verdict || s.sl_plus != base.sl_plus || !s.cycles_closed {
                failure = Some(format!("after [{}]: {} sl {}", script(&seq), s.verdict, s.sl_plus));
                break;
            }
        }
        checks.push(Check::new(
            format!("moves/transverse-theta/{}", entry.name),
            failure.is_none(),
            failure.unwrap_or_else(|| format!("{} sequences", opts.transverse_sequences)),
        ));

        let x_ne = StabType::new(Marker::X, Corner::NE);
        let x_sw = StabType::new(Marker::X, Corner::SW);
        let deltas: Vec<(i64, i64)> = stabilized_at_each(g, x_ne)
            .iter()
            .map(|h| {
                let ci = h.classical_invariants()?;
                Ok((ci.tb - base.tb, ci.r - base.r))
            })
            .collect::<Result<_>>()?;
        checks.push(Check::new(
            format!("moves/X:NE-classical/{}", entry.name),
            deltas.iter().all(|&d| d == (-1, -1)),
            format!("(dtb, dr) = {:?}", deltas[0]),
        ));
        checks.push(shift_check(&entry, &base, x_ne, Bigrading::new(-2, -1), &opts.homology)?);
        checks.push(shift_check(&entry, &base, x_sw, Bigrading::new(0, 0), &opts.homology)?);
    }
    Ok(checks)
}

pub fn kunneth_battery(opts: &BatteryOptions) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let pairs = [
        (corpus::unknot(), "unknot", corpus::unknot(), "unknot"),
        (corpus::trefoil(), "trefoil", corpus::unknot(), "unknot"),
        (corpus::trefoil(), "trefoil", corpus::trefoil(), "trefoil"),
    ];
    for (a, na, b, nb) in &pairs {
        let r = kunneth_check(a, b, &opts.homology)?;
        let cx = GridComplex::new(&r.sum, &opts.homology)?;
        let identity = cx.normalization_identity_holds(&r.sum_report.alexander_mod2);
        checks.push(Check::new(
            format!("kunneth/{na}#{nb}"),
            r.passed() && r.alexander_multiplies() && identity,
            format!(
                "n={} hat {} x+ {} = {} + {} ({}) tensor {} add {} rule {}",
                r.sum.n(),
                r.sum_report.hat_poincare,
                r.sum_status.bigrading,
                r.factor_status[0].bigrading,
                r.factor_status[1].bigrading,
                r.sum_status.tilde_verdict,
                r.hat_tensor_holds(),
                r.bigradings_add(),
                r.vanishing_rule_holds(),
            ),
        ));
    }
    let all = corpus::builtin();
    for a in &all {
        for b in &all {
            let s = connect_sum_aligned(&a.grid, &b.grid)?;
            let (sa, sb, ss) = (
                a.grid.classical_invariants()?.sl_plus,
                b.grid.classical_invariants()?.sl_plus,
                s.classical_invariants()?.sl_plus,
            );
            checks.push(Check::new(
                format!("sl-additivity/{}#{}", a.name, b.name),
                ss == sa + sb + 1,
                format!("{ss} = {sa} + {sb} + 1"),
            ));
        }
    }
    Ok(checks)
}

pub fn nonsimple_battery(opts: &BatteryOptions) -> Result<Vec<Check>> {
    let inv = InvariantOptions {
        homology: opts.homology.clone(),
        minus_cap: None,
    };
    let mut checks = Vec::new();
    for (name, g, copies) in [
        ("unknot", corpus::unknot(), 1),
        ("trefoil", corpus::trefoil(), 2),
    ] {
        let r = nonsimplicity_pipeline(&g, &g, copies, &inv)?;
        checks.push(Check::new(
            format!("nonsimple/identical/{name}x{copies}"),
            r.conclusion == Conclusion::NotDistinguished,
            r.conclusion.to_string(),
        ));
    }
    // A positive stabilization kills the class of x+ in the fully blocked
    // complex; pair it with a grid of equal self-linking number whose class
    // survives.
    let killed = apply_move(
        &corpus::trefoil(),
        &GridMove::Stabilize {
            column: 1,
            row: corpus::trefoil().x_rows()[0] + 1,
            kind: StabType::new(Marker::X, Corner::SW),
        },
    )?;
    let r = nonsimplicity_pipeline(&killed, &corpus::unknot(), 1, &inv)?;
    let verdicts: Vec<String> = r
        .theta
        .iter()
        .map(|s| s.as_ref().map_or("-".into(), |s| s.tilde_verdict.to_string()))
        .collect();
    checks.push(Check::new(
        "nonsimple/synthetic",
        r.conclusion == Conclusion::Certified,
        format!("verdicts {}; {}", verdicts.join(", "), r.conclusion),
    ));
    if let Some(pair) = corpus::user_pair_from_env() {
        let [l1, l2] = pair?;
        let r = nonsimplicity_pipeline(&l1.grid, &l2.grid, 1, &inv)?;
        let verdict = |i: usize| r.theta[i].as_ref().map(|s| s.tilde_verdict);
        let expected = verdict(0) == Some(Verdict::Vanishes) && verdict(1) == Some(Verdict::Survives);
        checks.push(Check {
            name: "nonsimple/user-pair".into(),
            passed: expected && r.conclusion == Conclusion::Certified,
            detail: format!("{:?} {:?}; {}", verdict(0), verdict(1), r.conclusion),
            optional: true,
        });
    }
    Ok(checks)
}

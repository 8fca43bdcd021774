//! The distinguished cycles `x+` and `x-` of a grid, the vanishing status of
//! their classes, and the connected-sum and non-simplicity checks built on
//! them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::complex::{Bigrading, Chain, GridState};
use crate::error::{Error, Result};
use crate::grid::GridDiagram;
use crate::homology::{tensor_ranks, GridComplex, HomologyOptions, HomologyReport, Verdict};
use crate::moves::connect_sum_aligned;
use crate::poly::F2Laurent;

pub const FLAVOR_NOTE: &str = "via fully blocked complex";

/// Upper-right corners of the X cells: line `c + 1` meets line `x[c] + 1`.
pub fn x_plus(g: &GridDiagram) -> GridState {
    let n = g.n();
    let mut perm = vec![0; n];
    for (c, &r) in g.x_rows().iter().enumerate() {
        perm[(c + 1) % n] = (r + 1) % n;
    }
    GridState::new(&perm).expect("X rows form a permutation")
}

/// Lower-left corners of the X cells: line `c` meets line `x[c]`.
pub fn x_minus(g: &GridDiagram) -> GridState {
    GridState::new(g.x_rows()).expect("X rows form a permutation")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn cycle(self, g: &GridDiagram) -> GridState {
        match self {
            Sign::Plus => x_plus(g),
            Sign::Minus => x_minus(g),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+" | "plus" => Ok(Sign::Plus),
            "-" | "minus" => Ok(Sign::Minus),
            _ => Err(Error::Parse(format!("unknown sign {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinusCorroboration {
    Vanishes,
    NoPreimageUpToCap,
    NotRun,
}

impl fmt::Display for MinusCorroboration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MinusCorroboration::Vanishes => "Vanishes",
            MinusCorroboration::NoPreimageUpToCap => "NoPreimageUpToCap",
            MinusCorroboration::NotRun => "NotRun",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantStatus {
    pub sign: Sign,
    pub cycle: GridState,
    pub bigrading: Bigrading,
    pub tilde_verdict: Verdict,
    pub minus_corroboration: MinusCorroboration,
    /// Reported as the transverse invariant of the positive push-off.
    pub transverse: bool,
}

impl InvariantStatus {
    pub fn survives(&self) -> bool {
        self.tilde_verdict == Verdict::Survives
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "sign": self.sign.to_string(),
            "bigrading": [self.bigrading.maslov, self.bigrading.alexander],
            "verdict": self.tilde_verdict.to_string(),
            "flavor_note": FLAVOR_NOTE,
        });
        if self.minus_corroboration != MinusCorroboration::NotRun {
            v["minus_corroboration"] = json!(self.minus_corroboration.to_string());
        }
        if self.transverse {
            v["invariant"] = json!("theta");
        }
        v
    }
}

#[derive(Clone, Debug, Default)]
pub struct InvariantOptions {
    pub homology: HomologyOptions,
    /// U-degree cap for the bounded minus search; `None` skips it.
    pub minus_cap: Option<u32>,
}

/// Status of `x+` or `x-` in an already enumerated complex.
pub fn lambda_status_in(cx: &GridComplex, sign: Sign, minus_cap: Option<u32>) -> Result<InvariantStatus> {
    let cycle = sign.cycle(cx.grid());
    let bigrading = cx.grading_of(&cycle);
    let (tilde_verdict, _) = cx.tilde_class_vanishes(std::slice::from_ref(&cycle))?;
    let minus_corroboration = match minus_cap {
        None => MinusCorroboration::NotRun,
        Some(cap) => match cx.minus_class_vanishes(&Chain::generator(cycle.clone()), cap)? {
            Verdict::Vanishes => MinusCorroboration::Vanishes,
            _ => MinusCorroboration::NoPreimageUpToCap,
        },
    };
    Ok(InvariantStatus {
        sign,
        cycle,
        bigrading,
        tilde_verdict,
        minus_corroboration,
        transverse: false,
    })
}

pub fn lambda_status(g: &GridDiagram, sign: Sign, opts: &InvariantOptions) -> Result<InvariantStatus> {
    let cx = GridComplex::new(g, &opts.homology)?;
    lambda_status_in(&cx, sign, opts.minus_cap)
}

/// The transverse invariant of the positive push-off: the `x+` status of the
/// grid, which is itself a Legendrian approximation.
pub fn theta_status(g: &GridDiagram, opts: &InvariantOptions) -> Result<InvariantStatus> {
    let mut s = lambda_status(g, Sign::Plus, opts)?;
    s.transverse = true;
    Ok(s)
}

#[derive(Clone, Debug)]
pub struct KunnethReport {
    pub sum: GridDiagram,
    pub factor_reports: [HomologyReport; 2],
    pub sum_report: HomologyReport,
    pub expected_hat: BTreeMap<Bigrading, usize>,
    pub factor_status: [InvariantStatus; 2],
    pub sum_status: InvariantStatus,
    pub factor_alexander: [F2Laurent; 2],
}

impl KunnethReport {
    /// Hat ranks of the sum equal the bigraded tensor product of the factors'.
    pub fn hat_tensor_holds(&self) -> bool {
        self.sum_report.hat_ranks() == self.expected_hat
    }

    pub fn bigrading_shift(&self) -> Bigrading {
        self.sum_status.bigrading - (self.factor_status[0].bigrading + self.factor_status[1].bigrading)
    }

    /// `x+` of the sum sits in the sum of the factors' bigradings.
    pub fn bigradings_add(&self) -> bool {
        self.bigrading_shift() == Bigrading::new(0, 0)
    }

    /// The class of the sum survives exactly when both factors' classes do.
    pub fn vanishing_rule_holds(&self) -> bool {
        self.sum_status.survives() == (self.factor_status[0].survives() && self.factor_status[1].survives())
    }

    pub fn alexander_multiplies(&self) -> bool {
        self.sum_report.alexander_mod2 == self.factor_alexander[0].mul(&self.factor_alexander[1])
    }

    pub fn passed(&self) -> bool {
        self.hat_tensor_holds() && self.bigradings_add() && self.vanishing_rule_holds()
    }

    pub fn to_json(&self) -> Value {
        let table = |t: &BTreeMap<Bigrading, usize>| -> Vec<Value> {
            let mut v: Vec<_> = t.iter().collect();
            v.sort_by_key(|(g, _)| (g.alexander, g.maslov));
            v.into_iter().map(|(g, r)| json!([g.maslov, g.alexander, r])).collect()
        };
        json!({
            "sum_size": self.sum.n(),
            "hat_ranks": table(&self.sum_report.hat_ranks()),
            "expected_hat_ranks": table(&self.expected_hat),
            "hat_tensor_holds": self.hat_tensor_holds(),
            "factor_bigradings": self.factor_status.iter().map(|s| json!([s.bigrading.maslov, s.bigrading.alexander])).collect::<Vec<_>>(),
            "sum_bigrading": [self.sum_status.bigrading.maslov, self.sum_status.bigrading.alexander],
            "bigradings_add": self.bigradings_add(),
            "factor_verdicts": self.factor_status.iter().map(|s| s.tilde_verdict.to_string()).collect::<Vec<_>>(),
            "sum_verdict": self.sum_status.tilde_verdict.to_string(),
            "vanishing_rule_holds": self.vanishing_rule_holds(),
            "alexander_multiplies": self.alexander_multiplies(),
            "flavor_note": FLAVOR_NOTE,
        })
    }
}

/// Compares the connected sum of two grids with its factors. Each factor is
/// first aligned by a cyclic row shift, which changes neither its homology
/// nor the status of `x+`.
pub fn kunneth_check(g1: &GridDiagram, g2: &GridDiagram, opts: &HomologyOptions) -> Result<KunnethReport> {
    g1.ensure_knot()?;
    g2.ensure_knot()?;
    let sum = connect_sum_aligned(g1, g2)?;
    let analyse = |g: &GridDiagram| -> Result<(HomologyReport, InvariantStatus)> {
        let cx = GridComplex::new(g, opts)?;
        Ok((cx.homology(opts)?, lambda_status_in(&cx, Sign::Plus, None)?))
    };
    let (r1, s1) = analyse(g1)?;
    let (r2, s2) = analyse(g2)?;
    let (rs, ss) = analyse(&sum)?;
    Ok(KunnethReport {
        expected_hat: tensor_ranks(&r1.hat_ranks(), &r2.hat_ranks()),
        factor_alexander: [r1.alexander_mod2.clone(), r2.alexander_mod2.clone()],
        sum,
        factor_reports: [r1, r2],
        sum_report: rs,
        factor_status: [s1, s2],
        sum_status: ss,
    })
}

/// `g # g # ... # g` with `copies` summands.
pub fn connect_power(g: &GridDiagram, copies: usize) -> Result<GridDiagram> {
    assert!(copies >= 1, "at least one summand");
    let mut acc = g.clone();
    for _ in 1..copies {
        acc = connect_sum_aligned(&acc, g)?;
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Conclusion {
    Certified,
    NotDistinguished,
    /// At least one verdict could not be computed within budget.
    Incomplete,
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Conclusion::Certified => "transversely non-simple pair certified",
            Conclusion::NotDistinguished => "not distinguished",
            Conclusion::Incomplete => "incomplete (budget exceeded)",
        })
    }
}

#[derive(Clone, Debug)]
pub struct NonsimplicityReport {
    pub copies: usize,
    /// `GA # (GB)^(copies-1)` and `(GB)^copies`.
    pub grids: [GridDiagram; 2],
    pub sl_plus: [i64; 2],
    /// `None` when the computation was refused by the budget.
    pub theta: [Option<InvariantStatus>; 2],
    pub conclusion: Conclusion,
}

impl NonsimplicityReport {
    pub fn to_json(&self) -> Value {
        let theta = |s: &Option<InvariantStatus>| match s {
            Some(s) => s.to_json(),
            None => json!("BudgetExceeded"),
        };
        json!({
            "copies": self.copies,
            "sizes": [self.grids[0].n(), self.grids[1].n()],
            "sl_plus": self.sl_plus,
            "theta": [theta(&self.theta[0]), theta(&self.theta[1])],
            "conclusion": self.conclusion.to_string(),
        })
    }
}

/// Builds `GA # (GB)^(copies-1)` and `(GB)^copies`, checks that their
/// self-linking numbers agree, and compares the vanishing of their transverse
/// invariants. Different verdicts certify that the two transverse knots are
/// distinct although they share knot type and self-linking number.
pub fn nonsimplicity_pipeline(
    ga: &GridDiagram,
    gb: &GridDiagram,
    copies: usize,
    opts: &InvariantOptions,
) -> Result<NonsimplicityReport> {
    let sl_a = ga.classical_invariants()?.sl_plus;
    let sl_b = gb.classical_invariants()?.sl_plus;
    if sl_a != sl_b {
        return Err(Error::SlMismatch(sl_a, sl_b));
    }
    let left = if copies > 1 {
        connect_sum_aligned(ga, &connect_power(gb, copies - 1)?)?
    } else {
        ga.clone()
    };
    let right = connect_power(gb, copies)?;
    let sl = [left.classical_invariants()?.sl_plus, right.classical_invariants()?.sl_plus];
    if sl[0] != sl[1] {
        return Err(Error::SlMismatch(sl[0], sl[1]));
    }
    let run = |g: &GridDiagram| match theta_status(g, opts) {
        Ok(s) => Ok(Some(s)),
        Err(Error::BudgetExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    };
    let theta = [run(&left)?, run(&right)?];
    let conclusion = match (&theta[0], &theta[1]) {
        (Some(a), Some(b)) if a.tilde_verdict != b.tilde_verdict => Conclusion::Certified,
        (Some(_), Some(_)) => Conclusion::NotDistinguished,
        _ => Conclusion::Incomplete,
    };
    Ok(NonsimplicityReport {
        copies,
        grids: [left, right],
        sl_plus: sl,
        theta,
        conclusion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{differential, Flavor};

    fn unknot() -> GridDiagram {
        GridDiagram::from_sigma(&[1, 2], &[2, 1]).unwrap()
    }

    fn trefoil() -> GridDiagram {
        GridDiagram::from_sigma(&[1, 2, 3, 4, 5], &[3, 4, 5, 1, 2]).unwrap()
    }

    #[test]
    fn unknot_cycles() {
        let g = unknot();
        assert_eq!(x_plus(&g).perm(), &[1, 0]);
        assert_eq!(x_minus(&g).perm(), &[1, 0]);
    }

    #[test]
    fn cycles_are_cycles() {
        let g = trefoil();
        for x in [x_plus(&g), x_minus(&g)] {
            assert!(differential(&g, &x, Flavor::Tilde).is_zero());
            assert!(differential(&g, &x, Flavor::Minus0).is_zero());
        }
    }

    #[test]
    fn unknot_status() {
        let opts = InvariantOptions {
            minus_cap: Some(2),
            ..Default::default()
        };
        let s = lambda_status(&unknot(), Sign::Plus, &opts).unwrap();
        assert_eq!(s.bigrading, Bigrading::new(0, 0));
        assert_eq!(s.tilde_verdict, Verdict::Survives);
        assert_eq!(s.minus_corroboration, MinusCorroboration::NoPreimageUpToCap);
        assert_eq!(
            s.to_json().to_string(),
            r#"{"bigrading":[0,0],"flavor_note":"via fully blocked complex","minus_corroboration":"NoPreimageUpToCap","sign":"+","verdict":"Survives"}"#
        );
    }

    #[test]
    fn identical_inputs_are_not_distinguished() {
        let r = nonsimplicity_pipeline(&unknot(), &unknot(), 1, &InvariantOptions::default()).unwrap();
        assert_eq!(r.conclusion, Conclusion::NotDistinguished);
        assert!(matches!(
            nonsimplicity_pipeline(&unknot(), &trefoil(), 1, &InvariantOptions::default()),
            Err(Error::SlMismatch(-1, 1))
        ));
    }

    #[test]
    fn trefoil_with_unknot() {
        let r = kunneth_check(&trefoil(), &unknot(), &HomologyOptions::default()).unwrap();
        assert!(r.passed());
        assert!(r.alexander_multiplies());
        assert_eq!(r.sum_report.hat_ranks(), r.factor_reports[0].hat_ranks());
    }
}

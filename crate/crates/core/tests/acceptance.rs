//! Acceptance gate: every criterion at its stated tolerance, one line each.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gridhfk::battery::{self, BatteryOptions, Check};
use gridhfk::complex::{differential_chain, Flavor};
use gridhfk::corpus;
use gridhfk::homology::{GridComplex, HomologyOptions, HomologyReport, Verdict};
use gridhfk::invariants::{lambda_status_in, Sign};
use gridhfk::{Bigrading, Chain, GridDiagram, SparseF2Matrix};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn within(t: Duration, limit: Duration) -> bool {
    t < limit
}

fn peak_rss_mb() -> Option<u64> {
    let status = std::fs::read_to_string("/proc/self/status").ok()?;
    let line = status.lines().find(|l| l.starts_with("VmHWM:"))?;
    let kb: u64 = line.split_whitespace().nth(1)?.parse().ok()?;
    Some(kb / 1024)
}

fn analyse(g: &GridDiagram) -> (GridComplex, HomologyReport) {
    let opts = HomologyOptions::default();
    let cx = GridComplex::new(g, &opts).expect("within budget");
    let report = cx.homology(&opts).expect("homology");
    (cx, report)
}

fn bigrading_map(r: &BTreeMap<Bigrading, usize>) -> BTreeMap<(i64, i64), usize> {
    r.iter()
        .map(|(g, &h)| ((g.maslov as i64, g.alexander as i64), h))
        .collect()
}

fn unknot_sanity() -> Outcome {
    let t = Instant::now();
    let g = corpus::unknot();
    let (cx, r) = analyse(&g);
    let status = lambda_status_in(&cx, Sign::Plus, None).unwrap();
    let ci = g.classical_invariants().unwrap();
    let elapsed = t.elapsed();
    let ok = r.hat_ranks() == BTreeMap::from([(Bigrading::new(0, 0), 1)])
        && r.tilde_ranks == BTreeMap::from([(Bigrading::new(0, 0), 1), (Bigrading::new(-1, -1), 1)])
        && status.bigrading == Bigrading::new(0, 0)
        && status.tilde_verdict == Verdict::Survives
        && (ci.tb, ci.r) == (-1, 0)
        && within(elapsed, Duration::from_secs(1));
    outcome(
        ok,
        format!(
            "hat {}, tilde {}, x+ {} {}, tb {} r {}, {elapsed:.2?}",
            r.hat_poincare, r.poincare, status.bigrading, status.tilde_verdict, ci.tb, ci.r
        ),
    )
}

fn euler_identities(cx: &GridComplex, r: &HomologyReport) -> bool {
    r.hat_poincare.euler_mod2() == r.alexander_mod2 && r.poincare.euler() == cx.signed_generator_count()
}

fn trefoil() -> Outcome {
    let t = Instant::now();
    let g = corpus::trefoil();
    let (cx, r) = analyse(&g);
    // every generator's boundary, then the boundary of that chain
    let mut squares_vanish = true;
    for p in common::all_perms(5) {
        let x = Chain::generator(gridhfk::GridState::new(&p).unwrap());
        let d = differential_chain(&g, &x, Flavor::Tilde);
        squares_vanish &= differential_chain(&g, &d, Flavor::Tilde).is_zero();
    }
    let oracle = common::oracle_tilde_ranks(&g);
    let elapsed = t.elapsed();
    let ok = r.hat_total_rank() == 3
        && r.alexander_mod2.to_string() == "T^-1 + 1 + T"
        && euler_identities(&cx, &r)
        && squares_vanish
        && bigrading_map(&r.tilde_ranks) == oracle
        && within(elapsed, Duration::from_secs(5));
    outcome(
        ok,
        format!(
            "hat {}, delta {}, d^2=0 {squares_vanish}, dense oracle agrees {}, {elapsed:.2?}",
            r.hat_poincare,
            r.alexander_mod2,
            bigrading_map(&r.tilde_ranks) == oracle
        ),
    )
}

fn figure_eight() -> Outcome {
    let t = Instant::now();
    let (cx, r) = analyse(&corpus::figure_eight());
    let hat = r.hat_ranks();
    // rank in (M, A) equals rank in (M - 2A, -A)
    let symmetric = hat.iter().all(|(g, &h)| {
        hat.get(&Bigrading::new(g.maslov - 2 * g.alexander, -g.alexander)) == Some(&h)
    });
    let elapsed = t.elapsed();
    let ok = r.hat_total_rank() == 5
        && r.alexander_mod2.to_string() == "T^-1 + 1 + T"
        && symmetric
        && euler_identities(&cx, &r)
        && within(elapsed, Duration::from_secs(30));
    outcome(
        ok,
        format!("hat {}, delta {}, symmetric {symmetric}, {elapsed:.2?}", r.hat_poincare, r.alexander_mod2),
    )
}

fn summarize(checks: &[Check], prefix: &[&str]) -> (bool, Vec<String>) {
    let selected: Vec<&Check> = checks
        .iter()
        .filter(|c| prefix.iter().any(|p| c.name.starts_with(p)) && !c.optional)
        .collect();
    let failures: Vec<String> = selected.iter().filter(|c| !c.passed).map(|c| c.to_string()).collect();
    (!selected.is_empty() && failures.is_empty(), failures)
}

fn linear_algebra_oracle() -> Outcome {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut rank_ok = 0;
    let mut solve_ok = 0;
    for _ in 0..1000 {
        let rows = rng.gen_range(1..=200);
        let cols = rng.gen_range(1..=200);
        let density: f64 = rng.gen_range(0.002..0.08);
        let mut entries = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                if rng.gen_bool(density) {
                    entries.push((r, c));
                }
            }
        }
        let m = SparseF2Matrix::from_entries(rows, cols, entries.iter().copied()).unwrap();
        let dense = common::dense_rank(common::dense_rows(rows, cols, entries.iter().copied()), cols);
        if m.rank() == dense && m.transpose().rank() == dense {
            rank_ok += 1;
        }
        // half the targets are images of a random vector, half are random
        let b: Vec<bool> = if rng.gen_bool(0.5) {
            let v: Vec<bool> = (0..cols).map(|_| rng.gen_bool(0.5)).collect();
            let mut b = vec![false; rows];
            for &(r, c) in &entries {
                b[r] ^= v[c];
            }
            b
        } else {
            (0..rows).map(|_| rng.gen_bool(0.5)).collect()
        };
        let augmented = entries
            .iter()
            .copied()
            .chain((0..rows).filter(|&r| b[r]).map(|r| (r, cols)));
        let in_span = common::dense_rank(common::dense_rows(rows, cols + 1, augmented), cols + 1) == dense;
        match m.solve(&b).unwrap() {
            Some(v) => {
                let mut image = vec![false; rows];
                for &(r, c) in &entries {
                    image[r] ^= v[c];
                }
                if in_span && image == b {
                    solve_ok += 1;
                }
            }
            None => {
                if !in_span {
                    solve_ok += 1;
                }
            }
        }
    }
    let elapsed = t.elapsed();
    outcome(
        rank_ok == 1000 && solve_ok == 1000,
        format!("rank {rank_ok}/1000, solve {solve_ok}/1000, {elapsed:.2?}"),
    )
}

fn main() {
    let mut results: Vec<(&str, Outcome)> = Vec::new();
    results.push(("1 unknot sanity", unknot_sanity()));
    results.push(("2 trefoil", trefoil()));
    results.push(("3 figure-eight", figure_eight()));

    let opts = BatteryOptions::default();
    let t = Instant::now();
    let moves = battery::moves_battery(&opts);
    let moves_time = t.elapsed();
    let t = Instant::now();
    let kunneth = battery::kunneth_battery(&opts);
    let kunneth_time = t.elapsed();
    let nonsimple = battery::nonsimple_battery(&opts);

    let (c4, moves_detail) = match &moves {
        Ok(checks) => {
            let (ok, failures) = summarize(checks, &["moves/"]);
            let ok = ok && within(moves_time, Duration::from_secs(300));
            (ok, if failures.is_empty() { vec![format!("{moves_time:.2?}")] } else { failures })
        }
        Err(e) => (false, vec![format!("error: {e}")]),
    };
    results.push(("4 move invariance", outcome(c4, format!("{} checks; {moves_time:.2?}", moves.as_ref().map_or(0, Vec::len)))));

    let (c5, kunneth_detail) = match &kunneth {
        Ok(checks) => summarize(checks, &["kunneth/"]),
        Err(e) => (false, vec![format!("error: {e}")]),
    };
    let c5 = c5 && within(kunneth_time, Duration::from_secs(30 * 60));
    let rss = peak_rss_mb().map_or("n/a".into(), |m| format!("{m} MB"));
    results.push(("5 connected sums", outcome(c5, format!("{kunneth_time:.2?}, peak rss {rss}"))));

    let (c6, sl_detail) = match &kunneth {
        Ok(checks) => summarize(checks, &["sl-additivity/"]),
        Err(e) => (false, vec![format!("error: {e}")]),
    };
    results.push(("6 sl additivity", outcome(c6, "all corpus pairs")));

    // Every snapshot in the move battery and every sum in the connected-sum
    // battery checks the identity and errors out when division is inexact.
    let c7_corpus = corpus::builtin().iter().all(|e| {
        let cx = GridComplex::new(&e.grid, &HomologyOptions::default()).unwrap();
        cx.alexander_polynomial()
            .map(|d| cx.normalization_identity_holds(&d))
            .unwrap_or(false)
    });
    let c7 = c7_corpus && moves.is_ok() && kunneth.is_ok();
    results.push(("7 Alexander normalization", outcome(c7, format!("corpus {c7_corpus}, battery grids {}", moves.is_ok() && kunneth.is_ok()))));

    results.push(("8 linear algebra oracle", linear_algebra_oracle()));

    let (c9, nonsimple_detail) = match &nonsimple {
        Ok(checks) => summarize(checks, &["nonsimple/"]),
        Err(e) => (false, vec![format!("error: {e}")]),
    };
    results.push(("9 non-simplicity pipeline", outcome(c9, "identical and synthetic pairs")));

    println!();
    for (name, o) in &results {
        println!("{} {:<28} {}", if o.passed { "PASS" } else { "FAIL" }, name, o.detail);
    }
    for (label, lines) in [
        ("4", &moves_detail),
        ("5", &kunneth_detail),
        ("6", &sl_detail),
        ("9", &nonsimple_detail),
    ] {
        for l in lines.iter().filter(|l| l.starts_with("FAIL") || l.starts_with("error")) {
            println!("  [{label}] {l}");
        }
    }
    if let Ok(checks) = &nonsimple {
        for c in checks.iter().filter(|c| c.optional) {
            println!("  [9, optional data, not gated] {c}");
        }
    }
    let failed = results.iter().filter(|(_, o)| !o.passed).count();
    println!("\n{} of {} criteria passed", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

//! Laurent polynomials: one variable over F2 (Alexander polynomials) and two
//! variables over the integers (Poincare polynomials in `q`, `t`).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Laurent polynomial in `T` over F2, stored as the set of exponents with
/// coefficient 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct F2Laurent {
    exps: BTreeSet<i32>,
}

impl F2Laurent {
    pub fn zero() -> Self {
        F2Laurent::default()
    }

    pub fn one() -> Self {
        F2Laurent::monomial(0)
    }

    pub fn monomial(e: i32) -> Self {
        F2Laurent {
            exps: BTreeSet::from([e]),
        }
    }

    /// Sum of `T^e` over the given exponents, with repeats cancelling.
    pub fn from_exponents(exps: impl IntoIterator<Item = i32>) -> Self {
        let mut p = F2Laurent::zero();
        for e in exps {
            p.toggle(e);
        }
        p
    }

    fn toggle(&mut self, e: i32) {
        if !self.exps.remove(&e) {
            self.exps.insert(e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponents(&self) -> impl Iterator<Item = i32> + '_ {
        self.exps.iter().copied()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.exps.first().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.exps.last().copied()
    }

    pub fn add(&self, other: &F2Laurent) -> F2Laurent {
        let mut p = self.clone();
        for &e in &other.exps {
            p.toggle(e);
        }
        p
    }

    pub fn mul(&self, other: &F2Laurent) -> F2Laurent {
        F2Laurent::from_exponents(
            self.exps
                .iter()
                .flat_map(|a| other.exps.iter().map(move |b| a + b)),
        )
    }

    pub fn pow(&self, k: u32) -> F2Laurent {
        (0..k).fold(F2Laurent::one(), |acc, _| acc.mul(self))
    }

    /// Exact quotient `self / d`, or `None` when the division leaves a remainder.
    pub fn div_exact(&self, d: &F2Laurent) -> Option<F2Laurent> {
        let d_max = d.max_exp()?;
        let d_min = d.min_exp()?;
        let mut rem = self.clone();
        let mut q = F2Laurent::zero();
        // long division from the top degree down
        while let Some(top) = rem.max_exp() {
            if top - d_max < rem.min_exp().unwrap() - d_min {
                return None;
            }
            let shift = top - d_max;
            q.toggle(shift);
            for &e in &d.exps {
                rem.toggle(e + shift);
            }
        }
        Some(q)
    }

    /// Invariant under `T -> T^-1`.
    pub fn is_symmetric(&self) -> bool {
        self.exps.iter().all(|e| self.exps.contains(&-e))
    }
}

impl fmt::Display for F2Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .exps
            .iter()
            .map(|&e| match e {
                0 => "1".to_string(),
                1 => "T".to_string(),
                e => format!("T^{e}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

/// Laurent polynomial in `q` (Maslov) and `t` (Alexander) with integer
/// coefficients, keyed by `(A, M)` so iteration is in canonical order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Laurent2 {
    terms: BTreeMap<(i32, i32), i64>,
}

impl Laurent2 {
    pub fn zero() -> Self {
        Laurent2::default()
    }

    pub fn one() -> Self {
        let mut p = Laurent2::zero();
        p.add_term(0, 0, 1);
        p
    }

    pub fn add_term(&mut self, maslov: i32, alexander: i32, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry((alexander, maslov)).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&(alexander, maslov));
        }
    }

    pub fn coeff(&self, maslov: i32, alexander: i32) -> i64 {
        self.terms.get(&(alexander, maslov)).copied().unwrap_or(0)
    }

    /// `(M, A, coefficient)` in canonical order: A ascending, then M ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i32, i64)> + '_ {
        self.terms.iter().map(|(&(a, m), &c)| (m, a, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Value at `q = t = 1`.
    pub fn total(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn mul(&self, other: &Laurent2) -> Laurent2 {
        let mut out = Laurent2::zero();
        for (m1, a1, c1) in self.terms() {
            for (m2, a2, c2) in other.terms() {
                out.add_term(m1 + m2, a1 + a2, c1 * c2);
            }
        }
        out
    }

    /// `(1 + q^-1 t^-1)^k`.
    pub fn v_factor(k: u32) -> Laurent2 {
        let mut out = Laurent2::zero();
        let mut binom: i64 = 1;
        for i in 0..=k as i64 {
            out.add_term(-(i as i32), -(i as i32), binom);
            binom = binom * (k as i64 - i) / (i + 1);
        }
        out
    }

    /// Exact quotient by `(1 + q^-1 t^-1)^k`, or `None` when there is a remainder.
    ///
    /// The divisor only involves `q^-1 t^-1`, so each diagonal `M - A = d` is an
    /// independent one-variable division.
    pub fn div_v_factor(&self, k: u32) -> Option<Laurent2> {
        let mut diagonals: BTreeMap<i32, BTreeMap<i32, i64>> = BTreeMap::new();
        for (m, a, c) in self.terms() {
            diagonals.entry(m - a).or_default().insert(a, c);
        }
        let mut out = Laurent2::zero();
        for (d, mut poly) in diagonals {
            for _ in 0..k {
                // divide sum c_a s^a by (1 + s^-1), top degree first
                let mut quotient = BTreeMap::new();
                while let Some((&top, &c)) = poly.iter().next_back() {
                    let bottom = *poly.keys().next().unwrap();
                    if top == bottom {
                        return None;
                    }
                    quotient.insert(top, c);
                    poly.remove(&top);
                    let e = poly.entry(top - 1).or_insert(0);
                    *e -= c;
                    if *e == 0 {
                        poly.remove(&(top - 1));
                    }
                }
                poly = quotient;
            }
            for (a, c) in poly {
                out.add_term(d + a, a, c);
            }
        }
        Some(out)
    }

    /// Euler characteristic reduced mod 2 as a polynomial in `t`.
    pub fn euler_mod2(&self) -> F2Laurent {
        F2Laurent::from_exponents(self.terms().filter(|t| t.2 % 2 != 0).map(|(_, a, _)| a))
    }

    /// Signed Euler characteristic `sum (-1)^M c T^A`, as `(A, coefficient)`.
    pub fn euler(&self) -> BTreeMap<i32, i64> {
        let mut out = BTreeMap::new();
        for (m, a, c) in self.terms() {
            let sign = if m.rem_euclid(2) == 0 { 1 } else { -1 };
            *out.entry(a).or_insert(0) += sign * c;
        }
        out.retain(|_, c| *c != 0);
        out
    }
}

impl fmt::Display for Laurent2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let var = |name: &str, e: i32| match e {
            0 => String::new(),
            1 => name.to_string(),
            e => format!("{name}^{e}"),
        };
        let mut first = true;
        for (m, a, c) in self.terms() {
            let mono = format!("{}{}", var("q", m), var("t", a));
            let mag = c.abs();
            let body = match (mag, mono.is_empty()) {
                (_, true) => mag.to_string(),
                (1, false) => mono,
                (_, false) => format!("{mag}{mono}"),
            };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
                f.write_str(&body)?;
                first = false;
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
                f.write_str(&body)?;
            }
        }
        Ok(())
    }
}

//! Constructive witnesses in type A: for each input satisfying a lemma's
//! hypothesis, an explicit dominant `mu ⪯ lambda` with the promised shape.
//!
//! Throughout, `k = floor((r - 1) / 2)`, so `r` is `2k + 1` or `2k + 2`, and
//! the "middle window" for `m` is the 1-based range `k - m + 1 ..= r - k + m`.
//! Every engine returns a [`WitnessChain`] whose `target` is `mu`.

use std::ops::RangeInclusive;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::dominance::{bracket_unchecked, is_good, orbit_length, require_type_a, WitnessChain};
use crate::error::{Error, Result};
use crate::rootdata::{RootDatum, Weight};

pub fn half_rank(r: usize) -> usize {
    (r - 1) / 2
}

/// `k - m + 1 ..= r - k + m`, 1-based.
pub fn middle_window(r: usize, m: usize) -> RangeInclusive<usize> {
    let k = half_rank(r);
    (k + 1 - m)..=(r - k + m)
}

/// Coefficients of a weight being walked down by simple roots of A_r,
/// together with the accumulated root coefficients.
struct Walk {
    a: Vec<i64>,
    k: Vec<i64>,
}

impl Walk {
    fn new(lambda: &Weight) -> Self {
        Walk {
            a: lambda.coeffs().to_vec(),
            k: vec![0; lambda.rank()],
        }
    }

    /// Subtracts `times * alpha_t` (1-based `t`).
    fn sub_simple(&mut self, t: usize, times: i64) {
        let i = t - 1;
        self.k[i] += times;
        self.a[i] -= 2 * times;
        if i > 0 {
            self.a[i - 1] += times;
        }
        if i + 1 < self.a.len() {
            self.a[i + 1] += times;
        }
    }

    /// Subtracts `times * (alpha_lo + ... + alpha_hi)`.
    fn sub_range(&mut self, lo: usize, hi: usize, times: i64) {
        for t in lo..=hi {
            self.sub_simple(t, times);
        }
    }

    fn finish(self, source: &Weight) -> WitnessChain {
        WitnessChain {
            source: source.clone(),
            target: Weight::new(self.a),
            root_coeffs: self.k,
        }
    }
}

fn require_dominant_a(datum: &RootDatum, lambda: &Weight) -> Result<()> {
    require_type_a(datum, lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.coeffs().to_vec()));
    }
    Ok(())
}

fn require_m(r: usize, m: usize) -> Result<()> {
    let k = half_rank(r);
    if k == 0 {
        return Err(Error::RankTooSmall { rank: r });
    }
    if m < 1 || m > k {
        return Err(Error::hypothesis(
            "1 <= m <= k",
            format!("m = {m}, k = {k}"),
        ));
    }
    Ok(())
}

fn weighted_left(a: &[i64], m: usize) -> i64 {
    (1..=m).map(|i| i as i64 * a[i - 1]).sum()
}

/// Core of [`incr_witness`]; needs `1 <= m`, `m + 1 <= r` and
/// `sum_{i<=m} i a_i > m`.
fn incr_core(lambda: &Weight, m: usize) -> WitnessChain {
    let mut w = Walk::new(lambda);
    loop {
        let j = (1..=m)
            .rev()
            .find(|&j| w.a[j - 1] > 0)
            .expect("weighted sum exceeds m so some a_j > 0");
        let aj = w.a[j - 1];
        if aj >= 2 {
            w.sub_simple(j, 1);
        } else {
            let i = (1..j)
                .rev()
                .find(|&i| w.a[i - 1] >= 1)
                .expect("weighted sum exceeds m so a lower node is occupied");
            w.sub_range(i, j, 1);
        }
        if j == m {
            return w.finish(lambda);
        }
    }
}

/// Applies `engine` to the mirror image of `lambda` and mirrors back.
fn mirrored(lambda: &Weight, engine: impl FnOnce(&Weight) -> WitnessChain) -> WitnessChain {
    engine(&lambda.reversed()).reversed()
}

/// Raises `a_{m+1}` while keeping `[lambda]` and every `a_i` with
/// `i >= m + 2`.
pub fn incr_witness(datum: &RootDatum, lambda: &Weight, m: usize) -> Result<WitnessChain> {
    require_dominant_a(datum, lambda)?;
    require_m(datum.rank(), m)?;
    let s = weighted_left(lambda.coeffs(), m);
    if s <= m as i64 {
        return Err(Error::hypothesis(
            "sum_{i<=m} i*a_i > m",
            format!("sum = {s}, m = {m}"),
        ));
    }
    Ok(incr_core(lambda, m))
}

/// `a_{k+1}` for odd rank, `a_{k+1} + a_{k+2}` for even rank.
fn middle_mass(a: &[i64]) -> i64 {
    let r = a.len();
    let k = half_rank(r);
    if r % 2 == 1 {
        a[k]
    } else {
        a[k] + a[k + 1]
    }
}

fn middle_threshold(r: usize, m: usize) -> i64 {
    if r % 2 == 1 {
        2 * m as i64 + 1
    } else {
        2 * m as i64 + 3
    }
}

/// Core of [`middle_witness`], also valid for `m = 0`.
fn middle_core(lambda: &Weight, m: usize) -> WitnessChain {
    let r = lambda.rank();
    let k = half_rank(r);
    let (k1, m) = (k + 1, m as i64);
    if r % 2 == 1 {
        let mut w = Walk::new(lambda);
        // the window of radius t around k+1 is taken m - t times
        for t in 0..m {
            w.sub_range(k1 - t as usize, k1 + t as usize, m - t);
        }
        return w.finish(lambda);
    }
    let a = lambda.coeffs();
    if a[k] > m && a[k + 1] > m {
        let mut w = Walk::new(lambda);
        for t in 0..m {
            w.sub_range(k1 - t as usize, k1 + 1 + t as usize, m - t);
        }
        return w.finish(lambda);
    }
    if a[k + 1] <= m {
        // rebalance into the previous case: push mass from a_{k+1} to a_{k+2}
        let s = m + 1 - a[k + 1];
        let mut w = Walk::new(lambda);
        for u in 0..s as usize {
            w.sub_range(k1 - u, k1, 1);
        }
        let first = w.finish(lambda);
        let second = middle_core(&first.target, m as usize);
        return first.then(&second);
    }
    mirrored(lambda, |l| middle_core(l, m as usize))
}

/// Makes every coefficient in the middle window positive, given enough
/// mass on the central node(s).
pub fn middle_witness(datum: &RootDatum, lambda: &Weight, m: usize) -> Result<WitnessChain> {
    require_dominant_a(datum, lambda)?;
    let r = datum.rank();
    require_m(r, m)?;
    let t = middle_mass(lambda.coeffs());
    let need = middle_threshold(r, m);
    if t < need {
        let lhs = if r % 2 == 1 { "a_{k+1}" } else { "a_{k+1} + a_{k+2}" };
        return Err(Error::hypothesis(
            format!("{lhs} >= {need}"),
            format!("{lhs} = {t}"),
        ));
    }
    Ok(middle_core(lambda, m))
}

/// Lower bound on `[lambda]` for [`m_good_witness`].
pub fn m_good_threshold(r: usize, m: usize) -> i64 {
    let (k, m) = (half_rank(r) as i64, m as i64);
    if r % 2 == 1 {
        2 * m * (k + 1) + 2 * k + 1
    } else {
        (2 * m + 2) * (k + 1) + 2 * k + 1
    }
}

/// Core of [`m_good_witness`], also valid for `m = 0`.
fn m_good_core(lambda: &Weight, m: usize) -> WitnessChain {
    let r = lambda.rank();
    let k = half_rank(r);
    let need = middle_threshold(r, m);
    let mut chain = WitnessChain::trivial(lambda);
    while middle_mass(chain.target.coeffs()) < need {
        // the outer mass is at least 2k + 1, so one side exceeds k
        assert!(k >= 1, "threshold forces enough central mass when k = 0");
        let cur = &chain.target;
        let step = if weighted_left(cur.coeffs(), k) > k as i64 {
            incr_core(cur, k)
        } else {
            mirrored(cur, |l| incr_core(l, k))
        };
        chain = chain.then(&step);
    }
    let last = middle_core(&chain.target, m);
    chain.then(&last)
}

/// Middle window positivity from a lower bound on `[lambda]` alone.
pub fn m_good_witness(datum: &RootDatum, lambda: &Weight, m: usize) -> Result<WitnessChain> {
    require_dominant_a(datum, lambda)?;
    let r = datum.rank();
    require_m(r, m)?;
    let b = bracket_unchecked(lambda);
    let need = m_good_threshold(r, m);
    if b < need {
        return Err(Error::hypothesis(
            format!("[lambda] >= {need}"),
            format!("[lambda] = {b}"),
        ));
    }
    Ok(m_good_core(lambda, m))
}

/// Some `mu` with the same `[.]` and `b_{k+1} > 0` or `b_{r-k} > 0`.
pub fn middle2_witness(datum: &RootDatum, lambda: &Weight) -> Result<WitnessChain> {
    require_dominant_a(datum, lambda)?;
    let r = datum.rank();
    let k = half_rank(r);
    if k == 0 {
        return Err(Error::RankTooSmall { rank: r });
    }
    let b = bracket_unchecked(lambda);
    if b < 2 * k as i64 + 1 {
        return Err(Error::hypothesis(
            format!("[lambda] >= {}", 2 * k + 1),
            format!("[lambda] = {b}"),
        ));
    }
    let a = lambda.coeffs();
    if a[k] > 0 || a[r - k - 1] > 0 {
        return Ok(WitnessChain::trivial(lambda));
    }
    Ok(if weighted_left(a, k) > k as i64 {
        incr_core(lambda, k)
    } else {
        mirrored(lambda, |l| incr_core(l, k))
    })
}

/// `2 [lambda] >= r^2 + 2r - 2`.
pub fn good_threshold_holds(r: usize, bracket: i64) -> bool {
    let r = r as i64;
    2 * bracket >= r * r + 2 * r - 2
}

/// A good weight below `lambda`, from a lower bound on `[lambda]`.
pub fn good_witness(datum: &RootDatum, lambda: &Weight) -> Result<WitnessChain> {
    require_dominant_a(datum, lambda)?;
    let r = datum.rank();
    let b = bracket_unchecked(lambda);
    if !good_threshold_holds(r, b) {
        return Err(Error::hypothesis(
            "2[lambda] >= r^2 + 2r - 2",
            format!("2[lambda] = {}, r^2 + 2r - 2 = {}", 2 * b, r * r + 2 * r - 2),
        ));
    }
    Ok(m_good_core(lambda, half_rank(r)))
}

/// The 243 good weights built below a weight of A_5 whose third coefficient
/// can be pushed to at least 25.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct A5Family {
    /// `lambda0 ⪰ mu` with `b_3 >= 25`.
    pub anchor: WitnessChain,
    /// `mu - 5 (alpha_2 + 3 alpha_3 + alpha_4)`; every coefficient is at least 5.
    pub gamma: Weight,
    /// `lambda0 ⪰ gamma - delta` for each `delta = sum d_i alpha_i`, `d_i in {0,1,2}`.
    pub members: Vec<WitnessChain>,
}

impl A5Family {
    /// Sum of the W-orbit lengths of the members.
    pub fn orbit_total(&self, datum: &RootDatum) -> Result<BigUint> {
        self.members
            .iter()
            .map(|c| orbit_length(datum, &c.target))
            .sum()
    }
}

pub const A5_CENTRAL_TARGET: i64 = 25;

/// Walks `lambda0` down by [`incr_witness`] with `m = 2` (on whichever side
/// qualifies) until the third coefficient reaches 25.
pub fn a5_anchor(datum: &RootDatum, lambda0: &Weight) -> Result<WitnessChain> {
    require_dominant_a(datum, lambda0)?;
    if datum.rank() != 5 {
        return Err(Error::hypothesis(
            "rank 5",
            format!("rank = {}", datum.rank()),
        ));
    }
    let mut anchor = WitnessChain::trivial(lambda0);
    while anchor.target.coeffs()[2] < A5_CENTRAL_TARGET {
        let a = anchor.target.coeffs();
        let step = if a[0] + 2 * a[1] >= 3 {
            incr_core(&anchor.target, 2)
        } else if a[4] + 2 * a[3] >= 3 {
            mirrored(&anchor.target, |l| incr_core(l, 2))
        } else {
            return Err(Error::hypothesis(
                "some dominant mu below lambda0 has b_3 >= 25",
                format!(
                    "search stalled at {} with [lambda0] = {}",
                    anchor.target,
                    bracket_unchecked(lambda0)
                ),
            ));
        };
        anchor = anchor.then(&step);
    }
    Ok(anchor)
}

pub fn a5_good_family(datum: &RootDatum, lambda0: &Weight) -> Result<A5Family> {
    let anchor = a5_anchor(datum, lambda0)?;
    let mut walk = Walk::new(&anchor.target);
    walk.sub_simple(2, 5);
    walk.sub_simple(3, 15);
    walk.sub_simple(4, 5);
    let to_gamma = walk.finish(&anchor.target);
    let gamma = to_gamma.target.clone();
    let base = anchor.then(&to_gamma);
    let mut members = Vec::with_capacity(243);
    for code in 0..243u32 {
        let mut walk = Walk::new(&gamma);
        let mut c = code;
        for t in 1..=5 {
            walk.sub_simple(t, (c % 3) as i64);
            c /= 3;
        }
        let step = walk.finish(&gamma);
        debug_assert!(is_good(&step.target));
        members.push(base.then(&step));
    }
    Ok(A5Family {
        anchor,
        gamma,
        members,
    })
}

/// Postcondition of [`incr_witness`].
pub fn incr_postcondition(datum: &RootDatum, lambda: &Weight, m: usize, chain: &WitnessChain) -> bool {
    let (a, b) = (lambda.coeffs(), chain.target.coeffs());
    chain.verify(datum)
        && &chain.source == lambda
        && chain.target.is_dominant()
        && bracket_unchecked(lambda) == bracket_unchecked(&chain.target)
        && (m + 2..=a.len()).all(|i| a[i - 1] == b[i - 1])
        && b[m] > a[m]
}

/// Postcondition shared by [`middle_witness`] and [`m_good_witness`].
pub fn window_postcondition(datum: &RootDatum, lambda: &Weight, m: usize, chain: &WitnessChain) -> bool {
    let b = chain.target.coeffs();
    chain.verify(datum)
        && &chain.source == lambda
        && chain.target.is_dominant()
        && middle_window(lambda.rank(), m).all(|i| b[i - 1] > 0)
}

/// Postcondition of [`middle2_witness`].
pub fn middle2_postcondition(datum: &RootDatum, lambda: &Weight, chain: &WitnessChain) -> bool {
    let r = lambda.rank();
    let k = half_rank(r);
    let b = chain.target.coeffs();
    chain.verify(datum)
        && &chain.source == lambda
        && chain.target.is_dominant()
        && bracket_unchecked(lambda) == bracket_unchecked(&chain.target)
        && (b[k] > 0 || b[r - k - 1] > 0)
}

/// Postcondition of [`good_witness`].
pub fn good_postcondition(datum: &RootDatum, lambda: &Weight, chain: &WitnessChain) -> bool {
    chain.verify(datum) && &chain.source == lambda && is_good(&chain.target)
}

/// Dominant weights of rank `r` with coefficient sum at most `total`,
/// lexicographically increasing.
pub fn dominant_weights(r: usize, total: i64) -> Vec<Weight> {
    fn rec(r: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if cur.len() == r {
            out.push(Weight::new(cur.clone()));
            return;
        }
        for x in 0..=left {
            cur.push(x);
            rec(r, left - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(r, total, &mut Vec::new(), &mut out);
    out
}

/// Outcome of running every engine over a box of type-A weights.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub inputs: usize,
    pub witnesses: usize,
    pub rejections: usize,
    /// Engine calls whose witness failed its postcondition, or that were
    /// rejected although the hypothesis holds.
    pub failures: Vec<String>,
}

impl ScanSummary {
    fn record(&mut self, name: &str, lambda: &Weight, hypothesis: bool, outcome: Result<bool>) {
        match (hypothesis, outcome) {
            (true, Ok(true)) => self.witnesses += 1,
            (false, Err(Error::Hypothesis { .. })) => self.rejections += 1,
            (true, Ok(false)) => self.failures.push(format!("{name} {lambda}: postcondition fails")),
            (h, o) => self.failures.push(format!("{name} {lambda}: hypothesis {h}, outcome {o:?}")),
        }
    }
}

/// Runs each engine on every dominant weight of rank in `ranks` with
/// coefficient sum at most `total`, rechecking every witness.
pub fn scan_lemmas(ranks: RangeInclusive<usize>, total: i64) -> ScanSummary {
    let mut s = ScanSummary::default();
    for r in ranks {
        let d = RootDatum::type_a(r).expect("positive rank");
        let k = half_rank(r);
        for l in dominant_weights(r, total) {
            s.inputs += 1;
            let br = bracket_unchecked(&l);
            for m in 1..=k {
                s.record(
                    &format!("incr(m={m})"),
                    &l,
                    weighted_left(l.coeffs(), m) > m as i64,
                    incr_witness(&d, &l, m).map(|c| incr_postcondition(&d, &l, m, &c)),
                );
                s.record(
                    &format!("middle(m={m})"),
                    &l,
                    middle_mass(l.coeffs()) >= middle_threshold(r, m),
                    middle_witness(&d, &l, m).map(|c| window_postcondition(&d, &l, m, &c)),
                );
                s.record(
                    &format!("m_good(m={m})"),
                    &l,
                    br >= m_good_threshold(r, m),
                    m_good_witness(&d, &l, m).map(|c| window_postcondition(&d, &l, m, &c)),
                );
            }
            if k >= 1 {
                s.record(
                    "middle2",
                    &l,
                    br > 2 * k as i64,
                    middle2_witness(&d, &l).map(|c| middle2_postcondition(&d, &l, &c)),
                );
            }
            s.record(
                "good",
                &l,
                good_threshold_holds(r, br),
                good_witness(&d, &l).map(|c| good_postcondition(&d, &l, &c)),
            );
        }
    }
    s
}

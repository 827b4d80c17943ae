//! Dimension lower bounds and upper bounds on the number of small
//! representations.
//!
//! Real-valued quantities are returned as outward-rounded [`Interval`]s and
//! every strict real inequality goes through [`certify_lt`]. Natural
//! logarithms are used everywhere except in `f5`, which uses `log2`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::dominance::{orbit_length, require_type_a, saturated_dominant_set};
use crate::error::{Error, Result};
use crate::interval::{certify_lt, Certificate, Interval, IntervalRepr, Precision, Verdict};
use crate::rootdata::{is_prime, is_restricted, Characteristic, Family, RootDatum, Weight};
use crate::witness::half_rank;

pub fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn ratio_interval(prec: u32, q: &BigRational) -> Interval {
    Interval::from_ratio(prec, q.numer(), q.denom())
}

fn frac(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// A bound's value, tagged so exact integers are never confused with
/// certified enclosures.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum BoundValue {
    Exact {
        #[serde(with = "crate::decimal")]
        value: BigUint,
    },
    Interval(IntervalRepr),
    /// A value taken from outside sources and not recomputed here.
    External { note: String },
}

impl BoundValue {
    pub fn exact(v: impl Into<BigUint>) -> Self {
        BoundValue::Exact { value: v.into() }
    }

    pub fn as_exact(&self) -> Option<&BigUint> {
        match self {
            BoundValue::Exact { value } => Some(value),
            _ => None,
        }
    }

    /// An enclosure of the value at `prec` bits; `None` for external values.
    pub fn to_interval(&self, prec: u32) -> Option<Interval> {
        match self {
            BoundValue::Exact { value } => Some(Interval::from_biguint(prec, value)),
            BoundValue::Interval(r) => r.to_interval(),
            BoundValue::External { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub name: String,
    pub formula: String,
    pub value: BoundValue,
    /// False whenever a hypothesis of the underlying statement fails.
    pub valid: bool,
    pub guard_detail: String,
    pub inputs: BTreeMap<String, String>,
    /// Facts consumed from external tables and not checked here.
    pub assumptions: Vec<String>,
}

fn inputs<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

/// `1 + (r + 1) (prod (1 + floor(a_i / 2)) - 1)`.
pub fn n_lambda(datum: &RootDatum, lambda: &Weight) -> Result<BigUint> {
    require_type_a(datum, lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.coeffs().to_vec()));
    }
    let prod: BigUint = lambda
        .coeffs()
        .iter()
        .map(|&a| BigUint::from((1 + a / 2) as u64))
        .product();
    Ok(BigUint::one() + BigUint::from(datum.rank() + 1) * (prod - 1u32))
}

/// Why the saturated-set description of the weights may fail in
/// characteristic `p`, if it does.
pub fn premet_violation(family: Family, p: Characteristic) -> Option<String> {
    let p = p.get();
    if family == Family::G && (p == 2 || p == 3) {
        return Some(format!("p = {p} excluded for G2 (need p not in {{2, 3}})"));
    }
    if family.has_two_root_lengths() && p == 2 {
        return Some(format!("p = 2 excluded for {family} (two root lengths)"));
    }
    None
}

/// Sum of orbit lengths over the saturated set below `lambda`.
pub fn premet_sum(datum: &RootDatum, lambda: &Weight, cap: usize) -> Result<BigUint> {
    saturated_dominant_set(datum, lambda, cap)?
        .iter()
        .map(|c| orbit_length(datum, &c.target))
        .sum()
}

/// Lower bound for `dim L(lambda)`: every weight below `lambda` in the
/// saturated set occurs, with its whole orbit.
pub fn premet_lower(
    datum: &RootDatum,
    lambda: &Weight,
    p: Characteristic,
    cap: usize,
) -> Result<BoundReport> {
    datum.check_weight(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.coeffs().to_vec()));
    }
    let value = premet_sum(datum, lambda, cap)?;
    let mut problems = Vec::new();
    if !p.is_zero() && !is_restricted(lambda, p) {
        problems.push(format!("{lambda} is not {}-restricted", p.get()));
    }
    if let Some(v) = premet_violation(datum.family(), p) {
        problems.push(v);
    }
    Ok(BoundReport {
        name: "premet_lower".into(),
        formula: "sum of |W mu| over dominant mu below lambda".into(),
        value: BoundValue::exact(value),
        valid: problems.is_empty(),
        guard_detail: if problems.is_empty() {
            "hypotheses hold".into()
        } else {
            problems.join("; ")
        },
        inputs: inputs([
            ("type", datum.label()),
            ("lambda", lambda.to_string()),
            ("p", p.get().to_string()),
        ]),
        assumptions: Vec::new(),
    })
}

fn require_at_least_one(d: &BigRational) -> Result<()> {
    if *d < BigRational::one() {
        return Err(Error::Domain(format!("need d >= 1, got {d}")));
    }
    Ok(())
}

fn floor_u64(d: &BigRational) -> Result<u64> {
    d.floor()
        .to_integer()
        .to_u64()
        .ok_or_else(|| Error::Domain(format!("{d} is too large")))
}

/// `h(d) = 1 + 1/2 + ... + 1/floor(d)`.
pub fn harmonic(d: &BigRational) -> Result<BigRational> {
    require_at_least_one(d)?;
    let top = floor_u64(d)?;
    Ok((1..=top).fold(BigRational::zero(), |acc, j| {
        acc + BigRational::new(BigInt::one(), j.into())
    }))
}

/// Certifies `h(d) < 1 + ln d`.
pub fn harmonic_log_bound(d: &BigRational, prec: Precision) -> Result<Certificate> {
    let h = harmonic(d)?;
    Ok(certify_lt(prec, |b| {
        let one = Interval::from_i64(b, 1);
        (ratio_interval(b, &h), one.add(&ratio_interval(b, d).ln()))
    }))
}

/// Number of `r`-tuples of positive integers with product at most `d`.
///
/// Memoized on `(r, floor(d))`; `budget` caps the number of memo entries.
pub fn g_count(r: usize, d: &BigRational, budget: usize) -> Result<BigUint> {
    if r == 0 {
        return Err(Error::Domain("need r >= 1".into()));
    }
    require_at_least_one(d)?;
    let top = floor_u64(d)?;
    let mut memo = HashMap::new();
    g_rec(r, top, &mut memo, budget)
}

fn g_rec(
    r: usize,
    top: u64,
    memo: &mut HashMap<(usize, u64), BigUint>,
    budget: usize,
) -> Result<BigUint> {
    if r == 1 {
        return Ok(BigUint::from(top));
    }
    if let Some(v) = memo.get(&(r, top)) {
        return Ok(v.clone());
    }
    // j in [lo, hi] all share the quotient top / j
    let mut total = BigUint::zero();
    let mut lo = 1;
    while lo <= top {
        let q = top / lo;
        let hi = top / q;
        total += BigUint::from(hi - lo + 1) * g_rec(r - 1, q, memo, budget)?;
        lo = hi + 1;
    }
    memo.insert((r, top), total.clone());
    if memo.len() > budget {
        return Err(Error::CapExceeded { cap: budget });
    }
    Ok(total)
}

/// Checks `g(r, d) <= d h(d)^(r-1)` exactly.
pub fn g_bound_holds(r: usize, d: &BigRational, budget: usize) -> Result<bool> {
    let g = BigRational::from_integer(g_count(r, d, budget)?.into());
    let h = harmonic(d)?;
    let rhs = (1..r).fold(d.clone(), |acc, _| acc * &h);
    Ok(g <= rhs)
}

/// `d = 1 + (n - 1) / (r + 1)`.
pub fn bound2_d(r: usize, n: &BigUint) -> BigRational {
    let n = BigInt::from(n.clone());
    BigRational::one() + BigRational::new(n - 1, BigInt::from(r + 1))
}

/// `2^r d (1 + ln d)^(r-1)` with `d = 1 + (n - 1) / (r + 1)`.
pub fn bound2_value(r: usize, n: &BigUint, prec: u32) -> Result<Interval> {
    if r == 0 || n.is_zero() {
        return Err(Error::Domain("need r >= 1 and n >= 1".into()));
    }
    let d = ratio_interval(prec, &bound2_d(r, n));
    let one = Interval::from_i64(prec, 1);
    let log_part = one.add(&d.ln()).powi(r as u32 - 1);
    Ok(Interval::from_i64(prec, 2).powi(r as u32).mul(&d).mul(&log_part))
}

/// `ln n / ln ln n`.
pub fn log_ratio(n: &BigUint, prec: u32) -> Interval {
    let ln = Interval::from_biguint(prec, n).ln();
    ln.div(&ln.ln())
}

/// Certifies `r + 1 < 1.8 ln n / ln ln n`.
pub fn ratio_holds(r: usize, n: &BigUint, prec: Precision) -> Result<Certificate> {
    let floor = factorial(r as u64 + 1).max(BigUint::from(6u32));
    if *n < floor {
        return Err(Error::hypothesis(
            "n >= max(6, (r+1)!)",
            format!("n = {n}, max(6, (r+1)!) = {floor}"),
        ));
    }
    Ok(certify_lt(prec, |b| {
        let rhs = log_ratio(n, b).mul(&Interval::from_frac(b, 9, 5));
        (Interval::from_i64(b, r as i64 + 1), rhs)
    }))
}

/// `(r + 1) / (ln n / ln ln n)` at `n = (r + 1)!`: the constant the ratio
/// inequality has to beat.
pub fn ratio_constant(r: usize, prec: u32) -> Interval {
    let n = factorial(r as u64 + 1);
    Interval::from_i64(prec, r as i64 + 1).div(&log_ratio(&n, prec))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FFunction {
    F1,
    F2,
    F3,
    F4,
    F5,
}

impl FromStr for FFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "f1" => Ok(FFunction::F1),
            "f2" => Ok(FFunction::F2),
            "f3" => Ok(FFunction::F3),
            "f4" => Ok(FFunction::F4),
            "f5" => Ok(FFunction::F5),
            _ => Err(Error::UnknownFunction(s.to_string())),
        }
    }
}

impl fmt::Display for FFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FFunction::F1 => "f1",
            FFunction::F2 => "f2",
            FFunction::F3 => "f3",
            FFunction::F4 => "f4",
            FFunction::F5 => "f5",
        };
        f.write_str(s)
    }
}

/// `exp(2 pi sqrt(x))`.
fn exp_two_pi_sqrt(x: &Interval) -> Interval {
    let p = x.prec();
    Interval::pi(p).mul_i64(2).mul(&x.sqrt()).exp()
}

fn big(v: &BigUint) -> BigInt {
    BigInt::from(v.clone())
}

fn rat_iv(prec: u32, num: BigInt, den: i64) -> Interval {
    Interval::from_ratio(prec, &num, &BigInt::from(den))
}

/// Evaluates one of the five growth functions at `arg` (`r` for f1 to f3,
/// `m` for f4, `n` for f5).
pub fn f_value(f: FFunction, arg: &BigUint, prec: u32) -> Result<Interval> {
    let x = big(arg);
    let need = |ok: bool, what: &str| {
        if ok {
            Ok(())
        } else {
            Err(Error::Domain(format!("{f} needs {what}, got {arg}")))
        }
    };
    let p = prec;
    Ok(match f {
        FFunction::F1 => {
            need(x >= BigInt::one(), "r >= 1")?;
            let front = rat_iv(p, (&x + 1u32).pow(4), 8);
            let inner = rat_iv(p, &x * &x + 2 * &x - 3, 6);
            front.mul(&exp_two_pi_sqrt(&inner))
        }
        FFunction::F2 => {
            need(x >= BigInt::one(), "r >= 1")?;
            let (base, inner) = if &x % 2u32 == BigInt::one() {
                (
                    rat_iv(p, &x * &x + 6 * &x + 11, 6),
                    rat_iv(p, &x * &x + 6 * &x - 1, 18),
                )
            } else {
                (
                    rat_iv(p, &x * &x + 12 * &x, 6),
                    rat_iv(p, &x * &x + 12 * &x - 12, 18),
                )
            };
            base.powi(2).div_i64(2).mul(&exp_two_pi_sqrt(&inner))
        }
        FFunction::F3 => {
            need(x >= BigInt::one(), "r >= 1")?;
            let front = rat_iv(p, 8 * &x * &x, 1);
            front.mul(&exp_two_pi_sqrt(&rat_iv(p, 4 * &x - 2, 3)))
        }
        FFunction::F4 => {
            let front = rat_iv(p, 2 * (&x + 1u32).pow(2), 1);
            front.mul(&exp_two_pi_sqrt(&rat_iv(p, 2 * &x, 3)))
        }
        FFunction::F5 => {
            need(x >= BigInt::one(), "n >= 1")?;
            let l = Interval::from_biguint(p, arg).log2();
            l.mul_i64(4).mul(&exp_two_pi_sqrt(&l.div_i64(3)))
        }
    })
}

/// `binom(r + 1, k + 1)`: the lower end of the mid range.
pub fn d1(r: usize) -> BigUint {
    binomial(r as u64 + 1, half_rank(r) as u64 + 1)
}

/// `(r + 2)^(2 floor(r / 6))`.
pub fn d2(r: usize) -> BigUint {
    BigUint::from(r + 2).pow(2 * (r as u32 / 6))
}

/// `(r + 1)! / ((k - 1)!)^2`; needs `k >= 1`.
pub fn d3(r: usize) -> Result<BigUint> {
    let k = half_rank(r);
    if k == 0 {
        return Err(Error::RankTooSmall { rank: r });
    }
    Ok(factorial(r as u64 + 1) / factorial(k as u64 - 1).pow(2))
}

/// `2^(m + 1)`.
pub fn d4(m: u32) -> BigUint {
    BigUint::one() << (m + 1)
}

/// `(sum_{j=m}^{r} binom(r, j), (r + 1)! / (m + 1)!)`.
pub fn char2_counts(r: u64, m: u64) -> Result<(BigUint, BigUint)> {
    if m > r {
        return Err(Error::Domain(format!("need 0 <= m <= r, got m = {m}, r = {r}")));
    }
    let sum = (m..=r).map(|j| binomial(r, j)).sum();
    Ok((sum, factorial(r + 1) / factorial(m + 1)))
}

/// Smallest dimension of a nontrivial restricted module that the inductive
/// steps outside type A rely on. Taken from external tables.
pub fn min_nontrivial_dim(family: Family) -> Option<u64> {
    match family {
        Family::C => Some(4),
        Family::B => Some(7),
        Family::D => Some(8),
        Family::E => None,
        Family::F => Some(25),
        Family::A | Family::G => None,
    }
}

fn min_dim_for(family: Family, rank: usize) -> Option<u64> {
    match (family, rank) {
        (Family::E, 6) => Some(27),
        (Family::E, 7) => Some(56),
        (Family::E, 8) => Some(248),
        _ => min_nontrivial_dim(family),
    }
}

/// An exponent `num / den` on `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Exponent(u32, u32);

impl Exponent {
    fn eval(self, n: &BigUint, prec: u32) -> BoundValue {
        if self.1 == 1 {
            return BoundValue::exact(n.pow(self.0));
        }
        BoundValue::Interval(self.interval(n, prec).repr())
    }

    fn interval(self, n: &BigUint, prec: u32) -> Interval {
        let e = Interval::from_frac(prec, self.0 as i64, self.1 as i64);
        Interval::from_biguint(prec, n).pow(&e)
    }

    fn text(self) -> String {
        match self {
            Exponent(e, 1) => format!("n^{e}"),
            Exponent(9, 4) => "n^(9/4)".into(),
            Exponent(n, d) => format!("n^{}", n as f64 / d as f64),
        }
    }
}

/// Upper bound for the number of restricted irreducible modules of
/// dimension at most `n`, with the guard conditions that selected it.
pub fn rn_upper(family: Family, rank: usize, n: &BigUint, p: u64, prec: u32) -> Result<BoundReport> {
    let datum = RootDatum::new(family, rank)?;
    if n.is_zero() {
        return Err(Error::Domain("need n >= 1".into()));
    }
    let mut report = BoundReport {
        name: String::new(),
        formula: String::new(),
        value: BoundValue::exact(1u32),
        valid: true,
        guard_detail: String::new(),
        inputs: inputs([
            ("type", datum.label()),
            ("n", n.to_string()),
            ("p", p.to_string()),
        ]),
        assumptions: Vec::new(),
    };
    let mut notes = Vec::new();
    if !is_prime(p) {
        report.valid = false;
        notes.push(format!("p = {p} is not prime"));
    }
    let set = |report: &mut BoundReport, name: &str, e: Exponent| {
        report.name = name.into();
        report.formula = e.text();
        report.value = e.eval(n, prec);
    };
    if n.is_one() {
        report.name = "trivial".into();
        report.formula = "1".into();
        notes.push("n = 1: only the trivial module".into());
    } else if p == 2 {
        set(&mut report, "char2", Exponent(1, 1));
        notes.push("p = 2".into());
    } else if family == Family::A {
        let large = factorial(rank as u64 + 1);
        if rank == 5 {
            set(&mut report, "a5", Exponent(5, 2));
            notes.push("type A5".into());
            if *n <= BigUint::from(2500u32) {
                report
                    .assumptions
                    .push("R_n <= n for n <= 2500 in A5 (external tables)".into());
            }
        } else if *n >= large {
            report.name = "a_large".into();
            report.formula = "n^3.4 / r^3".into();
            let v = Exponent(17, 5)
                .interval(n, prec)
                .div(&Interval::from_i64(prec, (rank as i64).pow(3)));
            report.value = BoundValue::Interval(v.repr());
            notes.push(format!("n >= (r+1)! = {large}: large range"));
            let n_u = n.to_u64().unwrap_or(u64::MAX);
            if rank == 3 && (24..=500).contains(&n_u) {
                report
                    .assumptions
                    .push("R_500 < 200 for A3 (external tables)".into());
            }
            if rank == 4 && (120..720).contains(&n_u) {
                report
                    .assumptions
                    .push("R_719 <= 170 for A4 (external tables)".into());
            }
        } else {
            set(&mut report, "a_general", Exponent(19, 5));
            let lower = d1(rank);
            if *n >= lower {
                report.name = "a_mid".into();
                notes.push(format!("d1 = {lower} <= n < (r+1)! = {large}: mid range"));
                if (11..=20).contains(&rank) && *n < BigUint::from(rank + 1).pow(4) {
                    report.assumptions.push(
                        "restricted modules below (r+1)^4 number fewer than d1^3.29 (external tables)"
                            .into(),
                    );
                }
            } else {
                report.name = "a_small".into();
                notes.push(format!("n < d1 = {lower}: small range"));
            }
            if (2..=10).contains(&rank) {
                report.assumptions.push(
                    "restricted modules up to B(r) >= (r+1)^4 number fewer than (r+1)^2.7 (external tables)"
                        .into(),
                );
            }
        }
    } else {
        let (name, e) = match (family, rank) {
            (Family::C, _) | (Family::F, _) | (Family::G, _) => ("c_f4_g2", Exponent(2, 1)),
            (Family::E, 6) => ("e6", Exponent(5, 2)),
            _ => ("b_d_e7_e8", Exponent(9, 4)),
        };
        set(&mut report, name, e);
        if let Some(min) = min_dim_for(family, rank) {
            report.assumptions.push(format!(
                "smallest nontrivial dimension {min} in the inductive step (external tables)"
            ));
            if *n < BigUint::from(min) {
                notes.push(format!("n < {min}: only the trivial module fits, bound is slack"));
            } else {
                notes.push(format!("n >= {min}"));
            }
        }
        if let Some(v) = premet_violation(family, Characteristic::new(p).unwrap_or(Characteristic::ZERO))
        {
            if p != 2 {
                report.valid = false;
                notes.push(v);
            }
        }
    }
    report.guard_detail = notes.join("; ");
    Ok(report)
}

/// Exact Bernoulli numbers `B_2, B_4, ..., B_24`.
const BERNOULLI_EVEN: [(i64, i64); 12] = [
    (1, 6),
    (-1, 30),
    (1, 42),
    (-1, 30),
    (5, 66),
    (-691, 2730),
    (7, 6),
    (-3617, 510),
    (43867, 798),
    (-174611, 330),
    (854513, 138),
    (-236364091, 2730),
];

/// Certified enclosure of the Riemann zeta function at rational `s > 1`.
///
/// Sums `n^-s` for `n < N`, then brackets the tail with the Euler-Maclaurin
/// expansion: for the completely monotone `x^-s` the remainder after any
/// correction term lies between zero and the next term.
pub fn zeta(s: &BigRational, prec: u32) -> Result<Interval> {
    if *s <= BigRational::one() {
        return Err(Error::Domain(format!("zeta needs s > 1, got {s}")));
    }
    let p = prec;
    let sv = ratio_interval(p, s);
    let neg_s = sv.neg();
    let n_cut = (prec as i64).clamp(64, 4096);
    let mut head = Interval::from_i64(p, 0);
    for k in 1..n_cut {
        head = head.add(&Interval::from_i64(p, k).pow(&neg_s));
    }
    let big_n = Interval::from_i64(p, n_cut);
    let one = Interval::from_i64(p, 1);
    let f_n = big_n.pow(&neg_s);
    let integral = big_n.pow(&one.sub(&sv)).div(&sv.sub(&one));
    let mut sum = head.add(&integral).add(&f_n.div_i64(2));
    // rising = s (s+1) ... (s+2j-2); power = N^(-s-2j+1)
    let mut rising = sv.clone();
    let mut power = f_n.div(&big_n);
    let mut fact = BigInt::from(2);
    let n_sq = big_n.mul(&big_n);
    let terms = BERNOULLI_EVEN.len();
    let mut last = None;
    for (j, &(num, den)) in BERNOULLI_EVEN.iter().enumerate() {
        let j1 = j as i64 + 1;
        if j > 0 {
            rising = rising
                .mul(&sv.add(&Interval::from_i64(p, 2 * j1 - 3)))
                .mul(&sv.add(&Interval::from_i64(p, 2 * j1 - 2)));
            power = power.div(&n_sq);
            fact *= (2 * j1 - 1) * (2 * j1);
        }
        let coeff = Interval::from_ratio(p, &BigInt::from(num), &(BigInt::from(den) * &fact));
        let term = coeff.mul(&rising).mul(&power);
        if j + 1 == terms {
            last = Some(term);
        } else {
            sum = sum.add(&term);
        }
    }
    let last = last.expect("at least one correction term");
    Ok(sum.hull(&sum.add(&last)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TailForm {
    /// `c = zeta(s) - 1 + 2^-s`.
    Single,
    /// `c = zeta(s) (zeta(s) - 1) + zeta(s) 2^-s`.
    Double,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TailCheck {
    pub s: String,
    pub form: TailForm,
    pub n0: u64,
    pub constant: IntervalRepr,
    /// `c < 1`, so `n^s (1 - c)` grows with `n`.
    pub below_one: Certificate,
    /// `1 < n0^s (1 - c)`.
    pub at_threshold: Certificate,
    pub verdict: Verdict,
}

fn tail_constant(s: &BigRational, form: TailForm, prec: u32) -> Result<Interval> {
    let z = zeta(s, prec)?;
    let one = Interval::from_i64(prec, 1);
    let two_pow = Interval::from_i64(prec, 2).pow(&ratio_interval(prec, s).neg());
    Ok(match form {
        TailForm::Single => z.sub(&one).add(&two_pow),
        TailForm::Double => z.mul(&z.sub(&one)).add(&z.mul(&two_pow)),
    })
}

/// Certifies `1 + n^s c < n^s` for every integer `n >= n0`.
pub fn zeta_tail_check(s: &BigRational, form: TailForm, n0: u64, prec: Precision) -> Result<TailCheck> {
    if n0 == 0 {
        return Err(Error::Domain("need n0 >= 1".into()));
    }
    let constant = tail_constant(s, form, prec.start)?;
    let below_one = certify_lt(prec, |b| {
        let c = tail_constant(s, form, b).expect("s > 1 checked above");
        (c, Interval::from_i64(b, 1))
    });
    let at_threshold = certify_lt(prec, |b| {
        let c = tail_constant(s, form, b).expect("s > 1 checked above");
        let gap = Interval::from_i64(b, 1).sub(&c);
        let ns = Interval::from_i64(b, n0 as i64).pow(&ratio_interval(b, s));
        (Interval::from_i64(b, 1), ns.mul(&gap))
    });
    let verdict = below_one.verdict.and(at_threshold.verdict);
    Ok(TailCheck {
        s: s.to_string(),
        form,
        n0,
        constant: constant.repr(),
        below_one,
        at_threshold,
        verdict,
    })
}

/// The exponent, tail form and threshold used in the inductive step for
/// each family outside type A; `None` for A and G2.
pub fn family_tail(family: Family, rank: usize) -> Option<(BigRational, TailForm, u64)> {
    let nine_quarters = frac(9, 4);
    match (family, rank) {
        (Family::C, _) => Some((frac(2, 1), TailForm::Single, 4)),
        (Family::B, _) => Some((nine_quarters, TailForm::Double, 7)),
        (Family::D, _) => Some((nine_quarters, TailForm::Double, 8)),
        (Family::E, 6) => Some((frac(5, 2), TailForm::Single, 27)),
        (Family::E, 7) => Some((nine_quarters, TailForm::Single, 56)),
        (Family::E, 8) => Some((nine_quarters, TailForm::Single, 248)),
        (Family::F, _) => Some((frac(2, 1), TailForm::Single, 25)),
        _ => None,
    }
}

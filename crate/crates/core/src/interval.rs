//! Outward-rounded interval arithmetic on top of MPFR.
//!
//! Every operation rounds the lower endpoint down and the upper endpoint up,
//! so the true real value always lies in `[lo, hi]`. Strict inequalities are
//! decided by [`certify_lt`], which doubles the working precision until the
//! two sides separate or the ceiling is reached.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use rug::float::{Constant, Round};
use rug::ops::Pow;
use rug::{Float, Integer};
use serde::{Deserialize, Serialize};

pub const DEFAULT_PRECISION: u32 = 256;
pub const MAX_PRECISION: u32 = 1024;

/// Working-precision schedule: start at `start` bits, double up to `max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Precision {
    pub start: u32,
    pub max: u32,
}

impl Default for Precision {
    fn default() -> Self {
        Precision {
            start: DEFAULT_PRECISION,
            max: MAX_PRECISION,
        }
    }
}

impl Precision {
    pub fn fixed(bits: u32) -> Self {
        Precision {
            start: bits,
            max: bits,
        }
    }

    pub fn with_max(max: u32) -> Self {
        Precision {
            start: DEFAULT_PRECISION.min(max),
            max,
        }
    }

    fn schedule(self) -> impl Iterator<Item = u32> {
        let max = self.max.max(self.start);
        std::iter::successors(Some(self.start.max(16)), move |&p| {
            (p < max).then(|| (p * 2).min(max))
        })
    }
}

#[derive(Clone, PartialEq)]
pub struct Interval {
    lo: Float,
    hi: Float,
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo.to_f64(), self.hi.to_f64())
    }
}

fn big_to_integer(n: &BigInt) -> Integer {
    Integer::from_str_radix(&n.to_str_radix(16), 16).expect("hex digits")
}

impl Interval {
    pub fn prec(&self) -> u32 {
        self.lo.prec()
    }

    pub fn lo(&self) -> &Float {
        &self.lo
    }

    pub fn hi(&self) -> &Float {
        &self.hi
    }

    pub fn from_i64(prec: u32, v: i64) -> Self {
        Interval {
            lo: Float::with_val_round(prec, v, Round::Down).0,
            hi: Float::with_val_round(prec, v, Round::Up).0,
        }
    }

    pub fn from_bigint(prec: u32, v: &BigInt) -> Self {
        let v = big_to_integer(v);
        Interval {
            lo: Float::with_val_round(prec, &v, Round::Down).0,
            hi: Float::with_val_round(prec, &v, Round::Up).0,
        }
    }

    pub fn from_biguint(prec: u32, v: &BigUint) -> Self {
        Self::from_bigint(prec, &BigInt::from(v.clone()))
    }

    /// The rational `num / den`, `den != 0`.
    pub fn from_ratio(prec: u32, num: &BigInt, den: &BigInt) -> Self {
        let q = rug::Rational::from((big_to_integer(num), big_to_integer(den)));
        Interval {
            lo: Float::with_val_round(prec, &q, Round::Down).0,
            hi: Float::with_val_round(prec, &q, Round::Up).0,
        }
    }

    pub fn from_frac(prec: u32, num: i64, den: i64) -> Self {
        Self::from_ratio(prec, &BigInt::from(num), &BigInt::from(den))
    }

    pub fn pi(prec: u32) -> Self {
        Interval {
            lo: Float::with_val_round(prec, Constant::Pi, Round::Down).0,
            hi: Float::with_val_round(prec, Constant::Pi, Round::Up).0,
        }
    }

    pub fn add(&self, o: &Interval) -> Interval {
        let p = self.prec();
        Interval {
            lo: Float::with_val_round(p, &self.lo + &o.lo, Round::Down).0,
            hi: Float::with_val_round(p, &self.hi + &o.hi, Round::Up).0,
        }
    }

    pub fn sub(&self, o: &Interval) -> Interval {
        let p = self.prec();
        Interval {
            lo: Float::with_val_round(p, &self.lo - &o.hi, Round::Down).0,
            hi: Float::with_val_round(p, &self.hi - &o.lo, Round::Up).0,
        }
    }

    pub fn neg(&self) -> Interval {
        Interval {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    pub fn mul(&self, o: &Interval) -> Interval {
        let p = self.prec();
        let pairs = [
            (&self.lo, &o.lo),
            (&self.lo, &o.hi),
            (&self.hi, &o.lo),
            (&self.hi, &o.hi),
        ];
        let lo = pairs
            .iter()
            .map(|(a, b)| Float::with_val_round(p, *a * *b, Round::Down).0)
            .min_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal))
            .unwrap();
        let hi = pairs
            .iter()
            .map(|(a, b)| Float::with_val_round(p, *a * *b, Round::Up).0)
            .max_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal))
            .unwrap();
        Interval { lo, hi }
    }

    /// Division by an interval that does not contain zero.
    pub fn div(&self, o: &Interval) -> Interval {
        assert!(
            o.lo > 0 || o.hi < 0,
            "interval division by an interval containing zero"
        );
        let p = self.prec();
        let pairs = [
            (&self.lo, &o.lo),
            (&self.lo, &o.hi),
            (&self.hi, &o.lo),
            (&self.hi, &o.hi),
        ];
        let lo = pairs
            .iter()
            .map(|(a, b)| Float::with_val_round(p, *a / *b, Round::Down).0)
            .min_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal))
            .unwrap();
        let hi = pairs
            .iter()
            .map(|(a, b)| Float::with_val_round(p, *a / *b, Round::Up).0)
            .max_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal))
            .unwrap();
        Interval { lo, hi }
    }

    pub fn mul_i64(&self, k: i64) -> Interval {
        self.mul(&Interval::from_i64(self.prec(), k))
    }

    pub fn div_i64(&self, k: i64) -> Interval {
        self.div(&Interval::from_i64(self.prec(), k))
    }

    pub fn exp(&self) -> Interval {
        let p = self.prec();
        Interval {
            lo: Float::with_val_round(p, self.lo.exp_ref(), Round::Down).0,
            hi: Float::with_val_round(p, self.hi.exp_ref(), Round::Up).0,
        }
    }

    /// Natural logarithm of a positive interval.
    pub fn ln(&self) -> Interval {
        assert!(self.lo > 0, "logarithm of a non-positive interval");
        let p = self.prec();
        Interval {
            lo: Float::with_val_round(p, self.lo.ln_ref(), Round::Down).0,
            hi: Float::with_val_round(p, self.hi.ln_ref(), Round::Up).0,
        }
    }

    pub fn log2(&self) -> Interval {
        assert!(self.lo > 0, "logarithm of a non-positive interval");
        let p = self.prec();
        Interval {
            lo: Float::with_val_round(p, self.lo.log2_ref(), Round::Down).0,
            hi: Float::with_val_round(p, self.hi.log2_ref(), Round::Up).0,
        }
    }

    /// Square root of a non-negative interval.
    pub fn sqrt(&self) -> Interval {
        assert!(self.lo >= 0, "square root of a negative interval");
        let p = self.prec();
        Interval {
            lo: Float::with_val_round(p, self.lo.sqrt_ref(), Round::Down).0,
            hi: Float::with_val_round(p, self.hi.sqrt_ref(), Round::Up).0,
        }
    }

    /// Non-negative integer power.
    pub fn powi(&self, e: u32) -> Interval {
        if e == 0 {
            return Interval::from_i64(self.prec(), 1);
        }
        if self.lo >= 0 {
            let p = self.prec();
            Interval {
                lo: Float::with_val_round(p, (&self.lo).pow(e), Round::Down).0,
                hi: Float::with_val_round(p, (&self.hi).pow(e), Round::Up).0,
            }
        } else {
            (1..e).fold(self.clone(), |acc, _| acc.mul(self))
        }
    }

    /// `self^e` for a positive base, via `exp(e ln self)`.
    pub fn pow(&self, e: &Interval) -> Interval {
        self.ln().mul(e).exp()
    }

    pub fn max(&self, o: &Interval) -> Interval {
        Interval {
            lo: if self.lo > o.lo { self.lo.clone() } else { o.lo.clone() },
            hi: if self.hi > o.hi { self.hi.clone() } else { o.hi.clone() },
        }
    }

    /// Smallest interval containing both.
    pub fn hull(&self, o: &Interval) -> Interval {
        Interval {
            lo: if self.lo < o.lo { self.lo.clone() } else { o.lo.clone() },
            hi: if self.hi > o.hi { self.hi.clone() } else { o.hi.clone() },
        }
    }

    /// Certain strict comparison: `Some(true)` if every point of `self` is
    /// below every point of `o`, `Some(false)` if `self >= o` everywhere,
    /// `None` when the intervals overlap.
    pub fn lt(&self, o: &Interval) -> Option<bool> {
        if self.hi < o.lo {
            Some(true)
        } else if self.lo >= o.hi {
            Some(false)
        } else {
            None
        }
    }

    /// Certain non-strict comparison `self <= o`.
    pub fn le(&self, o: &Interval) -> Option<bool> {
        if self.hi <= o.lo {
            Some(true)
        } else if self.lo > o.hi {
            Some(false)
        } else {
            None
        }
    }

    pub fn contains_f64(&self, x: f64) -> bool {
        self.lo <= x && self.hi >= x
    }

    pub fn midpoint_f64(&self) -> f64 {
        let p = self.prec();
        let s = Float::with_val(p, &self.lo + &self.hi);
        (s / 2u32).to_f64()
    }

    pub fn width_f64(&self) -> f64 {
        Float::with_val_round(self.prec(), &self.hi - &self.lo, Round::Up)
            .0
            .to_f64()
    }

    pub fn repr(&self) -> IntervalRepr {
        IntervalRepr::from(self)
    }
}

/// Serializable interval: decimal endpoints rounded outward.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntervalRepr {
    pub lo: String,
    pub hi: String,
    pub prec: u32,
}

impl From<&Interval> for IntervalRepr {
    fn from(iv: &Interval) -> Self {
        let digits = Some(((iv.prec() as f64) * std::f64::consts::LOG10_2).ceil() as usize + 2);
        IntervalRepr {
            lo: iv.lo.to_string_radix_round(10, digits, Round::Down),
            hi: iv.hi.to_string_radix_round(10, digits, Round::Up),
            prec: iv.prec(),
        }
    }
}

impl IntervalRepr {
    /// Parses the endpoints back, rounding outward.
    pub fn to_interval(&self) -> Option<Interval> {
        let lo = Float::parse(&self.lo).ok()?;
        let hi = Float::parse(&self.hi).ok()?;
        Some(Interval {
            lo: Float::with_val_round(self.prec, lo, Round::Down).0,
            hi: Float::with_val_round(self.prec, hi, Round::Up).0,
        })
    }

    pub fn approx(&self) -> f64 {
        let lo: f64 = self.lo.parse().unwrap_or(f64::NAN);
        let hi: f64 = self.hi.parse().unwrap_or(f64::NAN);
        0.5 * (lo + hi)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    True,
    False,
    Unknown,
}

impl Verdict {
    pub fn from_option(b: Option<bool>) -> Self {
        match b {
            Some(true) => Verdict::True,
            Some(false) => Verdict::False,
            None => Verdict::Unknown,
        }
    }

    pub fn is_true(self) -> bool {
        self == Verdict::True
    }

    pub fn and(self, o: Verdict) -> Verdict {
        match (self, o) {
            (Verdict::False, _) | (_, Verdict::False) => Verdict::False,
            (Verdict::True, Verdict::True) => Verdict::True,
            _ => Verdict::Unknown,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::True => "true",
            Verdict::False => "false",
            Verdict::Unknown => "unknown",
        })
    }
}

/// Outcome of deciding `lhs < rhs` (or `<=`) over certified intervals.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub verdict: Verdict,
    pub strict: bool,
    pub precision: u32,
    pub lhs: IntervalRepr,
    pub rhs: IntervalRepr,
}

fn certify_with<F>(prec: Precision, strict: bool, f: F) -> Certificate
where
    F: Fn(u32) -> (Interval, Interval),
{
    let mut last = None;
    for bits in prec.schedule() {
        let (lhs, rhs) = f(bits);
        let decided = if strict { lhs.lt(&rhs) } else { lhs.le(&rhs) };
        let cert = Certificate {
            verdict: Verdict::from_option(decided),
            strict,
            precision: bits,
            lhs: lhs.repr(),
            rhs: rhs.repr(),
        };
        if decided.is_some() {
            return cert;
        }
        last = Some(cert);
    }
    last.expect("precision schedule is non-empty")
}

/// Decides `lhs < rhs` where `f(bits)` evaluates both sides at `bits` of
/// working precision.
pub fn certify_lt<F>(prec: Precision, f: F) -> Certificate
where
    F: Fn(u32) -> (Interval, Interval),
{
    certify_with(prec, true, f)
}

/// Decides `lhs <= rhs`.
pub fn certify_le<F>(prec: Precision, f: F) -> Certificate
where
    F: Fn(u32) -> (Interval, Interval),
{
    certify_with(prec, false, f)
}

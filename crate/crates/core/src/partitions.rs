//! Partitions: the partition function, level counts `k(r, s)`, p-regular
//! partitions, the Mullineux involution and the longest-row statistic.
//!
//! Characteristic `p = 0` imposes no regularity constraint; the Mullineux
//! map is conjugation there and the identity at `p = 2`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bounds::{f_value, factorial, BoundReport, BoundValue, FFunction};
use crate::error::{Error, Result};
use crate::interval::{certify_le, certify_lt, Certificate, Interval, Precision, Verdict};
use crate::rootdata::Characteristic;

/// Weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn single_row(n: u32) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition(vec![n])
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest part, 0 for the empty partition.
    pub fn first(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        Partition(
            (0..cols)
                .map(|c| self.0.iter().take_while(|&&x| x > c).count() as u32)
                .collect(),
        )
    }

    pub fn regularity(&self, p: Characteristic) -> PRegularity {
        let mut mult = BTreeMap::new();
        for &x in &self.0 {
            *mult.entry(x).or_insert(0usize) += 1;
        }
        let regular = p.is_zero() || mult.values().all(|&m| (m as u64) < p.get());
        PRegularity {
            p: p.get(),
            multiplicities: mult.into_iter().rev().collect(),
            regular,
        }
    }

    pub fn is_regular(&self, p: Characteristic) -> bool {
        p.is_zero() || self.0.chunk_by(|a, b| a == b).all(|c| (c.len() as u64) < p.get())
    }

    /// Fails naming the first part repeated `p` or more times.
    pub fn require_regular(&self, p: Characteristic) -> Result<()> {
        if p.is_zero() {
            return Ok(());
        }
        match self
            .0
            .chunk_by(|a, b| a == b)
            .find(|c| c.len() as u64 >= p.get())
        {
            Some(c) => Err(Error::NotRegular {
                p: p.get(),
                part: c[0],
                multiplicity: c.len(),
            }),
            None => Ok(()),
        }
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts, optionally in parentheses; empty for `()`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::InvalidPartition(format!("`{t}`: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Multiplicity of every part value, largest value first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PRegularity {
    pub p: u64,
    pub multiplicities: Vec<(u32, usize)>,
    pub regular: bool,
}

/// `p(0), ..., p(upto)` by the pentagonal number recurrence.
pub fn partition_counts(upto: usize) -> Vec<BigUint> {
    let mut p: Vec<BigInt> = vec![BigInt::one()];
    for n in 1..=upto {
        let mut acc = BigInt::zero();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += sign * &p[n - g1];
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= n {
                acc += sign * &p[n - g2];
            }
        }
        p.push(acc);
    }
    p.into_iter()
        .map(|x| x.to_biguint().expect("partition counts are positive"))
        .collect()
}

pub fn partition_count(n: usize) -> BigUint {
    partition_counts(n).pop().expect("non-empty")
}

/// `e^(pi sqrt(2n / 3))`.
pub fn partition_bound(n: u64, prec: u32) -> Interval {
    let x = Interval::from_frac(prec, 2 * n as i64, 3);
    Interval::pi(prec).mul(&x.sqrt()).exp()
}

/// Certifies `p(n) < e^(pi sqrt(2n / 3))`.
pub fn partition_bound_check(n: u64, prec: Precision) -> Result<Certificate> {
    if n == 0 {
        return Err(Error::Domain("need n >= 1".into()));
    }
    let exact = partition_count(n as usize);
    Ok(certify_lt(prec, |b| {
        (Interval::from_biguint(b, &exact), partition_bound(n, b))
    }))
}

/// `min(i, r + 1 - i)` for `i = 1..=r`.
pub fn level_weights(r: usize) -> Vec<usize> {
    (1..=r).map(|i| i.min(r + 1 - i)).collect()
}

/// `k(r, 0), ..., k(r, upto)`: tuples in `N^r` at each level.
pub fn k_counts(r: usize, upto: usize) -> Vec<BigUint> {
    let mut c = vec![BigUint::zero(); upto + 1];
    c[0] = BigUint::one();
    for w in level_weights(r) {
        for s in w..=upto {
            let prev = c[s - w].clone();
            c[s] += prev;
        }
    }
    c
}

pub fn k_count(r: usize, s: usize) -> BigUint {
    k_counts(r, s).pop().expect("non-empty")
}

/// `sum_{s <= n_max} k(r, s)`.
pub fn k_sum(r: usize, n_max: usize) -> BigUint {
    k_counts(r, n_max).into_iter().sum()
}

/// `(N + 1)(N + 2)/2 e^(2 pi sqrt(N / 3))`.
pub fn k_sum_bound(n_max: u64, prec: u32) -> Interval {
    let n = n_max as i64;
    let front = Interval::from_frac(prec, (n + 1) * (n + 2), 2);
    let x = Interval::from_frac(prec, n, 3);
    front.mul(&Interval::pi(prec).mul_i64(2).mul(&x.sqrt()).exp())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KSumCheck {
    pub r: usize,
    pub n_max: u64,
    #[serde(with = "crate::decimal")]
    pub exact: BigUint,
    pub certificate: Certificate,
    /// Set at `N = 0`, where both sides equal 1 and only `<=` can hold.
    pub degenerate: bool,
}

pub fn k_sum_check(r: usize, n_max: u64, prec: Precision) -> KSumCheck {
    let exact = k_sum(r, n_max as usize);
    let sides = |b| (Interval::from_biguint(b, &exact), k_sum_bound(n_max, b));
    let degenerate = n_max == 0;
    let certificate = if degenerate {
        certify_le(prec, sides)
    } else {
        certify_lt(prec, sides)
    };
    KSumCheck {
        r,
        n_max,
        exact,
        certificate,
        degenerate,
    }
}

/// All partitions of `n` in reverse lexicographic order, starting at `(n)`.
#[derive(Debug, Clone)]
pub struct Partitions {
    next: Option<Vec<u32>>,
}

impl Partitions {
    pub fn new(n: u32) -> Self {
        Partitions {
            next: Some(if n == 0 { Vec::new() } else { vec![n] }),
        }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.next.take()?;
        let mut a = cur.clone();
        // drop trailing ones, then decrement the last part > 1
        let mut freed = 0;
        while a.last() == Some(&1) {
            a.pop();
            freed += 1;
        }
        if let Some(last) = a.last_mut() {
            *last -= 1;
            let cap = *last;
            freed += 1;
            while freed > 0 {
                let take = freed.min(cap);
                a.push(take);
                freed -= take;
            }
            self.next = Some(a);
        }
        Some(Partition(cur))
    }
}

/// The p-regular partitions of `n`, lexicographically descending.
#[derive(Debug, Clone)]
pub struct PRegularPartitions {
    inner: Partitions,
    p: Characteristic,
}

impl Iterator for PRegularPartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let p = self.p;
        self.inner.by_ref().find(|l| l.is_regular(p))
    }
}

pub fn p_regular_partitions(n: u32, p: Characteristic) -> PRegularPartitions {
    PRegularPartitions {
        inner: Partitions::new(n),
        p,
    }
}

/// Cells removed from each row by stripping the p-rim; `None` strips the
/// whole rim.
fn p_rim(parts: &[u32], seg: Option<u32>) -> Vec<u32> {
    let l = parts.len();
    let mut removed = vec![0; l];
    let mut row = 0;
    while row < l {
        let mut left = seg.unwrap_or(u32::MAX);
        let mut r = row;
        loop {
            let below = parts.get(r + 1).copied().unwrap_or(0);
            let avail = parts[r] - below.saturating_sub(1);
            let take = avail.min(left);
            removed[r] = take;
            left -= take;
            if left == 0 || r + 1 == l {
                break;
            }
            r += 1;
        }
        row = r + 1;
    }
    removed
}

fn strip(parts: &[u32], seg: Option<u32>) -> (Vec<u32>, u32) {
    let removed = p_rim(parts, seg);
    let rest: Vec<u32> = parts
        .iter()
        .zip(&removed)
        .map(|(a, b)| a - b)
        .filter(|&x| x > 0)
        .collect();
    debug_assert!(rest.windows(2).all(|w| w[0] >= w[1]));
    (rest, removed.iter().sum())
}

fn segment(p: Characteristic) -> Option<u32> {
    (!p.is_zero()).then(|| p.get() as u32)
}

/// Columns `(|p-rim|, rows)` recorded while repeatedly stripping p-rims,
/// outermost first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MullineuxSymbol {
    pub p: u64,
    pub columns: Vec<(u32, u32)>,
}

pub fn mullineux_symbol(lambda: &Partition, p: Characteristic) -> Result<MullineuxSymbol> {
    lambda.require_regular(p)?;
    let seg = segment(p);
    let mut columns = Vec::new();
    let mut cur = lambda.0.clone();
    while !cur.is_empty() {
        let rows = cur.len() as u32;
        let (rest, size) = strip(&cur, seg);
        columns.push((size, rows));
        cur = rest;
    }
    Ok(MullineuxSymbol { p: p.get(), columns })
}

impl MullineuxSymbol {
    /// Replaces each row count `R` by `A - R + e`, with `e = 0` when `p`
    /// divides `A` and `e = 1` otherwise.
    pub fn conjugated(&self) -> MullineuxSymbol {
        let columns = self
            .columns
            .iter()
            .map(|&(a, r)| {
                let e = if self.p != 0 && (a as u64).is_multiple_of(self.p) { 0 } else { 1 };
                (a, a + e - r)
            })
            .collect();
        MullineuxSymbol {
            p: self.p,
            columns,
        }
    }

    /// The unique p-regular partition with this symbol, rebuilt from the
    /// innermost column outwards.
    pub fn partition(&self) -> Option<Partition> {
        let p = Characteristic::new(self.p).ok()?;
        rebuild(&self.columns, p, Vec::new()).map(Partition)
    }
}

fn rebuild(columns: &[(u32, u32)], p: Characteristic, mu: Vec<u32>) -> Option<Vec<u32>> {
    let Some((&(size, rows), outer)) = columns.split_last() else {
        return Some(mu);
    };
    let seg = segment(p);
    let mut found = None;
    extensions(&mu, size, rows as usize, &mut Vec::new(), &mut |lam| {
        if found.is_some() || !Partition(lam.to_vec()).is_regular(p) {
            return;
        }
        if strip(lam, seg) == (mu.clone(), size) {
            found = rebuild(outer, p, lam.to_vec());
        }
    });
    found
}

/// Every `lam ⊇ mu` with exactly `rows` rows and `|lam / mu| = extra` whose
/// added cells lie on the rim of `lam`.
fn extensions(mu: &[u32], extra: u32, rows: usize, cur: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
    let i = cur.len();
    if i == rows {
        if extra == 0 {
            visit(cur);
        }
        return;
    }
    if i >= rows || (mu.len() > rows) {
        return;
    }
    let base = mu.get(i).copied().unwrap_or(0);
    let lo = base.max(1);
    let hi = if i == 0 {
        base + extra
    } else {
        cur[i - 1].min(mu.get(i - 1).copied().unwrap_or(0) + 1)
    };
    if lo < base || lo > hi {
        return;
    }
    for v in lo..=hi {
        let used = v - base;
        if used > extra {
            break;
        }
        cur.push(v);
        extensions(mu, extra - used, rows, cur, visit);
        cur.pop();
    }
}

/// The Mullineux image: identity at `p = 2`, conjugation at `p = 0`.
pub fn mullineux(lambda: &Partition, p: Characteristic) -> Result<Partition> {
    lambda.require_regular(p)?;
    match p.get() {
        0 => Ok(lambda.conjugate()),
        2 => Ok(lambda.clone()),
        _ => mullineux_by_symbol(lambda, p),
    }
}

/// The rim-stripping route with no shortcuts for `p = 0` or `p = 2`.
pub fn mullineux_by_symbol(lambda: &Partition, p: Characteristic) -> Result<Partition> {
    let sym = mullineux_symbol(lambda, p)?.conjugated();
    sym.partition().ok_or_else(|| {
        Error::InvalidPartition(format!("no partition has Mullineux symbol {:?}", sym.columns))
    })
}

/// Residue of the cell in row `i`, column `j`.
fn residue(i: usize, j: u32, p: u64) -> u64 {
    (j as i64 - i as i64).rem_euclid(p as i64) as u64
}

/// Unmatched removable and addable `res`-nodes (as rows), after cancelling
/// each addable node against the nearest unmatched removable node below it.
fn signature(parts: &[u32], res: u64, p: u64) -> (Vec<usize>, Vec<usize>) {
    let l = parts.len();
    let at = |i: usize| parts.get(i).copied().unwrap_or(0);
    let mut removable_left = Vec::new();
    let mut addable_left = Vec::new();
    for i in (0..=l).rev() {
        let addable = (i == 0 || at(i - 1) > at(i)) && residue(i, at(i), p) == res;
        let removable = i < l && at(i) > at(i + 1) && residue(i, at(i) - 1, p) == res;
        // within a row the removable node sits below the addable one
        if removable {
            removable_left.push(i);
        }
        if addable && removable_left.pop().is_none() {
            addable_left.push(i);
        }
    }
    (removable_left, addable_left)
}

/// The Mullineux image computed on the crystal graph: strip good nodes
/// recording residues, then add cogood nodes of the negated residues in
/// reverse order. Independent of the rim-stripping route; `p` must be an
/// odd prime.
pub fn mullineux_by_good_nodes(lambda: &Partition, p: Characteristic) -> Result<Partition> {
    lambda.require_regular(p)?;
    let p = p.get();
    if p < 3 {
        return Err(Error::Domain(format!("good-node route needs an odd prime, got {p}")));
    }
    let mut parts = lambda.0.clone();
    let mut path = Vec::new();
    while !parts.is_empty() {
        let (res, row) = (0..p)
            .find_map(|i| signature(&parts, i, p).0.first().map(|&row| (i, row)))
            .expect("a non-empty p-regular partition has a good node");
        parts[row] -= 1;
        if parts[row] == 0 {
            parts.pop();
        }
        path.push(res);
    }
    for &res in path.iter().rev() {
        let (_, adds) = signature(&parts, (p - res) % p, p);
        let row = *adds.last().expect("cogood node exists");
        if row == parts.len() {
            parts.push(1);
        } else {
            parts[row] += 1;
        }
    }
    Ok(Partition(parts))
}

/// `max(lambda_1, (lambda^M)_1)`, or `lambda_1` at `p = 2`.
pub fn m_p(lambda: &Partition, p: Characteristic) -> Result<u32> {
    lambda.require_regular(p)?;
    if p.get() == 2 {
        return Ok(lambda.first());
    }
    Ok(lambda.first().max(mullineux(lambda, p)?.first()))
}

/// `sqrt(2)^exponent`, kept exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SqrtTwoPower {
    pub exponent: u32,
}

impl SqrtTwoPower {
    /// `sqrt(2)^e <= d` iff `2^e <= d^2`.
    pub fn le(&self, d: &BigUint) -> bool {
        (BigUint::one() << self.exponent) <= d * d
    }

    pub fn to_f64(&self) -> f64 {
        2f64.powf(self.exponent as f64 / 2.0)
    }
}

impl fmt::Display for SqrtTwoPower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "2^({}/2)", self.exponent)
    }
}

/// `2^((r - m_p(lambda)) / 2)` for `lambda ⊢ r`, `r >= 5`.
pub fn bound3_value(lambda: &Partition, p: Characteristic) -> Result<SqrtTwoPower> {
    let r = lambda.size();
    if r < 5 {
        return Err(Error::hypothesis("r >= 5", format!("r = {r}")));
    }
    Ok(SqrtTwoPower {
        exponent: r - m_p(lambda, p)?,
    })
}

/// `n! / prod(hook lengths)`.
pub fn hook_length_dim(lambda: &Partition) -> BigUint {
    let conj = lambda.conjugate();
    let mut hooks = BigUint::one();
    for (i, &row) in lambda.0.iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = conj.0[j as usize] - i as u32 - 1;
            hooks *= arm + leg + 1;
        }
    }
    factorial(lambda.size() as u64) / hooks
}

/// `n^2.5 / 12.32`.
pub fn b_value(n: &BigUint, prec: u32) -> Interval {
    Interval::from_biguint(prec, n)
        .pow(&Interval::from_frac(prec, 5, 2))
        .mul(&Interval::from_frac(prec, 25, 308))
}

fn n_pow_2_5(n: &BigUint, prec: u32) -> Interval {
    Interval::from_biguint(prec, n).pow(&Interval::from_frac(prec, 5, 2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SymGroup {
    #[serde(rename = "S")]
    Symmetric,
    #[serde(rename = "A")]
    Alternating,
    #[serde(rename = "cover")]
    Cover,
}

impl FromStr for SymGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "S" | "s" | "symmetric" => Ok(SymGroup::Symmetric),
            "A" | "a" | "alternating" => Ok(SymGroup::Alternating),
            "cover" => Ok(SymGroup::Cover),
            _ => Err(Error::Domain(format!("unknown group `{s}`"))),
        }
    }
}

/// One certified step of the symmetric-group argument.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NamedCertificate {
    pub claim: String,
    pub certificate: Certificate,
}

/// `b(n) + 2 b(2n) < n^2.5`.
pub fn b_combination_check(n: &BigUint, prec: Precision) -> Certificate {
    let two_n = n * 2u32;
    certify_lt(prec, |b| {
        (b_value(n, b).add(&b_value(&two_n, b).mul_i64(2)), n_pow_2_5(n, b))
    })
}

/// The three table comparisons `p(r_max) < b(n_low)` used below `n = 1503`.
pub const SYM_BRACKETS: [(u64, u64, usize); 3] = [(677, 1503, 60), (172, 677, 39), (53, 172, 21)];

pub fn bracket_checks(prec: Precision) -> Vec<NamedCertificate> {
    let counts = partition_counts(60);
    SYM_BRACKETS
        .iter()
        .map(|&(lo, _, r_max)| {
            let pr = counts[r_max].clone();
            let n = BigUint::from(lo);
            NamedCertificate {
                claim: format!("p({r_max}) = {pr} < b({lo})"),
                certificate: certify_lt(prec, |b| (Interval::from_biguint(b, &pr), b_value(&n, b))),
            }
        })
        .collect()
}

/// Largest `r` with `(r^2 - 5r + 2)/2 <= n`.
fn max_rank_for(n: &BigUint) -> u64 {
    let mut r = 5u64;
    while BigUint::from((r + 1) * (r + 1) + 2) <= n * 2u32 + BigUint::from(5 * (r + 1)) {
        r += 1;
    }
    r
}

/// The symmetric-group case at degree `n`: returns the applicable claim.
fn symmetric_case(r: u64, n: &BigUint, prec: Precision, out: &mut Vec<NamedCertificate>, notes: &mut Vec<String>, assumptions: &mut Vec<String>) {
    if *n >= BigUint::from(1503u32) {
        out.push(NamedCertificate {
            claim: format!("f5({n}) < b({n})"),
            certificate: certify_lt(prec, |b| {
                (
                    f_value(FFunction::F5, n, b).expect("n >= 1"),
                    b_value(n, b),
                )
            }),
        });
        return;
    }
    // (r^2 - 5r + 2)/2 > n
    if BigUint::from(r * r + 2) > n * 2u32 + BigUint::from(5 * r) {
        notes.push(format!("n = {n} < (r^2-5r+2)/2: at most 4 modules"));
        assumptions.push("R_n(S_r) <= 4 below (r^2-5r+2)/2 (James)".into());
        return;
    }
    let counts = partition_counts(60);
    let (lo, hi, r_max) = *SYM_BRACKETS
        .iter()
        .find(|&&(lo, _, _)| *n >= BigUint::from(lo))
        .expect("n >= 53 once n >= (r^2-5r+2)/2 and r >= 13");
    let implied = max_rank_for(&BigUint::from(hi - 1));
    notes.push(format!("{lo} <= n < {hi}: r <= {implied} <= {r_max}"));
    let pr = counts[r_max].clone();
    let n_lo = BigUint::from(lo);
    out.push(NamedCertificate {
        claim: format!("p({r_max}) < b({lo})"),
        certificate: certify_lt(prec, |b| (Interval::from_biguint(b, &pr), b_value(&n_lo, b))),
    });
}

/// Evaluates the case analysis bounding representations of dimension at
/// most `n` for `S_r`, `A_r` or their covers by `n^2.5`.
pub fn sym_rn_bound(r: u64, n: &BigUint, p: Characteristic, group: SymGroup, prec: Precision) -> Result<BoundReport> {
    if r < 5 {
        return Err(Error::hypothesis("r >= 5", format!("r = {r}")));
    }
    if n.is_zero() {
        return Err(Error::Domain("need n >= 1".into()));
    }
    let mut checks = Vec::new();
    let mut notes = Vec::new();
    let mut assumptions = Vec::new();
    let small_cut = BigUint::one() << ((r - 3) / 2);
    if *n < BigUint::from(2u32) {
        notes.push("n = 1: at most the trivial and sign modules".into());
    } else if r <= 12 {
        notes.push("5 <= r <= 12".into());
        assumptions.push("R_n <= n^2.5 for 5 <= r <= 12 (decomposition tables)".into());
    } else if *n >= small_cut {
        let pr = partition_count(r as usize);
        notes.push(format!("n >= 2^floor((r-3)/2) = {small_cut}"));
        checks.push(NamedCertificate {
            claim: format!("4 p({r}) < n^2.5"),
            certificate: certify_lt(prec, |b| {
                (Interval::from_biguint(b, &pr).mul_i64(4), n_pow_2_5(n, b))
            }),
        });
    } else if *n < BigUint::from(11u32) {
        notes.push("n < 11 <= r - 2: at most 2 modules".into());
        assumptions.push("smallest nontrivial projective degree of A_r is at least r - 2".into());
    } else {
        if group == SymGroup::Cover {
            assumptions.push("below 2^floor((r-3)/2) every module factors through the quotient by the centre".into());
        }
        match group {
            SymGroup::Symmetric | SymGroup::Cover => {
                symmetric_case(r, n, prec, &mut checks, &mut notes, &mut assumptions);
            }
            SymGroup::Alternating => {
                let two_n = n * 2u32;
                symmetric_case(r, n, prec, &mut checks, &mut notes, &mut assumptions);
                symmetric_case(r, &two_n, prec, &mut checks, &mut notes, &mut assumptions);
                checks.push(NamedCertificate {
                    claim: format!("b({n}) + 2 b({two_n}) < n^2.5"),
                    certificate: b_combination_check(n, prec),
                });
            }
        }
    }
    let verdict = checks
        .iter()
        .fold(Verdict::True, |v, c| v.and(c.certificate.verdict));
    for c in &checks {
        notes.push(format!("{}: {}", c.claim, c.certificate.verdict));
    }
    let value = n_pow_2_5(n, prec.start);
    Ok(BoundReport {
        name: "sym_rn".into(),
        formula: "n^2.5".into(),
        value: BoundValue::Interval(value.repr()),
        valid: verdict == Verdict::True,
        guard_detail: notes.join("; "),
        inputs: [
            ("r".to_string(), r.to_string()),
            ("n".to_string(), n.to_string()),
            ("p".to_string(), p.get().to_string()),
            ("group".to_string(), format!("{group:?}")),
        ]
        .into_iter()
        .collect(),
        assumptions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn ch(p: u64) -> Characteristic {
        Characteristic::new(p).unwrap()
    }

    /// All partitions by naive recursion on the largest part.
    fn naive_partitions(n: u32) -> Vec<Vec<u32>> {
        fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if n == 0 {
                out.push(cur.clone());
                return;
            }
            for x in (1..=n.min(max)).rev() {
                cur.push(x);
                rec(n - x, x, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn partition_values() {
        assert_eq!(partition_count(0), BigUint::one());
        assert_eq!(partition_count(21), BigUint::from(792u32));
        assert_eq!(partition_count(39), BigUint::from(31_185u32));
        assert_eq!(partition_count(60), BigUint::from(966_467u32));
        let counts = partition_counts(40);
        for (n, c) in counts.iter().enumerate() {
            assert_eq!(*c, BigUint::from(naive_partitions(n as u32).len()), "n={n}");
        }
    }

    #[test]
    fn generator_matches_naive_order() {
        for n in 0..=15 {
            let got: Vec<Vec<u32>> = Partitions::new(n).map(|p| p.0).collect();
            assert_eq!(got, naive_partitions(n), "n={n}");
        }
    }

    #[test]
    fn partition_bound_examples() {
        for n in [1, 39, 100, 500] {
            assert_eq!(
                partition_bound_check(n, Precision::default()).unwrap().verdict,
                Verdict::True
            );
        }
    }

    #[test]
    fn k_examples() {
        assert_eq!(k_count(4, 0), BigUint::one());
        assert_eq!(k_count(3, 2), BigUint::from(4u32));
        assert_eq!(k_sum(5, 76), BigUint::from(2_415_231u32));
        assert_eq!(level_weights(5), vec![1, 2, 3, 2, 1]);
    }

    #[test]
    fn k_matches_naive_loops() {
        for r in 1..=5 {
            let w = level_weights(r);
            let dp = k_counts(r, 30);
            let mut naive = vec![0u64; 31];
            let mut x = vec![0usize; r];
            loop {
                let s: usize = x.iter().zip(&w).map(|(a, b)| a * b).sum();
                if s <= 30 {
                    naive[s] += 1;
                }
                let mut i = 0;
                loop {
                    if i == r {
                        break;
                    }
                    x[i] += 1;
                    if x[i] * w[i] <= 30 {
                        break;
                    }
                    x[i] = 0;
                    i += 1;
                }
                if i == r {
                    break;
                }
            }
            for s in 0..=30 {
                assert_eq!(dp[s], BigUint::from(naive[s]), "r={r} s={s}");
            }
        }
    }

    #[test]
    fn k_sum_checks() {
        let c = k_sum_check(4, 0, Precision::default());
        assert!(c.degenerate && !c.certificate.strict);
        assert_eq!(c.certificate.verdict, Verdict::True);
        let c = k_sum_check(4, 10, Precision::default());
        assert_eq!(c.certificate.verdict, Verdict::True);
        let c = k_sum_check(5, 76, Precision::default());
        assert_eq!(c.exact, BigUint::from(2_415_231u32));
        assert_eq!(c.certificate.verdict, Verdict::True);
        for r in 1..=8 {
            for n in 1..=40 {
                assert_eq!(k_sum_check(r, n, Precision::default()).certificate.verdict, Verdict::True);
            }
        }
    }

    #[test]
    fn regular_partition_examples() {
        let got: Vec<_> = p_regular_partitions(4, ch(2)).collect();
        assert_eq!(got, vec![part(&[4]), part(&[3, 1])]);
        assert_eq!(p_regular_partitions(3, ch(0)).count(), 3);
        let got: Vec<_> = p_regular_partitions(5, ch(3)).collect();
        assert_eq!(
            got,
            vec![part(&[5]), part(&[4, 1]), part(&[3, 2]), part(&[3, 1, 1]), part(&[2, 2, 1])]
        );
        let it = p_regular_partitions(10, ch(3));
        assert_eq!(it.clone().count(), it.count());
    }

    #[test]
    fn regularity_reporting() {
        let l = part(&[2, 2, 2]);
        assert_eq!(
            l.require_regular(ch(3)),
            Err(Error::NotRegular { p: 3, part: 2, multiplicity: 3 })
        );
        let reg = l.regularity(ch(5));
        assert!(reg.regular);
        assert_eq!(reg.multiplicities, vec![(2, 3)]);
        assert!(mullineux(&l, ch(3)).is_err());
    }

    #[test]
    fn mullineux_examples() {
        assert_eq!(mullineux(&part(&[3, 2]), ch(0)).unwrap(), part(&[2, 2, 1]));
        assert_eq!(mullineux(&part(&[4, 3, 1]), ch(2)).unwrap(), part(&[4, 3, 1]));
        assert_eq!(mullineux(&part(&[5]), ch(0)).unwrap(), part(&[1, 1, 1, 1, 1]));
        assert_eq!(mullineux(&part(&[3]), ch(3)).unwrap(), part(&[2, 1]));
        assert_eq!(mullineux(&Partition::empty(), ch(3)).unwrap(), Partition::empty());
    }

    #[test]
    fn symbol_route_is_conjugation_when_p_exceeds_n() {
        for n in 0..=10 {
            for l in Partitions::new(n) {
                assert_eq!(mullineux_by_symbol(&l, ch(0)).unwrap(), l.conjugate());
                assert_eq!(mullineux_by_symbol(&l, ch(11)).unwrap(), l.conjugate());
            }
        }
    }

    #[test]
    fn mullineux_is_a_regular_involution() {
        for p in [3, 5, 7] {
            for n in 0..=18 {
                for l in p_regular_partitions(n, ch(p)) {
                    let m = mullineux(&l, ch(p)).unwrap();
                    assert!(m.is_regular(ch(p)), "p={p} {l} -> {m}");
                    assert_eq!(m.size(), n);
                    assert_eq!(mullineux(&m, ch(p)).unwrap(), l, "p={p} {l}");
                    assert_eq!(m_p(&l, ch(p)).unwrap(), m_p(&m, ch(p)).unwrap());
                }
            }
        }
    }

    #[test]
    fn symbol_route_agrees_with_crystal_route() {
        for p in [3, 5, 7] {
            for n in 0..=14 {
                for l in p_regular_partitions(n, ch(p)) {
                    assert_eq!(
                        mullineux(&l, ch(p)).unwrap(),
                        mullineux_by_good_nodes(&l, ch(p)).unwrap(),
                        "p={p} {l}"
                    );
                }
            }
        }
    }

    #[test]
    fn m_p_examples() {
        for r in 1..=12 {
            assert_eq!(m_p(&Partition::single_row(r), ch(3)).unwrap(), r);
        }
        assert_eq!(m_p(&part(&[3, 2, 1]), ch(2)).unwrap(), 3);
        assert_eq!(m_p(&part(&[2, 1, 1, 1]), ch(0)).unwrap(), 4);
        assert_eq!(m_p(&part(&[4, 1]), ch(0)).unwrap(), 4);
    }

    #[test]
    fn hook_examples() {
        assert_eq!(hook_length_dim(&part(&[7])), BigUint::one());
        assert_eq!(hook_length_dim(&part(&[3, 2])), BigUint::from(5u32));
        assert_eq!(hook_length_dim(&part(&[2, 2, 1])), BigUint::from(5u32));
        for n in 1..=10 {
            let sum: BigUint = Partitions::new(n).map(|l| hook_length_dim(&l).pow(2)).sum();
            assert_eq!(sum, factorial(n as u64));
        }
    }

    #[test]
    fn bound3_holds_in_the_semisimple_range() {
        assert_eq!(bound3_value(&part(&[6]), ch(5)).unwrap().exponent, 0);
        let b = bound3_value(&part(&[3, 2]), ch(0)).unwrap();
        assert_eq!(b.exponent, 2);
        assert!(b.le(&BigUint::from(5u32)));
        assert!(bound3_value(&part(&[2, 2]), ch(0)).is_err());
        for n in 5..=16 {
            for l in Partitions::new(n) {
                let b = bound3_value(&l, ch(0)).unwrap();
                assert!(b.le(&hook_length_dim(&l)), "{l}");
            }
        }
    }

    #[test]
    fn sym1_counting_argument() {
        let counts = partition_counts(30);
        for p in [2, 3, 5] {
            for r in 5..=25u32 {
                let defects: Vec<u32> = p_regular_partitions(r, ch(p))
                    .map(|l| r - m_p(&l, ch(p)).unwrap())
                    .collect();
                for n0 in 2..=r as usize {
                    let count = defects.iter().filter(|&&d| d as usize <= n0).count();
                    let bound: BigUint = counts[..=n0].iter().sum::<BigUint>() * 2u32;
                    assert!(BigUint::from(count) <= bound, "p={p} r={r} n0={n0}");
                }
            }
        }
    }

    #[test]
    fn sym_arithmetic() {
        for c in bracket_checks(Precision::default()) {
            assert_eq!(c.certificate.verdict, Verdict::True, "{}", c.claim);
        }
        for n in [11u64, 12, 100, 1000, 1_000_000, 10u64.pow(15)] {
            assert_eq!(
                b_combination_check(&BigUint::from(n), Precision::default()).verdict,
                Verdict::True
            );
        }
        let prec = 256;
        let n13 = BigUint::from(10u64).pow(13);
        let f = f_value(FFunction::F5, &n13, prec).unwrap();
        assert_eq!(f.le(&Interval::from_biguint(prec, &n13)), Some(true));
        let n44 = BigUint::from(10u64).pow(44);
        let f = f_value(FFunction::F5, &n44, prec).unwrap();
        assert_eq!(f.lt(&Interval::from_biguint(prec, &BigUint::from(10u64).pow(22))), Some(true));
    }

    #[test]
    fn sym_rn_report_cases() {
        let pr = Precision::default();
        let n = |v: u64| BigUint::from(v);
        for (r, nn, group) in [
            (13, 40, SymGroup::Symmetric),
            (20, 100, SymGroup::Symmetric),
            (20, 100, SymGroup::Alternating),
            (40, 2000, SymGroup::Symmetric),
            (40, 700, SymGroup::Cover),
            (30, 300, SymGroup::Alternating),
            (60, 1502, SymGroup::Symmetric),
            (8, 20, SymGroup::Symmetric),
        ] {
            let rep = sym_rn_bound(r, &n(nn), ch(3), group, pr).unwrap();
            assert!(rep.valid, "r={r} n={nn}: {}", rep.guard_detail);
        }
        let rep = sym_rn_bound(13, &n(40), ch(3), SymGroup::Symmetric, pr).unwrap();
        assert!(rep.guard_detail.contains("4 p(13)"));
        assert!(sym_rn_bound(4, &n(10), ch(3), SymGroup::Symmetric, pr).is_err());
    }

    #[test]
    fn four_p_of_r_beats_threshold_for_all_r() {
        for r in 13..=200u64 {
            let n = BigUint::one() << ((r - 3) / 2);
            let pr = partition_count(r as usize);
            let c = certify_lt(Precision::default(), |b| {
                (Interval::from_biguint(b, &pr).mul_i64(4), n_pow_2_5(&n, b))
            });
            assert_eq!(c.verdict, Verdict::True, "r={r}");
        }
    }

    proptest! {
        #[test]
        fn partition_text_roundtrip(parts in proptest::collection::vec(1u32..20, 0..8)) {
            let mut parts = parts;
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let l = Partition::new(parts).unwrap();
            prop_assert_eq!(l.to_string().parse::<Partition>().unwrap(), l.clone());
            let json = serde_json::to_string(&l).unwrap();
            prop_assert_eq!(serde_json::from_str::<Partition>(&json).unwrap(), l.clone());
            prop_assert_eq!(l.conjugate().conjugate(), l);
        }
    }
}

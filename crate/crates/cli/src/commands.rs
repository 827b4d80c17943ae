//! `bound`, `witness`, `enumerate` and `mullineux`.

use std::collections::BTreeSet;

use anyhow::bail;
use num_bigint::BigUint;
use repgrowth::bounds::{n_lambda, premet_sum, premet_violation, rn_upper, BoundReport, BoundValue};
use repgrowth::dominance::{bracket, is_good, WitnessChain};
use repgrowth::interval::Interval;
use repgrowth::partitions::{mullineux, Partition};
use repgrowth::rootdata::{Characteristic, Family, RootDatum, Weight};
use repgrowth::witness::{
    a5_good_family, good_postcondition, good_witness, incr_postcondition, incr_witness,
    m_good_witness, middle2_postcondition, middle2_witness, middle_witness, window_postcondition,
};
use repgrowth::Error;
use serde::{Deserialize, Serialize};

use crate::args::{BoundArgs, Engine, EnumerateArgs, LowerBound, MullineuxArgs, WitnessArgs};

pub fn cmd_bound(args: &BoundArgs, prec: u32) -> anyhow::Result<BoundReport> {
    Ok(rn_upper(args.family, args.rank, &args.n, args.p, prec)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranscriptLine {
    pub check: String,
    pub ok: bool,
}

fn line(check: impl Into<String>, ok: bool) -> TranscriptLine {
    TranscriptLine {
        check: check.into(),
        ok,
    }
}

/// Summary of the 243-member good family below an A5 weight.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilySummary {
    pub gamma: Weight,
    pub members: BoundValue,
    pub distinct_good_members: BoundValue,
    pub orbit_total: BoundValue,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub engine: Engine,
    pub rank: usize,
    pub weight: Weight,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    pub chain: WitnessChain,
    pub bracket_source: i64,
    pub bracket_target: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilySummary>,
    pub transcript: Vec<TranscriptLine>,
}

impl WitnessReport {
    pub fn verified(&self) -> bool {
        self.transcript.iter().all(|l| l.ok)
    }
}

fn require_m(m: Option<usize>, engine: Engine) -> anyhow::Result<usize> {
    match m {
        Some(m) => Ok(m),
        None => bail!("--m is required for {engine:?}"),
    }
}

pub fn cmd_witness(args: &WitnessArgs) -> anyhow::Result<WitnessReport> {
    let datum = RootDatum::type_a(args.rank)?;
    let lambda = &args.weight;
    let d = &datum;
    let mut transcript = Vec::new();
    let mut family = None;
    let chain = match args.engine {
        Engine::Incr => {
            let m = require_m(args.m, args.engine)?;
            let c = incr_witness(d, lambda, m)?;
            transcript.push(line("incr postcondition", incr_postcondition(d, lambda, m, &c)));
            c
        }
        Engine::Middle => {
            let m = require_m(args.m, args.engine)?;
            let c = middle_witness(d, lambda, m)?;
            transcript.push(line("window postcondition", window_postcondition(d, lambda, m, &c)));
            c
        }
        Engine::MGood => {
            let m = require_m(args.m, args.engine)?;
            let c = m_good_witness(d, lambda, m)?;
            transcript.push(line("window postcondition", window_postcondition(d, lambda, m, &c)));
            c
        }
        Engine::Middle2 => {
            let c = middle2_witness(d, lambda)?;
            transcript.push(line("middle2 postcondition", middle2_postcondition(d, lambda, &c)));
            c
        }
        Engine::Good => {
            let c = good_witness(d, lambda)?;
            transcript.push(line("good postcondition", good_postcondition(d, lambda, &c)));
            c
        }
        Engine::A5 => {
            let fam = a5_good_family(d, lambda)?;
            let distinct: BTreeSet<&Weight> = fam.members.iter().map(|c| &c.target).collect();
            let all_ok = fam.members.iter().all(|c| c.verify(d) && &c.source == lambda);
            let all_good = fam.members.iter().all(|c| is_good(&c.target));
            transcript.push(line("every member chain rechecks", all_ok));
            transcript.push(line("every member is good", all_good));
            transcript.push(line("243 distinct members", distinct.len() == 243));
            family = Some(FamilySummary {
                gamma: fam.gamma.clone(),
                members: BoundValue::exact(fam.members.len() as u64),
                distinct_good_members: BoundValue::exact(distinct.len() as u64),
                orbit_total: BoundValue::exact(fam.orbit_total(d)?),
            });
            fam.anchor
        }
    };
    transcript.insert(0, line("chain recheck", chain.verify(d)));
    Ok(WitnessReport {
        engine: args.engine,
        rank: args.rank,
        weight: lambda.clone(),
        m: args.m,
        bracket_source: bracket(d, lambda)?,
        bracket_target: bracket(d, &chain.target)?,
        chain,
        family,
        transcript,
    })
}

/// One row of an enumeration table. `count` is absent when the cap hid
/// weights whose lower bound might be at most `n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnumerationRow {
    pub n: BoundValue,
    pub count: Option<BoundValue>,
    pub theorem_bound: BoundValue,
    /// `theorem_bound - count`.
    pub margin: Option<BoundValue>,
    pub error: Option<String>,
}

/// Flat CSV form of [`EnumerationRow`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnumerationCsvRow {
    pub n: String,
    pub count: String,
    pub theorem_bound: String,
    pub margin: String,
    pub error: String,
}

impl From<&EnumerationRow> for EnumerationCsvRow {
    fn from(r: &EnumerationRow) -> Self {
        use crate::output::format_value;
        EnumerationCsvRow {
            n: format_value(&r.n),
            count: r.count.as_ref().map(format_value).unwrap_or_default(),
            theorem_bound: format_value(&r.theorem_bound),
            margin: r.margin.as_ref().map(format_value).unwrap_or_default(),
            error: r.error.clone().unwrap_or_default(),
        }
    }
}

impl TryFrom<EnumerationCsvRow> for EnumerationRow {
    type Error = anyhow::Error;

    fn try_from(r: EnumerationCsvRow) -> anyhow::Result<Self> {
        use crate::output::parse_value;
        let opt = |s: &str| (!s.is_empty()).then(|| parse_value(s)).transpose();
        Ok(EnumerationRow {
            n: parse_value(&r.n)?,
            count: opt(&r.count)?,
            theorem_bound: parse_value(&r.theorem_bound)?,
            margin: opt(&r.margin)?,
            error: (!r.error.is_empty()).then_some(r.error),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnumerationTable {
    pub family: Family,
    pub rank: usize,
    pub p: u64,
    pub bound: LowerBound,
    /// Restricted dominant weights scanned.
    pub weights: BoundValue,
    pub notes: Vec<String>,
    pub rows: Vec<EnumerationRow>,
}

/// All `p^rank` restricted dominant weights.
fn restricted_weights(rank: usize, p: u64) -> impl Iterator<Item = Weight> {
    let total = (p as usize).saturating_pow(rank as u32);
    (0..total).map(move |mut code| {
        let mut c = vec![0i64; rank];
        for slot in c.iter_mut() {
            *slot = (code % p as usize) as i64;
            code /= p as usize;
        }
        Weight::new(c)
    })
}

/// `cap` bounds each saturated set; weights whose set overflows it only
/// affect rows with `n > cap`.
pub fn cmd_enumerate(args: &EnumerateArgs, prec: u32, cap: usize) -> anyhow::Result<EnumerationTable> {
    let datum = RootDatum::new(args.family, args.rank)?;
    let p = Characteristic::new(args.p)?;
    if p.is_zero() {
        bail!("restricted weights need a prime p, got 0");
    }
    let total = BigUint::from(args.p).pow(args.rank as u32);
    let mut notes = Vec::new();
    if args.bound == LowerBound::Premet {
        if let Some(v) = premet_violation(args.family, p) {
            notes.push(format!("lower bound not established here: {v}"));
        }
    }
    let mut values = Vec::new();
    // a capped saturated set has more than `cap` members, so its bound exceeds `cap`
    let mut capped = 0usize;
    for lambda in restricted_weights(args.rank, args.p) {
        let v = match args.bound {
            LowerBound::Nlambda => n_lambda(&datum, &lambda),
            LowerBound::Premet => premet_sum(&datum, &lambda, cap),
        };
        match v {
            Ok(v) => values.push(v),
            Err(Error::CapExceeded { .. }) => capped += 1,
            Err(e) => return Err(e.into()),
        }
    }
    values.sort();
    let mut rows = Vec::new();
    for n in 1..=args.n_max {
        let nb = BigUint::from(n);
        let theorem = rn_upper(args.family, args.rank, &nb, args.p, prec)?.value;
        let hidden = capped > 0 && n as u128 > cap as u128;
        let row = if hidden {
            EnumerationRow {
                n: BoundValue::exact(n),
                count: None,
                theorem_bound: theorem,
                margin: None,
                error: Some(format!("cap {cap} exceeded for {capped} weights")),
            }
        } else {
            let count = values.partition_point(|v| *v <= nb) as u64;
            let margin = theorem.to_interval(prec).map(|t| {
                BoundValue::Interval(t.sub(&Interval::from_i64(prec, count as i64)).repr())
            });
            EnumerationRow {
                n: BoundValue::exact(n),
                count: Some(BoundValue::exact(count)),
                theorem_bound: theorem,
                margin,
                error: None,
            }
        };
        rows.push(row);
    }
    Ok(EnumerationTable {
        family: args.family,
        rank: args.rank,
        p: args.p,
        bound: args.bound,
        weights: BoundValue::exact(total),
        notes,
        rows,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MullineuxReport {
    pub p: u64,
    pub partition: Partition,
    pub image: Partition,
    /// The image maps back to the input.
    pub involution: bool,
    pub note: String,
}

pub fn cmd_mullineux(args: &MullineuxArgs) -> anyhow::Result<MullineuxReport> {
    let p = Characteristic::new(args.p)?;
    let image = mullineux(&args.partition, p)?;
    let back = mullineux(&image, p)?;
    let involution = back == args.partition;
    let note = match p.get() {
        0 => "p = 0: conjugation".to_string(),
        2 => "p = 2: identity".to_string(),
        _ => format!("involution self-check {}", if involution { "passed" } else { "FAILED" }),
    };
    Ok(MullineuxReport {
        p: p.get(),
        partition: args.partition.clone(),
        image,
        involution,
        note,
    })
}

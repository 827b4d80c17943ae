//! Verification suites. Each check carries a fixed anchor: the statement it
//! tests, written out as a formula.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use repgrowth::bounds::{
    char2_counts, d1, d4, f_value, factorial, family_tail, g_bound_holds,
    harmonic_log_bound, n_lambda, premet_sum, ratio_constant, ratio_holds, rn_upper, zeta,
    zeta_tail_check, FFunction,
};
use repgrowth::dominance::{is_good, orbit_length, weyl_stabilizer_order};
use repgrowth::interval::{certify_le, certify_lt, Interval, Precision, Verdict};
use repgrowth::partitions::{
    bound3_value, bracket_checks, hook_length_dim, k_sum, k_sum_check, m_p, mullineux,
    mullineux_by_good_nodes, mullineux_by_symbol, partition_bound_check, partition_count,
    partition_counts, p_regular_partitions, Partition, Partitions,
};
use repgrowth::rootdata::{Characteristic, Family, RootDatum, Weight};
use repgrowth::witness::{a5_good_family, dominant_weights, scan_lemmas};
use serde::{Deserialize, Serialize};

use crate::args::{Scale, SuiteId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckVerdict {
    Pass,
    Fail,
    Unknown,
    /// Rests on published tables or results not recomputed here.
    ExternalAssumption,
}

impl CheckVerdict {
    fn from_bool(ok: bool) -> Self {
        if ok {
            CheckVerdict::Pass
        } else {
            CheckVerdict::Fail
        }
    }

    fn from_verdict(v: Verdict) -> Self {
        match v {
            Verdict::True => CheckVerdict::Pass,
            Verdict::False => CheckVerdict::Fail,
            Verdict::Unknown => CheckVerdict::Unknown,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub anchor: String,
    pub verdict: CheckVerdict,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationSuite {
    pub id: SuiteId,
    pub scale: Scale,
    /// Sorted by id.
    pub checks: Vec<Check>,
}

/// CSV form of a check, with the suite repeated on every row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckCsvRow {
    pub suite: SuiteId,
    pub scale: Scale,
    pub id: String,
    pub anchor: String,
    pub verdict: CheckVerdict,
    pub detail: String,
}

impl VerificationSuite {
    /// 0 when nothing failed and nothing is undecided, 1 on any failure,
    /// 2 when some check is undecided but none failed.
    pub fn exit_code(&self) -> i32 {
        let has = |v| self.checks.iter().any(|c| c.verdict == v);
        if has(CheckVerdict::Fail) {
            1
        } else if has(CheckVerdict::Unknown) {
            2
        } else {
            0
        }
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn csv_rows(&self) -> Vec<CheckCsvRow> {
        self.checks
            .iter()
            .map(|c| CheckCsvRow {
                suite: self.id,
                scale: self.scale,
                id: c.id.clone(),
                anchor: c.anchor.clone(),
                verdict: c.verdict,
                detail: c.detail.clone(),
            })
            .collect()
    }

    pub fn from_csv_rows(rows: Vec<CheckCsvRow>) -> Option<Self> {
        let first = rows.first()?;
        let (id, scale) = (first.suite, first.scale);
        Some(VerificationSuite {
            id,
            scale,
            checks: rows
                .into_iter()
                .map(|r| Check {
                    id: r.id,
                    anchor: r.anchor,
                    verdict: r.verdict,
                    detail: r.detail,
                })
                .collect(),
        })
    }
}

/// Check id to anchor. Every emitted check takes its anchor from here.
pub const ANCHORS: &[(&str, &str)] = &[
    ("char2.binomial-tail", "sum_{j=m}^{r} C(r,j) <= (r+1)!/(m+1)! for 0 <= m <= r"),
    ("char2.bound-is-n", "R_n(G) <= n when p = 2"),
    ("nonA.g2-p3-excluded", "G2 with p = 3 lies outside the saturation hypothesis"),
    ("nonA.lubeck-tables", "R_500(G) < 200 for small rank (dimension tables)"),
    ("nonA.min-dims", "smallest nontrivial dimensions 4, 7, 8, 27, 56, 248, 25 for C, B, D, E6, E7, E8, F4"),
    ("nonA.zeta-B", "1 + n^(9/4)(zeta(9/4)(zeta(9/4) - 1) + zeta(9/4) 2^(-9/4)) < n^(9/4) for n >= 7"),
    ("nonA.zeta-C", "1 + n^2(zeta(2) - 1 + 2^(-2)) < n^2 for n >= 4"),
    ("nonA.zeta-D", "1 + n^(9/4)(zeta(9/4)(zeta(9/4) - 1) + zeta(9/4) 2^(-9/4)) < n^(9/4) for n >= 8"),
    ("nonA.zeta-E6", "1 + n^(5/2)(zeta(5/2) - 1 + 2^(-5/2)) < n^(5/2) for n >= 27"),
    ("nonA.zeta-E7", "1 + n^(9/4)(zeta(9/4) - 1 + 2^(-9/4)) < n^(9/4) for n >= 56"),
    ("nonA.zeta-E8", "1 + n^(9/4)(zeta(9/4) - 1 + 2^(-9/4)) < n^(9/4) for n >= 248"),
    ("nonA.zeta-F4", "1 + n^2(zeta(2) - 1 + 2^(-2)) < n^2 for n >= 25"),
    ("nonA.zeta2-value", "zeta(2) = pi^2/6"),
    ("partitions.glaisher", "#p-regular partitions of n = #partitions of n with no part divisible by p"),
    ("partitions.k-sum-bound", "sum_{s<=N} k(r,s) <= (N+1)(N+2)/2 e^(2 pi sqrt(N/3))"),
    ("partitions.p21", "p(21) = 792"),
    ("partitions.p39", "p(39) = 31,185"),
    ("partitions.p60", "p(60) = 966,467"),
    ("partitions.partition-bound", "p(n) < e^(pi sqrt(2n/3))"),
    ("symmetric.b-combination", "b(n) + 2 b(2n) < n^2.5 with b(n) = n^2.5/12.32"),
    ("symmetric.bound3-hook", "dim D^lambda >= 2^((r - m_p(lambda))/2)"),
    ("symmetric.bracket-172", "p(39) = 31,185 < b(172)"),
    ("symmetric.bracket-53", "p(21) = 792 < b(53)"),
    ("symmetric.bracket-677", "p(60) = 966,467 < b(677)"),
    ("symmetric.cover-reduction", "below 2^floor((r-3)/2) representations of covers factor through S_r or A_r"),
    ("symmetric.f5-below-b", "f5(n) < b(n) for n >= 1503"),
    ("symmetric.few-below-quadratic", "R_n(S_r) <= 4 for n < (r^2 - 5r + 2)/2"),
    ("symmetric.four-p-threshold", "4 p(r) < n^2.5 for n >= 2^floor((r-3)/2), r >= 13"),
    ("symmetric.maximal-subgroups", "maximal subgroup counts"),
    ("symmetric.mullineux-conjugation", "lambda^M = lambda' when p = 0 or p > n"),
    ("symmetric.mullineux-involution", "(lambda^M)^M = lambda and lambda^M is p-regular"),
    ("symmetric.mullineux-oracle", "rim-stripping and good-node constructions of lambda^M agree"),
    ("symmetric.small-rank-tables", "R_n <= n^2.5 for 5 <= r <= 12 (decomposition tables)"),
    ("symmetric.sym1-count", "#{lambda p-regular : r - m_p(lambda) <= n0} <= 2 (p(0) + ... + p(n0))"),
    ("typeA.a5-count", "#{x in N^5 : x1 + 2x2 + 3x3 + 2x4 + x5 <= 76} = 2,415,231"),
    ("typeA.a5-orbit-total", "3^5 · 720 = 174,960"),
    ("typeA.dim-l-values", "dim L(lambda) in characteristic p"),
    ("typeA.f1-729", "f1(r) < d1(r)^3.8 when r >= 730"),
    ("typeA.f1-730", "f1(730) < d1(730)^3.8"),
    ("typeA.f4-range", "f4(m) < 2^(m+1) for m >= 80"),
    ("typeA.f5-1e13", "f5(n) <= n when n >= 10^13"),
    ("typeA.f5-1e44", "f5(10^44) < 10^22"),
    ("typeA.g-bound", "g(r, d) bounded via h(d) <= 1 + ln d"),
    ("typeA.orbit-stabilizer", "|W lambda| · |W_lambda| = |W|"),
    ("typeA.premet-vs-nlambda", "N(lambda) <= sum over the saturated set of |W mu|"),
    ("typeA.ratio-r10", "ratio at r = 10 is about 1.7989"),
    ("typeA.ratio-range", "ratio inequality at n = (r+1)! for 5 <= r <= 69"),
    ("typeA.witness-lemmas", "each window lemma yields a dominant witness with its stated shape"),
];

pub fn anchor(id: &str) -> &'static str {
    ANCHORS
        .iter()
        .find(|(k, _)| *k == id)
        .map(|(_, a)| *a)
        .unwrap_or_else(|| panic!("check `{id}` has no anchor"))
}

fn check(id: &str, verdict: CheckVerdict, detail: impl Into<String>) -> Check {
    Check {
        id: id.to_string(),
        anchor: anchor(id).to_string(),
        verdict,
        detail: detail.into(),
    }
}

fn external(id: &str, detail: &str) -> Check {
    check(id, CheckVerdict::ExternalAssumption, detail)
}

fn ch(p: u64) -> Characteristic {
    Characteristic::new(p).expect("0 or prime")
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

/// Fails on the first counterexample, reporting it; otherwise passes with
/// `summary`.
fn first_failure(failure: Option<String>, summary: String) -> (CheckVerdict, String) {
    match failure {
        Some(f) => (CheckVerdict::Fail, f),
        None => (CheckVerdict::Pass, summary),
    }
}

pub fn run_suite(suite: SuiteId, scale: Scale, prec: Precision) -> VerificationSuite {
    let mut checks = match suite {
        SuiteId::TypeA => type_a(scale, prec),
        SuiteId::Char2 => char2(prec),
        SuiteId::NonA => non_a(prec),
        SuiteId::Partitions => partitions(scale, prec),
        SuiteId::Symmetric => symmetric(scale, prec),
        SuiteId::All => std::thread::scope(|s| {
            let handles: Vec<_> = [
                SuiteId::TypeA,
                SuiteId::Char2,
                SuiteId::NonA,
                SuiteId::Partitions,
                SuiteId::Symmetric,
            ]
            .into_iter()
            .map(|id| s.spawn(move || run_suite(id, scale, prec).checks))
            .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("suite thread panicked"))
                .collect()
        }),
    };
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    VerificationSuite {
        id: suite,
        scale,
        checks,
    }
}

fn type_a(scale: Scale, prec: Precision) -> Vec<Check> {
    let mut out = Vec::new();
    let bits = prec.start;

    let count = k_sum(5, 76);
    out.push(check(
        "typeA.a5-count",
        CheckVerdict::from_bool(count == big(2_415_231)),
        format!("count = {count}"),
    ));

    let a5 = RootDatum::type_a(5).expect("rank 5");
    let lambda0 = Weight::new(vec![0, 0, 26, 0, 0]);
    let (v, d) = match a5_good_family(&a5, &lambda0) {
        Ok(fam) => {
            let distinct: BTreeSet<&Weight> = fam.members.iter().map(|c| &c.target).collect();
            let good = fam.members.iter().all(|c| is_good(&c.target) && c.verify(&a5));
            let total = fam.orbit_total(&a5).unwrap_or_default();
            (
                CheckVerdict::from_bool(good && distinct.len() == 243 && total == big(174_960)),
                format!("lambda0 = {lambda0}: {} distinct good members, orbit total {total}", distinct.len()),
            )
        }
        Err(e) => (CheckVerdict::Fail, e.to_string()),
    };
    out.push(check("typeA.a5-orbit-total", v, d));

    let mut worst = Verdict::True;
    let mut failure = None;
    for r in 5..=69 {
        let n = factorial(r as u64 + 1);
        match ratio_holds(r, &n, prec) {
            Ok(c) => {
                if c.verdict != Verdict::True && failure.is_none() {
                    failure = Some(format!("r = {r}: {}", c.verdict));
                }
                worst = worst.and(c.verdict);
            }
            Err(e) => {
                worst = Verdict::False;
                failure.get_or_insert(format!("r = {r}: {e}"));
            }
        }
    }
    out.push(check(
        "typeA.ratio-range",
        CheckVerdict::from_verdict(worst),
        failure.unwrap_or_else(|| "certified for all 65 ranks".into()),
    ));

    let c = ratio_constant(10, bits);
    let mid = c.midpoint_f64();
    out.push(check(
        "typeA.ratio-r10",
        CheckVerdict::from_bool((mid - 1.7989).abs() < 5e-5 && c.width_f64() < 1e-10),
        format!("ratio(10) = {mid:.6}"),
    ));

    let f1_vs_d1 = |r: u64| {
        certify_lt(prec, |b| {
            let f = f_value(FFunction::F1, &big(r), b).expect("r >= 1");
            let d = Interval::from_biguint(b, &d1(r as usize)).pow(&Interval::from_frac(b, 19, 5));
            (f, d)
        })
    };
    let c730 = f1_vs_d1(730);
    out.push(check(
        "typeA.f1-730",
        CheckVerdict::from_verdict(c730.verdict),
        format!("certified at {} bits", c730.precision),
    ));
    let c729 = f1_vs_d1(729);
    let decided = c729.verdict != Verdict::Unknown;
    out.push(check(
        "typeA.f1-729",
        if decided { CheckVerdict::Pass } else { CheckVerdict::Unknown },
        format!(
            "comparison at r = 729 decided: f1(729) < d1(729)^3.8 is {}",
            c729.verdict
        ),
    ));

    let mut failure = None;
    for m in 80..=200u32 {
        let c = certify_lt(prec, |b| {
            (
                f_value(FFunction::F4, &big(m as u64), b).expect("any m"),
                Interval::from_biguint(b, &d4(m)),
            )
        });
        if c.verdict != Verdict::True {
            failure = Some(format!("m = {m}: {}", c.verdict));
            break;
        }
    }
    let (v, d) = first_failure(failure, "certified for 80 <= m <= 200".into());
    out.push(check("typeA.f4-range", v, d));

    let n13 = BigUint::from(10u32).pow(13);
    let c = certify_le(prec, |b| {
        (f_value(FFunction::F5, &n13, b).expect("n >= 1"), Interval::from_biguint(b, &n13))
    });
    out.push(check(
        "typeA.f5-1e13",
        CheckVerdict::from_verdict(c.verdict),
        format!("f5(10^13) in [{}, {}]", c.lhs.lo, c.lhs.hi),
    ));
    let n44 = BigUint::from(10u32).pow(44);
    let n22 = BigUint::from(10u32).pow(22);
    let c = certify_lt(prec, |b| {
        (f_value(FFunction::F5, &n44, b).expect("n >= 1"), Interval::from_biguint(b, &n22))
    });
    out.push(check(
        "typeA.f5-1e44",
        CheckVerdict::from_verdict(c.verdict),
        format!("f5(10^44) in [{}, {}]", c.lhs.lo, c.lhs.hi),
    ));

    let d_max = if scale == Scale::Desk { 200 } else { 400 };
    let mut failure = None;
    'grid: for d in 1..=d_max {
        let dq = BigRational::from_integer(d.into());
        if d >= 2 {
            match harmonic_log_bound(&dq, prec) {
                Ok(c) if c.verdict == Verdict::True => {}
                other => {
                    failure = Some(format!("h({d}): {other:?}"));
                    break;
                }
            }
        }
        for r in 1..=6 {
            if !matches!(g_bound_holds(r, &dq, 1_000_000), Ok(true)) {
                failure = Some(format!("g({r}, {d})"));
                break 'grid;
            }
        }
    }
    let (v, d) = first_failure(failure, format!("r <= 6, d <= {d_max}"));
    out.push(check("typeA.g-bound", v, d));

    let (ranks, total) = if scale == Scale::Desk { (1..=7, 12) } else { (1..=8, 14) };
    let summary = scan_lemmas(ranks.clone(), total);
    out.push(check(
        "typeA.witness-lemmas",
        CheckVerdict::from_bool(summary.failures.is_empty()),
        format!(
            "ranks {ranks:?}, coefficient sum <= {total}: {} inputs, {} witnesses rechecked, {} rejections, {} failures{}",
            summary.inputs,
            summary.witnesses,
            summary.rejections,
            summary.failures.len(),
            summary.failures.first().map(|f| format!(" (first: {f})")).unwrap_or_default()
        ),
    ));

    let (v, d) = premet_vs_nlambda(5);
    out.push(check("typeA.premet-vs-nlambda", v, d));
    let (v, d) = orbit_stabilizer(4);
    out.push(check("typeA.orbit-stabilizer", v, d));

    out.push(external(
        "typeA.dim-l-values",
        "true dimensions of L(lambda) in positive characteristic are not computed; only lower bounds are",
    ));
    out
}

/// `N(lambda) <= premet` for every `p`-restricted weight of A1..A4.
pub fn premet_vs_nlambda(p: i64) -> (CheckVerdict, String) {
    let mut seen = 0;
    for r in 1..=4 {
        let d = RootDatum::type_a(r).expect("positive rank");
        let mut c = vec![0i64; r];
        loop {
            let l = Weight::new(c.clone());
            let lower = n_lambda(&d, &l).expect("dominant type A");
            match premet_sum(&d, &l, 10_000_000) {
                Ok(s) if lower <= s => {}
                other => return (CheckVerdict::Fail, format!("{l}: N = {lower}, premet {other:?}")),
            }
            seen += 1;
            let Some(i) = c.iter().position(|&x| x < p - 1) else { break };
            c[i] += 1;
            c[..i].iter_mut().for_each(|x| *x = 0);
        }
    }
    (CheckVerdict::Pass, format!("{seen} restricted weights, p = {p}, ranks 1..=4"))
}

/// Orbit-stabilizer on every weight with coefficients `<= max` for each
/// root system of rank at most 4.
pub fn orbit_stabilizer(max: i64) -> (CheckVerdict, String) {
    let mut seen = 0;
    for family in [Family::A, Family::B, Family::C, Family::D, Family::F, Family::G] {
        for rank in 1..=4 {
            let Ok(d) = RootDatum::new(family, rank) else { continue };
            let w = d.weyl_group_order();
            for l in dominant_weights(rank, max * rank as i64) {
                if l.coeffs().iter().any(|&a| a > max) {
                    continue;
                }
                let (o, s) = (orbit_length(&d, &l), weyl_stabilizer_order(&d, &l));
                match (o, s) {
                    (Ok(o), Ok(s)) if &o * &s == w => seen += 1,
                    other => return (CheckVerdict::Fail, format!("{} {l}: {other:?}", d.label())),
                }
            }
        }
    }
    (CheckVerdict::Pass, format!("{seen} weights across all root systems of rank <= 4"))
}

fn char2(prec: Precision) -> Vec<Check> {
    let mut out = Vec::new();
    let (v, d) = binomial_tail(25);
    out.push(check("char2.binomial-tail", v, d));
    let mut bad = None;
    for (family, rank) in [(Family::A, 6), (Family::A, 12), (Family::B, 3), (Family::E, 8)] {
        for n in [2u64, 100, 10_000] {
            match rn_upper(family, rank, &big(n), 2, prec.start) {
                Ok(rep) if rep.name == "char2" && rep.value.as_exact() == Some(&big(n)) => {}
                other => {
                    bad = Some(format!("{family}{rank}, n = {n}: {other:?}"));
                }
            }
        }
    }
    let (v, d) = first_failure(bad, "value n in every family sampled".into());
    out.push(check("char2.bound-is-n", v, d));
    out
}

/// `sum_{j=m}^{r} C(r, j) <= (r+1)!/(m+1)!` for `0 <= m <= r <= r_max`.
pub fn binomial_tail(r_max: u64) -> (CheckVerdict, String) {
    for r in 0..=r_max {
        for m in 0..=r {
            let (lhs, rhs) = char2_counts(r, m).expect("m <= r");
            if lhs > rhs {
                return (CheckVerdict::Fail, format!("r = {r}, m = {m}: {lhs} > {rhs}"));
            }
        }
    }
    (CheckVerdict::Pass, format!("exact for all 0 <= m <= r <= {r_max}"))
}

fn non_a(prec: Precision) -> Vec<Check> {
    let mut out = Vec::new();
    for (id, family, rank) in [
        ("nonA.zeta-B", Family::B, 3),
        ("nonA.zeta-C", Family::C, 3),
        ("nonA.zeta-D", Family::D, 4),
        ("nonA.zeta-E6", Family::E, 6),
        ("nonA.zeta-E7", Family::E, 7),
        ("nonA.zeta-E8", Family::E, 8),
        ("nonA.zeta-F4", Family::F, 4),
    ] {
        let (s, form, n0) = family_tail(family, rank).expect("family outside A and G2");
        let c = match zeta_tail_check(&s, form, n0, prec) {
            Ok(t) => check(
                id,
                CheckVerdict::from_verdict(t.verdict),
                format!(
                    "s = {}, n0 = {n0}, constant in [{}, {}]",
                    t.s, t.constant.lo, t.constant.hi
                ),
            ),
            Err(e) => check(id, CheckVerdict::Fail, e.to_string()),
        };
        out.push(c);
    }

    let b = prec.start;
    let two = BigRational::from_integer(2.into());
    let v = match zeta(&two, b) {
        Ok(z) => {
            let pi = Interval::pi(b);
            let exact = pi.mul(&pi).div_i64(6);
            let apart = z.lt(&exact) == Some(true) || exact.lt(&z) == Some(true);
            check(
                "nonA.zeta2-value",
                CheckVerdict::from_bool(!apart && z.width_f64() < 1e-30),
                format!("zeta(2) = {:.15}", z.midpoint_f64()),
            )
        }
        Err(e) => check("nonA.zeta2-value", CheckVerdict::Fail, e.to_string()),
    };
    out.push(v);

    let v = match rn_upper(Family::G, 2, &big(100), 3, b) {
        Ok(rep) => check(
            "nonA.g2-p3-excluded",
            CheckVerdict::from_bool(!rep.valid),
            rep.guard_detail,
        ),
        Err(e) => check("nonA.g2-p3-excluded", CheckVerdict::Fail, e.to_string()),
    };
    out.push(v);

    out.push(external(
        "nonA.min-dims",
        "smallest nontrivial restricted dimensions are taken from published tables",
    ));
    out.push(external(
        "nonA.lubeck-tables",
        "small-dimension counts for low rank are taken from published tables",
    ));
    out
}

fn partitions(scale: Scale, prec: Precision) -> Vec<Check> {
    let mut out = Vec::new();
    for (id, n, want) in [
        ("partitions.p21", 21, 792u64),
        ("partitions.p39", 39, 31_185),
        ("partitions.p60", 60, 966_467),
    ] {
        let got = partition_count(n);
        out.push(check(id, CheckVerdict::from_bool(got == big(want)), format!("p({n}) = {got}")));
    }

    let n_max = if scale == Scale::Desk { 30 } else { 45 };
    let mut failure = None;
    for p in [2u64, 3, 5, 7] {
        for n in 0..=n_max {
            let regular = p_regular_partitions(n, ch(p)).count();
            let no_multiple = Partitions::new(n)
                .filter(|l| l.parts().iter().all(|&x| !(x as u64).is_multiple_of(p)))
                .count();
            if regular != no_multiple {
                failure = Some(format!("p = {p}, n = {n}: {regular} vs {no_multiple}"));
            }
        }
    }
    let (v, d) = first_failure(failure, format!("p in {{2,3,5,7}}, n <= {n_max}"));
    out.push(check("partitions.glaisher", v, d));

    let n_max = if scale == Scale::Desk { 300 } else { 2000 };
    let mut worst = Verdict::True;
    let mut failure = None;
    for n in 1..=n_max {
        match partition_bound_check(n, prec) {
            Ok(c) => {
                if c.verdict != Verdict::True && failure.is_none() {
                    failure = Some(format!("n = {n}: {}", c.verdict));
                }
                worst = worst.and(c.verdict);
            }
            Err(e) => {
                worst = Verdict::False;
                failure.get_or_insert(e.to_string());
            }
        }
    }
    out.push(check(
        "partitions.partition-bound",
        CheckVerdict::from_verdict(worst),
        failure.unwrap_or_else(|| format!("certified for 1 <= n <= {n_max}")),
    ));

    let (r_max, n_max) = if scale == Scale::Desk { (8, 60) } else { (14, 120) };
    let mut worst = Verdict::True;
    let mut failure = None;
    for r in 1..=r_max {
        for n in 0..=n_max {
            let c = k_sum_check(r, n, prec);
            if c.certificate.verdict != Verdict::True && failure.is_none() {
                failure = Some(format!("r = {r}, N = {n}: {}", c.certificate.verdict));
            }
            worst = worst.and(c.certificate.verdict);
        }
    }
    out.push(check(
        "partitions.k-sum-bound",
        CheckVerdict::from_verdict(worst),
        failure.unwrap_or_else(|| {
            format!("r <= {r_max}, N <= {n_max}; strict for N >= 1, equality at N = 0")
        }),
    ));
    out
}

fn symmetric(scale: Scale, prec: Precision) -> Vec<Check> {
    let mut out = Vec::new();
    let desk = scale == Scale::Desk;

    let n_max = if desk { 18 } else { 22 };
    let mut failure = None;
    let mut seen = 0;
    'inv: for p in [3u64, 5, 7] {
        for n in 0..=n_max {
            for l in p_regular_partitions(n, ch(p)) {
                seen += 1;
                let ok = match mullineux(&l, ch(p)) {
                    Ok(m) => m.is_regular(ch(p)) && mullineux(&m, ch(p)).ok() == Some(l.clone()),
                    Err(_) => false,
                };
                if !ok {
                    failure = Some(format!("p = {p}, {l}"));
                    break 'inv;
                }
            }
        }
    }
    let (v, d) = first_failure(failure, format!("{seen} partitions, p in {{3,5,7}}, n <= {n_max}"));
    out.push(check("symmetric.mullineux-involution", v, d));

    let mut failure = None;
    'oracle: for p in [3u64, 5, 7] {
        for n in 0..=n_max {
            for l in p_regular_partitions(n, ch(p)) {
                let a = mullineux(&l, ch(p)).ok();
                let b = mullineux_by_good_nodes(&l, ch(p)).ok();
                if a.is_none() || a != b {
                    failure = Some(format!("p = {p}, {l}: {a:?} vs {b:?}"));
                    break 'oracle;
                }
            }
        }
    }
    let (v, d) = first_failure(failure, format!("p in {{3,5,7}}, n <= {n_max}"));
    out.push(check("symmetric.mullineux-oracle", v, d));

    let mut failure = None;
    for n in 0..=10u32 {
        for l in Partitions::new(n) {
            let conj = Some(l.conjugate());
            if mullineux_by_symbol(&l, ch(0)).ok() != conj || mullineux_by_symbol(&l, ch(11)).ok() != conj {
                failure = Some(format!("{l}"));
            }
        }
    }
    let (v, d) = first_failure(failure, "p = 0 and p = 11, n <= 10".into());
    out.push(check("symmetric.mullineux-conjugation", v, d));

    let n_max = if desk { 16 } else { 20 };
    let mut failure = None;
    for n in 5..=n_max {
        for l in Partitions::new(n) {
            let ok = bound3_value(&l, ch(0)).map(|b| b.le(&hook_length_dim(&l)));
            if ok != Ok(true) {
                failure = Some(format!("{l}: {ok:?}"));
            }
        }
    }
    let (v, d) = first_failure(failure, format!("p = 0 against hook lengths, 5 <= n <= {n_max}"));
    out.push(check("symmetric.bound3-hook", v, d));

    let (v, d) = sym1_count(25);
    out.push(check("symmetric.sym1-count", v, d));

    for (id, c) in ["symmetric.bracket-677", "symmetric.bracket-172", "symmetric.bracket-53"]
        .into_iter()
        .zip(bracket_checks(prec))
    {
        out.push(check(id, CheckVerdict::from_verdict(c.certificate.verdict), c.claim));
    }

    // the ratio (b(n) + 2 b(2n)) / n^2.5 does not depend on n
    let c = certify_lt(prec, |b| {
        let two_pow = Interval::from_i64(b, 2).pow(&Interval::from_frac(b, 5, 2));
        let lhs = Interval::from_i64(b, 1)
            .add(&two_pow.mul_i64(2))
            .mul(&Interval::from_frac(b, 25, 308));
        (lhs, Interval::from_i64(b, 1))
    });
    out.push(check(
        "symmetric.b-combination",
        CheckVerdict::from_verdict(c.verdict),
        format!("(1 + 2^3.5)/12.32 in [{}, {}]", c.lhs.lo, c.lhs.hi),
    ));

    let r_max = if desk { 200 } else { 1000 };
    let counts = partition_counts(r_max);
    let mut failure = None;
    for (r, pr) in counts.iter().enumerate().skip(13) {
        let n = BigUint::one() << ((r - 3) / 2);
        let c = certify_lt(prec, |b| {
            (
                Interval::from_biguint(b, pr).mul_i64(4),
                Interval::from_biguint(b, &n).pow(&Interval::from_frac(b, 5, 2)),
            )
        });
        if c.verdict != Verdict::True {
            failure = Some(format!("r = {r}: {}", c.verdict));
            break;
        }
    }
    let (v, d) = first_failure(failure, format!("13 <= r <= {r_max}, n = 2^floor((r-3)/2)"));
    out.push(check("symmetric.four-p-threshold", v, d));

    let n_max = if desk { 4000 } else { 40_000 };
    let mut failure = None;
    for n in 1503..=n_max {
        let nb = big(n);
        let c = certify_lt(prec, |b| {
            (
                f_value(FFunction::F5, &nb, b).expect("n >= 1"),
                repgrowth::partitions::b_value(&nb, b),
            )
        });
        if c.verdict != Verdict::True {
            failure = Some(format!("n = {n}: {}", c.verdict));
            break;
        }
    }
    let (v, d) = first_failure(failure, format!("1503 <= n <= {n_max}"));
    out.push(check("symmetric.f5-below-b", v, d));

    out.push(external(
        "symmetric.small-rank-tables",
        "5 <= r <= 12 relies on published decomposition matrices",
    ));
    out.push(external(
        "symmetric.few-below-quadratic",
        "relies on the classification of modules of dimension below (r^2 - 5r + 2)/2",
    ));
    out.push(external(
        "symmetric.cover-reduction",
        "relies on published lower bounds for faithful representations of covers",
    ));
    out.push(external(
        "symmetric.maximal-subgroups",
        "maximal subgroup counts are quoted, not recomputed",
    ));
    out
}

/// For each `n0 <= r`, the p-regular `lambda ⊢ r` with `r - m_p <= n0`
/// number at most `2 (p(0) + ... + p(n0))`.
pub fn sym1_count(r_max: u32) -> (CheckVerdict, String) {
    let counts = partition_counts(r_max as usize);
    for p in [2u64, 3, 5] {
        for r in 5..=r_max {
            let defects: Vec<u32> = p_regular_partitions(r, ch(p))
                .map(|l: Partition| r - m_p(&l, ch(p)).expect("regular"))
                .collect();
            let mut prefix = BigUint::zero();
            for (n0, pn0) in counts.iter().enumerate().take(r as usize + 1) {
                prefix += pn0;
                let count = defects.iter().filter(|&&d| d as usize <= n0).count();
                if BigUint::from(count) > &prefix * 2u32 {
                    return (CheckVerdict::Fail, format!("p = {p}, r = {r}, n0 = {n0}: {count}"));
                }
            }
        }
    }
    (CheckVerdict::Pass, format!("p in {{2,3,5}}, 5 <= r <= {r_max}"))
}

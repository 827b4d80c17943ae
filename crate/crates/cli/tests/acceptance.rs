//! Acceptance suite: one line per criterion, each checked at its stated
//! tolerance and within its time budget. Exits nonzero if any line fails.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use repgrowth::bounds::{
    d1, d4, f_value, factorial, family_tail, ratio_constant, ratio_holds, zeta_tail_check, FFunction,
};
use repgrowth::interval::{certify_le, certify_lt, Certificate, Interval, Precision, Verdict, MAX_PRECISION};
use repgrowth::partitions::{
    bound3_value, hook_length_dim, k_sum, mullineux, mullineux_by_good_nodes, mullineux_by_symbol,
    partition_count, p_regular_partitions, Partitions,
};
use repgrowth::rootdata::{Characteristic, Family, RootDatum, Weight};
use repgrowth::witness::{a5_good_family, scan_lemmas};
use repgrowth_cli::args::{Scale, SuiteId};
use repgrowth_cli::verify::{binomial_tail, orbit_stabilizer, premet_vs_nlambda, run_suite, CheckVerdict};

type Outcome = Result<String, String>;

/// Name, time budget and body of one criterion.
type Criterion = (&'static str, Option<Duration>, fn() -> Outcome);

fn ch(p: u64) -> Characteristic {
    Characteristic::new(p).unwrap()
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn certified(c: &Certificate, what: &str) -> Result<(), String> {
    if c.verdict != Verdict::True {
        return Err(format!("{what}: {}", c.verdict));
    }
    if c.precision > MAX_PRECISION {
        return Err(format!("{what}: needed {} bits", c.precision));
    }
    Ok(())
}

fn partition_values() -> Outcome {
    for (n, want) in [(21, 792u64), (39, 31_185), (60, 966_467)] {
        let got = partition_count(n);
        if got != big(want) {
            return Err(format!("p({n}) = {got}, expected {want}"));
        }
    }
    Ok("p(21) = 792, p(39) = 31185, p(60) = 966467".into())
}

fn a5_counts() -> Outcome {
    let count = k_sum(5, 76);
    if count != big(2_415_231) {
        return Err(format!("level count {count}"));
    }
    let d = RootDatum::type_a(5).unwrap();
    let fam = a5_good_family(&d, &Weight::new(vec![0, 0, 26, 0, 0])).map_err(|e| e.to_string())?;
    let total = fam.orbit_total(&d).map_err(|e| e.to_string())?;
    if total != big(174_960) {
        return Err(format!("orbit total {total}"));
    }
    Ok(format!("level count {count}, orbit total {total}"))
}

fn thresholds() -> Outcome {
    let prec = Precision::default();
    let f1_vs_d1 = |r: u64| {
        certify_lt(prec, |b| {
            let f = f_value(FFunction::F1, &big(r), b).unwrap();
            let d = Interval::from_biguint(b, &d1(r as usize)).pow(&Interval::from_frac(b, 19, 5));
            (f, d)
        })
    };
    certified(&f1_vs_d1(730), "f1(730) < d1^3.8")?;
    let c729 = f1_vs_d1(729);
    if c729.verdict == Verdict::Unknown {
        return Err("f1(729) comparison undecided".into());
    }
    for m in 80..=200u32 {
        let c = certify_lt(prec, |b| {
            (
                f_value(FFunction::F4, &big(m as u64), b).unwrap(),
                Interval::from_biguint(b, &d4(m)),
            )
        });
        certified(&c, &format!("f4({m}) < 2^{}", m + 1))?;
    }
    let n13 = BigUint::from(10u32).pow(13);
    let c = certify_le(prec, |b| {
        (f_value(FFunction::F5, &n13, b).unwrap(), Interval::from_biguint(b, &n13))
    });
    certified(&c, "f5(10^13) <= 10^13")?;
    let n44 = BigUint::from(10u32).pow(44);
    let n22 = BigUint::from(10u32).pow(22);
    let c = certify_lt(prec, |b| {
        (f_value(FFunction::F5, &n44, b).unwrap(), Interval::from_biguint(b, &n22))
    });
    certified(&c, "f5(10^44) < 10^22")?;
    Ok(format!(
        "all certified; at r = 729, f1 < d1^3.8 is {}",
        c729.verdict
    ))
}

fn ratio() -> Outcome {
    for r in 5..=69 {
        let c = ratio_holds(r, &factorial(r as u64 + 1), Precision::default()).map_err(|e| e.to_string())?;
        certified(&c, &format!("ratio at r = {r}"))?;
    }
    let c = ratio_constant(10, 256);
    let shown = format!("{:.4}", c.midpoint_f64());
    if shown != "1.7989" || c.width_f64() > 1e-10 {
        return Err(format!("ratio(10) = {shown}"));
    }
    Ok(format!("65 ranks certified, ratio(10) = {shown}"))
}

fn zeta_tails() -> Outcome {
    let mut seen = Vec::new();
    for (family, rank) in [
        (Family::C, 3),
        (Family::B, 3),
        (Family::D, 4),
        (Family::E, 6),
        (Family::E, 7),
        (Family::E, 8),
        (Family::F, 4),
    ] {
        let (s, form, n0) = family_tail(family, rank).unwrap();
        let t = zeta_tail_check(&s, form, n0, Precision::default()).map_err(|e| e.to_string())?;
        certified(&t.below_one, &format!("{family}{rank}: c < 1"))?;
        certified(&t.at_threshold, &format!("{family}{rank}: n0 = {n0}"))?;
        seen.push(format!("{family}{rank}@{n0}"));
    }
    Ok(seen.join(" "))
}

fn witness_lemmas() -> Outcome {
    let s = scan_lemmas(1..=7, 12);
    if let Some(f) = s.failures.first() {
        return Err(format!("{} failures, first {f}", s.failures.len()));
    }
    Ok(format!(
        "{} weights, {} witnesses rechecked, {} hypothesis rejections",
        s.inputs, s.witnesses, s.rejections
    ))
}

fn bounds_consistency() -> Outcome {
    let (v, a) = premet_vs_nlambda(5);
    if v != CheckVerdict::Pass {
        return Err(a);
    }
    let (v, b) = orbit_stabilizer(4);
    if v != CheckVerdict::Pass {
        return Err(b);
    }
    Ok(format!("{a}; {b}"))
}

fn char2() -> Outcome {
    match binomial_tail(25) {
        (CheckVerdict::Pass, d) => Ok(d),
        (_, d) => Err(d),
    }
}

fn mullineux_bound3() -> Outcome {
    let mut seen = 0;
    for p in [3u64, 5, 7] {
        for n in 0..=18 {
            for l in p_regular_partitions(n, ch(p)) {
                let m = mullineux(&l, ch(p)).map_err(|e| e.to_string())?;
                if !m.is_regular(ch(p)) || mullineux(&m, ch(p)).ok().as_ref() != Some(&l) {
                    return Err(format!("involution fails at p = {p}, {l}"));
                }
                if mullineux_by_good_nodes(&l, ch(p)).ok().as_ref() != Some(&m) {
                    return Err(format!("routes disagree at p = {p}, {l}"));
                }
                seen += 1;
            }
        }
    }
    for n in 0..=10 {
        for l in Partitions::new(n) {
            if mullineux_by_symbol(&l, ch(0)).ok() != Some(l.conjugate()) {
                return Err(format!("p = 0 differs from conjugation at {l}"));
            }
        }
    }
    for n in 5..=16 {
        for l in Partitions::new(n) {
            let b = bound3_value(&l, ch(0)).map_err(|e| e.to_string())?;
            if !b.le(&hook_length_dim(&l)) {
                return Err(format!("bound3 fails at {l}"));
            }
        }
    }
    Ok(format!("{seen} p-regular partitions; p = 0 conjugation; bound3 for 5 <= n <= 16"))
}

fn external_items() -> Outcome {
    let required = ["typeA.dim-l-values", "nonA.lubeck-tables", "symmetric.maximal-subgroups"];
    let checks: Vec<_> = [SuiteId::TypeA, SuiteId::NonA, SuiteId::Symmetric]
        .into_iter()
        .flat_map(|id| run_suite(id, Scale::Desk, Precision::default()).checks)
        .collect();
    for id in required {
        match checks.iter().find(|c| c.id == id) {
            None => return Err(format!("{id} missing")),
            Some(c) if c.verdict != CheckVerdict::ExternalAssumption => {
                return Err(format!("{id} reported as {:?}", c.verdict))
            }
            Some(_) => {}
        }
    }
    let externals = checks
        .iter()
        .filter(|c| c.verdict == CheckVerdict::ExternalAssumption)
        .count();
    Ok(format!("{externals} checks reported as external-assumption, none as pass"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("partition values", Some(Duration::from_secs(1)), partition_values),
        ("A5 counts", Some(Duration::from_secs(5)), a5_counts),
        ("threshold certificates", Some(Duration::from_secs(10)), thresholds),
        ("ratio inequality", Some(Duration::from_secs(5)), ratio),
        ("zeta-sum inequalities", Some(Duration::from_secs(5)), zeta_tails),
        ("witness lemmas", Some(Duration::from_secs(120)), witness_lemmas),
        ("bounds consistency", Some(Duration::from_secs(60)), bounds_consistency),
        ("char 2 counts", Some(Duration::from_secs(1)), char2),
        ("Mullineux and bound3", Some(Duration::from_secs(120)), mullineux_bound3),
        ("external facts", None, external_items),
    ];
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let (ok, detail) = match result {
            Ok(d) if budget.is_none_or(|b| elapsed <= b) => (true, d),
            Ok(d) => (false, format!("{d}; over budget")),
            Err(e) => (false, e),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {:>2} {} {name}: {detail} [{:.3}s, {}]",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            budget.map_or("no budget".to_string(), |b| format!("budget {}s", b.as_secs()))
        );
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

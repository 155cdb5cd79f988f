//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dioph_verify::bennett::{lambda_cap_value, lambda_enclosure};
use dioph_verify::cfrac::partial_quotients;
use dioph_verify::driver::{
    verify_all, verify_all_resume, verify_all_with, ChainStatus, Enclosure, VerifyOptions,
};
use dioph_verify::elimination::{eliminate_chain, enumerate_cases, standard_chains};
use dioph_verify::oracle::{check_identities, search_solutions, SearchMode, SearchRange};
use dioph_verify::{CaseParams, Precision, Rational, Reason, RunReport, Verdict};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

/// Exact value of a decimal literal such as `"-12.0625"`.
fn decimal(s: &str) -> Rational {
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    let digits: BigInt = format!("{int}{frac}").parse().expect("decimal digits");
    let v = Rational::new(digits, BigInt::from(10u32).pow(frac.len() as u32));
    if neg {
        -v
    } else {
        v
    }
}

fn criterion_1() -> Outcome {
    // reference values from a 60-digit mpmath evaluation
    let rows: [(u64, u64, &str, &str); 4] = [
        (9, 512, "3.12629412354114928283126041896948", "3.2"),
        (8, 2560, "2.85821750386987437161519131761814", "2.86"),
        (7, 132_480, "2.41616437845990540299572366332512", "2.4162"),
        (10, 0, "3.65624158987950371762895117166864", "3.7"),
    ];
    let mut worst = Duration::ZERO;
    for (k, d, reference, anchor) in rows {
        let t = Instant::now();
        let enc = if d == 0 {
            lambda_cap_value(k, 512).map_err(|e| e.to_string())?
        } else {
            lambda_enclosure(k, &BigUint::from(d), 512)
                .map_err(|e| e.to_string())?
                .ok_or_else(|| format!("Lambda_{k}({d}) denominator undecided"))?
        };
        let elapsed = t.elapsed();
        worst = worst.max(elapsed);
        ensure(enc.precision() <= 512, format!("k = {k} used {} bits", enc.precision()))?;
        ensure(elapsed < Duration::from_secs(1), format!("k = {k} took {elapsed:?}"))?;
        ensure(
            enc.hi().to_rational() < decimal(anchor),
            format!("k = {k}: upper endpoint {} not below {anchor}", enc.hi()),
        )?;
        let r = decimal(reference);
        let tol = decimal("0.000000000000000000000000000001");
        ensure(
            enc.lo().to_rational() <= &r + &tol && &r - &tol <= enc.hi().to_rational(),
            format!("k = {k}: enclosure {enc} misses reference {reference}"),
        )?;
    }
    Ok(format!("four constants below their anchors, slowest {worst:?}"))
}

fn criterion_2() -> Outcome {
    let anchors = [
        (10u64, "63", "7"),
        (9, "42", "3"),
        (8, "9", "9"),
        (7, "7.218", "7.213"),
    ];
    let policy = Precision::default();
    let mut bits = Vec::new();
    for ((k, d), (ak, lhs_min, rhs_max)) in standard_chains().into_iter().zip(anchors) {
        ensure(k == ak, "chain order changed")?;
        let c = eliminate_chain(k, d, &policy).map_err(|e| e.to_string())?;
        ensure(c.contradiction, format!("k = {k}: no contradiction"))?;
        ensure(c.precision_bits <= 4096, format!("k = {k}: {} bits", c.precision_bits))?;
        ensure(
            c.lhs.lo().to_rational() > decimal(lhs_min),
            format!("k = {k}: lhs {} not above {lhs_min}", c.lhs),
        )?;
        ensure(
            c.rhs.hi().to_rational() < decimal(rhs_max),
            format!("k = {k}: rhs {} not below {rhs_max}", c.rhs),
        )?;
        ensure(c.lhs.certainly_gt(&c.rhs), format!("k = {k}: sides overlap"))?;
        bits.push(format!("k={k}@{}", c.precision_bits));
    }
    Ok(format!("all four chains contradict ({})", bits.join(", ")))
}

fn criterion_3(report: &RunReport, elapsed: Duration) -> Outcome {
    // independent count: for each x, pairs (a, c) with a^2 c <= (limit - 1) / x^k
    let mut expected = 0u64;
    for (k, lim) in [(7u32, 132_480u64), (8, 2_560)] {
        let mut x = 2u64;
        while x.pow(k) < lim {
            let m = (lim - 1) / x.pow(k);
            let mut a = 1u64;
            while a * a <= m {
                expected += m / (a * a);
                a += 1;
            }
            x += 1;
        }
    }
    let t = &report.totals;
    ensure(t.cases as u64 == expected, format!("{} cases, oracle says {expected}", t.cases))?;
    ensure(report.cases.len() as u64 == expected, "certificate count differs from total")?;
    ensure(t.cases_eliminated == t.cases, format!("{} of {} eliminated", t.cases_eliminated, t.cases))?;
    ensure(t.survivors == 0 && t.undecided == 0, format!("{} survivors, {} undecided", t.survivors, t.undecided))?;
    ensure(t.chains_contradicted == t.chains, "a chain is not contradicted")?;
    ensure(report.verdict == Verdict::Pass, format!("verdict {:?}", report.verdict))?;
    ensure(elapsed < Duration::from_secs(30 * 60), format!("took {elapsed:?}"))?;
    Ok(format!(
        "{} cases eliminated, {} candidate J values, {:.1} s",
        t.cases,
        t.candidates_examined,
        elapsed.as_secs_f64()
    ))
}

/// `floor(n^(1/k))` by integer Newton iteration from an upper bound.
fn newton_root(n: &BigUint, k: u32) -> BigUint {
    if n.is_zero() {
        return BigUint::zero();
    }
    let mut x = BigUint::one() << (n.bits() as usize / k as usize + 1);
    loop {
        let y = (&x * (k - 1) + n / x.pow(k - 1)) / k;
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// Partial quotients shared by every real in `[lo, hi]`, both positive.
fn common_quotients(mut lo: (BigInt, BigInt), mut hi: (BigInt, BigInt), want: usize) -> Vec<BigInt> {
    let mut out = Vec::new();
    while out.len() < want {
        let a = lo.0.div_floor(&lo.1);
        if a != hi.0.div_floor(&hi.1) {
            break;
        }
        let (ln, hn) = (&lo.0 - &a * &lo.1, &hi.0 - &a * &hi.1);
        out.push(a);
        if ln.is_zero() || hn.is_zero() {
            break;
        }
        // x -> 1 / (x - a) reverses the order of the endpoints
        let next_lo = (hi.1.clone(), hn);
        let next_hi = (lo.1.clone(), ln);
        lo = next_lo;
        hi = next_hi;
    }
    out
}

/// First `count` quotients of `(a^2 c / (a^2 c x^k - 1))^(1/k)` from a
/// 200-digit decimal truncation.
fn decimal_oracle_quotients(case: &CaseParams, count: usize) -> Vec<BigInt> {
    let k = case.k;
    let num = BigUint::from(case.a * case.a * case.c);
    let den = &num * BigUint::from(case.x).pow(k) - 1u32;
    let scale = BigUint::from(10u32).pow(200);
    let l = newton_root(&(num * scale.pow(k) / den), k);
    let s = BigInt::from(scale);
    let lo = (BigInt::from(l.clone()), s.clone());
    let hi = (BigInt::from(l + 1u32), s);
    common_quotients(lo, hi, count)
}

fn criterion_4(rng: &mut ChaCha8Rng) -> Outcome {
    let cases = enumerate_cases();
    let picks = sample(rng, cases.len(), 50);
    for i in picks.iter() {
        let case = &cases[i];
        let oracle = decimal_oracle_quotients(case, 10);
        ensure(oracle.len() == 10, format!("{case}: oracle resolved only {} quotients", oracle.len()))?;
        let engine = partial_quotients(&case.radicand(), case.k, 10, 128).map_err(|e| e.to_string())?;
        ensure(engine == oracle, format!("{case}: engine {engine:?} vs oracle {oracle:?}"))?;
    }
    Ok("50 sampled cases match the 200-digit oracle on 10 quotients".into())
}

fn criterion_5(rng: &mut ChaCha8Rng) -> Outcome {
    const MAX: u64 = 1_000_000;
    for _ in 0..10_000 {
        let u = rng.gen_range(1..=MAX);
        let v = rng.gen_range(1..MAX);
        let w = rng.gen_range(v + 1..=MAX);
        let r = check_identities(u, v, w).map_err(|e| e.to_string())?;
        ensure(r.all(), format!("({u}, {v}, {w}): {r:?}"))?;
    }
    Ok("10000 random triples satisfy every identity exactly".into())
}

fn criterion_6() -> Outcome {
    let range = SearchRange::uniform(7..=8, 3, 2..=6, SearchMode::Theorem);
    let strict = search_solutions(&range, true).map_err(|e| e.to_string())?;
    ensure(strict.is_empty(), format!("found {strict:?}"))?;
    let all = search_solutions(&range, false).map_err(|e| e.to_string())?;
    ensure(!all.is_empty(), "no symmetric tuples found")?;
    ensure(all.iter().all(|s| s.is_symmetric()), "a non-symmetric tuple slipped through")?;
    ensure(
        all.iter().any(|s| s.a == s.b && s.x == s.y && s.y == s.z),
        "no tuple with a = b and x = y = z",
    )?;
    Ok(format!(
        "{} tuples: none with the filter, {} symmetric without it",
        range.tuple_count(),
        all.len()
    ))
}

fn criterion_7(opts: &VerifyOptions) -> Outcome {
    let zero = |_: &CaseParams, _: u32| Ok(Rational::zero());
    let mutated = VerifyOptions {
        precision_cap: 256,
        ..*opts
    };
    let r = verify_all_with(&mutated, None, &zero).map_err(|e| e.to_string())?;
    let survivors = r
        .cases
        .iter()
        .filter(|c| c.reason == Reason::FailureSurvivor)
        .count();
    ensure(survivors > 0, "a zero bound still eliminated every case")?;
    ensure(r.verdict == Verdict::Fail, format!("verdict {:?}", r.verdict))?;
    Ok(format!("zero bound leaves {survivors} survivors, verdict FAIL"))
}

fn criterion_8(baseline: &RunReport, opts: &VerifyOptions) -> Outcome {
    let other = verify_all(&VerifyOptions { jobs: 8, ..*opts }).map_err(|e| e.to_string())?;
    ensure(
        baseline.without_timing() == other.without_timing(),
        "jobs = 1 and jobs = 8 reports differ",
    )?;
    ensure(
        baseline.without_timing().to_json() == other.without_timing().to_json(),
        "serialized reports differ",
    )?;

    let mut partial = RunReport::from_json(&baseline.to_json()).map_err(|e| e.to_string())?;
    ensure(
        partial.without_timing() == baseline.without_timing(),
        "JSON round trip changed the report",
    )?;
    partial.cases.retain(|c| c.case.x % 2 == 0);
    let resumed = verify_all_resume(opts, &partial).map_err(|e| e.to_string())?;
    ensure(
        resumed.without_timing() == baseline.without_timing(),
        "resumed report differs from a fresh run",
    )?;

    let coarse = verify_all(&VerifyOptions {
        precision_start: 8,
        precision_cap: 8,
        ..*opts
    })
    .map_err(|e| e.to_string())?;
    ensure(coarse.verdict == Verdict::Incomplete, format!("8-bit cap gave {:?}", coarse.verdict))?;
    ensure(
        coarse.chains.iter().any(|c| c.status == ChainStatus::Undecidable),
        "8-bit cap decided every chain",
    )?;

    let chain = eliminate_chain(7, 132_480, &Precision::default()).map_err(|e| e.to_string())?;
    for x in [&chain.lambda_bound, &chain.lhs, &chain.rhs] {
        let e = Enclosure::from_interval(x);
        ensure(
            decimal(&e.lo) == x.lo().to_rational() && decimal(&e.hi) == x.hi().to_rational(),
            format!("decimal endpoints of {x} are not exact"),
        )?;
    }
    for c in &baseline.cases {
        let b: Rational = decimal(&c.required_lower_bound);
        ensure(b.is_positive(), format!("{}: bound {b} not positive", c.case))?;
    }
    Ok("jobs 1 and 8 agree, resume reproduces the run, 8-bit cap is INCOMPLETE, decimals exact".into())
}

fn main() -> ExitCode {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let opts = VerifyOptions {
        jobs: 1,
        ..VerifyOptions::default()
    };
    let started = Instant::now();
    let baseline = verify_all(&opts);
    let elapsed = started.elapsed();

    let results: Vec<(u32, &str, Outcome)> = vec![
        (1, "constants", criterion_1()),
        (2, "elimination chains", criterion_2()),
        (
            3,
            "finite verification",
            baseline
                .as_ref()
                .map_err(|e| e.to_string())
                .and_then(|r| criterion_3(r, elapsed)),
        ),
        (4, "continued fraction oracle", criterion_4(&mut rng)),
        (5, "exact identities", criterion_5(&mut rng)),
        (6, "brute-force search", criterion_6()),
        (7, "mutation", criterion_7(&opts)),
        (
            8,
            "determinism",
            baseline
                .as_ref()
                .map_err(|e| e.to_string())
                .and_then(|r| criterion_8(r, &opts)),
        ),
    ];

    let mut failed = 0;
    for (n, name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("criterion {n} ({name}): PASS - {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {n} ({name}): FAIL - {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

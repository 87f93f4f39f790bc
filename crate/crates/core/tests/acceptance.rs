//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so every line is printed; exits nonzero if any criterion fails.

use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use circarc::arcs::LrSequence;
use circarc::asymptotic::{alpha, alpha_branches, beta_star, curve_csv, p_max, sample_curve};
use circarc::extremal::{
    c_max, construct_a_max, d_of_a_max, di_lower_bound, e_max, e_min, extend_step, ExtremalParams,
};
use circarc::oracle::{certify, enumerate, grows_by_one_move, random_collection, EnumerationSpec, ExhaustiveTable};
use circarc::{build_summary, check_edge_formula, ArcCollection, Error};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn params(max: usize, min: usize, n: usize) -> ExtremalParams {
    ExtremalParams::new(max, min, n).unwrap()
}

/// Triples with `m < M`, `M + m <= n + 1`, for `n` in the range.
fn edge_regime(ns: std::ops::RangeInclusive<usize>) -> impl Iterator<Item = ExtremalParams> {
    ns.flat_map(|n| {
        (1..=n).flat_map(move |max| (0..max).filter(move |&min| max + min <= n + 1).map(move |min| params(max, min, n)))
    })
}

fn edge_formula() -> Outcome {
    let mut checked = 0;
    for n in [4, 5] {
        for c in enumerate(EnumerationSpec::new(n)).unwrap() {
            let r = check_edge_formula(&c);
            if !r.holds {
                return Err(format!("fails on {:?}: {r:?}", c.arcs()));
            }
            checked += 1;
        }
    }
    if checked != 1680 + 30240 {
        return Err(format!("enumerated {checked} arrangements, expected 31920"));
    }
    for seed in 0..10_000 {
        let c = random_collection(50, seed).unwrap();
        if !check_edge_formula(&c).holds {
            return Err(format!("fails on random n=50 seed {seed}"));
        }
    }
    Ok("31920 enumerated (n=4,5) + 10000 random (n=50)".into())
}

fn worked_example() -> Outcome {
    let c = ArcCollection::from_lr_fifo(&LrSequence::parse("LLRLRRLRLR").unwrap(), 1).unwrap();
    let profile = c.agreement_profile();
    let r = check_edge_formula(&c);
    let got = (r.c, profile.max, profile.min, r.d + r.e);
    if got == (19, 3, 1, 7) {
        Ok("C=19 M=3 m=1 d+e=7".into())
    } else {
        Err(format!("(C, M, m, d+e) = {got:?}"))
    }
}

fn certification() -> Outcome {
    let mut rows = 0;
    for n in 1..=5 {
        let table = ExhaustiveTable::build(n, 5).unwrap();
        for max in 1..=n {
            for min in 0..max {
                if !table.maxima.contains_key(&(max, min)) {
                    return Err(format!("feasible (M={max}, m={min}, n={n}) never enumerated"));
                }
            }
        }
        if table.maxima.keys().any(|&(max, min)| min >= max) {
            return Err(format!("enumeration at n={n} realized M <= m"));
        }
        for row in certify(&table).unwrap() {
            if !row.agree {
                return Err(format!("disagreement: {}", serde_json::to_string(&row).unwrap()));
            }
            rows += 1;
        }
    }
    Ok(format!("{rows} rows agree for n <= 5 (C_max, e_max, d_max, e_min forcing)"))
}

fn a_max_consistency() -> Outcome {
    let mut count = 0;
    for p in edge_regime(1..=12) {
        let s = build_summary(&construct_a_max(p).unwrap());
        let (e, d) = (e_max(p).unwrap().value, d_of_a_max(p).unwrap().value);
        if (s.e() as i64, s.d() as i64) != (e, d) {
            return Err(format!("{p:?}: built e={} d={}, formulas e={e} d={d}", s.e(), s.d()));
        }
        count += 1;
    }
    let c = construct_a_max(params(5, 2, 8)).unwrap();
    let s = build_summary(&c);
    let got = (s.d(), s.e(), c.running_count_sum());
    if got != (2, 27, 66) {
        return Err(format!("(8,5,2): (d, e, C) = {got:?}"));
    }
    Ok(format!("{count} triples n <= 12; (8,5,2) d=2 e=27 C=66"))
}

fn extension() -> Outcome {
    let mut steps = 0;
    for seed in 0..1000u64 {
        let n = 1 + (seed % 8) as usize;
        let mut current = random_collection(n, seed).unwrap();
        let p = ExtremalParams::of(&current);
        let target = c_max(p).unwrap() as usize;
        loop {
            match extend_step(&current) {
                Ok(next) => {
                    let (before, after) = (build_summary(&current), build_summary(&next));
                    let problem = if ExtremalParams::of(&next) != p {
                        Some("changed (M, m)")
                    } else if next.running_count_sum() != current.running_count_sum() + 2 {
                        Some("C did not grow by 2")
                    } else if after.e() < before.e() || after.d() < before.d() {
                        Some("e or d decreased")
                    } else if !grows_by_one_move(&current, &next) {
                        Some("not a single lengthening move")
                    } else {
                        None
                    };
                    if let Some(problem) = problem {
                        return Err(format!("seed {seed}: {problem} at {:?}", current.arcs()));
                    }
                    current = next;
                    steps += 1;
                }
                Err(Error::AlreadyMaximal) => break,
                Err(e) => return Err(format!("seed {seed}: {e}")),
            }
        }
        if current.running_count_sum() != target {
            return Err(format!("seed {seed}: stopped at C={} < C_max={target}", current.running_count_sum()));
        }
    }
    Ok(format!("1000 collections, {steps} moves"))
}

fn di_bound() -> Outcome {
    let mut enumerated = (0, 0);
    let mut example = None;
    for n in 1..=4 {
        for c in enumerate(EnumerationSpec::new(n)).unwrap() {
            enumerated.1 += 1;
            let (bound, d) = (di_lower_bound(&c), build_summary(&c).d() as i64);
            if bound > d {
                enumerated.0 += 1;
                example.get_or_insert_with(|| format!("{:?} bound {bound} > d {d}", c.arcs()));
            }
        }
    }
    let mut random = 0;
    for seed in 0..10_000u64 {
        let c = random_collection(1 + (seed % 30) as usize, seed).unwrap();
        if di_lower_bound(&c) > build_summary(&c).d() as i64 {
            random += 1;
        }
    }
    let mut unequal = (0, 0);
    let mut unequal_example = None;
    for p in edge_regime(1..=12) {
        let c = construct_a_max(p).unwrap();
        unequal.1 += 1;
        let (bound, d) = (di_lower_bound(&c), build_summary(&c).d() as i64);
        if bound != d {
            unequal.0 += 1;
            unequal_example.get_or_insert_with(|| format!("{p:?} bound {bound} != d {d}"));
        }
    }
    let detail = format!(
        "bound > d on {}/{} enumerated (n <= 4), {random}/10000 random (n <= 30); \
         A_max equality fails on {}/{} triples",
        enumerated.0, enumerated.1, unequal.0, unequal.1
    );
    if enumerated.0 == 0 && random == 0 && unequal.0 == 0 {
        Ok(detail)
    } else {
        let examples: Vec<String> = example.into_iter().chain(unequal_example).collect();
        Err(format!("{detail}; e.g. {}", examples.join("; ")))
    }
}

fn all_edges() -> Outcome {
    let mut count = 0;
    for n in 1..=12 {
        for min in 0..=n / 2 {
            let max = n + 1 - min;
            if max <= min || max > n {
                continue;
            }
            let e = build_summary(&construct_a_max(params(max, min, n)).unwrap()).e();
            if e != n * (n - 1) / 2 {
                return Err(format!("(M={max}, m={min}, n={n}): e = {e}"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} boundary triples are complete graphs"))
}

fn asymptotics() -> Outcome {
    let close = |a: f64, b: f64| (a - b).abs() <= 1e-12;
    for i in 0..=100 {
        let gamma = i as f64 / 100.0;
        let (low, high) = alpha_branches(0.5, gamma);
        if !close(low, high) {
            return Err(format!("branches differ at beta=1/2, gamma={gamma}: {low} vs {high}"));
        }
        let top = 1.0 / (1.0 + gamma);
        if !close(alpha(top, gamma).unwrap(), 1.0) {
            return Err(format!("alpha(1/(1+gamma), gamma) != 1 at gamma={gamma}"));
        }
    }
    for i in 0..1000 {
        let beta = i as f64 / 999.0;
        if !close(alpha(beta, 0.0).unwrap(), beta * (2.0 - beta)) {
            return Err(format!("alpha({beta}, 0) != beta(2 - beta)"));
        }
    }
    if alpha(0.25, 1.0).unwrap() != 0.5 {
        return Err("alpha(1/4, 1) != 1/2".into());
    }
    for gi in 1..=20 {
        let gamma = gi as f64 / 20.0;
        for bi in 0..=50 {
            let beta = bi as f64 / 50.0 / (1.0 + gamma);
            let back = beta_star(p_max(beta, gamma).unwrap(), gamma).unwrap();
            if !close(back, beta) {
                return Err(format!("round trip at beta={beta}, gamma={gamma} gave {back}"));
            }
        }
    }
    Ok("continuity, gamma=0 reduction, alpha(1/4,1)=1/2, endpoint, p_max/beta_star round trip".into())
}

fn convergence() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut points = 0;
    for n in [100usize, 1000, 10000] {
        for bi in 1..20usize {
            for gi in 0..=4usize {
                // beta = bi/20, gamma = gi/4, floors taken exactly in integers.
                let (beta, gamma) = (bi as f64 / 20.0, gi as f64 / 4.0);
                if bi * (4 + gi) > 19 * 4 {
                    continue;
                }
                let max = bi * n / 20;
                let min = (gi * bi * n / 80).min(max - 1);
                let e = e_min(params(max, min, n)).map_err(|e| format!("n={n} beta={beta} gamma={gamma}: {e}"))?;
                let ratio = 2.0 * e.value as f64 / (n * (n - 1)) as f64;
                let err = (ratio - alpha(beta, gamma).unwrap()).abs();
                worst = worst.max(err * n as f64);
                if err > 10.0 / n as f64 {
                    return Err(format!("n={n} beta={beta} gamma={gamma}: error {err:e} > 10/n"));
                }
                points += 1;
            }
        }
    }
    Ok(format!("{points} points within 10/n (worst error * n = {worst:.3})"))
}

fn golden_curves() -> Outcome {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let cases: [(&str, f64, Option<f64>); 6] = [
        ("0", 0.0, None),
        ("0.25", 0.25, None),
        ("0.5", 0.5, None),
        ("0.75", 0.75, None),
        ("1", 1.0, None),
        ("1_p_0.1", 1.0, Some(0.1)),
    ];
    for (tag, gamma, p) in cases {
        let expected =
            std::fs::read_to_string(dir.join(format!("curve_gamma_{tag}.csv"))).map_err(|e| e.to_string())?;
        let got = curve_csv(&sample_curve(gamma, p, 101).unwrap());
        let (exp_lines, got_lines): (Vec<&str>, Vec<&str>) = (expected.lines().collect(), got.lines().collect());
        if exp_lines.len() != got_lines.len() || exp_lines[0] != got_lines[0] {
            return Err(format!("gamma {tag}: shape or header differs"));
        }
        for (row, (a, b)) in exp_lines.iter().zip(&got_lines).enumerate().skip(1) {
            let (a, b): (Vec<&str>, Vec<&str>) = (a.split(',').collect(), b.split(',').collect());
            for col in 0..2 {
                let (x, y): (f64, f64) = (a[col].parse().unwrap(), b[col].parse().unwrap());
                if (x - y).abs() > 1e-9 {
                    return Err(format!("gamma {tag} row {row} col {col}: {x} vs {y}"));
                }
            }
            if a.get(2) != b.get(2) {
                return Err(format!("gamma {tag} row {row}: validity flag differs"));
            }
        }
    }
    Ok("6 curves x 101 rows match to 1e-9".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("edge formula on enumerated and random collections", edge_formula),
        ("five-arc worked example", worked_example),
        ("extremal certification sweep", certification),
        ("A_max self-consistency", a_max_consistency),
        ("arc extension property suite", extension),
        ("double-intersection lower bound", di_bound),
        ("all-edges boundary", all_edges),
        ("asymptotic formulas", asymptotics),
        ("discrete to continuous convergence", convergence),
        ("golden curves", golden_curves),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({secs:.1}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero when any criterion fails or overruns its time budget.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use cfmonoid::analysis::probe::ProbeStatus;
use cfmonoid::analysis::witness::SearchOutcome;
use cfmonoid::analysis::{
    dehn_area, dehn_profile, enumerate_normal_forms, growth_series, probe_all_pairs,
    probe_congruence, unit_witness_mn, unit_witness_search, AreaLimits, ProbeLimits, SearchLimits,
};
use cfmonoid::catalog::{build_dehn_example, build_mn, list_catalog, lookup, D};
use cfmonoid::completion::check_local_confluence;
use cfmonoid::{check_termination, Element, Letter};

use common::{all_words, factor_avoiding_counts, log_log_slope, ClosureOracle};

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn complete_mn() -> Outcome {
    for n in 1..=5 {
        let e = build_mn(n).map_err(|e| e.to_string())?;
        let s = e.system();
        let r = check_local_confluence(&s);
        if !r.terminating || r.critical_pair_count != 0 || !r.locally_confluent {
            return Err(format!(
                "M{n}: terminating {}, critical pairs {}",
                r.terminating, r.critical_pair_count
            ));
        }
    }
    Ok("M1..M5 terminating with 0 critical pairs".into())
}

fn complete_dehn_example() -> Outcome {
    let e = build_dehn_example();
    let s = e.system();
    let r = check_local_confluence(&s);
    let precedence: String = e.precedence().into_iter().collect();
    let ok = s.rules().len() == 7
        && precedence == "bacd"
        && r.terminating
        && check_termination(&s, &e.presentation.alphabet.shortlex())
        && r.critical_pair_count == 0;
    let detail = format!(
        "{} rules, precedence {precedence}, terminating {}, critical pairs {}",
        s.rules().len(),
        r.terminating,
        r.critical_pair_count
    );
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn mn_witnesses() -> Outcome {
    let mut checked = 0;
    let mut worst = 0f64;
    for n in 1..=3 {
        let s = build_mn(n).map_err(|e| e.to_string())?.system();
        for w in enumerate_normal_forms(&s, 7) {
            let p = unit_witness_mn(n, &w).map_err(|e| format!("M{n} {w:?}: {e}"))?;
            let full: Vec<Letter> = [&p.x[..], &w[..], &p.y[..]].concat();
            if s.normalize(&full) != Element::one() {
                let a = s.alphabet();
                return Err(format!(
                    "M{n}: x = {}, y = {} fails for {}",
                    a.render(&p.x),
                    a.render(&p.y),
                    a.render(&w)
                ));
            }
            if !w.is_empty() {
                worst = worst.max(p.size() as f64 / w.len() as f64);
            }
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} normal forms certified, max |x|+|y| / |w| = {worst:.2}"
    ))
}

fn dehn_example_witnesses() -> Outcome {
    let s = build_dehn_example().system();
    let limits = SearchLimits {
        max_len: 12,
        max_nodes: 1_000_000,
    };
    let mut largest = 0;
    let forms = enumerate_normal_forms(&s, 5);
    for w in &forms {
        match unit_witness_search(&s, w, limits).map_err(|e| e.to_string())? {
            SearchOutcome::Found(p) => {
                let full: Vec<Letter> = [&p.x[..], &w[..], &p.y[..]].concat();
                if !s.normalize(&full).is_one() {
                    return Err(format!("invalid witness for {:?}", w));
                }
                largest = largest.max(p.size());
            }
            SearchOutcome::Undetermined { explored } => {
                return Err(format!(
                    "undetermined for {} after {explored} states",
                    s.alphabet().render(w)
                ))
            }
        }
    }
    Ok(format!(
        "{} normal forms, 0 undetermined, largest witness {largest}",
        forms.len()
    ))
}

fn congruence_collapse() -> Outcome {
    let mut parts = Vec::new();
    for (name, seed_len) in [("M1", 3), ("M2", 3), ("dehn-example", 2)] {
        let s = lookup(name).map_err(|e| e.to_string())?.system();
        let summary = probe_all_pairs(&s, seed_len, 9, ProbeLimits::default(), jobs())
            .map_err(|e| e.to_string())?;
        let mut rescued = 0;
        for r in summary
            .records
            .iter()
            .filter(|r| r.status == ProbeStatus::Undetermined)
        {
            let a = s.alphabet();
            let u = a.parse_element(&r.seed_u).map_err(|e| e.to_string())?;
            let v = a.parse_element(&r.seed_v).map_err(|e| e.to_string())?;
            let again = probe_congruence(&s, (&u, &v), 11, ProbeLimits::default())
                .map_err(|e| e.to_string())?;
            if !again.is_collapsed() {
                return Err(format!(
                    "{name}: {} ~ {} undetermined at radius 11",
                    r.seed_u, r.seed_v
                ));
            }
            rescued += 1;
        }
        parts.push(format!(
            "{name}: {}/{} collapsed at L=9{}, longest trace {}",
            summary.collapsed,
            summary.pairs,
            if rescued > 0 {
                format!(" (+{rescued} at L=11)")
            } else {
                String::new()
            },
            summary.max_trace_len
        ));
    }
    Ok(parts.join("; "))
}

fn linear_dehn() -> Outcome {
    let mut parts = Vec::new();
    for n in 1..=2 {
        let e = build_mn(n).map_err(|e| e.to_string())?;
        let s = e.system();
        let prof = dehn_profile(&e.presentation, &s, 8, 4, 2_000_000, jobs())
            .map_err(|e| e.to_string())?;
        if !prof.limited.is_empty() {
            return Err(format!(
                "M{n}: {} pairs hit the search limits",
                prof.limited.len()
            ));
        }
        if let Some(r) = prof.rows.iter().find(|r| r.d > r.n) {
            return Err(format!("M{n}: D({}) = {} > {}", r.n, r.d, r.n));
        }
        parts.push(format!("M{n}: D(1..8) = {:?}", prof.values()));
    }
    Ok(parts.join("; "))
}

fn quadratic_dehn() -> Outcome {
    let e = build_dehn_example();
    let s = e.system();
    let mut areas = Vec::new();
    for k in 1..=5 {
        let u: Vec<Letter> = [vec![0; k], vec![1; k]].concat();
        let v: Vec<Letter> = [vec![1; k], vec![0; k]].concat();
        let limits = AreaLimits {
            max_len: 2 * k + 4,
            max_nodes: 5_000_000,
        };
        match dehn_area(&e.presentation, &s, &u, &v, limits).steps() {
            Some(a) if a == k * k => areas.push(a),
            other => {
                return Err(format!(
                    "area(a^{k}b^{k}, b^{k}a^{k}) = {other:?}, expected {}",
                    k * k
                ))
            }
        }
    }
    let prof =
        dehn_profile(&e.presentation, &s, 12, 4, 2_000_000, jobs()).map_err(|e| e.to_string())?;
    if !prof.limited.is_empty() {
        return Err(format!(
            "{} pairs hit the search limits",
            prof.limited.len()
        ));
    }
    let points: Vec<(f64, f64)> = prof
        .rows
        .iter()
        .filter(|r| r.n >= 2)
        .map(|r| (r.n as f64, r.d as f64))
        .collect();
    let alpha = log_log_slope(&points);
    let detail = format!(
        "areas {areas:?}, D(1..12) = {:?}, alpha = {alpha:.3}",
        prof.values()
    );
    if (1.7..=2.3).contains(&alpha) {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn oracle_equivalence() -> Outcome {
    let mut pairs = 0usize;
    for name in list_catalog() {
        let e = lookup(&name).map_err(|e| e.to_string())?;
        let s = e.system();
        let mut oracle = ClosureOracle::new(&e.presentation, 10);
        let words = all_words(4, 4);
        let values: Vec<Element> = words.iter().map(|w| s.normalize(w)).collect();
        let classes: Vec<usize> = words.iter().map(|w| oracle.class(w)).collect();
        for i in 0..words.len() {
            for j in i + 1..words.len() {
                pairs += 1;
                if (values[i] == values[j]) != (classes[i] == classes[j]) {
                    let a = s.alphabet();
                    return Err(format!(
                        "{name}: {} vs {} disagree",
                        a.render(&words[i]),
                        a.render(&words[j])
                    ));
                }
            }
        }
    }
    Ok(format!("{pairs} pairs, 0 mismatches"))
}

fn growth_oracle() -> Outcome {
    let mut parts = Vec::new();
    for name in ["M1", "M2", "M3", "dehn-example"] {
        let s = lookup(name).map_err(|e| e.to_string())?.system();
        let lhs: Vec<Vec<Letter>> = s.rules().iter().map(|r| r.lhs.0.clone()).collect();
        let got = growth_series(&s, 10).counts;
        let expected = factor_avoiding_counts(4, &lhs, 10);
        if got != expected {
            return Err(format!("{name}: {got:?} vs oracle {expected:?}"));
        }
        parts.push(format!("{name} total {}", got.iter().sum::<u128>()));
    }
    Ok(parts.join(", "))
}

fn d_shape() -> Outcome {
    let mut checked = 0usize;
    for n in 1..=3 {
        let s = build_mn(n).map_err(|e| e.to_string())?.system();
        for w in enumerate_normal_forms(&s, 10) {
            if let Some(last) = w.iter().rposition(|&l| l == D) {
                if w[last + 1..]
                    .iter()
                    .any(|&l| l != cfmonoid::catalog::A && l != D)
                {
                    return Err(format!("M{n}: {}", s.alphabet().render(&w)));
                }
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} normal forms, 0 violations"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 completeness of M_1..M_5", 1, complete_mn),
        (
            "2 completeness of the commuting example",
            1,
            complete_dehn_example,
        ),
        (
            "3 constructive unit witnesses in M_1..M_3",
            30,
            mn_witnesses,
        ),
        (
            "4 searched unit witnesses in the commuting example",
            60,
            dehn_example_witnesses,
        ),
        (
            "5 congruence collapse of all short pairs",
            600,
            congruence_collapse,
        ),
        ("6 linear Dehn profile of M_1 and M_2", 300, linear_dehn),
        (
            "7 quadratic Dehn profile of the commuting example",
            600,
            quadratic_dehn,
        ),
        (
            "8 equality agrees with relation closure",
            300,
            oracle_equivalence,
        ),
        ("9 growth agrees with factor avoidance", 10, growth_oracle),
        ("10 letters after the last d", 10, d_shape),
    ];
    let mut failures = 0;
    for (title, budget, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(budget);
        let (mark, detail) = match &outcome {
            Ok(d) if !over => ("PASS", d.clone()),
            Ok(d) => ("FAIL", format!("{d}; over the {budget} s budget")),
            Err(d) => ("FAIL", d.clone()),
        };
        if mark == "FAIL" {
            failures += 1;
        }
        println!(
            "{mark} criterion {title}: {detail} [{:.2} s]",
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {} passed, {failures} failed", 10 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

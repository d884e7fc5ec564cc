use std::io::Write;

use cfmonoid::analysis::dehn::Vertex;
use cfmonoid::analysis::probe::ProbeStatus;
use cfmonoid::analysis::witness::SearchOutcome;
use cfmonoid::analysis::{
    dehn_area, dehn_profile, enumerate_normal_forms, growth_series, probe_all_pairs,
    probe_congruence, unit_witness_search, verify_paper_identities, AreaLimits, AreaResult,
    MnWitness, ProbeLimits, ProbeResult, SearchLimits,
};
use cfmonoid::catalog::list_catalog;
use cfmonoid::completion::{
    check_local_confluence, knuth_bendix, CompletionLimits, CompletionOutcome,
};
use cfmonoid::{Element, RewritingSystem, Strategy};
use serde::Serialize;

use crate::input::{catalog_entry, load, CliError, CliResult, Loaded};
use crate::report::*;
use crate::{CatalogAction, Cli, Command, Format, Status, StrategyArg};

pub fn run(cli: &Cli, out: &mut Vec<u8>) -> CliResult<Status> {
    match &cli.command {
        Command::Catalog { action } => return catalog(cli.format, action, out),
        Command::VerifyPaper { n } => return verify_paper(cli.format, *n, out),
        _ => {}
    }
    let loaded = load(&cli.source)?;
    match &cli.command {
        Command::Normalize { word, strategy } => normalize(cli, &loaded, word, *strategy, out),
        Command::Equal { u, v } => equal(cli.format, &loaded, u, v, out),
        Command::Confluence => confluence(cli.format, &loaded, out),
        Command::Complete {
            max_rules,
            max_word_len,
            max_steps,
        } => complete(
            cli.format,
            &loaded,
            CompletionLimits {
                max_rules: *max_rules,
                max_word_len: *max_word_len,
                max_steps: *max_steps,
            },
            out,
        ),
        Command::Enumerate { max_len } => enumerate(cli.format, &loaded, *max_len, out),
        Command::Growth { max_len } => growth(cli.format, &loaded, *max_len, out),
        Command::Witness {
            word,
            max_len,
            max_nodes,
        } => witness(
            cli.format,
            &loaded,
            word,
            SearchLimits {
                max_len: *max_len,
                max_nodes: *max_nodes,
            },
            out,
        ),
        Command::Probe {
            u,
            v,
            radius,
            trace,
        } => probe(cli.format, &loaded, u, v, *radius, *trace, out),
        Command::ProbeAll { seed_len, radius } => {
            probe_all(cli.format, &loaded, *seed_len, *radius, cli.jobs, out)
        }
        Command::Dehn {
            u,
            v,
            max_len,
            slack,
            max_nodes,
        } => dehn(cli.format, &loaded, u, v, *max_len, *slack, *max_nodes, out),
        Command::DehnProfile {
            n_max,
            slack,
            max_nodes,
        } => profile(
            cli.format, &loaded, *n_max, *slack, *max_nodes, cli.jobs, out,
        ),
        Command::Catalog { .. } | Command::VerifyPaper { .. } => unreachable!("handled above"),
    }
}

fn json<T: Serialize>(out: &mut Vec<u8>, value: &T) -> CliResult<()> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(|e| CliError::Input(e.to_string()))?;
    out.push(b'\n');
    Ok(())
}

fn csv_rows<S: AsRef<str>>(out: &mut Vec<u8>, header: &[&str], rows: &[Vec<S>]) -> CliResult<()> {
    let mut w = csv::Writer::from_writer(out);
    let csv_err = |e: csv::Error| CliError::Input(e.to_string());
    w.write_record(header).map_err(csv_err)?;
    for row in rows {
        w.write_record(row.iter().map(|c| c.as_ref()))
            .map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

fn no_csv(command: &str) -> CliError {
    CliError::Input(format!("csv output is not available for {command}"))
}

fn normalize(
    cli: &Cli,
    loaded: &Loaded,
    word: &str,
    strategy: StrategyArg,
    out: &mut Vec<u8>,
) -> CliResult<Status> {
    let s = loaded.complete()?;
    let w = loaded.word(word)?;
    let a = s.alphabet();
    let (nf, steps) = match strategy {
        StrategyArg::Leftmost => s.normalize_counted(&w),
        StrategyArg::Rightmost | StrategyArg::Random => {
            let strategy = if strategy == StrategyArg::Rightmost {
                Strategy::Rightmost
            } else {
                Strategy::Random(cli.seed)
            };
            (s.normalize_with(&w, strategy), s.normalize_counted(&w).1)
        }
    };
    let report = NormalizeReport {
        input: a.render(&w),
        normal_form: a.render_element(&nf),
        steps,
    };
    match cli.format {
        Format::Text => writeln!(out, "{}", report.normal_form)?,
        Format::Json => json(out, &report)?,
        Format::Csv => csv_rows(
            out,
            &["input", "normal_form", "steps"],
            &[vec![report.input, report.normal_form, steps.to_string()]],
        )?,
    }
    Ok(Status::Holds)
}

fn equal(
    format: Format,
    loaded: &Loaded,
    u: &str,
    v: &str,
    out: &mut Vec<u8>,
) -> CliResult<Status> {
    let s = loaded.complete()?;
    let a = s.alphabet();
    let (nu, nv) = (s.normalize(&loaded.word(u)?), s.normalize(&loaded.word(v)?));
    let report = EqualReport {
        u: u.to_string(),
        v: v.to_string(),
        normal_forms: [a.render_element(&nu), a.render_element(&nv)],
        equal: nu == nv,
    };
    match format {
        Format::Text => writeln!(out, "{}", report.equal)?,
        Format::Json => json(out, &report)?,
        Format::Csv => csv_rows(
            out,
            &["u", "v", "equal"],
            &[vec![
                report.u.clone(),
                report.v.clone(),
                report.equal.to_string(),
            ]],
        )?,
    }
    Ok(if report.equal {
        Status::Holds
    } else {
        Status::Refuted
    })
}

fn confluence(format: Format, loaded: &Loaded, out: &mut Vec<u8>) -> CliResult<Status> {
    let s = loaded.oriented()?;
    let report = check_local_confluence(&s);
    let summary = report.summary(&s);
    match format {
        Format::Text => {
            writeln!(
                out,
                "locally confluent: {}, terminating: {}, critical pairs: {}",
                summary.locally_confluent, summary.terminating, summary.critical_pair_count
            )?;
            for u in &summary.unresolved {
                writeln!(
                    out,
                    "unresolved: rules {} and {} on {}: {} vs {}",
                    u.rule1, u.rule2, u.overlap_word, u.left, u.right
                )?;
            }
        }
        Format::Json => json(out, &summary)?,
        Format::Csv => return Err(no_csv("confluence")),
    }
    Ok(if report.is_complete() {
        Status::Holds
    } else {
        Status::Refuted
    })
}

fn rule_views(s: &RewritingSystem) -> Vec<RuleView> {
    let a = s.alphabet();
    s.rules()
        .iter()
        .map(|r| RuleView {
            lhs: a.render(&r.lhs),
            rhs: a.render_element(&r.rhs),
        })
        .collect()
}

fn complete(
    format: Format,
    loaded: &Loaded,
    limits: CompletionLimits,
    out: &mut Vec<u8>,
) -> CliResult<Status> {
    let p = &loaded.presentation;
    let outcome = knuth_bendix(p, &p.alphabet.shortlex(), limits)?;
    let (steps, unresolved) = match &outcome {
        CompletionOutcome::Completed { steps, .. } => (*steps, 0),
        CompletionOutcome::ResourceLimit {
            steps, unresolved, ..
        } => (*steps, *unresolved),
    };
    let report = CompletionReport {
        completed: outcome.is_completed(),
        steps,
        unresolved,
        rules: rule_views(outcome.system()),
    };
    match format {
        Format::Text => {
            writeln!(
                out,
                "completed: {}, rules: {}, steps: {}",
                report.completed,
                report.rules.len(),
                steps
            )?;
            if !report.completed {
                writeln!(out, "pending equations: {unresolved}")?;
            }
            for r in &report.rules {
                writeln!(out, "{} -> {}", r.lhs, r.rhs)?;
            }
        }
        Format::Json => json(out, &report)?,
        Format::Csv => csv_rows(
            out,
            &["lhs", "rhs"],
            &report
                .rules
                .iter()
                .map(|r| vec![r.lhs.as_str(), r.rhs.as_str()])
                .collect::<Vec<_>>(),
        )?,
    }
    Ok(if report.completed {
        Status::Holds
    } else {
        Status::Undetermined
    })
}

fn enumerate(
    format: Format,
    loaded: &Loaded,
    max_len: usize,
    out: &mut Vec<u8>,
) -> CliResult<Status> {
    let s = loaded.complete()?;
    let a = s.alphabet();
    let words: Vec<String> = enumerate_normal_forms(&s, max_len)
        .iter()
        .map(|w| a.render(w))
        .collect();
    match format {
        Format::Text => {
            for w in &words {
                writeln!(out, "{w}")?;
            }
        }
        Format::Json => json(out, &EnumerationReport { max_len, words })?,
        Format::Csv => csv_rows(
            out,
            &["word"],
            &words.iter().map(|w| vec![w.as_str()]).collect::<Vec<_>>(),
        )?,
    }
    Ok(Status::Holds)
}

fn growth(format: Format, loaded: &Loaded, max_len: usize, out: &mut Vec<u8>) -> CliResult<Status> {
    let s = loaded.complete()?;
    let series = growth_series(&s, max_len);
    match format {
        Format::Text => {
            for (len, count) in series.counts.iter().enumerate() {
                writeln!(out, "{len} {count}")?;
            }
        }
        Format::Json => json(out, &series)?,
        Format::Csv => csv_rows(
            out,
            &["length", "count"],
            &series
                .counts
                .iter()
                .enumerate()
                .map(|(l, c)| vec![l.to_string(), c.to_string()])
                .collect::<Vec<_>>(),
        )?,
    }
    Ok(Status::Holds)
}

fn witness(
    format: Format,
    loaded: &Loaded,
    word: &str,
    limits: SearchLimits,
    out: &mut Vec<u8>,
) -> CliResult<Status> {
    let s = loaded.complete()?;
    let a = s.alphabet();
    let w = loaded.word(word)?;
    let nf = match s.normalize(&w) {
        Element::Zero => {
            return Err(CliError::Input(format!(
                "{word} is zero; only nonzero elements have unit witnesses"
            )))
        }
        Element::Word(nf) => nf,
    };
    let mut report = WitnessReport {
        word: a.render(&w),
        normal_form: a.render(&nf),
        method: WitnessMethod::Search,
        found: false,
        x: None,
        y: None,
        explored: None,
    };
    let pair = match loaded.mn {
        Some(n) => {
            report.method = WitnessMethod::Constructive;
            Some(MnWitness::new(n)?.witness(&nf)?)
        }
        None => match unit_witness_search(&s, &nf, limits)? {
            SearchOutcome::Found(p) => Some(p),
            SearchOutcome::Undetermined { explored } => {
                report.explored = Some(explored);
                None
            }
        },
    };
    if let Some(p) = &pair {
        report.found = true;
        report.x = Some(a.render(&p.x));
        report.y = Some(a.render(&p.y));
    }
    match format {
        Format::Text => match (&report.x, &report.y) {
            (Some(x), Some(y)) => writeln!(out, "x = {x}\ny = {y}")?,
            _ => writeln!(
                out,
                "undetermined: no witness within the limits ({} states)",
                report.explored.unwrap_or(0)
            )?,
        },
        Format::Json => json(out, &report)?,
        Format::Csv => return Err(no_csv("witness")),
    }
    Ok(if report.found {
        Status::Holds
    } else {
        Status::Undetermined
    })
}

fn seed_element(loaded: &Loaded, s: &RewritingSystem, text: &str) -> CliResult<Element> {
    Ok(match loaded.element(text)? {
        Element::Zero => Element::Zero,
        Element::Word(w) => s.normalize(&w),
    })
}

fn probe(
    format: Format,
    loaded: &Loaded,
    u: &str,
    v: &str,
    radius: usize,
    with_trace: bool,
    out: &mut Vec<u8>,
) -> CliResult<Status> {
    let s = loaded.complete()?;
    let a = s.alphabet();
    let eu = seed_element(loaded, &s, u)?;
    let ev = seed_element(loaded, &s, v)?;
    let result = probe_congruence(&s, (&eu, &ev), radius, ProbeLimits::default())?;
    let mut report = ProbeReport {
        u: a.render_element(&eu),
        v: a.render_element(&ev),
        radius,
        status: ProbeStatusView::Undetermined,
        truncated: result.truncated(),
        trace_len: None,
        class_count: None,
        trace: None,
    };
    match &result {
        ProbeResult::Collapsed { trace, .. } => {
            report.status = ProbeStatusView::Collapsed;
            report.trace_len = Some(trace.len());
            if with_trace {
                report.trace = Some(trace.view(&s));
            }
        }
        ProbeResult::Undetermined { class_count, .. } => {
            report.class_count = Some(*class_count);
        }
    }
    match format {
        Format::Text => {
            match &result {
                ProbeResult::Collapsed { trace, truncated } => writeln!(
                    out,
                    "collapsed: 1 ~ 0 after {} merges (truncated products: {truncated})",
                    trace.len()
                )?,
                ProbeResult::Undetermined {
                    class_count,
                    truncated,
                } => writeln!(
                    out,
                    "undetermined: {class_count} classes at radius {radius} (truncated products: {truncated})"
                )?,
            }
            if let Some(trace) = &report.trace {
                for (i, step) in trace.steps.iter().enumerate() {
                    match (&step.parent, &step.side, &step.generator) {
                        (Some(p), Some(side), Some(g)) => writeln!(
                            out,
                            "{i}: {} ~ {}  ({:?} {g} on step {p})",
                            step.left, step.right, side
                        )?,
                        _ => writeln!(out, "{i}: {} ~ {}  (seed)", step.left, step.right)?,
                    }
                }
                let chain: Vec<String> = trace.chain.iter().map(|c| c.to_string()).collect();
                writeln!(out, "chain: {}", chain.join(" "))?;
            }
        }
        Format::Json => json(out, &report)?,
        Format::Csv => return Err(no_csv("probe")),
    }
    Ok(if result.is_collapsed() {
        Status::Holds
    } else {
        Status::Undetermined
    })
}

fn probe_all(
    format: Format,
    loaded: &Loaded,
    seed_len: usize,
    radius: usize,
    jobs: usize,
    out: &mut Vec<u8>,
) -> CliResult<Status> {
    let s = loaded.complete()?;
    let summary = probe_all_pairs(&s, seed_len, radius, ProbeLimits::default(), jobs)?;
    match format {
        Format::Text => {
            writeln!(
                out,
                "pairs: {}, collapsed: {}, undetermined: {}, longest trace: {}",
                summary.pairs, summary.collapsed, summary.undetermined, summary.max_trace_len
            )?;
            for r in summary
                .records
                .iter()
                .filter(|r| r.status == ProbeStatus::Undetermined)
            {
                writeln!(
                    out,
                    "undetermined: {} ~ {} (truncated products: {})",
                    r.seed_u, r.seed_v, r.truncated
                )?;
            }
        }
        Format::Json => json(out, &summary)?,
        Format::Csv => csv_rows(
            out,
            &["seed_u", "seed_v", "status", "trace_len", "truncated"],
            &summary
                .records
                .iter()
                .map(|r| {
                    vec![
                        r.seed_u.clone(),
                        r.seed_v.clone(),
                        match r.status {
                            ProbeStatus::Collapsed => "collapsed".to_string(),
                            ProbeStatus::Undetermined => "undetermined".to_string(),
                        },
                        r.trace_len.to_string(),
                        r.truncated.to_string(),
                    ]
                })
                .collect::<Vec<_>>(),
        )?,
    }
    Ok(if summary.all_collapsed() {
        Status::Holds
    } else {
        Status::Undetermined
    })
}

#[allow(clippy::too_many_arguments)]
fn dehn(
    format: Format,
    loaded: &Loaded,
    u: &str,
    v: &str,
    max_len: Option<usize>,
    slack: usize,
    max_nodes: usize,
    out: &mut Vec<u8>,
) -> CliResult<Status> {
    let s = loaded.complete()?;
    let a = s.alphabet();
    let (wu, wv) = (loaded.word(u)?, loaded.word(v)?);
    let max_len = max_len.unwrap_or(wu.len() + wv.len() + slack);
    let result = dehn_area(
        &loaded.presentation,
        &s,
        &wu,
        &wv,
        AreaLimits { max_len, max_nodes },
    );
    let mut report = AreaReport {
        u: a.render(&wu),
        v: a.render(&wv),
        max_len,
        status: AreaStatus::Area,
        area: None,
        derivation: Vec::new(),
        explored: None,
    };
    let status = match &result {
        AreaResult::Area { steps, derivation } => {
            report.area = Some(*steps);
            report.derivation = derivation
                .iter()
                .map(|x| match x {
                    Vertex::Word(w) => a.render(w),
                    Vertex::Zero => "0".to_string(),
                })
                .collect();
            Status::Holds
        }
        AreaResult::NotEqual => {
            report.status = AreaStatus::NotEqual;
            Status::Refuted
        }
        AreaResult::ResourceLimit { explored } => {
            report.status = AreaStatus::ResourceLimit;
            report.explored = Some(*explored);
            Status::Undetermined
        }
    };
    match format {
        Format::Text => match report.area {
            Some(k) => {
                writeln!(out, "area: {k}")?;
                writeln!(out, "{}", report.derivation.join(" -> "))?;
            }
            None if report.status == AreaStatus::NotEqual => writeln!(out, "not equal")?,
            None => writeln!(
                out,
                "undetermined: limits reached after {} words",
                report.explored.unwrap_or(0)
            )?,
        },
        Format::Json => json(out, &report)?,
        Format::Csv => return Err(no_csv("dehn")),
    }
    Ok(status)
}

fn profile(
    format: Format,
    loaded: &Loaded,
    n_max: usize,
    slack: usize,
    max_nodes: usize,
    jobs: usize,
    out: &mut Vec<u8>,
) -> CliResult<Status> {
    let s = loaded.complete()?;
    let prof = dehn_profile(&loaded.presentation, &s, n_max, slack, max_nodes, jobs)?;
    match format {
        Format::Text => {
            writeln!(out, "n D limited_pairs witness")?;
            for r in &prof.rows {
                let w = r
                    .witness
                    .as_ref()
                    .map(|(u, v)| format!("{u} = {v}"))
                    .unwrap_or_else(|| "-".into());
                writeln!(out, "{} {} {} {w}", r.n, r.d, r.limited_pairs)?;
            }
            for l in &prof.limited {
                writeln!(
                    out,
                    "limited: n = {}: {} = {} (bound {})",
                    l.n, l.u, l.v, l.upper_bound
                )?;
            }
        }
        Format::Json => json(out, &prof)?,
        Format::Csv => csv_rows(
            out,
            &["n", "D", "limited_pairs"],
            &prof
                .rows
                .iter()
                .map(|r| {
                    vec![
                        r.n.to_string(),
                        r.d.to_string(),
                        r.limited_pairs.to_string(),
                    ]
                })
                .collect::<Vec<_>>(),
        )?,
    }
    Ok(if prof.limited.is_empty() {
        Status::Holds
    } else {
        Status::Undetermined
    })
}

fn verify_paper(format: Format, n: usize, out: &mut Vec<u8>) -> CliResult<Status> {
    let checks = verify_paper_identities(n)?;
    let passed = checks.iter().filter(|c| c.holds).count();
    let report = IdentityReport {
        n,
        passed,
        failed: checks.len() - passed,
        checks,
    };
    match format {
        Format::Text => {
            for c in &report.checks {
                let mark = if c.holds { "PASS" } else { "FAIL" };
                writeln!(out, "{mark} {} (got {})", c.identity, c.computed)?;
            }
            writeln!(out, "{} passed, {} failed", report.passed, report.failed)?;
        }
        Format::Json => json(out, &report)?,
        Format::Csv => csv_rows(
            out,
            &["identity", "computed", "holds"],
            &report
                .checks
                .iter()
                .map(|c| vec![c.identity.clone(), c.computed.clone(), c.holds.to_string()])
                .collect::<Vec<_>>(),
        )?,
    }
    Ok(if report.failed == 0 {
        Status::Holds
    } else {
        Status::Refuted
    })
}

fn catalog(format: Format, action: &CatalogAction, out: &mut Vec<u8>) -> CliResult<Status> {
    match action {
        CatalogAction::List => {
            let entries = list_catalog()
                .into_iter()
                .map(|name| {
                    let e = catalog_entry(&name)?;
                    Ok(CatalogListingEntry {
                        name,
                        provenance: e.provenance,
                    })
                })
                .collect::<CliResult<Vec<_>>>()?;
            match format {
                Format::Text => {
                    for e in &entries {
                        writeln!(out, "{}", e.name)?;
                    }
                }
                Format::Json => json(out, &CatalogListing { entries })?,
                Format::Csv => csv_rows(
                    out,
                    &["name", "provenance"],
                    &entries
                        .iter()
                        .map(|e| vec![e.name.as_str(), e.provenance.as_str()])
                        .collect::<Vec<_>>(),
                )?,
            }
        }
        CatalogAction::Dump { name } => {
            let e = catalog_entry(name)?;
            let text = e.presentation.to_text();
            match format {
                Format::Text => out.extend_from_slice(text.as_bytes()),
                Format::Json => json(
                    out,
                    &CatalogDump {
                        name: e.name,
                        presentation: text,
                    },
                )?,
                Format::Csv => return Err(no_csv("catalog dump")),
            }
        }
    }
    Ok(Status::Holds)
}

use std::collections::BTreeSet;

use wcds_core::binomial::choose;
use wcds_core::extension::{self, ConstructionCase};
use wcds_core::{formulas, oracle, CountTable, Family, Graph, OracleCap, RootedGraph};

use super::{FindingKind, Limits, ReportBuilder, Suite, VerificationReport};
use crate::parallel;
use crate::random;
use crate::tables::{CYCLE_TABLE, PATH_TABLE};
use crate::{Error, Result};

const CONSTRUCTIVE_MAX_ORDER: usize = 12;
const EXTENSION_RANDOM_BASES: usize = 10;

fn fam(f: Family, n: usize) -> Graph {
    Graph::family(f, n).expect("family parameter in range")
}

fn label(f: Family, n: usize) -> String {
    match f {
        Family::Star => format!("K_{{1,{n}}}"),
        _ => format!("{}_{n}", f.symbol()),
    }
}

fn table(g: &Graph, cap: OracleCap) -> Result<CountTable> {
    Ok(parallel::count_table(g, cap)?)
}

/// Path counts against the embedded table (`n <= 10`), the closed form and
/// the recurrence, with the oracle as referee.
pub fn verify_table1(max_n: usize, cap: OracleCap) -> Result<VerificationReport> {
    let mut b = ReportBuilder::new("table1");
    for n in 1..=max_n {
        let subject = label(Family::Path, n);
        let truth = table(&fam(Family::Path, n), cap)?;
        let rec = formulas::count_path_recurrence(n)?;
        for j in 1..=n {
            let cell = format!("j={j}");
            if let Some(row) = PATH_TABLE.get(n - 1) {
                b.check(&subject, &cell, "table", row[j - 1], truth.get(j));
            }
            b.check(
                &subject,
                &cell,
                "closed_form",
                formulas::count_path_closed(n, j)?,
                truth.get(j),
            );
            b.check(&subject, &cell, "recurrence", rec.get(j), truth.get(j));
        }
        b.row(format!("d_w(P_{n}, j)"), &truth);
    }
    Ok(b.finish())
}

/// Cycle counts against the embedded table (`n <= 14`), the top-of-table
/// closed forms, and the one-step identity for `d_w(C_n, n-3)`.
pub fn verify_table2(max_n: usize, cap: OracleCap) -> Result<VerificationReport> {
    let mut b = ReportBuilder::new("table2");
    let mut tables: Vec<CountTable> = Vec::new();
    for n in 1..=max_n {
        let subject = label(Family::Cycle, n);
        let truth = table(&fam(Family::Cycle, n), cap)?;
        if let Some(row) = CYCLE_TABLE.get(n - 1) {
            for j in 1..=n {
                b.check(
                    &subject,
                    format!("j={j}"),
                    "table",
                    row[j - 1],
                    truth.get(j),
                );
            }
        }
        let top_from = if n >= 6 { n - 3 } else { n.saturating_sub(2) };
        if n >= 4 {
            for i in top_from..=n {
                let claimed = formulas::count_cycle_top(n, i)?;
                b.check(
                    &subject,
                    format!("j={i}"),
                    "cycle_top",
                    claimed,
                    truth.get(i),
                );
            }
        }
        if n >= 7 {
            let prev = &tables[n - 2];
            let claimed = (prev.get(n - 4) + prev.get(n - 3))
                .checked_sub(1)
                .ok_or(wcds_core::Error::Overflow)?;
            b.check(
                &subject,
                format!("j={}", n - 3),
                "cycle_step_identity",
                claimed,
                truth.get(n - 3),
            );
        }
        b.row(format!("d_w(C_{n}, j)"), &truth);
        tables.push(truth);
    }
    Ok(b.finish())
}

/// Family pairs `{P, C, K}` of order `1..=max_order`, then `instances`
/// seeded random connected pairs.
pub fn join_instances(limits: &Limits) -> Vec<(String, Graph, String, Graph)> {
    let max_order = limits.max_order_or(5);
    let mut parts = Vec::new();
    for f in [Family::Path, Family::Cycle, Family::Complete] {
        for n in 1..=max_order {
            parts.push((label(f, n), fam(f, n)));
        }
    }
    let mut out = Vec::new();
    for (gl, g) in &parts {
        for (hl, h) in &parts {
            out.push((gl.clone(), g.clone(), hl.clone(), h.clone()));
        }
    }
    let mut rng = random::rng(limits.seed);
    use rand::Rng;
    for k in 0..limits.join_instances() {
        let (ng, nh) = (rng.gen_range(1..=max_order), rng.gen_range(1..=max_order));
        let g = random::connected_graph(&mut rng, ng);
        let h = random::connected_graph(&mut rng, nh);
        out.push((format!("R{k}a"), g, format!("R{k}b"), h));
    }
    out
}

/// Family bases of order `<= max_order` plus seeded random connected bases.
pub fn extension_bases(limits: &Limits) -> Vec<(String, Graph)> {
    let max_order = limits.max_order_or(5);
    let mut out = Vec::new();
    for f in Family::ALL {
        for n in f.min_n()..=max_order {
            if f.order_for(n) <= max_order {
                out.push((label(f, n), fam(f, n)));
            }
        }
    }
    let mut rng = random::rng(limits.seed);
    use rand::Rng;
    for k in 0..limits.instances_or(EXTENSION_RANDOM_BASES) {
        let order = rng.gen_range(2..=max_order.max(2));
        out.push((format!("R{k}"), random::connected_graph(&mut rng, order)));
    }
    out
}

fn rooted_subject(name: &str, root: usize, m: usize) -> String {
    format!("{name}(m={m}) root {root}")
}

/// Composition with dominating-set counts of the parts, reported alongside
/// join failures.
fn dominating_join(g: &Graph, h: &Graph, i: usize, cap: OracleCap) -> Result<u64> {
    let dg = oracle::dominating_counts(g, cap)?;
    let dh = oracle::dominating_counts(h, cap)?;
    let mut total = dg.get(i) + dh.get(i);
    for i1 in 1..i {
        total += choose(g.order(), i1)? * choose(h.order(), i - i1)?;
    }
    Ok(total)
}

pub fn verify_formula_suite(suite: Suite, limits: &Limits) -> Result<VerificationReport> {
    let cap = limits.cap;
    let mut b = ReportBuilder::new(suite.name());
    match suite {
        Suite::Complete => {
            for n in 1..=limits.max_n_or(12) {
                let truth = table(&fam(Family::Complete, n), cap)?;
                for i in 1..=n {
                    b.check(
                        &label(Family::Complete, n),
                        format!("i={i}"),
                        "count_complete",
                        formulas::count_complete(n, i)?,
                        truth.get(i),
                    );
                }
            }
        }
        Suite::Star => {
            for n in 1..limits.max_n_or(12) {
                let truth = table(&fam(Family::Star, n), cap)?;
                for i in 1..=n + 1 {
                    b.check(
                        &label(Family::Star, n),
                        format!("i={i}"),
                        "count_star",
                        formulas::count_star(n, i)?,
                        truth.get(i),
                    );
                }
            }
        }
        Suite::Wheel => {
            for n in 4..=limits.max_n_or(14) {
                let rim = fam(Family::Cycle, n - 1);
                let rim_table = table(&rim, cap)?;
                let truth = table(&fam(Family::Wheel, n), cap)?;
                for i in 1..=n {
                    let claimed = formulas::count_wheel(n, i, &rim_table)?;
                    if !b.check(
                        &label(Family::Wheel, n),
                        format!("i={i}"),
                        "count_wheel",
                        claimed,
                        truth.get(i),
                    ) {
                        let fixed = dominating_join(&rim, &Graph::k1(), i, cap)?;
                        b.note(format!("rim dominating-set composition gives {fixed}"));
                    }
                }
            }
        }
        Suite::Join => {
            for (gl, g, hl, h) in join_instances(limits) {
                let subject = format!("{gl} + {hl}");
                let (tg, th) = (table(&g, cap)?, table(&h, cap)?);
                let joined = g.join(&h);
                let truth = table(&joined, cap)?;
                for i in 1..=joined.order() {
                    let claimed = formulas::count_join(&tg, &th, i)?;
                    if !b.check(
                        &subject,
                        format!("i={i}"),
                        "count_join",
                        claimed,
                        truth.get(i),
                    ) {
                        let fixed = dominating_join(&g, &h, i, cap)?;
                        b.note(format!("dominating-set composition gives {fixed}"));
                    }
                }
            }
        }
        Suite::JoinGamma => {
            for (gl, g, hl, h) in join_instances(limits) {
                let subject = format!("{gl} + {hl}");
                let claimed =
                    formulas::gamma_w_join(oracle::gamma(&g, cap)?, oracle::gamma(&h, cap)?);
                let truth = oracle::gamma_w(&g.join(&h), cap)?;
                b.check(
                    &subject,
                    "γ_w",
                    "gamma_w_join",
                    claimed.value as u64,
                    truth as u64,
                );
            }
        }
        Suite::CoronaGamma => {
            let bases = [
                (Family::Path, 2),
                (Family::Path, 3),
                (Family::Cycle, 3),
                (Family::Cycle, 4),
                (Family::Complete, 3),
            ];
            let fibres = [
                (Family::Complete, 1),
                (Family::Complete, 2),
                (Family::Path, 3),
            ];
            for (gf, gn) in bases {
                for (hf, hn) in fibres {
                    let g = fam(gf, gn);
                    let c = g.corona(&fam(hf, hn));
                    if c.order() > cap.get() {
                        b.skip(1);
                        continue;
                    }
                    let subject = format!("{} ∘ {}", label(gf, gn), label(hf, hn));
                    let claimed = formulas::gamma_w_corona(&g)?;
                    b.check(
                        &subject,
                        "γ_w",
                        "gamma_w_corona",
                        claimed.value as u64,
                        oracle::gamma_w(&c, cap)? as u64,
                    );
                }
            }
        }
        Suite::GammaPathCycle => {
            for n in 1..=limits.max_n_or(20) {
                let p = oracle::gamma_w(&fam(Family::Path, n), cap)?;
                b.check(
                    &label(Family::Path, n),
                    "γ_w",
                    "gamma_w_path",
                    formulas::gamma_w_path(n).value as u64,
                    p as u64,
                );
                let c = oracle::gamma_w(&fam(Family::Cycle, n), cap)?;
                b.check(
                    &label(Family::Cycle, n),
                    "γ_w",
                    "gamma_w_cycle",
                    formulas::gamma_w_cycle(n).value as u64,
                    c as u64,
                );
            }
        }
        Suite::ExtensionRecurrence => {
            for (name, base) in extension_bases(limits) {
                for root in base.vertices() {
                    let rg = RootedGraph::new(base.clone(), root, limits.max_m)?;
                    let rows = extension::count_extension_table(&rg, cap)?;
                    for m in 2..=limits.max_m {
                        let subject = rooted_subject(&name, root, m);
                        let truth = table(&rg.with_length(m).realize(), cap)?;
                        let row = rows.row(m).expect("row computed up to max_m");
                        for i in 1..=truth.order() {
                            if i == 1 && base.order() < 2 {
                                continue;
                            }
                            b.check(
                                &subject,
                                format!("i={i}"),
                                "count_extension_table",
                                row.get(i),
                                truth.get(i),
                            );
                        }
                    }
                }
            }
        }
        Suite::ExtensionConstructive => {
            for (name, base) in extension_bases(limits) {
                for root in base.vertices() {
                    for m in 2..=limits.max_m {
                        let rg = RootedGraph::new(base.clone(), root, m)?;
                        if rg.realized_order() > CONSTRUCTIVE_MAX_ORDER {
                            b.skip(1);
                            continue;
                        }
                        let subject = rooted_subject(&name, root, m);
                        let g = rg.realize();
                        for i in 1..=g.order() {
                            let built = extension::build_extension_wcds(&rg, i, cap)?;
                            let truth: BTreeSet<_> =
                                oracle::enumerate_wcds(&g, i, cap)?.into_iter().collect();
                            let common = built.sets.iter().filter(|s| truth.contains(*s)).count();
                            let cell = format!("i={i}");
                            b.check(
                                &subject,
                                &cell,
                                "constructed",
                                built.sets.len() as u64,
                                truth.len() as u64,
                            );
                            b.check(
                                &subject,
                                &cell,
                                "constructed ∩ oracle",
                                common as u64,
                                truth.len() as u64,
                            );
                            if built.case == ConstructionCase::FirstOnly {
                                b.finding(
                                    &subject,
                                    FindingKind::FirstOnlyCase,
                                    format!("i={i}: G(m-1) family non-empty and G(m-2) family empty; built from G(m-1) alone"),
                                );
                            }
                        }
                    }
                }
            }
        }
        Suite::ExtensionGamma => {
            for (name, base) in extension_bases(limits) {
                let gw_base = oracle::gamma_w(&base, cap)?;
                for root in base.vertices() {
                    let rg = RootedGraph::new(base.clone(), root, 0)?;
                    let flag_w = extension::root_in_minimum_wcds(&rg, cap)?;
                    let flag_g = extension::root_in_minimum_dominating(&rg, cap)?;
                    for m in 2..=limits.max_m {
                        let subject = rooted_subject(&name, root, m);
                        let truth = oracle::gamma_w(&rg.with_length(m).realize(), cap)?;
                        let claimed = formulas::gamma_w_extension(gw_base, flag_w, m).value;
                        if b.check(
                            &subject,
                            "γ_w",
                            "gamma_w_extension",
                            claimed as u64,
                            truth as u64,
                        ) {
                            continue;
                        }
                        let alt = formulas::gamma_w_extension(gw_base, flag_g, m).value;
                        let detail = format!(
                            "γ_w-set flag {flag_w}, γ-set flag {flag_g}; γ_w reading {claimed}, γ reading {alt}, oracle {truth}"
                        );
                        b.note(detail.clone());
                        let kind = if flag_w != flag_g && alt == truth {
                            FindingKind::Interpretation
                        } else {
                            FindingKind::Unexplained
                        };
                        b.finding(&subject, kind, detail);
                    }
                }
            }
        }
        Suite::Boxes => {
            for n in 1..=limits.max_n_or(15) {
                let subject = format!("n={n}");
                let truth = table(&fam(Family::Path, n), cap)?;
                for j in 0..=n {
                    let brute = formulas::boxes_brute(n, j);
                    b.check(
                        &subject,
                        format!("j={j}"),
                        "boxes_count vs boxes_brute",
                        formulas::boxes_count(n, j)?,
                        brute,
                    );
                    b.check(
                        &subject,
                        format!("j={j}"),
                        "boxes_brute vs d_w(P_n, j)",
                        brute,
                        truth.get(j),
                    );
                }
            }
        }
        Suite::Table1 | Suite::Table2 | Suite::EdgeDeletionBounds | Suite::Structural => {
            return super::run_suite(suite, limits);
        }
    }
    Ok(b.finish())
}

/// Counting routes for [`cross_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Method {
    Oracle,
    ClosedForm,
    Recurrence,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::ClosedForm => "closed_form",
            Method::Recurrence => "recurrence",
        }
    }
}

#[derive(Debug, Clone)]
pub struct CrossCheck {
    pub tables: Vec<(Method, CountTable)>,
    pub report: VerificationReport,
}

/// Full table of `g` by a non-oracle method, chosen from its family tag.
pub fn family_table(g: &Graph, method: Method, cap: OracleCap) -> Result<CountTable> {
    let unsupported = || {
        let what = g.family_tag().map_or("untagged graph".to_string(), |t| {
            format!("{} family", t.family)
        });
        Error::Unsupported(format!("method {} for {what}", method.name()))
    };
    let tag = g.family_tag().ok_or_else(unsupported)?;
    let n = tag.n;
    let order = g.order();
    let counts: Vec<u64> = match (method, tag.family) {
        (Method::Oracle, _) => return table(g, cap),
        (Method::ClosedForm, Family::Path) => (1..=order)
            .map(|j| formulas::count_path_closed(n, j))
            .collect::<Result<_, _>>()?,
        (Method::ClosedForm, Family::Complete) => (1..=order)
            .map(|i| formulas::count_complete(n, i))
            .collect::<Result<_, _>>()?,
        (Method::ClosedForm, Family::Star) => (1..=order)
            .map(|i| formulas::count_star(n, i))
            .collect::<Result<_, _>>()?,
        (Method::ClosedForm, Family::Wheel) => {
            let rim = table(&fam(Family::Cycle, n - 1), cap)?;
            (1..=order)
                .map(|i| formulas::count_wheel(n, i, &rim))
                .collect::<Result<_, _>>()?
        }
        (Method::Recurrence, Family::Path) => return Ok(formulas::count_path_recurrence(n)?),
        _ => return Err(unsupported()),
    };
    Ok(CountTable::from_counts(order, counts))
}

/// Tables of `g` by each requested method, with cell-level agreement
/// against the oracle.
pub fn cross_check(g: &Graph, methods: &[Method], cap: OracleCap) -> Result<CrossCheck> {
    let truth = table(g, cap)?;
    let subject = g.family_tag().map_or_else(
        || format!("graph of order {}", g.order()),
        |t| label(t.family, t.n),
    );
    let mut b = ReportBuilder::new("cross_check");
    let mut tables = Vec::new();
    let mut methods = methods.to_vec();
    methods.sort();
    methods.dedup();
    for method in methods {
        let t = if method == Method::Oracle {
            truth.clone()
        } else {
            family_table(g, method, cap)?
        };
        for i in 1..=g.order() {
            b.check(
                &subject,
                format!("i={i}"),
                method.name(),
                t.get(i),
                truth.get(i),
            );
        }
        tables.push((method, t));
    }
    b.row(format!("d_w({subject}, j)"), &truth);
    Ok(CrossCheck {
        tables,
        report: b.finish(),
    })
}

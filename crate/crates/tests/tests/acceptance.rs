//! The fifteen acceptance criteria, each an exact integer comparison against
//! the exhaustive oracle. Prints one `criterion N: PASS|FAIL` line each and
//! exits non-zero if any criterion fails.

use wcds::verify::{
    run_suite, verify_table1, verify_table2, CheckRecord, FindingKind, Limits, Suite,
    VerificationReport,
};
use wcds_core::OracleCap;

const SHOWN_FAILURES: usize = 5;

fn limits() -> Limits {
    Limits::default()
}

fn judge(n: usize, what: &str, records: &[&CheckRecord], extra: Option<String>) -> bool {
    let failed: Vec<_> = records.iter().filter(|r| !r.pass).collect();
    let ok = !records.is_empty() && failed.is_empty() && extra.is_none();
    println!(
        "criterion {n}: {} {what}: {}/{} cells agree{}",
        if ok { "PASS" } else { "FAIL" },
        records.len() - failed.len(),
        records.len(),
        extra.as_ref().map_or(String::new(), |e| format!("; {e}"))
    );
    for r in failed.iter().take(SHOWN_FAILURES) {
        println!(
            "    {} {} [{}]: claimed {} oracle {}{}",
            r.subject,
            r.cell,
            r.source,
            r.claimed,
            r.oracle,
            r.note.as_ref().map_or(String::new(), |x| format!(" ({x})"))
        );
    }
    ok
}

fn judge_report(n: usize, what: &str, report: &VerificationReport) -> bool {
    let all: Vec<_> = report.records.iter().collect();
    judge(n, what, &all, None)
}

fn suite(s: Suite, limits: &Limits) -> VerificationReport {
    run_suite(s, limits).expect("suite runs within the cap")
}

fn by_source<'a>(report: &'a VerificationReport, sources: &[&str]) -> Vec<&'a CheckRecord> {
    report
        .records
        .iter()
        .filter(|r| sources.contains(&r.source.as_str()))
        .collect()
}

fn criterion_01_path_table() -> bool {
    let r = verify_table1(10, OracleCap::default()).unwrap();
    assert_eq!(by_source(&r, &["table"]).len(), 55);
    judge_report(1, "path table, closed form and recurrence", &r)
}

fn criterion_02_cycle_table() -> bool {
    let r = verify_table2(14, OracleCap::default()).unwrap();
    let cells = by_source(&r, &["table"]);
    assert_eq!(cells.len(), 105);
    judge(2, "cycle table", &cells, None)
}

fn criterion_03_path_closed_form() -> bool {
    let r = verify_table1(20, OracleCap::default()).unwrap();
    judge(
        3,
        "path closed form for n <= 20",
        &by_source(&r, &["closed_form"]),
        None,
    )
}

fn criterion_04_cycle_top() -> bool {
    let r = verify_table2(20, OracleCap::default()).unwrap();
    judge(
        4,
        "cycle top cardinalities and n-3 identity",
        &by_source(&r, &["cycle_top", "cycle_step_identity"]),
        None,
    )
}

fn criterion_05_gamma_path_cycle() -> bool {
    let r = suite(
        Suite::GammaPathCycle,
        &Limits {
            max_n: Some(20),
            ..limits()
        },
    );
    judge_report(5, "γ_w of paths and cycles", &r)
}

fn criterion_06_join() -> bool {
    judge_report(6, "join composition", &suite(Suite::Join, &limits()))
}

fn criterion_07_wheel() -> bool {
    judge_report(
        7,
        "wheels",
        &suite(
            Suite::Wheel,
            &Limits {
                max_n: Some(14),
                ..limits()
            },
        ),
    )
}

fn criterion_08_corona_gamma() -> bool {
    judge_report(8, "corona γ_w", &suite(Suite::CoronaGamma, &limits()))
}

fn criterion_09_join_gamma() -> bool {
    judge_report(9, "join γ_w", &suite(Suite::JoinGamma, &limits()))
}

fn criterion_10_extension_recurrence() -> bool {
    judge_report(
        10,
        "extension recurrence",
        &suite(Suite::ExtensionRecurrence, &limits()),
    )
}

fn criterion_11_extension_constructive() -> bool {
    let r = suite(Suite::ExtensionConstructive, &limits());
    let first_only = r.findings_of(FindingKind::FirstOnlyCase).count();
    println!("    first-only constructions recorded: {first_only}");
    judge_report(11, "constructive families", &r)
}

fn criterion_12_extension_gamma() -> bool {
    let r = suite(Suite::ExtensionGamma, &limits());
    let unexplained = r.findings_of(FindingKind::Unexplained).count();
    let extra = (unexplained > 0).then(|| format!("{unexplained} unexplained failures"));
    let all: Vec<_> = r.records.iter().collect();
    judge(12, "extension γ_w", &all, extra)
}

fn criterion_13_boxes() -> bool {
    judge_report(
        13,
        "boxes identity",
        &suite(
            Suite::Boxes,
            &Limits {
                max_n: Some(15),
                ..limits()
            },
        ),
    )
}

fn criterion_14_structural() -> bool {
    let r = suite(
        Suite::Structural,
        &Limits {
            max_order: Some(7),
            ..limits()
        },
    );
    judge_report(14, "upward closure and domination", &r)
}

fn criterion_15_edge_deletion() -> bool {
    let r = suite(
        Suite::EdgeDeletionBounds,
        &Limits {
            max_order: Some(7),
            ..limits()
        },
    );
    println!("    disconnecting deletions skipped: {}", r.summary.skipped);
    judge_report(15, "edge deletion bounds", &r)
}

fn main() {
    let criteria: [fn() -> bool; 15] = [
        criterion_01_path_table,
        criterion_02_cycle_table,
        criterion_03_path_closed_form,
        criterion_04_cycle_top,
        criterion_05_gamma_path_cycle,
        criterion_06_join,
        criterion_07_wheel,
        criterion_08_corona_gamma,
        criterion_09_join_gamma,
        criterion_10_extension_recurrence,
        criterion_11_extension_constructive,
        criterion_12_extension_gamma,
        criterion_13_boxes,
        criterion_14_structural,
        criterion_15_edge_deletion,
    ];
    let failed = criteria.iter().filter(|c| !c()).count();
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}

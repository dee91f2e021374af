//! Sweep the identity catalog: every registered identity is evaluated on
//! two independent exact paths over its whole domain.

use quadseq::registry;

fn main() {
    println!("registered identities:");
    for case in registry::catalog() {
        let indices = if case.is_double_index() { "n,k" } else { "n" };
        println!("  {:<20} [{indices}, n >= {}]  {}", case.id, case.n_min, case.summary);
    }

    println!();
    println!("checking everything exactly up to n = 40:");
    let reports = registry::check_all(40);
    for report in &reports {
        let status = if report.pass { "pass" } else { "FAIL" };
        println!(
            "  {:<20} {status}  ({} cases)",
            report.id, report.cases_checked
        );
    }
    let passed = reports.iter().filter(|r| r.pass).count();
    println!("{passed} of {} identities pass", reports.len());

    // A single identity in detail, including its counterexample reporting.
    println!();
    let report = registry::check("vajda", 9).unwrap();
    println!(
        "vajda up to n = 9: pass = {}, {} cases checked",
        report.pass, report.cases_checked
    );
}

//! Acceptance run: the full verification sweep, summarised as one line per
//! criterion.

use rootposet::verify::{self, CheckResult, Options, Status, VerificationReport};

const CRITERIA: [(&str, &[&str]); 9] = [
    ("cardinalities of H, abelian ideals and glorious pairs", &["cardinality."]),
    ("size bounds for non-abelian ideals", &["ideals."]),
    ("golden tables match the reference data", &["golden."]),
    ("edge to glorious pair bijection and classes", &["glorious."]),
    ("transition roots, shift identities and bijection", &["transition."]),
    ("interval between the two halves of theta", &["interval.", "tails.", "semiglorious."]),
    ("meet and join distance formula", &["meet-distance."]),
    ("minimal non-abelian ideals and canonical words", &["minimal-nonabelian."]),
    ("well-definedness of classes, minuscule words and rootlets", &["well-defined."]),
];

fn belongs(c: &CheckResult, prefixes: &[&str]) -> bool {
    prefixes.iter().any(|p| c.id.starts_with(p))
}

fn summarise(report: &VerificationReport) -> Vec<(usize, bool, String)> {
    CRITERIA
        .iter()
        .enumerate()
        .map(|(n, (name, prefixes))| {
            let mine: Vec<&CheckResult> = report.checks.iter().filter(|c| belongs(c, prefixes)).collect();
            let failed: Vec<&&CheckResult> = mine.iter().filter(|c| c.status == Status::Fail).collect();
            let ok = !mine.is_empty() && failed.is_empty();
            let detail = match failed.first() {
                Some(f) => format!(
                    "{} of {} checks failed; first: {} {} {}",
                    failed.len(),
                    mine.len(),
                    f.id,
                    f.system,
                    f.witness.as_deref().unwrap_or("")
                ),
                None => format!("{} checks", mine.len()),
            };
            (n + 1, ok, format!("{name}: {detail}"))
        })
        .collect()
}

fn main() {
    let specs = verify::sweep(8);
    let report = verify::verify_all(&specs, &Options::default());
    let lines = summarise(&report);
    for (n, ok, text) in &lines {
        println!("criterion {n} {} {text}", if *ok { "PASS" } else { "FAIL" });
    }
    for c in report.checks.iter().filter(|c| c.status == Status::Recorded) {
        println!("recorded {} {} {}", c.id, c.system, c.witness.as_deref().unwrap_or(""));
    }
    let passed = lines.iter().filter(|(_, ok, _)| *ok).count();
    println!("acceptance: {passed}/{} criteria passed", lines.len());
    if passed != lines.len() {
        std::process::exit(1);
    }
}

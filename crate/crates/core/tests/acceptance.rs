//! The acceptance run: one pass/fail line per criterion, then a nonzero exit
//! if any criterion failed.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use groupoid_twist::cli::check_report;
use groupoid_twist::enumeration::{enumerate_specs, run_sweep, SpecLimits, Suite, SweepConfig, SweepReport};
use groupoid_twist::fixtures;
use groupoid_twist::inverse::satisfies_triple_law;
use groupoid_twist::morphisms::involutions;
use groupoid_twist::{Groupoid, Mapping};

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

/// Failures of the named properties, or of every property when `ids` is empty.
fn failures(report: &SweepReport, ids: &[&str]) -> Vec<String> {
    report
        .properties
        .iter()
        .filter(|(id, c)| c.failed > 0 && (ids.is_empty() || ids.contains(&id.as_str())))
        .map(|(id, c)| format!("{id}: {} failed", c.failed))
        .collect()
}

fn held(report: &SweepReport, id: &str) -> u64 {
    report.properties.get(id).map_or(0, |c| c.held)
}

fn sweep(config: SweepConfig) -> SweepReport {
    run_sweep(&config).expect("acceptance configurations are valid")
}

fn tables_only(suites: impl IntoIterator<Item = Suite>) -> SweepConfig {
    SweepConfig { samples: 0, spec_limits: None, ..SweepConfig::default() }.with_suites(suites)
}

fn within(elapsed: Duration, limit: Duration) -> String {
    format!("{:.2} s (target < {} s)", elapsed.as_secs_f64(), limit.as_secs())
}

/// Counts triples with `(xy)z = (αx)(yz) = x(yz)`.
fn triples_satisfying_both_laws(g: &Groupoid, a: &Mapping) -> usize {
    let p = |x, y| g.product(x, y);
    let mut count = 0;
    for x in g.elements() {
        for y in g.elements() {
            for z in g.elements() {
                let left = p(p(x, y), z);
                count += usize::from(left == p(a.apply(x), p(y, z)) && left == p(x, p(y, z)));
            }
        }
    }
    count
}

fn example_one() -> Outcome {
    let started = Instant::now();
    let (g, a) = (fixtures::three_element_band(), fixtures::three_element_band_alpha());
    let r = check_report(&g, Some(&a));
    let m = r.map.as_ref().unwrap();
    let triples = triples_satisfying_both_laws(&g, &a);
    let text = r.to_text();
    let facts = [
        ("α is an involution", m.involution && !a.is_identity()),
        ("x·αx = αx", m.absorbs),
        ("27 of 27 triples", triples == 27),
        ("α ∉ LT", !m.in_lt && text.contains("α∉LT")),
        ("AUT² = {identity}", r.involutive_automorphisms == [Mapping::identity(3)] && text.contains("AUT²={identity}")),
    ];
    let elapsed = started.elapsed();
    let bad: Vec<&str> = facts.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
    outcome(
        bad.is_empty() && elapsed < Duration::from_secs(1),
        format!("{} facts confirmed, {triples}/27 triples; {}; false: {bad:?}", facts.len() - bad.len(), within(elapsed, Duration::from_secs(1))),
    )
}

fn example_two() -> Outcome {
    let started = Instant::now();
    let (g, a) = (fixtures::two_element_swap(), fixtures::two_element_swap_alpha());
    let r = check_report(&g, Some(&a));
    let m = r.map.as_ref().unwrap();
    let text = r.to_text();
    let facts = [
        ("x·αx = αx", m.absorbs),
        ("(xy)z = (αx)(yz)", satisfies_triple_law(&g, &a)),
        ("α ∈ AUT²", m.involutive_automorphism && text.contains("α∈AUT²")),
        ("α ∉ LT", !m.in_lt && text.contains("α∉LT")),
    ];
    let elapsed = started.elapsed();
    let bad: Vec<&str> = facts.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
    outcome(
        bad.is_empty() && elapsed < Duration::from_secs(1),
        format!("{} facts confirmed; {}; false: {bad:?}", facts.len() - bad.len(), within(elapsed, Duration::from_secs(1))),
    )
}

fn membership_equivalence() -> Outcome {
    let r = sweep(SweepConfig { jobs: 1, ..tables_only([Suite::Membership]) });
    let c = r.properties["membership_characterization_agrees"];
    let limit = Duration::from_secs(60);
    outcome(
        c.checked == 19_700 && c.failed == 0 && r.elapsed < limit,
        format!("{} tables x 12 classes, {} discrepancies; single thread {}", c.checked, c.failed, within(r.elapsed, limit)),
    )
}

const DECISION_PROPERTIES: [&str; 5] = [
    "criteria_agree",
    "witness_reproduces_input",
    "constructed_instances_are_determined",
    "partition_search_agrees",
    "block_partition_is_twisted",
];

fn decision_coherence() -> Outcome {
    let config = SweepConfig { jobs: 8, spec_limits: Some(SpecLimits::new(3, 4)), ..SweepConfig::default() }
        .with_suites([Suite::Decision]);
    let r = sweep(config);
    let bad = failures(&r, &DECISION_PROPERTIES);
    let limit = Duration::from_secs(300);
    let coverage = r.instances.values().sum::<u64>();
    outcome(
        bad.is_empty() && r.passed && r.config.samples >= 100_000 && r.elapsed < limit,
        format!(
            "{coverage} instances, {} determined, {} constructed agree with the partition check; {}; failures: {bad:?}",
            r.census.get("determined").copied().unwrap_or(0),
            held(&r, "block_partition_is_twisted"),
            within(r.elapsed, limit)
        ),
    )
}

fn slg_twist_consequences() -> Outcome {
    let base = SweepConfig { max_exhaustive_order: 0, samples: 0, ..SweepConfig::default() };
    let mut reports = Vec::new();
    for limits in [SpecLimits::new(3, 4), SpecLimits::extended(2, 6)] {
        reports.push(sweep(SweepConfig { spec_limits: Some(limits), ..base.clone() }.with_suites([Suite::SlgTwist])));
    }
    let non_abelian = enumerate_specs(SpecLimits::extended(2, 6))
        .unwrap()
        .iter()
        .filter(|s| s.groups.iter().any(|g| !g.table.is_commutative()))
        .count();
    let checked: u64 = reports.iter().map(|r| held(r, "slg_twist_consequences")).sum();
    let total: u64 = reports.iter().map(|r| r.properties["slg_twist_consequences"].checked).sum();
    let bad: Vec<String> = reports.iter().flat_map(|r| failures(r, &[])).collect();
    outcome(
        bad.is_empty() && checked == total && non_abelian > 0,
        format!("13 consequences on {checked}/{total} constructed groupoids ({non_abelian} with a non-abelian group); failures: {bad:?}"),
    )
}

fn construction_round_trips() -> Outcome {
    let config = SweepConfig { samples: 0, ..SweepConfig::default() }.with_suites([Suite::Construction]);
    let r = sweep(config);
    let specs = r.instances.get(&groupoid_twist::enumeration::Source::Constructed).copied().unwrap_or(0);
    let forward = held(&r, "decompose_inverts_build");
    let backward = held(&r, "build_inverts_decompose");
    let bad = failures(&r, &[]);
    outcome(
        bad.is_empty() && forward == specs && backward >= 32,
        format!(
            "decompose(build(spec)) = spec for {forward}/{specs} specs; build(decompose(S, α)) = S for {backward} determined groupoids; failures: {bad:?}"
        ),
    )
}

fn identity_forms() -> Outcome {
    let r = sweep(tables_only([Suite::Identities]));
    let bad = failures(&r, &["generalized_inflation_square_form", "rectangular_band_is_band"]);
    outcome(
        bad.is_empty(),
        format!(
            "{} tables, {} rectangular bands; failures: {bad:?}",
            r.properties["generalized_inflation_square_form"].checked,
            held(&r, "rectangular_band_is_band")
        ),
    )
}

fn conditional_claims() -> Outcome {
    let suites = [Suite::Involutions, Suite::Inverse, Suite::Inclusions, Suite::Construction];
    let r = sweep(SweepConfig { samples: 0, jobs: 8, ..SweepConfig::default() }.with_suites(suites));
    let bad = failures(&r, &[]);
    let limit = Duration::from_secs(600);
    let applied = r.properties.values().filter(|c| c.held > 0).count();
    outcome(
        bad.is_empty() && r.elapsed < limit && applied == r.properties.len(),
        format!(
            "{} properties, {applied} with applicable instances; {}; failures: {bad:?}",
            r.properties.len(),
            within(r.elapsed, limit)
        ),
    )
}

fn determinism() -> Outcome {
    let config = SweepConfig::default();
    let runs: Vec<String> = [8, 8, 1, 2]
        .into_iter()
        .map(|jobs| sweep(SweepConfig { jobs, ..config.clone() }).to_json())
        .collect();
    let identical = runs.iter().collect::<BTreeSet<_>>().len() == 1;
    outcome(
        identical,
        format!("full default sweep: two 8-thread runs and 1/2-thread runs {} ({} bytes)", if identical { "byte-identical" } else { "DIFFER" }, runs[0].len()),
    )
}

fn main() -> ExitCode {
    // the involution list is shared by several suites; warm it outside timing
    let _ = involutions(4);
    let criteria: [Criterion; 9] = [
        ("worked example 1", example_one),
        ("worked example 2", example_two),
        ("membership characterization over order <= 3", membership_equivalence),
        ("decision criteria coherence", decision_coherence),
        ("semilattice-of-groups twist consequences", slg_twist_consequences),
        ("construction round trips", construction_round_trips),
        ("identity and square forms of generalized inflations", identity_forms),
        ("conditional claims over order <= 3 and the constructed family", conditional_claims),
        ("sweep determinism across thread counts", determinism),
    ];
    let mut all = true;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        all &= o.passed;
        println!("criterion {}: {} - {name}: {}", k + 1, if o.passed { "PASS" } else { "FAIL" }, o.detail);
    }
    if all {
        println!("acceptance: all 9 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: FAILED");
        ExitCode::FAILURE
    }
}

//! The property sweep: generates instances in fixed work units, checks every
//! selected property on each, and merges the unit results in unit order.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::clifford::ConstructionSpec;
use crate::error::{Error, Result};
use crate::groupoid::{Element, Groupoid};
use crate::morphisms::Mapping;
use crate::report::{to_stable_json, SWEEP_FORMAT};

use super::properties::{builtin_properties, golden_instances, Instance, Outcome, Property, Source, Suite};
use super::specs::{enumerate_specs, SpecLimits};
use super::tables::{random_groupoid_range, table_at, table_count, GENERATOR, MAX_EXHAUSTIVE_ORDER, SAMPLE_BLOCK};

/// Exhaustive tables per work unit.
const EXHAUSTIVE_CHUNK: u64 = 2048;
/// Constructed instances per work unit.
const SPEC_CHUNK: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepConfig {
    /// Every table of each order `1..=max_exhaustive_order` is checked.
    pub max_exhaustive_order: usize,
    /// Permits `max_exhaustive_order` above the default limit.
    pub acknowledge_large_order: bool,
    pub sample_order: usize,
    pub samples: u64,
    pub seed: u64,
    /// Limits of the constructed family; `None` skips construction.
    pub spec_limits: Option<SpecLimits>,
    pub suites: BTreeSet<Suite>,
    /// Counterexamples kept per property; failures beyond it are only counted.
    pub max_counterexamples: usize,
    /// Worker threads; 0 uses rayon's default. Does not affect the report.
    #[serde(skip)]
    pub jobs: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_exhaustive_order: MAX_EXHAUSTIVE_ORDER,
            acknowledge_large_order: false,
            sample_order: 4,
            samples: 100_000,
            seed: 1,
            spec_limits: Some(SpecLimits::default()),
            suites: Suite::ALL.into_iter().collect(),
            max_counterexamples: 16,
            jobs: 0,
        }
    }
}

impl SweepConfig {
    /// Only the golden instances and their facts.
    pub fn goldens_only() -> Self {
        SweepConfig {
            max_exhaustive_order: 0,
            samples: 0,
            spec_limits: None,
            suites: BTreeSet::from([Suite::Goldens]),
            ..SweepConfig::default()
        }
    }

    /// The same configuration restricted to `suites`.
    pub fn with_suites(mut self, suites: impl IntoIterator<Item = Suite>) -> Self {
        self.suites = suites.into_iter().collect();
        self
    }

    fn validate(&self) -> Result<()> {
        if self.max_exhaustive_order > MAX_EXHAUSTIVE_ORDER && !self.acknowledge_large_order {
            return Err(Error::OrderTooLarge { order: self.max_exhaustive_order, limit: MAX_EXHAUSTIVE_ORDER });
        }
        if table_count(self.max_exhaustive_order).is_none() {
            return Err(Error::OrderTooLarge { order: self.max_exhaustive_order, limit: MAX_EXHAUSTIVE_ORDER });
        }
        if self.samples > 0 && self.sample_order == 0 {
            return Err(Error::PreconditionViolated("sample order must be positive".into()));
        }
        if self.max_counterexamples == 0 {
            return Err(Error::PreconditionViolated("at least one counterexample must be kept".into()));
        }
        if let Some(limits) = self.spec_limits {
            limits.check()?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct PropertyCounts {
    /// Instances the property was evaluated on.
    pub checked: u64,
    pub held: u64,
    /// Instances where the hypotheses never applied.
    pub vacuous: u64,
    pub failed: u64,
}

impl PropertyCounts {
    fn add(&mut self, other: &PropertyCounts) {
        self.checked += other.checked;
        self.held += other.held;
        self.vacuous += other.vacuous;
        self.failed += other.failed;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub property: String,
    pub source: Source,
    pub table: Groupoid,
    /// The golden or glued `α`, when the instance has one.
    pub alpha: Option<Mapping>,
    /// The construction data, in `.cspec` form, for constructed instances.
    pub spec: Option<String>,
    pub witness: Vec<Element>,
    pub detail: String,
}

impl Counterexample {
    fn key(&self) -> (&str, Source, &[Element], &[Element], &str) {
        (&self.property, self.source, self.table.table(), &self.witness, &self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub format: &'static str,
    pub generator: &'static str,
    pub config: SweepConfig,
    /// Instances generated per source.
    pub instances: BTreeMap<Source, u64>,
    /// Instances satisfying basic predicates, over all sources.
    pub census: BTreeMap<String, u64>,
    pub properties: BTreeMap<String, PropertyCounts>,
    /// Sorted; at most `max_counterexamples` per property.
    pub counterexamples: Vec<Counterexample>,
    pub passed: bool,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SweepReport {
    pub fn to_json(&self) -> String {
        to_stable_json(self)
    }

    pub fn failures(&self) -> u64 {
        self.properties.values().map(|c| c.failed).sum()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "generator: {}", self.generator);
        for (source, n) in &self.instances {
            let _ = writeln!(out, "instances {}: {n}", serde_json::to_value(source).expect("unit enum"));
        }
        for (name, n) in &self.census {
            let _ = writeln!(out, "census {name}: {n}");
        }
        for (id, c) in &self.properties {
            let _ = writeln!(
                out,
                "{id}: checked {}, held {}, vacuous {}, failed {}",
                c.checked, c.held, c.vacuous, c.failed
            );
        }
        for c in &self.counterexamples {
            let _ = writeln!(out, "COUNTEREXAMPLE {} ({:?}): {}", c.property, c.source, c.detail);
            let _ = writeln!(out, "  witness: {:?}", c.witness);
            if let Some(a) = &c.alpha {
                let _ = writeln!(out, "  alpha: {:?}", a.image());
            }
            for row in c.table.rows() {
                let _ = writeln!(out, "  {row:?}");
            }
        }
        let _ = writeln!(out, "passed: {}", self.passed);
        out
    }
}

/// A fixed slice of the instance space.
#[derive(Debug, Clone, Copy)]
enum Unit {
    Goldens,
    Exhaustive { order: usize, start: u64, end: u64 },
    Sampled { start: u64, end: u64 },
    Constructed { start: usize, end: usize },
}

#[derive(Default)]
struct UnitResult {
    instances: BTreeMap<Source, u64>,
    census: BTreeMap<String, u64>,
    properties: BTreeMap<String, PropertyCounts>,
    counterexamples: Vec<Counterexample>,
}

impl UnitResult {
    fn merge(&mut self, other: UnitResult) {
        for (s, n) in other.instances {
            *self.instances.entry(s).or_default() += n;
        }
        for (k, n) in other.census {
            *self.census.entry(k).or_default() += n;
        }
        for (k, c) in other.properties {
            self.properties.entry(k).or_default().add(&c);
        }
        self.counterexamples.extend(other.counterexamples);
    }

    /// Sorts and keeps the first `cap` counterexamples of each property.
    fn trim(&mut self, cap: usize) {
        self.counterexamples.sort_by(|a, b| a.key().cmp(&b.key()));
        let mut seen: BTreeMap<String, usize> = BTreeMap::new();
        self.counterexamples.retain(|c| {
            let n = seen.entry(c.property.clone()).or_default();
            *n += 1;
            *n <= cap
        });
    }
}

struct Plan<'a> {
    config: &'a SweepConfig,
    properties: Vec<&'a dyn Property>,
    specs: Vec<ConstructionSpec>,
}

impl Plan<'_> {
    fn wants(&self, source: Source) -> bool {
        self.properties.iter().any(|p| p.applies_to(source))
    }

    fn units(&self) -> Vec<Unit> {
        let mut units = Vec::new();
        if self.wants(Source::Golden) {
            units.push(Unit::Goldens);
        }
        if self.wants(Source::Exhaustive) {
            for order in 1..=self.config.max_exhaustive_order {
                let count = table_count(order).expect("validated");
                units.extend((0..count).step_by(EXHAUSTIVE_CHUNK as usize).map(|start| Unit::Exhaustive {
                    order,
                    start,
                    end: (start + EXHAUSTIVE_CHUNK).min(count),
                }));
            }
        }
        if self.wants(Source::Sampled) {
            let n = self.config.samples;
            units.extend((0..n).step_by(SAMPLE_BLOCK as usize).map(|start| Unit::Sampled {
                start,
                end: (start + SAMPLE_BLOCK).min(n),
            }));
        }
        if self.wants(Source::Constructed) {
            let n = self.specs.len();
            units.extend((0..n).step_by(SPEC_CHUNK).map(|start| Unit::Constructed {
                start,
                end: (start + SPEC_CHUNK).min(n),
            }));
        }
        units
    }

    fn instances(&self, unit: Unit) -> Vec<Instance> {
        match unit {
            Unit::Goldens => golden_instances(),
            Unit::Exhaustive { order, start, end } => {
                (start..end).map(|i| Instance::new(Source::Exhaustive, table_at(order, i))).collect()
            }
            Unit::Sampled { start, end } => {
                random_groupoid_range(self.config.sample_order, self.config.seed, start, end)
                    .into_iter()
                    .map(|g| Instance::new(Source::Sampled, g))
                    .collect()
            }
            Unit::Constructed { start, end } => self.specs[start..end]
                .iter()
                .map(|s| Instance::constructed(s.clone()).expect("enumerated specs are valid"))
                .collect(),
        }
    }

    fn run_unit(&self, unit: Unit) -> UnitResult {
        let mut result = UnitResult::default();
        for instance in self.instances(unit) {
            *result.instances.entry(instance.source).or_default() += 1;
            for p in self.properties.iter().filter(|p| p.applies_to(instance.source)) {
                let counts = result.properties.entry(p.id().to_owned()).or_default();
                counts.checked += 1;
                match p.check(&instance) {
                    Outcome::Vacuous => counts.vacuous += 1,
                    Outcome::Holds => counts.held += 1,
                    Outcome::Fails { witness, detail } => {
                        counts.failed += 1;
                        result.counterexamples.push(Counterexample {
                            property: p.id().to_owned(),
                            source: instance.source,
                            table: instance.groupoid.clone(),
                            alpha: instance.alpha.clone(),
                            spec: instance.spec.as_ref().map(ConstructionSpec::to_cspec),
                            witness,
                            detail,
                        });
                    }
                }
            }
            census(&instance, &mut result.census);
        }
        result.trim(self.config.max_counterexamples);
        result
    }
}

/// Counts cheap predicates, plus the decision when some property computed it.
fn census(instance: &Instance, out: &mut BTreeMap<String, u64>) {
    let g = &instance.groupoid;
    let mut count = |name: &str, holds: bool| {
        if holds {
            *out.entry(name.to_owned()).or_default() += 1;
        }
    };
    count("associative", g.is_associative());
    count("inverse", instance.inverses().is_some());
    if let Some(determined) = instance.decided() {
        count("decided", true);
        count("determined", determined);
    }
}

/// Runs every built-in property in the configured suites.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport> {
    run_sweep_with(config, &[])
}

/// As [`run_sweep`], with `extra` properties checked alongside the built-in
/// ones. Extra properties run regardless of the suite selection.
pub fn run_sweep_with(config: &SweepConfig, extra: &[&dyn Property]) -> Result<SweepReport> {
    config.validate()?;
    let started = Instant::now();
    let builtins = builtin_properties();
    let mut properties: Vec<&dyn Property> = builtins
        .iter()
        .filter(|p| config.suites.contains(&p.suite()))
        .map(|p| p.as_ref())
        .collect();
    properties.extend_from_slice(extra);

    let mut plan = Plan { config, properties, specs: Vec::new() };
    if let (Some(limits), true) = (config.spec_limits, plan.wants(Source::Constructed)) {
        plan.specs = enumerate_specs(limits)?;
    }
    let units = plan.units();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::PreconditionViolated(format!("thread pool: {e}")))?;
    let results: Vec<UnitResult> = pool.install(|| units.par_iter().map(|&u| plan.run_unit(u)).collect());

    let mut merged = UnitResult::default();
    for r in results {
        merged.merge(r);
    }
    merged.trim(config.max_counterexamples);
    for p in &plan.properties {
        merged.properties.entry(p.id().to_owned()).or_default();
    }

    Ok(SweepReport {
        format: SWEEP_FORMAT,
        generator: GENERATOR,
        config: config.clone(),
        passed: merged.counterexamples.is_empty(),
        instances: merged.instances,
        census: merged.census,
        properties: merged.properties,
        counterexamples: merged.counterexamples,
        elapsed: started.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    struct EverythingAssociative;

    impl Property for EverythingAssociative {
        fn id(&self) -> &str {
            "everything_is_associative"
        }

        fn suite(&self) -> Suite {
            Suite::Identities
        }

        fn applies_to(&self, source: Source) -> bool {
            source == Source::Exhaustive
        }

        fn check(&self, instance: &Instance) -> Outcome {
            let g = &instance.groupoid;
            match g.first_non_associative_triple() {
                None => Outcome::Holds,
                Some((x, y, z)) => Outcome::fails(vec![x, y, z], "not associative"),
            }
        }
    }

    fn small() -> SweepConfig {
        SweepConfig {
            max_exhaustive_order: 2,
            samples: 300,
            spec_limits: Some(SpecLimits::new(2, 2)),
            ..SweepConfig::default()
        }
    }

    #[test]
    fn goldens_only_confirms_the_examples() {
        let report = run_sweep(&SweepConfig::goldens_only()).unwrap();
        assert!(report.passed);
        assert_eq!(report.instances, BTreeMap::from([(Source::Golden, 3)]));
        assert_eq!(report.properties["example_one_facts"].held, 1);
        assert_eq!(report.properties["example_two_facts"].held, 1);
        assert_eq!(report.properties["negation_twist_is_determined"].held, 1);
    }

    #[test]
    fn small_sweep_passes() {
        let report = run_sweep(&small()).unwrap();
        assert!(report.passed, "{}", report.to_text());
        assert_eq!(report.instances[&Source::Exhaustive], 17);
        assert_eq!(report.instances[&Source::Sampled], 300);
        assert!(report.properties.values().all(|c| c.failed == 0));
    }

    #[test]
    fn corrupted_property_is_reported() {
        let config = SweepConfig { max_counterexamples: 3, ..small() };
        let report = run_sweep_with(&config, &[&EverythingAssociative]).unwrap();
        assert!(!report.passed);
        let counts = report.properties["everything_is_associative"];
        // 1 of 1 order-1 tables and 8 of 16 order-2 tables are associative
        assert_eq!(counts.held, 9);
        assert_eq!(counts.failed, 8);
        assert_eq!(report.counterexamples.len(), 3);
        assert!(report.counterexamples.windows(2).all(|w| w[0].key() <= w[1].key()));
    }

    #[test]
    fn report_is_independent_of_thread_count() {
        let reports: Vec<String> = [1, 2, 8]
            .into_iter()
            .map(|jobs| run_sweep(&SweepConfig { jobs, ..small() }).unwrap().to_json())
            .collect();
        assert_eq!(reports[0], reports[1]);
        assert_eq!(reports[0], reports[2]);
        assert!(!reports[0].contains("elapsed"));
        assert!(!reports[0].contains("jobs"));
    }

    #[test]
    fn invalid_configs_are_refused() {
        let big = SweepConfig { max_exhaustive_order: 4, ..SweepConfig::default() };
        assert!(matches!(run_sweep(&big), Err(Error::OrderTooLarge { order: 4, limit: 3 })));
        let limits = SweepConfig { spec_limits: Some(SpecLimits::new(4, 4)), ..SweepConfig::default() };
        assert!(matches!(run_sweep(&limits), Err(Error::LimitsTooLarge(_))));
    }
}

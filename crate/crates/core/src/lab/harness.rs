use rayon::prelude::*;
use serde::Serialize;

use super::{
    alpha2_enumerate, alpha2_random, half_clique_check, property_battery_with, BatteryOptions,
    LabError, PropertyReport,
};
use crate::budget::Budget;
use crate::graph::{parse_graph6, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSource {
    /// All labelled α ≤ 2 graphs on n ≤ 7 vertices.
    Enumerate { n: usize },
    /// `count` graphs from [`alpha2_random`] with seeds `seed, seed + 1, ...`.
    Random { n: usize, count: usize },
    /// Externally supplied graphs; those with α ≥ 3 are counted and dropped.
    Stream(Vec<Graph>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HarnessConfig {
    pub budget: Budget,
    pub seed: u64,
    /// Worker threads; 0 uses the rayon default.
    pub workers: usize,
    pub full_battery: bool,
    /// Run the K_⌈n/2⌉ check on every admitted graph, not only on survivors.
    pub check_all: bool,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        HarnessConfig {
            budget: Budget::default(),
            seed: 0,
            workers: 0,
            full_battery: false,
            check_all: true,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct VerdictTally {
    pub holds: usize,
    pub fails: usize,
    pub budget: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Survivor {
    pub graph6: String,
    pub report: PropertyReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub source: String,
    pub config: HarnessConfig,
    pub examined: usize,
    /// Stream graphs dropped for having an independent triple.
    pub rejected_alpha: usize,
    /// Graphs the property battery did not exclude.
    pub survivors: Vec<Survivor>,
    pub half_clique: VerdictTally,
    /// graph6 of every graph with a "fails" check result.
    pub half_clique_fails: Vec<String>,
    /// graph6 of every graph whose check ran out of budget.
    pub half_clique_budget: Vec<String>,
}

impl SearchReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Re-parses every survivor and re-runs the full battery on it.
    pub fn survivors_reverify(&self, budget: Budget) -> bool {
        self.survivors
            .iter()
            .all(|s| match parse_graph6(&s.graph6) {
                Ok(g) => {
                    !property_battery_with(&g, &BatteryOptions { budget, full: true }).excluded
                }
                Err(_) => false,
            })
    }

    pub fn summary_table(&self) -> String {
        let rows = [
            ("source", self.source.clone()),
            ("examined", self.examined.to_string()),
            ("rejected (alpha >= 3)", self.rejected_alpha.to_string()),
            ("survivors", self.survivors.len().to_string()),
            ("half-clique holds", self.half_clique.holds.to_string()),
            ("half-clique fails", self.half_clique.fails.to_string()),
            ("half-clique budget", self.half_clique.budget.to_string()),
        ];
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        rows.iter()
            .map(|(k, v)| format!("{k:<width$}  {v}\n"))
            .collect()
    }
}

struct Record {
    graph6: String,
    report: PropertyReport,
    verdict: Option<&'static str>,
}

/// Runs the battery and the K_⌈n/2⌉ check over a graph source on a worker
/// pool. Results are collected in source order, so the report depends only
/// on the source and the configuration.
pub fn search_harness(
    source: GraphSource,
    config: &HarnessConfig,
) -> Result<SearchReport, LabError> {
    let (label, graphs, rejected_alpha) = match source {
        GraphSource::Enumerate { n } => (
            format!("enumerate n={n}"),
            alpha2_enumerate(n)?.collect::<Vec<_>>(),
            0,
        ),
        GraphSource::Random { n, count } => {
            let graphs = (0..count as u64)
                .map(|i| alpha2_random(n, config.seed.wrapping_add(i)))
                .collect::<Result<Vec<_>, _>>()?;
            (format!("random n={n} count={count}"), graphs, 0)
        }
        GraphSource::Stream(graphs) => {
            let total = graphs.len();
            let admitted: Vec<Graph> = graphs
                .into_iter()
                .filter(Graph::has_alpha_at_most_two)
                .collect();
            let rejected = total - admitted.len();
            (format!("stream graphs={total}"), admitted, rejected)
        }
    };
    let battery = BatteryOptions {
        budget: config.budget,
        full: config.full_battery,
    };
    let work = |g: &Graph| {
        let report = property_battery_with(g, &battery);
        let verdict = (config.check_all || !report.excluded).then(|| {
            match half_clique_check(g, config.budget) {
                Ok(v) => v.label(),
                Err(_) => unreachable!("graphs are admitted with α ≤ 2"),
            }
        });
        Record {
            graph6: report.graph6.clone(),
            report,
            verdict,
        }
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .expect("thread pool");
    let records: Vec<Record> = pool.install(|| graphs.par_iter().map(work).collect());

    let mut report = SearchReport {
        source: label,
        config: config.clone(),
        examined: records.len(),
        rejected_alpha,
        survivors: Vec::new(),
        half_clique: VerdictTally::default(),
        half_clique_fails: Vec::new(),
        half_clique_budget: Vec::new(),
    };
    for r in records {
        match r.verdict {
            Some("holds") => report.half_clique.holds += 1,
            Some("fails") => {
                report.half_clique.fails += 1;
                report.half_clique_fails.push(r.graph6.clone());
            }
            Some(_) => {
                report.half_clique.budget += 1;
                report.half_clique_budget.push(r.graph6.clone());
            }
            None => {}
        }
        if !r.report.excluded {
            report.survivors.push(Survivor {
                graph6: r.graph6,
                report: r.report,
            });
        }
    }
    Ok(report)
}

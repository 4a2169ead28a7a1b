//! Sweeps over every cubic graph up to a given order.
//!
//! Each graph is classified once (word search, twins, connectivity,
//! primality) into a [`GraphRecord`]; the individual reports are views over
//! the same [`CubicSurvey`].

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::{assemble_disconnected, connected_cubic_classes, to_graph6, Counterexample, LabError, VerificationReport};
use crate::graph::{standard_graph, CanonicalKey, Connectivity, Graph, StandardGraph};
use crate::recognition::{obstruction_free, verify_realization, Recognizer, DEFAULT_ORBIT_CAP};
use crate::splits::is_prime;

pub const DEFAULT_N_MAX: usize = 12;

#[derive(Debug, Clone, Copy)]
pub struct SweepOptions {
    pub n_max: usize,
    /// Rejected connected graphs up to this order are re-checked by the
    /// obstruction search.
    pub cross_check_up_to: usize,
    pub orbit_cap: usize,
}

impl SweepOptions {
    pub fn new(n_max: usize) -> Self {
        SweepOptions { n_max, cross_check_up_to: n_max, orbit_cap: DEFAULT_ORBIT_CAP }
    }
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions::new(DEFAULT_N_MAX)
    }
}

/// Per-graph verdicts; also the CSV row format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphRecord {
    /// graph6 of the canonical form (disconnected graphs: of the assembly).
    pub key: String,
    pub order: usize,
    pub components: usize,
    pub is_circle: bool,
    pub word: Option<String>,
    pub realization_verified: bool,
    /// `Some(true)` when the obstruction search confirmed a rejection.
    pub rejection_confirmed: Option<bool>,
    pub twin_couples: usize,
    pub connectivity: String,
    pub prime: bool,
    pub k4_or_k33: bool,
}

#[derive(Debug, Clone)]
pub struct CubicSurvey {
    pub options: SweepOptions,
    pub records: Vec<GraphRecord>,
    pub elapsed_ms: u128,
}

fn classify(g: &Graph, key: String, opts: &SweepOptions, specials: &[CanonicalKey]) -> Result<GraphRecord, LabError> {
    let recognizer = Recognizer { max_vertices: super::MAX_CUBIC_ORDER };
    let word = recognizer.recognize(g)?;
    let realization_verified = match &word {
        Some(w) => verify_realization(g, w)?,
        None => false,
    };
    let components = g.components().len();
    let rejection_confirmed = if word.is_none() && components == 1 && g.order() <= opts.cross_check_up_to {
        Some(!obstruction_free(g, opts.orbit_cap)?.verdict)
    } else {
        None
    };
    let connectivity = g.connectivity_class();
    Ok(GraphRecord {
        key,
        order: g.order(),
        components,
        is_circle: word.is_some(),
        word: word.map(|w| w.render()),
        realization_verified,
        rejection_confirmed,
        twin_couples: g.disjoint_twin_pair_couples(),
        connectivity: connectivity.name().to_owned(),
        prime: is_prime(g)?,
        k4_or_k33: components == 1 && specials.contains(&g.canonical_key()?),
    })
}

fn check_range(n_max: usize) -> Result<(), LabError> {
    if n_max % 2 == 1 || !(super::MIN_CUBIC_ORDER..=super::MAX_CUBIC_ORDER).contains(&n_max) {
        return Err(LabError::BadOrder(n_max));
    }
    Ok(())
}

/// Classify every cubic graph on at most `n_max` vertices: all connected
/// classes, then every disjoint union of them with at least two components.
pub fn survey_cubic(opts: SweepOptions) -> Result<CubicSurvey, LabError> {
    check_range(opts.n_max)?;
    let start = Instant::now();
    let specials = [
        standard_graph(StandardGraph::Complete(4))?.canonical_key()?,
        standard_graph(StandardGraph::CompleteBipartite(3, 3))?.canonical_key()?,
    ];
    let mut connected: Vec<(CanonicalKey, Graph)> = Vec::new();
    for n in (super::MIN_CUBIC_ORDER..=opts.n_max).step_by(2) {
        connected.extend(connected_cubic_classes(n)?);
    }
    let mut records: Vec<GraphRecord> = connected
        .par_iter()
        .map(|(k, g)| classify(g, to_graph6(&k.to_graph()), &opts, &specials))
        .collect::<Result<_, _>>()?;

    let mut unions: Vec<Vec<usize>> = Vec::new();
    collect_unions(&connected, opts.n_max, 0, &mut Vec::new(), &mut unions);
    let graphs: Vec<Graph> = unions
        .iter()
        .map(|pick| assemble_disconnected(&pick.iter().map(|&i| connected[i].1.clone()).collect::<Vec<_>>()))
        .collect::<Result<_, _>>()?;
    let disconnected: Vec<GraphRecord> = graphs
        .par_iter()
        .map(|g| classify(g, to_graph6(g), &opts, &specials))
        .collect::<Result<_, _>>()?;
    records.extend(disconnected);
    records.sort_by(|a, b| (a.order, a.components, &a.key).cmp(&(b.order, b.components, &b.key)));
    Ok(CubicSurvey { options: opts, records, elapsed_ms: start.elapsed().as_millis() })
}

/// Multisets of at least two connected classes with total order `<= left`.
fn collect_unions(pool: &[(CanonicalKey, Graph)], left: usize, from: usize, picked: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if picked.len() >= 2 {
        out.push(picked.clone());
    }
    for i in from..pool.len() {
        if pool[i].1.order() <= left {
            picked.push(i);
            collect_unions(pool, left - pool[i].1.order(), i, picked, out);
            picked.pop();
        }
    }
}

impl CubicSurvey {
    pub fn circle_records(&self) -> impl Iterator<Item = &GraphRecord> {
        self.records.iter().filter(|r| r.is_circle)
    }

    /// Report skeleton plus the recognizer soundness checks shared by every
    /// sweep.
    fn base_report(&self, property: &str) -> VerificationReport {
        let mut report = VerificationReport::new(property, super::MIN_CUBIC_ORDER, self.options.n_max);
        report.graphs_examined = self.records.len();
        report.circle_graphs = self.circle_records().count();
        let mut verified = 0;
        let mut confirmed = 0;
        for r in &self.records {
            if r.is_circle {
                if r.realization_verified {
                    verified += 1;
                } else {
                    report.counterexamples.push(self.counterexample(r, "realization", "word does not realize the graph"));
                }
            }
            match r.rejection_confirmed {
                Some(true) => confirmed += 1,
                Some(false) => report.counterexamples.push(self.counterexample(
                    r,
                    "recognizer-agreement",
                    "word search failed but no obstruction was found",
                )),
                None => {}
            }
        }
        report.verdicts.insert("realization_verified".into(), verified);
        report.verdicts.insert("rejection_confirmed".into(), confirmed);
        report.verdicts.insert("connected_examined".into(), self.records.iter().filter(|r| r.components == 1).count());
        report
    }

    fn counterexample(&self, r: &GraphRecord, property: &str, detail: &str) -> Counterexample {
        Counterexample { graph6: r.key.clone(), property: property.into(), detail: detail.into() }
    }

    pub fn twin_report(&self) -> VerificationReport {
        let mut report = self.base_report("twin-theorem");
        let mut pass = 0;
        for r in self.circle_records() {
            if r.twin_couples >= 1 {
                pass += 1;
            } else {
                report.counterexamples.push(self.counterexample(r, "two-disjoint-twin-pairs", "fewer than two disjoint twin pairs"));
            }
        }
        report.verdicts.insert("two_disjoint_twin_pairs".into(), pass);
        report.finish(Instant::now());
        report.wall_time_ms = self.elapsed_ms;
        report
    }

    pub fn no_prime_report(&self) -> VerificationReport {
        let mut report = self.base_report("no-prime");
        let mut pass = 0;
        for r in self.circle_records() {
            if !r.prime {
                pass += 1;
            } else {
                report.counterexamples.push(self.counterexample(r, "not-prime", "prime cubic circle graph"));
            }
        }
        report.verdicts.insert("not_prime".into(), pass);
        report.finish(Instant::now());
        report.wall_time_ms = self.elapsed_ms;
        report
    }

    pub fn three_connected_report(&self) -> VerificationReport {
        let mut report = self.base_report("three-connected-classification");
        let three = Connectivity::ThreeConnectedOrMore.name();
        let mut allowed = 0;
        let mut not_three = 0;
        for r in self.circle_records() {
            if r.connectivity != three {
                not_three += 1;
            } else if r.k4_or_k33 {
                allowed += 1;
            } else {
                report.counterexamples.push(self.counterexample(
                    r,
                    "three-connected-is-k4-or-k33",
                    "3-connected cubic circle graph other than K4 and K3,3",
                ));
            }
        }
        // both exceptional classes must actually show up as 3-connected
        let expected = match self.options.n_max {
            n if n >= 6 => 2,
            _ => 1,
        };
        if allowed != expected {
            report.counterexamples.push(Counterexample {
                graph6: String::new(),
                property: "three-connected-is-k4-or-k33".into(),
                detail: format!("expected {expected} 3-connected exceptional classes, found {allowed}"),
            });
        }
        report.verdicts.insert("three_connected_k4_or_k33".into(), allowed);
        report.verdicts.insert("not_three_connected".into(), not_three);
        report.finish(Instant::now());
        report.wall_time_ms = self.elapsed_ms;
        report
    }
}

pub fn verify_twin_theorem(n_max: usize) -> Result<VerificationReport, LabError> {
    Ok(survey_cubic(SweepOptions::new(n_max))?.twin_report())
}

pub fn verify_no_prime(n_max: usize) -> Result<VerificationReport, LabError> {
    Ok(survey_cubic(SweepOptions::new(n_max))?.no_prime_report())
}

pub fn verify_three_connected_classification(n_max: usize) -> Result<VerificationReport, LabError> {
    Ok(survey_cubic(SweepOptions::new(n_max))?.three_connected_report())
}

//! Exhaustive extremal surveys over isomorphism classes.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::augment::{enumerate_dense, ShardSpec, ENUMERATION_LIMIT};
use super::canon::{canon_dense, CanonicalCertificate};
use super::dense::Dense;
use crate::constructions::Built;
use crate::metrics::{digraph_radii, radius_diameter, wiener, wiener_digraph};
use crate::Error;

/// Largest order of the out-radius-1 digraph survey.
pub const OUTRADIUS1_LIMIT: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SurveyMode {
    /// Minimum total distance over graphs of order `n` and radius `r`.
    MinWiener,
    /// Maximum total distance over graphs of order `n` and radius `r`.
    MaxWiener,
    /// Maximum total distance over digraphs of order `n` and out-radius 1.
    OutRadiusOneMax,
}

impl SurveyMode {
    pub fn name(self) -> &'static str {
        match self {
            SurveyMode::MinWiener => "min-wiener",
            SurveyMode::MaxWiener => "max-wiener",
            SurveyMode::OutRadiusOneMax => "outradius1-max",
        }
    }

    fn better(self, a: u64, b: u64) -> bool {
        match self {
            SurveyMode::MinWiener => a < b,
            _ => a > b,
        }
    }
}

/// One extremal class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extremal {
    pub certificate: CanonicalCertificate,
    pub representative: Built,
}

/// Outcome of a survey or of one shard of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurveyReport {
    pub mode: SurveyMode,
    pub n: usize,
    /// Radius asked for; `None` for the out-radius-1 survey.
    pub r: Option<usize>,
    /// `None` when no (di)graph has the requested parameters.
    pub optimum: Option<u64>,
    /// Sorted by certificate.
    pub extremal: Vec<Extremal>,
    /// Isomorphism classes looked at; labelled digraphs for the
    /// out-radius-1 survey.
    pub examined: u64,
    /// How many of those had the requested radius.
    pub feasible: u64,
}

impl SurveyReport {
    fn empty(mode: SurveyMode, n: usize, r: Option<usize>) -> Self {
        SurveyReport {
            mode,
            n,
            r,
            optimum: None,
            extremal: Vec::new(),
            examined: 0,
            feasible: 0,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.optimum.is_none()
    }

    /// True when every extremal representative is a forest (a tree, since
    /// all are connected).
    pub fn extremal_are_trees(&self) -> bool {
        self.extremal.iter().all(|e| match &e.representative {
            Built::Graph(g) => g.is_forest(),
            Built::Digraph(_) => false,
        })
    }

    /// Combines reports for disjoint parts of the same survey.
    pub fn merge(mut self, other: SurveyReport) -> Result<SurveyReport, Error> {
        if (self.mode, self.n, self.r) != (other.mode, other.n, other.r) {
            return Err(Error::Domain("merging reports of different surveys"));
        }
        self.examined += other.examined;
        self.feasible += other.feasible;
        match (self.optimum, other.optimum) {
            (_, None) => {}
            (None, Some(_)) => {
                self.optimum = other.optimum;
                self.extremal = other.extremal;
            }
            (Some(a), Some(b)) => {
                if self.mode.better(b, a) {
                    self.optimum = Some(b);
                    self.extremal = other.extremal;
                } else if a == b {
                    self.extremal.extend(other.extremal);
                    self.extremal
                        .sort_by(|x, y| x.certificate.cmp(&y.certificate));
                    self.extremal
                        .dedup_by(|x, y| x.certificate == y.certificate);
                }
            }
        }
        Ok(self)
    }

    /// Recomputes the radius and total distance of every representative
    /// with the general-purpose metrics and checks them against the report.
    pub fn reverify(&self) -> bool {
        let Some(opt) = self.optimum else {
            return self.extremal.is_empty();
        };
        self.extremal
            .iter()
            .all(|e| match (&e.representative, self.mode) {
                (Built::Graph(g), SurveyMode::MinWiener | SurveyMode::MaxWiener) => {
                    wiener(g).finite() == Some(opt)
                        && radius_diameter(g).0.map(|r| r as usize) == self.r
                }
                (Built::Digraph(d), SurveyMode::OutRadiusOneMax) => {
                    wiener_digraph(d).finite() == Some(opt)
                        && digraph_radii(d).out_radius == Some(1)
                }
                _ => false,
            })
    }
}

struct Tracker {
    mode: SurveyMode,
    best: Option<u64>,
    found: BTreeMap<CanonicalCertificate, Dense>,
}

impl Tracker {
    fn new(mode: SurveyMode) -> Self {
        Tracker {
            mode,
            best: None,
            found: BTreeMap::new(),
        }
    }

    /// Whether `value` could still be extremal.
    fn admits(&self, value: u64) -> bool {
        match self.best {
            None => true,
            Some(b) => value == b || self.mode.better(value, b),
        }
    }

    fn offer(&mut self, value: u64, cert: CanonicalCertificate, g: &Dense) {
        if !self.admits(value) {
            return;
        }
        if self.best != Some(value) {
            self.best = Some(value);
            self.found.clear();
        }
        self.found.entry(cert).or_insert(*g);
    }

    fn finish(self, mut report: SurveyReport) -> SurveyReport {
        report.optimum = self.best;
        report.extremal = self
            .found
            .into_iter()
            .map(|(certificate, g)| Extremal {
                certificate,
                representative: if g.is_directed() {
                    Built::Digraph(g.to_digraph())
                } else {
                    Built::Graph(g.to_graph())
                },
            })
            .collect();
        report
    }
}

fn radius_survey(
    mode: SurveyMode,
    n: usize,
    r: usize,
    shard: &ShardSpec,
) -> Result<SurveyReport, Error> {
    if n == 0 || n > ENUMERATION_LIMIT {
        return Err(Error::OrderTooLarge {
            order: n,
            limit: ENUMERATION_LIMIT,
        });
    }
    shard.validate()?;
    let report = SurveyReport::empty(mode, n, Some(r));
    // A graph of radius r >= 1 has at least 2r vertices.
    if r == 0 || n < 2 * r {
        return Ok(report);
    }
    let mut tracker = Tracker::new(mode);
    let mut feasible = 0;
    let examined = enumerate_dense(n, shard, |g, c| {
        let Some((w, rad)) = g.graph_wiener_radius() else {
            return;
        };
        if rad as usize != r {
            return;
        }
        feasible += 1;
        if tracker.admits(w) {
            tracker.offer(w, c.certificate(g), g);
        }
    })?;
    let mut report = tracker.finish(report);
    report.examined = examined;
    report.feasible = feasible;
    Ok(report)
}

/// Minimum total distance over graphs of order `n` and radius `r`, with
/// every extremal class. Needs `r >= 3` and `n <= 10`; `n < 2r` gives an
/// empty report.
pub fn min_wiener_radius_survey(
    n: usize,
    r: usize,
    shard: &ShardSpec,
) -> Result<SurveyReport, Error> {
    if r < 3 {
        return Err(Error::Domain("the minimum survey needs r >= 3"));
    }
    radius_survey(SurveyMode::MinWiener, n, r, shard)
}

/// Maximum total distance over graphs of order `n` and radius `r`, with
/// every extremal class. Infeasible radii give an empty report.
pub fn max_wiener_radius_survey(
    n: usize,
    r: usize,
    shard: &ShardSpec,
) -> Result<SurveyReport, Error> {
    radius_survey(SurveyMode::MaxWiener, n, r, shard)
}

/// Maximum total distance over digraphs of order `n` with out-radius 1.
///
/// Vertex 0 is fixed as a centre with arcs to every other vertex, and the
/// remaining `(n-1)^2` possible arcs are enumerated. Shards split the arc
/// masks by residue.
pub fn max_wiener_outradius1_survey(n: usize, shard: &ShardSpec) -> Result<SurveyReport, Error> {
    if n == 0 || n > OUTRADIUS1_LIMIT {
        return Err(Error::OrderTooLarge {
            order: n,
            limit: OUTRADIUS1_LIMIT,
        });
    }
    shard.validate()?;
    let mut report = SurveyReport::empty(SurveyMode::OutRadiusOneMax, n, None);
    if n < 2 || shard.ids.is_empty() {
        return Ok(report);
    }
    let free: Vec<(usize, usize)> = (1..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect();
    let mut base = Dense::new(n, true);
    for v in 1..n {
        base.add_arc(0, v);
    }
    let mut tracker = Tracker::new(SurveyMode::OutRadiusOneMax);
    let mut examined = 0;
    let mut feasible = 0;
    for mask in 0u64..1 << free.len() {
        if !shard.owns(mask) {
            continue;
        }
        examined += 1;
        let mut d = base;
        for (b, &(u, v)) in free.iter().enumerate() {
            if mask >> b & 1 == 1 {
                d.add_arc(u, v);
            }
        }
        let Some(w) = d.digraph_wiener() else {
            continue;
        };
        feasible += 1;
        if tracker.admits(w) {
            let c = canon_dense(&d);
            tracker.offer(w, c.certificate(&d), &d);
        }
    }
    report = tracker.finish(report);
    report.examined = examined;
    report.feasible = feasible;
    Ok(report)
}

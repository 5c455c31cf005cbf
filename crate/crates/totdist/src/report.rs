//! JSON documents for metrics, surveys and chord searches, and the CSV
//! tables of average distances.
//!
//! Every document carries `schema_version` and echoes its configuration.
//! Nothing time-dependent is written, so repeated runs are byte-identical.

use std::collections::BTreeMap;

use serde::ser::Serializer;
use serde::Serialize;

use totdist_core::constructions::{
    max_rad_construction, min_rad_construction, Built, ConstructionSpec, D_nrs, Figure, G_nrs,
};
use totdist_core::formulas::{choose2, maxradplus_construction_wiener, min_rad_lower_bound};
use totdist_core::metrics::{
    digraph_metrics, digraph_radii, graph_metrics, radius_diameter, wiener, wiener_digraph,
};
use totdist_core::search::{
    canonical_labelling, max_wiener_radius_survey, ChordSearch, ShardSpec, SurveyReport,
};
use totdist_core::{Error, Wiener};

use crate::codec::{encode, json::SCHEMA_VERSION};

/// A distance that may be infinite; serialized as a number or `"infinite"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extended {
    Finite(u64),
    Infinite,
}

impl Serialize for Extended {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Extended::Finite(v) => s.serialize_u64(*v),
            Extended::Infinite => s.serialize_str("infinite"),
        }
    }
}

impl From<Wiener> for Extended {
    fn from(w: Wiener) -> Self {
        match w {
            Wiener::Finite(v) => Extended::Finite(v),
            Wiener::Infinite => Extended::Infinite,
        }
    }
}

impl From<Option<u32>> for Extended {
    fn from(v: Option<u32>) -> Self {
        v.map_or(Extended::Infinite, |x| Extended::Finite(u64::from(x)))
    }
}

fn extended(v: &[Option<u32>]) -> Vec<Extended> {
    v.iter().map(|&x| x.into()).collect()
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum MetricsDoc {
    Graph {
        schema_version: u32,
        order: usize,
        directed: bool,
        size: usize,
        wiener: Extended,
        radius: Extended,
        diameter: Extended,
        eccentricities: Vec<Extended>,
    },
    Digraph {
        schema_version: u32,
        order: usize,
        directed: bool,
        size: usize,
        wiener: Extended,
        out_radius: Extended,
        in_radius: Extended,
        doubled_radius: Extended,
        out_eccentricities: Vec<Extended>,
        in_eccentricities: Vec<Extended>,
    },
}

pub fn metrics_doc(b: &Built) -> MetricsDoc {
    match b {
        Built::Graph(g) => {
            let m = graph_metrics(g);
            MetricsDoc::Graph {
                schema_version: SCHEMA_VERSION,
                order: m.order,
                directed: false,
                size: m.size,
                wiener: m.wiener.into(),
                radius: m.radius.into(),
                diameter: m.diameter.into(),
                eccentricities: extended(&m.eccentricities),
            }
        }
        Built::Digraph(d) => {
            let m = digraph_metrics(d);
            MetricsDoc::Digraph {
                schema_version: SCHEMA_VERSION,
                order: m.order,
                directed: true,
                size: m.size,
                wiener: m.wiener.into(),
                out_radius: m.radii.out_radius.into(),
                in_radius: m.radii.in_radius.into(),
                doubled_radius: m.radii.doubled_radius.into(),
                out_eccentricities: extended(&m.eccentricities.out),
                in_eccentricities: extended(&m.eccentricities.inward),
            }
        }
    }
}

/// The same (di)graph with vertices in canonical order, so the encoding only
/// depends on the isomorphism class.
pub fn canonical_relabel(b: &Built) -> Result<Built, Error> {
    let lab = match b {
        Built::Graph(g) => canonical_labelling(g)?,
        Built::Digraph(d) => canonical_labelling(d)?,
    };
    let mut perm = vec![0; lab.order.len()];
    for (i, &v) in lab.order.iter().enumerate() {
        perm[v] = i;
    }
    Ok(match b {
        Built::Graph(g) => Built::Graph(g.relabel(&perm)?),
        Built::Digraph(d) => Built::Digraph(d.relabel(&perm)?),
    })
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SurveyConfig {
    pub mode: &'static str,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    pub shards: usize,
}

#[derive(Debug, Serialize)]
pub struct ExtremalDoc {
    pub certificate: String,
    /// graph6 or digraph6 of the canonically labelled representative.
    pub representative: String,
}

#[derive(Debug, Serialize)]
pub struct SurveyDoc {
    pub schema_version: u32,
    pub config: SurveyConfig,
    /// `"ok"`, or `"empty"` when nothing has the requested parameters.
    pub status: &'static str,
    pub optimum: Option<u64>,
    pub examined: u64,
    pub feasible: u64,
    pub extremal: Vec<ExtremalDoc>,
}

pub fn survey_doc(report: &SurveyReport, shards: usize) -> Result<SurveyDoc, Error> {
    let extremal = report
        .extremal
        .iter()
        .map(|e| {
            Ok(ExtremalDoc {
                certificate: e.certificate.to_string(),
                representative: encode(&canonical_relabel(&e.representative)?),
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(SurveyDoc {
        schema_version: SCHEMA_VERSION,
        config: SurveyConfig {
            mode: report.mode.name(),
            n: report.n,
            r: report.r,
            shards,
        },
        status: if report.is_empty() { "empty" } else { "ok" },
        optimum: report.optimum,
        examined: report.examined,
        feasible: report.feasible,
        extremal,
    })
}

#[derive(Debug, Serialize)]
pub struct PolynomialDoc {
    pub a2: i128,
    pub a1: i128,
    pub a0: i128,
    pub text: String,
}

#[derive(Debug, Serialize)]
pub struct ChordResultDoc {
    /// 1-based `[i, j]` for the chord `u_i -> u_j`.
    pub chords: Vec<[usize; 2]>,
    pub polynomial: PolynomialDoc,
    pub rank: usize,
    pub contains_closing_arc: bool,
    pub conjectured: bool,
    pub certificate: String,
    /// digraph6 at order `2r + 1`.
    pub digraph6: String,
}

#[derive(Debug, Serialize)]
pub struct ChordDoc {
    pub schema_version: u32,
    pub config: BTreeMap<&'static str, usize>,
    pub selected_k: usize,
    pub best_by_k: Vec<Option<PolynomialDoc>>,
    pub results: Vec<ChordResultDoc>,
}

fn poly_doc(p: &totdist_core::search::WienerPolynomial) -> PolynomialDoc {
    PolynomialDoc {
        a2: p.a2,
        a1: p.a1,
        a0: p.a0,
        text: p.to_string(),
    }
}

pub fn chord_doc(s: &ChordSearch) -> Result<ChordDoc, Error> {
    let results = s
        .results
        .iter()
        .map(|x| {
            let spec = ConstructionSpec::ChordAugmented {
                n: 2 * s.r + 1,
                r: s.r,
                chords: x.chords.clone(),
            };
            Ok(ChordResultDoc {
                chords: x.chords.iter().map(|&(i, j)| [i, j]).collect(),
                polynomial: poly_doc(&x.polynomial),
                rank: x.rank,
                contains_closing_arc: x.contains_closing_arc,
                conjectured: x.conjectured,
                certificate: x.certificate.to_string(),
                digraph6: encode(&spec.build()?),
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(ChordDoc {
        schema_version: SCHEMA_VERSION,
        config: BTreeMap::from([("r", s.r)]),
        selected_k: s.selected_k,
        best_by_k: s
            .best_by_k
            .iter()
            .map(|b| b.as_ref().map(poly_doc))
            .collect(),
        results,
    })
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("plain data");
    s.push('\n');
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Table {
    /// Minimum and maximum average distance of graphs with given radius.
    Graphs,
    /// Minimum and maximum average distance of digraphs with given
    /// out-radius or radius.
    Digraphs,
}

/// Orders up to this size get the exact maximum from enumeration.
pub const TABLE_SURVEY_LIMIT: usize = 9;

/// `num / den` rounded half up to six decimals.
fn decimal(num: u128, den: u128) -> String {
    let scaled = (num * 1_000_000 * 2 + den) / (den * 2);
    format!("{}.{:06}", scaled / 1_000_000, scaled % 1_000_000)
}

fn cells(total: Option<u128>, pairs: u128) -> [String; 2] {
    match total {
        Some(w) => [w.to_string(), decimal(w, pairs)],
        None => [String::new(), String::new()],
    }
}

/// The table over every `(n, r)` in the grid, one row per pair. Columns
/// name where each number comes from; cells outside a family's domain are
/// left empty.
pub fn table_csv(
    table: Table,
    ns: impl IntoIterator<Item = usize> + Clone,
    rs: impl IntoIterator<Item = usize> + Clone,
) -> Result<String, Error> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let header: &[&str] = match table {
        Table::Graphs => &[
            "n",
            "r",
            "min_wiener[G_nrs:bfs]",
            "min_mu[G_nrs:bfs]",
            "max_wiener[survey:enumeration]",
            "max_mu[survey:enumeration]",
        ],
        Table::Digraphs => &[
            "n",
            "r",
            "outrad_min_wiener[D_nrs:bfs]",
            "outrad_min_mu[D_nrs:bfs]",
            "outrad_max_wiener[maxradplus:formula]",
            "outrad_max_mu[maxradplus:formula]",
            "rad_min_wiener[min-rad:bfs]",
            "rad_min_mu[min-rad:bfs]",
            "rad_min_bound[min-rad-bound:formula]",
            "rad_max_wiener[max-rad:bfs]",
            "rad_max_mu[max-rad:bfs]",
        ],
    };
    w.write_record(header).expect("in-memory writer");
    for n in ns {
        for r in rs.clone() {
            let mut row = vec![n.to_string(), r.to_string()];
            match table {
                Table::Graphs => {
                    let pairs = choose2(n as u64)? as u128;
                    let min = G_nrs(n, r, 1)
                        .ok()
                        .filter(|g| radius_diameter(g).0 == Some(r as u32))
                        .and_then(|g| wiener(&g).finite())
                        .map(u128::from);
                    row.extend(cells(min, pairs));
                    let max = if n <= TABLE_SURVEY_LIMIT {
                        max_wiener_radius_survey(n, r, &ShardSpec::all())?
                            .optimum
                            .map(u128::from)
                    } else {
                        None
                    };
                    row.extend(cells(max, pairs));
                }
                Table::Digraphs => {
                    let pairs = (n * n.saturating_sub(1)) as u128;
                    let bfs = |d: Option<totdist_core::Digraph>| {
                        d.and_then(|d| wiener_digraph(&d).finite()).map(u128::from)
                    };
                    row.extend(cells(bfs(D_nrs(n, r, 1).ok()), pairs));
                    let plus = maxradplus_construction_wiener(n as u64, r as u64)
                        .ok()
                        .map(|v| v as u128);
                    row.extend(cells(plus, pairs));
                    let min_rad = min_rad_construction(n, 2 * r)
                        .ok()
                        .filter(|d| digraph_radii(d).doubled_radius == Some(2 * r as u32));
                    row.extend(cells(bfs(min_rad), pairs));
                    row.push(
                        min_rad_lower_bound(n as u64, 2 * r as u64)
                            .map(|b| b.to_string())
                            .unwrap_or_default(),
                    );
                    row.extend(cells(bfs(max_rad_construction(n, r).ok()), pairs));
                }
            }
            w.write_record(&row).expect("in-memory writer");
        }
    }
    let bytes = w.into_inner().expect("in-memory writer");
    Ok(String::from_utf8(bytes).expect("ASCII"))
}

/// Figure digraphs by name, for the command line.
pub fn figure_by_name(name: &str, r: Option<usize>, variant: usize) -> Option<Figure> {
    Some(match name {
        "rad3-core" => Figure::RadThreeCore,
        "maxrad-chords" => Figure::MaxRadChords { r: r?, variant },
        "max-outradius" => Figure::MaxOutRadius { r: r? },
        "outradius1" => Figure::OutRadiusOne { variant },
        _ => return None,
    })
}

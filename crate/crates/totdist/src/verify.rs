//! Verification suites: closed forms against BFS on the construction
//! families, the figure digraphs, and codec roundtrips.
//!
//! The families are reached through [`Constructions`] so a test can swap in
//! a broken one and watch the suite name it.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use totdist_core::constructions::{
    figure_digraph, max_rad_chord_sets, min_rad_construction, Built, D_nrs, Figure, G_nrs,
};
use totdist_core::formulas::{
    digraph_max_arcs, eq1_wiener, eq2_wiener, maxradplus_construction_wiener, radplus1_max_wiener,
    residue_split, vizing_max_size,
};
use totdist_core::metrics::{
    all_pairs, digraph_radii, is_strongly_connected, radius_diameter, wiener, wiener_digraph,
};
use totdist_core::{Digraph, Error, Graph};

use crate::codec::{
    encode_digraph6, encode_graph6, parse_digraph6, parse_graph6, read_json_edges, write_json_edges,
};

pub type GraphFamily = fn(usize, usize, usize) -> Result<Graph, Error>;
pub type DigraphFamily = fn(usize, usize, usize) -> Result<Digraph, Error>;
pub type FigureBuilder = fn(Figure, usize) -> Result<Digraph, Error>;

#[derive(Clone, Copy)]
pub struct Constructions {
    pub g_nrs: GraphFamily,
    pub d_nrs: DigraphFamily,
    pub figure: FigureBuilder,
}

impl Default for Constructions {
    fn default() -> Self {
        Constructions {
            g_nrs: G_nrs,
            d_nrs: D_nrs,
            figure: figure_digraph,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Eq1Sweep,
    Eq2Sweep,
    Increments,
    Sizes,
    Figures,
    Codecs,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Eq1Sweep,
        Suite::Eq2Sweep,
        Suite::Increments,
        Suite::Sizes,
        Suite::Figures,
        Suite::Codecs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Eq1Sweep => "eq1-sweep",
            Suite::Eq2Sweep => "eq2-sweep",
            Suite::Increments => "increments",
            Suite::Sizes => "sizes",
            Suite::Figures => "figures",
            Suite::Codecs => "codecs",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
                format!(
                    "unknown suite '{s}'; expected one of: {}, all",
                    names.join(", ")
                )
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub cases: u64,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} cases={}", self.suite, self.cases)?;
        if !self.passed() {
            write!(f, " failures={}", self.failures.len())?;
        }
        Ok(())
    }
}

struct Check {
    cases: u64,
    failures: Vec<String>,
}

impl Check {
    fn new() -> Self {
        Check {
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn case(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn error(&mut self, context: String, e: impl fmt::Display) {
        self.cases += 1;
        self.failures.push(format!("{context}: {e}"));
    }

    fn finish(self, suite: Suite) -> SuiteReport {
        SuiteReport {
            suite,
            cases: self.cases,
            failures: self.failures,
        }
    }
}

/// `(n, r, s)` with `lo <= r <= hi`, `2r <= n <= max_n` and `s` in its
/// valid range.
fn grid(r_range: std::ops::RangeInclusive<usize>, max_n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for r in r_range {
        for n in 2 * r..=max_n {
            for s in 1..=(n + 2 - 2 * r) / 2 {
                out.push((n, r, s));
            }
        }
    }
    out
}

pub fn graph_grid() -> Vec<(usize, usize, usize)> {
    grid(3..=8, 64)
}

pub fn digraph_grid() -> Vec<(usize, usize, usize)> {
    grid(3..=7, 40)
}

fn eq1_sweep(c: &Constructions) -> Check {
    let mut ch = Check::new();
    for (n, r, s) in graph_grid() {
        let tag = format!("G_nrs(n={n}, r={r}, s={s})");
        let g = match (c.g_nrs)(n, r, s) {
            Ok(g) => g,
            Err(e) => {
                ch.error(tag, e);
                continue;
            }
        };
        let expected = eq1_wiener(n as u64, r as u64).ok();
        let got = wiener(&g).finite().map(i128::from);
        ch.case(got.is_some() && got == expected, || {
            format!("{tag}: wiener {got:?}, formula {expected:?}")
        });
        let radius = radius_diameter(&g).0;
        ch.case(radius == Some(r as u32), || {
            format!("{tag}: radius {radius:?}")
        });
    }
    ch
}

fn eq2_sweep(c: &Constructions) -> Check {
    let mut ch = Check::new();
    for (n, r, s) in digraph_grid() {
        let tag = format!("D_nrs(n={n}, r={r}, s={s})");
        let d = match (c.d_nrs)(n, r, s) {
            Ok(d) => d,
            Err(e) => {
                ch.error(tag, e);
                continue;
            }
        };
        let expected = eq2_wiener(n as u64, r as u64).ok();
        let got = wiener_digraph(&d).finite().map(i128::from);
        ch.case(got.is_some() && got == expected, || {
            format!("{tag}: wiener {got:?}, formula {expected:?}")
        });
        let out_radius = digraph_radii(&d).out_radius;
        ch.case(out_radius == Some(r as u32), || {
            format!("{tag}: out-radius {out_radius:?}")
        });
        ch.case(is_strongly_connected(&d), || {
            format!("{tag}: not strongly connected")
        });
    }
    ch
}

fn increments(c: &Constructions) -> Check {
    let mut ch = Check::new();
    for (n, r, s) in graph_grid() {
        let step = (n - 1 + (r - 1) * (r - 1)) as i128;
        if s == 1 && n > 2 * r {
            let diff = eq1_wiener(n as u64, r as u64)
                .and_then(|a| Ok(a - eq1_wiener(n as u64 - 1, r as u64)?));
            ch.case(diff == Ok(step), || {
                format!("eq1 increment at n={n} r={r}: {diff:?}")
            });
        }
        // The last vertex sits in the second clique block, of size t.
        let t = n + 2 - 2 * r - s;
        if t < 2 {
            continue;
        }
        let tag = format!("G_nrs(n={n}, r={r}, s={s})");
        let pair = (c.g_nrs)(n, r, s).and_then(|g| {
            Ok((
                wiener(&g).finite(),
                wiener(&g.remove_vertex(n - 1)?).finite(),
            ))
        });
        match pair {
            Ok((Some(a), Some(b))) => {
                let got = a as i128 - b as i128;
                ch.case(got == step, || {
                    format!("{tag}: removing a blown vertex costs {got}, expected {step}")
                });
            }
            Ok(_) => ch.error(tag, "disconnected"),
            Err(e) => ch.error(tag, e),
        }
    }
    for (n, r, s) in digraph_grid() {
        let step = (2 * (n - 1) + (r - 1) * (r - 1)) as i128;
        if s == 1 && n > 2 * r {
            let diff = eq2_wiener(n as u64, r as u64)
                .and_then(|a| Ok(a - eq2_wiener(n as u64 - 1, r as u64)?));
            ch.case(diff == Ok(step), || {
                format!("eq2 increment at n={n} r={r}: {diff:?}")
            });
        }
        if n + 2 - 2 * r - s < 2 {
            continue;
        }
        let tag = format!("D_nrs(n={n}, r={r}, s={s})");
        let pair = (c.d_nrs)(n, r, s).and_then(|d| {
            Ok((
                wiener_digraph(&d).finite(),
                wiener_digraph(&d.remove_vertex(n - 1)?).finite(),
            ))
        });
        match pair {
            Ok((Some(a), Some(b))) => {
                let got = a as i128 - b as i128;
                ch.case(got == step, || {
                    format!("{tag}: removing a blown vertex costs {got}, expected {step}")
                });
            }
            Ok(_) => ch.error(tag, "not strongly connected"),
            Err(e) => ch.error(tag, e),
        }
    }
    ch
}

fn sizes(c: &Constructions) -> Check {
    let mut ch = Check::new();
    for (n, r, s) in graph_grid() {
        let tag = format!("G_nrs(n={n}, r={r}, s={s})");
        match (c.g_nrs)(n, r, s) {
            Ok(g) => {
                let expected = vizing_max_size(n as u64, r as u64).ok();
                let got = Some(g.edge_count() as i128);
                ch.case(got == expected, || {
                    format!("{tag}: {got:?} edges, formula {expected:?}")
                });
            }
            Err(e) => ch.error(tag, e),
        }
    }
    for (n, r, s) in digraph_grid() {
        let tag = format!("D_nrs(n={n}, r={r}, s={s})");
        match (c.d_nrs)(n, r, s) {
            Ok(d) => {
                let expected = digraph_max_arcs(n as u64, r as u64).ok();
                let got = Some(d.arc_count() as i128);
                ch.case(got == expected, || {
                    format!("{tag}: {got:?} arcs, formula {expected:?}")
                });
                if r == 3 {
                    let square = (n - 2) * (n - 2);
                    ch.case(d.arc_count() == square, || {
                        format!("{tag}: {} arcs, (n-2)^2 = {square}", d.arc_count())
                    });
                }
            }
            Err(e) => ch.error(tag, e),
        }
    }
    ch
}

/// `d(x, u) + d(u, x) = n - pr` for `x = pr + i` (`1 <= i <= r`) and every
/// `u` that is the centre or comes after `x` on the cycle.
pub fn max_outradius_pair_failures(d: &Digraph, r: usize) -> Result<Vec<(usize, usize)>, Error> {
    let n = d.order();
    let (q, _) = residue_split(n as u64, r as u64)?;
    let m = all_pairs(d);
    let mut bad = Vec::new();
    for p in 0..q as usize {
        for i in 1..=r {
            let x = p * r + i;
            for u in std::iter::once(0).chain(x + 1..n) {
                let sum = m
                    .get(x, u)
                    .zip(m.get(u, x))
                    .map(|(a, b)| a as usize + b as usize);
                if sum != Some(n - p * r) {
                    bad.push((x, u));
                }
            }
        }
    }
    Ok(bad)
}

fn figures(c: &Constructions) -> Check {
    let mut ch = Check::new();
    let build = |ch: &mut Check, fig: Figure, n: usize| match (c.figure)(fig, n) {
        Ok(d) => Some(d),
        Err(e) => {
            ch.error(format!("{}(n={n})", fig.name()), e);
            None
        }
    };

    if let Some(core) = build(&mut ch, Figure::RadThreeCore, 5) {
        let dr = digraph_radii(&core).doubled_radius;
        ch.case(core.arc_count() == 9 && dr == Some(6), || {
            format!(
                "rad3-core: {} arcs, doubled radius {dr:?}",
                core.arc_count()
            )
        });
    }
    if let Some(blown) = build(&mut ch, Figure::RadThreeCore, 20) {
        let ours = wiener_digraph(&blown).finite();
        let c4 = min_rad_construction(20, 6)
            .ok()
            .and_then(|d| wiener_digraph(&d).finite());
        let dr = digraph_radii(&blown).doubled_radius;
        ch.case(
            dr == Some(6) && ours.is_some() && c4.is_some() && ours < c4,
            || {
                format!(
                    "rad3-core(n=20): wiener {ours:?} vs C_4 blow-up {c4:?}, doubled radius {dr:?}"
                )
            },
        );
    }

    for r in 2..=5 {
        for n in 2 * r + 2..=2 * r + 20 {
            let tag = format!("max-outradius(n={n}, r={r})");
            let Some(d) = build(&mut ch, Figure::MaxOutRadius { r }, n) else {
                continue;
            };
            let expected = maxradplus_construction_wiener(n as u64, r as u64).ok();
            let got = wiener_digraph(&d).finite().map(i128::from);
            ch.case(got.is_some() && got == expected, || {
                format!("{tag}: wiener {got:?}, formula {expected:?}")
            });
            let out_radius = digraph_radii(&d).out_radius;
            ch.case(out_radius == Some(r as u32), || {
                format!("{tag}: out-radius {out_radius:?}")
            });
            match max_outradius_pair_failures(&d, r) {
                Ok(bad) => ch.case(bad.is_empty(), || {
                    format!("{tag}: pair sums off at {bad:?}")
                }),
                Err(e) => ch.error(tag, e),
            }
        }
    }

    for variant in 0..2 {
        for n in 4..=12 {
            let tag = format!("outradius1(n={n}, variant={variant})");
            let Some(d) = build(&mut ch, Figure::OutRadiusOne { variant }, n) else {
                continue;
            };
            let expected = radplus1_max_wiener(n as u64).ok();
            let got = wiener_digraph(&d).finite().map(i128::from);
            let out_radius = digraph_radii(&d).out_radius;
            ch.case(got == expected && out_radius == Some(1), || {
                format!(
                    "{tag}: wiener {got:?}, (n^3-n)/3 = {expected:?}, out-radius {out_radius:?}"
                )
            });
        }
    }

    for r in 2..=7 {
        for variant in 0..max_rad_chord_sets(r).len() {
            for n in 2 * r + 1..=2 * r + 4 {
                let Some(d) = build(&mut ch, Figure::MaxRadChords { r, variant }, n) else {
                    continue;
                };
                let dr = digraph_radii(&d).doubled_radius;
                ch.case(dr == Some(2 * r as u32), || {
                    format!("maxrad-chords(n={n}, r={r}, variant={variant}): doubled radius {dr:?}")
                });
            }
        }
    }
    ch
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let p: f64 = rng.gen();
    let mut g = Graph::new(n).expect("n >= 1");
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    g
}

fn random_digraph(rng: &mut ChaCha8Rng, n: usize) -> Digraph {
    let p: f64 = rng.gen();
    let mut d = Digraph::new(n).expect("n >= 1");
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                d.add_arc(u, v).expect("in range");
            }
        }
    }
    d
}

/// Number of random instances per format in the codec suite.
pub const CODEC_SAMPLES: usize = 10_000;

fn codecs(seed: u64) -> Check {
    let mut ch = Check::new();
    let k2 = Graph::from_edges(2, [(0, 1)]).expect("valid");
    ch.case(encode_graph6(&k2) == "A_", || {
        format!("K_2 encodes as {}", encode_graph6(&k2))
    });
    let e2 = Graph::new(2).expect("valid");
    ch.case(encode_graph6(&e2) == "A?", || {
        format!("empty 2-graph encodes as {}", encode_graph6(&e2))
    });

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..CODEC_SAMPLES {
        // A few instances take the long order form.
        let n = if i % 500 == 0 {
            rng.gen_range(63..=80)
        } else {
            rng.gen_range(1..=20)
        };
        let g = random_graph(&mut rng, n);
        let text = encode_graph6(&g);
        let ok =
            text.bytes().all(|b| (63..=126).contains(&b)) && parse_graph6(&text).as_ref() == Ok(&g);
        ch.case(ok, || format!("graph6 roundtrip failed for {text}"));
        let d = random_digraph(&mut rng, n);
        let text = encode_digraph6(&d);
        ch.case(parse_digraph6(&text).as_ref() == Ok(&d), || {
            format!("digraph6 roundtrip failed for {text}")
        });
        if i % 100 == 0 {
            let b = Built::Digraph(d);
            let back = read_json_edges(&write_json_edges(&b, None)).map(|j| j.graph);
            ch.case(back.as_ref() == Ok(&b), || {
                "JSON roundtrip failed".to_string()
            });
        }
    }
    ch
}

pub fn run_suite(suite: Suite, c: &Constructions, seed: u64) -> SuiteReport {
    let check = match suite {
        Suite::Eq1Sweep => eq1_sweep(c),
        Suite::Eq2Sweep => eq2_sweep(c),
        Suite::Increments => increments(c),
        Suite::Sizes => sizes(c),
        Suite::Figures => figures(c),
        Suite::Codecs => codecs(seed),
    };
    check.finish(suite)
}

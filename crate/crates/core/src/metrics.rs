//! Exact distances, Wiener index, eccentricities and radius variants.
//!
//! Distances are `u32` with [`UNREACHABLE`] as the sentinel. Anything summed
//! or maximised over an unreachable pair is reported as infinite
//! ([`Wiener::Infinite`], or `None` for eccentricities and radii) instead of
//! a saturated number.

use alloc::vec;
use alloc::vec::Vec;

use crate::bits::{BitIter, BitRows};
use crate::{Digraph, Error, Graph};

/// Marker stored in a [`DistanceMatrix`] for pairs with no path.
pub const UNREACHABLE: u32 = u32::MAX;

pub(crate) mod sealed {
    use crate::bits::BitRows;

    pub trait Sealed {
        fn bit_rows(&self) -> &BitRows;
    }

    impl Sealed for crate::Graph {
        fn bit_rows(&self) -> &BitRows {
            self.rows()
        }
    }

    impl Sealed for crate::Digraph {
        fn bit_rows(&self) -> &BitRows {
            self.rows()
        }
    }
}

/// Graphs and digraphs share the BFS machinery through this trait.
pub trait Topology: sealed::Sealed {
    fn order(&self) -> usize;
    fn is_directed(&self) -> bool;
}

impl Topology for Graph {
    fn order(&self) -> usize {
        Graph::order(self)
    }
    fn is_directed(&self) -> bool {
        false
    }
}

impl Topology for Digraph {
    fn order(&self) -> usize {
        Digraph::order(self)
    }
    fn is_directed(&self) -> bool {
        true
    }
}

fn bfs_into(rows: &BitRows, n: usize, source: usize, out: &mut [u32]) {
    let stride = rows.stride();
    out.fill(UNREACHABLE);
    out[source] = 0;
    let mut visited = vec![0u64; stride];
    let mut frontier = vec![0u64; stride];
    let mut next = vec![0u64; stride];
    visited[source / 64] |= 1 << (source % 64);
    frontier[source / 64] |= 1 << (source % 64);
    let mut depth = 0;
    loop {
        next.fill(0);
        for u in BitIter::new(&frontier) {
            for (w, r) in next.iter_mut().zip(rows.row(u)) {
                *w |= r;
            }
        }
        let mut any = false;
        for (w, seen) in next.iter_mut().zip(visited.iter_mut()) {
            *w &= !*seen;
            *seen |= *w;
            any |= *w != 0;
        }
        if !any {
            break;
        }
        depth += 1;
        for v in BitIter::new(&next) {
            debug_assert!(v < n);
            out[v] = depth;
        }
        core::mem::swap(&mut frontier, &mut next);
    }
}

/// Distances from `source` along (directed) shortest paths.
pub fn bfs_distances<G: Topology>(g: &G, source: usize) -> Result<Vec<u32>, Error> {
    let n = g.order();
    if source >= n {
        return Err(Error::VertexOutOfRange {
            vertex: source,
            order: n,
        });
    }
    let mut out = vec![0; n];
    bfs_into(g.bit_rows(), n, source, &mut out);
    Ok(out)
}

/// All-pairs distances, row `u` holding `d(u, ·)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DistanceMatrix {
    order: usize,
    directed: bool,
    dist: Vec<u32>,
}

impl core::fmt::Debug for DistanceMatrix {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let rows: Vec<&[u32]> = (0..self.order).map(|u| self.row(u)).collect();
        f.debug_struct("DistanceMatrix")
            .field("directed", &self.directed)
            .field("rows", &rows)
            .finish()
    }
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// `None` when there is no path from `u` to `v`.
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        match self.dist[u * self.order + v] {
            UNREACHABLE => None,
            d => Some(d),
        }
    }

    /// Raw row; may contain [`UNREACHABLE`].
    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.order..(u + 1) * self.order]
    }

    /// True when every ordered pair is joined by a path.
    pub fn all_reachable(&self) -> bool {
        !self.dist.contains(&UNREACHABLE)
    }

    /// Sum over unordered pairs (undirected) or ordered pairs (directed).
    pub fn wiener(&self) -> Wiener {
        if !self.all_reachable() {
            return Wiener::Infinite;
        }
        let total: u64 = self.dist.iter().map(|&d| u64::from(d)).sum();
        Wiener::Finite(if self.directed { total } else { total / 2 })
    }

    /// `max_v d(u, v)` for every `u`.
    pub fn out_eccentricities(&self) -> Vec<Option<u32>> {
        (0..self.order)
            .map(|u| max_finite(self.row(u).iter().copied()))
            .collect()
    }

    /// `max_u d(u, v)` for every `v`.
    pub fn in_eccentricities(&self) -> Vec<Option<u32>> {
        (0..self.order)
            .map(|v| max_finite((0..self.order).map(|u| self.dist[u * self.order + v])))
            .collect()
    }
}

fn max_finite<I: Iterator<Item = u32>>(it: I) -> Option<u32> {
    let mut best = 0;
    for d in it {
        if d == UNREACHABLE {
            return None;
        }
        best = best.max(d);
    }
    Some(best)
}

/// One BFS per source, rows assembled in vertex order.
pub fn all_pairs<G: Topology>(g: &G) -> DistanceMatrix {
    let n = g.order();
    let mut dist = vec![0; n * n];
    for (s, row) in dist.chunks_mut(n).enumerate() {
        bfs_into(g.bit_rows(), n, s, row);
    }
    DistanceMatrix {
        order: n,
        directed: g.is_directed(),
        dist,
    }
}

/// Total distance, or infinite when some pair is disconnected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Wiener {
    Finite(u64),
    Infinite,
}

impl Wiener {
    pub fn finite(self) -> Option<u64> {
        match self {
            Wiener::Finite(w) => Some(w),
            Wiener::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Wiener::Finite(_))
    }
}

impl core::fmt::Display for Wiener {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Wiener::Finite(w) => write!(f, "{w}"),
            Wiener::Infinite => f.write_str("infinite"),
        }
    }
}

/// Sum of distances over unordered pairs.
pub fn wiener(g: &Graph) -> Wiener {
    all_pairs(g).wiener()
}

/// Sum of distances over ordered pairs.
pub fn wiener_digraph(d: &Digraph) -> Wiener {
    all_pairs(d).wiener()
}

pub fn eccentricities(g: &Graph) -> Vec<Option<u32>> {
    all_pairs(g).out_eccentricities()
}

/// Out- and in-eccentricity of every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigraphEccentricities {
    pub out: Vec<Option<u32>>,
    pub inward: Vec<Option<u32>>,
}

pub fn digraph_eccentricities(d: &Digraph) -> DigraphEccentricities {
    let m = all_pairs(d);
    DigraphEccentricities {
        out: m.out_eccentricities(),
        inward: m.in_eccentricities(),
    }
}

/// `(radius, diameter)`; both `None` for a disconnected graph.
pub fn radius_diameter(g: &Graph) -> (Option<u32>, Option<u32>) {
    extremes(&eccentricities(g))
}

fn extremes(ecc: &[Option<u32>]) -> (Option<u32>, Option<u32>) {
    let finite: Option<Vec<u32>> = ecc.iter().copied().collect();
    match finite {
        Some(e) => (e.iter().copied().min(), e.iter().copied().max()),
        None => (None, None),
    }
}

/// Radius variants of a digraph. `doubled_radius` is
/// `min_x (ecc⁺(x) + ecc⁻(x))`, twice the (possibly half-integer) radius.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DigraphRadii {
    pub out_radius: Option<u32>,
    pub in_radius: Option<u32>,
    pub doubled_radius: Option<u32>,
}

pub fn digraph_radii(d: &Digraph) -> DigraphRadii {
    radii_from(&digraph_eccentricities(d))
}

fn radii_from(e: &DigraphEccentricities) -> DigraphRadii {
    let min_of = |v: &[Option<u32>]| {
        v.iter()
            .copied()
            .collect::<Option<Vec<u32>>>()
            .and_then(|v| v.into_iter().min())
    };
    let doubled = e
        .out
        .iter()
        .zip(&e.inward)
        .map(|(a, b)| Some((*a)? + (*b)?))
        .collect::<Option<Vec<u32>>>()
        .and_then(|v| v.into_iter().min());
    DigraphRadii {
        out_radius: min_of(&e.out),
        in_radius: min_of(&e.inward),
        doubled_radius: doubled,
    }
}

/// Every ordered pair joined by a directed path (what the literature on
/// total distance of digraphs calls biconnected).
pub fn is_strongly_connected(d: &Digraph) -> bool {
    let n = d.order();
    let forward = bfs_distances(d, 0).expect("order >= 1");
    if forward.contains(&UNREACHABLE) {
        return false;
    }
    let backward = bfs_distances(&d.reverse(), 0).expect("order >= 1");
    debug_assert_eq!(backward.len(), n);
    !backward.contains(&UNREACHABLE)
}

pub fn is_connected(g: &Graph) -> bool {
    !bfs_distances(g, 0)
        .expect("order >= 1")
        .contains(&UNREACHABLE)
}

/// Everything the CLI reports for an undirected input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphMetrics {
    pub order: usize,
    pub size: usize,
    pub wiener: Wiener,
    pub radius: Option<u32>,
    pub diameter: Option<u32>,
    pub eccentricities: Vec<Option<u32>>,
}

/// Everything the CLI reports for a directed input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigraphMetrics {
    pub order: usize,
    pub size: usize,
    pub wiener: Wiener,
    pub radii: DigraphRadii,
    pub eccentricities: DigraphEccentricities,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MetricSummary {
    Graph(GraphMetrics),
    Digraph(DigraphMetrics),
}

pub fn graph_metrics(g: &Graph) -> GraphMetrics {
    let m = all_pairs(g);
    let ecc = m.out_eccentricities();
    let (radius, diameter) = extremes(&ecc);
    GraphMetrics {
        order: g.order(),
        size: g.edge_count(),
        wiener: m.wiener(),
        radius,
        diameter,
        eccentricities: ecc,
    }
}

pub fn digraph_metrics(d: &Digraph) -> DigraphMetrics {
    let m = all_pairs(d);
    let ecc = DigraphEccentricities {
        out: m.out_eccentricities(),
        inward: m.in_eccentricities(),
    };
    DigraphMetrics {
        order: d.order(),
        size: d.arc_count(),
        wiener: m.wiener(),
        radii: radii_from(&ecc),
        eccentricities: ecc,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn dcycle(n: usize) -> Digraph {
        Digraph::from_arcs(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn clique(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn bfs_examples() {
        assert_eq!(bfs_distances(&clique(3), 0).unwrap(), vec![0, 1, 1]);
        let mut c6 = bfs_distances(&cycle(6), 4).unwrap();
        c6.sort();
        assert_eq!(c6, vec![0, 1, 1, 2, 2, 3]);
        assert_eq!(bfs_distances(&dcycle(3), 0).unwrap(), vec![0, 1, 2]);
        assert!(bfs_distances(&cycle(4), 4).is_err());
    }

    #[test]
    fn all_pairs_examples() {
        let k2 = all_pairs(&clique(2));
        assert_eq!((k2.row(0), k2.row(1)), (&[0, 1][..], &[1, 0][..]));
        let k1 = all_pairs(&Graph::new(1).unwrap());
        assert_eq!(k1.row(0), &[0]);
        let p3 = all_pairs(&Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap());
        assert_eq!((0..3).flat_map(|u| p3.row(u).to_vec()).max(), Some(2));
    }

    #[test]
    fn wiener_examples() {
        assert_eq!(wiener(&clique(4)), Wiener::Finite(6));
        assert_eq!(wiener(&cycle(6)), Wiener::Finite(27));
        assert_eq!(
            wiener_digraph(&Digraph::bidirected(&clique(3))),
            Wiener::Finite(6)
        );
        assert_eq!(wiener_digraph(&dcycle(3)), Wiener::Finite(9));
        assert_eq!(wiener(&Graph::new(3).unwrap()), Wiener::Infinite);
        let one_arc = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        assert_eq!(wiener_digraph(&one_arc), Wiener::Infinite);
    }

    #[test]
    fn eccentricity_examples() {
        assert_eq!(eccentricities(&clique(5)), vec![Some(1); 5]);
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(eccentricities(&p3), vec![Some(2), Some(1), Some(2)]);
        let e = digraph_eccentricities(&dcycle(4));
        assert_eq!(e.out, vec![Some(3); 4]);
        assert_eq!(e.inward, vec![Some(3); 4]);
        let split = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(eccentricities(&split), vec![None; 3]);
    }

    #[test]
    fn radius_examples() {
        assert_eq!(radius_diameter(&cycle(6)), (Some(3), Some(3)));
        let star = Graph::from_edges(5, (1..5).map(|v| (0, v))).unwrap();
        assert_eq!(radius_diameter(&star), (Some(1), Some(2)));
        assert_eq!(radius_diameter(&Graph::new(2).unwrap()), (None, None));

        let bk = digraph_radii(&Digraph::bidirected(&clique(5)));
        assert_eq!(
            (bk.out_radius, bk.in_radius, bk.doubled_radius),
            (Some(1), Some(1), Some(2))
        );
        let c5 = digraph_radii(&dcycle(5));
        assert_eq!(
            (c5.out_radius, c5.in_radius, c5.doubled_radius),
            (Some(4), Some(4), Some(8))
        );
    }

    #[test]
    fn strong_connectivity() {
        assert!(is_strongly_connected(&dcycle(3)));
        assert!(!is_strongly_connected(
            &Digraph::from_arcs(2, [(0, 1)]).unwrap()
        ));
        assert!(is_strongly_connected(&Digraph::new(1).unwrap()));
        assert!(is_connected(&cycle(5)));
        assert!(!is_connected(&Graph::new(2).unwrap()));
    }
}

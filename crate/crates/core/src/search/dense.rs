//! Fixed-width adjacency for orders up to 32, used on the search hot paths.

use crate::metrics::Topology;
use crate::{Digraph, Error, Graph};

pub(crate) const DENSE_LIMIT: usize = 32;

/// Out- and in-adjacency as `u32` masks. For graphs both are the same.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Dense {
    n: usize,
    directed: bool,
    out: [u32; DENSE_LIMIT],
    inn: [u32; DENSE_LIMIT],
}

impl Dense {
    pub(crate) fn new(n: usize, directed: bool) -> Self {
        debug_assert!(n <= DENSE_LIMIT);
        Dense {
            n,
            directed,
            out: [0; DENSE_LIMIT],
            inn: [0; DENSE_LIMIT],
        }
    }

    pub(crate) fn from_topology<G: Topology>(g: &G) -> Result<Self, Error> {
        let n = g.order();
        if n > DENSE_LIMIT {
            return Err(Error::OrderTooLarge {
                order: n,
                limit: DENSE_LIMIT,
            });
        }
        let rows = g.bit_rows();
        let mut d = Dense::new(n, g.is_directed());
        for u in 0..n {
            d.out[u] = rows.row(u)[0] as u32;
        }
        for u in 0..n {
            let mut m = d.out[u];
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                d.inn[v] |= 1 << u;
            }
        }
        Ok(d)
    }

    #[inline]
    pub(crate) fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub(crate) fn is_directed(&self) -> bool {
        self.directed
    }

    #[inline]
    pub(crate) fn out_row(&self, v: usize) -> u32 {
        self.out[v]
    }

    #[inline]
    pub(crate) fn in_row(&self, v: usize) -> u32 {
        self.inn[v]
    }

    #[inline]
    pub(crate) fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u] >> v & 1 == 1
    }

    /// Adds `u -> v`, and `v -> u` as well for graphs.
    pub(crate) fn add_arc(&mut self, u: usize, v: usize) {
        self.out[u] |= 1 << v;
        self.inn[v] |= 1 << u;
        if !self.directed {
            self.out[v] |= 1 << u;
            self.inn[u] |= 1 << v;
        }
    }

    /// A new vertex `n` with the given out- and in-neighbourhoods.
    pub(crate) fn with_vertex(&self, out: u32, inn: u32) -> Dense {
        let mut d = *self;
        let v = self.n;
        d.n += 1;
        let mut m = out;
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            m &= m - 1;
            d.add_arc(v, u);
        }
        let mut m = inn;
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            m &= m - 1;
            d.add_arc(u, v);
        }
        d
    }

    /// Deletes `x` and shifts the later labels down.
    pub(crate) fn without(&self, x: usize) -> Dense {
        let squeeze = |m: u32| -> u32 {
            let low = m & ((1u32 << x) - 1);
            let high = (u64::from(m) >> (x + 1)) as u32;
            low | high << x
        };
        let mut d = Dense::new(self.n - 1, self.directed);
        let mut j = 0;
        for u in 0..self.n {
            if u == x {
                continue;
            }
            d.out[j] = squeeze(self.out[u]);
            d.inn[j] = squeeze(self.inn[u]);
            j += 1;
        }
        d
    }

    pub(crate) fn to_graph(self) -> Graph {
        let mut g = Graph::new(self.n).expect("order checked on construction");
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_arc(u, v) {
                    g.add_edge(u, v).expect("valid edge");
                }
            }
        }
        g
    }

    pub(crate) fn to_digraph(self) -> Digraph {
        let mut d = Digraph::new(self.n).expect("order checked on construction");
        for u in 0..self.n {
            for v in 0..self.n {
                if self.has_arc(u, v) {
                    d.add_arc(u, v).expect("valid arc");
                }
            }
        }
        d
    }

    fn full(&self) -> u32 {
        ((1u64 << self.n) - 1) as u32
    }

    /// Sum and maximum of BFS distances from `s` along `rows`, or `None` if
    /// some vertex is unreachable.
    #[inline]
    fn sweep(&self, rows: &[u32; DENSE_LIMIT], s: usize) -> Option<(u32, u32)> {
        let full = self.full();
        let mut seen: u32 = 1 << s;
        let mut frontier = seen;
        let mut level = 0;
        let mut sum = 0;
        while seen != full {
            let mut next = 0u32;
            let mut f = frontier;
            while f != 0 {
                let u = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= rows[u];
            }
            next &= !seen;
            if next == 0 {
                return None;
            }
            level += 1;
            sum += level * next.count_ones();
            seen |= next;
            frontier = next;
        }
        Some((sum, level))
    }

    /// Wiener index and radius of a connected graph.
    pub(crate) fn graph_wiener_radius(&self) -> Option<(u64, u32)> {
        let mut total = 0u64;
        let mut radius = u32::MAX;
        for s in 0..self.n {
            let (sum, ecc) = self.sweep(&self.out, s)?;
            total += u64::from(sum);
            radius = radius.min(ecc);
        }
        Some((total / 2, radius))
    }

    /// Doubled radius; `None` if not strongly connected.
    pub(crate) fn doubled_radius(&self) -> Option<u32> {
        let mut doubled = u32::MAX;
        for s in 0..self.n {
            let (_, ecc_out) = self.sweep(&self.out, s)?;
            let (_, ecc_in) = self.sweep(&self.inn, s)?;
            doubled = doubled.min(ecc_out + ecc_in);
        }
        Some(doubled)
    }

    /// Sum of distances over ordered pairs; `None` if not strongly connected.
    pub(crate) fn digraph_wiener(&self) -> Option<u64> {
        let mut total = 0u64;
        for s in 0..self.n {
            total += u64::from(self.sweep(&self.out, s)?.0);
        }
        Some(total)
    }
}

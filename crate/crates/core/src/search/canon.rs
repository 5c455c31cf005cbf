//! Canonical labelling by partition refinement and individualisation.
//!
//! The certificate of a (di)graph is the lexicographically smallest
//! sequence of permuted adjacency rows over all labellings reached by the
//! search tree. Branches are pruned with automorphisms discovered at the
//! leaves.

use alloc::vec::Vec;
use core::fmt;

use super::dense::Dense;
use crate::metrics::Topology;
use crate::Error;

/// Largest order accepted by the canonical labelling.
pub const CANON_LIMIT: usize = 16;

type Rows = [u16; CANON_LIMIT];
type Lab = [u8; CANON_LIMIT];

/// Label-invariant identifier of an isomorphism class.
///
/// Graphs and digraphs never compare equal, and neither do different
/// orders.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCertificate {
    order: u8,
    directed: bool,
    rows: Vec<u16>,
}

impl CanonicalCertificate {
    pub fn order(&self) -> usize {
        self.order as usize
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// Row `i` of the canonical adjacency matrix as a bit mask.
    pub fn rows(&self) -> &[u16] {
        &self.rows
    }

    /// Bytes: order, directedness, then each row big-endian.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(2 + 2 * self.rows.len());
        out.push(self.order);
        out.push(u8::from(self.directed));
        for r in &self.rows {
            out.extend_from_slice(&r.to_be_bytes());
        }
        out
    }
}

impl fmt::Display for CanonicalCertificate {
    /// Lower-case hex of [`CanonicalCertificate::to_bytes`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.to_bytes() {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CanonicalCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCertificate({self})")
    }
}

/// A certificate and the labelling that produces it: `order[i]` is the
/// original vertex placed at canonical position `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalLabelling {
    pub certificate: CanonicalCertificate,
    pub order: Vec<usize>,
}

pub fn canonical_form<G: Topology>(g: &G) -> Result<CanonicalCertificate, Error> {
    Ok(canonical_labelling(g)?.certificate)
}

pub fn canonical_labelling<G: Topology>(g: &G) -> Result<CanonicalLabelling, Error> {
    if g.order() > CANON_LIMIT {
        return Err(Error::OrderTooLarge {
            order: g.order(),
            limit: CANON_LIMIT,
        });
    }
    let d = Dense::from_topology(g)?;
    let c = canon_dense(&d);
    Ok(CanonicalLabelling {
        certificate: c.certificate(&d),
        order: c.lab[..d.order()].iter().map(|&v| v as usize).collect(),
    })
}

/// Result of the search on a [`Dense`] input.
#[derive(Clone, Copy)]
pub(crate) struct Canon {
    pub(crate) rows: Rows,
    pub(crate) lab: Lab,
}

impl Canon {
    pub(crate) fn certificate(&self, d: &Dense) -> CanonicalCertificate {
        CanonicalCertificate {
            order: d.order() as u8,
            directed: d.is_directed(),
            rows: self.rows[..d.order()].to_vec(),
        }
    }

    /// Canonical position of every vertex.
    pub(crate) fn positions(&self, n: usize) -> Lab {
        let mut pos = [0u8; CANON_LIMIT];
        for (i, &v) in self.lab[..n].iter().enumerate() {
            pos[v as usize] = i as u8;
        }
        pos
    }
}

/// Ordered partition: cell `c` is `lab[start[c]..start[c + 1]]`.
#[derive(Clone, Copy)]
struct Partition {
    lab: Lab,
    start: [u8; CANON_LIMIT + 1],
    cells: usize,
}

impl Partition {
    fn unit(n: usize) -> Self {
        let mut lab = [0u8; CANON_LIMIT];
        for (i, l) in lab.iter_mut().enumerate().take(n) {
            *l = i as u8;
        }
        let mut start = [0u8; CANON_LIMIT + 1];
        start[1] = n as u8;
        Partition {
            lab,
            start,
            cells: 1,
        }
    }

    #[inline]
    fn range(&self, c: usize) -> core::ops::Range<usize> {
        self.start[c] as usize..self.start[c + 1] as usize
    }

    fn mask(&self, c: usize) -> u16 {
        self.lab[self.range(c)]
            .iter()
            .fold(0u16, |m, &v| m | 1 << v)
    }

    /// Inserts a cell boundary at position `at`, which must fall strictly
    /// inside cell `c`.
    fn split_at(&mut self, c: usize, at: usize) {
        for k in (c + 1..=self.cells).rev() {
            self.start[k + 1] = self.start[k];
        }
        self.start[c + 1] = at as u8;
        self.cells += 1;
    }
}

struct Search<'a> {
    g: &'a Dense,
    n: usize,
    first: Option<(Rows, Lab)>,
    best: Option<(Rows, Lab)>,
    generators: Vec<Lab>,
}

pub(crate) fn canon_dense(g: &Dense) -> Canon {
    let n = g.order();
    debug_assert!(n <= CANON_LIMIT);
    let mut s = Search {
        g,
        n,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    let mut p = Partition::unit(n);
    s.refine(&mut p);
    let mut prefix = Vec::with_capacity(n);
    s.descend(p, &mut prefix);
    let (rows, lab) = s.best.expect("the search reaches at least one leaf");
    Canon { rows, lab }
}

impl Search<'_> {
    /// Splits cells by the number of out- (and for digraphs in-) neighbours
    /// in each cell until nothing changes. Cell order only depends on the
    /// ordered partition and counts, never on vertex names.
    fn refine(&self, p: &mut Partition) {
        loop {
            let mut changed = false;
            let mut w = 0;
            while w < p.cells && p.cells < self.n {
                let wmask = p.mask(w);
                let mut x = 0;
                while x < p.cells {
                    let range = p.range(x);
                    if range.len() < 2 {
                        x += 1;
                        continue;
                    }
                    let mut keyed = [(0u16, 0u8); CANON_LIMIT];
                    let len = range.len();
                    for (slot, &v) in keyed.iter_mut().zip(&p.lab[range.clone()]) {
                        let out = (self.g.out_row(v as usize) as u16 & wmask).count_ones() as u16;
                        let inn = if self.g.is_directed() {
                            (self.g.in_row(v as usize) as u16 & wmask).count_ones() as u16
                        } else {
                            0
                        };
                        *slot = (out << 5 | inn, v);
                    }
                    let keyed = &mut keyed[..len];
                    if keyed.iter().all(|k| k.0 == keyed[0].0) {
                        x += 1;
                        continue;
                    }
                    keyed.sort_unstable();
                    for (i, &(_, v)) in keyed.iter().enumerate() {
                        p.lab[range.start + i] = v;
                    }
                    let mut pieces = 1;
                    for i in (1..len).rev() {
                        if keyed[i].0 != keyed[i - 1].0 {
                            p.split_at(x, range.start + i);
                            pieces += 1;
                        }
                    }
                    changed = true;
                    x += pieces;
                }
                w += 1;
            }
            if !changed || p.cells == self.n {
                return;
            }
        }
    }

    fn descend(&mut self, p: Partition, prefix: &mut Vec<u8>) {
        if p.cells == self.n {
            self.leaf(&p);
            return;
        }
        let c = (0..p.cells)
            .find(|&c| p.range(c).len() > 1)
            .expect("a non-discrete partition has a non-singleton cell");
        let range = p.range(c);
        let mut members = [0u8; CANON_LIMIT];
        let len = range.len();
        members[..len].copy_from_slice(&p.lab[range.clone()]);
        members[..len].sort_unstable();
        let mut tried = [0u8; CANON_LIMIT];
        let mut tried_len = 0;
        for &v in &members[..len] {
            if tried_len > 0 {
                let orbit = self.orbits(prefix);
                if tried[..tried_len]
                    .iter()
                    .any(|&u| orbit[u as usize] == orbit[v as usize])
                {
                    continue;
                }
            }
            let mut child = p;
            let at = child.lab[range.clone()]
                .iter()
                .position(|&x| x == v)
                .expect("v is in the cell");
            child.lab.swap(range.start, range.start + at);
            child.split_at(c, range.start + 1);
            self.refine(&mut child);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
            tried[tried_len] = v;
            tried_len += 1;
        }
    }

    /// Orbit representatives under the generators that fix `prefix`
    /// pointwise.
    fn orbits(&self, prefix: &[u8]) -> Lab {
        let mut parent = [0u8; CANON_LIMIT];
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i as u8;
        }
        fn find(parent: &mut Lab, mut x: u8) -> u8 {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        for g in &self.generators {
            if prefix.iter().any(|&v| g[v as usize] != v) {
                continue;
            }
            for v in 0..self.n as u8 {
                let a = find(&mut parent, v);
                let b = find(&mut parent, g[v as usize]);
                if a != b {
                    parent[a.max(b) as usize] = a.min(b);
                }
            }
        }
        let mut rep = [0u8; CANON_LIMIT];
        for v in 0..self.n as u8 {
            rep[v as usize] = find(&mut parent, v);
        }
        rep
    }

    fn leaf(&mut self, p: &Partition) {
        let n = self.n;
        let mut pos = [0u8; CANON_LIMIT];
        for (i, &v) in p.lab[..n].iter().enumerate() {
            pos[v as usize] = i as u8;
        }
        let mut rows = [0u16; CANON_LIMIT];
        for (i, row) in rows.iter_mut().enumerate().take(n) {
            let mut m = self.g.out_row(p.lab[i] as usize) as u16;
            while m != 0 {
                let u = m.trailing_zeros() as usize;
                m &= m - 1;
                *row |= 1 << pos[u];
            }
        }
        let Some((first_rows, first_lab)) = self.first else {
            self.first = Some((rows, p.lab));
            self.best = Some((rows, p.lab));
            return;
        };
        let (best_rows, best_lab) = self.best.expect("set with first");
        if rows[..n] == first_rows[..n] {
            self.record(&first_lab, &p.lab);
        } else if rows[..n] == best_rows[..n] {
            self.record(&best_lab, &p.lab);
        } else if rows[..n] < best_rows[..n] {
            self.best = Some((rows, p.lab));
        }
    }

    /// Two leaves with equal rows give the automorphism `a[i] -> b[i]`.
    fn record(&mut self, a: &Lab, b: &Lab) {
        let mut g = [0u8; CANON_LIMIT];
        for i in 0..self.n {
            g[a[i] as usize] = b[i];
        }
        if (0..self.n).any(|v| g[v] != v as u8) {
            self.generators.push(g);
        }
    }
}

//! Isomorph-free generation of graphs by canonical vertex augmentation.
//!
//! Every class of order `m + 1` is produced from exactly one class of order
//! `m`: delete the canonical deletion vertex `w*` and take the class of what
//! remains. A child `P + v` of a stored representative `P` is kept only if
//! `v` could be `w*` and the deletion really gives back `P`. Isomorphic
//! siblings are merged by certificate.

use alloc::collections::BTreeSet;
use core::ops::Range;

use super::canon::{canon_dense, Canon, CanonicalCertificate};
use super::dense::Dense;
use crate::{Error, Graph};

/// Largest order [`enumerate_graphs`] accepts.
pub const ENUMERATION_LIMIT: usize = 10;

/// Depth at which the generation tree is cut into shards.
const SPLIT_LEVEL: usize = 6;

/// Selects part of the generation tree: the nodes at a fixed depth are
/// numbered in traversal order, and shard `j` of `count` owns those whose
/// number is `j` modulo `count`. A spec owns every shard id in `ids`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShardSpec {
    pub count: usize,
    pub ids: Range<usize>,
}

impl ShardSpec {
    /// The whole tree.
    pub fn all() -> Self {
        ShardSpec {
            count: 1,
            ids: 0..1,
        }
    }

    /// Shard `index` of `count`.
    pub fn single(index: usize, count: usize) -> Result<Self, Error> {
        let s = ShardSpec {
            count,
            ids: index..index + 1,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.count == 0 || self.ids.end > self.count {
            return Err(Error::InvalidShard {
                index: self.ids.end.saturating_sub(1),
                count: self.count,
            });
        }
        Ok(())
    }

    pub(crate) fn owns(&self, node: u64) -> bool {
        self.ids.contains(&((node % self.count as u64) as usize))
    }
}

impl Default for ShardSpec {
    fn default() -> Self {
        ShardSpec::all()
    }
}

struct Walk<'a, V> {
    n: usize,
    split: usize,
    shard: &'a ShardSpec,
    counter: u64,
    visited: u64,
    visit: V,
}

/// Visits one representative per class of graphs of order `n` in the shard.
/// Returns the number of classes visited.
pub(crate) fn enumerate_dense<V>(n: usize, shard: &ShardSpec, visit: V) -> Result<u64, Error>
where
    V: FnMut(&Dense, &Canon),
{
    if n == 0 || n > ENUMERATION_LIMIT {
        return Err(Error::OrderTooLarge {
            order: n,
            limit: ENUMERATION_LIMIT,
        });
    }
    shard.validate()?;
    let mut w = Walk {
        n,
        split: n.min(SPLIT_LEVEL),
        shard,
        counter: 0,
        visited: 0,
        visit,
    };
    if !shard.ids.is_empty() {
        let root = Dense::new(1, false);
        let c = canon_dense(&root);
        w.walk(&root, &c);
    }
    Ok(w.visited)
}

impl<V: FnMut(&Dense, &Canon)> Walk<'_, V> {
    fn walk(&mut self, g: &Dense, c: &Canon) {
        let m = g.order();
        if m == self.split {
            let node = self.counter;
            self.counter += 1;
            if !self.shard.owns(node) {
                return;
            }
        }
        if m == self.n {
            self.visited += 1;
            (self.visit)(g, c);
            return;
        }
        let mut siblings = BTreeSet::new();
        for s in 0..1u32 << m {
            let child = g.with_vertex(s, 0);
            if let Some(cc) = accept(&child, c) {
                if siblings.insert(cc.rows) {
                    self.walk(&child, &cc);
                }
            }
        }
    }
}

/// Degree and neighbour-degree sum, packed so that larger is "more
/// canonical".
fn deletion_keys(g: &Dense) -> [u32; 16] {
    let n = g.order();
    let mut deg = [0u32; 16];
    for (v, d) in deg.iter_mut().enumerate().take(n) {
        *d = g.out_row(v).count_ones();
    }
    let mut keys = [0u32; 16];
    for v in 0..n {
        let mut m = g.out_row(v);
        let mut sum = 0;
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            m &= m - 1;
            sum += deg[u];
        }
        keys[v] = deg[v] << 16 | sum;
    }
    keys
}

/// The child's canonical form if the last vertex is a valid canonical
/// deletion for the parent with canonical form `parent`.
fn accept(child: &Dense, parent: &Canon) -> Option<Canon> {
    let n = child.order();
    let v = n - 1;
    let keys = deletion_keys(child);
    let top = *keys[..n].iter().max().expect("nonempty");
    if keys[v] != top {
        return None;
    }
    let class = (0..n).filter(|&x| keys[x] == top).count();
    let cc = canon_dense(child);
    if class == 1 {
        return Some(cc);
    }
    let pos = cc.positions(n);
    let w = (0..n)
        .filter(|&x| keys[x] == top)
        .min_by_key(|&x| pos[x])
        .expect("class is nonempty");
    if w == v {
        return Some(cc);
    }
    let reduced = canon_dense(&child.without(w));
    (reduced.rows[..n - 1] == parent.rows[..n - 1]).then_some(cc)
}

/// Calls `visit` once per isomorphism class of graphs of order `n`
/// satisfying `predicate`, with a representative and its certificate.
/// Returns the number of classes that satisfied the predicate.
pub fn enumerate_graphs<P, V>(n: usize, predicate: P, visit: V) -> Result<u64, Error>
where
    P: FnMut(&Graph) -> bool,
    V: FnMut(&Graph, &CanonicalCertificate),
{
    shard_enumeration(n, predicate, &ShardSpec::all(), visit)
}

/// [`enumerate_graphs`] restricted to part of the generation tree. The
/// shards of one `count` partition the classes.
pub fn shard_enumeration<P, V>(
    n: usize,
    mut predicate: P,
    shard: &ShardSpec,
    mut visit: V,
) -> Result<u64, Error>
where
    P: FnMut(&Graph) -> bool,
    V: FnMut(&Graph, &CanonicalCertificate),
{
    let mut passed = 0;
    enumerate_dense(n, shard, |d, c| {
        let g = d.to_graph();
        if predicate(&g) {
            passed += 1;
            visit(&g, &c.certificate(d));
        }
    })?;
    Ok(passed)
}

//! Simple graphs and digraphs stored as rows of adjacency bits.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bits::BitRows;
use crate::Error;

/// Largest order accepted by [`Graph`] and [`Digraph`].
pub const MAX_ORDER: usize = 4096;

fn check_order(order: usize) -> Result<(), Error> {
    if order == 0 || order > MAX_ORDER {
        return Err(Error::InvalidOrder {
            order,
            max: MAX_ORDER,
        });
    }
    Ok(())
}

fn check_vertex(v: usize, order: usize) -> Result<(), Error> {
    if v >= order {
        return Err(Error::VertexOutOfRange { vertex: v, order });
    }
    Ok(())
}

fn check_perm(perm: &[usize], order: usize) -> Result<(), Error> {
    if perm.len() != order {
        return Err(Error::InvalidPermutation);
    }
    let mut seen = vec![false; order];
    for &p in perm {
        if p >= order || seen[p] {
            return Err(Error::InvalidPermutation);
        }
        seen[p] = true;
    }
    Ok(())
}

/// Undirected simple graph on vertices `0..order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: BitRows,
}

impl Graph {
    /// Edgeless graph of the given order.
    pub fn new(order: usize) -> Result<Self, Error> {
        check_order(order)?;
        Ok(Graph {
            adj: BitRows::new(order),
        })
    }

    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(order)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.order()
    }

    /// Adds the edge `uv`. Adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), Error> {
        check_vertex(u, self.order())?;
        check_vertex(v, self.order())?;
        if u == v {
            return Err(Error::SelfLoop { vertex: u });
        }
        self.adj.set(u, v, true);
        self.adj.set(v, u, true);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<(), Error> {
        check_vertex(u, self.order())?;
        check_vertex(v, self.order())?;
        self.adj.set(u, v, false);
        self.adj.set(v, u, false);
        Ok(())
    }

    /// `false` for out-of-range vertices.
    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj.get(u, v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj.row_count(v)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj.row_iter(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.count() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn complement(&self) -> Graph {
        Graph {
            adj: self.adj.complement(),
        }
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, Error> {
        check_perm(perm, self.order())?;
        Ok(Graph {
            adj: self.adj.relabel(perm),
        })
    }

    /// The graph with `v` deleted; vertices above `v` shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph, Error> {
        check_vertex(v, self.order())?;
        check_order(self.order() - 1)?;
        Ok(Graph {
            adj: self.adj.without(v),
        })
    }

    /// Whether the vertex set is a clique.
    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Acyclic (a forest), checked by union-find over the edge list.
    pub fn is_forest(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.order()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (u, v) in self.edges() {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        true
    }

    pub(crate) fn rows(&self) -> &BitRows {
        &self.adj
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// In-, out- and total degree of a digraph vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreeTriple {
    pub out_degree: usize,
    pub in_degree: usize,
    pub total: usize,
}

/// Directed graph without loops on vertices `0..order`. Opposite arcs are
/// allowed; a pair of them is a bidirected edge.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    out: BitRows,
}

impl Digraph {
    /// Arcless digraph of the given order.
    pub fn new(order: usize) -> Result<Self, Error> {
        check_order(order)?;
        Ok(Digraph {
            out: BitRows::new(order),
        })
    }

    pub fn from_arcs<I>(order: usize, arcs: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut d = Digraph::new(order)?;
        for (u, v) in arcs {
            d.add_arc(u, v)?;
        }
        Ok(d)
    }

    /// Every edge of `g` replaced by two opposite arcs.
    pub fn bidirected(g: &Graph) -> Digraph {
        Digraph { out: g.adj.clone() }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.out.order()
    }

    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<(), Error> {
        check_vertex(u, self.order())?;
        check_vertex(v, self.order())?;
        if u == v {
            return Err(Error::SelfLoop { vertex: u });
        }
        self.out.set(u, v, true);
        Ok(())
    }

    pub fn remove_arc(&mut self, u: usize, v: usize) -> Result<(), Error> {
        check_vertex(u, self.order())?;
        check_vertex(v, self.order())?;
        self.out.set(u, v, false);
        Ok(())
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.out.get(u, v)
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out.row_count(v)
    }

    pub fn in_degree(&self, v: usize) -> usize {
        (0..self.order()).filter(|&u| self.out.get(u, v)).count()
    }

    pub fn degrees(&self) -> Vec<DegreeTriple> {
        let mut ins = vec![0; self.order()];
        for u in 0..self.order() {
            for v in self.out.row_iter(u) {
                ins[v] += 1;
            }
        }
        (0..self.order())
            .map(|v| {
                let out_degree = self.out_degree(v);
                DegreeTriple {
                    out_degree,
                    in_degree: ins[v],
                    total: out_degree + ins[v],
                }
            })
            .collect()
    }

    pub fn out_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.out.row_iter(v)
    }

    pub fn in_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.order()).filter(move |&u| self.out.get(u, v))
    }

    pub fn arc_count(&self) -> usize {
        self.out.count()
    }

    /// Arcs in row-major order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| self.out_neighbors(u).map(move |v| (u, v)))
    }

    /// Complement with respect to the bidirected clique.
    pub fn complement(&self) -> Digraph {
        Digraph {
            out: self.out.complement(),
        }
    }

    /// Every arc turned around.
    pub fn reverse(&self) -> Digraph {
        Digraph {
            out: self.out.transpose(),
        }
    }

    pub fn relabel(&self, perm: &[usize]) -> Result<Digraph, Error> {
        check_perm(perm, self.order())?;
        Ok(Digraph {
            out: self.out.relabel(perm),
        })
    }

    pub fn remove_vertex(&self, v: usize) -> Result<Digraph, Error> {
        check_vertex(v, self.order())?;
        check_order(self.order() - 1)?;
        Ok(Digraph {
            out: self.out.without(v),
        })
    }

    pub(crate) fn rows(&self) -> &BitRows {
        &self.out
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("order", &self.order())
            .field("arcs", &self.arcs().collect::<Vec<_>>())
            .finish()
    }
}

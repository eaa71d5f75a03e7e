//! Finite simple graphs on the vertex labels `1..=n`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A finite simple graph with vertices `1..=n`, adjacency stored as one
/// neighbor mask per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

/// An induced subgraph relabeled to `1..=k`, with `labels[i]` the original
/// label of new vertex `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub labels: Vec<usize>,
}

impl InducedSubgraph {
    pub fn original(&self, v: usize) -> usize {
        self.labels[v - 1]
    }

    pub fn original_set(&self, s: VertexSet) -> VertexSet {
        s.iter().map(|v| self.original(v)).collect()
    }
}

/// An ordering in which every vertex is simplicial among the vertices that
/// come after it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerfectEliminationOrder(Vec<usize>);

impl PerfectEliminationOrder {
    pub fn order(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Checks the defining property against `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut seen = VertexSet::EMPTY;
        for &v in &self.0 {
            if v == 0 || v > g.n || seen.contains(v) {
                return false;
            }
            seen = seen.with(v);
        }
        if seen != g.vertices() {
            return false;
        }
        let mut later = g.vertices();
        self.0.iter().all(|&v| {
            later = later.without(v);
            g.is_clique(g.neighbors(v).intersection(later))
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructurePredicates {
    pub claw_free: bool,
    pub gap_free: bool,
    pub leaves: Vec<usize>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > VertexSet::MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: VertexSet::MAX_VERTICES });
        }
        Ok(Graph { n, adj: vec![VertexSet::EMPTY; n] })
    }

    /// Builds a graph from an edge list; repeated edges are merged.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u - 1] = g.adj[u - 1].with(v);
            g.adj[v - 1] = g.adj[v - 1].with(u);
        }
        Ok(g)
    }

    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Self {
        Graph { n: adj.len(), adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v - 1]
    }

    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v - 1].with(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u >= 1 && u <= self.n && self.adj[u - 1].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 1..=self.n {
            for v in self.adj[u - 1].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.adj[v - 1]))
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v - 1].is_disjoint(s))
    }

    pub fn complement(&self) -> Graph {
        self.complement_within(self.vertices())
    }

    /// Complement of `G[active]`, kept in the original labels; vertices
    /// outside `active` become isolated.
    pub(crate) fn complement_within(&self, active: VertexSet) -> Graph {
        let adj = (1..=self.n)
            .map(|v| {
                if active.contains(v) {
                    active.difference(self.adj[v - 1]).without(v)
                } else {
                    VertexSet::EMPTY
                }
            })
            .collect();
        Graph::from_adjacency(adj)
    }

    pub fn induced_subgraph(&self, a: VertexSet) -> InducedSubgraph {
        let labels: Vec<usize> = a.intersection(self.vertices()).iter().collect();
        let mut position = vec![0usize; self.n + 1];
        for (i, &v) in labels.iter().enumerate() {
            position[v] = i + 1;
        }
        let adj = labels
            .iter()
            .map(|&v| self.adj[v - 1].intersection(a).iter().map(|u| position[u]).collect())
            .collect();
        InducedSubgraph { graph: Graph::from_adjacency(adj), labels }
    }

    /// The connected component of `G[within]` containing `v`.
    pub fn component_within(&self, v: usize, within: VertexSet) -> VertexSet {
        let mut comp = VertexSet::singleton(v);
        let mut frontier = comp;
        while let Some(u) = frontier.min() {
            frontier = frontier.without(u);
            let fresh = self.adj[u - 1].intersection(within).difference(comp);
            comp = comp.union(fresh);
            frontier = frontier.union(fresh);
        }
        comp
    }

    /// Components of `G[within]`, ordered by smallest vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.min() {
            let c = self.component_within(v, rest);
            rest = rest.difference(c);
            out.push(c);
        }
        out
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// Whether `G[a]` is connected. Fails on the empty set.
    pub fn is_connected_subset(&self, a: VertexSet) -> Result<bool> {
        match a.min() {
            None => Err(Error::EmptySubset),
            Some(v) => Ok(self.component_within(v, a) == a),
        }
    }

    /// Largest connected component size of `G[s]`.
    pub fn max_component_size(&self, s: VertexSet) -> usize {
        self.components_within(s).iter().map(|c| c.len()).max().unwrap_or(0)
    }

    pub fn is_simplicial(&self, v: usize) -> bool {
        self.is_clique(self.adj[v - 1])
    }

    pub fn simplicial_vertices(&self) -> Vec<usize> {
        (1..=self.n).filter(|&v| self.is_simplicial(v)).collect()
    }

    /// Recognizes chordal graphs by maximum cardinality search followed by a
    /// check of the resulting elimination order.
    ///
    /// The search starts at the largest label and breaks ties toward larger
    /// labels, so the returned order tends to begin with small labels.
    pub fn is_chordal(&self) -> Option<PerfectEliminationOrder> {
        let mut weight = vec![0usize; self.n + 1];
        let mut unvisited = self.vertices();
        let mut visit = Vec::with_capacity(self.n);
        while !unvisited.is_empty() {
            let v = unvisited
                .iter()
                .max_by_key(|&u| (weight[u], u))
                .expect("nonempty");
            unvisited = unvisited.without(v);
            for u in self.adj[v - 1].intersection(unvisited) {
                weight[u] += 1;
            }
            visit.push(v);
        }
        visit.reverse();
        let peo = PerfectEliminationOrder(visit);
        peo.is_valid_for(self).then_some(peo)
    }

    pub fn is_cochordal(&self) -> bool {
        self.complement().is_chordal().is_some()
    }

    /// The graph obtained by deleting `x` (simplicial in the complement) and
    /// turning its neighborhood into a clique, relabeled to `1..=n-1`.
    pub fn tilde_graph(&self, x: usize) -> Result<InducedSubgraph> {
        if x == 0 || x > self.n {
            return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
        }
        let t = self.tilde_within(self.vertices(), x)?;
        Ok(t.induced_subgraph(self.vertices().without(x)))
    }

    /// Tilde construction on `G[active]`, kept in the original labels.
    ///
    /// With `Y = N_{G^c}(x)` and `W = N_G(x)` inside `active`, the result is
    /// `G[active - x]` plus every complement edge avoiding `Y`, i.e. plus a
    /// clique on `W`.
    pub(crate) fn tilde_within(&self, active: VertexSet, x: usize) -> Result<Graph> {
        let co = active.difference(self.adj[x - 1]).without(x);
        if !self.is_independent(co) {
            return Err(Error::NotSimplicialInComplement(x));
        }
        let rest = active.without(x);
        let w = self.adj[x - 1].intersection(rest);
        let adj = (1..=self.n)
            .map(|v| {
                if !rest.contains(v) {
                    VertexSet::EMPTY
                } else if w.contains(v) {
                    self.adj[v - 1].intersection(rest).union(w).without(v)
                } else {
                    self.adj[v - 1].intersection(rest)
                }
            })
            .collect();
        Ok(Graph::from_adjacency(adj))
    }

    /// Whether the subset induces a 4-cycle.
    fn induces_c4(&self, s: VertexSet) -> bool {
        s.len() == 4 && s.iter().all(|v| self.adj[v - 1].intersection(s).len() == 2) && {
            let v = s.min().expect("nonempty");
            self.component_within(v, s) == s
        }
    }

    pub fn has_induced_c4(&self) -> bool {
        VertexSet::combinations(self.n, 4).any(|s| self.induces_c4(s))
    }

    pub fn has_induced_claw(&self) -> bool {
        (1..=self.n).any(|c| {
            let nb = self.adj[c - 1];
            nb.len() >= 3 && VertexSet::combinations(self.n, 3).any(|t| t.is_subset(nb) && self.is_independent(t))
        })
    }

    pub fn leaves(&self) -> Vec<usize> {
        (1..=self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn structure_predicates(&self) -> StructurePredicates {
        StructurePredicates {
            claw_free: !self.has_induced_claw(),
            gap_free: !self.complement().has_induced_c4(),
            leaves: self.leaves(),
        }
    }

    /// For a gap-free, claw-free graph with a leaf, splits `V` into a clique
    /// `Y` and an independent set `W`. Returns `(Y, W)`.
    ///
    /// With leaf `x` and its neighbor `y`: `Y = N[y] - x` and
    /// `W = {x} ∪ (V - N[y])`. Returns `None` when the graph has no leaf or
    /// the resulting sets fail the clique/independence check.
    pub fn leaf_partition(&self) -> Option<(VertexSet, VertexSet)> {
        let x = *self.leaves().first()?;
        let y = self.adj[x - 1].min()?;
        let clique = self.closed_neighbors(y).without(x);
        let indep = self.vertices().difference(self.closed_neighbors(y)).with(x);
        (self.is_clique(clique) && self.is_independent(indep)).then_some((clique, indep))
    }
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::Family;

    fn path(n: usize) -> Graph {
        Family::Path.generate(n).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Family::Complete.generate(n).unwrap()
    }

    fn set(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v.iter().copied())
    }

    /// Six vertices x1=1, y1=2, y2=3, w1=4, w2=5, w3=6, given by its
    /// complement's edges.
    pub(crate) fn six_vertex_example() -> Graph {
        Graph::new(6, [(2, 3), (2, 1), (1, 3), (3, 4), (4, 5), (5, 6)]).unwrap().complement()
    }

    #[test]
    fn build_rejects_bad_pairs() {
        assert_eq!(Graph::new(2, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(Graph::new(3, [(1, 4)]), Err(Error::VertexOutOfRange { vertex: 4, n: 3 }));
        assert!(Graph::new(65, []).is_err());
        let g = Graph::new(3, [(1, 2), (2, 3), (2, 1)]).unwrap();
        assert_eq!(g.edges(), [(1, 2), (2, 3)]);
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complete(4).complement().edge_count(), 0);
        let c5 = Family::Cycle.generate(5).unwrap();
        let cc = c5.complement();
        // C5 is self-complementary: complement is again a 2-regular connected graph
        assert!((1..=5).all(|v| cc.degree(v) == 2));
        assert_eq!(cc.connected_components().len(), 1);
        let g = six_vertex_example();
        assert_eq!(g.edge_count(), 9);
        assert_eq!(g.complement().edges(), [(1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6)]);
    }

    #[test]
    fn induced_subgraph_examples() {
        let k = complete(5).induced_subgraph(set(&[1, 2, 3]));
        assert_eq!(k.graph, complete(3));
        let p = path(4).induced_subgraph(set(&[1, 2, 4]));
        assert_eq!(p.graph.edges(), [(1, 2)]);
        assert_eq!(p.labels, [1, 2, 4]);
        assert_eq!(p.original(3), 4);
        assert_eq!(complete(4).induced_subgraph(VertexSet::EMPTY).graph.n(), 0);
    }

    #[test]
    fn component_examples() {
        assert_eq!(path(5).connected_components(), [VertexSet::full(5)]);
        assert_eq!(Graph::empty(4).unwrap().connected_components().len(), 4);
        let g = Graph::new(5, [(1, 2), (2, 3), (1, 3), (4, 5)]).unwrap();
        assert_eq!(g.connected_components(), [set(&[1, 2, 3]), set(&[4, 5])]);
    }

    #[test]
    fn connected_subset_examples() {
        let k5 = complete(5);
        assert!(VertexSet::full(5).subsets().skip(1).all(|a| k5.is_connected_subset(a).unwrap()));
        assert!(!path(4).is_connected_subset(set(&[1, 3])).unwrap());
        assert!(six_vertex_example().is_connected_subset(set(&[1, 4, 6])).unwrap());
        assert_eq!(k5.is_connected_subset(VertexSet::EMPTY), Err(Error::EmptySubset));
    }

    #[test]
    fn chordality_examples() {
        assert!(Family::Cycle.generate(4).unwrap().is_chordal().is_none());
        let k4 = complete(4);
        assert!(k4.is_chordal().unwrap().is_valid_for(&k4));
        let gc = six_vertex_example().complement();
        let peo = gc.is_chordal().unwrap();
        assert_eq!(peo.order()[0], 1);
        assert!(peo.is_valid_for(&gc));
    }

    #[test]
    fn simplicial_examples() {
        assert_eq!(complete(5).simplicial_vertices(), [1, 2, 3, 4, 5]);
        assert!(Family::Cycle.generate(5).unwrap().simplicial_vertices().is_empty());
        let s = six_vertex_example().complement().simplicial_vertices();
        assert!(s.contains(&1) && s.contains(&6));
    }

    #[test]
    fn tilde_of_six_vertex_example() {
        let t = six_vertex_example().tilde_graph(1).unwrap();
        assert_eq!(t.labels, [2, 3, 4, 5, 6]);
        // y1=1, y2=2, w1=3, w2=4, w3=5 after relabeling; complement has y1y2, y2w1
        assert_eq!(t.graph.complement().edges(), [(1, 2), (2, 3)]);
        assert!(t.graph.is_cochordal());
    }

    #[test]
    fn tilde_of_complete_and_star() {
        assert_eq!(complete(6).tilde_graph(3).unwrap().graph, complete(5));
        let star = Family::Star.generate(5).unwrap();
        // center is labeled 1
        assert_eq!(star.tilde_graph(1).unwrap().graph, complete(5));
    }

    #[test]
    fn tilde_rejects_non_simplicial_pivot() {
        // the complement of P4 is the path 3-1-4-2
        let p4 = path(4);
        assert_eq!(p4.tilde_graph(1), Err(Error::NotSimplicialInComplement(1)));
        assert!(p4.tilde_graph(2).is_ok());
    }

    #[test]
    fn predicate_examples() {
        let claw = Family::Star.generate(3).unwrap();
        assert!(!claw.structure_predicates().claw_free);
        let p = complete(4).structure_predicates();
        assert!(p.claw_free && p.gap_free && p.leaves.is_empty());
        assert_eq!(path(4).leaves(), [1, 4]);
        // 2K2 is the complement of C4
        let two_k2 = Graph::new(4, [(1, 2), (3, 4)]).unwrap();
        assert!(!two_k2.structure_predicates().gap_free);
    }

    #[test]
    fn leaf_partition_on_paw() {
        // paw: triangle 1-2-3 with pendant 4 on 3
        let paw = Graph::new(4, [(1, 2), (2, 3), (1, 3), (3, 4)]).unwrap();
        let (y, w) = paw.leaf_partition().unwrap();
        assert_eq!(y, set(&[1, 2, 3]));
        assert_eq!(w, set(&[4]));
    }
}

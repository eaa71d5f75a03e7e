//! Simplicial complexes given by facets, and the `r`-independence complexes.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A simplicial complex on the ground set `1..=n`, stored as its facets.
///
/// No facets at all is the void complex (no faces); the single facet `∅` is
/// the complex whose only face is the empty face.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Builds a complex from any generating family of faces; the facets are
    /// the inclusion-maximal members.
    pub fn from_facets<I: IntoIterator<Item = VertexSet>>(n: usize, faces: I) -> Result<Self> {
        if n > VertexSet::MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: VertexSet::MAX_VERTICES });
        }
        let ground = VertexSet::full(n);
        let mut all = Vec::new();
        for f in faces {
            if let Some(v) = f.difference(ground).min() {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            all.push(f);
        }
        Ok(SimplicialComplex { n, facets: maximal(all) })
    }

    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, facets: Vec::new() }
    }

    pub fn empty_face_only(n: usize) -> Self {
        SimplicialComplex { n, facets: alloc::vec![VertexSet::EMPTY] }
    }

    /// The full simplex on `1..=n`.
    pub fn simplex(n: usize) -> Self {
        SimplicialComplex { n, facets: alloc::vec![VertexSet::full(n)] }
    }

    /// The `r`-independence complex: subsets whose induced components all
    /// have at most `r` vertices.
    pub fn ind_r(g: &Graph, r: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::ZeroR);
        }
        let n = g.n();
        if g.max_component_size(g.vertices()) <= r {
            return Ok(Self::simplex(n));
        }
        let mut facets = Vec::new();
        grow_faces(g, r, 1, VertexSet::EMPTY, &mut facets);
        facets.sort_unstable();
        Ok(SimplicialComplex { n, facets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// True when no nonempty face remains.
    pub fn is_trivial(&self) -> bool {
        self.facets.iter().all(|f| f.is_empty())
    }

    /// Union of the facets.
    pub fn vertices(&self) -> VertexSet {
        self.facets.iter().fold(VertexSet::EMPTY, |a, &f| a.union(f))
    }

    pub fn contains_face(&self, s: VertexSet) -> bool {
        self.facets.iter().any(|&f| s.is_subset(f))
    }

    /// `max |F| - 1` over facets; `-1` for the empty-face complex.
    pub fn dimension(&self) -> Result<isize> {
        self.facets
            .iter()
            .map(|f| f.len() as isize - 1)
            .max()
            .ok_or(Error::VoidComplex)
    }

    /// Krull dimension of the Stanley–Reisner ring, `dim + 1`.
    pub fn krull_dimension(&self) -> Result<usize> {
        Ok((self.dimension()? + 1) as usize)
    }

    /// The subcomplex of faces contained in `w`.
    pub fn induced(&self, w: VertexSet) -> Self {
        SimplicialComplex {
            n: self.n,
            facets: maximal(self.facets.iter().map(|f| f.intersection(w)).collect()),
        }
    }

    /// Every face, ordered by size and then by mask.
    pub fn faces(&self) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = self.facets.iter().flat_map(|f| f.subsets()).collect();
        out.sort_unstable_by_key(|s| (s.len(), *s));
        out.dedup();
        out
    }

    /// Face counts `f_{-1}, f_0, f_1, ...`.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut counts = Vec::new();
        for f in self.faces() {
            if counts.len() <= f.len() {
                counts.resize(f.len() + 1, 0);
            }
            counts[f.len()] += 1;
        }
        counts
    }
}

/// Inclusion-maximal members, sorted and deduplicated.
pub(crate) fn maximal(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

fn grow_faces(g: &Graph, r: usize, v: usize, face: VertexSet, out: &mut Vec<VertexSet>) {
    let n = g.n();
    if v > n {
        let addable = g
            .vertices()
            .difference(face)
            .iter()
            .any(|u| g.component_within(u, face.with(u)).len() <= r);
        if !addable {
            out.push(face);
        }
        return;
    }
    let with_v = face.with(v);
    if g.component_within(v, with_v).len() <= r {
        grow_faces(g, r, v + 1, with_v, out);
    }
    grow_faces(g, r, v + 1, face, out);
}

/// Minimal non-faces of `Ind_r(G)`: the `(r+1)`-subsets inducing a connected
/// subgraph, in increasing mask order.
pub fn sr_generators(g: &Graph, r: usize) -> Result<Vec<VertexSet>> {
    if r == 0 {
        return Err(Error::ZeroR);
    }
    Ok(connected_subsets(g, g.vertices(), r + 1))
}

/// `k`-subsets of `within` that induce connected subgraphs.
pub(crate) fn connected_subsets(g: &Graph, within: VertexSet, k: usize) -> Vec<VertexSet> {
    VertexSet::combinations(g.n(), k)
        .filter(|s| s.is_subset(within))
        .filter(|&s| s.min().is_some_and(|v| g.component_within(v, s) == s))
        .collect()
}

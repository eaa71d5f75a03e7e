//! Elementary `d`-collapses.
//!
//! A face `σ` with `|σ| <= d` lying in exactly one facet `τ` is free; removing
//! every face containing `σ` is an elementary `d`-collapse. A complex is
//! `d`-collapsible when such steps reach the complex whose only face is `∅`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::complex::{connected_subsets, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreePair {
    pub sigma: VertexSet,
    pub tau: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollapseSequence {
    pub d: usize,
    pub steps: Vec<FreePair>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepFailure {
    SigmaTooLarge,
    SigmaNotInTau,
    NotAFace,
    NotUnique { facets: usize },
    TauNotTheFacet { facet: VertexSet },
    /// Reported with `index == steps.len()`.
    NonemptyAtEnd,
}

/// The first step that fails to replay.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvalidStep {
    pub index: usize,
    pub failure: StepFailure,
}

impl fmt::Display for InvalidStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            StepFailure::SigmaTooLarge => write!(f, "step {}: sigma exceeds the collapse parameter", self.index),
            StepFailure::SigmaNotInTau => write!(f, "step {}: sigma is not contained in tau", self.index),
            StepFailure::NotAFace => write!(f, "step {}: sigma is not a face", self.index),
            StepFailure::NotUnique { facets } => write!(f, "step {}: sigma lies in {facets} facets", self.index),
            StepFailure::TauNotTheFacet { facet } => {
                write!(f, "step {}: the facet containing sigma is {facet}", self.index)
            }
            StepFailure::NonemptyAtEnd => write!(f, "step {}: complex not empty after last step", self.index),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(CollapseSequence),
    /// Every sequence of free pairs stalls before the empty complex.
    NotCollapsible,
    BudgetExhausted,
}

/// The facets of the complex being collapsed.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Working(Vec<VertexSet>);

impl Working {
    fn containing(&self, sigma: VertexSet) -> impl Iterator<Item = VertexSet> + '_ {
        self.0.iter().copied().filter(move |f| sigma.is_subset(*f))
    }

    fn unique_facet(&self, sigma: VertexSet) -> core::result::Result<VertexSet, usize> {
        let mut it = self.containing(sigma);
        match (it.next(), it.next()) {
            (Some(t), None) => Ok(t),
            (None, _) => Err(0),
            (Some(_), Some(_)) => Err(2 + it.count()),
        }
    }

    /// Removes every face containing `sigma`, where `tau` is the only facet
    /// containing it.
    fn collapse(&mut self, sigma: VertexSet, tau: VertexSet) {
        self.0.retain(|&f| f != tau);
        for v in sigma {
            let c = tau.without(v);
            if !self.0.iter().any(|f| c.is_subset(*f)) {
                self.0.push(c);
            }
        }
        self.0.sort_unstable();
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|f| f.is_empty())
    }

    fn free_pairs(&self, d: usize) -> Vec<FreePair> {
        let mut out = Vec::new();
        for &tau in &self.0 {
            for sigma in tau.subsets().filter(|s| !s.is_empty() && s.len() <= d) {
                if self.containing(sigma).nth(1).is_none() {
                    out.push(FreePair { sigma, tau });
                }
            }
        }
        out.sort_by_key(|p| (p.sigma.len(), p.tau, p.sigma));
        out
    }
}

/// Replays `seq` on `d0` with parameter `d`.
pub fn verify_collapse(d0: &SimplicialComplex, seq: &CollapseSequence, d: usize) -> core::result::Result<(), InvalidStep> {
    let mut work = Working(d0.facets().to_vec());
    for (index, step) in seq.steps.iter().enumerate() {
        let fail = |failure| Err(InvalidStep { index, failure });
        if step.sigma.len() > d {
            return fail(StepFailure::SigmaTooLarge);
        }
        if !step.sigma.is_subset(step.tau) {
            return fail(StepFailure::SigmaNotInTau);
        }
        match work.unique_facet(step.sigma) {
            Err(0) => return fail(StepFailure::NotAFace),
            Err(facets) => return fail(StepFailure::NotUnique { facets }),
            Ok(t) if t != step.tau => return fail(StepFailure::TauNotTheFacet { facet: t }),
            Ok(_) => work.collapse(step.sigma, step.tau),
        }
    }
    if work.is_empty() {
        Ok(())
    } else {
        Err(InvalidStep { index: seq.steps.len(), failure: StepFailure::NonemptyAtEnd })
    }
}

fn lex_key(s: &VertexSet) -> Vec<usize> {
    s.iter().collect()
}

/// Collapses every face `F` with `2 <= |F| <= r` and `G[F]` connected, level
/// by level from `|F| = r` down, each in lexicographic order. Requires the
/// complement of `g` to have no induced 4-cycle; afterwards `work` is
/// `Ind_1(G)`.
fn collapse_connected_faces(g: &Graph, r: usize, work: &mut Working, steps: &mut Vec<FreePair>) -> Result<()> {
    for s in (2..=r.min(g.n())).rev() {
        let mut faces = connected_subsets(g, g.vertices(), s);
        faces.sort_by_key(lex_key);
        let mut taus = Vec::with_capacity(faces.len());
        for &f in &faces {
            let tau = work
                .unique_facet(f)
                .map_err(|k| Error::Inconsistency(format!("connected face {f} lies in {k} facets")))?;
            taus.push(tau);
        }
        let distinct: BTreeSet<_> = taus.iter().collect();
        if distinct.len() != taus.len() {
            return Err(Error::Inconsistency(format!("two connected {s}-faces share a facet")));
        }
        for (&sigma, &tau) in faces.iter().zip(&taus) {
            if work.unique_facet(sigma) != Ok(tau) {
                return Err(Error::Inconsistency(format!("facet of {sigma} changed during level {s}")));
            }
            work.collapse(sigma, tau);
            steps.push(FreePair { sigma, tau });
        }
    }
    Ok(())
}

/// An `r`-collapse of `Ind_r(G)` for co-chordal `G`.
///
/// First every face inducing a connected subgraph on at least two vertices is
/// collapsed, largest first, leaving `Ind_1(G)`. The vertices of `Ind_1(G)`
/// are then collapsed one by one along a perfect elimination order of the
/// complement; should that ever stall, the remainder is found by
/// [`search_d_collapse`] with `d = 1`.
pub fn chordal_collapse_sequence(g: &Graph, r: usize) -> Result<CollapseSequence> {
    if r == 0 {
        return Err(Error::ZeroR);
    }
    let peo = g.complement().is_chordal().ok_or(Error::NotCoChordal)?;
    let mut work = Working(SimplicialComplex::ind_r(g, r)?.facets().to_vec());
    let mut steps = Vec::new();
    collapse_connected_faces(g, r, &mut work, &mut steps)?;
    let ind1 = SimplicialComplex::ind_r(g, 1)?;
    if work.0 != ind1.facets() {
        return Err(Error::Inconsistency(format!("residual complex is not Ind_1 of {g:?}")));
    }
    for &v in peo.order() {
        let sigma = VertexSet::singleton(v);
        match work.unique_facet(sigma) {
            Ok(tau) => {
                work.collapse(sigma, tau);
                steps.push(FreePair { sigma, tau });
            }
            Err(_) => {
                let rest = SimplicialComplex::from_facets(g.n(), work.0.iter().copied())?;
                match search_d_collapse(&rest, 1, DEFAULT_BUDGET) {
                    SearchOutcome::Found(tail) => {
                        steps.extend(tail.steps);
                        break;
                    }
                    _ => return Err(Error::Inconsistency(format!("Ind_1 of {g:?} did not 1-collapse"))),
                }
            }
        }
    }
    Ok(CollapseSequence { d: r, steps })
}

/// An `r`-collapse of `Ind_r(G)` when the complement of `G` has no induced
/// 4-cycle and `dim Ind_1(G) <= r - 1`: connected faces as in
/// [`chordal_collapse_sequence`], then the remaining facets one at a time.
pub fn c4_free_collapse_sequence(g: &Graph, r: usize) -> Result<CollapseSequence> {
    if r == 0 {
        return Err(Error::ZeroR);
    }
    if g.complement().has_induced_c4() {
        return Err(Error::InvalidParameter("complement has an induced 4-cycle".into()));
    }
    let ind1 = SimplicialComplex::ind_r(g, 1)?;
    if ind1.dimension()? + 1 > r as isize {
        return Err(Error::InvalidParameter(format!("dim Ind_1 exceeds r - 1 = {}", r - 1)));
    }
    let mut work = Working(SimplicialComplex::ind_r(g, r)?.facets().to_vec());
    let mut steps = Vec::new();
    collapse_connected_faces(g, r, &mut work, &mut steps)?;
    while let Some(&tau) = work.0.iter().find(|f| !f.is_empty()) {
        work.collapse(tau, tau);
        steps.push(FreePair { sigma: tau, tau });
    }
    Ok(CollapseSequence { d: r, steps })
}

pub const DEFAULT_BUDGET: usize = 1_000_000;

struct Frame {
    work: Working,
    candidates: Vec<FreePair>,
    next: usize,
}

/// Depth-first search over free pairs, never revisiting a complex. `budget`
/// caps the number of distinct complexes explored.
pub fn search_d_collapse(d0: &SimplicialComplex, d: usize, budget: usize) -> SearchOutcome {
    let root = Working(d0.facets().to_vec());
    if root.is_empty() {
        return SearchOutcome::Found(CollapseSequence { d, steps: Vec::new() });
    }
    let mut seen = BTreeSet::new();
    seen.insert(root.0.clone());
    let candidates = root.free_pairs(d);
    let mut stack = alloc::vec![Frame { work: root, candidates, next: 0 }];
    let mut path: Vec<FreePair> = Vec::new();
    while let Some(top) = stack.last_mut() {
        if top.next == top.candidates.len() {
            stack.pop();
            path.pop();
            continue;
        }
        let pair = top.candidates[top.next];
        top.next += 1;
        let mut child = top.work.clone();
        child.collapse(pair.sigma, pair.tau);
        if child.is_empty() {
            path.push(pair);
            return SearchOutcome::Found(CollapseSequence { d, steps: path });
        }
        if !seen.insert(child.0.clone()) {
            continue;
        }
        if seen.len() > budget {
            return SearchOutcome::BudgetExhausted;
        }
        let candidates = child.free_pairs(d);
        path.push(pair);
        stack.push(Frame { work: child, candidates, next: 0 });
    }
    SearchOutcome::NotCollapsible
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::Family;

    fn set(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v.iter().copied())
    }

    fn pair(s: &[usize], t: &[usize]) -> FreePair {
        FreePair { sigma: set(s), tau: set(t) }
    }

    fn hollow_triangle() -> SimplicialComplex {
        SimplicialComplex::from_facets(3, VertexSet::combinations(3, 2)).unwrap()
    }

    #[test]
    fn verify_examples() {
        let point = SimplicialComplex::simplex(1);
        let seq = CollapseSequence { d: 1, steps: alloc::vec![pair(&[1], &[1])] };
        assert_eq!(verify_collapse(&point, &seq, 1), Ok(()));

        let seq = CollapseSequence {
            d: 2,
            steps: alloc::vec![pair(&[1, 2], &[1, 2]), pair(&[1], &[1, 3]), pair(&[2], &[2, 3]), pair(&[3], &[3])],
        };
        assert_eq!(verify_collapse(&hollow_triangle(), &seq, 2), Ok(()));
        // too small a parameter for the first step
        assert_eq!(verify_collapse(&hollow_triangle(), &seq, 1).unwrap_err().index, 0);

        let bad = CollapseSequence { d: 1, steps: alloc::vec![pair(&[1], &[1, 2])] };
        assert_eq!(
            verify_collapse(&hollow_triangle(), &bad, 1),
            Err(InvalidStep { index: 0, failure: StepFailure::NotUnique { facets: 2 } })
        );
        let short = CollapseSequence { d: 2, steps: seq.steps[..2].to_vec() };
        assert_eq!(verify_collapse(&hollow_triangle(), &short, 2).unwrap_err().failure, StepFailure::NonemptyAtEnd);
    }

    #[test]
    fn search_examples() {
        assert_eq!(search_d_collapse(&hollow_triangle(), 1, 1000), SearchOutcome::NotCollapsible);
        let SearchOutcome::Found(seq) = search_d_collapse(&hollow_triangle(), 2, 1000) else { panic!() };
        assert_eq!(verify_collapse(&hollow_triangle(), &seq, 2), Ok(()));
        let simplex = SimplicialComplex::simplex(4);
        let SearchOutcome::Found(seq) = search_d_collapse(&simplex, 1, 1000) else { panic!() };
        assert_eq!(verify_collapse(&simplex, &seq, 1), Ok(()));
    }

    #[test]
    fn search_budget() {
        let simplex = SimplicialComplex::simplex(4);
        assert_eq!(search_d_collapse(&simplex, 1, 1), SearchOutcome::BudgetExhausted);
        // octahedron boundary is a 2-sphere: no free faces at all
        let oct = SimplicialComplex::from_facets(
            6,
            [1, 2].iter().flat_map(|&a| [3, 4].iter().flat_map(move |&b| [5, 6].iter().map(move |&c| set(&[a, b, c])))),
        )
        .unwrap();
        assert_eq!(search_d_collapse(&oct, 2, DEFAULT_BUDGET), SearchOutcome::NotCollapsible);
    }

    #[test]
    fn path_three_at_r_two() {
        let p3 = Family::Path.generate(3).unwrap();
        let seq = chordal_collapse_sequence(&p3, 2).unwrap();
        assert_eq!(seq.steps[0], pair(&[1, 2], &[1, 2]));
        let d = SimplicialComplex::ind_r(&p3, 2).unwrap();
        assert_eq!(verify_collapse(&d, &seq, 2), Ok(()));
    }

    #[test]
    fn complete_four_at_r_two() {
        let k4 = Family::Complete.generate(4).unwrap();
        let seq = chordal_collapse_sequence(&k4, 2).unwrap();
        // six edges collapse against themselves, then four points
        assert_eq!(seq.steps.len(), 10);
        assert!(seq.steps[..6].iter().all(|p| p.sigma == p.tau && p.sigma.len() == 2));
        assert_eq!(verify_collapse(&SimplicialComplex::ind_r(&k4, 2).unwrap(), &seq, 2), Ok(()));
    }

    #[test]
    fn six_vertex_example_collapses() {
        let g = Graph::new(6, [(2, 3), (2, 1), (1, 3), (3, 4), (4, 5), (5, 6)]).unwrap().complement();
        for r in 1..=6 {
            let seq = chordal_collapse_sequence(&g, r).unwrap();
            assert_eq!(verify_collapse(&SimplicialComplex::ind_r(&g, r).unwrap(), &seq, r), Ok(()), "r={r}");
        }
    }

    #[test]
    fn refuses_non_cochordal() {
        let two_edges = Graph::new(4, [(1, 2), (3, 4)]).unwrap();
        assert_eq!(chordal_collapse_sequence(&two_edges, 2), Err(Error::NotCoChordal));
    }

    #[test]
    fn cycle_complements_collapse_for_r_at_least_two() {
        for n in 5..=8 {
            let g = Family::CycleComplement.generate(n).unwrap();
            assert!(g.complement().is_chordal().is_none());
            for r in 2..=n {
                let seq = c4_free_collapse_sequence(&g, r).unwrap();
                assert_eq!(verify_collapse(&SimplicialComplex::ind_r(&g, r).unwrap(), &seq, r), Ok(()), "n={n} r={r}");
            }
            assert!(c4_free_collapse_sequence(&g, 1).is_err());
        }
    }
}

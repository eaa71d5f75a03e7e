//! Square-free monomial ideals and vertex splittings.
//!
//! A monomial ideal `I` is vertex splittable when it is `0`, `R`, principal,
//! or `I = x·J1 + J2` where `J1`, `J2` are vertex splittable ideals not
//! involving `x`, `J2 ⊆ J1`, and the minimal generators of `I` are the
//! disjoint union of those of `x·J1` and `J2`. A [`SplitTree`] records one
//! such recursive decomposition.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::complex::connected_subsets;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A square-free monomial ideal in `K[x_1, ..., x_n]`, stored as the supports
/// of its minimal generators (sorted, pairwise incomparable).
///
/// No generators is the zero ideal; the single generator `∅` (the monomial 1)
/// is the unit ideal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SquareFreeIdeal {
    n: usize,
    gens: Vec<VertexSet>,
}

impl SquareFreeIdeal {
    pub fn zero(n: usize) -> Self {
        SquareFreeIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        SquareFreeIdeal { n, gens: alloc::vec![VertexSet::EMPTY] }
    }

    pub fn principal(n: usize, support: VertexSet) -> Self {
        SquareFreeIdeal { n, gens: alloc::vec![support] }
    }

    /// The ideal generated by the variables in `vars`.
    pub fn variables(n: usize, vars: VertexSet) -> Self {
        SquareFreeIdeal { n, gens: vars.iter().map(VertexSet::singleton).collect() }
    }

    /// Ideal generated by the given monomial supports; non-minimal
    /// generators are dropped.
    pub fn from_generators<I: IntoIterator<Item = VertexSet>>(n: usize, gens: I) -> Result<Self> {
        let ground = VertexSet::full(n);
        let mut all = Vec::new();
        for m in gens {
            if let Some(v) = m.difference(ground).min() {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            all.push(m);
        }
        Ok(SquareFreeIdeal { n, gens: minimal(all) })
    }

    /// The Stanley–Reisner ideal `I_r(G)` of `Ind_r(G)`.
    pub fn of_graph(g: &Graph, r: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::ZeroR);
        }
        Ok(Self::of_graph_within(g, g.vertices(), r))
    }

    pub(crate) fn of_graph_within(g: &Graph, active: VertexSet, r: usize) -> Self {
        SquareFreeIdeal { n: g.n(), gens: connected_subsets(g, active, r + 1) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[VertexSet] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first() == Some(&VertexSet::EMPTY)
    }

    /// Single nonunit generator.
    pub fn as_principal(&self) -> Option<VertexSet> {
        match self.gens.as_slice() {
            [m] if !m.is_empty() => Some(*m),
            _ => None,
        }
    }

    /// Variables occurring in some generator.
    pub fn support(&self) -> VertexSet {
        self.gens.iter().fold(VertexSet::EMPTY, |a, &m| a.union(m))
    }

    pub fn contains_monomial(&self, m: VertexSet) -> bool {
        self.gens.iter().any(|g| g.is_subset(m))
    }

    /// `self ⊆ other`.
    pub fn is_subideal_of(&self, other: &SquareFreeIdeal) -> bool {
        self.gens.iter().all(|&m| other.contains_monomial(m))
    }

    /// `x · self`.
    pub fn times_variable(&self, x: usize) -> Self {
        SquareFreeIdeal { n: self.n, gens: minimal(self.gens.iter().map(|m| m.with(x)).collect()) }
    }

    /// The canonical splitting candidate at `x`: `J1` is generated by the
    /// quotients `m / x` of generators divisible by `x`, `J2` by the
    /// generators not divisible by `x`.
    pub fn split_at(&self, x: usize) -> (Self, Self) {
        let (with, without): (Vec<VertexSet>, Vec<VertexSet>) = self.gens.iter().partition(|m| m.contains(x));
        let j1 = SquareFreeIdeal { n: self.n, gens: minimal(with.into_iter().map(|m| m.without(x)).collect()) };
        let j2 = SquareFreeIdeal { n: self.n, gens: without };
        (j1, j2)
    }
}

impl fmt::Display for SquareFreeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("<0>");
        }
        f.write_str("<")?;
        for (i, m) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            if m.is_empty() {
                f.write_str("1")?;
            }
            for v in m.iter() {
                write!(f, "x{v}")?;
            }
        }
        f.write_str(">")
    }
}

/// Minimal elements under inclusion, sorted.
fn minimal(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_unstable_by_key(|s| (s.len(), *s));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

/// Checks one splitting step `I = x·J1 + J2`.
pub fn verify_split_node(i: &SquareFreeIdeal, x: usize, j1: &SquareFreeIdeal, j2: &SquareFreeIdeal) -> bool {
    if j1.support().union(j2.support()).contains(x) || !j2.is_subideal_of(j1) {
        return false;
    }
    let mut union: Vec<VertexSet> = j1.gens.iter().map(|m| m.with(x)).chain(j2.gens.iter().copied()).collect();
    union.sort_unstable();
    let disjoint = union.windows(2).all(|w| w[0] != w[1]);
    disjoint && union == i.gens
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SplitNode {
    Zero,
    Unit,
    Principal(VertexSet),
    Split { pivot: usize, left: Box<SplitTree>, right: Box<SplitTree> },
}

/// A vertex-splitting decomposition. `left` holds `J1`, `right` holds `J2`;
/// every node keeps its ideal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SplitTree {
    pub ideal: SquareFreeIdeal,
    pub node: SplitNode,
}

impl SplitTree {
    /// A leaf for the zero ideal, the unit ideal or a principal ideal.
    pub fn leaf(ideal: SquareFreeIdeal) -> Option<Self> {
        let node = if ideal.is_zero() {
            SplitNode::Zero
        } else if ideal.is_unit() {
            SplitNode::Unit
        } else {
            SplitNode::Principal(ideal.as_principal()?)
        };
        Some(SplitTree { ideal, node })
    }

    fn split(ideal: SquareFreeIdeal, pivot: usize, left: SplitTree, right: SplitTree) -> Self {
        SplitTree { ideal, node: SplitNode::Split { pivot, left: Box::new(left), right: Box::new(right) } }
    }

    /// The node `x·J1 + J2` over the subtrees for `J1` and `J2`.
    pub fn join(pivot: usize, left: SplitTree, right: SplitTree) -> Result<Self> {
        let n = left.ideal.n.max(right.ideal.n);
        let gens = left.ideal.gens.iter().map(|m| m.with(pivot)).chain(right.ideal.gens.iter().copied());
        let ideal = SquareFreeIdeal::from_generators(n, gens)?;
        if !verify_split_node(&ideal, pivot, &left.ideal, &right.ideal) {
            return Err(Error::Inconsistency(alloc::format!("x{pivot}·{} + {} is not a splitting", left.ideal, right.ideal)));
        }
        Ok(SplitTree::split(ideal, pivot, left, right))
    }

    /// Checks every node: leaves match their ideals and every split satisfies
    /// [`verify_split_node`].
    pub fn verify(&self) -> bool {
        match &self.node {
            SplitNode::Zero => self.ideal.is_zero(),
            SplitNode::Unit => self.ideal.is_unit(),
            SplitNode::Principal(m) => self.ideal.as_principal() == Some(*m),
            SplitNode::Split { pivot, left, right } => {
                verify_split_node(&self.ideal, *pivot, &left.ideal, &right.ideal) && left.verify() && right.verify()
            }
        }
    }

    pub fn node_count(&self) -> usize {
        match &self.node {
            SplitNode::Split { left, right, .. } => 1 + left.node_count() + right.node_count(),
            _ => 1,
        }
    }

    pub fn depth(&self) -> usize {
        match &self.node {
            SplitNode::Split { left, right, .. } => 1 + left.depth().max(right.depth()),
            _ => 0,
        }
    }

    /// Pre-order walk over all nodes.
    pub fn for_each(&self, f: &mut impl FnMut(&SplitTree)) {
        f(self);
        if let SplitNode::Split { left, right, .. } = &self.node {
            left.for_each(f);
            right.for_each(f);
        }
    }
}

/// Split tree for `I_r(G)` of a co-chordal graph, pivoting at the smallest
/// simplicial vertex of the complement at every step.
pub fn cochordal_split_tree(g: &Graph, r: usize) -> Result<SplitTree> {
    cochordal_split_tree_with(g, r, &mut |_: &[usize]| 0)
}

/// As [`cochordal_split_tree`], with `choose` picking the pivot: it receives
/// the simplicial vertices of the current complement (increasing) and returns
/// an index into that slice.
pub fn cochordal_split_tree_with(
    g: &Graph,
    r: usize,
    choose: &mut dyn FnMut(&[usize]) -> usize,
) -> Result<SplitTree> {
    if r == 0 {
        return Err(Error::ZeroR);
    }
    if !g.is_cochordal() {
        return Err(Error::NotCoChordal);
    }
    build_cochordal(g, g.vertices(), r, choose)
}

fn build_cochordal(
    g: &Graph,
    active: VertexSet,
    r: usize,
    choose: &mut dyn FnMut(&[usize]) -> usize,
) -> Result<SplitTree> {
    let ideal = SquareFreeIdeal::of_graph_within(g, active, r);
    if ideal.is_zero() || ideal.gens.len() == 1 {
        return Ok(SplitTree::leaf(ideal).expect("zero or single generator"));
    }
    let co = g.complement_within(active);
    let simplicial: Vec<usize> = active.iter().filter(|&v| co.is_simplicial(v)).collect();
    if simplicial.is_empty() {
        return Err(Error::NotCoChordal);
    }
    let x = simplicial[choose(&simplicial).min(simplicial.len() - 1)];
    let rest = active.without(x);
    let left = if r == 1 {
        variable_chain(g.n(), g.neighbors(x).intersection(rest))
    } else {
        build_cochordal(&g.tilde_within(active, x)?, rest, r - 1, choose)?
    };
    let right = build_cochordal(g, rest, r, choose)?;
    if !verify_split_node(&ideal, x, &left.ideal, &right.ideal) {
        return Err(Error::Inconsistency(alloc::format!("splitting {ideal} at x{x} failed")));
    }
    Ok(SplitTree::split(ideal, x, left, right))
}

/// `<x_a, x_b, ...> = x_a·R + <x_b, ...>`, repeatedly.
fn variable_chain(n: usize, vars: VertexSet) -> SplitTree {
    let ideal = SquareFreeIdeal::variables(n, vars);
    match vars.min() {
        Some(x) if vars.len() > 1 => {
            let right = variable_chain(n, vars.without(x));
            SplitTree::split(ideal, x, SplitTree::leaf(SquareFreeIdeal::unit(n)).expect("unit"), right)
        }
        _ => SplitTree::leaf(ideal).expect("at most one variable"),
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SplitSearch {
    Found(SplitTree),
    /// Every pivot sequence with the canonical quotient `J1` fails.
    NotSplittable,
    BudgetExhausted,
}

struct Exhausted;

/// Exhaustive search for a vertex splitting where each pivot `x` uses the
/// canonical pair from [`SquareFreeIdeal::split_at`]. `budget` caps the number
/// of ideals visited.
pub fn generic_split_search(i: &SquareFreeIdeal, budget: usize) -> SplitSearch {
    let mut remaining = budget;
    let mut failed = BTreeSet::new();
    match search(i, &mut remaining, &mut failed) {
        Ok(Some(t)) => SplitSearch::Found(t),
        Ok(None) => SplitSearch::NotSplittable,
        Err(Exhausted) => SplitSearch::BudgetExhausted,
    }
}

fn search(
    i: &SquareFreeIdeal,
    remaining: &mut usize,
    failed: &mut BTreeSet<Vec<VertexSet>>,
) -> core::result::Result<Option<SplitTree>, Exhausted> {
    if *remaining == 0 {
        return Err(Exhausted);
    }
    *remaining -= 1;
    if let Some(leaf) = SplitTree::leaf(i.clone()) {
        return Ok(Some(leaf));
    }
    if failed.contains(&i.gens) {
        return Ok(None);
    }
    for x in i.support() {
        let (j1, j2) = i.split_at(x);
        if !j2.is_subideal_of(&j1) {
            continue;
        }
        let Some(left) = search(&j1, remaining, failed)? else { continue };
        let Some(right) = search(&j2, remaining, failed)? else { continue };
        return Ok(Some(SplitTree::split(i.clone(), x, left, right)));
    }
    failed.insert(i.gens.clone());
    Ok(None)
}

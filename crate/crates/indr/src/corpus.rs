//! Seeded graph corpora and the cross-checks run over them.

use std::cell::OnceCell;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use indr_core::collapse::{chordal_collapse_sequence, verify_collapse};
use indr_core::homology::{hochster_betti, leray_number};
use indr_core::ideal::cochordal_split_tree;
use indr_core::{BettiTable, Family, FieldSpec, Graph, SimplicialComplex, SquareFreeIdeal, VertexSet};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorpusKind {
    RandomCochordal,
    /// `K_n` with some edges inside the blocks of a random partition removed.
    BlockDeletedComplete,
    Named(Family),
}

impl fmt::Display for CorpusKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorpusKind::RandomCochordal => f.write_str("random_cochordal"),
            CorpusKind::BlockDeletedComplete => f.write_str("random_block_deleted_complete"),
            CorpusKind::Named(family) => write!(f, "{family}"),
        }
    }
}

impl FromStr for CorpusKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "random_cochordal" => Ok(CorpusKind::RandomCochordal),
            "random_block_deleted_complete" => Ok(CorpusKind::BlockDeletedComplete),
            other => other.parse::<Family>().map(CorpusKind::Named).map_err(|_| {
                format!("unknown corpus family `{other}`; expected random_cochordal, random_block_deleted_complete or a family name")
            }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    /// Split-tree Betti table equals the Hochster table.
    Split,
    /// `reg I_r = r + 1` and `reg = Leray + 1`.
    Regularity,
    /// The constructed `r`-collapse verifies and `Leray <= r`.
    Collapse,
    /// `Ind_r(K_n) = Ind_r(H)` for every `r` at least the largest block.
    BlockDeletion,
}

impl Check {
    pub const ALL: [Check; 4] = [Check::Split, Check::Regularity, Check::Collapse, Check::BlockDeletion];

    pub fn name(self) -> &'static str {
        match self {
            Check::Split => "split",
            Check::Regularity => "reg",
            Check::Collapse => "collapse",
            Check::BlockDeletion => "block",
        }
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Check::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| format!("unknown check `{s}`"))
    }
}

#[derive(Clone, Debug)]
pub struct CorpusSpec {
    pub kind: CorpusKind,
    pub count: usize,
    pub n_range: RangeInclusive<usize>,
    pub seed: u64,
}

impl CorpusSpec {
    pub const ORACLE_LIMIT: usize = 12;

    pub fn validate(&self, oracle: bool) -> Result<(), String> {
        let (lo, hi) = (*self.n_range.start(), *self.n_range.end());
        if lo == 0 || lo > hi {
            return Err(format!("bad vertex range {lo}..={hi}"));
        }
        if oracle && hi > Self::ORACLE_LIMIT {
            return Err(format!("oracle checks are limited to n <= {}", Self::ORACLE_LIMIT));
        }
        Ok(())
    }
}

/// A corpus graph; block-deleted items remember their partition.
#[derive(Clone, Debug)]
pub struct CorpusItem {
    pub graph: Graph,
    pub blocks: Option<Vec<VertexSet>>,
}

/// A chordal graph grown by attaching each new vertex to a random clique
/// inside the closed neighborhood of a random earlier vertex, relabeled at
/// random and complemented.
pub fn random_cochordal(rng: &mut impl Rng, n: usize) -> Graph {
    let mut adj = vec![VertexSet::EMPTY; n + 1];
    for k in 2..=n {
        let u = rng.gen_range(1..k);
        let mut candidates: Vec<usize> = adj[u].iter().collect();
        candidates.shuffle(rng);
        let mut clique = VertexSet::singleton(u);
        for w in candidates {
            if clique.is_subset(adj[w]) {
                clique = clique.with(w);
            }
        }
        for v in clique.iter().filter(|_| rng.gen_bool(0.5)) {
            adj[v] = adj[v].with(k);
            adj[k] = adj[k].with(v);
        }
    }
    let mut perm: Vec<usize> = (1..=n).collect();
    perm.shuffle(rng);
    let edges: Vec<(usize, usize)> = (1..=n)
        .flat_map(|v| adj[v].iter().filter(move |&w| w > v).map(move |w| (v, w)))
        .map(|(v, w)| (perm[v - 1], perm[w - 1]))
        .collect();
    Graph::new(n, edges).expect("labels in range").complement()
}

/// `K_n` after deleting a random subset of the edges inside the blocks of a
/// random partition of the vertices.
pub fn random_block_deleted(rng: &mut impl Rng, n: usize) -> (Graph, Vec<VertexSet>) {
    let parts = rng.gen_range(1..=n);
    let mut blocks = vec![VertexSet::EMPTY; parts];
    for v in 1..=n {
        let b = rng.gen_range(0..parts);
        blocks[b] = blocks[b].with(v);
    }
    blocks.retain(|b| !b.is_empty());
    let same_block = |u: usize, v: usize| blocks.iter().any(|b| b.contains(u) && b.contains(v));
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            let delete = same_block(u, v) && rng.gen_bool(0.5);
            if !delete {
                edges.push((u, v));
            }
        }
    }
    (Graph::new(n, edges).expect("labels in range"), blocks)
}

pub fn generate(spec: &CorpusSpec) -> Vec<CorpusItem> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    match spec.kind {
        CorpusKind::Named(family) => spec
            .n_range
            .clone()
            .filter_map(|n| family.generate(n).ok())
            .map(|graph| CorpusItem { graph, blocks: None })
            .collect(),
        CorpusKind::RandomCochordal => (0..spec.count)
            .map(|_| {
                let n = rng.gen_range(spec.n_range.clone());
                CorpusItem { graph: random_cochordal(&mut rng, n), blocks: None }
            })
            .collect(),
        CorpusKind::BlockDeletedComplete => (0..spec.count)
            .map(|_| {
                let n = rng.gen_range(spec.n_range.clone());
                let (graph, blocks) = random_block_deleted(&mut rng, n);
                CorpusItem { graph, blocks: Some(blocks) }
            })
            .collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    /// The check does not apply to this item.
    Skip,
}

#[derive(Clone, Debug)]
pub struct ItemReport {
    pub index: usize,
    pub graph: Graph,
    /// One entry per check and `r`.
    pub outcomes: Vec<(Check, usize, Outcome)>,
}

pub fn check_item(item: &CorpusItem, checks: &[Check], field: FieldSpec) -> Vec<(Check, usize, Outcome)> {
    let g = &item.graph;
    let n = g.n();
    let cochordal = g.is_cochordal();
    let mut out = Vec::new();
    for r in 1..=n {
        let ideal_zero = SquareFreeIdeal::of_graph(g, r).map(|i| i.is_zero()).unwrap_or(true);
        let complex = SimplicialComplex::ind_r(g, r).expect("r >= 1");
        let oracle = OnceCell::new();
        let oracle_table =
            || oracle.get_or_init(|| hochster_betti(&complex, field).map_err(|e| e.to_string())).clone();
        for &check in checks {
            let outcome = match check {
                Check::Split if !cochordal || ideal_zero => Outcome::Skip,
                Check::Split => {
                    let split = cochordal_split_tree(g, r)
                        .and_then(|t| BettiTable::from_split_tree(&t))
                        .map_err(|e| e.to_string());
                    match (split, oracle_table()) {
                        (Ok(s), Ok(o)) if s == o => Outcome::Pass,
                        (Ok(s), Ok(o)) => {
                            Outcome::Fail(format!("split {:?} != oracle {:?}", s.entries().collect::<Vec<_>>(), o.entries().collect::<Vec<_>>()))
                        }
                        (Err(e), _) | (_, Err(e)) => Outcome::Fail(e),
                    }
                }
                Check::Regularity if ideal_zero => Outcome::Skip,
                Check::Regularity => match oracle_table() {
                    Err(e) => Outcome::Fail(e),
                    Ok(t) => {
                        let reg = t.regularity(true).expect("nonzero ideal");
                        let leray = leray_number(&complex, field);
                        if reg != leray + 1 {
                            Outcome::Fail(format!("reg {reg} but Leray number {leray}"))
                        } else if cochordal && reg != r + 1 {
                            Outcome::Fail(format!("reg {reg} != r + 1 for a co-chordal graph"))
                        } else {
                            Outcome::Pass
                        }
                    }
                },
                Check::Collapse if !cochordal => Outcome::Skip,
                Check::Collapse => match chordal_collapse_sequence(g, r) {
                    Err(e) => Outcome::Fail(e.to_string()),
                    Ok(seq) => match verify_collapse(&complex, &seq, r) {
                        Err(step) => Outcome::Fail(step.to_string()),
                        Ok(()) => {
                            let leray = leray_number(&complex, field);
                            if leray <= r {
                                Outcome::Pass
                            } else {
                                Outcome::Fail(format!("collapsible at {r} but Leray number {leray}"))
                            }
                        }
                    },
                },
                Check::BlockDeletion => match &item.blocks {
                    None => Outcome::Skip,
                    Some(blocks) if r < blocks.iter().map(|b| b.len()).max().unwrap_or(0) => Outcome::Skip,
                    Some(_) => {
                        let k = Family::Complete.generate(n).expect("n >= 1");
                        if SimplicialComplex::ind_r(&k, r).expect("r >= 1") == complex {
                            Outcome::Pass
                        } else {
                            Outcome::Fail("Ind_r(K_n) differs after block deletion".to_string())
                        }
                    }
                },
            };
            out.push((check, r, outcome));
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct CorpusReport {
    pub spec: CorpusSpec,
    pub checks: Vec<Check>,
    pub field: FieldSpec,
    pub items: Vec<ItemReport>,
}

impl CorpusReport {
    pub fn failures(&self) -> usize {
        self.items.iter().flat_map(|i| &i.outcomes).filter(|(_, _, o)| matches!(o, Outcome::Fail(_))).count()
    }

    /// `(passed, failed, skipped)` per check.
    pub fn tally(&self) -> BTreeMap<Check, (usize, usize, usize)> {
        let mut t = BTreeMap::new();
        for c in &self.checks {
            t.insert(*c, (0, 0, 0));
        }
        for (check, _, outcome) in self.items.iter().flat_map(|i| &i.outcomes) {
            let e = t.entry(*check).or_insert((0, 0, 0));
            match outcome {
                Outcome::Pass => e.0 += 1,
                Outcome::Fail(_) => e.1 += 1,
                Outcome::Skip => e.2 += 1,
            }
        }
        t
    }
}

impl fmt::Display for CorpusReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let checks: Vec<&str> = self.checks.iter().map(|c| c.name()).collect();
        writeln!(
            f,
            "corpus kind={} count={} n={}..={} seed={} char={} checks={}",
            self.spec.kind,
            self.items.len(),
            self.spec.n_range.start(),
            self.spec.n_range.end(),
            self.spec.seed,
            self.field.characteristic(),
            checks.join(",")
        )?;
        for item in &self.items {
            for (check, r, outcome) in &item.outcomes {
                if let Outcome::Fail(msg) = outcome {
                    let edges: Vec<String> = item.graph.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
                    writeln!(
                        f,
                        "FAIL item={} check={} r={r} n={} edges=[{}]: {msg}",
                        item.index,
                        check.name(),
                        item.graph.n(),
                        edges.join(" ")
                    )?;
                }
            }
        }
        for (check, (pass, fail, skip)) in self.tally() {
            writeln!(f, "{:<8} pass={pass} fail={fail} skip={skip}", check.name())?;
        }
        writeln!(f, "failures={}", self.failures())
    }
}

/// Generates the corpus and runs `checks` on every item in parallel; item
/// order in the report follows generation order.
pub fn run(spec: &CorpusSpec, checks: &[Check], field: FieldSpec) -> CorpusReport {
    let items = generate(spec);
    let reports = items
        .par_iter()
        .enumerate()
        .map(|(index, item)| ItemReport { index, graph: item.graph.clone(), outcomes: check_item(item, checks, field) })
        .collect();
    CorpusReport { spec: spec.clone(), checks: checks.to_vec(), field, items: reports }
}

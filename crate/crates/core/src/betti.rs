//! Graded Betti tables of `R/I`.
//!
//! Tables are stored in the quotient convention `β_{i,j}(R/I)`; the ideal
//! convention is `β_{i,j}(I) = β_{i+1,j}(R/I)`.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::family::Family;
use crate::ideal::{SplitNode, SplitTree};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Recursion,
    ClosedForm,
    Oracle,
}

impl Provenance {
    pub fn name(self) -> &'static str {
        match self {
            Provenance::Recursion => "recursion",
            Provenance::ClosedForm => "closed_form",
            Provenance::Oracle => "oracle",
        }
    }
}

/// Sparse graded Betti numbers of `R/I`.
///
/// Equality compares entries only; the ambient variable count and provenance
/// are informational.
#[derive(Clone, Debug)]
pub struct BettiTable {
    pub n: usize,
    pub provenance: Provenance,
    entries: BTreeMap<(usize, usize), u64>,
}

impl PartialEq for BettiTable {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}

impl Eq for BettiTable {}

/// Families with a known closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedForm {
    /// `<x_1, ..., x_k>`.
    Variables { k: usize },
    Complete { n: usize, r: usize },
    /// `K_{1,n}`, on `n + 1` vertices.
    Star { n: usize, r: usize },
    /// `K_{n+1}` minus one edge, on `n + 1` vertices.
    KnX { n: usize, r: usize },
    PathComplement { n: usize, r: usize },
}

impl ClosedForm {
    /// The closed form for `I_r` of a generated family graph, when one exists.
    pub fn for_family(family: Family, n: usize, r: usize) -> Option<Self> {
        match family {
            Family::Complete => Some(ClosedForm::Complete { n, r }),
            Family::Star => Some(ClosedForm::Star { n, r }),
            Family::KnX => Some(ClosedForm::KnX { n, r }),
            Family::PathComplement => Some(ClosedForm::PathComplement { n, r }),
            _ => None,
        }
    }

    fn ambient(self) -> usize {
        match self {
            ClosedForm::Variables { k } => k,
            ClosedForm::Complete { n, .. } | ClosedForm::PathComplement { n, .. } => n,
            ClosedForm::Star { n, .. } | ClosedForm::KnX { n, .. } => n + 1,
        }
    }
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    acc
}

impl BettiTable {
    pub fn new(n: usize, provenance: Provenance) -> Self {
        BettiTable { n, provenance, entries: BTreeMap::new() }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Adds to an entry; zero increments are ignored.
    pub fn add(&mut self, i: usize, j: usize, value: u64) -> Result<()> {
        if value == 0 {
            return Ok(());
        }
        let e = self.entries.entry((i, j)).or_insert(0);
        *e = e.checked_add(value).ok_or(Error::Overflow)?;
        Ok(())
    }

    /// Nonzero entries `((i, j), β_{i,j}(R/I))`, sorted.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// Nonzero entries in the ideal convention.
    pub fn ideal_entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries().filter(|((i, _), _)| *i >= 1).map(|((i, j), v)| ((i - 1, j), v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = provenance;
        self
    }

    /// Betti numbers via the splitting recursion
    /// `β_{i,j}(I) = β_{i,j-1}(J1) + β_{i,j}(J2) + β_{i-1,j-1}(J2)`,
    /// evaluated in the ideal convention with `β(R) = {(0,0): 1}`.
    pub fn from_split_tree(t: &SplitTree) -> Result<Self> {
        let ideal = ideal_betti(t)?;
        let mut table = BettiTable::new(t.ideal.n(), Provenance::Recursion);
        if t.ideal.is_unit() {
            return Ok(table);
        }
        table.add(0, 0, 1)?;
        for ((i, j), v) in ideal {
            table.add(i + 1, j, v)?;
        }
        Ok(table)
    }

    pub fn closed_form(form: ClosedForm) -> Result<Self> {
        let mut table = BettiTable::new(form.ambient(), Provenance::ClosedForm);
        let b = |n: usize, k: usize| binomial(n as i64, k as i64);
        let bi = |n: i64, k: i64| binomial(n, k);
        if let ClosedForm::Variables { k } = form {
            for i in 0..=k {
                table.add(i, i, to_u64(b(k, i))?)?;
            }
            return Ok(table);
        }
        table.add(0, 0, 1)?;
        let put = |table: &mut BettiTable, i: i64, r: usize, v: BigInt| -> Result<()> {
            table.add(i as usize, i as usize + r, to_u64(v)?)
        };
        match form {
            ClosedForm::Variables { .. } => unreachable!(),
            ClosedForm::Complete { n, r } => {
                nonzero_r(r)?;
                let (n, r) = (n as i64, r as i64);
                for i in 1..=n - r {
                    put(&mut table, i, r as usize, bi(i + r - 1, r) * bi(n, i + r))?;
                }
            }
            ClosedForm::Star { n, r } => {
                nonzero_r(r)?;
                let (n, r) = (n as i64, r as i64);
                for i in 1..=n - r + 1 {
                    put(&mut table, i, r as usize, bi(i + r - 2, r - 1) * bi(n, i + r - 1))?;
                }
            }
            ClosedForm::KnX { n, r } => {
                nonzero_r(r)?;
                let (n, r) = (n as i64, r as i64);
                if r == 1 {
                    for i in 1..=n {
                        put(&mut table, i, 1, BigInt::from(i) * bi(n + 1, i + 1) - bi(n - 1, i - 1))?;
                    }
                } else {
                    for i in 1..=n - r + 1 {
                        put(&mut table, i, r as usize, bi(i + r - 1, r) * bi(n + 1, i + r))?;
                    }
                }
            }
            ClosedForm::PathComplement { n, r } => {
                nonzero_r(r)?;
                let (n, r) = (n as i64, r as i64);
                match r {
                    1 => {
                        for i in 1..=n - 2 {
                            put(&mut table, i, 1, BigInt::from(i) * bi(n - 1, i + 1))?;
                        }
                    }
                    2 => {
                        for i in 1..=n - 2 {
                            let v = bi(i + 1, 2) * bi(n, i + 2) - BigInt::from(i) * bi(n - 2, i);
                            put(&mut table, i, 2, v)?;
                        }
                    }
                    _ => {
                        for i in 1..=n - r {
                            put(&mut table, i, r as usize, bi(i + r - 1, r) * bi(n, i + r))?;
                        }
                    }
                }
            }
        }
        Ok(table)
    }

    /// `max(j - i)` over nonzero entries, for `R/I` or (with `of_ideal`) for
    /// `I` itself.
    pub fn regularity(&self, of_ideal: bool) -> Result<usize> {
        if of_ideal {
            self.ideal_entries().map(|((i, j), _)| j - i).max().ok_or(Error::ZeroIdeal)
        } else {
            self.entries()
                .map(|((i, j), _)| j - i)
                .max()
                .ok_or_else(|| Error::InvalidParameter("R/I is the zero module".to_string()))
        }
    }

    /// Whether every nonzero ideal-convention entry lies on `j = i + d`.
    pub fn has_linear_resolution(&self, d: usize) -> bool {
        self.ideal_entries().all(|((i, j), _)| j == i + d)
    }

    /// Largest homological index with a nonzero entry.
    pub fn max_index(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }
}

fn nonzero_r(r: usize) -> Result<()> {
    if r == 0 {
        Err(Error::InvalidParameter("graph families need r >= 1; use Variables for r = 0".to_string()))
    } else {
        Ok(())
    }
}

fn to_u64(v: BigInt) -> Result<u64> {
    if v < BigInt::zero() {
        return Err(Error::Inconsistency(alloc::format!("negative Betti number {v}")));
    }
    v.to_u64().ok_or(Error::Overflow)
}

type Sparse = BTreeMap<(usize, usize), u64>;

fn ideal_betti(t: &SplitTree) -> Result<Sparse> {
    let mut out = Sparse::new();
    match &t.node {
        SplitNode::Zero => {}
        SplitNode::Unit => {
            out.insert((0, 0), 1);
        }
        SplitNode::Principal(m) => {
            out.insert((0, m.len()), 1);
        }
        SplitNode::Split { left, right, .. } => {
            let j1 = ideal_betti(left)?;
            let j2 = ideal_betti(right)?;
            let mut add = |k: (usize, usize), v: u64| -> Result<()> {
                let e = out.entry(k).or_insert(0);
                *e = e.checked_add(v).ok_or(Error::Overflow)?;
                Ok(())
            };
            for (&(i, j), &v) in &j1 {
                add((i, j + 1), v)?;
            }
            for (&(i, j), &v) in &j2 {
                add((i, j), v)?;
                add((i + 1, j + 1), v)?;
            }
        }
    }
    Ok(out)
}

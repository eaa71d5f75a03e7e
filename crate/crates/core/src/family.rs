//! Named graph families.
//!
//! Labeling:
//! - `Complete`, `Path`, `Cycle` and their complements use `1..=n` in the
//!   obvious order (`Path` is `1-2-...-n`).
//! - `Star` has `n + 1` vertices: the center is `1`, the leaves `2..=n+1`.
//! - `KnX` has `n + 1` vertices: a clique on `1..=n` plus vertex `n + 1`
//!   adjacent to `1..=n-1` (the edge `{n, n+1}` is missing).

use alloc::format;
use alloc::string::ToString;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Complete,
    Star,
    Path,
    Cycle,
    PathComplement,
    CycleComplement,
    KnX,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Complete,
        Family::Star,
        Family::Path,
        Family::Cycle,
        Family::PathComplement,
        Family::CycleComplement,
        Family::KnX,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::Star => "star",
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::PathComplement => "path_complement",
            Family::CycleComplement => "cycle_complement",
            Family::KnX => "kn_x",
        }
    }

    pub fn vertex_count(self, n: usize) -> usize {
        match self {
            Family::Star | Family::KnX => n + 1,
            _ => n,
        }
    }

    pub fn generate(self, n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidParameter("family size must be at least 1".to_string()));
        }
        match self {
            Family::Complete => Graph::new(n, pairs(n)),
            Family::Star => Graph::new(n + 1, (2..=n + 1).map(|v| (1, v))),
            Family::Path => Graph::new(n, (1..n).map(|v| (v, v + 1))),
            Family::Cycle => {
                if n < 3 {
                    return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
                }
                Graph::new(n, (1..=n).map(|v| (v, v % n + 1)))
            }
            Family::PathComplement => Ok(Family::Path.generate(n)?.complement()),
            Family::CycleComplement => Ok(Family::Cycle.generate(n)?.complement()),
            Family::KnX => Graph::new(n + 1, pairs(n).chain((1..n).map(|v| (v, n + 1)))),
        }
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).flat_map(move |u| (u + 1..=n).map(move |v| (u, v)))
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown family `{s}`")))
    }
}

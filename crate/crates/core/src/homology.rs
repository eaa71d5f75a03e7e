//! Brute-force oracle: reduced simplicial homology over a field, Hochster's
//! formula and Leray numbers.
//!
//! Everything here enumerates faces explicitly and is meant for complexes on
//! at most a dozen or so vertices.

use alloc::vec::Vec;

use crate::betti::{BettiTable, Provenance};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::linalg::{rank, SparseColumns};
use crate::vertex_set::VertexSet;

/// Coefficient field: `Q` for characteristic 0, otherwise `GF(p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    characteristic: u32,
}

impl FieldSpec {
    pub const GF2: FieldSpec = FieldSpec { characteristic: 2 };
    pub const RATIONALS: FieldSpec = FieldSpec { characteristic: 0 };

    pub fn new(characteristic: u32) -> Result<Self> {
        if characteristic == 0 || is_prime(characteristic) {
            Ok(FieldSpec { characteristic })
        } else {
            Err(Error::NotPrime(characteristic))
        }
    }

    pub fn characteristic(self) -> u32 {
        self.characteristic
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d: &u32| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Reduced Betti numbers `dim H̃_k`, for `k = -1, 0, 1, ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedHomology {
    dims: Vec<usize>,
    void: bool,
}

impl ReducedHomology {
    /// `dim H̃_k`; zero outside the computed range.
    pub fn dim(&self, k: isize) -> usize {
        usize::try_from(k + 1).ok().and_then(|i| self.dims.get(i)).copied().unwrap_or(0)
    }

    /// Dimensions indexed from `k = -1`.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// The input was the void complex; all dimensions are zero by convention.
    pub fn is_void(&self) -> bool {
        self.void
    }

    /// Largest `k` with `H̃_k != 0`.
    pub fn top(&self) -> Option<isize> {
        self.dims.iter().rposition(|&d| d != 0).map(|i| i as isize - 1)
    }
}

pub fn reduced_homology(d: &SimplicialComplex, field: FieldSpec) -> ReducedHomology {
    if d.is_void() {
        return ReducedHomology { dims: Vec::new(), void: true };
    }
    homology_of_faces(&by_size(d.faces()), field)
}

/// Faces grouped by cardinality; each group sorted by mask.
fn by_size(faces: Vec<VertexSet>) -> Vec<Vec<VertexSet>> {
    let mut groups: Vec<Vec<VertexSet>> = Vec::new();
    for f in faces {
        if groups.len() <= f.len() {
            groups.resize(f.len() + 1, Vec::new());
        }
        groups[f.len()].push(f);
    }
    groups.iter_mut().for_each(|g| g.sort_unstable());
    groups
}

/// `groups[s]` holds the faces with `s` vertices; `groups[0] == [∅]`.
fn homology_of_faces(groups: &[Vec<VertexSet>], field: FieldSpec) -> ReducedHomology {
    // ranks[s] = rank of the boundary from size-s faces to size-(s-1) faces
    let mut ranks = alloc::vec![0usize; groups.len() + 1];
    for s in 1..groups.len() {
        let lower = &groups[s - 1];
        let cols = groups[s]
            .iter()
            .map(|&f| {
                f.iter()
                    .enumerate()
                    .map(|(pos, v)| {
                        let row = lower.binary_search(&f.without(v)).expect("complex closed under subsets");
                        (row, if pos % 2 == 0 { 1i8 } else { -1 })
                    })
                    .collect()
            })
            .collect();
        ranks[s] = rank(&SparseColumns { rows: lower.len(), cols }, field.characteristic);
    }
    let dims: Vec<usize> = (0..groups.len()).map(|s| groups[s].len() - ranks[s] - ranks[s + 1]).collect();
    debug_assert_eq!(
        euler(groups.iter().map(Vec::len)),
        euler(dims.iter().copied()),
        "Euler–Poincaré"
    );
    ReducedHomology { dims, void: false }
}

fn euler(counts: impl Iterator<Item = usize>) -> i64 {
    counts.enumerate().map(|(i, c)| if i % 2 == 0 { c as i64 } else { -(c as i64) }).sum()
}

/// Calls `f(W, H̃(Δ[W]))` for every `W ⊆ {1..n}`, by increasing `|W|`.
fn for_each_induced(d: &SimplicialComplex, field: FieldSpec, mut f: impl FnMut(VertexSet, &ReducedHomology)) {
    let faces = d.faces();
    let n = d.n();
    for size in 0..=n {
        for w in VertexSet::combinations(n, size) {
            let inside: Vec<VertexSet> = faces.iter().copied().filter(|s| s.is_subset(w)).collect();
            let h = homology_of_faces(&by_size(inside), field);
            f(w, &h);
        }
    }
}

/// `β_{i,j}(R/I_Δ) = Σ_{|W| = j} dim H̃_{j-i-1}(Δ[W])`.
pub fn hochster_betti(d: &SimplicialComplex, field: FieldSpec) -> Result<BettiTable> {
    let mut table = BettiTable::new(d.n(), Provenance::Oracle);
    if d.is_void() {
        return Ok(table);
    }
    let mut result = Ok(());
    for_each_induced(d, field, |w, h| {
        for (idx, &dim) in h.dims().iter().enumerate() {
            let k = idx as isize - 1;
            let i = w.len() as isize - 1 - k;
            if dim > 0 && result.is_ok() {
                result = table.add(i as usize, w.len(), dim as u64);
            }
        }
    });
    result.map(|()| table)
}

/// Least `L` such that `H̃_k(Δ[W]) = 0` for every `W` and every `k >= L`.
pub fn leray_number(d: &SimplicialComplex, field: FieldSpec) -> usize {
    if d.is_void() {
        return 0;
    }
    let mut leray = 0;
    for_each_induced(d, field, |_, h| {
        if let Some(k) = h.top() {
            leray = leray.max((k + 1) as usize);
        }
    });
    leray
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::Family;

    fn hollow_triangle() -> SimplicialComplex {
        SimplicialComplex::from_facets(3, VertexSet::combinations(3, 2)).unwrap()
    }

    #[test]
    fn field_spec() {
        assert!(FieldSpec::new(32003).is_ok());
        assert!(FieldSpec::new(0).is_ok());
        assert_eq!(FieldSpec::new(4), Err(Error::NotPrime(4)));
        assert_eq!(FieldSpec::new(1), Err(Error::NotPrime(1)));
    }

    #[test]
    fn homology_examples() {
        for f in [FieldSpec::GF2, FieldSpec::RATIONALS, FieldSpec::new(3).unwrap()] {
            let s = reduced_homology(&SimplicialComplex::simplex(4), f);
            assert!(s.dims().iter().all(|&d| d == 0));
            let t = reduced_homology(&hollow_triangle(), f);
            assert_eq!(t.dims(), [0, 0, 1]);
            let k3 = Family::Complete.generate(3).unwrap();
            let pts = reduced_homology(&SimplicialComplex::ind_r(&k3, 1).unwrap(), f);
            assert_eq!(pts.dim(0), 2);
            assert_eq!(pts.top(), Some(0));
        }
        let e = reduced_homology(&SimplicialComplex::empty_face_only(2), FieldSpec::GF2);
        assert_eq!(e.dims(), [1]);
        let v = reduced_homology(&SimplicialComplex::void(2), FieldSpec::GF2);
        assert!(v.is_void() && v.dims().is_empty());
    }

    #[test]
    fn projective_plane_detects_characteristic() {
        // 6-vertex triangulation of RP^2: H_1 = Z/2
        let tris = [
            [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
            [2, 3, 5], [2, 4, 5], [2, 4, 6], [3, 4, 6], [3, 5, 6],
        ];
        let d = SimplicialComplex::from_facets(6, tris.iter().map(|t| VertexSet::from_vertices(t.iter().copied())))
            .unwrap();
        assert_eq!(reduced_homology(&d, FieldSpec::GF2).dims(), [0, 0, 1, 1]);
        assert_eq!(reduced_homology(&d, FieldSpec::RATIONALS).dims(), [0, 0, 0, 0]);
        assert_eq!(reduced_homology(&d, FieldSpec::new(32003).unwrap()).dims(), [0, 0, 0, 0]);
    }

    #[test]
    fn hochster_on_triangle_points() {
        let k3 = Family::Complete.generate(3).unwrap();
        let t = hochster_betti(&SimplicialComplex::ind_r(&k3, 1).unwrap(), FieldSpec::GF2).unwrap();
        let got: Vec<_> = t.entries().collect();
        assert_eq!(got, [((0, 0), 1), ((1, 2), 3), ((2, 3), 2)]);
    }

    #[test]
    fn hochster_on_simplex_is_zero_ideal() {
        let t = hochster_betti(&SimplicialComplex::simplex(4), FieldSpec::GF2).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), [((0, 0), 1)]);
        assert!(hochster_betti(&SimplicialComplex::void(3), FieldSpec::GF2).unwrap().is_empty());
    }

    #[test]
    fn leray_examples() {
        let k3 = Family::Complete.generate(3).unwrap();
        assert_eq!(leray_number(&SimplicialComplex::ind_r(&k3, 1).unwrap(), FieldSpec::GF2), 1);
        assert_eq!(leray_number(&SimplicialComplex::simplex(5), FieldSpec::GF2), 0);
        assert_eq!(leray_number(&hollow_triangle(), FieldSpec::GF2), 2);
        // C5^c = C5; its independence complex is a 5-cycle, so L = 2
        let c5c = Family::CycleComplement.generate(5).unwrap();
        let d = SimplicialComplex::ind_r(&c5c, 1).unwrap();
        assert_eq!(leray_number(&d, FieldSpec::GF2), 2);
    }
}

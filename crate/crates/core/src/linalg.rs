//! Exact rank of sparse ±1 matrices over `GF(p)` and `Q`.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// A matrix stored by columns; each column lists `(row, ±1)`.
pub(crate) struct SparseColumns {
    pub rows: usize,
    pub cols: Vec<Vec<(usize, i8)>>,
}

/// Rank over `GF(p)` for prime `p`, or over `Q` when `p == 0`.
pub(crate) fn rank(m: &SparseColumns, p: u32) -> usize {
    match p {
        0 => rank_rational(m),
        2 => rank_gf2(m),
        _ => rank_mod_p(m, p),
    }
}

// Column reduction: each column is reduced against earlier pivots keyed by
// their lowest nonzero row; surviving nonzero columns count the rank.

fn rank_gf2(m: &SparseColumns) -> usize {
    let words = m.rows.div_ceil(64);
    let mut pivots: Vec<Option<Vec<u64>>> = vec![None; m.rows];
    let mut rank = 0;
    for col in &m.cols {
        let mut c = vec![0u64; words];
        for &(r, _) in col {
            c[r / 64] ^= 1 << (r % 64);
        }
        while let Some(low) = lowest_bit(&c) {
            match &pivots[low] {
                Some(p) => c.iter_mut().zip(p).for_each(|(a, b)| *a ^= b),
                None => {
                    pivots[low] = Some(c);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn lowest_bit(c: &[u64]) -> Option<usize> {
    c.iter().enumerate().find(|(_, w)| **w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    // Fermat
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn rank_mod_p(m: &SparseColumns, p: u32) -> usize {
    let p = p as u64;
    let mut pivots: Vec<Option<Vec<u64>>> = vec![None; m.rows];
    let mut rank = 0;
    for col in &m.cols {
        let mut c = vec![0u64; m.rows];
        for &(r, s) in col {
            c[r] = (c[r] + if s > 0 { 1 } else { p - 1 }) % p;
        }
        while let Some(low) = c.iter().position(|&x| x != 0) {
            match &pivots[low] {
                // stored pivots are normalized to 1 at `low`
                Some(piv) => {
                    let f = c[low];
                    for (a, b) in c.iter_mut().zip(piv) {
                        *a = (*a + p - f * b % p) % p;
                    }
                }
                None => {
                    let inv = inverse_mod(c[low], p);
                    c.iter_mut().for_each(|a| *a = *a * inv % p);
                    pivots[low] = Some(c);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn rank_rational(m: &SparseColumns) -> usize {
    let mut pivots: Vec<Option<Vec<BigInt>>> = vec![None; m.rows];
    let mut rank = 0;
    for col in &m.cols {
        let mut c = vec![BigInt::zero(); m.rows];
        for &(r, s) in col {
            c[r] += BigInt::from(s);
        }
        while let Some(low) = c.iter().position(|x| !x.is_zero()) {
            match &pivots[low] {
                Some(piv) => {
                    // c <- piv[low]*c - c[low]*piv keeps entries integral
                    let (a, b) = (piv[low].clone(), c[low].clone());
                    for (x, y) in c.iter_mut().zip(piv) {
                        *x = &a * &*x - &b * y;
                    }
                    primitive(&mut c);
                }
                None => {
                    pivots[low] = Some(c);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn primitive(c: &mut [BigInt]) {
    let g = c.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && g.abs() != BigInt::from(1) {
        c.iter_mut().for_each(|x| *x = &*x / &g);
    }
}

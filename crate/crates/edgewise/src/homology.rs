//! Reduced simplicial homology over an exact field.
//!
//! Betti numbers are computed from boundary-matrix ranks in the augmented
//! chain complex: b_i = f_i − rank ∂_i − rank ∂_{i+1}, with the empty face
//! generating the (−1)-chains. Ranks are exact: fraction-free elimination
//! over the rationals (integer arithmetic throughout, so overflow is
//! impossible by construction), word-packed elimination over GF(2), and
//! dense modular elimination over odd prime fields.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::poset::bits;

/// Coefficient field selector. The verdicts of every Cohen-Macaulay-type
/// check depend on this and are always reported per field.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    NotPrime(u32),
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NotPrime(p) => write!(f, "{p} is not prime"),
        }
    }
}

impl std::error::Error for FieldError {}

impl FieldSpec {
    /// A prime field GF(p), p <= 2^31.
    pub fn prime_field(p: u32) -> Result<FieldSpec, FieldError> {
        if p > (1 << 31) || !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(FieldSpec::PrimeField(p))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    let n = n as u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Reduced Betti numbers indexed by dimension from −1 up to dim Δ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiVector {
    values: Vec<u64>,
}

impl BettiVector {
    fn zeros(len: usize) -> BettiVector {
        BettiVector {
            values: vec![0; len],
        }
    }

    /// b_d; dimensions outside the stored range are zero.
    pub fn get(&self, d: i32) -> u64 {
        let idx = d + 1;
        if idx < 0 || idx as usize >= self.values.len() {
            0
        } else {
            self.values[idx as usize]
        }
    }

    /// Largest dimension stored (dim Δ).
    pub fn max_dim(&self) -> i32 {
        self.values.len() as i32 - 2
    }

    pub fn top(&self) -> u64 {
        *self.values.last().unwrap_or(&0)
    }

    pub fn is_all_zero(&self) -> bool {
        self.values.iter().all(|&b| b == 0)
    }

    /// (dimension, value) pairs from −1 up.
    pub fn iter_indexed(&self) -> impl Iterator<Item = (i32, u64)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(|(i, &b)| (i as i32 - 1, b))
    }

    /// The smallest dimension strictly below `below` with a nonzero entry.
    pub fn first_nonzero_below(&self, below: i32) -> Option<(i32, u64)> {
        self.iter_indexed().find(|&(d, b)| d < below && b != 0)
    }
}

/// Reduced Betti vector of a complex over a field. The result does not
/// depend on the vertex ordering: faces per dimension are enumerated in a
/// canonical sorted order and boundary signs follow that order.
pub fn reduced_betti(complex: &SimplicialComplex, field: &FieldSpec) -> BettiVector {
    let dim = complex.dim();
    if dim == -1 {
        // The complex {∅}: one generator in dimension −1, no boundaries.
        return BettiVector { values: vec![1] };
    }
    // Cones are contractible: every reduced Betti number vanishes.
    if complex.cone_apex().is_some() {
        return BettiVector::zeros((dim + 2) as usize);
    }
    let faces_by_dim: Vec<Vec<u64>> = (0..=dim).map(|d| complex.faces_of_dim(d)).collect();
    // rank_of_boundary[k] = rank ∂_k for k = 0..=dim; ∂_0 is the
    // augmentation onto the empty face.
    let mut rank_of_boundary = Vec::with_capacity((dim + 1) as usize);
    let f0 = faces_by_dim[0].len();
    rank_of_boundary.push(if f0 > 0 { 1 } else { 0 });
    for k in 1..=dim {
        let rows = &faces_by_dim[(k - 1) as usize];
        let cols = &faces_by_dim[k as usize];
        let matrix = boundary_matrix(rows, cols);
        rank_of_boundary.push(rank(&matrix, rows.len(), cols.len(), field));
    }
    let mut values = Vec::with_capacity((dim + 2) as usize);
    // b_{−1} = 1 − rank ∂_0.
    values.push(1 - rank_of_boundary[0] as u64);
    for k in 0..=dim {
        let f_k = faces_by_dim[k as usize].len();
        let below = rank_of_boundary[k as usize];
        let above = if k < dim {
            rank_of_boundary[(k + 1) as usize]
        } else {
            0
        };
        values.push((f_k - below - above) as u64);
    }
    BettiVector { values }
}

pub fn is_acyclic(complex: &SimplicialComplex, field: &FieldSpec) -> bool {
    reduced_betti(complex, field).is_all_zero()
}

/// Signed incidence matrix of ∂: C_k → C_{k−1}, entries in {−1, 0, 1},
/// stored row-major as i8.
fn boundary_matrix(rows: &[u64], cols: &[u64]) -> Vec<i8> {
    let mut matrix = vec![0i8; rows.len() * cols.len()];
    for (j, &face) in cols.iter().enumerate() {
        for (pos, v) in bits(face).enumerate() {
            let sub = face & !(1 << v);
            let i = rows.binary_search(&sub).expect("boundary face missing");
            matrix[i * cols.len() + j] = if pos % 2 == 0 { 1 } else { -1 };
        }
    }
    matrix
}

fn rank(matrix: &[i8], rows: usize, cols: usize, field: &FieldSpec) -> usize {
    match field {
        FieldSpec::Rationals => rank_fraction_free(matrix, rows, cols),
        FieldSpec::PrimeField(2) => rank_gf2(matrix, rows, cols),
        FieldSpec::PrimeField(p) => rank_mod_p(matrix, rows, cols, *p as u64),
    }
}

/// Rank over the rationals by fraction-free (Bareiss) elimination with full
/// pivoting; all intermediate values are exact integers.
pub(crate) fn rank_fraction_free(matrix: &[i8], rows: usize, cols: usize) -> usize {
    let mut m: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| BigInt::from(matrix[i * cols + j]))
                .collect()
        })
        .collect();
    let mut prev = BigInt::one();
    let mut rank = 0usize;
    let mut col_of: Vec<usize> = (0..cols).collect();
    while rank < rows && rank < cols {
        // Full pivot search in the remaining submatrix.
        let mut pivot = None;
        'outer: for i in rank..rows {
            for j in rank..cols {
                if !m[i][col_of[j]].is_zero() {
                    pivot = Some((i, j));
                    break 'outer;
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(rank, pi);
        col_of.swap(rank, pj);
        let pc = col_of[rank];
        for i in rank + 1..rows {
            for j in rank + 1..cols {
                let jc = col_of[j];
                let num = &m[rank][pc] * &m[i][jc] - &m[i][pc] * &m[rank][jc];
                debug_assert!((&num % &prev).is_zero(), "fraction-free step not exact");
                m[i][jc] = num / &prev;
            }
            m[i][pc] = BigInt::zero();
        }
        prev = m[rank][pc].clone();
        rank += 1;
    }
    rank
}

/// Rank over GF(2) with rows packed into 64-bit words.
pub(crate) fn rank_gf2(matrix: &[i8], rows: usize, cols: usize) -> usize {
    let words = cols.div_ceil(64);
    let mut packed: Vec<Vec<u64>> = (0..rows)
        .map(|i| {
            let mut row = vec![0u64; words];
            for j in 0..cols {
                if matrix[i * cols + j] != 0 {
                    row[j / 64] |= 1 << (j % 64);
                }
            }
            row
        })
        .collect();
    let mut rank = 0usize;
    for j in 0..cols {
        let (w, b) = (j / 64, j % 64);
        let Some(p) = (rank..rows).find(|&i| packed[i][w] & (1 << b) != 0) else {
            continue;
        };
        packed.swap(rank, p);
        let pivot_row = packed[rank].clone();
        for row in packed.iter_mut().skip(rank + 1) {
            if row[w] & (1 << b) != 0 {
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Rank over GF(p) for an odd prime p <= 2^31; products fit in u64.
pub(crate) fn rank_mod_p(matrix: &[i8], rows: usize, cols: usize, p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| (matrix[i * cols + j] as i64).rem_euclid(p as i64) as u64)
                .collect()
        })
        .collect();
    let mut rank = 0usize;
    for j in 0..cols {
        let Some(pi) = (rank..rows).find(|&i| m[i][j] != 0) else {
            continue;
        };
        m.swap(rank, pi);
        let inv = mod_inverse(m[rank][j], p);
        for x in m[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for i in rank + 1..rows {
            if m[i][j] != 0 {
                let factor = m[i][j];
                for k in j..cols {
                    let sub = factor * m[rank][k] % p;
                    m[i][k] = (m[i][k] + p - sub) % p;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p−2) mod p.
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

//! Exact integer matrices used as an independent check on the partition
//! formulas.
//!
//! Nothing here uses dominance, transposition or `B^k`: the Jordan type of a
//! nilpotent matrix is read off from the ranks of its powers, since
//! `rank(X^{i-1}) - rank(X^i)` counts the Jordan blocks of size at least `i`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::derivative::WhittakerSupport;
use crate::partition::Partition;
use crate::Error;

/// Square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn zero(n: usize) -> Self {
        IntMatrix {
            n,
            entries: vec![0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self, Error> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(alloc::string::String::from(
                "matrix is not square",
            )));
        }
        Ok(IntMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry at 0-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.entries[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: i64) {
        self.entries[row * self.n + col] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    pub fn is_strictly_upper_triangular(&self) -> bool {
        (0..self.n).all(|i| (0..=i).all(|j| self.get(i, j) == 0))
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, Error> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(alloc::string::String::from(
                "matrix sizes differ",
            )));
        }
        let n = self.n;
        let mut out = IntMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    let v = a
                        .checked_mul(b)
                        .and_then(|ab| ab.checked_add(out.get(i, j)))
                        .ok_or(Error::Overflow)?;
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }
}

/// The matrix `sum_{j in support} E_{j,j+1}` (1-based indices).
pub fn matrix_of_support(s: &WhittakerSupport) -> IntMatrix {
    let mut m = IntMatrix::zero(s.n() as usize);
    for &j in s.support() {
        let j = j as usize;
        m.set(j - 1, j, 1);
    }
    m
}

/// Rank over the rationals by fraction-free (Bareiss) elimination.
pub fn rank_exact(x: &IntMatrix) -> usize {
    let n = x.n;
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(x.get(i, j))).collect())
        .collect();
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..n {
        let Some(pivot) = (rank..n).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        for r in rank + 1..n {
            for c in col + 1..n {
                let v = (&a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c]) / &prev;
                a[r][c] = v;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
        if rank == n {
            break;
        }
    }
    rank
}

/// Ranks of `X^0, X^1, ...` up to and including the first zero power.
fn power_ranks(x: &IntMatrix) -> Result<Vec<usize>, Error> {
    let n = x.n;
    let mut ranks = vec![n];
    if n == 0 {
        return Ok(ranks);
    }
    let mut power = IntMatrix::identity(n);
    for _ in 0..n {
        power = power.mul(x)?;
        let r = rank_exact(&power);
        ranks.push(r);
        if r == 0 {
            return Ok(ranks);
        }
    }
    Err(Error::NotNilpotent)
}

/// Smallest `p` with `X^p = 0`.
pub fn nilpotence_order(x: &IntMatrix) -> Result<usize, Error> {
    Ok(power_ranks(x)?.len() - 1)
}

/// Jordan block sizes of a nilpotent matrix, largest first.
pub fn jordan_type(x: &IntMatrix) -> Result<Partition, Error> {
    let ranks = power_ranks(x)?;
    // at_least[i] = number of blocks of size >= i + 1
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut parts = Vec::new();
    for size in (1..=at_least.len()).rev() {
        let bigger = at_least.get(size).copied().unwrap_or(0);
        for _ in 0..at_least[size - 1] - bigger {
            parts.push(size as u32);
        }
    }
    Partition::new(parts)
}

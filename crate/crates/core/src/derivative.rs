//! The derivative `B^k` on `GL(n)` orbits and degenerate Whittaker supports.
//!
//! For `k ≤ λ_1` let `i` be the index with `λ_i ≥ k > λ_{i+1}`. Then
//! `B^k(λ)` removes `λ_i` and `λ_{i+1}` and inserts `λ_i + λ_{i+1} - k`.
//! For `k > λ_1` the derivative is empty. On unions of orbit closures it acts
//! on the maximal orbits.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use crate::orbit::{Kind, Orbit, OrbitSet};
use crate::partition::{enumerate_partitions, Cap, Partition};
use crate::{Error, GroupKind};

pub fn b_k(lambda: &Partition, k: u32) -> Option<Partition> {
    if k == 0 || k > lambda.largest() {
        return None;
    }
    let parts = lambda.parts();
    // 0-based position of λ_i
    let i = parts.iter().rposition(|&p| p >= k)?;
    let next = parts.get(i + 1).copied().unwrap_or(0);
    let mut rest: Vec<u32> = Vec::with_capacity(parts.len());
    rest.extend_from_slice(&parts[..i]);
    rest.extend(parts.iter().skip(i + 2).copied());
    rest.push(parts[i] + next - k);
    Some(Partition::from_unsorted(rest))
}

/// Whether `μ ∪ {k} ≤ λ`. Equivalent to `k ≤ λ_1` and `μ ≤ B^k(λ)`; both
/// sides are evaluated in debug builds.
pub fn comb_part_leq(mu: &Partition, k: u32, lambda: &Partition) -> Result<bool, Error> {
    if mu.weight() + k != lambda.weight() {
        return Err(Error::UnequalWeight {
            left: mu.weight() + k,
            right: lambda.weight(),
        });
    }
    let direct = mu.insert_part(k).dominated_by(lambda);
    debug_assert_eq!(
        direct,
        b_k(lambda, k).is_some_and(|b| mu.dominated_by(&b)),
        "μ={mu} k={k} λ={lambda}"
    );
    Ok(direct)
}

fn require_type_a(set: &OrbitSet) -> Result<(), Error> {
    if set.group().kind() == Kind::TypeA {
        Ok(())
    } else {
        Err(Error::UnsupportedGroup(set.group()))
    }
}

/// `B^k` of a union of `GL(n)` orbit closures. The result lives in
/// `GL(n-k)` (or `GL(0)` once `k ≥ n`).
pub fn b_k_orbit_set(set: &OrbitSet, k: u32) -> Result<OrbitSet, Error> {
    require_type_a(set)?;
    let group = GroupKind::type_a(set.group().dim().saturating_sub(k));
    let mut images = Vec::new();
    for o in set.maximal() {
        if let Some(b) = b_k(o.partition(), k) {
            images.push(Orbit::new(group, b, None)?);
        }
    }
    let out = OrbitSet::new(group, images)?;
    #[cfg(debug_assertions)]
    if set.group().dim() <= 10 {
        debug_assert_eq!(
            Ok(&out),
            b_k_orbit_set_expanded(set, k, Cap::DEFAULT).as_ref()
        );
    }
    Ok(out)
}

/// [`b_k_orbit_set`] computed from every orbit in the closure rather than
/// only the maximal ones.
pub fn b_k_orbit_set_expanded(set: &OrbitSet, k: u32, cap: Cap) -> Result<OrbitSet, Error> {
    require_type_a(set)?;
    let group = GroupKind::type_a(set.group().dim().saturating_sub(k));
    let mut images = Vec::new();
    for lambda in enumerate_partitions(set.group().dim(), cap)? {
        let inside = set
            .maximal()
            .iter()
            .any(|m| lambda.dominated_by(m.partition()));
        if inside {
            if let Some(b) = b_k(&lambda, k) {
                images.push(Orbit::new(group, b, None)?);
            }
        }
    }
    OrbitSet::new(group, images)
}

/// Largest `λ_1` over the maximal orbits; zero for the empty set.
pub fn max_depth(set: &OrbitSet) -> u32 {
    set.maximal().iter().map(Orbit::depth).max().unwrap_or(0)
}

/// Superdiagonal positions `j` (1-based, `1 ≤ j < n`) where the character
/// `ψ` is nonzero on `X_{j,j+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WhittakerSupport {
    n: u32,
    support: Vec<u32>,
}

impl WhittakerSupport {
    pub fn new(n: u32, mut support: Vec<u32>) -> Result<Self, Error> {
        support.sort_unstable();
        support.dedup();
        if support.iter().any(|&j| j == 0 || j >= n) {
            return Err(Error::DimensionMismatch(
                "support positions must lie in 1..n-1".to_string(),
            ));
        }
        Ok(WhittakerSupport { n, support })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn support(&self) -> &[u32] {
        &self.support
    }

    /// The complement `S` of the support in `{1,...,n-1}`: block boundaries.
    pub fn breaks(&self) -> Vec<u32> {
        (1..self.n)
            .filter(|j| self.support.binary_search(j).is_err())
            .collect()
    }
}

impl fmt::Display for WhittakerSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("support:")?;
        if self.support.is_empty() {
            return f.write_str("-");
        }
        for (i, j) in self.support.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{j}")?;
        }
        Ok(())
    }
}

/// `ψ_α` for a composition: the boundaries are the head sums
/// `α_1 + ... + α_k` for `k < length(α)`.
pub fn composition_support(alpha: &[u32]) -> Result<WhittakerSupport, Error> {
    if alpha.is_empty() {
        return Err(Error::EmptyComposition);
    }
    if alpha.contains(&0) {
        return Err(Error::NotDecreasing);
    }
    let n: u32 = alpha.iter().sum();
    let breaks: Vec<u32> = alpha
        .iter()
        .take(alpha.len() - 1)
        .scan(0, |acc, &a| {
            *acc += a;
            Some(*acc)
        })
        .collect();
    let support = (1..n).filter(|j| !breaks.contains(j)).collect();
    WhittakerSupport::new(n, support)
}

/// `ψ_λ`, a representative of the orbit `O_λ`.
pub fn whittaker_support(lambda: &Partition) -> Result<WhittakerSupport, Error> {
    composition_support(lambda.parts())
}

//! Principal-in-Levi orbits.
//!
//! For `O(d)` and `Sp(d)` an orbit `O_λ` is principal in some Levi subalgebra
//! exactly when `|OM(λ)| ≤ 1`, where `OM(λ)` is the set of parts `p > 1` with
//! odd multiplicity. Every `GL(d)` orbit is PL. The set `PL(λ)` of PL
//! partitions below `λ` determines `λ`: each prefix sum `λ_1 + ... + λ_k` is
//! the maximum of the same prefix sum over `PL(λ)`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::orbit::{is_valid_partition, valid_partitions, Kind, Label, Orbit};
use crate::partition::{Cap, Partition};
use crate::{Error, GroupKind};

/// Parts greater than one that occur an odd number of times.
pub fn odd_multiplicity_parts(lambda: &Partition) -> BTreeSet<u32> {
    lambda
        .multiplicities()
        .into_iter()
        .filter(|&(p, m)| p > 1 && m % 2 == 1)
        .map(|(p, _)| p)
        .collect()
}

fn check_valid(group: GroupKind, lambda: &Partition) -> Result<(), Error> {
    if is_valid_partition(group, lambda)? {
        Ok(())
    } else {
        Err(Error::InvalidPartition {
            group,
            partition: lambda.to_string(),
        })
    }
}

/// Membership of a valid partition in `PL(G)`.
pub fn is_pl(group: GroupKind, lambda: &Partition) -> Result<bool, Error> {
    check_valid(group, lambda)?;
    Ok(pl_unchecked(group, lambda))
}

fn pl_unchecked(group: GroupKind, lambda: &Partition) -> bool {
    group.kind() == Kind::TypeA || odd_multiplicity_parts(lambda).len() <= 1
}

/// The partition of the principal orbit of the Levi subgroup
/// `O(d') × GL(κ_1) × ... × GL(κ_r)` (or `Sp(d') × ...`). Each `GL(κ_i)`
/// factor contributes two parts `κ_i`.
pub fn levi_principal_partition(
    group: GroupKind,
    kappa: &Partition,
    d_prime: u32,
) -> Result<Partition, Error> {
    let kind = group.kind();
    if kind == Kind::TypeA {
        return Err(Error::UnsupportedGroup(group));
    }
    if d_prime + 2 * kappa.weight() != group.dim() {
        return Err(Error::DimensionMismatch(format!(
            "d' + 2|κ| = {} + 2·{} but the group has dimension {}",
            d_prime,
            kappa.weight(),
            group.dim()
        )));
    }
    if kind == Kind::Symplectic && !d_prime.is_multiple_of(2) {
        return Err(Error::DimensionMismatch(format!(
            "Sp factor of odd dimension {d_prime}"
        )));
    }
    let mut parts: Vec<u32> = kappa.parts().iter().flat_map(|&k| [k, k]).collect();
    if kind != Kind::Symplectic && d_prime.is_multiple_of(2) && d_prime >= 2 {
        parts.extend([d_prime - 1, 1]);
    } else {
        parts.push(d_prime);
    }
    Ok(Partition::from_unsorted(parts))
}

/// `PL(λ)`: the PL partitions lying below `λ` in the closure order.
///
/// For a very even `SO` orbit the label travels alongside the partition set;
/// the pair is what distinguishes `O_λ^I` from `O_λ^II`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlSet {
    group: GroupKind,
    members: BTreeSet<Partition>,
    label: Option<Label>,
}

impl PlSet {
    pub fn new(group: GroupKind, members: BTreeSet<Partition>, label: Option<Label>) -> Self {
        PlSet {
            group,
            members,
            label,
        }
    }

    pub fn group(&self) -> GroupKind {
        self.group
    }

    pub fn members(&self) -> &BTreeSet<Partition> {
        &self.members
    }

    pub fn label(&self) -> Option<Label> {
        self.label
    }

    /// Union of the member sets. The label is kept only when both agree.
    pub fn union(&self, other: &PlSet) -> Result<PlSet, Error> {
        if self.group != other.group {
            return Err(Error::GroupMismatch(self.group, other.group));
        }
        Ok(PlSet {
            group: self.group,
            members: self.members.union(&other.members).cloned().collect(),
            label: if self.label == other.label {
                self.label
            } else {
                None
            },
        })
    }
}

pub fn pl_set(group: GroupKind, lambda: &Partition, cap: Cap) -> Result<PlSet, Error> {
    check_valid(group, lambda)?;
    let members = valid_partitions(group, cap)?
        .into_iter()
        .filter(|mu| mu.dominated_by(lambda) && pl_unchecked(group, mu))
        .collect();
    Ok(PlSet {
        group,
        members,
        label: None,
    })
}

/// `pl_set` for an orbit, carrying its `SO` label.
pub fn pl_set_of_orbit(orbit: &Orbit, cap: Cap) -> Result<PlSet, Error> {
    let mut set = pl_set(orbit.group(), orbit.partition(), cap)?;
    set.label = orbit.label();
    Ok(set)
}

/// A PL partition `μ ≤ λ` with `μ_1 + ... + μ_k = λ_1 + ... + λ_k`.
///
/// Let `j` be the last index with `λ_j = λ_k`. Among `λ_1..λ_j`, the two
/// largest parts of odd multiplicity `p > q` are replaced by `r, r` with
/// `r = (p+q)/2` until at most one odd multiplicity remains; then the parts
/// after position `j` are replaced by ones.
pub fn recpart_witness(group: GroupKind, lambda: &Partition, k: usize) -> Result<Partition, Error> {
    check_valid(group, lambda)?;
    if k == 0 {
        return Err(Error::DimensionMismatch("k must be at least 1".to_string()));
    }
    if group.kind() == Kind::TypeA {
        return Ok(lambda.clone());
    }
    let parts = lambda.parts();
    let j = if k >= parts.len() {
        parts.len()
    } else {
        let v = parts[k - 1];
        parts.iter().rposition(|&p| p == v).unwrap() + 1
    };
    let mut head = Partition::from_unsorted(parts[..j].iter().copied());
    let tail: u32 = parts[j..].iter().sum();
    loop {
        let odd: Vec<u32> = head
            .multiplicities()
            .into_iter()
            .filter(|&(_, m)| m % 2 == 1)
            .map(|(p, _)| p)
            .collect();
        if odd.len() < 2 {
            break;
        }
        let (p, q) = (odd[0], odd[1]);
        if (p + q) % 2 != 0 {
            return Err(Error::Internal("merged parts differ in parity"));
        }
        let r = (p + q) / 2;
        let mut next = head.parts().to_vec();
        for x in [p, q] {
            let at = next.iter().position(|&y| y == x).unwrap();
            next.remove(at);
        }
        next.extend([r, r]);
        head = Partition::from_unsorted(next);
    }
    let mut out = head.parts().to_vec();
    out.extend(vec![1; tail as usize]);
    let mu = Partition::from_unsorted(out);

    if !(is_valid_partition(group, &mu)?
        && pl_unchecked(group, &mu)
        && mu.dominated_by(lambda)
        && mu.prefix_sum(k) == lambda.prefix_sum(k))
    {
        return Err(Error::Internal("witness postcondition failed"));
    }
    Ok(mu)
}

/// Recovers `λ` from `PL(λ)` via maxima of prefix sums.
pub fn reconstruct(set: &PlSet) -> Result<Partition, Error> {
    let d = set.group.dim();
    if set.members.is_empty() {
        return Err(Error::InconsistentSet("empty set".to_string()));
    }
    if let Some(bad) = set.members.iter().find(|m| m.weight() != d) {
        return Err(Error::InconsistentSet(format!(
            "member {bad} does not have weight {d}"
        )));
    }
    let mut parts = Vec::new();
    let mut previous_sum = 0u32;
    let mut previous_part = u32::MAX;
    for k in 1..=d as usize {
        let sum = set.members.iter().map(|m| m.prefix_sum(k)).max().unwrap();
        let part = sum - previous_sum;
        if part > previous_part {
            return Err(Error::InconsistentSet(format!(
                "recovered part {part} at position {k} exceeds the previous part {previous_part}"
            )));
        }
        if part > 0 {
            parts.push(part);
        }
        previous_sum = sum;
        previous_part = part;
    }
    let lambda = Partition::new(parts)?;
    if !is_valid_partition(set.group, &lambda)? {
        return Err(Error::InconsistentSet(format!(
            "recovered partition {lambda} is not valid for {}",
            set.group
        )));
    }
    Ok(lambda)
}

/// [`reconstruct`] returning the orbit, label included.
pub fn reconstruct_orbit(set: &PlSet) -> Result<Orbit, Error> {
    let lambda = reconstruct(set)?;
    Orbit::new(set.group, lambda, set.label).map_err(|e| Error::InconsistentSet(e.to_string()))
}

/// A triple with `PL(top) = PL(left) ∪ PL(right)`; `left < right`
/// lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RelatedUnion {
    pub top: Partition,
    pub left: Partition,
    pub right: Partition,
}

/// Precomputed PL sets of every valid partition, as bitsets over the PL
/// partitions of the group. `SO(d)` is searched through `O(d)`.
#[derive(Debug, Clone)]
pub struct RelatedUnionSearch {
    partitions: Vec<Partition>,
    masks: Vec<Vec<u64>>,
}

impl RelatedUnionSearch {
    pub fn new(group: GroupKind, cap: Cap) -> Result<Self, Error> {
        let partitions = valid_partitions(group, cap)?;
        let pl_index: Vec<usize> = (0..partitions.len())
            .filter(|&i| pl_unchecked(group, &partitions[i]))
            .collect();
        let words = pl_index.len().div_ceil(64);
        let masks = partitions
            .iter()
            .map(|lambda| {
                let mut mask = vec![0u64; words];
                for (bit, &i) in pl_index.iter().enumerate() {
                    if partitions[i].dominated_by(lambda) {
                        mask[bit / 64] |= 1 << (bit % 64);
                    }
                }
                mask
            })
            .collect();
        Ok(RelatedUnionSearch { partitions, masks })
    }

    /// Number of candidate top partitions.
    pub fn len(&self) -> usize {
        self.partitions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partitions.is_empty()
    }

    /// All triples whose top partition is the `top`-th valid partition.
    pub fn search_top(&self, top: usize) -> Vec<RelatedUnion> {
        let lambda = &self.partitions[top];
        let target = &self.masks[top];
        let below: Vec<usize> = (0..self.partitions.len())
            .filter(|&i| i != top && self.partitions[i].dominated_by(lambda))
            .collect();
        let mut out = Vec::new();
        for (x, &a) in below.iter().enumerate() {
            for &b in &below[x + 1..] {
                let covers = self.masks[a]
                    .iter()
                    .zip(&self.masks[b])
                    .zip(target)
                    .all(|((u, v), t)| u | v == *t);
                if covers {
                    let (left, right) = if self.partitions[a] < self.partitions[b] {
                        (a, b)
                    } else {
                        (b, a)
                    };
                    out.push(RelatedUnion {
                        top: lambda.clone(),
                        left: self.partitions[left].clone(),
                        right: self.partitions[right].clone(),
                    });
                }
            }
        }
        out.sort();
        out
    }

    /// Puts triples from any number of `search_top` calls into canonical
    /// order: top partitions in enumeration order, then `(left, right)`.
    pub fn canonical_order(&self, triples: &mut [RelatedUnion]) {
        triples.sort_by(|x, y| y.top.cmp(&x.top).then_with(|| x.cmp(y)));
    }
}

/// All related union triples for `group`.
pub fn find_related_unions(group: GroupKind, cap: Cap) -> Result<Vec<RelatedUnion>, Error> {
    let search = RelatedUnionSearch::new(group, cap)?;
    let mut out: Vec<RelatedUnion> = (0..search.len())
        .flat_map(|t| search.search_top(t))
        .collect();
    search.canonical_order(&mut out);
    Ok(out)
}

//! Nilpotent orbits of the classical groups and their closure order.
//!
//! | group                     | orbits labelled by                          |
//! |---------------------------|---------------------------------------------|
//! | `GL(d)`, `SL(d)`          | all partitions of `d`                       |
//! | `O(d)`                    | even parts have even multiplicity           |
//! | `Sp(d)`                   | odd parts have even multiplicity            |
//! | `SO(d)`                   | as `O(d)`, very even partitions split in two |
//!
//! The closure order on orbits is the dominance order on partitions.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::partition::{enumerate_partitions, Cap, Partition};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    /// `GL(d,R)`, `GL(d,C)` and `SL(d,C)`; they share one parametrization.
    TypeA,
    Orthogonal,
    SpecialOrthogonal,
    Symplectic,
}

impl Kind {
    pub fn prefix(self) -> &'static str {
        match self {
            Kind::TypeA => "GL",
            Kind::Orthogonal => "O",
            Kind::SpecialOrthogonal => "SO",
            Kind::Symplectic => "Sp",
        }
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "GL" | "gl" | "SL" | "sl" | "GLR" | "GLC" | "A" => Ok(Kind::TypeA),
            "O" | "o" => Ok(Kind::Orthogonal),
            "SO" | "so" => Ok(Kind::SpecialOrthogonal),
            "Sp" | "sp" | "SP" => Ok(Kind::Symplectic),
            _ => Err(Error::InvalidGroup(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupKind {
    kind: Kind,
    dim: u32,
}

impl GroupKind {
    /// `Sp` requires an even dimension.
    pub fn new(kind: Kind, dim: u32) -> Result<Self, Error> {
        if kind == Kind::Symplectic && !dim.is_multiple_of(2) {
            return Err(Error::InvalidGroup(format!(
                "Sp{dim}: dimension must be even"
            )));
        }
        Ok(GroupKind { kind, dim })
    }

    pub fn type_a(dim: u32) -> Self {
        GroupKind {
            kind: Kind::TypeA,
            dim,
        }
    }

    pub fn orthogonal(dim: u32) -> Self {
        GroupKind {
            kind: Kind::Orthogonal,
            dim,
        }
    }

    pub fn special_orthogonal(dim: u32) -> Self {
        GroupKind {
            kind: Kind::SpecialOrthogonal,
            dim,
        }
    }

    pub fn symplectic(dim: u32) -> Result<Self, Error> {
        GroupKind::new(Kind::Symplectic, dim)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    /// `SO(d)` orbits reduce to `O(d)` orbits for all partition-level questions.
    pub(crate) fn partition_kind(&self) -> Kind {
        match self.kind {
            Kind::SpecialOrthogonal => Kind::Orthogonal,
            k => k,
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.prefix(), self.dim)
    }
}

impl FromStr for GroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let split = s
            .find(|c: char| c.is_ascii_digit())
            .ok_or_else(|| Error::InvalidGroup(s.to_string()))?;
        let kind: Kind = s[..split].parse()?;
        let dim: u32 = s[split..]
            .parse()
            .map_err(|_| Error::InvalidGroup(s.to_string()))?;
        GroupKind::new(kind, dim)
    }
}

/// Which of the two `SO(d)` orbits a very even partition refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    I,
    II,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Label::I => "I",
            Label::II => "II",
        })
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "I" => Ok(Label::I),
            "II" => Ok(Label::II),
            _ => Err(Error::InvalidLabel(s.to_string())),
        }
    }
}

/// Membership of `λ` in `P(G)`.
pub fn is_valid_partition(group: GroupKind, lambda: &Partition) -> Result<bool, Error> {
    if lambda.weight() != group.dim {
        return Err(Error::UnequalWeight {
            left: lambda.weight(),
            right: group.dim,
        });
    }
    Ok(satisfies_parity(group.partition_kind(), lambda))
}

fn satisfies_parity(kind: Kind, lambda: &Partition) -> bool {
    let restricted_parity = match kind {
        Kind::TypeA => return true,
        Kind::Orthogonal | Kind::SpecialOrthogonal => 0,
        Kind::Symplectic => 1,
    };
    lambda
        .multiplicities()
        .into_iter()
        .all(|(p, m)| p % 2 != restricted_parity || m % 2 == 0)
}

/// Only even parts.
pub fn is_very_even(lambda: &Partition) -> bool {
    lambda.all_parts_even()
}

/// `P(G)` in lexicographically decreasing order.
pub fn valid_partitions(group: GroupKind, cap: Cap) -> Result<Vec<Partition>, Error> {
    let kind = group.partition_kind();
    Ok(enumerate_partitions(group.dim, cap)?
        .into_iter()
        .filter(|p| satisfies_parity(kind, p))
        .collect())
}

fn needs_label(group: GroupKind, lambda: &Partition) -> bool {
    group.kind == Kind::SpecialOrthogonal && !lambda.is_empty() && is_very_even(lambda)
}

/// A single nilpotent orbit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Orbit {
    group: GroupKind,
    partition: Partition,
    label: Option<Label>,
}

impl Orbit {
    /// Checks weight, parity and that a label is given exactly for very even
    /// `SO` partitions.
    pub fn new(
        group: GroupKind,
        partition: Partition,
        label: Option<Label>,
    ) -> Result<Self, Error> {
        if !is_valid_partition(group, &partition)? {
            return Err(Error::InvalidPartition {
                group,
                partition: partition.to_string(),
            });
        }
        match (needs_label(group, &partition), label) {
            (true, None) => Err(Error::InvalidLabel(format!(
                "very even orbit {group}:{partition} needs label I or II"
            ))),
            (false, Some(_)) => Err(Error::InvalidLabel(format!(
                "{group}:{partition} takes no label"
            ))),
            _ => Ok(Orbit {
                group,
                partition,
                label,
            }),
        }
    }

    pub fn group(&self) -> GroupKind {
        self.group
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn label(&self) -> Option<Label> {
        self.label
    }

    /// Rank of any matrix in the orbit: `d - length(λ)`.
    pub fn rank(&self) -> u32 {
        self.group.dim - self.partition.len() as u32
    }

    /// Order of nilpotence: `λ_1`.
    pub fn depth(&self) -> u32 {
        self.partition.largest()
    }
}

impl fmt::Display for Orbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.group, self.partition)?;
        if let Some(l) = self.label {
            write!(f, ":{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Orbit {
    type Err = Error;

    /// `"O11:7,3,1"`, `"SO4:2,2:I"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut fields = s.split(':');
        let group: GroupKind = fields.next().unwrap_or_default().parse()?;
        let partition: Partition = fields
            .next()
            .ok_or_else(|| Error::Parse(s.to_string()))?
            .parse()?;
        let label = fields.next().map(str::parse).transpose()?;
        if fields.next().is_some() {
            return Err(Error::Parse(s.to_string()));
        }
        Orbit::new(group, partition, label)
    }
}

/// Every orbit of `group`; very even `SO` partitions appear twice.
pub fn orbits_of(group: GroupKind, cap: Cap) -> Result<Vec<Orbit>, Error> {
    let mut out = Vec::new();
    for partition in valid_partitions(group, cap)? {
        if needs_label(group, &partition) {
            for label in [Label::I, Label::II] {
                out.push(Orbit {
                    group,
                    partition: partition.clone(),
                    label: Some(label),
                });
            }
        } else {
            out.push(Orbit {
                group,
                partition,
                label: None,
            });
        }
    }
    Ok(out)
}

/// Closure order: `a ≤ b` iff `a` lies in the closure of `b`.
pub fn closure_leq(a: &Orbit, b: &Orbit) -> Result<bool, Error> {
    if a.group != b.group {
        return Err(Error::GroupMismatch(a.group, b.group));
    }
    match (a.label, b.label) {
        (Some(la), Some(lb)) if a.partition == b.partition => Ok(la == lb),
        (Some(_), Some(_)) => Err(Error::LabelOrderUndefined(a.to_string(), b.to_string())),
        _ => Ok(a.partition.dominated_by(&b.partition)),
    }
}

/// The maximal element of `P(G)`: `(d-1,1)` for even orthogonal groups,
/// `(d)` otherwise.
pub fn principal_partition(group: GroupKind) -> Partition {
    let d = group.dim;
    if group.partition_kind() == Kind::Orthogonal && d.is_multiple_of(2) && d > 0 {
        Partition::from_unsorted([d - 1, 1])
    } else {
        Partition::single(d)
    }
}

/// A union of orbit closures, stored as the antichain of its maximal orbits.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrbitSet {
    group: GroupKind,
    maximal: Vec<Orbit>,
}

impl OrbitSet {
    /// Keeps only the maximal orbits. Orbits from another group are rejected.
    pub fn new<I: IntoIterator<Item = Orbit>>(group: GroupKind, orbits: I) -> Result<Self, Error> {
        let mut all: Vec<Orbit> = Vec::new();
        for o in orbits {
            if o.group != group {
                return Err(Error::GroupMismatch(group, o.group));
            }
            all.push(o);
        }
        all.sort();
        all.dedup();
        let mut maximal = Vec::new();
        for (i, o) in all.iter().enumerate() {
            let mut dominated = false;
            for (j, other) in all.iter().enumerate() {
                if i != j && closure_leq(o, other)? {
                    dominated = true;
                    break;
                }
            }
            if !dominated {
                maximal.push(o.clone());
            }
        }
        // largest first
        maximal.reverse();
        Ok(OrbitSet { group, maximal })
    }

    pub fn empty(group: GroupKind) -> Self {
        OrbitSet {
            group,
            maximal: Vec::new(),
        }
    }

    pub fn group(&self) -> GroupKind {
        self.group
    }

    pub fn maximal(&self) -> &[Orbit] {
        &self.maximal
    }

    pub fn is_empty(&self) -> bool {
        self.maximal.is_empty()
    }

    /// Whether `o` lies in the union of closures.
    pub fn contains(&self, o: &Orbit) -> Result<bool, Error> {
        for m in &self.maximal {
            if closure_leq(o, m)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    pub fn canonicalize(&self) -> Result<Self, Error> {
        OrbitSet::new(self.group, self.maximal.iter().cloned())
    }
}

impl fmt::Display for OrbitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.maximal.iter().map(|o| o.to_string()).collect();
        write!(f, "{{{}}}", names.join(" "))
    }
}

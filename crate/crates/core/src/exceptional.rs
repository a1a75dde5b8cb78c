//! Related orbits: orbits whose closures contain the same PL orbits.
//!
//! For the classical groups an orbit is determined by its PL set. For the
//! exceptional groups it is not, and [`embedded_related_table`] lists every
//! class of related orbits. The closure diagrams themselves are not embedded;
//! a [`LabeledPoset`] built from external Bala–Carter data can be checked
//! against the table with [`check_against_table`].
//!
//! Orbit names use Bala–Carter labels in ASCII, with `A~1` for `Ã1`.

use alloc::borrow::ToOwned;
use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::orbit::{closure_leq, orbits_of};
use crate::partition::Cap;
use crate::pl::is_pl;
use crate::{Error, GroupKind};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PosetError {
    #[error("orbit {0:?} declared twice")]
    DuplicateNode(String),

    #[error("cover {0} < {1} declared twice")]
    DuplicateCover(String, String),

    #[error("unknown orbit {0:?}")]
    UnknownNode(String),

    #[error("covers contain a cycle through {0:?}")]
    CycleDetected(String),

    #[error(
        "related classes of {group} differ from the table: expected {expected}, found {found}"
    )]
    TableMismatch {
        group: String,
        expected: String,
        found: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Node {
    pub name: String,
    pub special: bool,
    pub pl: bool,
}

/// A finite poset of orbits with `special` and `pl` flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledPoset {
    name: String,
    nodes: Vec<Node>,
    hasse: Vec<(usize, usize)>,
    // leq[i][j] <=> node i ≤ node j
    leq: Vec<Vec<bool>>,
}

#[derive(Debug, Clone, Default)]
pub struct PosetBuilder {
    name: String,
    nodes: Vec<Node>,
    index: BTreeMap<String, usize>,
    covers: BTreeSet<(usize, usize)>,
}

impl PosetBuilder {
    pub fn new(name: &str) -> Self {
        PosetBuilder {
            name: name.to_owned(),
            ..Default::default()
        }
    }

    pub fn set_name(&mut self, name: &str) {
        self.name = name.to_owned();
    }

    pub fn add_node(&mut self, name: &str, special: bool, pl: bool) -> Result<(), PosetError> {
        if self.index.contains_key(name) {
            return Err(PosetError::DuplicateNode(name.to_owned()));
        }
        self.index.insert(name.to_owned(), self.nodes.len());
        self.nodes.push(Node {
            name: name.to_owned(),
            special,
            pl,
        });
        Ok(())
    }

    pub fn add_cover(&mut self, lower: &str, upper: &str) -> Result<(), PosetError> {
        let find = |n: &str| {
            self.index
                .get(n)
                .copied()
                .ok_or_else(|| PosetError::UnknownNode(n.to_owned()))
        };
        let (a, b) = (find(lower)?, find(upper)?);
        if a == b {
            return Err(PosetError::CycleDetected(lower.to_owned()));
        }
        if !self.covers.insert((a, b)) {
            return Err(PosetError::DuplicateCover(
                lower.to_owned(),
                upper.to_owned(),
            ));
        }
        Ok(())
    }

    /// Checks acyclicity, then computes the order and its transitive
    /// reduction.
    pub fn build(self) -> Result<LabeledPoset, PosetError> {
        let n = self.nodes.len();
        let mut up: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut indegree = vec![0usize; n];
        for &(a, b) in &self.covers {
            up[a].push(b);
            indegree[b] += 1;
        }
        let mut queue: VecDeque<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(i) = queue.pop_front() {
            topo.push(i);
            for &j in &up[i] {
                indegree[j] -= 1;
                if indegree[j] == 0 {
                    queue.push_back(j);
                }
            }
        }
        if topo.len() < n {
            let stuck = (0..n).find(|&i| indegree[i] > 0).unwrap();
            return Err(PosetError::CycleDetected(self.nodes[stuck].name.clone()));
        }
        let mut leq = vec![vec![false; n]; n];
        for &i in topo.iter().rev() {
            leq[i][i] = true;
            for &j in &up[i] {
                let above = leq[j].clone();
                for (x, y) in leq[i].iter_mut().zip(above) {
                    *x |= y;
                }
            }
        }
        Ok(LabeledPoset {
            name: self.name,
            hasse: transitive_reduction(&leq),
            nodes: self.nodes,
            leq,
        })
    }
}

/// Cover pairs `(a, b)`: `a < b` with nothing strictly between.
fn transitive_reduction(leq: &[Vec<bool>]) -> Vec<(usize, usize)> {
    let n = leq.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a == b || !leq[a][b] {
                continue;
            }
            let between = (0..n).any(|c| c != a && c != b && leq[a][c] && leq[c][b]);
            if !between {
                out.push((a, b));
            }
        }
    }
    out
}

impl LabeledPoset {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    /// Hasse diagram edges as `(lower, upper)` node indices.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.hasse
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n.name == name)
    }

    /// The orbit poset of a classical group under the closure order, with
    /// nodes named by partition (and `:I`/`:II` for split `SO` orbits).
    /// Specialness is not computed; every node has `special = false`.
    pub fn from_classical_group(group: GroupKind, cap: Cap) -> Result<LabeledPoset, Error> {
        let orbits = orbits_of(group, cap)?;
        let n = orbits.len();
        let mut leq = vec![vec![false; n]; n];
        for a in 0..n {
            for b in 0..n {
                leq[a][b] = closure_leq(&orbits[a], &orbits[b])?;
            }
        }
        let mut nodes = Vec::with_capacity(n);
        for o in &orbits {
            let mut name = o.partition().to_string();
            if let Some(l) = o.label() {
                name = alloc::format!("{name}:{l}");
            }
            nodes.push(Node {
                name,
                special: false,
                pl: is_pl(group, o.partition())?,
            });
        }
        Ok(LabeledPoset {
            name: group.to_string(),
            hasse: transitive_reduction(&leq),
            nodes,
            leq,
        })
    }

    /// Nodes whose `pl` flag disagrees with "the Bala–Carter label has no
    /// parenthesis". Only meaningful for exceptional groups.
    pub fn pl_flag_mismatches(&self) -> Vec<&str> {
        self.nodes
            .iter()
            .filter(|n| n.pl != !n.name.contains('('))
            .map(|n| n.name.as_str())
            .collect()
    }

    fn pl_index_sets(&self) -> Vec<BTreeSet<usize>> {
        let n = self.nodes.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .filter(|&j| self.nodes[j].pl && self.leq[j][i])
                    .collect()
            })
            .collect()
    }

    /// For every node, the pl-flagged nodes below or equal to it.
    pub fn pl_sets_of(&self) -> BTreeMap<String, BTreeSet<String>> {
        self.pl_index_sets()
            .into_iter()
            .enumerate()
            .map(|(i, set)| {
                let names = set
                    .into_iter()
                    .map(|j| self.nodes[j].name.clone())
                    .collect();
                (self.nodes[i].name.clone(), names)
            })
            .collect()
    }

    /// Classes of at least two nodes with equal PL sets, ordered by their
    /// first node in declaration order.
    pub fn related_classes(&self) -> Vec<RelatedClass> {
        let mut by_set: BTreeMap<BTreeSet<usize>, Vec<usize>> = BTreeMap::new();
        for (i, set) in self.pl_index_sets().into_iter().enumerate() {
            by_set.entry(set).or_default().push(i);
        }
        let mut classes: Vec<Vec<usize>> = by_set.into_values().filter(|c| c.len() >= 2).collect();
        classes.sort();
        classes
            .into_iter()
            .map(|c| RelatedClass {
                group: self.name.clone(),
                orbits: c
                    .into_iter()
                    .map(|i| ClassMember {
                        name: self.nodes[i].name.clone(),
                        special: self.nodes[i].special,
                    })
                    .collect(),
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassMember {
    pub name: String,
    pub special: bool,
}

/// Orbits of one group sharing a PL set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RelatedClass {
    pub group: String,
    pub orbits: Vec<ClassMember>,
}

impl RelatedClass {
    fn key(&self) -> BTreeSet<ClassMember> {
        self.orbits.iter().cloned().collect()
    }
}

impl fmt::Display for RelatedClass {
    /// Special orbits are marked with `*`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.group)?;
        for (i, m) in self.orbits.iter().enumerate() {
            f.write_str(if i == 0 { " " } else { ", " })?;
            f.write_str(&m.name)?;
            if m.special {
                f.write_str("*")?;
            }
        }
        Ok(())
    }
}

pub const EXCEPTIONAL_GROUPS: [&str; 5] = ["G2", "F4", "E6", "E7", "E8"];

// (group, [(orbit, special)])
const RELATED_TABLE: &[(&str, &[(&str, bool)])] = &[
    ("E6", &[("E6(a1)", true), ("D5", true)]),
    ("E6", &[("D4(a1)", true), ("A3+A1", false)]),
    ("E7", &[("E7(a1)", true), ("E7(a2)", true)]),
    ("E7", &[("E7(a3)", true), ("D6", false)]),
    ("E7", &[("E6(a1)", true), ("E7(a4)", true)]),
    ("F4", &[("F4(a1)", true), ("F4(a2)", true)]),
    ("F4", &[("F4(a3)", true), ("C3(a1)", false)]),
    ("G2", &[("G2(a1)", true), ("A~1", false)]),
    (
        "E8",
        &[("E8(a1)", true), ("E8(a2)", true), ("E8(a3)", true)],
    ),
    (
        "E8",
        &[("E8(a4)", true), ("E8(b4)", true), ("E8(a5)", true)],
    ),
    (
        "E8",
        &[("E7(a1)", true), ("E8(b5)", true), ("E7(a2)", false)],
    ),
    ("E8", &[("E8(a6)", true), ("D7(a1)", true)]),
    ("E8", &[("E6(a1)", true), ("E7(a4)", true)]),
    (
        "E8",
        &[
            ("E8(a7)", true),
            ("E7(a5)", false),
            ("E6(a3)+A1", false),
            ("D6(a2)", false),
        ],
    ),
];

/// The complete list of related orbits of the exceptional groups.
pub fn embedded_related_table() -> Vec<RelatedClass> {
    RELATED_TABLE
        .iter()
        .map(|(group, orbits)| RelatedClass {
            group: (*group).to_owned(),
            orbits: orbits
                .iter()
                .map(|&(name, special)| ClassMember {
                    name: name.to_owned(),
                    special,
                })
                .collect(),
        })
        .collect()
}

/// Table rows for one group.
pub fn related_table_for(group: &str) -> Vec<RelatedClass> {
    embedded_related_table()
        .into_iter()
        .filter(|c| c.group == group)
        .collect()
}

/// Related classes of an ingested poset. If the poset names an exceptional
/// group, the classes (names and special flags) must match the table, and
/// the table rows are returned.
pub fn check_against_table(poset: &LabeledPoset) -> Result<Vec<RelatedClass>, PosetError> {
    let found = poset.related_classes();
    if !EXCEPTIONAL_GROUPS.contains(&poset.name()) {
        return Ok(found);
    }
    let expected = related_table_for(poset.name());
    let keys = |cs: &[RelatedClass]| -> BTreeSet<BTreeSet<ClassMember>> {
        cs.iter().map(RelatedClass::key).collect()
    };
    if keys(&found) != keys(&expected) {
        let show = |cs: &[RelatedClass]| {
            cs.iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join("; ")
        };
        return Err(PosetError::TableMismatch {
            group: poset.name().to_owned(),
            expected: show(&expected),
            found: show(&found),
        });
    }
    Ok(expected)
}

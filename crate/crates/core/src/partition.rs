//! Integer partitions and the dominance order.
//!
//! A [`Partition`] is a weakly decreasing sequence of positive integers.
//! Zero parts are never stored: `(3,1,0,0)` and `(3,1)` are the same value.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::Error;

/// Upper bound on the weight `n` for which exhaustive enumeration is allowed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cap(pub u32);

impl Cap {
    pub const DEFAULT: Cap = Cap(40);

    pub fn check(self, n: u32) -> Result<(), Error> {
        if n > self.0 {
            Err(Error::CapExceeded {
                requested: n,
                cap: self.0,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Cap {
    fn default() -> Self {
        Cap::DEFAULT
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
    n: u32,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// dropped; any other zero or increase is rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self, Error> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotDecreasing);
        }
        let n = parts.iter().sum();
        Ok(Partition { parts, n })
    }

    /// Sorts the parts into decreasing order and drops zeros.
    pub fn from_unsorted<I: IntoIterator<Item = u32>>(parts: I) -> Self {
        let mut parts: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let n = parts.iter().sum();
        Partition { parts, n }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The partition `(1,1,...,1)` of `n`.
    pub fn ones(n: u32) -> Self {
        Partition {
            parts: vec![1; n as usize],
            n,
        }
    }

    /// The one-part partition `(n)`, or `()` when `n == 0`.
    pub fn single(n: u32) -> Self {
        Partition::from_unsorted([n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The sum of the parts.
    pub fn weight(&self) -> u32 {
        self.n
    }

    /// Number of (nonzero) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, `0` for the empty partition.
    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// The `i`-th part counting from 1, zero-padded past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Conjugate partition: `(λ^t)_i` is the number of parts `>= i`.
    pub fn transpose(&self) -> Partition {
        let parts: Vec<u32> = (1..=self.largest())
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count() as u32)
            .collect();
        Partition { parts, n: self.n }
    }

    /// `λ_1 + ... + λ_k`, treating missing parts as zero.
    pub fn prefix_sum(&self, k: usize) -> u32 {
        self.parts.iter().take(k).sum()
    }

    /// Dominance order: every prefix sum of `self` is at most the
    /// corresponding prefix sum of `other`.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool, Error> {
        if self.n != other.n {
            return Err(Error::UnequalWeight {
                left: self.n,
                right: other.n,
            });
        }
        Ok(self.dominated_by(other))
    }

    // Caller guarantees equal weight.
    pub(crate) fn dominated_by(&self, other: &Partition) -> bool {
        let (mut a, mut b) = (0u32, 0u32);
        for i in 0..self.parts.len().max(other.parts.len()) {
            a += self.parts.get(i).copied().unwrap_or(0);
            b += other.parts.get(i).copied().unwrap_or(0);
            if a > b {
                return false;
            }
        }
        true
    }

    /// Number of parts equal to `p`.
    pub fn multiplicity(&self, p: u32) -> usize {
        self.parts.iter().filter(|&&q| q == p).count()
    }

    /// The multiset union `self ∪ {k}`. Inserting zero is a no-op.
    pub fn insert_part(&self, k: u32) -> Partition {
        if k == 0 {
            return self.clone();
        }
        let at = self.parts.partition_point(|&p| p >= k);
        let mut parts = self.parts.clone();
        parts.insert(at, k);
        Partition {
            parts,
            n: self.n + k,
        }
    }

    /// Distinct part sizes with their multiplicities, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// True if every part is even.
    pub fn all_parts_even(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"7,3,1"`; `"-"` is the empty partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "-" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let p: u32 = tok
                .trim()
                .parse()
                .map_err(|_| Error::Parse(s.to_string()))?;
            if p == 0 {
                return Err(Error::Parse(s.to_string()));
            }
            parts.push(p);
        }
        Partition::new(parts).map_err(|_| Error::Parse(String::from(s)))
    }
}

/// All partitions of `n` in lexicographically decreasing order.
pub fn enumerate_partitions(n: u32, cap: Cap) -> Result<Vec<Partition>, Error> {
    cap.check(n)?;
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fill(n, n, &mut stack, &mut out);
    Ok(out)
}

fn fill(rest: u32, max: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition {
            parts: stack.clone(),
            n: stack.iter().sum(),
        });
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        stack.push(p);
        fill(rest - p, p, stack, out);
        stack.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p("3,1").transpose(), p("2,1,1"));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(p("5").transpose(), Partition::ones(5));
    }

    #[test]
    fn dominance_examples() {
        assert!(p("1,1,1").dominance_leq(&p("3")).unwrap());
        assert!(p("2,2").dominance_leq(&p("3,1")).unwrap());
        assert!(!p("3,1").dominance_leq(&p("2,2")).unwrap());
        assert_eq!(
            p("3,1").dominance_leq(&p("3")),
            Err(Error::UnequalWeight { left: 4, right: 3 })
        );
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(p("5,5,1").multiplicity(5), 2);
        assert_eq!(p("5,5,1").multiplicity(2), 0);
        assert_eq!(p("7,2,2").multiplicity(2), 2);
    }

    #[test]
    fn insert_examples() {
        assert_eq!(p("5,1").insert_part(3), p("5,3,1"));
        assert_eq!(Partition::empty().insert_part(4), p("4"));
        assert_eq!(p("3,3").insert_part(3), p("3,3,3"));
    }

    #[test]
    fn prefix_sum_examples() {
        assert_eq!(p("7,3,1").prefix_sum(2), 10);
        assert_eq!(p("7,3,1").prefix_sum(0), 0);
        assert_eq!(p("7,3,1").prefix_sum(5), 11);
    }

    #[test]
    fn enumeration_small() {
        let got = enumerate_partitions(4, Cap::DEFAULT).unwrap();
        let want: Vec<Partition> = ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]
            .iter()
            .map(|s| p(s))
            .collect();
        assert_eq!(got, want);
        assert_eq!(
            enumerate_partitions(0, Cap::DEFAULT).unwrap(),
            vec![Partition::empty()]
        );
        assert_eq!(
            enumerate_partitions(41, Cap::DEFAULT),
            Err(Error::CapExceeded {
                requested: 41,
                cap: 40
            })
        );
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("7,3,1").to_string(), "7,3,1");
        assert_eq!(Partition::empty().to_string(), "-");
        assert!("3,,1".parse::<Partition>().is_err());
        assert!("1,3".parse::<Partition>().is_err());
        assert!("3,0".parse::<Partition>().is_err());
        assert!("".parse::<Partition>().is_err());
    }

    #[test]
    fn new_drops_trailing_zeros() {
        assert_eq!(Partition::new(vec![3, 1, 0, 0]).unwrap(), p("3,1"));
        assert_eq!(Partition::new(vec![3, 0, 1]), Err(Error::NotDecreasing));
    }
}

//! Partitions, multiplicities and the membership predicates used throughout
//! the crate.
//!
//! A [`Partition`] is stored zero-stripped and weakly decreasing. Formulas
//! that index past the last part read a virtual zero (see [`Partition::part`]).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Default cap on the size `N` accepted by [`enumerate_partitions`].
pub const DEFAULT_ENUMERATION_BOUND: u32 = 40;

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// The empty partition.
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition from parts that are already weakly decreasing.
    /// Trailing zeros are stripped; any other zero or an increase is rejected.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::BadInput(format!(
                "partition {parts:?} has an interior zero"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::BadInput(format!(
                "partition {parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    /// Sorts an arbitrary multiset of entries into a partition, dropping zeros.
    pub fn from_multiset<I: IntoIterator<Item = u32>>(entries: I) -> Self {
        let mut parts: Vec<u32> = entries.into_iter().filter(|&x| x > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    /// Number of parts, `τ_p`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the parts, `|p|`.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The `i`-th part, 0-based, with virtual zero padding.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn multiplicity(&self, j: u32) -> usize {
        multiplicity(self, j)
    }

    /// Distinct part values with their multiplicities, largest value first.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &x in &self.0 {
            match out.last_mut() {
                Some((v, m)) if *v == x => *m += 1,
                _ => out.push((x, 1)),
            }
        }
        out
    }

    /// Multiset union of two partitions.
    pub fn union(&self, other: &Partition) -> Partition {
        Partition::from_multiset(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::BadInput(format!("bad partition entry {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(Error::BadInput(format!("partition {s:?} contains a zero")));
        }
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

/// `μ_j(p)`: the number of parts equal to `j`.
pub fn multiplicity(p: &Partition, j: u32) -> usize {
    p.0.iter().filter(|&&x| x == j).count()
}

/// Even length and `p_1 = p_2, p_3 = p_4, ...`.
pub fn in_p_tilde(p: &Partition) -> bool {
    p.len().is_multiple_of(2) && p.0.chunks(2).all(|c| c[0] == c[1])
}

/// All parts even; for `kappa = 0` additionally an even number of parts.
pub fn in_s_kappa(r: &Partition, kappa: u8) -> bool {
    r.0.iter().all(|x| x % 2 == 0) && (kappa == 1 || r.len().is_multiple_of(2))
}

/// Partitions of `two_n` in which every odd part has even multiplicity.
pub fn in_t(c: &Partition, two_n: u32) -> bool {
    c.size() == two_n
        && c.multiplicities()
            .iter()
            .all(|&(v, m)| v % 2 == 0 || m % 2 == 0)
}

/// Partitions of `size` in which every even part has even multiplicity.
pub fn in_q(c: &Partition, size: u32) -> bool {
    c.size() == size && is_q_shaped(c)
}

fn is_q_shaped(c: &Partition) -> bool {
    c.multiplicities()
        .iter()
        .all(|&(v, m)| v % 2 == 1 || m % 2 == 0)
}

/// Membership in the set of corrected partitions reached by [`crate::classical_maps::xi`].
///
/// Requires every even part to have even multiplicity; fails with
/// [`Error::NotInQ`] otherwise.
pub fn in_r(r: &Partition) -> Result<bool> {
    if !is_q_shaped(r) {
        return Err(Error::NotInQ(r.to_string()));
    }
    let tau = r.len();
    if tau == 0 {
        return Ok(true);
    }
    if r.part(0).is_multiple_of(2) {
        return Ok(false);
    }
    if tau.is_multiple_of(2) && r.part(tau - 1).is_multiple_of(2) {
        return Ok(false);
    }
    let odd: Vec<u32> = r.iter().filter(|x| x % 2 == 1).collect();
    // 1-based u in [1, s-1] compares odd[u-1] with odd[u].
    for u in 1..odd.len() {
        let (hi, lo) = (odd[u - 1], odd[u]);
        if u % 2 == 1 {
            if hi <= lo {
                return Ok(false);
            }
        } else if r.iter().any(|x| hi > x && x > lo) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every partition of `n` accepted by `filter`, lexicographically decreasing.
pub fn enumerate_partitions<F>(n: u32, filter: F) -> Result<Vec<Partition>>
where
    F: Fn(&Partition) -> bool,
{
    enumerate_partitions_bounded(n, DEFAULT_ENUMERATION_BOUND, filter)
}

/// As [`enumerate_partitions`] with an explicit bound on `n`.
pub fn enumerate_partitions_bounded<F>(n: u32, bound: u32, filter: F) -> Result<Vec<Partition>>
where
    F: Fn(&Partition) -> bool,
{
    if n > bound {
        return Err(Error::BoundExceeded {
            requested: n,
            bound,
        });
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fill_partitions(n, n, &mut stack, &mut |parts: &[u32]| {
        let p = Partition(parts.to_vec());
        if filter(&p) {
            out.push(p);
        }
    });
    Ok(out)
}

/// Calls `visit` on every partition of `remaining` with parts `<= max_part`,
/// appended to `stack`, in lexicographically decreasing order.
pub(crate) fn fill_partitions(
    remaining: u32,
    max_part: u32,
    stack: &mut Vec<u32>,
    visit: &mut dyn FnMut(&[u32]),
) {
    if remaining == 0 {
        visit(stack);
        return;
    }
    for first in (1..=max_part.min(remaining)).rev() {
        stack.push(first);
        fill_partitions(remaining - first, first, stack, visit);
        stack.pop();
    }
}

/// The ε-marking attached to even parts of even multiplicity.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EpsilonMap(BTreeMap<u32, bool>);

impl EpsilonMap {
    pub fn new() -> Self {
        EpsilonMap(BTreeMap::new())
    }

    pub fn get(&self, j: u32) -> Option<bool> {
        self.0.get(&j).copied()
    }

    pub fn insert(&mut self, j: u32, value: bool) {
        self.0.insert(j, value);
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Domain keys in increasing order.
    pub fn keys(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, bool)> + '_ {
        self.0.iter().map(|(&j, &e)| (j, e))
    }

    /// `true` when the keys are exactly the even `j` with `μ_j(c)` even and positive.
    pub fn domain_matches(&self, c: &Partition) -> bool {
        let expected = epsilon_domain(c);
        self.0.len() == expected.len() && expected.iter().all(|j| self.0.contains_key(j))
    }
}

/// Even values `j` with `μ_j(c)` even and positive, decreasing.
pub fn epsilon_domain(c: &Partition) -> Vec<u32> {
    c.multiplicities()
        .into_iter()
        .filter(|&(v, m)| v % 2 == 0 && m % 2 == 0)
        .map(|(v, _)| v)
        .collect()
}

impl fmt::Display for EpsilonMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (j, e)) in self.0.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{j}:{}", u8::from(*e))?;
        }
        Ok(())
    }
}

impl FromStr for EpsilonMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut map = EpsilonMap::new();
        let s = s.trim();
        if s.is_empty() {
            return Ok(map);
        }
        for item in s.split(';') {
            let bad = || Error::BadInput(format!("bad epsilon entry {item:?}"));
            let (j, e) = item.split_once(':').ok_or_else(bad)?;
            let j: u32 = j.trim().parse().map_err(|_| bad())?;
            let e = match e.trim() {
                "0" => false,
                "1" => true,
                _ => return Err(bad()),
            };
            if map.0.insert(j, e).is_some() {
                return Err(Error::BadInput(format!("repeated epsilon key {j}")));
            }
        }
        Ok(map)
    }
}

/// A partition together with its ε-marking.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MarkedPartition {
    c: Partition,
    eps: EpsilonMap,
}

impl MarkedPartition {
    pub fn new(c: Partition, eps: EpsilonMap) -> Result<Self> {
        if !eps.domain_matches(&c) {
            return Err(Error::BadInput(format!(
                "epsilon map {{{eps}}} does not match the domain of {c}"
            )));
        }
        Ok(MarkedPartition { c, eps })
    }

    pub fn partition(&self) -> &Partition {
        &self.c
    }

    pub fn epsilon(&self) -> &EpsilonMap {
        &self.eps
    }

    /// All markings of `c`, in increasing order of the marking read as a
    /// binary word over the domain (largest `j` most significant).
    pub fn all_markings(c: &Partition) -> Vec<MarkedPartition> {
        let domain = epsilon_domain(c);
        let k = domain.len();
        (0..(1u64 << k))
            .map(|bits| {
                let mut eps = EpsilonMap::new();
                for (i, &j) in domain.iter().enumerate() {
                    eps.insert(j, bits >> (k - 1 - i) & 1 == 1);
                }
                MarkedPartition { c: c.clone(), eps }
            })
            .collect()
    }
}

/// Text form `<partition>[<epsilon map>]`, e.g. `4,4,2,2[4:0;2:1]`.
impl fmt::Display for MarkedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.c, self.eps)
    }
}

impl FromStr for MarkedPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (c, rest) = s
            .split_once('[')
            .ok_or_else(|| Error::BadInput(format!("marked partition {s:?} lacks '['")))?;
        let eps = rest
            .strip_suffix(']')
            .ok_or_else(|| Error::BadInput(format!("marked partition {s:?} lacks ']'")))?;
        MarkedPartition::new(c.parse()?, eps.parse()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn multiplicity_counts() {
        assert_eq!(multiplicity(&p(&[4, 2, 2, 1]), 2), 2);
        assert_eq!(multiplicity(&p(&[]), 5), 0);
        assert_eq!(multiplicity(&p(&[3, 3, 3]), 3), 3);
    }

    #[test]
    fn paired_partitions() {
        assert!(in_p_tilde(&p(&[3, 3, 1, 1])));
        assert!(!in_p_tilde(&p(&[3, 1, 1])));
        assert!(in_p_tilde(&p(&[])));
        assert!(!in_p_tilde(&p(&[3, 2, 2, 2])));
    }

    #[test]
    fn even_part_partitions() {
        assert!(in_s_kappa(&p(&[4, 2]), 0));
        assert!(!in_s_kappa(&p(&[4, 2, 2]), 0));
        assert!(in_s_kappa(&p(&[4, 2, 2]), 1));
        assert!(!in_s_kappa(&p(&[4, 3]), 1));
    }

    #[test]
    fn symplectic_and_orthogonal_shapes() {
        assert!(in_t(&p(&[2, 1, 1]), 4));
        assert!(!in_t(&p(&[3, 1]), 4));
        assert!(in_t(&p(&[4, 4]), 8));
        assert!(!in_t(&p(&[4, 4]), 6));
        assert!(in_q(&p(&[5, 3]), 8));
        assert!(!in_q(&p(&[4, 3, 1]), 8));
        assert!(in_q(&p(&[3, 3, 1, 1, 1]), 9));
    }

    #[test]
    fn corrected_partitions() {
        assert!(in_r(&p(&[3, 2, 2, 1])).unwrap());
        assert!(!in_r(&p(&[4, 4])).unwrap());
        assert!(in_r(&p(&[])).unwrap());
        assert!(in_r(&p(&[5, 3])).unwrap());
        // 3 = 3 at u = 1 (odd) is forbidden.
        assert!(!in_r(&p(&[3, 3])).unwrap());
        // even u = 2 gap (3, 1) contains the part 2.
        assert!(!in_r(&p(&[5, 3, 2, 2, 1])).unwrap());
        assert!(matches!(in_r(&p(&[4, 3, 1])), Err(Error::NotInQ(_))));
    }

    #[test]
    fn enumeration_order_and_filters() {
        let all = enumerate_partitions(4, |_| true).unwrap();
        let texts: Vec<String> = all.iter().map(|x| x.to_string()).collect();
        assert_eq!(texts, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
        let t4 = enumerate_partitions(4, |c| in_t(c, 4)).unwrap();
        assert_eq!(
            t4,
            vec![p(&[4]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        assert_eq!(enumerate_partitions(0, |_| true).unwrap(), vec![p(&[])]);
        // By hand: of the 7 partitions of 5, (4,1), (3,2), (2,1,1,1) carry an
        // even part of odd multiplicity.
        let q5 = enumerate_partitions(5, |c| in_q(c, 5)).unwrap();
        assert_eq!(
            q5,
            vec![p(&[5]), p(&[3, 1, 1]), p(&[2, 2, 1]), p(&[1, 1, 1, 1, 1])]
        );
        assert!(matches!(
            enumerate_partitions(41, |_| true),
            Err(Error::BoundExceeded {
                requested: 41,
                bound: 40
            })
        ));
    }

    #[test]
    fn text_forms() {
        assert_eq!(p(&[4, 2, 2]).to_string(), "4,2,2");
        assert_eq!(p(&[]).to_string(), "");
        assert_eq!("".parse::<Partition>().unwrap(), p(&[]));
        assert!("2,3".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        let m: MarkedPartition = "4,4,2,2[4:0;2:1]".parse().unwrap();
        assert_eq!(m.epsilon().get(2), Some(true));
        assert_eq!(m.to_string(), "4,4,2,2[4:0;2:1]");
        assert!("2,2,2[2:1]".parse::<MarkedPartition>().is_err());
        assert!("4,4[]".parse::<MarkedPartition>().is_err());
    }

    #[test]
    fn markings_cover_domain() {
        let c = p(&[4, 4, 2, 2, 1, 1]);
        let all = MarkedPartition::all_markings(&c);
        assert_eq!(all.len(), 4);
        assert_eq!(all[1].to_string(), "4,4,2,2,1,1[4:0;2:1]");
        assert_eq!(MarkedPartition::all_markings(&p(&[2, 2, 2])).len(), 1);
    }
}

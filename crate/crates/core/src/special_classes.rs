//! Special conjugacy classes and their labels by special representations.
//!
//! Classical types go through pair sequences. A pair sequence is a
//! partition read two entries at a time, stored as `(larger, smaller)`
//! pairs. Type D pairs also carry a flag `e`. The maps [`h`] (types B, C) and [`k`]
//! (type D) send them to the bipartitions labelling special representations.
//!
//! | family | pair sequences | bipartitions           | class map                |
//! |--------|----------------|------------------------|--------------------------|
//! | B, C   | A              | A′: `y_{i+1} ≤ z_i ≤ y_i+1` | even entries to `r`  |
//! | D      | C (C₀ ⊂ C)     | C′: `y_{i+1}−1 ≤ z_i ≤ y_i` (C′₀: `y = z`) | `e = 1` pairs to `r` |
//!
//! Text forms: `4,4|2,0` for types B and C, `4,4:1|2,2:0` for type D, and
//! `y=2,1;z=1` for bipartitions.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::exceptional_tables::{records, sha256_hex};
use crate::partitions::{enumerate_partitions, Partition};
use crate::weyl_classes::{CarterLabel, ClassSymbol, ClassicalPair, Family, GroupContext};

/// Largest rank accepted by the pair-sequence and bipartition generators.
pub const SPECIAL_RANK_BOUND: u32 = 30;

fn parse_error(text: &str, msg: &str) -> Error {
    Error::Parse {
        text: text.to_string(),
        pos: 0,
        msg: msg.to_string(),
    }
}

fn parse_u32(text: &str, item: &str) -> Result<u32> {
    item.trim()
        .parse()
        .map_err(|_| parse_error(text, &format!("bad number {item:?}")))
}

/// Pairs `(a, b)` with `a ≥ b`, decreasing when concatenated. A pair with
/// `b = 0` can only be last.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairSequenceBC {
    pairs: Vec<(u32, u32)>,
}

impl PairSequenceBC {
    pub fn new(pairs: Vec<(u32, u32)>) -> Result<Self> {
        let flat: Vec<u32> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        let ordered = flat.windows(2).all(|w| w[0] >= w[1]);
        if !ordered || pairs.iter().any(|&(a, _)| a == 0) {
            return Err(Error::BadInput(format!(
                "{pairs:?} is not a decreasing pair sequence"
            )));
        }
        Ok(PairSequenceBC { pairs })
    }

    /// Reads a partition two parts at a time.
    pub fn from_partition(x: &Partition) -> Self {
        let pairs = x
            .parts()
            .chunks(2)
            .map(|c| (c[0], c.get(1).copied().unwrap_or(0)))
            .collect();
        PairSequenceBC { pairs }
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn to_partition(&self) -> Partition {
        Partition::from_multiset(self.pairs.iter().flat_map(|&(a, b)| [a, b]))
    }

    pub fn size(&self) -> u32 {
        self.pairs.iter().map(|&(a, b)| a + b).sum()
    }
}

impl fmt::Display for PairSequenceBC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (a, b)) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{a},{b}")?;
        }
        Ok(())
    }
}

impl FromStr for PairSequenceBC {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(PairSequenceBC { pairs: Vec::new() });
        }
        let pairs = s
            .split('|')
            .map(|item| match item.split_once(',') {
                Some((a, b)) => Ok((parse_u32(s, a)?, parse_u32(s, b)?)),
                None => Ok((parse_u32(s, item)?, 0)),
            })
            .collect::<Result<Vec<_>>>()?;
        PairSequenceBC::new(pairs)
    }
}

/// Pairs `(a, b, e)` with `a ≥ b`, decreasing when concatenated.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairSequenceD {
    pairs: Vec<(u32, u32, bool)>,
}

impl PairSequenceD {
    pub fn new(pairs: Vec<(u32, u32, bool)>) -> Result<Self> {
        let flat: Vec<u32> = pairs.iter().flat_map(|&(a, b, _)| [a, b]).collect();
        if !flat.windows(2).all(|w| w[0] >= w[1]) || pairs.iter().any(|&(a, _, _)| a == 0) {
            return Err(Error::BadInput(format!(
                "{pairs:?} is not a decreasing pair sequence"
            )));
        }
        Ok(PairSequenceD { pairs })
    }

    pub fn pairs(&self) -> &[(u32, u32, bool)] {
        &self.pairs
    }

    pub fn to_partition(&self) -> Partition {
        Partition::from_multiset(self.pairs.iter().flat_map(|&(a, b, _)| [a, b]))
    }

    pub fn size(&self) -> u32 {
        self.pairs.iter().map(|&(a, b, _)| a + b).sum()
    }
}

impl fmt::Display for PairSequenceD {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (a, b, e)) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{a},{b}:{}", u8::from(*e))?;
        }
        Ok(())
    }
}

impl FromStr for PairSequenceD {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(PairSequenceD { pairs: Vec::new() });
        }
        let pairs = s
            .split('|')
            .map(|item| {
                let (ab, e) = item
                    .split_once(':')
                    .ok_or_else(|| parse_error(s, "missing `:e`"))?;
                let (a, b) = ab
                    .split_once(',')
                    .ok_or_else(|| parse_error(s, "expected `a,b`"))?;
                let e = match e.trim() {
                    "0" => false,
                    "1" => true,
                    other => {
                        return Err(parse_error(
                            s,
                            &format!("flag must be 0 or 1, got {other:?}"),
                        ))
                    }
                };
                Ok((parse_u32(s, a)?, parse_u32(s, b)?, e))
            })
            .collect::<Result<Vec<_>>>()?;
        PairSequenceD::new(pairs)
    }
}

/// A pair sequence of either kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairSequence {
    BC(PairSequenceBC),
    D(PairSequenceD),
}

impl fmt::Display for PairSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairSequence::BC(x) => write!(f, "{x}"),
            PairSequence::D(x) => write!(f, "{x}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bipartition {
    pub y: Partition,
    pub z: Partition,
}

impl Bipartition {
    pub fn new(y: Partition, z: Partition) -> Self {
        Bipartition { y, z }
    }

    pub fn size(&self) -> u32 {
        self.y.size() + self.z.size()
    }

    fn slots(&self) -> usize {
        self.y.len().max(self.z.len())
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y={};z={}", self.y, self.z)
    }
}

impl FromStr for Bipartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (y, z) = s
            .split_once(';')
            .ok_or_else(|| parse_error(s, "expected `y=...;z=...`"))?;
        let y = y
            .trim()
            .strip_prefix("y=")
            .ok_or_else(|| parse_error(s, "expected `y=`"))?;
        let z = z
            .trim()
            .strip_prefix("z=")
            .ok_or_else(|| parse_error(s, "expected `z=`"))?;
        Ok(Bipartition {
            y: y.parse()?,
            z: z.parse()?,
        })
    }
}

pub fn in_a(x: &PairSequenceBC) -> bool {
    x.size().is_multiple_of(2)
        && x.pairs
            .iter()
            .all(|&(a, b)| a % 2 == b % 2 && (a % 2 == 0 || a == b))
}

pub fn in_c(x: &PairSequenceD) -> bool {
    let pairs_ok = x.pairs.iter().all(|&(a, b, e)| {
        a % 2 == b % 2 && (a % 2 == 0 || (a == b && !e)) && (a % 2 == 1 || e || a == b) && b != 0
    });
    let links_ok = x
        .pairs
        .windows(2)
        .all(|w| !(w[0].1 == w[1].0 && w[0].1 % 2 == 0 && (w[0].2 || w[1].2)));
    x.size().is_multiple_of(2) && pairs_ok && links_ok
}

pub fn in_c0(x: &PairSequenceD) -> bool {
    in_c(x) && x.pairs.iter().all(|&(a, b, e)| a == b && a % 2 == 0 && !e)
}

pub fn in_a_prime(b: &Bipartition) -> bool {
    (0..=b.slots()).all(|i| b.y.part(i + 1) <= b.z.part(i) && b.z.part(i) <= b.y.part(i) + 1)
}

pub fn in_c_prime(b: &Bipartition) -> bool {
    (0..=b.slots()).all(|i| b.y.part(i + 1) <= b.z.part(i) + 1 && b.z.part(i) <= b.y.part(i))
}

pub fn in_c0_prime(b: &Bipartition) -> bool {
    b.y == b.z
}

pub fn h(x: &PairSequenceBC) -> Result<Bipartition> {
    if !in_a(x) {
        return Err(Error::NotInA(x.to_string()));
    }
    let (y, z): (Vec<u32>, Vec<u32>) = x
        .pairs
        .iter()
        .map(|&(a, b)| {
            if a % 2 == 0 {
                (a / 2, b / 2)
            } else {
                (a / 2, a / 2 + 1)
            }
        })
        .unzip();
    Ok(Bipartition::new(
        Partition::from_multiset(y),
        Partition::from_multiset(z),
    ))
}

pub fn h_inv(bp: &Bipartition) -> Result<PairSequenceBC> {
    if !in_a_prime(bp) {
        return Err(Error::NotInAPrime(bp.to_string()));
    }
    let pairs = (0..bp.slots())
        .map(|i| {
            let (y, z) = (bp.y.part(i), bp.z.part(i));
            if z <= y {
                (2 * y, 2 * z)
            } else {
                (2 * z - 1, 2 * y + 1)
            }
        })
        .collect();
    PairSequenceBC::new(pairs)
}

pub fn k(x: &PairSequenceD) -> Result<Bipartition> {
    if !in_c(x) {
        return Err(Error::NotInC(x.to_string()));
    }
    let (y, z): (Vec<u32>, Vec<u32>) = x
        .pairs
        .iter()
        .map(|&(a, b, e)| match (a % 2, e) {
            (1, _) => (a / 2 + 1, a / 2),
            (_, false) => (a / 2, a / 2),
            (_, true) => ((a + 2) / 2, (b - 2) / 2),
        })
        .unzip();
    Ok(Bipartition::new(
        Partition::from_multiset(y),
        Partition::from_multiset(z),
    ))
}

pub fn k_inv(bp: &Bipartition) -> Result<PairSequenceD> {
    if !in_c_prime(bp) {
        return Err(Error::NotInCPrime(bp.to_string()));
    }
    let pairs = (0..bp.y.len())
        .map(|i| {
            let (y, z) = (bp.y.part(i), bp.z.part(i));
            if y == z {
                (2 * y, 2 * y, false)
            } else if y == z + 1 {
                (2 * y - 1, 2 * z + 1, false)
            } else {
                (2 * y - 2, 2 * z + 2, true)
            }
        })
        .collect();
    PairSequenceD::new(pairs)
}

fn check_rank(n: u32) -> Result<()> {
    if n > SPECIAL_RANK_BOUND {
        return Err(Error::BoundExceeded {
            requested: n,
            bound: SPECIAL_RANK_BOUND,
        });
    }
    Ok(())
}

/// All of A with entries summing to `2n`, built pair by pair.
pub fn enumerate_a(n: u32) -> Result<Vec<PairSequenceBC>> {
    fn go(rem: u32, max: u32, pairs: &mut Vec<(u32, u32)>, out: &mut Vec<PairSequenceBC>) {
        if rem == 0 {
            out.push(PairSequenceBC {
                pairs: pairs.clone(),
            });
            return;
        }
        for a in (1..=max.min(rem)).rev() {
            let options: Vec<u32> = if a % 2 == 1 {
                if 2 * a <= rem {
                    vec![a]
                } else {
                    vec![]
                }
            } else {
                (0..=a.min(rem - a))
                    .rev()
                    .filter(|b| b % 2 == 0 && (*b > 0 || rem == a))
                    .collect()
            };
            for b in options {
                pairs.push((a, b));
                go(rem - a - b, b, pairs, out);
                pairs.pop();
            }
        }
    }
    check_rank(n)?;
    let mut out = Vec::new();
    go(2 * n, 2 * n, &mut Vec::new(), &mut out);
    Ok(out)
}

/// All of C with entries summing to `2n`.
pub fn enumerate_c(n: u32) -> Result<Vec<PairSequenceD>> {
    fn go(rem: u32, max: u32, pairs: &mut Vec<(u32, u32, bool)>, out: &mut Vec<PairSequenceD>) {
        if rem == 0 {
            out.push(PairSequenceD {
                pairs: pairs.clone(),
            });
            return;
        }
        let last = pairs.last().copied();
        for a in (1..=max.min(rem)).rev() {
            let mut options = Vec::new();
            if 2 * a <= rem {
                options.push((a, false));
            }
            if a % 2 == 0 {
                options.extend(
                    (2..=a.min(rem - a))
                        .rev()
                        .filter(|b| b % 2 == 0)
                        .map(|b| (b, true)),
                );
            }
            for (b, e) in options {
                let linked = last.is_some_and(|(_, lb, le)| lb == a && a % 2 == 0 && (le || e));
                if linked {
                    continue;
                }
                pairs.push((a, b, e));
                go(rem - a - b, b, pairs, out);
                pairs.pop();
            }
        }
    }
    check_rank(n)?;
    let mut out = Vec::new();
    go(2 * n, 2 * n, &mut Vec::new(), &mut out);
    Ok(out)
}

fn bipartition_of(y: &[u32], z: &[u32]) -> Bipartition {
    Bipartition::new(
        Partition::from_multiset(y.iter().copied()),
        Partition::from_multiset(z.iter().copied()),
    )
}

/// All of A′ of total size `n`, built slot by slot.
pub fn enumerate_a_prime(n: u32) -> Result<Vec<Bipartition>> {
    fn go(
        rem: u32,
        prev: (u32, u32),
        y: &mut Vec<u32>,
        z: &mut Vec<u32>,
        out: &mut Vec<Bipartition>,
    ) {
        if rem == 0 {
            out.push(bipartition_of(y, z));
            return;
        }
        for yi in (0..=prev.0.min(prev.1).min(rem)).rev() {
            for zi in (0..=prev.1.min(yi + 1).min(rem - yi)).rev() {
                if yi + zi == 0 {
                    continue;
                }
                y.push(yi);
                z.push(zi);
                go(rem - yi - zi, (yi, zi), y, z, out);
                y.pop();
                z.pop();
            }
        }
    }
    check_rank(n)?;
    let mut out = Vec::new();
    go(n, (n, n), &mut Vec::new(), &mut Vec::new(), &mut out);
    Ok(out)
}

/// All of C′ of total size `n`.
pub fn enumerate_c_prime(n: u32) -> Result<Vec<Bipartition>> {
    fn go(
        rem: u32,
        prev: (u32, u32),
        y: &mut Vec<u32>,
        z: &mut Vec<u32>,
        out: &mut Vec<Bipartition>,
    ) {
        if rem == 0 {
            out.push(bipartition_of(y, z));
            return;
        }
        for yi in (1..=prev.0.min(prev.1.saturating_add(1)).min(rem)).rev() {
            for zi in (0..=prev.1.min(yi).min(rem - yi)).rev() {
                y.push(yi);
                z.push(zi);
                go(rem - yi - zi, (yi, zi), y, z, out);
                y.pop();
                z.pop();
            }
        }
    }
    check_rank(n)?;
    let mut out = Vec::new();
    go(n, (n, n), &mut Vec::new(), &mut Vec::new(), &mut out);
    Ok(out)
}

/// The special class attached to a pair sequence; `split` marks the type D
/// classes coming from C₀.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialImage {
    pub class: ClassSymbol,
    pub split: bool,
}

pub fn special_class_of(ctx: &GroupContext, x: &PairSequence) -> Result<SpecialImage> {
    let wrong = || Error::WrongFamily {
        expected: "B, C or D matching the pair sequence",
        got: ctx.to_string(),
    };
    let n = ctx.rank();
    let (r, p, split): (Vec<u32>, Vec<u32>, bool) = match (ctx.family(), x) {
        (Family::B | Family::C, PairSequence::BC(x)) => {
            if !in_a(x) || x.size() != 2 * n {
                return Err(Error::NotInA(x.to_string()));
            }
            let flat = x.to_partition();
            (
                flat.iter().filter(|v| v % 2 == 0).collect(),
                flat.iter().filter(|v| v % 2 == 1).collect(),
                false,
            )
        }
        (Family::D, PairSequence::D(x)) => {
            if !in_c(x) || x.size() != 2 * n {
                return Err(Error::NotInC(x.to_string()));
            }
            let (mut r, mut p) = (Vec::new(), Vec::new());
            for &(a, b, e) in &x.pairs {
                let target = if a % 2 == 0 && e { &mut r } else { &mut p };
                target.extend([a, b]);
            }
            (r, p, in_c0(x))
        }
        _ => return Err(wrong()),
    };
    let pair = ClassicalPair::new(
        Partition::from_multiset(r),
        Partition::from_multiset(p),
        ctx.kappa().ok_or_else(wrong)?,
    )?;
    Ok(SpecialImage {
        class: ClassSymbol::Classical(pair),
        split,
    })
}

/// The pair sequence behind a classical special class, if there is one.
pub fn pair_sequence_of(ctx: &GroupContext, class: &ClassSymbol) -> Option<PairSequence> {
    let pair = class.as_classical()?;
    let merged = pair.r.union(&pair.p);
    let candidate = match ctx.family() {
        Family::B | Family::C => Some(PairSequence::BC(PairSequenceBC::from_partition(&merged))),
        Family::D => d_preimage(ctx, pair, &merged),
        _ => None,
    }?;
    let image = special_class_of(ctx, &candidate).ok()?;
    (image.class == *class).then_some(candidate)
}

/// Tries every flag assignment on the equal even pairs; unequal even pairs
/// must carry `e = 1` and odd pairs `e = 0`.
fn d_preimage(
    ctx: &GroupContext,
    pair: &ClassicalPair,
    merged: &Partition,
) -> Option<PairSequence> {
    let base: Vec<(u32, u32, bool)> = merged
        .parts()
        .chunks(2)
        .map(|c| {
            let b = c.get(1).copied().unwrap_or(0);
            (c[0], b, c[0] % 2 == 0 && c[0] != b)
        })
        .collect();
    let free: Vec<usize> = (0..base.len())
        .filter(|&i| base[i].0.is_multiple_of(2) && base[i].0 == base[i].1)
        .collect();
    let target = ClassSymbol::Classical(pair.clone());
    (0u64..1 << free.len()).find_map(|mask| {
        let mut pairs = base.clone();
        for (bit, &i) in free.iter().enumerate() {
            pairs[i].2 = mask >> bit & 1 == 1;
        }
        let x = PairSequenceD { pairs };
        (in_c(&x)
            && special_class_of(ctx, &PairSequence::D(x.clone()))
                .ok()?
                .class
                == target)
            .then_some(PairSequence::D(x))
    })
}

/// The label of a special representation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum RepLabel {
    Partition(Partition),
    /// For type D, `split` marks a split class; the two representations
    /// in that case share this bipartition and are not told apart.
    Bipartition {
        label: Bipartition,
        split: bool,
    },
    Exceptional(String),
}

impl RepLabel {
    pub fn is_split(&self) -> bool {
        matches!(self, RepLabel::Bipartition { split: true, .. })
    }
}

impl fmt::Display for RepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepLabel::Partition(p) => write!(f, "{p}"),
            RepLabel::Bipartition { label, .. } => write!(f, "{label}"),
            RepLabel::Exceptional(name) => f.write_str(name),
        }
    }
}

pub fn is_special_class(ctx: &GroupContext, class: &ClassSymbol) -> bool {
    if class.validate(ctx).is_err() {
        return false;
    }
    match class {
        ClassSymbol::TypeA(_) => true,
        ClassSymbol::Classical(_) => pair_sequence_of(ctx, class).is_some(),
        ClassSymbol::Exceptional(label) => {
            load_special_table(ctx.family()).is_ok_and(|t| t.rep_of(label).is_some())
        }
    }
}

pub fn tau(ctx: &GroupContext, class: &ClassSymbol) -> Result<RepLabel> {
    let not_special = || Error::NotSpecial {
        class: class.to_string(),
        context: ctx.to_string(),
    };
    class.validate(ctx)?;
    match class {
        ClassSymbol::TypeA(p) => Ok(RepLabel::Partition(p.clone())),
        ClassSymbol::Classical(_) => match pair_sequence_of(ctx, class).ok_or_else(not_special)? {
            PairSequence::BC(x) => Ok(RepLabel::Bipartition {
                label: h(&x)?,
                split: false,
            }),
            PairSequence::D(x) => Ok(RepLabel::Bipartition {
                label: k(&x)?,
                split: in_c0(&x),
            }),
        },
        ClassSymbol::Exceptional(label) => load_special_table(ctx.family())?
            .rep_of(label)
            .map(|rep| RepLabel::Exceptional(rep.to_string()))
            .ok_or_else(not_special),
    }
}

/// Every special class of `ctx` with its label, in a fixed order.
pub fn special_classes(ctx: &GroupContext) -> Result<Vec<(SpecialImage, RepLabel)>> {
    let n = ctx.rank();
    match ctx.family() {
        Family::A => Ok(enumerate_partitions(n + 1, |_| true)?
            .into_iter()
            .map(|p| {
                (
                    SpecialImage {
                        class: ClassSymbol::TypeA(p.clone()),
                        split: false,
                    },
                    RepLabel::Partition(p),
                )
            })
            .collect()),
        Family::B | Family::C => enumerate_a(n)?
            .into_iter()
            .map(|x| {
                let image = special_class_of(ctx, &PairSequence::BC(x.clone()))?;
                Ok((
                    image,
                    RepLabel::Bipartition {
                        label: h(&x)?,
                        split: false,
                    },
                ))
            })
            .collect(),
        Family::D => enumerate_c(n)?
            .into_iter()
            .map(|x| {
                let image = special_class_of(ctx, &PairSequence::D(x.clone()))?;
                let split = image.split;
                Ok((
                    image,
                    RepLabel::Bipartition {
                        label: k(&x)?,
                        split,
                    },
                ))
            })
            .collect(),
        family => Ok(load_special_table(family)?
            .rows()
            .iter()
            .map(|row| {
                (
                    SpecialImage {
                        class: ClassSymbol::Exceptional(row.class.clone()),
                        split: false,
                    },
                    RepLabel::Exceptional(row.rep.clone()),
                )
            })
            .collect()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialRow {
    pub class: CarterLabel,
    pub rep: String,
}

/// Special classes of an exceptional Weyl group with their representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialTable {
    family: Family,
    rows: Vec<SpecialRow>,
}

impl SpecialTable {
    pub fn parse(family: Family, name: &str, text: &str) -> Result<Self> {
        let mut rows: Vec<SpecialRow> = Vec::new();
        for (line, fields) in records(text) {
            let err = |msg: String| Error::Table {
                table: name.to_string(),
                msg: format!("line {line}: {msg}"),
            };
            match fields.as_slice() {
                [("class", class), ("rep", rep)] if !rep.is_empty() => {
                    let class: CarterLabel =
                        class.parse().map_err(|e: Error| err(e.to_string()))?;
                    if rows.iter().any(|r| r.class == class || r.rep == *rep) {
                        return Err(err(format!("duplicate entry for {class}")));
                    }
                    rows.push(SpecialRow {
                        class,
                        rep: rep.to_string(),
                    });
                }
                _ => return Err(err("expected `class = ... ; rep = ...`".into())),
            }
        }
        Ok(SpecialTable { family, rows })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rows(&self) -> &[SpecialRow] {
        &self.rows
    }

    pub fn rep_of(&self, class: &CarterLabel) -> Option<&str> {
        self.rows
            .iter()
            .find(|r| r.class == *class)
            .map(|r| r.rep.as_str())
    }
}

struct SpecialSource {
    family: Family,
    name: &'static str,
    text: &'static str,
    sha256: &'static str,
}

macro_rules! special_source {
    ($family:ident, $file:literal, $sha:literal) => {
        SpecialSource {
            family: Family::$family,
            name: $file,
            text: include_str!(concat!("../data/", $file)),
            sha256: $sha,
        }
    };
}

const SPECIAL_SOURCES: [SpecialSource; 5] = [
    special_source!(
        G2,
        "g2.special.tbl",
        "b6b239b5d4387e59db30758178bcfc0763cadaa0aab428021f8ed142c7a4e16b"
    ),
    special_source!(
        F4,
        "f4.special.tbl",
        "9efeb83b1eff59f8e7a8f1ae77d48d24f44f4131c55ad03c0d29cd0f349775ac"
    ),
    special_source!(
        E6,
        "e6.special.tbl",
        "e3fe9ccf65dc473ef5ff2c00695a513c48ea677ac370eaa7b8fead5fb697c459"
    ),
    special_source!(
        E7,
        "e7.special.tbl",
        "9ce75182d3b15c30668f73c4d4d97df88bfa23ffb574375b38d6518cf45de0f5"
    ),
    special_source!(
        E8,
        "e8.special.tbl",
        "1e75ecd6a3179a2a2fdd2dda1b2325319672cc84ca6393c4e33a08c4f76f1239"
    ),
];

pub fn load_special_table(family: Family) -> Result<&'static SpecialTable> {
    static TABLES: [OnceLock<Result<SpecialTable>>; SPECIAL_SOURCES.len()] =
        [const { OnceLock::new() }; SPECIAL_SOURCES.len()];
    let index = SPECIAL_SOURCES
        .iter()
        .position(|s| s.family == family)
        .ok_or_else(|| Error::UnknownContext(format!("no special table for {family}")))?;
    TABLES[index]
        .get_or_init(|| {
            let source = &SPECIAL_SOURCES[index];
            let digest = sha256_hex(source.text);
            if digest != source.sha256 {
                return Err(Error::Table {
                    table: source.name.to_string(),
                    msg: format!("checksum mismatch: {digest}"),
                });
            }
            SpecialTable::parse(source.family, source.name, source.text)
        })
        .as_ref()
        .map_err(Clone::clone)
}
